//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! A [`Polynomial`] is stored in canonical form: terms sorted by a fixed
//! structural order with no zero coefficients, so two polynomials are equal
//! exactly when their term lists are equal. Semantic monomial comparisons
//! (for division, Groebner bases, elimination) go through [`MonomialOrder`].

mod order;
mod parse;

pub use order::{ModuleOrder, MonomialOrder};
pub use parse::parse_polynomial;

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::linalg::{positive_kernel_point, QMat};
use crate::Result;

/// Exact rational scalar used everywhere in the crate.
pub type Rat = num_rational::BigRational;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// An exponent vector. Length always equals the arity of its ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(arity: usize) -> Self {
        Monomial {
            exps: vec![0; arity],
        }
    }

    pub fn var(arity: usize, index: usize) -> Self {
        let mut exps = vec![0; arity];
        exps[index] = 1;
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Quotient `self / other`; caller must ensure divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }
}

#[derive(Debug)]
struct RingInner {
    vars: Vec<String>,
    default_order: MonomialOrder,
}

/// A named polynomial ring over the rationals.
///
/// Cloning is cheap; two rings are compatible when their variable lists agree.
#[derive(Debug, Clone)]
pub struct PolyRing {
    inner: Arc<RingInner>,
}

fn valid_ident(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    pub fn new(vars: Vec<String>, default_order: MonomialOrder) -> Result<Self> {
        for v in &vars {
            if !valid_ident(v) {
                return Err(Error::Invalid(format!("invalid variable name `{v}`")));
            }
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::Invalid(format!("duplicate variable `{v}`")));
            }
        }
        if let MonomialOrder::Weighted(w) = &default_order {
            if w.len() != vars.len() || w.contains(&0) {
                return Err(Error::Invalid(
                    "weight vector must be positive and match the arity".into(),
                ));
            }
        }
        Ok(PolyRing {
            inner: Arc::new(RingInner {
                vars,
                default_order,
            }),
        })
    }

    /// Convenience constructor with grevlex as default order.
    pub fn with_vars(vars: &[&str]) -> Self {
        PolyRing::new(
            vars.iter().map(|s| s.to_string()).collect(),
            MonomialOrder::GrevLex,
        )
        .expect("valid variable names")
    }

    pub fn vars(&self) -> &[String] {
        &self.inner.vars
    }

    pub fn arity(&self) -> usize {
        self.inner.vars.len()
    }

    pub fn default_order(&self) -> &MonomialOrder {
        &self.inner.default_order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.inner.vars.iter().position(|v| v == name)
    }

    pub fn same_ring(&self, other: &PolyRing) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.vars == other.inner.vars
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial {
            ring: self.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(&self) -> Polynomial {
        self.constant(Rat::one())
    }

    pub fn constant(&self, c: Rat) -> Polynomial {
        if c.is_zero() {
            return self.zero();
        }
        Polynomial {
            ring: self.clone(),
            terms: vec![(Monomial::one(self.arity()), c)],
        }
    }

    pub fn var(&self, index: usize) -> Polynomial {
        assert!(index < self.arity());
        Polynomial {
            ring: self.clone(),
            terms: vec![(Monomial::var(self.arity(), index), Rat::one())],
        }
    }

    pub fn var_named(&self, name: &str) -> Result<Polynomial> {
        let idx = self
            .var_index(name)
            .ok_or_else(|| Error::NoSuchVariable { name: name.into() })?;
        Ok(self.var(idx))
    }

    pub fn monomial(&self, m: Monomial, c: Rat) -> Polynomial {
        assert_eq!(m.arity(), self.arity());
        Polynomial::from_terms(self.clone(), vec![(m, c)])
    }

    pub fn parse(&self, src: &str) -> Result<Polynomial> {
        parse_polynomial(src, self)
    }
}

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other)
    }
}
impl Eq for PolyRing {}

/// The fixed structural order terms are stored in (descending). Any total
/// order works for canonicity; grevlex keeps printing natural.
fn canonical_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    MonomialOrder::GrevLex.cmp(a, b)
}

/// A sparse polynomial in canonical form.
#[derive(Debug, Clone)]
pub struct Polynomial {
    ring: PolyRing,
    /// Sorted descending under the canonical structural order; no zeros.
    terms: Vec<(Monomial, Rat)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_ring(&other.ring) && self.terms == other.terms
    }
}
impl Eq for Polynomial {}

impl Polynomial {
    /// Build from arbitrary terms: sorts, combines duplicates, drops zeros.
    pub fn from_terms(ring: PolyRing, mut terms: Vec<(Monomial, Rat)>) -> Polynomial {
        debug_assert!(terms.iter().all(|(m, _)| m.arity() == ring.arity()));
        terms.sort_unstable_by(|a, b| canonical_cmp(&b.0, &a.0));
        terms.dedup_by(|from, to| {
            if from.0 != to.0 {
                return false;
            }
            let c = std::mem::replace(&mut from.1, Rat::zero());
            to.1 += c;
            true
        });
        terms.retain(|(_, c)| !c.is_zero());
        Polynomial { ring, terms }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Rat)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rat)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn constant_term(&self) -> Rat {
        self.terms
            .iter()
            .find(|(m, _)| m.is_one())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rat::zero)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring.same_ring(&other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => {
                    let (m, c) = b.next().unwrap();
                    out.push((m.clone(), if negate { -c.clone() } else { c.clone() }));
                }
                (Some((ma, _)), Some((mb, _))) => match canonical_cmp(ma, mb) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => {
                        let (m, c) = b.next().unwrap();
                        out.push((m.clone(), if negate { -c.clone() } else { c.clone() }));
                    }
                    Ordering::Equal => {
                        let (m, ca) = a.next().unwrap();
                        let (_, cb) = b.next().unwrap();
                        let c = if negate { ca - cb } else { ca + cb };
                        if !c.is_zero() {
                            out.push((m.clone(), c));
                        }
                    }
                },
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut acc: std::collections::BTreeMap<Monomial, Rat> = Default::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.entry(m) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        if !c.is_zero() {
                            e.insert(c);
                        }
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += c;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, Rat)> = acc.into_iter().collect();
        terms.sort_unstable_by(|a, b| canonical_cmp(&b.0, &a.0));
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(mm, x)| (mm.mul(m), x * c))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = self.ring.one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base).expect("same ring");
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base).expect("same ring");
            }
        }
        result
    }

    pub fn partial_derivative(&self, var: &str) -> Result<Polynomial> {
        let idx = self
            .ring
            .var_index(var)
            .ok_or_else(|| Error::NoSuchVariable { name: var.into() })?;
        Ok(self.partial_derivative_index(idx))
    }

    pub fn partial_derivative_index(&self, idx: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponents()[idx] > 0)
            .map(|(m, c)| {
                let e = m.exponents()[idx];
                let mut exps = m.exponents().to_vec();
                exps[idx] = e - 1;
                (Monomial::new(exps), c * rat_int(e as i64))
            })
            .collect();
        Polynomial::from_terms(self.ring.clone(), terms)
    }

    pub fn evaluate(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.ring.arity() {
            return Err(Error::ArityMismatch {
                expected: self.ring.arity(),
                got: point.len(),
            });
        }
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    v *= &point[i];
                }
            }
            acc += v;
        }
        Ok(acc)
    }

    /// Substitute exact rational constants for a subset of the variables,
    /// producing a polynomial of the same ring.
    pub fn substitute_constants(&self, subs: &[(usize, Rat)]) -> Polynomial {
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let mut coef = c.clone();
            let mut exps = m.exponents().to_vec();
            for (idx, val) in subs {
                let e = exps[*idx];
                if e > 0 {
                    if val.is_zero() {
                        coef = Rat::zero();
                        break;
                    }
                    for _ in 0..e {
                        coef *= val;
                    }
                    exps[*idx] = 0;
                }
            }
            if !coef.is_zero() {
                terms.push((Monomial::new(exps), coef));
            }
        }
        Polynomial::from_terms(self.ring.clone(), terms)
    }

    /// Reinterpret in another ring along a variable map:
    /// `var_map[i]` is the index in `target` of our variable `i`.
    pub fn map_variables(&self, target: &PolyRing, var_map: &[usize]) -> Polynomial {
        assert_eq!(var_map.len(), self.ring.arity());
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u32; target.arity()];
                for (i, &e) in m.exponents().iter().enumerate() {
                    if e > 0 {
                        exps[var_map[i]] += e;
                    }
                }
                (Monomial::new(exps), c.clone())
            })
            .collect();
        Polynomial::from_terms(target.clone(), terms)
    }

    /// Move into a ring that contains every variable this polynomial
    /// actually uses; unused variables of the source ring may be absent.
    pub fn project(&self, target: &PolyRing) -> Result<Polynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; target.arity()];
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    let name = &self.ring.vars()[i];
                    let idx = target
                        .var_index(name)
                        .ok_or_else(|| Error::NoSuchVariable { name: name.clone() })?;
                    exps[idx] += e;
                }
            }
            terms.push((Monomial::new(exps), c.clone()));
        }
        Ok(Polynomial::from_terms(target.clone(), terms))
    }

    /// Move into a ring containing the same variable names (by name lookup).
    pub fn embed(&self, target: &PolyRing) -> Result<Polynomial> {
        let map: Vec<usize> = self
            .ring
            .vars()
            .iter()
            .map(|v| {
                target
                    .var_index(v)
                    .ok_or_else(|| Error::NoSuchVariable { name: v.clone() })
            })
            .collect::<Result<_>>()?;
        Ok(self.map_variables(target, &map))
    }

    pub fn leading_term<'a>(&'a self, order: &MonomialOrder) -> Option<(&'a Monomial, &'a Rat)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(&a.0, &b.0))
            .map(|(m, c)| (m, c))
    }

    /// Positive rational weights making every term the same weighted degree,
    /// normalized to the smallest integer vector, with the common degree.
    pub fn quasi_homogeneous_weights(&self) -> Result<Option<(Vec<Rat>, Rat)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let n = self.ring.arity();
        let e0 = self.terms[0].0.exponents();
        let rows: Vec<Vec<Rat>> = self.terms[1..]
            .iter()
            .map(|(m, _)| {
                m.exponents()
                    .iter()
                    .zip(e0)
                    .map(|(&a, &b)| rat_int(a as i64 - b as i64))
                    .collect()
            })
            .collect();
        let constraints = if rows.is_empty() {
            QMat::zero(0, n)
        } else {
            QMat::from_rows(rows)
        };
        let Some(w) = positive_kernel_point(&constraints) else {
            return Ok(None);
        };
        // scale to the smallest positive integer vector
        let mut denom_lcm = num_bigint::BigInt::one();
        for x in &w {
            denom_lcm = num_integer::lcm(denom_lcm, x.denom().clone());
        }
        let ints: Vec<num_bigint::BigInt> = w
            .iter()
            .map(|x| (x * Rat::from_integer(denom_lcm.clone())).to_integer())
            .collect();
        let mut g = num_bigint::BigInt::zero();
        for v in &ints {
            g = num_integer::gcd(g, v.clone());
        }
        let weights: Vec<Rat> = ints
            .iter()
            .map(|v| Rat::from_integer(v / &g))
            .collect();
        let degree: Rat = weights
            .iter()
            .zip(e0)
            .map(|(w, &e)| w * rat_int(e as i64))
            .sum();
        debug_assert!(self.terms.iter().all(|(m, _)| {
            let d: Rat = weights
                .iter()
                .zip(m.exponents())
                .map(|(w, &e)| w * rat_int(e as i64))
                .sum();
            d == degree
        }));
        Ok(Some((weights, degree)))
    }

    /// Divide out the (positive) rational content, leaving an
    /// integer-primitive polynomial; signs are preserved.
    pub fn primitive_part(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut num_gcd = num_bigint::BigInt::zero();
        let mut den_lcm = num_bigint::BigInt::one();
        for (_, c) in &self.terms {
            num_gcd = num_integer::gcd(num_gcd, c.numer().clone());
            den_lcm = num_integer::lcm(den_lcm, c.denom().clone());
        }
        let factor = Rat::new(den_lcm, num_gcd);
        self.scale(&factor)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mut wrote_coef = false;
            if !abs.is_one() || m.is_one() {
                write!(f, "{abs}")?;
                wrote_coef = true;
            }
            for (vi, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if wrote_coef {
                    f.write_str("*")?;
                }
                f.write_str(&self.ring.vars()[vi])?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
                wrote_coef = true;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring2() -> PolyRing {
        PolyRing::with_vars(&["x", "y"])
    }

    #[test]
    fn arithmetic_canonical() {
        let r = ring2();
        let x = r.var(0);
        let y = r.var(1);
        // x*y + y*x = 2xy
        let p = x.mul(&y).unwrap().add(&y.mul(&x).unwrap()).unwrap();
        assert_eq!(p, r.parse("2*x*y").unwrap());
        // (x-1)(x+1) = x^2 - 1
        let q = x
            .sub(&r.one())
            .unwrap()
            .mul(&x.add(&r.one()).unwrap())
            .unwrap();
        assert_eq!(q, r.parse("x^2 - 1").unwrap());
        // (x+y)^3
        let c = x.add(&y).unwrap().pow(3);
        assert_eq!(c, r.parse("x^3 + 3*x^2*y + 3*x*y^2 + y^3").unwrap());
    }

    #[test]
    fn derivative_and_leibniz() {
        let r = ring2();
        let fp = r.parse("x^2").unwrap();
        let gp = r.parse("x*y").unwrap();
        let prod = fp.mul(&gp).unwrap();
        let lhs = prod.partial_derivative("x").unwrap();
        let rhs = fp
            .mul(&gp.partial_derivative("x").unwrap())
            .unwrap()
            .add(&gp.mul(&fp.partial_derivative("x").unwrap()).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
        assert!(r.one().partial_derivative("x").unwrap().is_zero());
        assert!(r.parse("y").unwrap().partial_derivative("x").unwrap().is_zero());
    }

    #[test]
    fn evaluation() {
        let r = ring2();
        let p = r.parse("x^2 + y^2").unwrap();
        assert_eq!(p.evaluate(&[rat_int(3), rat_int(4)]).unwrap(), rat_int(25));
        assert!(matches!(
            p.evaluate(&[rat_int(0)]),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn quasi_homogeneous() {
        let r = ring2();
        let p = r.parse("x^3 + y^2").unwrap();
        let (w, d) = p.quasi_homogeneous_weights().unwrap().unwrap();
        assert_eq!(w, vec![rat_int(2), rat_int(3)]);
        assert_eq!(d, rat_int(6));

        let p = r.parse("x + y^2").unwrap();
        let (w, d) = p.quasi_homogeneous_weights().unwrap().unwrap();
        assert_eq!(w, vec![rat_int(2), rat_int(1)]);
        assert_eq!(d, rat_int(2));

        let p = r.parse("x^2 + x").unwrap();
        assert!(p.quasi_homogeneous_weights().unwrap().is_none());

        assert!(matches!(
            r.zero().quasi_homogeneous_weights(),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn display_roundtrip() {
        let r = ring2();
        for src in [
            "x^2 - 1",
            "-x + y",
            "2/3*x*y^2 - 7",
            "0",
            "x^3 + 3*x^2*y + 3*x*y^2 + y^3",
            "-5/2",
        ] {
            let p = r.parse(src).unwrap();
            let printed = p.to_string();
            let again = r.parse(&printed).unwrap();
            assert_eq!(p, again, "roundtrip failed for {src} -> {printed}");
        }
    }

    #[test]
    fn primitive_part_examples() {
        let r = ring2();
        let p = r.parse("2/3*x + 4/3").unwrap();
        assert_eq!(p.primitive_part(), r.parse("x + 2").unwrap());
        let q = r.parse("-1/2*x - 1/3*y").unwrap();
        assert_eq!(q.primitive_part(), r.parse("-3*x - 2*y").unwrap());
    }
}
