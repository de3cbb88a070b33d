//! Dense univariate polynomials over the rationals: the fast path for
//! eliminants and characteristic polynomials.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::poly::{rat_int, Monomial, PolyRing, Polynomial, Rat};

/// Coefficients from constant to leading; no trailing zeros; zero = empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    pub coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UniPoly {
            coeffs: vec![Rat::one()],
        }
    }

    pub fn constant(c: Rat) -> Self {
        UniPoly::new(vec![c])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        UniPoly::new(v.iter().map(|&x| rat_int(x)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; zero polynomial answers `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Rat::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        UniPoly::new(out)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Rat::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        UniPoly::new(out)
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, c: &Rat) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn divrem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.degree().unwrap();
        let lead = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        while rem.len() > dd {
            let c = rem.last().unwrap() / lead;
            let shift = rem.len() - 1 - dd;
            quot[shift] = c.clone();
            for (i, b) in divisor.coeffs.iter().enumerate() {
                let sub = &c * b;
                rem[shift + i] -= sub;
            }
            while rem.last().is_some_and(|x| x.is_zero()) {
                rem.pop();
            }
            if rem.len() <= dd {
                break;
            }
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Exact division; `None` if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &UniPoly) -> Option<UniPoly> {
        let (q, r) = self.divrem(divisor);
        r.is_zero().then_some(q)
    }

    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => UniPoly::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * rat_int(i as i64 + 1))
                .collect(),
        )
    }

    /// Square-free part `p / gcd(p, p')`, monic.
    pub fn squarefree_part(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.monic();
        }
        self.div_exact(&g).expect("gcd divides").monic()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Substitute `t -> t + c`.
    pub fn shift(&self, c: &Rat) -> UniPoly {
        // Horner: p(t+c) built from the top coefficient down.
        let mut acc = UniPoly::zero();
        let tc = UniPoly::new(vec![c.clone(), Rat::one()]);
        for coef in self.coeffs.iter().rev() {
            acc = acc.mul(&tc).add(&UniPoly::constant(coef.clone()));
        }
        acc
    }

    pub fn pow(&self, mut k: u32) -> UniPoly {
        let mut result = UniPoly::one();
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Clear denominators and content: primitive integer coefficients,
    /// positive leading coefficient.
    pub fn primitive_int(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return vec![];
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = num_integer::lcm(den, c.denom().clone());
        }
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let mut g = BigInt::zero();
        for v in &ints {
            g = num_integer::gcd(g, v.clone());
        }
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        for v in ints.iter_mut() {
            *v = &*v / &g;
        }
        ints
    }

    pub fn from_ints_big(v: Vec<BigInt>) -> UniPoly {
        UniPoly::new(v.into_iter().map(Rat::from_integer).collect())
    }

    /// Render in a univariate ring for display; variable name `t` by default.
    pub fn to_polynomial(&self, ring: &PolyRing) -> Polynomial {
        assert_eq!(ring.arity(), 1);
        Polynomial::from_terms(
            ring.clone(),
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (Monomial::new(vec![i as u32]), c.clone()))
                .collect(),
        )
    }

    pub fn to_display_string(&self, var: &str) -> String {
        let ring = PolyRing::with_vars(&[var]);
        self.to_polynomial(&ring).to_string()
    }

    /// Extract from a polynomial supported on a single variable (or constant).
    pub fn from_polynomial(p: &Polynomial, var_index: usize) -> Option<UniPoly> {
        let mut coeffs: Vec<Rat> = Vec::new();
        for (m, c) in p.terms() {
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 && i != var_index {
                    return None;
                }
            }
            let d = m.exponents()[var_index] as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, Rat::zero());
            }
            coeffs[d] = c.clone();
        }
        Some(UniPoly::new(coeffs))
    }
}
