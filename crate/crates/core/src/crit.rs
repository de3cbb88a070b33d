//! Critical loci and values of a potential on affine space, and the
//! relative-critical analogue for a potential restricted to the zero locus
//! of the relations: rank-stratified ideals, saturation to excise lower
//! strata, and square-free eliminants whose roots are the values.

use num_traits::Zero;
use serde::Serialize;

use crate::error::Error;
use crate::factor::{factor, rational_roots, UniFactor};
use crate::groebner::{evaluate_matrix, fresh_name, Budget, Dim, Ideal};
use crate::lg::LgModel;
use crate::poly::{MonomialOrder, PolyRing, Polynomial, Rat};
use crate::unipoly::UniPoly;
use crate::Result;

/// Generator of a univariate elimination ideal, reduced to its square-free
/// monic part. `Unit` means the locus is empty; `Zero` means the value set
/// is not finite (a first-class condition, not an error).
#[derive(Debug, Clone, PartialEq)]
pub enum Eliminant {
    Unit,
    Finite(UniPoly),
    Zero,
}

impl Eliminant {
    pub fn is_finite(&self) -> bool {
        !matches!(self, Eliminant::Zero)
    }
}

/// Roots of an eliminant over the rationals, with the residual irreducible
/// factors standing for Galois orbits of non-rational values.
#[derive(Debug, Clone)]
pub struct ValueSet {
    pub eliminant: Eliminant,
    pub rational_values: Vec<Rat>,
    pub nonrational_factors: Vec<UniFactor>,
}

impl ValueSet {
    fn from_eliminant(e: Eliminant) -> ValueSet {
        match &e {
            Eliminant::Unit | Eliminant::Zero => ValueSet {
                eliminant: e,
                rational_values: vec![],
                nonrational_factors: vec![],
            },
            Eliminant::Finite(p) => {
                let rational_values = rational_roots(p)
                    .into_iter()
                    .map(|(r, _)| r)
                    .collect();
                let nonrational_factors = factor(p)
                    .into_iter()
                    .filter(|f| f.poly.degree() != Some(1))
                    .collect();
                ValueSet {
                    eliminant: e,
                    rational_values,
                    nonrational_factors,
                }
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self.eliminant, Eliminant::Unit)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let eliminant = match &self.eliminant {
            Eliminant::Unit => serde_json::json!("1"),
            Eliminant::Zero => serde_json::json!("0"),
            Eliminant::Finite(p) => serde_json::json!(p.to_display_string("t")),
        };
        serde_json::json!({
            "finite": self.eliminant.is_finite(),
            "eliminant": eliminant,
            "rational_values": self.rational_values.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            "nonrational_factors": self.nonrational_factors.iter().map(|f| {
                serde_json::json!({
                    "factor": f.poly.to_display_string("t"),
                    "degree": f.poly.degree().unwrap_or(0),
                })
            }).collect::<Vec<_>>(),
        })
    }
}

/// Critical data of a potential `W` on affine space.
#[derive(Debug, Clone)]
pub struct CriticalData {
    pub jacobian: Ideal,
    pub locus_dimension: Dim,
    pub values: ValueSet,
}

/// One rank stratum of the relative critical locus.
#[derive(Debug, Clone)]
pub struct StratumData {
    pub rank: usize,
    pub ideal: Ideal,
    pub eliminant: Eliminant,
}

/// Relative critical values of a model, stratified by the common rank.
#[derive(Debug, Clone)]
pub struct RelCritData {
    pub strata: Vec<StratumData>,
    pub values: ValueSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CrossCheck {
    Agree,
    Disagree,
}

/// Ideal generated by all partial derivatives of `W`.
pub fn jacobian_ideal(w: &Polynomial) -> Ideal {
    let ring = w.ring().clone();
    let gens = (0..ring.arity())
        .map(|i| w.partial_derivative_index(i))
        .collect();
    Ideal::new(ring, gens)
}

/// Eliminate the ring variables from `ideal + (t - value)`; the result is
/// the univariate ideal of the closure of the image of the locus.
fn value_eliminant(
    ideal: &Ideal,
    value: &Polynomial,
    budget: &Budget,
) -> Result<Eliminant> {
    let ring = ideal.ring().clone();
    let t = fresh_name(&ring, "t");
    let mut vars = ring.vars().to_vec();
    vars.push(t.clone());
    let big = PolyRing::new(vars, MonomialOrder::GrevLex)?;
    let tv = big.var_named(&t)?;
    let mut gens: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .map(|p| p.embed(&big))
        .collect::<Result<_>>()?;
    gens.push(tv.sub(&value.embed(&big)?)?);
    let joined = Ideal::new(big, gens);
    let elim = joined.elimination_ideal(&[t], budget)?;
    let gb = elim.groebner_basis(&MonomialOrder::GrevLex, budget)?;
    let elements = gb.elements();
    if elements.is_empty() {
        return Ok(Eliminant::Zero);
    }
    debug_assert_eq!(elements.len(), 1, "univariate ideals are principal");
    let p = &elements[0];
    if p.is_constant() {
        return Ok(Eliminant::Unit);
    }
    let u = UniPoly::from_polynomial(p, 0).expect("univariate by construction");
    Ok(Eliminant::Finite(u.squarefree_part()))
}

/// Critical values of `W` via elimination: handles positive-dimensional
/// critical loci, which regularized potentials generically have.
pub fn critical_values(w: &Polynomial, budget: &Budget) -> Result<CriticalData> {
    let jacobian = jacobian_ideal(w);
    let locus_dimension = jacobian.krull_dimension(budget)?;
    let eliminant = value_eliminant(&jacobian, w, budget)?;
    Ok(CriticalData {
        values: ValueSet::from_eliminant(eliminant),
        jacobian,
        locus_dimension,
    })
}

/// Jacobian matrix rows of the given polynomials (one row per polynomial).
pub fn jacobian_matrix(polys: &[Polynomial], ring: &PolyRing) -> Vec<Vec<Polynomial>> {
    polys
        .iter()
        .map(|p| {
            (0..ring.arity())
                .map(|i| p.partial_derivative_index(i))
                .collect()
        })
        .collect()
}

/// All `k x k` minors of a polynomial matrix; the empty minor is `1` and a
/// size exceeding the matrix yields no minors.
pub fn minors(matrix: &[Vec<Polynomial>], k: usize, ring: &PolyRing) -> Vec<Polynomial> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, |r| r.len());
    if k == 0 {
        return vec![ring.one()];
    }
    if k > rows || k > cols {
        return vec![];
    }
    let mut out = Vec::new();
    for rsel in combinations(rows, k) {
        for csel in combinations(cols, k) {
            let sub: Vec<Vec<&Polynomial>> = rsel
                .iter()
                .map(|&i| csel.iter().map(|&j| &matrix[i][j]).collect())
                .collect();
            out.push(det(&sub, ring));
        }
    }
    out
}

fn det(sub: &[Vec<&Polynomial>], ring: &PolyRing) -> Polynomial {
    let n = sub.len();
    if n == 0 {
        return ring.one();
    }
    if n == 1 {
        return sub[0][0].clone();
    }
    let mut acc = ring.zero();
    for j in 0..n {
        if sub[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<&Polynomial>> = sub[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter_map(|(c, p)| (c != j).then_some(*p))
                    .collect()
            })
            .collect();
        let term = sub[0][j].mul(&det(&minor, ring)).expect("same ring");
        acc = if j % 2 == 0 {
            acc.add(&term).expect("same ring")
        } else {
            acc.sub(&term).expect("same ring")
        };
    }
    acc
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return vec![];
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Pointwise test for a rational point on the zero locus: the point is
/// relative-critical iff the two Jacobian ranks agree. Returns the ranks.
pub fn is_relative_critical_point(
    model: &LgModel,
    point: &[Rat],
) -> Result<(bool, usize, usize)> {
    let ring = model.ambient();
    if point.len() != ring.arity() {
        return Err(Error::ArityMismatch {
            expected: ring.arity(),
            got: point.len(),
        });
    }
    for f in model.relations() {
        if !f.evaluate(point)?.is_zero() {
            return Err(Error::PointNotOnLocus);
        }
    }
    let jac_f = jacobian_matrix(model.relations(), ring);
    let mut with_g = model.relations().to_vec();
    with_g.push(model.potential().clone());
    let jac_fg = jacobian_matrix(&with_g, ring);
    let rank_f = if jac_f.is_empty() {
        0
    } else {
        evaluate_matrix(&jac_f, point)?.rank()
    };
    let rank_fg = evaluate_matrix(&jac_fg, point)?.rank();
    Ok((rank_f == rank_fg, rank_f, rank_fg))
}

/// Relative critical values: for each rank `r`, cut the locus where
/// `rank Jac(f, g) <= r`, saturate away the locus where `rank Jac(f) < r`,
/// and push forward along `g`. The union over `r` is returned as a single
/// square-free eliminant.
pub fn relative_critical_values(model: &LgModel, budget: &Budget) -> Result<RelCritData> {
    let ring = model.ambient().clone();
    let m = model.relations().len();
    let jac_f = jacobian_matrix(model.relations(), &ring);
    let mut with_g = model.relations().to_vec();
    with_g.push(model.potential().clone());
    let jac_fg = jacobian_matrix(&with_g, &ring);

    let mut strata = Vec::new();
    let mut finite_parts: Vec<UniPoly> = Vec::new();
    let mut any_zero = false;
    let mut all_unit = true;
    for r in 0..=m {
        let mut gens: Vec<Polynomial> = model.relations().to_vec();
        gens.extend(minors(&jac_fg, r + 1, &ring));
        let stratum_ideal = Ideal::new(ring.clone(), gens);
        let excised = if r == 0 {
            // 0-minors generate the unit ideal; saturation is the identity
            stratum_ideal
        } else {
            let lower = Ideal::new(ring.clone(), minors(&jac_f, r, &ring));
            stratum_ideal.saturation(&lower, budget)?
        };
        let eliminant = value_eliminant(&excised, model.potential(), budget)?;
        match &eliminant {
            Eliminant::Zero => any_zero = true,
            Eliminant::Unit => {}
            Eliminant::Finite(p) => {
                all_unit = false;
                finite_parts.push(p.clone());
            }
        }
        strata.push(StratumData {
            rank: r,
            ideal: excised,
            eliminant,
        });
    }
    let combined = if any_zero {
        Eliminant::Zero
    } else if all_unit {
        Eliminant::Unit
    } else {
        let mut prod = UniPoly::one();
        for p in &finite_parts {
            prod = prod.mul(p);
        }
        Eliminant::Finite(prod.squarefree_part())
    };
    Ok(RelCritData {
        strata,
        values: ValueSet::from_eliminant(combined),
    })
}

/// Compare the relative critical values of the model with the critical
/// values of its regularized potential, exactly.
pub fn cross_check(model: &LgModel, budget: &Budget) -> Result<(CriticalData, RelCritData, CrossCheck)> {
    let reg = model.regularize()?;
    let cv = critical_values(reg.w(), budget)?;
    let rel = relative_critical_values(model, budget)?;
    let agree = cv.values.eliminant == rel.values.eliminant;
    Ok((
        cv,
        rel,
        if agree {
            CrossCheck::Agree
        } else {
            CrossCheck::Disagree
        },
    ))
}
