//! Milnor algebra of a potential, per-critical-value multiplicities via the
//! multiplication-by-W endomorphism, truncated Koszul cohomology of
//! (Omega^*, -dW) as a certified-window oracle, and the resulting
//! Hochschild / periodic-cyclic rank reports.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::Error;
use crate::factor::{factor, UniFactor};
use crate::groebner::{Budget, Dim, Staircase, StandardMonomials};
use crate::lg::LgModel;
use crate::linalg::{sparse_rank, QMat};
use crate::poly::{Monomial, Polynomial, Rat};
use crate::unipoly::UniPoly;
use crate::Result;

/// Milnor data of an isolated singularity: staircase basis, total Milnor
/// number, characteristic polynomial of multiplication by `W`, and the
/// eigenvalue decomposition by critical value.
#[derive(Debug, Clone)]
pub struct MilnorData {
    pub basis: Vec<Monomial>,
    pub mu_total: usize,
    pub charpoly: UniPoly,
    /// Rational eigenvalues with algebraic multiplicities.
    pub per_value: Vec<(Rat, usize)>,
    /// Irreducible non-linear factors of the characteristic polynomial,
    /// each a Galois orbit of critical values, with multiplicities.
    pub nonrational: Vec<UniFactor>,
}

/// Outcome of Milnor-algebra computations.
#[derive(Debug, Clone)]
pub enum MilnorOutcome {
    Isolated(MilnorData),
    NonIsolated { locus_dimension: Dim },
}

/// Staircase of the Milnor algebra `Q[x]/Jac(W)`, or the non-isolated
/// verdict. `per_value` is left empty here; see [`per_value_milnor_numbers`].
pub fn milnor_algebra(w: &Polynomial, budget: &Budget) -> Result<MilnorOutcome> {
    let jac = crate::crit::jacobian_ideal(w);
    let staircase: Staircase = jac.quotient_basis(budget)?;
    match staircase.monomials {
        StandardMonomials::Infinite => Ok(MilnorOutcome::NonIsolated {
            locus_dimension: jac.krull_dimension(budget)?,
        }),
        StandardMonomials::Finite(basis) => {
            let mu_total = basis.len();
            Ok(MilnorOutcome::Isolated(MilnorData {
                basis,
                mu_total,
                charpoly: UniPoly::one(),
                per_value: vec![],
                nonrational: vec![],
            }))
        }
    }
}

/// True iff the partials cut out a zero-dimensional (or empty) scheme,
/// so the Koszul complex is exact off the top degree.
pub fn koszul_regular_case_check(w: &Polynomial, budget: &Budget) -> Result<bool> {
    Ok(matches!(
        milnor_algebra(w, budget)?,
        MilnorOutcome::Isolated(_)
    ))
}

/// Multiplication-by-W matrix on the staircase basis, its characteristic
/// polynomial, and the per-value multiplicities.
pub fn per_value_milnor_numbers(w: &Polynomial, budget: &Budget) -> Result<MilnorOutcome> {
    let outcome = milnor_algebra(w, budget)?;
    let MilnorOutcome::Isolated(mut data) = outcome else {
        return Ok(outcome);
    };
    let jac = crate::crit::jacobian_ideal(w);
    let gb = jac.groebner_basis(&crate::poly::MonomialOrder::GrevLex, budget)?;
    let index: BTreeMap<&Monomial, usize> =
        data.basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let n = data.mu_total;
    let mut mat = QMat::zero(n, n);
    for (j, b) in data.basis.iter().enumerate() {
        let prod = w.mul_monomial(b, &Rat::from_integer(1.into()));
        let nf = gb.normal_form(&prod);
        for (m, c) in nf.terms() {
            let i = *index
                .get(m)
                .expect("normal form is supported on standard monomials");
            mat.set(i, j, c.clone());
        }
    }
    let charpoly = UniPoly::new(mat.charpoly());
    let mut per_value = Vec::new();
    let mut nonrational = Vec::new();
    if n > 0 {
        for f in factor(&charpoly) {
            if f.poly.degree() == Some(1) {
                let root = -f.poly.coeffs[0].clone() / &f.poly.coeffs[1];
                per_value.push((root, f.multiplicity));
            } else {
                nonrational.push(f);
            }
        }
    }
    per_value.sort_by(|a, b| a.0.cmp(&b.0));
    debug_assert_eq!(
        per_value.iter().map(|(_, m)| m).sum::<usize>()
            + nonrational
                .iter()
                .map(|f| f.multiplicity * f.poly.degree().unwrap())
                .sum::<usize>(),
        data.mu_total
    );
    data.charpoly = charpoly;
    data.per_value = per_value;
    data.nonrational = nonrational;
    Ok(MilnorOutcome::Isolated(data))
}

/// One homological degree of the truncated Koszul table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KoszulRow {
    pub homological_degree: usize,
    /// dim of (kernel ∩ window) / (image ∩ window) at the stated bound.
    pub window_dim: usize,
    /// Stable under shrinking the window by one differential shift.
    pub certified: bool,
}

/// Dimensions of `H(Omega^*, -dW ∧)` computed in a degree window.
#[derive(Debug, Clone)]
pub struct KoszulTable {
    pub bound: u32,
    pub shift: u32,
    pub rows: Vec<KoszulRow>,
    /// True when the window was too small to certify any degree.
    pub nothing_certified: bool,
}

struct KoszulRanks {
    /// per homological degree k: (domain dim, rank d_k, rank of the rows of
    /// d_k landing above the window bound)
    per_degree: Vec<(usize, usize, usize)>,
}

fn koszul_ranks(w: &Polynomial, bound: u32) -> KoszulRanks {
    let ring = w.ring();
    let n = ring.arity();
    let partials: Vec<Polynomial> = (0..n).map(|i| w.partial_derivative_index(i)).collect();
    let shift: u32 = partials
        .iter()
        .filter_map(|p| p.total_degree())
        .max()
        .unwrap_or(0) as u32;
    let monos = monomials_up_to(n, bound);
    let target_monos = monomials_up_to(n, bound + shift);
    let mono_index: BTreeMap<&Monomial, usize> =
        target_monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let masks_by_popcount: Vec<Vec<u32>> = {
        let mut v: Vec<Vec<u32>> = vec![Vec::new(); n + 2];
        for mask in 0u32..(1u32 << n) {
            v[mask.count_ones() as usize].push(mask);
        }
        v
    };
    let mut per_degree = Vec::new();
    for k in 0..=n {
        let domain_masks = &masks_by_popcount[k];
        let target_masks = if k < n {
            masks_by_popcount[k + 1].clone()
        } else {
            Vec::new()
        };
        let target_mask_index: BTreeMap<u32, usize> = target_masks
            .iter()
            .enumerate()
            .map(|(i, &m)| (m, i))
            .collect();
        let rows_per_mask = target_monos.len();
        let mut cols: Vec<Vec<(usize, Rat)>> = Vec::new();
        let mut cols_high: Vec<Vec<(usize, Rat)>> = Vec::new();
        for &mask in domain_masks {
            for mono in &monos {
                let mut col: BTreeMap<usize, Rat> = BTreeMap::new();
                for i in 0..n {
                    if mask & (1 << i) != 0 {
                        continue;
                    }
                    let sign = exterior_sign(mask, i);
                    let new_mask = mask | (1 << i);
                    let mask_pos = target_mask_index[&new_mask];
                    for (pm, pc) in partials[i].terms() {
                        let tm = mono.mul(pm);
                        let row = mask_pos * rows_per_mask + mono_index[&tm];
                        // d = -dW ∧ : coefficient -sign * pc
                        let add = if sign > 0 { -pc.clone() } else { pc.clone() };
                        match col.get_mut(&row) {
                            Some(e) => {
                                *e += add;
                                if e.is_zero() {
                                    col.remove(&row);
                                }
                            }
                            None => {
                                col.insert(row, add);
                            }
                        }
                    }
                }
                let full: Vec<(usize, Rat)> = col.iter().map(|(r, c)| (*r, c.clone())).collect();
                let high: Vec<(usize, Rat)> = col
                    .iter()
                    .filter(|(r, _)| {
                        let mono_id = *r % rows_per_mask;
                        target_monos[mono_id].degree() > bound as u64
                    })
                    .map(|(r, c)| (*r, c.clone()))
                    .collect();
                cols.push(full);
                cols_high.push(high);
            }
        }
        let domain_dim = domain_masks.len() * monos.len();
        let rank = sparse_rank(cols);
        let rank_high = sparse_rank(cols_high);
        per_degree.push((domain_dim, rank, rank_high));
    }
    KoszulRanks { per_degree }
}

/// Sign of inserting `dx_i` in front of the wedge indexed by `mask`:
/// `(-1)^(number of set bits below i)`.
fn exterior_sign(mask: u32, i: usize) -> i32 {
    let below = (mask & ((1u32 << i) - 1)).count_ones();
    if below.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Exact linear algebra on monomial bases of `Omega^k` truncated by total
/// degree. A homological degree is certified when its window dimension is
/// stable between the stated bound and the bound shrunk by one shift of the
/// differential.
pub fn truncated_koszul_homology(w: &Polynomial, bound: u32) -> Result<KoszulTable> {
    if w.ring().arity() == 0 {
        return Err(Error::Invalid("potential has no variables".into()));
    }
    let partial_shift: u32 = (0..w.ring().arity())
        .filter_map(|i| w.partial_derivative_index(i).total_degree())
        .max()
        .unwrap_or(0) as u32;
    let shift = partial_shift.max(1);
    let big = koszul_ranks(w, bound);
    let dims_at = |ranks: &KoszulRanks| -> Vec<usize> {
        let count = ranks.per_degree.len();
        (0..count)
            .map(|k| {
                let (cols_k, rank_k, _) = ranks.per_degree[k];
                let (prev_rank, prev_high) = if k == 0 {
                    (0, 0)
                } else {
                    let (_, r, rh) = ranks.per_degree[k - 1];
                    (r, rh)
                };
                // dim(ker ∩ window) - dim(image ∩ window), both nonnegative
                let dim = cols_k as i64 - rank_k as i64 - prev_rank as i64 + prev_high as i64;
                debug_assert!(dim >= 0);
                dim.max(0) as usize
            })
            .collect()
    };
    let dims = dims_at(&big);
    let (small_dims, nothing_certified) = if bound >= shift {
        let small = koszul_ranks(w, bound - shift);
        (Some(dims_at(&small)), false)
    } else {
        (None, true)
    };
    let rows = dims
        .iter()
        .enumerate()
        .map(|(k, &d)| KoszulRow {
            homological_degree: k,
            window_dim: d,
            certified: small_dims
                .as_ref()
                .is_some_and(|s| s.get(k) == Some(&d)),
        })
        .collect();
    Ok(KoszulTable {
        bound,
        shift,
        rows,
        nothing_certified,
    })
}

/// Hochschild-rank report. In the regular (isolated) case the cohomology is
/// concentrated in degree `n + m` with total dimension `mu_total`; otherwise
/// a truncated Koszul table is attached.
#[derive(Debug, Clone)]
pub struct HhReport {
    pub regular_case: bool,
    /// Parity of n + m: the Z/2 degree carrying the regular-case total.
    pub parity: u8,
    pub concentrated_degree: usize,
    pub total_dim: Option<usize>,
    pub milnor: Option<MilnorData>,
    pub truncated: Option<KoszulTable>,
}

/// Periodic-cyclic rank report for the isolated case.
#[derive(Debug, Clone)]
pub struct HpReport {
    pub rank: usize,
    pub milnor: MilnorData,
}

#[derive(Debug, Clone)]
pub enum HpOutcome {
    Ranked(HpReport),
    /// Refused: the regularized critical locus is positive-dimensional;
    /// the truncated Koszul table is the tool to reach for instead.
    NonIsolated { locus_dimension: Dim },
}

fn validate(model: &LgModel, budget: &Budget) -> Result<()> {
    let report = model.check_regular_sequence(budget)?;
    if !report.ok {
        return Err(Error::NotRegularSequence(format!(
            "prefix {} fails the codimension test",
            report.first_failure.unwrap_or(0)
        )));
    }
    Ok(())
}

/// Hochschild ranks of the model through its regularization.
pub fn hh_rank(model: &LgModel, bound: u32, budget: &Budget) -> Result<HhReport> {
    validate(model, budget)?;
    let reg = model.regularize()?;
    let total_vars = reg.ring().arity(); // n + m
    match per_value_milnor_numbers(reg.w(), budget)? {
        MilnorOutcome::Isolated(md) => Ok(HhReport {
            regular_case: true,
            parity: (total_vars % 2) as u8,
            concentrated_degree: total_vars,
            total_dim: Some(md.mu_total),
            milnor: Some(md),
            truncated: None,
        }),
        MilnorOutcome::NonIsolated { .. } => Ok(HhReport {
            regular_case: false,
            parity: (total_vars % 2) as u8,
            concentrated_degree: total_vars,
            total_dim: None,
            milnor: None,
            truncated: Some(truncated_koszul_homology(reg.w(), bound)?),
        }),
    }
}

/// Periodic-cyclic rank: total Milnor number with its per-value split.
pub fn hp_rank(model: &LgModel, budget: &Budget) -> Result<HpOutcome> {
    validate(model, budget)?;
    let reg = model.regularize()?;
    match per_value_milnor_numbers(reg.w(), budget)? {
        MilnorOutcome::Isolated(md) => Ok(HpOutcome::Ranked(HpReport {
            rank: md.mu_total,
            milnor: md,
        })),
        MilnorOutcome::NonIsolated { locus_dimension } => {
            Ok(HpOutcome::NonIsolated { locus_dimension })
        }
    }
}

/// Monomials of total degree at most `bound`, in a fixed deterministic order.
fn monomials_up_to(n: usize, bound: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    loop {
        if exps.iter().map(|&e| e as u64).sum::<u64>() <= bound as u64 {
            out.push(Monomial::new(exps.clone()));
        }
        let mut i = 0;
        loop {
            if i == n {
                out.sort_by(|a: &Monomial, b: &Monomial| {
                    a.degree()
                        .cmp(&b.degree())
                        .then_with(|| a.exponents().cmp(b.exponents()))
                });
                return out;
            }
            exps[i] += 1;
            if exps[i] <= bound {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}
