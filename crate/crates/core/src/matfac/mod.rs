//! Matrix-factorization calculus: construction and validation, Koszul
//! factorizations, tensor products (sum of potentials), the shift, hom
//! complexes with stable cohomology, 2-periodic resolutions over
//! hypersurfaces, and Eisenbud operators over complete intersections.

mod pmat;
mod resolution;

pub use pmat::PMat;
pub use resolution::{
    eisenbud_operators, mf_from_module, operator_nilpotence_probe, resolution_over_hypersurface,
    EisenbudOperators, NilpotenceReport, ResolutionOutcome, ResolutionReport,
};

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Deserialize;

use crate::error::Error;
use crate::groebner::{syzygies, Budget, Submodule};
use crate::linalg::sparse_rank;
use crate::poly::{ModuleOrder, Monomial, MonomialOrder, PolyRing, Polynomial, Rat};
use crate::Result;

/// A matrix factorization `(W, r, delta0, delta1)` with
/// `delta0 delta1 = delta1 delta0 = W * I_r`.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixFactorization {
    ring: PolyRing,
    potential: Polynomial,
    rank: usize,
    delta0: PMat,
    delta1: PMat,
    /// Renamings applied to the second factor when rings were merged.
    renames: Vec<(String, String)>,
}

/// Result of the two-sided product check.
#[derive(Debug, Clone)]
pub struct Validation {
    pub ok: bool,
    /// `delta0 delta1 - W I` when nonzero.
    pub residue01: Option<PMat>,
    /// `delta1 delta0 - W I` when nonzero.
    pub residue10: Option<PMat>,
}

impl MatrixFactorization {
    pub fn new(potential: Polynomial, delta0: PMat, delta1: PMat) -> Result<Self> {
        let ring = potential.ring().clone();
        if delta0.rows != delta0.cols || delta1.rows != delta1.cols || delta0.rows != delta1.rows {
            return Err(Error::DimensionMismatch(
                "matrix factorization blocks must be square of equal rank".into(),
            ));
        }
        if delta0.rows == 0 {
            return Err(Error::Invalid("rank must be positive".into()));
        }
        if potential.is_zero() {
            return Err(Error::Invalid(
                "factorizations of the zero potential are out of scope".into(),
            ));
        }
        if !delta0.ring.same_ring(&ring) || !delta1.ring.same_ring(&ring) {
            return Err(Error::RingMismatch);
        }
        Ok(MatrixFactorization {
            rank: delta0.rows,
            ring,
            potential,
            delta0,
            delta1,
            renames: vec![],
        })
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn potential(&self) -> &Polynomial {
        &self.potential
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn delta0(&self) -> &PMat {
        &self.delta0
    }

    pub fn delta1(&self) -> &PMat {
        &self.delta1
    }

    pub fn renames(&self) -> &[(String, String)] {
        &self.renames
    }

    /// Exact two-sided check of the factorization identity.
    pub fn validate(&self) -> Validation {
        let wid = PMat::scalar(self.ring.clone(), self.rank, &self.potential);
        let p01 = self
            .delta0
            .mul(&self.delta1)
            .and_then(|p| p.sub(&wid))
            .expect("dimensions checked at construction");
        let p10 = self
            .delta1
            .mul(&self.delta0)
            .and_then(|p| p.sub(&wid))
            .expect("dimensions checked at construction");
        Validation {
            ok: p01.is_zero() && p10.is_zero(),
            residue01: (!p01.is_zero()).then_some(p01),
            residue10: (!p10.is_zero()).then_some(p10),
        }
    }

    /// Swap the two maps with a sign; an involution preserving validity.
    pub fn shift(&self) -> MatrixFactorization {
        MatrixFactorization {
            ring: self.ring.clone(),
            potential: self.potential.clone(),
            rank: self.rank,
            delta0: self.delta1.neg(),
            delta1: self.delta0.neg(),
            renames: self.renames.clone(),
        }
    }

    /// Parse the JSON format
    /// `{"variables": [...], "potential": "...", "rank": r,
    ///   "delta0": [["..."]], "delta1": [["..."]]}`.
    /// When `variables` is absent a ring must be supplied.
    pub fn from_json(src: &str, ring: Option<&PolyRing>) -> Result<MatrixFactorization> {
        #[derive(Deserialize)]
        struct Raw {
            variables: Option<Vec<String>>,
            potential: String,
            rank: usize,
            delta0: Vec<Vec<String>>,
            delta1: Vec<Vec<String>>,
        }
        let raw: Raw = serde_json::from_str(src)
            .map_err(|e| Error::Invalid(format!("matrix factorization JSON: {e}")))?;
        let ring = match (raw.variables, ring) {
            (Some(vars), _) => PolyRing::new(vars, MonomialOrder::GrevLex)?,
            (None, Some(r)) => r.clone(),
            (None, None) => {
                return Err(Error::Invalid(
                    "matrix factorization JSON carries no variables and no ring was given".into(),
                ))
            }
        };
        let parse_mat = |rows: &[Vec<String>]| -> Result<PMat> {
            let entries = rows
                .iter()
                .map(|row| row.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            PMat::new(ring.clone(), entries)
        };
        let delta0 = parse_mat(&raw.delta0)?;
        let delta1 = parse_mat(&raw.delta1)?;
        let mf = MatrixFactorization::new(ring.parse(&raw.potential)?, delta0, delta1)?;
        if mf.rank != raw.rank {
            return Err(Error::Invalid(format!(
                "declared rank {} does not match matrices of rank {}",
                raw.rank, mf.rank
            )));
        }
        Ok(mf)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mat = |m: &PMat| -> Vec<Vec<String>> {
            (0..m.rows)
                .map(|i| (0..m.cols).map(|j| m.at(i, j).to_string()).collect())
                .collect()
        };
        serde_json::json!({
            "variables": self.ring.vars(),
            "potential": self.potential.to_string(),
            "rank": self.rank,
            "delta0": mat(&self.delta0),
            "delta1": mat(&self.delta1),
        })
    }
}

/// Rank-1 factorization `(a, b)` of `a * b`.
pub fn rank_one_mf(a: &Polynomial, b: &Polynomial) -> Result<MatrixFactorization> {
    let ring = a.ring().clone();
    let w = a.mul(b)?;
    MatrixFactorization::new(
        w,
        PMat::new(ring.clone(), vec![vec![a.clone()]])?,
        PMat::new(ring, vec![vec![b.clone()]])?,
    )
}

/// Koszul factorization of `W = sum a_i b_i`: the tensor product of the
/// rank-1 factors `(a_i, b_i)`, of rank `2^(len-1)`.
pub fn koszul_mf(a: &[Polynomial], b: &[Polynomial]) -> Result<MatrixFactorization> {
    if a.len() != b.len() || a.is_empty() {
        return Err(Error::DimensionMismatch(
            "koszul factors need equally many a's and b's".into(),
        ));
    }
    let mut acc = rank_one_mf(&a[0], &b[0])?;
    for (ai, bi) in a[1..].iter().zip(&b[1..]) {
        acc = tensor_same_ring(&acc, &rank_one_mf(ai, bi)?)?;
    }
    Ok(acc)
}

/// Tensor product over a common ring: the factorization of `W_E + W_F`
/// by the standard signed block formula.
fn tensor_same_ring(
    e: &MatrixFactorization,
    f: &MatrixFactorization,
) -> Result<MatrixFactorization> {
    let ring = e.ring.clone();
    let p = e.rank;
    let q = f.rank;
    let kron = |a: &PMat, b: &PMat| -> Result<PMat> {
        // (a ⊗ b)[(i1,i2),(j1,j2)] = a[i1][j1] * b[i2][j2]
        let mut out = PMat::zero(ring.clone(), a.rows * b.rows, a.cols * b.cols);
        for i1 in 0..a.rows {
            for j1 in 0..a.cols {
                if a.at(i1, j1).is_zero() {
                    continue;
                }
                for i2 in 0..b.rows {
                    for j2 in 0..b.cols {
                        if b.at(i2, j2).is_zero() {
                            continue;
                        }
                        out.set(
                            i1 * b.rows + i2,
                            j1 * b.cols + j2,
                            a.at(i1, j1).mul(b.at(i2, j2))?,
                        );
                    }
                }
            }
        }
        Ok(out)
    };
    let idp = PMat::identity(ring.clone(), p);
    let idq = PMat::identity(ring.clone(), q);
    let blocks = |tl: PMat, tr: PMat, bl: PMat, br: PMat| -> Result<PMat> {
        let n = 2 * p * q;
        let mut out = PMat::zero(ring.clone(), n, n);
        let half = p * q;
        for i in 0..half {
            for j in 0..half {
                out.set(i, j, tl.at(i, j).clone());
                out.set(i, j + half, tr.at(i, j).clone());
                out.set(i + half, j, bl.at(i, j).clone());
                out.set(i + half, j + half, br.at(i, j).clone());
            }
        }
        Ok(out)
    };
    // (E ⊗ F)_0 = E0F0 ⊕ E1F1, (E ⊗ F)_1 = E1F0 ⊕ E0F1
    let delta0 = blocks(
        kron(&e.delta0, &idq)?,
        kron(&idp, &f.delta1)?.neg(),
        kron(&idp, &f.delta0)?,
        kron(&e.delta1, &idq)?,
    )?;
    let delta1 = blocks(
        kron(&e.delta1, &idq)?,
        kron(&idp, &f.delta1)?,
        kron(&idp, &f.delta0)?.neg(),
        kron(&e.delta0, &idq)?,
    )?;
    let w = e.potential.add(&f.potential)?;
    MatrixFactorization::new(w, delta0, delta1)
}

/// Tensor product of factorizations of potentials on possibly different
/// rings. Rings are merged; variables of the second factor that collide
/// with the first are renamed with fresh numeric suffixes, and the renaming
/// is recorded on the result.
pub fn tensor_mf(
    e: &MatrixFactorization,
    f: &MatrixFactorization,
) -> Result<MatrixFactorization> {
    let (ring, f_map, renames) = merge_rings(&e.ring, &f.ring)?;
    let e_map: Vec<usize> = (0..e.ring.arity()).collect();
    let move_e = |m: &PMat| m.map(|p| p.map_variables(&ring, &e_map));
    let move_f = |m: &PMat| m.map(|p| p.map_variables(&ring, &f_map));
    let e2 = MatrixFactorization::new(
        e.potential.map_variables(&ring, &e_map),
        reringed(move_e(&e.delta0), &ring)?,
        reringed(move_e(&e.delta1), &ring)?,
    )?;
    let f2 = MatrixFactorization::new(
        f.potential.map_variables(&ring, &f_map),
        reringed(move_f(&f.delta0), &ring)?,
        reringed(move_f(&f.delta1), &ring)?,
    )?;
    let mut out = tensor_same_ring(&e2, &f2)?;
    out.renames = renames;
    Ok(out)
}

fn reringed(m: PMat, ring: &PolyRing) -> Result<PMat> {
    PMat::new(ring.clone(), m.rows_vec().clone())
}

/// Merged ring: variables of `a`, then variables of `b` (renamed on
/// collision). Returns the index map for `b`'s variables and the renames.
fn merge_rings(a: &PolyRing, b: &PolyRing) -> Result<(PolyRing, Vec<usize>, Vec<(String, String)>)> {
    let mut vars = a.vars().to_vec();
    let mut b_map = Vec::with_capacity(b.arity());
    let mut renames = Vec::new();
    for v in b.vars() {
        let name = if vars.contains(v) {
            let mut k = 1usize;
            loop {
                let cand = format!("{v}_{k}");
                if !vars.contains(&cand) && b.var_index(&cand).is_none() {
                    break cand;
                }
                k += 1;
            }
        } else {
            v.clone()
        };
        if &name != v {
            renames.push((v.clone(), name.clone()));
        }
        b_map.push(vars.len());
        vars.push(name);
    }
    Ok((PolyRing::new(vars, a.default_order().clone())?, b_map, renames))
}

/// The Z/2-graded hom complex of two factorizations of the same potential,
/// flattened to two matrices acting on coefficient vectors. The two
/// composites vanish identically.
#[derive(Debug, Clone)]
pub struct HomComplex {
    pub ring: PolyRing,
    /// even maps to odd: size 2qp x 2qp
    pub even_to_odd: PMat,
    /// odd maps to even
    pub odd_to_even: PMat,
}

/// Flatten `phi -> A phi B` on q_in x p_in matrices into a big matrix,
/// with row-major vec ordering.
fn sandwich(
    a: &PMat,
    b: &PMat,
    ring: &PolyRing,
) -> Result<PMat> {
    // phi: b.rows x a.cols ... we want out[(i,j),(k,l)] = a[i][k] b[l][j]
    let q_out = a.rows;
    let q_in = a.cols;
    let p_in = b.rows;
    let p_out = b.cols;
    let mut out = PMat::zero(ring.clone(), q_out * p_out, q_in * p_in);
    for i in 0..q_out {
        for k in 0..q_in {
            if a.at(i, k).is_zero() {
                continue;
            }
            for l in 0..p_in {
                for j in 0..p_out {
                    if b.at(l, j).is_zero() {
                        continue;
                    }
                    out.set(i * p_out + j, k * p_in + l, a.at(i, k).mul(b.at(l, j))?);
                }
            }
        }
    }
    Ok(out)
}

pub fn hom_complex(
    e: &MatrixFactorization,
    f: &MatrixFactorization,
) -> Result<HomComplex> {
    if !e.ring.same_ring(&f.ring) {
        return Err(Error::RingMismatch);
    }
    if e.potential != f.potential {
        return Err(Error::PotentialMismatch);
    }
    let ring = e.ring.clone();
    let p = e.rank;
    let q = f.rank;
    let idp = PMat::identity(ring.clone(), p);
    let idq = PMat::identity(ring.clone(), q);
    let half = q * p;
    let assemble = |tl: PMat, tr: PMat, bl: PMat, br: PMat| -> Result<PMat> {
        let mut out = PMat::zero(ring.clone(), 2 * half, 2 * half);
        for i in 0..half {
            for j in 0..half {
                out.set(i, j, tl.at(i, j).clone());
                out.set(i, j + half, tr.at(i, j).clone());
                out.set(i + half, j, bl.at(i, j).clone());
                out.set(i + half, j + half, br.at(i, j).clone());
            }
        }
        Ok(out)
    };
    // even (phi0, phi1) -> (d0F phi0 - phi1 d0E, d1F phi1 - phi0 d1E)
    let even_to_odd = assemble(
        sandwich(&f.delta0, &idp, &ring)?,
        sandwich(&idq, &e.delta0, &ring)?.neg(),
        sandwich(&idq, &e.delta1, &ring)?.neg(),
        sandwich(&f.delta1, &idp, &ring)?,
    )?;
    // odd (psi+, psi-) -> (d1F psi+ + psi- d0E, d0F psi- + psi+ d1E)
    let odd_to_even = assemble(
        sandwich(&f.delta1, &idp, &ring)?,
        sandwich(&idq, &e.delta0, &ring)?,
        sandwich(&idq, &e.delta1, &ring)?,
        sandwich(&f.delta0, &idp, &ring)?,
    )?;
    Ok(HomComplex {
        ring,
        even_to_odd,
        odd_to_even,
    })
}

/// Stable hom dimensions and their presentations.
#[derive(Debug, Clone)]
pub struct StableHom {
    pub even_dim: Option<usize>,
    pub odd_dim: Option<usize>,
    /// Relation modules presenting the two cohomologies.
    pub even_presentation: Option<Submodule>,
    pub odd_presentation: Option<Submodule>,
}

/// Kernel mod image of the flattened hom complex, as exact module
/// dimensions over the rationals.
pub fn stable_hom_dims(
    e: &MatrixFactorization,
    f: &MatrixFactorization,
    budget: &Budget,
) -> Result<StableHom> {
    let hc = hom_complex(e, f)?;
    let (even_dim, even_pres) = cohomology_dim(&hc.even_to_odd, &hc.odd_to_even, &hc.ring, budget)?;
    let (odd_dim, odd_pres) = cohomology_dim(&hc.odd_to_even, &hc.even_to_odd, &hc.ring, budget)?;
    Ok(StableHom {
        even_dim,
        odd_dim,
        even_presentation: even_pres,
        odd_presentation: odd_pres,
    })
}

/// dim of ker(out) / im(into), with the relation module of the kernel
/// generators as a presentation.
fn cohomology_dim(
    out_map: &PMat,
    into_map: &PMat,
    ring: &PolyRing,
    budget: &Budget,
) -> Result<(Option<usize>, Option<Submodule>)> {
    let kernel = syzygies(ring, out_map.rows_vec(), budget)?;
    let kgens = kernel.generators();
    if kgens.is_empty() {
        return Ok((Some(0), None));
    }
    // relations: lambda with K lambda in im(into): syzygies of [K | into]
    let n = out_map.cols;
    let p = kgens.len();
    let mut joint_rows: Vec<Vec<Polynomial>> = Vec::with_capacity(n);
    for row in 0..n {
        let mut r: Vec<Polynomial> = Vec::with_capacity(p + into_map.cols);
        for g in kgens {
            r.push(g[row].clone());
        }
        r.extend(into_map.row(row).iter().cloned());
        joint_rows.push(r);
    }
    let joint_syz = syzygies(ring, &joint_rows, budget)?;
    let relations: Vec<Vec<Polynomial>> = joint_syz
        .generators()
        .iter()
        .map(|v| v[..p].to_vec())
        .collect();
    let pres = Submodule::new(
        ring.clone(),
        p,
        relations,
        ModuleOrder::Pot(MonomialOrder::GrevLex),
    )?;
    let dim = pres.quotient_dimension(budget)?;
    Ok((dim, Some(pres)))
}

/// Degree-truncated linear-algebra oracle for stable hom dimensions:
/// exact window dimensions of the two cohomologies, each certified by
/// stability under shrinking the window by the coefficient degree shift.
pub fn stable_hom_window_dims(
    e: &MatrixFactorization,
    f: &MatrixFactorization,
    bound: u32,
) -> Result<(usize, usize)> {
    let hc = hom_complex(e, f)?;
    let even = window_cohomology_dim(&hc.even_to_odd, &hc.odd_to_even, &hc.ring, bound)?;
    let odd = window_cohomology_dim(&hc.odd_to_even, &hc.even_to_odd, &hc.ring, bound)?;
    Ok((even, odd))
}

fn window_cohomology_dim(
    out_map: &PMat,
    into_map: &PMat,
    ring: &PolyRing,
    bound: u32,
) -> Result<usize> {
    let n_comp = out_map.cols;
    let shift: u32 = out_map
        .rows_vec()
        .iter()
        .chain(into_map.rows_vec())
        .flatten()
        .filter_map(|p| p.total_degree())
        .max()
        .unwrap_or(0) as u32;
    let monos = monomials_up_to(ring.arity(), bound);
    let target_monos = monomials_up_to(ring.arity(), bound + shift);
    let mono_index: BTreeMap<&Monomial, usize> = target_monos
        .iter()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let build_cols = |mat: &PMat, high_only: bool| -> Vec<Vec<(usize, Rat)>> {
        let rows_per_comp = target_monos.len();
        let mut cols = Vec::new();
        for comp in 0..mat.cols {
            for mono in &monos {
                let mut col: BTreeMap<usize, Rat> = BTreeMap::new();
                for out_comp in 0..mat.rows {
                    let entry = mat.at(out_comp, comp);
                    for (em, ec) in entry.terms() {
                        let tm = mono.mul(em);
                        if high_only && tm.degree() <= bound as u64 {
                            continue;
                        }
                        let row = out_comp * rows_per_comp + mono_index[&tm];
                        match col.get_mut(&row) {
                            Some(v) => {
                                *v += ec.clone();
                                if v.is_zero() {
                                    col.remove(&row);
                                }
                            }
                            None => {
                                col.insert(row, ec.clone());
                            }
                        }
                    }
                }
                cols.push(col.into_iter().collect());
            }
        }
        cols
    };
    let domain_dim = n_comp * monos.len();
    let rank_out = sparse_rank(build_cols(out_map, false));
    let rank_in = sparse_rank(build_cols(into_map, false));
    let rank_in_high = sparse_rank(build_cols(into_map, true));
    let dim = domain_dim as i64 - rank_out as i64 - rank_in as i64 + rank_in_high as i64;
    debug_assert!(dim >= 0);
    Ok(dim.max(0) as usize)
}

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

#[cfg(test)]
mod tests {
    use super::*;

    fn budget() -> Budget {
        Budget::default()
    }

    #[test]
    fn validation_examples() {
        let r = PolyRing::with_vars(&["x", "y"]);
        let mf = rank_one_mf(&r.parse("x").unwrap(), &r.parse("x").unwrap()).unwrap();
        assert!(mf.validate().ok);
        let mf = rank_one_mf(&r.parse("x").unwrap(), &r.parse("y").unwrap()).unwrap();
        assert!(mf.validate().ok);
        // broken by hand: delta1 = x + 1 against W = x^2
        let broken = MatrixFactorization::new(
            r.parse("x^2").unwrap(),
            PMat::new(r.clone(), vec![vec![r.parse("x").unwrap()]]).unwrap(),
            PMat::new(r.clone(), vec![vec![r.parse("x + 1").unwrap()]]).unwrap(),
        )
        .unwrap();
        let v = broken.validate();
        assert!(!v.ok);
        let res = v.residue01.unwrap();
        assert_eq!(res.at(0, 0), &r.parse("x").unwrap());
    }

    #[test]
    fn koszul_examples() {
        let r = PolyRing::with_vars(&["x", "y"]);
        let x = r.parse("x").unwrap();
        let y = r.parse("y").unwrap();
        let mf = koszul_mf(std::slice::from_ref(&x), std::slice::from_ref(&x)).unwrap();
        assert_eq!(mf.rank(), 1);
        assert_eq!(mf.potential(), &r.parse("x^2").unwrap());
        let mf = koszul_mf(&[x.clone(), y.clone()], &[x.clone(), y.clone()]).unwrap();
        assert_eq!(mf.rank(), 2);
        assert_eq!(mf.potential(), &r.parse("x^2 + y^2").unwrap());
        assert!(mf.validate().ok);
    }

    #[test]
    fn koszul_builds_regularized_block() {
        let r = PolyRing::with_vars(&["x1", "x2", "x3"]);
        let f = r.parse("x2 - x1^2").unwrap();
        let x3 = r.parse("x3").unwrap();
        let mf = koszul_mf(std::slice::from_ref(&f), std::slice::from_ref(&x3)).unwrap();
        assert_eq!(mf.rank(), 1);
        assert_eq!(mf.potential(), &f.mul(&x3).unwrap());
        assert!(mf.validate().ok);
    }

    #[test]
    fn tensor_disjoint_rings() {
        let rx = PolyRing::with_vars(&["x"]);
        let ry = PolyRing::with_vars(&["y"]);
        let e = rank_one_mf(&rx.parse("x").unwrap(), &rx.parse("x").unwrap()).unwrap();
        let f = rank_one_mf(&ry.parse("y").unwrap(), &ry.parse("y").unwrap()).unwrap();
        let t = tensor_mf(&e, &f).unwrap();
        assert_eq!(t.rank(), 2);
        assert!(t.renames().is_empty());
        assert_eq!(
            t.potential(),
            &t.ring().parse("x^2 + y^2").unwrap()
        );
        assert!(t.validate().ok);
    }

    #[test]
    fn tensor_renames_collisions() {
        let rx = PolyRing::with_vars(&["x"]);
        let e = rank_one_mf(&rx.parse("x").unwrap(), &rx.parse("x").unwrap()).unwrap();
        let t = tensor_mf(&e, &e).unwrap();
        assert_eq!(t.renames(), &[("x".to_string(), "x_1".to_string())]);
        assert_eq!(t.potential(), &t.ring().parse("x^2 + x_1^2").unwrap());
        assert!(t.validate().ok);
    }

    #[test]
    fn shift_is_involution() {
        let r = PolyRing::with_vars(&["x", "y"]);
        let fixtures = vec![
            rank_one_mf(&r.parse("x").unwrap(), &r.parse("x").unwrap()).unwrap(),
            rank_one_mf(&r.parse("x").unwrap(), &r.parse("y").unwrap()).unwrap(),
            koszul_mf(
                &[r.parse("x").unwrap(), r.parse("y").unwrap()],
                &[r.parse("x").unwrap(), r.parse("y").unwrap()],
            )
            .unwrap(),
        ];
        for mf in fixtures {
            let s = mf.shift();
            assert!(s.validate().ok);
            assert_eq!(s.shift(), mf);
        }
    }

    #[test]
    fn hom_complex_composes_to_zero() {
        let r = PolyRing::with_vars(&["x"]);
        let e = rank_one_mf(&r.parse("x").unwrap(), &r.parse("x").unwrap()).unwrap();
        let hc = hom_complex(&e, &e).unwrap();
        assert!(hc.odd_to_even.mul(&hc.even_to_odd).unwrap().is_zero());
        assert!(hc.even_to_odd.mul(&hc.odd_to_even).unwrap().is_zero());
        // mismatched potentials refused
        let f = rank_one_mf(&r.parse("x").unwrap(), &r.parse("x^2").unwrap()).unwrap();
        assert!(matches!(
            hom_complex(&e, &f),
            Err(Error::PotentialMismatch)
        ));
    }

    #[test]
    fn stable_end_of_x_x() {
        let r = PolyRing::with_vars(&["x"]);
        let e = rank_one_mf(&r.parse("x").unwrap(), &r.parse("x").unwrap()).unwrap();
        let sh = stable_hom_dims(&e, &e, &budget()).unwrap();
        assert_eq!(sh.even_dim, Some(1));
        assert_eq!(sh.odd_dim, Some(1));
        // the truncated oracle agrees at bound 4
        let (we, wo) = stable_hom_window_dims(&e, &e, 4).unwrap();
        assert_eq!((we, wo), (1, 1));
    }

    #[test]
    fn stable_hom_respects_shift() {
        let r = PolyRing::with_vars(&["x", "y"]);
        let e = koszul_mf(
            &[r.parse("x").unwrap(), r.parse("y").unwrap()],
            &[r.parse("x").unwrap(), r.parse("y").unwrap()],
        )
        .unwrap();
        let sh = stable_hom_dims(&e, &e, &budget()).unwrap();
        let shifted = stable_hom_dims(&e, &e.shift(), &budget()).unwrap();
        assert_eq!(sh.even_dim, shifted.odd_dim);
        assert_eq!(sh.odd_dim, shifted.even_dim);
    }

    #[test]
    fn stable_end_of_xy_matches_oracle() {
        let r = PolyRing::with_vars(&["x", "y"]);
        let e = rank_one_mf(&r.parse("x").unwrap(), &r.parse("y").unwrap()).unwrap();
        let sh = stable_hom_dims(&e, &e, &budget()).unwrap();
        let (we, wo) = stable_hom_window_dims(&e, &e, 4).unwrap();
        assert_eq!(sh.even_dim, Some(we));
        assert_eq!(sh.odd_dim, Some(wo));
    }

    #[test]
    fn zero_potential_and_zero_rank_rejected() {
        let r = PolyRing::with_vars(&["x"]);
        assert!(rank_one_mf(&r.zero(), &r.parse("x").unwrap()).is_err());
        assert!(MatrixFactorization::new(
            r.parse("x^2").unwrap(),
            PMat::zero(r.clone(), 0, 0),
            PMat::zero(r.clone(), 0, 0),
        )
        .is_err());
    }

    #[test]
    fn stable_end_can_be_infinite() {
        // W = x^2 y^2 has a one-dimensional singular locus; the stable
        // endomorphisms of (xy, xy) form an infinite-dimensional space
        let r = PolyRing::with_vars(&["x", "y"]);
        let xy = r.parse("x*y").unwrap();
        let e = rank_one_mf(&xy, &xy).unwrap();
        let sh = stable_hom_dims(&e, &e, &budget()).unwrap();
        assert_eq!(sh.even_dim, None);
    }

    #[test]
    fn json_roundtrip() {
        let r = PolyRing::with_vars(&["x", "y"]);
        let mf = koszul_mf(
            &[r.parse("x").unwrap(), r.parse("y").unwrap()],
            &[r.parse("x").unwrap(), r.parse("y").unwrap()],
        )
        .unwrap();
        let json = mf.to_json().to_string();
        let back = MatrixFactorization::from_json(&json, None).unwrap();
        assert_eq!(back, mf);
        assert!(MatrixFactorization::from_json("{}", None).is_err());
    }
}
