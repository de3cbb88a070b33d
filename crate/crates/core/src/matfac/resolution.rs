//! Free resolutions over hypersurface and complete-intersection quotients,
//! computed through lifted module Groebner bases: eventual 2-periodicity
//! detection, extraction of the matrix factorization from the periodic
//! tail, Eisenbud operators with their exact division certificate, and the
//! nilpotence probe on segment cohomology.

use num_traits::Zero;

use crate::error::Error;
use crate::groebner::{express_in_generators, syzygies, Budget, Dim, Ideal, ModuleBasis};
use crate::groebner::{Submodule};
use crate::linalg::QMat;
use crate::matfac::{MatrixFactorization, PMat};
use crate::poly::{ModuleOrder, MonomialOrder, PolyRing, Polynomial, Rat};
use crate::Result;

#[derive(Debug, Clone)]
pub enum ResolutionOutcome {
    /// Consecutive lifted matrices satisfy the factorization identity
    /// (after a constant change of basis); `index` is the first stage.
    Periodic {
        index: usize,
        mf: MatrixFactorization,
    },
    /// The syzygies ran out: the module has a finite free resolution.
    Terminated { steps: usize },
    NotDetected,
}

#[derive(Debug, Clone)]
pub struct ResolutionReport {
    /// Lifted differentials; entry `k` maps `F_{k+1} -> F_k`.
    pub matrices: Vec<PMat>,
    pub outcome: ResolutionOutcome,
}

/// Normal form of every entry against the quotient ideal.
fn reduce_matrix(m: &PMat, gb: &crate::groebner::GroebnerBasis) -> PMat {
    m.map(|p| gb.normal_form(p))
}

/// Syzygies of the columns of `m` over `Q[x]/(quotient)`, lifted to `Q[x]`:
/// the first block of the syzygies of `[m | q_1 I | q_2 I | ...]`.
fn syzygies_over_quotient(
    m: &PMat,
    quotient: &[Polynomial],
    ring: &PolyRing,
    budget: &Budget,
) -> Result<Vec<Vec<Polynomial>>> {
    let rows = m.rows;
    let cols = m.cols;
    let mut aug_rows: Vec<Vec<Polynomial>> = Vec::with_capacity(rows);
    for i in 0..rows {
        let mut row: Vec<Polynomial> = m.row(i).to_vec();
        for q in quotient {
            for r in 0..rows {
                row.push(if r == i { q.clone() } else { ring.zero() });
            }
        }
        aug_rows.push(row);
    }
    let syz = syzygies(ring, &aug_rows, budget)?;
    let gens: Vec<Vec<Polynomial>> = syz
        .generators()
        .iter()
        .map(|v| v[..cols].to_vec())
        .filter(|v| v.iter().any(|p| !p.is_zero()))
        .collect();
    Ok(gens)
}

/// Module membership over the quotient: is `col` generated by `others`
/// together with `quotient * free`?
fn column_in_span(
    col: &[Polynomial],
    others: &[Vec<Polynomial>],
    quotient: &[Polynomial],
    ring: &PolyRing,
    budget: &Budget,
) -> Result<bool> {
    let rank = col.len();
    let mut gens: Vec<Vec<Polynomial>> = others.to_vec();
    for q in quotient {
        for r in 0..rank {
            let mut v = vec![ring.zero(); rank];
            v[r] = q.clone();
            gens.push(v);
        }
    }
    let sub = Submodule::new(
        ring.clone(),
        rank,
        gens,
        ModuleOrder::Pot(MonomialOrder::GrevLex),
    )?;
    let gb: std::sync::Arc<ModuleBasis> = sub.groebner_basis(budget)?;
    Ok(gb.contains(col))
}

/// Drop columns lying in the span of the remaining ones (over the quotient).
fn trim_columns(
    mut cols: Vec<Vec<Polynomial>>,
    quotient: &[Polynomial],
    ring: &PolyRing,
    budget: &Budget,
) -> Result<Vec<Vec<Polynomial>>> {
    let mut i = 0;
    while i < cols.len() {
        let mut others = cols.clone();
        others.remove(i);
        if column_in_span(&cols[i], &others, quotient, ring, budget)? {
            cols.remove(i);
        } else {
            i += 1;
        }
    }
    Ok(cols)
}

fn columns_to_matrix(ring: &PolyRing, rows: usize, cols: &[Vec<Polynomial>]) -> Result<PMat> {
    let mut m = PMat::zero(ring.clone(), rows, cols.len());
    for (j, col) in cols.iter().enumerate() {
        for i in 0..rows {
            m.set(i, j, col[i].clone());
        }
    }
    Ok(m)
}

/// Split a nonzero rational constant out of the matrix pair: a unit entry
/// of `cur` lets a free summand cancel; `prev` loses the matching column.
fn eliminate_units(prev: &mut PMat, cur: &mut PMat) -> Result<()> {
    'scan: loop {
        for i in 0..cur.rows {
            for j in 0..cur.cols {
                let e = cur.at(i, j);
                if e.is_zero() || !e.is_constant() {
                    continue;
                }
                let c = e.constant_term();
                // column operations on cur clear row i
                for j2 in 0..cur.cols {
                    if j2 == j || cur.at(i, j2).is_zero() {
                        continue;
                    }
                    let factor = cur.at(i, j2).scale(&c.recip());
                    for r in 0..cur.rows {
                        let sub = cur.at(r, j).mul(&factor)?;
                        cur.set(r, j2, cur.at(r, j2).sub(&sub)?);
                    }
                }
                // row operations on cur clear column j; compensate on prev
                for i2 in 0..cur.rows {
                    if i2 == i || cur.at(i2, j).is_zero() {
                        continue;
                    }
                    let factor = cur.at(i2, j).scale(&c.recip());
                    for cc in 0..cur.cols {
                        let sub = cur.at(i, cc).mul(&factor)?;
                        cur.set(i2, cc, cur.at(i2, cc).sub(&sub)?);
                    }
                    // basis change in the middle module: fix prev columns
                    for rr in 0..prev.rows {
                        let add = prev.at(rr, i2).mul(&factor)?;
                        prev.set(rr, i, prev.at(rr, i).add(&add)?);
                    }
                }
                *cur = cur.delete_row_col(i, j);
                *prev = prev.delete_col(i);
                continue 'scan;
            }
        }
        return Ok(());
    }
}

/// Try to correct `b` by a constant-determinant change of basis so that
/// `a * b = w * I` and `b * a = w * I` hold exactly; returns the validated
/// factorization when possible.
fn extract_mf(
    a: &PMat,
    b: &PMat,
    w: &Polynomial,
    w_gb: &crate::groebner::GroebnerBasis,
) -> Option<MatrixFactorization> {
    if a.rows != a.cols || b.rows != b.cols || a.rows != b.rows || a.rows == 0 {
        return None;
    }
    let prod = a.mul(b).ok()?;
    // every entry must be a scalar multiple of w
    let n = a.rows;
    let mut c = PMat::zero(a.ring.clone(), n, n);
    for i in 0..n {
        for j in 0..n {
            let (q, rem) = w_gb.divide(prod.at(i, j));
            if !rem.is_zero() {
                return None;
            }
            c.set(i, j, q.into_iter().next().unwrap());
        }
    }
    let det = c.det().ok()?;
    if det.is_zero() || !det.is_constant() {
        return None;
    }
    // scale the quotient back: w_gb stores the monic form of w
    let lead = w.leading_term(&MonomialOrder::GrevLex)?.1.clone();
    let c = c.scale(&lead.recip());
    let det = c.det().ok()?;
    if det.is_zero() {
        return None;
    }
    let adj = c.adjugate().ok()?;
    let b2 = b.mul(&adj).ok()?.scale(&det.constant_term().recip());
    let mf = MatrixFactorization::new(w.clone(), a.clone(), b2).ok()?;
    mf.validate().ok.then_some(mf)
}

/// Successive syzygy matrices of a module over `Q[x]/(w)`, minimized, with
/// detection of the 2-periodic tail by the factorization identity.
pub fn resolution_over_hypersurface(
    w: &Polynomial,
    presentation: &PMat,
    steps: usize,
    budget: &Budget,
) -> Result<ResolutionReport> {
    if steps < 2 {
        return Err(Error::Invalid("need at least two resolution steps".into()));
    }
    if w.is_zero() {
        return Err(Error::Invalid("zero potential has no hypersurface".into()));
    }
    let ring = w.ring().clone();
    let w_ideal = Ideal::new(ring.clone(), vec![w.clone()]);
    let w_gb = w_ideal.groebner_basis(&MonomialOrder::GrevLex, budget)?;
    let quotient = vec![w.clone()];

    let mut matrices: Vec<PMat> = vec![reduce_matrix(presentation, &w_gb)];
    for step in 1..=steps {
        let cur = matrices.last().unwrap().clone();
        if cur.cols == 0 {
            return Ok(ResolutionReport {
                matrices,
                outcome: ResolutionOutcome::Terminated { steps: step - 1 },
            });
        }
        let raw = syzygies_over_quotient(&cur, &quotient, &ring, budget)?;
        let trimmed = trim_columns(raw, &quotient, &ring, budget)?;
        if trimmed.is_empty() {
            return Ok(ResolutionReport {
                matrices,
                outcome: ResolutionOutcome::Terminated { steps: step },
            });
        }
        let mut next = columns_to_matrix(&ring, cur.cols, &trimmed)?;
        next = reduce_matrix(&next, &w_gb);
        {
            let prev = matrices.last_mut().unwrap();
            eliminate_units(prev, &mut next)?;
        }
        if next.cols == 0 {
            return Ok(ResolutionReport {
                matrices,
                outcome: ResolutionOutcome::Terminated { steps: step },
            });
        }
        matrices.push(next);
        let k = matrices.len() - 2;
        if let Some(mf) = extract_mf(&matrices[k], &matrices[k + 1], w, &w_gb) {
            return Ok(ResolutionReport {
                matrices,
                outcome: ResolutionOutcome::Periodic { index: k, mf },
            });
        }
    }
    Ok(ResolutionReport {
        matrices,
        outcome: ResolutionOutcome::NotDetected,
    })
}

/// The matrix factorization carried by the 2-periodic tail, when detected.
pub fn mf_from_module(
    w: &Polynomial,
    presentation: &PMat,
    steps: usize,
    budget: &Budget,
) -> Result<Option<MatrixFactorization>> {
    let report = resolution_over_hypersurface(w, presentation, steps, budget)?;
    Ok(match report.outcome {
        ResolutionOutcome::Periodic { mf, .. } => Some(mf),
        _ => None,
    })
}

/// Eisenbud operators of a module over a complete-intersection quotient:
/// a resolution segment, the lifted differentials, and for each relation a
/// degree `-2` family with the exact certificate `d~^2 = sum f_j t~_j`.
#[derive(Debug, Clone)]
pub struct EisenbudOperators {
    pub relations: Vec<Polynomial>,
    /// Lifted differentials, entry k maps `F_{k+1} -> F_k`.
    pub differentials: Vec<PMat>,
    /// `operators[j][k]`: the j-th operator at stage k, `F_{k+2} -> F_k`.
    pub operators: Vec<Vec<PMat>>,
    pub certificate_ok: bool,
    pub chain_maps_ok: bool,
    /// Resolution stopped early: the module has finite projective dimension
    /// over the quotient (operators act by zero on the stable category).
    pub terminated: bool,
}

fn check_regular_prefixes(relations: &[Polynomial], ring: &PolyRing, budget: &Budget) -> Result<()> {
    let n = ring.arity() as i64;
    let mut seq = Vec::new();
    for (k, f) in relations.iter().enumerate() {
        seq.push(f.clone());
        let dim = Ideal::new(ring.clone(), seq.clone()).krull_dimension(budget)?;
        let expected = n - (k as i64 + 1);
        let ok = match dim {
            Dim::Empty => expected < 0,
            Dim::Dim(d) => expected >= 0 && d as i64 == expected,
        };
        if !ok {
            return Err(Error::NotRegularSequence(format!(
                "prefix of length {} fails the codimension test",
                k + 1
            )));
        }
    }
    Ok(())
}

pub fn eisenbud_operators(
    relations: &[Polynomial],
    presentation: &PMat,
    segment_length: usize,
    budget: &Budget,
) -> Result<EisenbudOperators> {
    if relations.is_empty() {
        return Err(Error::Invalid("need at least one relation".into()));
    }
    let ring = relations[0].ring().clone();
    check_regular_prefixes(relations, &ring, budget)?;
    let rel_ideal = Ideal::new(ring.clone(), relations.to_vec());
    let rel_gb = rel_ideal.groebner_basis(&MonomialOrder::GrevLex, budget)?;

    let mut differentials: Vec<PMat> = vec![reduce_matrix(presentation, &rel_gb)];
    let mut terminated = false;
    for _ in 1..segment_length {
        let cur = differentials.last().unwrap().clone();
        if cur.cols == 0 {
            terminated = true;
            break;
        }
        let raw = syzygies_over_quotient(&cur, relations, &ring, budget)?;
        let trimmed = trim_columns(raw, relations, &ring, budget)?;
        if trimmed.is_empty() {
            terminated = true;
            break;
        }
        let mut next = columns_to_matrix(&ring, cur.cols, &trimmed)?;
        next = reduce_matrix(&next, &rel_gb);
        {
            let prev = differentials.last_mut().unwrap();
            eliminate_units(prev, &mut next)?;
        }
        if next.cols == 0 {
            terminated = true;
            break;
        }
        differentials.push(next);
    }

    let stages = differentials.len().saturating_sub(1);
    let mut operators: Vec<Vec<PMat>> = vec![Vec::new(); relations.len()];
    let mut certificate_ok = true;
    for k in 0..stages {
        let composite = differentials[k].mul(&differentials[k + 1])?;
        let mut t_k: Vec<PMat> =
            vec![
                PMat::zero(ring.clone(), composite.rows, composite.cols);
                relations.len()
            ];
        for i in 0..composite.rows {
            for j in 0..composite.cols {
                let entry = composite.at(i, j);
                if entry.is_zero() {
                    continue;
                }
                let Some(cof) = express_in_generators(entry, relations, &ring, budget)? else {
                    return Err(Error::Invalid(
                        "squared differential escaped the relation ideal".into(),
                    ));
                };
                for (t, q) in t_k.iter_mut().zip(cof) {
                    t.set(i, j, q);
                }
            }
        }
        // exact certificate: composite = sum f_j * t~_j
        let mut rebuilt = PMat::zero(ring.clone(), composite.rows, composite.cols);
        for (f, t) in relations.iter().zip(&t_k) {
            let scaled = t.map(|p| p.mul(f).expect("same ring"));
            rebuilt = rebuilt.add(&scaled)?;
        }
        if rebuilt != composite {
            certificate_ok = false;
        }
        for (j, t) in t_k.into_iter().enumerate() {
            operators[j].push(reduce_matrix(&t, &rel_gb));
        }
    }

    // chain-map verification over the quotient, on the overlap
    let mut chain_maps_ok = true;
    for ops in &operators {
        for k in 1..ops.len() {
            if k + 1 >= differentials.len() {
                break;
            }
            let lhs = differentials[k - 1].mul(&ops[k])?;
            let rhs = ops[k - 1].mul(&differentials[k + 1])?;
            let diff = reduce_matrix(&lhs.sub(&rhs)?, &rel_gb);
            if !diff.is_zero() {
                chain_maps_ok = false;
            }
        }
    }

    Ok(EisenbudOperators {
        relations: relations.to_vec(),
        differentials,
        operators,
        certificate_ok,
        chain_maps_ok,
        terminated,
    })
}

impl EisenbudOperators {
    /// Scalar complex `Hom(F_*, k)` at the origin: differential k is the
    /// transpose of `d_k` evaluated at zero.
    fn hom_complex_at_origin(&self) -> Vec<QMat> {
        self.differentials
            .iter()
            .map(|d| {
                let mut m = QMat::zero(d.cols, d.rows);
                for i in 0..d.rows {
                    for j in 0..d.cols {
                        m.set(j, i, d.at(i, j).constant_term());
                    }
                }
                m
            })
            .collect()
    }

    fn operator_at_origin(&self, j: usize) -> Vec<QMat> {
        self.operators[j]
            .iter()
            .map(|t| {
                let mut m = QMat::zero(t.cols, t.rows);
                for i in 0..t.rows {
                    for c in 0..t.cols {
                        m.set(c, i, t.at(i, c).constant_term());
                    }
                }
                m
            })
            .collect()
    }

    /// Does the commutator of two operators vanish on the cohomology of
    /// `Hom(segment, k)`?
    pub fn commutator_vanishes_on_cohomology(&self, j1: usize, j2: usize) -> bool {
        let hom = self.hom_complex_at_origin();
        let t1 = self.operator_at_origin(j1);
        let t2 = self.operator_at_origin(j2);
        let max_i = hom.len();
        for i in 0..max_i {
            // commutator from Hom(F_i) to Hom(F_{i+4})
            if i + 2 >= t1.len() || i + 2 >= t2.len() {
                break;
            }
            let a = t1[i + 2].mul(&t2[i]);
            let b = t2[i + 2].mul(&t1[i]);
            let comm_rows = a.rows;
            let mut comm = QMat::zero(comm_rows, a.cols);
            for r in 0..comm_rows {
                for c in 0..a.cols {
                    comm.set(r, c, a.at(r, c) - b.at(r, c));
                }
            }
            if !map_vanishes_on_cohomology(&hom, i, i + 4, &comm) {
                return false;
            }
        }
        true
    }
}

/// `map`: Hom(F_from) -> Hom(F_to) chain-level. Vanishes on cohomology iff
/// it sends `ker(from differential)` into `im(previous differential at to)`.
fn map_vanishes_on_cohomology(hom: &[QMat], from: usize, to: usize, map: &QMat) -> bool {
    // kernel at `from`: hom[from] (map out of Hom(F_from)) must exist for a
    // cohomology statement; when absent treat every vector as a cycle.
    let dim_from = map.cols;
    let cycles: Vec<Vec<Rat>> = if from < hom.len() {
        hom[from].kernel()
    } else {
        (0..dim_from)
            .map(|i| {
                let mut v = vec![Rat::zero(); dim_from];
                v[i] = num_traits::One::one();
                v
            })
            .collect()
    };
    if cycles.is_empty() {
        return true;
    }
    // boundaries at `to`: image of hom[to - 1]
    let img = if to >= 1 && to - 1 < hom.len() {
        Some(&hom[to - 1])
    } else {
        None
    };
    for v in &cycles {
        let mut w = vec![Rat::zero(); map.rows];
        for (r, wr) in w.iter_mut().enumerate() {
            for c in 0..map.cols {
                *wr += map.at(r, c) * &v[c];
            }
        }
        if w.iter().all(|x| x.is_zero()) {
            continue;
        }
        match img {
            None => return false,
            Some(b) => {
                // does w lie in the column span of b?
                let mut rows = Vec::with_capacity(b.rows);
                for i in 0..b.rows {
                    let mut row: Vec<Rat> = (0..b.cols).map(|j| b.at(i, j).clone()).collect();
                    row.push(w[i].clone());
                    rows.push(row);
                }
                let full = QMat::from_rows(rows);
                let base_rank = {
                    let mut rows = Vec::with_capacity(b.rows);
                    for i in 0..b.rows {
                        let row: Vec<Rat> = (0..b.cols).map(|j| b.at(i, j).clone()).collect();
                        rows.push(row);
                    }
                    QMat::from_rows(rows).rank()
                };
                if full.rank() != base_rank {
                    return false;
                }
            }
        }
    }
    true
}

/// Nilpotence probe for the operator attached to the last relation:
/// the smallest `N <= segment/2` with `t^N = 0` on segment cohomology.
#[derive(Debug, Clone)]
pub struct NilpotenceReport {
    pub detected: Option<usize>,
    pub max_checked: usize,
    pub zero_module: bool,
}

pub fn operator_nilpotence_probe(
    relations: &[Polynomial],
    g_extra: &Polynomial,
    presentation: &PMat,
    segment_length: usize,
    budget: &Budget,
) -> Result<NilpotenceReport> {
    let ring = g_extra.ring().clone();
    let mut all = relations.to_vec();
    all.push(g_extra.clone());

    // zero module: every unit vector already lies in the span
    let rank = presentation.rows;
    let cols: Vec<Vec<Polynomial>> = (0..presentation.cols)
        .map(|j| presentation.column(j))
        .collect();
    let mut zero_module = true;
    for i in 0..rank {
        let mut e = vec![ring.zero(); rank];
        e[i] = ring.one();
        if !column_in_span(&e, &cols, &all, &ring, budget)? {
            zero_module = false;
            break;
        }
    }
    if zero_module {
        return Ok(NilpotenceReport {
            detected: Some(0),
            max_checked: 0,
            zero_module: true,
        });
    }

    let ops = eisenbud_operators(&all, presentation, segment_length, budget)?;
    let hom = ops.hom_complex_at_origin();
    let tbar = ops.operator_at_origin(all.len() - 1);
    let max_n = segment_length / 2;
    let mut checked = 0usize;
    for n in 1..=max_n {
        let mut testable = false;
        let mut all_zero = true;
        for i in 0..hom.len() {
            // composite t^n from Hom(F_i) into Hom(F_{i+2n})
            if i + 2 * (n - 1) >= tbar.len() {
                break;
            }
            let mut comp = tbar[i].clone();
            let mut valid = true;
            for step in 1..n {
                let idx = i + 2 * step;
                if idx >= tbar.len() {
                    valid = false;
                    break;
                }
                comp = tbar[idx].mul(&comp);
            }
            if !valid {
                continue;
            }
            testable = true;
            if !map_vanishes_on_cohomology(&hom, i, i + 2 * n, &comp) {
                all_zero = false;
                break;
            }
        }
        if !testable {
            break;
        }
        checked = n;
        if all_zero {
            return Ok(NilpotenceReport {
                detected: Some(n),
                max_checked: checked,
                zero_module: false,
            });
        }
    }
    Ok(NilpotenceReport {
        detected: None,
        max_checked: checked,
        zero_module: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn budget() -> Budget {
        Budget::default()
    }

    fn pmat(ring: &PolyRing, rows: &[&[&str]]) -> PMat {
        PMat::new(
            ring.clone(),
            rows.iter()
                .map(|r| r.iter().map(|s| ring.parse(s).unwrap()).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn immediate_periodicity_over_x_squared() {
        let r = PolyRing::with_vars(&["x"]);
        let w = r.parse("x^2").unwrap();
        let m = pmat(&r, &[&["x"]]);
        let report = resolution_over_hypersurface(&w, &m, 6, &budget()).unwrap();
        let ResolutionOutcome::Periodic { index, mf } = &report.outcome else {
            panic!("expected periodicity, got {:?}", report.outcome);
        };
        assert_eq!(*index, 0);
        assert!(mf.validate().ok);
        assert_eq!(mf.rank(), 1);
        assert_eq!(mf.delta0().at(0, 0), &r.parse("x").unwrap());
        assert_eq!(mf.delta1().at(0, 0), &r.parse("x").unwrap());
    }

    #[test]
    fn alternating_pair_over_xy() {
        let r = PolyRing::with_vars(&["x", "y"]);
        let w = r.parse("x*y").unwrap();
        let m = pmat(&r, &[&["x"]]);
        let mf = mf_from_module(&w, &m, 6, &budget()).unwrap().expect("periodic");
        assert!(mf.validate().ok);
        assert_eq!(mf.potential(), &w);
        assert_eq!(mf.rank(), 1);
        // the alternation x, y
        assert_eq!(mf.delta0().at(0, 0), &r.parse("x").unwrap());
        assert_eq!(mf.delta1().at(0, 0), &r.parse("y").unwrap());
    }

    #[test]
    fn cusp_point_module() {
        let r = PolyRing::with_vars(&["x", "y"]);
        let w = r.parse("x^2 + y^3").unwrap();
        let m = pmat(&r, &[&["x", "y"]]);
        let report = resolution_over_hypersurface(&w, &m, 4, &budget()).unwrap();
        let ResolutionOutcome::Periodic { mf, .. } = &report.outcome else {
            panic!("expected periodicity within 4 steps, got {:?}", report.outcome);
        };
        assert!(mf.validate().ok);
        assert_eq!(mf.potential(), &w);
    }

    #[test]
    fn nodal_point_module() {
        let r = PolyRing::with_vars(&["x", "y"]);
        let w = r.parse("x^2 + y^2").unwrap();
        let m = pmat(&r, &[&["x", "y"]]);
        let mf = mf_from_module(&w, &m, 4, &budget()).unwrap().expect("periodic");
        assert!(mf.validate().ok);
        assert_eq!(mf.potential(), &w);
        assert_eq!(mf.rank(), 2);
    }

    #[test]
    fn free_module_terminates() {
        let r = PolyRing::with_vars(&["x"]);
        let w = r.parse("x^2").unwrap();
        // presentation of the zero map: cokernel is free
        let m = pmat(&r, &[&["0"]]);
        let report = resolution_over_hypersurface(&w, &m, 4, &budget()).unwrap();
        assert!(matches!(
            report.outcome,
            ResolutionOutcome::Terminated { .. }
        ));
    }

    #[test]
    fn eisenbud_single_relation_identity_operator() {
        let r = PolyRing::with_vars(&["x"]);
        let m = pmat(&r, &[&["x"]]);
        let ops = eisenbud_operators(&[r.parse("x^2").unwrap()], &m, 6, &budget()).unwrap();
        assert!(ops.certificate_ok);
        assert!(ops.chain_maps_ok);
        assert!(!ops.terminated);
        for t in &ops.operators[0] {
            assert_eq!(t.rows, 1);
            assert_eq!(t.at(0, 0), &r.one());
        }
    }

    #[test]
    fn eisenbud_two_relations_commute_on_cohomology() {
        let r = PolyRing::with_vars(&["x", "y"]);
        let f = vec![r.parse("x^2").unwrap(), r.parse("y^2").unwrap()];
        let m = pmat(&r, &[&["x", "y"]]);
        let ops = eisenbud_operators(&f, &m, 8, &budget()).unwrap();
        assert!(ops.certificate_ok);
        assert!(ops.chain_maps_ok);
        assert_eq!(ops.operators.len(), 2);
        assert!(ops.commutator_vanishes_on_cohomology(0, 1));
    }

    #[test]
    fn eisenbud_field_case_terminates() {
        let r = PolyRing::with_vars(&["x"]);
        // over Q[x]/(x) the module Q[x]/(x) is free: resolution stops
        let m = pmat(&r, &[&["x"]]);
        let ops = eisenbud_operators(&[r.parse("x").unwrap()], &m, 6, &budget()).unwrap();
        assert!(ops.terminated);
        for family in &ops.operators {
            for t in family {
                assert!(t.is_zero());
            }
        }
    }

    #[test]
    fn nilpotence_detected_for_base_change() {
        let r = PolyRing::with_vars(&["x", "y"]);
        // module Q[x]/(x) base-changed along Q[x]/(x^2) -> Q[x,y]/(x^2,y^2)
        let m = pmat(&r, &[&["x"]]);
        let report = operator_nilpotence_probe(
            &[r.parse("x^2").unwrap()],
            &r.parse("y^2").unwrap(),
            &m,
            8,
            &budget(),
        )
        .unwrap();
        assert_eq!(report.detected, Some(1), "report: {report:?}");
    }

    #[test]
    fn nilpotence_not_detected_for_residue_field() {
        let r = PolyRing::with_vars(&["x", "y"]);
        let m = pmat(&r, &[&["x", "y"]]);
        let report = operator_nilpotence_probe(
            &[r.parse("x^2").unwrap()],
            &r.parse("y^2").unwrap(),
            &m,
            8,
            &budget(),
        )
        .unwrap();
        assert_eq!(report.detected, None, "report: {report:?}");
        assert!(report.max_checked >= 1);
    }

    #[test]
    fn nilpotence_zero_module() {
        let r = PolyRing::with_vars(&["x", "y"]);
        let m = pmat(&r, &[&["1", "0"], &["0", "1"]]);
        let report = operator_nilpotence_probe(
            &[r.parse("x^2").unwrap()],
            &r.parse("y^2").unwrap(),
            &m,
            6,
            &budget(),
        )
        .unwrap();
        assert_eq!(report.detected, Some(0));
        assert!(report.zero_module);
    }
}
