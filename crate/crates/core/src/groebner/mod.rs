//! Ideals and submodules with cached reduced Groebner bases, plus the
//! ideal-theoretic toolkit built on them: normal forms, elimination,
//! ideal quotient and saturation, Krull dimension, staircases and
//! quotient bases, syzygies, and module quotient dimensions.

pub(crate) mod engine;

use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::sync::{Arc, Mutex};

use serde::Serialize;

use crate::error::Error;
use crate::poly::{ModuleOrder, Monomial, MonomialOrder, PolyRing, Polynomial, Rat};
use crate::Result;

use engine::{buchberger, normal_form, normal_form_with_quotients, Vect};

/// Default cap on S-pairs processed per run.
pub const DEFAULT_S_PAIR_BUDGET: u64 = 2_000_000;

/// Shared computation budget. Cloning shares the underlying counter, so all
/// Groebner computations of one run draw from the same pool of S-pairs.
#[derive(Debug, Clone)]
pub struct Budget {
    max: u64,
    spent: Arc<AtomicU64>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_S_PAIR_BUDGET)
    }
}

impl Budget {
    pub fn new(max: u64) -> Self {
        Budget {
            max,
            spent: Arc::new(AtomicU64::new(0)),
        }
    }

    pub fn spent(&self) -> u64 {
        self.spent.load(AtomicOrdering::Relaxed)
    }

    pub fn charge(&self, n: u64) -> Result<()> {
        let before = self.spent.fetch_add(n, AtomicOrdering::Relaxed);
        if before + n > self.max {
            Err(Error::BudgetExceeded { spent: before + n })
        } else {
            Ok(())
        }
    }
}

/// Krull dimension of a vanishing locus; `Empty` when the ideal is the
/// whole ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Dim {
    #[serde(rename = "empty")]
    Empty,
    #[serde(untagged)]
    Dim(usize),
}

impl Dim {
    pub fn as_usize(&self) -> Option<usize> {
        match self {
            Dim::Empty => None,
            Dim::Dim(d) => Some(*d),
        }
    }
}

/// A reduced Groebner basis for a fixed monomial order.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ring: PolyRing,
    order: MonomialOrder,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant() && !self.elements[0].is_zero()
    }

    fn module_order(&self) -> ModuleOrder {
        ModuleOrder::Top(self.order.clone())
    }

    fn vects(&self) -> Vec<Vect> {
        let ord = self.module_order();
        self.elements
            .iter()
            .map(|p| Vect::from_poly(p, &ord))
            .collect()
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        let ord = self.module_order();
        let v = Vect::from_poly(p, &ord);
        normal_form(&v, &self.vects(), &ord)
            .to_polys(&self.ring, 1)
            .pop()
            .unwrap()
    }

    /// Quotients against the basis elements along with the remainder.
    pub fn divide(&self, p: &Polynomial) -> (Vec<Polynomial>, Polynomial) {
        let ord = self.module_order();
        let v = Vect::from_poly(p, &ord);
        let (quots, rem) = normal_form_with_quotients(&v, &self.vects(), &ord);
        let qs = quots
            .into_iter()
            .map(|q| Polynomial::from_terms(self.ring.clone(), q))
            .collect();
        (qs, rem.to_polys(&self.ring, 1).pop().unwrap())
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .filter_map(|p| p.leading_term(&self.order).map(|(m, _)| m.clone()))
            .collect()
    }

    /// Dimension of the vanishing locus, via maximal sets of variables
    /// independent modulo the leading-term ideal.
    pub fn dimension(&self) -> Dim {
        if self.is_unit_ideal() {
            return Dim::Empty;
        }
        let n = self.ring.arity();
        let supports: Vec<u64> = self
            .leading_monomials()
            .iter()
            .map(|m| {
                let mut mask = 0u64;
                for i in m.support() {
                    mask |= 1 << i;
                }
                mask
            })
            .collect();
        let mut best = 0usize;
        // DFS over subsets of variables; a set is independent when no
        // leading-term support is contained in it.
        fn go(i: usize, n: usize, mask: u64, size: usize, supports: &[u64], best: &mut usize) {
            if size + (n - i) <= *best {
                return;
            }
            if i == n {
                *best = (*best).max(size);
                return;
            }
            let with = mask | (1 << i);
            if supports.iter().all(|s| s & !with != 0) {
                go(i + 1, n, with, size + 1, supports, best);
            }
            go(i + 1, n, mask, size, supports, best);
        }
        go(0, n, 0, 0, &supports, &mut best);
        Dim::Dim(best)
    }

    /// Staircase of the leading-term ideal.
    pub fn staircase(&self) -> Staircase {
        let leads = self.leading_monomials();
        let n = self.ring.arity();
        if self.is_unit_ideal() {
            return Staircase {
                lead_terms: leads,
                monomials: StandardMonomials::Finite(vec![]),
            };
        }
        // finite iff every variable has a pure-power leading term
        let mut bounds = vec![None; n];
        for m in &leads {
            let supp: Vec<usize> = m.support().collect();
            if supp.is_empty() {
                // constant lead: unit ideal, handled above
                continue;
            }
            if supp.len() == 1 {
                let i = supp[0];
                let e = m.exponents()[i];
                bounds[i] = Some(bounds[i].map_or(e, |b: u32| b.min(e)));
            }
        }
        if n > 0 && bounds.iter().any(|b| b.is_none()) {
            return Staircase {
                lead_terms: leads,
                monomials: StandardMonomials::Infinite,
            };
        }
        let bounds: Vec<u32> = bounds.into_iter().map(|b| b.unwrap_or(1)).collect();
        let mut out: Vec<Monomial> = Vec::new();
        let mut exps = vec![0u32; n];
        loop {
            let m = Monomial::new(exps.clone());
            if !leads.iter().any(|l| l.divides(&m)) {
                out.push(m);
            }
            // odometer
            let mut i = 0;
            loop {
                if i == n {
                    // sort by degree, then earlier variables first
                    out.sort_by(|a, b| {
                        a.degree()
                            .cmp(&b.degree())
                            .then_with(|| b.exponents().cmp(a.exponents()))
                    });
                    return Staircase {
                        lead_terms: leads,
                        monomials: StandardMonomials::Finite(out),
                    };
                }
                exps[i] += 1;
                if exps[i] < bounds[i] {
                    break;
                }
                exps[i] = 0;
                i += 1;
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StandardMonomials {
    Finite(Vec<Monomial>),
    Infinite,
}

/// Standard monomials outside a leading-term ideal; a vector-space basis of
/// the quotient when finite.
#[derive(Debug, Clone)]
pub struct Staircase {
    pub lead_terms: Vec<Monomial>,
    pub monomials: StandardMonomials,
}

impl Staircase {
    pub fn dimension(&self) -> Option<usize> {
        match &self.monomials {
            StandardMonomials::Finite(v) => Some(v.len()),
            StandardMonomials::Infinite => None,
        }
    }
}

/// An ideal with generators and a write-once cached reduced basis.
#[derive(Debug)]
pub struct Ideal {
    ring: PolyRing,
    generators: Vec<Polynomial>,
    cache: Mutex<Option<(MonomialOrder, Arc<GroebnerBasis>)>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl Ideal {
    pub fn new(ring: PolyRing, generators: Vec<Polynomial>) -> Self {
        debug_assert!(generators.iter().all(|g| g.ring().same_ring(&ring)));
        Ideal {
            ring,
            generators,
            cache: Mutex::new(None),
        }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn unit(ring: PolyRing) -> Self {
        let one = ring.one();
        Ideal::new(ring, vec![one])
    }

    /// Reduced Groebner basis under `order`. The first computed basis is
    /// cached; requests for other orders are computed afresh.
    pub fn groebner_basis(
        &self,
        order: &MonomialOrder,
        budget: &Budget,
    ) -> Result<Arc<GroebnerBasis>> {
        {
            let cache = self.cache.lock().unwrap();
            if let Some((o, gb)) = cache.as_ref() {
                if o == order {
                    return Ok(gb.clone());
                }
            }
        }
        let ord = ModuleOrder::Top(order.clone());
        let vects: Vec<Vect> = self
            .generators
            .iter()
            .map(|p| Vect::from_poly(p, &ord))
            .collect();
        let out = buchberger(vects, &ord, true, budget)?;
        let elements: Vec<Polynomial> = out
            .iter()
            .map(|v| v.to_polys(&self.ring, 1).pop().unwrap())
            .collect();
        let gb = Arc::new(GroebnerBasis {
            ring: self.ring.clone(),
            order: order.clone(),
            elements,
        });
        let mut cache = self.cache.lock().unwrap();
        if cache.is_none() {
            *cache = Some((order.clone(), gb.clone()));
        }
        Ok(gb)
    }

    fn default_gb(&self, budget: &Budget) -> Result<Arc<GroebnerBasis>> {
        self.groebner_basis(&MonomialOrder::GrevLex, budget)
    }

    pub fn normal_form(&self, p: &Polynomial, budget: &Budget) -> Result<Polynomial> {
        Ok(self.default_gb(budget)?.normal_form(p))
    }

    pub fn contains(&self, p: &Polynomial, budget: &Budget) -> Result<bool> {
        Ok(self.default_gb(budget)?.contains(p))
    }

    pub fn is_subset_of(&self, other: &Ideal, budget: &Budget) -> Result<bool> {
        let gb = other.default_gb(budget)?;
        Ok(self.generators.iter().all(|g| gb.contains(g)))
    }

    pub fn equals(&self, other: &Ideal, budget: &Budget) -> Result<bool> {
        Ok(self.is_subset_of(other, budget)? && other.is_subset_of(self, budget)?)
    }

    pub fn krull_dimension(&self, budget: &Budget) -> Result<Dim> {
        Ok(self.default_gb(budget)?.dimension())
    }

    pub fn quotient_basis(&self, budget: &Budget) -> Result<Staircase> {
        Ok(self.default_gb(budget)?.staircase())
    }

    /// `I ∩ Q[keep]` via a block elimination order; the result lives in the
    /// subring on `keep` (in the given order).
    pub fn elimination_ideal(&self, keep: &[String], budget: &Budget) -> Result<Ideal> {
        for k in keep {
            if self.ring.var_index(k).is_none() {
                return Err(Error::NoSuchVariable { name: k.clone() });
            }
        }
        let eliminated: Vec<String> = self
            .ring
            .vars()
            .iter()
            .filter(|v| !keep.contains(v))
            .cloned()
            .collect();
        let block = eliminated.len();
        let mut new_vars = eliminated;
        new_vars.extend(keep.iter().cloned());
        let work_ring = PolyRing::new(new_vars, MonomialOrder::Elimination { block })?;
        let order = MonomialOrder::Elimination { block };
        let gens: Vec<Polynomial> = self
            .generators
            .iter()
            .map(|p| p.embed(&work_ring))
            .collect::<Result<_>>()?;
        let work_ideal = Ideal::new(work_ring.clone(), gens);
        let gb = work_ideal.groebner_basis(&order, budget)?;
        let keep_ring = PolyRing::new(keep.to_vec(), MonomialOrder::GrevLex)?;
        let kept: Vec<Polynomial> = gb
            .elements()
            .iter()
            .filter(|p| {
                p.terms().iter().all(|(m, _)| {
                    m.exponents()[..block].iter().all(|&e| e == 0)
                })
            })
            .map(|p| p.project(&keep_ring))
            .collect::<Result<_>>()?;
        Ok(Ideal::new(keep_ring, kept))
    }

    /// Ideal intersection via the standard one-extra-variable construction.
    pub fn intersect(&self, other: &Ideal, budget: &Budget) -> Result<Ideal> {
        let t = fresh_name(&self.ring, "t");
        let mut vars = vec![t.clone()];
        vars.extend(self.ring.vars().iter().cloned());
        let big = PolyRing::new(vars, MonomialOrder::Elimination { block: 1 })?;
        let tv = big.var_named(&t)?;
        let one_minus_t = big.one().sub(&tv)?;
        let mut gens = Vec::new();
        for g in &self.generators {
            gens.push(tv.mul(&g.embed(&big)?)?);
        }
        for g in &other.generators {
            gens.push(one_minus_t.mul(&g.embed(&big)?)?);
        }
        let joined = Ideal::new(big, gens);
        let elim = joined.elimination_ideal(self.ring.vars(), budget)?;
        elim.into_ring(&self.ring)
    }

    fn into_ring(self, ring: &PolyRing) -> Result<Ideal> {
        let gens = self
            .generators
            .iter()
            .map(|p| p.embed(ring))
            .collect::<Result<_>>()?;
        Ok(Ideal::new(ring.clone(), gens))
    }

    /// Ideal quotient `I : (g)` for a single polynomial.
    pub fn quotient_single(&self, g: &Polynomial, budget: &Budget) -> Result<Ideal> {
        if g.is_zero() {
            return Ok(Ideal::unit(self.ring.clone()));
        }
        let principal = Ideal::new(self.ring.clone(), vec![g.clone()]);
        let meet = self.intersect(&principal, budget)?;
        // every generator of I ∩ (g) is divisible by g
        let mut gens = Vec::new();
        let gb_g = GroebnerBasis {
            ring: self.ring.clone(),
            order: MonomialOrder::GrevLex,
            elements: vec![g.scale(&g.leading_term(&MonomialOrder::GrevLex).unwrap().1.recip())],
        };
        for h in meet.generators() {
            let (qs, rem) = gb_g.divide(h);
            debug_assert!(rem.is_zero(), "intersection member not divisible");
            let lead = g.leading_term(&MonomialOrder::GrevLex).unwrap().1.clone();
            gens.push(qs.into_iter().next().unwrap().scale(&lead.recip()));
        }
        Ok(Ideal::new(self.ring.clone(), gens))
    }

    /// Ideal quotient `I : J = ∩ I : (g)` over the generators of `J`.
    pub fn quotient(&self, j: &Ideal, budget: &Budget) -> Result<Ideal> {
        let gens: Vec<&Polynomial> = j.generators.iter().filter(|g| !g.is_zero()).collect();
        if gens.is_empty() {
            return Ok(Ideal::unit(self.ring.clone()));
        }
        let mut acc = self.quotient_single(gens[0], budget)?;
        for g in &gens[1..] {
            let next = self.quotient_single(g, budget)?;
            acc = acc.intersect(&next, budget)?;
        }
        Ok(acc)
    }

    /// Saturation `I : J^∞` by iterated quotient with stabilization test,
    /// falling back to the extra-variable method if iteration drags on.
    pub fn saturation(&self, j: &Ideal, budget: &Budget) -> Result<Ideal> {
        const MAX_ITER: usize = 12;
        let mut current = self.clone();
        for _ in 0..MAX_ITER {
            let next = current.quotient(j, budget)?;
            if next.is_subset_of(&current, budget)? {
                return Ok(current);
            }
            current = next;
        }
        // Rabinowitsch fallback, one generator at a time
        let mut acc: Option<Ideal> = None;
        for g in j.generators.iter().filter(|g| !g.is_zero()) {
            let sat_g = self.saturation_single_rabinowitsch(g, budget)?;
            acc = Some(match acc {
                None => sat_g,
                Some(a) => a.intersect(&sat_g, budget)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Ideal::unit(self.ring.clone())))
    }

    fn saturation_single_rabinowitsch(
        &self,
        g: &Polynomial,
        budget: &Budget,
    ) -> Result<Ideal> {
        let y = fresh_name(&self.ring, "y");
        let mut vars = vec![y.clone()];
        vars.extend(self.ring.vars().iter().cloned());
        let big = PolyRing::new(vars, MonomialOrder::Elimination { block: 1 })?;
        let yv = big.var_named(&y)?;
        let mut gens: Vec<Polynomial> = self
            .generators
            .iter()
            .map(|p| p.embed(&big))
            .collect::<Result<_>>()?;
        gens.push(big.one().sub(&yv.mul(&g.embed(&big)?)?)?);
        let joined = Ideal::new(big, gens);
        let elim = joined.elimination_ideal(self.ring.vars(), budget)?;
        elim.into_ring(&self.ring)
    }
}

/// First name in `base, base0, base1, ...` not used by the ring.
pub(crate) fn fresh_name(ring: &PolyRing, base: &str) -> String {
    if ring.var_index(base).is_none() {
        return base.to_string();
    }
    let mut k = 0usize;
    loop {
        let cand = format!("{base}{k}");
        if ring.var_index(&cand).is_none() {
            return cand;
        }
        k += 1;
    }
}

/// A submodule of a free module `R^rank`, generated by column vectors.
#[derive(Debug)]
pub struct Submodule {
    ring: PolyRing,
    free_rank: usize,
    generators: Vec<Vec<Polynomial>>,
    order: ModuleOrder,
    cache: Mutex<Option<Arc<ModuleBasis>>>,
}

impl Clone for Submodule {
    fn clone(&self) -> Self {
        Submodule {
            ring: self.ring.clone(),
            free_rank: self.free_rank,
            generators: self.generators.clone(),
            order: self.order.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

/// Reduced module Groebner basis.
#[derive(Debug, Clone)]
pub struct ModuleBasis {
    ring: PolyRing,
    free_rank: usize,
    order: ModuleOrder,
    elements: Vec<Vec<Polynomial>>,
}

impl ModuleBasis {
    pub fn elements(&self) -> &[Vec<Polynomial>] {
        &self.elements
    }

    fn vects(&self) -> Vec<Vect> {
        self.elements
            .iter()
            .map(|v| Vect::from_columns(v, &self.order))
            .collect()
    }

    pub fn normal_form(&self, v: &[Polynomial]) -> Vec<Polynomial> {
        assert_eq!(v.len(), self.free_rank);
        let vect = Vect::from_columns(v, &self.order);
        normal_form(&vect, &self.vects(), &self.order).to_polys(&self.ring, self.free_rank)
    }

    pub fn contains(&self, v: &[Polynomial]) -> bool {
        self.normal_form(v).iter().all(|p| p.is_zero())
    }

    /// Leading terms as (component, monomial) pairs.
    pub fn leading_terms(&self) -> Vec<(usize, Monomial)> {
        self.elements
            .iter()
            .filter_map(|v| {
                let vect = Vect::from_columns(v, &self.order);
                vect.lead().map(|(c, m, _)| (*c as usize, m.clone()))
            })
            .collect()
    }

    /// Dimension of `R^rank / M` over the rationals, or None if infinite.
    pub fn quotient_dimension(&self) -> Option<usize> {
        let n = self.ring.arity();
        let mut per_comp: Vec<Vec<Monomial>> = vec![Vec::new(); self.free_rank];
        for (c, m) in self.leading_terms() {
            per_comp[c].push(m);
        }
        let mut total = 0usize;
        for leads in per_comp {
            if leads.iter().any(|m| m.is_one()) {
                continue; // component killed entirely
            }
            if n == 0 {
                total += 1;
                continue;
            }
            let mut bounds = vec![None; n];
            for m in &leads {
                let supp: Vec<usize> = m.support().collect();
                if supp.len() == 1 {
                    let i = supp[0];
                    let e = m.exponents()[i];
                    bounds[i] = Some(bounds[i].map_or(e, |b: u32| b.min(e)));
                }
            }
            if bounds.iter().any(|b| b.is_none()) {
                return None;
            }
            let bounds: Vec<u32> = bounds.into_iter().map(|b| b.unwrap()).collect();
            let mut exps = vec![0u32; n];
            'odo: loop {
                let m = Monomial::new(exps.clone());
                if !leads.iter().any(|l| l.divides(&m)) {
                    total += 1;
                }
                let mut i = 0;
                loop {
                    if i == n {
                        break 'odo;
                    }
                    exps[i] += 1;
                    if exps[i] < bounds[i] {
                        break;
                    }
                    exps[i] = 0;
                    i += 1;
                }
            }
        }
        Some(total)
    }
}

impl Submodule {
    pub fn new(
        ring: PolyRing,
        free_rank: usize,
        generators: Vec<Vec<Polynomial>>,
        order: ModuleOrder,
    ) -> Result<Self> {
        for g in &generators {
            if g.len() != free_rank {
                return Err(Error::DimensionMismatch(format!(
                    "generator has {} entries, free rank is {free_rank}",
                    g.len()
                )));
            }
        }
        Ok(Submodule {
            ring,
            free_rank,
            generators,
            order,
            cache: Mutex::new(None),
        })
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn generators(&self) -> &[Vec<Polynomial>] {
        &self.generators
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    pub fn groebner_basis(&self, budget: &Budget) -> Result<Arc<ModuleBasis>> {
        {
            let cache = self.cache.lock().unwrap();
            if let Some(gb) = cache.as_ref() {
                return Ok(gb.clone());
            }
        }
        let vects: Vec<Vect> = self
            .generators
            .iter()
            .map(|v| Vect::from_columns(v, &self.order))
            .collect();
        let rank_one = self.free_rank == 1;
        let out = buchberger(vects, &self.order, rank_one, budget)?;
        let elements: Vec<Vec<Polynomial>> = out
            .iter()
            .map(|v| v.to_polys(&self.ring, self.free_rank))
            .collect();
        let gb = Arc::new(ModuleBasis {
            ring: self.ring.clone(),
            free_rank: self.free_rank,
            order: self.order.clone(),
            elements,
        });
        let mut cache = self.cache.lock().unwrap();
        if cache.is_none() {
            *cache = Some(gb.clone());
        }
        Ok(gb)
    }

    /// dim_Q of `R^rank / self`, or None when infinite.
    pub fn quotient_dimension(&self, budget: &Budget) -> Result<Option<usize>> {
        Ok(self.groebner_basis(budget)?.quotient_dimension())
    }
}

/// Kernel of the map `R^s -> R^q` given by a `q x s` matrix (rows of
/// polynomials): generators of the syzygy module of the columns.
pub fn syzygies(
    ring: &PolyRing,
    matrix: &[Vec<Polynomial>],
    budget: &Budget,
) -> Result<Submodule> {
    let q = matrix.len();
    let s = matrix.first().map_or(0, |r| r.len());
    for row in matrix {
        if row.len() != s {
            return Err(Error::DimensionMismatch("ragged matrix".into()));
        }
    }
    let ord = ModuleOrder::Pot(MonomialOrder::GrevLex);
    // graph construction: (column_j, e_j) in R^(q+s)
    let mut gens: Vec<Vec<Polynomial>> = Vec::new();
    for j in 0..s {
        let mut v: Vec<Polynomial> = (0..q).map(|i| matrix[i][j].clone()).collect();
        for k in 0..s {
            v.push(if k == j { ring.one() } else { ring.zero() });
        }
        gens.push(v);
    }
    let graph = Submodule::new(ring.clone(), q + s, gens, ord.clone())?;
    let gb = graph.groebner_basis(budget)?;
    let mut syz: Vec<Vec<Polynomial>> = Vec::new();
    for el in gb.elements() {
        if el[..q].iter().all(|p| p.is_zero()) {
            syz.push(el[q..].to_vec());
        }
    }
    Submodule::new(ring.clone(), s, syz, ord)
}

/// Apply a matrix (rows) to a column vector of polynomials.
pub fn matrix_apply(
    matrix: &[Vec<Polynomial>],
    v: &[Polynomial],
    ring: &PolyRing,
) -> Result<Vec<Polynomial>> {
    let mut out = Vec::with_capacity(matrix.len());
    for row in matrix {
        let mut acc = ring.zero();
        for (a, x) in row.iter().zip(v) {
            acc = acc.add(&a.mul(x)?)?;
        }
        out.push(acc);
    }
    Ok(out)
}

/// Certificate membership: express `p` in terms of the listed generators
/// exactly, via a module Groebner basis of the graph `(g_i, e_i)`.
/// Returns None when `p` is not in the ideal.
pub fn express_in_generators(
    p: &Polynomial,
    gens: &[Polynomial],
    ring: &PolyRing,
    budget: &Budget,
) -> Result<Option<Vec<Polynomial>>> {
    let m = gens.len();
    let ord = ModuleOrder::Pot(MonomialOrder::GrevLex);
    let mut graph_gens = Vec::new();
    for (j, g) in gens.iter().enumerate() {
        let mut v = vec![g.clone()];
        for k in 0..m {
            v.push(if k == j { ring.one() } else { ring.zero() });
        }
        graph_gens.push(v);
    }
    let graph = Submodule::new(ring.clone(), 1 + m, graph_gens, ord.clone())?;
    let gb = graph.groebner_basis(budget)?;
    let mut target = vec![p.clone()];
    target.extend(std::iter::repeat_with(|| ring.zero()).take(m));
    let nf = gb.normal_form(&target);
    if !nf[0].is_zero() {
        return Ok(None);
    }
    // p - sum(q_i g_i) reduced to zero in the first slot: the tail of the
    // normal form carries minus the cofactors.
    let cofactors: Vec<Polynomial> = nf[1..].iter().map(|q| q.neg()).collect();
    if cfg!(debug_assertions) {
        let mut acc = ring.zero();
        for (q, g) in cofactors.iter().zip(gens) {
            acc = acc.add(&q.mul(g)?)?;
        }
        debug_assert_eq!(acc, *p);
    }
    Ok(Some(cofactors))
}

/// Scalar-matrix membership helper used by rank tests: evaluate a matrix of
/// polynomials at a rational point.
pub fn evaluate_matrix(
    matrix: &[Vec<Polynomial>],
    point: &[Rat],
) -> Result<crate::linalg::QMat> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, |r| r.len());
    let mut out = crate::linalg::QMat::zero(rows, cols);
    for (i, row) in matrix.iter().enumerate() {
        for (j, p) in row.iter().enumerate() {
            out.set(i, j, p.evaluate(point)?);
        }
    }
    Ok(out)
}
