//! Buchberger engine for submodules of free modules (ideals are the rank-1
//! case). Pair pruning uses the Gebauer-Moller update; every popped S-pair
//! charges the computation budget so blowups fail loudly.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poly::{ModuleOrder, Monomial, Polynomial, Rat};
use crate::Result;

use super::Budget;

/// A term of a free-module element: component index, monomial, coefficient.
pub(crate) type VTerm = (u32, Monomial, Rat);

/// Element of a free module, terms sorted descending under the active order.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Vect {
    pub terms: Vec<VTerm>,
}

impl Vect {
    pub fn zero() -> Self {
        Vect { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&VTerm> {
        self.terms.first()
    }

    pub fn from_poly(p: &Polynomial, ord: &ModuleOrder) -> Self {
        let mut terms: Vec<VTerm> = p
            .terms()
            .iter()
            .map(|(m, c)| (0u32, m.clone(), c.clone()))
            .collect();
        sort_terms(&mut terms, ord);
        Vect { terms }
    }

    pub fn from_columns(v: &[Polynomial], ord: &ModuleOrder) -> Self {
        let mut terms: Vec<VTerm> = Vec::new();
        for (comp, p) in v.iter().enumerate() {
            for (m, c) in p.terms() {
                terms.push((comp as u32, m.clone(), c.clone()));
            }
        }
        sort_terms(&mut terms, ord);
        Vect { terms }
    }

    pub fn to_polys(&self, ring: &crate::poly::PolyRing, rank: usize) -> Vec<Polynomial> {
        let mut buckets: Vec<Vec<(Monomial, Rat)>> = vec![Vec::new(); rank];
        for (c, m, x) in &self.terms {
            buckets[*c as usize].push((m.clone(), x.clone()));
        }
        buckets
            .into_iter()
            .map(|terms| Polynomial::from_terms(ring.clone(), terms))
            .collect()
    }

    pub fn scale(&self, c: &Rat) -> Vect {
        Vect {
            terms: self
                .terms
                .iter()
                .map(|(comp, m, x)| (*comp, m.clone(), x * c))
                .collect(),
        }
    }

    /// Divide by the rational content; keeps coefficients integer-primitive
    /// to tame growth during reductions.
    pub fn make_primitive(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for (_, _, c) in &self.terms {
            num_gcd = num_integer::gcd(num_gcd, c.numer().clone());
            den_lcm = num_integer::lcm(den_lcm, c.denom().clone());
        }
        let factor = Rat::new(den_lcm, num_gcd);
        if factor.is_one() {
            return;
        }
        for (_, _, c) in self.terms.iter_mut() {
            *c *= &factor;
        }
    }

    pub fn monic(&self) -> Vect {
        match self.lead() {
            None => self.clone(),
            Some((_, _, c)) => self.scale(&c.recip()),
        }
    }
}

fn sort_terms(terms: &mut Vec<VTerm>, ord: &ModuleOrder) {
    terms.sort_unstable_by(|a, b| ord.cmp((b.0, &b.1), (a.0, &a.1)));
    terms.dedup_by(|from, to| {
        if from.0 != to.0 || from.1 != to.1 {
            return false;
        }
        let c = std::mem::replace(&mut from.2, Rat::zero());
        to.2 += c;
        true
    });
    terms.retain(|(_, _, c)| !c.is_zero());
}

/// `a - coef * x^mono * g`, all sorted under `ord`.
fn sub_scaled(a: &Vect, g: &Vect, mono: &Monomial, coef: &Rat, ord: &ModuleOrder) -> Vect {
    let mut out: Vec<VTerm> = Vec::with_capacity(a.terms.len() + g.terms.len());
    let mut i = 0;
    let mut j = 0;
    while i < a.terms.len() || j < g.terms.len() {
        if j >= g.terms.len() {
            out.push(a.terms[i].clone());
            i += 1;
            continue;
        }
        let gt = &g.terms[j];
        let gm = gt.1.mul(mono);
        if i >= a.terms.len() {
            out.push((gt.0, gm, -(&gt.2 * coef)));
            j += 1;
            continue;
        }
        let at = &a.terms[i];
        match ord.cmp((at.0, &at.1), (gt.0, &gm)) {
            std::cmp::Ordering::Greater => {
                out.push(at.clone());
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push((gt.0, gm, -(&gt.2 * coef)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = &at.2 - &(&gt.2 * coef);
                if !c.is_zero() {
                    out.push((at.0, gm, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    Vect { terms: out }
}

/// Full normal form against a list of elements with precomputed leads.
pub(crate) fn normal_form(v: &Vect, basis: &[Vect], ord: &ModuleOrder) -> Vect {
    let mut work = v.clone();
    let mut rem: Vec<VTerm> = Vec::new();
    'outer: while let Some((wc, wm, wcoef)) = work.lead().cloned() {
        for g in basis {
            let Some((gc, gm, gcoef)) = g.lead() else {
                continue;
            };
            if *gc == wc && gm.divides(&wm) {
                let mono = wm.div(gm);
                let coef = &wcoef / gcoef;
                work = sub_scaled(&work, g, &mono, &coef, ord);
                continue 'outer;
            }
        }
        rem.push(work.terms.remove(0));
    }
    Vect { terms: rem }
}

/// Normal form that also returns the quotients: `v = sum q_k * basis_k + r`
/// with each `q_k` a scalar polynomial (list of monomial/coefficient pairs).
pub(crate) fn normal_form_with_quotients(
    v: &Vect,
    basis: &[Vect],
    ord: &ModuleOrder,
) -> (Vec<Vec<(Monomial, Rat)>>, Vect) {
    let mut work = v.clone();
    let mut rem: Vec<VTerm> = Vec::new();
    let mut quots: Vec<Vec<(Monomial, Rat)>> = vec![Vec::new(); basis.len()];
    'outer: while let Some((wc, wm, wcoef)) = work.lead().cloned() {
        for (k, g) in basis.iter().enumerate() {
            let Some((gc, gm, gcoef)) = g.lead() else {
                continue;
            };
            if *gc == wc && gm.divides(&wm) {
                let mono = wm.div(gm);
                let coef = &wcoef / gcoef;
                work = sub_scaled(&work, g, &mono, &coef, ord);
                quots[k].push((mono, coef));
                continue 'outer;
            }
        }
        rem.push(work.terms.remove(0));
    }
    (quots, Vect { terms: rem })
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    comp: u32,
}

/// Reduced Groebner basis of the submodule generated by `gens`.
/// Output is monic, auto-reduced, sorted ascending by leading term.
pub(crate) fn buchberger(
    gens: Vec<Vect>,
    ord: &ModuleOrder,
    rank_one: bool,
    budget: &Budget,
) -> Result<Vec<Vect>> {
    let mut basis: Vec<Vect> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    for mut g in gens {
        if g.is_zero() {
            continue;
        }
        g.make_primitive();
        add_element(&mut basis, &mut pairs, g, rank_one);
    }
    while !pairs.is_empty() {
        budget.charge(1)?;
        // normal strategy: smallest lcm first
        let mut best = 0;
        for k in 1..pairs.len() {
            let a = &pairs[k];
            let b = &pairs[best];
            if ord.cmp((a.comp, &a.lcm), (b.comp, &b.lcm)) == std::cmp::Ordering::Less {
                best = k;
            }
        }
        let pair = pairs.swap_remove(best);
        // chain criterion against already-treated pairs is folded into the
        // Gebauer-Moller update below; compute and reduce the S-vector.
        let (gi, gj) = (&basis[pair.i], &basis[pair.j]);
        let (_, mi, ci) = gi.lead().unwrap();
        let (_, mj, cj) = gj.lead().unwrap();
        let s = {
            let a = sub_scaled(
                &Vect::zero(),
                gi,
                &pair.lcm.div(mi),
                &(-ci.recip()),
                ord,
            );
            sub_scaled(&a, gj, &pair.lcm.div(mj), &cj.recip(), ord)
        };
        let mut red = normal_form(&s, &basis, ord);
        if !red.is_zero() {
            red.make_primitive();
            add_element(&mut basis, &mut pairs, red, rank_one);
        }
    }
    Ok(interreduce(basis, ord))
}

/// Gebauer-Moller update: prune the pair queue, then append the new element.
fn add_element(basis: &mut Vec<Vect>, pairs: &mut Vec<Pair>, g: Vect, rank_one: bool) {
    let t = basis.len();
    let (tc, tm, _) = g.lead().cloned().unwrap();
    // old-pair pruning
    pairs.retain(|p| {
        if p.comp != tc || !tm.divides(&p.lcm) {
            return true;
        }
        let (_, mi, _) = basis[p.i].lead().unwrap();
        let (_, mj, _) = basis[p.j].lead().unwrap();
        let lcm_it = mi.lcm(&tm);
        let lcm_jt = mj.lcm(&tm);
        lcm_it == p.lcm || lcm_jt == p.lcm
    });
    // candidate new pairs
    let mut fresh: Vec<Pair> = Vec::new();
    for (i, b) in basis.iter().enumerate() {
        let (bc, bm, _) = b.lead().unwrap();
        if *bc != tc {
            continue;
        }
        fresh.push(Pair {
            i,
            j: t,
            lcm: bm.lcm(&tm),
            comp: tc,
        });
    }
    // criterion M: drop pairs whose lcm is a proper multiple of another's
    let mut keep = vec![true; fresh.len()];
    for a in 0..fresh.len() {
        for b in 0..fresh.len() {
            if a == b || !keep[a] || !keep[b] {
                continue;
            }
            if fresh[b].lcm.divides(&fresh[a].lcm) && fresh[b].lcm != fresh[a].lcm {
                keep[a] = false;
            }
        }
    }
    // criterion F: of equal lcms keep one
    for a in 0..fresh.len() {
        if !keep[a] {
            continue;
        }
        for b in a + 1..fresh.len() {
            if keep[b] && fresh[a].lcm == fresh[b].lcm {
                keep[b] = false;
            }
        }
    }
    // product criterion, valid for ideals only
    if rank_one {
        for (a, p) in fresh.iter().enumerate() {
            if !keep[a] {
                continue;
            }
            let (_, mi, _) = basis[p.i].lead().unwrap();
            if mi.is_coprime(&tm) {
                keep[a] = false;
            }
        }
    }
    for (p, k) in fresh.into_iter().zip(keep) {
        if k {
            pairs.push(p);
        }
    }
    basis.push(g);
}

/// Minimize (drop elements whose lead is divisible by another lead) and
/// tail-reduce; make monic; sort ascending by leading term.
fn interreduce(mut basis: Vec<Vect>, ord: &ModuleOrder) -> Vec<Vect> {
    basis.retain(|g| !g.is_zero());
    // minimization
    let mut keep = vec![true; basis.len()];
    for a in 0..basis.len() {
        if !keep[a] {
            continue;
        }
        let (ac, am, _) = basis[a].lead().unwrap().clone();
        for b in 0..basis.len() {
            if a == b || !keep[b] {
                continue;
            }
            let (bc, bm, _) = basis[b].lead().unwrap();
            if *bc == ac && bm.divides(&am) && (bm != &am || b < a) {
                keep[a] = false;
                break;
            }
        }
    }
    let mut minimal: Vec<Vect> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();
    // tail reduction: leads are pairwise indivisible, so reducing each
    // element against the others leaves leads intact.
    for i in 0..minimal.len() {
        let g = minimal[i].clone();
        let others: Vec<Vect> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _h)| j != i).map(|(_j, h)| h.clone())
            .collect();
        let mut red = normal_form(&g, &others, ord);
        red.make_primitive();
        minimal[i] = red;
    }
    let mut out: Vec<Vect> = minimal.into_iter().map(|g| g.monic()).collect();
    out.sort_by(|a, b| {
        let (ac, am, _) = a.lead().unwrap();
        let (bc, bm, _) = b.lead().unwrap();
        ord.cmp((*ac, am), (*bc, bm))
    });
    out
}
