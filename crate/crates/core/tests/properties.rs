//! Property suites over randomized inputs: ring axioms, Groebner-basis
//! soundness oracles, elimination and syzygy exactness, and the matrix
//! factorization algebra.

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use mfsing::groebner::{syzygies, matrix_apply};
use mfsing::matfac::{hom_complex, koszul_mf, rank_one_mf, stable_hom_dims, tensor_mf};
use mfsing::poly::{rat_int, Monomial, MonomialOrder, PolyRing, Polynomial, Rat};
use mfsing::{Budget, Ideal};

fn budget() -> Budget {
    Budget::default()
}

/// Random sparse polynomial in the given ring.
fn random_poly(rng: &mut StdRng, ring: &PolyRing, max_deg: u32, max_terms: usize) -> Polynomial {
    let n = ring.arity();
    let nterms = rng.gen_range(0..=max_terms);
    let mut terms = Vec::new();
    for _ in 0..nterms {
        let mut exps = vec![0u32; n];
        let mut left = max_deg;
        for e in exps.iter_mut() {
            let take = rng.gen_range(0..=left);
            *e = take;
            left -= take;
        }
        let num: i64 = rng.gen_range(-6..=6);
        let den: i64 = rng.gen_range(1..=4);
        terms.push((Monomial::new(exps), Rat::new(num.into(), den.into())));
    }
    Polynomial::from_terms(ring.clone(), terms)
}

// ---------------------------------------------------------------------------
// polynomial arithmetic axioms (proptest over coefficient/exponent choices)
// ---------------------------------------------------------------------------

fn arb_poly() -> impl Strategy<Value = Polynomial> {
    let ring = PolyRing::with_vars(&["x", "y", "z"]);
    proptest::collection::vec(
        ((0u32..4, 0u32..4, 0u32..3), -9i64..=9, 1i64..=5),
        0..6,
    )
    .prop_map(move |raw| {
        let terms = raw
            .into_iter()
            .map(|((a, b, c), num, den)| {
                (Monomial::new(vec![a, b, c]), Rat::new(num.into(), den.into()))
            })
            .collect();
        Polynomial::from_terms(ring.clone(), terms)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms((p, q, r) in (arb_poly(), arb_poly(), arb_poly())) {
        // associativity and commutativity of both operations, distributivity
        let ab = p.add(&q).unwrap();
        prop_assert_eq!(ab.clone(), q.add(&p).unwrap());
        prop_assert_eq!(
            ab.add(&r).unwrap(),
            p.add(&q.add(&r).unwrap()).unwrap()
        );
        let pq = p.mul(&q).unwrap();
        prop_assert_eq!(pq.clone(), q.mul(&p).unwrap());
        prop_assert_eq!(
            pq.mul(&r).unwrap(),
            p.mul(&q.mul(&r).unwrap()).unwrap()
        );
        prop_assert_eq!(
            p.mul(&q.add(&r).unwrap()).unwrap(),
            p.mul(&q).unwrap().add(&p.mul(&r).unwrap()).unwrap()
        );
    }

    #[test]
    fn canonical_form_idempotent(p in arb_poly()) {
        // renormalizing the term list changes nothing
        let again = Polynomial::from_terms(p.ring().clone(), p.terms().to_vec());
        prop_assert_eq!(p, again);
    }

    #[test]
    fn leibniz_rule((p, q) in (arb_poly(), arb_poly())) {
        for var in ["x", "y", "z"] {
            let lhs = p.mul(&q).unwrap().partial_derivative(var).unwrap();
            let rhs = p
                .mul(&q.partial_derivative(var).unwrap())
                .unwrap()
                .add(&q.mul(&p.partial_derivative(var).unwrap()).unwrap())
                .unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism((p, q) in (arb_poly(), arb_poly())) {
        let point = vec![rat_int(2), Rat::new((-1).into(), 3.into()), rat_int(1)];
        let lhs = p.mul(&q).unwrap().evaluate(&point).unwrap();
        let rhs = p.evaluate(&point).unwrap() * q.evaluate(&point).unwrap();
        prop_assert_eq!(lhs, rhs);
        let lhs = p.add(&q).unwrap().evaluate(&point).unwrap();
        let rhs = p.evaluate(&point).unwrap() + q.evaluate(&point).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn parse_print_parse(p in arb_poly()) {
        let printed = p.to_string();
        let reparsed = p.ring().parse(&printed).unwrap();
        prop_assert_eq!(p, reparsed);
    }
}

// ---------------------------------------------------------------------------
// Groebner soundness oracles on random small ideals
// ---------------------------------------------------------------------------

#[test]
fn groebner_spolynomials_reduce_to_zero() {
    let ring = PolyRing::with_vars(&["x", "y"]);
    let mut rng = StdRng::seed_from_u64(17);
    for trial in 0..12 {
        let gens: Vec<Polynomial> = (0..rng.gen_range(1..=3))
            .map(|_| random_poly(&mut rng, &ring, 3, 4))
            .filter(|p| !p.is_zero())
            .collect();
        if gens.is_empty() {
            continue;
        }
        let ideal = Ideal::new(ring.clone(), gens.clone());
        let gb = ideal
            .groebner_basis(&MonomialOrder::GrevLex, &budget())
            .unwrap();
        // every original generator is a member
        for g in &gens {
            assert!(gb.contains(g), "trial {trial}: generator escaped");
        }
        // every S-polynomial of the basis reduces to zero
        let elems = gb.elements();
        for i in 0..elems.len() {
            for j in i + 1..elems.len() {
                let (mi, ci) = elems[i].leading_term(&MonomialOrder::GrevLex).unwrap();
                let (mj, cj) = elems[j].leading_term(&MonomialOrder::GrevLex).unwrap();
                let lcm = mi.lcm(mj);
                let s = elems[i]
                    .mul_monomial(&lcm.div(mi), &ci.recip())
                    .sub(&elems[j].mul_monomial(&lcm.div(mj), &cj.recip()))
                    .unwrap();
                assert!(
                    gb.normal_form(&s).is_zero(),
                    "trial {trial}: S-poly of {i},{j} did not reduce"
                );
            }
        }
    }
}

#[test]
fn textbook_lex_basis_is_reproduced() {
    // I = (x^2+y^2+z^2-1, x^2+z^2-y, x-z) under lex x > y > z has the
    // closed-form reduced basis {x - z, y - 2z^2, z^4 + z^2/2 - 1/4}
    let ring = PolyRing::with_vars(&["x", "y", "z"]);
    let ideal = Ideal::new(
        ring.clone(),
        vec![
            ring.parse("x^2 + y^2 + z^2 - 1").unwrap(),
            ring.parse("x^2 + z^2 - y").unwrap(),
            ring.parse("x - z").unwrap(),
        ],
    );
    let gb = ideal.groebner_basis(&MonomialOrder::Lex, &budget()).unwrap();
    let expected = vec![
        ring.parse("z^4 + 1/2*z^2 - 1/4").unwrap(),
        ring.parse("y - 2*z^2").unwrap(),
        ring.parse("x - z").unwrap(),
    ];
    assert_eq!(gb.elements(), &expected[..]);
}

#[test]
fn eigenvalues_agree_with_eliminant_on_random_potentials() {
    let ring = PolyRing::with_vars(&["x", "y"]);
    let mut rng = StdRng::seed_from_u64(808);
    let mut checked = 0;
    while checked < 6 {
        let w = random_poly(&mut rng, &ring, 4, 4);
        if w.is_zero() {
            continue;
        }
        let outcome = mfsing::milnor::per_value_milnor_numbers(&w, &budget()).unwrap();
        let mfsing::milnor::MilnorOutcome::Isolated(md) = outcome else {
            continue;
        };
        if md.mu_total == 0 {
            continue;
        }
        let cv = mfsing::crit::critical_values(&w, &budget()).unwrap();
        let eigen: Vec<Rat> = md.per_value.iter().map(|(c, _)| c.clone()).collect();
        assert_eq!(eigen, cv.values.rational_values, "disagreement for {w}");
        let mfsing::crit::Eliminant::Finite(elim) = &cv.values.eliminant else {
            panic!("finite eliminant expected for isolated {w}");
        };
        let mut rest = md.charpoly.squarefree_part();
        loop {
            let g = rest.gcd(elim);
            if g.degree() == Some(0) {
                break;
            }
            rest = rest.div_exact(&g).unwrap();
        }
        assert_eq!(rest.degree(), Some(0), "charpoly support exceeds eliminant for {w}");
        checked += 1;
    }
}

#[test]
fn elimination_is_sound() {
    let ring = PolyRing::with_vars(&["u", "x", "y"]);
    let mut rng = StdRng::seed_from_u64(23);
    for _ in 0..8 {
        let gens: Vec<Polynomial> = (0..2)
            .map(|_| random_poly(&mut rng, &ring, 2, 3))
            .filter(|p| !p.is_zero())
            .collect();
        if gens.is_empty() {
            continue;
        }
        let ideal = Ideal::new(ring.clone(), gens);
        let keep = vec!["x".to_string(), "y".to_string()];
        let elim = ideal.elimination_ideal(&keep, &budget()).unwrap();
        let gb = ideal
            .groebner_basis(&MonomialOrder::GrevLex, &budget())
            .unwrap();
        for g in elim.generators() {
            let lifted = g.embed(&ring).unwrap();
            assert!(gb.contains(&lifted), "eliminated generator not in ideal");
        }
    }
}

#[test]
fn staircase_dimension_matches_window_count() {
    // brute-force oracle: count monomials of degree <= D outside the
    // leading-term ideal, for D beyond the staircase degree
    let ring = PolyRing::with_vars(&["x", "y"]);
    let fixtures: Vec<(Vec<&str>, usize)> = vec![
        (vec!["x^2", "y^2"], 4),
        (vec!["x^3", "y^2"], 6),
        (vec!["x^2 - y", "y^2"], 4),
        (vec!["x", "y"], 1),
    ];
    for (gens, expected) in fixtures {
        let ideal = Ideal::new(
            ring.clone(),
            gens.iter().map(|s| ring.parse(s).unwrap()).collect(),
        );
        let st = ideal.quotient_basis(&budget()).unwrap();
        assert_eq!(st.dimension(), Some(expected), "fixture {gens:?}");
        // window count: standard monomials up to one past the max degree
        let max_deg = st
            .lead_terms
            .iter()
            .map(|m| m.degree())
            .max()
            .unwrap_or(0) as u32
            + 1;
        let mut count = 0usize;
        for a in 0..=max_deg {
            for b in 0..=max_deg {
                let m = Monomial::new(vec![a, b]);
                if m.degree() <= max_deg as u64
                    && !st.lead_terms.iter().any(|l| l.divides(&m))
                {
                    count += 1;
                }
            }
        }
        assert_eq!(count, expected, "window count disagrees for {gens:?}");
    }
}

#[test]
fn syzygies_annihilate_exactly() {
    let ring = PolyRing::with_vars(&["x", "y"]);
    let mut rng = StdRng::seed_from_u64(5);
    for _ in 0..8 {
        let rows = rng.gen_range(1..=2);
        let cols = rng.gen_range(1..=3);
        let matrix: Vec<Vec<Polynomial>> = (0..rows)
            .map(|_| {
                (0..cols)
                    .map(|_| random_poly(&mut rng, &ring, 2, 2))
                    .collect()
            })
            .collect();
        let syz = syzygies(&ring, &matrix, &budget()).unwrap();
        for gen in syz.generators() {
            let out = matrix_apply(&matrix, gen, &ring).unwrap();
            assert!(out.iter().all(|p| p.is_zero()), "syzygy failed to annihilate");
        }
    }
}

// ---------------------------------------------------------------------------
// matrix factorization algebra on randomized constructions
// ---------------------------------------------------------------------------

fn random_nonzero_poly(rng: &mut StdRng, ring: &PolyRing, max_deg: u32) -> Polynomial {
    loop {
        let p = random_poly(rng, ring, max_deg, 3);
        if !p.is_zero() {
            return p;
        }
    }
}

#[test]
fn randomized_constructions_validate() {
    let ring = PolyRing::with_vars(&["x", "y"]);
    let mut rng = StdRng::seed_from_u64(99);
    for trial in 0..30 {
        let len = rng.gen_range(1..=3);
        let mf = loop {
            let a: Vec<Polynomial> = (0..len)
                .map(|_| random_nonzero_poly(&mut rng, &ring, 3))
                .collect();
            let b: Vec<Polynomial> = (0..len)
                .map(|_| random_nonzero_poly(&mut rng, &ring, 3))
                .collect();
            if let Ok(mf) = koszul_mf(&a, &b) {
                break mf;
            }
        };
        assert!(mf.validate().ok, "koszul trial {trial}");
        assert_eq!(mf.rank(), 1 << (len - 1));
        let sh = mf.shift();
        assert!(sh.validate().ok);
        assert_eq!(sh.shift(), mf, "shift is an involution");
        // hom complex differentials compose to zero, both ways
        let hc = hom_complex(&mf, &mf).unwrap();
        assert!(hc.odd_to_even.mul(&hc.even_to_odd).unwrap().is_zero());
        assert!(hc.even_to_odd.mul(&hc.odd_to_even).unwrap().is_zero());
    }
}

#[test]
fn tensor_of_random_factors_validates() {
    let rx = PolyRing::with_vars(&["x"]);
    let ry = PolyRing::with_vars(&["y"]);
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..10 {
        let t = loop {
            let Ok(e) = rank_one_mf(
                &random_nonzero_poly(&mut rng, &rx, 2),
                &random_nonzero_poly(&mut rng, &rx, 2),
            ) else {
                continue;
            };
            let Ok(f) = rank_one_mf(
                &random_nonzero_poly(&mut rng, &ry, 2),
                &random_nonzero_poly(&mut rng, &ry, 2),
            ) else {
                continue;
            };
            if let Ok(t) = tensor_mf(&e, &f) {
                break t;
            }
        };
        assert!(t.validate().ok);
        assert_eq!(t.rank(), 2);
    }
}

#[test]
fn stable_hom_parity_swaps_under_shift() {
    let ring = PolyRing::with_vars(&["x"]);
    let e = rank_one_mf(&ring.parse("x").unwrap(), &ring.parse("x^2").unwrap()).unwrap();
    let plain = stable_hom_dims(&e, &e, &budget()).unwrap();
    let shifted = stable_hom_dims(&e, &e.shift(), &budget()).unwrap();
    assert_eq!(plain.even_dim, shifted.odd_dim);
    assert_eq!(plain.odd_dim, shifted.even_dim);
}
