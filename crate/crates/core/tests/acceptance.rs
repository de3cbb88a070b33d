//! Acceptance suite: one test per criterion, each printing a pass line with
//! its timing. Everything is exact; no tolerances.

use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use mfsing::crit::{
    critical_values, cross_check, is_relative_critical_point, relative_critical_values,
    CrossCheck, Eliminant,
};
use mfsing::factor::rational_roots;
use mfsing::lg::LgModel;
use mfsing::matfac::{
    eisenbud_operators, hom_complex, koszul_mf, mf_from_module, operator_nilpotence_probe,
    rank_one_mf, resolution_over_hypersurface, stable_hom_dims, stable_hom_window_dims,
    tensor_mf, MatrixFactorization, PMat, ResolutionOutcome,
};
use mfsing::milnor::{per_value_milnor_numbers, HpOutcome, MilnorOutcome};
use mfsing::poly::{rat_int, Monomial, PolyRing, Polynomial, Rat};
use mfsing::Budget;

fn budget() -> Budget {
    Budget::default()
}

fn models_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../models")
}

fn load_model(name: &str) -> LgModel {
    let path = models_dir().join(name);
    let src = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("cannot read {}: {e}", path.display()));
    LgModel::from_json(&src).unwrap()
}

fn pass(criterion: &str, start: Instant, detail: &str) {
    println!(
        "criterion {criterion}: PASS ({:.2}s) {detail}",
        start.elapsed().as_secs_f64()
    );
}

fn quadric_cone_model() -> LgModel {
    load_model("quadric-cone.json")
}

/// Total Milnor number of an isolated potential, or None.
fn mu(w: &Polynomial) -> Option<usize> {
    match per_value_milnor_numbers(w, &budget()).unwrap() {
        MilnorOutcome::Isolated(md) => Some(md.mu_total),
        MilnorOutcome::NonIsolated { .. } => None,
    }
}

/// Random polynomial of total degree <= max_deg with small coefficients.
fn random_poly(rng: &mut StdRng, ring: &PolyRing, max_deg: u32) -> Polynomial {
    let n = ring.arity();
    let mut terms = Vec::new();
    for _ in 0..rng.gen_range(2..=5) {
        let mut exps = vec![0u32; n];
        let mut left = max_deg;
        for e in exps.iter_mut() {
            let t = rng.gen_range(0..=left);
            *e = t;
            left -= t;
        }
        let c: i64 = rng.gen_range(-3..=3);
        terms.push((Monomial::new(exps), rat_int(c)));
    }
    Polynomial::from_terms(ring.clone(), terms)
}

/// Random potential with an isolated singular locus and mu >= 1,
/// by rejection sampling.
fn random_isolated(rng: &mut StdRng, ring: &PolyRing, max_deg: u32) -> (Polynomial, usize) {
    loop {
        let p = random_poly(rng, ring, max_deg);
        if p.is_zero() {
            continue;
        }
        if let Some(m) = mu(&p) {
            if m >= 1 {
                return (p, m);
            }
        }
    }
}

/// Disjoint sum: move both potentials into a combined ring with fresh names.
fn disjoint_sum(w1: &Polynomial, w2: &Polynomial) -> Polynomial {
    let n1 = w1.ring().arity();
    let n2 = w2.ring().arity();
    let mut vars: Vec<String> = (0..n1).map(|i| format!("u{i}")).collect();
    vars.extend((0..n2).map(|i| format!("v{i}")));
    let ring = PolyRing::new(vars, mfsing::MonomialOrder::GrevLex).unwrap();
    let map1: Vec<usize> = (0..n1).collect();
    let map2: Vec<usize> = (n1..n1 + n2).collect();
    w1.map_variables(&ring, &map1)
        .add(&w2.map_variables(&ring, &map2))
        .unwrap()
}

#[test]
fn criterion_01_quadric_cone_end_to_end() {
    let start = Instant::now();
    let model = quadric_cone_model();
    let reg = model.regularize().unwrap();
    let expected_w = reg
        .ring()
        .parse("(x1*x2 + x3*x4)*x6 + x2^2 + x3^2 + x4^2 + x5^2")
        .unwrap();
    assert_eq!(reg.w(), &expected_w, "regularization is exact");

    let (cv, rel, check) = cross_check(&model, &budget()).unwrap();
    assert_eq!(cv.values.rational_values, vec![rat_int(0)]);
    assert!(cv.values.nonrational_factors.is_empty());
    assert_eq!(rel.values.rational_values, vec![rat_int(0)]);
    assert!(rel.values.nonrational_factors.is_empty());
    assert_eq!(check, CrossCheck::Agree);
    assert!(start.elapsed().as_secs() <= 30, "runtime bound");
    pass("1 (quadric-cone example end-to-end)", start, "crit = relcrit = {0}, cross-check agree");
}

#[test]
fn criterion_02_pointwise_ranks() {
    let start = Instant::now();
    let model = quadric_cone_model();
    let p1: Vec<Rat> = [1, 0, 0, 0, 0].iter().map(|&k| rat_int(k)).collect();
    assert_eq!(
        is_relative_critical_point(&model, &p1).unwrap(),
        (true, 1, 1)
    );
    let p2: Vec<Rat> = [0, 0, 0, 0, 1].iter().map(|&k| rat_int(k)).collect();
    assert_eq!(
        is_relative_critical_point(&model, &p2).unwrap(),
        (false, 0, 1)
    );
    assert!(start.elapsed().as_secs() <= 1);
    pass("2 (pointwise ranks)", start, "(1,0,0,0,0) relative-critical (1,1); (0,0,0,0,1) not (0,1)");
}

#[test]
fn criterion_03_hh_hp_smallest_cases() {
    let start = Instant::now();

    let morse = load_model("morse-m0.json");
    let hh = mfsing::milnor::hh_rank(&morse, 6, &budget()).unwrap();
    assert!(hh.regular_case);
    assert_eq!(hh.total_dim, Some(1));
    assert_eq!(hh.parity, 1, "n + m = 1 is odd");
    let HpOutcome::Ranked(hp) = mfsing::milnor::hp_rank(&morse, &budget()).unwrap() else {
        panic!("isolated expected")
    };
    assert_eq!(hp.rank, 1);
    assert_eq!(hp.milnor.per_value, vec![(rat_int(0), 1)]);

    let cubic = load_model("cubic-m0.json");
    let HpOutcome::Ranked(hp) = mfsing::milnor::hp_rank(&cubic, &budget()).unwrap() else {
        panic!("isolated expected")
    };
    assert_eq!(hp.rank, 2);
    assert_eq!(
        hp.milnor.per_value,
        vec![(rat_int(-2), 1), (rat_int(2), 1)]
    );

    let parabola = load_model("parabola.json");
    let HpOutcome::Ranked(hp) = mfsing::milnor::hp_rank(&parabola, &budget()).unwrap() else {
        panic!("isolated expected")
    };
    assert_eq!(hp.rank, 1);
    assert_eq!(hp.milnor.per_value, vec![(rat_int(0), 1)]);
    let hh = mfsing::milnor::hh_rank(&parabola, 6, &budget()).unwrap();
    assert_eq!(hh.total_dim, Some(1));
    assert_eq!(hh.parity, 1, "n + m = 3 is odd");

    assert!(start.elapsed().as_secs() <= 15);
    pass("3 (HH/HP smallest cases)", start, "x^2: HH 1 odd, HP 1@0; x^3-3x: HP 2 split; parabola: HP 1@0");
}

#[test]
fn criterion_04_thom_sebastiani() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(20260808);
    let r2 = PolyRing::with_vars(&["a", "b"]);
    let r1 = PolyRing::with_vars(&["a"]);
    let mut checked = 0;
    while checked < 20 {
        let ring1 = if rng.gen_bool(0.5) { &r1 } else { &r2 };
        let ring2 = if rng.gen_bool(0.5) { &r1 } else { &r2 };
        let (w1, mu1) = random_isolated(&mut rng, ring1, 4);
        let (w2, mu2) = random_isolated(&mut rng, ring2, 4);
        let sum = disjoint_sum(&w1, &w2);
        let mu_sum = mu(&sum).expect("disjoint sum of isolated potentials is isolated");
        assert_eq!(
            mu_sum,
            mu1 * mu2,
            "mu({w1} (+) {w2}): {mu_sum} != {mu1} * {mu2}"
        );
        checked += 1;
    }
    assert!(start.elapsed().as_secs() <= 60);
    pass("4 (Thom-Sebastiani)", start, "mu multiplicative on 20 random isolated pairs");
}

#[test]
fn criterion_05_knoerrer() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(424242);
    let r2 = PolyRing::with_vars(&["a", "b"]);
    let r1 = PolyRing::with_vars(&["a"]);
    let uv_ring = PolyRing::with_vars(&["a", "b"]);
    let uv = uv_ring.parse("a*b").unwrap();
    let mut checked = 0;
    while checked < 20 {
        let ring = if rng.gen_bool(0.5) { &r1 } else { &r2 };
        let (w, mu_w) = random_isolated(&mut rng, ring, 4);
        let extended = disjoint_sum(&w, &uv);
        let mu_ext = mu(&extended).expect("adding a nondegenerate pair keeps isolation");
        assert_eq!(mu_ext, mu_w, "mu(W + uv) != mu(W) for {w}");
        checked += 1;
    }
    assert!(start.elapsed().as_secs() <= 60);
    pass("5 (Knoerrer)", start, "mu(W + u*v) = mu(W) on 20 random isolated potentials");
}

#[test]
fn criterion_06_translation() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(31415);
    let r1 = PolyRing::with_vars(&["a"]);
    let r2 = PolyRing::with_vars(&["a", "b"]);
    let mut checked = 0;
    while checked < 10 {
        let ring = if rng.gen_bool(0.5) { &r1 } else { &r2 };
        let w = random_poly(&mut rng, ring, 4);
        if w.is_zero() {
            continue;
        }
        let c_num: i64 = rng.gen_range(-5..=5);
        let c = rat_int(c_num);
        let shifted = w.sub(&ring.constant(c.clone())).unwrap();
        let e_w = critical_values(&w, &budget()).unwrap().values.eliminant;
        let e_shifted = critical_values(&shifted, &budget()).unwrap().values.eliminant;
        match (&e_w, &e_shifted) {
            (Eliminant::Finite(p), Eliminant::Finite(q)) => {
                assert_eq!(q, &p.shift(&c), "eliminant shift failed for {w}, c = {c}");
            }
            (Eliminant::Unit, Eliminant::Unit) => {}
            other => panic!("mismatched eliminant states {other:?}"),
        }
        checked += 1;
    }
    pass("6 (translation equivariance)", start, "eliminant of W-c is the c-shift, 10 random (W, c)");
}

#[test]
fn criterion_07_eigenvalues_match_eliminant() {
    let start = Instant::now();
    let fixtures: Vec<(PolyRing, &str)> = vec![
        (PolyRing::with_vars(&["x"]), "x^2"),
        (PolyRing::with_vars(&["x"]), "x^3 - 3*x"),
        (PolyRing::with_vars(&["x", "y"]), "x^2 + y^2"),
        (PolyRing::with_vars(&["x", "y"]), "x^3 + y^3"),
        (PolyRing::with_vars(&["x", "y"]), "x^3 - 3*x + y^2"),
        (PolyRing::with_vars(&["x", "y"]), "x^4 + y^4 - 2*x^2"),
        (
            PolyRing::with_vars(&["x1", "x2", "x3"]),
            "x2 + (x2 - x1^2)*x3",
        ),
        (PolyRing::with_vars(&["x"]), "x^3 - x"),
    ];
    for (ring, src) in fixtures {
        let w = ring.parse(src).unwrap();
        let MilnorOutcome::Isolated(md) = per_value_milnor_numbers(&w, &budget()).unwrap()
        else {
            panic!("fixture {src} should be isolated");
        };
        let cv = critical_values(&w, &budget()).unwrap();
        let eigen: Vec<Rat> = md.per_value.iter().map(|(c, _)| c.clone()).collect();
        assert_eq!(
            eigen, cv.values.rational_values,
            "rational eigenvalues != rational critical values for {src}"
        );
        // square-free charpoly divides a power of the eliminant
        if md.mu_total > 0 {
            let Eliminant::Finite(elim) = &cv.values.eliminant else {
                panic!("finite eliminant expected for {src}");
            };
            let mut rest = md.charpoly.squarefree_part();
            loop {
                let g = rest.gcd(elim);
                if g.degree() == Some(0) {
                    break;
                }
                rest = rest.div_exact(&g).unwrap();
            }
            assert!(
                rest.degree() == Some(0),
                "square-free charpoly does not divide a power of the eliminant for {src}"
            );
        }
    }
    pass("7 (eigenvalue/eliminant agreement)", start, "8 isolated fixtures, exact");
}

#[test]
fn criterion_08_mf_algebra_randomized() {
    let start = Instant::now();
    let ring = PolyRing::with_vars(&["x", "y"]);
    let mut rng = StdRng::seed_from_u64(777);
    let mut rand_poly = |max_deg: u32| -> Polynomial {
        loop {
            let p = random_poly(&mut rng, &ring, max_deg);
            if !p.is_zero() {
                return p;
            }
        }
    };
    let mut constructions = 0usize;
    // koszul factorizations of lengths 1..3 (ranks 1, 2, 4) and their shifts
    for len in [1usize, 2, 3, 1, 2, 3, 1, 2, 3, 2] {
        let mf = loop {
            let a: Vec<Polynomial> = (0..len).map(|_| rand_poly(3)).collect();
            let b: Vec<Polynomial> = (0..len).map(|_| rand_poly(3)).collect();
            // a degenerate draw can cancel to the zero potential; redraw
            if let Ok(mf) = koszul_mf(&a, &b) {
                break mf;
            }
        };
        assert!(mf.validate().ok, "koszul len {len}");
        assert!(mf.shift().validate().ok);
        let hc = hom_complex(&mf, &mf).unwrap();
        assert!(hc.even_to_odd.mul(&hc.odd_to_even).unwrap().is_zero());
        assert!(hc.odd_to_even.mul(&hc.even_to_odd).unwrap().is_zero());
        constructions += 3;
    }
    // tensors up to rank 8
    for _ in 0..10 {
        let t = loop {
            let Ok(e) =
                koszul_mf(&[rand_poly(2), rand_poly(2)], &[rand_poly(2), rand_poly(2)])
            else {
                continue;
            };
            let Ok(f) = rank_one_mf(&rand_poly(2), &rand_poly(2)) else {
                continue;
            };
            if let Ok(t) = tensor_mf(&e, &f) {
                break t;
            }
        };
        assert!(t.validate().ok);
        assert!(t.rank() <= 8);
        assert!(t.shift().validate().ok);
        constructions += 2;
    }
    assert!(constructions >= 50, "only {constructions} constructions");
    pass("8 (matrix factorization algebra)", start, "50 randomized constructions validate; hom differentials square to zero");
}

#[test]
fn criterion_09_stable_end_of_x_x() {
    let start = Instant::now();
    let ring = PolyRing::with_vars(&["x"]);
    let x = ring.parse("x").unwrap();
    let e = rank_one_mf(&x, &x).unwrap();
    let sh = stable_hom_dims(&e, &e, &budget()).unwrap();
    assert_eq!((sh.even_dim, sh.odd_dim), (Some(1), Some(1)));
    let (we, wo) = stable_hom_window_dims(&e, &e, 4).unwrap();
    assert_eq!((we, wo), (1, 1), "truncated oracle at bound 4");
    assert!(start.elapsed().as_secs() <= 5);
    pass("9 (stable End of (x,x))", start, "dims (1,1), oracle agrees");
}

#[test]
fn criterion_10_eisenbud_machinery() {
    let start = Instant::now();
    let r1 = PolyRing::with_vars(&["x"]);

    // 2-periodicity for W = x^2, M = Q[x]/(x)
    let w = r1.parse("x^2").unwrap();
    let pres = PMat::new(r1.clone(), vec![vec![r1.parse("x").unwrap()]]).unwrap();
    let report = resolution_over_hypersurface(&w, &pres, 6, &budget()).unwrap();
    let ResolutionOutcome::Periodic { index, mf } = &report.outcome else {
        panic!("periodicity not detected");
    };
    assert_eq!(*index, 0, "periodic immediately");
    assert_eq!(mf.delta0().at(0, 0), &r1.parse("x").unwrap());
    assert_eq!(mf.delta1().at(0, 0), &r1.parse("x").unwrap());
    assert!(mf.validate().ok);
    let extracted = mf_from_module(&w, &pres, 6, &budget()).unwrap();
    assert!(extracted.is_some());

    // Eisenbud operators for f = (x^2, y^2), M = Q[x,y]/(x,y)
    let r2 = PolyRing::with_vars(&["x", "y"]);
    let f = vec![r2.parse("x^2").unwrap(), r2.parse("y^2").unwrap()];
    let pres2 = PMat::new(
        r2.clone(),
        vec![vec![r2.parse("x").unwrap(), r2.parse("y").unwrap()]],
    )
    .unwrap();
    let ops = eisenbud_operators(&f, &pres2, 8, &budget()).unwrap();
    assert!(ops.certificate_ok, "exact certificate d~^2 = sum f_j t~_j");
    assert!(ops.chain_maps_ok, "operators are chain maps mod (f)");
    assert_eq!(ops.operators.len(), 2);
    assert!(ops.commutator_vanishes_on_cohomology(0, 1));

    // nilpotence probe distinguishes base-changed modules
    let base_changed = PMat::new(r2.clone(), vec![vec![r2.parse("x").unwrap()]]).unwrap();
    let probe1 = operator_nilpotence_probe(
        &[r2.parse("x^2").unwrap()],
        &r2.parse("y^2").unwrap(),
        &base_changed,
        8,
        &budget(),
    )
    .unwrap();
    assert_eq!(probe1.detected, Some(1), "base change detected");
    let probe2 = operator_nilpotence_probe(
        &[r2.parse("x^2").unwrap()],
        &r2.parse("y^2").unwrap(),
        &pres2,
        8,
        &budget(),
    )
    .unwrap();
    assert_eq!(probe2.detected, None, "residue field not detected");

    assert!(start.elapsed().as_secs() <= 30);
    pass("10 (Eisenbud machinery)", start, "periodicity, certificate, chain maps, nilpotence probe");
}

#[test]
fn criterion_11_finiteness_over_corpus() {
    let start = Instant::now();
    let dir = models_dir();
    let mut seen = 0;
    let mut names: Vec<_> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    names.sort();
    for path in names {
        let model = LgModel::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
        let reg = model.regularize().unwrap();
        let cv = critical_values(reg.w(), &budget()).unwrap();
        if !cv.values.eliminant.is_finite() {
            continue;
        }
        // the candidate values with nonzero invariants form a finite set...
        match &cv.values.eliminant {
            Eliminant::Unit => {}
            Eliminant::Finite(p) => {
                let root_count = rational_roots(p).len()
                    + cv.values
                        .nonrational_factors
                        .iter()
                        .map(|f| f.poly.degree().unwrap_or(0))
                        .sum::<usize>();
                assert!(root_count <= p.degree().unwrap_or(0).max(1));
            }
            Eliminant::Zero => unreachable!(),
        }
        // ... and equals the relative critical values
        let rel = relative_critical_values(&model, &budget()).unwrap();
        assert_eq!(
            cv.values.eliminant, rel.values.eliminant,
            "corpus model {} disagrees",
            path.display()
        );
        seen += 1;
    }
    assert!(seen >= 6, "corpus should contain at least six models, saw {seen}");
    pass("11 (finiteness over the corpus)", start, "all corpus value sets finite and equal to the relative critical values");
}

/// Knoerrer form with a square instead of a product also preserves mu;
/// kept as a companion check of the same staircase argument.
#[test]
fn knoerrer_product_form_on_fixtures() {
    let fixtures = [("x^2", 1usize), ("x^3 - 3*x", 2), ("x^3 + x^4", 3)];
    let r = PolyRing::with_vars(&["x"]);
    for (src, expected) in fixtures {
        let w = r.parse(src).unwrap();
        assert_eq!(mu(&w), Some(expected));
        let uv_ring = PolyRing::with_vars(&["u", "v"]);
        let ext = disjoint_sum(&w, &uv_ring.parse("u*v").unwrap());
        assert_eq!(mu(&ext), Some(expected));
    }
}

/// The matrix factorization extracted from any detected periodic tail
/// validates; exercised on a module over a cusp hypersurface.
#[test]
fn periodic_tail_of_cusp_module_validates() {
    let r = PolyRing::with_vars(&["x", "y"]);
    let w = r.parse("x^2 + y^3").unwrap();
    let pres = PMat::new(
        r.clone(),
        vec![vec![r.parse("x").unwrap(), r.parse("y").unwrap()]],
    )
    .unwrap();
    let mf: Option<MatrixFactorization> = mf_from_module(&w, &pres, 4, &budget()).unwrap();
    let mf = mf.expect("periodicity within four steps");
    assert!(mf.validate().ok);
    assert_eq!(mf.potential(), &w);
}
