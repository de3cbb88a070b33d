//! Benchmarks of the computational kernel: Groebner bases, Milnor data,
//! the full relative-critical-value pipeline, and stable hom dimensions.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use mfsing::crit::{critical_values, relative_critical_values};
use mfsing::lg::LgModel;
use mfsing::matfac::{koszul_mf, stable_hom_dims};
use mfsing::milnor::per_value_milnor_numbers;
use mfsing::poly::{MonomialOrder, PolyRing};
use mfsing::{Budget, Ideal};

fn quadric_cone_model() -> LgModel {
    let r = PolyRing::with_vars(&["x1", "x2", "x3", "x4", "x5"]);
    LgModel::new(
        r.clone(),
        vec![r.parse("x1*x2 + x3*x4").unwrap()],
        r.parse("x2^2 + x3^2 + x4^2 + x5^2").unwrap(),
    )
    .unwrap()
}

fn bench_groebner(c: &mut Criterion) {
    let r = PolyRing::with_vars(&["x", "y", "z"]);
    let gens = vec![
        r.parse("x^2 + y^2 + z^2 - 1").unwrap(),
        r.parse("x*y + y*z + z*x").unwrap(),
        r.parse("x*y*z - 1").unwrap(),
    ];
    c.bench_function("groebner_3vars_cyclicish", |b| {
        b.iter(|| {
            let ideal = Ideal::new(r.clone(), gens.clone());
            let gb = ideal
                .groebner_basis(&MonomialOrder::GrevLex, &Budget::default())
                .unwrap();
            black_box(gb.elements().len())
        })
    });
}

fn bench_critical_values(c: &mut Criterion) {
    let reg = quadric_cone_model().regularize().unwrap();
    let w = reg.w().clone();
    c.bench_function("critical_values_regularized_quadric_cone_potential", |b| {
        b.iter(|| black_box(critical_values(&w, &Budget::default()).unwrap()))
    });
}

fn bench_relcrit(c: &mut Criterion) {
    let model = quadric_cone_model();
    c.bench_function("relative_critical_values_quadric_cone_model", |b| {
        b.iter(|| black_box(relative_critical_values(&model, &Budget::default()).unwrap()))
    });
}

fn bench_milnor(c: &mut Criterion) {
    let r = PolyRing::with_vars(&["x", "y"]);
    let w = r.parse("x^4 + y^4 - 2*x^2 - 2*y^2").unwrap();
    c.bench_function("milnor_per_value_mu9", |b| {
        b.iter(|| black_box(per_value_milnor_numbers(&w, &Budget::default()).unwrap()))
    });
}

fn bench_stable_hom(c: &mut Criterion) {
    let r = PolyRing::with_vars(&["x", "y"]);
    let e = koszul_mf(
        &[r.parse("x").unwrap(), r.parse("y").unwrap()],
        &[r.parse("x").unwrap(), r.parse("y").unwrap()],
    )
    .unwrap();
    c.bench_function("stable_end_rank2", |b| {
        b.iter(|| black_box(stable_hom_dims(&e, &e, &Budget::default()).unwrap()))
    });
}

criterion_group!(
    kernel,
    bench_groebner,
    bench_critical_values,
    bench_relcrit,
    bench_milnor,
    bench_stable_hom
);
criterion_main!(kernel);
