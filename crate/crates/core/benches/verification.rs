use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use partial_duality::algebra::base_field;
use partial_duality::duality::{build_phi, phi_check, theorem_check};
use partial_duality::exactla::Field;
use partial_duality::exec;
use partial_duality::group::FiniteGroup;
use partial_duality::partial_action::PartialAction;
use partial_duality::skew::build_skew;
use partial_duality::smash::build_smash;

fn s3_split() -> PartialAction {
    let k = Arc::new(base_field(Field::Rational));
    PartialAction::trivial_from_split(&k, &k, Arc::new(FiniteGroup::symmetric(3))).unwrap()
}

fn z4_restriction() -> PartialAction {
    let global = PartialAction::cyclic_shift(Field::Rational, 4);
    let f = Field::Rational;
    PartialAction::restrict_global(&global, &[f.one(), f.one(), f.one(), f.zero()]).unwrap()
}

fn duality_pipeline(c: &mut Criterion) {
    let mut group = c.benchmark_group("duality_pipeline");
    group.sample_size(10);
    for (name, pa) in [("s3_split", s3_split()), ("z4_restriction", z4_restriction())] {
        let pa = Arc::new(pa);
        for (mode, parallel) in [("parallel", true), ("sequential", false)] {
            group.bench_with_input(BenchmarkId::new(mode, name), &pa, |b, pa| {
                exec::set_parallel(parallel);
                b.iter(|| {
                    let skew = Arc::new(build_skew(pa.clone()).unwrap());
                    let d = build_phi(Arc::new(build_smash(skew).unwrap())).unwrap();
                    let checks = phi_check(&d).checks.len() + theorem_check(&d).checks.len();
                    assert!(checks > 0);
                });
            });
        }
    }
    exec::set_parallel(true);
    group.finish();
}

criterion_group!(benches, duality_pipeline);
criterion_main!(benches);
