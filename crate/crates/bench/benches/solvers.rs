use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use shiftmatch_bench::{cover_plus_one, random_colored};
use shiftmatch_core::bounds::gen_cover_construction;
use shiftmatch_core::shift::compress_to_target;
use shiftmatch_core::solver::{
    max_edges_no_t_matching, max_matching, rainbow_matching, SolverLimits,
};
use shiftmatch_core::witness::{rainbow_by_lemma3, t_disjoint_by_thm1};
use shiftmatch_core::SetFamily;

fn solvers(c: &mut Criterion) {
    let limits = SolverLimits::default();
    let k8 = SetFamily::complete(8, 2);
    c.bench_function("max_matching K8", |b| {
        b.iter(|| max_matching(black_box(&k8), limits).unwrap())
    });
    let cover = gen_cover_construction(12, 3, 3).unwrap();
    c.bench_function("max_matching cover(12,3,3)", |b| {
        b.iter(|| max_matching(black_box(&cover), limits).unwrap())
    });
    let fams = random_colored(10, 3, 3, 60, 7);
    c.bench_function("rainbow_matching 3x60 on [10]", |b| {
        b.iter(|| rainbow_matching(black_box(&fams), limits).unwrap())
    });
    c.bench_function("extremal (6,3,2)", |b| {
        b.iter(|| max_edges_no_t_matching(6, 3, 2, limits).unwrap())
    });
}

fn shifting(c: &mut Criterion) {
    let fams = random_colored(12, 3, 3, 120, 11);
    c.bench_function("compress 3x120 on [12]", |b| {
        b.iter(|| compress_to_target(black_box(&fams), 12).unwrap())
    });
}

fn extractors(c: &mut Criterion) {
    let fams = random_colored(10, 2, 3, 40, 3);
    c.bench_function("lemma3 3x40 on [10]", |b| {
        b.iter(|| rainbow_by_lemma3(black_box(&fams)).unwrap())
    });
    let f = cover_plus_one(55, 3, 2);
    c.bench_function("thm1 cover(55,3,2)+1", |b| {
        b.iter(|| t_disjoint_by_thm1(black_box(&f), 2).unwrap())
    });
}

criterion_group!(benches, solvers, shifting, extractors);
criterion_main!(benches);
