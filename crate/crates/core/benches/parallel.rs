use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use polygcd::constructions::certify_with;
use polygcd::harness::random_property_suite_with;
use polygcd::kempner::{count_poly_functions_with, count_r_with};
use polygcd::{construct_large, Execution, Prime, SuiteConfig};

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn kempner(c: &mut Criterion) {
    let mut group = c.benchmark_group("kempner");
    group.sample_size(10);
    let p3 = Prime::new(3).unwrap();
    for (name, exec) in MODES {
        group.bench_with_input(
            BenchmarkId::new("functions_p3_s2", name),
            &exec,
            |b, &exec| b.iter(|| count_poly_functions_with(black_box(p3), 2, None, exec).unwrap()),
        );
        group.bench_with_input(BenchmarkId::new("r_p3_S3_s2", name), &exec, |b, &exec| {
            b.iter(|| count_r_with(black_box(p3), 3, 2, None, exec).unwrap())
        });
    }
    group.finish();
}

fn harness(c: &mut Criterion) {
    let mut group = c.benchmark_group("property_suite");
    group.sample_size(10);
    let config = SuiteConfig {
        seed: 42,
        trials: 200,
        max_deg: 3,
        coeff_bound: 8,
    };
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::new("seed42_200", name), &exec, |b, &exec| {
            b.iter(|| random_property_suite_with(black_box(config), exec))
        });
    }
    group.finish();
}

fn construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("construction_large");
    let p5 = Prime::new(5).unwrap();
    let built = construct_large(p5, 3);
    for (name, exec) in MODES {
        group.bench_with_input(
            BenchmarkId::new("certify_p5_s3", name),
            &exec,
            |b, &exec| b.iter(|| certify_with(black_box(&built), exec).unwrap()),
        );
    }
    group.finish();
}

criterion_group!(benches, kempner, harness, construction);
criterion_main!(benches);
