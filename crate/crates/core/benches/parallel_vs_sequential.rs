use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use harmonia::exec;
use harmonia::groups::{self, FiniteAbelianGroup, GroupFunction};
use harmonia::numerics::{cis, C64};

fn line_sum(c: &mut Criterion) {
    let mut g = c.benchmark_group("line_midpoint");
    for &n in &[1usize << 16, 1 << 20] {
        let h = 80.0 / n as f64;
        let term = move |k: usize| {
            let x = -40.0 + (k as f64 + 0.5) * h;
            C64::new((-x.abs()).exp(), 0.0) * cis(-x * 1.3) * h
        };
        g.bench_with_input(BenchmarkId::new("sequential", n), &n, |b, &n| {
            b.iter(|| exec::sum_sequential(black_box(n), term))
        });
        #[cfg(feature = "parallel")]
        g.bench_with_input(BenchmarkId::new("parallel", n), &n, |b, &n| {
            b.iter(|| exec::sum_parallel(black_box(n), term))
        });
    }
    g.finish();
}

fn circle_window(c: &mut Criterion) {
    let n = 4096usize;
    let samples: Vec<C64> = (0..n)
        .map(|k| C64::new((2.0 * std::f64::consts::PI * k as f64 / n as f64).cos().exp(), 0.0))
        .collect();
    let coeff = |j: usize| {
        let j = j as f64 - 64.0;
        samples
            .iter()
            .enumerate()
            .map(|(k, v)| v * cis(-2.0 * std::f64::consts::PI * j * k as f64 / n as f64))
            .sum::<C64>()
            / n as f64
    };
    let mut g = c.benchmark_group("circle_window_129");
    g.bench_function("sequential", |b| b.iter(|| exec::map_sequential(black_box(129), coeff)));
    #[cfg(feature = "parallel")]
    g.bench_function("parallel", |b| b.iter(|| exec::map_parallel(black_box(129), coeff)));
    g.finish();
}

fn group_transform(c: &mut Criterion) {
    let group = FiniteAbelianGroup::new(vec![16, 12, 8]).unwrap();
    let f = GroupFunction::from_fn(&group, |x| C64::new((x as f64).sin(), (x as f64 * 0.3).cos()));
    let chars = group.characters();
    let mut g = c.benchmark_group("group_transform_1536");
    g.bench_function("sequential", |b| {
        b.iter(|| exec::map_sequential(chars.len(), |m| groups::fourier_transform(black_box(&f), &chars[m]).unwrap()))
    });
    #[cfg(feature = "parallel")]
    g.bench_function("parallel", |b| {
        b.iter(|| exec::map_parallel(chars.len(), |m| groups::fourier_transform(black_box(&f), &chars[m]).unwrap()))
    });
    g.finish();
}

criterion_group!(benches, line_sum, circle_window, group_transform);
criterion_main!(benches);
