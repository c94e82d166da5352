use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use iso_euler::eos::ModifiedTait;
use iso_euler::fvcheck::{run_noh, Boundary, Grid1D, NohRunOptions, DEFAULT_CFL};
use iso_euler::similarity::{integrate, GeneralSystem, IntegratorOptions, SimilarityMap};
use iso_euler::{bubble_solution, solve_noh_shock, Geometry};

fn noh_root(c: &mut Criterion) {
    let eos = ModifiedTait::water();
    c.bench_function("noh_shock_tait_u0_0.1", |b| {
        b.iter(|| solve_noh_shock(&eos, 1.0, black_box(0.1)).unwrap())
    });
}

fn similarity_ode(c: &mut Criterion) {
    let sol = bubble_solution(Geometry::Spherical, -1e-3, 1.0).unwrap();
    let eos = sol.eos();
    let sys = GeneralSystem {
        map: SimilarityMap::kinematic(),
        eos: &eos,
        r: 1.0,
        geometry: Geometry::Spherical,
    };
    let opts = IntegratorOptions::default();
    c.bench_function("case_iv_bubble_integrate", |b| {
        b.iter(|| integrate(&sys, 1.0, black_box([sol.w0, -1.0]), 3.0, &opts).unwrap())
    });
}

fn finite_volume(c: &mut Criterion) {
    let eos = ModifiedTait::water();
    let grid = Grid1D::uniform(
        Geometry::Planar,
        0.0,
        0.5,
        400,
        1.0,
        -0.1,
        Boundary::Wall,
        Boundary::Inflow { rho: 1.0, u: -0.1 },
        DEFAULT_CFL,
    )
    .unwrap();
    c.bench_function("fv_step_400_cells", |b| {
        b.iter_batched(
            || grid.clone(),
            |mut g| g.step(&eos).unwrap(),
            criterion::BatchSize::SmallInput,
        )
    });
    let mut group = c.benchmark_group("fv_noh");
    group.sample_size(10);
    group.bench_function("noh_200_cells_to_t1", |b| {
        b.iter(|| run_noh(&eos, 1.0, 0.1, 200, 1.0, &NohRunOptions::default()).unwrap())
    });
    group.finish();
}

criterion_group!(benches, noh_root, similarity_ode, finite_volume);
criterion_main!(benches);
