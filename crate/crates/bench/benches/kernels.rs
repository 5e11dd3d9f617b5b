use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use spectra_core::constructions::catalog::{self, CatalogName};
use spectra_core::constructions::{circle_group, commutator_ring, construct_n};
use spectra_core::probability::{pr_c_group, pr_c_group_class_count, pr_f_ring};
use spectra_core::spectrum::{
    enumerate_bilinear_rings, enumerate_general_rings, BilinearFamilySpec,
};
use spectra_core::{Caps, PolySpec};

fn group_kernels(c: &mut Criterion) {
    let mut group = c.benchmark_group("pr_c_group");
    for name in [
        CatalogName::Symmetric(5),
        CatalogName::Heisenberg(7),
        CatalogName::Dihedral(200),
    ] {
        let g = catalog::group(&name).unwrap();
        group.bench_with_input(BenchmarkId::new("pairs", &name), &g, |b, g| {
            b.iter(|| pr_c_group(black_box(g)))
        });
        group.bench_with_input(BenchmarkId::new("classes", &name), &g, |b, g| {
            b.iter(|| pr_c_group_class_count(black_box(g)))
        });
    }
    group.finish();
}

fn ring_kernels(c: &mut Criterion) {
    let mut group = c.benchmark_group("pr_f_ring");
    for name in [
        CatalogName::Ut3(5),
        CatalogName::Matrix2(3),
        CatalogName::Zn(1024),
    ] {
        let r = catalog::ring(&name).unwrap();
        for f in [PolySpec::COMMUTE, PolySpec::ANNIHILATE, PolySpec::new(2, 3)] {
            group.bench_with_input(BenchmarkId::new(format!("{name}"), f), &r, |b, r| {
                b.iter(|| pr_f_ring(black_box(r), f))
            });
        }
    }
    group.finish();
}

fn constructions(c: &mut Criterion) {
    let caps = Caps::default();
    let ut3 = catalog::ring(&CatalogName::Ut3(3)).unwrap();
    c.bench_function("circle_group(N(ut3:3))", |b| {
        b.iter(|| circle_group(&construct_n(black_box(&ut3), &caps).unwrap()).unwrap())
    });
    let h5 = catalog::group(&CatalogName::Heisenberg(5)).unwrap();
    c.bench_function("commutator_ring(heisenberg:5)", |b| {
        b.iter(|| commutator_ring(black_box(&h5)).unwrap())
    });
}

fn spectra(c: &mut Criterion) {
    let caps = Caps::default();
    let mut group = c.benchmark_group("spectrum");
    group.sample_size(10);
    let general = enumerate_general_rings(&[2, 2], &[], &caps).unwrap();
    group.bench_function("general (2,2)", |b| {
        b.iter(|| general.spectrum(PolySpec::COMMUTE).unwrap())
    });
    let spec = BilinearFamilySpec {
        v_invariants: vec![3, 3, 3],
        w_invariants: vec![3],
        alternating: true,
    };
    let bilinear = enumerate_bilinear_rings(&spec, &caps).unwrap();
    group.bench_function("bilinear (3,3,3)/(3)", |b| {
        b.iter(|| bilinear.spectrum(PolySpec::COMMUTE).unwrap())
    });
    group.finish();
}

criterion_group!(benches, group_kernels, ring_kernels, constructions, spectra);
criterion_main!(benches);
