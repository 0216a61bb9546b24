use criterion::{black_box, criterion_group, criterion_main, Criterion};
use incomplete_bench::fixture;
use incomplete_core::{
    is_canonical, is_connected, is_planar_subset, sweep, FilterConfig, Platonic,
};

fn small_sweeps(c: &mut Criterion) {
    for p in [Platonic::Tetrahedron, Platonic::Cube, Platonic::Octahedron] {
        let (solid, group) = fixture(p);
        c.bench_function(&format!("sweep/{p}"), |b| {
            b.iter(|| sweep(&solid, &group, FilterConfig::ALL, 1).unwrap().total)
        });
    }
}

fn icosahedral_kernels(c: &mut Criterion) {
    let (solid, group) = fixture(Platonic::Icosahedron);
    let tables = group.non_identity_tables();
    // A fixed block of masks from the middle of the range.
    let base = 0x1555_0000u32;
    c.bench_function("canonical/icosahedron/4096", |b| {
        b.iter(|| {
            (base..base + 4096)
                .filter(|&m| is_canonical(black_box(m), tables))
                .count()
        })
    });
    c.bench_function("table_apply/icosahedron/60", |b| {
        b.iter(|| {
            tables
                .iter()
                .fold(0u32, |acc, t| acc ^ t.apply(black_box(base | 0x2a5)))
        })
    });
    c.bench_function("filters/icosahedron/4096", |b| {
        b.iter(|| {
            (base..base + 4096)
                .filter(|&m| is_connected(&solid, m) && !is_planar_subset(&solid, m))
                .count()
        })
    });
}

criterion_group!(benches, small_sweeps, icosahedral_kernels);
criterion_main!(benches);
