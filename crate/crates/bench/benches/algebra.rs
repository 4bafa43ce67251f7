use cda_bench::{dense_matrix, instance};
use cda_core::boundquiver::conditions::{build_tilting_apr, build_tilting_canonical, check_conditions};
use cda_core::boundquiver::constructors::squid_algebra;
use cda_core::boundquiver::homological::{injective, projective_resolution};
use cda_core::boundquiver::tilting::{end_dims, is_tilting};
use cda_core::lattice::{coxeter_matrix, gram_both_bases, gram_s_basis, Symbol};
use cda_core::verify;
use cda_core::Field;
use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

fn exact_linear_algebra(c: &mut Criterion) {
    let mut g = c.benchmark_group("exactalg");
    for (name, field) in [("Q", Field::Rational), ("F101", Field::Prime(101))] {
        let m = dense_matrix(12, field);
        g.bench_function(format!("inverse_12_{name}"), |b| b.iter(|| black_box(&m).inverse().unwrap()));
        g.bench_function(format!("kernel_12x24_{name}"), |b| {
            let w = m.hstack(&m);
            b.iter(|| black_box(&w).kernel_basis())
        });
    }
    let s = dense_matrix(10, Field::Rational);
    let sym = s.add(&s.transpose());
    g.bench_function("signature_10", |b| b.iter(|| black_box(&sym).signature_symmetric().unwrap()));
    g.finish();
}

fn lattices(c: &mut Criterion) {
    let mut g = c.benchmark_group("lattice");
    let s = Symbol::simply_laced(&[2, 3, 7]).unwrap();
    g.bench_function("coxeter_237", |b| b.iter(|| coxeter_matrix(&gram_s_basis(black_box(&s))).unwrap()));
    g.bench_function("both_bases_237", |b| b.iter(|| gram_both_bases(black_box(&s)).unwrap()));
    g.bench_function("symbol_congruences_237", |b| b.iter(|| verify::symbol_congruences(black_box(&s))));
    g.finish();
}

fn bound_quivers(c: &mut Criterion) {
    let mut g = c.benchmark_group("boundquiver");
    g.sample_size(20);
    for w in [vec![2, 2], vec![2, 3, 4]] {
        let inst = instance(&w, Field::Rational);
        let tag = w.iter().map(u32::to_string).collect::<Vec<_>>().join("");
        let alg = squid_algebra(&inst).unwrap();
        let f = alg.vertex("F").unwrap();
        let i_f = injective(&alg, f);
        g.bench_function(format!("resolution_{tag}"), |b| b.iter(|| projective_resolution(&alg, black_box(&i_f), 4)));
        g.bench_function(format!("conditions_{tag}"), |b| b.iter(|| check_conditions(black_box(&inst)).unwrap()));
        let (a, t) = build_tilting_apr(&inst).unwrap();
        g.bench_function(format!("apr_is_tilting_{tag}"), |b| b.iter(|| is_tilting(&a, black_box(&t))));
        g.bench_function(format!("apr_end_dims_{tag}"), |b| b.iter(|| end_dims(&a, black_box(&t))));
        g.bench_function(format!("canonical_summands_{tag}"), |b| {
            b.iter(|| build_tilting_canonical(black_box(&inst)).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, exact_linear_algebra, lattices, bound_quivers);
criterion_main!(benches);
