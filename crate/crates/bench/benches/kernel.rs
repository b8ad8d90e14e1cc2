use criterion::{black_box, criterion_group, criterion_main, Criterion};
use qtwist::coideal::{verify_reflection_finite, Case};
use qtwist::determinants::{characteristic_identity, pi_map, qdet, GlEval, Which};
use qtwist::freealg::NcPoly;
use qtwist::presentations::{shared, Kind};
use qtwist::tensorcalc::{permutations, verify_tensor_identities};

fn normal_form(c: &mut Criterion) {
    let h = shared(Kind::UqglN, 3, None).unwrap();
    let w = NcPoly::parse("tb[2,3]*tb[1,2]*t[3,1]*t[2,1]*tb[1,3]", &h.vars).unwrap();
    c.bench_function("normal form uqgl:3 degree 5", |b| b.iter(|| h.normal_form(black_box(&w)).unwrap()));
}

fn suites(c: &mut Criterion) {
    let mut g = c.benchmark_group("suites");
    g.sample_size(10);
    g.bench_function("tensor N=3", |b| b.iter(|| verify_tensor_identities(black_box(3))));
    g.bench_function("reflection orth N=2", |b| b.iter(|| verify_reflection_finite(Case::Orth, black_box(2))));
    g.bench_function("charid N=2", |b| b.iter(|| characteristic_identity(black_box(2))));
    g.finish();
}

fn determinants(c: &mut Criterion) {
    let ctx = GlEval::new(3).unwrap();
    let mut g = c.benchmark_group("determinants");
    g.sample_size(10);
    g.bench_function("qdet N=3", |b| b.iter(|| qdet(&ctx, black_box(Which::T)).unwrap()));
    g.finish();
    let perms = permutations(6);
    c.bench_function("pi_map over S_6", |b| b.iter(|| perms.iter().map(|p| pi_map(p).unwrap().p_prime[0]).sum::<usize>()));
}

criterion_group!(benches, normal_form, suites, determinants);
criterion_main!(benches);
