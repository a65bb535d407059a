use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use ospchar::charpoly::{verma_combination, weyl_sum_character};
use ospchar::verify::{block_reach, check_trivial_cohomology, peel_decomposition};
use ospchar::{tensor_decompose, verma_expansion, Algebra, HalfInt};

fn characters(c: &mut Criterion) {
    let mut g = c.benchmark_group("character_from_expansion");
    for (alg, w) in [
        (Algebra::d(2), "3;2,1"),
        (Algebra::b(2), "3;2,1"),
        (Algebra::d(3), "3;2,1,1"),
    ] {
        let lambda = alg.parse_weight(w).unwrap();
        let terms = verma_expansion(alg, &lambda)
            .unwrap()
            .terms_down_to(HalfInt::from_int(-5));
        g.bench_with_input(BenchmarkId::new(alg.to_string(), w), &terms, |b, terms| {
            b.iter(|| {
                verma_combination(
                    alg,
                    terms.iter().map(|(w, &k)| (w, k)),
                    HalfInt::from_int(-5),
                )
                .unwrap()
            })
        });
    }
    g.finish();

    let b2 = Algebra::b(2);
    let typical = b2.parse_weight("4;2,1").unwrap();
    c.bench_function("weyl_sum B(2|1) 4;2,1", |b| {
        b.iter(|| weyl_sum_character(b2, black_box(&typical)).unwrap())
    });
}

fn tensors(c: &mut Criterion) {
    let d2 = Algebra::d(2);
    let lambda = d2.parse_weight("3;2,1").unwrap();
    c.bench_function("tensor_decompose D(2|1) 3;2,1", |b| {
        b.iter(|| tensor_decompose(d2, black_box(&lambda)).unwrap())
    });
    c.bench_function("peel D(2|1) 3;2,1", |b| {
        b.iter(|| peel_decomposition(d2, black_box(&lambda)).unwrap())
    });
}

fn oracles(c: &mut Criterion) {
    let d2 = Algebra::d(2);
    let zero = d2.zero();
    c.bench_function("block search D(2|1) bound 10", |b| {
        b.iter(|| block_reach(d2, black_box(&zero), HalfInt::from_int(10)).unwrap())
    });
    c.bench_function("cohomology D(3|1) q<=8", |b| {
        b.iter(|| check_trivial_cohomology(Algebra::d(3), 8))
    });
}

criterion_group!(benches, characters, tensors, oracles);
criterion_main!(benches);
