//! One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use ospchar::verify::{self, check_positive_symmetric};
use ospchar::{Algebra, HalfInt, VerificationReport};

struct Outcome {
    reports: Vec<VerificationReport>,
    extra: Vec<String>,
}

impl From<Vec<VerificationReport>> for Outcome {
    fn from(reports: Vec<VerificationReport>) -> Self {
        Outcome {
            reports,
            extra: Vec::new(),
        }
    }
}

fn criterion(n: u32, title: &str, budget: Duration, run: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let out = run();
    let took = start.elapsed();
    let cases: usize = out.reports.iter().map(|r| r.cases).sum();
    let failed: Vec<&VerificationReport> = out.reports.iter().filter(|r| !r.passed()).collect();
    let ok = failed.is_empty() && out.extra.is_empty() && cases > 0;
    let slow = if took > budget {
        " (over time budget)"
    } else {
        ""
    };
    println!(
        "{} criterion {n}: {title} [{cases} cases, {:.2}s of {}s]{slow}",
        if ok { "PASS" } else { "FAIL" },
        took.as_secs_f64(),
        budget.as_secs()
    );
    for r in failed {
        println!("{r}");
    }
    for e in &out.extra {
        println!("  {e}");
    }
    ok
}

fn main() -> ExitCode {
    let small = [Algebra::d(2), Algebra::d(3), Algebra::b(1), Algebra::b(2)];
    let rank_two = [Algebra::d(2), Algebra::b(2)];
    let secs = Duration::from_secs;
    let mut all = true;

    all &= criterion(1, "trivial module telescopes to e^0", secs(5), || {
        small
            .iter()
            .map(|&a| verify::check_trivial_telescoping(a, HalfInt::from_int(-8)))
            .collect::<Vec<_>>()
            .into()
    });
    all &= criterion(2, "natural module has dimension n+2", secs(5), || {
        small
            .iter()
            .map(|&a| verify::check_natural_dimension(a))
            .collect::<Vec<_>>()
            .into()
    });
    all &= criterion(
        3,
        "typical expansion = Kac formula = Weyl sum, ht <= 6",
        secs(60),
        || {
            rank_two
                .iter()
                .map(|&a| verify::sweep_typical(a, 6))
                .collect::<Vec<_>>()
                .into()
        },
    );
    all &= criterion(
        4,
        "tensor identity and dimension count with L_delta, ht <= 5",
        secs(300),
        || {
            rank_two
                .iter()
                .map(|&a| verify::sweep_tensor(a, 5))
                .collect::<Vec<_>>()
                .into()
        },
    );
    all &= criterion(
        5,
        "u-cohomology dimensions, q <= 10, rank check q <= 6",
        secs(30),
        || {
            [Algebra::d(2), Algebra::d(3), Algebra::b(2), Algebra::b(3)]
                .iter()
                .map(|&a| verify::check_trivial_cohomology(a, 10))
                .collect::<Vec<_>>()
                .into()
        },
    );
    all &= criterion(
        6,
        "block keys agree with the move search, ht <= 6",
        secs(120),
        || {
            rank_two
                .iter()
                .map(|&a| verify::check_blocks(a, 6, 6))
                .collect::<Vec<_>>()
                .into()
        },
    );
    all &= criterion(
        7,
        "positivity and Weyl symmetry of sweeps 3-4",
        secs(60),
        || {
            rank_two
                .iter()
                .flat_map(|&a| {
                    a.dominant_weights(6)
                        .into_iter()
                        .map(move |l| check_positive_symmetric(a, &l))
                })
                .collect::<Vec<_>>()
                .into()
        },
    );
    all &= criterion(8, "mirror symmetry in type D, ht <= 5", secs(30), || {
        vec![verify::sweep_mirror(Algebra::d(2), 5)].into()
    });
    all &= criterion(
        9,
        "reflected expansions follow the recursion, ht <= 6",
        secs(10),
        || {
            let reports: Vec<_> = rank_two
                .iter()
                .map(|&a| verify::sweep_reflected(a, 6))
                .collect();
            let extra = reports
                .iter()
                .filter(|r| r.cases == 0)
                .map(|r| format!("no reflected weights found for {}", r.algebra))
                .collect();
            Outcome { reports, extra }
        },
    );

    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
