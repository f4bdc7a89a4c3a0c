//! Acceptance criteria, run in order in a single test so that the reported
//! runtimes are not skewed by other tests competing for cores. One line per
//! criterion is printed; run with `--nocapture` to see them.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use ts_spectra::verify::{errata, inequality_failures, lift_interval, recipe_interval};
use ts_spectra::{
    arm_leg_decomposition, brute_spectrum, cayley_adjacency_spectrum, content_sum, eigenvalue,
    enumerate, hook_dimension, lift_identity_check, partition_count, spectrum_with_multiplicity,
    witness, BruteOptions, Partition, WitnessOptions,
};

struct Outcome {
    id: u32,
    name: &'static str,
    passed: bool,
    detail: String,
    elapsed: Duration,
    limit: Duration,
}

fn run(
    id: u32,
    name: &'static str,
    limit_secs: u64,
    f: impl FnOnce() -> (bool, String),
) -> Outcome {
    let start = Instant::now();
    let (ok, detail) = f();
    let elapsed = start.elapsed();
    let limit = Duration::from_secs(limit_secs);
    let passed = ok && elapsed <= limit;
    let o = Outcome {
        id,
        name,
        passed,
        detail,
        elapsed,
        limit,
    };
    println!(
        "{} criterion {:>2} {:<34} {:>8.2}s / {:>4}s  {}",
        if o.passed { "PASS" } else { "FAIL" },
        o.id,
        o.name,
        o.elapsed.as_secs_f64(),
        o.limit.as_secs(),
        o.detail
    );
    o
}

fn spectrum(n: u32) -> Vec<i64> {
    brute_spectrum(n, false, &BruteOptions::default())
        .unwrap()
        .values
}

fn formula_agreement() -> (bool, String) {
    let mut checked = 0u64;
    let mut bad = Vec::new();
    for n in 1..=30 {
        for p in enumerate(n) {
            let rho = eigenvalue(&p);
            let arm_leg: i64 = arm_leg_decomposition(&p).iter().map(|(a, l)| a + l).sum();
            if rho != content_sum(&p) || rho != arm_leg {
                bad.push(p.to_string());
            }
            checked += 1;
        }
    }
    (
        bad.is_empty(),
        format!("{checked} partitions, {} disagreements", bad.len()),
    )
}

fn worked_example() -> (bool, String) {
    let p = Partition::new(vec![4, 3, 1]).unwrap();
    let rho = eigenvalue(&p);
    let legs = arm_leg_decomposition(&p);
    (
        rho == 4 && legs == [(6, -3), (1, 0)],
        format!("rho={rho}, arm/leg={legs:?}"),
    )
}

fn small_nonexistence() -> (bool, String) {
    let absent = [(9, 2), (10, 2), (8, 3), (11, 3)];
    let present = [(11, 2), (12, 2), (10, 3), (13, 3)];
    let mut wrong = Vec::new();
    for (n, e) in absent {
        if spectrum(n).contains(&e) {
            wrong.push(format!("{e} in spec({n})"));
        }
    }
    for (n, e) in present {
        if !spectrum(n).contains(&e) {
            wrong.push(format!("{e} not in spec({n})"));
        }
    }
    (
        wrong.is_empty(),
        if wrong.is_empty() {
            "all 8 facts hold".into()
        } else {
            wrong.join(", ")
        },
    )
}

fn adjacency_oracle() -> (bool, String) {
    let mut wrong = Vec::new();
    for n in 2..=6u32 {
        let oracle = cayley_adjacency_spectrum(n).unwrap();
        if oracle.values != spectrum(n) {
            wrong.push(format!("values differ at n={n}"));
        }
        if n <= 5 {
            let hooks = spectrum_with_multiplicity(n).unwrap();
            let factorial: u64 = (1..=u64::from(n)).product();
            if oracle.multiplicities != hooks.multiplicities
                || hooks.total_multiplicity() != Some(factorial)
            {
                wrong.push(format!("multiplicities differ at n={n}"));
            }
        }
    }
    (
        wrong.is_empty(),
        if wrong.is_empty() {
            "n=2..6 agree".into()
        } else {
            wrong.join(", ")
        },
    )
}

fn constructor_sweep() -> (bool, String) {
    let verdict = errata(1, 200);
    let mut by_recipe: BTreeMap<String, usize> = BTreeMap::new();
    for r in &verdict.formula_errors {
        *by_recipe.entry(format!("{:?}", r.recipe)).or_default() += 1;
    }
    let points: u64 = verdict.sweep.checked.values().sum();
    let unrouted: Vec<_> = verdict
        .unrouted
        .iter()
        .map(|r| format!("{:?}({},{},{})", r.recipe, r.n, r.a, r.c))
        .collect();
    (
        verdict.passed(),
        format!(
            "{points} points, {} boundary rows routed, unrouted {:?}, formula errors {:?}",
            verdict.routed.len(),
            unrouted,
            by_recipe
        ),
    )
}

fn recipe_coverage() -> (bool, String) {
    let reports = recipe_interval(15..=150, true, &WitnessOptions::default());
    let targets: u64 = reports
        .iter()
        .map(|r| r.covered + r.missing.len() as u64)
        .sum();
    let missing: Vec<_> = reports
        .iter()
        .flat_map(|r| r.missing.iter().map(move |e| (r.n, *e)))
        .collect();
    (
        missing.is_empty(),
        format!(
            "{targets} targets over n=15..150, missing {:?}",
            &missing[..missing.len().min(10)]
        ),
    )
}

fn lift_coverage() -> (bool, String) {
    let reports = lift_interval(76..=120, &WitnessOptions::default());
    let failing: Vec<i64> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| r.coverage.n)
        .collect();
    let lifted: usize = reports
        .iter()
        .map(|r| {
            r.coverage
                .summary
                .values()
                .filter(|s| s.contains("lift"))
                .count()
        })
        .sum();
    let ineq = inequality_failures(76..=500);
    (
        failing.is_empty() && ineq.is_empty(),
        format!("{lifted} lift certificates, failing n {failing:?}, inequality failures {ineq:?}"),
    )
}

fn flagship() -> (bool, String) {
    let report = ts_spectra::verify::conjecture(76, &BruteOptions::default()).unwrap();
    (
        report.scanned == 9_289_091 && report.bound == 1275 && report.passed(),
        format!(
            "scanned {}, bound {}, missing {}",
            report.scanned,
            report.bound,
            report.missing.len()
        ),
    )
}

fn engine_oracle() -> (bool, String) {
    let mut wrong = Vec::new();
    let mut checked = 0;
    for n in 8..=24u32 {
        let spec = spectrum(n);
        let half = ts_spectra::choose2(i64::from(n));
        for e in -half..=half {
            let got = witness(i64::from(n), e);
            let present = spec.binary_search(&e).is_ok();
            let ok = match &got {
                Ok(c) => present && c.check(),
                Err(_) => !present,
            };
            if !ok {
                wrong.push((n, e));
            }
            checked += 1;
        }
    }
    (
        wrong.is_empty(),
        format!(
            "{checked} targets, mismatches {:?}",
            &wrong[..wrong.len().min(10)]
        ),
    )
}

fn property_suite() -> (bool, String) {
    let mut bad = Vec::new();
    for n in 1..=20u32 {
        let mut values = Vec::new();
        for p in enumerate(n) {
            let c = p.conjugate();
            if c.conjugate() != p {
                bad.push(format!("involution {p}"));
            }
            if eigenvalue(&c) != -eigenvalue(&p) {
                bad.push(format!("negation {p}"));
            }
            if !lift_identity_check(&p) {
                bad.push(format!("lift identity {p}"));
            }
            values.push(eigenvalue(&p));
        }
        values.sort_unstable();
        if values
            .iter()
            .zip(values.iter().rev())
            .any(|(a, b)| *a != -*b)
        {
            bad.push(format!("asymmetric spectrum {n}"));
        }
        if n <= 12 {
            let dims: u64 = enumerate(n)
                .map(|p| hook_dimension(&p).unwrap().pow(2))
                .sum();
            if dims != (1..=u64::from(n)).product::<u64>() {
                bad.push(format!("dimension sum {n}"));
            }
        }
    }
    for n in 0..=30u32 {
        if enumerate(n).count() as u128 != partition_count(n) {
            bad.push(format!("count {n}"));
        }
    }
    (
        bad.is_empty(),
        if bad.is_empty() {
            "all properties hold".into()
        } else {
            bad.join(", ")
        },
    )
}

#[test]
fn acceptance_criteria() {
    let outcomes = [
        run(1, "formula/tableau/arm-leg agreement", 1, formula_agreement),
        run(2, "worked tableau example", 1, worked_example),
        run(3, "small-value (non)existence", 1, small_nonexistence),
        run(4, "adjacency-matrix oracle", 30, adjacency_oracle),
        run(5, "constructor sweep n<=200", 120, constructor_sweep),
        run(6, "recipe-range coverage n=15..150", 300, recipe_coverage),
        run(7, "lift-range coverage n=76..120", 300, lift_coverage),
        run(8, "full interval at n=76", 60, flagship),
        run(9, "engine vs brute force n=8..24", 120, engine_oracle),
        run(10, "property suite", 30, property_suite),
    ];
    let failed: Vec<u32> = outcomes
        .iter()
        .filter(|o| !o.passed)
        .map(|o| o.id)
        .collect();
    println!(
        "{} of {} criteria passed",
        outcomes.len() - failed.len(),
        outcomes.len()
    );
    for o in outcomes.iter().filter(|o| !o.passed) {
        println!("  criterion {} ({}) failed: {}", o.id, o.name, o.detail);
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
