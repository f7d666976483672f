//! Acceptance criteria. Runs as a plain binary so that every criterion
//! prints its verdict line even when the run succeeds.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use boolspace::counterexamples::Predicate;
use boolspace::suites::{run_suite, Suite, SuiteConfig, SuiteReport};

const SEED: u64 = 7;

struct Criterion {
    label: &'static str,
    suites: &'static [(Suite, usize)],
    budget: Option<Duration>,
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        label: "1 sum law",
        suites: &[(Suite::SumLaw, 200)],
        budget: Some(Duration::from_secs(10)),
    },
    Criterion {
        label: "2 isometry criterion vs search",
        suites: &[(Suite::IsometryOracle, 100)],
        budget: Some(Duration::from_secs(30)),
    },
    Criterion { label: "3 witt solver", suites: &[(Suite::Witt, 100)], budget: None },
    Criterion { label: "4 hypothesis battery", suites: &[(Suite::Hypothesis, 0)], budget: None },
    Criterion {
        label: "5 end-to-end extension",
        suites: &[(Suite::ExtendIsometry, 100), (Suite::ExtendContraction, 100)],
        budget: None,
    },
    Criterion { label: "6 conv uniqueness", suites: &[(Suite::ConvUnique, 50)], budget: None },
    Criterion {
        label: "7 counterexamples",
        suites: &[(Suite::Counterexamples, 50)],
        budget: Some(Duration::from_secs(10)),
    },
    Criterion { label: "8 structural", suites: &[(Suite::Structural, 0)], budget: None },
];

fn run(suite: Suite, instances: usize) -> SuiteReport {
    let cfg = SuiteConfig {
        instances,
        atoms: 3,
        dim: 3,
        predicate: Predicate::Evens,
        max_support: 16,
        ..SuiteConfig::for_suite(suite, SEED)
    };
    run_suite(suite, &cfg)
}

fn main() -> ExitCode {
    let mut all_pass = true;
    for c in CRITERIA {
        let start = Instant::now();
        let reports: Vec<SuiteReport> = c.suites.iter().map(|&(s, n)| run(s, n)).collect();
        let elapsed = start.elapsed();
        let counts_ok = c
            .suites
            .iter()
            .zip(&reports)
            .all(|(&(_, n), r)| r.is_exact() && r.instances > 0 && (n == 0 || r.instances >= n));
        let in_time = c.budget.is_none_or(|b| elapsed <= b);
        let pass = counts_ok && in_time;
        all_pass &= pass;
        let summary: Vec<String> = reports.iter().map(|r| format!("{} {}", r.suite, r)).collect();
        let budget = c.budget.map(|b| format!(" (budget {}s)", b.as_secs())).unwrap_or_default();
        println!(
            "criterion {}: {} [{}] in {:.2}s{}",
            c.label,
            if pass { "PASS" } else { "FAIL" },
            summary.join(", "),
            elapsed.as_secs_f64(),
            budget
        );
        for r in &reports {
            for f in r.failures.iter().take(5) {
                println!("    {} instance {}: {}", r.suite, f.instance, f.detail);
            }
        }
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
