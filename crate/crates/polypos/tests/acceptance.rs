//! Runs every acceptance criterion at full size against its time limit and
//! prints one line per criterion. The criteria run one after another so that
//! the timings do not compete for cores. Built without the test harness so
//! the lines are printed even when every criterion passes.

use std::time::Duration;

use polypos::suites::{run_suite_with, write_replays, SuiteOptions, Verdict};

const CRITERIA: &[(u32, &str, u64)] = &[
    (1, "type-d-table", 1),
    (2, "type-d-real-rooted", 120),
    (3, "s-eulerian", 120),
    (4, "orbit-identity", 60),
    (5, "gamma-peaks", 30),
    (6, "l-operator", 120),
    (7, "boros-moll", 10),
    (8, "subdivision", 120),
    (9, "clawfree", 300),
    (10, "chromatic-log-concave", 300),
    (11, "matrix-tree", 60),
    (12, "sep", 120),
    (13, "mv-eulerian", 120),
    (14, "identities", 60),
    (15, "g-lambda", 120),
    (16, "sign-graded", 180),
    (17, "darroch", 10),
];

fn main() {
    let opts = SuiteOptions::default();
    let replay_dir = std::env::temp_dir().join("polypos-acceptance-replays");
    let mut failed = Vec::new();
    for &(id, suite, limit) in CRITERIA {
        let report = run_suite_with(suite, &opts).expect("known suite");
        let in_time = report.elapsed <= Duration::from_secs(limit);
        let ok = report.passed() && in_time;
        println!(
            "criterion {id:>2} {suite:<22} {} {:>8.2}s (limit {limit}s) checks: {} pass, {} fail, {} undetermined",
            if ok { "PASS" } else { "FAIL" },
            report.elapsed.as_secs_f64(),
            report.count(Verdict::Pass),
            report.count(Verdict::Fail),
            report.count(Verdict::Undetermined),
        );
        for c in report.failures() {
            println!("    failed: {} {}", c.name, c.payload.as_ref().map(|p| p.to_string()).unwrap_or_default());
        }
        for c in report.checks.iter().filter(|c| c.verdict == Verdict::Undetermined) {
            println!("    undetermined: {} ({})", c.name, c.detail.as_deref().unwrap_or(""));
        }
        if !ok {
            if let Ok(files) = write_replays(&report, &replay_dir) {
                for f in files {
                    println!("    replay: {}", f.display());
                }
            }
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!("all {} criteria pass", CRITERIA.len());
    } else {
        println!("criteria failed: {failed:?}");
        std::process::exit(1);
    }
}
