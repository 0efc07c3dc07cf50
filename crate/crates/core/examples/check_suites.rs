//! Runs every named check suite and prints one line per check.

use invforge::checks::{run_suite, SUITES};

fn main() {
    let mut all = true;
    for name in SUITES {
        let report = run_suite(name).expect("known suite");
        all &= report.passed();
        println!("{report}");
    }
    std::process::exit(if all { 0 } else { 1 });
}
