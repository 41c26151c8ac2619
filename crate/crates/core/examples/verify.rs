//! Runs a verification suite from code and prints its report.

use qshuffle::harness::{run_suite, Suite, SuiteConfig};

fn main() {
    let suite: Suite = std::env::args().nth(1).as_deref().unwrap_or("hom").parse().unwrap();
    let quiver = std::env::args().nth(2).unwrap_or_else(|| "a2".into());
    let mut cfg = SuiteConfig::new(suite, &quiver).unwrap();
    cfg.seed = 7;
    cfg.cases = 6;
    let report = run_suite(&cfg).unwrap();
    println!("{report}");
}
