//! Parsers, seeded sampling and the verification suites behind the CLI.

mod parse;
mod random;
mod suite;

pub use parse::{eval_expr, parse_dims, parse_expr, parse_poly, parse_quiver, Expr, ExprError};
pub use random::{nonzero_dims, orbit_sum, random_element, Sampler};
pub use suite::{
    run_suite, suite_cases, worker_count, Case, ConfigError, Failure, Suite, SuiteConfig, VerificationReport,
};
