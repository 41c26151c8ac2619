use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qshuffle::harness::{eval_expr, parse_dims, run_suite, Suite, SuiteConfig};
use qshuffle::phi::{phi_gen, phi_residue, CoulombContext};
use qshuffle::quiver::Quiver;
use qshuffle::shuffle::{is_integral, shuffle_mul, Generator, Integrality};

#[derive(Parser)]
#[command(name = "qshuffle", version, about = "Exact computations in quiver shuffle algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Residue,
    Closed,
}

#[derive(Subcommand)]
enum Command {
    /// Shuffle product of two expressions.
    Mul {
        #[arg(long)]
        quiver: String,
        #[arg(long = "expr", num_args = 1, required = true)]
        exprs: Vec<String>,
    },
    /// Wheel-condition membership test.
    Member {
        #[arg(long)]
        quiver: String,
        #[arg(long)]
        expr: String,
    },
    /// Difference-operator image of an expression.
    Phi {
        #[arg(long)]
        quiver: String,
        /// Counts in vertex order (`1,2`) or `vertex=count` pairs.
        #[arg(long)]
        dim: String,
        #[arg(long, value_enum, default_value = "residue")]
        mode: Mode,
        #[arg(long)]
        expr: String,
    },
    /// Runs a verification suite.
    Verify {
        #[arg(long)]
        quiver: String,
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        max_hdeg: Option<u32>,
        #[arg(long)]
        dim: Option<String>,
        #[arg(long)]
        cases: Option<usize>,
        /// Adds a falsified case reported as an ordinary failure.
        #[arg(long)]
        inject_fault: bool,
    },
}

fn load(quiver: &str) -> Result<Quiver, String> {
    Quiver::load(quiver).map_err(|e| e.to_string())
}

fn run(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Mul { quiver, exprs } => {
            let q = load(&quiver)?;
            let mut acc = eval_expr(&exprs[0], &q).map_err(|e| e.to_string())?;
            for text in &exprs[1..] {
                let next = eval_expr(text, &q).map_err(|e| e.to_string())?;
                acc = shuffle_mul(&q, &acc, &next).map_err(|e| e.to_string())?;
            }
            println!("{}", acc.write(&q.alphabet()));
            Ok(true)
        }
        Command::Member { quiver, expr } => {
            let q = load(&quiver)?;
            let e = eval_expr(&expr, &q).map_err(|e| e.to_string())?;
            match is_integral(&q, &e) {
                Integrality::Pass => {
                    println!("PASS");
                    Ok(true)
                }
                Integrality::Fail(c) => {
                    println!("FAIL\n{}", c.write(&q.alphabet()));
                    Ok(false)
                }
            }
        }
        Command::Phi { quiver, dim, mode, expr } => {
            let q = load(&quiver)?;
            let d = parse_dims(&dim, &q).map_err(|e| e.to_string())?;
            let ctx = CoulombContext::new(&q, d).map_err(|e| e.to_string())?;
            let image = match mode {
                Mode::Residue => {
                    let e = eval_expr(&expr, &q).map_err(|e| e.to_string())?;
                    phi_residue(&ctx, &e).map_err(|e| e.to_string())?
                }
                Mode::Closed => {
                    let parsed = qshuffle::harness::parse_expr(&expr, &q).map_err(|e| e.to_string())?;
                    let qshuffle::harness::Expr::Gen { gen, .. } = parsed else {
                        return Err("closed mode takes a single generator e[..] or f[..]".into());
                    };
                    let gen = Generator::new(&q, gen.side, gen.n, gen.g).map_err(|e| e.to_string())?;
                    phi_gen(&ctx, &gen)
                }
            };
            println!("{}", image.write(&q.alphabet()));
            Ok(true)
        }
        Command::Verify {
            quiver,
            suite,
            seed,
            max_hdeg,
            dim,
            cases,
            inject_fault,
        } => {
            let suite: Suite = suite.parse().map_err(|e: qshuffle::harness::ConfigError| e.to_string())?;
            let mut cfg = SuiteConfig::new(suite, &quiver).map_err(|e| e.to_string())?;
            cfg.seed = seed;
            cfg.inject_fault = inject_fault;
            if let Some(k) = max_hdeg {
                cfg.max_hdeg = k;
            }
            if let Some(n) = cases {
                cfg.cases = n;
            }
            if let Some(d) = dim {
                cfg.d = parse_dims(&d, &cfg.quiver).map_err(|e| e.to_string())?;
            }
            let report = run_suite(&cfg).map_err(|e| e.to_string())?;
            println!("{report}");
            Ok(report.all_passed())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
