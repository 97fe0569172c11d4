//! The `korder` command line: argument parsing and command dispatch, with all
//! output captured so the surface can be driven from tests.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::boundary::sample_boundary;
use crate::criteria::counterexample_check;
use crate::error::Error;
use crate::extremal::{big_M, critical_theta, q_value};
use crate::family::{convexity_transform, h_alpha, h_alpha_prime, k_alpha, Order};
use crate::herglotz::sweep::{
    starlike_sweep, subordination_sweep, DEFAULT_PAIRS, DEFAULT_POINTS, DEFAULT_TRIALS,
    SUBORDINATION_TOL,
};
use crate::json::{complex, number, sig17};
use crate::verify::{starlike_grid, verify_all_with, VerifyOptions};
use crate::Complex;

/// Environment variable that replaces the default trial counts.
pub const TRIALS_ENV: &str = "KORDER_TRIALS";

#[derive(Debug, Parser)]
#[command(
    name = "korder",
    version,
    about = "Convex functions of order alpha: extremal maps, image domains and sharp bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// k, h, h' and 1 + z h''/h' at a point of the disk.
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        /// Complex point written as a+bi.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        z: Complex,
    },
    /// Samples of the boundary of D_alpha.
    Boundary {
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Smallest boundary angle; 0 is allowed for alpha > 1/2.
        #[arg(long, default_value_t = 1e-6)]
        theta_min: f64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// The critical angle and the bound M(alpha), alpha >= 1/2.
    ExtremalM {
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
    },
    /// Q_alpha(t) = inf Re[e^{it} f(z)/z].
    Q {
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, allow_hyphen_values = true)]
        t: f64,
    },
    /// Randomized subordination check f(z)/z in D_alpha.
    Subcheck {
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_POINTS)]
        points: usize,
        #[arg(long, default_value_t = SUBORDINATION_TOL)]
        tolerance: f64,
    },
    /// Starlikeness of (f + g)/2 for random pairs in K(alpha).
    StarlikeAvg {
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        pairs: Option<usize>,
    },
    /// The odd convex polynomial z + z^3/100 + z^5/50 against H2.
    Counterexample,
    /// Run every named numeric check.
    VerifyPaper {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        trials: Option<usize>,
    },
}

fn parse_complex(s: &str) -> Result<Complex, String> {
    s.trim()
        .parse::<Complex>()
        .map_err(|e| format!("expected a complex number like 0.5-0.25i: {e}"))
}

/// Exit status and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn data(code: i32, stdout: String) -> Self {
        Self {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(code: i32, stderr: String) -> Self {
        Self {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

/// Runs `argv` (program name first), reading [`TRIALS_ENV`] for default
/// trial counts.
pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let env = std::env::var(TRIALS_ENV).ok();
    run_with_trials(argv, env.as_deref())
}

/// Like [`run`], with the trial override passed explicitly.
pub fn run_with_trials<I, S>(argv: I, trials_override: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::error(2, text)
            } else {
                Outcome::data(0, text)
            };
        }
    };
    let trials = match trials_override.map(str::parse::<usize>) {
        None => None,
        Some(Ok(n)) if n > 0 => Some(n),
        Some(_) => {
            return Outcome::error(2, format!("{TRIALS_ENV} must be a positive integer\n"));
        }
    };
    match dispatch(cli.command, trials) {
        Ok(out) => out,
        Err(e) => {
            let code = match e {
                Error::Domain(_) | Error::Singular(_) => 2,
                _ => 1,
            };
            Outcome::error(code, format!("error: {e}\n"))
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn status(pass: bool) -> i32 {
    if pass {
        0
    } else {
        1
    }
}

fn dispatch(command: Command, env_trials: Option<usize>) -> crate::Result<Outcome> {
    match command {
        Command::Eval { alpha, z } => {
            let o = Order::new(alpha)?;
            let out = json!({
                "alpha": number(alpha),
                "z": complex(z),
                "k": complex(k_alpha(&o, z)?),
                "h": complex(h_alpha(&o, z)?),
                "h_prime": complex(h_alpha_prime(&o, z)?),
                "convexity_transform": complex(convexity_transform(&o, z)?),
            });
            Ok(Outcome::data(0, to_json(&out)))
        }
        Command::Boundary {
            alpha,
            samples,
            theta_min,
            format,
        } => {
            let o = Order::new(alpha)?;
            let pts = sample_boundary(&o, samples, theta_min)?;
            let text = match format {
                Format::Csv => {
                    let mut s = String::from("theta,u,v,phi\n");
                    for p in &pts {
                        let _ = writeln!(
                            s,
                            "{},{},{},{}",
                            sig17(p.theta),
                            sig17(p.point.re),
                            sig17(p.point.im),
                            sig17(p.turning)
                        );
                    }
                    s
                }
                Format::Json => to_json(&pts),
            };
            Ok(Outcome::data(0, text))
        }
        Command::ExtremalM { alpha } => {
            let o = Order::new(alpha)?;
            let m = big_M(&o)?;
            // at alpha = 1/2 the supremum is approached as theta -> 0 and not attained
            let theta = if o.is_bounded() {
                number(critical_theta(&o)?)
            } else {
                serde_json::Value::Null
            };
            let out = json!({ "alpha": number(alpha), "theta_alpha": theta, "M": number(m) });
            Ok(Outcome::data(0, to_json(&out)))
        }
        Command::Q { alpha, t } => {
            let o = Order::new(alpha)?;
            Ok(Outcome::data(0, to_json(&q_value(&o, t)?)))
        }
        Command::Subcheck {
            alpha,
            seed,
            trials,
            points,
            tolerance,
        } => {
            let o = Order::new(alpha)?;
            let trials = trials.or(env_trials).unwrap_or(DEFAULT_TRIALS);
            let report = subordination_sweep(&o, seed, trials, points, tolerance)?;
            Ok(Outcome::data(status(report.passed()), to_json(&report)))
        }
        Command::StarlikeAvg { alpha, seed, pairs } => {
            let o = Order::new(alpha)?;
            let pairs = pairs.or(env_trials).unwrap_or(DEFAULT_PAIRS);
            let report = starlike_sweep(&o, seed, pairs, &starlike_grid())?;
            Ok(Outcome::data(status(report.all_starlike), to_json(&report)))
        }
        Command::Counterexample => {
            let report = counterexample_check();
            Ok(Outcome::data(status(report.pass), to_json(&report)))
        }
        Command::VerifyPaper { seed, trials } => {
            let opts = match trials.or(env_trials) {
                Some(n) => VerifyOptions::with_trials(n),
                None => VerifyOptions::default(),
            };
            let report = verify_all_with(seed, &opts);
            Ok(Outcome::data(status(report.overall), to_json(&report)))
        }
    }
}
