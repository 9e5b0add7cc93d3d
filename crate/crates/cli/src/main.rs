//! Command-line frontend.
//!
//! Fillings are entered and printed with rows top-down, the way tableaux
//! are written; internally row 1 is the bottom row. Cell coordinates stay
//! (row, column) with row 1 at the bottom.
//!
//! Exit codes: 0 success/verified, 1 verification counterexample,
//! 2 invalid input or budget refusal.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use macdonald::{
    check_conjugation_symmetry, check_factorization, macdonald_polynomial, pi_star, tau_trace,
    verify_involution, verify_key_lemma, verify_lemmas, verify_theorem, EnumerationBudget, Filling,
    ShapeSpec, TailShape, DEFAULT_MAX_STATES,
};

mod output;
mod parse;

use output::Lines;
use parse::{parse_filling, parse_shape};

#[derive(Parser)]
#[command(
    name = "macdonald",
    about = "Exact Macdonald polynomial computations and verifications on fillings",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Readable output.
    Human,
    /// Stable key=value lines for CI diffing.
    MachineLines,
}

#[derive(Args)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
    /// Worker threads for enumeration (default: all cores).
    #[arg(long)]
    workers: Option<usize>,
    /// Refuse enumerations needing more than this many states.
    #[arg(long, default_value_t = DEFAULT_MAX_STATES)]
    max_states: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Print maj, inv, descents, inversions, and the per-row restricted
    /// statistics of a filling.
    Stats {
        /// Shape as comma-separated parts, e.g. "4,3,2".
        #[arg(long)]
        shape: String,
        /// Rows top-down, ";"-separated, entries comma-separated.
        #[arg(long)]
        filling: String,
        #[command(flatten)]
        common: Common,
    },
    /// Compute the monomial expansion of H~_shape in --vars variables,
    /// canonicalized to one partition per line.
    Compute {
        #[arg(long)]
        shape: String,
        /// Number of variables.
        #[arg(long)]
        vars: usize,
        /// Specialize t at a primitive l-th root of unity.
        #[arg(long)]
        l: Option<u32>,
        #[command(flatten)]
        common: Common,
    },
    /// Apply the tail involution to a filling of (mu', n^l).
    Tau {
        #[arg(long)]
        mu_prime: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        filling: String,
        #[command(flatten)]
        common: Common,
    },
    /// Split a filling of (mu', n^l) into its body and tail.
    Split {
        #[arg(long)]
        mu_prime: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        filling: String,
        #[command(flatten)]
        common: Common,
    },
    /// Check H~_{(mu',n^l)} = H~_{mu'} * H~_{(n^l)} at t = zeta_l,
    /// coefficient by coefficient in --vars variables.
    VerifyFactorization {
        #[arg(long)]
        mu_prime: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        vars: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Exhaustively check inv(tau(T)) = inv(pi*(T)) and maj(tau(T)) =
    /// maj(pi*(T)) mod l over all fillings with entries up to --max-entry.
    VerifyBijection {
        #[arg(long)]
        mu_prime: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
        /// Alphabet bound on the filling entries.
        #[arg(long)]
        max_entry: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Exhaustively check that the involution squares to the identity and
    /// preserves the evaluation.
    VerifyInvolution {
        #[arg(long)]
        mu_prime: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        max_entry: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Exhaustively check the two-row swap lemmas over all entry tuples up
    /// to --max-entry; with --mu-prime and --l, also replay the swap
    /// algorithm step by step on every filling of (mu', 2^l).
    VerifyLemmas {
        #[arg(long)]
        max_entry: usize,
        /// Body partition for the algorithm replay (tail width 2).
        #[arg(long)]
        mu_prime: Option<String>,
        #[arg(long, requires = "mu_prime")]
        l: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Check the q/t conjugation symmetry of H~_shape against the
    /// conjugate shape.
    VerifySymmetry {
        #[arg(long)]
        shape: String,
        /// Number of variables (default: the size of the shape).
        #[arg(long)]
        vars: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Stats { common, .. }
            | Command::Compute { common, .. }
            | Command::Tau { common, .. }
            | Command::Split { common, .. }
            | Command::VerifyFactorization { common, .. }
            | Command::VerifyBijection { common, .. }
            | Command::VerifyInvolution { common, .. }
            | Command::VerifyLemmas { common, .. }
            | Command::VerifySymmetry { common, .. } => common,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let workers = cli.command.common().workers;
    let outcome = match workers {
        Some(n) if n >= 1 => {
            let pool = match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
                Ok(pool) => pool,
                Err(e) => {
                    eprintln!("error: cannot build a {n}-thread pool: {e}");
                    return ExitCode::from(2);
                }
            };
            pool.install(|| run(&cli.command))
        }
        Some(_) => Err("worker count must be at least 1".to_string()),
        None => run(&cli.command),
    };
    match outcome {
        Ok(verified) => {
            if verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn core_err(e: macdonald::Error) -> String {
    e.to_string()
}

/// Runs a command; Ok(false) means a verification found a counterexample.
fn run(command: &Command) -> Result<bool, String> {
    let format = command.common().format;
    let max_states = command.common().max_states;
    match command {
        Command::Stats { shape, filling, .. } => {
            let shape = parse_shape(shape)?;
            let filling = parse_filling(&shape, filling)?;
            print_stats(&filling, format);
            Ok(true)
        }
        Command::Compute { shape, vars, l, .. } => {
            let shape = parse_shape(shape)?;
            let budget = EnumerationBudget::new(*vars, max_states).map_err(core_err)?;
            let expansion = macdonald_polynomial(&shape, &budget).map_err(core_err)?;
            let mut lines = Lines::new(format);
            lines.header("compute");
            lines.put("shape", &shape);
            lines.put("vars", vars);
            match l {
                None => {
                    let canon = expansion.symmetry_canonicalize().map_err(core_err)?;
                    for (parts, coeff) in canon {
                        lines.expansion_line(&parts, &coeff);
                    }
                }
                Some(l) => {
                    lines.put("l", l);
                    let specialized = expansion.specialize(*l).map_err(core_err)?;
                    let canon = specialized.symmetry_canonicalize().map_err(core_err)?;
                    for (parts, coeff) in canon {
                        lines.expansion_line(&parts, &coeff);
                    }
                }
            }
            lines.finish();
            Ok(true)
        }
        Command::Tau {
            mu_prime,
            n,
            l,
            filling,
            ..
        } => {
            let ts = tail_shape(mu_prime, *n, *l)?;
            let filling = parse_filling(&ts.mu(), filling)?;
            let (result, _steps) = tau_trace(&filling, &ts).map_err(core_err)?;
            let split = pi_star(&filling, &ts).map_err(core_err)?;
            let mut lines = Lines::new(format);
            lines.header("tau");
            lines.put("mu", &ts.mu());
            lines.filling_block("tau", &result);
            lines.put("maj_tau", &result.maj());
            lines.put("inv_tau", &result.inv());
            lines.put("maj_split", &split.maj());
            lines.put("inv_split", &split.inv());
            lines.finish();
            Ok(true)
        }
        Command::Split {
            mu_prime,
            n,
            l,
            filling,
            ..
        } => {
            let ts = tail_shape(mu_prime, *n, *l)?;
            let filling = parse_filling(&ts.mu(), filling)?;
            let split = pi_star(&filling, &ts).map_err(core_err)?;
            let mut lines = Lines::new(format);
            lines.header("split");
            lines.put("mu", &ts.mu());
            lines.filling_block("body", &split.body);
            lines.filling_block("tail", &split.tail);
            lines.put("maj_body", &split.body.maj());
            lines.put("inv_body", &split.body.inv());
            lines.put("maj_tail", &split.tail.maj());
            lines.put("inv_tail", &split.tail.inv());
            lines.put("maj_split", &split.maj());
            lines.put("inv_split", &split.inv());
            lines.finish();
            Ok(true)
        }
        Command::VerifyFactorization {
            mu_prime,
            n,
            l,
            vars,
            ..
        } => {
            let spec = ShapeSpec::new(parse_shape(mu_prime)?, *n, *l).map_err(core_err)?;
            let report = check_factorization(&spec, *vars, max_states).map_err(core_err)?;
            // equality in |mu| variables certifies equality of symmetric
            // functions; fewer variables is only a smoke test
            let partial = report.vars < report.mu.size();
            let mut lines = Lines::new(format);
            lines.header("verify-factorization");
            lines.put("mu", &report.mu);
            lines.put("mu_prime", &report.mu_prime);
            lines.put("n", &report.n);
            lines.put("l", &report.l);
            lines.put("vars", &report.vars);
            lines.put("partial", &partial);
            lines.put("cases", &report.cases);
            lines.put("verified", &report.verified());
            if format == Format::Human {
                if partial {
                    println!(
                        "partial check: {} variables certify less than |mu| = {}",
                        report.vars,
                        report.mu.size()
                    );
                }
                println!("{report}");
            } else {
                for m in &report.mismatches {
                    lines.put("mismatch", m);
                }
            }
            lines.finish();
            Ok(report.verified())
        }
        Command::VerifyBijection {
            mu_prime,
            n,
            l,
            max_entry,
            ..
        } => {
            let ts = tail_shape(mu_prime, *n, *l)?;
            let report = verify_theorem(&ts, *max_entry, max_states).map_err(core_err)?;
            print_verification(format, "verify-bijection", &ts, *max_entry, &report);
            Ok(report.verified())
        }
        Command::VerifyInvolution {
            mu_prime,
            n,
            l,
            max_entry,
            ..
        } => {
            let ts = tail_shape(mu_prime, *n, *l)?;
            let report = verify_involution(&ts, *max_entry, max_states).map_err(core_err)?;
            print_verification(format, "verify-involution", &ts, *max_entry, &report);
            Ok(report.verified())
        }
        Command::VerifyLemmas {
            max_entry,
            mu_prime,
            l,
            ..
        } => {
            let report = verify_lemmas(*max_entry as u32);
            let mut lines = Lines::new(format);
            lines.header("verify-lemmas");
            lines.put("max_entry", max_entry);
            lines.put("boundary_tuples", &report.boundary_tuples);
            lines.put("interior_tuples", &report.interior_tuples);
            lines.put("verified", &report.verified());
            if format == Format::Human {
                println!("{report}");
            } else {
                for failure in &report.failures {
                    lines.put("failure", failure);
                }
            }
            let mut all_verified = report.verified();
            if let (Some(mu_prime), Some(l)) = (mu_prime, l) {
                let ts = tail_shape(mu_prime, 2, *l)?;
                let key = verify_key_lemma(&ts, *max_entry, max_states).map_err(core_err)?;
                lines.put("replay_cases", &key.cases);
                lines.put("replay_verified", &key.verified());
                if format == Format::Human {
                    println!("algorithm replay: {key}");
                }
                all_verified &= key.verified();
            }
            lines.finish();
            Ok(all_verified)
        }
        Command::VerifySymmetry { shape, vars, .. } => {
            let shape = parse_shape(shape)?;
            let vars = vars.unwrap_or_else(|| shape.size().max(1));
            let report = check_conjugation_symmetry(&shape, vars, max_states).map_err(core_err)?;
            let mut lines = Lines::new(format);
            lines.header("verify-symmetry");
            lines.put("shape", &report.shape);
            lines.put("conjugate", &report.conjugate);
            lines.put("vars", &report.vars);
            lines.put("cases", &report.cases);
            lines.put("verified", &report.verified());
            if format == Format::Human {
                println!("{report}");
            } else {
                for m in &report.mismatches {
                    lines.put("mismatch", m);
                }
            }
            lines.finish();
            Ok(report.verified())
        }
    }
}

fn tail_shape(mu_prime: &str, n: usize, l: usize) -> Result<TailShape, String> {
    TailShape::new(parse_shape(mu_prime)?, n, l).map_err(core_err)
}

fn print_verification(
    format: Format,
    command: &str,
    ts: &TailShape,
    max_entry: usize,
    report: &macdonald::VerificationReport,
) {
    let mut lines = Lines::new(format);
    lines.header(command);
    lines.put("mu", &ts.mu());
    lines.put("n", &ts.n());
    lines.put("l", &ts.l());
    lines.put("max_entry", &max_entry);
    lines.put("cases", &report.cases);
    lines.put("verified", &report.verified());
    if format == Format::Human {
        println!("{report}");
    } else if let Some(ce) = &report.counterexample {
        lines.put("counterexample_case", &ce.case_index);
        for line in ce.detail.lines() {
            lines.put("counterexample", &line);
        }
    }
    lines.finish();
}

fn print_stats(filling: &Filling, format: Format) {
    let shape = filling.shape().clone();
    let mut lines = Lines::new(format);
    lines.header("stats");
    lines.put("shape", &shape);
    lines.put("filling", filling);
    lines.put("maj", &filling.maj());
    lines.put("inv", &filling.inv());
    let des = filling
        .descents()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",");
    if format == Format::Human {
        println!("Des = {{{des}}}");
    } else {
        lines.put("des", &des);
    }
    lines.put("inv_pairs", &filling.inversion_count());
    for i in 1..=shape.len() {
        let (same, below) = filling.inv_sets(i).unwrap();
        if i == 1 {
            lines.put_row(i, "inv_same", &same.len());
            continue;
        }
        lines.put_row(i, "maj", &filling.maj_rows(i).unwrap());
        lines.put_row(i, "arm", &filling.arm_rows(i).unwrap());
        lines.put_row(i, "inv_same", &same.len());
        lines.put_row(i, "inv_below", &below.len());
        lines.put_row(i, "inv", &filling.inv_rows(i).unwrap());
    }
    lines.finish();
}
