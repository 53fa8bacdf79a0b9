//! `lgb` — generate coefficient systems from truncated Laurent series, run
//! Buchberger's algorithm, emit the closed-form basis, and verify the
//! claimed properties rank by rank.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use lgb_core::exactnum::{catalan, catalan_identity, lambda, Rational};
use lgb_core::groebner::{buchberger, interreduce, BuchbergerOptions, PairStrategy};
use lgb_core::laurent::{build_general_system, build_special_system, SystemSpec};
use lgb_core::polyring::{latex_align, BasisDocument};
use lgb_core::verify::{closed_form_basis, verify_all};

const NAMING_NOTE: &str = "Variable naming: the unknown written C_{-k} is the ring variable Ck; \
the lex order is C_{-T} > ... > C_{-1} > y, so y is always the least significant variable.";

#[derive(Parser)]
#[command(name = "lgb", version, about = "Exact Groebner engine for Laurent-series coefficient systems", long_about = None, after_help = NAMING_NOTE)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate the coefficient system for a rank r (n=2, m=2r+1) or for
    /// explicit parameters n, m with optional weights
    Gen(GenArgs),
    /// Read a system or basis file and emit its reduced Groebner basis
    Gb(GbArgs),
    /// Emit the closed-form basis for a rank
    ClosedForm(RankArgs),
    /// Run every claim check for a rank; exits 1 on any failure
    Verify(RankArgs),
    /// Print the Catalan/lambda identity table
    Catalan(CatalanArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Latex,
    Text,
}

#[derive(Args)]
struct GenArgs {
    /// Rank of the special profile n=2, m=2r+1
    #[arg(long, conflicts_with_all = ["n", "m", "weights"])]
    r: Option<usize>,
    #[arg(long, requires = "m")]
    n: Option<usize>,
    #[arg(long, requires = "n")]
    m: Option<usize>,
    /// Comma-separated weights q_0,...,q_{m+n-2}; defaults to 1,0,...,0
    #[arg(long, value_delimiter = ',')]
    weights: Option<Vec<String>>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Output file; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GbArgs {
    /// Input system or basis file (JSON); stdin when omitted
    #[arg(long)]
    input: Option<PathBuf>,
    /// Disable the coprime pair criterion
    #[arg(long)]
    no_coprime: bool,
    #[arg(long, value_enum, default_value_t = Strategy::Normal)]
    strategy: Strategy,
    /// Reduction step budget
    #[arg(long, default_value_t = 10_000_000)]
    max_steps: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Strategy {
    Normal,
    Fifo,
}

#[derive(Args)]
struct RankArgs {
    #[arg(long)]
    r: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CatalanArgs {
    /// Largest index of the table
    #[arg(long)]
    max: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Usage problems exit 2, failed checks and aborted computations exit 1.
enum CliError {
    Usage(String),
    Failure(String),
}

impl CliError {
    fn code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) => ExitCode::from(2),
            CliError::Failure(_) => ExitCode::from(1),
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Failure(m) => m,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.code()
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Gen(args) => gen(args),
        Command::Gb(args) => gb(args),
        Command::ClosedForm(args) => closed_form(args),
        Command::Verify(args) => verify(args),
        Command::Catalan(args) => catalan_table(args),
    }
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, content)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            io::stdout()
                .write_all(content.as_bytes())
                .map_err(|e| usage(format!("cannot write to stdout: {e}")))
        }
    }
}

fn to_pretty_json<T: serde::Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Failure(format!("serialization failed: {e}")))?;
    s.push('\n');
    Ok(s)
}

fn parse_weights(raw: &[String], expected: usize) -> Result<Vec<Rational>, CliError> {
    let mut weights = Vec::with_capacity(raw.len());
    for w in raw {
        weights.push(
            w.trim()
                .parse::<Rational>()
                .map_err(|e| usage(format!("bad weight `{w}`: {e}")))?,
        );
    }
    if weights.len() != expected {
        return Err(usage(format!(
            "expected {expected} weights, got {}",
            weights.len()
        )));
    }
    Ok(weights)
}

fn gen(args: GenArgs) -> Result<(), CliError> {
    let (spec, basis) = match (args.r, args.n, args.m) {
        (Some(r), None, None) => {
            if r == 0 {
                return Err(usage("--r must be at least 1"));
            }
            (SystemSpec::special(r), build_special_system(r))
        }
        (None, Some(n), Some(m)) => {
            let weights = match &args.weights {
                Some(raw) => parse_weights(raw, m + n - 1)?,
                None => {
                    let mut w = vec![Rational::zero(); m + n - 1];
                    w[0] = Rational::one();
                    w
                }
            };
            let spec = SystemSpec::new(n, m, weights).map_err(|e| usage(e.to_string()))?;
            let basis = build_general_system(&spec);
            (spec, basis)
        }
        _ => return Err(usage("pass either --r or both --n and --m")),
    };

    let content = match args.format {
        Format::Json => {
            let mut doc = BasisDocument::from_basis(&basis);
            doc.spec = Some(spec);
            to_pretty_json(&doc)?
        }
        Format::Latex => {
            let rows = basis
                .gens()
                .iter()
                .enumerate()
                .map(|(i, g)| (format!("E_{{{}}}", i + 1), g));
            format!("% {}\n% {NAMING_NOTE}\n{}", basis.label(), latex_align(rows))
        }
        Format::Text => {
            let mut s = format!("# {}\n# {NAMING_NOTE}\n", basis.label());
            for (i, g) in basis.gens().iter().enumerate() {
                s.push_str(&format!("E_{} = {g}\n", i + 1));
            }
            s
        }
    };
    emit(&args.out, &content)
}

fn read_input(input: &Option<PathBuf>) -> Result<String, CliError> {
    match input {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| usage(format!("cannot read {}: {e}", path.display()))),
        None => {
            let mut buf = String::new();
            io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| usage(format!("cannot read stdin: {e}")))?;
            Ok(buf)
        }
    }
}

fn gb(args: GbArgs) -> Result<(), CliError> {
    let text = read_input(&args.input)?;
    let doc: BasisDocument =
        serde_json::from_str(&text).map_err(|e| usage(format!("bad input file: {e}")))?;
    let basis = doc.to_basis().map_err(usage)?;
    if basis.is_empty() {
        return Err(usage("input basis has no nonzero generators"));
    }

    let opts = BuchbergerOptions {
        use_coprime_criterion: !args.no_coprime,
        pair_strategy: match args.strategy {
            Strategy::Normal => PairStrategy::Normal,
            Strategy::Fifo => PairStrategy::Fifo,
        },
        max_reduction_steps: args.max_steps,
    };
    let run = buchberger(&basis, &opts).map_err(|e| CliError::Failure(e.to_string()))?;
    let reduced = interreduce(&run.basis).map_err(|e| CliError::Failure(e.to_string()))?;
    eprintln!(
        "pairs considered: {}, skipped by coprime criterion: {}, reductions: {}, steps: {}",
        run.log.pairs_considered,
        run.log.pairs_skipped_coprime,
        run.log.reductions,
        run.log.reduction_steps
    );

    let content = match args.format {
        Format::Json => {
            let mut doc = BasisDocument::from_basis(&reduced);
            doc.log = Some(run.log.clone());
            to_pretty_json(&doc)?
        }
        Format::Latex => {
            let rows = reduced
                .gens()
                .iter()
                .enumerate()
                .map(|(i, g)| (format!("g_{{{}}}", i + 1), g));
            format!("% {}\n% {NAMING_NOTE}\n{}", reduced.label(), latex_align(rows))
        }
        Format::Text => format!("# {NAMING_NOTE}\n{reduced}"),
    };
    emit(&args.out, &content)
}

fn closed_form(args: RankArgs) -> Result<(), CliError> {
    if args.r == 0 {
        return Err(usage("--r must be at least 1"));
    }
    let basis = closed_form_basis(args.r);
    let content = match args.format {
        Format::Json => to_pretty_json(&basis)?,
        Format::Latex => {
            let rows = basis
                .gens()
                .iter()
                .enumerate()
                .map(|(i, g)| (format!("\\tilde{{E}}_{{{}}}", i + 1), g));
            format!("% {}\n% {NAMING_NOTE}\n{}", basis.label(), latex_align(rows))
        }
        Format::Text => format!("# {NAMING_NOTE}\n{basis}"),
    };
    emit(&args.out, &content)
}

fn verify(args: RankArgs) -> Result<(), CliError> {
    if args.r == 0 {
        return Err(usage("--r must be at least 1"));
    }
    let report = verify_all(args.r);
    let content = match args.format {
        Format::Json => to_pretty_json(&report)?,
        Format::Text => {
            let mut s = format!("verification report, r = {}\n", report.r);
            for (id, outcome) in &report.checks {
                s.push_str(&format!(
                    "  {id:<22} {} ({} ms)\n",
                    if outcome.pass { "PASS" } else { "FAIL" },
                    outcome.millis
                ));
                if let Some(w) = &outcome.witness {
                    s.push_str(&format!("    witness: {w}\n"));
                }
            }
            if let Some(reduced) = &report.reduced_basis {
                s.push_str(&format!("{reduced}"));
            }
            s
        }
        Format::Latex => return Err(usage("verify supports json or text output")),
    };
    emit(&args.out, &content)?;
    if report.all_pass() {
        Ok(())
    } else {
        Err(CliError::Failure(format!("verification failed for r = {}", args.r)))
    }
}

fn catalan_table(args: CatalanArgs) -> Result<(), CliError> {
    let mut rows = Vec::with_capacity(args.max as usize + 1);
    for j in 0..=args.max {
        rows.push((j, catalan(j), lambda(j), catalan_identity(j)));
    }
    let all_hold = rows.iter().all(|(_, _, _, ok)| *ok);
    let content = match args.format {
        Format::Json => {
            let values: Vec<serde_json::Value> = rows
                .iter()
                .map(|(j, c, l, ok)| {
                    serde_json::json!({
                        "j": j,
                        "catalan": c.to_string(),
                        "lambda": l.to_string(),
                        "identity": ok,
                    })
                })
                .collect();
            to_pretty_json(&values)?
        }
        Format::Text => {
            let mut s = String::from("j\tcatalan\tlambda\tidentity\n");
            for (j, c, l, ok) in &rows {
                s.push_str(&format!("{j}\t{c}\t{l}\t{}\n", if *ok { "holds" } else { "FAILS" }));
            }
            s
        }
        Format::Latex => return Err(usage("catalan supports json or text output")),
    };
    emit(&args.out, &content)?;
    if all_hold {
        Ok(())
    } else {
        Err(CliError::Failure("identity failed".to_string()))
    }
}
