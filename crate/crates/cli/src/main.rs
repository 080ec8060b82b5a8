use clap::{Parser, Subcommand, ValueEnum};
use heightcalc::graphfile::parse_graph;
use heightcalc::render::{render_invariants, render_verification};
use heightcalc_core::calculus::height_coefficients;
use heightcalc_core::pmgraph::invariants;
use heightcalc_core::ratio::format_rat;
use heightcalc_core::verify::{
    closed_form_suite, derived_bounds, gross_schoen_consistency, paper_suite, wilms_suite,
    VerificationReport,
};
use heightcalc_core::Error;
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_VERIFY: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_CAPACITY: u8 = 3;

#[derive(Parser)]
#[command(
    name = "heightcalc",
    about = "Exact height coefficients and metrized-graph invariants"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Universal coefficients (a, b, c) for a multiplier tuple
    Coeffs {
        /// Genus, at least 2
        #[arg(long)]
        g: u32,
        /// Comma-separated nonzero integers; empty for the trivial cycle
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        m: String,
    },
    /// Exact invariants of a polarized metrized graph file
    Invariants {
        /// Path to a JSON graph document
        file: PathBuf,
    },
    /// Run a verification suite of exact identities
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Genus range "A..B" (inclusive) or a single genus
        #[arg(long, default_value = "2..5")]
        g: String,
    },
    /// Derived lower-bound report for a given genus
    Report {
        #[arg(long)]
        g: u32,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum Suite {
    ClosedForm,
    Wilms,
    GrossSchoen,
    Bounds,
    Paper,
}

enum CliError {
    /// Bad command-line values or unreadable/invalid input files.
    Input(String),
    /// Engine rejection; retains the capacity/input distinction.
    Engine(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Engine(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Engine(Error::Capacity { .. }) => EXIT_CAPACITY,
            CliError::Engine(Error::Defect(_)) => EXIT_VERIFY,
            CliError::Engine(_) => EXIT_INPUT,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Input(msg) => msg.clone(),
            CliError::Engine(e) => e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Coeffs { g, m } => {
            let m = parse_multipliers(&m)?;
            let hc = height_coefficients(&m, g)?;
            println!(
                "a = {}, b = {}, c = {}",
                format_rat(&hc.a),
                format_rat(&hc.b),
                format_rat(&hc.c)
            );
            println!("geometric degree G = {}", hc.geometric_degree);
            println!(
                "intersection vector N = ({}, {}, {})",
                format_rat(&hc.arithmetic_vector.w),
                format_rat(&hc.arithmetic_vector.p),
                format_rat(&hc.arithmetic_vector.b)
            );
            println!(
                "h'(Z) = (1/[k:Q]) * ({} * <w,w> + {} * sum phi(X_v) log Nv) + {} * h'(x)",
                format_rat(&hc.a),
                format_rat(&hc.b),
                format_rat(&hc.c)
            );
            if g == 2 {
                println!(
                    "note: at genus 2 the pair (a, b) is one representative; \
                     <w,w> = (2/5) sum phi(X_v) log Nv makes the functional non-unique"
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Invariants { file } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| CliError::Input(format!("cannot read {}: {e}", file.display())))?;
            let named = parse_graph(&text).map_err(|e| CliError::Input(e.to_string()))?;
            let report = invariants(&named.graph)?;
            print!("{}", render_invariants(&report));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, g } => {
            let range = parse_range(&g)?;
            let report = run_suite(suite, &range)?;
            print!("{}", render_verification(&report));
            if report.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(EXIT_VERIFY))
            }
        }
        Command::Report { g } => {
            if g < 2 {
                return Err(CliError::Input(format!("genus {g} too small, need g >= 2")));
            }
            let report = derived_bounds(g)?;
            print!("{}", render_verification(&report));
            if g == 2 {
                println!("note: at genus 2 the surface-sum bound degenerates to 0 >= 0");
            }
            if report.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(EXIT_VERIFY))
            }
        }
    }
}

fn run_suite(suite: Suite, range: &[u32]) -> Result<VerificationReport, Error> {
    match suite {
        Suite::ClosedForm => closed_form_suite(range),
        Suite::Wilms => wilms_suite(range),
        Suite::GrossSchoen => {
            let mut report = VerificationReport { checks: Vec::new() };
            for &g in range {
                report.checks.push(gross_schoen_consistency(g)?);
            }
            Ok(report)
        }
        Suite::Bounds => {
            let mut report = VerificationReport { checks: Vec::new() };
            for &g in range {
                report.merge(derived_bounds(g)?);
            }
            Ok(report)
        }
        Suite::Paper => paper_suite(range),
    }
}

fn parse_multipliers(text: &str) -> Result<Vec<i64>, CliError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|part| {
            let part = part.trim();
            let v: i64 = part
                .parse()
                .map_err(|_| CliError::Input(format!("not an integer multiplier: {part}")))?;
            if v == 0 {
                return Err(CliError::Input("multipliers must be nonzero".into()));
            }
            Ok(v)
        })
        .collect()
}

fn parse_range(text: &str) -> Result<Vec<u32>, CliError> {
    let bad = || CliError::Input(format!("not a genus range: {text}"));
    if let Some((lo, hi)) = text.split_once("..") {
        let lo: u32 = lo.trim().parse().map_err(|_| bad())?;
        let hi: u32 = hi.trim().parse().map_err(|_| bad())?;
        if lo < 2 || hi < lo {
            return Err(bad());
        }
        Ok((lo..=hi).collect())
    } else {
        let g: u32 = text.trim().parse().map_err(|_| bad())?;
        if g < 2 {
            return Err(CliError::Input(format!("genus {g} too small, need g >= 2")));
        }
        Ok(vec![g])
    }
}
