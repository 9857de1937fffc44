use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use slope_diameter::slopes::build_report;
use slope_diameter::{
    build_tree, canonicalize, run_sweep, to_dot, Error, Rational, SlopeReport, SweepConfig,
    SweepSummary, Verdict,
};

/// Boundary slopes and slope diameters of 2-bridge knots K(p/q).
#[derive(Parser)]
#[command(name = "slope-diameter", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Boundary slopes, diameter and crossing number of K(p/q).
    Analyze {
        /// Fraction p/q with 0 < p < q, in lowest terms.
        fraction: Rational,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check D = 2c for every fraction with denominator at most --max-q.
    Sweep {
        #[arg(long)]
        max_q: i64,
        /// Skip even denominators (links).
        #[arg(long)]
        knots_only: bool,
        /// One fraction per knot type: keep p only if p <= p^-1 mod q.
        #[arg(long)]
        canonical_classes: bool,
        /// Write CSV here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads (0 = all cores, 1 = sequential).
        #[arg(long, env = "SLOPE_DIAMETER_JOBS", default_value_t = 0)]
        jobs: usize,
    },
    /// Emit the floor/ceiling binary tree as Graphviz DOT.
    Tree {
        fraction: Rational,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Label dead leaves "DNE" instead of "∄".
        #[arg(long)]
        ascii: bool,
    },
    /// Print min(p, p^-1 mod q)/q.
    Canonicalize { fraction: Rational },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// A failure that counts as a mathematical counterexample, not bad input.
#[derive(Debug)]
struct Counterexample(String);

impl std::fmt::Display for Counterexample {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Counterexample {}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            let math = e.is::<Counterexample>()
                || matches!(e.downcast_ref::<Error>(), Some(Error::EnginesDisagree(_)));
            ExitCode::from(if math { 2 } else { 1 })
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Command::Analyze { fraction, format } => {
            let report = build_report(fraction)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
                Format::Text => print_text(&report),
            }
            check_report(&report)
        }
        Command::Sweep {
            max_q,
            knots_only,
            canonical_classes,
            out,
            jobs,
        } => {
            let config = SweepConfig {
                max_q,
                knots_only,
                canonical_classes,
                jobs,
            };
            let rows = run_sweep(&config)?;
            let summary = SweepSummary::from_rows(&rows);
            let sink: Box<dyn Write> = match &out {
                Some(path) => Box::new(
                    File::create(path).with_context(|| format!("creating {}", path.display()))?,
                ),
                None => Box::new(io::stdout().lock()),
            };
            let mut w = csv::Writer::from_writer(sink);
            for row in &rows {
                w.serialize(row)?;
            }
            w.flush()?;
            drop(w);

            let line = format!(
                "{} rows: {} pass, {} fail, {} n/a, {} engine disagreements, max |B| {}",
                summary.rows,
                summary.pass,
                summary.fail,
                summary.not_applicable,
                summary.engines_disagree,
                summary.max_num_slopes
            );
            // keep stdout pure CSV when it carries the table
            if out.is_some() {
                println!("{line}");
            } else {
                eprintln!("{line}");
            }

            if let Some(bad) = rows
                .iter()
                .find(|r| r.theorem1 == Verdict::Fail || !r.engines_agree)
            {
                let r = Rational::new(bad.p, bad.q)?;
                let report = build_report(r)?;
                eprintln!("{}", serde_json::to_string_pretty(&report)?);
                return Err(Counterexample(format!("counterexample at {r}")).into());
            }
            Ok(())
        }
        Command::Tree {
            fraction,
            out,
            ascii,
        } => {
            let dot = to_dot(&build_tree(fraction)?, ascii);
            match out {
                Some(path) => std::fs::write(&path, dot)
                    .with_context(|| format!("writing {}", path.display()))?,
                None => print!("{dot}"),
            }
            Ok(())
        }
        Command::Canonicalize { fraction } => {
            println!("{}", canonicalize(fraction)?);
            Ok(())
        }
    }
}

fn check_report(report: &SlopeReport) -> anyhow::Result<()> {
    if !report.engines_agree {
        eprintln!("{}", serde_json::to_string_pretty(report)?);
        return Err(Error::EnginesDisagree(report.fraction).into());
    }
    if report.theorem1 == Verdict::Fail {
        return Err(Counterexample(format!(
            "D = {} but 2c = {} for {}",
            report.diameter,
            2 * report.crossing,
            report.fraction
        ))
        .into());
    }
    Ok(())
}

fn print_text(r: &SlopeReport) {
    let kind = if r.is_knot { "knot" } else { "link" };
    println!("K({}) {kind}, canonical {}", r.fraction, r.canonical);
    println!("simple cf     {:?}", r.simple.terms());
    println!("conway        {:?}", r.conway);
    println!("crossing      {}", r.crossing);
    println!(
        "seifert       {}{}",
        r.seifert,
        if r.seifert_unique { "" } else { " (not unique)" }
    );
    println!("expansions    {}", r.candidates.len());
    for c in &r.candidates {
        println!("  {:<24} mask {:<8} slope {}", c.cf.to_string(), c.mask.to_string(), c.slope);
    }
    println!("slopes        {:?}", r.slopes);
    println!("diameter      {}", r.diameter);
    println!("bound F(n+2)  {}", r.fib_bound);
    let verdict = match r.theorem1 {
        Verdict::Pass => "pass",
        Verdict::Fail => "FAIL",
        Verdict::NotApplicable => "n/a",
    };
    println!("D = 2c        {verdict}");
}
