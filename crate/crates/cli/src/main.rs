use std::fs;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use ts_spectra::spectrum::{SpectrumError, DEFAULT_CEILING};
use ts_spectra::verify;
use ts_spectra::{
    brute_spectrum, cayley_adjacency_spectrum, spectrum_with_multiplicity, witness_with,
    BruteOptions, SpectrumReport, WitnessError, WitnessOptions,
};

const OK: u8 = 0;
const FAILED: u8 = 1;
const BAD_ARGS: u8 = 2;
const RESOURCE_LIMIT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "ts-spectra",
    version,
    about = "Exact spectra of the transposition graph on S_n"
)]
struct Cli {
    /// Worker threads for parallel sweeps (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Write results here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Distinct eigenvalues for one n by enumerating all partitions.
    Spectrum {
        n: u32,
        /// Attach the first attaining partition to each value.
        #[arg(long)]
        witnesses: bool,
        /// Attach multiplicities from the hook-length formula (n <= 12).
        #[arg(long)]
        multiplicities: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Run even when n exceeds the brute-force ceiling.
        #[arg(long)]
        limit_override: bool,
        /// Brute-force ceiling on n.
        #[arg(long, env = "TS_SPECTRA_LIMIT", default_value_t = DEFAULT_CEILING, hide_env_values = true)]
        limit: u32,
    },
    /// A certified partition of n with eigenvalue e.
    #[command(allow_negative_numbers = true)]
    Witness {
        n: i64,
        e: i64,
        #[arg(long)]
        json: bool,
        /// Search nodes examined before giving up.
        #[arg(long, default_value_t = ts_spectra::witness::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Sweep a claim over a range of n.
    Verify {
        #[arg(value_enum)]
        target: Target,
        /// A single n.
        #[arg(long, conflicts_with = "n_range")]
        n: Option<i64>,
        /// Inclusive range `A..B`.
        #[arg(long)]
        n_range: Option<NRange>,
        /// Detailed report file (JSON, or JSON lines for errata).
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, env = "TS_SPECTRA_LIMIT", default_value_t = DEFAULT_CEILING, hide_env_values = true)]
        limit: u32,
    },
    /// Spectrum from the dense adjacency matrix, compared with enumeration.
    Oracle {
        n: u32,
        #[arg(long)]
        multiplicities: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Human,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    /// Every integer in [0, C(⌊(n−15)/3⌋,2)] has a certificate.
    TheoremX,
    /// Same, over the symmetric interval.
    TheoremXx,
    /// Every integer in [0, C(⌊n/3⌋,2)] has a search-free certificate above the recipe range.
    LiftRange,
    /// Brute force contains [−C(⌊(2n+1)/3⌋,2), C(⌊(2n+1)/3⌋,2)].
    Conjecture,
    /// The single-lift inequalities.
    Inequalities,
    /// Every recipe over its stated range.
    Errata,
}

impl Target {
    fn default_range(self) -> RangeInclusive<i64> {
        match self {
            Target::TheoremX | Target::TheoremXx => 15..=150,
            Target::LiftRange => 76..=120,
            Target::Conjecture => 76..=76,
            Target::Inequalities => 76..=500,
            Target::Errata => 1..=200,
        }
    }

    fn min_n(self) -> i64 {
        match self {
            Target::TheoremX | Target::TheoremXx => 15,
            Target::LiftRange | Target::Inequalities => 76,
            Target::Conjecture | Target::Errata => 1,
        }
    }
}

#[derive(Clone, Debug)]
struct NRange(i64, i64);

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, b) = s.split_once("..").ok_or("expected A..B")?;
        let b = b.strip_prefix('=').unwrap_or(b);
        let a: i64 = a.trim().parse().map_err(|e| format!("{a}: {e}"))?;
        let b: i64 = b.trim().parse().map_err(|e| format!("{b}: {e}"))?;
        if a > b {
            return Err(format!("empty range {a}..{b}"));
        }
        Ok(NRange(a, b))
    }
}

/// A failure carrying its exit code.
struct Exit(u8, String);

type CmdResult = Result<u8, Exit>;

fn bad_args(msg: impl Into<String>) -> Exit {
    Exit(BAD_ARGS, msg.into())
}

fn spectrum_error(e: SpectrumError) -> Exit {
    match e {
        SpectrumError::ResourceLimit { what: "brute_spectrum", n, limit } => Exit(
            RESOURCE_LIMIT,
            format!("n = {n} exceeds the brute-force ceiling {limit}; pass --limit-override or raise TS_SPECTRA_LIMIT"),
        ),
        SpectrumError::ResourceLimit { .. } => Exit(RESOURCE_LIMIT, e.to_string()),
        SpectrumError::TooSmall { .. } => bad_args(e.to_string()),
        SpectrumError::RoundingFailure { .. } => Exit(FAILED, e.to_string()),
    }
}

struct Out {
    path: Option<PathBuf>,
}

impl Out {
    fn write(&self, text: &str) -> Result<(), Exit> {
        let mut text = text.to_owned();
        if !text.ends_with('\n') {
            text.push('\n');
        }
        match &self.path {
            Some(p) => {
                fs::write(p, text).map_err(|e| Exit(FAILED, format!("{}: {e}", p.display())))
            }
            None => io::stdout()
                .write_all(text.as_bytes())
                .map_err(|e| Exit(FAILED, e.to_string())),
        }
    }

    fn json<T: Serialize>(&self, value: &T) -> Result<(), Exit> {
        self.write(&serde_json::to_string(value).expect("reports serialize"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if threads == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(BAD_ARGS);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .expect("pool is built once");
    }
    let out = Out { path: cli.output };
    let result = match cli.command {
        Command::Spectrum {
            n,
            witnesses,
            multiplicities,
            format,
            limit_override,
            limit,
        } => {
            let options = BruteOptions {
                ceiling: limit,
                override_ceiling: limit_override,
            };
            cmd_spectrum(&out, n, witnesses, multiplicities, format, &options)
        }
        Command::Witness { n, e, json, budget } => cmd_witness(&out, n, e, json, budget),
        Command::Verify {
            target,
            n,
            n_range,
            report,
            limit,
        } => {
            let range = match (n, n_range) {
                (Some(n), _) => n..=n,
                (None, Some(NRange(a, b))) => a..=b,
                (None, None) => target.default_range(),
            };
            cmd_verify(&out, target, range, report, limit)
        }
        Command::Oracle { n, multiplicities } => cmd_oracle(&out, n, multiplicities),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Exit(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn cmd_spectrum(
    out: &Out,
    n: u32,
    witnesses: bool,
    multiplicities: bool,
    format: Format,
    options: &BruteOptions,
) -> CmdResult {
    if n == 0 {
        return Err(bad_args("n must be at least 1"));
    }
    let mut report = brute_spectrum(n, witnesses, options).map_err(spectrum_error)?;
    if multiplicities {
        let hooks = spectrum_with_multiplicity(n).map_err(spectrum_error)?;
        report.multiplicities = hooks.multiplicities;
    }
    match format {
        Format::Json => out.json(&report)?,
        Format::Csv => out.write(&report.to_csv())?,
        Format::Human => out.write(&human_spectrum(&report))?,
    }
    Ok(OK)
}

fn human_spectrum(r: &SpectrumReport) -> String {
    let mut s = format!("n = {}: {} distinct eigenvalues\n", r.n, r.values.len());
    if r.multiplicities.is_none() && r.witnesses.is_none() {
        let vals: Vec<String> = r.values.iter().map(i64::to_string).collect();
        s.push_str(&vals.join(" "));
        return s;
    }
    for v in &r.values {
        s.push_str(&format!("{v:>8}"));
        if let Some(m) = r.multiplicities.as_ref().and_then(|m| m.get(v)) {
            s.push_str(&format!("  x{m}"));
        }
        if let Some(p) = r.witnesses.as_ref().and_then(|w| w.get(v)) {
            s.push_str(&format!("  {p}"));
        }
        s.push('\n');
    }
    s
}

fn cmd_witness(out: &Out, n: i64, e: i64, json: bool, budget: u64) -> CmdResult {
    match witness_with(n, e, &WitnessOptions { budget }) {
        Ok(cert) => {
            if json {
                out.json(&cert)?;
            } else {
                out.write(&cert.to_string())?;
            }
            Ok(if cert.verified { OK } else { FAILED })
        }
        Err(err @ WitnessError::OutOfRange { .. }) => Err(bad_args(err.to_string())),
        Err(
            err @ WitnessError::NotFound {
                exhausted: false, ..
            },
        ) => Err(Exit(
            FAILED,
            format!("{err} within a budget of {budget} search nodes"),
        )),
        Err(err) => Err(Exit(FAILED, err.to_string())),
    }
}

fn write_report(path: &Option<PathBuf>, text: &str) -> Result<(), Exit> {
    if let Some(p) = path {
        fs::write(p, text).map_err(|e| Exit(FAILED, format!("{}: {e}", p.display())))?;
    }
    Ok(())
}

fn cmd_verify(
    out: &Out,
    target: Target,
    range: RangeInclusive<i64>,
    report: Option<PathBuf>,
    limit: u32,
) -> CmdResult {
    if *range.start() < target.min_n() {
        return Err(bad_args(format!(
            "this check needs n >= {}",
            target.min_n()
        )));
    }
    let options = WitnessOptions::default();
    let (passed, summary) = match target {
        Target::TheoremX | Target::TheoremXx => {
            let symmetric = target == Target::TheoremXx;
            let mut reports = Vec::new();
            for n in range.clone() {
                let r = verify::recipe_interval(n..=n, symmetric, &options).remove(0);
                eprintln!(
                    "n = {n}: {} covered, {} missing",
                    r.covered,
                    r.missing.len()
                );
                reports.push(r);
            }
            write_report(
                &report,
                &serde_json::to_string(&reports).expect("serialize"),
            )?;
            let misses: Vec<_> = reports
                .iter()
                .filter(|r| !r.is_complete())
                .map(|r| json!({"n": r.n, "missing": r.missing}))
                .collect();
            let covered: u64 = reports.iter().map(|r| r.covered).sum();
            (
                misses.is_empty(),
                json!({"covered": covered, "misses": misses}),
            )
        }
        Target::LiftRange => {
            let mut reports = Vec::new();
            for n in range.clone() {
                let r = verify::lift_interval(n..=n, &options).remove(0);
                eprintln!(
                    "n = {n}: {} covered, {} missing",
                    r.coverage.covered,
                    r.coverage.missing.len()
                );
                reports.push(r);
            }
            write_report(
                &report,
                &serde_json::to_string(&reports).expect("serialize"),
            )?;
            let misses: Vec<_> = reports
                .iter()
                .filter(|r| !r.passed())
                .map(|r| json!({"n": r.coverage.n, "missing": r.coverage.missing, "searched": r.searched_above_recipes}))
                .collect();
            (misses.is_empty(), json!({"misses": misses}))
        }
        Target::Conjecture => {
            let brute = BruteOptions {
                ceiling: limit,
                override_ceiling: false,
            };
            let mut reports = Vec::new();
            for n in range.clone() {
                let n = u32::try_from(n).map_err(|_| bad_args("n out of range"))?;
                let r = verify::conjecture(n, &brute).map_err(spectrum_error)?;
                eprintln!(
                    "n = {n}: scanned {} partitions, {} missing",
                    r.scanned,
                    r.missing.len()
                );
                reports.push(r);
            }
            write_report(
                &report,
                &serde_json::to_string(&reports).expect("serialize"),
            )?;
            let scanned: u64 = reports.iter().map(|r| r.scanned).sum();
            let misses: Vec<_> = reports
                .iter()
                .filter(|r| !r.passed())
                .map(|r| json!({"n": r.n, "missing": r.missing}))
                .collect();
            (
                misses.is_empty(),
                json!({"scanned": scanned, "misses": misses}),
            )
        }
        Target::Inequalities => {
            let failures = verify::inequality_failures(range.clone());
            write_report(
                &report,
                &serde_json::to_string(&failures).expect("serialize"),
            )?;
            (failures.is_empty(), json!({"misses": failures}))
        }
        Target::Errata => {
            eprintln!(
                "sweeping recipes for n = {}..{}",
                range.start(),
                range.end()
            );
            let v = verify::errata(*range.start(), *range.end());
            write_report(&report, &v.sweep.to_jsonl())?;
            let key = |r: &ts_spectra::constructors::ErrataRecord| json!([r.recipe, r.n, r.a, r.c]);
            (
                v.passed(),
                json!({
                    "checked": v.sweep.checked,
                    "records": v.sweep.records.len(),
                    "routed_boundary_rows": v.routed.len(),
                    "unrouted": v.unrouted.iter().map(key).collect::<Vec<_>>(),
                    "formula_errors": v.formula_errors.iter().map(key).collect::<Vec<_>>(),
                }),
            )
        }
    };
    let name = target
        .to_possible_value()
        .expect("named")
        .get_name()
        .to_owned();
    out.json(&json!({
        "target": name,
        "range": [range.start(), range.end()],
        "passed": passed,
        "summary": summary,
    }))?;
    Ok(if passed { OK } else { FAILED })
}

fn cmd_oracle(out: &Out, n: u32, multiplicities: bool) -> CmdResult {
    if n < 2 {
        return Err(bad_args("oracle needs n >= 2"));
    }
    let adjacency = cayley_adjacency_spectrum(n).map_err(spectrum_error)?;
    let brute = brute_spectrum(n, false, &BruteOptions::default()).map_err(spectrum_error)?;
    let mut agree = adjacency.values == brute.values;
    let hooks = if multiplicities {
        if adjacency.multiplicities.is_none() {
            return Err(Exit(
                RESOURCE_LIMIT,
                format!(
                    "multiplicities from the adjacency matrix are limited to n <= 5 (got n = {n})"
                ),
            ));
        }
        let hooks = spectrum_with_multiplicity(n).map_err(spectrum_error)?;
        agree &= hooks.multiplicities == adjacency.multiplicities;
        hooks.multiplicities
    } else {
        None
    };
    let adjacency_mult = if multiplicities {
        adjacency.multiplicities.clone()
    } else {
        None
    };
    out.json(&json!({
        "n": n,
        "adjacency": adjacency.values,
        "enumeration": brute.values,
        "adjacency_multiplicities": adjacency_mult,
        "hook_multiplicities": hooks,
        "agree": agree,
    }))?;
    Ok(if agree { OK } else { FAILED })
}
