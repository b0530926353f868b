//! `antiatom`: analyze numerical semigroups, scan them for λ-minimality,
//! check the parametric families and draw Young diagrams.
//!
//! Exit codes: 0 success, 2 invalid input, 3 bound too large, 4 mismatch
//! against an expected file or a failed family validation.

mod report;

use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use antiatom_core::enumerate::{EnumerationMode, EnumerationQuery, SemigroupFilter};
use antiatom_core::families::{interval_k, interval_m, staircase};
use antiatom_core::partition::profile_walk;
use antiatom_core::{
    enumeration, numerical_set_of, scan_minimality, solve_with, Error, NumericalSemigroup,
    NumericalSet, Partition, SolveOptions,
};
use clap::{ArgGroup, Args, Parser, Subcommand};
use serde::Serialize;

use report::{scan_text, NumericalSetReport, SemigroupReport};

/// Largest genus / Frobenius number `enumerate` accepts.
const ENUMERATE_MAX_GENUS: u32 = 22;
const ENUMERATE_MAX_FROBENIUS: u32 = 32;
/// Largest genus / Frobenius number `scan` accepts.
const SCAN_MAX_GENUS: u32 = 18;
const SCAN_MAX_FROBENIUS: u32 = 26;

#[derive(Parser)]
#[command(name = "antiatom", version, about = "Numerical semigroups and the partitions they enumerate")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Cap the number of worker threads.
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants, void poset, associated sets and λ-minimality of one input.
    Analyze {
        #[command(flatten)]
        input: Input,
        /// Verify every classification against the atom monoid.
        #[arg(long)]
        cross_check: bool,
    },
    /// List every semigroup of the given genera or Frobenius numbers.
    Enumerate {
        #[command(flatten)]
        range: Range,
    },
    /// Count semigroups and list those that are not λ-minimal.
    Scan {
        #[command(flatten)]
        range: Range,
        /// File listing the expected non-minimal semigroups, one `<a,b,c>` per line.
        #[arg(long, value_name = "FILE")]
        expected: Option<PathBuf>,
    },
    /// Check a parametric family against its closed-form predictions.
    Family {
        #[command(subcommand)]
        family: FamilyCommand,
    },
    /// Draw the Young diagram of a partition or of λ(T).
    Render {
        #[command(flatten)]
        input: Input,
        /// Label every box with its hook length.
        #[arg(long)]
        hooks: bool,
        /// Print the right/up profile walk above the diagram.
        #[arg(long)]
        walk: bool,
    },
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// S_{m,k,s} = {0, m, 2m, ..., km, km+s+1, ->}.
    Staircase { m: u32, k: u32, s: u32 },
    /// <m, m+1, ..., 2m-5>.
    IntervalM { m: u32 },
    /// <2k+1, ..., 3k+1> with the witness built from the divisor l of k.
    IntervalK { k: u32, l: u32 },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Generators of a semigroup: `9,10,11,12,13`.
    #[arg(long, value_name = "LIST")]
    gens: Option<String>,
    /// Gaps of a semigroup: `1,2,4`.
    #[arg(long, value_name = "LIST")]
    gaps: Option<String>,
    /// Parts of a partition: `9,8,2,2`.
    #[arg(long, value_name = "LIST")]
    partition: Option<String>,
    /// Any numerical set: `{0,5,7,9,->}`.
    #[arg(long, value_name = "SET")]
    set: Option<String>,
}

#[derive(Args)]
#[group(skip)]
#[command(group(ArgGroup::new("mode").required(true).multiple(false)))]
struct Range {
    /// All genera 1..=N.
    #[arg(long, value_name = "N", group = "mode")]
    genus: Option<u32>,
    /// All Frobenius numbers 1..=N.
    #[arg(long, value_name = "N", group = "mode")]
    frobenius: Option<u32>,
    /// Keep only this genus / Frobenius number.
    #[arg(long, value_name = "B")]
    only: Option<u32>,
    /// Keep only semigroups with `depth=D`, `type=T`, `multiplicity=M` or `small=N`.
    #[arg(long, value_name = "NAME=VALUE")]
    filter: Option<String>,
}

enum Failure {
    Input(String),
    Bound(String),
    Mismatch(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Bound(_) => 3,
            Failure::Mismatch(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Bound(m) | Failure::Mismatch(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::VoidTooLarge(_) => Failure::Bound(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn parse_list(text: &str) -> Result<Vec<u32>, Failure> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Failure::Input(format!("not a non-negative integer: {t:?}"))))
        .collect()
}

enum Parsed {
    Semigroup(NumericalSemigroup),
    Set(NumericalSet),
    Partition(Partition),
}

impl Input {
    fn parse(&self) -> Result<Parsed, Failure> {
        if let Some(g) = &self.gens {
            return Ok(Parsed::Semigroup(NumericalSemigroup::from_generators(parse_list(g)?)?));
        }
        if let Some(g) = &self.gaps {
            let set = NumericalSet::from_gaps(parse_list(g)?)?;
            return match NumericalSemigroup::try_from(set) {
                Ok(s) => Ok(Parsed::Semigroup(s)),
                Err(e) => Err(Failure::Input(format!("{e}; use --set for numerical sets"))),
            };
        }
        if let Some(p) = &self.partition {
            return Ok(Parsed::Partition(Partition::new(parse_list(p)?)?));
        }
        let text = self.set.as_deref().unwrap_or_default();
        Ok(Parsed::Set(text.parse()?))
    }
}

fn emit<T: Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) -> Outcome {
    if json {
        let mut out = serde_json::to_string_pretty(value).expect("reports serialize");
        out.push('\n');
        Ok(out)
    } else {
        Ok(text())
    }
}

fn semigroup_report(s: &NumericalSemigroup, cross_check: bool) -> Result<SemigroupReport, Failure> {
    if s.is_naturals() {
        return Ok(SemigroupReport::new(s, None));
    }
    let solution = solve_with(s, SolveOptions { cross_check })?;
    Ok(SemigroupReport::new(s, Some(&solution)))
}

fn analyze(input: &Input, cross_check: bool, json: bool) -> Outcome {
    let set = match input.parse()? {
        Parsed::Semigroup(s) => {
            let report = semigroup_report(&s, cross_check)?;
            return emit(json, &report, || report.text());
        }
        Parsed::Set(t) => t,
        Parsed::Partition(p) => numerical_set_of(&p),
    };
    let atom = semigroup_report(&set.atom_monoid(), cross_check)?;
    let report = NumericalSetReport::new(&set, atom);
    emit(json, &report, || report.text())
}

fn query(range: &Range, max_genus: u32, max_frobenius: u32) -> Result<EnumerationQuery, Failure> {
    let (mut q, max) = match (range.genus, range.frobenius) {
        (Some(g), _) => (EnumerationQuery::by_genus(g), max_genus),
        (_, Some(f)) => (EnumerationQuery::by_frobenius(f), max_frobenius),
        _ => unreachable!("clap requires one mode"),
    };
    if q.bound == 0 {
        return Err(Failure::Input("bound must be at least 1".into()));
    }
    if q.bound > max {
        return Err(Failure::Bound(format!("{} bound {} exceeds the limit {max}", q.mode, q.bound)));
    }
    if let Some(b) = range.only {
        if b == 0 || b > q.bound {
            return Err(Failure::Input(format!("--only {b} is outside 1..={}", q.bound)));
        }
        q = q.only(b);
    }
    if let Some(f) = &range.filter {
        q = q.filter(f.parse::<SemigroupFilter>()?);
    }
    Ok(q)
}

fn enumerate(range: &Range, json: bool) -> Outcome {
    let q = query(range, ENUMERATE_MAX_GENUS, ENUMERATE_MAX_FROBENIUS)?;
    let all = q.semigroups()?;
    emit(json, &all, || {
        let key = match q.mode {
            EnumerationMode::Genus => "F",
            EnumerationMode::Frobenius => "g",
        };
        all.iter()
            .map(|s| {
                let other = match q.mode {
                    EnumerationMode::Genus => s.frobenius(),
                    EnumerationMode::Frobenius => s.genus() as i64,
                };
                format!("{s}  {}={}  {key}={other}\n", q.mode, q.bucket_of(s))
            })
            .collect()
    })
}

fn read_expected(path: &PathBuf) -> Result<BTreeSet<NumericalSemigroup>, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.parse::<NumericalSemigroup>().map_err(Failure::from))
        .collect()
}

fn scan(range: &Range, expected: Option<&PathBuf>, json: bool) -> Outcome {
    let q = query(range, SCAN_MAX_GENUS, SCAN_MAX_FROBENIUS)?;
    let expected = expected.map(read_expected).transpose()?;
    let report = scan_minimality(&q)?;
    let out = emit(json, &report, || scan_text(&report))?;
    if let Some(expected) = expected {
        let found: BTreeSet<NumericalSemigroup> = report.non_minimal.iter().cloned().collect();
        if found != expected {
            let missing: Vec<String> = expected.difference(&found).map(|s| s.to_string()).collect();
            let extra: Vec<String> = found.difference(&expected).map(|s| s.to_string()).collect();
            print!("{out}");
            return Err(Failure::Mismatch(format!(
                "non-minimal list differs from the expected file; missing [{}], unexpected [{}]",
                missing.join(" "),
                extra.join(" ")
            )));
        }
    }
    Ok(out)
}

#[derive(Serialize)]
struct FamilyReport<'a> {
    instance: &'a antiatom_core::FamilyInstance,
    rows: &'a [antiatom_core::families::ValidationRow],
    ok: bool,
}

fn family(cmd: &FamilyCommand, json: bool) -> Outcome {
    let instance = match *cmd {
        FamilyCommand::Staircase { m, k, s } => staircase(m, k, s)?,
        FamilyCommand::IntervalM { m } => interval_m(m)?,
        FamilyCommand::IntervalK { k, l } => interval_k(k, l)?,
    };
    let validation = instance.validate()?;
    let report = FamilyReport {
        instance: &instance,
        rows: &validation.rows,
        ok: validation.ok(),
    };
    let out = emit(json, &report, || {
        let mut text = format!("semigroup  {}\n", instance.semigroup);
        if let Some(t) = &instance.witness {
            text += &format!("witness    {t}\n");
        }
        text + "\n" + &validation.table()
    })?;
    if validation.ok() {
        Ok(out)
    } else {
        print!("{out}");
        let names: Vec<&str> = validation.failures().map(|r| r.name).collect();
        Err(Failure::Mismatch(format!("predictions failed: {}", names.join(", "))))
    }
}

#[derive(Serialize)]
struct RenderReport {
    partition: Partition,
    walk: Option<String>,
    diagram: Vec<String>,
}

fn render(input: &Input, hooks: bool, walk: bool, json: bool) -> Outcome {
    let (partition, set) = match input.parse()? {
        Parsed::Partition(p) => {
            let set = numerical_set_of(&p);
            (p, set)
        }
        Parsed::Semigroup(s) => (enumeration(&s), s.into_set()),
        Parsed::Set(t) => (enumeration(&t), t),
    };
    let diagram = partition.render(hooks);
    let walk = walk.then(|| profile_walk(&set));
    let report = RenderReport {
        diagram: diagram.lines().map(str::to_string).collect(),
        walk: walk.clone(),
        partition,
    };
    emit(json, &report, || match walk {
        Some(w) if !w.is_empty() => format!("{w}\n{diagram}"),
        _ => diagram,
    })
}

fn run(cli: &Cli) -> Outcome {
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(Failure::Input("--threads must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Input(e.to_string()))?;
    }
    match &cli.command {
        Command::Analyze { input, cross_check } => analyze(input, *cross_check, cli.json),
        Command::Enumerate { range } => enumerate(range, cli.json),
        Command::Scan { range, expected } => scan(range, expected.as_ref(), cli.json),
        Command::Family { family: f } => family(f, cli.json),
        Command::Render { input, hooks, walk } => render(input, *hooks, *walk, cli.json),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}
