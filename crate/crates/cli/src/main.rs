//! `rowmotion`: build posets, measure orbits, check identities and scan
//! conjectures from the command line.

mod inspect;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use rowmotion_core::algebra::{parse_rational, BackendSpec};
use rowmotion_core::dynamics::LabelMap;
use rowmotion_core::harness::{
    comb_orbit_report, derive_seed, emit_report, homomesy_report, orbit_report, run_checks, scan_conjecture,
    CheckSpec, CombMap, Format, OrbitRequest, Theorem, DEFAULT_SEED, SEED_ENV,
};
use rowmotion_core::{pl, Error, Poset};
use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("file not found: {}", .0.display())]
    FileNotFound(PathBuf),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::FileNotFound(_) | CliError::Io { .. } | CliError::Input(_) => 2,
            CliError::Core(Error::GenericityFailure { .. }) => 3,
            CliError::Core(_) => 1,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "rowmotion", version, about = "Rowmotion and toggle dynamics on finite posets")]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, global = true, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Print failure details and progress to stderr.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Realm {
    Comb,
    Pl,
    Birational,
    Nc,
    Tropical,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    ChainProduct,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a poset and print its structure or its file serialization.
    Poset(PosetArgs),
    /// Measure the order of a rowmotion or gyration orbit.
    Orbit(OrbitArgs),
    /// Check map identities at random labelings.
    Verify(VerifyArgs),
    /// Observed rowmotion orders on chain products.
    Scan(ScanArgs),
    /// Orbit averages of the cardinality statistic.
    Homomesy(HomomesyArgs),
}

#[derive(Debug, Args)]
struct SeedArg {
    /// Base seed for random labelings.
    #[arg(long, env = SEED_ENV, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Debug, Args)]
struct PosetArgs {
    /// Poset file or builder string ("chain 2x3", "rootA 3", ...).
    #[arg(long)]
    poset: String,
    /// Print the poset in the file format instead of a report.
    #[arg(long)]
    serialize: bool,
}

#[derive(Debug, Args)]
struct OrbitArgs {
    #[arg(long)]
    poset: String,
    #[arg(long, value_enum, default_value_t = Realm::Birational)]
    realm: Realm,
    /// rowA, rowJ or rowF in the comb realm; bar, bor, bag or bog (nar and
    /// nor are accepted as aliases) elsewhere.
    #[arg(long)]
    map: Option<String>,
    /// rational | matrix:D | tropical.
    #[arg(long)]
    backend: Option<String>,
    #[command(flatten)]
    seed: SeedArg,
    /// Central constant C as p/q.
    #[arg(long)]
    const_c: Option<String>,
    #[arg(long, default_value_t = 64)]
    max_iter: usize,
    /// Start labeling as a JSON array of rationals, e.g. '["1/2","3"]'.
    #[arg(long)]
    labeling: Option<String>,
    /// Number of random start labelings.
    #[arg(long, default_value_t = 1)]
    points: usize,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("which").required(true).args(["theorem", "all"])))]
struct VerifyArgs {
    /// Theorem id; may be repeated.
    #[arg(long)]
    theorem: Vec<String>,
    /// Every registered theorem.
    #[arg(long)]
    all: bool,
    #[arg(long, default_value = "chain 2x3")]
    poset: String,
    #[arg(long, default_value = "rational")]
    backend: String,
    #[arg(long, default_value_t = 20)]
    points: usize,
    #[command(flatten)]
    seed: SeedArg,
    #[arg(long)]
    const_c: Option<String>,
}

#[derive(Debug, Args)]
struct ScanArgs {
    #[arg(long, value_enum, default_value_t = Family::ChainProduct)]
    family: Family,
    /// Largest shape, as AxB.
    #[arg(long, default_value = "3x3")]
    max: String,
    #[arg(long, default_value = "matrix:2")]
    backend: String,
    /// Random labelings per shape.
    #[arg(long, default_value_t = 3)]
    seeds: usize,
    #[command(flatten)]
    seed: SeedArg,
    #[arg(long, default_value_t = 64)]
    max_iter: usize,
}

#[derive(Debug, Args)]
struct HomomesyArgs {
    #[arg(long)]
    poset: String,
    /// rowA, rowJ or rowF.
    #[arg(long, default_value = "rowA")]
    map: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: &Cli) -> CliResult<u8> {
    let format = Format::from(cli.format);
    let (doc, code) = match &cli.command {
        Command::Poset(args) => {
            let (label, p) = load_poset(&args.poset)?;
            let doc = if args.serialize { p.serialize() } else { inspect::render(&label, &p, format)? };
            (doc, 0)
        }
        Command::Orbit(args) => orbit(args, format)?,
        Command::Verify(args) => verify(args, format, cli.verbose)?,
        Command::Scan(args) => {
            let Family::ChainProduct = args.family;
            let (a, b) = parse_shape(&args.max)?;
            let backend = parse_backend(&args.backend)?;
            let rows = scan_conjecture(a, b, &backend, args.seeds, args.seed.seed, args.max_iter)?;
            (emit_report(&rows, format)?, 0)
        }
        Command::Homomesy(args) => {
            let (label, p) = load_poset(&args.poset)?;
            let map: CombMap = args.map.parse().map_err(usage)?;
            (emit_report(&[homomesy_report(&label, &p, map)?], format)?, 0)
        }
    };
    match &cli.out {
        Some(path) => fs::write(path, doc).map_err(|source| CliError::Io { path: path.clone(), source })?,
        None => io::stdout()
            .write_all(doc.as_bytes())
            .map_err(|source| CliError::Io { path: "<stdout>".into(), source })?,
    }
    Ok(code)
}

fn usage(e: Error) -> CliError {
    CliError::Usage(e.to_string())
}

const BUILDERS: [&str; 3] = ["chain", "rootA", "antichain"];

/// An existing file is read as a poset file; otherwise the string is a
/// builder.
fn load_poset(spec: &str) -> CliResult<(String, Poset)> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
        let p = Poset::parse(&text).map_err(|e| CliError::Input(format!("{spec}: {e}")))?;
        return Ok((spec.to_string(), p));
    }
    match Poset::from_builder(spec) {
        Ok(p) => Ok((spec.to_string(), p)),
        Err(e) if spec.split_whitespace().next().is_some_and(|w| BUILDERS.contains(&w)) => {
            Err(CliError::Input(e.to_string()))
        }
        Err(_) => Err(CliError::FileNotFound(path.into())),
    }
}

fn parse_backend(s: &str) -> CliResult<BackendSpec> {
    s.parse().map_err(usage)
}

fn parse_shape(s: &str) -> CliResult<(usize, usize)> {
    let bad = || CliError::Usage(format!("expected a shape AxB, found {s:?}"));
    let (a, b) = s.split_once(['x', 'X']).ok_or_else(bad)?;
    let a = a.trim().parse().map_err(|_| bad())?;
    let b = b.trim().parse().map_err(|_| bad())?;
    Ok((a, b))
}

fn parse_const(s: &Option<String>) -> CliResult<Option<BigRational>> {
    s.as_deref().map(parse_rational).transpose().map_err(usage)
}

/// A JSON array whose entries are `"p/q"` strings or integers.
fn parse_labeling(s: &str) -> CliResult<Vec<BigRational>> {
    let values: Vec<serde_json::Value> =
        serde_json::from_str(s).map_err(|e| CliError::Usage(format!("--labeling: {e}")))?;
    values
        .iter()
        .map(|v| match v {
            serde_json::Value::String(t) => parse_rational(t).map_err(usage),
            serde_json::Value::Number(n) => parse_rational(&n.to_string()).map_err(usage),
            other => Err(CliError::Usage(format!("--labeling: expected a rational, found {other}"))),
        })
        .collect()
}

/// The backend implied by a labeling realm, checked against `--backend`.
fn realm_backend(realm: Realm, given: Option<&str>) -> CliResult<BackendSpec> {
    let given = given.map(parse_backend).transpose()?;
    let mismatch = |b: &BackendSpec| CliError::Usage(format!("backend {b} does not belong to the {realm:?} realm"));
    match (realm, given) {
        (Realm::Comb | Realm::Pl, Some(_)) => {
            Err(CliError::Usage("--backend applies only to the birational, nc and tropical realms".into()))
        }
        (Realm::Comb | Realm::Pl, None) => Ok(BackendSpec::Rational),
        (Realm::Birational, None) => Ok(BackendSpec::Rational),
        (Realm::Birational, Some(b @ (BackendSpec::Rational | BackendSpec::Matrix(1)))) => Ok(b),
        (Realm::Nc, None) => Ok(BackendSpec::Matrix(2)),
        (Realm::Nc, Some(b @ BackendSpec::Matrix(_))) => Ok(b),
        (Realm::Tropical, None | Some(BackendSpec::Tropical)) => Ok(BackendSpec::Tropical),
        (_, Some(b)) => Err(mismatch(&b)),
    }
}

fn realm_name(realm: Realm) -> &'static str {
    match realm {
        Realm::Comb => "comb",
        Realm::Pl => "pl",
        Realm::Birational => "birational",
        Realm::Nc => "nc",
        Realm::Tropical => "tropical",
    }
}

fn orbit(args: &OrbitArgs, format: Format) -> CliResult<(String, u8)> {
    let (label, p) = load_poset(&args.poset)?;
    let backend = realm_backend(args.realm, args.backend.as_deref())?;
    if args.points == 0 {
        return Err(CliError::Usage("--points must be at least 1".into()));
    }
    if args.realm == Realm::Comb {
        if args.labeling.is_some() || args.const_c.is_some() {
            return Err(CliError::Usage("--labeling and --const-c do not apply to the comb realm".into()));
        }
        let map: CombMap = args.map.as_deref().unwrap_or("rowA").parse().map_err(usage)?;
        let report = comb_orbit_report(&label, &p, map)?;
        let mut doc = emit_report(std::slice::from_ref(&report), format)?;
        if format == Format::Text {
            for (i, orbit) in report.orbits.iter().enumerate() {
                let states: Vec<String> = orbit.iter().map(|s| format!("{{{}}}", s.join(","))).collect();
                doc.push_str(&format!(
                    "orbit {} (size {}, average {}): {}\n",
                    i + 1,
                    orbit.len(),
                    report.averages[i],
                    states.join(" -> ")
                ));
            }
        }
        return Ok((doc, 0));
    }
    let map: LabelMap = args.map.as_deref().unwrap_or("bar").parse().map_err(usage)?;
    let const_c = parse_const(&args.const_c)?;
    if args.realm == Realm::Pl && const_c.is_some() {
        return Err(CliError::Usage("--const-c does not apply to the pl realm".into()));
    }
    let labeling = args.labeling.as_deref().map(parse_labeling).transpose()?;
    if let Some(f) = &labeling {
        if f.len() != p.len() {
            return Err(CliError::Usage(format!("--labeling has {} values, the poset has {} elements", f.len(), p.len())));
        }
    }
    if args.realm == Realm::Pl {
        let inside = match map {
            LabelMap::Bar => pl::in_chain_polytope,
            LabelMap::Bor => pl::in_order_polytope,
            _ => return Err(CliError::Usage(format!("map {map} is not available in the pl realm"))),
        };
        if labeling.as_ref().is_some_and(|f| !inside(&p, f)) {
            let polytope = if map == LabelMap::Bar { "chain" } else { "order" };
            return Err(CliError::Usage(format!("--labeling is outside the {polytope} polytope")));
        }
    }
    if labeling.is_some() && args.points > 1 {
        return Err(CliError::Usage("--labeling fixes a single start; drop --points".into()));
    }
    let mut reports = Vec::new();
    for i in 0..args.points {
        let seed = if i == 0 { args.seed.seed } else { derive_seed(args.seed.seed, i, 0) };
        let req = OrbitRequest {
            poset_label: label.clone(),
            poset: p.clone(),
            realm: realm_name(args.realm).into(),
            backend: backend.clone(),
            map,
            seed,
            const_c: const_c.clone(),
            max_iter: args.max_iter,
            labeling: labeling.clone(),
        };
        reports.push(orbit_report(&req)?);
    }
    let code = if reports.iter().all(|r| r.order.is_some()) { 0 } else { 1 };
    Ok((emit_report(&reports, format)?, code))
}

fn verify(args: &VerifyArgs, format: Format, verbose: u8) -> CliResult<(String, u8)> {
    let (label, p) = load_poset(&args.poset)?;
    let backend = parse_backend(&args.backend)?;
    if args.points == 0 {
        return Err(CliError::Usage("--points must be at least 1".into()));
    }
    let theorems: Vec<Theorem> = if args.all {
        Theorem::ALL.to_vec()
    } else {
        args.theorem.iter().map(|t| t.parse().map_err(usage)).collect::<CliResult<_>>()?
    };
    let const_c = parse_const(&args.const_c)?;
    let specs: Vec<CheckSpec> = theorems
        .into_iter()
        .map(|t| {
            CheckSpec::new(t, label.clone(), p.clone(), backend.clone())
                .points(args.points)
                .seed(args.seed.seed)
                .const_c(const_c.clone())
        })
        .collect();
    let reports = run_checks(&specs)?;
    if verbose > 0 {
        for r in &reports {
            eprintln!("{} {}/{} retries={} status={}", r.theorem, r.passes, r.points, r.retries, r.status);
            for d in &r.details {
                eprintln!("  {d}");
            }
        }
    }
    let code = if reports.iter().any(|r| r.status == "genericity-failure") {
        3
    } else if reports.iter().any(|r| r.status == "fail") {
        1
    } else {
        0
    };
    Ok((emit_report(&reports, format)?, code))
}
