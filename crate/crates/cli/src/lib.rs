//! `dlspec` command-line front end. [`run`] parses arguments, writes reports to
//! the given streams and returns the process exit code:
//! 0 all PASS, 1 any FAIL (or an I/O failure), 2 INCONCLUSIVE without FAIL,
//! 3 usage, parse or input error.

use std::ffi::OsString;
use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use dlspec_core::enumeration::partitioned_enumerate;
use dlspec_core::families::{make_complete, make_cycle, make_h_graph, make_kite};
use dlspec_core::lemmas::{overall_status, DEFAULT_SEED, NONSTRICT_TOLERANCE, STRICT_THRESHOLD};
use dlspec_core::report::to_sig;
use dlspec_core::spectra::{cycle_radius_closed_form, kite_submatrix_bound, spectral_radius, SpectrumReport};
use dlspec_core::{
    decode_graph6, encode_graph6, FamilySpec, Graph, LemmaId, LemmaLab, LemmaVerdict, Status, Tolerances,
};
use serde_json::{json, Value};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(dlspec_core::Error),
    Io(io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(s) => f.write_str(s),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<dlspec_core::Error> for CliError {
    fn from(e: dlspec_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => EXIT_FAIL,
            _ => EXIT_USAGE,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Graph6,
    Table,
}

/// Inclusive order range: `7`, `6..9` or `6..=9`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NRange(pub RangeInclusive<usize>);

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad order {t:?} in range {s:?}"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let n = num(s)?;
                (n, n)
            }
        };
        if lo > hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok(NRange(lo..=hi))
    }
}

#[derive(Debug, Parser)]
#[command(name = "dlspec", version, about = "Distance Laplacian spectra and extremal unicyclic checks")]
pub struct Cli {
    /// Output format; each command accepts a subset and has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eigenvalues, spectral radius, transmissions and residual of one graph.
    Spectrum {
        /// Family spec such as `kite:n=6` or `c4spider:1,0,0,0`.
        spec: Option<String>,
        #[arg(long, conflicts_with = "spec")]
        graph6: Option<String>,
    },
    /// Run a lemma check across a range of orders; JSON-lines verdicts.
    Verify {
        /// bound, edge-add, path-shift, clique-shift, dl1, dl2, theorem or lambda-n-1.
        lemma: String,
        #[arg(long)]
        n: Option<NRange>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        shards: usize,
        #[arg(long, default_value_t = STRICT_THRESHOLD)]
        strict_threshold: f64,
        #[arg(long, default_value_t = NONSTRICT_TOLERANCE)]
        nonstrict_tolerance: f64,
        /// Write verdicts here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// All unicyclic graphs of order n, one canonical graph6 per line.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        shards: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Per-order radii for plotting.
    Plotdata {
        #[arg(long, default_value = "6..10")]
        n: NRange,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a family member and print its graph6 and vertex roles.
    Family { spec: String },
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_PASS
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<i32> {
    match &cli.command {
        Command::Spectrum { spec, graph6 } => {
            let format = pick_format(cli.format, Format::Table, &[Format::Table, Format::Json, Format::Csv])?;
            let g = match (spec, graph6) {
                (Some(s), None) => parse_spec(s)?.graph()?,
                (None, Some(s)) => decode_graph6(s)?,
                _ => return Err(CliError::Usage("give a family spec or --graph6".into())),
            };
            out.write_all(cmd_spectrum(&g, format)?.as_bytes())?;
            Ok(EXIT_PASS)
        }
        Command::Verify { lemma, n, seed, trials, shards, strict_threshold, nonstrict_tolerance, out: path } => {
            let format = pick_format(cli.format, Format::Json, &[Format::Json, Format::Table])?;
            let lemma: LemmaId = lemma.parse().map_err(|_| {
                let ids: Vec<&str> = LemmaId::ALL.iter().map(|l| l.as_str()).collect();
                CliError::Usage(format!("unknown lemma {lemma:?}; expected one of {}", ids.join(", ")))
            })?;
            let tol = tolerances(*strict_threshold, *nonstrict_tolerance)?;
            let opts = VerifyOptions { seed: *seed, trials: *trials, shards: *shards };
            let verdicts = cmd_verify(lemma, n.as_ref().map(|r| r.0.clone()), tol, &opts)?;
            let body = match format {
                Format::Table => verdict_table(&verdicts),
                _ => verdicts.iter().map(|v| v.to_json() + "\n").collect(),
            };
            emit(path.as_ref(), out, &body)?;
            err.write_all(summary_table(lemma, &verdicts).as_bytes())?;
            Ok(exit_code(overall_status(&verdicts)))
        }
        Command::Enumerate { n, shards, out: path } => {
            let format = pick_format(cli.format, Format::Graph6, &[Format::Graph6, Format::Json])?;
            if *shards == 0 {
                return Err(CliError::Usage("--shards must be at least 1".into()));
            }
            let start = Instant::now();
            let report = partitioned_enumerate(*n, *shards)?;
            let body = match format {
                Format::Json => json!({"n": report.n, "count": report.count, "graphs": report.graphs}).to_string() + "\n",
                _ => report.to_graph6_lines(),
            };
            emit(path.as_ref(), out, &body)?;
            writeln!(err, "{} unicyclic graphs of order {n} ({:.1} ms)", report.count, start.elapsed().as_secs_f64() * 1e3)?;
            Ok(EXIT_PASS)
        }
        Command::Plotdata { n, out: path } => {
            let format = pick_format(cli.format, Format::Csv, &[Format::Csv, Format::Json])?;
            let rows = cmd_plotdata(n.0.clone())?;
            let body = match format {
                Format::Json => rows.iter().map(|r| r.to_json().to_string() + "\n").collect(),
                _ => plot_csv(&rows),
            };
            emit(path.as_ref(), out, &body)?;
            Ok(EXIT_PASS)
        }
        Command::Family { spec } => {
            let format = pick_format(cli.format, Format::Table, &[Format::Table, Format::Json, Format::Graph6])?;
            out.write_all(cmd_family(&parse_spec(spec)?, format)?.as_bytes())?;
            Ok(EXIT_PASS)
        }
    }
}

fn pick_format(requested: Option<Format>, default: Format, allowed: &[Format]) -> CliResult<Format> {
    let f = requested.unwrap_or(default);
    if !allowed.contains(&f) {
        return Err(CliError::Usage(format!("format {f:?} not supported here; use one of {allowed:?}").to_lowercase()));
    }
    Ok(f)
}

fn parse_spec(s: &str) -> CliResult<FamilySpec> {
    s.parse().map_err(|e: dlspec_core::Error| CliError::Usage(e.to_string()))
}

fn tolerances(strict: f64, nonstrict: f64) -> CliResult<Tolerances> {
    if !(strict > 0.0 && strict.is_finite() && nonstrict > 0.0 && nonstrict.is_finite()) {
        return Err(CliError::Usage("tolerances must be positive and finite".into()));
    }
    Ok(Tolerances { strict, nonstrict })
}

fn emit(path: Option<&PathBuf>, out: &mut dyn Write, body: &str) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, body)?,
        None => out.write_all(body.as_bytes())?,
    }
    Ok(())
}

pub fn exit_code(status: Status) -> i32 {
    match status {
        Status::Pass => EXIT_PASS,
        Status::Fail => EXIT_FAIL,
        Status::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

fn sig(x: f64) -> String {
    if x.is_finite() {
        to_sig(x).to_string()
    } else {
        String::new()
    }
}

pub fn cmd_spectrum(g: &Graph, format: Format) -> CliResult<String> {
    let r = SpectrumReport::for_graph(g)?;
    Ok(match format {
        Format::Json => r.to_json() + "\n",
        Format::Csv => {
            let mut s = String::from("index,eigenvalue,transmission\n");
            for (i, (l, t)) in r.eigenvalues.iter().zip(&r.transmissions).enumerate() {
                s += &format!("{i},{},{t}\n", sig(*l));
            }
            s
        }
        _ => {
            let eig: Vec<String> = r.eigenvalues.iter().map(|&l| format!("{l:.6}")).collect();
            let tr: Vec<String> = r.transmissions.iter().map(|t| t.to_string()).collect();
            format!(
                "graph6         {}\nradius         {:.6}\neigenvalues    {}\ntransmissions  {}\nresidual       {:.3e}\n",
                encode_graph6(g)?,
                r.radius,
                eig.join(" "),
                tr.join(" "),
                r.residual
            )
        }
    })
}

pub struct VerifyOptions {
    pub seed: u64,
    pub trials: usize,
    pub shards: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { seed: DEFAULT_SEED, trials: 200, shards: 1 }
    }
}

/// Default order range per lemma when `--n` is absent.
pub fn default_range(lemma: LemmaId) -> RangeInclusive<usize> {
    match lemma {
        LemmaId::Bound => 3..=8,
        LemmaId::EdgeAdd => 3..=9,
        LemmaId::PathShift => 5..=11,
        LemmaId::CliqueShift => 5..=10,
        LemmaId::Dl1 => 6..=9,
        LemmaId::Dl2 => 4..=10,
        LemmaId::Theorem => 3..=10,
        LemmaId::LambdaN1 => 3..=6,
    }
}

/// Shift parameters `k >= l >= 1` whose grafted graph on `base` has an order
/// in `range`.
fn shifts_in(base: &Graph, range: &RangeInclusive<usize>) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for n in range.clone() {
        if let Some(total) = n.checked_sub(base.n()) {
            out.extend((1..=total / 2).map(|l| (total - l, l)));
        }
    }
    out
}

/// Runs one lemma across `range` (or its default). Path shifts graft onto
/// vertex 0 of `C_3`; clique shifts onto edge `{0,1}` of `C_3` and `K_4`;
/// the random edge-addition suite draws orders from 3 to the range's end.
pub fn cmd_verify(
    lemma: LemmaId,
    range: Option<RangeInclusive<usize>>,
    tol: Tolerances,
    opts: &VerifyOptions,
) -> CliResult<Vec<LemmaVerdict>> {
    let range = range.unwrap_or_else(|| default_range(lemma));
    if opts.shards == 0 {
        return Err(CliError::Usage("--shards must be at least 1".into()));
    }
    let lab = LemmaLab::new(tol);
    let mut verdicts = Vec::new();
    match lemma {
        LemmaId::Bound => {
            for n in range {
                for s in partitioned_enumerate(n, opts.shards)?.graphs {
                    verdicts.push(lab.check_transmission_bound(&decode_graph6(&s)?)?);
                }
            }
        }
        LemmaId::EdgeAdd => verdicts = lab.edge_addition_random_suite(opts.seed, opts.trials, *range.end())?,
        LemmaId::PathShift => {
            let c3 = make_cycle(3)?;
            for (k, l) in shifts_in(&c3, &range) {
                verdicts.push(lab.check_path_shift(&c3, 0, k, l)?);
            }
        }
        LemmaId::CliqueShift => {
            for base in [make_cycle(3)?, make_complete(4)?] {
                for (k, l) in shifts_in(&base, &range) {
                    verdicts.push(lab.check_clique_shift(&base, 0, 1, k, l)?);
                }
            }
        }
        LemmaId::Dl1 => {
            for n in range {
                verdicts.push(lab.check_h_vs_kite(n)?);
            }
        }
        LemmaId::Dl2 => {
            for n in range {
                verdicts.push(lab.check_c4_family(n)?);
            }
        }
        LemmaId::Theorem => {
            for n in range {
                verdicts.push(lab.extremal_search_sharded(n, opts.shards)?);
            }
        }
        LemmaId::LambdaN1 => {
            for n in range {
                verdicts.push(lab.check_algebraic_connectivity_analogue(n)?);
            }
        }
    }
    Ok(verdicts)
}

fn margin_text(m: f64) -> String {
    if m.is_finite() && m.abs() >= 1e-3 {
        format!("{m:.6}")
    } else if m.is_finite() {
        format!("{m:.3e}")
    } else {
        "-".into()
    }
}

/// One row per lemma: total instances, smallest margin, worst status.
pub fn summary_table(lemma: LemmaId, verdicts: &[LemmaVerdict]) -> String {
    let instances: usize = verdicts.iter().map(|v| v.instances).sum();
    let min_margin = verdicts.iter().map(|v| v.margin).fold(f64::INFINITY, f64::min);
    format!(
        "{:<14} {:>10} {:>14} {}\n{:<14} {:>10} {:>14} {}\n",
        "lemma",
        "instances",
        "min_margin",
        "status",
        lemma.as_str(),
        instances,
        margin_text(min_margin),
        overall_status(verdicts)
    )
}

fn verdict_table(verdicts: &[LemmaVerdict]) -> String {
    let mut s = format!("{:<40} {:>10} {:>14} {}\n", "instance", "instances", "margin", "status");
    for v in verdicts {
        s += &format!("{:<40} {:>10} {:>14} {}\n", v.instance, v.instances, margin_text(v.margin), v.status);
    }
    s
}

#[derive(Clone, Debug, PartialEq)]
pub struct PlotRow {
    pub n: usize,
    pub lambda_kite: f64,
    /// `NaN` below order 6, where `H_n` is undefined.
    pub lambda_h: f64,
    pub lambda_cycle_closed_form: f64,
    /// `NaN` below order 4.
    pub submatrix_bound: f64,
    pub max_over_enumeration: f64,
}

pub const PLOT_COLUMNS: [&str; 6] =
    ["n", "lambda_kite", "lambda_h", "lambda_cycle_closed_form", "submatrix_bound", "max_over_enumeration"];

impl PlotRow {
    fn to_json(&self) -> Value {
        let num = |x: f64| if x.is_finite() { json!(to_sig(x)) } else { Value::Null };
        json!({
            "n": self.n,
            "lambda_kite": num(self.lambda_kite),
            "lambda_h": num(self.lambda_h),
            "lambda_cycle_closed_form": num(self.lambda_cycle_closed_form),
            "submatrix_bound": num(self.submatrix_bound),
            "max_over_enumeration": num(self.max_over_enumeration),
        })
    }
}

pub fn cmd_plotdata(range: RangeInclusive<usize>) -> CliResult<Vec<PlotRow>> {
    range
        .map(|n| {
            let max = partitioned_enumerate(n, 1)?
                .graphs
                .iter()
                .map(|s| spectral_radius(&decode_graph6(s)?))
                .try_fold(f64::NEG_INFINITY, |acc, r| r.map(|r| acc.max(r)))?;
            Ok(PlotRow {
                n,
                lambda_kite: spectral_radius(&make_kite(n)?.0)?,
                lambda_h: if n >= 6 { spectral_radius(&make_h_graph(n)?.0)? } else { f64::NAN },
                lambda_cycle_closed_form: cycle_radius_closed_form(n)?,
                submatrix_bound: if n >= 4 { kite_submatrix_bound(n)? } else { f64::NAN },
                max_over_enumeration: max,
            })
        })
        .collect()
}

pub fn plot_csv(rows: &[PlotRow]) -> String {
    let mut s = PLOT_COLUMNS.join(",") + "\n";
    for r in rows {
        let cells = [
            r.lambda_kite,
            r.lambda_h,
            r.lambda_cycle_closed_form,
            r.submatrix_bound,
            r.max_over_enumeration,
        ];
        let cells: Vec<String> = cells.iter().map(|&x| sig(x)).collect();
        s += &format!("{},{}\n", r.n, cells.join(","));
    }
    s
}

pub fn cmd_family(spec: &FamilySpec, format: Format) -> CliResult<String> {
    let (g, roles) = spec.build()?;
    let g6 = encode_graph6(&g)?;
    Ok(match format {
        Format::Graph6 => g6 + "\n",
        Format::Json => {
            let edges: Vec<[usize; 2]> = g.edges().map(|(u, v)| [u, v]).collect();
            json!({"spec": spec.to_string(), "graph6": g6, "n": g.n(), "edges": edges, "roles": roles}).to_string()
                + "\n"
        }
        _ => {
            let mut s = format!("spec    {spec}\ngraph6  {g6}\nn       {}\nedges   {}\n", g.n(), g.edge_count());
            if !roles.is_empty() {
                s += "roles\n";
                for (role, v) in roles.iter() {
                    s += &format!("  {role:<8} {v}\n");
                }
            }
            s
        }
    })
}

