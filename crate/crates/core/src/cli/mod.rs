//! The `polytangent` command-line front end.
//!
//! Exit codes: 0 success, 1 input error, 2 hulls not disjoint, 3 outer
//! precondition uncertain, 4 iteration or read bound violated, 5 `--verify`
//! found a disagreement with the brute-force oracle.

mod bench;
mod svg;

pub use bench::{growth_ratios, parse_sizes, CSV_HEADER};

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::generator::{generate_pair, GenSpec, Regime};
use crate::geom::Point;
use crate::io::{parse, serialize, NamedPolygon};
use crate::oracle::{classify_all_corner_pairs, classify_corner_pairs_closed, OracleReport};
use crate::polygon::{check_general_position, simplicity_violations, Orientation, Oriented, Polygon, PolygonView};
use crate::tangents::{
    hulls_disjoint, outer_common_tangent_traced, second_outer_tangent_traced, second_separating_tangent_traced,
    separating_common_tangent_traced, OuterTangent, RunStats, Separation, TangentKind, TraceStep, Uncertainty, Variant,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_NOT_SEPARABLE: i32 = 2;
pub const EXIT_PRECONDITION_UNCERTAIN: i32 = 3;
pub const EXIT_BOUND_VIOLATION: i32 = 4;
pub const EXIT_VERIFY_MISMATCH: i32 = 5;

/// Version tag of the `tangents --json` record.
pub const JSON_SCHEMA: &str = "polytangent.tangents/1";

#[derive(Debug, Parser)]
#[command(name = "polytangent", version, about = "Common tangents of two simple polygons")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute common tangents of the two polygons in FILE.
    Tangents(TangentsArgs),
    /// Decide whether the convex hulls of the two polygons are disjoint.
    CheckDisjoint { file: PathBuf },
    /// Check simplicity of every polygon and general position of the pair.
    Validate {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Write a generated instance.
    Gen(GenArgs),
    /// Render the run of one tangent operation as SVG.
    TraceSvg(TraceArgs),
    /// Measure iterations and corner reads over a range of sizes.
    Bench(bench::BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Separating,
    Outer,
    All,
}

#[derive(Debug, Args)]
struct TangentsArgs {
    file: PathBuf,
    #[arg(long, value_enum, default_value = "all")]
    kind: KindArg,
    /// Compare against the brute-force oracle (cubic time).
    #[arg(long)]
    verify: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    n0: usize,
    #[arg(long)]
    n1: usize,
    /// disjoint-hulls, intersecting-hulls, nested-hulls or overlapping-hulls.
    #[arg(long)]
    regime: String,
    #[arg(long, default_value_t = GenSpec::DEFAULT_SCALE)]
    scale: i64,
    /// Output path; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Separating,
    SecondSeparating,
    Outer,
    SecondOuter,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::Separating => Variant::Separating,
            VariantArg::SecondSeparating => Variant::SecondSeparating,
            VariantArg::Outer => Variant::Outer,
            VariantArg::SecondOuter => Variant::SecondOuter,
        }
    }
}

#[derive(Debug, Args)]
struct TraceArgs {
    file: PathBuf,
    #[arg(long, value_enum, default_value = "separating")]
    kind: VariantArg,
    /// Output path; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Outcome of one operation, with indices into the file's polygons.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Outcome {
    Tangent { s0: usize, s1: usize, stats: RunStats, precheck: Option<RunStats> },
    NotSeparable { stats: RunStats },
    Uncertain { s0: usize, s1: usize, stats: RunStats, precheck: RunStats, reason: Uncertainty },
}

impl Outcome {
    pub(crate) fn stats(&self) -> &RunStats {
        match self {
            Outcome::Tangent { stats, .. } | Outcome::NotSeparable { stats } | Outcome::Uncertain { stats, .. } => {
                stats
            }
        }
    }

    fn status(&self) -> &'static str {
        match self {
            Outcome::Tangent { .. } => "tangent",
            Outcome::NotSeparable { .. } => "not_separable",
            Outcome::Uncertain { .. } => "precondition_uncertain",
        }
    }

    pub(crate) fn precheck(&self) -> Option<&RunStats> {
        match self {
            Outcome::Tangent { precheck, .. } => precheck.as_ref(),
            Outcome::Uncertain { precheck, .. } => Some(precheck),
            Outcome::NotSeparable { .. } => None,
        }
    }

    fn pair(&self) -> Option<(usize, usize)> {
        match *self {
            Outcome::Tangent { s0, s1, .. } | Outcome::Uncertain { s0, s1, .. } => Some((s0, s1)),
            Outcome::NotSeparable { .. } => None,
        }
    }
}

/// Runs `variant` on two polygons of any orientation, presenting them in
/// the orientation the operation requires. When `trace` is given, every
/// temporary line (the initial one and one per update) is appended to it as
/// a pair of corner points.
pub(crate) fn run_variant(
    p0: &Polygon,
    p1: &Polygon,
    variant: Variant,
    trace: Option<&mut Vec<(Point, Point)>>,
) -> Outcome {
    let want1 = match variant.kind() {
        TangentKind::Separating => Orientation::CounterClockwise,
        TangentKind::Outer => Orientation::Clockwise,
    };
    let a = Oriented::new(p0, Orientation::CounterClockwise);
    let b = Oriented::new(p1, want1);
    let (n0, n1) = (a.len(), b.len());

    let mut steps: Vec<TraceStep> = Vec::new();
    let keep = trace.is_some();
    let mut sink = |step: &TraceStep| {
        if keep && (step.iteration == 0 || step.updated) {
            steps.push(*step);
        }
    };
    let oriented = match variant {
        Variant::Separating => separation(separating_common_tangent_traced(&a, &b, &mut sink)),
        Variant::SecondSeparating => separation(second_separating_tangent_traced(&a, &b, &mut sink)),
        Variant::Outer => outer(outer_common_tangent_traced(&a, &b, &mut sink)),
        Variant::SecondOuter => outer(second_outer_tangent_traced(&a, &b, &mut sink)),
    };

    if let Some(trace) = trace {
        let mut first = true;
        for step in &steps {
            if first {
                // The line before any update of the first iteration.
                let init = crate::tangents::AlgState { s: [0, 0], t: [1, 1], u: 0 };
                let (i, j) = variant.pivots(&init, n0, n1);
                trace.push((a.corner(i), b.corner(j)));
                first = false;
            }
            if step.updated {
                let (i, j) = variant.pivots(&step.state, n0, n1);
                trace.push((a.corner(i), b.corner(j)));
            }
        }
    }

    match oriented {
        Outcome::Tangent { s0, s1, stats, precheck } => {
            Outcome::Tangent { s0: a.original_index(s0), s1: b.original_index(s1), stats, precheck }
        }
        Outcome::Uncertain { s0, s1, stats, precheck, reason } => {
            Outcome::Uncertain { s0: a.original_index(s0), s1: b.original_index(s1), stats, precheck, reason }
        }
        other => other,
    }
}

fn separation(r: Result<Separation, crate::tangents::TangentError>) -> Outcome {
    match r.expect("views are presented in the required orientation") {
        Separation::Tangent(t) => Outcome::Tangent { s0: t.s0, s1: t.s1, stats: t.stats, precheck: None },
        Separation::NotSeparable(stats) => Outcome::NotSeparable { stats },
    }
}

fn outer(r: Result<OuterTangent, crate::tangents::TangentError>) -> Outcome {
    match r.expect("views are presented in the required orientation") {
        OuterTangent::Tangent(t) => Outcome::Tangent { s0: t.s0, s1: t.s1, stats: t.stats, precheck: t.precheck },
        OuterTangent::PreconditionUncertain { s0, s1, stats, precheck, reason } => {
            Outcome::Uncertain { s0, s1, stats, precheck, reason }
        }
    }
}

/// Loop counters within the bounds of the variant's algorithm, and any
/// hull precheck within the separating algorithm's bounds.
pub(crate) fn within_bounds(variant: Variant, n0: usize, n1: usize, outcome: &Outcome) -> bool {
    let fits = |kind: TangentKind, s: &RunStats| {
        s.iterations <= kind.iteration_bound(n0, n1) && s.corner_reads <= kind.read_bound(n0, n1)
    };
    fits(variant.kind(), outcome.stats()) && outcome.precheck().is_none_or(|p| fits(TangentKind::Separating, p))
}

/// Parses the command line and runs it, writing to the given streams.
/// Returns the process exit code.
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
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_INPUT
                }
            };
        }
    };
    let result = match cli.command {
        Command::Tangents(args) => cmd_tangents(&args, out, err),
        Command::CheckDisjoint { file } => cmd_check_disjoint(&file, out),
        Command::Validate { file, json } => cmd_validate(&file, json, out),
        Command::Gen(args) => cmd_gen(&args, out),
        Command::TraceSvg(args) => cmd_trace_svg(&args, out),
        Command::Bench(args) => bench::cmd_bench(&args, out, err),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_INPUT
        }
    }
}

type CmdResult = Result<i32, String>;

fn read_input(path: &Path) -> Result<String, String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| format!("stdin: {e}"))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
    }
}

fn load(path: &Path) -> Result<Vec<NamedPolygon>, String> {
    parse(&read_input(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_pair(path: &Path) -> Result<(NamedPolygon, NamedPolygon), String> {
    let mut polys = load(path)?;
    if polys.len() != 2 {
        return Err(format!("{}: expected exactly two polygons, found {}", path.display(), polys.len()));
    }
    let b = polys.pop().expect("two polygons");
    let a = polys.pop().expect("two polygons");
    Ok((a, b))
}

fn write_output(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<(), String> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    }
}

#[derive(Serialize)]
struct PolygonInfo<'a> {
    name: &'a str,
    n: usize,
    orientation: Orientation,
}

#[derive(Serialize)]
struct OperationRecord {
    operation: Variant,
    status: &'static str,
    s0: Option<usize>,
    s1: Option<usize>,
    p0: Option<[i64; 2]>,
    p1: Option<[i64; 2]>,
    stats: RunStats,
    precheck: Option<RunStats>,
    uncertainty: Option<Uncertainty>,
    iteration_bound: u64,
    read_bound: u64,
    within_bounds: bool,
}

#[derive(Serialize)]
struct VerifyRecord {
    ok: bool,
    general_position: bool,
    hulls_disjoint: bool,
    oracle_separating: Vec<(usize, usize)>,
    oracle_outer: Vec<(usize, usize)>,
    certificates: bool,
}

#[derive(Serialize)]
struct TangentsRecord<'a> {
    schema: &'static str,
    polygons: Vec<PolygonInfo<'a>>,
    results: Vec<OperationRecord>,
    verify: Option<VerifyRecord>,
    exit_code: i32,
}

fn xy(p: Point) -> [i64; 2] {
    [p.x(), p.y()]
}

/// Oracle comparison for `--verify`. In general position the strict
/// classification is used; otherwise the closed one, where a returned pair
/// only has to be among the tangent pairs.
fn verify(p0: &Polygon, p1: &Polygon, results: &[(Variant, Outcome)]) -> VerifyRecord {
    let general_position = check_general_position(p0, p1).is_clean();
    let report: OracleReport = if general_position {
        classify_all_corner_pairs(p0, p1).unwrap_or_else(|_| classify_corner_pairs_closed(p0, p1))
    } else {
        classify_corner_pairs_closed(p0, p1)
    };

    let mut ok = true;
    let mut certificates = true;
    let mut found_sep = std::collections::BTreeSet::new();
    let mut found_outer = std::collections::BTreeSet::new();
    let mut ran_sep = 0;
    let mut ran_outer = 0;
    for (variant, outcome) in results {
        let set = match variant.kind() {
            TangentKind::Separating => {
                ran_sep += 1;
                &mut found_sep
            }
            TangentKind::Outer => {
                ran_outer += 1;
                &mut found_outer
            }
        };
        match outcome {
            Outcome::Tangent { s0, s1, .. } => {
                let cert = certify_any_orientation(p0, p1, *variant, *s0, *s1);
                certificates &= cert;
                set.insert((*s0, *s1));
            }
            Outcome::NotSeparable { .. } => ok &= !report.hulls_disjoint,
            Outcome::Uncertain { .. } => ok &= !report.hulls_disjoint,
        }
    }
    let oracle_sep = &report.separating_pairs;
    let oracle_outer = &report.outer_pairs;
    if general_position {
        if ran_sep == 2 {
            ok &= &found_sep == oracle_sep;
        } else {
            ok &= found_sep.is_subset(oracle_sep);
        }
        if report.hulls_disjoint && ran_outer == 2 {
            ok &= &found_outer == oracle_outer;
        } else {
            ok &= found_outer.is_subset(oracle_outer);
        }
    } else {
        ok &= found_sep.is_subset(oracle_sep) && found_outer.is_subset(oracle_outer);
    }
    ok &= certificates;
    VerifyRecord {
        ok,
        general_position,
        hulls_disjoint: report.hulls_disjoint,
        oracle_separating: oracle_sep.iter().copied().collect(),
        oracle_outer: oracle_outer.iter().copied().collect(),
        certificates,
    }
}

/// Side check of a tangent found on re-oriented views, expressed on the
/// file's polygons: the pair must be a tangent of the right kind.
fn certify_any_orientation(p0: &Polygon, p1: &Polygon, variant: Variant, s0: usize, s1: usize) -> bool {
    use crate::tangents::certify;
    match variant.kind() {
        TangentKind::Separating => {
            certify(p0, p1, Variant::Separating, s0, s1) || certify(p0, p1, Variant::SecondSeparating, s0, s1)
        }
        TangentKind::Outer => certify(p0, p1, Variant::Outer, s0, s1) || certify(p0, p1, Variant::SecondOuter, s0, s1),
    }
}

fn cmd_tangents(args: &TangentsArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let (a, b) = load_pair(&args.file)?;
    let (p0, p1) = (&a.polygon, &b.polygon);
    let variants: &[Variant] = match args.kind {
        KindArg::Separating => &[Variant::Separating, Variant::SecondSeparating],
        KindArg::Outer => &[Variant::Outer, Variant::SecondOuter],
        KindArg::All => &Variant::ALL,
    };
    let results: Vec<(Variant, Outcome)> = variants.iter().map(|&v| (v, run_variant(p0, p1, v, None))).collect();
    let (n0, n1) = (p0.len(), p1.len());

    let verify_record = args.verify.then(|| verify(p0, p1, &results));
    if !args.verify {
        let _ = writeln!(err, "note: general position not validated; pass --verify or run `validate`");
    }
    if results.iter().any(|(_, o)| o.stats().general_position_violated()) {
        let _ = writeln!(err, "warning: input is not in general position; results are unverified");
    }

    let bounds_ok = results.iter().all(|(v, o)| within_bounds(*v, n0, n1, o));
    let code = if !bounds_ok {
        EXIT_BOUND_VIOLATION
    } else if verify_record.as_ref().is_some_and(|v| !v.ok) {
        EXIT_VERIFY_MISMATCH
    } else if results.iter().any(|(_, o)| matches!(o, Outcome::NotSeparable { .. })) {
        EXIT_NOT_SEPARABLE
    } else if results.iter().any(|(_, o)| matches!(o, Outcome::Uncertain { .. })) {
        EXIT_PRECONDITION_UNCERTAIN
    } else {
        EXIT_OK
    };

    if args.json {
        let record = TangentsRecord {
            schema: JSON_SCHEMA,
            polygons: [&a, &b]
                .iter()
                .map(|p| PolygonInfo { name: &p.name, n: p.polygon.len(), orientation: p.polygon.orientation() })
                .collect(),
            results: results
                .iter()
                .map(|(v, o)| {
                    let pair = o.pair();
                    OperationRecord {
                        operation: *v,
                        status: o.status(),
                        s0: pair.map(|p| p.0),
                        s1: pair.map(|p| p.1),
                        p0: pair.map(|p| xy(p0.corner(p.0))),
                        p1: pair.map(|p| xy(p1.corner(p.1))),
                        stats: *o.stats(),
                        precheck: o.precheck().copied(),
                        uncertainty: match o {
                            Outcome::Uncertain { reason, .. } => Some(*reason),
                            _ => None,
                        },
                        iteration_bound: v.kind().iteration_bound(n0, n1),
                        read_bound: v.kind().read_bound(n0, n1),
                        within_bounds: within_bounds(*v, n0, n1, o),
                    }
                })
                .collect(),
            verify: verify_record,
            exit_code: code,
        };
        let text = serde_json::to_string_pretty(&record).map_err(|e| e.to_string())?;
        writeln!(out, "{text}").map_err(|e| e.to_string())?;
        return Ok(code);
    }

    for (v, o) in &results {
        let s = o.stats();
        let what = match *o {
            Outcome::Tangent { s0, s1, .. } => {
                format!("{}[{s0}] {}  {}[{s1}] {}", a.name, p0.corner(s0), b.name, p1.corner(s1))
            }
            Outcome::NotSeparable { .. } => "not separable: hulls not disjoint".to_string(),
            Outcome::Uncertain { s0, s1, reason, .. } => {
                let why = match reason {
                    Uncertainty::HullsIntersect => "hulls not disjoint",
                    Uncertainty::SideCheckFailed => "side check failed",
                };
                format!("precondition uncertain: {why} (last line {}[{s0}] {}[{s1}])", a.name, b.name)
            }
        };
        writeln!(
            out,
            "{:<18} {what}  iterations={} reads={} updates={}",
            v.as_str(),
            s.iterations,
            s.corner_reads,
            s.updates
        )
        .map_err(|e| e.to_string())?;
    }
    if let Some(v) = &verify_record {
        let verdict = if v.ok { "ok" } else { "MISMATCH" };
        let _ = writeln!(
            out,
            "verify: {verdict} (oracle separating {:?}, outer {:?}, hulls disjoint {})",
            v.oracle_separating, v.oracle_outer, v.hulls_disjoint
        );
    }
    if !bounds_ok {
        let _ = writeln!(err, "error: iteration or read bound violated");
    }
    Ok(code)
}

fn cmd_check_disjoint(file: &Path, out: &mut dyn Write) -> CmdResult {
    let (a, b) = load_pair(file)?;
    let disjoint = hulls_disjoint(&a.polygon, &b.polygon);
    writeln!(out, "{disjoint}").map_err(|e| e.to_string())?;
    Ok(if disjoint { EXIT_OK } else { EXIT_NOT_SEPARABLE })
}

#[derive(Serialize)]
struct ValidateRecord<'a> {
    polygons: Vec<SimplicityRecord<'a>>,
    general_position: Option<Vec<String>>,
    valid: bool,
}

#[derive(Serialize)]
struct SimplicityRecord<'a> {
    name: &'a str,
    n: usize,
    orientation: Orientation,
    simple: bool,
    crossing_edges: Vec<(usize, usize)>,
}

fn cmd_validate(file: &Path, json: bool, out: &mut dyn Write) -> CmdResult {
    let polys = load(file)?;
    let simplicity: Vec<SimplicityRecord> = polys
        .iter()
        .map(|p| {
            let crossing_edges = simplicity_violations(&p.polygon);
            SimplicityRecord {
                name: &p.name,
                n: p.polygon.len(),
                orientation: p.polygon.orientation(),
                simple: crossing_edges.is_empty(),
                crossing_edges,
            }
        })
        .collect();
    let general_position = match &polys[..] {
        [a, b] => Some(
            check_general_position(&a.polygon, &b.polygon).violations.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        ),
        _ => None,
    };
    let valid = simplicity.iter().all(|s| s.simple) && general_position.as_ref().is_none_or(|v| v.is_empty());
    let record = ValidateRecord { polygons: simplicity, general_position, valid };

    if json {
        let text = serde_json::to_string_pretty(&record).map_err(|e| e.to_string())?;
        writeln!(out, "{text}").map_err(|e| e.to_string())?;
    } else {
        let w = |out: &mut dyn Write, s: String| writeln!(out, "{s}").map_err(|e| e.to_string());
        for s in &record.polygons {
            let status = if s.simple {
                "simple".to_string()
            } else {
                let edges: Vec<String> = s.crossing_edges.iter().map(|(i, j)| format!("{i}-{j}")).collect();
                format!("NOT simple, intersecting edges {}", edges.join(", "))
            };
            w(out, format!("{}: {} corners, {}, {status}", s.name, s.n, s.orientation))?;
        }
        match &record.general_position {
            Some(v) if v.is_empty() => w(out, "general position: ok".into())?,
            Some(v) => {
                w(out, format!("general position: {} violation(s)", v.len()))?;
                for line in v {
                    w(out, format!("  {line}"))?;
                }
            }
            None => w(out, "general position: not checked (needs exactly two polygons)".into())?,
        }
    }
    Ok(if record.valid { EXIT_OK } else { EXIT_INPUT })
}

fn cmd_gen(args: &GenArgs, out: &mut dyn Write) -> CmdResult {
    let regime: Regime = args.regime.parse().map_err(|e: crate::generator::GenError| e.to_string())?;
    let spec = GenSpec { seed: args.seed, n0: args.n0, n1: args.n1, regime, coordinate_scale: args.scale };
    let (p0, p1) = generate_pair(&spec).map_err(|e| e.to_string())?;
    let text = serialize(&[NamedPolygon::new("P0", p0), NamedPolygon::new("P1", p1)]);
    write_output(args.out.as_deref(), &text, out)?;
    Ok(EXIT_OK)
}

fn cmd_trace_svg(args: &TraceArgs, out: &mut dyn Write) -> CmdResult {
    let (a, b) = load_pair(&args.file)?;
    let variant: Variant = args.kind.into();
    let mut trace = Vec::new();
    let outcome = run_variant(&a.polygon, &b.polygon, variant, Some(&mut trace));
    let doc = svg::render(&a.polygon, &b.polygon, variant, &trace, &outcome);
    write_output(args.out.as_deref(), &doc, out)?;
    let (n0, n1) = (a.polygon.len(), b.polygon.len());
    Ok(if !within_bounds(variant, n0, n1, &outcome) {
        EXIT_BOUND_VIOLATION
    } else {
        match outcome {
            Outcome::Tangent { .. } => EXIT_OK,
            Outcome::NotSeparable { .. } => EXIT_NOT_SEPARABLE,
            Outcome::Uncertain { .. } => EXIT_PRECONDITION_UNCERTAIN,
        }
    })
}
