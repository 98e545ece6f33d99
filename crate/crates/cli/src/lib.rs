//! Argument parsing and report rendering for the `holflag` binary.
//!
//! [`run`] never exits the process; it returns the exit code together with
//! whatever would go to stdout and stderr, so tests can drive it directly.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use holflag_core::classify::ExceptionRegistry;
use holflag_core::homcheck::SweepEntry;
use holflag_core::repthy::{self, EnlargementPair};
use holflag_core::{
    build_root_system, classify_hol, lookup_real_form, parabolic_from_nodes, parabolic_from_vector,
    sweep_exceptions, ChainCertificate, Family, HolKind, HolResult, NodeSet, Parabolic, RealForm,
    RootSystem, SimpleType, Source, Weight,
};
use serde::Serialize;

pub const SCHEMA_VERSION: &str = "1";

/// The report schema shipped with this version.
pub const REPORT_SCHEMA: &str = include_str!("../schema/report.v1.json");

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_UNDETERMINED: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "holflag",
    version,
    about = "Holomorphic automorphism groups of open orbits in flag manifolds"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Debug, Subcommand)]
enum Verb {
    /// Classify Hol(D) for a real form and a parabolic.
    Classify(Query),
    /// Search root chains for every nonempty node set of a type.
    Sweep(TypeArgs),
    /// Check the enlargement and branching tables.
    Verify(VerifyArgs),
    /// Test the vanishing condition for a character chi.
    Vanishing(Query),
    /// Complex dimension s of the base cycle.
    Sdim(Query),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Args)]
struct TypeArgs {
    #[arg(long = "type", value_name = "A..G")]
    family: Family,
    #[arg(long)]
    rank: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Debug, Args)]
struct Query {
    #[arg(long = "type", value_name = "A..G")]
    family: Family,
    #[arg(long)]
    rank: usize,
    /// 1-based simple-root indices, e.g. `1,3`.
    #[arg(long, conflicts_with = "lambda0")]
    nodes: Option<NodeSet>,
    /// Defining vector in fundamental-weight coordinates.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    lambda0: Option<Vec<i64>>,
    #[arg(long = "real-form")]
    real_form: Option<String>,
    /// Character in fundamental-weight coordinates.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    chi: Option<Vec<i64>>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Run every table suite.
    #[arg(long, conflicts_with_all = ["family", "rank", "a"])]
    tables: bool,
    #[arg(long = "type", value_name = "A..G", requires = "rank")]
    family: Option<Family>,
    #[arg(long, requires = "family")]
    rank: Option<usize>,
    /// Multiple of the fundamental weight for the branching check.
    #[arg(long, requires = "family")]
    a: Option<u32>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String, code: i32) -> Self {
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(msg: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_ERROR,
            stdout: String::new(),
            stderr: format!("holflag: {msg}\n"),
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_ERROR,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome::ok(rendered, EXIT_OK)
            };
        }
    };
    let result = match cli.verb {
        Verb::Classify(q) => classify(&q),
        Verb::Sweep(t) => sweep(&t),
        Verb::Verify(v) => verify(&v),
        Verb::Vanishing(q) => vanishing(&q),
        Verb::Sdim(q) => sdim(&q),
    };
    result.unwrap_or_else(Outcome::fail)
}

type CmdResult = Result<Outcome, String>;

fn emit<T: Serialize>(format: Format, report: &T, text: impl FnOnce() -> String) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string(report).expect("reports serialise");
            s.push('\n');
            s
        }
        Format::Text => text(),
    }
}

fn simple_type(family: Family, rank: usize) -> Result<SimpleType, String> {
    SimpleType::new(family, rank).map_err(|e| e.to_string())
}

#[derive(Debug, Serialize)]
struct InputEcho {
    verb: &'static str,
    #[serde(rename = "type")]
    simple_type: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    real_form: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    nodes: Option<NodeSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lambda0: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    chi: Option<Vec<i64>>,
}

impl InputEcho {
    fn new(verb: &'static str, t: SimpleType, q: &Query) -> Self {
        InputEcho {
            verb,
            simple_type: t.to_string(),
            real_form: q.real_form.clone(),
            nodes: q.nodes.clone(),
            lambda0: q.lambda0.clone(),
            chi: q.chi.clone(),
        }
    }
}

fn parabolic<'a>(rs: &'a RootSystem, q: &Query) -> Result<Parabolic<'a>, String> {
    let p = match (&q.nodes, &q.lambda0) {
        (Some(nodes), None) => parabolic_from_nodes(rs, nodes),
        (None, Some(v)) => parabolic_from_vector(rs, &Weight::new(v.clone())),
        _ => return Err("exactly one of --nodes or --lambda0 is required".into()),
    };
    p.map_err(|e| e.to_string())
}

fn real_form(q: &Query, t: SimpleType) -> Result<RealForm, String> {
    let name = q.real_form.as_deref().ok_or("--real-form is required")?;
    let rf = lookup_real_form(name).map_err(|e| e.to_string())?;
    if rf.complex_type() != t {
        return Err(format!(
            "real form {} has complexification {}, not {t}",
            rf.name(),
            rf.complex_type()
        ));
    }
    Ok(rf)
}

#[derive(Debug, Serialize)]
struct ClassifyReport {
    kind: HolKind,
    group: Option<String>,
    source: Option<Source>,
    certificate: Option<ChainCertificate>,
    notes: Vec<String>,
    isometry_note: Option<String>,
    input: InputEcho,
    schema_version: &'static str,
}

fn isometry_note(rf: &RealForm, verdict: &HolResult) -> Option<String> {
    if verdict.kind != HolKind::Finite {
        return None;
    }
    Some(if rf.is_compact() {
        "hermitian isometry group of D is a compact real form of Hol(D)".into()
    } else {
        "hermitian isometry group of D equals Hol(D)".into()
    })
}

fn classify(q: &Query) -> CmdResult {
    let t = simple_type(q.family, q.rank)?;
    let rf = real_form(q, t)?;
    let rs = build_root_system(t);
    let p = parabolic(&rs, q)?;
    let verdict = classify_hol(&rf, &p).map_err(|e| e.to_string())?;
    let report = ClassifyReport {
        isometry_note: isometry_note(&rf, &verdict),
        kind: verdict.kind,
        group: verdict.group.clone(),
        source: verdict.source,
        certificate: verdict.certificate.clone(),
        notes: verdict.notes.clone(),
        input: InputEcho::new("classify", t, q),
        schema_version: SCHEMA_VERSION,
    };
    let code = if verdict.is_determinate() {
        EXIT_OK
    } else {
        EXIT_UNDETERMINED
    };
    let out = emit(q.format, &report, || {
        let mut s = String::new();
        writeln!(s, "input: {} {} {}", t, rf.name(), p.nodes()).unwrap();
        writeln!(s, "kind: {}", report.kind).unwrap();
        if let Some(g) = &report.group {
            writeln!(s, "group: {g}").unwrap();
        }
        if let Some(src) = report.source {
            writeln!(s, "source: {src}").unwrap();
        }
        if let Some(c) = &report.certificate {
            let betas: Vec<String> = c.betas.iter().map(ToString::to_string).collect();
            writeln!(s, "certificate: {} -> {}", betas.join(", "), c.endpoint).unwrap();
        }
        for n in &report.notes {
            writeln!(s, "note: {n}").unwrap();
        }
        if let Some(n) = &report.isometry_note {
            writeln!(s, "isometry: {n}").unwrap();
        }
        s
    });
    Ok(Outcome::ok(out, code))
}

#[derive(Debug, Serialize)]
struct SweepLine {
    nodes: NodeSet,
    status: &'static str,
    certificate: Option<ChainCertificate>,
}

impl From<SweepEntry> for SweepLine {
    fn from(e: SweepEntry) -> Self {
        SweepLine {
            nodes: e.nodes,
            status: if e.certificate.is_some() {
                "chain found"
            } else {
                "no chain"
            },
            certificate: e.certificate,
        }
    }
}

#[derive(Debug, Serialize)]
struct SweepOutput {
    #[serde(rename = "type")]
    simple_type: String,
    entries: Vec<SweepLine>,
    exceptions: Vec<NodeSet>,
    note: Option<String>,
    schema_version: &'static str,
}

fn sweep(a: &TypeArgs) -> CmdResult {
    let t = simple_type(a.family, a.rank)?;
    let rs = build_root_system(t);
    let report = sweep_exceptions(&rs);
    let out = SweepOutput {
        simple_type: t.to_string(),
        entries: report.entries.into_iter().map(SweepLine::from).collect(),
        exceptions: report.exceptions,
        note: report.note,
        schema_version: SCHEMA_VERSION,
    };
    let text = emit(a.format, &out, || {
        let mut s = String::new();
        writeln!(s, "sweep {}", out.simple_type).unwrap();
        for e in &out.entries {
            writeln!(s, "  {}: {}", e.nodes, e.status).unwrap();
        }
        let exc: Vec<String> = out.exceptions.iter().map(ToString::to_string).collect();
        writeln!(s, "exceptions: {{{}}}", exc.join(", ")).unwrap();
        if let Some(n) = &out.note {
            writeln!(s, "note: {n}").unwrap();
        }
        s
    });
    Ok(Outcome::ok(text, EXIT_OK))
}

#[derive(Debug, Serialize)]
struct Check {
    suite: &'static str,
    case: String,
    detail: String,
    ok: bool,
}

#[derive(Debug, Serialize)]
struct VerifyOutput {
    checks: Vec<Check>,
    ok: bool,
    schema_version: &'static str,
}

/// Rows of the exceptional-enlargement table, checked through the full
/// classifier: (real form, node set, expected group).
pub const TABLE_ROWS: [(&str, &[usize], &str); 8] = [
    ("so(2,3)", &[2], "SO_e(2,4)/Z2"),
    ("so(4,3)", &[3], "SO_e(4,4)/Z2"),
    ("sp(2,R)", &[1], "SU(2,2)/Z_4"),
    ("sp(1,2)", &[1], "SU(2,4)/Z_6"),
    ("g2-split", &[1], "SO_e(3,4)"),
    ("g2-compact", &[1], "SO(7,C)"),
    ("so(7)", &[3], "SO(8,C)/Z2"),
    ("sp(2)", &[1], "SL(4,C)/Z_4"),
];

const BRANCHING_MULTIPLES: [u32; 4] = [1, 2, 3, 4];

fn table_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    for pair in EnlargementPair::all(6) {
        let (detail, ok) = match repthy::verify_enlargement(pair) {
            Ok(r) => (
                format!("{} = {} + {}", r.dim_enlarged, r.dim_base, r.dim_e_gamma_s),
                r.ok,
            ),
            Err(e) => (e.to_string(), false),
        };
        checks.push(Check {
            suite: "enlargement",
            case: pair.to_string(),
            detail,
            ok,
        });
    }
    for pair in EnlargementPair::all(4)
        .into_iter()
        .filter(|p| p.hw_map().is_some())
    {
        for a in BRANCHING_MULTIPLES {
            checks.push(branching_check(pair, a));
        }
    }
    for (name, nodes, expected) in TABLE_ROWS {
        let nodes = NodeSet::new(nodes.iter().copied());
        let got = lookup_real_form(name)
            .map_err(|e| e.to_string())
            .and_then(|rf| {
                let rs = build_root_system(rf.complex_type());
                let p = parabolic_from_nodes(&rs, &nodes).map_err(|e| e.to_string())?;
                classify_hol(&rf, &p).map_err(|e| e.to_string())
            });
        let (detail, ok) = match got {
            Ok(v) => {
                let g = v.group.unwrap_or_default();
                let ok = g == expected && v.source == Some(Source::ExceptionTable);
                (g, ok)
            }
            Err(e) => (e, false),
        };
        checks.push(Check {
            suite: "exceptions",
            case: format!("{name} {nodes}"),
            detail,
            ok,
        });
    }
    let registry = ExceptionRegistry::standard();
    for rank in 2..=6 {
        let (detail, ok) = match registry.self_check(rank) {
            Ok(()) => ("consistent".to_string(), true),
            Err(e) => (e, false),
        };
        checks.push(Check {
            suite: "registry",
            case: format!("rank {rank}"),
            detail,
            ok,
        });
    }
    checks
}

fn branching_check(pair: EnlargementPair, a: u32) -> Check {
    let (detail, ok) = match repthy::verify_branching(pair, a) {
        Ok(r) => (
            format!("{} vs {}", r.dim_base_rep, r.dim_enlarged_rep),
            r.equal,
        ),
        Err(e) => (e.to_string(), false),
    };
    Check {
        suite: "branching",
        case: format!("{pair} a={a}"),
        detail,
        ok,
    }
}

fn verify(v: &VerifyArgs) -> CmdResult {
    let checks = if v.tables {
        table_checks()
    } else {
        let (Some(family), Some(rank)) = (v.family, v.rank) else {
            return Err("verify needs --tables or --type with --rank".into());
        };
        let pair = EnlargementPair::new(simple_type(family, rank)?).map_err(|e| e.to_string())?;
        match v.a {
            Some(a) => vec![branching_check(pair, a)],
            None => {
                let r = repthy::verify_enlargement(pair).map_err(|e| e.to_string())?;
                vec![Check {
                    suite: "enlargement",
                    case: pair.to_string(),
                    detail: format!("{} = {} + {}", r.dim_enlarged, r.dim_base, r.dim_e_gamma_s),
                    ok: r.ok,
                }]
            }
        }
    };
    let ok = checks.iter().all(|c| c.ok);
    let out = VerifyOutput {
        checks,
        ok,
        schema_version: SCHEMA_VERSION,
    };
    let text = emit(v.format, &out, || {
        let mut s = String::new();
        for c in &out.checks {
            let mark = if c.ok { "ok" } else { "MISMATCH" };
            writeln!(s, "{:<11} {:<18} {:<24} {mark}", c.suite, c.case, c.detail).unwrap();
        }
        writeln!(
            s,
            "{}",
            if out.ok {
                "all checks passed"
            } else {
                "verification failed"
            }
        )
        .unwrap();
        s
    });
    Ok(Outcome::ok(text, if ok { EXIT_OK } else { EXIT_ERROR }))
}

#[derive(Debug, Serialize)]
struct VanishingOutput {
    holds: bool,
    input: InputEcho,
    schema_version: &'static str,
}

fn vanishing(q: &Query) -> CmdResult {
    let t = simple_type(q.family, q.rank)?;
    let rs = build_root_system(t);
    let p = parabolic(&rs, q)?;
    let chi = q.chi.clone().ok_or("--chi is required")?;
    let holds = repthy::vanishing_condition(&p, &Weight::new(chi)).map_err(|e| e.to_string())?;
    let out = VanishingOutput {
        holds,
        input: InputEcho::new("vanishing", t, q),
        schema_version: SCHEMA_VERSION,
    };
    Ok(Outcome::ok(
        emit(q.format, &out, || format!("vanishing condition: {holds}\n")),
        EXIT_OK,
    ))
}

#[derive(Debug, Serialize)]
struct SdimOutput {
    s: usize,
    input: InputEcho,
    schema_version: &'static str,
}

fn sdim(q: &Query) -> CmdResult {
    let t = simple_type(q.family, q.rank)?;
    let rf = real_form(q, t)?;
    let rs = build_root_system(t);
    let p = parabolic(&rs, q)?;
    let s = repthy::s_dimension(&rf, &p).map_err(|e| e.to_string())?;
    let out = SdimOutput {
        s,
        input: InputEcho::new("sdim", t, q),
        schema_version: SCHEMA_VERSION,
    };
    Ok(Outcome::ok(
        emit(q.format, &out, || format!("s = {s}\n")),
        EXIT_OK,
    ))
}
