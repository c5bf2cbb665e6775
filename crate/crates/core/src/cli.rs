//! Command-line front end.
//!
//! Exit codes: 0 on success or an all-pass table, 1 when a check fails,
//! 2 on usage, parse or input errors.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::alexander::lemma_bound_report;
use crate::braid::BraidWord;
use crate::classify::{classify_by_rank, verify_table, ClassificationReport, TableReport};
use crate::dataset::Dataset;
use crate::error::{Error, Result};
use crate::khovanov::{rank_report, BigradedRanks, KhOptions, RankReport, DEFAULT_MAX_CROSSINGS};
use crate::laurent::VarNames;
use crate::linkdiag::{axis_link_diagram, braid_closure_diagram, DiagramJson, LinkDiagram};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const ORIENTATION_NOTE: &str =
    "bigraded ranks use the orientation traced from each component's smallest arc; totals do not depend on it";

#[derive(Debug, Parser)]
#[command(name = "khrank", version, about = "Khovanov ranks over Z/2, Burau matrices and axis-link Alexander polynomials")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Refuse diagrams with more crossings than this.
    #[arg(long, global = true, env = "KHRANK_MAX_CROSSINGS", default_value_t = DEFAULT_MAX_CROSSINGS)]
    pub max_crossings: usize,

    /// Worker threads (0 = one per processor).
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Khovanov homology ranks of a link.
    Kh(LinkArgs),
    /// Reduced Burau matrix of a braid.
    Burau {
        /// Braid as `l:w`, e.g. `3:1 -2`.
        braid: String,
    },
    /// Alexander polynomial of the axis link of a braid and the coefficient-sum checks.
    Alex {
        braid: String,
    },
    /// Rank class of a link.
    Classify(LinkArgs),
    /// Run every check over a link table.
    VerifyTable {
        /// Use the shipped table.
        #[arg(long, conflicts_with = "path")]
        builtin: bool,
        /// JSON-lines table file.
        #[arg(required_unless_present = "builtin")]
        path: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct LinkArgs {
    /// `pd:<PD>`, `braid:<l:w>` (closure), `axis:<l:w>` (axis ∪ closure),
    /// `name:<table name>` or `json:<file>`.
    pub spec: String,
    /// Also report reduced bigraded ranks.
    #[arg(long)]
    pub reduced: bool,
    /// Mirror the diagram first.
    #[arg(long)]
    pub mirror: bool,
}

/// Resolves a link spec to a diagram and an optional display name.
pub fn resolve_link_spec(spec: &str) -> Result<(LinkDiagram, Option<String>)> {
    let (kind, rest) = spec
        .split_once(':')
        .ok_or_else(|| Error::PdParse(format!("link spec {spec:?} needs a pd:, braid:, axis:, name: or json: prefix")))?;
    match kind {
        "pd" => Ok((rest.parse()?, None)),
        "braid" => Ok((braid_closure_diagram(&rest.parse::<BraidWord>()?), None)),
        "axis" => Ok((axis_link_diagram(&rest.parse::<BraidWord>()?), None)),
        "name" => {
            let ds = Dataset::builtin();
            let e = ds.get(rest).ok_or_else(|| Error::UnknownName(rest.to_string()))?;
            Ok((e.diagram()?, Some(e.name.clone())))
        }
        "json" => {
            let text = std::fs::read_to_string(rest).map_err(|e| Error::Io(format!("{rest}: {e}")))?;
            let j: DiagramJson =
                serde_json::from_str(&text).map_err(|e| Error::PdParse(format!("{rest}: {e}")))?;
            Ok((LinkDiagram::from_json(&j)?, j.name))
        }
        other => Err(Error::PdParse(format!("unknown link spec prefix {other:?}"))),
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let mut buf = Vec::new();
    match pool.install(|| execute(&cli, &mut buf)) {
        Ok(code) => {
            if let Err(e) = out.write_all(&buf) {
                let _ = writeln!(err, "error: {e}");
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(cli: &Cli, out: &mut Vec<u8>) -> Result<i32> {
    let opts = KhOptions { max_crossings: cli.max_crossings };
    let io = |e: std::io::Error| Error::Io(e.to_string());
    match &cli.command {
        Command::Kh(a) => {
            let (mut d, name) = resolve_link_spec(&a.spec)?;
            if a.mirror {
                d = d.mirror();
            }
            let report = rank_report(&d, name.as_deref(), a.reduced, opts)?;
            if cli.json {
                write_json(out, &report)?;
            } else {
                write!(out, "{}", format_rank_report(&report)).map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Burau { braid } => {
            let w: BraidWord = braid.parse()?;
            let m = w.burau()?;
            if cli.json {
                let rows: Vec<Vec<String>> =
                    m.rows().iter().map(|r| r.iter().map(|e| e.render(VarNames::XT)).collect()).collect();
                write_json(out, &serde_json::json!({"braid": w.to_string(), "strands": w.strands(), "matrix": rows}))?;
            } else {
                writeln!(out, "{}", m.render(VarNames::XT)).map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Alex { braid } => {
            let w: BraidWord = braid.parse()?;
            let r = lemma_bound_report(&w)?;
            if cli.json {
                write_json(out, &r)?;
            } else {
                writeln!(out, "braid:     {}", r.braid).map_err(io)?;
                writeln!(out, "strands:   {}", r.strands).map_err(io)?;
                writeln!(out, "delta:     {}", r.delta).map_err(io)?;
                writeln!(out, "torres:    {}", r.torres).map_err(io)?;
                match &r.axis_form {
                    Some(f) => writeln!(out, "axis form: a={} f=[{}]", f.a, f.f.join(", ")),
                    None => writeln!(out, "axis form: none"),
                }
                .map_err(io)?;
                writeln!(out, "stat:      {}", r.stat).map_err(io)?;
                for flag in &r.flags {
                    writeln!(out, "flag:      {flag}").map_err(io)?;
                }
            }
            Ok(if r.flags.is_empty() { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Command::Classify(a) => {
            let (mut d, name) = resolve_link_spec(&a.spec)?;
            if a.mirror {
                d = d.mirror();
            }
            let r = classify_by_rank(&d, name.as_deref(), opts)?;
            if cli.json {
                write_json(out, &r)?;
            } else {
                write!(out, "{}", format_classification(&r)).map_err(io)?;
            }
            Ok(if r.is_consistent() { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Command::VerifyTable { builtin, path } => {
            let ds = match (builtin, path) {
                (true, _) => Dataset::builtin(),
                (false, Some(p)) => Dataset::load(p)?,
                (false, None) => return Err(Error::Dataset("no table given".into())),
            };
            let report = verify_table(&ds, opts);
            if cli.json {
                write_json(out, &table_json(&report))?;
            } else {
                write!(out, "{}", format_table(&report)).map_err(io)?;
            }
            Ok(if report.all_pass() { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
    }
}

fn write_json<T: Serialize>(out: &mut dyn Write, v: &T) -> Result<()> {
    let text = serde_json::to_string(v).map_err(|e| Error::Io(e.to_string()))?;
    writeln!(out, "{text}").map_err(|e| Error::Io(e.to_string()))
}

fn format_bigraded(title: &str, b: &BigradedRanks) -> String {
    let mut s = format!("{title}\n{:>5} {:>5} {:>5}\n", "i", "j", "rank");
    for ((i, j), r) in b.iter() {
        s.push_str(&format!("{i:>5} {j:>5} {r:>5}\n"));
    }
    s
}

pub fn format_rank_report(r: &RankReport) -> String {
    let mut s = String::new();
    if let Some(n) = &r.name {
        s.push_str(&format!("name:          {n}\n"));
    }
    s.push_str(&format!("components:    {}\n", r.components));
    s.push_str(&format!("total:         {}\n", r.total));
    s.push_str(&format!("reduced total: {}\n", r.reduced_total));
    s.push_str(&format_bigraded("unreduced ranks", &r.bigraded));
    if let Some(red) = &r.reduced_bigraded {
        s.push_str(&format_bigraded("reduced ranks", red));
    }
    s.push_str(&format!("note: {ORIENTATION_NOTE}\n"));
    s
}

pub fn format_classification(r: &ClassificationReport) -> String {
    let mut s = String::new();
    if let Some(n) = &r.name {
        s.push_str(&format!("name:          {n}\n"));
    }
    s.push_str(&format!("components:    {}\n", r.components));
    s.push_str(&format!("total:         {}\n", r.total));
    s.push_str(&format!("reduced total: {}\n", r.reduced_total));
    s.push_str(&format!("parity:        {}\n", verdict(r.parity_ok)));
    s.push_str(&format!("total >= 2^n:  {}\n", verdict(r.lower_bound_ok)));
    if let Some(bs) = &r.batson_seed {
        s.push_str(&format!("Batson-Seed:   {}\n", verdict(bs.ok)));
        for sp in &bs.splits {
            s.push_str(&format!(
                "  {:?} | {:?}: {} >= {} * {} (margin {})\n",
                sp.a, sp.b, bs.total, sp.total_a, sp.total_b, sp.margin
            ));
        }
    }
    s.push_str(&format!("class:         {}\n", r.class));
    for f in &r.flags {
        s.push_str(&format!("flag:          {f}\n"));
    }
    s.push_str(&format!("note: {}\n", r.note));
    s
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "VIOLATED"
    }
}

#[derive(Serialize)]
struct EntrySummary<'a> {
    name: &'a str,
    components: usize,
    crossings: usize,
    total: u64,
    reduced_total: Option<u64>,
    class: &'a str,
}

#[derive(Serialize)]
struct TableJson<'a> {
    all_pass: bool,
    checks: &'a [crate::classify::CheckResult],
    errors: &'a [(String, String)],
    entries: Vec<EntrySummary<'a>>,
}

fn table_json(r: &TableReport) -> TableJson<'_> {
    TableJson {
        all_pass: r.all_pass(),
        checks: &r.checks,
        errors: &r.errors,
        entries: r
            .entries
            .iter()
            .map(|e| EntrySummary {
                name: &e.name,
                components: e.components,
                crossings: e.crossings,
                total: e.total,
                reduced_total: e.reduced_totals.first().copied(),
                class: &e.class,
            })
            .collect(),
    }
}

pub fn format_table(r: &TableReport) -> String {
    let mut s = String::from("checks\n");
    for c in &r.checks {
        s.push_str(&format!("  {:<8} {}", c.status.to_string(), c.check));
        if !c.counterexamples.is_empty() {
            s.push_str(&format!(" [{}]", c.counterexamples.join(", ")));
        }
        s.push('\n');
    }
    for (name, e) in &r.errors {
        s.push_str(&format!("  error    {name}: {e}\n"));
    }
    s.push_str(&format!("\n{:<14} {:>3} {:>3} {:>6}  class\n", "entry", "n", "X", "total"));
    for e in &r.entries {
        s.push_str(&format!("{:<14} {:>3} {:>3} {:>6}  {}\n", e.name, e.components, e.crossings, e.total, e.class));
    }
    s.push_str(&format!(
        "\n{}: checks confirm the predicted ranks on these diagrams only; nothing is proved about isotopy classes\n",
        if r.all_pass() { "ALL PASS" } else { "NOT ALL PASS" }
    ));
    s
}
