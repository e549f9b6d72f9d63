//! The `phicut` command line.
//!
//! [`run`] does all the work and returns the exit status with the text that
//! would go to stdout and stderr, so the binary is a thin shell around it.
//! Input paths that do not exist on disk are looked up in the bundled corpus.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::BoundAlgebra;
use crate::corpus;
use crate::cutting::{
    incidence_cuts, is_cutting_set, roundtrip_with_cap, CutOptions, CutReport, CuttingSet, DedupMode,
};
use crate::error::{Error, Result};
use crate::graph_type::classify_graph;
use crate::matrix::{encode, heuristic, solve, MatrixInstance};
use crate::path_space::{DEFAULT_PATH_CAP, PATH_CAP_ENV};
use crate::poset::{incidence_presentation, Poset};
use crate::quiver::{Path, Quiver};
use crate::text::{
    emit_algebra, emit_dot, emit_poset, emit_trivext, parse_algebra, parse_document, Document,
};
use crate::trivext::{trivial_extension_with_cap, Rel2Diagnostic, TrivExtPresentation};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Dedup {
    None,
    Iso,
    IsoOp,
}

impl From<Dedup> for DedupMode {
    fn from(d: Dedup) -> Self {
        match d {
            Dedup::None => DedupMode::None,
            Dedup::Iso => DedupMode::Iso,
            Dedup::IsoOp => DedupMode::IsoOp,
        }
    }
}

#[derive(Clone, Debug, Parser)]
#[command(name = "phicut", version, about = "Incidence algebras, trivial extensions and cutting sets")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Maximum number of paths in a quiver before giving up. Defaults to
    /// $PHI_PATH_CAP, then 200000.
    #[arg(long, global = true)]
    pub path_cap: Option<usize>,
    /// Worker threads for the cutting-set search.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub workers: u16,
}

#[derive(Clone, Debug, Subcommand)]
pub enum Command {
    /// Incidence-algebra presentation of a poset.
    Poset { input: String },
    /// Structural predicates of a bound quiver algebra. With no flags, all of them.
    Check {
        input: String,
        #[arg(long)]
        schurian: bool,
        #[arg(long)]
        incidence: bool,
        #[arg(long)]
        hereditary: bool,
        #[arg(long)]
        gentle: bool,
        #[arg(long)]
        bypass: bool,
        #[arg(long)]
        classify: bool,
    },
    /// Presentation of the trivial extension of an algebra, or completion of a
    /// supplied presentation.
    Trivext { input: String },
    /// Cutting sets that define incidence algebras.
    Cuts {
        input: String,
        /// Also report hereditary quotients.
        #[arg(long)]
        include_hereditary: bool,
        #[arg(long, value_enum, default_value_t = Dedup::IsoOp)]
        dedup: Dedup,
        /// Extra reference algebra to match quotients against; repeatable.
        #[arg(long = "match", value_name = "FILE")]
        references: Vec<String>,
        /// Skip the bundled reference solutions.
        #[arg(long)]
        no_bundled_refs: bool,
        /// Check T(cut) against the input for every reported set.
        #[arg(long)]
        roundtrip: bool,
    },
    /// Whether the trivial extension of each quotient recovers the input.
    Roundtrip {
        input: String,
        /// Arrow names of one cutting set, comma separated. Defaults to every
        /// incidence-defining set.
        #[arg(long, value_delimiter = ',')]
        sigma: Vec<String>,
    },
    /// Arrow sets that meet every type-2 relation and cut each cycle once.
    MatrixSolve {
        input: String,
        /// Also replay the original program's search and compare.
        #[arg(long)]
        heuristic: bool,
    },
    /// The opposite of an algebra, presentation or poset.
    Oppose { input: String },
    /// Graphviz text for the quiver, with an optional arrow set dashed.
    Dot {
        input: String,
        #[arg(long, value_delimiter = ',')]
        highlight: Vec<String>,
    },
}

/// Exit status and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (program name first) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(cfg) => run(&cfg),
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            }
        }
    }
}

pub fn run(cfg: &RunConfig) -> Outcome {
    let mut warnings = String::new();
    match dispatch(cfg, &mut warnings) {
        Ok(stdout) => Outcome { code: 0, stdout, stderr: warnings },
        Err(e) => {
            let _ = writeln!(warnings, "error: {e}");
            Outcome { code: e.exit_code(), stdout: String::new(), stderr: warnings }
        }
    }
}

fn path_cap(cfg: &RunConfig) -> Result<usize> {
    if let Some(c) = cfg.path_cap {
        return Ok(c);
    }
    match std::env::var(PATH_CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Invalid { what: "environment", message: format!("{PATH_CAP_ENV}={v} is not a count") }),
        Err(_) => Ok(DEFAULT_PATH_CAP),
    }
}

/// Reads a file, falling back to the bundled corpus.
pub fn load(input: &str) -> Result<String> {
    match std::fs::read_to_string(input) {
        Ok(s) => Ok(s),
        Err(e) => match corpus::get(input) {
            Some(entry) => Ok(entry.text.to_string()),
            None => Err(Error::Invalid { what: "input", message: format!("{input}: {e}") }),
        },
    }
}

fn load_document(input: &str) -> Result<Document> {
    parse_document(&load(input)?)
}

fn render(cfg: &RunConfig, command: &str, mut body: Value, text: String) -> String {
    match cfg.format {
        Format::Text => text,
        Format::Json => {
            let obj = body.as_object_mut().expect("json object");
            obj.insert("schema".into(), json!(SCHEMA));
            obj.insert("command".into(), json!(command));
            let mut s = serde_json::to_string_pretty(&body).expect("serializable");
            s.push('\n');
            s
        }
    }
}

fn dispatch(cfg: &RunConfig, warnings: &mut String) -> Result<String> {
    let cap = path_cap(cfg)?;
    match &cfg.command {
        Command::Poset { input } => {
            let p = match load_document(input)? {
                Document::Poset(p) => p,
                _ => return Err(wrong_kind(input, "a poset")),
            };
            let a = incidence_presentation(&p);
            Ok(render(cfg, "poset", json!({ "algebra": algebra_json(&a) }), emit_algebra(&a)))
        }
        Command::Check { input, schurian, incidence, hereditary, gentle, bypass, classify } => {
            // Incidence is always reported; its flag only suppresses "all".
            let a = algebra_input(input)?;
            let all = !(*schurian || *incidence || *hereditary || *gentle || *bypass || *classify);
            check(cfg, &a, cap, all, [*schurian, *hereditary, *gentle, *bypass, *classify])
        }
        Command::Trivext { input } => {
            let t = presentation_input(input, cap, warnings)?;
            let mut text = String::new();
            for c in t.classes() {
                let q = t.origin().expect("classes come with an origin").quiver();
                let _ = writeln!(
                    text,
                    "# {} closes the maximal path {}",
                    c.added_arrow,
                    q.path_string(&c.representative)
                );
            }
            let _ = writeln!(
                text,
                "# {} cycles, {} type-1, {} type-2, {} type-3 relations",
                t.cycles().len(),
                t.rel1().len(),
                t.rel2().len(),
                t.rel3().len()
            );
            text.push_str(&emit_trivext(&t));
            Ok(render(cfg, "trivext", json!({ "presentation": presentation_json(&t) }), text))
        }
        Command::Cuts { input, include_hereditary, dedup, references, no_bundled_refs, roundtrip } => {
            let t = presentation_input(input, cap, warnings)?;
            let mut refs = if *no_bundled_refs { Vec::new() } else { corpus::solutions()? };
            for r in references {
                let a = parse_algebra(&load(r)?)?;
                refs.push((reference_name(r), a));
            }
            let opts = CutOptions {
                include_hereditary: *include_hereditary,
                dedup: (*dedup).into(),
                workers: cfg.workers as usize,
                path_cap: cap,
                roundtrip: *roundtrip,
            };
            let an = incidence_cuts(&t, &opts, &refs)?;
            let q = t.quiver();
            let non_hereditary = an.reports.iter().filter(|r| !r.flags.hereditary).count();
            let mut text = format!(
                "# cutting sets {}, incidence-defining {}, non-hereditary {}, classes {} (dedup {})\n",
                an.cutting_sets.len(),
                an.incidence_sets.len(),
                non_hereditary,
                an.class_count,
                opts.dedup
            );
            for r in &an.reports {
                text.push_str(&report_text(q, r));
            }
            for d in &an.divergences {
                let _ = writeln!(
                    text,
                    "# divergence {}: type-2 test {}, incidence {}",
                    d.sigma.display(q),
                    d.program_accepts,
                    d.incidence
                );
            }
            let body = json!({
                "cutting_set_count": an.cutting_sets.len(),
                "incidence_set_count": an.incidence_sets.len(),
                "non_hereditary_count": non_hereditary,
                "class_count": an.class_count,
                "dedup": opts.dedup.to_string(),
                "incidence_sets": an.incidence_sets.iter().map(|s| s.names(q)).collect::<Vec<_>>(),
                "reports": an.reports.iter().map(|r| report_json(q, r)).collect::<Vec<_>>(),
                "divergences": an.divergences.iter().map(|d| json!({
                    "sigma": d.sigma.names(q),
                    "type2_test": d.program_accepts,
                    "incidence": d.incidence,
                })).collect::<Vec<_>>(),
            });
            Ok(render(cfg, "cuts", body, text))
        }
        Command::Roundtrip { input, sigma } => {
            let t = presentation_input(input, cap, warnings)?;
            let q = t.quiver();
            let sets = if sigma.is_empty() {
                let opts = CutOptions {
                    include_hereditary: true,
                    dedup: DedupMode::None,
                    workers: cfg.workers as usize,
                    path_cap: cap,
                    roundtrip: false,
                };
                incidence_cuts(&t, &opts, &[])?.incidence_sets
            } else {
                let s = CuttingSet::from_names(q, sigma)?;
                if !is_cutting_set(&t, &s) {
                    return Err(Error::Invalid {
                        what: "cutting set",
                        message: format!("{} does not meet every elementary cycle exactly once", s.display(q)),
                    });
                }
                vec![s]
            };
            let mut text = String::new();
            let mut rows = Vec::new();
            for s in &sets {
                let rt = roundtrip_with_cap(&t, s, cap)?;
                let _ = writeln!(text, "{} {}", s.display(q), rt);
                rows.push(json!({ "sigma": s.names(q), "roundtrip": rt.to_string() }));
            }
            Ok(render(cfg, "roundtrip", json!({ "results": rows }), text))
        }
        Command::MatrixSolve { input, heuristic: emulate } => {
            let m = match load_document(input)? {
                Document::Matrix(m) => m,
                Document::TrivExt(t, d) => {
                    warn_rel2(&t, d.as_ref(), warnings);
                    encode(&t)?
                }
                Document::Algebra(a) => encode(&trivial_extension_with_cap(&a, cap)?)?,
                Document::Poset(_) => return Err(wrong_kind(input, "a matrix or presentation")),
            };
            matrix_solve(cfg, &m, *emulate)
        }
        Command::Oppose { input } => match load_document(input)? {
            Document::Algebra(a) => {
                let o = a.opposite();
                Ok(render(cfg, "oppose", json!({ "algebra": algebra_json(&o) }), emit_algebra(&o)))
            }
            Document::TrivExt(t, d) => {
                warn_rel2(&t, d.as_ref(), warnings);
                let o = t.opposite();
                Ok(render(cfg, "oppose", json!({ "presentation": presentation_json(&o) }), emit_trivext(&o)))
            }
            Document::Poset(p) => {
                let o = p.dual();
                Ok(render(cfg, "oppose", json!({ "poset": poset_json(&o) }), emit_poset(&o)))
            }
            Document::Matrix(_) => Err(Error::Unsupported("a matrix instance has no opposite".into())),
        },
        Command::Dot { input, highlight } => {
            let q = match load_document(input)? {
                Document::Algebra(a) => a.quiver().clone(),
                Document::TrivExt(t, _) => t.quiver().clone(),
                Document::Poset(p) => incidence_presentation(&p).quiver().clone(),
                Document::Matrix(_) => return Err(wrong_kind(input, "something with a quiver")),
            };
            let marked = CuttingSet::from_names(&q, highlight)?;
            let dot = emit_dot(&q, marked.arrows());
            Ok(render(cfg, "dot", json!({ "dot": dot }), dot))
        }
    }
}

fn wrong_kind(input: &str, wanted: &str) -> Error {
    Error::Invalid { what: "input", message: format!("{input} is not {wanted}") }
}

fn reference_name(path: &str) -> String {
    let file = path.rsplit('/').next().unwrap_or(path);
    file.strip_suffix(".txt").unwrap_or(file).to_string()
}

fn algebra_input(input: &str) -> Result<BoundAlgebra> {
    match load_document(input)? {
        Document::Algebra(a) => Ok(a),
        Document::Poset(p) => Ok(incidence_presentation(&p)),
        Document::TrivExt(..) => Err(Error::Unsupported(format!(
            "{input} is a trivial-extension presentation; its quiver has oriented cycles"
        ))),
        Document::Matrix(_) => Err(wrong_kind(input, "an algebra")),
    }
}

fn presentation_input(input: &str, cap: usize, warnings: &mut String) -> Result<TrivExtPresentation> {
    match load_document(input)? {
        Document::TrivExt(t, d) => {
            warn_rel2(&t, d.as_ref(), warnings);
            Ok(t)
        }
        Document::Algebra(a) => trivial_extension_with_cap(&a, cap),
        Document::Poset(p) => trivial_extension_with_cap(&incidence_presentation(&p), cap),
        Document::Matrix(_) => Err(wrong_kind(input, "an algebra or presentation")),
    }
}

fn warn_rel2(t: &TrivExtPresentation, d: Option<&Rel2Diagnostic>, warnings: &mut String) {
    let Some(d) = d.filter(|d| !d.is_clean()) else {
        return;
    };
    let q = t.quiver();
    for p in &d.unexpected {
        let _ = writeln!(warnings, "warning: supplied rel2 {} is not a minimal type-2 relation", q.path_string(p));
    }
    for p in &d.missing {
        let _ = writeln!(warnings, "warning: type-2 relation {} missing from the supplied rel2 lines", q.path_string(p));
    }
}

fn check(
    cfg: &RunConfig,
    a: &BoundAlgebra,
    cap: usize,
    all: bool,
    [schurian, hereditary, gentle, bypass, classify]: [bool; 5],
) -> Result<String> {
    let q = a.quiver();
    let ps = a.path_space_with_cap(cap)?;
    let mut text = String::new();
    let mut body = serde_json::Map::new();
    let mut flag = |name: &str, v: bool, text: &mut String| {
        let _ = writeln!(text, "{name}: {v}");
        body.insert(name.into(), json!(v));
    };
    if all || schurian {
        flag("schurian", ps.is_schurian(), &mut text);
    }
    // Incidence is the headline predicate and always reported.
    flag("incidence", ps.is_incidence(), &mut text);
    if all || hereditary {
        flag("hereditary", ps.is_hereditary(), &mut text);
    }
    if all || gentle {
        flag("gentle", a.is_gentle(), &mut text);
    }
    if all {
        flag("path_equal", ps.is_path_equal(), &mut text);
        flag("connected", q.is_connected(), &mut text);
    }
    if all || bypass {
        let bs = q.bypasses()?;
        let _ = writeln!(text, "bypasses: {}", bs.len());
        let mut rows = Vec::new();
        for (arrow, p) in &bs {
            let _ = writeln!(text, "  {} ~ {}", q.arrow_name(*arrow), q.path_string(p));
            rows.push(json!({ "arrow": q.arrow_name(*arrow), "path": q.path_string(p) }));
        }
        body.insert("bypasses".into(), json!(rows));
    }
    if all || classify {
        let g = classify_graph(q);
        let _ = writeln!(text, "graph_type: {g}");
        body.insert("graph_type".into(), json!(g.to_string()));
    }
    Ok(render(cfg, "check", Value::Object(body), text))
}

fn matrix_solve(cfg: &RunConfig, m: &MatrixInstance, emulate: bool) -> Result<String> {
    let sols = solve(m);
    let mut text = String::new();
    for s in &sols {
        let _ = writeln!(text, "{}", m.describe(s));
    }
    let mut body = json!({
        "arrows": m.labels(),
        "solutions": sols.iter().map(|s| s.iter().map(|&i| m.labels()[i].clone()).collect::<Vec<_>>()).collect::<Vec<_>>(),
    });
    if emulate {
        let run = heuristic(m);
        let found: BTreeSet<BTreeSet<usize>> = run.answer_sets().into_iter().collect();
        let exact: BTreeSet<BTreeSet<usize>> = sols.iter().cloned().collect();
        let _ = writeln!(text, "# heuristic replay (not authoritative)");
        for a in &run.answers {
            let names: Vec<&str> = a.iter().map(|&i| m.labels()[i].as_str()).collect();
            let _ = writeln!(text, "# answer {}", names.join(" "));
        }
        for msg in &run.messages {
            let _ = writeln!(text, "# message {msg}");
        }
        if let Some(abort) = &run.aborted {
            let _ = writeln!(text, "# aborted: {abort}");
        }
        let missed: Vec<String> = exact.difference(&found).map(|s| m.describe(s)).collect();
        let spurious: Vec<String> = found.difference(&exact).map(|s| m.describe(s)).collect();
        let _ = writeln!(text, "# heuristic missed {}, spurious {}", missed.len(), spurious.len());
        body.as_object_mut().expect("object").insert(
            "heuristic".into(),
            json!({
                "answers": run.answers.iter().map(|a| a.iter().map(|&i| m.labels()[i].clone()).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "messages": run.messages,
                "aborted": run.aborted,
                "missed": missed,
                "spurious": spurious,
            }),
        );
    }
    Ok(render(cfg, "matrix-solve", body, text))
}

fn path_list(q: &Quiver, ps: &[Path]) -> Vec<String> {
    ps.iter().map(|p| q.path_string(p)).collect()
}

fn quiver_json(q: &Quiver) -> Value {
    json!({
        "vertices": q.vertex_names(),
        "arrows": q.arrows().iter().map(|a| json!({
            "name": a.name,
            "source": q.vertex_name(a.source),
            "target": q.vertex_name(a.target),
        })).collect::<Vec<_>>(),
    })
}

fn algebra_json(a: &BoundAlgebra) -> Value {
    let q = a.quiver();
    json!({
        "quiver": quiver_json(q),
        "zero": path_list(q, a.zero_paths()),
        "commute": a.commutations().iter().map(|(x, y)| [q.path_string(x), q.path_string(y)]).collect::<Vec<_>>(),
        "text": emit_algebra(a),
    })
}

fn poset_json(p: &Poset) -> Value {
    json!({
        "elements": p.elements(),
        "covers": p.covers(),
        "text": emit_poset(p),
    })
}

fn presentation_json(t: &TrivExtPresentation) -> Value {
    let q = t.quiver();
    json!({
        "quiver": quiver_json(q),
        "cycles": t.cycles().iter().map(|c| c.word().iter().map(|&a| q.arrow_name(a)).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "rel1": path_list(q, t.rel1()),
        "rel2": path_list(q, t.rel2()),
        "rel3": t.rel3().iter().map(|(x, y)| [q.path_string(x), q.path_string(y)]).collect::<Vec<_>>(),
        "added": t.classes().iter().map(|c| {
            let qa = t.origin().expect("classes come with an origin").quiver();
            json!({
                "arrow": c.added_arrow,
                "representative": qa.path_string(&c.representative),
                "members": path_list(qa, &c.members),
            })
        }).collect::<Vec<_>>(),
        "text": emit_trivext(t),
    })
}

fn report_text(q: &Quiver, r: &CutReport) -> String {
    let f = &r.flags;
    let mut s = format!(
        "{} class={} {} gentle={} connected={} graph={}",
        r.sigma.display(q),
        r.iso_class,
        if f.hereditary { "hereditary" } else { "non-hereditary" },
        f.gentle,
        f.connected,
        r.graph_type
    );
    if let Some(m) = &r.matches {
        let _ = write!(s, " matches={m}");
    }
    if let Some(rt) = r.roundtrip {
        let _ = write!(s, " roundtrip={rt}");
    }
    s.push('\n');
    for line in emit_algebra(&r.quotient).lines() {
        if line.starts_with("zero") || line.starts_with("commute") {
            let _ = writeln!(s, "  {line}");
        }
    }
    s
}

fn report_json(q: &Quiver, r: &CutReport) -> Value {
    json!({
        "sigma": r.sigma.names(q),
        "quotient": emit_algebra(&r.quotient),
        "flags": {
            "incidence": r.flags.incidence,
            "hereditary": r.flags.hereditary,
            "gentle": r.flags.gentle,
            "schurian": r.flags.schurian,
            "connected": r.flags.connected,
        },
        "graph_type": r.graph_type.to_string(),
        "iso_class": r.iso_class,
        "matches": r.matches,
        "roundtrip": r.roundtrip.map(|x| x.to_string()),
    })
}
