//! Command-line front end: argument parsing, dispatch and JSON reports.

pub mod formats;
pub mod report;

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use pointlike_core::enumerate::{enumerate_semigroups, Dedup, MAX_ENUMERATION_ORDER};
use pointlike_core::laws::{find_suite, suites, SuiteReport};
use pointlike_core::moduli::{eval_modulus, functor_value, monad_completion, points_member};
use pointlike_core::pointlikes::{certify_exact, oracle_pointlikes, reversal_transfer_check};
use pointlike_core::pseudovariety::{pv_member, Pseudovariety};
use pointlike_core::semigroup::{GreenRelation, SubsemigroupKind};
use pointlike_core::{Error as CoreError, Modulus, Semigroup};
use serde_json::{json, Value};

use crate::formats::{load_semigroup, parse_rel, read_file, FormatError};

/// Environment variable lowering the enumeration cap.
pub const MAX_ORDER_ENV: &str = "POINTLIKE_LAB_MAX_ORDER";

#[derive(Debug, Parser)]
#[command(name = "pointlike-lab", version, about = "Pointlike sets of finite semigroups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a table file is a semigroup.
    Validate { file: PathBuf },
    /// Green classes, idempotents, subgroups and pseudovariety memberships.
    Info { file: PathBuf },
    /// Nerve of a relational morphism.
    Nerve {
        #[arg(long)]
        dom: Option<PathBuf>,
        #[arg(long)]
        cod: Option<PathBuf>,
        #[arg(long)]
        graph: PathBuf,
    },
    /// Evaluate a modulus and its complex functor.
    Modulus { expr: Modulus, file: PathBuf },
    /// Monad completion of a modulus, with the level trace.
    Complete { expr: Modulus, file: PathBuf },
    /// Whether the semigroup is a point of the modulus.
    Points { expr: Modulus, file: PathBuf },
    /// Upper bound on the pointlike complex from small codomains.
    Oracle {
        #[arg(long)]
        pv: Pseudovariety,
        #[arg(long)]
        bound: usize,
        file: PathBuf,
    },
    /// Squeeze the pointlike complex between a modulus and the oracle.
    Certify {
        #[arg(long)]
        pv: Pseudovariety,
        #[arg(long)]
        modulus: Modulus,
        #[arg(long)]
        bound: usize,
        file: PathBuf,
    },
    /// Count or list semigroups of one order.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = DedupArg::Iso)]
        dedup: DedupArg,
        #[arg(long)]
        filter: Option<Pseudovariety>,
        /// Include every table in the report.
        #[arg(long)]
        list: bool,
    },
    /// Run the property suites.
    CheckLaws {
        #[arg(long, default_value_t = 3)]
        order: usize,
        /// Comma-separated suite names; all suites when absent.
        #[arg(long)]
        suite: Option<String>,
    },
    /// Compare pointlikes of V^rev at S with reversed pointlikes of V at S^rev.
    ReverseCheck {
        #[arg(long)]
        pv: Pseudovariety,
        #[arg(long)]
        bound: usize,
        file: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DedupArg {
    Iso,
    IsoAnti,
    Raw,
}

impl DedupArg {
    fn mode(self) -> Dedup {
        match self {
            DedupArg::Iso => Dedup::UpToIso,
            DedupArg::IsoAnti => Dedup::UpToIsoAntiIso,
            DedupArg::Raw => Dedup::Raw,
        }
    }

    fn name(self) -> &'static str {
        match self {
            DedupArg::Iso => "iso",
            DedupArg::IsoAnti => "iso-anti",
            DedupArg::Raw => "raw",
        }
    }
}

/// What the process should print and return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

type Res<T> = Result<T, FormatError>;

struct Done {
    result: Value,
    summary: String,
    ok: bool,
}

fn done(result: Value, summary: impl Into<String>) -> Res<Done> {
    Ok(Done {
        result,
        summary: summary.into(),
        ok: true,
    })
}

fn path_str(p: &Path) -> String {
    p.display().to_string()
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Info { .. } => "info",
            Command::Nerve { .. } => "nerve",
            Command::Modulus { .. } => "modulus",
            Command::Complete { .. } => "complete",
            Command::Points { .. } => "points",
            Command::Oracle { .. } => "oracle",
            Command::Certify { .. } => "certify",
            Command::Enumerate { .. } => "enumerate",
            Command::CheckLaws { .. } => "check-laws",
            Command::ReverseCheck { .. } => "reverse-check",
        }
    }

    fn inputs(&self) -> Value {
        match self {
            Command::Validate { file } | Command::Info { file } => json!({ "file": path_str(file) }),
            Command::Nerve { dom, cod, graph } => json!({
                "dom": dom.as_deref().map(path_str),
                "cod": cod.as_deref().map(path_str),
                "graph": path_str(graph),
            }),
            Command::Modulus { expr, file }
            | Command::Complete { expr, file }
            | Command::Points { expr, file } => {
                json!({ "expr": expr.to_string(), "file": path_str(file) })
            }
            Command::Oracle { pv, bound, file } | Command::ReverseCheck { pv, bound, file } => {
                json!({ "pv": pv.to_string(), "bound": bound, "file": path_str(file) })
            }
            Command::Certify {
                pv,
                modulus,
                bound,
                file,
            } => json!({
                "pv": pv.to_string(),
                "modulus": modulus.to_string(),
                "bound": bound,
                "file": path_str(file),
            }),
            Command::Enumerate {
                order,
                dedup,
                filter,
                list,
            } => json!({
                "order": order,
                "dedup": dedup.name(),
                "filter": filter.map(|p| p.to_string()),
                "list": list,
            }),
            Command::CheckLaws { order, suite } => json!({ "order": order, "suite": suite }),
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli.command),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            }
        }
    }
}

pub fn execute(cmd: &Command) -> Outcome {
    let inputs = cmd.inputs();
    match dispatch(cmd) {
        Ok(d) => Outcome {
            code: if d.ok { 0 } else { 1 },
            stdout: render(&report::envelope(cmd.name(), inputs, d.result)),
            stderr: format!("{}\n", d.summary),
        },
        Err(e) => Outcome {
            code: 1,
            stdout: render(&report::error_envelope(cmd.name(), inputs, &e)),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn dispatch(cmd: &Command) -> Res<Done> {
    match cmd {
        Command::Validate { file } => {
            let s = load_semigroup(file)?;
            done(
                json!({ "valid": true, "order": s.order() }),
                format!("valid semigroup of order {}", s.order()),
            )
        }
        Command::Info { file } => info(&load_semigroup(file)?),
        Command::Nerve { dom, cod, graph } => nerve(dom.as_deref(), cod.as_deref(), graph),
        Command::Modulus { expr, file } => {
            let s = load_semigroup(file)?;
            let sets = eval_modulus(expr, &s)?;
            let value = functor_value(expr, &s)?;
            done(
                json!({
                    "sets": report::family(&sets),
                    "functor_value": report::complex(&value),
                    "approximate": expr.is_approximate(),
                }),
                format!("{expr}: {} sets, functor value has {} faces", sets.len(), value.face_count()),
            )
        }
        Command::Complete { expr, file } => {
            let s = load_semigroup(file)?;
            let c = monad_completion(expr, &s)?;
            done(
                json!({
                    "label": "lower",
                    "value": report::complex(&c.value),
                    "levels": c.levels,
                    "trace": c.trace,
                    "approximate": expr.is_approximate(),
                }),
                format!("completion of {expr} stable after {} levels", c.levels),
            )
        }
        Command::Points { expr, file } => {
            let s = load_semigroup(file)?;
            let member = points_member(expr, &s)?;
            let wired = expr.wired_points();
            done(
                json!({
                    "member": member,
                    "wired_pv": wired.map(|p| p.to_string()),
                    "wired_member": wired.map(|p| pv_member(p, &s)),
                }),
                format!("point of {expr}: {member}"),
            )
        }
        Command::Oracle { pv, bound, file } => {
            let s = load_semigroup(file)?;
            check_bound(*bound)?;
            let r = oracle_pointlikes(&s, *pv, *bound)?;
            done(
                json!({
                    "label": "upper",
                    "value": report::complex(&r.value),
                    "bound": r.bound,
                    "codomains_used": r.codomains_used,
                    "graphs_intersected": r.graphs_intersected,
                    "witness": r.witness.as_ref().map(|w| json!({
                        "cod": w.cod().rows(),
                        "pairs": w.pairs(),
                    })),
                }),
                format!(
                    "upper bound for {pv} with codomains up to order {bound}: {} faces",
                    r.value.face_count()
                ),
            )
        }
        Command::Certify {
            pv,
            modulus,
            bound,
            file,
        } => {
            let s = load_semigroup(file)?;
            check_bound(*bound)?;
            let c = certify_exact(&s, *pv, modulus, *bound)?;
            done(
                json!({
                    "exact": c.exact,
                    "label": if c.exact { "exact" } else { "bounds" },
                    "lower": report::complex(&c.lower),
                    "upper": report::complex(&c.upper.value),
                    "value": c.exact.then(|| report::complex(&c.lower)),
                    "bound": bound,
                }),
                if c.exact {
                    format!("exact: {} faces", c.lower.face_count())
                } else {
                    format!(
                        "not exact: lower {} faces, upper {} faces",
                        c.lower.face_count(),
                        c.upper.value.face_count()
                    )
                },
            )
        }
        Command::Enumerate {
            order,
            dedup,
            filter,
            list,
        } => {
            check_bound(*order)?;
            let mut all = enumerate_semigroups(*order, dedup.mode())?;
            if let Some(pv) = filter {
                all.retain(|s| pv_member(*pv, s));
            }
            let mut result = json!({ "count": all.len() });
            if *list {
                result["tables"] = json!(all.iter().map(Semigroup::rows).collect::<Vec<_>>());
            }
            done(result, format!("{} semigroups of order {order}", all.len()))
        }
        Command::CheckLaws { order, suite } => check_laws(*order, suite.as_deref()),
        Command::ReverseCheck { pv, bound, file } => {
            let s = load_semigroup(file)?;
            check_bound(*bound)?;
            let equal = reversal_transfer_check(&s, *pv, *bound)?;
            done(
                json!({
                    "equal": equal,
                    "reversed_pv": pv.reversed().to_string(),
                    "statement": if equal {
                        format!("no counterexample with codomains up to order {bound}")
                    } else {
                        format!("oracles differ with codomains up to order {bound}")
                    },
                }),
                format!("reversal check for {pv}: {equal}"),
            )
        }
    }
}

/// The enumeration cap, lowered by the environment but never above the
/// library limit.
pub fn enumeration_cap() -> usize {
    std::env::var(MAX_ORDER_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map_or(MAX_ENUMERATION_ORDER, |v| v.min(MAX_ENUMERATION_ORDER))
}

fn check_bound(n: usize) -> Res<()> {
    let cap = enumeration_cap();
    if n > cap {
        return Err(CoreError::SizeCap {
            what: "enumeration order",
            got: n,
            cap,
        }
        .into());
    }
    Ok(())
}

fn info(s: &Semigroup) -> Res<Done> {
    let green = |r| report::family(&s.green_partition(r));
    let mut pvs = serde_json::Map::new();
    for pv in Pseudovariety::SIMPLE {
        pvs.insert(pv.to_string(), json!(pv_member(pv, s)));
    }
    let result = json!({
        "order": s.order(),
        "labels": s.labels(),
        "identity": s.identity(),
        "idempotents": report::subset(s.idempotents()),
        "regular": report::subset(s.regular_elements()),
        "group_elements": report::subset(s.group_elements()),
        "green": {
            "R": green(GreenRelation::R),
            "L": green(GreenRelation::L),
            "J": green(GreenRelation::J),
            "H": green(GreenRelation::H),
        },
        "subgroups": report::family(&s.special_subsemigroups(SubsemigroupKind::Subgroups)),
        "local_monoids": report::family(&s.special_subsemigroups(SubsemigroupKind::LocalMonoids)),
        "pseudovarieties": pvs,
    });
    done(result, format!("semigroup of order {}", s.order()))
}

fn nerve(dom: Option<&Path>, cod: Option<&Path>, graph: &Path) -> Res<Done> {
    let rel = parse_rel(&read_file(graph)?)?;
    let base = graph.parent().unwrap_or(Path::new("."));
    let pick = |flag: Option<&Path>, directive: &Option<PathBuf>, what: &str| -> Res<PathBuf> {
        match (flag, directive) {
            (Some(p), _) => Ok(p.to_path_buf()),
            (None, Some(p)) => Ok(base.join(p)),
            (None, None) => Err(FormatError::Parse {
                line: 0,
                reason: format!("no {what} semigroup: pass --{what} or add a `{what}` line"),
            }),
        }
    };
    let dom = load_semigroup(&pick(dom, &rel.dom, "dom")?)?;
    let cod = load_semigroup(&pick(cod, &rel.cod, "cod")?)?;
    let rho = rel.build(dom, cod)?;
    let n = rho.nerve()?;
    done(
        json!({
            "nerve": report::complex(&n),
            "division": rho.is_division(),
            "graph_size": rho.graph_size(),
            "image": report::subset(rho.image()),
        }),
        format!("nerve has {} faces; division: {}", n.face_count(), rho.is_division()),
    )
}

fn suite_json(r: &SuiteReport) -> Value {
    json!({
        "name": r.name,
        "order": r.order,
        "cases": r.cases,
        "failures": r.failures,
        "passed": r.passed(),
        "examples": r.examples,
        "notes": r.notes,
    })
}

fn check_laws(order: usize, names: Option<&str>) -> Res<Done> {
    check_bound(order)?;
    let chosen: Vec<_> = match names {
        None => suites().iter().collect(),
        Some(list) => list
            .split(',')
            .map(|n| {
                find_suite(n.trim()).ok_or_else(|| FormatError::Parse {
                    line: 0,
                    reason: format!("unknown suite `{n}`"),
                })
            })
            .collect::<Res<_>>()?,
    };
    let mut summary = String::new();
    let mut reports = Vec::new();
    for suite in chosen {
        let t = Instant::now();
        let r = suite.run(order)?;
        summary.push_str(&format!(
            "{:<22} order {} {:>9} cases  {}  {:.1}s\n",
            r.name,
            r.order,
            r.cases,
            if r.passed() { "ok" } else { "FAILED" },
            t.elapsed().as_secs_f64()
        ));
        reports.push(r);
    }
    let passed = reports.iter().all(SuiteReport::passed);
    summary.push_str(if passed { "all suites passed" } else { "some suites failed" });
    Ok(Done {
        result: json!({
            "passed": passed,
            "suites": reports.iter().map(suite_json).collect::<Vec<_>>(),
        }),
        summary,
        ok: passed,
    })
}
