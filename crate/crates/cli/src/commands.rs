use std::collections::BTreeMap;
use std::fmt::Write as _;

use heckeq::checks::CheckOutcome;
use heckeq::hecke::{check_generic, MAX_ORACLE_N};
use heckeq::invariant::{eigenvalue_c, eigenvalue_ctilde, reconstruct_diagram};
use heckeq::registry::{character_methods, oracle_checks, trace_kinds};
use heckeq::suq::{
    casimir_hat_eigenvalue, correspondence_check, gz_enumerate, reconstruct_from_casimir,
    verify_ef_commutator, SuqIrrep,
};
use heckeq::symgroup::{CharacterMethod, CharacterTable};
use heckeq::traces::TraceRequest;
use heckeq::{partitions, Error, LaurentPoly, Rational, YoungDiagram};
use serde_json::{json, Map, Value};

use crate::args::*;

/// Largest n for projector-based characters without `--unsafe-large-n`.
pub const PROJECTOR_LIMIT: usize = 7;
/// Largest n for `verify` without `--unsafe-large-n`.
pub const VERIFY_LIMIT: usize = 6;

pub struct Report {
    pub command: &'static str,
    pub parameters: Map<String, Value>,
    pub result: Value,
    pub table: String,
    /// False when the command ran but found a failed property.
    pub ok: bool,
}

impl Report {
    fn new(command: &'static str, result: Value, table: String) -> Self {
        Self {
            command,
            parameters: Map::new(),
            result,
            table,
            ok: true,
        }
    }

    fn param(mut self, key: &str, v: impl Into<Value>) -> Self {
        self.parameters.insert(key.to_string(), v.into());
        self
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Algebra(Error),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Algebra(Error::Parse(_) | Error::InvalidDiagram(_)) => "parse",
            CliError::Algebra(_) => "computation",
        }
    }
}

/// A registry lookup failure is a bad flag value, not a failed computation.
fn unknown_name(e: Error) -> CliError {
    match e {
        Error::InvalidArgument(m) => CliError::Usage(m),
        other => CliError::Algebra(other),
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Algebra(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Algebra(e)
    }
}

type Res<T> = std::result::Result<T, CliError>;

pub struct Ctx {
    pub q0: Rational,
    pub unsafe_large_n: bool,
}

fn diagram(s: &str, n: Option<usize>) -> Res<YoungDiagram> {
    let g: YoungDiagram = s.parse()?;
    if let Some(n) = n {
        if g.n() != n {
            return Err(CliError::Usage(format!(
                "diagram {g} has {} boxes but --n is {n}",
                g.n()
            )));
        }
    }
    Ok(g)
}

fn poly(s: &str) -> Res<LaurentPoly> {
    Ok(s.parse()?)
}

pub fn eigenvalue(a: &EigenvalueArgs) -> Res<Report> {
    let g = diagram(&a.diagram, a.n)?;
    let c = eigenvalue_c(&g);
    let ct = eigenvalue_ctilde(&g);
    let table = format!("diagram   {g}\nLambda_C  {c}\nLambda_C~ {ct}\n");
    Ok(Report::new(
        "eigenvalue",
        json!({ "diagram": g.to_string(), "eigenvalue": c.to_string(), "ctilde": ct.to_string() }),
        table,
    )
    .param("n", g.n())
    .param("diagram", g.to_string()))
}

pub fn reconstruct(a: &ReconstructArgs) -> Res<Report> {
    let p = poly(&a.poly)?;
    let g = reconstruct_diagram(&p, a.n)?;
    Ok(Report::new(
        "reconstruct",
        json!({ "diagram": g.to_string() }),
        format!("{g}\n"),
    )
    .param("n", a.n)
    .param("poly", p.to_string()))
}

fn render_characters(t: &CharacterTable) -> String {
    let cols: Vec<String> = t.columns.iter().map(|c| c.to_string()).collect();
    let rows: Vec<String> = t.rows.iter().map(|g| format!("[{g}]")).collect();
    let w0 = rows.iter().map(String::len).max().unwrap_or(0);
    let widths: Vec<usize> = cols
        .iter()
        .enumerate()
        .map(|(j, c)| {
            t.values
                .iter()
                .map(|r| r[j].to_string().len())
                .chain([c.len()])
                .max()
                .unwrap_or(1)
        })
        .collect();
    let mut out = format!("{:w0$}", "");
    for (c, w) in cols.iter().zip(&widths) {
        let _ = write!(out, "  {c:>w$}");
    }
    out.push('\n');
    for (r, vals) in rows.iter().zip(&t.values) {
        let _ = write!(out, "{r:w0$}");
        for (v, w) in vals.iter().zip(&widths) {
            let _ = write!(out, "  {v:>w$}");
        }
        out.push('\n');
    }
    out
}

fn table_json(t: &CharacterTable) -> Value {
    serde_json::to_value(t.to_map()).expect("character table serializes")
}

pub fn characters(ctx: &Ctx, a: &CharactersArgs) -> Res<Report> {
    let reg = character_methods();
    let run = |name: &str| -> Res<CharacterTable> {
        let m: &dyn CharacterMethod = reg.get(name).map_err(unknown_name)?;
        let limit = if name == "projector" && !ctx.unsafe_large_n {
            PROJECTOR_LIMIT
        } else {
            m.max_n()
        };
        if a.n == 0 || a.n > limit {
            return Err(CliError::Usage(format!(
                "method {name} is limited to 1 <= n <= {limit}{}",
                if limit < m.max_n() { " (use --unsafe-large-n to raise it)" } else { "" }
            )));
        }
        Ok(m.table(a.n)?)
    };
    let report = match a.method {
        MethodChoice::Projector | MethodChoice::Mn => {
            let name = if a.method == MethodChoice::Mn { "mn" } else { "projector" };
            let t = run(name)?;
            Report::new("characters", json!({ name: table_json(&t) }), render_characters(&t))
                .param("method", name)
        }
        MethodChoice::Both => {
            let p = run("projector")?;
            let m = run("mn")?;
            let equal = p == m;
            let table = format!(
                "{}\nprojector and mn tables {}\n",
                render_characters(&p),
                if equal { "agree" } else { "DIFFER" }
            );
            let mut r = Report::new(
                "characters",
                json!({ "projector": table_json(&p), "mn": table_json(&m), "equal": equal }),
                table,
            )
            .param("method", "both");
            r.ok = equal;
            r
        }
    };
    Ok(report.param("n", a.n))
}

pub fn traces(a: &TracesArgs) -> Res<Report> {
    let reg = trace_kinds();
    let kind = reg.get(&a.kind).map_err(unknown_name)?;
    let diagrams = match (&a.diagram, a.n) {
        (Some(d), n) => vec![diagram(d, n)?],
        (None, Some(n)) if n >= 1 => partitions(n),
        _ => return Err(CliError::Usage("traces needs --diagram or --n".into())),
    };
    let req = TraceRequest {
        alphas: a.alphas.clone(),
    };
    let mut result: BTreeMap<String, BTreeMap<String, String>> = BTreeMap::new();
    let mut table = String::new();
    for g in &diagrams {
        let t = kind.compute(g, &req)?;
        let _ = writeln!(table, "[{g}]");
        let w = t.keys().map(|l| l.len() + 4).max().unwrap_or(0);
        for (label, p) in &t {
            let _ = writeln!(table, "  {:w$} = {p}", format!("tr({label})"));
        }
        result.insert(
            g.to_string(),
            t.into_iter().map(|(k, v)| (k, v.to_string())).collect(),
        );
    }
    let mut r = Report::new(
        "traces",
        serde_json::to_value(result).expect("trace map serializes"),
        table,
    )
    .param("kind", kind.name());
    if let Some(al) = &a.alphas {
        r = r.param("alphas", al.clone());
    }
    if let Some(n) = a.n.or(diagrams.first().map(YoungDiagram::n)) {
        r = r.param("n", n);
    }
    Ok(r)
}

pub fn verify(ctx: &Ctx, a: &VerifyArgs) -> Res<Report> {
    check_generic(&ctx.q0)?;
    let limit = if ctx.unsafe_large_n { MAX_ORACLE_N } else { VERIFY_LIMIT };
    if a.n == 0 || a.n > limit {
        return Err(CliError::Usage(format!(
            "verify is limited to 1 <= n <= {limit}{}",
            if ctx.unsafe_large_n { "" } else { " (use --unsafe-large-n to raise it)" }
        )));
    }
    let reg = oracle_checks();
    let selected: Vec<_> = if a.checks.is_empty() {
        reg.iter().collect()
    } else {
        a.checks
            .iter()
            .map(|c| reg.get(c).map_err(unknown_name))
            .collect::<Res<_>>()?
    };
    let outcomes: Vec<CheckOutcome> = selected.iter().map(|c| c.run(a.n, &ctx.q0)).collect();
    let passed = outcomes.iter().all(|o| o.passed);
    let w = outcomes.iter().map(|o| o.name.len()).max().unwrap_or(0);
    let mut table = String::new();
    for o in &outcomes {
        let mark = if o.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(table, "{mark}  {:w$}  {}", o.name, o.detail);
    }
    let mut r = Report::new(
        "verify",
        json!({ "checks": outcomes, "passed": passed }),
        table,
    )
    .param("n", a.n)
    .param("q0", ctx.q0.to_string());
    r.ok = passed;
    Ok(r)
}

fn irrep(a: &IrrepArgs) -> Res<SuqIrrep> {
    match (&a.irrep, a.group, &a.diagram) {
        (Some(s), _, _) => Ok(s.parse()?),
        (None, Some(n), Some(d)) => Ok(SuqIrrep::from_diagram(&d.parse()?, n)?),
        _ => Err(CliError::Usage(
            "give --irrep N:l1,l2,... or both --group and --diagram".into(),
        )),
    }
}

pub fn suq(ctx: &Ctx, a: &SuqArgs) -> Res<Report> {
    match &a.action {
        SuqAction::Casimir(ia) => {
            let r = irrep(ia)?;
            let c = casimir_hat_eigenvalue(&r);
            Ok(Report::new(
                "suq casimir",
                json!({ "irrep": r.to_string(), "casimir": c.to_string() }),
                format!("{r}  {c}\n"),
            )
            .param("irrep", r.to_string()))
        }
        SuqAction::Reconstruct { group, poly: p } => {
            let p = poly(p)?;
            let r = reconstruct_from_casimir(&p, *group)?;
            Ok(Report::new(
                "suq reconstruct",
                json!({ "irrep": r.to_string() }),
                format!("{r}\n"),
            )
            .param("group", *group)
            .param("poly", p.to_string()))
        }
        SuqAction::Check { max_n, max_group } => {
            let mut cases = Map::new();
            let mut table = String::new();
            let mut all = true;
            for n in 1..=*max_n {
                for g in partitions(n) {
                    for big_n in g.num_rows() + 1..=*max_group {
                        let ok = correspondence_check(&g, big_n)?;
                        all &= ok;
                        cases.insert(format!("{big_n}:{g}"), Value::Bool(ok));
                        if !ok {
                            let _ = writeln!(table, "FAIL  N={big_n} [{g}]");
                        }
                    }
                }
            }
            let _ = writeln!(
                table,
                "{} of {} cases {}",
                cases.values().filter(|v| v.as_bool() == Some(true)).count(),
                cases.len(),
                if all { "pass" } else { "pass; see failures above" }
            );
            let mut r = Report::new(
                "suq check",
                json!({ "cases": cases, "passed": all }),
                table,
            )
            .param("max_n", *max_n)
            .param("max_group", *max_group);
            r.ok = all;
            Ok(r)
        }
        SuqAction::Dimension(ia) => {
            let r = irrep(ia)?;
            let d = gz_enumerate(&r).len();
            Ok(Report::new(
                "suq dimension",
                json!({ "irrep": r.to_string(), "dimension": d }),
                format!("{r}  {d}\n"),
            )
            .param("irrep", r.to_string()))
        }
        SuqAction::Commutator(ia) => {
            let r = irrep(ia)?;
            let mut per_k = Map::new();
            let mut table = String::new();
            let mut all = true;
            for k in 1..r.group_rank() {
                let ok = verify_ef_commutator(&r, k, &ctx.q0)?;
                all &= ok;
                per_k.insert(k.to_string(), Value::Bool(ok));
                let _ = writeln!(table, "{}  k={k}", if ok { "PASS" } else { "FAIL" });
            }
            let mut rep = Report::new(
                "suq commutator",
                json!({ "irrep": r.to_string(), "k": per_k, "passed": all }),
                table,
            )
            .param("irrep", r.to_string())
            .param("q0", ctx.q0.to_string());
            rep.ok = all;
            Ok(rep)
        }
    }
}
