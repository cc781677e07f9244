//! Per-graph run reports, as a human table or a single line of JSON.

use std::fmt::Write as _;

use metdim_core::bounds::{bound_report, BetaEntry, BoundReport, Exact, GammaEntry};
use metdim_core::constructive::{
    classify_with, resolving_from_dominating, ConstructOptions, NormalizationTrace, Verdict,
};
use metdim_core::domination::domination_number;
use metdim_core::resolve::metric_dimension;
use metdim_core::{Budget, Error, Girth, Graph};
use serde::{Serialize, Serializer};

/// What a report computes beyond the basic invariants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Task {
    Invariants,
    Dimension,
    Domination,
    Construct,
    Bounds { exact: bool },
    Classify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    Ok,
    Timeout,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Timeout => 3,
            Status::Error => 4,
        }
    }
}

fn girth_json<S: Serializer>(g: &Girth, s: S) -> Result<S::Ok, S::Error> {
    match g {
        Girth::Finite(x) => s.serialize_u32(*x),
        Girth::Acyclic => s.serialize_str("acyclic"),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundJson {
    pub name: &'static str,
    pub condition: &'static str,
    pub applicable: bool,
    pub value: Option<i64>,
    pub real: Option<f64>,
}

impl From<&BetaEntry> for BoundJson {
    fn from(e: &BetaEntry) -> Self {
        Self {
            name: e.name(),
            condition: e.kind.condition(),
            applicable: e.applicable,
            value: e.value,
            real: e.real_value,
        }
    }
}

impl From<&GammaEntry> for BoundJson {
    fn from(e: &GammaEntry) -> Self {
        Self {
            name: e.name(),
            condition: e.kind.condition(),
            applicable: e.applicable,
            value: e.value,
            real: e.real_value,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsJson {
    /// Upper bounds on `beta`.
    pub beta_upper: Vec<BoundJson>,
    /// Lower bounds on `gamma`.
    pub gamma_lower: Vec<BoundJson>,
    pub tightest: Option<&'static str>,
}

impl From<&BoundReport> for BoundsJson {
    fn from(r: &BoundReport) -> Self {
        Self {
            beta_upper: r.beta_bounds.iter().map(BoundJson::from).collect(),
            gamma_lower: r.gamma_bounds.iter().map(BoundJson::from).collect(),
            tightest: r.tightest().map(|e| e.name()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SwapJson {
    pub removed: usize,
    pub inserted: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceJson {
    pub initial: Vec<usize>,
    pub swaps: Vec<SwapJson>,
    #[serde(rename = "final")]
    pub final_set: Vec<usize>,
}

impl From<&NormalizationTrace> for TraceJson {
    fn from(t: &NormalizationTrace) -> Self {
        Self {
            initial: t.initial.to_vec(),
            swaps: t
                .steps
                .iter()
                .map(|s| SwapJson { removed: s.removed, inserted: s.inserted, reason: s.reason.to_string() })
                .collect(),
            final_set: t.final_set.to_vec(),
        }
    }
}

/// Everything known about one graph after a run. Every field is always
/// serialized; fields a task did not compute are `null`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub source: String,
    pub n: usize,
    pub m: usize,
    pub diam: u32,
    #[serde(serialize_with = "girth_json")]
    pub girth: Girth,
    pub delta: usize,
    #[serde(rename = "Delta")]
    pub max_degree: usize,
    pub mu_max: Option<f64>,
    pub beta: Option<usize>,
    pub gamma: Option<usize>,
    pub basis: Option<Vec<usize>>,
    pub dominating_set: Option<Vec<usize>>,
    pub resolving_set: Option<Vec<usize>>,
    pub trace: Option<TraceJson>,
    pub bounds: Option<BoundsJson>,
    pub classification: Option<&'static str>,
    pub classification_params: Option<Vec<usize>>,
    pub status: Status,
    /// Best known upper bounds, filled in when an exact search timed out.
    pub beta_upper_bound: Option<usize>,
    pub gamma_upper_bound: Option<usize>,
    pub message: Option<String>,
}

impl RunReport {
    /// The invariants every report carries. Fails on disconnected input.
    pub fn invariants(source: impl Into<String>, g: &Graph) -> Result<Self, Error> {
        g.require_connected()?;
        Ok(Self {
            source: source.into(),
            n: g.order(),
            m: g.size(),
            diam: g.diameter()?,
            girth: g.girth(),
            delta: g.min_degree(),
            max_degree: g.max_degree(),
            mu_max: if g.order() >= 2 { Some(g.laplacian_max_eigenvalue()?) } else { None },
            beta: None,
            gamma: None,
            basis: None,
            dominating_set: None,
            resolving_set: None,
            trace: None,
            bounds: None,
            classification: None,
            classification_params: None,
            status: Status::Ok,
            beta_upper_bound: None,
            gamma_upper_bound: None,
            message: None,
        })
    }

    fn classify(&mut self, verdict: Verdict) {
        self.classification = Some(verdict.name());
        self.classification_params = Some(match verdict {
            Verdict::CompleteGraph(n) => vec![n],
            Verdict::CompleteBipartite(s, t) => vec![s, t],
            Verdict::StrictInequality => vec![],
        });
    }

    fn fail(&mut self, e: &Error) {
        self.status = Status::Error;
        self.message = Some(e.to_string());
    }

    fn timed_out(&mut self, e: &Error) {
        self.status = Status::Timeout;
        self.message = Some(e.to_string());
    }
}

/// Outcome of one step inside [`run`]: a value, or a report status already
/// recorded and nothing further to compute.
fn settle<T>(
    report: &mut RunReport,
    r: Result<T, Error>,
    on_timeout: impl FnOnce(&mut RunReport, usize),
) -> Result<Option<T>, Error> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(e @ Error::Timeout { upper_bound, .. }) => {
            report.timed_out(&e);
            on_timeout(report, upper_bound);
            Ok(None)
        }
        Err(e @ Error::Anomaly(_)) => {
            report.fail(&e);
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

/// Runs `task` on `g`. Timeouts and anomalies end up in the report status;
/// other errors (disconnected input and the like) are returned.
pub fn run(source: impl Into<String>, g: &Graph, task: Task, budget: Budget) -> Result<RunReport, Error> {
    let mut r = RunReport::invariants(source, g)?;
    let beta_timeout = |r: &mut RunReport, ub| r.beta_upper_bound = Some(ub);
    let gamma_timeout = |r: &mut RunReport, ub| r.gamma_upper_bound = Some(ub);
    match task {
        Task::Invariants => {}
        Task::Dimension => {
            if let Some(b) = settle(&mut r, metric_dimension(g, budget), beta_timeout)? {
                r.beta = Some(b.beta);
                r.basis = Some(b.basis.to_vec());
            }
        }
        Task::Domination => {
            if let Some(d) = settle(&mut r, domination_number(g, budget), gamma_timeout)? {
                r.gamma = Some(d.gamma);
                r.dominating_set = Some(d.dominating_set.to_vec());
            }
        }
        Task::Construct => {
            let opts = ConstructOptions { budget, ..ConstructOptions::default() };
            if let Some(c) = settle(&mut r, resolving_from_dominating(g, opts), gamma_timeout)? {
                r.gamma = Some(c.dominating.len());
                r.dominating_set = Some(c.dominating.to_vec());
                r.resolving_set = Some(c.resolving.to_vec());
                r.trace = Some(TraceJson::from(&c.trace));
            }
        }
        Task::Bounds { exact } => {
            if let Some(b) = settle(&mut r, bound_report(g, exact, budget), |_, _| {})? {
                for (exact, value, upper) in
                    [(b.beta, &mut r.beta, &mut r.beta_upper_bound), (b.gamma, &mut r.gamma, &mut r.gamma_upper_bound)]
                {
                    match exact {
                        Exact::Value(v) => *value = Some(v),
                        Exact::Timeout { upper_bound } => *upper = Some(upper_bound),
                        Exact::NotRequested => {}
                    }
                }
                if r.beta_upper_bound.is_some() || r.gamma_upper_bound.is_some() {
                    r.status = Status::Timeout;
                    r.message = Some("exact search budget exhausted".into());
                }
                r.bounds = Some(BoundsJson::from(&b));
            }
        }
        Task::Classify => {
            let Some(b) = settle(&mut r, metric_dimension(g, budget), beta_timeout)? else {
                return Ok(r);
            };
            r.beta = Some(b.beta);
            let Some(d) = settle(&mut r, domination_number(g, budget), gamma_timeout)? else {
                return Ok(r);
            };
            r.gamma = Some(d.gamma);
            if let Some(c) = settle(&mut r, classify_with(g, b.beta, d.gamma), |_, _| {})? {
                r.classify(c.verdict);
            }
        }
    }
    Ok(r)
}

fn list(v: &[usize]) -> String {
    let items: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn bound_rows(out: &mut String, entries: &[BoundJson]) {
    for e in entries {
        let value = match (e.value, e.real) {
            (Some(v), Some(x)) => format!("{v} ({x:.6})"),
            (Some(v), None) => v.to_string(),
            _ => "n/a".into(),
        };
        writeln!(out, "  {:<22}{:<16}{}", e.name, value, e.condition).unwrap();
    }
}

/// Renders `r` as one JSON line or as an aligned table.
pub fn emit_report(r: &RunReport, json: bool) -> String {
    if json {
        let mut s = serde_json::to_string(r).expect("reports serialize");
        s.push('\n');
        return s;
    }
    let mut out = String::new();
    let mut row = |key: &str, value: String| writeln!(out, "{key:<16}{value}").unwrap();
    row("source", r.source.clone());
    row("n", r.n.to_string());
    row("m", r.m.to_string());
    row("diam", r.diam.to_string());
    row("girth", r.girth.to_string());
    row("delta", r.delta.to_string());
    row("Delta", r.max_degree.to_string());
    row("mu_max", r.mu_max.map_or("n/a".into(), |m| format!("{m:.9}")));
    if let Some(b) = r.beta {
        row("beta", b.to_string());
    }
    if let Some(g) = r.gamma {
        row("gamma", g.to_string());
    }
    if let Some(b) = &r.basis {
        row("basis", list(b));
    }
    if let Some(d) = &r.dominating_set {
        row("dominating", list(d));
    }
    if let Some(w) = &r.resolving_set {
        row("resolving", list(w));
    }
    if let Some(c) = r.classification {
        let params = r.classification_params.as_deref().unwrap_or(&[]);
        let text = if params.is_empty() {
            c.to_string()
        } else {
            let p: Vec<String> = params.iter().map(|x| x.to_string()).collect();
            format!("{c}({})", p.join(","))
        };
        row("classification", text);
    }
    if let Some(ub) = r.beta_upper_bound {
        row("beta <=", ub.to_string());
    }
    if let Some(ub) = r.gamma_upper_bound {
        row("gamma <=", ub.to_string());
    }
    row("status", format!("{:?}", r.status));
    if let Some(m) = &r.message {
        row("message", m.clone());
    }
    if let Some(t) = &r.trace {
        writeln!(out, "trace from {}", list(&t.initial)).unwrap();
        for s in &t.swaps {
            writeln!(out, "  swap {} -> {}  ({})", s.removed, s.inserted, s.reason).unwrap();
        }
        writeln!(out, "  final {}", list(&t.final_set)).unwrap();
    }
    if let Some(b) = &r.bounds {
        writeln!(out, "upper bounds on beta").unwrap();
        bound_rows(&mut out, &b.beta_upper);
        writeln!(out, "lower bounds on gamma").unwrap();
        bound_rows(&mut out, &b.gamma_lower);
        if let Some(t) = b.tightest {
            writeln!(out, "{:<16}{t}", "tightest").unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use metdim_core::generators::{complete, kneser, path};

    #[test]
    fn k3_json_fields() {
        let r = run("complete 3", &complete(3).unwrap(), Task::Classify, Budget::UNLIMITED).unwrap();
        let v: serde_json::Value = serde_json::from_str(&emit_report(&r, true)).unwrap();
        assert_eq!(v["n"], 3);
        assert_eq!(v["m"], 3);
        assert_eq!(v["diam"], 1);
        assert_eq!(v["girth"], 3);
        assert_eq!(v["beta"], 2);
        assert_eq!(v["gamma"], 1);
        assert_eq!(v["classification"], "CompleteGraph");
        assert_eq!(v["classification_params"], serde_json::json!([3]));
        assert_eq!(v["status"], "Ok");
    }

    #[test]
    fn path_is_acyclic_complete_graph() {
        let r = run("path 2", &path(2).unwrap(), Task::Classify, Budget::UNLIMITED).unwrap();
        assert_eq!((r.beta, r.gamma), (Some(1), Some(1)));
        assert_eq!(r.classification, Some("CompleteGraph"));
        assert_eq!(r.classification_params, Some(vec![2]));
        assert!(emit_report(&r, true).contains(r#""girth":"acyclic""#));
    }

    #[test]
    fn timeout_keeps_best_known_bound() {
        let g = kneser(7, 3).unwrap();
        let r = run("kneser 7 3", &g, Task::Dimension, Budget::subsets(10)).unwrap();
        assert_eq!(r.status, Status::Timeout);
        assert_eq!(r.beta, None);
        assert_eq!(r.beta_upper_bound, Some(32));
        let r = run("kneser 7 3", &g, Task::Bounds { exact: true }, Budget::subsets(10)).unwrap();
        assert_eq!(r.status, Status::Timeout);
        assert!(r.beta_upper_bound.is_some() && r.gamma_upper_bound.is_some());
    }

    #[test]
    fn human_table_lists_bounds() {
        let r = run("kneser 7 3", &kneser(7, 3).unwrap(), Task::Bounds { exact: false }, Budget::UNLIMITED).unwrap();
        let text = emit_report(&r, false);
        assert!(text.contains("n-delta               31"), "{text}");
        assert!(text.contains("n-n/mu                30 (30.000000)"), "{text}");
        assert!(text.contains("mu_max          7.000000000"));
    }

    #[test]
    fn disconnected_input_is_an_error() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(run("x", &g, Task::Invariants, Budget::UNLIMITED), Err(Error::Disconnected(..))));
    }
}
