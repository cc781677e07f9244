//! The verification sweep: every connected labeled graph up to a given
//! order plus seeded random connected graphs, each run through
//! [`check_graph`].
//!
//! Random graph `i` draws its order and then its edges from the ChaCha8
//! stream `(seed, i)`, so any single graph of a sweep can be replayed alone
//! and the result does not depend on scheduling.

use std::fmt::{self, Write as _};

use metdim_core::enumerate::connected_graphs;
use metdim_core::generators::{random_connected_with, seeded_rng};
use metdim_core::verify::{check_graph, Failure, GraphCheck};
use metdim_core::{Budget, Error, Graph};
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

pub const MAX_EXHAUSTIVE_ORDER: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepConfig {
    /// Enumerate all connected labeled graphs on `1..=exhaustive_upto`
    /// vertices; 0 skips enumeration.
    pub exhaustive_upto: usize,
    pub count: u64,
    pub min_n: usize,
    pub max_n: usize,
    pub p: f64,
    pub seed: u64,
    pub budget: Budget,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self { exhaustive_upto: 6, count: 1000, min_n: 7, max_n: 18, p: 0.3, seed: 0, budget: Budget::UNLIMITED }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), Error> {
        let bad = |m: String| Err(Error::InvalidParameter(m));
        if self.exhaustive_upto > MAX_EXHAUSTIVE_ORDER {
            return bad(format!("--exhaustive-upto is at most {MAX_EXHAUSTIVE_ORDER}, got {}", self.exhaustive_upto));
        }
        if self.count > 0 {
            if self.min_n == 0 || self.min_n > self.max_n {
                return bad(format!("need 1 <= --min-n <= --max-n, got {} and {}", self.min_n, self.max_n));
            }
            if !(self.p > 0.0 && self.p <= 1.0) {
                return bad(format!("--p must lie in (0, 1], got {}", self.p));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphSource {
    /// Edge mask over the lexicographic vertex pairs of `n` vertices.
    Exhaustive {
        n: usize,
        mask: u64,
    },
    Random {
        index: u64,
    },
}

impl fmt::Display for GraphSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSource::Exhaustive { n, mask } => write!(f, "exhaustive n={n} mask={mask:#x}"),
            GraphSource::Random { index } => write!(f, "random #{index}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepRecord {
    pub source: GraphSource,
    pub graph: Graph,
    pub result: Result<GraphCheck, Error>,
}

impl SweepRecord {
    pub fn failures(&self) -> Vec<String> {
        match &self.result {
            Ok(c) => c.failures.iter().map(describe).collect(),
            Err(e) if e.is_timeout() => Vec::new(),
            Err(e) => vec![e.to_string()],
        }
    }
}

fn describe(f: &Failure) -> String {
    match f {
        Failure::UpperBound => "beta exceeds n - gamma".into(),
        Failure::Classification => "structural verdict disagrees with beta = n - gamma".into(),
        Failure::Construction(m) => format!("construction: {m}"),
        Failure::Trace(m) => format!("trace: {m}"),
        Failure::Bound(name) => format!("bound {name} violated"),
    }
}

/// Graphs of a sweep in enumeration order: exhaustive ones by order then
/// mask, then random ones by index.
pub fn sweep_graphs(cfg: &SweepConfig) -> Result<Vec<(GraphSource, Graph)>, Error> {
    cfg.validate()?;
    let mut graphs: Vec<(GraphSource, Graph)> = (1..=cfg.exhaustive_upto)
        .flat_map(|n| connected_graphs(n).map(move |(mask, g)| (GraphSource::Exhaustive { n, mask }, g)))
        .collect();
    let random: Result<Vec<_>, Error> = (0..cfg.count)
        .into_par_iter()
        .map(|index| {
            let mut rng = seeded_rng(cfg.seed, index);
            let n = rng.gen_range(cfg.min_n..=cfg.max_n);
            Ok((GraphSource::Random { index }, random_connected_with(n, cfg.p, &mut rng)?))
        })
        .collect();
    graphs.extend(random?);
    Ok(graphs)
}

#[derive(Debug, Clone)]
pub struct SweepOutcome {
    pub config: SweepConfig,
    pub records: Vec<SweepRecord>,
}

pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepOutcome, Error> {
    let graphs = sweep_graphs(cfg)?;
    let records = graphs
        .into_par_iter()
        .map(|(source, graph)| {
            let result = check_graph(&graph, cfg.budget);
            SweepRecord { source, graph, result }
        })
        .collect();
    Ok(SweepOutcome { config: *cfg, records })
}

#[derive(Debug, Serialize)]
struct ViolationJson {
    graph: String,
    n: usize,
    edges: Vec<[usize; 2]>,
    failures: Vec<String>,
}

#[derive(Debug, Serialize)]
struct SummaryJson {
    graphs: usize,
    exhaustive: usize,
    random: usize,
    equality: usize,
    strict: usize,
    swaps: usize,
    timeouts: usize,
    violations: Vec<ViolationJson>,
    status: &'static str,
}

impl SweepOutcome {
    pub fn checks(&self) -> impl Iterator<Item = &GraphCheck> {
        self.records.iter().filter_map(|r| r.result.as_ref().ok())
    }

    pub fn timeouts(&self) -> usize {
        self.records.iter().filter(|r| matches!(&r.result, Err(e) if e.is_timeout())).count()
    }

    /// Records with at least one failed check or a non-timeout error.
    pub fn violations(&self) -> impl Iterator<Item = &SweepRecord> {
        self.records.iter().filter(|r| !r.failures().is_empty())
    }

    /// Number of checked graphs with a failure matching `pred`.
    pub fn count_failures(&self, pred: impl Fn(&Failure) -> bool) -> usize {
        self.checks().filter(|c| c.failures.iter().any(&pred)).count()
    }

    pub fn exit_code(&self) -> i32 {
        if self.violations().next().is_some() {
            4
        } else if self.timeouts() > 0 {
            3
        } else {
            0
        }
    }

    fn summary(&self) -> SummaryJson {
        let exhaustive = self.records.iter().filter(|r| matches!(r.source, GraphSource::Exhaustive { .. })).count();
        let equality = self.checks().filter(|c| c.beta + c.gamma == c.n).count();
        let violations: Vec<ViolationJson> = self
            .violations()
            .map(|r| ViolationJson {
                graph: r.source.to_string(),
                n: r.graph.order(),
                edges: r.graph.edges().map(|(u, v)| [u, v]).collect(),
                failures: r.failures(),
            })
            .collect();
        let status = match self.exit_code() {
            0 => "Ok",
            3 => "Timeout",
            _ => "Error",
        };
        SummaryJson {
            graphs: self.records.len(),
            exhaustive,
            random: self.records.len() - exhaustive,
            equality,
            strict: self.checks().count() - equality,
            swaps: self.checks().map(|c| c.swaps).sum(),
            timeouts: self.timeouts(),
            violations,
            status,
        }
    }

    /// Deterministic summary: identical configurations render identical
    /// bytes.
    pub fn render(&self, json: bool) -> String {
        let s = self.summary();
        if json {
            let mut out = serde_json::to_string(&s).expect("summary serializes");
            out.push('\n');
            return out;
        }
        let c = &self.config;
        let mut out = String::new();
        let mut row = |key: &str, value: String| writeln!(out, "{key:<14}{value}").unwrap();
        row("exhaustive", format!("{} graphs, n <= {}", s.exhaustive, c.exhaustive_upto));
        row("random", format!("{} graphs, n in [{}, {}], p = {}, seed = {}", s.random, c.min_n, c.max_n, c.p, c.seed));
        row("equality", s.equality.to_string());
        row("strict", s.strict.to_string());
        row("swaps", s.swaps.to_string());
        row("timeouts", s.timeouts.to_string());
        row("violations", s.violations.len().to_string());
        row("status", s.status.to_string());
        for v in &s.violations {
            let edges: Vec<String> = v.edges.iter().map(|[a, b]| format!("{a}-{b}")).collect();
            writeln!(out, "{} (n={}; {}): {}", v.graph, v.n, edges.join(" "), v.failures.join("; ")).unwrap();
        }
        out
    }
}
