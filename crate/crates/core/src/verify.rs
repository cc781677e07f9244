//! Per-graph verification used by the sweep driver.
//!
//! For one connected graph this computes exact `beta` and `gamma`, then
//! checks `beta <= n - gamma`, that equality coincides with the structural
//! verdict, that the construction yields a resolving complement of size
//! `n - gamma` with a well-formed trace, and that every applicable bound is
//! consistent with the exact values. Failures are collected, not raised.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bounds::{assemble_report, Exact};
use crate::budget::Budget;
use crate::constructive::{
    construct_from, false_twin_pairs, internal_edges, single_vertices, structural_verdict, ConstructOptions,
    Construction, SwapReason, Verdict,
};
use crate::domination::{domination_number, is_dominating_set};
use crate::error::Result;
use crate::graph::Graph;
use crate::resolve::{is_resolving_set, metric_dimension};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    /// `beta > n - gamma`.
    UpperBound,
    /// Structural verdict disagrees with whether `beta = n - gamma`.
    Classification,
    /// The construction itself reported an anomaly.
    Construction(String),
    /// Auditing the construction output or trace failed.
    Trace(String),
    /// A bound contradicted by the exact values.
    Bound(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphCheck {
    pub n: usize,
    pub m: usize,
    pub beta: usize,
    pub gamma: usize,
    pub verdict: Verdict,
    pub swaps: usize,
    pub failures: Vec<Failure>,
}

impl GraphCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs every check on `g`. Only solver timeouts and disconnected input are
/// errors; all check failures land in [`GraphCheck::failures`].
pub fn check_graph(g: &Graph, budget: Budget) -> Result<GraphCheck> {
    g.require_connected()?;
    let n = g.order();
    let basis = metric_dimension(g, budget)?;
    let dom = domination_number(g, budget)?;
    let (beta, gamma) = (basis.beta, dom.gamma);
    let mut failures = Vec::new();

    if beta + gamma > n {
        failures.push(Failure::UpperBound);
    }
    let verdict = structural_verdict(g);
    if (beta + gamma == n) != verdict.is_equality() {
        failures.push(Failure::Classification);
    }

    let mut swaps = 0;
    match construct_from(g, &dom.dominating_set, ConstructOptions::default()) {
        Ok(c) => {
            swaps = c.trace.steps.len();
            failures.extend(audit_construction(g, gamma, &c).into_iter().map(Failure::Trace));
        }
        Err(e) => failures.push(Failure::Construction(format!("{e}"))),
    }

    let report = assemble_report(g, Exact::Value(beta), Exact::Value(gamma))?;
    failures.extend(report.violations().into_iter().map(Failure::Bound));

    Ok(GraphCheck { n, m: g.size(), beta, gamma, verdict, swaps, failures })
}

/// Independent audit of a construction: replays the trace and re-checks
/// each intermediate set. Returns one message per problem found.
pub fn audit_construction(g: &Graph, gamma: usize, c: &Construction) -> Vec<String> {
    let n = g.order();
    let mut problems = Vec::new();
    if !is_resolving_set(g, &c.resolving.to_vec()).is_ok_and(|r| r.is_resolving()) {
        problems.push(format!("complement {} is not resolving", c.resolving));
    }
    if c.resolving.len() != n - gamma {
        problems.push(format!("|W| = {} but n - gamma = {}", c.resolving.len(), n - gamma));
    }
    if c.resolving.complement(n) != c.dominating {
        problems.push(String::from("W is not the complement of the dominating set"));
    }

    let sets = c.trace.replay();
    if sets.last() != Some(&c.dominating) {
        problems.push(String::from("trace does not replay to the final set"));
    }
    for (i, set) in sets.iter().enumerate() {
        if set.len() != gamma {
            problems.push(format!("set {i} has size {} instead of {gamma}", set.len()));
        }
        if !is_dominating_set(g, set).is_dominating() {
            problems.push(format!("set {i} ({set}) is not dominating"));
        }
    }
    for (i, step) in c.trace.steps.iter().enumerate() {
        if !sets[i].contains(step.removed) || sets[i].contains(step.inserted) {
            problems.push(format!("step {i} is not a swap"));
        }
        match step.reason {
            SwapReason::FalseTwin => {
                let before = false_twin_pairs(g, &sets[i]).len();
                let after = false_twin_pairs(g, &sets[i + 1]).len();
                if after >= before {
                    problems.push(format!("step {i}: false twin pairs {before} -> {after}"));
                }
            }
            SwapReason::SingleVertex => {
                if !false_twin_pairs(g, &sets[i + 1]).is_empty() {
                    problems.push(format!("step {i}: false twins after a single-vertex swap"));
                }
                if !single_vertices(g, &sets[i]).contains(&step.removed) {
                    problems.push(format!("step {i}: removed vertex {} was not single", step.removed));
                }
                if internal_edges(g, &sets[i + 1]) <= internal_edges(g, &sets[i]) {
                    problems.push(format!("step {i}: no edge gained inside the set"));
                }
            }
        }
    }
    if !false_twin_pairs(g, &c.dominating).is_empty() {
        problems.push(String::from("final set holds false twins"));
    }
    if n > 1 && !single_vertices(g, &c.dominating).is_empty() {
        problems.push(String::from("final set holds single vertices"));
    }
    problems
}
