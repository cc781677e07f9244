//! From a minimum dominating set to a resolving set.
//!
//! A minimum dominating set `D` is normalized in two swap phases. First,
//! while `D` holds a false twin pair `u, v`, `u` is traded for a neighbor
//! outside `D`. Then, while `D` holds a single vertex `u` (see
//! [`is_single_vertex`]), `u` is traded for a neighbor outside `D`. Every
//! swap keeps `D` dominating and of the same size. Once `D` is free of false
//! twins, `V \ D` resolves the graph, which gives `beta(G) <= n - gamma(G)`.
//! Equality holds exactly for complete graphs and for complete bipartite
//! graphs `K_{s,t}` with `s, t >= 2`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::budget::Budget;
use crate::domination::{domination_number, is_dominating_set, is_single_vertex, Domination};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::resolve::{is_resolving_set, metric_dimension, Resolution};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SwapReason {
    FalseTwin,
    SingleVertex,
}

impl fmt::Display for SwapReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SwapReason::FalseTwin => "false-twin",
            SwapReason::SingleVertex => "single-vertex",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SwapStep {
    pub removed: usize,
    pub inserted: usize,
    pub reason: SwapReason,
}

/// Swaps applied to a dominating set, replayable from `initial`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizationTrace {
    pub initial: VertexSet,
    pub steps: Vec<SwapStep>,
    pub final_set: VertexSet,
}

impl NormalizationTrace {
    /// Every intermediate set, starting with `initial` and ending with
    /// `final_set`.
    pub fn replay(&self) -> Vec<VertexSet> {
        let mut sets = Vec::with_capacity(self.steps.len() + 1);
        let mut cur = self.initial.clone();
        sets.push(cur.clone());
        for s in &self.steps {
            cur.remove(s.removed);
            cur.insert(s.inserted);
            sets.push(cur.clone());
        }
        sets
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NormalizeOptions {
    /// Recompute `gamma(G)` and reject a non-minimum input set.
    pub verify_minimum: bool,
    /// Let [`ensure_private_neighbors`] accept an input holding false twins.
    pub allow_false_twins: bool,
    pub budget: Budget,
}

impl Default for NormalizeOptions {
    fn default() -> Self {
        Self { verify_minimum: false, allow_false_twins: false, budget: Budget::UNLIMITED }
    }
}

/// False twin pairs `(u, v)`, `u < v`, inside `set`, lexicographic order.
pub fn false_twin_pairs(g: &Graph, set: &VertexSet) -> Vec<(usize, usize)> {
    let members = set.to_vec();
    let mut pairs = Vec::new();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if g.neighborhood(u) == g.neighborhood(v) {
                pairs.push((u, v));
            }
        }
    }
    pairs
}

/// Edges with both ends in `set`.
pub fn internal_edges(g: &Graph, set: &VertexSet) -> usize {
    set.iter().map(|u| g.neighborhood(u).intersection_len(set)).sum::<usize>() / 2
}

/// Members of `set` that are single vertices, ascending.
pub fn single_vertices(g: &Graph, set: &VertexSet) -> Vec<usize> {
    set.iter().filter(|&u| is_single_vertex(g, set, u).expect("u is a member")).collect()
}

fn check_input(g: &Graph, set: &VertexSet, opts: &NormalizeOptions) -> Result<()> {
    g.require_connected()?;
    for v in set {
        g.check_vertex(v)?;
    }
    if let Domination::Undominated(v) = is_dominating_set(g, set) {
        return Err(Error::NotDominating(v));
    }
    if opts.verify_minimum {
        let gamma = domination_number(g, opts.budget)?.gamma;
        if set.len() > gamma {
            return Err(Error::NotMinimum { given: set.len(), gamma });
        }
    }
    Ok(())
}

fn swap_guard(g: &Graph, steps: usize) -> Result<()> {
    let n = g.order();
    if steps >= n * n {
        return Err(Error::Anomaly(format!("normalization exceeded {} swaps", n * n)));
    }
    Ok(())
}

fn smallest_outside_neighbor(g: &Graph, set: &VertexSet, u: usize) -> Option<usize> {
    g.neighbors(u).iter().copied().find(|&x| !set.contains(x))
}

/// Removes false twin pairs from a minimum dominating set.
///
/// Takes the lexicographically smallest pair `(u, v)` and swaps `u` for its
/// smallest neighbor outside the set, until no pair remains. Each swap must
/// strictly reduce the pair count and keep the set dominating.
pub fn eliminate_false_twins(g: &Graph, dominating: &VertexSet, opts: NormalizeOptions) -> Result<NormalizationTrace> {
    check_input(g, dominating, &opts)?;
    let mut set = dominating.clone();
    let mut steps = Vec::new();
    let mut pairs = false_twin_pairs(g, &set);
    while let Some(&(u, v)) = pairs.first() {
        swap_guard(g, steps.len())?;
        let x = smallest_outside_neighbor(g, &set, u).ok_or_else(|| {
            Error::Anomaly(format!("false twins {u}, {v} have no neighbor outside the dominating set"))
        })?;
        set.remove(u);
        set.insert(x);
        steps.push(SwapStep { removed: u, inserted: x, reason: SwapReason::FalseTwin });
        if let Domination::Undominated(w) = is_dominating_set(g, &set) {
            return Err(Error::Anomaly(format!("swap {u} -> {x} left vertex {w} undominated")));
        }
        let next = false_twin_pairs(g, &set);
        if next.len() >= pairs.len() {
            return Err(Error::Anomaly(format!(
                "swap {u} -> {x} did not reduce false twin pairs ({} -> {})",
                pairs.len(),
                next.len()
            )));
        }
        pairs = next;
    }
    Ok(NormalizationTrace { initial: dominating.clone(), steps, final_set: set })
}

/// Gives every member of a twin-free minimum dominating set a private
/// neighbor by swapping the smallest single vertex out for its smallest
/// neighbor outside the set.
///
/// The number of single vertices need not drop at every swap: the incoming
/// vertex can take away another member's only private neighbor. What does
/// grow strictly is the number of edges inside the set, because a single
/// vertex has no neighbor in the set while the incoming vertex, not being
/// its private neighbor, has at least one. That count is the progress check.
pub fn ensure_private_neighbors(
    g: &Graph,
    dominating: &VertexSet,
    opts: NormalizeOptions,
) -> Result<NormalizationTrace> {
    check_input(g, dominating, &opts)?;
    let twin_free = match false_twin_pairs(g, dominating).first() {
        None => true,
        Some(_) if opts.allow_false_twins => false,
        Some(&(u, v)) => return Err(Error::HasFalseTwins(u, v)),
    };
    let mut set = dominating.clone();
    let mut steps = Vec::new();
    if g.order() == 1 {
        // K_1: the lone vertex has no neighbor to trade with
        return Ok(NormalizationTrace { initial: set.clone(), steps, final_set: set });
    }
    let mut singles = single_vertices(g, &set);
    let mut edges = internal_edges(g, &set);
    while let Some(&u) = singles.first() {
        swap_guard(g, steps.len())?;
        let x = smallest_outside_neighbor(g, &set, u)
            .ok_or_else(|| Error::Anomaly(format!("single vertex {u} has no neighbor outside the dominating set")))?;
        set.remove(u);
        set.insert(x);
        steps.push(SwapStep { removed: u, inserted: x, reason: SwapReason::SingleVertex });
        if let Domination::Undominated(w) = is_dominating_set(g, &set) {
            return Err(Error::Anomaly(format!("swap {u} -> {x} left vertex {w} undominated")));
        }
        if let Some(&(a, b)) = false_twin_pairs(g, &set).first().filter(|_| twin_free) {
            return Err(Error::Anomaly(format!("swap {u} -> {x} created false twins {a}, {b}")));
        }
        let edges_after = internal_edges(g, &set);
        if edges_after <= edges {
            return Err(Error::Anomaly(format!(
                "swap {u} -> {x} did not add edges inside the set ({edges} -> {edges_after})"
            )));
        }
        edges = edges_after;
        singles = single_vertices(g, &set);
    }
    Ok(NormalizationTrace { initial: dominating.clone(), steps, final_set: set })
}

/// Result of the dominating-set to resolving-set construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    /// Normalized minimum dominating set.
    pub dominating: VertexSet,
    /// `V \ dominating`; resolves the graph.
    pub resolving: VertexSet,
    /// Both normalization phases, starting from the solver's set.
    pub trace: NormalizationTrace,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstructOptions {
    pub budget: Budget,
    /// Run the private-neighbor phase after twin elimination.
    pub ensure_private: bool,
}

impl Default for ConstructOptions {
    fn default() -> Self {
        Self { budget: Budget::UNLIMITED, ensure_private: true }
    }
}

pub fn resolving_from_dominating(g: &Graph, opts: ConstructOptions) -> Result<Construction> {
    g.require_connected()?;
    let start = domination_number(g, opts.budget)?.dominating_set;
    construct_from(g, &start, opts)
}

/// Runs the normalization and emits `V \ D` for a caller-supplied minimum
/// dominating set.
pub fn construct_from(g: &Graph, minimum: &VertexSet, opts: ConstructOptions) -> Result<Construction> {
    let norm = NormalizeOptions::default();
    let twin_free = eliminate_false_twins(g, minimum, norm)?;
    let mut steps = twin_free.steps;
    let mut dominating = twin_free.final_set;
    if opts.ensure_private {
        let private = ensure_private_neighbors(g, &dominating, norm)?;
        steps.extend(private.steps);
        dominating = private.final_set;
    }
    let resolving = dominating.complement(g.order());
    if let Resolution::Collision(u, v) = is_resolving_set(g, &resolving.to_vec())? {
        return Err(Error::Anomaly(format!(
            "complement of twin-free minimum dominating set {dominating} does not separate {u} and {v}"
        )));
    }
    Ok(Construction {
        trace: NormalizationTrace { initial: minimum.clone(), steps, final_set: dominating.clone() },
        dominating,
        resolving,
    })
}

/// Structural shape deciding whether `beta = n - gamma`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    CompleteGraph(usize),
    /// Side sizes, smaller first; both at least 2.
    CompleteBipartite(usize, usize),
    StrictInequality,
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::CompleteGraph(_) => "CompleteGraph",
            Verdict::CompleteBipartite(..) => "CompleteBipartite",
            Verdict::StrictInequality => "StrictInequality",
        }
    }

    pub fn is_equality(&self) -> bool {
        !matches!(self, Verdict::StrictInequality)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::CompleteGraph(n) => write!(f, "CompleteGraph({n})"),
            Verdict::CompleteBipartite(s, t) => write!(f, "CompleteBipartite({s},{t})"),
            Verdict::StrictInequality => f.write_str("StrictInequality"),
        }
    }
}

/// Complete graph, complete bipartite graph with both sides of size at
/// least two (found by BFS 2-coloring), or neither.
pub fn structural_verdict(g: &Graph) -> Verdict {
    let n = g.order();
    if g.size() == n * (n - 1) / 2 {
        return Verdict::CompleteGraph(n);
    }
    if !g.is_connected() {
        return Verdict::StrictInequality;
    }
    let mut color = alloc::vec![u8::MAX; n];
    let mut queue = alloc::collections::VecDeque::new();
    color[0] = 0;
    queue.push_back(0);
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if color[v] == u8::MAX {
                color[v] = 1 - color[u];
                queue.push_back(v);
            } else if color[v] == color[u] {
                return Verdict::StrictInequality;
            }
        }
    }
    let s = color.iter().filter(|&&c| c == 0).count();
    let t = n - s;
    if s >= 2 && t >= 2 && g.size() == s * t {
        Verdict::CompleteBipartite(s.min(t), s.max(t))
    } else {
        Verdict::StrictInequality
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub verdict: Verdict,
    pub beta: usize,
    pub gamma: usize,
    pub n: usize,
}

/// Structural verdict cross-checked against exact `beta` and `gamma`.
pub fn classify_equality(g: &Graph, budget: Budget) -> Result<Classification> {
    g.require_connected()?;
    let beta = metric_dimension(g, budget)?.beta;
    let gamma = domination_number(g, budget)?.gamma;
    classify_with(g, beta, gamma)
}

/// As [`classify_equality`] with `beta` and `gamma` already known.
pub fn classify_with(g: &Graph, beta: usize, gamma: usize) -> Result<Classification> {
    let n = g.order();
    let verdict = structural_verdict(g);
    if beta + gamma > n {
        return Err(Error::Anomaly(format!("beta {beta} exceeds n - gamma = {}", n - gamma)));
    }
    let equal = beta + gamma == n;
    if equal != verdict.is_equality() {
        return Err(Error::Anomaly(format!(
            "structural verdict {verdict} disagrees with beta = {beta}, n - gamma = {}",
            n - gamma
        )));
    }
    Ok(Classification { verdict, beta, gamma, n })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_bipartite, cycle, petersen, star};
    use alloc::vec;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn c4_twin_elimination() {
        let c4 = cycle(4).unwrap();
        let t = eliminate_false_twins(&c4, &set(&[0, 2]), NormalizeOptions::default()).unwrap();
        assert_eq!(t.steps, vec![SwapStep { removed: 0, inserted: 1, reason: SwapReason::FalseTwin }]);
        assert_eq!(t.final_set.to_vec(), vec![1, 2]);
    }

    #[test]
    fn k23_twin_elimination() {
        let g = complete_bipartite(2, 3).unwrap();
        let t = eliminate_false_twins(&g, &set(&[0, 1]), NormalizeOptions::default()).unwrap();
        assert_eq!(t.steps.len(), 1);
        assert_eq!(t.final_set.to_vec(), vec![1, 2]);
        assert!(false_twin_pairs(&g, &t.final_set).is_empty());
    }

    #[test]
    fn twin_free_input_unchanged() {
        let c4 = cycle(4).unwrap();
        let t = eliminate_false_twins(&c4, &set(&[1, 2]), NormalizeOptions::default()).unwrap();
        assert!(t.steps.is_empty());
        assert_eq!(t.final_set, set(&[1, 2]));
    }

    #[test]
    fn input_validation() {
        let c4 = cycle(4).unwrap();
        let opts = NormalizeOptions { verify_minimum: true, ..Default::default() };
        assert_eq!(eliminate_false_twins(&c4, &set(&[0]), opts), Err(Error::NotDominating(2)));
        assert_eq!(eliminate_false_twins(&c4, &set(&[0, 1, 2]), opts), Err(Error::NotMinimum { given: 3, gamma: 2 }));
        assert_eq!(ensure_private_neighbors(&c4, &set(&[0, 2]), opts), Err(Error::HasFalseTwins(0, 2)));
    }

    #[test]
    fn private_neighbor_phase() {
        let c4 = cycle(4).unwrap();
        let t = ensure_private_neighbors(&c4, &set(&[1, 2]), NormalizeOptions::default()).unwrap();
        assert!(t.steps.is_empty());
        // forced input with both members single
        let forced = NormalizeOptions { allow_false_twins: true, ..Default::default() };
        let t = ensure_private_neighbors(&c4, &set(&[0, 2]), forced).unwrap();
        assert_eq!(t.final_set.to_vec(), vec![1, 2]);
        assert!(single_vertices(&c4, &t.final_set).is_empty());
        let k5 = complete(5).unwrap();
        let t = ensure_private_neighbors(&k5, &set(&[0]), NormalizeOptions::default()).unwrap();
        assert!(t.steps.is_empty());
    }

    #[test]
    fn single_count_may_stall_but_edges_grow() {
        // {0,1,2} is the canonical minimum dominating set; 2 is single.
        // Swapping 2 -> 3 steals 4 from 1, which becomes single in turn.
        let g = Graph::new(6, [(0, 3), (0, 5), (1, 4), (2, 3), (3, 4)]).unwrap();
        let t = ensure_private_neighbors(&g, &set(&[0, 1, 2]), NormalizeOptions::default()).unwrap();
        assert_eq!(
            t.steps,
            vec![
                SwapStep { removed: 2, inserted: 3, reason: SwapReason::SingleVertex },
                SwapStep { removed: 1, inserted: 4, reason: SwapReason::SingleVertex },
            ]
        );
        let sets = t.replay();
        assert_eq!(single_vertices(&g, &sets[1]), vec![1]);
        assert_eq!(sets.iter().map(|s| internal_edges(&g, s)).collect::<Vec<_>>(), vec![0, 1, 2]);
        assert!(single_vertices(&g, &t.final_set).is_empty());
    }

    #[test]
    fn constructions() {
        let k5 = complete(5).unwrap();
        let c = resolving_from_dominating(&k5, ConstructOptions::default()).unwrap();
        assert_eq!(c.dominating.len(), 1);
        assert_eq!(c.resolving.len(), 4);

        let c6 = cycle(6).unwrap();
        let c = resolving_from_dominating(&c6, ConstructOptions::default()).unwrap();
        assert_eq!(c.resolving.len(), 4);
        assert!(is_resolving_set(&c6, &c.resolving.to_vec()).unwrap().is_resolving());

        let p = petersen();
        let c = resolving_from_dominating(&p, ConstructOptions::default()).unwrap();
        assert_eq!(c.resolving.len(), 7);
        assert!(is_resolving_set(&p, &c.resolving.to_vec()).unwrap().is_resolving());
    }

    #[test]
    fn trace_replay() {
        let c4 = cycle(4).unwrap();
        let c = construct_from(&c4, &set(&[0, 2]), ConstructOptions::default()).unwrap();
        let sets = c.trace.replay();
        assert_eq!(sets.first(), Some(&set(&[0, 2])));
        assert_eq!(sets.last(), Some(&c.dominating));
        assert!(sets.iter().all(|s| s.len() == 2));
    }

    #[test]
    fn classifications() {
        let k7 = classify_equality(&complete(7).unwrap(), Budget::UNLIMITED).unwrap();
        assert_eq!((k7.verdict, k7.beta, k7.gamma), (Verdict::CompleteGraph(7), 6, 1));
        let k23 = classify_equality(&complete_bipartite(2, 3).unwrap(), Budget::UNLIMITED).unwrap();
        assert_eq!((k23.verdict, k23.beta, k23.gamma), (Verdict::CompleteBipartite(2, 3), 3, 2));
        let s = classify_equality(&star(4).unwrap(), Budget::UNLIMITED).unwrap();
        assert_eq!((s.verdict, s.beta, s.n - s.gamma), (Verdict::StrictInequality, 3, 4));
        let p = classify_equality(&petersen(), Budget::UNLIMITED).unwrap();
        assert_eq!((p.verdict, p.beta, p.n - p.gamma), (Verdict::StrictInequality, 3, 7));
        let p2 = classify_equality(&complete(2).unwrap(), Budget::UNLIMITED).unwrap();
        assert_eq!(p2.verdict, Verdict::CompleteGraph(2));
    }

    #[test]
    fn mismatched_counts_are_anomalies() {
        let k4 = complete(4).unwrap();
        assert!(classify_with(&k4, 2, 1).unwrap_err().is_anomaly());
        assert!(classify_with(&k4, 4, 1).unwrap_err().is_anomaly());
    }
}
