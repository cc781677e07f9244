//! Metric representations, resolving-set checks and exact metric dimension.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::budget::{Budget, Exhausted, Meter};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// `r(v | W)`: distances from `v` to each landmark of `W`, in order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MetricRepresentation {
    pub coords: Vec<u32>,
}

pub fn metric_representation(g: &Graph, v: usize, landmarks: &[usize]) -> Result<MetricRepresentation> {
    if landmarks.is_empty() {
        return Err(Error::EmptyLandmarks);
    }
    g.check_vertex(v)?;
    for &w in landmarks {
        g.check_vertex(w)?;
    }
    Ok(MetricRepresentation { coords: landmarks.iter().map(|&w| g.distance(v, w)).collect() })
}

/// Outcome of a resolving-set check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Resolution {
    Resolving,
    /// Two vertices (`u < v`) with equal representations.
    Collision(usize, usize),
}

impl Resolution {
    pub fn is_resolving(self) -> bool {
        self == Resolution::Resolving
    }

    pub fn witness(self) -> Option<(usize, usize)> {
        match self {
            Resolution::Resolving => None,
            Resolution::Collision(u, v) => Some((u, v)),
        }
    }
}

/// Checks whether `landmarks` resolves `g`.
///
/// Landmarks are told apart by their own zero coordinate, so only vertices
/// outside the set are compared. The reported witness is the first colliding
/// pair when outside vertices are sorted by (representation, index).
pub fn is_resolving_set(g: &Graph, landmarks: &[usize]) -> Result<Resolution> {
    for &w in landmarks {
        g.check_vertex(w)?;
    }
    let inside: VertexSet = landmarks.iter().copied().collect();
    let mut scratch = Vec::with_capacity(g.order());
    Ok(check_resolving(g, landmarks, &inside, &mut scratch))
}

fn check_resolving(g: &Graph, landmarks: &[usize], inside: &VertexSet, scratch: &mut Vec<usize>) -> Resolution {
    scratch.clear();
    scratch.extend((0..g.order()).filter(|&v| !inside.contains(v)));
    let rows: Vec<&[u32]> = landmarks.iter().map(|&w| g.distance_row(w)).collect();
    let compare = |a: &usize, b: &usize| -> Ordering {
        for row in &rows {
            match row[*a].cmp(&row[*b]) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    };
    scratch.sort_by(|a, b| compare(a, b).then(a.cmp(b)));
    for pair in scratch.windows(2) {
        if compare(&pair[0], &pair[1]) == Ordering::Equal {
            return Resolution::Collision(pair[0], pair[1]);
        }
    }
    Resolution::Resolving
}

/// A metric basis and its size `beta(G)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricBasis {
    pub beta: usize,
    /// Lexicographically smallest minimum resolving set.
    pub basis: VertexSet,
    /// Candidate subsets examined by the search.
    pub examined: u64,
}

/// Lower bound from twin classes: a resolving set misses at most one vertex
/// of every class of the combined twin partition.
pub fn twin_lower_bound(g: &Graph) -> usize {
    g.twin_partition().classes().iter().map(|c| c.len() - 1).sum()
}

/// Exact metric dimension with the canonical (lexicographically smallest)
/// basis.
///
/// Candidate sizes are tried in increasing order starting at the twin lower
/// bound; within a size, subsets are generated in lexicographic order and
/// any subset leaving out two vertices of one twin class is skipped, since
/// such a pair is never separated by an outside landmark.
pub fn metric_dimension(g: &Graph, budget: Budget) -> Result<MetricBasis> {
    g.require_connected()?;
    let n = g.order();
    if n == 1 {
        return Ok(MetricBasis { beta: 0, basis: VertexSet::new(), examined: 0 });
    }
    let twins = g.twin_partition();
    let lower = twin_lower_bound(g).max(1);
    let upper_bound = n - (g.diameter()? as usize);

    let mut search = BasisSearch {
        g,
        class_of: (0..n).map(|v| twins.class_of(v)).collect(),
        skipped: vec![0; twins.len()],
        chosen: Vec::with_capacity(n),
        inside: VertexSet::with_capacity(n),
        scratch: Vec::with_capacity(n),
        meter: budget.meter(),
    };
    for k in lower..n {
        match search.run(0, k) {
            Ok(true) => {
                return Ok(MetricBasis {
                    beta: k,
                    basis: search.chosen.iter().copied().collect(),
                    examined: search.meter.used(),
                })
            }
            Ok(false) => {}
            Err(Exhausted) => return Err(search.meter.timeout(upper_bound)),
        }
    }
    Err(Error::Anomaly(alloc::format!("no resolving set of size below {n} found for a graph of order {n}")))
}

struct BasisSearch<'a> {
    g: &'a Graph,
    class_of: Vec<usize>,
    skipped: Vec<u8>,
    chosen: Vec<usize>,
    inside: VertexSet,
    scratch: Vec<usize>,
    meter: Meter,
}

impl BasisSearch<'_> {
    /// Extends `chosen` by `remaining` vertices from `start..`, lexicographic
    /// order. On success `chosen` holds the found set.
    fn run(&mut self, start: usize, remaining: usize) -> core::result::Result<bool, Exhausted> {
        self.meter.tick()?;
        let n = self.g.order();
        if remaining == 0 {
            // everything from start.. is skipped as well
            (start..n).for_each(|v| self.skipped[self.class_of[v]] += 1);
            let ok = (start..n).all(|v| self.skipped[self.class_of[v]] <= 1);
            (start..n).for_each(|v| self.skipped[self.class_of[v]] -= 1);
            if !ok {
                return Ok(false);
            }
            let found = check_resolving(self.g, &self.chosen, &self.inside, &mut self.scratch);
            return Ok(found.is_resolving());
        }
        let mut result = Ok(false);
        let mut skipped_here = start;
        for e in start..=n - remaining {
            self.chosen.push(e);
            self.inside.insert(e);
            let r = self.run(e + 1, remaining - 1);
            if !matches!(r, Ok(false)) {
                result = r;
                if result.is_err() {
                    self.chosen.pop();
                    self.inside.remove(e);
                }
                break;
            }
            self.chosen.pop();
            self.inside.remove(e);
            // e is now skipped for every later choice
            let c = self.class_of[e];
            self.skipped[c] += 1;
            skipped_here = e + 1;
            if self.skipped[c] > 1 {
                break;
            }
        }
        for v in start..skipped_here {
            self.skipped[self.class_of[v]] -= 1;
        }
        result
    }
}
