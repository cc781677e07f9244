//! Dominating sets: verification, exact domination number, private
//! neighbors and single vertices.

use alloc::vec;
use alloc::vec::Vec;

use crate::budget::{Budget, Exhausted, Meter};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domination {
    Dominating,
    /// Smallest vertex outside the set with no neighbor in it.
    Undominated(usize),
}

impl Domination {
    pub fn is_dominating(self) -> bool {
        self == Domination::Dominating
    }
}

pub fn is_dominating_set(g: &Graph, set: &VertexSet) -> Domination {
    match (0..g.order()).find(|&v| !set.contains(v) && !g.neighborhood(v).intersects(set)) {
        None => Domination::Dominating,
        Some(v) => Domination::Undominated(v),
    }
}

/// A minimum dominating set and its size `gamma(G)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationResult {
    pub gamma: usize,
    /// Lexicographically smallest minimum dominating set.
    pub dominating_set: VertexSet,
    pub examined: u64,
}

/// Repeatedly takes the vertex covering the most undominated vertices
/// (ties to the lowest index).
pub fn greedy_dominating_set(g: &Graph) -> VertexSet {
    let n = g.order();
    let mut undominated = VertexSet::full(n);
    let mut set = VertexSet::with_capacity(n);
    let closed: Vec<VertexSet> = (0..n).map(|v| g.closed_neighborhood(v)).collect();
    while !undominated.is_empty() {
        let best = (0..n)
            .max_by_key(|&v| (closed[v].intersection_len(&undominated), core::cmp::Reverse(v)))
            .expect("graph has vertices");
        set.insert(best);
        undominated.difference_with(&closed[best]);
    }
    set
}

/// Exact domination number with the lexicographically smallest minimum
/// dominating set.
///
/// Sizes run from `ceil(n / (1 + Delta))` up to the greedy size; each size is
/// a lexicographic subset search in which the next pick may not pass the
/// largest closed-neighbor index of any still-undominated vertex.
pub fn domination_number(g: &Graph, budget: Budget) -> Result<DominationResult> {
    g.require_connected()?;
    let n = g.order();
    let greedy = greedy_dominating_set(g);
    let max_closed = g.max_degree() + 1;
    let lower = n.div_ceil(max_closed).max(1);

    let mut search = DominationSearch {
        g,
        last_closed: (0..n).map(|v| g.neighbors(v).iter().copied().max().map_or(v, |m| m.max(v))).collect(),
        cover: vec![0; n],
        undominated: n,
        max_closed,
        chosen: Vec::with_capacity(n),
        meter: budget.meter(),
    };
    for k in lower..=greedy.len() {
        match search.run(0, k) {
            Ok(true) => {
                return Ok(DominationResult {
                    gamma: k,
                    dominating_set: search.chosen.iter().copied().collect(),
                    examined: search.meter.used(),
                })
            }
            Ok(false) => {}
            Err(Exhausted) => return Err(search.meter.timeout(greedy.len())),
        }
    }
    Err(Error::Anomaly(alloc::format!("no dominating set of the greedy size {} found", greedy.len())))
}

struct DominationSearch<'a> {
    g: &'a Graph,
    /// Largest index in `N[v]`.
    last_closed: Vec<usize>,
    /// Number of chosen vertices in `N[v]`.
    cover: Vec<u32>,
    undominated: usize,
    max_closed: usize,
    chosen: Vec<usize>,
    meter: Meter,
}

impl DominationSearch<'_> {
    fn pick(&mut self, v: usize, delta: i32) {
        let mut touch = |x: usize, cover: &mut Vec<u32>| {
            if delta > 0 {
                if cover[x] == 0 {
                    self.undominated -= 1;
                }
                cover[x] += 1;
            } else {
                cover[x] -= 1;
                if cover[x] == 0 {
                    self.undominated += 1;
                }
            }
        };
        touch(v, &mut self.cover);
        for &x in self.g.neighbors(v) {
            touch(x, &mut self.cover);
        }
    }

    fn run(&mut self, start: usize, remaining: usize) -> core::result::Result<bool, Exhausted> {
        self.meter.tick()?;
        if self.undominated == 0 {
            // pad with the smallest unused vertices to keep the size exact
            let n = self.g.order();
            if n - start < remaining {
                return Ok(false);
            }
            if remaining > 0 {
                // every larger padding choice is lexicographically worse
                self.chosen.extend(start..start + remaining);
            }
            return Ok(true);
        }
        if remaining == 0 || self.undominated > remaining * self.max_closed {
            return Ok(false);
        }
        let n = self.g.order();
        // no pick beyond the deadline of the most urgent undominated vertex
        let deadline = (0..n)
            .filter(|&v| self.cover[v] == 0)
            .map(|v| self.last_closed[v])
            .min()
            .expect("some vertex is undominated");
        if deadline < start {
            return Ok(false);
        }
        let last = deadline.min(n - remaining);
        for e in start..=last {
            self.chosen.push(e);
            self.pick(e, 1);
            let r = self.run(e + 1, remaining - 1);
            if !matches!(r, Ok(false)) {
                return r;
            }
            self.pick(e, -1);
            self.chosen.pop();
        }
        Ok(false)
    }
}

/// Vertices outside `set` whose only neighbor in `set` is `u`.
pub fn private_neighbors(g: &Graph, set: &VertexSet, u: usize) -> Result<VertexSet> {
    g.check_vertex(u)?;
    if !set.contains(u) {
        return Err(Error::NotMember(u));
    }
    Ok(g.neighbors(u)
        .iter()
        .copied()
        .filter(|&x| !set.contains(x) && g.neighborhood(x).intersection_len(set) == 1)
        .collect())
}

/// A member of `set` with no private neighbor and no neighbor in `set`.
///
/// This is the one place the notion is defined; the normalization pipeline
/// relies on it.
pub fn is_single_vertex(g: &Graph, set: &VertexSet, u: usize) -> Result<bool> {
    let private = private_neighbors(g, set, u)?;
    Ok(private.is_empty() && !g.neighborhood(u).intersects(set))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_bipartite, cycle, path, star, subdivided_wheel};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn dominating_checks() {
        assert!(is_dominating_set(&complete(5).unwrap(), &set(&[0])).is_dominating());
        assert!(is_dominating_set(&cycle(6).unwrap(), &set(&[0, 3])).is_dominating());
        let p5 = path(5).unwrap();
        assert_eq!(is_dominating_set(&p5, &set(&[0])), Domination::Undominated(2));
    }

    #[test]
    fn exact_values() {
        let gamma = |g: &Graph| domination_number(g, Budget::UNLIMITED).unwrap();
        assert_eq!(gamma(&complete(6).unwrap()).gamma, 1);
        let c6 = gamma(&cycle(6).unwrap());
        assert_eq!((c6.gamma, c6.dominating_set.to_vec()), (2, vec![0, 3]));
        assert_eq!(gamma(&complete_bipartite(2, 3).unwrap()).gamma, 2);
        assert_eq!(gamma(&subdivided_wheel(6).unwrap()).gamma, 7);
        assert_eq!(gamma(&complete(1).unwrap()).gamma, 1);
    }

    #[test]
    fn timeout_carries_greedy_bound() {
        let g = subdivided_wheel(6).unwrap();
        let err = domination_number(&g, Budget::subsets(3)).unwrap_err();
        let greedy = greedy_dominating_set(&g).len();
        assert_eq!(err, Error::Timeout { examined: 3, upper_bound: greedy });
    }

    #[test]
    fn private_neighbor_sets() {
        let k14 = star(4).unwrap();
        assert_eq!(private_neighbors(&k14, &set(&[0]), 0).unwrap().to_vec(), vec![1, 2, 3, 4]);
        let c4 = cycle(4).unwrap();
        assert!(private_neighbors(&c4, &set(&[0, 2]), 0).unwrap().is_empty());
        let p4 = path(4).unwrap();
        assert_eq!(private_neighbors(&p4, &set(&[1, 2]), 1).unwrap().to_vec(), vec![0]);
        assert_eq!(private_neighbors(&p4, &set(&[1, 2]), 0), Err(Error::NotMember(0)));
    }

    #[test]
    fn single_vertices() {
        let c4 = cycle(4).unwrap();
        assert!(is_single_vertex(&c4, &set(&[0, 2]), 0).unwrap());
        let k14 = star(4).unwrap();
        assert!(!is_single_vertex(&k14, &set(&[0]), 0).unwrap());
        let p4 = path(4).unwrap();
        assert!(!is_single_vertex(&p4, &set(&[1, 2]), 1).unwrap());
        assert_eq!(is_single_vertex(&p4, &set(&[1, 2]), 3), Err(Error::NotMember(3)));
    }
}
