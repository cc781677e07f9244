//! Simple undirected graphs with cached all-pairs hop distances.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::spectral::symmetric_eigenvalues;
use crate::vertex_set::VertexSet;

/// Marker stored in a [`DistanceMatrix`] for pairs with no connecting path.
pub const UNREACHABLE: u32 = u32::MAX;

/// `n x n` hop counts, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.data[u * self.n + v]
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[u32] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    pub fn max(&self) -> u32 {
        self.data.iter().copied().max().unwrap_or(0)
    }
}

impl fmt::Debug for DistanceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.n).map(|u| self.row(u))).finish()
    }
}

/// Length of a shortest cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Girth {
    Finite(u32),
    /// No cycle at all. Behaves as `+inf` in threshold tests.
    Acyclic,
}

impl Girth {
    /// `g >= bound`, with `Acyclic` satisfying every bound.
    pub fn at_least(self, bound: u32) -> bool {
        match self {
            Girth::Finite(g) => g >= bound,
            Girth::Acyclic => true,
        }
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Acyclic => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Acyclic => f.write_str("acyclic"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence {
    /// Non-increasing.
    pub degrees: Vec<usize>,
}

impl DegreeSequence {
    pub fn max_degree(&self) -> usize {
        self.degrees.first().copied().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.degrees.last().copied().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        self.max_degree() == self.min_degree()
    }
}

/// A partition of the vertex set into classes, ordered by smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinPartition {
    classes: Vec<VertexSet>,
    class_of: Vec<usize>,
}

impl TwinPartition {
    fn from_labels(labels: &[usize]) -> Self {
        // relabel so classes are numbered by first occurrence
        let mut remap = BTreeMap::new();
        let mut classes: Vec<VertexSet> = Vec::new();
        let mut class_of = vec![0; labels.len()];
        for (v, &l) in labels.iter().enumerate() {
            let id = *remap.entry(l).or_insert_with(|| {
                classes.push(VertexSet::with_capacity(labels.len()));
                classes.len() - 1
            });
            classes[id].insert(v);
            class_of[v] = id;
        }
        Self { classes, class_of }
    }

    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn same_class(&self, u: usize, v: usize) -> bool {
        self.class_of[u] == self.class_of[v]
    }

    /// Classes with at least two members.
    pub fn nontrivial(&self) -> impl Iterator<Item = &VertexSet> {
        self.classes.iter().filter(|c| c.len() > 1)
    }
}

/// Finite simple undirected graph on vertices `0..n`.
///
/// Immutable once built. All-pairs distances are computed at construction,
/// so memory is `O(n^2)`.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<VertexSet>,
    neighbors: Vec<Vec<usize>>,
    dist: DistanceMatrix,
    disconnected_pair: Option<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse; self-loops and out-of-range indices are errors.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![VertexSet::with_capacity(n); n];
        let mut m = 0;
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if adj[u].insert(v) {
                adj[v].insert(u);
                m += 1;
            }
        }
        let neighbors: Vec<Vec<usize>> = adj.iter().map(VertexSet::to_vec).collect();
        let dist = bfs_all_pairs(n, &neighbors);
        let disconnected_pair =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).find(|&(u, v)| dist.get(u, v) == UNREACHABLE);
        Ok(Self { n, m, adj, neighbors, dist, disconnected_pair })
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    /// Open neighborhood `N(v)`.
    pub fn neighborhood(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// Closed neighborhood `N[v]`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.neighbors.iter().enumerate().flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_connected(&self) -> bool {
        self.disconnected_pair.is_none()
    }

    /// Fails with [`Error::Disconnected`] naming the first unreachable pair.
    pub fn require_connected(&self) -> Result<()> {
        match self.disconnected_pair {
            None => Ok(()),
            Some((u, v)) => Err(Error::Disconnected(u, v)),
        }
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn all_pairs_distances(&self) -> Result<&DistanceMatrix> {
        self.require_connected()?;
        Ok(&self.dist)
    }

    /// Hop distance, [`UNREACHABLE`] across components.
    #[inline]
    pub fn distance(&self, u: usize, v: usize) -> u32 {
        self.dist.get(u, v)
    }

    pub(crate) fn distance_row(&self, u: usize) -> &[u32] {
        self.dist.row(u)
    }

    pub fn diameter(&self) -> Result<u32> {
        Ok(self.all_pairs_distances()?.max())
    }

    /// Shortest cycle length by BFS from every root: a non-tree edge `xy`
    /// closes a walk of length `d(r,x) + d(r,y) + 1` through the root, and the
    /// minimum over all roots is exactly the girth.
    pub fn girth(&self) -> Girth {
        let n = self.n;
        let mut best = u32::MAX;
        let mut depth = vec![UNREACHABLE; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            depth.iter_mut().for_each(|d| *d = UNREACHABLE);
            depth[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            while let Some(x) = queue.pop_front() {
                // no shorter cycle can be discovered deeper in this tree
                if 2 * depth[x] + 1 >= best {
                    break;
                }
                for &y in &self.neighbors[x] {
                    if depth[y] == UNREACHABLE {
                        depth[y] = depth[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y {
                        best = best.min(depth[x] + depth[y] + 1);
                    }
                }
            }
        }
        if best == u32::MAX {
            Girth::Acyclic
        } else {
            Girth::Finite(best)
        }
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence { degrees }
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Classes of vertices with identical open neighborhoods.
    pub fn false_twin_partition(&self) -> TwinPartition {
        let mut key: BTreeMap<&VertexSet, usize> = BTreeMap::new();
        let labels: Vec<usize> = (0..self.n).map(|v| *key.entry(&self.adj[v]).or_insert(v)).collect();
        TwinPartition::from_labels(&labels)
    }

    /// Classes of the twin relation `N(u) \ {v} = N(v) \ {u}`, i.e. vertices
    /// that are false twins or true twins (`N[u] = N[v]`).
    ///
    /// A vertex cannot have both a false twin and a true twin, so the union
    /// of the two partitions is again a partition.
    pub fn twin_partition(&self) -> TwinPartition {
        let closed: Vec<VertexSet> = (0..self.n).map(|v| self.closed_neighborhood(v)).collect();
        let mut false_key: BTreeMap<&VertexSet, usize> = BTreeMap::new();
        let mut true_key: BTreeMap<&VertexSet, usize> = BTreeMap::new();
        let mut labels = vec![0; self.n];
        for v in 0..self.n {
            let f = *false_key.entry(&self.adj[v]).or_insert(v);
            let t = *true_key.entry(&closed[v]).or_insert(v);
            labels[v] = f.min(t);
        }
        TwinPartition::from_labels(&labels)
    }

    /// Dense Laplacian `L = D - A`, row-major.
    pub fn laplacian(&self) -> Vec<f64> {
        let n = self.n;
        let mut l = vec![0.0; n * n];
        for u in 0..n {
            l[u * n + u] = self.degree(u) as f64;
            for &v in &self.neighbors[u] {
                l[u * n + v] = -1.0;
            }
        }
        l
    }

    /// Largest Laplacian eigenvalue `mu_n`.
    pub fn laplacian_max_eigenvalue(&self) -> Result<f64> {
        if self.n < 2 {
            return Err(Error::OrderTooSmall { what: "Laplacian spectral radius", min: 2, n: self.n });
        }
        let eig = symmetric_eigenvalues(self.laplacian(), self.n);
        Ok(eig[self.n - 1])
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

fn bfs_all_pairs(n: usize, neighbors: &[Vec<usize>]) -> DistanceMatrix {
    let mut data = vec![UNREACHABLE; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut data[s * n..(s + 1) * n];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = row[u];
            for &v in &neighbors[u] {
                if row[v] == UNREACHABLE {
                    row[v] = du + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    DistanceMatrix { n, data }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn build_triangle() {
        let g = Graph::new(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(g.size(), 3);
        assert!((0..3).all(|v| g.degree(v) == 2));
    }

    #[test]
    fn build_collapses_duplicates() {
        let g = Graph::new(2, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.size(), 1);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(Graph::new(3, [(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(Graph::new(3, [(0, 3)]), Err(Error::VertexOutOfRange { vertex: 3, n: 3 }));
        assert_eq!(Graph::new(0, []), Err(Error::EmptyGraph));
    }

    #[test]
    fn distances_small() {
        let k4 = generators::complete(4).unwrap();
        let d = k4.all_pairs_distances().unwrap();
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(d.get(u, v), u32::from(u != v));
            }
        }
        let p3 = generators::path(3).unwrap();
        assert_eq!(p3.distance(0, 2), 2);
        let c4 = generators::cycle(4).unwrap();
        assert_eq!(c4.distance(0, 2), 2);
        assert_eq!(c4.distance(1, 3), 2);
    }

    #[test]
    fn disconnected_is_flagged() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        assert_eq!(g.all_pairs_distances().unwrap_err(), Error::Disconnected(0, 2));
        assert!(g.diameter().is_err());
    }

    #[test]
    fn diameters() {
        assert_eq!(generators::complete(5).unwrap().diameter().unwrap(), 1);
        assert_eq!(generators::path(5).unwrap().diameter().unwrap(), 4);
        assert_eq!(generators::complete(1).unwrap().diameter().unwrap(), 0);
    }

    #[test]
    fn girths() {
        assert_eq!(generators::cycle(5).unwrap().girth(), Girth::Finite(5));
        assert_eq!(generators::complete(4).unwrap().girth(), Girth::Finite(3));
        assert_eq!(generators::path(4).unwrap().girth(), Girth::Acyclic);
        assert_eq!(generators::complete_bipartite(2, 3).unwrap().girth(), Girth::Finite(4));
        assert!(Girth::Acyclic.at_least(7));
    }

    #[test]
    fn degree_sequences() {
        let k23 = generators::complete_bipartite(2, 3).unwrap();
        assert_eq!(k23.degree_sequence().degrees, vec![3, 3, 2, 2, 2]);
        let c6 = generators::cycle(6).unwrap().degree_sequence();
        assert_eq!(c6.degrees, vec![2; 6]);
        assert!(c6.is_regular());
    }

    #[test]
    fn false_twins() {
        let k23 = generators::complete_bipartite(2, 3).unwrap().false_twin_partition();
        assert_eq!(k23.len(), 2);
        assert_eq!(k23.classes()[0].to_vec(), vec![0, 1]);
        assert_eq!(k23.classes()[1].to_vec(), vec![2, 3, 4]);

        let c4 = generators::cycle(4).unwrap().false_twin_partition();
        assert_eq!(c4.classes()[0].to_vec(), vec![0, 2]);
        assert_eq!(c4.classes()[1].to_vec(), vec![1, 3]);

        assert_eq!(generators::path(4).unwrap().false_twin_partition().len(), 4);
    }

    #[test]
    fn combined_twins() {
        // K4 minus edge 01: {0,1} false twins, {2,3} true twins
        let g = Graph::new(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let t = g.twin_partition();
        assert_eq!(t.len(), 2);
        assert!(t.same_class(0, 1) && t.same_class(2, 3));
        assert_eq!(generators::complete(5).unwrap().twin_partition().len(), 1);
    }

    #[test]
    fn spectral_radius() {
        let p2 = generators::path(2).unwrap();
        assert!((p2.laplacian_max_eigenvalue().unwrap() - 2.0).abs() < 1e-10);
        let k4 = generators::complete(4).unwrap();
        assert!((k4.laplacian_max_eigenvalue().unwrap() - 4.0).abs() < 1e-10);
        let k23 = generators::complete_bipartite(2, 3).unwrap();
        assert!((k23.laplacian_max_eigenvalue().unwrap() - 5.0).abs() < 1e-10);
        assert!(generators::complete(1).unwrap().laplacian_max_eigenvalue().is_err());
    }

    #[test]
    fn connectivity() {
        assert!(generators::complete(3).unwrap().is_connected());
        assert!(generators::path(10).unwrap().is_connected());
    }
}
