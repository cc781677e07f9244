//! Exhaustive enumeration of connected labeled graphs.

use alloc::vec::Vec;

use crate::graph::Graph;

/// Vertex pairs `(u, v)`, `u < v`, in lexicographic order; bit `i` of an
/// edge mask selects pair `i`.
pub fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn mask_connected(n: usize, pairs: &[(usize, usize)], mask: u64) -> bool {
    // union-find over at most a handful of vertices
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut components = n;
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                parent[a] = b;
                components -= 1;
            }
        }
    }
    components == 1
}

/// Every connected labeled graph on exactly `n` vertices, by increasing edge
/// mask. Practical for `n <= 7`.
pub fn connected_graphs(n: usize) -> impl Iterator<Item = (u64, Graph)> {
    assert!((1..=11).contains(&n), "labeled enumeration supports 1 <= n <= 11");
    let pairs = vertex_pairs(n);
    let total = 1u64 << pairs.len();
    (0..total).filter_map(move |mask| {
        if !mask_connected(n, &pairs, mask) {
            return None;
        }
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        Some((mask, Graph::new(n, edges).expect("pairs are valid")))
    })
}

/// Connected labeled graphs on `1..=max_n` vertices, smallest order first.
pub fn connected_graphs_upto(max_n: usize) -> impl Iterator<Item = Graph> {
    (1..=max_n).flat_map(|n| connected_graphs(n).map(|(_, g)| g))
}
