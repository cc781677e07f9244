//! Brute-force oracles. Nothing here calls into the solvers under test; they
//! only read the edge list of a graph.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use itertools::Itertools;
use metdim_core::Graph;
use num_bigint::BigInt;

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    let mut a = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

pub fn bfs_distances(adj: &[Vec<bool>]) -> Vec<Vec<Option<u32>>> {
    let n = adj.len();
    (0..n)
        .map(|s| {
            let mut d = vec![None; n];
            d[s] = Some(0);
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for v in 0..n {
                    if adj[u][v] && d[v].is_none() {
                        d[v] = Some(d[u].unwrap() + 1);
                        q.push_back(v);
                    }
                }
            }
            d
        })
        .collect()
}

/// Smallest resolving set by plain enumeration of all subsets, sizes
/// ascending, lexicographic within a size. Every vertex, landmark or not,
/// must get a distinct distance vector.
pub fn metric_dimension(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.order();
    let dist = bfs_distances(&adjacency(g));
    for k in 0..=n {
        for w in (0..n).combinations(k) {
            let reps: HashSet<Vec<Option<u32>>> = (0..n).map(|v| w.iter().map(|&x| dist[v][x]).collect()).collect();
            if reps.len() == n {
                return (k, w);
            }
        }
    }
    unreachable!("V resolves itself")
}

pub fn resolves(g: &Graph, w: &[usize]) -> bool {
    let n = g.order();
    let dist = bfs_distances(&adjacency(g));
    let reps: HashSet<Vec<Option<u32>>> = (0..n).map(|v| w.iter().map(|&x| dist[v][x]).collect()).collect();
    reps.len() == n
}

/// Smallest dominating set by plain enumeration.
pub fn domination_number(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.order();
    let adj = adjacency(g);
    for k in 1..=n {
        for s in (0..n).combinations(k) {
            if (0..n).all(|v| s.contains(&v) || s.iter().any(|&x| adj[v][x])) {
                return (k, s);
            }
        }
    }
    unreachable!("V dominates itself")
}

/// Shortest cycle by enumerating, for each edge `uv`, every simple path from
/// `v` back to `u` that avoids the edge itself.
pub fn girth(g: &Graph) -> Option<usize> {
    let adj = adjacency(g);
    let n = adj.len();
    fn walk(adj: &[Vec<bool>], target: usize, at: usize, len: usize, seen: &mut Vec<bool>, best: &mut Option<usize>) {
        let n = adj.len();
        for next in 0..n {
            if !adj[at][next] {
                continue;
            }
            if next == target && len >= 2 {
                let cycle = len + 1;
                if best.is_none_or(|b| cycle < b) {
                    *best = Some(cycle);
                }
            } else if next != target && !seen[next] {
                seen[next] = true;
                walk(adj, target, next, len + 1, seen, best);
                seen[next] = false;
            }
        }
    }
    let mut best = None;
    for u in 0..n {
        for v in u + 1..n {
            if adj[u][v] {
                let mut seen = vec![false; n];
                seen[u] = true;
                seen[v] = true;
                walk(&adj, u, v, 1, &mut seen, &mut best);
            }
        }
    }
    best
}

/// Characteristic polynomial `det(xI - M)` of an integer matrix by
/// Faddeev–LeVerrier, coefficients from `x^n` down to `x^0`.
pub fn char_poly(m: &[Vec<i64>]) -> Vec<i128> {
    let n = m.len();
    let mul = |a: &[Vec<i128>], b: &[Vec<i128>]| -> Vec<Vec<i128>> {
        (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
    };
    let mi: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut coeffs = vec![1i128];
    let mut mk = vec![vec![0i128; n]; n]; // M_0 = 0
    let mut c_prev = 1i128;
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = mul(&mi, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += c_prev;
        }
        mk = next;
        let amk = mul(&mi, &mk);
        let trace: i128 = (0..n).map(|i| amk[i][i]).sum();
        assert_eq!(trace % k as i128, 0);
        let c = -trace / k as i128;
        coeffs.push(c);
        c_prev = c;
    }
    coeffs
}

pub fn laplacian(g: &Graph) -> Vec<Vec<i64>> {
    let adj = adjacency(g);
    let n = adj.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        adj[i].iter().filter(|&&b| b).count() as i64
                    } else if adj[i][j] {
                        -1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect()
}

fn derivative(p: &[i128]) -> Vec<i128> {
    let d = p.len() - 1;
    p[..d].iter().enumerate().map(|(i, &c)| c * (d - i) as i128).collect()
}

/// `p(a / 2^s) * 2^(s * deg p)`, exactly.
fn eval_scaled(p: &[i128], a: &BigInt, s: u32) -> BigInt {
    let d = p.len() - 1;
    let mut acc = BigInt::from(0);
    for (i, &c) in p.iter().enumerate() {
        // term c * a^(d-i) * 2^(s*i)
        acc += BigInt::from(c) * a.pow((d - i) as u32) * (BigInt::from(1) << (s as usize * i));
    }
    acc
}

/// Largest root of a monic real-rooted polynomial, to within `2^-s`.
///
/// For real-rooted `p`, `x` lies strictly above the largest root iff every
/// derivative `p, p', .., p^(deg)` is positive at `x` (roots interlace), which
/// holds even for repeated roots. Bisection on that predicate runs over the
/// dyadic grid with exact big-integer evaluation.
pub fn largest_real_root(p: &[i128], upper: u64) -> f64 {
    const S: u32 = 40;
    let mut derivs = vec![p.to_vec()];
    while derivs.last().unwrap().len() > 1 {
        let d = derivative(derivs.last().unwrap());
        derivs.push(d);
    }
    let above = |a: &BigInt| derivs.iter().all(|q| eval_scaled(q, a, S) > BigInt::from(0));
    let mut lo = BigInt::from(-1); // not above
    let mut hi = BigInt::from(upper) << S as usize; // above
    assert!(above(&hi));
    while &hi - &lo > BigInt::from(1) {
        let mid: BigInt = (&lo + &hi) >> 1usize;
        if above(&mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    // hi / 2^S is within 2^-S above the root
    let (sign, digits) = hi.to_u64_digits();
    assert!(sign != num_bigint::Sign::Minus);
    let mut v = 0f64;
    for d in digits.iter().rev() {
        v = v * 18446744073709551616.0 + *d as f64;
    }
    v / (1u64 << S) as f64
}

pub fn laplacian_max_eigenvalue(g: &Graph) -> f64 {
    let n = g.order();
    largest_real_root(&char_poly(&laplacian(g)), 2 * n as u64 + 1)
}
