//! Named graph families and seeded random connected graphs.
//!
//! Random graphs use ChaCha8 seeded with `seed_from_u64(seed)`; the
//! `stream` argument selects an independent ChaCha stream, so a sweep can
//! hand graph `i` the stream `i` under one master seed and replay any single
//! graph in isolation.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Resampling cap for [`random_connected`].
pub const MAX_SAMPLING_ATTEMPTS: u32 = 10_000;

fn invalid(msg: String) -> Error {
    Error::InvalidParameter(msg)
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(invalid(format!("complete graph needs n >= 1, got {n}")));
    }
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_{s,t}` with sides `[0, s)` and `[s, s + t)`.
pub fn complete_bipartite(s: usize, t: usize) -> Result<Graph> {
    if s < 1 || t < 1 {
        return Err(invalid(format!("complete bipartite graph needs s, t >= 1, got {s}, {t}")));
    }
    Graph::new(s + t, (0..s).flat_map(|u| (s..s + t).map(move |v| (u, v))))
}

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(invalid(format!("path needs n >= 1, got {n}")));
    }
    Graph::new(n, (1..n).map(|v| (v - 1, v)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// `K_{1,t}` with center 0.
pub fn star(t: usize) -> Result<Graph> {
    if t < 1 {
        return Err(invalid(format!("star needs t >= 1, got {t}")));
    }
    Graph::new(t + 1, (1..=t).map(|v| (0, v)))
}

/// All `k`-subsets of `{1..n}` as bitmasks, in lexicographic order of
/// their sorted element lists.
pub fn k_subsets(n: usize, k: usize) -> Vec<u64> {
    fn rec(start: usize, n: usize, k: usize, cur: u64, out: &mut Vec<u64>) {
        if k == 0 {
            out.push(cur);
            return;
        }
        for e in start..=n - k {
            rec(e + 1, n, k - 1, cur | (1 << e), out);
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, 0, &mut out);
    }
    out
}

/// Kneser graph `KG(n, k)`: vertices are the `k`-subsets of `{1..n}` in
/// lexicographic order, adjacent when disjoint.
pub fn kneser(n: usize, k: usize) -> Result<Graph> {
    if k < 1 || n < 2 * k {
        return Err(invalid(format!("kneser needs n >= 2k >= 2, got n={n}, k={k}")));
    }
    if n > 63 {
        return Err(invalid(format!("kneser ground set too large: {n}")));
    }
    let subsets = k_subsets(n, k);
    let mut edges = Vec::new();
    for (i, a) in subsets.iter().enumerate() {
        for (j, b) in subsets.iter().enumerate().skip(i + 1) {
            if a & b == 0 {
                edges.push((i, j));
            }
        }
    }
    Graph::new(subsets.len(), edges)
}

pub fn petersen() -> Graph {
    kneser(5, 2).expect("KG(5,2) parameters are valid")
}

/// Wheel `W_k` (hub plus `k` rim vertices) with every spoke replaced by a
/// path of length three.
///
/// Numbering: hub is `0`; spoke `i` (`0 <= i < k`) owns `a_i = 1 + 3i`,
/// `b_i = 2 + 3i` and rim vertex `c_i = 3 + 3i`, with edges
/// `0-a_i`, `a_i-b_i`, `b_i-c_i` and rim edges `c_i-c_{(i+1) mod k}`.
pub fn subdivided_wheel(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(invalid(format!("subdivided wheel needs k >= 3, got {k}")));
    }
    let rim = |i: usize| 3 + 3 * (i % k);
    let mut edges = Vec::with_capacity(4 * k);
    for i in 0..k {
        let a = 1 + 3 * i;
        edges.push((0, a));
        edges.push((a, a + 1));
        edges.push((a + 1, a + 2));
        edges.push((rim(i), rim(i + 1)));
    }
    Graph::new(3 * k + 1, edges)
}

/// Single `G(n, p)` draw from `rng`: each pair `u < v`, in lexicographic
/// order, is an edge with probability `p`.
fn sample_gnp(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

/// Erdős–Rényi `G(n, p)` resampled until connected.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    random_connected_stream(n, p, seed, 0)
}

pub fn random_connected_stream(n: usize, p: f64, seed: u64, stream: u64) -> Result<Graph> {
    let mut rng = seeded_rng(seed, stream);
    random_connected_with(n, p, &mut rng)
}

pub fn seeded_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn random_connected_with(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Result<Graph> {
    if n < 1 {
        return Err(invalid(format!("random graph needs n >= 1, got {n}")));
    }
    if !(p > 0.0 && p <= 1.0) {
        return Err(invalid(format!("edge probability must lie in (0, 1], got {p}")));
    }
    for _ in 0..MAX_SAMPLING_ATTEMPTS {
        let g = sample_gnp(n, p, rng)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::SamplingFailed(MAX_SAMPLING_ATTEMPTS))
}

/// A named family with its parameters, as accepted on the command line.
#[derive(Debug, Clone, PartialEq)]
pub enum FamilySpec {
    Complete { n: usize },
    CompleteBipartite { s: usize, t: usize },
    Path { n: usize },
    Cycle { n: usize },
    Star { t: usize },
    Kneser { n: usize, k: usize },
    SubdividedWheel { k: usize },
    RandomConnected { n: usize, p: f64, seed: u64 },
}

impl FamilySpec {
    pub const FAMILIES: [&'static str; 8] =
        ["complete", "complete_bipartite", "path", "cycle", "star", "kneser", "subdivided_wheel", "random_connected"];

    /// Parses `family` and its positional parameters. `random_connected`
    /// takes `n p`; its seed comes from `seed` (default 0).
    pub fn parse(family: &str, params: &[&str], seed: Option<u64>) -> Result<Self> {
        fn int(s: &str) -> Result<usize> {
            s.parse().map_err(|_| invalid(format!("expected a non-negative integer, got {s:?}")))
        }
        let arity = |want: usize| {
            if params.len() == want {
                Ok(())
            } else {
                Err(invalid(format!("family {family} takes {want} parameter(s), got {}", params.len())))
            }
        };
        let spec = match family {
            "complete" => {
                arity(1)?;
                FamilySpec::Complete { n: int(params[0])? }
            }
            "complete_bipartite" => {
                arity(2)?;
                FamilySpec::CompleteBipartite { s: int(params[0])?, t: int(params[1])? }
            }
            "path" => {
                arity(1)?;
                FamilySpec::Path { n: int(params[0])? }
            }
            "cycle" => {
                arity(1)?;
                FamilySpec::Cycle { n: int(params[0])? }
            }
            "star" => {
                arity(1)?;
                FamilySpec::Star { t: int(params[0])? }
            }
            "kneser" => {
                arity(2)?;
                FamilySpec::Kneser { n: int(params[0])?, k: int(params[1])? }
            }
            "subdivided_wheel" => {
                arity(1)?;
                FamilySpec::SubdividedWheel { k: int(params[0])? }
            }
            "random_connected" => {
                arity(2)?;
                let p =
                    params[1].parse().map_err(|_| invalid(format!("expected a probability, got {:?}", params[1])))?;
                FamilySpec::RandomConnected { n: int(params[0])?, p, seed: seed.unwrap_or(0) }
            }
            other => return Err(invalid(format!("unknown family {other:?}"))),
        };
        Ok(spec)
    }

    pub fn build(&self) -> Result<Graph> {
        match *self {
            FamilySpec::Complete { n } => complete(n),
            FamilySpec::CompleteBipartite { s, t } => complete_bipartite(s, t),
            FamilySpec::Path { n } => path(n),
            FamilySpec::Cycle { n } => cycle(n),
            FamilySpec::Star { t } => star(t),
            FamilySpec::Kneser { n, k } => kneser(n, k),
            FamilySpec::SubdividedWheel { k } => subdivided_wheel(k),
            FamilySpec::RandomConnected { n, p, seed } => random_connected(n, p, seed),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Complete { n } => write!(f, "complete {n}"),
            FamilySpec::CompleteBipartite { s, t } => write!(f, "complete_bipartite {s} {t}"),
            FamilySpec::Path { n } => write!(f, "path {n}"),
            FamilySpec::Cycle { n } => write!(f, "cycle {n}"),
            FamilySpec::Star { t } => write!(f, "star {t}"),
            FamilySpec::Kneser { n, k } => write!(f, "kneser {n} {k}"),
            FamilySpec::SubdividedWheel { k } => write!(f, "subdivided_wheel {k}"),
            FamilySpec::RandomConnected { n, p, seed } => {
                write!(f, "random_connected {n} {p} --seed {seed}")
            }
        }
    }
}
