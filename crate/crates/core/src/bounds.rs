//! Lower bounds on `gamma(G)` and the upper bounds on `beta(G)` they imply
//! through `beta <= n - gamma`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::budget::Budget;
use crate::domination::domination_number;
use crate::error::{Error, Result};
use crate::graph::{Girth, Graph};
use crate::resolve::metric_dimension;

/// Slack subtracted before taking the ceiling of `n / mu`, so that a
/// quotient landing a hair above an integer is not rounded up.
pub const SPECTRAL_CEIL_SLACK: f64 = 1e-6;

/// Lower bounds on the domination number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GammaBound {
    /// `delta`, girth at least 5.
    MinDegree,
    /// `2(delta - 1)`, girth at least 6.
    TwiceMinDegreeLessTwo,
    /// `ceil(n / (1 + Delta))`.
    ClosedNeighborhoodCover,
    /// `min { k : k + d_1 + .. + d_k >= n }` over the non-increasing degrees.
    DegreeSequence,
    /// `n / mu_n`, rounded up.
    Spectral,
    /// `Delta`, when `delta >= 2` and girth at least 7.
    MaxDegree,
}

impl GammaBound {
    pub const ALL: [GammaBound; 6] = [
        GammaBound::MinDegree,
        GammaBound::TwiceMinDegreeLessTwo,
        GammaBound::ClosedNeighborhoodCover,
        GammaBound::DegreeSequence,
        GammaBound::Spectral,
        GammaBound::MaxDegree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GammaBound::MinDegree => "delta",
            GammaBound::TwiceMinDegreeLessTwo => "2(delta-1)",
            GammaBound::ClosedNeighborhoodCover => "ceil(n/(1+Delta))",
            GammaBound::DegreeSequence => "degree-sequence",
            GammaBound::Spectral => "ceil(n/mu)",
            GammaBound::MaxDegree => "Delta",
        }
    }

    pub fn condition(self) -> &'static str {
        match self {
            GammaBound::MinDegree => "girth >= 5",
            GammaBound::TwiceMinDegreeLessTwo => "girth >= 6",
            GammaBound::ClosedNeighborhoodCover | GammaBound::DegreeSequence => "always",
            GammaBound::Spectral => "n >= 2",
            GammaBound::MaxDegree => "delta >= 2 and girth >= 7",
        }
    }
}

/// Upper bounds on the metric dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BetaBound {
    /// `n - diam`.
    Diameter,
    /// `n - gamma`.
    Domination,
    /// `n - b` for a lower bound `b` on `gamma`.
    FromGamma(GammaBound),
}

impl BetaBound {
    pub fn name(self) -> &'static str {
        match self {
            BetaBound::Diameter => "n-diam",
            BetaBound::Domination => "n-gamma",
            BetaBound::FromGamma(b) => match b {
                GammaBound::MinDegree => "n-delta",
                GammaBound::TwiceMinDegreeLessTwo => "n-2delta+2",
                GammaBound::ClosedNeighborhoodCover => "n-ceil(n/(1+Delta))",
                GammaBound::DegreeSequence => "n-degree-sequence",
                GammaBound::Spectral => "n-n/mu",
                GammaBound::MaxDegree => "n-Delta",
            },
        }
    }

    pub fn condition(self) -> &'static str {
        match self {
            BetaBound::Diameter | BetaBound::Domination => "always",
            BetaBound::FromGamma(b) => b.condition(),
        }
    }
}

/// One bound. Inapplicable entries carry no value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundEntry<K> {
    pub kind: K,
    pub applicable: bool,
    pub value: Option<i64>,
    /// Un-rounded value, for the spectral bound only.
    pub real_value: Option<f64>,
}

pub type GammaEntry = BoundEntry<GammaBound>;
pub type BetaEntry = BoundEntry<BetaBound>;

impl<K> BoundEntry<K> {
    fn applicable(kind: K, value: i64) -> Self {
        Self { kind, applicable: true, value: Some(value), real_value: None }
    }

    fn inapplicable(kind: K) -> Self {
        Self { kind, applicable: false, value: None, real_value: None }
    }

    fn gated(kind: K, gate: bool, value: impl FnOnce() -> i64) -> Self {
        if gate {
            Self::applicable(kind, value())
        } else {
            Self::inapplicable(kind)
        }
    }
}

impl GammaEntry {
    pub fn name(&self) -> &'static str {
        self.kind.name()
    }
}

impl BetaEntry {
    pub fn name(&self) -> &'static str {
        self.kind.name()
    }
}

/// `min { k : k + d_1 + .. + d_k >= n }`.
pub fn degree_sequence_bound(degrees: &[usize]) -> usize {
    let n = degrees.len();
    let mut sum = 0;
    for (i, d) in degrees.iter().enumerate() {
        sum += d;
        if i + 1 + sum >= n {
            return i + 1;
        }
    }
    n
}

/// `ceil(x - slack)`.
pub fn guarded_ceil(x: f64) -> i64 {
    libm::ceil(x - SPECTRAL_CEIL_SLACK) as i64
}

/// `n - diam(G)`.
pub fn bound_diameter(g: &Graph) -> Result<BetaEntry> {
    let diam = g.diameter()?;
    Ok(BoundEntry::applicable(BetaBound::Diameter, g.order() as i64 - i64::from(diam)))
}

/// `n - gamma(G)`, given `gamma`.
pub fn bound_domination(g: &Graph, gamma: usize) -> BetaEntry {
    BoundEntry::applicable(BetaBound::Domination, (g.order() - gamma) as i64)
}

/// The six girth/degree/spectral lower bounds on `gamma`, each gated by its
/// condition. An acyclic graph passes every girth gate.
pub fn gamma_lower_bounds(g: &Graph) -> Result<Vec<GammaEntry>> {
    g.require_connected()?;
    let n = g.order();
    let girth = g.girth();
    let ds = g.degree_sequence();
    let (min_deg, max_deg) = (ds.min_degree() as i64, ds.max_degree() as i64);
    let mu = if n >= 2 { Some(g.laplacian_max_eigenvalue()?) } else { None };

    Ok(GammaBound::ALL
        .iter()
        .map(|&kind| match kind {
            GammaBound::MinDegree => BoundEntry::gated(kind, girth.at_least(5), || min_deg),
            GammaBound::TwiceMinDegreeLessTwo => BoundEntry::gated(kind, girth.at_least(6), || 2 * (min_deg - 1)),
            GammaBound::ClosedNeighborhoodCover => {
                BoundEntry::applicable(kind, n.div_ceil(1 + max_deg as usize) as i64)
            }
            GammaBound::DegreeSequence => BoundEntry::applicable(kind, degree_sequence_bound(&ds.degrees) as i64),
            GammaBound::Spectral => match mu {
                Some(mu) => {
                    let real = n as f64 / mu;
                    BoundEntry { kind, applicable: true, value: Some(guarded_ceil(real)), real_value: Some(real) }
                }
                None => BoundEntry::inapplicable(kind),
            },
            GammaBound::MaxDegree => BoundEntry::gated(kind, min_deg >= 2 && girth.at_least(7), || max_deg),
        })
        .collect())
}

/// `n - b` for every lower bound `b` on `gamma`, with identical gating.
/// The spectral entry also records the real value `n - n / mu`.
pub fn complement_bounds(g: &Graph) -> Result<Vec<BetaEntry>> {
    let n = g.order() as i64;
    Ok(gamma_lower_bounds(g)?
        .into_iter()
        .map(|e| BoundEntry {
            kind: BetaBound::FromGamma(e.kind),
            applicable: e.applicable,
            value: e.value.map(|v| n - v),
            real_value: e.real_value.map(|r| n as f64 - r),
        })
        .collect())
}

/// Outcome of an exact computation requested by a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exact {
    NotRequested,
    Value(usize),
    Timeout { upper_bound: usize },
}

impl Exact {
    pub fn value(self) -> Option<usize> {
        match self {
            Exact::Value(v) => Some(v),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub n: usize,
    pub girth: Girth,
    pub mu_max: Option<f64>,
    /// Upper bounds on `beta`: `n - gamma`, `n - diam`, then one per lower
    /// bound on `gamma`.
    pub beta_bounds: Vec<BetaEntry>,
    pub gamma_bounds: Vec<GammaEntry>,
    pub beta: Exact,
    pub gamma: Exact,
}

impl BoundReport {
    /// Smallest applicable upper bound on `beta` (first one on ties).
    pub fn tightest(&self) -> Option<&BetaEntry> {
        self.beta_bounds
            .iter()
            .filter(|e| e.applicable)
            .min_by_key(|e| e.value.expect("applicable entries have values"))
    }

    pub fn beta_bound(&self, kind: BetaBound) -> Option<&BetaEntry> {
        self.beta_bounds.iter().find(|e| e.kind == kind)
    }

    pub fn gamma_bound(&self, kind: GammaBound) -> Option<&GammaEntry> {
        self.gamma_bounds.iter().find(|e| e.kind == kind)
    }

    /// Applicable bounds contradicted by the exact values present.
    pub fn violations(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if let Some(beta) = self.beta.value() {
            for e in self.beta_bounds.iter().filter(|e| e.applicable) {
                if (beta as i64) > e.value.expect("applicable") {
                    out.push(e.name());
                }
            }
        }
        if let Some(gamma) = self.gamma.value() {
            for e in self.gamma_bounds.iter().filter(|e| e.applicable) {
                if (gamma as i64) < e.value.expect("applicable") {
                    out.push(e.name());
                }
            }
        }
        out
    }
}

/// Every bound, plus exact `beta` and `gamma` when `compute_exact` is set.
///
/// A timeout in either exact computation is recorded in that field only.
/// Without an exact `gamma` the `n - gamma` entry is inapplicable. With exact
/// values present, a violated bound is an anomaly.
pub fn bound_report(g: &Graph, compute_exact: bool, budget: Budget) -> Result<BoundReport> {
    g.require_connected()?;
    let run = |r: Result<usize>| -> Result<Exact> {
        match r {
            Ok(v) => Ok(Exact::Value(v)),
            Err(Error::Timeout { upper_bound, .. }) => Ok(Exact::Timeout { upper_bound }),
            Err(e) => Err(e),
        }
    };
    let (beta, gamma) = if compute_exact {
        (run(metric_dimension(g, budget).map(|b| b.beta))?, run(domination_number(g, budget).map(|d| d.gamma))?)
    } else {
        (Exact::NotRequested, Exact::NotRequested)
    };
    let report = assemble_report(g, beta, gamma)?;
    let bad = report.violations();
    if !bad.is_empty() {
        return Err(Error::Anomaly(format!("exact values violate bounds {bad:?}")));
    }
    Ok(report)
}

/// Builds the report around already known (or unknown) exact values,
/// without judging violations.
pub fn assemble_report(g: &Graph, beta: Exact, gamma: Exact) -> Result<BoundReport> {
    g.require_connected()?;
    let n = g.order();
    let mu_max = if n >= 2 { Some(g.laplacian_max_eigenvalue()?) } else { None };
    let mut beta_bounds = Vec::with_capacity(8);
    beta_bounds.push(match gamma.value() {
        Some(gm) => bound_domination(g, gm),
        None => BoundEntry::inapplicable(BetaBound::Domination),
    });
    beta_bounds.push(bound_diameter(g)?);
    beta_bounds.extend(complement_bounds(g)?);
    Ok(BoundReport { n, girth: g.girth(), mu_max, beta_bounds, gamma_bounds: gamma_lower_bounds(g)?, beta, gamma })
}

impl fmt::Display for GammaBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for BetaBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
