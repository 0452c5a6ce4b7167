//! Irreducibility of tensor products of fundamental modules.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::LatticeConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FundamentalFactor {
    pub i: i64,
    pub xi: i64,
}

impl FundamentalFactor {
    pub fn new(i: i64, xi: i64) -> Self {
        Self { i, xi }
    }
}

/// `L(Y[i1,xi1]) (x) L(Y[i2,xi2])` is simple iff no `t` in
/// `1..=min(i1, i2, n+1-i1, n+1-i2)` has `|xi2 - xi1| = +-(2t + |i2 - i1|) mod 2 ell`.
pub fn pairwise_irreducible(f1: FundamentalFactor, f2: FundamentalFactor, cfg: &LatticeConfig) -> bool {
    let n = cfg.n;
    let period = cfg.period();
    let top = f1.i.min(f2.i).min(n + 1 - f1.i).min(n + 1 - f2.i);
    let gap = (f2.xi - f1.xi).abs();
    let di = (f2.i - f1.i).abs();
    (1..=top).all(|t| {
        let w = 2 * t + di;
        (gap - w).rem_euclid(period) != 0 && (gap + w).rem_euclid(period) != 0
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    /// Some pair fails the criterion, so the product is reducible.
    ReducibleCertified,
    /// Every pair passes; the product may still be reducible when there
    /// are three or more factors.
    PairwiseConsistent,
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::ReducibleCertified => "reducible-certified",
            Verdict::PairwiseConsistent => "pairwise-consistent",
        }
    }

    pub fn passes(&self) -> bool {
        matches!(self, Verdict::PairwiseConsistent)
    }
}

/// Pairwise necessary condition for simplicity of a product of fundamentals.
pub fn tuple_irreducibility_necessary(factors: &[FundamentalFactor], cfg: &LatticeConfig) -> Result<Verdict> {
    if factors.len() < 2 {
        return Err(Error::Precondition("need at least two factors".into()));
    }
    for f in factors {
        cfg.check_node(f.i)?;
    }
    for (a, f1) in factors.iter().enumerate() {
        for f2 in &factors[a + 1..] {
            if !pairwise_irreducible(*f1, *f2, cfg) {
                return Ok(Verdict::ReducibleCertified);
            }
        }
    }
    Ok(Verdict::PairwiseConsistent)
}
