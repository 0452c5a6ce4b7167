//! Characters of simple modules whose highest weight has degree two.
//!
//! A same-parity pair is first brought to small values of indices, then the
//! character is the non-overlapping pair sum minus a correction built from
//! translated path families.  The correction recurses into smaller degree-two
//! characters; results are memoized process-wide.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{Character, LatticeConfig, Monomial};
use crate::paths::tuple_sum_nonoverlapping;
use crate::snake::{fundamental_eps_character, h0, prime_bound};

/// A degree-two pair with small values of indices:
/// `k + h0(i,j) <= vbar < k + h0(i,j) + 2 ell`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NormalizedPair {
    pub i: i64,
    pub k: i64,
    pub j: i64,
    pub vbar: i64,
    pub swapped: bool,
}

/// One admissible translation of the anchor's path family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranslationTarget {
    pub t: usize,
    pub kprime: i64,
    pub a: i64,
    pub alpha: i64,
    pub b: i64,
    pub beta: i64,
}

impl TranslationTarget {
    pub fn monomial(&self, cfg: &LatticeConfig) -> Monomial {
        Monomial::from_points([(self.a, self.alpha), (self.b, self.beta)], cfg)
    }
}

/// The dominant monomial `Y[a,alpha] Y[b,beta]` of a second translation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SecondStage {
    pub t: usize,
    pub a: i64,
    pub alpha: i64,
    pub b: i64,
    pub beta: i64,
}

impl SecondStage {
    pub fn monomial(&self, cfg: &LatticeConfig) -> Monomial {
        Monomial::from_points([(self.a, self.alpha), (self.b, self.beta)], cfg)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CorrectionCase {
    Empty,
    Below2L,
    Exact2RhoL,
    Strict(i64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorrectionPlan {
    pub case: CorrectionCase,
    pub rho: i64,
    pub gamma: i64,
    pub bprime: usize,
    pub targets: Vec<TranslationTarget>,
    pub second_stage: Vec<SecondStage>,
}

fn same_parity(i: i64, k: i64, j: i64, v: i64) -> bool {
    ((j - i).abs() - (k - v).abs()).rem_euclid(2) == 0
}

/// The representative of `v mod 2 ell` in `[lo, lo + 2 ell)`.
fn small_representative(v: i64, lo: i64, period: i64) -> i64 {
    lo + (v - lo).rem_euclid(period)
}

pub fn normalize_small_values(i: i64, k: i64, j: i64, v: i64, cfg: &LatticeConfig) -> Result<NormalizedPair> {
    cfg.require_root_of_unity()?;
    cfg.check_node(i)?;
    cfg.check_node(j)?;
    if !same_parity(i, k, j, v) {
        return Err(Error::ParityMismatch);
    }
    let (kc, vc) = (cfg.canonical_index(k), cfg.canonical_index(v));
    let swapped = (vc, j) < (kc, i);
    let (i, k, j, v) = if swapped { (j, vc, i, kc) } else { (i, kc, j, vc) };
    // A squared variable: the second copy moves up by one period.
    let v = if i == j && k == v { v + cfg.period() } else { v };
    let vbar = small_representative(v, k + h0(i, j), cfg.period());
    Ok(NormalizedPair { i, k, j, vbar, swapped })
}

/// Translations of the anchor's paths into the prime window of `(j, vbar)`.
pub fn translation_targets(np: &NormalizedPair, cfg: &LatticeConfig) -> Vec<TranslationTarget> {
    let NormalizedPair { i, k, j, vbar, .. } = *np;
    let base = h0(i, j);
    let period = cfg.period();
    let mut out = Vec::new();
    let mut kp = vbar + base;
    while kp <= vbar + prime_bound(i, j, cfg.n) {
        if (kp - k).rem_euclid(period) == 0 {
            let r = (kp - vbar - base) / 2 + 1;
            let (a, alpha, b, beta) = if i <= j { (i - r, kp - r, j + r, vbar + r) } else { (j - r, vbar + r, i + r, kp - r) };
            out.push(TranslationTarget { t: out.len() + 1, kprime: kp, a, alpha, b, beta });
        }
        kp += 2;
    }
    out
}

fn exact_div(num: BigInt, den: BigInt) -> Result<BigInt> {
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::Internal(format!("coefficient {num}/{den} is not integral")));
    }
    Ok(q)
}

fn factorial(m: i64) -> BigInt {
    (1..=m).fold(BigInt::one(), |acc, x| acc * x)
}

fn product(range: std::ops::RangeInclusive<i64>, offset: i64) -> BigInt {
    range.fold(BigInt::one(), |acc, s| acc * (offset + s))
}

pub fn e_coeff(t: i64) -> Result<BigInt> {
    if t < 1 {
        return Err(Error::Precondition(format!("e({t}) is undefined")));
    }
    exact_div(product(1..=t - 2, t), factorial(t - 1))
}

pub fn f_coeff(rho: i64, t: i64) -> Result<BigInt> {
    if t < 1 {
        return Err(Error::Precondition(format!("f({t}) is undefined")));
    }
    exact_div(BigInt::from(rho) * product(1..=t - 1, rho + t), factorial(t))
}

pub fn g_coeff(rho: i64, t: i64) -> Result<BigInt> {
    if t < 0 {
        return Err(Error::Precondition(format!("g({t}) is undefined")));
    }
    if t == 0 {
        return Ok(BigInt::one());
    }
    exact_div(BigInt::from(rho + 1) * product(2..=t, rho + t), factorial(t))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coefficients {
    pub e: Option<BigInt>,
    pub f: Option<BigInt>,
    pub g: BigInt,
}

/// `e(t)`, `f(t)`, `g(t)`; `e` and `f` are absent at `t = 0`.
pub fn coefficients(rho: i64, t: i64) -> Result<Coefficients> {
    let (e, f) = if t >= 1 { (Some(e_coeff(t)?), Some(f_coeff(rho, t)?)) } else { (None, None) };
    Ok(Coefficients { e, f, g: g_coeff(rho, t)? })
}

pub fn plan_correction(np: &NormalizedPair, cfg: &LatticeConfig) -> CorrectionPlan {
    let targets = translation_targets(np, cfg);
    let r = targets.len();
    let period = cfg.period();
    let d = (np.j - np.i).abs() + np.vbar - np.k;
    let rho = d.div_euclid(period);
    let gamma = d.rem_euclid(period) / 2;
    let case = if r == 0 {
        CorrectionCase::Empty
    } else if d < period {
        CorrectionCase::Below2L
    } else if d % period == 0 {
        CorrectionCase::Exact2RhoL
    } else {
        CorrectionCase::Strict(rho)
    };
    let mut bprime = r;
    let mut second_stage = Vec::new();
    if let CorrectionCase::Strict(_) = case {
        let on_board = |x: i64| (0..=cfg.n + 1).contains(&x);
        let last = targets[r - 1];
        if !(on_board(last.a - gamma) && on_board(last.b + gamma)) {
            bprime = r - 1;
        }
        for tt in &targets[..bprime] {
            if tt.t < r && !(on_board(tt.a - gamma) && on_board(tt.b + gamma)) {
                log::warn!(
                    "second translation {} leaves the board: nodes {} and {}",
                    tt.t,
                    tt.a - gamma,
                    tt.b + gamma
                );
            }
            let hh = h0(tt.a, tt.b);
            let (alpha, beta) = if np.i <= np.j {
                let abar = small_representative(tt.alpha, tt.beta + hh, period);
                (abar - gamma, tt.beta + gamma)
            } else {
                let bbar = small_representative(tt.beta, tt.alpha + hh, period);
                (tt.alpha + gamma, bbar - gamma)
            };
            second_stage.push(SecondStage { t: tt.t, a: tt.a - gamma, alpha, b: tt.b + gamma, beta });
        }
    }
    CorrectionPlan { case, rho, gamma, bprime, targets, second_stage }
}

/// The correction subtracted from the pair sum.
pub fn chi_correction(np: &NormalizedPair, cfg: &LatticeConfig, depth: usize) -> Result<Character> {
    let cap = (cfg.n + 2) as usize;
    if depth > cap {
        return Err(Error::Nontermination(cap));
    }
    let plan = plan_correction(np, cfg);
    let mut out = Character::zero();
    let mut add = |coeff: BigInt, points: [(i64, i64); 2]| -> Result<()> {
        let ch = char_of_points(&points, cfg, depth + 1)?;
        out = &out + &ch.scale(&coeff);
        Ok(())
    };
    match plan.case {
        CorrectionCase::Empty => {}
        CorrectionCase::Below2L => {
            for tt in &plan.targets {
                add(e_coeff(tt.t as i64)?, [(tt.a, tt.alpha), (tt.b, tt.beta)])?;
            }
        }
        CorrectionCase::Exact2RhoL => {
            for tt in &plan.targets {
                add(f_coeff(plan.rho, tt.t as i64)?, [(tt.a, tt.alpha), (tt.b, tt.beta)])?;
            }
        }
        CorrectionCase::Strict(rho) => {
            for m in &plan.second_stage {
                add(f_coeff(rho, m.t as i64)?, [(m.a, m.alpha), (m.b, m.beta)])?;
            }
            for (t, tt) in plan.targets.iter().enumerate() {
                add(g_coeff(rho, t as i64)?, [(tt.a, tt.alpha), (tt.b, tt.beta)])?;
            }
        }
    }
    Ok(out)
}

/// Character of the simple module whose highest weight is the product of
/// the given points, for at most two points on the board.
fn char_of_points(points: &[(i64, i64)], cfg: &LatticeConfig, depth: usize) -> Result<Character> {
    let live: Vec<(i64, i64)> = points.iter().copied().filter(|&(a, _)| (1..=cfg.n).contains(&a)).collect();
    match live.as_slice() {
        [] => Ok(Character::one()),
        [(a, s)] => fundamental_eps_character(*a, *s, cfg),
        [(a, s), (b, t)] => degree2_at_depth(*a, *s, *b, *t, cfg, depth),
        _ => Err(Error::Internal("inner character of degree above two".into())),
    }
}

type MemoKey = (i64, i64, i64, i64, i64, i64);

fn memo() -> &'static RwLock<HashMap<MemoKey, Character>> {
    static MEMO: OnceLock<RwLock<HashMap<MemoKey, Character>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// The pair sum over the normalized pair.
pub fn pair_sum(np: &NormalizedPair, cfg: &LatticeConfig) -> Result<Character> {
    tuple_sum_nonoverlapping(&[(np.i, np.k), (np.j, np.vbar)], cfg)
}

pub fn degree2_char(i: i64, k: i64, j: i64, v: i64, cfg: &LatticeConfig) -> Result<Character> {
    degree2_at_depth(i, k, j, v, cfg, 0)
}

fn degree2_at_depth(i: i64, k: i64, j: i64, v: i64, cfg: &LatticeConfig, depth: usize) -> Result<Character> {
    cfg.require_root_of_unity()?;
    cfg.check_node(i)?;
    cfg.check_node(j)?;
    if !same_parity(i, k, j, v) {
        return Ok(&fundamental_eps_character(i, k, cfg)? * &fundamental_eps_character(j, v, cfg)?);
    }
    let np = normalize_small_values(i, k, j, v, cfg)?;
    let key = (cfg.n, cfg.ell, np.i, np.k, np.j, cfg.canonical_index(np.vbar));
    if let Some(hit) = memo().read().expect("memo lock").get(&key) {
        return Ok(hit.clone());
    }
    let value = &pair_sum(&np, cfg)? - &chi_correction(&np, cfg, depth)?;
    let mut table = memo().write().expect("memo lock");
    Ok(table.entry(key).or_insert(value).clone())
}

/// Dominant monomials reached by translating the second factor's paths
/// downward into the prime window of the first, for `h >= h0 + 2 ell`.
pub fn type1_translation_dominants(i: i64, k: i64, j: i64, v: i64, cfg: &LatticeConfig) -> Vec<Monomial> {
    if !cfg.is_root_of_unity() || cfg.check_node(i).is_err() || cfg.check_node(j).is_err() || !same_parity(i, k, j, v) {
        return Vec::new();
    }
    let (i, k, j, v) = if k <= v { (i, k, j, v) } else { (j, v, i, k) };
    let base = h0(i, j);
    let period = cfg.period();
    if v - k < base + period {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut vp = k + base;
    while vp <= k + prime_bound(i, j, cfg.n) && vp < v {
        if (v - vp).rem_euclid(period) == 0 {
            let r = (vp - k - base) / 2 + 1;
            let pts = if i <= j { [(i - r, k + r), (j + r, vp - r)] } else { [(j - r, vp - r), (i + r, k + r)] };
            out.push(Monomial::from_points(pts, cfg));
        }
        vp += 2;
    }
    out
}
