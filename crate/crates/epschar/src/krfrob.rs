//! Kirillov-Reshetikhin characters, the l-acyclic factorization and
//! Frobenius pullbacks of classical characters.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::degree2::degree2_char;
use crate::error::{Error, Result};
use crate::lattice::{Character, LatticeConfig, Monomial};
use crate::paths::tuple_sum_tube_disjoint;
use crate::snake::fundamental_eps_character;

/// `lambda = sum c_i omega_i`; `c[0]` is the multiplicity of `omega_1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassicalWeight {
    pub c: Vec<u32>,
}

impl ClassicalWeight {
    pub fn new(c: Vec<u32>) -> Self {
        Self { c }
    }

    pub fn fundamental(i: i64, mult: u32, n: i64) -> Self {
        let mut c = vec![0; n as usize];
        c[(i - 1) as usize] = mult;
        Self { c }
    }

    /// Row lengths `lambda_j = sum_{i >= j} c_i`, without trailing zeros.
    pub fn partition(&self) -> Vec<u32> {
        let mut rows: Vec<u32> = (0..self.c.len()).map(|j| self.c[j..].iter().sum()).collect();
        while rows.last() == Some(&0) {
            rows.pop();
        }
        rows
    }
}

/// A monomial in the bold variables, one multiplicity per node.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoldMonomial {
    pub mult: Vec<u32>,
    /// Parity of the spectral residues used at each node.
    pub offsets: Vec<i64>,
}

impl BoldMonomial {
    /// Offsets follow the class `i - s = class (mod 2)`.
    pub fn new(mult: Vec<u32>, class: i64, cfg: &LatticeConfig) -> Self {
        let offsets = (1..=cfg.n).map(|i| (i - class).rem_euclid(2)).collect();
        Self { mult, offsets }
    }

    pub fn trivial(cfg: &LatticeConfig) -> Self {
        Self::new(vec![0; cfg.n as usize], 0, cfg)
    }

    pub fn at_node(i: i64, mult: u32, class: i64, cfg: &LatticeConfig) -> Self {
        let mut m = vec![0; cfg.n as usize];
        m[(i - 1) as usize] = mult;
        Self::new(m, class, cfg)
    }

    pub fn is_trivial(&self) -> bool {
        self.mult.iter().all(|&m| m == 0)
    }

    pub fn weight(&self) -> ClassicalWeight {
        ClassicalWeight::new(self.mult.clone())
    }

    /// The bold variable at node `i` expanded into `ell` ordinary variables.
    pub fn bold_variable(&self, i: i64, cfg: &LatticeConfig) -> Monomial {
        let off = self.offsets[(i - 1) as usize];
        Monomial::from_points((0..cfg.ell).map(|t| (i, off + 2 * t)), cfg)
    }

    pub fn expansion(&self, cfg: &LatticeConfig) -> Monomial {
        let mut out = Monomial::one();
        for (idx, &m) in self.mult.iter().enumerate() {
            if m > 0 {
                out = out.mul(&self.bold_variable(idx as i64 + 1, cfg).pow(m as i64));
            }
        }
        out
    }

    /// True iff every used node agrees with a single parity class.
    pub fn single_orbit(&self) -> bool {
        let mut class = None;
        for (idx, (&m, &off)) in self.mult.iter().zip(&self.offsets).enumerate() {
            if m == 0 {
                continue;
            }
            let c = (idx as i64 + 1 - off).rem_euclid(2);
            if *class.get_or_insert(c) != c {
                return false;
            }
        }
        true
    }
}

/// A formal sum in `y_1..y_n`, keyed by exponent vectors.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ClassicalCharacter {
    pub terms: BTreeMap<Vec<i64>, BigInt>,
}

impl ClassicalCharacter {
    pub fn dimension(&self) -> BigInt {
        self.terms.values().sum()
    }
}

pub fn kr_char(i: i64, k: i64, z: i64, cfg: &LatticeConfig) -> Result<Character> {
    cfg.require_root_of_unity()?;
    if z < 1 || z > cfg.ell {
        return Err(Error::KrDegree { z, ell: cfg.ell });
    }
    let points: Vec<(i64, i64)> = (0..z).map(|t| (i, k + 2 * t)).collect();
    tuple_sum_tube_disjoint(&points, cfg)
}

/// Any degree, splitting `z = a ell + b` into a Frobenius part and a
/// string of length `b`.
pub fn kr_char_general(i: i64, k: i64, z: i64, cfg: &LatticeConfig) -> Result<Character> {
    cfg.require_root_of_unity()?;
    cfg.check_node(i)?;
    if z < 1 {
        return Err(Error::KrDegree { z, ell: cfg.ell });
    }
    let (a, b) = (z / cfg.ell, z % cfg.ell);
    if a == 0 {
        return kr_char(i, k, b, cfg);
    }
    let bold = BoldMonomial::at_node(i, a as u32, (i - k).rem_euclid(2), cfg);
    let front = frobenius_pullback(&bold, cfg)?;
    if b == 0 {
        Ok(front)
    } else {
        Ok(&front * &kr_char(i, k, b, cfg)?)
    }
}

/// Splits a dominant monomial as `m = m0 * expansion(m1)` with `m0`
/// not divisible by any bold variable.
pub fn acyclic_factor(m: &Monomial, cfg: &LatticeConfig) -> Result<(Monomial, BoldMonomial)> {
    cfg.require_root_of_unity()?;
    if !m.is_dominant() {
        return Err(Error::NotDominant(m.clone()));
    }
    let class = m.factors().next().map_or(0, |(i, s, _)| (i - s).rem_euclid(2));
    let mut bold = BoldMonomial::new(vec![0; cfg.n as usize], class, cfg);
    for (i, s, _) in m.factors() {
        let idx = (i - 1) as usize;
        let p = s.rem_euclid(2);
        let seen = m.factors().any(|(i2, s2, _)| i2 == i && s2.rem_euclid(2) != p);
        if seen {
            return Err(Error::MixedParity(m.clone()));
        }
        bold.offsets[idx] = p;
    }
    for i in 1..=cfg.n {
        let off = bold.offsets[(i - 1) as usize];
        let min = (0..cfg.ell).map(|t| m.exponent(i, off + 2 * t)).min().unwrap_or(0);
        bold.mult[(i - 1) as usize] = min.max(0) as u32;
    }
    let m0 = m.mul(&bold.expansion(cfg).inverse());
    Ok((m0, bold))
}

/// Character of the classical module `V_lambda` by semistandard tableaux
/// with entries `1..=n+1`.
pub fn classical_character(w: &ClassicalWeight, cfg: &LatticeConfig) -> ClassicalCharacter {
    let n = cfg.n as usize;
    let shape = w.partition();
    let mut cells = Vec::new();
    for (r, &len) in shape.iter().enumerate() {
        for c in 0..len as usize {
            cells.push((r, c));
        }
    }
    let col_height = |c: usize| shape.iter().filter(|&&len| len as usize > c).count();
    let mut grid: Vec<Vec<u32>> = shape.iter().map(|&len| vec![0; len as usize]).collect();
    let mut content = vec![0i64; n + 2];
    let mut counts: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();

    fn fill(
        idx: usize,
        cells: &[(usize, usize)],
        grid: &mut [Vec<u32>],
        content: &mut [i64],
        counts: &mut BTreeMap<Vec<i64>, BigInt>,
        top: u32,
        col_height: &dyn Fn(usize) -> usize,
    ) {
        if idx == cells.len() {
            let n = content.len() - 2;
            let exps: Vec<i64> = (1..=n).map(|i| content[i] - content[i + 1]).collect();
            *counts.entry(exps).or_default() += 1;
            return;
        }
        let (r, c) = cells[idx];
        let mut lo = 1;
        if c > 0 {
            lo = lo.max(grid[r][c - 1]);
        }
        if r > 0 {
            lo = lo.max(grid[r - 1][c] + 1);
        }
        // Leave room for the strictly increasing entries below.
        let hi = top - (col_height(c) - r - 1) as u32;
        for x in lo..=hi {
            grid[r][c] = x;
            content[x as usize] += 1;
            fill(idx + 1, cells, grid, content, counts, top, col_height);
            content[x as usize] -= 1;
        }
        grid[r][c] = 0;
    }

    if shape.len() <= n + 1 {
        fill(0, &cells, &mut grid, &mut content, &mut counts, (n + 1) as u32, &col_height);
    }
    ClassicalCharacter { terms: counts }
}

/// Replaces each `y_i` of the classical character by the bold variable at `i`.
pub fn frobenius_pullback(b: &BoldMonomial, cfg: &LatticeConfig) -> Result<Character> {
    cfg.require_root_of_unity()?;
    if b.is_trivial() {
        return Ok(Character::one());
    }
    let bold: Vec<Monomial> = (1..=cfg.n).map(|i| b.bold_variable(i, cfg)).collect();
    let classical = classical_character(&b.weight(), cfg);
    let mut out = Character::zero();
    for (exps, c) in &classical.terms {
        let mut m = Monomial::one();
        for (idx, &e) in exps.iter().enumerate() {
            if e != 0 {
                m = m.mul(&bold[idx].pow(e));
            }
        }
        out.add_term(m, c.clone());
    }
    Ok(out)
}

/// A single-node string `Y[i,k] Y[i,k+2] ... Y[i,k+2(z-1)]` up to reduction.
fn as_kr_string(m: &Monomial, cfg: &LatticeConfig) -> Option<(i64, i64, i64)> {
    let factors: Vec<(i64, i64, i64)> = m.factors().collect();
    let i = factors.first()?.0;
    if factors.iter().any(|&(a, _, e)| a != i || e != 1) {
        return None;
    }
    let z = factors.len() as i64;
    if z > cfg.ell {
        return None;
    }
    let period = cfg.period();
    let has = |s: i64| m.exponent(i, s.rem_euclid(period)) == 1;
    for &(_, s, _) in &factors {
        if (0..z).all(|t| has(s + 2 * t)) {
            return Some((i, s, z));
        }
    }
    None
}

/// The character of `L(m)` via `L(m0) (x) L(m1)` when `m0` lies in an
/// implemented family.
pub fn full_char(m: &Monomial, cfg: &LatticeConfig) -> Result<Character> {
    let (m0, m1) = acyclic_factor(m, cfg)?;
    if !m1.single_orbit() {
        return Err(Error::UnsupportedFamily(m.clone()));
    }
    let front = frobenius_pullback(&m1, cfg)?;
    let points = m0.points();
    let rest = match points.as_slice() {
        [] => Character::one(),
        [(i, k)] => fundamental_eps_character(*i, *k, cfg)?,
        [(i, k), (j, v)] => degree2_char(*i, *k, *j, *v, cfg)?,
        _ => match as_kr_string(&m0, cfg) {
            Some((i, k, z)) => kr_char(i, k, z, cfg)?,
            None => return Err(Error::UnsupportedFamily(m0)),
        },
    };
    Ok(&front * &rest)
}
