//! Ambient parameters and the Laurent-monomial / character ring.
//!
//! Spectral indices are reduced into `[0, 2ell)` at construction in
//! root-of-unity mode, and variables on the boundary nodes `0` and `n+1`
//! are never stored.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Mode {
    RootOfUnity,
    GenericQ,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticeConfig {
    pub n: i64,
    pub ell: i64,
    pub mode: Mode,
}

impl LatticeConfig {
    pub fn new(n: i64, ell: i64, mode: Mode) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidConfig(format!("rank n = {n} must be at least 1")));
        }
        if ell < 2 {
            return Err(Error::InvalidConfig(format!("ell = {ell} must be at least 2")));
        }
        Ok(Self { n, ell, mode })
    }

    pub fn eps(n: i64, ell: i64) -> Result<Self> {
        Self::new(n, ell, Mode::RootOfUnity)
    }

    pub fn generic(n: i64, ell: i64) -> Result<Self> {
        Self::new(n, ell, Mode::GenericQ)
    }

    /// The period `2 ell` of spectral indices.
    pub fn period(&self) -> i64 {
        2 * self.ell
    }

    pub fn is_root_of_unity(&self) -> bool {
        self.mode == Mode::RootOfUnity
    }

    /// The same rank and order with the other index mode.
    pub fn with_mode(&self, mode: Mode) -> Self {
        Self { mode, ..*self }
    }

    pub fn canonical_index(&self, s: i64) -> i64 {
        match self.mode {
            Mode::RootOfUnity => s.rem_euclid(self.period()),
            Mode::GenericQ => s,
        }
    }

    pub fn check_node(&self, i: i64) -> Result<()> {
        if (1..=self.n).contains(&i) {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange { node: i, n: self.n })
        }
    }

    pub fn require_root_of_unity(&self) -> Result<()> {
        if self.is_root_of_unity() {
            Ok(())
        } else {
            Err(Error::RequiresRootOfUnity)
        }
    }
}

/// A Laurent monomial in the variables `Y[i,s]`.
///
/// Ordering is lexicographic on the sorted `(node, spectral, exponent)`
/// triples, which is the canonical term order used for output.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    factors: BTreeMap<(i64, i64), i64>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(i: i64, s: i64, cfg: &LatticeConfig) -> Self {
        Self::from_factors([(i, s, 1)], cfg)
    }

    /// Builds a monomial from `(node, spectral, exponent)` triples.
    /// Nodes outside `1..=n` are treated as the trivial variable.
    pub fn from_factors<I>(factors: I, cfg: &LatticeConfig) -> Self
    where
        I: IntoIterator<Item = (i64, i64, i64)>,
    {
        let mut out = BTreeMap::new();
        for (i, s, e) in factors {
            if !(1..=cfg.n).contains(&i) || e == 0 {
                continue;
            }
            *out.entry((i, cfg.canonical_index(s))).or_insert(0) += e;
        }
        out.retain(|_, e| *e != 0);
        Self { factors: out }
    }

    /// The monomial `Y[i1,s1] Y[i2,s2] ...` of a list of points.
    pub fn from_points<I>(points: I, cfg: &LatticeConfig) -> Self
    where
        I: IntoIterator<Item = (i64, i64)>,
    {
        Self::from_factors(points.into_iter().map(|(i, s)| (i, s, 1)), cfg)
    }

    /// Re-reduces the stored indices under another configuration.
    pub fn recanonicalize(&self, cfg: &LatticeConfig) -> Self {
        Self::from_factors(self.factors(), cfg)
    }

    pub fn factors(&self) -> impl Iterator<Item = (i64, i64, i64)> + '_ {
        self.factors.iter().map(|(&(i, s), &e)| (i, s, e))
    }

    pub fn exponent(&self, i: i64, s: i64) -> i64 {
        self.factors.get(&(i, s)).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Number of distinct variables.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Sum of all exponents.
    pub fn degree(&self) -> i64 {
        self.factors.values().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.factors.clone();
        for (&key, &e) in &other.factors {
            let slot = out.entry(key).or_insert(0);
            *slot += e;
            if *slot == 0 {
                out.remove(&key);
            }
        }
        Monomial { factors: out }
    }

    pub fn inverse(&self) -> Monomial {
        Monomial {
            factors: self.factors.iter().map(|(&k, &e)| (k, -e)).collect(),
        }
    }

    pub fn pow(&self, e: i64) -> Monomial {
        if e == 0 {
            return Monomial::one();
        }
        Monomial {
            factors: self.factors.iter().map(|(&k, &x)| (k, x * e)).collect(),
        }
    }

    pub fn is_dominant(&self) -> bool {
        self.factors.values().all(|&e| e >= 0)
    }

    pub fn is_antidominant(&self) -> bool {
        self.factors.values().all(|&e| e <= 0)
    }

    /// The points of a dominant monomial, repeated by multiplicity.
    pub fn points(&self) -> Vec<(i64, i64)> {
        let mut out = Vec::new();
        for (&(i, s), &e) in &self.factors {
            for _ in 0..e.max(0) {
                out.push((i, s));
            }
        }
        out
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (idx, (&(i, s), &e)) in self.factors.iter().enumerate() {
            if idx > 0 {
                write!(f, "*")?;
            }
            write!(f, "Y[{i},{s}]")?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// `A[i,s] = Y[i,s+1] Y[i,s-1] Y[i-1,s]^-1 Y[i+1,s]^-1`.
pub fn a_variable(i: i64, s: i64, cfg: &LatticeConfig) -> Monomial {
    Monomial::from_factors([(i, s + 1, 1), (i, s - 1, 1), (i - 1, s, -1), (i + 1, s, -1)], cfg)
}

/// An integer-coefficient formal sum of monomials.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Character {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Character {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_monomial(Monomial::one())
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(m, BigInt::one());
        Self { terms }
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (m, c) in terms {
            out.add_term(m, c.into());
        }
        out
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains_key(m)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, k: &BigInt) -> Character {
        if k.is_zero() {
            return Character::zero();
        }
        Character {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    /// Multiplies every monomial by `m`.
    pub fn shift(&self, m: &Monomial) -> Character {
        Character {
            terms: self.terms.iter().map(|(x, c)| (x.mul(m), c.clone())).collect(),
        }
    }

    /// Value at `Y = 1`: the total coefficient mass.
    pub fn dimension(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn dominant_terms(&self) -> Vec<(Monomial, BigInt)> {
        self.terms
            .iter()
            .filter(|(m, _)| m.is_dominant())
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect()
    }

    /// True iff there is exactly one dominant term and it has coefficient 1.
    pub fn is_special(&self) -> bool {
        let doms = self.dominant_terms();
        doms.len() == 1 && doms[0].1.is_one()
    }

    pub fn all_positive(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    pub fn recanonicalize(&self, cfg: &LatticeConfig) -> Character {
        Character::from_terms(self.terms.iter().map(|(m, c)| (m.recanonicalize(cfg), c.clone())))
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        Ok(())
    }
}

impl Add for &Character {
    type Output = Character;
    fn add(self, rhs: &Character) -> Character {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Character {
    type Output = Character;
    fn sub(self, rhs: &Character) -> Character {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &Character {
    type Output = Character;
    fn mul(self, rhs: &Character) -> Character {
        let mut out = Character::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }
}

impl Neg for &Character {
    type Output = Character;
    fn neg(self) -> Character {
        Character {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Character {
            type Output = Character;
            fn $method(self, rhs: Character) -> Character {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
