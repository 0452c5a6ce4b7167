//! Snake positions, prime-snake windows and conversion of dominant
//! monomials into snakes.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{Character, LatticeConfig, Monomial};
use crate::paths::tuple_sum_nonoverlapping;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SnakePoint {
    pub i: i64,
    pub k: i64,
}

impl SnakePoint {
    pub fn new(i: i64, k: i64) -> Self {
        Self { i, k }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Snake {
    pub points: Vec<SnakePoint>,
}

impl Snake {
    pub fn new(points: Vec<SnakePoint>) -> Self {
        Self { points }
    }

    pub fn as_pairs(&self) -> Vec<(i64, i64)> {
        self.points.iter().map(|p| (p.i, p.k)).collect()
    }

    /// The product of the points' variables under `cfg`.
    pub fn monomial(&self, cfg: &LatticeConfig) -> Monomial {
        Monomial::from_points(self.as_pairs(), cfg)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnakeClass {
    pub is_snake: bool,
    pub is_minimal: bool,
    pub is_prime: bool,
}

pub fn h0(i: i64, ip: i64) -> i64 {
    (ip - i).abs() + 2
}

pub fn h(k: i64, kp: i64) -> i64 {
    (kp - k).abs()
}

/// Upper end of the prime window for the node pair `(i, j)`.
pub fn prime_bound(i: i64, j: i64, n: i64) -> i64 {
    (2 * n + 2 - i - j).min(i + j)
}

/// The spectral indices `k'` with `(j, k')` in prime snake position
/// with respect to `(i, k)`, ascending.
pub fn prime_snake_window(i: i64, k: i64, j: i64, cfg: &LatticeConfig) -> Result<Vec<i64>> {
    cfg.check_node(i)?;
    cfg.check_node(j)?;
    let lo = (i - j).abs() + 2;
    let hi = prime_bound(i, j, cfg.n);
    Ok((lo..=hi).step_by(2).map(|d| k + d).collect())
}

pub fn classify(points: &[SnakePoint], cfg: &LatticeConfig) -> SnakeClass {
    let mut class = SnakeClass { is_snake: true, is_minimal: true, is_prime: true };
    for w in points.windows(2) {
        let (p, q) = (w[0], w[1]);
        let di = (q.i - p.i).abs();
        let d = q.k - p.k;
        if d < di + 2 || (d - di).rem_euclid(2) != 0 {
            return SnakeClass { is_snake: false, is_minimal: false, is_prime: false };
        }
        if d != di + 2 {
            class.is_minimal = false;
        }
        if d > prime_bound(p.i, q.i, cfg.n) {
            class.is_prime = false;
        }
    }
    class
}

/// A snake whose monomial reduces, mod `2 ell`, to the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Snakified {
    pub snake: Snake,
    /// The snake's monomial with unreduced spectral indices.
    pub unreduced: Monomial,
}

/// Parity class `i - s mod 2` shared by every variable of `m`, if any.
pub fn parity_class(m: &Monomial) -> Option<Option<i64>> {
    let mut class = None;
    for (i, s, _) in m.factors() {
        let c = (i - s).rem_euclid(2);
        match class {
            None => class = Some(c),
            Some(x) if x != c => return None,
            _ => {}
        }
    }
    Some(class)
}

pub fn snakify(m: &Monomial, cfg: &LatticeConfig) -> Result<Snakified> {
    cfg.require_root_of_unity()?;
    if !m.is_dominant() {
        return Err(Error::NotDominant(m.clone()));
    }
    if parity_class(m).is_none() {
        return Err(Error::MixedParity(m.clone()));
    }
    let period = cfg.period();
    let mut points = Vec::new();
    let mut prev: Option<(i64, i64, i64, i64)> = None; // (i, k, a, b)
    for (i, k, a) in m.factors() {
        let b = match prev {
            None => 0,
            Some((pi, pk, pa, pb)) => {
                let num = pk + (pb + pa - 1) * period + i - pi + 2 - k;
                Integer::div_ceil(&num, &period)
            }
        };
        for s in b..b + a {
            points.push(SnakePoint::new(i, k + s * period));
        }
        prev = Some((i, k, a, b));
    }
    let generic = cfg.with_mode(crate::lattice::Mode::GenericQ);
    if !classify(&points, cfg).is_snake {
        return Err(Error::Internal("snakify produced a non-snake".into()));
    }
    let snake = Snake::new(points);
    let unreduced = snake.monomial(&generic);
    Ok(Snakified { snake, unreduced })
}

/// Sum over non-overlapping tuples of a snake, with no index reduction.
pub fn my_q_character(snake: &Snake, cfg: &LatticeConfig) -> Result<Character> {
    if cfg.is_root_of_unity() {
        return Err(Error::RequiresGenericQ);
    }
    if !classify(&snake.points, cfg).is_snake {
        return Err(Error::NotASnake);
    }
    tuple_sum_nonoverlapping(&snake.as_pairs(), cfg)
}

/// The character of the fundamental module with highest weight `Y[i,k]`.
pub fn fundamental_eps_character(i: i64, k: i64, cfg: &LatticeConfig) -> Result<Character> {
    tuple_sum_nonoverlapping(&[(i, k)], cfg)
}
