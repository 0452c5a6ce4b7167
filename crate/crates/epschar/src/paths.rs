//! Lattice paths, their corner monomials, moves, translations and tuple sums.
//!
//! A path in the set for `(i, k)` is a sequence `y_0..y_{n+1}` with unit
//! steps from `y_0 = i + k` to `y_{n+1} = n + 1 - i + k`.  The stored values
//! are absolute; reduction mod `2 ell` only happens when a monomial is read
//! off or when the tube test compares rows.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lattice::{Character, LatticeConfig, Monomial};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    i: i64,
    k: i64,
    ys: Vec<i64>,
}

impl Path {
    pub fn new(i: i64, k: i64, ys: Vec<i64>, cfg: &LatticeConfig) -> Result<Self> {
        cfg.check_node(i)?;
        let n = cfg.n;
        if ys.len() as i64 != n + 2 {
            return Err(Error::InvalidPath(format!("expected {} values, got {}", n + 2, ys.len())));
        }
        if ys[0] != i + k || ys[(n + 1) as usize] != n + 1 - i + k {
            return Err(Error::InvalidPath("endpoints do not match the anchor".into()));
        }
        let mut downs = 0;
        for w in ys.windows(2) {
            match w[1] - w[0] {
                -1 => downs += 1,
                1 => {}
                _ => return Err(Error::InvalidPath("steps must be +1 or -1".into())),
            }
        }
        debug_assert_eq!(downs, i);
        Ok(Self { i, k, ys })
    }

    pub fn i(&self) -> i64 {
        self.i
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn ys(&self) -> &[i64] {
        &self.ys
    }

    /// Value at column `c`.
    pub fn y(&self, c: i64) -> i64 {
        self.ys[c as usize]
    }

    fn columns(&self) -> i64 {
        self.ys.len() as i64 - 2
    }

    fn is_upper(&self, r: i64) -> bool {
        let (a, b, c) = (self.y(r - 1), self.y(r), self.y(r + 1));
        a == b + 1 && c == b + 1
    }

    fn is_lower(&self, r: i64) -> bool {
        let (a, b, c) = (self.y(r - 1), self.y(r), self.y(r + 1));
        a == b - 1 && c == b - 1
    }

    pub fn monomial(&self, cfg: &LatticeConfig) -> Monomial {
        monomial_of_path(self, cfg)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CornerSet {
    pub upper: Vec<(i64, i64)>,
    pub lower: Vec<(i64, i64)>,
}

/// All paths of the set for `(i, k)`, sorted lexicographically on `ys`.
pub fn enumerate_paths(i: i64, k: i64, cfg: &LatticeConfig) -> Result<Vec<Path>> {
    cfg.check_node(i)?;
    let steps = (cfg.n + 1) as usize;
    let mut out = Vec::new();
    let mut ys = Vec::with_capacity(steps + 1);
    ys.push(i + k);
    fn rec(ys: &mut Vec<i64>, left: usize, downs: i64, out: &mut Vec<Vec<i64>>) {
        if left == 0 {
            out.push(ys.clone());
            return;
        }
        let last = *ys.last().unwrap();
        if downs > 0 {
            ys.push(last - 1);
            rec(ys, left - 1, downs - 1, out);
            ys.pop();
        }
        if (left as i64) > downs {
            ys.push(last + 1);
            rec(ys, left - 1, downs, out);
            ys.pop();
        }
    }
    let mut raw = Vec::new();
    rec(&mut ys, steps, i, &mut raw);
    for ys in raw {
        out.push(Path { i, k, ys });
    }
    Ok(out)
}

pub fn corners(p: &Path) -> CornerSet {
    let mut set = CornerSet::default();
    for r in 1..=p.columns() {
        if p.is_upper(r) {
            set.upper.push((r, p.y(r)));
        } else if p.is_lower(r) {
            set.lower.push((r, p.y(r)));
        }
    }
    set
}

pub fn monomial_of_path(p: &Path, cfg: &LatticeConfig) -> Monomial {
    let c = corners(p);
    let up = c.upper.into_iter().map(|(r, y)| (r, y, 1));
    let low = c.lower.into_iter().map(|(r, y)| (r, y, -1));
    Monomial::from_factors(up.chain(low), cfg)
}

/// The unique path without lower corners; its monomial is `Y[i,k]`.
pub fn highest_path(i: i64, k: i64, cfg: &LatticeConfig) -> Result<Path> {
    cfg.check_node(i)?;
    let mut ys = vec![i + k];
    for c in 1..=cfg.n + 1 {
        let last = ys[c as usize - 1];
        ys.push(if c <= i { last - 1 } else { last + 1 });
    }
    Path::new(i, k, ys, cfg)
}

/// The unique path without upper corners; its monomial is
/// `Y[n+1-i, n+1+k]^-1`.
pub fn lowest_path(i: i64, k: i64, cfg: &LatticeConfig) -> Result<Path> {
    cfg.check_node(i)?;
    let ups = cfg.n + 1 - i;
    let mut ys = vec![i + k];
    for c in 1..=cfg.n + 1 {
        let last = ys[c as usize - 1];
        ys.push(if c <= ups { last + 1 } else { last - 1 });
    }
    Path::new(i, k, ys, cfg)
}

/// `p` lies strictly above `q`: smaller value at every column.
pub fn strictly_above(p: &Path, q: &Path) -> bool {
    p.ys.len() == q.ys.len() && p.ys.iter().zip(&q.ys).all(|(a, b)| a < b)
}

/// No column where the two paths meet once rows are identified mod `2 ell`.
pub fn tube_disjoint(p: &Path, q: &Path, cfg: &LatticeConfig) -> Result<bool> {
    cfg.require_root_of_unity()?;
    Ok(tube_disjoint_unchecked(p, q, cfg.period()))
}

fn tube_disjoint_unchecked(p: &Path, q: &Path, period: i64) -> bool {
    p.ys.iter().zip(&q.ys).all(|(a, b)| (a - b).rem_euclid(period) != 0)
}

fn check_move_window(p: &Path, j: i64, r: i64) -> Result<()> {
    let n = p.columns();
    if r < 1 {
        return Err(Error::MoveNotApplicable { column: j, reason: format!("width {r} must be positive") });
    }
    if !(1..=n).contains(&j) {
        return Err(Error::MoveNotApplicable { column: j, reason: "column outside 1..=n".into() });
    }
    if r >= j || r >= n + 1 - j {
        return Err(Error::MoveNotApplicable {
            column: j,
            reason: format!("width {r} does not fit between the boundary columns"),
        });
    }
    for c in (j - r + 1..j).chain(j + 1..j + r) {
        if p.is_upper(c) || p.is_lower(c) {
            return Err(Error::MoveNotApplicable { column: c, reason: "corner inside the move window".into() });
        }
    }
    Ok(())
}

/// Replaces the upper corner at `(j, y - r)` by a lower corner at `(j, y + r)`.
pub fn lower_move(p: &Path, j: i64, y: i64, r: i64) -> Result<Path> {
    check_move_window(p, j, r)?;
    if p.y(j) != y - r || !p.is_upper(j) {
        return Err(Error::MoveNotApplicable { column: j, reason: format!("no upper corner at ({j},{})", y - r) });
    }
    let mut ys = p.ys.clone();
    for c in j - r + 1..j + r {
        ys[c as usize] = y + r - (c - j).abs();
    }
    Ok(Path { i: p.i, k: p.k, ys })
}

/// Inverse of [`lower_move`] with the same arguments.
pub fn raise_move(p: &Path, j: i64, y: i64, r: i64) -> Result<Path> {
    check_move_window(p, j, r)?;
    if p.y(j) != y + r || !p.is_lower(j) {
        return Err(Error::MoveNotApplicable { column: j, reason: format!("no lower corner at ({j},{})", y + r) });
    }
    let mut ys = p.ys.clone();
    for c in j - r + 1..j + r {
        ys[c as usize] = y - r + (c - j).abs();
    }
    Ok(Path { i: p.i, k: p.k, ys })
}

/// Vertical shift by a multiple of `2 ell`; the monomial is unchanged.
pub fn translate_path(p: &Path, delta: i64, cfg: &LatticeConfig) -> Result<Path> {
    cfg.require_root_of_unity()?;
    if delta.rem_euclid(cfg.period()) != 0 {
        return Err(Error::BadTranslation { delta, period: cfg.period() });
    }
    Ok(Path {
        i: p.i,
        k: p.k + delta,
        ys: p.ys.iter().map(|y| y + delta).collect(),
    })
}

struct Candidates {
    paths: Vec<Path>,
    monos: Vec<Monomial>,
}

fn candidates(points: &[(i64, i64)], cfg: &LatticeConfig) -> Result<Vec<Candidates>> {
    if points.is_empty() {
        return Err(Error::Precondition("tuple sum needs at least one point".into()));
    }
    points
        .iter()
        .map(|&(i, k)| {
            let paths = enumerate_paths(i, k, cfg)?;
            let monos = paths.iter().map(|p| p.monomial(cfg)).collect();
            Ok(Candidates { paths, monos })
        })
        .collect()
}

fn collect(counts: BTreeMap<Monomial, u64>) -> Character {
    Character::from_terms(counts.into_iter().map(|(m, c)| (m, BigInt::from(c))))
}

/// Sum over tuples where each path lies strictly above the next.
pub fn tuple_sum_nonoverlapping(points: &[(i64, i64)], cfg: &LatticeConfig) -> Result<Character> {
    let cands = candidates(points, cfg)?;
    let mut counts = BTreeMap::new();
    fn rec(
        cands: &[Candidates],
        t: usize,
        prev: Option<&Path>,
        acc: &Monomial,
        counts: &mut BTreeMap<Monomial, u64>,
    ) {
        if t == cands.len() {
            *counts.entry(acc.clone()).or_insert(0) += 1;
            return;
        }
        for (p, m) in cands[t].paths.iter().zip(&cands[t].monos) {
            if prev.is_none_or(|q| strictly_above(q, p)) {
                rec(cands, t + 1, Some(p), &acc.mul(m), counts);
            }
        }
    }
    rec(&cands, 0, None, &Monomial::one(), &mut counts);
    Ok(collect(counts))
}

/// Sum over tuples of pairwise tube-disjoint paths at a single node.
pub fn tuple_sum_tube_disjoint(points: &[(i64, i64)], cfg: &LatticeConfig) -> Result<Character> {
    cfg.require_root_of_unity()?;
    if let Some(&(i0, _)) = points.first() {
        if points.iter().any(|&(i, _)| i != i0) {
            return Err(Error::Precondition("tube sum needs all points at one node".into()));
        }
    }
    let cands = candidates(points, cfg)?;
    let period = cfg.period();
    let mut counts = BTreeMap::new();
    let mut chosen: Vec<&Path> = Vec::new();
    fn rec<'a>(
        cands: &'a [Candidates],
        t: usize,
        chosen: &mut Vec<&'a Path>,
        acc: &Monomial,
        period: i64,
        counts: &mut BTreeMap<Monomial, u64>,
    ) {
        if t == cands.len() {
            *counts.entry(acc.clone()).or_insert(0) += 1;
            return;
        }
        for (p, m) in cands[t].paths.iter().zip(&cands[t].monos) {
            if chosen.iter().all(|q| tube_disjoint_unchecked(q, p, period)) {
                chosen.push(p);
                rec(cands, t + 1, chosen, &acc.mul(m), period, counts);
                chosen.pop();
            }
        }
    }
    rec(&cands, 0, &mut chosen, &Monomial::one(), period, &mut counts);
    Ok(collect(counts))
}
