//! Independent oracles shared by the integration suites.
//!
//! Nothing here calls into the library's path, snake, degree-two or
//! Kirillov-Reshetikhin code; only the monomial and character containers
//! are reused.

#![allow(dead_code)]

use std::collections::BTreeMap;

use epschar::{Character, LatticeConfig, Monomial};
use num_bigint::BigInt;

pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, t| acc * (n - t) / (t + 1))
}

/// All unit-step sequences from `i + k` with exactly `i` descents.
pub fn brute_paths(n: i64, i: i64, k: i64) -> Vec<Vec<i64>> {
    let steps = (n + 1) as u32;
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << steps) {
        if mask.count_ones() as i64 != i {
            continue;
        }
        let mut ys = vec![i + k];
        for s in 0..steps {
            let last = *ys.last().unwrap();
            ys.push(if mask >> s & 1 == 1 { last - 1 } else { last + 1 });
        }
        out.push(ys);
    }
    out.sort();
    out
}

/// Peaks count `+1`, valleys `-1`, read off columns `1..=n`.
pub fn brute_monomial(ys: &[i64], cfg: &LatticeConfig) -> Monomial {
    let mut f = Vec::new();
    for r in 1..ys.len() - 1 {
        if ys[r - 1] == ys[r] + 1 && ys[r + 1] == ys[r] + 1 {
            f.push((r as i64, ys[r], 1));
        }
        if ys[r - 1] + 1 == ys[r] && ys[r + 1] + 1 == ys[r] {
            f.push((r as i64, ys[r], -1));
        }
    }
    Monomial::from_factors(f, cfg)
}

fn tuples<F>(points: &[(i64, i64)], cfg: &LatticeConfig, ok: F) -> Character
where
    F: Fn(&[Vec<i64>], &[i64]) -> bool,
{
    let families: Vec<_> = points.iter().map(|&(i, k)| brute_paths(cfg.n, i, k)).collect();
    let mut out = Character::zero();
    let mut chosen = Vec::new();
    fn rec<F: Fn(&[Vec<i64>], &[i64]) -> bool>(
        families: &[Vec<Vec<i64>>],
        chosen: &mut Vec<Vec<i64>>,
        cfg: &LatticeConfig,
        ok: &F,
        out: &mut Character,
    ) {
        let t = chosen.len();
        if t == families.len() {
            let m = chosen.iter().fold(Monomial::one(), |m, p| m.mul(&brute_monomial(p, cfg)));
            out.add_term(m, BigInt::from(1));
            return;
        }
        for p in &families[t] {
            if ok(chosen, p) {
                chosen.push(p.clone());
                rec(families, chosen, cfg, ok, out);
                chosen.pop();
            }
        }
    }
    rec(&families, &mut chosen, cfg, &ok, &mut out);
    out
}

/// Each path lies strictly below the previous one in every column.
pub fn brute_nonoverlap(points: &[(i64, i64)], cfg: &LatticeConfig) -> Character {
    tuples(points, cfg, |chosen, p| chosen.last().is_none_or(|q| q.iter().zip(p).all(|(a, b)| a < b)))
}

/// No two paths meet once rows are identified mod `2 ell`.
pub fn brute_tube(points: &[(i64, i64)], cfg: &LatticeConfig) -> Character {
    let period = cfg.period();
    tuples(points, cfg, move |chosen, p| {
        chosen.iter().all(|q| q.iter().zip(p).all(|(a, b)| (a - b).rem_euclid(period) != 0))
    })
}

pub fn brute_fundamental(i: i64, k: i64, cfg: &LatticeConfig) -> Character {
    brute_nonoverlap(&[(i, k)], cfg)
}

/// Lifts the variables of `m` to a snake with the smallest admissible shifts.
pub fn oracle_snake(m: &Monomial, cfg: &LatticeConfig) -> Vec<(i64, i64)> {
    let p = cfg.period();
    let mut out = Vec::new();
    let mut prev: Option<(i64, i64, i64, i64)> = None;
    for (i, k, a) in m.factors() {
        let b = match prev {
            None => 0,
            Some((pi, pk, pa, pb)) => {
                let num = pk + (pb + pa - 1) * p + i - pi + 2 - k;
                // smallest b with b * p >= num
                let mut b = num.div_euclid(p);
                if b * p < num {
                    b += 1;
                }
                b
            }
        };
        for s in b..b + a {
            out.push((i, k + s * p));
        }
        prev = Some((i, k, a, b));
    }
    out
}

fn height(m: &Monomial, n: i64) -> i64 {
    m.factors().map(|(a, _, e)| e * a * (n + 1 - a)).sum()
}

/// Characters of simple modules by peeling: start from the snake sum and
/// subtract the characters of every foreign dominant monomial, highest
/// first.  Assumes each peeled character is special.
pub struct Peeler {
    cfg: LatticeConfig,
    memo: BTreeMap<Monomial, Character>,
}

impl Peeler {
    pub fn new(cfg: LatticeConfig) -> Self {
        Self { cfg, memo: BTreeMap::new() }
    }

    pub fn chi(&mut self, m: &Monomial) -> Character {
        if let Some(c) = self.memo.get(m) {
            return c.clone();
        }
        let out = if m.is_one() {
            Character::one()
        } else {
            let snake = oracle_snake(m, &self.cfg);
            let mut rem = brute_nonoverlap(&snake, &self.cfg);
            loop {
                let next = rem
                    .terms()
                    .filter(|(d, _)| d.is_dominant() && *d != m)
                    .max_by_key(|(d, _)| height(d, self.cfg.n))
                    .map(|(d, c)| (d.clone(), c.clone()));
                let Some((d, c)) = next else { break };
                let sub = self.chi(&d).scale(&c);
                rem = &rem - &sub;
            }
            rem
        };
        self.memo.insert(m.clone(), out.clone());
        out
    }
}

/// Number of semistandard tableaux of shape `lambda` with entries `1..=k`,
/// by the hook-content formula.
pub fn hook_content(lambda: &[u32], k: i64) -> BigInt {
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for (r, &len) in lambda.iter().enumerate() {
        for c in 0..len as usize {
            let arm = len as i64 - c as i64 - 1;
            let leg = lambda.iter().skip(r + 1).filter(|&&l| l as usize > c).count() as i64;
            num *= k + c as i64 - r as i64;
            den *= arm + leg + 1;
        }
    }
    num / den
}

/// Reads a sum written in the typeset notation `2Y_{1,2}Y^{-1}_{2, 3}+...`.
/// Alignment marks, line breaks and `\nonumber` are ignored.
pub fn latex(text: &str, cfg: &LatticeConfig) -> Character {
    let cleaned = text.replace("\\nonumber", "").replace("\\\\", "").replace('&', "");
    let chars: Vec<char> = cleaned.chars().filter(|c| !c.is_whitespace()).collect();
    let mut pos = 0;
    let mut out = Character::zero();

    fn int(chars: &[char], pos: &mut usize) -> Option<i64> {
        let start = *pos;
        if *pos < chars.len() && chars[*pos] == '-' {
            *pos += 1;
        }
        while *pos < chars.len() && chars[*pos].is_ascii_digit() {
            *pos += 1;
        }
        let s: String = chars[start..*pos].iter().collect();
        s.parse().ok()
    }
    fn expect(chars: &[char], pos: &mut usize, c: char) {
        assert_eq!(chars.get(*pos), Some(&c), "expected {c} at {pos}");
        *pos += 1;
    }
    fn exponent(chars: &[char], pos: &mut usize) -> i64 {
        expect(chars, pos, '^');
        if chars.get(*pos) == Some(&'{') {
            *pos += 1;
            let e = int(chars, pos).expect("exponent");
            expect(chars, pos, '}');
            e
        } else {
            let e = chars[*pos].to_digit(10).expect("exponent digit") as i64;
            *pos += 1;
            e
        }
    }

    let mut sign = 1;
    while pos < chars.len() {
        let coeff = if chars[pos].is_ascii_digit() { int(&chars, &mut pos).unwrap() } else { 1 };
        let mut factors = Vec::new();
        while chars.get(pos) == Some(&'Y') {
            pos += 1;
            let mut e = 1;
            if chars.get(pos) == Some(&'^') {
                e = exponent(&chars, &mut pos);
            }
            expect(&chars, &mut pos, '_');
            expect(&chars, &mut pos, '{');
            let i = int(&chars, &mut pos).expect("node");
            expect(&chars, &mut pos, ',');
            let s = int(&chars, &mut pos).expect("spectral index");
            expect(&chars, &mut pos, '}');
            if chars.get(pos) == Some(&'^') {
                e = exponent(&chars, &mut pos);
            }
            factors.push((i, s, e));
        }
        out.add_term(Monomial::from_factors(factors, cfg), BigInt::from(sign * coeff));
        match chars.get(pos) {
            None => break,
            Some('+') => sign = 1,
            Some('-') => sign = -1,
            Some(c) => panic!("unexpected {c:?} at {pos}"),
        }
        pos += 1;
    }
    out
}

pub fn eps(n: i64, ell: i64) -> LatticeConfig {
    LatticeConfig::eps(n, ell).unwrap()
}

pub fn mono(points: &[(i64, i64)], cfg: &LatticeConfig) -> Monomial {
    Monomial::from_points(points.iter().copied(), cfg)
}
