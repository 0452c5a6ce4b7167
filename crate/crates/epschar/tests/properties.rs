mod common;

use common::*;
use epschar::cli::document::CharacterDocument;
use epschar::cli::parse::parse_monomial;
use epschar::paths::{enumerate_paths, lower_move, monomial_of_path, raise_move, translate_path};
use epschar::snake::{classify, fundamental_eps_character, snakify};
use epschar::tensor::{pairwise_irreducible, FundamentalFactor};
use epschar::{Character, LatticeConfig, Mode, Monomial};
use num_bigint::BigInt;
use proptest::prelude::*;

fn cfg_strategy() -> impl Strategy<Value = LatticeConfig> {
    (1i64..=5, 2i64..=4, prop::bool::ANY).prop_map(|(n, ell, root)| {
        LatticeConfig::new(n, ell, if root { Mode::RootOfUnity } else { Mode::GenericQ }).unwrap()
    })
}

fn factors(n: i64) -> impl Strategy<Value = Vec<(i64, i64, i64)>> {
    prop::collection::vec((1..=n, -12i64..12, -3i64..=3), 0..5)
}

fn monomial_in(cfg: LatticeConfig) -> impl Strategy<Value = Monomial> {
    factors(cfg.n).prop_map(move |f| Monomial::from_factors(f, &cfg))
}

fn character_in(cfg: LatticeConfig) -> impl Strategy<Value = Character> {
    prop::collection::vec((monomial_in(cfg), -4i64..=4), 0..4).prop_map(Character::from_terms)
}

proptest! {
    #[test]
    fn monomial_group_laws((_, a, b, c) in cfg_strategy().prop_flat_map(|cfg| {
        (Just(cfg), monomial_in(cfg), monomial_in(cfg), monomial_in(cfg))
    })) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&Monomial::one()), a.clone());
        prop_assert!(a.mul(&a.inverse()).is_one());
    }

    #[test]
    fn canonical_index_is_periodic(s in -100i64..100, t in -10i64..10, cfg in cfg_strategy()) {
        let r = cfg.canonical_index(s);
        prop_assert_eq!(cfg.canonical_index(r), r);
        if cfg.is_root_of_unity() {
            prop_assert_eq!(cfg.canonical_index(s + t * cfg.period()), r);
            prop_assert!((0..cfg.period()).contains(&r));
        } else {
            prop_assert_eq!(r, s);
        }
    }

    #[test]
    fn dominant_and_antidominant_is_trivial(m in cfg_strategy().prop_flat_map(monomial_in)) {
        if m.is_dominant() && m.is_antidominant() {
            prop_assert!(m.is_one());
        }
    }

    #[test]
    fn character_ring_laws((a, b, c) in cfg_strategy().prop_flat_map(|cfg| {
        (character_in(cfg), character_in(cfg), character_in(cfg))
    })) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!((&a * &b).dimension(), a.dimension() * b.dimension());
        prop_assert_eq!((&a + &b).dimension(), a.dimension() + b.dimension());
        prop_assert_eq!(&a + &Character::zero(), a.clone());
    }

    #[test]
    fn print_then_parse(m in cfg_strategy().prop_flat_map(|cfg| (Just(cfg), monomial_in(cfg)))) {
        let (cfg, m) = m;
        prop_assert_eq!(parse_monomial(&m.to_string(), &cfg).unwrap(), m);
    }

    #[test]
    fn json_is_stable_and_lossless(c in cfg_strategy().prop_flat_map(|cfg| (Just(cfg), character_in(cfg)))) {
        let (cfg, c) = c;
        let a = CharacterDocument::new(&c, &cfg).to_json();
        prop_assert_eq!(&a, &CharacterDocument::new(&c, &cfg).to_json());
        let back: CharacterDocument = serde_json::from_str(&a).unwrap();
        prop_assert_eq!(back.to_character().unwrap(), c);
    }

    #[test]
    fn path_families((n, i, k) in (1i64..=7).prop_flat_map(|n| (Just(n), 1..=n, -6i64..6))) {
        let cfg = eps(n, 2);
        let ps = enumerate_paths(i, k, &cfg).unwrap();
        prop_assert_eq!(ps.len() as i64, binomial(n + 1, i));
        let dim = fundamental_eps_character(i, k, &cfg).unwrap().dimension();
        prop_assert_eq!(dim, BigInt::from(binomial(n + 1, i)));
        for p in &ps {
            prop_assert_eq!(monomial_of_path(p, &cfg), brute_monomial(p.ys(), &cfg));
            let q = translate_path(p, 2 * cfg.period(), &cfg).unwrap();
            prop_assert_eq!(monomial_of_path(&q, &cfg), monomial_of_path(p, &cfg));
            prop_assert_eq!(q.k(), p.k() + 2 * cfg.period());
        }
    }

    #[test]
    fn wide_moves_compose_from_narrow_ones((n, i, idx) in (5i64..=7).prop_flat_map(|n| (Just(n), 1..=n, 0usize..64))) {
        let cfg = LatticeConfig::generic(n, 2).unwrap();
        let ps = enumerate_paths(i, 0, &cfg).unwrap();
        let p = &ps[idx % ps.len()];
        for j in 3..=n - 2 {
            let y = p.y(j) + 2;
            if let Ok(wide) = lower_move(p, j, y, 2) {
                prop_assert_eq!(raise_move(&wide, j, y, 2).unwrap(), p.clone());
                // a width-2 lowering is a width-1 lowering at the peak
                // followed by the two shoulders and the middle again
                let a = lower_move(p, j, y - 1, 1).unwrap();
                let b = lower_move(&a, j - 1, y, 1).unwrap();
                let c = lower_move(&b, j + 1, y, 1).unwrap();
                let d = lower_move(&c, j, y + 1, 1).unwrap();
                prop_assert_eq!(d, wide);
            }
        }
    }

    #[test]
    fn snakify_reduces_to_input((n, ell, f) in (1i64..=5, 2i64..=4).prop_flat_map(|(n, ell)| {
        (Just(n), Just(ell), prop::collection::vec((1..=n, 0i64..8, 1i64..=2), 1..5))
    })) {
        let cfg = eps(n, ell);
        // one parity class: i - s even
        let f: Vec<_> = f.into_iter().map(|(i, s, e)| (i, s + (i - s).rem_euclid(2), e)).collect();
        let m = Monomial::from_factors(f, &cfg);
        let out = snakify(&m, &cfg).unwrap();
        prop_assert!(classify(&out.snake.points, &cfg).is_snake);
        prop_assert_eq!(out.snake.monomial(&cfg), m.clone());
        prop_assert_eq!(out.unreduced.recanonicalize(&cfg), m);
        prop_assert_eq!(out.snake.as_pairs(), oracle_snake(&out.snake.monomial(&cfg), &cfg));
    }

    #[test]
    fn pairwise_symmetry((n, ell, i1, i2, x1, x2, s) in (1i64..=6, 2i64..=4).prop_flat_map(|(n, ell)| {
        (Just(n), Just(ell), 1..=n, 1..=n, -10i64..10, -10i64..10, -3i64..3)
    })) {
        let cfg = eps(n, ell);
        let (a, b) = (FundamentalFactor::new(i1, x1), FundamentalFactor::new(i2, x2));
        let v = pairwise_irreducible(a, b, &cfg);
        prop_assert_eq!(v, pairwise_irreducible(b, a, &cfg));
        prop_assert_eq!(v, pairwise_irreducible(FundamentalFactor::new(i1, x1 + s * cfg.period()), b, &cfg));
        if ((i2 - i1).abs() - (x2 - x1).abs()).rem_euclid(2) == 1 {
            prop_assert!(v);
        }
    }
}
