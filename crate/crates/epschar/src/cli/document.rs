//! The JSON document emitted for every character.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{Character, LatticeConfig, Mode, Monomial};

/// Coefficients are JSON integers when they fit in `i64`, decimal strings
/// otherwise.
mod coeff_json {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(c: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        match c.to_i64() {
            Some(x) => s.serialize_i64(x),
            None => s.serialize_str(&c.to_string()),
        }
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Raw {
        Int(i64),
        Text(String),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        match Raw::deserialize(d)? {
            Raw::Int(x) => Ok(BigInt::from(x)),
            Raw::Text(t) => t.parse().map_err(serde::de::Error::custom),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub n: i64,
    pub ell: i64,
    pub mode: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub monomial: Vec<[i64; 3]>,
    #[serde(with = "coeff_json")]
    pub coeff: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub term_count: usize,
    #[serde(with = "coeff_json")]
    pub dimension: BigInt,
    pub dominant_terms: Vec<TermDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterDocument {
    pub config: ConfigEcho,
    pub terms: Vec<TermDoc>,
    pub summary: Summary,
}

pub fn mode_name(mode: Mode) -> &'static str {
    match mode {
        Mode::RootOfUnity => "eps",
        Mode::GenericQ => "generic",
    }
}

fn term(m: &Monomial, c: &BigInt) -> TermDoc {
    TermDoc {
        monomial: m.factors().map(|(i, s, e)| [i, s, e]).collect(),
        coeff: c.clone(),
    }
}

impl CharacterDocument {
    pub fn new(c: &Character, cfg: &LatticeConfig) -> Self {
        let terms = c.terms().map(|(m, x)| term(m, x)).collect();
        let dominant_terms = c.dominant_terms().iter().map(|(m, x)| term(m, x)).collect();
        Self {
            config: ConfigEcho { n: cfg.n, ell: cfg.ell, mode: mode_name(cfg.mode).into() },
            terms,
            summary: Summary { term_count: c.len(), dimension: c.dimension(), dominant_terms },
        }
    }

    pub fn config(&self) -> Result<LatticeConfig> {
        let mode = match self.config.mode.as_str() {
            "eps" => Mode::RootOfUnity,
            "generic" => Mode::GenericQ,
            other => return Err(Error::InvalidConfig(format!("unknown mode {other}"))),
        };
        LatticeConfig::new(self.config.n, self.config.ell, mode)
    }

    pub fn to_character(&self) -> Result<Character> {
        let cfg = self.config()?;
        Ok(Character::from_terms(self.terms.iter().map(|t| {
            (Monomial::from_factors(t.monomial.iter().map(|f| (f[0], f[1], f[2])), &cfg), t.coeff.clone())
        })))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }
}

/// One `coeff·monomial` line per term, in canonical order.
pub fn character_text(c: &Character) -> String {
    let mut out = String::new();
    for (m, x) in c.terms() {
        out.push_str(&format!("{x}·{m}\n"));
    }
    if c.is_empty() {
        out.push_str("0\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_with_large_coefficient() {
        let cfg = LatticeConfig::eps(2, 2).unwrap();
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let c = Character::from_terms([
            (Monomial::from_factors([(1, 0, 2), (2, 3, -1)], &cfg), big),
            (Monomial::one(), BigInt::from(-3)),
        ]);
        let doc = CharacterDocument::new(&c, &cfg);
        let json = doc.to_json();
        let back: CharacterDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_character().unwrap(), c);
        assert!(json.contains("\"123456789012345678901234567890\""));
    }

    #[test]
    fn text_lines() {
        let cfg = LatticeConfig::eps(1, 2).unwrap();
        let c = Character::from_terms([(Monomial::var(1, 0, &cfg), 2)]);
        assert_eq!(character_text(&c), "2·Y[1,0]\n");
        assert_eq!(character_text(&Character::zero()), "0\n");
    }
}
