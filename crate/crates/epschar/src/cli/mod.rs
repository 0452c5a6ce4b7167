//! Command-line front end.
//!
//! Exit status: 0 on success, 1 on a domain error, 2 on a usage error.

pub mod document;
pub mod parse;
pub mod svg;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::degree2::{degree2_char, normalize_small_values, plan_correction};
use crate::error::Error;
use crate::krfrob::{acyclic_factor, full_char, kr_char_general};
use crate::lattice::{Character, LatticeConfig, Mode, Monomial};
use crate::paths::{enumerate_paths, highest_path};
use crate::snake::{classify, fundamental_eps_character, my_q_character, snakify, Snake, SnakePoint};
use crate::tensor::{pairwise_irreducible, tuple_irreducibility_necessary, FundamentalFactor, Verdict};

use document::{character_text, CharacterDocument};
use parse::{parse_monomial, parse_points, ParseError};
use svg::{render_svg, PathGroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Eps,
    Generic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "epschar", version, about = "Exact epsilon-characters of type-A quantum loop algebras")]
pub struct Cli {
    /// Rank: nodes are 1..=n.
    #[arg(long, global = true)]
    pub n: Option<i64>,
    /// Order of eps^2.
    #[arg(long, global = true, default_value_t = 2)]
    pub ell: i64,
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Eps)]
    pub mode: ModeArg,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the document here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Character of L(Y[i,k]).
    Fundamental {
        #[arg(long)]
        i: i64,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
    },
    /// Character of L(Y[i,k] Y[j,v]).
    Degree2 {
        #[arg(long)]
        i: i64,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long)]
        j: i64,
        #[arg(long, allow_hyphen_values = true)]
        v: i64,
    },
    /// Character of the KR module Y[i,k] Y[i,k+2] ... (z factors).
    Kr {
        #[arg(long)]
        i: i64,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long)]
        z: i64,
    },
    /// Character of L(m) for a monomial in an implemented family.
    Char {
        #[arg(long)]
        monomial: String,
    },
    /// Convert a dominant monomial into a snake.
    Snakify {
        #[arg(long)]
        monomial: String,
    },
    /// Translation targets and the correction plan of a degree-two pair.
    Translations {
        #[arg(long)]
        i: i64,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long)]
        j: i64,
        #[arg(long, allow_hyphen_values = true)]
        v: i64,
    },
    /// List the paths for (i, k) with their monomials.
    Paths {
        #[arg(long)]
        i: i64,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
    },
    /// Irreducibility of a tensor product of fundamental modules.
    Irreducible {
        /// Factors as "(i,xi),(i,xi),...".
        #[arg(long, allow_hyphen_values = true)]
        factors: String,
    },
    /// Split a dominant monomial into its l-acyclic and bold parts.
    Decompose {
        #[arg(long)]
        monomial: String,
    },
    /// SVG diagram of the path families of the given points.
    Render {
        /// Points as "(i,k),(i,k),...".
        #[arg(long, allow_hyphen_values = true)]
        points: String,
        /// Draw only the highest path of each family.
        #[arg(long)]
        highest: bool,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        match e {
            ParseError::Syntax { .. } => Failure::Usage(e.to_string()),
            ParseError::NodeOutOfRange { .. } => Failure::Domain(e.to_string()),
        }
    }
}

/// Parses `args` (including the program name) and runs one command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(stdout, "{text}");
            } else {
                let _ = write!(stderr, "{text}");
            }
            return code;
        }
    };
    match execute(&cli) {
        Ok(body) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, body) {
                    let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
                    return 1;
                }
            } else {
                let _ = write!(stdout, "{body}");
            }
            0
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "usage error: {msg}");
            2
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
    }
}

fn config(cli: &Cli) -> Result<LatticeConfig, Failure> {
    let n = cli.n.ok_or_else(|| Failure::Usage("--n is required".into()))?;
    let mode = match cli.mode {
        ModeArg::Eps => Mode::RootOfUnity,
        ModeArg::Generic => Mode::GenericQ,
    };
    LatticeConfig::new(n, cli.ell, mode).map_err(|e| Failure::Usage(e.to_string()))
}

fn character_output(c: &Character, cfg: &LatticeConfig, format: Format) -> String {
    match format {
        Format::Text => character_text(c),
        Format::Json => CharacterDocument::new(c, cfg).to_json() + "\n",
    }
}

fn json_output(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json value serializes") + "\n"
}

/// Generic-mode character: the non-overlapping sum when the points, ordered
/// by spectral index, form a snake, and for two points that do not form a
/// snake the product of the fundamental characters.
fn generic_character(points: &[(i64, i64)], cfg: &LatticeConfig) -> Result<Character, Failure> {
    for &(i, _) in points {
        cfg.check_node(i)?;
    }
    let mut sorted: Vec<SnakePoint> = points.iter().map(|&(i, k)| SnakePoint::new(i, k)).collect();
    sorted.sort_by_key(|p| (p.k, p.i));
    if sorted.is_empty() {
        return Ok(Character::one());
    }
    if sorted.len() == 1 || classify(&sorted, cfg).is_snake {
        return Ok(my_q_character(&Snake::new(sorted), cfg)?);
    }
    if let [(i, k), (j, v)] = points {
        // Not a snake: the two factors are in general position.
        return Ok(&fundamental_eps_character(*i, *k, cfg)? * &fundamental_eps_character(*j, *v, cfg)?);
    }
    Err(Error::UnsupportedFamily(Monomial::from_points(points.iter().copied(), cfg)).into())
}

fn monomial_json(m: &Monomial) -> Value {
    json!(m.factors().map(|(i, s, e)| [i, s, e]).collect::<Vec<_>>())
}

fn execute(cli: &Cli) -> Result<String, Failure> {
    let cfg = config(cli)?;
    let generic = !cfg.is_root_of_unity();
    match &cli.command {
        Command::Fundamental { i, k } => {
            let c = fundamental_eps_character(*i, *k, &cfg)?;
            Ok(character_output(&c, &cfg, cli.format))
        }
        Command::Degree2 { i, k, j, v } => {
            let c = if generic {
                generic_character(&[(*i, *k), (*j, *v)], &cfg)?
            } else {
                degree2_char(*i, *k, *j, *v, &cfg)?
            };
            Ok(character_output(&c, &cfg, cli.format))
        }
        Command::Kr { i, k, z } => {
            let c = if generic {
                if *z < 1 {
                    return Err(Error::KrDegree { z: *z, ell: cfg.ell }.into());
                }
                let pts: Vec<(i64, i64)> = (0..*z).map(|t| (*i, k + 2 * t)).collect();
                generic_character(&pts, &cfg)?
            } else {
                kr_char_general(*i, *k, *z, &cfg)?
            };
            Ok(character_output(&c, &cfg, cli.format))
        }
        Command::Char { monomial } => {
            let m = parse_monomial(monomial, &cfg)?;
            let c = if generic {
                if !m.is_dominant() {
                    return Err(Error::NotDominant(m).into());
                }
                generic_character(&m.points(), &cfg)?
            } else {
                full_char(&m, &cfg)?
            };
            Ok(character_output(&c, &cfg, cli.format))
        }
        Command::Snakify { monomial } => {
            let m = parse_monomial(monomial, &cfg)?;
            let s = snakify(&m, &cfg)?;
            let class = classify(&s.snake.points, &cfg);
            Ok(match cli.format {
                Format::Text => format!(
                    "snake: {}\nmonomial: {}\nminimal: {}\nprime: {}\n",
                    s.snake.as_pairs().iter().map(|(i, k)| format!("({i},{k})")).collect::<Vec<_>>().join(" "),
                    s.unreduced,
                    class.is_minimal,
                    class.is_prime
                ),
                Format::Json => json_output(&json!({
                    "input": monomial_json(&m),
                    "snake": s.snake.as_pairs(),
                    "monomial": monomial_json(&s.unreduced),
                    "classification": class,
                })),
            })
        }
        Command::Translations { i, k, j, v } => {
            let np = normalize_small_values(*i, *k, *j, *v, &cfg)?;
            let plan = plan_correction(&np, &cfg);
            Ok(match cli.format {
                Format::Text => {
                    let mut s = format!(
                        "pair: ({},{}) ({},{}){}\ncase: {:?}\nrho: {}\ngamma: {}\nbprime: {}\n",
                        np.i,
                        np.k,
                        np.j,
                        np.vbar,
                        if np.swapped { " [swapped]" } else { "" },
                        plan.case,
                        plan.rho,
                        plan.gamma,
                        plan.bprime
                    );
                    for t in &plan.targets {
                        s.push_str(&format!(
                            "target {}: k'={} Y[{},{}]*Y[{},{}] -> {}\n",
                            t.t,
                            t.kprime,
                            t.a,
                            t.alpha,
                            t.b,
                            t.beta,
                            t.monomial(&cfg)
                        ));
                    }
                    for m in &plan.second_stage {
                        s.push_str(&format!(
                            "second {}: Y[{},{}]*Y[{},{}] -> {}\n",
                            m.t,
                            m.a,
                            m.alpha,
                            m.b,
                            m.beta,
                            m.monomial(&cfg)
                        ));
                    }
                    s
                }
                Format::Json => {
                    let targets: Vec<Value> = plan
                        .targets
                        .iter()
                        .map(|t| json!({"target": t, "monomial": monomial_json(&t.monomial(&cfg))}))
                        .collect();
                    let second: Vec<Value> = plan
                        .second_stage
                        .iter()
                        .map(|m| json!({"stage": m, "monomial": monomial_json(&m.monomial(&cfg))}))
                        .collect();
                    json_output(&json!({
                        "pair": np,
                        "case": plan.case,
                        "rho": plan.rho,
                        "gamma": plan.gamma,
                        "bprime": plan.bprime,
                        "targets": targets,
                        "second_stage": second,
                    }))
                }
            })
        }
        Command::Paths { i, k } => {
            let paths = enumerate_paths(*i, *k, &cfg)?;
            Ok(match cli.format {
                Format::Text => paths
                    .iter()
                    .map(|p| {
                        let ys: Vec<String> = p.ys().iter().map(|y| y.to_string()).collect();
                        format!("({}) {}\n", ys.join(","), p.monomial(&cfg))
                    })
                    .collect(),
                Format::Json => {
                    let list: Vec<Value> = paths
                        .iter()
                        .map(|p| json!({"ys": p.ys(), "monomial": monomial_json(&p.monomial(&cfg))}))
                        .collect();
                    json_output(&json!({"i": i, "k": k, "count": paths.len(), "paths": list}))
                }
            })
        }
        Command::Irreducible { factors } => {
            cfg.require_root_of_unity()?;
            let fs: Vec<FundamentalFactor> =
                parse_points(factors)?.into_iter().map(|(i, xi)| FundamentalFactor::new(i, xi)).collect();
            let verdict = tuple_irreducibility_necessary(&fs, &cfg)?;
            let word = match (fs.len(), verdict) {
                (_, Verdict::ReducibleCertified) => "reducible",
                (2, Verdict::PairwiseConsistent) => "irreducible",
                _ => "pairwise-consistent",
            };
            let mut pairs = Vec::new();
            for (a, f1) in fs.iter().enumerate() {
                for f2 in &fs[a + 1..] {
                    pairs.push(json!({"pair": [f1, f2], "irreducible": pairwise_irreducible(*f1, *f2, &cfg)}));
                }
            }
            Ok(match cli.format {
                Format::Text => format!("{word}\nlabel: {}\n", verdict.label()),
                Format::Json => json_output(&json!({"verdict": word, "label": verdict.label(), "pairs": pairs})),
            })
        }
        Command::Decompose { monomial } => {
            let m = parse_monomial(monomial, &cfg)?;
            let (m0, m1) = acyclic_factor(&m, &cfg)?;
            Ok(match cli.format {
                Format::Text => format!(
                    "m0: {m0}\nm1: {}\nexpansion: {}\n",
                    m1.mult.iter().enumerate().map(|(i, x)| format!("{}^{x}", i + 1)).collect::<Vec<_>>().join(" "),
                    m1.expansion(&cfg)
                ),
                Format::Json => json_output(&json!({
                    "m0": monomial_json(&m0),
                    "m1": {"mult": m1.mult, "offsets": m1.offsets},
                    "expansion": monomial_json(&m1.expansion(&cfg)),
                })),
            })
        }
        Command::Render { points, highest } => {
            let mut groups = Vec::new();
            for (i, k) in parse_points(points)? {
                let paths = if *highest { vec![highest_path(i, k, &cfg)?] } else { enumerate_paths(i, k, &cfg)? };
                groups.push(PathGroup { label: format!("P({i},{k})"), paths });
            }
            Ok(render_svg(&groups, &cfg))
        }
    }
}
