//! Named games and sequence families.
//!
//! Keys are stable identifiers used by the command line:
//!
//! | key | object |
//! |-----|--------|
//! | `empty` | the game with no moves |
//! | `nim2` | two-pile Nim |
//! | `wythoff` | Wythoff Nim |
//! | `wythoff-star` | moves `{⌊nφ⌋, ⌊nφ²⌋}` |
//! | `gdwn12` | moves `{0,i}, (i,i), {i,2i}` |
//! | `mouse-trap` | `a_n = ⌊3n/2⌋`, `b_n = 3n − 1` |
//! | `beatty:<α>` | homogeneous Beatty pair, `α` = `phi`, `sqrt2`, `sqrt3` or `p,q,d,r` |
//! | `table1`, `table2`, `table3` | short explicit prefixes |
//! | `table3-extended` | the `gdwn12` P-pairs, computed to any length |
//! | `table2-beatty` | an inhomogeneous Beatty pair starting like `table2` |

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::sync::OnceLock;

use crate::board::{GameSpec, MoveGenerator, Position};
use crate::error::{Error, Result};
use crate::feasibility::claimed_from_pair;
use crate::sequences::{beatty_pair, explicit_pair, BeattyParams, Precision, QuadraticIrrational, Real, SequencePair};
use crate::solver::solve;

pub const TABLE1: ([i64; 3], [i64; 3]) = ([1, 2, 4], [3, 7, 13]);
pub const TABLE2: ([i64; 2], [i64; 2]) = ([1, 2], [4, 7]);
pub const TABLE3: ([i64; 12], [i64; 12]) = (
    [0, 1, 2, 4, 7, 8, 9, 11, 12, 13, 15, 16],
    [0, 3, 6, 5, 10, 14, 17, 25, 28, 18, 35, 23],
);

/// Fixed keys; `beatty:<α>` is accepted in addition.
pub const KEYS: &[&str] = &[
    "empty",
    "nim2",
    "wythoff",
    "wythoff-star",
    "gdwn12",
    "mouse-trap",
    "beatty:phi",
    "beatty:sqrt2",
    "beatty:sqrt3",
    "table1",
    "table2",
    "table3",
    "table3-extended",
    "table2-beatty",
];

#[derive(Clone, Debug)]
pub enum SequenceSource {
    /// A fixed, finite prefix.
    Explicit(SequencePair),
    Beatty(BeattyParams),
    MouseTrap,
    /// P-positions `(x, y)`, `x <= y`, of `gdwn12`, indexed by increasing `x`.
    Gdwn12Pairs,
}

#[derive(Clone, Debug)]
pub enum Source {
    Game(GameSpec),
    Sequence(SequenceSource),
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub key: String,
    pub description: &'static str,
    pub source: Source,
}

impl CatalogEntry {
    pub fn is_sequence(&self) -> bool {
        matches!(self.source, Source::Sequence(_))
    }

    /// The game, with every move inside `[0, bound]²` available.
    pub fn spec(&self, bound: u64) -> Result<GameSpec> {
        let seq = match &self.source {
            Source::Game(g) => return Ok(g.clone()),
            Source::Sequence(s) => s,
        };
        let generator = match seq {
            SequenceSource::Explicit(pair) => {
                MoveGenerator::explicit(pair.pairs().map(Position::from).filter(|p| !p.is_origin()))
            }
            SequenceSource::Beatty(params) if params.is_homogeneous() => {
                MoveGenerator::BeattyHomogeneous { alpha: params.alpha().clone() }
            }
            SequenceSource::Beatty(params) => MoveGenerator::BeattyInhomogeneous(params.clone()),
            SequenceSource::MouseTrap | SequenceSource::Gdwn12Pairs => {
                MoveGenerator::SequencePair(self.pair_covering(bound)?)
            }
        };
        Ok(GameSpec::new(self.key.clone(), vec![generator]))
    }

    fn sequence(&self) -> Result<&SequenceSource> {
        match &self.source {
            Source::Sequence(s) => Ok(s),
            Source::Game(_) => Err(Error::domain(format!("`{}` is a game, not a sequence pair", self.key))),
        }
    }

    /// The first `horizon` terms; explicit prefixes may be shorter.
    pub fn pair(&self, horizon: usize) -> Result<SequencePair> {
        match self.sequence()? {
            SequenceSource::Explicit(pair) => Ok(pair.truncate(horizon)),
            SequenceSource::Beatty(params) => beatty_pair(params, horizon),
            SequenceSource::MouseTrap => Ok(mouse_trap(horizon)),
            SequenceSource::Gdwn12Pairs => {
                let mut limit = horizon as u64 + 1;
                loop {
                    let p = gdwn12_pairs(limit)?;
                    if p.horizon() >= horizon {
                        return Ok(p.truncate(horizon));
                    }
                    limit *= 2;
                }
            }
        }
    }

    /// Shortest prefix containing every `n` with `a_n <= limit`.
    pub fn pair_covering(&self, limit: u64) -> Result<SequencePair> {
        match self.sequence()? {
            SequenceSource::Explicit(pair) => pair.covering(limit),
            SequenceSource::Beatty(params) => {
                let mut a = vec![0];
                let mut b = vec![0];
                for t in params.terms() {
                    let (_, x, y) = t?;
                    a.push(x);
                    b.push(y);
                    if x >= limit {
                        break;
                    }
                }
                SequencePair::new(a, b)
            }
            SequenceSource::MouseTrap => Ok(mouse_trap((2 * limit / 3 + 2) as usize).covering(limit)?),
            SequenceSource::Gdwn12Pairs => gdwn12_pairs(limit),
        }
    }

    /// A claimed P-set for the feasibility check on `[0, bound]²`: the solved
    /// P-set for games, the symmetric pair closure for sequences.
    pub fn claimed_set(&self, bound: u64) -> Result<BTreeSet<Position>> {
        match &self.source {
            Source::Game(g) => Ok(solve(g, bound)?.p_positions().into_iter().collect()),
            Source::Sequence(SequenceSource::Explicit(pair)) => Ok(claimed_from_pair(pair)),
            Source::Sequence(_) => Ok(claimed_from_pair(&self.pair_covering(bound)?)),
        }
    }
}

pub fn mouse_trap(horizon: usize) -> SequencePair {
    SequencePair::from_fn(horizon, |n| 3 * n / 2, |n| 3 * n - 1)
}

fn linear(name: &str, dirs: &[(u64, u64)]) -> GameSpec {
    GameSpec::new(name, dirs.iter().map(|&(p, q)| MoveGenerator::Linear { p, q }).collect())
}

pub fn nim2() -> GameSpec {
    linear("nim2", &[(0, 1), (1, 0)])
}

pub fn wythoff() -> GameSpec {
    linear("wythoff", &[(0, 1), (1, 1)])
}

pub fn gdwn12() -> GameSpec {
    linear("gdwn12", &[(0, 1), (1, 1), (1, 2)])
}

/// The `gdwn12` P-positions `(a_n, b_n)` with `a_n <= b_n`, `a` increasing,
/// up to the first `a_n >= limit`.
pub fn gdwn12_pairs(limit: u64) -> Result<SequencePair> {
    let game = gdwn12();
    let mut window = 3 * limit + 8;
    'grow: loop {
        let table = solve(&game, window)?;
        let mut a = Vec::new();
        let mut b = Vec::new();
        for x in 0..=window {
            // the (0,1) moves leave at most one P-position per row
            match (0..=window).find(|&y| table.is_p(Position::new(x, y))) {
                None => {
                    window *= 2;
                    continue 'grow;
                }
                Some(y) if y >= x => {
                    a.push(x);
                    b.push(y);
                    if x >= limit {
                        return SequencePair::new(a, b);
                    }
                }
                Some(_) => {}
            }
        }
        window *= 2;
    }
}

fn table3_self_test() -> Result<()> {
    static CHECK: OnceLock<std::result::Result<(), String>> = OnceLock::new();
    CHECK
        .get_or_init(|| {
            let stored = explicit_pair(&TABLE3.0, &TABLE3.1).map_err(|e| e.to_string())?;
            let computed = gdwn12_pairs(16).map_err(|e| e.to_string())?;
            if computed.truncate(stored.horizon()) != stored {
                return Err(format!(
                    "stored table3 disagrees with solved gdwn12: a = {:?}, b = {:?}",
                    computed.a(),
                    computed.b()
                ));
            }
            Ok(())
        })
        .clone()
        .map_err(Error::Domain)
}

/// Inhomogeneous Beatty parameters starting like `table2`.
///
/// `α = 7/5 + √2/100`, `β = α/(α − 1)`, `ε₂ = 7/2 − β`; `δ` is the least
/// `√5/5 + k/1000` with `1/2 + ε₂ <= δ < 1 − 2ε₂`, and `γ = −δα/β`. The
/// constraints on `δ` and `γ` and the first two terms are verified here.
pub fn table2_beatty() -> Result<BeattyParams> {
    let precision = Precision::from_env()?;
    let eps1 = Real::sqrt(2) / Real::int(100);
    let alpha = (Real::ratio(7, 5)? + eps1.clone()).simplify();
    let beta = (alpha.clone() / (alpha.clone() - Real::int(1))).simplify();
    let eps2 = Real::ratio(7, 2)? - beta;
    let lo = Real::ratio(1, 2)? + eps2.clone();
    let hi = Real::int(1) - Real::int(2) * eps2;
    let below = |x: &Real, y: &Real| -> Result<bool> { Ok(x.cmp_certified(y, &precision)? == Ordering::Less) };
    let mut chosen = None;
    for k in 0..1000 {
        let delta = (Real::sqrt(5) / Real::int(5) + Real::ratio(k, 1000)?).simplify();
        if !below(&delta, &lo)? && below(&delta, &hi)? {
            chosen = Some(delta);
            break;
        }
    }
    let delta = chosen.ok_or_else(|| Error::domain("no admissible δ of the form √5/5 + k/1000"))?;
    let params = BeattyParams::with_delta(alpha, delta)?.with_precision(precision)?;

    let gamma = params.gamma();
    let g_lo = Real::ratio(-2, 5)? - eps1.clone();
    let g_hi = Real::ratio(1, 5)? - Real::int(2) * eps1;
    if !below(gamma, &Real::zero())? || below(gamma, &g_lo)? || !below(gamma, &g_hi)? {
        return Err(Error::domain(format!("γ = {:.6} violates its constraints", gamma.to_f64())));
    }
    let prefix = beatty_pair(&params, 2)?;
    if prefix.a() != [0, 1, 2] || prefix.b() != [0, 4, 7] {
        return Err(Error::domain(format!(
            "parameters give a = {:?}, b = {:?}, expected table2",
            prefix.a(),
            prefix.b()
        )));
    }
    Ok(params)
}

fn parse_alpha(spec: &str) -> Result<Real> {
    match spec {
        "phi" => Ok(Real::golden_ratio()),
        "sqrt2" => Ok(Real::sqrt(2)),
        "sqrt3" => Ok(Real::sqrt(3)),
        _ => {
            let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
            let bad = || Error::Parse(format!("cannot read `{spec}` as phi, sqrt2, sqrt3 or p,q,d,r"));
            if parts.len() != 4 {
                return Err(bad());
            }
            let p: i64 = parts[0].parse().map_err(|_| bad())?;
            let q: i64 = parts[1].parse().map_err(|_| bad())?;
            let d: u64 = parts[2].parse().map_err(|_| bad())?;
            let r: i64 = parts[3].parse().map_err(|_| bad())?;
            Ok(Real::Quadratic(QuadraticIrrational::new(p, q, d, r)?))
        }
    }
}

fn entry(key: &str, description: &'static str, source: Source) -> CatalogEntry {
    CatalogEntry { key: key.to_string(), description, source }
}

fn explicit(values: (&[i64], &[i64])) -> Result<Source> {
    Ok(Source::Sequence(SequenceSource::Explicit(explicit_pair(values.0, values.1)?)))
}

pub fn get(key: &str) -> Result<CatalogEntry> {
    if let Some(alpha) = key.strip_prefix("beatty:") {
        let params = BeattyParams::homogeneous(parse_alpha(alpha)?)?.with_precision(Precision::from_env()?)?;
        return Ok(entry(key, "homogeneous Beatty pair", Source::Sequence(SequenceSource::Beatty(params))));
    }
    let e = match key {
        "empty" => entry(key, "no moves", Source::Game(GameSpec::new("empty", vec![]))),
        "nim2" => entry(key, "two-pile Nim", Source::Game(nim2())),
        "wythoff" => entry(key, "Wythoff Nim", Source::Game(wythoff())),
        "wythoff-star" => {
            let params = BeattyParams::homogeneous(Real::golden_ratio())?;
            entry(key, "dual of Wythoff Nim, moves {⌊nφ⌋, ⌊nφ²⌋}", Source::Sequence(SequenceSource::Beatty(params)))
        }
        "gdwn12" => entry(key, "(1,2) generalised diagonal Wythoff Nim", Source::Game(gdwn12())),
        "mouse-trap" => entry(key, "a_n = ⌊3n/2⌋, b_n = 3n - 1", Source::Sequence(SequenceSource::MouseTrap)),
        "table1" => entry(key, "b fails the right superadditivity inequality", explicit((&TABLE1.0, &TABLE1.1))?),
        "table2" => entry(key, "b fails the left superadditivity inequality", explicit((&TABLE2.0, &TABLE2.1))?),
        "table3" => {
            table3_self_test()?;
            entry(key, "first P-positions of gdwn12", explicit((&TABLE3.0, &TABLE3.1))?)
        }
        "table3-extended" => {
            table3_self_test()?;
            entry(key, "P-positions of gdwn12, any length", Source::Sequence(SequenceSource::Gdwn12Pairs))
        }
        "table2-beatty" => entry(
            key,
            "inhomogeneous Beatty pair beginning like table2",
            Source::Sequence(SequenceSource::Beatty(table2_beatty()?)),
        ),
        _ => {
            return Err(Error::Lookup {
                key: key.to_string(),
                available: format!("{}, beatty:p,q,d,r", KEYS.join(", ")),
            })
        }
    };
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::enumerate_moves;
    use crate::sequences::{check_sac, TParam};

    #[test]
    fn every_key_loads() {
        for key in KEYS {
            let e = get(key).unwrap();
            enumerate_moves(&e.spec(400).unwrap(), 400).unwrap();
        }
    }

    #[test]
    fn unknown_key_lists_available() {
        let err = get("chess").unwrap_err();
        assert_eq!(err.code(), "lookup");
        assert!(err.to_string().contains("mouse-trap"));
        assert_eq!(get("beatty:1,2").unwrap_err().code(), "parse");
    }

    #[test]
    fn table3_matches_gdwn12() {
        let t3 = get("table3").unwrap().pair(100).unwrap();
        assert_eq!(t3.b(), &[0, 3, 6, 5, 10, 14, 17, 25, 28, 18, 35, 23]);
        let ext = get("table3-extended").unwrap().pair(11).unwrap();
        assert_eq!(ext, t3);
    }

    #[test]
    fn table2_beatty_prefix() {
        let e = get("table2-beatty").unwrap();
        let p = e.pair(7).unwrap();
        assert_eq!(p.a(), &[0, 1, 2, 3, 5, 6, 8, 9]);
        assert_eq!(p.b(), &[0, 4, 7, 10, 14, 17, 21, 24]);
    }

    #[test]
    fn mouse_trap_is_sac() {
        let p = get("mouse-trap").unwrap().pair(1000).unwrap();
        assert!(check_sac(&p, TParam::Fixed(2)).overall);
    }

    #[test]
    fn covering_prefixes() {
        for key in ["mouse-trap", "beatty:sqrt2", "table3-extended"] {
            let p = get(key).unwrap().pair_covering(50).unwrap();
            let a = p.a();
            assert!(a[a.len() - 1] >= 50 && a[a.len() - 2] < 50, "{key}");
        }
    }
}
