//! The game board: pairs of pile sizes under coordinate-wise `⊕`, `⊖` and `⪯`,
//! and invariant games described by generators of their move sets.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::sequences::{BeattyParams, Real, SequencePair};
use crate::solver;

/// A position (or a move) on the two-pile board.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Position {
    pub x: u64,
    pub y: u64,
}

impl Position {
    pub const ORIGIN: Position = Position { x: 0, y: 0 };

    pub const fn new(x: u64, y: u64) -> Self {
        Self { x, y }
    }

    pub fn swap(self) -> Self {
        Self::new(self.y, self.x)
    }

    pub fn is_origin(self) -> bool {
        self == Self::ORIGIN
    }

    /// Largest coordinate.
    pub fn max_coord(self) -> u64 {
        self.x.max(self.y)
    }

    pub fn min_coord(self) -> u64 {
        self.x.min(self.y)
    }

    pub fn fits(self, bound: u64) -> bool {
        self.x <= bound && self.y <= bound
    }
}

impl From<(u64, u64)> for Position {
    fn from((x, y): (u64, u64)) -> Self {
        Self::new(x, y)
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Space-separated `(x,y)` list.
pub fn format_positions<'a>(ps: impl IntoIterator<Item = &'a Position>) -> String {
    ps.into_iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// `p ⊕ q`.
pub fn add(p: Position, q: Position) -> Result<Position> {
    match (p.x.checked_add(q.x), p.y.checked_add(q.y)) {
        (Some(x), Some(y)) => Ok(Position::new(x, y)),
        _ => Err(Error::range(format!("{p} ⊕ {q} overflows"))),
    }
}

/// `p ⊖ q`, defined only for `q ⪯ p`.
pub fn sub(p: Position, q: Position) -> Result<Position> {
    if !leq(q, p) {
        return Err(Error::domain(format!("cannot subtract {q} from {p}: {q} ⋠ {p}")));
    }
    Ok(Position::new(p.x - q.x, p.y - q.y))
}

/// `p ⪯ q`.
pub fn leq(p: Position, q: Position) -> bool {
    p.x <= q.x && p.y <= q.y
}

#[derive(Clone, Debug, PartialEq)]
pub enum MoveGenerator {
    /// A fixed list. `complete_to = Some(w)` records that the list is the full
    /// move set within `[0, w]²` and nothing beyond that is known.
    Explicit { moves: Vec<Position>, complete_to: Option<u64> },
    /// `{(p·i, q·i) : i >= 1}`.
    Linear { p: u64, q: u64 },
    /// `{(⌊nα⌋, ⌊nβ⌋) : n >= 1}`.
    BeattyHomogeneous { alpha: Real },
    /// `{(⌊nα + γ⌋, ⌊nβ + δ⌋) : n >= 1}`.
    BeattyInhomogeneous(BeattyParams),
    /// `{(a_n, b_n) : 1 <= n <= N}` from a known prefix.
    SequencePair(SequencePair),
    /// Nonzero P-positions of another game, solved at `bound`.
    StarOf { game: Box<GameSpec>, bound: u64 },
}

impl MoveGenerator {
    pub fn explicit(moves: impl IntoIterator<Item = Position>) -> Self {
        MoveGenerator::Explicit { moves: moves.into_iter().collect(), complete_to: None }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            MoveGenerator::Explicit { .. } => "explicit",
            MoveGenerator::Linear { .. } => "linear",
            MoveGenerator::BeattyHomogeneous { .. } => "beatty",
            MoveGenerator::BeattyInhomogeneous(_) => "beatty-inhomogeneous",
            MoveGenerator::SequencePair(_) => "sequence-pair",
            MoveGenerator::StarOf { .. } => "star",
        }
    }

    /// Moves with both coordinates `<= bound`, unsorted, before symmetric closure.
    fn emit(&self, bound: u64, out: &mut BTreeSet<Position>) -> Result<()> {
        match self {
            MoveGenerator::Explicit { moves, complete_to } => {
                if let Some(w) = complete_to {
                    if bound > *w {
                        return Err(Error::domain(format!(
                            "explicit move list is only complete to {w}, requested bound {bound}"
                        )));
                    }
                }
                out.extend(moves.iter().copied().filter(|m| m.fits(bound)));
            }
            MoveGenerator::Linear { p, q } => {
                if *p == 0 && *q == 0 {
                    return Err(Error::domain("linear family (0,0) generates the zero move"));
                }
                let steps = [*p, *q].iter().filter(|&&c| c > 0).map(|&c| bound / c).min().unwrap();
                out.extend((1..=steps).map(|i| Position::new(p * i, q * i)));
            }
            MoveGenerator::BeattyHomogeneous { alpha } => {
                let params = BeattyParams::homogeneous(alpha.clone())?;
                emit_beatty(&params, bound, out)?;
            }
            MoveGenerator::BeattyInhomogeneous(params) => emit_beatty(params, bound, out)?,
            MoveGenerator::SequencePair(pair) => {
                let cover = pair.covering(bound)?;
                out.extend(cover.pairs().map(Position::from).filter(|m| m.fits(bound)));
            }
            MoveGenerator::StarOf { game, bound: window } => {
                if bound > *window {
                    return Err(Error::domain(format!(
                        "star generator solved to {window}, requested bound {bound}"
                    )));
                }
                let table = solver::solve(game, bound)?;
                out.extend(table.p_positions().into_iter().filter(|p| !p.is_origin()));
            }
        }
        Ok(())
    }
}

fn emit_beatty(params: &BeattyParams, bound: u64, out: &mut BTreeSet<Position>) -> Result<()> {
    // both sequences are strictly increasing, so stop once min(a_n, b_n) > bound
    for term in params.terms() {
        let (_, a, b) = term?;
        if a.min(b) > bound {
            break;
        }
        let m = Position::new(a, b);
        if m.fits(bound) {
            out.insert(m);
        }
    }
    Ok(())
}

/// An invariant game given by generators of its move set.
#[derive(Clone, Debug, PartialEq)]
pub struct GameSpec {
    pub name: String,
    pub arity: usize,
    pub generators: Vec<MoveGenerator>,
    pub symmetric: bool,
}

impl GameSpec {
    /// Two-pile, symmetric.
    pub fn new(name: impl Into<String>, generators: Vec<MoveGenerator>) -> Self {
        Self { name: name.into(), arity: 2, generators, symmetric: true }
    }

    pub fn asymmetric(mut self) -> Self {
        self.symmetric = false;
        self
    }

    pub fn check_arity(&self) -> Result<()> {
        if self.arity != 2 {
            return Err(Error::Arity(self.arity));
        }
        Ok(())
    }
}

/// All moves of `spec` with both coordinates `<= bound`: deduplicated,
/// symmetric-closed when the spec is symmetric, sorted lexicographically.
pub fn enumerate_moves(spec: &GameSpec, bound: u64) -> Result<Vec<Position>> {
    spec.check_arity()?;
    let mut set = BTreeSet::new();
    for g in &spec.generators {
        g.emit(bound, &mut set)?;
    }
    if set.remove(&Position::ORIGIN) {
        return Err(Error::domain(format!("game `{}` has the zero move", spec.name)));
    }
    if spec.symmetric {
        let swapped: Vec<_> = set.iter().map(|m| m.swap()).collect();
        set.extend(swapped);
    }
    Ok(set.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pos(x: u64, y: u64) -> Position {
        Position::new(x, y)
    }

    #[test]
    fn add_examples() {
        assert_eq!(add(pos(0, 0), pos(5, 7)).unwrap(), pos(5, 7));
        assert_eq!(add(pos(1, 2), pos(3, 4)).unwrap(), pos(4, 6));
        assert_eq!(add(pos(104, 235), pos(11, 23)).unwrap(), pos(115, 258));
        assert_eq!(add(pos(u64::MAX, 0), pos(1, 0)).unwrap_err().code(), "range");
    }

    #[test]
    fn sub_examples() {
        assert_eq!(sub(pos(115, 258), pos(104, 235)).unwrap(), pos(11, 23));
        assert_eq!(sub(pos(4, 13), pos(2, 7)).unwrap(), pos(2, 6));
        assert_eq!(sub(pos(3, 3), pos(3, 3)).unwrap(), pos(0, 0));
        assert_eq!(sub(pos(1, 5), pos(5, 1)).unwrap_err().code(), "domain");
    }

    #[test]
    fn leq_examples() {
        assert!(leq(pos(0, 0), pos(0, 0)));
        assert!(leq(pos(2, 7), pos(4, 13)));
        assert!(!leq(pos(1, 5), pos(5, 1)));
        assert!(!leq(pos(5, 1), pos(1, 5)));
    }

    #[test]
    fn enumerate_nim_and_gdwn() {
        let nim = GameSpec::new(
            "nim2",
            vec![MoveGenerator::Linear { p: 0, q: 1 }, MoveGenerator::Linear { p: 1, q: 0 }],
        );
        assert_eq!(
            enumerate_moves(&nim, 3).unwrap(),
            vec![pos(0, 1), pos(0, 2), pos(0, 3), pos(1, 0), pos(2, 0), pos(3, 0)]
        );
        let gdwn = GameSpec::new(
            "gdwn12",
            vec![
                MoveGenerator::Linear { p: 0, q: 1 },
                MoveGenerator::Linear { p: 1, q: 1 },
                MoveGenerator::Linear { p: 1, q: 2 },
            ],
        );
        assert_eq!(
            enumerate_moves(&gdwn, 2).unwrap(),
            vec![pos(0, 1), pos(0, 2), pos(1, 0), pos(1, 1), pos(1, 2), pos(2, 0), pos(2, 1), pos(2, 2)]
        );
        let empty = GameSpec::new("empty", vec![]);
        assert!(enumerate_moves(&empty, 7).unwrap().is_empty());
    }

    #[test]
    fn arity_and_zero_move_rejected() {
        let mut g = GameSpec::new("k3", vec![]);
        g.arity = 3;
        assert_eq!(enumerate_moves(&g, 3).unwrap_err().code(), "arity");
        let z = GameSpec::new("z", vec![MoveGenerator::explicit([pos(0, 0)])]);
        assert!(enumerate_moves(&z, 3).is_err());
        let z = GameSpec::new("z", vec![MoveGenerator::Linear { p: 0, q: 0 }]);
        assert!(enumerate_moves(&z, 3).is_err());
    }

    #[test]
    fn window_complete_lists() {
        let g = GameSpec::new(
            "w",
            vec![MoveGenerator::Explicit { moves: vec![pos(1, 1)], complete_to: Some(5) }],
        );
        assert_eq!(enumerate_moves(&g, 5).unwrap(), vec![pos(1, 1)]);
        assert_eq!(enumerate_moves(&g, 6).unwrap_err().code(), "domain");
    }

    #[test]
    fn beatty_generator_matches_wythoff_pairs() {
        let g = GameSpec::new("wn*", vec![MoveGenerator::BeattyHomogeneous { alpha: Real::golden_ratio() }]);
        assert_eq!(
            enumerate_moves(&g, 10).unwrap(),
            vec![pos(1, 2), pos(2, 1), pos(3, 5), pos(4, 7), pos(5, 3), pos(6, 10), pos(7, 4), pos(10, 6)]
        );
    }
}
