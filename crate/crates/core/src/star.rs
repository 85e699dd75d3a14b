//! The star operator: the invariant game whose moves are the nonzero
//! P-positions of another game, and window-limited duality checks.
//!
//! Game equality here always means equality of move sets inside the stated
//! window `[0, X]²`.

use std::collections::BTreeSet;
use std::fmt;

use crate::board::{enumerate_moves, GameSpec, MoveGenerator, Position};
use crate::error::{Error, Result};
use crate::sequences::{check_complementary, check_relaxed_growth, check_sac, SacReport, SequencePair, TParam, Verdict};
use crate::solver::{solve, SolveTable};

/// Builds the dual from an already solved table.
pub fn star_from_table(table: &SolveTable, symmetric: bool) -> GameSpec {
    let moves = table.p_positions().into_iter().filter(|p| !p.is_origin()).collect();
    GameSpec {
        name: format!("{}*", table.spec_name()),
        arity: 2,
        generators: vec![MoveGenerator::Explicit { moves, complete_to: Some(table.bound()) }],
        symmetric,
    }
}

/// `G*` on the window `[0, X]²`: an explicit move list `P(G) \ {0}`, marked
/// complete to `X`.
pub fn star(spec: &GameSpec, bound: u64) -> Result<GameSpec> {
    let table = solve(spec, bound)?;
    Ok(star_from_table(&table, spec.symmetric))
}

pub fn iterate_star(spec: &GameSpec, times: u32, bound: u64) -> Result<GameSpec> {
    if times == 0 {
        return Err(Error::domain("star must be applied at least once"));
    }
    let mut g = star(spec, bound)?;
    for _ in 1..times {
        g = star(&g, bound)?;
    }
    Ok(g)
}

/// The game with moves `{{a_n, b_n} : n >= 1}`.
pub fn sequence_game(pair: &SequencePair, name: impl Into<String>) -> GameSpec {
    GameSpec::new(name, vec![MoveGenerator::SequencePair(pair.clone())])
}

/// An element present on one side of a set comparison only.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SetMismatch {
    pub position: Position,
    /// True when the element is in the computed set but not the expected one.
    pub unexpected: bool,
}

impl fmt::Display for SetMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.unexpected {
            write!(f, "{} computed but not expected", self.position)
        } else {
            write!(f, "{} expected but not computed", self.position)
        }
    }
}

/// Least element of the symmetric difference, if any.
pub fn first_mismatch(computed: &BTreeSet<Position>, expected: &BTreeSet<Position>) -> Verdict<SetMismatch> {
    let extra = computed.difference(expected).next();
    let missing = expected.difference(computed).next();
    let m = match (extra, missing) {
        (None, None) => return Verdict::Holds,
        (Some(&e), None) => SetMismatch { position: e, unexpected: true },
        (None, Some(&m)) => SetMismatch { position: m, unexpected: false },
        (Some(&e), Some(&m)) if e < m => SetMismatch { position: e, unexpected: true },
        (_, Some(&m)) => SetMismatch { position: m, unexpected: false },
    };
    Verdict::Fails(m)
}

/// Move-set equality of two games inside `[0, X]²`.
pub fn same_moves(left: &GameSpec, right: &GameSpec, bound: u64) -> Result<Verdict<SetMismatch>> {
    let l: BTreeSet<_> = enumerate_moves(left, bound)?.into_iter().collect();
    let r: BTreeSet<_> = enumerate_moves(right, bound)?.into_iter().collect();
    Ok(first_mismatch(&l, &r))
}

#[derive(Clone, Debug)]
pub struct DualityReport {
    pub bound: u64,
    /// `P(G*) = M(G) ∪ {0}` on the window.
    pub eq16_holds: Verdict<SetMismatch>,
    /// `(G*)* = G` on the window.
    pub eq17_holds: Verdict<SetMismatch>,
    /// SAC report with `t = b_1` on the covering prefix.
    pub sac_certified: SacReport,
    /// The `G*` P-positions inside the window (kept so failures can be traced).
    pub star_p_positions: Vec<Position>,
}

impl DualityReport {
    pub fn passed(&self) -> bool {
        self.eq16_holds.holds() && self.eq17_holds.holds()
    }
}

impl fmt::Display for DualityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "duality check on window [0,{}]^2", self.bound)?;
        writeln!(f, "  P(G*) = M(G) u {{0}}: {}", self.eq16_holds)?;
        writeln!(f, "  (G*)* = G:           {}", self.eq17_holds)?;
        writeln!(
            f,
            "  b1-SAC (t = {}, N = {}): {}",
            self.sac_certified.t,
            self.sac_certified.horizon,
            if self.sac_certified.overall { "yes" } else { "no" }
        )?;
        write!(
            f,
            "result: {}/{}",
            if self.eq16_holds.holds() { "PASS" } else { "FAIL" },
            if self.eq17_holds.holds() { "PASS" } else { "FAIL" }
        )
    }
}

/// Checks both duality equations for `M(G) = {{a_n, b_n}}` on `[0, X]²`.
/// The pair must cover every `n` with `a_n <= X`.
pub fn verify_duality(pair: &SequencePair, bound: u64) -> Result<DualityReport> {
    let cover = pair.covering(bound)?;
    let game = sequence_game(&cover, "G");
    let g_table = solve(&game, bound)?;
    let g_star = star_from_table(&g_table, true);
    let star_table = solve(&g_star, bound)?;

    let computed: BTreeSet<Position> = star_table.p_positions().into_iter().collect();
    let mut expected: BTreeSet<Position> = enumerate_moves(&game, bound)?.into_iter().collect();
    expected.insert(Position::ORIGIN);
    let eq16_holds = first_mismatch(&computed, &expected);

    let g_star_star = star_from_table(&star_table, true);
    let eq17_holds = same_moves(&g_star_star, &game, bound)?;

    Ok(DualityReport {
        bound,
        eq16_holds,
        eq17_holds,
        sac_certified: check_sac(&cover, TParam::Auto),
        star_p_positions: computed.into_iter().collect(),
    })
}

/// The alternative sufficient condition: increasing, complementary,
/// `a_1 = 1`, and the relaxed growth condition on `b`.
pub fn relaxed_duality_applicable(pair: &SequencePair) -> bool {
    let a = pair.a();
    let increasing = a.windows(2).all(|w| w[0] < w[1]) && pair.b().windows(2).all(|w| w[0] < w[1]);
    increasing
        && a.get(1).map_or(false, |&v| v == 1)
        && check_complementary(pair).holds()
        && check_relaxed_growth(pair).holds()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::explicit_pair;

    fn pos(x: u64, y: u64) -> Position {
        Position::new(x, y)
    }

    fn nim() -> GameSpec {
        GameSpec::new(
            "nim2",
            vec![MoveGenerator::Linear { p: 0, q: 1 }, MoveGenerator::Linear { p: 1, q: 0 }],
        )
    }

    #[test]
    fn star_of_nim() {
        let s = star(&nim(), 20).unwrap();
        assert_eq!(s.name, "nim2*");
        assert_eq!(enumerate_moves(&s, 20).unwrap(), (1..=20).map(|x| pos(x, x)).collect::<Vec<_>>());
        let p = solve(&s, 20).unwrap().p_positions();
        assert!(p.iter().all(|q| q.x == 0 || q.y == 0));
        assert_eq!(p.len(), 41);
        assert!(same_moves(&iterate_star(&nim(), 2, 20).unwrap(), &nim(), 20).unwrap().holds());
        // enumerating past the solved window is refused
        assert!(enumerate_moves(&s, 21).is_err());
    }

    #[test]
    fn star_of_empty() {
        let e = GameSpec::new("empty", vec![]);
        let s = star(&e, 2).unwrap();
        assert_eq!(enumerate_moves(&s, 2).unwrap().len(), 8);
        assert_eq!(solve(&s, 2).unwrap().p_positions(), vec![Position::ORIGIN]);
    }

    #[test]
    fn iterate_rejects_zero() {
        assert!(iterate_star(&nim(), 0, 5).is_err());
    }

    #[test]
    fn mismatch_order() {
        let a: BTreeSet<_> = [pos(0, 0), pos(2, 2)].into();
        let b: BTreeSet<_> = [pos(0, 0), pos(1, 5)].into();
        assert_eq!(
            first_mismatch(&a, &b),
            Verdict::Fails(SetMismatch { position: pos(1, 5), unexpected: false })
        );
    }

    #[test]
    fn relaxed_condition() {
        let t2 = explicit_pair(&[1, 2], &[4, 7]).unwrap();
        assert!(!relaxed_duality_applicable(&t2));
    }

    #[test]
    fn duality_needs_horizon() {
        let t2 = explicit_pair(&[1, 2], &[4, 7]).unwrap();
        assert_eq!(verify_duality(&t2, 10).unwrap_err().code(), "domain");
    }
}
