//! Exact P/N classification on a square window `[0, X]²`.
//!
//! Every option of a subtraction game is strictly below its position, so the
//! class of a cell depends only on cells inside the window and the truncated
//! table is exact.

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use crate::board::{enumerate_moves, leq, sub, GameSpec, Position};
use crate::error::{Error, Result};

/// Largest window accepted by the dense solver.
pub const MAX_BOUND: u64 = 1 << 15;

/// Default guard for [`oracle_solve`].
pub const ORACLE_GUARD: u64 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Class {
    P,
    N,
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Class::P => "P",
            Class::N => "N",
        })
    }
}

/// Dense bit grid over `[0, X]²`, bit set = P.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveTable {
    bound: u64,
    bits: Vec<u64>,
    moves: Vec<Position>,
    spec_name: String,
}

impl SolveTable {
    fn empty(bound: u64, moves: Vec<Position>, spec_name: &str) -> Self {
        let side = bound as usize + 1;
        Self { bound, bits: vec![0; (side * side).div_ceil(64)], moves, spec_name: spec_name.to_string() }
    }

    fn index(&self, p: Position) -> usize {
        p.x as usize * (self.bound as usize + 1) + p.y as usize
    }

    fn set_p(&mut self, p: Position) {
        let i = self.index(p);
        self.bits[i / 64] |= 1 << (i % 64);
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    /// The enumerated moves used for the solve (all fit the window).
    pub fn moves(&self) -> &[Position] {
        &self.moves
    }

    pub fn spec_name(&self) -> &str {
        &self.spec_name
    }

    pub fn is_p(&self, p: Position) -> bool {
        assert!(p.fits(self.bound), "{p} outside window [0,{}]²", self.bound);
        let i = self.index(p);
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn class(&self, p: Position) -> Option<Class> {
        p.fits(self.bound).then(|| if self.is_p(p) { Class::P } else { Class::N })
    }

    /// All P-positions, lexicographically sorted.
    pub fn p_positions(&self) -> Vec<Position> {
        self.cells().filter(|&p| self.is_p(p)).collect()
    }

    pub fn cells(&self) -> impl Iterator<Item = Position> {
        let b = self.bound;
        (0..=b).flat_map(move |x| (0..=b).map(move |y| Position::new(x, y)))
    }

    /// The table restricted to `[0, bound]²`.
    pub fn restrict(&self, bound: u64) -> SolveTable {
        let bound = bound.min(self.bound);
        let moves = self.moves.iter().copied().filter(|m| m.fits(bound)).collect();
        let mut t = SolveTable::empty(bound, moves, &self.spec_name);
        for p in self.cells().filter(|p| p.fits(bound) && self.is_p(*p)) {
            t.set_p(p);
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.cells().all(|p| p.x >= p.y || self.is_p(p) == self.is_p(p.swap()))
    }

    /// Re-checks every cell against the definition: P iff no option is P.
    /// Returns the first inconsistent cell.
    pub fn verify(&self) -> std::result::Result<(), Position> {
        for p in self.cells() {
            let has_p_option = self
                .moves
                .iter()
                .filter(|&&r| leq(r, p))
                .any(|&r| self.is_p(Position::new(p.x - r.x, p.y - r.y)));
            if has_p_option == self.is_p(p) {
                return Err(p);
            }
        }
        Ok(())
    }
}

fn check_bound(bound: u64) -> Result<()> {
    if bound > MAX_BOUND {
        return Err(Error::domain(format!("bound {bound} exceeds the dense-grid limit {MAX_BOUND}")));
    }
    Ok(())
}

/// Solves on the global rayon pool (sequential for small windows).
pub fn solve(spec: &GameSpec, bound: u64) -> Result<SolveTable> {
    let jobs = if bound < 64 { 1 } else { rayon::current_num_threads() };
    solve_inner(spec, bound, jobs, None)
}

/// Solves with exactly `jobs` worker threads; `jobs = 1` is the plain
/// row-major sweep. Results never depend on `jobs`.
pub fn solve_with(spec: &GameSpec, bound: u64, jobs: usize) -> Result<SolveTable> {
    if jobs <= 1 {
        return solve_inner(spec, bound, 1, None);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::domain(format!("cannot start {jobs} workers: {e}")))?;
    solve_inner(spec, bound, jobs, Some(&pool))
}

fn solve_inner(
    spec: &GameSpec,
    bound: u64,
    jobs: usize,
    pool: Option<&rayon::ThreadPool>,
) -> Result<SolveTable> {
    check_bound(bound)?;
    let moves = enumerate_moves(spec, bound)?;
    let mut table = SolveTable::empty(bound, moves, &spec.name);
    if jobs <= 1 {
        sweep_rows(&mut table);
    } else if let Some(pool) = pool {
        pool.install(|| sweep_diagonals(&mut table));
    } else {
        sweep_diagonals(&mut table);
    }
    Ok(table)
}

/// Row-major forward sweep: a cell not yet marked N is P, and marks every
/// `p ⊕ r` inside the window as N.
fn sweep_rows(table: &mut SolveTable) {
    let side = table.bound as usize + 1;
    let mut n_bits = vec![0u64; table.bits.len()];
    let moves: Vec<(usize, usize)> = table.moves.iter().map(|m| (m.x as usize, m.y as usize)).collect();
    for x in 0..side {
        for y in 0..side {
            let i = x * side + y;
            if n_bits[i / 64] >> (i % 64) & 1 == 1 {
                continue;
            }
            table.bits[i / 64] |= 1 << (i % 64);
            for &(dx, dy) in &moves {
                let (u, v) = (x + dx, y + dy);
                if u < side && v < side {
                    let j = u * side + v;
                    n_bits[j / 64] |= 1 << (j % 64);
                }
            }
        }
    }
}

/// Anti-diagonal sweep: cells with `x + y = s` depend only on diagonals
/// `< s`, so each diagonal is classified in parallel and its P cells then
/// mark their followers N with atomic ORs.
fn sweep_diagonals(table: &mut SolveTable) {
    let bound = table.bound as usize;
    let side = bound + 1;
    let n_bits: Vec<AtomicU64> = (0..table.bits.len()).map(|_| AtomicU64::new(0)).collect();
    let moves: Vec<(usize, usize)> = table.moves.iter().map(|m| (m.x as usize, m.y as usize)).collect();
    for s in 0..=2 * bound {
        let lo = s.saturating_sub(bound);
        let hi = s.min(bound);
        let p_cells: Vec<(usize, usize)> = (lo..=hi)
            .into_par_iter()
            .map(|x| (x, s - x))
            .filter(|&(x, y)| {
                let i = x * side + y;
                n_bits[i / 64].load(Ordering::Relaxed) >> (i % 64) & 1 == 0
            })
            .collect();
        for &(x, y) in &p_cells {
            let i = x * side + y;
            table.bits[i / 64] |= 1 << (i % 64);
        }
        p_cells.par_iter().for_each(|&(x, y)| {
            for &(dx, dy) in &moves {
                let (u, v) = (x + dx, y + dy);
                if u < side && v < side {
                    let j = u * side + v;
                    n_bits[j / 64].fetch_or(1 << (j % 64), Ordering::Relaxed);
                }
            }
        });
    }
}

/// Independent oracle: memoised top-down recursion straight from the
/// definition. Refuses windows above [`ORACLE_GUARD`].
pub fn oracle_solve(spec: &GameSpec, bound: u64) -> Result<SolveTable> {
    oracle_solve_guarded(spec, bound, ORACLE_GUARD)
}

pub fn oracle_solve_guarded(spec: &GameSpec, bound: u64, guard: u64) -> Result<SolveTable> {
    if bound > guard {
        return Err(Error::OracleGuard { bound, guard });
    }
    let moves = enumerate_moves(spec, bound)?;
    let mut memo: HashMap<Position, bool> = HashMap::new();

    fn is_p(pos: Position, moves: &[Position], memo: &mut HashMap<Position, bool>) -> bool {
        if let Some(&v) = memo.get(&pos) {
            return v;
        }
        let mut result = true;
        for &r in moves {
            if let Ok(option) = sub(pos, r) {
                if is_p(option, moves, memo) {
                    result = false;
                    break;
                }
            }
        }
        memo.insert(pos, result);
        result
    }

    let mut table = SolveTable::empty(bound, moves.clone(), &spec.name);
    for x in 0..=bound {
        for y in 0..=bound {
            let p = Position::new(x, y);
            if is_p(p, &moves, &mut memo) {
                table.set_p(p);
            }
        }
    }
    Ok(table)
}

/// All P-positions of a solved table, lexicographically sorted.
pub fn p_positions(table: &SolveTable) -> Vec<Position> {
    table.p_positions()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TerminalSet {
    pub bound: u64,
    /// Positions with no legal move, lexicographically sorted.
    pub positions: Vec<Position>,
    /// Whether the set is downward-closed under `⪯` (checked, not assumed).
    pub lower_ideal: bool,
}

impl TerminalSet {
    pub fn contains(&self, p: Position) -> bool {
        self.positions.binary_search(&p).is_ok()
    }
}

/// Terminal positions in the window: no enumerated move `r ⪯ x`.
pub fn terminal_set(spec: &GameSpec, bound: u64) -> Result<TerminalSet> {
    check_bound(bound)?;
    let moves = enumerate_moves(spec, bound)?;
    let side = bound as usize + 1;
    // up[x][y]: some move lies below (x, y)
    let mut up = vec![false; side * side];
    for m in &moves {
        up[m.x as usize * side + m.y as usize] = true;
    }
    for x in 0..side {
        for y in 0..side {
            let i = x * side + y;
            up[i] = up[i] || (x > 0 && up[i - side]) || (y > 0 && up[i - 1]);
        }
    }
    let positions: Vec<Position> = (0..side)
        .flat_map(|x| (0..side).map(move |y| (x, y)))
        .filter(|&(x, y)| !up[x * side + y])
        .map(|(x, y)| Position::new(x as u64, y as u64))
        .collect();
    let lower_ideal = positions.iter().all(|p| {
        let below_x = p.x == 0 || !up[(p.x as usize - 1) * side + p.y as usize];
        let below_y = p.y == 0 || !up[p.x as usize * side + p.y as usize - 1];
        below_x && below_y
    });
    Ok(TerminalSet { bound, positions, lower_ideal })
}
