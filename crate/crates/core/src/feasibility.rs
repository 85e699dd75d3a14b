//! Finite obstructions to a claimed P-set being realised by any invariant
//! game, and rule-based P/N certificates for sequence games.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::board::{leq, sub, Position};
use crate::error::{Error, Result};
use crate::sequences::SequencePair;
use crate::solver::Class;

/// Rejects sets that are not symmetric or lack the origin.
fn check_claimed(claimed: &BTreeSet<Position>) -> Result<()> {
    if !claimed.contains(&Position::ORIGIN) {
        return Err(Error::domain("claimed P-set must contain (0,0)"));
    }
    if let Some(p) = claimed.iter().find(|p| !claimed.contains(&p.swap())) {
        return Err(Error::domain(format!("claimed P-set is not symmetric: {p} without {}", p.swap())));
    }
    Ok(())
}

/// For every blocked `r` in the window, the least `p` (and `q = p ⊖ r`) with
/// both `p` and `q` claimed.
fn blocked_moves(claimed: &BTreeSet<Position>, bound: u64) -> BTreeMap<Position, (Position, Position)> {
    let mut blocked = BTreeMap::new();
    for &p in claimed {
        for &q in claimed {
            if q == p || !leq(q, p) {
                continue;
            }
            let r = Position::new(p.x - q.x, p.y - q.y);
            if r.fits(bound) {
                blocked.entry(r).or_insert((p, q));
            }
        }
    }
    blocked
}

/// Moves `r` in `[0, X]² \ {0}` that join no two claimed positions.
pub fn admissible_moves(claimed: &BTreeSet<Position>, bound: u64) -> Result<BTreeSet<Position>> {
    check_claimed(claimed)?;
    let blocked = blocked_moves(claimed, bound);
    let mut out = BTreeSet::new();
    for x in 0..=bound {
        for y in 0..=bound {
            let r = Position::new(x, y);
            if !r.is_origin() && !blocked.contains_key(&r) {
                out.insert(r);
            }
        }
    }
    Ok(out)
}

/// `r` is unusable because `p ⊖ r = q` with `p, q` claimed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Blocker {
    pub r: Position,
    pub p: Position,
    pub q: Position,
}

impl Blocker {
    /// `r` is itself claimed (`p = r`, `q = 0`).
    pub fn is_membership(&self) -> bool {
        self.q.is_origin()
    }

    /// Re-derives the blocking relation with `leq` and `sub` alone.
    pub fn recheck(&self, claimed: &BTreeSet<Position>) -> bool {
        leq(self.r, self.p)
            && sub(self.p, self.r).map_or(false, |q| q == self.q)
            && claimed.contains(&self.p)
            && claimed.contains(&self.q)
    }
}

impl fmt::Display for Blocker {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_membership() {
            write!(f, "r = {} is claimed P (membership block)", self.r)
        } else {
            write!(f, "r = {}: {} ⊖ {} = {}", self.r, self.p, self.r, self.q)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FeasibilityVerdict {
    InfeasibleCertified,
    NoObstructionFound,
}

impl fmt::Display for FeasibilityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FeasibilityVerdict::InfeasibleCertified => "INFEASIBLE-CERTIFIED",
            FeasibilityVerdict::NoObstructionFound => "NO-OBSTRUCTION-FOUND",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibilityReport {
    pub verdict: FeasibilityVerdict,
    pub witness: Option<Position>,
    /// One blocker per candidate move from the witness into the claimed set,
    /// ordered by `r`.
    pub blockers: Vec<Blocker>,
    pub window: u64,
}

impl fmt::Display for FeasibilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verdict: {} (window [0,{}]^2)", self.verdict, self.window)?;
        match self.witness {
            Some(x) => {
                writeln!(f, "witness: {x} is not claimed, so it must be N, but every move into the claimed set is blocked:")?;
                for b in &self.blockers {
                    writeln!(f, "  {b}")?;
                }
                write!(f, "no invariant game has this P-set")
            }
            None => write!(
                f,
                "no obstruction in the window; this does not prove that an invariant game exists"
            ),
        }
    }
}

/// Searches for the least unclaimed `x` in the window whose every move into
/// the claimed set is inadmissible. The caller attests that `claimed` lists
/// every P-position of the window.
pub fn certify_infeasible(claimed: &BTreeSet<Position>, bound: u64) -> Result<FeasibilityReport> {
    check_claimed(claimed)?;
    let blocked = blocked_moves(claimed, bound);
    for x in 0..=bound {
        for y in 0..=bound {
            let pos = Position::new(x, y);
            if claimed.contains(&pos) {
                continue;
            }
            let mut blockers = Vec::new();
            let mut stuck = true;
            for &q in claimed.iter().filter(|&&q| leq(q, pos)) {
                let r = Position::new(x - q.x, y - q.y);
                match blocked.get(&r) {
                    Some(&(p, q)) => blockers.push(Blocker { r, p, q }),
                    None => {
                        stuck = false;
                        break;
                    }
                }
            }
            if stuck {
                blockers.sort_by_key(|b| b.r);
                return Ok(FeasibilityReport {
                    verdict: FeasibilityVerdict::InfeasibleCertified,
                    witness: Some(pos),
                    blockers,
                    window: bound,
                });
            }
        }
    }
    Ok(FeasibilityReport {
        verdict: FeasibilityVerdict::NoObstructionFound,
        witness: None,
        blockers: Vec::new(),
        window: bound,
    })
}

/// `{(a_n, b_n), (b_n, a_n)} ∪ {0}` over the whole known prefix.
pub fn claimed_from_pair(pair: &SequencePair) -> BTreeSet<Position> {
    let mut set: BTreeSet<Position> = pair.pairs().flat_map(|(a, b)| [Position::new(a, b), Position::new(b, a)]).collect();
    set.insert(Position::ORIGIN);
    set
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// A zero coordinate.
    Axis,
    /// Both coordinates below `b_1`.
    BelowB1,
    /// `k = a_n`, `l >= b_n`.
    AMove { n: usize },
    /// `k = b_n`, `l >= a_n`.
    BMove { n: usize },
    /// `k = a_n = a_{n-1} + 1`, `b_{n-1} <= l < b_{n-1} + b_1`, `n >= 2`.
    Step { n: usize },
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rule::Axis => f.write_str("(i)"),
            Rule::BelowB1 => f.write_str("(ii)"),
            Rule::AMove { n } => write!(f, "(iii)(a) n={n}"),
            Rule::BMove { n } => write!(f, "(iii)(b) n={n}"),
            Rule::Step { n } => write!(f, "(iii)(c) n={n}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub position: Position,
    pub class: Class,
    pub rule: Rule,
}

/// Rule-based classifications for the game with moves `{{a_n, b_n}}`, one
/// per window position that some rule covers (first applicable rule wins).
pub fn lemma23_certificates(pair: &SequencePair, bound: u64) -> Result<Vec<Certificate>> {
    let (a, b) = (pair.a(), pair.b());
    if pair.horizon() == 0 {
        return Err(Error::domain("sequence pair has no terms"));
    }
    let increasing = |s: &[u64]| s.windows(2).all(|w| w[0] < w[1]);
    if !increasing(a) || !increasing(b) {
        return Err(Error::domain("certificates need increasing sequences"));
    }
    let b1 = b[1];
    let index = |s: &[u64], v: u64| s[1..].binary_search(&v).ok().map(|i| i + 1);
    let rule_for = |k: u64, l: u64| -> Option<Rule> {
        if let Some(n) = index(a, k) {
            if l >= b[n] {
                return Some(Rule::AMove { n });
            }
        }
        if let Some(n) = index(b, k) {
            if l >= a[n] {
                return Some(Rule::BMove { n });
            }
        }
        match index(a, k) {
            Some(n) if n >= 2 && a[n] == a[n - 1] + 1 && b[n - 1] <= l && l < b[n - 1] + b1 => {
                Some(Rule::Step { n })
            }
            _ => None,
        }
    };
    let mut out = Vec::new();
    for x in 0..=bound {
        for y in 0..=bound {
            let position = Position::new(x, y);
            let cert = if x == 0 || y == 0 {
                Some((Class::P, Rule::Axis))
            } else if x < b1 && y < b1 {
                Some((Class::P, Rule::BelowB1))
            } else {
                rule_for(x, y).or_else(|| rule_for(y, x)).map(|r| (Class::N, r))
            };
            if let Some((class, rule)) = cert {
                out.push(Certificate { position, class, rule });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::explicit_pair;

    fn pos(x: u64, y: u64) -> Position {
        Position::new(x, y)
    }

    fn closure(pairs: &[(u64, u64)]) -> BTreeSet<Position> {
        let mut s: BTreeSet<_> = pairs.iter().flat_map(|&(a, b)| [pos(a, b), pos(b, a)]).collect();
        s.insert(Position::ORIGIN);
        s
    }

    #[test]
    fn nim_admissible() {
        let claimed: BTreeSet<_> = (0..=10).map(|x| pos(x, x)).collect();
        let adm = admissible_moves(&claimed, 10).unwrap();
        assert!((1..=10).all(|d| !adm.contains(&pos(d, d))));
        assert!(adm.contains(&pos(0, 1)));
    }

    #[test]
    fn vacuous_blocking() {
        let claimed = closure(&[]);
        assert_eq!(admissible_moves(&claimed, 3).unwrap().len(), 15);
        let r = certify_infeasible(&claimed, 3).unwrap();
        assert_eq!(r.verdict, FeasibilityVerdict::NoObstructionFound);
    }

    #[test]
    fn table1_certificate() {
        let claimed = closure(&[(1, 3), (2, 7), (4, 13)]);
        let adm = admissible_moves(&claimed, 13).unwrap();
        assert!(!adm.contains(&pos(1, 3)));
        assert!(!adm.contains(&pos(2, 6)));
        let r = certify_infeasible(&claimed, 13).unwrap();
        assert_eq!(r.verdict, FeasibilityVerdict::InfeasibleCertified);
        assert_eq!(r.witness, Some(pos(2, 6)));
        assert_eq!(
            r.blockers,
            vec![
                Blocker { r: pos(1, 3), p: pos(1, 3), q: pos(0, 0) },
                Blocker { r: pos(2, 6), p: pos(4, 13), q: pos(2, 7) },
            ]
        );
        assert!(r.blockers.iter().all(|b| b.recheck(&claimed)));
    }

    #[test]
    fn table2_certificate() {
        let claimed = closure(&[(1, 4), (2, 7)]);
        let r = certify_infeasible(&claimed, 7).unwrap();
        assert_eq!(r.witness, Some(pos(1, 3)));
        assert_eq!(r.blockers, vec![Blocker { r: pos(1, 3), p: pos(2, 7), q: pos(1, 4) }]);
    }

    #[test]
    fn malformed_claims() {
        let mut s = closure(&[(1, 2)]);
        s.remove(&pos(2, 1));
        assert_eq!(certify_infeasible(&s, 5).unwrap_err().code(), "domain");
        let mut s = closure(&[(1, 2)]);
        s.remove(&Position::ORIGIN);
        assert!(admissible_moves(&s, 5).is_err());
    }

    #[test]
    fn wythoff_rules() {
        let w = explicit_pair(&[1, 3, 4, 6, 8, 9], &[2, 5, 7, 10, 13, 15]).unwrap();
        let certs = lemma23_certificates(&w, 17).unwrap();
        let find = |p: Position| certs.iter().find(|c| c.position == p).copied();
        assert_eq!(find(pos(0, 17)).unwrap().rule, Rule::Axis);
        assert_eq!(find(pos(1, 1)).unwrap(), Certificate { position: pos(1, 1), class: Class::P, rule: Rule::BelowB1 });
        for l in 5..=17 {
            assert_eq!(find(pos(3, l)).unwrap().rule, Rule::AMove { n: 2 });
        }
        // n = 1 has no predecessor move, so the step rule does not apply
        assert!(find(pos(1, 1)).unwrap().rule != Rule::Step { n: 1 });
        assert_eq!(find(pos(4, 5)).unwrap().rule, Rule::Step { n: 3 });
    }

    #[test]
    fn certificates_need_increasing() {
        let t3 = explicit_pair(&[0, 1, 2, 4], &[0, 3, 6, 5]).unwrap();
        assert!(lemma23_certificates(&t3, 10).is_err());
    }
}
