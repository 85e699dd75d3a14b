//! Horizon-limited verdicts on sequence pairs. Nothing here claims a property
//! for all `n`; every verdict is relative to the pair's known horizon.

use std::fmt;

use rayon::prelude::*;

use super::SequencePair;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<W> {
    Holds,
    Fails(W),
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }

    fn from_option(w: Option<W>) -> Self {
        w.map_or(Verdict::Holds, Verdict::Fails)
    }
}

impl<W: fmt::Display> fmt::Display for Verdict<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Holds => write!(f, "PASS"),
            Verdict::Fails(w) => write!(f, "FAIL ({w})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComplementWitness {
    /// Value appearing more than once across both sequences.
    Duplicate(u64),
    /// Positive value in the certified window that appears nowhere.
    Gap(u64),
    /// A term with `n >= 1` equal to zero.
    ZeroTerm { n: usize },
}

impl fmt::Display for ComplementWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplementWitness::Duplicate(v) => write!(f, "duplicate value {v}"),
            ComplementWitness::Gap(v) => write!(f, "missing value {v}"),
            ComplementWitness::ZeroTerm { n } => write!(f, "zero term at n = {n}"),
        }
    }
}

/// Complementarity restricted to values `<= min(a[N], b[N])`.
pub fn check_complementary(pair: &SequencePair) -> Verdict<ComplementWitness> {
    let n = pair.horizon();
    if let Some(i) = (1..=n).find(|&i| pair.a()[i] == 0 || pair.b()[i] == 0) {
        return Verdict::Fails(ComplementWitness::ZeroTerm { n: i });
    }
    let window = pair.a()[n].min(pair.b()[n]) as usize;
    let mut count = vec![0u8; window + 1];
    for (x, y) in pair.pairs() {
        for v in [x, y] {
            if (v as usize) <= window {
                count[v as usize] = count[v as usize].saturating_add(1);
            }
        }
    }
    let bad = (1..=window).find(|&v| count[v] != 1);
    Verdict::from_option(bad.map(|v| {
        if count[v] == 0 {
            ComplementWitness::Gap(v as u64)
        } else {
            ComplementWitness::Duplicate(v as u64)
        }
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `X_m + X_n <= X_{m+n}` (superadditivity) fails.
    Left,
    /// `X_{m+n} < X_m + X_n + t` fails.
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuperadditivityWitness {
    pub m: usize,
    pub n: usize,
    pub side: Side,
    pub x_m: u64,
    pub x_n: u64,
    pub x_sum: u64,
}

impl fmt::Display for SuperadditivityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Self { m, n, x_m, x_n, x_sum, .. } = self;
        match self.side {
            Side::Left => write!(f, "left side at (m,n) = ({m},{n}): X_{} = {x_sum} < {x_m} + {x_n}", m + n),
            Side::Right => write!(
                f,
                "right side at (m,n) = ({m},{n}): X_{} = {x_sum} >= {x_m} + {x_n} + t",
                m + n
            ),
        }
    }
}

/// `X_m + X_n <= X_{m+n} < X_m + X_n + t` for all `m + n <= N`.
///
/// The witness is canonical: smallest `m + n`, then largest `m` (so `m >= n`).
pub fn check_t_superadditive(x: &[u64], t: u64) -> Verdict<SuperadditivityWitness> {
    assert!(t >= 1, "t must be positive");
    let horizon = x.len().saturating_sub(1);
    let at_sum = |s: usize| -> Option<SuperadditivityWitness> {
        (s.div_ceil(2)..=s).rev().find_map(|m| {
            let n = s - m;
            let (xm, xn, xs) = (x[m] as u128, x[n] as u128, x[s] as u128);
            let side = if xm + xn > xs {
                Side::Left
            } else if xs >= xm + xn + t as u128 {
                Side::Right
            } else {
                return None;
            };
            Some(SuperadditivityWitness { m, n, side, x_m: x[m], x_n: x[n], x_sum: x[s] })
        })
    };
    Verdict::from_option((0..=horizon).into_par_iter().find_map_first(at_sum))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IncreasingWitness {
    pub n: usize,
    pub a_n: u64,
    pub a_next: u64,
}

impl fmt::Display for IncreasingWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a_{} = {} >= a_{} = {}", self.n, self.a_n, self.n + 1, self.a_next)
    }
}

/// `t` for a SAC check: fixed, or `b[1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TParam {
    Auto,
    Fixed(u64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SacReport {
    pub t: u64,
    pub horizon: usize,
    /// Witness is the actual value of `a_1`.
    pub a1_is_one: Verdict<u64>,
    pub complementary: Verdict<ComplementWitness>,
    pub a_increasing: Verdict<IncreasingWitness>,
    pub b_t_superadditive: Verdict<SuperadditivityWitness>,
    pub overall: bool,
}

impl fmt::Display for SacReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "t-SAC check, t = {}, on horizon N = {}", self.t, self.horizon)?;
        writeln!(f, "  a_1 = 1:            {}", match &self.a1_is_one {
            Verdict::Holds => "PASS".to_string(),
            Verdict::Fails(v) => format!("FAIL (a_1 = {v})"),
        })?;
        writeln!(f, "  complementary:      {}", self.complementary)?;
        writeln!(f, "  a increasing:       {}", self.a_increasing)?;
        writeln!(f, "  b t-superadditive:  {}", self.b_t_superadditive)?;
        write!(f, "overall: {}", if self.overall { "PASS" } else { "FAIL" })
    }
}

/// The four t-SAC criteria on the pair's horizon.
pub fn check_sac(pair: &SequencePair, t: TParam) -> SacReport {
    let horizon = pair.horizon();
    let t = match t {
        TParam::Fixed(t) => t,
        TParam::Auto => pair.b().get(1).copied().unwrap_or(1),
    }
    .max(1);
    let a1 = pair.a().get(1).copied();
    let a1_is_one = match a1 {
        Some(1) | None => Verdict::Holds,
        Some(v) => Verdict::Fails(v),
    };
    let a = pair.a();
    let a_increasing = Verdict::from_option(
        (0..horizon)
            .find(|&n| a[n + 1] <= a[n])
            .map(|n| IncreasingWitness { n, a_n: a[n], a_next: a[n + 1] }),
    );
    let complementary = check_complementary(pair);
    let b_t_superadditive = check_t_superadditive(pair.b(), t);
    let overall = a1_is_one.holds()
        && complementary.holds()
        && a_increasing.holds()
        && b_t_superadditive.holds();
    SacReport { t, horizon, a1_is_one, complementary, a_increasing, b_t_superadditive, overall }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelaxedWitness {
    /// `b_2 < 2 b_1`.
    B2TooSmall { b1: u64, b2: u64 },
    /// `b_{m+n} < b_{m+1} + b_n` with `m >= 1`, `n >= 2`.
    Growth { m: usize, n: usize },
}

impl fmt::Display for RelaxedWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelaxedWitness::B2TooSmall { b1, b2 } => write!(f, "b_2 = {b2} < 2·b_1 = {}", 2 * b1),
            RelaxedWitness::Growth { m, n } => {
                write!(f, "b_{} < b_{} + b_{} at (m,n) = ({m},{n})", m + n, m + 1, n)
            }
        }
    }
}

/// `b_2 >= 2 b_1` and `b_{m+n} >= b_{m+1} + b_n` for all `m >= 1, n >= 2`.
/// Witness is the lexicographically least failing `(m, n)`.
pub fn check_relaxed_growth(pair: &SequencePair) -> Verdict<RelaxedWitness> {
    let b = pair.b();
    let horizon = pair.horizon();
    if horizon >= 2 && b[2] < 2 * b[1] {
        return Verdict::Fails(RelaxedWitness::B2TooSmall { b1: b[1], b2: b[2] });
    }
    for m in 1..horizon {
        for n in 2..=horizon.saturating_sub(m) {
            if (b[m + n] as u128) < b[m + 1] as u128 + b[n] as u128 {
                return Verdict::Fails(RelaxedWitness::Growth { m, n });
            }
        }
    }
    Verdict::Holds
}

/// Per-part verdicts for the structural consequences of b₁-SAC. Witnesses
/// are indices (`n`, or `(m, n)` for the near-additivity part).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prop21Report {
    pub horizon: usize,
    /// (i) `b_{n+1} - b_n >= b_1 >= 2`.
    pub b_gaps: Verdict<usize>,
    /// (ii) `a_{n+1} - a_n ∈ {1, 2}`.
    pub a_steps: Verdict<usize>,
    /// (iii) `a_n < b_n` and `b_n - a_n` non-decreasing.
    pub spread: Verdict<usize>,
    /// (iv) `a_m + a_n - 1 <= a_{m+n} <= a_m + a_n + 1`.
    pub a_near_additive: Verdict<(usize, usize)>,
    /// `b_{a_i - i} < a_i < b_{a_i - i + 1}` for `i > 0` (indices inside the horizon).
    pub sandwich: Verdict<usize>,
}

impl Prop21Report {
    pub fn all_hold(&self) -> bool {
        self.b_gaps.holds()
            && self.a_steps.holds()
            && self.spread.holds()
            && self.a_near_additive.holds()
            && self.sandwich.holds()
    }
}

impl fmt::Display for Prop21Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &Verdict<usize>| match v {
            Verdict::Holds => "PASS".to_string(),
            Verdict::Fails(n) => format!("FAIL at n = {n}"),
        };
        writeln!(f, "structural checks on horizon N = {}", self.horizon)?;
        writeln!(f, "  (i)   b gaps >= b_1 >= 2:        {}", show(&self.b_gaps))?;
        writeln!(f, "  (ii)  a steps in {{1,2}}:          {}", show(&self.a_steps))?;
        writeln!(f, "  (iii) a_n < b_n, spread grows:   {}", show(&self.spread))?;
        let iv = match &self.a_near_additive {
            Verdict::Holds => "PASS".to_string(),
            Verdict::Fails((m, n)) => format!("FAIL at (m,n) = ({m},{n})"),
        };
        writeln!(f, "  (iv)  a near-additive:           {iv}")?;
        write!(f, "  sandwich b_(a_i-i) < a_i:        {}", show(&self.sandwich))
    }
}

pub fn check_prop21(pair: &SequencePair) -> Prop21Report {
    let a = pair.a();
    let b = pair.b();
    let horizon = pair.horizon();
    let b1 = b.get(1).copied().unwrap_or(0);

    let b_gaps = if horizon >= 1 && b1 < 2 {
        Verdict::Fails(1)
    } else {
        Verdict::from_option((0..horizon).find(|&n| b[n + 1] < b[n] || b[n + 1] - b[n] < b1))
    };
    let a_steps = Verdict::from_option(
        (0..horizon).find(|&n| !(a[n] + 1..=a[n] + 2).contains(&a[n + 1])),
    );
    let spread = Verdict::from_option((1..=horizon).find(|&n| {
        a[n] >= b[n] || (n >= 2 && b[n] - a[n] < b[n - 1].saturating_sub(a[n - 1]))
    }));
    let a_near_additive = Verdict::from_option((2..=horizon).into_par_iter().find_map_first(|s| {
        (1..s).find_map(|m| {
            let n = s - m;
            let sum = a[m] as i128 + a[n] as i128;
            let v = a[s] as i128;
            (v < sum - 1 || v > sum + 1).then_some((m, n))
        })
    }));
    let sandwich = Verdict::from_option((1..=horizon).find(|&i| {
        let Some(k) = a[i].checked_sub(i as u64).map(|k| k as usize) else {
            return true;
        };
        if k + 1 > horizon {
            return false;
        }
        !(b[k] < a[i] && a[i] < b[k + 1])
    }));
    Prop21Report { horizon, b_gaps, a_steps, spread, a_near_additive, sandwich }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::{beatty_pair, explicit_pair, BeattyParams, Real};

    fn wythoff(n: usize) -> SequencePair {
        beatty_pair(&BeattyParams::homogeneous(Real::golden_ratio()).unwrap(), n).unwrap()
    }

    fn mouse(n: usize) -> SequencePair {
        SequencePair::from_fn(n, |k| 3 * k / 2, |k| 3 * k - 1)
    }

    #[test]
    fn complementary_examples() {
        assert!(check_complementary(&wythoff(100)).holds());
        assert!(check_complementary(&mouse(100)).holds());
        let bad = explicit_pair(&[0, 1, 2], &[0, 2, 5]).unwrap();
        assert_eq!(check_complementary(&bad), Verdict::Fails(ComplementWitness::Duplicate(2)));
        let gap = explicit_pair(&[1, 2], &[4, 7]).unwrap();
        // window is min(2, 7) = 2, so the missing 3 is outside it
        assert!(check_complementary(&gap).holds());
        let gap = explicit_pair(&[1, 4], &[5, 7]).unwrap();
        assert_eq!(check_complementary(&gap), Verdict::Fails(ComplementWitness::Gap(2)));
    }

    #[test]
    fn superadditivity_examples() {
        let t1 = [0, 3, 7, 13];
        let w = check_t_superadditive(&t1, 3);
        let w = w.witness().unwrap();
        assert_eq!((w.m, w.n, w.side), (2, 1, Side::Right));
        assert_eq!((w.x_sum, w.x_m, w.x_n), (13, 7, 3));

        let t2 = [0, 4, 7];
        let w = *check_t_superadditive(&t2, 4).witness().unwrap();
        assert_eq!((w.m, w.n, w.side), (1, 1, Side::Left));

        let b: Vec<u64> = (0..300u64).map(|n| if n == 0 { 0 } else { 3 * n - 1 }).collect();
        assert!(check_t_superadditive(&b, 2).holds());
        // b_{m+n} = b_m + b_n + 1, so t = 1 fails on the right
        assert_eq!(check_t_superadditive(&b, 1).witness().unwrap().side, Side::Right);
    }

    #[test]
    fn sac_examples() {
        let r = check_sac(&wythoff(500), TParam::Fixed(2));
        assert!(r.overall, "{r}");
        let t1 = explicit_pair(&[1, 2, 4], &[3, 7, 13]).unwrap();
        let r = check_sac(&t1, TParam::Auto);
        assert_eq!(r.t, 3);
        assert!(!r.overall);
        assert!(r.complementary.holds());
        assert_eq!(r.b_t_superadditive.witness().unwrap().side, Side::Right);
        let r = check_sac(&mouse(300), TParam::Auto);
        assert_eq!(r.t, 2);
        assert!(r.overall, "{r}");
    }

    #[test]
    fn relaxed_growth_examples() {
        let b: Vec<i64> = (1..=12).map(|n| if n == 1 { 2 } else { 4 * (n - 1) }).collect();
        let a: Vec<i64> = (1..=12).collect();
        let pair = explicit_pair(&a, &b).unwrap();
        assert!(check_relaxed_growth(&pair).holds());
        assert_eq!(
            check_relaxed_growth(&wythoff(50)),
            Verdict::Fails(RelaxedWitness::Growth { m: 1, n: 2 })
        );
        let eq = explicit_pair(&[1, 2], &[3, 6]).unwrap();
        assert!(check_relaxed_growth(&eq).holds());
        let t2 = explicit_pair(&[1, 2], &[4, 7]).unwrap();
        assert!(!check_relaxed_growth(&t2).holds());
    }

    #[test]
    fn prop21_examples() {
        assert!(check_prop21(&wythoff(200)).all_hold());
        assert!(check_prop21(&mouse(200)).all_hold());
        let t1 = explicit_pair(&[1, 2, 4], &[3, 7, 13]).unwrap();
        let r = check_prop21(&t1);
        assert!(r.b_gaps.holds());
        assert!(r.a_near_additive.holds());
    }
}
