//! Beatty sequences and paired sequences `(a_n), (b_n)`.

mod checks;
mod real;
mod surd;

use std::cmp::Ordering;

pub use checks::{
    check_complementary, check_prop21, check_relaxed_growth, check_sac, check_t_superadditive,
    ComplementWitness, IncreasingWitness, Prop21Report, RelaxedWitness, SacReport, Side,
    SuperadditivityWitness, TParam, Verdict,
};
pub use real::{floor_affine, AffineFloor, Precision, Real, PRECISION_ENV};
pub use surd::QuadraticIrrational;

use crate::error::{Error, Result};

/// A Beatty pair `(α, β)` with `1/α + 1/β = 1`, plus shifts `(γ, δ)` tied by
/// `γ/α + δ/β = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct BeattyParams {
    alpha: Real,
    beta: Real,
    gamma: Real,
    delta: Real,
    precision: Precision,
}

impl BeattyParams {
    pub fn homogeneous(alpha: Real) -> Result<Self> {
        Self::with_gamma(alpha, Real::zero())
    }

    /// Fixes γ and derives δ = -γβ/α.
    pub fn with_gamma(alpha: Real, gamma: Real) -> Result<Self> {
        let beta = conjugate(&alpha);
        let delta = (-(gamma.clone() * beta.clone() / alpha.clone())).simplify();
        Self { alpha, beta, gamma, delta, precision: Precision::default() }.validated()
    }

    /// Fixes δ and derives γ = -δα/β.
    pub fn with_delta(alpha: Real, delta: Real) -> Result<Self> {
        let beta = conjugate(&alpha);
        let gamma = (-(delta.clone() * alpha.clone() / beta.clone())).simplify();
        Self { alpha, beta, gamma, delta, precision: Precision::default() }.validated()
    }

    /// Both shifts given; `γ/α + δ/β` must not be certified nonzero.
    pub fn with_shifts(alpha: Real, gamma: Real, delta: Real) -> Result<Self> {
        let beta = conjugate(&alpha);
        Self { alpha, beta, gamma, delta, precision: Precision::default() }.validated()
    }

    pub fn with_precision(mut self, precision: Precision) -> Result<Self> {
        self.precision = precision;
        self.validated()
    }

    fn validated(self) -> Result<Self> {
        let p = &self.precision;
        let one = Real::int(1);
        let two = Real::int(2);
        if self.alpha.cmp_certified(&one, p)? != Ordering::Greater
            || self.alpha.cmp_certified(&two, p)? != Ordering::Less
        {
            return Err(Error::domain(format!("need 1 < α < 2, got α = {}", self.alpha)));
        }
        if self.beta.cmp_certified(&two, p)? != Ordering::Greater {
            return Err(Error::domain(format!("need β > 2, got β = {}", self.beta)));
        }
        let fraenkel = self.gamma.clone() / self.alpha.clone() + self.delta.clone() / self.beta.clone();
        if !fraenkel.contains_zero(p) {
            return Err(Error::domain("γ/α + δ/β is certified nonzero"));
        }
        Ok(self)
    }

    pub fn alpha(&self) -> &Real {
        &self.alpha
    }
    pub fn beta(&self) -> &Real {
        &self.beta
    }
    pub fn gamma(&self) -> &Real {
        &self.gamma
    }
    pub fn delta(&self) -> &Real {
        &self.delta
    }
    pub fn precision(&self) -> &Precision {
        &self.precision
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gamma == Real::zero() && self.delta == Real::zero()
    }

    /// Lazily yields `(a_n, b_n)` for `n = 1, 2, ...`.
    pub fn terms(&self) -> BeattyTerms {
        BeattyTerms {
            a: AffineFloor::new(&self.alpha, &self.gamma, self.precision),
            b: AffineFloor::new(&self.beta, &self.delta, self.precision),
            n: 0,
        }
    }
}

/// β = α / (α - 1), folded exactly when α is exact.
fn conjugate(alpha: &Real) -> Real {
    (alpha.clone() / (alpha.clone() - Real::int(1))).simplify()
}

#[derive(Debug)]
pub struct BeattyTerms {
    a: AffineFloor,
    b: AffineFloor,
    n: u64,
}

impl Iterator for BeattyTerms {
    type Item = Result<(u64, u64, u64)>;

    fn next(&mut self) -> Option<Self::Item> {
        self.n += 1;
        let n = self.n;
        let mut step = || -> Result<(u64, u64, u64)> {
            let a = self.a.floor(n)?;
            let b = self.b.floor(n)?;
            let conv = |v: i128, which: &str| {
                u64::try_from(v).map_err(|_| {
                    Error::domain(format!("{which}_{n} = {v} is not a non-negative 64-bit integer"))
                })
            };
            Ok((n, conv(a, "a")?, conv(b, "b")?))
        };
        Some(step())
    }
}

/// Paired sequences with `a[0] = b[0] = 0`, known up to a horizon `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequencePair {
    a: Vec<u64>,
    b: Vec<u64>,
}

impl SequencePair {
    /// Wraps `a[0..=N]`, `b[0..=N]`; both must start with 0.
    pub fn new(a: Vec<u64>, b: Vec<u64>) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::domain(format!(
                "sequence lengths differ: {} vs {}",
                a.len(),
                b.len()
            )));
        }
        if a.is_empty() || a[0] != 0 || b[0] != 0 {
            return Err(Error::domain("sequences must start with a_0 = b_0 = 0"));
        }
        Ok(Self { a, b })
    }

    /// Builds `a[n] = fa(n)`, `b[n] = fb(n)` for `1 <= n <= horizon`.
    pub fn from_fn(horizon: usize, fa: impl Fn(u64) -> u64, fb: impl Fn(u64) -> u64) -> Self {
        let mut a = vec![0];
        let mut b = vec![0];
        for n in 1..=horizon as u64 {
            a.push(fa(n));
            b.push(fb(n));
        }
        Self { a, b }
    }

    pub fn a(&self) -> &[u64] {
        &self.a
    }

    pub fn b(&self) -> &[u64] {
        &self.b
    }

    pub fn horizon(&self) -> usize {
        self.a.len() - 1
    }

    /// The pairs `(a_n, b_n)` for `n >= 1`.
    pub fn pairs(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.a.iter().copied().zip(self.b.iter().copied()).skip(1)
    }

    pub fn truncate(&self, horizon: usize) -> Self {
        let h = horizon.min(self.horizon());
        Self { a: self.a[..=h].to_vec(), b: self.b[..=h].to_vec() }
    }

    /// Shortest prefix whose `a`-values reach `limit`, if `a` is strictly
    /// increasing on the known horizon. Every `n` with `a_n <= limit` is then
    /// inside the prefix.
    pub fn covering(&self, limit: u64) -> Result<Self> {
        if let Some(n) = (1..self.a.len()).find(|&n| self.a[n] <= self.a[n - 1]) {
            return Err(Error::domain(format!(
                "a is not increasing at n = {} ({} -> {}); cannot bound the horizon",
                n - 1,
                self.a[n - 1],
                self.a[n]
            )));
        }
        match self.a.iter().position(|&v| v >= limit) {
            Some(n) => Ok(self.truncate(n)),
            None => Err(Error::domain(format!(
                "insufficient horizon: a_{} = {} < {limit}",
                self.horizon(),
                self.a[self.horizon()]
            ))),
        }
    }
}

/// `a[n] = ⌊nα + γ⌋`, `b[n] = ⌊nβ + δ⌋` for `1 <= n <= horizon`.
pub fn beatty_pair(params: &BeattyParams, horizon: usize) -> Result<SequencePair> {
    if horizon == 0 {
        return Err(Error::domain("horizon must be at least 1"));
    }
    let mut a = vec![0];
    let mut b = vec![0];
    for t in params.terms().take(horizon) {
        let (_, x, y) = t?;
        a.push(x);
        b.push(y);
    }
    SequencePair::new(a, b)
}

/// Wraps explicit values, prepending the zeroth term when the lists do not
/// already start with 0.
pub fn explicit_pair(a_values: &[i64], b_values: &[i64]) -> Result<SequencePair> {
    if a_values.len() != b_values.len() {
        return Err(Error::domain(format!(
            "sequence lengths differ: {} vs {}",
            a_values.len(),
            b_values.len()
        )));
    }
    let conv = |vals: &[i64], name: &str| -> Result<Vec<u64>> {
        vals.iter()
            .enumerate()
            .map(|(i, &v)| {
                u64::try_from(v).map_err(|_| Error::domain(format!("{name}[{i}] = {v} is negative")))
            })
            .collect()
    };
    let mut a = conv(a_values, "a")?;
    let mut b = conv(b_values, "b")?;
    let starts_zero = a.first() == Some(&0) && b.first() == Some(&0);
    if !starts_zero {
        a.insert(0, 0);
        b.insert(0, 0);
    }
    SequencePair::new(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wythoff_prefix() {
        let params = BeattyParams::homogeneous(Real::golden_ratio()).unwrap();
        assert!(params.is_homogeneous());
        let pair = beatty_pair(&params, 5).unwrap();
        assert_eq!(pair.a(), &[0, 1, 3, 4, 6, 8]);
        assert_eq!(pair.b(), &[0, 2, 5, 7, 10, 13]);
        assert!(matches!(params.beta(), Real::Quadratic(_)));
    }

    #[test]
    fn rejects_alpha_out_of_range() {
        assert!(BeattyParams::homogeneous(Real::sqrt(5)).is_err());
        assert!(BeattyParams::homogeneous(Real::ratio(1, 2).unwrap()).is_err());
    }

    #[test]
    fn explicit_pairs() {
        let t1 = explicit_pair(&[1, 2, 4], &[3, 7, 13]).unwrap();
        assert_eq!(t1.a(), &[0, 1, 2, 4]);
        assert_eq!(t1.b(), &[0, 3, 7, 13]);
        let t3 = explicit_pair(&[0, 1, 2], &[0, 3, 6]).unwrap();
        assert_eq!(t3.horizon(), 2);
        assert_eq!(explicit_pair(&[1, -2], &[3, 7]).unwrap_err().code(), "domain");
        assert!(explicit_pair(&[1], &[3, 7]).is_err());
    }

    #[test]
    fn mouse_trap_formulas() {
        let m = SequencePair::from_fn(4, |n| 3 * n / 2, |n| 3 * n - 1);
        assert_eq!(m.a(), &[0, 1, 3, 4, 6]);
        assert_eq!(m.b(), &[0, 2, 5, 8, 11]);
    }

    #[test]
    fn homogeneous_forces_a1_one() {
        for alpha in [Real::golden_ratio(), Real::sqrt(2), Real::sqrt(3)] {
            let pair = beatty_pair(&BeattyParams::homogeneous(alpha).unwrap(), 1).unwrap();
            assert_eq!(pair.a()[1], 1);
        }
    }

    #[test]
    fn covering_prefix() {
        let pair = beatty_pair(&BeattyParams::homogeneous(Real::golden_ratio()).unwrap(), 50).unwrap();
        let c = pair.covering(10).unwrap();
        assert_eq!(c.a().last(), Some(&11));
        assert!(pair.covering(1000).is_err());
        let t3 = explicit_pair(&[0, 1, 2, 4], &[0, 3, 6, 5]).unwrap();
        assert_eq!(t3.covering(4).unwrap().horizon(), 3);
    }

    #[test]
    fn inhomogeneous_derives_delta() {
        // α = √2, γ = 1/4 → δ = -γβ/α = -(1/4)/(√2 - 1)
        let p = BeattyParams::with_gamma(Real::sqrt(2), Real::ratio(1, 4).unwrap()).unwrap();
        let expect = -0.25 / (2f64.sqrt() - 1.0);
        assert!((p.delta().to_f64() - expect).abs() < 1e-12);
        assert!(p.delta().is_exact());
    }
}
