//! Real numbers used as Beatty parameters.
//!
//! A [`Real`] is a small expression tree. When every leaf is rational or lives
//! in one common quadratic field the tree folds to an exact field element and
//! floors are computed with integer square roots. Anything else (mixed
//! radicands, declared decimal enclosures) is evaluated with dyadic interval
//! arithmetic at increasing precision.

use std::cmp::Ordering;
use std::fmt;
use std::ops;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_rational::Ratio;
use num_traits::{Signed, Zero};

use super::surd::{QuadraticIrrational, Surd};
use crate::error::{Error, Result};

/// Environment variable overriding [`Precision::max_doublings`].
pub const PRECISION_ENV: &str = "INVGAME_PRECISION_DOUBLINGS";

/// Refinement schedule for interval evaluation: start at `start_bits`
/// fractional bits and double up to `max_doublings` times.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Precision {
    pub start_bits: u32,
    pub max_doublings: u32,
}

impl Default for Precision {
    fn default() -> Self {
        Self { start_bits: 64, max_doublings: 8 }
    }
}

impl Precision {
    /// Default schedule with the doubling depth taken from
    /// `INVGAME_PRECISION_DOUBLINGS` when set.
    pub fn from_env() -> Result<Self> {
        let mut p = Self::default();
        if let Ok(v) = std::env::var(PRECISION_ENV) {
            p.max_doublings = v
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("{PRECISION_ENV}={v:?} is not a non-negative integer")))?;
            if p.max_doublings > 20 {
                return Err(Error::domain(format!("{PRECISION_ENV} must be at most 20")));
            }
        }
        Ok(p)
    }

    pub fn levels(&self) -> impl Iterator<Item = u32> {
        let start = self.start_bits.max(1);
        (0..=self.max_doublings).map(move |i| start << i)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Real {
    Rational(Ratio<i64>),
    Quadratic(QuadraticIrrational),
    /// A value known only to lie in the closed interval `[lo, hi]`.
    Enclosure { lo: Ratio<i64>, hi: Ratio<i64> },
    Add(Box<Real>, Box<Real>),
    Sub(Box<Real>, Box<Real>),
    Mul(Box<Real>, Box<Real>),
    Div(Box<Real>, Box<Real>),
    Neg(Box<Real>),
}

/// Closed dyadic interval `[lo, hi] · 2^-bits`.
type Dyadic = (BigInt, BigInt);

impl Real {
    pub fn int(n: i64) -> Self {
        Real::Rational(Ratio::from_integer(n))
    }

    pub fn ratio(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::domain("zero denominator"));
        }
        Ok(Real::Rational(Ratio::new(num, den)))
    }

    pub fn zero() -> Self {
        Self::int(0)
    }

    /// `√d` for a non-square `d`; perfect squares become integers.
    pub fn sqrt(d: u64) -> Self {
        let s = d.sqrt();
        if s * s == d {
            return Self::int(s as i64);
        }
        Real::Quadratic(QuadraticIrrational::new(0, 1, d, 1).expect("non-square radicand"))
    }

    pub fn golden_ratio() -> Self {
        Real::Quadratic(QuadraticIrrational::golden_ratio())
    }

    /// Decimal literal with an explicit radius of `10^-digits`.
    pub fn decimal(literal: &str, digits: u32) -> Result<Self> {
        let centre = parse_decimal(literal)?;
        let den = 10i64
            .checked_pow(digits)
            .ok_or_else(|| Error::Parse(format!("precision {digits} too large")))?;
        let rad = Ratio::new(1, den);
        Ok(Real::Enclosure { lo: centre - rad, hi: centre + rad })
    }

    /// Folds the tree to a single exact field element when possible.
    pub(crate) fn exact(&self) -> Option<Surd> {
        match self {
            Real::Rational(r) => Surd::rational(*r.numer() as i128, *r.denom() as i128).ok(),
            Real::Quadratic(q) => Some(q.surd()),
            Real::Enclosure { .. } => None,
            Real::Add(a, b) => a.exact()?.add(&b.exact()?).ok(),
            Real::Sub(a, b) => a.exact()?.sub(&b.exact()?).ok(),
            Real::Mul(a, b) => a.exact()?.mul(&b.exact()?).ok(),
            Real::Div(a, b) => a.exact()?.div(&b.exact()?).ok(),
            Real::Neg(a) => Some(a.exact()?.neg()),
        }
    }

    pub fn is_exact(&self) -> bool {
        self.exact().is_some()
    }

    /// Replaces an exactly-foldable tree by a single leaf.
    pub fn simplify(self) -> Self {
        match self.exact() {
            Some(s) if s.is_rational() => match (i64::try_from(s.p), i64::try_from(s.r)) {
                (Ok(p), Ok(r)) => Real::Rational(Ratio::new(p, r)),
                _ => self,
            },
            Some(s) => s.to_quadratic().map(Real::Quadratic).unwrap_or(self),
            None => self,
        }
    }

    /// Encloses the value at `bits` fractional bits. `None` when a divisor's
    /// enclosure still contains zero.
    pub fn enclose(&self, bits: u32) -> Option<Dyadic> {
        match self {
            Real::Rational(r) => {
                let num = BigInt::from(*r.numer()) << bits;
                let den = BigInt::from(*r.denom());
                Some((num.div_floor(&den), ceil_div(&num, &den)))
            }
            Real::Quadratic(q) => {
                // (p·2^k + q√d·2^k) / r with q√d·2^k bracketed by an isqrt
                let p = BigInt::from(q.p()) << bits;
                let mag = BigInt::from(q.q().unsigned_abs());
                let sq = (&mag * &mag * BigInt::from(q.d())) << (2 * bits);
                let root = sq.sqrt();
                let (lo, hi) = if q.q() > 0 {
                    (&p + &root, &p + &root + 1)
                } else {
                    (&p - &root - 1, &p - &root)
                };
                let r = BigInt::from(q.r());
                Some((lo.div_floor(&r), ceil_div(&hi, &r)))
            }
            Real::Enclosure { lo, hi } => {
                let (l, _) = Real::Rational(*lo).enclose(bits)?;
                let (_, h) = Real::Rational(*hi).enclose(bits)?;
                Some((l, h))
            }
            Real::Add(a, b) => {
                let (al, ah) = a.enclose(bits)?;
                let (bl, bh) = b.enclose(bits)?;
                Some((al + bl, ah + bh))
            }
            Real::Sub(a, b) => {
                let (al, ah) = a.enclose(bits)?;
                let (bl, bh) = b.enclose(bits)?;
                Some((al - bh, ah - bl))
            }
            Real::Neg(a) => {
                let (l, h) = a.enclose(bits)?;
                Some((-h, -l))
            }
            Real::Mul(a, b) => {
                let (al, ah) = a.enclose(bits)?;
                let (bl, bh) = b.enclose(bits)?;
                let prods = [&al * &bl, &al * &bh, &ah * &bl, &ah * &bh];
                let min = prods.iter().min().unwrap();
                let max = prods.iter().max().unwrap();
                let scale = BigInt::from(1) << bits;
                Some((min.div_floor(&scale), ceil_div(max, &scale)))
            }
            Real::Div(a, b) => {
                let (al, ah) = a.enclose(bits)?;
                let (bl, bh) = b.enclose(bits)?;
                if !(bl.is_positive() || bh.is_negative()) {
                    return None;
                }
                let mut lo: Option<BigInt> = None;
                let mut hi: Option<BigInt> = None;
                for x in [&al, &ah] {
                    let xs = x << bits;
                    for y in [&bl, &bh] {
                        let f = xs.div_floor(y);
                        let c = ceil_div(&xs, y);
                        lo = Some(lo.map_or(f.clone(), |v| v.min(f)));
                        hi = Some(hi.map_or(c.clone(), |v| v.max(c)));
                    }
                }
                Some((lo?, hi?))
            }
        }
    }

    /// Certified sign, exact when foldable, else by interval refinement.
    pub fn signum(&self, precision: &Precision) -> Result<Ordering> {
        if let Some(s) = self.exact() {
            return s.signum();
        }
        for bits in precision.levels() {
            if let Some((lo, hi)) = self.enclose(bits) {
                if lo.is_positive() {
                    return Ok(Ordering::Greater);
                }
                if hi.is_negative() {
                    return Ok(Ordering::Less);
                }
            }
        }
        Err(Error::Precision(format!(
            "cannot separate {self} from zero at {} bits",
            precision.levels().last().unwrap_or(0)
        )))
    }

    pub fn cmp_certified(&self, other: &Real, precision: &Precision) -> Result<Ordering> {
        (self.clone() - other.clone()).signum(precision)
    }

    /// True when the enclosure of the value contains zero at every level of
    /// the schedule (exact zero test when foldable).
    pub fn contains_zero(&self, precision: &Precision) -> bool {
        if let Some(s) = self.exact() {
            return matches!(s.signum(), Ok(Ordering::Equal));
        }
        precision.levels().all(|bits| match self.enclose(bits) {
            Some((lo, hi)) => !lo.is_positive() && !hi.is_negative(),
            None => true,
        })
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Real::Rational(r) => *r.numer() as f64 / *r.denom() as f64,
            Real::Quadratic(q) => q.to_f64(),
            Real::Enclosure { lo, hi } => {
                (*lo.numer() as f64 / *lo.denom() as f64 + *hi.numer() as f64 / *hi.denom() as f64) / 2.0
            }
            Real::Add(a, b) => a.to_f64() + b.to_f64(),
            Real::Sub(a, b) => a.to_f64() - b.to_f64(),
            Real::Mul(a, b) => a.to_f64() * b.to_f64(),
            Real::Div(a, b) => a.to_f64() / b.to_f64(),
            Real::Neg(a) => -a.to_f64(),
        }
    }
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_mod_floor(b);
    if r.is_zero() {
        q
    } else {
        q + 1
    }
}

fn parse_decimal(s: &str) -> Result<Ratio<i64>> {
    let bad = || Error::Parse(format!("invalid decimal literal {s:?}"));
    let t = s.trim();
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{int}{frac}");
    let num: i64 = if digits.is_empty() { 0 } else { digits.parse().map_err(|_| bad())? };
    let den = 10i64.checked_pow(frac.len() as u32).ok_or_else(bad)?;
    let r = Ratio::new(num, den);
    Ok(if neg { -r } else { r })
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Real::Rational(r) => write!(f, "{r}"),
            Real::Quadratic(q) => write!(f, "{q}"),
            Real::Enclosure { lo, hi } => write!(f, "[{lo}, {hi}]"),
            Real::Add(a, b) => write!(f, "({a} + {b})"),
            Real::Sub(a, b) => write!(f, "({a} - {b})"),
            Real::Mul(a, b) => write!(f, "{a}·{b}"),
            Real::Div(a, b) => write!(f, "{a}/{b}"),
            Real::Neg(a) => write!(f, "-{a}"),
        }
    }
}

macro_rules! real_binop {
    ($tr:ident, $method:ident, $variant:ident) => {
        impl ops::$tr for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                Real::$variant(Box::new(self), Box::new(rhs))
            }
        }
    };
}

real_binop!(Add, add, Add);
real_binop!(Sub, sub, Sub);
real_binop!(Mul, mul, Mul);
real_binop!(Div, div, Div);

impl ops::Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real::Neg(Box::new(self))
    }
}

/// Evaluates `⌊n·α + γ⌋` for many `n`, caching the enclosures of `α` and `γ`
/// per precision level.
#[derive(Debug)]
pub struct AffineFloor {
    alpha: Real,
    gamma: Real,
    exact: Option<(Surd, Surd)>,
    precision: Precision,
    cache: Vec<Option<(Dyadic, Dyadic)>>,
}

impl AffineFloor {
    pub fn new(alpha: &Real, gamma: &Real, precision: Precision) -> Self {
        let exact = match (alpha.exact(), gamma.exact()) {
            (Some(a), Some(g)) if a.compatible(&g) => Some((a, g)),
            _ => None,
        };
        Self { alpha: alpha.clone(), gamma: gamma.clone(), exact, precision, cache: Vec::new() }
    }

    /// Forces the interval path even when an exact fold exists.
    pub fn interval_only(alpha: &Real, gamma: &Real, precision: Precision) -> Self {
        let mut s = Self::new(alpha, gamma, precision);
        s.exact = None;
        s
    }

    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }

    pub fn floor(&mut self, n: u64) -> Result<i128> {
        if n == 0 {
            return Err(Error::domain("floor_affine needs n >= 1"));
        }
        if let Some((a, g)) = &self.exact {
            return a.scale(n as i128)?.add(g)?.floor();
        }
        let n_big = BigInt::from(n);
        for (level, bits) in self.precision.levels().enumerate() {
            if self.cache.len() <= level {
                let entry = match (self.alpha.enclose(bits), self.gamma.enclose(bits)) {
                    (Some(a), Some(g)) => Some((a, g)),
                    _ => None,
                };
                self.cache.push(entry);
            }
            let Some(((al, ah), (gl, gh))) = &self.cache[level] else { continue };
            let lo = &n_big * al + gl;
            let hi = &n_big * ah + gh;
            let scale = BigInt::from(1) << bits;
            let fl = lo.div_floor(&scale);
            if fl == hi.div_floor(&scale) {
                return i128::try_from(fl).map_err(|_| Error::range("floor exceeds 128 bits"));
            }
        }
        Err(Error::Precision(format!(
            "cannot separate {n}·{} + {} from an integer after {} doublings; the value may be an integer",
            self.alpha, self.gamma, self.precision.max_doublings
        )))
    }
}

/// `⌊n·α + γ⌋`, exact when α and γ share a quadratic field.
pub fn floor_affine(alpha: &Real, n: u64, gamma: &Real, precision: &Precision) -> Result<i128> {
    AffineFloor::new(alpha, gamma, *precision).floor(n)
}
