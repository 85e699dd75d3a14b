//! Exact arithmetic in a single real quadratic field Q(√d).

use std::cmp::Ordering;
use std::fmt;

use num_integer::{Integer, Roots};

use crate::error::{Error, Result};

/// The real number `(p + q·√d) / r`.
///
/// Canonical form: `gcd(p, q, r) = 1`, `r > 0`, `q != 0` and `d > 1` not a
/// perfect square, so the value is always irrational.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticIrrational {
    p: i64,
    q: i64,
    d: u64,
    r: i64,
}

impl QuadraticIrrational {
    pub fn new(p: i64, q: i64, d: u64, r: i64) -> Result<Self> {
        if q == 0 {
            return Err(Error::domain("quadratic irrational needs q != 0"));
        }
        if r == 0 {
            return Err(Error::domain("quadratic irrational needs r != 0"));
        }
        if d < 2 || is_square(d as u128) {
            return Err(Error::domain(format!("d = {d} must be a positive non-square")));
        }
        let s = Surd::raw(p as i128, q as i128, d as u128, r as i128).canonical();
        s.to_quadratic()
            .ok_or_else(|| Error::range("quadratic irrational does not fit 64-bit coefficients"))
    }

    /// The golden ratio (1 + √5) / 2.
    pub fn golden_ratio() -> Self {
        Self { p: 1, q: 1, d: 5, r: 2 }
    }

    pub fn p(&self) -> i64 {
        self.p
    }
    pub fn q(&self) -> i64 {
        self.q
    }
    pub fn d(&self) -> u64 {
        self.d
    }
    pub fn r(&self) -> i64 {
        self.r
    }

    pub(crate) fn surd(&self) -> Surd {
        Surd::raw(self.p as i128, self.q as i128, self.d as u128, self.r as i128)
    }

    /// Exact `⌊n·self + gamma⌋` for a rational shift `gamma = num/den`.
    pub fn floor_affine(&self, n: i128, gamma_num: i128, gamma_den: i128) -> Result<i128> {
        let g = Surd::rational(gamma_num, gamma_den)?;
        self.surd().scale(n)?.add(&g)?.floor()
    }

    pub fn to_f64(&self) -> f64 {
        self.surd().to_f64()
    }
}

impl fmt::Display for QuadraticIrrational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}·√{})/{}", self.p, self.q, self.d, self.r)
    }
}

pub(crate) fn is_square(n: u128) -> bool {
    let s = n.sqrt();
    s * s == n
}

/// Element `(p + q·√d)/r` of Q(√d) with i128 coefficients; `q == 0` means
/// rational, in which case `d` is normalised to 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Surd {
    pub p: i128,
    pub q: i128,
    pub d: u128,
    pub r: i128,
}

fn ovf() -> Error {
    Error::range("integer overflow in quadratic-field arithmetic")
}

fn cm(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or_else(ovf)
}

fn ca(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or_else(ovf)
}

impl Surd {
    pub fn raw(p: i128, q: i128, d: u128, r: i128) -> Self {
        Self { p, q, d, r }
    }

    pub fn rational(num: i128, den: i128) -> Result<Self> {
        if den == 0 {
            return Err(Error::domain("zero denominator"));
        }
        Ok(Self::raw(num, 0, 0, den).canonical())
    }

    pub fn canonical(mut self) -> Self {
        if self.q == 0 {
            self.d = 0;
        }
        if self.r < 0 {
            self.p = -self.p;
            self.q = -self.q;
            self.r = -self.r;
        }
        let g = self.p.gcd(&self.q).gcd(&self.r);
        if g > 1 {
            self.p /= g;
            self.q /= g;
            self.r /= g;
        }
        self
    }

    pub fn is_rational(&self) -> bool {
        self.q == 0
    }

    pub fn to_quadratic(self) -> Option<QuadraticIrrational> {
        if self.q == 0 {
            return None;
        }
        Some(QuadraticIrrational {
            p: i64::try_from(self.p).ok()?,
            q: i64::try_from(self.q).ok()?,
            d: u64::try_from(self.d).ok()?,
            r: i64::try_from(self.r).ok()?,
        })
    }

    /// The shared radicand of two elements, if they live in a common field.
    fn common_d(&self, other: &Surd) -> Option<u128> {
        match (self.q == 0, other.q == 0) {
            (true, true) => Some(0),
            (true, false) => Some(other.d),
            (false, true) => Some(self.d),
            (false, false) if self.d == other.d => Some(self.d),
            _ => None,
        }
    }

    pub fn compatible(&self, other: &Surd) -> bool {
        self.common_d(other).is_some()
    }

    pub fn add(&self, o: &Surd) -> Result<Surd> {
        let d = self.common_d(o).ok_or_else(|| Error::domain("mixed quadratic fields"))?;
        let p = ca(cm(self.p, o.r)?, cm(o.p, self.r)?)?;
        let q = ca(cm(self.q, o.r)?, cm(o.q, self.r)?)?;
        Ok(Surd::raw(p, q, d, cm(self.r, o.r)?).canonical())
    }

    pub fn neg(&self) -> Surd {
        Surd::raw(-self.p, -self.q, self.d, self.r)
    }

    pub fn sub(&self, o: &Surd) -> Result<Surd> {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Surd) -> Result<Surd> {
        let d = self.common_d(o).ok_or_else(|| Error::domain("mixed quadratic fields"))?;
        let di = i128::try_from(d).map_err(|_| ovf())?;
        let p = ca(cm(self.p, o.p)?, cm(cm(self.q, o.q)?, di)?)?;
        let q = ca(cm(self.p, o.q)?, cm(self.q, o.p)?)?;
        Ok(Surd::raw(p, q, d, cm(self.r, o.r)?).canonical())
    }

    pub fn scale(&self, n: i128) -> Result<Surd> {
        Ok(Surd::raw(cm(self.p, n)?, cm(self.q, n)?, self.d, self.r).canonical())
    }

    pub fn recip(&self) -> Result<Surd> {
        // r / (p + q√d) = r (p - q√d) / (p² - q² d)
        let di = i128::try_from(self.d).map_err(|_| ovf())?;
        let den = cm(self.p, self.p)?
            .checked_sub(cm(cm(self.q, self.q)?, di)?)
            .ok_or_else(ovf)?;
        if den == 0 {
            return Err(Error::domain("division by zero"));
        }
        Ok(Surd::raw(cm(self.r, self.p)?, cm(-self.r, self.q)?, self.d, den).canonical())
    }

    pub fn div(&self, o: &Surd) -> Result<Surd> {
        self.mul(&o.recip()?)
    }

    /// Exact sign of `p + q√d` (and hence of the value, since r > 0).
    pub fn signum(&self) -> Result<Ordering> {
        let s = self.canonical();
        let zero = Ordering::Equal;
        let ps = s.p.cmp(&0);
        let qs = s.q.cmp(&0);
        if qs == zero {
            return Ok(ps);
        }
        if ps == zero || ps == qs {
            return Ok(qs);
        }
        // opposite signs: compare p² with q² d
        let pp = (s.p.unsigned_abs()).checked_mul(s.p.unsigned_abs()).ok_or_else(ovf)?;
        let qq = (s.q.unsigned_abs())
            .checked_mul(s.q.unsigned_abs())
            .and_then(|v| v.checked_mul(s.d))
            .ok_or_else(ovf)?;
        Ok(match pp.cmp(&qq) {
            Ordering::Greater => ps,
            Ordering::Less => qs,
            Ordering::Equal => Ordering::Equal,
        })
    }

    /// Exact floor. Because `q√d` is irrational whenever `q != 0`,
    /// `⌊(p + q√d)/r⌋ = ⌊(p + ⌊q√d⌋)/r⌋`.
    pub fn floor(&self) -> Result<i128> {
        let s = self.canonical();
        let mut num = s.p;
        if s.q != 0 {
            let mag = s.q.unsigned_abs();
            let sq = mag
                .checked_mul(mag)
                .and_then(|v| v.checked_mul(s.d))
                .ok_or_else(ovf)?;
            let root = i128::try_from(sq.sqrt()).map_err(|_| ovf())?;
            let fl = if s.q > 0 { root } else { -root - 1 };
            num = ca(num, fl)?;
        }
        Ok(Integer::div_floor(&num, &s.r))
    }

    pub fn to_f64(&self) -> f64 {
        (self.p as f64 + self.q as f64 * (self.d as f64).sqrt()) / self.r as f64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_square_radicand() {
        assert!(QuadraticIrrational::new(0, 1, 4, 1).is_err());
        assert!(QuadraticIrrational::new(0, 0, 5, 1).is_err());
        assert!(QuadraticIrrational::new(1, 1, 5, 0).is_err());
    }

    #[test]
    fn canonicalises() {
        let a = QuadraticIrrational::new(-2, -2, 5, -4).unwrap();
        assert_eq!(a, QuadraticIrrational::golden_ratio());
    }

    #[test]
    fn golden_ratio_square_is_phi_plus_one() {
        let phi = QuadraticIrrational::golden_ratio().surd();
        let sq = phi.mul(&phi).unwrap();
        let expect = phi.add(&Surd::rational(1, 1).unwrap()).unwrap();
        assert_eq!(sq, expect);
    }

    #[test]
    fn reciprocal_and_sign() {
        let phi = QuadraticIrrational::golden_ratio().surd();
        let inv = phi.recip().unwrap();
        // 1/φ = φ - 1
        assert_eq!(inv, phi.sub(&Surd::rational(1, 1).unwrap()).unwrap());
        assert_eq!(Surd::raw(3, -1, 5, 1).signum().unwrap(), Ordering::Greater);
        assert_eq!(Surd::raw(2, -1, 5, 1).signum().unwrap(), Ordering::Less);
        assert_eq!(Surd::raw(-3, 1, 5, 1).signum().unwrap(), Ordering::Less);
    }

    #[test]
    fn exact_floors() {
        let phi = QuadraticIrrational::golden_ratio();
        assert_eq!(phi.floor_affine(1, 0, 1).unwrap(), 1);
        assert_eq!(phi.floor_affine(4, 0, 1).unwrap(), 6);
        // -φ ≈ -1.618
        assert_eq!(phi.floor_affine(-1, 0, 1).unwrap(), -2);
        // φ - 1/2 ≈ 1.118
        assert_eq!(phi.floor_affine(1, -1, 2).unwrap(), 1);
    }
}
