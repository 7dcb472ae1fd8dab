//! Closed real intervals with outward-rounded `f64` endpoints.
//!
//! Every operation returns an interval containing the exact real-arithmetic
//! image of its operands. Basic operations (`+ - * /`, `sqrt`) are rounded
//! with error-free transforms: the round-to-nearest result is kept when it is
//! exact and stepped one representable value outward otherwise. When the
//! transform cannot be trusted (underflow, overflow) the endpoint is stepped
//! unconditionally.
//!
//! Transcendental functions live in [`crate::hyptrig`].

use std::cmp::Ordering as CmpOrdering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::atomic::{AtomicU32, AtomicU64, Ordering};

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Default tolerance for clamping domain dips in `sqrt`/`acosh`.
pub const DEFAULT_CLAMP_TOL: f64 = 1e-12;

/// Default number of representable steps added around each libm result.
pub const DEFAULT_SLACK_STEPS: u32 = 2;

static CLAMP_TOL_BITS: AtomicU64 = AtomicU64::new(DEFAULT_CLAMP_TOL.to_bits());
static SLACK_STEPS: AtomicU32 = AtomicU32::new(DEFAULT_SLACK_STEPS);

/// Process-wide precision knobs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Precision {
    /// Relative tolerance below a domain edge that is clamped instead of rejected.
    pub clamp_tol: f64,
    /// Representable steps of slack around every transcendental libm call.
    pub slack_steps: u32,
}

impl Default for Precision {
    fn default() -> Self {
        Precision {
            clamp_tol: DEFAULT_CLAMP_TOL,
            slack_steps: DEFAULT_SLACK_STEPS,
        }
    }
}

impl Precision {
    pub fn validate(&self) -> Result<()> {
        if !(self.clamp_tol.is_finite() && (0.0..=1e-6).contains(&self.clamp_tol)) {
            return Err(Error::Precision(format!(
                "clamp_tol must lie in [0, 1e-6], got {}",
                self.clamp_tol
            )));
        }
        if !(2..=64).contains(&self.slack_steps) {
            return Err(Error::Precision(format!(
                "slack_steps must lie in [2, 64], got {}",
                self.slack_steps
            )));
        }
        Ok(())
    }
}

/// Current process-wide precision settings.
pub fn precision() -> Precision {
    Precision {
        clamp_tol: f64::from_bits(CLAMP_TOL_BITS.load(Ordering::Relaxed)),
        slack_steps: SLACK_STEPS.load(Ordering::Relaxed),
    }
}

/// Replaces the process-wide precision settings. Meant to be called once at
/// startup, before any evaluation.
pub fn set_precision(p: Precision) -> Result<()> {
    p.validate()?;
    CLAMP_TOL_BITS.store(p.clamp_tol.to_bits(), Ordering::Relaxed);
    SLACK_STEPS.store(p.slack_steps, Ordering::Relaxed);
    Ok(())
}

// Below this magnitude the FMA residual may be inexact, so we stop trusting it.
const TINY: f64 = 1e-270;

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
pub(crate) fn step_down(x: f64, n: u32) -> f64 {
    let mut y = x;
    for _ in 0..n {
        y = y.next_down();
    }
    y
}

#[inline]
pub(crate) fn step_up(x: f64, n: u32) -> f64 {
    let mut y = x;
    for _ in 0..n {
        y = y.next_up();
    }
    y
}

fn add_down(a: f64, b: f64) -> f64 {
    let (s, e) = two_sum(a, b);
    if !s.is_finite() {
        return if s > 0.0 { f64::MAX } else { s };
    }
    if e < 0.0 {
        s.next_down()
    } else {
        s
    }
}

fn add_up(a: f64, b: f64) -> f64 {
    let (s, e) = two_sum(a, b);
    if !s.is_finite() {
        return if s < 0.0 { f64::MIN } else { s };
    }
    if e > 0.0 {
        s.next_up()
    } else {
        s
    }
}

fn mul_down(a: f64, b: f64) -> f64 {
    if a == 0.0 || b == 0.0 {
        return 0.0;
    }
    let p = a * b;
    if !p.is_finite() {
        return if p > 0.0 { f64::MAX } else { p };
    }
    if p.abs() < TINY {
        return p.next_down();
    }
    if a.mul_add(b, -p) < 0.0 {
        p.next_down()
    } else {
        p
    }
}

fn mul_up(a: f64, b: f64) -> f64 {
    if a == 0.0 || b == 0.0 {
        return 0.0;
    }
    let p = a * b;
    if !p.is_finite() {
        return if p < 0.0 { f64::MIN } else { p };
    }
    if p.abs() < TINY {
        return p.next_up();
    }
    if a.mul_add(b, -p) > 0.0 {
        p.next_up()
    } else {
        p
    }
}

// Sign of (a/b - q) for q = fl(a/b), or None if the residual is untrustworthy.
fn div_residual_sign(a: f64, b: f64, q: f64) -> Option<f64> {
    if !q.is_finite() || q.abs() < TINY || a.abs() < TINY {
        return None;
    }
    let r = (-q).mul_add(b, a);
    Some(if b > 0.0 { r } else { -r })
}

fn div_down(a: f64, b: f64) -> f64 {
    if a == 0.0 {
        return 0.0;
    }
    let q = a / b;
    match div_residual_sign(a, b, q) {
        Some(s) if s >= 0.0 => q,
        Some(_) => q.next_down(),
        None if q.is_infinite() && q > 0.0 => f64::MAX,
        None => q.next_down(),
    }
}

fn div_up(a: f64, b: f64) -> f64 {
    if a == 0.0 {
        return 0.0;
    }
    let q = a / b;
    match div_residual_sign(a, b, q) {
        Some(s) if s <= 0.0 => q,
        Some(_) => q.next_up(),
        None if q.is_infinite() && q < 0.0 => f64::MIN,
        None => q.next_up(),
    }
}

fn sqrt_down(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let s = x.sqrt();
    if x < TINY || !s.is_finite() {
        return s.next_down().max(0.0);
    }
    if (-s).mul_add(s, x) < 0.0 {
        s.next_down()
    } else {
        s
    }
}

fn sqrt_up(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let s = x.sqrt();
    if x < TINY || !s.is_finite() {
        return s.next_up();
    }
    if (-s).mul_add(s, x) > 0.0 {
        s.next_up()
    } else {
        s
    }
}

/// A closed interval `[lo, hi]` with `lo <= hi`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub const ZERO: Interval = Interval { lo: 0.0, hi: 0.0 };
    pub const ONE: Interval = Interval { lo: 1.0, hi: 1.0 };

    /// Builds `[lo, hi]` exactly. Both endpoints must be finite and ordered.
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !lo.is_finite() || !hi.is_finite() {
            return Err(Error::NonFinite);
        }
        if lo > hi {
            return Err(Error::InvalidBounds { lo, hi });
        }
        Ok(Interval { lo, hi })
    }

    /// Like [`Interval::new`] but accepts infinite endpoints. Used only for
    /// placeholder bounds that must never be mistaken for a certificate.
    pub(crate) fn unbounded(lo: f64, hi: f64) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    /// The degenerate interval `[x, x]`.
    ///
    /// # Panics
    /// Panics if `x` is not finite.
    pub fn point(x: f64) -> Self {
        assert!(x.is_finite(), "point interval requires a finite value");
        Interval { lo: x, hi: x }
    }

    /// Tightest interval containing the exact value of a decimal literal such
    /// as `"1.215"` or `"-3e-4"`.
    pub fn from_decimal(s: &str) -> Result<Self> {
        let (neg, digits, exp10) = parse_decimal(s)?;
        let x: f64 = s
            .trim()
            .parse()
            .map_err(|_| Error::ParseDecimal(s.to_string()))?;
        if !x.is_finite() {
            return Err(Error::ParseDecimal(s.to_string()));
        }
        let mut exact = BigInt::from(digits);
        if neg {
            exact = -exact;
        }
        match cmp_decimal_with_f64(&exact, exp10, x) {
            CmpOrdering::Equal => Ok(Interval::point(x)),
            CmpOrdering::Greater => Interval::new(x, x.next_up()),
            CmpOrdering::Less => Interval::new(x.next_down(), x),
        }
    }

    /// Convenience for decimal constants that are known to be well formed.
    #[cfg(test)]
    pub(crate) fn dec(s: &str) -> Self {
        Interval::from_decimal(s).expect("well-formed decimal literal")
    }

    /// Enclosure of pi.
    pub fn pi() -> Self {
        // f64 PI is the round-down of pi.
        Interval {
            lo: std::f64::consts::PI,
            hi: std::f64::consts::PI.next_up(),
        }
    }

    #[inline]
    pub fn lo(&self) -> f64 {
        self.lo
    }

    #[inline]
    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    /// Upper bound on `hi - lo`.
    pub fn width(&self) -> f64 {
        add_up(self.hi, -self.lo)
    }

    /// A machine number inside the interval, close to its center.
    pub fn mid(&self) -> f64 {
        let m = 0.5 * self.lo + 0.5 * self.hi;
        m.clamp(self.lo, self.hi)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    /// `true` if `other` lies inside `self`.
    pub fn encloses(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn overlaps(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.min(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    /// Set intersection; `None` marks the empty set.
    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        (lo <= hi).then_some(Interval { lo, hi })
    }

    /// Splits at the midpoint. The halves share the midpoint and cover `self`.
    pub fn bisect(&self) -> (Interval, Interval) {
        let m = self.mid();
        (
            Interval { lo: self.lo, hi: m },
            Interval { lo: m, hi: self.hi },
        )
    }

    /// Pointwise minimum: encloses `min(x, y)` for `x` in `self`, `y` in `other`.
    pub fn min(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.min(other.lo),
            hi: self.hi.min(other.hi),
        }
    }

    /// Pointwise maximum.
    pub fn max(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.max(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    pub fn checked_div(self, rhs: Interval) -> Result<Interval> {
        if rhs.lo <= 0.0 && rhs.hi >= 0.0 {
            return Err(Error::domain("div", format!("divisor {rhs} contains zero")));
        }
        let (a, b) = (self, rhs);
        let lo = div_down(a.lo, b.lo)
            .min(div_down(a.lo, b.hi))
            .min(div_down(a.hi, b.lo))
            .min(div_down(a.hi, b.hi));
        let hi = div_up(a.lo, b.lo)
            .max(div_up(a.lo, b.hi))
            .max(div_up(a.hi, b.lo))
            .max(div_up(a.hi, b.hi));
        Ok(Interval { lo, hi })
    }

    pub fn recip(self) -> Result<Interval> {
        Interval::ONE.checked_div(self)
    }

    /// Enclosure of `x * x`, tighter than `self * self` when `self` spans zero.
    pub fn sqr(self) -> Interval {
        if self.lo >= 0.0 {
            Interval {
                lo: mul_down(self.lo, self.lo),
                hi: mul_up(self.hi, self.hi),
            }
        } else if self.hi <= 0.0 {
            Interval {
                lo: mul_down(self.hi, self.hi),
                hi: mul_up(self.lo, self.lo),
            }
        } else {
            let m = self.hi.max(-self.lo);
            Interval {
                lo: 0.0,
                hi: mul_up(m, m),
            }
        }
    }

    /// Square root on `self ∩ [0, ∞)`. A lower endpoint below zero by at most
    /// the clamp tolerance (relative to `max(1, hi)`) is clamped to zero.
    pub fn sqrt(self) -> Result<Interval> {
        if self.hi < 0.0 {
            return Err(Error::domain(
                "sqrt",
                format!("argument {self} is negative"),
            ));
        }
        let lo = if self.lo < 0.0 {
            let tol = precision().clamp_tol * self.hi.max(1.0);
            if self.lo < -tol {
                return Err(Error::domain(
                    "sqrt",
                    format!("argument {self} dips below zero beyond the clamp tolerance"),
                ));
            }
            0.0
        } else {
            self.lo
        };
        Ok(Interval {
            lo: sqrt_down(lo),
            hi: sqrt_up(self.hi),
        })
    }

    /// Fails unless every point of the interval is strictly positive.
    pub fn ensure_positive(self, what: &'static str) -> Result<Interval> {
        if self.lo > 0.0 {
            Ok(self)
        } else {
            Err(Error::domain(
                what,
                format!("{self} is not strictly positive"),
            ))
        }
    }

    /// Widens both endpoints by `n` representable steps.
    pub fn inflate(self, n: u32) -> Interval {
        Interval {
            lo: step_down(self.lo, n),
            hi: step_up(self.hi, n),
        }
    }
}

impl Add for Interval {
    type Output = Interval;
    fn add(self, rhs: Interval) -> Interval {
        Interval {
            lo: add_down(self.lo, rhs.lo),
            hi: add_up(self.hi, rhs.hi),
        }
    }
}

impl Sub for Interval {
    type Output = Interval;
    fn sub(self, rhs: Interval) -> Interval {
        Interval {
            lo: add_down(self.lo, -rhs.hi),
            hi: add_up(self.hi, -rhs.lo),
        }
    }
}

impl Mul for Interval {
    type Output = Interval;
    fn mul(self, rhs: Interval) -> Interval {
        let (a, b) = (self, rhs);
        let lo = mul_down(a.lo, b.lo)
            .min(mul_down(a.lo, b.hi))
            .min(mul_down(a.hi, b.lo))
            .min(mul_down(a.hi, b.hi));
        let hi = mul_up(a.lo, b.lo)
            .max(mul_up(a.lo, b.hi))
            .max(mul_up(a.hi, b.lo))
            .max(mul_up(a.hi, b.hi));
        Interval { lo, hi }
    }
}

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval {
            lo: -self.hi,
            hi: -self.lo,
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl FromStr for Interval {
    type Err = Error;

    /// Parses either a bare decimal (`"1.215"`) or a bracketed pair
    /// (`"[1.215, 1.220]"`), enclosing each decimal outward.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some(inner) = t.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let (a, b) = inner
                .split_once(',')
                .ok_or_else(|| Error::ParseDecimal(s.to_string()))?;
            let lo = Interval::from_decimal(a)?;
            let hi = Interval::from_decimal(b)?;
            Interval::new(lo.lo, hi.hi)
        } else {
            Interval::from_decimal(t)
        }
    }
}

#[derive(Serialize, Deserialize)]
struct IntervalRepr {
    lo: String,
    hi: String,
}

impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        IntervalRepr {
            lo: self.lo.to_string(),
            hi: self.hi.to_string(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Interval {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = IntervalRepr::deserialize(deserializer)?;
        let lo: f64 = repr.lo.parse().map_err(D::Error::custom)?;
        let hi: f64 = repr.hi.parse().map_err(D::Error::custom)?;
        if lo.is_nan() || hi.is_nan() || lo > hi {
            return Err(D::Error::custom(format!("invalid interval [{lo}, {hi}]")));
        }
        Ok(Interval { lo, hi })
    }
}

/// Splits a decimal literal into (negative, integer digits, power of ten).
fn parse_decimal(s: &str) -> Result<(bool, num_bigint::BigUint, i64)> {
    let err = || Error::ParseDecimal(s.to_string());
    let t = s.trim();
    let (neg, body) = match t.as_bytes().first() {
        Some(b'-') => (true, &t[1..]),
        Some(b'+') => (false, &t[1..]),
        _ => (false, t),
    };
    let (mantissa, exp) = match body.find(['e', 'E']) {
        Some(i) => (&body[..i], body[i + 1..].parse::<i64>().map_err(|_| err())?),
        None => (body, 0),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(err());
    }
    if !int_part
        .bytes()
        .chain(frac_part.bytes())
        .all(|b| b.is_ascii_digit())
    {
        return Err(err());
    }
    let all_digits = format!("{int_part}{frac_part}");
    let digits = num_bigint::BigUint::parse_bytes(all_digits.as_bytes(), 10).ok_or_else(err)?;
    Ok((neg, digits, exp - frac_part.len() as i64))
}

/// Exact comparison of `m * 10^e` against the machine number `x`.
fn cmp_decimal_with_f64(m: &BigInt, e: i64, x: f64) -> CmpOrdering {
    let bits = x.to_bits();
    let sign = if bits >> 63 == 1 { -1 } else { 1 };
    let exp_bits = ((bits >> 52) & 0x7ff) as i64;
    let frac = bits & ((1u64 << 52) - 1);
    let (mant, exp2) = if exp_bits == 0 {
        (frac, -1074)
    } else {
        (frac | (1u64 << 52), exp_bits - 1075)
    };
    let mut rhs = BigInt::from(mant) * sign;
    let mut lhs = m.clone();
    let ten = BigInt::from(10);
    let two = BigInt::from(2);
    if e >= 0 {
        lhs *= ten.pow(e as u32);
    } else {
        rhs *= ten.pow((-e) as u32);
    }
    if exp2 >= 0 {
        rhs *= two.pow(exp2 as u32);
    } else {
        lhs *= two.pow((-exp2) as u32);
    }
    lhs.cmp(&rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(lo: f64, hi: f64) -> Interval {
        Interval::new(lo, hi).unwrap()
    }

    #[test]
    fn construction() {
        assert_eq!(iv(1.0, 2.0).lo(), 1.0);
        assert_eq!(iv(1.0, 2.0).hi(), 2.0);
        assert!(matches!(
            Interval::new(3.0, 2.0),
            Err(Error::InvalidBounds { .. })
        ));
        assert_eq!(Interval::new(f64::NAN, 1.0), Err(Error::NonFinite));
        assert_eq!(Interval::new(0.0, f64::INFINITY), Err(Error::NonFinite));
    }

    #[test]
    fn decimal_literals_are_enclosed() {
        let a = Interval::from_decimal("1.215").unwrap();
        assert_eq!(a.width(), a.hi() - a.lo());
        assert!(a.hi() == a.lo().next_up());
        // 1.215 is not a machine number; the tightest enclosure straddles it.
        assert!(a.lo() < 1.215 || a.hi() > 1.215);
        assert!(a.contains(1.215));

        let b: Interval = "[1.215, 1.220]".parse().unwrap();
        assert!(b.lo() <= 1.215 && b.hi() >= 1.220);
        assert!(b.width() < 0.005 + 1e-15);

        // Exactly representable decimals become points.
        assert!(Interval::from_decimal("0.5").unwrap().is_point());
        assert!(Interval::from_decimal("-2.25e1").unwrap().is_point());
        assert_eq!(Interval::from_decimal("-2.25e1").unwrap().lo(), -22.5);

        assert!(Interval::from_decimal("1.2.3").is_err());
        assert!(Interval::from_decimal("abc").is_err());
        assert!(Interval::from_decimal("").is_err());
    }

    #[test]
    fn tenth_rounding_direction() {
        // fl(0.1) is above 0.1, so the enclosure is [pred, fl(0.1)].
        let t = Interval::from_decimal("0.1").unwrap();
        assert_eq!(t.hi(), 0.1);
        assert_eq!(t.lo(), 0.1f64.next_down());
        // fl(0.3) is below 0.3.
        let t = Interval::from_decimal("0.3").unwrap();
        assert_eq!(t.lo(), 0.3);
    }

    #[test]
    fn exact_arithmetic_stays_exact() {
        assert_eq!(iv(1.0, 2.0) + iv(3.0, 4.0), iv(4.0, 6.0));
        assert_eq!(iv(2.0, 3.0) * iv(-1.0, 1.0), iv(-3.0, 3.0));
        assert_eq!(iv(4.0, 9.0).sqrt().unwrap(), iv(2.0, 3.0));
        assert_eq!(Interval::ZERO.sqrt().unwrap(), Interval::ZERO);
        assert_eq!(iv(1.0, 2.0) - iv(0.5, 1.0), iv(0.0, 1.5));
        assert_eq!(
            iv(1.0, 2.0).checked_div(iv(2.0, 4.0)).unwrap(),
            iv(0.25, 1.0)
        );
    }

    #[test]
    fn inexact_results_are_widened() {
        let third = Interval::ONE.checked_div(Interval::point(3.0)).unwrap();
        assert!(third.lo() < third.hi());
        assert_eq!(third.lo().next_up(), third.hi());
        let s = Interval::point(0.1) + Interval::point(0.2);
        assert!(s.lo() < s.hi());
        let r = Interval::point(2.0).sqrt().unwrap();
        assert_eq!(r.lo().next_up(), r.hi());
    }

    #[test]
    fn division_by_zero_interval() {
        assert!(matches!(
            Interval::ONE.checked_div(iv(0.0, 1.0)),
            Err(Error::Domain { .. })
        ));
        assert!(Interval::ONE.checked_div(iv(-1.0, 1.0)).is_err());
    }

    #[test]
    fn sqrt_clamp_rule() {
        assert_eq!(iv(-1e-18, 4.0).sqrt().unwrap(), iv(0.0, 2.0));
        assert!(iv(-1e-3, 4.0).sqrt().is_err());
        assert!(iv(-2.0, -1.0).sqrt().is_err());
    }

    #[test]
    fn set_operations() {
        assert_eq!(iv(1.0, 2.0).hull(&iv(3.0, 4.0)), iv(1.0, 4.0));
        assert_eq!(iv(0.0, 2.0).bisect(), (iv(0.0, 1.0), iv(1.0, 2.0)));
        assert_eq!(iv(0.0, 1.0).intersect(&iv(2.0, 3.0)), None);
        assert_eq!(iv(0.0, 2.0).intersect(&iv(1.0, 3.0)), Some(iv(1.0, 2.0)));
        assert!(iv(0.0, 2.0).contains(2.0));
        assert!(!iv(0.0, 2.0).contains(2.5));
        assert_eq!(iv(1.0, 3.0).width(), 2.0);
        assert_eq!(iv(-3.0, 2.0).sqr(), iv(0.0, 9.0));
        assert_eq!(iv(-3.0, -2.0).sqr(), iv(4.0, 9.0));
    }

    #[test]
    fn pi_enclosure() {
        let p = Interval::pi();
        assert!(p.lo() < p.hi());
        assert!(p.contains(std::f64::consts::PI));
    }

    #[test]
    fn serde_uses_decimal_strings() {
        let a = Interval::from_decimal("1.215").unwrap();
        let js = serde_json::to_string(&a).unwrap();
        assert!(js.contains("\"lo\":\"1.2149999999999999\"") || js.contains("\"lo\":\"1.215\""));
        let back: Interval = serde_json::from_str(&js).unwrap();
        assert_eq!(back, a);
        assert!(serde_json::from_str::<Interval>(r#"{"lo":"2","hi":"1"}"#).is_err());
    }

    #[test]
    fn precision_validation() {
        assert!(Precision::default().validate().is_ok());
        let bad = Precision {
            clamp_tol: 1.0,
            slack_steps: 2,
        };
        assert!(bad.validate().is_err());
        let bad = Precision {
            clamp_tol: 1e-12,
            slack_steps: 1,
        };
        assert!(bad.validate().is_err());
    }
}
