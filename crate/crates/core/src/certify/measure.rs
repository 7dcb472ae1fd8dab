//! Named measures and the claims made about them. A certificate piece stores
//! its claim as `measure:op:threshold`, which is enough to re-evaluate it.

use std::fmt;
use std::str::FromStr;

use crate::bounds::{self, formula, range_enclosure, CoshL1, Ell2Family, QuantityId};
use crate::error::{Error, Result};
use crate::hyptrig::{cosh_double, cosh_half, hexagon_rule, HexSides};
use crate::interval::Interval;
use crate::scalar::Dual;

/// A function of one interval variable whose range can be enclosed.
///
/// Unless noted, the variable is `cosh ℓ₁`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Measure {
    /// Volume lower bound with the given `ℓ₂` bound family.
    KmVolume(Ell2Family),
    /// Collar height lower bound.
    Height(Ell2Family),
    Muffin,
    Area,
    CoshR,
    Q,
    VCombined,
    DQ,
    DCoshR,
    DV,
    /// Derivative of `cosh E` with respect to `cosh ℓ₁`.
    DCoshE,
    CoshE,
    /// Lower bound for `cosh F` over `[a, b]`: numerator at `a`, radius at `b`.
    CoshFCorner,
    /// Lower bound for `ℓ₂` from `E` and the corner bound for `F`.
    Ell2LowerEF,
    /// `ℓ₂` lower bound minus `2ℓ₁`.
    Ell2MinusTwiceEll1,
    /// Half the `ℓ₂` lower bound minus `A`.
    HalfEll2MinusA,
    /// `cosh d₁₁` from a hexagon whose third side is `2ℓ₁`.
    HexagonD11,
    /// `2 acosh(cosh d / cosh(d/2)) - d`, with `cosh d` as the variable.
    BoundaryGap,
}

impl Measure {
    pub const ALL: [Measure; 22] = [
        Measure::KmVolume(Ell2Family::Auto),
        Measure::KmVolume(Ell2Family::EF),
        Measure::KmVolume(Ell2Family::LM),
        Measure::Height(Ell2Family::Auto),
        Measure::Height(Ell2Family::EF),
        Measure::Height(Ell2Family::LM),
        Measure::Muffin,
        Measure::Area,
        Measure::CoshR,
        Measure::Q,
        Measure::VCombined,
        Measure::DQ,
        Measure::DCoshR,
        Measure::DV,
        Measure::DCoshE,
        Measure::CoshE,
        Measure::CoshFCorner,
        Measure::Ell2LowerEF,
        Measure::Ell2MinusTwiceEll1,
        Measure::HalfEll2MinusA,
        Measure::HexagonD11,
        Measure::BoundaryGap,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Measure::KmVolume(Ell2Family::Auto) => "km_volume",
            Measure::KmVolume(Ell2Family::EF) => "km_volume_ef",
            Measure::KmVolume(Ell2Family::LM) => "km_volume_lm",
            Measure::Height(Ell2Family::Auto) => "h",
            Measure::Height(Ell2Family::EF) => "h_ef",
            Measure::Height(Ell2Family::LM) => "h_lm",
            Measure::Muffin => "muffin",
            Measure::Area => "area",
            Measure::CoshR => "cosh_r",
            Measure::Q => "q",
            Measure::VCombined => "v_combined",
            Measure::DQ => "dq",
            Measure::DCoshR => "d_cosh_r",
            Measure::DV => "dv",
            Measure::DCoshE => "d_cosh_e",
            Measure::CoshE => "cosh_e",
            Measure::CoshFCorner => "cosh_f_corner",
            Measure::Ell2LowerEF => "ell2_lower_ef",
            Measure::Ell2MinusTwiceEll1 => "ell2_minus_twice_ell1",
            Measure::HalfEll2MinusA => "half_ell2_minus_a",
            Measure::HexagonD11 => "hexagon_d11",
            Measure::BoundaryGap => "boundary_gap",
        }
    }

    /// Encloses the range of the measure over `x`.
    pub fn eval(&self, x: Interval) -> Result<Interval> {
        let c1 = CoshL1::unchecked(x);
        match self {
            Measure::KmVolume(f) => Ok(bounds::km_volume_with(&c1, *f)?.volume),
            Measure::Height(f) => Ok(bounds::h_profile(&c1, *f)?.h),
            Measure::Muffin => range_enclosure(QuantityId::MufVol, x),
            Measure::Area => range_enclosure(QuantityId::Area, x),
            Measure::CoshR => range_enclosure(QuantityId::R, x),
            Measure::Q => range_enclosure(QuantityId::Q, x),
            Measure::VCombined => formula::v_combined(x),
            Measure::DQ => formula::dq(x),
            Measure::DCoshR => formula::d_cosh_r(x),
            Measure::DV => formula::dv(x),
            Measure::DCoshE => Ok(formula::cosh_e(Dual::variable(x))?.deriv),
            Measure::CoshE => formula::cosh_e(x),
            Measure::CoshFCorner => cosh_f_corner(x),
            Measure::Ell2LowerEF => ell2_lower_ef(x),
            Measure::Ell2MinusTwiceEll1 => {
                let l1 = x.acosh()?;
                Ok(ell2_lower_ef(x)? - Interval::point(2.0) * l1)
            }
            Measure::HalfEll2MinusA => {
                let a = range_enclosure(QuantityId::A, x)?;
                Ok(ell2_lower_ef(x)? * Interval::point(0.5) - a)
            }
            Measure::HexagonD11 => hexagon_rule(&HexSides::new(x, x, cosh_double(x)?)?),
            Measure::BoundaryGap => boundary_gap(x),
        }
    }
}

fn cosh_f_corner(x: Interval) -> Result<Interval> {
    formula::cosh_f(Interval::point(x.lo()), Interval::point(x.hi()))
}

// min(E, F) as a length, with E from its range enclosure and F from the corner.
fn ell2_lower_ef(x: Interval) -> Result<Interval> {
    let e = range_enclosure(QuantityId::E, x)? * Interval::point(2.0);
    let f = cosh_f_corner(x)?.acosh()?;
    Ok(e.min(&f))
}

fn boundary_gap(cosh_d: Interval) -> Result<Interval> {
    let ratio = cosh_d.checked_div(cosh_half(cosh_d)?)?;
    Ok(Interval::point(2.0) * ratio.acosh()? - cosh_d.acosh()?)
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Measure {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Measure::ALL
            .iter()
            .find(|m| m.name() == s)
            .copied()
            .ok_or_else(|| Error::Certificate(format!("unknown measure {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cmp {
    Gt,
    Ge,
    Lt,
    Le,
    /// Inside a closed decimal range written `[a,b]`.
    In,
}

impl Cmp {
    pub fn name(&self) -> &'static str {
        match self {
            Cmp::Gt => "gt",
            Cmp::Ge => "ge",
            Cmp::Lt => "lt",
            Cmp::Le => "le",
            Cmp::In => "in",
        }
    }
}

impl FromStr for Cmp {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "gt" => Cmp::Gt,
            "ge" => Cmp::Ge,
            "lt" => Cmp::Lt,
            "le" => Cmp::Le,
            "in" => Cmp::In,
            _ => return Err(Error::Certificate(format!("unknown comparison {s:?}"))),
        })
    }
}

/// Three-valued result of checking a claim against an enclosure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    Fails,
    Unknown,
}

/// A comparison of a value against a decimal threshold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub cmp: Cmp,
    pub threshold: String,
}

impl Check {
    pub fn new(cmp: Cmp, threshold: impl Into<String>) -> Self {
        Check {
            cmp,
            threshold: threshold.into(),
        }
    }

    /// Judges an enclosure of a single value, or of the range of a function
    /// over a piece. `Fails` means the claim is false at every point.
    pub fn judge(&self, b: Interval) -> Result<Outcome> {
        if self.cmp == Cmp::In {
            let inner = self
                .threshold
                .strip_prefix('[')
                .and_then(|s| s.strip_suffix(']'))
                .and_then(|s| s.split_once(','))
                .ok_or_else(|| Error::Certificate(format!("bad range {:?}", self.threshold)))?;
            let a = Interval::from_decimal(inner.0)?;
            let c = Interval::from_decimal(inner.1)?;
            return Ok(if a.hi() <= b.lo() && b.hi() <= c.lo() {
                Outcome::Holds
            } else if b.hi() < a.lo() || b.lo() > c.hi() {
                Outcome::Fails
            } else {
                Outcome::Unknown
            });
        }
        let t = Interval::from_decimal(&self.threshold)?;
        let (holds, fails) = match self.cmp {
            Cmp::Gt => (b.lo() > t.hi(), b.hi() <= t.lo()),
            Cmp::Ge => (b.lo() >= t.hi(), b.hi() < t.lo()),
            Cmp::Lt => (b.hi() < t.lo(), b.lo() >= t.hi()),
            Cmp::Le => (b.hi() <= t.lo(), b.lo() > t.hi()),
            Cmp::In => unreachable!(),
        };
        Ok(if holds {
            Outcome::Holds
        } else if fails {
            Outcome::Fails
        } else {
            Outcome::Unknown
        })
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.cmp.name(), self.threshold)
    }
}

impl FromStr for Check {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (op, t) = s
            .split_once(':')
            .ok_or_else(|| Error::Certificate(format!("bad check {s:?}")))?;
        Ok(Check::new(op.parse()?, t))
    }
}

/// A measure together with the check its range must pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim {
    pub measure: Measure,
    pub check: Check,
}

impl Claim {
    pub fn new(measure: Measure, cmp: Cmp, threshold: impl Into<String>) -> Self {
        Claim {
            measure,
            check: Check::new(cmp, threshold),
        }
    }

    /// Evaluates the measure on `x` and judges it. Evaluation errors yield
    /// `Unknown` with no bound.
    pub fn test(&self, x: Interval) -> (Option<Interval>, Outcome) {
        match self.measure.eval(x) {
            Ok(b) => (Some(b), self.check.judge(b).unwrap_or(Outcome::Unknown)),
            Err(_) => (None, Outcome::Unknown),
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.measure, self.check)
    }
}

impl FromStr for Claim {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (m, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::Certificate(format!("bad claim {s:?}")))?;
        Ok(Claim {
            measure: m.parse()?,
            check: rest.parse()?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_parse_back() {
        for m in Measure::ALL {
            assert_eq!(m.name().parse::<Measure>().unwrap(), m);
        }
        assert!("nope".parse::<Measure>().is_err());
    }

    #[test]
    fn claim_round_trip() {
        let c = Claim::new(Measure::KmVolume(Ell2Family::Auto), Cmp::Gt, "6.89");
        assert_eq!(c.to_string(), "km_volume:gt:6.89");
        assert_eq!(c.to_string().parse::<Claim>().unwrap(), c);
        let r: Claim = "cosh_r:in:[1.4,1.5]".parse().unwrap();
        assert_eq!(r.check.cmp, Cmp::In);
    }

    #[test]
    fn judging() {
        let b = Interval::new(1.0, 2.0).unwrap();
        assert_eq!(Check::new(Cmp::Gt, "0.5").judge(b).unwrap(), Outcome::Holds);
        assert_eq!(
            Check::new(Cmp::Gt, "1.5").judge(b).unwrap(),
            Outcome::Unknown
        );
        assert_eq!(Check::new(Cmp::Gt, "2").judge(b).unwrap(), Outcome::Fails);
        assert_eq!(Check::new(Cmp::Ge, "1").judge(b).unwrap(), Outcome::Holds);
        assert_eq!(Check::new(Cmp::Le, "2").judge(b).unwrap(), Outcome::Holds);
        assert_eq!(Check::new(Cmp::Lt, "1").judge(b).unwrap(), Outcome::Fails);
        assert_eq!(
            Check::new(Cmp::In, "[0.9,2.1]").judge(b).unwrap(),
            Outcome::Holds
        );
        assert_eq!(
            Check::new(Cmp::In, "[2.5,3]").judge(b).unwrap(),
            Outcome::Fails
        );
        // 0.1 is not representable, so "ge 0.1" needs lo above its enclosure.
        let tenth = Interval::point(0.1);
        assert_eq!(
            Check::new(Cmp::Ge, "0.1").judge(tenth).unwrap(),
            Outcome::Holds
        );
        assert!(Check::new(Cmp::In, "1,2").judge(b).is_err());
    }

    #[test]
    fn boundary_gap_at_packing_limit() {
        let s3 = Interval::point(3.0).sqrt().unwrap();
        let d = Interval::point(3.0) + Interval::point(2.0) * s3;
        assert!(Measure::BoundaryGap.eval(d).unwrap().lo() > 0.0);
    }

    #[test]
    fn hexagon_with_doubled_side() {
        // cosh d = 3 + 2/(c² - 1)
        let c = Interval::point(1.215);
        let d = Measure::HexagonD11.eval(c).unwrap();
        let expected = 3.0 + 2.0 / (1.215f64 * 1.215 - 1.0);
        assert!((d.mid() - expected).abs() < 1e-12);
    }
}
