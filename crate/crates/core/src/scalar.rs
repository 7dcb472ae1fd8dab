//! Generic evaluation carrier for the bound formulas.
//!
//! Formulas are written once against [`Scalar`] and evaluated either on plain
//! intervals (range enclosures) or on [`Dual`] intervals, which carry an
//! enclosure of the derivative with respect to the single input variable
//! alongside the value. A derivative enclosure of one sign over a subinterval
//! certifies monotonicity there.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Result;
use crate::hyptrig::sinh_from_cosh;
use crate::interval::Interval;

pub trait Scalar:
    Copy + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn constant(v: Interval) -> Self;
    fn value(self) -> Interval;
    fn checked_div(self, rhs: Self) -> Result<Self>;
    fn sqr(self) -> Self;
    fn sqrt(self) -> Result<Self>;
    fn acosh(self) -> Result<Self>;
    fn sinh(self) -> Self;
    fn cosh(self) -> Self;

    fn lit(x: f64) -> Self {
        Self::constant(Interval::point(x))
    }

    fn recip(self) -> Result<Self> {
        Self::lit(1.0).checked_div(self)
    }

    /// `sqrt(self^2 - 1)`, the hyperbolic sine of a quantity given by its cosh.
    fn sinh_from_cosh(self) -> Result<Self> {
        (self.sqr() - Self::lit(1.0)).sqrt()
    }
}

impl Scalar for Interval {
    fn constant(v: Interval) -> Self {
        v
    }
    fn value(self) -> Interval {
        self
    }
    fn checked_div(self, rhs: Self) -> Result<Self> {
        Interval::checked_div(self, rhs)
    }
    fn sqr(self) -> Self {
        Interval::sqr(self)
    }
    fn sqrt(self) -> Result<Self> {
        Interval::sqrt(self)
    }
    fn acosh(self) -> Result<Self> {
        Interval::acosh(self)
    }
    fn sinh(self) -> Self {
        Interval::sinh(self)
    }
    fn cosh(self) -> Self {
        Interval::cosh(self)
    }
    fn sinh_from_cosh(self) -> Result<Self> {
        sinh_from_cosh(self)
    }
}

/// Value and derivative enclosures, forward mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dual {
    pub value: Interval,
    pub deriv: Interval,
}

impl Dual {
    /// The independent variable ranging over `x` (derivative 1).
    pub fn variable(x: Interval) -> Self {
        Dual {
            value: x,
            deriv: Interval::ONE,
        }
    }
}

impl Add for Dual {
    type Output = Dual;
    fn add(self, rhs: Dual) -> Dual {
        Dual {
            value: self.value + rhs.value,
            deriv: self.deriv + rhs.deriv,
        }
    }
}

impl Sub for Dual {
    type Output = Dual;
    fn sub(self, rhs: Dual) -> Dual {
        Dual {
            value: self.value - rhs.value,
            deriv: self.deriv - rhs.deriv,
        }
    }
}

impl Mul for Dual {
    type Output = Dual;
    fn mul(self, rhs: Dual) -> Dual {
        Dual {
            value: self.value * rhs.value,
            deriv: self.deriv * rhs.value + self.value * rhs.deriv,
        }
    }
}

impl Neg for Dual {
    type Output = Dual;
    fn neg(self) -> Dual {
        Dual {
            value: -self.value,
            deriv: -self.deriv,
        }
    }
}

impl Scalar for Dual {
    fn constant(v: Interval) -> Self {
        Dual {
            value: v,
            deriv: Interval::ZERO,
        }
    }

    fn value(self) -> Interval {
        self.value
    }

    fn checked_div(self, rhs: Self) -> Result<Self> {
        let q = self.value.checked_div(rhs.value)?;
        let deriv = (self.deriv - q * rhs.deriv).checked_div(rhs.value)?;
        Ok(Dual { value: q, deriv })
    }

    fn sqr(self) -> Self {
        Dual {
            value: self.value.sqr(),
            deriv: Interval::point(2.0) * self.value * self.deriv,
        }
    }

    fn sqrt(self) -> Result<Self> {
        let s = self.value.sqrt()?;
        let deriv = self.deriv.checked_div(Interval::point(2.0) * s)?;
        Ok(Dual { value: s, deriv })
    }

    fn acosh(self) -> Result<Self> {
        let a = self.value.acosh()?;
        let deriv = self.deriv.checked_div(sinh_from_cosh(self.value)?)?;
        Ok(Dual { value: a, deriv })
    }

    fn sinh(self) -> Self {
        Dual {
            value: self.value.sinh(),
            deriv: self.deriv * self.value.cosh(),
        }
    }

    fn cosh(self) -> Self {
        Dual {
            value: self.value.cosh(),
            deriv: self.deriv * self.value.sinh(),
        }
    }
}
