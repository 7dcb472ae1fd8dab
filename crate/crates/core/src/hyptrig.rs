//! Hyperbolic and inverse-hyperbolic functions on intervals, and the
//! right-angled hexagon and equilateral-triangle identities built on them.
//!
//! Each transcendental is evaluated with the platform libm at the interval
//! endpoints (all functions here are monotone on the pieces we evaluate) and
//! the result is widened by [`Precision::slack_steps`] representable values in
//! each direction. That slack covers the documented error of glibc and musl
//! (at most two ulps for `cosh`, `sinh`, `tanh`, `acosh`; one for `exp`,
//! `log`, `cos`); the multiprecision oracle tests check it empirically.
//!
//! Wherever a quantity is known through its hyperbolic cosine, `sinh` is
//! recovered as `sqrt(cosh^2 - 1)` rather than through an `acosh` round trip.
//!
//! [`Precision::slack_steps`]: crate::interval::Precision

use crate::error::{Error, Result};
use crate::interval::{precision, step_down, step_up, Interval};

#[inline]
fn slack() -> u32 {
    precision().slack_steps
}

#[inline]
fn down(x: f64) -> f64 {
    step_down(x, slack())
}

#[inline]
fn up(x: f64) -> f64 {
    step_up(x, slack())
}

// Clamps a lower endpoint that sits just below 1 (within tolerance) up to 1.
fn clamp_at_one(x: Interval, op: &'static str) -> Result<Interval> {
    if x.hi() < 1.0 {
        return Err(Error::domain(op, format!("argument {x} lies below 1")));
    }
    if x.lo() >= 1.0 {
        return Ok(x);
    }
    let tol = precision().clamp_tol * x.hi().max(1.0);
    if x.lo() < 1.0 - tol {
        return Err(Error::domain(
            op,
            format!("argument {x} dips below 1 beyond the clamp tolerance"),
        ));
    }
    Interval::new(1.0, x.hi())
}

impl Interval {
    pub fn exp(self) -> Interval {
        Interval::unbounded(down(self.lo().exp()).max(0.0), up(self.hi().exp()))
    }

    /// Natural logarithm; requires `lo > 0`.
    pub fn ln(self) -> Result<Interval> {
        if self.lo() <= 0.0 {
            return Err(Error::domain(
                "log",
                format!("argument {self} is not positive"),
            ));
        }
        Ok(Interval::unbounded(
            down(self.lo().ln()),
            up(self.hi().ln()),
        ))
    }

    pub fn cosh(self) -> Interval {
        let (lo, hi) = if self.lo() >= 0.0 {
            (down(self.lo().cosh()), up(self.hi().cosh()))
        } else if self.hi() <= 0.0 {
            (down(self.hi().cosh()), up(self.lo().cosh()))
        } else {
            (1.0, up(self.hi().max(-self.lo()).cosh()))
        };
        Interval::unbounded(lo.max(1.0), hi)
    }

    pub fn sinh(self) -> Interval {
        Interval::unbounded(down(self.lo().sinh()), up(self.hi().sinh()))
    }

    pub fn tanh(self) -> Interval {
        Interval::unbounded(
            down(self.lo().tanh()).max(-1.0),
            up(self.hi().tanh()).min(1.0),
        )
    }

    /// Inverse hyperbolic cosine on `self ∩ [1, ∞)`.
    pub fn acosh(self) -> Result<Interval> {
        let x = clamp_at_one(self, "acosh")?;
        Ok(Interval::unbounded(
            down(x.lo().acosh()).max(0.0),
            up(x.hi().acosh()),
        ))
    }

    pub fn cos(self) -> Interval {
        let full = Interval::unbounded(-1.0, 1.0);
        let two_pi = Interval::pi() * Interval::point(2.0);
        if self.width() >= two_pi.lo() || self.lo().abs() > 1e15 || self.hi().abs() > 1e15 {
            return full;
        }
        let (ca, cb) = (self.lo().cos(), self.hi().cos());
        let mut lo = down(ca.min(cb));
        let mut hi = up(ca.max(cb));
        let pi = Interval::pi();
        let kmin = (self.lo() / pi.hi()).floor() as i64 - 1;
        let kmax = (self.hi() / pi.lo()).ceil() as i64 + 1;
        for k in kmin..=kmax {
            let kpi = Interval::point(k as f64) * pi;
            if kpi.overlaps(&self) {
                if k.rem_euclid(2) == 0 {
                    hi = 1.0;
                } else {
                    lo = -1.0;
                }
            }
        }
        Interval::unbounded(lo.max(-1.0), hi.min(1.0))
    }
}

/// `sinh x` from `cosh x`, as `sqrt(cosh^2 x - 1)`.
pub fn sinh_from_cosh(cosh_x: Interval) -> Result<Interval> {
    let c = clamp_at_one(cosh_x, "sinh_from_cosh")?;
    (c.sqr() - Interval::ONE).sqrt()
}

/// `cosh(x/2)` from `cosh x`, via `sqrt((cosh x + 1) / 2)`.
pub fn cosh_half(cosh_x: Interval) -> Result<Interval> {
    let c = clamp_at_one(cosh_x, "cosh_half")?;
    ((c + Interval::ONE) * Interval::point(0.5)).sqrt()
}

/// `cosh(2x)` from `cosh x`, via `2 cosh^2 x - 1`.
pub fn cosh_double(cosh_x: Interval) -> Result<Interval> {
    let c = clamp_at_one(cosh_x, "cosh_double")?;
    Ok(Interval::point(2.0) * c.sqr() - Interval::ONE)
}

/// Hyperbolic cosines of three pairwise non-adjacent sides `l, l', l''` of a
/// right-angled hexagon.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HexSides {
    pub cosh_l: Interval,
    pub cosh_lp: Interval,
    pub cosh_lpp: Interval,
}

impl HexSides {
    pub fn new(cosh_l: Interval, cosh_lp: Interval, cosh_lpp: Interval) -> Result<Self> {
        Ok(HexSides {
            cosh_l: clamp_at_one(cosh_l, "hexagon side")?,
            cosh_lp: clamp_at_one(cosh_lp, "hexagon side")?,
            cosh_lpp: clamp_at_one(cosh_lpp, "hexagon side")?,
        })
    }

    /// All three sides equal.
    pub fn equilateral(cosh_l: Interval) -> Result<Self> {
        HexSides::new(cosh_l, cosh_l, cosh_l)
    }
}

/// Right-angled hexagon rule: `cosh d` for the side `d` abutting the sides of
/// lengths `l` and `l'`,
///
/// ```text
/// cosh d = (cosh l cosh l' + cosh l'') / (sinh l sinh l')
/// ```
pub fn hexagon_rule(s: &HexSides) -> Result<Interval> {
    let sinh_l = sinh_from_cosh(s.cosh_l)?;
    let sinh_lp = sinh_from_cosh(s.cosh_lp)?;
    (s.cosh_l * s.cosh_lp + s.cosh_lpp).checked_div(sinh_l * sinh_lp)
}

/// `cos α` at a vertex of the equilateral triangle with sides `2R`, given
/// `cosh 2R`: `cosh 2R / (cosh 2R + 1)`.
pub fn equilateral_vertex_angle_cos(cosh_2r: Interval) -> Result<Interval> {
    let c = clamp_at_one(cosh_2r, "equilateral_vertex_angle_cos")?;
    // Written as 1 - 1/(c + 1) so that c occurs once.
    let v = Interval::ONE - (c + Interval::ONE).recip()?;
    Ok(Interval::unbounded(v.lo().max(0.5), v.hi().min(1.0)))
}
