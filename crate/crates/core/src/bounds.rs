//! Lower-bound quantities as interval functions of `c = cosh ℓ₁`, and the
//! volume bound assembled from them.
//!
//! Everything is expressed in cosh coordinates; lengths are recovered with
//! `acosh` only where a quantity enters as a length (collar heights, `ℓ₁`).
//!
//! Glossary of the quantities, all functions of `c`:
//!
//! | id    | meaning |
//! |-------|---------|
//! | `R`   | radius of the embedded disks around the feet of the shortest return path, `cosh R = sqrt(1 + 1/(2c - 2))` |
//! | `Rp`  | `cosh R' = 3 - cosh R` |
//! | `Rpp` | four-disk packing radius, `cosh R'' = 1/sqrt(2(1 - cos 2π/9))` |
//! | `A`   | muffin side length, `cosh A = sqrt(2(c + 1)/3)` |
//! | `E`,`F` | lower bounds for `ℓ₂` from `d₁₂ ≤ R + R'` and `d₂₂ ≤ 2R'` |
//! | `L`,`M` | lower bounds for `ℓ₂` from `min(d₁₂, d₂₂) ≤ 2R''` |
//! | `MufVol` | volume of the muffin around the shortest return path |
//! | `Area` | area of the boundary outside the two radius-`R` disks |
//! | `Q`   | `acosh((4c + 1)/3) - ℓ₁ - sinh ℓ₁` |

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::scalar::{Dual, Scalar};

/// Relative slack under which two H candidates count as tied.
pub const TIE_TOL: f64 = 1e-6;

/// Depth of the bisection used when certifying derivative signs.
pub const MONOTONE_DEPTH: u32 = 4;

/// `(3 + √3)/4`, the smallest admissible `cosh ℓ₁` for a genus-2 boundary.
pub fn cosh_l1_floor() -> Interval {
    let s3 = Interval::point(3.0).sqrt().expect("sqrt 3");
    (Interval::point(3.0) + s3) * Interval::point(0.25)
}

fn cos_two_pi_ninths() -> Interval {
    let angle = (Interval::pi() * Interval::point(2.0))
        .checked_div(Interval::point(9.0))
        .expect("nonzero divisor");
    angle.cos()
}

/// `cosh R'' = 1 / sqrt(2 (1 - cos(2π/9)))`.
pub fn cosh_rpp() -> Interval {
    let c = cos_two_pi_ninths();
    (Interval::point(2.0) * (Interval::ONE - c))
        .sqrt()
        .and_then(Interval::recip)
        .expect("cos(2π/9) < 1")
}

/// `cosh 2R'' = 2 cosh² R'' - 1`, which simplifies to `1/(2(1 - cos 2π/9)) * 2 - 1`.
pub fn cosh_2rpp() -> Interval {
    let c = cos_two_pi_ninths();
    // 2 cosh²R'' - 1 = 1/(1 - cos θ) - 1 = cos θ / (1 - cos θ)
    c.checked_div(Interval::ONE - c).expect("cos(2π/9) < 1")
}

/// Largest `cosh ℓ₁` for which the four-disk bounds `L`, `M` apply:
/// `cos(2π/9) / (2 cos(2π/9) - 1)`.
pub fn lm_threshold() -> Interval {
    let c = cos_two_pi_ninths();
    c.checked_div(Interval::point(2.0) * c - Interval::ONE)
        .expect("2cos(2π/9) > 1")
}

/// Value(s) of `cosh ℓ₁`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoshL1 {
    c: Interval,
    checked: bool,
}

impl CoshL1 {
    /// Rejects values below the genus-2 floor `(3 + √3)/4`.
    pub fn new(c: Interval) -> Result<Self> {
        let floor = cosh_l1_floor();
        if c.lo() < floor.lo() {
            return Err(Error::range(
                "CoshL1::new",
                format!("cosh ℓ₁ = {c} lies below the genus-2 floor {floor}"),
            ));
        }
        Ok(CoshL1 { c, checked: true })
    }

    /// Skips the genus-2 floor check. The formulas still reject `c <= 1`.
    pub fn unchecked(c: Interval) -> Self {
        CoshL1 { c, checked: false }
    }

    /// `[lo, hi]` from two decimal literals, each enclosed outward.
    pub fn from_decimals(lo: &str, hi: &str) -> Result<Self> {
        let a = Interval::from_decimal(lo)?;
        let b = Interval::from_decimal(hi)?;
        CoshL1::new(Interval::new(a.lo(), b.hi())?)
    }

    /// The tight enclosure of a single decimal value.
    pub fn at(value: &str) -> Result<Self> {
        CoshL1::new(Interval::from_decimal(value)?)
    }

    pub fn interval(&self) -> Interval {
        self.c
    }

    pub fn is_checked(&self) -> bool {
        self.checked
    }
}

/// Tags for the named quantities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum QuantityId {
    R,
    Rp,
    Rpp,
    A,
    E,
    F,
    L,
    M,
    #[serde(rename = "ell1_half")]
    Ell1Half,
    MufVol,
    Area,
    Q,
}

impl QuantityId {
    pub const ALL: [QuantityId; 12] = [
        QuantityId::R,
        QuantityId::Rp,
        QuantityId::Rpp,
        QuantityId::A,
        QuantityId::E,
        QuantityId::F,
        QuantityId::L,
        QuantityId::M,
        QuantityId::Ell1Half,
        QuantityId::MufVol,
        QuantityId::Area,
        QuantityId::Q,
    ];

    /// Short label as used in table columns.
    pub fn label(&self) -> &'static str {
        match self {
            QuantityId::R => "R",
            QuantityId::Rp => "R'",
            QuantityId::Rpp => "R''",
            QuantityId::A => "A",
            QuantityId::E => "E",
            QuantityId::F => "F",
            QuantityId::L => "L",
            QuantityId::M => "M",
            QuantityId::Ell1Half => "l1/2",
            QuantityId::MufVol => "MufVol",
            QuantityId::Area => "Area",
            QuantityId::Q => "Q",
        }
    }

    /// Evaluates the quantity at `c`.
    ///
    /// `R`, `Rp`, `Rpp` are returned in cosh form. The collar-height
    /// candidates come back as lengths: `A`, `E/2`, `F/2`, `L/2`, `M/2`, `ℓ₁/2`.
    pub fn eval<S: Scalar>(&self, c: S) -> Result<S> {
        let half = S::lit(0.5);
        match self {
            QuantityId::R => formula::cosh_r(c),
            QuantityId::Rp => formula::cosh_rp(formula::cosh_r(c)?),
            QuantityId::Rpp => Ok(S::constant(cosh_rpp())),
            QuantityId::A => formula::cosh_a(c)?.acosh(),
            QuantityId::E => Ok(formula::cosh_e(c)?.acosh()? * half),
            QuantityId::F => Ok(formula::cosh_f(c, c)?.acosh()? * half),
            QuantityId::L => Ok(formula::cosh_l(c)?.acosh()? * half),
            QuantityId::M => Ok(formula::cosh_m(c)?.acosh()? * half),
            QuantityId::Ell1Half => Ok(c.acosh()? * half),
            QuantityId::MufVol => formula::muffin(c),
            QuantityId::Area => formula::area(c),
            QuantityId::Q => formula::q(c),
        }
    }
}

impl fmt::Display for QuantityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// The formulas, generic over the evaluation carrier.
pub mod formula {
    use super::{cosh_2rpp, Error, Interval, Result, Scalar};

    fn positive<S: Scalar>(x: S, what: &'static str) -> Result<S> {
        x.value().ensure_positive(what)?;
        Ok(x)
    }

    fn above_one<S: Scalar>(c: S, what: &'static str) -> Result<S> {
        if c.value().lo() <= 1.0 {
            return Err(Error::domain(
                what,
                format!("cosh ℓ₁ = {} must exceed 1", c.value()),
            ));
        }
        Ok(c)
    }

    /// `cosh R = sqrt(1 + 1/(2c - 2))`.
    pub fn cosh_r<S: Scalar>(c: S) -> Result<S> {
        let c = above_one(c, "cosh_R")?;
        (S::lit(1.0) + (S::lit(2.0) * c - S::lit(2.0)).recip()?).sqrt()
    }

    /// `cosh R' = 3 - cosh R`; defined for `1 <= cosh R <= 2`.
    pub fn cosh_rp<S: Scalar>(cosh_r: S) -> Result<S> {
        let v = cosh_r.value();
        if v.hi() > 2.0 || v.lo() < 1.0 {
            return Err(Error::domain(
                "cosh_Rprime",
                format!("cosh R = {v} must lie in [1, 2]"),
            ));
        }
        Ok(S::lit(3.0) - cosh_r)
    }

    /// `cosh(x + y)` from `cosh x` and `cosh y`.
    pub fn cosh_sum<S: Scalar>(cosh_x: S, cosh_y: S) -> Result<S> {
        Ok(cosh_x * cosh_y + cosh_x.sinh_from_cosh()? * cosh_y.sinh_from_cosh()?)
    }

    /// `tanh² ℓ₁ = 1 - 1/c²`.
    pub fn tanh_sq<S: Scalar>(c: S) -> Result<S> {
        Ok(S::lit(1.0) - c.sqr().recip()?)
    }

    /// `cosh A = sqrt((2/3)(c + 1))`.
    pub fn cosh_a<S: Scalar>(c: S) -> Result<S> {
        let two_thirds = Interval::point(2.0).checked_div(Interval::point(3.0))?;
        (S::constant(two_thirds) * (c + S::lit(1.0))).sqrt()
    }

    /// Lower bound for `cosh ℓ₂` given `d₁₂ <= d`, from `cosh d`:
    /// `2 / (cosh² d · tanh² ℓ₁ - 1) + 1`.
    pub fn cosh_ell2_from_d12<S: Scalar>(c: S, cosh_d: S) -> Result<S> {
        let den = positive(
            cosh_d.sqr() * tanh_sq(c)? - S::lit(1.0),
            "d12 bound denominator",
        )?;
        Ok(S::lit(2.0).checked_div(den)? + S::lit(1.0))
    }

    /// Lower bound for `cosh ℓ₂` given `d₂₂ <= d`, from `cosh d`:
    /// `sqrt((c + 1)/(cosh d - 1) + 1)`.
    pub fn cosh_ell2_from_d22<S: Scalar>(c: S, cosh_d: S) -> Result<S> {
        let den = positive(cosh_d - S::lit(1.0), "d22 bound denominator")?;
        ((c + S::lit(1.0)).checked_div(den)? + S::lit(1.0)).sqrt()
    }

    /// `E`: the `d₁₂` bound at `d₁₂ = R + R'`.
    pub fn cosh_e<S: Scalar>(c: S) -> Result<S> {
        let r = cosh_r(c)?;
        let rp = cosh_rp(r)?;
        cosh_ell2_from_d12(c, cosh_sum(r, rp)?)
    }

    /// `F`: the `d₂₂` bound at `d₂₂ = 2R'`. The numerator's `cosh ℓ₁` and the
    /// `ℓ₁` that determines `R'` are separate arguments.
    pub fn cosh_f<S: Scalar>(c_numerator: S, c_radius: S) -> Result<S> {
        let rp = cosh_rp(cosh_r(c_radius)?)?;
        let cosh_2rp = S::lit(2.0) * rp.sqr() - S::lit(1.0);
        cosh_ell2_from_d22(c_numerator, cosh_2rp)
    }

    /// `L`: the `d₁₂` bound at `d₁₂ = 2R''`.
    pub fn cosh_l<S: Scalar>(c: S) -> Result<S> {
        cosh_ell2_from_d12(c, S::constant(cosh_2rpp()))
    }

    /// `M`: the `d₂₂` bound at `d₂₂ = 2R''`.
    pub fn cosh_m<S: Scalar>(c: S) -> Result<S> {
        cosh_ell2_from_d22(c, S::constant(cosh_2rpp()))
    }

    /// `acosh((4c + 1)/3)`, the muffin's angular term.
    fn muffin_acosh<S: Scalar>(c: S) -> Result<S> {
        let third = Interval::ONE.checked_div(Interval::point(3.0))?;
        ((S::lit(4.0) * c + S::lit(1.0)) * S::constant(third)).acosh()
    }

    /// Muffin volume, `π (cosh R · acosh((4c + 1)/3) - ℓ₁)`.
    pub fn muffin<S: Scalar>(c: S) -> Result<S> {
        let r = cosh_r(c)?;
        Ok(S::constant(Interval::pi()) * (r * muffin_acosh(c)? - c.acosh()?))
    }

    /// Boundary area outside the two radius-`R` disks, `4π (2 - cosh R)`.
    pub fn area<S: Scalar>(c: S) -> Result<S> {
        let four_pi = Interval::pi() * Interval::point(4.0);
        Ok(S::constant(four_pi) * (S::lit(2.0) - cosh_r(c)?))
    }

    /// `Q = acosh((4c + 1)/3) - ℓ₁ - sinh ℓ₁`.
    pub fn q<S: Scalar>(c: S) -> Result<S> {
        Ok(muffin_acosh(c)? - c.acosh()? - c.sinh_from_cosh()?)
    }

    /// Volume of the muffin together with the collar of height `ℓ₁/2`:
    /// `π [ℓ₁ + 2 sinh ℓ₁ + cosh R · Q]`.
    pub fn v_combined<S: Scalar>(c: S) -> Result<S> {
        let l1 = c.acosh()?;
        let s1 = c.sinh_from_cosh()?;
        Ok(S::constant(Interval::pi()) * (l1 + S::lit(2.0) * s1 + cosh_r(c)? * q(c)?))
    }

    /// `dQ/dℓ₁ = 1/cosh R - 1 - c`.
    pub fn dq<S: Scalar>(c: S) -> Result<S> {
        Ok(cosh_r(c)?.recip()? - S::lit(1.0) - c)
    }

    /// `d(cosh R)/dℓ₁ = -sinh ℓ₁ / ((2c - 2)² cosh R)`.
    pub fn d_cosh_r<S: Scalar>(c: S) -> Result<S> {
        let den = (S::lit(2.0) * c - S::lit(2.0)).sqr() * cosh_r(c)?;
        Ok(-c.sinh_from_cosh()?.checked_div(den)?)
    }

    /// `dV/dℓ₁ = π [(1 + c)(2 - cosh R) + d(cosh R)/dℓ₁ · Q]`.
    pub fn dv<S: Scalar>(c: S) -> Result<S> {
        let r = cosh_r(c)?;
        let first = (S::lit(1.0) + c) * (S::lit(2.0) - r);
        Ok(S::constant(Interval::pi()) * (first + d_cosh_r(c)? * q(c)?))
    }

    /// Inverts `cosh R(c)`: `c = 1 + 1/(2 (cosh² R - 1))`.
    pub fn cosh_l1_from_cosh_r<S: Scalar>(cosh_r: S) -> Result<S> {
        let den = positive(
            S::lit(2.0) * (cosh_r.sqr() - S::lit(1.0)),
            "cosh R inversion",
        )?;
        Ok(S::lit(1.0) + den.recip()?)
    }
}

/// Direction of a certified monotonicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Monotone {
    NonDecreasing,
    NonIncreasing,
}

/// Certifies the sign of the derivative of `f` over `c`, bisecting up to
/// `depth` times when the enclosure straddles zero.
pub fn monotonicity<F>(f: &F, c: Interval, depth: u32) -> Option<Monotone>
where
    F: Fn(Dual) -> Result<Dual>,
{
    let d = f(Dual::variable(c)).ok().map(|v| v.deriv);
    match d {
        Some(d) if d.lo() >= 0.0 => return Some(Monotone::NonDecreasing),
        Some(d) if d.hi() <= 0.0 => return Some(Monotone::NonIncreasing),
        _ => {}
    }
    if depth == 0 || c.is_point() {
        return None;
    }
    let (a, b) = c.bisect();
    let left = monotonicity(f, a, depth - 1)?;
    let right = monotonicity(f, b, depth - 1)?;
    (left == right).then_some(left)
}

/// Enclosure of the range of `q` over `c`: the natural interval extension,
/// tightened to the endpoint values when a derivative-sign check passes.
pub fn range_enclosure(q: QuantityId, c: Interval) -> Result<Interval> {
    let natural = q.eval(c)?;
    if c.is_point() {
        return Ok(natural);
    }
    let f = |x: Dual| q.eval(x);
    match monotonicity(&f, c, MONOTONE_DEPTH) {
        Some(_) => {
            let a = q.eval(Interval::point(c.lo()))?;
            let b = q.eval(Interval::point(c.hi()))?;
            let hull = a.hull(&b);
            Ok(hull.intersect(&natural).unwrap_or(hull))
        }
        None => Ok(natural),
    }
}

pub fn cosh_r(c1: &CoshL1) -> Result<Interval> {
    formula::cosh_r(c1.interval())
}

pub fn cosh_rprime(cosh_r_val: Interval) -> Result<Interval> {
    formula::cosh_rp(cosh_r_val)
}

pub fn cosh_a(c1: &CoshL1) -> Result<Interval> {
    formula::cosh_a(c1.interval())
}

pub fn cosh_e(c1: &CoshL1) -> Result<Interval> {
    formula::cosh_e(c1.interval())
}

pub fn cosh_f(c1: &CoshL1) -> Result<Interval> {
    cosh_f_split(c1, c1)
}

/// `F` with the numerator's `cosh ℓ₁` and the radius' `ℓ₁` taken separately.
/// Since `F` increases with the first and decreases with the second, the
/// smallest first argument with the largest second gives a lower bound.
pub fn cosh_f_split(c_numerator: &CoshL1, c_radius: &CoshL1) -> Result<Interval> {
    formula::cosh_f(c_numerator.interval(), c_radius.interval())
}

fn check_lm_applicable(c1: &CoshL1, op: &'static str) -> Result<()> {
    let t = lm_threshold();
    if c1.interval().hi() > t.lo() {
        return Err(Error::range(
            op,
            format!(
                "cosh ℓ₁ = {} exceeds the four-disk threshold {t}",
                c1.interval()
            ),
        ));
    }
    Ok(())
}

pub fn cosh_l(c1: &CoshL1) -> Result<Interval> {
    check_lm_applicable(c1, "cosh_L")?;
    formula::cosh_l(c1.interval())
}

pub fn cosh_m(c1: &CoshL1) -> Result<Interval> {
    check_lm_applicable(c1, "cosh_M")?;
    formula::cosh_m(c1.interval())
}

/// Whether `L` and `M` apply on all of `c1`.
pub fn lm_applicable(c1: &CoshL1) -> bool {
    check_lm_applicable(c1, "").is_ok()
}

/// Lower bound for `cosh ℓ₂`: `max(c, min(E, F))`, and additionally
/// `min(L, M)` when the four-disk bound applies on all of `c1`.
pub fn ell2_lower(c1: &CoshL1) -> Result<Interval> {
    let c = c1.interval();
    let mut lb = c.max(&cosh_e(c1)?.min(&cosh_f(c1)?));
    if lm_applicable(c1) {
        lb = lb.max(&cosh_l(c1)?.min(&cosh_m(c1)?));
    }
    Ok(lb)
}

pub fn muffin_volume(c1: &CoshL1) -> Result<Interval> {
    formula::muffin(c1.interval())
}

pub fn boundary_area_outside_disks(c1: &CoshL1) -> Result<Interval> {
    formula::area(c1.interval())
}

/// Volume of the height-`h` collar over a planar region of the given area,
/// `area · (2h + sinh 2h) / 4`.
pub fn collar_volume(area: Interval, h: Interval) -> Result<Interval> {
    if area.lo() < 0.0 {
        return Err(Error::domain(
            "collar_volume",
            format!("area {area} is negative"),
        ));
    }
    if h.lo() < 0.0 {
        return Err(Error::domain(
            "collar_volume",
            format!("height {h} is negative"),
        ));
    }
    let two_h = Interval::point(2.0) * h;
    let v = area * (two_h + two_h.sinh()) * Interval::point(0.25);
    Interval::new(v.lo().max(0.0), v.hi())
}

pub fn v_combined(c1: &CoshL1) -> Result<Interval> {
    formula::v_combined(c1.interval())
}

pub fn q(c1: &CoshL1) -> Result<Interval> {
    formula::q(c1.interval())
}

pub fn dq(c1: &CoshL1) -> Result<Interval> {
    formula::dq(c1.interval())
}

pub fn d_cosh_r(c1: &CoshL1) -> Result<Interval> {
    formula::d_cosh_r(c1.interval())
}

pub fn dv(c1: &CoshL1) -> Result<Interval> {
    formula::dv(c1.interval())
}

/// Which `ℓ₂` lower bounds feed the collar height.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Ell2Family {
    /// `E` and `F` only.
    EF,
    /// `L` and `M` only; fails where they do not apply.
    LM,
    /// `E` and `F`, plus `L` and `M` wherever they apply.
    Auto,
}

/// Collar-height lower bound and the candidates that realize it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HProfile {
    /// `min(A, ℓ₂/2)` with `ℓ₂` floored at `ℓ₁`.
    pub h: Interval,
    /// Candidates within [`TIE_TOL`] of the minimum, sorted.
    pub active: Vec<QuantityId>,
    /// The same bound without the `ℓ₂ >= ℓ₁` floor.
    pub h_unfloored: Interval,
}

impl HProfile {
    pub fn floor_matters(&self) -> bool {
        self.h != self.h_unfloored
    }
}

fn near(a: f64, b: f64) -> bool {
    (a - b).abs() <= TIE_TOL * a.abs().max(b.abs()).max(1.0)
}

/// Collar-height lower bound over `c1` for the given bound family.
pub fn h_profile(c1: &CoshL1, family: Ell2Family) -> Result<HProfile> {
    let c = c1.interval();
    let a = range_enclosure(QuantityId::A, c)?;
    let l1_half = range_enclosure(QuantityId::Ell1Half, c)?;

    let mut groups: Vec<[(QuantityId, Interval); 2]> = Vec::new();
    let mut push_group = |x: QuantityId, y: QuantityId| -> Result<()> {
        groups.push([(x, range_enclosure(x, c)?), (y, range_enclosure(y, c)?)]);
        Ok(())
    };
    match family {
        Ell2Family::EF => push_group(QuantityId::E, QuantityId::F)?,
        Ell2Family::LM => {
            check_lm_applicable(c1, "h_profile")?;
            push_group(QuantityId::L, QuantityId::M)?;
        }
        Ell2Family::Auto => {
            // A vacuous pair (nonpositive denominator) simply drops out.
            let _ = push_group(QuantityId::E, QuantityId::F);
            if lm_applicable(c1) {
                let _ = push_group(QuantityId::L, QuantityId::M);
            }
        }
    }

    let group_mins: Vec<Interval> = groups.iter().map(|[(_, x), (_, y)]| x.min(y)).collect();
    let unfloored = group_mins.iter().copied().reduce(|p, q| p.max(&q));
    let ell2_half = match unfloored {
        Some(u) => u.max(&l1_half),
        None => l1_half,
    };
    let h = a.min(&ell2_half);
    let h_unfloored = match unfloored {
        Some(u) => a.min(&u),
        None => a,
    };

    let mut active = Vec::new();
    if near(a.lo(), h.lo()) {
        active.push(QuantityId::A);
    }
    if near(ell2_half.lo(), h.lo()) {
        if near(l1_half.lo(), ell2_half.lo()) {
            active.push(QuantityId::Ell1Half);
        }
        for (group, gmin) in groups.iter().zip(&group_mins) {
            if near(gmin.lo(), ell2_half.lo()) {
                for (id, v) in group {
                    if near(v.lo(), gmin.lo()) {
                        active.push(*id);
                    }
                }
            }
        }
    }
    active.sort();
    active.dedup();

    Ok(HProfile {
        h,
        active,
        h_unfloored,
    })
}

/// The volume bound over a range of `cosh ℓ₁`, with its constituents.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KmBound {
    /// Enclosure of `vol(Muf) + π (2 - cosh R)(2H + sinh 2H)` over the range.
    pub volume: Interval,
    pub muffin: Interval,
    pub area: Interval,
    pub profile: HProfile,
}

/// Volume lower bound with an explicit `ℓ₂` bound family.
pub fn km_volume_with(c1: &CoshL1, family: Ell2Family) -> Result<KmBound> {
    let c = c1.interval();
    let muffin = range_enclosure(QuantityId::MufVol, c)?;
    let area = range_enclosure(QuantityId::Area, c)?;
    let profile = h_profile(c1, family)?;
    let volume = muffin + collar_volume(area, profile.h)?;
    Ok(KmBound {
        volume,
        muffin,
        area,
        profile,
    })
}

/// `vol(N) >= vol(Muf) + π (2 - cosh R)(2H + sinh 2H)`, with `H = min(A, ℓ₂/2)`
/// and every applicable `ℓ₂` bound.
pub fn km_volume_lower(c1: &CoshL1) -> Result<KmBound> {
    km_volume_with(c1, Ell2Family::Auto)
}
