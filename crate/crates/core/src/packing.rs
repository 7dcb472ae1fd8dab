//! Radius bounds for packings of `n` equal disks on a closed hyperbolic
//! surface of genus `g` (area `4π(g - 1)`).
//!
//! Böröczky's bound caps the density of a radius-`R` packing by
//! `3α(cosh R - 1) / (π - 3α)`, the share of the equilateral triangle with
//! sides `2R` (vertex angle `α`) covered by its three vertex sectors. Fitting
//! `n` disks of area `2π(cosh R - 1)` then forces `α >= nπ / (3n + 6(g - 1))`,
//! and the law of cosines turns that angle into a radius.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hyptrig::cosh_double;
use crate::interval::Interval;

pub const DEFAULT_GENUS: u32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PackingBound {
    pub n: u32,
    /// Smallest possible vertex angle of the equilateral triangle, radians.
    pub alpha_min: Interval,
    /// Largest possible disk radius, in cosh form.
    pub cosh_r_max: Interval,
}

/// `nπ / (3n + 6)`, the genus-2 case of [`min_angle_for_genus`].
pub fn boroczky_min_angle(n: u32) -> Interval {
    min_angle_for_genus(n, DEFAULT_GENUS)
}

/// `nπ / (3n + 6(g - 1))`.
pub fn min_angle_for_genus(n: u32, genus: u32) -> Interval {
    assert!(genus >= 2, "genus must be at least 2");
    let n_f = Interval::point(n as f64);
    let den = Interval::point(3.0) * n_f + Interval::point(6.0 * (genus - 1) as f64);
    (n_f * Interval::pi())
        .checked_div(den)
        .expect("positive denominator")
}

pub fn max_packing_radius(n: u32) -> Result<PackingBound> {
    max_packing_radius_for_genus(n, DEFAULT_GENUS)
}

/// Inverts `cos α = cosh 2R / (cosh 2R + 1)` at `α = α_min`, which gives
/// `cosh R = 1 / sqrt(2(1 - cos α))`.
pub fn max_packing_radius_for_genus(n: u32, genus: u32) -> Result<PackingBound> {
    if n < 2 {
        return Err(Error::range(
            "max_packing_radius",
            format!("need at least two disks, got {n}"),
        ));
    }
    let alpha_min = min_angle_for_genus(n, genus);
    let cos_a = alpha_min.cos();
    let cosh_r_max = (Interval::point(2.0) * (Interval::ONE - cos_a))
        .sqrt()?
        .recip()?;
    Ok(PackingBound {
        n,
        alpha_min,
        cosh_r_max,
    })
}

/// `(max cosh d₁₁, min cosh ℓ₁)` for a genus-2 boundary: the double of the
/// two-disk radius bound, and `cosh ℓ₁` at which the disk radius reaches it.
pub fn borbounds_constants() -> (Interval, Interval) {
    let r = max_packing_radius(2).expect("n = 2").cosh_r_max;
    let d11 = cosh_double(r).expect("cosh R > 1");
    let l1 = crate::bounds::formula::cosh_l1_from_cosh_r(r).expect("cosh R > 1");
    (d11, l1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyptrig::equilateral_vertex_angle_cos;

    fn s3() -> Interval {
        Interval::point(3.0).sqrt().unwrap()
    }

    #[test]
    fn angles_for_two_and_four_disks() {
        let pi = Interval::pi();
        let sixth = pi.checked_div(Interval::point(6.0)).unwrap();
        assert!(boroczky_min_angle(2).overlaps(&sixth));
        let two_ninths = (pi * Interval::point(2.0))
            .checked_div(Interval::point(9.0))
            .unwrap();
        assert!(boroczky_min_angle(4).overlaps(&two_ninths));
        let third = std::f64::consts::FRAC_PI_3;
        assert!((boroczky_min_angle(1_000_000).mid() - third).abs() < 1e-5);
    }

    #[test]
    fn radius_for_two_disks() {
        let b = max_packing_radius(2).unwrap();
        let expected = (Interval::ONE + s3())
            .checked_div(Interval::point(2.0).sqrt().unwrap())
            .unwrap();
        assert!(b.cosh_r_max.overlaps(&expected));
        assert!(b.cosh_r_max.width() < 1e-14);
    }

    #[test]
    fn radius_for_four_disks() {
        let b = max_packing_radius(4).unwrap();
        assert!(b.cosh_r_max.lo() > 1.4619 && b.cosh_r_max.hi() < 1.4620);
        assert!(b.cosh_r_max.overlaps(&crate::bounds::cosh_rpp()));
    }

    #[test]
    fn too_few_disks() {
        assert!(max_packing_radius(1).is_err());
        assert!(max_packing_radius(0).is_err());
    }

    #[test]
    fn angle_round_trip() {
        for n in 2..=12 {
            let b = max_packing_radius(n).unwrap();
            let cos_a = equilateral_vertex_angle_cos(cosh_double(b.cosh_r_max).unwrap()).unwrap();
            assert!(cos_a.overlaps(&b.alpha_min.cos()), "n = {n}");
        }
    }

    #[test]
    fn radius_strictly_decreasing() {
        let radii: Vec<Interval> = (2..=12)
            .map(|n| max_packing_radius(n).unwrap().cosh_r_max)
            .collect();
        for w in radii.windows(2) {
            assert!(w[1].hi() < w[0].lo());
        }
        assert!(radii.iter().all(|r| r.lo() > 1.0));
    }

    #[test]
    fn constants() {
        let (d11, l1) = borbounds_constants();
        let first = Interval::point(3.0) + Interval::point(2.0) * s3();
        let second = (Interval::point(3.0) + s3()) * Interval::point(0.25);
        assert!(d11.overlaps(&first));
        assert!(l1.overlaps(&second));
        assert!(d11.contains(6.464101615137754));
        assert!(l1.lo() < 1.18302 && l1.hi() > 1.18301);
    }
}
