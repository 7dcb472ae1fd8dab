use rayon::prelude::*;

use super::{Certificate, Claim, Cmp, Measure, Outcome, Piece};
use crate::bounds::{cosh_l1_floor, Ell2Family};
use crate::error::{Error, Result};
use crate::interval::Interval;

pub const DEFAULT_MAX_DEPTH: u32 = 40;

/// Leaves of a bisection cover of `domain`, sorted by left endpoint.
///
/// Each level is evaluated in parallel. Pieces whose claim is undecided are
/// split until `max_depth`; once any piece fails, refinement stops.
pub fn cover(claim: &Claim, domain: Interval, max_depth: u32) -> (Vec<Piece>, u32) {
    let mut frontier = vec![domain];
    let mut leaves: Vec<(Interval, Piece)> = Vec::new();
    let mut depth = 0;
    loop {
        let evaluated: Vec<(Interval, Option<Interval>, Outcome)> = frontier
            .par_iter()
            .map(|&d| {
                let (b, o) = claim.test(d);
                (d, b, o)
            })
            .collect();
        let failed = evaluated.iter().any(|e| e.2 == Outcome::Fails);
        let mut next = Vec::new();
        for (d, b, o) in evaluated {
            let splittable = o == Outcome::Unknown && depth < max_depth && !failed;
            let (l, r) = d.bisect();
            if splittable && l != d && r != d {
                next.push(l);
                next.push(r);
            } else {
                leaves.push((d, Piece::new(d, b, claim)));
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
        depth += 1;
    }
    leaves.sort_by(|a, b| a.0.lo().total_cmp(&b.0.lo()));
    (leaves.into_iter().map(|(_, p)| p).collect(), depth)
}

/// Certifies that the volume bound exceeds `target` for every `cosh ℓ₁` in
/// `[lo, hi]`. Arguments are decimal literals; the window is enclosed outward
/// and the target compared against its upper enclosure.
pub fn certify_window(target: &str, lo: &str, hi: &str, max_depth: u32) -> Result<Certificate> {
    let a = Interval::from_decimal(lo)?;
    let b = Interval::from_decimal(hi)?;
    Interval::from_decimal(target)?;
    if a.lo() < cosh_l1_floor().lo() {
        return Err(Error::range(
            "certify_window",
            format!("window start {lo} lies below the genus-2 floor"),
        ));
    }
    let domain = Interval::new(a.lo(), b.hi())?;
    let claim = Claim::new(Measure::KmVolume(Ell2Family::Auto), Cmp::Gt, target);
    let (pieces, depth) = cover(&claim, domain, max_depth);
    Certificate::assemble(
        "volume_window",
        &[
            ("target", target.to_string()),
            ("lo", lo.to_string()),
            ("hi", hi.to_string()),
            ("max_depth", max_depth.to_string()),
        ],
        depth,
        pieces,
    )
}

#[cfg(test)]
mod tests {
    use super::super::Status;
    use super::*;

    #[test]
    fn narrow_window_single_piece() {
        let c = certify_window("6.89", "1.3", "1.31", 40).unwrap();
        assert_eq!(c.status, Status::Certified);
        assert_eq!(c.pieces.len(), 1);
        assert_eq!(c.depth_used, 0);
    }

    #[test]
    fn too_high_target_is_not_certified() {
        let c = certify_window("7.2", "1.3", "1.31", 10).unwrap();
        assert_eq!(c.status, Status::Falsified);
    }

    #[test]
    fn depth_limit_is_inconclusive() {
        let c = certify_window("6.89", "1.215", "1.439", 1).unwrap();
        assert_eq!(c.status, Status::Inconclusive);
        assert!(c.pieces.len() <= 2);
    }

    #[test]
    fn below_floor_rejected() {
        assert!(certify_window("6.89", "1.1", "1.2", 10).is_err());
        assert!(certify_window("x", "1.2", "1.3", 10).is_err());
    }

    #[test]
    fn pieces_cover_the_window() {
        let c = certify_window("6.89", "1.215", "1.3", 40).unwrap();
        assert_eq!(c.status, Status::Certified);
        let doms: Vec<Interval> = c.pieces.iter().map(|p| p.domain().unwrap()).collect();
        assert_eq!(doms[0].lo(), Interval::from_decimal("1.215").unwrap().lo());
        assert_eq!(
            doms.last().unwrap().hi(),
            Interval::from_decimal("1.3").unwrap().hi()
        );
        for w in doms.windows(2) {
            assert_eq!(w[0].hi(), w[1].lo());
        }
    }
}
