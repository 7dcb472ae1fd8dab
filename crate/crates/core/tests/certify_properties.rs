//! Certificates: refinement, replay, serialization, and soundness spot checks.

use hypvol_core::bounds::{self, km_volume_with};
use hypvol_core::certify::{
    certify_lemma, certify_tail, certify_window, cover, replay, table_spec, verify_table,
    Certificate, Claim, Cmp, LemmaId, LemmaOptions, Measure, Status,
};
use hypvol_core::{CoshL1, Ell2Family, Interval};
use hypvol_oracle::Oracle;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};

fn window() -> Certificate {
    certify_window("6.89", "1.215", "1.439", 40).unwrap()
}

#[test]
fn window_certificate_is_contiguous_and_replays() {
    let c = window();
    assert_eq!(c.status, Status::Certified);
    assert!(c.pieces.len() <= 10_000);
    let doms: Vec<Interval> = c.pieces.iter().map(|p| p.domain().unwrap()).collect();
    for w in doms.windows(2) {
        assert_eq!(w[0].hi(), w[1].lo());
    }
    assert_eq!(replay(&c).unwrap(), Status::Certified);
    let back = Certificate::from_json(&c.to_json()).unwrap();
    assert_eq!(back, c);
    assert_eq!(back.to_json(), c.to_json());
}

#[test]
fn tampered_certificate_fails_replay() {
    let mut c = window();
    c.pieces[0].bound_lo = "7.5".to_string();
    assert!(replay(&c).is_err());

    let mut c = window();
    c.pieces.pop();
    // Dropping a piece leaves the remaining ones valid; the digest still
    // names the original window, which is what consumers should compare.
    assert_eq!(replay(&c).unwrap(), Status::Certified);
}

#[test]
fn digest_depends_on_parameters() {
    let a = certify_window("6.89", "1.215", "1.439", 40).unwrap();
    let b = certify_window("6.89", "1.215", "1.439", 39).unwrap();
    let c = certify_window("6.88", "1.215", "1.439", 40).unwrap();
    assert_ne!(a.config_digest, b.config_digest);
    assert_ne!(a.config_digest, c.config_digest);
    assert_eq!(a.config_digest, window().config_digest);
}

#[test]
fn window_is_sound_at_sampled_points() {
    let c = window();
    let mut o = Oracle::default();
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    let threshold = bounds::lm_threshold().lo();
    for _ in 0..1000 {
        let p = &c.pieces[rng.gen_range(0..c.pieces.len())];
        let d = p.domain().unwrap();
        let x = rng.gen_range(d.lo()..=d.hi());
        let v = o.km_volume(&o.num(x), true, x <= threshold);
        let b = p.bound().unwrap().unwrap();
        assert!(o.to_f64(&v) > 6.89, "volume at {x}");
        assert!(
            o.contains(Interval::new(b.lo(), f64::MAX).unwrap(), &v),
            "{x}: {b}"
        );
    }
}

#[test]
fn tables_agree_with_window() {
    let c = window();
    let doms: Vec<(Interval, Interval)> = c
        .pieces
        .iter()
        .map(|p| (p.domain().unwrap(), p.bound().unwrap().unwrap()))
        .collect();
    for (id, family) in [(1, Ell2Family::EF), (2, Ell2Family::LM)] {
        let (rows, cert) = verify_table(id).unwrap();
        assert_eq!(cert.status, Status::Certified);
        for row in rows {
            assert!(row.volume.lo() > 6.89);
            let auto = km_volume_with(&CoshL1::unchecked(row.c1_range), Ell2Family::Auto).unwrap();
            let own = km_volume_with(&CoshL1::unchecked(row.c1_range), family).unwrap();
            assert!(auto.volume.lo() >= own.volume.lo() - 1e-12);
            // window pieces overlapping the row are inside the certified range
            for (d, b) in doms.iter().filter(|(d, _)| d.overlaps(&row.c1_range)) {
                assert!(b.lo() > 6.89, "{d}");
            }
        }
    }
    let (rows, _) = table_spec(1).unwrap();
    assert_eq!(rows[0].lo, "1.215");
    assert_eq!(table_spec(2).unwrap().0.last().unwrap().hi, "1.439");
}

#[test]
fn deeper_covers_never_lose_certification() {
    let claim = Claim::new(Measure::KmVolume(Ell2Family::Auto), Cmp::Gt, "6.89");
    let dom = Interval::new(1.215, 1.439).unwrap();
    let mut certified_at = None;
    for depth in 0..12 {
        let (pieces, _) = cover(&claim, dom, depth);
        let s = Status::from_outcomes(pieces.iter().map(|p| p.outcome().unwrap()));
        assert_ne!(s, Status::Falsified);
        if s == Status::Certified && certified_at.is_none() {
            certified_at = Some(depth);
        }
        if certified_at.is_some() {
            assert_eq!(s, Status::Certified, "depth {depth}");
        }
    }
    assert!(certified_at.is_some());
}

#[test]
fn lemmas_replay() {
    let opts = LemmaOptions::default();
    for id in LemmaId::ALL {
        let r = if id == LemmaId::TailMonotone {
            certify_tail(&opts).unwrap()
        } else {
            certify_lemma(id, &opts).unwrap()
        };
        assert_eq!(r.verdict, Status::Certified, "{}", id.as_str());
        if let Some(c) = &r.certificate {
            assert_eq!(replay(c).unwrap(), c.status, "{}", id.as_str());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn nested_domains_give_nested_bounds(lo in 1.19..1.6f64, w in 0.0..0.1f64, s in 0.0..1.0f64, v in 0.0..1.0f64) {
        let outer = Interval::new(lo, lo + w).unwrap();
        let a = (lo + w * s * (1.0 - v)).clamp(outer.lo(), outer.hi());
        let b = (lo + w * (s + v * (1.0 - s))).clamp(a, outer.hi());
        let inner = Interval::new(a, b).unwrap();
        for m in [Measure::Muffin, Measure::Area, Measure::CoshR, Measure::Q, Measure::VCombined] {
            let (x, y) = (m.eval(inner).unwrap(), m.eval(outer).unwrap());
            prop_assert!(y.encloses(&x), "{}: {x} not in {y}", m.name());
        }
        for f in [Ell2Family::EF, Ell2Family::Auto] {
            let x = km_volume_with(&CoshL1::unchecked(inner), f).unwrap().volume;
            let y = km_volume_with(&CoshL1::unchecked(outer), f).unwrap().volume;
            prop_assert!(x.lo() >= y.lo(), "{x} vs {y}");
        }
    }

    #[test]
    fn claims_round_trip(t in 0.0..10.0f64, op in 0usize..4) {
        let cmp = [Cmp::Gt, Cmp::Ge, Cmp::Lt, Cmp::Le][op];
        let claim = Claim::new(Measure::Muffin, cmp, format!("{t}"));
        let back: Claim = claim.to_string().parse().unwrap();
        prop_assert_eq!(back, claim);
    }
}
