use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::cover::{certify_window, cover, DEFAULT_MAX_DEPTH};
use super::table::{verify_table, VOLUME_TARGET};
use super::{Certificate, Check, Claim, Cmp, Measure, Outcome, Piece, Status};
use crate::bounds::{cosh_l1_floor, cosh_rpp, formula, lm_threshold, range_enclosure, QuantityId};
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::packing::{borbounds_constants, boroczky_min_angle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LemmaId {
    /// Packing constants: largest `cosh d₁₁`, smallest `cosh ℓ₁`.
    #[serde(rename = "borbounds")]
    PackingConstants,
    /// `E` decreases in `ℓ₁` up to `cosh ℓ₁ = 1.4`.
    #[serde(rename = "monotoneE")]
    EDecreasing,
    #[serde(rename = "table1")]
    Table1,
    #[serde(rename = "table2")]
    Table2,
    /// For `cosh ℓ₁ <= 1.215`, both `ℓ₁` and `A` are below `ℓ₂/2`.
    #[serde(rename = "l2twicel1")]
    SecondReturnLong,
    /// For `cosh ℓ₁ <= 1.215`, a right-angled hexagon with sides `ℓ₁, ℓ₁, 2ℓ₁`
    /// would violate the packing bound on `d₁₁`.
    #[serde(rename = "no111")]
    NoShortHexagon,
    /// The `cosh ℓ₁` at which the disk radius equals the four-disk radius.
    #[serde(rename = "uniquel1_threshold")]
    UniqueShortestThreshold,
    /// `2 acosh(cosh d / cosh(d/2)) > d` on the admissible range of `d`.
    #[serde(rename = "noboundarycross")]
    NoBoundaryCross,
    /// The volume of muffin plus half-`ℓ₁` collar increases from 1.439 on.
    #[serde(rename = "tail_monotone")]
    TailMonotone,
    /// Volume bound above 6.89 over `cosh ℓ₁ ∈ [1.215, 1.439]`.
    #[serde(rename = "theorem_6_89_window")]
    VolumeWindow,
}

impl LemmaId {
    pub const ALL: [LemmaId; 10] = [
        LemmaId::PackingConstants,
        LemmaId::EDecreasing,
        LemmaId::Table1,
        LemmaId::Table2,
        LemmaId::SecondReturnLong,
        LemmaId::NoShortHexagon,
        LemmaId::UniqueShortestThreshold,
        LemmaId::NoBoundaryCross,
        LemmaId::TailMonotone,
        LemmaId::VolumeWindow,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            LemmaId::PackingConstants => "borbounds",
            LemmaId::EDecreasing => "monotoneE",
            LemmaId::Table1 => "table1",
            LemmaId::Table2 => "table2",
            LemmaId::SecondReturnLong => "l2twicel1",
            LemmaId::NoShortHexagon => "no111",
            LemmaId::UniqueShortestThreshold => "uniquel1_threshold",
            LemmaId::NoBoundaryCross => "noboundarycross",
            LemmaId::TailMonotone => "tail_monotone",
            LemmaId::VolumeWindow => "theorem_6_89_window",
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LemmaId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        LemmaId::ALL
            .iter()
            .find(|l| l.as_str() == s)
            .copied()
            .ok_or_else(|| Error::range("lemma id", format!("unknown lemma {s:?}")))
    }
}

/// A named interval evaluation, optionally with a check it must pass.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub name: String,
    pub value: Interval,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub check: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub status: Option<Status>,
}

impl Witness {
    pub fn info(name: impl Into<String>, value: Interval) -> Self {
        Witness {
            name: name.into(),
            value,
            check: None,
            status: None,
        }
    }

    pub fn checked(name: impl Into<String>, value: Interval, check: Check) -> Result<Self> {
        let status = match check.judge(value)? {
            Outcome::Holds => Status::Certified,
            Outcome::Fails => Status::Falsified,
            Outcome::Unknown => Status::Inconclusive,
        };
        Ok(Witness {
            name: name.into(),
            value,
            check: Some(check.to_string()),
            status: Some(status),
        })
    }
}

/// One sub-claim of a lemma and how it fared.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conjunct {
    pub name: String,
    pub claim: String,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub lemma_id: LemmaId,
    pub verdict: Status,
    pub conjuncts: Vec<Conjunct>,
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
}

impl LemmaReport {
    pub fn witness(&self, name: &str) -> Option<&Witness> {
        self.witnesses.iter().find(|w| w.name == name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaOptions {
    pub max_depth: u32,
    /// Lower end of the `cosh d` range for the boundary-crossing check.
    pub boundary_cross_lo: String,
    /// Upper end of the explicit sweep in the tail argument.
    pub tail_sweep_hi: String,
}

impl Default for LemmaOptions {
    fn default() -> Self {
        LemmaOptions {
            max_depth: DEFAULT_MAX_DEPTH,
            boundary_cross_lo: "1.001".to_string(),
            tail_sweep_hi: "1e6".to_string(),
        }
    }
}

struct Builder {
    id: LemmaId,
    max_depth: u32,
    depth_used: u32,
    pieces: Vec<Piece>,
    conjuncts: Vec<Conjunct>,
    witnesses: Vec<Witness>,
}

impl Builder {
    fn new(id: LemmaId, max_depth: u32) -> Self {
        Builder {
            id,
            max_depth,
            depth_used: 0,
            pieces: Vec::new(),
            conjuncts: Vec::new(),
            witnesses: Vec::new(),
        }
    }

    /// Covers `domain` by bisection until `claim` is decided on every piece.
    fn prove(&mut self, name: &str, claim: Claim, domain: Interval) -> Result<()> {
        let (pieces, depth) = cover(&claim, domain, self.max_depth);
        let outcomes = pieces
            .iter()
            .map(Piece::outcome)
            .collect::<Result<Vec<_>>>()?;
        self.depth_used = self.depth_used.max(depth);
        self.conjuncts.push(Conjunct {
            name: name.to_string(),
            claim: claim.to_string(),
            status: Status::from_outcomes(outcomes),
        });
        self.pieces.extend(pieces);
        Ok(())
    }

    fn witness(&mut self, w: Witness) {
        self.witnesses.push(w);
    }

    fn check(&mut self, name: &str, value: Interval, cmp: Cmp, threshold: &str) -> Result<()> {
        self.witnesses
            .push(Witness::checked(name, value, Check::new(cmp, threshold))?);
        Ok(())
    }

    fn finish(self, params: &[(&str, String)]) -> Result<LemmaReport> {
        let certificate = if self.pieces.is_empty() {
            None
        } else {
            let mut p = params.to_vec();
            p.push(("max_depth", self.max_depth.to_string()));
            Some(Certificate::assemble(
                self.id.as_str(),
                &p,
                self.depth_used,
                self.pieces,
            )?)
        };
        let verdict = Status::combine(
            self.conjuncts
                .iter()
                .map(|c| c.status)
                .chain(self.witnesses.iter().filter_map(|w| w.status)),
        );
        Ok(LemmaReport {
            lemma_id: self.id,
            verdict,
            conjuncts: self.conjuncts,
            witnesses: self.witnesses,
            certificate,
        })
    }
}

fn dec(s: &str) -> Result<Interval> {
    Interval::from_decimal(s)
}

fn span(lo: Interval, hi: Interval) -> Result<Interval> {
    Interval::new(lo.lo(), hi.hi())
}

pub fn certify_lemma(id: LemmaId, opts: &LemmaOptions) -> Result<LemmaReport> {
    match id {
        LemmaId::PackingConstants => packing_constants(),
        LemmaId::EDecreasing => e_decreasing(opts),
        LemmaId::Table1 | LemmaId::Table2 => {
            let n = if id == LemmaId::Table1 { 1 } else { 2 };
            let (rows, cert) = verify_table(n)?;
            let conjuncts = rows
                .iter()
                .map(|r| Conjunct {
                    name: format!("[{},{}]", r.printed.lo, r.printed.hi),
                    claim: if r.passes() {
                        "all columns".to_string()
                    } else {
                        format!("failed: {}", r.failed_columns.join(", "))
                    },
                    status: if r.passes() {
                        Status::Certified
                    } else {
                        Status::Falsified
                    },
                })
                .collect();
            let witnesses = rows
                .iter()
                .map(|r| {
                    Witness::info(
                        format!("volume[{},{}]", r.printed.lo, r.printed.hi),
                        r.volume,
                    )
                })
                .collect();
            Ok(LemmaReport {
                lemma_id: id,
                verdict: cert.status,
                conjuncts,
                witnesses,
                certificate: Some(cert),
            })
        }
        LemmaId::SecondReturnLong => second_return_long(opts),
        LemmaId::NoShortHexagon => no_short_hexagon(opts),
        LemmaId::UniqueShortestThreshold => unique_shortest_threshold(),
        LemmaId::NoBoundaryCross => no_boundary_cross(opts),
        LemmaId::TailMonotone => certify_tail(opts),
        LemmaId::VolumeWindow => {
            let cert = certify_window(VOLUME_TARGET, "1.215", "1.439", opts.max_depth)?;
            let min = cert
                .pieces
                .iter()
                .filter_map(|p| p.bound().ok().flatten())
                .map(|b| b.lo())
                .fold(f64::INFINITY, f64::min);
            let mut witnesses = vec![Witness::info(
                "leaf_count",
                Interval::point(cert.pieces.len() as f64),
            )];
            if min.is_finite() {
                witnesses.push(Witness::info("min_leaf_bound", Interval::point(min)));
            }
            Ok(LemmaReport {
                lemma_id: id,
                verdict: cert.status,
                conjuncts: vec![Conjunct {
                    name: "window".to_string(),
                    claim: format!("km_volume:gt:{VOLUME_TARGET} on [1.215,1.439]"),
                    status: cert.status,
                }],
                witnesses,
                certificate: Some(cert),
            })
        }
    }
}

fn packing_constants() -> Result<LemmaReport> {
    let mut b = Builder::new(LemmaId::PackingConstants, 0);
    let (d11, l1) = borbounds_constants();
    b.check("max_cosh_d11", d11, Cmp::In, "[6.4641,6.4642]")?;
    b.check("min_cosh_l1", l1, Cmp::In, "[1.18301,1.18302]")?;
    b.check(
        "cosh_r_at_min_cosh_l1",
        formula::cosh_r(l1)?,
        Cmp::In,
        "[1.93185,1.93186]",
    )?;
    b.check(
        "min_angle_two_disks",
        boroczky_min_angle(2),
        Cmp::In,
        "[0.5235987,0.5235988]",
    )?;
    b.finish(&[])
}

fn e_decreasing(opts: &LemmaOptions) -> Result<LemmaReport> {
    let mut b = Builder::new(LemmaId::EDecreasing, opts.max_depth);
    let domain = span(cosh_l1_floor(), dec("1.4")?)?;
    b.prove(
        "dE/dc < 0",
        Claim::new(Measure::DCoshE, Cmp::Lt, "0"),
        domain,
    )?;
    let floor = Interval::point(domain.lo());
    b.witness(Witness::info(
        "d_cosh_e_at_floor",
        Measure::DCoshE.eval(floor)?,
    ));
    b.witness(Witness::info(
        "d_cosh_e_at_1.4",
        Measure::DCoshE.eval(dec("1.4")?)?,
    ));
    b.witness(Witness::info(
        "cosh_r_over_range",
        range_enclosure(QuantityId::R, domain)?,
    ));
    b.finish(&[])
}

fn second_return_long(opts: &LemmaOptions) -> Result<LemmaReport> {
    let mut b = Builder::new(LemmaId::SecondReturnLong, opts.max_depth);
    let top = dec("1.215")?;
    let domain = span(cosh_l1_floor(), top)?;
    b.prove(
        "E decreasing",
        Claim::new(Measure::DCoshE, Cmp::Lt, "0"),
        domain,
    )?;
    b.prove(
        "ell2 >= 2 ell1",
        Claim::new(Measure::Ell2MinusTwiceEll1, Cmp::Gt, "0"),
        domain,
    )?;
    b.prove(
        "ell2/2 >= A",
        Claim::new(Measure::HalfEll2MinusA, Cmp::Gt, "0"),
        domain,
    )?;
    b.check("cosh_e_lower", formula::cosh_e(top)?, Cmp::Ge, "1.961")?;
    b.check(
        "cosh_f_lower",
        Measure::CoshFCorner.eval(domain)?,
        Cmp::Ge,
        "1.960",
    )?;
    b.check(
        "ell2_lower",
        Measure::Ell2LowerEF.eval(domain)?,
        Cmp::Ge,
        "1.293",
    )?;
    b.check("ell1_upper", top.acosh()?, Cmp::Le, "0.645")?;
    b.witness(Witness::info(
        "a_upper",
        range_enclosure(QuantityId::A, top)?,
    ));
    b.finish(&[])
}

fn no_short_hexagon(opts: &LemmaOptions) -> Result<LemmaReport> {
    let mut b = Builder::new(LemmaId::NoShortHexagon, opts.max_depth);
    let (d11, _) = borbounds_constants();
    // cosh d₁₁ >= 3 + 2/sinh²ℓ₁ and cosh d₁₁ <= 3 + 2√3 give sinh²ℓ₁ >= 1/√3.
    let s3 = Interval::point(3.0).sqrt()?;
    let lower = (Interval::ONE + s3.recip()?).sqrt()?;
    b.check("cosh_l1_lower", lower, Cmp::Gt, "1.255")?;
    b.witness(Witness::info("max_cosh_d11", d11));
    let domain = span(cosh_l1_floor(), dec("1.215")?)?;
    b.prove(
        "hexagon exceeds packing bound",
        Claim::new(Measure::HexagonD11, Cmp::Gt, d11.hi().to_string()),
        domain,
    )?;
    b.finish(&[])
}

fn unique_shortest_threshold() -> Result<LemmaReport> {
    let mut b = Builder::new(LemmaId::UniqueShortestThreshold, 0);
    let rpp = cosh_rpp();
    b.check("cosh_rpp", rpp, Cmp::In, "[1.4619,1.4620]")?;
    let solved = formula::cosh_l1_from_cosh_r(rpp)?;
    b.check("cosh_l1_threshold", solved, Cmp::In, "[1.4396,1.4397]")?;
    let closed = lm_threshold();
    b.check("closed_form", closed, Cmp::In, "[1.4396,1.4397]")?;
    let agree = solved.intersect(&closed).is_some();
    b.witness(Witness {
        name: "forms_agree".to_string(),
        value: solved.hull(&closed),
        check: Some("overlap".to_string()),
        status: Some(if agree {
            Status::Certified
        } else {
            Status::Falsified
        }),
    });
    b.finish(&[])
}

fn no_boundary_cross(opts: &LemmaOptions) -> Result<LemmaReport> {
    let mut b = Builder::new(LemmaId::NoBoundaryCross, opts.max_depth);
    let (d11, _) = borbounds_constants();
    let lo = dec(&opts.boundary_cross_lo)?;
    if lo.lo() < 1.0 || lo.hi() > d11.lo() {
        return Err(Error::range(
            "noboundarycross",
            format!("lower end {} outside [1, 3 + 2√3)", opts.boundary_cross_lo),
        ));
    }
    let domain = Interval::new(lo.lo(), d11.hi())?;
    b.prove(
        "gap positive",
        Claim::new(Measure::BoundaryGap, Cmp::Gt, "0"),
        domain,
    )?;
    b.check("gap_at_max", Measure::BoundaryGap.eval(d11)?, Cmp::Gt, "0")?;
    b.finish(&[("lo", opts.boundary_cross_lo.clone())])
}

/// Certifies that past `cosh ℓ₁ = 1.439` the muffin with the half-`ℓ₁`
/// collar already has volume above 6.89 and only grows.
///
/// The five conjuncts are checked on enclosures at 1.439 and, for the sign
/// conditions, over an explicit sweep to `tail_sweep_hi`. Beyond the sweep
/// they hold by inspection: `cosh R > 1` makes `dQ < -c`, and
/// `d(cosh R)/dℓ₁` is a negative quantity over a positive one.
pub fn certify_tail(opts: &LemmaOptions) -> Result<LemmaReport> {
    let mut b = Builder::new(LemmaId::TailMonotone, opts.max_depth);
    let start = dec("1.439")?;
    let sweep = span(start, dec(&opts.tail_sweep_hi)?)?;
    b.prove(
        "(a) V(1.439) > 6.89",
        Claim::new(Measure::VCombined, Cmp::Gt, VOLUME_TARGET),
        start,
    )?;
    b.prove(
        "(b) Q(1.439) < 0",
        Claim::new(Measure::Q, Cmp::Lt, "0"),
        start,
    )?;
    b.prove("(c) dQ < 0", Claim::new(Measure::DQ, Cmp::Lt, "0"), sweep)?;
    b.prove(
        "(d) d cosh R < 0",
        Claim::new(Measure::DCoshR, Cmp::Lt, "0"),
        sweep,
    )?;
    b.prove(
        "(e) cosh R(1.439) < 2",
        Claim::new(Measure::CoshR, Cmp::Lt, "2"),
        start,
    )?;
    b.prove("V' > 0", Claim::new(Measure::DV, Cmp::Gt, "0"), sweep)?;
    b.check(
        "v_at_1.439",
        Measure::VCombined.eval(start)?,
        Cmp::Gt,
        "7.0",
    )?;
    b.check(
        "cosh_r_at_1.439",
        Measure::CoshR.eval(start)?,
        Cmp::In,
        "[1.4,1.5]",
    )?;
    b.witness(Witness::info("q_at_1.439", Measure::Q.eval(start)?));
    b.witness(Witness::info("dv_at_1.439", Measure::DV.eval(start)?));
    b.finish(&[("sweep_hi", opts.tail_sweep_hi.clone())])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::replay;

    fn run(id: LemmaId) -> LemmaReport {
        certify_lemma(id, &LemmaOptions::default()).unwrap()
    }

    #[test]
    fn ids_round_trip() {
        for id in LemmaId::ALL {
            assert_eq!(id.as_str().parse::<LemmaId>().unwrap(), id);
            let js = serde_json::to_string(&id).unwrap();
            assert_eq!(js, format!("\"{}\"", id.as_str()));
        }
        assert!("nope".parse::<LemmaId>().is_err());
    }

    #[test]
    fn cheap_lemmas_certify() {
        for id in [
            LemmaId::PackingConstants,
            LemmaId::UniqueShortestThreshold,
            LemmaId::NoShortHexagon,
            LemmaId::SecondReturnLong,
            LemmaId::EDecreasing,
        ] {
            let r = run(id);
            assert_eq!(r.verdict, Status::Certified, "{id}: {r:#?}");
            if let Some(c) = &r.certificate {
                assert_eq!(replay(c).unwrap(), Status::Certified);
            }
        }
    }

    #[test]
    fn tail_conjuncts() {
        let r = run(LemmaId::TailMonotone);
        assert_eq!(r.verdict, Status::Certified, "{r:#?}");
        assert_eq!(r.conjuncts.len(), 6);
        assert!(r.witness("v_at_1.439").unwrap().value.lo() > 7.0);
    }

    #[test]
    fn boundary_cross_range_is_validated() {
        let opts = LemmaOptions {
            boundary_cross_lo: "0.5".into(),
            ..LemmaOptions::default()
        };
        assert!(certify_lemma(LemmaId::NoBoundaryCross, &opts).is_err());
        let r = run(LemmaId::NoBoundaryCross);
        assert_eq!(r.verdict, Status::Certified);
    }
}
