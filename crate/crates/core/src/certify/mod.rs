//! Verdicts built from the bounds: table re-derivation, the volume window,
//! the tail argument and the auxiliary inequalities, each with a replayable
//! certificate.

mod cover;
mod lemma;
mod measure;
mod table;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::interval::{precision, Interval};

pub use cover::{certify_window, cover, DEFAULT_MAX_DEPTH};
pub use lemma::{
    certify_lemma, certify_tail, Conjunct, LemmaId, LemmaOptions, LemmaReport, Witness,
};
pub use measure::{Check, Claim, Cmp, Measure, Outcome};
pub use table::{table_spec, truncate_decimal, verify_table, PrintedRow, TableRow, VOLUME_TARGET};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Certified,
    Falsified,
    Inconclusive,
}

impl Status {
    /// Certified only if all are; any falsified wins over inconclusive.
    pub fn combine(statuses: impl IntoIterator<Item = Status>) -> Status {
        let mut out = Status::Certified;
        for s in statuses {
            match s {
                Status::Falsified => return Status::Falsified,
                Status::Inconclusive => out = Status::Inconclusive,
                Status::Certified => {}
            }
        }
        out
    }

    pub fn from_outcomes(outcomes: impl IntoIterator<Item = Outcome>) -> Status {
        Status::combine(outcomes.into_iter().map(|o| match o {
            Outcome::Holds => Status::Certified,
            Outcome::Fails => Status::Falsified,
            Outcome::Unknown => Status::Inconclusive,
        }))
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Certified => "certified",
            Status::Falsified => "falsified",
            Status::Inconclusive => "inconclusive",
        }
    }
}

/// One subinterval with the enclosure found there. Endpoints are the
/// shortest decimal strings that read back to the exact machine numbers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Piece {
    pub lo: String,
    pub hi: String,
    pub bound_lo: String,
    pub bound_hi: String,
    /// The claim, as `measure:op:threshold`.
    pub kind: String,
}

impl Piece {
    pub fn new(domain: Interval, bound: Option<Interval>, claim: &Claim) -> Self {
        let (bl, bh) = match bound {
            Some(b) => (b.lo().to_string(), b.hi().to_string()),
            None => ("-inf".to_string(), "inf".to_string()),
        };
        Piece {
            lo: domain.lo().to_string(),
            hi: domain.hi().to_string(),
            bound_lo: bl,
            bound_hi: bh,
            kind: claim.to_string(),
        }
    }

    pub fn domain(&self) -> Result<Interval> {
        let lo = parse_f64(&self.lo)?;
        let hi = parse_f64(&self.hi)?;
        Interval::new(lo, hi).map_err(|e| Error::Certificate(e.to_string()))
    }

    /// The recorded enclosure, or `None` where evaluation failed.
    pub fn bound(&self) -> Result<Option<Interval>> {
        let lo = parse_f64(&self.bound_lo)?;
        let hi = parse_f64(&self.bound_hi)?;
        if lo.is_infinite() || hi.is_infinite() {
            return Ok(None);
        }
        Ok(Some(
            Interval::new(lo, hi).map_err(|e| Error::Certificate(e.to_string()))?,
        ))
    }

    pub fn claim(&self) -> Result<Claim> {
        self.kind.parse()
    }

    pub fn outcome(&self) -> Result<Outcome> {
        match self.bound()? {
            Some(b) => self.claim()?.check.judge(b),
            None => Ok(Outcome::Unknown),
        }
    }
}

fn parse_f64(s: &str) -> Result<f64> {
    s.parse::<f64>()
        .map_err(|_| Error::Certificate(format!("bad number {s:?}")))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub claim_id: String,
    pub config_digest: String,
    pub status: Status,
    pub depth_used: u32,
    pub pieces: Vec<Piece>,
}

impl Certificate {
    pub(crate) fn assemble(
        claim_id: &str,
        params: &[(&str, String)],
        depth_used: u32,
        pieces: Vec<Piece>,
    ) -> Result<Certificate> {
        let outcomes = pieces
            .iter()
            .map(Piece::outcome)
            .collect::<Result<Vec<_>>>()?;
        Ok(Certificate {
            claim_id: claim_id.to_string(),
            config_digest: config_digest(claim_id, params),
            status: Status::from_outcomes(outcomes),
            depth_used,
            pieces,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(s: &str) -> Result<Certificate> {
        serde_json::from_str(s).map_err(|e| Error::Certificate(e.to_string()))
    }
}

/// Digest of everything that determines a certificate's contents.
pub fn config_digest(claim_id: &str, params: &[(&str, String)]) -> String {
    let p = precision();
    let mut map: BTreeMap<&str, String> = params.iter().cloned().collect();
    map.insert("claim_id", claim_id.to_string());
    map.insert("clamp_tol", p.clamp_tol.to_string());
    map.insert("slack_steps", p.slack_steps.to_string());
    map.insert("version", env!("CARGO_PKG_VERSION").to_string());
    let bytes = serde_json::to_vec(&map).expect("map serializes");
    hex::encode(Sha256::digest(bytes))
}

/// Re-evaluates every piece from its domain and claim alone.
///
/// Fails if a recomputed enclosure differs from the recorded one; otherwise
/// returns the status the pieces now support.
pub fn replay(cert: &Certificate) -> Result<Status> {
    let mut outcomes = Vec::with_capacity(cert.pieces.len());
    for (i, piece) in cert.pieces.iter().enumerate() {
        let claim = piece.claim()?;
        let (bound, outcome) = claim.test(piece.domain()?);
        if bound != piece.bound()? {
            return Err(Error::Certificate(format!(
                "piece {i} ({}) recomputes to a different enclosure",
                piece.kind
            )));
        }
        outcomes.push(outcome);
    }
    Ok(Status::from_outcomes(outcomes))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combine_statuses() {
        use Status::*;
        assert_eq!(Status::combine([Certified, Certified]), Certified);
        assert_eq!(Status::combine([Certified, Inconclusive]), Inconclusive);
        assert_eq!(Status::combine([Inconclusive, Falsified]), Falsified);
        assert_eq!(Status::combine([]), Certified);
    }

    #[test]
    fn piece_round_trip() {
        let claim = Claim::new(Measure::CoshR, Cmp::Lt, "2");
        let d = Interval::from_decimal("1.439").unwrap();
        let (b, o) = claim.test(d);
        assert_eq!(o, Outcome::Holds);
        let p = Piece::new(d, b, &claim);
        assert_eq!(p.domain().unwrap(), d);
        assert_eq!(p.bound().unwrap(), b);
        assert_eq!(p.outcome().unwrap(), Outcome::Holds);
        let missing = Piece::new(d, None, &claim);
        assert_eq!(missing.bound().unwrap(), None);
        assert_eq!(missing.outcome().unwrap(), Outcome::Unknown);
    }

    #[test]
    fn digest_depends_on_params() {
        let a = config_digest("x", &[("max_depth", "40".into())]);
        let b = config_digest("x", &[("max_depth", "41".into())]);
        assert_ne!(a, b);
        assert_eq!(a.len(), 64);
        assert_eq!(a, config_digest("x", &[("max_depth", "40".into())]));
    }

    #[test]
    fn replay_detects_tampering() {
        let claim = Claim::new(Measure::CoshR, Cmp::Lt, "2");
        let d = Interval::from_decimal("1.439").unwrap();
        let (b, _) = claim.test(d);
        let mut cert = Certificate::assemble("t", &[], 0, vec![Piece::new(d, b, &claim)]).unwrap();
        assert_eq!(cert.status, Status::Certified);
        assert_eq!(replay(&cert).unwrap(), Status::Certified);
        cert.pieces[0].bound_hi = "1.9".into();
        assert!(replay(&cert).is_err());
        cert.pieces[0].kind = "bogus:lt:2".into();
        assert!(replay(&cert).is_err());
    }
}
