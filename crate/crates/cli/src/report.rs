//! Rendering of reports. Every renderer is a pure function of its inputs;
//! md and csv print lower bounds truncated to three decimals, json carries
//! full endpoints.

use std::fmt::Write as _;

use hypvol_core::certify::{truncate_decimal, Certificate, LemmaReport, Outcome, Status, TableRow};
use hypvol_core::Interval;
use serde_json::json;

use crate::{Failure, Format};

type Out = Result<Vec<u8>, Failure>;

fn lower3(x: Interval) -> String {
    truncate_decimal(x.lo(), 3)
}

// `.629` for values in (0, 1), as printed in the published tables.
fn bare(s: String) -> String {
    match s.strip_prefix("0.") {
        Some(rest) => format!(".{rest}"),
        None => s,
    }
}

fn height_cell(r: &TableRow) -> String {
    let labels: Vec<&str> = r.h.active.iter().map(|q| q.label()).collect();
    format!("{} ({})", bare(lower3(r.h.h)), labels.join("/"))
}

fn pretty(v: &serde_json::Value) -> Vec<u8> {
    let mut s = serde_json::to_string_pretty(v).expect("json value");
    s.push('\n');
    s.into_bytes()
}

fn csv_bytes(header: &[&str], rows: &[Vec<String>]) -> Out {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Failure::Io(e.to_string());
    w.write_record(header).map_err(io)?;
    for r in rows {
        w.write_record(r).map_err(io)?;
    }
    w.into_inner().map_err(|e| Failure::Io(e.to_string()))
}

fn md_table(out: &mut String, header: &[&str], rows: &[Vec<String>]) {
    let _ = writeln!(out, "| {} |", header.join(" | "));
    let _ = writeln!(out, "|{}", "---|".repeat(header.len()));
    for r in rows {
        let _ = writeln!(out, "| {} |", r.join(" | "));
    }
}

pub fn table(id: u8, rows: &[TableRow], cert: &Certificate, fmt: Format) -> Out {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                format!("[{},{}]", r.printed.lo, r.printed.hi),
                lower3(r.muffin),
                lower3(r.area),
                height_cell(r),
                lower3(r.volume),
            ]
        })
        .collect();
    match fmt {
        Format::Md => {
            let mut s = String::new();
            let _ = writeln!(s, "Table {id}\n");
            md_table(
                &mut s,
                &["cosh ℓ₁", "muffin volume", "area", "H", "volume"],
                &cells,
            );
            s.push('\n');
            for r in rows.iter().filter(|r| r.h.floor_matters()) {
                let _ = writeln!(
                    s,
                    "floor [{},{}]: H without the l1/2 floor is {}",
                    r.printed.lo,
                    r.printed.hi,
                    bare(lower3(r.h.h_unfloored))
                );
            }
            for r in rows.iter().filter(|r| !r.passes()) {
                let _ = writeln!(
                    s,
                    "flagged [{},{}]: {}",
                    r.printed.lo,
                    r.printed.hi,
                    r.failed_columns.join(", ")
                );
            }
            let _ = writeln!(s, "status: {}", cert.status.as_str());
            let _ = writeln!(s, "digest: {}", cert.config_digest);
            Ok(s.into_bytes())
        }
        Format::Csv => csv_bytes(&["cosh_l1", "muffin", "area", "h", "volume"], &cells),
        Format::Json => Ok(pretty(&json!({
            "table": id,
            "status": cert.status,
            "rows": rows,
            "certificate": cert,
        }))),
    }
}

fn outcome_name(o: Outcome) -> &'static str {
    match o {
        Outcome::Holds => "holds",
        Outcome::Fails => "fails",
        Outcome::Unknown => "unknown",
    }
}

fn bound_cell(s: &str) -> String {
    match s.parse::<f64>() {
        Ok(x) if x.is_finite() => truncate_decimal(x, 3),
        _ => s.to_string(),
    }
}

pub fn certificate(cert: &Certificate, fmt: Format) -> Out {
    if fmt == Format::Json {
        let mut s = cert.to_json();
        s.push('\n');
        return Ok(s.into_bytes());
    }
    let mut cells = Vec::with_capacity(cert.pieces.len());
    for p in &cert.pieces {
        let o = p.outcome()?;
        cells.push(match fmt {
            Format::Md => vec![
                format!("[{},{}]", p.lo, p.hi),
                bound_cell(&p.bound_lo),
                outcome_name(o).to_string(),
            ],
            _ => vec![
                p.lo.clone(),
                p.hi.clone(),
                p.bound_lo.clone(),
                p.bound_hi.clone(),
                outcome_name(o).to_string(),
            ],
        });
    }
    if fmt == Format::Csv {
        return csv_bytes(&["lo", "hi", "bound_lo", "bound_hi", "outcome"], &cells);
    }
    let kind = cert.pieces.first().map(|p| p.kind.as_str()).unwrap_or("");
    let min = cert
        .pieces
        .iter()
        .filter_map(|p| p.bound().ok().flatten())
        .map(|b| b.lo())
        .fold(f64::INFINITY, f64::min);
    let mut s = String::new();
    let _ = writeln!(s, "claim: {} {}", cert.claim_id, kind);
    let _ = writeln!(s, "status: {}", cert.status.as_str());
    let _ = writeln!(s, "pieces: {}", cert.pieces.len());
    let _ = writeln!(s, "depth: {}", cert.depth_used);
    if min.is_finite() {
        let _ = writeln!(s, "min bound: {}", truncate_decimal(min, 3));
    }
    let _ = writeln!(s, "digest: {}\n", cert.config_digest);
    md_table(&mut s, &["cosh ℓ₁", "lower bound", "outcome"], &cells);
    Ok(s.into_bytes())
}

fn iv(x: Interval) -> String {
    format!("[{}, {}]", x.lo(), x.hi())
}

pub fn lemma(r: &LemmaReport, fmt: Format) -> Out {
    match fmt {
        Format::Json => Ok(pretty(
            &serde_json::to_value(r).map_err(|e| Failure::Internal(e.to_string()))?,
        )),
        Format::Csv => {
            let mut rows = Vec::new();
            for c in &r.conjuncts {
                rows.push(vec![
                    "conjunct".into(),
                    c.name.clone(),
                    c.claim.clone(),
                    String::new(),
                    c.status.as_str().into(),
                ]);
            }
            for w in &r.witnesses {
                rows.push(vec![
                    "witness".into(),
                    w.name.clone(),
                    w.check.clone().unwrap_or_default(),
                    iv(w.value),
                    w.status.map(|s| s.as_str()).unwrap_or("").into(),
                ]);
            }
            csv_bytes(&["kind", "name", "claim", "value", "status"], &rows)
        }
        Format::Md => {
            let mut s = String::new();
            let _ = writeln!(s, "lemma: {}", r.lemma_id.as_str());
            let _ = writeln!(s, "verdict: {}", r.verdict.as_str());
            if let Some(c) = &r.certificate {
                let _ = writeln!(s, "pieces: {}", c.pieces.len());
                let _ = writeln!(s, "digest: {}", c.config_digest);
            }
            if !r.conjuncts.is_empty() {
                s.push('\n');
                let rows: Vec<Vec<String>> = r
                    .conjuncts
                    .iter()
                    .map(|c| vec![c.name.clone(), c.claim.clone(), c.status.as_str().into()])
                    .collect();
                md_table(&mut s, &["conjunct", "claim", "status"], &rows);
            }
            if !r.witnesses.is_empty() {
                s.push('\n');
                let rows: Vec<Vec<String>> = r
                    .witnesses
                    .iter()
                    .map(|w| {
                        vec![
                            w.name.clone(),
                            iv(w.value),
                            w.check.clone().unwrap_or_default(),
                            w.status.map(|s| s.as_str()).unwrap_or("").into(),
                        ]
                    })
                    .collect();
                md_table(&mut s, &["witness", "value", "check", "status"], &rows);
            }
            Ok(s.into_bytes())
        }
    }
}

pub fn summary(reports: &[LemmaReport], status: Status, fmt: Format) -> Out {
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            let held = r
                .conjuncts
                .iter()
                .filter(|c| c.status == Status::Certified)
                .count();
            vec![
                r.lemma_id.as_str().to_string(),
                r.verdict.as_str().to_string(),
                format!("{held}/{}", r.conjuncts.len()),
                r.certificate
                    .as_ref()
                    .map(|c| c.pieces.len().to_string())
                    .unwrap_or_else(|| "0".into()),
            ]
        })
        .collect();
    match fmt {
        Format::Json => Ok(pretty(&json!({ "status": status, "reports": reports }))),
        Format::Csv => csv_bytes(&["check", "verdict", "conjuncts", "pieces"], &rows),
        Format::Md => {
            let mut s = String::new();
            md_table(&mut s, &["check", "verdict", "conjuncts", "pieces"], &rows);
            let _ = writeln!(s, "\nstatus: {}", status.as_str());
            Ok(s.into_bytes())
        }
    }
}

pub fn replayed(cert: &Certificate, status: Status, fmt: Format) -> Out {
    let fields = [
        ("claim_id", cert.claim_id.clone()),
        ("config_digest", cert.config_digest.clone()),
        ("recorded", cert.status.as_str().to_string()),
        ("replayed", status.as_str().to_string()),
        ("pieces", cert.pieces.len().to_string()),
    ];
    match fmt {
        Format::Json => Ok(pretty(&json!({
            "claim_id": cert.claim_id,
            "config_digest": cert.config_digest,
            "recorded": cert.status,
            "replayed": status,
            "pieces": cert.pieces.len(),
        }))),
        Format::Csv => csv_bytes(
            &fields.clone().map(|f| f.0),
            &[fields.iter().map(|f| f.1.clone()).collect()],
        ),
        Format::Md => {
            let mut s = String::new();
            for (k, v) in fields {
                let _ = writeln!(s, "{k}: {v}");
            }
            Ok(s.into_bytes())
        }
    }
}
