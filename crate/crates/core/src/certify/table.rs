use serde::Serialize;

use super::{Certificate, Claim, Cmp, Measure, Outcome, Piece};
use crate::bounds::{km_volume_with, CoshL1, Ell2Family, HProfile, QuantityId};
use crate::error::{Error, Result};
use crate::interval::Interval;

/// The volume every table row must beat.
pub const VOLUME_TARGET: &str = "6.89";

/// A published row, with values in thousandths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PrintedRow {
    pub lo: &'static str,
    pub hi: &'static str,
    pub muffin: u32,
    pub area: u32,
    pub h: u32,
    pub h_label: QuantityId,
    pub volume: u32,
}

const fn row(
    lo: &'static str,
    hi: &'static str,
    muffin: u32,
    area: u32,
    h: u32,
    h_label: QuantityId,
    volume: u32,
) -> PrintedRow {
    PrintedRow {
        lo,
        hi,
        muffin,
        area,
        h,
        h_label,
        volume,
    }
}

use QuantityId::{E, F, M};

const TABLE_EF: [PrintedRow; 18] = [
    row("1.215", "1.220", 5304, 2216, 629, E, 6899),
    row("1.220", "1.226", 5236, 2399, 611, E, 6899),
    row("1.226", "1.233", 5159, 2609, 592, E, 6900),
    row("1.233", "1.241", 5076, 2844, 574, E, 6901),
    row("1.241", "1.250", 4988, 3097, 556, E, 6901),
    row("1.250", "1.260", 4895, 3367, 539, F, 6898),
    row("1.260", "1.270", 4808, 3648, 524, F, 6908),
    row("1.270", "1.281", 4717, 3911, 510, F, 6898),
    row("1.281", "1.292", 4632, 4182, 498, F, 6900),
    row("1.292", "1.303", 4551, 4436, 488, F, 6898),
    row("1.303", "1.314", 4475, 4675, 479, F, 6894),
    row("1.314", "1.324", 4409, 4899, 471, F, 6899),
    row("1.324", "1.334", 4346, 5092, 464, F, 6891),
    row("1.334", "1.343", 4292, 5275, 459, F, 6893),
    row("1.343", "1.351", 4245, 5432, 454, F, 6894),
    row("1.351", "1.358", 4206, 5565, 451, F, 6895),
    row("1.358", "1.364", 4173, 5678, 448, F, 6896),
    row("1.364", "1.367", 4157, 5772, 447, F, 6917),
];

const TABLE_LM: [PrintedRow; 4] = [
    row("1.367", "1.377", 4105, 5818, 447, M, 6892),
    row("1.377", "1.392", 4031, 5966, 448, M, 6894),
    row("1.392", "1.416", 3920, 6176, 449, M, 6893),
    row("1.416", "1.439", 3823, 6485, 451, M, 6959),
];

/// Printed rows and the `ℓ₂` bound family used for table `id`.
pub fn table_spec(id: u8) -> Result<(&'static [PrintedRow], Ell2Family)> {
    match id {
        1 => Ok((&TABLE_EF, Ell2Family::EF)),
        2 => Ok((&TABLE_LM, Ell2Family::LM)),
        _ => Err(Error::range("verify_table", format!("no table {id}"))),
    }
}

/// A recomputed row.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableRow {
    pub printed: PrintedRow,
    pub c1_range: Interval,
    pub muffin: Interval,
    pub area: Interval,
    pub h: HProfile,
    pub volume: Interval,
    /// Columns whose recomputed lower bound misses the printed one by more
    /// than a unit in the last place.
    pub failed_columns: Vec<String>,
}

impl TableRow {
    pub fn passes(&self) -> bool {
        self.failed_columns.is_empty()
    }
}

/// `x` truncated (not rounded) to `places` decimals, as a string whose value
/// never exceeds `x`.
pub fn truncate_decimal(x: f64, places: u32) -> String {
    assert!(x.is_finite());
    let scale = 10f64.powi(places as i32);
    let render = |k: i64| {
        let neg = k < 0;
        let a = k.unsigned_abs();
        let p = 10u64.pow(places);
        let body = if places == 0 {
            format!("{a}")
        } else {
            format!("{}.{:0w$}", a / p, a % p, w = places as usize)
        };
        if neg {
            format!("-{body}")
        } else {
            body
        }
    };
    // value(k) <= x, decided exactly through the decimal enclosure
    let fits = |k: i64| {
        let d = Interval::from_decimal(&render(k)).expect("rendered decimal");
        d.hi() <= x
    };
    let mut k = (x * scale).floor() as i64;
    while !fits(k) {
        k -= 1;
    }
    while fits(k + 1) {
        k += 1;
    }
    render(k)
}

fn thousandths(v: u32) -> String {
    format!("{}.{:03}", v / 1000, v % 1000)
}

/// Recomputes every row of table `id` (1: `E`/`F` bounds, 2: `L`/`M`
/// bounds) and checks each column against the printed value less `0.001`,
/// and each volume against [`VOLUME_TARGET`].
pub fn verify_table(id: u8) -> Result<(Vec<TableRow>, Certificate)> {
    let (rows, family) = table_spec(id)?;
    let measures = [
        ("muffin", Measure::Muffin),
        ("area", Measure::Area),
        ("H", Measure::Height(family)),
        ("volume", Measure::KmVolume(family)),
    ];
    let mut out = Vec::with_capacity(rows.len());
    let mut pieces = Vec::new();
    for printed in rows {
        let c1 = CoshL1::from_decimals(printed.lo, printed.hi)?;
        let c = c1.interval();
        let km = km_volume_with(&c1, family)?;
        let values = [km.muffin, km.area, km.profile.h, km.volume];
        let printed_vals = [printed.muffin, printed.area, printed.h, printed.volume];
        let mut failed = Vec::new();
        for ((name, m), (v, p)) in measures.iter().zip(values.iter().zip(printed_vals)) {
            let claim = Claim::new(*m, Cmp::Ge, thousandths(p.saturating_sub(1)));
            if claim.check.judge(*v)? != Outcome::Holds {
                failed.push(name.to_string());
            }
            pieces.push(Piece::new(c, Some(*v), &claim));
        }
        let target = Claim::new(Measure::KmVolume(family), Cmp::Gt, VOLUME_TARGET);
        if target.check.judge(km.volume)? != Outcome::Holds {
            failed.push(format!("volume > {VOLUME_TARGET}"));
        }
        pieces.push(Piece::new(c, Some(km.volume), &target));
        out.push(TableRow {
            printed: *printed,
            c1_range: c,
            muffin: km.muffin,
            area: km.area,
            h: km.profile,
            volume: km.volume,
            failed_columns: failed,
        });
    }
    let cert = Certificate::assemble(
        &format!("table{id}"),
        &[("table", id.to_string())],
        0,
        pieces,
    )?;
    Ok((out, cert))
}
