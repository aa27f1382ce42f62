//! Report emission: CSV/JSON/table schemas for sweep results, the SVG
//! heatmap, and hashrate-history ingestion.

use std::fmt::Write as _;

use chrono::NaiveDate;
use serde::Serialize;

use crate::energy::{fleet_power, kardashev_classify};
use crate::error::Error;
use crate::fleet::{FleetReport, MAINNET_BITS_2025};
use crate::Result;

/// Render with 6 significant digits, then through f64's shortest display so
/// 32.000000 comes out as "32" and trailing zeros drop.
pub fn sig6(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let rounded: f64 = format!("{x:.5e}").parse().expect("formatted float reparses");
    if (1e-4..1e15).contains(&rounded.abs()) {
        format!("{rounded}")
    } else {
        let s = format!("{rounded:.5e}");
        let (mantissa, exp) = s.split_once('e').expect("scientific notation has an exponent");
        let mantissa = mantissa.trim_end_matches('0').trim_end_matches('.');
        format!("{mantissa}e{exp}")
    }
}

/// One flattened sweep row; `None` numeric fields render empty (infeasible).
#[derive(Debug, Clone, Serialize)]
pub struct ReportRow {
    pub b: f64,
    pub t_cap_s: f64,
    pub pt: f64,
    pub arch: String,
    pub rung_tag: Option<String>,
    pub feasible: bool,
    pub d: Option<u64>,
    pub log10_machines: Option<f64>,
    pub log10_fleet_qubits: Option<f64>,
    pub machine_qubits: Option<f64>,
    pub runtime_s: Option<f64>,
    pub fleet_watts_log10: Option<f64>,
    pub kardashev_band: Option<String>,
}

pub fn flatten(report: &FleetReport) -> Result<ReportRow> {
    let mut row = ReportRow {
        b: report.cell.difficulty_bits_b,
        t_cap_s: report.cell.t_cap_seconds,
        pt: report.cell.target_success_pt,
        arch: report.cell.architecture.name.clone(),
        rung_tag: report.rung_tag.clone(),
        feasible: report.feasible,
        d: None,
        log10_machines: None,
        log10_fleet_qubits: None,
        machine_qubits: None,
        runtime_s: None,
        fleet_watts_log10: None,
        kardashev_band: None,
    };
    if !report.feasible {
        return Ok(row);
    }
    let machine = report.machine.as_ref().expect("feasible report has a footprint");
    let fleet_qubits = report.fleet_qubits.expect("feasible report has fleet qubits");
    let watts = fleet_power(fleet_qubits, &report.cell.architecture)?;
    row.d = Some(machine.code_distance_d);
    row.log10_machines = report.n_machines.and_then(|m| m.log10());
    row.log10_fleet_qubits = fleet_qubits.log10();
    row.machine_qubits = machine.total_qubits.value();
    row.runtime_s = Some(machine.logical_runtime_seconds);
    row.fleet_watts_log10 = watts.log10();
    row.kardashev_band = Some(kardashev_classify(watts).band.to_string());
    Ok(row)
}

fn csv_field(value: Option<f64>) -> String {
    value.map(sig6).unwrap_or_default()
}

/// CSV with the fixed column schema; the rung_tag column appears only when
/// some row carries one (ladder sweeps).
pub fn to_csv(rows: &[ReportRow]) -> String {
    let with_rung = rows.iter().any(|r| r.rung_tag.is_some());
    let mut out = String::new();
    if with_rung {
        out.push_str("b,t_cap_s,Pt,arch,rung_tag,feasible,d,log10_machines,log10_fleet_qubits,machine_qubits,runtime_s,fleet_watts_log10,kardashev_band\n");
    } else {
        out.push_str("b,t_cap_s,Pt,arch,feasible,d,log10_machines,log10_fleet_qubits,machine_qubits,runtime_s,fleet_watts_log10,kardashev_band\n");
    }
    for r in rows {
        let mut fields = vec![sig6(r.b), sig6(r.t_cap_s), sig6(r.pt), r.arch.clone()];
        if with_rung {
            fields.push(r.rung_tag.clone().unwrap_or_default());
        }
        fields.push(r.feasible.to_string());
        fields.push(r.d.map(|d| d.to_string()).unwrap_or_default());
        fields.push(csv_field(r.log10_machines));
        fields.push(csv_field(r.log10_fleet_qubits));
        fields.push(csv_field(r.machine_qubits));
        fields.push(csv_field(r.runtime_s));
        fields.push(csv_field(r.fleet_watts_log10));
        fields.push(r.kardashev_band.clone().unwrap_or_default());
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

/// Full-precision JSON: the flattened rows plus the underlying reports.
pub fn to_json(reports: &[FleetReport]) -> Result<String> {
    #[derive(Serialize)]
    struct Doc<'a> {
        rows: Vec<ReportRow>,
        reports: &'a [FleetReport],
    }
    let rows = reports.iter().map(flatten).collect::<Result<Vec<_>>>()?;
    Ok(serde_json::to_string_pretty(&Doc { rows, reports })? + "\n")
}

/// Aligned plain-text table of the CSV fields.
pub fn to_table(rows: &[ReportRow]) -> String {
    let csv = to_csv(rows);
    let grid: Vec<Vec<&str>> = csv.lines().map(|l| l.split(',').collect()).collect();
    let cols = grid[0].len();
    let widths: Vec<usize> = (0..cols)
        .map(|c| grid.iter().map(|r| r.get(c).map_or(0, |f| f.len())).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &grid {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, f)| format!("{f:>width$}", width = widths[c]))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

/// A point of the network hashrate history.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HashrateSample {
    pub timestamp: NaiveDate,
    pub hashrate_ths: f64,
}

/// Parse a `timestamp,hashrate_ths` CSV. Returns samples sorted and
/// deduplicated by date, plus human-readable warnings (e.g. out-of-order
/// input).
pub fn parse_hashrate_csv(text: &str) -> Result<(Vec<HashrateSample>, Vec<String>)> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header.trim() == "timestamp,hashrate_ths" => {}
        Some((_, header)) => {
            return Err(Error::Parse {
                line: 1,
                message: format!("expected header 'timestamp,hashrate_ths', got '{header}'"),
            })
        }
        None => return Err(Error::invalid("empty hashrate file")),
    }
    let mut samples = Vec::new();
    for (idx, line) in lines {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let (date_str, rate_str) = line.split_once(',').ok_or(Error::Parse {
            line: line_no,
            message: "expected two comma-separated fields".into(),
        })?;
        let timestamp = NaiveDate::parse_from_str(date_str.trim(), "%Y-%m-%d").map_err(|e| {
            Error::Parse {
                line: line_no,
                message: format!("bad ISO-8601 date '{}': {e}", date_str.trim()),
            }
        })?;
        let hashrate_ths: f64 = rate_str.trim().parse().map_err(|e| Error::Parse {
            line: line_no,
            message: format!("bad hashrate '{}': {e}", rate_str.trim()),
        })?;
        if !(hashrate_ths > 0.0) {
            return Err(Error::Parse {
                line: line_no,
                message: format!("hashrate must be positive, got {hashrate_ths}"),
            });
        }
        samples.push(HashrateSample { timestamp, hashrate_ths });
    }
    if samples.is_empty() {
        return Err(Error::invalid("hashrate file contains no samples"));
    }
    let mut warnings = Vec::new();
    if samples.windows(2).any(|w| w[0].timestamp >= w[1].timestamp) {
        warnings.push("hashrate samples were out of order or duplicated; sorted".into());
    }
    samples.sort_by_key(|s| s.timestamp);
    samples.dedup_by_key(|s| s.timestamp);
    Ok((samples, warnings))
}

/// Minimal standalone SVG heatmap. `matrix[row][col]` follows `y_values` by
/// `x_values`; None cells are infeasible and drawn grey; feasible cells are
/// color-mapped by log10 fleet qubits and annotated with the code distance.
pub fn svg_heatmap(
    matrix: &[Vec<Option<(f64, u64)>>],
    x_values: &[f64],
    y_labels: &[String],
) -> Result<String> {
    if matrix.is_empty() || matrix.iter().any(|row| row.len() != x_values.len()) {
        return Err(Error::invalid("heatmap matrix must be rectangular and nonempty"));
    }
    if matrix.len() != y_labels.len() {
        return Err(Error::invalid("one y label per matrix row required"));
    }
    let cell = 56.0;
    let left = 90.0;
    let top = 30.0;
    let w = left + cell * x_values.len() as f64 + 20.0;
    let h = top + cell * matrix.len() as f64 + 40.0;
    let finite: Vec<f64> = matrix.iter().flatten().filter_map(|c| c.map(|(v, _)| v)).collect();
    let (lo, hi) = finite
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| (lo.min(v), hi.max(v)));
    let span = if hi > lo { hi - lo } else { 1.0 };
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w:.0}\" height=\"{h:.0}\" font-family=\"monospace\" font-size=\"11\">"
    );
    for (yi, row) in matrix.iter().enumerate() {
        let y = top + cell * yi as f64;
        let _ = writeln!(
            svg,
            "<text x=\"4\" y=\"{:.1}\">{}</text>",
            y + cell / 2.0 + 4.0,
            y_labels[yi]
        );
        for (xi, entry) in row.iter().enumerate() {
            let x = left + cell * xi as f64;
            match entry {
                None => {
                    let _ = writeln!(
                        svg,
                        "<rect x=\"{x:.1}\" y=\"{y:.1}\" width=\"{cell}\" height=\"{cell}\" fill=\"#9e9e9e\"/>"
                    );
                }
                Some((value, d)) => {
                    let t = (value - lo) / span;
                    let red = (40.0 + 215.0 * t) as u8;
                    let blue = (255.0 - 215.0 * t) as u8;
                    let _ = writeln!(
                        svg,
                        "<rect x=\"{x:.1}\" y=\"{y:.1}\" width=\"{cell}\" height=\"{cell}\" fill=\"rgb({red},60,{blue})\"/>"
                    );
                    let _ = writeln!(
                        svg,
                        "<text x=\"{:.1}\" y=\"{:.1}\" fill=\"white\">d={d}</text>",
                        x + 4.0,
                        y + cell / 2.0 + 4.0
                    );
                }
            }
        }
    }
    for (xi, &b) in x_values.iter().enumerate() {
        let x = left + cell * xi as f64;
        let _ = writeln!(
            svg,
            "<text x=\"{:.1}\" y=\"{:.1}\">b={}</text>",
            x + 4.0,
            top + cell * matrix.len() as f64 + 16.0,
            sig6(b)
        );
    }
    // dashed mainnet marker when the b range spans it
    let b_min = x_values.iter().cloned().fold(f64::INFINITY, f64::min);
    let b_max = x_values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if b_min <= MAINNET_BITS_2025 && MAINNET_BITS_2025 <= b_max && x_values.len() > 1 {
        let frac = (MAINNET_BITS_2025 - b_min) / (b_max - b_min);
        let x = left + frac * cell * (x_values.len() - 1) as f64 + cell / 2.0;
        let _ = writeln!(
            svg,
            "<line x1=\"{x:.1}\" y1=\"{top}\" x2=\"{x:.1}\" y2=\"{:.1}\" stroke=\"black\" stroke-dasharray=\"6,4\" stroke-width=\"2\"/>",
            top + cell * matrix.len() as f64
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}
