//! Deterministic text rendering. Tables and CSV round reals to three
//! decimals (ties to even); JSON carries full precision so it can be
//! parsed back into the report types without loss.

use aindex_core::analysis::{ComparisonTable, SweepSeries};
use aindex_core::Report;

/// Rounds to three decimals, half to even, on the value's shortest decimal
/// form. `format!("{:.3}")` rounds the exact binary value instead, which
/// sends decimal ties like 0.0005 the wrong way.
pub fn fmt3(x: f64) -> String {
    if !x.is_finite() {
        return format!("{x:.3}");
    }
    let negative = x < 0.0;
    let repr = format!("{}", x.abs());
    let (int_part, frac_part) = repr.split_once('.').unwrap_or((repr.as_str(), ""));

    let mut digits: Vec<u8> = int_part.bytes().chain(frac_part.bytes().take(3)).collect();
    digits.resize(int_part.len() + 3, b'0');

    if let Some(rest) = frac_part.as_bytes().get(3..).filter(|r| !r.is_empty()) {
        let round_up = match rest[0].cmp(&b'5') {
            std::cmp::Ordering::Greater => true,
            std::cmp::Ordering::Less => false,
            std::cmp::Ordering::Equal => {
                rest[1..].iter().any(|&d| d != b'0') || (digits.last().unwrap() - b'0') % 2 == 1
            }
        };
        if round_up {
            increment_digits(&mut digits);
        }
    }

    let split = digits.len() - 3;
    let sign = if negative && digits.iter().any(|&d| d != b'0') {
        "-"
    } else {
        ""
    };
    format!(
        "{sign}{}.{}",
        std::str::from_utf8(&digits[..split]).expect("ascii digits"),
        std::str::from_utf8(&digits[split..]).expect("ascii digits"),
    )
}

fn increment_digits(digits: &mut Vec<u8>) {
    for d in digits.iter_mut().rev() {
        if *d == b'9' {
            *d = b'0';
        } else {
            *d += 1;
            return;
        }
    }
    digits.insert(0, b'1');
}

fn opt_count(g: Option<u64>, absent: &str) -> String {
    g.map(|v| v.to_string())
        .unwrap_or_else(|| absent.to_string())
}

pub fn json<T: serde::Serialize>(value: &T) -> anyhow::Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

pub fn report_table(report: &Report) -> String {
    let rows: Vec<(&str, String)> = vec![
        ("a_index", fmt3(report.a_index)),
        ("normalized", fmt3(report.a_index_normalized)),
        ("mu1", fmt3(report.mu[0])),
        ("mu2", fmt3(report.mu[1])),
        ("mu3", fmt3(report.mu[2])),
        ("mu4", fmt3(report.mu[3])),
        ("mu5", fmt3(report.mu[4])),
        ("mu6", fmt3(report.mu[5])),
        ("h", report.h_all.to_string()),
        ("g", opt_count(report.g_all, "-")),
        ("asf", fmt3(report.asf)),
    ];
    let mut out = String::new();
    for (key, value) in rows {
        out.push_str(&format!("{key:<12}{value}\n"));
    }
    out
}

pub fn report_csv(report: &Report) -> String {
    let mut out = String::from("a_index,normalized,mu1,mu2,mu3,mu4,mu5,mu6,h,g,asf\n");
    out.push_str(&format!(
        "{},{},{},{},{},{},{},{},{},{},{}\n",
        fmt3(report.a_index),
        fmt3(report.a_index_normalized),
        fmt3(report.mu[0]),
        fmt3(report.mu[1]),
        fmt3(report.mu[2]),
        fmt3(report.mu[3]),
        fmt3(report.mu[4]),
        fmt3(report.mu[5]),
        report.h_all,
        opt_count(report.g_all, ""),
        fmt3(report.asf),
    ));
    out
}

const COMPARE_COLUMNS: [&str; 15] = [
    "rank", "label", "n1", "n2", "n3", "n4", "n5", "n6", "mu1", "mu2", "mu3", "mu4", "mu5", "mu6",
    "a_index",
];

fn compare_cells(table: &ComparisonTable) -> Vec<Vec<String>> {
    table
        .rows
        .iter()
        .map(|row| {
            let inputs = &row.report.inputs;
            let mut cells = vec![
                row.rank.to_string(),
                row.label.clone(),
                inputs.n1.to_string(),
                inputs.n2.to_string(),
                inputs.n3.to_string(),
                inputs.n4.to_string(),
                inputs.n5.to_string(),
                inputs.n6.to_string(),
            ];
            cells.extend(row.report.mu.iter().map(|m| fmt3(*m)));
            cells.push(fmt3(row.report.a_index));
            cells
        })
        .collect()
}

pub fn compare_table(table: &ComparisonTable) -> String {
    let header: Vec<String> = COMPARE_COLUMNS.iter().map(|s| s.to_string()).collect();
    let mut rows = vec![header];
    rows.extend(compare_cells(table));
    // Right-align everything except the label column.
    grid(&rows, &[false, true])
}

pub fn compare_csv(table: &ComparisonTable) -> String {
    let mut out = COMPARE_COLUMNS.join(",") + "\n";
    for cells in compare_cells(table) {
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

const SWEEP_COLUMNS: [&str; 8] = [
    "field_value",
    "a_index",
    "mu1",
    "mu2",
    "mu3",
    "mu4",
    "mu5",
    "mu6",
];

fn sweep_cells(series: &SweepSeries) -> Vec<Vec<String>> {
    series
        .points
        .iter()
        .map(|point| {
            let mut cells = vec![point.value.to_string(), fmt3(point.report.a_index)];
            cells.extend(point.report.mu.iter().map(|m| fmt3(*m)));
            cells
        })
        .collect()
}

pub fn sweep_csv(series: &SweepSeries) -> String {
    let mut out = SWEEP_COLUMNS.join(",") + "\n";
    for cells in sweep_cells(series) {
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

pub fn sweep_table(series: &SweepSeries) -> String {
    let header: Vec<String> = SWEEP_COLUMNS.iter().map(|s| s.to_string()).collect();
    let mut rows = vec![header];
    rows.extend(sweep_cells(series));
    grid(&rows, &[])
}

/// Pads cells into aligned columns, two spaces apart. Columns listed in
/// `left` (by index, `true` = left-aligned) hug the left edge; everything
/// else is right-aligned, which suits numbers.
fn grid(rows: &[Vec<String>], left: &[bool]) -> String {
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0usize; columns];
    for row in rows {
        for (idx, cell) in row.iter().enumerate() {
            widths[idx] = widths[idx].max(cell.len());
        }
    }
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (idx, cell) in row.iter().enumerate() {
            if idx > 0 {
                line.push_str("  ");
            }
            let width = widths[idx];
            if left.get(idx).copied().unwrap_or(false) {
                line.push_str(&format!("{cell:<width$}"));
            } else {
                line.push_str(&format!("{cell:>width$}"));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
