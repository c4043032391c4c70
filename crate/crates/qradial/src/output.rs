//! Output records and text renderings: aligned tables, RFC 4180 CSV
//! (CRLF line endings), and JSON.
//!
//! Numbers go out with six significant digits unless a precision override
//! is supplied; precision >= 17 switches to the shortest round-trip form so
//! emitted CSV parses back to bit-identical records.

use std::fmt::Write as _;

use serde::Serialize;

use crate::observables::RadialObservables;
use crate::verify::System;

/// Rendering formats for records and tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

/// Default number of significant digits in rendered output.
pub const DEFAULT_PRECISION: usize = 6;

/// Formats a float with the given number of significant digits.
/// Precision >= 17 uses the shortest representation that round-trips.
pub fn format_significant(x: f64, digits: usize) -> String {
    if digits >= 17 {
        return format!("{x}");
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    if (-4..7).contains(&magnitude) {
        let decimals = (digits as i32 - 1 - magnitude).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{x:.*e}", digits.saturating_sub(1))
    }
}

/// One computed state, flattened for machine consumers.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutputRecord {
    pub system: System,
    pub z: Option<u32>,
    pub n: u32,
    pub l: u32,
    #[serde(flatten)]
    pub observables: RadialObservables,
}

/// Natural-unit label for an observable field of a system, matching the
/// reference table headers (a0/Z lengths for hydrogen, R for the well,
/// sqrt(hbar/(m omega)) for the oscillator; the product always in hbar).
pub fn unit_label(system: System, field: &str) -> &'static str {
    let (len, len2, inv, inv2, mom, mom2) = match system {
        System::Hydrogen => (
            "a0/Z",
            "(a0/Z)^2",
            "Z/a0",
            "(Z/a0)^2",
            "Z*hbar/a0",
            "(Z*hbar/a0)^2",
        ),
        System::SphericalWell => ("R", "R^2", "1/R", "1/R^2", "hbar/R", "(hbar/R)^2"),
        System::Oscillator => (
            "sqrt(hbar/(m*omega))",
            "hbar/(m*omega)",
            "sqrt(m*omega/hbar)",
            "m*omega/hbar",
            "sqrt(m*hbar*omega)",
            "m*hbar*omega",
        ),
    };
    match field {
        "mean_r" | "delta_r" => len,
        "mean_r2" => len2,
        "mean_inv_r" => inv,
        "mean_inv_r2" => inv2,
        "mean_pr" | "delta_pr" => mom,
        "mean_pr2" => mom2,
        "sigma_r" => "-",
        "product" => "hbar",
        _ => "-",
    }
}

impl OutputRecord {
    pub fn new(system: System, z: Option<u32>, n: u32, l: u32, obs: RadialObservables) -> Self {
        Self {
            system,
            z,
            n,
            l,
            observables: obs,
        }
    }

    fn header_cells(&self) -> Vec<String> {
        let mut cells = vec![
            "system".to_string(),
            "Z".to_string(),
            "n".to_string(),
            "l".to_string(),
        ];
        for field in RadialObservables::FIELDS {
            let unit = unit_label(self.system, field);
            if unit == "-" {
                cells.push(field.to_string());
            } else {
                cells.push(format!("{field} ({unit})"));
            }
        }
        cells
    }

    fn value_cells(&self, precision: usize) -> Vec<String> {
        let mut cells = vec![
            self.system.cli_name().to_string(),
            self.z.map_or(String::new(), |z| z.to_string()),
            self.n.to_string(),
            self.l.to_string(),
        ];
        for field in RadialObservables::FIELDS {
            cells.push(match self.observables.field(field) {
                Some(v) => format_significant(v, precision),
                None => String::new(),
            });
        }
        cells
    }

    /// RFC 4180 CSV: header row plus one record row, CRLF separated.
    pub fn to_csv(&self, precision: usize) -> String {
        let mut out = String::new();
        out.push_str(&csv_row(&self.header_cells()));
        out.push_str(&csv_row(&self.value_cells(precision)));
        out
    }

    /// Parses a CSV string produced by [`OutputRecord::to_csv`].
    pub fn from_csv(text: &str) -> Result<Self, String> {
        let mut lines = text.lines().filter(|line| !line.trim().is_empty());
        let header = lines.next().ok_or("missing header row")?;
        let row = lines.next().ok_or("missing record row")?;
        let names: Vec<String> = parse_csv_row(header)
            .into_iter()
            .map(|cell| cell.split(" (").next().unwrap_or_default().to_string())
            .collect();
        let cells = parse_csv_row(row);
        if names.len() != cells.len() {
            return Err(format!(
                "header has {} cells, row has {}",
                names.len(),
                cells.len()
            ));
        }
        let lookup = |name: &str| -> Option<&str> {
            names
                .iter()
                .position(|n| n == name)
                .map(|i| cells[i].as_str())
        };
        let required = |name: &str| -> Result<&str, String> {
            lookup(name).ok_or_else(|| format!("missing column {name}"))
        };
        let system: System = required("system")?
            .parse()
            .map_err(|e| format!("bad system: {e}"))?;
        let z_cell = required("Z")?;
        let z = if z_cell.is_empty() {
            None
        } else {
            Some(z_cell.parse::<u32>().map_err(|e| e.to_string())?)
        };
        let n = required("n")?.parse::<u32>().map_err(|e| e.to_string())?;
        let l = required("l")?.parse::<u32>().map_err(|e| e.to_string())?;
        let float = |name: &str| -> Result<f64, String> {
            required(name)?.parse::<f64>().map_err(|e| e.to_string())
        };
        let optional_float = |name: &str| -> Result<Option<f64>, String> {
            let cell = required(name)?;
            if cell.is_empty() {
                Ok(None)
            } else {
                cell.parse::<f64>().map(Some).map_err(|e| e.to_string())
            }
        };
        Ok(Self {
            system,
            z,
            n,
            l,
            observables: RadialObservables {
                mean_r: float("mean_r")?,
                mean_r2: float("mean_r2")?,
                mean_inv_r: optional_float("mean_inv_r")?,
                mean_inv_r2: optional_float("mean_inv_r2")?,
                delta_r: float("delta_r")?,
                mean_pr: float("mean_pr")?,
                mean_pr2: float("mean_pr2")?,
                delta_pr: float("delta_pr")?,
                sigma_r: float("sigma_r")?,
                product: float("product")?,
            },
        })
    }

    /// Aligned two-row table.
    pub fn to_table(&self, precision: usize) -> String {
        render_aligned(&[self.header_cells(), self.value_cells(precision)])
    }

    /// Flat JSON object with stable field names (full float precision).
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("record serialization cannot fail")
    }

    /// Renders in the requested format.
    pub fn render(&self, format: Format, precision: usize) -> String {
        match format {
            Format::Table => self.to_table(precision),
            Format::Csv => self.to_csv(precision),
            Format::Json => {
                let mut s = self.to_json();
                s.push('\n');
                s
            }
        }
    }
}

/// A generic titled grid of cells, used by the table and figure commands.
#[derive(Debug, Clone, PartialEq)]
pub struct TextTable {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Int(i64),
    Num(f64),
}

impl Cell {
    fn render(&self, precision: usize) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Int(i) => i.to_string(),
            Cell::Num(x) => format_significant(*x, precision),
        }
    }

    /// Numeric view, for regression comparisons.
    pub fn as_f64(&self) -> Option<f64> {
        match self {
            Cell::Text(_) => None,
            Cell::Int(i) => Some(*i as f64),
            Cell::Num(x) => Some(*x),
        }
    }
}

impl TextTable {
    pub fn render(&self, format: Format, precision: usize) -> String {
        match format {
            Format::Table => {
                let mut grid = vec![self.columns.clone()];
                for row in &self.rows {
                    grid.push(row.iter().map(|c| c.render(precision)).collect());
                }
                let mut out = String::new();
                if !self.title.is_empty() {
                    out.push_str(&self.title);
                    out.push('\n');
                }
                out.push_str(&render_aligned(&grid));
                out
            }
            Format::Csv => {
                let mut out = csv_row(&self.columns);
                for row in &self.rows {
                    let cells: Vec<String> = row.iter().map(|c| c.render(precision)).collect();
                    out.push_str(&csv_row(&cells));
                }
                out
            }
            Format::Json => {
                // Array-of-arrays keeps column order explicit and stable.
                let mut out = String::from("{\n");
                let _ = writeln!(out, "  \"title\": {},", json_string(&self.title));
                let columns: Vec<String> = self.columns.iter().map(|c| json_string(c)).collect();
                let _ = writeln!(out, "  \"columns\": [{}],", columns.join(", "));
                out.push_str("  \"rows\": [\n");
                for (i, row) in self.rows.iter().enumerate() {
                    let cells: Vec<String> = row
                        .iter()
                        .map(|c| match c {
                            Cell::Text(s) => json_string(s),
                            Cell::Int(v) => v.to_string(),
                            Cell::Num(x) => {
                                if x.is_finite() {
                                    format!("{x}")
                                } else {
                                    "null".to_string()
                                }
                            }
                        })
                        .collect();
                    let comma = if i + 1 < self.rows.len() { "," } else { "" };
                    let _ = writeln!(out, "    [{}]{comma}", cells.join(", "));
                }
                out.push_str("  ]\n}\n");
                out
            }
        }
    }
}

fn render_aligned(grid: &[Vec<String>]) -> String {
    let columns = grid.iter().map(|row| row.len()).max().unwrap_or(0);
    let mut widths = vec![0usize; columns];
    for row in grid {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    for row in grid {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            let _ = write!(line, "{cell:>width$}", width = widths[i]);
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Quotes a CSV field when RFC 4180 requires it.
fn csv_field(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') || field.contains('\r') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

fn csv_row(cells: &[String]) -> String {
    let mut out = cells
        .iter()
        .map(|c| csv_field(c))
        .collect::<Vec<_>>()
        .join(",");
    out.push_str("\r\n");
    out
}

/// Splits one CSV row, honoring RFC 4180 quoting.
pub fn parse_csv_row(line: &str) -> Vec<String> {
    let line = line.strip_suffix('\r').unwrap_or(line);
    let mut cells = Vec::new();
    let mut current = String::new();
    let mut quoted = false;
    let mut chars = line.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '"' if quoted => {
                if chars.peek() == Some(&'"') {
                    chars.next();
                    current.push('"');
                } else {
                    quoted = false;
                }
            }
            '"' if current.is_empty() => quoted = true,
            ',' if !quoted => {
                cells.push(std::mem::take(&mut current));
            }
            c => current.push(c),
        }
    }
    cells.push(current);
    cells
}

fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("string serialization cannot fail")
}
