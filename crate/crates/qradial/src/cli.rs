//! Command-line front end: single-state computation, reference-table
//! regeneration, plot-ready figure data, and the verification suite.
//!
//! Every table and figure is regenerated from computation; the plain-text
//! fixtures shipped with the crate are regression data for the tests, never
//! an output source. Output is deterministic: identical invocations produce
//! byte-identical bytes.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::error::{Error, Result};
use crate::hydrogenic::HydrogenicState;
use crate::isw::IswState;
use crate::observables::RadialObservables;
use crate::output::{format_significant, Cell, Format, OutputRecord, TextTable, DEFAULT_PRECISION};
use crate::sho::{self, ShoState};
use crate::verify::{self, SuiteConfig, System, VerificationReport};

#[derive(Debug, Parser)]
#[command(
    name = "qradial",
    version,
    about = "Radial observables and uncertainty products for spherically symmetric quantum systems"
)]
pub struct Cli {
    /// Significant digits for printed numbers (>= 17 prints full precision).
    #[arg(long, global = true, default_value_t = DEFAULT_PRECISION)]
    pub precision: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// One hydrogenic state: observables in a0/Z and Z*hbar/a0 units.
    Hydrogen {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        l: u32,
        /// Atomic number (1..=4: H, He+, Li2+, Be3+).
        #[arg(long = "Z", default_value_t = 1)]
        z: u32,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// One infinite-spherical-well state: observables in R and hbar/R units.
    Isw {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        l: u32,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// One oscillator state: observables in sqrt(hbar/(m omega)) units.
    Sho {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        l: u32,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Regenerate a reference table (III, IV, VI, VII, VIII, IX, X, XI, XII, XIII).
    Table {
        id: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Plot-ready CSV series for a figure family, e.g. hydrogen-vs-n,
    /// isw-per-orbital, sho-ground-state-profile.
    Figure {
        family: String,
        #[arg(long)]
        l: Option<u32>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        max_n: Option<u32>,
    },
    /// Run the closed-form-versus-oracle verification scan.
    Verify {
        /// Comma-separated subset of hydrogen,isw,sho (default: all three).
        #[arg(long, value_delimiter = ',')]
        systems: Vec<String>,
        /// Cap on n for every scanned system.
        #[arg(long)]
        max_n: Option<u32>,
        /// Relative tolerance of the comparison.
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        /// Write the full report here (.json for JSON, anything else CSV).
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

/// Parses argv and runs; returns the process exit code.
pub fn run() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn execute(cli: Cli) -> Result<ExitCode> {
    let precision = cli.precision;
    match cli.command {
        Command::Hydrogen { n, l, z, format } => {
            let record = state_record(System::Hydrogen, n, l, Some(z))?;
            print!("{}", record.render(format, precision));
            Ok(ExitCode::SUCCESS)
        }
        Command::Isw { n, l, format } => {
            let record = state_record(System::SphericalWell, n, l, None)?;
            print!("{}", record.render(format, precision));
            Ok(ExitCode::SUCCESS)
        }
        Command::Sho { n, l, format } => {
            let record = state_record(System::Oscillator, n, l, None)?;
            print!("{}", record.render(format, precision));
            Ok(ExitCode::SUCCESS)
        }
        Command::Table { id, format } => {
            let table = generate_table(&id)?;
            print!("{}", table.render(format, precision));
            Ok(ExitCode::SUCCESS)
        }
        Command::Figure {
            family,
            l,
            n,
            max_n,
        } => {
            let table = generate_figure(&family, l, n, max_n)?;
            print!("{}", table.render(Format::Csv, precision));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            systems,
            max_n,
            tol,
            report,
        } => run_verify(&systems, max_n, tol, report.as_deref()),
    }
}

/// Computes one state's record; hydrogen requires Z in 1..=4.
pub fn state_record(system: System, n: u32, l: u32, z: Option<u32>) -> Result<OutputRecord> {
    match system {
        System::Hydrogen => {
            let z = z.unwrap_or(1);
            if !(1..=4).contains(&z) {
                return Err(Error::InvalidQuantumNumbers(format!(
                    "Z must be in 1..=4 (H, He+, Li2+, Be3+), got {z}"
                )));
            }
            let state = HydrogenicState::new(z, n, l)?;
            Ok(OutputRecord::new(
                system,
                Some(z),
                n,
                l,
                state.observables(),
            ))
        }
        System::SphericalWell => {
            let state = IswState::new(n, l)?;
            Ok(OutputRecord::new(system, None, n, l, state.observables()?))
        }
        System::Oscillator => {
            let state = ShoState::new(n, l)?;
            Ok(OutputRecord::new(system, None, n, l, state.observables()?))
        }
    }
}

const ORBITAL_LETTERS: [char; 7] = ['s', 'p', 'd', 'f', 'g', 'h', 'i'];

fn orbital_name(n: u32, l: u32) -> String {
    format!("{n}{}", ORBITAL_LETTERS[l as usize])
}

/// Regenerates a reference table from computation.
pub fn generate_table(id: &str) -> Result<TextTable> {
    match id.to_ascii_uppercase().as_str() {
        "III" => table_iii(),
        "IV" => table_iv(),
        "VI" => table_vi(),
        "VII" => table_vii(),
        "VIII" => table_viii(),
        "IX" => table_ix(),
        "X" => table_x(),
        "XI" => table_xi(),
        "XII" => table_xii(),
        "XIII" => table_xiii(),
        other => Err(Error::InvalidQuantumNumbers(format!(
            "unknown table id '{other}' (expected III, IV, VI, VII, VIII, IX, X, XI, XII, or XIII)"
        ))),
    }
}

fn hydrogen_orbitals(max_n: u32) -> Vec<(u32, u32)> {
    let mut states = Vec::new();
    for n in 1..=max_n {
        for l in 0..n {
            states.push((n, l));
        }
    }
    states
}

fn well_grid() -> Vec<(u32, u32)> {
    let mut states = Vec::new();
    for n in 1..=5u32 {
        for l in 0..n.min(5) {
            states.push((n, l));
        }
    }
    states
}

fn oscillator_grid() -> Vec<(u32, u32)> {
    let mut states = Vec::new();
    for n in 0..=6u32 {
        let mut ells = sho::allowed_ell(n);
        ells.reverse();
        for l in ells {
            states.push((n, l));
        }
    }
    states
}

fn table_iii() -> Result<TextTable> {
    let mut rows = Vec::new();
    for (n, l) in hydrogen_orbitals(4) {
        let obs = HydrogenicState::new(1, n, l)?.observables();
        rows.push(vec![
            Cell::Text(orbital_name(n, l)),
            Cell::Num(obs.mean_r),
            Cell::Num(obs.delta_r),
            Cell::Num(obs.sigma_r),
        ]);
    }
    Ok(TextTable {
        title: "Table III: hydrogenic <r>, delta r, sigma_r (lengths in a0/Z)".into(),
        columns: vec![
            "orbital".into(),
            "mean_r (a0/Z)".into(),
            "delta_r (a0/Z)".into(),
            "sigma_r".into(),
        ],
        rows,
    })
}

fn table_iv() -> Result<TextTable> {
    let mut rows = Vec::new();
    for (n, l) in hydrogen_orbitals(4) {
        let obs = HydrogenicState::new(1, n, l)?.observables();
        rows.push(vec![
            Cell::Int(n as i64),
            Cell::Int(l as i64),
            Cell::Text(orbital_name(n, l)),
            Cell::Num(obs.delta_r),
            Cell::Num(obs.delta_pr),
            Cell::Num(obs.product),
        ]);
    }
    Ok(TextTable {
        title: "Table IV: hydrogenic uncertainties and their product".into(),
        columns: vec![
            "n".into(),
            "l".into(),
            "orbital".into(),
            "delta_r (a0/Z)".into(),
            "delta_pr (Z*hbar/a0)".into(),
            "product (hbar)".into(),
        ],
        rows,
    })
}

fn table_vi() -> Result<TextTable> {
    let mut rows = Vec::new();
    for l in 0..=4u32 {
        let mut row = vec![Cell::Int(l as i64)];
        for n in 1..=5u32 {
            row.push(Cell::Num(crate::specfun::spherical_bessel_zero(l, n)?.value));
        }
        rows.push(row);
    }
    Ok(TextTable {
        title: "Table VI: zeros z_nl of the spherical Bessel functions".into(),
        columns: vec![
            "l".into(),
            "n=1".into(),
            "n=2".into(),
            "n=3".into(),
            "n=4".into(),
            "n=5".into(),
        ],
        rows,
    })
}

fn table_vii() -> Result<TextTable> {
    let mut rows = Vec::new();
    for (n, l) in well_grid() {
        let state = IswState::new(n, l)?;
        rows.push(vec![
            Cell::Int(n as i64),
            Cell::Int(l as i64),
            Cell::Num(state.zero()),
            Cell::Num(state.norm_coefficient()),
        ]);
    }
    Ok(TextTable {
        title: "Table VII: well normalization coefficients C_nl = 1/|j_{l+1}(z_nl)|".into(),
        columns: vec!["n".into(), "l".into(), "z_nl".into(), "C_nl".into()],
        rows,
    })
}

fn table_viii() -> Result<TextTable> {
    let mut rows = Vec::new();
    for (n, l) in well_grid() {
        let state = IswState::new(n, l)?;
        let obs = state.observables()?;
        rows.push(vec![
            Cell::Int(n as i64),
            Cell::Int(l as i64),
            Cell::Num(state.zero()),
            Cell::Num(obs.mean_r),
            Cell::Num(obs.delta_r),
            Cell::Num(obs.sigma_r),
        ]);
    }
    Ok(TextTable {
        title: "Table VIII: well <r>, delta r, sigma_r (lengths in R)".into(),
        columns: vec![
            "n".into(),
            "l".into(),
            "z_nl".into(),
            "mean_r (R)".into(),
            "delta_r (R)".into(),
            "sigma_r".into(),
        ],
        rows,
    })
}

fn table_ix() -> Result<TextTable> {
    let mut rows = Vec::new();
    for (n, l) in well_grid() {
        let state = IswState::new(n, l)?;
        let obs = state.observables()?;
        rows.push(vec![
            Cell::Int(n as i64),
            Cell::Int(l as i64),
            Cell::Num(state.zero()),
            Cell::Num(obs.delta_r),
            Cell::Num(obs.delta_pr),
            Cell::Num(obs.product),
        ]);
    }
    Ok(TextTable {
        title: "Table IX: well uncertainties and their product".into(),
        columns: vec![
            "n".into(),
            "l".into(),
            "z_nl".into(),
            "delta_r (R)".into(),
            "delta_pr (hbar/R)".into(),
            "product (hbar)".into(),
        ],
        rows,
    })
}

fn table_x() -> Result<TextTable> {
    let mut rows = Vec::new();
    for (n, l) in oscillator_grid() {
        let state = ShoState::new(n, l)?;
        let ints = state.integrals()?;
        let obs = state.observables()?;
        rows.push(vec![
            Cell::Int(n as i64),
            Cell::Int(l as i64),
            Cell::Num(ints.norm_ratio),
            Cell::Num(ints.first_moment),
            Cell::Num(obs.mean_r),
            Cell::Num(obs.delta_r),
            Cell::Num(obs.sigma_r),
        ]);
    }
    Ok(TextTable {
        title: "Table X: oscillator <r>, delta r, sigma_r (lengths in sqrt(hbar/(m*omega)))".into(),
        columns: vec![
            "n".into(),
            "l".into(),
            "norm_ratio".into(),
            "first_moment".into(),
            "mean_r".into(),
            "delta_r".into(),
            "sigma_r".into(),
        ],
        rows,
    })
}

fn table_xi() -> Result<TextTable> {
    let mut rows = Vec::new();
    for (n, l) in oscillator_grid() {
        let terms = ShoState::new(n, l)?.mean_pr_terms()?;
        rows.push(vec![
            Cell::Int(n as i64),
            Cell::Int(l as i64),
            Cell::Num(terms[0]),
            Cell::Num(terms[1]),
            Cell::Num(terms[2]),
            Cell::Num(terms.iter().sum()),
        ]);
    }
    Ok(TextTable {
        title: "Table XI: oscillator <p_r> integral pieces (they sum to zero)".into(),
        columns: vec![
            "n".into(),
            "l".into(),
            "term_1".into(),
            "term_2".into(),
            "term_3".into(),
            "sum".into(),
        ],
        rows,
    })
}

fn table_xii() -> Result<TextTable> {
    let mut rows = Vec::new();
    for (n, l) in oscillator_grid() {
        let state = ShoState::new(n, l)?;
        let ints = state.integrals()?;
        let obs = state.observables()?;
        rows.push(vec![
            Cell::Int(n as i64),
            Cell::Int(l as i64),
            Cell::Num(ints.norm_ratio),
            Cell::Num(ints.first_moment),
            Cell::Num(ints.inv_sq_moment),
            Cell::Num(obs.delta_r),
            Cell::Num(obs.delta_pr),
            Cell::Num(obs.product),
        ]);
    }
    Ok(TextTable {
        title: "Table XII: oscillator uncertainties and their product".into(),
        columns: vec![
            "n".into(),
            "l".into(),
            "norm_ratio".into(),
            "first_moment".into(),
            "inv_sq_moment".into(),
            "delta_r".into(),
            "delta_pr".into(),
            "product (hbar)".into(),
        ],
        rows,
    })
}

fn table_xiii() -> Result<TextTable> {
    let mut rows = Vec::new();
    for n in 0..=6u32 {
        let (d, parity) = sho::degeneracy_parity(n);
        let states: Vec<String> = sho::allowed_ell(n)
            .iter()
            .map(|&l| format!("({} {l})", (n - l) / 2))
            .collect();
        let cartesian = ((n as i64 + 1) * (n as i64 + 2)) / 2;
        let parity_text = if parity > 0 { "+" } else { "-" };
        rows.push(vec![
            Cell::Int(n as i64),
            Cell::Text(states.join(";")),
            Cell::Int(d as i64),
            Cell::Text(parity_text.into()),
            Cell::Num(n as f64 + 1.5),
            Cell::Int(cartesian),
            Cell::Text(parity_text.into()),
            Cell::Num(n as f64 + 1.5),
        ]);
    }
    Ok(TextTable {
        title: "Table XIII: oscillator degeneracy and parity, spherical vs cartesian".into(),
        columns: vec![
            "n".into(),
            "(n_r l) states".into(),
            "d_s".into(),
            "p_s".into(),
            "E_s (hbar*omega)".into(),
            "d_c".into(),
            "p_c".into(),
            "E_c (hbar*omega)".into(),
        ],
        rows,
    })
}

fn observable_columns() -> Vec<String> {
    vec![
        "mean_r".into(),
        "delta_r".into(),
        "sigma_r".into(),
        "delta_pr".into(),
        "product".into(),
    ]
}

fn observable_cells(obs: &RadialObservables) -> Vec<Cell> {
    vec![
        Cell::Num(obs.mean_r),
        Cell::Num(obs.delta_r),
        Cell::Num(obs.sigma_r),
        Cell::Num(obs.delta_pr),
        Cell::Num(obs.product),
    ]
}

fn observables_for(system: System, n: u32, l: u32) -> Result<RadialObservables> {
    match system {
        System::Hydrogen => Ok(HydrogenicState::new(1, n, l)?.observables()),
        System::SphericalWell => IswState::new(n, l)?.observables(),
        System::Oscillator => ShoState::new(n, l)?.observables(),
    }
}

/// Generates plot-ready series for `<system>-<kind>` figure families, where
/// kind is vs-n, vs-ell, per-orbital, or ground-state-profile.
pub fn generate_figure(
    family: &str,
    l: Option<u32>,
    n: Option<u32>,
    max_n: Option<u32>,
) -> Result<TextTable> {
    let unknown = || {
        Error::InvalidQuantumNumbers(format!(
            "unknown figure family '{family}' (expected <system>-<kind> with system in \
             hydrogen/isw/sho and kind in vs-n/vs-ell/per-orbital/ground-state-profile)"
        ))
    };
    let (system_name, kind) = family.split_once('-').ok_or_else(unknown)?;
    let system: System = system_name.parse().map_err(|_| unknown())?;
    match kind {
        "vs-n" => {
            let l = l.unwrap_or(0);
            let hi = max_n.unwrap_or(6);
            let ns: Vec<u32> = match system {
                System::Hydrogen => (l + 1..=hi.max(l + 1)).collect(),
                System::SphericalWell => (1..=hi.max(1)).collect(),
                System::Oscillator => (l..=hi.max(l)).step_by(2).collect(),
            };
            let mut rows = Vec::new();
            for n in ns {
                let obs = observables_for(system, n, l)?;
                let mut row = vec![Cell::Int(n as i64)];
                row.extend(observable_cells(&obs));
                rows.push(row);
            }
            let mut columns = vec!["n".to_string()];
            columns.extend(observable_columns());
            Ok(TextTable {
                title: String::new(),
                columns,
                rows,
            })
        }
        "vs-ell" => {
            let n = n.ok_or_else(|| {
                Error::InvalidQuantumNumbers("vs-ell figures need --n".to_string())
            })?;
            let ells: Vec<u32> = match system {
                System::Hydrogen => (0..n).collect(),
                System::SphericalWell => (0..=4).collect(),
                System::Oscillator => {
                    let mut e = sho::allowed_ell(n);
                    e.reverse();
                    e
                }
            };
            let mut rows = Vec::new();
            for l in ells {
                let obs = observables_for(system, n, l)?;
                let mut row = vec![Cell::Int(l as i64)];
                row.extend(observable_cells(&obs));
                rows.push(row);
            }
            let mut columns = vec!["l".to_string()];
            columns.extend(observable_columns());
            Ok(TextTable {
                title: String::new(),
                columns,
                rows,
            })
        }
        "per-orbital" => {
            let states: Vec<(u32, u32)> = match system {
                System::Hydrogen => hydrogen_orbitals(max_n.unwrap_or(4)),
                System::SphericalWell => well_grid(),
                System::Oscillator => oscillator_grid(),
            };
            let mut rows = Vec::new();
            for (n, l) in states {
                let obs = observables_for(system, n, l)?;
                let mut row = vec![Cell::Int(n as i64), Cell::Int(l as i64)];
                row.extend(observable_cells(&obs));
                rows.push(row);
            }
            let mut columns = vec!["n".to_string(), "l".to_string()];
            columns.extend(observable_columns());
            Ok(TextTable {
                title: String::new(),
                columns,
                rows,
            })
        }
        "ground-state-profile" => {
            let (r_max, wavefunction): (f64, Box<dyn Fn(f64) -> f64>) = match system {
                System::Hydrogen => {
                    let state = HydrogenicState::new(1, 1, 0)?;
                    (10.0, Box::new(move |r| state.radial_wavefunction(r)))
                }
                System::SphericalWell => {
                    let state = IswState::new(1, 0)?;
                    (1.0, Box::new(move |r| state.radial_wavefunction(r)))
                }
                System::Oscillator => {
                    let state = ShoState::new(0, 0)?;
                    (4.0, Box::new(move |r| state.radial_wavefunction(r, 1.0)))
                }
            };
            let points = 500usize;
            let mut rows = Vec::new();
            for i in 0..=points {
                let r = r_max * i as f64 / points as f64;
                let value = wavefunction(r);
                rows.push(vec![
                    Cell::Num(r),
                    Cell::Num(value),
                    Cell::Num(r * r * value * value),
                ]);
            }
            Ok(TextTable {
                title: String::new(),
                columns: vec!["r".into(), "R".into(), "P".into()],
                rows,
            })
        }
        _ => Err(unknown()),
    }
}

fn run_verify(
    systems: &[String],
    max_n: Option<u32>,
    tol: f64,
    report_path: Option<&std::path::Path>,
) -> Result<ExitCode> {
    let mut config = SuiteConfig {
        rel_tol: tol,
        pr_abs_tol: tol.min(1e-9),
        ..SuiteConfig::default()
    };
    if !systems.is_empty() {
        config.systems = systems
            .iter()
            .map(|s| s.parse::<System>())
            .collect::<Result<Vec<_>>>()?;
    }
    if let Some(max_n) = max_n {
        config.hydrogen_max_n = max_n.max(1);
        config.isw_max_n = max_n.max(1);
        config.sho_max_n = max_n;
    }
    let states = verify::scan_states(&config)?;
    let reports = verify::run_suite(&config)?;
    let failures = verify::count_failures(&reports);
    println!(
        "states scanned: {}  comparisons: {}  failures: {}",
        states.len(),
        reports.len(),
        failures
    );
    for report in reports.iter().filter(|r| !r.pass) {
        println!(
            "FAIL {} {} ({},{}) {}: closed {} oracle {} rel {}",
            report.system,
            report.z.map_or(String::new(), |z| format!("Z={z}")),
            report.n,
            report.l,
            report.field,
            format_significant(report.closed_form, 10),
            format_significant(report.oracle, 10),
            format_significant(report.rel_diff, 3),
        );
    }
    if let Some(path) = report_path {
        let body = if path.extension().is_some_and(|e| e == "json") {
            report_json(&reports)
        } else {
            report_csv(&reports)
        };
        std::fs::write(path, body)
            .map_err(|e| Error::Domain(format!("cannot write report {}: {e}", path.display())))?;
        println!("report written to {}", path.display());
    }
    Ok(if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

/// CSV rendering of a verification report (full float precision).
pub fn report_csv(reports: &[VerificationReport]) -> String {
    let mut out = String::from(
        "system,Z,n,l,field,closed_form,oracle,abs_diff,rel_diff,pass\r\n",
    );
    for r in reports {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{}\r\n",
            r.system,
            r.z.map_or(String::new(), |z| z.to_string()),
            r.n,
            r.l,
            r.field,
            r.closed_form,
            r.oracle,
            r.abs_diff,
            r.rel_diff,
            r.pass
        ));
    }
    out
}

/// JSON rendering of a verification report.
pub fn report_json(reports: &[VerificationReport]) -> String {
    let mut out = serde_json::to_string_pretty(reports).expect("report serialization cannot fail");
    out.push('\n');
    out
}
