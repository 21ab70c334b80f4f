//! Command-line front end. Every subcommand writes one CSV dataset to
//! `--out` (or standard output) and a one-line summary to standard error.
//!
//! Exit codes: 0 on success, 1 on usage, domain or I/O errors, 2 when a
//! numerical routine fails to converge.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;

use crate::arithmetic::{build_mangoldt, BoundParameters, MangoldtTable};
use crate::error::{Error, Result};
use crate::li::{
    gamma_term_closed_form, gamma_term_value, li_sum_arithmetic_side, li_sum_derivative_side, pole_term_oracle,
    pole_term_value, LiParameters,
};
use crate::logderiv::{
    eta_coefficient, line_one_oscillation, regime, residual_report, scan_over_a, scan_over_n_cut, validate_a_grid,
    ApproxReport, ScanAxis, ScanSeries,
};
use crate::special::PrecisionConfig;

/// Header of every residual-report dataset.
pub const REPORT_HEADER: &str = "x_axis,approx_re,approx_im,ref_re,ref_im,residual_abs,bound,ratio";

#[derive(Debug, Parser)]
#[command(
    name = "logzeta",
    version,
    about = "Truncated von Mangoldt approximations of ln ζ derivatives"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output file; standard output when omitted.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(flatten)]
    precision: PrecisionArgs,
}

#[derive(Debug, Args)]
struct PrecisionArgs {
    #[arg(long, global = true)]
    em_cutoff: Option<usize>,
    #[arg(long, global = true)]
    bernoulli_order: Option<usize>,
    #[arg(long, global = true)]
    cauchy_points: Option<usize>,
    #[arg(long, global = true)]
    cauchy_radius: Option<f64>,
    #[arg(long, global = true)]
    quad_rel_tol: Option<f64>,
}

impl PrecisionArgs {
    fn resolve(&self) -> Result<PrecisionConfig> {
        let d = PrecisionConfig::default();
        let cfg = PrecisionConfig {
            em_cutoff: self.em_cutoff.unwrap_or(d.em_cutoff),
            bernoulli_order: self.bernoulli_order.unwrap_or(d.bernoulli_order),
            cauchy_points: self.cauchy_points.unwrap_or(d.cauchy_points),
            cauchy_radius: self.cauchy_radius.unwrap_or(d.cauchy_radius),
            quad_rel_tol: self.quad_rel_tol.unwrap_or(d.quad_rel_tol),
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Debug, Args)]
struct BoundArgs {
    /// Zero-free width Δ.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    delta: f64,
    /// Margin δ₀ above 1/2 + Δ.
    #[arg(long, default_value_t = 1e-4)]
    delta0: f64,
    /// Constant C of the bound.
    #[arg(long, default_value_t = 1.0)]
    constant_c: f64,
}

impl BoundArgs {
    fn resolve(&self) -> Result<BoundParameters> {
        BoundParameters::new(self.delta, self.delta0, self.constant_c)
    }
}

#[derive(Debug, Args)]
struct PointArgs {
    /// Real part of the evaluation point.
    #[arg(long, allow_negative_numbers = true)]
    a: f64,
    /// Imaginary part of the evaluation point.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    a_im: f64,
}

impl PointArgs {
    fn point(&self) -> Result<Complex64> {
        let a = Complex64::new(self.a, self.a_im);
        if !a.is_finite() {
            return Err(Error::Domain(format!("point a = {a} must be finite")));
        }
        Ok(a)
    }
}

#[derive(Debug, Args)]
struct GridArgs {
    /// Linear grid `start:stop:points`.
    #[arg(long, conflicts_with = "grid_log")]
    grid: Option<String>,
    /// Logarithmic grid `start:stop:points`.
    #[arg(long)]
    grid_log: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Λ(m) and ψ(m) for m = 1..=nmax.
    Mangoldt {
        #[arg(long)]
        nmax: usize,
    },
    /// One residual report.
    Approx {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        point: PointArgs,
        #[arg(long = "N")]
        cutoff: usize,
        #[command(flatten)]
        bound: BoundArgs,
    },
    /// Residual reports over a real a-grid inside (1/2, 1).
    ScanA {
        #[arg(long)]
        n: u32,
        #[arg(long = "N")]
        cutoff: usize,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        bound: BoundArgs,
    },
    /// Residual reports at one point over a grid of cutoffs.
    ScanN {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        point: PointArgs,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        bound: BoundArgs,
    },
    /// Li sums k_{j,a}, j = 1..=n, from the arithmetic and derivative sides.
    Li {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        point: PointArgs,
        #[arg(long = "N")]
        cutoff: usize,
    },
    /// Closed forms of the gamma and pole terms against Cauchy oracles.
    Identities {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        point: PointArgs,
    },
    /// η-type coefficients of orders 1..=n at cutoff N.
    Eta {
        #[arg(long)]
        n: u32,
        #[arg(long = "N")]
        cutoff: usize,
    },
    /// Oscillation on Re s = 1 at height t, at N = 10, 100, … up to N.
    Oscillation {
        #[arg(long, allow_negative_numbers = true)]
        t: f64,
        #[arg(long = "N")]
        cutoff: usize,
    },
}

/// Parses `start:stop:points`.
fn parse_grid(spec: &str) -> Result<(f64, f64, usize)> {
    let parts: Vec<&str> = spec.split(':').collect();
    let bad = || Error::Domain(format!("grid `{spec}` must have the form start:stop:points"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let start: f64 = parts[0].trim().parse().map_err(|_| bad())?;
    let stop: f64 = parts[1].trim().parse().map_err(|_| bad())?;
    let points: usize = parts[2].trim().parse().map_err(|_| bad())?;
    if !start.is_finite() || !stop.is_finite() {
        return Err(bad());
    }
    if points >= 2 && stop <= start {
        return Err(Error::Domain(format!("grid `{spec}` needs stop > start")));
    }
    Ok((start, stop, points))
}

/// `points` values from `start` to `stop` inclusive, linearly or geometrically spaced.
pub fn grid_values(spec: &str, logarithmic: bool) -> Result<Vec<f64>> {
    let (start, stop, points) = parse_grid(spec)?;
    if logarithmic && !(start > 0.0) {
        return Err(Error::Domain(format!("logarithmic grid `{spec}` needs start > 0")));
    }
    let values = (0..points)
        .map(|i| {
            if points == 1 {
                return start;
            }
            let t = i as f64 / (points - 1) as f64;
            if logarithmic {
                (start.ln() + t * (stop.ln() - start.ln())).exp()
            } else {
                start + t * (stop - start)
            }
        })
        .collect();
    Ok(values)
}

impl GridArgs {
    fn real(&self) -> Result<Vec<f64>> {
        match (&self.grid, &self.grid_log) {
            (Some(g), None) => grid_values(g, false),
            (None, Some(g)) => grid_values(g, true),
            _ => Err(Error::Domain("exactly one of --grid or --grid-log is required".into())),
        }
    }

    /// Rounded to integers; duplicates produced by rounding are dropped.
    fn cutoffs(&self) -> Result<Vec<usize>> {
        let mut out: Vec<usize> = Vec::new();
        for v in self.real()? {
            if !(v >= 1.0) {
                return Err(Error::Domain(format!("cutoff grid value {v} must be >= 1")));
            }
            let c = v.round() as usize;
            if out.last() != Some(&c) {
                out.push(c);
            }
        }
        Ok(out)
    }
}

fn real(x: f64) -> String {
    // -0.0 prints as 0
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

fn push_row(out: &mut String, fields: &[String]) {
    out.push_str(&fields.join(","));
    out.push('\n');
}

fn report_row(x: f64, r: &ApproxReport) -> Vec<String> {
    vec![
        real(x),
        real(r.approximation.re),
        real(r.approximation.im),
        real(r.reference.re),
        real(r.reference.im),
        real(r.residual_abs),
        real(r.bound),
        real(r.ratio),
    ]
}

/// CSV text for a scan series: header plus one row per entry, in scan order.
pub fn series_csv(series: &ScanSeries) -> String {
    let mut out = String::new();
    out.push_str(REPORT_HEADER);
    out.push('\n');
    for r in &series.entries {
        push_row(&mut out, &report_row(series.x_axis(r), r));
    }
    out
}

/// Parses CSV produced by [`series_csv`] back into `(x_axis, report fields)` rows.
pub fn parse_series_csv(text: &str) -> Result<Vec<[f64; 8]>> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let headers = reader
        .headers()
        .map_err(|e| Error::Domain(format!("unreadable CSV header: {e}")))?
        .iter()
        .collect::<Vec<_>>()
        .join(",");
    if headers != REPORT_HEADER {
        return Err(Error::Domain(format!("unexpected CSV header `{headers}`")));
    }
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| Error::Domain(format!("malformed CSV row: {e}")))?;
        let mut row = [0.0; 8];
        for (slot, field) in row.iter_mut().zip(record.iter()) {
            *slot = field
                .parse()
                .map_err(|_| Error::Domain(format!("non-numeric CSV field `{field}`")))?;
        }
        rows.push(row);
    }
    Ok(rows)
}

fn table_for(cutoff: usize) -> Result<MangoldtTable> {
    build_mangoldt(cutoff)
}

struct Output {
    csv: String,
    rows: usize,
}

fn execute(cli: &Cli) -> Result<(&'static str, Output)> {
    let cfg = cli.precision.resolve()?;
    let mut csv = String::new();
    let mut rows = 0usize;
    let name = match &cli.command {
        Command::Mangoldt { nmax } => {
            let table = table_for(*nmax)?;
            csv.push_str("m,lambda,psi\n");
            let mut psi = crate::summation::CompensatedSum::new();
            for m in 1..=*nmax {
                let lambda = table.get(m).unwrap_or(0.0);
                psi.add(lambda);
                push_row(&mut csv, &[m.to_string(), real(lambda), real(psi.value())]);
                rows += 1;
            }
            "mangoldt"
        }
        Command::Approx {
            n,
            point,
            cutoff,
            bound,
        } => {
            let a = point.point()?;
            let bp = bound.resolve()?;
            let table = table_for(*cutoff)?;
            let report = residual_report(&table, *n, a, *cutoff, &bp, &cfg)?;
            let series = ScanSeries {
                axis: ScanAxis::GridInA,
                entries: vec![report],
            };
            csv = series_csv(&series);
            rows = 1;
            "approx"
        }
        Command::ScanA { n, cutoff, grid, bound } => {
            let bp = bound.resolve()?;
            let a_grid = grid.real()?;
            if *cutoff == 0 {
                return Err(Error::Domain("cutoff N must be >= 1".into()));
            }
            validate_a_grid(*n, &a_grid, &bp)?;
            let table = table_for(*cutoff)?;
            let series = scan_over_a(&table, *n, &a_grid, *cutoff, &bp, &cfg)?;
            rows = series.len();
            csv = series_csv(&series);
            "scan-a"
        }
        Command::ScanN { n, point, grid, bound } => {
            let a = point.point()?;
            let bp = bound.resolve()?;
            regime(a)?;
            let cutoffs = grid.cutoffs()?;
            let limit = cutoffs.last().copied().unwrap_or(1);
            let table = table_for(limit)?;
            let series = scan_over_n_cut(&table, *n, a, &cutoffs, &bp, &cfg)?;
            rows = series.len();
            csv = series_csv(&series);
            "scan-n"
        }
        Command::Li { n, point, cutoff } => {
            let a = point.point()?;
            LiParameters::new(*n, a, *cutoff)?;
            let table = table_for(*cutoff)?;
            csv.push_str("n,a_re,a_im,arithmetic_re,arithmetic_im,derivative_re,derivative_im,gap_abs\n");
            for j in 1..=*n {
                let arith = li_sum_arithmetic_side(&table, j, a, *cutoff, &cfg)?;
                let deriv = li_sum_derivative_side(j, a, &cfg)?;
                push_row(
                    &mut csv,
                    &[
                        j.to_string(),
                        real(a.re),
                        real(a.im),
                        real(arith.re),
                        real(arith.im),
                        real(deriv.re),
                        real(deriv.im),
                        real((arith - deriv).norm()),
                    ],
                );
                rows += 1;
            }
            "li"
        }
        Command::Identities { n, point } => {
            let a = point.point()?;
            if !(a.re > 0.0) {
                return Err(Error::Domain(format!("identities need Re a > 0, got a = {a}")));
            }
            csv.push_str("identity,n,a_re,a_im,closed_re,closed_im,oracle_re,oracle_im,gap_abs\n");
            for j in 1..=*n {
                let pairs = [
                    (
                        "gamma_term",
                        gamma_term_closed_form(j, a, &cfg)?,
                        gamma_term_value(j, a, &cfg)?,
                    ),
                    ("pole_term", pole_term_value(j, a)?, pole_term_oracle(j, a, &cfg)?),
                ];
                for (label, closed, oracle) in pairs {
                    push_row(
                        &mut csv,
                        &[
                            label.to_string(),
                            j.to_string(),
                            real(a.re),
                            real(a.im),
                            real(closed.re),
                            real(closed.im),
                            real(oracle.re),
                            real(oracle.im),
                            real((closed - oracle).norm()),
                        ],
                    );
                    rows += 1;
                }
            }
            "identities"
        }
        Command::Eta { n, cutoff } => {
            if *n == 0 {
                return Err(Error::Domain("order n must be >= 1".into()));
            }
            let table = table_for(*cutoff)?;
            csv.push_str("n,N,value\n");
            for j in 1..=*n {
                let v = eta_coefficient(&table, j, *cutoff)?;
                push_row(&mut csv, &[j.to_string(), cutoff.to_string(), real(v)]);
                rows += 1;
            }
            "eta"
        }
        Command::Oscillation { t, cutoff } => {
            if *t == 0.0 || !t.is_finite() {
                return Err(Error::Domain(format!("height t must be finite and nonzero, got {t}")));
            }
            if *cutoff < 10 {
                return Err(Error::Domain(format!("cutoff N must be >= 10, got {cutoff}")));
            }
            let table = table_for(*cutoff)?;
            csv.push_str("N,value_re,value_im,abs\n");
            let mut big_n = 10usize;
            while big_n <= *cutoff {
                let v = line_one_oscillation(&table, *t, big_n, &cfg)?;
                push_row(&mut csv, &[big_n.to_string(), real(v.re), real(v.im), real(v.norm())]);
                rows += 1;
                match big_n.checked_mul(10) {
                    Some(next) => big_n = next,
                    None => break,
                }
            }
            "oscillation"
        }
    };
    Ok((name, Output { csv, rows }))
}

/// Runs the CLI on `argv` (program name first) and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok((name, output)) => {
            let target = match &cli.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, output.csv.as_bytes()) {
                        eprintln!("logzeta {name}: cannot write {}: {e}", path.display());
                        return 1;
                    }
                    path.display().to_string()
                }
                None => {
                    use std::io::Write;
                    let mut stdout = std::io::stdout().lock();
                    if let Err(e) = stdout.write_all(output.csv.as_bytes()).and_then(|_| stdout.flush()) {
                        eprintln!("logzeta {name}: cannot write to standard output: {e}");
                        return 1;
                    }
                    "standard output".to_string()
                }
            };
            let mut summary = String::new();
            let _ = write!(summary, "logzeta {name}: {} rows written to {target}", output.rows);
            eprintln!("{summary}");
            0
        }
        Err(e) => {
            eprintln!("logzeta: error: {e}");
            if e.is_numerical() {
                2
            } else {
                1
            }
        }
    }
}
