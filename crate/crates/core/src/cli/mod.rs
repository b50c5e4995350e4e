//! Command-line front end.
//!
//! Every subcommand produces a CSV table (header row, `.` decimal point,
//! 17 significant digits) plus a list of internal tolerance checks. Exit
//! codes: 0 when every check passes, 1 when a check fails (one
//! `FAIL check=... observed=... tolerance=...` line per failure on stderr),
//! 2 on usage and domain errors.

pub mod catalog;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::almost_periodic::{self, TrigPolynomial};
use crate::circle::{self, SampledCircleFunction};
use crate::error::{Error, Result};
use crate::groups::{self, FiniteAbelianGroup, GroupFunction};
use crate::line;
use crate::numerics::{cis, circle_mean, CircleGrid, LineQuadrature, Tolerances, C64};

use catalog::{load_trig, parse_line_function, CircleSpec};

#[derive(Debug, Parser)]
#[command(name = "harmonia", version, about = "Numerical harmonic analysis tables as CSV")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Tolerance for identities exact up to rounding.
    #[arg(long = "tol-exact", global = true, default_value_t = 1e-12)]
    pub tol_exact: f64,

    /// Tolerance for quadrature-limited identities.
    #[arg(long = "tol-quad", global = true, default_value_t = 1e-6)]
    pub tol_quad: f64,

    /// Write the CSV here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fourier coefficients of a circle function for |j| <= J.
    CircleCoeffs {
        spec: String,
        #[arg(long = "J", default_value_t = 4)]
        window: i64,
        #[arg(long, default_value_t = 256)]
        n: usize,
    },
    /// Abel means by the coefficient series and by the Poisson integral.
    AbelMean {
        spec: String,
        #[arg(long, default_value_t = 0.5)]
        r: f64,
        #[arg(long, default_value_t = 1024)]
        n: usize,
        /// Number of evaluation points on the circle.
        #[arg(long, default_value_t = 16)]
        points: usize,
    },
    /// Poisson kernel p_r(1, e^{i theta}) on an n-point grid.
    PoissonKernel {
        #[arg(long, default_value_t = 0.5)]
        r: f64,
        #[arg(long, default_value_t = 64)]
        n: usize,
    },
    /// Quadrature transform of a line function against its closed form.
    LineTransform {
        spec: String,
        /// Comma-separated frequencies.
        #[arg(long, default_value = "-2,-1,-0.5,0,0.5,1,2")]
        xi: String,
        #[arg(long = "half-width", default_value_t = 40.0)]
        half_width: f64,
        #[arg(long, default_value_t = 80_000)]
        n: usize,
    },
    /// Fourier transform on a finite abelian group.
    GroupDft {
        /// Cyclic orders, e.g. "4,3,2".
        group: String,
        /// CSV with one row per element: `re` or `re,im`.
        function: PathBuf,
    },
    /// Interval averages of a trigonometric polynomial over [-T, T].
    ApMean {
        /// Polynomial file with lines `t, re, im`.
        poly: PathBuf,
        #[arg(long = "T", default_value = "10,100,1000")]
        t_values: String,
    },
    /// Error tables for Abel, Poisson and Bohr-mean convergence.
    Convergence {
        #[arg(value_enum)]
        kind: ConvergenceKind,
        /// Circle spec (abel_circle), line spec (poisson_line) or
        /// polynomial file (ap_mean).
        #[arg(long)]
        spec: Option<String>,
        /// Comma-separated parameter values (r, y or T).
        #[arg(long)]
        params: Option<String>,
        #[arg(long, default_value_t = 4096)]
        n: usize,
        /// Evaluation point for poisson_line.
        #[arg(long, default_value_t = 0.5)]
        x: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConvergenceKind {
    #[value(name = "abel_circle")]
    AbelCircle,
    #[value(name = "poisson_line")]
    PoissonLine,
    #[value(name = "ap_mean")]
    ApMean,
}

/// A failed internal check.
#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub check: String,
    pub observed: f64,
    pub tolerance: f64,
}

impl Failure {
    pub fn line(&self) -> String {
        format!(
            "FAIL check={} observed={:.6e} tolerance={:.6e}",
            self.check, self.observed, self.tolerance
        )
    }
}

/// CSV output together with the outcome of the internal checks.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Report {
    pub csv: String,
    pub failures: Vec<Failure>,
}

impl Report {
    fn header(cols: &[&str]) -> Self {
        Report {
            csv: format!("{}\n", cols.join(",")),
            failures: Vec::new(),
        }
    }

    fn row(&mut self, fields: &[String]) {
        self.csv.push_str(&fields.join(","));
        self.csv.push('\n');
    }

    fn check(&mut self, name: &str, observed: f64, tolerance: f64) {
        if !(observed <= tolerance) {
            self.failures.push(Failure {
                check: name.to_string(),
                observed,
                tolerance,
            });
        }
    }
}

/// 17 significant digits; negative zero prints as zero.
pub fn fmt_num(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

/// Like [`fmt_num`] but values below `eps` in modulus print as zero.
pub fn fmt_chop(x: f64, eps: f64) -> String {
    fmt_num(if x.abs() < eps { 0.0 } else { x })
}

fn parse_list(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|v| v.trim().parse::<f64>().map_err(|_| Error::Parse(format!("bad number {v:?} in list {s:?}"))))
        .collect()
}

pub fn cmd_circle_coeffs(spec: &str, window: i64, n: usize, tol: &Tolerances) -> Result<Report> {
    let f = CircleSpec::parse(spec)?;
    let sampled = SampledCircleFunction::from_fn(n, |t| f.eval(t))?;
    let series = circle::coefficient_window(&sampled, window)?;
    let mut rep = Report::header(&["j", "re", "im"]);
    for j in -window..=window {
        let c = series.get(j);
        rep.row(&[j.to_string(), fmt_chop(c.re, tol.exact_eps), fmt_chop(c.im, tol.exact_eps)]);
    }
    // Bessel: the window never carries more energy than the samples
    rep.check("bessel", series.energy() - sampled.l2_mass(), tol.exact_eps);
    Ok(rep)
}

pub fn cmd_abel_mean(spec: &str, r: f64, n: usize, points: usize, tol: &Tolerances) -> Result<Report> {
    let f = CircleSpec::parse(spec)?;
    let sampled = SampledCircleFunction::from_fn(n, |t| f.eval(t))?;
    let window = ((n - 1) / 2) as i64;
    let series = circle::coefficient_window(&sampled, window)?;
    let out_grid = CircleGrid::new(points)?;
    let mut rep = Report::header(&["theta", "series_re", "series_im", "integral_re", "integral_im"]);
    let mut worst: f64 = 0.0;
    for k in 0..points {
        let theta = out_grid.angle(k);
        let z = cis(theta);
        let s = circle::abel_mean_series(&series, r, z)?;
        let i = circle::abel_mean_integral(&sampled, r, z)?;
        worst = worst.max((s - i).norm());
        rep.row(&[fmt_num(theta), fmt_num(s.re), fmt_num(s.im), fmt_num(i.re), fmt_num(i.im)]);
    }
    rep.check("abel_dual_route", worst, tol.quad_eps);
    Ok(rep)
}

pub fn cmd_poisson_kernel(r: f64, n: usize, tol: &Tolerances) -> Result<Report> {
    let grid = CircleGrid::new(n)?;
    let mut rep = Report::header(&["theta", "kernel"]);
    let mut values = Vec::with_capacity(n);
    for k in 0..n {
        let p = circle::poisson_kernel(r, grid.point(k), C64::new(1.0, 0.0))?;
        values.push(C64::new(p, 0.0));
        rep.row(&[fmt_num(grid.angle(k)), fmt_num(p)]);
    }
    let mean = circle_mean(&values)?;
    rep.check("normalization", (mean - 1.0).norm(), tol.quad_eps);
    Ok(rep)
}

pub fn cmd_line_transform(spec: &str, xi_list: &str, half_width: f64, n: usize, tol: &Tolerances) -> Result<Report> {
    let f = parse_line_function(spec)?;
    let q = LineQuadrature::new(half_width, n)?;
    let mut rep = Report::header(&["xi", "quad_re", "quad_im", "exact_re", "exact_im"]);
    for xi in parse_list(xi_list)? {
        let quad = line::fourier_transform_quadrature(&f, xi, &q, tol)?.value;
        let exact = catalog::line_transform_exact(spec, &f, xi).ok_or_else(|| Error::domain("no closed form"))?;
        rep.row(&[fmt_num(xi), fmt_num(quad.re), fmt_num(quad.im), fmt_num(exact.re), fmt_num(exact.im)]);
        rep.check(&format!("transform_xi={xi}"), (quad - exact).norm(), tol.quad_eps);
    }
    Ok(rep)
}

/// Reads one complex value per row: `re` or `re,im`; a non-numeric first
/// row is treated as a header.
pub fn read_function_csv(text: &str) -> Result<Vec<C64>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut values = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record.map_err(|e| Error::Parse(e.to_string()))?;
        let fields: Vec<&str> = record.iter().filter(|s| !s.is_empty()).collect();
        if fields.is_empty() {
            continue;
        }
        let parsed: std::result::Result<Vec<f64>, _> = fields.iter().map(|s| s.parse::<f64>()).collect();
        match parsed {
            Ok(nums) if nums.len() == 1 => values.push(C64::new(nums[0], 0.0)),
            Ok(nums) if nums.len() == 2 => values.push(C64::new(nums[0], nums[1])),
            Ok(_) => return Err(Error::Parse(format!("row {}: expected `re` or `re,im`", i + 1))),
            Err(_) if i == 0 => continue,
            Err(_) => return Err(Error::Parse(format!("row {}: not a number", i + 1))),
        }
    }
    Ok(values)
}

pub fn cmd_group_dft(group_spec: &str, function_csv: &str, tol: &Tolerances) -> Result<Report> {
    let g = FiniteAbelianGroup::parse(group_spec)?;
    let values = read_function_csv(function_csv)?;
    if values.len() != g.order() {
        return Err(Error::domain(format!(
            "function has {} values but group {} has {} elements",
            values.len(),
            g,
            g.order()
        )));
    }
    let f = GroupFunction::new(&g, values)?;
    let spectrum = groups::transform(&f);
    let mut cols: Vec<String> = (0..g.orders().len()).map(|i| format!("m{i}")).collect();
    cols.push("re".into());
    cols.push("im".into());
    let col_refs: Vec<&str> = cols.iter().map(String::as_str).collect();
    let mut rep = Report::header(&col_refs);
    for (m, c) in spectrum.coeffs().iter().enumerate() {
        let mut row: Vec<String> = g.tuple(m).iter().map(|v| v.to_string()).collect();
        row.push(fmt_chop(c.re, tol.exact_eps));
        row.push(fmt_chop(c.im, tol.exact_eps));
        rep.row(&row);
    }
    let (lhs, rhs) = (spectrum.energy(), f.l2_norm_sq());
    let mut footer = vec!["parseval".to_string()];
    footer.extend(std::iter::repeat_n(String::new(), g.orders().len().saturating_sub(1)));
    footer.push(fmt_num(lhs));
    footer.push(fmt_num(rhs));
    rep.row(&footer);
    rep.check("parseval", (lhs - rhs).abs(), tol.exact_eps * rhs.max(1.0));
    Ok(rep)
}

pub fn cmd_ap_mean(poly: &TrigPolynomial, t_values: &[f64], tol: &Tolerances) -> Result<Report> {
    let exact = almost_periodic::mean_exact(poly);
    let mut rep = Report::header(&["T", "re", "im", "error", "bound"]);
    for &t in t_values {
        let avg = almost_periodic::mean_interval(poly, -t, t)?;
        let err = (avg.value - exact).norm();
        rep.row(&[fmt_num(t), fmt_num(avg.value.re), fmt_num(avg.value.im), fmt_num(err), fmt_num(avg.rate_bound)]);
        rep.check(&format!("rate_T={t}"), err - avg.rate_bound, tol.exact_eps);
    }
    Ok(rep)
}

/// Error tables; the error column must be nonincreasing up to a factor 2.
pub fn cmd_convergence(
    kind: ConvergenceKind,
    spec: Option<&str>,
    params: Option<&str>,
    n: usize,
    x: f64,
    tol: &Tolerances,
) -> Result<Report> {
    let mut rep = Report::header(&["parameter", "error"]);
    let mut errors = Vec::new();
    match kind {
        ConvergenceKind::AbelCircle => {
            let f = CircleSpec::parse(spec.unwrap_or("cos"))?;
            let rs = parse_list(params.unwrap_or("0.9,0.99,0.999"))?;
            let sampled = SampledCircleFunction::from_fn(n, |t| f.eval(t))?;
            let series = circle::coefficient_window(&sampled, ((n - 1) / 2) as i64)?;
            for r in rs {
                let mut err: f64 = 0.0;
                for (k, v) in sampled.values().iter().enumerate() {
                    let a = circle::abel_mean_series(&series, r, sampled.grid().point(k))?;
                    err = err.max((a - v).norm());
                }
                errors.push((r, err));
            }
        }
        ConvergenceKind::PoissonLine => {
            let spec = spec.unwrap_or("c:1");
            let f = parse_line_function(spec)?;
            let ys = parse_list(params.unwrap_or("0.4,0.2,0.1"))?;
            for y in ys {
                let a = line::poisson_halfplane(&f, x, y, tol)?;
                errors.push((y, (a.value - f.eval(x)).norm()));
            }
        }
        ConvergenceKind::ApMean => {
            let poly = match spec {
                Some(path) => load_trig(std::path::Path::new(path))?,
                None => TrigPolynomial::exp(1.0),
            };
            let exact = almost_periodic::mean_exact(&poly);
            for t in parse_list(params.unwrap_or("10,100,1000"))? {
                let avg = almost_periodic::mean_interval(&poly, -t, t)?;
                let err = (avg.value - exact).norm();
                rep.check(&format!("rate_T={t}"), err - avg.rate_bound, tol.exact_eps);
                errors.push((t, err));
            }
        }
    }
    for (p, e) in &errors {
        rep.row(&[fmt_num(*p), fmt_num(*e)]);
    }
    for w in errors.windows(2) {
        rep.check(&format!("monotone_at={}", w[1].0), w[1].1 - 2.0 * w[0].1, tol.exact_eps);
    }
    Ok(rep)
}

fn read_file(path: &std::path::Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

pub fn execute(cli: &Cli) -> Result<Report> {
    let tol = Tolerances::new(cli.tol_exact, cli.tol_quad)?;
    match &cli.command {
        Command::CircleCoeffs { spec, window, n } => cmd_circle_coeffs(spec, *window, *n, &tol),
        Command::AbelMean { spec, r, n, points } => cmd_abel_mean(spec, *r, *n, *points, &tol),
        Command::PoissonKernel { r, n } => cmd_poisson_kernel(*r, *n, &tol),
        Command::LineTransform { spec, xi, half_width, n } => cmd_line_transform(spec, xi, *half_width, *n, &tol),
        Command::GroupDft { group, function } => cmd_group_dft(group, &read_file(function)?, &tol),
        Command::ApMean { poly, t_values } => cmd_ap_mean(&load_trig(poly)?, &parse_list(t_values)?, &tol),
        Command::Convergence { kind, spec, params, n, x } => {
            cmd_convergence(*kind, spec.as_deref(), params.as_deref(), *n, *x, &tol)
        }
    }
}

/// Parses arguments, runs the subcommand and returns the process exit code.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let report = match execute(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &report.csv).map_err(|e| e.to_string()),
        None => std::io::stdout().write_all(report.csv.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return 2;
    }
    let mut msg = String::new();
    for f in &report.failures {
        let _ = writeln!(msg, "{}", f.line());
    }
    if report.failures.is_empty() {
        0
    } else {
        eprint!("{msg}");
        1
    }
}
