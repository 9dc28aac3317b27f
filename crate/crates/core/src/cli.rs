//! The `baran-spectral` command line driver.
//!
//! Every subcommand produces a report that is written as JSON (default) or
//! CSV to `--output` or stdout. Exit codes: 0 when every tolerance is met, 1
//! on a tolerance failure, 2 on usage or I/O errors.

use crate::bases::{basis_functions, BasisFunction, BasisKey};
use crate::geometry::{
    collar_volume, einstein_constant, einstein_residual_with_constant, geodesic_distance, shoot_geodesic,
    ChartPoint, DomainKind, DomainSpec,
};
use crate::operators::eigen_residual_of;
use crate::quadrature::gram_matrix;
use crate::spectral::{baran_fuzz, project, sobolev_sums};
use crate::sphere::{extremal_eval, ComplexSpherePoint};
use crate::{sampling, Error, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: u32 = 1;

/// Environment variable bounding the worker threads.
pub const THREADS_ENV: &str = "BARAN_SPECTRAL_THREADS";

const MAX_CLI_DIM: usize = 4;
const MAX_CLI_DEGREE: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Parser, Serialize)]
#[command(
    name = "baran-spectral",
    version,
    about = "Spectral geometry of the Baran metric on the ball, simplex and sphere"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Output file (stdout when absent); a directory for `export-basis`.
    #[arg(long, short = 'o', global = true)]
    pub output: Option<PathBuf>,

    /// Seed of the random samples.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct DomainArgs {
    /// ball, simplex or sphere.
    #[arg(long)]
    pub domain: DomainKind,

    /// Dimension (ambient dimension for the sphere).
    #[arg(long)]
    pub n: usize,
}

impl DomainArgs {
    fn spec(&self) -> Result<DomainSpec> {
        if self.n > MAX_CLI_DIM {
            return Err(Error::Parameter(format!("--n must be at most {MAX_CLI_DIM}")));
        }
        DomainSpec::new(self.domain, self.n)
    }
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Eigen-relation residual of every basis function.
    Eigencheck {
        #[command(flatten)]
        domain: DomainArgs,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
        /// Grid points per axis.
        #[arg(long, default_value_t = 40)]
        grid: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Gram matrix of the basis under the equilibrium measure.
    Ortho {
        #[command(flatten)]
        domain: DomainArgs,
        #[arg(long, default_value_t = 5)]
        max_degree: usize,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Expansion of a named test function.
    Project {
        #[command(flatten)]
        domain: DomainArgs,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
        #[arg(long, value_enum, default_value_t = TestFunction::Exp)]
        function: TestFunction,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Distance between two points: closed form and shooting.
    Geodesic {
        #[command(flatten)]
        domain: DomainArgs,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        x: Vec<f64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        y: Vec<f64>,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// Statistics of |Ric - k g| at random interior points.
    Einstein {
        #[command(flatten)]
        domain: DomainArgs,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        /// Einstein constant (default: the value of the domain).
        #[arg(long, allow_hyphen_values = true)]
        k: Option<f64>,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// Baran inequality fuzz test.
    BaranIneq {
        #[command(flatten)]
        domain: DomainArgs,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 10)]
        max_degree: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Equilibrium volume of boundary collars of the ball.
    Collar {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', default_value = "0.1,0.05,0.01")]
        eps: Vec<f64>,
    },
    /// Extremal function along the hyperbolic curve (cosh t, i sinh t, 0, ...).
    SphereExtremal {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, value_delimiter = ',', default_value = "0,0.1,0.25,0.5,0.75,1,1.5,2")]
        t: Vec<f64>,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Grid values of the first basis functions, one CSV per function.
    ExportBasis {
        #[command(flatten)]
        domain: DomainArgs,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        #[arg(long, default_value_t = 64)]
        grid: usize,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Eigencheck { .. } => "eigencheck",
            Command::Ortho { .. } => "ortho",
            Command::Project { .. } => "project",
            Command::Geodesic { .. } => "geodesic",
            Command::Einstein { .. } => "einstein",
            Command::BaranIneq { .. } => "baran-ineq",
            Command::Collar { .. } => "collar",
            Command::SphereExtremal { .. } => "sphere-extremal",
            Command::ExportBasis { .. } => "export-basis",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TestFunction {
    /// exp(x1)
    Exp,
    /// 1 / (1 + 4|x|²)
    Runge,
    /// |x1|
    Abs,
    /// x1³ - 2 x1 + 1
    Cubic,
}

impl TestFunction {
    pub fn eval(&self, x: &[f64]) -> f64 {
        match self {
            TestFunction::Exp => x[0].exp(),
            TestFunction::Runge => 1.0 / (1.0 + 4.0 * crate::geometry::norm_sq(x)),
            TestFunction::Abs => x[0].abs(),
            TestFunction::Cubic => x[0].powi(3) - 2.0 * x[0] + 1.0,
        }
    }
}

/// A rectangular table for CSV output.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    fn new(headers: &[&str]) -> Self {
        Table {
            headers: headers.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut out = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(w);
        let io = |e: csv::Error| Error::Parameter(format!("csv output: {e}"));
        out.write_record(&self.headers).map_err(io)?;
        for r in &self.rows {
            out.write_record(r).map_err(io)?;
        }
        out.flush().map_err(|e| Error::Parameter(format!("csv output: {e}")))?;
        Ok(())
    }
}

/// Result of one subcommand.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub pass: bool,
    pub result: Value,
    pub table: Table,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        if self.pass {
            0
        } else {
            1
        }
    }

    /// JSON document with schema version and the echoed configuration.
    pub fn to_json(&self, config: &RunConfig) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "subcommand": config.command.name(),
            "config": config,
            "pass": self.pass,
            "result": self.result,
        })
    }
}

fn f(v: f64) -> String {
    format!("{v:.17e}")
}

fn check_degree(d: usize) -> Result<()> {
    if d > MAX_CLI_DEGREE {
        return Err(Error::Parameter(format!("--max-degree must be at most {MAX_CLI_DEGREE}")));
    }
    Ok(())
}

fn key_label(k: &BasisKey) -> String {
    match k {
        BasisKey::Multi(a) => a.alpha().iter().map(|v| v.to_string()).collect::<Vec<_>>().join("-"),
        BasisKey::Harmonic { l, m } => format!("l{l}m{m}"),
    }
}

fn eigencheck(d: DomainSpec, max_degree: usize, grid: usize, tol: f64) -> Result<Report> {
    check_degree(max_degree)?;
    let basis = basis_functions(d, max_degree)?;
    let res: Vec<f64> = basis
        .iter()
        .map(|b| eigen_residual_of(b, grid))
        .collect::<Result<_>>()?;
    let mut table = Table::new(&["index", "degree", "eigenvalue", "residual", "pass"]);
    let mut rows = Vec::new();
    for (b, r) in basis.iter().zip(&res) {
        table.push(vec![
            b.key().to_string(),
            b.degree().to_string(),
            f(b.eigenvalue()),
            f(*r),
            (*r <= tol).to_string(),
        ]);
        rows.push(json!({"index": b.key(), "degree": b.degree(), "eigenvalue": b.eigenvalue(), "residual": r}));
    }
    let worst = res.iter().copied().fold(0.0, f64::max);
    Ok(Report {
        pass: worst <= tol,
        result: json!({"count": basis.len(), "max_residual": worst, "tolerance": tol, "residuals": rows}),
        table,
    })
}

fn ortho(d: DomainSpec, max_degree: usize, tol: f64) -> Result<Report> {
    check_degree(max_degree)?;
    let g = gram_matrix(d, max_degree)?;
    let ratio = g.max_off_diagonal_ratio();
    let norm_dev = g.max_norm_deviation();
    let mut table = Table::new(&["index", "degree", "gram_diagonal", "closed_form_norm_sq", "ratio"]);
    for (i, b) in g.basis.iter().enumerate() {
        let gd = g.matrix[(i, i)];
        table.push(vec![
            b.key().to_string(),
            b.degree().to_string(),
            f(gd),
            f(b.norm_sq()),
            f(gd / b.norm_sq()),
        ]);
    }
    Ok(Report {
        pass: ratio <= tol,
        result: json!({
            "count": g.basis.len(),
            "max_off_diagonal_ratio": ratio,
            "max_norm_deviation": norm_dev,
            "tolerance": tol,
        }),
        table,
    })
}

fn project_cmd(d: DomainSpec, max_degree: usize, func: TestFunction, tol: f64) -> Result<Report> {
    check_degree(max_degree)?;
    let e = project(d, |x| func.eval(x), max_degree)?;
    let sums = sobolev_sums(&e);
    // ‖f‖² with the finest rule available
    let rule = crate::quadrature::domain_rule(d, crate::quadrature::MAX_EXACTNESS)?;
    let norm_sq = rule.integrate(|x| func.eval(x).powi(2));
    let energy = e.energy();
    let mut table = Table::new(&["index", "degree", "coefficient"]);
    for (b, c) in e.basis().iter().zip(e.coeffs()) {
        table.push(vec![b.key().to_string(), b.degree().to_string(), f(*c)]);
    }
    Ok(Report {
        pass: energy <= norm_sq + tol,
        result: json!({
            "function": func,
            "parseval_sum": energy,
            "l2_norm_sq": norm_sq,
            "sobolev": sums,
            "coefficients": e.basis().iter().zip(e.coeffs()).map(|(b, c)| json!({"index": b.key(), "value": c})).collect::<Vec<_>>(),
        }),
        table,
    })
}

fn geodesic_cmd(d: DomainSpec, x: &[f64], y: &[f64], tol: f64) -> Result<Report> {
    let px = ChartPoint::new(d, x.to_vec())?;
    let py = ChartPoint::new(d, y.to_vec())?;
    let closed = geodesic_distance(d, &px, &py)?;
    let shot = shoot_geodesic(d, &px, &py);
    let mut table = Table::new(&["closed_form", "shooting", "difference"]);
    let (pass, result) = match shot {
        Ok(s) => {
            let diff = (s.distance - closed).abs();
            table.push(vec![f(closed), f(s.distance), f(diff)]);
            (
                diff <= tol,
                json!({"closed_form": closed, "shooting": s.distance, "difference": diff,
                       "newton_iterations": s.iterations, "endpoint_error": s.endpoint_error, "tolerance": tol}),
            )
        }
        Err(e) => {
            table.push(vec![f(closed), String::new(), String::new()]);
            (false, json!({"closed_form": closed, "shooting_error": e.to_string()}))
        }
    };
    Ok(Report { pass, result, table })
}

/// Interior sample used by the Einstein statistics: ball `|x| ≤ 0.8`,
/// simplex barycentric coordinates `≥ 0.1`.
pub fn einstein_sample<R: rand::Rng + ?Sized>(rng: &mut R, d: DomainSpec) -> Vec<f64> {
    match d.kind() {
        DomainKind::Ball => sampling::interior_point(rng, d, 0.2),
        DomainKind::Simplex => sampling::interior_point(rng, d, 0.1),
        DomainKind::Sphere => sampling::unit_vector(rng, d.n()),
    }
}

fn einstein_cmd(d: DomainSpec, samples: usize, k: Option<f64>, tol: f64, seed: u64) -> Result<Report> {
    let k = k.unwrap_or_else(|| einstein_constant(d));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts: Vec<Vec<f64>> = (0..samples).map(|_| einstein_sample(&mut rng, d)).collect();
    let res: Vec<f64> = pts
        .par_iter()
        .map(|x| einstein_residual_with_constant(d, &ChartPoint::new(d, x.clone())?, k))
        .collect::<Result<_>>()?;
    let mut table = Table::new(&["point", "residual"]);
    for (x, r) in pts.iter().zip(&res) {
        table.push(vec![x.iter().map(|v| format!("{v:.6}")).collect::<Vec<_>>().join(" "), f(*r)]);
    }
    let max = res.iter().copied().fold(0.0, f64::max);
    let mean = res.iter().sum::<f64>() / res.len().max(1) as f64;
    Ok(Report {
        pass: max <= tol,
        result: json!({"k": k, "samples": samples, "max_residual": max, "mean_residual": mean, "tolerance": tol}),
        table,
    })
}

fn baran_cmd(d: DomainSpec, samples: usize, max_degree: usize, tol: f64, seed: u64) -> Result<Report> {
    check_degree(max_degree)?;
    let r = baran_fuzz(d, samples, max_degree, seed, tol)?;
    let mut table = Table::new(&["samples", "max_degree", "min_margin", "violations"]);
    table.push(vec![
        r.samples.to_string(),
        r.max_degree.to_string(),
        f(r.min_margin),
        r.violations.to_string(),
    ]);
    Ok(Report {
        pass: r.violations == 0,
        result: serde_json::to_value(&r).expect("serialisable"),
        table,
    })
}

fn collar_cmd(n: usize, eps: &[f64]) -> Result<Report> {
    let mut table = Table::new(&["eps", "volume", "log_ratio", "volume_over_eps2"]);
    let mut rows = Vec::new();
    let mut pass = true;
    for &e in eps {
        let v = collar_volume(n, e)?;
        let lr = v.ln() / e.ln();
        pass &= lr < 2.0;
        table.push(vec![f(e), f(v), f(lr), f(v / (e * e))]);
        rows.push(json!({"eps": e, "volume": v, "log_ratio": lr, "volume_over_eps2": v / (e * e)}));
    }
    Ok(Report {
        pass,
        result: json!({"n": n, "rows": rows}),
        table,
    })
}

fn extremal_cmd(n: usize, ts: &[f64], tol: f64) -> Result<Report> {
    let mut table = Table::new(&["t", "v_star", "error"]);
    let mut rows = Vec::new();
    let mut worst = 0.0f64;
    for &t in ts {
        let v = extremal_eval(&ComplexSpherePoint::hyperbolic(n, t)?);
        let err = (v - t.abs()).abs();
        worst = worst.max(err);
        table.push(vec![f(t), f(v), f(err)]);
        rows.push(json!({"t": t, "v_star": v, "error": err}));
    }
    Ok(Report {
        pass: worst <= tol,
        result: json!({"n": n, "max_error": worst, "rows": rows, "tolerance": tol}),
        table,
    })
}

/// Grid for exported basis values: tensor grid with endpoints, clipped to the
/// interior with margin `1e-3`; sphere grids use polar angles.
pub fn export_grid(d: DomainSpec, grid: usize) -> Vec<Vec<f64>> {
    let g = grid.max(2);
    let lin = |lo: f64, hi: f64| -> Vec<f64> { (0..g).map(|i| lo + (hi - lo) * i as f64 / (g - 1) as f64).collect() };
    let margin = crate::operators::GRID_MARGIN;
    match d.kind() {
        DomainKind::Sphere => {
            let pi = std::f64::consts::PI;
            if d.n() == 2 {
                return (0..g)
                    .map(|i| {
                        let a = 2.0 * pi * i as f64 / g as f64;
                        vec![a.cos(), a.sin()]
                    })
                    .collect();
            }
            let th = lin(margin, pi - margin);
            let mut out = Vec::new();
            for t in th {
                for j in 0..2 * g {
                    let p = pi * j as f64 / g as f64;
                    let mut x = vec![t.sin() * p.cos(), t.sin() * p.sin(), t.cos()];
                    x.resize(d.n(), 0.0);
                    out.push(x);
                }
            }
            out
        }
        kind => {
            let axis = if kind == DomainKind::Ball { lin(-1.0, 1.0) } else { lin(0.0, 1.0) };
            let n = d.n();
            let mut out = Vec::new();
            let mut idx = vec![0usize; n];
            for _ in 0..g.pow(n as u32) {
                let x: Vec<f64> = idx.iter().map(|&i| axis[i]).collect();
                let ok = match kind {
                    DomainKind::Ball => crate::geometry::norm_sq(&x).sqrt() <= 1.0 - margin,
                    _ => {
                        let gap = 1.0 - x.iter().sum::<f64>();
                        x.iter().copied().fold(gap, f64::min) >= margin
                    }
                };
                if ok {
                    out.push(x);
                }
                for k in (0..n).rev() {
                    idx[k] += 1;
                    if idx[k] < g {
                        break;
                    }
                    idx[k] = 0;
                }
            }
            out
        }
    }
}

fn export_cmd(d: DomainSpec, max_degree: usize, grid: usize, dir: &Path) -> Result<Report> {
    check_degree(max_degree)?;
    let basis: Vec<BasisFunction> = match d.kind() {
        DomainKind::Sphere if d.n() > 3 => (0..=max_degree)
            .map(|l| BasisFunction::harmonic(DomainSpec::sphere(3)?, l, 0))
            .collect::<Result<_>>()?,
        _ => basis_functions(d, max_degree)?,
    };
    if d.kind() == DomainKind::Sphere && d.n() > 3 {
        return Err(Error::Parameter("export-basis supports spheres with n <= 3".into()));
    }
    std::fs::create_dir_all(dir).map_err(|e| Error::Parameter(format!("cannot create {}: {e}", dir.display())))?;
    let pts = export_grid(d, grid);
    let n = d.n();
    let mut headers: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    headers.push("value".into());
    let mut table = Table::new(&["index", "degree", "file", "points"]);
    let mut files = Vec::new();
    for (k, b) in basis.iter().enumerate() {
        let name = format!("basis_{k:03}_{}.csv", key_label(b.key()));
        let path = dir.join(&name);
        let mut t = Table {
            headers: headers.clone(),
            rows: Vec::with_capacity(pts.len()),
        };
        for x in &pts {
            let mut row: Vec<String> = x.iter().map(|v| format!("{v:.6}")).collect();
            row.push(f(b.eval(x)));
            t.rows.push(row);
        }
        let file = std::fs::File::create(&path)
            .map_err(|e| Error::Parameter(format!("cannot write {}: {e}", path.display())))?;
        t.write_csv(std::io::BufWriter::new(file))?;
        table.push(vec![b.key().to_string(), b.degree().to_string(), name.clone(), pts.len().to_string()]);
        files.push(json!({"index": b.key(), "file": name}));
    }
    Ok(Report {
        pass: true,
        result: json!({"count": basis.len(), "points_per_file": pts.len(), "directory": dir, "files": files}),
        table,
    })
}

/// Runs the configured subcommand.
pub fn run(config: &RunConfig) -> Result<Report> {
    match &config.command {
        Command::Eigencheck {
            domain,
            max_degree,
            grid,
            tol,
        } => eigencheck(domain.spec()?, *max_degree, *grid, *tol),
        Command::Ortho { domain, max_degree, tol } => ortho(domain.spec()?, *max_degree, *tol),
        Command::Project {
            domain,
            max_degree,
            function,
            tol,
        } => project_cmd(domain.spec()?, *max_degree, *function, *tol),
        Command::Geodesic { domain, x, y, tol } => geodesic_cmd(domain.spec()?, x, y, *tol),
        Command::Einstein { domain, samples, k, tol } => einstein_cmd(domain.spec()?, *samples, *k, *tol, config.seed),
        Command::BaranIneq {
            domain,
            samples,
            max_degree,
            tol,
        } => baran_cmd(domain.spec()?, *samples, *max_degree, *tol, config.seed),
        Command::Collar { n, eps } => collar_cmd(*n, eps),
        Command::SphereExtremal { n, t, tol } => extremal_cmd(*n, t, *tol),
        Command::ExportBasis {
            domain,
            max_degree,
            grid,
        } => {
            let dir = config.output.clone().unwrap_or_else(|| PathBuf::from("basis_export"));
            export_cmd(domain.spec()?, *max_degree, *grid, &dir)
        }
    }
}

/// Writes a report in the configured format. `export-basis` always prints
/// its summary to stdout because `--output` names the CSV directory.
pub fn write_report(config: &RunConfig, report: &Report) -> Result<()> {
    let to_file = match (&config.command, &config.output) {
        (Command::ExportBasis { .. }, _) | (_, None) => None,
        (_, Some(p)) => Some(p.clone()),
    };
    let mut sink: Box<dyn Write> = match &to_file {
        Some(p) => Box::new(std::io::BufWriter::new(
            std::fs::File::create(p).map_err(|e| Error::Parameter(format!("cannot write {}: {e}", p.display())))?,
        )),
        None => Box::new(std::io::stdout().lock()),
    };
    match config.format {
        Format::Json => {
            let text = serde_json::to_string_pretty(&report.to_json(config)).expect("serialisable");
            writeln!(sink, "{text}").map_err(|e| Error::Parameter(format!("write failed: {e}")))?;
        }
        Format::Csv => report.table.write_csv(&mut sink)?,
    }
    sink.flush().map_err(|e| Error::Parameter(format!("write failed: {e}")))?;
    Ok(())
}

fn configure_threads() {
    if let Some(n) = std::env::var(THREADS_ENV).ok().and_then(|v| v.parse::<usize>().ok()) {
        if n > 0 {
            // a second initialisation in the same process is harmless
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

/// Parses `args`, runs, writes the report and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    configure_threads();
    match run(&config).and_then(|r| write_report(&config, &r).map(|_| r)) {
        Ok(r) => r.exit_code(),
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> RunConfig {
        RunConfig::try_parse_from(std::iter::once("baran-spectral").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn parses_lists_and_defaults() {
        let c = parse(&["collar", "--n", "2", "--eps", "0.1,0.05"]);
        match &c.command {
            Command::Collar { n, eps } => {
                assert_eq!(*n, 2);
                assert_eq!(eps, &vec![0.1, 0.05]);
            }
            _ => panic!(),
        }
        assert_eq!(c.seed, 0);
        assert_eq!(c.format, Format::Json);
        let g = parse(&["geodesic", "--domain", "ball", "--n", "2", "--x", "-0.1,0.2", "--y", "0,0"]);
        assert!(matches!(g.command, Command::Geodesic { .. }));
    }

    #[test]
    fn usage_errors() {
        assert!(RunConfig::try_parse_from(["baran-spectral", "frobnicate"]).is_err());
        assert!(RunConfig::try_parse_from(["baran-spectral", "collar", "--n", "two"]).is_err());
        let c = parse(&["ortho", "--domain", "ball", "--n", "7"]);
        assert!(matches!(run(&c), Err(Error::Parameter(_))));
        let c = parse(&["ortho", "--domain", "ball", "--n", "2", "--max-degree", "11"]);
        assert!(run(&c).is_err());
    }

    #[test]
    fn collar_report() {
        let c = parse(&["collar", "--n", "2"]);
        let r = run(&c).unwrap();
        assert!(r.pass);
        assert_eq!(r.table.rows.len(), 3);
        let j = r.to_json(&c);
        assert_eq!(j["schema_version"], SCHEMA_VERSION);
        assert_eq!(j["config"]["command"]["collar"]["n"], 2);
    }

    #[test]
    fn extremal_report() {
        let r = run(&parse(&["sphere-extremal"])).unwrap();
        assert!(r.pass);
    }
}
