//! Command-line front end. All output is CSV with `#` header lines.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::analysis::{
    admissible, convergence_study, lebesgue_bound, lebesgue_constant, lemma_sum_trials, sweep_theta, JacobiWeightU,
    DEFAULT_GRID_SIZE,
};
use crate::basis::DegreePair;
use crate::chebyshev::{nodes, ChebyshevKind};
use crate::error::VpError;
use crate::interp1d::VpInterpolant;
use crate::interp2d::{interpolate2d, BivariateSpec, GridSamples};
use crate::matrix::BlockMatrix;
use crate::simultaneous::{evaluate_deriv, DerivativeRequest};
use crate::testfn::{TestFunction, TestFunction2d};

pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Numeric(#[from] VpError),
    #[error("{path}:{line}: {msg}")]
    Input { path: String, line: usize, msg: String },
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => EXIT_USAGE,
            CliError::Numeric(_) | CliError::Input { .. } => EXIT_NUMERIC,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "vpinterp", version, about = "Filtered VP interpolation at Chebyshev nodes")]
pub struct Cli {
    /// Write output to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Nodes, angles and Christoffel numbers.
    Nodes {
        #[arg(long)]
        kind: ChebyshevKind,
        #[arg(long)]
        n: usize,
    },
    /// Evaluate a univariate interpolant or one of its derivatives.
    Interp(InterpArgs),
    /// Evaluate a bivariate interpolant on a target grid.
    Interp2d(Interp2dArgs),
    /// Lebesgue constant and its bound.
    Lebesgue(LebesgueArgs),
    /// Lebesgue constants over a list of theta = m / n.
    SweepTheta {
        #[arg(long)]
        kind: ChebyshevKind,
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', default_value = "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9")]
        thetas: Vec<f64>,
        #[arg(long, default_value_t = DEFAULT_GRID_SIZE)]
        grid: usize,
    },
    /// Error table of (V_n^m f)^(r) for m = theta n.
    Converge(ConvergeArgs),
    /// Random checks of the discrete sum inequality for trigonometric polynomials.
    LemmaTest {
        #[arg(long)]
        kind: ChebyshevKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        nu: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
pub struct InterpArgs {
    #[arg(long)]
    pub kind: ChebyshevKind,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: usize,
    /// Built-in test function.
    #[arg(
        long = "fn",
        value_name = "NAME",
        required_unless_present = "samples",
        conflicts_with = "samples"
    )]
    pub func: Option<TestFunction>,
    /// File with the n node samples, one per line.
    #[arg(long, value_name = "FILE")]
    pub samples: Option<PathBuf>,
    /// File with evaluation points, one per line.
    #[arg(long, value_name = "FILE", required_unless_present = "grid", conflicts_with = "grid")]
    pub points: Option<PathBuf>,
    /// Evaluate on N equispaced points of [-1, 1].
    #[arg(long, value_name = "N")]
    pub grid: Option<usize>,
    /// Derivative order.
    #[arg(long)]
    pub deriv: Option<usize>,
}

#[derive(Debug, Args)]
pub struct Interp2dArgs {
    #[arg(long)]
    pub kind1: ChebyshevKind,
    #[arg(long)]
    pub kind2: ChebyshevKind,
    #[arg(long)]
    pub n1: usize,
    #[arg(long)]
    pub n2: usize,
    #[arg(long)]
    pub m1: usize,
    #[arg(long)]
    pub m2: usize,
    /// Built-in function: `f*g`, a single name `f` for f(x) f(y), or `runge2d`.
    #[arg(
        long = "fn",
        value_name = "NAME",
        required_unless_present = "samples",
        conflicts_with = "samples"
    )]
    pub func: Option<TestFunction2d>,
    /// n1 x n2 sample matrix, comma separated rows.
    #[arg(long, value_name = "FILE")]
    pub samples: Option<PathBuf>,
    /// Evaluate at the interpolation grid itself.
    #[arg(long, conflicts_with_all = ["xs", "ys", "grid_x", "grid_y"])]
    pub at_nodes: bool,
    #[arg(long, value_name = "FILE", conflicts_with = "grid_x")]
    pub xs: Option<PathBuf>,
    #[arg(long, value_name = "FILE", conflicts_with = "grid_y")]
    pub ys: Option<PathBuf>,
    #[arg(long, value_name = "N")]
    pub grid_x: Option<usize>,
    #[arg(long, value_name = "N")]
    pub grid_y: Option<usize>,
}

#[derive(Debug, Args)]
pub struct LebesgueArgs {
    #[arg(long)]
    pub kind: ChebyshevKind,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: usize,
    /// Exponent of (1 - x); defaults to the sqrt(w phi) weight.
    #[arg(long, requires = "delta")]
    pub gamma: Option<f64>,
    /// Exponent of (1 + x).
    #[arg(long, requires = "gamma")]
    pub delta: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_GRID_SIZE)]
    pub grid: usize,
}

#[derive(Debug, Args)]
pub struct ConvergeArgs {
    #[arg(long)]
    pub kind: ChebyshevKind,
    #[arg(long = "fn", value_name = "NAME")]
    pub func: TestFunction,
    #[arg(long)]
    pub theta: f64,
    #[arg(long, value_delimiter = ',', required = true)]
    pub n_list: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    pub deriv: usize,
    #[arg(long, default_value_t = 0.0)]
    pub gamma: f64,
    #[arg(long, default_value_t = 0.0)]
    pub delta: f64,
}

/// Parse `args`, run the command and return the process exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match run(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

pub fn run(cli: &Cli) -> Result<(), CliError> {
    let mut warnings = Vec::new();
    let text = match &cli.command {
        Command::Nodes { kind, n } => cmd_nodes(*kind, *n)?,
        Command::Interp(a) => cmd_interp(a)?,
        Command::Interp2d(a) => cmd_interp2d(a)?,
        Command::Lebesgue(a) => cmd_lebesgue(a, &mut warnings)?,
        Command::SweepTheta { kind, n, thetas, grid } => cmd_sweep(*kind, *n, thetas, *grid)?,
        Command::Converge(a) => cmd_converge(a)?,
        Command::LemmaTest {
            kind,
            n,
            nu,
            trials,
            seed,
        } => cmd_lemma(*kind, *n, *nu, *trials, *seed)?,
    };
    for w in warnings {
        eprintln!("warning: {w}");
    }
    match &cli.out {
        Some(path) => fs::write(path, text).map_err(|source| io_error(path, source)),
        None => io::stdout().write_all(text.as_bytes()).map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        }),
    }
}

fn io_error(path: &Path, source: io::Error) -> CliError {
    CliError::Io {
        path: path.display().to_string(),
        source,
    }
}

/// Full round-trip precision, 17 significant digits.
fn num(v: f64) -> String {
    format!("{v:.16e}")
}

fn equispaced(count: usize) -> Result<Vec<f64>, CliError> {
    match count {
        0 => Err(CliError::Usage("grid size must be positive".into())),
        1 => Ok(vec![0.0]),
        _ => Ok((0..count).map(|i| -1.0 + 2.0 * i as f64 / (count - 1) as f64).collect()),
    }
}

fn data_lines(path: &Path) -> Result<Vec<(usize, String)>, CliError> {
    let text = fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    Ok(text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim().to_string()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect())
}

fn parse_num(path: &Path, line: usize, field: &str) -> Result<f64, CliError> {
    field.trim().parse::<f64>().map_err(|_| CliError::Input {
        path: path.display().to_string(),
        line,
        msg: format!("cannot parse '{}' as a number", field.trim()),
    })
}

/// One value per line; `#` lines and blank lines are skipped.
pub fn read_values(path: &Path) -> Result<Vec<f64>, CliError> {
    data_lines(path)?.iter().map(|(i, l)| parse_num(path, *i, l)).collect()
}

/// Comma-separated rows; `#` lines and blank lines are skipped.
pub fn read_matrix(path: &Path) -> Result<Vec<Vec<f64>>, CliError> {
    data_lines(path)?
        .iter()
        .map(|(i, l)| l.split(',').map(|f| parse_num(path, *i, f)).collect())
        .collect()
}

fn cmd_nodes(kind: ChebyshevKind, n: usize) -> Result<String, CliError> {
    let set = nodes(kind, n)?;
    let mut out = format!("# nodes kind={} n={n}\nk,t,x,lambda\n", kind.tag());
    for k in 0..n {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            k + 1,
            num(set.t[k]),
            num(set.x[k]),
            num(set.lambda[k])
        );
    }
    Ok(out)
}

fn cmd_interp(a: &InterpArgs) -> Result<String, CliError> {
    let pair = DegreePair::new(a.n, a.m)?;
    let interp = match (&a.func, &a.samples) {
        (Some(f), _) => VpInterpolant::from_fn(a.kind, pair, |x| f.eval(x))?,
        (None, Some(path)) => VpInterpolant::build(a.kind, pair, read_values(path)?)?,
        (None, None) => return Err(CliError::Usage("either --fn or --samples is required".into())),
    };
    let points = match (&a.points, a.grid) {
        (Some(path), _) => read_values(path)?,
        (None, Some(count)) => equispaced(count)?,
        (None, None) => return Err(CliError::Usage("either --points or --grid is required".into())),
    };
    let r = a.deriv.unwrap_or(0);
    let values = match a.deriv {
        None => interp.evaluate(&points)?,
        Some(r) => {
            let request = DerivativeRequest::new(interp, r)?;
            evaluate_deriv(&request, &points)?
        }
    };

    let source = match (&a.func, &a.samples) {
        (Some(f), _) => format!("fn={f}"),
        (_, Some(p)) => format!("samples={}", p.display()),
        _ => unreachable!(),
    };
    let mut out = format!(
        "# interp kind={} n={} m={} {source}\n# derivative order r={r}\n",
        a.kind.tag(),
        a.n,
        a.m
    );
    match &a.func {
        Some(f) => {
            out.push_str("z,value,exact,error\n");
            for (&z, v) in points.iter().zip(&values) {
                let exact = f.deriv(r as u32, z);
                let _ = writeln!(out, "{},{},{},{}", num(z), num(*v), num(exact), num((v - exact).abs()));
            }
        }
        None => {
            out.push_str("z,value\n");
            for (&z, v) in points.iter().zip(&values) {
                let _ = writeln!(out, "{},{}", num(z), num(*v));
            }
        }
    }
    Ok(out)
}

fn axis(file: &Option<PathBuf>, count: Option<usize>, name: &str) -> Result<Vec<f64>, CliError> {
    match (file, count) {
        (Some(path), _) => read_values(path),
        (None, Some(c)) => equispaced(c),
        (None, None) => Err(CliError::Usage(format!(
            "one of --{name}s, --grid-{name} or --at-nodes is required"
        ))),
    }
}

fn cmd_interp2d(a: &Interp2dArgs) -> Result<String, CliError> {
    let spec = BivariateSpec::new(
        (a.kind1, a.kind2),
        (DegreePair::new(a.n1, a.m1)?, DegreePair::new(a.n2, a.m2)?),
    );
    let samples = match (&a.func, &a.samples) {
        (Some(f), _) => GridSamples::from_fn(spec, |x, y| f.eval(x, y))?,
        (None, Some(path)) => {
            let rows = read_matrix(path)?;
            if rows.len() != a.n1 || rows.iter().any(|r| r.len() != a.n2) {
                return Err(VpError::Shape {
                    expected: format!("{}x{} sample matrix", a.n1, a.n2),
                    found: format!("{} rows", rows.len()),
                }
                .into());
            }
            GridSamples::new(spec, BlockMatrix::new(a.n1, a.n2, rows.concat())?)?
        }
        (None, None) => return Err(CliError::Usage("either --fn or --samples is required".into())),
    };
    let (xs, ys) = if a.at_nodes {
        (nodes(a.kind1, a.n1)?.x, nodes(a.kind2, a.n2)?.x)
    } else {
        (axis(&a.xs, a.grid_x, "x")?, axis(&a.ys, a.grid_y, "y")?)
    };
    let w = interpolate2d(&samples, &xs, &ys)?;

    let mut out = format!(
        "# interp2d n1={} n2={} kind1={} kind2={} m1={} m2={}\n",
        a.n1,
        a.n2,
        a.kind1.tag(),
        a.kind2.tag(),
        a.m1,
        a.m2
    );
    let _ = writeln!(out, "# rows: {} x points, columns: {} y points", xs.len(), ys.len());
    let _ = writeln!(out, "# xs={}", xs.iter().map(|&v| num(v)).collect::<Vec<_>>().join(","));
    let _ = writeln!(out, "# ys={}", ys.iter().map(|&v| num(v)).collect::<Vec<_>>().join(","));
    for i in 0..w.rows() {
        let _ = writeln!(
            out,
            "{}",
            w.row(i).iter().map(|&v| num(v)).collect::<Vec<_>>().join(",")
        );
    }
    Ok(out)
}

const TABLE_HEADER: &str = "kind,n,m,theta,gamma,delta,value,bound\n";

fn table_row(kind: ChebyshevKind, pair: DegreePair, u: JacobiWeightU, value: f64, bound: f64) -> String {
    format!(
        "{},{},{},{},{},{},{},{}\n",
        kind.tag(),
        pair.n(),
        pair.m(),
        num(pair.theta()),
        num(u.gamma()),
        num(u.delta()),
        num(value),
        num(bound)
    )
}

fn cmd_lebesgue(a: &LebesgueArgs, warnings: &mut Vec<String>) -> Result<String, CliError> {
    let pair = DegreePair::new(a.n, a.m)?;
    let u = match (a.gamma, a.delta) {
        (Some(g), Some(d)) => JacobiWeightU::new(g, d)?,
        _ => JacobiWeightU::sqrt_w_phi(a.kind),
    };
    let mut out = format!("# lebesgue grid={}\n", a.grid);
    if !admissible(a.kind, u) {
        let msg = format!(
            "weight (gamma = {}, delta = {}) is not admissible for the {} kind; the constant need not stay bounded in n",
            u.gamma(),
            u.delta(),
            a.kind.name()
        );
        let _ = writeln!(out, "# warning: {msg}");
        warnings.push(msg);
    }
    let value = lebesgue_constant(a.kind, pair, u, a.grid)?;
    out.push_str(TABLE_HEADER);
    out.push_str(&table_row(a.kind, pair, u, value, lebesgue_bound(a.kind, pair)));
    Ok(out)
}

fn cmd_sweep(kind: ChebyshevKind, n: usize, thetas: &[f64], grid: usize) -> Result<String, CliError> {
    let sweep = sweep_theta(kind, n, thetas, grid)?;
    let mut out = format!("# sweep-theta grid={grid} weight=sqrt(w phi)\n{TABLE_HEADER}");
    for row in &sweep.rows {
        let pair = DegreePair::new(row.n, row.m)?;
        out.push_str(&table_row(kind, pair, sweep.u, row.lebesgue_constant, row.bound));
    }
    for (i, j) in sweep.monotonicity_violations(0.01) {
        let _ = writeln!(
            out,
            "# increase beyond 1% between theta={} and theta={}",
            sweep.rows[i].theta, sweep.rows[j].theta
        );
    }
    Ok(out)
}

fn cmd_converge(a: &ConvergeArgs) -> Result<String, CliError> {
    let u = JacobiWeightU::new(a.gamma, a.delta)?;
    let f = a.func;
    let r = a.deriv as u32;
    let table = convergence_study(
        &|x| f.eval(x),
        &|x| f.deriv(r, x),
        a.kind,
        u,
        a.theta,
        &a.n_list,
        a.deriv,
    )?;
    let mut out = format!(
        "# converge kind={} fn={f} theta={} r={} gamma={} delta={}\n# proxy columns are upper bounds for E_(n-m)(f)_u and E_(n+m-1)(f)_u\nn,m,error,proxy,proxy_upper_degree,ratio\n",
        a.kind.tag(),
        a.theta,
        a.deriv,
        a.gamma,
        a.delta
    );
    for row in &table.rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            row.n,
            row.m,
            num(row.error),
            num(row.proxy),
            num(row.proxy_upper_degree),
            num(row.ratio)
        );
    }
    let _ = writeln!(out, "# slope={}", num(table.slope()));
    Ok(out)
}

fn cmd_lemma(kind: ChebyshevKind, n: usize, nu: usize, trials: usize, seed: u64) -> Result<String, CliError> {
    let results = lemma_sum_trials(kind, n, nu, trials, seed)?;
    let mut out = format!(
        "# lemma-test kind={} n={n} nu={nu} trials={trials} seed={seed}\ntrial,parity,lhs,rhs,passed\n",
        kind.tag()
    );
    for (i, t) in results.iter().enumerate() {
        let parity = if i % 2 == 0 { "even" } else { "odd" };
        let _ = writeln!(out, "{},{parity},{},{},{}", i + 1, num(t.lhs), num(t.rhs), t.passed);
    }
    let _ = writeln!(out, "# all_passed={}", results.iter().all(|t| t.passed));
    Ok(out)
}
