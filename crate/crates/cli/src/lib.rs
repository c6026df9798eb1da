//! Front end for the decomposition solvers: runs a configured problem and
//! writes component, comparison and summary files, or runs the regression
//! suite.

pub mod config;

use std::fs;
use std::path::{Path, PathBuf};

use biharm_core::numeric::{integrate_numeric_with, RadialStart};
use biharm_core::regression::{run_regression, RegressionReport, Status};
use biharm_core::{compare, residual_floor_degree_with, Expansion, Method};
use thiserror::Error;

pub use config::{ConfigError, Format, MethodChoice, RunConfig};

/// Relative tolerance for the residual floor degree in summaries.
pub const RESIDUAL_TOL: f64 = 1e-9;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Config { path: PathBuf, source: ConfigError },
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{method}: {source}")]
    Solver {
        method: String,
        source: biharm_core::Error,
    },
    #[error("regression failed: {0} check(s) failed")]
    Regression(usize),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Regression(_) => 1,
            CliError::Config { .. } | CliError::Read { .. } | CliError::Write { .. } => 2,
            CliError::Solver { .. } => 3,
        }
    }
}

/// Per-method outcome of a run.
#[derive(Debug, Clone, PartialEq)]
pub struct MethodSummary {
    pub method: Method,
    pub terms: usize,
    pub order: usize,
    pub max_abs_error: f64,
    pub max_rel_error: f64,
    pub residual_floor_degree: Option<usize>,
}

pub fn load_config(path: &Path) -> Result<RunConfig, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_owned(),
        source,
    })?;
    text.parse().map_err(|source| CliError::Config {
        path: path.to_owned(),
        source,
    })
}

fn methods(cfg: &RunConfig) -> Vec<Method> {
    let geometry = cfg.problem.geometry;
    match cfg.method {
        MethodChoice::Adm => vec![Method::for_geometry(geometry, false)],
        MethodChoice::Ladm => vec![Method::for_geometry(geometry, true)],
        MethodChoice::Both => vec![
            Method::for_geometry(geometry, false),
            Method::for_geometry(geometry, true),
        ],
    }
}

/// `<output_path><suffix>`, so `out/fig1` becomes `out/fig1_summary.csv`.
pub fn output_file(base: &Path, suffix: &str) -> PathBuf {
    let mut s = base.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn header(generated: Option<&str>) -> String {
    generated
        .map(|t| format!("# generated {t}\n"))
        .unwrap_or_default()
}

fn write(path: PathBuf, contents: String) -> Result<(), CliError> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|source| CliError::Write {
            path: dir.to_owned(),
            source,
        })?;
    }
    fs::write(&path, contents).map_err(|source| CliError::Write { path, source })
}

fn components_csv(expansions: &[Expansion]) -> String {
    let mut out = String::from("method,k,degree,coefficient\n");
    for e in expansions {
        for (k, c) in e.components.iter().enumerate() {
            for (n, v) in c.coeffs().iter().enumerate() {
                out.push_str(&format!("{},{k},{n},{v:.16e}\n", e.method));
            }
        }
    }
    out
}

fn summary_csv(rows: &[MethodSummary]) -> String {
    let mut out =
        String::from("method,terms,order,max_abs_error,max_rel_error,residual_floor_degree\n");
    for r in rows {
        let floor = r
            .residual_floor_degree
            .map_or("none".to_owned(), |d| d.to_string());
        out.push_str(&format!(
            "{},{},{},{:.16e},{:.16e},{floor}\n",
            r.method, r.terms, r.order, r.max_abs_error, r.max_rel_error
        ));
    }
    out
}

fn summary_json(rows: &[MethodSummary], generated: Option<&str>) -> String {
    let methods: Vec<serde_json::Value> = rows
        .iter()
        .map(|r| {
            serde_json::json!({
                "method": r.method.to_string(),
                "terms": r.terms,
                "order": r.order,
                "max_abs_error": r.max_abs_error,
                "max_rel_error": r.max_rel_error,
                "residual_floor_degree": r.residual_floor_degree,
            })
        })
        .collect();
    let mut doc = serde_json::json!({ "methods": methods });
    if let Some(t) = generated {
        doc["generated"] = serde_json::Value::from(t);
    }
    let mut s = serde_json::to_string_pretty(&doc).expect("summary serializes");
    s.push('\n');
    s
}

/// Solves, integrates, compares and writes every output file. With
/// `generated` set, each file records that timestamp.
pub fn run(cfg: &RunConfig, generated: Option<&str>) -> Result<Vec<MethodSummary>, CliError> {
    let p = &cfg.problem;
    let radial = RadialStart {
        eps: cfg.eps,
        seed_order: cfg.seed_order,
    };
    let table = integrate_numeric_with(p, cfg.x_max, cfg.step, radial).map_err(|source| {
        CliError::Solver {
            method: "RK4".into(),
            source,
        }
    })?;

    let mut expansions = Vec::new();
    let mut summaries = Vec::new();
    for method in methods(cfg) {
        let solver_err = |source| CliError::Solver {
            method: method.to_string(),
            source,
        };
        let e = method.solve(p, cfg.terms, cfg.order).map_err(solver_err)?;
        let sum = e.sum();
        let report = compare(&sum, &table);
        let magnitude = e.magnitude(cfg.terms).map_err(solver_err)?;
        let floor =
            residual_floor_degree_with(p, &sum, &magnitude, RESIDUAL_TOL).map_err(solver_err)?;

        let mut csv = header(generated);
        csv.push_str("x,series_sum,numeric,abs_err\n");
        for row in &report.rows {
            csv.push_str(&format!(
                "{:.16e},{:.16e},{:.16e},{:.16e}\n",
                row.x, row.series, row.numeric, row.abs_error
            ));
        }
        let name = format!(
            "_{}_comparison.csv",
            method.to_string().to_ascii_lowercase()
        );
        write(output_file(&cfg.output_path, &name), csv)?;

        summaries.push(MethodSummary {
            method,
            terms: cfg.terms,
            order: cfg.order,
            max_abs_error: report.max_abs_error,
            max_rel_error: report.max_rel_error,
            residual_floor_degree: floor,
        });
        expansions.push(e);
    }

    let mut csv = header(generated);
    csv.push_str(&components_csv(&expansions));
    write(output_file(&cfg.output_path, "_components.csv"), csv)?;

    match cfg.format {
        Format::Csv => {
            let mut csv = header(generated);
            csv.push_str(&summary_csv(&summaries));
            write(output_file(&cfg.output_path, "_summary.csv"), csv)?;
        }
        Format::Json => {
            write(
                output_file(&cfg.output_path, "_summary.json"),
                summary_json(&summaries, generated),
            )?;
        }
    }
    Ok(summaries)
}

/// Runs the regression suite, writing its table to `out` when given.
pub fn regress(out: Option<&Path>) -> Result<RegressionReport, CliError> {
    let report = run_regression().map_err(|source| CliError::Solver {
        method: "regression".into(),
        source,
    })?;
    if let Some(path) = out {
        write(path.to_owned(), report.to_csv())?;
    }
    Ok(report)
}

/// One-line tally of a regression report.
pub fn tally(report: &RegressionReport) -> String {
    format!(
        "{} checks: {} passed, {} discrepancies, {} failed",
        report.rows.len(),
        report.count(Status::Pass),
        report.count(Status::Discrepancy),
        report.count(Status::Fail)
    )
}
