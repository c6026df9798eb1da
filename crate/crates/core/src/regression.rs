//! Regression suite for the standing-wave equation `Delta^2 R + R - R^2 = 0`.
//!
//! Tabulated closed-form component coefficients are evaluated on a grid of
//! initial data and compared with the solvers. The component oracle decides
//! disputes: a solver that disagrees with it fails, while a tabulated value that
//! disagrees with both is reported as a discrepancy.

use std::fmt;

use crate::adomian::{adomian_closed_forms, adomian_polys, NonlinearitySpec};
use crate::error::Result;
use crate::numeric::{compare, integrate_numeric, ComparisonReport};
use crate::problem::Problem;
use crate::series::{XSeries, DEFAULT_ORDER};
use crate::solvers::{
    component_oracle, first_mismatch_scaled, residual_floor_degree_with, taylor_oracle, Method,
};

pub const REL_TOL: f64 = 1e-9;
/// Tolerance for identities that hold to rounding.
pub const TIGHT_TOL: f64 = 1e-12;

pub const R0_GRID: [f64; 4] = [0.0, 1.0, 2.0, -1.0];
pub const R2_GRID: [f64; 3] = [0.0, 1.0, -2.0];

/// A tabulated coefficient: component `component` of `method`, degree `degree`,
/// as a function of `R(0)` and `R''(0)`.
#[derive(Clone, Copy)]
pub struct CoefficientTarget {
    pub method: Method,
    pub component: usize,
    pub degree: usize,
    pub formula: fn(f64, f64) -> f64,
}

macro_rules! target {
    ($m:ident, $k:expr, $d:expr, |$a:ident, $b:ident| $e:expr) => {
        CoefficientTarget {
            method: Method::$m,
            component: $k,
            degree: $d,
            formula: |$a: f64, $b: f64| $e,
        }
    };
}

#[rustfmt::skip]
pub fn adm_line_targets() -> Vec<CoefficientTarget> {
    vec![
        target!(Adm1d, 1, 4, |a, _b| (a - 1.0) * a / 24.0),
        target!(Adm1d, 1, 6, |a, b| (2.0 * a - 1.0) * b / 720.0),
        target!(Adm1d, 1, 8, |_a, b| b * b / 6720.0),
        target!(Adm1d, 2, 8, |a, _b| a * (2.0 * a * a - 3.0 * a + 1.0) / 40320.0),
        target!(Adm1d, 2, 10, |a, b| (34.0 * a * a - 34.0 * a + 1.0) * b / 3628800.0),
        target!(Adm1d, 2, 12, |a, b| 31.0 * (2.0 * a - 1.0) * b * b / 239500800.0),
        target!(Adm1d, 2, 14, |_a, b| b.powi(3) / 161441280.0),
        target!(Adm1d, 3, 12, |a, _b| a * (74.0 * a.powi(3) - 148.0 * a * a + 75.0 * a - 1.0) / 479001600.0),
        target!(Adm1d, 3, 14, |a, b| (1088.0 * a.powi(3) - 1632.0 * a * a + 546.0 * a - 1.0) * b / 87178291200.0),
        target!(Adm1d, 3, 16, |a, b| (7186.0 * a * a - 7186.0 * a + 559.0) * b * b / 10461394944000.0),
        target!(Adm1d, 3, 18, |a, b| 2393.0 * (2.0 * a - 1.0) * b.powi(3) / 320118685286400.0),
        target!(Adm1d, 3, 20, |_a, b| 61.0 * b.powi(4) / 250298560512000.0),
    ]
}

#[rustfmt::skip]
pub fn adm_radial_targets() -> Vec<CoefficientTarget> {
    vec![
        target!(AdmRadial, 1, 4, |a, _b| (a - 1.0) * a / 120.0),
        target!(AdmRadial, 1, 6, |a, b| (2.0 * a - 1.0) * b / 1680.0),
        target!(AdmRadial, 1, 8, |_a, b| b * b / 12096.0),
        target!(AdmRadial, 2, 8, |a, _b| a * (2.0 * a * a - 3.0 * a + 1.0) / 362880.0),
        target!(AdmRadial, 2, 10, |a, b| (18.0 * a * a - 18.0 * a + 1.0) * b / 13305600.0),
        target!(AdmRadial, 2, 12, |a, b| 41.0 * (2.0 * a - 1.0) * b * b / 1037836800.0),
        target!(AdmRadial, 2, 14, |_a, b| b.powi(3) / 396264960.0),
        target!(AdmRadial, 3, 12, |a, _b| a * (146.0 * a.powi(3) - 292.0 * a * a + 151.0 * a - 5.0) / 31135104000.0),
        target!(AdmRadial, 3, 14, |a, b| (1120.0 * a.powi(3) - 1680.0 * a * a + 566.0 * a - 3.0) * b / 1307674368000.0),
        target!(AdmRadial, 3, 16, |a, b| (31282.0 * a * a - 31282.0 * a + 3407.0) * b * b / 414968666112000.0),
        target!(AdmRadial, 3, 18, |a, b| 3061.0 * (2.0 * a - 1.0) * b.powi(3) / 2027418340147200.0),
        target!(AdmRadial, 3, 20, |_a, b| 89.0 * b.powi(4) / 1366067972505600.0),
    ]
}

#[rustfmt::skip]
pub fn ladm_radial_targets() -> Vec<CoefficientTarget> {
    vec![
        target!(LadmRadial, 1, 4, |a, _b| a * a / 120.0),
        target!(LadmRadial, 1, 6, |a, b| a * b / 840.0),
        target!(LadmRadial, 1, 8, |a, b| (10.0 * b * b - a * a) / 120960.0),
        target!(LadmRadial, 1, 10, |a, b| -a * b / 739200.0),
        target!(LadmRadial, 1, 12, |a, b| (151.0 * a * a - 1230.0 * b * b) / 31135104000.0),
        target!(LadmRadial, 1, 14, |a, b| 283.0 * a * b / 653837184000.0),
    ]
}

/// `R(0) cos(x/sqrt 2) cosh(x/sqrt 2)`-type seed of the line LADM:
/// `sum_k (-1)^k [R(0) x^(4k)/(4k)! + R''(0) x^(4k+2)/(4k+2)!]`.
pub fn ladm_line_seed(r0: f64, r2: f64, order: usize) -> XSeries {
    let mut coeffs = vec![0.0; order + 1];
    let mut factorial = 1.0;
    for (n, c) in coeffs.iter_mut().enumerate() {
        if n > 0 {
            factorial *= n as f64;
        }
        let sign = if (n / 4) % 2 == 0 { 1.0 } else { -1.0 };
        *c = match n % 4 {
            0 => sign * r0 / factorial,
            2 => sign * r2 / factorial,
            _ => 0.0,
        };
    }
    XSeries::new(coeffs).expect("finite seed coefficients")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    /// Solver and oracle agree, tabulated value does not.
    Discrepancy,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Discrepancy => "DISCREPANCY",
            Status::Fail => "FAIL",
        })
    }
}

/// One line of the report. For coefficient checks `expected` is the tabulated
/// value and `oracle` the independent one. Window and residual rows carry the
/// Taylor oracle and the required degree; figure rows carry the threshold,
/// the relative error and, in `oracle`, the absolute error.
#[derive(Debug, Clone, PartialEq)]
pub struct RegressionRow {
    pub check: &'static str,
    /// Method name, or the nonlinearity for Adomian polynomial rows.
    pub subject: String,
    pub component: usize,
    pub degree: usize,
    pub r0: f64,
    pub r2: f64,
    pub expected: f64,
    pub computed: f64,
    pub oracle: f64,
    pub status: Status,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct RegressionReport {
    pub rows: Vec<RegressionRow>,
}

impl RegressionReport {
    pub fn count(&self, status: Status) -> usize {
        self.rows.iter().filter(|r| r.status == status).count()
    }

    pub fn passed(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    pub fn rows_for(&self, check: &str) -> impl Iterator<Item = &RegressionRow> {
        let check = check.to_owned();
        self.rows.iter().filter(move |r| r.check == check)
    }

    pub fn to_csv(&self) -> String {
        let mut out =
            String::from("check,subject,component,degree,r0,r2,expected,computed,oracle,status\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{:.16e},{:.16e},{:.16e},{}\n",
                r.check,
                r.subject,
                r.component,
                r.degree,
                r.r0,
                r.r2,
                r.expected,
                r.computed,
                r.oracle,
                r.status
            ));
        }
        out
    }
}

pub fn close(a: f64, b: f64, rel_tol: f64) -> bool {
    (a - b).abs() <= rel_tol * a.abs().max(b.abs()).max(1e-300)
}

fn grid() -> impl Iterator<Item = (f64, f64)> {
    R0_GRID
        .into_iter()
        .flat_map(|a| R2_GRID.into_iter().map(move |b| (a, b)))
}

fn standing_wave(method: Method, r0: f64, r2: f64) -> Problem {
    Problem::standing_wave(method.geometry(), 1, r0, r2)
}

/// Tabulated component coefficients against solver and component oracle.
pub fn coefficient_rows(
    check: &'static str,
    targets: &[CoefficientTarget],
    order: usize,
) -> Result<Vec<RegressionRow>> {
    let mut rows = Vec::new();
    for (r0, r2) in grid() {
        for t in targets {
            let p = standing_wave(t.method, r0, r2);
            let solved = t.method.solve(&p, t.component, order)?;
            let oracle = component_oracle(t.method, &p, t.component, order)?;
            let expected = (t.formula)(r0, r2);
            let computed = solved.components[t.component].coeff(t.degree);
            let reference = oracle[t.component].coeff(t.degree);
            let status = if !close(computed, reference, REL_TOL) {
                Status::Fail
            } else if close(computed, expected, REL_TOL) {
                Status::Pass
            } else {
                Status::Discrepancy
            };
            rows.push(RegressionRow {
                check,
                subject: t.method.to_string(),
                component: t.component,
                degree: t.degree,
                r0,
                r2,
                expected,
                computed,
                oracle: reference,
                status,
            });
        }
    }
    Ok(rows)
}

/// Line LADM component 0 against the closed-form seed, every degree.
pub fn ladm_seed_rows(order: usize) -> Result<Vec<RegressionRow>> {
    let mut rows = Vec::new();
    for (r0, r2) in grid() {
        let p = standing_wave(Method::Ladm1d, r0, r2);
        let seed = &Method::Ladm1d.solve(&p, 0, order)?.components[0];
        let oracle = &component_oracle(Method::Ladm1d, &p, 0, order)?[0];
        let expected = ladm_line_seed(r0, r2, order);
        let worst = (0..=order)
            .find(|&n| !close(seed.coeff(n), expected.coeff(n), TIGHT_TOL))
            .unwrap_or(order);
        let (computed, reference, tabulated) = (
            seed.coeff(worst),
            oracle.coeff(worst),
            expected.coeff(worst),
        );
        let status = if !close(computed, tabulated, TIGHT_TOL) {
            Status::Fail
        } else {
            Status::Pass
        };
        rows.push(RegressionRow {
            check: "ladm_line_seed",
            subject: Method::Ladm1d.to_string(),
            component: 0,
            degree: worst,
            r0,
            r2,
            expected: tabulated,
            computed,
            oracle: reference,
            status,
        });
    }
    Ok(rows)
}

/// For each `K` in `0..=max_terms`: the partial sum matches the Taylor oracle
/// through degree `4K+3`, and its residual vanishes below degree `4K`.
pub fn window_rows(max_terms: usize, order: usize) -> Result<Vec<RegressionRow>> {
    let mut rows = Vec::new();
    for method in [
        Method::Adm1d,
        Method::Ladm1d,
        Method::AdmRadial,
        Method::LadmRadial,
    ] {
        for (r0, r2) in grid() {
            let p = standing_wave(method, r0, r2);
            let exact = taylor_oracle(&p, order)?;
            let e = method.solve(&p, max_terms, order)?;
            for k in 0..=max_terms {
                let sum = e.partial_sum(k)?;
                let magnitude = e.magnitude(k)?;
                let top = 4 * k + 3;
                let bad = first_mismatch_scaled(&sum, &exact, &magnitude, top, REL_TOL);
                let degree = bad.unwrap_or(top);
                rows.push(RegressionRow {
                    check: "exactness_window",
                    subject: method.to_string(),
                    component: k,
                    degree,
                    r0,
                    r2,
                    expected: exact.coeff(degree),
                    computed: sum.coeff(degree),
                    oracle: exact.coeff(degree),
                    status: if bad.is_some() {
                        Status::Fail
                    } else {
                        Status::Pass
                    },
                });

                let floor = residual_floor_degree_with(&p, &sum, &magnitude, REL_TOL)?;
                let ok = floor.is_none_or(|d| d >= 4 * k);
                rows.push(RegressionRow {
                    check: "residual_floor",
                    subject: method.to_string(),
                    component: k,
                    degree: floor.unwrap_or(order),
                    r0,
                    r2,
                    expected: (4 * k) as f64,
                    computed: floor.map_or(f64::INFINITY, |d| d as f64),
                    oracle: (4 * k) as f64,
                    status: if ok { Status::Pass } else { Status::Fail },
                });
            }
        }
    }
    Ok(rows)
}

/// Deterministic, irregular-looking components for the Adomian checks.
pub fn sample_components(count: usize, order: usize, salt: usize) -> Vec<XSeries> {
    (0..count)
        .map(|i| {
            let coeffs = (0..=order)
                .map(|n| (((salt + 1) * 7919 + i * 104729 + n * 1299709) as f64 * 0.618).sin())
                .collect();
            XSeries::new(coeffs).expect("finite")
        })
        .collect()
}

/// Graded Adomian polynomials against the five closed forms, for `y^2`,
/// `y^3` and `y^2 + 2 y^5`.
pub fn adomian_rows(components: &[XSeries]) -> Result<Vec<RegressionRow>> {
    let nonlinearities = [
        NonlinearitySpec::new(vec![(1.0, 2)])?,
        NonlinearitySpec::new(vec![(1.0, 3)])?,
        NonlinearitySpec::new(vec![(1.0, 2), (2.0, 5)])?,
    ];
    let mut rows = Vec::new();
    for g in &nonlinearities {
        let graded = adomian_polys(g, components, 4)?;
        let closed = adomian_closed_forms(g, components)?;
        let magnitudes: Vec<XSeries> = components.iter().map(XSeries::abs).collect();
        let scale = adomian_closed_forms(&g.abs(), &magnitudes)?;
        for (k, (a, b)) in graded.iter().zip(&closed).enumerate() {
            let order = a.order().min(b.order());
            let bad = first_mismatch_scaled(a, b, &scale[k], order, TIGHT_TOL);
            let degree = bad.unwrap_or(order);
            rows.push(RegressionRow {
                check: "adomian_closed_form",
                subject: g.to_string(),
                component: k,
                degree,
                r0: f64::NAN,
                r2: f64::NAN,
                expected: b.coeff(degree),
                computed: a.coeff(degree),
                oracle: b.coeff(degree),
                status: if bad.is_some() {
                    Status::Fail
                } else {
                    Status::Pass
                },
            });
        }
    }
    Ok(rows)
}

/// Right end of the comparison window for the figure panels.
pub const FIGURE_X_MAX: f64 = 4.0;
pub const FIGURE_STEP: f64 = 1e-3;

/// One caption configuration of the standing-wave comparison figures.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FigurePanel {
    pub name: &'static str,
    pub method: Method,
    /// Number of correction terms `K`; the sum has `K + 1` components.
    pub terms: usize,
    pub r0: f64,
    pub r2: f64,
    /// Frozen bound on the maximum relative error against RK4 over the
    /// window, about ten times the calibrated value.
    pub threshold: f64,
}

impl FigurePanel {
    pub fn problem(&self) -> Problem {
        standing_wave(self.method, self.r0, self.r2)
    }
}

/// Calibrated maximum relative errors (RK4 step 1e-3, order 40):
/// fig1 1.7e-14 / 5.7e-14, fig2 2.7e-4 / 2.3e-5, fig3 1.9e-10 / 1.9e-10,
/// fig4 2.6e-7 / 3.0e-7.
#[rustfmt::skip]
pub const FIGURE_PANELS: [FigurePanel; 8] = [
    FigurePanel { name: "fig1_left", method: Method::Ladm1d, terms: 2, r0: 5.1e-5, r2: 2.65e-5, threshold: 1e-12 },
    FigurePanel { name: "fig1_right", method: Method::Ladm1d, terms: 2, r0: -4.1e-5, r2: -7.86e-6, threshold: 1e-12 },
    FigurePanel { name: "fig2_left", method: Method::Adm1d, terms: 3, r0: -4.1e-6, r2: -7.86e-2, threshold: 3e-3 },
    FigurePanel { name: "fig2_right", method: Method::Adm1d, terms: 3, r0: 7.19e-8, r2: 1.37e-2, threshold: 3e-3 },
    FigurePanel { name: "fig3_left", method: Method::LadmRadial, terms: 1, r0: -7.85e-12, r2: -4.31e-5, threshold: 2e-9 },
    FigurePanel { name: "fig3_right", method: Method::LadmRadial, terms: 1, r0: 1.27e-12, r2: 4.31e-5, threshold: 2e-9 },
    FigurePanel { name: "fig4_left", method: Method::AdmRadial, terms: 3, r0: 7.44e-15, r2: 2.71e-4, threshold: 3e-6 },
    FigurePanel { name: "fig4_right", method: Method::AdmRadial, terms: 3, r0: -3.89e-16, r2: -1.91e-5, threshold: 3e-6 },
];

/// Maximum relative error of the panel's partial sum against RK4 over the
/// figure window, with the initial data scaled by `scale`.
pub fn figure_error(panel: &FigurePanel, scale: f64) -> Result<ComparisonReport> {
    let p = standing_wave(panel.method, scale * panel.r0, scale * panel.r2);
    let e = panel.method.solve(&p, panel.terms, DEFAULT_ORDER)?;
    let table = integrate_numeric(&p, FIGURE_X_MAX, FIGURE_STEP)?;
    Ok(compare(&e.sum(), &table))
}

pub fn figure_rows() -> Result<Vec<RegressionRow>> {
    FIGURE_PANELS
        .iter()
        .map(|panel| {
            let report = figure_error(panel, 1.0)?;
            Ok(RegressionRow {
                check: "figure_protocol",
                subject: format!("{}:{}", panel.name, panel.method),
                component: panel.terms,
                degree: DEFAULT_ORDER,
                r0: panel.r0,
                r2: panel.r2,
                expected: panel.threshold,
                computed: report.max_rel_error,
                oracle: report.max_abs_error,
                status: if report.max_rel_error < panel.threshold {
                    Status::Pass
                } else {
                    Status::Fail
                },
            })
        })
        .collect()
}

/// Every check of the suite at the default working order.
pub fn run_regression() -> Result<RegressionReport> {
    let order = DEFAULT_ORDER;
    let mut rows = adomian_rows(&sample_components(5, 12, 0))?;
    rows.extend(coefficient_rows(
        "adm_line_coefficients",
        &adm_line_targets(),
        order,
    )?);
    rows.extend(coefficient_rows(
        "adm_radial_coefficients",
        &adm_radial_targets(),
        order,
    )?);
    rows.extend(coefficient_rows(
        "ladm_radial_coefficients",
        &ladm_radial_targets(),
        order,
    )?);
    rows.extend(ladm_seed_rows(order)?);
    rows.extend(window_rows(3, order)?);
    rows.extend(figure_rows()?);
    Ok(RegressionReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tabulated_examples() {
        let t = adm_line_targets();
        let x8 = t
            .iter()
            .find(|t| t.component == 2 && t.degree == 8)
            .unwrap();
        assert!(close((x8.formula)(2.0, 0.0), 1.0 / 6720.0, 1e-15));
        let t = adm_radial_targets();
        let r14 = t
            .iter()
            .find(|t| t.component == 2 && t.degree == 14)
            .unwrap();
        assert!(close((r14.formula)(3.0, 1.0), 1.0 / 396264960.0, 1e-15));
    }

    #[test]
    fn zero_data_passes_everything() {
        let targets: Vec<_> = adm_line_targets()
            .into_iter()
            .chain(adm_radial_targets())
            .chain(ladm_radial_targets())
            .collect();
        for t in &targets {
            let p = standing_wave(t.method, 0.0, 0.0);
            let e = t.method.solve(&p, 3, 24).unwrap();
            assert!(e.components.iter().all(XSeries::is_zero));
            assert_eq!((t.formula)(0.0, 0.0), 0.0);
        }
    }

    #[test]
    fn full_suite_has_no_failures() {
        let report = run_regression().unwrap();
        let failures: Vec<_> = report
            .rows
            .iter()
            .filter(|r| r.status == Status::Fail)
            .collect();
        assert!(failures.is_empty(), "{failures:#?}");
        assert_eq!(report.count(Status::Discrepancy), 0);
    }

    #[test]
    fn csv_has_one_line_per_row() {
        let report = RegressionReport {
            rows: adomian_rows(&sample_components(5, 6, 1)).unwrap(),
        };
        assert_eq!(report.to_csv().lines().count(), report.rows.len() + 1);
    }
}
