//! Fixed-step RK4 integration of the fourth-order equations and pointwise
//! comparison of series approximations against it.
//!
//! The radial equation has `4/r` and `2 alpha / r` coefficients, so the
//! integration starts at a small offset `eps` with the state taken from the
//! Taylor oracle there.

use crate::error::{Error, Result};
use crate::problem::{Geometry, Problem};
use crate::series::XSeries;
use crate::solvers::taylor_oracle_radial;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegratorMeta {
    /// Step actually taken (the requested step, shrunk to land on `x_max`).
    pub step: f64,
    /// First abscissa; zero on the line, the radial offset otherwise.
    pub start: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SampleTable {
    pub xs: Vec<f64>,
    pub ys: Vec<f64>,
    pub meta: IntegratorMeta,
}

/// Where and how the radial integration is seeded.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialStart {
    pub eps: f64,
    pub seed_order: usize,
}

impl Default for RadialStart {
    fn default() -> Self {
        Self {
            eps: 1e-3,
            seed_order: 16,
        }
    }
}

type State = [f64; 4];

fn fourth_derivative(p: &Problem, x: f64, s: &State) -> f64 {
    let [y, dy, d2y, d3y] = *s;
    let mut rhs = p.forcing.eval(x) - p.b2 - p.g.eval(y) - p.omega * y - p.alpha * d2y;
    if p.geometry == Geometry::Radial3d {
        rhs -= (4.0 * d3y + 2.0 * p.alpha * dy) / x;
    }
    rhs
}

fn derivative(p: &Problem, x: f64, s: &State) -> State {
    [s[1], s[2], s[3], fourth_derivative(p, x, s)]
}

fn axpy(s: &State, h: f64, k: &State) -> State {
    [
        s[0] + h * k[0],
        s[1] + h * k[1],
        s[2] + h * k[2],
        s[3] + h * k[3],
    ]
}

fn rk4_step(p: &Problem, x: f64, s: &State, h: f64) -> State {
    let k1 = derivative(p, x, s);
    let k2 = derivative(p, x + h / 2.0, &axpy(s, h / 2.0, &k1));
    let k3 = derivative(p, x + h / 2.0, &axpy(s, h / 2.0, &k2));
    let k4 = derivative(p, x + h, &axpy(s, h, &k3));
    std::array::from_fn(|i| s[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]))
}

/// Integrates with the default radial start (`eps = 1e-3`, seed order 16).
pub fn integrate_numeric(p: &Problem, x_max: f64, step: f64) -> Result<SampleTable> {
    integrate_numeric_with(p, x_max, step, RadialStart::default())
}

pub fn integrate_numeric_with(
    p: &Problem,
    x_max: f64,
    step: f64,
    radial: RadialStart,
) -> Result<SampleTable> {
    p.validate()?;
    if !(x_max.is_finite() && x_max > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "x_max = {x_max} must be positive"
        )));
    }
    if !(step.is_finite() && step > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "step = {step} must be positive"
        )));
    }
    if step > x_max {
        return Err(Error::StepTooLarge { step, x_max });
    }

    let (start, state) = match p.geometry {
        Geometry::Line => (0.0, [p.y0, p.y1, p.y2, p.y3]),
        Geometry::Radial3d => {
            if radial.seed_order < 8 {
                return Err(Error::InvalidArgument(
                    "radial seed order must be at least 8".into(),
                ));
            }
            if !(radial.eps > 0.0 && radial.eps < x_max) {
                return Err(Error::InvalidArgument(format!(
                    "radial offset {} must lie in (0, x_max)",
                    radial.eps
                )));
            }
            let seed = taylor_oracle_radial(p, radial.seed_order)?;
            let at = |n: usize| -> Result<f64> { Ok(seed.differentiate(n)?.eval(radial.eps)) };
            (radial.eps, [at(0)?, at(1)?, at(2)?, at(3)?])
        }
    };

    let span = x_max - start;
    let steps = ((span / step) - 1e-9).ceil().max(1.0) as usize;
    let h = span / steps as f64;

    let mut xs = Vec::with_capacity(steps + 1);
    let mut ys = Vec::with_capacity(steps + 1);
    let mut s = state;
    xs.push(start);
    ys.push(s[0]);
    for i in 0..steps {
        let x = start + i as f64 * h;
        s = rk4_step(p, x, &s, h);
        let x_next = if i + 1 == steps {
            x_max
        } else {
            start + (i + 1) as f64 * h
        };
        if s.iter().any(|v| !v.is_finite()) {
            return Err(Error::Diverged(x_next));
        }
        xs.push(x_next);
        ys.push(s[0]);
    }
    Ok(SampleTable {
        xs,
        ys,
        meta: IntegratorMeta { step: h, start },
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComparisonRow {
    pub x: f64,
    pub series: f64,
    pub numeric: f64,
    pub abs_error: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub rows: Vec<ComparisonRow>,
    pub max_abs_error: f64,
    /// `max_abs_error` over the largest `|numeric|` in the window.
    pub max_rel_error: f64,
}

/// Evaluates `series` at every abscissa of `table`.
pub fn compare(series: &XSeries, table: &SampleTable) -> ComparisonReport {
    let rows: Vec<ComparisonRow> = table
        .xs
        .iter()
        .zip(&table.ys)
        .map(|(&x, &numeric)| {
            let value = series.eval(x);
            ComparisonRow {
                x,
                series: value,
                numeric,
                abs_error: (value - numeric).abs(),
            }
        })
        .collect();
    let max_abs_error = rows.iter().map(|r| r.abs_error).fold(0.0, f64::max);
    let scale = rows.iter().map(|r| r.numeric.abs()).fold(0.0, f64::max);
    let max_rel_error = if max_abs_error == 0.0 {
        0.0
    } else if scale == 0.0 {
        f64::INFINITY
    } else {
        max_abs_error / scale
    };
    ComparisonReport {
        rows,
        max_abs_error,
        max_rel_error,
    }
}
