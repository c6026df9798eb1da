use crate::error::Result;
use crate::problem::{Geometry, Problem};
use crate::series::XSeries;

/// The individual terms whose sum is the residual. For the radial geometry
/// the equation is multiplied by `r` so every term is regular at the origin.
fn residual_terms(p: &Problem, y: &XSeries) -> Result<Vec<XSeries>> {
    let order = y.order();
    let f = p.forcing.resized(order);
    let b2 = XSeries::constant(p.b2, order);
    let gy = p.g.eval_series(y);
    Ok(match p.geometry {
        Geometry::Line => vec![
            y.differentiate(4)?,
            y.differentiate(2)?.scale(p.alpha),
            y.scale(p.omega),
            b2,
            gy,
            f.scale(-1.0),
        ],
        Geometry::Radial3d => vec![
            y.differentiate(4)?.mul_x(),
            y.differentiate(3)?.scale(4.0),
            y.differentiate(2)?.mul_x().scale(p.alpha),
            y.differentiate(1)?.scale(2.0 * p.alpha),
            y.scale(p.omega).mul_x(),
            b2.mul_x(),
            gy.mul_x(),
            f.scale(-1.0).mul_x(),
        ],
    })
}

/// `y'''' + alpha y'' + omega y + b^2 + g(y) - f` on the line, or
/// `r y'''' + 4 y''' + alpha (r y'' + 2 y') + r (omega y + b^2 + g(y) - f)`
/// in the radial geometry.
pub fn residual(p: &Problem, y: &XSeries) -> Result<XSeries> {
    let terms = residual_terms(p, y)?;
    Ok(terms[1..].iter().fold(terms[0].clone(), |acc, t| &acc + t))
}

/// Lowest degree at which the residual does not cancel, judged relative to
/// the size of the terms that meet at that degree. `None` means the residual
/// vanishes through its whole window.
pub fn residual_floor_degree(p: &Problem, y: &XSeries, rel_tol: f64) -> Result<Option<usize>> {
    residual_floor_degree_with(p, y, &y.abs(), rel_tol)
}

/// As [`residual_floor_degree`], with the scale at each degree taken from
/// the residual terms evaluated on `majorant` (coefficientwise at least
/// `|y|`) and on the problem's coefficient magnitudes. For a partial sum,
/// `sum_k |y_k|` bounds the rounding left behind when components cancel.
pub fn residual_floor_degree_with(
    p: &Problem,
    y: &XSeries,
    majorant: &XSeries,
    rel_tol: f64,
) -> Result<Option<usize>> {
    let scale_terms = residual_terms(&p.magnitudes(), &majorant.resized(y.order()))?;
    let res = residual(p, y)?;
    Ok((0..=res.order()).find(|&n| {
        let scale: f64 = scale_terms.iter().map(|t| t.coeff(n).abs()).sum();
        res.coeff(n).abs() > rel_tol * scale
    }))
}
