//! Laplace-Adomian decomposition. The recursion runs on transforms: each
//! component's transform is obtained by dividing by the characteristic
//! quartic and then inverted term by term.

use super::{check_order, Expansion, Method};
use crate::adomian::adomian_polys;
use crate::error::Result;
use crate::laplace::{from_s_domain, to_s_domain, SSeries};
use crate::problem::{Geometry, Problem};

/// LADM for the line equation.
///
/// ```text
/// L[y_0]     = (s(alpha + s^2)(s y(0) + y'(0)) + s^2 y''(0) + s y'''(0) - b^2) / (s Q(s)) + L[f] / Q(s)
/// L[y_{k+1}] = -L[A_k] / Q(s),    Q(s) = s^4 + alpha s^2 + omega
/// ```
pub fn solve_ladm_1d(p: &Problem, terms: usize, order: usize) -> Result<Expansion> {
    p.validate()?;
    p.expect_geometry(Geometry::Line)?;
    check_order(order)?;
    let (alpha, omega) = (p.alpha, p.omega);
    let max_k = order + 1;

    // (alpha + s^2)(s y0 + y1) + s y2 + y3, ascending powers of s
    let numerator = [alpha * p.y1 + p.y3, alpha * p.y0 + p.y2, p.y1, p.y0];
    let initial = SSeries::char_divide_polynomial(&numerator, alpha, omega, max_k)?;
    let source = SSeries::inverse_power(-p.b2, 1, max_k)?
        .add(&to_s_domain(&p.forcing_at(order)))
        .char_divide(alpha, omega);
    let seed = from_s_domain(&initial.add(&source));

    let mut components = vec![seed];
    for k in 0..terms {
        let a = adomian_polys(&p.g, &components, k)?;
        let transform = to_s_domain(&a[k]).char_divide(alpha, omega).scale(-1.0);
        components.push(from_s_domain(&transform));
    }
    Ok(Expansion {
        components,
        method: Method::Ladm1d,
        problem: p.clone(),
    })
}

/// LADM for the radial equation multiplied through by `r`.
///
/// Using `L[r h] = -d/ds L[h]`, the transforms obey first-order equations
/// in `s`:
///
/// ```text
/// F_0'     = (b^2/s^2 - y(0)(alpha + s^2) - 2 y'(0) s - 3 y''(0) - L[r f]) / Q(s)
/// F_{k+1}' = L[r A_k] / Q(s)
/// ```
///
/// Each `F` is the antiderivative that decays at infinity.
pub fn solve_ladm_radial(p: &Problem, terms: usize, order: usize) -> Result<Expansion> {
    p.validate()?;
    p.expect_geometry(Geometry::Radial3d)?;
    p.check_regularity()?;
    check_order(order)?;
    let (alpha, omega) = (p.alpha, p.omega);
    // F' needs one more inverse power than F
    let deriv_k = order + 2;

    let y1 = if p.allow_irregular { p.y1 } else { 0.0 };
    let numerator = [-3.0 * p.y2 - alpha * p.y0, -2.0 * y1, -p.y0, 0.0];
    let initial = SSeries::char_divide_polynomial(&numerator, alpha, omega, deriv_k)?;
    let r_forcing = to_s_domain(&p.forcing_at(order).mul_x());
    let source = SSeries::inverse_power(p.b2, 2, deriv_k)?
        .add(&r_forcing.scale(-1.0))
        .char_divide(alpha, omega);
    let seed = from_s_domain(&initial.add(&source).s_antiderivative()?);

    let mut components = vec![seed];
    for k in 0..terms {
        let a = adomian_polys(&p.g, &components, k)?;
        let transform_of_r_a = to_s_domain(&a[k]).s_derivative().scale(-1.0);
        let derivative = transform_of_r_a.char_divide(alpha, omega);
        components.push(from_s_domain(&derivative.s_antiderivative()?));
    }
    Ok(Expansion {
        components,
        method: Method::LadmRadial,
        problem: p.clone(),
    })
}
