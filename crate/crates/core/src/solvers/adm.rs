//! Classical Adomian decomposition: invert the fourth-order operator by
//! repeated integration and feed the remaining terms back as corrections.

use super::{check_order, Expansion, Method};
use crate::adomian::adomian_polys;
use crate::error::Result;
use crate::problem::{Geometry, Problem};
use crate::series::XSeries;

/// Regular inverse of the radial biharmonic operator `d^4 + (4/r) d^3`:
///
/// ```text
/// K[h](r) = int_0^r int_0^r1 int_0^r2 r3^-4 int_0^r3 r4^4 h(r4) dr4 dr3 dr2 dr1
/// ```
///
/// On monomials, `r^n -> r^(n+4) / ((n+2)(n+3)(n+4)(n+5))`.
pub fn radial_kernel(a: &XSeries) -> XSeries {
    let mut coeffs = vec![0.0; a.order() + 5];
    for (n, &c) in a.coeffs().iter().enumerate() {
        let n = n as f64;
        coeffs[n as usize + 4] = c / ((n + 2.0) * (n + 3.0) * (n + 4.0) * (n + 5.0));
    }
    XSeries::from_vec_unchecked(coeffs)
}

/// `K[y'' + (2/r) y']`. The radial Laplacian maps `r^n` to `n(n+1) r^(n-2)`,
/// so the composition sends `r^n` (n >= 1) to `r^(n+2) / ((n+2)(n+3))` and
/// annihilates constants.
pub fn radial_kernel_laplacian(a: &XSeries) -> XSeries {
    let mut coeffs = vec![0.0; a.order() + 3];
    for (n, &c) in a.coeffs().iter().enumerate().skip(1) {
        let nf = n as f64;
        coeffs[n + 2] = c / ((nf + 2.0) * (nf + 3.0));
    }
    XSeries::from_vec_unchecked(coeffs)
}

fn second_derivative(y: &XSeries) -> XSeries {
    y.differentiate(2).unwrap_or_else(|_| XSeries::zero(0))
}

/// ADM for the line equation.
///
/// `y_0` is the cubic Taylor seed plus `I^4[f - b^2]`, and
/// `y_{k+1} = I^4[-A_k - omega y_k - alpha y_k'']`.
pub fn solve_adm_1d(p: &Problem, terms: usize, order: usize) -> Result<Expansion> {
    p.validate()?;
    p.expect_geometry(Geometry::Line)?;
    check_order(order)?;

    let cubic = XSeries::new(vec![p.y0, p.y1, p.y2 / 2.0, p.y3 / 6.0])?.resized(order);
    let source = &p.forcing_at(order) - &XSeries::constant(p.b2, order);
    let seed = &cubic + &source.integrate_n(4).truncated(order);

    let mut components = vec![seed];
    for k in 0..terms {
        let a = adomian_polys(&p.g, &components, k)?;
        let yk = &components[k];
        let mut integrand = &(-&a[k]) - &yk.scale(p.omega);
        if p.alpha != 0.0 {
            integrand = &integrand - &second_derivative(yk).scale(p.alpha);
        }
        components.push(integrand.integrate_n(4).resized(order));
    }
    Ok(Expansion {
        components,
        method: Method::Adm1d,
        problem: p.clone(),
    })
}

/// ADM for the radially symmetric equation, using [`radial_kernel`].
///
/// `y_0 = y(0) + y''(0) r^2/2 + K[f - b^2]` and
/// `y_{k+1} = K[-A_k - omega y_k] - alpha K[Delta y_k]`.
pub fn solve_adm_radial(p: &Problem, terms: usize, order: usize) -> Result<Expansion> {
    p.validate()?;
    p.expect_geometry(Geometry::Radial3d)?;
    p.check_regularity()?;
    check_order(order)?;

    let y1 = if p.allow_irregular { p.y1 } else { 0.0 };
    let quadratic = XSeries::new(vec![p.y0, y1, p.y2 / 2.0])?.resized(order);
    let source = &p.forcing_at(order) - &XSeries::constant(p.b2, order);
    let seed = &quadratic + &radial_kernel(&source).truncated(order);

    let mut components = vec![seed];
    for k in 0..terms {
        let a = adomian_polys(&p.g, &components, k)?;
        let yk = &components[k];
        let integrand = &(-&a[k]) - &yk.scale(p.omega);
        let mut next = radial_kernel(&integrand).truncated(order);
        if p.alpha != 0.0 {
            next = &next - &radial_kernel_laplacian(yk).truncated(order).scale(p.alpha);
        }
        components.push(next);
    }
    Ok(Expansion {
        components,
        method: Method::AdmRadial,
        problem: p.clone(),
    })
}
