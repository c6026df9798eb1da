//! Direct Maclaurin recurrences for the exact solution. These share nothing
//! with the decomposition machinery beyond the problem definition and serve
//! as ground truth for it.

use super::check_order;
use crate::error::Result;
use crate::problem::{Geometry, Problem};
use crate::series::XSeries;

/// Coefficient of `x^n` in `g(sum c_i x^i)`; reads `c[0..=n]` only.
fn nonlinear_coeff(p: &Problem, c: &[f64], n: usize) -> f64 {
    let c = &c[..=n];
    p.g.terms()
        .iter()
        .map(|&(coef, m)| {
            let mut power = vec![0.0; n + 1];
            power[0] = 1.0;
            for _ in 0..m {
                power = (0..=n)
                    .map(|d| (0..=d).map(|i| power[i] * c[d - i]).sum())
                    .collect();
            }
            coef * power[n]
        })
        .sum()
}

/// Maclaurin solution of the line equation through degree `order`:
///
/// ```text
/// c_{n+4} (n+1)(n+2)(n+3)(n+4) = f_n - b^2 [n = 0] - omega c_n - alpha (n+1)(n+2) c_{n+2} - g(y)_n
/// ```
pub fn taylor_oracle_1d(p: &Problem, order: usize) -> Result<XSeries> {
    p.validate()?;
    p.expect_geometry(Geometry::Line)?;
    check_order(order)?;
    let mut c = vec![0.0; order.max(3) + 1];
    c[..4].copy_from_slice(&[p.y0, p.y1, p.y2 / 2.0, p.y3 / 6.0]);
    for n in 0..=order.saturating_sub(4) {
        if n + 4 > order {
            break;
        }
        let nf = n as f64;
        let source = p.forcing.coeff(n) - if n == 0 { p.b2 } else { 0.0 };
        let rhs = source
            - p.omega * c[n]
            - p.alpha * (nf + 1.0) * (nf + 2.0) * c[n + 2]
            - nonlinear_coeff(p, &c, n);
        c[n + 4] = rhs / ((nf + 1.0) * (nf + 2.0) * (nf + 3.0) * (nf + 4.0));
    }
    c.truncate(order + 1);
    XSeries::new(c)
}

/// Maclaurin solution of the radial equation, from the `r`-multiplied form:
///
/// ```text
/// (m+1)(m+2)(m+3)(m+4) c_{m+3} = [f - b^2 - g(y)]_{m-1} - omega c_{m-1} - alpha (m+1)(m+2) c_{m+1},  m >= 1
/// 24 c_3 = -2 alpha c_1
/// ```
pub fn taylor_oracle_radial(p: &Problem, order: usize) -> Result<XSeries> {
    p.validate()?;
    p.expect_geometry(Geometry::Radial3d)?;
    p.check_regularity()?;
    check_order(order)?;
    let y1 = if p.allow_irregular { p.y1 } else { 0.0 };
    let mut c = vec![0.0; order.max(3) + 1];
    c[0] = p.y0;
    c[1] = y1;
    c[2] = p.y2 / 2.0;
    c[3] = -p.alpha * y1 / 12.0;
    for m in 1..order.saturating_sub(2) {
        let mf = m as f64;
        let j = m - 1;
        let source = p.forcing.coeff(j) - if j == 0 { p.b2 } else { 0.0 };
        let rhs = source
            - nonlinear_coeff(p, &c, j)
            - p.omega * c[j]
            - p.alpha * (mf + 1.0) * (mf + 2.0) * c[m + 1];
        c[m + 3] = rhs / ((mf + 1.0) * (mf + 2.0) * (mf + 3.0) * (mf + 4.0));
    }
    c.truncate(order + 1);
    XSeries::new(c)
}

/// The oracle matching the problem geometry.
pub fn taylor_oracle(p: &Problem, order: usize) -> Result<XSeries> {
    match p.geometry {
        Geometry::Line => taylor_oracle_1d(p, order),
        Geometry::Radial3d => taylor_oracle_radial(p, order),
    }
}
