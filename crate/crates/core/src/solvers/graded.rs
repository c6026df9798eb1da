//! Component-level oracle. Each decomposition is the `eps`-expansion of a
//! deformed equation in which the terms moved to the right-hand side carry a
//! factor `eps`:
//!
//! ```text
//! ADM  (line):    y'''' = f - b^2 + eps (-omega y - alpha y'' - g(y))
//! LADM (line):    y'''' + alpha y'' + omega y = f - b^2 - eps g(y)
//! ```
//!
//! and likewise for the radial operator. Component `k` is the coefficient of
//! `eps^k`, so a bivariate Maclaurin recurrence in `(x, eps)` reproduces every
//! component without going through Adomian polynomials or transforms.

use super::{check_order, Method};
use crate::error::Result;
use crate::problem::Problem;
use crate::series::XSeries;

/// `c[n][k]`: coefficient of `x^n eps^k`.
type Grid = Vec<Vec<f64>>;

/// Incrementally maintained powers `y^m` of the bivariate series.
struct Powers {
    exponents: Vec<u32>,
    /// `table[i][n][k]` for `y^(i+1)`.
    table: Vec<Grid>,
}

impl Powers {
    fn new(p: &Problem, order: usize, terms: usize) -> Self {
        let top = p.g.degree() as usize;
        Self {
            exponents: p.g.terms().iter().map(|&(_, m)| m).collect(),
            table: vec![vec![vec![0.0; terms + 1]; order + 1]; top],
        }
    }

    /// Fills degree `n` of every power; needs `c[0..=n]`.
    fn extend(&mut self, c: &Grid, n: usize) {
        let kmax = c[0].len();
        for i in 0..self.table.len() {
            for k in 0..kmax {
                self.table[i][n][k] = if i == 0 {
                    c[n][k]
                } else {
                    let prev = &self.table[i - 1];
                    let mut acc = 0.0;
                    for (a, row) in c.iter().enumerate().take(n + 1) {
                        for (b, v) in row.iter().enumerate().take(k + 1) {
                            acc += v * prev[n - a][k - b];
                        }
                    }
                    acc
                };
            }
        }
    }

    /// Coefficient of `x^n eps^k` in `g(y)`.
    fn g(&self, p: &Problem, n: usize, k: usize) -> f64 {
        p.g.terms()
            .iter()
            .zip(&self.exponents)
            .map(|(&(coef, _), &m)| match m {
                0 => {
                    if n == 0 && k == 0 {
                        coef
                    } else {
                        0.0
                    }
                }
                m => coef * self.table[m as usize - 1][n][k],
            })
            .sum()
    }
}

/// Components `y_0 ..= y_terms` of `method`, computed from the deformed
/// equation's bivariate recurrence.
pub fn component_oracle(
    method: Method,
    p: &Problem,
    terms: usize,
    order: usize,
) -> Result<Vec<XSeries>> {
    p.validate()?;
    p.expect_geometry(method.geometry())?;
    check_order(order)?;
    let laplace = method.is_laplace();
    let size = order.max(4) + 1;
    let mut c: Grid = vec![vec![0.0; terms + 1]; size];
    let mut powers = Powers::new(p, size - 1, terms);
    // value of eps^k-weighted term: linear terms sit at the same eps power
    // for LADM and one power higher for ADM
    let lin = |c: &Grid, n: usize, k: usize| -> f64 {
        if laplace {
            c[n][k]
        } else if k > 0 {
            c[n][k - 1]
        } else {
            0.0
        }
    };
    let nonlinear = |powers: &Powers, n: usize, k: usize| -> f64 {
        if k > 0 {
            powers.g(p, n, k - 1)
        } else {
            0.0
        }
    };
    let source = |n: usize, k: usize| -> f64 {
        if k == 0 {
            p.forcing.coeff(n) - if n == 0 { p.b2 } else { 0.0 }
        } else {
            0.0
        }
    };

    match method {
        Method::Adm1d | Method::Ladm1d => {
            c[0][0] = p.y0;
            c[1][0] = p.y1;
            c[2][0] = p.y2 / 2.0;
            c[3][0] = p.y3 / 6.0;
            for n in 0..size - 4 {
                powers.extend(&c, n);
                let nf = n as f64;
                for k in 0..=terms {
                    let rhs = source(n, k)
                        - p.omega * lin(&c, n, k)
                        - p.alpha * (nf + 1.0) * (nf + 2.0) * lin(&c, n + 2, k)
                        - nonlinear(&powers, n, k);
                    c[n + 4][k] = rhs / ((nf + 1.0) * (nf + 2.0) * (nf + 3.0) * (nf + 4.0));
                }
            }
        }
        Method::AdmRadial | Method::LadmRadial => {
            p.check_regularity()?;
            c[0][0] = p.y0;
            c[1][0] = if p.allow_irregular { p.y1 } else { 0.0 };
            c[2][0] = p.y2 / 2.0;
            for m in 0..size - 3 {
                let mf = m as f64;
                if m >= 1 {
                    powers.extend(&c, m - 1);
                }
                for k in 0..=terms {
                    let mut rhs = -p.alpha * (mf + 1.0) * (mf + 2.0) * lin(&c, m + 1, k);
                    if m >= 1 {
                        rhs += source(m - 1, k)
                            - p.omega * lin(&c, m - 1, k)
                            - nonlinear(&powers, m - 1, k);
                    }
                    c[m + 3][k] = rhs / ((mf + 1.0) * (mf + 2.0) * (mf + 3.0) * (mf + 4.0));
                }
            }
        }
    }

    (0..=terms)
        .map(|k| XSeries::new((0..=order).map(|n| c[n][k]).collect()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problem::Geometry;
    use crate::solvers::taylor_oracle;

    #[test]
    fn eps_one_sum_tracks_oracle_at_low_degree() {
        // Summing all eps powers up to K reproduces the exact solution on
        // the degrees where higher powers of eps cannot contribute.
        for method in [
            Method::Adm1d,
            Method::Ladm1d,
            Method::AdmRadial,
            Method::LadmRadial,
        ] {
            let p = Problem::standing_wave(method.geometry(), 1, 0.7, -0.4);
            let comps = component_oracle(method, &p, 2, 20).unwrap();
            let sum = comps.iter().skip(1).fold(comps[0].clone(), |a, c| &a + c);
            let exact = taylor_oracle(&p, 20).unwrap();
            for n in 0..=11 {
                let (a, b) = (sum.coeff(n), exact.coeff(n));
                assert!(
                    (a - b).abs() <= 1e-13 * b.abs().max(1e-300),
                    "{method} n = {n}"
                );
            }
        }
    }

    #[test]
    fn adm_line_first_component() {
        let p = Problem::standing_wave(Geometry::Line, 1, 2.0, 0.0);
        let comps = component_oracle(Method::Adm1d, &p, 1, 12).unwrap();
        assert!((comps[1].coeff(4) - 1.0 / 12.0).abs() < 1e-16);
        assert_eq!(comps[0].coeffs()[..5], [2.0, 0.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn rejects_wrong_geometry() {
        let p = Problem::standing_wave(Geometry::Line, 1, 1.0, 0.0);
        assert!(component_oracle(Method::AdmRadial, &p, 1, 8).is_err());
    }
}
