//! Decomposition solvers, the Taylor-recurrence oracles and the residual check.
//!
//! Every solver returns an [`Expansion`]: the components `y_0 ..= y_K` of the
//! decomposition `y = sum y_k`, all truncated to one working order. Partial
//! sums of the components are the semi-analytic approximations.

mod adm;
mod graded;
mod ladm;
mod residual;
mod taylor;

use std::fmt;
use std::str::FromStr;

pub use adm::{radial_kernel, radial_kernel_laplacian, solve_adm_1d, solve_adm_radial};
pub use graded::component_oracle;
pub use ladm::{solve_ladm_1d, solve_ladm_radial};
pub use residual::{residual, residual_floor_degree, residual_floor_degree_with};
pub use taylor::{taylor_oracle, taylor_oracle_1d, taylor_oracle_radial};

use crate::error::{Error, Result};
use crate::problem::{Geometry, Problem};
use crate::series::XSeries;

/// Default number of correction terms `K` (components `0..=K`).
pub const DEFAULT_TERMS: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Adm1d,
    Ladm1d,
    AdmRadial,
    LadmRadial,
}

impl Method {
    pub fn geometry(self) -> Geometry {
        match self {
            Method::Adm1d | Method::Ladm1d => Geometry::Line,
            Method::AdmRadial | Method::LadmRadial => Geometry::Radial3d,
        }
    }

    pub fn is_laplace(self) -> bool {
        matches!(self, Method::Ladm1d | Method::LadmRadial)
    }

    /// Picks the ADM or LADM variant matching the problem geometry.
    pub fn for_geometry(geometry: Geometry, laplace: bool) -> Self {
        match (geometry, laplace) {
            (Geometry::Line, false) => Method::Adm1d,
            (Geometry::Line, true) => Method::Ladm1d,
            (Geometry::Radial3d, false) => Method::AdmRadial,
            (Geometry::Radial3d, true) => Method::LadmRadial,
        }
    }

    pub fn solve(self, p: &Problem, terms: usize, order: usize) -> Result<Expansion> {
        match self {
            Method::Adm1d => solve_adm_1d(p, terms, order),
            Method::Ladm1d => solve_ladm_1d(p, terms, order),
            Method::AdmRadial => solve_adm_radial(p, terms, order),
            Method::LadmRadial => solve_ladm_radial(p, terms, order),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Adm1d => "ADM_1D",
            Method::Ladm1d => "LADM_1D",
            Method::AdmRadial => "ADM_RADIAL",
            Method::LadmRadial => "LADM_RADIAL",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "ADM_1D" => Ok(Method::Adm1d),
            "LADM_1D" => Ok(Method::Ladm1d),
            "ADM_RADIAL" => Ok(Method::AdmRadial),
            "LADM_RADIAL" => Ok(Method::LadmRadial),
            other => Err(Error::Parse(format!("unknown method `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Expansion {
    pub components: Vec<XSeries>,
    pub method: Method,
    pub problem: Problem,
}

impl Expansion {
    pub fn order(&self) -> usize {
        self.components[0].order()
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// `y_0 + ... + y_upto`.
    pub fn partial_sum(&self, upto: usize) -> Result<XSeries> {
        if upto >= self.components.len() {
            return Err(Error::IndexOutOfRange {
                index: upto,
                len: self.components.len(),
            });
        }
        Ok(self.components[1..=upto]
            .iter()
            .fold(self.components[0].clone(), |acc, c| &acc + c))
    }

    /// `|y_0| + ... + |y_upto|`, the natural scale for rounding in
    /// [`Expansion::partial_sum`].
    pub fn magnitude(&self, upto: usize) -> Result<XSeries> {
        if upto >= self.components.len() {
            return Err(Error::IndexOutOfRange {
                index: upto,
                len: self.components.len(),
            });
        }
        Ok(self.components[1..=upto]
            .iter()
            .fold(self.components[0].abs(), |acc, c| &acc + &c.abs()))
    }

    pub fn sum(&self) -> XSeries {
        self.partial_sum(self.components.len() - 1)
            .expect("expansions hold at least one component")
    }
}

/// First degree in `0..=max_degree` where `a` and `b` differ by more than
/// `rel_tol` relative to the larger magnitude, or `None` if they agree.
pub fn first_mismatch(a: &XSeries, b: &XSeries, max_degree: usize, rel_tol: f64) -> Option<usize> {
    (0..=max_degree).find(|&n| {
        let (x, y) = (a.coeff(n), b.coeff(n));
        (x - y).abs() > rel_tol * x.abs().max(y.abs()).max(1e-300)
    })
}

/// As [`first_mismatch`], with `scale` (coefficientwise) added to the
/// magnitudes the tolerance is relative to. Used when `a` is a sum whose
/// terms may cancel exactly.
pub fn first_mismatch_scaled(
    a: &XSeries,
    b: &XSeries,
    scale: &XSeries,
    max_degree: usize,
    rel_tol: f64,
) -> Option<usize> {
    (0..=max_degree).find(|&n| {
        let (x, y) = (a.coeff(n), b.coeff(n));
        let s = x.abs().max(y.abs()).max(scale.coeff(n).abs()).max(1e-300);
        (x - y).abs() > rel_tol * s
    })
}

pub(crate) fn check_order(order: usize) -> Result<()> {
    if order == 0 {
        return Err(Error::InvalidArgument(
            "truncation order must be positive".into(),
        ));
    }
    Ok(())
}
