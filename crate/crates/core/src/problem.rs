use std::fmt;
use std::str::FromStr;

use crate::adomian::{parse_terms, NonlinearitySpec};
use crate::error::{Error, Result};
use crate::series::XSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Geometry {
    /// `y'''' + alpha y'' + omega y + b^2 + g(y) = f(x)`
    Line,
    /// `y'''' + (4/r) y''' + alpha (y'' + (2/r) y') + omega y + b^2 + g(y) = f(r)`
    Radial3d,
}

impl fmt::Display for Geometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Geometry::Line => "line",
            Geometry::Radial3d => "radial",
        })
    }
}

impl FromStr for Geometry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "line" | "1d" => Ok(Geometry::Line),
            "radial" | "radial3d" | "3d" => Ok(Geometry::Radial3d),
            other => Err(Error::Parse(format!("unknown geometry `{other}`"))),
        }
    }
}

/// A fourth-order initial-value problem together with its initial data.
///
/// The forcing `f` is a polynomial; its coefficients beyond the stored order
/// are zero.
#[derive(Debug, Clone, PartialEq)]
pub struct Problem {
    pub geometry: Geometry,
    pub alpha: f64,
    pub omega: f64,
    pub b2: f64,
    pub g: NonlinearitySpec,
    pub forcing: XSeries,
    /// `y(0)`, `y'(0)`, `y''(0)`, `y'''(0)`
    pub y0: f64,
    pub y1: f64,
    pub y2: f64,
    pub y3: f64,
    /// Lets radial solvers accept nonzero `y'(0)`. `y'''(0)` is then
    /// ignored, since the radial equation fixes it.
    pub allow_irregular: bool,
}

impl Problem {
    pub fn new(geometry: Geometry, g: NonlinearitySpec) -> Self {
        Self {
            geometry,
            alpha: 0.0,
            omega: 0.0,
            b2: 0.0,
            g,
            forcing: XSeries::zero(0),
            y0: 0.0,
            y1: 0.0,
            y2: 0.0,
            y3: 0.0,
            allow_irregular: false,
        }
    }

    /// `Delta^2 R + R - R^{2 sigma + 1} = 0` with `R(0) = r0`, `R''(0) = r2`
    /// and vanishing odd derivatives.
    pub fn standing_wave(geometry: Geometry, twice_sigma: u32, r0: f64, r2: f64) -> Self {
        Self {
            omega: 1.0,
            y0: r0,
            y2: r2,
            ..Self::new(geometry, NonlinearitySpec::standing_wave(twice_sigma))
        }
    }

    pub fn validate(&self) -> Result<()> {
        let scalars = [
            self.alpha, self.omega, self.b2, self.y0, self.y1, self.y2, self.y3,
        ];
        if scalars.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("problem parameters"));
        }
        if self.forcing.coeffs().iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("forcing"));
        }
        Ok(())
    }

    pub(crate) fn expect_geometry(&self, geometry: Geometry) -> Result<()> {
        if self.geometry != geometry {
            return Err(Error::GeometryMismatch(format!(
                "solver expects {geometry} geometry, problem is {}",
                self.geometry
            )));
        }
        Ok(())
    }

    pub(crate) fn check_regularity(&self) -> Result<()> {
        if self.geometry == Geometry::Radial3d && !self.allow_irregular {
            if self.y1 != 0.0 {
                return Err(Error::RegularityViolation(format!(
                    "y'(0) = {} must vanish",
                    self.y1
                )));
            }
            if self.y3 != 0.0 {
                return Err(Error::RegularityViolation(format!(
                    "y'''(0) = {} must vanish",
                    self.y3
                )));
            }
        }
        Ok(())
    }

    /// Same problem with every coefficient replaced by its magnitude.
    pub(crate) fn magnitudes(&self) -> Problem {
        Problem {
            alpha: self.alpha.abs(),
            omega: self.omega.abs(),
            b2: self.b2.abs(),
            g: self.g.abs(),
            forcing: self.forcing.abs(),
            ..self.clone()
        }
    }

    /// Forcing as a series of the working order.
    pub(crate) fn forcing_at(&self, order: usize) -> XSeries {
        self.forcing.resized(order)
    }
}

/// Parses a polynomial in `x` such as `0`, `1+0.5*x^2` or `-x^3`.
pub fn parse_forcing(s: &str) -> Result<XSeries> {
    let terms = parse_terms(s, 'x')?;
    let degree = terms.iter().map(|&(_, m)| m as usize).max().unwrap_or(0);
    let mut coeffs = vec![0.0; degree + 1];
    for (c, m) in terms {
        coeffs[m as usize] += c;
    }
    XSeries::new(coeffs)
}
