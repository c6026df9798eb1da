//! Semi-analytic solvers for nonlinear biharmonic ordinary differential
//! equations on the line and with radial symmetry in three dimensions:
//!
//! ```text
//! y'''' + alpha y'' + omega y + b^2 + g(y) = f(x)
//! y'''' + (4/r) y''' + alpha (y'' + (2/r) y') + omega y + b^2 + g(y) = f(r)
//! ```
//!
//! Solutions are built as Adomian decompositions `y = sum y_k`, either by
//! repeated integration (ADM) or through formal Laplace transforms (LADM).
//! Every component is an exact truncated Maclaurin series, so results can be
//! checked against the Taylor-recurrence oracles coefficient by coefficient
//! and against a Runge-Kutta integration pointwise.

pub mod adomian;
pub mod error;
pub mod laplace;
pub mod numeric;
pub mod problem;
pub mod regression;
pub mod series;
pub mod solvers;

pub use adomian::{adomian_closed_forms, adomian_polys, NonlinearitySpec};
pub use error::{Error, Result};
pub use laplace::{from_s_domain, to_s_domain, SSeries};
pub use numeric::{compare, integrate_numeric, ComparisonReport, SampleTable};
pub use problem::{parse_forcing, Geometry, Problem};
pub use series::{XSeries, DEFAULT_ORDER};
pub use solvers::{
    component_oracle, first_mismatch, first_mismatch_scaled, residual, residual_floor_degree,
    residual_floor_degree_with, solve_adm_1d, solve_adm_radial, solve_ladm_1d, solve_ladm_radial,
    taylor_oracle, taylor_oracle_1d, taylor_oracle_radial, Expansion, Method, DEFAULT_TERMS,
};
