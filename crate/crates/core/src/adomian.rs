//! Adomian polynomials for polynomial nonlinearities.
//!
//! `A_n` is the coefficient of `eps^n` in `g(y_0 + eps y_1 + eps^2 y_2 + ...)`.
//! For polynomial `g` that expansion is finite, so it is computed exactly by
//! evaluating `g` with Horner's rule over series whose coefficients are
//! themselves [`XSeries`] (an eps-graded object truncated at degree `K`).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::series::XSeries;

/// `g(y) = sum c_i y^{m_i}` with distinct non-negative integer powers.
#[derive(Debug, Clone, PartialEq)]
pub struct NonlinearitySpec {
    // sorted by power, powers distinct
    terms: Vec<(f64, u32)>,
}

impl NonlinearitySpec {
    pub fn new(terms: Vec<(f64, u32)>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::InvalidNonlinearity(
                "at least one term is required".into(),
            ));
        }
        if terms.iter().any(|(c, _)| !c.is_finite()) {
            return Err(Error::NonFinite("nonlinearity coefficient"));
        }
        let mut terms = terms;
        terms.sort_by_key(|&(_, m)| m);
        if terms.windows(2).any(|w| w[0].1 == w[1].1) {
            return Err(Error::InvalidNonlinearity("repeated power".into()));
        }
        Ok(Self { terms })
    }

    /// `coeff * y^power`.
    pub fn monomial(coeff: f64, power: u32) -> Result<Self> {
        Self::new(vec![(coeff, power)])
    }

    /// The standing-wave term `-y^{2 sigma + 1}`, written with `twice_sigma = 2 sigma`.
    pub fn standing_wave(twice_sigma: u32) -> Self {
        Self {
            terms: vec![(-1.0, twice_sigma + 1)],
        }
    }

    pub fn terms(&self) -> &[(f64, u32)] {
        &self.terms
    }

    pub fn degree(&self) -> u32 {
        self.terms.last().map_or(0, |&(_, m)| m)
    }

    /// Dense coefficients `[c_0, c_1, ..., c_degree]`.
    pub fn dense(&self) -> Vec<f64> {
        let mut d = vec![0.0; self.degree() as usize + 1];
        for &(c, m) in &self.terms {
            d[m as usize] = c;
        }
        d
    }

    pub fn eval(&self, y: f64) -> f64 {
        horner(&self.dense(), y)
    }

    /// `g` applied to a series.
    pub fn eval_series(&self, y: &XSeries) -> XSeries {
        eval_dense_series(&self.dense(), y)
    }

    /// The same powers with absolute coefficients.
    pub fn abs(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|&(c, m)| (c.abs(), m)).collect(),
        }
    }
}

fn horner(dense: &[f64], y: f64) -> f64 {
    dense.iter().rev().fold(0.0, |acc, &c| acc * y + c)
}

/// Dense coefficients of the `j`-th derivative of a dense polynomial.
fn derivative_dense(dense: &[f64], j: usize) -> Vec<f64> {
    if j >= dense.len() {
        return vec![0.0];
    }
    (j..dense.len())
        .map(|m| {
            let falling: f64 = (m + 1 - j..=m).map(|v| v as f64).product();
            dense[m] * falling
        })
        .collect()
}

fn eval_dense_series(dense: &[f64], y: &XSeries) -> XSeries {
    let mut acc = XSeries::constant(0.0, y.order());
    for &c in dense.iter().rev() {
        acc = &acc * y;
        acc = &acc + &XSeries::constant(c, y.order());
    }
    acc
}

impl fmt::Display for NonlinearitySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &(c, m)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{c}*y^{m}")?;
        }
        Ok(())
    }
}

/// Parses `c*y^m` terms joined by `+`, e.g. `y^2`, `-y^2` or `1.0*y^3+-2.0*y^5`.
/// Bare `y` and bare constants are accepted as powers one and zero.
impl FromStr for NonlinearitySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let terms = parse_terms(s, 'y')?;
        let mut merged: Vec<(f64, u32)> = Vec::new();
        for (c, m) in terms {
            match merged.iter_mut().find(|(_, p)| *p == m) {
                Some(t) => t.0 += c,
                None => merged.push((c, m)),
            }
        }
        Self::new(merged)
    }
}

/// Splits `c*v^m + ...` into `(c, m)` pairs for the variable `var`.
pub(crate) fn parse_terms(s: &str, var: char) -> Result<Vec<(f64, u32)>> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    // split before binary '+'/'-', skipping signs of exponents like 1e-5
    // and unary signs as in `+-2*y`; a '-' stays with its term
    let mut pieces = Vec::new();
    let mut start = 0;
    let bytes = compact.as_bytes();
    for i in 1..bytes.len() {
        let binary = !matches!(bytes[i - 1], b'e' | b'E' | b'+' | b'-' | b'*' | b'^');
        if binary && bytes[i] == b'+' {
            pieces.push(&compact[start..i]);
            start = i + 1;
        } else if binary && bytes[i] == b'-' {
            pieces.push(&compact[start..i]);
            start = i;
        }
    }
    pieces.push(&compact[start..]);

    pieces
        .into_iter()
        .map(|p| parse_term(p, var).ok_or_else(|| Error::Parse(format!("bad term `{p}`"))))
        .collect()
}

fn parse_term(p: &str, var: char) -> Option<(f64, u32)> {
    if p.is_empty() {
        return None;
    }
    let Some(pos) = p.find(var) else {
        let c: f64 = p.parse().ok()?;
        return c.is_finite().then_some((c, 0));
    };
    let (coef, rest) = p.split_at(pos);
    let coef: f64 = match coef {
        "" => 1.0,
        "-" => -1.0,
        c => c.strip_suffix('*')?.parse().ok()?,
    };
    let rest = &rest[var.len_utf8()..];
    let power = if rest.is_empty() {
        1
    } else {
        rest.strip_prefix('^')?.parse().ok()?
    };
    coef.is_finite().then_some((coef, power))
}

fn check_orders(components: &[XSeries]) -> Result<usize> {
    let order = components
        .first()
        .map(XSeries::order)
        .ok_or_else(|| Error::InvalidArgument("no components".into()))?;
    if let Some(bad) = components.iter().find(|c| c.order() != order) {
        return Err(Error::MismatchedOrders(order, bad.order()));
    }
    Ok(order)
}

/// eps-graded product truncated at eps-degree `k_max`.
fn graded_mul(a: &[XSeries], b: &[XSeries], k_max: usize, order: usize) -> Vec<XSeries> {
    (0..=k_max)
        .map(|k| {
            (0..=k).fold(XSeries::zero(order), |acc, i| {
                if a[i].is_zero() || b[k - i].is_zero() {
                    acc
                } else {
                    &acc + &(&a[i] * &b[k - i])
                }
            })
        })
        .collect()
}

/// `A_0 ..= A_k_max` for `g` and the decomposition `components`.
pub fn adomian_polys(
    g: &NonlinearitySpec,
    components: &[XSeries],
    k_max: usize,
) -> Result<Vec<XSeries>> {
    if components.len() < k_max + 1 {
        return Err(Error::InvalidArgument(format!(
            "need {} components, got {}",
            k_max + 1,
            components.len()
        )));
    }
    let order = check_orders(components)?;
    let y = &components[..=k_max];
    let dense = g.dense();

    let graded_const = |c: f64| {
        let mut v = vec![XSeries::zero(order); k_max + 1];
        v[0] = XSeries::constant(c, order);
        v
    };

    let mut acc = graded_const(dense[dense.len() - 1]);
    for &c in dense.iter().rev().skip(1) {
        acc = graded_mul(&acc, y, k_max, order);
        acc[0] = &acc[0] + &XSeries::constant(c, order);
    }
    Ok(acc)
}

/// `A_0 ..= A_4` from the explicit low-order formulas in terms of the
/// derivatives of `g` evaluated at `y_0`.
pub fn adomian_closed_forms(g: &NonlinearitySpec, components: &[XSeries]) -> Result<Vec<XSeries>> {
    if components.len() < 5 {
        return Err(Error::InvalidArgument(
            "closed forms need five components".into(),
        ));
    }
    let order = check_orders(components)?;
    let y = &components[..5];
    let dense = g.dense();
    let f: Vec<XSeries> = (0..=4)
        .map(|j| eval_dense_series(&derivative_dense(&dense, j), &y[0]))
        .collect();
    let c = |v: f64| XSeries::constant(v, order);
    let prod = |xs: &[&XSeries]| xs.iter().fold(c(1.0), |acc, x| &acc * *x);

    let a0 = f[0].clone();
    let a1 = prod(&[&y[1], &f[1]]);
    let a2 = &prod(&[&y[2], &f[1]]) + &prod(&[&c(0.5), &y[1], &y[1], &f[2]]);
    let a3 = &(&prod(&[&y[3], &f[1]]) + &prod(&[&y[1], &y[2], &f[2]]))
        + &prod(&[&c(1.0 / 6.0), &y[1], &y[1], &y[1], &f[3]]);
    let second = &prod(&[&c(0.5), &y[2], &y[2]]) + &prod(&[&y[1], &y[3]]);
    let a4 = &(&(&prod(&[&y[4], &f[1]]) + &prod(&[&second, &f[2]]))
        + &prod(&[&c(0.5), &y[1], &y[1], &y[2], &f[3]]))
        + &prod(&[&c(1.0 / 24.0), &y[1], &y[1], &y[1], &y[1], &f[4]]);
    Ok(vec![a0, a1, a2, a3, a4])
}
