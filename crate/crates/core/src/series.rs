//! Dense truncated Maclaurin series in the spatial variable.
//!
//! Every solution component, Adomian polynomial, forcing term and residual is
//! stored as an [`XSeries`]: the coefficients `c[0..=order]` of
//! `c[0] + c[1] x + ... + c[order] x^order`. Binary operations truncate to the
//! smaller of the two orders so that no high-order coefficient is ever
//! fabricated from missing information.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Default truncation order used by the solvers.
pub const DEFAULT_ORDER: usize = 40;

#[derive(Debug, Clone, PartialEq)]
pub struct XSeries {
    coeffs: Vec<f64>,
}

impl XSeries {
    /// Builds a series from its coefficients; the order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptySeries);
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite("series coefficients"));
        }
        Ok(Self { coeffs })
    }

    pub(crate) fn from_vec_unchecked(coeffs: Vec<f64>) -> Self {
        debug_assert!(!coeffs.is_empty());
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![0.0; order + 1],
        }
    }

    pub fn constant(value: f64, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = value;
        s
    }

    /// `value * x^degree`, truncated to `order` (zero if `degree > order`).
    pub fn monomial(value: f64, degree: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if degree <= order {
            s.coeffs[degree] = value;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Coefficient of `x^n`; zero beyond the truncation order.
    pub fn coeff(&self, n: usize) -> f64 {
        self.coeffs.get(n).copied().unwrap_or(0.0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0.0)
    }

    /// Lowest degree whose coefficient exceeds `tol` in magnitude.
    pub fn lowest_degree(&self, tol: f64) -> Option<usize> {
        self.coeffs.iter().position(|c| c.abs() > tol)
    }

    /// Pads with zeros or truncates to the requested order.
    ///
    /// Padding is only exact when the series is a polynomial of degree at
    /// most its current order, which is how forcing terms are supplied.
    pub fn resized(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, 0.0);
        Self { coeffs }
    }

    pub fn truncated(&self, order: usize) -> Self {
        if order >= self.order() {
            self.clone()
        } else {
            Self {
                coeffs: self.coeffs[..=order].to_vec(),
            }
        }
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Coefficientwise absolute value.
    pub fn abs(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c.abs()).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self {
            coeffs: (0..=order)
                .map(|n| self.coeffs[n] + other.coeffs[n])
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self {
            coeffs: (0..=order)
                .map(|n| self.coeffs[n] - other.coeffs[n])
                .collect(),
        }
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![0.0; order + 1];
        for (i, &a) in self.coeffs[..=order].iter().enumerate() {
            if a == 0.0 {
                continue;
            }
            for (j, &b) in other.coeffs[..=order - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self { coeffs: out }
    }

    /// `self^m` by repeated multiplication; `m = 0` gives the constant 1.
    pub fn pow(&self, m: u32) -> Self {
        let mut acc = Self::constant(1.0, self.order());
        for _ in 0..m {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplication by the independent variable. Exact, so the order grows by one.
    pub fn mul_x(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(0.0);
        coeffs.extend_from_slice(&self.coeffs);
        Self { coeffs }
    }

    /// `n`-fold antiderivative with all integration constants zero.
    ///
    /// Degree `k` maps to degree `k + n` divided by `(k+1)(k+2)...(k+n)`.
    pub fn integrate_n(&self, n: usize) -> Self {
        let mut coeffs = vec![0.0; self.coeffs.len() + n];
        for (k, &c) in self.coeffs.iter().enumerate() {
            let denom: f64 = (k + 1..=k + n).map(|j| j as f64).product();
            coeffs[k + n] = c / denom;
        }
        Self { coeffs }
    }

    /// `n`-th derivative; the order drops by `n`.
    pub fn differentiate(&self, n: usize) -> Result<Self> {
        let order = self.order();
        if n > order {
            return Err(Error::OrderTooLow { n, order });
        }
        let coeffs = (n..=order)
            .map(|k| {
                let falling: f64 = (k + 1 - n..=k).map(|j| j as f64).product();
                self.coeffs[k] * falling
            })
            .collect();
        Ok(Self { coeffs })
    }

    /// Horner evaluation of the truncated polynomial.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }
}

impl fmt::Display for XSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, &c) in self.coeffs.iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

impl Add for &XSeries {
    type Output = XSeries;
    fn add(self, rhs: &XSeries) -> XSeries {
        XSeries::add(self, rhs)
    }
}

impl Sub for &XSeries {
    type Output = XSeries;
    fn sub(self, rhs: &XSeries) -> XSeries {
        XSeries::sub(self, rhs)
    }
}

impl Mul for &XSeries {
    type Output = XSeries;
    fn mul(self, rhs: &XSeries) -> XSeries {
        XSeries::mul(self, rhs)
    }
}

impl Neg for &XSeries {
    type Output = XSeries;
    fn neg(self) -> XSeries {
        self.scale(-1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(c: &[f64]) -> XSeries {
        XSeries::new(c.to_vec()).unwrap()
    }

    #[test]
    fn rejects_non_finite_and_empty() {
        assert_eq!(XSeries::new(vec![]), Err(Error::EmptySeries));
        assert!(XSeries::new(vec![1.0, f64::NAN]).is_err());
        assert!(XSeries::new(vec![f64::INFINITY]).is_err());
    }

    #[test]
    fn add_examples() {
        assert_eq!(&s(&[1.0, 1.0]) + &s(&[1.0, -1.0]), s(&[2.0, 0.0]));
        let a = s(&[3.0, -2.0, 0.5]);
        assert_eq!(&XSeries::zero(2) + &a, a);
        let q = XSeries::monomial(1.0 / 24.0, 4, 6);
        assert!((&q + &q.scale(-1.0)).is_zero());
    }

    #[test]
    fn add_truncates_to_min_order() {
        let r = &s(&[1.0, 2.0, 3.0]) + &s(&[1.0]);
        assert_eq!(r.order(), 0);
        assert_eq!(r.coeffs(), &[2.0]);
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&s(&[1.0, 1.0]) * &s(&[1.0, -1.0]), s(&[1.0, 0.0]));
        // with enough room the x^2 term shows up
        assert_eq!(
            &s(&[1.0, 1.0, 0.0]) * &s(&[1.0, -1.0, 0.0]),
            s(&[1.0, 0.0, -1.0])
        );
        let a = s(&[1.0, 2.0, 3.0]);
        assert_eq!(&a * &a, s(&[1.0, 4.0, 10.0]));
        assert!((&a * &XSeries::zero(2)).is_zero());
    }

    #[test]
    fn pow_examples() {
        let a = s(&[1.0, 1.0, 0.0]);
        assert_eq!(a.pow(0), s(&[1.0, 0.0, 0.0]));
        assert_eq!(a.pow(2), s(&[1.0, 2.0, 1.0]));
        // R(0)=1, R''(0)=2: (1 + x^2)^2
        let r0 = s(&[1.0, 0.0, 1.0, 0.0, 0.0]);
        assert_eq!(r0.pow(2), s(&[1.0, 0.0, 2.0, 0.0, 1.0]));
    }

    #[test]
    fn integrate_examples() {
        let one = XSeries::constant(1.0, 2);
        let i4 = one.integrate_n(4);
        assert_eq!(i4.order(), 6);
        assert_eq!(i4.coeff(4), 1.0 / 24.0);
        let x2 = XSeries::monomial(1.0, 2, 2);
        assert_eq!(x2.integrate_n(4).coeff(6), 1.0 / 360.0);
        assert!(XSeries::zero(3).integrate_n(4).is_zero());
    }

    #[test]
    fn differentiate_examples() {
        let x2 = XSeries::monomial(1.0, 2, 4);
        assert_eq!(x2.differentiate(2).unwrap().coeffs(), &[2.0, 0.0, 0.0]);
        let q = XSeries::monomial(1.0 / 24.0, 4, 4);
        assert_eq!(q.differentiate(4).unwrap().coeffs(), &[1.0]);
        assert!(XSeries::constant(1.0, 4)
            .differentiate(4)
            .unwrap()
            .is_zero());
        assert_eq!(
            XSeries::constant(1.0, 2).differentiate(3),
            Err(Error::OrderTooLow { n: 3, order: 2 })
        );
    }

    #[test]
    fn eval_examples() {
        let mut c = vec![0.0; 5];
        c[0] = 1.0;
        c[4] = -1.0 / 24.0;
        assert_eq!(s(&c).eval(0.0), 1.0);
        assert_eq!(s(&[1.0, 1.0]).eval(2.0), 3.0);

        // cos(x/sqrt2) * cosh(x/sqrt2) from the two separate Maclaurin series
        let order = 16;
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let mut cos = vec![0.0; order + 1];
        let mut cosh = vec![0.0; order + 1];
        let mut fact = 1.0;
        for n in 0..=order {
            if n > 0 {
                fact *= n as f64;
            }
            if n % 2 == 0 {
                let t = h.powi(n as i32) / fact;
                cosh[n] = t;
                cos[n] = if (n / 2) % 2 == 0 { t } else { -t };
            }
        }
        let prod = &s(&cos) * &s(&cosh);
        let exact = h.cos() * h.cosh();
        assert!((prod.eval(1.0) - exact).abs() < 1e-10);
    }

    fn coeffs_strategy(max_len: usize) -> impl Strategy<Value = Vec<f64>> {
        prop::collection::vec(-10.0f64..10.0, 1..max_len)
    }

    fn rel_close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * a.abs().max(b.abs()).max(1e-300)
    }

    proptest! {
        #[test]
        fn integrate_then_differentiate_roundtrips(c in coeffs_strategy(20), n in 1usize..6) {
            let a = s(&c);
            let back = a.integrate_n(n).differentiate(n).unwrap();
            prop_assert_eq!(back.order(), a.order());
            for k in 0..=a.order() {
                prop_assert!(rel_close(back.coeff(k), a.coeff(k), 1e-14));
            }
        }

        #[test]
        fn mul_commutes_and_associates(
            a in coeffs_strategy(12), b in coeffs_strategy(12), c in coeffs_strategy(12)
        ) {
            let (a, b, c) = (s(&a), s(&b), s(&c));
            let ab = &a * &b;
            let ba = &b * &a;
            for k in 0..=ab.order() {
                prop_assert!(rel_close(ab.coeff(k), ba.coeff(k), 1e-12));
            }
            let l = &ab * &c;
            let r = &a * &(&b * &c);
            prop_assert_eq!(l.order(), r.order());
            // absolute slack for cancellation, scaled by the magnitude of the inputs
            let scale: f64 = [&a, &b, &c].iter()
                .map(|x| x.coeffs().iter().map(|v| v.abs()).sum::<f64>())
                .product();
            for k in 0..=l.order() {
                prop_assert!((l.coeff(k) - r.coeff(k)).abs() <= 1e-12 * scale.max(1.0));
            }
        }

        #[test]
        fn pow_is_repeated_mul(c in coeffs_strategy(10), m in 0u32..5) {
            let a = s(&c);
            let mut acc = XSeries::constant(1.0, a.order());
            for _ in 0..m {
                acc = &acc * &a;
            }
            prop_assert_eq!(a.pow(m), acc);
        }
    }
}
