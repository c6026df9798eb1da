//! Formal Laplace-domain series in inverse powers of `s`.
//!
//! A polynomial `sum a_n x^n` transforms to `sum a_n n! s^-(n+1)`, so every
//! truncated Maclaurin series has an exact image as a finite sum of strictly
//! negative powers of `s`. Division by the characteristic quartic
//! `s^4 + alpha s^2 + omega` is a convolution with the expansion
//!
//! ```text
//! 1 / (s^4 + alpha s^2 + omega) = s^-4 * sum_j d_j s^-2j,
//! d_0 = 1, d_1 = -alpha, d_j = -alpha d_{j-1} - omega d_{j-2}
//! ```
//!
//! which reproduces the Maclaurin coefficients of the inverse transform
//! without any partial-fraction work.

use crate::error::{Error, Result};
use crate::series::XSeries;

/// Truncated series `sum_{k=1}^{max_k} c_k s^-k`.
#[derive(Debug, Clone, PartialEq)]
pub struct SSeries {
    // coeffs[i] multiplies s^-(i+1)
    coeffs: Vec<f64>,
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|j| j as f64).product()
}

/// `d_0 .. d_{len-1}` of the characteristic divisor expansion.
fn divisor_coeffs(alpha: f64, omega: f64, len: usize) -> Vec<f64> {
    let mut d = Vec::with_capacity(len);
    for j in 0..len {
        let v = match j {
            0 => 1.0,
            1 => -alpha,
            _ => -alpha * d[j - 1] - omega * d[j - 2],
        };
        d.push(v);
    }
    d
}

impl SSeries {
    /// `coeffs[i]` is the coefficient of `s^-(i+1)`.
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptySeries);
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite("transform coefficients"));
        }
        Ok(Self { coeffs })
    }

    pub fn zero(max_k: usize) -> Self {
        assert!(max_k >= 1, "an SSeries holds at least the s^-1 slot");
        Self {
            coeffs: vec![0.0; max_k],
        }
    }

    /// `value * s^-k` inside a window of `max_k` inverse powers.
    pub fn inverse_power(value: f64, k: usize, max_k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::NonDecayingTransform("s^0 term".into()));
        }
        let mut out = Self::zero(max_k);
        if k <= max_k {
            out.coeffs[k - 1] = value;
        }
        Ok(out)
    }

    pub fn max_k(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of `s^-k`; zero outside `1..=max_k`.
    pub fn coeff(&self, k: usize) -> f64 {
        if k == 0 {
            return 0.0;
        }
        self.coeffs.get(k - 1).copied().unwrap_or(0.0)
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.max_k().min(other.max_k());
        Self {
            coeffs: (0..n).map(|i| self.coeffs[i] + other.coeffs[i]).collect(),
        }
    }

    /// Laplace transform of a truncated Maclaurin series.
    pub fn from_x(a: &XSeries) -> Self {
        Self {
            coeffs: a
                .coeffs()
                .iter()
                .enumerate()
                .map(|(n, &c)| c * factorial(n))
                .collect(),
        }
    }

    /// Inverse transform back to a Maclaurin series of order `max_k - 1`.
    pub fn to_x(&self) -> XSeries {
        XSeries::from_vec_unchecked(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, &c)| c / factorial(n))
                .collect(),
        )
    }

    /// Multiplies by `1 / (s^4 + alpha s^2 + omega)`, keeping the window.
    pub fn char_divide(&self, alpha: f64, omega: f64) -> Self {
        let max_k = self.max_k();
        let d = divisor_coeffs(alpha, omega, max_k / 2 + 1);
        let mut out = vec![0.0; max_k];
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            let k = i + 1;
            for (j, &dj) in d.iter().enumerate() {
                let target = k + 4 + 2 * j;
                if target > max_k {
                    break;
                }
                out[target - 1] += c * dj;
            }
        }
        Self { coeffs: out }
    }

    /// `(n_0 + n_1 s + n_2 s^2 + n_3 s^3) / (s^4 + alpha s^2 + omega)` in a
    /// window of `max_k` inverse powers.
    ///
    /// Numerators of degree four or more would leave non-negative powers of
    /// `s` and are rejected unless their high coefficients vanish.
    pub fn char_divide_polynomial(
        numerator: &[f64],
        alpha: f64,
        omega: f64,
        max_k: usize,
    ) -> Result<Self> {
        if numerator.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite("numerator"));
        }
        if numerator.iter().skip(4).any(|&c| c != 0.0) {
            return Err(Error::NonDecayingTransform(
                "numerator degree must be below the quartic".into(),
            ));
        }
        let d = divisor_coeffs(alpha, omega, max_k / 2 + 2);
        let mut out = vec![0.0; max_k];
        for (p, &c) in numerator.iter().take(4).enumerate() {
            if c == 0.0 {
                continue;
            }
            // s^p * s^-4 * s^-2j
            for (j, &dj) in d.iter().enumerate() {
                let target = 4 - p + 2 * j;
                if target > max_k {
                    break;
                }
                out[target - 1] += c * dj;
            }
        }
        Ok(Self { coeffs: out })
    }

    /// Multiplies by `s^4 + alpha s^2 + omega`.
    ///
    /// Only the lowest `max_k - 4` inverse powers of the result are complete.
    /// Fails if a nonzero term would land on a non-negative power.
    pub fn char_multiply(&self, alpha: f64, omega: f64) -> Result<Self> {
        let max_k = self.max_k();
        let mut out = vec![0.0; max_k];
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            let k = i + 1;
            for (shift, factor) in [(4usize, 1.0), (2, alpha), (0, omega)] {
                if factor == 0.0 {
                    continue;
                }
                if k <= shift {
                    return Err(Error::NonDecayingTransform(format!(
                        "s^{} term after multiplication",
                        shift - k
                    )));
                }
                out[k - shift - 1] += c * factor;
            }
        }
        Ok(Self { coeffs: out })
    }

    /// `d/ds`; the window grows by one inverse power.
    pub fn s_derivative(&self) -> Self {
        let mut out = vec![0.0; self.max_k() + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            let k = i + 1;
            out[k] = -(k as f64) * c;
        }
        Self { coeffs: out }
    }

    /// Antiderivative in `s` with the constant fixed by decay at infinity;
    /// the window shrinks by one inverse power.
    pub fn s_antiderivative(&self) -> Result<Self> {
        if self.coeffs[0] != 0.0 {
            return Err(Error::NonDecayingTransform(
                "s^-1 term integrates to a logarithm".into(),
            ));
        }
        if self.max_k() < 2 {
            return Err(Error::InvalidArgument(
                "antiderivative needs at least two inverse powers".into(),
            ));
        }
        let coeffs = (2..=self.max_k())
            .map(|k| self.coeffs[k - 1] / -((k - 1) as f64))
            .collect();
        Ok(Self { coeffs })
    }
}

/// Laplace transform of a Maclaurin series.
pub fn to_s_domain(a: &XSeries) -> SSeries {
    SSeries::from_x(a)
}

/// Inverse Laplace transform of a formal series.
pub fn from_s_domain(f: &SSeries) -> XSeries {
    f.to_x()
}
