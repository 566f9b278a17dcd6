//! Orthogonal-polynomial evaluation for the closed-form wavefunctions.
//!
//! Two families appear in the bound-state factors:
//!
//! * generalized Laguerre `L_n^{(α)}(x)` for the radial part, with real
//!   (possibly non-integer) order `α > -1`;
//! * Jacobi `P_n^{(a,b)}(x)` for the polar part, where one family needs
//!   complex parameters and a purely imaginary argument.
//!
//! Each polynomial has two independent evaluation paths: the three-term
//! recurrence (the workhorse) and the explicit hypergeometric series (used
//! to cross-check the recurrence and as a fallback when the recurrence
//! degenerates). The series is only trusted for small degrees (`n <= 12`)
//! where its term count and cancellation stay harmless.

use num_complex::Complex64;
use thiserror::Error;

/// Largest degree the explicit series forms accept.
pub const MAX_SERIES_DEGREE: u32 = 12;

#[derive(Debug, Error)]
pub enum SpecialFnError {
    #[error("polynomial input must be finite (got {value})")]
    NonFiniteInput { value: f64 },
    /// The Jacobi three-term recurrence hit a vanishing leading coefficient
    /// `2k(k+a+b)(2k+a+b-2)` and the degree is too large for the series
    /// fallback.
    #[error("jacobi recurrence degenerates at k = {at_k} for degree {degree} (a + b near a nonpositive integer); series fallback only covers n <= {max}", max = MAX_SERIES_DEGREE)]
    DegenerateRecurrence { degree: u32, at_k: u32 },
    #[error("series evaluation supports n <= {max} (got n = {n})", max = MAX_SERIES_DEGREE)]
    SeriesDegreeTooLarge { n: u32 },
}

/// Result of a polynomial evaluation together with a crude conditioning
/// estimate: the largest intermediate magnitude divided by the magnitude of
/// the final value. A hint much larger than 1 signals cancellation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolyEval {
    pub value: Complex64,
    pub degree: u32,
    pub condition_hint: f64,
}

fn hint(max_intermediate: f64, value: Complex64) -> f64 {
    max_intermediate / value.norm().max(f64::MIN_POSITIVE)
}

fn check_finite(v: f64) -> Result<(), SpecialFnError> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(SpecialFnError::NonFiniteInput { value: v })
    }
}

fn check_finite_c(v: Complex64) -> Result<(), SpecialFnError> {
    check_finite(v.re)?;
    check_finite(v.im)
}

/// Generalized Laguerre polynomial `L_n^{(α)}(x)` by upward recurrence
///
/// ```text
/// (k+1) L_{k+1} = (2k + 1 + α - x) L_k - (k + α) L_{k-1}
/// ```
///
/// # Examples
///
/// ```
/// use spinor_spectra::special::laguerre;
/// // L_2(x) = 1 - 2x + x^2/2 at x = 1
/// assert!((laguerre(2, 0.0, 1.0).unwrap() - (-0.5)).abs() < 1e-15);
/// ```
pub fn laguerre(n: u32, alpha: f64, x: f64) -> Result<f64, SpecialFnError> {
    Ok(laguerre_eval(n, alpha, x)?.value.re)
}

/// [`laguerre`] with the conditioning metadata attached.
pub fn laguerre_eval(n: u32, alpha: f64, x: f64) -> Result<PolyEval, SpecialFnError> {
    check_finite(alpha)?;
    check_finite(x)?;
    let mut prev = 1.0_f64;
    if n == 0 {
        return Ok(PolyEval { value: prev.into(), degree: 0, condition_hint: 1.0 });
    }
    let mut cur = 1.0 + alpha - x;
    let mut max_mag = prev.abs().max(cur.abs());
    for k in 1..n {
        let kf = f64::from(k);
        let next = ((2.0 * kf + 1.0 + alpha - x) * cur - (kf + alpha) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
        max_mag = max_mag.max(cur.abs());
    }
    Ok(PolyEval { value: cur.into(), degree: n, condition_hint: hint(max_mag, cur.into()) })
}

/// Explicit series form of `L_n^{(α)}(x)`, independent of the recurrence:
///
/// ```text
/// L_n^{(α)}(x) = Σ_{k=0}^{n} (-1)^k / k! · C(n+α, n-k) · x^k
/// ```
///
/// Only degrees `n <= 12` are accepted; beyond that the recurrence is the
/// reliable path.
pub fn laguerre_series(n: u32, alpha: f64, x: f64) -> Result<f64, SpecialFnError> {
    check_finite(alpha)?;
    check_finite(x)?;
    if n > MAX_SERIES_DEGREE {
        return Err(SpecialFnError::SeriesDegreeTooLarge { n });
    }
    let mut sum = 0.0;
    for k in 0..=n {
        // C(n+alpha, n-k) = prod_{j=1}^{n-k} (alpha + k + j) / j
        let mut binom = 1.0;
        for j in 1..=(n - k) {
            binom *= (alpha + f64::from(k) + f64::from(j)) / f64::from(j);
        }
        let mut term = binom;
        for j in 1..=k {
            term *= -x / f64::from(j);
        }
        sum += term;
    }
    Ok(sum)
}

fn jacobi_p1(a: Complex64, b: Complex64, x: Complex64) -> Complex64 {
    (a - b) / 2.0 + (a + b + 2.0) * x / 2.0
}

/// Jacobi polynomial `P_n^{(a,b)}(x)` with complex parameters and argument.
///
/// Evaluated by the three-term recurrence
///
/// ```text
/// 2k(k+a+b)(2k+a+b-2) P_k = (2k+a+b-1)[(2k+a+b)(2k+a+b-2) x + a² - b²] P_{k-1}
///                            - 2(k+a-1)(k+b-1)(2k+a+b) P_{k-2}
/// ```
///
/// whose leading coefficient vanishes when `a + b` sits at certain
/// nonpositive integers. In that degenerate case the evaluation falls back
/// to the explicit series for `n <= 12` and errors otherwise.
///
/// # Examples
///
/// ```
/// use num_complex::Complex64;
/// use spinor_spectra::special::jacobi;
/// let i = Complex64::i();
/// let p = jacobi(1, i, -i, Complex64::new(0.0, 0.0)).unwrap();
/// assert!((p - i).norm() < 1e-15);
/// ```
pub fn jacobi(
    n: u32,
    a: Complex64,
    b: Complex64,
    x: Complex64,
) -> Result<Complex64, SpecialFnError> {
    Ok(jacobi_eval(n, a, b, x)?.value)
}

/// [`jacobi`] with the conditioning metadata attached.
pub fn jacobi_eval(
    n: u32,
    a: Complex64,
    b: Complex64,
    x: Complex64,
) -> Result<PolyEval, SpecialFnError> {
    check_finite_c(a)?;
    check_finite_c(b)?;
    check_finite_c(x)?;
    let mut prev = Complex64::new(1.0, 0.0);
    if n == 0 {
        return Ok(PolyEval { value: prev, degree: 0, condition_hint: 1.0 });
    }
    let mut cur = jacobi_p1(a, b, x);
    let mut max_mag = prev.norm().max(cur.norm());
    let ab = a + b;
    for k in 2..=n {
        let kf = f64::from(k);
        let f_mid = kf + ab; // k + a + b
        let f_low = 2.0 * kf + ab - 2.0; // 2k + a + b - 2
        let scale = 1.0 + ab.norm() + 2.0 * kf;
        if f_mid.norm() < 1e-12 * scale || f_low.norm() < 1e-12 * scale {
            // Degenerate leading coefficient: retry with the series.
            if n <= MAX_SERIES_DEGREE {
                let value = jacobi_series(n, a, b, x)?;
                return Ok(PolyEval {
                    value,
                    degree: n,
                    condition_hint: hint(max_mag.max(value.norm()), value),
                });
            }
            return Err(SpecialFnError::DegenerateRecurrence { degree: n, at_k: k });
        }
        let c1 = 2.0 * kf * f_mid * f_low;
        let c2 = (f_low + 1.0) * (a * a - b * b);
        let c3 = (f_low + 1.0) * (f_low + 2.0) * f_low;
        let c4 = 2.0 * (kf + a - 1.0) * (kf + b - 1.0) * (f_low + 2.0);
        let next = ((c2 + c3 * x) * cur - c4 * prev) / c1;
        prev = cur;
        cur = next;
        max_mag = max_mag.max(cur.norm());
    }
    Ok(PolyEval { value: cur, degree: n, condition_hint: hint(max_mag, cur) })
}

/// Explicit series form of `P_n^{(a,b)}(x)`, independent of the recurrence:
///
/// ```text
/// P_n^{(a,b)}(x) = Σ_{s=0}^{n} C(n+a, n-s) C(n+b, s) ((x-1)/2)^s ((x+1)/2)^{n-s}
/// ```
///
/// with the generalized binomials expanded as finite products so complex
/// parameters need no gamma function. Degrees are capped at `n <= 12`.
pub fn jacobi_series(
    n: u32,
    a: Complex64,
    b: Complex64,
    x: Complex64,
) -> Result<Complex64, SpecialFnError> {
    check_finite_c(a)?;
    check_finite_c(b)?;
    check_finite_c(x)?;
    if n > MAX_SERIES_DEGREE {
        return Err(SpecialFnError::SeriesDegreeTooLarge { n });
    }
    let half_minus = (x - 1.0) / 2.0;
    let half_plus = (x + 1.0) / 2.0;
    let mut sum = Complex64::new(0.0, 0.0);
    for s in 0..=n {
        // C(n+a, n-s) = prod_{j=1}^{n-s} (a + s + j)/j
        let mut coeff = Complex64::new(1.0, 0.0);
        for j in 1..=(n - s) {
            coeff *= (a + f64::from(s) + f64::from(j)) / f64::from(j);
        }
        // C(n+b, s) = prod_{j=1}^{s} (b + (n-s) + j)/j
        for j in 1..=s {
            coeff *= (b + f64::from(n - s) + f64::from(j)) / f64::from(j);
        }
        let mut term = coeff;
        for _ in 0..s {
            term *= half_minus;
        }
        for _ in 0..(n - s) {
            term *= half_plus;
        }
        sum += term;
    }
    Ok(sum)
}
