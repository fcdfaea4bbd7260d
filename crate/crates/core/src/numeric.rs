//! Small numeric helpers: deterministic pairwise summation, log-Gamma and
//! Beta functions, and the smooth compactly supported profiles used by bump
//! and collar symbols.

use num_complex::Complex64;

/// Pairwise (cascade) summation of complex values.
///
/// The reduction tree depends only on the slice length, so results are
/// bit-reproducible regardless of how many workers produced the inputs.
pub fn pairwise_sum(values: &[Complex64]) -> Complex64 {
    if values.len() <= 32 {
        let mut acc = Complex64::new(0.0, 0.0);
        for v in values {
            acc += v;
        }
        return acc;
    }
    let mid = values.len() / 2;
    pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
}

/// Pairwise summation of real values.
pub fn pairwise_sum_f64(values: &[f64]) -> f64 {
    if values.len() <= 32 {
        return values.iter().sum();
    }
    let mid = values.len() / 2;
    pairwise_sum_f64(&values[..mid]) + pairwise_sum_f64(&values[mid..])
}

/// Natural log of the Gamma function.
pub fn ln_gamma(x: f64) -> f64 {
    statrs::function::gamma::ln_gamma(x)
}

/// Euler Beta function B(a, b), computed through log-Gamma for stability.
pub fn beta(a: f64, b: f64) -> f64 {
    (ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b)).exp()
}

/// `sigma(x) = exp(-1/x)` for `x > 0`, `0` otherwise. The basic C-infinity
/// flat-at-zero building block.
fn sigma(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        (-1.0 / x).exp()
    }
}

fn sigma_prime(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        (-1.0 / x).exp() / (x * x)
    }
}

/// C-infinity monotone step: 0 for `x <= 0`, 1 for `x >= 1`.
pub fn smooth_step(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else if x >= 1.0 {
        1.0
    } else {
        let s = sigma(x);
        s / (s + sigma(1.0 - x))
    }
}

/// Derivative of [`smooth_step`].
pub fn smooth_step_prime(x: f64) -> f64 {
    if x <= 0.0 || x >= 1.0 {
        0.0
    } else {
        let s = sigma(x);
        let r = sigma(1.0 - x);
        let d = s + r;
        (sigma_prime(x) * r + s * sigma_prime(1.0 - x)) / (d * d)
    }
}

/// Standard mollifier on `[0, 1)`: `exp(1 - 1/(1 - s))` for `s < 1`,
/// `0` for `s >= 1`. Normalized so the value at `s = 0` is `1`.
pub fn mollifier(s: f64) -> f64 {
    if s >= 1.0 {
        0.0
    } else {
        (1.0 - 1.0 / (1.0 - s)).exp()
    }
}

/// Derivative of [`mollifier`].
pub fn mollifier_prime(s: f64) -> f64 {
    if s >= 1.0 {
        0.0
    } else {
        let d = 1.0 - s;
        -mollifier(s) / (d * d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairwise_matches_naive() {
        let vals: Vec<Complex64> = (0..1000)
            .map(|k| Complex64::new(1.0 / (k as f64 + 1.0), (k as f64).sin()))
            .collect();
        let naive: Complex64 = vals.iter().sum();
        let pw = pairwise_sum(&vals);
        assert!((naive - pw).norm() < 1e-10);
    }

    #[test]
    fn beta_small_integers() {
        // B(2, 2) = 1/6, B(1, 5) = 1/5
        assert!((beta(2.0, 2.0) - 1.0 / 6.0).abs() < 1e-14);
        assert!((beta(1.0, 5.0) - 0.2).abs() < 1e-14);
    }

    #[test]
    fn smooth_step_shape() {
        assert_eq!(smooth_step(-0.5), 0.0);
        assert_eq!(smooth_step(1.5), 1.0);
        assert!((smooth_step(0.5) - 0.5).abs() < 1e-15);
        // derivative consistent with a central difference
        let h = 1e-6;
        let x = 0.37;
        let fd = (smooth_step(x + h) - smooth_step(x - h)) / (2.0 * h);
        assert!((fd - smooth_step_prime(x)).abs() < 1e-6);
    }

    #[test]
    fn mollifier_shape() {
        assert!((mollifier(0.0) - 1.0).abs() < 1e-15);
        assert_eq!(mollifier(1.0), 0.0);
        let h = 1e-7;
        let s = 0.4;
        let fd = (mollifier(s + h) - mollifier(s - h)) / (2.0 * h);
        assert!((fd - mollifier_prime(s)).abs() < 1e-6);
    }
}
