//! Classical orthogonal polynomials as terminating hypergeometric sums.

use crate::special::factorial;

/// Generalized Laguerre polynomial L_n^α(x) = ((α+1)_n/n!)·₁F₁(−n; α+1; x).
///
/// Summed as Σ_k (α+k+1)_{n−k}/(n−k)! · (−x)^k/k!, which stays finite when
/// α+1 is a nonpositive integer.
pub fn laguerre(n: u32, alpha: f64, x: f64) -> f64 {
    let mut sum = 0.0;
    let mut power = 1.0;
    for k in 0..=n {
        sum += shifted_ratio(n, k, alpha) * power;
        power *= -x / (k + 1) as f64;
    }
    sum
}

/// (α+k+1)_{n−k}/(n−k)!.
fn shifted_ratio(n: u32, k: u32, alpha: f64) -> f64 {
    (k..n).fold(1.0, |a, i| a * (alpha + 1.0 + i as f64) / (i - k + 1) as f64)
}

fn terminating_1f1(n: u32, c: f64, t: f64) -> f64 {
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..n {
        let kf = k as f64;
        term *= (kf - n as f64) * t / ((c + kf) * (kf + 1.0));
        sum += term;
    }
    sum
}

/// H_{2n}(√t) = (−1)^n (2n)!/n! · ₁F₁(−n; 1/2; t). A polynomial in t.
pub fn hermite_even(n: u32, t: f64) -> f64 {
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    sign * factorial(2 * n as u64) / factorial(n as u64) * terminating_1f1(n, 0.5, t)
}

/// H_{2n+1}(√t) = (−1)^n 2√t (2n+1)!/n! · ₁F₁(−n; 3/2; t). NaN for t < 0.
pub fn hermite_odd(n: u32, t: f64) -> f64 {
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    sign * 2.0 * t.sqrt() * factorial(2 * n as u64 + 1) / factorial(n as u64) * terminating_1f1(n, 1.5, t)
}

/// Jacobi polynomial P_n^{(α,β)}(x) = ((α+1)_n/n!)·₂F₁(−n, n+α+β+1; α+1; (1−x)/2),
/// summed as Σ_k (α+k+1)_{n−k}/(n−k)! · (n+α+β+1)_k/k! · ((x−1)/2)^k.
pub fn jacobi(n: u32, alpha: f64, beta: f64, x: f64) -> f64 {
    let y = (x - 1.0) / 2.0;
    let s = n as f64 + alpha + beta + 1.0;
    let mut sum = 0.0;
    // running (s)_k y^k / k!
    let mut tail = 1.0;
    for k in 0..=n {
        sum += shifted_ratio(n, k, alpha) * tail;
        tail *= (s + k as f64) * y / (k + 1) as f64;
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laguerre_examples() {
        assert_eq!(laguerre(0, 1.3, 0.7), 1.0);
        assert!((laguerre(1, 1.3, 0.7) - (2.3 - 0.7)).abs() < 1e-15);
        assert!((laguerre(2, 0.0, 1.0) + 0.5).abs() < 1e-15);
        // L_3^α(0) = (α+1)_3/3!
        assert!((laguerre(3, 0.5, 0.0) - 1.5 * 2.5 * 3.5 / 6.0).abs() < 1e-14);
        // α = −1 keeps a finite value: L_2^{−1}(x) = x²/2 − x
        assert!((laguerre(2, -1.0, 0.8) - (0.32 - 0.8)).abs() < 1e-15);
    }

    #[test]
    fn hermite_examples() {
        assert_eq!(hermite_even(0, 2.0), 1.0);
        assert!((hermite_even(1, 0.7) - (4.0 * 0.7 - 2.0)).abs() < 1e-14);
        assert!((hermite_odd(0, 0.49) - 1.4).abs() < 1e-15);
        // H₄(x) = 16x⁴ − 48x² + 12, H₃(x) = 8x³ − 12x
        let t: f64 = 0.3;
        assert!((hermite_even(2, t) - (16.0 * t * t - 48.0 * t + 12.0)).abs() < 1e-12);
        let x = t.sqrt();
        assert!((hermite_odd(1, t) - (8.0 * x * x * x - 12.0 * x)).abs() < 1e-12);
    }

    #[test]
    fn jacobi_examples() {
        // P_1^{(α,β)}(x) = (α+1) + (α+β+2)(x−1)/2
        let (a, b, x) = (0.7, -1.4, 0.3);
        assert!((jacobi(1, a, b, x) - ((a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0)).abs() < 1e-14);
        // Legendre P_2(x) = (3x²−1)/2
        assert!((jacobi(2, 0.0, 0.0, x) - (3.0 * x * x - 1.0) / 2.0).abs() < 1e-14);
        assert!((jacobi(3, 0.5, 0.2, 1.0) - 1.5 * 2.5 * 3.5 / 6.0).abs() < 1e-14);
    }
}
