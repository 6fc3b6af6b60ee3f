//! Scalar special functions: log-gamma, Pochhammer symbols and the
//! generalized hypergeometric family.

mod gamma;
mod hyper;

pub use gamma::{binomial, factorial, gamma, ln_gamma, pochhammer};
pub use hyper::{hyp1f1, hyp2f1, hyp_pfq, hyp_pfq_terms};
pub(crate) use hyper::hyp1f1_value;

/// `Some(n)` when `x` is exactly the nonpositive integer −n.
///
/// No epsilon snapping: −2.0000001 is not a nonpositive integer.
pub fn nonpositive_integer(x: f64) -> Option<u64> {
    if x <= 0.0 && x == x.trunc() && x > -(u32::MAX as f64) {
        Some((-x) as u64)
    } else {
        None
    }
}

pub fn is_integer(x: f64) -> bool {
    x.is_finite() && x == x.trunc()
}

/// base^exponent for real results: positive bases always, negative bases
/// only with integral exponents. Returns (ln|value|, sign).
pub(crate) fn signed_ln_pow(base: f64, exponent: f64) -> crate::Result<(f64, f64)> {
    if exponent == 0.0 {
        return Ok((0.0, 1.0));
    }
    if base > 0.0 {
        return Ok((exponent * base.ln(), 1.0));
    }
    if base == 0.0 {
        return if exponent > 0.0 {
            Ok((f64::NEG_INFINITY, 1.0))
        } else {
            Err(crate::Error::Domain(format!("0 raised to nonpositive power {exponent}")))
        };
    }
    if is_integer(exponent) {
        let sign = if (exponent as i64) % 2 == 0 { 1.0 } else { -1.0 };
        Ok((exponent * (-base).ln(), sign))
    } else {
        Err(crate::Error::Domain(format!(
            "negative base {base} with non-integral exponent {exponent}"
        )))
    }
}

/// Real power base^exponent with the same rules as `signed_ln_pow`.
pub(crate) fn real_pow(base: f64, exponent: f64) -> crate::Result<f64> {
    if is_integer(exponent) && exponent.abs() < 64.0 {
        return if base == 0.0 && exponent < 0.0 {
            Err(crate::Error::Domain("0 raised to a negative power".into()))
        } else {
            Ok(base.powi(exponent as i32))
        };
    }
    let (l, s) = signed_ln_pow(base, exponent)?;
    Ok(s * l.exp())
}

/// Product of factors kept as a log-magnitude and a sign, so prefactors such
/// as Γ(c+j)/λ^{c+j} never overflow before meeting the series value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct LogScale {
    pub ln_abs: f64,
    pub sign: f64,
}

impl LogScale {
    pub fn gamma(x: f64) -> crate::Result<Self> {
        Ok(LogScale { ln_abs: ln_gamma(x)?, sign: 1.0 })
    }

    pub fn pow(base: f64, exponent: f64) -> crate::Result<Self> {
        let (l, s) = signed_ln_pow(base, exponent)?;
        Ok(LogScale { ln_abs: l, sign: s })
    }

    pub fn value(x: f64) -> Self {
        if x == 0.0 {
            LogScale { ln_abs: f64::NEG_INFINITY, sign: 1.0 }
        } else {
            LogScale { ln_abs: x.abs().ln(), sign: x.signum() }
        }
    }

    pub fn mul(self, o: LogScale) -> Self {
        LogScale { ln_abs: self.ln_abs + o.ln_abs, sign: self.sign * o.sign }
    }

    pub fn div(self, o: LogScale) -> Self {
        LogScale { ln_abs: self.ln_abs - o.ln_abs, sign: self.sign * o.sign }
    }

    pub fn to_f64(self) -> f64 {
        self.sign * self.ln_abs.exp()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nonpositive_integer_detection_is_exact() {
        assert_eq!(nonpositive_integer(0.0), Some(0));
        assert_eq!(nonpositive_integer(-3.0), Some(3));
        assert_eq!(nonpositive_integer(-2.0000001), None);
        assert_eq!(nonpositive_integer(1.0), None);
        assert_eq!(nonpositive_integer(f64::NAN), None);
    }

    #[test]
    fn real_pow_handles_negative_bases() {
        assert_eq!(real_pow(-2.0, 3.0).unwrap(), -8.0);
        assert!(real_pow(-2.0, 0.5).is_err());
        assert!((real_pow(2.0, 0.5).unwrap() - std::f64::consts::SQRT_2).abs() < 1e-15);
        assert!(real_pow(0.0, -1.0).is_err());
    }

    #[test]
    fn log_scale_round_trip() {
        let v = LogScale::gamma(5.0).unwrap().div(LogScale::pow(2.0, 3.0).unwrap());
        assert!((v.to_f64() - 3.0).abs() < 1e-14);
        let neg = LogScale::pow(-3.0, 3.0).unwrap().mul(LogScale::value(-1.0));
        assert!((neg.to_f64() - 27.0).abs() < 1e-12);
    }
}
