use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::special::{nonpositive_integer, LogScale};

/// Sign of the shift in the second denominator parameter, c ± p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn factor(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl std::str::FromStr for Sign {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "+" | "plus" | "+1" | "1" => Ok(Sign::Plus),
            "-" | "minus" | "-1" => Ok(Sign::Minus),
            _ => Err(format!("sign must be + or -, got {s:?}")),
        }
    }
}

/// Parameters of
/// J = ∫₀^∞ x^{c+j−1} e^{−λx} ₁F₁(b; c; wx) ₁F₁(b'; c+q; zx) dx, q = ±p.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GordonParams {
    pub b: f64,
    pub b_prime: f64,
    pub c: f64,
    pub j: i64,
    pub p: u32,
    pub sign: Sign,
    pub lambda: f64,
    pub w: f64,
    pub z: f64,
}

impl GordonParams {
    /// Signed shift q = ±p of the second denominator.
    pub fn q(&self) -> i64 {
        self.sign.factor() * self.p as i64
    }

    pub fn qf(&self) -> f64 {
        self.q() as f64
    }

    pub fn jf(&self) -> f64 {
        self.j as f64
    }

    /// Power of x in the integrand plus one: c + j.
    pub fn exponent(&self) -> f64 {
        self.c + self.j as f64
    }

    /// Second denominator parameter c + q.
    pub fn c2(&self) -> f64 {
        self.c + self.qf()
    }

    /// Strict convergence flag |w| + |z| < λ.
    pub fn strictly_convergent(&self) -> bool {
        self.w.abs() + self.z.abs() < self.lambda
    }

    /// The first confluent factor is identically one.
    pub fn first_trivial(&self) -> bool {
        self.b == 0.0 || self.w == 0.0
    }

    /// The second confluent factor is identically one.
    pub fn second_trivial(&self) -> bool {
        self.b_prime == 0.0 || self.z == 0.0
    }

    /// Same integral with the two confluent factors exchanged:
    /// (b, b', c, j, q, w, z) → (b', b, c+q, j−q, −q, z, w).
    pub fn swapped(&self) -> Self {
        let q = self.q();
        GordonParams {
            b: self.b_prime,
            b_prime: self.b,
            c: self.c2(),
            j: self.j - q,
            p: q.unsigned_abs() as u32,
            sign: if q > 0 { Sign::Minus } else { Sign::Plus },
            lambda: self.lambda,
            w: self.z,
            z: self.w,
        }
    }

    /// Same integral after x → x/λ: (λ, w, z) → (1, w/λ, z/λ), with the
    /// factor λ^{−(c+j)} returned separately.
    pub fn rescaled(&self) -> (Self, f64) {
        let unit = GordonParams { lambda: 1.0, w: self.w / self.lambda, z: self.z / self.lambda, ..*self };
        (unit, self.lambda.powf(-self.exponent()))
    }

    /// Basic domain: finite parameters, c + j > 0, λ > 0.
    pub fn check_domain(&self) -> Result<()> {
        let all = [self.b, self.b_prime, self.c, self.lambda, self.w, self.z];
        if all.iter().any(|x| !x.is_finite()) {
            return Err(Error::Domain("non-finite parameter".into()));
        }
        if self.exponent() <= 0.0 {
            return Err(Error::Domain(format!("c + j = {} must be positive", self.exponent())));
        }
        if self.lambda <= 0.0 {
            return Err(Error::Domain(format!("lambda = {} must be positive", self.lambda)));
        }
        Ok(())
    }

    /// Denominator poles of either confluent factor that no terminating
    /// numerator (or zero argument) rescues.
    pub fn check_poles(&self) -> Result<()> {
        for (num, den, arg) in [(self.b, self.c, self.w), (self.b_prime, self.c2(), self.z)] {
            if let Some(m) = nonpositive_integer(den) {
                let rescued = arg == 0.0 || nonpositive_integer(num).is_some_and(|n| n <= m);
                if !rescued {
                    return Err(Error::Pole(den));
                }
            }
        }
        Ok(())
    }

    pub fn check(&self) -> Result<()> {
        self.check_domain()?;
        self.check_poles()
    }
}

/// Builder for products of gamma values and real powers kept in log space.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Prefactor(LogScale);

impl Prefactor {
    pub fn gamma(x: f64) -> Result<Self> {
        Ok(Prefactor(LogScale::gamma(x)?))
    }

    pub fn times_pow(self, base: f64, exponent: f64) -> Result<Self> {
        Ok(Prefactor(self.0.mul(LogScale::pow(base, exponent)?)))
    }

    pub fn over_pow(self, base: f64, exponent: f64) -> Result<Self> {
        if base == 0.0 && exponent > 0.0 {
            return Err(Error::Domain("division by zero in prefactor".into()));
        }
        Ok(Prefactor(self.0.div(LogScale::pow(base, exponent)?)))
    }

    pub fn times(self, x: f64) -> Self {
        Prefactor(self.0.mul(LogScale::value(x)))
    }

    pub fn value(self) -> f64 {
        self.0.to_f64()
    }
}
