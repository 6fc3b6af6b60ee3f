use crate::error::{Error, Result};

/// ζ(k) − 1 for k = 2, 3, …, 40.
const ZETA_MINUS_ONE: [f64; 39] = [
    6.44934066848226406e-01,
    2.02056903159594292e-01,
    8.23232337111381857e-02,
    3.69277551433699266e-02,
    1.73430619844491402e-02,
    8.34927738192282713e-03,
    4.07735619794433960e-03,
    2.00839282608221426e-03,
    9.94575127818085256e-04,
    4.94188604119464529e-04,
    2.46086553308048320e-04,
    1.22713347578489145e-04,
    6.12481350587048277e-05,
    3.05882363070204933e-05,
    1.52822594086518710e-05,
    7.63719763789976257e-06,
    3.81729326499984022e-06,
    1.90821271655393897e-06,
    9.53962033872796212e-07,
    4.76932986787806447e-07,
    2.38450502727733004e-07,
    1.19219925965311064e-07,
    5.96081890512594801e-08,
    2.98035035146522793e-08,
    1.49015548283650427e-08,
    7.45071178983543006e-09,
    3.72533402478845728e-09,
    1.86265972351304914e-09,
    9.31327432419668166e-10,
    4.65662906503378366e-10,
    2.32831183367650534e-10,
    1.16415501727005193e-10,
    5.82077208790270145e-11,
    2.91038504449710001e-11,
    1.45519218910419849e-11,
    7.27595983505748180e-12,
    3.63797954737865086e-12,
    1.81898965030706607e-12,
    9.09494784026388841e-13,
];

/// 1 − γ (Euler–Mascheroni).
const ONE_MINUS_EULER: f64 = 0.42278433509846713;

/// B_{2k} / (2k(2k−1)) for k = 1..8, the Stirling correction coefficients.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
];

const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_8;

/// lnΓ(2+ε) − ε(1−γ) for |ε| ≤ 1/2, from the ζ-series
/// lnΓ(2+ε) = (1−γ)ε + Σ_{k≥2} (−1)^k (ζ(k)−1) ε^k / k.
fn ln_gamma_two_plus(eps: f64) -> f64 {
    let mut sum = 0.0;
    let mut p = eps;
    for (i, zm1) in ZETA_MINUS_ONE.iter().enumerate() {
        let k = (i + 2) as f64;
        p *= -eps;
        let t = zm1 * p / k;
        sum += t;
        if t.abs() < 1e-18 * sum.abs().max(1e-300) {
            break;
        }
    }
    // p carries (−1)^{k−1} ε^k; flip to (−1)^k
    ONE_MINUS_EULER * eps - sum
}

fn stirling(x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut corr = 0.0;
    let mut p = inv;
    for c in STIRLING {
        corr += c * p;
        p *= inv2;
    }
    (x - 0.5) * x.ln() - x + HALF_LN_TWO_PI + corr
}

/// Natural log of Γ(x) for x > 0.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("ln_gamma requires x > 0, got {x}")));
    }
    if x >= 10.0 {
        return Ok(stirling(x));
    }
    if x < 0.5 {
        // lnΓ(x) = lnΓ(x+1) − ln x, with x+1 ∈ [1, 1.5)
        return Ok(ln_gamma_one_plus(x) - x.ln());
    }
    if x < 1.5 {
        return Ok(ln_gamma_one_plus(x - 1.0));
    }
    // reduce down into [1.5, 2.5): every factor exceeds one, so the sum has
    // no cancellation
    let mut y = x;
    let mut prod = 1.0;
    while y >= 2.5 {
        y -= 1.0;
        prod *= y;
    }
    Ok(prod.ln() + ln_gamma_two_plus(y - 2.0))
}

/// lnΓ(1+ε) for ε ∈ [−1/2, 1/2]: lnΓ(2+ε) − ln(1+ε).
fn ln_gamma_one_plus(eps: f64) -> f64 {
    ln_gamma_two_plus(eps) - eps.ln_1p()
}

/// Γ(x) for x > 0.
pub fn gamma(x: f64) -> Result<f64> {
    if x > 0.0 && x == x.trunc() && x <= 171.0 {
        return Ok(factorial(x as u64 - 1));
    }
    Ok(ln_gamma(x)?.exp())
}

/// Rising factorial (a)_k = a(a+1)…(a+k−1), by direct product.
pub fn pochhammer(a: f64, k: u64) -> f64 {
    let mut p = 1.0;
    for i in 0..k {
        let f = a + i as f64;
        if f == 0.0 {
            return 0.0;
        }
        p *= f;
    }
    p
}

pub fn factorial(n: u64) -> f64 {
    pochhammer(1.0, n)
}

/// C(n, k) as a float, by the multiplicative formula.
pub fn binomial(n: u64, k: u64) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut c = 1.0;
    for i in 0..k {
        c = c * (n - i) as f64 / (i + 1) as f64;
    }
    c.round()
}
