//! Scaled complementary error function `erfcx(z) = exp(z^2) erfc(z)`.
//!
//! Rational approximations on [0, 0.46875], (0.46875, 4] and (4, inf) using
//! W. J. Cody's coefficients (Math. Comp. 23, 1969). Negative arguments go
//! through `erfcx(-y) = 2 exp(y^2) - erfcx(y)`.

#![allow(clippy::excessive_precision)]

use super::LogScaled;

const FRAC_1_SQRT_PI: f64 = 0.564_189_583_547_756_286_95;
const SMALL: f64 = 0.46875;

const A: [f64; 5] = [
    3.16112374387056560,
    1.13864154151050156e2,
    3.77485237685302021e2,
    3.20937758913846947e3,
    1.85777706184603153e-1,
];
const B: [f64; 4] = [
    2.36012909523441209e1,
    2.44024637934444173e2,
    1.28261652607737228e3,
    2.84423683343917062e3,
];
const C: [f64; 9] = [
    5.64188496988670089e-1,
    8.88314979438837594,
    6.61191906371416295e1,
    2.98635138197400131e2,
    8.81952221241769090e2,
    1.71204761263407058e3,
    2.05107837782607147e3,
    1.23033935479799725e3,
    2.15311535474403846e-8,
];
const D: [f64; 8] = [
    1.57449261107098347e1,
    1.17693950891312499e2,
    5.37181101862009858e2,
    1.62138957456669019e3,
    3.29079923573345963e3,
    4.36261909014324716e3,
    3.43936767414372164e3,
    1.23033935480374942e3,
];
const P: [f64; 6] = [
    3.05326634961232344e-1,
    3.60344899949804439e-1,
    1.25781726111229246e-1,
    1.60837851487422766e-2,
    6.58749161529837803e-4,
    1.63153871373020978e-2,
];
const Q: [f64; 5] = [
    2.56852019228982242,
    1.87295284992346047,
    5.27905102951428412e-1,
    6.05183413124413191e-2,
    2.33520497626869185e-3,
];

/// erf(y) / y on |y| <= 0.46875, as a rational function of s = y^2.
fn erf_over_y(s: f64) -> f64 {
    let num = (((A[4] * s + A[0]) * s + A[1]) * s + A[2]) * s + A[3];
    let den = (((s + B[0]) * s + B[1]) * s + B[2]) * s + B[3];
    num / den
}

fn erfcx_mid(y: f64) -> f64 {
    let mut num = C[8] * y;
    let mut den = y;
    for i in 0..7 {
        num = (num + C[i]) * y;
        den = (den + D[i]) * y;
    }
    (num + C[7]) / (den + D[7])
}

fn erfcx_tail(y: f64) -> f64 {
    let s = 1.0 / (y * y);
    let mut num = P[5] * s;
    let mut den = s;
    for i in 0..4 {
        num = (num + P[i]) * s;
        den = (den + Q[i]) * s;
    }
    let r = s * (num + P[4]) / (den + Q[4]);
    (FRAC_1_SQRT_PI - r) / y
}

fn erfcx_nonneg(y: f64) -> f64 {
    debug_assert!(y >= 0.0);
    if y <= SMALL {
        let s = y * y;
        s.exp() * (1.0 - y * erf_over_y(s))
    } else if y <= 4.0 {
        erfcx_mid(y)
    } else if y < 1e9 {
        erfcx_tail(y)
    } else {
        FRAC_1_SQRT_PI / y
    }
}

/// `exp(z^2) erfc(z)`. Overflows to `+inf` for z below about -26.6; use
/// [`erfcx_log`] there.
pub fn erfcx(z: f64) -> f64 {
    if z.is_nan() {
        return f64::NAN;
    }
    if z >= 0.0 {
        erfcx_nonneg(z)
    } else if z.abs() <= SMALL {
        let s = z * z;
        s.exp() * (1.0 - z * erf_over_y(s))
    } else {
        2.0 * (z * z).exp() - erfcx_nonneg(-z)
    }
}

/// `erfcx(z)` in log-scaled form, finite for every real z.
pub fn erfcx_log(z: f64) -> LogScaled {
    if z >= -SMALL {
        return LogScaled::from_f64(erfcx(z));
    }
    let y = -z;
    // 2 e^{y^2} - erfcx(y) = 2 e^{y^2} (1 - erfcx(y) e^{-y^2} / 2)
    let rel = erfcx_nonneg(y) * (-y * y).exp() / 2.0;
    LogScaled::positive(y * y + std::f64::consts::LN_2 + (-rel).ln_1p())
}

/// Complementary error function.
pub fn erfc(z: f64) -> f64 {
    if z >= 0.0 {
        erfcx_nonneg(z) * (-z * z).exp()
    } else if z >= -SMALL {
        1.0 - z * erf_over_y(z * z)
    } else {
        2.0 - erfcx_nonneg(-z) * (-z * z).exp()
    }
}
