//! Reference computations used only by the tests. None of these share code
//! with the library's evaluation paths.
#![allow(dead_code)]

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random point with sigma in (lo, hi) and t in (t_lo, t_hi).
pub fn random_point(rng: &mut ChaCha8Rng, sigma: (f64, f64), t: (f64, f64)) -> (f64, f64) {
    (rng.random_range(sigma.0..sigma.1), rng.random_range(t.0..t.1))
}

/// Kahan sum, written separately from the library's accumulator.
fn kahan(values: impl Iterator<Item = f64>) -> f64 {
    let (mut sum, mut c) = (0.0f64, 0.0f64);
    for v in values {
        let y = v - c;
        let t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    sum
}

/// η(s) for real s > 0 by grouping the series into pairs
/// `f(j) = (2j-1)^(-s) - (2j)^(-s)`, summing M pairs and closing the tail
/// with `∫_M^∞ f - f(M)/2 - f'(M)/12`.
pub fn eta_real_pairwise(s: f64, pairs: usize) -> f64 {
    // (2x-1)^(-s) - (2x)^(-s) = (2x)^(-s) expm1(-s ln(1 - 1/(2x))), no cancellation
    let f = |x: f64| (2.0 * x).powf(-s) * (-s * (-0.5 / x).ln_1p()).exp_m1();
    let df = |x: f64| -2.0 * s * (2.0 * x - 1.0).powf(-s - 1.0) + 2.0 * s * (2.0 * x).powf(-s - 1.0);
    let head = kahan((1..=pairs).rev().map(|j| f(j as f64)));
    let m = pairs as f64;
    let integral = if (s - 1.0).abs() < 1e-15 {
        -0.5 * (-0.5 / m).ln_1p()
    } else {
        // ((2M-1)^(1-s) - (2M)^(1-s)) / (2(s-1))
        (2.0 * m).powf(1.0 - s) * ((1.0 - s) * (-0.5 / m).ln_1p()).exp_m1() / (2.0 * (s - 1.0))
    };
    head + integral - 0.5 * f(m) - df(m) / 12.0
}

/// Plain direct sum of η_N for real s, smallest terms first.
pub fn eta_real_direct(s: f64, n: usize) -> f64 {
    kahan((1..=n).rev().map(|k| {
        let v = (k as f64).powf(-s);
        if k % 2 == 1 {
            v
        } else {
            -v
        }
    }))
}

const BERNOULLI: [f64; 6] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
];

/// Euler–Maclaurin ζ(s) with a fixed cut-off and Bernoulli terms through
/// B₁₂, using `Complex::powc` throughout.
pub fn zeta_em_oracle(s: Complex64, cutoff: u32) -> Complex64 {
    let n = Complex64::new(cutoff as f64, 0.0);
    let mut re = Vec::new();
    let mut im = Vec::new();
    for k in (1..cutoff).rev() {
        let v = Complex64::new(k as f64, 0.0).powc(-s);
        re.push(v.re);
        im.push(v.im);
    }
    let mut total = Complex64::new(kahan(re.into_iter()), kahan(im.into_iter()));
    total += n.powc(1.0 - s) / (s - 1.0) + 0.5 * n.powc(-s);
    let mut factorial = 1.0;
    let mut rising = s;
    for (j, b) in BERNOULLI.iter().enumerate() {
        let order = 2 * j + 2;
        factorial *= ((order - 1) * order) as f64;
        total += *b / factorial * rising * n.powc(-s - (order as f64 - 1.0));
        rising *= (s + order as f64 - 1.0) * (s + order as f64);
    }
    total
}

/// ln Γ(z) by shifting to Re(w) >= 20 and applying Stirling's series with
/// eight Bernoulli corrections.
pub fn ln_gamma_stirling(z: Complex64) -> Complex64 {
    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.re < 20.0 {
        shift += w.ln();
        w += 1.0;
    }
    let b2k = [
        1.0 / 6.0,
        -1.0 / 30.0,
        1.0 / 42.0,
        -1.0 / 30.0,
        5.0 / 66.0,
        -691.0 / 2730.0,
        7.0 / 6.0,
        -3617.0 / 510.0,
    ];
    let mut series = Complex64::new(0.0, 0.0);
    let mut w_pow = w;
    for (k, b) in b2k.iter().enumerate() {
        let k2 = 2.0 * (k as f64 + 1.0);
        series += *b / (k2 * (k2 - 1.0) * w_pow);
        w_pow *= w * w;
    }
    (w - 0.5) * w.ln() - w + 0.5 * (2.0 * std::f64::consts::PI).ln() + series - shift
}

/// Γ(z) via the Stirling oracle, reflecting when Re(z) < 1/2.
pub fn gamma_oracle(z: Complex64) -> Complex64 {
    use std::f64::consts::PI;
    if z.re < 0.5 {
        PI / ((PI * z).sin() * ln_gamma_stirling(1.0 - z).exp())
    } else {
        ln_gamma_stirling(z).exp()
    }
}
