//! Reference values computed without the library's evaluation paths.
#![allow(dead_code)]

use std::f64::consts::PI;

use zeta_lab::Complex64;

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

/// `Σ_{k<=n} 1/k`, smallest terms first.
pub fn harmonic(n: usize) -> f64 {
    kahan((1..=n).rev().map(|k| 1.0 / k as f64))
}

/// η(s) for real s > 0: pairs `(2j-1)^(-s) - (2j)^(-s)` summed directly,
/// tail closed with the integral and two Euler–Maclaurin corrections.
pub fn eta_real_pairwise(s: f64, pairs: usize) -> f64 {
    let f = |x: f64| (2.0 * x).powf(-s) * (-s * (-0.5 / x).ln_1p()).exp_m1();
    let df = |x: f64| -2.0 * s * (2.0 * x - 1.0).powf(-s - 1.0) + 2.0 * s * (2.0 * x).powf(-s - 1.0);
    let head = kahan((1..=pairs).rev().map(|j| f(j as f64)));
    let m = pairs as f64;
    let integral = if (s - 1.0).abs() < 1e-15 {
        -0.5 * (-0.5 / m).ln_1p()
    } else {
        (2.0 * m).powf(1.0 - s) * ((1.0 - s) * (-0.5 / m).ln_1p()).exp_m1() / (2.0 * (s - 1.0))
    };
    head + integral - 0.5 * f(m) - df(m) / 12.0
}

const BERNOULLI: [f64; 6] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
];

/// Euler–Maclaurin ζ(s), fixed cut-off, corrections through B₁₂.
pub fn zeta_em(s: Complex64, cutoff: u32) -> Complex64 {
    let n = Complex64::new(cutoff as f64, 0.0);
    let terms: Vec<Complex64> = (1..cutoff)
        .rev()
        .map(|k| Complex64::new(k as f64, 0.0).powc(-s))
        .collect();
    let mut total = Complex64::new(
        kahan(terms.iter().map(|z| z.re)),
        kahan(terms.iter().map(|z| z.im)),
    );
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

/// ln Γ(z) by upward shift to Re >= 20 and Stirling's series.
pub fn ln_gamma_stirling(z: Complex64) -> Complex64 {
    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.re < 20.0 {
        shift += w.ln();
        w += 1.0;
    }
    let b2k = [1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0];
    let mut series = Complex64::new(0.0, 0.0);
    let mut w_pow = w;
    for (k, b) in b2k.iter().enumerate() {
        let k2 = 2.0 * (k as f64 + 1.0);
        series += *b / (k2 * (k2 - 1.0) * w_pow);
        w_pow *= w * w;
    }
    (w - 0.5) * w.ln() - w + 0.5 * (2.0 * PI).ln() + series - shift
}

/// Hardy Z from the oracles above.
pub fn hardy_z(t: f64) -> f64 {
    let theta = ln_gamma_stirling(Complex64::new(0.25, 0.5 * t)).im - 0.5 * t * PI.ln();
    (Complex64::from_polar(1.0, theta) * zeta_em(Complex64::new(0.5, t), 60)).re
}

/// Zeros of [`hardy_z`] on a grid of step `1e-3`, bisected to convergence.
pub fn dense_zero_scan(lo: f64, hi: f64) -> Vec<f64> {
    let n = ((hi - lo) / 1e-3).round() as usize;
    let grid: Vec<f64> = (0..=n).map(|i| lo + i as f64 * 1e-3).collect();
    let values: Vec<f64> = grid.iter().map(|&t| hardy_z(t)).collect();
    let mut zeros = Vec::new();
    for i in 1..grid.len() {
        if values[i - 1] * values[i] < 0.0 {
            let (mut a, mut b, fa) = (grid[i - 1], grid[i], values[i - 1]);
            for _ in 0..60 {
                let m = 0.5 * (a + b);
                if (hardy_z(m) < 0.0) == (fa < 0.0) {
                    a = m;
                } else {
                    b = m;
                }
            }
            zeros.push(0.5 * (a + b));
        }
    }
    zeros
}

/// `|η_N(s)|²` by a running `powc` sum, recorded at each requested N.
pub fn eta_partial_abs_sq(s: Complex64, ns: &[usize]) -> Vec<f64> {
    let last = ns.iter().copied().max().unwrap_or(0);
    let mut out = Vec::with_capacity(ns.len());
    let mut re = 0.0;
    let mut im = 0.0;
    let (mut cr, mut ci) = (0.0, 0.0);
    for k in 1..=last {
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        let term = sign * Complex64::new(k as f64, 0.0).powc(-s);
        // Kahan on each component
        let y = term.re - cr;
        let t = re + y;
        cr = (t - re) - y;
        re = t;
        let y = term.im - ci;
        let t = im + y;
        ci = (t - im) - y;
        im = t;
        if ns.contains(&k) {
            out.push(re * re + im * im);
        }
    }
    out
}
