//! Independent reference implementations used only by the tests. None of them
//! shares an algorithm with the library code it checks.

#![allow(dead_code)]

use std::f64::consts::PI;

use hyperzeta_core::Complex64;

pub const SEED: u64 = 42;

/// `B_{2k}`, `k = 1..=10`.
const B2K: [f64; 10] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
];

pub fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Gamma by the Stirling series after upward recurrence to `Re z >= 20`,
/// with reflection for `Re z < 1/2`.
pub fn gamma_stirling(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        return PI / ((z * PI).sin() * gamma_stirling(c(1.0) - z));
    }
    let mut prod = c(1.0);
    let mut w = z;
    while w.re < 20.0 {
        prod *= w;
        w += 1.0;
    }
    let mut series = c(0.0);
    let mut wp = w;
    for (k, b) in B2K.iter().enumerate() {
        let k2 = 2.0 * (k as f64 + 1.0);
        series += b / (k2 * (k2 - 1.0) * wp);
        wp *= w * w;
    }
    let ln = (w - 0.5) * w.ln() - w + 0.5 * (2.0 * PI).ln() + series;
    ln.exp() / prod
}

/// Riemann zeta by Euler–Maclaurin with 40 direct terms, any `s != 1`.
pub fn zeta_em(s: Complex64) -> Complex64 {
    let n = 40.0 + 2.0 * s.norm().ceil();
    let mut sum = c(0.0);
    let mut k = 1.0;
    while k < n {
        sum += (-s * f64::ln(k)).exp();
        k += 1.0;
    }
    let ns = (-s * n.ln()).exp();
    sum += ns * n / (s - 1.0) + ns * 0.5;
    let mut rising = s;
    let mut power = ns / n;
    let mut fact = 2.0;
    for (k, b) in B2K.iter().enumerate() {
        sum += rising * power * (b / fact);
        let j = 2.0 * (k as f64 + 1.0);
        rising *= (s + (j - 1.0)) * (s + j);
        power /= n * n;
        fact *= (j + 1.0) * (j + 2.0);
    }
    sum
}

/// Complex digamma: upward recurrence to `Re z >= 15`, then the asymptotic
/// series.
pub fn digamma(z: Complex64) -> Complex64 {
    let mut acc = c(0.0);
    let mut w = z;
    while w.re < 15.0 {
        acc -= 1.0 / w;
        w += 1.0;
    }
    let mut series = w.ln() - 0.5 / w;
    let w2 = w * w;
    let mut wp = w2;
    for (k, b) in B2K.iter().enumerate() {
        let k2 = 2.0 * (k as f64 + 1.0);
        series -= b / (k2 * wp);
        wp *= w2;
    }
    acc + series
}

/// Unnormalized `sum_{n>=1} (-1)^{n-1} Re 1/(1 + n x e^{i phi})` in closed
/// form: with `a = e^{-i phi}/x`, the sum is
/// `Re a [psi((a+2)/2) - psi((a+1)/2)] / 2`. Below `x = 1e-3` the Boole
/// expansion `1/2 - x cos(phi)/4 + x^3 cos(3 phi)/8` is exact to `x^5`.
pub fn sigma_digamma(phi: f64, x: f64) -> f64 {
    if x < 1e-3 {
        return 0.5 - 0.25 * phi.cos() * x + 0.125 * (3.0 * phi).cos() * x.powi(3);
    }
    let a = Complex64::from_polar(1.0 / x, -phi);
    (a * (digamma((a + 2.0) / 2.0) - digamma((a + 1.0) / 2.0)) * 0.5).re
}

/// `sum_{k>=0} (-1)^k a(k)`: `n` plain terms, then `m` rounds of averaging
/// neighbouring partial sums.
pub fn averaged_alternating<F: FnMut(usize) -> Complex64>(
    mut a: F,
    n: usize,
    m: usize,
) -> Complex64 {
    let mut s = c(0.0);
    for k in 0..n {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        s += a(k) * sign;
    }
    let mut partial = Vec::with_capacity(m + 1);
    partial.push(s);
    for k in n..n + m {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        s += a(k) * sign;
        partial.push(s);
    }
    for _ in 0..m {
        partial = partial.windows(2).map(|w| (w[0] + w[1]) * 0.5).collect();
    }
    partial[0]
}

/// Riemann–Siegel theta, asymptotic form, `t >= 5`.
pub fn rs_theta(t: f64) -> f64 {
    0.5 * t * (t / (2.0 * PI)).ln() - 0.5 * t - PI / 8.0
        + 1.0 / (48.0 * t)
        + 7.0 / (5760.0 * t.powi(3))
        + 31.0 / (80640.0 * t.powi(5))
}

/// Hardy `Z(t) = Re e^{i theta(t)} zeta(1/2 + i t)`.
pub fn hardy_z(t: f64) -> f64 {
    (Complex64::from_polar(1.0, rs_theta(t)) * zeta_em(Complex64::new(0.5, t))).re
}

/// Bisection to `tol` on a sign change of `f` in `[a, b]`.
pub fn bisect<F: FnMut(f64) -> f64>(mut f: F, mut a: f64, mut b: f64, tol: f64) -> f64 {
    let mut fa = f(a);
    assert!(fa * f(b) <= 0.0, "no sign change on [{a}, {b}]");
    while b - a > tol {
        let m = 0.5 * (a + b);
        let fm = f(m);
        if fa * fm <= 0.0 {
            b = m;
        } else {
            a = m;
            fa = fm;
        }
    }
    0.5 * (a + b)
}

/// Sign changes of Hardy Z on a fine grid, refined by bisection.
pub fn zeta_zeros_bisected(a: f64, b: f64) -> Vec<f64> {
    let h = 0.01;
    let mut out = Vec::new();
    let mut t = a;
    let mut ft = hardy_z(t);
    while t < b {
        let u = (t + h).min(b);
        let fu = hardy_z(u);
        if ft * fu < 0.0 {
            out.push(bisect(hardy_z, t, u, 1e-12));
        }
        t = u;
        ft = fu;
    }
    out
}

pub fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm()
}
