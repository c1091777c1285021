#![allow(clippy::excessive_precision)]

mod common;

use std::f64::consts::{LN_2, PI};

use common::{averaged_alternating, c, gamma_stirling, rel, zeta_em, zeta_zeros_bisected, SEED};
use hyperzeta_core::accel::AccelConfig;
use hyperzeta_core::hyperbolic::mellin_integral_direct;
use hyperzeta_core::quad::QuadConfig;
use hyperzeta_core::specialfn::{
    dirichlet_beta, dirichlet_eta, dirichlet_partial_sum, gamma_complex, hurwitz_zeta,
    lerch_integrand, lerch_phi, zeta_critical, LerchParams,
};
use hyperzeta_core::{Complex64, Error};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn cfg() -> AccelConfig {
    AccelConfig::default()
}

#[test]
fn gamma_on_critical_line_matches_frozen_value() {
    let s = Complex64::new(0.5, -14.134725);
    let frozen = Complex64::new(-1.445_553_843_760_696_4e-10, 5.522_788_768_774_065_6e-10);
    assert!(rel(gamma_stirling(s), frozen) < 1e-12);
    assert!(rel(gamma_complex(s).unwrap(), frozen) < 1e-12);
}

#[test]
fn gamma_agrees_with_stirling_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..200 {
        let mut re: f64 = rng.gen_range(0.1..10.0);
        if rng.gen_bool(0.5) {
            re = -re;
        }
        if (re - re.round()).abs() < 0.05 {
            continue;
        }
        let s = Complex64::new(re, rng.gen_range(-50.0..50.0));
        let r = rel(gamma_complex(s).unwrap(), gamma_stirling(s));
        assert!(r < 1e-12, "s = {s}: rel {r:e}");
    }
}

#[test]
fn gamma_reflection() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut n = 0;
    while n < 100 {
        let s = Complex64::new(rng.gen_range(-5.0..5.0), rng.gen_range(-30.0..30.0));
        if (s.re - s.re.round()).abs() < 0.1 && s.im.abs() < 0.1 {
            continue;
        }
        let one = c(1.0);
        let v = gamma_complex(s).unwrap() * gamma_complex(one - s).unwrap() * (s * PI).sin() / PI;
        assert!((v - one).norm() < 1e-10, "s = {s}: {v}");
        n += 1;
    }
}

#[test]
fn eta_at_one_half() {
    let frozen = 0.604_898_643_421_630_37;
    let oracle = averaged_alternating(|k| c(1.0 / ((k + 1) as f64).sqrt()), 1_000_000, 40);
    assert!((oracle.re - frozen).abs() < 1e-12);
    assert!((dirichlet_eta(c(0.5), &cfg()).unwrap().re - frozen).abs() < 1e-12);
}

#[test]
fn catalan_constant() {
    let frozen = 0.915_965_594_177_219_02;
    let oracle = averaged_alternating(|k| c(1.0 / ((2 * k + 1) as f64).powi(2)), 1_000_000, 40);
    assert!((oracle.re - frozen).abs() < 1e-13);
    assert!((dirichlet_beta(c(2.0), &cfg()).unwrap().re - frozen).abs() < 1e-12);
}

#[test]
fn zeta_at_one_half_matches_euler_maclaurin() {
    let z = zeta_critical(0.0, &cfg()).unwrap();
    assert!((z - zeta_em(c(0.5))).norm() < 1e-12);
    assert!((z.re + 1.460_354_508_809_586_8).abs() < 1e-12);
}

#[test]
fn zeta_critical_matches_euler_maclaurin_along_the_line() {
    for k in 0..=60 {
        let t = k as f64;
        let z = zeta_critical(t, &cfg()).unwrap();
        let o = zeta_em(Complex64::new(0.5, t));
        assert!((z - o).norm() < 1e-10, "t = {t}: {z} vs {o}");
    }
    let frozen = Complex64::new(0.793_044_952_561_928_67, -1.041_274_614_651_065);
    assert!((zeta_critical(40.0, &cfg()).unwrap() - frozen).norm() < 1e-11);
}

#[test]
fn first_zero_is_small() {
    let z = zeta_critical(14.134725, &cfg()).unwrap();
    assert!(z.norm() <= 1e-5);
}

#[test]
fn zeros_by_bisection_match_frozen_values() {
    let zeros = zeta_zeros_bisected(10.0, 42.0);
    let frozen = [
        14.134_725_141_734_693_790,
        21.022_039_638_771_554_993,
        25.010_857_580_145_688_763,
        30.424_876_125_859_513_210,
        32.935_061_587_739_189_691,
        37.586_178_158_825_671_257,
        40.918_719_012_147_495_187,
    ];
    assert_eq!(zeros.len(), frozen.len());
    for (z, f) in zeros.iter().zip(frozen) {
        assert!((z - f).abs() < 1e-9, "{z} vs {f}");
    }
}

#[test]
fn zeta_conjugation_symmetry() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..50 {
        let t = rng.gen_range(0.0..40.0);
        let a = zeta_critical(t, &cfg()).unwrap();
        let b = zeta_critical(-t, &cfg()).unwrap();
        assert!((a - b.conj()).norm() < 1e-12);
    }
}

#[test]
fn eta_zeta_identity_at_re_two() {
    for t in [0.0, 1.5, 7.0, 20.0] {
        let s = Complex64::new(2.0, t);
        let eta = dirichlet_eta(s, &cfg()).unwrap();
        // plain partial sum plus integral tail N^{1-s}/(s-1)
        let n = 100_000usize;
        let plain = dirichlet_partial_sum(s, n).unwrap()
            + (-(s - 1.0) * (n as f64).ln()).exp() / (s - 1.0)
            - (-s * (n as f64).ln()).exp() * 0.5;
        let factor = c(1.0) - (-(s - 1.0) * LN_2).exp();
        assert!((eta - factor * plain).norm() < 1e-10, "t = {t}");
    }
}

#[test]
fn beta_from_lerch() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..20 {
        let s = Complex64::new(0.5, rng.gen_range(-20.0..20.0));
        let p = LerchParams::new(c(-1.0), s, 0.5).unwrap();
        let via_lerch = lerch_phi(&p, &cfg()).unwrap() * (-s * LN_2).exp();
        assert!((via_lerch - dirichlet_beta(s, &cfg()).unwrap()).norm() < 1e-10);
    }
}

#[test]
fn lerch_at_minus_one_is_eta() {
    for t in [0.0, 3.0, -12.0] {
        let s = Complex64::new(0.7, t);
        let p = LerchParams::new(c(-1.0), s, 1.0).unwrap();
        assert!(
            (lerch_phi(&p, &cfg()).unwrap() - dirichlet_eta(s, &cfg()).unwrap()).norm() < 1e-12
        );
    }
}

#[test]
fn lerch_frozen_values() {
    let p = LerchParams::new(Complex64::new(0.3, 0.4), Complex64::new(0.5, -3.0), 0.7).unwrap();
    let frozen = Complex64::new(0.318_451_960_506_149_7, -0.933_714_651_509_056_2);
    assert!((lerch_phi(&p, &cfg()).unwrap() - frozen).norm() < 1e-12);
    let p = LerchParams::new(c(-1.0), Complex64::new(0.5, 10.0), 0.5).unwrap();
    let frozen = Complex64::new(0.409_647_756_214_208_55, -0.475_748_326_116_559_17);
    assert!((lerch_phi(&p, &cfg()).unwrap() - frozen).norm() < 1e-12);
    let p = LerchParams::new(c(1.0), c(1.5), 0.3).unwrap();
    assert!((lerch_phi(&p, &cfg()).unwrap().re - 8.237_761_671_459_723_4).abs() < 1e-12);
    assert!(
        (hurwitz_zeta(c(1.5), 0.3, &cfg()).unwrap().re - 8.237_761_671_459_723_4).abs() < 1e-12
    );
}

#[test]
fn lerch_matches_mellin_integral() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let quad = QuadConfig::with_tol(1e-11);
    for _ in 0..10 {
        let z = Complex64::from_polar(rng.gen_range(0.0..0.9), rng.gen_range(-PI..PI));
        let s = Complex64::new(rng.gen_range(0.3..2.5), rng.gen_range(-8.0..8.0));
        let u = rng.gen_range(0.3..3.0);
        let direct = lerch_phi(&LerchParams::new(z, s, u).unwrap(), &cfg()).unwrap();
        let integral = mellin_integral_direct(|t| lerch_integrand(z, t, u), s, &quad).unwrap();
        let via_mellin = integral / gamma_complex(s).unwrap();
        assert!((direct - via_mellin).norm() < 1e-8, "z {z} s {s} u {u}");
    }
}

#[test]
fn lerch_outside_domain() {
    let p = LerchParams::new(c(0.995), c(2.0), 1.0).unwrap();
    assert!(matches!(lerch_phi(&p, &cfg()), Err(Error::Domain(_))));
    assert!(LerchParams::new(c(1.0), c(0.9), 1.0).is_err());
}

#[test]
fn partial_sum_against_reverse_summation() {
    let frozen = 198.544_645_449_523_75;
    let v = dirichlet_partial_sum(c(0.5), 10_000).unwrap();
    let reverse: f64 = (1..=10_000u32)
        .rev()
        .map(|n| 1.0 / f64::from(n).sqrt())
        .sum();
    assert!((v.re - reverse).abs() < 1e-10);
    assert!((v.re - frozen).abs() < 1e-11);
    let s = Complex64::new(0.5, 14.0);
    let v = dirichlet_partial_sum(s, 10_000).unwrap();
    let reverse: Complex64 = (1..=10_000u32)
        .rev()
        .map(|n| (-s * f64::from(n).ln()).exp())
        .sum();
    assert!((v - reverse).norm() < 1e-10);
}

#[test]
fn convergence_error_on_tiny_budget() {
    let tight = AccelConfig::new(10, 1e-14).unwrap();
    assert!(matches!(
        dirichlet_eta(Complex64::new(0.5, 30.0), &tight),
        Err(Error::Convergence { .. })
    ));
}
