use core::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Float;

use super::POLE_TOL;
use crate::{Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Complex Gamma function.
///
/// Lanczos approximation (`g = 7`, nine coefficients) for `Re s >= 1/2` and
/// the reflection formula `Gamma(s) Gamma(1-s) = pi / sin(pi s)` below that.
/// Relative accuracy is about `1e-13` for `|Im s| <= 50`, `|Re s| <= 10`.
pub fn gamma_complex(s: Complex64) -> Result<Complex64> {
    if !crate::is_finite(s) {
        return Err(Error::domain("Gamma of a non-finite argument"));
    }
    let n = s.re.round();
    if n <= 0.0 && (s - n).norm() < POLE_TOL {
        return Err(Error::Pole {
            function: "gamma",
            at: s,
        });
    }
    if s.re < 0.5 {
        let sin = (s * PI).sin();
        Ok(PI / (sin * lanczos(Complex64::new(1.0, 0.0) - s)))
    } else {
        Ok(lanczos(s))
    }
}

fn lanczos(s: Complex64) -> Complex64 {
    let z = s - 1.0;
    let mut series = Complex64::new(LANCZOS_COEF[0], 0.0);
    for (i, &c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        series += c / (z + i as f64);
    }
    let t = z + (LANCZOS_G + 0.5);
    let log_core = (z + 0.5) * t.ln() - t;
    (2.0 * PI).sqrt() * log_core.exp() * series
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn integers_and_half() {
        assert!(
            rel(
                gamma_complex(Complex64::new(1.0, 0.0)).unwrap(),
                Complex64::new(1.0, 0.0)
            ) < 1e-14
        );
        assert!(
            rel(
                gamma_complex(Complex64::new(5.0, 0.0)).unwrap(),
                Complex64::new(24.0, 0.0)
            ) < 1e-14
        );
        let sqrt_pi = PI.sqrt();
        assert!(
            rel(
                gamma_complex(Complex64::new(0.5, 0.0)).unwrap(),
                Complex64::new(sqrt_pi, 0.0)
            ) < 1e-14
        );
        // Gamma(-1/2) = -2 sqrt(pi)
        assert!(
            rel(
                gamma_complex(Complex64::new(-0.5, 0.0)).unwrap(),
                Complex64::new(-2.0 * sqrt_pi, 0.0)
            ) < 1e-13
        );
    }

    #[test]
    fn poles() {
        for n in [0.0, -1.0, -2.0, -7.0] {
            assert!(matches!(
                gamma_complex(Complex64::new(n, 0.0)),
                Err(Error::Pole { .. })
            ));
        }
        assert!(gamma_complex(Complex64::new(-1.0, 1e-10)).is_ok());
        assert!(gamma_complex(Complex64::new(f64::NAN, 0.0)).is_err());
    }

    #[test]
    fn modulus_on_critical_line() {
        // |Gamma(1/2 + i t)|^2 = pi / cosh(pi t)
        for t in [0.3, 2.0, 9.5, 20.0] {
            let g = gamma_complex(Complex64::new(0.5, t)).unwrap();
            let expect = (PI / (PI * t).cosh()).sqrt();
            assert!((g.norm() - expect).abs() / expect < 1e-12, "t = {t}");
        }
    }
}
