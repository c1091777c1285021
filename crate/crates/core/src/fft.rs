//! Radix-2 FFT and a Bluestein chirp-z transform built on it.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Float;

use crate::{Error, Result};

/// Precomputed twiddles and bit-reversal table for a power-of-two length.
#[derive(Clone, Debug)]
pub struct Fft {
    n: usize,
    twiddles: Vec<Complex64>,
    rev: Vec<usize>,
}

impl Fft {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || !n.is_power_of_two() {
            return Err(Error::grid(alloc::format!(
                "FFT length {n} is not a power of two"
            )));
        }
        let twiddles = (0..n / 2)
            .map(|k| {
                let a = -2.0 * PI * k as f64 / n as f64;
                Complex64::new(a.cos(), a.sin())
            })
            .collect();
        let bits = n.trailing_zeros();
        let rev = (0..n)
            .map(|i| {
                if bits == 0 {
                    0
                } else {
                    i.reverse_bits() >> (usize::BITS - bits)
                }
            })
            .collect();
        Ok(Self { n, twiddles, rev })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// In place `X_k = sum_j x_j exp(-2 pi i j k / n)`.
    pub fn forward(&self, data: &mut [Complex64]) {
        assert_eq!(data.len(), self.n, "buffer length does not match plan");
        for i in 0..self.n {
            let j = self.rev[i];
            if i < j {
                data.swap(i, j);
            }
        }
        let mut len = 2;
        while len <= self.n {
            let half = len / 2;
            let stride = self.n / len;
            for block in data.chunks_exact_mut(len) {
                let (lo, hi) = block.split_at_mut(half);
                for j in 0..half {
                    let t = hi[j] * self.twiddles[j * stride];
                    hi[j] = lo[j] - t;
                    lo[j] += t;
                }
            }
            len <<= 1;
        }
    }

    /// In place `x_j = (1/n) sum_k X_k exp(+2 pi i j k / n)`.
    pub fn inverse(&self, data: &mut [Complex64]) {
        for v in data.iter_mut() {
            *v = v.conj();
        }
        self.forward(data);
        let scale = 1.0 / self.n as f64;
        for v in data.iter_mut() {
            *v = v.conj() * scale;
        }
    }
}

/// Evaluates `X_k = sum_{j < len_in} x_j exp(i theta j k)` for `k < n_out`
/// with three FFTs (one of them cached), for any real `theta`.
#[derive(Clone, Debug)]
pub struct ChirpZ {
    fft: Fft,
    len_in: usize,
    n_out: usize,
    chirp: Vec<Complex64>,
    filter: Vec<Complex64>,
}

impl ChirpZ {
    pub fn new(len_in: usize, n_out: usize, theta: f64) -> Result<Self> {
        if len_in == 0 || n_out == 0 {
            return Err(Error::grid("chirp-z lengths must be positive"));
        }
        let size = (len_in + n_out - 1).next_power_of_two();
        let fft = Fft::new(size)?;
        let m = len_in.max(n_out);
        let chirp: Vec<Complex64> = (0..m)
            .map(|j| {
                let jf = j as f64;
                let a = 0.5 * theta * (jf * jf);
                Complex64::new(a.cos(), a.sin())
            })
            .collect();
        let mut filter = vec![Complex64::new(0.0, 0.0); size];
        for (k, c) in chirp.iter().enumerate().take(n_out) {
            filter[k] = c.conj();
        }
        for j in 1..len_in {
            filter[size - j] = chirp[j].conj();
        }
        fft.forward(&mut filter);
        Ok(Self {
            fft,
            len_in,
            n_out,
            chirp,
            filter,
        })
    }

    pub fn len_in(&self) -> usize {
        self.len_in
    }

    pub fn n_out(&self) -> usize {
        self.n_out
    }

    /// `input.len()` may be shorter than `len_in` (implicit zero padding).
    pub fn transform(&self, input: &[Complex64]) -> Vec<Complex64> {
        assert!(
            input.len() <= self.len_in,
            "chirp-z input longer than planned"
        );
        let mut buf = vec![Complex64::new(0.0, 0.0); self.fft.len()];
        for (j, (&x, &c)) in input.iter().zip(&self.chirp).enumerate() {
            buf[j] = x * c;
        }
        self.fft.forward(&mut buf);
        for (b, f) in buf.iter_mut().zip(&self.filter) {
            *b *= f;
        }
        self.fft.inverse(&mut buf);
        buf.truncate(self.n_out);
        for (b, c) in buf.iter_mut().zip(&self.chirp) {
            *b *= c;
        }
        buf
    }
}
