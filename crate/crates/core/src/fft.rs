//! Finite Fourier transform pair used by the spectral route.
//!
//! Conventions match the rest of the crate: the forward transform maps site
//! amplitudes to frequency amplitudes with a positive phase,
//!
//! ```text
//! F(r) = sum_n f(n) e^{+i 2 pi r n / N},      f(n) = (1/N) sum_r F(r) e^{-i 2 pi r n / N},
//! ```
//!
//! so `idft(dft(f)) == f`. Power-of-two lengths run through an in-place
//! radix-2 decimation-in-time transform; other lengths fall back to the
//! direct O(N^2) sum with a shared twiddle table.

use num_complex::Complex64;

const TAU: f64 = std::f64::consts::TAU;

/// Forward transform, any length >= 1.
pub fn dft(f: &[Complex64]) -> Vec<Complex64> {
    let mut buf = f.to_vec();
    transform(&mut buf, 1.0);
    buf
}

/// Inverse transform, any length >= 1.
pub fn idft(ft: &[Complex64]) -> Vec<Complex64> {
    let mut buf = ft.to_vec();
    transform(&mut buf, -1.0);
    let scale = 1.0 / buf.len() as f64;
    for z in &mut buf {
        *z *= scale;
    }
    buf
}

/// In-place transform with twiddles e^{sign i 2 pi j k / N}.
pub(crate) fn transform(buf: &mut [Complex64], sign: f64) {
    let n = buf.len();
    if n <= 1 {
        return;
    }
    if n.is_power_of_two() {
        radix2(buf, sign);
    } else {
        naive(buf, sign);
    }
}

fn twiddles(n: usize, count: usize, sign: f64) -> Vec<Complex64> {
    (0..count)
        .map(|k| Complex64::from_polar(1.0, sign * TAU * k as f64 / n as f64))
        .collect()
}

fn naive(buf: &mut [Complex64], sign: f64) {
    let n = buf.len();
    let w = twiddles(n, n, sign);
    let src = buf.to_vec();
    for (k, out) in buf.iter_mut().enumerate() {
        let mut acc = Complex64::default();
        for (j, &z) in src.iter().enumerate() {
            acc += z * w[(j * k) % n];
        }
        *out = acc;
    }
}

fn radix2(buf: &mut [Complex64], sign: f64) {
    let n = buf.len();
    // bit-reversal permutation
    let mut j = 0usize;
    for i in 0..n - 1 {
        if i < j {
            buf.swap(i, j);
        }
        let mut k = n >> 1;
        while k <= j {
            j -= k;
            k >>= 1;
        }
        j += k;
    }
    let w = twiddles(n, n / 2, sign);
    let mut size = 2;
    while size <= n {
        let half = size >> 1;
        let stride = n / size;
        let mut start = 0;
        while start < n {
            for k in 0..half {
                let u = start + k;
                let v = u + half;
                let tw = w[k * stride] * buf[v];
                buf[v] = buf[u] - tw;
                buf[u] += tw;
            }
            start += size;
        }
        size <<= 1;
    }
}
