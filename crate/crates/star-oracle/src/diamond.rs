//! Numerical worst-case (diamond) error rate for single-qubit Z-axis channels.
//!
//! The channel family is E(rho) = (1-x) rho + i y (Z rho - rho Z) + x Z rho Z.
//! The diamond distance to the identity is computed by maximizing the trace
//! distance of (E (x) I - I)(|psi><psi|) over pure two-qubit inputs with a
//! seeded multi-start gradient ascent. No closed form is used anywhere here.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// rho as a dense 4x4 complex matrix from a pure 2-qubit state.
fn density(psi: &[Complex64; 4]) -> [[Complex64; 4]; 4] {
    let mut rho = [[Complex64::ZERO; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            rho[i][j] = psi[i] * psi[j].conj();
        }
    }
    rho
}

/// Apply E (on qubit 0, the low bit) tensored with identity, minus identity.
fn deviation(x: f64, y: f64, rho: &[[Complex64; 4]; 4]) -> [[Complex64; 4]; 4] {
    // Z on the low bit: sign s(i) = +1 if bit0(i)=0 else -1.
    let s = |i: usize| if i & 1 == 0 { 1.0 } else { -1.0 };
    let mut out = [[Complex64::ZERO; 4]; 4];
    let iy = Complex64::new(0.0, y);
    for i in 0..4 {
        for j in 0..4 {
            let zrho = rho[i][j] * s(i);
            let rhoz = rho[i][j] * s(j);
            let zrhoz = rho[i][j] * s(i) * s(j);
            out[i][j] = -x * rho[i][j] + iy * (zrho - rhoz) + x * zrhoz;
        }
    }
    out
}

/// Trace norm of a 4x4 Hermitian matrix via the real-symmetric embedding
/// [[Re, -Im], [Im, Re]] (eigenvalues appear twice).
fn trace_norm(m: &[[Complex64; 4]; 4]) -> f64 {
    let mut big = DMatrix::<f64>::zeros(8, 8);
    for i in 0..4 {
        for j in 0..4 {
            big[(i, j)] = m[i][j].re;
            big[(i, j + 4)] = -m[i][j].im;
            big[(i + 4, j)] = m[i][j].im;
            big[(i + 4, j + 4)] = m[i][j].re;
        }
    }
    let eig = SymmetricEigen::new(big);
    eig.eigenvalues.iter().map(|v| v.abs()).sum::<f64>() / 2.0
}

fn objective(x: f64, y: f64, v: &[f64; 8]) -> f64 {
    let mut psi = [Complex64::ZERO; 4];
    let norm: f64 = v.iter().map(|a| a * a).sum::<f64>().sqrt();
    for i in 0..4 {
        psi[i] = Complex64::new(v[2 * i] / norm, v[2 * i + 1] / norm);
    }
    0.5 * trace_norm(&deviation(x, y, &density(&psi)))
}

/// Worst-case error rate of E(x, y) by direct numerical maximization.
pub fn worst_case_error(x: f64, y: f64, seed: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = 0.0f64;
    for _ in 0..24 {
        let mut v: [f64; 8] = std::array::from_fn(|_| rng.gen::<f64>() * 2.0 - 1.0);
        let mut step = 0.3;
        let mut f = objective(x, y, &v);
        while step > 1e-9 {
            let mut improved = false;
            for i in 0..8 {
                for dir in [step, -step] {
                    let mut w = v;
                    w[i] += dir;
                    let g = objective(x, y, &w);
                    if g > f + 1e-15 {
                        v = w;
                        f = g;
                        improved = true;
                    }
                }
            }
            if !improved {
                step *= 0.5;
            }
        }
        best = best.max(f);
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pure_z_flip_channel() {
        // x = p, y = 0 is a Z-flip channel; worst case error is p.
        let p = 0.037;
        let got = worst_case_error(p, 0.0, 11);
        assert!((got - p).abs() < 1e-6, "{got}");
    }

    #[test]
    fn pure_over_rotation() {
        // (x, y) = (sin^2 t, sin t cos t) is exp(i t Z); worst case |sin t|.
        let t = 0.21f64;
        let got = worst_case_error(t.sin().powi(2), t.sin() * t.cos(), 12);
        assert!((got - t.sin().abs()).abs() < 1e-6, "{got}");
    }
}
