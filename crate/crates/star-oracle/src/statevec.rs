//! Dense state-vector simulator for small qubit counts.
//!
//! Qubit `q` is bit `q` of the basis index (little endian). Rotations use
//! the convention `R_P(theta) = exp(i theta P)`.

use num_complex::Complex64;
use rand::Rng;

const EPS: f64 = 1e-12;

#[derive(Clone, Debug)]
pub struct StateVec {
    n: usize,
    amp: Vec<Complex64>,
}

impl StateVec {
    /// |0...0>
    pub fn zero(n: usize) -> Self {
        assert!(n <= 24, "dense simulation limited to 24 qubits");
        let mut amp = vec![Complex64::ZERO; 1 << n];
        amp[0] = Complex64::ONE;
        Self { n, amp }
    }

    /// |+...+>
    pub fn plus(n: usize) -> Self {
        let dim = 1usize << n;
        let a = Complex64::new(1.0 / (dim as f64).sqrt(), 0.0);
        Self {
            n,
            amp: vec![a; dim],
        }
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amp
    }

    pub fn h(&mut self, q: usize) {
        let bit = 1usize << q;
        let s = std::f64::consts::FRAC_1_SQRT_2;
        for i in 0..self.amp.len() {
            if i & bit == 0 {
                let a = self.amp[i];
                let b = self.amp[i | bit];
                self.amp[i] = (a + b) * s;
                self.amp[i | bit] = (a - b) * s;
            }
        }
    }

    pub fn x(&mut self, q: usize) {
        let bit = 1usize << q;
        for i in 0..self.amp.len() {
            if i & bit == 0 {
                self.amp.swap(i, i | bit);
            }
        }
    }

    pub fn z(&mut self, q: usize) {
        let bit = 1usize << q;
        for (i, a) in self.amp.iter_mut().enumerate() {
            if i & bit != 0 {
                *a = -*a;
            }
        }
    }

    pub fn y(&mut self, q: usize) {
        let bit = 1usize << q;
        let im = Complex64::new(0.0, 1.0);
        for i in 0..self.amp.len() {
            if i & bit == 0 {
                let a0 = self.amp[i];
                let a1 = self.amp[i | bit];
                self.amp[i] = -im * a1;
                self.amp[i | bit] = im * a0;
            }
        }
    }

    pub fn cnot(&mut self, c: usize, t: usize) {
        assert_ne!(c, t);
        let cb = 1usize << c;
        let tb = 1usize << t;
        for i in 0..self.amp.len() {
            if i & cb != 0 && i & tb == 0 {
                self.amp.swap(i, i | tb);
            }
        }
    }

    pub fn swap(&mut self, a: usize, b: usize) {
        assert_ne!(a, b);
        let ab = 1usize << a;
        let bb = 1usize << b;
        for i in 0..self.amp.len() {
            if i & ab != 0 && i & bb == 0 {
                self.amp.swap(i, (i & !ab) | bb);
            }
        }
    }

    /// exp(i theta Z_q)
    pub fn rz(&mut self, q: usize, theta: f64) {
        let bit = 1usize << q;
        let plus = Complex64::from_polar(1.0, theta);
        let minus = Complex64::from_polar(1.0, -theta);
        for (i, a) in self.amp.iter_mut().enumerate() {
            *a *= if i & bit == 0 { plus } else { minus };
        }
    }

    /// exp(i theta Z...Z) over `support` (parity phase).
    pub fn rz_string(&mut self, support: &[usize], theta: f64) {
        let mut mask = 0usize;
        for &q in support {
            mask |= 1 << q;
        }
        let plus = Complex64::from_polar(1.0, theta);
        let minus = Complex64::from_polar(1.0, -theta);
        for (i, a) in self.amp.iter_mut().enumerate() {
            *a *= if (i & mask).count_ones() % 2 == 0 {
                plus
            } else {
                minus
            };
        }
    }

    /// Probability of measuring qubit `q` as 0.
    pub fn prob_zero(&self, q: usize) -> f64 {
        let bit = 1usize << q;
        self.amp
            .iter()
            .enumerate()
            .filter(|(i, _)| i & bit == 0)
            .map(|(_, a)| a.norm_sqr())
            .sum()
    }

    /// Projective Z measurement; returns +1/-1 and collapses the state.
    pub fn measure_z(&mut self, q: usize, rng: &mut impl Rng) -> i8 {
        let p0 = self.prob_zero(q);
        let bit = 1usize << q;
        let zero = rng.gen::<f64>() < p0;
        let norm = if zero { p0.sqrt() } else { (1.0 - p0).sqrt() };
        assert!(norm > EPS, "measurement of zero-probability branch");
        for (i, a) in self.amp.iter_mut().enumerate() {
            if (i & bit == 0) != zero {
                *a = Complex64::ZERO;
            } else {
                *a /= norm;
            }
        }
        if zero {
            1
        } else {
            -1
        }
    }

    pub fn inner(&self, other: &Self) -> Complex64 {
        assert_eq!(self.n, other.n);
        self.amp
            .iter()
            .zip(&other.amp)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amp.iter().map(|a| a.norm_sqr()).sum()
    }

    /// <psi| P |psi> for a Pauli string given as (x_mask, z_mask) acting as
    /// X^x Z^z with an extra i^phase prefactor.
    pub fn pauli_expectation(&self, x_mask: usize, z_mask: usize, phase: u8) -> Complex64 {
        let mut acc = Complex64::ZERO;
        for (i, a) in self.amp.iter().enumerate() {
            if a.norm_sqr() == 0.0 {
                continue;
            }
            // X^x Z^z |i> = (-1)^{z.i} |i ^ x>
            let sign = if ((z_mask & i).count_ones()) % 2 == 0 {
                1.0
            } else {
                -1.0
            };
            let j = i ^ x_mask;
            acc += self.amp[j].conj() * a * sign;
        }
        acc * Complex64::i().powu(phase as u32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn bell_pair_correlations() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let mut sv = StateVec::zero(2);
            sv.h(0);
            sv.cnot(0, 1);
            let a = sv.measure_z(0, &mut rng);
            let b = sv.measure_z(1, &mut rng);
            assert_eq!(a, b);
        }
    }

    #[test]
    fn rz_phase_convention() {
        // exp(i t Z)|0> = e^{it}|0>
        let mut sv = StateVec::zero(1);
        sv.rz(0, 0.3);
        assert!((sv.amplitudes()[0] - Complex64::from_polar(1.0, 0.3)).norm() < EPS);
    }
}
