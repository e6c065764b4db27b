//! Brute-force expansion of the transversal multi-rotation operator.
//!
//! The operator `prod_{i=1..k} exp(i theta Z-block_i)` applied to |+>^d
//! (d = m*k) is evaluated on a dense state vector. In the X basis the
//! result is supported on the 2^k block-pattern strings, and grouping the
//! patterns into complementary pairs reproduces the syndrome-subspace
//! branches of the preparation protocol. The logical angle of each branch
//! is extracted after applying the same global Clifford correction that
//! brings the no-error branch to the canonical resource-state form
//! cos(t)|+>_L + i sin(t)|->_L.

use crate::statevec::StateVec;
use num_complex::Complex64;

#[derive(Clone, Debug)]
pub struct Branch {
    /// Hamming weight of the block pattern (0 ..= floor(k/2)).
    pub stratum: usize,
    /// Probability of projecting onto this stratum (all patterns of this weight).
    pub q_sample: f64,
    /// Logical rotation angle of the post-selected branch state.
    pub theta: f64,
}

#[derive(Clone, Debug)]
pub struct TransversalExpansion {
    pub m: usize,
    pub k: usize,
    pub theta_phys: f64,
    pub branches: Vec<Branch>,
}

impl TransversalExpansion {
    pub fn new(m: usize, k: usize, theta_phys: f64) -> Self {
        let d = m * k;
        assert!(d <= 20, "brute-force expansion limited to d <= 20");
        let mut sv = StateVec::plus(d);
        for block in 0..k {
            let support: Vec<usize> = (block * m..(block + 1) * m).collect();
            sv.rz_string(&support, theta_phys);
        }
        // Move to the X basis; Z errors become bit flips there.
        let mut xbasis = sv.clone();
        for q in 0..d {
            xbasis.h(q);
        }
        let dim_scale = 1.0; // state stays normalized

        // Pattern string for block pattern b: all qubits of selected blocks set.
        let pattern = |b: usize| -> usize {
            let mut s = 0usize;
            for block in 0..k {
                if b & (1 << block) != 0 {
                    for q in block * m..(block + 1) * m {
                        s |= 1 << q;
                    }
                }
            }
            s
        };

        // Check support: amplitude outside block patterns must vanish.
        let mut support_norm = 0.0;
        for b in 0..(1usize << k) {
            support_norm += xbasis.amplitudes()[pattern(b)].norm_sqr();
        }
        assert!(
            (support_norm - 1.0).abs() < 1e-10,
            "unexpected support outside block patterns: {support_norm}"
        );

        // Correction bringing branch 0 to canonical form: a relative phase
        // e^{i gamma} on the |1...1> side, gamma a multiple of pi/2
        // (powers of the logical pi/4 X-rotation and the logical X flip).
        let full = (1usize << k) - 1;
        let a0 = xbasis.amplitudes()[pattern(0)];
        let b0 = xbasis.amplitudes()[pattern(full)];
        let alpha = -a0.arg();
        let want = std::f64::consts::FRAC_PI_2; // arg of i
        let raw = want - (b0.arg() + alpha);
        let steps = (raw / std::f64::consts::FRAC_PI_2).round();
        let gamma = steps * std::f64::consts::FRAC_PI_2;
        let resid = (raw - gamma).abs();
        assert!(
            resid < 1e-9,
            "branch-0 correction is not a quarter-turn multiple: {resid}"
        );

        let rot = |lo: Complex64, hi: Complex64| -> (Complex64, Complex64) {
            let ph = Complex64::from_polar(1.0, alpha);
            (lo * ph, hi * ph * Complex64::from_polar(1.0, gamma))
        };

        let mut branches = Vec::new();
        for n in 0..=(k / 2) {
            // representative pattern of weight n: lowest blocks set
            let b_rep = (1usize << n) - 1;
            let s_lo = pattern(b_rep);
            let s_hi = pattern(full ^ b_rep);
            let (lo, hi) = rot(
                xbasis.amplitudes()[s_lo] * dim_scale,
                xbasis.amplitudes()[s_hi] * dim_scale,
            );
            let norm = (lo.norm_sqr() + hi.norm_sqr()).sqrt();
            // canonical form: (cos t, i sin t) up to a global phase chosen
            // to make the low side real positive
            let g = Complex64::from_polar(1.0, -lo.arg());
            let lo_c = lo * g;
            let hi_c = hi * g;
            assert!(lo_c.im.abs() < 1e-9 * norm, "low side not real");
            assert!(
                hi_c.re.abs() < 1e-9 * norm,
                "high side not purely imaginary: {hi_c}"
            );
            let theta = (hi_c.im).atan2(lo_c.re);
            // multiplicity: number of weight-n patterns; for even k the
            // middle stratum pairs cover each subspace twice
            let mult = binom(k, n);
            let pair_norm = lo.norm_sqr() + hi.norm_sqr();
            let q_sample = if 2 * n == k {
                mult as f64 * pair_norm / 2.0
            } else {
                mult as f64 * pair_norm
            };
            branches.push(Branch {
                stratum: n,
                q_sample,
                theta,
            });
        }

        Self {
            m,
            k,
            theta_phys,
            branches,
        }
    }

    pub fn p_ideal(&self) -> f64 {
        self.branches[0].q_sample
    }

    /// Pair norm |u_1|^2 + |u_{k-1}|^2 of a single weight-1 pattern.
    pub fn p_error(&self) -> f64 {
        assert!(self.k >= 1);
        self.branches[1].q_sample / self.k as f64
    }

    pub fn theta_star(&self) -> f64 {
        self.branches[0].theta
    }

    pub fn theta_error(&self) -> f64 {
        self.branches[1].theta
    }
}

pub fn binom(n: usize, r: usize) -> u64 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc = 1u64;
    for i in 0..r {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn choi_case_matches_closed_forms() {
        // m=1, k=d: theta* = asin(sin^d / sqrt(p_ideal))
        let t = 0.2;
        let exp = TransversalExpansion::new(1, 4, t);
        let s = t.sin();
        let c = t.cos();
        let p_ideal = s.powi(8) + c.powi(8);
        assert!((exp.p_ideal() - p_ideal).abs() < 1e-12);
        let theta_star = (s.powi(4) / p_ideal.sqrt()).asin();
        assert!((exp.theta_star() - theta_star).abs() < 1e-12);
    }

    #[test]
    fn weight_sum_is_one() {
        for (m, k) in [(1usize, 5usize), (2, 3), (2, 2), (3, 2)] {
            let exp = TransversalExpansion::new(m, k, 0.17);
            let total: f64 = exp.branches.iter().map(|b| b.q_sample).sum();
            assert!((total - 1.0).abs() < 1e-12, "m={m} k={k}: {total}");
        }
    }

    #[test]
    fn k3_error_angle_is_minus_theta() {
        let exp = TransversalExpansion::new(2, 3, 0.1);
        assert!((exp.theta_error() + 0.1).abs() < 1e-12);
    }
}
