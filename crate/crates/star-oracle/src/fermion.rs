//! Exact diagonalization oracles: a Fock-space Hubbard Hamiltonian built
//! directly from fermionic operators, and a dense matrix builder for Pauli
//! Hamiltonians, used to compare spectra.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

/// Apply c_p to basis state `n` (occupation bitmask). Returns (sign, state).
fn annihilate(n: usize, p: usize) -> Option<(f64, usize)> {
    if n & (1 << p) == 0 {
        return None;
    }
    let below = (n & ((1 << p) - 1)).count_ones();
    let sign = if below % 2 == 0 { 1.0 } else { -1.0 };
    Some((sign, n & !(1 << p)))
}

fn create(n: usize, p: usize) -> Option<(f64, usize)> {
    if n & (1 << p) != 0 {
        return None;
    }
    let below = (n & ((1 << p) - 1)).count_ones();
    let sign = if below % 2 == 0 { 1.0 } else { -1.0 };
    Some((sign, n | (1 << p)))
}

/// Dense Hubbard Hamiltonian on the Fock space of `2 * n_site` modes with
/// the on-site term written as U (n_up - 1/2)(n_down - 1/2).
///
/// `edges` lists (i, j) site pairs; a pair may repeat (doubled bond on a
/// two-site periodic ring). Mode ordering: all up modes then all down modes.
pub fn hubbard_fock_matrix(n_site: usize, edges: &[(usize, usize)], t: f64, u: f64) -> DMatrix<f64> {
    let modes = 2 * n_site;
    let dim = 1usize << modes;
    let mut h = DMatrix::<f64>::zeros(dim, dim);
    for n in 0..dim {
        // on-site interaction (diagonal)
        let mut diag = 0.0;
        for site in 0..n_site {
            let up = (n >> site) & 1;
            let down = (n >> (site + n_site)) & 1;
            diag += u * (up as f64 - 0.5) * (down as f64 - 0.5);
        }
        h[(n, n)] += diag;
        // hopping
        for &(i, j) in edges {
            for spin in 0..2 {
                let p = i + spin * n_site;
                let q = j + spin * n_site;
                // -t (c^dag_p c_q + c^dag_q c_p)
                for (a, b) in [(p, q), (q, p)] {
                    if let Some((s1, m)) = annihilate(n, b) {
                        if let Some((s2, m2)) = create(m, a) {
                            h[(m2, n)] += -t * s1 * s2;
                        }
                    }
                }
            }
        }
    }
    h
}

/// Dense matrix of a Pauli-string Hamiltonian given as a list of
/// (coefficient, x_mask, z_mask, phase) terms, each term representing
/// coeff * i^phase * X^x Z^z. Terms must combine to a real symmetric matrix.
pub fn pauli_matrix(n_qubits: usize, terms: &[(f64, usize, usize, u8)]) -> DMatrix<f64> {
    let dim = 1usize << n_qubits;
    let mut h = DMatrix::<Complex64>::zeros(dim, dim);
    for &(coeff, xm, zm, phase) in terms {
        let pref = Complex64::i().powu(phase as u32) * coeff;
        for col in 0..dim {
            let sign = if (zm & col).count_ones() % 2 == 0 {
                1.0
            } else {
                -1.0
            };
            let row = col ^ xm;
            h[(row, col)] += pref * sign;
        }
    }
    let mut real = DMatrix::<f64>::zeros(dim, dim);
    for i in 0..dim {
        for j in 0..dim {
            assert!(
                h[(i, j)].im.abs() < 1e-9,
                "Pauli Hamiltonian matrix is not real"
            );
            real[(i, j)] = h[(i, j)].re;
        }
    }
    real
}

pub fn sorted_eigenvalues(m: &DMatrix<f64>) -> Vec<f64> {
    let eig = SymmetricEigen::new(m.clone());
    let mut vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    vals
}

/// Particle number of each Fock basis state, for sector filtering.
pub fn particle_number(state: usize) -> u32 {
    state.count_ones()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_site_hubbard_ground_state() {
        // Single bond, t=1, U=0: eigenvalues of the hopping matrix are +-1 per
        // spin; the shifted on-site term vanishes. Half-filled ground state
        // energy is -2.
        let h = hubbard_fock_matrix(2, &[(0, 1)], 1.0, 0.0);
        let vals = sorted_eigenvalues(&h);
        assert!((vals[0] + 2.0).abs() < 1e-9);
    }
}
