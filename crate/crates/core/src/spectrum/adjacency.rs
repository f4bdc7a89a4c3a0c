//! Direct spectrum of `Cay(S_n, T_n)` from its `n! × n!` adjacency matrix.
//!
//! Only meant as an oracle for tiny `n`: the matrix is dense and the
//! eigenvalues come from a floating-point symmetric solver, then get rounded.

use std::collections::BTreeMap;

use nalgebra::DMatrix;

use super::{SpectrumError, SpectrumReport};

/// Maximum distance from an integer accepted when rounding eigenvalues.
pub const ROUNDING_TOLERANCE: f64 = 1e-6;

const MAX_N: u32 = 6;
const MAX_N_WITH_MULTIPLICITIES: u32 = 5;

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<u8>> {
    let mut current: Vec<u8> = (0..n as u8).collect();
    let mut out = vec![current.clone()];
    loop {
        let Some(i) = current.windows(2).rposition(|w| w[0] < w[1]) else {
            return out;
        };
        let j = current
            .iter()
            .rposition(|&x| x > current[i])
            .expect("pivot has a successor");
        current.swap(i, j);
        current[i + 1..].reverse();
        out.push(current.clone());
    }
}

/// Lexicographic rank of a permutation (Lehmer code in factorial base).
pub fn rank(perm: &[u8]) -> usize {
    let n = perm.len();
    let mut r = 0;
    for i in 0..n {
        let smaller_after = perm[i + 1..].iter().filter(|&&x| x < perm[i]).count();
        r = r * (n - i) + smaller_after;
    }
    r
}

/// Adjacency matrix with `f ~ g` iff `f g⁻¹` is a transposition. Swapping two
/// positions of `f` gives `f ∘ (i j)`, whose quotient with `f` is a conjugate
/// of `(i j)` and hence a transposition.
pub fn adjacency_matrix(n: usize) -> DMatrix<f64> {
    let perms = permutations(n);
    let size = perms.len();
    let mut m = DMatrix::zeros(size, size);
    for (u, f) in perms.iter().enumerate() {
        let mut g = f.clone();
        for i in 0..n {
            for j in i + 1..n {
                g.swap(i, j);
                m[(u, rank(&g))] = 1.0;
                g.swap(i, j);
            }
        }
    }
    m
}

/// Eigenvalues of the transposition graph for `2 ≤ n ≤ 6`, rounded to
/// integers. Multiplicities are included for `n ≤ 5`.
pub fn cayley_adjacency_spectrum(n: u32) -> Result<SpectrumReport, SpectrumError> {
    if n < 2 {
        return Err(SpectrumError::TooSmall {
            what: "cayley_adjacency_spectrum",
            n,
            min: 2,
        });
    }
    if n > MAX_N {
        return Err(SpectrumError::ResourceLimit {
            what: "cayley_adjacency_spectrum",
            n,
            limit: MAX_N,
        });
    }
    let eigen = adjacency_matrix(n as usize).symmetric_eigenvalues();
    let mut counts: BTreeMap<i64, u64> = BTreeMap::new();
    for &value in eigen.iter() {
        let nearest = value.round();
        if (value - nearest).abs() > ROUNDING_TOLERANCE {
            return Err(SpectrumError::RoundingFailure { value });
        }
        *counts.entry(nearest as i64).or_insert(0) += 1;
    }
    Ok(SpectrumReport {
        n,
        values: counts.keys().copied().collect(),
        multiplicities: (n <= MAX_N_WITH_MULTIPLICITIES).then_some(counts),
        witnesses: None,
    })
}
