//! Eigenvalues of `Cay(S_n, T_n)` indexed by partitions.
//!
//! Three independent routes to the same number are kept apart on purpose:
//! the closed row formula [`eigenvalue`], the box-by-box content sum over a
//! [`TableauView`], and the per-diagonal [`arm_leg_decomposition`]. The
//! adjacency-matrix oracle in [`adjacency`] checks all of them against the
//! graph itself for `n ≤ 6`.

pub mod adjacency;
mod brute;
mod tableau;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partition::{enumerate, Partition};

pub use brute::{brute_force, brute_spectrum, BruteForceRun, BruteOptions, DEFAULT_CEILING};
pub use tableau::{arm_leg_decomposition, content_sum, TableauView};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectrumError {
    #[error("{what} is limited to n <= {limit} (got n = {n})")]
    ResourceLimit {
        what: &'static str,
        n: u32,
        limit: u32,
    },
    #[error("{what} requires n >= {min} (got n = {n})")]
    TooSmall {
        what: &'static str,
        n: u32,
        min: u32,
    },
    #[error("eigenvalue {value} is not within 1e-6 of an integer")]
    RoundingFailure { value: f64 },
}

/// `ρ_λ = Σᵢ λᵢ(λᵢ − 2i + 1) / 2`.
pub fn eigenvalue(p: &Partition) -> i64 {
    p.parts()
        .iter()
        .zip(1i64..)
        .map(|(&len, i)| {
            let len = i64::from(len);
            len * (len - 2 * i + 1) / 2
        })
        .sum()
}

/// Checks `ρ_λ = ρ_{λ'} + C(λ₁, 2) − (n − λ₁)` where `λ'` drops the first row.
pub fn lift_identity_check(p: &Partition) -> bool {
    let first = i64::from(p.first());
    let rest = i64::from(p.n()) - first;
    eigenvalue(p) == eigenvalue(&p.tail()) + crate::choose2(first) - rest
}

/// Number of standard Young tableaux of shape `p`, by the hook-length formula.
pub fn hook_dimension(p: &Partition) -> Result<u64, SpectrumError> {
    const LIMIT: u32 = 20;
    if p.n() > LIMIT {
        return Err(SpectrumError::ResourceLimit {
            what: "hook_dimension",
            n: p.n(),
            limit: LIMIT,
        });
    }
    let cols = p.conjugate();
    let mut hooks: u128 = 1;
    for (i, &row) in p.parts().iter().enumerate() {
        for j in 0..row as usize {
            let arm = row as usize - j - 1;
            let leg = cols.parts()[j] as usize - i - 1;
            hooks *= (arm + leg + 1) as u128;
        }
    }
    let factorial: u128 = (1..=u128::from(p.n())).product();
    Ok((factorial / hooks) as u64)
}

/// Distinct eigenvalues of `S_n` with total multiplicities `Σ (f^λ)²`.
pub fn spectrum_with_multiplicity(n: u32) -> Result<SpectrumReport, SpectrumError> {
    const LIMIT: u32 = 12;
    if n > LIMIT {
        return Err(SpectrumError::ResourceLimit {
            what: "spectrum_with_multiplicity",
            n,
            limit: LIMIT,
        });
    }
    if n == 0 {
        return Err(SpectrumError::TooSmall {
            what: "spectrum_with_multiplicity",
            n,
            min: 1,
        });
    }
    let mut mult = BTreeMap::new();
    for p in enumerate(n) {
        let dim = hook_dimension(&p)?;
        *mult.entry(eigenvalue(&p)).or_insert(0u64) += dim * dim;
    }
    Ok(SpectrumReport {
        n,
        values: mult.keys().copied().collect(),
        multiplicities: Some(mult),
        witnesses: None,
    })
}

/// Distinct eigenvalues for one `n`, optionally with multiplicities and one
/// attaining partition per value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub n: u32,
    pub values: Vec<i64>,
    pub multiplicities: Option<BTreeMap<i64, u64>>,
    pub witnesses: Option<BTreeMap<i64, Partition>>,
}

impl SpectrumReport {
    pub fn contains(&self, value: i64) -> bool {
        self.values.binary_search(&value).is_ok()
    }

    /// Integers in `[lo, hi]` that are not eigenvalues.
    pub fn missing_in(&self, lo: i64, hi: i64) -> Vec<i64> {
        (lo..=hi).filter(|v| !self.contains(*v)).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.values
            .iter()
            .zip(self.values.iter().rev())
            .all(|(a, b)| *a == -*b)
    }

    pub fn total_multiplicity(&self) -> Option<u64> {
        self.multiplicities.as_ref().map(|m| m.values().sum())
    }

    /// One row per value: `value,multiplicity,witness` with empty cells for
    /// absent columns and witness parts separated by spaces.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("value,multiplicity,witness\n");
        for v in &self.values {
            let mult = self
                .multiplicities
                .as_ref()
                .and_then(|m| m.get(v))
                .map(u64::to_string)
                .unwrap_or_default();
            let wit = self
                .witnesses
                .as_ref()
                .and_then(|w| w.get(v))
                .map(|p| {
                    p.parts()
                        .iter()
                        .map(u32::to_string)
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .unwrap_or_default();
            let _ = writeln!(out, "{v},{mult},{wit}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn eigenvalue_examples() {
        assert_eq!(eigenvalue(&p(&[4, 3, 1])), 4);
        assert_eq!(eigenvalue(&Partition::row(6)), 15);
        assert_eq!(eigenvalue(&p(&[2, 1])), 0);
        assert_eq!(eigenvalue(&p(&[4, 4, 2, 1])), 2);
        assert_eq!(eigenvalue(&Partition::column(6)), -15);
    }

    #[test]
    fn lift_identity_examples() {
        assert!(lift_identity_check(&p(&[4, 3, 1])));
        assert_eq!(eigenvalue(&p(&[3, 1])) + 6 - 4, 4);
        assert!(lift_identity_check(&Partition::row(9)));
        assert!(enumerate(12).all(|q| lift_identity_check(&q)));
    }

    #[test]
    fn hook_dimension_examples() {
        assert_eq!(hook_dimension(&Partition::row(8)).unwrap(), 1);
        assert_eq!(hook_dimension(&p(&[2, 1])).unwrap(), 2);
        let squares: u64 = enumerate(4)
            .map(|q| hook_dimension(&q).unwrap().pow(2))
            .sum();
        assert_eq!(squares, 24);
        assert_eq!(hook_dimension(&p(&[3, 2])).unwrap(), 5);
        assert!(matches!(
            hook_dimension(&Partition::row(21)),
            Err(SpectrumError::ResourceLimit { .. })
        ));
        // the largest shape at the limit still fits
        assert_eq!(hook_dimension(&Partition::row(20)).unwrap(), 1);
    }

    #[test]
    fn multiplicity_examples() {
        let two = spectrum_with_multiplicity(2).unwrap();
        assert_eq!(
            two.multiplicities.unwrap(),
            BTreeMap::from([(-1, 1), (1, 1)])
        );
        let three = spectrum_with_multiplicity(3).unwrap();
        assert_eq!(
            three.multiplicities.unwrap(),
            BTreeMap::from([(-3, 1), (0, 4), (3, 1)])
        );
        assert_eq!(
            spectrum_with_multiplicity(4).unwrap().total_multiplicity(),
            Some(24)
        );
        assert!(spectrum_with_multiplicity(13).is_err());
    }

    #[test]
    fn squared_dimensions_sum_to_factorial() {
        for n in 1..=12u32 {
            let total = spectrum_with_multiplicity(n)
                .unwrap()
                .total_multiplicity()
                .unwrap();
            assert_eq!(total, (1..=u64::from(n)).product::<u64>(), "n = {n}");
        }
    }

    #[test]
    fn report_json_and_csv() {
        let r = spectrum_with_multiplicity(3).unwrap();
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"n":3,"values":[-3,0,3],"multiplicities":{"-3":1,"0":4,"3":1},"witnesses":null}"#
        );
        assert_eq!(
            r.to_csv(),
            "value,multiplicity,witness\n-3,1,\n0,4,\n3,1,\n"
        );
        assert!(r.is_symmetric());
        assert_eq!(r.missing_in(-1, 1), vec![-1, 1]);
    }
}
