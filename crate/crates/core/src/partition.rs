//! Integer partitions: validation, multiplicity notation, conjugation,
//! enumeration in descending lexicographic order, and the partition number.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("part {value} at index {index} is not positive")]
    NonPositivePart { index: usize, value: i64 },
    #[error("parts are not weakly decreasing at index {index}")]
    NotMonotone { index: usize },
    #[error("part {value} at index {index} does not fit in 32 bits")]
    PartTooLarge { index: usize, value: i64 },
    #[error("invalid multiplicity spec at entry {index}: {reason}")]
    InvalidSpec { index: usize, reason: &'static str },
}

/// A weakly decreasing sequence of positive parts. The empty partition is the
/// unique partition of zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<u32>", try_from = "Vec<i64>")]
pub struct Partition {
    parts: Vec<u32>,
    n: u32,
}

/// Validates an arbitrary integer sequence as a partition.
///
/// `NotMonotone` carries the index `i` of the first pair with
/// `seq[i] < seq[i + 1]`.
pub fn validate(seq: &[i64]) -> Result<Partition, PartitionError> {
    let mut parts = Vec::with_capacity(seq.len());
    for (index, &value) in seq.iter().enumerate() {
        if value <= 0 {
            return Err(PartitionError::NonPositivePart { index, value });
        }
        let part =
            u32::try_from(value).map_err(|_| PartitionError::PartTooLarge { index, value })?;
        parts.push(part);
    }
    Partition::new(parts)
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if let Some(index) = parts.iter().position(|&p| p == 0) {
            return Err(PartitionError::NonPositivePart { index, value: 0 });
        }
        if let Some(index) = first_ascent(&parts) {
            return Err(PartitionError::NotMonotone { index });
        }
        let n = parts.iter().sum();
        Ok(Partition { parts, n })
    }

    pub fn empty() -> Self {
        Partition {
            parts: Vec::new(),
            n: 0,
        }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            return Self::empty();
        }
        Partition { parts: vec![n], n }
    }

    /// The one-column partition `(1 × n)`.
    pub fn column(n: u32) -> Self {
        Partition {
            parts: vec![1; n as usize],
            n,
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, or 0 for the empty partition.
    pub fn first(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// The partition with its first row removed.
    pub fn tail(&self) -> Partition {
        let parts = self.parts.get(1..).unwrap_or_default().to_vec();
        Partition {
            n: self.n - self.first(),
            parts,
        }
    }

    /// Prepends a row; returns `None` if `row` is smaller than the current
    /// first part or zero.
    pub fn with_first_row(&self, row: u32) -> Option<Partition> {
        if row == 0 || row < self.first() {
            return None;
        }
        let mut parts = Vec::with_capacity(self.parts.len() + 1);
        parts.push(row);
        parts.extend_from_slice(&self.parts);
        Some(Partition {
            parts,
            n: self.n + row,
        })
    }

    /// Column lengths of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.first() as usize;
        let mut cols = vec![0u32; width];
        for &p in &self.parts {
            for c in cols.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition {
            parts: cols,
            n: self.n,
        }
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }

    /// Run-length form `(μ₁ × t₁, …, μᵣ × tᵣ)`.
    pub fn multiplicities(&self) -> MultiplicitySpec {
        let mut entries: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match entries.last_mut() {
                Some((part, count)) if *part == p => *count += 1,
                _ => entries.push((p, 1)),
            }
        }
        MultiplicitySpec { entries }
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{:?}", self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = PartitionError;

    fn try_from(seq: Vec<i64>) -> Result<Self, Self::Error> {
        validate(&seq)
    }
}

fn first_ascent(parts: &[u32]) -> Option<usize> {
    parts.windows(2).position(|w| w[0] < w[1])
}

/// Partition written as `(part, count)` runs with strictly decreasing parts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "Vec<(u32, u32)>", try_from = "Vec<(u32, u32)>")]
pub struct MultiplicitySpec {
    entries: Vec<(u32, u32)>,
}

impl MultiplicitySpec {
    pub fn new(entries: Vec<(u32, u32)>) -> Result<Self, PartitionError> {
        for (index, &(part, count)) in entries.iter().enumerate() {
            if part == 0 {
                return Err(PartitionError::InvalidSpec {
                    index,
                    reason: "zero part",
                });
            }
            if count == 0 {
                return Err(PartitionError::InvalidSpec {
                    index,
                    reason: "zero count",
                });
            }
            if index > 0 && entries[index - 1].0 <= part {
                return Err(PartitionError::InvalidSpec {
                    index,
                    reason: "parts not strictly decreasing",
                });
            }
        }
        Ok(MultiplicitySpec { entries })
    }

    pub fn entries(&self) -> &[(u32, u32)] {
        &self.entries
    }

    pub fn expand(&self) -> Partition {
        let parts: Vec<u32> = self
            .entries
            .iter()
            .flat_map(|&(part, count)| std::iter::repeat(part).take(count as usize))
            .collect();
        let n = parts.iter().sum();
        Partition { parts, n }
    }
}

impl From<MultiplicitySpec> for Vec<(u32, u32)> {
    fn from(spec: MultiplicitySpec) -> Self {
        spec.entries
    }
}

impl TryFrom<Vec<(u32, u32)>> for MultiplicitySpec {
    type Error = PartitionError;

    fn try_from(entries: Vec<(u32, u32)>) -> Result<Self, Self::Error> {
        MultiplicitySpec::new(entries)
    }
}

pub fn from_multiplicity_spec(spec: &MultiplicitySpec) -> Partition {
    spec.expand()
}

/// A sequence of positive parts in any order. Table rows are built as
/// compositions first because some of them fail to be weakly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "Vec<u32>", try_from = "Vec<u32>")]
pub struct Composition {
    parts: Vec<u32>,
    n: u32,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if let Some(index) = parts.iter().position(|&p| p == 0) {
            return Err(PartitionError::NonPositivePart { index, value: 0 });
        }
        let n = parts.iter().sum();
        Ok(Composition { parts, n })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn is_monotone(&self) -> bool {
        first_ascent(&self.parts).is_none()
    }

    pub fn to_partition(&self) -> Result<Partition, PartitionError> {
        match first_ascent(&self.parts) {
            Some(index) => Err(PartitionError::NotMonotone { index }),
            None => Ok(Partition {
                parts: self.parts.clone(),
                n: self.n,
            }),
        }
    }

    /// Sorts the parts into a partition of the same size.
    pub fn sorted(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts, n: self.n }
    }
}

impl From<Composition> for Vec<u32> {
    fn from(c: Composition) -> Self {
        c.parts
    }
}

impl TryFrom<Vec<u32>> for Composition {
    type Error = PartitionError;

    fn try_from(parts: Vec<u32>) -> Result<Self, Self::Error> {
        Composition::new(parts)
    }
}

/// Every partition of `n`, each once, in descending lexicographic order:
/// `(n)` first, `(1 × n)` last.
pub fn enumerate(n: u32) -> Partitions {
    Partitions {
        current: None,
        n,
        done: false,
    }
}

/// Streaming iterator returned by [`enumerate`].
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<u32>>,
    n: u32,
    done: bool,
}

impl Partitions {
    /// Advances to the next partition and returns its parts without
    /// allocating a new `Partition`.
    pub fn advance(&mut self) -> Option<&[u32]> {
        if self.done {
            return None;
        }
        match self.current.as_mut() {
            None => {
                self.current = Some(if self.n == 0 {
                    Vec::new()
                } else {
                    vec![self.n]
                });
            }
            Some(parts) => {
                let Some(k) = parts.iter().rposition(|&p| p > 1) else {
                    self.done = true;
                    return None;
                };
                let ones = (parts.len() - k - 1) as u32;
                let v = parts[k] - 1;
                parts.truncate(k);
                parts.push(v);
                let mut rem = ones + 1;
                while rem > 0 {
                    let x = rem.min(v);
                    parts.push(x);
                    rem -= x;
                }
            }
        }
        self.current.as_deref()
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let n = self.n;
        self.advance().map(|parts| Partition {
            parts: parts.to_vec(),
            n,
        })
    }
}

/// p(n) by Euler's pentagonal-number recurrence. Exact for n up to ~1400.
pub fn partition_count(n: u32) -> u128 {
    let n = n as usize;
    let mut table = vec![0i128; n + 1];
    table[0] = 1;
    for i in 1..=n {
        let mut sum = 0i128;
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            let term = table[i - g1]
                + if k * (3 * k + 1) / 2 <= i {
                    table[i - k * (3 * k + 1) / 2]
                } else {
                    0
                };
            if k % 2 == 1 {
                sum += term;
            } else {
                sum -= term;
            }
        }
        table[i] = sum;
    }
    table[n] as u128
}
