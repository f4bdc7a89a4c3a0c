use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{SpectrumError, SpectrumReport};
use crate::partition::Partition;
use crate::walk::{row_value, walk_all};

/// Default brute-force ceiling; p(85) is about 3·10⁷.
pub const DEFAULT_CEILING: u32 = 85;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruteOptions {
    pub ceiling: u32,
    /// Run even when `n` exceeds `ceiling`.
    pub override_ceiling: bool,
}

impl Default for BruteOptions {
    fn default() -> Self {
        BruteOptions {
            ceiling: DEFAULT_CEILING,
            override_ceiling: false,
        }
    }
}

/// A brute-force spectrum together with the number of partitions scanned.
#[derive(Debug, Clone)]
pub struct BruteForceRun {
    pub report: SpectrumReport,
    pub scanned: u64,
}

/// Distinct eigenvalues over all partitions of `n`. With `with_witnesses`,
/// each value carries the first attaining partition in descending
/// lexicographic order.
pub fn brute_spectrum(
    n: u32,
    with_witnesses: bool,
    options: &BruteOptions,
) -> Result<SpectrumReport, SpectrumError> {
    brute_force(n, with_witnesses, options).map(|run| run.report)
}

/// Same as [`brute_spectrum`], also reporting how many partitions were scanned.
///
/// Work is split by first part and fanned out on the current rayon pool;
/// chunks are merged in enumeration order so the result does not depend on
/// scheduling.
pub fn brute_force(
    n: u32,
    with_witnesses: bool,
    options: &BruteOptions,
) -> Result<BruteForceRun, SpectrumError> {
    if n == 0 {
        return Err(SpectrumError::TooSmall {
            what: "brute_spectrum",
            n,
            min: 1,
        });
    }
    if n > options.ceiling && !options.override_ceiling {
        return Err(SpectrumError::ResourceLimit {
            what: "brute_spectrum",
            n,
            limit: options.ceiling,
        });
    }
    let half = crate::choose2(i64::from(n));
    let width = (2 * half + 1) as usize;

    let chunks: Vec<Chunk> = (1..=n)
        .into_par_iter()
        .map(|k| n + 1 - k)
        .map(|first| scan_chunk(n, first, half, width, with_witnesses))
        .collect();

    let mut seen = vec![false; width];
    let mut witnesses: Vec<Option<Vec<u32>>> = if with_witnesses {
        vec![None; width]
    } else {
        Vec::new()
    };
    let mut scanned = 0;
    // `chunks` runs from first part n down to 1, i.e. enumeration order
    for chunk in chunks {
        scanned += chunk.scanned;
        for (slot, hit) in seen.iter_mut().zip(&chunk.seen) {
            *slot |= *hit;
        }
        for (slot, w) in witnesses.iter_mut().zip(chunk.witnesses) {
            if slot.is_none() {
                *slot = w;
            }
        }
    }

    let values: Vec<i64> = seen
        .iter()
        .enumerate()
        .filter(|(_, s)| **s)
        .map(|(i, _)| i as i64 - half)
        .collect();
    let witnesses = with_witnesses.then(|| {
        witnesses
            .into_iter()
            .enumerate()
            .filter_map(|(i, w)| {
                let parts = w?;
                let p = Partition::new(parts).expect("walker yields partitions");
                Some((i as i64 - half, p))
            })
            .collect::<BTreeMap<_, _>>()
    });
    Ok(BruteForceRun {
        report: SpectrumReport {
            n,
            values,
            multiplicities: None,
            witnesses,
        },
        scanned,
    })
}

struct Chunk {
    seen: Vec<bool>,
    witnesses: Vec<Option<Vec<u32>>>,
    scanned: u64,
}

fn scan_chunk(n: u32, first: u32, half: i64, width: usize, with_witnesses: bool) -> Chunk {
    let mut seen = vec![false; width];
    let mut witnesses: Vec<Option<Vec<u32>>> = if with_witnesses {
        vec![None; width]
    } else {
        Vec::new()
    };
    let mut scanned = 0u64;
    let mut parts = vec![first];
    walk_all(
        &mut parts,
        n - first,
        first,
        2,
        row_value(first, 1),
        &mut |p, v| {
            let idx = (v + half) as usize;
            scanned += 1;
            seen[idx] = true;
            if with_witnesses && witnesses[idx].is_none() {
                witnesses[idx] = Some(p.to_vec());
            }
        },
    );
    Chunk {
        seen,
        witnesses,
        scanned,
    }
}
