//! Depth-first walk over partitions in descending lexicographic order with
//! the eigenvalue accumulated row by row.

use std::ops::ControlFlow;

/// Contribution of a row of length `len` placed as row `row` (1-based).
#[inline]
pub(crate) fn row_value(len: u32, row: u32) -> i64 {
    let len = i64::from(len);
    len * (len - 2 * i64::from(row) + 1) / 2
}

/// Largest total for `rem` boxes in rows `row..` with every row at most `max`.
#[inline]
pub(crate) fn upper_fill(rem: u32, max: u32, row: u32) -> i64 {
    if rem == 0 || max == 0 {
        return 0;
    }
    let (q, s) = (rem / max, rem % max);
    let (m, q64, r) = (i64::from(max), i64::from(q), i64::from(row));
    let full = q64 * m * (m + 1) / 2 - m * (q64 * (2 * r + q64 - 1) / 2);
    full + row_value(s, row + q)
}

/// Smallest total for `rem` boxes in rows `row..`: a single column.
#[inline]
pub(crate) fn lower_fill(rem: u32, row: u32) -> i64 {
    let (k, r) = (i64::from(rem), i64::from(row));
    k - k * (2 * r + k - 1) / 2
}

/// Visits every partition of `rem` with parts at most `max`, appended to
/// `parts` as rows `row..`, calling `leaf` with the full parts and eigenvalue.
pub(crate) fn walk_all<F>(
    parts: &mut Vec<u32>,
    rem: u32,
    max: u32,
    row: u32,
    acc: i64,
    leaf: &mut F,
) where
    F: FnMut(&[u32], i64),
{
    if rem == 0 {
        leaf(parts, acc);
        return;
    }
    for m in (1..=max.min(rem)).rev() {
        parts.push(m);
        walk_all(parts, rem - m, m, row + 1, acc + row_value(m, row), leaf);
        parts.pop();
    }
}

/// Outcome counters for [`search`].
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct SearchStats {
    pub nodes: u64,
}

/// First partition of `n` in descending lexicographic order whose eigenvalue
/// is `target`, skipping subtrees whose value range excludes it. Stops with
/// `Break(None)` once `budget` nodes have been examined.
pub(crate) fn search(
    n: u32,
    target: i64,
    budget: u64,
) -> (ControlFlow<Option<Vec<u32>>>, SearchStats) {
    let mut stats = SearchStats::default();
    let mut parts = Vec::new();
    let flow = search_rec(&mut parts, n, n, 1, 0, target, budget, &mut stats);
    (flow, stats)
}

#[allow(clippy::too_many_arguments)]
fn search_rec(
    parts: &mut Vec<u32>,
    rem: u32,
    max: u32,
    row: u32,
    acc: i64,
    target: i64,
    budget: u64,
    stats: &mut SearchStats,
) -> ControlFlow<Option<Vec<u32>>> {
    if rem == 0 {
        return if acc == target {
            ControlFlow::Break(Some(parts.clone()))
        } else {
            ControlFlow::Continue(())
        };
    }
    for m in (1..=max.min(rem)).rev() {
        let here = acc + row_value(m, row);
        let left = rem - m;
        if target > here + upper_fill(left, m, row + 1) {
            // smaller first parts are dominated, so nothing further can reach
            break;
        }
        if target < here + lower_fill(left, row + 1) {
            continue;
        }
        stats.nodes += 1;
        if stats.nodes > budget {
            return ControlFlow::Break(None);
        }
        parts.push(m);
        let flow = search_rec(parts, left, m, row + 1, here, target, budget, stats);
        parts.pop();
        flow?;
    }
    ControlFlow::Continue(())
}
