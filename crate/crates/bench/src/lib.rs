//! Fixtures shared by the criterion benches.

use ts_spectra::{constructive_bound, lift_bound};

/// Evenly spaced targets in `[lo, hi]`, at most `count` of them.
pub fn spread(lo: i64, hi: i64, count: usize) -> Vec<i64> {
    if hi < lo || count == 0 {
        return Vec::new();
    }
    let width = (hi - lo) as usize + 1;
    let step = width.div_ceil(count).max(1);
    (lo..=hi).step_by(step).collect()
}

/// Targets inside the recipe range for `n`.
pub fn constructive_targets(n: i64, count: usize) -> Vec<i64> {
    spread(2, constructive_bound(n), count)
}

/// Targets that need a first-row lift for `n`.
pub fn lift_targets(n: i64, count: usize) -> Vec<i64> {
    spread(constructive_bound(n) + 1, lift_bound(n), count)
}
