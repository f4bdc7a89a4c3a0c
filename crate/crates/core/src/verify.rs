//! Sweeps over ranges of `n`, shared by the command line and the acceptance
//! suite.

use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::constructors::{errata_sweep, ErrataRecord, ErrataSweep};
use crate::spectrum::{brute_force, BruteOptions, SpectrumError};
use crate::witness::{coverage_with, witness, CoverageReport, WitnessOptions};
use crate::{constructive_bound, full_interval_bound, lift_bound};

/// Coverage of `[0, C(⌊(n−15)/3⌋,2)]`, or of the symmetric interval when
/// `symmetric`, for every `n` in `range`.
pub fn recipe_interval(
    range: RangeInclusive<i64>,
    symmetric: bool,
    options: &WitnessOptions,
) -> Vec<CoverageReport> {
    range
        .map(|n| {
            let hi = constructive_bound(n);
            let lo = if symmetric { -hi } else { 0 };
            coverage_with(n, lo, hi, options)
        })
        .collect()
}

/// Coverage of `[0, C(⌊n/3⌋,2)]` together with the targets above the recipe
/// range that needed a search.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LiftIntervalReport {
    pub coverage: CoverageReport,
    pub searched_above_recipes: Vec<i64>,
}

impl LiftIntervalReport {
    pub fn passed(&self) -> bool {
        self.coverage.is_complete() && self.searched_above_recipes.is_empty()
    }
}

pub fn lift_interval(
    range: RangeInclusive<i64>,
    options: &WitnessOptions,
) -> Vec<LiftIntervalReport> {
    range
        .map(|n| {
            let coverage = coverage_with(n, 0, lift_bound(n), options);
            let floor = constructive_bound(n);
            let searched_above_recipes = coverage
                .searched()
                .into_iter()
                .filter(|&e| e > floor)
                .collect();
            LiftIntervalReport {
                coverage,
                searched_above_recipes,
            }
        })
        .collect()
}

/// Brute-force check that every integer in `[−C(⌊(2n+1)/3⌋,2), C(⌊(2n+1)/3⌋,2)]`
/// is an eigenvalue.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub n: u32,
    pub bound: i64,
    pub scanned: u64,
    pub missing: Vec<i64>,
}

impl ConjectureReport {
    pub fn passed(&self) -> bool {
        self.missing.is_empty()
    }
}

pub fn conjecture(n: u32, options: &BruteOptions) -> Result<ConjectureReport, SpectrumError> {
    let run = brute_force(n, false, options)?;
    let bound = full_interval_bound(i64::from(n));
    Ok(ConjectureReport {
        n,
        bound,
        scanned: run.scanned,
        missing: run.report.missing_in(-bound, bound),
    })
}

/// Values of `n` in `range` where the single-lift inequalities fail.
pub fn inequality_failures(range: RangeInclusive<i64>) -> Vec<i64> {
    range
        .filter(|&n| !crate::witness::theorem_c_inequalities(n))
        .collect()
}

/// Errata sweep sorted into what the dispatcher can live with and what it
/// cannot.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ErrataVerdict {
    pub sweep: ErrataSweep,
    /// Wrong sums, wrong targets, non-positive parts.
    pub formula_errors: Vec<ErrataRecord>,
    /// Non-monotone rows and negative run lengths whose `(n, target)` still
    /// gets a checked witness from the engine.
    pub routed: Vec<ErrataRecord>,
    /// Boundary failures the engine could not cover.
    pub unrouted: Vec<ErrataRecord>,
}

impl ErrataVerdict {
    pub fn passed(&self) -> bool {
        self.formula_errors.is_empty() && self.unrouted.is_empty()
    }
}

pub fn errata(n_min: i64, n_max: i64) -> ErrataVerdict {
    let sweep = errata_sweep(n_min, n_max);
    let mut formula_errors = Vec::new();
    let mut routed = Vec::new();
    let mut unrouted = Vec::new();
    for r in &sweep.records {
        if !r.is_boundary_malformation() {
            formula_errors.push(r.clone());
        } else if witness(r.n, r.target).is_ok_and(|c| c.check()) {
            routed.push(r.clone());
        } else {
            unrouted.push(r.clone());
        }
    }
    ErrataVerdict {
        sweep,
        formula_errors,
        routed,
        unrouted,
    }
}
