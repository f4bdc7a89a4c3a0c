use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{recipe_catalog, ConstructionError, Recipe, RecipeId, Run};
use crate::partition::Composition;
use crate::spectrum::eigenvalue;

/// Why a recipe failed at one parameter point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Failure {
    NegativeMultiplicity { part: i64, count: i64 },
    NonPositivePart { part: i64 },
    SumMismatch { sum: i64 },
    NonMonotone { index: usize },
    TargetMismatch { achieved: i64 },
}

/// One failing parameter point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrataRecord {
    pub recipe: RecipeId,
    pub n: i64,
    pub a: i64,
    pub c: i64,
    pub target: i64,
    pub failure: Failure,
    /// The printed runs at this point.
    pub runs: Vec<Run>,
    /// The expanded row, when it could be formed.
    pub raw: Option<Composition>,
    /// For rows that only fail monotonicity: whether sorting them happens to
    /// reach the target anyway.
    pub sorted_achieves_target: Option<bool>,
}

impl ErrataRecord {
    /// Failures where the row is well typed but leaves its valid region:
    /// non-monotone output or a negative run length. Sum and target
    /// mismatches are not in this class.
    pub fn is_boundary_malformation(&self) -> bool {
        matches!(
            self.failure,
            Failure::NonMonotone { .. } | Failure::NegativeMultiplicity { .. }
        )
    }
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct ErrataSweep {
    pub n_min: i64,
    pub n_max: i64,
    /// Applicable parameter points per recipe.
    pub checked: BTreeMap<RecipeId, u64>,
    pub records: Vec<ErrataRecord>,
}

impl ErrataSweep {
    pub fn failures_by_recipe(&self) -> BTreeMap<RecipeId, usize> {
        let mut out = BTreeMap::new();
        for r in &self.records {
            *out.entry(r.recipe).or_insert(0) += 1;
        }
        out
    }

    /// One JSON object per line.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&serde_json::to_string(r).expect("records serialize"));
            out.push('\n');
        }
        out
    }
}

/// Checks one recipe at one applicable point.
pub fn check_point(recipe: &Recipe, n: i64, a: i64, c: i64) -> Result<(), ErrataRecord> {
    let runs = recipe.runs(n, a, c).unwrap_or_default();
    let target = recipe.target(a, c);
    let record = |failure, raw, sorted| ErrataRecord {
        recipe: recipe.id,
        n,
        a,
        c,
        target,
        failure,
        runs: runs.clone(),
        raw,
        sorted_achieves_target: sorted,
    };
    let raw = match recipe.expand(n, a, c) {
        Ok(raw) => raw,
        Err(ConstructionError::NegativeMultiplicity { part, count, .. }) => {
            return Err(record(
                Failure::NegativeMultiplicity { part, count },
                None,
                None,
            ))
        }
        Err(ConstructionError::NonPositivePart { part, .. }) => {
            return Err(record(Failure::NonPositivePart { part }, None, None))
        }
        Err(e) => unreachable!("applicable point failed parity: {e}"),
    };
    let sum = i64::from(raw.n());
    if sum != n {
        return Err(record(Failure::SumMismatch { sum }, Some(raw), None));
    }
    match raw.to_partition() {
        Ok(p) => {
            let achieved = eigenvalue(&p);
            if achieved != target {
                return Err(record(
                    Failure::TargetMismatch { achieved },
                    Some(raw),
                    None,
                ));
            }
            Ok(())
        }
        Err(_) => {
            let index = raw
                .parts()
                .windows(2)
                .position(|w| w[0] < w[1])
                .expect("non-monotone");
            let sorted = eigenvalue(&raw.sorted()) == target;
            Err(record(
                Failure::NonMonotone { index },
                Some(raw),
                Some(sorted),
            ))
        }
    }
}

/// Runs every recipe over every applicable `(n, a, c)` with
/// `n_min ≤ n ≤ n_max`, `0 ≤ c ≤ a ≤ n`. Records come out sorted by
/// `(n, recipe, a, c)`.
pub fn errata_sweep(n_min: i64, n_max: i64) -> ErrataSweep {
    let per_n: Vec<(BTreeMap<RecipeId, u64>, Vec<ErrataRecord>)> = (n_min.max(1)..=n_max)
        .into_par_iter()
        .map(|n| {
            let mut checked = BTreeMap::new();
            let mut records = Vec::new();
            for recipe in recipe_catalog() {
                for a in 0..=n {
                    for c in 0..=a {
                        if !recipe.is_applicable(n, a, c) {
                            continue;
                        }
                        *checked.entry(recipe.id).or_insert(0) += 1;
                        if let Err(r) = check_point(recipe, n, a, c) {
                            records.push(r);
                        }
                    }
                }
            }
            (checked, records)
        })
        .collect();
    let mut sweep = ErrataSweep {
        n_min,
        n_max,
        ..Default::default()
    };
    for (checked, records) in per_n {
        for (id, k) in checked {
            *sweep.checked.entry(id).or_insert(0) += k;
        }
        sweep.records.extend(records);
    }
    sweep
}
