//! Certified witnesses: for `(n, e)`, a partition of `n` with eigenvalue `e`
//! plus a derivation that rebuilds it.
//!
//! Strategies, in the order tried:
//! 1. negative targets are solved for `−e` and conjugated;
//! 2. `e = C(n,2)` is the single row;
//! 3. `e ∈ {2, 3}` use the small-value partitions;
//! 4. `2 ≤ e ≤ C(⌊(n−15)/3⌋,2)` dispatch to a recipe;
//! 5. `n ≥ 76`, `e ≤ C(⌊n/3⌋,2)`: one lift with first row `⌊n/3⌋`;
//! 6. `n ≥ 30`: lifts over other first rows, up to four deep;
//! 7. pruned search.
//!
//! Sub-witnesses under a lift never come from search, so any certificate
//! whose derivation has no `Search` step is fully constructive.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructors::{recipe_catalog, small_value, ConstructionResult, RecipeId};
use crate::partition::Partition;
use crate::spectrum::eigenvalue;
use crate::{choose2, constructive_bound, lift_bound, walk};

/// Default number of search nodes examined before giving up.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Deepest chain of lifts tried in generalized mode.
pub const MAX_LIFTS: u32 = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("no partition of {n} attains {e}")]
    NotFound { n: i64, e: i64, exhausted: bool },
    #[error("no recipe applies to n={n}, e={e}")]
    Unreachable { n: i64, e: i64 },
    #[error("no lift plan for n={n}, e={e}")]
    NoPlanFound { n: i64, e: i64 },
    #[error("first row {first_row} is shorter than the base's first part {base_first}")]
    FirstRowTooSmall { first_row: u32, base_first: u32 },
    #[error("target {e} is outside [-C(n,2), C(n,2)] for n={n}")]
    OutOfRange { n: i64, e: i64 },
    #[error("derivation does not replay: {0}")]
    Replay(String),
}

/// One step of a derivation, applied in order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "lowercase")]
pub enum DerivationStep {
    Recipe { id: RecipeId, a: i64, c: i64 },
    Lift { first_row: u32 },
    Conjugate,
    Search { scanned: u64 },
}

impl DerivationStep {
    pub fn kind(&self) -> &'static str {
        match self {
            DerivationStep::Recipe { .. } => "recipe",
            DerivationStep::Lift { .. } => "lift",
            DerivationStep::Conjugate => "conjugate",
            DerivationStep::Search { .. } => "search",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessCertificate {
    pub n: i64,
    pub target: i64,
    pub partition: Partition,
    pub derivation: Vec<DerivationStep>,
    pub achieved: i64,
    pub verified: bool,
}

impl fmt::Display for WitnessCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let steps: Vec<_> = self.derivation.iter().map(DerivationStep::kind).collect();
        write!(
            f,
            "n={} e={} partition={} eigenvalue={} via {}{}",
            self.n,
            self.target,
            self.partition,
            self.achieved,
            steps.join(" > "),
            if self.verified { "" } else { " (UNVERIFIED)" }
        )
    }
}

impl WitnessCertificate {
    /// Builds a certificate, recomputing the eigenvalue.
    pub fn new(n: i64, target: i64, partition: Partition, derivation: Vec<DerivationStep>) -> Self {
        let achieved = eigenvalue(&partition);
        let verified = achieved == target && i64::from(partition.n()) == n;
        WitnessCertificate {
            n,
            target,
            partition,
            derivation,
            achieved,
            verified,
        }
    }

    pub fn uses_search(&self) -> bool {
        self.derivation
            .iter()
            .any(|s| matches!(s, DerivationStep::Search { .. }))
    }

    /// Step kinds joined by `>`.
    pub fn summary(&self) -> String {
        self.derivation
            .iter()
            .map(DerivationStep::kind)
            .collect::<Vec<_>>()
            .join(">")
    }

    /// Rebuilds the partition from the derivation alone.
    ///
    /// The `(n, e)` seen by each step is recovered by walking back from the
    /// certificate's own `(n, target)`; the steps are then applied forwards.
    pub fn replay(&self) -> Result<Partition, WitnessError> {
        let bad = |msg: String| WitnessError::Replay(msg);
        let (base, rest) = match self.derivation.first() {
            Some(DerivationStep::Lift { .. }) => (None, &self.derivation[..]),
            Some(step) => (Some(step), &self.derivation[1..]),
            None => return Err(bad("empty derivation".into())),
        };
        let (mut n, mut e) = (self.n, self.target);
        for step in rest.iter().rev() {
            match step {
                DerivationStep::Conjugate => e = -e,
                DerivationStep::Lift { first_row } => {
                    let l = i64::from(*first_row);
                    n -= l;
                    e = e - choose2(l) + n;
                }
                other => return Err(bad(format!("{} step after the base", other.kind()))),
            }
        }
        let mut p = match base {
            None if n == 0 && e == 0 => Partition::empty(),
            None => return Err(bad(format!("lift chain leaves n={n}, e={e}"))),
            Some(DerivationStep::Recipe { id, a, c }) => {
                let r = crate::constructors::Recipe::get(*id)
                    .construct(n, *a, *c)
                    .and_then(ConstructionResult::verified)
                    .map_err(|err| bad(err.to_string()))?;
                if r.target != e {
                    return Err(bad(format!(
                        "recipe reaches {} but {e} is needed",
                        r.target
                    )));
                }
                r.partition.expect("verified")
            }
            Some(DerivationStep::Search { .. }) => {
                let n = u32::try_from(n).map_err(|_| bad(format!("search at n={n}")))?;
                search_partition(n, e, u64::MAX)
                    .0
                    .ok_or_else(|| bad(format!("search finds nothing for ({n}, {e})")))?
            }
            Some(_) => unreachable!(),
        };
        for step in rest {
            p = match step {
                DerivationStep::Conjugate => p.conjugate(),
                DerivationStep::Lift { first_row } => lift(&p, *first_row)?,
                _ => unreachable!(),
            };
        }
        Ok(p)
    }

    /// Full check: verified flag honest, eigenvalue recomputed, replay exact.
    pub fn check(&self) -> bool {
        self.verified
            && eigenvalue(&self.partition) == self.target
            && i64::from(self.partition.n()) == self.n
            && self.replay().as_ref() == Ok(&self.partition)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WitnessOptions {
    /// Search nodes examined before `NotFound`.
    pub budget: u64,
}

impl Default for WitnessOptions {
    fn default() -> Self {
        WitnessOptions {
            budget: DEFAULT_BUDGET,
        }
    }
}

/// Prepends `first_row` to `base`.
pub fn lift(base: &Partition, first_row: u32) -> Result<Partition, WitnessError> {
    base.with_first_row(first_row)
        .ok_or(WitnessError::FirstRowTooSmall {
            first_row,
            base_first: base.first(),
        })
}

/// Certificate for `−target` via the conjugate partition.
pub fn negate(cert: &WitnessCertificate) -> WitnessCertificate {
    let mut derivation = cert.derivation.clone();
    derivation.push(DerivationStep::Conjugate);
    WitnessCertificate::new(cert.n, -cert.target, cert.partition.conjugate(), derivation)
}

fn from_recipe(r: ConstructionResult) -> WitnessCertificate {
    let step = DerivationStep::Recipe {
        id: r.recipe,
        a: r.a,
        c: r.c,
    };
    WitnessCertificate::new(
        r.n,
        r.target,
        r.partition.expect("verified result"),
        vec![step],
    )
}

/// Smallest `a` with `C(a,2) ≥ e`.
fn top_index(e: i64) -> i64 {
    let mut a = 2;
    while choose2(a) < e {
        a += 1;
    }
    a
}

/// Picks `a` with `C(a−1,2) < e ≤ C(a,2)`, sets `c = C(a,2) − e`, and takes the
/// first recipe (in catalog order, small-value facts excluded) that verifies.
pub fn constructive_witness(n: i64, e: i64) -> Result<WitnessCertificate, WitnessError> {
    if e < 1 {
        return Err(WitnessError::Unreachable { n, e });
    }
    let a = top_index(e);
    let c = choose2(a) - e;
    recipe_catalog()
        .iter()
        .filter(|r| !is_small(r.id))
        .find_map(|r| {
            r.construct(n, a, c)
                .and_then(ConstructionResult::verified)
                .ok()
        })
        .map(from_recipe)
        .ok_or(WitnessError::Unreachable { n, e })
}

fn is_small(id: RecipeId) -> bool {
    matches!(
        id,
        RecipeId::Small2Odd | RecipeId::Small2Even | RecipeId::Small3Odd | RecipeId::Small3Even
    )
}

fn small_witness(n: i64, e: i64) -> Option<WitnessCertificate> {
    small_value(n, e).ok().map(from_recipe)
}

fn single_row(n: i64) -> WitnessCertificate {
    let row = u32::try_from(n).expect("n fits in u32");
    WitnessCertificate::new(
        n,
        choose2(n),
        Partition::row(row),
        vec![DerivationStep::Lift { first_row: row }],
    )
}

/// Which first rows a lift plan may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LiftMode {
    /// `λ₁ = ⌊n/3⌋` only, one lift.
    Canonical,
    /// `λ₁` from `n − 1` down to `⌈(n−2)/3⌉` (canonical first when
    /// `n ≥ 76`), up to [`MAX_LIFTS`] lifts.
    Generalized,
}

/// Lift plan: choose a first row `λ₁`, find a search-free witness for
/// `(n − λ₁, e − C(λ₁,2) + n − λ₁)`, and prepend the row.
pub fn lift_plan(n: i64, e: i64, mode: LiftMode) -> Result<WitnessCertificate, WitnessError> {
    let mut failed = HashSet::new();
    let found = match mode {
        LiftMode::Canonical => lift_over(n, e, n / 3, 0, &mut failed),
        LiftMode::Generalized => generalized(n, e, MAX_LIFTS, &mut failed),
    };
    found.ok_or(WitnessError::NoPlanFound { n, e })
}

fn lift_candidates(n: i64) -> Vec<i64> {
    let lo = (-(-(n - 2)).div_euclid(3)).max(1);
    let canonical = n / 3;
    let mut out = Vec::new();
    if n >= 76 {
        out.push(canonical);
    }
    out.extend((lo..n).rev().filter(|&l| n < 76 || l != canonical));
    out
}

fn generalized(
    n: i64,
    e: i64,
    lifts: u32,
    failed: &mut HashSet<(i64, i64, u32)>,
) -> Option<WitnessCertificate> {
    if lifts == 0 || failed.contains(&(n, e, lifts)) {
        return None;
    }
    for l in lift_candidates(n) {
        if let Some(cert) = lift_over(n, e, l, lifts - 1, failed) {
            return Some(cert);
        }
    }
    failed.insert((n, e, lifts));
    None
}

fn lift_over(
    n: i64,
    e: i64,
    first_row: i64,
    lifts_left: u32,
    failed: &mut HashSet<(i64, i64, u32)>,
) -> Option<WitnessCertificate> {
    let rest = n - first_row;
    if first_row < 1 || rest < 0 {
        return None;
    }
    let sub_e = e - choose2(first_row) + rest;
    if sub_e.abs() > choose2(rest) {
        return None;
    }
    let sub = search_free(rest, sub_e, lifts_left, failed)?;
    let row = u32::try_from(first_row).ok()?;
    let partition = lift(&sub.partition, row).ok()?;
    let mut derivation = sub.derivation;
    derivation.push(DerivationStep::Lift { first_row: row });
    Some(WitnessCertificate::new(n, e, partition, derivation))
}

/// Witness built from recipes, single rows, conjugation and lifts only.
fn search_free(
    n: i64,
    e: i64,
    lifts_left: u32,
    failed: &mut HashSet<(i64, i64, u32)>,
) -> Option<WitnessCertificate> {
    if n == 0 {
        return (e == 0).then(|| WitnessCertificate::new(0, 0, Partition::empty(), Vec::new()));
    }
    if e < 0 {
        return search_free(n, -e, lifts_left, failed).map(|c| negate(&c));
    }
    if e == choose2(n) {
        return Some(single_row(n));
    }
    if let Some(c) = small_witness(n, e) {
        return Some(c);
    }
    if n >= 15 && (2..=constructive_bound(n)).contains(&e) {
        if let Ok(c) = constructive_witness(n, e) {
            return Some(c);
        }
    }
    generalized(n, e, lifts_left, failed)
}

/// First partition of `n` in descending lexicographic order with eigenvalue
/// `e`, except that `e = 0` at odd `n` returns the self-conjugate hook. The
/// flag is true when the search ran to completion.
fn search_partition(n: u32, e: i64, budget: u64) -> (Option<Partition>, u64, bool) {
    if e == 0 && n % 2 == 1 {
        let mut parts = vec![n.div_ceil(2)];
        parts.extend(std::iter::repeat(1).take((n as usize - 1) / 2));
        return (Some(Partition::new(parts).expect("hook")), 0, true);
    }
    let (flow, stats) = walk::search(n, e, budget);
    match flow {
        ControlFlow::Break(Some(parts)) => (
            Some(Partition::new(parts).expect("search yields partitions")),
            stats.nodes,
            true,
        ),
        ControlFlow::Break(None) => (None, stats.nodes, false),
        ControlFlow::Continue(()) => (None, stats.nodes, true),
    }
}

/// Pruned depth-first search, at most `budget` nodes.
pub fn fallback_search(n: i64, e: i64, budget: u64) -> Result<WitnessCertificate, WitnessError> {
    let size = u32::try_from(n).map_err(|_| WitnessError::OutOfRange { n, e })?;
    if n < 1 || e.abs() > choose2(n) {
        return Err(WitnessError::OutOfRange { n, e });
    }
    match search_partition(size, e, budget) {
        (Some(p), scanned, _) => Ok(WitnessCertificate::new(
            n,
            e,
            p,
            vec![DerivationStep::Search { scanned }],
        )),
        (None, _, exhausted) => Err(WitnessError::NotFound { n, e, exhausted }),
    }
}

/// Witness with the default search budget.
pub fn witness(n: i64, e: i64) -> Result<WitnessCertificate, WitnessError> {
    witness_with(n, e, &WitnessOptions::default())
}

pub fn witness_with(
    n: i64,
    e: i64,
    options: &WitnessOptions,
) -> Result<WitnessCertificate, WitnessError> {
    if n < 1 || n > i64::from(u32::MAX) || e.abs() > choose2(n) {
        return Err(WitnessError::OutOfRange { n, e });
    }
    if e < 0 {
        return witness_with(n, -e, options).map(|c| negate(&c));
    }
    if e == choose2(n) {
        return Ok(single_row(n));
    }
    if e >= 2 {
        if let Some(c) = small_witness(n, e) {
            return Ok(c);
        }
        if n >= 15 && e <= constructive_bound(n) {
            if let Ok(c) = constructive_witness(n, e) {
                return Ok(c);
            }
        }
        if n >= 76 && e <= lift_bound(n) {
            if let Ok(c) = lift_plan(n, e, LiftMode::Canonical) {
                return Ok(c);
            }
        }
        if n >= 30 {
            if let Ok(c) = lift_plan(n, e, LiftMode::Generalized) {
                return Ok(c);
            }
        }
    }
    fallback_search(n, e, options.budget)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverageReport {
    pub n: i64,
    pub interval: (i64, i64),
    pub covered: u64,
    /// Ascending.
    pub missing: Vec<i64>,
    /// Step kinds per covered target, e.g. `recipe>conjugate>lift`.
    pub summary: BTreeMap<i64, String>,
}

impl CoverageReport {
    pub fn is_complete(&self) -> bool {
        self.missing.is_empty()
    }

    /// Covered targets whose derivation includes a search.
    pub fn searched(&self) -> Vec<i64> {
        self.summary
            .iter()
            .filter(|(_, s)| s.contains("search"))
            .map(|(e, _)| *e)
            .collect()
    }
}

/// Runs [`witness`] on every target in `[lo, hi]`. Every returned
/// certificate is re-checked, replay included, before it counts.
pub fn coverage(n: i64, lo: i64, hi: i64) -> CoverageReport {
    coverage_with(n, lo, hi, &WitnessOptions::default())
}

pub fn coverage_with(n: i64, lo: i64, hi: i64, options: &WitnessOptions) -> CoverageReport {
    let results: Vec<(i64, Option<String>)> = (lo..=hi)
        .into_par_iter()
        .map(|e| {
            let ok = witness_with(n, e, options)
                .ok()
                .filter(WitnessCertificate::check);
            (e, ok.map(|c| c.summary()))
        })
        .collect();
    let mut report = CoverageReport {
        n,
        interval: (lo, hi),
        covered: 0,
        missing: Vec::new(),
        summary: BTreeMap::new(),
    };
    for (e, s) in results {
        match s {
            Some(s) => {
                report.covered += 1;
                report.summary.insert(e, s);
            }
            None => report.missing.push(e),
        }
    }
    report
}

/// The two inequalities behind the single-lift argument with
/// `λ₁ = ⌊n/3⌋`, `n′ = n − λ₁`:
/// `−C(⌊(n′−15)/3⌋,2) + C(λ₁,2) − n′ ≤ C(⌊(n−15)/3⌋,2)` and
/// `C(⌊(n′−15)/3⌋,2) + C(λ₁,2) − n′ ≥ C(⌊n/3⌋,2)`.
pub fn theorem_c_inequalities(n: i64) -> bool {
    let l = n / 3;
    let rest = n - l;
    let window = constructive_bound(rest);
    let shift = choose2(l) - rest;
    -window + shift <= constructive_bound(n) && window + shift >= lift_bound(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn with_ones(head: &[u32], k: usize) -> Partition {
        let mut v = head.to_vec();
        v.extend(std::iter::repeat(1).take(k));
        p(&v)
    }

    #[test]
    fn lift_examples() {
        let lifted = lift(&p(&[3, 1]), 4).unwrap();
        assert_eq!(lifted, p(&[4, 3, 1]));
        assert_eq!(eigenvalue(&lifted), 2 + 6 - 4);
        assert_eq!(lift(&Partition::empty(), 6).unwrap(), Partition::row(6));
        assert!(matches!(
            lift(&with_ones(&[25, 3], 2), 17),
            Err(WitnessError::FirstRowTooSmall {
                first_row: 17,
                base_first: 25
            })
        ));
    }

    #[test]
    fn negate_examples() {
        let c = witness(10, 3).unwrap();
        assert_eq!(c.partition, p(&[4, 4, 1, 1]));
        let neg = negate(&c);
        assert_eq!((neg.target, neg.partition.clone()), (-3, p(&[4, 2, 2, 2])));
        assert!(neg.check());
        let zero = witness(15, 0).unwrap();
        assert_eq!(negate(&zero).target, 0);
        assert!(negate(&zero).verified);
        let row = single_row(6);
        assert_eq!(negate(&row).partition, Partition::column(6));
        assert!(negate(&row).check());
    }

    #[test]
    fn constructive_examples() {
        let c = constructive_witness(45, 41).unwrap();
        assert_eq!(
            c.derivation,
            vec![DerivationStep::Recipe {
                id: RecipeId::OddT1Row3,
                a: 10,
                c: 4
            }]
        );
        assert_eq!(c.partition, p(&[10, 10, 8, 6, 4, 3, 2, 1, 1]));
        let c = constructive_witness(51, 51).unwrap();
        assert_eq!(
            c.derivation,
            vec![DerivationStep::Recipe {
                id: RecipeId::EvenSmallA,
                a: 11,
                c: 4
            }]
        );
        assert_eq!(c.partition, with_ones(&[17, 12, 5, 3, 2], 12));
        let c = constructive_witness(27, 8).unwrap();
        assert_eq!(
            c.derivation,
            vec![DerivationStep::Recipe {
                id: RecipeId::EvenMinus2,
                a: 5,
                c: 2
            }]
        );
        assert_eq!(c.partition, p(&[6, 6, 6, 5, 3, 1]));
        assert!(c.check());
    }

    #[test]
    fn lift_plan_examples() {
        let c = lift_plan(76, 300, LiftMode::Canonical).unwrap();
        assert_eq!(c.partition, with_ones(&[25, 17, 12, 5, 3, 2], 12));
        assert_eq!(
            c.derivation.last(),
            Some(&DerivationStep::Lift { first_row: 25 })
        );
        assert!(c.check());
        assert_eq!(witness(76, 300).unwrap(), c);

        let c = lift_plan(76, 190, LiftMode::Canonical).unwrap();
        assert_eq!(190 - choose2(25) + 51, -59);
        assert_eq!(c.summary(), "recipe>conjugate>lift");
        assert_eq!(eigenvalue(&c.partition.tail()), -59);
        assert!(c.check());

        let top = witness(40, choose2(40)).unwrap();
        assert_eq!(top.partition, Partition::row(40));
        assert_eq!(top.derivation, vec![DerivationStep::Lift { first_row: 40 }]);
        assert!(top.check());
    }

    #[test]
    fn search_examples() {
        assert_eq!(
            fallback_search(9, 2, DEFAULT_BUDGET),
            Err(WitnessError::NotFound {
                n: 9,
                e: 2,
                exhausted: true
            })
        );
        assert_eq!(
            witness(9, 2).unwrap_err().to_string(),
            "no partition of 9 attains 2"
        );
        let c = fallback_search(15, 0, DEFAULT_BUDGET).unwrap();
        assert_eq!(c.partition, with_ones(&[8], 7));
        assert!(c.check());
        let c = fallback_search(16, 4, 200).unwrap();
        assert_eq!(c.achieved, 4);
        assert!(c.check());
        assert!(matches!(
            fallback_search(40, 1, 1),
            Err(WitnessError::NotFound {
                exhausted: false,
                ..
            })
        ));
    }

    #[test]
    fn witness_examples() {
        let c = witness(10, -3).unwrap();
        assert_eq!(c.partition, p(&[4, 2, 2, 2]));
        assert!(c.check());
        let c = witness(11, 2).unwrap();
        assert_eq!(c.partition, p(&[4, 4, 2, 1]));
        assert!(matches!(
            witness(5, 11),
            Err(WitnessError::OutOfRange { .. })
        ));
        assert!(witness(0, 0).is_err());
    }

    #[test]
    fn certificate_json() {
        let c = witness(10, -3).unwrap();
        let v = serde_json::to_value(&c).unwrap();
        assert_eq!(
            v,
            serde_json::json!({
                "n": 10, "target": -3, "partition": [4, 2, 2, 2],
                "derivation": [{"step": "recipe", "id": "Small3Even", "a": 3, "c": 0}, {"step": "conjugate"}],
                "achieved": -3, "verified": true
            })
        );
        let back: WitnessCertificate = serde_json::from_value(v).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn tampered_certificates_fail_replay() {
        let mut c = witness(76, 300).unwrap();
        c.derivation.pop();
        assert!(!c.check());
        let mut c = witness(27, 8).unwrap();
        c.partition = p(&[6, 6, 6, 5, 2, 2]);
        assert!(!c.check());
    }

    #[test]
    fn coverage_examples() {
        let r = coverage(27, 0, 6);
        assert_eq!((r.covered, r.missing.clone()), (7, vec![]));
        let r = coverage(9, 2, 2);
        assert_eq!((r.covered, r.missing), (0, vec![2]));
    }

    #[test]
    fn inequalities() {
        assert!(theorem_c_inequalities(76));
        assert_eq!(-66 + 300 - 51, 183);
        assert_eq!(66 + 300 - 51, 315);
        assert!(theorem_c_inequalities(100));
        assert!(theorem_c_inequalities(500));
    }
}
