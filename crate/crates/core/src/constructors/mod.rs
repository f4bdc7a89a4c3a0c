//! Explicit partition families realising `C(a,2) − c` as an eigenvalue.
//!
//! Each [`Recipe`] is one lemma or one table row. Rows are written exactly as
//! printed in run-length form `(part, count)`, expanded into a
//! [`Composition`] with zero-count runs dropped, and only then validated: a
//! row can fail to be weakly decreasing (or even well formed) at the edge of
//! its stated range, so nothing here is trusted until it has been checked.
//!
//! Parameters are always `(n, a, c)` with target `C(a,2) − c`. The lemmas
//! that are stated in terms of `b` (the small-`a` families) take `c = b`; the
//! small-value facts for eigenvalues 2 and 3 are indexed as `a = 3`,
//! `c = 3 − e`.
//!
//! Two auxiliary quantities appear in the tables:
//! `b = (n − 3a − 1)/2` when `n − a` is odd and `b = (n − 3a + 2)/2` when
//! `n − a` is even.
//!
//! The even-case partition offered for eigenvalue 4 with `a = 4` does not
//! sum to `n` as printed, so it has no recipe; the witness engine covers that
//! cell by other means.

mod sweep;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::choose2;
use crate::partition::{Composition, Partition};
use crate::spectrum::eigenvalue;

pub use sweep::{check_point, errata_sweep, ErrataRecord, ErrataSweep, Failure};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RecipeId {
    OddTop,
    OddMinus1,
    OddSmallA,
    OddT1Row1,
    OddT1Row2,
    OddT1Row3,
    OddT1Row4,
    OddT1Row5,
    OddT1Row6,
    OddT1Row7,
    OddT2Row1,
    OddT2Row2,
    EvenTop,
    EvenMinus1,
    EvenMinus2,
    EvenMinus3,
    EvenSmallA,
    EvenT3Row1,
    EvenT3Row2,
    EvenT3Row3,
    EvenT3Row4,
    EvenT3Row5,
    EvenT4Row1,
    EvenT4Row2,
    Small2Odd,
    Small2Even,
    Small3Odd,
    Small3Even,
}

impl fmt::Display for RecipeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Which parity a recipe's half-integer parameters require.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    /// `n − a` odd.
    Odd,
    /// `n − a` even.
    Even,
    /// `n` odd (small-value facts).
    NOdd,
    /// `n` even (small-value facts).
    NEven,
}

impl Parity {
    fn holds(self, n: i64, a: i64) -> bool {
        match self {
            Parity::Odd => (n - a).rem_euclid(2) == 1,
            Parity::Even => (n - a).rem_euclid(2) == 0,
            Parity::NOdd => n.rem_euclid(2) == 1,
            Parity::NEven => n.rem_euclid(2) == 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{recipe} is not applicable at n={n}, a={a}, c={c}")]
    OutOfRange {
        recipe: RecipeId,
        n: i64,
        a: i64,
        c: i64,
    },
    #[error("{recipe} needs different parity at n={n}, a={a}")]
    ParityMismatch { recipe: RecipeId, n: i64, a: i64 },
    #[error(
        "{recipe} at n={n}, a={a}, c={c} repeats part {part} a negative number of times ({count})"
    )]
    NegativeMultiplicity {
        recipe: RecipeId,
        n: i64,
        a: i64,
        c: i64,
        part: i64,
        count: i64,
    },
    #[error("{recipe} at n={n}, a={a}, c={c} produces non-positive part {part}")]
    NonPositivePart {
        recipe: RecipeId,
        n: i64,
        a: i64,
        c: i64,
        part: i64,
    },
    #[error("{recipe} at n={n}, a={a}, c={c} has parts summing to {sum}")]
    SumMismatch {
        recipe: RecipeId,
        n: i64,
        a: i64,
        c: i64,
        sum: i64,
    },
    #[error("{recipe} at n={n}, a={a}, c={c} is not weakly decreasing at index {index}")]
    NonMonotoneOutput {
        recipe: RecipeId,
        n: i64,
        a: i64,
        c: i64,
        raw: Composition,
        index: usize,
    },
    #[error("{recipe} at n={n}, a={a}, c={c} reaches {achieved} instead of {target}")]
    TargetMismatch {
        recipe: RecipeId,
        n: i64,
        a: i64,
        c: i64,
        target: i64,
        achieved: i64,
    },
    #[error("no eigenvalue-{e} construction for n={n}")]
    NoSmallValue { n: i64, e: i64 },
}

/// One run `(part, count)` of a row as printed.
pub type Run = (i64, i64);

/// A single lemma or table row.
pub struct Recipe {
    pub id: RecipeId,
    /// The row in multiplicity notation.
    pub formula: &'static str,
    pub parity: Parity,
    applies: fn(i64, i64, i64) -> bool,
    runs: fn(i64, i64, i64) -> Vec<Run>,
}

impl fmt::Debug for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Recipe")
            .field("id", &self.id)
            .field("formula", &self.formula)
            .finish()
    }
}

/// Result of running a recipe at one parameter point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionResult {
    pub recipe: RecipeId,
    pub n: i64,
    pub a: i64,
    pub c: i64,
    /// The row exactly as written, with zero-count runs dropped.
    pub raw: Composition,
    /// `raw` as a partition when it is weakly decreasing.
    pub partition: Option<Partition>,
    pub target: i64,
    pub achieved: Option<i64>,
}

impl ConstructionResult {
    /// Rejects results whose parts do not sum to `n`, are not monotone, or
    /// miss the target.
    pub fn verified(self) -> Result<Self, ConstructionError> {
        let ConstructionResult {
            recipe, n, a, c, ..
        } = self;
        let sum = i64::from(self.raw.n());
        if sum != n {
            return Err(ConstructionError::SumMismatch {
                recipe,
                n,
                a,
                c,
                sum,
            });
        }
        let Some(achieved) = self.achieved else {
            let index = self
                .raw
                .parts()
                .windows(2)
                .position(|w| w[0] < w[1])
                .unwrap_or(0);
            return Err(ConstructionError::NonMonotoneOutput {
                recipe,
                n,
                a,
                c,
                raw: self.raw,
                index,
            });
        };
        if achieved != self.target {
            return Err(ConstructionError::TargetMismatch {
                recipe,
                n,
                a,
                c,
                target: self.target,
                achieved,
            });
        }
        Ok(self)
    }
}

/// `C(a,2) − c`.
pub fn target(a: i64, c: i64) -> i64 {
    choose2(a) - c
}

impl Recipe {
    pub fn get(id: RecipeId) -> &'static Recipe {
        &CATALOG[id as usize]
    }

    pub fn target(&self, a: i64, c: i64) -> i64 {
        target(a, c)
    }

    /// Whether `(n, a, c)` lies in the stated range of this lemma or row.
    pub fn is_applicable(&self, n: i64, a: i64, c: i64) -> bool {
        self.parity.holds(n, a) && (self.applies)(n, a, c)
    }

    /// The printed runs at `(n, a, c)`. Only the parity is checked, so rows can
    /// be evaluated outside their stated range.
    pub fn runs(&self, n: i64, a: i64, c: i64) -> Result<Vec<Run>, ConstructionError> {
        if !self.parity.holds(n, a) {
            return Err(ConstructionError::ParityMismatch {
                recipe: self.id,
                n,
                a,
            });
        }
        Ok((self.runs)(n, a, c))
    }

    /// Expands the printed row into a composition, dropping zero-count runs.
    /// No range check beyond parity.
    pub fn expand(&self, n: i64, a: i64, c: i64) -> Result<Composition, ConstructionError> {
        let recipe = self.id;
        let mut parts = Vec::new();
        for (part, count) in self.runs(n, a, c)? {
            if count < 0 {
                return Err(ConstructionError::NegativeMultiplicity {
                    recipe,
                    n,
                    a,
                    c,
                    part,
                    count,
                });
            }
            if count == 0 {
                continue;
            }
            if part <= 0 {
                return Err(ConstructionError::NonPositivePart {
                    recipe,
                    n,
                    a,
                    c,
                    part,
                });
            }
            let part = u32::try_from(part).map_err(|_| ConstructionError::NonPositivePart {
                recipe,
                n,
                a,
                c,
                part,
            })?;
            parts.extend(std::iter::repeat(part).take(count as usize));
        }
        Ok(Composition::new(parts).expect("parts are positive"))
    }

    /// Range-checked construction. The result is returned even when the row
    /// is not monotone or misses the target; call
    /// [`ConstructionResult::verified`] to insist on a valid witness.
    pub fn construct(
        &self,
        n: i64,
        a: i64,
        c: i64,
    ) -> Result<ConstructionResult, ConstructionError> {
        if !self.is_applicable(n, a, c) {
            return Err(ConstructionError::OutOfRange {
                recipe: self.id,
                n,
                a,
                c,
            });
        }
        self.evaluate(n, a, c)
    }

    /// Expands and evaluates without the range check.
    pub fn evaluate(
        &self,
        n: i64,
        a: i64,
        c: i64,
    ) -> Result<ConstructionResult, ConstructionError> {
        let raw = self.expand(n, a, c)?;
        let partition = raw.to_partition().ok();
        let achieved = partition.as_ref().map(eigenvalue);
        Ok(ConstructionResult {
            recipe: self.id,
            n,
            a,
            c,
            raw,
            partition,
            target: target(a, c),
            achieved,
        })
    }
}

/// All recipes, in id order. Earlier entries win ties.
pub fn recipe_catalog() -> &'static [Recipe] {
    &CATALOG
}

/// Recipes whose stated range contains `(n, a, c)`, in catalog order.
pub fn applicable(n: i64, a: i64, c: i64) -> impl Iterator<Item = &'static Recipe> {
    CATALOG.iter().filter(move |r| r.is_applicable(n, a, c))
}

fn half(x: i64) -> i64 {
    debug_assert!(x % 2 == 0, "odd numerator {x}");
    x / 2
}

fn floor_div(x: i64, d: i64) -> i64 {
    x.div_euclid(d)
}

fn ceil_div(x: i64, d: i64) -> i64 {
    -(-x).div_euclid(d)
}

/// `b` for `n − a` odd.
pub fn odd_b(n: i64, a: i64) -> i64 {
    half(n - 3 * a - 1)
}

/// `b` for `n − a` even.
pub fn even_b(n: i64, a: i64) -> i64 {
    half(n - 3 * a + 2)
}

fn table1_range(n: i64, a: i64, c: i64) -> bool {
    n >= 45
        && ceil_div(n + 3, 5) <= a
        && a <= floor_div(n - 15, 3)
        && (2..=odd_b(n, a) + 1).contains(&c)
}

fn table2_range(n: i64, a: i64, c: i64) -> bool {
    n >= 45
        && ceil_div(n + 7, 5) <= a
        && a <= floor_div(n - 11, 3)
        && (odd_b(n, a) + 2..=a - 2).contains(&c)
}

fn table3_range(n: i64, a: i64, c: i64) -> bool {
    n >= 45
        && ceil_div(n + 4, 5) <= a
        && a <= floor_div(n - 15, 3)
        && (2..=even_b(n, a) + 1).contains(&c)
}

fn table4_range(n: i64, a: i64, c: i64) -> bool {
    n >= 45
        && ceil_div(n + 10, 5) <= a
        && a <= floor_div(n - 2, 3)
        && (even_b(n, a) + 2..=a - 2).contains(&c)
}

static CATALOG: [Recipe; 28] = [
    // odd case, n − a odd
    Recipe {
        id: RecipeId::OddTop,
        formula: "(½(n−a+1), a+1, 1×½(n−a−3))",
        parity: Parity::Odd,
        applies: |n, a, c| c == 0 && n >= 7 && (2..=floor_div(n - 1, 3)).contains(&a),
        runs: |n, a, _| vec![(half(n - a + 1), 1), (a + 1, 1), (1, half(n - a - 3))],
    },
    Recipe {
        id: RecipeId::OddMinus1,
        formula: "(½(n−a−1), a+1, 3, 1×½(n−a−7))",
        parity: Parity::Odd,
        applies: |n, a, c| c == 1 && n >= 9 && (2..=floor_div(n - 1, 3)).contains(&a),
        runs: |n, a, _| {
            vec![
                (half(n - a - 1), 1),
                (a + 1, 1),
                (3, 1),
                (1, half(n - a - 7)),
            ]
        },
    },
    Recipe {
        id: RecipeId::OddSmallA,
        formula: "(½(n−a+1−2b), a+1, b+2, 2×(b−1), 1×½(n−a−3−4b))",
        parity: Parity::Odd,
        applies: |n, a, b| {
            n >= 17 && (4..=floor_div(n + 3, 5)).contains(&a) && (2..=a - 2).contains(&b)
        },
        runs: |n, a, b| {
            vec![
                (half(n - a + 1 - 2 * b), 1),
                (a + 1, 1),
                (b + 2, 1),
                (2, b - 1),
                (1, half(n - a - 3 - 4 * b)),
            ]
        },
    },
    Recipe {
        id: RecipeId::OddT1Row1,
        formula: "(a, a−1, b, 7, 6, 4, 2×(b−7), 1×(a−b−1))",
        parity: Parity::Odd,
        applies: |n, a, c| table1_range(n, a, c) && c == 2,
        runs: |n, a, _| {
            let b = odd_b(n, a);
            vec![
                (a, 1),
                (a - 1, 1),
                (b, 1),
                (7, 1),
                (6, 1),
                (4, 1),
                (2, b - 7),
                (1, a - b - 1),
            ]
        },
    },
    Recipe {
        id: RecipeId::OddT1Row2,
        formula: "(a×2, b, 6×2, 3, 2×(b−7), 1×(a−b))",
        parity: Parity::Odd,
        applies: |n, a, c| table1_range(n, a, c) && c == 3,
        runs: |n, a, _| {
            let b = odd_b(n, a);
            vec![(a, 2), (b, 1), (6, 2), (3, 1), (2, b - 7), (1, a - b)]
        },
    },
    Recipe {
        id: RecipeId::OddT1Row3,
        formula: "(a×2, b−c+5, 2+c, 4, 3×(c−3), 2×(b+2−2c), 1×(a−b+c−5))",
        parity: Parity::Odd,
        applies: |n, a, c| table1_range(n, a, c) && (4..=ceil_div(odd_b(n, a), 2)).contains(&c),
        runs: |n, a, c| {
            let b = odd_b(n, a);
            vec![
                (a, 2),
                (b - c + 5, 1),
                (2 + c, 1),
                (4, 1),
                (3, c - 3),
                (2, b + 2 - 2 * c),
                (1, a - b + c - 5),
            ]
        },
    },
    Recipe {
        id: RecipeId::OddT1Row4,
        formula: "(a×2, c+2, b−c+4, 6, 3×(b−c−2), 2×(2c−b−1), 1×(a−c−3))",
        parity: Parity::Odd,
        applies: |n, a, c| {
            let b = odd_b(n, a);
            table1_range(n, a, c) && (ceil_div(b, 2) + 1..=b - 2).contains(&c)
        },
        runs: |n, a, c| {
            let b = odd_b(n, a);
            vec![
                (a, 2),
                (c + 2, 1),
                (b - c + 4, 1),
                (6, 1),
                (3, b - c - 2),
                (2, 2 * c - b - 1),
                (1, a - c - 3),
            ]
        },
    },
    Recipe {
        id: RecipeId::OddT1Row5,
        formula: "(a×2, b, 7, 4, 3, 2×(b−6), 1×(a−b−1))",
        parity: Parity::Odd,
        applies: |n, a, c| table1_range(n, a, c) && c == odd_b(n, a) - 1,
        runs: |n, a, _| {
            let b = odd_b(n, a);
            vec![
                (a, 2),
                (b, 1),
                (7, 1),
                (4, 1),
                (3, 1),
                (2, b - 6),
                (1, a - b - 1),
            ]
        },
    },
    Recipe {
        id: RecipeId::OddT1Row6,
        formula: "(a×2, b+1, 6, 4, 2×(b−4), 1×(a−b−2))",
        parity: Parity::Odd,
        applies: |n, a, c| table1_range(n, a, c) && c == odd_b(n, a),
        runs: |n, a, _| {
            let b = odd_b(n, a);
            vec![
                (a, 2),
                (b + 1, 1),
                (6, 1),
                (4, 1),
                (2, b - 4),
                (1, a - b - 2),
            ]
        },
    },
    Recipe {
        id: RecipeId::OddT1Row7,
        formula: "(a, a−1, b, 7, 5, 4, 2×(b−6), 1×(a−b−2))",
        parity: Parity::Odd,
        applies: |n, a, c| table1_range(n, a, c) && c == odd_b(n, a) + 1,
        runs: |n, a, _| {
            let b = odd_b(n, a);
            vec![
                (a, 1),
                (a - 1, 1),
                (b, 1),
                (7, 1),
                (5, 1),
                (4, 1),
                (2, b - 6),
                (1, a - b - 2),
            ]
        },
    },
    Recipe {
        id: RecipeId::OddT2Row1,
        formula: "(a, a+b−c+2, c+1, 4, 2×(c−3), 1×(a+b−2c))",
        parity: Parity::Odd,
        applies: |n, a, c| table2_range(n, a, c) && c <= floor_div(a + odd_b(n, a), 2),
        runs: |n, a, c| {
            let b = odd_b(n, a);
            vec![
                (a, 1),
                (a + b - c + 2, 1),
                (c + 1, 1),
                (4, 1),
                (2, c - 3),
                (1, a + b - 2 * c),
            ]
        },
    },
    Recipe {
        id: RecipeId::OddT2Row2,
        formula: "(a, c+1, a+b−c−1, 6×2, 2×(a+b−c−7), 1×(2c−a−b+3))",
        parity: Parity::Odd,
        applies: |n, a, c| table2_range(n, a, c) && c >= floor_div(a + odd_b(n, a), 2),
        runs: |n, a, c| {
            let b = odd_b(n, a);
            vec![
                (a, 1),
                (c + 1, 1),
                (a + b - c - 1, 1),
                (6, 2),
                (2, a + b - c - 7),
                (1, 2 * c - a - b + 3),
            ]
        },
    },
    // even case, n − a even
    Recipe {
        id: RecipeId::EvenTop,
        formula: "(½(n−a−2), a+1, 4, 1×½(n−a−8))",
        parity: Parity::Even,
        applies: |n, a, c| c == 0 && n >= 13 && (3..=floor_div(n - 4, 3)).contains(&a),
        runs: |n, a, _| {
            vec![
                (half(n - a - 2), 1),
                (a + 1, 1),
                (4, 1),
                (1, half(n - a - 8)),
            ]
        },
    },
    Recipe {
        id: RecipeId::EvenMinus1,
        formula: "(½(n−a), a+1, 2, 1×½(n−a−6))",
        parity: Parity::Even,
        applies: |n, a, c| c == 1 && n >= 10 && (2..=floor_div(n - 2, 3)).contains(&a),
        runs: |n, a, _| vec![(half(n - a), 1), (a + 1, 1), (2, 1), (1, half(n - a - 6))],
    },
    Recipe {
        id: RecipeId::EvenMinus2,
        formula: "(½(n−a−10), a+1, 6, 5, 3, 1×½(n−a−20))",
        parity: Parity::Even,
        applies: |n, a, c| c == 2 && n >= 27 && (5..=floor_div(n - 12, 3)).contains(&a),
        runs: |n, a, _| {
            vec![
                (half(n - a - 10), 1),
                (a + 1, 1),
                (6, 1),
                (5, 1),
                (3, 1),
                (1, half(n - a - 20)),
            ]
        },
    },
    Recipe {
        id: RecipeId::EvenMinus3,
        formula: "(½(n−a−2), a+1, 3, 2, 1×½(n−a−10))",
        parity: Parity::Even,
        applies: |n, a, c| c == 3 && n >= 19 && (5..=floor_div(n - 4, 3)).contains(&a),
        runs: |n, a, _| {
            vec![
                (half(n - a - 2), 1),
                (a + 1, 1),
                (3, 1),
                (2, 1),
                (1, half(n - a - 10)),
            ]
        },
    },
    Recipe {
        id: RecipeId::EvenSmallA,
        formula: "(½(n−a−2b+2), a+1, b+1, 3, 2×(b−3), 1×½(n−a−4b))",
        parity: Parity::Even,
        applies: |n, a, b| {
            n >= 26 && (6..=floor_div(n + 4, 5)).contains(&a) && (4..=a - 2).contains(&b)
        },
        runs: |n, a, b| {
            vec![
                (half(n - a - 2 * b + 2), 1),
                (a + 1, 1),
                (b + 1, 1),
                (3, 1),
                (2, b - 3),
                (1, half(n - a - 4 * b)),
            ]
        },
    },
    Recipe {
        id: RecipeId::EvenT3Row1,
        formula: "(a×2, 3+b−c, 3+c, 3×(c−1), 2×(b−2c−1), 1×(a−b+c−3))",
        parity: Parity::Even,
        applies: |n, a, c| {
            table3_range(n, a, c) && (2..=floor_div(even_b(n, a) - 1, 2)).contains(&c)
        },
        runs: |n, a, c| {
            let b = even_b(n, a);
            vec![
                (a, 2),
                (3 + b - c, 1),
                (3 + c, 1),
                (3, c - 1),
                (2, b - 2 * c - 1),
                (1, a - b + c - 3),
            ]
        },
    },
    Recipe {
        id: RecipeId::EvenT3Row2,
        formula: "odd b: (a, a−1, (b+7)/2, (b+5)/2, 5, 3×(b−5)/2, 1×(a−(b+9)/2)); \
                  even b: (a, a−1, (b+8)/2, (b+6)/2, 5, 3×(b−2)/2, 1×(a−b/2−5))",
        parity: Parity::Even,
        applies: |n, a, c| table3_range(n, a, c) && c == ceil_div(even_b(n, a), 2),
        runs: |n, a, _| {
            let b = even_b(n, a);
            if b % 2 != 0 {
                vec![
                    (a, 1),
                    (a - 1, 1),
                    (half(b + 7), 1),
                    (half(b + 5), 1),
                    (5, 1),
                    (3, half(b - 5)),
                    (1, a - half(b + 9)),
                ]
            } else {
                vec![
                    (a, 1),
                    (a - 1, 1),
                    (half(b + 8), 1),
                    (half(b + 6), 1),
                    (5, 1),
                    (3, half(b - 2)),
                    (1, a - half(b) - 5),
                ]
            }
        },
    },
    Recipe {
        id: RecipeId::EvenT3Row3,
        formula: "(a×2, 2+c, b−c+4, 3×(b−c−1), 2×(2c−b−1), 1×(a−c−3))",
        parity: Parity::Even,
        applies: |n, a, c| {
            let b = even_b(n, a);
            table3_range(n, a, c) && (ceil_div(b, 2) + 1..=b - 1).contains(&c)
        },
        runs: |n, a, c| {
            let b = even_b(n, a);
            vec![
                (a, 2),
                (2 + c, 1),
                (b - c + 4, 1),
                (3, b - c - 1),
                (2, 2 * c - b - 1),
                (1, a - c - 3),
            ]
        },
    },
    Recipe {
        id: RecipeId::EvenT3Row4,
        formula: "(a, a−1, b−1, 6×2, 3, 2×(b−7), 1×(a−b−1))",
        parity: Parity::Even,
        applies: |n, a, c| table3_range(n, a, c) && c == even_b(n, a),
        runs: |n, a, _| {
            let b = even_b(n, a);
            vec![
                (a, 1),
                (a - 1, 1),
                (b - 1, 1),
                (6, 2),
                (3, 1),
                (2, b - 7),
                (1, a - b - 1),
            ]
        },
    },
    Recipe {
        id: RecipeId::EvenT3Row5,
        formula: "(a×2, b, 5, 4, 2×(b−5), 1×(a−b−1))",
        parity: Parity::Even,
        applies: |n, a, c| table3_range(n, a, c) && c == even_b(n, a) + 1,
        runs: |n, a, _| {
            let b = even_b(n, a);
            vec![(a, 2), (b, 1), (5, 1), (4, 1), (2, b - 5), (1, a - b - 1)]
        },
    },
    Recipe {
        id: RecipeId::EvenT4Row1,
        formula: "(a, a+b−c+1, c+1, 3, 2×(c−3), 1×(a+b−2c−1))",
        parity: Parity::Even,
        applies: |n, a, c| table4_range(n, a, c) && c <= floor_div(a + even_b(n, a) - 2, 2),
        runs: |n, a, c| {
            let b = even_b(n, a);
            vec![
                (a, 1),
                (a + b - c + 1, 1),
                (c + 1, 1),
                (3, 1),
                (2, c - 3),
                (1, a + b - 2 * c - 1),
            ]
        },
    },
    Recipe {
        id: RecipeId::EvenT4Row2,
        formula: "(a, c+1, a+b−c, 5, 2×(a+b−c−5), 1×(2c−a−b+2))",
        parity: Parity::Even,
        applies: |n, a, c| table4_range(n, a, c) && c >= ceil_div(a + even_b(n, a) - 2, 2),
        runs: |n, a, c| {
            let b = even_b(n, a);
            vec![
                (a, 1),
                (c + 1, 1),
                (a + b - c, 1),
                (5, 1),
                (2, a + b - c - 5),
                (1, 2 * c - a - b + 2),
            ]
        },
    },
    // eigenvalues 2 and 3, indexed as a = 3, c = 3 − e
    Recipe {
        id: RecipeId::Small2Odd,
        formula: "((n−3)/2, 4, 2, 1×(n−9)/2)",
        parity: Parity::NOdd,
        applies: |n, a, c| a == 3 && c == 1 && n >= 11,
        runs: |n, _, _| vec![(half(n - 3), 1), (4, 1), (2, 1), (1, half(n - 9))],
    },
    Recipe {
        id: RecipeId::Small2Even,
        formula: "((n−4)/2, 4, 3, 1×(n−10)/2)",
        parity: Parity::NEven,
        applies: |n, a, c| a == 3 && c == 1 && n >= 12,
        runs: |n, _, _| vec![(half(n - 4), 1), (4, 1), (3, 1), (1, half(n - 10))],
    },
    Recipe {
        id: RecipeId::Small3Odd,
        formula: "((n−5)/2, 4×2, 1×(n−11)/2)",
        parity: Parity::NOdd,
        applies: |n, a, c| a == 3 && c == 0 && n >= 13,
        runs: |n, _, _| vec![(half(n - 5), 1), (4, 2), (1, half(n - 11))],
    },
    Recipe {
        id: RecipeId::Small3Even,
        formula: "((n−2)/2, 4, 1×(n−6)/2)",
        parity: Parity::NEven,
        applies: |n, a, c| a == 3 && c == 0 && n >= 10,
        runs: |n, _, _| vec![(half(n - 2), 1), (4, 1), (1, half(n - 6))],
    },
];

fn run_verified(
    id: RecipeId,
    n: i64,
    a: i64,
    c: i64,
) -> Result<ConstructionResult, ConstructionError> {
    Recipe::get(id).construct(n, a, c)?.verified()
}

/// First row of a table whose range contains `(n, a, c)`.
fn run_table(
    rows: &[RecipeId],
    n: i64,
    a: i64,
    c: i64,
) -> Result<ConstructionResult, ConstructionError> {
    let row = rows
        .iter()
        .find(|id| Recipe::get(**id).is_applicable(n, a, c))
        .ok_or(ConstructionError::OutOfRange {
            recipe: rows[0],
            n,
            a,
            c,
        })?;
    run_verified(*row, n, a, c)
}

/// Partition for `C(a,2)`, `n − a` odd.
pub fn odd_top(n: i64, a: i64) -> Result<ConstructionResult, ConstructionError> {
    run_verified(RecipeId::OddTop, n, a, 0)
}

/// Partition for `C(a,2) − 1`, `n − a` odd.
pub fn odd_minus1(n: i64, a: i64) -> Result<ConstructionResult, ConstructionError> {
    run_verified(RecipeId::OddMinus1, n, a, 1)
}

/// Partition for `C(a,2) − b` with small `a`, `n − a` odd.
pub fn odd_small_a(n: i64, a: i64, b: i64) -> Result<ConstructionResult, ConstructionError> {
    run_verified(RecipeId::OddSmallA, n, a, b)
}

pub fn odd_table1(n: i64, a: i64, c: i64) -> Result<ConstructionResult, ConstructionError> {
    use RecipeId::*;
    run_table(
        &[
            OddT1Row1, OddT1Row2, OddT1Row3, OddT1Row4, OddT1Row5, OddT1Row6, OddT1Row7,
        ],
        n,
        a,
        c,
    )
}

/// Both rows cover `c = ⌊(a+b)/2⌋`; row 1 is used there.
pub fn odd_table2(n: i64, a: i64, c: i64) -> Result<ConstructionResult, ConstructionError> {
    run_table(&[RecipeId::OddT2Row1, RecipeId::OddT2Row2], n, a, c)
}

/// Partition for `C(a,2)`, `n − a` even.
pub fn even_top(n: i64, a: i64) -> Result<ConstructionResult, ConstructionError> {
    run_verified(RecipeId::EvenTop, n, a, 0)
}

pub fn even_minus1(n: i64, a: i64) -> Result<ConstructionResult, ConstructionError> {
    run_verified(RecipeId::EvenMinus1, n, a, 1)
}

pub fn even_minus2(n: i64, a: i64) -> Result<ConstructionResult, ConstructionError> {
    run_verified(RecipeId::EvenMinus2, n, a, 2)
}

pub fn even_minus3(n: i64, a: i64) -> Result<ConstructionResult, ConstructionError> {
    run_verified(RecipeId::EvenMinus3, n, a, 3)
}

pub fn even_small_a(n: i64, a: i64, b: i64) -> Result<ConstructionResult, ConstructionError> {
    run_verified(RecipeId::EvenSmallA, n, a, b)
}

pub fn even_table3(n: i64, a: i64, c: i64) -> Result<ConstructionResult, ConstructionError> {
    use RecipeId::*;
    run_table(
        &[EvenT3Row1, EvenT3Row2, EvenT3Row3, EvenT3Row4, EvenT3Row5],
        n,
        a,
        c,
    )
}

/// Both rows cover `c = (a+b−2)/2` when that is an integer; row 1 is used.
pub fn even_table4(n: i64, a: i64, c: i64) -> Result<ConstructionResult, ConstructionError> {
    run_table(&[RecipeId::EvenT4Row1, RecipeId::EvenT4Row2], n, a, c)
}

/// Partitions for the eigenvalues 2 and 3, split by the parity of `n`.
pub fn small_value(n: i64, e: i64) -> Result<ConstructionResult, ConstructionError> {
    use RecipeId::*;
    let ids: &[RecipeId] = match e {
        2 => &[Small2Odd, Small2Even],
        3 => &[Small3Odd, Small3Even],
        _ => return Err(ConstructionError::NoSmallValue { n, e }),
    };
    let c = 3 - e;
    let id = ids
        .iter()
        .find(|id| Recipe::get(**id).is_applicable(n, 3, c))
        .ok_or(ConstructionError::NoSmallValue { n, e })?;
    run_verified(*id, n, 3, c)
}
