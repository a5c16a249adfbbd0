//! Max-min linear systems `A ⊗ x = b` under interval constraints.
//!
//! For a box `X = [lower, upper]` the solution set `S = { x in X : A ⊗ x = b }`
//! is a join-semilattice: when it is nonempty it has a greatest element, the
//! *principal solution*, obtained by pushing every coordinate as high as the
//! right-hand side allows. Solvability and uniqueness both reduce to
//! arithmetic on the principal solution:
//!
//! * each coordinate gets the cap `x̃_j = min over rows i with a_ij > b_i of
//!   b_i` (and `upper_j` when that set is empty or smaller), which is the
//!   largest value of `x_j` that no row overshoots;
//! * row `i` is *covered* by column `j` when `min(a_ij, x̃_j) = b_i`; the
//!   system is solvable in `X` iff every row is covered and `x̃` is still
//!   above the lower bound;
//! * the solution is unique iff no single coordinate can be lowered: every
//!   column is either pinned at the lower bound or owns a row that no other
//!   column covers and that its cap meets exactly. Lowering `x_j` keeps all
//!   other rows covered and never overshoots, so single-coordinate moves
//!   decide uniqueness outright.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{IntervalVector, Matrix, Vector};
use crate::oracle::{enumerate_box_solutions, CriticalGrid, GridDescription, OracleLimits};
use crate::scalar::Scalar;

fn check_system(a: &Matrix, b: &Vector, x: &IntervalVector) -> Result<()> {
    a.check_vector(b)?;
    a.check_vector(x.lower())
}

/// Greatest candidate solution of `A ⊗ x = b` within `[O, upper]`.
///
/// Always satisfies `A ⊗ x̃ <= b` componentwise and dominates every solution
/// in the box; it is itself a solution iff the system is solvable in
/// `[O, upper]` — see [`is_solvable`] for the box with a lower bound.
pub fn principal_solution(a: &Matrix, b: &Vector, x: &IntervalVector) -> Result<Vector> {
    check_system(a, b, x)?;
    let n = a.n();
    let ticks: Vec<u32> = (0..n)
        .map(|j| {
            let mut cap = x.upper().ticks()[j];
            for i in 0..n {
                if a.get(i, j).ticks() > b.ticks()[i] {
                    cap = cap.min(b.ticks()[i]);
                }
            }
            cap
        })
        .collect();
    Ok(Vector::from_ticks(ticks, a.top()).expect("caps stay on the chain"))
}

/// `cover_sets(a, b, x)[j]` lists the rows whose equation the principal
/// solution attains through column `j`: rows `i` with
/// `min(a_ij, x̃_j) = b_i`. Their union is all of `{0, .., n-1}` exactly
/// when `A ⊗ x̃ = b`.
pub fn cover_sets(a: &Matrix, b: &Vector, x: &IntervalVector) -> Result<Vec<Vec<usize>>> {
    let tilde = principal_solution(a, b, x)?;
    let n = a.n();
    Ok((0..n)
        .map(|j| {
            (0..n)
                .filter(|&i| a.get(i, j).ticks().min(tilde.ticks()[j]) == b.ticks()[i])
                .collect()
        })
        .collect())
}

/// Whether `A ⊗ x = b` has a solution in the box.
///
/// Equivalent to: every row is covered (so `A ⊗ x̃ = b`) and `x̃` respects
/// the lower bound. Sufficiency is direct; necessity holds because any
/// solution `y` satisfies `y <= x̃` coordinatewise and `lower <= y`, and
/// raising `y` to `x̃ ∧ upper = x̃` never breaks an equation that the caps
/// already protect.
pub fn is_solvable(a: &Matrix, b: &Vector, x: &IntervalVector) -> Result<bool> {
    let tilde = principal_solution(a, b, x)?;
    if a.apply(&tilde)? != *b {
        return Ok(false);
    }
    Ok(x.lower()
        .ticks()
        .iter()
        .zip(tilde.ticks())
        .all(|(&lo, &v)| lo <= v))
}

/// Whether `A ⊗ x = b` has *exactly one* solution in the box.
///
/// Checks that the system is solvable and that no coordinate of the
/// principal solution can be lowered on its own: column `j` is locked when
/// `x̃_j` already sits on the lower bound, or when some row is covered by
/// `j` alone *and* requires the full value `b_i = x̃_j` (a private row
/// covered only through `a_ij > b_i`, not by a tied entry `a_ij = b_i <
/// x̃_j`, which would leave slack below the principal value). Since the
/// solution set is closed under joins and order-convex above any solution,
/// a second solution exists iff some single coordinate admits slack.
pub fn is_unique(a: &Matrix, b: &Vector, x: &IntervalVector) -> Result<bool> {
    if !is_solvable(a, b, x)? {
        return Ok(false);
    }
    let tilde = principal_solution(a, b, x)?;
    let cover = cover_sets(a, b, x)?;
    let n = a.n();
    let mut owner_count = vec![0usize; n]; // how many columns cover each row
    for rows in &cover {
        for &i in rows {
            owner_count[i] += 1;
        }
    }
    for j in 0..n {
        if tilde.ticks()[j] == x.lower().ticks()[j] {
            continue;
        }
        let pinned = cover[j]
            .iter()
            .any(|&i| owner_count[i] == 1 && b.ticks()[i] == tilde.ticks()[j]);
        if !pinned {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Why the standard reduction proves the system unsolvable outright.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReductionConflict {
    /// Row `row` forces `x_column <= lower_row`, but `lower_column` is larger.
    CapBelowLower { row: usize, column: usize },
    /// Row `row` needs value `lower_row` but no column can supply it once
    /// the forced columns are fixed.
    RowUnattainable { row: usize },
    /// The fixed contributions of the forced columns already exceed `b_row`.
    ForcedContributionExceeds { row: usize },
}

/// Result of the standard reduction for rows with `b_i = lower_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemReduction {
    /// Rows `i` with `b_i = lower_i`, removed from the system.
    pub removed_rows: Vec<usize>,
    /// Columns fixed at their lower bound (with that value), because some
    /// removed row `i` has `a_ij > b_i`.
    pub forced: Vec<(usize, Scalar)>,
    pub kept_rows: Vec<usize>,
    pub kept_columns: Vec<usize>,
}

impl SystemReduction {
    pub fn is_noop(&self) -> bool {
        self.removed_rows.is_empty()
    }

    /// Entries of the reduced rectangular system (kept rows x kept columns).
    pub fn reduced_entries(&self, a: &Matrix) -> Vec<Vec<u32>> {
        self.kept_rows
            .iter()
            .map(|&i| {
                self.kept_columns
                    .iter()
                    .map(|&j| a.get(i, j).ticks())
                    .collect()
            })
            .collect()
    }

    pub fn reduced_rhs(&self, b: &Vector) -> Vec<u32> {
        self.kept_rows.iter().map(|&i| b.ticks()[i]).collect()
    }
}

/// Outcome of [`reduce_system`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReductionOutcome {
    /// The reduction already shows there is no solution in the box.
    Unsolvable(ReductionConflict),
    Reduced(SystemReduction),
}

/// Standard reduction: rows with `b_i = lower_i` are satisfied at the
/// bottom, so each such row is removed and every column `j` with
/// `a_ij > b_i` is fixed at `lower_j` (any higher value would overshoot row
/// `i`). Requires `b` inside the box.
///
/// Three conflicts are detected while reducing, each of which proves the
/// original system unsolvable: a forced column whose cap `b_i` lies below
/// its own lower bound; a removed row that the fixed columns can no longer
/// attain; and a kept row that the fixed contributions already overshoot.
///
/// When all lower-bound coordinates are equal (in particular for a full box
/// or a zero lower bound) the reduction is exact: solutions of the original
/// system are exactly the reduced solutions extended by the forced values.
/// For general lower bounds it is sound but may constrain more than the
/// original system, because a forced coordinate could in principle float
/// between its lower bound and the cap; the solvability and uniqueness
/// tests therefore never route through the reduction.
pub fn reduce_system(a: &Matrix, b: &Vector, x: &IntervalVector) -> Result<ReductionOutcome> {
    check_system(a, b, x)?;
    if let Some(i) = x.first_violation(b)? {
        return Err(Error::OutsideBox { index: i });
    }
    let n = a.n();
    let removed_rows: Vec<usize> = (0..n)
        .filter(|&i| b.ticks()[i] == x.lower().ticks()[i])
        .collect();
    let mut forced_cols: Vec<usize> = Vec::new();
    for &i in &removed_rows {
        for j in 0..n {
            if a.get(i, j).ticks() > b.ticks()[i] {
                if x.lower().ticks()[j] > b.ticks()[i] {
                    return Ok(ReductionOutcome::Unsolvable(
                        ReductionConflict::CapBelowLower { row: i, column: j },
                    ));
                }
                forced_cols.push(j);
            }
        }
    }
    forced_cols.sort_unstable();
    forced_cols.dedup();
    let is_forced = |j: usize| forced_cols.binary_search(&j).is_ok();

    // every removed row must still be attained once the forced columns are
    // pinned at their lower bounds
    for &i in &removed_rows {
        let need = b.ticks()[i];
        let attained = (0..n).any(|j| {
            let a_ij = a.get(i, j).ticks();
            if a_ij > need {
                // forced column: contributes min(a_ij, lower_j) = lower_j
                x.lower().ticks()[j] == need
            } else {
                // free or forced, the term tops out at a_ij
                a_ij == need && x.lower().ticks()[j] >= need
            }
        });
        if !attained {
            return Ok(ReductionOutcome::Unsolvable(
                ReductionConflict::RowUnattainable { row: i },
            ));
        }
    }

    // kept rows must not be overshot by the forced contributions alone
    let kept_rows: Vec<usize> = (0..n).filter(|i| !removed_rows.contains(i)).collect();
    for &i in &kept_rows {
        let fixed = forced_cols
            .iter()
            .map(|&j| a.get(i, j).ticks().min(x.lower().ticks()[j]))
            .max()
            .unwrap_or(0);
        if fixed > b.ticks()[i] {
            return Ok(ReductionOutcome::Unsolvable(
                ReductionConflict::ForcedContributionExceeds { row: i },
            ));
        }
    }

    let kept_columns: Vec<usize> = (0..n).filter(|&j| !is_forced(j)).collect();
    let forced = forced_cols
        .iter()
        .map(|&j| (j, x.lower().get(j)))
        .collect();
    Ok(ReductionOutcome::Reduced(SystemReduction {
        removed_rows,
        forced,
        kept_rows,
        kept_columns,
    }))
}

/// Grid enumeration of the solution set, for cross-checking.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionSet {
    pub grid: GridDescription,
    /// Solutions on the grid chain (see `grid.scale`).
    pub vectors: Vec<Vector>,
}

/// Enumerate all solutions on the critical-value grid of the instance.
/// Every solution of the system with coordinates on the instance chain is
/// found (solution coordinates are forced onto entry/bound/target values),
/// and emptiness/uniqueness verdicts transfer exactly.
pub fn enumerate_solutions(
    a: &Matrix,
    b: &Vector,
    x: &IntervalVector,
    limits: &OracleLimits,
) -> Result<SolutionSet> {
    check_system(a, b, x)?;
    let grid = CriticalGrid::critical(a, x, &[b], false, limits)?;
    Ok(SolutionSet {
        grid: grid.describe(),
        vectors: enumerate_box_solutions(&grid, b)?,
    })
}

/// Full report for one system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveReport {
    pub principal: Vector,
    pub cover_sets: Vec<Vec<usize>>,
    pub solvable: bool,
    pub unique_in_box: bool,
    /// Standard reduction, when `b` lies in the box (its precondition).
    pub reduction: Option<ReductionOutcome>,
}

pub fn solve(a: &Matrix, b: &Vector, x: &IntervalVector) -> Result<SolveReport> {
    let principal = principal_solution(a, b, x)?;
    let cover = cover_sets(a, b, x)?;
    let solvable = is_solvable(a, b, x)?;
    let unique = is_unique(a, b, x)?;
    let reduction = if x.contains(b)? {
        Some(reduce_system(a, b, x)?)
    } else {
        None
    };
    Ok(SolveReport {
        principal,
        cover_sets: cover,
        solvable,
        unique_in_box: unique,
        reduction,
    })
}
