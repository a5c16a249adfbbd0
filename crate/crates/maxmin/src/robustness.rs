//! Weak robustness, weak robustness relative to a box, interval invariance,
//! and the upward propagation of simplicity along constant scalings.
//!
//! A matrix is *weakly robust* when only fixed points reach fixed points:
//! the attraction set `attr(A)` (vectors whose orbit meets an eigenvector)
//! equals the eigenspace `V(A)`. Over the finite chain this is decidable by
//! sweeping every vector, and three equivalent readings are each evaluated:
//!
//! * closure: `A ⊗ x` being a fixed point forces `x` to be one;
//! * simple images: every eigenvector is its own only preimage;
//! * orbits: no vector is attracted without being fixed.
//!
//! The relative version restricts the starting points to a box `X` (orbits
//! may leave `X`). Invariance of `X` under `A` reduces to two endpoint
//! products, and together the notions tie back to the conformity analysis:
//! weak `X`-robustness implies a simple eigenspace in `X`, and a simple
//! eigenspace plus invariance implies weak `X`-robustness.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{IntervalVector, Matrix, Vector};
use crate::oracle::{brute_x_simple, CriticalGrid, GridDescription, OracleLimits};
use crate::scalar::Scalar;
use crate::solver::{cover_sets, is_unique, principal_solution};
use crate::spectral::{is_eigenvector, orbit};

/// Whether the orbit of `x` reaches a fixed point.
pub fn in_attraction(a: &Matrix, x: &Vector) -> Result<bool> {
    Ok(orbit(a, x)?.hits_eigenvector)
}

/// Weak robustness verdict with all three equivalent forms spelled out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeakRobustnessReport {
    pub holds: bool,
    /// No vector maps onto a fixed point without being one.
    pub fixed_point_closure: bool,
    /// Every eigenvector is a simple image eigenvector.
    pub simple_image_form: bool,
    /// No orbit is attracted from a non-fixed start.
    pub orbit_form: bool,
    /// Lexicographically smallest attracted non-fixed vector, if any.
    pub counterexample: Option<Vector>,
    pub grid: GridDescription,
}

/// Decide weak robustness by sweeping every vector over the chain.
pub fn is_weakly_robust(a: &Matrix, limits: &OracleLimits) -> Result<WeakRobustnessReport> {
    let full = IntervalVector::full(a.n(), a.top())?;
    let grid = CriticalGrid::integer(a, &full, limits)?;
    let mut closure = true;
    let mut orbit_ok = true;
    let mut counterexample = None;
    for y in grid.points() {
        let w = a.apply(&y)?;
        if w == y {
            continue; // fixed starts violate nothing
        }
        if a.apply(&w)? == w {
            closure = false;
        }
        if orbit(a, &y)?.hits_eigenvector {
            orbit_ok = false;
            if counterexample.is_none() {
                counterexample = Some(y);
            }
        }
    }
    let simple = brute_x_simple(&grid).simple;
    debug_assert_eq!(closure, simple);
    debug_assert_eq!(closure, orbit_ok);
    if let Some(ce) = &counterexample {
        debug_assert!(in_attraction(a, ce)? && !is_eigenvector(a, ce)?);
    }
    Ok(WeakRobustnessReport {
        holds: orbit_ok,
        fixed_point_closure: closure,
        simple_image_form: simple,
        orbit_form: orbit_ok,
        counterexample,
        grid: grid.describe(),
    })
}

/// Weak robustness relative to a box.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeakXRobustnessReport {
    pub holds: bool,
    /// Lexicographically smallest vector of the box that is attracted
    /// without being fixed, if any.
    pub counterexample: Option<Vector>,
    pub grid: GridDescription,
}

/// Decide weak `X`-robustness: no grid point of the box reaches a fixed
/// point unless it is one (orbits are allowed to leave the box).
pub fn is_weakly_x_robust(
    a: &Matrix,
    x: &IntervalVector,
    limits: &OracleLimits,
) -> Result<WeakXRobustnessReport> {
    a.check_vector(x.lower())?;
    let grid = CriticalGrid::integer(a, x, limits)?;
    let mut counterexample = None;
    for y in grid.points() {
        if a.apply(&y)? != y && orbit(a, &y)?.hits_eigenvector {
            counterexample = Some(y);
            break; // lexicographic sweep: first hit is smallest
        }
    }
    if let Some(ce) = &counterexample {
        debug_assert!(in_attraction(a, ce)? && !is_eigenvector(a, ce)?);
    }
    Ok(WeakXRobustnessReport {
        holds: counterexample.is_none(),
        counterexample,
        grid: grid.describe(),
    })
}

/// Whether the box is invariant under `A`: exactly the two endpoint
/// inequalities `A ⊗ lower >= lower` and `A ⊗ upper <= upper`, which by
/// monotonicity of `A ⊗ ·` keep every vector of the box inside it.
pub fn is_invariant(a: &Matrix, x: &IntervalVector) -> Result<bool> {
    let low = a.apply(x.lower())?;
    let high = a.apply(x.upper())?;
    Ok(low
        .ticks()
        .iter()
        .zip(x.lower().ticks())
        .all(|(&w, &l)| w >= l)
        && high
            .ticks()
            .iter()
            .zip(x.upper().ticks())
            .all(|(&w, &u)| w <= u))
}

/// Whether `v` is a simple image eigenvector relative to the box: a fixed
/// point whose only preimage inside the box is `v` itself. The preimages of
/// `v` are the solutions of `A ⊗ y = v`, so uniqueness comes from the
/// solver. Errors when `v` lies outside the box.
pub fn is_x_simple_vector(a: &Matrix, x: &IntervalVector, v: &Vector) -> Result<bool> {
    if let Some(index) = x.first_violation(v)? {
        return Err(Error::OutsideBox { index });
    }
    Ok(is_eigenvector(a, v)? && is_unique(a, v, x)?)
}

/// Combined robustness facts for one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RobustnessReport {
    pub weakly_robust: bool,
    pub weakly_x_robust: bool,
    pub x_invariant: bool,
    /// A grid point violating the first failing property, preferring the
    /// boxed check, then the global one, then an endpoint that leaves the
    /// box under `A`.
    pub counterexample: Option<Vector>,
    pub weak: WeakRobustnessReport,
    pub weak_x: WeakXRobustnessReport,
}

pub fn robustness_report(
    a: &Matrix,
    x: &IntervalVector,
    limits: &OracleLimits,
) -> Result<RobustnessReport> {
    let weak = is_weakly_robust(a, limits)?;
    let weak_x = is_weakly_x_robust(a, x, limits)?;
    let x_invariant = is_invariant(a, x)?;
    let invariance_ce = if x_invariant {
        None
    } else if !x.contains(&a.apply(x.lower())?)? {
        Some(x.lower().clone())
    } else {
        Some(x.upper().clone())
    };
    let counterexample = weak_x
        .counterexample
        .clone()
        .or_else(|| weak.counterexample.clone())
        .or(invariance_ce);
    Ok(RobustnessReport {
        weakly_robust: weak.holds,
        weakly_x_robust: weak_x.holds,
        x_invariant,
        counterexample,
        weak,
        weak_x,
    })
}

/// Status of one scaling level `α ⊗ x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelStatus {
    pub alpha: Scalar,
    pub scaled: Vector,
    pub in_box: bool,
    /// Strictly above the lower bound in every coordinate. The upward
    /// propagation of simplicity only speaks about such levels: a system
    /// whose right-hand side touches the floor is answered by bound
    /// clamping, not by the principal-solution machinery, and simplicity
    /// gained that way does not survive scaling. (For `A = [[10, 5], [3,
    /// 10]]` on `[(0,0), (9,5)]`, level 0 is simple because the box pins
    /// both coordinates, yet level 1 has the extra preimages `(0, 1)` and
    /// `(1, 0)`.)
    pub above_floor: bool,
    /// Simplicity of the scaled eigenvector; `None` when it leaves the box
    /// (the implication is then vacuous at this level).
    pub simple: Option<bool>,
}

/// Invariants checked for one ordered pair of levels `alpha <= beta`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCheck {
    pub alpha: Scalar,
    pub beta: Scalar,
    /// Whether `α ⊗ x` simple implied `β ⊗ x` simple on this pair, for
    /// levels strictly above the floor (see [`LevelStatus::above_floor`]).
    ///
    /// Unlike the other fields, this is *not* a theorem: uniqueness at a
    /// level rests on strict pins (rows with `a_ij > b_i` that force
    /// coordinate `j` down to `b_i`), and raising the level can lift a
    /// target entry `b_i` up to a tied matrix entry `a_ij = b_i`, at which
    /// point the pin dissolves into slack bounded only by the box ceiling.
    /// For `A = [[0, 7], [7, 2]]` on `[(0,5), (8,8)]` with eigenvector
    /// `(7, 7)`: level 6 scales to `(6, 6)` with the unique preimage
    /// `(6, 6)`, yet level 7 scales to `(7, 7)` whose preimages are all
    /// four of `(7, 7)`, `(7, 8)`, `(8, 7)`, `(8, 8)` — both entries equal
    /// to 7 are tied and the ceiling 8 leaves room above them.
    pub simple_upward: bool,
    /// Principal solutions grow with the level.
    pub principal_monotone: bool,
    /// Componentwise: the lower principal either sticks to the upper bound
    /// together with the higher one, or equals the higher one capped at `α`.
    pub principal_structure: bool,
    /// Per column, rows covered at level `β` stay covered at level `α`.
    pub cover_nested: bool,
    /// The same for the unions over all columns.
    pub cover_union_nested: bool,
}

impl PairCheck {
    pub fn holds(&self) -> bool {
        self.simple_upward
            && self.principal_monotone
            && self.principal_structure
            && self.cover_nested
            && self.cover_union_nested
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpwardnessReport {
    pub levels: Vec<LevelStatus>,
    pub pairs: Vec<PairCheck>,
    pub holds: bool,
    /// First pair failing any check, if any. The monotonicity, structure,
    /// and cover-nesting facts are theorems over the admissible range, so
    /// in practice this records a genuine failure of the upward
    /// implication on the instance (see [`PairCheck::simple_upward`]).
    pub violating_pair: Option<(Scalar, Scalar)>,
}

/// Check whether simplicity of `α ⊗ x` propagates upward to every
/// `β >= α` in `alphas`, together with the principal-solution and
/// cover-set monotonicity facts.
///
/// The monotonicity facts always hold: principal solutions grow with the
/// level, the lower one is the higher one capped at `α` (or both stick to
/// the box ceiling), and cover sets shrink as the level rises. The upward
/// implication itself usually holds but is not a theorem; see
/// [`PairCheck::simple_upward`] for the failure mechanism and a minimal
/// counterexample. When a pair violates it, `holds` is `false` and
/// `violating_pair` names the first such pair.
///
/// Requires `x` to be an eigenvector and every level to lie in
/// `[max lower, min upper]`; levels outside that range are rejected rather
/// than extrapolated. Scaled vectors that leave the box make the
/// implication vacuous at that level and are reported with `simple: None`.
/// Levels whose scaled vector touches the lower bound are likewise outside
/// the scope of the upward implication (see [`LevelStatus::above_floor`]);
/// the monotonicity and cover-nesting facts are still checked for them.
pub fn upwardness_check(
    a: &Matrix,
    x: &IntervalVector,
    eigen: &Vector,
    alphas: &[Scalar],
) -> Result<UpwardnessReport> {
    a.check_vector(x.lower())?;
    a.check_vector(eigen)?;
    if !is_eigenvector(a, eigen)? {
        return Err(Error::NotEigenvector);
    }
    let low = x.lower().max_coord().ticks();
    let high = x.upper().min_coord().ticks();
    let mut ticks: Vec<u32> = Vec::with_capacity(alphas.len());
    for alpha in alphas {
        if alpha.top() != a.top() {
            return Err(Error::ContextMismatch {
                left: alpha.top(),
                right: a.top(),
            });
        }
        if alpha.ticks() < low || alpha.ticks() > high {
            return Err(Error::LevelOutOfRange {
                value: alpha.ticks(),
                low,
                high,
            });
        }
        ticks.push(alpha.ticks());
    }
    ticks.sort_unstable();
    ticks.dedup();

    let mut levels = Vec::with_capacity(ticks.len());
    for &t in &ticks {
        let alpha = Scalar::new(t, a.top()).unwrap();
        let scaled = eigen.scale(alpha)?;
        debug_assert!(is_eigenvector(a, &scaled)?);
        let in_box = x.contains(&scaled)?;
        let above_floor = scaled
            .ticks()
            .iter()
            .zip(x.lower().ticks())
            .all(|(&s, &l)| s > l);
        let simple = if in_box {
            Some(is_x_simple_vector(a, x, &scaled)?)
        } else {
            None
        };
        levels.push(LevelStatus {
            alpha,
            scaled,
            in_box,
            above_floor,
            simple,
        });
    }

    let mut pairs = Vec::new();
    let mut violating_pair = None;
    for i in 0..levels.len() {
        for j in (i + 1)..levels.len() {
            let (la, lb) = (&levels[i], &levels[j]);
            let pa = principal_solution(a, &la.scaled, x)?;
            let pb = principal_solution(a, &lb.scaled, x)?;
            let ca = cover_sets(a, &la.scaled, x)?;
            let cb = cover_sets(a, &lb.scaled, x)?;
            let simple_upward =
                !(la.above_floor && la.simple == Some(true) && lb.simple == Some(false));
            let principal_monotone = pa
                .ticks()
                .iter()
                .zip(pb.ticks())
                .all(|(&va, &vb)| va <= vb);
            let principal_structure =
                pa.ticks().iter().zip(pb.ticks()).zip(x.upper().ticks()).all(
                    |((&va, &vb), &up)| {
                        if va == up {
                            vb == up
                        } else {
                            va == la.alpha.ticks().min(vb)
                        }
                    },
                );
            let cover_nested = ca
                .iter()
                .zip(&cb)
                .all(|(rows_a, rows_b)| rows_b.iter().all(|i| rows_a.contains(i)));
            let union =
                |c: &[Vec<usize>]| c.iter().flatten().copied().collect::<std::collections::BTreeSet<_>>();
            let cover_union_nested = union(&cb).is_subset(&union(&ca));
            let check = PairCheck {
                alpha: la.alpha,
                beta: lb.alpha,
                simple_upward,
                principal_monotone,
                principal_structure,
                cover_nested,
                cover_union_nested,
            };
            if !check.holds() && violating_pair.is_none() {
                violating_pair = Some((check.alpha, check.beta));
            }
            pairs.push(check);
        }
    }
    Ok(UpwardnessReport {
        holds: violating_pair.is_none(),
        levels,
        pairs,
        violating_pair,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::enumerate_eigenvectors;
    use crate::spectral::greatest_eigenvector;

    fn sample() -> Matrix {
        Matrix::from_rows(
            vec![
                vec![4, 4, 4, 5],
                vec![2, 2, 7, 2],
                vec![3, 8, 3, 3],
                vec![7, 3, 3, 3],
            ],
            10,
        )
        .unwrap()
    }

    fn v(ticks: Vec<u32>, top: u32) -> Vector {
        Vector::from_ticks(ticks, top).unwrap()
    }

    fn boxed(lo: Vec<u32>, hi: Vec<u32>, top: u32) -> IntervalVector {
        IntervalVector::new(v(lo, top), v(hi, top)).unwrap()
    }

    fn sample_box() -> IntervalVector {
        boxed(vec![2, 3, 2, 4], vec![7, 9, 6, 5], 10)
    }

    #[test]
    fn attraction_examples() {
        let a = sample();
        // any fixed point is attracted
        assert!(in_attraction(&a, &v(vec![4, 4, 4, 4], 10)).unwrap());
        // period-2 orbit never reaches a fixed point
        assert!(!in_attraction(&a, &v(vec![7, 9, 6, 5], 10)).unwrap());
        // one-step reach
        assert!(in_attraction(&a, &v(vec![5, 7, 8, 7], 10)).unwrap());
    }

    #[test]
    fn identity_is_weakly_robust() {
        let a = Matrix::identity(2, 10).unwrap();
        let report = is_weakly_robust(&a, &OracleLimits::default()).unwrap();
        assert!(report.holds);
        assert!(report.fixed_point_closure && report.simple_image_form && report.orbit_form);
        assert!(report.counterexample.is_none());
    }

    #[test]
    fn saturated_matrix_is_not_weakly_robust() {
        let a = Matrix::from_rows(vec![vec![10, 10], vec![10, 10]], 10).unwrap();
        let report = is_weakly_robust(&a, &OracleLimits::default()).unwrap();
        assert!(!report.holds);
        // lexicographically smallest attracted non-fixed vector
        assert_eq!(report.counterexample, Some(v(vec![0, 1], 10)));
        // the classic counterexample also violates: (5,0) maps to the fixed
        // point (5,5) in one step
        let ce = v(vec![5, 0], 10);
        assert!(in_attraction(&a, &ce).unwrap());
        assert!(!is_eigenvector(&a, &ce).unwrap());
    }

    #[test]
    fn zero_matrix_is_not_weakly_robust() {
        let a = Matrix::from_rows(vec![vec![0, 0], vec![0, 0]], 10).unwrap();
        let report = is_weakly_robust(&a, &OracleLimits::default()).unwrap();
        assert!(!report.holds);
        assert_eq!(report.counterexample, Some(v(vec![0, 1], 10)));
        // the eigenspace is exactly the zero vector
        let grid = CriticalGrid::integer(
            &a,
            &IntervalVector::full(2, 10).unwrap(),
            &OracleLimits::default(),
        )
        .unwrap();
        assert_eq!(enumerate_eigenvectors(&grid), vec![v(vec![0, 0], 10)]);
    }

    #[test]
    fn weak_x_robustness_on_singleton_fixed_point() {
        let a = sample();
        let fixed = v(vec![4, 4, 4, 4], 10);
        let x = IntervalVector::new(fixed.clone(), fixed).unwrap();
        let report = is_weakly_x_robust(&a, &x, &OracleLimits::default()).unwrap();
        assert!(report.holds);
    }

    #[test]
    fn saturated_matrix_is_not_weakly_x_robust_on_full_box() {
        let a = Matrix::from_rows(vec![vec![10, 10], vec![10, 10]], 10).unwrap();
        let x = IntervalVector::full(2, 10).unwrap();
        let report = is_weakly_x_robust(&a, &x, &OracleLimits::default()).unwrap();
        assert!(!report.holds);
        assert_eq!(report.counterexample, Some(v(vec![0, 1], 10)));
    }

    #[test]
    fn invariance_of_sample_boxes() {
        let a = sample();
        // the instance box is not invariant: both endpoints move out
        assert!(!is_invariant(&a, &sample_box()).unwrap());
        assert_eq!(a.apply(sample_box().lower()).unwrap(), v(vec![4, 2, 3, 3], 10));
        assert_eq!(a.apply(sample_box().upper()).unwrap(), v(vec![5, 6, 8, 7], 10));
        // the eigenspace bounds [e, f] are fixed points, hence invariant
        let ef = boxed(vec![4, 3, 3, 4], vec![5, 6, 6, 5], 10);
        assert!(is_invariant(&a, &ef).unwrap());
        // singleton fixed-point box
        let fixed = v(vec![4, 4, 4, 4], 10);
        assert!(is_invariant(&a, &IntervalVector::new(fixed.clone(), fixed).unwrap()).unwrap());
    }

    #[test]
    fn x_simple_vector_examples() {
        let a = sample();
        let x = sample_box();
        assert!(is_x_simple_vector(&a, &x, &v(vec![5, 6, 6, 5], 10)).unwrap());
        assert!(is_x_simple_vector(&a, &x, &v(vec![4, 4, 4, 4], 10)).unwrap());
        // not a fixed point
        assert!(!is_x_simple_vector(&a, &x, &v(vec![7, 9, 6, 5], 10)).unwrap());
        // outside the box
        assert!(matches!(
            is_x_simple_vector(&a, &x, &v(vec![0, 3, 2, 4], 10)),
            Err(Error::OutsideBox { index: 0 })
        ));
        // saturated matrix: (5,5) has the second preimage (5,0)
        let sat = Matrix::from_rows(vec![vec![10, 10], vec![10, 10]], 10).unwrap();
        let full = IntervalVector::full(2, 10).unwrap();
        assert!(!is_x_simple_vector(&sat, &full, &v(vec![5, 5], 10)).unwrap());
    }

    #[test]
    fn combined_report_prefers_boxed_counterexample() {
        let sat = Matrix::from_rows(vec![vec![10, 10], vec![10, 10]], 10).unwrap();
        let x = boxed(vec![0, 0], vec![10, 10], 10);
        let report = robustness_report(&sat, &x, &OracleLimits::default()).unwrap();
        assert!(!report.weakly_robust);
        assert!(!report.weakly_x_robust);
        assert!(report.x_invariant);
        assert_eq!(report.counterexample, Some(v(vec![0, 1], 10)));
    }

    #[test]
    fn upwardness_on_sample_greatest_eigenvector() {
        let a = sample();
        let x = sample_box();
        let xplus = greatest_eigenvector(&a);
        assert_eq!(xplus, v(vec![5, 7, 7, 5], 10));
        let alphas = [Scalar::new(4, 10).unwrap(), Scalar::new(5, 10).unwrap()];
        let report = upwardness_check(&a, &x, &xplus, &alphas).unwrap();
        assert!(report.holds);
        assert_eq!(report.levels.len(), 2);
        assert_eq!(report.levels[0].scaled, v(vec![4, 4, 4, 4], 10));
        assert_eq!(report.levels[1].scaled, v(vec![5, 5, 5, 5], 10));
        assert_eq!(report.levels[0].simple, Some(true));
        assert_eq!(report.levels[1].simple, Some(true));
        assert_eq!(report.pairs.len(), 1);
        let pair = &report.pairs[0];
        assert!(pair.simple_upward);
        assert!(pair.principal_monotone);
        assert!(pair.principal_structure);
        assert!(pair.cover_nested);
        assert!(pair.cover_union_nested);
        // level 4 touches the lower bound in coordinate 3, level 5 clears it
        assert!(!report.levels[0].above_floor);
        assert!(report.levels[1].above_floor);
    }

    #[test]
    fn floor_touching_levels_are_outside_the_upward_implication() {
        // At level 0 the box [(0,0), (9,5)] pins both coordinates of the
        // scaled eigenvector (0, 0), making it trivially simple; level 1
        // already has the extra preimages (0, 1) and (1, 0). Only levels
        // strictly above the floor take part in the upward implication.
        let a = Matrix::from_rows(vec![vec![10, 5], vec![3, 10]], 10).unwrap();
        let x = IntervalVector::new(v(vec![0, 0], 10), v(vec![9, 5], 10)).unwrap();
        let xplus = greatest_eigenvector(&a);
        assert_eq!(xplus, v(vec![10, 10], 10));
        let alphas: Vec<Scalar> = (0..=5).map(|t| Scalar::new(t, 10).unwrap()).collect();
        let report = upwardness_check(&a, &x, &xplus, &alphas).unwrap();
        assert_eq!(report.levels[0].simple, Some(true));
        assert!(!report.levels[0].above_floor);
        assert_eq!(report.levels[1].simple, Some(false));
        assert!(report.levels[1].above_floor);
        // vacuous at the floor, and the structural facts still hold
        assert!(report.holds, "violating pair {:?}", report.violating_pair);
        for pair in &report.pairs {
            assert!(pair.principal_monotone);
            assert!(pair.principal_structure);
            assert!(pair.cover_nested);
            assert!(pair.cover_union_nested);
        }
    }

    #[test]
    fn tied_entries_can_break_the_upward_implication() {
        // Level 6 scales the eigenvector (7, 7) to (6, 6), whose only
        // preimage in the box is (6, 6) itself: both rows pin their
        // coordinate strictly (7 > 6). Level 7 lifts the target onto the
        // tied entries (both 7s of the matrix), the pins dissolve, and the
        // ceiling (8, 8) admits the four preimages (7,7), (7,8), (8,7),
        // (8,8). The implication genuinely fails above the floor while
        // every structural fact still holds.
        let a = Matrix::from_rows(vec![vec![0, 7], vec![7, 2]], 10).unwrap();
        let x = boxed(vec![0, 5], vec![8, 8], 10);
        let xplus = greatest_eigenvector(&a);
        assert_eq!(xplus, v(vec![7, 7], 10));
        let alphas: Vec<Scalar> = (5..=8).map(|t| Scalar::new(t, 10).unwrap()).collect();
        let report = upwardness_check(&a, &x, &xplus, &alphas).unwrap();

        let by_tick = |t: u32| {
            report
                .levels
                .iter()
                .find(|l| l.alpha.ticks() == t)
                .unwrap()
        };
        // level 5 touches the floor in coordinate 2 and stays out of scope
        assert!(!by_tick(5).above_floor);
        assert!(by_tick(6).above_floor);
        assert_eq!(by_tick(6).simple, Some(true));
        assert_eq!(by_tick(7).simple, Some(false));

        assert!(!report.holds);
        assert_eq!(
            report.violating_pair,
            Some((Scalar::new(6, 10).unwrap(), Scalar::new(7, 10).unwrap()))
        );
        for pair in &report.pairs {
            assert!(pair.principal_monotone);
            assert!(pair.principal_structure);
            assert!(pair.cover_nested);
            assert!(pair.cover_union_nested);
        }

        // re-verify the four preimages by exhaustive enumeration
        let grid = CriticalGrid::integer(&a, &x, &OracleLimits::default()).unwrap();
        let mut preimages =
            crate::oracle::enumerate_box_solutions(&grid, &v(vec![7, 7], 10)).unwrap();
        preimages.sort_by(|p, q| p.ticks().cmp(q.ticks()));
        assert_eq!(
            preimages,
            vec![
                v(vec![7, 7], 10),
                v(vec![7, 8], 10),
                v(vec![8, 7], 10),
                v(vec![8, 8], 10),
            ]
        );
    }

    #[test]
    fn upwardness_rejects_bad_inputs() {
        let a = sample();
        let x = sample_box();
        let xplus = greatest_eigenvector(&a);
        // admissible range is [4, 5]
        let err = upwardness_check(&a, &x, &xplus, &[Scalar::new(3, 10).unwrap()]);
        assert!(matches!(
            err,
            Err(Error::LevelOutOfRange {
                value: 3,
                low: 4,
                high: 5
            })
        ));
        let err = upwardness_check(&a, &x, &v(vec![7, 9, 6, 5], 10), &[]);
        assert!(matches!(err, Err(Error::NotEigenvector)));
    }

    #[test]
    fn upwardness_with_a_single_level_is_trivial() {
        let a = sample();
        let x = sample_box();
        let xplus = greatest_eigenvector(&a);
        let alpha = Scalar::new(4, 10).unwrap();
        let report = upwardness_check(&a, &x, &xplus, &[alpha, alpha]).unwrap();
        assert!(report.holds);
        assert_eq!(report.levels.len(), 1);
        assert!(report.pairs.is_empty());
    }
}
