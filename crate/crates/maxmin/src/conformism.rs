//! Deciding whether the eigenspace inside a box is *simple*: every
//! eigenvector of `A` in `X = [lower, upper]` has itself as its only
//! preimage under `x -> A ⊗ x` within `X`.
//!
//! The test is purely arithmetic. Writing `γ = min(smallest row maximum,
//! smallest upper bound)`, the constant vector at `γ` is always an
//! eigenvector in the box, so first of all `A` must be a *level-γ
//! permutation*: exactly one entry per row and per column reaches `γ`.
//! Those entries select a permutation whose cycles `c_1, .., c_r` carve the
//! index set; on each cycle every eigenvector in `X` is constant, with value
//! between
//!
//! * `e_u` — the largest lower bound on the cycle, and
//! * `f_u` — the smallest `min(upper_v, x⊕_v)` on the cycle, where `x⊕` is
//!   the greatest eigenvector.
//!
//! The matrix is then *conforming to `X`* when along every cycle
//! `(i_1, .., i_k, i_1)` each consecutive arc `(i_j, i_{j+1})` satisfies:
//!
//! 1. if `lower_{i_{j+1}} < e_u`, all other entries of row `i_j` stay
//!    strictly below `e_u`;
//! 2. if `lower_{i_{j+1}} = e_u`, all other entries of row `i_j` stay at or
//!    below `e_u`;
//! 3. if `a_{i_j, i_{j+1}}` equals the cycle's smallest permutation entry
//!    and also equals `x⊕_{i_{j+1}}` and `f_{i_{j+1}}`, then
//!    `upper_{i_{j+1}} <= x⊕_{i_{j+1}}`.
//!
//! Under the preconditions (`lower` strictly below the greatest constant
//! eigenvector everywhere, and every lower bound strictly below every upper
//! bound) conformity is equivalent to simplicity, and each violated
//! condition converts into an explicit eigenvector with two preimages.

use serde::{Deserialize, Serialize};

use crate::digraph::{gamma, level_permutation, CycleDecomposition};
use crate::error::{Error, Result};
use crate::matrix::{IntervalVector, Matrix, Vector};
use crate::oracle::{brute_x_simple, CriticalGrid, OracleLimits};
use crate::scalar::Scalar;
use crate::spectral::greatest_eigenvector;

/// Why the arithmetic test does not apply to an instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum InapplicableReason {
    /// `lower_coord` is not strictly below the greatest constant
    /// eigenvector's level (the smallest row maximum).
    LowerReachesConstant { coord: usize },
    /// Some lower bound is not strictly below some upper bound.
    LowerMeetsUpper { low_coord: usize, up_coord: usize },
}

/// A violated conformity condition on one cycle arc.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ViolationKind {
    /// Condition 1: `lower` at the arc target is strictly below the cycle
    /// floor `e`, yet another entry of the source row reaches the floor.
    RowEntryAtFloor {
        column: usize,
        entry: Scalar,
        floor: Scalar,
    },
    /// Condition 2: `lower` at the arc target equals the floor, yet another
    /// entry of the source row exceeds it.
    RowEntryAboveFloor {
        column: usize,
        entry: Scalar,
        floor: Scalar,
    },
    /// Condition 3: the arc is the cycle's tight arc (entry = cycle minimum
    /// = greatest eigenvector = `f` at the target), yet the upper bound at
    /// the target exceeds the greatest eigenvector there.
    UpperExceedsGreatest { upper: Scalar, greatest: Scalar },
}

impl ViolationKind {
    /// 1, 2 or 3, matching the condition list in the module docs.
    pub fn condition(&self) -> u8 {
        match self {
            ViolationKind::RowEntryAtFloor { .. } => 1,
            ViolationKind::RowEntryAboveFloor { .. } => 2,
            ViolationKind::UpperExceedsGreatest { .. } => 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// Index of the cycle in the canonical decomposition.
    pub cycle: usize,
    /// The arc `(source, target)` on which the condition fails.
    pub arc: (usize, usize),
    pub kind: ViolationKind,
}

/// An eigenvector with two preimages in the box: `A ⊗ first = A ⊗ second =
/// target`, `first = target` is the eigenvector itself, `second` differs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub target: Vector,
    pub first: Vector,
    pub second: Vector,
}

/// Per-cycle bounds `e` (floor) and `f` (ceiling), expanded to full vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenBounds {
    pub lower: Vector,
    pub upper: Vector,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    /// Every eigenvector in the box is its own only preimage in the box.
    Simple,
    /// Some eigenvector in the box has a second preimage in the box.
    NotSimple,
    /// The preconditions fail; the arithmetic test does not decide.
    Inapplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConformismReport {
    pub verdict: Verdict,
    pub inapplicable: Option<InapplicableReason>,
    /// `γ`, the level of the canonical constant eigenvector in the box.
    pub gamma: Option<Scalar>,
    /// Cycle structure of the level-`γ` permutation, when there is one.
    pub level_perm: Option<CycleDecomposition>,
    /// Cycle floor/ceiling once the permutation structure exists.
    pub bounds: Option<EigenBounds>,
    /// Greatest eigenvector of `A` (unconstrained by the box).
    pub greatest: Vector,
    /// All violated conditions in canonical cycle/arc order.
    pub violations: Vec<Violation>,
    /// Two-preimage witness for the first failure, when not simple.
    pub witness: Option<Witness>,
}

/// The contiguous range of values an eigenspace cycle may take.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleRange {
    pub cycle: Vec<usize>,
    pub low: Scalar,
    pub high: Scalar,
}

fn check_preconditions(a: &Matrix, x: &IntervalVector) -> Option<InapplicableReason> {
    let c = crate::spectral::aggregates(a).min_row_max.ticks();
    for (j, &lo) in x.lower().ticks().iter().enumerate() {
        if lo >= c {
            return Some(InapplicableReason::LowerReachesConstant { coord: j });
        }
    }
    let (low_coord, &max_low) = x
        .lower()
        .ticks()
        .iter()
        .enumerate()
        .max_by_key(|(_, &v)| v)
        .expect("nonempty");
    let (up_coord, &min_up) = x
        .upper()
        .ticks()
        .iter()
        .enumerate()
        .min_by_key(|(_, &v)| v)
        .expect("nonempty");
    if max_low >= min_up {
        return Some(InapplicableReason::LowerMeetsUpper { low_coord, up_coord });
    }
    None
}

struct CycleData {
    /// cycle floor value per cycle
    e: Vec<u32>,
    /// cycle ceiling value per cycle
    f: Vec<u32>,
    /// cycle index per node
    cycle_of: Vec<usize>,
    /// smallest permutation entry per cycle
    cycle_min: Vec<u32>,
}

fn cycle_data(a: &Matrix, x: &IntervalVector, dec: &CycleDecomposition, xplus: &Vector) -> CycleData {
    let cycle_of = dec.cycle_of();
    let mut e = Vec::with_capacity(dec.cycles.len());
    let mut f = Vec::with_capacity(dec.cycles.len());
    let mut cycle_min = Vec::with_capacity(dec.cycles.len());
    for cycle in &dec.cycles {
        let eu = cycle.iter().map(|&v| x.lower().ticks()[v]).max().unwrap();
        let fu = cycle
            .iter()
            .map(|&v| x.upper().ticks()[v].min(xplus.ticks()[v]))
            .min()
            .unwrap();
        let mu = cycle
            .iter()
            .map(|&i| a.get(i, dec.sigma[i]).ticks())
            .min()
            .unwrap();
        e.push(eu);
        f.push(fu);
        cycle_min.push(mu);
    }
    CycleData {
        e,
        f,
        cycle_of,
        cycle_min,
    }
}

fn collect_violations(
    a: &Matrix,
    x: &IntervalVector,
    dec: &CycleDecomposition,
    data: &CycleData,
    xplus: &Vector,
) -> Vec<Violation> {
    let n = a.n();
    let mut out = Vec::new();
    for (u, cycle) in dec.cycles.iter().enumerate() {
        let eu = data.e[u];
        for (pos, &i) in cycle.iter().enumerate() {
            let next = cycle[(pos + 1) % cycle.len()];
            debug_assert_eq!(dec.sigma[i], next);
            let low_next = x.lower().ticks()[next];
            debug_assert!(low_next <= eu);
            for k in 0..n {
                if k == next {
                    continue;
                }
                let entry = a.get(i, k).ticks();
                if low_next < eu && entry >= eu {
                    out.push(Violation {
                        cycle: u,
                        arc: (i, next),
                        kind: ViolationKind::RowEntryAtFloor {
                            column: k,
                            entry: a.get(i, k),
                            floor: Scalar::new(eu, a.top()).unwrap(),
                        },
                    });
                } else if low_next == eu && entry > eu {
                    out.push(Violation {
                        cycle: u,
                        arc: (i, next),
                        kind: ViolationKind::RowEntryAboveFloor {
                            column: k,
                            entry: a.get(i, k),
                            floor: Scalar::new(eu, a.top()).unwrap(),
                        },
                    });
                }
            }
            let arc_entry = a.get(i, next).ticks();
            if arc_entry == data.cycle_min[u]
                && arc_entry == xplus.ticks()[next]
                && arc_entry == data.f[u]
                && x.upper().ticks()[next] > xplus.ticks()[next]
            {
                out.push(Violation {
                    cycle: u,
                    arc: (i, next),
                    kind: ViolationKind::UpperExceedsGreatest {
                        upper: x.upper().get(next),
                        greatest: xplus.get(next),
                    },
                });
            }
        }
    }
    out
}

fn vector_with(base: &Vector, coord: usize, value: u32) -> Vector {
    let mut ticks = base.ticks().to_vec();
    ticks[coord] = value;
    Vector::from_ticks(ticks, base.top()).expect("value on the chain")
}

/// Substitution check: `target` is an eigenvector in the box and both
/// preimages map onto it.
fn verify_witness(a: &Matrix, x: &IntervalVector, w: &Witness) -> bool {
    let ok = |r: Result<bool>| r.unwrap_or(false);
    w.first != w.second
        && ok(x.contains(&w.target))
        && ok(x.contains(&w.first))
        && ok(x.contains(&w.second))
        && a.apply(&w.target).map(|v| v == w.target).unwrap_or(false)
        && a.apply(&w.first).map(|v| v == w.target).unwrap_or(false)
        && a.apply(&w.second).map(|v| v == w.target).unwrap_or(false)
}

/// Last-resort witness search on the instance's integer critical values.
/// Any failing instance has a witness with coordinates among matrix entries
/// and box bounds, so no midpoint refinement is needed here.
fn oracle_witness(a: &Matrix, x: &IntervalVector) -> Result<Witness> {
    let limits = OracleLimits::relaxed(a.n(), 4 * a.n() * a.n() + 8);
    let grid = CriticalGrid::integer(a, x, &limits)?;
    let scan = brute_x_simple(&grid);
    match scan.witness {
        Some((second, target)) => Ok(Witness {
            first: target.clone(),
            target,
            second,
        }),
        None => Err(Error::WitnessUnavailable),
    }
}

/// Build the two-preimage witness for a failure of conditions 1/2 on cycle
/// `u` at `arc`, using the largest below-`γ` entry `d_u` of the cycle's rows.
fn witness_for_floor_violation(
    a: &Matrix,
    x: &IntervalVector,
    dec: &CycleDecomposition,
    gamma_ticks: u32,
    u: usize,
    arc: (usize, usize),
) -> Option<Witness> {
    let cycle = &dec.cycles[u];
    // largest entry strictly below γ among the cycle's rows, preferring the
    // violating source row so the lowered coordinate keeps a strict gap
    let mut best: Option<(u32, usize)> = None; // (value, position in cycle)
    for (pos, &i) in cycle.iter().enumerate() {
        for k in 0..a.n() {
            let entry = a.get(i, k).ticks();
            if entry < gamma_ticks {
                let better = match best {
                    None => true,
                    Some((val, p)) => {
                        entry > val || (entry == val && i == arc.0 && cycle[p] != arc.0)
                    }
                };
                if better {
                    best = Some((entry, pos));
                }
            }
        }
    }
    let (d, pos) = best?;
    let target_node = cycle[(pos + 1) % cycle.len()];
    let mut ticks = vec![gamma_ticks; a.n()];
    for &i in cycle {
        ticks[i] = d;
    }
    let b = Vector::from_ticks(ticks, a.top()).expect("on chain");
    let second = vector_with(&b, target_node, x.lower().ticks()[target_node]);
    Some(Witness {
        first: b.clone(),
        target: b,
        second,
    })
}

/// Analyse simplicity of the eigenspace in the box.
pub fn check_conforming(a: &Matrix, x: &IntervalVector) -> Result<ConformismReport> {
    a.check_vector(x.lower())?;
    let greatest = greatest_eigenvector(a);
    if let Some(reason) = check_preconditions(a, x) {
        return Ok(ConformismReport {
            verdict: Verdict::Inapplicable,
            inapplicable: Some(reason),
            gamma: None,
            level_perm: None,
            bounds: None,
            greatest,
            violations: Vec::new(),
            witness: None,
        });
    }
    let g = gamma(a, x.upper())?;
    let Some(dec) = level_permutation(a, g)? else {
        // the constant eigenvector at γ has a second preimage
        let witness = witness_for_missing_permutation(a, x, g)
            .filter(|w| verify_witness(a, x, w))
            .map(Ok)
            .unwrap_or_else(|| oracle_witness(a, x))?;
        return Ok(ConformismReport {
            verdict: Verdict::NotSimple,
            inapplicable: None,
            gamma: Some(g),
            level_perm: None,
            bounds: None,
            greatest,
            violations: Vec::new(),
            witness: Some(witness),
        });
    };
    let data = cycle_data(a, x, &dec, &greatest);

    // sanity: on a level-γ permutation the greatest eigenvector is constant
    // along every cycle, and a tight arc's entry is the cycle minimum
    for (u, cycle) in dec.cycles.iter().enumerate() {
        debug_assert!(cycle
            .iter()
            .all(|&v| greatest.ticks()[v] == greatest.ticks()[cycle[0]]));
        for &i in cycle {
            let next = dec.sigma[i];
            if greatest.ticks()[i] == a.get(i, next).ticks() {
                debug_assert_eq!(a.get(i, next).ticks(), data.cycle_min[u]);
            }
        }
        // floor strictly below γ, ceiling at or above γ
        debug_assert!(data.e[u] < g.ticks() && data.f[u] >= g.ticks());
    }

    let violations = collect_violations(a, x, &dec, &data, &greatest);
    let bounds = {
        let mut lo = vec![0u32; a.n()];
        let mut hi = vec![0u32; a.n()];
        for (j, &u) in data.cycle_of.iter().enumerate() {
            lo[j] = data.e[u];
            hi[j] = data.f[u];
        }
        EigenBounds {
            lower: Vector::from_ticks(lo, a.top()).unwrap(),
            upper: Vector::from_ticks(hi, a.top()).unwrap(),
        }
    };
    if violations.is_empty() {
        return Ok(ConformismReport {
            verdict: Verdict::Simple,
            inapplicable: None,
            gamma: Some(g),
            level_perm: Some(dec),
            bounds: Some(bounds),
            greatest,
            violations,
            witness: None,
        });
    }
    let first = violations[0].clone();
    let constructed = match first.kind {
        ViolationKind::RowEntryAtFloor { .. } | ViolationKind::RowEntryAboveFloor { .. } => {
            witness_for_floor_violation(a, x, &dec, g.ticks(), first.cycle, first.arc)
        }
        ViolationKind::UpperExceedsGreatest { .. } => {
            let target_node = first.arc.1;
            let mut ticks = vec![0u32; a.n()];
            for (j, &u) in data.cycle_of.iter().enumerate() {
                ticks[j] = data.f[u];
            }
            let b = Vector::from_ticks(ticks, a.top()).expect("on chain");
            let second = vector_with(&b, target_node, x.upper().ticks()[target_node]);
            Some(Witness {
                first: b.clone(),
                target: b,
                second,
            })
        }
    };
    let witness = constructed
        .filter(|w| verify_witness(a, x, w))
        .map(Ok)
        .unwrap_or_else(|| oracle_witness(a, x))?;
    debug_assert!(verify_witness(a, x, &witness));
    Ok(ConformismReport {
        verdict: Verdict::NotSimple,
        inapplicable: None,
        gamma: Some(g),
        level_perm: Some(dec),
        bounds: Some(bounds),
        greatest,
        violations,
        witness: Some(witness),
    })
}

/// Witness when `A` is not a level-γ permutation: the constant eigenvector
/// at `γ` gains a second preimage by dropping one coordinate to its lower
/// bound.
fn witness_for_missing_permutation(
    a: &Matrix,
    x: &IntervalVector,
    g: Scalar,
) -> Option<Witness> {
    let n = a.n();
    let gt = g.ticks();
    let b = Vector::constant(n, Scalar::new(gt, a.top()).unwrap());
    // case 1: some column never reaches γ — its value is invisible to A
    for k in 0..n {
        if (0..n).all(|i| a.get(i, k).ticks() < gt) {
            let second = vector_with(&b, k, x.lower().ticks()[k]);
            return Some(Witness {
                first: b.clone(),
                target: b,
                second,
            });
        }
    }
    // case 2: every column reaches γ, so some row must reach it twice; then
    // some column is not the unique γ-support of any row, and every row can
    // attain γ while that column drops to its lower bound
    let mut pinned = vec![false; n];
    for i in 0..n {
        let support: Vec<usize> = (0..n).filter(|&j| a.get(i, j).ticks() >= gt).collect();
        if support.len() == 1 {
            pinned[support[0]] = true;
        }
    }
    let v = (0..n).find(|&j| !pinned[j])?;
    let second = vector_with(&b, v, x.lower().ticks()[v]);
    Some(Witness {
        first: b.clone(),
        target: b,
        second,
    })
}

/// The two-preimage witness from a [`ConformismReport`], as a standalone
/// call. Errors with [`Error::WitnessUnavailable`] when the verdict is
/// `Simple` or `Inapplicable`.
pub fn witness_second_preimage(a: &Matrix, x: &IntervalVector) -> Result<Witness> {
    let report = check_conforming(a, x)?;
    report.witness.ok_or(Error::WitnessUnavailable)
}

/// Explicit structure of the eigenspace in the box when it is simple: the
/// eigenvectors are exactly the vectors that are constant on each
/// permutation cycle with the cycle's value anywhere in `[low, high]`.
/// Errors with [`Error::NotConforming`] otherwise.
pub fn eigenspace_structure(a: &Matrix, x: &IntervalVector) -> Result<Vec<CycleRange>> {
    let report = check_conforming(a, x)?;
    if report.verdict != Verdict::Simple {
        return Err(Error::NotConforming);
    }
    let dec = report.level_perm.expect("simple implies permutation");
    let bounds = report.bounds.expect("simple implies bounds");
    Ok(dec
        .cycles
        .iter()
        .map(|cycle| CycleRange {
            cycle: cycle.clone(),
            low: bounds.lower.get(cycle[0]),
            high: bounds.upper.get(cycle[0]),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{enumerate_eigenvectors, CriticalGrid, OracleLimits};

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

    #[test]
    fn sample_instance_is_simple() {
        let a = sample();
        let x = boxed(vec![2, 3, 2, 4], vec![7, 9, 6, 5], 10);
        let report = check_conforming(&a, &x).unwrap();
        assert_eq!(report.verdict, Verdict::Simple);
        assert_eq!(report.gamma.unwrap().ticks(), 5);
        let dec = report.level_perm.as_ref().unwrap();
        assert_eq!(dec.cycles, vec![vec![0, 3], vec![1, 2]]);
        let bounds = report.bounds.as_ref().unwrap();
        assert_eq!(bounds.lower, v(vec![4, 3, 3, 4], 10));
        assert_eq!(bounds.upper, v(vec![5, 6, 6, 5], 10));
        assert!(report.violations.is_empty());
        assert!(report.witness.is_none());

        let structure = eigenspace_structure(&a, &x).unwrap();
        assert_eq!(structure.len(), 2);
        assert_eq!(structure[0].cycle, vec![0, 3]);
        assert_eq!(structure[0].low.ticks(), 4);
        assert_eq!(structure[0].high.ticks(), 5);
        assert_eq!(structure[1].cycle, vec![1, 2]);
        assert_eq!(structure[1].low.ticks(), 3);
        assert_eq!(structure[1].high.ticks(), 6);
    }

    #[test]
    fn simple_verdict_matches_oracle_on_sample() {
        let a = sample();
        let x = boxed(vec![2, 3, 2, 4], vec![7, 9, 6, 5], 10);
        let grid =
            CriticalGrid::critical(&a, &x, &[], false, &OracleLimits::relaxed(4, 40)).unwrap();
        assert!(brute_x_simple(&grid).simple);
        // eigenspace structure also matches enumeration on integer ticks
        let igrid = CriticalGrid::integer(&a, &x, &OracleLimits::default()).unwrap();
        let eigen = enumerate_eigenvectors(&igrid);
        let structure = eigenspace_structure(&a, &x).unwrap();
        for ev in &eigen {
            for r in &structure {
                let val = ev.ticks()[r.cycle[0]];
                assert!(r.cycle.iter().all(|&i| ev.ticks()[i] == val));
                assert!((r.low.ticks()..=r.high.ticks()).contains(&val));
            }
        }
        // and the count is the product of the range sizes
        let expected: usize = structure
            .iter()
            .map(|r| (r.high.ticks() - r.low.ticks() + 1) as usize)
            .product();
        assert_eq!(eigen.len(), expected);
    }

    #[test]
    fn raised_upper_bound_breaks_condition_three() {
        let a = sample();
        // upper_4 goes from 5 to 6: the tight arc (0, 3) now allows a second
        // preimage above the greatest eigenvector value 5
        let x = boxed(vec![2, 3, 2, 4], vec![7, 9, 6, 6], 10);
        let report = check_conforming(&a, &x).unwrap();
        assert_eq!(report.verdict, Verdict::NotSimple);
        assert_eq!(report.violations.len(), 1);
        let viol = &report.violations[0];
        assert_eq!(viol.arc, (0, 3));
        assert_eq!(viol.kind.condition(), 3);
        match &viol.kind {
            ViolationKind::UpperExceedsGreatest { upper, greatest } => {
                assert_eq!(upper.ticks(), 6);
                assert_eq!(greatest.ticks(), 5);
            }
            other => panic!("wrong kind {other:?}"),
        }
        let w = report.witness.unwrap();
        assert_eq!(w.target, v(vec![5, 6, 6, 5], 10));
        assert_eq!(w.second, v(vec![5, 6, 6, 6], 10));
        assert!(verify_witness(&a, &x, &w));
    }

    #[test]
    fn dead_column_breaks_the_permutation() {
        // column 2 never reaches γ = 5
        let a = Matrix::from_rows(vec![vec![5, 0], vec![5, 0]], 10).unwrap();
        let x = boxed(vec![0, 0], vec![5, 5], 10);
        let report = check_conforming(&a, &x).unwrap();
        assert_eq!(report.verdict, Verdict::NotSimple);
        assert!(report.level_perm.is_none());
        let w = report.witness.unwrap();
        assert_eq!(w.target, v(vec![5, 5], 10));
        assert_eq!(w.second, v(vec![5, 0], 10));
        assert!(verify_witness(&a, &x, &w));
    }

    #[test]
    fn doubled_row_support_breaks_the_permutation() {
        // every column reaches γ = 5 but row 0 reaches it twice
        let a = Matrix::from_rows(vec![vec![5, 6], vec![0, 7]], 10).unwrap();
        let x = boxed(vec![0, 0], vec![5, 5], 10);
        let report = check_conforming(&a, &x).unwrap();
        assert_eq!(report.verdict, Verdict::NotSimple);
        assert!(report.level_perm.is_none());
        let w = report.witness.unwrap();
        assert!(verify_witness(&a, &x, &w));
    }

    #[test]
    fn floor_violation_yields_verified_witness() {
        // cycle (0 1) at γ = 6 with an off-permutation entry 4 >= e = 4 in
        // row 0 while lower_1 = 2 < e: condition 1 fails on arc (0, 1)
        let a = Matrix::from_rows(vec![vec![0, 6, 4], vec![6, 0, 0], vec![0, 0, 9]], 10).unwrap();
        let x = boxed(vec![4, 2, 0], vec![9, 9, 9], 10);
        let report = check_conforming(&a, &x).unwrap();
        assert_eq!(report.verdict, Verdict::NotSimple);
        assert!(report
            .violations
            .iter()
            .any(|viol| viol.kind.condition() == 1 && viol.arc == (0, 1)));
        let w = report.witness.unwrap();
        assert!(verify_witness(&a, &x, &w));
    }

    #[test]
    fn boundary_lower_bound_is_inapplicable() {
        let a = sample();
        // lower_1 = 5 = smallest row maximum: not strictly below
        let x = boxed(vec![5, 3, 2, 4], vec![7, 9, 6, 5], 10);
        let report = check_conforming(&a, &x).unwrap();
        assert_eq!(report.verdict, Verdict::Inapplicable);
        assert_eq!(
            report.inapplicable,
            Some(InapplicableReason::LowerReachesConstant { coord: 0 })
        );
        assert!(matches!(
            eigenspace_structure(&a, &x),
            Err(Error::NotConforming)
        ));
    }

    #[test]
    fn crossing_bounds_are_inapplicable() {
        let a = sample();
        // max lower = 4 (coord 3), min upper = 4 (coord 3): not strict
        let x = boxed(vec![2, 3, 2, 4], vec![7, 9, 6, 4], 10);
        let report = check_conforming(&a, &x).unwrap();
        assert_eq!(report.verdict, Verdict::Inapplicable);
        assert!(matches!(
            report.inapplicable,
            Some(InapplicableReason::LowerMeetsUpper { .. })
        ));
    }

    #[test]
    fn one_by_one_instances_follow_condition_three() {
        let a = Matrix::from_rows(vec![vec![7]], 10).unwrap();
        // upper bound at the greatest eigenvector: simple
        let x = boxed(vec![3], vec![7], 10);
        let report = check_conforming(&a, &x).unwrap();
        assert_eq!(report.verdict, Verdict::Simple);
        let ranges = eigenspace_structure(&a, &x).unwrap();
        assert_eq!(ranges.len(), 1);
        assert_eq!(ranges[0].low.ticks(), 3);
        assert_eq!(ranges[0].high.ticks(), 7);
        // raising it to 9 hands the eigenvector 7 the preimages 8 and 9
        let x = boxed(vec![3], vec![9], 10);
        let report = check_conforming(&a, &x).unwrap();
        assert_eq!(report.verdict, Verdict::NotSimple);
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.violations[0].kind.condition(), 3);
        let w = report.witness.unwrap();
        assert_eq!(w.target, v(vec![7], 10));
        assert_eq!(w.second, v(vec![9], 10));
        assert!(verify_witness(&a, &x, &w));
    }

    #[test]
    fn witness_helper_rejects_simple_instances() {
        let a = sample();
        let x = boxed(vec![2, 3, 2, 4], vec![7, 9, 6, 5], 10);
        assert!(matches!(
            witness_second_preimage(&a, &x),
            Err(Error::WitnessUnavailable)
        ));
    }
}
