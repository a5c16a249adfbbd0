//! Seeded random instance generators for stress tests and the CLI's
//! `--random` mode.
//!
//! Entries are drawn from a small palette of chain values rather than
//! uniformly: equal entries are what make max-min instances interesting
//! (ties drive most edge cases), and uniform draws almost never collide.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::matrix::{IntervalVector, Matrix, Vector};
use crate::spectral;

/// Draw `k` distinct chain values to use as an entry palette.
pub fn palette<R: Rng>(rng: &mut R, top: u32, k: usize) -> Vec<u32> {
    let mut all: Vec<u32> = (0..=top).collect();
    all.shuffle(rng);
    let mut out: Vec<u32> = all.into_iter().take(k.max(1)).collect();
    out.sort_unstable();
    out
}

pub fn matrix<R: Rng>(rng: &mut R, n: usize, top: u32, palette: &[u32]) -> Matrix {
    let rows = (0..n)
        .map(|_| (0..n).map(|_| *palette.choose(rng).unwrap()).collect())
        .collect();
    Matrix::from_rows(rows, top).expect("palette values are on the chain")
}

pub fn vector<R: Rng>(rng: &mut R, n: usize, top: u32, palette: &[u32]) -> Vector {
    let ticks: Vec<u32> = (0..n).map(|_| *palette.choose(rng).unwrap()).collect();
    Vector::from_ticks(ticks, top).expect("palette values are on the chain")
}

/// Random box: per coordinate, two palette draws sorted into a bound pair.
pub fn interval<R: Rng>(rng: &mut R, n: usize, top: u32, palette: &[u32]) -> IntervalVector {
    let mut lower = Vec::with_capacity(n);
    let mut upper = Vec::with_capacity(n);
    for _ in 0..n {
        let a = *palette.choose(rng).unwrap();
        let b = *palette.choose(rng).unwrap();
        lower.push(a.min(b));
        upper.push(a.max(b));
    }
    IntervalVector::new(
        Vector::from_ticks(lower, top).unwrap(),
        Vector::from_ticks(upper, top).unwrap(),
    )
    .expect("bounds sorted per coordinate")
}

/// Random box satisfying the preconditions of the conformity analysis for
/// `a`: the lower bound stays strictly below the greatest constant
/// eigenvector, and every lower coordinate stays strictly below every upper
/// coordinate. Returns `None` when `a` admits no such box (its smallest row
/// maximum is 0).
pub fn interval_with_preconditions<R: Rng>(
    rng: &mut R,
    a: &Matrix,
    palette: &[u32],
) -> Option<IntervalVector> {
    let n = a.n();
    let top = a.top();
    let c = spectral::aggregates(a).min_row_max.ticks();
    let upper: Vec<u32> = (0..n).map(|_| *palette.choose(rng).unwrap()).collect();
    let cap = c.min(upper.iter().copied().min().unwrap());
    let low_choices: Vec<u32> = palette.iter().copied().filter(|&v| v < cap).collect();
    if low_choices.is_empty() {
        return None;
    }
    let lower: Vec<u32> = (0..n)
        .map(|_| *low_choices.choose(rng).unwrap())
        .collect();
    Some(
        IntervalVector::new(
            Vector::from_ticks(lower, top).unwrap(),
            Vector::from_ticks(upper, top).unwrap(),
        )
        .expect("lower drawn strictly below every upper coordinate"),
    )
}

/// Random matrix that is a level-`level` permutation by construction: a
/// random permutation gets entries in `[level, top]`, everything else stays
/// strictly below `level`. Requires `1 <= level <= top`.
pub fn level_perm_matrix<R: Rng>(rng: &mut R, n: usize, top: u32, level: u32) -> Matrix {
    assert!((1..=top).contains(&level), "level must be in 1..=top");
    let mut sigma: Vec<usize> = (0..n).collect();
    sigma.shuffle(rng);
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if sigma[i] == j {
                        rng.gen_range(level..=top)
                    } else {
                        rng.gen_range(0..level)
                    }
                })
                .collect()
        })
        .collect();
    Matrix::from_rows(rows, top).expect("entries drawn on the chain")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{gamma, level_permutation};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn palette_is_sorted_distinct_and_seeded() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let p = palette(&mut rng, 10, 5);
        assert_eq!(p.len(), 5);
        assert!(p.windows(2).all(|w| w[0] < w[1]));
        let mut rng2 = ChaCha8Rng::seed_from_u64(7);
        assert_eq!(p, palette(&mut rng2, 10, 5));
    }

    #[test]
    fn generated_instances_are_well_formed() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let p = palette(&mut rng, 10, 4);
            let a = matrix(&mut rng, 3, 10, &p);
            let x = interval(&mut rng, 3, 10, &p);
            assert_eq!(a.n(), 3);
            assert_eq!(x.len(), 3);
            for j in 0..3 {
                assert!(x.lower().ticks()[j] <= x.upper().ticks()[j]);
            }
        }
    }

    #[test]
    fn precondition_boxes_satisfy_preconditions() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let mut produced = 0;
        for _ in 0..200 {
            let p = palette(&mut rng, 10, 5);
            let a = matrix(&mut rng, 3, 10, &p);
            if let Some(x) = interval_with_preconditions(&mut rng, &a, &p) {
                produced += 1;
                let c = crate::spectral::aggregates(&a).min_row_max.ticks();
                let max_low = x.lower().max_coord().ticks();
                let min_up = x.upper().min_coord().ticks();
                assert!(x.lower().ticks().iter().all(|&v| v < c));
                assert!(max_low < min_up);
            }
        }
        assert!(produced > 50, "generator should usually succeed");
    }

    #[test]
    fn level_perm_matrices_are_level_permutations() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..50 {
            let level = rng.gen_range(1..=9);
            let a = level_perm_matrix(&mut rng, 4, 10, level);
            let alpha = crate::scalar::Scalar::new(level, 10).unwrap();
            assert!(level_permutation(&a, alpha).unwrap().is_some());
            // the construction pins the smallest row maximum to the
            // permutation entries, so the same holds at the instance level
            let g = gamma(&a, &Vector::constant(4, crate::scalar::Scalar::one(10))).unwrap();
            assert!(g.ticks() >= level);
            assert!(level_permutation(&a, g).unwrap().is_some());
        }
    }
}
