//! Fixed points of `x -> A ⊗ x` and orbits of the iteration.
//!
//! Because the eigenvalue of interest is the top of the chain, eigenvectors
//! here are exactly the fixed points `A ⊗ x = x`. The iteration
//! `x, A⊗x, A²⊗x, ...` is monotone decreasing from the vector of row maxima
//! and reaches the greatest eigenvector after at most `n` steps; from an
//! arbitrary start it is ultimately periodic because coordinates only ever
//! take values already present in the matrix or the start vector.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::matrix::{Matrix, Vector};
use crate::scalar::Scalar;

/// Global aggregates of a matrix used throughout the eigenspace analysis.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Aggregates {
    /// Greatest entry of the matrix.
    pub max_entry: Scalar,
    /// Least row maximum: the greatest level `k` whose constant vector is a
    /// fixed point.
    pub min_row_max: Scalar,
    /// Vector of row maxima (the start of the greatest-eigenvector iteration).
    pub row_maxima: Vector,
    /// The constant vector at `min_row_max` — the greatest constant eigenvector.
    pub greatest_constant: Vector,
}

pub fn aggregates(a: &Matrix) -> Aggregates {
    let top = a.top();
    let row_max: Vec<u32> = (0..a.n())
        .map(|i| *a.row_ticks(i).iter().max().expect("n >= 1"))
        .collect();
    let c = *row_max.iter().min().expect("n >= 1");
    let m = *a.entry_ticks().iter().max().expect("n >= 1");
    Aggregates {
        max_entry: Scalar::new(m, top).expect("entry"),
        min_row_max: Scalar::new(c, top).expect("entry"),
        row_maxima: Vector::from_ticks(row_max, top).expect("entries"),
        greatest_constant: Vector::constant(a.n(), Scalar::new(c, top).expect("entry")),
    }
}

/// Greatest fixed point of `A`, together with the number of applications of
/// `A` that were needed before the iteration stabilised.
pub fn greatest_eigenvector_detailed(a: &Matrix) -> (Vector, usize) {
    let mut x = aggregates(a).row_maxima;
    for step in 0..a.n() {
        let next = a.apply(&x).expect("shape by construction");
        if next == x {
            return (x, step);
        }
        x = next;
    }
    (x, a.n())
}

/// Greatest fixed point `x⊕(A)`; every eigenvector is `<=` it.
pub fn greatest_eigenvector(a: &Matrix) -> Vector {
    greatest_eigenvector_detailed(a).0
}

/// Exact fixed-point test `A ⊗ x = x`.
pub fn is_eigenvector(a: &Matrix, x: &Vector) -> Result<bool> {
    Ok(&a.apply(x)? == x)
}

/// The ultimately periodic behaviour of one starting vector.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct OrbitSummary {
    /// Steps before the periodic part is entered.
    pub transient: usize,
    /// Length of the periodic part.
    pub period: usize,
    /// All distinct vectors visited: `x, A⊗x, ..., A^(transient+period-1)⊗x`.
    pub prefix: Vec<Vector>,
    /// Whether the orbit ends on a fixed point (period 1).
    pub hits_eigenvector: bool,
}

/// Iterate `A` from `start` until a vector repeats.
pub fn orbit(a: &Matrix, start: &Vector) -> Result<OrbitSummary> {
    a.check_vector(start)?;
    let mut seen: HashMap<Vector, usize> = HashMap::new();
    let mut prefix = Vec::new();
    let mut x = start.clone();
    loop {
        if let Some(&first) = seen.get(&x) {
            let period = prefix.len() - first;
            return Ok(OrbitSummary {
                transient: first,
                period,
                prefix,
                hits_eigenvector: period == 1,
            });
        }
        seen.insert(x.clone(), prefix.len());
        prefix.push(x.clone());
        x = a.apply(&x)?;
    }
}
