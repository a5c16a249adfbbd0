//! Threshold digraphs and level permutations.
//!
//! For a threshold `h`, the digraph `G(A, h)` keeps an arc `(i, j)` whenever
//! `a_ij >= h`. A matrix is a *level-`alpha` permutation* when the entries
//! `>= alpha` form the graph of a permutation — equivalently, every row and
//! every column carries exactly one such entry — so those arcs decompose
//! into disjoint elementary cycles covering all nodes.
//!
//! Nodes are indexed from 0. Cycle lists are canonical: each cycle starts at
//! its smallest node and follows the permutation, and cycles are ordered by
//! their smallest member.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::matrix::{Matrix, Vector};
use crate::scalar::Scalar;

/// Arc set of `G(A, h)`, sorted lexicographically.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ThresholdDigraph {
    pub n: usize,
    pub threshold: Scalar,
    pub arcs: Vec<(usize, usize)>,
}

impl ThresholdDigraph {
    pub fn has_arc(&self, i: usize, j: usize) -> bool {
        self.arcs.binary_search(&(i, j)).is_ok()
    }
}

/// `G(A, h)`.
pub fn threshold_digraph(a: &Matrix, h: Scalar) -> Result<ThresholdDigraph> {
    Scalar::zero(a.top()).same_context(h)?;
    let n = a.n();
    let mut arcs = Vec::new();
    for i in 0..n {
        for (j, &t) in a.row_ticks(i).iter().enumerate() {
            if t >= h.ticks() {
                arcs.push((i, j));
            }
        }
    }
    Ok(ThresholdDigraph {
        n,
        threshold: h,
        arcs,
    })
}

/// A permutation together with its cycle decomposition.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CycleDecomposition {
    /// `sigma[i]` is the unique column with an above-level entry in row `i`.
    pub sigma: Vec<usize>,
    /// Canonically ordered cycles; singleton cycles are legal.
    pub cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    /// Index of the cycle containing each node.
    pub fn cycle_of(&self) -> Vec<usize> {
        let mut owner = vec![0; self.sigma.len()];
        for (c, cyc) in self.cycles.iter().enumerate() {
            for &v in cyc {
                owner[v] = c;
            }
        }
        owner
    }

    /// All arcs `(i, sigma(i))` grouped by cycle, in cycle order.
    pub fn arcs_by_cycle(&self) -> Vec<Vec<(usize, usize)>> {
        self.cycles
            .iter()
            .map(|cyc| {
                (0..cyc.len())
                    .map(|k| (cyc[k], cyc[(k + 1) % cyc.len()]))
                    .collect()
            })
            .collect()
    }
}

/// Decomposition of the level-`alpha` arcs if they form a permutation.
///
/// Returns `None` as soon as some row or column does not carry exactly one
/// entry `>= alpha`; the scan is a single pass over the matrix.
pub fn level_permutation(a: &Matrix, alpha: Scalar) -> Result<Option<CycleDecomposition>> {
    Scalar::zero(a.top()).same_context(alpha)?;
    let n = a.n();
    let mut sigma = vec![usize::MAX; n];
    let mut col_seen = vec![false; n];
    for i in 0..n {
        for (j, &t) in a.row_ticks(i).iter().enumerate() {
            if t >= alpha.ticks() {
                if sigma[i] != usize::MAX || col_seen[j] {
                    return Ok(None); // second entry in this row or column
                }
                sigma[i] = j;
                col_seen[j] = true;
            }
        }
        if sigma[i] == usize::MAX {
            return Ok(None); // row without an above-level entry
        }
    }
    // every row has exactly one image and no column repeats, so sigma is a
    // permutation; read off its cycles starting from each unvisited minimum
    let mut visited = vec![false; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if visited[start] {
            continue;
        }
        let mut cyc = Vec::new();
        let mut v = start;
        while !visited[v] {
            visited[v] = true;
            cyc.push(v);
            v = sigma[v];
        }
        cycles.push(cyc);
    }
    Ok(Some(CycleDecomposition { sigma, cycles }))
}

/// Greatest level at which a permutation structure can matter for the box:
/// `gamma = min(c(A), min_i upper_i)` where `c(A)` is the least row maximum.
pub fn gamma(a: &Matrix, upper: &Vector) -> Result<Scalar> {
    a.check_vector(upper)?;
    let c = (0..a.n())
        .map(|i| *a.row_ticks(i).iter().max().expect("n >= 1"))
        .min()
        .expect("n >= 1");
    let ticks = c.min(*upper.ticks().iter().min().expect("nonempty"));
    Scalar::new(ticks, a.top())
}

/// The constant vector at level [`gamma`]; always a fixed point of `A`.
pub fn gamma_vector(a: &Matrix, upper: &Vector) -> Result<Vector> {
    Ok(Vector::constant(a.n(), gamma(a, upper)?))
}
