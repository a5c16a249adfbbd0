//! Vectors, square matrices and interval boxes over the chain.
//!
//! A matrix acts on a column vector by `(A ⊗ x)_i = max_j min(a_ij, x_j)`;
//! matrix product and powers are defined the same way. Storage is dense
//! row-major tick counts; every container keeps the `top` of its chain and
//! all entries of one container share it by construction.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawVector", into = "RawVector")]
pub struct Vector {
    ticks: Vec<u32>,
    top: u32,
}

#[derive(Serialize, Deserialize)]
struct RawVector {
    ticks: Vec<u32>,
    top: u32,
}

impl From<Vector> for RawVector {
    fn from(v: Vector) -> Self {
        RawVector {
            ticks: v.ticks,
            top: v.top,
        }
    }
}

impl TryFrom<RawVector> for Vector {
    type Error = Error;
    fn try_from(raw: RawVector) -> Result<Self> {
        Vector::from_ticks(raw.ticks, raw.top)
    }
}

impl Vector {
    pub fn from_ticks(ticks: impl Into<Vec<u32>>, top: u32) -> Result<Self> {
        let ticks = ticks.into();
        if top == 0 {
            return Err(Error::ZeroTop);
        }
        if ticks.is_empty() {
            return Err(Error::Empty);
        }
        if let Some(&bad) = ticks.iter().find(|&&t| t > top) {
            return Err(Error::TickOutOfRange {
                value: bad as u64,
                top,
            });
        }
        Ok(Vector { ticks, top })
    }

    pub fn from_scalars(scalars: &[Scalar]) -> Result<Self> {
        let first = *scalars.first().ok_or(Error::Empty)?;
        for s in scalars {
            first.same_context(*s)?;
        }
        Ok(Vector {
            ticks: scalars.iter().map(|s| s.ticks()).collect(),
            top: first.top(),
        })
    }

    /// Constant vector with every coordinate equal to `value`.
    pub fn constant(len: usize, value: Scalar) -> Self {
        Vector {
            ticks: vec![value.ticks(); len],
            top: value.top(),
        }
    }

    pub fn len(&self) -> usize {
        self.ticks.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty vectors
    }

    pub fn top(&self) -> u32 {
        self.top
    }

    pub fn ticks(&self) -> &[u32] {
        &self.ticks
    }

    pub fn get(&self, i: usize) -> Scalar {
        Scalar::new(self.ticks[i], self.top).expect("entry validated at construction")
    }

    /// Copy with coordinate `i` replaced by `value` (same chain required).
    pub fn with_coord(&self, i: usize, value: Scalar) -> Result<Self> {
        if value.top() != self.top {
            return Err(Error::ContextMismatch {
                left: self.top,
                right: value.top(),
            });
        }
        let mut ticks = self.ticks.clone();
        ticks[i] = value.ticks();
        Ok(Vector {
            ticks,
            top: self.top,
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = Scalar> + '_ {
        let top = self.top;
        self.ticks
            .iter()
            .map(move |&t| Scalar::new(t, top).expect("validated"))
    }

    pub fn max_coord(&self) -> Scalar {
        let t = *self.ticks.iter().max().expect("nonempty");
        Scalar::new(t, self.top).expect("validated")
    }

    pub fn min_coord(&self) -> Scalar {
        let t = *self.ticks.iter().min().expect("nonempty");
        Scalar::new(t, self.top).expect("validated")
    }

    fn same_shape(&self, other: &Vector) -> Result<()> {
        if self.top != other.top {
            return Err(Error::ContextMismatch {
                left: self.top,
                right: other.top,
            });
        }
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(())
    }

    /// Componentwise order `self ≤ other`.
    pub fn le(&self, other: &Vector) -> Result<bool> {
        self.same_shape(other)?;
        Ok(self
            .ticks
            .iter()
            .zip(&other.ticks)
            .all(|(a, b)| a <= b))
    }

    /// Strict componentwise order `self < other` in every coordinate.
    pub fn lt_strict(&self, other: &Vector) -> Result<bool> {
        self.same_shape(other)?;
        Ok(self.ticks.iter().zip(&other.ticks).all(|(a, b)| a < b))
    }

    /// Componentwise join (max).
    pub fn join(&self, other: &Vector) -> Result<Vector> {
        self.same_shape(other)?;
        Ok(Vector {
            ticks: self
                .ticks
                .iter()
                .zip(&other.ticks)
                .map(|(a, b)| *a.max(b))
                .collect(),
            top: self.top,
        })
    }

    /// Componentwise meet (min).
    pub fn meet(&self, other: &Vector) -> Result<Vector> {
        self.same_shape(other)?;
        Ok(Vector {
            ticks: self
                .ticks
                .iter()
                .zip(&other.ticks)
                .map(|(a, b)| *a.min(b))
                .collect(),
            top: self.top,
        })
    }

    /// Scalar multiple `alpha ⊗ self`, i.e. every coordinate capped at `alpha`.
    pub fn scale(&self, alpha: Scalar) -> Result<Vector> {
        if alpha.top() != self.top {
            return Err(Error::ContextMismatch {
                left: self.top,
                right: alpha.top(),
            });
        }
        Ok(Vector {
            ticks: self
                .ticks
                .iter()
                .map(|&t| t.min(alpha.ticks()))
                .collect(),
            top: self.top,
        })
    }

    /// The same point of the chain expressed with a `factor`-times finer tick.
    pub fn rescale(&self, factor: u32) -> Vector {
        Vector {
            ticks: self.ticks.iter().map(|&t| t * factor).collect(),
            top: self.top * factor,
        }
    }

    /// Inverse of [`rescale`](Self::rescale) when every coordinate is on a
    /// coarse tick; `None` otherwise.
    pub fn try_downscale(&self, factor: u32) -> Option<Vector> {
        if self.top % factor != 0 || self.ticks.iter().any(|t| t % factor != 0) {
            return None;
        }
        Some(Vector {
            ticks: self.ticks.iter().map(|t| t / factor).collect(),
            top: self.top / factor,
        })
    }
}

impl std::fmt::Display for Vector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (k, t) in self.ticks.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix", into = "RawMatrix")]
pub struct Matrix {
    n: usize,
    ticks: Vec<u32>, // row-major, n * n entries
    top: u32,
}

#[derive(Serialize, Deserialize)]
struct RawMatrix {
    rows: Vec<Vec<u32>>,
    top: u32,
}

impl From<Matrix> for RawMatrix {
    fn from(m: Matrix) -> Self {
        RawMatrix {
            rows: (0..m.n)
                .map(|i| m.ticks[i * m.n..(i + 1) * m.n].to_vec())
                .collect(),
            top: m.top,
        }
    }
}

impl TryFrom<RawMatrix> for Matrix {
    type Error = Error;
    fn try_from(raw: RawMatrix) -> Result<Self> {
        Matrix::from_rows(raw.rows, raw.top)
    }
}

impl Matrix {
    pub fn from_rows(rows: Vec<Vec<u32>>, top: u32) -> Result<Self> {
        if top == 0 {
            return Err(Error::ZeroTop);
        }
        let n = rows.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut ticks = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare {
                    rows: n,
                    row: i,
                    cols: row.len(),
                });
            }
            for &t in row {
                if t > top {
                    return Err(Error::TickOutOfRange {
                        value: t as u64,
                        top,
                    });
                }
                ticks.push(t);
            }
        }
        Ok(Matrix { n, ticks, top })
    }

    /// Identity of the matrix semiring: `top` on the diagonal, `0` elsewhere.
    pub fn identity(n: usize, top: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty);
        }
        if top == 0 {
            return Err(Error::ZeroTop);
        }
        let mut ticks = vec![0u32; n * n];
        for i in 0..n {
            ticks[i * n + i] = top;
        }
        Ok(Matrix { n, ticks, top })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn top(&self) -> u32 {
        self.top
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        Scalar::new(self.ticks[i * self.n + j], self.top).expect("validated")
    }

    pub fn row_ticks(&self, i: usize) -> &[u32] {
        &self.ticks[i * self.n..(i + 1) * self.n]
    }

    pub fn entry_ticks(&self) -> &[u32] {
        &self.ticks
    }

    pub(crate) fn check_vector(&self, x: &Vector) -> Result<()> {
        if self.top != x.top() {
            return Err(Error::ContextMismatch {
                left: self.top,
                right: x.top(),
            });
        }
        if x.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: x.len(),
            });
        }
        Ok(())
    }

    /// `A ⊗ x`.
    pub fn apply(&self, x: &Vector) -> Result<Vector> {
        self.check_vector(x)?;
        let xs = x.ticks();
        let out = (0..self.n)
            .map(|i| {
                self.row_ticks(i)
                    .iter()
                    .zip(xs)
                    .map(|(&a, &v)| a.min(v))
                    .max()
                    .expect("n >= 1")
            })
            .collect::<Vec<_>>();
        Ok(Vector {
            ticks: out,
            top: self.top,
        })
    }

    /// `A ⊗ B`.
    pub fn matmul(&self, other: &Matrix) -> Result<Matrix> {
        if self.top != other.top {
            return Err(Error::ContextMismatch {
                left: self.top,
                right: other.top,
            });
        }
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let n = self.n;
        let mut ticks = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut best = 0u32;
                for k in 0..n {
                    best = best.max(self.ticks[i * n + k].min(other.ticks[k * n + j]));
                }
                ticks[i * n + j] = best;
            }
        }
        Ok(Matrix {
            n,
            ticks,
            top: self.top,
        })
    }

    /// `A^k` with `A^0` the identity.
    pub fn power(&self, k: usize) -> Matrix {
        let mut acc = Matrix::identity(self.n, self.top).expect("n >= 1");
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.matmul(&base).expect("same shape");
            }
            base = base.matmul(&base).expect("same shape");
            k >>= 1;
        }
        acc
    }

    pub fn rescale(&self, factor: u32) -> Matrix {
        Matrix {
            n: self.n,
            ticks: self.ticks.iter().map(|&t| t * factor).collect(),
            top: self.top * factor,
        }
    }
}

impl std::fmt::Display for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let width = self
            .ticks
            .iter()
            .map(|t| t.to_string().len())
            .max()
            .unwrap_or(1);
        for i in 0..self.n {
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>width$}", self.ticks[i * self.n + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Interval box `X = [lower, upper]`, a product of coordinate intervals.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawBox", into = "RawBox")]
pub struct IntervalVector {
    lower: Vector,
    upper: Vector,
}

#[derive(Serialize, Deserialize)]
struct RawBox {
    lower: Vector,
    upper: Vector,
}

impl From<IntervalVector> for RawBox {
    fn from(x: IntervalVector) -> Self {
        RawBox {
            lower: x.lower,
            upper: x.upper,
        }
    }
}

impl TryFrom<RawBox> for IntervalVector {
    type Error = Error;
    fn try_from(raw: RawBox) -> Result<Self> {
        IntervalVector::new(raw.lower, raw.upper)
    }
}

impl IntervalVector {
    pub fn new(lower: Vector, upper: Vector) -> Result<Self> {
        lower.same_shape(&upper)?;
        for i in 0..lower.len() {
            if lower.ticks()[i] > upper.ticks()[i] {
                return Err(Error::InvertedBounds {
                    index: i,
                    lower: lower.ticks()[i],
                    upper: upper.ticks()[i],
                });
            }
        }
        Ok(IntervalVector { lower, upper })
    }

    /// The whole space `[0, top]^n`.
    pub fn full(n: usize, top: u32) -> Result<Self> {
        Ok(IntervalVector {
            lower: Vector::from_ticks(vec![0; n], top)?,
            upper: Vector::from_ticks(vec![top; n], top)?,
        })
    }

    pub fn lower(&self) -> &Vector {
        &self.lower
    }

    pub fn upper(&self) -> &Vector {
        &self.upper
    }

    pub fn len(&self) -> usize {
        self.lower.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn top(&self) -> u32 {
        self.lower.top()
    }

    pub fn contains(&self, x: &Vector) -> Result<bool> {
        Ok(self.lower.le(x)? && x.le(&self.upper)?)
    }

    /// First coordinate where `x` leaves the box, if any.
    pub fn first_violation(&self, x: &Vector) -> Result<Option<usize>> {
        self.lower.same_shape(x)?;
        for i in 0..x.len() {
            let t = x.ticks()[i];
            if t < self.lower.ticks()[i] || t > self.upper.ticks()[i] {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    pub fn rescale(&self, factor: u32) -> IntervalVector {
        IntervalVector {
            lower: self.lower.rescale(factor),
            upper: self.upper.rescale(factor),
        }
    }
}

impl std::fmt::Display for IntervalVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}]", self.lower, self.upper)
    }
}
