//! The max-min semiring on a bounded chain, and the vectors and matrices
//! built over it.
//!
//! ```text
//! cargo run -p maxmin --example semiring_basics
//! ```
//!
//! Scalars are exact integer ticks `0..=top` on a chain; addition is `max`,
//! multiplication is `min`. There are no approximate values anywhere: all
//! arithmetic is integer comparison.

use maxmin::{Matrix, Result, Scalar, Vector};

fn main() -> Result<()> {
    let top = 10;

    // a ⊕ b = max(a, b), a ⊗ b = min(a, b)
    let a = Scalar::new(3, top)?;
    let b = Scalar::new(7, top)?;
    println!("a = {a}, b = {b} on the chain [0, {top}]");
    println!("a (+) b = {}", a.oplus(b)?);
    println!("a (x) b = {}", a.otimes(b)?);
    assert_eq!(a.oplus(b)?, b);
    assert_eq!(a.otimes(b)?, a);

    // both operations select one of their operands: the semiring is a
    // lattice, and every expression evaluates to one of the input ticks
    let zero = Scalar::zero(top);
    let one = Scalar::one(top);
    assert_eq!(zero.oplus(a)?, a); // 0 is neutral for (+)
    assert_eq!(one.otimes(a)?, a); // top is neutral for (x)
    println!("neutral elements: 0 = {zero}, 1 = {one}");

    // matrix-vector product: (A (x) x)_i = max_j min(a_ij, x_j)
    let m = Matrix::from_rows(
        vec![
            vec![4, 4, 4, 5],
            vec![2, 2, 7, 2],
            vec![3, 8, 3, 3],
            vec![7, 3, 3, 3],
        ],
        top,
    )?;
    let x = Vector::from_ticks(vec![7, 9, 6, 5], top)?;
    let y = m.apply(&x)?;
    println!("A (x) {x} = {y}");
    assert_eq!(y.ticks(), &[5, 6, 8, 7]);

    // the product is monotone: growing x can only grow A (x) x
    let larger = Vector::from_ticks(vec![8, 10, 7, 6], top)?;
    let y2 = m.apply(&larger)?;
    assert!(y.ticks().iter().zip(y2.ticks()).all(|(&p, &q)| p <= q));
    println!("A (x) {larger} = {y2} (componentwise above the previous product)");

    // powers stabilize into a cycle because the entry pool is finite
    let square = m.matmul(&m)?;
    println!("A^2 first row: {:?}", square.row_ticks(0));

    // mixing chains with different tops is a context error, caught eagerly
    let foreign = Scalar::new(3, 99)?;
    assert!(a.oplus(foreign).is_err());
    println!("mixing chains [0, 10] and [0, 99] is rejected");

    Ok(())
}
