//! Isomorphism of bound quiver algebras, and the opposite algebra.

use phicut::corpus;
use phicut::iso::{find_isomorphism, isomorphic_up_to_opposite, IsoMode};
use phicut::text::Document;
use phicut::trivext::trivial_extension;

fn main() -> phicut::Result<()> {
    let Document::Algebra(a) = corpus::document("e8_solution_076")? else { unreachable!() };
    let op = a.opposite();
    let same = find_isomorphism(&a, &op, IsoMode::Ideal)?;
    println!("A ≅ A^op: {}", same.is_some());
    println!("A ≅ A^op up to opposite: {}", isomorphic_up_to_opposite(&a, &op, IsoMode::Ideal)?);

    // T(A)^op ≅ T(A^op)
    let t_op = trivial_extension(&a)?.opposite();
    let op_t = trivial_extension(&op)?;
    let iso = t_op.find_isomorphism(&op_t)?.expect("trivial extension commutes with opposite");
    let (vertices, arrows) = iso.describe(t_op.quiver(), op_t.quiver());
    println!("vertices {vertices:?}");
    println!("arrows {arrows:?}");
    Ok(())
}
