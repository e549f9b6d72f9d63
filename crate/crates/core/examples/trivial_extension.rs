//! The trivial extension presentation of a schurian path-equal algebra.

use phicut::corpus;
use phicut::text::{emit_trivext, Document};
use phicut::trivext::{maximal_paths, trivial_extension};

fn main() -> phicut::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "e7_solution_01".into());
    let Document::Algebra(a) = corpus::document(&name)? else {
        return Err(phicut::Error::Contract(format!("{name} is not an algebra")));
    };
    let q = a.quiver();
    for c in maximal_paths(&a)? {
        println!("# {} closes {}", c.added_arrow, q.path_string(&c.representative));
    }
    let t = trivial_extension(&a)?;
    print!("{}", emit_trivext(&t));
    println!(
        "# {} cycles, {} + {} + {} relations",
        t.cycles().len(),
        t.rel1().len(),
        t.rel2().len(),
        t.rel3().len()
    );
    Ok(())
}
