//! From a poset to its incidence algebra, and back.

use phicut::poset::{hasse, incidence_presentation, Poset};
use phicut::text::emit_algebra;

fn main() -> phicut::Result<()> {
    // The Boolean lattice on two atoms, given by its covering pairs only.
    let covers = [("0", "x"), ("0", "y"), ("x", "1"), ("y", "1")];
    let p = Poset::from_generating_relation(
        ["0", "x", "y", "1"],
        covers.iter().map(|&(a, b)| (a.to_string(), b.to_string())),
    )?;
    println!("relation: {:?}", p.relation());

    let q = hasse(&p);
    println!("hasse quiver has {} arrows, bypasses {:?}", q.arrow_count(), q.bypasses()?);

    let a = incidence_presentation(&p);
    print!("{}", emit_algebra(&a));
    let ps = a.path_space()?;
    println!(
        "dimension {}, incidence {}, hereditary {}",
        ps.total_dimension(),
        ps.is_incidence(),
        ps.is_hereditary()
    );

    let back = Poset::from_quiver(a.quiver())?;
    assert_eq!(back.relation(), p.relation());
    println!("dual has covers {:?}", p.dual().covers());
    Ok(())
}
