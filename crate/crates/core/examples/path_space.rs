//! Exact path-space computations for a bound quiver algebra.

use phicut::corpus;
use phicut::text::{parse_algebra, Document};

fn main() -> phicut::Result<()> {
    // A square without its commutativity relation is hereditary but not incidence.
    let free = parse_algebra("arrow a 0 x\narrow b 0 y\narrow c x 1\narrow d y 1\n")?;
    let Document::Algebra(square) = corpus::document("incidence_square")? else {
        unreachable!()
    };
    for (name, a) in [("free square", &free), ("commuting square", &square)] {
        let ps = a.path_space()?;
        let q = a.quiver();
        let (s, t) = (q.vertex_id("0").unwrap(), q.vertex_id("1").unwrap());
        println!(
            "{name}: dim e0 A e1 = {}, total {}, schurian {}, incidence {}, gentle {}",
            ps.dimension(s, t),
            ps.total_dimension(),
            ps.is_schurian(),
            ps.is_incidence(),
            a.is_gentle()
        );
        let ac = q.path_by_names(&["a", "c"])?;
        let bd = q.path_by_names(&["b", "d"])?;
        println!("  a c = b d ? {}", ps.paths_equal(&ac, &bd)?);
    }
    Ok(())
}
