//! Lists the bundled instances and what kind of file each one is.

use phicut::corpus;
use phicut::text::Document;

fn main() -> phicut::Result<()> {
    for e in corpus::ENTRIES {
        let what = match corpus::document(e.name)? {
            Document::Algebra(a) => format!(
                "algebra, {} vertices, {} arrows, {} relations",
                a.quiver().vertex_count(),
                a.quiver().arrow_count(),
                a.generator_count()
            ),
            Document::Poset(p) => format!("poset on {} elements", p.len()),
            Document::TrivExt(t, diag) => format!(
                "trivial extension, {} arrows, {} cycles{}",
                t.quiver().arrow_count(),
                t.cycles().len(),
                match diag {
                    Some(d) if !d.is_clean() => ", supplied relations disagree",
                    _ => "",
                }
            ),
            Document::Matrix(m) => format!("matrix, {} arrows", m.n_arrows()),
        };
        println!("{:<22} {what}", e.name);
    }
    Ok(())
}
