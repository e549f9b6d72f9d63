//! Dynkin and extended Dynkin recognition of underlying graphs.

use phicut::corpus;
use phicut::graph_type::classify_graph;
use phicut::text::Document;

fn main() -> phicut::Result<()> {
    for e in corpus::ENTRIES {
        let q = match corpus::document(e.name)? {
            Document::Algebra(a) => a.quiver().clone(),
            Document::Poset(p) => phicut::poset::hasse(&p),
            _ => continue,
        };
        let g = classify_graph(&q);
        let kind = if g.is_dynkin() {
            "dynkin"
        } else if g.is_extended_dynkin() {
            "extended"
        } else {
            "other"
        };
        println!("{:<20} {:<8} {}", e.name, g, kind);
    }
    Ok(())
}
