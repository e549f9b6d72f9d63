//! Enumerating cutting sets and keeping those that give incidence algebras.

use phicut::corpus;
use phicut::cutting::{incidence_cuts, CutOptions};
use phicut::text::{emit_algebra, Document};

fn main() -> phicut::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "d4til_trivext".into());
    let Document::TrivExt(t, _) = corpus::document(&name)? else {
        return Err(phicut::Error::Contract(format!("{name} is not a trivial extension")));
    };
    let opts = CutOptions {
        include_hereditary: true,
        ..CutOptions::default()
    };
    let found = incidence_cuts(&t, &opts, &corpus::solutions()?)?;
    println!(
        "{}: {} cutting sets, {} incidence, {} classes",
        name,
        found.cutting_sets.len(),
        found.incidence_sets.len(),
        found.class_count
    );
    for r in &found.reports {
        println!(
            "{} class {} hereditary {} graph {} matches {}",
            r.sigma.display(t.quiver()),
            r.iso_class,
            r.flags.hereditary,
            r.graph_type,
            r.matches.as_deref().unwrap_or("-")
        );
        if !r.flags.hereditary {
            print!("{}", emit_algebra(&r.quotient));
        }
    }
    Ok(())
}
