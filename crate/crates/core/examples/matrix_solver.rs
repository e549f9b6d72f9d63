//! The arrow-by-relation-and-cycle matrix, solved completely and by the
//! original reference-arrow heuristic.

use phicut::corpus;
use phicut::matrix::{encode, heuristic, solve};
use phicut::text::{emit_matrix, Document};

fn main() -> phicut::Result<()> {
    let Document::Matrix(m) = corpus::document("e7_matrix")? else { unreachable!() };
    for s in solve(&m) {
        println!("solve: {}", m.describe(&s));
    }
    let run = heuristic(&m);
    for a in run.answer_sets() {
        println!("heuristic: {}", m.describe(&a));
    }
    for msg in &run.messages {
        println!("heuristic says: {msg}");
    }

    // The same kind of table, built from a presentation.
    let Document::TrivExt(t, _) = corpus::document("e8_trivext")? else { unreachable!() };
    let m = encode(&t)?;
    print!("{}", emit_matrix(&m));
    println!("{} solutions", solve(&m).len());
    Ok(())
}
