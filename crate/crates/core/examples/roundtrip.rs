//! Cutting and re-extending gives the trivial extension back.

use phicut::corpus;
use phicut::cutting::{cut, enumerate_cutting_sets, roundtrip, RoundTrip};
use phicut::text::Document;

fn main() -> phicut::Result<()> {
    for e in corpus::ENTRIES {
        let Document::TrivExt(t, _) = corpus::document(e.name)? else {
            continue;
        };
        let mut tally = [0usize; 3];
        for s in enumerate_cutting_sets(&t) {
            let incidence = match cut(&t, &s) {
                Ok(a) => a.path_space()?.is_incidence(),
                Err(_) => false,
            };
            if !incidence {
                continue;
            }
            let i = match roundtrip(&t, &s)? {
                RoundTrip::Holds => 0,
                RoundTrip::Fails => 1,
                RoundTrip::NotApplicable => 2,
            };
            tally[i] += 1;
        }
        println!("{:<22} holds {} fails {} n/a {}", e.name, tally[0], tally[1], tally[2]);
    }
    Ok(())
}
