//! Checks the structural lemmas on generated families.

use phicut::cutting::{incidence_cuts, CutOptions};
use phicut::families::{dn_tilde, four_cycles, shared_path_with_pendant, AnInstance, FourCycleLengths};
use phicut::graph_type::GraphType;

fn main() -> phicut::Result<()> {
    let all = CutOptions {
        include_hereditary: true,
        ..CutOptions::default()
    };

    // Ã-type: an end arrow whose cycle has length at least 3 is never cut.
    for n in 4..=7 {
        let (mut checked, mut bad) = (0, 0);
        for i in AnInstance::all(n)? {
            if !i.has_long_cycle() {
                continue;
            }
            checked += 1;
            let found = incidence_cuts(&i.presentation, &all, &[])?;
            for r in &found.reports {
                let forbidden = (r.sigma.contains(i.left_end) && i.left_cycle_len() >= 3)
                    || (r.sigma.contains(i.right_end) && i.right_cycle_len() >= 3);
                let designated = r.sigma.contains(i.left_added) || r.sigma.contains(i.right_added);
                if forbidden || (designated && r.graph_type != GraphType::A(n)) {
                    bad += 1;
                }
            }
        }
        println!("A_{n}: {checked} instances, {bad} violations");
    }

    for k in 0..3 {
        let t = dn_tilde(k)?;
        let found = incidence_cuts(&t, &CutOptions::default(), &[])?;
        let sets: Vec<String> = found.reports.iter().map(|r| r.sigma.display(t.quiver())).collect();
        println!("D̃ with {k} middle arrows: {} classes from {sets:?}", found.class_count);
    }

    let (t, lambda) = shared_path_with_pendant(2, 3, 2, 1)?;
    let found = incidence_cuts(&t, &all, &[])?;
    let hit = found.incidence_sets.iter().filter(|s| lambda.iter().any(|&a| s.contains(a))).count();
    println!("pendant: {} incidence cuts, {hit} through λ", found.incidence_sets.len());

    let t = four_cycles(FourCycleLengths::MINIMAL)?;
    let found = incidence_cuts(&t, &all, &[])?;
    for r in &found.reports {
        println!("four cycles: {} hereditary {}", r.sigma.display(t.quiver()), r.flags.hereditary);
    }
    Ok(())
}
