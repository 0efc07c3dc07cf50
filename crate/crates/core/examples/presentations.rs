//! Finite presentations: all short relations, a minimal set, and the
//! dimension check that detects a missing relation.

use invforge::presentation::{finite_presentation, minimize_presentation, verify_presentation};

fn main() -> invforge::Result<()> {
    let full = finite_presentation(3, 1, 2)?;
    println!("full: {} generators, {} relations", full.generators.len(), full.relations.len());
    let min = minimize_presentation(&full)?;
    print!("{min}");

    let report = verify_presentation(&min, 8)?;
    println!("verified through degree 8: {} ({} components)", report.passed(), report.components.len());
    for i in 0..min.relations.len() {
        let cut = verify_presentation(&min.without_relation(i), 8)?;
        println!("without relation {i}: first mismatch at {:?}", cut.mismatches.first());
    }
    println!("{}", serde_json::to_string(&min.to_json()["generators"]).expect("json"));
    Ok(())
}
