//! Hilbert series by counting and by Molien's formula, and the Hironaka
//! numerator over the primary invariants.

use invforge::hilbert::{hilbert_count, hironaka_numerator, molien};
use invforge::presentation::{hironaka_identity, primary_generators, secondary_generators};

fn main() -> invforge::Result<()> {
    let count = hilbert_count(3, 1, 2, 6);
    let mol = molien(3, 1, 2, 6)?;
    println!("count and Molien agree through degree 6: {}", count.agrees_with(&mol));
    print!("{}", count.to_text());

    let p = primary_generators(3, 1, 2);
    let num = hironaka_numerator(&molien(3, 1, 2, 12)?, &p.multidegrees());
    let inside: Vec<String> = num
        .restrict_box(&[6, 6])
        .into_iter()
        .filter(|(_, c)| c != &0.into())
        .map(|(a, c)| format!("{c}*t^{a:?}"))
        .collect();
    println!("numerator inside (6,6): {}", inside.join(" + "));

    let s = secondary_generators(3, 1, 2)?;
    println!("secondaries: {}", s.display().join(", "));
    println!("free over the primaries through degree 10: {}", hironaka_identity(3, 1, 2, &p, &s, 10));
    Ok(())
}
