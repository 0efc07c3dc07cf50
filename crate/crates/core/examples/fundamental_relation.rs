//! The fundamental relation of n+1 words and its vanishing under
//! evaluation, next to the trace identity of generic matrices.

use invforge::relations::{evaluate, fundamental_relation, verify_trace_identity};
use invforge::word::parse_word_list;
use invforge::Domain;

fn main() -> invforge::Result<()> {
    for (n, q, words) in [(1, 1, "x1,x2"), (2, 1, "x1,x2,x3"), (2, 2, "x1^2,x1*x2,x2^2"), (3, 1, "x1,x1,x2,x1*x2")] {
        let m = invforge::word::max_series_index(words);
        let ws = parse_word_list(words, m)?;
        let rel = fundamental_relation(&ws, n, q, Domain::Rational)?;
        println!("n={n} q={q} ({words}): {} terms, evaluates to zero: {}", rel.len(), evaluate(&rel, n).is_zero());
        if rel.len() <= 5 {
            println!("  {rel}");
        }
    }
    for n in 1..=3 {
        println!("trace identity for {n}x{n} matrices: {}", verify_trace_identity(n));
    }
    Ok(())
}
