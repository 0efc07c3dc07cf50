//! The multilinear basis over small prime fields, and an invariant that is
//! indecomposable in characteristic 2.

use invforge::invariants::{bracket, is_decomposable, GroupContext};
use invforge::relations::multilinear_basis_check;
use invforge::{Domain, Word};

fn main() -> invforge::Result<()> {
    for p in [2, 3] {
        let d = Domain::prime(p)?;
        for (n, q, m) in [(2, 1, 3), (3, 1, 4), (2, 2, 2)] {
            let r = multilinear_basis_check(n, q, m, d)?;
            println!("F{p} n={n} q={q} m={m}: dimension {} products {} basis {}", r.dimension, r.products, r.basis_confirmed);
        }
    }
    let ctx = GroupContext::new(2, 1, 2);
    let xy = Word::parse("x1*x2", 2)?;
    for d in [Domain::prime(2)?, Domain::Rational] {
        println!("[x1*x2] decomposable over {d}: {}", is_decomposable(&bracket(&xy, 2, d), ctx)?);
    }
    Ok(())
}
