//! Power sums, characteristic coefficients and the orbit-sum basis of one
//! multidegree component.

use invforge::invariants::{
    basis_transition, bracket, invariant_dimension, product_expand, sigma, to_orbit_basis, GroupContext, ProductMode,
};
use invforge::word::multisets_with_product;
use invforge::{Domain, Word};

fn main() -> invforge::Result<()> {
    let q = Domain::Rational;
    let (n, m) = (2, 2);
    let ctx = GroupContext::new(n, 1, m);
    let xy = Word::parse("x1*x2", m)?;

    println!("[x1*x2] = {}", bracket(&xy, n, q));
    println!("s2(x1*x2) = {}", sigma(&xy, 2, n, q));
    let p = &bracket(&Word::parse("x1", m)?, n, q) * &bracket(&Word::parse("x2", m)?, n, q);
    println!("[x1][x2] in orbit sums: {}", to_orbit_basis(&p, ctx)?);

    let alpha = [2, 1];
    println!("\ncomponent {alpha:?}, dimension {}", invariant_dimension(n, 1, &alpha));
    for ms in multisets_with_product(&alpha, 1, n) {
        let b = product_expand(&ms, ctx, ProductMode::Bracket, q)?;
        let s = product_expand(&ms, ctx, ProductMode::Sigma, q)?;
        println!("  {ms}: bracket {b} | sigma {s}");
    }
    for mode in [ProductMode::Bracket, ProductMode::Sigma] {
        let r = basis_transition(n, 1, &alpha, mode)?;
        println!("{mode:?}: triangular={} det={} unimodular={}", r.triangular, r.determinant, r.unimodular());
    }
    Ok(())
}
