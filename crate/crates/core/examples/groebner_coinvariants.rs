//! Gröbner bases: the Hilbert ideal and its top degree, and congruences
//! modulo the ideal of primary invariants.

use invforge::groebner::{buchberger, standard_monomials, tau, tau_formula, HilbertIdeal, MonomialOrder};
use invforge::invariants::bracket;
use invforge::presentation::primary_generators;
use invforge::relations::evaluate;
use invforge::{Domain, Poly, TracePoly};

fn main() -> invforge::Result<()> {
    for (n, q, m) in [(2, 1, 2), (2, 2, 1), (3, 1, 2)] {
        println!("(n,q,m)=({n},{q},{m}): computed {} formula {}", tau(n, q, m)?, tau_formula(n, q));
    }

    let gb = HilbertIdeal::new(2, 1, 2).groebner_basis(4)?;
    let std = standard_monomials(&gb, 4);
    let counts: Vec<usize> = std.iter().map(Vec::len).collect();
    println!("coinvariant standard monomials by degree for n=2, m=2: {counts:?}");

    let q = Domain::Rational;
    let gens: Vec<Poly> = primary_generators(3, 1, 2).words.iter().map(|w| bracket(w, 3, q)).collect();
    let gb = buchberger(&gens, &MonomialOrder::grevlex())?;
    println!("primary ideal basis size: {}", gb.len());
    for text in ["t(x1^2*x2^2) - 1/3*t(x1*x2)^2", "t(x1^2*x2^2)"] {
        let f = evaluate(&TracePoly::parse(text, 1, 2, q)?, 3);
        println!("{text} in <P>: {}", gb.contains(&f)?);
    }
    Ok(())
}
