//! Rewriting trace polynomials to products of at most n power sums, with
//! certificates, and expressing long generators through short ones.

use invforge::relations::{kernel_membership, normal_form, reduce_generator, GeneratorReducer};
use invforge::{Domain, TracePoly, Word};

fn main() -> invforge::Result<()> {
    let q = Domain::Rational;
    let (n, m) = (2, 3);
    let tp = TracePoly::parse("t(x1)*t(x2)*t(x3)", 1, m, q)?;
    let (nf, cert) = normal_form(&tp, n);
    println!("{tp}  ->  {nf}");
    let back = tp.try_sub(&nf)?;
    println!("certificate with {} step(s) reproduces the difference: {}", cert.len(), back == cert.combination(n, 1, m, q)?);

    let rel = TracePoly::parse("t(x1)*t(x2)*t(x3) - t(x1*x2)*t(x3) - t(x1*x3)*t(x2) - t(x2*x3)*t(x1) + 2*t(x1*x2*x3)", 1, m, q)?;
    println!("in kernel: {}", kernel_membership(&rel, n)?.0);

    let w = Word::parse("x1*x2*x3", m)?;
    println!("t({w}) = {}", reduce_generator(&w, n, 1, q)?);
    let mut reducer = GeneratorReducer::new(n, 1, q)?;
    let long = Word::parse("x1^2*x2^2", 2)?;
    println!("t({long}) over generators of degree <= 2: {}", reducer.expand_word(&long)?);
    Ok(())
}
