//! Amitsur's formula, Newton relations and the relation family over the
//! integers.

use invforge::sigma::{
    amitsur_component, bounded_generators, characteristic_component_direct, generators_span, newton_polynomial,
    relation_family,
};
use invforge::Domain;

fn main() -> invforge::Result<()> {
    let f = amitsur_component(3, &[2, 1], 3)?;
    println!("s3(x+y) at (2,1): {f}");
    println!("matches direct expansion: {}", f.evaluate() == characteristic_component_direct(3, &[2, 1], 3));

    for r in 1..=3 {
        println!("e{r}(x^2) for n=3: {}", newton_polynomial(r, 2, 3)?);
    }

    let family = relation_family(2, 2, 5)?;
    let zero = family.iter().filter(|f| f.relation.evaluate().is_zero()).count();
    println!("family for n=2, m=2 up to degree 5: {} members, {zero} vanish", family.len());

    let gens = bounded_generators(3, 2);
    println!("{} bounded generators for n=3, m=2", gens.len());
    println!("they span the (3,3) component: {}", generators_span(3, &[3, 3], Domain::Rational)?);
    Ok(())
}
