//! Finite restriction semigroups from JSON: identities, congruence closure
//! and quotients.
use rsg::algebra::{finite_congruence_closure, quotient_finite, FinAlgebra};

fn main() -> rsg::error::Result<()> {
    let s = FinAlgebra::from_json(include_str!("data/chain3.json"))?;
    println!("{}", s.check_identities());
    println!("proper {}, factorisable {}", s.is_proper(), s.is_factorisable());
    let e = s.index_of("e").expect("present");
    let f = s.index_of("f").expect("present");
    let rho = finite_congruence_closure(&s, &[(e, f)]);
    println!("blocks {:?}", rho.blocks());
    let q = quotient_finite(&s, &rho)?;
    println!("{}", q.algebra.to_json());
    Ok(())
}
