//! Elements of the free restriction monoid as terms in the generators, and
//! their images in a finite restriction monoid.
use std::collections::HashMap;

use rsg::algebra::FinAlgebra;
use rsg::free_restriction::{FrElement, FreeRestriction};
use rsg::words::Alphabet;

fn main() -> rsg::error::Result<()> {
    let fr = FreeRestriction::new(Alphabet::new("ab")?);
    let s = FinAlgebra::from_json(include_str!("data/monoid3.json"))?;
    let map = HashMap::from([('a', s.index_of("a").unwrap()), ('b', s.index_of("e").unwrap())]);
    for lit in ["({ε,a}, a)", "({ε,a,ab,B}, ab)", "({ε,A}, ε)"] {
        let x: FrElement = lit.parse()?;
        let t = fr.decompose(&x)?;
        let image = fr.evaluate_morphism(&x, &s, &map)?;
        println!("{x} = {t} ↦ {}", s.name(image));
    }
    Ok(())
}
