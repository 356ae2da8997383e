//! A partial action on a finite semilattice: the monoid M, the elements M_g
//! and meets of classes [A, g].
use rsg::algebra::RestrictionAlgebra;
use rsg::partial::{check_partial_action, ChiAction, MAlgebra, PartialAction};
use rsg::words::Word;

fn main() -> rsg::error::Result<()> {
    let pa = PartialAction::from_json(include_str!("data/pact_diamond.json"))?;
    let m = MAlgebra::new(&pa);
    let x = m.element(pa.y.index_of("p")?, "b".parse()?)?;
    let y = m.element(pa.y.index_of("q")?, "a".parse()?)?;
    println!("{} · {} = {}", m.format(&x), m.format(&y), m.format(&m.mul(&x, &y)));
    for g in ["a", "A", "ba", "aB"] {
        let g: Word = g.parse()?;
        println!("M_{g} = {}", pa.name(pa.m_identity(&g)?));
    }
    let chi = ChiAction::new(&pa);
    let (u, v) = (chi.class(pa.y.top(), &"a".parse()?), chi.class(pa.y.top(), &"B".parse()?));
    println!("{} ∧ {} = {}", chi.format(&u), chi.format(&v), chi.format(&chi.chi_meet(&u, &v)));
    let r = check_partial_action(&pa, 3)?;
    println!("all checks pass: {}", r.all_pass());
    Ok(())
}
