//! Free reduction, alternating factorizations and the free abelian normal form.
use rsg::actions::{verify_nice_factorization, FreeAbelianAction, FreeGroupAction};
use rsg::words::{abelian_normal_form, nice_factorization_free, pretty_factorization, AbelianElement, Alphabet};

fn main() -> rsg::error::Result<()> {
    let al = Alphabet::new("ab")?;
    for s in ["abBA", "aBa", "aabBBA", "ε"] {
        let w = al.parse_word(s)?;
        let f = nice_factorization_free(&w);
        let nice = verify_nice_factorization(&FreeGroupAction::new(al.clone()), &w)?;
        println!("{s:>8} = {:<6} factors {:<14} nice {nice}", w.to_string(), pretty_factorization(&f));
    }
    let g: AbelianElement = "a^2b^-3".parse()?;
    let (u, t) = abelian_normal_form(&g);
    println!("{g} = ({u})⁻¹ ({t}), nice {}", verify_nice_factorization(&FreeAbelianAction, &g)?);
    Ok(())
}
