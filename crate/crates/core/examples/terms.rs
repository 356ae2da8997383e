//! Towers, their closed form, the tower built from a nice factorization and
//! the rewriting of sandwiched terms into R.
use rsg::actions::{FreeGroupAction, Tree};
use rsg::free_restriction::FrElement;
use rsg::semidirect::Semidirect;
use rsg::terms::{build_term, eval_term, onedir_params, two_transform, yuck_construct, Term, Unary};
use rsg::words::{Alphabet, Word};

fn main() -> rsg::error::Result<()> {
    let sd = Semidirect::new(FreeGroupAction::new(Alphabet::new("ab")?));
    let e = |s: &str| s.parse::<FrElement>();
    let t = build_term(1, Unary::Plus);
    let consts = [e("({ε,b}, a)")?, e("({a,aa}, ab)")?, e("({ε,B}, b)")?];
    let p = onedir_params(&sd.action, &t, &consts)?;
    println!("{t}: U = {}, V = {}, g = {}", p.u, p.v, p.g);
    let c = e("({ε,a}, a)")?;
    println!("value at {c}: {}", eval_term(&sd, &t, &c, &consts)?);

    let (u, v): (Tree, Tree) = ("{ε,b}".parse()?, "{ε,B}".parse()?);
    let g: Word = "aBa".parse()?;
    let (tower, beta) = yuck_construct(&sd.action, &u, &v, &g, Unary::Plus)?;
    println!("tower for g = {g}: {tower}");
    for b in &beta {
        println!("  {b}  in R: {}", sd.in_r(b)?);
    }

    let s: Term = "y (y0 x z0)^* z".parse()?;
    let alpha = [e("({ε,A}, a)")?, e("({b}, b)")?, e("({ε,a}, ab)")?, e("({ε,a,b}, b)")?];
    let (s2, beta) = two_transform(&sd, &s, &alpha)?;
    println!("{s} ↦ {s2}");
    println!("  down of old value {}", sd.down(&eval_term(&sd, &s, &c, &alpha)?)?);
    println!("  new value         {}", eval_term(&sd, &s2, &c, &beta)?);
    Ok(())
}
