//! Subtrees of the Cayley graph: span, meet, translation and DOT output.
use rsg::actions::{span, Tree};
use rsg::words::Word;

fn main() -> rsg::error::Result<()> {
    let w = |s: &str| s.parse::<Word>();
    let a = span([w("ab")?, w("B")?])?;
    let b: Tree = "{ε,a,aB}".parse()?;
    println!("A = {a}");
    println!("B = {b}");
    println!("A ∧ B = {}", a.meet(&b));
    println!("a⁻¹·A = {}  (contains ε: {})", a.act(&w("A")?), a.act(&w("A")?).in_ideal_y());
    print!("{}", a.meet(&b).to_dot());
    Ok(())
}
