//! Bounded saturation of a relation on trees into a translation-invariant
//! congruence, with its stabilization flag.
use rsg::actions::Tree;
use rsg::chains::saturate_epsilon;
use rsg::words::Alphabet;

fn main() -> rsg::error::Result<()> {
    let al = Alphabet::new("a")?;
    let gens: Vec<(Tree, Tree)> = vec![("{ε}".parse()?, "{ε,a}".parse()?)];
    for bound in 2..=4 {
        let eps = saturate_epsilon(&al, &gens, bound)?;
        println!("bound {bound}: {} classes, stabilized {}", eps.congruence.num_blocks(), eps.stabilized);
        for b in eps.nontrivial_blocks() {
            let names: Vec<String> = b.iter().map(|t| t.to_string()).collect();
            println!("  {}", names.join(" ~ "));
        }
    }
    Ok(())
}
