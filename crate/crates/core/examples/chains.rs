//! Random chains in the semidirect product pulled down into R.
use rand::SeedableRng;
use rand_pcg::Pcg64;
use rsg::actions::FreeGroupAction;
use rsg::chains::{random_chain, transform_chain, verify_chain, ChainShape};
use rsg::semidirect::Semidirect;
use rsg::words::Alphabet;

fn main() -> rsg::error::Result<()> {
    let sd = Semidirect::new(FreeGroupAction::new(Alphabet::new("ab")?));
    let mut rng = Pcg64::seed_from_u64(11);
    for _ in 0..5 {
        let ch = random_chain(&mut rng, &sd, &ChainShape::default());
        let out = transform_chain(&sd, &ch)?;
        let terms: Vec<String> = out.links.iter().map(|l| l.term.to_string()).collect();
        println!("{} → {} via [{}]: {}", ch.s, ch.t, terms.join(" | "), verify_chain(&sd, &out)?);
    }
    Ok(())
}
