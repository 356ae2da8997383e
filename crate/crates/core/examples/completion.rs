//! A factorisable completion of a finite semidirect product by adjoining a
//! new identity to the semilattice.
use rsg::semidirect::{adjoin_identity_new, FiniteMonoidAction};

fn main() -> rsg::error::Result<()> {
    let names = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let inst = FiniteMonoidAction::new(
        names(&["1", "f"]),
        vec![vec![0, 1], vec![1, 1]],
        names(&["1", "g"]),
        vec![vec![0, 1], vec![1, 0]],
        vec![vec![0, 1], vec![0, 1]],
    )?;
    let c = adjoin_identity_new(&inst, &[])?;
    println!("old table: {} elements, completion: {}", c.old.len(), c.f.algebra.len());
    println!("{:#?}", c.report());
    Ok(())
}
