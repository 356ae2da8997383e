//! Arithmetic in the semidirect product of trees by the free monoid, the
//! submonoid R and the map x ↦ x↓.
use rsg::actions::FreeGroupAction;
use rsg::algebra::RestrictionAlgebra;
use rsg::free_restriction::FrElement;
use rsg::semidirect::Semidirect;
use rsg::words::Alphabet;

fn main() -> rsg::error::Result<()> {
    let sd = Semidirect::new(FreeGroupAction::new(Alphabet::new("ab")?));
    let x: FrElement = "({ε,a,B}, a)".parse()?;
    let y: FrElement = "({b,bA}, ab)".parse()?;
    println!("x·y = {}", sd.mul(&x, &y));
    println!("x⁺ = {}, x* = {}", sd.plus(&x), sd.star(&x));
    for z in [&x, &y] {
        println!("{z}: in R {}, down {}", sd.in_r(z)?, sd.down(z)?);
    }
    Ok(())
}
