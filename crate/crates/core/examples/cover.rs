//! The proper cover pipeline on a finite restriction monoid.
use rsg::algebra::FinAlgebra;
use rsg::cover::build_proper_cover;

fn main() -> rsg::error::Result<()> {
    let path = std::env::args().nth(1);
    let text = match &path {
        Some(p) => std::fs::read_to_string(p).map_err(|e| rsg::error::Error::Input(e.to_string()))?,
        None => include_str!("data/chain2.json").to_string(),
    };
    let s = FinAlgebra::from_json(&text)?;
    let report = build_proper_cover(&s, 4)?;
    print!("{}", report.summary());
    Ok(())
}
