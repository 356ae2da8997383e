//! Every lemma suite with a small sample count.
use rsg::verify::{run_suite, VerifyConfig, SUITES};

fn main() -> rsg::error::Result<()> {
    let cfg = VerifyConfig {
        samples: 20,
        ..VerifyConfig::default()
    };
    for name in SUITES {
        println!("{}", run_suite(name, &cfg)?);
    }
    Ok(())
}
