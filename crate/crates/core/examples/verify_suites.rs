//! Running the property suites and the pinned constants.

use ordwalk::verify::{run_suite, SampleSpec};
use ordwalk::Canonical;

fn main() -> ordwalk::Result<()> {
    let spec: SampleSpec = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "below:w^2*3:3".into())
        .parse()?;
    println!("sample: {spec}");
    for suite in ["facts", "weights", "oscillation", "iso", "forcing"] {
        let r = run_suite(&Canonical, suite, &spec)?;
        let pins = r.pins.iter().filter(|p| p.matched).count();
        println!(
            "{suite:>12}: passed={} cases={} failures={} pins={pins}/{}",
            r.passed,
            r.cases,
            r.failures.len(),
            r.pins.len()
        );
    }
    Ok(())
}
