//! Engineered pairs γ < δ whose modified walks agree below γ.

use ordwalk::forcing::{standard_scenarios, AgreementOutcome};

fn main() -> ordwalk::Result<()> {
    for s in standard_scenarios()? {
        let start = std::time::Instant::now();
        let outcome = s.run()?;
        let broken = s.mutated().run()?;
        let mutated = match &broken {
            AgreementOutcome::Fail { total, disagreements } => {
                format!("{total} disagreements, first {:?}", disagreements.first())
            }
            other => format!("{other:?}"),
        };
        println!("{} ({} < {}, m = {}):", s.name, s.gamma, s.delta, s.m);
        println!("  {outcome:?} in {:?}", start.elapsed());
        println!("  mutated: {mutated}");
    }
    Ok(())
}
