//! `osc`, the circle-valued `o` and a restriction of `w_β`.
//!
//! Canonical ladders below `ω^(ω²)` never oscillate, so the second half
//! uses two overridden ladders that do.

use std::path::Path;

use ordwalk::oscillation::{o_point, osc, osc_on_interval, w_restriction};
use ordwalk::verify::SampleSpec;
use ordwalk::walks::{lower_trace, weight};
use ordwalk::{ord, CSequence, Canonical, Ordinal, OverrideProvider};

fn largest<P: CSequence>(p: &P, sample: &[Ordinal]) -> ordwalk::Result<(Ordinal, Ordinal, usize)> {
    let mut best = (Ordinal::zero(), Ordinal::zero(), 0);
    for beta in sample {
        for alpha in sample.iter().filter(|a| *a < beta) {
            let o = osc(p, alpha, beta)?;
            if o > best.2 {
                best = (alpha.clone(), beta.clone(), o);
            }
        }
    }
    Ok(best)
}

fn main() -> ordwalk::Result<()> {
    let sample = SampleSpec::default().generate(&Canonical)?;
    let (_, _, o) = largest(&Canonical, &sample)?;
    println!("canonical ladders: largest osc on {} ordinals below w^3 is {o}", sample.len());

    let file = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/overrides/oscillating.json");
    let p = OverrideProvider::load(&file)?;
    let (alpha, beta) = (ord("w*2"), ord("w^2"));
    let lower = lower_trace(&p, &alpha, &beta)?;
    for z in &lower {
        println!("  at {z}: e_{{{alpha}}} = {}, e_{{{beta}}} = {}", weight(&p, &alpha, z)?, weight(&p, &beta, z)?);
    }
    println!("osc({alpha}, {beta}) = {}, o = {}", osc(&p, &alpha, &beta)?, o_point(&p, &alpha, &beta)?);
    let (left, right) = lower.split_at(1);
    let parts = osc_on_interval(&p, &alpha, &beta, left)? + osc_on_interval(&p, &alpha, &beta, right)?;
    println!("split after the minimum: {parts}");

    let sample = SampleSpec::below(ord("w^2*2"), 4).generate(&p)?;
    let (a, b, o) = largest(&p, &sample)?;
    println!("overridden ladders: largest osc below w^2*2 is osc({a}, {b}) = {o}");

    let support = [ord("1"), ord("w+7"), ord("w*2"), ord("w*2+3"), ord("w^2*5")];
    let w = w_restriction(&p, &ord("w^2+5"), &support)?;
    for (a, v) in &w.values {
        println!("w_{{w^2+5}}({a}) = {v}");
    }
    Ok(())
}
