//! A sampled fragment of T(o): verdicts, iso check, mutation and DOT.

use ordwalk::tree::{is_antichain, node, Fragment, TreeVariant};
use ordwalk::verify::SampleSpec;
use ordwalk::{ord, Canonical};

fn main() -> ordwalk::Result<()> {
    let p = Canonical;
    let sample = SampleSpec::below(ord("w^2*2"), 3).generate(&p)?;
    let builders = [ord("w^2"), ord("w^2+w"), ord("w^2*2"), ord("w^2*2+5")];
    let heights = [ord("w"), ord("w*3"), ord("w^2"), ord("w^2+w")];
    let fragment = Fragment::build(&p, &builders, &heights, &sample)?;
    println!("{} nodes over {} sampled coordinates", fragment.nodes.len(), fragment.sample.len());
    println!("iso: {:?}", fragment.iso_check());

    if let Some((i, z)) = fragment.mutation_target() {
        let broken = fragment.with_mutated_o(i, &z).expect("target holds a point");
        println!("after bumping o at node {i}, {z}: passed = {}", broken.iso_check().passed());
    }

    let level: Vec<_> = builders
        .iter()
        .map(|b| node(&p, b, &ord("w^2"), &sample))
        .collect::<ordwalk::Result<_>>()?;
    println!("level w^2 antichain: {:?}", is_antichain(&level)?);

    print!("{}", fragment.to_dot(TreeVariant::O));
    Ok(())
}
