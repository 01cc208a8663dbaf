//! Upper and lower traces, ρ₀, weights and the two trace laws.

use ordwalk::verify::SampleSpec;
use ordwalk::walks::{coherence_report, fact1_check, fact2_probe, walk, weight, Fact1Outcome};
use ordwalk::{ord, Canonical};

fn main() -> ordwalk::Result<()> {
    let p = Canonical;
    for (a, b) in [("3", "5"), ("3", "w"), ("w+2", "w^2"), ("w*3+1", "w^3+w")] {
        let t = walk(&p, &ord(a), &ord(b))?;
        let show = |v: &[ordwalk::Ordinal]| v.iter().map(|o| o.to_string()).collect::<Vec<_>>().join(" ");
        println!("walk {b} -> {a}: U = [{}], L = [{}], rho0 = {}", show(&t.upper), show(&t.lower), t.rho0);
    }

    println!("e_w(3) = {}, e_5(3) = {}", weight(&p, &ord("w"), &ord("3"))?, weight(&p, &ord("5"), &ord("3"))?);

    // L(α,β) splits at γ when L(γ,β) < L(α,γ)
    println!("fact1(3, 5, w) = {:?}", fact1_check(&p, &ord("3"), &ord("5"), &ord("w"))?);
    let grid = SampleSpec::below(ord("w^2"), 3).generate(&p)?;
    let beta = ord("w^2+w");
    'search: for gamma in &grid {
        for alpha in grid.iter().filter(|a| *a < gamma) {
            let outcome = fact1_check(&p, alpha, gamma, &beta)?;
            let both = !walk(&p, alpha, gamma)?.lower.is_empty() && !walk(&p, gamma, &beta)?.lower.is_empty();
            if both && outcome == Fact1Outcome::Holds {
                println!("fact1({alpha}, {gamma}, {beta}) = {outcome:?}");
                println!("  L = {:?}", walk(&p, alpha, &beta)?.lower);
                break 'search;
            }
        }
    }

    let report = fact2_probe(&p, &ord("w^2"), &[ord("5"), ord("w"), ord("w*6+2")], 16)?;
    println!("exact-law failures below w^2: {:?}", report.exact_law_failures);
    for (xi, n) in &report.thresholds {
        println!("  min L(C_{{w^2}}(n), w^2) > {xi} from n = {n:?}");
    }

    let sample: Vec<_> = (0..40).map(ordwalk::Ordinal::finite).collect();
    println!("e_w and e_(w*2) differ on {:?}", coherence_report(&p, &ord("w"), &ord("w*2"), &sample)?);
    Ok(())
}
