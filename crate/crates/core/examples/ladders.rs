//! Canonical ladders, an overridden ladder and the axiom checker.

use ordwalk::csequence::check_ladder;
use ordwalk::{ord, CSequence, Canonical, OverrideProvider};

fn main() -> ordwalk::Result<()> {
    for alpha in ["w", "w*2", "w^2", "w^2+w", "w^3", "w^(w)", "w^(w+1)", "w+5"] {
        let a = ord(alpha);
        let n = if a.is_limit() { 5 } else { 1 };
        let entries: Vec<String> = (0..n)
            .map(|i| Canonical.fundamental(&a, i).map(|e| e.to_string()))
            .collect::<ordwalk::Result<_>>()?;
        println!("C_{{{alpha}}} = {}{}", entries.join(", "), if n > 1 { ", ..." } else { "" });
    }

    let probe = ord("w*3+7");
    println!("|C_{{w^2}} ∩ {probe}| = {}", Canonical.count_below(&ord("w^2"), &probe)?);

    let custom = OverrideProvider::from_json(r#"[{"alpha": "w^2", "prefix": ["5", "w+1", "w*4"]}]"#)?;
    let head: Vec<String> = (0..5)
        .map(|i| custom.fundamental(&ord("w^2"), i).map(|e| e.to_string()))
        .collect::<ordwalk::Result<_>>()?;
    println!("overridden C_{{w^2}} = {}, ...", head.join(", "));
    let probes = [ord("3"), ord("w*2"), ord("w*9+1")];
    println!("axioms: {:?}", check_ladder(&custom, &ord("w^2"), 16, &probes));

    let bad = OverrideProvider::from_json(r#"[{"alpha": "w", "prefix": ["3", "2"]}]"#);
    println!("decreasing prefix: {}", bad.unwrap_err());
    Ok(())
}
