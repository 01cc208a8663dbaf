//! Meeting dense sets one at a time, then many at once.

use ordwalk::forcing::{
    condition_leq, density_extend, density_member, generic_approx, ForcingCondition, ModifiedProvider,
    DEFAULT_SEARCH_BOUND,
};
use ordwalk::{ord, Canonical};

fn main() -> ordwalk::Result<()> {
    let p = Canonical;
    let mut q = ForcingCondition::new();
    for (alpha, n) in [("w", 0), ("w^2", 2), ("w^(w)", 1), ("w*2", 7)] {
        let alpha = ord(alpha);
        let next = density_extend(&p, &q, &alpha, n, DEFAULT_SEARCH_BOUND)?;
        assert!(condition_leq(&next, &q) && density_member(&p, &next, &alpha, n)?);
        println!("into d_({alpha},{n}): {}", serde_json::to_string(&next)?);
        q = next;
    }

    let omega = ord("w");
    for rounds in [10, 100, 1000] {
        let targets: Vec<_> = (0..rounds).map(|n| (omega.clone(), n)).collect();
        let x = generic_approx(&p, &targets, 42)?;
        let zeta = ModifiedProvider::new(p, x).ladder(&omega)?.zeta;
        println!("{rounds} targets: sup of the coded part of C^x_w = {zeta}");
    }
    Ok(())
}
