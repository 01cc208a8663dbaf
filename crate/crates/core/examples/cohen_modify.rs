//! Ladders rebuilt from a finitely supported real.

use std::collections::BTreeSet;

use ordwalk::forcing::{modify, CohenReal, ModifiedProvider};
use ordwalk::ordinal::code;
use ordwalk::walks::walk;
use ordwalk::{ord, CSequence, Canonical};

fn main() -> ordwalk::Result<()> {
    let alpha = ord("w^2");
    // one coded successor in [C(1), C(2)) and one in [C(3), C(4))
    let x = CohenReal::empty()
        .with(1, BTreeSet::from([code(&ord("w*2+3")), code(&ord("17"))]))
        .with(3, BTreeSet::from([code(&ord("w*4+1")), code(&ord("w*4+9"))]));
    let ladder = modify(&Canonical, &x, &alpha)?;
    println!("zeta = {}, parts = {:?}", ladder.zeta, ladder.d_parts);
    println!("C^x_{{w^2}} starts {:?}", ladder.merged(&Canonical, 6)?);

    let empty = modify(&Canonical, &CohenReal::empty(), &alpha)?;
    println!("empty real keeps the base: {:?}", empty.merged(&Canonical, 4)?);

    let p = ModifiedProvider::new(Canonical, x);
    for n in 0..4 {
        println!("C^x(w^2)({n}) = {}", p.fundamental(&alpha, n)?);
    }
    let t = walk(&p, &ord("w*4+5"), &ord("w^2*2"))?;
    println!("walk over C^x: U = {:?}, L = {:?}", t.upper, t.lower);
    Ok(())
}
