//! Literals, arithmetic and the natural-number coding.

use ordwalk::ordinal::{code, decode};
use ordwalk::{ord, Ordinal};

fn main() -> ordwalk::Result<()> {
    let a: Ordinal = "w^2*3+w+1".parse()?;
    let b = ord("w^(w)");
    println!("{a} < {b}: {}", a < b);
    println!("{a} + {b} = {}", &a + &b);
    println!("{b} + {a} = {}", &b + &a);
    println!("class of {a}: {:?}, pred = {:?}", a.classify(), a.pred());

    for text in ["w+w", "w^w", "w^1", "2+w", "w*0"] {
        match text.parse::<Ordinal>() {
            Ok(o) => println!("{text:>6} -> {o}"),
            Err(e) => println!("{text:>6} rejected: {e}"),
        }
    }

    for o in [ord("0"), ord("1"), ord("5"), ord("w"), ord("w+1"), ord("w^2"), a] {
        let c = code(&o);
        assert_eq!(decode(&c).as_ref(), Some(&o));
        println!("code({o}) = {c}");
    }
    println!("nested-array JSON of w^2+3: {}", serde_json::to_string(&ord("w^2+3"))?);
    Ok(())
}
