//! Structural Gödel coding of ordinals by natural numbers.
//!
//! With the Cantor pairing `π(x, y) = (x + y)(x + y + 1)/2 + y`:
//!
//! * a term `ω^e·c` codes as `π(code(e), c − 1)`;
//! * a term list `t₁, …, t_k` codes as `1 + π(t₁, code(t₂, …, t_k))`, the
//!   empty list as `0`.
//!
//! Every natural decodes to exactly one hereditary term list, so `code` is a
//! bijection between canonical ordinals and the naturals whose decoded list
//! happens to be a Cantor normal form. `decode` rejects the rest.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use super::{Ordinal, Term};

fn pair(x: &BigUint, y: &BigUint) -> BigUint {
    let s = x + y;
    (&s * (&s + 1u32)) / 2u32 + y
}

fn unpair(z: &BigUint) -> (BigUint, BigUint) {
    let w = ((z * 8u32 + 1u32).sqrt() - 1u32) / 2u32;
    let t = (&w * (&w + 1u32)) / 2u32;
    let y = z - t;
    let x = w - &y;
    (x, y)
}

pub fn code(a: &Ordinal) -> BigUint {
    a.terms.iter().rev().fold(BigUint::zero(), |rest, t| {
        let head = pair(&code(&t.exponent), &BigUint::from(t.coefficient - 1));
        pair(&head, &rest) + 1u32
    })
}

/// Inverse of [`code`]. `None` when the decoded term list is not a Cantor
/// normal form, or when a coefficient exceeds `u64`.
pub fn decode(n: &BigUint) -> Option<Ordinal> {
    let mut terms: Vec<Term> = Vec::new();
    let mut rest = n.clone();
    while !rest.is_zero() {
        let (head, tail) = unpair(&(rest - BigUint::one()));
        let (e, c) = unpair(&head);
        let exponent = decode(&e)?;
        let coefficient = c.to_u64()?.checked_add(1)?;
        if terms.last().is_some_and(|prev| exponent >= prev.exponent) {
            return None;
        }
        terms.push(Term {
            exponent,
            coefficient,
        });
        rest = tail;
    }
    Some(Ordinal { terms })
}
