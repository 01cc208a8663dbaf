use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::ordinal::{code, decode, Ordinal};

/// The injections `f_α : suc(α) → ω`, all cut from one global injection
/// `h = code` on successor ordinals. Distinct views agree exactly on their
/// common domain.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CoherentFamily;

impl CoherentFamily {
    /// `h(ζ)` for a successor `ζ`.
    pub fn global(&self, zeta: &Ordinal) -> Result<BigUint> {
        if !zeta.is_successor() {
            return Err(Error::NotSuccessor(zeta.clone()));
        }
        Ok(code(zeta))
    }

    /// `f_γ(ζ)`.
    pub fn value(&self, gamma: &Ordinal, zeta: &Ordinal) -> Result<BigUint> {
        if zeta >= gamma {
            return Err(Error::StrictOrder {
                lower: zeta.clone(),
                upper: gamma.clone(),
            });
        }
        self.global(zeta)
    }

    /// The successor below `γ` coded by `k`, if any.
    pub fn preimage(&self, gamma: &Ordinal, k: &BigUint) -> Option<Ordinal> {
        decode(k).filter(|z| z.is_successor() && z < gamma)
    }
}

pub fn family_value(gamma: &Ordinal, zeta: &Ordinal) -> Result<BigUint> {
    CoherentFamily.value(gamma, zeta)
}

/// `{ζ ∈ suc(γ) : f_γ(ζ) ≤ n}`, increasing.
pub fn level_set(gamma: &Ordinal, n: u64) -> Vec<Ordinal> {
    let mut out = Vec::new();
    let mut k = BigUint::default();
    let end = BigUint::from(n);
    while k <= end {
        if let Some(z) = CoherentFamily.preimage(gamma, &k) {
            out.push(z);
        }
        k += BigUint::one();
    }
    out.sort();
    out
}
