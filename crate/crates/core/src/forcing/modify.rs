use std::collections::BTreeMap;

use serde::Serialize;

use crate::csequence::CSequence;
use crate::error::{Error, Result};
use crate::ordinal::{decode, Ordinal};

use super::condition::CohenReal;

/// `C^x_α`: the base ladder above `ζ^x_α` together with the coded successors
/// `D^x_α(n)` picked out of each interval `[C_α(n), C_α(n+1))`.
///
/// Only the finite head `⋃ D^x_α(n)` is stored; the tail is read from the
/// base provider starting at index `tail_start`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModifiedLadder {
    pub alpha: Ordinal,
    pub zeta: Ordinal,
    #[serde(serialize_with = "parts_json")]
    pub d_parts: BTreeMap<usize, Vec<Ordinal>>,
    #[serde(skip)]
    head: Vec<Ordinal>,
    #[serde(skip)]
    tail_start: Option<usize>,
}

fn parts_json<S: serde::Serializer>(
    parts: &BTreeMap<usize, Vec<Ordinal>>,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_map(parts.iter().map(|(n, v)| (n.to_string(), v)))
}

impl ModifiedLadder {
    /// `C^x_α(n)`.
    pub fn entry<P: CSequence + ?Sized>(&self, base: &P, n: usize) -> Result<Ordinal> {
        if let Some(e) = self.head.get(n) {
            return Ok(e.clone());
        }
        match self.tail_start {
            Some(t) => base.fundamental(&self.alpha, t + n - self.head.len()),
            None => Err(Error::LadderIndex {
                alpha: self.alpha.clone(),
                index: n,
            }),
        }
    }

    /// `|C^x_α ∩ ξ|`.
    pub fn count_below<P: CSequence + ?Sized>(&self, base: &P, xi: &Ordinal) -> Result<usize> {
        let k = self.head.partition_point(|e| e < xi);
        match self.tail_start {
            Some(t) if k == self.head.len() => Ok(k + base.count_below(&self.alpha, xi)? - t),
            _ => Ok(k),
        }
    }

    /// The first `k` entries of `C^x_α`.
    pub fn merged<P: CSequence + ?Sized>(&self, base: &P, k: usize) -> Result<Vec<Ordinal>> {
        (0..k).map(|n| self.entry(base, n)).collect()
    }
}

/// Successors coded in `x`, grouped by position.
pub(crate) type Decoded = BTreeMap<usize, Vec<Ordinal>>;

pub(crate) fn decode_real(x: &CohenReal) -> Decoded {
    x.support()
        .iter()
        .map(|(m, codes)| {
            let zs: Vec<Ordinal> = codes
                .iter()
                .filter_map(decode)
                .filter(Ordinal::is_successor)
                .collect();
            (*m, zs)
        })
        .filter(|(_, zs)| !zs.is_empty())
        .collect()
}

pub(crate) fn modify_decoded<P: CSequence + ?Sized>(
    base: &P,
    decoded: &Decoded,
    alpha: &Ordinal,
) -> Result<ModifiedLadder> {
    if alpha.is_zero() {
        return Err(Error::ZeroLadder);
    }
    if let Some(pred) = alpha.pred() {
        return Ok(ModifiedLadder {
            alpha: alpha.clone(),
            zeta: Ordinal::zero(),
            d_parts: BTreeMap::new(),
            head: vec![pred],
            tail_start: None,
        });
    }
    let mut d_parts = BTreeMap::new();
    for (&n, zs) in decoded {
        let lo = base.fundamental(alpha, n)?;
        let hi = base.fundamental(alpha, n + 1)?;
        let mut part: Vec<Ordinal> = zs.iter().filter(|z| lo <= **z && **z < hi).cloned().collect();
        if !part.is_empty() {
            part.sort();
            d_parts.insert(n, part);
        }
    }
    // parts come from disjoint increasing intervals, so concatenation is sorted
    let head: Vec<Ordinal> = d_parts.values().flatten().cloned().collect();
    let (zeta, tail_start) = match head.last() {
        None => (Ordinal::zero(), 0),
        Some(top) => (top.clone(), base.count_below(alpha, &top.succ())?),
    };
    Ok(ModifiedLadder {
        alpha: alpha.clone(),
        zeta,
        d_parts,
        head,
        tail_start: Some(tail_start),
    })
}

pub fn modify<P: CSequence + ?Sized>(base: &P, x: &CohenReal, alpha: &Ordinal) -> Result<ModifiedLadder> {
    modify_decoded(base, &decode_real(x), alpha)
}

/// The ladder system `⟨C^x_α⟩` over a base provider.
#[derive(Clone, Debug)]
pub struct ModifiedProvider<P> {
    base: P,
    real: CohenReal,
    decoded: Decoded,
}

impl<P: CSequence> ModifiedProvider<P> {
    pub fn new(base: P, real: CohenReal) -> Self {
        let decoded = decode_real(&real);
        ModifiedProvider { base, real, decoded }
    }

    pub fn base(&self) -> &P {
        &self.base
    }

    pub fn real(&self) -> &CohenReal {
        &self.real
    }

    pub fn ladder(&self, alpha: &Ordinal) -> Result<ModifiedLadder> {
        modify_decoded(&self.base, &self.decoded, alpha)
    }
}

pub fn modified_provider<P: CSequence>(base: P, x: CohenReal) -> ModifiedProvider<P> {
    ModifiedProvider::new(base, x)
}

impl<P: CSequence> CSequence for ModifiedProvider<P> {
    fn fundamental(&self, alpha: &Ordinal, n: usize) -> Result<Ordinal> {
        self.ladder(alpha)?.entry(&self.base, n)
    }

    fn count_below(&self, alpha: &Ordinal, xi: &Ordinal) -> Result<usize> {
        if alpha.is_limit() && xi >= alpha {
            return Err(Error::UnboundedIntersection {
                alpha: alpha.clone(),
                bound: xi.clone(),
            });
        }
        self.ladder(alpha)?.count_below(&self.base, xi)
    }
}
