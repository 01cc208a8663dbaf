//! Ladder systems (C-sequences).
//!
//! A ladder system assigns to every ordinal `α > 0` a set `C_α ⊆ α`: the
//! singleton `{β}` when `α = β + 1`, and a strictly increasing cofinal
//! ω-sequence when `α` is a limit. Ladders are infinite, so providers answer
//! queries by index and never materialize them.

mod canonical;
mod overrides;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ordinal::Ordinal;

pub use canonical::Canonical;
pub use overrides::{OverrideProvider, OverrideSpec};

/// Upper bound on entries visited by a linear ladder scan.
pub const SCAN_LIMIT: usize = 1 << 22;

/// A ladder system queried by index.
///
/// Only [`fundamental`](CSequence::fundamental) is required. The remaining
/// queries default to a linear scan; providers with a closed form for
/// `|C_α ∩ ξ|` should override [`count_below`](CSequence::count_below).
pub trait CSequence: Send + Sync {
    /// The `n`-th entry `C_α(n)` in increasing order.
    fn fundamental(&self, alpha: &Ordinal, n: usize) -> Result<Ordinal>;

    /// `|C_α ∩ ξ|`. Defined when `α` is a successor or `ξ < α`.
    fn count_below(&self, alpha: &Ordinal, xi: &Ordinal) -> Result<usize> {
        scan_count(self, alpha, xi)
    }

    /// The finite set `C_α ∩ ξ`, increasing.
    fn intersect_below(&self, alpha: &Ordinal, xi: &Ordinal) -> Result<Vec<Ordinal>> {
        let k = self.count_below(alpha, xi)?;
        (0..k).map(|n| self.fundamental(alpha, n)).collect()
    }

    /// `min(C_α ∖ ξ)` for `ξ < α`.
    fn min_above(&self, alpha: &Ordinal, xi: &Ordinal) -> Result<Ordinal> {
        if xi >= alpha {
            return Err(Error::StrictOrder {
                lower: xi.clone(),
                upper: alpha.clone(),
            });
        }
        let k = self.count_below(alpha, xi)?;
        self.fundamental(alpha, k)
    }

    /// `max(C_α ∩ ξ)`, or `None` when the intersection is empty.
    fn max_below(&self, alpha: &Ordinal, xi: &Ordinal) -> Result<Option<Ordinal>> {
        match self.count_below(alpha, xi)? {
            0 => Ok(None),
            k => self.fundamental(alpha, k - 1).map(Some),
        }
    }
}

impl<P: CSequence + ?Sized> CSequence for &P {
    fn fundamental(&self, alpha: &Ordinal, n: usize) -> Result<Ordinal> {
        (**self).fundamental(alpha, n)
    }

    fn count_below(&self, alpha: &Ordinal, xi: &Ordinal) -> Result<usize> {
        (**self).count_below(alpha, xi)
    }
}

/// `|C_α ∩ ξ|` by walking the ladder from index 0, using only
/// [`CSequence::fundamental`].
pub fn scan_count<P: CSequence + ?Sized>(p: &P, alpha: &Ordinal, xi: &Ordinal) -> Result<usize> {
    if alpha.is_zero() {
        return Err(Error::ZeroLadder);
    }
    if let Some(pred) = alpha.pred() {
        return Ok(usize::from(pred < *xi));
    }
    if xi >= alpha {
        return Err(Error::UnboundedIntersection {
            alpha: alpha.clone(),
            bound: xi.clone(),
        });
    }
    for n in 0..SCAN_LIMIT {
        if p.fundamental(alpha, n)? >= *xi {
            return Ok(n);
        }
    }
    Err(Error::ScanLimit {
        alpha: alpha.clone(),
        limit: SCAN_LIMIT,
    })
}

/// A broken ladder invariant found by [`check_ladder`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum LadderViolation {
    SuccessorClause {
        #[serde(with = "crate::ordinal::literal")]
        alpha: Ordinal,
    },
    NotIncreasing {
        index: usize,
    },
    NotBelow {
        index: usize,
    },
    CountMismatch {
        #[serde(with = "crate::ordinal::literal")]
        xi: Ordinal,
        reported: usize,
        scanned: usize,
    },
    NotCofinal {
        #[serde(with = "crate::ordinal::literal")]
        xi: Ordinal,
    },
    Query {
        message: String,
    },
}

impl From<Error> for LadderViolation {
    fn from(e: Error) -> Self {
        LadderViolation::Query {
            message: e.to_string(),
        }
    }
}

/// Checks the ladder of `alpha` against the C-sequence axioms: the
/// successor clause, strict increase and boundedness of the first `depth`
/// entries, and, for each probe `ξ < α`, that `C_α ∩ ξ` is finite, agrees
/// with an independent scan, and is followed by an entry `≥ ξ`.
pub fn check_ladder<P: CSequence + ?Sized>(
    p: &P,
    alpha: &Ordinal,
    depth: usize,
    probes: &[Ordinal],
) -> Result<(), LadderViolation> {
    if alpha.is_zero() {
        return Err(Error::ZeroLadder.into());
    }
    if let Some(pred) = alpha.pred() {
        let ok = p.fundamental(alpha, 0)? == pred && p.fundamental(alpha, 1).is_err();
        return if ok {
            Ok(())
        } else {
            Err(LadderViolation::SuccessorClause {
                alpha: alpha.clone(),
            })
        };
    }
    let mut prev: Option<Ordinal> = None;
    for index in 0..depth {
        let entry = p.fundamental(alpha, index)?;
        if entry >= *alpha {
            return Err(LadderViolation::NotBelow { index });
        }
        if prev.as_ref().is_some_and(|q| *q >= entry) {
            return Err(LadderViolation::NotIncreasing { index });
        }
        prev = Some(entry);
    }
    for xi in probes.iter().filter(|xi| *xi < alpha) {
        let reported = p.count_below(alpha, xi)?;
        let scanned = scan_count(p, alpha, xi)?;
        if reported != scanned {
            return Err(LadderViolation::CountMismatch {
                xi: xi.clone(),
                reported,
                scanned,
            });
        }
        let above = p.min_above(alpha, xi)?;
        if above < *xi || above >= *alpha {
            return Err(LadderViolation::NotCofinal { xi: xi.clone() });
        }
    }
    Ok(())
}
