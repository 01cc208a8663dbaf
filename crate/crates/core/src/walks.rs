//! Minimal walks.
//!
//! The walk from `β` down to `α ≤ β` repeatedly steps to `min(C_ξ ∖ α)`.
//! Along the way it records the upper trace (the ordinals visited), the
//! lower trace (running maxima of `C_ξ ∩ α`) and the step count `ρ₀`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::csequence::CSequence;
use crate::error::{Error, Result};
use crate::ordinal::Ordinal;

/// Result of one walk from `β` down to `α`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Trace {
    /// `β = β₀ > β₁ > … > β_{n−1}`; the next step would land on `α`.
    pub upper: Vec<Ordinal>,
    /// The lower trace, increasing.
    pub lower: Vec<Ordinal>,
    pub rho0: usize,
}

impl Trace {
    /// Immediate predecessor of `zeta` in the lower trace (`ζ^{L−}`).
    pub fn lower_predecessor(&self, zeta: &Ordinal) -> Option<&Ordinal> {
        let i = self.lower.binary_search(zeta).ok()?;
        i.checked_sub(1).map(|j| &self.lower[j])
    }
}

fn ensure_le(alpha: &Ordinal, beta: &Ordinal) -> Result<()> {
    if alpha > beta {
        return Err(Error::Order {
            lower: alpha.clone(),
            upper: beta.clone(),
        });
    }
    Ok(())
}

/// Computes both traces in one pass.
pub fn walk<P: CSequence + ?Sized>(p: &P, alpha: &Ordinal, beta: &Ordinal) -> Result<Trace> {
    ensure_le(alpha, beta)?;
    let mut upper = Vec::new();
    let mut lower: Vec<Ordinal> = Vec::new();
    let mut cur = beta.clone();
    while cur != *alpha {
        if let Some(m) = p.max_below(&cur, alpha)? {
            if lower.last().is_none_or(|top| m > *top) {
                lower.push(m);
            }
        }
        let next = p.min_above(&cur, alpha)?;
        upper.push(std::mem::replace(&mut cur, next));
    }
    let rho0 = upper.len();
    Ok(Trace { upper, lower, rho0 })
}

/// `U(α, β)` in walk order, from `β` downwards.
pub fn upper_trace<P: CSequence + ?Sized>(
    p: &P,
    alpha: &Ordinal,
    beta: &Ordinal,
) -> Result<Vec<Ordinal>> {
    walk(p, alpha, beta).map(|t| t.upper)
}

/// `L(α, β)`, increasing.
pub fn lower_trace<P: CSequence + ?Sized>(
    p: &P,
    alpha: &Ordinal,
    beta: &Ordinal,
) -> Result<Vec<Ordinal>> {
    walk(p, alpha, beta).map(|t| t.lower)
}

pub fn rho0<P: CSequence + ?Sized>(p: &P, alpha: &Ordinal, beta: &Ordinal) -> Result<usize> {
    walk(p, alpha, beta).map(|t| t.rho0)
}

/// Maximum weight `e_β(α) = max{|C_ξ ∩ α| : ξ ∈ U(α, β)}` for `α < β`.
pub fn weight<P: CSequence + ?Sized>(p: &P, beta: &Ordinal, alpha: &Ordinal) -> Result<usize> {
    if alpha >= beta {
        return Err(Error::StrictOrder {
            lower: alpha.clone(),
            upper: beta.clone(),
        });
    }
    let mut best = 0;
    let mut cur = beta.clone();
    while cur != *alpha {
        best = best.max(p.count_below(&cur, alpha)?);
        cur = p.min_above(&cur, alpha)?;
    }
    Ok(best)
}

/// `A < B` on finite sets of ordinals: `B` is nonempty and every element of
/// `A` lies below every element of `B`. In particular `∅ < B` for nonempty
/// `B`, while `A < ∅` never holds.
pub fn set_less(a: &[Ordinal], b: &[Ordinal]) -> bool {
    match (a.iter().max(), b.iter().min()) {
        (_, None) => false,
        (None, Some(_)) => true,
        (Some(top), Some(bottom)) => top < bottom,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Fact1Outcome {
    NotApplicable,
    Holds,
    Violated {
        actual: Vec<Ordinal>,
        predicted: Vec<Ordinal>,
    },
}

/// For `α ≤ γ ≤ β` with `L(γ,β) < L(α,γ)`, checks
/// `L(α,β) = L(α,γ) ∪ L(γ,β)`.
pub fn fact1_check<P: CSequence + ?Sized>(
    p: &P,
    alpha: &Ordinal,
    gamma: &Ordinal,
    beta: &Ordinal,
) -> Result<Fact1Outcome> {
    ensure_le(alpha, gamma)?;
    ensure_le(gamma, beta)?;
    let low = lower_trace(p, alpha, gamma)?;
    let high = lower_trace(p, gamma, beta)?;
    Ok(fact1_from_traces(&lower_trace(p, alpha, beta)?, &low, &high))
}

/// [`fact1_check`] on precomputed traces `L(α,β)`, `L(α,γ)`, `L(γ,β)`.
pub fn fact1_from_traces(whole: &[Ordinal], low: &[Ordinal], high: &[Ordinal]) -> Fact1Outcome {
    if !set_less(high, low) {
        return Fact1Outcome::NotApplicable;
    }
    // high < low, so concatenation is already increasing
    let predicted: Vec<Ordinal> = high.iter().chain(low).cloned().collect();
    if whole == predicted.as_slice() {
        Fact1Outcome::Holds
    } else {
        Fact1Outcome::Violated {
            actual: whole.to_vec(),
            predicted,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fact2Report {
    pub beta: Ordinal,
    pub depth: usize,
    /// Indices `n ≥ 1` where `L(C_β(n), β) ≠ {C_β(n−1)}`.
    pub exact_law_failures: Vec<usize>,
    /// For each target `ξ`, the least `n` such that every probed
    /// `α = C_β(k)` with `n ≤ k ≤ depth` has nonempty `L(α,β)` with
    /// `min L(α,β) > ξ`; `None` when even `C_β(depth)` fails.
    pub thresholds: Vec<(Ordinal, Option<usize>)>,
}

/// Probes `min L(α,β) → β` along the ladder of a limit `β`, using the
/// indices `0..=depth`.
pub fn fact2_probe<P: CSequence + ?Sized>(
    p: &P,
    beta: &Ordinal,
    targets: &[Ordinal],
    depth: usize,
) -> Result<Fact2Report> {
    if !beta.is_limit() {
        return Err(Error::NotLimit(beta.clone()));
    }
    let entries: Vec<Ordinal> = (0..=depth)
        .map(|n| p.fundamental(beta, n))
        .collect::<Result<_>>()?;
    let mins: Vec<Option<Ordinal>> = entries
        .iter()
        .map(|a| lower_trace(p, a, beta).map(|l| l.first().cloned()))
        .collect::<Result<_>>()?;
    let mut exact_law_failures = Vec::new();
    for n in 1..=depth {
        if lower_trace(p, &entries[n], beta)? != [entries[n - 1].clone()] {
            exact_law_failures.push(n);
        }
    }
    let mut thresholds = Vec::with_capacity(targets.len());
    for xi in targets {
        if xi >= beta {
            return Err(Error::StrictOrder {
                lower: xi.clone(),
                upper: beta.clone(),
            });
        }
        let last_bad = mins
            .iter()
            .rposition(|m| m.as_ref().is_none_or(|m| m <= xi));
        let threshold = match last_bad {
            None => Some(0),
            Some(k) if k < depth => Some(k + 1),
            Some(_) => None,
        };
        thresholds.push((xi.clone(), threshold));
    }
    Ok(Fact2Report {
        beta: beta.clone(),
        depth,
        exact_law_failures,
        thresholds,
    })
}

/// The sampled disagreement set `{α ∈ sample : e_γ(α) ≠ e_β(α)}` for
/// `γ < β`; elements of the sample not below `γ` are ignored.
pub fn coherence_report<P: CSequence + ?Sized>(
    p: &P,
    gamma: &Ordinal,
    beta: &Ordinal,
    sample: &[Ordinal],
) -> Result<Vec<Ordinal>> {
    if gamma >= beta {
        return Err(Error::StrictOrder {
            lower: gamma.clone(),
            upper: beta.clone(),
        });
    }
    let mut out = Vec::new();
    for a in sample.iter().filter(|a| *a < gamma) {
        if weight(p, gamma, a)? != weight(p, beta, a)? {
            out.push(a.clone());
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Preimage sizes of `e_β` on the sample: weight value ↦ number of sampled
/// `α < β` taking it.
pub fn weight_preimages<P: CSequence + ?Sized>(
    p: &P,
    beta: &Ordinal,
    sample: &[Ordinal],
) -> Result<BTreeMap<usize, usize>> {
    let mut out = BTreeMap::new();
    for a in sample.iter().filter(|a| *a < beta) {
        *out.entry(weight(p, beta, a)?).or_insert(0) += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::csequence::Canonical;
    use crate::ordinal::ord;

    fn ords(texts: &[&str]) -> Vec<Ordinal> {
        texts.iter().map(|t| ord(t)).collect()
    }

    const C: Canonical = Canonical;

    #[test]
    fn upper_trace_examples() {
        let a = ord("w^2+3");
        assert!(upper_trace(&C, &a, &a).unwrap().is_empty());
        assert_eq!(upper_trace(&C, &ord("3"), &ord("w")).unwrap(), ords(&["w"]));
        assert_eq!(upper_trace(&C, &ord("3"), &ord("5")).unwrap(), ords(&["5", "4"]));
        assert!(matches!(upper_trace(&C, &ord("5"), &ord("3")), Err(Error::Order { .. })));
    }

    #[test]
    fn lower_trace_examples() {
        let a = ord("w*3");
        assert!(lower_trace(&C, &a, &a).unwrap().is_empty());
        assert_eq!(lower_trace(&C, &ord("3"), &ord("w")).unwrap(), ords(&["2"]));
        assert!(lower_trace(&C, &ord("1"), &ord("w*2")).unwrap().is_empty());
        assert_eq!(lower_trace(&C, &ord("w+2"), &ord("w^2")).unwrap(), ords(&["w", "w+1"]));
    }

    #[test]
    fn rho0_examples() {
        assert_eq!(rho0(&C, &ord("w"), &ord("w")).unwrap(), 0);
        assert_eq!(rho0(&C, &ord("3"), &ord("w")).unwrap(), 1);
        assert_eq!(rho0(&C, &ord("3"), &ord("5")).unwrap(), 2);
    }

    #[test]
    fn weight_examples() {
        for a in ["0", "4", "w", "w^2+w*3+1"] {
            let a = ord(a);
            assert_eq!(weight(&C, &a.succ(), &a).unwrap(), 0);
        }
        assert_eq!(weight(&C, &ord("w"), &ord("3")).unwrap(), 2);
        assert_eq!(weight(&C, &ord("5"), &ord("3")).unwrap(), 0);
        assert!(weight(&C, &ord("3"), &ord("3")).is_err());
    }

    #[test]
    fn set_less_convention() {
        assert!(set_less(&[], &ords(&["1"])));
        assert!(!set_less(&ords(&["1"]), &[]));
        assert!(!set_less(&[], &[]));
        assert!(set_less(&ords(&["1", "2"]), &ords(&["3"])));
        assert!(!set_less(&ords(&["1", "3"]), &ords(&["3"])));
    }

    #[test]
    fn fact1_examples() {
        assert_eq!(
            fact1_check(&C, &ord("3"), &ord("w"), &ord("w*2")).unwrap(),
            Fact1Outcome::Holds
        );
        let a = ord("w+1");
        assert_eq!(fact1_check(&C, &a, &a, &ord("w^2")).unwrap(), Fact1Outcome::NotApplicable);
        assert_eq!(
            fact1_check(&C, &ord("2"), &ord("3"), &ord("5")).unwrap(),
            Fact1Outcome::NotApplicable
        );
        assert!(fact1_check(&C, &ord("5"), &ord("3"), &ord("w")).is_err());
    }

    #[test]
    fn vacuous_convention_counterexample() {
        // With "A < ∅ holds vacuously" the precondition would pass here and
        // the conclusion would fail.
        let high = lower_trace(&C, &ord("5"), &ord("w")).unwrap();
        let low = lower_trace(&C, &ord("3"), &ord("5")).unwrap();
        let whole = lower_trace(&C, &ord("3"), &ord("w")).unwrap();
        assert_eq!(high, ords(&["4"]));
        assert!(low.is_empty());
        assert_eq!(whole, ords(&["2"]));
        assert_ne!(whole, ords(&["4"]));
        assert_eq!(
            fact1_check(&C, &ord("3"), &ord("5"), &ord("w")).unwrap(),
            Fact1Outcome::NotApplicable
        );
    }

    #[test]
    fn fact2_examples() {
        let r = fact2_probe(&C, &ord("w"), &ords(&["0", "5"]), 10).unwrap();
        assert!(r.exact_law_failures.is_empty());
        assert_eq!(r.thresholds, vec![(ord("0"), Some(1)), (ord("5"), Some(6))]);
        for n in 1..10u64 {
            let a = C.fundamental(&ord("w"), n as usize).unwrap();
            assert_eq!(lower_trace(&C, &a, &ord("w")).unwrap(), vec![Ordinal::finite(n)]);
        }
        let r = fact2_probe(&C, &ord("w^2"), &ords(&["w"]), 8).unwrap();
        assert_eq!(r.thresholds, vec![(ord("w"), Some(2))]);
        assert!(fact2_probe(&C, &ord("w+1"), &[], 3).is_err());
        let r = fact2_probe(&C, &ord("w"), &ords(&["20"]), 5).unwrap();
        assert_eq!(r.thresholds, vec![(ord("20"), None)]);
    }

    #[test]
    fn coherence_examples() {
        let a = ord("w*2");
        assert!(coherence_report(&C, &a, &a, &[]).is_err());
        let d = coherence_report(&C, &ord("w"), &ord("w*2"), &ords(&["1", "2", "3"])).unwrap();
        assert!(d.is_empty());
        assert!(coherence_report(&C, &ord("w"), &ord("w^2"), &[]).unwrap().is_empty());
    }

    #[test]
    fn lower_predecessor_accessor() {
        let t = walk(&C, &ord("w+2"), &ord("w^2")).unwrap();
        assert_eq!(t.lower_predecessor(&ord("w+1")), Some(&ord("w")));
        assert_eq!(t.lower_predecessor(&ord("w")), None);
        assert_eq!(t.lower_predecessor(&ord("7")), None);
    }
}
