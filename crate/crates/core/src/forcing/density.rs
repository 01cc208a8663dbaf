use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::csequence::CSequence;
use crate::error::{Error, Result};
use crate::ordinal::{code, decode, Ordinal};

use super::condition::{CohenReal, ForcingCondition};

/// Default number of ladder positions [`density_extend`] tries.
pub const DEFAULT_SEARCH_BOUND: usize = 1_000_000;

fn ensure_limit(alpha: &Ordinal) -> Result<()> {
    if !alpha.is_limit() {
        return Err(Error::NotLimit(alpha.clone()));
    }
    Ok(())
}

/// Least successor in `[lo, hi)`, for `lo < hi`.
fn least_successor(lo: &Ordinal, hi: &Ordinal) -> Option<Ordinal> {
    if lo.is_successor() {
        return Some(lo.clone());
    }
    Some(lo.succ()).filter(|s| s < hi)
}

/// `p ∈ d_(α,n)`: some `m > n` in `dom(p)` holds the code of a successor in
/// `[C_α(m), C_α(m+1))`.
pub fn density_member<P: CSequence + ?Sized>(
    provider: &P,
    p: &ForcingCondition,
    alpha: &Ordinal,
    n: usize,
) -> Result<bool> {
    ensure_limit(alpha)?;
    for (&m, codes) in p.positions().range(n + 1..) {
        let lo = provider.fundamental(alpha, m)?;
        let hi = provider.fundamental(alpha, m + 1)?;
        let hit = codes
            .iter()
            .filter_map(decode)
            .any(|z| z.is_successor() && lo <= z && z < hi);
        if hit {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `q ⌢ {(m, {f_α(ζ)})}` for the least `m > max(max dom q, n)` whose ladder
/// interval contains a successor, `ζ` the least such successor.
pub fn density_extend<P: CSequence + ?Sized>(
    provider: &P,
    q: &ForcingCondition,
    alpha: &Ordinal,
    n: usize,
    bound: usize,
) -> Result<ForcingCondition> {
    ensure_limit(alpha)?;
    let start = q.max_position().map_or(n, |d| d.max(n)) + 1;
    let mut lo = provider.fundamental(alpha, start)?;
    for m in start..start.saturating_add(bound) {
        let hi = provider.fundamental(alpha, m + 1)?;
        if let Some(z) = least_successor(&lo, &hi) {
            return Ok(q.with(m, BTreeSet::from([code(&z)])));
        }
        lo = hi;
    }
    Err(Error::SearchBound {
        alpha: alpha.clone(),
        bound,
    })
}

/// Meets every `d_(α,n)` in `targets`, visiting them in an order shuffled
/// by `seed`, and returns the least real through the final condition.
pub fn generic_approx<P: CSequence + ?Sized>(
    provider: &P,
    targets: &[(Ordinal, usize)],
    seed: u64,
) -> Result<CohenReal> {
    let mut order: Vec<&(Ordinal, usize)> = targets.iter().collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut p = ForcingCondition::new();
    for (alpha, n) in order {
        p = density_extend(provider, &p, alpha, *n, DEFAULT_SEARCH_BOUND)?;
    }
    Ok(CohenReal::through(&p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::csequence::Canonical;
    use crate::forcing::condition_leq;
    use crate::ordinal::ord;

    const C: Canonical = Canonical;

    #[test]
    fn extend_empty_at_omega() {
        let p = density_extend(&C, &ForcingCondition::new(), &ord("w"), 0, 10).unwrap();
        // m = 1, interval [C_w(1), C_w(2)) = [2, 3)
        assert_eq!(p.positions().len(), 1);
        assert_eq!(p.get(1), Some(&BTreeSet::from([code(&ord("2"))])));
        assert!(density_member(&C, &p, &ord("w"), 0).unwrap());
        assert!(!density_member(&C, &p, &ord("w"), 1).unwrap());
    }

    #[test]
    fn extend_limit_intervals() {
        // C_{w^2}(m) = w*(m+1) is a limit; the least successor is its successor
        let q = ForcingCondition::new().with(5, BTreeSet::new());
        let p = density_extend(&C, &q, &ord("w^2"), 2, 10).unwrap();
        assert!(condition_leq(&p, &q));
        assert_eq!(p.get(6), Some(&BTreeSet::from([code(&ord("w*7+1"))])));
        let again = density_extend(&C, &p, &ord("w^2"), 2, 10).unwrap();
        assert!(density_member(&C, &again, &ord("w^2"), 2).unwrap());
    }

    #[test]
    fn negative_members() {
        let empty = ForcingCondition::new();
        assert!(!density_member(&C, &empty, &ord("w"), 0).unwrap());
        // codes of a limit and of an ordinal outside the interval
        let p = empty.with(3, BTreeSet::from([code(&ord("w")), code(&ord("9"))]));
        assert!(!density_member(&C, &p, &ord("w"), 0).unwrap());
        assert!(density_member(&C, &p, &ord("w+1"), 0).is_err());
        assert!(density_extend(&C, &p, &ord("5"), 0, 10).is_err());
    }

    #[test]
    fn generic_meets_targets() {
        assert!(generic_approx(&C, &[], 7).unwrap().is_empty());
        let w = ord("w");
        let targets: Vec<_> = (0..10).map(|k| (w.clone(), k)).collect();
        let x = generic_approx(&C, &targets, 42).unwrap();
        let p = ForcingCondition::from_positions(x.support().clone());
        for k in 0..10 {
            assert!(density_member(&C, &p, &w, k).unwrap());
        }
        assert_eq!(x, generic_approx(&C, &targets, 42).unwrap());
    }
}
