//! A second, deliberately naive implementation of the walk quantities.
//!
//! Everything here is written as direct recursion on the defining
//! equations and reads ladders through [`CSequence::fundamental`] alone,
//! scanning entries one by one. Nothing is shared with the main engine
//! beyond that call, so agreement between the two is meaningful evidence.

use crate::csequence::CSequence;
use crate::error::Result;
use crate::ordinal::Ordinal;

/// `C_β ∩ α` by scanning.
pub fn ladder_below<P: CSequence + ?Sized>(p: &P, beta: &Ordinal, alpha: &Ordinal) -> Result<Vec<Ordinal>> {
    if beta.is_successor() {
        let only = p.fundamental(beta, 0)?;
        return Ok(if only < *alpha { vec![only] } else { Vec::new() });
    }
    let mut out = Vec::new();
    for n in 0.. {
        let e = p.fundamental(beta, n)?;
        if e >= *alpha {
            break;
        }
        out.push(e);
    }
    Ok(out)
}

/// `min(C_β ∖ α)` by scanning.
pub fn step<P: CSequence + ?Sized>(p: &P, beta: &Ordinal, alpha: &Ordinal) -> Result<Ordinal> {
    let mut n = 0;
    loop {
        let e = p.fundamental(beta, n)?;
        if e >= *alpha {
            return Ok(e);
        }
        n += 1;
    }
}

/// `U(α,β) = U(α, min(C_β ∖ α)) ∪ {β}`, listed from `β` down.
pub fn upper<P: CSequence + ?Sized>(p: &P, alpha: &Ordinal, beta: &Ordinal) -> Result<Vec<Ordinal>> {
    if alpha == beta {
        return Ok(Vec::new());
    }
    let mut rest = upper(p, alpha, &step(p, beta, alpha)?)?;
    rest.insert(0, beta.clone());
    Ok(rest)
}

/// Records of the running maximum of `⋃_{i≤k} C_{β_i} ∩ α` along the walk,
/// with `record` the maximum seen so far.
fn records<P: CSequence + ?Sized>(
    p: &P,
    alpha: &Ordinal,
    beta: &Ordinal,
    record: Option<Ordinal>,
) -> Result<Vec<Ordinal>> {
    if alpha == beta {
        return Ok(Vec::new());
    }
    let here = ladder_below(p, beta, alpha)?.into_iter().max();
    let (new_record, emitted) = match (record, here) {
        (Some(r), Some(h)) if h > r => (Some(h.clone()), Some(h)),
        (None, Some(h)) => (Some(h.clone()), Some(h)),
        (r, _) => (r, None),
    };
    let mut rest = records(p, alpha, &step(p, beta, alpha)?, new_record)?;
    if let Some(e) = emitted {
        rest.insert(0, e);
    }
    Ok(rest)
}

/// `L(α,β)`, increasing.
pub fn lower<P: CSequence + ?Sized>(p: &P, alpha: &Ordinal, beta: &Ordinal) -> Result<Vec<Ordinal>> {
    records(p, alpha, beta, None)
}

/// `e_β(α) = max{|C_ξ ∩ α| : ξ ∈ U(α,β)}`.
pub fn weight<P: CSequence + ?Sized>(p: &P, beta: &Ordinal, alpha: &Ordinal) -> Result<usize> {
    if alpha == beta {
        return Ok(0);
    }
    let here = ladder_below(p, beta, alpha)?.len();
    Ok(here.max(weight(p, &step(p, beta, alpha)?, alpha)?))
}

/// `osc(α,β)` straight from the definition: `ζ` ranges over `L(α,β)`
/// without its minimum, `ζ⁻` is the previous element.
pub fn osc<P: CSequence + ?Sized>(p: &P, alpha: &Ordinal, beta: &Ordinal) -> Result<usize> {
    let l = lower(p, alpha, beta)?;
    let mut count = 0;
    for i in 1..l.len() {
        let (prev, zeta) = (&l[i - 1], &l[i]);
        let before = weight(p, alpha, prev)? <= weight(p, beta, prev)?;
        let after = weight(p, alpha, zeta)? > weight(p, beta, zeta)?;
        if before && after {
            count += 1;
        }
    }
    Ok(count)
}
