use crate::error::{Error, Result};
use crate::ordinal::{Ordinal, OrdinalClass};

use super::CSequence;

/// Wainer-style fundamental sequences.
///
/// Writing a limit as `α = γ + ω^e`:
///
/// * `e = d + 1`: `C_α(n) = γ + ω^d·(n+1)`;
/// * `e` limit: `C_α(n) = γ + ω^{C_e(n)}`.
///
/// Successors get `C_{β+1} = {β}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Canonical;

impl CSequence for Canonical {
    fn fundamental(&self, alpha: &Ordinal, n: usize) -> Result<Ordinal> {
        match alpha.classify() {
            OrdinalClass::Zero => Err(Error::ZeroLadder),
            OrdinalClass::Successor(pred) if n == 0 => Ok(pred),
            OrdinalClass::Successor(_) => Err(Error::LadderIndex {
                alpha: alpha.clone(),
                index: n,
            }),
            OrdinalClass::Limit => {
                let (gamma, e) = alpha.split_last().expect("limit is nonzero");
                let step = match e.pred() {
                    Some(d) => Ordinal::monomial(d, n as u64 + 1),
                    None => Ordinal::omega_pow(self.fundamental(&e, n)?),
                };
                Ok(gamma.add(&step))
            }
        }
    }

    fn count_below(&self, alpha: &Ordinal, xi: &Ordinal) -> Result<usize> {
        if !alpha.is_limit() {
            return super::scan_count(self, alpha, xi);
        }
        if xi >= alpha {
            return Err(Error::UnboundedIntersection {
                alpha: alpha.clone(),
                bound: xi.clone(),
            });
        }
        let (gamma, e) = alpha.split_last().expect("limit is nonzero");
        // every entry lies strictly above gamma
        let Some(eta) = xi.sub_left(&gamma) else {
            return Ok(0);
        };
        let Some(lead) = eta.terms().first() else {
            return Ok(0);
        };
        match e.pred() {
            Some(d) => {
                // entries are ω^d·(n+1) above gamma and eta < ω^{d+1}
                if *lead.exponent() != d {
                    return Ok(0);
                }
                let partial = usize::from(eta.terms().len() > 1);
                Ok(lead.coefficient() as usize - 1 + partial)
            }
            None => {
                let lead_exp = lead.exponent();
                let below = self.count_below(&e, lead_exp)?;
                let member = self.count_below(&e, &lead_exp.succ())? > below;
                let exceeds = eta != Ordinal::omega_pow(lead_exp.clone());
                Ok(below + usize::from(member && exceeds))
            }
        }
    }
}
