//! Oscillation of the weight functions along lower traces, and the
//! circle-valued `o` function built from it.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::csequence::CSequence;
use crate::error::{Error, Result};
use crate::ordinal::Ordinal;
use crate::walks::{lower_trace, weight};

/// A point `z_base^exp` on the unit circle, or `1`.
///
/// The `z_α` are rationally independent, so two symbolic points denote the
/// same complex number exactly when they are structurally equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CirclePoint {
    Unit,
    Pow { base: Ordinal, exp: u64 },
}

impl fmt::Display for CirclePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CirclePoint::Unit => f.write_str("1"),
            CirclePoint::Pow { base, exp } => write!(f, "z_{{{base}}}^{exp}"),
        }
    }
}

/// `"unit"` or `{"base": "<literal>", "exp": n}`.
impl Serialize for CirclePoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            CirclePoint::Unit => serializer.serialize_str("unit"),
            CirclePoint::Pow { base, exp } => {
                let mut s = serializer.serialize_struct("CirclePoint", 2)?;
                s.serialize_field("base", &base.to_string())?;
                s.serialize_field("exp", exp)?;
                s.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for CirclePoint {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Unit(String),
            Pow {
                #[serde(with = "crate::ordinal::literal")]
                base: Ordinal,
                exp: u64,
            },
        }
        match Raw::deserialize(deserializer)? {
            Raw::Unit(s) if s == "unit" => Ok(CirclePoint::Unit),
            Raw::Unit(s) => Err(de::Error::custom(format!("expected \"unit\", got {s:?}"))),
            Raw::Pow { exp: 0, .. } => Err(de::Error::custom("exponent must be positive")),
            Raw::Pow { base, exp } => Ok(CirclePoint::Pow { base, exp }),
        }
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

/// Counts oscillation points over `lower[from..to]`: positions `i ≥ 1` with
/// `e_α(L[i−1]) ≤ e_β(L[i−1])` and `e_α(L[i]) > e_β(L[i])`.
fn count_oscillations<P: CSequence + ?Sized>(
    p: &P,
    alpha: &Ordinal,
    beta: &Ordinal,
    lower: &[Ordinal],
    from: usize,
    to: usize,
) -> Result<usize> {
    let start = from.max(1);
    if start >= to {
        return Ok(0);
    }
    // weights at start-1 ..= to-1
    let pairs: Vec<(usize, usize)> = lower[start - 1..to]
        .iter()
        .map(|z| Ok((weight(p, alpha, z)?, weight(p, beta, z)?)))
        .collect::<Result<_>>()?;
    Ok(pairs
        .windows(2)
        .filter(|w| w[0].0 <= w[0].1 && w[1].0 > w[1].1)
        .count())
}

/// `osc(α, β)`; zero whenever `|L(α, β)| ≤ 1`.
pub fn osc<P: CSequence + ?Sized>(p: &P, alpha: &Ordinal, beta: &Ordinal) -> Result<usize> {
    ensure_le(alpha, beta)?;
    let lower = lower_trace(p, alpha, beta)?;
    count_oscillations(p, alpha, beta, &lower, 0, lower.len())
}

/// The oscillation count restricted to `ζ ∈ part`, where `part` is a
/// contiguous run of `L(α, β)`. Predecessors are taken in the full trace
/// and the minimum of the full trace never counts, so the counts over the
/// pieces of a split add up to [`osc`].
pub fn osc_on_interval<P: CSequence + ?Sized>(
    p: &P,
    alpha: &Ordinal,
    beta: &Ordinal,
    part: &[Ordinal],
) -> Result<usize> {
    ensure_le(alpha, beta)?;
    let lower = lower_trace(p, alpha, beta)?;
    let Some(first) = part.first() else {
        return Ok(0);
    };
    let from = lower.binary_search(first).map_err(|_| Error::NotContiguous)?;
    let to = from + part.len();
    if to > lower.len() || lower[from..to] != *part {
        return Err(Error::NotContiguous);
    }
    count_oscillations(p, alpha, beta, &lower, from, to)
}

/// `o(α, β) = z_α^{osc(α,β)+1}`.
pub fn o_point<P: CSequence + ?Sized>(p: &P, alpha: &Ordinal, beta: &Ordinal) -> Result<CirclePoint> {
    Ok(CirclePoint::Pow {
        base: alpha.clone(),
        exp: osc(p, alpha, beta)? as u64 + 1,
    })
}

/// `w_β` evaluated on a finite support.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointRestriction {
    pub builder: Ordinal,
    pub support: Vec<Ordinal>,
    #[serde(serialize_with = "literal_keys")]
    pub values: BTreeMap<Ordinal, CirclePoint>,
}

pub(crate) fn literal_keys<S: Serializer, V: Serialize>(
    map: &BTreeMap<Ordinal, V>,
    serializer: S,
) -> Result<S::Ok, S::Error> {
    serializer.collect_map(map.iter().map(|(k, v)| (k.to_string(), v)))
}

/// `w_β(α) = o(α, β)` for `α < β` and `1` otherwise, on the given support.
pub fn w_restriction<P: CSequence + ?Sized>(
    p: &P,
    beta: &Ordinal,
    support: &[Ordinal],
) -> Result<PointRestriction> {
    let mut support = support.to_vec();
    support.sort();
    support.dedup();
    let mut values = BTreeMap::new();
    for a in &support {
        let v = if a < beta {
            o_point(p, a, beta)?
        } else {
            CirclePoint::Unit
        };
        values.insert(a.clone(), v);
    }
    Ok(PointRestriction {
        builder: beta.clone(),
        support,
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::csequence::Canonical;
    use crate::ordinal::ord;

    const C: Canonical = Canonical;

    fn pow(base: &str, exp: u64) -> CirclePoint {
        CirclePoint::Pow {
            base: ord(base),
            exp,
        }
    }

    #[test]
    fn osc_examples() {
        let a = ord("w^2+5");
        assert_eq!(osc(&C, &a, &a).unwrap(), 0);
        assert_eq!(osc(&C, &ord("3"), &ord("w")).unwrap(), 0);
        // least pair with a two-element lower trace; hand evaluation gives
        // e_{w+2}(w+1) = 0 <= e_{w^2}(w+1) = 1, so no oscillation
        assert_eq!(osc(&C, &ord("w+2"), &ord("w^2")).unwrap(), 0);
        assert!(osc(&C, &ord("w"), &ord("3")).is_err());
    }

    #[test]
    fn o_point_examples() {
        assert_eq!(o_point(&C, &ord("3"), &ord("w")).unwrap(), pow("3", 1));
        assert_eq!(o_point(&C, &ord("w"), &ord("w")).unwrap(), pow("w", 1));
    }

    #[test]
    fn w_restriction_examples() {
        let r = w_restriction(&C, &ord("w"), &[ord("3"), ord("w"), ord("w+1")]).unwrap();
        assert_eq!(r.values[&ord("3")], pow("3", 1));
        assert_eq!(r.values[&ord("w")], CirclePoint::Unit);
        assert_eq!(r.values[&ord("w+1")], CirclePoint::Unit);
        assert!(w_restriction(&C, &ord("w"), &[]).unwrap().values.is_empty());
        let b = ord("w^2");
        let r = w_restriction(&C, &b, std::slice::from_ref(&b)).unwrap();
        assert_eq!(r.values[&b], CirclePoint::Unit);
    }

    #[test]
    fn interval_segments() {
        let (a, b) = (ord("w+2"), ord("w^2"));
        let lower = lower_trace(&C, &a, &b).unwrap();
        assert_eq!(osc_on_interval(&C, &a, &b, &lower).unwrap(), osc(&C, &a, &b).unwrap());
        assert_eq!(osc_on_interval(&C, &a, &b, &lower[..1]).unwrap(), 0);
        assert!(matches!(
            osc_on_interval(&C, &a, &b, &[ord("w+1"), ord("w")]),
            Err(Error::NotContiguous)
        ));
        assert!(matches!(
            osc_on_interval(&C, &a, &b, &[ord("5")]),
            Err(Error::NotContiguous)
        ));
    }

    #[test]
    fn circle_point_json() {
        assert_eq!(serde_json::to_string(&CirclePoint::Unit).unwrap(), "\"unit\"");
        let p = pow("w+1", 3);
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(text, r#"{"base":"w+1","exp":3}"#);
        assert_eq!(serde_json::from_str::<CirclePoint>(&text).unwrap(), p);
        assert!(serde_json::from_str::<CirclePoint>(r#"{"base":"w","exp":0}"#).is_err());
        assert!(serde_json::from_str::<CirclePoint>("\"one\"").is_err());
    }
}
