use std::collections::{BTreeMap, BTreeSet};
use std::str::FromStr;

use num_bigint::BigUint;
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

/// Finite sets of naturals indexed by position.
pub type Positions = BTreeMap<usize, BTreeSet<BigUint>>;

static EMPTY: BTreeSet<BigUint> = BTreeSet::new();

/// A condition of `Fn(ω, [ω]^{<ω})`: a finite partial function from
/// positions to finite sets of naturals.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForcingCondition {
    #[serde(with = "positions_json")]
    positions: Positions,
}

impl ForcingCondition {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_positions(positions: Positions) -> Self {
        ForcingCondition { positions }
    }

    pub fn positions(&self) -> &Positions {
        &self.positions
    }

    pub fn get(&self, m: usize) -> Option<&BTreeSet<BigUint>> {
        self.positions.get(&m)
    }

    pub fn max_position(&self) -> Option<usize> {
        self.positions.keys().next_back().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// `self ∪ {(m, values)}`, replacing any previous value at `m`.
    pub fn with(&self, m: usize, values: BTreeSet<BigUint>) -> Self {
        let mut positions = self.positions.clone();
        positions.insert(m, values);
        ForcingCondition { positions }
    }

    /// `self ≤ other`: `self` is defined wherever `other` is, with the same
    /// value.
    pub fn leq(&self, other: &ForcingCondition) -> bool {
        other
            .positions
            .iter()
            .all(|(m, v)| self.positions.get(m) == Some(v))
    }
}

pub fn condition_leq(p: &ForcingCondition, q: &ForcingCondition) -> bool {
    p.leq(q)
}

/// A finitely supported element of `([ω]^{<ω})^ω`; positions outside the
/// support hold the empty set.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "RawReal")]
pub struct CohenReal {
    #[serde(with = "positions_json")]
    support: Positions,
}

#[derive(Deserialize)]
struct RawReal {
    #[serde(with = "positions_json")]
    support: Positions,
}

impl From<RawReal> for CohenReal {
    fn from(raw: RawReal) -> Self {
        CohenReal::from_positions(raw.support)
    }
}

impl CohenReal {
    /// The real that is empty everywhere.
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_positions(mut support: Positions) -> Self {
        support.retain(|_, v| !v.is_empty());
        CohenReal { support }
    }

    /// The least real through the condition: `q` on its domain, `∅` elsewhere.
    pub fn through(q: &ForcingCondition) -> Self {
        Self::from_positions(q.positions.clone())
    }

    pub fn support(&self) -> &Positions {
        &self.support
    }

    pub fn value(&self, m: usize) -> &BTreeSet<BigUint> {
        self.support.get(&m).unwrap_or(&EMPTY)
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    /// `x` extends `q`: `x(m) = q(m)` for every `m ∈ dom(q)`.
    pub fn extends(&self, q: &ForcingCondition) -> bool {
        q.positions.iter().all(|(m, v)| self.value(*m) == v)
    }

    pub fn with(&self, m: usize, values: BTreeSet<BigUint>) -> Self {
        let mut support = self.support.clone();
        support.insert(m, values);
        Self::from_positions(support)
    }
}

/// `{"m": [n, ...]}` with naturals written as plain JSON numbers of any size.
pub(crate) mod positions_json {
    use super::*;

    struct Nat<'a>(&'a BigUint);

    impl Serialize for Nat<'_> {
        fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
            let n = serde_json::Number::from_str(&self.0.to_string())
                .map_err(serde::ser::Error::custom)?;
            n.serialize(serializer)
        }
    }

    pub fn serialize<S: Serializer>(map: &Positions, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_map(
            map.iter()
                .map(|(m, set)| (m.to_string(), set.iter().map(Nat).collect::<Vec<_>>())),
        )
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum RawNat {
        Number(serde_json::Number),
        Text(String),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Positions, D::Error> {
        let raw = BTreeMap::<String, Vec<RawNat>>::deserialize(deserializer)?;
        let mut out = Positions::new();
        for (key, values) in raw {
            let m: usize = key
                .parse()
                .map_err(|_| de::Error::custom(format!("position {key:?} is not a natural")))?;
            let mut set = BTreeSet::new();
            for v in values {
                let text = match v {
                    RawNat::Number(n) => n.to_string(),
                    RawNat::Text(t) => t,
                };
                let n = BigUint::from_str(&text)
                    .map_err(|_| de::Error::custom(format!("{text:?} is not a natural")))?;
                set.insert(n);
            }
            out.insert(m, set);
        }
        Ok(out)
    }
}
