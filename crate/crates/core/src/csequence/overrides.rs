use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ordinal::{literal, Ordinal};

use super::{CSequence, Canonical};

/// One entry of an override file: `{"alpha": "w^2", "prefix": ["1", "2"]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OverrideSpec {
    #[serde(with = "literal")]
    pub alpha: Ordinal,
    #[serde(with = "literal::vec")]
    pub prefix: Vec<Ordinal>,
}

#[derive(Clone, Debug)]
struct Ladder {
    prefix: Vec<Ordinal>,
    // base index of the first canonical entry above the prefix
    tail_start: usize,
}

/// Canonical ladders, except that selected limits start with an explicit
/// finite prefix. After the prefix the ladder continues with the canonical
/// entries lying above its last element.
#[derive(Clone, Debug, Default)]
pub struct OverrideProvider {
    base: Canonical,
    ladders: BTreeMap<Ordinal, Ladder>,
}

impl OverrideProvider {
    pub fn new<I>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Ordinal, Vec<Ordinal>)>,
    {
        let base = Canonical;
        let mut ladders = BTreeMap::new();
        for (alpha, prefix) in entries {
            let invalid = |reason: &str| Error::InvalidOverride {
                alpha: alpha.clone(),
                reason: reason.to_string(),
            };
            if ladders.contains_key(&alpha) {
                return Err(invalid("duplicate entry"));
            }
            if alpha.is_zero() {
                return Err(invalid("C_0 is undefined"));
            }
            if let Some(pred) = alpha.pred() {
                if prefix != [pred] {
                    return Err(invalid("a successor ladder must be its predecessor"));
                }
                continue;
            }
            let Some(last) = prefix.last() else {
                return Err(invalid("empty prefix"));
            };
            if prefix.windows(2).any(|w| w[0] >= w[1]) {
                return Err(invalid("prefix is not strictly increasing"));
            }
            if last >= &alpha {
                return Err(invalid("prefix entry is not below alpha"));
            }
            let tail_start = base.count_below(&alpha, &last.succ())?;
            ladders.insert(alpha, Ladder { prefix, tail_start });
        }
        Ok(OverrideProvider { base, ladders })
    }

    pub fn from_specs(specs: &[OverrideSpec]) -> Result<Self> {
        Self::new(specs.iter().map(|s| (s.alpha.clone(), s.prefix.clone())))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let specs: Vec<OverrideSpec> = serde_json::from_str(text)?;
        Self::from_specs(&specs)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn specs(&self) -> Vec<OverrideSpec> {
        self.ladders
            .iter()
            .map(|(alpha, l)| OverrideSpec {
                alpha: alpha.clone(),
                prefix: l.prefix.clone(),
            })
            .collect()
    }
}

impl CSequence for OverrideProvider {
    fn fundamental(&self, alpha: &Ordinal, n: usize) -> Result<Ordinal> {
        match self.ladders.get(alpha) {
            Some(l) if n < l.prefix.len() => Ok(l.prefix[n].clone()),
            Some(l) => self
                .base
                .fundamental(alpha, l.tail_start + n - l.prefix.len()),
            None => self.base.fundamental(alpha, n),
        }
    }

    fn count_below(&self, alpha: &Ordinal, xi: &Ordinal) -> Result<usize> {
        let Some(l) = self.ladders.get(alpha) else {
            return self.base.count_below(alpha, xi);
        };
        let k = l.prefix.partition_point(|p| p < xi);
        if k < l.prefix.len() {
            return Ok(k);
        }
        let base = self.base.count_below(alpha, xi)?;
        Ok(l.prefix.len() + base - l.tail_start)
    }
}
