use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::csequence::CSequence;
use crate::error::{Error, Result};
use crate::ordinal::Ordinal;

/// Refuses to materialize generators larger than this before capping.
pub const GENERATION_LIMIT: usize = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    /// Every ordinal below `bound` whose hereditary coefficients are at most
    /// `max_coef`.
    Below { bound: Ordinal, max_coef: u64 },
    List(Vec<Ordinal>),
    /// The seeds closed under `α ↦ C_α(n)` for `n < width`.
    Closure { width: usize, seeds: Vec<Ordinal> },
}

/// `<generator>[;cap=<n>][;seed=<n>]` where the generator is one of
/// `below:<ord>[:<maxcoef>]`, `list:<ord>,<ord>,...` or
/// `closure:<width>:<ord>,<ord>,...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleSpec {
    pub generator: Generator,
    pub cap: Option<usize>,
    pub seed: u64,
}

pub const DEFAULT_MAX_COEF: u64 = 4;

impl Default for SampleSpec {
    /// Everything below `ω³` with coefficients up to 4: 125 ordinals.
    fn default() -> Self {
        SampleSpec {
            generator: Generator::Below {
                bound: Ordinal::omega_pow(Ordinal::finite(3)),
                max_coef: DEFAULT_MAX_COEF,
            },
            cap: None,
            seed: 0,
        }
    }
}

impl SampleSpec {
    pub fn below(bound: Ordinal, max_coef: u64) -> Self {
        SampleSpec {
            generator: Generator::Below { bound, max_coef },
            ..Self::default()
        }
    }

    pub fn list(items: Vec<Ordinal>) -> Self {
        SampleSpec {
            generator: Generator::List(items),
            ..Self::default()
        }
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = Some(cap);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    /// The sample: sorted, duplicate-free, and at most `cap` elements chosen
    /// by the seeded generator.
    pub fn generate<P: CSequence + ?Sized>(&self, p: &P) -> Result<Vec<Ordinal>> {
        let all: Vec<Ordinal> = match &self.generator {
            Generator::Below { bound, max_coef } => {
                let mut budget = GENERATION_LIMIT;
                below(bound, *max_coef, &mut budget)?
            }
            Generator::List(items) => items.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect(),
            Generator::Closure { width, seeds } => closure(p, *width, seeds)?,
        };
        Ok(match self.cap {
            Some(cap) if cap < all.len() => {
                let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
                let mut picked = index::sample(&mut rng, all.len(), cap).into_vec();
                picked.sort_unstable();
                picked.into_iter().map(|i| all[i].clone()).collect()
            }
            _ => all,
        })
    }
}

fn too_large() -> Error {
    Error::SampleSpec {
        position: 0,
        reason: format!("generator yields more than {GENERATION_LIMIT} ordinals"),
    }
}

/// Ordinals `< bound` with every hereditary coefficient `≤ c`.
fn below(bound: &Ordinal, c: u64, budget: &mut usize) -> Result<Vec<Ordinal>> {
    if bound.is_zero() {
        return Ok(Vec::new());
    }
    // candidate exponents: everything up to the leading exponent
    let top = bound.leading_exponent();
    let exps = if top.is_zero() {
        vec![Ordinal::zero()]
    } else {
        below(&top.succ(), c, budget)?
    };
    // decreasing exponent sequences, each with a coefficient in 1..=c
    let mut out = vec![Ordinal::zero()];
    for e in &exps {
        let mut next = Vec::new();
        for a in &out {
            for k in 1..=c {
                let term = Ordinal::monomial(e.clone(), k);
                // prepend the larger term; out is built from small exponents up
                next.push(term.add(a));
            }
        }
        if out.len() + next.len() > *budget {
            return Err(too_large());
        }
        out.extend(next);
    }
    out.retain(|a| a < bound);
    out.sort();
    *budget = budget.saturating_sub(out.len());
    Ok(out)
}

fn closure<P: CSequence + ?Sized>(p: &P, width: usize, seeds: &[Ordinal]) -> Result<Vec<Ordinal>> {
    let mut seen: BTreeSet<Ordinal> = BTreeSet::new();
    let mut stack: Vec<Ordinal> = seeds.to_vec();
    while let Some(a) = stack.pop() {
        if !seen.insert(a.clone()) {
            continue;
        }
        if seen.len() > GENERATION_LIMIT {
            return Err(too_large());
        }
        if a.is_zero() {
            continue;
        }
        let len = if a.is_successor() { 1 } else { width };
        for n in 0..len {
            stack.push(p.fundamental(&a, n)?);
        }
    }
    Ok(seen.into_iter().collect())
}

fn spec_error(position: usize, reason: impl Into<String>) -> Error {
    Error::SampleSpec {
        position,
        reason: reason.into(),
    }
}

fn parse_ordinal(text: &str, offset: usize) -> Result<Ordinal> {
    text.parse::<Ordinal>().map_err(|e| spec_error(offset + e.position, e.kind.to_string()))
}

fn parse_list(text: &str, offset: usize) -> Result<Vec<Ordinal>> {
    let mut out = Vec::new();
    let mut at = offset;
    for item in text.split(',') {
        out.push(parse_ordinal(item, at)?);
        at += item.len() + 1;
    }
    Ok(out)
}

fn parse_number<T: FromStr>(text: &str, offset: usize) -> Result<T> {
    text.trim()
        .parse()
        .map_err(|_| spec_error(offset, format!("expected a natural number, got {text:?}")))
}

impl FromStr for SampleSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split(';');
        let head = parts.next().unwrap_or_default();
        let (kind, rest) = head
            .split_once(':')
            .ok_or_else(|| spec_error(0, "expected <kind>:<arguments>"))?;
        let at = kind.len() + 1;
        let generator = match kind.trim() {
            "below" => {
                let (bound, coef) = match rest.rsplit_once(':') {
                    Some((b, c)) => (b, Some((c, at + b.len() + 1))),
                    None => (rest, None),
                };
                let max_coef = match coef {
                    Some((c, pos)) => parse_number(c, pos)?,
                    None => DEFAULT_MAX_COEF,
                };
                if max_coef == 0 {
                    return Err(spec_error(at + bound.len() + 1, "coefficient bound must be positive"));
                }
                Generator::Below {
                    bound: parse_ordinal(bound, at)?,
                    max_coef,
                }
            }
            "list" => Generator::List(parse_list(rest, at)?),
            "closure" => {
                let (width, seeds) = rest
                    .split_once(':')
                    .ok_or_else(|| spec_error(at, "expected closure:<width>:<seeds>"))?;
                Generator::Closure {
                    width: parse_number(width, at)?,
                    seeds: parse_list(seeds, at + width.len() + 1)?,
                }
            }
            other => return Err(spec_error(0, format!("unknown generator {other:?}"))),
        };
        let mut spec = SampleSpec {
            generator,
            cap: None,
            seed: 0,
        };
        let mut at = head.len() + 1;
        for option in parts {
            let (key, value) = option
                .split_once('=')
                .ok_or_else(|| spec_error(at, "expected <key>=<value>"))?;
            let vat = at + key.len() + 1;
            match key.trim() {
                "cap" => spec.cap = Some(parse_number(value, vat)?),
                "seed" => spec.seed = parse_number(value, vat)?,
                other => return Err(spec_error(at, format!("unknown option {other:?}"))),
            }
            at += option.len() + 1;
        }
        Ok(spec)
    }
}

fn join(items: &[Ordinal]) -> String {
    items.iter().map(Ordinal::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for SampleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.generator {
            Generator::Below { bound, max_coef } => write!(f, "below:{bound}:{max_coef}")?,
            Generator::List(items) => write!(f, "list:{}", join(items))?,
            Generator::Closure { width, seeds } => write!(f, "closure:{width}:{}", join(seeds))?,
        }
        if let Some(cap) = self.cap {
            write!(f, ";cap={cap}")?;
        }
        if self.seed != 0 {
            write!(f, ";seed={}", self.seed)?;
        }
        Ok(())
    }
}
