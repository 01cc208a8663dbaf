use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::csequence::{CSequence, OverrideProvider, OverrideSpec};
use crate::error::{Error, Result};
use crate::ordinal::{code, literal, Ordinal};
use crate::oscillation::osc;
use crate::walks::{lower_trace, weight};

use super::condition::CohenReal;
use super::modify::ModifiedProvider;

/// One sampled `ζ < γ` on which the two sides differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Disagreement {
    Weight {
        zeta: Ordinal,
        gamma_side: usize,
        delta_side: usize,
    },
    LowerTrace {
        zeta: Ordinal,
        gamma_side: Vec<Ordinal>,
        delta_side: Vec<Ordinal>,
    },
    Oscillation {
        zeta: Ordinal,
        gamma_side: usize,
        delta_side: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum AgreementOutcome {
    /// Every sampled `ζ` agrees.
    Pass { checked: usize },
    /// `C^x_δ ∩ γ` is not an initial segment of `C^x_γ`; `index` is the
    /// first position where they part.
    NotApplicable {
        index: usize,
        delta_entry: Ordinal,
        gamma_entry: Ordinal,
    },
    /// `total` counts every disagreement; only the first
    /// [`WITNESS_LIMIT`] are listed.
    Fail {
        total: usize,
        disagreements: Vec<Disagreement>,
    },
}

pub const WITNESS_LIMIT: usize = 8;

impl AgreementOutcome {
    pub fn is_pass(&self) -> bool {
        matches!(self, AgreementOutcome::Pass { .. })
    }
}

/// Compares the walks to `γ` and to `δ` over `C^x` on the sampled `ζ < γ`:
/// maximum weights, lower traces and oscillations.
pub fn initial_agreement_check<P: CSequence>(
    base: P,
    gamma: &Ordinal,
    delta: &Ordinal,
    x: &CohenReal,
    sample: &[Ordinal],
) -> Result<AgreementOutcome> {
    if gamma >= delta {
        return Err(Error::StrictOrder {
            lower: gamma.clone(),
            upper: delta.clone(),
        });
    }
    if !gamma.is_limit() {
        return Err(Error::NotLimit(gamma.clone()));
    }
    let p = ModifiedProvider::new(base, x.clone());
    for (i, e) in p.intersect_below(delta, gamma)?.into_iter().enumerate() {
        let g = p.fundamental(gamma, i)?;
        if g != e {
            return Ok(AgreementOutcome::NotApplicable {
                index: i,
                delta_entry: e,
                gamma_entry: g,
            });
        }
    }
    let zetas: BTreeSet<&Ordinal> = sample.iter().filter(|z| *z < gamma).collect();
    let mut disagreements = Vec::new();
    for z in &zetas {
        let zeta = (*z).clone();
        let (wg, wd) = (weight(&p, gamma, z)?, weight(&p, delta, z)?);
        if wg != wd {
            disagreements.push(Disagreement::Weight {
                zeta: zeta.clone(),
                gamma_side: wg,
                delta_side: wd,
            });
        }
        let (lg, ld) = (lower_trace(&p, z, gamma)?, lower_trace(&p, z, delta)?);
        if lg != ld {
            disagreements.push(Disagreement::LowerTrace {
                zeta: zeta.clone(),
                gamma_side: lg,
                delta_side: ld,
            });
        }
        let (og, od) = (osc(&p, z, gamma)?, osc(&p, z, delta)?);
        if og != od {
            disagreements.push(Disagreement::Oscillation {
                zeta,
                gamma_side: og,
                delta_side: od,
            });
        }
    }
    Ok(if disagreements.is_empty() {
        AgreementOutcome::Pass {
            checked: zetas.len(),
        }
    } else {
        let total = disagreements.len();
        disagreements.truncate(WITNESS_LIMIT);
        AgreementOutcome::Fail { total, disagreements }
    })
}

/// Ladder overrides given inline or as a path relative to the scenario file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OverrideSource {
    Inline(Vec<OverrideSpec>),
    Path(String),
}

/// A scenario file: base ladders, the pair `γ < δ`, a real and a sample.
///
/// ```json
/// {"name": "...", "overrides": [{"alpha": "w^2*2", "prefix": ["w", "w^2+w"]}],
///  "gamma": "w^2", "delta": "w^2*2", "m": 1,
///  "real": {"support": {"1": [...]}}, "sample": ["3", "w+1"]}
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Scenario {
    #[serde(default)]
    pub name: String,
    pub overrides: OverrideSource,
    #[serde(with = "literal")]
    pub gamma: Ordinal,
    #[serde(with = "literal")]
    pub delta: Ordinal,
    /// The position holding `h(γ+1)`.
    pub m: usize,
    pub real: CohenReal,
    #[serde(with = "literal::vec")]
    pub sample: Vec<Ordinal>,
}

impl Scenario {
    /// Reads a scenario, inlining an override file referenced by path.
    pub fn load(path: &Path) -> Result<Self> {
        let mut s: Scenario = serde_json::from_str(&std::fs::read_to_string(path)?)?;
        if let OverrideSource::Path(rel) = &s.overrides {
            let file = path.parent().unwrap_or(Path::new(".")).join(rel);
            let specs: Vec<OverrideSpec> = serde_json::from_str(&std::fs::read_to_string(file)?)?;
            s.overrides = OverrideSource::Inline(specs);
        }
        Ok(s)
    }

    /// Builds the scenario of the standard construction: `C_δ` starts with
    /// `C_γ(0), …, C_γ(m)` followed by `above ∈ (γ+1, δ)`, and `x(m) = {h(γ+1)}`.
    pub fn engineered(
        name: &str,
        gamma: &Ordinal,
        delta: &Ordinal,
        m: usize,
        above: &Ordinal,
        sample: Vec<Ordinal>,
    ) -> Result<Self> {
        let base = OverrideProvider::default();
        let mut prefix: Vec<Ordinal> = (0..=m)
            .map(|n| base.fundamental(gamma, n))
            .collect::<Result<_>>()?;
        prefix.push(above.clone());
        let overrides = vec![OverrideSpec {
            alpha: delta.clone(),
            prefix,
        }];
        OverrideProvider::from_specs(&overrides)?;
        let next = gamma.succ();
        if *above <= next {
            return Err(Error::StrictOrder {
                lower: next,
                upper: above.clone(),
            });
        }
        let real = CohenReal::empty().with(m, BTreeSet::from([code(&next)]));
        Ok(Scenario {
            name: name.to_string(),
            overrides: OverrideSource::Inline(overrides),
            gamma: gamma.clone(),
            delta: delta.clone(),
            m,
            real,
            sample,
        })
    }

    pub fn provider(&self) -> Result<OverrideProvider> {
        match &self.overrides {
            OverrideSource::Inline(specs) => OverrideProvider::from_specs(specs),
            OverrideSource::Path(p) => OverrideProvider::load(Path::new(p)),
        }
    }

    pub fn run(&self) -> Result<AgreementOutcome> {
        initial_agreement_check(
            self.provider()?,
            &self.gamma,
            &self.delta,
            &self.real,
            &self.sample,
        )
    }

    /// The same scenario with `h(γ+1)` removed from `x(m)`.
    pub fn mutated(&self) -> Self {
        let mut values = self.real.value(self.m).clone();
        values.remove(&code(&self.gamma.succ()));
        Scenario {
            name: format!("{} (mutated)", self.name),
            real: self.real.with(self.m, values),
            ..self.clone()
        }
    }
}

/// `(name, γ, δ, m, above, sample bound, coefficient cap)` of the shipped
/// scenarios; each sample is every ordinal below its bound.
const STANDARD: &[(&str, &str, &str, usize, &str, &str, u64)] = &[
    ("square-into-double-square", "w^2", "w^2*2", 2, "w^2+w", "w^2", 4),
    ("triple-omega-into-square", "w*3", "w^2", 1, "w*4", "w*3", 5),
    ("square-double-into-cube", "w^2*2", "w^3", 0, "w^2*3", "w^2*2", 3),
    ("omega-omega-into-double", "w^(w)", "w^(w)*2", 1, "w^(w)+w", "w^4", 3),
];

/// The engineered scenarios shipped with the crate.
pub fn standard_scenarios() -> Result<Vec<Scenario>> {
    STANDARD
        .iter()
        .map(|&(name, gamma, delta, m, above, bound, coef)| {
            let bound: Ordinal = bound.parse()?;
            let sample = crate::verify::SampleSpec::below(bound, coef).generate(&crate::csequence::Canonical)?;
            Scenario::engineered(name, &gamma.parse()?, &delta.parse()?, m, &above.parse()?, sample)
        })
        .collect()
}
