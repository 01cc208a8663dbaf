use std::collections::BTreeMap;
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};

use crate::csequence::{CSequence, Canonical};
use crate::error::Result;
use crate::forcing::{density_extend, level_set, ForcingCondition};
use crate::ordinal::{ord, Ordinal};

use super::oracle;
use super::sample::SampleSpec;
use super::Suite;

/// Values fixed after a first oracle run. Ordinals appear as literals.
const FROZEN: &[(&str, Suite, &str)] = &[
    ("upper(3,5)", Suite::Facts, r#"["5","4"]"#),
    ("lower(3,w)", Suite::Facts, r#"["2"]"#),
    ("lower(1,w*2)", Suite::Facts, r#"[]"#),
    (
        "fact1_vacuous_counterexample(3,5,w)",
        Suite::Facts,
        r#"{"L(3,5)":[],"L(3,w)":["2"],"L(5,w)":["4"]}"#,
    ),
    ("fact2_threshold(w^2,w)", Suite::Facts, "2"),
    ("e_w(3)", Suite::Weights, "2"),
    ("e_5(3)", Suite::Weights, "0"),
    ("coherence(w,w*2,{1,2,3})", Suite::Weights, "[]"),
    (
        "osc_least_nontrivial_pair",
        Suite::Oscillation,
        r#"{"alpha":"w+2","beta":"w^2","osc":0}"#,
    ),
    ("node_osc(w*2,w,3)", Suite::Iso, "0"),
    ("level_set_size(w^2,10000)", Suite::Forcing, "79"),
    ("density_extend(empty,w,0)", Suite::Forcing, r#"{"positions":{"1":[4]}}"#),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PinCheck {
    pub name: String,
    pub expected: Value,
    pub actual: Value,
    pub matched: bool,
}

fn lits(items: &[Ordinal]) -> Value {
    Value::from(items.iter().map(Ordinal::to_string).collect::<Vec<_>>())
}

/// Recomputes every pinned constant with the oracle (and the forcing
/// recipes, which have no second implementation).
pub fn compute_pins() -> Result<Vec<(&'static str, Suite, Value)>> {
    let c = &Canonical;
    let mut out = Vec::new();
    out.push(("upper(3,5)", Suite::Facts, lits(&oracle::upper(c, &ord("3"), &ord("5"))?)));
    out.push(("lower(3,w)", Suite::Facts, lits(&oracle::lower(c, &ord("3"), &ord("w"))?)));
    out.push(("lower(1,w*2)", Suite::Facts, lits(&oracle::lower(c, &ord("1"), &ord("w*2"))?)));
    out.push((
        "fact1_vacuous_counterexample(3,5,w)",
        Suite::Facts,
        json!({
            "L(3,5)": lits(&oracle::lower(c, &ord("3"), &ord("5"))?),
            "L(3,w)": lits(&oracle::lower(c, &ord("3"), &ord("w"))?),
            "L(5,w)": lits(&oracle::lower(c, &ord("5"), &ord("w"))?),
        }),
    ));
    out.push(("fact2_threshold(w^2,w)", Suite::Facts, json!(oracle_threshold(c, &ord("w^2"), &ord("w"), 16)?)));
    out.push(("e_w(3)", Suite::Weights, json!(oracle::weight(c, &ord("w"), &ord("3"))?)));
    out.push(("e_5(3)", Suite::Weights, json!(oracle::weight(c, &ord("5"), &ord("3"))?)));
    let mut disagree = Vec::new();
    for a in ["1", "2", "3"].map(ord) {
        if oracle::weight(c, &ord("w"), &a)? != oracle::weight(c, &ord("w*2"), &a)? {
            disagree.push(a);
        }
    }
    out.push(("coherence(w,w*2,{1,2,3})", Suite::Weights, lits(&disagree)));
    out.push(("osc_least_nontrivial_pair", Suite::Oscillation, least_nontrivial(c)?));
    out.push(("node_osc(w*2,w,3)", Suite::Iso, json!(oracle::osc(c, &ord("3"), &ord("w*2"))?)));
    out.push((
        "level_set_size(w^2,10000)",
        Suite::Forcing,
        json!(level_set(&ord("w^2"), 10_000).len()),
    ));
    let p = density_extend(c, &ForcingCondition::new(), &ord("w"), 0, 64)?;
    out.push(("density_extend(empty,w,0)", Suite::Forcing, serde_json::to_value(&p)?));
    Ok(out)
}

/// Least `n` such that `min L(C_β(k), β) > ξ` for every `k` in `n..=depth`.
fn oracle_threshold<P: CSequence + ?Sized>(p: &P, beta: &Ordinal, xi: &Ordinal, depth: usize) -> Result<Option<usize>> {
    let mut threshold = None;
    for k in (0..=depth).rev() {
        let l = oracle::lower(p, &p.fundamental(beta, k)?, beta)?;
        match l.first() {
            Some(m) if m > xi => threshold = Some(k),
            _ => break,
        }
    }
    Ok(threshold)
}

/// First pair `α ≤ β` below `ω³`, ordered by `β` then `α`, with `|L(α,β)| ≥ 2`.
fn least_nontrivial<P: CSequence + ?Sized>(p: &P) -> Result<Value> {
    let sample = SampleSpec::default().generate(p)?;
    for beta in &sample {
        for alpha in sample.iter().take_while(|a| *a <= beta) {
            if oracle::lower(p, alpha, beta)?.len() >= 2 {
                return Ok(json!({
                    "alpha": alpha.to_string(),
                    "beta": beta.to_string(),
                    "osc": oracle::osc(p, alpha, beta)?,
                }));
            }
        }
    }
    Ok(Value::Null)
}

fn frozen() -> BTreeMap<&'static str, (Suite, Value)> {
    FROZEN
        .iter()
        .map(|(name, suite, text)| (*name, (*suite, serde_json::from_str(text).expect("frozen pin is JSON"))))
        .collect()
}

/// Checks the recomputed constants belonging to `suites` against the
/// frozen values and, when given, a pin file. A missing pin file is
/// written from the current values.
pub fn pin_constants(suites: &[Suite], file: Option<&Path>) -> Result<Vec<PinCheck>> {
    let computed = compute_pins()?;
    let frozen = frozen();
    let stored: Option<BTreeMap<String, Value>> = match file {
        Some(path) if path.exists() => Some(serde_json::from_str(&std::fs::read_to_string(path)?)?),
        _ => None,
    };
    if let (Some(path), None) = (file, &stored) {
        let all: BTreeMap<&str, &Value> = computed.iter().map(|(n, _, v)| (*n, v)).collect();
        std::fs::write(path, serde_json::to_string_pretty(&all)? + "\n")?;
    }
    let mut out = Vec::new();
    for (name, suite, actual) in computed {
        if !suites.contains(&suite) {
            continue;
        }
        let mut expected = frozen.get(name).map(|(_, v)| v.clone()).unwrap_or(Value::Null);
        if let Some(v) = stored.as_ref().and_then(|s| s.get(name)) {
            if *v != expected {
                expected = v.clone();
            }
        }
        out.push(PinCheck {
            name: name.to_string(),
            matched: expected == actual,
            expected,
            actual,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frozen_pins_match() {
        let computed = compute_pins().unwrap();
        assert_eq!(computed.len(), FROZEN.len());
        let checks = pin_constants(&Suite::ALL, None).unwrap();
        for c in &checks {
            assert!(c.matched, "{}: expected {} got {}", c.name, c.expected, c.actual);
        }
    }

    #[test]
    fn pin_file_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("pins.json");
        pin_constants(&[Suite::Facts], Some(&path)).unwrap();
        assert!(path.exists());
        assert!(pin_constants(&[Suite::Facts], Some(&path)).unwrap().iter().all(|c| c.matched));
        let text = std::fs::read_to_string(&path).unwrap().replace(r#""e_w(3)": 2"#, r#""e_w(3)": 3"#);
        std::fs::write(&path, text).unwrap();
        let checks = pin_constants(&[Suite::Weights], Some(&path)).unwrap();
        assert!(checks.iter().any(|c| c.name == "e_w(3)" && !c.matched));
    }
}
