//! Configuration, reports and rendering behind the `ordwalk` binary.
//!
//! Each `cmd_*` function parses nothing and computes nothing of its own: it
//! calls into the library and turns the result into an [`Output`]. Text mode
//! prints ordinals as literals, JSON mode in the nested-array encoding.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_bigint::BigUint;
use serde::Serialize;

use crate::csequence::{CSequence, Canonical, OverrideProvider};
use crate::error::{Error, Result};
use crate::forcing::{
    density_extend, density_member, generic_approx, modify, AgreementOutcome, CohenReal, Disagreement, ForcingCondition,
    ModifiedProvider, Scenario,
};
use crate::ordinal::{decode, Ordinal};
use crate::oscillation::{o_point, osc, CirclePoint};
use crate::tree::{ComparisonVerdict, Fragment, IsoOutcome, TreeVariant};
use crate::verify::{run_suite_with_pins, SampleSpec, SuiteReport};
use crate::walks::{walk, weight};

/// `canonical` or `override:<file>`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum ProviderChoice {
    #[default]
    Canonical,
    Override(PathBuf),
}

impl FromStr for ProviderChoice {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.split_once(':') {
            None if s == "canonical" => Ok(ProviderChoice::Canonical),
            Some(("override", path)) if !path.is_empty() => Ok(ProviderChoice::Override(path.into())),
            _ => Err(format!("expected `canonical` or `override:<file>`, got {s:?}")),
        }
    }
}

impl ProviderChoice {
    /// Loads and validates the selected ladder system.
    pub fn load(&self) -> Result<Provider> {
        Ok(match self {
            ProviderChoice::Canonical => Provider::Canonical(Canonical),
            ProviderChoice::Override(path) => Provider::Override(OverrideProvider::load(path)?),
        })
    }
}

/// The ladder system chosen on the command line.
#[derive(Clone, Debug)]
pub enum Provider {
    Canonical(Canonical),
    Override(OverrideProvider),
}

impl CSequence for Provider {
    fn fundamental(&self, alpha: &Ordinal, n: usize) -> Result<Ordinal> {
        match self {
            Provider::Canonical(p) => p.fundamental(alpha, n),
            Provider::Override(p) => p.fundamental(alpha, n),
        }
    }

    fn count_below(&self, alpha: &Ordinal, xi: &Ordinal) -> Result<usize> {
        match self {
            Provider::Canonical(p) => p.count_below(alpha, xi),
            Provider::Override(p) => p.count_below(alpha, xi),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Dot,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "dot" => Ok(Format::Dot),
            _ => Err(format!("expected text, json or dot, got {s:?}")),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct CliConfig {
    pub provider: ProviderChoice,
    pub format: Format,
    pub sample: SampleSpec,
    /// Overrides the seed of the sample spec and seeds generic runs.
    pub seed: Option<u64>,
}

impl CliConfig {
    pub fn sample_spec(&self) -> SampleSpec {
        match self.seed {
            Some(s) => self.sample.clone().with_seed(s),
            None => self.sample.clone(),
        }
    }

    fn render<T: Serialize>(&self, report: &T, text: impl FnOnce() -> String, dot: Option<String>) -> Result<String> {
        match self.format {
            Format::Text => Ok(text()),
            Format::Json => Ok(serde_json::to_string(report)? + "\n"),
            Format::Dot => dot.ok_or_else(|| unsupported("dot")),
        }
    }
}

fn unsupported(what: &str) -> Error {
    Error::Io(std::io::Error::new(
        std::io::ErrorKind::Unsupported,
        format!("--format {what} is not available for this command"),
    ))
}

/// Rendered command output. `passed` selects exit status 0 or 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub body: String,
    pub passed: bool,
}

fn join(items: &[Ordinal]) -> String {
    if items.is_empty() {
        return "{}".into();
    }
    items.iter().map(Ordinal::to_string).collect::<Vec<_>>().join(", ")
}

fn braced(items: &[Ordinal]) -> String {
    format!("{{{}}}", items.iter().map(Ordinal::to_string).collect::<Vec<_>>().join(", "))
}

/// Comma-separated ordinal literals.
pub fn parse_list(text: &str) -> Result<Vec<Ordinal>> {
    text.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse().map_err(Error::from))
        .collect()
}

/// Walk from `beta` down to `alpha`, with `e_ξ(α)` for every visited `ξ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WalkReport {
    pub from: Ordinal,
    pub to: Ordinal,
    pub upper: Vec<Ordinal>,
    pub lower: Vec<Ordinal>,
    pub rho0: usize,
    #[serde(serialize_with = "literal_map")]
    pub weights: BTreeMap<Ordinal, usize>,
    pub osc: usize,
    pub o: CirclePoint,
}

fn literal_map<S: serde::Serializer, V: Serialize>(
    map: &BTreeMap<Ordinal, V>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_map(map.iter().map(|(k, v)| (k.to_string(), v)))
}

impl fmt::Display for WalkReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "walk {} -> {}", self.from, self.to)?;
        writeln!(f, "upper: {}", join(&self.upper))?;
        writeln!(f, "lower: {}", join(&self.lower))?;
        writeln!(f, "rho0: {}", self.rho0)?;
        let weights: Vec<String> = self.weights.iter().map(|(b, e)| format!("e_{{{b}}}({})={e}", self.to)).collect();
        writeln!(f, "weights: {}", if weights.is_empty() { "{}".into() } else { weights.join(", ") })?;
        writeln!(f, "osc: {}", self.osc)?;
        writeln!(f, "o: {}", self.o)
    }
}

impl WalkReport {
    fn to_dot(&self) -> String {
        let mut out = String::from("digraph walk {\n");
        let mut path: Vec<&Ordinal> = self.upper.iter().collect();
        path.push(&self.to);
        for (i, o) in path.iter().enumerate() {
            let _ = writeln!(out, "  s{i} [label=\"{o}\"];");
        }
        for i in 1..path.len() {
            let _ = writeln!(out, "  s{} -> s{i};", i - 1);
        }
        out.push_str("}\n");
        out
    }
}

pub fn walk_report<P: CSequence + ?Sized>(p: &P, from: &Ordinal, to: &Ordinal) -> Result<WalkReport> {
    let trace = walk(p, to, from)?;
    let weights = trace
        .upper
        .iter()
        .map(|b| Ok((b.clone(), weight(p, b, to)?)))
        .collect::<Result<_>>()?;
    Ok(WalkReport {
        from: from.clone(),
        to: to.clone(),
        osc: osc(p, to, from)?,
        o: o_point(p, to, from)?,
        upper: trace.upper,
        lower: trace.lower,
        rho0: trace.rho0,
        weights,
    })
}

pub fn cmd_walk(from: &Ordinal, to: &Ordinal, cfg: &CliConfig) -> Result<Output> {
    let report = walk_report(&cfg.provider.load()?, from, to)?;
    let body = cfg.render(&report, || report.to_string(), Some(report.to_dot()))?;
    Ok(Output { body, passed: true })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NodeHeader {
    pub builder: Ordinal,
    pub height: Ordinal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeReport {
    pub variant: TreeVariant,
    pub sample: Vec<Ordinal>,
    pub nodes: Vec<NodeHeader>,
    pub verdicts: Vec<Vec<ComparisonVerdict>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub iso: Option<IsoOutcome>,
}

fn verdict_letter(v: &ComparisonVerdict) -> char {
    match v {
        ComparisonVerdict::SampledEqual => '=',
        ComparisonVerdict::SampledExtends => '<',
        ComparisonVerdict::ExtendsCertifiedFalse { .. } => '>',
        ComparisonVerdict::IncomparableCertified { .. } => '|',
    }
}

impl fmt::Display for TreeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "sample: {} ordinals", self.sample.len())?;
        for (i, n) in self.nodes.iter().enumerate() {
            writeln!(f, "n{i}: w_{{{}}} | {}", n.builder, n.height)?;
        }
        writeln!(f, "verdicts ({:?}; = equal, < extends, > shorter, | incomparable):", self.variant)?;
        for row in &self.verdicts {
            writeln!(f, "  {}", row.iter().map(verdict_letter).collect::<String>())?;
        }
        match &self.iso {
            Some(IsoOutcome::Pass { nodes, comparisons }) => {
                writeln!(f, "iso: PASS ({nodes} nodes, {comparisons} comparisons)")
            }
            Some(IsoOutcome::Fail { mismatches }) => writeln!(f, "iso: FAIL ({} mismatches)", mismatches.len()),
            None => Ok(()),
        }
    }
}

/// Builds the fragment over the configured sample. Heights default to the
/// builders themselves.
pub fn cmd_tree(
    builders: &[Ordinal],
    heights: &[Ordinal],
    variant: TreeVariant,
    iso: bool,
    cfg: &CliConfig,
) -> Result<Output> {
    let p = cfg.provider.load()?;
    let sample = cfg.sample_spec().generate(&p)?;
    let heights = if heights.is_empty() { builders } else { heights };
    let fragment = Fragment::build(&p, builders, heights, &sample)?;
    let iso = iso.then(|| fragment.iso_check());
    let passed = iso.as_ref().is_none_or(IsoOutcome::passed);
    let report = TreeReport {
        variant,
        nodes: fragment
            .nodes
            .iter()
            .map(|n| NodeHeader {
                builder: n.builder.clone(),
                height: n.height.clone(),
            })
            .collect(),
        verdicts: fragment.verdicts(variant),
        sample: fragment.sample.clone(),
        iso,
    };
    let body = cfg.render(&report, || report.to_string(), Some(fragment.to_dot(variant)))?;
    Ok(Output { body, passed })
}

/// Reads a JSON document given inline (`{...}`) or as a file path.
pub fn read_json_arg<T: serde::de::DeserializeOwned>(arg: &str) -> Result<T> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg)?
    };
    Ok(serde_json::from_str(&text)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CohenCommand {
    /// `C^x_α` with its first `count` entries.
    Modify { real: CohenReal, alpha: Ordinal, count: usize },
    DensityCheck { condition: ForcingCondition, alpha: Ordinal, n: usize },
    Extend { condition: ForcingCondition, alpha: Ordinal, n: usize, bound: usize },
    /// Meets every `d_(α,n)` listed and reports `ζ^x_α` per target ordinal.
    Generic { targets: Vec<(Ordinal, usize)> },
    Scenario { path: PathBuf, mutate: bool },
}

/// `α:n` pairs separated by commas, e.g. `w:0,w^2:3`.
pub fn parse_targets(text: &str) -> Result<Vec<(Ordinal, usize)>> {
    text.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let (a, n) = t.trim().rsplit_once(':').ok_or_else(|| bad_target(t))?;
            Ok((a.parse()?, n.parse().map_err(|_| bad_target(t))?))
        })
        .collect()
}

fn bad_target(t: &str) -> Error {
    Error::Io(std::io::Error::new(
        std::io::ErrorKind::InvalidInput,
        format!("target {t:?} is not of the form <ordinal>:<n>"),
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModifyReport {
    pub ladder: crate::forcing::ModifiedLadder,
    pub prefix: Vec<Ordinal>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DensityReport {
    pub alpha: Ordinal,
    pub n: usize,
    pub member: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenericReport {
    pub seed: u64,
    pub real: CohenReal,
    #[serde(serialize_with = "literal_map")]
    pub sup: BTreeMap<Ordinal, Ordinal>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScenarioReport {
    pub name: String,
    pub gamma: Ordinal,
    pub delta: Ordinal,
    pub mutated: bool,
    pub result: AgreementOutcome,
}

fn codes_text(positions: &BTreeMap<usize, BTreeSet<BigUint>>) -> String {
    let mut out = String::new();
    for (m, codes) in positions {
        let decoded: Vec<String> = codes
            .iter()
            .map(|c| decode(c).map_or_else(|| format!("#{c}"), |o| o.to_string()))
            .collect();
        let raw: Vec<String> = codes.iter().map(BigUint::to_string).collect();
        let _ = writeln!(out, "  {m}: {{{}}} = {{{}}}", raw.join(", "), decoded.join(", "));
    }
    out
}

pub fn cmd_cohen(command: &CohenCommand, cfg: &CliConfig) -> Result<Output> {
    match command {
        CohenCommand::Modify { real, alpha, count } => {
            let p = cfg.provider.load()?;
            let ladder = modify(&p, real, alpha)?;
            let prefix = ladder.merged(&p, if alpha.is_limit() { *count } else { 1 })?;
            let report = ModifyReport { ladder, prefix };
            let text = || {
                let mut s = format!("C^x_{{{alpha}}}: {}, ...\nzeta: {}\n", join(&report.prefix), report.ladder.zeta);
                for (n, part) in &report.ladder.d_parts {
                    let _ = writeln!(s, "  D({n}) = {}", braced(part));
                }
                s
            };
            Ok(Output {
                body: cfg.render(&report, text, None)?,
                passed: true,
            })
        }
        CohenCommand::DensityCheck { condition, alpha, n } => {
            let member = density_member(&cfg.provider.load()?, condition, alpha, *n)?;
            let report = DensityReport {
                alpha: alpha.clone(),
                n: *n,
                member,
            };
            let text = || format!("d_({alpha},{n}): {}\n", if member { "member" } else { "not a member" });
            Ok(Output {
                body: cfg.render(&report, text, None)?,
                passed: member,
            })
        }
        CohenCommand::Extend { condition, alpha, n, bound } => {
            let p = density_extend(&cfg.provider.load()?, condition, alpha, *n, *bound)?;
            let text = || format!("p:\n{}", codes_text(p.positions()));
            Ok(Output {
                body: cfg.render(&p, text, None)?,
                passed: true,
            })
        }
        CohenCommand::Generic { targets } => {
            let base = cfg.provider.load()?;
            let seed = cfg.seed.unwrap_or(0);
            let real = generic_approx(&base, targets, seed)?;
            let modified = ModifiedProvider::new(&base, real.clone());
            let sup = targets
                .iter()
                .map(|(a, _)| a.clone())
                .collect::<BTreeSet<_>>()
                .into_iter()
                .map(|a| Ok((a.clone(), modified.ladder(&a)?.zeta)))
                .collect::<Result<_>>()?;
            let report = GenericReport { seed, real, sup };
            let text = || {
                let mut s = format!("x (seed {seed}):\n{}", codes_text(report.real.support()));
                for (a, z) in &report.sup {
                    let _ = writeln!(s, "zeta_{{{a}}} = {z}");
                }
                s
            };
            Ok(Output {
                body: cfg.render(&report, text, None)?,
                passed: true,
            })
        }
        CohenCommand::Scenario { path, mutate } => {
            let mut s = Scenario::load(path)?;
            if *mutate {
                s = s.mutated();
            }
            let result = s.run()?;
            let passed = result.is_pass();
            let report = ScenarioReport {
                name: s.name.clone(),
                gamma: s.gamma.clone(),
                delta: s.delta.clone(),
                mutated: *mutate,
                result,
            };
            let text = || scenario_text(&report);
            Ok(Output {
                body: cfg.render(&report, text, None)?,
                passed,
            })
        }
    }
}

fn scenario_text(r: &ScenarioReport) -> String {
    let mut s = format!("scenario {} (gamma = {}, delta = {})\n", r.name, r.gamma, r.delta);
    match &r.result {
        AgreementOutcome::Pass { checked } => {
            let _ = writeln!(s, "PASS: {checked} ordinals below gamma agree");
        }
        AgreementOutcome::NotApplicable {
            index,
            delta_entry,
            gamma_entry,
        } => {
            let _ = writeln!(
                s,
                "NOT APPLICABLE: C^x_delta meets gamma in {delta_entry} where C^x_gamma({index}) = {gamma_entry}"
            );
        }
        AgreementOutcome::Fail { total, disagreements } => {
            let _ = writeln!(s, "FAIL: {total} disagreements");
            for d in disagreements {
                let _ = match d {
                    Disagreement::Weight { zeta, gamma_side, delta_side } => {
                        writeln!(s, "  e at {zeta}: {gamma_side} vs {delta_side}")
                    }
                    Disagreement::LowerTrace { zeta, gamma_side, delta_side } => {
                        writeln!(s, "  L at {zeta}: {} vs {}", braced(gamma_side), braced(delta_side))
                    }
                    Disagreement::Oscillation { zeta, gamma_side, delta_side } => {
                        writeln!(s, "  osc at {zeta}: {gamma_side} vs {delta_side}")
                    }
                };
            }
        }
    }
    s
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        writeln!(f, "{status} {}: {} cases, {} failures", self.suite, self.cases, self.failures.len())?;
        for x in self.failures.iter().take(20) {
            writeln!(f, "  {}: {} at {}", x.law, x.detail, x.input)?;
        }
        for p in &self.pins {
            let mark = if p.matched { "ok" } else { "MISMATCH" };
            writeln!(f, "  pin {} = {} [{mark}]", p.name, p.actual)?;
            if !p.matched {
                writeln!(f, "    expected {}", p.expected)?;
            }
        }
        Ok(())
    }
}

pub fn cmd_verify(suite: &str, pins: Option<&Path>, cfg: &CliConfig) -> Result<Output> {
    let report = run_suite_with_pins(&cfg.provider.load()?, suite, &cfg.sample_spec(), pins)?;
    Ok(Output {
        body: cfg.render(&report, || report.to_string(), None)?,
        passed: report.passed,
    })
}

/// A condition given inline or as a file; absent means the empty condition.
pub fn parse_condition(arg: Option<&str>) -> Result<ForcingCondition> {
    match arg {
        None => Ok(ForcingCondition::new()),
        Some(a) => read_json_arg(a),
    }
}

pub fn parse_real(arg: Option<&str>) -> Result<CohenReal> {
    match arg {
        None => Ok(CohenReal::empty()),
        Some(a) => read_json_arg(a),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordinal::ord;
    use serde_json::Value;

    fn json_cfg() -> CliConfig {
        CliConfig {
            format: Format::Json,
            ..CliConfig::default()
        }
    }

    #[test]
    fn provider_choice_parses() {
        assert_eq!("canonical".parse::<ProviderChoice>().unwrap(), ProviderChoice::Canonical);
        assert_eq!(
            "override:a.json".parse::<ProviderChoice>().unwrap(),
            ProviderChoice::Override("a.json".into())
        );
        assert!("override:".parse::<ProviderChoice>().is_err());
        assert!("other".parse::<ProviderChoice>().is_err());
    }

    #[test]
    fn walk_five_to_three() {
        let r = walk_report(&Canonical, &ord("5"), &ord("3")).unwrap();
        assert_eq!(r.upper, vec![ord("5"), ord("4")]);
        assert!(r.lower.is_empty());
        assert_eq!((r.rho0, r.osc), (2, 0));
        assert_eq!(r.o.to_string(), "z_{3}^1");
        let same = walk_report(&Canonical, &ord("w"), &ord("w")).unwrap();
        assert!(same.upper.is_empty() && same.lower.is_empty() && same.weights.is_empty());
    }

    #[test]
    fn walk_json_shape() {
        let out = cmd_walk(&ord("w"), &ord("3"), &json_cfg()).unwrap();
        let v: Value = serde_json::from_str(&out.body).unwrap();
        // 1 = [[[], 1]], w = [[1, 1]], 2 = [[[], 2]]
        assert_eq!(v["upper"], serde_json::json!([[[[[[], 1]], 1]]]));
        assert_eq!(v["lower"], serde_json::json!([[[[], 2]]]));
        assert_eq!(v["weights"]["w"], 2);
        assert_eq!(v["o"], serde_json::json!({"base": "3", "exp": 1}));
    }

    #[test]
    fn targets_parse() {
        assert_eq!(parse_targets("w:0, w^2:3").unwrap(), vec![(ord("w"), 0), (ord("w^2"), 3)]);
        assert!(parse_targets("w").is_err());
    }

    #[test]
    fn modify_empty_real_is_base_prefix() {
        let out = cmd_cohen(
            &CohenCommand::Modify {
                real: CohenReal::empty(),
                alpha: ord("w^2"),
                count: 3,
            },
            &CliConfig::default(),
        )
        .unwrap();
        assert!(out.body.starts_with("C^x_{w^2}: w, w*2, w*3, ..."), "{}", out.body);
    }
}
