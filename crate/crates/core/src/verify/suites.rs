use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::csequence::{check_ladder, CSequence};
use crate::error::Result;
use crate::forcing::{
    condition_leq, density_extend, density_member, family_value, generic_approx, modified_provider, modify,
    standard_scenarios, AgreementOutcome, CohenReal, ForcingCondition, DEFAULT_SEARCH_BOUND,
};
use crate::ordinal::{code, ord, Ordinal};
use crate::oscillation::{o_point, osc, osc_on_interval, w_restriction, CirclePoint};
use crate::tree::{compare_by, ComparisonVerdict, Fragment, TreeVariant};
use crate::walks::{fact1_from_traces, fact2_probe, walk, weight, Fact1Outcome};

use super::oracle;
use super::{Failure, Suite};

/// Builders drawn for the tree fragment; `n` builders give about `n²/2` nodes.
const FRAGMENT_BUILDERS: usize = 32;
const DENSITY_CASES: usize = 200;
const FACT2_MAX_DEPTH: usize = 1 << 10;

pub(super) struct Run {
    suite: Suite,
    pub cases: usize,
    pub failures: Vec<Failure>,
}

fn lit(a: &Ordinal) -> Value {
    Value::from(a.to_string())
}

fn lits(items: &[Ordinal]) -> Value {
    Value::from(items.iter().map(Ordinal::to_string).collect::<Vec<_>>())
}

fn pairs(sample: &[Ordinal]) -> impl Iterator<Item = (&Ordinal, &Ordinal)> {
    sample
        .iter()
        .enumerate()
        .flat_map(move |(j, b)| sample[..=j].iter().map(move |a| (a, b)))
}

impl Run {
    pub fn new(suite: Suite) -> Self {
        Run {
            suite,
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, law: &str, input: impl FnOnce() -> Value, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(Failure {
                law: format!("{}.{law}", self.suite),
                input: input(),
                detail: detail(),
            });
        }
    }

    pub fn execute<P: CSequence>(&mut self, p: &P, sample: &[Ordinal], seed: u64) -> Result<()> {
        match self.suite {
            Suite::Facts => self.facts(p, sample),
            Suite::Weights => self.weights(p, sample),
            Suite::Oscillation => self.oscillation(p, sample),
            Suite::Iso => self.iso(p, sample, seed),
            Suite::Forcing => self.forcing(p, sample, seed),
        }
    }

    fn facts<P: CSequence>(&mut self, p: &P, sample: &[Ordinal]) -> Result<()> {
        let mut lower: BTreeMap<(&Ordinal, &Ordinal), Vec<Ordinal>> = BTreeMap::new();
        for (a, b) in pairs(sample) {
            let t = walk(p, a, b)?;
            let input = || json!({"alpha": lit(a), "beta": lit(b)});
            if a == b {
                self.check(t.upper.is_empty(), "upper_empty_on_diagonal", input, || format!("{:?}", t.upper));
                self.check(t.lower.is_empty(), "lower_empty_on_diagonal", input, || format!("{:?}", t.lower));
            } else {
                self.check(t.upper.first() == Some(b), "upper_starts_at_beta", input, || format!("{:?}", t.upper));
                let again = {
                    let next = p.min_above(b, a)?;
                    let mut u = walk(p, a, &next)?.upper;
                    u.insert(0, b.clone());
                    u
                };
                self.check(again == t.upper, "upper_recursion", input, || format!("{:?} vs {:?}", t.upper, again));
            }
            self.check(
                t.upper.windows(2).all(|w| w[0] > w[1]),
                "upper_strictly_decreasing",
                input,
                || format!("{:?}", t.upper),
            );
            self.check(t.rho0 == t.upper.len(), "rho0_is_upper_length", input, || t.rho0.to_string());
            self.check(
                t.lower.iter().all(|z| z < a) && t.lower.windows(2).all(|w| w[0] < w[1]),
                "lower_increasing_below_alpha",
                input,
                || format!("{:?}", t.lower),
            );
            let ou = oracle::upper(p, a, b)?;
            self.check(ou == t.upper, "upper_matches_oracle", input, || format!("{:?} vs {ou:?}", t.upper));
            let ol = oracle::lower(p, a, b)?;
            self.check(ol == t.lower, "lower_matches_oracle", input, || format!("{:?} vs {ol:?}", t.lower));
            lower.insert((a, b), t.lower);
        }
        // Fact 1 over every sampled triple, reusing the traces above
        for (j, b) in sample.iter().enumerate() {
            for (i, g) in sample[..=j].iter().enumerate() {
                let high = &lower[&(g, b)];
                for a in &sample[..=i] {
                    let outcome = fact1_from_traces(&lower[&(a, b)], &lower[&(a, g)], high);
                    match outcome {
                        Fact1Outcome::NotApplicable => {}
                        Fact1Outcome::Holds => self.cases += 1,
                        Fact1Outcome::Violated { .. } => self.check(
                            false,
                            "fact1",
                            || json!({"alpha": lit(a), "gamma": lit(g), "beta": lit(b)}),
                            || serde_json::to_string(&outcome).unwrap_or_default(),
                        ),
                    }
                }
            }
        }
        // the pinned reason for the strict set comparison
        let (l35, l5w, l3w) = (
            walk(p, &ord("3"), &ord("5"))?.lower,
            walk(p, &ord("5"), &ord("w"))?.lower,
            walk(p, &ord("3"), &ord("w"))?.lower,
        );
        let vacuous: Vec<Ordinal> = l5w.iter().chain(&l35).cloned().collect();
        self.check(
            l35.is_empty() && l5w == [ord("4")] && l3w == [ord("2")] && vacuous != l3w,
            "fact1_vacuous_counterexample",
            || json!({"alpha": "3", "gamma": "5", "beta": "w"}),
            || format!("L(3,5)={l35:?} L(5,w)={l5w:?} L(3,w)={l3w:?}"),
        );
        // Fact 2 on every sampled limit
        for beta in sample.iter().filter(|b| b.is_limit()) {
            let targets: Vec<Ordinal> = sample.iter().filter(|x| *x < beta).cloned().collect();
            let mut depth = 8;
            let report = loop {
                let r = fact2_probe(p, beta, &targets, depth)?;
                if depth >= FACT2_MAX_DEPTH || r.thresholds.iter().all(|(_, t)| t.is_some()) {
                    break r;
                }
                depth *= 4;
            };
            let input = || json!({"beta": lit(beta), "depth": report.depth});
            self.check(
                report.exact_law_failures.is_empty(),
                "fact2_exact_law",
                input,
                || format!("indices {:?}", report.exact_law_failures),
            );
            for (xi, t) in &report.thresholds {
                self.check(
                    t.is_some(),
                    "fact2_threshold",
                    || json!({"beta": lit(beta), "xi": lit(xi), "depth": report.depth}),
                    || "no threshold within depth".into(),
                );
            }
        }
        Ok(())
    }

    fn weights<P: CSequence>(&mut self, p: &P, sample: &[Ordinal]) -> Result<()> {
        for (a, b) in pairs(sample).filter(|(a, b)| a < b) {
            let (main, naive) = (weight(p, b, a)?, oracle::weight(p, b, a)?);
            self.check(
                main == naive,
                "weight_matches_oracle",
                || json!({"beta": lit(b), "alpha": lit(a)}),
                || format!("{main} vs {naive}"),
            );
        }
        for a in sample {
            let e = weight(p, &a.succ(), a)?;
            self.check(e == 0, "successor_weight_zero", || json!({"alpha": lit(a)}), || e.to_string());
        }
        let (w3, five3) = (weight(p, &ord("w"), &ord("3"))?, weight(p, &ord("5"), &ord("3"))?);
        self.check(w3 == 2 && five3 == 0, "weight_examples", || json!(["e_w(3)", "e_5(3)"]), || {
            format!("{w3}, {five3}")
        });
        Ok(())
    }

    fn oscillation<P: CSequence>(&mut self, p: &P, sample: &[Ordinal]) -> Result<()> {
        for (a, b) in pairs(sample) {
            let input = || json!({"alpha": lit(a), "beta": lit(b)});
            let lower = walk(p, a, b)?.lower;
            let value = osc(p, a, b)?;
            let naive = oracle::osc(p, a, b)?;
            self.check(value == naive, "osc_matches_oracle", input, || format!("{value} vs {naive}"));
            if lower.len() <= 1 {
                self.check(value == 0, "osc_degenerate_zero", input, || value.to_string());
            }
            self.check(
                value <= lower.len().saturating_sub(1),
                "osc_bounded_by_trace",
                input,
                || format!("{value} with |L| = {}", lower.len()),
            );
            let o = o_point(p, a, b)?;
            let want = CirclePoint::Pow {
                base: a.clone(),
                exp: value as u64 + 1,
            };
            self.check(o == want, "o_point_exponent", input, || o.to_string());
            for k in 1..lower.len() {
                let sum = osc_on_interval(p, a, b, &lower[..k])? + osc_on_interval(p, a, b, &lower[k..])?;
                self.check(sum == value, "osc_split_additive", || json!({"alpha": lit(a), "beta": lit(b), "split": k}), || {
                    format!("{sum} vs {value}")
                });
            }
        }
        for b in sample {
            let r = w_restriction(p, b, sample)?;
            for (a, v) in &r.values {
                let want = if a < b { o_point(p, a, b)? } else { CirclePoint::Unit };
                self.check(*v == want, "w_restriction_pointwise", || json!({"beta": lit(b), "alpha": lit(a)}), || {
                    v.to_string()
                });
            }
        }
        Ok(())
    }

    fn iso<P: CSequence>(&mut self, p: &P, sample: &[Ordinal], seed: u64) -> Result<()> {
        let builders: Vec<Ordinal> = if sample.len() <= FRAGMENT_BUILDERS {
            sample.to_vec()
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut idx = rand::seq::index::sample(&mut rng, sample.len(), FRAGMENT_BUILDERS).into_vec();
            idx.sort_unstable();
            idx.into_iter().map(|i| sample[i].clone()).collect()
        };
        let fragment = Fragment::build(p, &builders, &builders, sample)?;
        let input = || json!({"builders": lits(&builders), "nodes": fragment.nodes.len()});
        let outcome = fragment.iso_check();
        self.check(outcome.passed(), "iso_verdicts_agree", input, || {
            serde_json::to_string(&outcome).unwrap_or_default()
        });
        for a in &fragment.nodes {
            for b in fragment.nodes.iter().filter(|b| b.builder == a.builder) {
                let v = compare_by(a, b, TreeVariant::Osc)?;
                let certified = matches!(v, ComparisonVerdict::IncomparableCertified { .. });
                self.check(
                    !certified,
                    "same_builder_nesting",
                    || json!({"builder": lit(&a.builder), "heights": [lit(&a.height), lit(&b.height)]}),
                    || format!("{v:?}"),
                );
            }
        }
        if let Some((i, z)) = fragment.mutation_target() {
            let caught = fragment
                .with_mutated_o(i, &z)
                .map(|m| !m.iso_check().passed())
                .unwrap_or(false);
            self.check(caught, "mutation_detected", || json!({"node": i, "zeta": lit(&z)}), || {
                "mutated fragment still passes".into()
            });
        }
        Ok(())
    }

    fn forcing<P: CSequence>(&mut self, p: &P, sample: &[Ordinal], seed: u64) -> Result<()> {
        // identity law for the empty real
        let empty = modified_provider(p, CohenReal::empty());
        for a in sample.iter().filter(|a| !a.is_zero()) {
            let len = if a.is_successor() { 1 } else { 6 };
            for n in 0..len {
                let (x, y) = (empty.fundamental(a, n)?, p.fundamental(a, n)?);
                self.check(x == y, "empty_real_fundamental", || json!({"alpha": lit(a), "n": n}), || {
                    format!("{x} vs {y}")
                });
            }
            for xi in sample.iter().filter(|xi| a.is_successor() || *xi < a) {
                let (x, y) = (empty.count_below(a, xi)?, p.count_below(a, xi)?);
                self.check(x == y, "empty_real_count", || json!({"alpha": lit(a), "xi": lit(xi)}), || {
                    format!("{x} vs {y}")
                });
            }
        }
        for (a, b) in pairs(sample) {
            let (x, y) = (osc(&empty, a, b)?, osc(p, a, b)?);
            self.check(x == y, "empty_real_osc", || json!({"alpha": lit(a), "beta": lit(b)}), || {
                format!("{x} vs {y}")
            });
        }
        // density sets, and validity of every ladder built from their members
        let alphas = [ord("w"), ord("w*2"), ord("w^2"), ord("w^(w)")];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for case in 0..DENSITY_CASES {
            let alpha = &alphas[rng.gen_range(0..alphas.len())];
            let n = rng.gen_range(0..20usize);
            let mut q = ForcingCondition::new();
            for _ in 0..rng.gen_range(0..4) {
                let m = rng.gen_range(0..25usize);
                let mut values = BTreeSet::new();
                for _ in 0..rng.gen_range(0..4) {
                    if rng.gen_bool(0.5) && !sample.is_empty() {
                        values.insert(code(&sample[rng.gen_range(0..sample.len())]));
                    } else {
                        values.insert(rng.gen_range(0u64..1_000_000).into());
                    }
                }
                q = q.with(m, values);
            }
            let input = || json!({"case": case, "alpha": lit(alpha), "n": n, "q": q});
            let pext = density_extend(p, &q, alpha, n, DEFAULT_SEARCH_BOUND)?;
            self.check(condition_leq(&pext, &q), "density_extend_below_input", input, || {
                serde_json::to_string(&pext).unwrap_or_default()
            });
            self.check(density_member(p, &pext, alpha, n)?, "density_extend_member", input, || {
                serde_json::to_string(&pext).unwrap_or_default()
            });
            let again = density_extend(p, &pext, alpha, n, DEFAULT_SEARCH_BOUND)?;
            self.check(density_member(p, &again, alpha, n)?, "density_extend_on_member", input, || {
                serde_json::to_string(&again).unwrap_or_default()
            });
            let x = CohenReal::through(&pext);
            let ladder = modify(p, &x, alpha)?;
            let mp = modified_provider(p, x);
            let mut probes: Vec<Ordinal> = sample.iter().filter(|s| *s < alpha).cloned().collect();
            probes.extend(ladder.d_parts.values().flatten().flat_map(|z| [z.clone(), z.succ()]));
            let verdict = check_ladder(&mp, alpha, 8, &probes);
            self.check(verdict.is_ok(), "modified_ladder_valid", input, || format!("{verdict:?}"));
        }
        // generic approximations push the modified omega-ladder upwards
        let w = ord("w");
        for bound in [10usize, 100, 1000] {
            let targets: Vec<(Ordinal, usize)> = (0..bound).map(|k| (w.clone(), k)).collect();
            let x = generic_approx(p, &targets, seed)?;
            let zeta = modify(p, &x, &w)?.zeta;
            self.check(
                zeta > Ordinal::finite(bound as u64),
                "generic_sup_grows",
                || json!({"targets": bound}),
                || format!("sup = {zeta}"),
            );
        }
        // the family is one injection seen through different windows
        let limits: Vec<&Ordinal> = sample.iter().filter(|a| a.is_limit()).collect();
        let successors: Vec<&Ordinal> = sample.iter().filter(|a| a.is_successor()).collect();
        for (i, g) in limits.iter().enumerate() {
            for d in &limits[i + 1..] {
                for z in successors.iter().filter(|z| **z < *g) {
                    let same = family_value(g, z)? == family_value(d, z)?;
                    self.check(same, "family_coherent", || json!({"gamma": lit(g), "delta": lit(d), "zeta": lit(z)}), || {
                        "values differ".into()
                    });
                }
            }
        }
        let codes: BTreeSet<_> = successors.iter().map(|z| code(z)).collect();
        self.check(codes.len() == successors.len(), "family_injective", || json!(successors.len()), || {
            "code collision".into()
        });
        // engineered scenarios pass; dropping the coded successor breaks them
        for s in standard_scenarios()? {
            let outcome = s.run()?;
            self.check(outcome.is_pass(), "scenario_passes", || json!(s.name), || {
                serde_json::to_string(&outcome).unwrap_or_default()
            });
            let mutated = s.mutated().run()?;
            self.check(
                !matches!(mutated, AgreementOutcome::Pass { .. }),
                "scenario_mutation_fails",
                || json!(s.name),
                || "mutation still passes".into(),
            );
        }
        Ok(())
    }
}
