//! Sampled fragments of the trees `T(o)` and `T(osc)`.
//!
//! A node `w_β↾γ` is a function on all of `γ`; here it is only evaluated on
//! a finite sample of coordinates. A sampled disagreement below both heights
//! is a certificate that two nodes are incomparable. Sampled agreement is
//! evidence only, and the verdict types keep the two apart.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::csequence::CSequence;
use crate::error::{Error, Result};
use crate::ordinal::Ordinal;
use crate::oscillation::{literal_keys, o_point, osc, CirclePoint};

/// Which value family a comparison reads.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TreeVariant {
    Osc,
    O,
}

/// `w_β↾γ` and `osc(·, β)↾γ` evaluated on `sample ∩ γ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampledTreeNode {
    pub builder: Ordinal,
    pub height: Ordinal,
    pub sample: Vec<Ordinal>,
    #[serde(serialize_with = "literal_keys")]
    pub osc_values: BTreeMap<Ordinal, usize>,
    #[serde(serialize_with = "literal_keys")]
    pub o_values: BTreeMap<Ordinal, CirclePoint>,
}

fn normalized(sample: &[Ordinal]) -> Vec<Ordinal> {
    let mut s = sample.to_vec();
    s.sort();
    s.dedup();
    s
}

/// The node `w_β↾γ` for `γ ≤ β`, evaluated on the sample.
pub fn node<P: CSequence + ?Sized>(
    p: &P,
    beta: &Ordinal,
    gamma: &Ordinal,
    sample: &[Ordinal],
) -> Result<SampledTreeNode> {
    if gamma > beta {
        return Err(Error::Order {
            lower: gamma.clone(),
            upper: beta.clone(),
        });
    }
    let sample = normalized(sample);
    let mut osc_values = BTreeMap::new();
    let mut o_values = BTreeMap::new();
    for z in sample.iter().filter(|z| *z < gamma) {
        osc_values.insert(z.clone(), osc(p, z, beta)?);
        o_values.insert(z.clone(), o_point(p, z, beta)?);
    }
    Ok(SampledTreeNode {
        builder: beta.clone(),
        height: gamma.clone(),
        sample,
        osc_values,
        o_values,
    })
}

impl SampledTreeNode {
    /// Restriction of this node to a lower height, reusing computed values.
    pub fn restrict(&self, height: &Ordinal) -> Option<SampledTreeNode> {
        if *height > self.height {
            return None;
        }
        Some(SampledTreeNode {
            builder: self.builder.clone(),
            height: height.clone(),
            sample: self.sample.clone(),
            osc_values: self.osc_values.range(..height.clone()).map(|(k, v)| (k.clone(), *v)).collect(),
            o_values: self
                .o_values
                .range(..height.clone())
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        })
    }
}

/// Outcome of asking whether the right node end-extends the left one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ComparisonVerdict {
    /// The right node is strictly shorter, so it cannot extend the left one.
    /// `witness` is the right node's height: a coordinate where the left
    /// node is defined and the right one is not. The left node
    /// sample-extends the right one.
    ExtendsCertifiedFalse { witness: Ordinal },
    /// Taller right node agreeing on every sampled coordinate below the
    /// left height.
    SampledExtends,
    /// Equal heights, agreement on the sample.
    SampledEqual,
    /// The nodes disagree at `at`, below both heights.
    IncomparableCertified { at: Ordinal },
}

impl ComparisonVerdict {
    /// Sampled evidence that one node extends the other.
    pub fn is_comparable_evidence(&self) -> bool {
        matches!(
            self,
            ComparisonVerdict::SampledExtends | ComparisonVerdict::ExtendsCertifiedFalse { .. }
        )
    }
}

fn compare_maps<V: PartialEq>(
    left: (&Ordinal, &BTreeMap<Ordinal, V>),
    right: (&Ordinal, &BTreeMap<Ordinal, V>),
) -> ComparisonVerdict {
    let h = left.0.min(right.0);
    for (z, v) in left.1.range(..h.clone()) {
        if right.1.get(z) != Some(v) {
            return ComparisonVerdict::IncomparableCertified { at: z.clone() };
        }
    }
    match left.0.cmp(right.0) {
        std::cmp::Ordering::Equal => ComparisonVerdict::SampledEqual,
        std::cmp::Ordering::Less => ComparisonVerdict::SampledExtends,
        std::cmp::Ordering::Greater => ComparisonVerdict::ExtendsCertifiedFalse {
            witness: right.0.clone(),
        },
    }
}

/// Compares two nodes of `T(o)`.
pub fn compare(n1: &SampledTreeNode, n2: &SampledTreeNode) -> Result<ComparisonVerdict> {
    compare_by(n1, n2, TreeVariant::O)
}

/// Compares two nodes through either value family.
pub fn compare_by(
    n1: &SampledTreeNode,
    n2: &SampledTreeNode,
    variant: TreeVariant,
) -> Result<ComparisonVerdict> {
    if n1.sample != n2.sample {
        return Err(Error::SampleMismatch);
    }
    Ok(match variant {
        TreeVariant::Osc => compare_maps(
            (&n1.height, &n1.osc_values),
            (&n2.height, &n2.osc_values),
        ),
        TreeVariant::O => compare_maps((&n1.height, &n1.o_values), (&n2.height, &n2.o_values)),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum AntichainVerdict {
    /// Every pair is certified incomparable.
    Certified,
    /// No comparable pair was seen, but these pairs agree on the sample at
    /// equal heights and are undetermined.
    ConsistentUnverified { pairs: Vec<(usize, usize)> },
    /// This pair shows sampled extension at different heights.
    No { pair: (usize, usize) },
}

pub fn is_antichain(nodes: &[SampledTreeNode]) -> Result<AntichainVerdict> {
    is_antichain_by(nodes, TreeVariant::O)
}

pub fn is_antichain_by(nodes: &[SampledTreeNode], variant: TreeVariant) -> Result<AntichainVerdict> {
    let mut open = Vec::new();
    for i in 0..nodes.len() {
        for j in i + 1..nodes.len() {
            match compare_by(&nodes[i], &nodes[j], variant)? {
                ComparisonVerdict::IncomparableCertified { .. } => {}
                ComparisonVerdict::SampledEqual => open.push((i, j)),
                _ => return Ok(AntichainVerdict::No { pair: (i, j) }),
            }
        }
    }
    Ok(if open.is_empty() {
        AntichainVerdict::Certified
    } else {
        AntichainVerdict::ConsistentUnverified { pairs: open }
    })
}

/// A finite set of nodes sharing one sample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fragment {
    pub sample: Vec<Ordinal>,
    pub nodes: Vec<SampledTreeNode>,
}

/// Pairwise verdicts, `matrix[i][j]` = compare(node i, node j).
pub type VerdictMatrix = Vec<Vec<ComparisonVerdict>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoMismatch {
    pub left: usize,
    pub right: usize,
    pub from_osc: ComparisonVerdict,
    pub from_o: ComparisonVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum IsoOutcome {
    Pass { nodes: usize, comparisons: usize },
    Fail { mismatches: Vec<IsoMismatch> },
}

impl IsoOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, IsoOutcome::Pass { .. })
    }
}

impl Fragment {
    /// Every node `w_β↾γ` with `β` in `builders`, `γ` in `heights`, `γ ≤ β`.
    /// Values are computed once per builder and restricted per height.
    pub fn build<P: CSequence + ?Sized>(
        p: &P,
        builders: &[Ordinal],
        heights: &[Ordinal],
        sample: &[Ordinal],
    ) -> Result<Fragment> {
        let builders = normalized(builders);
        let heights = normalized(heights);
        let sample = normalized(sample);
        let mut nodes = Vec::new();
        for beta in &builders {
            let full = node(p, beta, beta, &sample)?;
            for gamma in heights.iter().filter(|g| *g <= beta) {
                nodes.push(full.restrict(gamma).expect("gamma <= beta"));
            }
        }
        Ok(Fragment { sample, nodes })
    }

    pub fn verdicts(&self, variant: TreeVariant) -> VerdictMatrix {
        self.nodes
            .iter()
            .map(|a| {
                self.nodes
                    .iter()
                    .map(|b| compare_by(a, b, variant).expect("fragment nodes share a sample"))
                    .collect()
            })
            .collect()
    }

    /// Compares the verdict matrices computed from osc-values and from
    /// o-values, entry by entry.
    pub fn iso_check(&self) -> IsoOutcome {
        let from_osc = self.verdicts(TreeVariant::Osc);
        let from_o = self.verdicts(TreeVariant::O);
        let mut mismatches = Vec::new();
        for (i, (row_osc, row_o)) in from_osc.iter().zip(&from_o).enumerate() {
            for (j, (a, b)) in row_osc.iter().zip(row_o).enumerate() {
                if a != b {
                    mismatches.push(IsoMismatch {
                        left: i,
                        right: j,
                        from_osc: a.clone(),
                        from_o: b.clone(),
                    });
                }
            }
        }
        if mismatches.is_empty() {
            IsoOutcome::Pass {
                nodes: self.nodes.len(),
                comparisons: self.nodes.len() * self.nodes.len(),
            }
        } else {
            IsoOutcome::Fail { mismatches }
        }
    }

    /// A node and coordinate whose o-value is shared with another node of
    /// the same builder, so that perturbing it must change some verdict.
    pub fn mutation_target(&self) -> Option<(usize, Ordinal)> {
        for (i, a) in self.nodes.iter().enumerate() {
            for b in &self.nodes[i + 1..] {
                if a.builder != b.builder {
                    continue;
                }
                let h = a.height.clone().min(b.height.clone());
                if let Some((z, _)) = a.o_values.range(..h).next() {
                    return Some((i, z.clone()));
                }
            }
        }
        None
    }

    /// Copy of the fragment with the exponent of one o-value raised by one.
    pub fn with_mutated_o(&self, node: usize, zeta: &Ordinal) -> Option<Fragment> {
        let mut out = self.clone();
        match out.nodes.get_mut(node)?.o_values.get_mut(zeta)? {
            CirclePoint::Pow { exp, .. } => *exp += 1,
            CirclePoint::Unit => return None,
        }
        Some(out)
    }

    /// Graphviz rendering. Solid edges join consecutive heights of one
    /// builder (true extensions); dashed edges join nodes of different
    /// builders at consecutive heights that agree on the sample.
    pub fn to_dot(&self, variant: TreeVariant) -> String {
        let verdicts = self.verdicts(variant);
        let heights = normalized(&self.nodes.iter().map(|n| n.height.clone()).collect::<Vec<_>>());
        let next_height = |h: &Ordinal| heights.iter().find(|x| *x > h).cloned();
        let mut out = String::from("digraph fragment {\n  rankdir=BT;\n");
        for (i, n) in self.nodes.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"w_{{{}}} | {}\"];", n.builder, n.height);
        }
        for (i, a) in self.nodes.iter().enumerate() {
            let Some(up) = next_height(&a.height) else {
                continue;
            };
            for (j, b) in self.nodes.iter().enumerate() {
                if b.height != up {
                    continue;
                }
                if a.builder == b.builder {
                    let _ = writeln!(out, "  n{i} -> n{j};");
                } else if verdicts[i][j] == ComparisonVerdict::SampledExtends {
                    let _ = writeln!(out, "  n{i} -> n{j} [style=dashed];");
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Builds the fragment and checks that the osc- and o-verdicts coincide.
pub fn iso_check<P: CSequence + ?Sized>(
    p: &P,
    builders: &[Ordinal],
    heights: &[Ordinal],
    sample: &[Ordinal],
) -> Result<IsoOutcome> {
    Ok(Fragment::build(p, builders, heights, sample)?.iso_check())
}
