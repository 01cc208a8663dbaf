//! Ordinals below ε₀ in hereditary Cantor normal form.
//!
//! An [`Ordinal`] is a list of terms `ω^e·c` with strictly decreasing
//! exponents and positive coefficients; every exponent is itself an
//! [`Ordinal`]. Values are immutable and structural equality coincides with
//! ordinal equality, so `Eq`, `Ord` and `Hash` can all be derived or written
//! directly against the term list.

mod code;
mod parse;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

pub use code::{code, decode};
pub use parse::{ParseError, ParseErrorKind};

/// One summand `ω^exponent · coefficient` of a Cantor normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    exponent: Ordinal,
    coefficient: u64,
}

impl Term {
    pub fn exponent(&self) -> &Ordinal {
        &self.exponent
    }

    pub fn coefficient(&self) -> u64 {
        self.coefficient
    }
}

/// An ordinal below ε₀.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Ordinal {
    terms: Vec<Term>,
}

/// The zero/successor/limit trichotomy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrdinalClass {
    Zero,
    Successor(Ordinal),
    Limit,
}

/// Why a term list is not a Cantor normal form.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CnfError {
    #[error("coefficient of term {index} is zero")]
    ZeroCoefficient { index: usize },
    #[error("exponent of term {index} does not strictly decrease")]
    NonDecreasing { index: usize },
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::finite(1)
    }

    pub fn omega() -> Self {
        Self::omega_pow(Self::one())
    }

    pub fn finite(n: u64) -> Self {
        if n == 0 {
            return Self::zero();
        }
        Ordinal {
            terms: vec![Term {
                exponent: Self::zero(),
                coefficient: n,
            }],
        }
    }

    /// `ω^exponent`.
    pub fn omega_pow(exponent: Ordinal) -> Self {
        Self::monomial(exponent, 1)
    }

    /// `ω^exponent · coefficient`; zero when `coefficient` is zero.
    pub fn monomial(exponent: Ordinal, coefficient: u64) -> Self {
        if coefficient == 0 {
            return Self::zero();
        }
        Ordinal {
            terms: vec![Term {
                exponent,
                coefficient,
            }],
        }
    }

    /// Builds an ordinal from `(exponent, coefficient)` pairs, checking the
    /// normal-form invariants.
    pub fn from_terms<I>(terms: I) -> Result<Self, CnfError>
    where
        I: IntoIterator<Item = (Ordinal, u64)>,
    {
        let mut out: Vec<Term> = Vec::new();
        for (index, (exponent, coefficient)) in terms.into_iter().enumerate() {
            if coefficient == 0 {
                return Err(CnfError::ZeroCoefficient { index });
            }
            if let Some(prev) = out.last() {
                if exponent >= prev.exponent {
                    return Err(CnfError::NonDecreasing { index });
                }
            }
            out.push(Term {
                exponent,
                coefficient,
            });
        }
        Ok(Ordinal { terms: out })
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value as a natural number, if the ordinal is finite.
    pub fn as_finite(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [t] if t.exponent.is_zero() => Some(t.coefficient),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.as_finite().is_some()
    }

    pub fn is_successor(&self) -> bool {
        self.terms.last().is_some_and(|t| t.exponent.is_zero())
    }

    pub fn is_limit(&self) -> bool {
        !self.is_zero() && !self.is_successor()
    }

    pub fn classify(&self) -> OrdinalClass {
        match self.pred() {
            Some(p) => OrdinalClass::Successor(p),
            None if self.is_zero() => OrdinalClass::Zero,
            None => OrdinalClass::Limit,
        }
    }

    /// Immediate predecessor of a successor ordinal.
    pub fn pred(&self) -> Option<Ordinal> {
        if !self.is_successor() {
            return None;
        }
        let mut terms = self.terms.clone();
        let last = terms.last_mut().expect("successor has a last term");
        if last.coefficient == 1 {
            terms.pop();
        } else {
            last.coefficient -= 1;
        }
        Some(Ordinal { terms })
    }

    pub fn succ(&self) -> Ordinal {
        self.add(&Ordinal::one())
    }

    /// Exponent of the leading term (zero for the ordinal zero).
    pub fn leading_exponent(&self) -> Ordinal {
        self.terms
            .first()
            .map(|t| t.exponent.clone())
            .unwrap_or_default()
    }

    /// Ordinal sum `self + rhs`. Terms of `self` below the leading exponent
    /// of `rhs` are absorbed.
    pub fn add(&self, rhs: &Ordinal) -> Ordinal {
        let Some(head) = rhs.terms.first() else {
            return self.clone();
        };
        let mut terms: Vec<Term> = self
            .terms
            .iter()
            .take_while(|t| t.exponent > head.exponent)
            .cloned()
            .collect();
        match self.terms.get(terms.len()) {
            Some(t) if t.exponent == head.exponent => {
                let coefficient = t
                    .coefficient
                    .checked_add(head.coefficient)
                    .expect("ordinal coefficient overflow");
                terms.push(Term {
                    exponent: head.exponent.clone(),
                    coefficient,
                });
                terms.extend(rhs.terms[1..].iter().cloned());
            }
            _ => terms.extend(rhs.terms.iter().cloned()),
        }
        Ordinal { terms }
    }

    /// The unique `η` with `lower + η = self`, or `None` when `lower > self`.
    pub fn sub_left(&self, lower: &Ordinal) -> Option<Ordinal> {
        let common = self
            .terms
            .iter()
            .zip(&lower.terms)
            .take_while(|(a, b)| a == b)
            .count();
        if common == lower.terms.len() {
            return Some(Ordinal {
                terms: self.terms[common..].to_vec(),
            });
        }
        let mine = self.terms.get(common)?;
        let theirs = &lower.terms[common];
        match mine.exponent.cmp(&theirs.exponent) {
            Ordering::Greater => Some(Ordinal {
                terms: self.terms[common..].to_vec(),
            }),
            Ordering::Less => None,
            Ordering::Equal if mine.coefficient > theirs.coefficient => {
                let mut terms = vec![Term {
                    exponent: mine.exponent.clone(),
                    coefficient: mine.coefficient - theirs.coefficient,
                }];
                terms.extend(self.terms[common + 1..].iter().cloned());
                Some(Ordinal { terms })
            }
            Ordering::Equal => None,
        }
    }

    /// Splits a nonzero ordinal as `γ + ω^e`, returning `(γ, e)`.
    pub fn split_last(&self) -> Option<(Ordinal, Ordinal)> {
        let last = self.terms.last()?;
        let mut terms = self.terms.clone();
        let tail = terms.last_mut().expect("nonempty");
        if tail.coefficient == 1 {
            terms.pop();
        } else {
            tail.coefficient -= 1;
        }
        Some((Ordinal { terms }, last.exponent.clone()))
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Self {
        Ordinal::finite(n)
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(&other.terms) {
            let ord = a
                .exponent
                .cmp(&b.exponent)
                .then(a.coefficient.cmp(&b.coefficient));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::ops::Add for &Ordinal {
    type Output = Ordinal;

    fn add(self, rhs: &Ordinal) -> Ordinal {
        Ordinal::add(self, rhs)
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            if t.exponent.is_zero() {
                write!(f, "{}", t.coefficient)?;
                continue;
            }
            f.write_str("w")?;
            match t.exponent.as_finite() {
                Some(1) => {}
                Some(k) => write!(f, "^{k}")?,
                None => write!(f, "^({})", t.exponent)?,
            }
            if t.coefficient > 1 {
                write!(f, "*{}", t.coefficient)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Ordinal {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse::parse(s)
    }
}

/// Nested-array encoding: `[[exponent, coefficient], ...]`, zero is `[]`.
impl Serialize for Ordinal {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for t in &self.terms {
            seq.serialize_element(&(&t.exponent, t.coefficient))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Ordinal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct TermsVisitor;

        impl<'de> Visitor<'de> for TermsVisitor {
            type Value = Ordinal;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an array of [exponent, coefficient] pairs")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Ordinal, A::Error> {
                let mut terms = Vec::new();
                while let Some(pair) = seq.next_element::<(Ordinal, u64)>()? {
                    terms.push(pair);
                }
                Ordinal::from_terms(terms).map_err(de::Error::custom)
            }
        }

        deserializer.deserialize_seq(TermsVisitor)
    }
}

/// Serde adapter for fields stored as ordinal literals (`"w^2+1"`).
pub mod literal {
    use super::Ordinal;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &Ordinal, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(value)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Ordinal, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }

    /// Same adapter for `Vec<Ordinal>`.
    pub mod vec {
        use super::Ordinal;
        use serde::ser::SerializeSeq;
        use serde::{Deserialize, Deserializer, Serializer};

        pub fn serialize<S: Serializer>(
            values: &[Ordinal],
            serializer: S,
        ) -> Result<S::Ok, S::Error> {
            let mut seq = serializer.serialize_seq(Some(values.len()))?;
            for v in values {
                seq.serialize_element(&v.to_string())?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            deserializer: D,
        ) -> Result<Vec<Ordinal>, D::Error> {
            let texts = Vec::<String>::deserialize(deserializer)?;
            texts
                .iter()
                .map(|t| t.parse().map_err(serde::de::Error::custom))
                .collect()
        }
    }
}

/// Shorthand used throughout tests and examples. Panics on malformed input.
pub fn ord(text: &str) -> Ordinal {
    text.parse()
        .unwrap_or_else(|e| panic!("bad ordinal literal {text:?}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compare_examples() {
        assert_eq!(ord("w").cmp(&ord("5")), Ordering::Greater);
        assert_eq!(ord("w^2*3+w+5").cmp(&ord("w^2*3+w+5")), Ordering::Equal);
        assert_eq!(ord("w*2+1").cmp(&ord("w^2")), Ordering::Less);
        assert!(ord("w^(w)") > ord("w^100*7+3"));
        assert!(ord("w^(w+1)") > ord("w^(w)*9"));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(Ordinal::zero().classify(), OrdinalClass::Zero);
        assert_eq!(ord("w+4").classify(), OrdinalClass::Successor(ord("w+3")));
        assert_eq!(ord("w^(w)").classify(), OrdinalClass::Limit);
        assert_eq!(ord("1").classify(), OrdinalClass::Successor(Ordinal::zero()));
    }

    #[test]
    fn add_examples() {
        assert_eq!(ord("w").add(&ord("3")), ord("w+3"));
        assert_eq!(ord("3").add(&ord("w")), ord("w"));
        // hand CNF addition: the w term of the left summand merges with w*2
        assert_eq!(ord("w^2+w").add(&ord("w*2")), ord("w^2+w*3"));
        assert_eq!(ord("w^2+w*5+1").add(&ord("w^2")), ord("w^2*2"));
        assert_eq!(ord("w^3").add(&Ordinal::zero()), ord("w^3"));
    }

    #[test]
    fn sub_left_inverts_add() {
        let cases = [("w*2+5", "w*3+2"), ("w+1", "w^2"), ("0", "w"), ("w^2", "w^2+7")];
        for (lo, hi) in cases {
            let (lo, hi) = (ord(lo), ord(hi));
            let eta = hi.sub_left(&lo).unwrap();
            assert_eq!(lo.add(&eta), hi);
        }
        assert_eq!(ord("w").sub_left(&ord("w+1")), None);
        assert_eq!(ord("w*2").sub_left(&ord("w*3")), None);
    }

    #[test]
    fn split_last_and_pred() {
        assert_eq!(ord("w^2*3").split_last(), Some((ord("w^2*2"), ord("2"))));
        assert_eq!(ord("w").add(&ord("w")).to_string(), "w*2");
        assert_eq!(ord("w^(w)+1").pred(), Some(ord("w^(w)")));
        assert_eq!(ord("w").pred(), None);
    }

    #[test]
    fn from_terms_rejects_bad_lists() {
        assert_eq!(
            Ordinal::from_terms([(ord("1"), 1), (ord("2"), 1)]),
            Err(CnfError::NonDecreasing { index: 1 })
        );
        assert_eq!(
            Ordinal::from_terms([(ord("1"), 0)]),
            Err(CnfError::ZeroCoefficient { index: 0 })
        );
    }

    #[test]
    fn json_nested_arrays() {
        let a = ord("w+3");
        let text = serde_json::to_string(&a).unwrap();
        assert_eq!(text, "[[[[[],1]],1],[[],3]]");
        let back: Ordinal = serde_json::from_str(&text).unwrap();
        assert_eq!(back, a);
        assert_eq!(serde_json::to_string(&Ordinal::zero()).unwrap(), "[]");
        assert!(serde_json::from_str::<Ordinal>("[[[],1],[[[],1],1]]").is_err());
    }
}
