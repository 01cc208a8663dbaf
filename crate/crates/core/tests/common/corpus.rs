//! Accept/reject corpus for ordinal literals, shared by the parser tests
//! and the acceptance run.

use ordwalk::ordinal::ParseErrorKind as K;

pub const ACCEPT: &[&str] = &[
    "0",
    "1",
    "2",
    "17",
    "18446744073709551615",
    "w",
    "w+1",
    "w+42",
    "w*2",
    "w*2+1",
    "w^2",
    "w^2+w",
    "w^2+w*3+7",
    "w^2*3+w+1",
    "w^3",
    "w^3+w^2+w+1",
    "w^10*4+w^9",
    "w^(w)",
    "w^(w)+1",
    "w^(w)*2",
    "w^(w)+w^5+3",
    "w^(w+1)",
    "w^(w+1)+w^(w)",
    "w^(w*2)",
    "w^(w^2)",
    "w^(w^2+w*3+1)",
    "w^(w^(w))",
    "w^(w^(w)+1)*3+w^(w)",
    "w^(w^(w^(w)))",
];

/// Accepted up to whitespace, with the canonical spelling.
pub const SPACED: &[(&str, &str)] = &[
    (" w ", "w"),
    ("w ^ 2 * 3 + 1", "w^2*3+1"),
    ("w^( w + 1 )", "w^(w+1)"),
    ("\tw*2\n", "w*2"),
];

pub const REJECT: &[(&str, K)] = &[
    ("", K::Empty),
    ("   ", K::Empty),
    ("w+w", K::NotDecreasing),
    ("1+w", K::NotDecreasing),
    ("2+w", K::NotDecreasing),
    ("w+w^2", K::NotDecreasing),
    ("w^2+w^2", K::NotDecreasing),
    ("1+1", K::NotDecreasing),
    ("w^(w)+w^(w+1)", K::NotDecreasing),
    ("w*1", K::TrivialCoefficient),
    ("w^2*1", K::TrivialCoefficient),
    ("w^1", K::TrivialExponent),
    ("w^0", K::TrivialExponent),
    ("w^(2)", K::ParenthesizedFinite),
    ("w^(1)", K::ParenthesizedFinite),
    ("w^(0)", K::ParenthesizedFinite),
    ("w^w", K::ExpectedDigit),
    ("w^", K::UnexpectedEnd),
    ("w*", K::UnexpectedEnd),
    ("w+", K::UnexpectedEnd),
    ("w^(w", K::UnexpectedEnd),
    ("w*0", K::ZeroSummand),
    ("0+1", K::ZeroSummand),
    ("w+0", K::ZeroSummand),
    ("01", K::LeadingZero),
    ("w*02", K::LeadingZero),
    ("18446744073709551616", K::Overflow),
    ("omega", K::UnexpectedChar('o')),
    ("W", K::UnexpectedChar('W')),
    ("ω", K::UnexpectedChar('ω')),
    ("w)", K::UnexpectedChar(')')),
    ("3*w", K::UnexpectedChar('*')),
    ("w-1", K::UnexpectedChar('-')),
    ("w**2", K::ExpectedDigit),
    ("w^-1", K::ExpectedDigit),
];
