//! Minimal walks on countable ordinals, computed exactly below ε₀.
//!
//! The crate is organized bottom-up:
//!
//! - [`ordinal`]: Cantor-normal-form ordinals, literals and a Gödel coding.
//! - [`csequence`]: ladders (C-sequences) behind the [`CSequence`] trait.
//! - [`walks`]: upper and lower traces, `ρ₀`, maximum weights `e_β`.
//! - [`oscillation`]: `osc`, the circle-valued `o` and restrictions of `w_β`.
//! - [`tree`]: sampled fragments of `T(o)` and `T(osc)`.
//! - [`forcing`]: finite Cohen conditions and ladders modified by a real.
//! - [`verify`]: property suites, an independent oracle and pinned constants.
//! - [`cli`]: report types shared by the `ordwalk` binary.
//!
//! Every walk-level function takes the ladder system as a parameter, so the
//! same code runs against canonical, overridden and Cohen-modified ladders.

pub mod cli;
pub mod csequence;
mod error;
pub mod forcing;
pub mod ordinal;
pub mod oscillation;
pub mod tree;
pub mod verify;
pub mod walks;

pub use csequence::{CSequence, Canonical, OverrideProvider};
pub use error::{Error, Result};
pub use ordinal::{ord, Ordinal, OrdinalClass};
