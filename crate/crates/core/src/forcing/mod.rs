//! Cohen conditions, finitely supported reals and the ladders they modify.
//!
//! A real `x` rebuilds every limit ladder `C_α` by keeping the successors
//! whose codes it lists in the matching interval `[C_α(n), C_α(n+1))`, then
//! resuming the base ladder above the largest one. [`ModifiedProvider`]
//! packages the result as an ordinary [`CSequence`](crate::CSequence).

mod agreement;
mod condition;
mod density;
mod family;
mod modify;

pub use agreement::{
    initial_agreement_check, standard_scenarios, AgreementOutcome, Disagreement, OverrideSource, Scenario,
    WITNESS_LIMIT,
};
pub use condition::{condition_leq, CohenReal, ForcingCondition, Positions};
pub use density::{density_extend, density_member, generic_approx, DEFAULT_SEARCH_BOUND};
pub use family::{family_value, level_set, CoherentFamily};
pub use modify::{modified_provider, modify, ModifiedLadder, ModifiedProvider};
