//! Boundary slopes of 2-bridge knots `K(p/q)` computed in exact arithmetic.
//!
//! The boundary slope continued fractions of `p/q` (every partial quotient
//! at least two in absolute value) are enumerated twice: by substitutions at
//! non-adjacent positions of the simple continued fraction ([`subst`]) and by
//! the floor/ceiling binary tree ([`btree`]). [`slopes`] turns them into the
//! slope set and its diameter and checks it against twice the crossing
//! number; [`sweep`] runs that check over every fraction up to a bound.

pub mod btree;
pub mod cf;
pub mod error;
pub mod rational;
pub mod slopes;
pub mod subst;
pub mod sweep;

pub use btree::{build_tree, leaves, to_dot, BoundaryTree, NodeKind, TreeNode};
pub use cf::{
    canonicalize, cf_from_conway, conway_from_cf, crossing_number, eval_cf, expand_repeat,
    simple_cf, ContinuedFraction, SimpleCF,
};
pub use error::{Error, Result};
pub use rational::Rational;
pub use slopes::{analyze, fib_bound, SignCounts, SlopeReport, Verdict};
pub use subst::{
    apply_mask, apply_substitution, candidate_cfs, enumerate_masks, CandidateCF,
    SubstitutionMask,
};
pub use sweep::{run_sweep, SweepConfig, SweepRow, SweepSummary};
