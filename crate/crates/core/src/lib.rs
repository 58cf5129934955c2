//! Exact solving and structural analysis for set packing with a linear
//! fractional objective.
//!
//! The problem: given a binary m×n matrix A, integer vectors c and d, and
//! integer constants alpha and beta > 0, maximize
//! (c·x + alpha)/(d·x + beta) over binary x with A x <= 1. Feasible
//! selections are *packs*; a pack no column can be added to is *prime*.
//!
//! The crate provides:
//!
//! - exact arithmetic ([`Rational`]) and the instance model ([`Instance`]);
//! - pack taxonomy and enumeration ([`pack`]);
//! - three independent exact solvers plus a linear solver ([`solvers`]);
//! - checkers for the structural results about prime packs and uniform
//!   costs, a built-in counterexample fixture, and a seeded fuzzing
//!   harness that hunts for violations ([`theory`]);
//! - a plain-text instance format ([`format`]) and a seeded instance
//!   generator ([`generate`]).
//!
//! All types are immutable after construction and all operations are pure,
//! so values can be shared freely across threads.

pub mod error;
pub mod format;
pub mod generate;
pub mod instance;
pub mod pack;
pub mod rational;
pub mod solvers;
pub mod theory;

pub use error::{Error, Result};
pub use instance::Instance;
pub use pack::{Pack, PackClass, PackKind};
pub use rational::Rational;
pub use solvers::{LinearSolveReport, SolveReport};


#[cfg(test)]
mod thread_safety {
    use super::*;

    #[test]
    fn core_types_are_send_and_sync() {
        fn check<T: Send + Sync>() {}
        check::<Instance>();
        check::<Pack>();
        check::<Rational>();
        check::<SolveReport>();
        check::<Error>();
    }
}
