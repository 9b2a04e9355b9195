//! Answer-set (stable-model) semantics for propositional logic programs,
//! together with the model theory needed to decide when two programs are
//! strongly equivalent: classical valuations, finite Kripke models,
//! here-and-there (three-valued) models, a terminating sequent-calculus
//! decision procedure for intuitionistic logic, and a layer for the logic
//! of weak excluded middle on top of it.
//!
//! The crate is organized around small, pure functions over immutable
//! values. Everything that enumerates an exponential space goes through a
//! [`Limits`] guard so that a mistyped universe cannot hang the process.
//!
//! Entry points by theme:
//!
//! * [`syntax`] — formulas, rules, programs, the text format.
//! * [`classical`] — two-valued evaluation and model enumeration.
//! * [`kripke`] — finite intuitionistic models and countermodel search.
//! * [`ht`] — here-and-there models and the three-valued matrix.
//! * [`stable`] — reducts and answer sets, by two independent routes.
//! * [`equivalence`] — strong-equivalence decisions and witnesses.
//! * [`prover`] — derivability with proof traces or countermodels.
//! * [`suite`] — the built-in verification suite used by `check-paper`.

pub mod classical;
pub mod equivalence;
pub mod explore;
pub mod ht;
pub mod kripke;
pub mod limits;
pub mod prover;
pub mod random;
pub mod stable;
pub mod suite;
pub mod syntax;

pub use classical::ClassicalWorld;
pub use equivalence::EquivalenceReport;
pub use ht::{G3Value, HTModel};
pub use kripke::KripkeModel;
pub use limits::Limits;
pub use prover::Verdict;
pub use stable::{AnswerSetReport, Method, Reduct};
pub use syntax::{Atom, Formula, FragmentDescriptor, Program, Rule};

use syntax::ParseError;

/// Errors shared across the crate.
///
/// Guard violations are deliberately a *reported* condition rather than a
/// panic: callers (notably the CLI) map them to a distinct exit code.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0}")]
    Parse(#[from] ParseError),

    /// An enumeration bound was exceeded; pass a larger [`Limits`] to override.
    #[error("guard exceeded: {what} is {actual}, limit {limit} (override the limit to force)")]
    Guard {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    /// An operation's fragment precondition does not hold.
    #[error("fragment violation: {0}")]
    Fragment(String),

    /// The given universe does not contain every atom of the program.
    #[error("universe is missing atom '{missing}'")]
    Universe { missing: Atom },

    /// Reported by `minimal_model` when the program has no classical model.
    #[error("program is classically unsatisfiable")]
    Unsatisfiable,
}

impl Error {
    pub(crate) fn guard(what: &'static str, actual: usize, limit: usize) -> Error {
        Error::Guard {
            what,
            actual,
            limit,
        }
    }
}
