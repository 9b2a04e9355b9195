//! Resource guards for the exponential enumerations.

/// Bounds on the various enumeration spaces.
///
/// Every bound is checked *before* the corresponding enumeration starts and
/// a violation surfaces as [`crate::Error::Guard`]. The defaults are sized
/// for interactive use; `Limits::relaxed()` lifts everything (the CLI maps
/// `--force` to it).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Atoms admitted in a classical model enumeration (2^n subsets).
    pub classical_atoms: usize,
    /// Atoms admitted in a here-and-there enumeration (3^n pairs).
    pub ht_atoms: usize,
    /// Atoms admitted by the unary-extension oracle and the
    /// expressibility search (2^(n²+n) extensions).
    pub oracle_atoms: usize,
    /// Depth bound accepted by the expressibility search.
    pub search_depth: usize,
    /// Worlds admitted in Kripke model enumeration.
    pub search_worlds: usize,
    /// Atoms admitted in Kripke model enumeration.
    pub search_atoms: usize,
    /// Total formula nodes accepted by the provers.
    pub prover_nodes: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            classical_atoms: 20,
            ht_atoms: 14,
            oracle_atoms: 4,
            search_depth: 3,
            search_worlds: 5,
            search_atoms: 4,
            prover_nodes: 10_000,
        }
    }
}

impl Limits {
    /// A guard set with every bound lifted.
    pub fn relaxed() -> Self {
        Limits {
            classical_atoms: usize::MAX,
            ht_atoms: usize::MAX,
            oracle_atoms: usize::MAX,
            search_depth: usize::MAX,
            search_worlds: usize::MAX,
            search_atoms: usize::MAX,
            prover_nodes: usize::MAX,
        }
    }

    pub(crate) fn check(
        &self,
        what: &'static str,
        actual: usize,
        limit: usize,
    ) -> Result<(), crate::Error> {
        if actual > limit {
            Err(crate::Error::guard(what, actual, limit))
        } else {
            Ok(())
        }
    }
}
