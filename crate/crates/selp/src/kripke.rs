//! Finite Kripke models with intuitionistic forcing, bounded enumeration of
//! rooted models modulo isomorphism, and countermodel search.
//!
//! Models are kept rooted: for refuting an entailment a rooted witness
//! always suffices, because forcing at a world only looks at its upward
//! cone. The single-top restriction selects the model class for which the
//! weak-excluded-middle logic is complete.

use std::collections::HashSet;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::syntax::{Atom, AtomSet, Formula};
use crate::{Error, Limits};

/// Hard cap of the internal bitmask representation used by enumeration.
const MAX_WORLDS: usize = 16;

/// A finite partially ordered set of worlds with a monotone atom labeling.
/// The order is stored as its reflexive-transitive closure.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KripkeModel {
    labels: Vec<AtomSet>,
    /// `rows[i]` has bit `j` set iff world `i <= j`.
    rows: Vec<u16>,
}

/// A well-formedness defect, naming the offending pair of worlds.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Violation {
    #[error("world id {id} is out of range")]
    UnknownWorld { id: usize },
    #[error("order is not antisymmetric: worlds {a} and {b} are mutually below each other")]
    Antisymmetry { a: usize, b: usize },
    #[error("labeling is not monotone: world {lower} <= {upper} but atom({lower}) is not a subset of atom({upper})")]
    Monotonicity { lower: usize, upper: usize },
}

impl KripkeModel {
    /// Build a model from labels and order pairs `(a, b)` meaning `a <= b`.
    /// The reflexive-transitive closure is taken; antisymmetry and
    /// monotonicity are *not* checked here (see [`KripkeModel::validate`]).
    pub fn from_parts(
        labels: Vec<AtomSet>,
        order: &[(usize, usize)],
    ) -> Result<KripkeModel, Violation> {
        let n = labels.len();
        if n > MAX_WORLDS {
            return Err(Violation::UnknownWorld { id: MAX_WORLDS });
        }
        let mut rows: Vec<u16> = (0..n).map(|i| 1 << i).collect();
        for &(a, b) in order {
            for id in [a, b] {
                if id >= n {
                    return Err(Violation::UnknownWorld { id });
                }
            }
            rows[a] |= 1 << b;
        }
        close_transitively(&mut rows);
        Ok(KripkeModel { labels, rows })
    }

    /// Build and validate in one step.
    pub fn new(labels: Vec<AtomSet>, order: &[(usize, usize)]) -> Result<KripkeModel, Violation> {
        let m = KripkeModel::from_parts(labels, order)?;
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn from_masks(atoms: &[Atom], atom_masks: &[u16], rows: Vec<u16>) -> KripkeModel {
        let n = rows.len();
        let labels = (0..n)
            .map(|w| {
                atoms
                    .iter()
                    .zip(atom_masks)
                    .filter(|(_, m)| *m & (1 << w) != 0)
                    .map(|(a, _)| a.clone())
                    .collect()
            })
            .collect();
        KripkeModel { labels, rows }
    }

    /// Check antisymmetry of the order and monotonicity of the labeling.
    /// Reflexivity and transitivity hold by construction.
    pub fn validate(&self) -> Result<(), Violation> {
        let n = self.labels.len();
        for a in 0..n {
            for b in 0..n {
                if a != b && self.leq(a, b) {
                    if self.leq(b, a) {
                        return Err(Violation::Antisymmetry { a, b });
                    }
                    if !self.labels[a].is_subset(&self.labels[b]) {
                        return Err(Violation::Monotonicity { lower: a, upper: b });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn world_count(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, w: usize) -> &AtomSet {
        &self.labels[w]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.rows[a] & (1 << b) != 0
    }

    /// Maximal worlds.
    pub fn terminal_nodes(&self) -> Vec<usize> {
        (0..self.world_count())
            .filter(|&w| self.rows[w] == 1 << w)
            .collect()
    }

    pub fn single_top(&self) -> bool {
        self.terminal_nodes().len() == 1
    }

    /// The world below every other world, if there is one.
    pub fn root(&self) -> Option<usize> {
        let full = (1u16 << self.world_count()) - 1;
        (0..self.world_count()).find(|&w| self.rows[w] == full)
    }

    /// Intuitionistic forcing at a world.
    ///
    /// Atoms are read off the labeling, conjunction and disjunction are
    /// pointwise, `a -> b` quantifies over all worlds above, and `not a`
    /// holds iff no world above forces `a`.
    ///
    /// Panics on an unknown world id.
    pub fn forces(&self, w: usize, f: &Formula) -> bool {
        assert!(w < self.world_count(), "unknown world id {w}");
        match f {
            Formula::Atom(a) => self.labels[w].contains(a),
            Formula::Top => true,
            Formula::Bot => false,
            Formula::And(a, b) => self.forces(w, a) && self.forces(w, b),
            Formula::Or(a, b) => self.forces(w, a) || self.forces(w, b),
            Formula::Imp(a, b) => self
                .above(w)
                .all(|v| !self.forces(v, a) || self.forces(v, b)),
            Formula::Not(a) => self.above(w).all(|v| !self.forces(v, a)),
        }
    }

    fn above(&self, w: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.rows[w];
        (0..self.world_count()).filter(move |v| row & (1 << v) != 0)
    }

    /// Forcing of `f` at every world, computed bottom-up in one pass.
    /// Agrees with [`KripkeModel::forces`] world by world.
    pub fn forcing_table(&self, f: &Formula) -> Vec<bool> {
        let n = self.world_count();
        match f {
            Formula::Atom(a) => (0..n).map(|w| self.labels[w].contains(a)).collect(),
            Formula::Top => vec![true; n],
            Formula::Bot => vec![false; n],
            Formula::And(a, b) => {
                let (ta, tb) = (self.forcing_table(a), self.forcing_table(b));
                (0..n).map(|w| ta[w] && tb[w]).collect()
            }
            Formula::Or(a, b) => {
                let (ta, tb) = (self.forcing_table(a), self.forcing_table(b));
                (0..n).map(|w| ta[w] || tb[w]).collect()
            }
            Formula::Imp(a, b) => {
                let (ta, tb) = (self.forcing_table(a), self.forcing_table(b));
                (0..n)
                    .map(|w| self.above(w).all(|v| !ta[v] || tb[v]))
                    .collect()
            }
            Formula::Not(a) => {
                let ta = self.forcing_table(a);
                (0..n).map(|w| self.above(w).all(|v| !ta[v])).collect()
            }
        }
    }

    /// The four-world model with bottom `0`, incomparable middles `1`
    /// (labeled `p`) and `2` (labeled `q`), and top `3` (labeled `p, q`).
    pub fn diamond() -> KripkeModel {
        let p = Atom::new("p").unwrap();
        let q = Atom::new("q").unwrap();
        KripkeModel::new(
            vec![
                AtomSet::new(),
                [p.clone()].into_iter().collect(),
                [q.clone()].into_iter().collect(),
                [p, q].into_iter().collect(),
            ],
            &[(0, 1), (0, 2), (1, 3), (2, 3)],
        )
        .expect("diamond model is well-formed")
    }

    /// The covering relation (immediate successors), for compact output.
    pub fn covering_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.world_count();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b && self.leq(a, b) {
                    let direct = !(0..n)
                        .any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b));
                    if direct {
                        out.push((a, b));
                    }
                }
            }
        }
        out
    }

    #[cfg(test)]
    fn canonical_key(&self, perms: &[Vec<usize>], atoms: &[Atom]) -> (Vec<u16>, Vec<u16>) {
        let n = self.world_count();
        let atom_masks: Vec<u16> = atoms
            .iter()
            .map(|a| {
                let mut m = 0u16;
                for w in 0..n {
                    if self.labels[w].contains(a) {
                        m |= 1 << w;
                    }
                }
                m
            })
            .collect();
        canonical_key(&self.rows, &atom_masks, perms)
    }
}

impl fmt::Display for KripkeModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for w in 0..self.world_count() {
            let atoms: Vec<String> = self.labels[w].iter().map(|a| a.to_string()).collect();
            writeln!(f, "world {w}: {{{}}}", atoms.join(","))?;
        }
        let pairs: Vec<String> = self
            .covering_pairs()
            .iter()
            .map(|(a, b)| format!("{a} < {b}"))
            .collect();
        write!(f, "order: {}", pairs.join(", "))
    }
}

impl Serialize for KripkeModel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct World<'a> {
            id: usize,
            atoms: &'a AtomSet,
        }
        let mut map = serializer.serialize_map(Some(2))?;
        let worlds: Vec<World> = (0..self.world_count())
            .map(|id| World {
                id,
                atoms: &self.labels[id],
            })
            .collect();
        map.serialize_entry("worlds", &worlds)?;
        map.serialize_entry("order", &self.covering_pairs())?;
        map.end()
    }
}

fn close_transitively(rows: &mut [u16]) {
    let n = rows.len();
    for k in 0..n {
        for i in 0..n {
            if rows[i] & (1 << k) != 0 {
                rows[i] |= rows[k];
            }
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    fn heap(k: usize, items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, items, out);
            if k % 2 == 0 {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut items, &mut out);
    out
}

fn canonical_key(rows: &[u16], atom_masks: &[u16], perms: &[Vec<usize>]) -> (Vec<u16>, Vec<u16>) {
    let n = rows.len();
    let mut best: Option<(Vec<u16>, Vec<u16>)> = None;
    for perm in perms {
        let mut prow = vec![0u16; n];
        for i in 0..n {
            for j in 0..n {
                if rows[i] & (1 << j) != 0 {
                    prow[perm[i]] |= 1 << perm[j];
                }
            }
        }
        let pmask: Vec<u16> = atom_masks
            .iter()
            .map(|m| {
                let mut pm = 0u16;
                for w in 0..n {
                    if m & (1 << w) != 0 {
                        pm |= 1 << perm[w];
                    }
                }
                pm
            })
            .collect();
        let key = (prow, pmask);
        if best.as_ref().is_none_or(|b| key < *b) {
            best = Some(key);
        }
    }
    best.expect("at least the identity permutation")
}

/// All rooted partial orders on exactly `n` worlds, as closed row masks,
/// sorted for determinism. Worlds are indexed along a linear extension, so
/// every poset shape appears at least once.
fn rooted_orders(n: usize, single_top: bool) -> Vec<Vec<u16>> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let full: u16 = ((1u32 << n) - 1) as u16;
    let mut seen: HashSet<Vec<u16>> = HashSet::new();
    for edges in 0u32..(1 << pairs.len()) {
        let mut rows: Vec<u16> = (0..n).map(|i| 1u16 << i).collect();
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if edges & (1 << k) != 0 {
                rows[i] |= 1 << j;
            }
        }
        close_transitively(&mut rows);
        if rows[0] != full {
            // With indices along a linear extension only world 0 can be
            // the root.
            continue;
        }
        if single_top {
            let terminals = (0..n).filter(|&w| rows[w] == 1 << w).count();
            if terminals != 1 {
                continue;
            }
        }
        seen.insert(rows);
    }
    let mut out: Vec<Vec<u16>> = seen.into_iter().collect();
    out.sort();
    out
}

fn upsets(rows: &[u16]) -> Vec<u16> {
    let n = rows.len();
    let full: u32 = 1 << n;
    (0..full)
        .map(|s| s as u16)
        .filter(|&s| (0..n).all(|i| s & (1 << i) == 0 || (rows[i] & !s) == 0))
        .collect()
}

/// Visit every valid rooted model with exactly `n` worlds over `atoms`,
/// modulo isomorphism. Returns `false` if the callback stopped the walk.
fn for_each_model_exact(
    n: usize,
    atoms: &[Atom],
    single_top: bool,
    cb: &mut impl FnMut(KripkeModel) -> bool,
) -> bool {
    let perms = permutations(n);
    let mut seen: HashSet<(Vec<u16>, Vec<u16>)> = HashSet::new();
    for rows in rooted_orders(n, single_top) {
        let ups = upsets(&rows);
        let k = atoms.len();
        let mut counter = vec![0usize; k];
        'labelings: loop {
            let atom_masks: Vec<u16> = counter.iter().map(|&c| ups[c]).collect();
            let key = canonical_key(&rows, &atom_masks, &perms);
            if seen.insert(key) {
                let model = KripkeModel::from_masks(atoms, &atom_masks, rows.clone());
                debug_assert!(model.validate().is_ok());
                if !cb(model) {
                    return false;
                }
            }
            // Advance the mixed-radix counter over upset choices.
            let mut i = 0;
            loop {
                if i == k {
                    break 'labelings;
                }
                counter[i] += 1;
                if counter[i] < ups.len() {
                    break;
                }
                counter[i] = 0;
                i += 1;
            }
        }
    }
    true
}

/// Every valid rooted model with at most `max_worlds` worlds over the given
/// atoms, modulo isomorphism; restricted to single-terminal models when
/// `single_top` is set.
pub fn enumerate_models(
    max_worlds: usize,
    atoms: &AtomSet,
    single_top: bool,
    limits: &Limits,
) -> Result<Vec<KripkeModel>, Error> {
    check_enumeration_guards(max_worlds, atoms.len(), limits)?;
    let atoms: Vec<Atom> = atoms.iter().cloned().collect();
    let mut out = Vec::new();
    for n in 1..=max_worlds {
        for_each_model_exact(n, &atoms, single_top, &mut |m| {
            out.push(m);
            true
        });
    }
    Ok(out)
}

fn check_enumeration_guards(
    max_worlds: usize,
    atom_count: usize,
    limits: &Limits,
) -> Result<(), Error> {
    if max_worlds == 0 {
        return Err(Error::guard("world bound", 0, 1));
    }
    limits.check("world bound", max_worlds, limits.search_worlds)?;
    limits.check("model atoms", atom_count, limits.search_atoms)?;
    // Representation cap, independent of the configurable guard.
    if max_worlds > MAX_WORLDS {
        return Err(Error::guard("world bound", max_worlds, MAX_WORLDS));
    }
    Ok(())
}

/// Outcome of a bounded countermodel search.
///
/// `NotFound` means exactly "no countermodel with at most this many
/// worlds": the search is refutation-complete only up to its bound and
/// makes no validity claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found { model: KripkeModel, witness: usize },
    NotFound { searched_worlds: usize },
}

/// Search for a world forcing all premises but not the goal, in rooted
/// models of at most `max_worlds` worlds over the atoms of the query.
pub fn countermodel_search(
    premises: &[Formula],
    goal: &Formula,
    single_top: bool,
    max_worlds: usize,
    limits: &Limits,
) -> Result<SearchOutcome, Error> {
    let mut atom_set = goal.atom_set();
    for p in premises {
        p.atoms_into(&mut atom_set);
    }
    check_enumeration_guards(max_worlds, atom_set.len(), limits)?;
    let atoms: Vec<Atom> = atom_set.iter().cloned().collect();
    let mut found: Option<(KripkeModel, usize)> = None;
    for n in 1..=max_worlds {
        let done = !for_each_model_exact(n, &atoms, single_top, &mut |m| {
            let goal_t = m.forcing_table(goal);
            let prem_t: Vec<Vec<bool>> = premises.iter().map(|p| m.forcing_table(p)).collect();
            for w in 0..n {
                if !goal_t[w] && prem_t.iter().all(|t| t[w]) {
                    found = Some((m, w));
                    return false;
                }
            }
            true
        });
        if done {
            let (model, witness) = found.expect("search stopped only on a hit");
            return Ok(SearchOutcome::Found { model, witness });
        }
    }
    Ok(SearchOutcome::NotFound {
        searched_worlds: max_worlds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::{eval_classical, ClassicalWorld};
    use crate::syntax::parse_formula;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    fn atom(s: &str) -> Atom {
        Atom::new(s).unwrap()
    }

    fn set(names: &[&str]) -> AtomSet {
        names.iter().map(|n| atom(n)).collect()
    }

    fn chain(labels: &[&[&str]]) -> KripkeModel {
        let pairs: Vec<(usize, usize)> = (1..labels.len()).map(|i| (i - 1, i)).collect();
        KripkeModel::new(labels.iter().map(|l| set(l)).collect(), &pairs).unwrap()
    }

    #[test]
    fn one_world_forcing_is_classical() {
        let w = ClassicalWorld::new(set(&["p"]));
        let m = KripkeModel::new(vec![set(&["p"])], &[]).unwrap();
        for s in [
            "p", "q", "not p", "not q", "p -> q", "q -> p", "not not p", "p | not p",
            "not (p & q)", "bot", "top",
        ] {
            assert_eq!(m.forces(0, &f(s)), eval_classical(&w, &f(s)), "{s}");
        }
    }

    #[test]
    fn chain_forces_double_negation_but_not_atom() {
        let m = chain(&[&[], &["p"]]);
        assert!(m.forces(0, &f("not not p")));
        assert!(!m.forces(0, &f("p")));
        assert!(!m.forces(0, &f("not p")));
    }

    #[test]
    fn diamond_is_valid_with_single_top() {
        let d = KripkeModel::diamond();
        assert_eq!(d.validate(), Ok(()));
        assert_eq!(d.terminal_nodes(), vec![3]);
        assert!(d.single_top());
        assert_eq!(d.root(), Some(0));
        assert!(d.forces(1, &f("p | q")));
        assert!(d.forces(2, &f("p | q")));
        assert!(!d.forces(0, &f("p | q")));
        // The top of the diamond carries p, so weak excluded middle holds
        // at the bottom via the right disjunct.
        assert!(!d.forces(0, &f("not p")));
        assert!(d.forces(0, &f("not not p")));
        assert!(d.forces(0, &f("not p | not not p")));
    }

    #[test]
    fn fork_refutes_weak_excluded_middle() {
        let m = KripkeModel::new(vec![set(&[]), set(&["p"]), set(&[])], &[(0, 1), (0, 2)])
            .unwrap();
        assert!(!m.forces(0, &f("not p | not not p")));
        assert!(!m.single_top());
    }

    #[test]
    fn validation_reports_offending_pairs() {
        let m = KripkeModel::from_parts(vec![set(&["p"]), set(&[])], &[(0, 1)]).unwrap();
        assert_eq!(
            m.validate(),
            Err(Violation::Monotonicity { lower: 0, upper: 1 })
        );

        let m = KripkeModel::from_parts(vec![set(&[]), set(&[])], &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(m.validate(), Err(Violation::Antisymmetry { a: 0, b: 1 }));

        let err = KripkeModel::from_parts(vec![set(&[])], &[(0, 3)]);
        assert_eq!(err, Err(Violation::UnknownWorld { id: 3 }));
    }

    #[test]
    fn forcing_table_agrees_with_forces() {
        let models = [
            KripkeModel::diamond(),
            chain(&[&[], &["p"], &["p", "q"]]),
            KripkeModel::new(vec![set(&[]), set(&["q"]), set(&["p"])], &[(0, 1), (0, 2)])
                .unwrap(),
        ];
        for m in &models {
            for s in [
                "p",
                "not p",
                "not not p",
                "p -> q",
                "(p -> q) -> q",
                "not p | not not p",
                "not (p & q) -> (q | p)",
            ] {
                let t = m.forcing_table(&f(s));
                for w in 0..m.world_count() {
                    assert_eq!(t[w], m.forces(w, &f(s)), "{s} at {w}");
                }
            }
        }
    }

    #[test]
    fn one_world_census_over_single_atom() {
        let models =
            enumerate_models(1, &set(&["p"]), false, &Limits::default()).unwrap();
        assert_eq!(models.len(), 2);
    }

    #[test]
    fn two_world_census_over_single_atom() {
        // Hand census: one world (2 labelings) plus the 2-chain with
        // monotone labelings ({},{}), ({},{p}), ({p},{p}).
        let models = enumerate_models(2, &set(&["p"]), true, &Limits::default()).unwrap();
        assert_eq!(models.len(), 5);
        let chain_up = chain(&[&[], &["p"]]);
        let perms = permutations(2);
        let atoms = [atom("p")];
        assert!(models.iter().any(|m| m.world_count() == 2
            && m.canonical_key(&perms, &atoms) == chain_up.canonical_key(&perms, &atoms)));
        // Rooted two-world models are chains, so single_top changes nothing.
        let any = enumerate_models(2, &set(&["p"]), false, &Limits::default()).unwrap();
        assert_eq!(any.len(), 5);
    }

    #[test]
    fn three_world_census_over_single_atom() {
        // Single-top shapes up to 3 worlds: point, 2-chain, 3-chain with
        // labelings 2 + 3 + 4.
        let single = enumerate_models(3, &set(&["p"]), true, &Limits::default()).unwrap();
        assert_eq!(single.len(), 9);
        // Adding the fork: 5 monotone labelings over one atom, of which
        // two are swapped by the fork's automorphism, so 4 up to iso.
        let all = enumerate_models(3, &set(&["p"]), false, &Limits::default()).unwrap();
        assert_eq!(all.len(), 13);
        for m in &all {
            assert_eq!(m.validate(), Ok(()));
            assert!(m.root().is_some());
        }
    }

    #[test]
    fn guards_are_enforced() {
        let err = enumerate_models(6, &set(&["p"]), false, &Limits::default());
        assert!(matches!(err, Err(Error::Guard { .. })));
        let err = enumerate_models(2, &set(&["a", "b", "c", "d", "e"]), false, &Limits::default());
        assert!(matches!(err, Err(Error::Guard { .. })));
    }

    #[test]
    fn peirce_countermodel_is_a_two_chain() {
        let out = countermodel_search(
            &[],
            &f("((p -> q) -> p) -> p"),
            true,
            2,
            &Limits::default(),
        )
        .unwrap();
        let SearchOutcome::Found { model, witness } = out else {
            panic!("expected a countermodel");
        };
        assert_eq!(model.world_count(), 2);
        assert!(model.single_top());
        assert!(!model.forces(witness, &f("((p -> q) -> p) -> p")));
    }

    #[test]
    fn weak_excluded_middle_fork_instance() {
        // Premises from the normal-rule axiom instantiated at
        // A := p, B := not p | not not p, C := not p, D := bot.
        let premises = [
            f("p & not p -> bot"),
            f("not p -> (not p | not not p)"),
            f("not not p -> (not p | not not p)"),
        ];
        let goal = f("not bot -> (not p | not not p)");
        let out =
            countermodel_search(&premises, &goal, false, 3, &Limits::default()).unwrap();
        let SearchOutcome::Found { model, witness } = out else {
            panic!("expected a countermodel");
        };
        assert_eq!(model.world_count(), 3);
        assert!(!model.forces(witness, &goal));
        for p in &premises {
            assert!(model.forces(witness, p));
        }
    }

    #[test]
    fn weak_excluded_middle_has_no_single_top_countermodel() {
        let out = countermodel_search(
            &[],
            &f("not p | not not p"),
            true,
            5,
            &Limits::default(),
        )
        .unwrap();
        assert_eq!(out, SearchOutcome::NotFound { searched_worlds: 5 });
    }

    #[test]
    fn json_shape() {
        let d = KripkeModel::diamond();
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(
            json,
            r#"{"worlds":[{"id":0,"atoms":[]},{"id":1,"atoms":["p"]},{"id":2,"atoms":["q"]},{"id":3,"atoms":["p","q"]}],"order":[[0,1],[0,2],[1,3],[2,3]]}"#
        );
    }
}
