//! Classical (single-world) semantics: evaluation, model enumeration over a
//! finite universe, equivalence, and the least-model property of the
//! Horn-like rule fragment.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::syntax::{Atom, AtomSet, Formula, FragmentDescriptor, Program, Rule};
use crate::{Error, Limits};

/// A classical valuation, identified with the set of atoms it makes true.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct ClassicalWorld(AtomSet);

impl ClassicalWorld {
    pub fn new(atoms: impl IntoIterator<Item = Atom>) -> ClassicalWorld {
        ClassicalWorld(atoms.into_iter().collect())
    }

    pub fn empty() -> ClassicalWorld {
        ClassicalWorld(AtomSet::new())
    }

    pub fn atoms(&self) -> &AtomSet {
        &self.0
    }

    pub fn contains(&self, atom: &Atom) -> bool {
        self.0.contains(atom)
    }
}

impl From<AtomSet> for ClassicalWorld {
    fn from(atoms: AtomSet) -> Self {
        ClassicalWorld(atoms)
    }
}

impl fmt::Display for ClassicalWorld {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for ClassicalWorld {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(&self.0)
    }
}

pub(crate) fn eval_set(atoms: &AtomSet, f: &Formula) -> bool {
    match f {
        Formula::Atom(a) => atoms.contains(a),
        Formula::Top => true,
        Formula::Bot => false,
        Formula::Not(a) => !eval_set(atoms, a),
        Formula::And(a, b) => eval_set(atoms, a) && eval_set(atoms, b),
        Formula::Or(a, b) => eval_set(atoms, a) || eval_set(atoms, b),
        Formula::Imp(a, b) => !eval_set(atoms, a) || eval_set(atoms, b),
    }
}

/// Two-valued evaluation; negation is the classical complement.
pub fn eval_classical(w: &ClassicalWorld, f: &Formula) -> bool {
    eval_set(&w.0, f)
}

/// Whether the world satisfies the rule `body -> head`.
pub fn holds(w: &ClassicalWorld, r: &Rule) -> bool {
    !eval_set(&w.0, &r.body) || eval_set(&w.0, &r.head)
}

fn check_universe(p: &Program, universe: &AtomSet) -> Result<(), Error> {
    match p.atoms().difference(universe).next() {
        Some(missing) => Err(Error::Universe {
            missing: missing.clone(),
        }),
        None => Ok(()),
    }
}

pub(crate) fn mask_to_set(atoms: &[Atom], mask: u32) -> AtomSet {
    atoms
        .iter()
        .enumerate()
        .filter(|(i, _)| mask & (1 << i) != 0)
        .map(|(_, a)| a.clone())
        .collect()
}

/// Subsets of `universe`, canonically ordered by size then lexicographically.
pub(crate) fn subsets_ordered(universe: &AtomSet) -> Vec<AtomSet> {
    let atoms: Vec<Atom> = universe.iter().cloned().collect();
    let mut out: Vec<AtomSet> = (0u32..1 << atoms.len())
        .map(|mask| mask_to_set(&atoms, mask))
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// All subsets of `universe` that satisfy every rule of `p`.
pub fn classical_models(
    p: &Program,
    universe: &AtomSet,
    limits: &Limits,
) -> Result<Vec<ClassicalWorld>, Error> {
    check_universe(p, universe)?;
    limits.check("universe atoms", universe.len(), limits.classical_atoms)?;
    Ok(subsets_ordered(universe)
        .into_iter()
        .filter(|x| p.rules().all(|r| holds(&ClassicalWorld(x.clone()), r)))
        .map(ClassicalWorld)
        .collect())
}

/// Least model of a program in the rule fragment `{A -> B | A, B in
/// [&, bot, top]}`, computed as the intersection of all classical models
/// over the program's atoms.
pub fn minimal_model(p: &Program, limits: &Limits) -> Result<ClassicalWorld, Error> {
    let frag = FragmentDescriptor::horn_rules();
    if !frag.admits_program(p) {
        return Err(Error::Fragment(
            "minimal_model requires rules with bodies and heads in [&, bot, top]".into(),
        ));
    }
    let models = classical_models(p, &p.atoms(), limits)?;
    let mut iter = models.iter();
    let Some(first) = iter.next() else {
        return Err(Error::Unsatisfiable);
    };
    let intersection = iter.fold(first.0.clone(), |acc, m| {
        acc.intersection(&m.0).cloned().collect()
    });
    let least = ClassicalWorld(intersection);
    debug_assert!(p.rules().all(|r| holds(&least, r)));
    Ok(least)
}

/// Classical equivalence over the union of the two programs' universes.
pub fn cpl_equivalent(p1: &Program, p2: &Program, limits: &Limits) -> Result<bool, Error> {
    let universe: AtomSet = p1.universe().union(p2.universe()).cloned().collect();
    Ok(classical_models(p1, &universe, limits)? == classical_models(p2, &universe, limits)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_formula, parse_program};

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    fn prog(s: &str) -> Program {
        parse_program(s).unwrap()
    }

    fn world(names: &[&str]) -> ClassicalWorld {
        ClassicalWorld::new(names.iter().map(|n| Atom::new(n).unwrap()))
    }

    fn atoms(names: &[&str]) -> AtomSet {
        names.iter().map(|n| Atom::new(n).unwrap()).collect()
    }

    #[test]
    fn evaluation() {
        assert!(!eval_classical(&world(&["p"]), &f("not p")));
        assert!(eval_classical(&world(&[]), &f("p -> q")));
        assert!(eval_classical(&world(&["p"]), &f("not not p")));
        assert!(eval_classical(&world(&[]), &f("top")));
        assert!(!eval_classical(&world(&[]), &f("bot")));
    }

    #[test]
    fn model_enumeration() {
        let models = classical_models(&prog("p -> q."), &atoms(&["p", "q"]), &Limits::default())
            .unwrap();
        assert_eq!(models, vec![world(&[]), world(&["q"]), world(&["p", "q"])]);

        let models = classical_models(&prog("p | q."), &atoms(&["p", "q"]), &Limits::default())
            .unwrap();
        assert_eq!(
            models,
            vec![world(&["p"]), world(&["q"]), world(&["p", "q"])]
        );

        let models =
            classical_models(&Program::empty(), &atoms(&["p"]), &Limits::default()).unwrap();
        assert_eq!(models, vec![world(&[]), world(&["p"])]);
    }

    #[test]
    fn universe_must_cover_program() {
        let err = classical_models(&prog("p -> q."), &atoms(&["p"]), &Limits::default());
        assert!(matches!(err, Err(Error::Universe { .. })));
    }

    #[test]
    fn enumeration_guard() {
        let p = Program::empty().with_universe(
            (0..21).map(|i| Atom::new(&format!("a{i}")).unwrap()),
        );
        let err = classical_models(&p, p.universe(), &Limits::default());
        assert!(matches!(err, Err(Error::Guard { .. })));

        let tight = Limits {
            classical_atoms: 2,
            ..Limits::default()
        };
        let small = Program::empty().with_universe(atoms(&["a", "b", "c"]));
        assert!(matches!(
            classical_models(&small, small.universe(), &tight),
            Err(Error::Guard { .. })
        ));
        assert_eq!(
            classical_models(&small, small.universe(), &Limits::relaxed())
                .unwrap()
                .len(),
            8
        );
    }

    #[test]
    fn least_models() {
        assert_eq!(
            minimal_model(&prog("p. p -> q."), &Limits::default()).unwrap(),
            world(&["p", "q"])
        );
        assert_eq!(
            minimal_model(&Program::empty(), &Limits::default()).unwrap(),
            world(&[])
        );
        assert_eq!(
            minimal_model(&prog("p -> bot. p."), &Limits::default()),
            Err(Error::Unsatisfiable)
        );
        assert!(matches!(
            minimal_model(&prog("not p -> q."), &Limits::default()),
            Err(Error::Fragment(_))
        ));
    }

    #[test]
    fn classical_equivalence() {
        let limits = Limits::default();
        assert!(cpl_equivalent(&prog("p -> q."), &prog("not q -> not p."), &limits).unwrap());
        assert!(!cpl_equivalent(&prog("p -> q."), &prog("q -> p."), &limits).unwrap());
        assert!(cpl_equivalent(&prog("not not p."), &prog("p."), &limits).unwrap());
    }

    #[test]
    fn fresh_atoms_do_not_change_equivalence() {
        let limits = Limits::default();
        let p1 = prog("p -> q.");
        let p2 = prog("not q -> not p.").with_universe(atoms(&["z"]));
        assert!(cpl_equivalent(&p1, &p2, &limits).unwrap());
    }
}
