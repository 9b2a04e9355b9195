//! Here-and-there models: the two-world Kripke semantics of the strongest
//! proper intermediate logic, together with its equivalent three-valued
//! matrix presentation. Both evaluations are implemented independently and
//! tested against each other.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::classical::eval_set;
use crate::kripke::KripkeModel;
use crate::syntax::{Atom, AtomSet, Formula, Program, Rule};
use crate::{Error, Limits};

/// A two-world model `<Y, X>` with `Y` true "here" and `X` true "there",
/// `Y ⊆ X`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct HTModel {
    here: AtomSet,
    there: AtomSet,
}

/// The two worlds of an [`HTModel`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HtWorld {
    Here,
    There,
}

impl HTModel {
    /// Panics unless `here ⊆ there`.
    pub fn new(here: AtomSet, there: AtomSet) -> HTModel {
        assert!(
            here.is_subset(&there),
            "here-and-there model requires here ⊆ there"
        );
        HTModel { here, there }
    }

    /// The total model `<X, X>`, which behaves classically.
    pub fn total(atoms: AtomSet) -> HTModel {
        HTModel {
            here: atoms.clone(),
            there: atoms,
        }
    }

    pub fn here(&self) -> &AtomSet {
        &self.here
    }

    pub fn there(&self) -> &AtomSet {
        &self.there
    }

    pub fn is_total(&self) -> bool {
        self.here == self.there
    }

    /// The same model as a two-world Kripke model, world 0 here, world 1
    /// there. Always validates.
    pub fn to_kripke(&self) -> KripkeModel {
        KripkeModel::new(vec![self.here.clone(), self.there.clone()], &[(0, 1)])
            .expect("here ⊆ there gives a monotone two-chain")
    }

    /// Kripke forcing on the two-world model.
    pub fn forces(&self, at: HtWorld, f: &Formula) -> bool {
        match at {
            // The upper world is terminal, so forcing there is classical.
            HtWorld::There => eval_set(&self.there, f),
            HtWorld::Here => match f {
                Formula::Atom(a) => self.here.contains(a),
                Formula::Top => true,
                Formula::Bot => false,
                Formula::And(a, b) => {
                    self.forces(HtWorld::Here, a) && self.forces(HtWorld::Here, b)
                }
                Formula::Or(a, b) => {
                    self.forces(HtWorld::Here, a) || self.forces(HtWorld::Here, b)
                }
                Formula::Imp(a, b) => {
                    (!self.forces(HtWorld::Here, a) || self.forces(HtWorld::Here, b))
                        && (!self.forces(HtWorld::There, a) || self.forces(HtWorld::There, b))
                }
                Formula::Not(a) => {
                    !self.forces(HtWorld::Here, a) && !self.forces(HtWorld::There, a)
                }
            },
        }
    }

    /// Whether the rule `body -> head` is forced at the lower world (and
    /// hence everywhere).
    pub fn satisfies_rule(&self, r: &Rule) -> bool {
        (!self.forces(HtWorld::Here, &r.body) || self.forces(HtWorld::Here, &r.head))
            && (!self.forces(HtWorld::There, &r.body) || self.forces(HtWorld::There, &r.head))
    }

    pub fn satisfies_program(&self, p: &Program) -> bool {
        p.rules().all(|r| self.satisfies_rule(r))
    }
}

/// Shorthand for forcing at a chosen world.
pub fn ht_forces(m: &HTModel, at: HtWorld, f: &Formula) -> bool {
    m.forces(at, f)
}

impl fmt::Display for HTModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fmt_set = |s: &AtomSet| {
            let items: Vec<String> = s.iter().map(|a| a.to_string()).collect();
            format!("{{{}}}", items.join(","))
        };
        write!(f, "<{}, {}>", fmt_set(&self.here), fmt_set(&self.there))
    }
}

/// The three truth values, ordered `0 < 1/2 < 1`. In Kripke terms they are
/// the three sets of worlds a formula can be forced in: neither, the upper
/// world only, or both.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum G3Value {
    Zero,
    Half,
    One,
}

impl G3Value {
    pub const ALL: [G3Value; 3] = [G3Value::Zero, G3Value::Half, G3Value::One];

    pub fn and(self, other: G3Value) -> G3Value {
        self.min(other)
    }

    pub fn or(self, other: G3Value) -> G3Value {
        self.max(other)
    }

    pub fn imp(self, other: G3Value) -> G3Value {
        if self <= other {
            G3Value::One
        } else {
            other
        }
    }

    pub fn neg(self) -> G3Value {
        if self == G3Value::Zero {
            G3Value::One
        } else {
            G3Value::Zero
        }
    }
}

impl fmt::Display for G3Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            G3Value::Zero => write!(f, "0"),
            G3Value::Half => write!(f, "1/2"),
            G3Value::One => write!(f, "1"),
        }
    }
}

/// Evaluate against the three-valued tables. Atoms absent from the
/// valuation count as `Zero`.
pub fn matrix_eval(v: &BTreeMap<Atom, G3Value>, f: &Formula) -> G3Value {
    match f {
        Formula::Atom(a) => v.get(a).copied().unwrap_or(G3Value::Zero),
        Formula::Top => G3Value::One,
        Formula::Bot => G3Value::Zero,
        Formula::Not(a) => matrix_eval(v, a).neg(),
        Formula::And(a, b) => matrix_eval(v, a).and(matrix_eval(v, b)),
        Formula::Or(a, b) => matrix_eval(v, a).or(matrix_eval(v, b)),
        Formula::Imp(a, b) => matrix_eval(v, a).imp(matrix_eval(v, b)),
    }
}

/// Whether the formula takes value 1 under every assignment of its atoms.
/// The logic is truth-functional, so instantiating an axiom scheme with
/// distinct fresh atoms and checking all assignments decides schematic
/// validity.
pub fn matrix_valid(f: &Formula) -> bool {
    let atoms: Vec<Atom> = f.atom_set().into_iter().collect();
    let valid = all_valuations(&atoms).all(|v| matrix_eval(&v, f) == G3Value::One);
    valid
}

pub(crate) fn all_valuations(
    atoms: &[Atom],
) -> impl Iterator<Item = BTreeMap<Atom, G3Value>> + '_ {
    let total = 3usize.pow(atoms.len() as u32);
    (0..total).map(move |mut i| {
        let mut v = BTreeMap::new();
        for a in atoms {
            v.insert(a.clone(), G3Value::ALL[i % 3]);
            i /= 3;
        }
        v
    })
}

/// All pairs `Y ⊆ X ⊆ universe`, canonically ordered.
pub(crate) fn all_ht_models(universe: &AtomSet) -> Vec<HTModel> {
    let mut out = Vec::new();
    for there in crate::classical::subsets_ordered(universe) {
        for here in crate::classical::subsets_ordered(&there) {
            out.push(HTModel::new(here, there.clone()));
        }
    }
    out.sort();
    out
}

fn check_ht_guard(universe: &AtomSet, limits: &Limits) -> Result<(), Error> {
    limits.check("here-and-there atoms", universe.len(), limits.ht_atoms)
}

/// All here-and-there models of the program over the universe.
pub fn ht_models_of(
    p: &Program,
    universe: &AtomSet,
    limits: &Limits,
) -> Result<Vec<HTModel>, Error> {
    if let Some(missing) = p.atoms().difference(universe).next() {
        return Err(Error::Universe {
            missing: missing.clone(),
        });
    }
    check_ht_guard(universe, limits)?;
    Ok(all_ht_models(universe)
        .into_iter()
        .filter(|m| m.satisfies_program(p))
        .collect())
}

/// Entailment over all here-and-there models of the joint atom set:
/// every model forcing the premises at the lower world forces the goal
/// there too. Atoms beyond the joint set cannot change the verdict.
pub fn g3_entails(premises: &[Formula], goal: &Formula, limits: &Limits) -> Result<bool, Error> {
    let mut atoms = goal.atom_set();
    for p in premises {
        p.atoms_into(&mut atoms);
    }
    check_ht_guard(&atoms, limits)?;
    Ok(all_ht_models(&atoms).into_iter().all(|m| {
        !premises.iter().all(|p| m.forces(HtWorld::Here, p)) || m.forces(HtWorld::Here, goal)
    }))
}

pub fn g3_valid(f: &Formula, limits: &Limits) -> Result<bool, Error> {
    g3_entails(&[], f, limits)
}

/// A model forcing every premise but not the goal at the lower world, if
/// one exists over the joint atom set.
pub fn g3_countermodel(
    premises: &[Formula],
    goal: &Formula,
    limits: &Limits,
) -> Result<Option<HTModel>, Error> {
    let mut atoms = goal.atom_set();
    for p in premises {
        p.atoms_into(&mut atoms);
    }
    check_ht_guard(&atoms, limits)?;
    Ok(all_ht_models(&atoms).into_iter().find(|m| {
        premises.iter().all(|p| m.forces(HtWorld::Here, p)) && !m.forces(HtWorld::Here, goal)
    }))
}

/// Program equivalence: identical here-and-there model sets over the union
/// of the universes.
pub fn g3_equivalent(p1: &Program, p2: &Program, limits: &Limits) -> Result<bool, Error> {
    let universe: AtomSet = p1.universe().union(p2.universe()).cloned().collect();
    Ok(ht_models_of(p1, &universe, limits)? == ht_models_of(p2, &universe, limits)?)
}

/// The first model satisfying exactly one of the two programs, if any.
pub fn separating_ht_model(
    p1: &Program,
    p2: &Program,
    limits: &Limits,
) -> Result<Option<HTModel>, Error> {
    let universe: AtomSet = p1.universe().union(p2.universe()).cloned().collect();
    check_ht_guard(&universe, limits)?;
    Ok(all_ht_models(&universe)
        .into_iter()
        .find(|m| m.satisfies_program(p1) != m.satisfies_program(p2)))
}

/// Four single-scheme axiomatizations of the logic over intuitionistic
/// logic, instantiated with distinct atoms. All four are valid in the
/// matrix and none is intuitionistically provable.
pub fn g3_axioms() -> Vec<(&'static str, Formula)> {
    let parse = |s: &str| crate::syntax::parse_formula(s).unwrap();
    let three_values = {
        let pairs = [
            ("a", "b"),
            ("a", "c"),
            ("a", "d"),
            ("b", "c"),
            ("b", "d"),
            ("c", "d"),
        ];
        pairs
            .iter()
            .map(|(x, y)| Formula::iff(parse(x), parse(y)))
            .reduce(Formula::or)
            .unwrap()
    };
    vec![
        ("lukasiewicz", parse("(not a -> b) -> ((b -> a) -> b) -> b")),
        ("three-values", three_values),
        ("hosoi", parse("a | (a -> b) | not b")),
        (
            "iterated-peirce-wem",
            parse("(((a -> ((b -> c) -> b) -> b) -> a) -> a) & (not a | not not a)"),
        ),
    ]
}
