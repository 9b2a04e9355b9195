//! The reduct transformation and answer-set computation, by two
//! independent routes: the reduct definition over classical subsets, and
//! the equilibrium condition over here-and-there models. The two agree on
//! every program; the test suite exercises this over random programs.

use serde::Serialize;

use crate::classical::{eval_set, holds, ClassicalWorld};
use crate::ht::HTModel;
use crate::syntax::{AtomSet, Formula, Program, Rule};
use crate::{Error, Limits};

/// How an answer-set report was computed.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Reduct,
    Equilibrium,
}

/// A program transformed relative to a candidate set `X`: every maximal
/// negated subformula `not A` is replaced by `bot` when `<X>` satisfies
/// `A` and by `top` otherwise. The result is negation-free.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Reduct {
    source: Program,
    witness: AtomSet,
    rules: Program,
}

impl Reduct {
    pub fn source(&self) -> &Program {
        &self.source
    }

    pub fn witness(&self) -> &AtomSet {
        &self.witness
    }

    pub fn rules(&self) -> &Program {
        &self.rules
    }
}

/// The reduct of a single formula relative to `x`.
pub fn reduce_formula(f: &Formula, x: &AtomSet) -> Formula {
    match f {
        Formula::Atom(_) | Formula::Top | Formula::Bot => f.clone(),
        // The whole negation collapses to a constant; `A` itself is
        // evaluated classically, not reduced.
        Formula::Not(a) => {
            if eval_set(x, a) {
                Formula::Bot
            } else {
                Formula::Top
            }
        }
        Formula::And(a, b) => Formula::and(reduce_formula(a, x), reduce_formula(b, x)),
        Formula::Or(a, b) => Formula::or(reduce_formula(a, x), reduce_formula(b, x)),
        Formula::Imp(a, b) => Formula::imp(reduce_formula(a, x), reduce_formula(b, x)),
    }
}

/// The reduct of `p` relative to `x`, applied to the body and head of
/// every rule.
pub fn reduct(p: &Program, x: &AtomSet) -> Reduct {
    let rules = Program::new(
        p.rules()
            .map(|r| Rule::new(reduce_formula(&r.body, x), reduce_formula(&r.head, x))),
    )
    .with_universe(p.universe().iter().cloned());
    Reduct {
        source: p.clone(),
        witness: x.clone(),
        rules,
    }
}

/// Answer sets of a program over a universe, with canonical ordering
/// (by size, then lexicographically).
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct AnswerSetReport {
    #[serde(skip)]
    program: Program,
    #[serde(skip)]
    universe: AtomSet,
    answer_sets: Vec<AtomSet>,
    method: Method,
}

impl AnswerSetReport {
    pub fn program(&self) -> &Program {
        &self.program
    }

    pub fn universe(&self) -> &AtomSet {
        &self.universe
    }

    pub fn answer_sets(&self) -> &[AtomSet] {
        &self.answer_sets
    }

    pub fn method(&self) -> Method {
        self.method
    }
}

fn check_universe(p: &Program, universe: &AtomSet, limits: &Limits) -> Result<(), Error> {
    if let Some(missing) = p.atoms().difference(universe).next() {
        return Err(Error::Universe {
            missing: missing.clone(),
        });
    }
    limits.check("universe atoms", universe.len(), limits.classical_atoms)
}

/// `X` is an answer set iff among the subsets of `X` exactly `X` itself
/// satisfies the reduct relative to `X`.
fn answer_set_by_reduct(p: &Program, x: &AtomSet) -> bool {
    let r = reduct(p, x);
    let wx = ClassicalWorld::new(x.iter().cloned());
    if !r.rules.rules().all(|rule| holds(&wx, rule)) {
        return false;
    }
    crate::classical::subsets_ordered(x).into_iter().all(|y| {
        if y.len() == x.len() {
            return true;
        }
        let wy = ClassicalWorld::new(y);
        !r.rules.rules().all(|rule| holds(&wy, rule))
    })
}

/// `X` is an answer set iff `<X, X>` is a model of `p` and no proper
/// subset `Y` gives a model `<Y, X>` (the equilibrium condition).
fn answer_set_by_equilibrium(p: &Program, x: &AtomSet) -> bool {
    if !HTModel::total(x.clone()).satisfies_program(p) {
        return false;
    }
    crate::classical::subsets_ordered(x).into_iter().all(|y| {
        y.len() == x.len() || !HTModel::new(y, x.clone()).satisfies_program(p)
    })
}

/// Answer sets computed from the reduct definition.
pub fn answer_sets_reduct(
    p: &Program,
    universe: &AtomSet,
    limits: &Limits,
) -> Result<AnswerSetReport, Error> {
    check_universe(p, universe, limits)?;
    let answer_sets = crate::classical::subsets_ordered(universe)
        .into_iter()
        .filter(|x| answer_set_by_reduct(p, x))
        .collect();
    Ok(AnswerSetReport {
        program: p.clone(),
        universe: universe.clone(),
        answer_sets,
        method: Method::Reduct,
    })
}

/// Answer sets computed as equilibrium models.
pub fn answer_sets_ht(
    p: &Program,
    universe: &AtomSet,
    limits: &Limits,
) -> Result<AnswerSetReport, Error> {
    check_universe(p, universe, limits)?;
    let answer_sets = crate::classical::subsets_ordered(universe)
        .into_iter()
        .filter(|x| answer_set_by_equilibrium(p, x))
        .collect();
    Ok(AnswerSetReport {
        program: p.clone(),
        universe: universe.clone(),
        answer_sets,
        method: Method::Equilibrium,
    })
}

/// Membership test for a single candidate; only subsets of `x` are
/// examined, no enumeration of a wider universe.
pub fn is_answer_set(p: &Program, x: &AtomSet) -> bool {
    answer_set_by_reduct(p, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_program, Atom};

    fn prog(s: &str) -> Program {
        parse_program(s).unwrap()
    }

    fn set(names: &[&str]) -> AtomSet {
        names.iter().map(|n| Atom::new(n).unwrap()).collect()
    }

    fn sets(names: &[&[&str]]) -> Vec<AtomSet> {
        names.iter().map(|n| set(n)).collect()
    }

    #[test]
    fn reduct_replaces_maximal_negations() {
        let r = reduct(&prog("not p -> q."), &set(&[]));
        assert_eq!(r.rules(), &prog("top -> q."));

        let r = reduct(&prog("not not p."), &set(&["p"]));
        assert_eq!(r.rules(), &prog("top."));
        let r = reduct(&prog("not not p."), &set(&[]));
        assert_eq!(r.rules(), &prog("bot."));
    }

    #[test]
    fn reduct_fixes_negation_free_programs() {
        let p = prog("p & q | r -> p & r. p -> bot. q.");
        for x in crate::classical::subsets_ordered(&p.atoms()) {
            assert_eq!(reduct(&p, &x).rules(), &p);
        }
    }

    #[test]
    fn reduct_output_is_negation_free() {
        let frag = crate::syntax::FragmentDescriptor::empty()
            .with_and()
            .with_or()
            .with_imp()
            .with_constants();
        let p = prog("not (p & not q) -> (not r | s). not not p.");
        for x in crate::classical::subsets_ordered(&p.atoms()) {
            let r = reduct(&p, &x);
            assert!(frag.admits_program(r.rules()));
            assert!(r.rules().atoms().is_subset(&p.atoms()));
        }
    }

    #[test]
    fn worked_examples_by_reduct() {
        let limits = Limits::default();
        let asr = |s: &str| {
            let p = prog(s);
            answer_sets_reduct(&p, &p.universe().clone(), &limits)
                .unwrap()
                .answer_sets()
                .to_vec()
        };
        assert_eq!(asr("not not p."), sets(&[]));
        assert_eq!(asr("not not p. p."), sets(&[&["p"]]));
        assert_eq!(asr("p | q."), sets(&[&["p"], &["q"]]));
        assert_eq!(asr("p -> q."), sets(&[&[]]));
        assert_eq!(asr("q -> p."), sets(&[&[]]));
    }

    #[test]
    fn worked_examples_by_equilibrium() {
        let limits = Limits::default();
        let ase = |s: &str| {
            let p = prog(s);
            answer_sets_ht(&p, &p.universe().clone(), &limits)
                .unwrap()
                .answer_sets()
                .to_vec()
        };
        // Answer sets need not be minimal among themselves.
        assert_eq!(ase("not not p -> p."), sets(&[&[], &["p"]]));
        assert_eq!(ase("p | q."), sets(&[&["p"], &["q"]]));
        assert_eq!(ase("not not p."), sets(&[]));
    }

    #[test]
    fn membership_checks() {
        assert!(!is_answer_set(&prog("p | q."), &set(&["p", "q"])));
        assert!(is_answer_set(&prog("not not p. p."), &set(&["p"])));
        assert!(is_answer_set(&Program::empty(), &set(&[])));
    }

    #[test]
    fn negation_primitive_differs_from_arrow_bot_syntactically() {
        // `p -> bot` and `not p` have the same answer sets (none contain
        // p, and both programs admit the empty set), via different
        // reducts.
        let limits = Limits::default();
        let by_not = prog("not p.");
        let by_imp = prog("p -> bot.");
        assert_ne!(reduct(&by_not, &set(&[])).rules(), &by_imp);
        let a = answer_sets_reduct(&by_not, &set(&["p"]), &limits).unwrap();
        let b = answer_sets_reduct(&by_imp, &set(&["p"]), &limits).unwrap();
        assert_eq!(a.answer_sets(), b.answer_sets());
        assert_eq!(a.answer_sets(), sets(&[&[]]).as_slice());
    }

    #[test]
    fn answer_sets_are_classical_models() {
        let limits = Limits::default();
        for s in [
            "not p -> q.",
            "p | q. not p -> r.",
            "not not p -> p. q -> p.",
        ] {
            let p = prog(s);
            let report = answer_sets_reduct(&p, &p.universe().clone(), &limits).unwrap();
            for x in report.answer_sets() {
                let w = ClassicalWorld::new(x.iter().cloned());
                assert!(p.rules().all(|r| holds(&w, r)), "{s} at {w}");
            }
        }
    }

    #[test]
    fn widening_the_universe_adds_nothing() {
        let limits = Limits::default();
        let p = prog("p | q. not p -> r.");
        let narrow = answer_sets_reduct(&p, &p.universe().clone(), &limits).unwrap();
        let mut wide_universe = p.universe().clone();
        wide_universe.extend(set(&["x", "y"]));
        let wide = answer_sets_reduct(&p, &wide_universe, &limits).unwrap();
        assert_eq!(narrow.answer_sets(), wide.answer_sets());
    }

    #[test]
    fn json_shape() {
        let limits = Limits::default();
        let p = prog("p | q.");
        let report = answer_sets_reduct(&p, &p.universe().clone(), &limits).unwrap();
        assert_eq!(
            serde_json::to_string(&report).unwrap(),
            r#"{"answer_sets":[["p"],["q"]],"method":"reduct"}"#
        );
    }
}
