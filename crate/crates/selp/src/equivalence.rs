//! Strong-equivalence decisions.
//!
//! Two independent routes are kept deliberately separate: the
//! here-and-there route (model-set equality) and the brute-force oracle
//! that adjoins every program of unary rules and compares answer sets
//! computed from the reduct definition. On the rule fragment the two
//! provably agree, and the test suite checks that agreement on random
//! pairs in both directions.

use serde::Serialize;

use crate::classical::{cpl_equivalent, eval_set};
use crate::ht::{g3_equivalent, separating_ht_model, HTModel};
use crate::stable::{answer_sets_reduct, reduct};
use crate::syntax::{Atom, AtomSet, Formula, FragmentDescriptor, Program, Rule};
use crate::{Error, Limits};

/// Everything the classifier can say about a pair of programs.
///
/// `strongly_equivalent` coincides with `g3`; on the rule fragment this is
/// exact, and `kc_on_fragment` is only reported (mirroring `g3`) when both
/// programs pass the fragment check. When the programs are not strongly
/// equivalent at least one witness field is populated.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct EquivalenceReport {
    pub cpl: bool,
    pub g3: bool,
    pub kc_on_fragment: Option<bool>,
    pub same_answer_sets: bool,
    pub strongly_equivalent: bool,
    pub separating_extension: Option<Program>,
    pub separating_ht_model: Option<HTModel>,
}

fn require_fragment(p: &Program, frag: &FragmentDescriptor, what: &str) -> Result<(), Error> {
    if let Some(r) = p.rules().find(|r| !frag.admits_rule(r)) {
        return Err(Error::Fragment(format!(
            "{what}: rule '{r}.' is outside the supported fragment"
        )));
    }
    Ok(())
}

/// Decide strong equivalence on the rule fragment (conjunction,
/// disjunction, negation, constants) via here-and-there model sets.
/// On a negative verdict a model in the symmetric difference is returned.
pub fn strongly_equivalent(
    p1: &Program,
    p2: &Program,
    limits: &Limits,
) -> Result<(bool, Option<HTModel>), Error> {
    let frag = FragmentDescriptor::program_rules_with_constants();
    require_fragment(p1, &frag, "first program")?;
    require_fragment(p2, &frag, "second program")?;
    let eq = g3_equivalent(p1, p2, limits)?;
    let witness = if eq {
        None
    } else {
        separating_ht_model(p1, p2, limits)?
    };
    Ok((eq, witness))
}

/// Strong equivalence on the negation-free rule fragment, where classical
/// equivalence already decides it.
pub fn negfree_strong_equiv(p1: &Program, p2: &Program, limits: &Limits) -> Result<bool, Error> {
    let frag = FragmentDescriptor::negation_free_rules();
    require_fragment(p1, &frag, "first program")?;
    require_fragment(p2, &frag, "second program")?;
    cpl_equivalent(p1, p2, limits)
}

/// The unary rules over a universe: all facts `q` and all implications
/// `p -> q` with `p`, `q` atomic.
fn unary_rules(atoms: &[Atom]) -> Vec<Rule> {
    let mut out = Vec::new();
    for q in atoms {
        out.push(Rule::fact(Formula::Atom(q.clone())));
    }
    for p in atoms {
        for q in atoms {
            out.push(Rule::new(
                Formula::Atom(p.clone()),
                Formula::Atom(q.clone()),
            ));
        }
    }
    out
}

/// `sat[x]` has bit `y` set iff `y ⊆ x` and the subset `y` classically
/// satisfies the reduct of `p` relative to `x`.
fn reduct_sat_table(p: &Program, subsets: &[AtomSet]) -> Vec<u32> {
    subsets
        .iter()
        .enumerate()
        .map(|(xm, x)| {
            let r = reduct(p, x);
            let rules: Vec<&Rule> = r.rules().rules().collect();
            let mut bits = 0u32;
            for (ym, y) in subsets.iter().enumerate() {
                if ym & !xm != 0 {
                    continue;
                }
                if rules
                    .iter()
                    .all(|rule| !eval_set(y, &rule.body) || eval_set(y, &rule.head))
                {
                    bits |= 1 << ym;
                }
            }
            bits
        })
        .collect()
}

/// Answer sets of `p ∪ ext` as a bitmask over subset indices, computed
/// from precomputed tables. `ext` selects unary rules; `rule_sat[y]` masks
/// the unary rules satisfied by subset `y`.
fn answer_set_mask(sat: &[u32], rule_sat: &[u32], ext: u32, subset_count: usize) -> u32 {
    let mut out = 0u32;
    for xm in 0..subset_count {
        if sat[xm] >> xm & 1 == 0 || ext & !rule_sat[xm] != 0 {
            continue;
        }
        // Walk the proper submasks of xm; every one must fail. The empty
        // set has none.
        let mut minimal = true;
        if xm != 0 {
            let mut ym = (xm - 1) & xm;
            loop {
                if sat[xm] >> ym & 1 == 1 && ext & !rule_sat[ym] == 0 {
                    minimal = false;
                    break;
                }
                if ym == 0 {
                    break;
                }
                ym = (ym - 1) & xm;
            }
        }
        if minimal {
            out |= 1 << xm;
        }
    }
    out
}

/// Exhaustively test strong equivalence by adjoining *every* set of unary
/// rules over the universe and comparing answer sets (computed by the
/// reduct route). Complete at small scale; on a negative verdict the
/// smallest separating extension (fewest rules, then enumeration order)
/// is returned.
pub fn strong_equiv_oracle(
    p1: &Program,
    p2: &Program,
    universe: &AtomSet,
    limits: &Limits,
) -> Result<(bool, Option<Program>), Error> {
    for p in [p1, p2] {
        if let Some(missing) = p.atoms().difference(universe).next() {
            return Err(Error::Universe {
                missing: missing.clone(),
            });
        }
    }
    limits.check("oracle atoms", universe.len(), limits.oracle_atoms)?;

    let atoms: Vec<Atom> = universe.iter().cloned().collect();
    let n = atoms.len();
    let subset_count = 1usize << n;
    let subsets: Vec<AtomSet> = (0..subset_count as u32)
        .map(|m| crate::classical::mask_to_set(&atoms, m))
        .collect();

    let rules = unary_rules(&atoms);
    let rule_count = rules.len();
    // rule_sat[y] bit r: subset y classically satisfies unary rule r.
    let rule_sat: Vec<u32> = subsets
        .iter()
        .map(|y| {
            rules
                .iter()
                .enumerate()
                .filter(|(_, r)| !eval_set(y, &r.body) || eval_set(y, &r.head))
                .fold(0u32, |acc, (i, _)| acc | 1 << i)
        })
        .collect();

    let sat1 = reduct_sat_table(p1, &subsets);
    let sat2 = reduct_sat_table(p2, &subsets);

    // Enumerate extensions by size so a negative answer carries a small
    // witness.
    for k in 0..=rule_count {
        let mut ext: u64 = (1u64 << k) - 1;
        let top: u64 = 1u64 << rule_count;
        while ext < top {
            let e = ext as u32;
            if answer_set_mask(&sat1, &rule_sat, e, subset_count)
                != answer_set_mask(&sat2, &rule_sat, e, subset_count)
            {
                let selected = rules
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| e >> i & 1 == 1)
                    .map(|(_, r)| r.clone());
                let witness =
                    Program::new(selected).with_universe(universe.iter().cloned());
                return Ok((false, Some(witness)));
            }
            if ext == 0 {
                break; // k == 0 has the single empty extension
            }
            // Gosper's hack: next mask with the same popcount.
            let c = ext & ext.wrapping_neg();
            let r = ext + c;
            ext = (((r ^ ext) >> 2) / c) | r;
        }
    }
    Ok((true, None))
}

/// Fill every report field for an arbitrary pair of programs.
pub fn classify(p1: &Program, p2: &Program, limits: &Limits) -> Result<EquivalenceReport, Error> {
    let universe: AtomSet = p1.universe().union(p2.universe()).cloned().collect();
    let cpl = cpl_equivalent(p1, p2, limits)?;
    let g3 = g3_equivalent(p1, p2, limits)?;
    let frag = FragmentDescriptor::program_rules_with_constants();
    let on_fragment = frag.admits_program(p1) && frag.admits_program(p2);
    let same_answer_sets = answer_sets_reduct(p1, &universe, limits)?.answer_sets()
        == answer_sets_reduct(p2, &universe, limits)?.answer_sets();
    let separating_ht_model = if g3 {
        None
    } else {
        separating_ht_model(p1, p2, limits)?
    };
    let separating_extension = if !g3 && universe.len() <= limits.oracle_atoms {
        strong_equiv_oracle(p1, p2, &universe, limits)?.1
    } else {
        None
    };
    Ok(EquivalenceReport {
        cpl,
        g3,
        kc_on_fragment: on_fragment.then_some(g3),
        same_answer_sets,
        strongly_equivalent: g3,
        separating_extension,
        separating_ht_model,
    })
}

/// Semantics of a formula over an indexed list of here-and-there models,
/// packed as two bitmasks: forced here / forced there.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
struct Sem {
    h: u128,
    t: u128,
}

impl Sem {
    fn and(self, o: Sem) -> Sem {
        Sem {
            h: self.h & o.h,
            t: self.t & o.t,
        }
    }

    fn or(self, o: Sem) -> Sem {
        Sem {
            h: self.h | o.h,
            t: self.t | o.t,
        }
    }

    fn imp(self, o: Sem, full: u128) -> Sem {
        // Value 1 where self <= o pointwise, otherwise the value of o.
        let le = (!self.h | o.h) & (!self.t | o.t) & full;
        Sem {
            h: le | o.h,
            t: le | o.t,
        }
    }

    fn neg(self, full: u128) -> Sem {
        let z = !self.t & full;
        Sem { h: z, t: z }
    }
}

/// Search for a program in the fragment, over the target's universe, that
/// has exactly the target's here-and-there models. Rule bodies and heads
/// range over fragment formulas up to `max_depth`, deduplicated by their
/// semantics so the search is bounded by the number of definable meanings
/// rather than by syntax.
pub fn expressibility_search(
    target: &Program,
    frag: &FragmentDescriptor,
    max_depth: usize,
    limits: &Limits,
) -> Result<Option<Program>, Error> {
    let universe = target.universe().clone();
    limits.check("search atoms", universe.len(), limits.oracle_atoms)?;
    limits.check("search depth", max_depth, limits.search_depth)?;

    let models = crate::ht::all_ht_models(&universe);
    let count = models.len();
    assert!(count <= 128, "universe too large for packed semantics");
    let full: u128 = if count == 128 {
        u128::MAX
    } else {
        (1u128 << count) - 1
    };

    let sem_of = |f: &Formula| -> Sem {
        let mut h = 0u128;
        let mut t = 0u128;
        for (i, m) in models.iter().enumerate() {
            if m.forces(crate::ht::HtWorld::Here, f) {
                h |= 1 << i;
            }
            if m.forces(crate::ht::HtWorld::There, f) {
                t |= 1 << i;
            }
        }
        Sem { h, t }
    };

    let target_mask: u128 = models
        .iter()
        .enumerate()
        .filter(|(_, m)| m.satisfies_program(target))
        .fold(0, |acc, (i, _)| acc | 1 << i);

    // Representatives of every fragment-definable semantics up to the
    // depth bound, built bottom-up.
    let mut reps: Vec<(Formula, Sem)> = Vec::new();
    let mut seen: std::collections::HashSet<Sem> = std::collections::HashSet::new();
    let push = |reps: &mut Vec<(Formula, Sem)>,
                    seen: &mut std::collections::HashSet<Sem>,
                    f: Formula,
                    s: Sem| {
        if seen.insert(s) {
            reps.push((f, s));
        }
    };
    for a in &universe {
        let f = Formula::Atom(a.clone());
        let s = sem_of(&f);
        push(&mut reps, &mut seen, f, s);
    }
    if frag.top {
        push(&mut reps, &mut seen, Formula::Top, Sem { h: full, t: full });
    }
    if frag.bot {
        push(&mut reps, &mut seen, Formula::Bot, Sem { h: 0, t: 0 });
    }

    for _ in 0..max_depth {
        let snapshot = reps.clone();
        for (fa, sa) in &snapshot {
            if frag.not {
                push(
                    &mut reps,
                    &mut seen,
                    Formula::not(fa.clone()),
                    sa.neg(full),
                );
            }
            for (fb, sb) in &snapshot {
                if frag.and {
                    push(
                        &mut reps,
                        &mut seen,
                        Formula::and(fa.clone(), fb.clone()),
                        sa.and(*sb),
                    );
                }
                if frag.or {
                    push(
                        &mut reps,
                        &mut seen,
                        Formula::or(fa.clone(), fb.clone()),
                        sa.or(*sb),
                    );
                }
                if frag.imp {
                    push(
                        &mut reps,
                        &mut seen,
                        Formula::imp(fa.clone(), fb.clone()),
                        sa.imp(*sb, full),
                    );
                }
            }
        }
    }

    // Candidate rules, deduplicated by their model mask; only rules that
    // hold in every target model can take part in an equivalent program.
    let mut rule_masks: std::collections::HashSet<u128> = std::collections::HashSet::new();
    let mut candidates: Vec<(Rule, u128)> = Vec::new();
    let mut consider = |rule: Rule, mask: u128| {
        if mask & target_mask == target_mask && rule_masks.insert(mask) {
            candidates.push((rule, mask));
        }
    };
    for (f, s) in &reps {
        // A fact holds in a model iff its head is forced here.
        consider(Rule::fact(f.clone()), s.h);
    }
    for (fa, sa) in &reps {
        for (fb, sb) in &reps {
            let mask = sa.imp(*sb, full).h;
            consider(Rule::new(fa.clone(), fb.clone()), mask);
        }
    }

    let reachable: u128 = candidates.iter().fold(full, |acc, (_, m)| acc & m);
    if reachable != target_mask {
        return Ok(None);
    }

    // Greedy cover: exclude every non-target model with as few rules as
    // possible.
    let mut uncovered = full & !target_mask;
    let mut chosen: Vec<Rule> = Vec::new();
    while uncovered != 0 {
        let (rule, mask) = candidates
            .iter()
            .max_by_key(|(_, m)| (uncovered & !m).count_ones())
            .expect("cover is completable");
        uncovered &= *mask;
        chosen.push(rule.clone());
    }
    Ok(Some(
        Program::new(chosen).with_universe(universe.iter().cloned()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_program;

    fn prog(s: &str) -> Program {
        parse_program(s).unwrap()
    }

    fn set(names: &[&str]) -> AtomSet {
        names.iter().map(|n| Atom::new(n).unwrap()).collect()
    }

    #[test]
    fn known_strongly_equivalent_pairs() {
        let limits = Limits::default();
        let (eq, w) =
            strongly_equivalent(&prog("not p | not not p."), &prog("top."), &limits).unwrap();
        assert!(eq);
        assert!(w.is_none());

        let base = "p & r -> s. not p -> q. not r -> q.";
        let extended = format!("{base} not s -> q.");
        let (eq, _) = strongly_equivalent(&prog(base), &prog(&extended), &limits).unwrap();
        assert!(eq);

        let (eq, w) = strongly_equivalent(&prog("p -> q."), &prog("q -> p."), &limits).unwrap();
        assert!(!eq);
        let w = w.unwrap();
        assert_eq!(w, HTModel::new(set(&["p"]), set(&["p"])));
    }

    #[test]
    fn fragment_is_enforced() {
        let limits = Limits::default();
        let nested = prog("(p -> q) -> q.");
        let err = strongly_equivalent(&nested, &prog("q."), &limits);
        assert!(matches!(err, Err(Error::Fragment(_))));
        let err = negfree_strong_equiv(&prog("not p -> q."), &prog("q."), &limits);
        assert!(matches!(err, Err(Error::Fragment(_))));
    }

    #[test]
    fn negation_free_route() {
        let limits = Limits::default();
        assert!(negfree_strong_equiv(&prog("p | q."), &prog("q | p."), &limits).unwrap());
        assert!(!negfree_strong_equiv(&prog("p -> q."), &prog("q -> p."), &limits).unwrap());
        assert!(negfree_strong_equiv(&prog("p & q -> p."), &Program::empty(), &limits).unwrap());
    }

    #[test]
    fn oracle_finds_the_fact_extension() {
        let limits = Limits::default();
        let (eq, witness) = strong_equiv_oracle(
            &prog("p -> q."),
            &prog("q -> p."),
            &set(&["p", "q"]),
            &limits,
        )
        .unwrap();
        assert!(!eq);
        assert_eq!(witness.unwrap(), prog("p.").with_universe(set(&["p", "q"])));
    }

    #[test]
    fn oracle_confirms_equivalent_pairs() {
        let limits = Limits::default();
        let (eq, w) = strong_equiv_oracle(
            &prog("q."),
            &prog("not p -> q. not not p -> q."),
            &set(&["p", "q"]),
            &limits,
        )
        .unwrap();
        assert!(eq);
        assert!(w.is_none());

        let p = prog("p | q. not p -> r.");
        let (eq, _) =
            strong_equiv_oracle(&p, &p, &set(&["p", "q", "r"]), &limits).unwrap();
        assert!(eq);
    }

    #[test]
    fn oracle_guard() {
        let limits = Limits::default();
        let err = strong_equiv_oracle(
            &Program::empty(),
            &Program::empty(),
            &set(&["a", "b", "c", "d", "e"]),
            &limits,
        );
        assert!(matches!(err, Err(Error::Guard { .. })));
    }

    #[test]
    fn classify_reports() {
        let limits = Limits::default();

        let r = classify(&prog("p -> q."), &prog("q -> p."), &limits).unwrap();
        assert!(!r.cpl);
        assert!(!r.g3);
        assert_eq!(r.kc_on_fragment, Some(false));
        assert!(r.same_answer_sets);
        assert!(!r.strongly_equivalent);
        assert_eq!(
            r.separating_extension.unwrap(),
            prog("p.").with_universe(set(&["p", "q"]))
        );
        assert!(r.separating_ht_model.is_some());

        let r = classify(&prog("not not p."), &prog("p."), &limits).unwrap();
        assert!(r.cpl);
        assert!(!r.g3);
        assert!(!r.strongly_equivalent);
        assert!(!r.same_answer_sets);
        assert!(r.separating_ht_model.is_some());

        let r = classify(&prog("q."), &prog("not p -> q. not not p -> q."), &limits).unwrap();
        assert!(r.cpl && r.g3 && r.same_answer_sets && r.strongly_equivalent);
        assert_eq!(r.kc_on_fragment, Some(true));
        assert!(r.separating_extension.is_none() && r.separating_ht_model.is_none());
    }

    #[test]
    fn classify_marks_fragment_status() {
        let limits = Limits::default();
        let nested = prog("((p -> q) -> q) & ((q -> p) -> p).");
        let r = classify(&prog("p | q."), &nested, &limits).unwrap();
        assert!(r.g3);
        assert_eq!(r.kc_on_fragment, None);
    }

    #[test]
    fn disjunction_not_expressible_with_conjunction_and_negation() {
        let limits = Limits::default();
        let found = expressibility_search(
            &prog("p | q."),
            &FragmentDescriptor::conjunction_negation_rules(),
            2,
            &limits,
        )
        .unwrap();
        assert_eq!(found, None);
    }

    #[test]
    fn disjunction_expressible_with_implication() {
        let limits = Limits::default();
        let frag = FragmentDescriptor {
            and: true,
            imp: true,
            rule_form: true,
            ..FragmentDescriptor::empty()
        };
        let target = prog("p | q.");
        let found = expressibility_search(&target, &frag, 3, &limits)
            .unwrap()
            .expect("definable via nested implications");
        assert!(g3_equivalent(&found, &target, &limits).unwrap());
        assert!(found.rules().all(|r| frag.admits_rule(r)));
    }

    #[test]
    fn atom_is_trivially_expressible() {
        let limits = Limits::default();
        let found = expressibility_search(
            &prog("p."),
            &FragmentDescriptor::conjunction_negation_rules(),
            1,
            &limits,
        )
        .unwrap();
        assert_eq!(found.unwrap(), prog("p."));
    }

    #[test]
    fn report_serializes_with_witnesses() {
        let limits = Limits::default();
        let r = classify(&prog("p -> q."), &prog("q -> p."), &limits).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.starts_with(r#"{"cpl":false,"g3":false,"kc_on_fragment":false"#));
        assert!(json.contains(r#""separating_extension":["p."]"#));
    }
}
