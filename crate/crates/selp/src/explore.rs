//! Exhaustive formula spaces for property checks.
//!
//! Two strategies are provided. Plain syntactic enumeration walks every
//! tree up to a depth bound and is only viable for small depths. The class
//! closure walks one representative per *behavior*: given a key function
//! that is compositional (the key of `op(a, b)` is determined by the keys
//! of `a` and `b`), checking a property of the key on every reachable
//! representative is exhaustive over all formulas up to the bound, at the
//! cost of the handful of distinct keys.

use std::collections::BTreeSet;

use crate::syntax::{Atom, Formula, FragmentDescriptor};

/// Visit every formula over `atoms` built from the fragment's connectives
/// and constants, up to `max_depth`, each exactly once. Strata below the
/// final depth are materialized; the final stratum is streamed.
pub fn for_each_formula(
    atoms: &[Atom],
    frag: &FragmentDescriptor,
    max_depth: usize,
    mut cb: impl FnMut(&Formula),
) {
    let mut leaves: Vec<Formula> = atoms.iter().map(|a| Formula::Atom(a.clone())).collect();
    if frag.top {
        leaves.push(Formula::Top);
    }
    if frag.bot {
        leaves.push(Formula::Bot);
    }
    for f in &leaves {
        cb(f);
    }
    let mut strata: Vec<Vec<Formula>> = vec![leaves];

    for level in 1..=max_depth {
        let is_last = level == max_depth;
        let mut fresh: Vec<Formula> = Vec::new();
        let emit = |f: Formula, fresh: &mut Vec<Formula>, cb: &mut dyn FnMut(&Formula)| {
            cb(&f);
            if !is_last {
                fresh.push(f);
            }
        };
        if frag.not {
            for a in &strata[level - 1] {
                emit(Formula::not(a.clone()), &mut fresh, &mut cb);
            }
        }
        // Binary nodes need at least one child from the newest stratum,
        // otherwise the tree was already produced at a lower level.
        for sa in 0..level {
            for sb in 0..level {
                if sa.max(sb) != level - 1 {
                    continue;
                }
                for a in &strata[sa] {
                    for b in &strata[sb] {
                        if frag.and {
                            emit(Formula::and(a.clone(), b.clone()), &mut fresh, &mut cb);
                        }
                        if frag.or {
                            emit(Formula::or(a.clone(), b.clone()), &mut fresh, &mut cb);
                        }
                        if frag.imp {
                            emit(Formula::imp(a.clone(), b.clone()), &mut fresh, &mut cb);
                        }
                    }
                }
            }
        }
        strata.push(fresh);
    }
}

/// Every formula up to the depth bound, collected.
pub fn formulas_up_to_depth(
    atoms: &[Atom],
    frag: &FragmentDescriptor,
    max_depth: usize,
) -> Vec<Formula> {
    let mut out = Vec::new();
    for_each_formula(atoms, frag, max_depth, |f| out.push(f.clone()));
    out
}

/// One representative formula per reachable key, closed under the
/// fragment's connectives up to `max_depth` levels (stopping early at a
/// fixpoint, which makes the result exhaustive for *every* depth).
///
/// The key function must be compositional for the conclusion "checked on
/// all representatives" to mean "checked on all formulas": evaluating a
/// connective on representatives must land in the same key class as
/// evaluating it on any members of their classes.
pub fn closed_representatives<K: Ord>(
    atoms: &[Atom],
    frag: &FragmentDescriptor,
    max_depth: usize,
    mut key: impl FnMut(&Formula) -> K,
) -> Vec<Formula> {
    let mut reps: Vec<Formula> = Vec::new();
    let mut seen: BTreeSet<K> = BTreeSet::new();

    let mut seeds: Vec<Formula> = atoms.iter().map(|a| Formula::Atom(a.clone())).collect();
    if frag.top {
        seeds.push(Formula::Top);
    }
    if frag.bot {
        seeds.push(Formula::Bot);
    }
    for f in seeds {
        if seen.insert(key(&f)) {
            reps.push(f);
        }
    }

    for _ in 0..max_depth {
        let snapshot = reps.clone();
        let mut grew = false;
        let mut candidates: Vec<Formula> = Vec::new();
        if frag.not {
            for a in &snapshot {
                candidates.push(Formula::not(a.clone()));
            }
        }
        for a in &snapshot {
            for b in &snapshot {
                if frag.and {
                    candidates.push(Formula::and(a.clone(), b.clone()));
                }
                if frag.or {
                    candidates.push(Formula::or(a.clone(), b.clone()));
                }
                if frag.imp {
                    candidates.push(Formula::imp(a.clone(), b.clone()));
                }
            }
        }
        for f in candidates {
            if seen.insert(key(&f)) {
                reps.push(f);
                grew = true;
            }
        }
        if !grew {
            break;
        }
        assert!(reps.len() <= 100_000, "class closure is diverging");
    }
    reps
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::{eval_classical, ClassicalWorld};

    fn atoms(names: &[&str]) -> Vec<Atom> {
        names.iter().map(|n| Atom::new(n).unwrap()).collect()
    }

    #[test]
    fn counts_match_hand_computation() {
        let frag = FragmentDescriptor {
            and: true,
            imp: true,
            not: true,
            ..FragmentDescriptor::empty()
        };
        let ab = atoms(&["p", "q"]);
        assert_eq!(formulas_up_to_depth(&ab, &frag, 0).len(), 2);
        // depth 1: 2 negations + 2 connectives over 2x2 children.
        assert_eq!(formulas_up_to_depth(&ab, &frag, 1).len(), 12);
        // depth 2: 10 negations + 2 * (12^2 - 2^2) binary nodes on top.
        assert_eq!(formulas_up_to_depth(&ab, &frag, 2).len(), 302);
    }

    #[test]
    fn streaming_agrees_with_collection() {
        let frag = FragmentDescriptor::empty().with_and().with_or();
        let ab = atoms(&["p"]);
        let mut streamed = 0usize;
        for_each_formula(&ab, &frag, 3, |_| streamed += 1);
        assert_eq!(streamed, formulas_up_to_depth(&ab, &frag, 3).len());
    }

    #[test]
    fn no_duplicate_trees() {
        let frag = FragmentDescriptor::empty().with_and().with_not();
        let all = formulas_up_to_depth(&atoms(&["p", "q"]), &frag, 2);
        let distinct: BTreeSet<Formula> = all.iter().cloned().collect();
        assert_eq!(all.len(), distinct.len());
    }

    #[test]
    fn closure_reaches_a_fixpoint() {
        // Key: the classical truth table over two atoms. 16 possible
        // tables, all reachable with the full connective set.
        let ab = atoms(&["p", "q"]);
        let worlds: Vec<ClassicalWorld> = (0..4u32)
            .map(|m| {
                ClassicalWorld::new(
                    ab.iter()
                        .enumerate()
                        .filter(|(i, _)| m & (1 << i) != 0)
                        .map(|(_, a)| a.clone()),
                )
            })
            .collect();
        let frag = FragmentDescriptor {
            and: true,
            or: true,
            imp: true,
            not: true,
            bot: true,
            top: true,
            ..FragmentDescriptor::empty()
        };
        let reps = closed_representatives(&ab, &frag, 10, |f| {
            worlds
                .iter()
                .map(|w| eval_classical(w, f))
                .collect::<Vec<bool>>()
        });
        assert_eq!(reps.len(), 16);
    }
}
