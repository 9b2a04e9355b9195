//! Seeded random formulas, rules, and programs for property checks.

use rand::Rng;

use crate::syntax::{Atom, Formula, FragmentDescriptor, Program, Rule};

/// A random formula over the fragment's connectives, up to `max_depth`.
pub fn formula<R: Rng>(
    rng: &mut R,
    atoms: &[Atom],
    frag: &FragmentDescriptor,
    max_depth: usize,
) -> Formula {
    assert!(!atoms.is_empty(), "need at least one atom to draw from");
    let mut ops: Vec<u8> = Vec::new();
    if frag.and {
        ops.push(0);
    }
    if frag.or {
        ops.push(1);
    }
    if frag.imp {
        ops.push(2);
    }
    if frag.not {
        ops.push(3);
    }
    if max_depth == 0 || ops.is_empty() || rng.gen_bool(0.35) {
        if frag.top && rng.gen_bool(0.06) {
            return Formula::Top;
        }
        if frag.bot && rng.gen_bool(0.06) {
            return Formula::Bot;
        }
        let i = rng.gen_range(0..atoms.len());
        return Formula::Atom(atoms[i].clone());
    }
    match ops[rng.gen_range(0..ops.len())] {
        0 => Formula::and(
            formula(rng, atoms, frag, max_depth - 1),
            formula(rng, atoms, frag, max_depth - 1),
        ),
        1 => Formula::or(
            formula(rng, atoms, frag, max_depth - 1),
            formula(rng, atoms, frag, max_depth - 1),
        ),
        2 => Formula::imp(
            formula(rng, atoms, frag, max_depth - 1),
            formula(rng, atoms, frag, max_depth - 1),
        ),
        _ => Formula::not(formula(rng, atoms, frag, max_depth - 1)),
    }
}

/// A random rule whose body and head are fragment formulas.
pub fn rule<R: Rng>(
    rng: &mut R,
    atoms: &[Atom],
    frag: &FragmentDescriptor,
    max_depth: usize,
) -> Rule {
    let inner = FragmentDescriptor {
        rule_form: false,
        imp: frag.imp && !frag.rule_form,
        ..*frag
    };
    Rule::new(
        formula(rng, atoms, &inner, max_depth),
        formula(rng, atoms, &inner, max_depth),
    )
}

/// A random program of 1 to `max_rules` rules.
pub fn program<R: Rng>(
    rng: &mut R,
    atoms: &[Atom],
    frag: &FragmentDescriptor,
    max_rules: usize,
    max_depth: usize,
) -> Program {
    let count = rng.gen_range(1..=max_rules);
    Program::new((0..count).map(|_| rule(rng, atoms, frag, max_depth)))
}

/// Atoms `a`, `b`, `c`, ... for test universes.
pub fn test_atoms(count: usize) -> Vec<Atom> {
    assert!(count <= 26);
    (0..count)
        .map(|i| Atom::new(&((b'a' + i as u8) as char).to_string()).unwrap())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_rules_stay_in_fragment() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let atoms = test_atoms(3);
        for frag in [
            FragmentDescriptor::program_rules(),
            FragmentDescriptor::horn_rules(),
            FragmentDescriptor::negation_free_rules(),
        ] {
            for _ in 0..200 {
                let r = rule(&mut rng, &atoms, &frag, 3);
                assert!(frag.admits_rule(&r), "{r} outside fragment");
            }
        }
    }

    #[test]
    fn generation_is_deterministic_per_seed() {
        let atoms = test_atoms(4);
        let frag = FragmentDescriptor::program_rules();
        let mut a = ChaCha8Rng::seed_from_u64(42);
        let mut b = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..50 {
            assert_eq!(
                program(&mut a, &atoms, &frag, 4, 3),
                program(&mut b, &atoms, &frag, 4, 3)
            );
        }
    }
}
