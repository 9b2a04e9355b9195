//! Text rendering with minimal parentheses.
//!
//! `parse(render(x)) == x` for every formula, rule, and program; the
//! round-trip property test in `tests/properties.rs` pins this down.

use super::{Formula, Rule};

// Precedence levels: 1 = implication, 2 = disjunction, 3 = conjunction,
// 4 = unary. `prec` is the loosest level the context accepts.
fn go(f: &Formula, prec: u8, out: &mut String) {
    match f {
        Formula::Atom(a) => out.push_str(a.name()),
        Formula::Top => out.push_str("top"),
        Formula::Bot => out.push_str("bot"),
        Formula::Not(a) => {
            out.push_str("not ");
            go(a, 4, out);
        }
        Formula::And(a, b) => paren(prec > 3, out, |out| {
            go(a, 3, out);
            out.push_str(" & ");
            go(b, 4, out);
        }),
        Formula::Or(a, b) => paren(prec > 2, out, |out| {
            go(a, 2, out);
            out.push_str(" | ");
            go(b, 3, out);
        }),
        Formula::Imp(a, b) => paren(prec > 1, out, |out| {
            go(a, 2, out);
            out.push_str(" -> ");
            go(b, 1, out);
        }),
    }
}

fn paren(needed: bool, out: &mut String, inner: impl FnOnce(&mut String)) {
    if needed {
        out.push('(');
        inner(out);
        out.push(')');
    } else {
        inner(out);
    }
}

pub(super) fn formula(f: &Formula) -> String {
    let mut out = String::new();
    go(f, 1, &mut out);
    out
}

pub(super) fn rule(r: &Rule) -> String {
    let mut out = String::new();
    if r.body == Formula::Top {
        // A fact renders bare, except when its head is itself an
        // implication: `top -> a -> b` keeps the fact and the rule
        // `a -> b` distinguishable when read back.
        if matches!(r.head, Formula::Imp(..)) {
            out.push_str("top -> ");
        }
        go(&r.head, 1, &mut out);
    } else {
        go(&r.body, 2, &mut out);
        out.push_str(" -> ");
        go(&r.head, 1, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use crate::syntax::{parse_formula, parse_program, Program};

    fn roundtrip(s: &str) -> String {
        parse_formula(s).unwrap().to_string()
    }

    #[test]
    fn minimal_parentheses() {
        assert_eq!(roundtrip("not (p & q)"), "not (p & q)");
        assert_eq!(roundtrip("p | (p -> q)"), "p | (p -> q)");
        assert_eq!(roundtrip("(p & q) | r"), "p & q | r");
        assert_eq!(roundtrip("p & (q | r)"), "p & (q | r)");
        assert_eq!(roundtrip("not not p"), "not not p");
        assert_eq!(roundtrip("(p -> q) -> q"), "(p -> q) -> q");
        assert_eq!(roundtrip("p -> (q -> r)"), "p -> q -> r");
        assert_eq!(roundtrip("a & (b & c)"), "a & (b & c)");
        assert_eq!(roundtrip("(a & b) & c"), "a & b & c");
    }

    #[test]
    fn fact_forms() {
        let p = parse_program("q. top -> a -> b. p -> q.").unwrap();
        let text = p.to_string();
        assert_eq!(text, "p -> q.\nq.\ntop -> a -> b.\n");
        let back = parse_program(&text).unwrap();
        assert_eq!(p, back);
    }

    #[test]
    fn empty_program_renders_empty() {
        assert_eq!(Program::empty().to_string(), "");
    }
}
