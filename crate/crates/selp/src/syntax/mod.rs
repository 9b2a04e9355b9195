//! Formulas, rules, programs, and the textual program format.
//!
//! Concrete syntax: `&` for conjunction, `|` for disjunction, `->` for
//! implication (right-associative), `not` for negation, `top` and `bot`
//! for the constants. Precedence is `not` > `&` > `|` > `->`. Statements
//! end with `.` and `%` starts a line comment. A bare formula `F.` is the
//! rule `top -> F`.
//!
//! Negation is a primitive node of [`Formula`], never sugar for `-> bot`:
//! the reduct in [`crate::stable`] pattern-matches on it, while the Kripke
//! semantics evaluates both forms identically.

mod parse;
mod render;

pub use parse::{parse_formula, parse_program, ParseError};

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

/// A set of atoms, ordered for deterministic output.
pub type AtomSet = BTreeSet<Atom>;

/// A propositional atom. Names match `[a-z][a-zA-Z0-9_]*` and are not one
/// of the reserved words `top`, `bot`, `not`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(String);

pub(crate) const RESERVED: [&str; 3] = ["top", "bot", "not"];

impl Atom {
    pub fn new(name: &str) -> Result<Atom, ParseError> {
        if RESERVED.contains(&name) {
            return Err(ParseError::reserved(name));
        }
        let mut chars = name.chars();
        let ok = match chars.next() {
            Some(c) if c.is_ascii_lowercase() => {
                chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
            }
            _ => false,
        };
        if ok {
            Ok(Atom(name.to_string()))
        } else {
            Err(ParseError::bad_atom(name))
        }
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Atom({})", self.0)
    }
}

impl Serialize for Atom {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0)
    }
}

/// A propositional formula over atoms, `top`, `bot`, `not`, `&`, `|`, `->`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Atom(Atom),
    Top,
    Bot,
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn imp(a: Formula, b: Formula) -> Formula {
        Formula::Imp(Box::new(a), Box::new(b))
    }

    /// `a <-> b` spelled out as the conjunction of both implications.
    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::and(
            Formula::imp(a.clone(), b.clone()),
            Formula::imp(b, a),
        )
    }

    /// Tree depth; atoms and constants have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Top | Formula::Bot => 0,
            Formula::Not(a) => 1 + a.depth(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                1 + a.depth().max(b.depth())
            }
        }
    }

    /// Number of nodes in the tree.
    pub fn node_count(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Top | Formula::Bot => 1,
            Formula::Not(a) => 1 + a.node_count(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                1 + a.node_count() + b.node_count()
            }
        }
    }

    pub fn atoms_into(&self, out: &mut AtomSet) {
        match self {
            Formula::Atom(a) => {
                out.insert(a.clone());
            }
            Formula::Top | Formula::Bot => {}
            Formula::Not(a) => a.atoms_into(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                a.atoms_into(out);
                b.atoms_into(out);
            }
        }
    }

    pub fn atom_set(&self) -> AtomSet {
        let mut out = AtomSet::new();
        self.atoms_into(&mut out);
        out
    }

    /// All subformulas, including the formula itself, without duplicates.
    pub fn subformulas(&self) -> BTreeSet<Formula> {
        fn walk(f: &Formula, out: &mut BTreeSet<Formula>) {
            out.insert(f.clone());
            match f {
                Formula::Atom(_) | Formula::Top | Formula::Bot => {}
                Formula::Not(a) => walk(a, out),
                Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
            }
        }
        let mut out = BTreeSet::new();
        walk(self, &mut out);
        out
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render::formula(self))
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

/// A program rule `body -> head`. A bare fact `F` is stored as `top -> F`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rule {
    pub body: Formula,
    pub head: Formula,
}

impl Rule {
    pub fn new(body: Formula, head: Formula) -> Rule {
        Rule { body, head }
    }

    pub fn fact(head: Formula) -> Rule {
        Rule {
            body: Formula::Top,
            head,
        }
    }

    /// The rule as a single formula: `head` for facts, `body -> head`
    /// otherwise. The two shapes are interderivable in every logic handled
    /// here, so provers and entailment checks may use this freely.
    pub fn formula(&self) -> Formula {
        if self.body == Formula::Top {
            self.head.clone()
        } else {
            Formula::imp(self.body.clone(), self.head.clone())
        }
    }

    pub fn atoms_into(&self, out: &mut AtomSet) {
        self.body.atoms_into(out);
        self.head.atoms_into(out);
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render::rule(self))
    }
}

impl fmt::Debug for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}.\"")
    }
}

/// A finite set of rules over a declared universe of atoms.
///
/// Programs have set semantics: duplicate rules collapse and rule order is
/// canonical. The universe always contains every atom occurring in a rule;
/// it can be widened beyond that, which leaves answer sets unchanged.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Program {
    rules: BTreeSet<Rule>,
    universe: AtomSet,
}

impl Program {
    pub fn new(rules: impl IntoIterator<Item = Rule>) -> Program {
        let rules: BTreeSet<Rule> = rules.into_iter().collect();
        let mut universe = AtomSet::new();
        for r in &rules {
            r.atoms_into(&mut universe);
        }
        Program { rules, universe }
    }

    pub fn empty() -> Program {
        Program::new([])
    }

    /// Widen the universe. Atoms occurring in rules are always kept, so
    /// this can only add to it.
    pub fn with_universe(mut self, extra: impl IntoIterator<Item = Atom>) -> Program {
        self.universe.extend(extra);
        self
    }

    pub fn rules(&self) -> impl Iterator<Item = &Rule> {
        self.rules.iter()
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn universe(&self) -> &AtomSet {
        &self.universe
    }

    /// Atoms occurring in the rules (a subset of the universe).
    pub fn atoms(&self) -> AtomSet {
        let mut out = AtomSet::new();
        for r in &self.rules {
            r.atoms_into(&mut out);
        }
        out
    }

    /// Set union of rules and universes.
    pub fn union(&self, other: &Program) -> Program {
        let mut rules = self.rules.clone();
        rules.extend(other.rules.iter().cloned());
        let mut universe = self.universe.clone();
        universe.extend(other.universe.iter().cloned());
        Program { rules, universe }
    }

    /// The statements of the program, one rendered rule per entry.
    pub fn statements(&self) -> Vec<String> {
        self.rules.iter().map(|r| format!("{r}.")).collect()
    }
}

impl FromIterator<Rule> for Program {
    fn from_iter<T: IntoIterator<Item = Rule>>(iter: T) -> Self {
        Program::new(iter)
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rules {
            writeln!(f, "{r}.")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.statements().join(" "))
    }
}

impl Serialize for Program {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.statements())
    }
}

/// A sublanguage given by the admitted connectives and constants, plus two
/// structural flags.
///
/// With `rule_form` set the descriptor denotes a set of *rules* `A -> B`
/// whose body and head are drawn from the admitted connectives; the
/// rule-level arrow is then part of the shape and nested implications are
/// only admitted when `imp` is set. With `normal_form` set, bodies must be
/// conjunctions of literals (with `top` as the empty conjunction) and heads
/// must be atomic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FragmentDescriptor {
    pub and: bool,
    pub or: bool,
    pub imp: bool,
    pub not: bool,
    pub bot: bool,
    pub top: bool,
    pub rule_form: bool,
    pub normal_form: bool,
}

impl FragmentDescriptor {
    pub const fn empty() -> FragmentDescriptor {
        FragmentDescriptor {
            and: false,
            or: false,
            imp: false,
            not: false,
            bot: false,
            top: false,
            rule_form: false,
            normal_form: false,
        }
    }

    /// Rules `A -> B` with `A, B` in `[&, bot, top]`.
    pub const fn horn_rules() -> FragmentDescriptor {
        FragmentDescriptor {
            and: true,
            bot: true,
            top: true,
            rule_form: true,
            ..FragmentDescriptor::empty()
        }
    }

    /// Rules `A -> B` with `A, B` in `[&, |, bot, top]`.
    pub const fn negation_free_rules() -> FragmentDescriptor {
        FragmentDescriptor {
            or: true,
            ..FragmentDescriptor::horn_rules()
        }
    }

    /// Rules `A -> B` with `A, B` in `[&, |, not]`.
    pub const fn program_rules() -> FragmentDescriptor {
        FragmentDescriptor {
            and: true,
            or: true,
            not: true,
            rule_form: true,
            ..FragmentDescriptor::empty()
        }
    }

    /// [`Self::program_rules`] extended with the constants, which reducts
    /// introduce and the here-and-there semantics handles uniformly.
    pub const fn program_rules_with_constants() -> FragmentDescriptor {
        FragmentDescriptor {
            bot: true,
            top: true,
            ..FragmentDescriptor::program_rules()
        }
    }

    /// Rules `A -> B` with `A, B` in `[&, not]`.
    pub const fn conjunction_negation_rules() -> FragmentDescriptor {
        FragmentDescriptor {
            and: true,
            not: true,
            rule_form: true,
            ..FragmentDescriptor::empty()
        }
    }

    /// Normal rules: literal-conjunction bodies, atomic heads.
    pub const fn normal_rules() -> FragmentDescriptor {
        FragmentDescriptor {
            normal_form: true,
            ..FragmentDescriptor::conjunction_negation_rules()
        }
    }

    pub const fn with_and(mut self) -> Self {
        self.and = true;
        self
    }

    pub const fn with_or(mut self) -> Self {
        self.or = true;
        self
    }

    pub const fn with_imp(mut self) -> Self {
        self.imp = true;
        self
    }

    pub const fn with_not(mut self) -> Self {
        self.not = true;
        self
    }

    pub const fn with_constants(mut self) -> Self {
        self.bot = true;
        self.top = true;
        self
    }

    /// Whether `other` admits every connective this descriptor admits.
    pub fn connectives_subset_of(&self, other: &FragmentDescriptor) -> bool {
        (!self.and || other.and)
            && (!self.or || other.or)
            && (!self.imp || other.imp)
            && (!self.not || other.not)
            && (!self.bot || other.bot)
            && (!self.top || other.top)
    }

    pub fn admits_formula(&self, f: &Formula) -> bool {
        match f {
            Formula::Atom(_) => true,
            Formula::Top => self.top,
            Formula::Bot => self.bot,
            Formula::Not(a) => self.not && self.admits_formula(a),
            Formula::And(a, b) => self.and && self.admits_formula(a) && self.admits_formula(b),
            Formula::Or(a, b) => self.or && self.admits_formula(a) && self.admits_formula(b),
            // Under rule_form the arrow is only admitted at rule level.
            Formula::Imp(a, b) => {
                self.imp
                    && !self.rule_form
                    && self.admits_formula(a)
                    && self.admits_formula(b)
            }
        }
    }

    pub fn admits_rule(&self, r: &Rule) -> bool {
        if self.normal_form {
            return is_literal_conjunction(&r.body) && matches!(r.head, Formula::Atom(_));
        }
        if self.rule_form {
            let inner = if self.imp {
                FragmentDescriptor {
                    rule_form: false,
                    ..*self
                }
            } else {
                *self
            };
            // A fact's implicit `top` body is part of the rule shape, not
            // of the body language.
            (r.body == Formula::Top || inner.admits_formula(&r.body))
                && inner.admits_formula(&r.head)
        } else {
            self.admits_formula(&r.formula())
        }
    }

    pub fn admits_program(&self, p: &Program) -> bool {
        p.rules().all(|r| self.admits_rule(r))
    }
}

fn is_literal(f: &Formula) -> bool {
    match f {
        Formula::Atom(_) => true,
        Formula::Not(a) => matches!(**a, Formula::Atom(_)),
        _ => false,
    }
}

fn is_literal_conjunction(f: &Formula) -> bool {
    match f {
        Formula::Top => true,
        Formula::And(a, b) => is_literal_conjunction(a) && is_literal_conjunction(b),
        _ => is_literal(f),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    fn prog(s: &str) -> Program {
        parse_program(s).unwrap()
    }

    #[test]
    fn atom_validation() {
        assert!(Atom::new("p").is_ok());
        assert!(Atom::new("aB_9").is_ok());
        assert!(Atom::new("").is_err());
        assert!(Atom::new("P").is_err());
        assert!(Atom::new("9x").is_err());
        assert!(Atom::new("not").is_err());
        assert!(Atom::new("top").is_err());
        assert!(Atom::new("bot").is_err());
    }

    #[test]
    fn fact_desugars_to_top_rule() {
        let p = prog("q.");
        let rules: Vec<_> = p.rules().cloned().collect();
        assert_eq!(rules, vec![Rule::fact(f("q"))]);
    }

    #[test]
    fn negated_rules_parse() {
        let p = prog("not p -> q. not not p -> q.");
        let expected = Program::new([
            Rule::new(f("not p"), f("q")),
            Rule::new(f("not not p"), f("q")),
        ]);
        assert_eq!(p, expected);
    }

    #[test]
    fn conjunction_binds_tighter_than_arrow() {
        let p = prog("p & r -> s.");
        let expected = Program::new([Rule::new(f("p & r"), f("s"))]);
        assert_eq!(p, expected);
    }

    #[test]
    fn duplicates_collapse() {
        let p = prog("q. q. p -> q. p -> q.");
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn program_atoms_are_union_of_rule_atoms() {
        let p = prog("p & r -> s. not p -> q.");
        let mut expected = AtomSet::new();
        for r in p.rules() {
            r.atoms_into(&mut expected);
        }
        assert_eq!(p.atoms(), expected);
        assert_eq!(p.universe(), &expected);
    }

    #[test]
    fn widened_universe_is_kept() {
        let p = prog("q.").with_universe([Atom::new("z").unwrap()]);
        assert!(p.universe().contains(&Atom::new("z").unwrap()));
        assert!(p.universe().contains(&Atom::new("q").unwrap()));
    }

    #[test]
    fn fragment_examples() {
        let normal = FragmentDescriptor::normal_rules();
        assert!(normal.admits_rule(&Rule::new(f("p & r"), f("s"))));
        assert!(normal.admits_rule(&Rule::new(f("p & not r"), f("s"))));
        assert!(!normal.admits_rule(&Rule::new(f("p"), f("s | q"))));

        let conj_neg = FragmentDescriptor::conjunction_negation_rules();
        assert!(!conj_neg.admits_rule(&Rule::fact(f("p | q"))));
        assert!(conj_neg.admits_rule(&Rule::new(f("not p & q"), f("not s"))));

        let neg_free = FragmentDescriptor::negation_free_rules();
        assert!(neg_free.admits_rule(&Rule::new(f("top"), f("p"))));
        assert!(!neg_free.admits_rule(&Rule::new(f("not p"), f("q"))));
    }

    #[test]
    fn rule_form_bans_nested_arrows() {
        let frag = FragmentDescriptor::program_rules();
        assert!(!frag.admits_rule(&Rule::fact(f("(p -> q) -> q"))));
        assert!(frag.admits_rule(&Rule::new(f("p | not q"), f("p & q"))));
    }

    #[test]
    fn nested_arrows_without_rule_form() {
        let frag = FragmentDescriptor::empty().with_and().with_imp();
        assert!(frag.admits_formula(&f("(p -> q) -> q")));
        assert!(frag.admits_rule(&Rule::fact(f("(p -> q) -> q"))));
    }

    #[test]
    fn depth_and_node_count() {
        assert_eq!(f("p").depth(), 0);
        assert_eq!(f("not not p").depth(), 2);
        assert_eq!(f("((p -> q) -> q) & ((q -> p) -> p)").depth(), 3);
        assert_eq!(f("p & q").node_count(), 3);
    }

    #[test]
    fn subformulas_of_nested_negation() {
        let subs = f("not not p").subformulas();
        assert_eq!(subs.len(), 3);
        assert!(subs.contains(&f("p")));
        assert!(subs.contains(&f("not p")));
        assert!(subs.contains(&f("not not p")));
    }
}
