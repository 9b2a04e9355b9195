//! Lexer and recursive-descent parser for the program format.

use std::fmt;

use super::{Atom, Formula, Program, Rule};

/// A syntax error with a 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
    /// Token classes that would have been accepted at the error position.
    pub expected: Vec<&'static str>,
}

impl ParseError {
    fn new(pos: Pos, message: String, expected: Vec<&'static str>) -> ParseError {
        ParseError {
            line: pos.line,
            col: pos.col,
            message,
            expected,
        }
    }

    pub(crate) fn reserved(name: &str) -> ParseError {
        ParseError {
            line: 0,
            col: 0,
            message: format!("'{name}' is a reserved word and cannot name an atom"),
            expected: vec![],
        }
    }

    pub(crate) fn bad_atom(name: &str) -> ParseError {
        ParseError {
            line: 0,
            col: 0,
            message: format!("invalid atom name '{name}': must match [a-z][a-zA-Z0-9_]*"),
            expected: vec![],
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line > 0 {
            write!(f, "{}:{}: {}", self.line, self.col, self.message)?;
        } else {
            write!(f, "{}", self.message)?;
        }
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Pos {
    line: usize,
    col: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Atom(String),
    Top,
    Bot,
    Not,
    And,
    Or,
    Arrow,
    LParen,
    RParen,
    Dot,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Atom(a) => format!("atom '{a}'"),
            Tok::Top => "'top'".into(),
            Tok::Bot => "'bot'".into(),
            Tok::Not => "'not'".into(),
            Tok::And => "'&'".into(),
            Tok::Or => "'|'".into(),
            Tok::Arrow => "'->'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Dot => "'.'".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, col };
        match c {
            '\n' => {
                chars.next();
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => {
                chars.next();
                col += 1;
            }
            '%' => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    chars.next();
                    col += 1;
                }
            }
            '&' => {
                chars.next();
                col += 1;
                out.push((Tok::And, pos));
            }
            '|' => {
                chars.next();
                col += 1;
                out.push((Tok::Or, pos));
            }
            '(' => {
                chars.next();
                col += 1;
                out.push((Tok::LParen, pos));
            }
            ')' => {
                chars.next();
                col += 1;
                out.push((Tok::RParen, pos));
            }
            '.' => {
                chars.next();
                col += 1;
                out.push((Tok::Dot, pos));
            }
            '-' => {
                chars.next();
                col += 1;
                if chars.peek() == Some(&'>') {
                    chars.next();
                    col += 1;
                    out.push((Tok::Arrow, pos));
                } else {
                    return Err(ParseError::new(
                        pos,
                        "stray '-'".into(),
                        vec!["'->'"],
                    ));
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut word = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        word.push(c);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                let tok = match word.as_str() {
                    "top" => Tok::Top,
                    "bot" => Tok::Bot,
                    "not" => Tok::Not,
                    _ => match Atom::new(&word) {
                        Ok(a) => Tok::Atom(a.0),
                        Err(mut e) => {
                            e.line = pos.line;
                            e.col = pos.col;
                            return Err(e);
                        }
                    },
                };
                out.push((tok, pos));
            }
            other => {
                return Err(ParseError::new(
                    pos,
                    format!("unexpected character '{other}'"),
                    vec![],
                ));
            }
        }
    }
    Ok(out)
}

const FORMULA_START: [&str; 5] = ["atom", "'top'", "'bot'", "'not'", "'('"];

struct Parser {
    toks: Vec<(Tok, Pos)>,
    pos: usize,
    end: Pos,
}

impl Parser {
    fn new(text: &str) -> Result<Parser, ParseError> {
        let toks = tokenize(text)?;
        let lines = text.lines().count().max(1);
        let last_len = text.lines().last().map_or(0, |l| l.chars().count());
        Ok(Parser {
            toks,
            pos: 0,
            end: Pos {
                line: lines,
                col: last_len + 1,
            },
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> Pos {
        self.toks.get(self.pos).map_or(self.end, |(_, p)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, expected: Vec<&'static str>) -> ParseError {
        let found = self
            .peek()
            .map_or("end of input".to_string(), |t| t.describe());
        ParseError::new(self.here(), format!("unexpected {found}"), expected)
    }

    fn eat(&mut self, want: &Tok, desc: &'static str) -> Result<(), ParseError> {
        if self.peek() == Some(want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(vec![desc]))
        }
    }

    // imp := or [ "->" imp ]
    fn formula(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.or_level()?;
        if self.peek() == Some(&Tok::Arrow) {
            self.pos += 1;
            let rhs = self.formula()?;
            Ok(Formula::imp(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    // or := and { "|" and }
    fn or_level(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.and_level()?;
        while self.peek() == Some(&Tok::Or) {
            self.pos += 1;
            let rhs = self.and_level()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    // and := unary { "&" unary }
    fn and_level(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while self.peek() == Some(&Tok::And) {
            self.pos += 1;
            let rhs = self.unary()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    // unary := "not" unary | "(" formula ")" | "top" | "bot" | ATOM
    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Some(Tok::Not) => {
                self.pos += 1;
                Ok(Formula::not(self.unary()?))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let f = self.formula()?;
                self.eat(&Tok::RParen, "')'")?;
                Ok(f)
            }
            Some(Tok::Top) => {
                self.pos += 1;
                Ok(Formula::Top)
            }
            Some(Tok::Bot) => {
                self.pos += 1;
                Ok(Formula::Bot)
            }
            Some(Tok::Atom(_)) => {
                let Some(Tok::Atom(name)) = self.bump() else {
                    unreachable!()
                };
                Ok(Formula::Atom(Atom(name)))
            }
            _ => Err(self.err(FORMULA_START.to_vec())),
        }
    }

    fn statement(&mut self) -> Result<Rule, ParseError> {
        let f = self.formula()?;
        self.eat(&Tok::Dot, "'.'")?;
        Ok(match f {
            Formula::Imp(body, head) => Rule::new(*body, *head),
            other => Rule::fact(other),
        })
    }
}

/// Parse a program: a sequence of `.`-terminated statements.
///
/// Facts `F.` become `top -> F`; `A -> B.` becomes the rule with body `A`
/// and head `B` (the arrow is right-associative, so `a -> b -> c.` is the
/// rule with body `a` and head `b -> c`).
pub fn parse_program(text: &str) -> Result<Program, ParseError> {
    let mut p = Parser::new(text)?;
    let mut rules = Vec::new();
    while p.peek().is_some() {
        rules.push(p.statement()?);
    }
    Ok(Program::new(rules))
}

/// Parse a single formula. A trailing `.` is accepted and ignored.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser::new(text)?;
    let f = p.formula()?;
    if p.peek() == Some(&Tok::Dot) {
        p.pos += 1;
    }
    if p.peek().is_some() {
        return Err(p.err(vec!["end of input"]));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        assert_eq!(
            parse_formula("not p & q | r -> s").unwrap(),
            Formula::imp(
                Formula::or(
                    Formula::and(Formula::not(atom("p")), atom("q")),
                    atom("r")
                ),
                atom("s")
            )
        );
    }

    fn atom(s: &str) -> Formula {
        Formula::Atom(Atom::new(s).unwrap())
    }

    #[test]
    fn arrow_is_right_associative() {
        assert_eq!(
            parse_formula("a -> b -> c").unwrap(),
            Formula::imp(atom("a"), Formula::imp(atom("b"), atom("c")))
        );
    }

    #[test]
    fn and_or_fold_left() {
        assert_eq!(
            parse_formula("a & b & c").unwrap(),
            Formula::and(Formula::and(atom("a"), atom("b")), atom("c"))
        );
        assert_eq!(
            parse_formula("a | b | c").unwrap(),
            Formula::or(Formula::or(atom("a"), atom("b")), atom("c"))
        );
    }

    #[test]
    fn comments_and_whitespace() {
        let p = parse_program("% a comment\n  q.  % trailing\np -> q.\n").unwrap();
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn error_position_and_expectations() {
        let e = parse_program("p -> .").unwrap_err();
        assert_eq!((e.line, e.col), (1, 6));
        assert!(e.expected.contains(&"atom"));
        assert!(e.expected.contains(&"'not'"));

        let e = parse_program("q").unwrap_err();
        assert!(e.message.contains("end of input"));
        assert_eq!(e.expected, vec!["'.'"]);
    }

    #[test]
    fn uppercase_atom_rejected_with_position() {
        let e = parse_program("p -> Q.").unwrap_err();
        assert_eq!((e.line, e.col), (1, 6));
        assert!(e.message.contains("invalid atom name"));
    }

    #[test]
    fn reserved_words_are_not_atoms() {
        // `not` with no operand: the keyword is lexed, the operand is missing.
        let e = parse_program("not.").unwrap_err();
        assert!(e.expected.contains(&"atom"));
        assert!(Atom::new("not").unwrap_err().message.contains("reserved"));
    }

    #[test]
    fn top_arrow_statement() {
        let p = parse_program("top -> a -> b.").unwrap();
        let rules: Vec<_> = p.rules().cloned().collect();
        assert_eq!(
            rules,
            vec![Rule::new(
                Formula::Top,
                Formula::imp(atom("a"), atom("b"))
            )]
        );
    }
}
