use std::sync::Arc;

use super::ast::Interner;
use super::{Equation, Formula, Relation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("unexpected character {found:?} at position {position}")]
    UnexpectedChar { position: usize, found: char },
    #[error("expected {expected} at position {position}, found {found}")]
    UnexpectedToken { position: usize, expected: &'static str, found: String },
    #[error("unbalanced parenthesis at position {position}")]
    UnbalancedParen { position: usize },
    #[error("expected a formula, found a relation at position {position}")]
    UnexpectedRelation { position: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Not,
    And,
    Or,
    LParen,
    RParen,
    Zero,
    One,
    Ident(String),
    Eq,
    Leq,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Not => "'~'".into(),
            Tok::And => "'&'".into(),
            Tok::Or => "'|'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Zero => "'0'".into(),
            Tok::One => "'1'".into(),
            Tok::Ident(s) => format!("identifier {s:?}"),
            Tok::Eq => "'='".into(),
            Tok::Leq => "'<='".into(),
        }
    }
}

/// Positions are character offsets into the input.
fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '~' | '¬' => Tok::Not,
            '&' | '∧' => Tok::And,
            '|' | '∨' => Tok::Or,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0' => Tok::Zero,
            '1' => Tok::One,
            '=' => Tok::Eq,
            '≤' => Tok::Leq,
            '<' if chars.get(i + 1) == Some(&'=') => {
                out.push((i, Tok::Leq));
                i += 2;
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(chars[start..i].iter().collect())));
                continue;
            }
            other => return Err(ParseError::UnexpectedChar { position: i, found: other }),
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    interner: Interner,
}

impl Parser {
    fn new(src: &str) -> Result<Self, ParseError> {
        let toks = tokenize(src)?;
        if toks.is_empty() {
            return Err(ParseError::Empty);
        }
        Ok(Self { toks, pos: 0, end: src.chars().count(), interner: Interner::default() })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn position(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn found(&self) -> String {
        self.peek().map_or_else(|| "end of input".into(), Tok::describe)
    }

    fn formula(&mut self) -> Result<Arc<Formula>, ParseError> {
        let mut lhs = self.conj()?;
        while self.peek() == Some(&Tok::Or) {
            self.pos += 1;
            let rhs = self.conj()?;
            lhs = self.interner.make(Formula::Or(lhs, rhs));
        }
        Ok(lhs)
    }

    fn conj(&mut self) -> Result<Arc<Formula>, ParseError> {
        let mut lhs = self.atom()?;
        while self.peek() == Some(&Tok::And) {
            self.pos += 1;
            let rhs = self.atom()?;
            lhs = self.interner.make(Formula::And(lhs, rhs));
        }
        Ok(lhs)
    }

    fn atom(&mut self) -> Result<Arc<Formula>, ParseError> {
        let position = self.position();
        let Some((_, tok)) = self.toks.get(self.pos).cloned() else {
            return Err(ParseError::UnexpectedToken { position, expected: "a formula", found: self.found() });
        };
        self.pos += 1;
        let node = match tok {
            Tok::Not => {
                let inner = self.atom()?;
                Formula::Not(inner)
            }
            Tok::Zero => Formula::Zero,
            Tok::One => Formula::One,
            Tok::Ident(name) => Formula::var(&name),
            Tok::LParen => {
                let inner = self.formula()?;
                if self.peek() != Some(&Tok::RParen) {
                    if self.peek().is_none() {
                        return Err(ParseError::UnbalancedParen { position });
                    }
                    return Err(ParseError::UnexpectedToken {
                        position: self.position(),
                        expected: "')'",
                        found: self.found(),
                    });
                }
                self.pos += 1;
                return Ok(inner);
            }
            Tok::RParen => return Err(ParseError::UnbalancedParen { position }),
            Tok::Eq | Tok::Leq => return Err(ParseError::UnexpectedRelation { position }),
            Tok::And | Tok::Or => {
                return Err(ParseError::UnexpectedToken { position, expected: "a formula", found: tok.describe() })
            }
        };
        Ok(self.interner.make(node))
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(Tok::RParen) => Err(ParseError::UnbalancedParen { position: self.position() }),
            Some(_) => Err(ParseError::UnexpectedToken {
                position: self.position(),
                expected: "end of input",
                found: self.found(),
            }),
        }
    }
}

fn unwrap_root(f: Arc<Formula>) -> Formula {
    Arc::try_unwrap(f).unwrap_or_else(|a| (*a).clone())
}

/// Result of [`parse`]: a bare formula or an equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Parsed {
    Formula(Formula),
    Equation(Equation),
}

/// Parses `formula (("=" | "<=") formula)?`. Structurally equal subterms of
/// the result are shared.
pub fn parse(src: &str) -> Result<Parsed, ParseError> {
    let mut p = Parser::new(src)?;
    let lhs = p.formula()?;
    let relation = match p.peek() {
        Some(Tok::Eq) => Relation::Equal,
        Some(Tok::Leq) => Relation::Leq,
        _ => {
            p.finish()?;
            return Ok(Parsed::Formula(unwrap_root(lhs)));
        }
    };
    p.pos += 1;
    let rhs = p.formula()?;
    p.finish()?;
    Ok(Parsed::Equation(Equation::new(unwrap_root(lhs), relation, unwrap_root(rhs))))
}

pub fn parse_formula(src: &str) -> Result<Formula, ParseError> {
    let mut p = Parser::new(src)?;
    let f = p.formula()?;
    if matches!(p.peek(), Some(Tok::Eq | Tok::Leq)) {
        return Err(ParseError::UnexpectedRelation { position: p.position() });
    }
    p.finish()?;
    Ok(unwrap_root(f))
}

/// Parses an equation. A bare formula φ is read as `φ = 1`.
pub fn parse_equation(src: &str) -> Result<Equation, ParseError> {
    Ok(match parse(src)? {
        Parsed::Equation(e) => e,
        Parsed::Formula(f) => Equation::eq(f, Formula::One),
    })
}
