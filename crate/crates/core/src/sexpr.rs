//! Minimal s-expression reader shared by the term, formula, and file parsers.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Sexp {
    Atom(String, usize),
    Str(String, usize),
    List(Vec<Sexp>, usize),
}

impl Sexp {
    pub fn pos(&self) -> usize {
        match self {
            Sexp::Atom(_, p) | Sexp::Str(_, p) | Sexp::List(_, p) => *p,
        }
    }

    pub fn atom(&self) -> Option<&str> {
        match self {
            Sexp::Atom(s, _) => Some(s),
            _ => None,
        }
    }

    pub fn list(&self) -> Option<&[Sexp]> {
        match self {
            Sexp::List(items, _) => Some(items),
            _ => None,
        }
    }
}

impl fmt::Display for Sexp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sexp::Atom(s, _) => write!(f, "{s}"),
            Sexp::Str(s, _) => write!(f, "\"{s}\""),
            Sexp::List(items, _) => {
                write!(f, "(")?;
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{item}")?;
                }
                write!(f, ")")
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SexpError {
    #[error("syntax error at byte {at}: expected {expected}")]
    Syntax { at: usize, expected: &'static str },
    #[error("unbalanced parenthesis at byte {at}")]
    Unbalanced { at: usize },
    #[error("trailing input at byte {at}")]
    Trailing { at: usize },
}

/// Reads one s-expression covering the whole input.
pub fn parse_one(input: &str) -> Result<Sexp, SexpError> {
    let mut toks = tokenize(input)?;
    let sexp = read(&mut toks)?;
    match toks.first() {
        Some(t) => Err(SexpError::Trailing { at: t.1 }),
        None => Ok(sexp),
    }
}

/// Reads a sequence of s-expressions (for files holding many forms).
pub fn parse_many(input: &str) -> Result<Vec<Sexp>, SexpError> {
    let mut toks = tokenize(input)?;
    let mut out = Vec::new();
    while !toks.is_empty() {
        out.push(read(&mut toks)?);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    LParen,
    RParen,
    Atom(String),
    Str(String),
}

fn tokenize(input: &str) -> Result<Vec<(Tok, usize)>, SexpError> {
    let b = input.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < b.len() {
        match b[i] {
            c if c.is_ascii_whitespace() => i += 1,
            b';' => {
                while i < b.len() && b[i] != b'\n' {
                    i += 1;
                }
            }
            b'(' => {
                toks.push((Tok::LParen, i));
                i += 1;
            }
            b')' => {
                toks.push((Tok::RParen, i));
                i += 1;
            }
            b'"' => {
                let start = i;
                i += 1;
                let s0 = i;
                while i < b.len() && b[i] != b'"' {
                    i += 1;
                }
                if i == b.len() {
                    return Err(SexpError::Syntax {
                        at: start,
                        expected: "closing '\"'",
                    });
                }
                toks.push((Tok::Str(input[s0..i].to_string()), start));
                i += 1;
            }
            _ => {
                let start = i;
                while i < b.len()
                    && !b[i].is_ascii_whitespace()
                    && b[i] != b'('
                    && b[i] != b')'
                    && b[i] != b'"'
                    && b[i] != b';'
                {
                    i += 1;
                }
                toks.push((Tok::Atom(input[start..i].to_string()), start));
            }
        }
    }
    toks.reverse(); // pop from the back
    Ok(toks)
}

fn read(toks: &mut Vec<(Tok, usize)>) -> Result<Sexp, SexpError> {
    let Some((tok, at)) = toks.pop() else {
        return Err(SexpError::Syntax {
            at: 0,
            expected: "an expression",
        });
    };
    match tok {
        Tok::Atom(s) => Ok(Sexp::Atom(s, at)),
        Tok::Str(s) => Ok(Sexp::Str(s, at)),
        Tok::RParen => Err(SexpError::Unbalanced { at }),
        Tok::LParen => {
            let mut items = Vec::new();
            loop {
                match toks.last() {
                    None => return Err(SexpError::Unbalanced { at }),
                    Some((Tok::RParen, _)) => {
                        toks.pop();
                        return Ok(Sexp::List(items, at));
                    }
                    _ => items.push(read(toks)?),
                }
            }
        }
    }
}
