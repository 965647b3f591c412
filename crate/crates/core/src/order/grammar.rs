//! Text syntax for order terms, elements, and interval sets.
//!
//! Terms: `empty`, `fin 5`, `ord "w^w*2+3"`, `k1`, `Q`, `(sum t1 t2 ...)`,
//! `(lexprod block index)`. Element literals are parsed against the carrier
//! shape; interval sets are `(set ((ge e) (lt e)) ...)` with `-inf`/`+inf`
//! for unbounded cuts.

use num::BigRational;
use thiserror::Error;

use super::element::{Element, StratifiedOrdinal};
use super::interval::{Cut, IntervalSet, Piece};
use super::ordinal::OrdinalCnf;
use super::term::OrderTerm;
use crate::sexpr::{self, Sexp, SexpError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GrammarError {
    #[error(transparent)]
    Sexp(#[from] SexpError),
    #[error("order syntax error at byte {at}: expected {expected}")]
    Syntax { at: usize, expected: &'static str },
    #[error("bad ordinal literal at byte {at}: {message}")]
    Ordinal { at: usize, message: String },
    #[error("element {element} does not validate against {term}")]
    BadElement { element: String, term: String },
}

fn syntax(at: usize, expected: &'static str) -> GrammarError {
    GrammarError::Syntax { at, expected }
}

/// Parses one order term covering the whole input.
pub fn parse_order_term(input: &str) -> Result<OrderTerm, GrammarError> {
    let forms = sexpr::parse_many(input)?;
    let mut cursor = 0;
    let t = parse_term_at(&forms, &mut cursor)?;
    if cursor != forms.len() {
        return Err(syntax(forms[cursor].pos(), "end of order term"));
    }
    Ok(t.normalize())
}

pub(crate) fn parse_term_at(forms: &[Sexp], cursor: &mut usize) -> Result<OrderTerm, GrammarError> {
    let Some(head) = forms.get(*cursor) else {
        return Err(syntax(0, "an order term"));
    };
    *cursor += 1;
    match head {
        Sexp::Atom(a, at) => match a.as_str() {
            "empty" => Ok(OrderTerm::Empty),
            "Q" => Ok(OrderTerm::Rationals),
            "fin" => {
                let n = forms
                    .get(*cursor)
                    .and_then(Sexp::atom)
                    .and_then(|s| s.parse::<u64>().ok())
                    .ok_or_else(|| syntax(*at, "a natural number after 'fin'"))?;
                *cursor += 1;
                Ok(OrderTerm::Fin(n))
            }
            "ord" => {
                let lit = match forms.get(*cursor) {
                    Some(Sexp::Str(s, _)) => s.clone(),
                    Some(Sexp::Atom(s, _)) => s.clone(),
                    _ => return Err(syntax(*at, "an ordinal literal after 'ord'")),
                };
                *cursor += 1;
                let o: OrdinalCnf = lit.parse().map_err(|e| GrammarError::Ordinal {
                    at: *at,
                    message: format!("{e}"),
                })?;
                Ok(OrderTerm::Ord(o))
            }
            s if s.starts_with('k') => {
                let i: u32 = s[1..]
                    .parse()
                    .map_err(|_| syntax(*at, "k<i> with positive i"))?;
                if i == 0 {
                    return Err(syntax(*at, "k<i> with positive i"));
                }
                Ok(OrderTerm::NamedRegular(i))
            }
            _ => Err(syntax(*at, "one of empty/fin/ord/k<i>/Q/(sum ...)/(lexprod ...)")),
        },
        Sexp::List(items, at) => {
            let op = items
                .first()
                .and_then(Sexp::atom)
                .ok_or_else(|| syntax(*at, "'sum' or 'lexprod'"))?;
            match op {
                "sum" => {
                    let mut inner = 1usize;
                    let mut parts = Vec::new();
                    while inner < items.len() {
                        parts.push(parse_term_at(items, &mut inner)?);
                    }
                    if parts.is_empty() {
                        return Err(syntax(*at, "at least one part in (sum ...)"));
                    }
                    Ok(OrderTerm::Sum(parts))
                }
                "lexprod" => {
                    let mut inner = 1usize;
                    let block = parse_term_at(items, &mut inner)?;
                    let index = parse_term_at(items, &mut inner)?;
                    if inner != items.len() {
                        return Err(syntax(*at, "exactly two terms in (lexprod ...)"));
                    }
                    Ok(OrderTerm::LexProd(Box::new(block), Box::new(index)))
                }
                _ => Err(syntax(*at, "'sum' or 'lexprod'")),
            }
        }
        Sexp::Str(_, at) => Err(syntax(*at, "an order term, not a string")),
    }
}

/// Parses an element literal against the declared carrier shape.
pub fn parse_element(carrier: &OrderTerm, form: &Sexp) -> Result<Element, GrammarError> {
    let e = parse_element_raw(carrier, form)?;
    if carrier.validate_element(&e) {
        Ok(e)
    } else {
        Err(GrammarError::BadElement {
            element: e.to_string(),
            term: carrier.to_string(),
        })
    }
}

fn parse_element_raw(carrier: &OrderTerm, form: &Sexp) -> Result<Element, GrammarError> {
    match (carrier, form) {
        (OrderTerm::Fin(_), Sexp::Atom(s, at)) => s
            .parse::<u64>()
            .map(Element::FinIdx)
            .map_err(|_| syntax(*at, "a finite index")),
        (OrderTerm::Ord(_), Sexp::Atom(s, at)) => {
            let o: OrdinalCnf = s.parse().map_err(|e| GrammarError::Ordinal {
                at: *at,
                message: format!("{e}"),
            })?;
            Ok(Element::Ordinal(o))
        }
        (OrderTerm::Rationals, Sexp::Atom(s, at)) => parse_rational(s)
            .map(Element::Rational)
            .ok_or_else(|| syntax(*at, "a rational like -3 or 5/2")),
        (OrderTerm::NamedRegular(_), Sexp::Atom(s, at)) => parse_stratified(s)
            .map(Element::Stratified)
            .ok_or_else(|| syntax(*at, "a stratified ordinal like k1*2+w+3")),
        (OrderTerm::Sum(parts), Sexp::List(items, at)) => {
            if items.len() != 3 || items[0].atom() != Some("in") {
                return Err(syntax(*at, "(in <part> <element>)"));
            }
            let p: usize = items[1]
                .atom()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| syntax(*at, "a part index"))?;
            if p >= parts.len() {
                return Err(syntax(*at, "a part index within the sum"));
            }
            Ok(Element::in_sum(p, parse_element_raw(&parts[p], &items[2])?))
        }
        (OrderTerm::LexProd(block, index), Sexp::List(items, at)) => {
            if items.len() != 3 || items[0].atom() != Some("at") {
                return Err(syntax(*at, "(at <index-element> <block-element>)"));
            }
            Ok(Element::in_lex(
                parse_element_raw(index, &items[1])?,
                parse_element_raw(block, &items[2])?,
            ))
        }
        _ => Err(syntax(form.pos(), "an element literal matching the carrier")),
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        None => s.parse::<i64>().ok().map(|n| BigRational::from_integer(n.into())),
        Some((num, den)) => {
            let n: i64 = num.parse().ok()?;
            let d: i64 = den.parse().ok()?;
            if d == 0 {
                return None;
            }
            Some(BigRational::new(n.into(), d.into()))
        }
    }
}

fn parse_stratified(s: &str) -> Option<StratifiedOrdinal> {
    let chunks: Vec<&str> = s.split('+').collect();
    let mut strata = Vec::new();
    let mut idx = 0;
    while idx < chunks.len() && chunks[idx].starts_with('k') {
        let chunk = chunks[idx];
        let (j, n) = match chunk.split_once('*') {
            Some((kj, n)) => (kj[1..].parse().ok()?, n.parse().ok()?),
            None => (chunk[1..].parse().ok()?, 1),
        };
        strata.push((j, n));
        idx += 1;
    }
    let tail = if idx == chunks.len() {
        OrdinalCnf::zero()
    } else {
        chunks[idx..].join("+").parse().ok()?
    };
    Some(StratifiedOrdinal { strata, tail })
}

pub fn print_element(e: &Element) -> String {
    e.to_string()
}

/// Parses `(set <piece>*)`; pieces are `(<lower> <upper>)` with lower in
/// `-inf | (ge e) | (gt e)` and upper in `+inf | (lt e) | (le e)`.
pub fn parse_interval_set(carrier: &OrderTerm, form: &Sexp) -> Result<IntervalSet, GrammarError> {
    let items = form
        .list()
        .filter(|items| items.first().and_then(Sexp::atom) == Some("set"))
        .ok_or_else(|| syntax(form.pos(), "(set <piece>*)"))?;
    let mut pieces = Vec::new();
    for piece in &items[1..] {
        let pair = piece
            .list()
            .filter(|p| p.len() == 2)
            .ok_or_else(|| syntax(piece.pos(), "(<lower-cut> <upper-cut>)"))?;
        pieces.push(Piece {
            lo: parse_cut(carrier, &pair[0], false)?,
            hi: parse_cut(carrier, &pair[1], true)?,
        });
    }
    Ok(IntervalSet::from_pieces(carrier.clone(), pieces))
}

fn parse_cut(carrier: &OrderTerm, form: &Sexp, upper: bool) -> Result<Cut, GrammarError> {
    match form {
        Sexp::Atom(a, at) => match (a.as_str(), upper) {
            ("-inf", false) => Ok(Cut::NegInf),
            ("+inf", true) => Ok(Cut::PosInf),
            _ => Err(syntax(
                *at,
                if upper { "+inf, (lt e) or (le e)" } else { "-inf, (ge e) or (gt e)" },
            )),
        },
        Sexp::List(items, at) => {
            if items.len() != 2 {
                return Err(syntax(*at, "a cut of the form (ge|gt|lt|le <element>)"));
            }
            let e = parse_element(carrier, &items[1])?;
            match (items[0].atom(), upper) {
                (Some("ge"), false) => Ok(Cut::Below(e)),
                (Some("gt"), false) => Ok(Cut::Above(e)),
                (Some("lt"), true) => Ok(Cut::Below(e)),
                (Some("le"), true) => Ok(Cut::Above(e)),
                _ => Err(syntax(
                    *at,
                    if upper { "(lt e) or (le e)" } else { "(ge e) or (gt e)" },
                )),
            }
        }
        Sexp::Str(_, at) => Err(syntax(*at, "a cut, not a string")),
    }
}

pub fn print_interval_set(s: &IntervalSet) -> String {
    let mut out = String::from("(set");
    for p in s.pieces() {
        out.push(' ');
        out.push('(');
        match &p.lo {
            Cut::NegInf => out.push_str("-inf"),
            Cut::Below(e) => out.push_str(&format!("(ge {e})")),
            Cut::Above(e) => out.push_str(&format!("(gt {e})")),
            Cut::PosInf => out.push_str("+inf"),
        }
        out.push(' ');
        match &p.hi {
            Cut::PosInf => out.push_str("+inf"),
            Cut::Below(e) => out.push_str(&format!("(lt {e})")),
            Cut::Above(e) => out.push_str(&format!("(le {e})")),
            Cut::NegInf => out.push_str("-inf"),
        }
        out.push(')');
    }
    out.push(')');
    out
}
