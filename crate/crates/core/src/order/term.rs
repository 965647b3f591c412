//! Symbolic linear orders and their element-level operations.

use std::cmp::Ordering;
use std::fmt;

use num::{BigInt, BigRational, One, Zero};
use thiserror::Error;

use super::element::{Element, StratifiedOrdinal};
use super::ordinal::OrdinalCnf;

/// How a linear order approaches its top: empty, a last element, a countable
/// ladder, or a formal regular uncountable cardinal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CofinalityTag {
    Zero,
    One,
    Omega,
    Kappa(u32),
}

impl fmt::Display for CofinalityTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CofinalityTag::Zero => write!(f, "0"),
            CofinalityTag::One => write!(f, "1"),
            CofinalityTag::Omega => write!(f, "w"),
            CofinalityTag::Kappa(i) => write!(f, "k{i}"),
        }
    }
}

/// Symbolic cardinality of a definable set: exact finite count, countably
/// infinite, or a named regular uncountable cardinal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CardinalValue {
    Finite(u64),
    Aleph0,
    Kappa(u32),
}

impl PartialOrd for CardinalValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CardinalValue {
    fn cmp(&self, other: &Self) -> Ordering {
        use CardinalValue::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), _) => Ordering::Less,
            (_, Finite(_)) => Ordering::Greater,
            (Aleph0, Aleph0) => Ordering::Equal,
            (Aleph0, Kappa(_)) => Ordering::Less,
            (Kappa(_), Aleph0) => Ordering::Greater,
            (Kappa(i), Kappa(j)) => i.cmp(j),
        }
    }
}

impl CardinalValue {
    pub fn add(self, rhs: CardinalValue) -> CardinalValue {
        use CardinalValue::*;
        match (self, rhs) {
            (Finite(a), Finite(b)) => Finite(a + b),
            (a, b) => a.max(b),
        }
    }

    pub fn mul(self, rhs: CardinalValue) -> CardinalValue {
        use CardinalValue::*;
        match (self, rhs) {
            (Finite(0), _) | (_, Finite(0)) => Finite(0),
            (Finite(a), Finite(b)) => Finite(a * b),
            (a, b) => a.max(b),
        }
    }
}

impl fmt::Display for CardinalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CardinalValue::Finite(n) => write!(f, "{n}"),
            CardinalValue::Aleph0 => write!(f, "aleph0"),
            CardinalValue::Kappa(i) => write!(f, "k{i}"),
        }
    }
}

/// A symbolic linear order. `LexProd(block, index)` is "index-many copies of
/// block": elements compare on the index coordinate first, so
/// `LexProd(Rationals, NamedRegular(1))` is the order usually written
/// "Q x omega_1".
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum OrderTerm {
    Empty,
    Fin(u64),
    Ord(OrdinalCnf),
    NamedRegular(u32),
    Rationals,
    Sum(Vec<OrderTerm>),
    LexProd(Box<OrderTerm>, Box<OrderTerm>),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrderError {
    #[error("element {element} does not validate against {term}")]
    InvalidElement { element: String, term: String },
    #[error("interval sets have different owners: {0} vs {1}")]
    OwnerMismatch(String, String),
    #[error("first set is not a subset of the second")]
    NotSubset,
}

impl OrderTerm {
    pub fn fin(n: u64) -> OrderTerm {
        OrderTerm::Fin(n).normalize()
    }

    pub fn ord(o: OrdinalCnf) -> OrderTerm {
        OrderTerm::Ord(o).normalize()
    }

    pub fn sum(parts: Vec<OrderTerm>) -> OrderTerm {
        OrderTerm::Sum(parts).normalize()
    }

    pub fn lexprod(block: OrderTerm, index: OrderTerm) -> OrderTerm {
        OrderTerm::LexProd(Box::new(block), Box::new(index)).normalize()
    }

    /// Removes empty parts, flattens nested sums, and collapses the trivial
    /// product `LexProd(b, Fin(1))` to `b`. Normalized terms compare
    /// structurally.
    pub fn normalize(&self) -> OrderTerm {
        match self {
            OrderTerm::Empty => OrderTerm::Empty,
            OrderTerm::Fin(0) => OrderTerm::Empty,
            OrderTerm::Fin(n) => OrderTerm::Fin(*n),
            OrderTerm::Ord(o) if o.is_zero() => OrderTerm::Empty,
            OrderTerm::Ord(o) => OrderTerm::Ord(o.clone()),
            OrderTerm::NamedRegular(i) => OrderTerm::NamedRegular(*i),
            OrderTerm::Rationals => OrderTerm::Rationals,
            OrderTerm::Sum(parts) => {
                let mut flat = Vec::new();
                for p in parts {
                    match p.normalize() {
                        OrderTerm::Empty => {}
                        OrderTerm::Sum(inner) => flat.extend(inner),
                        other => flat.push(other),
                    }
                }
                match flat.len() {
                    0 => OrderTerm::Empty,
                    1 => flat.pop().unwrap(),
                    _ => OrderTerm::Sum(flat),
                }
            }
            OrderTerm::LexProd(block, index) => {
                let b = block.normalize();
                let i = index.normalize();
                match (&b, &i) {
                    (OrderTerm::Empty, _) | (_, OrderTerm::Empty) => OrderTerm::Empty,
                    (_, OrderTerm::Fin(1)) => b,
                    _ => OrderTerm::LexProd(Box::new(b), Box::new(i)),
                }
            }
        }
    }

    pub fn is_empty_order(&self) -> bool {
        matches!(self.normalize(), OrderTerm::Empty)
    }

    pub fn validate_element(&self, e: &Element) -> bool {
        match (self, e) {
            (OrderTerm::Fin(n), Element::FinIdx(i)) => i < n,
            (OrderTerm::Ord(o), Element::Ordinal(x)) => x < o,
            (OrderTerm::NamedRegular(i), Element::Stratified(s)) => {
                s.strata.windows(2).all(|w| w[0].0 > w[1].0)
                    && s.strata.iter().all(|(j, n)| *j >= 1 && *j < *i && *n >= 1)
            }
            (OrderTerm::Rationals, Element::Rational(_)) => true,
            (OrderTerm::Sum(parts), Element::InSum(p, inner)) => {
                *p < parts.len() && parts[*p].validate_element(inner)
            }
            (OrderTerm::LexProd(block, index), Element::InLex(ie, be)) => {
                index.validate_element(ie) && block.validate_element(be)
            }
            _ => false,
        }
    }

    fn check(&self, e: &Element) -> Result<(), OrderError> {
        if self.validate_element(e) {
            Ok(())
        } else {
            Err(OrderError::InvalidElement {
                element: e.to_string(),
                term: self.to_string(),
            })
        }
    }

    /// Total order on validated elements.
    pub fn compare(&self, a: &Element, b: &Element) -> Result<Ordering, OrderError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.compare_unchecked(a, b))
    }

    pub(crate) fn compare_unchecked(&self, a: &Element, b: &Element) -> Ordering {
        match (self, a, b) {
            (OrderTerm::Fin(_), Element::FinIdx(i), Element::FinIdx(j)) => i.cmp(j),
            (OrderTerm::Ord(_), Element::Ordinal(x), Element::Ordinal(y)) => x.cmp(y),
            (OrderTerm::NamedRegular(_), Element::Stratified(x), Element::Stratified(y)) => {
                x.cmp_strat(y)
            }
            (OrderTerm::Rationals, Element::Rational(x), Element::Rational(y)) => x.cmp(y),
            (OrderTerm::Sum(parts), Element::InSum(p1, x), Element::InSum(p2, y)) => p1
                .cmp(p2)
                .then_with(|| parts[*p1].compare_unchecked(x, y)),
            (OrderTerm::LexProd(block, index), Element::InLex(i1, b1), Element::InLex(i2, b2)) => {
                index
                    .compare_unchecked(i1, i2)
                    .then_with(|| block.compare_unchecked(b1, b2))
            }
            _ => unreachable!("compare_unchecked on unvalidated element"),
        }
    }

    pub fn min_element(&self) -> Option<Element> {
        match self {
            OrderTerm::Empty => None,
            OrderTerm::Fin(_) => Some(Element::FinIdx(0)),
            OrderTerm::Ord(_) => Some(Element::Ordinal(OrdinalCnf::zero())),
            OrderTerm::NamedRegular(_) => Some(Element::Stratified(StratifiedOrdinal::zero())),
            OrderTerm::Rationals => None,
            OrderTerm::Sum(parts) => Some(Element::in_sum(0, parts[0].min_element()?)),
            OrderTerm::LexProd(block, index) => Some(Element::in_lex(
                index.min_element()?,
                block.min_element()?,
            )),
        }
    }

    pub fn max_element(&self) -> Option<Element> {
        match self {
            OrderTerm::Empty => None,
            OrderTerm::Fin(n) => Some(Element::FinIdx(n - 1)),
            OrderTerm::Ord(o) => Some(Element::Ordinal(o.pred()?)),
            OrderTerm::NamedRegular(_) => None,
            OrderTerm::Rationals => None,
            OrderTerm::Sum(parts) => {
                let last = parts.len() - 1;
                Some(Element::in_sum(last, parts[last].max_element()?))
            }
            OrderTerm::LexProd(block, index) => Some(Element::in_lex(
                index.max_element()?,
                block.max_element()?,
            )),
        }
    }

    /// The immediate successor of `a` within this order, when one exists.
    pub fn successor_within(&self, a: &Element) -> Option<Element> {
        match (self, a) {
            (OrderTerm::Fin(n), Element::FinIdx(i)) => {
                (i + 1 < *n).then(|| Element::FinIdx(i + 1))
            }
            (OrderTerm::Ord(o), Element::Ordinal(x)) => {
                let s = x.succ();
                (&s < o).then(|| Element::Ordinal(s))
            }
            (OrderTerm::NamedRegular(_), Element::Stratified(s)) => {
                Some(Element::Stratified(s.succ()))
            }
            (OrderTerm::Rationals, Element::Rational(_)) => None,
            (OrderTerm::Sum(parts), Element::InSum(p, inner)) => {
                if let Some(s) = parts[*p].successor_within(inner) {
                    return Some(Element::in_sum(*p, s));
                }
                let is_part_max = parts[*p]
                    .max_element()
                    .is_some_and(|m| parts[*p].compare_unchecked(&m, inner) == Ordering::Equal);
                if is_part_max && p + 1 < parts.len() {
                    return Some(Element::in_sum(p + 1, parts[p + 1].min_element()?));
                }
                None
            }
            (OrderTerm::LexProd(block, index), Element::InLex(ie, be)) => {
                if let Some(s) = block.successor_within(be) {
                    return Some(Element::in_lex((**ie).clone(), s));
                }
                let is_block_max = block
                    .max_element()
                    .is_some_and(|m| block.compare_unchecked(&m, be) == Ordering::Equal);
                if is_block_max {
                    let si = index.successor_within(ie)?;
                    return Some(Element::in_lex(si, block.min_element()?));
                }
                None
            }
            _ => None,
        }
    }

    /// The immediate predecessor of `a` within this order, when one exists.
    pub fn predecessor_within(&self, a: &Element) -> Option<Element> {
        match (self, a) {
            (OrderTerm::Fin(_), Element::FinIdx(i)) => i.checked_sub(1).map(Element::FinIdx),
            (OrderTerm::Ord(_), Element::Ordinal(x)) => x.pred().map(Element::Ordinal),
            (OrderTerm::NamedRegular(_), Element::Stratified(s)) => {
                s.pred().map(Element::Stratified)
            }
            (OrderTerm::Rationals, Element::Rational(_)) => None,
            (OrderTerm::Sum(parts), Element::InSum(p, inner)) => {
                if let Some(s) = parts[*p].predecessor_within(inner) {
                    return Some(Element::in_sum(*p, s));
                }
                let is_part_min = parts[*p]
                    .min_element()
                    .is_some_and(|m| parts[*p].compare_unchecked(&m, inner) == Ordering::Equal);
                if is_part_min && *p > 0 {
                    return Some(Element::in_sum(p - 1, parts[p - 1].max_element()?));
                }
                None
            }
            (OrderTerm::LexProd(block, index), Element::InLex(ie, be)) => {
                if let Some(s) = block.predecessor_within(be) {
                    return Some(Element::in_lex((**ie).clone(), s));
                }
                let is_block_min = block
                    .min_element()
                    .is_some_and(|m| block.compare_unchecked(&m, be) == Ordering::Equal);
                if is_block_min {
                    let pi = index.predecessor_within(ie)?;
                    return Some(Element::in_lex(pi, block.max_element()?));
                }
                None
            }
            _ => None,
        }
    }

    /// True iff some element lies strictly between `a` and `b`. For `a < b`
    /// this fails exactly when `b` is the immediate successor of `a`.
    pub fn exists_strictly_between(&self, a: &Element, b: &Element) -> bool {
        if self.compare_unchecked(a, b) != Ordering::Less {
            return false;
        }
        match self.successor_within(a) {
            Some(s) => self.compare_unchecked(&s, b) == Ordering::Less,
            None => true,
        }
    }

    /// Some canonical element of the order, if nonempty.
    pub fn sample_any(&self) -> Option<Element> {
        match self {
            OrderTerm::Empty => None,
            OrderTerm::Rationals => Some(Element::rat_int(0)),
            OrderTerm::Sum(parts) => Some(Element::in_sum(0, parts[0].sample_any()?)),
            OrderTerm::LexProd(block, index) => {
                Some(Element::in_lex(index.sample_any()?, block.sample_any()?))
            }
            _ => self.min_element(),
        }
    }

    /// Some element strictly above `a`; requires `a` not to be the maximum.
    pub fn pick_above(&self, a: &Element) -> Option<Element> {
        if let Some(s) = self.successor_within(a) {
            return Some(s);
        }
        match (self, a) {
            (OrderTerm::Rationals, Element::Rational(q)) => {
                Some(Element::Rational(q + BigRational::one()))
            }
            (OrderTerm::Sum(parts), Element::InSum(p, inner)) => {
                if let Some(x) = parts[*p].pick_above(inner) {
                    return Some(Element::in_sum(*p, x));
                }
                if p + 1 < parts.len() {
                    return Some(Element::in_sum(p + 1, parts[p + 1].sample_any()?));
                }
                None
            }
            (OrderTerm::LexProd(block, index), Element::InLex(ie, be)) => {
                if let Some(x) = block.pick_above(be) {
                    return Some(Element::in_lex((**ie).clone(), x));
                }
                Some(Element::in_lex(index.pick_above(ie)?, block.sample_any()?))
            }
            _ => None,
        }
    }

    /// Some element strictly below `a`; requires `a` not to be the minimum.
    pub fn pick_below(&self, a: &Element) -> Option<Element> {
        if let Some(p) = self.predecessor_within(a) {
            return Some(p);
        }
        match (self, a) {
            (OrderTerm::Rationals, Element::Rational(q)) => {
                Some(Element::Rational(q - BigRational::one()))
            }
            (OrderTerm::Sum(parts), Element::InSum(p, inner)) => {
                if let Some(x) = parts[*p].pick_below(inner) {
                    return Some(Element::in_sum(*p, x));
                }
                p.checked_sub(1)
                    .and_then(|q| Some(Element::in_sum(q, parts[q].sample_any()?)))
            }
            (OrderTerm::LexProd(block, index), Element::InLex(ie, be)) => {
                if let Some(x) = block.pick_below(be) {
                    return Some(Element::in_lex((**ie).clone(), x));
                }
                Some(Element::in_lex(index.pick_below(ie)?, block.sample_any()?))
            }
            _ => None,
        }
    }

    /// Some element strictly between `a` and `b`, when one exists.
    pub fn pick_between(&self, a: &Element, b: &Element) -> Option<Element> {
        if !self.exists_strictly_between(a, b) {
            return None;
        }
        if let Some(s) = self.successor_within(a) {
            return Some(s); // s < b given the check above
        }
        match (self, a, b) {
            (OrderTerm::Rationals, Element::Rational(x), Element::Rational(y)) => {
                Some(Element::Rational((x + y) / BigRational::from_integer(BigInt::from(2))))
            }
            (OrderTerm::Sum(parts), Element::InSum(p1, x), Element::InSum(p2, y)) => {
                if p1 == p2 {
                    return Some(Element::in_sum(*p1, parts[*p1].pick_between(x, y)?));
                }
                if let Some(z) = parts[*p1].pick_above(x) {
                    return Some(Element::in_sum(*p1, z));
                }
                if p1 + 1 < *p2 {
                    return Some(Element::in_sum(p1 + 1, parts[p1 + 1].sample_any()?));
                }
                Some(Element::in_sum(*p2, parts[*p2].pick_below(y)?))
            }
            (OrderTerm::LexProd(block, index), Element::InLex(i1, b1), Element::InLex(i2, b2)) => {
                if index.compare_unchecked(i1, i2) == Ordering::Equal {
                    return Some(Element::in_lex((**i1).clone(), block.pick_between(b1, b2)?));
                }
                if let Some(z) = block.pick_above(b1) {
                    return Some(Element::in_lex((**i1).clone(), z));
                }
                if let Some(mid) = index.pick_between(i1, i2) {
                    return Some(Element::in_lex(mid, block.sample_any()?));
                }
                Some(Element::in_lex((**i2).clone(), block.pick_below(b2)?))
            }
            _ => None,
        }
    }

    /// The cofinality of the whole order.
    pub fn cofinality(&self) -> CofinalityTag {
        if self.is_empty_order() {
            return CofinalityTag::Zero;
        }
        if self.max_element().is_some() {
            return CofinalityTag::One;
        }
        match self {
            OrderTerm::Ord(_) => CofinalityTag::Omega,
            OrderTerm::NamedRegular(i) => CofinalityTag::Kappa(*i),
            OrderTerm::Rationals => CofinalityTag::Omega,
            OrderTerm::Sum(parts) => parts.last().unwrap().cofinality(),
            OrderTerm::LexProd(block, index) => {
                if index.max_element().is_some() {
                    block.cofinality()
                } else {
                    index.cofinality()
                }
            }
            // Empty, Fin, and successor Ords are covered above
            _ => unreachable!("normalized order with no max"),
        }
    }

    /// Cofinality of the initial segment `{x : x < b}`.
    pub fn cof_below(&self, b: &Element) -> CofinalityTag {
        match (self, b) {
            (OrderTerm::Fin(_), Element::FinIdx(i)) => {
                if *i == 0 {
                    CofinalityTag::Zero
                } else {
                    CofinalityTag::One
                }
            }
            (OrderTerm::Ord(_), Element::Ordinal(x)) => cof_of_cnf(x),
            (OrderTerm::Rationals, Element::Rational(_)) => CofinalityTag::Omega,
            (OrderTerm::NamedRegular(_), Element::Stratified(s)) => {
                if !s.tail.is_zero() {
                    cof_of_cnf(&s.tail)
                } else if let Some((j, _)) = s.strata.last() {
                    CofinalityTag::Kappa(*j)
                } else {
                    CofinalityTag::Zero
                }
            }
            (OrderTerm::Sum(parts), Element::InSum(p, inner)) => {
                match parts[*p].cof_below(inner) {
                    CofinalityTag::Zero => {
                        if *p == 0 {
                            CofinalityTag::Zero
                        } else {
                            OrderTerm::Sum(parts[..*p].to_vec()).normalize().cofinality()
                        }
                    }
                    c => c,
                }
            }
            (OrderTerm::LexProd(block, index), Element::InLex(ie, be)) => {
                match block.cof_below(be) {
                    CofinalityTag::Zero => match index.cof_below(ie) {
                        CofinalityTag::Zero => CofinalityTag::Zero,
                        below => {
                            if index.predecessor_within(ie).is_some() {
                                block.cofinality()
                            } else {
                                below
                            }
                        }
                    },
                    c => c,
                }
            }
            _ => CofinalityTag::Zero,
        }
    }

    /// Symbolic cardinality of the whole order.
    pub fn cardinality(&self) -> CardinalValue {
        match self {
            OrderTerm::Empty => CardinalValue::Finite(0),
            OrderTerm::Fin(n) => CardinalValue::Finite(*n),
            OrderTerm::Ord(o) => match o.as_nat() {
                Some(n) => CardinalValue::Finite(n),
                None => CardinalValue::Aleph0,
            },
            OrderTerm::NamedRegular(i) => CardinalValue::Kappa(*i),
            OrderTerm::Rationals => CardinalValue::Aleph0,
            OrderTerm::Sum(parts) => parts
                .iter()
                .map(OrderTerm::cardinality)
                .fold(CardinalValue::Finite(0), CardinalValue::add),
            OrderTerm::LexProd(block, index) => block.cardinality().mul(index.cardinality()),
        }
    }

    /// A deterministic ascending sample of at most `budget` elements, spread
    /// across the shape of the order.
    pub fn element_iter(&self, budget: usize) -> Vec<Element> {
        if budget == 0 {
            return Vec::new();
        }
        match self {
            OrderTerm::Empty => Vec::new(),
            OrderTerm::Fin(n) => (0..(*n).min(budget as u64)).map(Element::FinIdx).collect(),
            OrderTerm::Ord(o) => ordinal_ladder(o, budget)
                .into_iter()
                .map(Element::Ordinal)
                .collect(),
            OrderTerm::NamedRegular(i) => stratified_ladder(*i, budget)
                .into_iter()
                .map(Element::Stratified)
                .collect(),
            OrderTerm::Rationals => rational_ladder(budget),
            OrderTerm::Sum(parts) => {
                let per = budget.div_ceil(parts.len()).max(1);
                let mut out = Vec::new();
                for (p, part) in parts.iter().enumerate() {
                    for e in part.element_iter(per) {
                        if out.len() >= budget {
                            break;
                        }
                        out.push(Element::in_sum(p, e));
                    }
                }
                out
            }
            OrderTerm::LexProd(block, index) => {
                let idx = index.element_iter(budget);
                let blocks = block.element_iter(budget.min(4).max(1));
                idx.into_iter()
                    .enumerate()
                    .map(|(k, ie)| Element::in_lex(ie, blocks[k % blocks.len()].clone()))
                    .take(budget)
                    .collect()
            }
        }
    }

    /// A strictly ascending sequence cofinal in the order, when the
    /// cofinality is countable (`Omega`). Used as an explicit witness
    /// enumerator.
    pub fn cofinal_sequence(&self, n: usize) -> Option<Vec<Element>> {
        if self.cofinality() != CofinalityTag::Omega {
            return None;
        }
        match self {
            OrderTerm::Ord(o) => Some(
                o.cofinal_sequence(n)?
                    .into_iter()
                    .map(Element::Ordinal)
                    .collect(),
            ),
            OrderTerm::Rationals => Some((0..n as i64).map(Element::rat_int).collect()),
            OrderTerm::Sum(parts) => {
                let last = parts.len() - 1;
                Some(
                    parts[last]
                        .cofinal_sequence(n)?
                        .into_iter()
                        .map(|e| Element::in_sum(last, e))
                        .collect(),
                )
            }
            OrderTerm::LexProd(block, index) => {
                if let Some(m) = index.max_element() {
                    Some(
                        block
                            .cofinal_sequence(n)?
                            .into_iter()
                            .map(|b| Element::in_lex(m.clone(), b))
                            .collect(),
                    )
                } else {
                    let b0 = block.sample_any()?;
                    Some(
                        index
                            .cofinal_sequence(n)?
                            .into_iter()
                            .map(|ie| Element::in_lex(ie, b0.clone()))
                            .collect(),
                    )
                }
            }
            _ => None,
        }
    }

    /// Syntactic certificate that the order is dense without endpoints. A
    /// lexicographic product with a dense endpoint-free block is itself dense
    /// and endpoint-free whatever the index order is.
    pub fn is_dense_without_endpoints(&self) -> bool {
        match self {
            OrderTerm::Rationals => true,
            OrderTerm::LexProd(block, _) => block.is_dense_without_endpoints(),
            OrderTerm::Sum(parts) => parts.iter().all(OrderTerm::is_dense_without_endpoints),
            _ => false,
        }
    }
}

fn cof_of_cnf(x: &OrdinalCnf) -> CofinalityTag {
    if x.is_zero() {
        CofinalityTag::Zero
    } else if x.is_successor() {
        CofinalityTag::One
    } else {
        CofinalityTag::Omega
    }
}

fn ordinal_ladder(bound: &OrdinalCnf, budget: usize) -> Vec<OrdinalCnf> {
    if let Some(n) = bound.as_nat() {
        return (0..n.min(budget as u64)).map(OrdinalCnf::from_nat).collect();
    }
    // landmarks approaching the bound, then small offsets above each
    let mut picks: Vec<OrdinalCnf> = vec![OrdinalCnf::zero(), OrdinalCnf::from_nat(1)];
    if let Some(seq) = bound.cofinal_sequence(budget.div_ceil(2)) {
        for s in seq {
            picks.push(s.clone());
            picks.push(s.succ());
        }
    } else if let Some(p) = bound.pred() {
        // successor bound: ladder below the predecessor, then the predecessor
        picks.extend(ordinal_ladder(&p, budget.saturating_sub(1)));
        picks.push(p);
    }
    picks.sort();
    picks.dedup();
    picks.retain(|x| x < bound);
    picks.truncate(budget);
    picks
}

fn stratified_ladder(i: u32, budget: usize) -> Vec<StratifiedOrdinal> {
    let mut out: Vec<StratifiedOrdinal> = countable_ladder(budget)
        .into_iter()
        .map(StratifiedOrdinal::from_cnf)
        .collect();
    for j in 1..i {
        for n in 1..=2 {
            out.push(StratifiedOrdinal {
                strata: vec![(j, n)],
                tail: OrdinalCnf::zero(),
            });
            out.push(StratifiedOrdinal {
                strata: vec![(j, n)],
                tail: OrdinalCnf::from_nat(1),
            });
        }
    }
    out.sort_by(|a, b| a.cmp_strat(b));
    out.dedup();
    out.truncate(budget);
    out
}

/// 0, 1, 2, w, w+1, w*2, w*3, ... — an unbounded ascending countable ladder.
fn countable_ladder(n: usize) -> Vec<OrdinalCnf> {
    (0..n as u64)
        .map(|k| match k {
            0..=2 => OrdinalCnf::from_nat(k),
            3 => OrdinalCnf::omega(),
            4 => OrdinalCnf::omega().succ(),
            _ => OrdinalCnf::from_terms(vec![(OrdinalCnf::from_nat(1), k - 3)]).unwrap(),
        })
        .collect()
}

fn rational_ladder(budget: usize) -> Vec<Element> {
    let mut qs: Vec<BigRational> = vec![
        BigRational::from_integer((-1).into()),
        BigRational::zero(),
        BigRational::new(1.into(), 2.into()),
    ];
    let mut k = 1i64;
    while qs.len() < budget {
        qs.push(BigRational::from_integer(k.into()));
        k += 1;
    }
    qs.sort();
    qs.truncate(budget);
    qs.into_iter().map(Element::Rational).collect()
}

impl fmt::Display for OrderTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderTerm::Empty => write!(f, "empty"),
            OrderTerm::Fin(n) => write!(f, "fin {n}"),
            OrderTerm::Ord(o) => write!(f, "ord \"{o}\""),
            OrderTerm::NamedRegular(i) => write!(f, "k{i}"),
            OrderTerm::Rationals => write!(f, "Q"),
            OrderTerm::Sum(parts) => {
                write!(f, "(sum")?;
                for p in parts {
                    write!(f, " {p}")?;
                }
                write!(f, ")")
            }
            OrderTerm::LexProd(block, index) => write!(f, "(lexprod {block} {index})"),
        }
    }
}

impl fmt::Debug for OrderTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
