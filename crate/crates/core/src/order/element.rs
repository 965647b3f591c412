//! Elements of symbolic linear orders.
//!
//! An element's shape mirrors the shape of the order term it lives in; the
//! pairing is validated by [`crate::order::OrderTerm::validate_element`].

use std::fmt;

use num::BigRational;

use super::ordinal::OrdinalCnf;

/// A point of a formal regular cardinal `k_i`: a descending stratified sum
/// `k_{j}*n_{j} + ... + gamma` with `j < i`, natural coefficients, and a
/// countable ordinal tail.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct StratifiedOrdinal {
    /// `(j, n_j)` pairs with `j` strictly descending and every `n_j >= 1`.
    pub strata: Vec<(u32, u64)>,
    pub tail: OrdinalCnf,
}

impl StratifiedOrdinal {
    pub fn from_cnf(tail: OrdinalCnf) -> Self {
        StratifiedOrdinal {
            strata: Vec::new(),
            tail,
        }
    }

    pub fn zero() -> Self {
        Self::from_cnf(OrdinalCnf::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.strata.is_empty() && self.tail.is_zero()
    }

    pub fn succ(&self) -> StratifiedOrdinal {
        StratifiedOrdinal {
            strata: self.strata.clone(),
            tail: self.tail.succ(),
        }
    }

    pub fn pred(&self) -> Option<StratifiedOrdinal> {
        Some(StratifiedOrdinal {
            strata: self.strata.clone(),
            tail: self.tail.pred()?,
        })
    }

    /// Descending-lexicographic comparison on strata, then the tail.
    pub fn cmp_strat(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        let mut a = self.strata.iter();
        let mut b = other.strata.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return self.tail.cmp(&other.tail),
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((j1, n1)), Some((j2, n2))) => {
                    if j1 != j2 {
                        // a term at a higher stratum dominates
                        return j1.cmp(j2);
                    }
                    if n1 != n2 {
                        return n1.cmp(n2);
                    }
                }
            }
        }
    }
}

impl fmt::Display for StratifiedOrdinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.strata.is_empty() {
            return write!(f, "{}", self.tail);
        }
        let mut first = true;
        for (j, n) in &self.strata {
            if !first {
                write!(f, "+")?;
            }
            first = false;
            write!(f, "k{j}")?;
            if *n > 1 {
                write!(f, "*{n}")?;
            }
        }
        if !self.tail.is_zero() {
            write!(f, "+{}", self.tail)?;
        }
        Ok(())
    }
}

impl fmt::Debug for StratifiedOrdinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Strat({self})")
    }
}

/// A point of a symbolic linear order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Element {
    /// Index into `Fin(n)`.
    FinIdx(u64),
    /// Ordinal below the `Ord` bound.
    Ordinal(OrdinalCnf),
    /// Point of a named regular cardinal.
    Stratified(StratifiedOrdinal),
    /// Exact rational.
    Rational(BigRational),
    /// Part index plus inner point of a `Sum`.
    InSum(usize, Box<Element>),
    /// `(index point, block point)` of a `LexProd`; the index coordinate
    /// dominates in comparisons.
    InLex(Box<Element>, Box<Element>),
}

impl Element {
    pub fn rat_int(n: i64) -> Element {
        Element::Rational(BigRational::from_integer(n.into()))
    }

    pub fn rat(num: i64, den: i64) -> Element {
        Element::Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn ord(o: OrdinalCnf) -> Element {
        Element::Ordinal(o)
    }

    pub fn nat(n: u64) -> Element {
        Element::Ordinal(OrdinalCnf::from_nat(n))
    }

    pub fn in_sum(part: usize, inner: Element) -> Element {
        Element::InSum(part, Box::new(inner))
    }

    pub fn in_lex(index: Element, block: Element) -> Element {
        Element::InLex(Box::new(index), Box::new(block))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::FinIdx(i) => write!(f, "{i}"),
            Element::Ordinal(o) => write!(f, "{o}"),
            Element::Stratified(s) => write!(f, "{s}"),
            Element::Rational(q) => write!(f, "{q}"),
            Element::InSum(p, inner) => write!(f, "(in {p} {inner})"),
            Element::InLex(i, b) => write!(f, "(at {i} {b})"),
        }
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
