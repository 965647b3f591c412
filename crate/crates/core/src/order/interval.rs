//! Canonical interval sets over a symbolic linear order.
//!
//! A piece is a pair of cuts. `Below(e)` sits immediately below the element
//! `e` and `Above(e)` immediately above it, so the classic half-open `[a, b)`
//! is `[Below(a), Below(b))` and strict bounds over dense orders need no
//! successor elements. Canonicalization tightens every bound (`Above(max)`
//! when the piece has a maximum, `Below(least element above)` otherwise), so
//! equal point sets have identical representations.

use std::cmp::Ordering;
use std::fmt;

use super::element::Element;
use super::term::{CardinalValue, CofinalityTag, OrderError, OrderTerm};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Cut {
    NegInf,
    Below(Element),
    Above(Element),
    PosInf,
}

impl fmt::Display for Cut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cut::NegInf => write!(f, "-inf"),
            Cut::Below(e) => write!(f, "(ge {e})"),
            Cut::Above(e) => write!(f, "(gt {e})"),
            Cut::PosInf => write!(f, "+inf"),
        }
    }
}

impl fmt::Debug for Cut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Cut {
    pub fn compare(&self, other: &Cut, owner: &OrderTerm) -> Ordering {
        use Cut::*;
        match (self, other) {
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (_, NegInf) | (PosInf, _) => Ordering::Greater,
            (Below(a), Below(b)) | (Above(a), Above(b)) => owner.compare_unchecked(a, b),
            (Below(a), Above(b)) => {
                if owner.compare_unchecked(a, b) == Ordering::Greater {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
            (Above(a), Below(b)) => {
                if owner.compare_unchecked(a, b) == Ordering::Less {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
        }
    }
}

/// One contiguous run of elements: `{e : lo <= Below(e) and Above(e) <= hi}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Piece {
    pub lo: Cut,
    pub hi: Cut,
}

impl fmt::Debug for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?} {:?})", self.lo, self.hi)
    }
}

impl Piece {
    pub fn contains(&self, e: &Element, owner: &OrderTerm) -> bool {
        self.lo.compare(&Cut::Below(e.clone()), owner) != Ordering::Greater
            && Cut::Above(e.clone()).compare(&self.hi, owner) != Ordering::Greater
    }

    pub fn is_empty(&self, owner: &OrderTerm) -> bool {
        if self.lo.compare(&self.hi, owner) != Ordering::Less {
            return true;
        }
        match (&self.lo, &self.hi) {
            (Cut::Below(_), _) => false,
            (Cut::Above(a), Cut::PosInf) => owner
                .max_element()
                .is_some_and(|m| owner.compare_unchecked(a, &m) != Ordering::Less),
            (Cut::Above(a), Cut::Below(b)) => !owner.exists_strictly_between(a, b),
            (Cut::Above(_), Cut::Above(_)) => false, // contains the upper element
            (Cut::NegInf, Cut::PosInf) => owner.is_empty_order(),
            (Cut::NegInf, Cut::Above(_)) => false,
            (Cut::NegInf, Cut::Below(b)) => owner
                .min_element()
                .is_some_and(|m| owner.compare_unchecked(&m, b) != Ordering::Less),
            _ => true,
        }
    }

    /// Least element of the piece, for nonempty pieces.
    pub fn min(&self, owner: &OrderTerm) -> Option<Element> {
        match &self.lo {
            Cut::Below(a) => Some(a.clone()),
            Cut::Above(a) => owner.successor_within(a),
            Cut::NegInf => owner.min_element(),
            Cut::PosInf => None,
        }
    }

    /// Greatest element of the piece, for nonempty pieces.
    pub fn max(&self, owner: &OrderTerm) -> Option<Element> {
        match &self.hi {
            Cut::Above(b) => Some(b.clone()),
            Cut::Below(b) => owner.predecessor_within(b),
            Cut::PosInf => owner.max_element(),
            Cut::NegInf => None,
        }
    }

    fn tighten(&self, owner: &OrderTerm) -> Piece {
        let lo = match self.min(owner) {
            Some(m) => Cut::Below(m),
            None => self.lo.clone(),
        };
        let hi = match self.max(owner) {
            Some(m) => Cut::Above(m),
            None => self.hi.clone(),
        };
        Piece { lo, hi }
    }

    /// Symbolic number of elements in the piece.
    pub fn cardinality(&self, owner: &OrderTerm) -> CardinalValue {
        if self.is_empty(owner) {
            return CardinalValue::Finite(0);
        }
        match owner {
            OrderTerm::Empty => CardinalValue::Finite(0),
            OrderTerm::Fin(n) => {
                let start = match &self.lo {
                    Cut::NegInf => 0,
                    Cut::Below(Element::FinIdx(i)) => *i,
                    Cut::Above(Element::FinIdx(i)) => i + 1,
                    _ => unreachable!(),
                };
                let end = match &self.hi {
                    Cut::PosInf => *n,
                    Cut::Below(Element::FinIdx(i)) => *i,
                    Cut::Above(Element::FinIdx(i)) => i + 1,
                    _ => unreachable!(),
                };
                CardinalValue::Finite(end.saturating_sub(start))
            }
            OrderTerm::Ord(o) => {
                let start = match &self.lo {
                    Cut::NegInf => super::ordinal::OrdinalCnf::zero(),
                    Cut::Below(Element::Ordinal(x)) => x.clone(),
                    Cut::Above(Element::Ordinal(x)) => x.succ(),
                    _ => unreachable!(),
                };
                let end = match &self.hi {
                    Cut::PosInf => o.clone(),
                    Cut::Below(Element::Ordinal(x)) => x.clone(),
                    Cut::Above(Element::Ordinal(x)) => x.succ(),
                    _ => unreachable!(),
                };
                match start.sub_from(&end) {
                    None => CardinalValue::Finite(0),
                    Some(d) => match d.as_nat() {
                        Some(n) => CardinalValue::Finite(n),
                        None => CardinalValue::Aleph0,
                    },
                }
            }
            OrderTerm::Rationals => {
                let single = match (self.min(owner), self.max(owner)) {
                    (Some(a), Some(b)) => owner.compare_unchecked(&a, &b) == Ordering::Equal,
                    _ => false,
                };
                if single {
                    CardinalValue::Finite(1)
                } else {
                    CardinalValue::Aleph0
                }
            }
            OrderTerm::NamedRegular(i) => {
                let start = match &self.lo {
                    Cut::NegInf => super::element::StratifiedOrdinal::zero(),
                    Cut::Below(Element::Stratified(s)) => s.clone(),
                    Cut::Above(Element::Stratified(s)) => s.succ(),
                    _ => unreachable!(),
                };
                let end = match &self.hi {
                    Cut::PosInf => return CardinalValue::Kappa(*i),
                    Cut::Below(Element::Stratified(s)) => s.clone(),
                    Cut::Above(Element::Stratified(s)) => s.succ(),
                    _ => unreachable!(),
                };
                stratified_span_card(&start, &end)
            }
            OrderTerm::Sum(parts) => {
                let (p1, l1) = match &self.lo {
                    Cut::NegInf => (0, Cut::NegInf),
                    Cut::Below(Element::InSum(p, x)) => (*p, Cut::Below((**x).clone())),
                    Cut::Above(Element::InSum(p, x)) => (*p, Cut::Above((**x).clone())),
                    _ => unreachable!(),
                };
                let (p2, h2) = match &self.hi {
                    Cut::PosInf => (parts.len() - 1, Cut::PosInf),
                    Cut::Below(Element::InSum(p, x)) => (*p, Cut::Below((**x).clone())),
                    Cut::Above(Element::InSum(p, x)) => (*p, Cut::Above((**x).clone())),
                    _ => unreachable!(),
                };
                if p1 == p2 {
                    return Piece { lo: l1, hi: h2 }.cardinality(&parts[p1]);
                }
                let mut total = Piece {
                    lo: l1,
                    hi: Cut::PosInf,
                }
                .cardinality(&parts[p1]);
                for part in &parts[p1 + 1..p2] {
                    total = total.add(part.cardinality());
                }
                total.add(
                    Piece {
                        lo: Cut::NegInf,
                        hi: h2,
                    }
                    .cardinality(&parts[p2]),
                )
            }
            OrderTerm::LexProd(block, index) => {
                let lo_parts = match &self.lo {
                    Cut::NegInf => None,
                    Cut::Below(Element::InLex(i, b)) => {
                        Some(((**i).clone(), Cut::Below((**b).clone())))
                    }
                    Cut::Above(Element::InLex(i, b)) => {
                        Some(((**i).clone(), Cut::Above((**b).clone())))
                    }
                    _ => unreachable!(),
                };
                let hi_parts = match &self.hi {
                    Cut::PosInf => None,
                    Cut::Below(Element::InLex(i, b)) => {
                        Some(((**i).clone(), Cut::Below((**b).clone())))
                    }
                    Cut::Above(Element::InLex(i, b)) => {
                        Some(((**i).clone(), Cut::Above((**b).clone())))
                    }
                    _ => unreachable!(),
                };
                if let (Some((i1, bl)), Some((i2, bh))) = (&lo_parts, &hi_parts) {
                    if index.compare_unchecked(i1, i2) == Ordering::Equal {
                        return Piece {
                            lo: bl.clone(),
                            hi: bh.clone(),
                        }
                        .cardinality(block);
                    }
                }
                let mut total = CardinalValue::Finite(0);
                let m_lo = match &lo_parts {
                    None => Cut::NegInf,
                    Some((i, bl)) => {
                        total = total.add(
                            Piece {
                                lo: bl.clone(),
                                hi: Cut::PosInf,
                            }
                            .cardinality(block),
                        );
                        Cut::Above(i.clone())
                    }
                };
                let m_hi = match &hi_parts {
                    None => Cut::PosInf,
                    Some((i, bh)) => {
                        total = total.add(
                            Piece {
                                lo: Cut::NegInf,
                                hi: bh.clone(),
                            }
                            .cardinality(block),
                        );
                        Cut::Below(i.clone())
                    }
                };
                total.add(
                    Piece { lo: m_lo, hi: m_hi }
                        .cardinality(index)
                        .mul(block.cardinality()),
                )
            }
        }
    }
}

fn stratified_span_card(
    start: &super::element::StratifiedOrdinal,
    end: &super::element::StratifiedOrdinal,
) -> CardinalValue {
    if start.cmp_strat(end) != Ordering::Less {
        return CardinalValue::Finite(0);
    }
    // highest stratum where the coefficients differ dominates the span
    let level = |s: &super::element::StratifiedOrdinal, j: u32| -> u64 {
        s.strata
            .iter()
            .find(|(k, _)| *k == j)
            .map_or(0, |(_, n)| *n)
    };
    let mut all: Vec<u32> = start
        .strata
        .iter()
        .chain(end.strata.iter())
        .map(|(j, _)| *j)
        .collect();
    all.sort_unstable();
    all.dedup();
    for j in all.into_iter().rev() {
        if level(start, j) != level(end, j) {
            return CardinalValue::Kappa(j);
        }
    }
    match start.tail.sub_from(&end.tail) {
        Some(d) => match d.as_nat() {
            Some(n) => CardinalValue::Finite(n),
            None => CardinalValue::Aleph0,
        },
        None => CardinalValue::Finite(0),
    }
}

/// A finite union of pieces over a fixed carrier, kept canonical: pieces
/// nonempty, sorted, pairwise non-mergeable, bounds tight.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntervalSet {
    owner: OrderTerm,
    pieces: Vec<Piece>,
}

impl fmt::Debug for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(set")?;
        for p in &self.pieces {
            write!(f, " {p:?}")?;
        }
        write!(f, ")")
    }
}

impl IntervalSet {
    pub fn empty(owner: OrderTerm) -> IntervalSet {
        IntervalSet {
            owner,
            pieces: Vec::new(),
        }
    }

    pub fn full(owner: OrderTerm) -> IntervalSet {
        Self::from_pieces(
            owner,
            vec![Piece {
                lo: Cut::NegInf,
                hi: Cut::PosInf,
            }],
        )
    }

    pub fn singleton(owner: OrderTerm, e: Element) -> IntervalSet {
        Self::from_pieces(
            owner,
            vec![Piece {
                lo: Cut::Below(e.clone()),
                hi: Cut::Above(e),
            }],
        )
    }

    pub fn from_pieces(owner: OrderTerm, pieces: Vec<Piece>) -> IntervalSet {
        let mut s = IntervalSet { owner, pieces };
        s.canonicalize();
        s
    }

    pub fn owner(&self) -> &OrderTerm {
        &self.owner
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn contains(&self, e: &Element) -> bool {
        self.pieces.iter().any(|p| p.contains(e, &self.owner))
    }

    fn canonicalize(&mut self) {
        let owner = self.owner.clone();
        self.pieces.retain(|p| !p.is_empty(&owner));
        for p in self.pieces.iter_mut() {
            *p = p.tighten(&owner);
        }
        self.pieces
            .sort_by(|a, b| a.lo.compare(&b.lo, &owner).then(a.hi.compare(&b.hi, &owner)));
        let mut merged: Vec<Piece> = Vec::with_capacity(self.pieces.len());
        for p in self.pieces.drain(..) {
            match merged.last_mut() {
                Some(prev) => {
                    let overlap = p.lo.compare(&prev.hi, &owner) != Ordering::Greater;
                    let gap_empty = Piece {
                        lo: prev.hi.clone(),
                        hi: p.lo.clone(),
                    }
                    .is_empty(&owner);
                    if overlap || gap_empty {
                        if prev.hi.compare(&p.hi, &owner) == Ordering::Less {
                            prev.hi = p.hi;
                        }
                    } else {
                        merged.push(p);
                    }
                }
                None => merged.push(p),
            }
        }
        self.pieces = merged;
    }

    fn require_same_owner(&self, other: &IntervalSet) -> Result<(), OrderError> {
        if self.owner == other.owner {
            Ok(())
        } else {
            Err(OrderError::OwnerMismatch(
                self.owner.to_string(),
                other.owner.to_string(),
            ))
        }
    }

    pub fn union(&self, other: &IntervalSet) -> IntervalSet {
        debug_assert_eq!(self.owner, other.owner);
        let mut pieces = self.pieces.clone();
        pieces.extend(other.pieces.iter().cloned());
        Self::from_pieces(self.owner.clone(), pieces)
    }

    pub fn intersection(&self, other: &IntervalSet) -> IntervalSet {
        debug_assert_eq!(self.owner, other.owner);
        let mut pieces = Vec::new();
        for a in &self.pieces {
            for b in &other.pieces {
                let lo = if a.lo.compare(&b.lo, &self.owner) == Ordering::Less {
                    b.lo.clone()
                } else {
                    a.lo.clone()
                };
                let hi = if a.hi.compare(&b.hi, &self.owner) == Ordering::Less {
                    a.hi.clone()
                } else {
                    b.hi.clone()
                };
                if lo.compare(&hi, &self.owner) == Ordering::Less {
                    pieces.push(Piece { lo, hi });
                }
            }
        }
        Self::from_pieces(self.owner.clone(), pieces)
    }

    /// Complement within the full carrier.
    pub fn complement(&self) -> IntervalSet {
        let mut pieces = Vec::new();
        let mut prev = Cut::NegInf;
        for p in &self.pieces {
            pieces.push(Piece {
                lo: prev,
                hi: p.lo.clone(),
            });
            prev = p.hi.clone();
        }
        pieces.push(Piece {
            lo: prev,
            hi: Cut::PosInf,
        });
        Self::from_pieces(self.owner.clone(), pieces)
    }

    pub fn difference(&self, other: &IntervalSet) -> IntervalSet {
        self.intersection(&other.complement())
    }

    pub fn is_subset_of(&self, other: &IntervalSet) -> bool {
        self.intersection(other) == *self
    }

    /// Cofinality of the set under the order induced from its owner,
    /// determined by the top piece's upper boundary.
    pub fn cofinality(&self) -> CofinalityTag {
        let Some(top) = self.pieces.last() else {
            return CofinalityTag::Zero;
        };
        match &top.hi {
            Cut::Above(_) => CofinalityTag::One,
            Cut::Below(b) => self.owner.cof_below(b),
            // canonical PosInf implies the carrier has no maximum
            Cut::PosInf => self.owner.cofinality(),
            Cut::NegInf => CofinalityTag::Zero,
        }
    }

    /// True iff every element of `other` is bounded by some element of
    /// `self`; requires `self` to be a subset of `other`.
    pub fn is_cofinal_in(&self, other: &IntervalSet) -> Result<bool, OrderError> {
        self.require_same_owner(other)?;
        if !self.is_subset_of(other) {
            return Err(OrderError::NotSubset);
        }
        if other.is_empty() {
            return Ok(true);
        }
        let Some(top) = self.pieces.last() else {
            return Ok(false);
        };
        let other_top = other.pieces.last().unwrap();
        Ok(top.hi.compare(&other_top.hi, &self.owner) == Ordering::Equal)
    }

    pub fn cardinality(&self) -> CardinalValue {
        self.pieces
            .iter()
            .map(|p| p.cardinality(&self.owner))
            .fold(CardinalValue::Finite(0), CardinalValue::add)
    }

    /// Ascending sample of elements of the set, at most `budget` many.
    pub fn sample(&self, budget: usize) -> Vec<Element> {
        let mut out = Vec::new();
        if self.pieces.is_empty() || budget == 0 {
            return out;
        }
        let per = budget.div_ceil(self.pieces.len()).max(1);
        for p in &self.pieces {
            let seed = p.min(&self.owner).or_else(|| match (&p.lo, &p.hi) {
                (Cut::Above(a), Cut::Below(b)) => self.owner.pick_between(a, b),
                (Cut::Above(a), Cut::Above(b)) => {
                    self.owner.pick_between(a, b).or(Some(b.clone()))
                }
                (Cut::Above(a), Cut::PosInf) => self.owner.pick_above(a),
                (Cut::NegInf, Cut::Below(b)) => self.owner.pick_below(b),
                (Cut::NegInf, Cut::Above(b)) => self.owner.pick_below(b).or(Some(b.clone())),
                (Cut::NegInf, Cut::PosInf) => self.owner.sample_any(),
                _ => None,
            });
            let Some(seed) = seed else { continue };
            let mut run = vec![seed];
            while run.len() < per {
                let last = run.last().unwrap();
                let next = match &p.hi {
                    Cut::PosInf => self.owner.pick_above(last),
                    Cut::Below(b) => self.owner.pick_between(last, b),
                    Cut::Above(b) => {
                        if self.owner.compare_unchecked(last, b) == Ordering::Less {
                            self.owner.pick_between(last, b).or(Some(b.clone()))
                        } else {
                            None
                        }
                    }
                    Cut::NegInf => None,
                };
                match next {
                    Some(n) if p.contains(&n, &self.owner) => run.push(n),
                    _ => break,
                }
            }
            out.extend(run);
        }
        out.truncate(budget);
        out
    }
}
