//! Ordinals below epsilon_0 in Cantor normal form.
//!
//! An ordinal is a descending list of `(exponent, coefficient)` terms with
//! the exponents themselves in normal form. The representation is canonical:
//! two ordinals are equal iff their term lists are identical, so the derived
//! lexicographic ordering on the term list agrees with the ordinal order.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// An ordinal `< epsilon_0` as `w^e1*c1 + ... + w^ek*ck` with `e1 > ... > ek`
/// and all `ci >= 1`. The empty term list is zero.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct OrdinalCnf {
    terms: Vec<(OrdinalCnf, u64)>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrdinalError {
    #[error("ordinal syntax error at byte {at}: expected {expected}")]
    Syntax { at: usize, expected: &'static str },
    #[error("coefficient must be >= 1")]
    ZeroCoefficient,
    #[error("exponents not strictly descending")]
    NotDescending,
}

impl OrdinalCnf {
    pub fn zero() -> Self {
        OrdinalCnf { terms: Vec::new() }
    }

    pub fn from_nat(n: u64) -> Self {
        if n == 0 {
            Self::zero()
        } else {
            OrdinalCnf {
                terms: vec![(Self::zero(), n)],
            }
        }
    }

    pub fn omega() -> Self {
        Self::w_pow(Self::from_nat(1))
    }

    /// `w^e` as a single-term normal form.
    pub fn w_pow(exponent: OrdinalCnf) -> Self {
        OrdinalCnf {
            terms: vec![(exponent, 1)],
        }
    }

    /// Builds from raw terms, validating canonicity.
    pub fn from_terms(terms: Vec<(OrdinalCnf, u64)>) -> Result<Self, OrdinalError> {
        for pair in terms.windows(2) {
            if pair[0].0 <= pair[1].0 {
                return Err(OrdinalError::NotDescending);
            }
        }
        if terms.iter().any(|(_, c)| *c == 0) {
            return Err(OrdinalError::ZeroCoefficient);
        }
        Ok(OrdinalCnf { terms })
    }

    pub fn terms(&self) -> &[(OrdinalCnf, u64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_nat(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [(e, c)] if e.is_zero() => Some(*c),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.as_nat().is_some()
    }

    /// A successor ordinal has a finite last term.
    pub fn is_successor(&self) -> bool {
        matches!(self.terms.last(), Some((e, _)) if e.is_zero())
    }

    pub fn is_limit(&self) -> bool {
        !self.is_zero() && !self.is_successor()
    }

    /// Ordinal addition. Terms of `self` below the leading exponent of `rhs`
    /// are absorbed.
    pub fn add(&self, rhs: &OrdinalCnf) -> OrdinalCnf {
        let Some((lead, lead_c)) = rhs.terms.first() else {
            return self.clone();
        };
        let mut terms: Vec<(OrdinalCnf, u64)> = self
            .terms
            .iter()
            .filter(|(e, _)| e > lead)
            .cloned()
            .collect();
        let merged = self
            .terms
            .iter()
            .find(|(e, _)| e == lead)
            .map_or(*lead_c, |(_, c)| c + lead_c);
        terms.push((lead.clone(), merged));
        terms.extend(rhs.terms.iter().skip(1).cloned());
        OrdinalCnf { terms }
    }

    pub fn succ(&self) -> OrdinalCnf {
        self.add(&Self::from_nat(1))
    }

    /// Predecessor, defined only for successor ordinals.
    pub fn pred(&self) -> Option<OrdinalCnf> {
        let (e, c) = self.terms.last()?;
        if !e.is_zero() {
            return None;
        }
        let mut terms = self.terms.clone();
        if *c == 1 {
            terms.pop();
        } else {
            terms.last_mut().unwrap().1 -= 1;
        }
        Some(OrdinalCnf { terms })
    }

    /// Left subtraction: the unique `d` with `self + d = rhs`, for `self <= rhs`.
    pub fn sub_from(&self, rhs: &OrdinalCnf) -> Option<OrdinalCnf> {
        if self > rhs {
            return None;
        }
        if self.is_zero() {
            return Some(rhs.clone());
        }
        let (se, sc) = &self.terms[0];
        let (re, rc) = &rhs.terms[0];
        if re > se {
            return Some(rhs.clone());
        }
        // re == se since self <= rhs
        if rc > sc {
            let mut terms = vec![(re.clone(), rc - sc)];
            terms.extend(rhs.terms[1..].iter().cloned());
            return Some(OrdinalCnf { terms });
        }
        // equal leading terms: recurse on tails
        let self_tail = OrdinalCnf {
            terms: self.terms[1..].to_vec(),
        };
        let rhs_tail = OrdinalCnf {
            terms: rhs.terms[1..].to_vec(),
        };
        self_tail.sub_from(&rhs_tail)
    }

    /// A canonical strictly ascending sequence cofinal in `self`, for limit
    /// ordinals. Every ordinal below epsilon_0 has countable cofinality, so a
    /// length-`n` prefix of such a sequence always exists.
    pub fn cofinal_sequence(&self, n: usize) -> Option<Vec<OrdinalCnf>> {
        if !self.is_limit() {
            return None;
        }
        let (last_e, last_c) = self.terms.last().unwrap().clone();
        let mut prefix = OrdinalCnf {
            terms: self.terms[..self.terms.len() - 1].to_vec(),
        };
        if last_c > 1 {
            prefix = prefix.add(&OrdinalCnf {
                terms: vec![(last_e.clone(), last_c - 1)],
            });
        }
        // approach w^last_e from below
        let steps: Vec<OrdinalCnf> = if last_e.is_successor() {
            let down = last_e.pred().unwrap();
            (1..=n as u64)
                .map(|k| OrdinalCnf {
                    terms: vec![(down.clone(), k)],
                })
                .collect()
        } else {
            // last_e is a limit: w^(e_k) for e_k cofinal in last_e
            last_e
                .cofinal_sequence(n)?
                .into_iter()
                .map(Self::w_pow)
                .collect()
        };
        Some(steps.into_iter().map(|s| prefix.add(&s)).collect())
    }
}

impl OrdinalCnf {
    /// A "bare tower" prints in exponent position without parentheses:
    /// a natural number or a coefficient-free power of w.
    fn is_bare_tower(&self) -> bool {
        match self.terms.as_slice() {
            [] => true,
            [(e, 1)] => e.is_bare_tower(),
            [(e, _)] => e.is_zero(),
            _ => false,
        }
    }
}

impl fmt::Display for OrdinalCnf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, "+")?;
            }
            first = false;
            if e.is_zero() {
                write!(f, "{c}")?;
            } else {
                if e.as_nat() == Some(1) {
                    write!(f, "w")?;
                } else if e.is_bare_tower() {
                    write!(f, "w^{e}")?;
                } else {
                    write!(f, "w^({e})")?;
                }
                if *c > 1 {
                    write!(f, "*{c}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for OrdinalCnf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ord({self})")
    }
}

impl FromStr for OrdinalCnf {
    type Err = OrdinalError;

    fn from_str(s: &str) -> Result<Self, OrdinalError> {
        let bytes = s.as_bytes();
        let mut pos = 0;
        let out = parse_cnf(bytes, &mut pos)?;
        if pos != bytes.len() {
            return Err(OrdinalError::Syntax {
                at: pos,
                expected: "end of ordinal",
            });
        }
        Ok(out)
    }
}

fn parse_cnf(b: &[u8], pos: &mut usize) -> Result<OrdinalCnf, OrdinalError> {
    let mut sum = parse_term(b, pos)?;
    while *pos < b.len() && b[*pos] == b'+' {
        *pos += 1;
        let t = parse_term(b, pos)?;
        sum = sum.add(&t);
    }
    Ok(sum)
}

fn parse_term(b: &[u8], pos: &mut usize) -> Result<OrdinalCnf, OrdinalError> {
    if *pos < b.len() && b[*pos] == b'w' {
        *pos += 1;
        let exponent = if *pos < b.len() && b[*pos] == b'^' {
            *pos += 1;
            parse_exponent(b, pos)?
        } else {
            OrdinalCnf::from_nat(1)
        };
        let coeff = if *pos < b.len() && b[*pos] == b'*' {
            *pos += 1;
            parse_nat(b, pos)?
        } else {
            1
        };
        if coeff == 0 {
            return Err(OrdinalError::ZeroCoefficient);
        }
        Ok(OrdinalCnf {
            terms: vec![(exponent, coeff)],
        })
    } else {
        Ok(OrdinalCnf::from_nat(parse_nat(b, pos)?))
    }
}

/// Exponents are naturals, bare `w`-towers (so `*` after `w^w` binds to the
/// outer term), or a parenthesized ordinal.
fn parse_exponent(b: &[u8], pos: &mut usize) -> Result<OrdinalCnf, OrdinalError> {
    if *pos < b.len() && b[*pos] == b'(' {
        *pos += 1;
        let e = parse_cnf(b, pos)?;
        if *pos >= b.len() || b[*pos] != b')' {
            return Err(OrdinalError::Syntax {
                at: *pos,
                expected: "')'",
            });
        }
        *pos += 1;
        Ok(e)
    } else if *pos < b.len() && b[*pos] == b'w' {
        *pos += 1;
        let inner = if *pos < b.len() && b[*pos] == b'^' {
            *pos += 1;
            parse_exponent(b, pos)?
        } else {
            OrdinalCnf::from_nat(1)
        };
        Ok(OrdinalCnf::w_pow(inner))
    } else {
        Ok(OrdinalCnf::from_nat(parse_nat(b, pos)?))
    }
}

fn parse_nat(b: &[u8], pos: &mut usize) -> Result<u64, OrdinalError> {
    let start = *pos;
    while *pos < b.len() && b[*pos].is_ascii_digit() {
        *pos += 1;
    }
    if start == *pos {
        return Err(OrdinalError::Syntax {
            at: *pos,
            expected: "digit or 'w'",
        });
    }
    std::str::from_utf8(&b[start..*pos])
        .unwrap()
        .parse()
        .map_err(|_| OrdinalError::Syntax {
            at: start,
            expected: "natural number in range",
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(s: &str) -> OrdinalCnf {
        s.parse().unwrap()
    }

    #[test]
    fn parse_display_roundtrip() {
        for s in ["0", "5", "w", "w*3", "w^2", "w^w*2+3", "w^(w+1)*2+w*3+5"] {
            assert_eq!(o(s).to_string(), s);
        }
    }

    #[test]
    fn comparison_basics() {
        assert!(o("w^2*2") < o("w^3"));
        assert!(o("w*3+2") == o("w*3+2"));
        assert!(o("w") > o("1000"));
        assert!(o("w^w") > o("w^5*9+w"));
        assert!(o("w+1") > o("w"));
    }

    #[test]
    fn addition_absorbs() {
        assert_eq!(o("3").add(&o("w")), o("w"));
        assert_eq!(o("w").add(&o("3")), o("w+3"));
        assert_eq!(o("w*2+5").add(&o("w+1")), o("w*3+1"));
        assert_eq!(o("w^2").add(&o("w^2")), o("w^2*2"));
    }

    #[test]
    fn pred_and_succ() {
        assert_eq!(o("w+3").pred(), Some(o("w+2")));
        assert_eq!(o("w+1").pred(), Some(o("w")));
        assert_eq!(o("w").pred(), None);
        assert_eq!(o("0").pred(), None);
        assert_eq!(o("w").succ(), o("w+1"));
    }

    #[test]
    fn subtraction() {
        assert_eq!(o("3").sub_from(&o("w^2+5")), Some(o("w^2+5")));
        assert_eq!(o("w").sub_from(&o("w*2")), Some(o("w")));
        assert_eq!(o("w+3").sub_from(&o("w+10")), Some(o("7")));
        assert_eq!(o("w^2").sub_from(&o("w")), None);
    }

    #[test]
    fn cofinal_sequences_ascend_below() {
        for s in ["w", "w*2", "w^2", "w^w", "w^w*2+w^3"] {
            let lim = o(s);
            let seq = lim.cofinal_sequence(6).unwrap();
            for w in seq.windows(2) {
                assert!(w[0] < w[1], "not ascending in {s}");
            }
            for x in &seq {
                assert!(*x < lim, "not below {s}");
            }
        }
        assert_eq!(o("w").cofinal_sequence(3).unwrap(), vec![o("1"), o("2"), o("3")]);
    }
}
