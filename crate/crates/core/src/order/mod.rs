//! Symbolic algebra of linear orders: Cantor-normal-form ordinals, order
//! terms, their elements, interval sets, and exact cofinality computation.

pub mod element;
pub mod grammar;
pub mod interval;
pub mod ordinal;
pub mod term;

pub use element::{Element, StratifiedOrdinal};
pub use grammar::{parse_element, parse_interval_set, parse_order_term, print_interval_set};
pub use interval::{Cut, IntervalSet, Piece};
pub use ordinal::OrdinalCnf;
pub use term::{CardinalValue, CofinalityTag, OrderError, OrderTerm};

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> OrderTerm {
        parse_order_term(s).unwrap()
    }

    #[test]
    fn normalization() {
        assert_eq!(t("(sum empty fin 2 (sum fin 1 fin 1))"), t("(sum fin 2 fin 1 fin 1)"));
        assert_eq!(t("(lexprod Q fin 1)"), OrderTerm::Rationals);
        assert_eq!(t("(sum empty empty)"), OrderTerm::Empty);
        assert_eq!(t("fin 0"), OrderTerm::Empty);
    }

    #[test]
    fn compare_examples() {
        // reflexivity inside Ord(w^2)
        let w2 = t("ord \"w^2\"");
        let a = Element::Ordinal("w*3+2".parse().unwrap());
        assert_eq!(w2.compare(&a, &a).unwrap(), std::cmp::Ordering::Equal);

        // index coordinate dominates in a lexicographic product
        let qxk = t("(lexprod Q k1)");
        let lo = Element::in_lex(
            Element::Stratified(StratifiedOrdinal::zero()),
            Element::rat_int(5),
        );
        let hi = Element::in_lex(
            Element::Stratified(StratifiedOrdinal::from_cnf(OrdinalCnf::omega())),
            Element::rat_int(-5),
        );
        assert_eq!(qxk.compare(&lo, &hi).unwrap(), std::cmp::Ordering::Less);

        // CNF comparison
        let ww = t("ord \"w^w\"");
        let x = Element::Ordinal("w^2*2".parse().unwrap());
        let y = Element::Ordinal("w^3".parse().unwrap());
        assert_eq!(ww.compare(&x, &y).unwrap(), std::cmp::Ordering::Less);
    }

    #[test]
    fn invalid_element_rejected() {
        let f3 = t("fin 3");
        let bad = Element::FinIdx(3);
        assert!(matches!(
            f3.compare(&bad, &bad),
            Err(OrderError::InvalidElement { .. })
        ));
    }

    #[test]
    fn cofinality_examples() {
        assert_eq!(t("fin 5").cofinality(), CofinalityTag::One);
        assert_eq!(t("ord \"w^w\"").cofinality(), CofinalityTag::Omega);
        assert_eq!(t("(lexprod Q k1)").cofinality(), CofinalityTag::Kappa(1));
        assert_eq!(t("empty").cofinality(), CofinalityTag::Zero);
        assert_eq!(t("Q").cofinality(), CofinalityTag::Omega);
        assert_eq!(t("k2").cofinality(), CofinalityTag::Kappa(2));
        assert_eq!(t("(sum k1 fin 2)").cofinality(), CofinalityTag::One);
        assert_eq!(t("(sum fin 2 ord \"w\")").cofinality(), CofinalityTag::Omega);
        // lexprod: index has a last element -> block cofinality decides
        assert_eq!(t("(lexprod ord \"w\" fin 3)").cofinality(), CofinalityTag::Omega);
        assert_eq!(t("(lexprod ord \"w\" k1)").cofinality(), CofinalityTag::Kappa(1));
    }

    #[test]
    fn element_iter_examples() {
        assert_eq!(t("fin 3").element_iter(10).len(), 3);
        let w = t("ord \"w\"");
        assert_eq!(
            w.element_iter(4),
            (0..4).map(Element::nat).collect::<Vec<_>>()
        );
        let qxk = t("(lexprod Q k1)");
        let sample = qxk.element_iter(4);
        assert_eq!(sample.len(), 4);
        for pair in sample.windows(2) {
            assert_eq!(
                qxk.compare(&pair[0], &pair[1]).unwrap(),
                std::cmp::Ordering::Less
            );
            // indices strictly ascend
            let (Element::InLex(i1, _), Element::InLex(i2, _)) = (&pair[0], &pair[1]) else {
                panic!("lex elements expected");
            };
            assert_eq!(
                t("k1").compare(i1, i2).unwrap(),
                std::cmp::Ordering::Less
            );
        }
    }

    #[test]
    fn interval_set_basics() {
        let w2 = t("ord \"w*2\"");
        let omega = Element::Ordinal(OrdinalCnf::omega());
        // [0, w) inside Ord(w*2)
        let s1 = IntervalSet::from_pieces(
            w2.clone(),
            vec![Piece {
                lo: Cut::Below(Element::nat(0)),
                hi: Cut::Below(omega.clone()),
            }],
        );
        let s2 = IntervalSet::from_pieces(
            w2.clone(),
            vec![Piece {
                lo: Cut::Below(Element::nat(0)),
                hi: Cut::PosInf,
            }],
        );
        assert_eq!(s1.cofinality(), CofinalityTag::Omega);
        assert!(!s1.is_cofinal_in(&s2).unwrap());
        assert!(s1.is_cofinal_in(&s1).unwrap());
        assert!(s1.contains(&Element::nat(3)));
        assert!(!s1.contains(&omega));

        let empty = IntervalSet::empty(w2.clone());
        assert_eq!(empty.cofinality(), CofinalityTag::Zero);
        assert!(matches!(
            s2.is_cofinal_in(&s1),
            Err(OrderError::NotSubset)
        ));
    }

    #[test]
    fn interval_canonical_successor_merge() {
        let w = t("ord \"w\"");
        // {0..4} and {5..9} merge into one piece
        let a = IntervalSet::from_pieces(
            w.clone(),
            vec![
                Piece {
                    lo: Cut::Below(Element::nat(0)),
                    hi: Cut::Below(Element::nat(5)),
                },
                Piece {
                    lo: Cut::Below(Element::nat(5)),
                    hi: Cut::Above(Element::nat(9)),
                },
            ],
        );
        assert_eq!(a.pieces().len(), 1);
        // tightened to Above(9)
        assert_eq!(a.pieces()[0].hi, Cut::Above(Element::nat(9)));
        assert_eq!(a.cardinality(), CardinalValue::Finite(10));
    }

    #[test]
    fn interval_boolean_ops() {
        let q = t("Q");
        let zero = Element::rat_int(0);
        let one = Element::rat_int(1);
        // (0,1) over the rationals
        let open = IntervalSet::from_pieces(
            q.clone(),
            vec![Piece {
                lo: Cut::Above(zero.clone()),
                hi: Cut::Below(one.clone()),
            }],
        );
        assert!(open.contains(&Element::rat(1, 2)));
        assert!(!open.contains(&zero));
        assert!(!open.contains(&one));
        let comp = open.complement();
        assert!(comp.contains(&zero));
        assert!(comp.contains(&one));
        assert!(!comp.contains(&Element::rat(1, 2)));
        assert_eq!(comp.complement(), open);
        assert_eq!(open.union(&comp), IntervalSet::full(q.clone()));
        assert!(open.intersection(&comp).is_empty());
        assert_eq!(open.cardinality(), CardinalValue::Aleph0);
    }

    #[test]
    fn cofinality_of_tail_in_lexprod() {
        let qxk = t("(lexprod Q k1)");
        let a = Element::in_lex(
            Element::Stratified(StratifiedOrdinal::from_cnf(OrdinalCnf::omega())),
            Element::rat_int(0),
        );
        let tail = IntervalSet::from_pieces(
            qxk.clone(),
            vec![Piece {
                lo: Cut::Below(a),
                hi: Cut::PosInf,
            }],
        );
        assert_eq!(tail.cofinality(), CofinalityTag::Kappa(1));
    }

    #[test]
    fn grammar_roundtrip() {
        for s in [
            "empty",
            "fin 5",
            "ord \"w^w*2+3\"",
            "k1",
            "Q",
            "(sum fin 2 Q)",
            "(lexprod Q k1)",
            "(sum (lexprod Q k1) ord \"w\")",
        ] {
            let term = t(s);
            assert_eq!(parse_order_term(&term.to_string()).unwrap(), term);
        }
    }

    #[test]
    fn cardinality_kappa_spans() {
        let k2 = t("k2");
        let lo = Element::Stratified(StratifiedOrdinal {
            strata: vec![(1, 1)],
            tail: OrdinalCnf::zero(),
        });
        let hi = Element::Stratified(StratifiedOrdinal {
            strata: vec![(1, 3)],
            tail: OrdinalCnf::zero(),
        });
        let span = IntervalSet::from_pieces(
            k2.clone(),
            vec![Piece {
                lo: Cut::Below(lo.clone()),
                hi: Cut::Below(hi),
            }],
        );
        assert_eq!(span.cardinality(), CardinalValue::Kappa(1));
        let tail = IntervalSet::from_pieces(
            k2,
            vec![Piece {
                lo: Cut::Below(lo),
                hi: Cut::PosInf,
            }],
        );
        assert_eq!(tail.cardinality(), CardinalValue::Kappa(2));
    }
}
