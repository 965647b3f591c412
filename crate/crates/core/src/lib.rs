//! Toolkit for logics with cofinality quantifiers: symbolic linear orders
//! with exact cofinality computation, a formula AST with generalized
//! quantifiers, evaluation over finite and order structures, the positive/
//! deliberate tagging transform, abstract Skolemization to universal
//! theories, Ehrenfeucht-Fraisse games, and a property harness for the AEC
//! axioms.

pub mod order;
pub mod sexpr;
