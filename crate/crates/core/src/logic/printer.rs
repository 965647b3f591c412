//! Pretty-printer for the s-expression formula grammar. `parse . print` is
//! the identity on ASTs.

use std::fmt;

use super::formula::{Formula, Node, Schema};

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.node() {
            Node::Atom { rel, args } => {
                write!(f, "({rel}")?;
                for a in args {
                    write!(f, " {a}")?;
                }
                write!(f, ")")
            }
            Node::Eq(a, b) => write!(f, "(= {a} {b})"),
            Node::Not(g) => write!(f, "(not {g})"),
            Node::And(items, schema) => write_junction(f, "and", "andw", items, schema),
            Node::Or(items, schema) => write_junction(f, "or", "orw", items, schema),
            Node::Exists(vs, g) => {
                write!(f, "(exists ")?;
                write_vars(f, vs)?;
                write!(f, " {g})")
            }
            Node::Forall(vs, g) => {
                write!(f, "(forall ")?;
                write_vars(f, vs)?;
                write!(f, " {g})")
            }
            Node::QCof { tags, xs, ys, body } => {
                write!(f, "(qcof (")?;
                for (i, t) in tags.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{t}")?;
                }
                write!(f, ") ")?;
                write_vars(f, xs)?;
                write!(f, " ")?;
                write_vars(f, ys)?;
                write!(f, " {body})")
            }
            Node::QCard { card, xs, body } => {
                write!(f, "(qcard {card} ")?;
                write_vars(f, xs)?;
                write!(f, " {body})")
            }
            Node::QEc { card, xs, ys, body } => {
                write!(f, "(qec {card} ")?;
                write_vars(f, xs)?;
                write!(f, " ")?;
                write_vars(f, ys)?;
                write!(f, " {body})")
            }
        }
    }
}

fn write_vars(f: &mut fmt::Formatter<'_>, vs: &[String]) -> fmt::Result {
    write!(f, "(")?;
    for (i, v) in vs.iter().enumerate() {
        if i > 0 {
            write!(f, " ")?;
        }
        write!(f, "{v}")?;
    }
    write!(f, ")")
}

fn write_junction(
    f: &mut fmt::Formatter<'_>,
    plain: &str,
    schematic: &str,
    items: &[Formula],
    schema: &Option<Schema>,
) -> fmt::Result {
    match schema {
        None => {
            write!(f, "({plain}")?;
            for item in items {
                write!(f, " {item}")?;
            }
            write!(f, ")")
        }
        Some(s) => {
            write!(f, "({schematic} ({} {}) {}", s.index, s.bound, s.template)?;
            for item in items {
                write!(f, " {item}")?;
            }
            write!(f, ")")
        }
    }
}
