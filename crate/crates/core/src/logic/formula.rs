//! Formula AST for first-order logic with bounded-infinitary junctions and
//! the generalized quantifiers QCof, QCard, QEc.
//!
//! Infinitary conjunctions and disjunctions carry explicit items plus an
//! optional schematic generator (index variable, bound, template), so
//! desk-scale theories stay finite while formulas with infinitely many free
//! variables remain expressible. Every node caches its free-variable set;
//! constructors keep the cache consistent.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::order::CofinalityTag;

/// Cardinality thresholds for QCard/QEc and schema bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CardinalToken {
    Finite(u64),
    Aleph0,
    Kappa(u32),
}

impl fmt::Display for CardinalToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CardinalToken::Finite(n) => write!(f, "fin{n}"),
            CardinalToken::Aleph0 => write!(f, "aleph0"),
            CardinalToken::Kappa(i) => write!(f, "k{i}"),
        }
    }
}

/// Index expression of a schematic variable: a concrete position, a schema
/// index, or a schema index shifted by a constant.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ix {
    Nat(u64),
    Sym(String),
    SymPlus(String, u64),
}

impl fmt::Display for Ix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ix::Nat(n) => write!(f, "{n}"),
            Ix::Sym(s) => write!(f, "{{{s}}}"),
            Ix::SymPlus(s, k) => write!(f, "{{{s}+{k}}}"),
        }
    }
}

/// A plain or indexed variable. `x@3` is the third member of the family `x`;
/// `x@{i}` ranges over a schema index.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarName {
    Named(String),
    Indexed(String, Ix),
}

impl VarName {
    pub fn named(s: &str) -> VarName {
        VarName::Named(s.to_string())
    }
}

impl fmt::Display for VarName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarName::Named(s) => write!(f, "{s}"),
            VarName::Indexed(base, ix) => write!(f, "{base}@{ix}"),
        }
    }
}

/// Function symbol reference; indexed names are members of Skolem families.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FuncName {
    Named(String),
    Indexed(String, Ix),
}

impl fmt::Display for FuncName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FuncName::Named(s) => write!(f, "{s}"),
            FuncName::Indexed(base, ix) => write!(f, "{base}@{ix}"),
        }
    }
}

impl FuncName {
    pub fn base(&self) -> &str {
        match self {
            FuncName::Named(s) | FuncName::Indexed(s, _) => s,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Var(VarName),
    App(FuncName, Vec<Term>),
}

impl Term {
    pub fn var(s: &str) -> Term {
        Term::Var(VarName::named(s))
    }

    pub fn constant(s: &str) -> Term {
        Term::App(FuncName::Named(s.to_string()), Vec::new())
    }

    fn collect_vars(&self, out: &mut BTreeSet<VarName>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::App(_, args) => args.iter().for_each(|t| t.collect_vars(out)),
        }
    }

    pub fn vars(&self) -> BTreeSet<VarName> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => write!(f, "{v}"),
            Term::App(name, args) if args.is_empty() => write!(f, "{name}"),
            Term::App(name, args) => {
                write!(f, "({name}")?;
                for a in args {
                    write!(f, " {a}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Bound of a schematic junction: a cardinal token or "below another schema
/// index" (for triangular families like pairwise distinctness).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SchemaBound {
    Card(CardinalToken),
    BelowIndex(String),
}

impl fmt::Display for SchemaBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchemaBound::Card(c) => write!(f, "{c}"),
            SchemaBound::BelowIndex(s) => write!(f, "(below {s})"),
        }
    }
}

/// Schematic generator of an infinitary junction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Schema {
    pub index: String,
    pub bound: SchemaBound,
    pub template: Box<Formula>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Node {
    Atom { rel: String, args: Vec<Term> },
    Eq(Term, Term),
    Not(Box<Formula>),
    And(Vec<Formula>, Option<Schema>),
    Or(Vec<Formula>, Option<Schema>),
    Exists(Vec<String>, Box<Formula>),
    Forall(Vec<String>, Box<Formula>),
    QCof {
        tags: BTreeSet<CofinalityTag>,
        xs: Vec<String>,
        ys: Vec<String>,
        body: Box<Formula>,
    },
    QCard {
        card: CardinalToken,
        xs: Vec<String>,
        body: Box<Formula>,
    },
    QEc {
        card: CardinalToken,
        xs: Vec<String>,
        ys: Vec<String>,
        body: Box<Formula>,
    },
}

/// A formula with its cached free-variable set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Formula {
    node: Node,
    free: BTreeSet<VarName>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LogicError {
    #[error("syntax error at byte {at}: expected {expected}")]
    Syntax { at: usize, expected: String },
    #[error("arity error: {symbol} expects {expected} arguments, got {got}")]
    Arity {
        symbol: String,
        expected: usize,
        got: usize,
    },
    #[error("unknown symbol {0}")]
    UnknownSymbol(String),
    #[error("quantifier variable lists must have equal finite length: {0} vs {1}")]
    QuantifierArity(usize, usize),
    #[error("infinite quantifier blocks are not formulas of the finitary modes")]
    InfiniteQuantifierBlock,
    #[error(
        "free-variable policy: an infinitary junction schematizes unboundedly many free \
         variables of family '{family}', which standard mode forbids"
    )]
    FreeVarPolicy { family: String },
    #[error("QCof cofinality set may contain only w and k<i> tags")]
    BadCofSet,
    #[error("sentence expected, but these variables are free: {0}")]
    NotASentence(String),
    #[error("duplicate bound variable {0} in one block")]
    DuplicateBinding(String),
}

fn remove_named(set: &mut BTreeSet<VarName>, names: &[String]) {
    for n in names {
        set.remove(&VarName::Named(n.clone()));
    }
}

impl Formula {
    pub fn node(&self) -> &Node {
        &self.node
    }

    /// The cached free-variable set. Indexed entries with a symbolic index
    /// stand for the whole family.
    pub fn free_vars(&self) -> &BTreeSet<VarName> {
        &self.free
    }

    /// Recomputes the free-variable set from scratch (for cache-consistency
    /// checks).
    pub fn free_vars_recomputed(&self) -> BTreeSet<VarName> {
        Self::compute_free(&self.node)
    }

    fn compute_free(node: &Node) -> BTreeSet<VarName> {
        match node {
            Node::Atom { args, .. } => {
                let mut s = BTreeSet::new();
                args.iter().for_each(|t| t.collect_vars(&mut s));
                s
            }
            Node::Eq(a, b) => {
                let mut s = a.vars();
                b.collect_vars(&mut s);
                s
            }
            Node::Not(f) => f.free.clone(),
            Node::And(items, schema) | Node::Or(items, schema) => {
                let mut s: BTreeSet<VarName> =
                    items.iter().flat_map(|f| f.free.iter().cloned()).collect();
                if let Some(sch) = schema {
                    s.extend(sch.template.free.iter().cloned());
                }
                s
            }
            Node::Exists(vs, f) | Node::Forall(vs, f) => {
                let mut s = f.free.clone();
                remove_named(&mut s, vs);
                s
            }
            Node::QCof { xs, ys, body, .. } | Node::QEc { xs, ys, body, .. } => {
                let mut s = body.free.clone();
                remove_named(&mut s, xs);
                remove_named(&mut s, ys);
                s
            }
            Node::QCard { xs, body, .. } => {
                let mut s = body.free.clone();
                remove_named(&mut s, xs);
                s
            }
        }
    }

    fn build(node: Node) -> Formula {
        let free = Self::compute_free(&node);
        Formula { node, free }
    }

    pub fn atom(rel: &str, args: Vec<Term>) -> Formula {
        Self::build(Node::Atom {
            rel: rel.to_string(),
            args,
        })
    }

    pub fn eq(a: Term, b: Term) -> Formula {
        Self::build(Node::Eq(a, b))
    }

    pub fn not(f: Formula) -> Formula {
        Self::build(Node::Not(Box::new(f)))
    }

    /// Empty conjunction is verum.
    pub fn and(items: Vec<Formula>) -> Formula {
        Self::build(Node::And(items, None))
    }

    /// Empty disjunction is falsum.
    pub fn or(items: Vec<Formula>) -> Formula {
        Self::build(Node::Or(items, None))
    }

    pub fn and_schema(items: Vec<Formula>, schema: Schema) -> Formula {
        Self::build(Node::And(items, Some(schema)))
    }

    pub fn or_schema(items: Vec<Formula>, schema: Schema) -> Formula {
        Self::build(Node::Or(items, Some(schema)))
    }

    pub fn verum() -> Formula {
        Self::and(Vec::new())
    }

    pub fn falsum() -> Formula {
        Self::or(Vec::new())
    }

    pub fn exists(vars: Vec<String>, body: Formula) -> Formula {
        Self::build(Node::Exists(vars, Box::new(body)))
    }

    pub fn forall(vars: Vec<String>, body: Formula) -> Formula {
        Self::build(Node::Forall(vars, Box::new(body)))
    }

    /// An existential over a schematic variable family would be an infinite
    /// quantifier block, which neither finitary mode admits.
    pub fn exists_family(_base: &str, _bound: CardinalToken, _body: Formula) -> Result<Formula, LogicError> {
        Err(LogicError::InfiniteQuantifierBlock)
    }

    pub fn qcof(
        tags: BTreeSet<CofinalityTag>,
        xs: Vec<String>,
        ys: Vec<String>,
        body: Formula,
    ) -> Result<Formula, LogicError> {
        if xs.len() != ys.len() {
            return Err(LogicError::QuantifierArity(xs.len(), ys.len()));
        }
        if tags
            .iter()
            .any(|t| !matches!(t, CofinalityTag::Omega | CofinalityTag::Kappa(_)))
        {
            return Err(LogicError::BadCofSet);
        }
        Ok(Self::build(Node::QCof {
            tags,
            xs,
            ys,
            body: Box::new(body),
        }))
    }

    pub fn qcard(card: CardinalToken, xs: Vec<String>, body: Formula) -> Formula {
        Self::build(Node::QCard {
            card,
            xs,
            body: Box::new(body),
        })
    }

    pub fn qec(
        card: CardinalToken,
        xs: Vec<String>,
        ys: Vec<String>,
        body: Formula,
    ) -> Result<Formula, LogicError> {
        if xs.len() != ys.len() {
            return Err(LogicError::QuantifierArity(xs.len(), ys.len()));
        }
        Ok(Self::build(Node::QEc {
            card,
            xs,
            ys,
            body: Box::new(body),
        }))
    }

    /// Surface implication, desugared immediately.
    pub fn implies(a: Formula, b: Formula) -> Formula {
        Self::or(vec![Self::not(a), b])
    }

    /// Surface biconditional, desugared immediately.
    pub fn iff(a: Formula, b: Formula) -> Formula {
        Self::and(vec![
            Self::or(vec![Self::not(a.clone()), b.clone()]),
            Self::or(vec![Self::not(b), a]),
        ])
    }

    pub fn is_sentence(&self) -> bool {
        self.free.is_empty()
    }

    /// Walks all immediate children with their child index.
    pub fn children(&self) -> Vec<&Formula> {
        match &self.node {
            Node::Atom { .. } | Node::Eq(..) => Vec::new(),
            Node::Not(f) | Node::Exists(_, f) | Node::Forall(_, f) => vec![f],
            Node::And(items, schema) | Node::Or(items, schema) => {
                let mut cs: Vec<&Formula> = items.iter().collect();
                if let Some(s) = schema {
                    cs.push(&s.template);
                }
                cs
            }
            Node::QCof { body, .. } | Node::QCard { body, .. } | Node::QEc { body, .. } => {
                vec![body]
            }
        }
    }

    /// All subformulas including `self`, preorder.
    pub fn subformulas(&self) -> Vec<&Formula> {
        let mut out = vec![self];
        let mut stack: Vec<&Formula> = self.children();
        while let Some(f) = stack.pop() {
            out.push(f);
            stack.extend(f.children());
        }
        out
    }

    /// Families schematized by a junction's own schema that occur free in its
    /// template. Nonempty means the junction has infinitely many free
    /// variables, which `standard` mode rejects.
    pub fn policy_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for sub in self.subformulas() {
            if let Node::And(_, Some(schema)) | Node::Or(_, Some(schema)) = &sub.node {
                for v in sub.free_vars() {
                    if let VarName::Indexed(base, Ix::Sym(s) | Ix::SymPlus(s, _)) = v {
                        if *s == schema.index {
                            out.push(base.clone());
                        }
                    }
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Capture-avoiding substitution of free variables by terms.
    pub fn subst(&self, map: &BTreeMap<VarName, Term>) -> Formula {
        if map.keys().all(|k| !self.free.contains(k)) {
            return self.clone();
        }
        match &self.node {
            Node::Atom { rel, args } => Formula::atom(
                rel,
                args.iter().map(|t| subst_term(t, map)).collect(),
            ),
            Node::Eq(a, b) => Formula::eq(subst_term(a, map), subst_term(b, map)),
            Node::Not(f) => Formula::not(f.subst(map)),
            Node::And(items, schema) => {
                let its = items.iter().map(|f| f.subst(map)).collect();
                match schema {
                    None => Formula::and(its),
                    Some(s) => Formula::and_schema(its, subst_schema(s, map)),
                }
            }
            Node::Or(items, schema) => {
                let its = items.iter().map(|f| f.subst(map)).collect();
                match schema {
                    None => Formula::or(its),
                    Some(s) => Formula::or_schema(its, subst_schema(s, map)),
                }
            }
            Node::Exists(vs, f) => {
                let (vs2, f2) = subst_under_binder(vs, f, map);
                Formula::exists(vs2, f2)
            }
            Node::Forall(vs, f) => {
                let (vs2, f2) = subst_under_binder(vs, f, map);
                Formula::forall(vs2, f2)
            }
            Node::QCof { tags, xs, ys, body } => {
                let mut bound = xs.clone();
                bound.extend(ys.iter().cloned());
                let (bound2, body2) = subst_under_binder(&bound, body, map);
                let (xs2, ys2) = bound2.split_at(xs.len());
                Formula::build(Node::QCof {
                    tags: tags.clone(),
                    xs: xs2.to_vec(),
                    ys: ys2.to_vec(),
                    body: Box::new(body2),
                })
            }
            Node::QCard { card, xs, body } => {
                let (xs2, body2) = subst_under_binder(xs, body, map);
                Formula::qcard(*card, xs2, body2)
            }
            Node::QEc { card, xs, ys, body } => {
                let mut bound = xs.clone();
                bound.extend(ys.iter().cloned());
                let (bound2, body2) = subst_under_binder(&bound, body, map);
                let (xs2, ys2) = bound2.split_at(xs.len());
                Formula::build(Node::QEc {
                    card: *card,
                    xs: xs2.to_vec(),
                    ys: ys2.to_vec(),
                    body: Box::new(body2),
                })
            }
        }
    }

    /// Instantiates every schematic junction with indices below `budget`.
    /// Returns the materialized formula and whether any schema was truncated
    /// (bound above the budget).
    pub fn materialize_schemas(&self, budget: u64) -> (Formula, bool) {
        let mut truncated = false;
        let out = self.materialize_inner(budget, &BTreeMap::new(), &mut truncated);
        (out, truncated)
    }

    fn materialize_inner(
        &self,
        budget: u64,
        env: &BTreeMap<String, u64>,
        truncated: &mut bool,
    ) -> Formula {
        match &self.node {
            Node::Atom { rel, args } => Formula::atom(
                rel,
                args.iter().map(|t| resolve_term_indices(t, env)).collect(),
            ),
            Node::Eq(a, b) => Formula::eq(
                resolve_term_indices(a, env),
                resolve_term_indices(b, env),
            ),
            Node::Not(f) => Formula::not(f.materialize_inner(budget, env, truncated)),
            Node::And(items, schema) | Node::Or(items, schema) => {
                let mut its: Vec<Formula> = items
                    .iter()
                    .map(|f| f.materialize_inner(budget, env, truncated))
                    .collect();
                if let Some(s) = schema {
                    let count = match &s.bound {
                        SchemaBound::Card(CardinalToken::Finite(n)) => {
                            if *n > budget {
                                *truncated = true;
                            }
                            (*n).min(budget)
                        }
                        SchemaBound::Card(_) => {
                            *truncated = true;
                            budget
                        }
                        SchemaBound::BelowIndex(j) => *env.get(j).unwrap_or(&0),
                    };
                    for k in 0..count {
                        let mut env2 = env.clone();
                        env2.insert(s.index.clone(), k);
                        its.push(s.template.materialize_inner(budget, &env2, truncated));
                    }
                }
                match &self.node {
                    Node::And(..) => Formula::and(its),
                    _ => Formula::or(its),
                }
            }
            Node::Exists(vs, f) => {
                Formula::exists(vs.clone(), f.materialize_inner(budget, env, truncated))
            }
            Node::Forall(vs, f) => {
                Formula::forall(vs.clone(), f.materialize_inner(budget, env, truncated))
            }
            Node::QCof { tags, xs, ys, body } => Formula::build(Node::QCof {
                tags: tags.clone(),
                xs: xs.clone(),
                ys: ys.clone(),
                body: Box::new(body.materialize_inner(budget, env, truncated)),
            }),
            Node::QCard { card, xs, body } => Formula::qcard(
                *card,
                xs.clone(),
                body.materialize_inner(budget, env, truncated),
            ),
            Node::QEc { card, xs, ys, body } => Formula::build(Node::QEc {
                card: *card,
                xs: xs.clone(),
                ys: ys.clone(),
                body: Box::new(body.materialize_inner(budget, env, truncated)),
            }),
        }
    }

    /// Renames every bound variable (and schema index) to a canonical
    /// `$b<k>` / `$i<k>` name in traversal order; structural equality of the
    /// results is alpha-equivalence.
    pub fn alpha_canonical(&self) -> Formula {
        let mut counter = 0u64;
        self.alpha_inner(&BTreeMap::new(), &mut counter)
    }

    pub fn alpha_eq(&self, other: &Formula) -> bool {
        self.alpha_canonical() == other.alpha_canonical()
    }

    fn alpha_inner(&self, ren: &BTreeMap<String, String>, counter: &mut u64) -> Formula {
        let rename_var = |v: &VarName, ren: &BTreeMap<String, String>| -> VarName {
            match v {
                VarName::Named(s) => {
                    VarName::Named(ren.get(s).cloned().unwrap_or_else(|| s.clone()))
                }
                VarName::Indexed(base, ix) => VarName::Indexed(
                    ren.get(base).cloned().unwrap_or_else(|| base.clone()),
                    match ix {
                        Ix::Sym(s) => {
                            Ix::Sym(ren.get(s).cloned().unwrap_or_else(|| s.clone()))
                        }
                        Ix::SymPlus(s, k) => {
                            Ix::SymPlus(ren.get(s).cloned().unwrap_or_else(|| s.clone()), *k)
                        }
                        Ix::Nat(n) => Ix::Nat(*n),
                    },
                ),
            }
        };
        fn rename_term(
            t: &Term,
            ren: &BTreeMap<String, String>,
            rename_var: &dyn Fn(&VarName, &BTreeMap<String, String>) -> VarName,
        ) -> Term {
            match t {
                Term::Var(v) => Term::Var(rename_var(v, ren)),
                Term::App(f, args) => Term::App(
                    f.clone(),
                    args.iter()
                        .map(|a| rename_term(a, ren, rename_var))
                        .collect(),
                ),
            }
        }
        let bind = |vs: &[String], ren: &BTreeMap<String, String>, counter: &mut u64| {
            let mut ren2 = ren.clone();
            let mut vs2 = Vec::with_capacity(vs.len());
            for v in vs {
                let fresh = format!("$b{counter}");
                *counter += 1;
                ren2.insert(v.clone(), fresh.clone());
                vs2.push(fresh);
            }
            (vs2, ren2)
        };
        match &self.node {
            Node::Atom { rel, args } => Formula::atom(
                rel,
                args.iter()
                    .map(|t| rename_term(t, ren, &rename_var))
                    .collect(),
            ),
            Node::Eq(a, b) => Formula::eq(
                rename_term(a, ren, &rename_var),
                rename_term(b, ren, &rename_var),
            ),
            Node::Not(f) => Formula::not(f.alpha_inner(ren, counter)),
            Node::And(items, schema) | Node::Or(items, schema) => {
                let its: Vec<Formula> =
                    items.iter().map(|f| f.alpha_inner(ren, counter)).collect();
                let sch = schema.as_ref().map(|s| {
                    let fresh = format!("$i{counter}");
                    *counter += 1;
                    let mut ren2 = ren.clone();
                    ren2.insert(s.index.clone(), fresh.clone());
                    Schema {
                        index: fresh,
                        bound: match &s.bound {
                            SchemaBound::BelowIndex(j) => SchemaBound::BelowIndex(
                                ren.get(j).cloned().unwrap_or_else(|| j.clone()),
                            ),
                            b => b.clone(),
                        },
                        template: Box::new(s.template.alpha_inner(&ren2, counter)),
                    }
                });
                match (&self.node, sch) {
                    (Node::And(..), None) => Formula::and(its),
                    (Node::And(..), Some(s)) => Formula::and_schema(its, s),
                    (_, None) => Formula::or(its),
                    (_, Some(s)) => Formula::or_schema(its, s),
                }
            }
            Node::Exists(vs, f) => {
                let (vs2, ren2) = bind(vs, ren, counter);
                Formula::exists(vs2, f.alpha_inner(&ren2, counter))
            }
            Node::Forall(vs, f) => {
                let (vs2, ren2) = bind(vs, ren, counter);
                Formula::forall(vs2, f.alpha_inner(&ren2, counter))
            }
            Node::QCof { tags, xs, ys, body } => {
                let (xs2, ren1) = bind(xs, ren, counter);
                let (ys2, ren2) = bind(ys, &ren1, counter);
                Formula::build(Node::QCof {
                    tags: tags.clone(),
                    xs: xs2,
                    ys: ys2,
                    body: Box::new(body.alpha_inner(&ren2, counter)),
                })
            }
            Node::QCard { card, xs, body } => {
                let (xs2, ren2) = bind(xs, ren, counter);
                Formula::qcard(*card, xs2, body.alpha_inner(&ren2, counter))
            }
            Node::QEc { card, xs, ys, body } => {
                let (xs2, ren1) = bind(xs, ren, counter);
                let (ys2, ren2) = bind(ys, &ren1, counter);
                Formula::build(Node::QEc {
                    card: *card,
                    xs: xs2,
                    ys: ys2,
                    body: Box::new(body.alpha_inner(&ren2, counter)),
                })
            }
        }
    }
}

fn subst_term(t: &Term, map: &BTreeMap<VarName, Term>) -> Term {
    match t {
        Term::Var(v) => map.get(v).cloned().unwrap_or_else(|| t.clone()),
        Term::App(f, args) => Term::App(
            f.clone(),
            args.iter().map(|a| subst_term(a, map)).collect(),
        ),
    }
}

fn subst_schema(s: &Schema, map: &BTreeMap<VarName, Term>) -> Schema {
    Schema {
        index: s.index.clone(),
        bound: s.bound.clone(),
        template: Box::new(s.template.subst(map)),
    }
}

/// Substitution under a binder: bound variables shadow the map, and bound
/// names colliding with free variables of replacement terms are freshened.
fn subst_under_binder(
    bound: &[String],
    body: &Formula,
    map: &BTreeMap<VarName, Term>,
) -> (Vec<String>, Formula) {
    let mut inner: BTreeMap<VarName, Term> = map
        .iter()
        .filter(|(k, _)| match k {
            VarName::Named(n) => !bound.contains(n),
            VarName::Indexed(..) => true,
        })
        .map(|(k, v)| (k.clone(), v.clone()))
        .collect();
    let replacement_vars: BTreeSet<VarName> = inner
        .values()
        .flat_map(|t| t.vars().into_iter())
        .collect();
    let mut bound2 = bound.to_vec();
    let mut fresh_i = 0u64;
    for b in bound2.iter_mut() {
        if replacement_vars.contains(&VarName::Named(b.clone())) {
            let fresh = loop {
                let cand = format!("$r{fresh_i}");
                fresh_i += 1;
                if !replacement_vars.contains(&VarName::Named(cand.clone()))
                    && !bound.contains(&cand)
                {
                    break cand;
                }
            };
            inner.insert(VarName::Named(b.clone()), Term::var(&fresh));
            *b = fresh;
        }
    }
    (bound2, body.subst(&inner))
}

fn resolve_term_indices(t: &Term, env: &BTreeMap<String, u64>) -> Term {
    fn resolve_ix(ix: &Ix, env: &BTreeMap<String, u64>) -> Ix {
        match ix {
            Ix::Nat(n) => Ix::Nat(*n),
            Ix::Sym(s) => env.get(s).map_or_else(|| ix.clone(), |k| Ix::Nat(*k)),
            Ix::SymPlus(s, d) => env
                .get(s)
                .map_or_else(|| ix.clone(), |k| Ix::Nat(*k + *d)),
        }
    }
    match t {
        Term::Var(VarName::Indexed(base, ix)) => {
            Term::Var(VarName::Indexed(base.clone(), resolve_ix(ix, env)))
        }
        Term::Var(v) => Term::Var(v.clone()),
        Term::App(f, args) => Term::App(
            match f {
                FuncName::Indexed(base, ix) => {
                    FuncName::Indexed(base.clone(), resolve_ix(ix, env))
                }
                FuncName::Named(n) => FuncName::Named(n.clone()),
            },
            args.iter().map(|a| resolve_term_indices(a, env)).collect(),
        ),
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
