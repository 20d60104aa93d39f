use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::algebra::{Signature, Term};

/// A propositional variable or a truth constant used in atom position.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    Var(Arc<str>),
    Const(Term),
}

impl Atom {
    pub fn var(name: &str) -> Atom {
        Atom::Var(Arc::from(name))
    }

    pub fn as_var(&self) -> Option<&Arc<str>> {
        match self {
            Atom::Var(name) => Some(name),
            Atom::Const(_) => None,
        }
    }

    pub fn show<'a>(&'a self, sig: &'a Signature) -> ShowAtom<'a> {
        ShowAtom { atom: self, sig }
    }
}

pub struct ShowAtom<'a> {
    atom: &'a Atom,
    sig: &'a Signature,
}

impl fmt::Display for ShowAtom<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.atom {
            Atom::Var(name) => f.write_str(name),
            Atom::Const(term) => self.sig.show(term).fmt(f),
        }
    }
}

/// `atom^label`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub atom: Atom,
    pub label: Term,
}

impl Literal {
    pub fn new(atom: Atom, label: Term) -> Literal {
        Literal { atom, label }
    }

    /// `¬(A^a)` rewritten as `A^(¬a)`.
    pub fn negated(&self) -> Literal {
        Literal {
            atom: self.atom.clone(),
            label: self.label.negate(),
        }
    }

    pub fn show<'a>(&'a self, sig: &'a Signature) -> ShowLiteral<'a> {
        ShowLiteral { lit: self, sig }
    }
}

pub struct ShowLiteral<'a> {
    lit: &'a Literal,
    sig: &'a Signature,
}

impl fmt::Display for ShowLiteral<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.lit.atom.show(self.sig), self.sig.show(&self.lit.label))
    }
}

/// A finite disjunction of literals.
///
/// Literals are kept sorted and free of repeats, so two clauses are equal
/// exactly when they contain the same literals. The empty clause is `□`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Clause {
    literals: Vec<Literal>,
}

impl Clause {
    pub fn empty() -> Clause {
        Clause::default()
    }

    pub fn new(literals: impl IntoIterator<Item = Literal>) -> Clause {
        let mut literals: Vec<Literal> = literals.into_iter().collect();
        literals.sort();
        literals.dedup();
        Clause { literals }
    }

    pub fn literals(&self) -> &[Literal] {
        &self.literals
    }

    pub fn len(&self) -> usize {
        self.literals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.literals.is_empty()
    }

    pub fn variables(&self) -> impl Iterator<Item = &Arc<str>> {
        self.literals.iter().filter_map(|l| l.atom.as_var())
    }

    pub fn show<'a>(&'a self, sig: &'a Signature) -> ShowClause<'a> {
        ShowClause { clause: self, sig }
    }
}

impl FromIterator<Literal> for Clause {
    fn from_iter<I: IntoIterator<Item = Literal>>(iter: I) -> Clause {
        Clause::new(iter)
    }
}

pub struct ShowClause<'a> {
    clause: &'a Clause,
    sig: &'a Signature,
}

impl fmt::Display for ShowClause<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.clause.is_empty() {
            return f.write_str("□");
        }
        for (i, lit) in self.clause.literals.iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            lit.show(self.sig).fmt(f)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Literal(Literal),
    Constant(Term),
    Not(Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn lit(atom: &str, label: Term) -> Formula {
        Formula::Literal(Literal::new(Atom::var(atom), label))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::Iff(Box::new(a), Box::new(b))
    }

    /// Variable names occurring in the formula, sorted.
    pub fn variables(&self) -> BTreeSet<Arc<str>> {
        let mut out = BTreeSet::new();
        self.collect_variables(&mut out);
        out
    }

    fn collect_variables(&self, out: &mut BTreeSet<Arc<str>>) {
        match self {
            Formula::Literal(l) => {
                if let Some(v) = l.atom.as_var() {
                    out.insert(v.clone());
                }
            }
            Formula::Constant(_) => {}
            Formula::Not(a) => a.collect_variables(out),
            Formula::Or(a, b) | Formula::And(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
                a.collect_variables(out);
                b.collect_variables(out);
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Literal(_) | Formula::Constant(_) => 0,
            Formula::Not(a) => 1 + a.depth(),
            Formula::Or(a, b) | Formula::And(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
                1 + a.depth().max(b.depth())
            }
        }
    }

    /// Conjunction of the clauses, each a left-nested disjunction.
    /// The empty clause becomes the constant `⊥`.
    pub fn from_clauses(clauses: &[Clause]) -> Option<Formula> {
        clauses
            .iter()
            .map(|c| {
                c.literals()
                    .iter()
                    .cloned()
                    .map(Formula::Literal)
                    .reduce(Formula::or)
                    .unwrap_or(Formula::Constant(Term::bottom()))
            })
            .reduce(Formula::and)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clause_is_a_set() {
        let sig = Signature::standard();
        let t = |s: &str| sig.parse_term(s).unwrap();
        let a = Literal::new(Atom::var("A"), t("MFalse"));
        let b = Literal::new(Atom::var("B"), t("False"));
        let c1 = Clause::new([b.clone(), a.clone(), b.clone()]);
        let c2 = Clause::new([a, b]);
        assert_eq!(c1, c2);
        assert_eq!(c1.len(), 2);
        assert_eq!(c1.show(&sig).to_string(), "A^MFalse | B^False");
        assert_eq!(Clause::empty().show(&sig).to_string(), "□");
    }

    #[test]
    fn literal_negation_is_involutive() {
        let sig = Signature::standard();
        let lit = Literal::new(Atom::var("A"), sig.parse_term("MFalse").unwrap());
        assert_eq!(lit.negated().label, sig.parse_term("MTrue").unwrap());
        assert_eq!(lit.negated().negated(), lit);
    }
}
