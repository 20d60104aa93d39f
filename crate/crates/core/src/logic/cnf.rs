//! Conversion of formulas to conjunctive normal form.
//!
//! Implications and biconditionals are eliminated, negations are pushed to
//! the leaves (where `¬(A^a)` becomes `A^(¬a)` and `¬c` becomes the constant
//! `¬c`), and disjunction is distributed over conjunction. Every rewrite is
//! an identity on truth values, so the result has the same value as the input
//! under every interpretation. A constant leaf `c` is encoded as the literal
//! `c^⊤`, whose value is `c`.

use super::syntax::{Atom, Clause, Formula, Literal};
use crate::algebra::Term;

enum Nnf {
    Lit(Literal),
    And(Box<Nnf>, Box<Nnf>),
    Or(Box<Nnf>, Box<Nnf>),
}

fn and(a: Nnf, b: Nnf) -> Nnf {
    Nnf::And(Box::new(a), Box::new(b))
}

fn or(a: Nnf, b: Nnf) -> Nnf {
    Nnf::Or(Box::new(a), Box::new(b))
}

fn nnf(f: &Formula, negated: bool) -> Nnf {
    match f {
        Formula::Literal(l) if negated => Nnf::Lit(l.negated()),
        Formula::Literal(l) => Nnf::Lit(l.clone()),
        Formula::Constant(c) => {
            let c = if negated { c.negate() } else { c.clone() };
            Nnf::Lit(Literal::new(Atom::Const(c), Term::top()))
        }
        Formula::Not(a) => nnf(a, !negated),
        Formula::And(a, b) if negated => or(nnf(a, true), nnf(b, true)),
        Formula::And(a, b) => and(nnf(a, false), nnf(b, false)),
        Formula::Or(a, b) if negated => and(nnf(a, true), nnf(b, true)),
        Formula::Or(a, b) => or(nnf(a, false), nnf(b, false)),
        Formula::Implies(a, b) if negated => and(nnf(a, false), nnf(b, true)),
        Formula::Implies(a, b) => or(nnf(a, true), nnf(b, false)),
        Formula::Iff(a, b) if negated => or(and(nnf(a, false), nnf(b, true)), and(nnf(b, false), nnf(a, true))),
        Formula::Iff(a, b) => and(or(nnf(a, true), nnf(b, false)), or(nnf(b, true), nnf(a, false))),
    }
}

fn distribute(f: Nnf) -> Vec<Vec<Literal>> {
    match f {
        Nnf::Lit(l) => vec![vec![l]],
        Nnf::And(a, b) => {
            let mut clauses = distribute(*a);
            clauses.extend(distribute(*b));
            clauses
        }
        Nnf::Or(a, b) => {
            let (left, right) = (distribute(*a), distribute(*b));
            let mut out = Vec::with_capacity(left.len() * right.len());
            for l in &left {
                for r in &right {
                    out.push(l.iter().chain(r).cloned().collect());
                }
            }
            out
        }
    }
}

/// Clauses of an equivalent CNF, in first-occurrence order, without repeats.
pub fn to_cnf(formula: &Formula) -> Vec<Clause> {
    let mut out: Vec<Clause> = Vec::new();
    for lits in distribute(nnf(formula, false)) {
        let clause = Clause::new(lits);
        if !out.contains(&clause) {
            out.push(clause);
        }
    }
    out
}
