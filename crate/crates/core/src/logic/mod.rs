//! Syntax and semantics of linguistic propositional formulas.

mod cnf;
mod semantics;
mod syntax;

pub use cnf::to_cnf;
pub use semantics::{
    entails, equivalent, evaluate_clause, evaluate_clauses, evaluate_formula, evaluate_literal, falsifies,
    is_tautology, literal_value, satisfies, EnumerationCap, Interpretation, Interpretations,
};
pub use syntax::{Atom, Clause, Formula, Literal, ShowAtom, ShowClause, ShowLiteral};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LogicError {
    #[error("atom `{0}` has no value in the interpretation")]
    UnassignedAtom(String),
    #[error("{required} interpretations exceed the cap of {cap}")]
    ResourceLimit { required: u64, cap: u64 },
}

/// `¬(A^a)` as the literal `A^(¬a)`.
pub fn negate_literal(lit: &Literal) -> Literal {
    lit.negated()
}
