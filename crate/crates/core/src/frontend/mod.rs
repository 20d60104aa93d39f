//! Problem files.
//!
//! ```text
//! % comment
//! hedges: H+ = V < M ; H- = P < L      % ascending strength
//! maxdepth: 2
//! option: merge_duplicates = off       % or max_label
//! option: strategy = alpha             % or naive
//! option: max_steps = 100000
//! clause: A^MFalse | B^False | C^VMTrue.
//! clause: A^PTrue @ VTrue.             % reliability, default Top
//! clause: .                            % the empty clause
//! formula: (A^True -> B^MTrue) & !C^LFalse.
//! ```
//!
//! Formula operators bind as `!` > `&` > `|` > `->` > `<->`; `->` associates
//! to the right, the others to the left. An atom whose name spells a truth
//! term (`True`, `VFalse`, ...) is that constant.

mod lexer;
mod parser;
mod printer;

use std::fmt;

use thiserror::Error;

pub use parser::{parse_clause, parse_formula, parse_problem};
pub use printer::{format_clause, format_formula};

use crate::algebra::{Signature, Term};
use crate::engine::{MergeMode, ReliableClause, Strategy};
use crate::logic::{to_cnf, Formula};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    UnknownHedge,
    BadReliability,
    InvalidSignature,
    DepthExceeded,
    HedgedFixedPoint,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParseErrorKind::Syntax => "syntax error",
            ParseErrorKind::UnknownHedge => "unknown hedge",
            ParseErrorKind::BadReliability => "bad reliability",
            ParseErrorKind::InvalidSignature => "invalid signature",
            ParseErrorKind::DepthExceeded => "depth exceeded",
            ParseErrorKind::HedgedFixedPoint => "hedged fixed point",
        })
    }
}

/// A parse failure at a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, column: usize, kind: ParseErrorKind, message: impl Into<String>) -> ParseError {
        ParseError {
            line,
            column,
            kind,
            message: message.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Clause(ReliableClause),
    Formula(Formula),
}

/// Settings given by `option:` lines. Unset fields fall back to the caller's
/// defaults.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Directives {
    pub merge: Option<MergeMode>,
    pub strategy: Option<Strategy>,
    pub max_steps: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Problem {
    pub signature: Signature,
    pub inputs: Vec<Input>,
    pub directives: Directives,
}

impl Problem {
    /// The initial clause set: clauses as written, formulas in clause form
    /// with reliability `⊤`.
    pub fn seed(&self) -> Vec<ReliableClause> {
        let mut out = Vec::new();
        for input in &self.inputs {
            match input {
                Input::Clause(rc) => out.push(rc.clone()),
                Input::Formula(f) => out.extend(to_cnf(f).into_iter().map(ReliableClause::top)),
            }
        }
        out
    }

    pub fn from_clauses(signature: Signature, clauses: impl IntoIterator<Item = ReliableClause>) -> Problem {
        Problem {
            signature,
            inputs: clauses.into_iter().map(Input::Clause).collect(),
            directives: Directives::default(),
        }
    }

    /// Every term mentioned in the inputs, for well-formedness checks.
    pub fn terms(&self) -> Vec<Term> {
        fn formula_terms(f: &Formula, out: &mut Vec<Term>) {
            match f {
                Formula::Literal(l) => {
                    out.push(l.label.clone());
                    if let crate::logic::Atom::Const(t) = &l.atom {
                        out.push(t.clone());
                    }
                }
                Formula::Constant(t) => out.push(t.clone()),
                Formula::Not(a) => formula_terms(a, out),
                Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
                    formula_terms(a, out);
                    formula_terms(b, out);
                }
            }
        }
        let mut out = Vec::new();
        for input in &self.inputs {
            match input {
                Input::Clause(rc) => {
                    out.push(rc.reliability().clone());
                    for l in rc.clause().literals() {
                        out.push(l.label.clone());
                        if let crate::logic::Atom::Const(t) = &l.atom {
                            out.push(t.clone());
                        }
                    }
                }
                Input::Formula(f) => formula_terms(f, &mut out),
            }
        }
        out
    }
}
