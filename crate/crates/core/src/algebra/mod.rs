//! Truth values of a linear symmetrical hedge algebra.
//!
//! A [`Term`] is a generator (`⊥`, `False`, `W`, `True`, `⊤`) with a finite
//! string of hedges applied to it. Hedges fall into a positive class, which
//! continues the direction of the previous step, and a negative class, which
//! reverses it; within a class a stronger hedge moves a term further. Terms
//! are totally ordered, and conjunction/disjunction are the Gödel min/max.

mod domain;
mod signature;
mod term;

pub use domain::{extended, Domain, Indexing};
pub use signature::{HedgeSymbol, ShowTerm, Signature};
pub use term::{Generator, Hedge, HedgeClass, Term};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("duplicate hedge name `{0}`")]
    DuplicateHedgeName(String),
    #[error("hedge name `{0}` clashes with a generator spelling")]
    ReservedName(String),
    #[error("`{0}` is not a valid hedge name")]
    InvalidHedgeName(String),
    #[error("max depth must be non-negative, got {0}")]
    NegativeDepth(i64),
    #[error("too many hedges in one class")]
    TooManyHedges,
    #[error("malformed term: {0}")]
    MalformedTerm(String),
    #[error("unknown term `{0}`")]
    UnknownToken(String),
    #[error("term `{term}` exceeds max depth {max_depth}")]
    DepthExceeded { term: String, max_depth: usize },
    #[error("hedges cannot be applied to `{0}`")]
    HedgedFixedPoint(String),
    #[error("`{0}` has no index under the chosen indexing")]
    OutsideIndexing(String),
}
