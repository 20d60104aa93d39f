//! Resolution with reliabilities.
//!
//! A [`ReliableClause`] pairs a clause with a reliability above `W`. Two
//! clauses resolve on literals `A^b₁`, `A^b₂` whose labels are contradictory
//! to some degree (`b₁ ∧ b₂ < W < b₁ ∨ b₂`); the conclusion is at most as
//! reliable as either premise. [`saturate`] closes a [`ClauseStore`] under the
//! rule, and [`refute`] extracts the best proof of `□`.

mod compact;
mod proof;
mod resolve;
mod saturate;
mod store;

use std::fmt;

use thiserror::Error;

pub use proof::{refute, ProofDocument, ProofNode, ProofNodeDocument, ProofTree};
pub use resolve::{check_labels, resolution_reliability, resolve, resolvents, MergeMode, NotResolvable, Resolvent};
pub use saturate::{check_saturated, saturate, SaturationConfig, SaturationStats, Strategy, UnsaturatedWitness};
pub use store::{ClauseId, ClauseStore, InferenceRecord, Insertion, StoredClause, TraceEvent, VariantPolicy};

use crate::algebra::{Signature, Term};
use crate::logic::Clause;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("reliability must be above W")]
    ReliabilityNotAboveW,
    #[error(transparent)]
    NotResolvable(#[from] NotResolvable),
    #[error("step cap of {max_steps} reached before saturation")]
    ResourceLimit { max_steps: usize },
    #[error("strategy {strategy} cannot run on a store with policy {policy:?}")]
    PolicyMismatch { strategy: Strategy, policy: VariantPolicy },
}

/// A clause together with its reliability, which is always above `W`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReliableClause {
    clause: Clause,
    reliability: Term,
}

impl ReliableClause {
    pub fn new(clause: Clause, reliability: Term) -> Result<ReliableClause, EngineError> {
        if !reliability.is_true() {
            return Err(EngineError::ReliabilityNotAboveW);
        }
        Ok(ReliableClause { clause, reliability })
    }

    /// Input clauses start fully reliable.
    pub fn top(clause: Clause) -> ReliableClause {
        ReliableClause {
            clause,
            reliability: Term::top(),
        }
    }

    pub(crate) fn new_unchecked(clause: Clause, reliability: Term) -> ReliableClause {
        debug_assert!(reliability.is_true());
        ReliableClause { clause, reliability }
    }

    pub fn clause(&self) -> &Clause {
        &self.clause
    }

    pub fn reliability(&self) -> &Term {
        &self.reliability
    }

    pub fn into_parts(self) -> (Clause, Term) {
        (self.clause, self.reliability)
    }

    pub fn show<'a>(&'a self, sig: &'a Signature) -> ShowReliableClause<'a> {
        ShowReliableClause { rc: self, sig }
    }
}

pub struct ShowReliableClause<'a> {
    rc: &'a ReliableClause,
    sig: &'a Signature,
}

impl fmt::Display for ShowReliableClause<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} @ {}",
            self.rc.clause.show(self.sig),
            self.sig.show(&self.rc.reliability)
        )
    }
}

/// Seeds a store for `config.strategy`, saturates it, and returns it.
#[allow(clippy::result_large_err)]
pub fn prove(
    seed: impl IntoIterator<Item = ReliableClause>,
    config: &SaturationConfig,
) -> Result<(ClauseStore, SaturationStats), (ClauseStore, EngineError)> {
    let mut store = ClauseStore::seeded(config.strategy.policy(), seed);
    match saturate(&mut store, config) {
        Ok(stats) => Ok((store, stats)),
        Err(e) => Err((store, e)),
    }
}
