use std::collections::{BTreeSet, HashMap};
use std::fmt;

use super::ReliableClause;
use crate::algebra::{Signature, Term};
use crate::logic::{Atom, Clause};

/// Identifier of a clause in a [`ClauseStore`]. Ids start at 1 and are never
/// reused, so removed clauses can still be referenced by proofs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClauseId(pub usize);

impl fmt::Display for ClauseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// One application of the resolution rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InferenceRecord {
    pub premises: [ClauseId; 2],
    pub atom: Atom,
    pub b1: Term,
    pub b2: Term,
    pub conclusion: ClauseId,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StoredClause {
    pub id: ClauseId,
    pub clause: ReliableClause,
    /// `None` for input clauses.
    pub inference: Option<InferenceRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceEvent {
    Added(ClauseId),
    /// `id` was dropped because `by` is a variant with higher reliability.
    Removed {
        id: ClauseId,
        by: ClauseId,
    },
}

/// How the store treats several reliabilities for the same clause.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VariantPolicy {
    /// Keep only the most reliable variant of each clause.
    KeepMaximal,
    /// Keep every distinct `(clause, reliability)` pair.
    KeepAll,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Insertion {
    Added {
        id: ClauseId,
        removed: Vec<ClauseId>,
    },
    /// An existing clause makes the new one redundant.
    Redundant {
        by: ClauseId,
    },
}

/// The clause set of a derivation, together with the full history needed to
/// rebuild every intermediate set and every proof.
#[derive(Clone, Debug)]
pub struct ClauseStore {
    policy: VariantPolicy,
    entries: Vec<StoredClause>,
    alive: Vec<bool>,
    by_clause: HashMap<Clause, Vec<ClauseId>>,
    trace: Vec<TraceEvent>,
}

impl ClauseStore {
    pub fn new(policy: VariantPolicy) -> ClauseStore {
        ClauseStore {
            policy,
            entries: Vec::new(),
            alive: Vec::new(),
            by_clause: HashMap::new(),
            trace: Vec::new(),
        }
    }

    pub fn seeded(policy: VariantPolicy, seed: impl IntoIterator<Item = ReliableClause>) -> ClauseStore {
        let mut store = ClauseStore::new(policy);
        for rc in seed {
            store.insert(rc, None);
        }
        store
    }

    pub fn policy(&self) -> VariantPolicy {
        self.policy
    }

    pub fn get(&self, id: ClauseId) -> Option<&StoredClause> {
        id.0.checked_sub(1).and_then(|i| self.entries.get(i))
    }

    pub fn is_alive(&self, id: ClauseId) -> bool {
        id.0.checked_sub(1)
            .and_then(|i| self.alive.get(i))
            .copied()
            .unwrap_or(false)
    }

    /// Every clause ever added, including removed ones, in id order.
    pub fn history(&self) -> &[StoredClause] {
        &self.entries
    }

    /// Clauses currently in the set, in id order.
    pub fn clauses(&self) -> impl Iterator<Item = &StoredClause> {
        self.entries.iter().filter(move |e| self.is_alive(e.id))
    }

    pub fn len(&self) -> usize {
        self.alive.iter().filter(|&&a| a).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn trace(&self) -> &[TraceEvent] {
        &self.trace
    }

    /// Live variants of `clause`.
    pub fn variants(&self, clause: &Clause) -> impl Iterator<Item = &StoredClause> {
        self.by_clause
            .get(clause)
            .into_iter()
            .flatten()
            .filter_map(move |&id| self.get(id))
    }

    /// Best live reliability of `clause`.
    pub fn best_reliability(&self, clause: &Clause) -> Option<&Term> {
        self.variants(clause).map(|e| e.clause.reliability()).max()
    }

    /// A live variant with reliability at least `reliability`, if any.
    pub fn dominating(&self, clause: &Clause, reliability: &Term) -> Option<ClauseId> {
        self.variants(clause)
            .find(|e| e.clause.reliability() >= reliability)
            .map(|e| e.id)
    }

    /// Whether inserting `rc` would be rejected under the store's policy.
    pub fn redundant(&self, rc: &ReliableClause) -> Option<ClauseId> {
        match self.policy {
            VariantPolicy::KeepMaximal => self.dominating(rc.clause(), rc.reliability()),
            VariantPolicy::KeepAll => self
                .variants(rc.clause())
                .find(|e| e.clause.reliability() == rc.reliability())
                .map(|e| e.id),
        }
    }

    pub fn insert(&mut self, rc: ReliableClause, inference: Option<InferenceRecord>) -> Insertion {
        if let Some(by) = self.redundant(&rc) {
            return Insertion::Redundant { by };
        }
        let id = ClauseId(self.entries.len() + 1);
        let removed: Vec<ClauseId> = match self.policy {
            VariantPolicy::KeepMaximal => self
                .variants(rc.clause())
                .filter(|e| e.clause.reliability() < rc.reliability())
                .map(|e| e.id)
                .collect(),
            VariantPolicy::KeepAll => Vec::new(),
        };

        let ids = self.by_clause.entry(rc.clause().clone()).or_default();
        ids.retain(|i| !removed.contains(i));
        ids.push(id);
        for &r in &removed {
            self.alive[r.0 - 1] = false;
        }

        let inference = inference.map(|mut rec| {
            rec.conclusion = id;
            rec
        });
        self.entries.push(StoredClause {
            id,
            clause: rc,
            inference,
        });
        self.alive.push(true);
        self.trace.push(TraceEvent::Added(id));
        self.trace
            .extend(removed.iter().map(|&r| TraceEvent::Removed { id: r, by: id }));
        Insertion::Added { id, removed }
    }

    /// The clause set after the first `events` trace events.
    pub fn snapshot(&self, events: usize) -> BTreeSet<ClauseId> {
        let mut set = BTreeSet::new();
        for event in self.trace.iter().take(events) {
            match event {
                TraceEvent::Added(id) => set.insert(*id),
                TraceEvent::Removed { id, .. } => set.remove(id),
            };
        }
        set
    }

    /// Inference records of every derived clause, in derivation order.
    pub fn inferences(&self) -> impl Iterator<Item = &InferenceRecord> {
        self.entries.iter().filter_map(|e| e.inference.as_ref())
    }

    /// One line per trace event; identical runs produce identical text.
    pub fn trace_text(&self, sig: &Signature) -> String {
        let mut out = String::new();
        for event in &self.trace {
            match event {
                TraceEvent::Added(id) => {
                    let e = self.get(*id).expect("traced id exists");
                    out.push_str(&format!("+{} {}", id, e.clause.show(sig)));
                    if let Some(rec) = &e.inference {
                        out.push_str(&format!(
                            " <- {},{} on {}",
                            rec.premises[0],
                            rec.premises[1],
                            rec.atom.show(sig)
                        ));
                    }
                }
                TraceEvent::Removed { id, by } => out.push_str(&format!("-{id} by {by}")),
            }
            out.push('\n');
        }
        out
    }
}
