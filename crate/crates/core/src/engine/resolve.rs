use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::ReliableClause;
use crate::algebra::Term;
use crate::logic::{Atom, Clause, Literal};

/// What to do with several literals on the same atom in a resolvent.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum MergeMode {
    /// Keep them as they are.
    #[default]
    Off,
    /// Replace them by one literal labelled with the join of their labels.
    /// This does not preserve truth values in general.
    MaxLabel,
}

impl FromStr for MergeMode {
    type Err = String;

    fn from_str(s: &str) -> Result<MergeMode, String> {
        match s {
            "off" => Ok(MergeMode::Off),
            "max_label" | "max-label" => Ok(MergeMode::MaxLabel),
            other => Err(format!("unknown merge mode `{other}` (expected off or max_label)")),
        }
    }
}

impl fmt::Display for MergeMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MergeMode::Off => "off",
            MergeMode::MaxLabel => "max_label",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NotResolvable {
    #[error("premise {premise} has no literal at index {index}")]
    NoSuchLiteral { premise: usize, index: usize },
    #[error("the selected literals are on different atoms")]
    AtomMismatch,
    #[error("b1 ∧ b2 is not strictly below W")]
    MeetNotBelowW,
    #[error("b1 ∨ b2 is not strictly above W")]
    JoinNotAboveW,
}

/// Side conditions on the labels of the two resolved literals.
pub fn check_labels(b1: &Term, b2: &Term) -> Result<(), NotResolvable> {
    if !b1.meet(b2).is_false() {
        return Err(NotResolvable::MeetNotBelowW);
    }
    if !b1.join(b2).is_true() {
        return Err(NotResolvable::JoinNotAboveW);
    }
    Ok(())
}

/// `α₁ ∧ α₂ ∧ ¬(b₁ ∧ b₂) ∧ (b₁ ∨ b₂)`.
pub fn resolution_reliability(a1: &Term, a2: &Term, b1: &Term, b2: &Term) -> Term {
    a1.meet(a2).meet(&b1.meet(b2).negate()).meet(&b1.join(b2))
}

/// Conclusion of one resolution step, with the literals it was resolved on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resolvent {
    pub conclusion: ReliableClause,
    pub atom: Atom,
    pub b1: Term,
    pub b2: Term,
}

pub(crate) fn merge_labels(literals: Vec<Literal>) -> Vec<Literal> {
    let mut merged: Vec<Literal> = Vec::with_capacity(literals.len());
    for lit in literals {
        match merged.iter_mut().find(|m| m.atom == lit.atom) {
            Some(m) => m.label = m.label.join(&lit.label),
            None => merged.push(lit),
        }
    }
    merged
}

/// Resolves `p1` on its literal `i` against `p2` on its literal `j`.
pub fn resolve(
    p1: &ReliableClause,
    p2: &ReliableClause,
    i: usize,
    j: usize,
    merge: MergeMode,
) -> Result<Resolvent, NotResolvable> {
    let l1 = p1
        .clause()
        .literals()
        .get(i)
        .ok_or(NotResolvable::NoSuchLiteral { premise: 1, index: i })?;
    let l2 = p2
        .clause()
        .literals()
        .get(j)
        .ok_or(NotResolvable::NoSuchLiteral { premise: 2, index: j })?;
    if l1.atom != l2.atom {
        return Err(NotResolvable::AtomMismatch);
    }
    check_labels(&l1.label, &l2.label)?;

    fn rest(c: &Clause, skip: usize) -> impl Iterator<Item = Literal> + '_ {
        c.literals()
            .iter()
            .enumerate()
            .filter(move |&(k, _)| k != skip)
            .map(|(_, l)| l.clone())
    }
    let mut literals: Vec<Literal> = rest(p1.clause(), i).chain(rest(p2.clause(), j)).collect();
    if merge == MergeMode::MaxLabel {
        literals = merge_labels(literals);
    }
    let reliability = resolution_reliability(p1.reliability(), p2.reliability(), &l1.label, &l2.label);
    Ok(Resolvent {
        conclusion: ReliableClause::new_unchecked(Clause::new(literals), reliability),
        atom: l1.atom.clone(),
        b1: l1.label.clone(),
        b2: l2.label.clone(),
    })
}

/// Every resolution between `p1` and `p2`, as `(i, j, resolvent)`.
pub fn resolvents<'a>(
    p1: &'a ReliableClause,
    p2: &'a ReliableClause,
    merge: MergeMode,
) -> impl Iterator<Item = (usize, usize, Resolvent)> + 'a {
    let l1 = p1.clause().literals();
    let l2 = p2.clause().literals();
    (0..l1.len())
        .flat_map(move |i| (0..l2.len()).map(move |j| (i, j)))
        .filter(move |&(i, j)| l1[i].atom == l2[j].atom)
        .filter_map(move |(i, j)| resolve(p1, p2, i, j, merge).ok().map(|r| (i, j, r)))
}
