use std::collections::BTreeMap;
use std::sync::Arc;

use super::syntax::{Atom, Clause, Formula, Literal};
use super::LogicError;
use crate::algebra::Term;

/// Assignment of truth values to propositional variables.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Interpretation(BTreeMap<Arc<str>, Term>);

impl Interpretation {
    pub fn new() -> Interpretation {
        Interpretation::default()
    }

    pub fn assign(&mut self, var: &str, value: Term) {
        self.0.insert(Arc::from(var), value);
    }

    pub fn with(mut self, var: &str, value: Term) -> Interpretation {
        self.assign(var, value);
        self
    }

    pub fn get(&self, var: &str) -> Option<&Term> {
        self.0.get(var)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Arc<str>, &Term)> {
        self.0.iter()
    }

    pub fn value_of(&self, atom: &Atom) -> Result<Term, LogicError> {
        match atom {
            Atom::Const(t) => Ok(t.clone()),
            Atom::Var(v) => self
                .0
                .get(v)
                .cloned()
                .ok_or_else(|| LogicError::UnassignedAtom(v.to_string())),
        }
    }
}

impl FromIterator<(Arc<str>, Term)> for Interpretation {
    fn from_iter<I: IntoIterator<Item = (Arc<str>, Term)>>(iter: I) -> Interpretation {
        Interpretation(iter.into_iter().collect())
    }
}

/// Truth value of `A^label` when `A` is worth `value`.
pub fn literal_value(value: &Term, label: &Term) -> Term {
    match (value.is_true(), label.is_true()) {
        (true, true) => value.meet(label),
        (false, false) => value.join(label).negate(),
        (true, false) => value.negate().join(label),
        (false, true) => value.join(&label.negate()),
    }
}

pub fn evaluate_literal(i: &Interpretation, lit: &Literal) -> Result<Term, LogicError> {
    Ok(literal_value(&i.value_of(&lit.atom)?, &lit.label))
}

/// Join of the literal values; `□` evaluates to `⊥`.
pub fn evaluate_clause(i: &Interpretation, clause: &Clause) -> Result<Term, LogicError> {
    clause
        .literals()
        .iter()
        .try_fold(Term::bottom(), |acc, lit| Ok(acc.join(&evaluate_literal(i, lit)?)))
}

/// Meet of the clause values; the empty conjunction evaluates to `⊤`.
pub fn evaluate_clauses(i: &Interpretation, clauses: &[Clause]) -> Result<Term, LogicError> {
    clauses
        .iter()
        .try_fold(Term::top(), |acc, c| Ok(acc.meet(&evaluate_clause(i, c)?)))
}

pub fn evaluate_formula(i: &Interpretation, formula: &Formula) -> Result<Term, LogicError> {
    Ok(match formula {
        Formula::Literal(lit) => evaluate_literal(i, lit)?,
        Formula::Constant(t) => t.clone(),
        Formula::Not(a) => evaluate_formula(i, a)?.negate(),
        Formula::Or(a, b) => evaluate_formula(i, a)?.join(&evaluate_formula(i, b)?),
        Formula::And(a, b) => evaluate_formula(i, a)?.meet(&evaluate_formula(i, b)?),
        Formula::Implies(a, b) => evaluate_formula(i, a)?.implies(&evaluate_formula(i, b)?),
        Formula::Iff(a, b) => {
            let (x, y) = (evaluate_formula(i, a)?, evaluate_formula(i, b)?);
            x.implies(&y).meet(&y.implies(&x))
        }
    })
}

/// `I` satisfies `F` when `I(F) > W`.
pub fn satisfies(i: &Interpretation, formula: &Formula) -> Result<bool, LogicError> {
    Ok(evaluate_formula(i, formula)?.is_true())
}

/// `I` falsifies `F` when `I(F) ≤ W`.
pub fn falsifies(i: &Interpretation, formula: &Formula) -> Result<bool, LogicError> {
    Ok(!satisfies(i, formula)?)
}

/// Every assignment of `values` to `vars`, in odometer order with the last
/// variable varying fastest.
pub struct Interpretations<'a> {
    vars: Vec<Arc<str>>,
    values: &'a [Term],
    counters: Vec<usize>,
    done: bool,
}

impl<'a> Interpretations<'a> {
    pub fn new(vars: impl IntoIterator<Item = Arc<str>>, values: &'a [Term]) -> Interpretations<'a> {
        let vars: Vec<Arc<str>> = vars.into_iter().collect();
        let counters = vec![0; vars.len()];
        Interpretations {
            done: values.is_empty() && !vars.is_empty(),
            vars,
            values,
            counters,
        }
    }

    /// Number of interpretations, saturating at `u64::MAX`.
    pub fn count(vars: usize, values: usize) -> u64 {
        (0..vars).fold(1u64, |acc, _| acc.saturating_mul(values as u64))
    }
}

impl Iterator for Interpretations<'_> {
    type Item = Interpretation;

    fn next(&mut self) -> Option<Interpretation> {
        if self.done {
            return None;
        }
        let current = self
            .vars
            .iter()
            .zip(&self.counters)
            .map(|(v, &c)| (v.clone(), self.values[c].clone()))
            .collect();
        self.done = true;
        for c in self.counters.iter_mut().rev() {
            *c += 1;
            if *c < self.values.len() {
                self.done = false;
                break;
            }
            *c = 0;
        }
        Some(current)
    }
}

/// Limits for brute-force semantic checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationCap {
    pub max_interpretations: u64,
}

impl Default for EnumerationCap {
    fn default() -> EnumerationCap {
        EnumerationCap {
            max_interpretations: 200_000,
        }
    }
}

fn for_all(
    vars: impl IntoIterator<Item = Arc<str>>,
    values: &[Term],
    cap: EnumerationCap,
    mut pred: impl FnMut(&Interpretation) -> Result<bool, LogicError>,
) -> Result<bool, LogicError> {
    let vars: Vec<Arc<str>> = vars.into_iter().collect();
    let count = Interpretations::count(vars.len(), values.len());
    if count > cap.max_interpretations {
        return Err(LogicError::ResourceLimit {
            required: count,
            cap: cap.max_interpretations,
        });
    }
    for i in Interpretations::new(vars, values) {
        if !pred(&i)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `A ⊨ B`: every interpretation over `values` that satisfies `a` satisfies `b`.
pub fn entails(values: &[Term], a: &Formula, b: &Formula, cap: EnumerationCap) -> Result<bool, LogicError> {
    let vars = a
        .variables()
        .into_iter()
        .chain(b.variables())
        .collect::<std::collections::BTreeSet<_>>();
    for_all(vars, values, cap, |i| Ok(!satisfies(i, a)? || satisfies(i, b)?))
}

pub fn equivalent(values: &[Term], a: &Formula, b: &Formula, cap: EnumerationCap) -> Result<bool, LogicError> {
    Ok(entails(values, a, b, cap)? && entails(values, b, a, cap)?)
}

/// `⊨ F`: every interpretation satisfies `f`.
pub fn is_tautology(values: &[Term], f: &Formula, cap: EnumerationCap) -> Result<bool, LogicError> {
    for_all(f.variables(), values, cap, |i| satisfies(i, f))
}
