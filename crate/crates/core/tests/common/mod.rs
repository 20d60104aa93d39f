#![allow(dead_code)]

use lsha::algebra::{Signature, Term};
use lsha::engine::ReliableClause;
use lsha::logic::{Atom, Clause, Formula, Literal};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

pub const ATOMS: [&str; 4] = ["A", "B", "C", "D"];

/// Labels usable in random clauses: every term except `W`.
pub fn labels(sig: &Signature) -> Vec<Term> {
    sig.enumerate().into_iter().filter(|t| !t.is_w()).collect()
}

pub fn reliabilities(sig: &Signature) -> Vec<Term> {
    sig.enumerate().into_iter().filter(|t| t.is_true()).collect()
}

#[derive(Clone, Copy, Debug)]
pub struct ProblemShape {
    pub max_atoms: usize,
    pub max_clauses: usize,
    pub max_literals: usize,
    /// Draw input reliabilities at random instead of `Top`.
    pub random_reliability: bool,
}

impl Default for ProblemShape {
    fn default() -> ProblemShape {
        ProblemShape {
            max_atoms: 4,
            max_clauses: 6,
            max_literals: 3,
            random_reliability: false,
        }
    }
}

pub fn random_clause(rng: &mut impl Rng, atoms: &[&str], labels: &[Term], max_literals: usize) -> Clause {
    let n = rng.gen_range(1..=max_literals);
    (0..n)
        .map(|_| {
            Literal::new(
                Atom::var(atoms.choose(rng).unwrap()),
                labels.choose(rng).unwrap().clone(),
            )
        })
        .collect()
}

pub fn random_problem(rng: &mut impl Rng, sig: &Signature, shape: ProblemShape) -> Vec<ReliableClause> {
    let labels = labels(sig);
    let rels = reliabilities(sig);
    let atoms = &ATOMS[..rng.gen_range(1..=shape.max_atoms)];
    let clauses = rng.gen_range(1..=shape.max_clauses);
    (0..clauses)
        .map(|_| {
            let c = random_clause(rng, atoms, &labels, shape.max_literals);
            if shape.random_reliability {
                ReliableClause::new(c, rels.choose(rng).unwrap().clone()).unwrap()
            } else {
                ReliableClause::top(c)
            }
        })
        .collect()
}

pub fn random_formula(rng: &mut impl Rng, atoms: &[&str], values: &[Term], depth: usize) -> Formula {
    if depth == 0 || rng.gen_bool(0.25) {
        if rng.gen_bool(0.1) {
            return Formula::Constant(values.choose(rng).unwrap().clone());
        }
        return Formula::lit(atoms.choose(rng).unwrap(), values.choose(rng).unwrap().clone());
    }
    let mut sub = || random_formula(rng, atoms, values, depth - 1);
    let (a, b) = (sub(), sub());
    match rng.gen_range(0..5) {
        0 => Formula::not(a),
        1 => Formula::and(a, b),
        2 => Formula::or(a, b),
        3 => Formula::implies(a, b),
        _ => Formula::iff(a, b),
    }
}

// proptest strategies over the standard signature

pub fn any_term(sig: &Signature) -> impl Strategy<Value = Term> {
    proptest::sample::select(sig.enumerate())
}

pub fn any_formula(sig: &Signature, depth: u32) -> impl Strategy<Value = Formula> {
    let values = sig.enumerate();
    let leaf = prop_oneof![
        4 => (proptest::sample::select(ATOMS[..3].to_vec()), proptest::sample::select(values.clone()))
            .prop_map(|(a, t)| Formula::lit(a, t)),
        1 => proptest::sample::select(values).prop_map(Formula::Constant),
    ];
    leaf.prop_recursive(depth, 32, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::iff(a, b)),
        ]
    })
}

pub fn any_problem(sig: &Signature, shape: ProblemShape) -> impl Strategy<Value = Vec<ReliableClause>> {
    let labels = labels(sig);
    let rels = reliabilities(sig);
    let literal =
        (0..shape.max_atoms, proptest::sample::select(labels)).prop_map(|(a, t)| Literal::new(Atom::var(ATOMS[a]), t));
    let clause = (
        proptest::collection::vec(literal, 1..=shape.max_literals),
        proptest::sample::select(rels),
    )
        .prop_map(move |(lits, rel)| {
            let c: Clause = lits.into_iter().collect();
            if shape.random_reliability {
                ReliableClause::new(c, rel).unwrap()
            } else {
                ReliableClause::top(c)
            }
        });
    proptest::collection::vec(clause, 1..=shape.max_clauses)
}
