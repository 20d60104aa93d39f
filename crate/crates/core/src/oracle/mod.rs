//! Brute-force reference checks for the engine.
//!
//! [`brute_unsat`] decides satisfiability by trying every interpretation over
//! the finite truth domain. [`naive_saturate_all`] closes a clause set under
//! resolution keeping every reliability ever derived. Neither calls into the
//! engine's inference code; they share only the truth-value operations.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{Signature, Term};
use crate::engine::{self, MergeMode, ReliableClause, SaturationConfig, Strategy};
use crate::logic::{literal_value, Atom, Clause, Interpretation, Literal};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_atoms: usize,
    pub max_depth: usize,
    pub max_interpretations: u64,
    pub max_steps: usize,
}

impl Default for OracleLimits {
    fn default() -> OracleLimits {
        OracleLimits {
            max_atoms: 4,
            max_depth: 2,
            max_interpretations: 200_000,
            max_steps: 50_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{what}: {required} exceeds the cap of {cap}")]
    ResourceLimit {
        what: &'static str,
        required: u64,
        cap: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Sat,
    Unsat,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Sat => "sat",
            Verdict::Unsat => "unsat",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub verdict: Verdict,
    /// An interpretation giving every clause a value above `W`.
    pub witness: Option<Interpretation>,
    /// Interpretations examined before the verdict was reached.
    pub interpretations: u64,
    /// Per derivable clause, the best reliability of any derivation.
    pub max_reliability: Option<BTreeMap<Clause, Term>>,
}

impl OracleReport {
    pub fn to_json_value(&self, sig: &Signature) -> Value {
        json!({
            "verdict": self.verdict,
            "witness": self.witness.as_ref().map(|w| {
                w.iter()
                    .map(|(k, v)| (k.to_string(), Value::String(sig.format_term(v))))
                    .collect::<serde_json::Map<_, _>>()
            }),
            "interpretations": self.interpretations,
            "max_reliability": self.max_reliability.as_ref().map(|m| {
                m.iter()
                    .map(|(c, r)| (c.show(sig).to_string(), Value::String(sig.format_term(r))))
                    .collect::<serde_json::Map<_, _>>()
            }),
        })
    }
}

fn variables(clauses: &[Clause]) -> Vec<Arc<str>> {
    let set: BTreeSet<Arc<str>> = clauses.iter().flat_map(|c| c.variables().cloned()).collect();
    set.into_iter().collect()
}

fn check_size(sig: &Signature, atoms: usize, limits: &OracleLimits) -> Result<u64, OracleError> {
    if sig.max_depth() > limits.max_depth {
        return Err(OracleError::ResourceLimit {
            what: "hedge depth",
            required: sig.max_depth() as u64,
            cap: limits.max_depth as u64,
        });
    }
    if atoms > limits.max_atoms {
        return Err(OracleError::ResourceLimit {
            what: "atoms",
            required: atoms as u64,
            cap: limits.max_atoms as u64,
        });
    }
    let total = (sig.domain_size() as u64).checked_pow(atoms as u32).unwrap_or(u64::MAX);
    if total > limits.max_interpretations {
        return Err(OracleError::ResourceLimit {
            what: "interpretations",
            required: total,
            cap: limits.max_interpretations,
        });
    }
    Ok(total)
}

/// Decides whether every interpretation falsifies some clause.
pub fn brute_unsat(sig: &Signature, clauses: &[Clause], limits: &OracleLimits) -> Result<OracleReport, OracleError> {
    let vars = variables(clauses);
    check_size(sig, vars.len(), limits)?;
    let domain = sig.enumerate();

    // For each literal, which domain values satisfy it. Constant atoms are
    // decided once.
    enum Compiled {
        Var(usize, Vec<bool>),
        Fixed(bool),
    }
    let compiled: Vec<Vec<Compiled>> = clauses
        .iter()
        .map(|c| {
            c.literals()
                .iter()
                .map(|l| match &l.atom {
                    Atom::Var(v) => Compiled::Var(
                        vars.binary_search(v).expect("collected above"),
                        domain.iter().map(|x| literal_value(x, &l.label).is_true()).collect(),
                    ),
                    Atom::Const(t) => Compiled::Fixed(literal_value(t, &l.label).is_true()),
                })
                .collect()
        })
        .collect();

    let mut digits = vec![0usize; vars.len()];
    let mut examined = 0u64;
    loop {
        examined += 1;
        let satisfied = compiled.iter().all(|clause| {
            clause.iter().any(|lit| match lit {
                Compiled::Var(k, table) => table[digits[*k]],
                Compiled::Fixed(b) => *b,
            })
        });
        if satisfied {
            let witness = vars
                .iter()
                .zip(&digits)
                .map(|(v, &d)| (v.clone(), domain[d].clone()))
                .collect();
            return Ok(OracleReport {
                verdict: Verdict::Sat,
                witness: Some(witness),
                interpretations: examined,
                max_reliability: None,
            });
        }
        // odometer, last variable fastest
        let mut k = digits.len();
        loop {
            if k == 0 {
                return Ok(OracleReport {
                    verdict: Verdict::Unsat,
                    witness: None,
                    interpretations: examined,
                    max_reliability: None,
                });
            }
            k -= 1;
            digits[k] += 1;
            if digits[k] < domain.len() {
                break;
            }
            digits[k] = 0;
        }
    }
}

fn contradictory(b1: &Term, b2: &Term) -> bool {
    b1.meet(b2) < Term::w() && b1.join(b2) > Term::w()
}

/// Closes `seed` under resolution, keeping every (clause, reliability) pair,
/// and returns the best reliability found for each clause.
///
/// Resolution only ever recombines literals of the seed, so a clause is kept
/// as a bit set over the distinct seed literals.
pub fn naive_saturate_all(
    seed: &[ReliableClause],
    merge: MergeMode,
    limits: &OracleLimits,
) -> Result<BTreeMap<Clause, Term>, OracleError> {
    let universe: Vec<Literal> = seed
        .iter()
        .flat_map(|rc| rc.clause().literals().iter().cloned())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if universe.len() > 64 {
        return Err(OracleError::ResourceLimit {
            what: "distinct literals",
            required: universe.len() as u64,
            cap: 64,
        });
    }
    let bit = |l: &Literal| 1u64 << universe.binary_search(l).expect("seed literal");
    // literals of the same atom, and those each literal resolves against
    let mut same_atom = vec![0u64; universe.len()];
    let mut clash = vec![0u64; universe.len()];
    for (x, l1) in universe.iter().enumerate() {
        for (y, l2) in universe.iter().enumerate() {
            if l1.atom == l2.atom {
                same_atom[x] |= 1 << y;
                if contradictory(&l1.label, &l2.label) {
                    clash[x] |= 1 << y;
                }
            }
        }
    }
    let max_label = |mut m: u64| {
        let mut rest = m;
        while rest != 0 {
            let group = m & same_atom[rest.trailing_zeros() as usize];
            // literals are sorted by atom then label, so the top bit wins
            let keep = 1u64 << (63 - group.leading_zeros());
            m = (m & !group) | keep;
            rest &= !group;
        }
        m
    };

    let mut rels: Vec<Term> = Vec::new();
    let intern = |t: Term, rels: &mut Vec<Term>| match rels.iter().position(|r| *r == t) {
        Some(k) => k,
        None => {
            rels.push(t);
            rels.len() - 1
        }
    };
    let mut all: Vec<(u64, usize)> = Vec::new();
    let mut seen: HashSet<(u64, usize)> = HashSet::new();
    for rc in seed {
        let mask = rc.clause().literals().iter().fold(0, |m, l| m | bit(l));
        let pair = (mask, intern(rc.reliability().clone(), &mut rels));
        if seen.insert(pair) {
            all.push(pair);
        }
    }

    let mut memo: HashMap<(usize, usize, usize, usize), usize> = HashMap::new();
    let mut steps = 0usize;
    let mut next = 0;
    while next < all.len() {
        let mut fresh = Vec::new();
        let (m2, a2) = all[next];
        for &(m1, a1) in &all[..next] {
            let mut lits1 = m1;
            while lits1 != 0 {
                let x = lits1.trailing_zeros() as usize;
                lits1 &= lits1 - 1;
                let mut partners = clash[x] & m2;
                while partners != 0 {
                    let y = partners.trailing_zeros() as usize;
                    partners &= partners - 1;
                    let a3 = *memo.entry((a1, a2, x, y)).or_insert_with(|| {
                        let (b1, b2) = (&universe[x].label, &universe[y].label);
                        let t = rels[a1].meet(&rels[a2]).meet(&b1.meet(b2).negate()).meet(&b1.join(b2));
                        intern(t, &mut rels)
                    });
                    let mut m3 = (m1 & !(1 << x)) | (m2 & !(1 << y));
                    if merge == MergeMode::MaxLabel {
                        m3 = max_label(m3);
                    }
                    if !seen.insert((m3, a3)) {
                        continue;
                    }
                    steps += 1;
                    if steps > limits.max_steps {
                        return Err(OracleError::ResourceLimit {
                            what: "closure steps",
                            required: steps as u64,
                            cap: limits.max_steps as u64,
                        });
                    }
                    fresh.push((m3, a3));
                }
            }
        }
        all.extend(fresh);
        next += 1;
    }

    let mut best: BTreeMap<u64, usize> = BTreeMap::new();
    for (m, a) in all {
        let b = best.entry(m).or_insert(a);
        if rels[a] > rels[*b] {
            *b = a;
        }
    }
    Ok(best
        .into_iter()
        .map(|(m, a)| {
            let lits = (0..universe.len())
                .filter(|&x| m >> x & 1 == 1)
                .map(|x| universe[x].clone());
            (Clause::new(lits), rels[a].clone())
        })
        .collect())
}

/// Outcome of comparing the engine with the oracles on one problem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Agreement {
    pub report: OracleReport,
    /// The engine found a refutation exactly when the set is unsatisfiable.
    pub verdict_agrees: bool,
    /// Clauses whose best reliability differs, as
    /// `(clause, engine, oracle)`; a missing side is `None`.
    pub mismatches: Vec<(Clause, Option<Term>, Option<Term>)>,
}

impl Agreement {
    pub fn agrees(&self) -> bool {
        self.verdict_agrees && self.mismatches.is_empty()
    }

    pub fn to_json_value(&self, sig: &Signature) -> Value {
        let show = |t: &Option<Term>| t.as_ref().map(|t| sig.format_term(t));
        json!({
            "agrees": self.agrees(),
            "verdict_agrees": self.verdict_agrees,
            "oracle": self.report.to_json_value(sig),
            "mismatches": self.mismatches.iter().map(|(c, e, o)| json!({
                "clause": c.show(sig).to_string(),
                "engine": show(e),
                "oracle": show(o),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Runs the α-strategy and both oracles on `seed` and compares: the verdict
/// against [`brute_unsat`], and every clause's reliability against
/// [`naive_saturate_all`].
pub fn max_reliability_agrees(
    sig: &Signature,
    seed: &[ReliableClause],
    merge: MergeMode,
    limits: &OracleLimits,
) -> Result<Agreement, OracleError> {
    let clauses: Vec<Clause> = seed.iter().map(|rc| rc.clause().clone()).collect();
    let mut report = brute_unsat(sig, &clauses, limits)?;
    let best = naive_saturate_all(seed, merge, limits)?;

    let config = SaturationConfig {
        strategy: Strategy::Alpha,
        merge,
        max_steps: limits.max_steps,
    };
    let store = match engine::prove(seed.iter().cloned(), &config) {
        Ok((store, _)) => store,
        Err((_, _)) => {
            return Err(OracleError::ResourceLimit {
                what: "engine steps",
                required: limits.max_steps as u64 + 1,
                cap: limits.max_steps as u64,
            })
        }
    };

    let refuted = store.clauses().any(|e| e.clause.clause().is_empty());
    let verdict_agrees = refuted == (report.verdict == Verdict::Unsat);

    let engine_best: BTreeMap<Clause, Term> = store
        .clauses()
        .map(|e| (e.clause.clause().clone(), e.clause.reliability().clone()))
        .collect();
    let keys: BTreeSet<&Clause> = engine_best.keys().chain(best.keys()).collect();
    let mismatches = keys
        .into_iter()
        .filter_map(|c| {
            let (e, o) = (engine_best.get(c), best.get(c));
            (e != o).then(|| (c.clone(), e.cloned(), o.cloned()))
        })
        .collect();

    report.max_reliability = Some(best);
    Ok(Agreement {
        report,
        verdict_agrees,
        mismatches,
    })
}
