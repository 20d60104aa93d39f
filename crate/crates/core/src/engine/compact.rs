//! Dense encoding used inside the saturation loops.
//!
//! Resolution never invents literals: a resolvent, merged or not, draws every
//! literal from its premises. So a clause is a bit set over the distinct
//! literals of the seed, numbered in literal order, and every derived
//! reliability is a meet of input reliabilities and per-label-pair factors,
//! which one sorted table covers.

use std::collections::BTreeSet;
use std::hash::Hash;

use super::resolve::{check_labels, MergeMode};
use super::ReliableClause;
use crate::algebra::Term;
use crate::logic::{Clause, Literal};

pub(crate) type Rank = u32;

/// A set of literal numbers.
pub(crate) trait Bits: Clone + Eq + Hash {
    fn zero(len: usize) -> Self;
    fn words(&self) -> &[u64];
    fn words_mut(&mut self) -> &mut [u64];

    fn insert(&mut self, x: usize) {
        self.words_mut()[x / 64] |= 1 << (x % 64);
    }

    fn remove(&mut self, x: usize) {
        self.words_mut()[x / 64] &= !(1 << (x % 64));
    }

    fn union_with(&mut self, other: &Self) {
        for (a, b) in self.words_mut().iter_mut().zip(other.words()) {
            *a |= b;
        }
    }

    fn intersects(&self, other: &Self) -> bool {
        self.words().iter().zip(other.words()).any(|(a, b)| a & b != 0)
    }

    /// Members in increasing order, starting at `from`.
    fn ones_from(&self, from: usize) -> Ones<'_> {
        let words = self.words();
        let k = from / 64;
        let word = words.get(k).map_or(0, |w| w & (!0u64 << (from % 64)));
        Ones { words, k, word }
    }
}

impl<const N: usize> Bits for [u64; N] {
    fn zero(len: usize) -> Self {
        debug_assert!(len <= 64 * N);
        [0; N]
    }

    fn words(&self) -> &[u64] {
        self
    }

    fn words_mut(&mut self) -> &mut [u64] {
        self
    }
}

impl Bits for Box<[u64]> {
    fn zero(len: usize) -> Self {
        vec![0; len.div_ceil(64)].into_boxed_slice()
    }

    fn words(&self) -> &[u64] {
        self
    }

    fn words_mut(&mut self) -> &mut [u64] {
        self
    }
}

pub(crate) struct Ones<'a> {
    words: &'a [u64],
    k: usize,
    word: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.word == 0 {
            self.k += 1;
            self.word = *self.words.get(self.k)?;
        }
        let bit = self.word.trailing_zeros() as usize;
        self.word &= self.word - 1;
        Some(self.k * 64 + bit)
    }
}

/// Number of distinct literals in `clauses`.
pub(crate) fn universe_size<'a>(clauses: impl IntoIterator<Item = &'a ReliableClause>) -> usize {
    clauses
        .into_iter()
        .flat_map(|rc| rc.clause().literals())
        .collect::<BTreeSet<_>>()
        .len()
}

pub(crate) struct Universe<B> {
    literals: Vec<Literal>,
    /// Atom number of each literal; equal atoms are adjacent.
    atom: Vec<u32>,
    rels: Vec<Term>,
    /// Rank of `¬(b₁ ∧ b₂) ∧ (b₁ ∨ b₂)` for each resolvable literal pair.
    factor: Vec<Option<Rank>>,
    /// Literals each literal resolves against.
    clash: Vec<B>,
}

impl<B: Bits> Universe<B> {
    /// Tables covering every clause derivable from `clauses`.
    pub(crate) fn new<'a>(clauses: impl IntoIterator<Item = &'a ReliableClause>) -> Universe<B> {
        let mut literals = BTreeSet::new();
        let mut rels = BTreeSet::new();
        for rc in clauses {
            rels.insert(rc.reliability().clone());
            literals.extend(rc.clause().literals().iter().cloned());
        }
        let literals: Vec<Literal> = literals.into_iter().collect();
        let n = literals.len();
        let mut atom: Vec<u32> = Vec::with_capacity(n);
        for (x, l) in literals.iter().enumerate() {
            let a = match atom.last() {
                Some(&prev) if literals[x - 1].atom == l.atom => prev,
                Some(&prev) => prev + 1,
                None => 0,
            };
            atom.push(a);
        }

        let mut factors = vec![None; n * n];
        let mut clash = vec![B::zero(n); n];
        for x in 0..n {
            for y in 0..n {
                let (b1, b2) = (&literals[x].label, &literals[y].label);
                if atom[x] == atom[y] && check_labels(b1, b2).is_ok() {
                    let f = b1.meet(b2).negate().meet(&b1.join(b2));
                    factors[x * n + y] = Some(f.clone());
                    rels.insert(f);
                    clash[x].insert(y);
                }
            }
        }
        let rels: Vec<Term> = rels.into_iter().collect();
        let factor = factors
            .into_iter()
            .map(|f| f.map(|t| rels.binary_search(&t).unwrap() as Rank))
            .collect();
        Universe {
            literals,
            atom,
            rels,
            factor,
            clash,
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.literals.len()
    }

    pub(crate) fn rel_count(&self) -> usize {
        self.rels.len()
    }

    pub(crate) fn rel_rank(&self, t: &Term) -> Rank {
        self.rels.binary_search(t).expect("reliability in table") as Rank
    }

    pub(crate) fn rel(&self, rank: Rank) -> &Term {
        &self.rels[rank as usize]
    }

    pub(crate) fn literal(&self, x: usize) -> &Literal {
        &self.literals[x]
    }

    pub(crate) fn encode(&self, c: &Clause) -> B {
        let mut bits = B::zero(self.len());
        for l in c.literals() {
            bits.insert(self.literals.binary_search(l).expect("literal in table"));
        }
        bits
    }

    pub(crate) fn decode(&self, bits: &B) -> Clause {
        Clause::new(bits.ones_from(0).map(|x| self.literals[x].clone()))
    }

    /// Literals resolving against some member of `bits`.
    pub(crate) fn clash_mask(&self, bits: &B) -> B {
        let mut mask = B::zero(self.len());
        for x in bits.ones_from(0) {
            mask.union_with(&self.clash[x]);
        }
        mask
    }

    pub(crate) fn clash(&self, x: usize) -> &B {
        &self.clash[x]
    }

    /// Reliability factor of resolving literal `x` against `y`.
    pub(crate) fn factor(&self, x: usize, y: usize) -> Option<Rank> {
        self.factor[x * self.len() + y]
    }

    /// `c1 \ {x} ∪ c2 \ {y}`; with [`MergeMode::MaxLabel`] only the largest
    /// label per atom is kept.
    pub(crate) fn conclusion(&self, c1: &B, x: usize, c2: &B, y: usize, merge: MergeMode) -> B {
        let mut out = c1.clone();
        out.remove(x);
        let mut rest = c2.clone();
        rest.remove(y);
        out.union_with(&rest);
        if merge == MergeMode::MaxLabel {
            let members: Vec<usize> = out.ones_from(0).collect();
            for w in members.windows(2) {
                if self.atom[w[0]] == self.atom[w[1]] {
                    out.remove(w[0]);
                }
            }
        }
        out
    }
}
