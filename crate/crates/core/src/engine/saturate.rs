use std::fmt;
use std::str::FromStr;

use rustc_hash::{FxHashMap, FxHashSet};

use super::compact::{universe_size, Bits, Rank, Universe};
use super::resolve::{resolvents, MergeMode, Resolvent};
use super::store::{ClauseId, ClauseStore, InferenceRecord, Insertion, VariantPolicy};
use super::{EngineError, ReliableClause};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Always fire the inference whose weaker premise is most reliable, and
    /// keep only the best variant of each clause.
    #[default]
    Alpha,
    /// Fire every inference in id order and keep every variant.
    Naive,
}

impl Strategy {
    pub fn policy(self) -> VariantPolicy {
        match self {
            Strategy::Alpha => VariantPolicy::KeepMaximal,
            Strategy::Naive => VariantPolicy::KeepAll,
        }
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Strategy, String> {
        match s {
            "alpha" => Ok(Strategy::Alpha),
            "naive" => Ok(Strategy::Naive),
            other => Err(format!("unknown strategy `{other}` (expected alpha or naive)")),
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Alpha => "alpha",
            Strategy::Naive => "naive",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SaturationConfig {
    pub strategy: Strategy,
    pub merge: MergeMode,
    /// Maximum number of clauses added by inference.
    pub max_steps: usize,
}

impl Default for SaturationConfig {
    fn default() -> SaturationConfig {
        SaturationConfig {
            strategy: Strategy::Alpha,
            merge: MergeMode::Off,
            max_steps: 100_000,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SaturationStats {
    /// Clauses added by inference.
    pub steps: usize,
    /// Candidate inferences generated.
    pub candidates: usize,
}

/// Saturates `store` in place with the configured strategy.
///
/// On [`EngineError::ResourceLimit`] the store holds the partial derivation.
pub fn saturate(store: &mut ClauseStore, config: &SaturationConfig) -> Result<SaturationStats, EngineError> {
    if store.policy() != config.strategy.policy() {
        return Err(EngineError::PolicyMismatch {
            strategy: config.strategy,
            policy: store.policy(),
        });
    }
    match universe_size(store.history().iter().map(|e| &e.clause)) {
        0..=64 => Run::<[u64; 1]>::new(store, config).go(config.strategy),
        65..=128 => Run::<[u64; 2]>::new(store, config).go(config.strategy),
        129..=256 => Run::<[u64; 4]>::new(store, config).go(config.strategy),
        _ => Run::<Box<[u64]>>::new(store, config).go(config.strategy),
    }
}

struct Entry<B> {
    bits: B,
    /// Literals that resolve against this clause.
    clash: B,
    rank: Rank,
    live: bool,
}

/// Saturation state mirrored in the compact encoding. Clause ids index
/// `clauses` (offset by one).
struct Run<'s, B> {
    store: &'s mut ClauseStore,
    universe: Universe<B>,
    merge: MergeMode,
    max_steps: usize,
    clauses: Vec<Entry<B>>,
    /// Best reliability per clause (alpha) or every reliability (naive).
    best: FxHashMap<B, Rank>,
    seen: FxHashSet<(B, Rank)>,
    stats: SaturationStats,
}

/// The next literal pair to try in a premise pair: `(x, y)` in literal
/// order, `x` from the first premise.
type Cursor = (usize, usize);

struct Found<B> {
    at: Cursor,
    bits: B,
    rank: Rank,
}

impl<'s, B: Bits> Run<'s, B> {
    fn new(store: &'s mut ClauseStore, config: &SaturationConfig) -> Run<'s, B> {
        let universe: Universe<B> = Universe::new(store.history().iter().map(|e| &e.clause));
        let mut run = Run {
            merge: config.merge,
            max_steps: config.max_steps,
            clauses: Vec::with_capacity(store.history().len()),
            best: FxHashMap::default(),
            seen: FxHashSet::default(),
            stats: SaturationStats::default(),
            universe,
            store,
        };
        let seed: Vec<(B, Rank, bool)> = run
            .store
            .history()
            .iter()
            .map(|e| {
                let bits = run.universe.encode(e.clause.clause());
                (
                    bits,
                    run.universe.rel_rank(e.clause.reliability()),
                    run.store.is_alive(e.id),
                )
            })
            .collect();
        for (bits, rank, live) in seed {
            run.push(bits, rank, live);
        }
        run
    }

    fn go(mut self, strategy: Strategy) -> Result<SaturationStats, EngineError> {
        match strategy {
            Strategy::Alpha => self.alpha()?,
            Strategy::Naive => self.naive()?,
        }
        Ok(self.stats)
    }

    fn push(&mut self, bits: B, rank: Rank, live: bool) {
        if live {
            let best = self.best.entry(bits.clone()).or_insert(rank);
            *best = (*best).max(rank);
            self.seen.insert((bits.clone(), rank));
        }
        let clash = self.universe.clash_mask(&bits);
        self.clauses.push(Entry {
            bits,
            clash,
            rank,
            live,
        });
    }

    fn entry(&self, id: usize) -> &Entry<B> {
        &self.clauses[id - 1]
    }

    fn redundant(&self, bits: &B, rank: Rank) -> bool {
        match self.store.policy() {
            VariantPolicy::KeepMaximal => self.best.get(bits).is_some_and(|&b| b >= rank),
            VariantPolicy::KeepAll => self.seen.contains(&(bits.clone(), rank)),
        }
    }

    /// Whether the live clauses `lo` and `hi` have a resolvable literal pair.
    fn resolvable(&self, lo: usize, hi: usize) -> bool {
        let (a, b) = (self.entry(lo), self.entry(hi));
        a.live && b.live && a.clash.intersects(&b.bits)
    }

    /// The first resolvent of `(p1, p2)` at or after `from` that the store
    /// would accept.
    fn next_resolvent(&mut self, p1: usize, p2: usize, from: Cursor) -> Option<Found<B>> {
        let (e1, e2) = (&self.clauses[p1 - 1], &self.clauses[p2 - 1]);
        let strength = e1.rank.min(e2.rank);
        for x in e1.bits.ones_from(from.0) {
            let start = if x == from.0 { from.1 } else { 0 };
            let partners = self.universe.clash(x);
            for y in e2
                .bits
                .ones_from(start)
                .filter(|&y| partners.words()[y / 64] >> (y % 64) & 1 == 1)
            {
                self.stats.candidates += 1;
                let factor = self.universe.factor(x, y).expect("clashing literals resolve");
                let bits = self.universe.conclusion(&e1.bits, x, &e2.bits, y, self.merge);
                let rank = factor.min(strength);
                if !self.redundant(&bits, rank) {
                    return Some(Found { at: (x, y), bits, rank });
                }
            }
        }
        None
    }

    /// Adds the resolvent found in `(p1, p2)` and returns its id.
    fn add(&mut self, p1: usize, p2: usize, found: Found<B>) -> Result<usize, EngineError> {
        if self.stats.steps >= self.max_steps {
            return Err(EngineError::ResourceLimit {
                max_steps: self.max_steps,
            });
        }
        let (l1, l2) = (self.universe.literal(found.at.0), self.universe.literal(found.at.1));
        let rec = InferenceRecord {
            premises: [ClauseId(p1), ClauseId(p2)],
            atom: l1.atom.clone(),
            b1: l1.label.clone(),
            b2: l2.label.clone(),
            conclusion: ClauseId(0),
        };
        let rc =
            ReliableClause::new_unchecked(self.universe.decode(&found.bits), self.universe.rel(found.rank).clone());
        let Insertion::Added { id, removed } = self.store.insert(rc, Some(rec)) else {
            unreachable!("redundancy is checked before adding");
        };
        debug_assert_eq!(id.0, self.clauses.len() + 1);
        for r in removed {
            self.clauses[r.0 - 1].live = false;
        }
        self.push(found.bits, found.rank, true);
        self.stats.steps += 1;
        Ok(id.0)
    }

    /// Fires inferences in order of the weaker premise's reliability, highest
    /// first; ties go to the smallest `(lo, hi)` premise ids and then to the
    /// literal pair order.
    ///
    /// `cursors[s][lo]` is the next partner `hi` and literal pair for the
    /// pairs `(lo, hi)` whose weaker premise has rank `s`. A pair passed over
    /// stays spent: premises never revive and redundancy only grows. A new
    /// clause is never stronger than its weaker premise, so after an
    /// insertion the scan resumes in the same rank from the first clause.
    fn alpha(&mut self) -> Result<(), EngineError> {
        let ranks = self.universe.rel_count();
        let mut cursors: Vec<Vec<(usize, Cursor)>> = vec![Vec::new(); ranks];
        let mut s = ranks;
        'ranks: while s > 0 {
            s -= 1;
            'restart: loop {
                let n = self.clauses.len();
                for cs in cursors.iter_mut() {
                    while cs.len() < n {
                        let lo = cs.len() + 1;
                        cs.push((lo + 1, (0, 0)));
                    }
                }
                for lo in 1..=n {
                    if !self.clauses[lo - 1].live {
                        continue;
                    }
                    let r_lo = self.clauses[lo - 1].rank as usize;
                    if r_lo < s {
                        continue;
                    }
                    let (mut hi, mut from) = cursors[s][lo - 1];
                    while hi <= n {
                        let r_hi = self.clauses[hi - 1].rank as usize;
                        if r_lo.min(r_hi) == s && self.resolvable(lo, hi) {
                            if let Some(found) = self.next_resolvent(lo, hi, from) {
                                cursors[s][lo - 1] = (hi, (found.at.0, found.at.1 + 1));
                                self.add(lo, hi, found)?;
                                continue 'restart;
                            }
                        }
                        hi += 1;
                        from = (0, 0);
                    }
                    cursors[s][lo - 1] = (hi, (0, 0));
                }
                continue 'ranks;
            }
        }
        Ok(())
    }

    /// Given-clause loop: each clause in id order against every earlier one.
    fn naive(&mut self) -> Result<(), EngineError> {
        let mut given = 0;
        while given < self.clauses.len() {
            given += 1;
            for other in 1..given {
                if !self.resolvable(other, given) {
                    continue;
                }
                let mut from = (0, 0);
                while let Some(found) = self.next_resolvent(other, given, from) {
                    from = (found.at.0, found.at.1 + 1);
                    self.add(other, given, found)?;
                }
            }
        }
        Ok(())
    }
}

/// An inference over the store whose conclusion has no live variant at
/// least as reliable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnsaturatedWitness {
    pub premises: [ClauseId; 2],
    pub resolvent: Resolvent,
}

/// Checks that every inference between live clauses concludes a clause that
/// already has a live variant with greater or equal reliability.
pub fn check_saturated(store: &ClauseStore, merge: MergeMode) -> Result<(), Box<UnsaturatedWitness>> {
    let live: Vec<_> = store.clauses().collect();
    for (k, a) in live.iter().enumerate() {
        for b in &live[k + 1..] {
            for (_, _, r) in resolvents(&a.clause, &b.clause, merge) {
                if store
                    .dominating(r.conclusion.clause(), r.conclusion.reliability())
                    .is_none()
                {
                    return Err(Box::new(UnsaturatedWitness {
                        premises: [a.id, b.id],
                        resolvent: r,
                    }));
                }
            }
        }
    }
    Ok(())
}
