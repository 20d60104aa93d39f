use std::cmp::Ordering;

use smallvec::SmallVec;

/// The five generators of the truth domain, declared in their fixed order
/// `⊥ < False < W < True < ⊤`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Bottom,
    False,
    W,
    True,
    Top,
}

impl Generator {
    pub const ALL: [Generator; 5] = [
        Generator::Bottom,
        Generator::False,
        Generator::W,
        Generator::True,
        Generator::Top,
    ];

    /// Canonical ASCII spelling used by the term syntax.
    pub fn name(self) -> &'static str {
        match self {
            Generator::Bottom => "Bot",
            Generator::False => "False",
            Generator::W => "W",
            Generator::True => "True",
            Generator::Top => "Top",
        }
    }

    pub fn from_name(name: &str) -> Option<Generator> {
        match name {
            "Bot" | "⊥" => Some(Generator::Bottom),
            "False" => Some(Generator::False),
            "W" => Some(Generator::W),
            "True" => Some(Generator::True),
            "Top" | "⊤" => Some(Generator::Top),
            _ => None,
        }
    }

    /// Only `True` and `False` accept hedges; the other three are fixed points.
    pub fn accepts_hedges(self) -> bool {
        matches!(self, Generator::True | Generator::False)
    }

    pub fn opposite(self) -> Generator {
        match self {
            Generator::Bottom => Generator::Top,
            Generator::False => Generator::True,
            Generator::W => Generator::W,
            Generator::True => Generator::False,
            Generator::Top => Generator::Bottom,
        }
    }

    /// Direction of the generator relative to `W`.
    fn direction(self) -> i8 {
        match self {
            Generator::Bottom | Generator::False => -1,
            Generator::W => 0,
            Generator::True | Generator::Top => 1,
        }
    }
}

/// Membership of a hedge in `H+` or `H-`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HedgeClass {
    Positive,
    Negative,
}

impl HedgeClass {
    fn sign(self) -> i8 {
        match self {
            HedgeClass::Positive => 1,
            HedgeClass::Negative => -1,
        }
    }
}

/// A hedge, identified by its class and its strength rank within the class
/// (`1` is the weakest). Names live in the [`Signature`](super::Signature).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hedge {
    pub class: HedgeClass,
    pub strength: u8,
}

impl Hedge {
    pub fn positive(strength: u8) -> Hedge {
        Hedge {
            class: HedgeClass::Positive,
            strength,
        }
    }

    pub fn negative(strength: u8) -> Hedge {
        Hedge {
            class: HedgeClass::Negative,
            strength,
        }
    }
}

pub(crate) type HedgeString = SmallVec<[Hedge; 4]>;

/// A linguistic truth value: a generator with a hedge string applied to it.
///
/// Hedges are stored outermost-first, so `VMTrue` is `[V, M]` over `True`
/// with `M` applied first. Terms carry their own ordering information, so
/// comparison and the lattice operations need no signature; a
/// [`Signature`](super::Signature) is only needed to check well-formedness
/// and to spell terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    generator: Generator,
    hedges: HedgeString,
}

impl Term {
    pub fn new(generator: Generator, hedges_outermost_first: &[Hedge]) -> Term {
        Term {
            generator,
            hedges: hedges_outermost_first.iter().copied().collect(),
        }
    }

    pub fn bottom() -> Term {
        Generator::Bottom.into()
    }

    pub fn falsity() -> Term {
        Generator::False.into()
    }

    pub fn w() -> Term {
        Generator::W.into()
    }

    pub fn truth() -> Term {
        Generator::True.into()
    }

    pub fn top() -> Term {
        Generator::Top.into()
    }

    pub fn generator(&self) -> Generator {
        self.generator
    }

    /// Hedges, outermost first.
    pub fn hedges(&self) -> &[Hedge] {
        &self.hedges
    }

    pub fn depth(&self) -> usize {
        self.hedges.len()
    }

    /// Applies `hedge` on the outside of the string, `h(x)`.
    pub fn apply(&self, hedge: Hedge) -> Term {
        let mut hedges = HedgeString::with_capacity(self.hedges.len() + 1);
        hedges.push(hedge);
        hedges.extend_from_slice(&self.hedges);
        Term {
            generator: self.generator,
            hedges,
        }
    }

    /// The contradictory element: same hedge string over the opposite generator.
    pub fn negate(&self) -> Term {
        Term {
            generator: self.generator.opposite(),
            hedges: self.hedges.clone(),
        }
    }

    /// Gödel conjunction.
    pub fn meet(&self, other: &Term) -> Term {
        if self <= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Gödel disjunction.
    pub fn join(&self, other: &Term) -> Term {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// `¬self ∨ other`.
    pub fn implies(&self, other: &Term) -> Term {
        self.negate().join(other)
    }

    pub fn is_w(&self) -> bool {
        self.generator == Generator::W
    }

    /// Strictly above `W`.
    pub fn is_true(&self) -> bool {
        self.generator > Generator::W
    }

    /// Strictly below `W`.
    pub fn is_false(&self) -> bool {
        self.generator < Generator::W
    }
}

impl From<Generator> for Term {
    fn from(generator: Generator) -> Term {
        Term {
            generator,
            hedges: HedgeString::new(),
        }
    }
}

impl Ord for Term {
    fn cmp(&self, other: &Term) -> Ordering {
        let tier = self.generator.cmp(&other.generator);
        if tier != Ordering::Equal || !self.generator.accepts_hedges() {
            return tier;
        }

        // Walk both strings from the innermost hedge outwards, tracking the
        // direction in which the last applied hedge moved the term. At the
        // first position where they differ the rest of the strings cannot
        // change the outcome.
        let mut direction = self.generator.direction();
        let mut lhs = self.hedges.iter().rev();
        let mut rhs = other.hedges.iter().rev();
        loop {
            match (lhs.next(), rhs.next()) {
                (None, None) => return Ordering::Equal,
                (Some(h), Some(k)) if h == k => direction *= h.class.sign(),
                (h, k) => {
                    let step = |hedge: Option<&Hedge>| hedge.map_or(0, |h| h.class.sign() * direction);
                    let (dh, dk) = (step(h), step(k));
                    if dh != dk {
                        return dh.cmp(&dk);
                    }
                    // Same class, different strength: the stronger hedge goes
                    // further in the shared direction.
                    let (h, k) = (h.expect("nonzero step"), k.expect("nonzero step"));
                    let by_strength = h.strength.cmp(&k.strength);
                    return if dh > 0 { by_strength } else { by_strength.reverse() };
                }
            }
        }
    }
}

impl PartialOrd for Term {
    fn partial_cmp(&self, other: &Term) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
