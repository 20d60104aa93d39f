use std::cmp::Ordering;
use std::fmt;

use super::term::{Generator, Hedge, HedgeClass, Term};
use super::AlgebraError;

/// A named hedge as declared in a signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HedgeSymbol {
    pub name: String,
    pub hedge: Hedge,
}

/// Configuration of the truth domain: the hedge classes with their strength
/// orders, and the bound on hedge-string length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    positive: Vec<String>,
    negative: Vec<String>,
    max_depth: usize,
}

impl Signature {
    /// Builds a signature from hedge names listed in ascending strength.
    pub fn new<S: AsRef<str>>(positive: &[S], negative: &[S], max_depth: i64) -> Result<Signature, AlgebraError> {
        if max_depth < 0 {
            return Err(AlgebraError::NegativeDepth(max_depth));
        }
        let positive: Vec<String> = positive.iter().map(|s| s.as_ref().to_owned()).collect();
        let negative: Vec<String> = negative.iter().map(|s| s.as_ref().to_owned()).collect();
        if positive.len() > u8::MAX as usize || negative.len() > u8::MAX as usize {
            return Err(AlgebraError::TooManyHedges);
        }

        let mut seen: Vec<&str> = Vec::new();
        for name in positive.iter().chain(&negative) {
            if !is_identifier(name) {
                return Err(AlgebraError::InvalidHedgeName(name.clone()));
            }
            if Generator::from_name(name).is_some() {
                return Err(AlgebraError::ReservedName(name.clone()));
            }
            if seen.contains(&name.as_str()) {
                return Err(AlgebraError::DuplicateHedgeName(name.clone()));
            }
            seen.push(name);
        }

        Ok(Signature {
            positive,
            negative,
            max_depth: max_depth as usize,
        })
    }

    /// The four-hedge signature used throughout the test-suite:
    /// `H+ = V < M`, `H- = P < L` (ascending strength), depth 2.
    pub fn standard() -> Signature {
        Signature::new(&["V", "M"], &["P", "L"], 2).expect("standard signature is valid")
    }

    /// [`Signature::standard`] with a different depth bound.
    pub fn standard_with_depth(max_depth: usize) -> Signature {
        Signature {
            max_depth,
            ..Signature::standard()
        }
    }

    pub fn max_depth(&self) -> usize {
        self.max_depth
    }

    /// Positive hedge names in ascending strength.
    pub fn positive_names(&self) -> &[String] {
        &self.positive
    }

    /// Negative hedge names in ascending strength.
    pub fn negative_names(&self) -> &[String] {
        &self.negative
    }

    pub fn hedge_count(&self) -> usize {
        self.positive.len() + self.negative.len()
    }

    pub fn hedges(&self) -> impl Iterator<Item = HedgeSymbol> + '_ {
        let pos = self.positive.iter().enumerate().map(|(i, n)| HedgeSymbol {
            name: n.clone(),
            hedge: Hedge::positive(i as u8 + 1),
        });
        let neg = self.negative.iter().enumerate().map(|(i, n)| HedgeSymbol {
            name: n.clone(),
            hedge: Hedge::negative(i as u8 + 1),
        });
        pos.chain(neg)
    }

    pub fn hedge_name(&self, hedge: Hedge) -> Option<&str> {
        let names = match hedge.class {
            HedgeClass::Positive => &self.positive,
            HedgeClass::Negative => &self.negative,
        };
        names.get((hedge.strength as usize).checked_sub(1)?).map(String::as_str)
    }

    pub fn hedge_by_name(&self, name: &str) -> Option<Hedge> {
        self.hedges().find(|s| s.name == name).map(|s| s.hedge)
    }

    /// Closed form of the domain size in the free-term model.
    pub fn domain_size(&self) -> usize {
        let h = self.hedge_count();
        let strings: usize = (0..=self.max_depth).map(|i| h.pow(i as u32)).sum();
        2 * strings + 3
    }

    /// Checks that `term` is well-formed under this signature.
    pub fn check(&self, term: &Term) -> Result<(), AlgebraError> {
        if term.depth() > self.max_depth {
            return Err(AlgebraError::MalformedTerm(format!(
                "hedge string of length {} exceeds max depth {}",
                term.depth(),
                self.max_depth
            )));
        }
        if term.depth() > 0 && !term.generator().accepts_hedges() {
            return Err(AlgebraError::MalformedTerm(format!(
                "{} does not accept hedges",
                term.generator().name()
            )));
        }
        if let Some(h) = term.hedges().iter().find(|h| self.hedge_name(**h).is_none()) {
            return Err(AlgebraError::MalformedTerm(format!("unknown hedge {h:?}")));
        }
        Ok(())
    }

    /// Total order on well-formed terms.
    pub fn compare(&self, x: &Term, y: &Term) -> Result<Ordering, AlgebraError> {
        self.check(x)?;
        self.check(y)?;
        Ok(x.cmp(y))
    }

    /// Every well-formed term in strictly ascending order, from `⊥` to `⊤`.
    pub fn enumerate(&self) -> Vec<Term> {
        let hedges: Vec<Hedge> = self.hedges().map(|s| s.hedge).collect();
        let mut terms = vec![Term::bottom(), Term::w(), Term::top()];
        for generator in [Generator::False, Generator::True] {
            let mut layer = vec![Term::from(generator)];
            for depth in 0..=self.max_depth {
                terms.extend(layer.iter().cloned());
                if depth == self.max_depth {
                    break;
                }
                layer = layer
                    .iter()
                    .flat_map(|t| hedges.iter().map(move |&h| t.apply(h)))
                    .collect();
            }
        }
        terms.sort();
        terms
    }

    /// Parses a term spelled as hedge names (outermost first) followed by a
    /// generator name, e.g. `VMTrue`. Hedge names are matched longest-first
    /// with backtracking.
    pub fn parse_term(&self, text: &str) -> Result<Term, AlgebraError> {
        let mut names: Vec<(&str, Hedge)> = self
            .positive
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), Hedge::positive(i as u8 + 1)))
            .chain(
                self.negative
                    .iter()
                    .enumerate()
                    .map(|(i, n)| (n.as_str(), Hedge::negative(i as u8 + 1))),
            )
            .collect();
        names.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then(a.0.cmp(b.0)));

        let mut hedges = Vec::new();
        let generator =
            split_hedges(text, &names, &mut hedges).ok_or_else(|| AlgebraError::UnknownToken(text.to_owned()))?;
        if hedges.len() > self.max_depth {
            return Err(AlgebraError::DepthExceeded {
                term: text.to_owned(),
                max_depth: self.max_depth,
            });
        }
        if !hedges.is_empty() && !generator.accepts_hedges() {
            return Err(AlgebraError::HedgedFixedPoint(text.to_owned()));
        }
        Ok(Term::new(generator, &hedges))
    }

    pub fn format_term(&self, term: &Term) -> String {
        self.show(term).to_string()
    }

    /// Display adapter spelling `term` with this signature's hedge names.
    pub fn show<'a>(&'a self, term: &'a Term) -> ShowTerm<'a> {
        ShowTerm { sig: self, term }
    }
}

impl Default for Signature {
    fn default() -> Signature {
        Signature::standard()
    }
}

fn split_hedges(text: &str, names: &[(&str, Hedge)], out: &mut Vec<Hedge>) -> Option<Generator> {
    if let Some(g) = Generator::from_name(text) {
        return Some(g);
    }
    for &(name, hedge) in names {
        if let Some(rest) = text.strip_prefix(name) {
            out.push(hedge);
            if let Some(g) = split_hedges(rest, names, out) {
                return Some(g);
            }
            out.pop();
        }
    }
    None
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub struct ShowTerm<'a> {
    sig: &'a Signature,
    term: &'a Term,
}

impl fmt::Display for ShowTerm<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &h in self.term.hedges() {
            match self.sig.hedge_name(h) {
                Some(name) => f.write_str(name)?,
                None => write!(f, "<{h:?}>")?,
            }
        }
        f.write_str(self.term.generator().name())
    }
}
