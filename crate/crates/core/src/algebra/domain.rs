use std::collections::HashMap;

use super::{AlgebraError, Signature, Term};

/// Which terms take part in index arithmetic for the Łukasiewicz operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Indexing {
    /// All terms, `⊥ = 0` through `⊤ = N₀`.
    Full,
    /// Only terms rooted at `True`/`False`; `⊥`, `W` and `⊤` are skipped.
    Hedged,
}

/// Extended t-norms and t-conorms on the index set `0..=n0`.
pub mod extended {
    pub fn godel_tnorm(m: usize, n: usize) -> usize {
        m.min(n)
    }

    pub fn godel_tconorm(m: usize, n: usize) -> usize {
        m.max(n)
    }

    pub fn lukasiewicz_tnorm(m: usize, n: usize, n0: usize) -> usize {
        (m + n).saturating_sub(n0)
    }

    pub fn lukasiewicz_tconorm(m: usize, n: usize, n0: usize) -> usize {
        (m + n).min(n0)
    }

    /// The t-conorm induced by a t-norm: `S(m, n) = N₀ - T(N₀ - n, N₀ - m)`.
    pub fn dual(tnorm: impl Fn(usize, usize) -> usize, m: usize, n: usize, n0: usize) -> usize {
        n0 - tnorm(n0 - n, n0 - m)
    }
}

/// The enumerated truth domain of a signature with its index bijection.
#[derive(Clone, Debug)]
pub struct Domain {
    signature: Signature,
    terms: Vec<Term>,
    index: HashMap<Term, usize>,
    hedged: Vec<Term>,
    hedged_index: HashMap<Term, usize>,
}

impl Domain {
    pub fn new(signature: Signature) -> Domain {
        let terms = signature.enumerate();
        let index = terms.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let hedged: Vec<Term> = terms
            .iter()
            .filter(|t| t.generator().accepts_hedges())
            .cloned()
            .collect();
        let hedged_index = hedged.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        Domain {
            signature,
            terms,
            index,
            hedged,
            hedged_index,
        }
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn table(&self, indexing: Indexing) -> (&[Term], &HashMap<Term, usize>) {
        match indexing {
            Indexing::Full => (&self.terms, &self.index),
            Indexing::Hedged => (&self.hedged, &self.hedged_index),
        }
    }

    /// Largest index `N₀` under the given indexing.
    pub fn top_index(&self, indexing: Indexing) -> usize {
        self.table(indexing).0.len() - 1
    }

    pub fn index_of(&self, term: &Term, indexing: Indexing) -> Result<usize, AlgebraError> {
        self.table(indexing)
            .1
            .get(term)
            .copied()
            .ok_or_else(|| AlgebraError::OutsideIndexing(self.signature.format_term(term)))
    }

    pub fn term_at(&self, index: usize, indexing: Indexing) -> Option<&Term> {
        self.table(indexing).0.get(index)
    }

    fn lift(
        &self,
        x: &Term,
        y: &Term,
        indexing: Indexing,
        op: impl Fn(usize, usize, usize) -> usize,
    ) -> Result<Term, AlgebraError> {
        let n0 = self.top_index(indexing);
        let m = self.index_of(x, indexing)?;
        let n = self.index_of(y, indexing)?;
        Ok(self.table(indexing).0[op(m, n, n0)].clone())
    }

    /// `T_L(m, n) = max(0, m + n - N₀)` on indices.
    pub fn luk_tnorm(&self, x: &Term, y: &Term, indexing: Indexing) -> Result<Term, AlgebraError> {
        self.lift(x, y, indexing, extended::lukasiewicz_tnorm)
    }

    /// `S_L(m, n) = min(m + n, N₀)` on indices.
    pub fn luk_tconorm(&self, x: &Term, y: &Term, indexing: Indexing) -> Result<Term, AlgebraError> {
        self.lift(x, y, indexing, extended::lukasiewicz_tconorm)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_domain() -> Domain {
        Domain::new(Signature::new(&["More"], &["Less"], 1).unwrap())
    }

    #[test]
    fn hedged_indexing_matches_six_value_chain() {
        let d = example_domain();
        let sig = d.signature().clone();
        let names: Vec<String> = (0..=d.top_index(Indexing::Hedged))
            .map(|i| sig.format_term(d.term_at(i, Indexing::Hedged).unwrap()))
            .collect();
        assert_eq!(
            names,
            ["MoreFalse", "False", "LessFalse", "LessTrue", "True", "MoreTrue"]
        );
    }

    #[test]
    fn lukasiewicz_on_six_values() {
        let d = example_domain();
        let sig = d.signature();
        let t = |s: &str| sig.parse_term(s).unwrap();
        assert_eq!(
            d.luk_tconorm(&t("LessFalse"), &t("False"), Indexing::Hedged).unwrap(),
            t("LessTrue")
        );
        // max(0, 5 + 4 - 5) = 4
        assert_eq!(
            d.luk_tnorm(&t("MoreTrue"), &t("True"), Indexing::Hedged).unwrap(),
            t("True")
        );
        assert!(matches!(
            d.luk_tnorm(&Term::w(), &t("True"), Indexing::Hedged),
            Err(AlgebraError::OutsideIndexing(_))
        ));
    }

    #[test]
    fn lukasiewicz_boundaries_full() {
        let d = Domain::new(Signature::standard());
        for x in d.terms() {
            assert_eq!(&d.luk_tnorm(x, &Term::top(), Indexing::Full).unwrap(), x);
            assert_eq!(&d.luk_tconorm(x, &Term::bottom(), Indexing::Full).unwrap(), x);
        }
    }

    #[test]
    fn index_reflection_is_negation() {
        let d = Domain::new(Signature::standard());
        let n0 = d.top_index(Indexing::Full);
        for (i, x) in d.terms().iter().enumerate() {
            assert_eq!(d.term_at(n0 - i, Indexing::Full), Some(&x.negate()));
        }
    }
}
