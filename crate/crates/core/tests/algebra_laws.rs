mod common;

use std::cmp::Ordering;

use lsha::algebra::{extended, Domain, Indexing, Signature, Term};
use proptest::prelude::*;

fn sig() -> Signature {
    Signature::standard()
}

fn arbitrary_signature() -> impl Strategy<Value = Signature> {
    let names = ["V", "M", "X", "P", "L", "Q"];
    (0usize..=3, 0usize..=3, 0i64..=3)
        .prop_map(move |(p, n, d)| Signature::new(&names[..p], &names[3..3 + n], d).unwrap())
}

proptest! {
    #[test]
    fn order_is_total_and_transitive(x in common::any_term(&sig()), y in common::any_term(&sig()), z in common::any_term(&sig())) {
        let xy = x.cmp(&y);
        prop_assert_eq!(xy.reverse(), y.cmp(&x));
        prop_assert_eq!(xy == Ordering::Equal, x == y);
        if x <= y && y <= z {
            prop_assert!(x <= z);
        }
    }

    #[test]
    fn lattice_laws(x in common::any_term(&sig()), y in common::any_term(&sig()), z in common::any_term(&sig())) {
        prop_assert_eq!(x.meet(&y), y.meet(&x));
        prop_assert_eq!(x.join(&y), y.join(&x));
        prop_assert_eq!(x.meet(&y.meet(&z)), x.meet(&y).meet(&z));
        prop_assert_eq!(x.join(&y.join(&z)), x.join(&y).join(&z));
        prop_assert_eq!(x.meet(&y.join(&z)), x.meet(&y).join(&x.meet(&z)));
        prop_assert_eq!(x.join(&y.meet(&z)), x.join(&y).meet(&x.join(&z)));
        prop_assert_eq!(x.meet(&x.join(&y)), x.clone());
        prop_assert_eq!(x.join(&x.meet(&y)), x.clone());
    }

    #[test]
    fn negation_laws(x in common::any_term(&sig()), y in common::any_term(&sig())) {
        prop_assert_eq!(x.negate().negate(), x.clone());
        prop_assert_eq!(x.meet(&y).negate(), x.negate().join(&y.negate()));
        prop_assert_eq!(x.join(&y).negate(), x.negate().meet(&y.negate()));
        prop_assert_eq!(x.cmp(&y), y.negate().cmp(&x.negate()));
        prop_assert_eq!(x.is_true(), x.negate().is_false());
    }

    #[test]
    fn term_codec_round_trips(x in common::any_term(&sig())) {
        let s = sig();
        let text = s.format_term(&x);
        prop_assert_eq!(s.parse_term(&text).unwrap(), x);
        prop_assert_eq!(s.format_term(&s.parse_term(&text).unwrap()), text);
    }

    #[test]
    fn enumeration_matches_size_and_order(s in arbitrary_signature()) {
        let terms = s.enumerate();
        prop_assert_eq!(terms.len(), s.domain_size());
        prop_assert!(terms.windows(2).all(|w| w[0] < w[1]));
        prop_assert_eq!(terms.first(), Some(&Term::bottom()));
        prop_assert_eq!(terms.last(), Some(&Term::top()));
        // negation is the mirror image of the chain
        let n = terms.len();
        for (i, t) in terms.iter().enumerate() {
            prop_assert_eq!(&t.negate(), &terms[n - 1 - i]);
            prop_assert!(s.check(t).is_ok());
            prop_assert_eq!(&s.parse_term(&s.format_term(t)).unwrap(), t);
        }
    }

    #[test]
    fn lukasiewicz_axioms(x in common::any_term(&sig()), y in common::any_term(&sig()), z in common::any_term(&sig())) {
        let d = Domain::new(sig());
        let full = Indexing::Full;
        let top = d.term_at(d.top_index(full), full).unwrap().clone();
        let t = |a: &Term, b: &Term| d.luk_tnorm(a, b, full).unwrap();
        let s = |a: &Term, b: &Term| d.luk_tconorm(a, b, full).unwrap();
        prop_assert_eq!(t(&x, &top), x.clone());
        prop_assert_eq!(s(&x, &Term::bottom()), x.clone());
        prop_assert_eq!(t(&x, &y), t(&y, &x));
        prop_assert_eq!(t(&x, &t(&y, &z)), t(&t(&x, &y), &z));
        prop_assert_eq!(s(&x, &s(&y, &z)), s(&s(&x, &y), &z));
        if y <= z {
            prop_assert!(t(&x, &y) <= t(&x, &z));
            prop_assert!(s(&x, &y) <= s(&x, &z));
        }
        // duality through negation, which reflects indices
        prop_assert_eq!(s(&x, &y), t(&x.negate(), &y.negate()).negate());
    }
}

#[test]
fn extended_norms_on_indices() {
    for n0 in [0usize, 1, 5, 12] {
        for m in 0..=n0 {
            for n in 0..=n0 {
                assert_eq!(
                    extended::dual(extended::godel_tnorm, m, n, n0),
                    extended::godel_tconorm(m, n)
                );
                assert_eq!(
                    extended::dual(|a, b| extended::lukasiewicz_tnorm(a, b, n0), m, n, n0),
                    extended::lukasiewicz_tconorm(m, n, n0)
                );
                assert_eq!(extended::lukasiewicz_tnorm(m, n0, n0), m);
                assert_eq!(extended::lukasiewicz_tconorm(m, 0, n0), m);
            }
        }
    }
}

#[test]
fn implication_is_residuated_in_the_boolean_corners() {
    // x → y = ¬x ∨ y; with crisp values it is classical implication
    let (f, t) = (Term::bottom(), Term::top());
    assert_eq!(f.implies(&f), t);
    assert_eq!(f.implies(&t), t);
    assert_eq!(t.implies(&f), f);
    assert_eq!(t.implies(&t), t);
}
