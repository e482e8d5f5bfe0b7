//! Free-word algebra laws (property-tested), the pinned expansion examples,
//! and the pullback-membership construction against a finite target.

use std::cmp::Ordering;

use num_bigint::BigInt;
use permuta_core::corpus;
use permuta_core::fq::Fq;
use permuta_core::group::cyclic_subgroup;
use permuta_core::magnus::{
    magnus_compare, magnus_expand, parse_word, pullback_membership, FreeGroupAlgebra, FreeGroupHom,
    FreeWord, Letter, Monomial,
};
use proptest::prelude::*;

fn letter_strategy(rank: u8) -> impl Strategy<Value = Letter> {
    (0..rank, any::<bool>()).prop_map(|(gen, inv)| Letter { gen, inv })
}

fn raw_word_strategy(rank: u8, max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(letter_strategy(rank), 0..=max_len)
}

proptest! {
    #[test]
    fn reduction_is_idempotent(letters in raw_word_strategy(3, 12)) {
        let w = FreeWord::reduce(3, letters.iter().copied());
        let again = FreeWord::reduce(3, w.letters().iter().copied());
        prop_assert_eq!(w, again);
    }

    #[test]
    fn word_times_inverse_reduces_to_identity(letters in raw_word_strategy(3, 12)) {
        let w = FreeWord::reduce(3, letters.iter().copied());
        prop_assert!(w.mul(&w.inverse()).unwrap().is_empty());
        prop_assert!(w.inverse().mul(&w).unwrap().is_empty());
    }

    #[test]
    fn product_inverse_reverses(
        a in raw_word_strategy(3, 8),
        b in raw_word_strategy(3, 8),
    ) {
        let u = FreeWord::reduce(3, a.iter().copied());
        let v = FreeWord::reduce(3, b.iter().copied());
        let lhs = u.mul(&v).unwrap().inverse();
        let rhs = v.inverse().mul(&u.inverse()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn comparison_is_antisymmetric(
        a in raw_word_strategy(2, 6),
        b in raw_word_strategy(2, 6),
    ) {
        let u = FreeWord::reduce(2, a.iter().copied());
        let v = FreeWord::reduce(2, b.iter().copied());
        let uv = magnus_compare(&u, &v).unwrap();
        let vu = magnus_compare(&v, &u).unwrap();
        prop_assert_eq!(uv, vu.reverse());
        prop_assert_eq!(uv == Ordering::Equal, u == v);
    }
}

#[test]
fn commutator_expansion_is_the_classical_one() {
    // [x1, x2] = 1 + (X1X2 - X2X1) + higher order
    let w = parse_word("x1 x2 x1^-1 x2^-1", Some(2)).unwrap();
    let e = magnus_expand(&w, 2).unwrap();
    assert_eq!(e.coefficient(&Monomial::one()), BigInt::from(1));
    assert_eq!(e.coefficient(&Monomial(vec![0, 1])), BigInt::from(1));
    assert_eq!(e.coefficient(&Monomial(vec![1, 0])), BigInt::from(-1));
    assert_eq!(e.coefficient(&Monomial(vec![0])), BigInt::from(0));
    assert_eq!(e.coefficient(&Monomial(vec![1])), BigInt::from(0));
}

#[test]
fn valuation_is_surjective_onto_sampled_words() {
    // v(1 * g) = g realizes any target word
    let f = FreeGroupAlgebra::new(2, Fq::new(5).unwrap());
    for s in ["1", "x1", "x2^-1 x1", "x1^3 x2^-2"] {
        let w = parse_word(s, Some(2)).unwrap();
        let a = f.from_terms([(w.clone(), 1)]).unwrap();
        assert_eq!(f.valuation(&a).unwrap(), w);
    }
}

#[test]
fn pullback_membership_into_s3() {
    // rho: x1 -> (1 2), x2 -> (1 2 3); M = A3 = <(1 2 3)>
    let g = corpus::symmetric_group(3).unwrap();
    let transposition = (0..6).find(|&x| g.element_order(x) == 2).unwrap();
    let three_cycle = (0..6).find(|&x| g.element_order(x) == 3).unwrap();
    let rho = FreeGroupHom {
        gen_images: vec![transposition, three_cycle],
    };
    let m = cyclic_subgroup(&g, three_cycle);
    let algebra = FreeGroupAlgebra::new(2, Fq::new(5).unwrap());

    // the identity maps into every subgroup containing the identity
    let unit = algebra.from_terms([(FreeWord::identity(2), 3)]).unwrap();
    assert!(pullback_membership(&algebra, &unit, &rho, &g, m.members()).unwrap());

    // v = x1 maps to the transposition, outside A3
    let a = algebra
        .from_terms([
            (parse_word("x1", Some(2)).unwrap(), 1),
            (parse_word("x1^2", Some(2)).unwrap(), 2),
        ])
        .unwrap();
    assert_eq!(
        algebra.valuation(&a).unwrap(),
        parse_word("x1", Some(2)).unwrap()
    );
    assert!(!pullback_membership(&algebra, &a, &rho, &g, m.members()).unwrap());

    // v = x2 maps to the 3-cycle inside A3
    let b = algebra
        .from_terms([
            (parse_word("x2", Some(2)).unwrap(), 1),
            (parse_word("x2 x1", Some(2)).unwrap(), 4),
        ])
        .unwrap();
    assert!(pullback_membership(&algebra, &b, &rho, &g, m.members()).unwrap());

    // a commutator word maps into the derived subgroup A3
    let c = algebra
        .from_terms([(parse_word("x1 x2 x1^-1 x2^-1", Some(2)).unwrap(), 2)])
        .unwrap();
    assert!(pullback_membership(&algebra, &c, &rho, &g, m.members()).unwrap());

    // zero element has no valuation
    let zero = permuta_core::magnus::KgElement::zero(2);
    assert!(matches!(
        pullback_membership(&algebra, &zero, &rho, &g, m.members()),
        Err(permuta_core::Error::ZeroElement)
    ));
}

#[test]
fn trivial_units_multiply_like_the_group() {
    // the trivial units K* x F form a subgroup: products of trivial units
    // are trivial units and the valuation is multiplicative on them
    let f = FreeGroupAlgebra::new(2, Fq::new(5).unwrap());
    let a = f
        .from_terms([(parse_word("x1 x2", Some(2)).unwrap(), 3)])
        .unwrap();
    let b = f
        .from_terms([(parse_word("x2^-1", Some(2)).unwrap(), 2)])
        .unwrap();
    let prod = f.multiply(&a, &b).unwrap();
    assert!(f.is_trivial_unit(&prod));
    assert_eq!(
        f.valuation(&prod).unwrap(),
        parse_word("x1", Some(2)).unwrap()
    );
    assert_eq!(prod.coeff(&parse_word("x1", Some(2)).unwrap()), 1); // 3*2 = 6 = 1 mod 5
}
