//! Group-algebra invariants beyond the unit tests: support laws, the
//! unit-lifting law in exhaustively checkable algebras, Wedderburn center
//! dimensions, and radical membership examples.

use permuta_core::algebra::{
    center_dimension_of_semisimple_quotient, verify_lemma_6_4, GroupAlgebra,
};
use permuta_core::bitset::Bitset;
use permuta_core::corpus;
use permuta_core::fq::Fq;
use permuta_core::group::{subset_product, FiniteGroup};
use proptest::prelude::*;

fn sparse_element_strategy(order: usize, q: u8) -> impl Strategy<Value = Vec<(usize, u8)>> {
    prop::collection::vec((0..order, 0..q), 0..=order)
}

proptest! {
    #[test]
    fn support_laws_in_f3_s3(
        a in sparse_element_strategy(6, 3),
        b in sparse_element_strategy(6, 3),
    ) {
        let g = corpus::symmetric_group(3).unwrap();
        let ga = GroupAlgebra::new(&g, Fq::new(3).unwrap()).unwrap();
        let x = ga.from_coeffs(a);
        let y = ga.from_coeffs(b);
        let sum = ga.add(&x, &y).unwrap();
        let sup = |e: &permuta_core::AlgebraElement| {
            Bitset::from_indices(6, e.support())
        };
        // supp(x + y) ⊆ supp(x) ∪ supp(y)
        prop_assert!(sup(&sum).is_subset(&sup(&x).union(&sup(&y))));
        // supp(xy) ⊆ supp(x) · supp(y)
        let prod = ga.multiply(&x, &y).unwrap();
        if !x.is_zero() && !y.is_zero() {
            let pointwise = subset_product(&g, &sup(&x), &sup(&y));
            prop_assert!(sup(&prod).is_subset(&pointwise));
        } else {
            prop_assert!(prod.is_zero());
        }
    }

    #[test]
    fn addition_is_commutative_and_multiplication_associative_in_f2_d4(
        a in sparse_element_strategy(8, 2),
        b in sparse_element_strategy(8, 2),
        c in sparse_element_strategy(8, 2),
    ) {
        let g = corpus::dihedral_group(4).unwrap();
        let ga = GroupAlgebra::new(&g, Fq::new(2).unwrap()).unwrap();
        let (x, y, z) = (ga.from_coeffs(a), ga.from_coeffs(b), ga.from_coeffs(c));
        prop_assert_eq!(ga.add(&x, &y).unwrap(), ga.add(&y, &x).unwrap());
        let xy_z = ga.multiply(&ga.multiply(&x, &y).unwrap(), &z).unwrap();
        let x_yz = ga.multiply(&x, &ga.multiply(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(xy_z, x_yz);
        // distributivity
        let lhs = ga.multiply(&x, &ga.add(&y, &z).unwrap()).unwrap();
        let rhs = ga.add(&ga.multiply(&x, &y).unwrap(), &ga.multiply(&x, &z).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

/// Every element is a unit exactly when its class modulo the radical is a
/// unit of the quotient, checked by exhausting the whole algebra.
fn unit_lift_exhaustive(g: &FiniteGroup, q: usize) {
    let ga = GroupAlgebra::new(g, Fq::new(q).unwrap()).unwrap();
    let ideal = ga.jacobson_radical().unwrap();
    let n = ga.dim();
    let total = q.pow(n as u32);
    assert!(total <= 4096, "algebra too large for the exhaustive pass");
    let mut units = 0usize;
    let mut codes = vec![0u8; n];
    for step in 0..total {
        if step > 0 {
            for d in codes.iter_mut() {
                *d += 1;
                if (*d as usize) < q {
                    break;
                }
                *d = 0;
            }
        }
        let a = ga.from_coeffs(codes.iter().enumerate().map(|(i, &c)| (i, c)));
        let is_unit = ga.is_unit(&a).unwrap().is_some();
        let lifted = ga.unit_lift(&ideal, &a);
        match (is_unit, lifted) {
            (true, Ok(u)) => {
                units += 1;
                assert_eq!(u, a);
            }
            (false, Err(permuta_core::Error::NotUnitModRadical)) => {}
            (yes, out) => panic!("unit-lift mismatch: unit={yes}, lift={:?}", out.is_ok()),
        }
    }
    assert!(units > 0);
}

#[test]
fn unit_lifting_is_exhaustively_consistent() {
    unit_lift_exhaustive(&corpus::cyclic_group(2).unwrap(), 2);
    unit_lift_exhaustive(&corpus::cyclic_group(4).unwrap(), 2);
    unit_lift_exhaustive(&corpus::dihedral_group(2).unwrap(), 2);
    unit_lift_exhaustive(&corpus::cyclic_group(2).unwrap(), 3);
    unit_lift_exhaustive(&corpus::cyclic_group(3).unwrap(), 3);
    unit_lift_exhaustive(&corpus::symmetric_group(3).unwrap(), 2);
}

#[test]
fn every_preimage_of_the_unit_class_in_f2_c2_is_a_unit() {
    // classes mod J = span(1+g) are {0, 1+J}; the preimages of the unit
    // class are exactly 1 and g, both trivial units
    let g = corpus::cyclic_group(2).unwrap();
    let ga = GroupAlgebra::new(&g, Fq::new(2).unwrap()).unwrap();
    let ideal = ga.jacobson_radical().unwrap();
    let one = ga.one();
    let gg = ga.embed(1);
    assert_eq!(ga.unit_lift(&ideal, &one).unwrap(), one);
    assert_eq!(ga.unit_lift(&ideal, &gg).unwrap(), gg);
    let zero_class = ga.from_coeffs([(0, 1), (1, 1)]);
    assert!(matches!(
        ga.unit_lift(&ideal, &zero_class),
        Err(permuta_core::Error::NotUnitModRadical)
    ));
}

#[test]
fn random_unit_classes_lift_in_f3_s3() {
    let g = corpus::symmetric_group(3).unwrap();
    let ga = GroupAlgebra::new(&g, Fq::new(3).unwrap()).unwrap();
    let ideal = ga.jacobson_radical().unwrap();
    // deterministic pseudo-random sweep
    let mut state = 1u64;
    let mut lifted = 0;
    for _ in 0..200 {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        let coeffs: Vec<(usize, u8)> = (0..6)
            .map(|i| (i, ((state >> (8 * i)) % 3) as u8))
            .collect();
        let a = ga.from_coeffs(coeffs);
        if ga.is_unit(&a).unwrap().is_some() {
            let u = ga.unit_lift(&ideal, &a).unwrap();
            assert!(ga.is_unit(&u).unwrap().is_some());
            lifted += 1;
        }
    }
    assert!(lifted > 0);
}

#[test]
fn center_dimensions_of_semisimple_quotients() {
    // abelian coprime case: the whole algebra is its own center
    let c5 = corpus::cyclic_group(5).unwrap();
    assert_eq!(center_dimension_of_semisimple_quotient(&c5, 2).unwrap(), 5);
    // GF(7) splits S3: two linear components and one 2x2 matrix component
    let s3 = corpus::symmetric_group(3).unwrap();
    assert_eq!(center_dimension_of_semisimple_quotient(&s3, 7).unwrap(), 3);
    // GF(2)[C2] collapses to the prime field
    let c2 = corpus::cyclic_group(2).unwrap();
    assert_eq!(center_dimension_of_semisimple_quotient(&c2, 2).unwrap(), 1);
}

#[test]
fn lemma_6_4_named_examples() {
    let c2 = corpus::cyclic_group(2).unwrap();
    let rec = verify_lemma_6_4(&c2, 2).unwrap();
    assert!(rec.equal);
    assert_eq!(rec.o_p.len(), 2);

    let s3 = corpus::symmetric_group(3).unwrap();
    let rec = verify_lemma_6_4(&s3, 3).unwrap();
    assert!(rec.equal);
    assert_eq!(rec.o_p.len(), 3);
    let rec = verify_lemma_6_4(&s3, 2).unwrap();
    assert!(rec.equal);
    assert_eq!(rec.o_p.len(), 1);
}
