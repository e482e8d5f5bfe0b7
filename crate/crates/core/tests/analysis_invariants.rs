//! Cross-cutting invariants of the subgroup predicates over the pinned
//! corpus: normal implies permutable, defect laws, the named positive and
//! negative examples, and the pullback law for permutability.

use permuta_core::analysis::{
    check_gross_conclusion, classify_subgroup, is_normal, is_permutable, subnormal_defect,
    subnormal_defect_oracle,
};
use permuta_core::corpus::{self, standard_corpus, surjection_corpus};
use permuta_core::group::{cyclic_subgroup, SubgroupSet};
use permuta_core::lattice::all_subgroups;

#[test]
fn normal_implies_permutable_everywhere() {
    for (name, g) in standard_corpus() {
        for s in all_subgroups(&g, 500).unwrap() {
            if is_normal(&g, &s) {
                assert!(
                    is_permutable(&g, &s),
                    "normal non-permutable subgroup in {name}"
                );
            }
        }
    }
}

#[test]
fn defect_laws_and_oracle_agreement() {
    for (name, g) in standard_corpus() {
        if g.order() > 24 {
            continue;
        }
        for s in all_subgroups(&g, 500).unwrap() {
            let defect = subnormal_defect(&g, &s);
            // defect 1 exactly for proper normal subgroups
            let normal = is_normal(&g, &s);
            if s.is_whole(&g) {
                assert_eq!(defect, Some(0));
            } else if normal {
                assert_eq!(defect, Some(1), "normal proper subgroup in {name}");
            }
            assert_eq!(
                defect,
                subnormal_defect_oracle(&g, &s, 500).unwrap(),
                "chain-search oracle disagrees in {name}"
            );
        }
    }
}

fn m16_b_subgroup() -> (permuta_core::FiniteGroup, SubgroupSet) {
    let g = corpus::modular_group_16().unwrap();
    let a = (0..16).find(|&x| g.element_order(x) == 8).unwrap();
    let a_cyc = cyclic_subgroup(&g, a);
    let b = (0..16)
        .find(|&x| g.element_order(x) == 2 && !a_cyc.contains(x))
        .unwrap();
    let h = cyclic_subgroup(&g, b);
    (g, h)
}

#[test]
fn m16_has_a_permutable_non_normal_cyclic_subgroup() {
    let (g, h) = m16_b_subgroup();
    assert!(is_permutable(&g, &h));
    assert!(!is_normal(&g, &h));
    // and in fact every subgroup of M16 is permutable
    for s in all_subgroups(&g, 100).unwrap() {
        assert!(is_permutable(&g, &s));
    }
}

#[test]
fn gross_flags_on_the_m16_witness() {
    let (g, h) = m16_b_subgroup();
    // the normal closure of <b> is the abelian group <b, a^4>, so both
    // flags hold even though <b> is not normal in M16 itself
    let rec = check_gross_conclusion(&g, &h);
    assert_eq!((rec.normal_in_closure, rec.quotient_abelian), (true, true));
}

#[test]
fn d4_reflection_has_defect_two_and_is_not_permutable() {
    let g = corpus::dihedral_group(4).unwrap();
    let mut found = false;
    for s in all_subgroups(&g, 100).unwrap() {
        let r = classify_subgroup(&g, &s);
        if r.defect == Some(2) {
            assert!(!r.is_normal);
            if !r.is_permutable {
                found = true;
                assert_eq!(s.order(), 2);
            }
        }
    }
    assert!(
        found,
        "D(4) must contain a defect-2 non-permutable subgroup"
    );
}

#[test]
fn classification_invariants_hold_on_gl2_f3() {
    let g = permuta_core::gl::generate_gl(2, 3, 100).unwrap();
    for s in all_subgroups(&g, 500).unwrap() {
        let r = classify_subgroup(&g, &s);
        assert!(r.core.members().is_subset(r.subgroup.members()));
        assert!(r.subgroup.members().is_subset(r.normal_closure.members()));
        assert!(is_normal(&g, &r.core));
        assert!(is_normal(&g, &r.normal_closure));
        assert!(r.radical_over);
        if r.is_normal {
            assert!(r.is_permutable);
        }
    }
}

#[test]
fn permutability_pulls_back_along_every_corpus_surjection() {
    for s in surjection_corpus() {
        for m in all_subgroups(&s.target, 500).unwrap() {
            if !is_permutable(&s.target, &m) {
                continue;
            }
            let pre = SubgroupSet::new(&s.source, s.hom.preimage(m.members())).unwrap();
            assert!(
                is_permutable(&s.source, &pre),
                "pullback of a permutable subgroup fails along {}",
                s.name
            );
        }
    }
}
