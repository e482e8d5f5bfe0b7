//! Standard small groups and the pinned corpora the verification suites run
//! over. Everything here is deterministic: fixed generator lists, fixed
//! orderings, fixed quotient constructions.

use crate::error::Result;
use crate::gl::generate_gl;
use crate::group::cyclic_subgroup;
use crate::group::{group_from_perms, quotient_group, FiniteGroup, GroupHom, SubgroupSet};
use crate::perm::Perm;
use crate::DEFAULT_CLOSURE_CAP;

pub fn trivial_group() -> FiniteGroup {
    group_from_perms(&[Perm::identity(1)], 4).expect("trivial group")
}

pub fn cyclic_group(n: usize) -> Result<FiniteGroup> {
    if n == 1 {
        return Ok(trivial_group());
    }
    let cycle: Vec<usize> = (1..=n).collect();
    group_from_perms(&[Perm::from_cycles(n, &[cycle])?], n + 1)
}

pub fn symmetric_group(n: usize) -> Result<FiniteGroup> {
    match n {
        0 | 1 => Ok(trivial_group()),
        _ => {
            let transposition = Perm::from_cycles(n, &[vec![1, 2]])?;
            let cycle = Perm::from_cycles(n, &[(1..=n).collect()])?;
            group_from_perms(&[transposition, cycle], DEFAULT_CLOSURE_CAP)
        }
    }
}

/// Dihedral group of order 2n. For n >= 3 this is the symmetry group of the
/// n-gon; the degenerate cases are C2 and the Klein four-group.
pub fn dihedral_group(n: usize) -> Result<FiniteGroup> {
    match n {
        1 => group_from_perms(&[Perm::from_cycles(2, &[vec![1, 2]])?], 4),
        2 => group_from_perms(
            &[
                Perm::from_cycles(4, &[vec![1, 2]])?,
                Perm::from_cycles(4, &[vec![3, 4]])?,
            ],
            8,
        ),
        _ => {
            let rotation = Perm::from_cycles(n, &[(1..=n).collect()])?;
            // reflection fixing vertex 1
            let mut pairs = Vec::new();
            for i in 2..=n {
                let j = n + 2 - i;
                if i < j {
                    pairs.push(vec![i, j]);
                }
            }
            let reflection = Perm::from_cycles(n, &pairs)?;
            group_from_perms(&[rotation, reflection], 2 * n + 1)
        }
    }
}

/// The quaternion group of order 8.
pub fn quaternion_group() -> Result<FiniteGroup> {
    let a = Perm::from_cycles(8, &[vec![1, 2, 3, 4], vec![5, 6, 7, 8]])?;
    let b = Perm::from_cycles(8, &[vec![1, 5, 3, 7], vec![2, 8, 4, 6]])?;
    group_from_perms(&[a, b], 16)
}

/// The modular (Iwasawa) group of order 16: an order-8 rotation `a` and an
/// order-2 element `b` with `b a b^-1 = a^5`. Every subgroup is permutable
/// but `<b>` is not normal, which makes it the standard negative control.
pub fn modular_group_16() -> Result<FiniteGroup> {
    let a = Perm::from_cycles(8, &[(1..=8).collect()])?;
    // b: i -> 5(i-1)+1 mod 8, conjugation by which raises a to its 5th power
    let b = Perm::from_images((0..8).map(|i| (5 * i) % 8).collect())?;
    group_from_perms(&[a, b], 32)
}

/// The deterministic group corpus used by the exhaustive suites: every
/// grammar-named group of order at most 16, plus S4 and GL(2,3).
pub fn standard_corpus() -> Vec<(String, FiniteGroup)> {
    let mut corpus: Vec<(String, FiniteGroup)> = Vec::new();
    for n in 1..=16 {
        corpus.push((format!("C({n})"), cyclic_group(n).expect("cyclic")));
    }
    for n in 2..=8 {
        corpus.push((format!("D({n})"), dihedral_group(n).expect("dihedral")));
    }
    corpus.push(("S(2)".into(), symmetric_group(2).expect("symmetric")));
    corpus.push(("S(3)".into(), symmetric_group(3).expect("symmetric")));
    corpus.push(("Q8".into(), quaternion_group().expect("quaternion")));
    corpus.push(("M16".into(), modular_group_16().expect("modular")));
    corpus.push(("S(4)".into(), symmetric_group(4).expect("symmetric")));
    corpus.push((
        "GL(2,3)".into(),
        generate_gl(2, 3, DEFAULT_CLOSURE_CAP).expect("GL(2,3)"),
    ));
    corpus
}

/// The order-(<=16) slice of the corpus.
pub fn small_corpus() -> Vec<(String, FiniteGroup)> {
    standard_corpus()
        .into_iter()
        .filter(|(_, g)| g.order() <= 16)
        .collect()
}

/// A named surjection, materialized as a quotient projection.
pub struct Surjection {
    pub name: String,
    pub source: FiniteGroup,
    pub target: FiniteGroup,
    pub hom: GroupHom,
}

fn quotient_by_order_filter(
    name: &str,
    g: FiniteGroup,
    pick: impl Fn(&FiniteGroup, &SubgroupSet) -> bool,
) -> Surjection {
    let normal = crate::lattice::normal_subgroups(&g);
    let n = normal
        .iter()
        .find(|s| pick(&g, s))
        .expect("corpus quotient kernel exists")
        .clone();
    let (target, hom) = quotient_group(&g, &n).expect("kernel is normal");
    Surjection {
        name: name.to_string(),
        source: g,
        target,
        hom,
    }
}

/// The fixed corpus of ten finite-group surjections used by the pullback
/// suite. Kernels are pinned by order (and, where needed, by extra shape
/// conditions), so the list is reproducible.
pub fn surjection_corpus() -> Vec<Surjection> {
    let mut out = Vec::new();

    // 1. S3 -> C2 (kernel A3)
    out.push(quotient_by_order_filter(
        "S(3) -> C2",
        symmetric_group(3).unwrap(),
        |_, s| s.order() == 3,
    ));
    // 2. S4 -> C2 (kernel A4)
    out.push(quotient_by_order_filter(
        "S(4) -> C2",
        symmetric_group(4).unwrap(),
        |_, s| s.order() == 12,
    ));
    // 3. S4 -> S3 (kernel the Klein four-group)
    out.push(quotient_by_order_filter(
        "S(4) -> S(3)",
        symmetric_group(4).unwrap(),
        |_, s| s.order() == 4,
    ));
    // 4. D4 -> V4 (kernel the center)
    out.push(quotient_by_order_filter(
        "D(4) -> V4",
        dihedral_group(4).unwrap(),
        |g, s| s.order() == 2 && s.members().is_subset(&g.center()),
    ));
    // 5. D4 -> C2 (kernel the rotation subgroup)
    out.push(quotient_by_order_filter(
        "D(4) -> C2",
        dihedral_group(4).unwrap(),
        |g, s| s.order() == 4 && s.indices().iter().any(|&x| g.element_order(x) == 4),
    ));
    // 6. Q8 -> V4 (kernel the center)
    out.push(quotient_by_order_filter(
        "Q8 -> V4",
        quaternion_group().unwrap(),
        |_, s| s.order() == 2,
    ));
    // 7. M16 -> V4 (kernel the center, which is cyclic of order 4)
    out.push(quotient_by_order_filter(
        "M16 -> V4",
        modular_group_16().unwrap(),
        |g, s| s.order() == 4 && *s.members() == g.center(),
    ));
    // 8. C6 -> C3 (kernel C2)
    out.push(quotient_by_order_filter(
        "C(6) -> C3",
        cyclic_group(6).unwrap(),
        |_, s| s.order() == 2,
    ));
    // 9. C12 -> C4 (kernel C3)
    out.push(quotient_by_order_filter(
        "C(12) -> C4",
        cyclic_group(12).unwrap(),
        |_, s| s.order() == 3,
    ));
    // 10. GL(2,3) -> C2 (kernel SL(2,3), the determinant map)
    out.push(quotient_by_order_filter(
        "GL(2,3) -> C2",
        generate_gl(2, 3, DEFAULT_CLOSURE_CAP).unwrap(),
        |_, s| s.order() == 24,
    ));

    out
}

/// Subgroup of `g` generated by all elements of order `ord` (helper used by
/// tests to pin named subgroups without referring to element indices).
pub fn subgroup_of_element_order(g: &FiniteGroup, ord: usize) -> Option<SubgroupSet> {
    let x = (0..g.order()).find(|&x| g.element_order(x) == ord)?;
    Some(cyclic_subgroup(g, x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_orders() {
        assert_eq!(trivial_group().order(), 1);
        assert_eq!(cyclic_group(12).unwrap().order(), 12);
        assert_eq!(symmetric_group(4).unwrap().order(), 24);
        assert_eq!(dihedral_group(1).unwrap().order(), 2);
        assert_eq!(dihedral_group(2).unwrap().order(), 4);
        assert_eq!(dihedral_group(4).unwrap().order(), 8);
        assert_eq!(quaternion_group().unwrap().order(), 8);
        assert_eq!(modular_group_16().unwrap().order(), 16);
    }

    #[test]
    fn q8_is_hamiltonian() {
        // every subgroup of Q8 is normal
        let g = quaternion_group().unwrap();
        for s in crate::lattice::all_subgroups(&g, 100).unwrap() {
            assert!(crate::analysis::is_normal(&g, &s));
        }
    }

    #[test]
    fn m16_relation_holds() {
        let g = modular_group_16().unwrap();
        assert_eq!(g.order(), 16);
        // find a of order 8 and b of order 2 outside <a> with b a b^-1 = a^5
        let a = (0..16).find(|&x| g.element_order(x) == 8).unwrap();
        let a_cyc = cyclic_subgroup(&g, a);
        let b = (0..16)
            .find(|&x| g.element_order(x) == 2 && !a_cyc.contains(x))
            .unwrap();
        let conj = g.conjugate(b, a);
        assert_eq!(conj, g.power(a, 5));
    }

    #[test]
    fn corpus_is_deterministic_and_complete() {
        let corpus = standard_corpus();
        assert_eq!(corpus.len(), 29);
        let names: Vec<&str> = corpus.iter().map(|(n, _)| n.as_str()).collect();
        assert!(names.contains(&"M16"));
        assert!(names.contains(&"GL(2,3)"));
        assert!(corpus
            .iter()
            .filter(|(n, _)| !matches!(n.as_str(), "S(4)" | "GL(2,3)"))
            .all(|(_, g)| g.order() <= 16));
    }

    #[test]
    fn surjections_validate() {
        let corpus = surjection_corpus();
        assert_eq!(corpus.len(), 10);
        for s in &corpus {
            s.hom.validate(&s.source, &s.target).unwrap();
            assert!(s.hom.is_surjective(&s.target), "{} not surjective", s.name);
        }
    }
}
