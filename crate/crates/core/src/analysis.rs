//! The subgroup predicate family: normal, permutable, subnormal with defect,
//! core, normal closure, radical-over, and the six-way permutability
//! equivalence check.

use crate::bitset::Bitset;
use crate::error::Result;
use crate::group::{close_indices, subset_product, FiniteGroup, SubgroupSet};
use crate::lattice::{all_subgroups, cyclic_subgroup_sets};

/// True iff `g n g^-1 = n` for every `g`.
pub fn is_normal(g: &FiniteGroup, n: &SubgroupSet) -> bool {
    n.assert_parent(g);
    is_normal_in(g, &g.full_set(), n.members())
}

/// Normality of `n` inside the subgroup `ambient` (both as index sets).
pub fn is_normal_in(g: &FiniteGroup, ambient: &Bitset, n: &Bitset) -> bool {
    ambient
        .iter()
        .all(|x| n.iter().all(|a| n.contains(g.conjugate(x, a))))
}

/// Permutability, decided over cyclic subgroups only: `n<x> = <x>n` for
/// every `x`. The full-lattice variant lives in [`check_lemma_2_1`].
pub fn is_permutable(g: &FiniteGroup, n: &SubgroupSet) -> bool {
    n.assert_parent(g);
    cyclic_subgroup_sets(g)
        .iter()
        .all(|c| subset_product(g, n.members(), c) == subset_product(g, c, n.members()))
}

/// The core: the largest normal subgroup of `g` inside `h`, computed as the
/// intersection of all conjugates of `h`.
pub fn core_subgroup(g: &FiniteGroup, h: &SubgroupSet) -> SubgroupSet {
    h.assert_parent(g);
    let mut acc = h.members().clone();
    for x in 0..g.order() {
        let conj = Bitset::from_indices(g.order(), h.members().iter().map(|a| g.conjugate(x, a)));
        acc.intersect_with(&conj);
    }
    SubgroupSet::new(g, acc).expect("intersection of conjugates is a subgroup")
}

/// Oracle for [`core_subgroup`]: the kernel of the action of `g` on the left
/// cosets of `h`.
pub fn core_by_coset_action(g: &FiniteGroup, h: &SubgroupSet) -> SubgroupSet {
    h.assert_parent(g);
    let order = g.order();
    let mut coset_of = vec![u32::MAX; order];
    let mut next = 0u32;
    for x in 0..order {
        if coset_of[x] == u32::MAX {
            for m in h.members().iter() {
                coset_of[g.mul(x, m)] = next;
            }
            next += 1;
        }
    }
    let kernel = Bitset::from_indices(
        order,
        (0..order).filter(|&k| (0..order).all(|x| coset_of[g.mul(k, x)] == coset_of[x])),
    );
    SubgroupSet::new(g, kernel).expect("kernel is a subgroup")
}

/// Normal closure of `n` inside the subgroup `ambient`; the closure of all
/// `ambient`-conjugates.
pub fn normal_closure_in(g: &FiniteGroup, ambient: &Bitset, n: &Bitset) -> Bitset {
    let mut seed = Bitset::new(g.order());
    for x in ambient.iter() {
        for a in n.iter() {
            seed.insert(g.conjugate(x, a));
        }
    }
    close_indices(g, &seed)
}

/// The smallest normal subgroup of `g` containing `h`.
pub fn normal_closure(g: &FiniteGroup, h: &SubgroupSet) -> SubgroupSet {
    h.assert_parent(g);
    SubgroupSet::new(g, normal_closure_in(g, &g.full_set(), h.members()))
        .expect("normal closure is a subgroup")
}

/// Minimal subnormal defect of `n` in `g`, or `None` when `n` is not
/// subnormal. Computed by the descending normal-closure series, which is the
/// fastest descending series; `n = g` reports defect 0.
pub fn subnormal_defect(g: &FiniteGroup, n: &SubgroupSet) -> Option<usize> {
    n.assert_parent(g);
    let target = n.members();
    let mut current = g.full_set();
    let mut defect = 0;
    loop {
        if &current == target {
            return Some(defect);
        }
        let next = normal_closure_in(g, &current, target);
        if next == current {
            return None; // series stabilized above n
        }
        current = next;
        defect += 1;
    }
}

/// Brute-force defect oracle: breadth-first search over all chains
/// `n = n_r <| ... <| n_0 = g` through the full subgroup lattice.
pub fn subnormal_defect_oracle(
    g: &FiniteGroup,
    n: &SubgroupSet,
    cap: usize,
) -> Result<Option<usize>> {
    let subs = all_subgroups(g, cap)?;
    let over: Vec<&SubgroupSet> = subs
        .iter()
        .filter(|s| n.members().is_subset(s.members()))
        .collect();
    let mut level: Vec<&SubgroupSet> = over.iter().copied().filter(|s| s.is_whole(g)).collect();
    let mut visited: Vec<bool> = over.iter().map(|s| s.is_whole(g)).collect();
    let mut depth = 0;
    loop {
        if level.iter().any(|s| s.members() == n.members()) {
            return Ok(Some(depth));
        }
        let mut next_level = Vec::new();
        for parent in &level {
            for (i, cand) in over.iter().enumerate() {
                if visited[i] || !cand.members().is_subset(parent.members()) {
                    continue;
                }
                if is_normal_in(g, parent.members(), cand.members()) {
                    visited[i] = true;
                    next_level.push(*cand);
                }
            }
        }
        if next_level.is_empty() {
            return Ok(None);
        }
        level = next_level;
        depth += 1;
    }
}

/// True iff every element of `g` has a positive power in `h`. Always true in
/// a finite group; the operation exists for API symmetry and is implemented
/// as an honest power search.
pub fn is_radical_over(g: &FiniteGroup, h: &SubgroupSet) -> bool {
    h.assert_parent(g);
    (0..g.order()).all(|x| {
        let mut y = x;
        for _ in 0..g.order() {
            if h.contains(y) {
                return true;
            }
            y = g.mul(y, x);
        }
        false
    })
}

/// The commutator subgroup `[h, h]` of a subgroup (pass the whole group for
/// the derived subgroup of `g`).
pub fn commutator_subgroup(g: &FiniteGroup, sub: &Bitset) -> SubgroupSet {
    let mut seed = Bitset::new(g.order());
    for a in sub.iter() {
        for b in sub.iter() {
            seed.insert(g.commutator(a, b));
        }
    }
    SubgroupSet::new(g, close_indices(g, &seed)).expect("commutator closure is a subgroup")
}

/// Outcome of evaluating the six permutability criteria independently.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Lemma21Record {
    /// (1) `nm` is a subgroup for every subgroup `m`
    /// (2) `mn` is a subgroup for every subgroup `m`
    /// (3) `nm = mn` for every subgroup `m`
    /// (4) `n<x> = <x>n` for every cyclic `<x>`
    /// (5) every `a` in n, `x` in g satisfy `ax = x^n a'` for some `a'` in n
    /// (6) every `a` in n, `x` in g satisfy `xa = a' x^n` for some `a'` in n
    pub criteria: [bool; 6],
    pub all_agree: bool,
}

/// A finite nonempty subset closed under the product is a subgroup.
fn product_set_is_subgroup(g: &FiniteGroup, p: &Bitset) -> bool {
    let members: Vec<usize> = p.iter().collect();
    members
        .iter()
        .all(|&a| members.iter().all(|&b| p.contains(g.mul(a, b))))
}

/// Evaluate all six permutability criteria for `n` in `g` independently and
/// report whether they agree.
pub fn check_lemma_2_1(g: &FiniteGroup, n: &SubgroupSet, cap: usize) -> Result<Lemma21Record> {
    let subs = all_subgroups(g, cap)?;
    Ok(lemma_2_1_record(g, n, &subs))
}

/// Bulk form: one lattice enumeration, one record per subgroup.
pub fn check_lemma_2_1_all(
    g: &FiniteGroup,
    cap: usize,
) -> Result<Vec<(SubgroupSet, Lemma21Record)>> {
    let subs = all_subgroups(g, cap)?;
    Ok(subs
        .iter()
        .map(|n| (n.clone(), lemma_2_1_record(g, n, &subs)))
        .collect())
}

fn lemma_2_1_record(g: &FiniteGroup, n: &SubgroupSet, subs: &[SubgroupSet]) -> Lemma21Record {
    n.assert_parent(g);
    let nm_sets: Vec<Bitset> = subs
        .iter()
        .map(|m| subset_product(g, n.members(), m.members()))
        .collect();
    let mn_sets: Vec<Bitset> = subs
        .iter()
        .map(|m| subset_product(g, m.members(), n.members()))
        .collect();

    let c1 = nm_sets.iter().all(|p| product_set_is_subgroup(g, p));
    let c2 = mn_sets.iter().all(|p| product_set_is_subgroup(g, p));
    let c3 = nm_sets.iter().zip(&mn_sets).all(|(a, b)| a == b);
    let c4 = is_permutable(g, n);

    // (5): for all a in n, x in g there are a' in n and an exponent e with
    // ax = x^e a', i.e. x^-e a x lies in n for some 0 <= e < ord(x).
    let exists_exponent = |a: usize, x: usize, left: bool| -> bool {
        let ord = g.element_order(x);
        let mut xe = g.identity();
        for _ in 0..ord {
            let candidate = if left {
                // a x = x^e a'  =>  a' = x^-e a x
                g.mul(g.mul(g.inv(xe), a), x)
            } else {
                // x a = a' x^e  =>  a' = x a x^-e
                g.mul(g.mul(x, a), g.inv(xe))
            };
            if n.contains(candidate) {
                return true;
            }
            xe = g.mul(xe, x);
        }
        false
    };
    let c5 = n
        .members()
        .iter()
        .all(|a| (0..g.order()).all(|x| exists_exponent(a, x, true)));
    let c6 = n
        .members()
        .iter()
        .all(|a| (0..g.order()).all(|x| exists_exponent(a, x, false)));

    let criteria = [c1, c2, c3, c4, c5, c6];
    let all_agree = criteria.iter().all(|&c| c == criteria[0]);
    Lemma21Record {
        criteria,
        all_agree,
    }
}

/// The two diagnostic flags for a permutable subgroup with trivial-intersection
/// infinite cyclic witness (never satisfiable in a finite group, so this is a
/// diagnostic, not an asserted theorem): `h` normal in its normal closure, and
/// `h/h_core` abelian (equivalently `[h,h]` inside the core).
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct GrossRecord {
    pub normal_in_closure: bool,
    pub quotient_abelian: bool,
}

pub fn check_gross_conclusion(g: &FiniteGroup, h: &SubgroupSet) -> GrossRecord {
    h.assert_parent(g);
    let closure = normal_closure(g, h);
    let normal_in_closure = is_normal_in(g, closure.members(), h.members());
    let core = core_subgroup(g, h);
    let derived = commutator_subgroup(g, h.members());
    let quotient_abelian = derived.members().is_subset(core.members());
    GrossRecord {
        normal_in_closure,
        quotient_abelian,
    }
}

/// Full classification of one subgroup.
#[derive(Debug, Clone)]
pub struct SubgroupReport {
    pub subgroup: SubgroupSet,
    pub is_normal: bool,
    pub is_permutable: bool,
    pub is_subnormal: bool,
    pub defect: Option<usize>,
    pub core: SubgroupSet,
    pub normal_closure: SubgroupSet,
    pub radical_over: bool,
}

pub fn classify_subgroup(g: &FiniteGroup, n: &SubgroupSet) -> SubgroupReport {
    let defect = subnormal_defect(g, n);
    let report = SubgroupReport {
        subgroup: n.clone(),
        is_normal: is_normal(g, n),
        is_permutable: is_permutable(g, n),
        is_subnormal: defect.is_some(),
        defect,
        core: core_subgroup(g, n),
        normal_closure: normal_closure(g, n),
        radical_over: is_radical_over(g, n),
    };
    debug_assert!(!report.is_normal || report.is_permutable);
    debug_assert!(!report.is_normal || report.defect.unwrap_or(usize::MAX) <= 1);
    debug_assert!(report.core.members().is_subset(report.subgroup.members()));
    debug_assert!(report
        .subgroup
        .members()
        .is_subset(report.normal_closure.members()));
    report
}

/// One subgroup's evidence row in a permutable-implies-normal run.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct SubgroupEvidence {
    pub order: usize,
    pub is_permutable: bool,
    pub is_normal: bool,
}

/// Result of checking one group for permutable-but-not-normal subgroups.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct PermutableNormalReport {
    pub group: String,
    pub group_order: usize,
    pub subgroup_count: usize,
    pub permutable_count: usize,
    pub normal_count: usize,
    /// Member lists of subgroups that are permutable but not normal.
    pub offenders: Vec<Vec<u32>>,
    pub evidence: Vec<SubgroupEvidence>,
    /// True iff every permutable subgroup is normal.
    pub verdict: bool,
}

/// Enumerate all subgroups and test whether every permutable one is normal.
pub fn permutable_implies_normal(
    name: &str,
    g: &FiniteGroup,
    cap: usize,
) -> Result<PermutableNormalReport> {
    let subs = all_subgroups(g, cap)?;
    let mut evidence = Vec::with_capacity(subs.len());
    let mut offenders = Vec::new();
    let mut permutable_count = 0;
    let mut normal_count = 0;
    for s in &subs {
        let p = is_permutable(g, s);
        let nrm = is_normal(g, s);
        permutable_count += p as usize;
        normal_count += nrm as usize;
        if p && !nrm {
            offenders.push(s.indices().iter().map(|&i| i as u32).collect());
        }
        evidence.push(SubgroupEvidence {
            order: s.order(),
            is_permutable: p,
            is_normal: nrm,
        });
    }
    Ok(PermutableNormalReport {
        group: name.to_string(),
        group_order: g.order(),
        subgroup_count: subs.len(),
        permutable_count,
        normal_count,
        verdict: offenders.is_empty(),
        offenders,
        evidence,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic_subgroup, group_from_perms};
    use crate::perm::parse_cycles;

    fn s3() -> FiniteGroup {
        group_from_perms(
            &[
                parse_cycles("(1 2)", 3).unwrap(),
                parse_cycles("(1 2 3)", 3).unwrap(),
            ],
            100,
        )
        .unwrap()
    }

    fn reflection_subgroup(g: &FiniteGroup) -> SubgroupSet {
        let x = (0..g.order()).find(|&x| g.element_order(x) == 2).unwrap();
        cyclic_subgroup(g, x)
    }

    #[test]
    fn a3_is_normal_and_reflections_are_not() {
        let g = s3();
        let a3 = {
            let x = (0..6).find(|&x| g.element_order(x) == 3).unwrap();
            cyclic_subgroup(&g, x)
        };
        assert!(is_normal(&g, &a3));
        assert!(is_permutable(&g, &a3));
        let h = reflection_subgroup(&g);
        assert!(!is_normal(&g, &h));
        assert!(!is_permutable(&g, &h));
    }

    #[test]
    fn whole_and_trivial_subgroups_are_permutable() {
        let g = s3();
        assert!(is_permutable(&g, &SubgroupSet::whole(&g)));
        assert!(is_permutable(&g, &SubgroupSet::trivial(&g)));
    }

    #[test]
    fn core_and_closure_of_a_reflection() {
        let g = s3();
        let h = reflection_subgroup(&g);
        assert!(core_subgroup(&g, &h).is_trivial(&g));
        assert!(normal_closure(&g, &h).is_whole(&g));
        // normal h: core = closure = h
        let a3 = cyclic_subgroup(&g, (0..6).find(|&x| g.element_order(x) == 3).unwrap());
        assert_eq!(core_subgroup(&g, &a3).members(), a3.members());
        assert_eq!(normal_closure(&g, &a3).members(), a3.members());
    }

    #[test]
    fn core_matches_coset_action_kernel() {
        let g = s3();
        for sub in all_subgroups(&g, 100).unwrap() {
            assert_eq!(
                core_subgroup(&g, &sub).members(),
                core_by_coset_action(&g, &sub).members()
            );
        }
    }

    #[test]
    fn defect_zero_one_and_none_in_s3() {
        let g = s3();
        assert_eq!(subnormal_defect(&g, &SubgroupSet::whole(&g)), Some(0));
        let a3 = cyclic_subgroup(&g, (0..6).find(|&x| g.element_order(x) == 3).unwrap());
        assert_eq!(subnormal_defect(&g, &a3), Some(1));
        assert_eq!(subnormal_defect(&g, &reflection_subgroup(&g)), None);
    }

    #[test]
    fn defect_agrees_with_chain_search_oracle() {
        let g = s3();
        for sub in all_subgroups(&g, 100).unwrap() {
            assert_eq!(
                subnormal_defect(&g, &sub),
                subnormal_defect_oracle(&g, &sub, 100).unwrap()
            );
        }
    }

    #[test]
    fn finite_groups_are_radical_over_every_subgroup() {
        let g = s3();
        for sub in all_subgroups(&g, 100).unwrap() {
            assert!(is_radical_over(&g, &sub));
        }
    }

    #[test]
    fn six_criteria_agree_on_s3() {
        let g = s3();
        for sub in all_subgroups(&g, 100).unwrap() {
            let rec = check_lemma_2_1(&g, &sub, 100).unwrap();
            assert!(
                rec.all_agree,
                "criteria disagree on {sub:?}: {:?}",
                rec.criteria
            );
        }
        // the whole group: all six true; a reflection: all six false
        let whole = check_lemma_2_1(&g, &SubgroupSet::whole(&g), 100).unwrap();
        assert_eq!(whole.criteria, [true; 6]);
        let refl = check_lemma_2_1(&g, &reflection_subgroup(&g), 100).unwrap();
        assert_eq!(refl.criteria, [false; 6]);
    }

    #[test]
    fn gross_flags_for_s3_reflection() {
        let g = s3();
        // h^g = s3 and h is not normal there; h is abelian with trivial core,
        // so the quotient flag holds.
        let rec = check_gross_conclusion(&g, &reflection_subgroup(&g));
        assert_eq!((rec.normal_in_closure, rec.quotient_abelian), (false, true));
        // normal subgroup: both flags hold trivially
        let a3 = cyclic_subgroup(&g, (0..6).find(|&x| g.element_order(x) == 3).unwrap());
        let rec = check_gross_conclusion(&g, &a3);
        assert_eq!((rec.normal_in_closure, rec.quotient_abelian), (true, true));
    }

    #[test]
    fn commutator_subgroup_of_s3_is_a3() {
        let g = s3();
        let derived = commutator_subgroup(&g, &g.full_set());
        assert_eq!(derived.order(), 3);
    }
}
