//! Subgroup-lattice enumeration.
//!
//! The primary algorithm is bottom-up: all distinct cyclic subgroups first,
//! then closure under pairwise join, deduplicated on canonical member
//! bitsets. `all_subgroups_by_extension` is a second, independent strategy
//! (grow each known subgroup by one extra generator until a fixpoint) kept
//! as a cross-check oracle.

use std::collections::BTreeSet;

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::group::{close_indices, cyclic_subgroup, FiniteGroup, SubgroupSet};

fn check_cap(g: &FiniteGroup, cap: usize) -> Result<()> {
    if g.order() > cap {
        return Err(Error::OrderCapExceeded {
            order: g.order(),
            cap,
        });
    }
    Ok(())
}

/// All distinct cyclic subgroups, as member bitsets.
pub fn cyclic_subgroup_sets(g: &FiniteGroup) -> Vec<Bitset> {
    let mut seen: BTreeSet<Bitset> = BTreeSet::new();
    for x in 0..g.order() {
        seen.insert(cyclic_subgroup(g, x).members().clone());
    }
    seen.into_iter().collect()
}

/// The complete subgroup list of `g`, deterministically ordered by size and
/// then lexicographically on the member set.
pub fn all_subgroups(g: &FiniteGroup, cap: usize) -> Result<Vec<SubgroupSet>> {
    check_cap(g, cap)?;
    let cyclics = cyclic_subgroup_sets(g);
    let mut all: BTreeSet<Bitset> = cyclics.iter().cloned().collect();
    all.insert(Bitset::singleton(g.order(), g.identity()));
    let mut frontier: Vec<Bitset> = all.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut fresh = Vec::new();
        for h in &frontier {
            for c in &cyclics {
                if c.is_subset(h) {
                    continue;
                }
                let join = close_indices(g, &h.union(c));
                if !all.contains(&join) {
                    all.insert(join.clone());
                    fresh.push(join);
                }
            }
        }
        frontier = fresh;
    }
    Ok(all
        .into_iter()
        .map(|m| SubgroupSet::new(g, m).expect("joins are subgroups"))
        .collect())
}

/// Independent enumeration oracle: saturate by adjoining single generators.
pub fn all_subgroups_by_extension(g: &FiniteGroup, cap: usize) -> Result<Vec<SubgroupSet>> {
    check_cap(g, cap)?;
    let mut all: BTreeSet<Bitset> = BTreeSet::new();
    all.insert(Bitset::singleton(g.order(), g.identity()));
    let mut frontier: Vec<Bitset> = all.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut fresh = Vec::new();
        for h in &frontier {
            for x in 0..g.order() {
                if h.contains(x) {
                    continue;
                }
                let mut seed = h.clone();
                seed.insert(x);
                let ext = close_indices(g, &seed);
                if !all.contains(&ext) {
                    all.insert(ext.clone());
                    fresh.push(ext);
                }
            }
        }
        frontier = fresh;
    }
    Ok(all
        .into_iter()
        .map(|m| SubgroupSet::new(g, m).expect("closures are subgroups"))
        .collect())
}

/// All normal subgroups: normal closures of cyclic subgroups, closed under
/// join. Much cheaper than filtering the full lattice.
pub fn normal_subgroups(g: &FiniteGroup) -> Vec<SubgroupSet> {
    let whole = g.full_set();
    let mut seeds: BTreeSet<Bitset> = BTreeSet::new();
    seeds.insert(Bitset::singleton(g.order(), g.identity()));
    for x in 0..g.order() {
        seeds.insert(crate::analysis::normal_closure_in(
            g,
            &whole,
            cyclic_subgroup(g, x).members(),
        ));
    }
    let seed_list: Vec<Bitset> = seeds.iter().cloned().collect();
    let mut all = seeds;
    let mut frontier: Vec<Bitset> = all.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut fresh = Vec::new();
        for h in &frontier {
            for s in &seed_list {
                if s.is_subset(h) {
                    continue;
                }
                let join = close_indices(g, &h.union(s));
                if !all.contains(&join) {
                    all.insert(join.clone());
                    fresh.push(join);
                }
            }
        }
        frontier = fresh;
    }
    all.into_iter()
        .map(|m| SubgroupSet::new(g, m).expect("joins of normal subgroups are subgroups"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::group_from_perms;
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

    #[test]
    fn trivial_group_has_one_subgroup() {
        let g = group_from_perms(&[crate::perm::Perm::identity(1)], 10).unwrap();
        assert_eq!(all_subgroups(&g, 500).unwrap().len(), 1);
    }

    #[test]
    fn s3_has_six_subgroups() {
        let g = s3();
        let subs = all_subgroups(&g, 500).unwrap();
        assert_eq!(subs.len(), 6);
        let sizes: Vec<usize> = subs.iter().map(SubgroupSet::order).collect();
        assert_eq!(sizes, vec![1, 2, 2, 2, 3, 6]);
    }

    #[test]
    fn enumeration_strategies_agree_on_s3() {
        let g = s3();
        let a = all_subgroups(&g, 500).unwrap();
        let b = all_subgroups_by_extension(&g, 500).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn order_cap_is_enforced() {
        let g = s3();
        assert!(matches!(
            all_subgroups(&g, 5),
            Err(Error::OrderCapExceeded { order: 6, cap: 5 })
        ));
    }

    #[test]
    fn normal_subgroups_of_s3() {
        let g = s3();
        let normals = normal_subgroups(&g);
        let sizes: Vec<usize> = normals.iter().map(SubgroupSet::order).collect();
        assert_eq!(sizes, vec![1, 3, 6]);
    }
}
