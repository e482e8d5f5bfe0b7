//! Finite groups materialized as indexed element lists with full
//! multiplication and inverse tables.
//!
//! Everything downstream (subgroup lattices, permutability predicates, group
//! algebras) works purely on element indices, so the representation here is
//! the single place where concrete elements (permutations, matrices, abstract
//! table points) are touched.

use std::collections::HashMap;

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::fq::Fq;
use crate::matrix::MatrixFq;
use crate::perm::Perm;

/// Canonical element representation inside a [`FiniteGroup`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum ElementRepr {
    Perm(Perm),
    Mat(MatrixFq),
    /// Abstract point of a table-defined group.
    Point(u32),
}

impl ElementRepr {
    fn kind(&self) -> u8 {
        match self {
            ElementRepr::Perm(_) => 0,
            ElementRepr::Mat(_) => 1,
            ElementRepr::Point(_) => 2,
        }
    }
}

/// A finite group with a complete multiplication table.
///
/// Immutable after construction; every constructor validates the table (Latin
/// square, two-sided identity, inverses, associativity: exhaustively up to
/// order 64, sampled above).
#[derive(Clone)]
pub struct FiniteGroup {
    elements: Vec<ElementRepr>,
    mul_table: Vec<u32>,
    inv_table: Vec<u32>,
    identity_index: usize,
    order: usize,
    field: Option<Fq>,
    fingerprint: u64,
}

fn fnv64(data: impl IntoIterator<Item = u64>) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for x in data {
        for byte in x.to_le_bytes() {
            h ^= byte as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    }
    h
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity_index
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul_table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv_table[a] as usize
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn element(&self, i: usize) -> &ElementRepr {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[ElementRepr] {
        &self.elements
    }

    pub fn field(&self) -> Option<&Fq> {
        self.field.as_ref()
    }

    /// Cheap tag identifying this group instance; subgroup sets and algebra
    /// elements carry it so cross-parent misuse is caught.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut y = x;
        let mut n = 1;
        while y != self.identity_index {
            y = self.mul(y, x);
            n += 1;
        }
        n
    }

    pub fn power(&self, x: usize, e: usize) -> usize {
        let mut acc = self.identity_index;
        for _ in 0..e {
            acc = self.mul(acc, x);
        }
        acc
    }

    pub fn element_label(&self, i: usize) -> String {
        match &self.elements[i] {
            ElementRepr::Perm(p) => p.to_string(),
            ElementRepr::Mat(m) => match &self.field {
                Some(f) => m.render(f),
                None => format!("{m:?}"),
            },
            ElementRepr::Point(k) => format!("e{k}"),
        }
    }

    fn validate(&self) -> Result<()> {
        let n = self.order;
        if n == 0 {
            return Err(Error::InvalidTable("empty group".into()));
        }
        // Latin square
        for i in 0..n {
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for j in 0..n {
                let r = self.mul(i, j);
                let c = self.mul(j, i);
                if r >= n || c >= n || row[r] || col[c] {
                    return Err(Error::InvalidTable(format!(
                        "row/column {i} is not a permutation"
                    )));
                }
                row[r] = true;
                col[c] = true;
            }
        }
        // two-sided identity
        let e = self.identity_index;
        for j in 0..n {
            if self.mul(e, j) != j || self.mul(j, e) != j {
                return Err(Error::InvalidTable(
                    "identity index is not an identity".into(),
                ));
            }
        }
        // inverses
        for i in 0..n {
            if self.mul(i, self.inv(i)) != e || self.mul(self.inv(i), i) != e {
                return Err(Error::InvalidTable(format!("bad inverse for element {i}")));
            }
        }
        // associativity: exhaustive up to order 64, deterministic sample above
        if n <= 64 {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Err(Error::InvalidTable(format!(
                                "associativity fails on ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut state: u64 = 0x9e3779b97f4a7c15;
            let mut next = || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                state
            };
            for _ in 0..100_000 {
                let a = (next() % n as u64) as usize;
                let b = (next() % n as u64) as usize;
                let c = (next() % n as u64) as usize;
                if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                    return Err(Error::InvalidTable(format!(
                        "associativity fails on ({a},{b},{c})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Build a group from explicit elements and a multiplication table
    /// (`table[a][b]` flattened row-major).
    pub fn from_mul_table(
        elements: Vec<ElementRepr>,
        mul_table: Vec<u32>,
        field: Option<Fq>,
    ) -> Result<FiniteGroup> {
        let n = elements.len();
        if mul_table.len() != n * n {
            return Err(Error::InvalidTable(format!(
                "expected {} entries, got {}",
                n * n,
                mul_table.len()
            )));
        }
        if mul_table.iter().any(|&x| x as usize >= n) {
            return Err(Error::InvalidTable("entry out of range".into()));
        }
        let identity_index = (0..n)
            .find(|&e| {
                (0..n).all(|j| {
                    mul_table[e * n + j] as usize == j && mul_table[j * n + e] as usize == j
                })
            })
            .ok_or_else(|| Error::InvalidTable("no identity element".into()))?;
        let mut inv_table = vec![u32::MAX; n];
        for i in 0..n {
            let j = (0..n)
                .find(|&j| mul_table[i * n + j] as usize == identity_index)
                .ok_or_else(|| Error::InvalidTable(format!("no inverse for {i}")))?;
            inv_table[i] = j as u32;
        }
        let fingerprint = fnv64(mul_table.iter().map(|&x| x as u64).chain([n as u64]));
        let g = FiniteGroup {
            elements,
            mul_table,
            inv_table,
            identity_index,
            order: n,
            field,
            fingerprint,
        };
        g.validate()?;
        Ok(g)
    }

    /// The whole group as an index set.
    pub fn full_set(&self) -> Bitset {
        Bitset::full(self.order)
    }

    pub fn center(&self) -> Bitset {
        Bitset::from_indices(
            self.order,
            (0..self.order).filter(|&z| (0..self.order).all(|g| self.mul(z, g) == self.mul(g, z))),
        )
    }
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteGroup(order {})", self.order)
    }
}

fn mul_repr(a: &ElementRepr, b: &ElementRepr, field: Option<&Fq>) -> Result<ElementRepr> {
    match (a, b) {
        (ElementRepr::Perm(x), ElementRepr::Perm(y)) => Ok(ElementRepr::Perm(x.compose(y))),
        (ElementRepr::Mat(x), ElementRepr::Mat(y)) => {
            let f = field
                .ok_or_else(|| Error::InvalidInput("matrix generators require a field".into()))?;
            Ok(ElementRepr::Mat(x.mul(f, y)))
        }
        _ => Err(Error::MixedRepresentation),
    }
}

/// Generate the group closure of `gens` breadth-first from the identity.
///
/// Element order is deterministic: the identity gets index 0 and products are
/// discovered in BFS order with generators applied in the order given. Errors
/// with [`Error::ClosureCapExceeded`] when the closure grows past `cap` and
/// [`Error::MixedRepresentation`] when the generators are not all of one kind.
pub fn generate_group(gens: &[ElementRepr], field: Option<&Fq>, cap: usize) -> Result<FiniteGroup> {
    if gens.is_empty() {
        return Err(Error::InvalidInput("empty generating set".into()));
    }
    let kind = gens[0].kind();
    if gens.iter().any(|g| g.kind() != kind) {
        return Err(Error::MixedRepresentation);
    }
    // Normalize and find the identity of the right kind.
    let (gens, identity): (Vec<ElementRepr>, ElementRepr) = match &gens[0] {
        ElementRepr::Perm(_) => {
            let degree = gens
                .iter()
                .map(|g| match g {
                    ElementRepr::Perm(p) => p.degree(),
                    _ => unreachable!(),
                })
                .max()
                .unwrap()
                .max(1);
            let gens = gens
                .iter()
                .map(|g| match g {
                    ElementRepr::Perm(p) => ElementRepr::Perm(p.extended(degree)),
                    _ => unreachable!(),
                })
                .collect();
            (gens, ElementRepr::Perm(Perm::identity(degree)))
        }
        ElementRepr::Mat(m) => {
            let n = m.n;
            for g in gens {
                match g {
                    ElementRepr::Mat(m) if m.n == n => {}
                    _ => return Err(Error::MixedRepresentation),
                }
            }
            (gens.to_vec(), ElementRepr::Mat(MatrixFq::identity(n)))
        }
        ElementRepr::Point(_) => {
            return Err(Error::InvalidInput(
                "abstract points can only come from a multiplication table".into(),
            ))
        }
    };

    let mut elements: Vec<ElementRepr> = vec![identity.clone()];
    let mut index: HashMap<ElementRepr, u32> = HashMap::new();
    index.insert(identity, 0);
    // gen_action[gi][i] = index of elements[i] * gens[gi]
    let mut gen_action: Vec<Vec<u32>> = vec![Vec::new(); gens.len()];
    // BFS provenance: parent[j] and the generator that produced j
    let mut parent: Vec<(u32, u32)> = vec![(0, 0)];

    let mut head = 0usize;
    while head < elements.len() {
        for (gi, gen) in gens.iter().enumerate() {
            let product = mul_repr(&elements[head], gen, field)?;
            let idx = match index.get(&product) {
                Some(&i) => i,
                None => {
                    if elements.len() >= cap {
                        return Err(Error::ClosureCapExceeded { cap });
                    }
                    let i = elements.len() as u32;
                    elements.push(product.clone());
                    index.insert(product, i);
                    parent.push((head as u32, gi as u32));
                    i
                }
            };
            gen_action[gi].push(idx);
            debug_assert_eq!(gen_action[gi].len(), head + 1);
        }
        head += 1;
    }

    let n = elements.len();
    // Right-multiplication map of each element, built along the BFS tree:
    // rho_j = rho_gen(j) ∘ rho_parent(j); mul_table[i][j] = rho_j[i].
    let mut mul_table = vec![0u32; n * n];
    let mut rho: Vec<Vec<u32>> = Vec::with_capacity(n);
    rho.push((0..n as u32).collect());
    for &(pj, gj) in &parent[1..] {
        let prev = &rho[pj as usize];
        let action = &gen_action[gj as usize];
        rho.push(prev.iter().map(|&i| action[i as usize]).collect());
    }
    for (j, r) in rho.iter().enumerate() {
        for (i, &v) in r.iter().enumerate() {
            mul_table[i * n + j] = v;
        }
    }
    FiniteGroup::from_mul_table(elements, mul_table, field.cloned())
}

/// Convenience wrapper for permutation generators.
pub fn group_from_perms(gens: &[Perm], cap: usize) -> Result<FiniteGroup> {
    let reprs: Vec<ElementRepr> = gens.iter().cloned().map(ElementRepr::Perm).collect();
    generate_group(&reprs, None, cap)
}

/// Convenience wrapper for matrix generators over a field.
pub fn group_from_matrices(field: &Fq, gens: &[MatrixFq], cap: usize) -> Result<FiniteGroup> {
    let reprs: Vec<ElementRepr> = gens.iter().cloned().map(ElementRepr::Mat).collect();
    generate_group(&reprs, Some(field), cap)
}

/// The raw product set `{ab : a in A, b in B}`. No closure is imposed.
pub fn subset_product(g: &FiniteGroup, a: &Bitset, b: &Bitset) -> Bitset {
    let mut out = Bitset::new(g.order());
    for x in a.iter() {
        for y in b.iter() {
            out.insert(g.mul(x, y));
        }
    }
    out
}

/// Close an index set under the group product (which, the group being
/// finite, also closes it under inverses).
pub fn close_indices(g: &FiniteGroup, seed: &Bitset) -> Bitset {
    let mut members = seed.clone();
    members.insert(g.identity());
    let mut list: Vec<usize> = members.iter().collect();
    let mut i = 0;
    while i < list.len() {
        for j in 0..=i {
            for (x, y) in [(list[i], list[j]), (list[j], list[i])] {
                let p = g.mul(x, y);
                if !members.contains(p) {
                    members.insert(p);
                    list.push(p);
                }
            }
        }
        i += 1;
    }
    members
}

/// A subset of a group's indices verified to be a subgroup.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SubgroupSet {
    members: Bitset,
    parent_fp: u64,
}

impl SubgroupSet {
    /// Wrap a member set, checking identity membership, closure under product
    /// and inverse, and Lagrange divisibility.
    pub fn new(g: &FiniteGroup, members: Bitset) -> Result<SubgroupSet> {
        if members.capacity() != g.order() {
            return Err(Error::ParentMismatch);
        }
        if !members.contains(g.identity()) {
            return Err(Error::InvalidInput(
                "subgroup must contain the identity".into(),
            ));
        }
        let list: Vec<usize> = members.iter().collect();
        for &a in &list {
            if !members.contains(g.inv(a)) {
                return Err(Error::InvalidInput(format!(
                    "not closed under inverse at {a}"
                )));
            }
            for &b in &list {
                if !members.contains(g.mul(a, b)) {
                    return Err(Error::InvalidInput(format!(
                        "not closed under product at ({a},{b})"
                    )));
                }
            }
        }
        assert!(
            g.order() % list.len() == 0,
            "Lagrange violated: {} does not divide {}",
            list.len(),
            g.order()
        );
        Ok(SubgroupSet {
            members,
            parent_fp: g.fingerprint(),
        })
    }

    /// Generate the subgroup `<seed>` inside `g`.
    pub fn generated_by(g: &FiniteGroup, seed: &Bitset) -> SubgroupSet {
        SubgroupSet::new(g, close_indices(g, seed)).expect("closure is a subgroup")
    }

    pub fn trivial(g: &FiniteGroup) -> SubgroupSet {
        SubgroupSet::new(g, Bitset::singleton(g.order(), g.identity())).unwrap()
    }

    pub fn whole(g: &FiniteGroup) -> SubgroupSet {
        SubgroupSet::new(g, g.full_set()).unwrap()
    }

    pub fn members(&self) -> &Bitset {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(i)
    }

    pub fn indices(&self) -> Vec<usize> {
        self.members.to_indices()
    }

    pub fn is_trivial(&self, g: &FiniteGroup) -> bool {
        self.order() == 1 && self.contains(g.identity())
    }

    pub fn is_whole(&self, g: &FiniteGroup) -> bool {
        self.order() == g.order()
    }

    /// Panics if this subgroup does not belong to `g`.
    pub fn assert_parent(&self, g: &FiniteGroup) {
        assert!(
            self.parent_fp == g.fingerprint() && self.members.capacity() == g.order(),
            "subgroup used with a different parent group"
        );
    }
}

impl std::fmt::Debug for SubgroupSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup{:?}", self.members)
    }
}

/// The cyclic subgroup generated by one element.
pub fn cyclic_subgroup(g: &FiniteGroup, x: usize) -> SubgroupSet {
    let mut members = Bitset::new(g.order());
    let mut y = g.identity();
    loop {
        members.insert(y);
        y = g.mul(y, x);
        if y == g.identity() {
            break;
        }
    }
    SubgroupSet::new(g, members).expect("powers form a subgroup")
}

/// A homomorphism between materialized groups, given as an index map.
#[derive(Clone, Debug)]
pub struct GroupHom {
    pub map: Vec<u32>,
}

impl GroupHom {
    /// Check compatibility with both multiplication tables.
    pub fn validate(&self, src: &FiniteGroup, dst: &FiniteGroup) -> Result<()> {
        if self.map.len() != src.order() {
            return Err(Error::ParentMismatch);
        }
        if self.map.iter().any(|&y| y as usize >= dst.order()) {
            return Err(Error::InvalidInput("image out of range".into()));
        }
        for a in 0..src.order() {
            for b in 0..src.order() {
                let lhs = self.map[src.mul(a, b)] as usize;
                let rhs = dst.mul(self.map[a] as usize, self.map[b] as usize);
                if lhs != rhs {
                    return Err(Error::InvalidInput(format!(
                        "not a homomorphism at ({a},{b})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn is_surjective(&self, dst: &FiniteGroup) -> bool {
        let mut hit = vec![false; dst.order()];
        for &y in &self.map {
            hit[y as usize] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x] as usize
    }

    /// Preimage of a target index set.
    pub fn preimage(&self, target: &Bitset) -> Bitset {
        Bitset::from_indices(
            self.map.len(),
            self.map
                .iter()
                .enumerate()
                .filter(|(_, &y)| target.contains(y as usize))
                .map(|(i, _)| i),
        )
    }
}

/// Materialize the quotient `g/n` for a normal subgroup `n`, together with
/// the canonical projection. Cosets are ordered by their least member, so
/// the identity coset has index 0.
pub fn quotient_group(g: &FiniteGroup, n: &SubgroupSet) -> Result<(FiniteGroup, GroupHom)> {
    n.assert_parent(g);
    if !crate::analysis::is_normal(g, n) {
        return Err(Error::HypothesisFailed(
            "quotient by a non-normal subgroup".into(),
        ));
    }
    let order = g.order();
    let mut coset_of = vec![u32::MAX; order];
    let mut reps: Vec<usize> = Vec::new();
    for x in 0..order {
        if coset_of[x] != u32::MAX {
            continue;
        }
        let c = reps.len() as u32;
        for h in n.members().iter() {
            coset_of[g.mul(x, h)] = c;
        }
        reps.push(x);
    }
    let q = reps.len();
    let mut table = vec![0u32; q * q];
    for (a, &ra) in reps.iter().enumerate() {
        for (b, &rb) in reps.iter().enumerate() {
            table[a * q + b] = coset_of[g.mul(ra, rb)];
        }
    }
    let elements = (0..q as u32).map(ElementRepr::Point).collect();
    let quotient = FiniteGroup::from_mul_table(elements, table, None)?;
    let hom = GroupHom { map: coset_of };
    hom.validate(g, &quotient)?;
    Ok((quotient, hom))
}
