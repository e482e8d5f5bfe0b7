//! Finite group algebras F_q[G]: convolution arithmetic, unit testing via
//! the regular representation, the Jacobson radical and its consequences
//! (unit lifting, O_p(G), the radical membership law and the commutativity
//! of the semisimple quotient when the derived subgroup is a p-group).

use std::collections::BTreeMap;

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::fq::Fq;
use crate::group::{close_indices, FiniteGroup, SubgroupSet};
use crate::lattice::normal_subgroups;
use crate::linalg::{FqMat, RowSpace};
use crate::{ALGEBRA_FIELD_CAP, ALGEBRA_GROUP_CAP};

/// A finite-dimensional associative unital algebra over GF(q), given by
/// structure constants on a fixed basis.
#[derive(Clone, Debug)]
pub struct FiniteAlgebra {
    field: Fq,
    dim: usize,
    /// `products[i*dim + j]` = dense coefficient vector of `b_i * b_j`.
    products: Vec<Vec<u8>>,
    one: Vec<u8>,
}

impl FiniteAlgebra {
    pub fn new(field: Fq, dim: usize, products: Vec<Vec<u8>>, one: Vec<u8>) -> FiniteAlgebra {
        assert_eq!(products.len(), dim * dim);
        assert!(products.iter().all(|v| v.len() == dim));
        assert_eq!(one.len(), dim);
        FiniteAlgebra {
            field,
            dim,
            products,
            one,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> &Fq {
        &self.field
    }

    pub fn one(&self) -> Vec<u8> {
        self.one.clone()
    }

    pub fn zero(&self) -> Vec<u8> {
        vec![0; self.dim]
    }

    pub fn basis_vec(&self, i: usize) -> Vec<u8> {
        let mut v = self.zero();
        v[i] = 1;
        v
    }

    pub fn add_vec(&self, a: &[u8], b: &[u8]) -> Vec<u8> {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| self.field.add(x, y))
            .collect()
    }

    pub fn sub_vec(&self, a: &[u8], b: &[u8]) -> Vec<u8> {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| self.field.sub(x, y))
            .collect()
    }

    pub fn scale_vec(&self, c: u8, a: &[u8]) -> Vec<u8> {
        a.iter().map(|&x| self.field.mul(c, x)).collect()
    }

    pub fn mul_vec(&self, a: &[u8], b: &[u8]) -> Vec<u8> {
        let mut out = self.zero();
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let c = self.field.mul(ai, bj);
                let prod = &self.products[i * self.dim + j];
                for (o, &p) in out.iter_mut().zip(prod) {
                    *o = self.field.add(*o, self.field.mul(c, p));
                }
            }
        }
        out
    }

    pub fn pow_vec(&self, a: &[u8], mut e: u64) -> Vec<u8> {
        let mut base = a.to_vec();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_vec(&acc, &base);
            }
            base = self.mul_vec(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Matrix of left multiplication by `a` on the basis (column `j` holds
    /// the coordinates of `a * b_j`).
    pub fn left_regular(&self, a: &[u8]) -> FqMat {
        let mut m = FqMat::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.mul_vec(a, &self.basis_vec(j));
            for (i, &v) in col.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    /// Invert through the regular representation: `a` is a unit iff its left
    /// regular matrix is invertible; the inverse is read off the identity's
    /// coordinate vector.
    pub fn inverse_vec(&self, a: &[u8]) -> Option<Vec<u8>> {
        let l = self.left_regular(a);
        let inv = l.solve(&self.field, &self.one)?;
        if l.rank(&self.field) != self.dim {
            return None;
        }
        debug_assert_eq!(self.mul_vec(a, &inv), self.one);
        debug_assert_eq!(self.mul_vec(&inv, a), self.one);
        Some(inv)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| {
            (i + 1..self.dim)
                .all(|j| self.products[i * self.dim + j] == self.products[j * self.dim + i])
        })
    }

    /// Dimension of the center `{x : xb = bx for all basis b}`.
    pub fn center_dimension(&self) -> usize {
        // stack the maps x -> x*b_k - b_k*x and take the common kernel
        let mut rows = Vec::with_capacity(self.dim * self.dim);
        for k in 0..self.dim {
            // row block for basis element k: entry (i, j) = coeff of b_i in
            // b_j*b_k - b_k*b_j
            for i in 0..self.dim {
                let mut row = vec![0u8; self.dim];
                for (j, slot) in row.iter_mut().enumerate() {
                    let jk = &self.products[j * self.dim + k];
                    let kj = &self.products[k * self.dim + j];
                    *slot = self.field.sub(jk[i], kj[i]);
                }
                rows.push(row);
            }
        }
        let m = FqMat::from_rows(rows);
        m.kernel_basis(&self.field).len()
    }
}

/// The group algebra F_q[G] with its dense structure-constant form.
pub struct GroupAlgebra<'g> {
    group: &'g FiniteGroup,
    field: Fq,
    algebra: FiniteAlgebra,
    tag: u64,
}

/// A finite-support map from group elements to nonzero field coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraElement {
    tag: u64,
    coeffs: BTreeMap<u32, u8>,
}

impl AlgebraElement {
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.keys().map(|&k| k as usize)
    }

    pub fn support_size(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, g: usize) -> u8 {
        self.coeffs.get(&(g as u32)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff_map(&self) -> &BTreeMap<u32, u8> {
        &self.coeffs
    }
}

/// A basis of a two-sided ideal of F_q[G].
#[derive(Clone, Debug)]
pub struct IdealBasis {
    pub basis: Vec<AlgebraElement>,
    pub dim: usize,
}

impl<'g> GroupAlgebra<'g> {
    pub fn new(group: &'g FiniteGroup, field: Fq) -> Result<GroupAlgebra<'g>> {
        if group.order() > ALGEBRA_GROUP_CAP {
            return Err(Error::CapExceeded(format!(
                "group order {} exceeds the group-algebra cap {ALGEBRA_GROUP_CAP}",
                group.order()
            )));
        }
        if field.q() > ALGEBRA_FIELD_CAP {
            return Err(Error::CapExceeded(format!(
                "field size {} exceeds the group-algebra cap {ALGEBRA_FIELD_CAP}",
                field.q()
            )));
        }
        let n = group.order();
        let mut products = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut v = vec![0u8; n];
                v[group.mul(i, j)] = 1;
                products.push(v);
            }
        }
        let mut one = vec![0u8; n];
        one[group.identity()] = 1;
        let tag = group.fingerprint() ^ (field.q() as u64).wrapping_mul(0x9e3779b97f4a7c15);
        Ok(GroupAlgebra {
            group,
            algebra: FiniteAlgebra::new(field.clone(), n, products, one),
            field,
            tag,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        self.group
    }

    pub fn field(&self) -> &Fq {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.group.order()
    }

    pub fn dense_form(&self) -> &FiniteAlgebra {
        &self.algebra
    }

    fn check_parent(&self, a: &AlgebraElement) -> Result<()> {
        if a.tag != self.tag {
            return Err(Error::ParentMismatch);
        }
        Ok(())
    }

    pub fn from_coeffs<I: IntoIterator<Item = (usize, u8)>>(&self, it: I) -> AlgebraElement {
        let mut coeffs = BTreeMap::new();
        for (g, c) in it {
            assert!(g < self.dim(), "support index out of range");
            assert!((c as usize) < self.field.q(), "coefficient out of range");
            if c != 0 {
                let entry = coeffs.entry(g as u32).or_insert(0);
                *entry = self.field.add(*entry, c);
                if *entry == 0 {
                    coeffs.remove(&(g as u32));
                }
            }
        }
        AlgebraElement {
            tag: self.tag,
            coeffs,
        }
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement {
            tag: self.tag,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> AlgebraElement {
        self.from_coeffs([(self.group.identity(), 1)])
    }

    /// The image of a group element under the canonical embedding.
    pub fn embed(&self, g: usize) -> AlgebraElement {
        self.from_coeffs([(g, 1)])
    }

    pub fn to_dense(&self, a: &AlgebraElement) -> Vec<u8> {
        let mut v = vec![0u8; self.dim()];
        for (&g, &c) in &a.coeffs {
            v[g as usize] = c;
        }
        v
    }

    pub fn from_dense(&self, v: &[u8]) -> AlgebraElement {
        self.from_coeffs(v.iter().enumerate().map(|(g, &c)| (g, c)))
    }

    pub fn add(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_parent(a)?;
        self.check_parent(b)?;
        let mut coeffs = a.coeffs.clone();
        for (&g, &c) in &b.coeffs {
            let entry = coeffs.entry(g).or_insert(0);
            *entry = self.field.add(*entry, c);
            if *entry == 0 {
                coeffs.remove(&g);
            }
        }
        Ok(AlgebraElement {
            tag: self.tag,
            coeffs,
        })
    }

    pub fn negate(&self, a: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            tag: self.tag,
            coeffs: a
                .coeffs
                .iter()
                .map(|(&g, &c)| (g, self.field.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        self.add(a, &self.negate(b))
    }

    /// Convolution product: the coefficient of `t` is the sum of `a_g b_h`
    /// over factorizations `gh = t`.
    pub fn multiply(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_parent(a)?;
        self.check_parent(b)?;
        let mut coeffs: BTreeMap<u32, u8> = BTreeMap::new();
        for (&g, &ag) in &a.coeffs {
            for (&h, &bh) in &b.coeffs {
                let t = self.group.mul(g as usize, h as usize) as u32;
                let c = self.field.mul(ag, bh);
                let entry = coeffs.entry(t).or_insert(0);
                *entry = self.field.add(*entry, c);
                if *entry == 0 {
                    coeffs.remove(&t);
                }
            }
        }
        Ok(AlgebraElement {
            tag: self.tag,
            coeffs,
        })
    }

    pub fn pow(&self, a: &AlgebraElement, e: u64) -> Result<AlgebraElement> {
        self.check_parent(a)?;
        Ok(self.from_dense(&self.algebra.pow_vec(&self.to_dense(a), e)))
    }

    /// Unit test through the regular representation; returns the inverse
    /// when `a` is a unit.
    pub fn is_unit(&self, a: &AlgebraElement) -> Result<Option<AlgebraElement>> {
        self.check_parent(a)?;
        Ok(self
            .algebra
            .inverse_vec(&self.to_dense(a))
            .map(|v| self.from_dense(&v)))
    }

    /// Exhaustive inverse-search oracle, usable when `q^|G|` is small.
    pub fn is_unit_exhaustive(&self, a: &AlgebraElement) -> Result<Option<AlgebraElement>> {
        self.check_parent(a)?;
        let n = self.dim();
        let q = self.field.q();
        let total = q
            .checked_pow(n as u32)
            .filter(|&t| t <= 1 << 20)
            .ok_or_else(|| {
                Error::CapExceeded(format!(
                    "q^|G| = {q}^{n} is too large for exhaustive search"
                ))
            })?;
        let one = self.one();
        let mut codes = vec![0u8; n];
        for _ in 0..total {
            let b = self.from_coeffs(codes.iter().enumerate().map(|(g, &c)| (g, c)));
            if self.multiply(a, &b)? == one && self.multiply(&b, a)? == one {
                return Ok(Some(b));
            }
            // odometer
            for d in codes.iter_mut() {
                *d += 1;
                if (*d as usize) < q {
                    break;
                }
                *d = 0;
            }
        }
        Ok(None)
    }

    pub fn render(&self, a: &AlgebraElement) -> String {
        if a.is_zero() {
            return "0".into();
        }
        a.coeffs
            .iter()
            .map(|(&g, &c)| {
                format!(
                    "{}*[{}]",
                    self.field.fmt_elem(c),
                    self.group.element_label(g as usize)
                )
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// The Jacobson radical, with nilpotency and semisimple-quotient
    /// certificates checked before returning.
    pub fn jacobson_radical(&self) -> Result<IdealBasis> {
        let space = crate::radical::radical_space(&self.algebra);
        crate::radical::certify_radical(&self.algebra, &space)?;
        let basis: Vec<AlgebraElement> = space.basis().iter().map(|v| self.from_dense(v)).collect();
        let ideal = IdealBasis {
            dim: basis.len(),
            basis,
        };
        self.check_ideal_basis(&ideal)?;
        Ok(ideal)
    }

    /// Validate linear independence and two-sided closure under group-element
    /// multiplication for an ideal basis.
    pub fn check_ideal_basis(&self, ideal: &IdealBasis) -> Result<()> {
        let mut space = RowSpace::new(self.dim());
        for b in &ideal.basis {
            self.check_parent(b)?;
            if !space.insert(&self.field, &self.to_dense(b)) {
                return Err(Error::InvalidInput(
                    "ideal basis is linearly dependent".into(),
                ));
            }
        }
        for b in &ideal.basis {
            for g in 0..self.dim() {
                let eg = self.embed(g);
                let left = self.to_dense(&self.multiply(&eg, b)?);
                let right = self.to_dense(&self.multiply(b, &eg)?);
                if !space.contains(&self.field, &left) || !space.contains(&self.field, &right) {
                    return Err(Error::InvalidInput(
                        "ideal basis is not closed under group multiplication".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    fn radical_row_space(&self, ideal: &IdealBasis) -> RowSpace {
        let mut space = RowSpace::new(self.dim());
        for b in &ideal.basis {
            space.insert(&self.field, &self.to_dense(b));
        }
        space
    }

    /// Lift a unit of F_q[G]/J back to a unit of F_q[G]. The input is a
    /// representative of the residue class; any representative of a unit
    /// class works because the radical is nil, and the returned preimage is
    /// certified through [`GroupAlgebra::is_unit`].
    pub fn unit_lift(&self, ideal: &IdealBasis, rep: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_parent(rep)?;
        let space = self.radical_row_space(ideal);
        let quotient = crate::radical::quotient_algebra(&self.algebra, &space);
        let class = quotient.project(&self.to_dense(rep));
        if quotient.algebra().inverse_vec(&class).is_none() {
            return Err(Error::NotUnitModRadical);
        }
        let unit = self
            .is_unit(rep)?
            .map(|_inverse| rep.clone())
            .expect("every preimage of a unit class modulo a nil ideal is a unit");
        Ok(unit)
    }

    /// Executable witness of `(1 - a)^(p^m) = 1 - a^(p^m)` in characteristic p.
    pub fn freshman_power_check(&self, a: &AlgebraElement, m: u32) -> Result<bool> {
        self.check_parent(a)?;
        let p = self.field.p() as u64;
        let e = p.pow(m);
        let one = self.one();
        let lhs = self.pow(&self.sub(&one, a)?, e)?;
        let rhs = self.sub(&one, &self.pow(a, e)?)?;
        Ok(lhs == rhs)
    }
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn is_p_power(mut n: usize, p: usize) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// O_p(G): the join of all normal p-subgroups, itself verified to be a
/// normal p-subgroup.
pub fn maximal_normal_p_subgroup(g: &FiniteGroup, p: usize) -> Result<SubgroupSet> {
    if !is_prime(p) {
        return Err(Error::InvalidInput(format!("{p} is not prime")));
    }
    let mut union = Bitset::singleton(g.order(), g.identity());
    for n in normal_subgroups(g) {
        if is_p_power(n.order(), p) {
            union.union_with(n.members());
        }
    }
    let result = SubgroupSet::new(g, close_indices(g, &union))?;
    assert!(
        is_p_power(result.order(), p),
        "join of normal p-subgroups is a p-group"
    );
    assert!(crate::analysis::is_normal(g, &result));
    Ok(result)
}

/// Outcome of comparing `G ∩ (1 + J(F_p G))` with `O_p(G)`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct RadicalMembershipRecord {
    pub group_side: Vec<u32>,
    pub o_p: Vec<u32>,
    pub equal: bool,
}

/// Compute both sides of `G ∩ (1 + J(F_p G)) = O_p(G)` and compare.
pub fn verify_lemma_6_4(g: &FiniteGroup, p: usize) -> Result<RadicalMembershipRecord> {
    let field = Fq::new(p)?;
    let ga = GroupAlgebra::new(g, field.clone())?;
    let ideal = ga.jacobson_radical()?;
    let space = ga.radical_row_space(&ideal);
    let one = ga.one();
    let mut group_side = Vec::new();
    for x in 0..g.order() {
        let diff = ga.sub(&ga.embed(x), &one)?;
        if space.contains(&field, &ga.to_dense(&diff)) {
            group_side.push(x as u32);
        }
    }
    let o_p: Vec<u32> = maximal_normal_p_subgroup(g, p)?
        .indices()
        .iter()
        .map(|&i| i as u32)
        .collect();
    let equal = group_side == o_p;
    Ok(RadicalMembershipRecord {
        group_side,
        o_p,
        equal,
    })
}

/// Outcome of the semisimple-quotient commutativity check.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct QuotientCommutativityRecord {
    pub derived_order: usize,
    pub radical_dim: usize,
    pub commutative: bool,
}

/// When the derived subgroup G' is a p-group, F_p[G]/J must be commutative.
/// Errors with [`Error::HypothesisFailed`] if G' is not a p-group.
pub fn quotient_commutativity_check(
    g: &FiniteGroup,
    p: usize,
) -> Result<QuotientCommutativityRecord> {
    if !is_prime(p) {
        return Err(Error::InvalidInput(format!("{p} is not prime")));
    }
    let derived = crate::analysis::commutator_subgroup(g, &g.full_set());
    if !is_p_power(derived.order(), p) {
        return Err(Error::HypothesisFailed(format!(
            "derived subgroup has order {}, not a power of {p}",
            derived.order()
        )));
    }
    let field = Fq::new(p)?;
    let ga = GroupAlgebra::new(g, field.clone())?;
    let ideal = ga.jacobson_radical()?;
    let space = ga.radical_row_space(&ideal);
    let quotient = crate::radical::quotient_algebra(ga.dense_form(), &space);
    Ok(QuotientCommutativityRecord {
        derived_order: derived.order(),
        radical_dim: ideal.dim,
        commutative: quotient.algebra().is_commutative(),
    })
}

/// Dimension of the center of F_q[G]/J. Over a splitting field this equals
/// the number of simple components of the quotient; otherwise it only bounds
/// it from above, so reports carry that caveat.
pub fn center_dimension_of_semisimple_quotient(g: &FiniteGroup, q: usize) -> Result<usize> {
    let field = Fq::new(q)?;
    let ga = GroupAlgebra::new(g, field)?;
    let ideal = ga.jacobson_radical()?;
    let space = ga.radical_row_space(&ideal);
    let quotient = crate::radical::quotient_algebra(ga.dense_form(), &space);
    Ok(quotient.algebra().center_dimension())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn c2() -> FiniteGroup {
        corpus::cyclic_group(2).unwrap()
    }

    #[test]
    fn squares_vanish_in_f2_c2() {
        let g = c2();
        let ga = GroupAlgebra::new(&g, Fq::new(2).unwrap()).unwrap();
        let one_plus_g = ga.from_coeffs([(0, 1), (1, 1)]);
        let sq = ga.multiply(&one_plus_g, &one_plus_g).unwrap();
        assert!(sq.is_zero());
    }

    #[test]
    fn multiplying_by_one_is_identity() {
        let g = corpus::symmetric_group(3).unwrap();
        let ga = GroupAlgebra::new(&g, Fq::new(5).unwrap()).unwrap();
        let a = ga.from_coeffs([(0, 2), (3, 4), (5, 1)]);
        assert_eq!(ga.multiply(&a, &ga.one()).unwrap(), a);
        assert_eq!(ga.multiply(&ga.one(), &a).unwrap(), a);
    }

    #[test]
    fn group_element_products_agree_with_the_table() {
        let g = corpus::symmetric_group(3).unwrap();
        let ga = GroupAlgebra::new(&g, Fq::new(3).unwrap()).unwrap();
        for a in 0..g.order() {
            for b in 0..g.order() {
                let prod = ga.multiply(&ga.embed(a), &ga.embed(b)).unwrap();
                assert_eq!(prod, ga.embed(g.mul(a, b)));
            }
        }
    }

    #[test]
    fn parent_mismatch_is_detected() {
        let g1 = c2();
        let g2 = corpus::cyclic_group(3).unwrap();
        let ga1 = GroupAlgebra::new(&g1, Fq::new(2).unwrap()).unwrap();
        let ga2 = GroupAlgebra::new(&g2, Fq::new(2).unwrap()).unwrap();
        let a = ga1.one();
        let b = ga2.one();
        assert!(matches!(ga1.multiply(&a, &b), Err(Error::ParentMismatch)));
    }

    #[test]
    fn trivial_units_and_a_zero_divisor() {
        let g = c2();
        // over GF(3), 1+g is a zero divisor: (1+g)(1-g) = 1 - g^2 = 0
        let ga = GroupAlgebra::new(&g, Fq::new(3).unwrap()).unwrap();
        for gi in 0..2 {
            for c in 1..3u8 {
                let a = ga.from_coeffs([(gi, c)]);
                assert!(ga.is_unit(&a).unwrap().is_some(), "trivial unit {gi},{c}");
            }
        }
        let one_plus_g = ga.from_coeffs([(0, 1), (1, 1)]);
        assert!(ga.is_unit(&one_plus_g).unwrap().is_none());
        assert!(ga.is_unit_exhaustive(&one_plus_g).unwrap().is_none());
        // and over GF(2) it is nilpotent, hence certainly not a unit
        let ga2 = GroupAlgebra::new(&g, Fq::new(2).unwrap()).unwrap();
        let e = ga2.from_coeffs([(0, 1), (1, 1)]);
        assert!(ga2.is_unit(&e).unwrap().is_none());
    }

    #[test]
    fn regular_representation_matches_exhaustive_inverse_search() {
        let g = corpus::cyclic_group(3).unwrap();
        let ga = GroupAlgebra::new(&g, Fq::new(2).unwrap()).unwrap();
        // all 8 elements of GF(2)[C3]
        for mask in 0u32..8 {
            let a = ga.from_coeffs((0..3).map(|i| (i, (mask >> i & 1) as u8)));
            let fast = ga.is_unit(&a).unwrap();
            let slow = ga.is_unit_exhaustive(&a).unwrap();
            assert_eq!(fast.is_some(), slow.is_some(), "mask {mask}");
            if let (Some(f), Some(s)) = (fast, slow) {
                assert_eq!(f, s);
            }
        }
    }

    #[test]
    fn freshman_power_identity_holds() {
        let g = corpus::dihedral_group(4).unwrap();
        let ga = GroupAlgebra::new(&g, Fq::new(2).unwrap()).unwrap();
        let zero = ga.zero();
        assert!(ga.freshman_power_check(&zero, 1).unwrap());
        let a = ga.from_coeffs([(1, 1), (3, 1), (5, 1)]);
        for m in 0..=3 {
            assert!(ga.freshman_power_check(&a, m).unwrap());
        }
        let gb = corpus::symmetric_group(3).unwrap();
        let gab = GroupAlgebra::new(&gb, Fq::new(3).unwrap()).unwrap();
        let b = gab.from_coeffs([(0, 2), (2, 1), (4, 2)]);
        for m in 0..=2 {
            assert!(gab.freshman_power_check(&b, m).unwrap());
        }
    }

    #[test]
    fn nilpotent_case_of_freshman_power() {
        // x nilpotent with x^s = 0 and p^m >= s forces (1-x)^(p^m) = 1
        let g = c2();
        let ga = GroupAlgebra::new(&g, Fq::new(2).unwrap()).unwrap();
        let x = ga.from_coeffs([(0, 1), (1, 1)]); // x^2 = 0
        let one = ga.one();
        let lhs = ga.pow(&ga.sub(&one, &x).unwrap(), 2).unwrap();
        assert_eq!(lhs, one);
    }

    #[test]
    fn o_p_of_standard_groups() {
        let s3 = corpus::symmetric_group(3).unwrap();
        assert_eq!(maximal_normal_p_subgroup(&s3, 2).unwrap().order(), 1);
        assert_eq!(maximal_normal_p_subgroup(&s3, 3).unwrap().order(), 3);
        let d4 = corpus::dihedral_group(4).unwrap();
        assert_eq!(maximal_normal_p_subgroup(&d4, 2).unwrap().order(), 8);
        let m16 = corpus::modular_group_16().unwrap();
        assert_eq!(maximal_normal_p_subgroup(&m16, 2).unwrap().order(), 16);
        assert!(maximal_normal_p_subgroup(&s3, 4).is_err());
    }

    #[test]
    fn caps_are_enforced() {
        let g = corpus::cyclic_group(33).unwrap();
        assert!(matches!(
            GroupAlgebra::new(&g, Fq::new(2).unwrap()),
            Err(Error::CapExceeded(_))
        ));
    }
}
