//! Jacobson-radical computation for finite-dimensional algebras over GF(q).
//!
//! The algorithm is the standard characteristic-p one: restrict scalars to
//! the prime field, then peel off iterated kernels of the trace-form family
//! `f_i(z) = Tr(Z^(p^i)) / p^i mod p`, evaluated on integral lifts `Z` of the
//! regular representation. With `l` chosen so that `p^(l+1)` exceeds the
//! prime-field dimension, the chain
//!
//! ```text
//! A = I_{-1} ⊇ I_0 ⊇ ... ⊇ I_l = J(A),
//! I_i = { x in I_{i-1} : f_i(xy) = 0 for all y in I_{i-1} }
//! ```
//!
//! lands on the radical. A brute-force maximal-nilpotent-ideal search is kept
//! as an independent oracle for small algebras, and every radical handed out
//! is certified: two-sided ideal, nilpotent, semisimple quotient.

use crate::algebra::FiniteAlgebra;
use crate::error::{Error, Result};
use crate::fq::Fq;
use crate::linalg::{FqMat, RowSpace};

/// Expand a GF(q) coordinate vector into prime-field coordinates.
fn expand_p(f: &Fq, v: &[u8]) -> Vec<u8> {
    let mut out = Vec::with_capacity(v.len() * f.degree() as usize);
    for &c in v {
        out.extend(f.coeffs(c));
    }
    out
}

/// Recombine prime-field coordinates into a GF(q) coordinate vector.
fn recombine_q(f: &Fq, v: &[u8]) -> Vec<u8> {
    let k = f.degree() as usize;
    v.chunks(k).map(|chunk| f.elem_from_coeffs(chunk)).collect()
}

/// Integer matrix of left multiplication by `z` (a GF(q) coordinate vector)
/// on the prime-field basis, entries lifted to `0..p`.
fn lifted_left_regular(a: &FiniteAlgebra, z: &[u8]) -> Vec<u64> {
    let f = a.field();
    let k = f.degree() as usize;
    let n = a.dim();
    let np = n * k;
    let beta = f.elem_from_coeffs(&{
        let mut d = vec![0u8; k];
        if k > 1 {
            d[1] = 1;
        } else {
            d[0] = 1; // prime field: beta = 1, only s = 0 occurs
        }
        d
    });
    let mut m = vec![0u64; np * np];
    for j in 0..n {
        let zj = a.mul_vec(z, &a.basis_vec(j));
        for s in 0..k {
            let col = expand_p(f, &a.scale_vec(f.pow(beta, s as u64), &zj));
            for (row, &c) in col.iter().enumerate() {
                m[row * np + (j * k + s)] = c as u64;
            }
        }
    }
    m
}

fn mat_mul_mod(a: &[u64], b: &[u64], n: usize, md: u64) -> Vec<u64> {
    let mut out = vec![0u64; n * n];
    for i in 0..n {
        for l in 0..n {
            let x = a[i * n + l];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] = (out[i * n + j] + x * b[l * n + j]) % md;
            }
        }
    }
    out
}

fn mat_pow_mod(m: &[u64], n: usize, mut e: u64, md: u64) -> Vec<u64> {
    let mut base = m.to_vec();
    let mut acc = vec![0u64; n * n];
    for i in 0..n {
        acc[i * n + i] = 1 % md;
    }
    while e > 0 {
        if e & 1 == 1 {
            acc = mat_mul_mod(&acc, &base, n, md);
        }
        base = mat_mul_mod(&base, &base, n, md);
        e >>= 1;
    }
    acc
}

/// `f_i(z) = (Tr(Z^(p^i)) / p^i) mod p` on the canonical integral lift;
/// the divisibility is guaranteed on the chain members.
fn trace_form_value(a: &FiniteAlgebra, z: &[u8], i: u32) -> u8 {
    let f = a.field();
    let p = f.p() as u64;
    let np = a.dim() * f.degree() as usize;
    let lift = lifted_left_regular(a, z);
    let exp = p.pow(i);
    let md = p.pow(i + 1);
    let powered = mat_pow_mod(&lift, np, exp, md);
    let trace: u64 = (0..np).map(|d| powered[d * np + d]).sum::<u64>() % md;
    assert!(
        trace % exp == 0,
        "trace-form divisibility violated: tr = {trace}, p^i = {exp}"
    );
    ((trace / exp) % p) as u8
}

/// Basis (as a row space over GF(q)) of the Jacobson radical of `a`.
pub fn radical_space(a: &FiniteAlgebra) -> RowSpace {
    let f = a.field();
    let p = f.p() as usize;
    let fp = Fq::new(p).expect("prime subfield is supported");
    let k = f.degree() as usize;
    let np = a.dim() * k;

    // l minimal with p^(l+1) > np
    let mut l = 0u32;
    while p.pow(l + 1) <= np {
        l += 1;
    }

    // current chain member, as prime-field coordinate vectors
    let mut basis: Vec<Vec<u8>> = (0..np)
        .map(|i| {
            let mut v = vec![0u8; np];
            v[i] = 1;
            v
        })
        .collect();

    for i in 0..=l {
        if basis.is_empty() {
            break;
        }
        let m = basis.len();
        let q_basis: Vec<Vec<u8>> = basis.iter().map(|b| recombine_q(f, b)).collect();
        let mut gram = FqMat::zeros(m, m); // gram[s][r] = f_i(b_r * b_s)
        for r in 0..m {
            for s in 0..m {
                let z = a.mul_vec(&q_basis[r], &q_basis[s]);
                gram.set(s, r, trace_form_value(a, &z, i));
            }
        }
        let kernel = gram.kernel_basis(&fp);
        let mut next = RowSpace::new(np);
        for c in kernel {
            let mut v = vec![0u8; np];
            for (r, &cr) in c.iter().enumerate() {
                if cr != 0 {
                    for (x, &y) in v.iter_mut().zip(&basis[r]) {
                        *x = fp.add(*x, fp.mul(cr, y));
                    }
                }
            }
            next.insert(&fp, &v);
        }
        basis = next.basis().to_vec();
    }

    let mut space = RowSpace::new(a.dim());
    for b in &basis {
        space.insert(f, &recombine_q(f, b));
    }
    assert_eq!(
        space.dim() * k,
        basis.len(),
        "radical is not stable under field scalars"
    );
    space
}

/// Span of all pairwise products of two subspaces.
fn subspace_product(a: &FiniteAlgebra, x: &RowSpace, y: &RowSpace) -> RowSpace {
    let mut out = RowSpace::new(a.dim());
    for u in x.basis() {
        for w in y.basis() {
            out.insert(a.field(), &a.mul_vec(u, w));
        }
    }
    out
}

/// True iff the subspace powers of `s` reach zero.
pub fn subspace_is_nilpotent(a: &FiniteAlgebra, s: &RowSpace) -> bool {
    let mut current = s.clone();
    for _ in 0..=a.dim() {
        if current.dim() == 0 {
            return true;
        }
        let next = subspace_product(a, &current, s);
        if next.same_space(a.field(), &current) {
            return false;
        }
        current = next;
    }
    false
}

/// Check that `space` is a two-sided nilpotent ideal whose quotient is
/// semisimple (radical of the quotient recomputes to zero).
pub fn certify_radical(a: &FiniteAlgebra, space: &RowSpace) -> Result<()> {
    let f = a.field();
    for v in space.basis() {
        for j in 0..a.dim() {
            let e = a.basis_vec(j);
            if !space.contains(f, &a.mul_vec(&e, v)) || !space.contains(f, &a.mul_vec(v, &e)) {
                return Err(Error::InvalidInput(
                    "radical certification failed: not a two-sided ideal".into(),
                ));
            }
        }
    }
    if !subspace_is_nilpotent(a, space) {
        return Err(Error::InvalidInput(
            "radical certification failed: ideal is not nilpotent".into(),
        ));
    }
    let quotient = quotient_algebra(a, space);
    if radical_space(quotient.algebra()).dim() != 0 {
        return Err(Error::InvalidInput(
            "radical certification failed: quotient is not semisimple".into(),
        ));
    }
    Ok(())
}

/// The quotient of an algebra by an ideal, with projection and lifting along
/// the non-pivot coordinate complement.
pub struct QuotientAlgebra {
    algebra: FiniteAlgebra,
    ideal: RowSpace,
    nonpivot: Vec<usize>,
}

impl QuotientAlgebra {
    pub fn algebra(&self) -> &FiniteAlgebra {
        &self.algebra
    }

    /// Coordinates of the class of `v` on the complement basis.
    pub fn project(&self, v: &[u8]) -> Vec<u8> {
        let reduced = self.ideal.reduce(self.algebra.field(), v);
        self.nonpivot.iter().map(|&c| reduced[c]).collect()
    }

    /// The canonical representative of a quotient coordinate vector.
    pub fn lift(&self, w: &[u8]) -> Vec<u8> {
        let mut v = vec![0u8; self.ideal.dim_ambient];
        for (&c, &x) in self.nonpivot.iter().zip(w) {
            v[c] = x;
        }
        v
    }
}

/// Build `a / ideal` on the complement of the ideal's pivot coordinates.
pub fn quotient_algebra(a: &FiniteAlgebra, ideal: &RowSpace) -> QuotientAlgebra {
    let f = a.field().clone();
    let pivots = ideal.pivots();
    let nonpivot: Vec<usize> = (0..a.dim()).filter(|c| !pivots.contains(c)).collect();
    let dim = nonpivot.len();
    let extract = |v: &[u8]| -> Vec<u8> {
        let r = ideal.reduce(&f, v);
        nonpivot.iter().map(|&c| r[c]).collect()
    };
    let mut products = Vec::with_capacity(dim * dim);
    for &c1 in &nonpivot {
        for &c2 in &nonpivot {
            let mut full = vec![0u8; a.dim()];
            full[c1] = 1;
            let mut e2 = vec![0u8; a.dim()];
            e2[c2] = 1;
            products.push(extract(&a.mul_vec(&full, &e2)));
        }
    }
    let one = extract(&a.one());
    QuotientAlgebra {
        algebra: FiniteAlgebra::new(f, dim, products, one),
        ideal: ideal.clone(),
        nonpivot,
    }
}

/// Brute-force oracle: the radical is exactly the set of elements whose
/// generated two-sided ideal is nilpotent. Enumerates all `q^dim` elements;
/// only usable for small algebras.
pub fn radical_oracle(a: &FiniteAlgebra) -> Result<RowSpace> {
    let q = a.field().q();
    let n = a.dim();
    let total = q
        .checked_pow(n as u32)
        .filter(|&t| t <= 20_000)
        .ok_or_else(|| Error::CapExceeded(format!("q^dim = {q}^{n} too large for the oracle")))?;
    let f = a.field();
    let mut space = RowSpace::new(n);
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
        if codes.iter().all(|&c| c == 0) || space.contains(f, &codes) {
            continue;
        }
        let mut ideal = RowSpace::new(n);
        for i in 0..n {
            let left = a.mul_vec(&a.basis_vec(i), &codes);
            for j in 0..n {
                ideal.insert(f, &a.mul_vec(&left, &a.basis_vec(j)));
            }
        }
        if subspace_is_nilpotent(a, &ideal) {
            space.insert(f, &codes);
        }
    }
    Ok(space)
}
