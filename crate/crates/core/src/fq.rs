//! Arithmetic in GF(q) for the desk-scale field sizes q in {2,3,4,5,7,8,9}.
//!
//! Elements are integer codes `0..q`: the base-p digits of a code are the
//! coefficients of the residue polynomial relative to the fixed irreducible
//! modulus, least significant digit first. Code 0 is zero and code 1 is one,
//! for every q. Full multiplication and inverse tables are precomputed, which
//! also exhaustively certifies the field axioms at construction time.

use crate::error::{Error, Result};

/// Supported field sizes.
pub const SUPPORTED_Q: [usize; 7] = [2, 3, 4, 5, 7, 8, 9];

/// Conway-style irreducible moduli, coefficients of x^0..x^k (monic).
/// Prime fields use the degree-1 polynomial x, which is never consulted.
fn modulus_for(q: usize) -> Option<(u8, u8, Vec<u8>)> {
    match q {
        2 => Some((2, 1, vec![0, 1])),
        3 => Some((3, 1, vec![0, 1])),
        4 => Some((2, 2, vec![1, 1, 1])), // x^2 + x + 1
        5 => Some((5, 1, vec![0, 1])),
        7 => Some((7, 1, vec![0, 1])),
        8 => Some((2, 3, vec![1, 1, 0, 1])), // x^3 + x + 1
        9 => Some((3, 2, vec![2, 2, 1])),    // x^2 + 2x + 2
        _ => None,
    }
}

/// A concrete finite field GF(p^k) with precomputed operation tables.
#[derive(Clone, PartialEq, Eq)]
pub struct Fq {
    p: u8,
    k: u8,
    q: usize,
    modulus: Vec<u8>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>, // inv[0] unused
}

impl Fq {
    pub fn new(q: usize) -> Result<Fq> {
        let (p, k, modulus) = modulus_for(q)
            .ok_or_else(|| Error::InvalidInput(format!("unsupported field size {q}")))?;
        let mut f = Fq {
            p,
            k,
            q,
            modulus,
            add: vec![0; q * q],
            mul: vec![0; q * q],
            neg: vec![0; q],
            inv: vec![0; q],
        };
        for a in 0..q {
            for b in 0..q {
                f.add[a * q + b] = f.add_poly(a as u8, b as u8);
                f.mul[a * q + b] = f.mul_poly(a as u8, b as u8);
            }
        }
        for a in 0..q {
            f.neg[a] = (0..q as u8)
                .find(|&b| f.add[a * q + b as usize] == 0)
                .expect("additive inverse");
        }
        for a in 1..q {
            f.inv[a] = (1..q as u8)
                .find(|&b| f.mul[a * q + b as usize] == 1)
                .ok_or_else(|| {
                    Error::InvalidInput(format!("modulus for q={q} is not irreducible"))
                })?;
        }
        Ok(f)
    }

    fn digits(&self, a: u8) -> Vec<u8> {
        let mut v = vec![0u8; self.k as usize];
        let mut a = a;
        for d in v.iter_mut() {
            *d = a % self.p;
            a /= self.p;
        }
        v
    }

    fn code_from_digits(&self, d: &[u8]) -> u8 {
        let mut a = 0u8;
        for &c in d.iter().rev() {
            a = a * self.p + c % self.p;
        }
        a
    }

    fn add_poly(&self, a: u8, b: u8) -> u8 {
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<u8> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.code_from_digits(&sum)
    }

    fn mul_poly(&self, a: u8, b: u8) -> u8 {
        let (da, db) = (self.digits(a), self.digits(b));
        let k = self.k as usize;
        let mut prod = vec![0u16; 2 * k - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] += x as u16 * y as u16;
            }
        }
        // reduce by the monic modulus
        for i in (k..prod.len()).rev() {
            let c = prod[i] % self.p as u16;
            if c != 0 {
                for (j, &m) in self.modulus.iter().enumerate().take(k) {
                    let sub = c * m as u16 % self.p as u16;
                    prod[i - k + j] += self.p as u16 * self.p as u16 - sub;
                }
            }
            prod[i] = 0;
        }
        let digits: Vec<u8> = prod[..k]
            .iter()
            .map(|&c| (c % self.p as u16) as u8)
            .collect();
        self.code_from_digits(&digits)
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn p(&self) -> u8 {
        self.p
    }

    pub fn degree(&self) -> u8 {
        self.k
    }

    /// Coefficient vector of an element over GF(p), length `degree()`.
    pub fn coeffs(&self, a: u8) -> Vec<u8> {
        self.digits(a)
    }

    /// Inverse of [`Fq::coeffs`].
    pub fn elem_from_coeffs(&self, coeffs: &[u8]) -> u8 {
        debug_assert_eq!(coeffs.len(), self.k as usize);
        self.code_from_digits(coeffs)
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse. Panics on zero.
    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        assert!(a != 0, "inverse of zero");
        self.inv[a as usize]
    }

    pub fn pow(&self, a: u8, mut e: u64) -> u8 {
        let mut base = a;
        let mut acc = 1u8;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: u8) -> usize {
        assert!(a != 0);
        let mut x = a;
        let mut n = 1;
        while x != 1 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    /// The smallest element code generating the multiplicative group.
    pub fn primitive_element(&self) -> u8 {
        (1..self.q as u8)
            .find(|&a| self.order(a) == self.q - 1)
            .expect("cyclic multiplicative group")
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        0..self.q as u8
    }

    /// Human-readable modulus: the prime for prime fields, the irreducible
    /// polynomial otherwise.
    pub fn modulus_description(&self) -> String {
        if self.k == 1 {
            return format!("prime {}", self.p);
        }
        let mut parts = Vec::new();
        for (i, &c) in self.modulus.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            parts.push(match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "x".into(),
                (1, c) => format!("{c}x"),
                (i, 1) => format!("x^{i}"),
                (i, c) => format!("{c}x^{i}"),
            });
        }
        parts.join("+")
    }

    /// Render an element: plain integer for prime fields, polynomial in `w`
    /// otherwise.
    pub fn fmt_elem(&self, a: u8) -> String {
        if self.k == 1 {
            return a.to_string();
        }
        let d = self.digits(a);
        let mut parts = Vec::new();
        for (i, &c) in d.iter().enumerate() {
            if c == 0 {
                continue;
            }
            parts.push(match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "w".to_string(),
                (1, c) => format!("{c}w"),
                (i, 1) => format!("w^{i}"),
                (i, c) => format!("{c}w^{i}"),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }
}

impl std::fmt::Debug for Fq {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_field_axioms(f: &Fq) {
        let q = f.q() as u8;
        for a in 0..q {
            assert_eq!(f.add(a, 0), a);
            assert_eq!(f.mul(a, 1), a);
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
            for b in 0..q {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in 0..q {
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn all_supported_fields_satisfy_the_axioms() {
        for q in SUPPORTED_Q {
            check_field_axioms(&Fq::new(q).unwrap());
        }
    }

    #[test]
    fn unsupported_sizes_are_rejected() {
        assert!(Fq::new(6).is_err());
        assert!(Fq::new(16).is_err());
    }

    #[test]
    fn gf4_cube_is_one() {
        let f = Fq::new(4).unwrap();
        let w = f.primitive_element();
        assert_eq!(f.order(w), 3);
        assert_eq!(f.pow(w, 3), 1);
        // w^2 = w + 1 under x^2 + x + 1
        assert_eq!(f.mul(w, w), f.add(w, 1));
    }

    #[test]
    fn gf9_has_order_eight_generator() {
        let f = Fq::new(9).unwrap();
        let g = f.primitive_element();
        assert_eq!(f.order(g), 8);
        let mut seen: Vec<u8> = (0..8).map(|e| f.pow(g, e)).collect();
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), 8);
    }

    #[test]
    fn prime_field_is_integers_mod_p() {
        let f = Fq::new(7).unwrap();
        for a in 0..7u8 {
            for b in 0..7u8 {
                assert_eq!(f.add(a, b), (a + b) % 7);
                assert_eq!(f.mul(a, b), (a * b) % 7);
            }
        }
        assert_eq!(f.primitive_element(), 3);
    }
}
