//! Square matrices over GF(q) as group elements, and the transvection /
//! dilation generator calculus for GL_n and SL_n.
//!
//! Indices in the generator constructors are 1-based, matching the usual
//! t_ij / d_i naming that the reports print.

use crate::error::{Error, Result};
use crate::fq::Fq;
use crate::linalg::FqMat;

/// An n x n matrix over GF(q); entries are field codes stored row-major.
/// Equality and hashing are on the raw entry tuple, which is the canonical
/// form used to index group elements.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatrixFq {
    pub n: usize,
    pub entries: Vec<u8>,
}

impl MatrixFq {
    pub fn identity(n: usize) -> MatrixFq {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        MatrixFq { n, entries }
    }

    pub fn from_rows(rows: &[&[u8]]) -> MatrixFq {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n));
        MatrixFq {
            n,
            entries: rows.concat(),
        }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.n + j]
    }

    pub fn mul(&self, f: &Fq, other: &MatrixFq) -> MatrixFq {
        debug_assert_eq!(self.n, other.n);
        let n = self.n;
        let mut entries = vec![0u8; n * n];
        for i in 0..n {
            for l in 0..n {
                let a = self.entries[i * n + l];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let cell = &mut entries[i * n + j];
                    *cell = f.add(*cell, f.mul(a, other.entries[l * n + j]));
                }
            }
        }
        MatrixFq { n, entries }
    }

    pub fn det(&self, f: &Fq) -> u8 {
        FqMat {
            rows: self.n,
            cols: self.n,
            data: self.entries.clone(),
        }
        .det(f)
    }

    pub fn is_identity(&self) -> bool {
        *self == MatrixFq::identity(self.n)
    }

    pub fn render(&self, f: &Fq) -> String {
        (0..self.n)
            .map(|i| {
                let row: Vec<String> = (0..self.n).map(|j| f.fmt_elem(self.at(i, j))).collect();
                format!("[{}]", row.join(" "))
            })
            .collect::<Vec<_>>()
            .join("")
    }
}

impl std::fmt::Debug for MatrixFq {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "M{}x{}{:?}", self.n, self.n, self.entries)
    }
}

fn check_indices(n: usize, i: usize, j: usize) -> Result<()> {
    if i == 0 || j == 0 || i > n || j > n {
        return Err(Error::IndexError(format!(
            "indices ({i},{j}) out of range for n={n}"
        )));
    }
    if i == j {
        return Err(Error::IndexError("transvection requires i != j".into()));
    }
    Ok(())
}

/// The elementary matrix `I + a*E_ij` with `i != j` (1-based indices).
pub fn transvection(f: &Fq, n: usize, i: usize, j: usize, a: u8) -> Result<MatrixFq> {
    check_indices(n, i, j)?;
    let mut m = MatrixFq::identity(n);
    m.entries[(i - 1) * n + (j - 1)] = f.add(m.at(i - 1, j - 1), a);
    Ok(m)
}

/// The diagonal matrix `I + (a-1)*E_ii` with `a != 0` (1-based index).
pub fn dilation(f: &Fq, n: usize, i: usize, a: u8) -> Result<MatrixFq> {
    if i == 0 || i > n {
        return Err(Error::IndexError(format!(
            "index {i} out of range for n={n}"
        )));
    }
    if a == 0 {
        return Err(Error::InvalidInput(
            "dilation scalar must be nonzero".into(),
        ));
    }
    let _ = f;
    let mut m = MatrixFq::identity(n);
    m.entries[(i - 1) * n + (i - 1)] = a;
    Ok(m)
}

/// The order-two generator `d_i(-1) * t_ij(a)`.
pub fn t_prime(f: &Fq, n: usize, i: usize, j: usize, a: u8) -> Result<MatrixFq> {
    check_indices(n, i, j)?;
    let d = dilation(f, n, i, f.neg(1))?;
    let t = transvection(f, n, i, j, a)?;
    Ok(d.mul(f, &t))
}

/// Evaluates both sides of `d_i(-1) t_ij(a) d_i(-1) = t_ij(-a)` and reports
/// whether they agree.
pub fn conjugation_identity_check(f: &Fq, n: usize, i: usize, j: usize, a: u8) -> Result<bool> {
    let d = dilation(f, n, i, f.neg(1))?;
    let t = transvection(f, n, i, j, a)?;
    let lhs = d.mul(f, &t).mul(f, &d);
    let rhs = transvection(f, n, i, j, f.neg(a))?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transvection_over_gf2_matches_shape() {
        let f = Fq::new(2).unwrap();
        let t = transvection(&f, 2, 1, 2, 1).unwrap();
        assert_eq!(t.entries, vec![1, 1, 0, 1]);
    }

    #[test]
    fn transvection_inverse_is_negated_parameter() {
        for q in [2usize, 3, 4, 5, 7, 8, 9] {
            let f = Fq::new(q).unwrap();
            for a in f.elements() {
                let t = transvection(&f, 3, 1, 3, a).unwrap();
                let t_inv = transvection(&f, 3, 1, 3, f.neg(a)).unwrap();
                assert!(t.mul(&f, &t_inv).is_identity());
            }
        }
    }

    #[test]
    fn diagonal_transvection_rejected() {
        let f = Fq::new(3).unwrap();
        assert!(matches!(
            transvection(&f, 2, 1, 1, 1),
            Err(Error::IndexError(_))
        ));
    }

    #[test]
    fn t_prime_squares_to_identity() {
        let f = Fq::new(5).unwrap();
        for a in f.elements() {
            let tp = t_prime(&f, 2, 2, 1, a).unwrap();
            assert!(tp.mul(&f, &tp).is_identity());
        }
    }

    #[test]
    fn determinants_multiply() {
        let f = Fq::new(4).unwrap();
        let a = MatrixFq::from_rows(&[&[1, 2], &[3, 1]]);
        let b = MatrixFq::from_rows(&[&[2, 1], &[0, 3]]);
        assert_eq!(a.mul(&f, &b).det(&f), f.mul(a.det(&f), b.det(&f)));
    }
}
