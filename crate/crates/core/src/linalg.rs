//! Dense exact linear algebra over GF(q): reduced row echelon form, rank,
//! kernels, inverses and membership in row spaces. Everything the radical
//! and center computations need, nothing more.

use crate::fq::Fq;

/// A rows x cols matrix with entries stored row-major as field codes.
#[derive(Clone, PartialEq, Eq)]
pub struct FqMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u8>,
}

impl FqMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        FqMat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = FqMat::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<u8>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        debug_assert!(rows.iter().all(|row| row.len() == c));
        FqMat {
            rows: r,
            cols: c,
            data: rows.concat(),
        }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, f: &Fq, other: &FqMat) -> FqMat {
        assert_eq!(self.cols, other.rows);
        let mut out = FqMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.at(i, l);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let add = f.mul(a, other.at(l, j));
                    let cur = out.at(i, j);
                    out.set(i, j, f.add(cur, add));
                }
            }
        }
        out
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self, f: &Fq) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.at(i, c) != 0) else {
                continue;
            };
            for j in 0..self.cols {
                let (a, b) = (self.at(r, j), self.at(pr, j));
                self.set(r, j, b);
                self.set(pr, j, a);
            }
            let inv = f.inv(self.at(r, c));
            for j in 0..self.cols {
                self.set(r, j, f.mul(inv, self.at(r, j)));
            }
            for i in 0..self.rows {
                if i != r && self.at(i, c) != 0 {
                    let factor = self.at(i, c);
                    for j in 0..self.cols {
                        let v = f.sub(self.at(i, j), f.mul(factor, self.at(r, j)));
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, f: &Fq) -> usize {
        let mut m = self.clone();
        m.rref(f).len()
    }

    /// Basis of the right kernel `{x : Mx = 0}`, one column vector per row
    /// of the returned matrix.
    pub fn kernel_basis(&self, f: &Fq) -> Vec<Vec<u8>> {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let mut basis = Vec::new();
        let mut pivot_of_col = vec![usize::MAX; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            pivot_of_col[c] = r;
        }
        for free in 0..self.cols {
            if pivot_of_col[free] != usize::MAX {
                continue;
            }
            let mut v = vec![0u8; self.cols];
            v[free] = 1;
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = f.neg(m.at(r, free));
            }
            basis.push(v);
        }
        basis
    }

    pub fn det(&self, f: &Fq) -> u8 {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut det = 1u8;
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| m.at(i, c) != 0) else {
                return 0;
            };
            if pr != c {
                for j in 0..n {
                    let (a, b) = (m.at(c, j), m.at(pr, j));
                    m.set(c, j, b);
                    m.set(pr, j, a);
                }
                det = f.neg(det);
            }
            det = f.mul(det, m.at(c, c));
            let inv = f.inv(m.at(c, c));
            for i in c + 1..n {
                if m.at(i, c) != 0 {
                    let factor = f.mul(m.at(i, c), inv);
                    for j in c..n {
                        let v = f.sub(m.at(i, j), f.mul(factor, m.at(c, j)));
                        m.set(i, j, v);
                    }
                }
            }
        }
        det
    }

    /// Inverse of a square matrix, or `None` if singular.
    pub fn inverse(&self, f: &Fq) -> Option<FqMat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = FqMat::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.at(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let pivots = aug.rref(f);
        if pivots.len() != n || pivots.iter().enumerate().any(|(r, &c)| c != r) {
            return None;
        }
        let mut out = FqMat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, aug.at(i, n + j));
            }
        }
        Some(out)
    }

    /// Solve `Mx = b`; returns one solution if consistent.
    pub fn solve(&self, f: &Fq, b: &[u8]) -> Option<Vec<u8>> {
        assert_eq!(self.rows, b.len());
        let mut aug = FqMat::zeros(self.rows, self.cols + 1);
        for (i, &bi) in b.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.at(i, j));
            }
            aug.set(i, self.cols, bi);
        }
        let pivots = aug.rref(f);
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![0u8; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.at(r, self.cols);
        }
        Some(x)
    }
}

impl std::fmt::Debug for FqMat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.rows {
            writeln!(f, "{:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// A subspace of GF(q)^n maintained as an echelonized basis; supports
/// incremental insertion and membership.
#[derive(Clone, Debug)]
pub struct RowSpace {
    pub dim_ambient: usize,
    rows: Vec<Vec<u8>>, // echelon rows, pivot normalized to 1
    pivots: Vec<usize>, // pivot column of each row, strictly increasing order not required
}

impl RowSpace {
    pub fn new(dim_ambient: usize) -> Self {
        RowSpace {
            dim_ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the current basis; the remainder is returned.
    pub fn reduce(&self, f: &Fq, v: &[u8]) -> Vec<u8> {
        let mut v = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            if v[pc] != 0 {
                let factor = v[pc];
                for (x, y) in v.iter_mut().zip(row) {
                    *x = f.sub(*x, f.mul(factor, *y));
                }
            }
        }
        v
    }

    pub fn contains(&self, f: &Fq, v: &[u8]) -> bool {
        self.reduce(f, v).iter().all(|&c| c == 0)
    }

    /// Insert a vector; returns true if it enlarged the space.
    pub fn insert(&mut self, f: &Fq, v: &[u8]) -> bool {
        let mut r = self.reduce(f, v);
        let Some(pc) = r.iter().position(|&c| c != 0) else {
            return false;
        };
        let inv = f.inv(r[pc]);
        for x in r.iter_mut() {
            *x = f.mul(inv, *x);
        }
        self.rows.push(r);
        self.pivots.push(pc);
        true
    }

    pub fn basis(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn same_space(&self, f: &Fq, other: &RowSpace) -> bool {
        self.dim() == other.dim() && self.rows.iter().all(|r| other.contains(f, r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_rank_kernel_over_gf3() {
        let f = Fq::new(3).unwrap();
        // rows: (1,2,0), (2,2,0), (0,0,0) over GF(3); rank 2, kernel dim 1
        let m = FqMat::from_rows(vec![vec![1, 2, 0], vec![2, 2, 0], vec![0, 0, 0]]);
        assert_eq!(m.rank(&f), 2);
        let ker = m.kernel_basis(&f);
        assert_eq!(ker.len(), 1);
        // check M k = 0
        for k in &ker {
            for i in 0..m.rows {
                let mut acc = 0u8;
                for (j, &kj) in k.iter().enumerate() {
                    acc = f.add(acc, f.mul(m.at(i, j), kj));
                }
                assert_eq!(acc, 0);
            }
        }
    }

    #[test]
    fn inverse_round_trip_gf5() {
        let f = Fq::new(5).unwrap();
        let m = FqMat::from_rows(vec![vec![1, 2], vec![3, 4]]);
        let inv = m.inverse(&f).unwrap();
        assert_eq!(m.mul(&f, &inv), FqMat::identity(2));
        assert_eq!(inv.mul(&f, &m), FqMat::identity(2));
        assert_eq!(f.mul(m.det(&f), inv.det(&f)), 1);
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let f = Fq::new(2).unwrap();
        let m = FqMat::from_rows(vec![vec![1, 1], vec![1, 1]]);
        assert!(m.inverse(&f).is_none());
        assert_eq!(m.det(&f), 0);
    }

    #[test]
    fn solve_consistent_system() {
        let f = Fq::new(7).unwrap();
        let m = FqMat::from_rows(vec![vec![2, 1], vec![1, 3]]);
        let x = m.solve(&f, &[5, 6]).unwrap();
        let b0 = f.add(f.mul(2, x[0]), f.mul(1, x[1]));
        let b1 = f.add(f.mul(1, x[0]), f.mul(3, x[1]));
        assert_eq!((b0, b1), (5, 6));
    }

    #[test]
    fn row_space_membership() {
        let f = Fq::new(2).unwrap();
        let mut s = RowSpace::new(3);
        assert!(s.insert(&f, &[1, 1, 0]));
        assert!(s.insert(&f, &[0, 1, 1]));
        assert!(!s.insert(&f, &[1, 0, 1])); // sum of the two
        assert!(s.contains(&f, &[1, 0, 1]));
        assert!(!s.contains(&f, &[1, 0, 0]));
        assert_eq!(s.dim(), 2);
    }
}
