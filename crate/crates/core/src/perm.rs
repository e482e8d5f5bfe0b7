//! Permutations on `{1, .., n}`, stored as 0-based image vectors.

use crate::error::{Error, Result};

/// `images[i]` is the image of point `i` (0-based internally; cycle notation
/// in parsing and display is 1-based).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u16>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm {
            images: (0..degree as u16).collect(),
        }
    }

    pub fn from_images(images: Vec<u16>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if (x as usize) >= n || seen[x as usize] {
                return Err(Error::InvalidInput("not a bijection".into()));
            }
            seen[x as usize] = true;
        }
        Ok(Perm { images })
    }

    /// Build from 1-based cycles on `degree` points. Cycles need not be
    /// disjoint (they compose left to right), but a point may not repeat
    /// within one cycle.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Perm> {
        let mut p = Perm::identity(degree);
        for cycle in cycles {
            let mut q = Perm::identity(degree);
            let mut seen = vec![false; degree];
            for (k, &pt) in cycle.iter().enumerate() {
                let from = pt
                    .checked_sub(1)
                    .filter(|&i| i < degree)
                    .ok_or_else(|| Error::InvalidInput(format!("point {pt} out of range")))?;
                if seen[from] {
                    return Err(Error::InvalidInput(format!(
                        "point {pt} repeats in a cycle"
                    )));
                }
                seen[from] = true;
                let to = cycle[(k + 1) % cycle.len()] - 1;
                q.images[from] = to as u16;
            }
            p = p.compose(&q);
        }
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u16; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u16;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u16 == x)
    }

    /// Extend to act trivially on additional points.
    pub fn extended(&self, degree: usize) -> Perm {
        debug_assert!(degree >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree() as u16..degree as u16);
        Perm { images }
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start + 1];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.apply(x);
            }
            cycles.push(cycle);
        }
        cycles
    }
}

impl std::fmt::Display for Perm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (k, pt) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{pt}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl std::fmt::Debug for Perm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

/// Parse one generator in cycle notation, e.g. `(1 2)(3 4)`. Points may be
/// separated by spaces or commas.
pub fn parse_cycles(s: &str, degree_hint: usize) -> Result<Perm> {
    let s = s.trim();
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut max_pt = degree_hint;
    let mut rest = s;
    while !rest.is_empty() {
        let Some(stripped) = rest.strip_prefix('(') else {
            return Err(Error::Parse(format!("expected '(' in cycle notation: {s}")));
        };
        let Some(close) = stripped.find(')') else {
            return Err(Error::Parse(format!("unbalanced parenthesis in {s}")));
        };
        let body = &stripped[..close];
        let pts: Vec<usize> = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad point {t:?} in {s}")))
            })
            .collect::<Result<_>>()?;
        if pts.contains(&0) {
            return Err(Error::Parse("cycle points are 1-based".into()));
        }
        if let Some(&m) = pts.iter().max() {
            max_pt = max_pt.max(m);
        }
        if !pts.is_empty() {
            cycles.push(pts);
        }
        rest = stripped[close + 1..].trim_start();
    }
    Perm::from_cycles(max_pt, &cycles)
}
