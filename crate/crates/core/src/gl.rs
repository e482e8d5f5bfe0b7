//! Construction of GL_n(F_q) and SL_n(F_q) from transvection and dilation
//! generators, and the exhaustive permutable-implies-normal verification
//! procedures over them.

use crate::analysis::{
    is_normal, is_permutable, permutable_implies_normal, PermutableNormalReport,
};
use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::fq::Fq;
use crate::group::{group_from_matrices, ElementRepr, FiniteGroup};
use crate::lattice::all_subgroups;
use crate::matrix::{dilation, transvection, MatrixFq};

/// All transvections `t_ij(a)` with `a != 0`, in (i, j, a) order.
pub fn transvection_generators(f: &Fq, n: usize) -> Vec<MatrixFq> {
    let mut gens = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            for a in 1..f.q() as u8 {
                gens.push(transvection(f, n, i, j, a).expect("valid indices"));
            }
        }
    }
    gens
}

/// SL_n(F_q), generated by the transvections (trivial for n = 1). Every
/// element is checked to have determinant one.
pub fn generate_sl(n: usize, q: usize, cap: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidInput("matrix degree must be positive".into()));
    }
    let f = Fq::new(q)?;
    let gens = if n == 1 {
        vec![MatrixFq::identity(1)]
    } else {
        transvection_generators(&f, n)
    };
    let g = group_from_matrices(&f, &gens, cap)?;
    for e in g.elements() {
        if let ElementRepr::Mat(m) = e {
            assert_eq!(m.det(&f), 1, "transvection closure left SL");
        }
    }
    Ok(g)
}

/// GL_n(F_q), generated by the transvections plus the dilation `d_1(w)` for
/// a generator `w` of the multiplicative group.
pub fn generate_gl(n: usize, q: usize, cap: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidInput("matrix degree must be positive".into()));
    }
    let f = Fq::new(q)?;
    let mut gens = transvection_generators(&f, n);
    gens.push(dilation(&f, n, 1, f.primitive_element())?);
    group_from_matrices(&f, &gens, cap)
}

/// Expected order of GL_n(F_q): prod_{i} (q^n - q^i).
pub fn gl_order(n: usize, q: usize) -> usize {
    let qn = q.pow(n as u32);
    (0..n).map(|i| qn - q.pow(i as u32)).product()
}

/// Index set of determinant-one elements of a matrix group.
pub fn det_one_subset(g: &FiniteGroup) -> Bitset {
    let f = g.field().expect("matrix group carries its field");
    Bitset::from_indices(
        g.order(),
        g.elements()
            .iter()
            .enumerate()
            .filter_map(|(i, e)| match e {
                ElementRepr::Mat(m) if m.det(f) == 1 => Some(i),
                _ => None,
            }),
    )
}

/// Result of the two fixed small-group runs.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Lemma31Report {
    pub gl2_f2: PermutableNormalReport,
    pub gl2_f3: PermutableNormalReport,
    pub verdict: bool,
}

/// Enumerate all subgroups of GL_2(F_2) and GL_2(F_3) and confirm that every
/// permutable subgroup is normal.
pub fn verify_lemma_3_1(cap: usize) -> Result<Lemma31Report> {
    let gl22 = generate_gl(2, 2, cap.max(8))?;
    let gl23 = generate_gl(2, 3, cap.max(64))?;
    assert_eq!(gl22.order(), 6);
    assert_eq!(gl23.order(), 48);
    let gl2_f2 = permutable_implies_normal("GL(2,2)", &gl22, cap)?;
    let gl2_f3 = permutable_implies_normal("GL(2,3)", &gl23, cap)?;
    let verdict = gl2_f2.verdict && gl2_f3.verdict;
    Ok(Lemma31Report {
        gl2_f2,
        gl2_f3,
        verdict,
    })
}

/// Result of one exhaustive GL_n(F_q) instance check.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Theorem32Report {
    pub n: usize,
    pub q: usize,
    pub group_order: usize,
    pub sl_order: usize,
    pub subgroup_count: usize,
    pub permutable_implies_normal: bool,
    pub noncentral_normal_contains_sl: bool,
    pub verdict: bool,
}

/// Exhaustively confirm, for one finite instance with `n > 2` or `q >= 4`,
/// that permutable subgroups of GL_n(F_q) are normal and that every
/// non-central normal subgroup contains SL_n(F_q).
pub fn check_theorem_3_2(
    n: usize,
    q: usize,
    closure_cap: usize,
    order_cap: usize,
) -> Result<Theorem32Report> {
    if n < 2 {
        return Err(Error::HypothesisFailed("degree must be at least 2".into()));
    }
    if n == 2 && q < 4 {
        return Err(Error::HypothesisFailed(format!(
            "GL(2,{q}) is outside the hypothesis (needs at least 4 scalars); \
             use the lemma3.1 checker"
        )));
    }
    let g = generate_gl(n, q, closure_cap)?;
    assert_eq!(g.order(), gl_order(n, q));
    let sl = det_one_subset(&g);
    let center = g.center();
    let subs = all_subgroups(&g, order_cap)?;
    let mut permutable_implies_normal = true;
    let mut noncentral_normal_contains_sl = true;
    for s in &subs {
        let nrm = is_normal(&g, s);
        if is_permutable(&g, s) && !nrm {
            permutable_implies_normal = false;
        }
        if nrm && !s.members().is_subset(&center) && !sl.is_subset(s.members()) {
            noncentral_normal_contains_sl = false;
        }
    }
    Ok(Theorem32Report {
        n,
        q,
        group_order: g.order(),
        sl_order: sl.len(),
        subgroup_count: subs.len(),
        permutable_implies_normal,
        noncentral_normal_contains_sl,
        verdict: permutable_implies_normal && noncentral_normal_contains_sl,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::cyclic_subgroup;

    #[test]
    fn sl2_f2_equals_gl2_f2_of_order_six() {
        let sl = generate_sl(2, 2, 100).unwrap();
        let gl = generate_gl(2, 2, 100).unwrap();
        assert_eq!(sl.order(), 6);
        assert_eq!(gl.order(), 6);
    }

    #[test]
    fn sl2_f3_has_order_24_and_gl2_f3_48() {
        let sl = generate_sl(2, 3, 100).unwrap();
        assert_eq!(sl.order(), 24);
        let gl = generate_gl(2, 3, 100).unwrap();
        assert_eq!(gl.order(), 48);
        assert_eq!(gl.order(), gl_order(2, 3));
        assert_eq!(det_one_subset(&gl).len(), 24);
    }

    #[test]
    fn gl2_f3_from_spec_example_generators() {
        // the four transvections t_12(a), t_21(a) for a in {1,2} plus d_1(2)
        let f = Fq::new(3).unwrap();
        let mut gens = vec![
            transvection(&f, 2, 1, 2, 1).unwrap(),
            transvection(&f, 2, 1, 2, 2).unwrap(),
            transvection(&f, 2, 2, 1, 1).unwrap(),
            transvection(&f, 2, 2, 1, 2).unwrap(),
        ];
        gens.push(dilation(&f, 2, 1, 2).unwrap());
        let g = group_from_matrices(&f, &gens, 100).unwrap();
        assert_eq!(g.order(), 48);
        assert_eq!(g.order(), (9 - 1) * (9 - 3));
    }

    #[test]
    fn char3_transvection_has_order_three() {
        let g = generate_gl(2, 3, 100).unwrap();
        let f = g.field().unwrap().clone();
        let t = transvection(&f, 2, 1, 2, 1).unwrap();
        let idx = g
            .elements()
            .iter()
            .position(|e| matches!(e, ElementRepr::Mat(m) if *m == t))
            .unwrap();
        assert_eq!(cyclic_subgroup(&g, idx).order(), 3);
    }

    #[test]
    fn theorem_3_2_rejects_small_instances() {
        assert!(matches!(
            check_theorem_3_2(2, 2, 100, 100),
            Err(Error::HypothesisFailed(_))
        ));
        assert!(matches!(
            check_theorem_3_2(2, 3, 100, 100),
            Err(Error::HypothesisFailed(_))
        ));
    }

    #[test]
    fn degree_one_groups() {
        assert_eq!(generate_sl(1, 5, 10).unwrap().order(), 1);
        assert_eq!(generate_gl(1, 5, 10).unwrap().order(), 4);
        assert_eq!(generate_gl(1, 2, 10).unwrap().order(), 1);
        assert!(generate_gl(0, 2, 10).is_err());
    }

    #[test]
    fn sl_gl_order_ratio() {
        for (n, q) in [(2usize, 2usize), (2, 3), (2, 4), (2, 5)] {
            let sl = generate_sl(n, q, 2000).unwrap();
            let gl = generate_gl(n, q, 2000).unwrap();
            assert_eq!(sl.order() * (q - 1), gl.order(), "at ({n},{q})");
        }
    }
}
