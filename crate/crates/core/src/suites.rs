//! Named verification suites. Each returns a [`SuiteReport`] with one line
//! per checked item; the CLI maps its `verify` verbs onto these and the
//! acceptance tests drive them directly.

use std::cmp::Ordering;
use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{quotient_commutativity_check, verify_lemma_6_4, GroupAlgebra};
use crate::analysis::{
    check_lemma_2_1_all, classify_subgroup, is_permutable, permutable_implies_normal,
};
use crate::corpus::{self, small_corpus, standard_corpus, surjection_corpus};
use crate::error::{Error, Result};
use crate::fq::{Fq, SUPPORTED_Q};
use crate::gl::{check_theorem_3_2, verify_lemma_3_1};
use crate::group::{FiniteGroup, SubgroupSet};
use crate::lattice::all_subgroups;
use crate::magnus::{
    magnus_compare, magnus_expand, random_reduced_word, FreeGroupAlgebra, FreeWord, Letter,
};
use crate::matrix::{conjugation_identity_check, dilation, t_prime, transvection};
use crate::radical::{radical_oracle, radical_space};
use crate::Caps;

/// One checked item of a suite.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct SuiteItem {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// A suite run: items in deterministic order plus the conjunction verdict.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub items: Vec<SuiteItem>,
    pub verdict: bool,
}

impl SuiteReport {
    fn from_items(suite: &str, items: Vec<SuiteItem>) -> SuiteReport {
        let verdict = items.iter().all(|i| i.pass);
        SuiteReport {
            suite: suite.into(),
            items,
            verdict,
        }
    }
}

fn item(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> SuiteItem {
    SuiteItem {
        name: name.into(),
        pass,
        detail: detail.into(),
    }
}

/// Permutable implies normal in GL(2,2) and GL(2,3).
pub fn lemma_3_1_suite(caps: &Caps) -> Result<SuiteReport> {
    let rep = verify_lemma_3_1(caps.order)?;
    let items = vec![
        item(
            "GL(2,2) permutable => normal",
            rep.gl2_f2.verdict,
            format!(
                "order {}, {} subgroups, {} permutable, {} normal",
                rep.gl2_f2.group_order,
                rep.gl2_f2.subgroup_count,
                rep.gl2_f2.permutable_count,
                rep.gl2_f2.normal_count
            ),
        ),
        item(
            "GL(2,3) permutable => normal",
            rep.gl2_f3.verdict,
            format!(
                "order {}, {} subgroups, {} permutable, {} normal",
                rep.gl2_f3.group_order,
                rep.gl2_f3.subgroup_count,
                rep.gl2_f3.permutable_count,
                rep.gl2_f3.normal_count
            ),
        ),
    ];
    Ok(SuiteReport::from_items("lemma3.1", items))
}

/// Exhaustive GL_n(F_q) checks for the in-cap instances with n > 2 or q >= 4.
pub fn theorem_3_2_suite(caps: &Caps, instances: &[(usize, usize)]) -> Result<SuiteReport> {
    let mut items = Vec::new();
    for &(n, q) in instances {
        let rep = check_theorem_3_2(n, q, caps.closure, caps.order)?;
        items.push(item(
            format!("GL({n},{q}) permutable => normal"),
            rep.permutable_implies_normal,
            format!(
                "order {}, {} subgroups",
                rep.group_order, rep.subgroup_count
            ),
        ));
        items.push(item(
            format!("GL({n},{q}) non-central normal contains SL"),
            rep.noncentral_normal_contains_sl,
            format!("|SL| = {}", rep.sl_order),
        ));
    }
    Ok(SuiteReport::from_items("thm3.2", items))
}

/// The two fixed negative controls: M16 has a permutable non-normal
/// subgroup, and D4 has a subnormal defect-2 subgroup that is not
/// permutable.
pub fn negative_control_suite(caps: &Caps) -> Result<SuiteReport> {
    let mut items = Vec::new();

    let m16 = corpus::modular_group_16()?;
    let rep = permutable_implies_normal("M16", &m16, caps.order)?;
    items.push(item(
        "M16 exhibits a permutable non-normal subgroup",
        !rep.verdict && !rep.offenders.is_empty(),
        format!(
            "{} subgroups, {} permutable, {} normal, {} permutable-non-normal",
            rep.subgroup_count,
            rep.permutable_count,
            rep.normal_count,
            rep.offenders.len()
        ),
    ));

    let d4 = corpus::dihedral_group(4)?;
    let mut witness = None;
    for s in all_subgroups(&d4, caps.order)? {
        let r = classify_subgroup(&d4, &s);
        if r.defect == Some(2) && !r.is_permutable {
            witness = Some(s.order());
            break;
        }
    }
    items.push(item(
        "D(4) exhibits a subnormal defect-2 non-permutable subgroup",
        witness.is_some(),
        match witness {
            Some(ord) => format!("witness subgroup of order {ord}"),
            None => "no witness found".into(),
        },
    ));

    Ok(SuiteReport::from_items("negative-control", items))
}

/// All six permutability criteria agree on every (G, N) pair over the
/// corpus.
pub fn lemma_2_1_suite(caps: &Caps) -> Result<SuiteReport> {
    let mut items = Vec::new();
    for (name, g) in standard_corpus() {
        let records = check_lemma_2_1_all(&g, caps.order)?;
        let disagreements: Vec<String> = records
            .iter()
            .filter(|(_, r)| !r.all_agree)
            .map(|(s, r)| format!("{:?}: {:?}", s.indices(), r.criteria))
            .collect();
        items.push(item(
            format!(
                "{name}: six criteria agree on all {} subgroups",
                records.len()
            ),
            disagreements.is_empty(),
            if disagreements.is_empty() {
                format!("order {}", g.order())
            } else {
                disagreements.join("; ")
            },
        ));
    }
    Ok(SuiteReport::from_items("lemma2.1", items))
}

/// The four generator-calculus identities over every supported field, for
/// n in {2, 3}, all parameters.
pub fn generator_identity_suite() -> Result<SuiteReport> {
    let mut items = Vec::new();
    for q in SUPPORTED_Q {
        let f = Fq::new(q)?;
        for n in [2usize, 3] {
            let mut inverse_ok = true;
            let mut conjugation_ok = true;
            let mut involution_ok = true;
            let mut factorization_ok = true;
            for i in 1..=n {
                for j in 1..=n {
                    if i == j {
                        continue;
                    }
                    for a in f.elements() {
                        let t = transvection(&f, n, i, j, a)?;
                        let t_neg = transvection(&f, n, i, j, f.neg(a))?;
                        inverse_ok &=
                            t.mul(&f, &t_neg).is_identity() && t_neg.mul(&f, &t).is_identity();
                        conjugation_ok &= conjugation_identity_check(&f, n, i, j, a)?;
                        let tp = t_prime(&f, n, i, j, a)?;
                        involution_ok &= tp.mul(&f, &tp).is_identity();
                        let tp0 = t_prime(&f, n, i, j, 0)?;
                        factorization_ok &= tp0.mul(&f, &tp) == t;
                        // d_i(-1) is an involution
                        let d = dilation(&f, n, i, f.neg(1))?;
                        involution_ok &= d.mul(&f, &d).is_identity();
                    }
                }
            }
            items.push(item(
                format!("n={n}, GF({q}): t(a)t(-a)=I"),
                inverse_ok,
                "all i != j, all a",
            ));
            items.push(item(
                format!("n={n}, GF({q}): d(-1)t(a)d(-1)=t(-a)"),
                conjugation_ok,
                "all i != j, all a",
            ));
            items.push(item(
                format!("n={n}, GF({q}): t'(a)^2=I"),
                involution_ok,
                "all i != j, all a",
            ));
            items.push(item(
                format!("n={n}, GF({q}): t(a)=t'(0)t'(a)"),
                factorization_ok,
                "all i != j, all a",
            ));
        }
    }
    Ok(SuiteReport::from_items("generators", items))
}

/// Maschke in both directions over the small corpus, the dimension law for
/// F_p[C_p], and agreement with the brute-force nilpotent-ideal oracle.
pub fn radical_suite() -> Result<SuiteReport> {
    let mut items = Vec::new();

    for (name, g) in small_corpus() {
        for p in [2usize, 3, 5] {
            let ga = GroupAlgebra::new(&g, Fq::new(p)?)?;
            let j = ga.jacobson_radical()?;
            let expected_zero = g.order() % p != 0;
            items.push(item(
                format!(
                    "J(GF({p})[{name}]) {} zero",
                    if expected_zero { "=" } else { "!=" }
                ),
                (j.dim == 0) == expected_zero,
                format!("dim J = {}", j.dim),
            ));
        }
    }

    for p in [2usize, 3, 5] {
        let g = corpus::cyclic_group(p)?;
        let ga = GroupAlgebra::new(&g, Fq::new(p)?)?;
        let j = ga.jacobson_radical()?;
        items.push(item(
            format!("dim J(GF({p})[C({p})]) = {}", p - 1),
            j.dim == p - 1,
            format!("dim J = {}", j.dim),
        ));
    }

    // oracle cross-check on algebras of dimension <= 8
    let oracle_cases: Vec<(String, FiniteGroup, usize)> = vec![
        ("C(2)".into(), corpus::cyclic_group(2)?, 2),
        ("C(2)".into(), corpus::cyclic_group(2)?, 3),
        ("C(2)".into(), corpus::cyclic_group(2)?, 4),
        ("C(3)".into(), corpus::cyclic_group(3)?, 3),
        ("C(3)".into(), corpus::cyclic_group(3)?, 9),
        ("C(4)".into(), corpus::cyclic_group(4)?, 2),
        ("D(2)".into(), corpus::dihedral_group(2)?, 2),
        ("C(5)".into(), corpus::cyclic_group(5)?, 5),
        ("C(6)".into(), corpus::cyclic_group(6)?, 3),
        ("S(3)".into(), corpus::symmetric_group(3)?, 2),
        ("S(3)".into(), corpus::symmetric_group(3)?, 3),
        ("D(4)".into(), corpus::dihedral_group(4)?, 2),
    ];
    for (name, g, q) in oracle_cases {
        let ga = GroupAlgebra::new(&g, Fq::new(q)?)?;
        let main = radical_space(ga.dense_form());
        let oracle = radical_oracle(ga.dense_form())?;
        items.push(item(
            format!("GF({q})[{name}] radical matches nilpotent-ideal oracle"),
            main.same_space(ga.field(), &oracle),
            format!("dim {} vs {}", main.dim(), oracle.dim()),
        ));
    }

    Ok(SuiteReport::from_items("radical", items))
}

/// `G ∩ (1 + J(F_p G)) = O_p(G)` over the small corpus for p in {2, 3}.
pub fn lemma_6_4_suite() -> Result<SuiteReport> {
    let mut items = Vec::new();
    for (name, g) in small_corpus() {
        for p in [2usize, 3] {
            let rec = verify_lemma_6_4(&g, p)?;
            items.push(item(
                format!("{name}, p={p}: G ∩ (1+J) = O_p(G)"),
                rec.equal,
                format!("both sides of order {}", rec.o_p.len()),
            ));
        }
    }
    Ok(SuiteReport::from_items("lemma6.4", items))
}

/// For every corpus group whose derived subgroup is a p-group, F_p[G]/J is
/// commutative. Groups failing the hypothesis are reported as skipped.
pub fn theorem_6_5_suite() -> Result<SuiteReport> {
    let mut items = Vec::new();
    let mut checked = 0;
    for (name, g) in small_corpus() {
        for p in [2usize, 3, 5] {
            match quotient_commutativity_check(&g, p) {
                Ok(rec) => {
                    checked += 1;
                    items.push(item(
                        format!("{name}, p={p}: quotient commutative"),
                        rec.commutative,
                        format!("|G'| = {}, dim J = {}", rec.derived_order, rec.radical_dim),
                    ));
                }
                Err(Error::HypothesisFailed(_)) => {}
                Err(e) => return Err(e),
            }
        }
    }
    items.push(item(
        "hypothesis was satisfiable somewhere",
        checked > 0,
        format!("{checked} (group, p) pairs checked"),
    ));
    Ok(SuiteReport::from_items("thm6.5-2", items))
}

fn random_word_max_len(rng: &mut ChaCha8Rng, rank: usize, max_len: usize) -> FreeWord {
    let len = rng.random_range(0..=max_len);
    random_reduced_word(rng, rank, len)
}

/// Seeded Magnus-order property suite: order axioms and bi-invariance on
/// sampled pairs, the valuation morphism law, and injectivity of degree-7
/// expansions over all short rank-3 words.
pub fn magnus_suite(seed: u64) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut items = Vec::new();

    const PAIRS: usize = 10_000;
    let mut totality_violations = 0usize;
    let mut antisymmetry_violations = 0usize;
    let mut transitivity_violations = 0usize;
    let mut bi_invariance_violations = 0usize;
    for _ in 0..PAIRS {
        let rank = rng.random_range(1..=3);
        let a = random_word_max_len(&mut rng, rank, 6);
        let b = random_word_max_len(&mut rng, rank, 6);
        let c = random_word_max_len(&mut rng, rank, 6);

        let ab = magnus_compare(&a, &b)?;
        let ba = magnus_compare(&b, &a)?;
        if ab.reverse() != ba {
            antisymmetry_violations += 1;
        }
        if (ab == Ordering::Equal) != (a == b) {
            totality_violations += 1;
        }
        let bc = magnus_compare(&b, &c)?;
        if ab != Ordering::Greater && bc != Ordering::Greater {
            // a <= b <= c must give a <= c
            if magnus_compare(&a, &c)? == Ordering::Greater {
                transitivity_violations += 1;
            }
        }
        let ca = c.mul(&a)?;
        let cb = c.mul(&b)?;
        let ac = a.mul(&c)?;
        let bc_w = b.mul(&c)?;
        if magnus_compare(&ca, &cb)? != ab || magnus_compare(&ac, &bc_w)? != ab {
            bi_invariance_violations += 1;
        }
    }
    items.push(item(
        format!("order axioms on {PAIRS} sampled pairs"),
        totality_violations == 0 && antisymmetry_violations == 0 && transitivity_violations == 0,
        format!(
            "totality {totality_violations}, antisymmetry {antisymmetry_violations}, \
             transitivity {transitivity_violations} violations"
        ),
    ));
    items.push(item(
        format!("bi-invariance on {PAIRS} sampled pairs"),
        bi_invariance_violations == 0,
        format!("{bi_invariance_violations} violations"),
    ));

    // valuation morphism: v(ab) = v(a)v(b) on random nonzero pairs
    let algebra = FreeGroupAlgebra::new(3, Fq::new(5)?);
    let mut morphism_violations = 0usize;
    for _ in 0..200 {
        let make = |rng: &mut ChaCha8Rng| {
            let support = rng.random_range(1..=4);
            let terms: Vec<(FreeWord, u8)> = (0..support)
                .map(|_| {
                    let w = random_word_max_len(rng, 3, 4);
                    let c = rng.random_range(1..5) as u8;
                    (w, c)
                })
                .collect();
            algebra.from_terms(terms).expect("valid terms")
        };
        let a = make(&mut rng);
        let b = make(&mut rng);
        if a.is_zero() || b.is_zero() {
            continue;
        }
        let prod = algebra.multiply(&a, &b)?;
        let lhs = algebra.valuation(&prod)?;
        let rhs = algebra.valuation(&a)?.mul(&algebra.valuation(&b)?)?;
        if lhs != rhs {
            morphism_violations += 1;
        }
    }
    items.push(item(
        "valuation morphism v(ab) = v(a)v(b) on 200 pairs",
        morphism_violations == 0,
        format!("{morphism_violations} violations"),
    ));

    // injectivity: all rank-3 reduced words of length <= 6 separate at degree 7
    let words = enumerate_reduced_words(3, 6);
    let mut seen: HashMap<String, FreeWord> = HashMap::with_capacity(words.len());
    let mut collisions = 0usize;
    for w in &words {
        let e = magnus_expand(w, 7)?;
        let key: String = e
            .terms
            .iter()
            .map(|(m, c)| format!("{:?}:{c};", m.0))
            .collect();
        if let Some(prev) = seen.insert(key, w.clone()) {
            if &prev != w {
                collisions += 1;
            }
        }
    }
    items.push(item(
        format!(
            "degree-7 expansions separate all {} short words",
            words.len()
        ),
        collisions == 0,
        format!("{collisions} collisions"),
    ));

    Ok(SuiteReport::from_items("magnus", items))
}

/// All reduced words of rank `rank` and length at most `max_len`.
pub fn enumerate_reduced_words(rank: usize, max_len: usize) -> Vec<FreeWord> {
    let mut out = vec![FreeWord::identity(rank)];
    let mut level: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for prefix in &level {
            for gen in 0..rank as u8 {
                for inv in [false, true] {
                    if let Some(&top) = prefix.last() {
                        if top.gen == gen && top.inv != inv {
                            continue;
                        }
                    }
                    let mut w = prefix.clone();
                    w.push(Letter { gen, inv });
                    next.push(w);
                }
            }
        }
        for w in &next {
            out.push(FreeWord::reduce(rank, w.iter().copied()));
        }
        level = next;
    }
    out
}

/// Preimages of permutable subgroups along the fixed surjection corpus are
/// permutable.
pub fn pullback_suite(caps: &Caps) -> Result<SuiteReport> {
    let mut items = Vec::new();
    for s in surjection_corpus() {
        let targets = all_subgroups(&s.target, caps.order)?;
        let mut checked = 0;
        let mut failures = 0;
        for m in &targets {
            if !is_permutable(&s.target, m) {
                continue;
            }
            checked += 1;
            let pre = SubgroupSet::new(&s.source, s.hom.preimage(m.members()))
                .expect("preimage of a subgroup is a subgroup");
            if !is_permutable(&s.source, &pre) {
                failures += 1;
            }
        }
        items.push(item(
            format!(
                "{}: preimages of permutable subgroups are permutable",
                s.name
            ),
            failures == 0 && checked > 0,
            format!("{checked} permutable subgroups pulled back"),
        ));
    }
    Ok(SuiteReport::from_items("pullback", items))
}

/// Classification rows for the `classify` verb.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct ClassifyRow {
    pub members: Vec<u32>,
    pub order: usize,
    pub is_normal: bool,
    pub is_permutable: bool,
    pub is_subnormal: bool,
    pub defect: Option<usize>,
    pub core_order: usize,
    pub closure_order: usize,
    pub radical_over: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct ClassifyReport {
    pub group: String,
    pub group_order: usize,
    pub rows: Vec<ClassifyRow>,
}

pub fn classify_group(name: &str, g: &FiniteGroup, caps: &Caps) -> Result<ClassifyReport> {
    let subs = all_subgroups(g, caps.order)?;
    let rows = subs
        .iter()
        .map(|s| {
            let r = classify_subgroup(g, s);
            ClassifyRow {
                members: s.indices().iter().map(|&i| i as u32).collect(),
                order: s.order(),
                is_normal: r.is_normal,
                is_permutable: r.is_permutable,
                is_subnormal: r.is_subnormal,
                defect: r.defect,
                core_order: r.core.order(),
                closure_order: r.normal_closure.order(),
                radical_over: r.radical_over,
            }
        })
        .collect();
    Ok(ClassifyReport {
        group: name.into(),
        group_order: g.order(),
        rows,
    })
}
