//! Reduced words in a free group, truncated Magnus expansions, the total
//! bi-invariant order they induce, and the finite-support group algebra over
//! the ordered free group with its min-support valuation.
//!
//! The embedding sends the generator `x_i` to `1 + X_i` and its inverse to
//! the truncated geometric series `1 - X_i + X_i^2 - ...`; expansions carry
//! exact integer coefficients. Words are compared by the sign of the first
//! (degree-then-lexicographic) coefficient where their expansions differ.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_bigint::Sign;

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::fq::Fq;
use crate::group::FiniteGroup;

/// Maximum truncation degree accepted by expansion routines.
pub const MAX_EXPANSION_DEGREE: usize = 64;

/// One letter of a word: a generator index (0-based) and whether it is
/// inverted.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter {
    pub gen: u8,
    pub inv: bool,
}

/// A reduced word over `rank` free generators. The letter sequence never
/// contains an adjacent cancelling pair; the empty sequence is the identity.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn identity(rank: usize) -> FreeWord {
        FreeWord {
            rank,
            letters: Vec::new(),
        }
    }

    /// A single generator `x_(idx)` (0-based).
    pub fn generator(rank: usize, idx: usize) -> FreeWord {
        assert!(idx < rank);
        FreeWord {
            rank,
            letters: vec![Letter {
                gen: idx as u8,
                inv: false,
            }],
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Reduce a raw letter sequence by cancelling adjacent inverse pairs.
    pub fn reduce(rank: usize, letters: impl IntoIterator<Item = Letter>) -> FreeWord {
        let mut stack: Vec<Letter> = Vec::new();
        for l in letters {
            assert!((l.gen as usize) < rank, "letter outside rank");
            match stack.last() {
                Some(&top) if top.gen == l.gen && top.inv != l.inv => {
                    stack.pop();
                }
                _ => stack.push(l),
            }
        }
        FreeWord {
            rank,
            letters: stack,
        }
    }

    pub fn mul(&self, other: &FreeWord) -> Result<FreeWord> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(FreeWord::reduce(
            self.rank,
            self.letters.iter().chain(&other.letters).copied(),
        ))
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            rank: self.rank,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter {
                    gen: l.gen,
                    inv: !l.inv,
                })
                .collect(),
        }
    }

    pub fn pow(&self, e: i64) -> FreeWord {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut acc = FreeWord::identity(self.rank);
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base).expect("same rank");
        }
        acc
    }

    /// Re-embed into a free group of larger rank.
    pub fn with_rank(&self, rank: usize) -> FreeWord {
        assert!(rank >= self.rank);
        FreeWord {
            rank,
            letters: self.letters.clone(),
        }
    }
}

impl std::fmt::Display for FreeWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        // merge runs of the same signed generator into powers
        let mut out: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == l {
                run += 1;
            }
            let exp = if l.inv { -(run as i64) } else { run as i64 };
            if exp == 1 {
                out.push(format!("x{}", l.gen + 1));
            } else {
                out.push(format!("x{}^{}", l.gen + 1, exp));
            }
            i += run;
        }
        write!(f, "{}", out.join(" "))
    }
}

/// A noncommutative monomial: the sequence of generator indices. Ordered by
/// total degree, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u8>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Display for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let g = self.0[i];
            let mut run = 1;
            while i + run < self.0.len() && self.0[i + run] == g {
                run += 1;
            }
            if run == 1 {
                parts.push(format!("X{}", g + 1));
            } else {
                parts.push(format!("X{}^{run}", g + 1));
            }
            i += run;
        }
        write!(f, "{}", parts.join("*"))
    }
}

/// A truncated noncommutative power series with exact integer coefficients.
/// Absent monomials have coefficient zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MagnusExpansion {
    pub rank: usize,
    pub degree: usize,
    pub terms: BTreeMap<Monomial, BigInt>,
}

impl MagnusExpansion {
    fn one(rank: usize, degree: usize) -> MagnusExpansion {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::one(), BigInt::from(1));
        MagnusExpansion {
            rank,
            degree,
            terms,
        }
    }

    fn mul_assign_series(&mut self, rhs: &BTreeMap<Monomial, BigInt>) {
        let mut out: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in rhs {
                if m1.degree() + m2.degree() > self.degree {
                    continue;
                }
                let mut m = m1.0.clone();
                m.extend_from_slice(&m2.0);
                let entry = out.entry(Monomial(m)).or_default();
                *entry += c1 * c2;
            }
        }
        out.retain(|_, c| *c != BigInt::ZERO);
        self.terms = out;
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(m, c)| {
                if m.degree() == 0 {
                    c.to_string()
                } else if *c == BigInt::from(1) {
                    m.to_string()
                } else if *c == BigInt::from(-1) {
                    format!("-{m}")
                } else {
                    format!("{c}*{m}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// The truncated image of a word under `x_i -> 1 + X_i`.
pub fn magnus_expand(w: &FreeWord, degree: usize) -> Result<MagnusExpansion> {
    if degree == 0 || degree > MAX_EXPANSION_DEGREE {
        return Err(Error::InvalidInput(format!(
            "expansion degree must lie in 1..={MAX_EXPANSION_DEGREE}"
        )));
    }
    let mut acc = MagnusExpansion::one(w.rank(), degree);
    for l in w.letters() {
        let mut series: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        if l.inv {
            // 1 - X + X^2 - ... truncated
            for d in 0..=degree {
                let m = Monomial(vec![l.gen; d]);
                let c = if d % 2 == 0 { 1 } else { -1 };
                series.insert(m, BigInt::from(c));
            }
        } else {
            series.insert(Monomial::one(), BigInt::from(1));
            series.insert(Monomial(vec![l.gen]), BigInt::from(1));
        }
        acc.mul_assign_series(&series);
    }
    Ok(acc)
}

fn leading_difference(w1: &FreeWord, w2: &FreeWord, degree: usize) -> Result<Option<Sign>> {
    let e1 = magnus_expand(w1, degree)?;
    let e2 = magnus_expand(w2, degree)?;
    let mut monomials: Vec<&Monomial> = e1.terms.keys().chain(e2.terms.keys()).collect();
    monomials.sort();
    monomials.dedup();
    for m in monomials {
        let d = e1.coefficient(m) - e2.coefficient(m);
        if d != BigInt::ZERO {
            return Ok(Some(d.sign()));
        }
    }
    Ok(None)
}

/// Total comparison in the Magnus order. Distinct words always separate at a
/// degree bounded by their lengths; the truncation degree `|w1| + |w2| + 1`
/// is therefore sufficient, and exhausting it raises
/// [`Error::TruncationInsufficient`].
pub fn magnus_compare(w1: &FreeWord, w2: &FreeWord) -> Result<Ordering> {
    if w1.rank() != w2.rank() {
        return Err(Error::RankMismatch {
            left: w1.rank(),
            right: w2.rank(),
        });
    }
    if w1 == w2 {
        return Ok(Ordering::Equal);
    }
    let full = w1.len() + w2.len() + 1;
    // iterative deepening: most pairs separate in low degree
    let mut d = 1;
    loop {
        let d_here = d.min(full);
        if let Some(sign) = leading_difference(w1, w2, d_here)? {
            return Ok(match sign {
                Sign::Minus => Ordering::Less,
                Sign::Plus => Ordering::Greater,
                Sign::NoSign => unreachable!("difference is nonzero"),
            });
        }
        if d_here == full {
            return Err(Error::TruncationInsufficient { degree: full });
        }
        d *= 4;
    }
}

/// The minimum of a set of words under the Magnus order.
pub fn magnus_min<'a, I: IntoIterator<Item = &'a FreeWord>>(
    words: I,
) -> Result<Option<&'a FreeWord>> {
    let mut best: Option<&FreeWord> = None;
    for w in words {
        best = match best {
            None => Some(w),
            Some(b) => {
                if magnus_compare(w, b)? == Ordering::Less {
                    Some(w)
                } else {
                    Some(b)
                }
            }
        };
    }
    Ok(best)
}

/// A finite-support element of the group algebra K[F] of the free group,
/// with coefficients in GF(q). Zero coefficients are never stored, so the
/// stored support is the support.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KgElement {
    rank: usize,
    terms: BTreeMap<FreeWord, u8>,
}

impl KgElement {
    pub fn zero(rank: usize) -> KgElement {
        KgElement {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = &FreeWord> {
        self.terms.keys()
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &FreeWord) -> u8 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> &BTreeMap<FreeWord, u8> {
        &self.terms
    }
}

/// Arithmetic context for K[F]: the rank and the coefficient field.
pub struct FreeGroupAlgebra {
    pub rank: usize,
    pub field: Fq,
}

impl FreeGroupAlgebra {
    pub fn new(rank: usize, field: Fq) -> FreeGroupAlgebra {
        FreeGroupAlgebra { rank, field }
    }

    pub fn from_terms<I: IntoIterator<Item = (FreeWord, u8)>>(&self, it: I) -> Result<KgElement> {
        let mut terms: BTreeMap<FreeWord, u8> = BTreeMap::new();
        for (w, c) in it {
            if w.rank() != self.rank {
                return Err(Error::RankMismatch {
                    left: w.rank(),
                    right: self.rank,
                });
            }
            if (c as usize) >= self.field.q() {
                return Err(Error::InvalidInput(format!(
                    "coefficient code {c} out of range"
                )));
            }
            if c != 0 {
                let entry = terms.entry(w).or_insert(0);
                *entry = self.field.add(*entry, c);
            }
        }
        terms.retain(|_, c| *c != 0);
        Ok(KgElement {
            rank: self.rank,
            terms,
        })
    }

    pub fn one(&self) -> KgElement {
        self.from_terms([(FreeWord::identity(self.rank), 1)])
            .expect("valid")
    }

    pub fn add(&self, a: &KgElement, b: &KgElement) -> Result<KgElement> {
        self.from_terms(
            a.terms
                .iter()
                .map(|(w, &c)| (w.clone(), c))
                .chain(b.terms.iter().map(|(w, &c)| (w.clone(), c))),
        )
    }

    /// Convolution over free-group products of supports.
    pub fn multiply(&self, a: &KgElement, b: &KgElement) -> Result<KgElement> {
        let mut terms: BTreeMap<FreeWord, u8> = BTreeMap::new();
        for (g, &ag) in &a.terms {
            for (h, &bh) in &b.terms {
                let t = g.mul(h)?;
                let c = self.field.mul(ag, bh);
                let entry = terms.entry(t).or_insert(0);
                *entry = self.field.add(*entry, c);
            }
        }
        terms.retain(|_, c| *c != 0);
        Ok(KgElement {
            rank: self.rank,
            terms,
        })
    }

    /// The min-support valuation `v(a) = min(supp(a))` under the Magnus
    /// order. Errors on the zero element.
    pub fn valuation(&self, a: &KgElement) -> Result<FreeWord> {
        let min = magnus_min(a.terms.keys())?;
        min.cloned().ok_or(Error::ZeroElement)
    }

    /// True iff `a` is a trivial unit: singleton support with an invertible
    /// coefficient (every nonzero coefficient is invertible over a field).
    pub fn is_trivial_unit(&self, a: &KgElement) -> bool {
        a.terms.len() == 1
    }
}

/// A homomorphism from the free group to a finite group, given by generator
/// images.
#[derive(Clone, Debug)]
pub struct FreeGroupHom {
    pub gen_images: Vec<usize>,
}

impl FreeGroupHom {
    pub fn eval(&self, target: &FiniteGroup, w: &FreeWord) -> usize {
        let mut acc = target.identity();
        for l in w.letters() {
            let img = self.gen_images[l.gen as usize];
            let img = if l.inv { target.inv(img) } else { img };
            acc = target.mul(acc, img);
        }
        acc
    }
}

/// Membership of `a` in the pullback `(rho ∘ v)^{-1}(M)`: evaluate the word
/// `v(a)` through `rho` and test membership of the image in `m`.
pub fn pullback_membership(
    algebra: &FreeGroupAlgebra,
    a: &KgElement,
    rho: &FreeGroupHom,
    target: &FiniteGroup,
    m: &Bitset,
) -> Result<bool> {
    let v = algebra.valuation(a)?;
    Ok(m.contains(rho.eval(target, &v)))
}

/// Parse a word like `x1 x2^-1 x1^2`; juxtaposition without spaces
/// (`x1x2^-1`) is accepted too. Returns the letters and the largest
/// generator index seen.
pub fn parse_word_letters(s: &str) -> Result<(Vec<Letter>, usize)> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact == "1" || compact.is_empty() {
        return Ok((Vec::new(), 0));
    }
    let bytes = compact.as_bytes();
    let mut letters = Vec::new();
    let mut max_gen = 0usize;
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] != b'x' {
            return Err(Error::Parse(format!(
                "expected generator at byte {i} of {s:?}"
            )));
        }
        i += 1;
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        if start == i {
            return Err(Error::Parse(format!("missing generator index in {s:?}")));
        }
        let idx: usize = compact[start..i].parse().unwrap();
        if idx == 0 {
            return Err(Error::Parse("generator indices are 1-based".into()));
        }
        max_gen = max_gen.max(idx);
        let mut exp: i64 = 1;
        if i < bytes.len() && bytes[i] == b'^' {
            i += 1;
            let estart = i;
            if i < bytes.len() && bytes[i] == b'-' {
                i += 1;
            }
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            exp = compact[estart..i]
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?;
        }
        let letter = Letter {
            gen: (idx - 1) as u8,
            inv: exp < 0,
        };
        for _ in 0..exp.unsigned_abs() {
            letters.push(letter);
        }
    }
    Ok((letters, max_gen))
}

/// Parse a word, fixing the ambient rank (inferred from the word when
/// `rank` is `None`).
pub fn parse_word(s: &str, rank: Option<usize>) -> Result<FreeWord> {
    let (letters, max_gen) = parse_word_letters(s)?;
    let rank = match rank {
        Some(r) => {
            if max_gen > r {
                return Err(Error::Parse(format!(
                    "word uses generator x{max_gen} beyond rank {r}"
                )));
            }
            r
        }
        None => max_gen.max(1),
    };
    Ok(FreeWord::reduce(rank, letters))
}

/// Parse an algebra element like `3*x1 + 2*x1x2^-1 + 1` over the given
/// field; bare words carry coefficient 1 and bare integers multiply the
/// identity word.
pub fn parse_algebra_element(algebra: &FreeGroupAlgebra, s: &str) -> Result<KgElement> {
    let mut terms = Vec::new();
    for raw in s.split('+') {
        let t = raw.trim();
        if t.is_empty() {
            return Err(Error::Parse("empty term".into()));
        }
        let (coeff_str, word_str) = match t.split_once('*') {
            Some((c, w)) => (Some(c.trim()), w.trim()),
            None => {
                if t.chars().all(|c| c.is_ascii_digit()) {
                    (Some(t), "1")
                } else {
                    (None, t)
                }
            }
        };
        let coeff: u8 = match coeff_str {
            Some(c) => c
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {c:?}")))?,
            None => 1,
        };
        if coeff as usize >= algebra.field.q() {
            return Err(Error::Parse(format!(
                "coefficient {coeff} out of range for GF({})",
                algebra.field.q()
            )));
        }
        let word = parse_word(word_str, Some(algebra.rank))?;
        terms.push((word, coeff));
    }
    algebra.from_terms(terms)
}

/// Deterministic random reduced word of length exactly `len`.
pub fn random_reduced_word(rng: &mut impl rand::Rng, rank: usize, len: usize) -> FreeWord {
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    while letters.len() < len {
        let gen = rng.random_range(0..rank) as u8;
        let inv = rng.random_bool(0.5);
        if let Some(&top) = letters.last() {
            if top.gen == gen && top.inv != inv {
                continue; // would cancel; resample
            }
        }
        letters.push(Letter { gen, inv });
    }
    FreeWord::reduce(rank, letters)
}
