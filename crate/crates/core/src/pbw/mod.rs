//! Exact arithmetic in the universal enveloping algebra U(gl_n).
//!
//! Elements are stored in the PBW basis for the total order
//!
//! ```text
//! lowering E_ij (i > j, lexicographic) < diagonal E_ii < raising E_ij (i < j, lexicographic)
//! ```
//!
//! so that every raising generator sits rightmost in a normal-ordered
//! monomial. The Harish-Chandra image then becomes a plain monomial filter.

mod parse;

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::WeightPolynomial;
use crate::rational::{fmt_q, parse_q, q, Q};
use crate::ring::Coefficient;

pub use parse::parse_element;

/// Default cap on the number of terms any single product may produce.
pub const DEFAULT_TERM_BOUND: usize = 5_000_000;

static TERM_BOUND: AtomicUsize = AtomicUsize::new(DEFAULT_TERM_BOUND);

pub fn set_term_bound(bound: usize) {
    TERM_BOUND.store(bound.max(1), Ordering::Relaxed);
}

pub fn term_bound() -> usize {
    TERM_BOUND.load(Ordering::Relaxed)
}

/// The generator `E_ij`, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GeneratorIndex {
    pub i: usize,
    pub j: usize,
}

impl GeneratorIndex {
    pub fn new(i: usize, j: usize, n: usize) -> Result<Self> {
        if i == 0 || j == 0 || i > n || j > n {
            return Err(Error::IndexOutOfRange { i, j, n });
        }
        Ok(Self { i, j })
    }

    pub fn is_diagonal(&self) -> bool {
        self.i == self.j
    }

    /// Position of this generator in the PBW total order.
    pub fn rank(&self, n: usize) -> usize {
        let (i, j) = (self.i, self.j);
        let lowering = n * (n - 1) / 2;
        if i > j {
            // rows 2..=i-1 contribute 1 + 2 + ... + (i-2) earlier lowering generators
            (i - 1) * (i - 2) / 2 + (j - 1)
        } else if i == j {
            lowering + (i - 1)
        } else {
            // raising generators of rows 1..i-1 come first: Σ_{r<i} (n - r)
            let before: usize = (1..i).map(|r| n - r).sum();
            lowering + n + before + (j - i - 1)
        }
    }

    pub fn from_rank(rank: usize, n: usize) -> Self {
        layout(n).gens[rank]
    }
}

impl fmt::Display for GeneratorIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E[{},{}]", self.i, self.j)
    }
}

struct Layout {
    gens: Vec<GeneratorIndex>,
    /// `rank_of[(i-1)*n + (j-1)]`
    rank_of: Vec<usize>,
}

fn layout(n: usize) -> Arc<Layout> {
    static LAYOUTS: OnceLock<RwLock<HashMap<usize, Arc<Layout>>>> = OnceLock::new();
    let table = LAYOUTS.get_or_init(Default::default);
    if let Some(l) = table.read().expect("layout lock").get(&n) {
        return l.clone();
    }
    let mut gens = vec![GeneratorIndex { i: 1, j: 1 }; n * n];
    let mut rank_of = vec![0; n * n];
    for i in 1..=n {
        for j in 1..=n {
            let g = GeneratorIndex { i, j };
            let r = g.rank(n);
            gens[r] = g;
            rank_of[(i - 1) * n + (j - 1)] = r;
        }
    }
    let l = Arc::new(Layout { gens, rank_of });
    table.write().expect("layout lock").insert(n, l.clone());
    l
}

fn rank_of(n: usize, i: usize, j: usize) -> usize {
    layout(n).rank_of[(i - 1) * n + (j - 1)]
}

/// A normal-ordered monomial: exponent per generator, indexed by PBW rank.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PbwMonomial {
    exps: Vec<u16>,
}

impl PbwMonomial {
    pub fn unit(n: usize) -> Self {
        Self { exps: vec![0; n * n] }
    }

    pub fn generator(n: usize, g: GeneratorIndex) -> Self {
        let mut m = Self::unit(n);
        m.exps[g.rank(n)] = 1;
        m
    }

    pub fn rank(&self) -> usize {
        (self.exps.len() as f64).sqrt().round() as usize
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    fn last_rank(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0)
    }

    fn with_delta(&self, rank: usize, up: bool) -> Self {
        let mut m = self.clone();
        if up {
            m.exps[rank] += 1;
        } else {
            m.exps[rank] -= 1;
        }
        m
    }

    /// `(generator, exponent)` pairs in PBW order.
    pub fn factors(&self) -> Vec<(GeneratorIndex, u32)> {
        let n = self.rank();
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(r, &e)| (GeneratorIndex::from_rank(r, n), e as u32))
            .collect()
    }

    /// Generator ranks as a word, each repeated by its exponent.
    fn word(&self) -> Vec<usize> {
        let mut w = Vec::with_capacity(self.degree() as usize);
        for (r, &e) in self.exps.iter().enumerate() {
            w.extend(std::iter::repeat(r).take(e as usize));
        }
        w
    }

    /// True when the monomial uses only diagonal generators.
    pub fn is_diagonal(&self) -> bool {
        self.factors().iter().all(|(g, _)| g.is_diagonal())
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (g, e) in self.factors() {
            if e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}

type Terms = BTreeMap<PbwMonomial, Q>;

fn add_into(acc: &mut Terms, m: &PbwMonomial, c: Q) {
    if c.is_zero() {
        return;
    }
    match acc.entry(m.clone()) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// `[E_a, E_b]` for generator ranks, as `(rank, coefficient)` pairs.
fn bracket_ranks(n: usize, a: usize, b: usize) -> Vec<(usize, Q)> {
    let ga = GeneratorIndex::from_rank(a, n);
    let gb = GeneratorIndex::from_rank(b, n);
    let mut out: Vec<(usize, Q)> = Vec::with_capacity(2);
    // [E_ij, E_kl] = δ_jk E_il - δ_li E_kj
    if ga.j == gb.i {
        out.push((rank_of(n, ga.i, gb.j), q(1)));
    }
    if gb.j == ga.i {
        let r = rank_of(n, gb.i, ga.j);
        match out.iter_mut().find(|(x, _)| *x == r) {
            Some(e) => e.1 -= q(1),
            None => out.push((r, q(-1))),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

type MonoGenMemo = RwLock<HashMap<(PbwMonomial, usize), Arc<Terms>>>;
type MonoPairMemo = RwLock<HashMap<(PbwMonomial, PbwMonomial), Arc<Terms>>>;

fn mono_gen_memo() -> &'static MonoGenMemo {
    static M: OnceLock<MonoGenMemo> = OnceLock::new();
    M.get_or_init(Default::default)
}

fn mono_pair_memo() -> &'static MonoPairMemo {
    static M: OnceLock<MonoPairMemo> = OnceLock::new();
    M.get_or_init(Default::default)
}

/// Normal-ordered `m · E_g`.
fn mono_times_gen(m: &PbwMonomial, g: usize) -> Arc<Terms> {
    let last = match m.last_rank() {
        Some(l) if g < l => l,
        _ => {
            let mut t = Terms::new();
            t.insert(m.with_delta(g, true), Q::one());
            return Arc::new(t);
        }
    };
    let key = (m.clone(), g);
    if let Some(hit) = mono_gen_memo().read().expect("memo lock").get(&key) {
        return hit.clone();
    }
    // m = m' E_last with E_g < E_last:
    // m E_g = (m' E_g) E_last + m' [E_last, E_g]
    let n = m.rank();
    let head = m.with_delta(last, false);
    let mut acc = Terms::new();
    for (p, c) in mono_times_gen(&head, g).iter() {
        for (r, d) in mono_times_gen(p, last).iter() {
            add_into(&mut acc, r, c * d);
        }
    }
    for (h, c) in bracket_ranks(n, last, g) {
        for (r, d) in mono_times_gen(&head, h).iter() {
            add_into(&mut acc, r, &c * d);
        }
    }
    let out = Arc::new(acc);
    mono_gen_memo().write().expect("memo lock").insert(key, out.clone());
    out
}

/// Normal-ordered product of two monomials.
fn mono_times_mono(a: &PbwMonomial, b: &PbwMonomial) -> Arc<Terms> {
    if b.is_unit() {
        let mut t = Terms::new();
        t.insert(a.clone(), Q::one());
        return Arc::new(t);
    }
    // Already ordered when every generator of b is ≥ the last of a.
    let first_b = b.exps.iter().position(|&e| e > 0).expect("non-unit");
    if a.last_rank().is_none_or(|l| l <= first_b) {
        let mut m = a.clone();
        for (x, y) in m.exps.iter_mut().zip(&b.exps) {
            *x += y;
        }
        let mut t = Terms::new();
        t.insert(m, Q::one());
        return Arc::new(t);
    }
    let key = (a.clone(), b.clone());
    if let Some(hit) = mono_pair_memo().read().expect("memo lock").get(&key) {
        return hit.clone();
    }
    let mut cur = Terms::new();
    cur.insert(a.clone(), Q::one());
    for g in b.word() {
        let mut next = Terms::new();
        for (p, c) in &cur {
            for (r, d) in mono_times_gen(p, g).iter() {
                add_into(&mut next, r, c * d);
            }
        }
        cur = next;
    }
    let out = Arc::new(cur);
    mono_pair_memo().write().expect("memo lock").insert(key, out.clone());
    out
}

/// Drops the normal-ordering caches. Results never depend on cache state.
pub fn clear_caches() {
    mono_gen_memo().write().expect("memo lock").clear();
    mono_pair_memo().write().expect("memo lock").clear();
}

/// An element of U(gl_n) in the PBW basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UeaElement {
    n: usize,
    terms: Terms,
}

impl UeaElement {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: Terms::new() }
    }

    pub fn scalar(n: usize, c: Q) -> Self {
        let mut terms = Terms::new();
        add_into(&mut terms, &PbwMonomial::unit(n), c);
        Self { n, terms }
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, Q::one())
    }

    pub fn generator(n: usize, i: usize, j: usize) -> Result<Self> {
        let g = GeneratorIndex::new(i, j, n)?;
        let mut terms = Terms::new();
        terms.insert(PbwMonomial::generator(n, g), Q::one());
        Ok(Self { n, terms })
    }

    /// `E_ij` for indices already known to be in range.
    pub fn e(n: usize, i: usize, j: usize) -> Self {
        Self::generator(n, i, j).expect("generator index in range")
    }

    pub fn from_terms<I: IntoIterator<Item = (PbwMonomial, Q)>>(n: usize, it: I) -> Result<Self> {
        let mut terms = Terms::new();
        for (m, c) in it {
            if m.exps.len() != n * n {
                return Err(Error::RankMismatch { left: n, right: m.rank() });
            }
            add_into(&mut terms, &m, c);
        }
        Ok(Self { n, terms })
    }

    /// Δ₁ = E₁₁ + … + E_nn.
    pub fn delta1(n: usize) -> Self {
        (1..=n).fold(Self::zero(n), |acc, i| acc.add(&Self::e(n, i, i)))
    }

    /// Δ₂ = (E₁₁ − 1)E₂₂ − E₁₂E₂₁ in U(gl_2).
    pub fn delta2() -> Self {
        let e11m1 = Self::e(2, 1, 1).sub(&Self::one(2));
        e11m1.mul(&Self::e(2, 2, 2)).sub(&Self::e(2, 1, 2).mul(&Self::e(2, 2, 1)))
    }

    /// t = Σ E_ij E_ji.
    pub fn casimir_t(n: usize) -> Self {
        let mut acc = Self::zero(n);
        for i in 1..=n {
            for j in 1..=n {
                acc = acc.add(&Self::e(n, i, j).mul(&Self::e(n, j, i)));
            }
        }
        acc
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(PbwMonomial::degree).max()
    }

    /// The scalar part when the element is a constant.
    pub fn as_scalar(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(Q::zero()),
            1 => self.terms.iter().next().filter(|(m, _)| m.is_unit()).map(|(_, c)| c.clone()),
            _ => None,
        }
    }

    fn check_rank(&self, rhs: &Self) -> Result<()> {
        if self.n != rhs.n {
            return Err(Error::RankMismatch { left: self.n, right: rhs.n });
        }
        Ok(())
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.check_rank(rhs)?;
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            add_into(&mut terms, m, c.clone());
        }
        Ok(Self { n: self.n, terms })
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.try_add(&rhs.scale(&q(-1)))
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Self { n: self.n, terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    /// The product in U(gl_n), normal-ordered.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.try_mul_bounded(rhs, term_bound())
    }

    /// Product that fails once the result exceeds `bound` terms.
    pub fn try_mul_bounded(&self, rhs: &Self, bound: usize) -> Result<Self> {
        self.check_rank(rhs)?;
        let mut acc = Terms::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let cab = ca * cb;
                for (p, c) in mono_times_mono(ma, mb).iter() {
                    add_into(&mut acc, p, &cab * c);
                }
            }
        }
        if acc.len() > bound {
            return Err(Error::TermBound { terms: acc.len(), bound });
        }
        Ok(Self { n: self.n, terms: acc })
    }

    /// `xy − yx`.
    pub fn commutator(&self, rhs: &Self) -> Result<Self> {
        self.try_mul(rhs)?.try_sub(&rhs.try_mul(self)?)
    }

    /// Infallible sum; panics on rank mismatch.
    pub fn add(&self, rhs: &Self) -> Self {
        self.try_add(rhs).expect("rank mismatch")
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.try_sub(rhs).expect("rank mismatch")
    }

    /// Infallible product; panics on rank mismatch or term-bound overflow.
    pub fn mul(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("UEA product failed")
    }

    /// True iff the element commutes with every generator E_ij.
    pub fn is_central(&self) -> Result<bool> {
        for i in 1..=self.n {
            for j in 1..=self.n {
                if !self.commutator(&Self::e(self.n, i, j))?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Eigenvalue on the highest-weight vector of V_μ, as a polynomial in μ,
    /// without any centrality check. Monomials with an off-diagonal factor
    /// either kill the vector (raising rightmost) or move it to a lower
    /// weight, so only purely diagonal monomials contribute.
    pub fn highest_weight_functional(&self) -> WeightPolynomial {
        let n = self.n;
        let mut out = WeightPolynomial::zero(n);
        for (m, c) in &self.terms {
            if !m.is_diagonal() {
                continue;
            }
            let mut e = vec![0u32; n];
            for (g, k) in m.factors() {
                e[g.i - 1] += k;
            }
            out.add_term(e, c.clone());
        }
        out
    }

    /// Harish-Chandra image χ(x) of a central element.
    pub fn hc_image(&self) -> Result<WeightPolynomial> {
        if !self.is_central()? {
            return Err(Error::NotCentral);
        }
        Ok(self.highest_weight_functional())
    }

    pub fn to_json(&self) -> UeaJson {
        UeaJson {
            n: self.n,
            terms: self
                .display_order()
                .into_iter()
                .map(|(m, c)| UeaJsonTerm {
                    coeff: fmt_q(c),
                    monomial: m.factors().into_iter().map(|(g, e)| [g.i, g.j, e as usize]).collect(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &UeaJson) -> Result<Self> {
        let n = j.n;
        let mut terms = Terms::new();
        for t in &j.terms {
            let mut m = PbwMonomial::unit(n);
            let mut last: Option<usize> = None;
            for &[i, jj, e] in &t.monomial {
                let g = GeneratorIndex::new(i, jj, n)?;
                let r = g.rank(n);
                if last.is_some_and(|l| l >= r) || e == 0 {
                    return Err(Error::Invalid(
                        "monomial entries must be in PBW order with positive exponents".into(),
                    ));
                }
                last = Some(r);
                m.exps[r] = u16::try_from(e).map_err(|_| Error::Invalid("exponent too large".into()))?;
            }
            add_into(&mut terms, &m, parse_q(&t.coeff)?);
        }
        Ok(Self { n, terms })
    }

    /// Terms sorted by descending degree, then by the PBW-exponent order.
    fn display_order(&self) -> Vec<(&PbwMonomial, &Q)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then_with(|| b.0.cmp(a.0)));
        v
    }
}

impl Coefficient for UeaElement {
    fn vanishes(&self) -> bool {
        self.terms.is_empty()
    }

    fn try_add_assign(&mut self, rhs: &Self) -> Result<()> {
        self.check_rank(rhs)?;
        for (m, c) in &rhs.terms {
            add_into(&mut self.terms, m, c.clone());
        }
        Ok(())
    }

    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        UeaElement::try_mul(self, rhs)
    }

    fn scale(&self, c: &Q) -> Self {
        UeaElement::scale(self, c)
    }
}

impl fmt::Display for UeaElement {
    /// Prints in the element grammar accepted by [`parse_element`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.display_order().into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_unit() {
                write!(f, "{}", fmt_q(&mag))?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", fmt_q(&mag))?;
            }
        }
        Ok(())
    }
}

/// `[E_a, E_b] = δ_jk E_il − δ_li E_kj` as an element.
pub fn commutator_generators(a: GeneratorIndex, b: GeneratorIndex, n: usize) -> Result<UeaElement> {
    GeneratorIndex::new(a.i, a.j, n)?;
    GeneratorIndex::new(b.i, b.j, n)?;
    let terms = bracket_ranks(n, a.rank(n), b.rank(n))
        .into_iter()
        .map(|(r, c)| (PbwMonomial::generator(n, GeneratorIndex::from_rank(r, n)), c));
    UeaElement::from_terms(n, terms)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UeaJsonTerm {
    pub coeff: String,
    pub monomial: Vec<[usize; 3]>,
}

/// `{"n": int, "terms": [{"coeff": "p/q", "monomial": [[i, j, exp], ...]}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UeaJson {
    pub n: usize,
    pub terms: Vec<UeaJsonTerm>,
}

impl Serialize for UeaElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for UeaElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = UeaJson::deserialize(d)?;
        UeaElement::from_json(&j).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qf;

    fn e(n: usize, i: usize, j: usize) -> UeaElement {
        UeaElement::e(n, i, j)
    }

    #[test]
    fn pbw_order_is_lowering_diagonal_raising() {
        let n = 3;
        let order: Vec<(usize, usize)> =
            (0..9).map(|r| GeneratorIndex::from_rank(r, n)).map(|g| (g.i, g.j)).collect();
        assert_eq!(
            order,
            vec![(2, 1), (3, 1), (3, 2), (1, 1), (2, 2), (3, 3), (1, 2), (1, 3), (2, 3)]
        );
    }

    #[test]
    fn generator_brackets() {
        let g = |i, j| GeneratorIndex { i, j };
        assert_eq!(commutator_generators(g(1, 2), g(2, 1), 2).unwrap(), e(2, 1, 1).sub(&e(2, 2, 2)));
        assert!(commutator_generators(g(1, 1), g(2, 2), 2).unwrap().is_zero());
        assert_eq!(commutator_generators(g(1, 2), g(2, 3), 3).unwrap(), e(3, 1, 3));
        assert!(commutator_generators(g(1, 3), g(1, 1), 2).is_err());
    }

    #[test]
    fn one_bracket_normal_ordering() {
        let prod = e(2, 1, 2).mul(&e(2, 2, 1));
        let expect = e(2, 2, 1).mul(&e(2, 1, 2)).add(&e(2, 1, 1)).sub(&e(2, 2, 2));
        assert_eq!(prod, expect);
        assert_eq!(prod.len(), 3);
        assert_eq!(prod.to_string(), "E[2,1]E[1,2] + E[1,1] - E[2,2]");
    }

    #[test]
    fn unit_and_associativity_examples() {
        let x = e(2, 1, 2).mul(&e(2, 2, 1));
        assert_eq!(UeaElement::one(2).mul(&x), x);
        let a = e(2, 1, 2);
        let b = e(2, 2, 1);
        assert_eq!(a.mul(&b).mul(&a), a.mul(&b.mul(&a)));
    }

    #[test]
    fn commutators_and_centrality() {
        let d1 = UeaElement::delta1(2);
        assert!(d1.commutator(&e(2, 1, 2)).unwrap().is_zero());
        assert_eq!(e(2, 1, 1).commutator(&e(2, 1, 2)).unwrap(), e(2, 1, 2));
        let t = UeaElement::casimir_t(2);
        assert!(t.commutator(&e(2, 1, 2)).unwrap().is_zero());
        assert!(UeaElement::delta2().is_central().unwrap());
        assert!(!e(2, 1, 2).is_central().unwrap());
        for n in 2..=4 {
            assert!(UeaElement::delta1(n).is_central().unwrap());
            assert!(UeaElement::casimir_t(n).is_central().unwrap());
        }
    }

    #[test]
    fn harish_chandra_images() {
        let mu = |a: i64, b: i64| crate::poly::MultiPoly::affine(q(0), &[q(a), q(b)]);
        let one = crate::poly::MultiPoly::constant(2, q(1));
        let chi_d2 = UeaElement::delta2().hc_image().unwrap();
        // μ1(μ2 - 1)
        assert_eq!(chi_d2, mu(1, 0).mul(&mu(0, 1).sub(&one)));
        assert_eq!(UeaElement::delta1(2).hc_image().unwrap(), mu(1, 1));
        let x = e(2, 1, 2).mul(&e(2, 2, 1));
        assert_eq!(x.hc_image(), Err(Error::NotCentral));
        assert_eq!(x.highest_weight_functional(), mu(1, -1));
    }

    #[test]
    fn rank_mismatch_is_an_error() {
        assert!(e(2, 1, 1).try_mul(&e(3, 1, 1)).is_err());
        assert!(e(2, 1, 1).try_add(&e(3, 1, 1)).is_err());
    }

    #[test]
    fn term_bound_fails_loudly() {
        let x = UeaElement::casimir_t(3);
        let r = x.try_mul_bounded(&x, 3);
        assert!(matches!(r, Err(Error::TermBound { .. })));
    }

    #[test]
    fn json_roundtrip() {
        let x = e(2, 1, 2).mul(&e(2, 2, 1)).scale(&qf(3, 2)).add(&UeaElement::one(2));
        let s = serde_json::to_string(&x).unwrap();
        let back: UeaElement = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
    }
}
