//! Multivariate rational polynomials, used for Harish-Chandra images in the
//! weight variables μ₁…μ_n and for small auxiliary polynomial rings.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{fmt_q, parse_q, Q};
use crate::ring::Coefficient;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Q>,
}

/// Polynomial in μ₁…μ_n.
pub type WeightPolynomial = MultiPoly;

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The variable with index `i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, Q::one());
        p
    }

    /// `c0 + Σ c_i x_i`.
    pub fn affine(c0: Q, coeffs: &[Q]) -> Self {
        let n = coeffs.len();
        let mut p = Self::constant(n, c0);
        for (i, c) in coeffs.iter().enumerate() {
            p = p.add(&Self::var(n, i).scale(c));
        }
        p
    }

    /// The monomial μ^e with coefficient one.
    pub fn from_monomial(nvars: usize, exps: &[u32]) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(exps.to_vec(), Q::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Q {
        self.terms.get(exps).cloned().unwrap_or_else(Q::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Q) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
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

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self { nvars: self.nvars, terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = Self::zero(self.nvars);
        for (ea, a) in self.terms() {
            for (eb, b) in rhs.terms() {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, a * b);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(self.nvars, Q::one()), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, point: &[Q]) -> Q {
        assert_eq!(point.len(), self.nvars, "evaluation point has wrong length");
        let mut acc = Q::zero();
        for (e, c) in self.terms() {
            let mut t = c.clone();
            for (x, k) in point.iter().zip(e) {
                for _ in 0..*k {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }

    /// Replaces every variable by a polynomial; all images share one ring.
    pub fn substitute(&self, images: &[MultiPoly]) -> Self {
        assert_eq!(images.len(), self.nvars, "one image per variable");
        let target = images.first().map(|p| p.nvars).unwrap_or(0);
        let mut out = Self::zero(target);
        for (e, c) in self.terms() {
            let mut t = Self::constant(target, c.clone());
            for (img, k) in images.iter().zip(e) {
                t = t.mul(&img.pow(*k));
            }
            out = out.add(&t);
        }
        out
    }

    /// Monomials of total degree ≤ `deg` in graded-lexicographic order.
    pub fn monomials_up_to(nvars: usize, deg: u32) -> Vec<Vec<u32>> {
        fn rec(prefix: &mut Vec<u32>, left: usize, budget: u32, out: &mut Vec<Vec<u32>>) {
            if left == 0 {
                out.push(prefix.clone());
                return;
            }
            for k in 0..=budget {
                prefix.push(k);
                rec(prefix, left - 1, budget - k, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), nvars, deg, &mut out);
        out.sort_by_key(|e| (e.iter().sum::<u32>(), e.clone()));
        out
    }
}

impl Coefficient for MultiPoly {
    fn vanishes(&self) -> bool {
        self.terms.is_empty()
    }

    fn try_add_assign(&mut self, rhs: &Self) -> Result<()> {
        if self.nvars != rhs.nvars {
            return Err(Error::RankMismatch { left: self.nvars, right: rhs.nvars });
        }
        *self = self.add(rhs);
        Ok(())
    }

    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.nvars != rhs.nvars {
            return Err(Error::RankMismatch { left: self.nvars, right: rhs.nvars });
        }
        Ok(self.mul(rhs))
    }

    fn scale(&self, c: &Q) -> Self {
        MultiPoly::scale(self, c)
    }
}

impl fmt::Display for MultiPoly {
    /// Variables print as `mu1, mu2, …`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, k)| **k > 0)
                .map(|(i, k)| if *k == 1 { format!("mu{}", i + 1) } else { format!("mu{}^{k}", i + 1) })
                .collect();
            let neg = *c < Q::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{}", fmt_q(&mag))?,
                (false, true) => write!(f, "{}", mono.join("*"))?,
                (false, false) => write!(f, "{}*{}", fmt_q(&mag), mono.join("*"))?,
            }
        }
        Ok(())
    }
}

/// JSON form: `{"[e1,e2,...]": "p/q", ...}`.
impl Serialize for MultiPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            let key = format!(
                "[{}]",
                e.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(",")
            );
            m.serialize_entry(&key, &fmt_q(c))?;
        }
        m.end()
    }
}

impl MultiPoly {
    pub fn from_json_map(nvars: usize, map: &BTreeMap<String, String>) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (k, v) in map {
            let inner = k.trim().trim_start_matches('[').trim_end_matches(']');
            let e: Vec<u32> = if inner.trim().is_empty() {
                Vec::new()
            } else {
                inner
                    .split(',')
                    .map(|t| t.trim().parse::<u32>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| Error::Invalid(format!("bad exponent vector {k:?}")))?
            };
            if e.len() != nvars {
                return Err(Error::Invalid(format!("exponent vector {k:?} has wrong length")));
            }
            p.add_term(e, parse_q(v)?);
        }
        Ok(p)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let map = BTreeMap::<String, String>::deserialize(d)?;
        let nvars = map
            .keys()
            .next()
            .map(|k| k.matches(',').count() + 1)
            .ok_or_else(|| serde::de::Error::custom("empty polynomial has no variable count"))?;
        MultiPoly::from_json_map(nvars, &map).map_err(serde::de::Error::custom)
    }
}
