//! Coefficient rings and univariate polynomials over them.
//!
//! The formal variable `u` is central, so a polynomial over any coefficient
//! ring (rationals, U(gl_n), or polynomials again) multiplies by plain
//! convolution with the coefficient products taken in order.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::binomial;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{q, Q};

/// The operations the tensor and polynomial containers need from their entries.
pub trait Coefficient: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn vanishes(&self) -> bool;
    fn try_add_assign(&mut self, rhs: &Self) -> Result<()>;
    fn try_mul(&self, rhs: &Self) -> Result<Self>;
    fn scale(&self, c: &Q) -> Self;

    fn neg(&self) -> Self {
        self.scale(&q(-1))
    }
}

impl Coefficient for Q {
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }

    fn try_add_assign(&mut self, rhs: &Self) -> Result<()> {
        *self += rhs;
        Ok(())
    }

    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        Ok(self * rhs)
    }

    fn scale(&self, c: &Q) -> Self {
        self * c
    }
}

/// Polynomial in one central variable; only nonzero coefficients are stored.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<C> {
    coeffs: BTreeMap<u32, C>,
}

/// Rational polynomial in one variable.
pub type QPoly = Poly<Q>;

impl<C> Default for Poly<C> {
    fn default() -> Self {
        Self { coeffs: BTreeMap::new() }
    }
}

impl<C: Coefficient> Poly<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(deg: u32, c: C) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.vanishes() {
            coeffs.insert(deg, c);
        }
        Self { coeffs }
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(0, c)
    }

    /// Builds from `(degree, coefficient)` pairs, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (u32, C)>>(terms: I) -> Result<Self> {
        let mut p = Self::zero();
        for (d, c) in terms {
            p.add_term(d, &c)?;
        }
        Ok(p)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, deg: u32) -> Option<&C> {
        self.coeffs.get(&deg)
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.values().next_back()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (u32, &C)> {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn add_term(&mut self, deg: u32, c: &C) -> Result<()> {
        if c.vanishes() {
            return Ok(());
        }
        match self.coeffs.get_mut(&deg) {
            Some(e) => {
                e.try_add_assign(c)?;
                if e.vanishes() {
                    self.coeffs.remove(&deg);
                }
            }
            None => {
                self.coeffs.insert(deg, c.clone());
            }
        }
        Ok(())
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (d, c) in rhs.iter() {
            out.add_term(d, c)?;
        }
        Ok(out)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.try_add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&q(-1))
    }

    pub fn scale(&self, c: &Q) -> Self {
        if Zero::is_zero(c) {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|(d, x)| (*d, x.scale(c))).collect() }
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (da, a) in self.iter() {
            for (db, b) in rhs.iter() {
                out.add_term(da + db, &a.try_mul(b)?)?;
            }
        }
        Ok(out)
    }

    /// Multiplies by a rational polynomial in the same variable.
    pub fn mul_scalar_poly(&self, p: &QPoly) -> Result<Self> {
        let mut out = Self::zero();
        for (da, a) in self.iter() {
            for (db, b) in p.iter() {
                out.add_term(da + db, &a.scale(b))?;
            }
        }
        Ok(out)
    }

    /// Multiplies by `u^k`.
    pub fn shift_degree(&self, k: u32) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(d, c)| (d + k, c.clone())).collect() }
    }

    /// Substitutes `u -> a*u + b`.
    pub fn substitute_affine(&self, a: &Q, b: &Q) -> Result<Self> {
        let mut out = Self::zero();
        for (d, c) in self.iter() {
            // (a u + b)^d = sum_j C(d, j) a^j b^(d-j) u^j
            for j in 0..=d {
                let w = Q::from_integer(binomial(d as u64, j as u64).into())
                    * pow_q(a, j)
                    * pow_q(b, d - j);
                out.add_term(j, &c.scale(&w))?;
            }
        }
        Ok(out)
    }

    pub fn map<D: Coefficient, F: FnMut(&C) -> Result<D>>(&self, mut f: F) -> Result<Poly<D>> {
        let mut out = Poly::zero();
        for (d, c) in self.iter() {
            out.add_term(d, &f(c)?)?;
        }
        Ok(out)
    }
}

impl<C: Coefficient> Coefficient for Poly<C> {
    fn vanishes(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn try_add_assign(&mut self, rhs: &Self) -> Result<()> {
        for (d, c) in rhs.iter() {
            self.add_term(d, c)?;
        }
        Ok(())
    }

    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        Poly::try_mul(self, rhs)
    }

    fn scale(&self, c: &Q) -> Self {
        Poly::scale(self, c)
    }
}

pub fn pow_q(x: &Q, e: u32) -> Q {
    let mut r = Q::one();
    for _ in 0..e {
        r *= x;
    }
    r
}

impl QPoly {
    /// `u - r`.
    pub fn linear_root(r: &Q) -> Self {
        Self::from_terms([(1, Q::one()), (0, -r.clone())]).expect("rational arithmetic")
    }

    pub fn var() -> Self {
        Self::monomial(1, Q::one())
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    /// Coefficients from degree 0 upwards, dense.
    pub fn dense(&self) -> Vec<Q> {
        let Some(deg) = self.degree() else { return Vec::new() };
        (0..=deg).map(|d| self.coeff(d).cloned().unwrap_or_else(Q::zero)).collect()
    }

    pub fn from_dense(c: &[Q]) -> Self {
        Self::from_terms(c.iter().enumerate().map(|(d, x)| (d as u32, x.clone())))
            .expect("rational arithmetic")
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.dense().iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
    }

    pub fn product_of_roots(roots: &[Q]) -> Self {
        roots
            .iter()
            .fold(Self::one(), |acc, r| acc.try_mul(&Self::linear_root(r)).expect("rational"))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&(Q::one() / l)),
            None => self.clone(),
        }
    }

    /// Euclidean division; errors on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or_else(|| Error::Invalid("division by zero polynomial".into()))?;
        let lead = d.leading().cloned().expect("nonzero");
        let mut rem = self.clone();
        let mut quo = Self::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = rem.leading().cloned().expect("nonzero") / &lead;
            let t = Self::monomial(rd - dd, c);
            quo = quo.try_add(&t)?;
            rem = rem.try_sub(&d.try_mul(&t)?)?;
        }
        Ok((quo, rem))
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(other);
        let (q, _) = self.try_mul(other).expect("rational").div_rem(&g).expect("nonzero gcd");
        q.monic()
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .iter()
            .rev()
            .map(|(d, c)| match d {
                0 => crate::rational::fmt_q(c),
                1 => format!("{}*u", crate::rational::fmt_q(c)),
                _ => format!("{}*u^{d}", crate::rational::fmt_q(c)),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qf;

    #[test]
    fn product_and_division() {
        let p = QPoly::product_of_roots(&[q(1), q(-1), qf(1, 2)]);
        assert_eq!(p.degree(), Some(3));
        assert!(p.eval(&qf(1, 2)).is_zero());
        let (quo, rem) = p.div_rem(&QPoly::linear_root(&q(1))).unwrap();
        assert!(rem.is_zero());
        assert_eq!(quo, QPoly::product_of_roots(&[q(-1), qf(1, 2)]));
    }

    #[test]
    fn gcd_lcm() {
        let a = QPoly::product_of_roots(&[q(1), q(2)]);
        let b = QPoly::product_of_roots(&[q(2), q(3)]);
        assert_eq!(a.gcd(&b), QPoly::linear_root(&q(2)));
        assert_eq!(a.lcm(&b), QPoly::product_of_roots(&[q(1), q(2), q(3)]));
    }

    #[test]
    fn affine_substitution() {
        // (u+1)^2 at u -> -u + 2 is (3-u)^2
        let p = QPoly::product_of_roots(&[q(-1), q(-1)]);
        let s = p.substitute_affine(&q(-1), &q(2)).unwrap();
        assert_eq!(s, QPoly::product_of_roots(&[q(3), q(3)]));
    }
}
