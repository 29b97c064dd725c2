//! Matrices over U(gl_n)[u]: column determinants, the antisymmetrized
//! multi-determinant, and the tridiagonal recursion.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pbw::{UeaElement, UeaJson};
use crate::rational::{q, Q};
use crate::ring::{Coefficient, Poly};
use crate::tensor::{all_permutations, sign};

/// Polynomial in the central variable u with coefficients in U(gl_n).
pub type UPoly = Poly<UeaElement>;

/// `u^k` in U(gl_n)[u].
pub fn u_pow(n: usize, k: u32) -> UPoly {
    UPoly::monomial(k, UeaElement::one(n))
}

pub fn u_const(x: UeaElement) -> UPoly {
    UPoly::constant(x)
}

/// `a·u + b` with rational a, b.
pub fn u_affine(n: usize, a: &Q, b: &Q) -> UPoly {
    let mut p = UPoly::monomial(1, UeaElement::scalar(n, a.clone()));
    p.add_term(0, &UeaElement::scalar(n, b.clone())).expect("same rank");
    p
}

/// JSON form `{"deg": coeff-JSON}` with degrees as decimal strings.
pub fn upoly_to_json(p: &UPoly) -> BTreeMap<String, UeaJson> {
    p.iter().map(|(d, c)| (d.to_string(), c.to_json())).collect()
}

pub fn upoly_from_json(map: &BTreeMap<String, UeaJson>) -> Result<UPoly> {
    let mut p = UPoly::zero();
    for (d, c) in map {
        let deg: u32 = d.parse().map_err(|_| Error::Invalid(format!("bad degree key {d:?}")))?;
        p.add_term(deg, &UeaElement::from_json(c)?)?;
    }
    Ok(p)
}

/// Renders as `c_k u^k + …`, highest degree first.
pub fn upoly_display(p: &UPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    p.iter()
        .rev()
        .map(|(d, c)| match d {
            0 => format!("({c})"),
            1 => format!("({c})*u"),
            _ => format!("({c})*u^{d}"),
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Square matrix with entries in U(gl_n)[u].
#[derive(Clone, Debug, PartialEq)]
pub struct UeaMatrix {
    n: usize,
    size: usize,
    entries: Vec<UPoly>,
}

impl UeaMatrix {
    pub fn zeros(n: usize, size: usize) -> Self {
        Self { n, size, entries: vec![UPoly::zero(); size * size] }
    }

    pub fn from_fn(n: usize, size: usize, mut f: impl FnMut(usize, usize) -> UPoly) -> Self {
        let mut entries = Vec::with_capacity(size * size);
        for r in 0..size {
            for c in 0..size {
                entries.push(f(r, c));
            }
        }
        Self { n, size, entries }
    }

    /// Matrix with constant (u-free) entries.
    pub fn from_elements(n: usize, rows: Vec<Vec<UeaElement>>) -> Result<Self> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return Err(Error::Dimension("matrix is not square".into()));
        }
        if rows.iter().flatten().any(|x| x.n() != n) {
            return Err(Error::RankMismatch { left: n, right: rows.iter().flatten().find(|x| x.n() != n).map_or(n, UeaElement::n) });
        }
        Ok(Self { n, size, entries: rows.into_iter().flatten().map(UPoly::constant).collect() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Entry at 0-based (r, c).
    pub fn get(&self, r: usize, c: usize) -> &UPoly {
        &self.entries[r * self.size + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: UPoly) {
        self.entries[r * self.size + c] = x;
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        if self.size != rhs.size {
            return Err(Error::Dimension("matrix sizes differ".into()));
        }
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a.try_add(b)).collect::<Result<_>>()?;
        Ok(Self { n: self.n, size: self.size, entries })
    }

    /// Adds `p` to every diagonal entry.
    pub fn add_diagonal(&self, p: &UPoly) -> Result<Self> {
        let mut out = self.clone();
        for i in 0..self.size {
            out.entries[i * self.size + i] = out.entries[i * self.size + i].try_add(p)?;
        }
        Ok(out)
    }

    /// Subtracts the rational diagonal matrix `diag(d)`.
    pub fn sub_diagonal(&self, d: &[Q]) -> Result<Self> {
        let mut out = self.clone();
        for (i, x) in d.iter().enumerate() {
            let k = i * self.size + i;
            out.entries[k] = out.entries[k].try_sub(&u_const(UeaElement::scalar(self.n, x.clone())))?;
        }
        Ok(out)
    }

    /// Substitutes `u → u + s` in every entry.
    pub fn shift_u(&self, s: &Q) -> Result<Self> {
        let entries = self.entries.iter().map(|p| p.substitute_affine(&q(1), s)).collect::<Result<_>>()?;
        Ok(Self { n: self.n, size: self.size, entries })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, self.size, |r, c| self.get(c, r).clone())
    }

    pub fn to_json(&self) -> UeaMatrixJson {
        UeaMatrixJson {
            size: self.size,
            entries: (0..self.size).map(|r| (0..self.size).map(|c| upoly_to_json(self.get(r, c))).collect()).collect(),
        }
    }

    pub fn from_json(n: usize, j: &UeaMatrixJson) -> Result<Self> {
        if j.entries.len() != j.size || j.entries.iter().any(|r| r.len() != j.size) {
            return Err(Error::Dimension("entries do not match size".into()));
        }
        let entries = j.entries.iter().flatten().map(upoly_from_json).collect::<Result<Vec<_>>>()?;
        if entries.iter().any(|p| p.iter().any(|(_, c)| c.n() != n)) {
            return Err(Error::Invalid("entry rank differs from matrix rank".into()));
        }
        Ok(Self { n, size: j.size, entries })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UeaMatrixJson {
    pub size: usize,
    pub entries: Vec<Vec<BTreeMap<String, UeaJson>>>,
}

/// Column determinant Σ_σ sgn(σ) A_{σ(1)1} ⋯ A_{σ(s)s}.
///
/// Evaluated by dynamic programming over the set of rows used by the first
/// k columns: partial products share their common left factors, so the cost
/// is s·2^s entry products instead of s·s!. Each level is computed in
/// parallel, and every state sums its predecessors in ascending row order.
pub fn column_det(a: &UeaMatrix) -> Result<UPoly> {
    let cols: Vec<&UeaMatrix> = vec![a; a.size];
    mixed_det(&cols, a.n)
}

/// α(A₁, …, A_s) = Σ_σ sgn(σ) [A₁]_{σ(1)1} ⋯ [A_s]_{σ(s)s}.
pub fn alpha(mats: &[UeaMatrix]) -> Result<UPoly> {
    let s = mats.len();
    if mats.iter().any(|m| m.size != s) {
        return Err(Error::Dimension(format!("alpha needs {s} matrices of size {s}")));
    }
    let n = mats.first().map_or(1, |m| m.n);
    let refs: Vec<&UeaMatrix> = mats.iter().collect();
    mixed_det(&refs, n)
}

/// Column k of the expansion is read from `cols[k]`.
fn mixed_det(cols: &[&UeaMatrix], n: usize) -> Result<UPoly> {
    let s = cols.len();
    if s == 0 {
        return Ok(u_pow(n, 0));
    }
    if s > 24 {
        return Err(Error::Dimension(format!("determinant of size {s} is beyond the subset expansion")));
    }
    let mut level: BTreeMap<u32, UPoly> = BTreeMap::new();
    level.insert(0, u_pow(n, 0));
    for k in 0..s {
        let col = cols[k];
        let targets: Vec<u32> = subsets_of_size(s, k + 1);
        let next = targets
            .par_iter()
            .map(|&set| {
                let mut acc = UPoly::zero();
                for r in 0..s {
                    if set & (1 << r) == 0 {
                        continue;
                    }
                    let prev = set & !(1 << r);
                    let Some(p) = level.get(&prev) else { continue };
                    let entry = col.get(r, k);
                    if entry.is_zero() {
                        continue;
                    }
                    // rows already used that exceed r each add one inversion
                    let inv = (prev >> (r + 1)).count_ones();
                    let t = p.try_mul(entry)?;
                    acc.try_add_assign(&if inv % 2 == 1 { t.neg() } else { t })?;
                }
                Ok((set, acc))
            })
            .collect::<Result<Vec<_>>>()?;
        level = next.into_iter().filter(|(_, p)| !p.is_zero()).collect();
    }
    Ok(level.remove(&((1u32 << s) - 1)).unwrap_or_default())
}

fn subsets_of_size(s: usize, k: usize) -> Vec<u32> {
    (0u32..(1 << s)).filter(|x| x.count_ones() as usize == k).collect()
}

/// The column determinant by literal summation over all permutations.
pub fn column_det_naive(a: &UeaMatrix) -> Result<UPoly> {
    let mut acc = UPoly::zero();
    for p in all_permutations(a.size) {
        let mut t = u_pow(a.n, 0);
        for (c, &r) in p.iter().enumerate() {
            t = t.try_mul(a.get(r, c))?;
        }
        acc.try_add_assign(&if sign(&p) < 0 { t.neg() } else { t })?;
    }
    Ok(acc)
}

/// det X(a, b, c) for the tridiagonal matrix with diagonal a_m, …, a₀,
/// superdiagonal b_m, …, b₁ and subdiagonal c_m, …, c₁, via
/// I⁽ᵏ⁺¹⁾ = a_k I⁽ᵏ⁾ − c_k b_k I⁽ᵏ⁻¹⁾. `b[k-1]` and `c[k-1]` hold b_k, c_k.
pub fn tridiag_det(a: &[UPoly], b: &[UPoly], c: &[UPoly]) -> Result<UPoly> {
    if a.is_empty() || b.len() + 1 != a.len() || c.len() != b.len() {
        return Err(Error::Dimension(format!("tridiagonal data of lengths {}, {}, {}", a.len(), b.len(), c.len())));
    }
    let n = a[0].iter().next().map_or(1, |(_, x)| x.n());
    let mut prev = u_pow(n, 0);
    let mut cur = a[0].clone();
    for k in 1..a.len() {
        let next = a[k].try_mul(&cur)?.try_sub(&c[k - 1].try_mul(&b[k - 1])?.try_mul(&prev)?)?;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// The matrix X(a, b, c) laid out as in [`tridiag_det`].
pub fn tridiag_matrix(n: usize, a: &[UPoly], b: &[UPoly], c: &[UPoly]) -> UeaMatrix {
    let m = a.len() - 1;
    UeaMatrix::from_fn(n, m + 1, |r, col| {
        if r == col {
            a[m - r].clone()
        } else if col == r + 1 {
            b[m - r - 1].clone()
        } else if r == col + 1 {
            c[m - col - 1].clone()
        } else {
            UPoly::zero()
        }
    })
}

/// Reads the tridiagonal data back from a matrix, refusing other entries.
pub fn tridiag_data(x: &UeaMatrix) -> Result<(Vec<UPoly>, Vec<UPoly>, Vec<UPoly>)> {
    let s = x.size();
    let m = s - 1;
    for r in 0..s {
        for c in 0..s {
            if r.abs_diff(c) > 1 && !x.get(r, c).is_zero() {
                return Err(Error::Invalid("matrix is not tridiagonal".into()));
            }
        }
    }
    let a = (0..=m).map(|k| x.get(m - k, m - k).clone()).collect();
    let b = (1..=m).map(|k| x.get(m - k, m - k + 1).clone()).collect();
    let c = (1..=m).map(|k| x.get(m - k + 1, m - k).clone()).collect();
    Ok((a, b, c))
}

/// Ordinary determinant of a matrix of commuting rational polynomials,
/// used by the Sylvester check; entries given as coefficient maps.
pub fn commutative_det_q(m: &[Vec<Q>]) -> Q {
    let s = m.len();
    let mut acc = Q::zero();
    for p in all_permutations(s) {
        let mut t = Q::from_integer(sign(&p).into());
        for (c, &r) in p.iter().enumerate() {
            t *= &m[r][c];
            if t.is_zero() {
                break;
            }
        }
        acc += t;
    }
    acc
}

/// The Sylvester-type matrix A′_m at a rational s: diagonal 0, −1, …, −m,
/// superdiagonal ms, (m−1)s, …, s, subdiagonal (s−1), 2(s−1), …, m(s−1).
pub fn sylvester_matrix(m: usize, s: &Q) -> Vec<Vec<Q>> {
    let mut a = vec![vec![Q::zero(); m + 1]; m + 1];
    for r in 0..=m {
        a[r][r] = q(-(r as i64));
        if r < m {
            a[r][r + 1] = s * q((m - r) as i64);
            a[r + 1][r] = (s - Q::one()) * q((r + 1) as i64);
        }
    }
    a
}

/// ∏_{k=0}^{m} ((m − 2k)s − m + k).
pub fn sylvester_product(m: usize, s: &Q) -> Q {
    let m = m as i64;
    (0..=m).fold(Q::one(), |acc, k| acc * (s * q(m - 2 * k) + q(k - m)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: usize, j: usize) -> UeaElement {
        UeaElement::e(2, i, j)
    }

    fn omega_vector_shifted() -> UeaMatrix {
        // [[E11 + u − 1, E21], [E12, E22 + u]]
        let omega = UeaMatrix::from_elements(2, vec![vec![e(1, 1), e(2, 1)], vec![e(1, 2), e(2, 2)]]).unwrap();
        omega.add_diagonal(&u_pow(2, 1)).unwrap().sub_diagonal(&[q(1), q(0)]).unwrap()
    }

    #[test]
    fn vector_shifted_determinant() {
        let d = column_det(&omega_vector_shifted()).unwrap();
        let expected = UPoly::from_terms([
            (0, UeaElement::delta2()),
            (1, UeaElement::delta1(2).sub(&UeaElement::one(2))),
            (2, UeaElement::one(2)),
        ])
        .unwrap();
        assert_eq!(d, expected);
        assert_eq!(column_det_naive(&omega_vector_shifted()).unwrap(), expected);
    }

    #[test]
    fn identity_and_alpha_diagonal() {
        let id = UeaMatrix::from_fn(2, 3, |r, c| if r == c { u_pow(2, 0) } else { UPoly::zero() });
        assert_eq!(column_det(&id).unwrap(), u_pow(2, 0));
        let a = omega_vector_shifted();
        assert_eq!(alpha(&[a.clone(), a.clone()]).unwrap(), column_det(&a).unwrap());
    }

    #[test]
    fn tridiagonal_small_cases() {
        let c = |x: UeaElement| u_const(x);
        let a0 = c(e(1, 1));
        assert_eq!(tridiag_det(&[a0.clone()], &[], &[]).unwrap(), a0);
        let (a1, b1, c1) = (c(e(2, 2)), c(e(2, 1)), c(e(1, 2)));
        let d = tridiag_det(&[a0.clone(), a1.clone()], &[b1.clone()], &[c1.clone()]).unwrap();
        let expect = a1.try_mul(&a0).unwrap().try_sub(&c1.try_mul(&b1).unwrap()).unwrap();
        assert_eq!(d, expect);
        let x = tridiag_matrix(2, &[a0.clone(), a1.clone()], &[b1.clone()], &[c1.clone()]);
        let (ra, rb, rc) = tridiag_data(&x).unwrap();
        assert_eq!((ra, rb, rc), (vec![a0, a1], vec![b1], vec![c1]));
    }

    #[test]
    fn sylvester_small() {
        let s = Q::new(3.into(), 7.into());
        for m in 0..4 {
            assert_eq!(commutative_det_q(&sylvester_matrix(m, &s)), sylvester_product(m, &s));
        }
    }

    #[test]
    fn json_roundtrip() {
        let a = omega_vector_shifted();
        let s = serde_json::to_string(&a.to_json()).unwrap();
        let back = UeaMatrix::from_json(2, &serde_json::from_str(&s).unwrap()).unwrap();
        assert_eq!(back, a);
    }
}
