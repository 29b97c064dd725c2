//! Dense exact rational matrices and the minimal-polynomial routine.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{fmt_q, Q};
use crate::ring::QPoly;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl Index<(usize, usize)> for QMatrix {
    type Output = Q;
    fn index(&self, (r, c): (usize, usize)) -> &Q {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Q {
        &mut self.data[r * self.cols + c]
    }
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    /// The matrix unit with a single one at `(r, c)`.
    pub fn unit(n: usize, r: usize, c: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m[(r, c)] = Q::one();
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Q) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    pub fn diagonal(d: &[Q]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            m[(i, i)] = x.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[Q] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Q> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Q>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = &rhs[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len(), "shape mismatch");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Q::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    /// Kronecker product; the left factor indexes the outer blocks.
    pub fn kron(&self, rhs: &Self) -> Self {
        let mut out = Self::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = &self[(r1, c1)];
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..rhs.rows {
                    for c2 in 0..rhs.cols {
                        let b = &rhs[(r2, c2)];
                        if !b.is_zero() {
                            out[(r1 * rhs.rows + r2, c1 * rhs.cols + c2)] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(self.rows), |acc, _| acc.mul(self))
    }

    /// Evaluates a rational polynomial at this matrix.
    pub fn eval_poly(&self, p: &QPoly) -> Self {
        let mut acc = Self::zeros(self.rows, self.cols);
        for c in p.dense().iter().rev() {
            acc = acc.mul(self).add(&Self::identity(self.rows).scale(c));
        }
        acc
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else { continue };
            m.swap_rows(row, p);
            let inv = Q::one() / &m[(row, col)];
            for c in col..m.cols {
                m[(row, c)] *= &inv;
            }
            for r in 0..m.rows {
                if r != row && !m[(r, col)].is_zero() {
                    let f = m[(r, col)].clone();
                    for c in col..m.cols {
                        let t = &f * &m[(row, c)];
                        m[(r, c)] -= t;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn determinant(&self) -> Result<Q> {
        if !self.is_square() {
            return Err(Error::Dimension("determinant of a non-square matrix".into()));
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut det = Q::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[(r, col)].is_zero()) else { return Ok(Q::zero()) };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            let piv = m[(col, col)].clone();
            det *= &piv;
            for r in col + 1..n {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let f = &m[(r, col)] / &piv;
                for c in col..n {
                    let t = &f * &m[(col, c)];
                    m[(r, c)] -= t;
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self[(r, c)].clone()
            } else if c - n == r {
                Q::one()
            } else {
                Q::zero()
            }
        });
        let (red, piv) = aug.rref();
        if piv.len() < n || piv[n - 1] >= n {
            return Err(Error::Dimension("singular matrix".into()));
        }
        Ok(Self::from_fn(n, n, |r, c| red[(r, c + n)].clone()))
    }

    /// Basis of the right null space.
    pub fn nullspace(&self) -> Vec<Vec<Q>> {
        let (red, piv) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !piv.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Q::zero(); self.cols];
                v[f] = Q::one();
                for (r, &p) in piv.iter().enumerate() {
                    v[p] = -red[(r, f)].clone();
                }
                v
            })
            .collect()
    }

    /// Exact solution of `A x = b`, if one exists (any solution when not unique).
    pub fn solve(&self, b: &[Q]) -> Option<Vec<Q>> {
        let aug = Self::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                b[r].clone()
            }
        });
        let (red, piv) = aug.rref();
        if piv.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Q::zero(); self.cols];
        for (r, &p) in piv.iter().enumerate() {
            x[p] = red[(r, self.cols)].clone();
        }
        Some(x)
    }

    pub fn trace(&self) -> Q {
        (0..self.rows.min(self.cols)).fold(Q::zero(), |acc, i| acc + &self[(i, i)])
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(fmt_q).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Incrementally built subspace with exact coordinates relative to the
/// vectors inserted so far.
#[derive(Clone, Debug, Default)]
pub struct Span {
    // echelon rows: (reduced vector, pivot, combination of inserted vectors)
    rows: Vec<(Vec<Q>, usize, Vec<Q>)>,
    inserted: usize,
}

impl Span {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.inserted
    }

    fn reduce(&self, v: &[Q]) -> (Vec<Q>, Vec<Q>) {
        let mut red = v.to_vec();
        let mut f = vec![Q::zero(); self.rows.len()];
        for (k, (b, p, _)) in self.rows.iter().enumerate() {
            if red[*p].is_zero() {
                continue;
            }
            let c = red[*p].clone();
            for (x, y) in red.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x -= &c * y;
                }
            }
            f[k] = c;
        }
        (red, f)
    }

    /// Inserts `v` if it is independent of the span; returns whether it was.
    pub fn insert(&mut self, v: &[Q]) -> bool {
        let (mut red, f) = self.reduce(v);
        let Some(p) = red.iter().position(|x| !x.is_zero()) else { return false };
        // red = v − Σ f_k row_k, with row_k = Σ_j combo_kj b_j
        let mut combo = vec![Q::zero(); self.inserted + 1];
        combo[self.inserted] = Q::one();
        for (fk, (_, _, ck)) in f.iter().zip(&self.rows) {
            if fk.is_zero() {
                continue;
            }
            for (x, y) in combo.iter_mut().zip(ck) {
                *x -= fk * y;
            }
        }
        let inv = Q::one() / &red[p];
        red.iter_mut().for_each(|x| *x *= &inv);
        combo.iter_mut().for_each(|x| *x *= &inv);
        self.rows.push((red, p, combo));
        self.inserted += 1;
        true
    }

    /// Coordinates of `v` in the inserted vectors, or `None` if outside the span.
    pub fn coordinates(&self, v: &[Q]) -> Option<Vec<Q>> {
        let (red, f) = self.reduce(v);
        if red.iter().any(|x| !x.is_zero()) {
            return None;
        }
        let mut out = vec![Q::zero(); self.inserted];
        for (fk, (_, _, ck)) in f.iter().zip(&self.rows) {
            if fk.is_zero() {
                continue;
            }
            for (x, y) in out.iter_mut().zip(ck) {
                *x += fk * y;
            }
        }
        Some(out)
    }
}

/// Minimal polynomial of the Krylov sequence `v, Av, A²v, …`.
pub fn local_minimal_poly(apply: &dyn Fn(&[Q]) -> Vec<Q>, v: &[Q]) -> QPoly {
    let dim = v.len();
    // echelon rows: (vector, pivot, combination over the Krylov vectors)
    let mut basis: Vec<(Vec<Q>, usize, Vec<Q>)> = Vec::new();
    let mut k = v.to_vec();
    for t in 0..=dim {
        let mut red = k.clone();
        let mut combo = vec![Q::zero(); t + 1];
        combo[t] = Q::one();
        for (b, p, bc) in &basis {
            if red[*p].is_zero() {
                continue;
            }
            let f = red[*p].clone();
            for (x, y) in red.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            for (x, y) in combo.iter_mut().zip(bc) {
                *x -= &f * y;
            }
        }
        match red.iter().position(|x| !x.is_zero()) {
            None => return QPoly::from_dense(&combo),
            Some(p) => {
                let inv = Q::one() / &red[p];
                red.iter_mut().for_each(|x| *x *= &inv);
                combo.iter_mut().for_each(|x| *x *= &inv);
                basis.push((red, p, combo));
            }
        }
        k = apply(&k);
    }
    unreachable!("Krylov sequence must become dependent within dim + 1 steps")
}

/// Exact minimal polynomial of a linear map given by its action on vectors.
///
/// Starts from one generic Krylov vector, then enlarges by lcm with the
/// local minimal polynomial of every basis vector the candidate fails to kill.
pub fn minimal_poly_of(dim: usize, apply: &dyn Fn(&[Q]) -> Vec<Q>) -> QPoly {
    if dim == 0 {
        return QPoly::one();
    }
    let seed: Vec<Q> = (0..dim).map(|i| Q::from_integer(((i * 7919) % 104_729 + 1).into())).collect();
    let mut p = local_minimal_poly(apply, &seed);
    for i in 0..dim {
        let mut e = vec![Q::zero(); dim];
        e[i] = Q::one();
        if !poly_apply(apply, &p, &e).iter().all(Zero::is_zero) {
            p = p.lcm(&local_minimal_poly(apply, &e));
        }
    }
    p
}

/// `p(A) v` by Horner's rule.
pub fn poly_apply(apply: &dyn Fn(&[Q]) -> Vec<Q>, p: &QPoly, v: &[Q]) -> Vec<Q> {
    let mut acc = vec![Q::zero(); v.len()];
    for c in p.dense().iter().rev() {
        acc = apply(&acc);
        for (a, x) in acc.iter_mut().zip(v) {
            *a += c * x;
        }
    }
    acc
}

/// Least-degree monic annihilating polynomial of a square matrix.
pub fn minimal_poly(m: &QMatrix) -> Result<QPoly> {
    if !m.is_square() {
        return Err(Error::Dimension("minimal polynomial of a non-square matrix".into()));
    }
    Ok(minimal_poly_of(m.rows(), &|v| m.mul_vec(v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qf};

    fn flip() -> QMatrix {
        // permutation e_i ⊗ e_j -> e_j ⊗ e_i on C² ⊗ C²
        QMatrix::from_fn(4, 4, |r, c| {
            let (i, j) = (c / 2, c % 2);
            if r == j * 2 + i {
                q(1)
            } else {
                q(0)
            }
        })
    }

    #[test]
    fn minimal_polynomials() {
        assert_eq!(minimal_poly(&QMatrix::identity(3)).unwrap(), QPoly::linear_root(&q(1)));
        assert_eq!(minimal_poly(&flip()).unwrap(), QPoly::product_of_roots(&[q(1), q(-1)]));
        // Jordan block needs the square
        let j = QMatrix::from_rows(vec![vec![q(2), q(1)], vec![q(0), q(2)]]).unwrap();
        assert_eq!(minimal_poly(&j).unwrap(), QPoly::product_of_roots(&[q(2), q(2)]));
        // block diagonal with a repeated eigenvalue: degree below dimension
        let d = QMatrix::diagonal(&[q(1), q(1), qf(1, 2)]);
        assert_eq!(minimal_poly(&d).unwrap(), QPoly::product_of_roots(&[q(1), qf(1, 2)]));
    }

    #[test]
    fn determinant_inverse_nullspace() {
        let a = QMatrix::from_rows(vec![vec![q(2), q(1)], vec![q(4), q(3)]]).unwrap();
        assert_eq!(a.determinant().unwrap(), q(2));
        assert_eq!(a.mul(&a.inverse().unwrap()), QMatrix::identity(2));
        let s = QMatrix::from_rows(vec![vec![q(1), q(2)], vec![q(2), q(4)]]).unwrap();
        assert!(s.inverse().is_err());
        let ns = s.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(s.mul_vec(&ns[0]).iter().all(Zero::is_zero));
        assert_eq!(s.rank(), 1);
    }

    #[test]
    fn span_coordinates() {
        let mut s = Span::new();
        assert!(s.insert(&[q(1), q(1), q(0)]));
        assert!(!s.insert(&[q(2), q(2), q(0)]));
        assert!(s.insert(&[q(0), q(1), q(1)]));
        assert_eq!(s.coordinates(&[q(1), q(3), q(2)]), Some(vec![q(1), q(2)]));
        assert_eq!(s.coordinates(&[q(1), q(0), q(0)]), None);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let s = QMatrix::from_rows(vec![vec![q(1), q(2)], vec![q(2), q(4)]]).unwrap();
        assert!(s.solve(&[q(1), q(2)]).is_some());
        assert!(s.solve(&[q(1), q(3)]).is_none());
    }
}
