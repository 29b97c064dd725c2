//! Sparse operators on tensor powers of C^n.
//!
//! A basis tensor e_{i_1} ⊗ … ⊗ e_{i_N} (indices 0-based) is encoded as the
//! integer Σ i_k n^(N−k), so leg 1 is the most significant digit. Entries
//! may be rationals or anything implementing [`Coefficient`]; for operators
//! with U(gl_n)-valued entries, products multiply coefficients left to right.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::qmatrix::QMatrix;
use crate::rational::Q;
use crate::ring::Coefficient;

pub const DEFAULT_TENSOR_BOUND: usize = 1 << 14;

static TENSOR_BOUND: AtomicUsize = AtomicUsize::new(DEFAULT_TENSOR_BOUND);

/// Sets the largest tensor-space dimension operators may be built on.
pub fn set_tensor_bound(bound: usize) {
    TENSOR_BOUND.store(bound, Ordering::Relaxed);
}

pub fn tensor_bound() -> usize {
    TENSOR_BOUND.load(Ordering::Relaxed)
}

/// Dimension n^legs, refused when above the configured bound.
pub fn checked_dim(n: usize, legs: usize) -> Result<usize> {
    let bound = tensor_bound();
    let mut d: usize = 1;
    for _ in 0..legs {
        d = d.saturating_mul(n);
        if d > bound {
            return Err(Error::TensorBound { size: d, bound });
        }
    }
    Ok(d)
}

pub fn encode(n: usize, idx: &[usize]) -> usize {
    idx.iter().fold(0, |acc, &i| acc * n + i)
}

pub fn decode(n: usize, legs: usize, mut x: usize) -> Vec<usize> {
    let mut v = vec![0; legs];
    for k in (0..legs).rev() {
        v[k] = x % n;
        x /= n;
    }
    v
}

/// A square operator on (C^n)^{⊗legs}, stored by rows.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorOp<C> {
    n: usize,
    legs: usize,
    rows: Vec<BTreeMap<usize, C>>,
}

/// Exact rational tensor operator.
pub type TensorOperator = TensorOp<Q>;

impl<C: Coefficient> TensorOp<C> {
    pub fn zero(n: usize, legs: usize) -> Result<Self> {
        let d = checked_dim(n, legs)?;
        Ok(Self { n, legs, rows: vec![BTreeMap::new(); d] })
    }

    /// The diagonal operator `c · id`.
    pub fn scalar(n: usize, legs: usize, c: &C) -> Result<Self> {
        let mut op = Self::zero(n, legs)?;
        if !c.vanishes() {
            for (r, row) in op.rows.iter_mut().enumerate() {
                row.insert(r, c.clone());
            }
        }
        Ok(op)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&C> {
        self.rows[r].get(&c)
    }

    pub fn row(&self, r: usize) -> &BTreeMap<usize, C> {
        &self.rows[r]
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BTreeMap::is_empty)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &C)> {
        self.rows.iter().enumerate().flat_map(|(r, row)| row.iter().map(move |(c, x)| (r, *c, x)))
    }

    /// Adds `x` at `(r, c)`, dropping the entry if it cancels.
    pub fn add_entry(&mut self, r: usize, c: usize, x: &C) -> Result<()> {
        add_into(&mut self.rows[r], c, x)
    }

    fn check_shape(&self, rhs: &Self) -> Result<()> {
        if self.n != rhs.n || self.legs != rhs.legs {
            return Err(Error::Dimension(format!(
                "operator on {}^{} vs {}^{}",
                self.n, self.legs, rhs.n, rhs.legs
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.check_shape(rhs)?;
        let mut out = self.clone();
        for (r, c, x) in rhs.entries() {
            out.add_entry(r, c, x)?;
        }
        Ok(out)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.try_add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_entries(|x| x.neg())
    }

    pub fn scale(&self, q: &Q) -> Self {
        if q.is_zero() {
            return Self { n: self.n, legs: self.legs, rows: vec![BTreeMap::new(); self.dim()] };
        }
        self.map_entries(|x| x.scale(q))
    }

    fn map_entries(&self, f: impl Fn(&C) -> C) -> Self {
        let rows = self.rows.iter().map(|row| row.iter().map(|(c, x)| (*c, f(x))).collect()).collect();
        Self { n: self.n, legs: self.legs, rows }
    }

    /// Operator product `self · rhs`; row blocks are computed in parallel.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_shape(rhs)?;
        let rows = self
            .rows
            .par_iter()
            .map(|row| {
                let mut out = BTreeMap::new();
                for (k, a) in row {
                    for (c, b) in &rhs.rows[*k] {
                        add_into(&mut out, *c, &a.try_mul(b)?)?;
                    }
                }
                Ok(out)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { n: self.n, legs: self.legs, rows })
    }

    /// Product with a rational operator on the right; coefficients are only scaled.
    pub fn mul_numeric(&self, rhs: &TensorOperator) -> Result<Self> {
        if self.n != rhs.n || self.legs != rhs.legs {
            return Err(Error::Dimension("numeric factor has a different shape".into()));
        }
        let rows = self
            .rows
            .par_iter()
            .map(|row| {
                let mut out = BTreeMap::new();
                for (k, a) in row {
                    for (c, b) in &rhs.rows[*k] {
                        add_into(&mut out, *c, &a.scale(b))?;
                    }
                }
                Ok(out)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { n: self.n, legs: self.legs, rows })
    }

    /// Product with a rational operator on the left.
    pub fn numeric_mul(lhs: &TensorOperator, rhs: &Self) -> Result<Self> {
        if lhs.n != rhs.n || lhs.legs != rhs.legs {
            return Err(Error::Dimension("numeric factor has a different shape".into()));
        }
        let rows = lhs
            .rows
            .par_iter()
            .map(|row| {
                let mut out = BTreeMap::new();
                for (k, a) in row {
                    for (c, b) in &rhs.rows[*k] {
                        add_into(&mut out, *c, &b.scale(a))?;
                    }
                }
                Ok(out)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { n: rhs.n, legs: rhs.legs, rows })
    }

    /// Applies the operator to a column vector whose absent entries are zero.
    pub fn apply(&self, v: &BTreeMap<usize, C>) -> Result<BTreeMap<usize, C>> {
        let mut out = BTreeMap::new();
        for (r, row) in self.rows.iter().enumerate() {
            let mut acc: Option<C> = None;
            for (k, a) in row {
                if let Some(b) = v.get(k) {
                    let t = a.try_mul(b)?;
                    match &mut acc {
                        None => acc = Some(t),
                        Some(s) => s.try_add_assign(&t)?,
                    }
                }
            }
            if let Some(s) = acc {
                if !s.vanishes() {
                    out.insert(r, s);
                }
            }
        }
        Ok(out)
    }

    /// Sum of the diagonal, or `None` when every diagonal entry is absent.
    pub fn trace(&self) -> Result<Option<C>> {
        let mut acc: Option<C> = None;
        for (r, row) in self.rows.iter().enumerate() {
            if let Some(x) = row.get(&r) {
                match &mut acc {
                    None => acc = Some(x.clone()),
                    Some(s) => s.try_add_assign(x)?,
                }
            }
        }
        Ok(acc.filter(|s| !s.vanishes()))
    }

    pub fn transpose(&self) -> Self {
        let mut rows = vec![BTreeMap::new(); self.dim()];
        for (r, c, x) in self.entries() {
            rows[c].insert(r, x.clone());
        }
        Self { n: self.n, legs: self.legs, rows }
    }

    /// Places a `k`-leg operator on the given legs (0-based, in order) of a
    /// `legs`-fold tensor power, acting as the identity elsewhere.
    pub fn embed(local: &Self, positions: &[usize], legs: usize) -> Result<Self> {
        if positions.len() != local.legs || positions.iter().any(|&p| p >= legs) {
            return Err(Error::Dimension("leg placement does not match operator".into()));
        }
        let n = local.n;
        let d = checked_dim(n, legs)?;
        let mut rows = vec![BTreeMap::new(); d];
        for col in 0..d {
            let mut idx = decode(n, legs, col);
            let lc = encode(n, &positions.iter().map(|&p| idx[p]).collect::<Vec<_>>());
            // the column of `local` at lc: scan rows (local operators are tiny)
            for (lr, row) in local.rows.iter().enumerate() {
                if let Some(x) = row.get(&lc) {
                    let li = decode(n, local.legs, lr);
                    for (p, v) in positions.iter().zip(li) {
                        idx[*p] = v;
                    }
                    rows[encode(n, &idx)].insert(col, x.clone());
                }
            }
        }
        Ok(Self { n, legs, rows })
    }
}

fn add_into<C: Coefficient>(row: &mut BTreeMap<usize, C>, c: usize, x: &C) -> Result<()> {
    if x.vanishes() {
        return Ok(());
    }
    match row.get_mut(&c) {
        Some(y) => {
            y.try_add_assign(x)?;
            if y.vanishes() {
                row.remove(&c);
            }
        }
        None => {
            row.insert(c, x.clone());
        }
    }
    Ok(())
}

impl TensorOperator {
    pub fn identity(n: usize, legs: usize) -> Result<Self> {
        Self::scalar(n, legs, &Q::one())
    }

    /// The operator moving the tensor factor in slot k to slot `perm[k]`.
    pub fn permutation(n: usize, perm: &[usize]) -> Result<Self> {
        let legs = perm.len();
        let d = checked_dim(n, legs)?;
        let mut rows = vec![BTreeMap::new(); d];
        let mut out = vec![0; legs];
        for col in 0..d {
            let idx = decode(n, legs, col);
            for (k, &p) in perm.iter().enumerate() {
                out[p] = idx[k];
            }
            rows[encode(n, &out)].insert(col, Q::one());
        }
        Ok(Self { n, legs, rows })
    }

    /// The transposition P_{ab} of legs a and b (0-based).
    pub fn transposition(n: usize, legs: usize, a: usize, b: usize) -> Result<Self> {
        let mut perm: Vec<usize> = (0..legs).collect();
        perm.swap(a, b);
        Self::permutation(n, &perm)
    }

    /// The matrix unit e_ij on a single leg, 0-based indices.
    pub fn matrix_unit(n: usize, i: usize, j: usize) -> Self {
        let mut rows = vec![BTreeMap::new(); n];
        rows[i].insert(j, Q::one());
        Self { n, legs: 1, rows }
    }

    /// The diagonal action Σ_l (e_ij)_l on all legs.
    pub fn diagonal_action(n: usize, legs: usize, i: usize, j: usize) -> Result<Self> {
        let d = checked_dim(n, legs)?;
        let mut rows: Vec<BTreeMap<usize, Q>> = vec![BTreeMap::new(); d];
        for col in 0..d {
            let idx = decode(n, legs, col);
            for l in 0..legs {
                if idx[l] == j {
                    let mut t = idx.clone();
                    t[l] = i;
                    add_into(&mut rows[encode(n, &t)], col, &Q::one())?;
                }
            }
        }
        Ok(Self { n, legs, rows })
    }

    /// Tensor product; `self` occupies the leading legs.
    pub fn kron(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::RankMismatch { left: self.n, right: rhs.n });
        }
        let legs = self.legs + rhs.legs;
        let d = checked_dim(self.n, legs)?;
        let w = rhs.dim();
        let mut rows = vec![BTreeMap::new(); d];
        for (r1, c1, a) in self.entries() {
            for (r2, c2, b) in rhs.entries() {
                rows[r1 * w + r2].insert(c1 * w + c2, a * b);
            }
        }
        Ok(Self { n: self.n, legs, rows })
    }

    pub fn to_dense(&self) -> QMatrix {
        let mut m = QMatrix::zeros(self.dim(), self.dim());
        for (r, c, x) in self.entries() {
            m[(r, c)] = x.clone();
        }
        m
    }

    pub fn from_dense(n: usize, legs: usize, m: &QMatrix) -> Result<Self> {
        let d = checked_dim(n, legs)?;
        if m.rows() != d || m.cols() != d {
            return Err(Error::Dimension("dense matrix does not match tensor shape".into()));
        }
        let rows = (0..d)
            .map(|r| m.row(r).iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(c, x)| (c, x.clone())).collect())
            .collect();
        Ok(Self { n, legs, rows })
    }

    pub fn rank(&self) -> usize {
        self.to_dense().rank()
    }

    pub fn is_idempotent(&self) -> Result<bool> {
        Ok(self.try_mul(self)? == *self)
    }

    /// Lifts a rational operator to any coefficient ring via `c ↦ c · one`.
    pub fn lift<C: Coefficient>(&self, one: &C) -> TensorOp<C> {
        let rows = self.rows.iter().map(|row| row.iter().map(|(c, x)| (*c, one.scale(x))).collect()).collect();
        TensorOp { n: self.n, legs: self.legs, rows }
    }
}

/// A factorization `Π = B·C` of a rational operator through its image,
/// with `C·B` the identity on the image.
#[derive(Clone, Debug)]
pub struct ImageFactor {
    /// Columns spanning the image, as sparse vectors.
    pub basis: Vec<BTreeMap<usize, Q>>,
    /// Coordinate functionals, one per basis vector.
    pub coords: Vec<BTreeMap<usize, Q>>,
}

impl ImageFactor {
    /// Uses the pivot columns of `op` as image basis and the nonzero rows of
    /// its reduced echelon form as coordinates, so `op = B·R` exactly.
    pub fn of(op: &TensorOperator) -> Self {
        let dense = op.to_dense();
        let (red, piv) = dense.rref();
        let basis = piv
            .iter()
            .map(|&c| (0..dense.rows()).filter(|&r| !dense[(r, c)].is_zero()).map(|r| (r, dense[(r, c)].clone())).collect())
            .collect();
        let coords = (0..piv.len())
            .map(|r| red.row(r).iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(c, x)| (c, x.clone())).collect())
            .collect();
        Self { basis, coords }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// `tr(X·Π) = Σ_i coords_i · X · basis_i`, evaluated as sparse matrix-vector products.
    pub fn trace_of<C: Coefficient>(&self, factors: &[&TensorOp<C>], one: &C) -> Result<Option<C>> {
        let terms = self
            .basis
            .par_iter()
            .zip(&self.coords)
            .map(|(b, c)| {
                let mut v: BTreeMap<usize, C> = b.iter().map(|(k, x)| (*k, one.scale(x))).collect();
                for f in factors.iter().rev() {
                    v = f.apply(&v)?;
                }
                let mut acc: Option<C> = None;
                for (k, x) in c {
                    if let Some(y) = v.get(k) {
                        let t = y.scale(x);
                        match &mut acc {
                            None => acc = Some(t),
                            Some(s) => s.try_add_assign(&t)?,
                        }
                    }
                }
                Ok(acc)
            })
            .collect::<Result<Vec<_>>>()?;
        let mut total: Option<C> = None;
        for t in terms.into_iter().flatten() {
            match &mut total {
                None => total = Some(t),
                Some(s) => s.try_add_assign(&t)?,
            }
        }
        Ok(total.filter(|s| !s.vanishes()))
    }
}

/// Normalized alternating sum (1/s!) Σ sgn(σ) σ on s legs.
pub fn antisymmetrizer(s: usize, n: usize) -> Result<TensorOperator> {
    group_average(n, &all_permutations(s), true)
}

/// Normalized symmetrizer on s legs.
pub fn symmetrizer(s: usize, n: usize) -> Result<TensorOperator> {
    group_average(n, &all_permutations(s), false)
}

fn group_average(n: usize, perms: &[Vec<usize>], signed: bool) -> Result<TensorOperator> {
    let legs = perms.first().map_or(0, Vec::len);
    let mut out = TensorOperator::zero(n, legs)?;
    let w = Q::new(1.into(), perms.len().into());
    for p in perms {
        let c = if signed && sign(p) < 0 { -w.clone() } else { w.clone() };
        out = out.try_add(&TensorOperator::permutation(n, p)?.scale(&c))?;
    }
    Ok(out)
}

/// All permutations of 0..s in lexicographic order.
pub fn all_permutations(s: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..s).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

pub fn sign(p: &[usize]) -> i32 {
    let mut seen = vec![false; p.len()];
    let mut s = 1;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            k = p[k];
            len += 1;
        }
        if len % 2 == 0 {
            s = -s;
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn encoding_roundtrip() {
        for x in 0..27 {
            assert_eq!(encode(3, &decode(3, 3, x)), x);
        }
        assert_eq!(decode(2, 3, 4), vec![1, 0, 0]);
    }

    #[test]
    fn antisymmetrizer_ranks() {
        assert_eq!(antisymmetrizer(2, 2).unwrap().rank(), 1);
        assert!(antisymmetrizer(3, 2).unwrap().is_zero());
        assert_eq!(antisymmetrizer(1, 3).unwrap(), TensorOperator::identity(3, 1).unwrap());
        assert_eq!(antisymmetrizer(2, 3).unwrap().rank(), 3);
        assert!(antisymmetrizer(3, 3).unwrap().is_idempotent().unwrap());
    }

    #[test]
    fn embed_matches_kron() {
        let e = TensorOperator::matrix_unit(2, 0, 1);
        let id = TensorOperator::identity(2, 1).unwrap();
        let placed = TensorOperator::embed(&e, &[1], 2).unwrap();
        assert_eq!(placed, id.kron(&e).unwrap());
        let flip = TensorOperator::transposition(2, 2, 0, 1).unwrap();
        let a = TensorOperator::embed(&flip, &[2, 0], 3).unwrap();
        assert_eq!(a, TensorOperator::transposition(2, 3, 0, 2).unwrap());
    }

    #[test]
    fn permutation_is_homomorphism() {
        let perms = all_permutations(3);
        assert_eq!(perms.len(), 6);
        for a in &perms {
            for b in &perms {
                // moving by b then by a equals moving by a∘b
                let ab: Vec<usize> = (0..3).map(|k| a[b[k]]).collect();
                let lhs = TensorOperator::permutation(2, a).unwrap().try_mul(&TensorOperator::permutation(2, b).unwrap()).unwrap();
                assert_eq!(lhs, TensorOperator::permutation(2, &ab).unwrap());
            }
        }
    }

    #[test]
    fn image_factor_trace() {
        let p = symmetrizer(2, 2).unwrap();
        let f = ImageFactor::of(&p);
        assert_eq!(f.rank(), 3);
        let id = TensorOperator::identity(2, 2).unwrap();
        assert_eq!(f.trace_of(&[&id], &q(1)).unwrap(), Some(q(3)));
        let flip = TensorOperator::transposition(2, 2, 0, 1).unwrap();
        assert_eq!(f.trace_of(&[&flip], &q(1)).unwrap(), Some(q(3)));
    }
}
