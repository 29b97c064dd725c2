//! Irreducible rational representations of gl_n with exact matrices.
//!
//! Two constructions: the closed tridiagonal form for gl_2 and, for any n,
//! restriction of the diagonal action on a tensor power to the image of a
//! Young symmetrizer.

mod hw;

pub use hw::highest_weight_module;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pbw::UeaElement;
use crate::qmatrix::{QMatrix, Span};
use crate::rational::{fmt_q, parse_q, q, Q};
use crate::tensor::{all_permutations, decode, sign, TensorOperator};

/// A weight λ₁ ≥ … ≥ λ_n with integer components.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct DominantWeight(Vec<i64>);

impl TryFrom<Vec<i64>> for DominantWeight {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<DominantWeight> for Vec<i64> {
    fn from(w: DominantWeight) -> Self {
        w.0
    }
}

impl DominantWeight {
    pub fn new(components: Vec<i64>) -> Result<Self> {
        if components.is_empty() || components.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDominant(components));
        }
        Ok(Self(components))
    }

    /// Parses comma-separated integers and checks the length against `n`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let comps = text
            .split(',')
            .map(|s| s.trim().parse::<i64>().map_err(|e| Error::Invalid(format!("weight component {s:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        if comps.len() != n {
            return Err(Error::WeightLength { got: comps.len(), expected: n });
        }
        Self::new(comps)
    }

    /// The vector-representation weight (1, 0, …, 0).
    pub fn vector(n: usize) -> Self {
        let mut v = vec![0; n];
        v[0] = 1;
        Self(v)
    }

    pub fn components(&self) -> &[i64] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// λ₁ − λ_n.
    pub fn m(&self) -> i64 {
        self.0[0] - self.0[self.0.len() - 1]
    }

    /// Σ λ_i.
    pub fn d(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_partition(&self) -> bool {
        *self.0.last().expect("nonempty") >= 0
    }

    /// Size of the partition, i.e. the number of tensor legs.
    pub fn size(&self) -> usize {
        assert!(self.is_partition(), "size of a weight with negative parts");
        self.d() as usize
    }

    /// Nonzero rows of the Young diagram.
    pub fn rows(&self) -> Vec<usize> {
        self.0.iter().filter(|&&x| x > 0).map(|&x| x as usize).collect()
    }

    /// Shifts every component by `k` (a twist by the k-th power of the determinant).
    pub fn shifted(&self, k: i64) -> Self {
        Self(self.0.iter().map(|x| x + k).collect())
    }

    /// The weight of the dual representation, (−λ_n, …, −λ₁).
    pub fn dual(&self) -> Self {
        Self(self.0.iter().rev().map(|x| -x).collect())
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Contents (column − row) of the row-filled standard tableau, in filling order.
pub fn contents(lambda: &DominantWeight) -> Vec<i64> {
    lambda
        .rows()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as i64).map(move |c| c - r as i64))
        .collect()
}

/// Weyl dimension ∏_{i<j} (λ_i − λ_j + j − i)/(j − i).
pub fn weyl_dimension(lambda: &DominantWeight) -> usize {
    let l = lambda.components();
    let mut num = Q::one();
    for i in 0..l.len() {
        for j in i + 1..l.len() {
            num *= Q::new((l[i] - l[j] + (j - i) as i64).into(), ((j - i) as i64).into());
        }
    }
    assert!(num.is_integer(), "Weyl dimension must be an integer");
    num.to_integer().try_into().expect("dimension fits in usize")
}

pub use crate::tensor::antisymmetrizer;

/// Which product of the row and column group sums forms the symmetrizer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymmetrizerOrder {
    /// Column antisymmetrizer applied after the row symmetrizer (operator C·R).
    ColumnsAfterRows,
    /// Row symmetrizer applied after the column antisymmetrizer (operator R·C).
    RowsAfterColumns,
}

/// The order used throughout the crate; the fusion identity with the
/// row-reading contents holds for it.
pub const SYMMETRIZER_ORDER: SymmetrizerOrder = SymmetrizerOrder::RowsAfterColumns;

/// Idempotent Young symmetrizer F_λ on |λ| legs of C^n.
pub fn young_symmetrizer(lambda: &DominantWeight, n: usize) -> Result<TensorOperator> {
    young_symmetrizer_ordered(lambda, n, SYMMETRIZER_ORDER)
}

pub fn young_symmetrizer_ordered(lambda: &DominantWeight, n: usize, order: SymmetrizerOrder) -> Result<TensorOperator> {
    if !lambda.is_partition() || lambda.d() == 0 {
        return Err(Error::Invalid(format!("Young symmetrizer needs a nonempty partition, got {lambda}")));
    }
    let rows = lambda.rows();
    let m = lambda.size();
    // cell (r, c) holds leg number start(r) + c
    let starts: Vec<usize> = rows.iter().scan(0, |acc, &len| {
        let s = *acc;
        *acc += len;
        Some(s)
    }).collect();
    let row_blocks: Vec<Vec<usize>> = rows.iter().zip(&starts).map(|(&len, &s)| (s..s + len).collect()).collect();
    let col_blocks: Vec<Vec<usize>> = (0..rows[0])
        .map(|c| rows.iter().zip(&starts).filter(|(&len, _)| c < len).map(|(_, &s)| s + c).collect())
        .collect();
    let row_sum = block_group_sum(n, m, &row_blocks, false)?;
    let col_sum = block_group_sum(n, m, &col_blocks, true)?;
    let raw = match order {
        SymmetrizerOrder::ColumnsAfterRows => col_sum.try_mul(&row_sum)?,
        SymmetrizerOrder::RowsAfterColumns => row_sum.try_mul(&col_sum)?,
    };
    // raw² = h·raw with h the hook-length product; read h off any nonzero entry
    let sq = raw.try_mul(&raw)?;
    let (r, c, x) = raw.entries().next().ok_or_else(|| Error::Degenerate("zero symmetrizer".into()))?;
    let h = sq.get(r, c).cloned().unwrap_or_else(Q::zero) / x;
    if h.is_zero() {
        return Err(Error::Degenerate("nilpotent symmetrizer".into()));
    }
    Ok(raw.scale(&(Q::one() / h)))
}

/// Σ over the product of symmetric groups on disjoint leg blocks, optionally signed.
fn block_group_sum(n: usize, legs: usize, blocks: &[Vec<usize>], signed: bool) -> Result<TensorOperator> {
    let mut elems: Vec<(Vec<usize>, i32)> = vec![((0..legs).collect(), 1)];
    for block in blocks {
        let mut next = Vec::new();
        for (base, s) in &elems {
            for p in all_permutations(block.len()) {
                let mut g = base.clone();
                for (k, &leg) in block.iter().enumerate() {
                    g[leg] = block[p[k]];
                }
                next.push((g, s * sign(&p)));
            }
        }
        elems = next;
    }
    let mut out = TensorOperator::zero(n, legs)?;
    for (g, s) in elems {
        let c = if signed && s < 0 { q(-1) } else { q(1) };
        out = out.try_add(&TensorOperator::permutation(n, &g)?.scale(&c))?;
    }
    Ok(out)
}

/// How a representation built from tensors sits inside its tensor power.
#[derive(Clone, Debug)]
pub struct TensorModel {
    pub legs: usize,
    /// The Young symmetrizer whose image is the module.
    pub projector: TensorOperator,
    /// Basis vectors, dense in the tensor basis.
    pub vectors: Vec<Vec<Q>>,
    span: Span,
    /// Scalar added to every diagonal generator (determinant twist).
    pub twist: i64,
}

impl TensorModel {
    /// Coordinates of a tensor lying in the module.
    pub fn coordinates(&self, v: &[Q]) -> Option<Vec<Q>> {
        self.span.coordinates(v)
    }
}

/// Exact matrices π_λ(E_ij) in a fixed basis.
#[derive(Clone, Debug)]
pub struct Representation {
    weight: DominantWeight,
    dim: usize,
    /// π(E_ij) at index (i−1)·n + (j−1).
    matrices: Vec<QMatrix>,
    basis_weights: Vec<Vec<i64>>,
    model: Option<TensorModel>,
}

impl Representation {
    /// Wraps explicit matrices; brackets are not checked here.
    pub fn from_matrices(weight: DominantWeight, matrices: Vec<QMatrix>, basis_weights: Vec<Vec<i64>>) -> Result<Self> {
        let n = weight.n();
        if matrices.len() != n * n {
            return Err(Error::Dimension(format!("expected {} matrices, got {}", n * n, matrices.len())));
        }
        let dim = matrices[0].rows();
        if matrices.iter().any(|m| m.rows() != dim || m.cols() != dim) || basis_weights.len() != dim {
            return Err(Error::Dimension("representation matrices of inconsistent size".into()));
        }
        Ok(Self { weight, dim, matrices, basis_weights, model: None })
    }

    pub fn weight(&self) -> &DominantWeight {
        &self.weight
    }

    pub fn n(&self) -> usize {
        self.weight.n()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// π(E_ij), indices 1-based.
    pub fn pi(&self, i: usize, j: usize) -> &QMatrix {
        &self.matrices[(i - 1) * self.n() + (j - 1)]
    }

    pub fn basis_weights(&self) -> &[Vec<i64>] {
        &self.basis_weights
    }

    pub fn model(&self) -> Option<&TensorModel> {
        self.model.as_ref()
    }

    /// Every bracket [π(E_ij), π(E_kl)] = δ_jk π(E_il) − δ_li π(E_kj).
    pub fn bracket_violation(&self) -> Option<(usize, usize, usize, usize)> {
        let n = self.n();
        for i in 1..=n {
            for j in 1..=n {
                for k in 1..=n {
                    for l in 1..=n {
                        let lhs = self.pi(i, j).commutator(self.pi(k, l));
                        let mut rhs = QMatrix::zeros(self.dim, self.dim);
                        if j == k {
                            rhs = rhs.add(self.pi(i, l));
                        }
                        if l == i {
                            rhs = rhs.sub(self.pi(k, j));
                        }
                        if lhs != rhs {
                            return Some((i, j, k, l));
                        }
                    }
                }
            }
        }
        None
    }

    pub fn satisfies_brackets(&self) -> bool {
        self.bracket_violation().is_none()
    }

    /// The matrix by which an element of U(gl_n) acts.
    pub fn act(&self, x: &UeaElement) -> Result<QMatrix> {
        if x.n() != self.n() {
            return Err(Error::RankMismatch { left: x.n(), right: self.n() });
        }
        let mut out = QMatrix::zeros(self.dim, self.dim);
        for (mono, c) in x.terms() {
            let mut m = QMatrix::identity(self.dim);
            for (g, e) in mono.factors() {
                for _ in 0..e {
                    m = m.mul(self.pi(g.i, g.j));
                }
            }
            out = out.add(&m.scale(c));
        }
        Ok(out)
    }

    pub fn to_json(&self) -> RepJson {
        let n = self.n();
        let mut matrices = BTreeMap::new();
        for i in 1..=n {
            for j in 1..=n {
                let rows = self.pi(i, j).to_rows().iter().map(|r| r.iter().map(fmt_q).collect()).collect();
                matrices.insert(format!("E[{i},{j}]"), rows);
            }
        }
        RepJson {
            n,
            lambda: self.weight.components().to_vec(),
            dim: self.dim,
            matrices,
            basis_weights: self.basis_weights.clone(),
        }
    }

    pub fn from_json(j: &RepJson) -> Result<Self> {
        let weight = DominantWeight::new(j.lambda.clone())?;
        if weight.n() != j.n {
            return Err(Error::WeightLength { got: weight.n(), expected: j.n });
        }
        let mut matrices = Vec::with_capacity(j.n * j.n);
        for i in 1..=j.n {
            for k in 1..=j.n {
                let key = format!("E[{i},{k}]");
                let rows = j.matrices.get(&key).ok_or_else(|| Error::Invalid(format!("missing matrix {key}")))?;
                let rows = rows.iter().map(|r| r.iter().map(|s| parse_q(s)).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?;
                matrices.push(if j.dim == 0 { QMatrix::zeros(0, 0) } else { QMatrix::from_rows(rows)? });
            }
        }
        Self::from_matrices(weight, matrices, j.basis_weights.clone())
    }
}

/// Serialized form of a representation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RepJson {
    pub n: usize,
    pub lambda: Vec<i64>,
    pub dim: usize,
    pub matrices: BTreeMap<String, Vec<Vec<String>>>,
    pub basis_weights: Vec<Vec<i64>>,
}

/// The gl_2 module of highest weight λ in the basis v_1, …, v_{m+1} of
/// descending weight, with the tridiagonal normalization
/// π(E₁₂)v_{k+1} = (m+1−k)v_k and π(E₂₁)v_k = k·v_{k+1}.
pub fn gl2_rep(lambda: &DominantWeight) -> Result<Representation> {
    if lambda.n() != 2 {
        return Err(Error::WeightLength { got: lambda.n(), expected: 2 });
    }
    let (l1, l2) = (lambda.components()[0], lambda.components()[1]);
    let m = lambda.m() as usize;
    let dim = m + 1;
    let mut e11 = QMatrix::zeros(dim, dim);
    let mut e22 = QMatrix::zeros(dim, dim);
    let mut e12 = QMatrix::zeros(dim, dim);
    let mut e21 = QMatrix::zeros(dim, dim);
    let mut weights = Vec::with_capacity(dim);
    for k in 1..=dim {
        let (w1, w2) = (l1 - k as i64 + 1, l2 + k as i64 - 1);
        e11[(k - 1, k - 1)] = q(w1);
        e22[(k - 1, k - 1)] = q(w2);
        weights.push(vec![w1, w2]);
        if k < dim {
            e12[(k - 1, k)] = q((m + 1 - k) as i64);
            e21[(k, k - 1)] = q(k as i64);
        }
    }
    Representation::from_matrices(lambda.clone(), vec![e11, e12, e21, e22], weights)
}

/// π_{λ*}(E_ij) = −π_λ(E_ji).
pub fn dual_star(rep: &Representation) -> Representation {
    let n = rep.n();
    let mut matrices = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in 1..=n {
            matrices.push(rep.pi(j, i).scale(&q(-1)));
        }
    }
    let weights = rep.basis_weights.iter().map(|w| w.iter().map(|x| -x).collect()).collect();
    Representation { weight: rep.weight.dual(), dim: rep.dim, matrices, basis_weights: weights, model: None }
}

/// Builds π_λ by restricting the diagonal action on (C^n)^{⊗|λ|} to the
/// image of F_λ. Weights with λ_n < 0 are reduced to partitions by a
/// determinant twist.
pub fn build_rep(lambda: &DominantWeight, n: usize) -> Result<Representation> {
    if lambda.n() != n {
        return Err(Error::WeightLength { got: lambda.n(), expected: n });
    }
    if n < 2 {
        return Err(Error::Invalid("rank must be at least 2".into()));
    }
    let twist = (*lambda.components().last().expect("nonempty")).min(0);
    let partition = lambda.shifted(-twist);
    let legs = partition.size();
    let mut rep = if legs == 0 { trivial(n) } else { restrict_to_image(&partition, n)? };
    if twist != 0 {
        for i in 1..=n {
            let k = (i - 1) * n + (i - 1);
            rep.matrices[k] = rep.matrices[k].add(&QMatrix::identity(rep.dim).scale(&q(twist)));
        }
        for w in &mut rep.basis_weights {
            w.iter_mut().for_each(|x| *x += twist);
        }
        if let Some(m) = rep.model.as_mut() {
            m.twist = twist;
        }
    }
    rep.weight = lambda.clone();
    Ok(rep)
}

fn trivial(n: usize) -> Representation {
    Representation {
        weight: DominantWeight(vec![0; n]),
        dim: 1,
        matrices: vec![QMatrix::zeros(1, 1); n * n],
        basis_weights: vec![vec![0; n]],
        model: None,
    }
}

fn restrict_to_image(partition: &DominantWeight, n: usize) -> Result<Representation> {
    let legs = partition.size();
    let f = young_symmetrizer(partition, n)?;
    let ft = f.transpose();
    let total = f.dim();
    let target = weyl_dimension(partition);

    // tensor basis indices grouped by weight, heaviest first, then lexicographic
    let mut indices: Vec<(Vec<i64>, usize)> = (0..total)
        .map(|x| {
            let mut w = vec![0i64; n];
            for i in decode(n, legs, x) {
                w[i] += 1;
            }
            (w, x)
        })
        .collect();
    indices.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

    let mut span = Span::new();
    let mut vectors = Vec::new();
    let mut weights = Vec::new();
    for (w, x) in indices {
        if vectors.len() == target {
            break;
        }
        let mut v = vec![Q::zero(); total];
        for (r, c) in ft.row(x) {
            v[*r] = c.clone();
        }
        if span.insert(&v) {
            vectors.push(v);
            weights.push(w);
        }
    }
    if vectors.len() != target {
        return Err(Error::Degenerate(format!("image of F has dimension {} but Weyl dimension is {target}", vectors.len())));
    }

    let mut matrices = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let act = TensorOperator::diagonal_action(n, legs, i, j)?;
            let mut m = QMatrix::zeros(target, target);
            for (s, v) in vectors.iter().enumerate() {
                let sparse: BTreeMap<usize, Q> = v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(k, x)| (k, x.clone())).collect();
                let image = act.apply(&sparse)?;
                let mut dense = vec![Q::zero(); total];
                for (k, x) in image {
                    dense[k] = x;
                }
                let coords = span
                    .coordinates(&dense)
                    .ok_or_else(|| Error::Degenerate("image of F is not stable under gl_n".into()))?;
                for (r, c) in coords.into_iter().enumerate() {
                    m[(r, s)] = c;
                }
            }
            matrices.push(m);
        }
    }
    Ok(Representation {
        weight: partition.clone(),
        dim: target,
        matrices,
        basis_weights: weights,
        model: Some(TensorModel { legs, projector: f, vectors, span, twist: 0 }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> DominantWeight {
        DominantWeight::new(v.to_vec()).unwrap()
    }

    #[test]
    fn contents_and_dimensions() {
        assert_eq!(contents(&w(&[2, 1, 0])), vec![0, 1, -1]);
        assert_eq!(contents(&w(&[3, 0])), vec![0, 1, 2]);
        assert_eq!(weyl_dimension(&w(&[2, 1, 0])), 8);
        assert_eq!(weyl_dimension(&w(&[3, 1])), 3);
        assert!(DominantWeight::new(vec![0, 1]).is_err());
    }

    #[test]
    fn symmetrizer_ranks() {
        assert_eq!(young_symmetrizer(&w(&[2, 0]), 2).unwrap().rank(), 3);
        assert_eq!(young_symmetrizer(&w(&[1, 1]), 2).unwrap().rank(), 1);
        let f = young_symmetrizer(&w(&[2, 1, 0]), 3).unwrap();
        assert!(f.is_idempotent().unwrap());
        assert_eq!(f.rank(), 8);
    }

    #[test]
    fn built_representations() {
        let v = build_rep(&w(&[1, 0, 0]), 3).unwrap();
        for i in 1..=3 {
            for j in 1..=3 {
                assert_eq!(*v.pi(i, j), QMatrix::unit(3, i - 1, j - 1));
            }
        }
        let det = build_rep(&w(&[1, 1]), 2).unwrap();
        assert_eq!(det.dim(), 1);
        assert_eq!(*det.pi(1, 1), QMatrix::identity(1));
        assert!(det.pi(1, 2).is_zero());
        let sym = build_rep(&w(&[2, 0]), 2).unwrap();
        assert_eq!(*sym.pi(1, 1), QMatrix::diagonal(&[q(2), q(1), q(0)]));
        for lam in [&[2, 1, 0][..], &[1, 1, 0], &[1, 0, -1], &[0, -1, -1]] {
            let r = build_rep(&w(lam), 3).unwrap();
            assert!(r.satisfies_brackets(), "{lam:?}");
            assert_eq!(r.dim(), weyl_dimension(&w(lam)));
        }
    }

    #[test]
    fn gl2_closed_form_and_dual() {
        for m in 0..5 {
            let r = gl2_rep(&w(&[m, -1])).unwrap();
            assert!(r.satisfies_brackets());
            assert!(dual_star(&r).satisfies_brackets());
        }
        let d = dual_star(&build_rep(&w(&[1, 1]), 2).unwrap());
        assert_eq!(*d.pi(1, 1), QMatrix::identity(1).scale(&q(-1)));
    }

    #[test]
    fn rep_json_roundtrip() {
        let r = gl2_rep(&w(&[2, 0])).unwrap();
        let j = r.to_json();
        let s = serde_json::to_string(&j).unwrap();
        let back = Representation::from_json(&serde_json::from_str(&s).unwrap()).unwrap();
        assert_eq!(back.to_json(), j);
    }
}
