//! Highest-weight modules realized inside polynomials in Plücker variables.
//!
//! V_μ sits in ⊗_k Sym^{μ_k − μ_{k+1}}(Λ^k C^n) ⊗ det^{μ_n} as the submodule
//! generated by ∏_k x_{12…k}^{μ_k − μ_{k+1}}. The generators act as
//! derivations on the variables x_S, S ⊂ {1, …, n}, 0 < |S| < n. Used for
//! sampling weights whose Young-symmetrizer model would be too large.

use std::collections::{BTreeMap, VecDeque};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::irreps::{weyl_dimension, DominantWeight, Representation};
use crate::qmatrix::QMatrix;
use crate::rational::{q, Q};

type Mono = Vec<u32>;
type PolyVec = BTreeMap<Mono, Q>;

struct Plucker {
    n: usize,
    subsets: Vec<Vec<usize>>,
    index: BTreeMap<Vec<usize>, usize>,
}

impl Plucker {
    fn new(n: usize) -> Self {
        let mut subsets: Vec<Vec<usize>> = (1u32..(1 << n) - 1)
            .map(|mask| (0..n).filter(|&b| mask & (1 << b) != 0).collect())
            .collect();
        subsets.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        let index = subsets.iter().enumerate().map(|(k, s)| (s.clone(), k)).collect();
        Self { n, subsets, index }
    }

    /// E_ij x_S as (sign, variable), 0-based indices.
    fn act_var(&self, i: usize, j: usize, v: usize) -> Option<(i64, usize)> {
        let s = &self.subsets[v];
        if !s.contains(&j) {
            return None;
        }
        if i == j {
            return Some((1, v));
        }
        if s.contains(&i) {
            return None;
        }
        let (lo, hi) = (i.min(j), i.max(j));
        let between = s.iter().filter(|&&x| x > lo && x < hi).count();
        let mut t: Vec<usize> = s.iter().map(|&x| if x == j { i } else { x }).collect();
        t.sort_unstable();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        Some((sign, self.index[&t]))
    }

    fn act(&self, i: usize, j: usize, p: &PolyVec) -> PolyVec {
        let mut out = PolyVec::new();
        for (m, c) in p {
            for (v, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let Some((sign, w)) = self.act_var(i, j, v) else { continue };
                let mut m2 = m.clone();
                m2[v] -= 1;
                m2[w] += 1;
                let x = c * q(sign * e as i64);
                let entry = out.entry(m2).or_insert_with(Q::zero);
                *entry += x;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    fn weight(&self, m: &Mono) -> Vec<i64> {
        let mut w = vec![0i64; self.n];
        for (v, &e) in m.iter().enumerate() {
            for &k in &self.subsets[v] {
                w[k] += e as i64;
            }
        }
        w
    }
}

/// Echelon basis over sparse vectors keyed by monomials.
#[derive(Default)]
struct SparseSpan {
    rows: Vec<(PolyVec, Mono, Vec<Q>)>,
    inserted: usize,
}

impl SparseSpan {
    fn reduce(&self, v: &PolyVec) -> (PolyVec, Vec<Q>) {
        let mut red = v.clone();
        let mut f = vec![Q::zero(); self.rows.len()];
        for (k, (b, p, _)) in self.rows.iter().enumerate() {
            let Some(c) = red.get(p).cloned() else { continue };
            for (m, y) in b {
                let e = red.entry(m.clone()).or_insert_with(Q::zero);
                *e -= &c * y;
                if e.is_zero() {
                    red.remove(m);
                }
            }
            f[k] = c;
        }
        (red, f)
    }

    fn insert(&mut self, v: &PolyVec) -> bool {
        let (red, f) = self.reduce(v);
        let Some((p, lead)) = red.iter().next().map(|(m, c)| (m.clone(), c.clone())) else { return false };
        let mut combo = vec![Q::zero(); self.inserted + 1];
        combo[self.inserted] = Q::one();
        for (fk, (_, _, ck)) in f.iter().zip(&self.rows) {
            for (x, y) in combo.iter_mut().zip(ck) {
                *x -= fk * y;
            }
        }
        let inv = Q::one() / lead;
        let red = red.into_iter().map(|(m, c)| (m, c * &inv)).collect();
        combo.iter_mut().for_each(|x| *x *= &inv);
        self.rows.push((red, p, combo));
        self.inserted += 1;
        true
    }

    fn coordinates(&self, v: &PolyVec) -> Option<Vec<Q>> {
        let (red, f) = self.reduce(v);
        if !red.is_empty() {
            return None;
        }
        let mut out = vec![Q::zero(); self.inserted];
        for (fk, (_, _, ck)) in f.iter().zip(&self.rows) {
            for (x, y) in out.iter_mut().zip(ck) {
                *x += fk * y;
            }
        }
        Some(out)
    }
}

/// The irreducible module of highest weight μ, any integer dominant μ,
/// basis ordered by descending weight.
pub fn highest_weight_module(mu: &DominantWeight) -> Result<Representation> {
    let n = mu.n();
    let comps = mu.components();
    let twist = comps[n - 1];
    let pl = Plucker::new(n);
    let mut hw: Mono = vec![0; pl.subsets.len()];
    for k in 1..n {
        hw[pl.index[&(0..k).collect::<Vec<_>>()]] = (comps[k - 1] - comps[k]) as u32;
    }
    let target = weyl_dimension(mu);

    // breadth-first closure under the simple lowering operators
    let mut spaces: BTreeMap<Vec<i64>, (SparseSpan, Vec<usize>)> = BTreeMap::new();
    let mut vectors: Vec<(Vec<i64>, PolyVec)> = Vec::new();
    let mut queue = VecDeque::new();
    let start: PolyVec = [(hw.clone(), Q::one())].into_iter().collect();
    let w0 = pl.weight(&hw);
    let mut sp = SparseSpan::default();
    sp.insert(&start);
    spaces.insert(w0.clone(), (sp, vec![0]));
    vectors.push((w0, start));
    queue.push_back(0);
    while let Some(k) = queue.pop_front() {
        for i in 0..n - 1 {
            let img = pl.act(i + 1, i, &vectors[k].1);
            if img.is_empty() {
                continue;
            }
            let w = pl.weight(img.keys().next().expect("nonempty"));
            let entry = spaces.entry(w.clone()).or_default();
            if entry.0.insert(&img) {
                entry.1.push(vectors.len());
                queue.push_back(vectors.len());
                vectors.push((w, img));
            }
        }
        if vectors.len() > target {
            return Err(Error::Degenerate(format!("lowering closure exceeds the Weyl dimension {target}")));
        }
    }
    if vectors.len() != target {
        return Err(Error::Degenerate(format!("lowering closure has dimension {}, expected {target}", vectors.len())));
    }

    // final order: weight descending, insertion order within a weight
    let mut order: Vec<usize> = (0..target).collect();
    order.sort_by(|&a, &b| vectors[b].0.cmp(&vectors[a].0).then(a.cmp(&b)));
    let mut position = vec![0; target];
    for (p, &k) in order.iter().enumerate() {
        position[k] = p;
    }

    let mut matrices = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut m = QMatrix::zeros(target, target);
            for (col, &k) in order.iter().enumerate() {
                let img = pl.act(i, j, &vectors[k].1);
                if img.is_empty() {
                    continue;
                }
                let w = pl.weight(img.keys().next().expect("nonempty"));
                let (span, members) = spaces
                    .get(&w)
                    .ok_or_else(|| Error::Degenerate("generator leaves the module".into()))?;
                let coords = span.coordinates(&img).ok_or_else(|| Error::Degenerate("generator leaves the module".into()))?;
                for (c, &member) in coords.iter().zip(members) {
                    if !c.is_zero() {
                        m[(position[member], col)] = c.clone();
                    }
                }
            }
            if i == j && twist != 0 {
                m = m.add(&QMatrix::identity(target).scale(&q(twist)));
            }
            matrices.push(m);
        }
    }
    let weights = order
        .iter()
        .map(|&k| vectors[k].0.iter().map(|x| x + twist).collect())
        .collect();
    Representation::from_matrices(mu.clone(), matrices, weights)
}
