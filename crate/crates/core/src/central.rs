//! Central polynomials built from the braided Casimir element: the shifted
//! determinant D_λ(u), the characteristic polynomial P_λ(u) recovered at the
//! Harish-Chandra level, and the gl_2 closed forms.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::irreps::{build_rep, gl2_rep, highest_weight_module, DominantWeight, Representation};
use crate::ncla::{column_det, u_const, u_pow, upoly_to_json, UPoly, UeaMatrix};
use crate::pbw::{UeaElement, UeaJson};
use crate::poly::{MultiPoly, WeightPolynomial};
use crate::qmatrix::{minimal_poly, QMatrix};
use crate::rational::{q, qf, Q};
use crate::ring::{Coefficient, Poly, QPoly};

/// Ω_λ with entry (r, s) = Σ_ij [π_λ(E_ji)]_{rs} E_ij.
pub fn braided_casimir(rep: &Representation) -> UeaMatrix {
    let n = rep.n();
    let dim = rep.dim();
    UeaMatrix::from_fn(n, dim, |r, s| {
        let mut x = UeaElement::zero(n);
        for i in 1..=n {
            for j in 1..=n {
                let c = &rep.pi(j, i)[(r, s)];
                if !c.is_zero() {
                    x = x.add(&UeaElement::e(n, i, j).scale(c));
                }
            }
        }
        u_const(x)
    })
}

/// The diagonal shift L = diag(m, m−1, …, 0) with m + 1 = dim V_λ.
pub fn shift_l(dim: usize) -> Vec<Q> {
    (0..dim).rev().map(|k| q(k as i64)).collect()
}

/// Ω_λ(u) − L.
pub fn shifted_matrix(rep: &Representation) -> Result<UeaMatrix> {
    braided_casimir(rep).add_diagonal(&u_pow(rep.n(), 1))?.sub_diagonal(&shift_l(rep.dim()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PolyKind {
    ShiftedDeterminant,
    Characteristic,
    Capelli,
}

/// A polynomial in u over U(gl_n) with a per-coefficient centrality record.
#[derive(Clone, Debug, PartialEq)]
pub struct CentralPolynomial {
    pub poly: UPoly,
    pub weight: DominantWeight,
    pub kind: PolyKind,
    /// (degree in u, coefficient commutes with every generator)
    pub centrality: Vec<(u32, bool)>,
}

impl CentralPolynomial {
    pub fn new(poly: UPoly, weight: DominantWeight, kind: PolyKind) -> Result<Self> {
        let centrality = poly
            .iter()
            .collect::<Vec<_>>()
            .par_iter()
            .map(|(d, c)| Ok((*d, c.is_central()?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { poly, weight, kind, centrality })
    }

    pub fn all_central(&self) -> bool {
        self.centrality.iter().all(|(_, c)| *c)
    }

    /// χ applied coefficientwise; non-central coefficients are refused.
    pub fn hc_image(&self) -> Result<HcImagePoly> {
        if !self.all_central() {
            return Err(Error::NotCentral);
        }
        let n = self.weight.n();
        let mut coeffs = BTreeMap::new();
        for (d, c) in self.poly.iter() {
            coeffs.insert(d, c.highest_weight_functional());
        }
        Ok(HcImagePoly::from_map(n, coeffs))
    }

    pub fn to_json(&self) -> CentralPolynomialJson {
        CentralPolynomialJson {
            lambda: self.weight.components().to_vec(),
            kind: self.kind,
            poly: upoly_to_json(&self.poly),
            centrality_report: self.centrality.iter().map(|(d, c)| (d.to_string(), *c)).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CentralPolynomialJson {
    pub lambda: Vec<i64>,
    pub kind: PolyKind,
    pub poly: BTreeMap<String, UeaJson>,
    pub centrality_report: BTreeMap<String, bool>,
}

/// D_λ(u) = det(Ω_λ(u) − L) in the basis of `rep`, which must list
/// weights in descending order.
pub fn shifted_determinant(rep: &Representation) -> Result<CentralPolynomial> {
    let w = rep.basis_weights();
    if w.windows(2).any(|p| p[0] < p[1]) {
        return Err(Error::Dimension("basis weights are not in descending order".into()));
    }
    shifted_determinant_any_basis(rep)
}

/// As [`shifted_determinant`] without the basis-order check.
pub fn shifted_determinant_any_basis(rep: &Representation) -> Result<CentralPolynomial> {
    let d = column_det(&shifted_matrix(rep)?)?;
    CentralPolynomial::new(d, rep.weight().clone(), PolyKind::ShiftedDeterminant)
}

/// Polynomial in u whose coefficients are polynomials in μ₁, …, μ_n.
#[derive(Clone, Debug, PartialEq)]
pub struct HcImagePoly {
    n: usize,
    poly: Poly<MultiPoly>,
}

impl HcImagePoly {
    pub fn zero(n: usize) -> Self {
        Self { n, poly: Poly::zero() }
    }

    pub fn from_map(n: usize, coeffs: BTreeMap<u32, WeightPolynomial>) -> Self {
        let mut poly = Poly::zero();
        for (d, c) in coeffs {
            poly.add_term(d, &c).expect("multivariate addition is infallible");
        }
        Self { n, poly }
    }

    /// Product of the linear factors `s·u + ℓ_k(μ)`.
    pub fn product_of_linear(n: usize, u_coeff: &Q, forms: &[WeightPolynomial]) -> Self {
        let mut acc = Poly::constant(MultiPoly::constant(n, Q::one()));
        for f in forms {
            let mut factor = Poly::monomial(1, MultiPoly::constant(n, u_coeff.clone()));
            factor.add_term(0, f).expect("infallible");
            acc = acc.try_mul(&factor).expect("infallible");
        }
        Self { n, poly: acc }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> Option<u32> {
        self.poly.degree()
    }

    pub fn coeff(&self, d: u32) -> WeightPolynomial {
        self.poly.coeff(d).cloned().unwrap_or_else(|| MultiPoly::zero(self.n))
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &WeightPolynomial)> {
        self.poly.iter()
    }

    /// Substitutes u → −u.
    pub fn negate_u(&self) -> Self {
        Self { n: self.n, poly: self.poly.substitute_affine(&q(-1), &Q::zero()).expect("infallible") }
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self { n: self.n, poly: self.poly.scale(c) }
    }

    /// The rational polynomial in u obtained at a numeric weight.
    pub fn eval(&self, mu: &[Q]) -> QPoly {
        QPoly::from_terms(self.poly.iter().map(|(d, c)| (d, c.eval(mu)))).expect("infallible")
    }

    /// As a polynomial in (u, μ₁, …, μ_n), u first.
    pub fn to_multi(&self) -> MultiPoly {
        let mut out = MultiPoly::zero(self.n + 1);
        for (d, c) in self.poly.iter() {
            for (e, x) in c.terms() {
                let mut exps = vec![d];
                exps.extend_from_slice(e);
                out.add_term(exps, x.clone());
            }
        }
        out
    }

    pub fn to_json(&self) -> HcImageJson {
        HcImageJson { udeg: self.poly.iter().map(|(d, c)| (d.to_string(), c.clone())).collect() }
    }

    pub fn from_json(n: usize, j: &HcImageJson) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (d, c) in &j.udeg {
            let deg: u32 = d.parse().map_err(|_| Error::Invalid(format!("bad degree key {d:?}")))?;
            if c.nvars() != n && !c.is_zero() {
                return Err(Error::Invalid("coefficient has the wrong number of variables".into()));
            }
            map.insert(deg, c.clone());
        }
        Ok(Self::from_map(n, map))
    }
}

/// `{"udeg": {"<degree>": {"[e1,…,en]": "p/q"}}}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HcImageJson {
    pub udeg: BTreeMap<String, MultiPoly>,
}

/// ω built two ways: Ω_λ − (d/n)Δ₁·id, and from the dual-basis expansion
/// Σ_{i≠j} E_ij ⊗ π(E_ji) + Σ_i H_i ⊗ π(H*_i) with H_i = E_ii − E_{i+1,i+1}
/// and H*_i = E₁₁ + … + E_ii − (i/n)ΣE_kk. Returns both.
pub fn sln_casimir_element(rep: &Representation) -> Result<(UeaMatrix, UeaMatrix)> {
    let n = rep.n();
    let dim = rep.dim();
    let nq = q(n as i64);
    let shift = UeaElement::delta1(n).scale(&(q(rep.weight().d()) / &nq));
    let by_shift = braided_casimir(rep).add_diagonal(&u_const(shift.neg()))?;

    let pi_delta = (1..=n).fold(QMatrix::zeros(dim, dim), |acc, k| acc.add(rep.pi(k, k)));
    let h_star: Vec<QMatrix> = (1..n)
        .map(|i| {
            let partial = (1..=i).fold(QMatrix::zeros(dim, dim), |acc, k| acc.add(rep.pi(k, k)));
            partial.sub(&pi_delta.scale(&(q(i as i64) / &nq)))
        })
        .collect();
    let by_dual = UeaMatrix::from_fn(n, dim, |r, s| {
        let mut x = UeaElement::zero(n);
        for i in 1..=n {
            for j in 1..=n {
                if i != j {
                    let c = &rep.pi(j, i)[(r, s)];
                    if !c.is_zero() {
                        x = x.add(&UeaElement::e(n, i, j).scale(c));
                    }
                }
            }
        }
        for (k, hs) in h_star.iter().enumerate() {
            let c = &hs[(r, s)];
            if !c.is_zero() {
                let h = UeaElement::e(n, k + 1, k + 1).sub(&UeaElement::e(n, k + 2, k + 2));
                x = x.add(&h.scale(c));
            }
        }
        u_const(x)
    });
    Ok((by_shift, by_dual))
}

/// (π_μ ⊗ π_λ)(Ω) = Σ π_μ(E_ij) ⊗ π_λ(E_ji), basis (a, r) ↦ a·dim V_λ + r.
pub fn casimir_action(rep_mu: &Representation, rep_lambda: &Representation) -> Result<QMatrix> {
    let n = rep_mu.n();
    if n != rep_lambda.n() {
        return Err(Error::RankMismatch { left: n, right: rep_lambda.n() });
    }
    let size = rep_mu.dim() * rep_lambda.dim();
    let mut out = QMatrix::zeros(size, size);
    for i in 1..=n {
        for j in 1..=n {
            let a = rep_mu.pi(i, j);
            if a.is_zero() {
                continue;
            }
            let b = rep_lambda.pi(j, i);
            if b.is_zero() {
                continue;
            }
            out = out.add(&a.kron(b));
        }
    }
    Ok(out)
}

/// Representation used for a sample weight μ: closed form for gl_2, the
/// lowering-closure model otherwise (its size is dim V_μ rather than n^|μ|).
pub fn rep_for(mu: &DominantWeight) -> Result<Representation> {
    if mu.n() == 2 {
        gl2_rep(mu)
    } else {
        highest_weight_module(mu)
    }
}

/// Outcome of recovering χ(P_λ) from sampled casimir actions.
#[derive(Clone, Debug)]
pub struct CharpolyFit {
    pub hc: HcImagePoly,
    pub used: Vec<DominantWeight>,
    /// Samples whose minimal polynomial had degree below dim V_λ.
    pub discarded: Vec<(DominantWeight, u32)>,
    /// Extra samples on which the fitted polynomial was checked.
    pub holdouts: Vec<(DominantWeight, bool)>,
}

/// Default sample set: the principal lattice {g ∈ ℕⁿ : Σg ≤ deg} mapped to
/// μ_n = g₀ and μ_k − μ_{k+1} = gap + g_k, which is unisolvent for
/// polynomials of total degree ≤ deg and keeps every μ strictly generic.
pub fn auto_samples(n: usize, deg: u32, gap: i64) -> Vec<DominantWeight> {
    MultiPoly::monomials_up_to(n, deg)
        .into_iter()
        .map(|g| {
            let mut mu = vec![0i64; n];
            mu[n - 1] = g[0] as i64;
            for k in (0..n - 1).rev() {
                mu[k] = mu[k + 1] + gap + g[n - 1 - k] as i64;
            }
            DominantWeight::new(mu).expect("dominant by construction")
        })
        .collect()
}

/// Recovers χ(P_λ(u)) by interpolating the coefficients of the minimal
/// polynomial of (π_μ ⊗ π_λ)(Ω) over the samples, normalized so the leading
/// coefficient is (−1)^{dim V_λ}. The coefficient of u^k is sought with
/// μ-degree at most `dim V_λ − k` unless `degree_bound` overrides it.
pub fn charpoly_interpolate(
    lambda: &DominantWeight,
    samples: &[DominantWeight],
    holdouts: &[DominantWeight],
    degree_bound: Option<u32>,
) -> Result<CharpolyFit> {
    let n = lambda.n();
    let rep_l = rep_for(lambda)?;
    let dim = rep_l.dim() as u32;
    let sign = if dim % 2 == 0 { q(1) } else { q(-1) };
    let max_deg = degree_bound.unwrap_or(dim);

    let polys: Vec<(DominantWeight, Result<QPoly>)> = samples
        .par_iter()
        .map(|mu| {
            if mu.n() != n {
                return (mu.clone(), Err(Error::WeightLength { got: mu.n(), expected: n }));
            }
            let p = rep_for(mu).and_then(|r| minimal_poly(&casimir_action(&r, &rep_l)?));
            (mu.clone(), p)
        })
        .collect();
    let mut used = Vec::new();
    let mut discarded = Vec::new();
    let mut values: Vec<(Vec<Q>, QPoly)> = Vec::new();
    for (mu, p) in polys {
        let p = p?;
        let d = p.degree().unwrap_or(0);
        if d < dim {
            discarded.push((mu, d));
            continue;
        }
        values.push((mu.components().iter().map(|&x| q(x)).collect(), p.scale(&sign)));
        used.push(mu);
    }

    let mut coeffs = BTreeMap::new();
    coeffs.insert(dim, MultiPoly::constant(n, sign.clone()));
    for k in 0..dim {
        let deg = max_deg.saturating_sub(k).min(max_deg);
        let monos = MultiPoly::monomials_up_to(n, deg);
        if values.len() < monos.len() {
            return Err(Error::Degenerate(format!(
                "{} usable samples for {} unknowns in the u^{k} coefficient",
                values.len(),
                monos.len()
            )));
        }
        let a = QMatrix::from_fn(values.len(), monos.len(), |r, c| {
            MultiPoly::from_monomial(n, &monos[c]).eval(&values[r].0)
        });
        if a.rank() < monos.len() {
            return Err(Error::Degenerate(format!("interpolation matrix for u^{k} is singular")));
        }
        let b: Vec<Q> = values.iter().map(|(_, p)| p.coeff(k).cloned().unwrap_or_else(Q::zero)).collect();
        let x = a
            .solve(&b)
            .ok_or_else(|| Error::Degenerate(format!("samples are inconsistent with degree {deg} for u^{k}")))?;
        let mut c = MultiPoly::zero(n);
        for (m, v) in monos.iter().zip(x) {
            c.add_term(m.clone(), v);
        }
        coeffs.insert(k, c);
    }
    let hc = HcImagePoly::from_map(n, coeffs);

    let holdout_results = holdouts
        .par_iter()
        .map(|mu| {
            let r = rep_for(mu)?;
            Ok((mu.clone(), annihilates(&hc, mu, &casimir_action(&r, &rep_l)?)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CharpolyFit { hc, used, discarded, holdouts: holdout_results })
}

fn annihilates(hc: &HcImagePoly, mu: &DominantWeight, m: &QMatrix) -> bool {
    let point: Vec<Q> = mu.components().iter().map(|&x| q(x)).collect();
    m.eval_poly(&hc.eval(&point)).is_zero()
}

/// Σ_k χ(z_k)(μ) · M^k = 0 for M = (π_μ ⊗ π_λ)(Ω).
pub fn verify_annihilation(rep_lambda: &Representation, mu: &DominantWeight, hc: &HcImagePoly) -> Result<bool> {
    let r = rep_for(mu)?;
    Ok(annihilates(hc, mu, &casimir_action(&r, rep_lambda)?))
}

/// Eq (12) or Eq (13) for gl_2 as an expanded product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gl2Kind {
    D,
    P,
}

pub fn gl2_hc_formula(kind: Gl2Kind, lambda: &DominantWeight) -> Result<HcImagePoly> {
    if lambda.n() != 2 {
        return Err(Error::WeightLength { got: lambda.n(), expected: 2 });
    }
    let (l1, l2, m) = (lambda.components()[0], lambda.components()[1], lambda.m());
    let forms: Vec<WeightPolynomial> = (0..=m)
        .map(|k| {
            let c = match kind {
                Gl2Kind::D => -k,
                Gl2Kind::P => -k * (m + 1 - k),
            };
            MultiPoly::affine(q(c), &[q(l1 - k), q(l2 + k)])
        })
        .collect();
    let u = match kind {
        Gl2Kind::D => q(1),
        Gl2Kind::P => q(-1),
    };
    Ok(HcImagePoly::product_of_linear(2, &u, &forms))
}

/// The roots in u of Eq (12) at −u or of Eq (13), as linear forms in μ.
pub fn gl2_root_forms(kind: Gl2Kind, lambda: &DominantWeight) -> Vec<WeightPolynomial> {
    let (l1, l2, m) = (lambda.components()[0], lambda.components()[1], lambda.m());
    (0..=m)
        .map(|k| {
            let c = match kind {
                Gl2Kind::D => -k,
                Gl2Kind::P => -k * (m + 1 - k),
            };
            MultiPoly::affine(q(c), &[q(l1 - k), q(l2 + k)])
        })
        .collect()
}

/// Eq (O_n) expanded in the commuting symbols (u, Δ₁, R) with
/// R² = (Δ₁ − 1)² − 4Δ₂.
pub fn o_n_product(lambda: &DominantWeight) -> MultiPoly {
    let (d, m) = (lambda.d(), lambda.m());
    let mut acc = MultiPoly::constant(3, Q::one());
    for k in 0..=m {
        let f = MultiPoly::affine(qf(-m, 2), &[q(1), qf(d, 2), qf(m - 2 * k, 2)]);
        acc = acc.mul(&f);
    }
    acc
}

/// Terms of the expansion with an odd power of R (these must cancel).
pub fn o_n_odd_part(expanded: &MultiPoly) -> MultiPoly {
    let mut out = MultiPoly::zero(3);
    for (e, c) in expanded.terms() {
        if e[2] % 2 == 1 {
            out.add_term(e.clone(), c.clone());
        }
    }
    out
}

/// The HC image of Eq (O_n): Δ₁ → μ₁ + μ₂ and R → μ₁ − μ₂ + 1, as a
/// polynomial in (u, μ₁, μ₂).
pub fn o_n_hc(lambda: &DominantWeight) -> MultiPoly {
    let images = [
        MultiPoly::var(3, 0),
        MultiPoly::affine(Q::zero(), &[q(0), q(1), q(1)]),
        MultiPoly::affine(q(1), &[q(0), q(1), q(-1)]),
    ];
    o_n_product(lambda).substitute(&images)
}

/// Eq (O_n) brought back into U(gl_2)[u]: even powers R^{2j} become
/// ((Δ₁ − 1)² − 4Δ₂)^j. Fails if odd powers survive.
pub fn o_n_uea(lambda: &DominantWeight) -> Result<UPoly> {
    let expanded = o_n_product(lambda);
    if !o_n_odd_part(&expanded).is_zero() {
        return Err(Error::Invalid("odd powers of the square root survive".into()));
    }
    let d1 = UeaElement::delta1(2);
    let d1m1 = d1.sub(&UeaElement::one(2));
    let r2 = d1m1.mul(&d1m1).sub(&UeaElement::delta2().scale(&q(4)));
    let pow = |x: &UeaElement, k: u32| (0..k).fold(UeaElement::one(2), |acc, _| acc.mul(x));
    let mut out = UPoly::zero();
    for (e, c) in expanded.terms() {
        let coeff = pow(&d1, e[1]).mul(&pow(&r2, e[2] / 2)).scale(c);
        out.add_term(e[0], &coeff)?;
    }
    Ok(out)
}

/// Experimental evidence for the basis conjecture: D_λ in the default weight
/// basis and, for small modules, in every reordering of that basis.
#[derive(Clone, Debug, Serialize)]
pub struct ConjectureScan {
    pub lambda: Vec<i64>,
    pub dim: usize,
    /// Per-coefficient centrality in the default basis, keyed by u-degree.
    pub default_basis: BTreeMap<String, bool>,
    /// Number of basis orders tried, and how many gave all-central D.
    pub permutations_tried: usize,
    pub permutations_all_central: usize,
    pub first_all_central_order: Option<Vec<usize>>,
}

pub fn conjecture_scan(lambda: &DominantWeight, permute_up_to: usize) -> Result<ConjectureScan> {
    let rep = build_rep(lambda, lambda.n())?;
    let d = shifted_determinant(&rep)?;
    let default_basis = d.centrality.iter().map(|(k, c)| (k.to_string(), *c)).collect();
    let mut tried = 0;
    let mut good = 0;
    let mut first = None;
    if rep.dim() <= permute_up_to {
        let perms = crate::tensor::all_permutations(rep.dim());
        let results = perms
            .par_iter()
            .map(|p| {
                let r = permuted(&rep, p)?;
                Ok((p.clone(), shifted_determinant_any_basis(&r)?.all_central()))
            })
            .collect::<Result<Vec<_>>>()?;
        for (p, ok) in results {
            tried += 1;
            if ok {
                good += 1;
                first.get_or_insert(p);
            }
        }
    }
    Ok(ConjectureScan {
        lambda: lambda.components().to_vec(),
        dim: rep.dim(),
        default_basis,
        permutations_tried: tried,
        permutations_all_central: good,
        first_all_central_order: first,
    })
}

/// The same module with basis vector `p[k]` moved to position k.
pub fn permuted(rep: &Representation, p: &[usize]) -> Result<Representation> {
    let n = rep.n();
    let dim = rep.dim();
    let perm = QMatrix::from_fn(dim, dim, |r, c| if p[r] == c { Q::one() } else { Q::zero() });
    let inv = perm.transpose();
    let mut mats = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in 1..=n {
            mats.push(perm.mul(rep.pi(i, j)).mul(&inv));
        }
    }
    let weights = p.iter().map(|&k| rep.basis_weights()[k].clone()).collect();
    Representation::from_matrices(rep.weight().clone(), mats, weights)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> DominantWeight {
        DominantWeight::new(v.to_vec()).unwrap()
    }

    #[test]
    fn braided_casimir_vector() {
        let om = braided_casimir(&gl2_rep(&w(&[1, 0])).unwrap());
        let e = |i, j| u_const(UeaElement::e(2, i, j));
        assert_eq!(*om.get(0, 0), e(1, 1));
        assert_eq!(*om.get(0, 1), e(2, 1));
        assert_eq!(*om.get(1, 0), e(1, 2));
        assert_eq!(*om.get(1, 1), e(2, 2));
    }

    #[test]
    fn determinant_rep_d() {
        let d = shifted_determinant(&build_rep(&w(&[1, 1]), 2).unwrap()).unwrap();
        let mut expect = u_pow(2, 1);
        expect.add_term(0, &UeaElement::delta1(2)).unwrap();
        assert_eq!(d.poly, expect);
        assert!(d.all_central());
    }

    #[test]
    fn flip_minimal_polynomial() {
        let v = gl2_rep(&w(&[1, 0])).unwrap();
        let m = casimir_action(&v, &v).unwrap();
        assert_eq!(minimal_poly(&m).unwrap(), QPoly::product_of_roots(&[q(1), q(-1)]));
    }

    #[test]
    fn o_n_matches_eq12() {
        for lam in [[1, 0], [2, 0], [3, 1], [2, -2]] {
            let lam = w(&lam);
            let eq12 = gl2_hc_formula(Gl2Kind::D, &lam).unwrap().to_multi();
            assert_eq!(o_n_hc(&lam), eq12);
            assert!(o_n_odd_part(&o_n_product(&lam)).is_zero());
        }
    }

    #[test]
    fn sln_paths_agree() {
        let r = gl2_rep(&w(&[2, 0])).unwrap();
        let (a, b) = sln_casimir_element(&r).unwrap();
        assert_eq!(a, b);
    }
}
