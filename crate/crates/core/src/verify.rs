//! Verification suites: each returns one [`CheckReport`] per identity instance.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde_json::json;

use crate::capelli::{
    eq19_check, fusion_check, omega_star_check, omega_star_evaluated_check, plethysm_check, qdet_ev_check,
    qdet_hc_check, rtt_check, transpose_check, vector_central_check, EvalMap,
};
use crate::central::{
    auto_samples, charpoly_interpolate, gl2_hc_formula, gl2_root_forms, shifted_determinant, verify_annihilation,
    Gl2Kind, HcImagePoly,
};
use crate::error::{Error, Result};
use crate::irreps::{build_rep, gl2_rep, DominantWeight};
use crate::poly::WeightPolynomial;
use crate::rational::q;
use crate::report::CheckReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Gl2,
    Vector,
    Fusion,
    OmegaStar,
    Plethysm,
    Qdet,
    Rtt,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 8] = ["gl2", "vector", "fusion", "omega-star", "plethysm", "qdet", "rtt", "all"];
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "gl2" => Suite::Gl2,
            "vector" => Suite::Vector,
            "fusion" => Suite::Fusion,
            "omega-star" => Suite::OmegaStar,
            "plethysm" => Suite::Plethysm,
            "qdet" => Suite::Qdet,
            "rtt" => Suite::Rtt,
            "all" => Suite::All,
            _ => return Err(Error::Invalid(format!("unknown suite {s:?}"))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = [Suite::Gl2, Suite::Vector, Suite::Fusion, Suite::OmegaStar, Suite::Plethysm, Suite::Qdet, Suite::Rtt, Suite::All]
            .iter()
            .position(|s| s == self)
            .expect("listed");
        f.write_str(Suite::NAMES[k])
    }
}

/// Partitions of `size` with at most `n` parts, padded with zeros to length n,
/// in reverse lexicographic order.
pub fn partitions(size: usize, n: usize) -> Vec<DominantWeight> {
    fn rec(left: usize, max: usize, parts: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        if parts == 0 {
            return;
        }
        for p in (1..=max.min(left)).rev() {
            cur.push(p as i64);
            rec(left - p, p, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(size, size, n, &mut Vec::new(), &mut out);
    out.into_iter()
        .map(|mut v| {
            v.resize(n, 0);
            DominantWeight::new(v).expect("partition")
        })
        .collect()
}

/// Partitions of every size in 1..=max_size with at most n parts.
pub fn partitions_up_to(max_size: usize, n: usize) -> Vec<DominantWeight> {
    (1..=max_size).flat_map(|m| partitions(m, n)).collect()
}

fn run_all<T: Sync>(items: &[T], f: impl Fn(&T) -> Result<Vec<CheckReport>> + Sync + Send) -> Result<Vec<CheckReport>> {
    let chunks = items.par_iter().map(f).collect::<Result<Vec<_>>>()?;
    Ok(chunks.into_iter().flatten().collect())
}

fn gl2_params(lambda: &DominantWeight) -> serde_json::Value {
    json!({"n": 2, "lambda": lambda.components()})
}

/// D_λ central for n = 2 and χ(D_λ) equal to the closed product form.
pub fn eq12_check(lambda: &DominantWeight) -> Result<CheckReport> {
    let d = shifted_determinant(&gl2_rep(lambda)?)?;
    let params = gl2_params(lambda);
    if !d.all_central() {
        let bad: Vec<u32> = d.centrality.iter().filter(|(_, c)| !c).map(|(k, _)| *k).collect();
        return Ok(CheckReport::failed("eq12", params, format!("non-central coefficients at u^{bad:?}")));
    }
    let ok = d.hc_image()? == gl2_hc_formula(Gl2Kind::D, lambda)?;
    Ok(CheckReport::new("eq12", params, ok, (!ok).then(|| "HC image differs from the product form".into())))
}

/// Interpolated χ(P_λ) against the closed product form, and annihilation of
/// the casimir action at each of `samples`.
pub fn eq13_check(lambda: &DominantWeight, samples: &[DominantWeight]) -> Result<CheckReport> {
    let params = gl2_params(lambda);
    let dim = lambda.m() as u32 + 1;
    let fit = charpoly_interpolate(lambda, &auto_samples(2, dim, dim as i64), &auto_samples(2, 1, dim as i64 + 2), None)?;
    let formula = gl2_hc_formula(Gl2Kind::P, lambda)?;
    if fit.hc != formula {
        return Ok(CheckReport::failed("eq13", params, "interpolated χ(P) differs from the product form"));
    }
    if let Some((mu, _)) = fit.holdouts.iter().find(|(_, ok)| !ok) {
        return Ok(CheckReport::failed("eq13", params, format!("fit fails on holdout {mu}")));
    }
    let rep = gl2_rep(lambda)?;
    let fails = samples
        .par_iter()
        .map(|mu| Ok((mu, verify_annihilation(&rep, mu, &formula)?)))
        .collect::<Result<Vec<_>>>()?;
    let w = fails.iter().find(|(_, ok)| !ok).map(|(mu, _)| format!("no annihilation at μ = {mu}"));
    Ok(CheckReport::from_witness("eq13", params, w))
}

/// Roots of χ(D_λ(−u)) and of χ(P_λ(u)) that the other family lacks.
#[derive(Clone, Debug, PartialEq)]
pub struct RootDifference {
    pub only_d: Vec<WeightPolynomial>,
    pub only_p: Vec<WeightPolynomial>,
}

/// Computes both HC images independently (column determinant and
/// interpolation), confirms them against their root forms, and returns the
/// multiset difference of the roots.
pub fn root_difference(lambda: &DominantWeight) -> Result<RootDifference> {
    let d_forms = gl2_root_forms(Gl2Kind::D, lambda);
    let p_forms = gl2_root_forms(Gl2Kind::P, lambda);
    let d = shifted_determinant(&gl2_rep(lambda)?)?.hc_image()?;
    if d.negate_u() != HcImagePoly::product_of_linear(2, &q(-1), &d_forms) {
        return Err(Error::Invalid("χ(D(−u)) does not factor over the expected roots".into()));
    }
    let dim = lambda.m() as u32 + 1;
    let fit = charpoly_interpolate(lambda, &auto_samples(2, dim, dim as i64), &[], None)?;
    if fit.hc != HcImagePoly::product_of_linear(2, &q(-1), &p_forms) {
        return Err(Error::Invalid("χ(P) does not factor over the expected roots".into()));
    }
    let mut only_p = p_forms.clone();
    let mut only_d = Vec::new();
    for f in d_forms {
        match only_p.iter().position(|g| *g == f) {
            Some(k) => {
                only_p.remove(k);
            }
            None => only_d.push(f),
        }
    }
    Ok(RootDifference { only_d, only_p })
}

fn d_vs_p_check(lambda: &DominantWeight) -> Result<CheckReport> {
    let params = gl2_params(lambda);
    let diff = match root_difference(lambda) {
        Ok(d) => d,
        Err(e) => return Ok(CheckReport::failed("d-vs-p", params, e.to_string())),
    };
    let text = format!(
        "D only: [{}]; P only: [{}]",
        diff.only_d.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(", "),
        diff.only_p.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(", ")
    );
    let ok = !diff.only_d.is_empty();
    let mut r = CheckReport::new("d-vs-p", params, ok, Some(text));
    if ok {
        r.witness = r.witness.map(|w| format!("families differ: {w}"));
    }
    Ok(r)
}

fn gl2_suite() -> Result<Vec<CheckReport>> {
    let mut eq12: Vec<DominantWeight> = Vec::new();
    for m in 0..=4 {
        for a in [-1, 0, 2] {
            eq12.push(DominantWeight::new(vec![m + a, a])?);
        }
    }
    let mut out = run_all(&eq12, |l| Ok(vec![eq12_check(l)?]))?;
    let samples = [[4, 1], [5, 1], [6, 2], [7, 3], [9, 2]]
        .iter()
        .map(|v| DominantWeight::new(v.to_vec()))
        .collect::<Result<Vec<_>>>()?;
    let eq13: Vec<DominantWeight> = (0..=3).map(|m| DominantWeight::new(vec![m, 0])).collect::<Result<_>>()?;
    out.extend(run_all(&eq13, |l| Ok(vec![eq13_check(l, &samples)?]))?);
    out.push(d_vs_p_check(&DominantWeight::new(vec![2, 0])?)?);
    Ok(out)
}

fn vector_suite(n: usize) -> Result<Vec<CheckReport>> {
    let mut out = vec![vector_central_check(n)?];
    out.extend(qdet_suite(n)?);
    Ok(out)
}

/// The HC comparison interpolates over O(n^n) samples; it is run for n ≤ 3.
fn qdet_suite(n: usize) -> Result<Vec<CheckReport>> {
    let mut out = vec![qdet_ev_check(n)?];
    if n <= 3 {
        out.push(qdet_hc_check(n)?);
    }
    Ok(out)
}

fn fusion_suite(n: usize) -> Result<Vec<CheckReport>> {
    let max = if n == 2 { 4 } else { 3 };
    run_all(&partitions_up_to(max, n), |l| Ok(vec![fusion_check(l, n)?]))
}

fn omega_star_suite(n: usize) -> Result<Vec<CheckReport>> {
    let lambdas = partitions_up_to(3, n);
    let mut out = run_all(&lambdas, |l| {
        Ok(vec![omega_star_check(l, n)?, omega_star_evaluated_check(l, n)?, eq19_check(l, n)?])
    })?;
    if n == 2 {
        let reps: Vec<DominantWeight> = (0..=3).map(|m| DominantWeight::new(vec![m, 0])).collect::<Result<_>>()?;
        out.extend(run_all(&reps, |l| Ok(vec![transpose_check(&gl2_rep(l)?)?.0]))?);
    } else {
        let rep = build_rep(&DominantWeight::vector(n), n)?;
        out.push(transpose_check(&rep)?.0);
    }
    Ok(out)
}

fn plethysm_suite(n: usize) -> Result<Vec<CheckReport>> {
    if n != 2 {
        return Err(Error::Invalid("the plethysm suite is defined for n = 2".into()));
    }
    let lambdas: Vec<DominantWeight> =
        [[1, 0], [1, 1], [2, 0]].iter().map(|v| DominantWeight::new(v.to_vec())).collect::<Result<_>>()?;
    run_all(&lambdas, |l| Ok(vec![plethysm_check(l)?]))
}

fn rtt_suite(n: usize) -> Result<Vec<CheckReport>> {
    run_all(&[EvalMap::Ev, EvalMap::EvCheck, EvalMap::Unit], |&m| Ok(vec![rtt_check(n, m)?]))
}

/// Runs a suite at rank n. `gl2` and `plethysm` need n = 2; `all` skips them otherwise.
pub fn run_suite(suite: Suite, n: usize) -> Result<Vec<CheckReport>> {
    if n < 2 {
        return Err(Error::Invalid(format!("rank must be at least 2, got {n}")));
    }
    match suite {
        Suite::Gl2 if n != 2 => Err(Error::Invalid("the gl2 suite is defined for n = 2".into())),
        Suite::Gl2 => gl2_suite(),
        Suite::Vector => vector_suite(n),
        Suite::Fusion => fusion_suite(n),
        Suite::OmegaStar => omega_star_suite(n),
        Suite::Plethysm => plethysm_suite(n),
        Suite::Qdet => qdet_suite(n),
        Suite::Rtt => rtt_suite(n),
        Suite::All => {
            let mut out = Vec::new();
            for s in [Suite::Gl2, Suite::Vector, Suite::Fusion, Suite::OmegaStar, Suite::Plethysm, Suite::Rtt] {
                if n != 2 && matches!(s, Suite::Gl2 | Suite::Plethysm) {
                    continue;
                }
                out.extend(run_suite(s, n)?);
            }
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=5).map(|m| partitions(m, 5).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7]);
        assert_eq!(partitions(4, 2).len(), 3);
        assert_eq!(partitions(3, 2)[0].components(), &[3, 0]);
    }

    #[test]
    fn suite_names_roundtrip() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().to_string(), name);
        }
    }
}
