//! Acceptance criteria 1-12. Each test prints one `criterion N PASS|FAIL` line
//! and then asserts, so a failing identity shows up both in the log and in the
//! test summary. All comparisons are exact.

use std::time::Instant;

use casimir_core::capelli::{
    eq19_check, fusion_check, is_diagonal, omega_star_check, omega_star_evaluated_check, plethysm_check,
    qdet_ev_check, qdet_hc_check, rtt_check, transpose_check, vector_central_check, EvalMap,
};
use casimir_core::central::{
    auto_samples, casimir_action, charpoly_interpolate, conjecture_scan, o_n_hc, rep_for, shifted_determinant,
    HcImagePoly,
};
use casimir_core::irreps::{
    build_rep, dual_star, gl2_rep, highest_weight_module, weyl_dimension, young_symmetrizer, DominantWeight,
    Representation,
};
use casimir_core::ncla::{column_det_naive, commutative_det_q, sylvester_matrix, sylvester_product, tridiag_det,
    tridiag_matrix, u_const, u_pow, UPoly};
use casimir_core::qmatrix::QMatrix;
use casimir_core::rational::{q, qf};
use casimir_core::report::CheckReport;
use casimir_core::verify::{partitions, partitions_up_to, root_difference};
use casimir_core::{MultiPoly, UeaElement, Q};
use num_traits::Zero;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn w(v: &[i64]) -> DominantWeight {
    DominantWeight::new(v.to_vec()).unwrap()
}

fn verdict(k: u32, failures: &[String], summary: &str, started: Instant) {
    let secs = started.elapsed().as_secs_f64();
    if failures.is_empty() {
        println!("criterion {k} PASS: {summary} ({secs:.1}s)");
    } else {
        println!("criterion {k} FAIL: {summary} ({secs:.1}s)");
        for f in failures {
            println!("  {f}");
        }
    }
    assert!(failures.is_empty(), "criterion {k}: {} failure(s)", failures.len());
}

fn collect(reports: &[CheckReport]) -> Vec<String> {
    reports.iter().filter(|r| !r.pass).map(CheckReport::line).collect()
}

/// Compares an HC image with a closed form on a grid that is unisolvent for
/// polynomials of degree ≤ `deg` in each of u, μ₁, μ₂.
fn agrees_on_grid(hc: &HcImagePoly, deg: i64, oracle: impl Fn(&Q, &Q, &Q) -> Q) -> Option<String> {
    for m1 in 0..=deg {
        for m2 in 0..=deg {
            let p = hc.eval(&[q(m1), q(m2)]);
            for u in 0..=deg {
                let (got, want) = (p.eval(&q(u)), oracle(&q(u), &q(m1), &q(m2)));
                if got != want {
                    return Some(format!("at u={u}, mu=({m1},{m2}): {got} vs {want}"));
                }
            }
        }
    }
    None
}

/// ∏_{k=0}^{m} (u + (λ₁−k)μ₁ + (λ₂+k)μ₂ − k)
fn eq12_value(l: &[i64], u: &Q, m1: &Q, m2: &Q) -> Q {
    (0..=l[0] - l[1]).fold(q(1), |acc, k| acc * (u + q(l[0] - k) * m1 + q(l[1] + k) * m2 - q(k)))
}

/// Roots of the characteristic polynomial for gl_2: (λ₁−k)μ₁ + (λ₂+k)μ₂ − k(m+1−k).
fn eq13_roots(l: &[i64], m1: &Q, m2: &Q) -> Vec<Q> {
    let m = l[0] - l[1];
    (0..=m).map(|k| q(l[0] - k) * m1 + q(l[1] + k) * m2 - q(k * (m + 1 - k))).collect()
}

#[test]
fn criterion_01_shifted_determinant_gl2() {
    let t = Instant::now();
    let mut failures = Vec::new();
    let mut count = 0;
    for m in 0..=4i64 {
        for l2 in -2..=2i64 {
            let l = [m + l2, l2];
            let d = shifted_determinant(&gl2_rep(&w(&l)).unwrap()).unwrap();
            count += 1;
            if !d.all_central() {
                failures.push(format!("{l:?}: non-central coefficients {:?}", d.centrality));
                continue;
            }
            let hc = d.hc_image().unwrap();
            if let Some(e) = agrees_on_grid(&hc, m + 1, |u, a, b| eq12_value(&l, u, a, b)) {
                failures.push(format!("{l:?}: {e}"));
            }
        }
    }
    verdict(1, &failures, &format!("{count} weights, central and equal to the product form"), t);
}

#[test]
fn criterion_02_annihilation_and_interpolation() {
    let t = Instant::now();
    let mut failures = Vec::new();
    let samples = [[4, 1], [5, 1], [6, 2], [7, 3], [9, 2], [3, -2]];
    for m in 0..=3i64 {
        for l2 in [0, -1] {
            let l = [m + l2, l2];
            let rep_l = gl2_rep(&w(&l)).unwrap();
            for mu in samples {
                let big = casimir_action(&rep_for(&w(&mu)).unwrap(), &rep_l).unwrap();
                let id = QMatrix::identity(big.rows());
                let prod = eq13_roots(&l, &q(mu[0]), &q(mu[1]))
                    .iter()
                    .fold(id.clone(), |acc, r| acc.mul(&id.scale(r).sub(&big)));
                if !prod.is_zero() {
                    failures.push(format!("lambda {l:?}, mu {mu:?}: product does not annihilate"));
                }
            }
            let dim = (m + 1) as u32;
            let fit = charpoly_interpolate(
                &w(&l),
                &auto_samples(2, dim, dim as i64),
                &auto_samples(2, 1, dim as i64 + 2),
                None,
            )
            .unwrap();
            if fit.holdouts.iter().any(|(_, ok)| !ok) {
                failures.push(format!("lambda {l:?}: holdout rejected the fit"));
            }
            // both sides are normalized to leading coefficient (−1)^dim
            let oracle = |u: &Q, a: &Q, b: &Q| eq13_roots(&l, a, b).iter().fold(q(1), |acc, r| acc * (r - u));
            if let Some(e) = agrees_on_grid(&fit.hc, m + 1, oracle) {
                failures.push(format!("lambda {l:?}: interpolation {e}"));
            }
        }
    }
    verdict(2, &failures, "annihilation on 6 samples per weight, interpolation matches", t);
}

#[test]
fn criterion_03_d_and_p_differ_in_the_middle_root() {
    let t = Instant::now();
    let mut failures = Vec::new();
    let diff = root_difference(&w(&[2, 0])).unwrap();
    let sum = |c: i64| MultiPoly::affine(q(c), &[q(1), q(1)]);
    if diff.only_d != vec![sum(-1)] || diff.only_p != vec![sum(-2)] {
        failures.push(format!("got {diff:?}"));
    }
    // independent look at the roots of χ(D(−u)) at a sample weight
    let hc = shifted_determinant(&gl2_rep(&w(&[2, 0])).unwrap()).unwrap().hc_image().unwrap();
    let at = hc.eval(&[q(5), q(2)]);
    if !at.eval(&q(-6)).is_zero() || at.eval(&q(-5)).is_zero() {
        failures.push("χ(D(−u)) at mu=(5,2) should vanish at u=6 and not at u=5".into());
    }
    verdict(3, &failures, "only D: mu1+mu2-1, only P: mu1+mu2-2", t);
}

#[test]
fn criterion_04_vector_representation() {
    let t = Instant::now();
    let mut reports = Vec::new();
    for n in 2..=4 {
        reports.push(vector_central_check(n).unwrap());
    }
    for n in 2..=3 {
        reports.push(qdet_ev_check(n).unwrap());
        reports.push(qdet_hc_check(n).unwrap());
    }
    let mut failures = collect(&reports);
    // the 2×2 column determinant by hand
    let e = |i, j| UeaElement::e(2, i, j);
    let one = UeaElement::one(2);
    let mut expect = u_pow(2, 2);
    expect.add_term(1, &e(1, 1).add(&e(2, 2)).sub(&one)).unwrap();
    expect.add_term(0, &e(1, 1).sub(&one).mul(&e(2, 2)).sub(&e(1, 2).mul(&e(2, 1)))).unwrap();
    let d = shifted_determinant(&build_rep(&w(&[1, 0]), 2).unwrap()).unwrap();
    if d.poly != expect {
        failures.push("n=2 vector determinant differs from the hand expansion".into());
    }
    verdict(4, &failures, &format!("{} checks", reports.len() + 1), t);
}

#[test]
fn criterion_05_rtt() {
    let t = Instant::now();
    let reports: Vec<_> = [2, 3]
        .into_iter()
        .flat_map(|n| [EvalMap::Ev, EvalMap::EvCheck].map(|m| rtt_check(n, m).unwrap()))
        .collect();
    verdict(5, &collect(&reports), "residual vanishes for ev and the twisted ev, n = 2, 3", t);
}

#[test]
fn criterion_06_fusion() {
    let t = Instant::now();
    let mut cases: Vec<(DominantWeight, usize)> = partitions_up_to(4, 2).into_iter().map(|l| (l, 2)).collect();
    cases.extend(partitions_up_to(3, 3).into_iter().map(|l| (l, 3)));
    let reports: Vec<_> = cases.iter().map(|(l, n)| fusion_check(l, *n).unwrap()).collect();
    verdict(6, &collect(&reports), &format!("{} partitions", reports.len()), t);
}

#[test]
fn criterion_07_dual_and_transpose() {
    let t = Instant::now();
    let mut reports = Vec::new();
    let mut evaluated = Vec::new();
    for n in 2..=3 {
        for l in partitions_up_to(3, n) {
            reports.push(omega_star_check(&l, n).unwrap());
            reports.push(eq19_check(&l, n).unwrap());
            evaluated.push(omega_star_evaluated_check(&l, n).unwrap());
        }
    }
    let mut shapes = Vec::new();
    for m in 0..=3 {
        let (r, c) = transpose_check(&gl2_rep(&w(&[m, 0])).unwrap()).unwrap();
        reports.push(r);
        shapes.push(c.map(|c| if is_diagonal(&c) { "diagonal" } else { "non-diagonal" }).unwrap_or("none"));
    }
    let ev_ok = evaluated.iter().filter(|r| r.pass).count();
    println!(
        "  info: dual identity after evaluating the algebra leg holds for {ev_ok}/{}; transpose intertwiners: {shapes:?}",
        evaluated.len()
    );
    verdict(7, &collect(&reports), &format!("{} checks", reports.len()), t);
}

#[test]
fn criterion_08_plethysm() {
    let t = Instant::now();
    let reports: Vec<_> = [[1, 0], [1, 1], [2, 0]].iter().map(|l| plethysm_check(&w(l)).unwrap()).collect();
    verdict(8, &collect(&reports), "n = 2, three weights", t);
}

fn random_commuting(rng: &mut ChaCha8Rng) -> UPoly {
    // the subalgebra generated by E11, E22 and E12E21 is commutative
    let gens = [
        UeaElement::one(2),
        UeaElement::e(2, 1, 1),
        UeaElement::e(2, 2, 2),
        UeaElement::e(2, 1, 2).mul(&UeaElement::e(2, 2, 1)),
    ];
    let mut p = UPoly::zero();
    for deg in 0..rng.gen_range(1..=2u32) {
        let mut x = UeaElement::zero(2);
        for g in &gens {
            x = x.add(&g.scale(&qf(rng.gen_range(-4..=4), rng.gen_range(1..=3))));
        }
        p.add_term(deg, &x).unwrap();
    }
    p
}

#[test]
fn criterion_09_recursion_and_sylvester() {
    let t = Instant::now();
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for trial in 0..100 {
        let m = rng.gen_range(1..=4usize);
        let a: Vec<UPoly> = (0..=m).map(|_| random_commuting(&mut rng)).collect();
        let b: Vec<UPoly> = (0..m).map(|_| random_commuting(&mut rng)).collect();
        let c: Vec<UPoly> = (0..m).map(|_| random_commuting(&mut rng)).collect();
        // move the products c_j b_j around: all into c', or rescaled by r
        let (b2, c2): (Vec<UPoly>, Vec<UPoly>) = (0..m)
            .map(|j| {
                let cb = c[j].try_mul(&b[j]).unwrap();
                if rng.gen_bool(0.5) {
                    (u_pow(2, 0), cb)
                } else {
                    let r = qf(rng.gen_range(1..=5), rng.gen_range(1..=5));
                    (u_pow(2, 0).scale(&r), cb.scale(&(q(1) / r)))
                }
            })
            .unzip();
        let oracle = column_det_naive(&tridiag_matrix(2, &a, &b, &c)).unwrap();
        if tridiag_det(&a, &b2, &c2).unwrap() != oracle || tridiag_det(&a, &b, &c).unwrap() != oracle {
            failures.push(format!("trial {trial}, m = {m}"));
        }
    }
    // the substituted data for Ω_λ(u) − L with b'_k = k E12E21 and c'_k = m − k + 1
    let e = |i, j| UeaElement::e(2, i, j);
    let h1 = e(1, 1).sub(&e(2, 2)).sub(&UeaElement::one(2));
    for (l1, l2) in [(1, 0), (2, 0), (3, 0), (2, 1), (3, -1)] {
        let m = l1 - l2;
        let a: Vec<UPoly> = (0..=m)
            .map(|k| {
                let base = e(1, 1).scale(&q(l1)).add(&e(2, 2).scale(&q(l2)));
                let c0 = base.sub(&UeaElement::one(2).scale(&q(m))).add(&h1.scale(&q(k - m)));
                let mut p = u_pow(2, 1);
                p.add_term(0, &c0).unwrap();
                p
            })
            .collect();
        let b: Vec<UPoly> = (1..=m).map(|k| u_const(e(1, 2).mul(&e(2, 1)).scale(&q(k)))).collect();
        let c: Vec<UPoly> = (1..=m).map(|k| u_pow(2, 0).scale(&q(m - k + 1))).collect();
        let d = shifted_determinant(&gl2_rep(&w(&[l1, l2])).unwrap()).unwrap();
        if tridiag_det(&a, &b, &c).unwrap() != d.poly {
            failures.push(format!("substituted tridiagonal data for ({l1},{l2})"));
        }
    }
    for m in 0..=5usize {
        for _ in 0..4 {
            let s = qf(rng.gen_range(-20..=20), rng.gen_range(1..=7));
            // A'_m: diagonal −r, superdiagonal (m−r)s, subdiagonal (r+1)(s−1)
            let mat = QMatrix::from_fn(m + 1, m + 1, |r, c| {
                if r == c {
                    q(-(r as i64))
                } else if c == r + 1 {
                    q((m - r) as i64) * &s
                } else if r == c + 1 {
                    q(c as i64 + 1) * (&s - q(1))
                } else {
                    Q::zero()
                }
            });
            let product = (0..=m as i64).fold(q(1), |acc, k| acc * (q(m as i64 - 2 * k) * &s - q(m as i64 - k)));
            let det = mat.determinant().unwrap();
            if det != product
                || sylvester_matrix(m, &s) != mat.to_rows()
                || commutative_det_q(&sylvester_matrix(m, &s)) != product
                || sylvester_product(m, &s) != product
            {
                failures.push(format!("Sylvester m = {m}, s = {s}: det {det} vs product {product}"));
            }
        }
    }
    verdict(9, &failures, "100 random trials, 5 weights, 24 Sylvester cases", t);
}

#[test]
fn criterion_10_square_root_form() {
    let t = Instant::now();
    let mut failures = Vec::new();
    for m in 0..=4i64 {
        for l2 in [-1, 0, 2] {
            let l = [m + l2, l2];
            let mut oracle = MultiPoly::constant(3, q(1));
            for k in 0..=m {
                oracle = oracle.mul(&MultiPoly::affine(q(-k), &[q(1), q(l[0] - k), q(l[1] + k)]));
            }
            if o_n_hc(&w(&l)) != oracle {
                failures.push(format!("{l:?}"));
            }
        }
    }
    verdict(10, &failures, "15 weights, identical as polynomials in (u, mu1, mu2)", t);
}

fn random_element(n: usize) -> impl Strategy<Value = UeaElement> {
    let gen = (1..=n, 1..=n);
    let term = (-3i64..=3, prop::collection::vec(gen, 0..=3));
    prop::collection::vec(term, 1..=3).prop_map(move |terms| {
        terms.into_iter().fold(UeaElement::zero(n), |acc, (c, word)| {
            let mono = word.into_iter().fold(UeaElement::one(n), |x, (i, j)| x.mul(&UeaElement::e(n, i, j)));
            acc.add(&mono.scale(&q(c)))
        })
    })
}

fn brackets_by_hand(rep: &Representation) -> bool {
    let n = rep.n();
    let delta = |a: usize, b: usize| if a == b { q(1) } else { q(0) };
    (1..=n).all(|i| {
        (1..=n).all(|j| {
            (1..=n).all(|k| {
                (1..=n).all(|l| {
                    let lhs = rep.pi(i, j).commutator(rep.pi(k, l));
                    let rhs = rep.pi(i, l).scale(&delta(j, k)).sub(&rep.pi(k, j).scale(&delta(l, i)));
                    lhs == rhs
                })
            })
        })
    })
}

/// Hook-content formula.
fn hook_content(lambda: &DominantWeight, n: usize) -> usize {
    let rows = lambda.rows();
    let col_len = |c: usize| rows.iter().filter(|&&r| r > c).count();
    let (mut num, mut den) = (1i64, 1i64);
    for (r, &len) in rows.iter().enumerate() {
        for c in 0..len {
            num *= n as i64 + c as i64 - r as i64;
            den *= (len - c - 1 + col_len(c) - r - 1 + 1) as i64;
        }
    }
    (num / den) as usize
}

#[test]
fn criterion_11_property_suites() {
    let t = Instant::now();
    let mut failures = Vec::new();
    let mut runner = TestRunner::new(Config { cases: 200, failure_persistence: None, ..Config::default() });
    let strat = (1..=3usize).prop_flat_map(|n| (random_element(n), random_element(n), random_element(n)));
    let assoc = runner.run(&strat, |(x, y, z)| {
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        Ok(())
    });
    if let Err(e) = assoc {
        failures.push(format!("associativity: {e}"));
    }
    // the action is a homomorphism on a 3-dimensional module
    let rep = gl2_rep(&w(&[2, 0])).unwrap();
    let hom = runner.run(&(random_element(2), random_element(2)), |(x, y)| {
        prop_assert_eq!(rep.act(&x.mul(&y)).unwrap(), rep.act(&x).unwrap().mul(&rep.act(&y).unwrap()));
        Ok(())
    });
    if let Err(e) = hom {
        failures.push(format!("homomorphism: {e}"));
    }

    let mut reps: Vec<(String, Representation)> = Vec::new();
    for n in 2..=3 {
        for l in partitions_up_to(4, n) {
            let r = build_rep(&l, n).unwrap();
            reps.push((format!("dual of tensor model {:?}", l.components()), dual_star(&r)));
            reps.push((format!("tensor model {:?}", l.components()), r));
        }
    }
    for l in [[0, 0], [3, -1], [4, 2], [-1, -3]] {
        reps.push((format!("gl2 {l:?}"), gl2_rep(&w(&l)).unwrap()));
    }
    for l in [&[2, 1, 0][..], &[3, 1, -1], &[1, 0, 0, 0]] {
        reps.push((format!("highest weight {l:?}"), highest_weight_module(&w(l)).unwrap()));
    }
    for (name, r) in &reps {
        if !r.satisfies_brackets() || !brackets_by_hand(r) {
            failures.push(format!("brackets fail for {name}"));
        }
    }

    let mut projectors = 0;
    for n in 2..=3 {
        for l in partitions_up_to(4, n) {
            let f = young_symmetrizer(&l, n).unwrap();
            projectors += 1;
            let expect = hook_content(&l, n);
            if !f.is_idempotent().unwrap() || f.rank() != expect || weyl_dimension(&l) != expect {
                failures.push(format!("projector for {:?}, n = {n}: rank {} vs {expect}", l.components(), f.rank()));
            }
        }
    }
    let summary = format!("400 random products, {} modules, {projectors} projectors", reps.len());
    verdict(11, &failures, &summary, t);
}

#[test]
fn criterion_12_conjecture_scan() {
    let t = Instant::now();
    for l in [[1, 1, 0], [2, 0, 0]] {
        let scan = conjecture_scan(&w(&l), 6).unwrap();
        println!(
            "  scan {:?}: dim {}, default basis {:?}, {}/{} orders all central",
            scan.lambda, scan.dim, scan.default_basis, scan.permutations_all_central, scan.permutations_tried
        );
        assert!(!scan.default_basis.is_empty());
    }
    // experimental: the outcome is recorded, never asserted
    verdict(12, &[], "scan completed (experimental, outcome not gated)", t);
}

#[test]
fn partitions_cover_small_sizes() {
    assert_eq!(partitions(4, 2).len(), 3);
    assert_eq!(partitions(3, 3).len(), 3);
}
