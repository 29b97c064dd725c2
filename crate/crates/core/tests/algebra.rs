use casimir_core::pbw::commutator_generators;
use casimir_core::rational::q;
use casimir_core::{parse_element, GeneratorIndex, UeaElement};
use proptest::prelude::*;

fn element(n: usize) -> impl Strategy<Value = UeaElement> {
    let word = prop::collection::vec((1..=n, 1..=n), 0..=3);
    prop::collection::vec((-5i64..=5, 1i64..=4, word), 1..=4).prop_map(move |terms| {
        terms.into_iter().fold(UeaElement::zero(n), |acc, (num, den, word)| {
            let mono = word.into_iter().fold(UeaElement::one(n), |x, (i, j)| x.mul(&UeaElement::e(n, i, j)));
            acc.add(&mono.scale(&(q(num) / q(den))))
        })
    })
}

fn with_n<T: std::fmt::Debug>(f: fn(usize) -> BoxedStrategy<T>) -> impl Strategy<Value = (usize, T)> {
    (1..=3usize).prop_flat_map(move |n| (Just(n), f(n)))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn display_parses_back((n, x) in with_n(|n| element(n).boxed())) {
        prop_assert_eq!(parse_element(&x.to_string(), n).unwrap(), x);
    }

    #[test]
    fn jacobi((_, (x, y, z)) in with_n(|n| (element(n), element(n), element(n)).boxed())) {
        let c = |a: &UeaElement, b: &UeaElement| a.commutator(b).unwrap();
        let sum = c(&x, &c(&y, &z)).add(&c(&y, &c(&z, &x))).add(&c(&z, &c(&x, &y)));
        prop_assert!(sum.is_zero());
    }

    #[test]
    fn distributive((_, (x, y, z)) in with_n(|n| (element(n), element(n), element(n)).boxed())) {
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
    }
}

#[test]
fn generator_brackets() {
    let n = 3;
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                for l in 1..=n {
                    let a = GeneratorIndex::new(i, j, n).unwrap();
                    let b = GeneratorIndex::new(k, l, n).unwrap();
                    let mut want = UeaElement::zero(n);
                    if j == k {
                        want = want.add(&UeaElement::e(n, i, l));
                    }
                    if l == i {
                        want = want.sub(&UeaElement::e(n, k, j));
                    }
                    assert_eq!(commutator_generators(a, b, n).unwrap(), want, "[E{i}{j}, E{k}{l}]");
                }
            }
        }
    }
}

#[test]
fn casimirs_are_central() {
    for n in 1..=4 {
        assert!(UeaElement::delta1(n).is_central().unwrap());
        assert!(UeaElement::casimir_t(n).is_central().unwrap());
    }
    assert!(UeaElement::delta2().is_central().unwrap());
    assert!(!UeaElement::e(2, 1, 2).is_central().unwrap());
}

#[test]
fn normal_ordering_of_a_reversed_pair() {
    // E12 E21 = E21 E12 + E11 − E22
    let x = parse_element("E[1,2]E[2,1]", 2).unwrap();
    let y = parse_element("E[2,1]E[1,2] + E[1,1] - E[2,2]", 2).unwrap();
    assert_eq!(x, y);
    assert!(parse_element("E[1,3]", 2).is_err());
}
