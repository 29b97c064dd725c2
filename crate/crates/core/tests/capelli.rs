use casimir_core::capelli::capelli_poly;
use casimir_core::irreps::DominantWeight;
use casimir_core::ncla::u_pow;
use casimir_core::rational::q;
use casimir_core::verify::partitions_up_to;
use casimir_core::UeaElement;

#[test]
fn single_box_is_the_trace_minus_nu() {
    for n in 1..=3 {
        let lambda = DominantWeight::new([vec![1], vec![0; n - 1]].concat()).unwrap();
        let mut expect = u_pow(n, 1).scale(&q(-(n as i64)));
        expect.add_term(0, &UeaElement::delta1(n)).unwrap();
        assert_eq!(capelli_poly(&lambda, n).unwrap(), expect, "n = {n}");
    }
}

#[test]
fn coefficients_are_central() {
    for (max, n) in [(3, 2), (2, 3)] {
        for lambda in partitions_up_to(max, n) {
            let c = capelli_poly(&lambda, n).unwrap();
            assert_eq!(c.degree(), Some(lambda.size() as u32), "{lambda}");
            for (k, x) in c.iter() {
                assert!(x.is_central().unwrap(), "{lambda}, u^{k}");
            }
        }
    }
}
