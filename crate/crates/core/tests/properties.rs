//! Randomised invariants of the group layer and the ring layer.

mod common;

use proptest::prelude::*;

use sl3fusion::charring::{fold_to_alcove, tensor_multiplicity};
use sl3fusion::weyl::{is_dominant, kostant, reduce_to_fundamental, refined_partition};
use sl3fusion::{AffineElement, FiniteWeyl, Weight};

/// Every named verification suite passes at a representative level.
#[test]
fn named_suites_pass() {
    for (suite, p) in [("group", 4), ("ring", 4), ("fusion", 2), ("spectral", 4)] {
        for check in sl3fusion::checks::suite(suite, p).expect("suite runs") {
            assert!(
                check.pass,
                "suite {suite}: {} has defect {}",
                check.name, check.max_defect
            );
        }
    }
}

fn weight(span: i64) -> impl Strategy<Value = Weight> {
    (-span..=span, -span..=span).prop_map(|(a, b)| Weight::new(a, b))
}

fn finite_weyl() -> impl Strategy<Value = FiniteWeyl> {
    (0usize..6).prop_map(|i| FiniteWeyl::ALL[i])
}

fn element(span: i64) -> impl Strategy<Value = AffineElement> {
    (finite_weyl(), weight(span)).prop_map(|(w, l)| AffineElement::new(w, l))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn group_axioms(x in element(8), y in element(8), z in element(8)) {
        prop_assert_eq!(x.multiply(y).multiply(z), x.multiply(y.multiply(z)));
        prop_assert_eq!(x.multiply(x.inverse()), AffineElement::identity());
        prop_assert_eq!(x.inverse().inverse(), x);
        // determinant and triality are homomorphisms
        prop_assert_eq!(x.multiply(y).det(), x.det() * y.det());
        prop_assert_eq!(x.multiply(y).tau(), (x.tau() + y.tau()).rem_euclid(3));
    }

    #[test]
    fn twisted_log_cocycle(x in element(8), y in element(8)) {
        let lhs = x.multiply(y).twisted_log();
        let rhs = y.wbar.inverse().apply(x.twisted_log()) + y.twisted_log();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(x.twisted_log().triality(), 0);
    }
}

proptest! {
    #[test]
    fn label_round_trip(x in element(9)) {
        let label = x.to_string();
        let parsed: AffineElement = label.parse().expect("own label parses");
        prop_assert_eq!(parsed, x);
    }

    #[test]
    fn reduction_round_trip(x in element(6), w in finite_weyl()) {
        let (base, sign) = reduce_to_fundamental(x);
        prop_assert!(is_dominant(base));
        prop_assert_eq!(base.multiply(AffineElement::from_wbar(sign)), x);
        // reducing a right translate recovers the pair
        if is_dominant(x) {
            let moved = x.multiply(AffineElement::from_wbar(w));
            prop_assert_eq!(reduce_to_fundamental(moved), (x, w));
        }
    }

    #[test]
    fn conjugation_is_a_ring_involution(x in element(6), y in element(6)) {
        prop_assert_eq!(x.conjugate().conjugate(), x);
        prop_assert_eq!(x.multiply(y).conjugate(), x.conjugate().multiply(y.conjugate()));
        prop_assert_eq!(x.conjugate().twisted_log(), x.twisted_log().conjugate());
    }

    #[test]
    fn fold_is_idempotent(nu in weight(20), h in 3i64..12) {
        let f = fold_to_alcove(nu, h);
        prop_assert!(f.sign == 0 || f.sign == 1 || f.sign == -1);
        let again = fold_to_alcove(f.weight, h);
        prop_assert_eq!(again.weight, f.weight);
        if f.sign != 0 {
            prop_assert_eq!(again.sign, 1);
            prop_assert!(f.weight.is_dominant());
            prop_assert!(f.weight.height() <= h - 3);
        }
    }

    #[test]
    fn kostant_positive_cone(beta in weight(8)) {
        let k = kostant(beta);
        prop_assert!(k >= 0);
        prop_assert_eq!(k, common::kostant_enumerate(beta));
        prop_assert!(refined_partition(beta) <= k);
    }

    #[test]
    fn tensor_symmetry(a in 0i64..4, b in 0i64..4, c in 0i64..4, d in 0i64..4, e in 0i64..5, f in 0i64..5) {
        let lam = Weight::new(a, b);
        let mu = Weight::new(c, d);
        let nu = Weight::new(e, f);
        let xy = tensor_multiplicity(lam, mu, nu).unwrap();
        let yx = tensor_multiplicity(mu, lam, nu).unwrap();
        prop_assert_eq!(xy, yx);
        // conjugation symmetry
        let conj = tensor_multiplicity(lam.conjugate(), mu.conjugate(), nu.conjugate()).unwrap();
        prop_assert_eq!(xy, conj);
    }
}
