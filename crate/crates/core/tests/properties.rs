use heckeq::laurent::rational::ratio;
use heckeq::symgroup::{class_algebra, class_product, ClassVector};
use heckeq::{LaurentPoly, Rational};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(a, b)| ratio(a, b))
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..=4, rational()), 0..5).prop_map(LaurentPoly::from_terms)
}

fn nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn class_vector(n: usize) -> impl Strategy<Value = ClassVector> {
    let classes = class_algebra(n).unwrap().classes().to_vec();
    let k = classes.len();
    prop::collection::vec((0..k, rational()), 1..4).prop_map(move |terms| {
        let mut v = ClassVector::zero(n);
        for (i, c) in terms {
            v.add_term(classes[i].clone(), c);
        }
        v
    })
}

proptest! {
    #[test]
    fn laurent_ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert_eq!(&a * &LaurentPoly::one(), a);
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(), b in nonzero_poly()) {
        prop_assert_eq!((&a * &b).divide_exact(&b).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(a in poly(), b in poly(), q0 in rational()) {
        prop_assume!(q0 != ratio(0, 1));
        let (ea, eb) = (a.eval(&q0).unwrap(), b.eval(&q0).unwrap());
        prop_assert_eq!((&a * &b).eval(&q0).unwrap(), &ea * &eb);
        prop_assert_eq!((&a + &b).eval(&q0).unwrap(), &ea + &eb);
    }

    #[test]
    fn polynomial_strings_reparse(a in poly()) {
        prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a);
    }

    #[test]
    fn class_product_is_associative_and_commutative(
        a in class_vector(5), b in class_vector(5), c in class_vector(5)
    ) {
        let ab = class_product(&a, &b).unwrap();
        prop_assert_eq!(&ab, &class_product(&b, &a).unwrap());
        prop_assert_eq!(
            class_product(&ab, &c).unwrap(),
            class_product(&a, &class_product(&b, &c).unwrap()).unwrap()
        );
    }
}
