use ganita::arith::{compare, reduce, ExactScalar, Length, QuadraticSurd, Rational, Unit};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-2000i64..2000, 1i64..300).prop_map(|(p, q)| Rational::new(p, q))
}

fn nonzero() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

proptest! {
    #[test]
    fn reduce_is_canonical(p in -10_000i64..10_000, q in -500i64..500) {
        prop_assume!(q != 0);
        let r = reduce(p, q).unwrap();
        prop_assert!(r.denom() > &0.into());
        prop_assert_eq!(num_gcd(r.numer(), r.denom()), 1);
        prop_assert_eq!(r, Rational::new(p, q));
    }

    #[test]
    fn field_laws(a in rational(), b in rational(), c in nonzero()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) * &c, &a * &c + &b * &c);
        prop_assert_eq!(&(&a / &c) * &c, a.clone());
        prop_assert_eq!(&a - &a, Rational::zero());
    }

    #[test]
    fn text_and_json_round_trip(a in rational()) {
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Rational>(&json).unwrap(), a);
    }

    #[test]
    fn truncated_decimal_brackets_the_value(a in rational()) {
        let d: f64 = a.to_decimal_truncated(6).parse().unwrap();
        prop_assert!((d - a.to_f64()).abs() < 1.000_001e-6);
    }

    #[test]
    fn surd_order_matches_floats(c1 in nonzero(), r1 in 1i64..200, c2 in nonzero(), r2 in 1i64..200) {
        let a = ExactScalar::surd(c1, Rational::from(r1)).unwrap();
        let b = ExactScalar::surd(c2, Rational::from(r2)).unwrap();
        let (fa, fb) = (a.to_f64(), b.to_f64());
        if (fa - fb).abs() > 1e-9 * (1.0 + fa.abs()) {
            prop_assert_eq!(compare(&a, &b), fa.partial_cmp(&fb).unwrap());
        }
    }

    #[test]
    fn surd_squares_are_exact(c in nonzero(), r in 1i64..500) {
        let s = ExactScalar::surd(c.clone(), Rational::from(r)).unwrap();
        prop_assert_eq!(s.square(), c.square() * Rational::from(r));
        let json = serde_json::to_string(&s).unwrap();
        prop_assert_eq!(serde_json::from_str::<ExactScalar>(&json).unwrap(), s);
    }

    #[test]
    fn quadratic_surd_conjugate_product_is_rational(a in rational(), c in nonzero(), r in 2i64..300) {
        let s = ExactScalar::surd(c, Rational::from(r)).unwrap();
        let x = QuadraticSurd::new(a.clone(), s.clone());
        let y = QuadraticSurd::new(a.clone(), -s.clone());
        let p = x.mul(&y).unwrap();
        prop_assert_eq!(p.as_rational().cloned(), Some(a.square() - s.square()));
    }

    #[test]
    fn conversion_round_trips(m in rational()) {
        let units = [Unit::Tila, Unit::Angula, Unit::Purusa, Unit::Inch, Unit::Foot];
        for from in units {
            for to in units {
                let x = Length::new(m.clone(), from);
                let back = x.convert(to).unwrap().convert(from).unwrap();
                prop_assert_eq!(back, x);
            }
        }
    }
}

fn num_gcd(a: &num_bigint::BigInt, b: &num_bigint::BigInt) -> i64 {
    use num_integer::Integer;
    use num_traits::ToPrimitive;
    a.gcd(b).to_i64().unwrap()
}

#[test]
fn incommensurable_units_refuse() {
    assert!(Length::new(3, Unit::Hasta).convert(Unit::Foot).is_err());
    assert!(Length::new(3, Unit::Abstract).convert(Unit::Foot).is_err());
    assert!(reduce(1, 0).is_err());
}
