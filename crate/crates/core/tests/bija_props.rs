use ganita::arith::{QuadraticSurd, Rational};
use ganita::bija::{
    factors_from_diff_product, interest_ab_2_25, normalize, product_via_squares, solve,
    solve_quadratic_madhyamaharana, BijaError, Equation, Paksha, SolveTrace,
};
use ganita::sulva::decompose_square;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-300i64..300, 1i64..40).prop_map(|(p, q)| Rational::new(p, q))
}

fn positive() -> impl Strategy<Value = Rational> {
    (1i64..500, 1i64..40).prop_map(|(p, q)| Rational::new(p, q))
}

fn paksha() -> impl Strategy<Value = Paksha> {
    (rational(), rational(), rational()).prop_map(|(a, b, c)| Paksha { yava: a, ya: b, ru: c })
}

proptest! {
    #[test]
    fn roots_satisfy_their_equation(left in paksha(), right in paksha()) {
        let e = Equation::new(left, right);
        match solve(&e) {
            Ok((roots, trace)) => {
                for v in &roots.values {
                    prop_assert!(e.holds_at(v).unwrap(), "{} at {}", e, v);
                }
                if let Some(t) = trace {
                    t.verify().unwrap();
                }
            }
            Err(BijaError::NoRealRoot | BijaError::Indeterminate | BijaError::Inconsistent) => {}
            Err(other) => prop_assert!(false, "unexpected {other}"),
        }
    }

    #[test]
    fn normalizing_keeps_the_roots(r1 in rational(), r2 in rational(), k in rational().prop_filter("nonzero", |k| !k.is_zero()), shift in paksha()) {
        // k(x - r1)(x - r2) plus the same terms on both sides
        let p = Paksha { yava: k.clone(), ya: -(&k * &(&r1 + &r2)), ru: &k * &(&r1 * &r2) };
        let e = Equation::new(
            Paksha { yava: &p.yava + &shift.yava, ya: &p.ya + &shift.ya, ru: &p.ru + &shift.ru },
            shift,
        );
        let n = normalize(&e).unwrap();
        prop_assert!(n.is_normalized());
        let (roots, _) = solve_quadratic_madhyamaharana(&n).unwrap();
        let (roots_e, _) = solve_quadratic_madhyamaharana(&e).unwrap();
        prop_assert_eq!(&roots.values, &roots_e.values);
        let mut got: Vec<Rational> = roots.values.iter().map(|v| v.as_rational().unwrap().clone()).collect();
        let mut want = vec![r1, r2];
        got.sort();
        want.sort();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn traces_round_trip_through_json(a in positive(), b in rational(), c in rational()) {
        let e = Equation::new(Paksha { yava: a, ya: b, ru: Rational::zero() }, Paksha { ru: c, ..Paksha::zero() });
        if let Ok((_, trace)) = solve_quadratic_madhyamaharana(&e) {
            let back: SolveTrace = serde_json::from_str(&serde_json::to_string(&trace).unwrap()).unwrap();
            back.verify().unwrap();
            prop_assert_eq!(back, trace);
        }
    }

    #[test]
    fn interest_round_trip(p in positive(), t in positive(), x in (0i64..500, 1i64..40).prop_map(|(a, b)| Rational::new(a, b))) {
        let a = &x + &(&t / &p * x.square());
        let s = interest_ab_2_25(&p, &t, &a).unwrap();
        prop_assert_eq!(s.x.as_rational(), Some(&x));
        prop_assert_eq!(&s.by_formula, &s.by_steps);
    }

    #[test]
    fn factor_pairs(x in rational(), y in rational()) {
        let (a, b) = (&x - &y, &x * &y);
        let (fx, fy) = factors_from_diff_product(&a, &b).unwrap();
        prop_assert_eq!(fx.sub(&fy).unwrap(), QuadraticSurd::from(a));
        prop_assert_eq!(fx.mul(&fy).unwrap(), QuadraticSurd::from(b));
    }

    #[test]
    fn expansion_identities(x in positive(), y in positive()) {
        let parts: Rational = decompose_square(&x, &y).unwrap().into_iter().map(|p| p.area).sum();
        prop_assert_eq!(parts.clone(), x.square() + Rational::from(2) * &x * &y + y.square());
        prop_assert_eq!((&x - &y).square(), x.square() - Rational::from(2) * &x * &y + y.square());
        prop_assert_eq!(product_via_squares(&x, &y), &x * &y);
    }
}

#[test]
fn linear_dispatch_gives_one_root() {
    let e = Equation::new(Paksha::new(0, 5, 2), Paksha::new(0, 3, 8));
    let (roots, trace) = solve(&e).unwrap();
    assert_eq!(roots.values, vec![QuadraticSurd::from(Rational::from(3))]);
    assert!(trace.is_none());
}
