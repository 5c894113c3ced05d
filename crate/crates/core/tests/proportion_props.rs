use ganita::arith::Rational;
use ganita::proportion::{
    compound_proportion, gnomon_shadow, rule_of_three, CompoundProportion, GnomonSide, ProportionProblem,
    RuleOfThreeProblem,
};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-500i64..500, 1i64..50).prop_map(|(p, q)| Rational::new(p, q))
}

fn nonzero() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

proptest! {
    #[test]
    fn scaling_both_terms_changes_nothing(a in nonzero(), b in rational(), x in rational(), k in nonzero()) {
        let base = rule_of_three(&RuleOfThreeProblem::new(a.clone(), b.clone(), x.clone())).unwrap();
        let scaled = rule_of_three(&RuleOfThreeProblem::new(&a * &k, &b * &k, x)).unwrap();
        prop_assert_eq!(base, scaled);
    }

    #[test]
    fn asking_the_known_question(a in nonzero(), b in rational()) {
        prop_assert_eq!(rule_of_three(&RuleOfThreeProblem::new(a.clone(), b.clone(), a)).unwrap(), b);
    }

    #[test]
    fn unit_stages_are_identity(n in 1usize..6, x in rational()) {
        let c = CompoundProportion { stages: vec![(Rational::one(), Rational::one()); n], iccha: x.clone() };
        prop_assert_eq!(compound_proportion(&c).unwrap(), x);
        prop_assert_eq!(c.rule_size(), 2 * n + 1);
    }

    #[test]
    fn chain_is_the_product(stages in prop::collection::vec((nonzero(), rational()), 1..5), x in rational()) {
        let want = stages.iter().fold(x.clone(), |acc, (a, b)| acc * b / a);
        let c = CompoundProportion { stages, iccha: x };
        prop_assert_eq!(compound_proportion(&c).unwrap(), want);
        let text = ProportionProblem::Compound(c.clone()).to_string();
        let reparsed: ProportionProblem = text.parse().unwrap();
        prop_assert_eq!(reparsed.solve().unwrap(), compound_proportion(&c).unwrap());
    }

    #[test]
    fn shadow_there_and_back(p in nonzero(), b in nonzero(), given in nonzero()) {
        let base = gnomon_shadow((&p, &b), &GnomonSide::Perpendicular(given.clone())).unwrap();
        let back = gnomon_shadow((&p, &b), &GnomonSide::Base(base.clone())).unwrap();
        prop_assert_eq!(back, given.clone());
        // similar triangles: p1·b2 = p2·b1
        prop_assert_eq!(&p * &base, &given * &b);
    }

    #[test]
    fn parser_never_panics(s in "\\PC{0,40}") {
        let _ = s.parse::<ProportionProblem>();
    }
}
