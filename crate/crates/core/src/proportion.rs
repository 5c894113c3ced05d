//! The rule of three, its chained forms, and similar gnomon triangles.
//!
//! The unknown is never named; it is just the fourth place in
//! `pramāṇa : phala :: icchā : ?`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::Rational;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ProportionError {
    #[error("undefined proportion")]
    UndefinedProportion,
    #[error("degenerate triangle")]
    DegenerateTriangle,
    #[error("a proportion needs at least one stage")]
    NoStages,
    #[error("cannot parse proportion: {0}")]
    Parse(String),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RuleOfThreeProblem {
    pub pramana: Rational,
    pub phala: Rational,
    pub iccha: Rational,
}

impl RuleOfThreeProblem {
    pub fn new(pramana: Rational, phala: Rational, iccha: Rational) -> Self {
        RuleOfThreeProblem { pramana, phala, iccha }
    }

    /// `m = phala / pramāṇa`, the rate carried over to the new quantity.
    pub fn ratio(&self) -> Result<Rational, ProportionError> {
        self.phala.checked_div(&self.pramana).map_err(|_| ProportionError::UndefinedProportion)
    }
}

/// The icchāphala: `phala · icchā / pramāṇa`.
pub fn rule_of_three(p: &RuleOfThreeProblem) -> Result<Rational, ProportionError> {
    Ok(p.ratio()? * &p.iccha)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CompoundProportion {
    pub stages: Vec<(Rational, Rational)>,
    pub iccha: Rational,
}

impl CompoundProportion {
    /// `n` stages make the "rule of 2n+1".
    pub fn rule_size(&self) -> usize {
        2 * self.stages.len() + 1
    }
}

pub fn compound_proportion(c: &CompoundProportion) -> Result<Rational, ProportionError> {
    if c.stages.is_empty() {
        return Err(ProportionError::NoStages);
    }
    c.stages.iter().try_fold(c.iccha.clone(), |acc, (pramana, phala)| {
        rule_of_three(&RuleOfThreeProblem::new(pramana.clone(), phala.clone(), acc))
    })
}

/// Which side of the second triangle is known.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GnomonSide {
    Perpendicular(Rational),
    Base(Rational),
}

/// Given a triangle `(perpendicular, base)` and one side of a similar
/// triangle, find the other side of the second triangle.
pub fn gnomon_shadow(known: (&Rational, &Rational), given: &GnomonSide) -> Result<Rational, ProportionError> {
    let (p1, b1) = known;
    if p1.is_zero() || b1.is_zero() {
        return Err(ProportionError::DegenerateTriangle);
    }
    Ok(match given {
        GnomonSide::Perpendicular(p2) => p2 * b1 / p1,
        GnomonSide::Base(b2) => p1 * b2 / b1,
    })
}

/// A parsed `a:b::x:?` or `a:b, c:d, ...::x:?` problem.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum ProportionProblem {
    Simple(RuleOfThreeProblem),
    Compound(CompoundProportion),
}

impl ProportionProblem {
    pub fn solve(&self) -> Result<Rational, ProportionError> {
        match self {
            ProportionProblem::Simple(p) => rule_of_three(p),
            ProportionProblem::Compound(c) => compound_proportion(c),
        }
    }
}

fn number(s: &str) -> Result<Rational, ProportionError> {
    let t = s.trim();
    if t.is_empty() {
        return Err(ProportionError::Parse("missing number".into()));
    }
    t.parse().map_err(|_| ProportionError::Parse(format!("{t:?} is not a number")))
}

fn pair(s: &str) -> Result<(Rational, Rational), ProportionError> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| ProportionError::Parse(format!("expected a:b, found {:?}", s.trim())))?;
    Ok((number(a)?, number(b)?))
}

impl FromStr for ProportionProblem {
    type Err = ProportionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (known, asked) = s
            .split_once("::")
            .ok_or_else(|| ProportionError::Parse("expected \"::\" between the known and asked ratios".into()))?;
        let (x, unknown) = asked
            .split_once(':')
            .ok_or_else(|| ProportionError::Parse("expected x:? after \"::\"".into()))?;
        if unknown.trim() != "?" {
            return Err(ProportionError::Parse("the fourth place must be \"?\"".into()));
        }
        let iccha = number(x)?;
        let stages = known.split([',', ';']).map(pair).collect::<Result<Vec<_>, _>>()?;
        Ok(match <[_; 1]>::try_from(stages) {
            Ok([(pramana, phala)]) => ProportionProblem::Simple(RuleOfThreeProblem { pramana, phala, iccha }),
            Err(stages) => ProportionProblem::Compound(CompoundProportion { stages, iccha }),
        })
    }
}

impl fmt::Display for ProportionProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProportionProblem::Simple(p) => write!(f, "{}:{}::{}:?", p.pramana, p.phala, p.iccha),
            ProportionProblem::Compound(c) => {
                let stages: Vec<String> = c.stages.iter().map(|(a, b)| format!("{a}:{b}")).collect();
                write!(f, "{}::{}:?", stages.join(","), c.iccha)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    fn three(a: i64, b: i64, x: i64) -> Result<Rational, ProportionError> {
        rule_of_three(&RuleOfThreeProblem::new(r(a), r(b), r(x)))
    }

    #[test]
    fn simple() {
        assert_eq!(three(5, 20, 8).unwrap(), r(32));
        assert_eq!(three(7, 7, 7).unwrap(), r(7));
        assert_eq!(three(1, 9, 12).unwrap(), r(108));
        assert_eq!(three(0, 1, 2), Err(ProportionError::UndefinedProportion));
        assert_eq!(three(0, 1, 2).unwrap_err().to_string(), "undefined proportion");
    }

    #[test]
    fn chained() {
        let c = |stages: &[(i64, i64)], x: i64| {
            compound_proportion(&CompoundProportion {
                stages: stages.iter().map(|&(a, b)| (r(a), r(b))).collect(),
                iccha: r(x),
            })
        };
        assert_eq!(c(&[(5, 20)], 8).unwrap(), r(32));
        assert_eq!(c(&[(100, 5), (12, 1)], 600).unwrap(), Rational::new(5, 2));
        assert_eq!(c(&[(2, 4), (3, 9)], 1).unwrap(), r(6));
        assert_eq!(c(&[(2, 4), (0, 9)], 1), Err(ProportionError::UndefinedProportion));
        assert_eq!(c(&[], 1), Err(ProportionError::NoStages));
    }

    #[test]
    fn shadows() {
        let (p, b) = (r(12), r(16));
        assert_eq!(gnomon_shadow((&p, &b), &GnomonSide::Base(r(4))).unwrap(), r(3));
        assert_eq!(gnomon_shadow((&r(1), &r(1)), &GnomonSide::Perpendicular(r(9))).unwrap(), r(9));
        assert_eq!(
            gnomon_shadow((&r(12), &r(0)), &GnomonSide::Base(r(4))),
            Err(ProportionError::DegenerateTriangle)
        );
    }

    #[test]
    fn parsing() {
        let p: ProportionProblem = "5:20::8:?".parse().unwrap();
        assert_eq!(p.solve().unwrap(), r(32));
        assert_eq!(p.to_string(), "5:20::8:?");
        let c: ProportionProblem = " 100 : 5 , 12:1 :: 600 : ? ".parse().unwrap();
        assert!(matches!(c, ProportionProblem::Compound(ref cp) if cp.rule_size() == 5));
        assert_eq!(c.solve().unwrap(), Rational::new(5, 2));
        assert_eq!(c.to_string().parse::<ProportionProblem>().unwrap(), c);
        let m: ProportionProblem = "1:7 1/2::3/2:?".parse().unwrap();
        assert_eq!(m.solve().unwrap(), Rational::new(45, 4));
        for bad in ["5:20:8:?", "5:20::8:9", "5::8:?", "a:b::c:?", "", "::", "5:20::?"] {
            assert!(bad.parse::<ProportionProblem>().is_err(), "{bad}");
        }
    }
}
