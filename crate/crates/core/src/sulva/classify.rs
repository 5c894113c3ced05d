//! Naming of rope-built figures by their side and diagonal lengths.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::arith::{ArithError, ExactScalar, Rational};

use super::point::Point;
use super::GeometryError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FigureClass {
    /// Any quadrilateral.
    Caturasra,
    /// Square.
    Samacaturasra,
    /// Rhombus.
    Ubhayatahprauga,
    /// Isosceles triangle.
    Prauga,
    /// Rectangle.
    Dirghacaturasra,
    Other,
}

impl FigureClass {
    pub fn name(self) -> &'static str {
        match self {
            FigureClass::Caturasra => "caturasra",
            FigureClass::Samacaturasra => "samacaturasra",
            FigureClass::Ubhayatahprauga => "ubhayataḥprauga",
            FigureClass::Prauga => "prauga",
            FigureClass::Dirghacaturasra => "dīrghacaturasra",
            FigureClass::Other => "other",
        }
    }
}

impl std::fmt::Display for FigureClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Sign of the cross product (b - a) × (c - a).
fn orientation(a: &Point, b: &Point, c: &Point) -> Result<Ordering, ArithError> {
    let (ux, uy) = b.minus(a)?;
    let (vx, vy) = c.minus(a)?;
    let cross = ux.mul(&vy).sub(&uy.mul(&vx))?;
    Ok(cross.compare(&ExactScalar::zero()))
}

fn segments_cross(p1: &Point, p2: &Point, p3: &Point, p4: &Point) -> Result<bool, ArithError> {
    let d1 = orientation(p1, p2, p3)?;
    let d2 = orientation(p1, p2, p4)?;
    let d3 = orientation(p3, p4, p1)?;
    let d4 = orientation(p3, p4, p2)?;
    Ok(d1 != d2 && d3 != d4)
}

/// Classify four corners taken in order around the figure.
///
/// Equalities are decided exactly on squared lengths. Collinear corners and
/// crossed (bow-tie) orderings are rejected.
pub fn classify_quadrilateral(v: &[Point; 4]) -> Result<FigureClass, GeometryError> {
    for i in 0..4 {
        for j in (i + 1)..4 {
            if v[i] == v[j] {
                return Err(GeometryError::NotSimpleQuadrilateral);
            }
        }
    }
    for skip in 0..4 {
        let t: Vec<&Point> = (0..4).filter(|&i| i != skip).map(|i| &v[i]).collect();
        if orientation(t[0], t[1], t[2])? == Ordering::Equal {
            return Err(GeometryError::NotSimpleQuadrilateral);
        }
    }
    if segments_cross(&v[0], &v[1], &v[2], &v[3])? || segments_cross(&v[1], &v[2], &v[3], &v[0])? {
        return Err(GeometryError::NotSimpleQuadrilateral);
    }

    let sides: Vec<Rational> = (0..4)
        .map(|i| v[i].dist2(&v[(i + 1) % 4]))
        .collect::<Result<_, _>>()?;
    let diagonals_equal = v[0].dist2(&v[2])? == v[1].dist2(&v[3])?;
    let all_sides_equal = sides.iter().all(|s| *s == sides[0]);
    let opposite_equal = sides[0] == sides[2] && sides[1] == sides[3];

    let class = if all_sides_equal && diagonals_equal {
        FigureClass::Samacaturasra
    } else if all_sides_equal {
        FigureClass::Ubhayatahprauga
    } else if opposite_equal && diagonals_equal {
        FigureClass::Dirghacaturasra
    } else {
        FigureClass::Caturasra
    };
    Ok(class)
}

/// Classify a closed figure of any size: triangles are prauga when two sides
/// agree, quadrilaterals go through [`classify_quadrilateral`].
pub fn classify_figure(v: &[Point]) -> Result<FigureClass, GeometryError> {
    match v.len() {
        3 => {
            if orientation(&v[0], &v[1], &v[2])? == Ordering::Equal {
                return Err(GeometryError::DegenerateFigure);
            }
            let s = [v[0].dist2(&v[1])?, v[1].dist2(&v[2])?, v[2].dist2(&v[0])?];
            let isosceles = s[0] == s[1] || s[1] == s[2] || s[0] == s[2];
            Ok(if isosceles { FigureClass::Prauga } else { FigureClass::Other })
        }
        4 => classify_quadrilateral(&[v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()]),
        n if n < 3 => Err(GeometryError::DegenerateFigure),
        _ => Ok(FigureClass::Other),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quad(c: [(i64, i64); 4]) -> [Point; 4] {
        c.map(|(x, y)| Point::ints(x, y))
    }

    #[test]
    fn named_examples() {
        assert_eq!(
            classify_quadrilateral(&quad([(0, 0), (1, 0), (1, 1), (0, 1)])).unwrap(),
            FigureClass::Samacaturasra
        );
        assert_eq!(
            classify_quadrilateral(&quad([(-3, 0), (0, 4), (3, 0), (0, -4)])).unwrap(),
            FigureClass::Ubhayatahprauga
        );
        assert_eq!(
            classify_quadrilateral(&quad([(0, 0), (3, 0), (3, 1), (0, 1)])).unwrap(),
            FigureClass::Dirghacaturasra
        );
        assert_eq!(
            classify_quadrilateral(&quad([(0, 0), (4, 0), (3, 1), (0, 1)])).unwrap(),
            FigureClass::Caturasra
        );
        // parallelogram: opposite sides equal, diagonals not
        assert_eq!(
            classify_quadrilateral(&quad([(0, 0), (3, 0), (4, 1), (1, 1)])).unwrap(),
            FigureClass::Caturasra
        );
    }

    #[test]
    fn rejects_degenerate_input() {
        for bad in [
            [(0, 0), (1, 0), (2, 0), (0, 1)],
            [(0, 0), (1, 0), (0, 1), (1, 1)],
            [(0, 0), (0, 0), (1, 1), (0, 1)],
        ] {
            assert_eq!(
                classify_quadrilateral(&quad(bad)),
                Err(GeometryError::NotSimpleQuadrilateral)
            );
        }
    }

    #[test]
    fn square_with_surd_corners() {
        let r = ExactScalar::surd(Rational::one(), Rational::from(2)).unwrap();
        let z = ExactScalar::zero();
        let v = [
            Point { x: r.clone(), y: z.clone() },
            Point { x: z.clone(), y: r.clone() },
            Point { x: -r.clone(), y: z.clone() },
            Point { x: z, y: -r },
        ];
        assert_eq!(classify_quadrilateral(&v).unwrap(), FigureClass::Samacaturasra);
    }

    #[test]
    fn triangles() {
        let t = [Point::ints(-3, 0), Point::ints(0, 4), Point::ints(3, 0)];
        assert_eq!(classify_figure(&t).unwrap(), FigureClass::Prauga);
        let t = [Point::ints(0, 0), Point::ints(4, 0), Point::ints(0, 3)];
        assert_eq!(classify_figure(&t).unwrap(), FigureClass::Other);
    }
}
