//! The east-west line from shadow points and the cord perpendicular.

use crate::arith::{ArithError, ExactScalar, Rational};

use super::point::{dist2, ApproxPoint, Located, Point, DEFAULT_TOL};
use super::GeometryError;

/// The circle drawn around the gnomon with a tethered rope.
#[derive(Clone, Debug, PartialEq)]
pub struct Circle {
    pub center: Point,
    pub radius: ExactScalar,
}

/// A line through two marks, running from `west` towards `east`.
#[derive(Clone, Debug, PartialEq)]
pub struct OrientedLine {
    pub west: Located,
    pub east: Located,
}

impl OrientedLine {
    pub fn is_exact(&self) -> bool {
        self.west.is_exact() && self.east.is_exact()
    }

    /// Direction vector `east - west`.
    pub fn direction(&self) -> Result<(ExactScalar, ExactScalar), ArithError> {
        match (&self.west, &self.east) {
            (Located::Exact(w), Located::Exact(e)) => e.minus(w),
            _ => Err(ArithError::Inexact),
        }
    }

    pub fn direction_f64(&self) -> (f64, f64) {
        let (wx, wy) = self.west.to_f64();
        let (ex, ey) = self.east.to_f64();
        (ex - wx, ey - wy)
    }
}

/// The prāchī: the line through the morning and evening shadow-tip marks.
///
/// Shadows point away from the sun, so the morning mark is the west end.
pub fn prachi_from_shadow_points(
    morning: &Located,
    evening: &Located,
    circle: &Circle,
) -> Result<OrientedLine, GeometryError> {
    if dist2(morning, evening).is_zero() {
        return Err(GeometryError::DegenerateObservation);
    }
    let center = Located::Exact(circle.center.clone());
    let r2 = circle.radius.square();
    for mark in [morning, evening] {
        if !dist2(mark, &center).matches(&r2) {
            return Err(GeometryError::InvalidObservation);
        }
    }
    Ok(OrientedLine { west: morning.clone(), east: evening.clone() })
}

/// Shadow-tip marks under an idealized equinox sun: mirror images across
/// the meridian through the gnomon, `north_offset` north of it.
pub fn equinox_shadow_points(
    gnomon: &Point,
    radius: &Rational,
    north_offset: &Rational,
) -> Result<(Located, Located), GeometryError> {
    let half_chord2 = radius.square() - north_offset.square();
    if !half_chord2.is_positive() {
        return Err(GeometryError::DegenerateObservation);
    }
    let half = ExactScalar::sqrt(&half_chord2)?;
    let y = gnomon.y.add(&ExactScalar::from(north_offset.clone()));
    let west = gnomon.x.sub(&half);
    let east = gnomon.x.add(&half);
    match (west, east, y) {
        (Ok(wx), Ok(ex), Ok(y)) => Ok((
            Located::Exact(Point { x: wx, y: y.clone() }),
            Located::Exact(Point { x: ex, y }),
        )),
        _ => {
            let (gx, gy) = gnomon.to_f64();
            let (h, o) = (half.to_f64(), north_offset.to_f64());
            Ok((
                ApproxPoint::new(gx - h, gy + o).into(),
                ApproxPoint::new(gx + h, gy + o).into(),
            ))
        }
    }
}

/// Result of stretching the marked cord both ways.
#[derive(Clone, Debug, PartialEq)]
pub struct CordPerpendicular {
    /// Mark on the left of A→B (north when A→B runs east).
    pub p: Located,
    pub q: Located,
}

impl CordPerpendicular {
    pub fn is_exact(&self) -> bool {
        self.p.is_exact() && self.q.is_exact()
    }
}

/// Perpendicular to AB at its midpoint C, found with a cord of length `cord`
/// tied to pegs A and B and stretched taut by its middle mark.
///
/// Coordinates stay exact while every sum remains a single rational-or-surd
/// term; otherwise both marks come back as [`ApproxPoint`]s.
pub fn perpendicular_via_cord(
    a: &Point,
    b: &Point,
    c: &Point,
    cord: &ExactScalar,
) -> Result<CordPerpendicular, GeometryError> {
    match exact_perpendicular(a, b, c, cord) {
        Ok(result) => Ok(result),
        Err(GeometryError::Arith(ArithError::Inexact)) => approx_perpendicular(a, b, c, cord),
        Err(e) => Err(e),
    }
}

fn exact_perpendicular(
    a: &Point,
    b: &Point,
    c: &Point,
    cord: &ExactScalar,
) -> Result<CordPerpendicular, GeometryError> {
    let two = Rational::from(2);
    let half = Rational::new(1, 2);
    let mid = Point {
        x: a.x.add(&b.x)?.scale(&half),
        y: a.y.add(&b.y)?.scale(&half),
    };
    if mid != *c {
        return Err(GeometryError::PegsNotEquidistant);
    }
    let (dx, dy) = b.minus(a)?;
    let ab2 = dx.square() + dy.square();
    if cord.signum() <= 0 || cord.square() <= ab2 {
        return Err(GeometryError::CordTooShort);
    }
    // height² = (L/2)² - (|AB|/2)²; step along the normal (-dy, dx) scaled by height/|AB|
    let height2 = (cord.square() - &ab2) / two.square();
    let k = ExactScalar::sqrt(&(height2 / ab2))?;
    let nx = (-dy).mul(&k);
    let ny = dx.mul(&k);
    let p = Point { x: c.x.add(&nx)?, y: c.y.add(&ny)? };
    let q = Point { x: c.x.sub(&nx)?, y: c.y.sub(&ny)? };
    Ok(CordPerpendicular { p: p.into(), q: q.into() })
}

fn approx_perpendicular(
    a: &Point,
    b: &Point,
    c: &Point,
    cord: &ExactScalar,
) -> Result<CordPerpendicular, GeometryError> {
    let (ax, ay) = a.to_f64();
    let (bx, by) = b.to_f64();
    let (cx, cy) = c.to_f64();
    let tol = DEFAULT_TOL;
    if ((ax + bx) / 2.0 - cx).abs() > tol || ((ay + by) / 2.0 - cy).abs() > tol {
        return Err(GeometryError::PegsNotEquidistant);
    }
    let (dx, dy) = (bx - ax, by - ay);
    let ab2 = dx * dx + dy * dy;
    let l = cord.to_f64();
    if l <= 0.0 || l * l <= ab2 + tol {
        return Err(GeometryError::CordTooShort);
    }
    let k = (((l * l - ab2) / 4.0) / ab2).sqrt();
    let (nx, ny) = (-dy * k, dx * k);
    Ok(CordPerpendicular {
        p: ApproxPoint { x: cx + nx, y: cy + ny, tol }.into(),
        q: ApproxPoint { x: cx - nx, y: cy - ny, tol }.into(),
    })
}

/// |PA|² = |PB|² = (L/2)² and (P - C)·(B - A) = 0, checked exactly on exact
/// marks and within tolerance otherwise.
pub fn check_perpendicular(
    a: &Point,
    b: &Point,
    c: &Point,
    cord: &ExactScalar,
    result: &CordPerpendicular,
) -> bool {
    let half_cord2 = cord.square() / Rational::from(4);
    let (a, b, c) = (Located::Exact(a.clone()), Located::Exact(b.clone()), Located::Exact(c.clone()));
    [&result.p, &result.q].into_iter().all(|m| {
        let lengths = dist2(m, &a).matches(&half_cord2) && dist2(m, &b).matches(&half_cord2);
        lengths && dot_is_zero(m, &c, &a, &b)
    })
}

fn dot_is_zero(m: &Located, c: &Located, a: &Located, b: &Located) -> bool {
    if let (Located::Exact(m), Located::Exact(c), Located::Exact(a), Located::Exact(b)) = (m, c, a, b) {
        let exact = (|| -> Result<bool, ArithError> {
            let (ux, uy) = m.minus(c)?;
            let (vx, vy) = b.minus(a)?;
            Ok(ux.mul(&vx).add(&uy.mul(&vy))?.is_zero())
        })();
        if let Ok(v) = exact {
            return v;
        }
    }
    let (mx, my) = m.to_f64();
    let (cx, cy) = c.to_f64();
    let (ax, ay) = a.to_f64();
    let (bx, by) = b.to_f64();
    ((mx - cx) * (bx - ax) + (my - cy) * (by - ay)).abs() <= m.tol()
}
