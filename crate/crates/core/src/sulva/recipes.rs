//! Ready-made constructions.

use crate::arith::{ExactScalar, Rational};

use super::construct::{equinox_shadow_points, perpendicular_via_cord, prachi_from_shadow_points, Circle};
use super::point::Point;
use super::scene::{Cord, Scene};
use super::GeometryError;

pub const RECIPES: [&str; 5] = ["prachi", "perpendicular", "square", "rectangle", "diagonal-square"];

pub fn recipe(name: &str) -> Result<Scene, GeometryError> {
    match name {
        "prachi" => prachi(),
        "perpendicular" => perpendicular(Point::ints(-3, 0), Point::ints(3, 0), ExactScalar::from(10)),
        // half-diagonal 4 both ways: (L/2)² = 4² + 4²
        "square" => perpendicular(
            Point::ints(-4, 0),
            Point::ints(4, 0),
            ExactScalar::surd(Rational::from(8), Rational::from(2))?,
        ),
        "rectangle" => rectangle_of_unit_squares(3),
        "diagonal-square" => diagonal_square(),
        other => Err(GeometryError::UnknownRecipe(other.to_string())),
    }
}

fn prachi() -> Result<Scene, GeometryError> {
    let gnomon = Point::ints(0, 0);
    let radius = Rational::from(5);
    let (west, east) = equinox_shadow_points(&gnomon, &radius, &Rational::from(3))?;
    let circle = Circle { center: gnomon.clone(), radius: radius.clone().into() };
    let line = prachi_from_shadow_points(&west, &east, &circle)?;
    Scene::new()
        .with_peg("O", gnomon)?
        .with_peg("W", line.west)?
        .with_peg("E", line.east)?
        .with_circle("O", radius.clone().into())?
        .with_cord(Cord { from: "O".into(), to: "W".into(), length: radius.into(), marks: vec![] })?
        .with_line("W", "E")
}

fn perpendicular(a: Point, b: Point, cord: ExactScalar) -> Result<Scene, GeometryError> {
    let half = Rational::new(1, 2);
    let c = Point {
        x: a.x.add(&b.x)?.scale(&half),
        y: a.y.add(&b.y)?.scale(&half),
    };
    let marks = perpendicular_via_cord(&a, &b, &c, &cord)?;
    Scene::new()
        .with_peg("A", a)?
        .with_peg("B", b)?
        .with_peg("C", c)?
        .with_peg("P", marks.p)?
        .with_peg("Q", marks.q)?
        .with_cord(Cord { from: "A".into(), to: "B".into(), length: cord, marks: vec![half] })?
        .with_line("A", "B")?
        .with_line("P", "Q")?
        .with_figure("APBQ", &["A", "P", "B", "Q"])?
        .with_figure("APB", &["A", "P", "B"])
}

fn rectangle_of_unit_squares(n: i64) -> Result<Scene, GeometryError> {
    let mut scene = Scene::new();
    for i in 0..=n {
        scene = scene
            .with_peg(format!("S{i}"), Point::ints(i, 0))?
            .with_peg(format!("N{i}"), Point::ints(i, 1))?;
    }
    for i in 1..n {
        scene = scene.with_line(&format!("S{i}"), &format!("N{i}"))?;
    }
    let (s0, sn, nn, n0) = ("S0".to_string(), format!("S{n}"), format!("N{n}"), "N0".to_string());
    scene.with_figure("rectangle", &[&s0, &sn, &nn, &n0])
}

fn diagonal_square() -> Result<Scene, GeometryError> {
    let root2 = ExactScalar::sqrt(&Rational::from(2))?;
    Scene::new()
        .with_peg("A", Point::ints(0, 0))?
        .with_peg("B", Point::ints(1, 0))?
        .with_peg("C", Point::ints(1, 1))?
        .with_peg("D", Point::ints(0, 1))?
        .with_peg("E", Point::ints(0, 2))?
        .with_peg("F", Point::ints(-1, 1))?
        .with_cord(Cord { from: "A".into(), to: "C".into(), length: root2, marks: vec![] })?
        .with_figure("unit", &["A", "B", "C", "D"])?
        .with_figure("doubled", &["A", "C", "E", "F"])
}
