//! Areas found by counting unit squares, and the identities read off them.

use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::arith::{ExactScalar, Rational};

use super::GeometryError;

/// Grids larger than this many cells are refused instead of counted.
pub const MAX_COUNTED_CELLS: u64 = 50_000_000;

/// A polygon whose edges all run along the axes, corners in order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RectilinearFigure {
    pub vertices: Vec<(Rational, Rational)>,
}

impl RectilinearFigure {
    pub fn new(vertices: Vec<(Rational, Rational)>) -> Result<Self, GeometryError> {
        if vertices.len() < 4 {
            return Err(GeometryError::NotRectilinear);
        }
        for i in 0..vertices.len() {
            let (a, b) = (&vertices[i], &vertices[(i + 1) % vertices.len()]);
            let vertical = a.0 == b.0 && a.1 != b.1;
            let horizontal = a.1 == b.1 && a.0 != b.0;
            if !(vertical || horizontal) {
                return Err(GeometryError::NotRectilinear);
            }
        }
        Ok(RectilinearFigure { vertices })
    }

    pub fn rectangle(width: Rational, height: Rational) -> Result<Self, GeometryError> {
        if !width.is_positive() || !height.is_positive() {
            return Err(GeometryError::ZeroSide);
        }
        let z = Rational::zero();
        RectilinearFigure::new(vec![
            (z.clone(), z.clone()),
            (width.clone(), z.clone()),
            (width, height.clone()),
            (z, height),
        ])
    }

    pub fn square(side: Rational) -> Result<Self, GeometryError> {
        RectilinearFigure::rectangle(side.clone(), side)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitCount {
    pub count: u64,
    pub area: Rational,
}

fn to_grid(value: &Rational, unit: &Rational) -> Result<i64, GeometryError> {
    let steps = value / unit;
    if !steps.is_integer() {
        return Err(GeometryError::CannotTile);
    }
    steps.numer().to_i64().ok_or(GeometryError::TooLarge)
}

/// Lay `unit × unit` squares over the figure and count the ones inside it.
///
/// Each grid cell is tested by its center against the figure's edges, so the
/// count never uses a multiplication of side lengths.
pub fn area_by_unit_counting(
    figure: &RectilinearFigure,
    unit: &Rational,
) -> Result<UnitCount, GeometryError> {
    if !unit.is_positive() {
        return Err(GeometryError::NonPositive("unit"));
    }
    let grid: Vec<(i64, i64)> = figure
        .vertices
        .iter()
        .map(|(x, y)| Ok((to_grid(x, unit)?, to_grid(y, unit)?)))
        .collect::<Result<_, GeometryError>>()?;

    let (min_x, max_x) = min_max(grid.iter().map(|p| p.0));
    let (min_y, max_y) = min_max(grid.iter().map(|p| p.1));
    let cells = (max_x - min_x) as u64 * (max_y - min_y) as u64;
    if cells > MAX_COUNTED_CELLS {
        return Err(GeometryError::TooLarge);
    }

    // vertical edges as (x, y_lo, y_hi), doubled so cell centers stay integral
    let vertical: Vec<(i64, i64, i64)> = grid
        .iter()
        .zip(grid.iter().cycle().skip(1))
        .filter(|(a, b)| a.0 == b.0)
        .map(|(a, b)| (2 * a.0, 2 * a.1.min(b.1), 2 * a.1.max(b.1)))
        .collect();

    let mut count = 0u64;
    for i in min_x..max_x {
        let cx = 2 * i + 1;
        for j in min_y..max_y {
            let cy = 2 * j + 1;
            let crossings = vertical
                .iter()
                .filter(|&&(x, lo, hi)| x > cx && lo < cy && cy < hi)
                .count();
            if crossings % 2 == 1 {
                count += 1;
            }
        }
    }
    Ok(UnitCount { count, area: Rational::from(count as i64) * unit.square() })
}

fn min_max(values: impl Iterator<Item = i64>) -> (i64, i64) {
    values.fold((i64::MAX, i64::MIN), |(lo, hi), v| (lo.min(v), hi.max(v)))
}

/// Area ratio of a square whose side is scaled by `side_factor`.
pub fn square_area_scale(side_factor: &Rational) -> Result<Rational, GeometryError> {
    if !side_factor.is_positive() {
        return Err(GeometryError::NonPositive("side factor"));
    }
    Ok(side_factor.square())
}

/// The same ratio found by counting: `n × n` unit squares in the enlarged
/// square, or `n × n` small squares filling the unit square when the factor
/// is `1/n`. `None` for other factors.
pub fn square_area_scale_by_counting(side_factor: &Rational) -> Result<Option<Rational>, GeometryError> {
    if !side_factor.is_positive() {
        return Err(GeometryError::NonPositive("side factor"));
    }
    let one = Rational::one();
    if side_factor.is_integer() {
        let big = area_by_unit_counting(&RectilinearFigure::square(side_factor.clone())?, &one)?;
        return Ok(Some(Rational::from(big.count as i64)));
    }
    if side_factor.numer().is_one() {
        let small = area_by_unit_counting(&RectilinearFigure::square(one.clone())?, side_factor)?;
        return Ok(Some(Rational::from(1).checked_div(&Rational::from(small.count as i64))?));
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AreaMethod {
    Counting,
    Arithmetic,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiagonalCheck {
    /// Area of the square drawn on the diagonal.
    pub diag_square: Rational,
    /// Area of the squares on the two sides together.
    pub sides_square: Rational,
    pub holds: bool,
    pub method: AreaMethod,
}

/// Sides beyond this many grid steps (after clearing denominators) are
/// handled by exact arithmetic instead of counting.
const MAX_COUNTED_SIDE: i64 = 400;

/// The square on a rectangle's diagonal equals the squares on its two sides.
///
/// Side squares are counted cell by cell; the tilted diagonal square is counted
/// through its lattice points (interior plus half the boundary, less one),
/// which is exact for any polygon with grid-point corners.
pub fn diagonal_identity_check(width: &Rational, height: &Rational) -> Result<DiagonalCheck, GeometryError> {
    if !width.is_positive() || !height.is_positive() {
        return Err(GeometryError::ZeroSide);
    }
    let scale = Rational::from_integer(Rational::common_denominator([width, height]));
    let w = (width * &scale).numer().to_i64().filter(|v| *v <= MAX_COUNTED_SIDE);
    let h = (height * &scale).numer().to_i64().filter(|v| *v <= MAX_COUNTED_SIDE);

    let (sides_square, diag_square, method) = match (w, h) {
        (Some(w), Some(h)) => {
            let one = Rational::one();
            let a = area_by_unit_counting(&RectilinearFigure::square(Rational::from(w))?, &one)?;
            let b = area_by_unit_counting(&RectilinearFigure::square(Rational::from(h))?, &one)?;
            let d = tilted_square_area_by_lattice_points(w, h);
            let norm = scale.square();
            (
                Rational::from((a.count + b.count) as i64) / &norm,
                d / norm,
                AreaMethod::Counting,
            )
        }
        _ => {
            let sides = width.square() + height.square();
            // Shoelace on the tilted square (0,0), (w,h), (w-h, w+h), (-h, w).
            let corners = [
                (Rational::zero(), Rational::zero()),
                (width.clone(), height.clone()),
                (width - height, width + height),
                (-height.clone(), width.clone()),
            ];
            let twice: Rational = (0..4)
                .map(|i| {
                    let (a, b) = (&corners[i], &corners[(i + 1) % 4]);
                    &a.0 * &b.1 - &b.0 * &a.1
                })
                .sum();
            (sides, twice / Rational::from(2), AreaMethod::Arithmetic)
        }
    };
    let holds = sides_square == diag_square;
    Ok(DiagonalCheck { diag_square, sides_square, holds, method })
}

/// Area of the square standing on the segment (0,0)–(w,h), from its lattice points.
pub fn tilted_square_area_by_lattice_points(w: i64, h: i64) -> Rational {
    let corners = [(0, 0), (w, h), (w - h, w + h), (-h, w)];
    let (min_x, max_x) = min_max(corners.iter().map(|c| c.0));
    let (min_y, max_y) = min_max(corners.iter().map(|c| c.1));
    let (mut interior, mut boundary) = (0i64, 0i64);
    for x in min_x..=max_x {
        for y in min_y..=max_y {
            let mut on_edge = false;
            let mut inside = true;
            for i in 0..4 {
                let (a, b) = (corners[i], corners[(i + 1) % 4]);
                let cross = (b.0 - a.0) * (y - a.1) - (b.1 - a.1) * (x - a.0);
                if cross < 0 {
                    inside = false;
                    break;
                }
                if cross == 0 {
                    on_edge = true;
                }
            }
            if inside {
                if on_edge {
                    boundary += 1;
                } else {
                    interior += 1;
                }
            }
        }
    }
    Rational::from(interior) + Rational::new(boundary, 2) - Rational::one()
}

/// Linear factor taking an altar of `old_area` to `new_area` at the same shape.
pub fn altar_scale_factor(old_area: &Rational, new_area: &Rational) -> Result<ExactScalar, GeometryError> {
    if !old_area.is_positive() || !new_area.is_positive() {
        return Err(GeometryError::NonPositive("area"));
    }
    Ok(ExactScalar::sqrt(&(new_area / old_area))?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PartLabel {
    #[serde(rename = "X-square")]
    XSquare,
    #[serde(rename = "Y-square")]
    YSquare,
    #[serde(rename = "rectangle")]
    Rectangle,
}

impl PartLabel {
    pub fn name(self) -> &'static str {
        match self {
            PartLabel::XSquare => "X-square",
            PartLabel::YSquare => "Y-square",
            PartLabel::Rectangle => "rectangle",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SquarePart {
    pub label: PartLabel,
    pub area: Rational,
}

/// The square on `X + Y` cut into its two squares and two rectangles.
pub fn decompose_square(x: &Rational, y: &Rational) -> Result<Vec<SquarePart>, GeometryError> {
    if !x.is_positive() || !y.is_positive() {
        return Err(GeometryError::ZeroSide);
    }
    let xy = x * y;
    Ok(vec![
        SquarePart { label: PartLabel::XSquare, area: x.square() },
        SquarePart { label: PartLabel::YSquare, area: y.square() },
        SquarePart { label: PartLabel::Rectangle, area: xy.clone() },
        SquarePart { label: PartLabel::Rectangle, area: xy },
    ])
}
