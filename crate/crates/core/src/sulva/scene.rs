//! Scenes of pegs, cords, circles and figures, and their JSON document form.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::arith::{ExactScalar, Rational};

use super::classify::{classify_figure, FigureClass};
use super::point::{ApproxPoint, Located, Point, DEFAULT_TOL};
use super::GeometryError;

#[derive(Clone, Debug, PartialEq)]
pub struct Peg {
    pub name: String,
    pub at: Located,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Cord {
    pub from: String,
    pub to: String,
    pub length: ExactScalar,
    /// Marks as fractions of the cord's length, measured from `from`.
    #[serde(default)]
    pub marks: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneCircle {
    pub center: String,
    pub radius: ExactScalar,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneLine {
    pub from: String,
    pub to: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Figure {
    pub name: String,
    pub vertices: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<FigureClass>,
}

/// An immutable construction; every `with_*` returns a new scene.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Scene {
    pegs: Vec<Peg>,
    cords: Vec<Cord>,
    circles: Vec<SceneCircle>,
    lines: Vec<SceneLine>,
    figures: Vec<Figure>,
}

impl Scene {
    pub fn new() -> Self {
        Scene::default()
    }

    pub fn pegs(&self) -> &[Peg] {
        &self.pegs
    }

    pub fn cords(&self) -> &[Cord] {
        &self.cords
    }

    pub fn circles(&self) -> &[SceneCircle] {
        &self.circles
    }

    pub fn lines(&self) -> &[SceneLine] {
        &self.lines
    }

    pub fn figures(&self) -> &[Figure] {
        &self.figures
    }

    /// True once any peg had to fall back to floating point.
    pub fn is_approximate(&self) -> bool {
        self.pegs.iter().any(|p| !p.at.is_exact())
    }

    pub fn peg(&self, name: &str) -> Option<&Located> {
        self.pegs.iter().find(|p| p.name == name).map(|p| &p.at)
    }

    fn require(&self, name: &str) -> Result<(), GeometryError> {
        match self.peg(name) {
            Some(_) => Ok(()),
            None => Err(GeometryError::Scene(format!("unknown peg {name:?}"))),
        }
    }

    pub fn with_peg(mut self, name: impl Into<String>, at: impl Into<Located>) -> Result<Self, GeometryError> {
        let name = name.into();
        if self.peg(&name).is_some() {
            return Err(GeometryError::Scene(format!("duplicate peg {name:?}")));
        }
        let at = at.into();
        if let Located::Approx(a) = &at {
            if !(a.x.is_finite() && a.y.is_finite() && a.tol.is_finite() && a.tol > 0.0) {
                return Err(GeometryError::Scene(format!("peg {name:?} has a non-finite position")));
            }
        }
        self.pegs.push(Peg { name, at });
        Ok(self)
    }

    pub fn with_cord(mut self, cord: Cord) -> Result<Self, GeometryError> {
        self.require(&cord.from)?;
        self.require(&cord.to)?;
        if cord.length.signum() <= 0 {
            return Err(GeometryError::Scene("cord length must be positive".into()));
        }
        if cord.marks.iter().any(|m| m.is_negative() || *m > Rational::one()) {
            return Err(GeometryError::Scene("cord marks must lie on the cord".into()));
        }
        self.cords.push(cord);
        Ok(self)
    }

    pub fn with_circle(mut self, center: &str, radius: ExactScalar) -> Result<Self, GeometryError> {
        self.require(center)?;
        if radius.signum() <= 0 {
            return Err(GeometryError::Scene("circle radius must be positive".into()));
        }
        self.circles.push(SceneCircle { center: center.to_string(), radius });
        Ok(self)
    }

    pub fn with_line(mut self, from: &str, to: &str) -> Result<Self, GeometryError> {
        self.require(from)?;
        self.require(to)?;
        self.lines.push(SceneLine { from: from.to_string(), to: to.to_string() });
        Ok(self)
    }

    /// Adds a closed figure, classified when all its corners are exact.
    pub fn with_figure(mut self, name: &str, vertices: &[&str]) -> Result<Self, GeometryError> {
        if vertices.len() < 3 {
            return Err(GeometryError::Scene(format!("figure {name:?} needs at least 3 vertices")));
        }
        let mut exact = Vec::with_capacity(vertices.len());
        for v in vertices {
            self.require(v)?;
            if let Some(p) = self.peg(v).and_then(Located::exact) {
                exact.push(p.clone());
            }
        }
        let class = if exact.len() == vertices.len() { classify_figure(&exact).ok() } else { None };
        self.figures.push(Figure {
            name: name.to_string(),
            vertices: vertices.iter().map(|v| v.to_string()).collect(),
            class,
        });
        Ok(self)
    }

    pub fn to_document(&self) -> SceneDocument {
        SceneDocument {
            pegs: self.pegs.iter().map(PegRepr::from).collect(),
            cords: self.cords.clone(),
            circles: self.circles.clone(),
            lines: self.lines.clone(),
            figures: self.figures.clone(),
            approximate: self.is_approximate(),
        }
    }

    /// Rebuild from a document, re-checking every reference.
    pub fn from_document(doc: SceneDocument) -> Result<Self, GeometryError> {
        let mut scene = Scene::new();
        for p in doc.pegs {
            let at = p.location()?;
            scene = scene.with_peg(p.name, at)?;
        }
        for c in doc.cords {
            scene = scene.with_cord(c)?;
        }
        for c in doc.circles {
            scene = scene.with_circle(&c.center, c.radius)?;
        }
        for l in doc.lines {
            scene = scene.with_line(&l.from, &l.to)?;
        }
        for f in doc.figures {
            let names: Vec<&str> = f.vertices.iter().map(String::as_str).collect();
            scene = scene.with_figure(&f.name, &names)?;
            if let (Some(given), Some(found)) = (f.class, scene.figures.last().and_then(|g| g.class)) {
                if given != found {
                    return Err(GeometryError::Scene(format!(
                        "figure {:?} is {found}, not {given}",
                        f.name
                    )));
                }
            }
        }
        if scene.is_approximate() != doc.approximate {
            return Err(GeometryError::Scene("\"approximate\" disagrees with the pegs".into()));
        }
        let mut seen = HashSet::new();
        if !scene.figures.iter().all(|f| seen.insert(f.name.clone())) {
            return Err(GeometryError::Scene("duplicate figure name".into()));
        }
        Ok(scene)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("scene documents always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, GeometryError> {
        let doc: SceneDocument =
            serde_json::from_str(text).map_err(|e| GeometryError::Scene(e.to_string()))?;
        Scene::from_document(doc)
    }
}

/// The serialized scene.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneDocument {
    pub pegs: Vec<PegRepr>,
    #[serde(default)]
    pub cords: Vec<Cord>,
    #[serde(default)]
    pub circles: Vec<SceneCircle>,
    #[serde(default)]
    pub lines: Vec<SceneLine>,
    #[serde(default)]
    pub figures: Vec<Figure>,
    #[serde(default)]
    pub approximate: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoordRepr {
    Exact(ExactScalar),
    Approx(f64),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PegRepr {
    pub name: String,
    pub x: CoordRepr,
    pub y: CoordRepr,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
}

impl PegRepr {
    fn location(&self) -> Result<Located, GeometryError> {
        match (&self.x, &self.y, self.tol) {
            (CoordRepr::Exact(x), CoordRepr::Exact(y), None) => {
                Ok(Located::Exact(Point { x: x.clone(), y: y.clone() }))
            }
            (CoordRepr::Exact(_), CoordRepr::Exact(_), Some(_)) => {
                Err(GeometryError::Scene(format!("exact peg {:?} carries a tolerance", self.name)))
            }
            (x, y, tol) => {
                let f = |c: &CoordRepr| match c {
                    CoordRepr::Exact(s) => s.to_f64(),
                    CoordRepr::Approx(v) => *v,
                };
                Ok(Located::Approx(ApproxPoint { x: f(x), y: f(y), tol: tol.unwrap_or(DEFAULT_TOL) }))
            }
        }
    }
}

impl From<&Peg> for PegRepr {
    fn from(p: &Peg) -> Self {
        match &p.at {
            Located::Exact(pt) => PegRepr {
                name: p.name.clone(),
                x: CoordRepr::Exact(pt.x.clone()),
                y: CoordRepr::Exact(pt.y.clone()),
                tol: None,
            },
            Located::Approx(a) => PegRepr {
                name: p.name.clone(),
                x: CoordRepr::Approx(a.x),
                y: CoordRepr::Approx(a.y),
                tol: Some(a.tol),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Scene {
        Scene::new()
            .with_peg("A", Point::ints(-3, 0))
            .unwrap()
            .with_peg("P", Point::ints(0, 4))
            .unwrap()
            .with_peg("B", Point::ints(3, 0))
            .unwrap()
            .with_figure("APB", &["A", "P", "B"])
            .unwrap()
    }

    #[test]
    fn references_must_exist() {
        let s = triangle();
        assert!(s.clone().with_line("A", "Z").is_err());
        assert!(s.clone().with_peg("A", Point::ints(1, 1)).is_err());
        assert!(s.clone().with_figure("AB", &["A", "B"]).is_err());
        assert!(s.with_circle("Q", ExactScalar::from(1)).is_err());
    }

    #[test]
    fn document_round_trip() {
        let s = triangle()
            .with_cord(Cord {
                from: "A".into(),
                to: "B".into(),
                length: ExactScalar::from(10),
                marks: vec![Rational::new(1, 2)],
            })
            .unwrap()
            .with_peg("R", ApproxPoint::new(0.5, 1.25))
            .unwrap();
        assert!(s.is_approximate());
        assert_eq!(s.figures()[0].class, Some(FigureClass::Prauga));
        let text = s.to_json();
        let back = Scene::from_json(&text).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn document_keys() {
        let v: serde_json::Value = serde_json::from_str(&triangle().to_json()).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        for k in ["pegs", "cords", "circles", "lines", "figures", "approximate"] {
            assert!(keys.contains(&k), "missing {k}");
        }
        assert_eq!(v["pegs"][0]["x"], serde_json::json!({"num": -3, "den": 1}));
        assert_eq!(v["approximate"], serde_json::json!(false));
    }

    #[test]
    fn rejects_inconsistent_documents() {
        let bad_ref = r#"{"pegs":[{"name":"A","x":{"num":0,"den":1},"y":{"num":0,"den":1}}],
            "lines":[{"from":"A","to":"B"}],"approximate":false}"#;
        assert!(Scene::from_json(bad_ref).is_err());
        let bad_flag = r#"{"pegs":[{"name":"A","x":{"num":0,"den":1},"y":{"num":0,"den":1}}],
            "approximate":true}"#;
        assert!(Scene::from_json(bad_flag).is_err());
        let wrong_class = r#"{"pegs":[
            {"name":"A","x":{"num":0,"den":1},"y":{"num":0,"den":1}},
            {"name":"B","x":{"num":1,"den":1},"y":{"num":0,"den":1}},
            {"name":"C","x":{"num":1,"den":1},"y":{"num":1,"den":1}},
            {"name":"D","x":{"num":0,"den":1},"y":{"num":1,"den":1}}],
            "figures":[{"name":"ABCD","vertices":["A","B","C","D"],"class":"ubhayatahprauga"}]}"#;
        assert!(Scene::from_json(wrong_class).is_err());
        assert!(Scene::from_json("[]").is_err());
        assert!(Scene::from_json(r#"{"pegs":[{"name":"A","x":1e400,"y":0}],"approximate":true}"#).is_err());
    }
}
