//! Schematic SVG of a scene: pegs as dots, cords and lines as segments,
//! circles as circles, figures as outlined polygons.

use std::fmt::Write;

use ganita::sulva::Scene;

/// Twelve significant digits, trailing zeros dropped.
pub fn num(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return "0".into();
    }
    let magnitude = v.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).clamp(0, 30) as usize;
    let s = format!("{v:.decimals$}");
    let s = if s.contains('.') { s.trim_end_matches('0').trim_end_matches('.').to_string() } else { s };
    if s == "-0" { "0".into() } else { s }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

pub fn render(scene: &Scene) -> String {
    let at = |name: &str| scene.peg(name).map(|p| p.to_f64()).unwrap_or((0.0, 0.0));
    // y grows upward in the scene, downward in SVG
    let flip = |(x, y): (f64, f64)| (x, -y);

    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for p in scene.pegs() {
        let (x, y) = flip(p.at.to_f64());
        xs.push(x);
        ys.push(y);
    }
    for c in scene.circles() {
        let (x, y) = flip(at(&c.center));
        let r = c.radius.to_f64();
        xs.extend([x - r, x + r]);
        ys.extend([y - r, y + r]);
    }
    let min = |v: &[f64]| v.iter().copied().fold(f64::INFINITY, f64::min);
    let max = |v: &[f64]| v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let (x0, x1, y0, y1) = if xs.is_empty() { (0.0, 1.0, 0.0, 1.0) } else { (min(&xs), max(&xs), min(&ys), max(&ys)) };
    let span = (x1 - x0).max(y1 - y0).max(f64::MIN_POSITIVE);
    let margin = 0.05 * span;
    let (vx, vy, vw, vh) = (x0 - margin, y0 - margin, x1 - x0 + 2.0 * margin, y1 - y0 + 2.0 * margin);
    let stroke = span * 0.004;
    let dot = span * 0.012;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}" fill="none" stroke="black" stroke-width="{}">"#,
        num(vx),
        num(vy),
        num(vw.max(f64::MIN_POSITIVE)),
        num(vh.max(f64::MIN_POSITIVE)),
        num(stroke)
    );
    for c in scene.circles() {
        let (x, y) = flip(at(&c.center));
        let _ = writeln!(out, r#"  <circle cx="{}" cy="{}" r="{}"/>"#, num(x), num(y), num(c.radius.to_f64()));
    }
    for f in scene.figures() {
        let pts: Vec<String> = f
            .vertices
            .iter()
            .map(|v| {
                let (x, y) = flip(at(v));
                format!("{},{}", num(x), num(y))
            })
            .collect();
        let _ = writeln!(out, r#"  <polygon points="{}"><title>{}</title></polygon>"#, pts.join(" "), escape(&f.name));
    }
    let segments = scene
        .lines()
        .iter()
        .map(|l| (&l.from, &l.to, None))
        .chain(scene.cords().iter().map(|c| (&c.from, &c.to, Some(c.length.to_string()))));
    for (from, to, label) in segments {
        let ((ax, ay), (bx, by)) = (flip(at(from)), flip(at(to)));
        let class = if label.is_some() { "cord" } else { "line" };
        let _ = write!(out, r#"  <line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}">"#, num(ax), num(ay), num(bx), num(by));
        if let Some(l) = label {
            let _ = write!(out, "<title>{}</title>", escape(&l));
        }
        let _ = writeln!(out, "</line>");
    }
    for p in scene.pegs() {
        let (x, y) = flip(p.at.to_f64());
        let _ = writeln!(
            out,
            r#"  <circle cx="{x}" cy="{y}" r="{r}" fill="black"/><text x="{tx}" y="{y}" font-size="{fs}" stroke="none" fill="black">{name}</text>"#,
            x = num(x),
            y = num(y),
            r = num(dot),
            tx = num(x + 1.5 * dot),
            fs = num(4.0 * dot),
            name = escape(&p.name)
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(num(0.0), "0");
        assert_eq!(num(4.0), "4");
        assert_eq!(num(-4.5), "-4.5");
        assert_eq!(num(std::f64::consts::SQRT_2), "1.41421356237");
        assert_eq!(num(1234.5678901234), "1234.56789012");
    }

    #[test]
    fn square_scene() {
        let svg = render(&ganita::sulva::recipe("square").unwrap());
        assert!(svg.starts_with("<svg"));
        assert!(svg.contains(r#"viewBox="-4.4 -4.4 8.8 8.8""#));
        assert_eq!(svg.matches("<polygon").count(), 2);
        assert!(svg.contains("<title>8√2</title>"));
    }
}
