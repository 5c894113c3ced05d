//! Checks shared by the fuzz targets. Each takes raw bytes, must never
//! panic on bad input, and asserts a round trip whenever parsing succeeds.

use ganita::arith::{Length, Rational};
use ganita::calendar::CalendarConfig;
use ganita::notation::{self, Encoding, ParseMode};
use ganita::proportion::ProportionProblem;
use ganita::sulva::Scene;

fn text(data: &[u8]) -> Option<&str> {
    std::str::from_utf8(data).ok()
}

pub fn notation_parse(data: &[u8]) {
    let Some(s) = text(data) else { return };
    for mode in [ParseMode::Strict, ParseMode::Lenient] {
        let Ok(e) = notation::parse_text(s, mode) else { continue };
        for enc in [Encoding::Unicode, Encoding::Ascii] {
            if let Ok(doc) = notation::render(&e, enc) {
                let again = notation::parse_text(&doc.to_string(), ParseMode::Strict).expect("rendered text parses");
                assert_eq!(again, e);
            }
        }
    }
}

pub fn proportion_parse(data: &[u8]) {
    let Some(s) = text(data) else { return };
    if let Ok(p) = s.parse::<ProportionProblem>() {
        let again: ProportionProblem = p.to_string().parse().expect("displayed problem parses");
        assert_eq!(again, p);
        let _ = p.solve();
    }
}

pub fn calendar_config(data: &[u8]) {
    let Some(s) = text(data) else { return };
    if let Ok(c) = s.parse::<CalendarConfig>() {
        let again: CalendarConfig = c.to_text().parse().expect("written config parses");
        assert_eq!(again, c);
    }
}

pub fn scene_json(data: &[u8]) {
    let Some(s) = text(data) else { return };
    if let Ok(scene) = Scene::from_json(s) {
        assert_eq!(Scene::from_json(&scene.to_json()).expect("written scene reads back"), scene);
    }
}

pub fn length_parse(data: &[u8]) {
    let Some(s) = text(data) else { return };
    if let Ok(l) = s.parse::<Length>() {
        if l.magnitude.is_rational() {
            assert_eq!(l.to_string().parse::<Length>().expect("displayed length parses"), l);
        }
        let _ = l.convert(ganita::arith::Unit::Inch);
    }
}

pub fn rational_parse(data: &[u8]) {
    let Some(s) = text(data) else { return };
    if let Ok(r) = s.parse::<Rational>() {
        assert_eq!(r.to_string().parse::<Rational>().expect("displayed rational parses"), r);
    }
}

#[cfg(test)]
mod tests {
    use std::fs;
    use std::path::Path;

    fn replay(target: &str, check: fn(&[u8])) {
        let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus").join(target);
        let mut seen = 0;
        for entry in fs::read_dir(&dir).unwrap() {
            check(&fs::read(entry.unwrap().path()).unwrap());
            seen += 1;
        }
        assert!(seen > 0, "no seeds in {}", dir.display());
    }

    #[test]
    fn seeds() {
        replay("notation_parse", super::notation_parse);
        replay("proportion_parse", super::proportion_parse);
        replay("calendar_config", super::calendar_config);
        replay("scene_json", super::scene_json);
        replay("length_parse", super::length_parse);
        replay("rational_parse", super::rational_parse);
    }
}
