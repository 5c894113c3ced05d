use ganita::bija::{Equation, Paksha};
use ganita::notation::{parse, parse_text, render, Encoding, NotationDocument, ParseMode};
use proptest::prelude::*;

fn paksha() -> impl Strategy<Value = Paksha> {
    (-1000i64..1000, -1000i64..1000, -1000i64..1000).prop_map(|(a, b, c)| Paksha::new(a, b, c))
}

fn equation() -> impl Strategy<Value = Equation> {
    (paksha(), paksha()).prop_map(|(l, r)| Equation::new(l, r))
}

proptest! {
    #[test]
    fn render_then_parse(e in equation()) {
        for enc in [Encoding::Unicode, Encoding::Ascii] {
            let doc = render(&e, enc).unwrap();
            prop_assert_eq!(parse(&doc, ParseMode::Strict).unwrap(), e.clone());
            let reread: NotationDocument = doc.to_string().parse().unwrap();
            prop_assert_eq!(parse(&reread, ParseMode::Strict).unwrap(), e.clone());
        }
    }

    #[test]
    fn render_is_injective(e1 in equation(), e2 in equation()) {
        let (d1, d2) = (render(&e1, Encoding::Unicode).unwrap(), render(&e2, Encoding::Unicode).unwrap());
        prop_assert_eq!(d1.rows == d2.rows, e1 == e2);
    }

    #[test]
    fn encodings_agree(e in equation()) {
        let u = render(&e, Encoding::Unicode).unwrap().to_string();
        let ascii = u.replace("yāva", "yava").replace("yā", "ya").replace("rū", "ru");
        prop_assert_eq!(parse_text(&u, ParseMode::Strict).unwrap(), parse_text(&ascii, ParseMode::Strict).unwrap());
    }

    #[test]
    fn arbitrary_text_never_panics(s in "\\PC{0,60}\n\\PC{0,60}") {
        let _ = parse_text(&s, ParseMode::Lenient);
        let _ = parse_text(&s, ParseMode::Strict);
    }

    #[test]
    fn no_equality_sign_survives(e in equation(), col in 0usize..40) {
        let doc = render(&e, Encoding::Ascii).unwrap();
        let mut top = doc.rows[0].clone();
        let at = top.char_indices().map(|(i, _)| i).nth(col.min(top.chars().count() - 1)).unwrap();
        top.insert_str(at, " = ");
        let text = format!("{top}\n{}\n", doc.rows[1]);
        prop_assert!(parse_text(&text, ParseMode::Lenient).is_err());
    }
}
