//! Tokens whose meaning depends on the count they take part in.

use std::collections::BTreeMap;

use super::CalendarError;

/// Maps `(token, context)` to what the token stands for there.
///
/// There is no fallback context: asking for a token without one is an error.
/// Keys are compared after [`fold_diacritics`], so `yajusamati-brick` finds
/// `yajuṣamatī-brick`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TokenRegistry {
    entries: BTreeMap<String, BTreeMap<String, String>>,
}

impl TokenRegistry {
    pub fn new() -> Self {
        TokenRegistry::default()
    }

    /// The altar's day-counting tokens.
    pub fn altar() -> Self {
        let mut r = TokenRegistry::new();
        for (context, referent) in [
            ("day-count", "one day-or-night of 360"),
            ("fortnight", "one fortnight"),
            ("month", "one month"),
            ("season", "one season"),
            ("nakṣatra", "one nakṣatra"),
            ("muhūrta", "the 15 muhūrtas of a day"),
        ] {
            r.register("yajuṣamatī-brick", context, referent);
        }
        r.register("enclosing-stone", "day-count", "one night of 360");
        r.register("enclosing-stone", "muhūrta", "the 15 muhūrtas of a night");
        r.register("lokampṛṇā-brick", "muhūrta", "one muhūrta of the year");
        r
    }

    /// Adds or replaces a referent.
    pub fn register(&mut self, token: &str, context: &str, referent: &str) {
        self.entries
            .entry(fold_diacritics(token))
            .or_default()
            .insert(fold_diacritics(context), referent.to_string());
    }

    pub fn resolve(&self, token: &str, context: Option<&str>) -> Result<&str, CalendarError> {
        let by_context = self
            .entries
            .get(&fold_diacritics(token))
            .ok_or_else(|| CalendarError::UnknownToken(token.to_string()))?;
        let context = context.ok_or_else(|| CalendarError::AmbiguousWithoutContext(token.to_string()))?;
        by_context
            .get(&fold_diacritics(context))
            .map(String::as_str)
            .ok_or_else(|| CalendarError::NoReferent { token: token.to_string(), context: context.to_string() })
    }

    /// Contexts in which `token` has a referent.
    pub fn contexts(&self, token: &str) -> Vec<&str> {
        self.entries
            .get(&fold_diacritics(token))
            .map(|m| m.keys().map(String::as_str).collect())
            .unwrap_or_default()
    }
}

/// Lower-cases and strips the diacritics used in transliteration.
pub fn fold_diacritics(s: &str) -> String {
    s.trim()
        .chars()
        .filter(|c| !('\u{0300}'..='\u{036f}').contains(c))
        .flat_map(char::to_lowercase)
        .map(|c| match c {
            'ā' => 'a',
            'ī' => 'i',
            'ū' => 'u',
            'ṛ' | 'ṝ' => 'r',
            'ḷ' => 'l',
            'ṣ' | 'ś' => 's',
            'ṇ' | 'ñ' | 'ṅ' => 'n',
            'ṭ' => 't',
            'ḍ' => 'd',
            'ḥ' => 'h',
            'ṃ' | 'ṁ' => 'm',
            other => other,
        })
        .collect()
}
