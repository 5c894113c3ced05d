//! The day-by-day count of the year-long ritual.
//!
//! A month here runs from the day after one full moon to the next full moon:
//! the dark fortnight first, then the bright one ending on pūrṇamāsī. Each
//! month is cut into ṣaḍahas of six days. The moon and sun are stand-ins: a
//! full moon happens every `synodic_month_days` and a solstice (ayana) every
//! half `tropical_year_days`, both counted from a full moon and a winter
//! solstice at the very start of day 1. Day `d` covers the instant range
//! `(d - 1, d]`; an event is observed on the day containing it.
//!
//! When the full moon is observed on the 29th day the 30th is dropped, which
//! removes the last day of the fifth ṣaḍaha.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::tokens::fold_diacritics;
use super::CalendarError;

/// Fixed time divisions.
#[derive(Clone, Copy, Debug)]
pub struct TimeUnits;

impl TimeUnits {
    pub const MUHURTAS_PER_DAY: u32 = 30;
    pub const MUHURTAS_PER_HALF_DAY: u32 = 15;
    pub const PRATI_MUHURTAS_PER_MUHURTA: u32 = 15;
    pub const DAYS_PER_RITUAL_YEAR: u32 = 360;

    pub const fn muhurtas_per_ritual_year() -> u32 {
        Self::DAYS_PER_RITUAL_YEAR * Self::MUHURTAS_PER_DAY
    }

    /// Days and nights counted separately, one brick each.
    pub const fn days_and_nights_per_ritual_year() -> u32 {
        2 * Self::DAYS_PER_RITUAL_YEAR
    }
}

pub const YUGA_YEARS: u32 = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Paksha {
    /// Bright, waxing half.
    Sukla,
    /// Dark, waning half.
    Krsna,
}

impl fmt::Display for Paksha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Paksha::Sukla => "śukla",
            Paksha::Krsna => "kṛṣṇa",
        })
    }
}

impl FromStr for Paksha {
    type Err = CalendarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match fold_diacritics(s).as_str() {
            "sukla" | "shukla" | "bright" => Ok(Paksha::Sukla),
            "krsna" | "krishna" | "dark" => Ok(Paksha::Krsna),
            _ => Err(CalendarError::InvalidCount("paksha must be śukla or kṛṣṇa")),
        }
    }
}

/// Name of the `tithi`-th day of a fortnight. Only the first four and the
/// fifteenth have names; the rest are given as ordinals.
pub fn tithi_name(tithi: u32, paksha: Paksha) -> Result<String, CalendarError> {
    Ok(match (tithi, paksha) {
        (1, _) => "prathama".into(),
        (2, _) => "dviṭīya".into(),
        (3, _) => "trīṭīya".into(),
        (4, _) => "caturthī".into(),
        (5..=14, _) => format!("{tithi}th"),
        (15, Paksha::Sukla) => "pūrṇamāsī".into(),
        (15, Paksha::Krsna) => "amāvasyā".into(),
        _ => return Err(CalendarError::TithiOutOfRange(tithi)),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CalendarConfig {
    pub synodic_month_days: f64,
    pub tropical_year_days: f64,
}

impl Default for CalendarConfig {
    fn default() -> Self {
        CalendarConfig { synodic_month_days: 29.530589, tropical_year_days: 365.2422 }
    }
}

impl CalendarConfig {
    pub fn new(synodic_month_days: f64, tropical_year_days: f64) -> Result<Self, CalendarError> {
        if !(synodic_month_days.is_finite() && synodic_month_days > 0.0) {
            return Err(CalendarError::InvalidConfig("synodic_month_days must be positive"));
        }
        // an observer marks at most one ayana per day
        if !(tropical_year_days.is_finite() && tropical_year_days >= 2.0) {
            return Err(CalendarError::InvalidConfig("tropical_year_days must be at least 2"));
        }
        Ok(CalendarConfig { synodic_month_days, tropical_year_days })
    }

    pub fn to_text(&self) -> String {
        format!(
            "synodic_month_days = {}\ntropical_year_days = {}\n",
            self.synodic_month_days, self.tropical_year_days
        )
    }
}

/// `key = value` lines; `#` starts a comment. Missing keys keep their defaults.
impl FromStr for CalendarConfig {
    type Err = CalendarError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut cfg = CalendarConfig::default();
        let mut seen: Vec<&str> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| CalendarError::Config { line: i + 1, message };
            let (key, value) = line.split_once('=').ok_or_else(|| err("expected key = value".into()))?;
            let (key, value) = (key.trim(), value.trim());
            let number: f64 = value.parse().map_err(|_| err(format!("{value:?} is not a number")))?;
            let slot = match key {
                "synodic_month_days" => &mut cfg.synodic_month_days,
                "tropical_year_days" => &mut cfg.tropical_year_days,
                _ => return Err(err(format!("unknown key {key:?}"))),
            };
            if seen.contains(&key) {
                return Err(err(format!("duplicate key {key:?}")));
            }
            seen.push(key);
            *slot = number;
        }
        CalendarConfig::new(cfg.synodic_month_days, cfg.tropical_year_days)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ayana {
    /// Winter solstice: the sun turns north.
    Uttarayana,
    /// Summer solstice: the sun turns south.
    Dakshinayana,
}

/// What was observed on the current day.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct DayEvents {
    /// The month ends today; its length in days.
    pub month_closed: Option<u32>,
    /// Today is the 29th and the 30th will be skipped.
    pub dropped: bool,
    pub ayana: Option<Ayana>,
}

/// One day of the count. Values are immutable; [`CalendarState::step_day`]
/// returns the next day.
#[derive(Clone, Debug, PartialEq)]
pub struct CalendarState {
    config: CalendarConfig,
    day_index: u32,
    sadaha_day: u32,
    tithi: u32,
    paksha: Paksha,
    month_index: u32,
    yuga_year: u32,
    elapsed_days: u64,
    months_completed: u64,
    ayanas_observed: u64,
    events: DayEvents,
}

impl CalendarState {
    /// Day 1: the first dark tithi of the first month.
    pub fn new(config: CalendarConfig) -> Self {
        let mut s = CalendarState {
            config,
            day_index: 1,
            sadaha_day: 1,
            tithi: 1,
            paksha: Paksha::Krsna,
            month_index: 1,
            yuga_year: 1,
            elapsed_days: 1,
            months_completed: 0,
            ayanas_observed: 0,
            events: DayEvents::default(),
        };
        s.observe();
        s
    }

    pub fn config(&self) -> &CalendarConfig {
        &self.config
    }

    /// Day within the current twelve-month year, from 1.
    pub fn day_index(&self) -> u32 {
        self.day_index
    }

    pub fn sadaha_day(&self) -> u32 {
        self.sadaha_day
    }

    pub fn tithi(&self) -> u32 {
        self.tithi
    }

    pub fn paksha(&self) -> Paksha {
        self.paksha
    }

    pub fn month_index(&self) -> u32 {
        self.month_index
    }

    pub fn yuga_year(&self) -> u32 {
        self.yuga_year
    }

    pub fn year_label(&self) -> String {
        format!("year_{}", self.yuga_year)
    }

    /// Days counted so far, including today.
    pub fn elapsed_days(&self) -> u64 {
        self.elapsed_days
    }

    pub fn events(&self) -> DayEvents {
        self.events
    }

    pub fn tithi_name(&self) -> String {
        tithi_name(self.tithi, self.paksha).expect("tithi stays in range")
    }

    /// Position in the month, 1..=30.
    pub fn month_day(&self) -> u32 {
        match self.paksha {
            Paksha::Krsna => self.tithi,
            Paksha::Sukla => 15 + self.tithi,
        }
    }

    /// The ṣaḍaha of the month this day falls in, 1..=5.
    pub fn sadaha(&self) -> u32 {
        (self.month_day() - 1) / 6 + 1
    }

    fn next_full_moon(&self) -> f64 {
        (self.months_completed + 1) as f64 * self.config.synodic_month_days
    }

    fn next_ayana(&self) -> f64 {
        (self.ayanas_observed + 1) as f64 * self.config.tropical_year_days / 2.0
    }

    fn observe(&mut self) {
        let today = self.elapsed_days as f64;
        let md = self.month_day();
        let moon_seen = self.next_full_moon() <= today;
        self.events.dropped = md == 29 && moon_seen;
        self.events.month_closed = if md == 30 || self.events.dropped { Some(md) } else { None };
        self.events.ayana = None;
        if self.next_ayana() <= today {
            self.ayanas_observed += 1;
            self.events.ayana = Some(if self.ayanas_observed.is_multiple_of(2) {
                Ayana::Uttarayana
            } else {
                Ayana::Dakshinayana
            });
        }
    }

    pub fn step_day(&self) -> CalendarState {
        let mut next = self.clone();
        next.elapsed_days += 1;
        if self.events.month_closed.is_some() {
            next.months_completed += 1;
            next.tithi = 1;
            next.paksha = Paksha::Krsna;
            next.sadaha_day = 1;
            if self.month_index == 12 {
                next.month_index = 1;
                next.day_index = 1;
                next.yuga_year = self.yuga_year % YUGA_YEARS + 1;
            } else {
                next.month_index += 1;
                next.day_index += 1;
            }
        } else {
            let md = self.month_day() + 1;
            next.paksha = if md > 15 { Paksha::Sukla } else { Paksha::Krsna };
            next.tithi = (md - 1) % 15 + 1;
            next.sadaha_day = (md - 1) % 6 + 1;
            next.day_index += 1;
        }
        next.observe();
        next
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SimulationReport {
    /// Length of every month completed during the run.
    pub months: Vec<u32>,
    pub mean_month: Option<f64>,
    /// Days from each solstice to the next solstice of the same kind.
    pub year_lengths: Vec<u64>,
    pub drops: u64,
}

impl SimulationReport {
    pub fn histogram(&self) -> BTreeMap<u32, usize> {
        let mut h = BTreeMap::new();
        for m in &self.months {
            *h.entry(*m).or_insert(0) += 1;
        }
        h
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports always serialize")
    }
}

/// Upper bound on simulated days (about 27,000 years).
pub const MAX_SIMULATION_DAYS: u64 = 10_000_000;

pub fn simulate(config: CalendarConfig, n_days: u64) -> Result<SimulationReport, CalendarError> {
    if n_days == 0 {
        return Err(CalendarError::InvalidCount("n_days must be at least 1"));
    }
    if n_days > MAX_SIMULATION_DAYS {
        return Err(CalendarError::InvalidCount("n_days is too large"));
    }
    let mut state = CalendarState::new(config);
    let mut months = Vec::new();
    let mut drops = 0;
    let mut ayana_days: Vec<u64> = Vec::new();
    for day in 1..=n_days {
        if day > 1 {
            state = state.step_day();
        }
        let ev = state.events();
        if let Some(len) = ev.month_closed {
            months.push(len);
        }
        if ev.dropped {
            drops += 1;
        }
        if ev.ayana.is_some() {
            ayana_days.push(state.elapsed_days());
        }
    }
    let mean_month = if months.is_empty() {
        None
    } else {
        Some(months.iter().map(|&m| f64::from(m)).sum::<f64>() / months.len() as f64)
    };
    let year_lengths = ayana_days.windows(3).map(|w| w[2] - w[0]).collect();
    Ok(SimulationReport { months, mean_month, year_lengths, drops })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names() {
        assert_eq!(tithi_name(1, Paksha::Sukla).unwrap(), "prathama");
        assert_eq!(tithi_name(4, Paksha::Krsna).unwrap(), "caturthī");
        assert_eq!(tithi_name(15, Paksha::Krsna).unwrap(), "amāvasyā");
        assert_eq!(tithi_name(15, Paksha::Sukla).unwrap(), "pūrṇamāsī");
        assert_eq!(tithi_name(11, Paksha::Sukla).unwrap(), "11th");
        assert!(tithi_name(0, Paksha::Sukla).is_err());
        assert!(tithi_name(16, Paksha::Sukla).is_err());
    }

    #[test]
    fn ritual_year_units() {
        assert_eq!(TimeUnits::muhurtas_per_ritual_year(), 10_800);
        assert_eq!(TimeUnits::days_and_nights_per_ritual_year(), 720);
        assert_eq!(
            TimeUnits::days_and_nights_per_ritual_year() * TimeUnits::MUHURTAS_PER_HALF_DAY,
            TimeUnits::muhurtas_per_ritual_year()
        );
    }

    #[test]
    fn config_text() {
        let c: CalendarConfig = "# moon only\nsynodic_month_days = 30\n\n".parse().unwrap();
        assert_eq!(c, CalendarConfig { synodic_month_days: 30.0, tropical_year_days: 365.2422 });
        assert_eq!(c.to_text().parse::<CalendarConfig>().unwrap(), c);
        assert!(matches!("bogus = 1".parse::<CalendarConfig>(), Err(CalendarError::Config { line: 1, .. })));
        assert!("synodic_month_days = 1\nsynodic_month_days = 2".parse::<CalendarConfig>().is_err());
        assert!("synodic_month_days".parse::<CalendarConfig>().is_err());
        assert!("synodic_month_days = -3".parse::<CalendarConfig>().is_err());
        assert!("tropical_year_days = NaN".parse::<CalendarConfig>().is_err());
    }

    #[test]
    fn thirty_day_moon_never_drops() {
        let r = simulate(CalendarConfig::new(30.0, 365.2422).unwrap(), 3600).unwrap();
        assert_eq!(r.drops, 0);
        assert_eq!(r.months.len(), 120);
        assert!(r.months.iter().all(|&m| m == 30));
    }

    #[test]
    fn month_walk() {
        let mut s = CalendarState::new(CalendarConfig::new(30.0, 365.2422).unwrap());
        assert_eq!((s.tithi(), s.paksha(), s.sadaha_day()), (1, Paksha::Krsna, 1));
        let mut sadaha_starts = 0;
        for _ in 0..29 {
            if s.sadaha_day() == 1 {
                sadaha_starts += 1;
            }
            let n = s.step_day();
            if s.sadaha_day() == 6 {
                assert_eq!(n.sadaha_day(), 1);
            }
            s = n;
        }
        assert_eq!(sadaha_starts, 5);
        assert_eq!((s.tithi(), s.paksha(), s.tithi_name()), (15, Paksha::Sukla, "pūrṇamāsī".to_string()));
        assert_eq!(s.events().month_closed, Some(30));
        let s = s.step_day();
        assert_eq!((s.month_index(), s.month_day(), s.day_index()), (2, 1, 31));
    }

    #[test]
    fn default_moon_drops_some_days() {
        let r = simulate(CalendarConfig::default(), 3000).unwrap();
        assert!(r.drops > 0);
        assert!(r.months.iter().all(|&m| m == 29 || m == 30));
        assert_eq!(r.histogram().get(&29).copied().unwrap_or(0) as u64, r.drops);
    }

    #[test]
    fn report_json_keys() {
        let r = simulate(CalendarConfig::default(), 800).unwrap();
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        for k in ["months", "mean_month", "year_lengths", "drops"] {
            assert!(v.get(k).is_some());
        }
        assert!(simulate(CalendarConfig::default(), 0).is_err());
    }
}
