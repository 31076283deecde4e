//! Report types and their JSON form. Rationals are serialized as exact
//! numerator/denominator strings, never floats.

use serde::{Deserialize, Serialize};

use sector_core::poly::Rat;

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Params {
    pub imax: i64,
    pub nmax: usize,
    pub seed: u64,
}

impl Default for Params {
    fn default() -> Params {
        Params { imax: 21, nmax: 8, seed: 0 }
    }
}

/// Exact rational as strings.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RatJson {
    pub num: String,
    pub den: String,
}

impl From<&Rat> for RatJson {
    fn from(r: &Rat) -> RatJson {
        RatJson { num: r.numer().to_string(), den: r.denom().to_string() }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub details: String,
}

impl CheckResult {
    pub fn new(name: impl Into<String>, passed: bool, details: impl Into<String>) -> CheckResult {
        CheckResult { name: name.into(), passed, details: details.into() }
    }
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Passing, with a note the reader should see.
    Flagged,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct LemmaReport {
    pub id: String,
    pub title: String,
    pub checks: Vec<CheckResult>,
    pub passed_count: usize,
    pub failed_count: usize,
    pub status: Status,
}

impl LemmaReport {
    pub fn new(id: &str, title: &str, checks: Vec<CheckResult>, flagged: bool) -> LemmaReport {
        let passed_count = checks.iter().filter(|c| c.passed).count();
        let failed_count = checks.len() - passed_count;
        let status = if failed_count > 0 {
            Status::Fail
        } else if flagged {
            Status::Flagged
        } else {
            Status::Pass
        };
        LemmaReport {
            id: id.into(),
            title: title.into(),
            checks,
            passed_count,
            failed_count,
            status,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Flag {
    pub id: String,
    pub note: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct VerificationReport {
    pub parameters: Params,
    pub lemmas: Vec<LemmaReport>,
    pub pairing_matrix: Vec<Vec<RatJson>>,
    pub flags: Vec<Flag>,
    pub elapsed_ms: u128,
    pub overall: Status,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        matches!(self.overall, Status::Pass | Status::Flagged)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use sector_core::poly::ratio;

    #[test]
    fn rat_json_is_exact() {
        let r = ratio(-7, 3);
        let j = RatJson::from(&r);
        assert_eq!(j.num, "-7");
        assert_eq!(j.den, "3");
    }

    #[test]
    fn report_roundtrips_through_json() {
        let report = VerificationReport {
            parameters: Params::default(),
            lemmas: vec![LemmaReport::new(
                "example",
                "Example",
                vec![CheckResult::new("one", true, "fine")],
                false,
            )],
            pairing_matrix: vec![vec![RatJson::from(&ratio(-2, 1))]],
            flags: vec![],
            elapsed_ms: 5,
            overall: Status::Pass,
        };
        let text = serde_json::to_string_pretty(&report).unwrap();
        let back: VerificationReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
    }
}
