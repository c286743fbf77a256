//! JSON file formats.
//!
//! Arrangement class:
//!
//! ```json
//! { "components": [ {"degree": 1, "count": 21} ], "t": { "3": 28, "4": 21 } }
//! ```
//!
//! Line arrangement: `{ "lines": [ [a, b, c], ... ] }` with integer or `"p/q"` entries.
//!
//! Rationals in reports are always strings (`"p/q"`, or `"p"` for integers).

use std::collections::BTreeMap;

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};
use serde_json::Value;

use crate::arrangement::{ArrangementClass, ComponentGroup, ComponentSpec, TVector};
use crate::error::{Error, Result};
use crate::geometry::ProjectiveLine;
use crate::inequalities::{Audit, InequalityId, InequalityReport};
use crate::orbifold::{AlphaInterval, LmyReport};
use crate::rational::Rational;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupFile {
    degree: u64,
    count: u64,
}

struct TFile<'a>(&'a TVector);

impl Serialize for TFile<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(None)?;
        for (r, n) in self.0.iter() {
            map.serialize_entry(&r.to_string(), &n)?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct ClassFileOut<'a> {
    components: Vec<GroupFile>,
    t: TFile<'a>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ClassFileIn {
    components: Vec<GroupFile>,
    t: BTreeMap<String, u64>,
}

fn class_to_file(a: &ArrangementClass) -> ClassFileOut<'_> {
    ClassFileOut {
        components: a.components.groups().iter().map(|g| GroupFile { degree: g.degree, count: g.count }).collect(),
        t: TFile(&a.t),
    }
}

fn json_err(e: serde_json::Error) -> Error {
    Error::Format(format!("{e}"))
}

fn class_from_file(f: ClassFileIn) -> Result<ArrangementClass> {
    let groups = f.components.into_iter().map(|g| ComponentGroup { degree: g.degree, count: g.count }).collect();
    let components = ComponentSpec::new(groups)?;
    let mut t = TVector::new();
    for (key, n) in f.t {
        let r: u64 = key
            .parse()
            .ok()
            .filter(|_| key.bytes().all(|b| b.is_ascii_digit()))
            .ok_or_else(|| Error::Format(format!("multiplicity key {key:?} is not a decimal integer")))?;
        t.add(r, n)?;
    }
    Ok(ArrangementClass::new(components, t))
}

/// Pretty-printed arrangement-class JSON with a trailing newline.
pub fn class_to_json(a: &ArrangementClass) -> String {
    let mut s = serde_json::to_string_pretty(&class_to_file(a)).expect("serializable");
    s.push('\n');
    s
}

/// Single-line arrangement-class JSON.
pub fn class_to_json_line(a: &ArrangementClass) -> String {
    serde_json::to_string(&class_to_file(a)).expect("serializable")
}

pub fn class_to_value(a: &ArrangementClass) -> Value {
    serde_json::to_value(class_to_file(a)).expect("serializable")
}

pub fn class_from_json(s: &str) -> Result<ArrangementClass> {
    class_from_file(serde_json::from_str(s).map_err(json_err)?)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LinesFile {
    lines: Vec<[Value; 3]>,
}

fn coefficient(v: &Value) -> Result<Rational> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rational::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(Rational::from(u))
            } else {
                Err(Error::Format(format!("coefficient {n} is not an integer; use a \"p/q\" string")))
            }
        }
        Value::String(s) => Ok(s.parse()?),
        other => Err(Error::Format(format!("coefficient {other} must be an integer or \"p/q\" string"))),
    }
}

/// Parses a line file; each line is cleared to its primitive integer form.
pub fn lines_from_json(s: &str) -> Result<Vec<ProjectiveLine>> {
    let f: LinesFile = serde_json::from_str(s).map_err(json_err)?;
    f.lines
        .iter()
        .map(|[a, b, c]| ProjectiveLine::from_rationals([coefficient(a)?, coefficient(b)?, coefficient(c)?]))
        .collect()
}

pub fn lines_to_json(lines: &[ProjectiveLine]) -> String {
    let rows: Vec<Vec<String>> =
        lines.iter().map(|l| l.coefficients().iter().map(|c| c.to_string()).collect()).collect();
    let v = serde_json::json!({ "lines": rows });
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

/// Wire form of an [`InequalityReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportRecord {
    pub id: String,
    pub applicable: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lhs: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub slack: Option<Rational>,
    pub equality: bool,
}

impl From<&InequalityReport> for ReportRecord {
    fn from(r: &InequalityReport) -> Self {
        Self {
            id: r.id.to_string(),
            applicable: r.applicable,
            reason: r.reason.clone(),
            lhs: r.lhs.clone(),
            rhs: r.rhs.clone(),
            slack: r.slack.clone(),
            equality: r.equality,
        }
    }
}

impl TryFrom<ReportRecord> for InequalityReport {
    type Error = Error;

    fn try_from(r: ReportRecord) -> Result<Self> {
        let id: InequalityId = r.id.parse()?;
        Ok(Self {
            id,
            applicable: r.applicable,
            reason: r.reason,
            lhs: r.lhs,
            rhs: r.rhs,
            slack: r.slack,
            equality: r.equality,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdentityRecord {
    pub valid: bool,
    /// `sum_r t_r C(r,2)` as a decimal string.
    pub incidences: String,
    /// `sum_{i<j} d_i d_j` as a decimal string.
    pub pairs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IntervalRecord {
    Interval(AlphaInterval),
    Empty(AlphaInterval),
}

/// Wire form of an [`Audit`], optionally extended with the checks at a chosen weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AuditRecord {
    pub identity: IdentityRecord,
    pub alpha_interval: IntervalRecord,
    pub reports: Vec<ReportRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<AlphaRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlphaRecord {
    pub alpha: Rational,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(default)]
    pub reports: Vec<ReportRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lmy: Option<LmyReport>,
}

impl From<&Audit> for AuditRecord {
    fn from(a: &Audit) -> Self {
        Self {
            identity: IdentityRecord {
                valid: a.identity_valid,
                incidences: a.incidences.to_string(),
                pairs: a.pairs.to_string(),
            },
            alpha_interval: match &a.alpha_interval {
                Ok(i) => IntervalRecord::Interval(i.clone()),
                Err(Error::EmptyAlphaInterval(i)) => IntervalRecord::Empty((**i).clone()),
                Err(e) => unreachable!("alpha_interval only fails as empty: {e}"),
            },
            reports: a.reports.iter().map(ReportRecord::from).collect(),
            alpha: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::inequalities::audit;
    use crate::rational::q;

    #[test]
    fn class_file_layout() {
        let klein = catalog("klein", &[]).unwrap();
        assert_eq!(class_to_json_line(&klein), r#"{"components":[{"degree":1,"count":21}],"t":{"3":28,"4":21}}"#);
        // numeric, not lexicographic, key order
        let f10 = catalog("fermat", &[10]).unwrap();
        assert!(class_to_json_line(&f10).ends_with(r#""t":{"3":100,"10":3}}"#));
        assert_eq!(class_from_json(&class_to_json(&f10)).unwrap(), f10);
    }

    #[test]
    fn class_file_errors() {
        let err = class_from_json("{\"components\": [], \"t\": {}}").unwrap_err();
        assert_eq!(err, Error::NoComponents);
        let err = class_from_json("{\"components\": [{\"degree\": 1, \"count\": 3}], \"t\": {\"1\": 2}}").unwrap_err();
        assert_eq!(err, Error::Multiplicity(1));
        let err = class_from_json("{\"components\": [{\"degree\": 1, \"count\": 3}], \"t\": {\"x\": 2}}").unwrap_err();
        assert!(matches!(err, Error::Format(_)));
        let err = class_from_json("{\"components\": [\n{\"degree\": 1,}]}").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
        let err = class_from_json("{\"components\": [{\"degree\": 1, \"count\": 3}], \"t\": {\"2\": -1}}").unwrap_err();
        assert!(matches!(err, Error::Format(_)));
    }

    #[test]
    fn zero_counts_dropped_on_load() {
        let a =
            class_from_json("{\"components\": [{\"degree\": 1, \"count\": 3}], \"t\": {\"2\": 3, \"3\": 0}}").unwrap();
        assert_eq!(a.t.iter().collect::<Vec<_>>(), vec![(2, 3)]);
    }

    #[test]
    fn lines_file() {
        let lines = lines_from_json(r#"{"lines": [[1, 0, 0], ["1/2", "-1/3", 0], [0, "2", 4]]}"#).unwrap();
        assert_eq!(lines[1], ProjectiveLine::new(3, -2, 0).unwrap());
        assert_eq!(lines[2], ProjectiveLine::new(0, 1, 2).unwrap());
        assert_eq!(lines_from_json(&lines_to_json(&lines)).unwrap(), lines);
        assert!(lines_from_json(r#"{"lines": [[1.5, 0, 0]]}"#).is_err());
        assert!(lines_from_json(r#"{"lines": [[0, 0, 0]]}"#).is_err());
        assert!(lines_from_json(r#"{"lines": [[1, 0]]}"#).is_err());
    }

    #[test]
    fn report_records_round_trip() {
        let a = audit(&catalog("icosahedron", &[]).unwrap());
        let rec = AuditRecord::from(&a);
        let text = serde_json::to_string(&rec).unwrap();
        let back: AuditRecord = serde_json::from_str(&text).unwrap();
        assert_eq!(back, rec);
        let reports: Vec<InequalityReport> = back.reports.into_iter().map(|r| r.try_into().unwrap()).collect();
        assert_eq!(reports, a.reports);
        assert!(text.contains("\"lhs\":\"45/2\""));
        assert_eq!(rec.alpha_interval, IntervalRecord::Interval(AlphaInterval { lo: q(1, 5), hi: q(2, 5) }));
    }
}
