//! Text and JSON renderings of a finished run.

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use hookforge_core::identity::{ParamValue, VerificationReport};

use crate::jobs::TimedReport;

struct Params<'a>(&'a [(&'static str, ParamValue)]);

impl Serialize for Params<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0 {
            match v {
                ParamValue::Int(i) => map.serialize_entry(k, i)?,
                ParamValue::Text(t) => map.serialize_entry(k, t)?,
            }
        }
        map.end()
    }
}

/// One JSON record; `millis` is `null` unless timings were requested.
struct Record<'a> {
    report: &'a VerificationReport,
    millis: Option<u64>,
}

impl Serialize for Record<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Record", 5)?;
        st.serialize_field("check", self.report.check)?;
        st.serialize_field("params", &Params(&self.report.params))?;
        st.serialize_field("verdict", self.report.verdict.as_str())?;
        st.serialize_field("witness", &self.report.witness)?;
        st.serialize_field("millis", &self.millis)?;
        st.end()
    }
}

pub fn render_json(reports: &[TimedReport], timings: bool) -> String {
    let records: Vec<Record<'_>> = reports
        .iter()
        .map(|t| Record {
            report: &t.report,
            millis: timings.then_some(t.millis),
        })
        .collect();
    let mut out = serde_json::to_string_pretty(&records).expect("reports serialize");
    out.push('\n');
    out
}

pub fn render_text(reports: &[TimedReport], timings: bool) -> String {
    let mut out = String::new();
    let width = reports.iter().map(|t| t.report.check.len()).max().unwrap_or(0);
    for t in reports {
        let r = &t.report;
        let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        out.push_str(&format!("{:<4}  {:<width$}  {}", r.verdict.as_str(), r.check, params.join(" ")));
        if timings {
            out.push_str(&format!("  ({} ms)", t.millis));
        }
        out.push('\n');
        if let Some(w) = &r.witness {
            out.push_str(&format!("      witness: {w}\n"));
        }
    }
    let failed = reports.iter().filter(|t| !t.report.passed()).count();
    out.push_str(&format!("{} checks, {} passed, {} failed\n", reports.len(), reports.len() - failed, failed));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Vec<TimedReport> {
        vec![
            TimedReport {
                report: VerificationReport::pass("lemma1").param("n", 3usize).param("cases", 3usize),
                millis: 4,
            },
            TimedReport {
                report: VerificationReport::pass("prop3").param("n", 2usize).fail("a=[1,1]: boom".into()),
                millis: 1,
            },
        ]
    }

    #[test]
    fn json_schema() {
        let v: serde_json::Value = serde_json::from_str(&render_json(&sample(), false)).unwrap();
        let first = &v[0];
        assert_eq!(first["check"], "lemma1");
        assert_eq!(first["params"]["n"], 3);
        assert_eq!(first["verdict"], "pass");
        assert!(first["witness"].is_null());
        assert!(first["millis"].is_null());
        assert_eq!(v[1]["witness"], "a=[1,1]: boom");
        let timed: serde_json::Value = serde_json::from_str(&render_json(&sample(), true)).unwrap();
        assert_eq!(timed[0]["millis"], 4);
    }

    #[test]
    fn text_summary() {
        let text = render_text(&sample(), false);
        assert!(text.contains("pass  lemma1  n=3 cases=3"));
        assert!(text.contains("witness: a=[1,1]: boom"));
        assert!(text.ends_with("2 checks, 1 passed, 1 failed\n"));
    }
}
