use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        }
    }
}

/// A parameter value recorded on a report. Integers sort numerically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ParamValue {
    Int(i64),
    Text(String),
}

impl From<i64> for ParamValue {
    fn from(v: i64) -> Self {
        ParamValue::Int(v)
    }
}

impl From<usize> for ParamValue {
    fn from(v: usize) -> Self {
        ParamValue::Int(v as i64)
    }
}

impl From<u64> for ParamValue {
    fn from(v: u64) -> Self {
        ParamValue::Int(v as i64)
    }
}

impl From<String> for ParamValue {
    fn from(v: String) -> Self {
        ParamValue::Text(v)
    }
}

impl From<&str> for ParamValue {
    fn from(v: &str) -> Self {
        ParamValue::Text(String::from(v))
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(v) => write!(f, "{v}"),
            ParamValue::Text(s) => f.write_str(s),
        }
    }
}

/// Outcome of one identity check.
///
/// A failing report always carries a witness naming the offending input
/// (shape, `n`, or sample point) together with both computed sides, enough
/// to rerun the failing case from the report alone. Timing is added by the
/// caller.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VerificationReport {
    pub check: &'static str,
    pub params: Vec<(&'static str, ParamValue)>,
    pub verdict: Verdict,
    pub witness: Option<String>,
}

impl VerificationReport {
    pub fn pass(check: &'static str) -> Self {
        VerificationReport {
            check,
            params: Vec::new(),
            verdict: Verdict::Pass,
            witness: None,
        }
    }

    pub fn param(mut self, key: &'static str, value: impl Into<ParamValue>) -> Self {
        self.params.push((key, value.into()));
        self
    }

    /// Marks the report failed with `witness`.
    pub fn fail(mut self, witness: String) -> Self {
        self.verdict = Verdict::Fail;
        self.witness = Some(witness);
        self
    }

    /// Fails with `witness()` unless `ok`; the witness is only built on failure.
    pub fn ensure(self, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            self
        } else {
            self.fail(witness())
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.verdict.as_str(), self.check)?;
        for (k, v) in &self.params {
            write!(f, " {k}={v}")?;
        }
        if let Some(w) = &self.witness {
            write!(f, " witness: {w}")?;
        }
        Ok(())
    }
}
