use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// The command produced data rather than deciding a property.
    Output,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Output => "output",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Fail => 1,
            Verdict::Pass | Verdict::Output => 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub check: String,
    pub verdict: Verdict,
    pub details: Value,
    pub provenance: String,
}

impl Report {
    pub fn new(check: &str, verdict: Verdict, details: Value, provenance: &str) -> Self {
        Report { check: check.to_string(), verdict, details, provenance: provenance.to_string() }
    }

    pub fn to_value(&self) -> Value {
        json!({
            "check": self.check,
            "verdict": self.verdict.as_str(),
            "details": self.details,
            "provenance": self.provenance,
        })
    }

    /// Pretty JSON with keys sorted at every level.
    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("reports serialize");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_are_sorted() {
        let r = Report::new("demo", Verdict::Pass, json!({"zeta": 1, "alpha": [2]}), "inline");
        let text = r.render();
        let order: Vec<usize> = ["\"check\"", "\"details\"", "\"alpha\"", "\"zeta\"", "\"provenance\"", "\"verdict\""]
            .iter()
            .map(|k| text.find(k).unwrap())
            .collect();
        assert!(order.windows(2).all(|w| w[0] < w[1]), "{text}");
        assert_eq!(r.render(), text);
    }
}
