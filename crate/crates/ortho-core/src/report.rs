//! Check reports: one named verdict per check, rendered as stable text or
//! JSON with identical verdicts.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Unsupported,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail => write!(f, "fail"),
            Verdict::Unsupported => write!(f, "unsupported"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub verdict: Verdict,
    /// Witness values on failure; summary statistics on success.
    pub detail: String,
}

impl CheckResult {
    pub fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            verdict: Verdict::Pass,
            detail: detail.into(),
        }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            verdict: Verdict::Fail,
            detail: detail.into(),
        }
    }

    pub fn unsupported(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            verdict: Verdict::Unsupported,
            detail: detail.into(),
        }
    }

    /// Folds an optional counterexample into a verdict.
    pub fn from_counterexample(
        name: impl Into<String>,
        counterexample: Option<String>,
        pass_detail: impl Into<String>,
    ) -> Self {
        match counterexample {
            None => Self::pass(name, pass_detail),
            Some(witness) => Self::fail(name, witness),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: CheckResult) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = CheckResult>) {
        self.checks.extend(checks);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.verdict == Verdict::Pass)
    }

    /// 0 all-pass, 1 check failure, 3 unsupported instance.
    pub fn exit_code(&self) -> i32 {
        if self
            .checks
            .iter()
            .any(|c| c.verdict == Verdict::Unsupported)
        {
            3
        } else if self.checks.iter().any(|c| c.verdict == Verdict::Fail) {
            1
        } else {
            0
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("== {}\n", self.command);
        for c in &self.checks {
            if c.detail.is_empty() {
                out.push_str(&format!("{}: {}\n", c.name, c.verdict));
            } else {
                out.push_str(&format!("{}: {} ({})\n", c.name, c.verdict, c.detail));
            }
        }
        let overall = if self.all_pass() { "ok" } else { "FAILED" };
        out.push_str(&format!("== {overall}\n"));
        out
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("reports serialize");
        out.push('\n');
        out
    }
}
