use serde::Serialize;

/// Outcome of one law check: how many samples ran, how many failed, and the
/// first counterexample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub law: String,
    pub samples: usize,
    pub failures: usize,
    pub counterexample: Option<String>,
}

impl LawReport {
    pub fn new(law: impl Into<String>) -> Self {
        LawReport { law: law.into(), samples: 0, failures: 0, counterexample: None }
    }

    /// Records one sample; `failure` describes it when it failed.
    pub fn record(&mut self, failure: Option<String>) {
        self.samples += 1;
        if let Some(msg) = failure {
            self.failures += 1;
            self.counterexample.get_or_insert(msg);
        }
    }

    pub fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.record((!ok).then(describe));
    }

    /// Folds another report into this one, keeping the earliest counterexample.
    pub fn merge(&mut self, other: LawReport) {
        self.samples += other.samples;
        self.failures += other.failures;
        if self.counterexample.is_none() {
            self.counterexample = other.counterexample;
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("plain struct")
    }
}
