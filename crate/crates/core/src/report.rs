use serde::{Deserialize, Serialize};

/// One named sub-check of a certificate.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    /// Exact value, printed as a fraction or `a + b√5`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub approx: Option<f64>,
    #[serde(skip_serializing_if = "String::is_empty", default)]
    pub note: String,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool) -> Self {
        Check {
            name: name.into(),
            pass,
            exact: None,
            approx: None,
            note: String::new(),
        }
    }

    pub fn exact(mut self, value: impl Into<String>) -> Self {
        self.exact = Some(value.into());
        self
    }

    pub fn approx(mut self, value: f64) -> Self {
        self.approx = Some(value);
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }
}

/// Verdict of a lemma or audit verifier. `pass` is the conjunction of the
/// sub-checks in `details`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub lemma: String,
    pub parameter: Option<i64>,
    pub pass: bool,
    pub details: Vec<Check>,
}

impl CertificateReport {
    pub fn new(lemma: impl Into<String>, parameter: Option<i64>, details: Vec<Check>) -> Self {
        let pass = !details.is_empty() && details.iter().all(|c| c.pass);
        CertificateReport {
            lemma: lemma.into(),
            parameter,
            pass,
            details,
        }
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.details.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.details.iter().filter(|c| !c.pass)
    }
}
