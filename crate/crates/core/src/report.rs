use serde::Serialize;

/// Outcome of a single named check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub check: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Checks(Vec<Check>);

impl Checks {
    pub fn new() -> Checks {
        Checks::default()
    }

    pub fn record(&mut self, name: &str, outcome: Result<(), String>) {
        self.0.push(Check {
            check: name.to_string(),
            passed: outcome.is_ok(),
            witness: outcome.err(),
        });
    }

    pub fn expect(&mut self, name: &str, ok: bool, witness: impl FnOnce() -> String) {
        self.record(name, if ok { Ok(()) } else { Err(witness()) });
    }

    pub fn all_passed(&self) -> bool {
        self.0.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.0.iter().find(|c| c.check == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.0.iter().filter(|c| !c.passed)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Check> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}
