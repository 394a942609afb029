//! The computational part of an invocation: everything that determines the
//! payload, and nothing that only affects where or how it is written.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JobSpec {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub level: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub basis: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub mode: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub max_weight: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub terms: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub form: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub weight: Option<u32>,
}

impl JobSpec {
    pub fn new(command: &str) -> JobSpec {
        JobSpec {
            command: command.to_string(),
            level: None,
            basis: None,
            mode: None,
            max_weight: None,
            terms: None,
            form: None,
            weight: None,
        }
    }

    /// Cache key: the artifact version and the job, as compact JSON.
    pub fn cache_key(&self) -> String {
        #[derive(Serialize)]
        struct Key<'a> {
            version: &'a str,
            job: &'a JobSpec,
        }
        serde_json::to_string(&Key {
            version: crate::envelope::VERSION,
            job: self,
        })
        .expect("job spec serializes")
    }
}
