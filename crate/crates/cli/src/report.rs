use std::time::Duration;

use pants_core::lattice::SubsetK;
use pants_core::Rational;
use serde::Serialize;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

/// A precondition or usage problem; exits with code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

#[derive(Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

pub struct Report {
    pub command: &'static str,
    pub parameters: Map<String, Value>,
    pub results: Map<String, Value>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report { command, parameters: Map::new(), results: Map::new(), checks: Vec::new() }
    }

    pub fn param(&mut self, key: &str, v: impl Into<Value>) {
        self.parameters.insert(key.into(), v.into());
    }

    pub fn result(&mut self, key: &str, v: impl Into<Value>) {
        self.results.insert(key.into(), v.into());
    }

    pub fn check(&mut self, name: &str, passed: bool, detail: Option<String>) {
        self.checks.push(Check { name: name.into(), passed, detail });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn config_hash(&self) -> String {
        let canonical = json!({
            "command": self.command,
            "parameters": self.parameters,
            "version": env!("CARGO_PKG_VERSION"),
        });
        let digest = Sha256::digest(canonical.to_string().as_bytes());
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn to_json(&self, wall: Duration) -> Value {
        exact_integers(json!({
            "command": self.command,
            "parameters": self.parameters,
            "results": self.results,
            "checks": self.checks,
            "passed": self.passed(),
            "provenance": {
                "tool_version": env!("CARGO_PKG_VERSION"),
                "config_hash": self.config_hash(),
                "wall_time_ms": int(wall.as_millis() as i64),
            },
        }))
    }

    pub fn summary(&self) -> String {
        let failed: Vec<&str> = self.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
        if failed.is_empty() {
            format!("{}: {} checks passed", self.command, self.checks.len())
        } else {
            format!("{}: FAILED {}", self.command, failed.join(", "))
        }
    }
}

pub fn rat(r: &Rational) -> Value {
    Value::String(r.to_fraction_string())
}

pub fn int(i: i64) -> Value {
    rat(&Rational::from_integer(i))
}

pub fn count(i: usize) -> Value {
    int(i as i64)
}

pub fn subset(k: SubsetK) -> Value {
    Value::String(k.to_string())
}

/// A float from a geometric computation, paired with the tolerance it was judged by.
pub fn float(x: f64, tol: f64) -> Value {
    json!({ "value": x, "tolerance": tol })
}

/// Every JSON integer rendered as `"k/1"`; floats are left alone.
pub fn exact_integers(v: Value) -> Value {
    match v {
        Value::Number(x) if x.is_i64() || x.is_u64() => Value::String(format!("{x}/1")),
        Value::Array(a) => Value::Array(a.into_iter().map(exact_integers).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, x)| (k, exact_integers(x))).collect()),
        other => other,
    }
}

/// Inverse of [`exact_integers`] on the integer-typed fields of a model file.
pub fn model_integers(v: Value) -> Value {
    const KEYS: [&str; 7] = ["n", "degree", "weight", "subset", "inputs", "output", "order"];
    fn plain(v: Value) -> Value {
        match v {
            Value::String(s) => match s.strip_suffix("/1").and_then(|t| t.parse::<i64>().ok()) {
                Some(i) => Value::from(i),
                None => Value::String(s),
            },
            Value::Array(a) => Value::Array(a.into_iter().map(plain).collect()),
            other => other,
        }
    }
    match v {
        Value::Array(a) => Value::Array(a.into_iter().map(model_integers).collect()),
        Value::Object(o) => Value::Object(
            o.into_iter()
                .map(|(k, x)| {
                    let x = if KEYS.contains(&k.as_str()) { plain(x) } else { model_integers(x) };
                    (k, x)
                })
                .collect(),
        ),
        other => other,
    }
}
