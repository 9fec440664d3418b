//! Text and JSON renderings of reports and certificates.

use std::fmt::Write as _;

use hyperplane_core::reduction::Condition;
use hyperplane_core::{BigCount, GreenReport, ReductionCertificate, Verification};
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

/// Exact count on the wire: a JSON number when it fits in 64 bits, a decimal
/// string otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Count(pub BigCount);

impl From<&BigCount> for Count {
    fn from(v: &BigCount) -> Self {
        Count(v.clone())
    }
}

impl Serialize for Count {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match u64::try_from(&self.0) {
            Ok(v) => serializer.serialize_u64(v),
            Err(_) => serializer.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Count {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct CountVisitor;
        impl Visitor<'_> for CountVisitor {
            type Value = Count;
            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("a non-negative integer or decimal string")
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Count, E> {
                Ok(Count(BigCount::from(v)))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Count, E> {
                v.parse::<BigCount>().map(Count).map_err(E::custom)
            }
        }
        deserializer.deserialize_any(CountVisitor)
    }
}

/// Wire form of [`GreenReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GreenRecord {
    pub n: usize,
    pub p: u64,
    pub d: u32,
    pub r: u32,
    pub dim: Count,
    pub bound: Count,
    pub trial_dims: Vec<Count>,
    pub min_dim: Count,
    pub pass: bool,
    pub seed: u64,
}

impl From<&GreenReport> for GreenRecord {
    fn from(r: &GreenReport) -> Self {
        Self {
            n: r.n,
            p: r.p,
            d: r.d,
            r: r.r,
            dim: Count::from(&r.dim),
            bound: Count::from(&r.bound),
            trial_dims: r.trial_dims.iter().map(Count::from).collect(),
            min_dim: Count::from(&r.min_dim),
            pass: r.pass,
            seed: r.seed,
        }
    }
}

fn join_counts(values: &[BigCount]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

/// Flat `key = value` block. Failing reports also list the sampled forms.
pub fn green_text(command: &str, report: &GreenReport, trials: u32) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "command = {command}");
    let _ = writeln!(s, "n = {}", report.n);
    let _ = writeln!(s, "p = {}", report.p);
    let _ = writeln!(s, "generators = {}", report.generators);
    let _ = writeln!(s, "d = {}", report.d);
    let _ = writeln!(s, "r = {}", report.r);
    let _ = writeln!(s, "trials = {trials}");
    let _ = writeln!(s, "seed = {}", report.seed);
    let _ = writeln!(s, "dim = {}", report.dim);
    let _ = writeln!(s, "bound = {}", report.bound);
    let _ = writeln!(s, "trial_dims = [{}]", join_counts(&report.trial_dims));
    let _ = writeln!(s, "min_dim = {}", report.min_dim);
    let _ = writeln!(s, "pass = {}", report.pass);
    if !report.pass {
        for (t, forms) in report.forms.iter().enumerate() {
            let rendered: Vec<String> = forms.iter().map(|f| format!("{:?}", f.coeffs())).collect();
            let _ = writeln!(s, "forms.{t} = {}", rendered.join(" "));
        }
    }
    s
}

/// Wire form of [`ReductionCertificate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateRecord {
    pub mode: String,
    pub i: u32,
    pub r: u32,
    /// Forms in the input polynomial grammar.
    pub forms: Vec<String>,
    pub seed: u64,
    pub verified: bool,
}

impl CertificateRecord {
    pub fn new(cert: &ReductionCertificate, names: &[String], verified: bool) -> Self {
        Self {
            mode: cert.mode.as_str().to_owned(),
            i: cert.i,
            r: cert.r,
            forms: cert.forms.iter().map(|f| f.format_with(names)).collect(),
            seed: cert.seed,
            verified,
        }
    }
}

pub fn certificate_text(
    command: &str,
    cert: &ReductionCertificate,
    names: &[String],
    p: u64,
    condition: &Condition,
    verified: bool,
) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "command = {command}");
    let _ = writeln!(s, "mode = {}", cert.mode.as_str());
    let _ = writeln!(s, "p = {p}");
    let _ = writeln!(s, "i = {}", cert.i);
    let _ = writeln!(s, "r = {}", cert.r);
    let _ = writeln!(s, "seed = {}", cert.seed);
    let _ = writeln!(s, "trial = {}", cert.trial);
    let _ = writeln!(s, "dim = {}", condition.dim);
    let _ = writeln!(s, "threshold = {}", condition.threshold);
    for (j, form) in cert.forms.iter().enumerate() {
        let _ = writeln!(s, "form.{} = {}", j + 1, form.format_with(names));
    }
    match &cert.verification {
        Verification::Annihilated { dim } => {
            let _ = writeln!(s, "quotient_dim = {dim}");
        }
        Verification::Membership { witnesses } => {
            for (j, c) in cert.combinations.iter().enumerate() {
                let _ = writeln!(s, "combination.{} = {:?}", j + 1, c);
            }
            let _ = writeln!(s, "witnesses = {}", witnesses.len());
        }
    }
    let _ = writeln!(s, "verified = {verified}");
    s
}

/// Result of a brute-force reduction search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleRecord {
    pub q: u64,
    pub i: u32,
    pub r: u32,
    pub dim: Count,
    pub threshold: Count,
    pub condition: bool,
    pub count: usize,
    pub tuples: Vec<Vec<Vec<u64>>>,
}

pub fn oracle_text(record: &OracleRecord) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "command = es-oracle");
    let _ = writeln!(s, "q = {}", record.q);
    let _ = writeln!(s, "i = {}", record.i);
    let _ = writeln!(s, "r = {}", record.r);
    let _ = writeln!(s, "dim = {}", record.dim.0);
    let _ = writeln!(s, "threshold = {}", record.threshold.0);
    let _ = writeln!(s, "condition = {}", record.condition);
    let _ = writeln!(s, "count = {}", record.count);
    for t in &record.tuples {
        let _ = writeln!(s, "tuple = {t:?}");
    }
    s
}

pub fn condition_text(command: &str, n: usize, p: u64, i: u32, r: u32, c: &Condition) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "command = {command}");
    let _ = writeln!(s, "n = {n}");
    let _ = writeln!(s, "p = {p}");
    let _ = writeln!(s, "i = {i}");
    let _ = writeln!(s, "r = {r}");
    let _ = writeln!(s, "dim = {}", c.dim);
    let _ = writeln!(s, "threshold = {}", c.threshold);
    let _ = writeln!(s, "holds = {}", c.holds);
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionRecord {
    pub n: usize,
    pub p: u64,
    pub i: u32,
    pub r: u32,
    pub dim: Count,
    pub threshold: Count,
    pub holds: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_switch_to_strings_when_large() {
        let small = serde_json::to_string(&Count(BigCount::from(42u32))).unwrap();
        assert_eq!(small, "42");
        let huge: BigCount = "123456789012345678901234567890".parse().unwrap();
        let text = serde_json::to_string(&Count(huge.clone())).unwrap();
        assert_eq!(text, "\"123456789012345678901234567890\"");
        assert_eq!(serde_json::from_str::<Count>(&text).unwrap(), Count(huge));
        assert_eq!(serde_json::from_str::<Count>("7").unwrap(), Count(BigCount::from(7u32)));
    }
}
