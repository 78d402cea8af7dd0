//! Structured output. Integers that can outgrow 64 bits are strings.

use knotcover::homology::{HomologyCertificate, OrderCheck};
use knotcover::{AbelianGroup, AlexanderPoly, CrossCheckReport, Genus};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub knot: Option<String>,
    pub genus: u8,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<i64>,
    pub b: i64,
    pub n: u32,
    pub free_rank: usize,
    pub torsion: Vec<String>,
    pub branch: String,
    /// Named intermediates in evaluation order.
    pub certificate: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub zero_alpha_hat: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<Verification>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub passed: bool,
    pub agree: bool,
    pub via_bn: String,
    pub via_circulant: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lemma_identity: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub determinant_identity: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact_sequence: Option<String>,
}

/// One column of a table: the `(alpha, beta)` cells at level `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub knot: Option<String>,
    pub genus: u8,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<i64>,
    pub b: i64,
    pub n: u32,
    pub alpha: String,
    pub beta: String,
}

pub fn params(poly: &AlexanderPoly) -> (u8, Option<i64>, i64) {
    match poly.genus() {
        Genus::One { b } => (1, None, b),
        Genus::Two { a, b } => (2, Some(a), b),
    }
}

pub fn order_check_str(c: OrderCheck) -> &'static str {
    match c {
        OrderCheck::Pass => "pass",
        OrderCheck::Fail => "fail",
        OrderCheck::NotApplicable => "n/a",
    }
}

impl ResultRecord {
    pub fn new(
        knot: Option<&str>,
        poly: &AlexanderPoly,
        group: &AbelianGroup,
        cert: &HomologyCertificate,
    ) -> Self {
        let (genus, a, b) = params(poly);
        Self {
            knot: knot.map(str::to_owned),
            genus,
            a,
            b,
            n: cert.n,
            free_rank: group.free_rank(),
            torsion: group.torsion().iter().map(BigInt::to_string).collect(),
            branch: cert.branch.as_str().to_owned(),
            certificate: cert
                .intermediates
                .iter()
                .map(|(k, v)| (k.clone(), v.to_string()))
                .collect(),
            zero_alpha_hat: cert.zero_alpha_hat,
            verification: None,
        }
    }

    pub fn with_verification(mut self, report: &CrossCheckReport) -> Self {
        self.verification = Some(Verification {
            passed: report.passed(),
            agree: report.agree,
            via_bn: report.via_bn.to_string(),
            via_circulant: report.via_circulant.to_string(),
            lemma_identity: report.lemma_identity,
            determinant_identity: report.determinant_identity,
            exact_sequence: report.exact_sequence.map(|c| order_check_str(c).to_owned()),
        });
        self
    }

    /// Rebuilds the group; `None` if a torsion entry is not an integer.
    pub fn group(&self) -> Option<AbelianGroup> {
        let torsion: Option<Vec<BigInt>> = self.torsion.iter().map(|t| t.parse().ok()).collect();
        let free = std::iter::repeat_n(BigInt::from(0), self.free_rank);
        Some(AbelianGroup::canonicalize(torsion?.into_iter().chain(free)))
    }
}

pub fn to_line<T: Serialize>(record: &T) -> String {
    serde_json::to_string(record).expect("plain struct serializes")
}

pub fn from_line<'a, T: Deserialize<'a>>(line: &'a str) -> serde_json::Result<T> {
    serde_json::from_str(line)
}
