//! Trial reports and their JSON-lines persistence.

use std::io::{self, BufRead, Write};

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Confirmed,
    Refuted,
    SkippedBudget,
}

/// How a claim was established where it was stated, derived from the
/// prefix of its id.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimKind {
    /// `lemma-`, `theorem-`, `corollary-`: carries a proof.
    Proven,
    /// `example-`, `remark-`: asserted without proof.
    Stated,
    /// `conjecture-`.
    Conjecture,
    /// `adjudication-`: a disputed value, recorded whichever way it falls.
    Adjudication,
}

impl ClaimKind {
    pub fn of(claim: &str) -> ClaimKind {
        let prefix = claim.split('-').next().unwrap_or("");
        match prefix {
            "lemma" | "theorem" | "corollary" => ClaimKind::Proven,
            "conjecture" => ClaimKind::Conjecture,
            "adjudication" => ClaimKind::Adjudication,
            _ => ClaimKind::Stated,
        }
    }
}

/// One line of a report file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TrialReport {
    pub claim: String,
    /// Canonical code, construction name, or a description of a swept family.
    pub instance: String,
    /// The relation the claim predicts.
    pub expected: String,
    /// Computed values; on refutation these include certificates.
    pub computed: Value,
    pub verdict: Verdict,
    pub millis: u64,
}

impl TrialReport {
    pub fn kind(&self) -> ClaimKind {
        ClaimKind::of(&self.claim)
    }

    /// A refuted claim that carries a proof; this fails `verify`.
    pub fn is_broken_proof(&self) -> bool {
        self.verdict == Verdict::Refuted && self.kind() == ClaimKind::Proven
    }
}

/// Zeroes the timing field so reports compare byte for byte.
pub fn strip_timing(reports: &mut [TrialReport]) {
    for r in reports {
        r.millis = 0;
    }
}

pub fn write_jsonl<W: Write>(mut out: W, reports: &[TrialReport]) -> io::Result<()> {
    for r in reports {
        serde_json::to_writer(&mut out, r)?;
        out.write_all(b"\n")?;
    }
    out.flush()
}

/// Reads reports back, skipping blank lines; unknown fields are an error.
pub fn read_jsonl<R: BufRead>(input: R) -> io::Result<Vec<TrialReport>> {
    let mut out = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let r = serde_json::from_str(&line).map_err(|e| {
            io::Error::new(io::ErrorKind::InvalidData, format!("line {}: {e}", i + 1))
        })?;
        out.push(r);
    }
    Ok(out)
}
