//! Machine-readable certificate emitted by every subcommand.

use serde::Serialize;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Refuted,
    Inconclusive,
    Error,
}

/// One check: the claim, how it was decided, supporting data, and the
/// wall-clock cost. `verified` mirrors `status` as a plain boolean for
/// consumers that only branch on success.
#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub claim: String,
    pub status: Status,
    pub verified: bool,
    pub witness: serde_json::Value,
    pub timing: Timing,
}

#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub milliseconds: f64,
}

impl Verdict {
    pub fn new(
        claim: impl Into<String>,
        status: Status,
        witness: serde_json::Value,
        started: Instant,
    ) -> Self {
        Verdict {
            claim: claim.into(),
            status,
            verified: status == Status::Verified,
            witness,
            timing: Timing { milliseconds: started.elapsed().as_secs_f64() * 1e3 },
        }
    }

    pub fn decided(
        claim: impl Into<String>,
        holds: bool,
        witness: serde_json::Value,
        started: Instant,
    ) -> Self {
        let status = if holds { Status::Verified } else { Status::Refuted };
        Self::new(claim, status, witness, started)
    }

    /// 0 for verified or computed outcomes, 1 for refuted claims, 2 for
    /// unusable input.
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Verified | Status::Inconclusive => 0,
            Status::Refuted => 1,
            Status::Error => 2,
        }
    }
}
