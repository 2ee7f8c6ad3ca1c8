//! Agreement checks between the closed-form operators and the oracle.

use std::fmt;
use std::str::FromStr;

use crate::antichain::Antichain;
use crate::error::{LatticeError, Result};
use crate::interval::Universe;
use crate::normal_form::critical_intervals;
use crate::oracle::{self, BoundKind, ResidualKind, ResidualOracle};
use crate::{ops, rank, residual};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckOp {
    Leq,
    Join,
    Meet,
    Minus,
    Implies,
    Crit,
    Rank,
}

impl CheckOp {
    pub const ALL: [CheckOp; 7] =
        [CheckOp::Leq, CheckOp::Join, CheckOp::Meet, CheckOp::Minus, CheckOp::Implies, CheckOp::Crit, CheckOp::Rank];

    pub fn name(self) -> &'static str {
        match self {
            CheckOp::Leq => "leq",
            CheckOp::Join => "join",
            CheckOp::Meet => "meet",
            CheckOp::Minus => "minus",
            CheckOp::Implies => "implies",
            CheckOp::Crit => "crit",
            CheckOp::Rank => "rank",
        }
    }

    /// Whether the operation takes a single argument.
    pub fn is_unary(self) -> bool {
        matches!(self, CheckOp::Crit | CheckOp::Rank)
    }

    fn needs_residual_oracle(self) -> bool {
        matches!(self, CheckOp::Minus | CheckOp::Implies)
    }
}

impl fmt::Display for CheckOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckOp {
    type Err = LatticeError;

    fn from_str(s: &str) -> Result<Self> {
        CheckOp::ALL
            .into_iter()
            .find(|op| op.name() == s)
            .ok_or_else(|| LatticeError::Parse(format!("unknown operation {s:?}")))
    }
}

/// Compares one operation on one input against the oracle over `𝓔ₙ`.
#[derive(Debug)]
pub struct Checker {
    n: usize,
    residuals: Option<ResidualOracle>,
}

impl Checker {
    /// `ops` decides whether the (expensive) residual oracle is built.
    pub fn new(n: usize, ops: &[CheckOp]) -> Result<Self> {
        Universe::bounded(n as i64)?;
        let residuals = if ops.iter().any(|op| op.needs_residual_oracle()) {
            Some(ResidualOracle::new(n)?)
        } else {
            None
        };
        Ok(Checker { n, residuals })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `Ok(None)` on agreement, otherwise a description of the mismatch.
    /// `b` is ignored by unary operations.
    pub fn check(&self, op: CheckOp, a: &Antichain, b: &Antichain) -> Result<Option<String>> {
        let n = self.n;
        let universe = Universe::bounded(n as i64)?;
        let residual = |kind| {
            self.residuals
                .as_ref()
                .expect("Checker::new was told about residual operations")
                .residual(a, b, kind)
        };
        let (got, want) = match op {
            CheckOp::Leq => (ops::leq(a, b).to_string(), oracle::oracle_leq(a, b, n)?.to_string()),
            CheckOp::Join => (ops::join(a, b).to_string(), oracle::oracle_bound(a, b, n, BoundKind::Join)?.to_string()),
            CheckOp::Meet => (ops::meet(a, b).to_string(), oracle::oracle_bound(a, b, n, BoundKind::Meet)?.to_string()),
            CheckOp::Minus => (ops::pseudo_difference(a, b).to_string(), residual(ResidualKind::Minus)?.to_string()),
            CheckOp::Implies => {
                let g = residual::relative_pseudo_complement(a, b, universe)?;
                let got = g.to_finite().map_or_else(|| g.to_string(), |f| f.to_string());
                (got, residual(ResidualKind::Implies)?.to_string())
            }
            CheckOp::Crit => {
                let got = critical_intervals(a, universe)?.clamp(n as i64);
                let want = oracle::oracle_crit(a, n)?;
                (format!("{got:?}"), format!("{:?}", want.as_slice()))
            }
            CheckOp::Rank => (rank::rank(a, n as i64)?.to_string(), oracle::oracle_rank(a, n)?.to_string()),
        };
        Ok((got != want).then(|| {
            let args = if op.is_unary() { format!("{a}") } else { format!("{a}, {b}") };
            format!("{op}({args}): closed form {got}, oracle {want}")
        }))
    }
}

/// Outcome of running one operation over many inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpReport {
    pub op: CheckOp,
    pub checked: u64,
    pub mismatches: u64,
    pub first_mismatch: Option<String>,
}

impl OpReport {
    pub fn new(op: CheckOp) -> Self {
        OpReport { op, checked: 0, mismatches: 0, first_mismatch: None }
    }

    pub fn record(&mut self, outcome: Option<String>) {
        self.checked += 1;
        if let Some(msg) = outcome {
            self.mismatches += 1;
            self.first_mismatch.get_or_insert(msg);
        }
    }

    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }
}

/// Every element (unary operations) or every ordered pair of `elements`.
pub fn check_exhaustive(checker: &Checker, op: CheckOp, elements: &[Antichain]) -> Result<OpReport> {
    let mut report = OpReport::new(op);
    for a in elements {
        if op.is_unary() {
            report.record(checker.check(op, a, a)?);
            continue;
        }
        for b in elements {
            report.record(checker.check(op, a, b)?);
        }
    }
    Ok(report)
}
