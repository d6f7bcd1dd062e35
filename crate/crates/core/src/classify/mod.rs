//! Height, cohomological dimension and arithmetical rank of `I_2` of a
//! Kronecker-Weierstrass form, read off a table of known cases.

mod corner;
mod dispatch;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::groebner::Limits;
use crate::pencil::{KWForm, KWInvariants, PencilError};
use crate::polycore::{Field, PolyError};
use crate::radgen::{RadgenError, WitnessReport, WitnessSet};

pub use corner::{corner_zero_normalization, is_corner_zero, Normalization};
pub use dispatch::analyze;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("the form has no blocks")]
    EmptyForm,
    #[error("characteristic {0} is neither 0 nor a prime")]
    BadCharacteristic(u64),
    #[error("the form lives over characteristic {field}, not {requested}")]
    CharacteristicMismatch { field: u64, requested: u64 },
    #[error("the ara of this report is not known")]
    AraUnknown,
    #[error(transparent)]
    Radgen(#[from] RadgenError),
    #[error(transparent)]
    Pencil(#[from] PencilError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Exact,
    UpperBound,
    LowerBound,
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Exact => "exact",
            Status::UpperBound => "upper bound",
            Status::LowerBound => "lower bound",
            Status::Unknown => "unknown",
        })
    }
}

/// One invariant: a value (absent when unknown), its status, the interval
/// known to contain it, and where the value comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantValue {
    pub value: Option<usize>,
    pub status: Status,
    pub bracket: [usize; 2],
    pub citation: String,
}

impl InvariantValue {
    pub fn exact(v: usize, citation: impl Into<String>) -> Self {
        InvariantValue {
            value: Some(v),
            status: Status::Exact,
            bracket: [v, v],
            citation: citation.into(),
        }
    }

    pub fn upper(lo: usize, hi: usize, citation: impl Into<String>) -> Self {
        InvariantValue {
            value: Some(hi),
            status: Status::UpperBound,
            bracket: [lo, hi],
            citation: citation.into(),
        }
    }

    pub fn unknown(lo: usize, hi: usize, citation: impl Into<String>) -> Self {
        InvariantValue {
            value: None,
            status: Status::Unknown,
            bracket: [lo, hi],
            citation: citation.into(),
        }
    }

    pub fn is_exact(&self) -> bool {
        self.status == Status::Exact
    }

    /// The value when exact, or the upper bound.
    pub fn upper_value(&self) -> Option<usize> {
        match self.status {
            Status::Exact | Status::UpperBound => self.value,
            _ => None,
        }
    }
}

impl fmt::Display for InvariantValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.status, self.value) {
            (Status::Exact, Some(v)) => write!(f, "{v}"),
            (Status::UpperBound, Some(v)) => write!(f, "<= {v} (in [{}, {}])", self.bracket[0], self.bracket[1]),
            (Status::LowerBound, Some(v)) => write!(f, ">= {v} (in [{}, {}])", self.bracket[0], self.bracket[1]),
            _ => write!(f, "unknown (in [{}, {}])", self.bracket[0], self.bracket[1]),
        }
    }
}

/// Which row of the case table matched, after removing nilpotent blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Pattern {
    NilpotentOnly,
    ZeroIdeal,
    Principal,
    SingleScroll,
    Generic,
    Scrolls,
    Jordan,
    CornerZero,
    ThreeColumn,
    Uncovered,
}

impl Pattern {
    /// Rows whose values are established rather than a fallback bound.
    pub fn is_covered(self) -> bool {
        self != Pattern::Uncovered
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("serializable");
        f.write_str(s.as_str().unwrap_or("?"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub form: String,
    pub pattern: Pattern,
    /// Variables contributed by nilpotent blocks.
    pub nilpotent_vars: usize,
    pub characteristic: u64,
    pub ncols: usize,
    pub nvars: usize,
    pub height: InvariantValue,
    pub cd: InvariantValue,
    pub ara: InvariantValue,
    pub witness: Option<WitnessReport>,
    /// Whether ara (or its upper bound) is below `2n - 3`; absent when ara is
    /// unknown.
    pub beats_generic_bound: Option<bool>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn to_text(&self) -> String {
        let mut rows: Vec<(String, String)> = vec![
            ("form".into(), self.form.clone()),
            ("pattern".into(), self.pattern.to_string()),
            ("characteristic".into(), self.characteristic.to_string()),
            ("size".into(), format!("2 x {}, {} variables", self.ncols, self.nvars)),
            ("height".into(), self.height.to_string()),
            ("cd".into(), self.cd.to_string()),
            ("ara".into(), self.ara.to_string()),
        ];
        if self.nilpotent_vars > 0 {
            rows.push(("nilpotent vars".into(), self.nilpotent_vars.to_string()));
        }
        let flag = match self.beats_generic_bound {
            Some(b) => b.to_string(),
            None => "unknown".into(),
        };
        rows.push(("ara < 2n-3".into(), flag));
        if let Some(w) = &self.witness {
            let state = match &w.verification {
                crate::radgen::Verification::Skipped(r) => format!("skipped ({r})"),
                v => serde_json::to_value(v).expect("serializable")["state"]
                    .as_str()
                    .unwrap_or("?")
                    .to_string(),
            };
            rows.push((
                "witness".into(),
                format!("{} polynomials ({:?}), {}", w.count, w.construction, state),
            ));
            for (i, p) in w.polynomials.iter().enumerate() {
                rows.push((format!("  g{}", i + 1), p.clone()));
            }
        }
        rows.push(("sources".into(), String::new()));
        for (k, v) in [("height", &self.height), ("cd", &self.cd), ("ara", &self.ara)] {
            rows.push((format!("  {k}"), v.citation.clone()));
        }
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in rows {
            if v.is_empty() {
                out.push_str(&format!("{k}\n"));
            } else {
                out.push_str(&format!("{k:<width$}  {v}\n"));
            }
        }
        out
    }
}

/// A report with the objects behind it.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub report: Report,
    pub witness: Option<WitnessSet>,
    /// Set for the corner-zero pattern.
    pub normalization: Option<Normalization>,
}

impl Analysis {
    /// Checks the attached witness against the ideal; `None` without one.
    pub fn verify(&mut self, limits: &Limits) -> Result<Option<bool>, ClassifyError> {
        let Some(w) = self.witness.as_mut() else {
            return Ok(None);
        };
        let ok = w.verify(limits)?;
        self.report.witness = Some(w.report());
        Ok(Some(ok))
    }

    /// Marks the witness as not checked, with a reason.
    pub fn skip_verification(&mut self, reason: impl Into<String>) {
        if let Some(w) = self.witness.as_mut() {
            w.status = crate::radgen::Verification::Skipped(reason.into());
            self.report.witness = Some(w.report());
        }
    }
}

/// Height of `I_2` of a form with these invariants.
pub fn height_formula(inv: &KWInvariants) -> Result<usize, ClassifyError> {
    if inv.is_empty() {
        return Err(ClassifyError::EmptyForm);
    }
    let n = inv.nilpotent_vars();
    Ok(if !inv.jordan.is_empty() {
        n + inv.scroll_len() + inv.jordan_vars() - inv.gamma()
    } else if !inv.scroll.is_empty() {
        n + inv.scroll_len() - 1
    } else {
        n
    })
}

/// True iff the reported ara, or its upper bound, is below `2n - 3`.
pub fn beats_generic_bound(report: &Report, n: usize) -> Result<bool, ClassifyError> {
    let a = report.ara.upper_value().ok_or(ClassifyError::AraUnknown)?;
    Ok((a as i64) < 2 * n as i64 - 3)
}

/// Checks that `characteristic` is admissible and matches the form's field.
fn check_characteristic(form: &KWForm, characteristic: u64) -> Result<Field, ClassifyError> {
    if characteristic != 0 && !crate::polycore::is_prime(characteristic) {
        return Err(ClassifyError::BadCharacteristic(characteristic));
    }
    let field = form.ring().field();
    if field.characteristic() != characteristic {
        return Err(ClassifyError::CharacteristicMismatch {
            field: field.characteristic(),
            requested: characteristic,
        });
    }
    Ok(field)
}
