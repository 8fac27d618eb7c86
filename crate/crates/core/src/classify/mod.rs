//! The classification theorems as decision procedures.
//!
//! Every family has two independent encodings: one in terms of the highest
//! weight `lambda` and one in terms of the infinitesimal character
//! `Lambda = lambda + rho`. They share no code, so their agreement is a check
//! on both.

mod closed_form;
mod e6;
mod e7;
mod so;

use std::fmt;

pub use closed_form::{closed_form_case, closed_form_conjugates_so, ClosedFormCase};
pub use e6::E6Rule;
pub use e7::E7Rule;
pub use so::SoRule;

use crate::error::Result;
use crate::registry;
use crate::root_system::RootSystemSpec;
use crate::weight::Weight;
use crate::weyl::{k_dominant_conjugates, OrbitEnumeration};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    /// Not `k`-dominant(-regular) or not `k`-integral.
    NotParameter,
    Nonunitary,
    Unitary,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::NotParameter => "not-parameter",
            Status::Nonunitary => "nonunitary",
            Status::Unitary => "unitary",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The clause of a classification theorem that decided a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Clause {
    /// so families, `lambda = (lambda_1, 0, ..., 0)`.
    Scalar,
    /// so families, `lambda = (lambda_1, 1/2, ..., +-1/2)`.
    Spinor,
    /// so families, `lambda_2 = ... = lambda_p >= 1 > ...`.
    General { p: usize },
    /// Numbered case of the E6 or E7 list.
    Case(u8),
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Clause::Scalar => f.write_str("scalar"),
            Clause::Spinor => f.write_str("spinor"),
            Clause::General { p } => write!(f, "general, p = {p}"),
            Clause::Case(k) => write!(f, "case {k}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct UnitarityVerdict {
    pub status: Status,
    /// Set only for unitary parameters with `L(lambda) = N(lambda)`.
    pub verma_irreducible: bool,
    /// `None` exactly for `NotParameter`.
    pub clause: Option<Clause>,
}

impl UnitarityVerdict {
    pub const NOT_PARAMETER: UnitarityVerdict = UnitarityVerdict {
        status: Status::NotParameter,
        verma_irreducible: false,
        clause: None,
    };

    pub fn nonunitary(clause: Clause) -> Self {
        UnitarityVerdict {
            status: Status::Nonunitary,
            verma_irreducible: false,
            clause: Some(clause),
        }
    }

    pub fn unitary(clause: Clause, verma_irreducible: bool) -> Self {
        UnitarityVerdict {
            status: Status::Unitary,
            verma_irreducible,
            clause: Some(clause),
        }
    }

    /// Unitary iff `unitary`, with the Verma flag only on unitary verdicts.
    pub fn decide(clause: Clause, unitary: bool, verma: bool) -> Self {
        if unitary {
            Self::unitary(clause, verma)
        } else {
            Self::nonunitary(clause)
        }
    }
}

/// A family's unitarity criteria, selected by name in [`registry`].
pub trait UnitarityRule: Send + Sync {
    fn spec(&self) -> &RootSystemSpec;

    /// Verdict for the highest weight `lambda`. Errors only on malformed
    /// weights (wrong length, E-family ambient constraint violated).
    fn classify_lambda(&self, lambda: &Weight) -> Result<UnitarityVerdict>;

    /// Verdict for the infinitesimal character `Lambda = lambda + rho`.
    fn classify_inf_char(&self, big_lambda: &Weight) -> Result<UnitarityVerdict>;

    /// Partitions the `k`-dominant-regular `W_g`-conjugates of `dominant`.
    fn inf_char_report(&self, dominant: &Weight) -> Result<InfCharReport> {
        self.report_orbit(k_dominant_conjugates(self.spec(), dominant)?)
    }

    /// [`UnitarityRule::inf_char_report`] for an orbit walked elsewhere.
    fn report_orbit(&self, orbit: OrbitEnumeration) -> Result<InfCharReport> {
        let mut report = InfCharReport {
            dominant: orbit.source,
            unitary: Vec::new(),
            nonunitary: Vec::new(),
            not_parameter: Vec::new(),
        };
        for c in orbit.conjugates {
            match self.classify_inf_char(&c)?.status {
                Status::Unitary => report.unitary.push(c),
                Status::Nonunitary => report.nonunitary.push(c),
                Status::NotParameter => report.not_parameter.push(c),
            }
        }
        Ok(report)
    }
}

/// The `k`-dominant-regular conjugates of a `g`-dominant infinitesimal
/// character, split by verdict. Each list is sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfCharReport {
    pub dominant: Weight,
    pub unitary: Vec<Weight>,
    pub nonunitary: Vec<Weight>,
    /// Conjugates that are `k`-dominant-regular but not `k`-integral; empty
    /// whenever the source is integral.
    pub not_parameter: Vec<Weight>,
}

pub fn classify_lambda(spec: &RootSystemSpec, lambda: &Weight) -> Result<UnitarityVerdict> {
    registry::rule_for(spec.family())?.classify_lambda(lambda)
}

pub fn classify_inf_char(spec: &RootSystemSpec, big_lambda: &Weight) -> Result<UnitarityVerdict> {
    registry::rule_for(spec.family())?.classify_inf_char(big_lambda)
}

pub fn inf_char_report(spec: &RootSystemSpec, dominant: &Weight) -> Result<InfCharReport> {
    registry::rule_for(spec.family())?.inf_char_report(dominant)
}
