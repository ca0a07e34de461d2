//! Verdicts and the numeric referee.
//!
//! Exact checks live in [`closed_forms`](crate::closed_forms); this module
//! holds the shared [`VerdictReport`] and the floating-point corroboration:
//! a cyclic Jacobi eigensolver, root matching at sampled α, and the checks
//! that have no exact counterpart (radical eigenvalue formulas, equitable
//! quotient inclusion).

mod jacobi;
mod numeric;

use std::fmt;

pub use jacobi::{symmetric_eigenvalues, MAX_SWEEPS, OFF_DIAGONAL_TOL};
pub use numeric::{
    alpha_grid, check_equitable_inclusion, check_tg_eigenvalue_formulas, default_alpha_grid, numeric_spectrum,
    roots_match, NumericSpectrum, DEFAULT_TOL,
};

use crate::poly::BiPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Numeric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    HypothesisNotMet,
}

/// Evidence attached to a failed check.
#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    /// `formula − direct`, nonzero.
    Difference(BiPoly),
    /// Largest scaled deviation seen in a numeric check.
    Deviation(f64),
    /// The formula path could not be evaluated (e.g. a division was inexact).
    Message(String),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Difference(d) => write!(f, "{d}"),
            Witness::Deviation(x) => write!(f, "{x:e}"),
            Witness::Message(m) => f.write_str(m),
        }
    }
}

/// Outcome of one identity or numeric check.
///
/// A failing report always carries a witness.
#[derive(Clone, Debug, PartialEq)]
pub struct VerdictReport {
    pub id: String,
    pub graph: String,
    pub mode: Mode,
    pub status: Status,
    pub witness: Option<Witness>,
    pub detail: Option<String>,
}

impl VerdictReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// 0 pass, 1 fail, 2 hypothesis not met.
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::HypothesisNotMet => 2,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exact => "exact",
            Mode::Numeric => "numeric",
        })
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::HypothesisNotMet => "hypothesis-not-met",
        })
    }
}

/// Line-oriented `key=value` form.
impl fmt::Display for VerdictReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "id={}", self.id)?;
        writeln!(f, "graph={}", self.graph)?;
        writeln!(f, "mode={}", self.mode)?;
        write!(f, "status={}", self.status)?;
        if let Some(w) = &self.witness {
            write!(f, "\nwitness={w}")?;
        }
        if let Some(d) = &self.detail {
            write!(f, "\ndetail={d}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::lam;

    #[test]
    fn report_text_and_exit_codes() {
        let mut r = VerdictReport {
            id: "x".into(),
            graph: "complete:3".into(),
            mode: Mode::Exact,
            status: Status::Pass,
            witness: None,
            detail: None,
        };
        assert_eq!(r.to_string(), "id=x\ngraph=complete:3\nmode=exact\nstatus=pass");
        assert_eq!(r.exit_code(), 0);
        r.status = Status::Fail;
        r.witness = Some(Witness::Difference(lam()));
        assert!(r.to_string().ends_with("status=fail\nwitness=l"));
        assert_eq!(r.exit_code(), 1);
        r.status = Status::HypothesisNotMet;
        assert_eq!(r.exit_code(), 2);
    }
}
