//! Closed-form characteristic polynomials: the "formula path".
//!
//! Each `cf_*` function evaluates one closed form in ℚ[α][λ]. Rational
//! substitutions `P(f/g)` are cleared with
//! [`BiPoly::substitute_lambda`](crate::poly::BiPoly::substitute_lambda),
//! and negative exponents and rational prefactors are resolved by exact
//! division, so a wrong formula surfaces either as a divisibility error or
//! as a nonzero difference against [`charpoly_direct`](crate::charpoly::charpoly_direct).

mod families;
mod identity;
mod operations;

use std::fmt;
use std::str::FromStr;

pub use families::{cf_family_spectrum, cf_submatrix_spectrum};
pub use identity::{compare, derived_graph, direct_path, formula_path, verify_identity, TheoremInput};
pub use operations::{
    cf_classical_line_semiregular, cf_coalescence, cf_complement_regular, cf_line_regular, cf_line_semiregular,
    cf_pendant_many, cf_pendant_one, cf_qgraph, cf_rgraph, cf_subdivision, cf_total, QVariant, SemiregularForm, Via,
};

use crate::error::{Error, Result};
use crate::graph::{is_regular, Graph};
use crate::poly::BiPoly;

/// One identifier per closed form, with a stable string name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    FamilySpectrum,
    SubmatrixSpectrum,
    ComplementRegular,
    PendantOne,
    PendantMany,
    Coalescence,
    LineRegularViaAalpha,
    LineRegularViaA,
    LineSemiregular,
    LineSemiregularCorollary,
    SubdivisionViaAalpha,
    SubdivisionViaA,
    RGraphViaAalpha,
    RGraphViaA,
    QGraphViaLine,
    QGraphViaAalpha,
    QGraphViaA,
    TotalViaAalpha,
    TotalViaA,
    ClassicalLineSemiregular,
}

impl TheoremId {
    pub const ALL: [TheoremId; 20] = [
        TheoremId::FamilySpectrum,
        TheoremId::SubmatrixSpectrum,
        TheoremId::ComplementRegular,
        TheoremId::PendantOne,
        TheoremId::PendantMany,
        TheoremId::Coalescence,
        TheoremId::LineRegularViaAalpha,
        TheoremId::LineRegularViaA,
        TheoremId::LineSemiregular,
        TheoremId::LineSemiregularCorollary,
        TheoremId::SubdivisionViaAalpha,
        TheoremId::SubdivisionViaA,
        TheoremId::RGraphViaAalpha,
        TheoremId::RGraphViaA,
        TheoremId::QGraphViaLine,
        TheoremId::QGraphViaAalpha,
        TheoremId::QGraphViaA,
        TheoremId::TotalViaAalpha,
        TheoremId::TotalViaA,
        TheoremId::ClassicalLineSemiregular,
    ];

    pub fn as_str(self) -> &'static str {
        use TheoremId::*;
        match self {
            FamilySpectrum => "family-spectrum",
            SubmatrixSpectrum => "submatrix-spectrum",
            ComplementRegular => "complement-regular",
            PendantOne => "pendant-one",
            PendantMany => "pendant-many",
            Coalescence => "coalescence",
            LineRegularViaAalpha => "line-regular-aalpha",
            LineRegularViaA => "line-regular-a",
            LineSemiregular => "line-semiregular",
            LineSemiregularCorollary => "line-semiregular-corollary",
            SubdivisionViaAalpha => "subdivision-aalpha",
            SubdivisionViaA => "subdivision-a",
            RGraphViaAalpha => "rgraph-aalpha",
            RGraphViaA => "rgraph-a",
            QGraphViaLine => "qgraph-line",
            QGraphViaAalpha => "qgraph-aalpha",
            QGraphViaA => "qgraph-a",
            TotalViaAalpha => "total-aalpha",
            TotalViaA => "total-a",
            ClassicalLineSemiregular => "classical-line-semiregular",
        }
    }

    /// Theorems whose input is a single graph.
    pub fn takes_graph(self) -> bool {
        use TheoremId::*;
        !matches!(
            self,
            FamilySpectrum | SubmatrixSpectrum | PendantOne | PendantMany | Coalescence
        )
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown theorem id {s:?}")))
    }
}

/// Degree of a regular graph with at least `min_r`, or a hypothesis error.
pub(crate) fn require_regular(g: &Graph, min_r: usize) -> Result<usize> {
    match is_regular(g) {
        Some(r) if r >= min_r => Ok(r),
        Some(r) => Err(Error::Hypothesis(format!("graph is {r}-regular, need degree ≥ {min_r}"))),
        None => Err(Error::Hypothesis("graph is not regular".into())),
    }
}

/// `p · f^e`, where a negative `e` means exact division by `f^{−e}`.
pub(crate) fn with_power(p: BiPoly, f: &BiPoly, e: i64) -> Result<BiPoly> {
    if e >= 0 {
        Ok(p * f.pow(e as usize))
    } else {
        p.exact_div(&f.pow((-e) as usize))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for id in TheoremId::ALL {
            assert_eq!(id.as_str().parse::<TheoremId>().unwrap(), id);
        }
        assert!("line-graph".parse::<TheoremId>().is_err());
    }
}
