//! Closed-form spectra as products of low-degree λ-factors.

use std::fmt;

use super::bi::BiPoly;
use super::uni::AlphaPoly;
use crate::error::{param, Result};

/// A product `prefactor · Π factorᵢ^{multᵢ}` with each factor of λ-degree
/// one or two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredSpectrum {
    factors: Vec<(BiPoly, usize)>,
    prefactor: AlphaPoly,
}

impl FactoredSpectrum {
    pub fn new() -> Self {
        Self {
            factors: Vec::new(),
            prefactor: AlphaPoly::one(),
        }
    }

    /// Appends `factor^mult`; zero multiplicities are dropped.
    pub fn with(mut self, factor: BiPoly, mult: usize) -> Result<Self> {
        self.push(factor, mult)?;
        Ok(self)
    }

    pub fn push(&mut self, factor: BiPoly, mult: usize) -> Result<()> {
        match factor.lambda_degree() {
            Some(1 | 2) => {}
            d => return param(format!("spectral factor must have λ-degree 1 or 2, got {d:?}")),
        }
        if mult > 0 {
            self.factors.push((factor, mult));
        }
        Ok(())
    }

    pub fn set_prefactor(&mut self, c: AlphaPoly) {
        self.prefactor = c;
    }

    pub fn factors(&self) -> &[(BiPoly, usize)] {
        &self.factors
    }

    pub fn prefactor(&self) -> &AlphaPoly {
        &self.prefactor
    }

    /// Σ deg·mult: the order of the underlying matrix.
    pub fn order(&self) -> usize {
        self.factors
            .iter()
            .map(|(f, m)| f.lambda_degree().unwrap_or(0) * m)
            .sum()
    }

    pub fn expand(&self) -> BiPoly {
        self.factors
            .iter()
            .fold(BiPoly::from_alpha(self.prefactor.clone()), |acc, (f, m)| {
                acc * f.pow(*m)
            })
    }
}

impl Default for FactoredSpectrum {
    fn default() -> Self {
        Self::new()
    }
}

impl fmt::Display for FactoredSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.prefactor.is_one() {
            write!(f, "[{}]", self.prefactor.display('a'))?;
        }
        for (i, (p, m)) in self.factors.iter().enumerate() {
            if i > 0 || !self.prefactor.is_one() {
                f.write_str(" ")?;
            }
            write!(f, "({p})")?;
            if *m > 1 {
                write!(f, "^{m}")?;
            }
        }
        if self.factors.is_empty() && self.prefactor.is_one() {
            f.write_str("1")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::bi::{alpha, lam};

    #[test]
    fn empty_expands_to_one() {
        assert_eq!(FactoredSpectrum::new().expand(), BiPoly::one());
    }

    #[test]
    fn order_counts_degrees() {
        let f = FactoredSpectrum::new()
            .with(lam() - 2, 1)
            .unwrap()
            .with(lam().pow(2) - alpha() * lam() + 1, 3)
            .unwrap();
        assert_eq!(f.order(), 7);
        assert_eq!(f.expand().lambda_degree(), Some(7));
    }

    #[test]
    fn rejects_constant_factor() {
        assert!(FactoredSpectrum::new().with(BiPoly::from_int(3), 1).is_err());
    }
}
