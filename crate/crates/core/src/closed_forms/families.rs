//! Spectra of complete, complete bipartite and star graphs, and of their
//! one-vertex-deleted principal submatrices.

use crate::error::{param, Result};
use crate::graph::FamilySpec;
use crate::poly::{alpha, lam, FactoredSpectrum};

/// Factored `A_α` spectrum of `K_n`, `K_{a,b}` or `K_{1,n−1}`.
///
/// Conjugate root pairs are kept together as one quadratic factor so that
/// every factor has coefficients in ℚ[α].
pub fn cf_family_spectrum(spec: &FamilySpec) -> Result<FactoredSpectrum> {
    let f = FactoredSpectrum::new();
    match *spec {
        FamilySpec::Complete(n) => {
            let n = n as i64;
            // n − 1 once, nα − 1 with multiplicity n − 1
            f.with(lam() - (n - 1), 1)?.with(lam() - (alpha() * n - 1), (n - 1) as usize)
        }
        FamilySpec::CompleteBipartite(a, b) => bipartite(a, b),
        FamilySpec::Star(1) => f.with(lam(), 1),
        FamilySpec::Star(n) => bipartite(1, n - 1),
        other => param(format!("no closed-form spectrum for {other}")),
    }
}

fn bipartite(a: usize, b: usize) -> Result<FactoredSpectrum> {
    let (ai, bi) = (a as i64, b as i64);
    // the two extreme eigenvalues: sum α(a+b), product ab(2α−1)
    let quad = lam().pow(2) - alpha() * lam() * (ai + bi) + (alpha() * 2 - 1) * (ai * bi);
    FactoredSpectrum::new()
        .with(lam() - alpha() * ai, b - 1)?
        .with(lam() - alpha() * bi, a - 1)?
        .with(quad, 1)
}

/// Factored spectrum of `A_α(G)` with row and column `vertex` deleted, for
/// `G` = `K_n`, `K_{a,b}` or `K_{1,n−1}` in their standard labeling.
pub fn cf_submatrix_spectrum(spec: &FamilySpec, vertex: usize) -> Result<FactoredSpectrum> {
    let f = FactoredSpectrum::new();
    match *spec {
        FamilySpec::Complete(n) => {
            check_vertex(vertex, n)?;
            if n == 1 {
                return Ok(f);
            }
            let ni = n as i64;
            f.with(lam() - (alpha() + (ni - 2)), 1)?
                .with(lam() - (alpha() * ni - 1), n - 2)
        }
        FamilySpec::CompleteBipartite(a, b) => {
            check_vertex(vertex, a + b)?;
            if vertex < a {
                bipartite_deleted(a, b)
            } else {
                bipartite_deleted(b, a)
            }
        }
        FamilySpec::Star(n) => {
            check_vertex(vertex, n)?;
            if n == 1 {
                Ok(f)
            } else if vertex == 0 {
                bipartite_deleted(1, n - 1)
            } else {
                bipartite_deleted(n - 1, 1)
            }
        }
        other => param(format!("no closed-form submatrix spectrum for {other}")),
    }
}

fn check_vertex(v: usize, n: usize) -> Result<()> {
    if v < n {
        Ok(())
    } else {
        param(format!("vertex {v} out of range for n = {n}"))
    }
}

/// `K_{p,q}` with one vertex of the `p`-side removed.
fn bipartite_deleted(p: usize, q: usize) -> Result<FactoredSpectrum> {
    if p == 1 {
        // the other side becomes q isolated rows with diagonal α
        return FactoredSpectrum::new().with(lam() - alpha(), q);
    }
    let (pi, qi) = (p as i64, q as i64);
    let n = pi + qi;
    let quad = lam().pow(2) - alpha() * lam() * n + (alpha().pow(2) + (alpha() * 2 - 1) * (pi - 1)) * qi;
    FactoredSpectrum::new()
        .with(lam() - alpha() * pi, q - 1)?
        .with(lam() - alpha() * qi, p - 2)?
        .with(quad, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charpoly::{charpoly_direct, charpoly_submatrix};
    use crate::graph::family_generate;

    #[test]
    fn k3_and_small_stars() {
        let k3 = cf_family_spectrum(&FamilySpec::Complete(3)).unwrap();
        assert_eq!(k3.factors().len(), 2);
        assert_eq!(k3.factors()[1], (lam() - (alpha() * 3 - 1), 2));
        let s = cf_family_spectrum(&FamilySpec::Star(3)).unwrap();
        let expect = (lam() - alpha()) * (lam().pow(2) - alpha() * lam() * 3 + (alpha() * 2 - 1) * 2);
        assert_eq!(s.expand(), expect);
        assert_eq!(cf_family_spectrum(&FamilySpec::Star(1)).unwrap().expand(), lam());
    }

    #[test]
    fn k23_matches_direct() {
        let spec = FamilySpec::CompleteBipartite(2, 3);
        let f = cf_family_spectrum(&spec).unwrap();
        assert_eq!(f.order(), 5);
        assert_eq!(f.expand(), charpoly_direct(&family_generate(&spec).unwrap()));
    }

    #[test]
    fn submatrix_examples() {
        let k4 = cf_submatrix_spectrum(&FamilySpec::Complete(4), 0).unwrap();
        assert_eq!(k4.expand(), (lam() - alpha() - 2) * (lam() - alpha() * 4 + 1).pow(2));
        let star = cf_submatrix_spectrum(&FamilySpec::Star(5), 0).unwrap();
        assert_eq!(star.expand(), (lam() - alpha()).pow(4));
        let spec = FamilySpec::CompleteBipartite(2, 3);
        let g = family_generate(&spec).unwrap();
        for v in 0..5 {
            let f = cf_submatrix_spectrum(&spec, v).unwrap();
            assert_eq!(f.expand(), charpoly_submatrix(&g, v).unwrap(), "vertex {v}");
        }
    }

    #[test]
    fn unsupported_families() {
        assert!(cf_family_spectrum(&FamilySpec::Petersen).is_err());
        assert!(cf_submatrix_spectrum(&FamilySpec::Path(3), 0).is_err());
        assert!(cf_submatrix_spectrum(&FamilySpec::Complete(3), 3).is_err());
    }
}
