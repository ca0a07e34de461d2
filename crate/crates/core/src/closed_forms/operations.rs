//! Closed forms for graph operations.
//!
//! Notation: `P_G = det(λI − A_α(G))`, `P_{G_u}` the polynomial of the
//! principal submatrix without `u`, `P_A` the adjacency polynomial lifted
//! to ℚ[α][λ], and `subst(P, N, D, k) = D^k·P(N/D)`.

use super::{require_regular, with_power};
use crate::charpoly::{adjacency_charpoly, charpoly_direct, charpoly_principal, charpoly_submatrix};
use crate::error::{param, Error, Result};
use crate::graph::{is_semiregular_bipartite, Graph, SemiRegular};
use crate::poly::{alpha, lam, BiPoly, Rational, UniPoly};

/// Which base polynomial a two-variant closed form is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Via {
    /// In terms of `P_{A_α(G)}`.
    Aalpha,
    /// In terms of the adjacency polynomial `P_{A(G)}`.
    A,
}

/// The three Q(G) closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QVariant {
    /// Through the line graph polynomial `P_{A_α(l(G))}`.
    Line,
    /// Directly through `P_{A_α(G)}`.
    Aalpha,
    /// Directly through `P_{A(G)}`.
    A,
}

/// The two forms of the semi-regular line-graph polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SemiregularForm {
    /// `α₁^{n₁−n₂} Q(α₁α₂)` with the full even part `Q`.
    Theorem,
    /// The factor for `λ₁² = r₁r₂` split off explicitly.
    Corollary,
}

fn adjacency_lifted(g: &Graph) -> BiPoly {
    BiPoly::from_lambda_poly(&adjacency_charpoly(g))
}

fn konst(c: i64) -> BiPoly {
    BiPoly::from_int(c)
}

/// Complement of an `r`-regular graph:
/// `P_Ḡ(λ) = (−1)^n (λ + r + 1 − n)/(λ + r + 1 − nα) · P_G(nα − 1 − λ)`.
pub fn cf_complement_regular(g: &Graph) -> Result<BiPoly> {
    let r = require_regular(g, 0)? as i64;
    let n = g.n() as i64;
    let reflected = charpoly_direct(g).substitute_lambda(&(alpha() * n - 1 - lam()), &BiPoly::one(), g.n());
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let num = reflected * (lam() + (r + 1 - n)) * sign;
    num.exact_div(&(lam() + (r + 1) - alpha() * n))
}

/// `s` pendant edges at `v`:
/// `(λ−α)^s P_H − s(αλ − 2α + 1)(λ−α)^{s−1} P_{H_v}`.
pub fn cf_pendant_one(h: &Graph, v: usize, s: usize) -> Result<BiPoly> {
    if h.n() < 2 {
        return Err(Error::Hypothesis("base graph needs at least two vertices".into()));
    }
    if s == 0 {
        return param("pendant count must be positive");
    }
    let ph = charpoly_direct(h);
    let phv = charpoly_submatrix(h, v)?;
    let la = lam() - alpha();
    let w = alpha() * lam() - alpha() * 2 + 1;
    Ok(la.pow(s) * ph - w * la.pow(s - 1) * phv * (s as i64))
}

/// One pendant edge at each vertex of `targets`.
///
/// Eliminating the pendant vertices shifts the diagonal entry of each
/// target by `(αλ − 2α + 1)/(λ − α)`; expanding the determinant
/// multilinearly in those entries gives
/// `Σ_{S ⊆ T} (λ−α)^{s−|S|} (−(αλ − 2α + 1))^{|S|} P_{G−S}`,
/// where `P_{G−S}` deletes the rows and columns of `S` from `A_α(G)`.
pub fn cf_pendant_many(g: &Graph, targets: &[usize]) -> Result<BiPoly> {
    let s = targets.len();
    if s == 0 {
        return param("at least one pendant target is required");
    }
    if s > 20 {
        return param("too many pendant targets for subset expansion");
    }
    let la = lam() - alpha();
    let w = -(alpha() * lam() - alpha() * 2 + 1);
    let mut acc = BiPoly::zero();
    for mask in 0u32..(1 << s) {
        let subset: Vec<usize> = (0..s).filter(|i| mask >> i & 1 == 1).map(|i| targets[i]).collect();
        let k = subset.len();
        let term = la.pow(s - k) * w.pow(k) * charpoly_principal(g, &subset)?;
        acc += &term;
    }
    Ok(acc)
}

/// Coalescence of `g` at `u` with `h` at `v`:
/// `P_G P_{H_v} + P_{G_u} P_H − λ P_{G_u} P_{H_v}`.
pub fn cf_coalescence(g: &Graph, u: usize, h: &Graph, v: usize) -> Result<BiPoly> {
    let pg = charpoly_direct(g);
    let ph = charpoly_direct(h);
    let pgu = charpoly_submatrix(g, u)?;
    let phv = charpoly_submatrix(h, v)?;
    Ok(&pg * &phv + &pgu * &ph - lam() * pgu * phv)
}

/// Line graph of an `r`-regular graph (`r ≥ 2`):
/// `(λ − 2rα + 2)^{m−n} P_G(λ − r + 2)`, or through `P_A` as
/// `(λ − 2rα + 2)^{m−n} subst(P_A, λ − r(α+1) + 2, 1 − α, n)`.
pub fn cf_line_regular(g: &Graph, via: Via) -> Result<BiPoly> {
    require_regular(g, 2)?;
    line_regular_unchecked(g, via)
}

/// Same identity without the `r ≥ 2` restriction (valid for any `r ≥ 1`).
pub(super) fn line_regular_unchecked(g: &Graph, via: Via) -> Result<BiPoly> {
    let r = require_regular(g, 1)? as i64;
    let n = g.n();
    let shift = lam() - alpha() * (2 * r) + 2;
    let base = match via {
        Via::Aalpha => charpoly_direct(g).substitute_lambda(&(lam() - r + 2), &BiPoly::one(), n),
        Via::A => adjacency_lifted(g).substitute_lambda(&(lam() - (alpha() + 1) * r + 2), &(1 - alpha()), n),
    };
    with_power(base, &shift, g.m() as i64 - n as i64)
}

struct Bipartite {
    sr: SemiRegular,
    /// `P_A(x) = x^{n₁−n₂} Q(x²)`.
    q: UniPoly,
}

fn bipartite_split(g: &Graph) -> Result<Bipartite> {
    let sr = is_semiregular_bipartite(g)
        .ok_or_else(|| Error::Hypothesis("graph is not connected semi-regular bipartite".into()))?;
    let pa = adjacency_charpoly(g);
    let d = sr.n1 - sr.n2;
    let coeffs = pa.coeffs();
    for (i, c) in coeffs.iter().enumerate() {
        let in_q = i >= d && (i - d) % 2 == 0;
        if !in_q && !num_traits::Zero::is_zero(c) {
            return Err(Error::Divisibility(format!(
                "adjacency polynomial is not of the form x^{d}·Q(x²)"
            )));
        }
    }
    let q = UniPoly::from_coeffs((0..=sr.n2).map(|j| pa.coeff(d + 2 * j)).collect());
    Ok(Bipartite { sr, q })
}

fn lift_alpha_free(p: &UniPoly) -> BiPoly {
    BiPoly::from_lambda_poly(p)
}

/// Line graph of a semi-regular bipartite graph `(n₁, n₂, r₁, r₂)`.
///
/// With `a₁ = λ − αr₂ − r₁ + 2`, `a₂ = λ − αr₁ − r₂ + 2`, `s = r₁ + r₂`,
/// `β = n₁r₁ − n` and `γ = (n₂r₂ − n₁r₁ + 2n)/2`:
///
/// * `Theorem`: `(1−α)^γ (λ − αs + 2)^β a₁^{n₁−n₂} subst(Q, a₁a₂, (1−α)², n₂) / (1−α)^{n₁+n₂}`
/// * `Corollary`: `Q = (y − r₁r₂)·Q'`, and `a₁a₂ − r₁r₂(1−α)² = (λ − s + 2)(λ − αs + 2)`, so
///   `(1−α)^γ (λ − αs + 2)^{β+1} (λ − s + 2) a₁^{n₁−n₂} subst(Q', a₁a₂, (1−α)², n₂−1) / (1−α)^{n₁+n₂}`
///
/// No square roots appear; every power of `(1−α)` must cancel exactly.
pub fn cf_line_semiregular(g: &Graph, form: SemiregularForm) -> Result<BiPoly> {
    let Bipartite { sr, q } = bipartite_split(g)?;
    let SemiRegular { n1, n2, r1, r2 } = sr;
    let (r1i, r2i) = (r1 as i64, r2 as i64);
    let s = r1i + r2i;
    let n = (n1 + n2) as i64;
    let beta = (n1 * r1) as i64 - n;
    let gamma2 = (n2 * r2) as i64 - (n1 * r1) as i64 + 2 * n;
    debug_assert!(gamma2 % 2 == 0);
    let gamma = (gamma2 / 2) as usize;
    let a1 = lam() - alpha() * r2i - r1i + 2;
    let a2 = lam() - alpha() * r1i - r2i + 2;
    let prod = &a1 * &a2;
    let om = 1 - alpha();
    let om2 = om.pow(2);
    let outer = lam() - alpha() * s + 2;
    let num = match form {
        SemiregularForm::Theorem => {
            let body = om.pow(gamma) * a1.pow(n1 - n2) * lift_alpha_free(&q).substitute_lambda(&prod, &om2, n2);
            with_power(body, &outer, beta)?
        }
        SemiregularForm::Corollary => {
            let rr = Rational::from_integer((r1 * r2).into());
            let q_prime = q.exact_div(&UniPoly::from_coeffs(vec![-rr, Rational::from_integer(1.into())]))?;
            let body = om.pow(gamma)
                * (lam() - s + 2)
                * a1.pow(n1 - n2)
                * lift_alpha_free(&q_prime).substitute_lambda(&prod, &om2, n2 - 1);
            with_power(body, &outer, beta + 1)?
        }
    };
    num.exact_div(&om.pow(n1 + n2))
}

/// The α = 0 case: `(λ + 2)^β a₁^{n₁−n₂} Q(a₁a₂)` with `aᵢ = λ − rᵢ + 2`.
pub fn cf_classical_line_semiregular(g: &Graph) -> Result<BiPoly> {
    let Bipartite { sr, q } = bipartite_split(g)?;
    let SemiRegular { n1, n2, r1, r2 } = sr;
    let a1 = lam() - r1 as i64 + 2;
    let a2 = lam() - r2 as i64 + 2;
    let beta = (n1 * r1) as i64 - (n1 + n2) as i64;
    let body = a1.pow(n1 - n2) * lift_alpha_free(&q).substitute_lambda(&(&a1 * &a2), &BiPoly::one(), n2);
    with_power(body, &(lam() + 2), beta)
}

/// Subdivision of an `r`-regular graph:
/// `(λ − 2α)^{m−n} subst(P_G, λ² − α(r+2)λ + r(3α − 1), 1 − α, n)` or
/// `(λ − 2α)^{m−n} subst(P_A, λ² − α(r+2)λ + r(α² + 2α − 1), (1 − α)², n)`.
pub fn cf_subdivision(g: &Graph, via: Via) -> Result<BiPoly> {
    let r = require_regular(g, 1)? as i64;
    let n = g.n();
    let head = lam().pow(2) - alpha() * lam() * (r + 2);
    let base = match via {
        Via::Aalpha => charpoly_direct(g).substitute_lambda(&(head + (alpha() * 3 - 1) * r), &(1 - alpha()), n),
        Via::A => adjacency_lifted(g).substitute_lambda(
            &(head + (alpha().pow(2) + alpha() * 2 - 1) * r),
            &(1 - alpha()).pow(2),
            n,
        ),
    };
    with_power(base, &(lam() - alpha() * 2), g.m() as i64 - n as i64)
}

/// R(G) of an `r`-regular graph, with the λ-dependent denominator
/// `E = λ − 3α + 1`:
/// `(λ − 2α)^{m−n} subst(P_G, λ² − α(r+2)λ + r(3α − 1), E, n)` or
/// `(λ − 2α)^{m−n} subst(P_A, λ² − 2α(r+1)λ + r(3α² + 2α − 1), (1−α)E, n)`.
pub fn cf_rgraph(g: &Graph, via: Via) -> Result<BiPoly> {
    let r = require_regular(g, 1)? as i64;
    let n = g.n();
    let e = lam() - alpha() * 3 + 1;
    let base = match via {
        Via::Aalpha => {
            let num = lam().pow(2) - alpha() * lam() * (r + 2) + (alpha() * 3 - 1) * r;
            charpoly_direct(g).substitute_lambda(&num, &e, n)
        }
        Via::A => {
            let num = lam().pow(2) - alpha() * lam() * (2 * (r + 1)) + (alpha().pow(2) * 3 + alpha() * 2 - 1) * r;
            adjacency_lifted(g).substitute_lambda(&num, &((1 - alpha()) * e), n)
        }
    };
    with_power(base, &(lam() - alpha() * 2), g.m() as i64 - n as i64)
}

/// Q(G) of an `r`-regular graph. With `E = λ − (r+1)α + 1`:
///
/// * `Line`: `(λ − αr)^{n−m} subst(P_{l(G)}, λ² − α(r+2)λ + 2α(r+1) − 2, E, m)`
/// * `Aalpha`: `(F/(λ − αr))^{m−n} subst(P_G, N, E, n)` with
///   `F = λ² + (2 − α(3r+2))λ − 2rα + 2r(r+1)α²` and
///   `N = λ² − (αr + 2α + r − 2)λ + r(r+1)α − r`
/// * `A`: as `Aalpha` with `subst(P_A, N − αrE, (1−α)E, n)`.
pub fn cf_qgraph(g: &Graph, variant: QVariant) -> Result<BiPoly> {
    let r = require_regular(g, 1)? as i64;
    let (n, m) = (g.n(), g.m());
    let e = lam() - alpha() * (r + 1) + 1;
    let vert = lam() - alpha() * r;
    match variant {
        QVariant::Line => {
            let pl = line_regular_unchecked(g, Via::Aalpha)?;
            let num = lam().pow(2) - alpha() * lam() * (r + 2) + alpha() * (2 * (r + 1)) - 2;
            let base = pl.substitute_lambda(&num, &e, m);
            with_power(base, &vert, n as i64 - m as i64)
        }
        QVariant::Aalpha | QVariant::A => {
            let f = lam().pow(2) + (konst(2) - alpha() * (3 * r + 2)) * lam() - alpha() * (2 * r)
                + alpha().pow(2) * (2 * r * (r + 1));
            let n2 = lam().pow(2) - (alpha() * (r + 2) + (r - 2)) * lam() + alpha() * (r * (r + 1)) - r;
            let base = if variant == QVariant::Aalpha {
                charpoly_direct(g).substitute_lambda(&n2, &e, n)
            } else {
                let num = &n2 - &(alpha() * r * &e);
                adjacency_lifted(g).substitute_lambda(&num, &((1 - alpha()) * &e), n)
            };
            let (num, den) = if m >= n {
                (base * f.pow(m - n), vert.pow(m - n))
            } else {
                (base * vert.pow(n - m), f.pow(n - m))
            };
            num.exact_div(&den)
        }
    }
}

/// Total graph of an `r`-regular graph (`r ≥ 2`):
/// `(λ + 2 − 2α(r+1))^{m−n} det F(X)` where, with `X = A_α(G)`,
/// `F(X) = X² + (α(r+3) − 2λ + r − 3)X + (λ² − (α(r+2) + r − 2)λ + αr(r+1) − r)I`;
/// or with `Y = A(G)`,
/// `F(Y) = (1−α)²Y² − (1−α)(2λ + 3 − 3α(r+1) − r)Y
///        + (λ² − (r(3α+1) + 2(α−1))λ + 2αr²(α+1) + r(3α² − 2α − 1))I`.
pub fn cf_total(g: &Graph, via: Via) -> Result<BiPoly> {
    let r = require_regular(g, 2)? as i64;
    let n = g.n();
    let det = match via {
        Via::Aalpha => {
            let p = charpoly_direct(g);
            let coeffs: Vec<BiPoly> = p.coeffs().iter().cloned().map(BiPoly::from_alpha).collect();
            let b = alpha() * (r + 3) - lam() * 2 + (r - 3);
            let c = lam().pow(2) - (alpha() * (r + 2) + (r - 2)) * lam() + alpha() * (r * (r + 1)) - r;
            quadratic_det(&coeffs, &BiPoly::one(), &b, &c)?
        }
        Via::A => {
            let coeffs: Vec<BiPoly> = adjacency_charpoly(g).coeffs().iter().cloned().map(BiPoly::constant).collect();
            let om = 1 - alpha();
            let a = om.pow(2);
            let b = -(&om * &(lam() * 2 + 3 - alpha() * (3 * (r + 1)) - r));
            let c = lam().pow(2) - (alpha() * (3 * r) + r + alpha() * 2 - 2) * lam()
                + alpha() * (alpha() + 1) * (2 * r * r)
                + (alpha().pow(2) * 3 - alpha() * 2 - 1) * r;
            quadratic_det(&coeffs, &a, &b, &c)?
        }
    };
    with_power(det, &(lam() + 2 - alpha() * (2 * (r + 1))), g.m() as i64 - n as i64)
}

/// `det(aX² + bX + cI)` for a symmetric `X` with monic characteristic
/// polynomial `Σ p_k μ^k` (coefficients given low to high).
///
/// The determinant is `Π_i (aμ_i² + bμ_i + c) = a^n P(ρ₁) P(ρ₂)` over the
/// roots `ρ` of `aρ² + bρ + c`. With `R = aρ`, which satisfies
/// `R² + bR + ac = 0`, `a^n P(ρ) = Σ p_k a^{n−k} R^k` reduces to `U + VR`,
/// and the product over both roots is the norm `U² − bUV + acV²`,
/// giving `det = (U² − bUV + acV²) / a^n` with an exact division.
fn quadratic_det(p: &[BiPoly], a: &BiPoly, b: &BiPoly, c: &BiPoly) -> Result<BiPoly> {
    let n = p.len().saturating_sub(1);
    let ac = a * c;
    // R^k = u + v·R
    let (mut u, mut v) = (BiPoly::one(), BiPoly::zero());
    let (mut big_u, mut big_v) = (BiPoly::zero(), BiPoly::zero());
    for (k, pk) in p.iter().enumerate() {
        let w = pk * &a.pow(n - k);
        big_u += &(&w * &u);
        big_v += &(&w * &v);
        let next_u = -(&ac * &v);
        let next_v = &u - &(b * &v);
        u = next_u;
        v = next_v;
    }
    let norm = &big_u * &big_u - b * &big_u * &big_v + &ac * &big_v * &big_v;
    norm.exact_div(&a.pow(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::family_generate;
    use crate::ops::{attach_pendants, attach_pendants_at, coalesce, complement, line_graph, q_graph, r_graph, subdivision, total_graph};

    fn fam(s: &str) -> Graph {
        family_generate(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn complement_of_regular() {
        for s in ["cycle:5", "complete:4", "petersen", "cycle:6"] {
            let g = fam(s);
            assert_eq!(cf_complement_regular(&g).unwrap(), charpoly_direct(&complement(&g)), "{s}");
        }
        assert!(matches!(cf_complement_regular(&fam("path:3")), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn pendants() {
        let k2 = fam("complete:2");
        assert_eq!(cf_pendant_one(&k2, 0, 1).unwrap(), charpoly_direct(&fam("path:3")));
        let s3 = fam("star:3");
        assert_eq!(cf_pendant_one(&s3, 0, 1).unwrap(), charpoly_direct(&fam("star:4")));
        let k4 = fam("complete:4");
        assert_eq!(
            cf_pendant_one(&k4, 1, 3).unwrap(),
            charpoly_direct(&attach_pendants_at(&k4, 1, 3).unwrap())
        );
        let k6 = fam("complete:6");
        let t = [0, 2, 4, 5];
        assert_eq!(cf_pendant_many(&k6, &t).unwrap(), charpoly_direct(&attach_pendants(&k6, &t).unwrap()));
    }

    #[test]
    fn coalescence_small() {
        let k2 = fam("complete:2");
        let p3 = coalesce(&k2, 0, &k2, 0).unwrap();
        assert_eq!(cf_coalescence(&k2, 0, &k2, 0).unwrap(), charpoly_direct(&p3));
    }

    #[test]
    fn line_regular_both_ways() {
        for s in ["complete:4", "complete:5", "cycle:6", "petersen"] {
            let g = fam(s);
            let expect = charpoly_direct(&line_graph(&g).unwrap());
            assert_eq!(cf_line_regular(&g, Via::Aalpha).unwrap(), expect, "{s}");
            assert_eq!(cf_line_regular(&g, Via::A).unwrap(), expect, "{s}");
        }
        assert!(cf_line_regular(&fam("complete:2"), Via::A).is_err());
    }

    #[test]
    fn semiregular_line_graph() {
        for s in ["complete_bipartite:2,3", "star:4", "complete_bipartite:1,1", "complete_bipartite:3,3"] {
            let g = fam(s);
            let expect = charpoly_direct(&line_graph(&g).unwrap());
            for form in [SemiregularForm::Theorem, SemiregularForm::Corollary] {
                assert_eq!(cf_line_semiregular(&g, form).unwrap(), expect, "{s} {form:?}");
            }
            let classical = BiPoly::from_lambda_poly(&expect.eval_alpha(&Rational::from_integer(0.into())));
            assert_eq!(cf_classical_line_semiregular(&g).unwrap(), classical, "{s}");
        }
        let s4 = subdivision(&fam("complete:4"));
        let expect = charpoly_direct(&line_graph(&s4).unwrap());
        assert_eq!(cf_line_semiregular(&s4, SemiregularForm::Theorem).unwrap(), expect);
    }

    #[test]
    fn subdivision_r_q_total() {
        for s in ["complete:2", "complete:3", "complete:4", "cycle:5"] {
            let g = fam(s);
            let sd = charpoly_direct(&subdivision(&g));
            let rd = charpoly_direct(&r_graph(&g));
            let qd = charpoly_direct(&q_graph(&g));
            for via in [Via::Aalpha, Via::A] {
                assert_eq!(cf_subdivision(&g, via).unwrap(), sd, "S {s} {via:?}");
                assert_eq!(cf_rgraph(&g, via).unwrap(), rd, "R {s} {via:?}");
            }
            for v in [QVariant::Line, QVariant::Aalpha, QVariant::A] {
                assert_eq!(cf_qgraph(&g, v).unwrap(), qd, "Q {s} {v:?}");
            }
            if s != "complete:2" {
                let td = charpoly_direct(&total_graph(&g));
                for via in [Via::Aalpha, Via::A] {
                    assert_eq!(cf_total(&g, via).unwrap(), td, "T {s} {via:?}");
                }
            }
        }
    }

    #[test]
    fn quadratic_det_matches_bareiss() {
        use crate::charpoly::{alpha_matrix, polymatrix_det, PolyMatrix};
        let g = fam("double_broom:3,2,1");
        let x = alpha_matrix(&g);
        let (a, b, c) = (1 - alpha(), lam() - alpha() * 3, lam().pow(2) + alpha());
        let m = x.mul(&x).scale(&a).add(&x.scale(&b)).add(&PolyMatrix::scalar(x.size(), &c));
        let coeffs: Vec<BiPoly> = charpoly_direct(&g).coeffs().iter().cloned().map(BiPoly::from_alpha).collect();
        assert_eq!(quadratic_det(&coeffs, &a, &b, &c).unwrap(), polymatrix_det(&m));
    }
}
