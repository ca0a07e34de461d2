//! Floating-point checks at sampled α.

use rand::Rng;

use super::jacobi::symmetric_eigenvalues;
use super::{Mode, Status, VerdictReport, Witness};
use crate::charpoly::quotient_matrix;
use crate::error::{Error, Result};
use crate::graph::{is_regular, Graph};
use crate::ops::total_graph;
use crate::poly::rational::to_f64;
use crate::poly::{rat, BiPoly, Rational};

/// Default tolerance of the numeric checks.
pub const DEFAULT_TOL: f64 = 1e-8;

/// Radicands below this fraction of `ρ²` make individual roots too
/// ill-conditioned to compare one by one; only power sums are used then.
const SEPARATED_RADICAND: f64 = 1e-6;

/// Eigenvalues of `A_α(G)` at one α, non-increasing.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericSpectrum {
    pub values: Vec<f64>,
    pub alpha: f64,
}

impl NumericSpectrum {
    /// `max(1, max |μ|)`.
    pub fn scale(&self) -> f64 {
        self.values.iter().fold(1.0_f64, |s, v| s.max(v.abs()))
    }
}

fn alpha_matrix_f64(g: &Graph, alpha: f64) -> Vec<Vec<f64>> {
    let n = g.n();
    let mut m = vec![vec![0.0; n]; n];
    for (v, row) in m.iter_mut().enumerate() {
        row[v] = alpha * g.degree(v) as f64;
        for &w in g.neighbors(v) {
            row[w] = 1.0 - alpha;
        }
    }
    m
}

/// Spectrum of `αD + (1−α)A` by cyclic Jacobi.
pub fn numeric_spectrum(g: &Graph, alpha: f64) -> Result<NumericSpectrum> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::Parameter(format!("alpha = {alpha} is outside [0, 1]")));
    }
    let values = symmetric_eigenvalues(&alpha_matrix_f64(g, alpha))?;
    Ok(NumericSpectrum { values, alpha })
}

/// `points` equally spaced values `0, 1/(points−1), …, 1`.
pub fn alpha_grid(points: usize) -> Vec<Rational> {
    match points {
        0 => Vec::new(),
        1 => vec![rat(0, 1)],
        _ => {
            let d = (points - 1) as i64;
            (0..=d).map(|k| rat(k, d)).collect()
        }
    }
}

/// The 11-point grid plus three random rationals in `(0, 1)`.
pub fn default_alpha_grid<R: Rng + ?Sized>(rng: &mut R) -> Vec<Rational> {
    let mut grid = alpha_grid(11);
    for _ in 0..3 {
        let q = rng.gen_range(11..=97);
        grid.push(rat(rng.gen_range(1..q), q));
    }
    grid
}

fn describe(g: &Graph) -> String {
    format!("graph(n={},m={})", g.n(), g.m())
}

fn numeric_report(id: &str, graph: String, worst: f64, tol: f64, detail: Option<String>) -> VerdictReport {
    let pass = worst <= tol;
    VerdictReport {
        id: id.to_string(),
        graph,
        mode: Mode::Numeric,
        status: if pass { Status::Pass } else { Status::Fail },
        witness: (!pass).then_some(Witness::Deviation(worst)),
        detail,
    }
}

fn failure(id: &str, graph: String, msg: String) -> VerdictReport {
    VerdictReport {
        id: id.to_string(),
        graph,
        mode: Mode::Numeric,
        status: Status::Fail,
        witness: Some(Witness::Message(msg)),
        detail: None,
    }
}

fn not_met(id: &str, graph: String, msg: String) -> VerdictReport {
    VerdictReport {
        id: id.to_string(),
        graph,
        mode: Mode::Numeric,
        status: Status::HypothesisNotMet,
        witness: None,
        detail: Some(msg),
    }
}

fn numeric_power_sums(values: &[f64], count: usize) -> Vec<f64> {
    let mut pw = values.to_vec();
    let mut sums = Vec::with_capacity(count);
    for _ in 0..count {
        sums.push(pw.iter().sum());
        for (p, v) in pw.iter_mut().zip(values) {
            *p *= v;
        }
    }
    sums
}

/// Largest `|a_k − b_k| / (n ρ^k)` over the first power sums.
fn power_sum_deviation(a: &[f64], b: &[f64], n: usize, rho: f64) -> f64 {
    let mut worst = 0.0_f64;
    let mut scale = n.max(1) as f64;
    for (x, y) in a.iter().zip(b) {
        scale *= rho;
        worst = worst.max((x - y).abs() / scale);
    }
    worst
}

/// Checks that the roots of `p(α, ·)` are the eigenvalues of `A_α(G)` at
/// every sampled α.
///
/// Two tests per α, both scaled by `ρ = max(1, spectral radius)`: each
/// eigenvalue must be an approximate root, and the first `n` power sums of
/// the eigenvalues must match those of `p` (Newton's identities), which
/// pins down the multiset.
pub fn roots_match(p: &BiPoly, g: &Graph, alphas: &[Rational], tol: f64) -> VerdictReport {
    const ID: &str = "roots-match";
    let n = g.n();
    let mut worst = 0.0_f64;
    for a in alphas {
        let pa = p.eval_alpha(a);
        if pa.degree() != Some(n) {
            return failure(ID, describe(g), format!("λ-degree at α = {a} is {:?}, expected {n}", pa.degree()));
        }
        let spec = match numeric_spectrum(g, to_f64(a)) {
            Ok(s) => s,
            Err(e) => return failure(ID, describe(g), e.to_string()),
        };
        let rho = spec.scale();
        let lead = to_f64(&pa.coeffs()[n]);
        let coeffs: Vec<f64> = pa.coeffs().iter().map(|c| to_f64(c) / lead).collect();
        let scale: f64 = coeffs.iter().rev().fold(0.0, |acc, c| acc * rho + c.abs());
        for &mu in &spec.values {
            let value = coeffs.iter().rev().fold(0.0, |acc, c| acc * mu + c);
            worst = worst.max(value.abs() / scale);
        }
        if n > 0 {
            let exact: Vec<f64> = pa.power_sums(n).iter().map(to_f64).collect();
            let numeric = numeric_power_sums(&spec.values, n);
            worst = worst.max(power_sum_deviation(&exact, &numeric, n, rho));
        }
    }
    numeric_report(ID, describe(g), worst, tol, Some(format!("{} alpha samples", alphas.len())))
}

/// A predicted eigenvalue pair `c ± √rad / 2`.
#[derive(Clone, Copy, Debug)]
struct Pair {
    c: f64,
    rad: f64,
}

impl Pair {
    /// `x₁^k + x₂^k`, a polynomial in `c` and `rad`, so it is well defined
    /// for negative radicands and stable at double roots.
    fn power_sums(self, count: usize) -> Vec<f64> {
        // xᵢ satisfy x² = 2c·x − e with e = c² − rad/4
        let e = self.c * self.c - self.rad / 4.0;
        let mut out = Vec::with_capacity(count);
        let (mut prev, mut cur) = (2.0, 2.0 * self.c);
        for _ in 0..count {
            out.push(cur);
            let next = 2.0 * self.c * cur - e * prev;
            prev = cur;
            cur = next;
        }
        out
    }
}

/// Numerically checks both radical eigenvalue formulas for the total graph
/// of an `r`-regular graph, `r ≥ 2`.
///
/// From each eigenvalue `μ` of `A_α(G)`:
/// `½(2(α + μ − 1) + r(α + 1) ± √((α − 1)(α(r+2)² − r² − 4(1 + μ))))`;
/// from each eigenvalue `θ` of `A(G)`:
/// `½(−2(α − 1)(θ − 1) + r(3α + 1) ± (α − 1)√(4θ + r² + 4))`;
/// together with `m − n` copies of `2α(r+1) − 2`, either list must be the
/// spectrum of `A_α(T(G))`.
pub fn check_tg_eigenvalue_formulas(g: &Graph, alphas: &[Rational], tol: f64) -> VerdictReport {
    const ID: &str = "tg-eigenvalue-formulas";
    let r = match is_regular(g) {
        Some(r) if r >= 2 => r as f64,
        _ => return not_met(ID, describe(g), "graph must be r-regular with r ≥ 2".into()),
    };
    let t = total_graph(g);
    let extra = g.m() - g.n();
    let adjacency = match numeric_spectrum(g, 0.0) {
        Ok(s) => s,
        Err(e) => return failure(ID, describe(g), e.to_string()),
    };
    let mut worst = 0.0_f64;
    for a in alphas {
        let al = to_f64(a);
        let (spec, target) = match (numeric_spectrum(g, al), numeric_spectrum(&t, al)) {
            (Ok(s), Ok(t)) => (s, t),
            (Err(e), _) | (_, Err(e)) => return failure(ID, describe(g), e.to_string()),
        };
        let via_aalpha = spec.values.iter().map(|&mu| Pair {
            c: (2.0 * (al + mu - 1.0) + r * (al + 1.0)) / 2.0,
            rad: (al - 1.0) * (al * (r + 2.0).powi(2) - r * r - 4.0 * (1.0 + mu)),
        });
        let via_a = adjacency.values.iter().map(|&th| Pair {
            c: (-2.0 * (al - 1.0) * (th - 1.0) + r * (3.0 * al + 1.0)) / 2.0,
            rad: (al - 1.0).powi(2) * (4.0 * th + r * r + 4.0),
        });
        let fixed = 2.0 * al * (r + 1.0) - 2.0;
        for pairs in [via_aalpha.collect::<Vec<_>>(), via_a.collect()] {
            worst = worst.max(compare_predicted(&pairs, fixed, extra, &target.values));
        }
    }
    numeric_report(ID, describe(g), worst, tol, Some(format!("{} alpha samples", alphas.len())))
}

/// Scaled deviation between the predicted multiset and `target`.
fn compare_predicted(pairs: &[Pair], fixed: f64, extra: usize, target: &[f64]) -> f64 {
    let order = target.len();
    if 2 * pairs.len() + extra != order {
        return f64::INFINITY;
    }
    let rho = target.iter().fold(1.0_f64, |s, v| s.max(v.abs()));
    let mut predicted_sums = vec![0.0; order];
    for p in pairs {
        for (acc, s) in predicted_sums.iter_mut().zip(p.power_sums(order)) {
            *acc += s;
        }
    }
    let mut fk = 1.0;
    for acc in predicted_sums.iter_mut() {
        fk *= fixed;
        *acc += extra as f64 * fk;
    }
    let mut worst = power_sum_deviation(&predicted_sums, &numeric_power_sums(target, order), order, rho);
    // element-wise comparison when every pair is well separated
    if pairs.iter().all(|p| p.rad > SEPARATED_RADICAND * rho * rho) {
        let mut values: Vec<f64> = pairs
            .iter()
            .flat_map(|p| {
                let s = p.rad.sqrt() / 2.0;
                [p.c + s, p.c - s]
            })
            .chain(std::iter::repeat_n(fixed, extra))
            .collect();
        values.sort_by(|x, y| y.total_cmp(x));
        for (x, y) in values.iter().zip(target) {
            worst = worst.max((x - y).abs() / rho);
        }
    }
    worst
}

/// Checks that every eigenvalue of the quotient matrix of `partition` is an
/// eigenvalue of `A_α(G)`.
///
/// The quotient `N` is similar to the symmetric `S^{1/2} N S^{−1/2}`, with
/// `S` the diagonal of class sizes, which is what gets diagonalized.
pub fn check_equitable_inclusion(g: &Graph, partition: &[Vec<usize>], alphas: &[Rational], tol: f64) -> VerdictReport {
    const ID: &str = "equitable-inclusion";
    let q = match quotient_matrix(g, partition) {
        Ok(q) => q,
        Err(e @ (Error::NotEquitable { .. } | Error::Parameter(_))) => {
            return not_met(ID, describe(g), e.to_string())
        }
        Err(e) => return failure(ID, describe(g), e.to_string()),
    };
    let sizes: Vec<f64> = q.class_sizes().iter().map(|&c| c as f64).collect();
    let mut worst = 0.0_f64;
    for a in alphas {
        let al = to_f64(a);
        let mut n = q.eval_f64(al);
        for (i, row) in n.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x *= (sizes[i] / sizes[j]).sqrt();
            }
        }
        let (quot, full) = match (symmetric_eigenvalues(&n), numeric_spectrum(g, al)) {
            (Ok(q), Ok(f)) => (q, f),
            (Err(e), _) | (_, Err(e)) => return failure(ID, describe(g), e.to_string()),
        };
        let rho = full.scale();
        for x in quot {
            let d = full.values.iter().map(|y| (x - y).abs()).fold(f64::INFINITY, f64::min);
            worst = worst.max(d / rho);
        }
    }
    numeric_report(ID, describe(g), worst, tol, Some(format!("{} classes", partition.len())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charpoly::charpoly_direct;
    use crate::graph::{family_generate, FamilySpec};
    use crate::poly::lam;

    fn fam(s: &str) -> Graph {
        family_generate(&s.parse().unwrap()).unwrap()
    }

    fn close(a: &[f64], b: &[f64]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-9)
    }

    #[test]
    fn complete_graph_spectrum() {
        let s = numeric_spectrum(&fam("complete:3"), 0.5).unwrap();
        assert!(close(&s.values, &[2.0, 0.5, 0.5]));
        assert!(numeric_spectrum(&fam("complete:3"), 1.5).is_err());
    }

    #[test]
    fn alpha_one_gives_degrees() {
        let g = fam("double_broom:3,2,1");
        let s = numeric_spectrum(&g, 1.0).unwrap();
        let mut d: Vec<f64> = g.degrees().iter().map(|&d| d as f64).collect();
        d.sort_by(|x, y| y.total_cmp(x));
        assert!(close(&s.values, &d));
    }

    #[test]
    fn petersen_adjacency_spectrum() {
        let s = numeric_spectrum(&fam("petersen"), 0.0).unwrap();
        let expect = [3.0, 1.0, 1.0, 1.0, 1.0, 1.0, -2.0, -2.0, -2.0, -2.0];
        assert!(close(&s.values, &expect));
    }

    #[test]
    fn roots_match_accepts_right_and_rejects_wrong() {
        let k5 = fam("complete:5");
        let grid = alpha_grid(5);
        assert!(roots_match(&charpoly_direct(&k5), &k5, &grid, 1e-8).passed());
        let r = roots_match(&lam().pow(5), &k5, &grid, 1e-8);
        assert_eq!(r.status, Status::Fail);
        assert!(matches!(r.witness, Some(Witness::Deviation(d)) if d > 1e-3));
        let r = roots_match(&lam().pow(4), &k5, &grid, 1e-8);
        assert!(matches!(r.witness, Some(Witness::Message(_))));
    }

    #[test]
    fn total_graph_formulas() {
        for name in ["complete:3", "complete:4", "cycle:5", "cycle:6", "petersen"] {
            let r = check_tg_eigenvalue_formulas(&fam(name), &alpha_grid(11), 1e-8);
            assert!(r.passed(), "{name}: {r}");
        }
        let r = check_tg_eigenvalue_formulas(&fam("path:4"), &alpha_grid(3), 1e-8);
        assert_eq!(r.status, Status::HypothesisNotMet);
    }

    #[test]
    fn predicted_multiset_comparison() {
        let pairs = [Pair { c: 1.0, rad: 4.0 }];
        assert!(compare_predicted(&pairs, 0.0, 0, &[2.0, 0.0]) < 1e-12);
        assert!(compare_predicted(&pairs, 0.0, 0, &[2.0, -0.5]) > 1e-3);
        // complex pair 1 ± i has power sums 2, 0, −4, ...
        let cp = Pair { c: 1.0, rad: -4.0 }.power_sums(3);
        assert!(close(&cp, &[2.0, 0.0, -4.0]));
    }

    #[test]
    fn equitable_inclusion() {
        let star = fam("star:4");
        let r = check_equitable_inclusion(&star, &[vec![0], vec![1, 2, 3]], &[rat(1, 2)], 1e-8);
        assert!(r.passed(), "{r}");
        let k5 = fam("complete:5");
        assert!(check_equitable_inclusion(&k5, &[(0..5).collect()], &alpha_grid(4), 1e-8).passed());
        let k23 = family_generate(&FamilySpec::CompleteBipartite(2, 3)).unwrap();
        assert!(check_equitable_inclusion(&k23, &[vec![0, 1], vec![2, 3, 4]], &alpha_grid(11), 1e-8).passed());
        let p4 = fam("path:4");
        let r = check_equitable_inclusion(&p4, &[vec![0, 1], vec![2, 3]], &alpha_grid(3), 1e-8);
        assert_eq!(r.status, Status::HypothesisNotMet);
    }

    #[test]
    fn grids() {
        assert_eq!(alpha_grid(11).len(), 11);
        assert_eq!(alpha_grid(3), vec![rat(0, 1), rat(1, 2), rat(1, 1)]);
        let g = default_alpha_grid(&mut rand::thread_rng());
        assert_eq!(g.len(), 14);
        assert!(g.iter().all(|a| *a >= rat(0, 1) && *a <= rat(1, 1)));
    }
}
