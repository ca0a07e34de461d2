use aalpha_core::charpoly::{adjacency_charpoly, alpha_matrix, charpoly_direct, polymatrix_det, quotient_matrix};
use aalpha_core::corpus::{random_connected_graph, random_graph};
use aalpha_core::graph::{incidence_matrix, is_regular, is_semiregular_bipartite, SemiRegular};
use aalpha_core::ops::{complement, disjoint_union, line_graph, q_graph, subdivision, total_graph};
use aalpha_core::poly::{alpha, lam, parse_bipoly, rat, AlphaPoly, BiPoly, Rational, UniPoly};
use aalpha_core::verify::{alpha_grid, numeric_spectrum, roots_match};
use aalpha_core::{family_generate, FamilySpec, Graph};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn alpha_poly() -> impl Strategy<Value = AlphaPoly> {
    prop::collection::vec(-4i64..=4, 0..4).prop_map(|c| AlphaPoly::from_ints(&c))
}

fn bipoly() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec(alpha_poly(), 0..4).prop_map(BiPoly::from_coeffs)
}

fn nonzero_bipoly() -> impl Strategy<Value = BiPoly> {
    bipoly().prop_filter("nonzero", |p| !p.is_zero())
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=5).prop_map(|(p, q)| rat(p, q))
}

fn graph() -> impl Strategy<Value = Graph> {
    (1usize..=7, 0.0f64..1.0, any::<u64>()).prop_map(|(n, p, seed)| random_graph(&mut StdRng::seed_from_u64(seed), n, p))
}

fn connected_graph() -> impl Strategy<Value = Graph> {
    (1usize..=7, 0.0f64..0.7, any::<u64>())
        .prop_map(|(n, p, seed)| random_connected_graph(&mut StdRng::seed_from_u64(seed), n, p))
}

/// Evaluates at a point `(λ, α)`.
fn eval(p: &BiPoly, l: &Rational, a: &Rational) -> Rational {
    p.eval_alpha(a).eval(l)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(p in bipoly(), q in bipoly(), r in bipoly()) {
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn identity_substitution(p in bipoly()) {
        let d = p.lambda_degree().unwrap_or(0);
        prop_assert_eq!(p.substitute_lambda(&lam(), &BiPoly::one(), d), p);
    }

    #[test]
    fn substitution_matches_pointwise_evaluation(
        p in bipoly(), num in bipoly(), den in nonzero_bipoly(), l in small_rational(), a in small_rational()
    ) {
        let k = p.lambda_degree().unwrap_or(0);
        let d0 = eval(&den, &l, &a);
        prop_assume!(d0 != rat(0, 1));
        let lhs = eval(&p.substitute_lambda(&num, &den, k), &l, &a);
        let inner = eval(&num, &l, &a) / &d0;
        let rhs = p.eval_alpha(&a).eval(&inner) * num_traits::pow(d0, k);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitution_is_multiplicative(p in bipoly(), q in bipoly(), num in bipoly(), den in nonzero_bipoly()) {
        let (kp, kq) = (p.lambda_degree().unwrap_or(0), q.lambda_degree().unwrap_or(0));
        let lhs = (&p * &q).substitute_lambda(&num, &den, kp + kq);
        let rhs = p.substitute_lambda(&num, &den, kp) * q.substitute_lambda(&num, &den, kq);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn eval_alpha_is_a_ring_homomorphism(p in bipoly(), q in bipoly(), a in small_rational()) {
        prop_assert_eq!((&p + &q).eval_alpha(&a), &p.eval_alpha(&a) + &q.eval_alpha(&a));
        prop_assert_eq!((&p * &q).eval_alpha(&a), &p.eval_alpha(&a) * &q.eval_alpha(&a));
    }

    #[test]
    fn exact_division_inverts_multiplication(p in bipoly(), q in nonzero_bipoly()) {
        let prod = &p * &q;
        let back = prod.exact_div(&q).unwrap();
        prop_assert_eq!(&back * &q, prod);
        prop_assert_eq!(back, p);
    }

    #[test]
    fn cancelling_a_power_of_one_minus_alpha(q in bipoly()) {
        let w = 1 - alpha();
        prop_assert_eq!((w.pow(3) * &q).exact_div(&w).unwrap(), w.pow(2) * q);
    }

    #[test]
    fn text_round_trip(p in bipoly()) {
        prop_assert_eq!(parse_bipoly(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn univariate_power_sums_match_roots(roots in prop::collection::vec(-5i64..=5, 1..6)) {
        let p = roots.iter().fold(UniPoly::one(), |acc, &r| &acc * &UniPoly::from_ints(&[-r, 1]));
        let sums = p.power_sums(4);
        for (k, s) in sums.iter().enumerate() {
            let expect: i64 = roots.iter().map(|r| r.pow(k as u32 + 1)).sum();
            prop_assert_eq!(s, &rat(expect, 1));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn charpoly_trace_and_specializations(g in graph()) {
        let p = charpoly_direct(&g);
        let n = g.n();
        prop_assert_eq!(p.lambda_degree(), Some(n));
        prop_assert!(p.is_monic());
        prop_assert_eq!(p.coeff(n - 1), AlphaPoly::from_ints(&[0, -2 * g.m() as i64]));
        prop_assert_eq!(p.eval_alpha(&rat(0, 1)), adjacency_charpoly(&g));
        let degrees = g.degrees().iter().fold(UniPoly::one(), |acc, &d| &acc * &UniPoly::from_ints(&[-(d as i64), 1]));
        prop_assert_eq!(p.eval_alpha(&rat(1, 1)), degrees);
    }

    #[test]
    fn charpoly_is_a_graph_invariant(g in graph(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut StdRng::seed_from_u64(seed));
        prop_assert_eq!(charpoly_direct(&g.permute(&perm).unwrap()), charpoly_direct(&g));
    }

    #[test]
    fn union_multiplies_charpolys(g in graph(), h in graph()) {
        prop_assert_eq!(charpoly_direct(&disjoint_union(&g, &h)), charpoly_direct(&g) * charpoly_direct(&h));
    }

    #[test]
    fn bareiss_agrees_with_faddeev_leverrier(g in graph()) {
        prop_assume!(g.n() <= 6);
        prop_assert_eq!(polymatrix_det(&alpha_matrix(&g).char_matrix()), charpoly_direct(&g));
    }

    #[test]
    fn single_class_quotient_divides_for_regular_graphs(g in connected_graph()) {
        // the single-class partition is equitable exactly for regular graphs
        if is_regular(&g).is_some() {
            let q = quotient_matrix(&g, &[(0..g.n()).collect()]).unwrap();
            prop_assert!(charpoly_direct(&g).divisible_by(&q.charpoly()));
        }
    }

    #[test]
    fn incidence_identities(g in graph()) {
        let b = incidence_matrix(&g);
        let a = g.adjacency_matrix();
        let bbt = b.b_bt();
        for i in 0..g.n() {
            for j in 0..g.n() {
                let expect = if i == j { g.degree(i) as i64 } else { a[i][j] };
                prop_assert_eq!(bbt[i][j], expect);
            }
        }
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.m());
        if g.m() > 0 {
            let l = line_graph(&g).unwrap().adjacency_matrix();
            let btb = b.bt_b();
            for i in 0..g.m() {
                for j in 0..g.m() {
                    prop_assert_eq!(btb[i][j] - if i == j { 2 } else { 0 }, l[i][j]);
                }
            }
        }
    }

    #[test]
    fn operation_shapes(g in connected_graph()) {
        prop_assert_eq!(complement(&complement(&g)), g.clone());
        if g.m() > 0 {
            prop_assert_eq!(line_graph(&g).unwrap().n(), g.m());
            // Q(G) restricted to the edge vertices is l(G)
            let q = q_graph(&g);
            let l = line_graph(&g).unwrap();
            for i in 0..g.m() {
                for j in 0..g.m() {
                    prop_assert_eq!(q.has_edge(g.n() + i, g.n() + j), l.has_edge(i, j));
                }
            }
        }
        if let Some(r) = is_regular(&g).filter(|&r| r >= 1) {
            prop_assert_eq!(is_regular(&line_graph(&g).unwrap()), (g.m() > 0).then_some(2 * r - 2));
            let t = total_graph(&g);
            prop_assert_eq!(t.n(), g.n() + g.m());
            prop_assert_eq!(is_regular(&t), Some(2 * r));
            let s = subdivision(&g);
            prop_assert!(aalpha_core::graph::bipartition(&s).is_some());
            for v in 0..s.n() {
                prop_assert_eq!(s.degree(v), if v < g.n() { r } else { 2 });
            }
        }
    }

    #[test]
    fn edge_list_round_trip(g in graph()) {
        prop_assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn numeric_trace_identities(g in graph(), k in 0i64..=7) {
        let a = k as f64 / 7.0;
        let spec = numeric_spectrum(&g, a).unwrap();
        let n = g.n() as f64;
        let sum: f64 = spec.values.iter().sum();
        prop_assert!((sum - 2.0 * g.m() as f64 * a).abs() <= 1e-9 * n);
        // trace(A_α²) = Σ (α d)² + 2m(1−α)²
        let tr2: f64 = g.degrees().iter().map(|&d| (a * d as f64).powi(2)).sum::<f64>()
            + 2.0 * g.m() as f64 * (1.0 - a).powi(2);
        let sq: f64 = spec.values.iter().map(|x| x * x).sum();
        prop_assert!((sq - tr2).abs() <= 1e-8 * n * n);
        prop_assert!(spec.values.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn direct_charpoly_matches_numeric_roots(g in graph()) {
        let r = roots_match(&charpoly_direct(&g), &g, &alpha_grid(11), 1e-8);
        prop_assert!(r.passed(), "{}", r);
    }
}

#[test]
fn complete_bipartite_is_semiregular() {
    for a in 1..=8 {
        for b in 1..=8 {
            let g = family_generate(&FamilySpec::CompleteBipartite(a, b)).unwrap();
            let expect = SemiRegular { n1: a.max(b), n2: a.min(b), r1: a.min(b), r2: a.max(b) };
            assert_eq!(is_semiregular_bipartite(&g), Some(expect), "K{a},{b}");
        }
    }
}

#[test]
fn semiregular_adjacency_has_sqrt_r1r2_eigenvalues() {
    for spec in ["complete_bipartite:2,4", "complete_bipartite:3,3", "star:5"] {
        let g = family_generate(&spec.parse().unwrap()).unwrap();
        let s = is_semiregular_bipartite(&g).unwrap();
        let q = lam().pow(2) - (s.r1 * s.r2) as i64;
        let a0 = BiPoly::from_lambda_poly(&charpoly_direct(&g).eval_alpha(&rat(0, 1)));
        assert!(a0.divisible_by(&q), "{spec}");
    }
    let s4 = subdivision(&family_generate(&FamilySpec::Complete(4)).unwrap());
    let s = is_semiregular_bipartite(&s4).unwrap();
    let a0 = BiPoly::from_lambda_poly(&charpoly_direct(&s4).eval_alpha(&rat(0, 1)));
    assert!(a0.divisible_by(&(lam().pow(2) - (s.r1 * s.r2) as i64)));
}

#[test]
fn family_degree_sums() {
    for spec in ["path:6", "cycle:7", "complete:5", "star:6", "complete_bipartite:3,4", "pineapple:4,3",
        "double_star:2,3", "double_broom:4,2,3", "petersen"] {
        let g = family_generate(&spec.parse().unwrap()).unwrap();
        assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.m(), "{spec}");
    }
}
