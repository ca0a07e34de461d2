//! Test corpora: small graphs up to isomorphism, connected regular graphs,
//! semi-regular bipartite instances and random graphs.
//!
//! Isomorphism classes are found by bucketing candidates under a cheap
//! vertex invariant and running an exact backtracking isomorphism test
//! inside each bucket, which is plenty for `n ≤ 8`.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::closed_forms::{TheoremId, TheoremInput};
use crate::graph::{family_generate, FamilySpec, Graph};
use crate::ops::{complement, subdivision};

/// Per-vertex `(degree, sorted neighbour degrees, triangles)`, sorted.
type Invariant = Vec<(usize, Vec<usize>, usize)>;

fn invariant(g: &Graph) -> Invariant {
    let mut inv: Invariant = (0..g.n())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
            nd.sort_unstable();
            let nb = g.neighbors(v);
            let tri = nb
                .iter()
                .enumerate()
                .map(|(i, &a)| nb[i + 1..].iter().filter(|&&b| g.has_edge(a, b)).count())
                .sum();
            (g.degree(v), nd, tri)
        })
        .collect();
    inv.sort_unstable();
    inv
}

/// Exact isomorphism test by backtracking with degree pruning.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.m() != h.m() {
        return false;
    }
    let mut gd = g.degrees();
    let mut hd = h.degrees();
    gd.sort_unstable();
    hd.sort_unstable();
    if gd != hd {
        return false;
    }
    let mut map = vec![usize::MAX; g.n()];
    let mut used = vec![false; h.n()];
    extend(g, h, 0, &mut map, &mut used)
}

fn extend(g: &Graph, h: &Graph, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    if v == g.n() {
        return true;
    }
    for w in 0..h.n() {
        if used[w] || g.degree(v) != h.degree(w) {
            continue;
        }
        if (0..v).any(|u| g.has_edge(u, v) != h.has_edge(map[u], w)) {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(g, h, v + 1, map, used) {
            return true;
        }
        used[w] = false;
    }
    map[v] = usize::MAX;
    false
}

/// Collects isomorphism-class representatives in first-seen order.
#[derive(Default)]
struct ClassSet {
    buckets: HashMap<Invariant, Vec<usize>>,
    reps: Vec<Graph>,
}

impl ClassSet {
    fn insert(&mut self, g: Graph) {
        let bucket = self.buckets.entry(invariant(&g)).or_default();
        if bucket.iter().any(|&i| is_isomorphic(&self.reps[i], &g)) {
            return;
        }
        bucket.push(self.reps.len());
        self.reps.push(g);
    }
}

/// Deduplicates a list of graphs up to isomorphism.
pub fn dedup_isomorphic(graphs: impl IntoIterator<Item = Graph>) -> Vec<Graph> {
    let mut set = ClassSet::default();
    for g in graphs {
        set.insert(g);
    }
    set.reps
}

/// One representative of every graph on `n` vertices (1, 2, 4, 11, 34,
/// 156, 1044 for `n = 1..=7`).
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(0)];
    for k in 1..=n {
        // every graph on k vertices is a graph on k − 1 plus a vertex
        let mut set = ClassSet::default();
        for g in &level {
            for mask in 0u32..(1 << (k - 1)) {
                let extra = (0..k - 1).filter(|&u| mask >> u & 1 == 1).map(|u| (u, k - 1));
                let h = Graph::new(k, g.edges().iter().copied().chain(extra)).expect("valid extension");
                set.insert(h);
            }
        }
        level = set.reps;
    }
    level
}

/// Connected graphs on exactly `n` vertices, up to isomorphism.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}

/// Connected `r`-regular graphs on `n` vertices, up to isomorphism.
pub fn regular_graphs(n: usize, r: usize) -> Vec<Graph> {
    if n == 0 || r >= n || (n * r) % 2 == 1 {
        return Vec::new();
    }
    // the complement of an r-regular graph is (n−1−r)-regular; enumerate
    // the sparser side
    let flip = 2 * r > n - 1;
    let s = if flip { n - 1 - r } else { r };
    let mut labeled = Vec::new();
    let mut deg = vec![0usize; n];
    let mut edges = Vec::new();
    regular_search(n, s, 0, 1, &mut deg, &mut edges, &mut labeled);
    let graphs = labeled.into_iter().map(|g| if flip { complement(&g) } else { g });
    dedup_isomorphic(graphs.filter(Graph::is_connected))
}

fn regular_search(
    n: usize,
    r: usize,
    u: usize,
    next: usize,
    deg: &mut [usize],
    edges: &mut Vec<(usize, usize)>,
    out: &mut Vec<Graph>,
) {
    if u == n {
        out.push(Graph::new(n, edges.iter().copied()).expect("valid edges"));
        return;
    }
    if deg[u] == r {
        return regular_search(n, r, u + 1, u + 2, deg, edges, out);
    }
    // u still needs r − deg[u] neighbours among next..n
    if n - next < r - deg[u] {
        return;
    }
    // vertex 0's neighbourhood can be fixed to 1..=r up to relabeling
    if u == 0 {
        let nb: Vec<usize> = (1..=r).collect();
        for &w in &nb {
            deg[w] += 1;
            edges.push((0, w));
        }
        deg[0] = r;
        regular_search(n, r, 1, 2, deg, edges, out);
        for &w in &nb {
            deg[w] -= 1;
            edges.pop();
        }
        deg[0] = 0;
        return;
    }
    for w in next..n {
        if deg[w] < r {
            deg[u] += 1;
            deg[w] += 1;
            edges.push((u, w));
            regular_search(n, r, u, w + 1, deg, edges, out);
            edges.pop();
            deg[u] -= 1;
            deg[w] -= 1;
        }
    }
}

/// All connected regular graphs with `n ≤ max_n` and degree `r ≥ min_r`.
pub fn connected_regular_graphs(max_n: usize, min_r: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for r in min_r..n {
            out.extend(regular_graphs(n, r));
        }
    }
    out
}

/// Semi-regular bipartite instances: `K_{a,b}` with `a, b ≤ max_part`, plus
/// `S(K_4)` and `S(Petersen)`.
pub fn semiregular_corpus(max_part: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for a in 1..=max_part {
        for b in 1..=max_part {
            out.push(family_generate(&FamilySpec::CompleteBipartite(a, b)).expect("valid family"));
        }
    }
    out.push(subdivision(&family_generate(&FamilySpec::Complete(4)).expect("valid family")));
    out.push(subdivision(&family_generate(&FamilySpec::Petersen).expect("valid family")));
    out
}

/// Families with closed-form spectra: `K_n` (`n = 2..=8`), `K_{a,b}`
/// (`a, b ≤ 5`) and `K_{1,n−1}` (`n ≤ 9`).
pub fn spectrum_families() -> Vec<FamilySpec> {
    let mut v: Vec<FamilySpec> = (2..=8).map(FamilySpec::Complete).collect();
    for a in 1..=5 {
        for b in 1..=5 {
            v.push(FamilySpec::CompleteBipartite(a, b));
        }
    }
    v.extend((1..=9).map(FamilySpec::Star));
    v
}

/// The standard verification workload: every theorem paired with every
/// input of the corpus it applies to (inputs that miss a hypothesis are
/// included; they report as not applicable).
///
/// Single-graph theorems run over all connected graphs with
/// `n ≤ max_connected`, connected regular graphs up to one vertex more
/// (capped at 8), and [`semiregular_corpus`]`(4)`. Pendant theorems use
/// connected graphs up to `min(max_connected, 6)` vertices, coalescence all
/// pairs of connected graphs up to 4 vertices.
pub fn standard_inputs(max_connected: usize) -> Vec<(TheoremId, TheoremInput)> {
    let mut out = Vec::new();
    for spec in spectrum_families() {
        let n = family_generate(&spec).map(|g| g.n()).unwrap_or(0);
        out.push((TheoremId::FamilySpectrum, TheoremInput::Family(spec)));
        for vertex in 0..n {
            out.push((TheoremId::SubmatrixSpectrum, TheoremInput::Submatrix { family: spec, vertex }));
        }
    }
    let mut graphs: Vec<Graph> = (1..=max_connected).flat_map(connected_graphs).collect();
    let regular_max = (max_connected + 1).min(8);
    graphs.extend(connected_regular_graphs(regular_max, 1).into_iter().filter(|g| g.n() > max_connected));
    graphs.extend(semiregular_corpus(4));
    for g in &graphs {
        for id in TheoremId::ALL.into_iter().filter(|id| id.takes_graph()) {
            out.push((id, TheoremInput::Graph(g.clone())));
        }
    }
    for g in (2..=max_connected.min(6)).flat_map(connected_graphs) {
        for v in 0..g.n() {
            out.push((TheoremId::PendantOne, TheoremInput::PendantOne { h: g.clone(), v, s: 1 + v % 3 }));
        }
        let targets: Vec<usize> = (0..g.n()).step_by(2).collect();
        out.push((TheoremId::PendantMany, TheoremInput::PendantMany { g, targets }));
    }
    let small: Vec<Graph> = (1..=max_connected.min(4)).flat_map(connected_graphs).collect();
    for g in &small {
        for h in &small {
            let input = TheoremInput::Coalescence { g: g.clone(), u: 0, h: h.clone(), v: h.n() - 1 };
            out.push((TheoremId::Coalescence, input));
        }
    }
    out
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::new(n, edges).expect("valid edges")
}

/// A random spanning tree (random attachment order) plus every other edge
/// independently with probability `p`.
pub fn random_connected_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        edges.push((order[i].min(parent), order[i].max(parent)));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("valid edges")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn graph_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| all_graphs(n).len()).collect();
        assert_eq!(counts, [1, 2, 4, 11, 34]);
        let connected: Vec<usize> = (1..=5).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(connected, [1, 1, 2, 6, 21]);
    }

    #[test]
    fn regular_counts() {
        // K3,3 and the triangular prism
        assert_eq!(regular_graphs(6, 3).len(), 2);
        assert_eq!(regular_graphs(6, 2).len(), 1);
        assert_eq!(regular_graphs(5, 2).len(), 1);
        assert_eq!(regular_graphs(8, 3).len(), 5);
        assert_eq!(regular_graphs(8, 4).len(), 6);
        assert!(regular_graphs(5, 3).is_empty());
        assert_eq!(regular_graphs(2, 1).len(), 1);
    }

    #[test]
    fn standard_inputs_cover_every_theorem() {
        let jobs = standard_inputs(4);
        for id in TheoremId::ALL {
            assert!(jobs.iter().any(|(j, _)| *j == id), "{id}");
        }
    }

    #[test]
    fn isomorphism() {
        let c = family_generate(&FamilySpec::Cycle(5)).unwrap();
        let shuffled = c.permute(&[3, 0, 4, 1, 2]).unwrap();
        assert!(is_isomorphic(&c, &shuffled));
        let p = family_generate(&FamilySpec::Path(5)).unwrap();
        assert!(!is_isomorphic(&c, &p));
    }

    #[test]
    fn random_connected_is_connected() {
        let mut rng = StdRng::seed_from_u64(7);
        for n in 1..8 {
            let g = random_connected_graph(&mut rng, n, 0.2);
            assert!(g.is_connected());
            assert_eq!(g.n(), n);
        }
        assert_eq!(random_graph(&mut rng, 6, 0.0).m(), 0);
        assert_eq!(random_graph(&mut rng, 6, 1.0).m(), 15);
    }
}
