//! Simple undirected graphs, named families and the incidence matrix.
//!
//! Vertices are `0..n`. Edges are stored as pairs `(u, v)` with `u < v`
//! in lexicographic order; this *canonical edge order* fixes the column
//! order of the incidence matrix and the vertex order of derived graphs.
//!
//! Family labelings:
//!
//! | family | labeling |
//! |---|---|
//! | `Path(n)` | `0 - 1 - … - (n−1)` |
//! | `Cycle(n)` | path plus the edge `0 - (n−1)` |
//! | `Complete(n)` | `0..n` |
//! | `Star(n)` = K₁,ₙ₋₁ | center `0`, leaves `1..n` |
//! | `CompleteBipartite(a, b)` | parts `0..a` and `a..a+b` |
//! | `Pineapple(m, n)` | clique `0..m`, apex `0`, pendants `m..m+n` on the apex |
//! | `DoubleStar(m, n)` | centers `0` and `1` joined; leaves `2..m+2` on `0`, `m+2..m+n+2` on `1` |
//! | `DoubleBroom(q, n, m)` | path `0..q`; `n` pendants on `0`, then `m` pendants on `q−1` |
//! | `Petersen` | outer 5-cycle `0..5`, inner pentagram `5..10` (`5+i ~ 5+(i+2)%5`), spokes `i ~ i+5` |

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{param, Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    nbrs: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge iterator. Endpoints may be given in
    /// either order; self-loops, repeated edges and out-of-range vertices
    /// are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return param(format!("edge ({a}, {b}) out of range for n = {n}"));
            }
            if a == b {
                return param(format!("self-loop at vertex {a}"));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return param(format!("repeated edge ({}, {})", w[0].0, w[0].1));
        }
        let mut nbrs = vec![Vec::new(); n];
        for &(u, v) in &list {
            nbrs[u].push(v);
            nbrs[v].push(u);
        }
        for l in &mut nbrs {
            l.sort_unstable();
        }
        Ok(Self { n, edges: list, nbrs })
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            edges: Vec::new(),
            nbrs: vec![Vec::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical (lexicographic) order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.nbrs[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.nbrs[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.nbrs.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.nbrs[u].binary_search(&v).is_ok()
    }

    /// Position of edge `{u, v}` in the canonical edge order.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        let mut a = vec![vec![0; self.n]; self.n];
        for &(u, v) in &self.edges {
            a[u][v] = 1;
            a[v][u] = 1;
        }
        a
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.bfs_order(0).len() == self.n
    }

    fn bfs_order(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut order = vec![start];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.nbrs[u] {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                    queue.push_back(w);
                }
            }
        }
        order
    }

    /// Returns the same graph with edge `{u, v}` added if absent or removed
    /// if present.
    pub fn toggle_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if u == v || u >= self.n || v >= self.n {
            return param(format!("cannot toggle ({u}, {v}) in a graph of order {}", self.n));
        }
        let key = (u.min(v), u.max(v));
        let mut edges = self.edges.clone();
        match edges.binary_search(&key) {
            Ok(i) => {
                edges.remove(i);
            }
            Err(i) => edges.insert(i, key),
        }
        Graph::new(self.n, edges)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n || perm.iter().any(|&p| p >= self.n || std::mem::replace(&mut seen[p], true)) {
            return param("permutation does not match the vertex set");
        }
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Parses the edge-list text format: a header `n m`, then `m` lines
    /// `u v` with `0 ≤ u < v < n`. Blank lines and `#` comments are
    /// skipped. Errors carry the 1-based line number.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let err = |line: usize, msg: String| Error::Parse { line, msg };
        let (hline, header) = lines.next().ok_or_else(|| err(1, "missing header `n m`".into()))?;
        let nums = parse_pair(header).map_err(|m| err(hline, m))?;
        let (n, m) = nums;
        let mut edges = Vec::with_capacity(m);
        let mut last_line = hline;
        for (line, text) in lines {
            last_line = line;
            if edges.len() == m {
                return Err(err(line, format!("more than the declared {m} edges")));
            }
            let (u, v) = parse_pair(text).map_err(|msg| err(line, msg))?;
            if u >= v {
                return Err(err(line, format!("expected u < v, got {u} {v}")));
            }
            if v >= n {
                return Err(err(line, format!("vertex {v} out of range for n = {n}")));
            }
            edges.push(((u, v), line));
        }
        if edges.len() != m {
            return Err(err(
                last_line,
                format!("declared {m} edges but found {}", edges.len()),
            ));
        }
        let mut sorted: Vec<_> = edges.clone();
        sorted.sort();
        for w in sorted.windows(2) {
            if w[0].0 == w[1].0 {
                let line = w[0].1.max(w[1].1);
                return Err(err(line, format!("repeated edge {} {}", w[0].0 .0, w[0].0 .1)));
            }
        }
        Graph::new(n, edges.into_iter().map(|(e, _)| e))
    }

    /// Renders the edge-list text format, edges in canonical order.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.m());
        for &(u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

fn parse_pair(s: &str) -> std::result::Result<(usize, usize), String> {
    let mut it = s.split_whitespace();
    let a = it.next().ok_or("expected two integers")?;
    let b = it.next().ok_or("expected two integers")?;
    if it.next().is_some() {
        return Err("expected exactly two integers".into());
    }
    let a = a.parse().map_err(|_| format!("not a vertex number: {a:?}"))?;
    let b = b.parse().map_err(|_| format!("not a vertex number: {b:?}"))?;
    Ok((a, b))
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// Minimum degree, maximum degree and per-vertex degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub min: usize,
    pub max: usize,
    pub degrees: Vec<usize>,
}

pub fn degree_profile(g: &Graph) -> DegreeProfile {
    let degrees = g.degrees();
    DegreeProfile {
        min: degrees.iter().copied().min().unwrap_or(0),
        max: degrees.iter().copied().max().unwrap_or(0),
        degrees,
    }
}

/// `Some(r)` when every vertex has degree `r`.
pub fn is_regular(g: &Graph) -> Option<usize> {
    let p = degree_profile(g);
    (g.n() > 0 && p.min == p.max).then_some(p.min)
}

/// Parameters `(n₁, n₂, r₁, r₂)` of a connected semi-regular bipartite
/// graph: `n₁ ≥ n₂` vertices of degree `r₁` in one part, `n₂` of degree
/// `r₂` in the other, `n₁r₁ = n₂r₂`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SemiRegular {
    pub n1: usize,
    pub n2: usize,
    pub r1: usize,
    pub r2: usize,
}

/// Two-coloring of a connected bipartite graph, vertex 0 colored `false`.
pub fn bipartition(g: &Graph) -> Option<Vec<bool>> {
    if g.n() == 0 || !g.is_connected() {
        return None;
    }
    let mut color = vec![None; g.n()];
    color[0] = Some(false);
    for u in g.bfs_order(0) {
        let cu = color[u].expect("visited in BFS order");
        for &w in g.neighbors(u) {
            match color[w] {
                None => color[w] = Some(!cu),
                Some(cw) if cw == cu => return None,
                Some(_) => {}
            }
        }
    }
    Some(color.into_iter().map(|c| c.expect("connected")).collect())
}

/// Semi-regular bipartite parameters, if `g` is connected, bipartite and
/// has constant degree on each side. Ties `n₁ = n₂` put the part of
/// vertex 0 first.
pub fn is_semiregular_bipartite(g: &Graph) -> Option<SemiRegular> {
    if g.m() == 0 {
        return None;
    }
    let color = bipartition(g)?;
    let side_degree = |side: bool| -> Option<(usize, usize)> {
        let ds: Vec<usize> = (0..g.n()).filter(|&v| color[v] == side).map(|v| g.degree(v)).collect();
        let d = ds[0];
        ds.iter().all(|&x| x == d).then_some((ds.len(), d))
    };
    let (na, ra) = side_degree(false)?;
    let (nb, rb) = side_degree(true)?;
    let (n1, r1, n2, r2) = if nb > na { (nb, rb, na, ra) } else { (na, ra, nb, rb) };
    Some(SemiRegular { n1, n2, r1, r2 })
}

/// 0/1 vertex–edge incidence matrix; column `j` is the `j`-th edge in
/// canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<u8>,
}

impl IncidenceMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.cols + j]
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        self.entries.chunks(self.cols.max(1)).take(self.rows).map(<[u8]>::to_vec).collect()
    }

    /// `B·Bᵀ` (n × n).
    pub fn b_bt(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.rows]; self.rows];
        for (i, row) in out.iter_mut().enumerate() {
            for (k, x) in row.iter_mut().enumerate() {
                *x = (0..self.cols).map(|j| (self.get(i, j) * self.get(k, j)) as i64).sum();
            }
        }
        out
    }

    /// `Bᵀ·B` (m × m).
    pub fn bt_b(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.cols]; self.cols];
        for (j, row) in out.iter_mut().enumerate() {
            for (l, x) in row.iter_mut().enumerate() {
                *x = (0..self.rows).map(|i| (self.get(i, j) * self.get(i, l)) as i64).sum();
            }
        }
        out
    }
}

pub fn incidence_matrix(g: &Graph) -> IncidenceMatrix {
    let (rows, cols) = (g.n(), g.m());
    let mut entries = vec![0u8; rows * cols];
    for (j, &(u, v)) in g.edges().iter().enumerate() {
        entries[u * cols + j] = 1;
        entries[v * cols + j] = 1;
    }
    IncidenceMatrix { rows, cols, entries }
}

/// The named graph families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// K₁,ₙ₋₁ on `n` vertices.
    Star(usize),
    CompleteBipartite(usize, usize),
    Pineapple(usize, usize),
    DoubleStar(usize, usize),
    DoubleBroom(usize, usize, usize),
    Petersen,
}

impl FamilySpec {
    fn validate(&self) -> Result<()> {
        use FamilySpec::*;
        let ok = match *self {
            Path(n) | Complete(n) | Star(n) => n >= 1,
            Cycle(n) => n >= 3,
            CompleteBipartite(a, b) | Pineapple(a, b) | DoubleStar(a, b) => a >= 1 && b >= 1,
            DoubleBroom(q, n, m) => q >= 2 && n >= 1 && m >= 1,
            Petersen => true,
        };
        if ok {
            Ok(())
        } else {
            param(format!("invalid family parameters: {self}"))
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            Path(n) => write!(f, "path:{n}"),
            Cycle(n) => write!(f, "cycle:{n}"),
            Complete(n) => write!(f, "complete:{n}"),
            Star(n) => write!(f, "star:{n}"),
            CompleteBipartite(a, b) => write!(f, "complete_bipartite:{a},{b}"),
            Pineapple(m, n) => write!(f, "pineapple:{m},{n}"),
            DoubleStar(m, n) => write!(f, "double_star:{m},{n}"),
            DoubleBroom(q, n, m) => write!(f, "double_broom:{q},{n},{m}"),
            Petersen => write!(f, "petersen"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses `complete:5`, `complete_bipartite:2,3`, `petersen`, ….
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, args) = s.split_once(':').unwrap_or((s, ""));
        let args: Vec<usize> = if args.trim().is_empty() {
            Vec::new()
        } else {
            args.split(',')
                .map(|a| a.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::Parameter(format!("bad family arguments in {s:?}")))?
        };
        let arity = |k: usize| -> Result<()> {
            if args.len() == k {
                Ok(())
            } else {
                param(format!("family {name:?} takes {k} argument(s), got {}", args.len()))
            }
        };
        use FamilySpec::*;
        let spec = match name.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "path" => arity(1).map(|_| Path(args[0]))?,
            "cycle" => arity(1).map(|_| Cycle(args[0]))?,
            "complete" => arity(1).map(|_| Complete(args[0]))?,
            "star" => arity(1).map(|_| Star(args[0]))?,
            "complete_bipartite" => arity(2).map(|_| CompleteBipartite(args[0], args[1]))?,
            "pineapple" => arity(2).map(|_| Pineapple(args[0], args[1]))?,
            "double_star" => arity(2).map(|_| DoubleStar(args[0], args[1]))?,
            "double_broom" => arity(3).map(|_| DoubleBroom(args[0], args[1], args[2]))?,
            "petersen" => arity(0).map(|_| Petersen)?,
            other => return param(format!("unknown graph family {other:?}")),
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn path_edges(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|i| (i - 1, i)).collect()
}

pub fn family_generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    use FamilySpec::*;
    match *spec {
        Path(n) => Graph::new(n, path_edges(n)),
        Cycle(n) => {
            let mut e = path_edges(n);
            e.push((0, n - 1));
            Graph::new(n, e)
        }
        Complete(n) => Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))),
        Star(n) => Graph::new(n, (1..n).map(|i| (0, i))),
        CompleteBipartite(a, b) => Graph::new(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j)))),
        Pineapple(m, n) => {
            let clique = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j)));
            Graph::new(m + n, clique.chain((m..m + n).map(|p| (0, p))))
        }
        DoubleStar(m, n) => {
            let left = (2..m + 2).map(|l| (0, l));
            let right = (m + 2..m + n + 2).map(|l| (1, l));
            Graph::new(m + n + 2, std::iter::once((0, 1)).chain(left).chain(right))
        }
        DoubleBroom(q, n, m) => {
            let mut e = path_edges(q);
            e.extend((q..q + n).map(|p| (0, p)));
            e.extend((q + n..q + n + m).map(|p| (q - 1, p)));
            Graph::new(q + n + m, e)
        }
        Petersen => {
            let mut e = Vec::new();
            for i in 0..5 {
                e.push((i, (i + 1) % 5));
                e.push((5 + i, 5 + (i + 2) % 5));
                e.push((i, i + 5));
            }
            Graph::new(10, e)
        }
    }
}
