//! Graph operations. Every operation returns a new graph; original
//! vertices keep their identifiers and new vertices are appended in
//! canonical edge order (except [`coalesce`], see there).

use crate::error::{param, Result};
use crate::graph::Graph;

/// `G ∪ H` with the vertices of `h` shifted by `n(g)`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let k = g.n();
    let edges = g.edges().iter().copied().chain(h.edges().iter().map(|&(u, v)| (u + k, v + k)));
    Graph::new(g.n() + h.n(), edges).expect("union of simple graphs is simple")
}

/// Identifies vertex `u` of `g` with vertex `v` of `h`.
///
/// Output labeling: the merged vertex is `0`, followed by the remaining
/// vertices of `g` in order, then the remaining vertices of `h` in order.
pub fn coalesce(g: &Graph, u: usize, h: &Graph, v: usize) -> Result<Graph> {
    if u >= g.n() || v >= h.n() {
        return param(format!(
            "coalescence vertices ({u}, {v}) out of range for orders ({}, {})",
            g.n(),
            h.n()
        ));
    }
    let map_g = |x: usize| match x {
        x if x == u => 0,
        x if x < u => x + 1,
        x => x,
    };
    let off = g.n() - 1;
    let map_h = |x: usize| match x {
        x if x == v => 0,
        x if x < v => off + x + 1,
        x => off + x,
    };
    let edges = g
        .edges()
        .iter()
        .map(|&(a, b)| (map_g(a), map_g(b)))
        .chain(h.edges().iter().map(|&(a, b)| (map_h(a), map_h(b))));
    Graph::new(g.n() + h.n() - 1, edges)
}

/// Line graph: vertex `j` is the `j`-th edge of `g` in canonical order.
pub fn line_graph(g: &Graph) -> Result<Graph> {
    if g.m() == 0 {
        return param("line graph of a graph without edges");
    }
    let mut edges = Vec::new();
    for v in 0..g.n() {
        let inc: Vec<usize> = g
            .neighbors(v)
            .iter()
            .map(|&w| g.edge_index(v, w).expect("neighbor edge exists"))
            .collect();
        for (i, &a) in inc.iter().enumerate() {
            for &b in &inc[i + 1..] {
                edges.push((a, b));
            }
        }
    }
    // In a simple graph two distinct edges share at most one endpoint.
    Graph::new(g.m(), edges)
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| !g.has_edge(i, j));
    Graph::new(n, edges).expect("complement of a simple graph is simple")
}

/// Vertex `n + j` subdivides the `j`-th edge.
pub fn subdivision(g: &Graph) -> Graph {
    let n = g.n();
    let edges = g
        .edges()
        .iter()
        .enumerate()
        .flat_map(|(j, &(u, v))| [(u, n + j), (v, n + j)]);
    Graph::new(n + g.m(), edges).expect("subdivision is simple")
}

/// `g` plus, for each edge `uv`, a new vertex adjacent to `u` and `v`.
pub fn r_graph(g: &Graph) -> Graph {
    let s = subdivision(g);
    Graph::new(s.n(), s.edges().iter().copied().chain(g.edges().iter().copied())).expect("R(G) is simple")
}

/// Subdivision plus edges between new vertices on adjacent edges.
pub fn q_graph(g: &Graph) -> Graph {
    let n = g.n();
    let s = subdivision(g);
    let line = match line_graph(g) {
        Ok(l) => l,
        Err(_) => return s,
    };
    let edges = s
        .edges()
        .iter()
        .copied()
        .chain(line.edges().iter().map(|&(a, b)| (n + a, n + b)));
    Graph::new(s.n(), edges).expect("Q(G) is simple")
}

/// Total graph on `V ∪ E`.
pub fn total_graph(g: &Graph) -> Graph {
    let q = q_graph(g);
    Graph::new(q.n(), q.edges().iter().copied().chain(g.edges().iter().copied())).expect("T(G) is simple")
}

/// Adds one pendant vertex at each target; the `i`-th new vertex is
/// `n + i`, attached to `targets[i]`.
pub fn attach_pendants(g: &Graph, targets: &[usize]) -> Result<Graph> {
    let n = g.n();
    let mut seen = vec![false; n];
    for &t in targets {
        if t >= n {
            return param(format!("pendant target {t} out of range for n = {n}"));
        }
        if std::mem::replace(&mut seen[t], true) {
            return param(format!("duplicate pendant target {t}"));
        }
    }
    let edges = g
        .edges()
        .iter()
        .copied()
        .chain(targets.iter().enumerate().map(|(i, &t)| (t, n + i)));
    Graph::new(n + targets.len(), edges)
}

/// Adds `s` pendant vertices at `v`.
pub fn attach_pendants_at(g: &Graph, v: usize, s: usize) -> Result<Graph> {
    if v >= g.n() {
        return param(format!("vertex {v} out of range for n = {}", g.n()));
    }
    let n = g.n();
    Graph::new(n + s, g.edges().iter().copied().chain((0..s).map(|i| (v, n + i))))
}

/// One step of a CLI-style operation pipeline.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Op {
    /// Disjoint union with a second operand.
    Union,
    /// Coalescence with a second operand at `(u, v)`.
    Coalesce(usize, usize),
    Line,
    Complement,
    Subdivision,
    RGraph,
    QGraph,
    Total,
    Pendants(Vec<usize>),
}

impl Op {
    /// Parses `union`, `coalesce:<u>,<v>`, `line`, `complement`,
    /// `subdivision`, `rgraph`, `qgraph`, `total`, `pendants:<v1>,<v2>,…`.
    pub fn parse(s: &str) -> Result<Op> {
        let (name, args) = s.trim().split_once(':').unwrap_or((s.trim(), ""));
        let nums = || -> Result<Vec<usize>> {
            args.split(',')
                .filter(|a| !a.trim().is_empty())
                .map(|a| {
                    a.trim()
                        .parse()
                        .map_err(|_| crate::Error::Parameter(format!("bad vertex {a:?} in op {s:?}")))
                })
                .collect()
        };
        let no_args = |op: Op| -> Result<Op> {
            if args.is_empty() {
                Ok(op)
            } else {
                param(format!("op {name:?} takes no arguments"))
            }
        };
        match name {
            "union" => no_args(Op::Union),
            "line" => no_args(Op::Line),
            "complement" => no_args(Op::Complement),
            "subdivision" => no_args(Op::Subdivision),
            "rgraph" => no_args(Op::RGraph),
            "qgraph" => no_args(Op::QGraph),
            "total" => no_args(Op::Total),
            "coalesce" => match nums()?.as_slice() {
                [u, v] => Ok(Op::Coalesce(*u, *v)),
                _ => param("coalesce takes two vertices: coalesce:<u>,<v>"),
            },
            "pendants" => {
                let t = nums()?;
                if t.is_empty() {
                    return param("pendants needs at least one target");
                }
                Ok(Op::Pendants(t))
            }
            other => param(format!("unknown op {other:?}")),
        }
    }

    pub fn needs_operand(&self) -> bool {
        matches!(self, Op::Union | Op::Coalesce(..))
    }

    /// Applies the op; binary ops take `other` as the right operand.
    pub fn apply(&self, g: &Graph, other: Option<&Graph>) -> Result<Graph> {
        let operand = || other.ok_or_else(|| crate::Error::Parameter("binary op needs a second graph".into()));
        match self {
            Op::Union => Ok(disjoint_union(g, operand()?)),
            Op::Coalesce(u, v) => coalesce(g, *u, operand()?, *v),
            Op::Line => line_graph(g),
            Op::Complement => Ok(complement(g)),
            Op::Subdivision => Ok(subdivision(g)),
            Op::RGraph => Ok(r_graph(g)),
            Op::QGraph => Ok(q_graph(g)),
            Op::Total => Ok(total_graph(g)),
            Op::Pendants(t) => attach_pendants(g, t),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{family_generate, is_regular, FamilySpec};

    fn fam(s: &str) -> Graph {
        family_generate(&s.parse().unwrap()).unwrap()
    }

    fn sorted_degrees(g: &Graph) -> Vec<usize> {
        let mut d = g.degrees();
        d.sort_unstable();
        d
    }

    #[test]
    fn unions() {
        let u = disjoint_union(&fam("complete:1"), &fam("complete:1"));
        assert_eq!((u.n(), u.m()), (2, 0));
        let u = disjoint_union(&fam("complete:3"), &fam("complete:2"));
        assert_eq!((u.n(), u.m()), (5, 4));
        assert!(u.has_edge(3, 4));
    }

    #[test]
    fn coalescences() {
        let k2 = fam("complete:2");
        assert_eq!(coalesce(&k2, 0, &k2, 0).unwrap(), fam("path:3").permute(&[1, 0, 2]).unwrap());
        let p5 = coalesce(&fam("star:3"), 1, &fam("star:3"), 1).unwrap();
        assert_eq!((p5.n(), p5.m()), (5, 4));
        assert_eq!(sorted_degrees(&p5), vec![1, 1, 2, 2, 2]);
        // star center with a clique vertex: the pineapple, with identical labels
        let pin = coalesce(&fam("complete:5"), 0, &fam("star:4"), 0).unwrap();
        assert_eq!(pin, fam("pineapple:5,3"));
        assert!(coalesce(&k2, 2, &k2, 0).is_err());
    }

    #[test]
    fn line_graphs() {
        let oct = line_graph(&fam("complete:4")).unwrap();
        assert_eq!((oct.n(), is_regular(&oct)), (6, Some(4)));
        assert_eq!(line_graph(&fam("path:3")).unwrap(), fam("complete:2"));
        let prism = line_graph(&fam("complete_bipartite:2,3")).unwrap();
        assert_eq!((prism.n(), prism.m(), is_regular(&prism)), (6, 9, Some(3)));
        assert!(line_graph(&Graph::empty(3)).is_err());
    }

    #[test]
    fn complements() {
        assert_eq!(complement(&fam("complete:4")).m(), 0);
        let pet = complement(&line_graph(&fam("complete:5")).unwrap());
        assert_eq!((pet.n(), pet.m(), is_regular(&pet)), (10, 15, Some(3)));
        let c4c = complement(&fam("cycle:4"));
        assert_eq!(c4c.edges(), &[(0, 2), (1, 3)]);
    }

    #[test]
    fn subdivisions_and_friends() {
        let s = subdivision(&fam("complete:3"));
        assert_eq!((s.n(), s.m(), is_regular(&s)), (6, 6, Some(2)));
        assert!(s.is_connected());
        assert_eq!(subdivision(&fam("complete:2")).edges(), &[(0, 2), (1, 2)]);

        assert_eq!(r_graph(&fam("complete:2")), fam("complete:3"));
        let r = r_graph(&fam("complete:3"));
        assert_eq!((r.n(), r.m(), r.degrees()), (6, 9, vec![4, 4, 4, 2, 2, 2]));

        let q2 = q_graph(&fam("complete:2"));
        assert_eq!((q2.n(), q2.m()), (3, 2));
        let q3 = q_graph(&fam("complete:3"));
        assert_eq!((q3.n(), q3.m()), (6, 9));

        assert_eq!(total_graph(&fam("complete:2")), fam("complete:3"));
        let t3 = total_graph(&fam("complete:3"));
        assert_eq!((t3.n(), t3.m(), is_regular(&t3)), (6, 12, Some(4)));
    }

    #[test]
    fn pendants() {
        let g = attach_pendants(&fam("complete:6"), &[0, 2, 4, 5]).unwrap();
        assert_eq!((g.n(), g.m()), (10, 19));
        assert_eq!(attach_pendants(&fam("complete:1"), &[0]).unwrap(), fam("complete:2"));
        assert!(attach_pendants(&fam("complete:3"), &[0, 0]).is_err());
        assert!(attach_pendants(&fam("complete:3"), &[3]).is_err());
        let spider = attach_pendants(&fam("star:4"), &[1, 2, 3]).unwrap();
        assert_eq!(sorted_degrees(&spider), vec![1, 1, 1, 2, 2, 2, 3]);
        assert_eq!(attach_pendants_at(&fam("complete:2"), 0, 1).unwrap().m(), 2);
    }

    #[test]
    fn op_parsing() {
        assert_eq!(Op::parse("coalesce:1,2").unwrap(), Op::Coalesce(1, 2));
        assert_eq!(Op::parse("pendants:0,3").unwrap(), Op::Pendants(vec![0, 3]));
        for bad in ["line:3", "coalesce:1", "pendants:", "frobnicate"] {
            assert!(Op::parse(bad).is_err(), "{bad}");
        }
        let g = Op::Line.apply(&fam("complete:3"), None).unwrap();
        assert_eq!(g, fam("complete:3"));
        assert!(Op::Union.apply(&g, None).is_err());
        let _ = FamilySpec::Petersen;
    }
}
