//! Uniform hypergraphs over 1-based vertex labels, plus the special
//! constructions used throughout the crate: generalized powers, p-hm
//! bipartitions and simplex detection.
//!
//! Text format (`.uhg`): first non-comment line `n m`, then one edge per
//! line as `m` space-separated vertex labels in `1..=n`. Lines starting
//! with `#` are comments.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("edge {0:?} has wrong size (expected {1})")]
    EdgeSize(Vec<usize>, usize),
    #[error("edge {0:?} repeats a vertex")]
    RepeatedVertex(Vec<usize>),
    #[error("vertex {0} out of range 1..={1}")]
    VertexRange(usize, usize),
    #[error("duplicate edge {0:?}")]
    DuplicateEdge(Vec<usize>),
    #[error("invalid generalized power parameters: m={m}, t={t}, s={s}")]
    BadPowerSpec { m: usize, t: usize, s: usize },
    #[error("hypergraph is disconnected")]
    Disconnected,
}

/// An `m`-uniform hypergraph on vertex set `{1, ..., n}`. Edges are stored
/// sorted, without duplicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    m: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Build from an edge list; edges may be given in any vertex order.
    /// Duplicate edges are rejected, not silently dropped.
    pub fn new(n: usize, m: usize, edges: Vec<Vec<usize>>) -> Result<Self, HypergraphError> {
        assert!(n >= 1, "vertex count must be positive");
        assert!(m >= 2, "edge size must be at least 2");
        let mut sorted_edges = Vec::with_capacity(edges.len());
        let mut seen = BTreeSet::new();
        for edge in edges {
            if edge.len() != m {
                return Err(HypergraphError::EdgeSize(edge, m));
            }
            for &v in &edge {
                if v < 1 || v > n {
                    return Err(HypergraphError::VertexRange(v, n));
                }
            }
            let mut e = edge.clone();
            e.sort_unstable();
            e.dedup();
            if e.len() != m {
                return Err(HypergraphError::RepeatedVertex(edge));
            }
            if !seen.insert(e.clone()) {
                return Err(HypergraphError::DuplicateEdge(e));
            }
            sorted_edges.push(e);
        }
        sorted_edges.sort();
        Ok(Self { n, m, edges: sorted_edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Edge size `m`.
    pub fn edge_size(&self) -> usize {
        self.m
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(&v)).count()
    }

    /// Every pair of vertices is joined by a walk. Isolated vertices make a
    /// multi-vertex hypergraph disconnected; the one-vertex hypergraph is
    /// connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 1 {
            return true;
        }
        let mut comp: Vec<usize> = (0..self.n).collect();
        fn find(comp: &mut Vec<usize>, x: usize) -> usize {
            let mut root = x;
            while comp[root] != root {
                root = comp[root];
            }
            let mut cur = x;
            while comp[cur] != root {
                let next = comp[cur];
                comp[cur] = root;
                cur = next;
            }
            root
        }
        for e in &self.edges {
            let r0 = find(&mut comp, e[0] - 1);
            for &v in &e[1..] {
                let rv = find(&mut comp, v - 1);
                comp[rv] = r0;
            }
        }
        let root = find(&mut comp, 0);
        (1..self.n).all(|v| find(&mut comp, v) == root)
    }

    /// A bipartition `V = V1 ∪ V2` with `|e ∩ V1| = p` for every edge and
    /// `1 <= p <= m-1`. Returns the solution minimizing `p`, ties broken by
    /// the lexicographically smallest `V1` (as a sorted vertex sequence).
    /// Degenerate `p ∈ {0, m}` are excluded. `None` when no edges exist or
    /// no such bipartition exists. Exhaustive backtracking; intended for
    /// n up to around 30.
    pub fn find_p_hm_bipartition(&self) -> Option<(Vec<usize>, usize)> {
        if self.edges.is_empty() {
            return None;
        }
        for p in 1..self.m {
            if let Some(v1) = self.p_hm_search(p) {
                return Some((v1, p));
            }
        }
        None
    }

    fn p_hm_search(&self, p: usize) -> Option<Vec<usize>> {
        // counts[e]: vertices of edge e currently placed in V1;
        // undecided[e]: vertices of edge e not yet assigned.
        let mut counts = vec![0usize; self.edges.len()];
        let mut undecided: Vec<usize> = self.edges.iter().map(|e| e.len()).collect();
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for (ei, e) in self.edges.iter().enumerate() {
            for &v in e {
                incident[v - 1].push(ei);
            }
        }
        let mut side = vec![None::<bool>; self.n];
        self.p_hm_assign(0, p, &mut side, &mut counts, &mut undecided, &incident)
            .then(|| {
                (1..=self.n)
                    .filter(|&v| side[v - 1] == Some(true))
                    .collect()
            })
    }

    fn p_hm_assign(
        &self,
        v: usize,
        p: usize,
        side: &mut Vec<Option<bool>>,
        counts: &mut Vec<usize>,
        undecided: &mut Vec<usize>,
        incident: &[Vec<usize>],
    ) -> bool {
        if v == self.n {
            return counts.iter().all(|&c| c == p);
        }
        // Try V1 first so the first complete assignment is lex-smallest.
        'choice: for in_v1 in [true, false] {
            for &ei in &incident[v] {
                let c = counts[ei] + usize::from(in_v1);
                let u = undecided[ei] - 1;
                if c > p || c + u < p {
                    continue 'choice;
                }
            }
            side[v] = Some(in_v1);
            for &ei in &incident[v] {
                counts[ei] += usize::from(in_v1);
                undecided[ei] -= 1;
            }
            if self.p_hm_assign(v + 1, p, side, counts, undecided, incident) {
                return true;
            }
            for &ei in &incident[v] {
                counts[ei] -= usize::from(in_v1);
                undecided[ei] += 1;
            }
            side[v] = None;
        }
        false
    }

    /// True when some `m+1` vertices have all their `m`-subsets as edges.
    pub fn contains_simplex(&self) -> bool {
        use itertools::Itertools;
        if self.n <= self.m {
            return false;
        }
        let edge_set: BTreeSet<&Vec<usize>> = self.edges.iter().collect();
        // Candidate vertex sets only need to come from unions of edges, but
        // at desk scale the plain scan over (m+1)-subsets is fine.
        (1..=self.n).combinations(self.m + 1).any(|cand| {
            cand.iter()
                .combinations(self.m)
                .all(|face| edge_set.contains(&face.into_iter().copied().collect::<Vec<_>>()))
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, self.m);
        for e in &self.edges {
            let labels: Vec<String> = e.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "{}", labels.join(" "));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, HypergraphError> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        let mut header_line = 0usize;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if header.is_none() {
                if fields.len() != 2 {
                    return Err(HypergraphError::Parse {
                        line: line_no,
                        msg: format!("expected header `n m`, got `{line}`"),
                    });
                }
                let n = parse_usize(fields[0], line_no)?;
                let m = parse_usize(fields[1], line_no)?;
                if n == 0 || m < 2 {
                    return Err(HypergraphError::Parse {
                        line: line_no,
                        msg: format!("invalid header: n={n}, m={m}"),
                    });
                }
                header = Some((n, m));
                header_line = line_no;
                continue;
            }
            let edge: Result<Vec<usize>, _> =
                fields.iter().map(|f| parse_usize(f, line_no)).collect();
            edges.push((line_no, edge?));
        }
        let Some((n, m)) = header else {
            return Err(HypergraphError::Parse {
                line: 1,
                msg: "empty input: missing `n m` header".into(),
            });
        };
        let _ = header_line;
        let mut plain = Vec::with_capacity(edges.len());
        for (line_no, e) in edges {
            if e.len() != m {
                return Err(HypergraphError::Parse {
                    line: line_no,
                    msg: format!("edge has {} vertices, expected {m}", e.len()),
                });
            }
            plain.push((line_no, e));
        }
        // Re-run the structural validation so errors keep their line numbers.
        let mut seen = BTreeSet::new();
        for (line_no, e) in &plain {
            let mut s = e.clone();
            s.sort_unstable();
            s.dedup();
            if s.len() != m {
                return Err(HypergraphError::Parse {
                    line: *line_no,
                    msg: format!("edge {e:?} repeats a vertex"),
                });
            }
            if let Some(&v) = e.iter().find(|&&v| v < 1 || v > n) {
                return Err(HypergraphError::Parse {
                    line: *line_no,
                    msg: format!("vertex {v} out of range 1..={n}"),
                });
            }
            if !seen.insert(s) {
                return Err(HypergraphError::Parse {
                    line: *line_no,
                    msg: format!("duplicate edge {e:?}"),
                });
            }
        }
        Self::new(n, m, plain.into_iter().map(|(_, e)| e).collect())
    }
}

fn parse_usize(field: &str, line: usize) -> Result<usize, HypergraphError> {
    field.parse().map_err(|_| HypergraphError::Parse {
        line,
        msg: format!("expected a positive integer, got `{field}`"),
    })
}

/// Parameters of the generalized power construction: every vertex of the
/// `t`-uniform base is blown up into an `s`-set and every edge receives
/// `m - t*s` fresh filler vertices.
#[derive(Debug, Clone)]
pub struct GeneralizedPowerSpec {
    pub base: Hypergraph,
    pub m: usize,
    pub s: usize,
}

impl GeneralizedPowerSpec {
    pub fn new(base: Hypergraph, m: usize, s: usize) -> Result<Self, HypergraphError> {
        let t = base.edge_size();
        if m <= t || s == 0 || t * s > m {
            return Err(HypergraphError::BadPowerSpec { m, t, s });
        }
        Ok(Self { base, m, s })
    }
}

/// The generalized power hypergraph. Vertex labels are deterministic: base
/// vertex `v` becomes the block `{s*(v-1)+1, ..., s*v}`, and the filler set
/// of the `k`-th base edge (0-based, edges in sorted order) occupies the
/// next `m - t*s` labels after all blocks, in edge order.
pub fn build_generalized_power(spec: &GeneralizedPowerSpec) -> Hypergraph {
    let base = &spec.base;
    let t = base.edge_size();
    let s = spec.s;
    let m = spec.m;
    let filler = m - t * s;
    let block_end = s * base.vertex_count();
    let n = block_end + filler * base.edge_count();
    let mut edges = Vec::with_capacity(base.edge_count());
    for (k, e) in base.edges().iter().enumerate() {
        let mut big = Vec::with_capacity(m);
        for &v in e {
            big.extend(s * (v - 1) + 1..=s * v);
        }
        big.extend(block_end + filler * k + 1..=block_end + filler * (k + 1));
        edges.push(big);
    }
    Hypergraph::new(n, m, edges).expect("generalized power construction is always valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn single_edge3() -> Hypergraph {
        Hypergraph::new(3, 3, vec![vec![1, 2, 3]]).unwrap()
    }

    fn k2() -> Hypergraph {
        Hypergraph::new(2, 2, vec![vec![1, 2]]).unwrap()
    }

    fn k3() -> Hypergraph {
        Hypergraph::new(3, 2, vec![vec![1, 2], vec![1, 3], vec![2, 3]]).unwrap()
    }

    /// The 6-vertex 3-uniform hypergraph whose edges are consecutive triples
    /// around a hexagon.
    pub(crate) fn hexagon_triples() -> Hypergraph {
        Hypergraph::new(
            6,
            3,
            vec![
                vec![1, 2, 3],
                vec![2, 3, 4],
                vec![3, 4, 5],
                vec![4, 5, 6],
                vec![5, 6, 1],
                vec![6, 1, 2],
            ],
        )
        .unwrap()
    }

    #[test]
    fn rejects_duplicate_edges() {
        let err = Hypergraph::new(3, 3, vec![vec![1, 2, 3], vec![3, 2, 1]]).unwrap_err();
        assert_eq!(err, HypergraphError::DuplicateEdge(vec![1, 2, 3]));
    }

    #[test]
    fn rejects_repeated_vertices_and_bad_labels() {
        assert!(matches!(
            Hypergraph::new(3, 3, vec![vec![1, 2, 2]]),
            Err(HypergraphError::RepeatedVertex(_))
        ));
        assert!(matches!(
            Hypergraph::new(3, 3, vec![vec![1, 2, 4]]),
            Err(HypergraphError::VertexRange(4, 3))
        ));
    }

    #[test]
    fn connectivity() {
        assert!(hexagon_triples().is_connected());
        assert!(single_edge3().is_connected());
        let two_parts =
            Hypergraph::new(6, 3, vec![vec![1, 2, 3], vec![4, 5, 6]]).unwrap();
        assert!(!two_parts.is_connected());
        let isolated = Hypergraph::new(4, 3, vec![vec![1, 2, 3]]).unwrap();
        assert!(!isolated.is_connected());
        assert!(Hypergraph::new(1, 2, vec![]).unwrap().is_connected());
    }

    #[test]
    fn generalized_power_k2_pure_blowup() {
        // m - t*s = 0: pure blow-up of the single edge.
        let spec = GeneralizedPowerSpec::new(k2(), 4, 2).unwrap();
        let g = build_generalized_power(&spec);
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edges(), &[vec![1, 2, 3, 4]]);
    }

    #[test]
    fn generalized_power_k3() {
        let spec = GeneralizedPowerSpec::new(k3(), 4, 2).unwrap();
        let g = build_generalized_power(&spec);
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(
            g.edges(),
            &[vec![1, 2, 3, 4], vec![1, 2, 5, 6], vec![3, 4, 5, 6]]
        );
    }

    #[test]
    fn generalized_power_cored_edge() {
        // K2 with m=3, s=1: one filler vertex per edge.
        let spec = GeneralizedPowerSpec::new(k2(), 3, 1).unwrap();
        let g = build_generalized_power(&spec);
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), &[vec![1, 2, 3]]);
    }

    #[test]
    fn generalized_power_vertex_count_law() {
        for (base, m, s) in [
            (k2(), 4, 2),
            (k3(), 4, 2),
            (k3(), 6, 2),
            (hexagon_triples(), 7, 2),
        ] {
            let t = base.edge_size();
            let spec = GeneralizedPowerSpec::new(base.clone(), m, s).unwrap();
            let g = build_generalized_power(&spec);
            assert_eq!(
                g.vertex_count(),
                s * base.vertex_count() + (m - t * s) * base.edge_count()
            );
            assert_eq!(g.is_connected(), base.is_connected());
            // Filler vertices have degree exactly 1.
            for v in s * base.vertex_count() + 1..=g.vertex_count() {
                assert_eq!(g.degree(v), 1);
            }
        }
    }

    #[test]
    fn rejects_bad_power_spec() {
        assert!(GeneralizedPowerSpec::new(k2(), 3, 2).is_err()); // t*s > m
        assert!(GeneralizedPowerSpec::new(k2(), 2, 1).is_err()); // m <= t
    }

    #[test]
    fn p_hm_single_edge() {
        let (v1, p) = single_edge3().find_p_hm_bipartition().unwrap();
        assert_eq!((v1, p), (vec![1], 1));
    }

    #[test]
    fn p_hm_k3_power() {
        let spec = GeneralizedPowerSpec::new(k3(), 4, 2).unwrap();
        let g = build_generalized_power(&spec);
        let (v1, p) = g.find_p_hm_bipartition().unwrap();
        assert_eq!(p, 2);
        assert_eq!(v1, vec![1, 3, 5]);
        for e in g.edges() {
            assert_eq!(e.iter().filter(|v| v1.contains(v)).count(), p);
        }
    }

    #[test]
    fn p_hm_hexagon() {
        let (v1, p) = hexagon_triples().find_p_hm_bipartition().unwrap();
        assert_eq!(p, 1);
        assert_eq!(v1, vec![1, 4]);
        for e in hexagon_triples().edges() {
            assert_eq!(e.iter().filter(|v| v1.contains(v)).count(), 1);
        }
    }

    #[test]
    fn simplex_detection() {
        use itertools::Itertools;
        let k4_faces = Hypergraph::new(
            4,
            3,
            (1..=4usize).combinations(3).collect(),
        )
        .unwrap();
        assert!(k4_faces.contains_simplex());
        assert!(!single_edge3().contains_simplex());
        assert!(!hexagon_triples().contains_simplex());
    }

    #[test]
    fn parse_round_trip() {
        let g = hexagon_triples();
        let text = g.to_text();
        assert_eq!(Hypergraph::parse(&text).unwrap(), g);
    }

    #[test]
    fn parse_reports_line_numbers() {
        let err = Hypergraph::parse("# comment\n3 3\n1 2 3\n1 2\n").unwrap_err();
        assert_eq!(
            err,
            HypergraphError::Parse { line: 4, msg: "edge has 2 vertices, expected 3".into() }
        );
        assert!(matches!(
            Hypergraph::parse(""),
            Err(HypergraphError::Parse { line: 1, .. })
        ));
    }
}
