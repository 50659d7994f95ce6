//! Finite undirected multigraphs without self-loops.
//!
//! Parallel edges are allowed; the edge list order is the canonical edge
//! indexing used by every matrix built from the graph.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::Error;
use crate::linalg::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// Head/tail assignment per edge. The default orients every edge from its
/// smaller to its larger endpoint; parallel edges are oriented independently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    tails: Vec<usize>,
    heads: Vec<usize>,
}

/// Isomorphism-invariant key: vertex count followed by the upper triangle of
/// the lexicographically smallest multiplicity matrix over all vertex
/// orderings with non-increasing degrees.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<u32>);

impl Multigraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, Error> {
        let mut normalized = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: u,
                    vertex_count: n,
                });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    vertex_count: n,
                });
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            normalized.push((u.min(v), u.max(v)));
        }
        Ok(Multigraph {
            n,
            edges: normalized,
        })
    }

    /// Single vertex, no edges.
    pub fn single_vertex() -> Self {
        Multigraph {
            n: 1,
            edges: Vec::new(),
        }
    }

    /// Two vertices joined by `m` parallel edges (the banana graph).
    pub fn banana(m: usize) -> Self {
        Multigraph {
            n: 2,
            edges: vec![(0, 1); m],
        }
    }

    /// Cycle on `n >= 2` vertices; `cycle(2)` is the doubled edge.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 2);
        if n == 2 {
            return Multigraph::banana(2);
        }
        let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Multigraph::new(n, edges).expect("cycle edges are valid")
    }

    /// Path on `n` vertices.
    pub fn path(n: usize) -> Self {
        assert!(n >= 1);
        let edges = (1..n).map(|i| (i - 1, i)).collect();
        Multigraph::new(n, edges).expect("path edges are valid")
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Multigraph { n, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Degree (valency) of `v`, counting multiplicity.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Number of edges between `u` and `v`.
    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        let (a, b) = (u.min(v), u.max(v));
        self.edges.iter().filter(|&&e| e == (a, b)).count()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = vec![false; self.n];
        let mut queue = vec![0usize];
        seen[0] = true;
        while let Some(v) = queue.pop() {
            for &(a, b) in &self.edges {
                let w = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if !seen[w] {
                    seen[w] = true;
                    queue.push(w);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// Connected with no cut vertex, checked literally: removing any single
    /// vertex leaves a connected graph. Single-vertex and single-edge graphs
    /// count as biconnected.
    pub fn is_biconnected(&self) -> bool {
        if !self.is_connected() {
            return false;
        }
        if self.n <= 1 {
            return true;
        }
        (0..self.n).all(|drop| {
            let mut seen = vec![false; self.n];
            seen[drop] = true; // removed
            let start = (0..self.n).find(|&v| v != drop).unwrap();
            let mut queue = vec![start];
            seen[start] = true;
            while let Some(v) = queue.pop() {
                for &(a, b) in &self.edges {
                    if a == drop || b == drop {
                        continue;
                    }
                    let w = if a == v {
                        b
                    } else if b == v {
                        a
                    } else {
                        continue;
                    };
                    if !seen[w] {
                        seen[w] = true;
                        queue.push(w);
                    }
                }
            }
            seen.iter().all(|&s| s)
        })
    }

    /// Signed vertex-edge incidence matrix for the given orientation: +1 at
    /// the head of each edge, -1 at the tail.
    pub fn incidence_matrix(&self, o: &Orientation) -> Result<IntMatrix, Error> {
        o.check_against(self)?;
        let mut d = IntMatrix::zeros(self.n, self.edges.len());
        for e in 0..self.edges.len() {
            d[(o.heads[e], e)] = BigInt::from(1);
            d[(o.tails[e], e)] = BigInt::from(-1);
        }
        Ok(d)
    }

    /// Graph Laplacian `D D^t`: degrees on the diagonal, minus the edge
    /// multiplicity off it. Independent of orientation.
    pub fn laplacian(&self) -> IntMatrix {
        let mut l = IntMatrix::zeros(self.n, self.n);
        for &(u, v) in &self.edges {
            l[(u, u)] += BigInt::one();
            l[(v, v)] += BigInt::one();
            l[(u, v)] -= BigInt::one();
            l[(v, u)] -= BigInt::one();
        }
        l
    }

    /// Laplacian with the last row and column deleted.
    pub fn reduced_laplacian(&self) -> IntMatrix {
        let l = self.laplacian();
        let keep: Vec<usize> = (0..self.n.saturating_sub(1)).collect();
        l.select_rows(&keep).select_cols(&keep)
    }

    /// Number of spanning trees, as the determinant of the reduced
    /// Laplacian. Exact; errors on disconnected input.
    pub fn spanning_tree_count(&self) -> Result<BigInt, Error> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(self.reduced_laplacian().det())
    }

    /// Identifies vertex `v2` of `other` with vertex `v1` of `self`. The
    /// vertices of `other` are appended after those of `self`, minus the
    /// identified one.
    pub fn wedge_sum(&self, v1: usize, other: &Multigraph, v2: usize) -> Result<Multigraph, Error> {
        if v1 >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v1,
                vertex_count: self.n,
            });
        }
        if v2 >= other.n {
            return Err(Error::VertexOutOfRange {
                vertex: v2,
                vertex_count: other.n,
            });
        }
        let relabel = |w: usize| -> usize {
            if w == v2 {
                v1
            } else if w < v2 {
                self.n + w
            } else {
                self.n + w - 1
            }
        };
        let mut edges = self.edges.clone();
        for &(a, b) in &other.edges {
            let (a, b) = (relabel(a), relabel(b));
            edges.push((a.min(b), a.max(b)));
        }
        Ok(Multigraph {
            n: self.n + other.n - 1,
            edges,
        })
    }

    fn multiplicity_matrix(&self) -> Vec<Vec<u32>> {
        let mut m = vec![vec![0u32; self.n]; self.n];
        for &(u, v) in &self.edges {
            m[u][v] += 1;
            m[v][u] += 1;
        }
        m
    }

    /// Canonical key by brute force over vertex permutations, restricted to
    /// orderings that sort degrees non-increasingly (any isomorphism
    /// preserves degrees, so the restriction loses nothing). Equal keys iff
    /// isomorphic. Errors above the vertex cap.
    pub fn canonical_form(&self, cap: usize) -> Result<CanonicalKey, Error> {
        if self.n > cap {
            return Err(Error::CapExceeded {
                what: "canonical form vertex count",
                cap,
                needed: self.n,
            });
        }
        let mult = self.multiplicity_matrix();
        let degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut sorted = degrees.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));

        struct Search<'a> {
            mult: &'a [Vec<u32>],
            degrees: &'a [usize],
            target: &'a [usize],
            best: Option<Vec<u32>>,
        }
        impl Search<'_> {
            fn run(&mut self, perm: &mut Vec<usize>, used: &mut [bool]) {
                let n = self.degrees.len();
                let pos = perm.len();
                if pos == n {
                    let mut key = Vec::with_capacity(n * (n - 1) / 2);
                    for i in 0..n {
                        for j in i + 1..n {
                            key.push(self.mult[perm[i]][perm[j]]);
                        }
                    }
                    if self.best.as_ref().map(|b| &key < b).unwrap_or(true) {
                        self.best = Some(key);
                    }
                    return;
                }
                for v in 0..n {
                    if !used[v] && self.degrees[v] == self.target[pos] {
                        used[v] = true;
                        perm.push(v);
                        self.run(perm, used);
                        perm.pop();
                        used[v] = false;
                    }
                }
            }
        }
        let mut search = Search {
            mult: &mult,
            degrees: &degrees,
            target: &sorted,
            best: None,
        };
        search.run(&mut Vec::with_capacity(self.n), &mut vec![false; self.n]);

        let mut key = vec![self.n as u32];
        key.extend(search.best.unwrap_or_default());
        Ok(CanonicalKey(key))
    }

    /// Rebuilds the representative multigraph encoded by a canonical key.
    pub fn from_canonical_key(key: &CanonicalKey) -> Multigraph {
        let n = key.0[0] as usize;
        let mut edges = Vec::new();
        let mut idx = 1;
        for i in 0..n {
            for j in i + 1..n {
                for _ in 0..key.0[idx] {
                    edges.push((i, j));
                }
                idx += 1;
            }
        }
        Multigraph { n, edges }
    }

    /// Parallel classes as (endpoints, multiplicity) pairs.
    pub fn parallel_classes(&self) -> Vec<((usize, usize), usize)> {
        let support: BTreeSet<(usize, usize)> = self.edges.iter().copied().collect();
        support
            .into_iter()
            .map(|e| (e, self.multiplicity(e.0, e.1)))
            .collect()
    }

    /// True when collapsing every parallel class to a single edge yields a
    /// tree and no class has multiplicity above two.
    pub fn is_doubled_tree(&self) -> bool {
        if !self.is_connected() {
            return false;
        }
        let classes = self.parallel_classes();
        classes.len() == self.n - 1 && classes.iter().all(|&(_, m)| m <= 2)
    }
}

impl Orientation {
    /// Tail at the smaller endpoint, head at the larger; parallel edges all
    /// get the same default independently.
    pub fn default_for(g: &Multigraph) -> Self {
        Orientation {
            tails: g.edges.iter().map(|&(u, _)| u).collect(),
            heads: g.edges.iter().map(|&(_, v)| v).collect(),
        }
    }

    /// Explicit head/tail lists; validated against the graph on use.
    pub fn new(tails: Vec<usize>, heads: Vec<usize>) -> Self {
        Orientation { tails, heads }
    }

    pub fn tail(&self, e: usize) -> usize {
        self.tails[e]
    }

    pub fn head(&self, e: usize) -> usize {
        self.heads[e]
    }

    pub fn reverse_edge(&mut self, e: usize) {
        core::mem::swap(&mut self.tails[e], &mut self.heads[e]);
    }

    fn check_against(&self, g: &Multigraph) -> Result<(), Error> {
        if self.tails.len() != g.edges.len() || self.heads.len() != g.edges.len() {
            return Err(Error::LengthMismatch {
                expected: g.edges.len(),
                got: self.tails.len(),
            });
        }
        for (e, &(u, v)) in g.edges.iter().enumerate() {
            let (t, h) = (self.tails[e], self.heads[e]);
            if (t.min(h), t.max(h)) != (u, v) || t == h {
                return Err(Error::OrientationMismatch { edge: e });
            }
        }
        Ok(())
    }
}
