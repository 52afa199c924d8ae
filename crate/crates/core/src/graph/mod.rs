//! Small simple undirected graphs stored as one `u64` adjacency row per vertex.
//!
//! Everything else in the crate passes [`Graph`] values around; the kernel
//! also provides canonical labelling ([`canon`]), non-induced subgraph
//! search ([`subgraph`]), graph6 I/O ([`graph6`]) and a compact textual
//! notation for the named graphs ([`notation`]).

pub mod canon;
pub mod family;
pub mod graph6;
pub mod notation;
pub mod subgraph;

use std::fmt;

use crate::error::{Error, Result};

pub use canon::{canonical_form, CanonicalLabel};
pub use family::GraphFamily;
pub use subgraph::{contains_subgraph, Embedding};

/// Largest supported order. Rows are `u64` bitsets.
pub const MAX_ORDER: usize = 64;

/// Iterate the set bits of a mask in increasing order.
#[inline]
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A simple undirected graph on vertices `0..order`.
///
/// Equality is labelled equality; use [`canonical_form`] for isomorphism.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

/// How [`compose`] combines its operands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComposeMode {
    DisjointUnion,
    Join,
    /// Complement of the first operand; the second is ignored.
    ComplementOfA,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::OrderCap {
                order: n,
                cap: MAX_ORDER,
            });
        }
        Ok(Graph {
            n,
            rows: vec![0; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::param(format!("edge ({u},{v}) out of range for order {n}")));
            }
            if u == v {
                return Err(Error::param(format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Build from raw rows. Rows must be symmetric and loop-free.
    pub(crate) fn from_rows(rows: Vec<u64>) -> Self {
        debug_assert!(rows.len() <= MAX_ORDER);
        let g = Graph { n: rows.len(), rows };
        debug_assert!(g.is_well_formed());
        g
    }

    fn is_well_formed(&self) -> bool {
        let m = low_mask(self.n);
        (0..self.n).all(|v| {
            self.rows[v] & !m == 0
                && self.rows[v] >> v & 1 == 0
                && bits(self.rows[v]).all(|u| self.rows[u] >> v & 1 == 1)
        })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] >> v & 1 == 1
    }

    /// Panics if either endpoint is out of range or `u == v`.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "bad edge ({u},{v})");
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "bad edge ({u},{v})");
        self.rows[u] &= !(1 << v);
        self.rows[v] &= !(1 << u);
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.rows
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.rows[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    /// Non-adjacent pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let all = self.vertex_mask();
        (0..self.n).flat_map(move |u| {
            bits(!self.rows[u] & all & !low_mask(u + 1)).map(move |v| (u, v))
        })
    }

    pub fn is_edgeless(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    pub fn isolated_vertices(&self) -> u64 {
        (0..self.n)
            .filter(|&v| self.rows[v] == 0)
            .fold(0, |m, v| m | 1 << v)
    }

    /// Subgraph induced by `mask`, relabelled to `0..popcount(mask)` preserving order.
    pub fn induced(&self, mask: u64) -> Graph {
        let mask = mask & self.vertex_mask();
        let verts: Vec<usize> = bits(mask).collect();
        let mut pos = [usize::MAX; MAX_ORDER];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let rows = verts
            .iter()
            .map(|&v| bits(self.rows[v] & mask).fold(0u64, |r, u| r | 1 << pos[u]))
            .collect();
        Graph::from_rows(rows)
    }

    /// The graph with its isolated vertices deleted.
    pub fn without_isolated(&self) -> Graph {
        self.induced(self.vertex_mask() & !self.isolated_vertices())
    }

    pub fn delete_vertex(&self, v: usize) -> Graph {
        self.induced(self.vertex_mask() & !(1 << v))
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let rows = (0..self.n).map(|v| !self.rows[v] & all & !(1 << v)).collect();
        Graph::from_rows(rows)
    }

    /// Vertex masks of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << s;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for v in bits(frontier) {
                    next |= self.rows[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Relabel: vertex `v` becomes `perm[v]`. `perm` must be a permutation of `0..order`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut rows = vec![0u64; self.n];
        for v in 0..self.n {
            rows[perm[v]] = bits(self.rows[v]).fold(0, |r, u| r | 1 << perm[u]);
        }
        Graph::from_rows(rows)
    }

    /// `k` disjoint copies of `self`.
    pub fn copies(&self, k: usize) -> Result<Graph> {
        let mut g = Graph::empty(0)?;
        for _ in 0..k {
            g = compose(&g, self, ComposeMode::DisjointUnion)?;
        }
        Ok(g)
    }
}

/// Disjoint union, join (`a + b`), or complement of `a`.
///
/// In the binary modes the vertices of `a` keep their labels and those of `b`
/// are shifted by `a.order()`.
pub fn compose(a: &Graph, b: &Graph, mode: ComposeMode) -> Result<Graph> {
    if mode == ComposeMode::ComplementOfA {
        return Ok(a.complement());
    }
    let n = a.n + b.n;
    if n > MAX_ORDER {
        return Err(Error::OrderCap {
            order: n,
            cap: MAX_ORDER,
        });
    }
    let (a_mask, b_mask) = (low_mask(a.n), low_mask(n) & !low_mask(a.n));
    let join = mode == ComposeMode::Join;
    let mut rows = Vec::with_capacity(n);
    for v in 0..a.n {
        rows.push(a.rows[v] | if join { b_mask } else { 0 });
    }
    for v in 0..b.n {
        rows.push(b.rows[v] << a.n | if join { a_mask } else { 0 });
    }
    Ok(Graph::from_rows(rows))
}

/// `K_n`.
pub fn complete(n: usize) -> Result<Graph> {
    Ok(Graph::empty(n)?.complement())
}

/// `P_n`: path on `n` vertices.
pub fn path(n: usize) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    Ok(g)
}

/// `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::param(format!("cycle needs at least 3 vertices, got {n}")));
    }
    let mut g = path(n)?;
    g.add_edge(0, n - 1);
    Ok(g)
}

/// `S_n`: star on `n` vertices, centre `0`.
pub fn star(n: usize) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for v in 1..n {
        g.add_edge(0, v);
    }
    Ok(g)
}

/// `M_n`: perfect matching on `n` vertices (`n` even).
pub fn matching(n: usize) -> Result<Graph> {
    if n % 2 == 1 {
        return Err(Error::param(format!("matching M_n needs even n, got {n}")));
    }
    let mut g = Graph::empty(n)?;
    for i in (0..n).step_by(2) {
        g.add_edge(i, i + 1);
    }
    Ok(g)
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    compose(&Graph::empty(a)?, &Graph::empty(b)?, ComposeMode::Join)
}

pub fn petersen() -> Graph {
    let mut g = Graph::empty(10).expect("order 10");
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    g
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, E=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&graph6::encode(self))
    }
}
