//! Exhaustive generation of graphs in a hereditary class, one edge count at a time.
//!
//! Level `m` holds every graph of the class with `m` edges on exactly `n`
//! vertices, up to isomorphism, stored as packed canonical adjacency. Level
//! `m + 1` is obtained by adding one non-edge to each member of level `m` (one
//! per orbit of the automorphisms found while canonizing it) and keeping the
//! children the class accepts. Since the class is closed under deleting edges,
//! every member with `m + 1` edges has a parent on level `m`, so the levels are
//! complete.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::graph::canon::canonize;
use crate::graph::Graph;

/// Largest order the packed representation supports.
pub const PACKED_CAP: usize = 16;

const CHUNK: usize = 2048;

pub(crate) fn pack(g: &Graph) -> u128 {
    let mut code = 0u128;
    for (u, v) in g.edges() {
        code |= 1 << pair_index(u, v);
    }
    code
}

pub(crate) fn unpack(code: u128, n: usize) -> Graph {
    let mut g = Graph::empty(n).expect("packed order is within the cap");
    for v in 1..n {
        for u in 0..v {
            if code >> pair_index(u, v) & 1 == 1 {
                g.add_edge(u, v);
            }
        }
    }
    g
}

#[inline]
fn pair_index(u: usize, v: usize) -> usize {
    v * (v - 1) / 2 + u
}

/// Per-level counts and the top level.
pub struct Levels {
    pub n: usize,
    pub counts: Vec<u64>,
    /// Members of the last nonempty level, sorted by packed code.
    pub top: Vec<Graph>,
}

impl Levels {
    pub fn max_edges(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// Orbit representatives of the non-edges of `g` under the automorphisms found
/// by canonization.
fn non_edge_representatives(g: &Graph, generators: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut parent: Vec<usize> = (0..n * n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let key = |u: usize, v: usize| if u < v { u * n + v } else { v * n + u };
    for gen in generators {
        for (u, v) in g.non_edges() {
            let (a, b) = (find(&mut parent, key(u, v)), find(&mut parent, key(gen[u], gen[v])));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    g.non_edges()
        .filter(|&(u, v)| find(&mut parent, key(u, v)) == key(u, v))
        .collect()
}

/// Generate the class on `n` vertices. `accept(child, u, v)` decides whether
/// `child`, obtained from an accepted graph by adding `{u, v}`, belongs to the class.
pub fn generate<F>(n: usize, accept: F) -> Levels
where
    F: Fn(&Graph, usize, usize) -> bool + Sync,
{
    assert!(n <= PACKED_CAP);
    let mut counts = vec![1u64];
    let mut level: Vec<u128> = vec![0];
    loop {
        let mut next: HashSet<u128> = HashSet::new();
        for chunk in level.chunks(CHUNK) {
            let children: Vec<Vec<u128>> = chunk
                .par_iter()
                .map(|&code| {
                    let g = unpack(code, n);
                    let c = canonize(&g);
                    non_edge_representatives(&g, &c.generators)
                        .into_iter()
                        .filter_map(|(u, v)| {
                            let mut child = g.clone();
                            child.add_edge(u, v);
                            accept(&child, u, v).then(|| pack(&canonize(&child).graph))
                        })
                        .collect()
                })
                .collect();
            next.extend(children.into_iter().flatten());
        }
        if next.is_empty() {
            break;
        }
        let mut sorted: Vec<u128> = next.into_iter().collect();
        sorted.sort_unstable();
        counts.push(sorted.len() as u64);
        level = sorted;
    }
    Levels {
        n,
        counts,
        top: level.into_iter().map(|c| unpack(c, n)).collect(),
    }
}
