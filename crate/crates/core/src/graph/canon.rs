//! Canonical labelling by partition refinement and individualisation.
//!
//! The search tree is the usual one: refine the unit partition to an
//! equitable one, pick the first non-singleton cell, individualise each of
//! its vertices in turn and recurse. The canonical labelling is the leaf
//! whose relabelled adjacency rows are lexicographically largest.
//! Automorphisms discovered from equal leaves are used twice: to jump back
//! to the common ancestor of the two leaves, and to skip children that lie
//! in the same orbit (under the automorphisms that fix the current prefix)
//! as an already explored child.

use super::{bits, Graph};

/// Isomorphism-invariant key: equal iff the graphs are isomorphic.
///
/// Ordered first by order, then by the canonical adjacency rows, so sorting by
/// label is deterministic across runs and platforms.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalLabel {
    bytes: Vec<u8>,
}

impl CanonicalLabel {
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn to_hex(&self) -> String {
        self.bytes.iter().map(|b| format!("{b:02x}")).collect()
    }

    fn from_canonical(g: &Graph) -> Self {
        let width = g.order().div_ceil(8);
        let mut bytes = Vec::with_capacity(1 + g.order() * width);
        bytes.push(g.order() as u8);
        for &r in g.rows() {
            bytes.extend_from_slice(&r.to_le_bytes()[..width]);
        }
        CanonicalLabel { bytes }
    }
}

/// Full output of a canonical search.
#[derive(Clone, Debug)]
pub struct Canonization {
    /// `g` relabelled canonically.
    pub graph: Graph,
    /// `labelling[v]` is the canonical position of vertex `v`.
    pub labelling: Vec<usize>,
    /// Automorphisms found during the search, as vertex maps. They generate a
    /// subgroup of `Aut(g)` (usually all of it).
    pub generators: Vec<Vec<usize>>,
}

impl Canonization {
    pub fn label(&self) -> CanonicalLabel {
        CanonicalLabel::from_canonical(&self.graph)
    }

    /// Orbits of the group generated by [`Self::generators`], as a
    /// representative array (`rep[v]` = smallest vertex in `v`'s orbit).
    pub fn orbit_representatives(&self) -> Vec<usize> {
        let mut uf = UnionFind::new(self.labelling.len());
        for gen in &self.generators {
            for (v, &w) in gen.iter().enumerate() {
                uf.union(v, w);
            }
        }
        (0..self.labelling.len()).map(|v| uf.min_of(v)).collect()
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalLabel {
    canonize(g).label()
}

/// The canonical relabelling of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    canonize(g).graph
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.size() == b.size()
        && a.degree_sequence() == b.degree_sequence()
        && canonical_graph(a) == canonical_graph(b)
}

pub fn canonize(g: &Graph) -> Canonization {
    let n = g.order();
    if n == 0 {
        return Canonization {
            graph: g.clone(),
            labelling: Vec::new(),
            generators: Vec::new(),
        };
    }
    let mut s = Search {
        g,
        first: None,
        best: None,
        generators: Vec::new(),
    };
    let mut cells = vec![g.vertex_mask()];
    refine(g, &mut cells);
    let mut path = Vec::new();
    s.descend(cells, &mut path);
    let best = s.best.expect("search visits at least one leaf");
    Canonization {
        graph: Graph::from_rows(best.code),
        labelling: best.labelling,
        generators: s.generators,
    }
}

struct Leaf {
    code: Vec<u64>,
    labelling: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Returns `Some(level)` to unwind to the ancestor at depth `level`.
    fn descend(&mut self, cells: Vec<u64>, path: &mut Vec<usize>) -> Option<usize> {
        let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
            return self.leaf(&cells, path);
        };
        let depth = path.len();
        let mut explored: Vec<usize> = Vec::new();
        let mut orbits: Option<(usize, Vec<usize>)> = None;
        for v in bits(cells[target]) {
            if !explored.is_empty() {
                // Recompute stabiliser orbits only when new generators appeared.
                let stale = orbits.as_ref().map_or(true, |(k, _)| *k != self.generators.len());
                if stale {
                    orbits = Some((self.generators.len(), self.stabiliser_orbits(path)));
                }
                let rep = &orbits.as_ref().unwrap().1;
                if explored.iter().any(|&u| rep[u] == rep[v]) {
                    continue;
                }
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(1 << v);
            child.push(cells[target] & !(1 << v));
            child.extend_from_slice(&cells[target + 1..]);
            refine(self.g, &mut child);
            path.push(v);
            let jump = self.descend(child, path);
            path.pop();
            explored.push(v);
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[u64], path: &[usize]) -> Option<usize> {
        let n = self.g.order();
        let mut labelling = vec![0usize; n];
        for (pos, &c) in cells.iter().enumerate() {
            labelling[c.trailing_zeros() as usize] = pos;
        }
        let mut code = vec![0u64; n];
        for v in 0..n {
            code[labelling[v]] = bits(self.g.neighbors(v)).fold(0, |r, u| r | 1 << labelling[u]);
        }
        let leaf = Leaf {
            code,
            labelling,
            path: path.to_vec(),
        };
        let Some(first) = &self.first else {
            self.best = Some(Leaf {
                code: leaf.code.clone(),
                labelling: leaf.labelling.clone(),
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if leaf.code == first.code {
            let level = common_prefix(&first.path, &leaf.path);
            let gen = automorphism(&first.labelling, &leaf.labelling);
            self.generators.push(gen);
            return Some(level);
        }
        let best = self.best.as_ref().unwrap();
        match leaf.code.cmp(&best.code) {
            std::cmp::Ordering::Greater => {
                self.best = Some(leaf);
                None
            }
            std::cmp::Ordering::Equal => {
                let level = common_prefix(&best.path, &leaf.path);
                let gen = automorphism(&best.labelling, &leaf.labelling);
                self.generators.push(gen);
                Some(level)
            }
            std::cmp::Ordering::Less => None,
        }
    }

    fn stabiliser_orbits(&self, path: &[usize]) -> Vec<usize> {
        let mut uf = UnionFind::new(self.g.order());
        for gen in &self.generators {
            if path.iter().all(|&v| gen[v] == v) {
                for (v, &w) in gen.iter().enumerate() {
                    uf.union(v, w);
                }
            }
        }
        (0..self.g.order()).map(|v| uf.find(v)).collect()
    }
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// The vertex map sending the vertex at each position of leaf `a` to the
/// vertex at the same position of leaf `b`.
fn automorphism(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut vertex_at_b = vec![0usize; b.len()];
    for (v, &pos) in b.iter().enumerate() {
        vertex_at_b[pos] = v;
    }
    a.iter().map(|&pos| vertex_at_b[pos]).collect()
}

/// Refine an ordered partition to the coarsest equitable refinement.
///
/// Cells are split in place by the number of neighbours in a splitter cell,
/// fragments ordered by increasing count. Only the cell structure is
/// consulted, so the result commutes with relabelling.
fn refine(g: &Graph, cells: &mut Vec<u64>) {
    let mut counts: Vec<(u32, usize)> = Vec::with_capacity(g.order());
    loop {
        let mut changed = false;
        let mut si = 0;
        while si < cells.len() {
            let splitter = cells[si];
            let mut ci = 0;
            while ci < cells.len() {
                let cell = cells[ci];
                if cell.count_ones() == 1 {
                    ci += 1;
                    continue;
                }
                counts.clear();
                counts.extend(bits(cell).map(|v| ((g.neighbors(v) & splitter).count_ones(), v)));
                let first = counts[0].0;
                if counts.iter().all(|&(c, _)| c == first) {
                    ci += 1;
                    continue;
                }
                counts.sort_unstable();
                let mut frags: Vec<u64> = Vec::new();
                let mut last = u32::MAX;
                for &(c, v) in &counts {
                    if c != last {
                        frags.push(0);
                        last = c;
                    }
                    *frags.last_mut().unwrap() |= 1 << v;
                }
                let k = frags.len();
                cells.splice(ci..=ci, frags);
                ci += k;
                changed = true;
            }
            si += 1;
        }
        if !changed {
            break;
        }
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller index as root
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    fn min_of(&mut self, v: usize) -> usize {
        self.find(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, matching, path, petersen};
    use proptest::prelude::*;

    /// Brute force: smallest adjacency code over all permutations.
    fn brute_force_iso(a: &Graph, b: &Graph) -> bool {
        if a.order() != b.order() || a.size() != b.size() {
            return false;
        }
        let n = a.order();
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            if a.permuted(&perm) == *b {
                return true;
            }
            if !next_permutation(&mut perm) {
                return false;
            }
        }
    }

    fn next_permutation(p: &mut [usize]) -> bool {
        let n = p.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && p[i - 1] >= p[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = n - 1;
        while p[j] <= p[i - 1] {
            j -= 1;
        }
        p.swap(i - 1, j);
        p[i..].reverse();
        true
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (0..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
                let mut g = Graph::empty(n).unwrap();
                let mut k = 0;
                for v in 1..n {
                    for u in 0..v {
                        if bits[k] {
                            g.add_edge(u, v);
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
        Just((0..n).collect::<Vec<_>>()).prop_shuffle()
    }

    #[test]
    fn relabelled_path_has_same_label() {
        let a = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edges(3, &[(1, 0), (0, 2)]).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
    }

    #[test]
    fn distinct_small_graphs() {
        assert_ne!(canonical_form(&complete(3).unwrap()), canonical_form(&path(3).unwrap()));
        let two_triangles = complete(3).unwrap().copies(2).unwrap();
        assert_ne!(canonical_form(&cycle(6).unwrap()), canonical_form(&two_triangles));
    }

    #[test]
    fn generators_are_automorphisms() {
        for g in [petersen(), cycle(7).unwrap(), complete_bipartite(3, 4).unwrap(), matching(10).unwrap()] {
            let c = canonize(&g);
            assert!(!c.generators.is_empty());
            for gen in &c.generators {
                assert_eq!(g.permuted(gen), g);
            }
        }
    }

    #[test]
    fn symmetric_large_graphs_terminate() {
        for g in [
            Graph::empty(64).unwrap(),
            complete(64).unwrap(),
            matching(64).unwrap(),
            complete_bipartite(32, 32).unwrap(),
            complete(3).unwrap().copies(21).unwrap(),
        ] {
            let c = canonize(&g);
            assert_eq!(c.graph.size(), g.size());
            assert_eq!(g.permuted(&c.labelling), c.graph);
        }
    }

    #[test]
    fn petersen_orbits_transitive() {
        let c = canonize(&petersen());
        assert!(c.orbit_representatives().iter().all(|&r| r == 0));
    }

    proptest! {
        #[test]
        fn label_is_relabelling_invariant((g, perm) in arb_graph(12).prop_flat_map(|g| {
            let n = g.order();
            (Just(g), arb_perm(n))
        })) {
            let h = g.permuted(&perm);
            prop_assert_eq!(canonical_form(&g), canonical_form(&h));
            let c = canonize(&g);
            prop_assert_eq!(g.permuted(&c.labelling), c.graph);
        }

        #[test]
        fn agrees_with_brute_force(a in arb_graph(7), b in arb_graph(7)) {
            let (a, b) = if a.order() == b.order() { (a, b) } else {
                let n = a.order().min(b.order());
                (a.induced(crate::graph::low_mask(n)), b.induced(crate::graph::low_mask(n)))
            };
            prop_assert_eq!(canonical_form(&a) == canonical_form(&b), brute_force_iso(&a, &b));
        }
    }
}
