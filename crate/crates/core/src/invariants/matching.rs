//! Maximum matching in general graphs (Edmonds' blossom algorithm, `O(n^3)`).

use crate::graph::{bits, Graph};
use std::collections::VecDeque;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pub size: usize,
    /// Matched pairs `(u, v)` with `u < v`, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut used = 0u64;
        self.edges.len() == self.size
            && self.edges.iter().all(|&(u, v)| {
                let ok = g.has_edge(u, v) && used >> u & 1 == 0 && used >> v & 1 == 0;
                used |= 1 << u | 1 << v;
                ok
            })
    }
}

/// `ν(g)` with a witness matching.
pub fn matching_number(g: &Graph) -> Matching {
    let n = g.order();
    let mut mate = vec![usize::MAX; n];
    // greedy start
    for u in 0..n {
        if mate[u] == usize::MAX {
            if let Some(v) = bits(g.neighbors(u)).find(|&v| mate[v] == usize::MAX) {
                mate[u] = v;
                mate[v] = u;
            }
        }
    }
    let mut b = Blossom::new(g);
    for root in 0..n {
        if mate[root] == usize::MAX {
            if let Some(end) = b.find_path(root, &mate) {
                b.augment(end, &mut mate);
            }
        }
    }
    let mut edges: Vec<(usize, usize)> = (0..n)
        .filter(|&u| mate[u] != usize::MAX && u < mate[u])
        .map(|u| (u, mate[u]))
        .collect();
    edges.sort_unstable();
    Matching {
        size: edges.len(),
        edges,
    }
}

struct Blossom<'g> {
    g: &'g Graph,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    blossom: Vec<bool>,
}

const NONE: usize = usize::MAX;

impl<'g> Blossom<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.order();
        Blossom {
            g,
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            blossom: vec![false; n],
        }
    }

    fn lca(&self, mut a: usize, mut b: usize, mate: &[usize]) -> usize {
        let mut seen = vec![false; self.g.order()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if mate[a] == NONE {
                break;
            }
            a = self.parent[mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize, mate: &[usize]) {
        while self.base[v] != b {
            self.blossom[self.base[v]] = true;
            self.blossom[self.base[mate[v]]] = true;
            self.parent[v] = child;
            child = mate[v];
            v = self.parent[mate[v]];
        }
    }

    /// BFS for an augmenting path from `root`; returns its free endpoint.
    fn find_path(&mut self, root: usize, mate: &[usize]) -> Option<usize> {
        let n = self.g.order();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for to in bits(self.g.neighbors(v)) {
                if self.base[v] == self.base[to] || mate[v] == to {
                    continue;
                }
                if to == root || (mate[to] != NONE && self.parent[mate[to]] != NONE) {
                    let cur = self.lca(v, to, mate);
                    self.blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to, mate);
                    self.mark_path(to, cur, v, mate);
                    for i in 0..n {
                        if self.blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if mate[to] == NONE {
                        return Some(to);
                    }
                    let next = mate[to];
                    self.used[next] = true;
                    queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&self, mut v: usize, mate: &mut [usize]) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = mate[pv];
            mate[v] = pv;
            mate[pv] = v;
            v = ppv;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, petersen};
    use proptest::prelude::*;

    fn brute_force(g: &Graph) -> usize {
        let edges: Vec<(usize, usize)> = g.edges().collect();
        fn go(edges: &[(usize, usize)], used: u64) -> usize {
            match edges.split_first() {
                None => 0,
                Some((&(u, v), rest)) => {
                    let skip = go(rest, used);
                    if used >> u & 1 == 0 && used >> v & 1 == 0 {
                        skip.max(1 + go(rest, used | 1 << u | 1 << v))
                    } else {
                        skip
                    }
                }
            }
        }
        go(&edges, 0)
    }

    #[test]
    fn examples() {
        assert_eq!(matching_number(&path(5).unwrap()).size, 2);
        assert_eq!(matching_number(&complete(7).unwrap()).size, 3);
        assert_eq!(matching_number(&petersen()).size, 5);
        assert_eq!(matching_number(&cycle(9).unwrap()).size, 4);
        assert_eq!(matching_number(&Graph::empty(0).unwrap()).size, 0);
    }

    proptest! {
        #[test]
        fn agrees_with_brute_force(n in 0usize..=8, seed in any::<u64>()) {
            let mut g = Graph::empty(n).unwrap();
            let mut x = seed | 1;
            for v in 1..n {
                for u in 0..v {
                    x ^= x << 13; x ^= x >> 7; x ^= x << 17;
                    if x % 3 == 0 { g.add_edge(u, v); }
                }
            }
            let m = matching_number(&g);
            prop_assert!(m.is_valid_in(&g));
            prop_assert_eq!(m.size, brute_force(&g));
        }
    }
}
