//! Non-induced subgraph containment by backtracking.
//!
//! Pattern vertices are matched in a connectivity-first order (most
//! already-placed neighbours, then highest degree, then lowest index).
//! Host candidates are tried in increasing index order, so the first
//! embedding returned is deterministic. Isolated pattern vertices are placed
//! last on the smallest unused host vertices.

use super::{bits, Graph, MAX_ORDER};

/// Injective map from pattern vertices to host vertices; `map[v]` is the
/// image of pattern vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    /// Replay: the map is injective and every pattern edge lands on a host edge.
    pub fn verify(&self, host: &Graph, pattern: &Graph) -> bool {
        if self.map.len() != pattern.order() {
            return false;
        }
        let mut used = 0u64;
        for &w in &self.map {
            if w >= host.order() || used >> w & 1 == 1 {
                return false;
            }
            used |= 1 << w;
        }
        pattern.edges().all(|(u, v)| host.has_edge(self.map[u], self.map[v]))
    }
}

/// First embedding of `pattern` into `host`, if any.
pub fn contains_subgraph(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    Matcher::new(pattern).find(host)
}

/// Precomputed search plan for a fixed pattern, reusable across hosts.
#[derive(Clone, Debug)]
pub struct Matcher {
    pattern: Graph,
    /// Non-isolated pattern vertices in matching order.
    order: Vec<usize>,
    /// For position `i`, the positions `< i` adjacent to `order[i]`.
    back: Vec<Vec<usize>>,
    isolated: Vec<usize>,
    degree: Vec<usize>,
    /// One plan per pattern edge `(a, b)`, starting with `a, b`.
    edge_plans: Vec<EdgePlan>,
}

#[derive(Clone, Debug)]
struct EdgePlan {
    a: usize,
    b: usize,
    order: Vec<usize>,
    back: Vec<Vec<usize>>,
}

impl Matcher {
    pub fn new(pattern: &Graph) -> Self {
        let isolated: Vec<usize> = bits(pattern.isolated_vertices()).collect();
        let (order, back) = plan(pattern, &[]);
        let edge_plans = pattern
            .edges()
            .map(|(a, b)| {
                let (order, back) = plan(pattern, &[a, b]);
                EdgePlan { a, b, order, back }
            })
            .collect();
        Matcher {
            pattern: pattern.clone(),
            degree: (0..pattern.order()).map(|v| pattern.degree(v)).collect(),
            order,
            back,
            isolated,
            edge_plans,
        }
    }

    pub fn pattern(&self) -> &Graph {
        &self.pattern
    }

    pub fn find(&self, host: &Graph) -> Option<Embedding> {
        if !self.feasible(host) {
            return None;
        }
        let mut st = State::new(host, self.pattern.order());
        if st.extend(self, &self.order, &self.back, 0) {
            self.finish(host, st)
        } else {
            None
        }
    }

    pub fn is_contained(&self, host: &Graph) -> bool {
        self.find(host).is_some()
    }

    /// An embedding that maps some pattern edge onto the host edge `{u, v}`.
    ///
    /// Used to test whether adding `{u, v}` to a pattern-free graph creates a copy.
    pub fn find_through_edge(&self, host: &Graph, u: usize, v: usize) -> Option<Embedding> {
        if !host.has_edge(u, v) || !self.feasible(host) {
            return None;
        }
        for plan in &self.edge_plans {
            for (x, y) in [(u, v), (v, u)] {
                if host.degree(x) < self.degree[plan.a] || host.degree(y) < self.degree[plan.b] {
                    continue;
                }
                let mut st = State::new(host, self.pattern.order());
                st.assign(plan.a, x);
                st.assign(plan.b, y);
                if st.extend(self, &plan.order, &plan.back, 2) {
                    if let Some(e) = self.finish(host, st) {
                        return Some(e);
                    }
                }
            }
        }
        None
    }

    fn feasible(&self, host: &Graph) -> bool {
        self.pattern.order() <= host.order() && self.pattern.size() <= host.size()
    }

    fn finish(&self, host: &Graph, mut st: State) -> Option<Embedding> {
        let mut free = host.vertex_mask() & !st.used;
        for &v in &self.isolated {
            if free == 0 {
                return None;
            }
            let w = free.trailing_zeros() as usize;
            free &= free - 1;
            st.map[v] = w;
        }
        Some(Embedding { map: st.map })
    }
}

/// Matching order: `seed` first, then repeatedly the non-isolated vertex with
/// the most placed neighbours, ties by degree (desc) then index (asc).
fn plan(pattern: &Graph, seed: &[usize]) -> (Vec<usize>, Vec<Vec<usize>>) {
    let n = pattern.order();
    let mut placed = 0u64;
    let mut order = Vec::with_capacity(n);
    for &s in seed {
        order.push(s);
        placed |= 1 << s;
    }
    let active = pattern.vertex_mask() & !pattern.isolated_vertices();
    while placed & active != active {
        let next = bits(active & !placed)
            .max_by_key(|&v| {
                (
                    (pattern.neighbors(v) & placed).count_ones(),
                    pattern.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .unwrap();
        order.push(next);
        placed |= 1 << next;
    }
    let mut pos = [usize::MAX; MAX_ORDER];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let back = order
        .iter()
        .enumerate()
        .map(|(i, &v)| bits(pattern.neighbors(v)).map(|u| pos[u]).filter(|&p| p < i).collect())
        .collect();
    (order, back)
}

struct State<'h> {
    host: &'h Graph,
    map: Vec<usize>,
    used: u64,
}

impl<'h> State<'h> {
    fn new(host: &'h Graph, pattern_order: usize) -> Self {
        State {
            host,
            map: vec![usize::MAX; pattern_order],
            used: 0,
        }
    }

    fn assign(&mut self, v: usize, w: usize) {
        self.map[v] = w;
        self.used |= 1 << w;
    }

    fn candidates(&self, m: &Matcher, order: &[usize], back: &[Vec<usize>], i: usize) -> u64 {
        let mut cand = self.host.vertex_mask() & !self.used;
        for &p in &back[i] {
            cand &= self.host.neighbors(self.map[order[p]]);
        }
        let need = m.degree[order[i]];
        if need > 1 {
            let mut filtered = 0;
            for w in bits(cand) {
                if self.host.degree(w) >= need {
                    filtered |= 1 << w;
                }
            }
            cand = filtered;
        }
        cand
    }

    fn extend(&mut self, m: &Matcher, order: &[usize], back: &[Vec<usize>], i: usize) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        let cand = self.candidates(m, order, back, i);
        for w in bits(cand) {
            self.assign(v, w);
            if self.forward_ok(order, back, i) && self.extend(m, order, back, i + 1) {
                return true;
            }
            self.used &= !(1 << w);
            self.map[v] = usize::MAX;
        }
        false
    }

    /// Every later vertex adjacent to position `i` still has a candidate.
    fn forward_ok(&self, order: &[usize], back: &[Vec<usize>], i: usize) -> bool {
        for later in &back[i + 1..order.len()] {
            if !later.contains(&i) {
                continue;
            }
            let mut cand = self.host.vertex_mask() & !self.used;
            for &p in later {
                if p <= i {
                    cand &= self.host.neighbors(self.map[order[p]]);
                }
            }
            if cand == 0 {
                return false;
            }
        }
        true
    }
}
