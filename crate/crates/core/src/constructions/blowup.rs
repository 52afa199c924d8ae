use crate::error::{Error, Result};
use crate::graph::{bits, complete_bipartite, Graph, GraphFamily, MAX_ORDER};
use crate::invariants::chromatic_number;

/// Largest base order accepted by [`split_family`] (all `2^n` subsets are visited).
pub const SPLIT_FAMILY_CAP: usize = 12;

/// A base graph together with the blow-up parameter `p` (edges become `K_{p+1}`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupSpec {
    pub base: Graph,
    pub p: usize,
    /// Whether `p >= χ(base) + 1`, the standing assumption for the blow-up theorems.
    pub above_chromatic: bool,
}

impl BlowupSpec {
    pub fn new(base: Graph, p: usize) -> Result<Self> {
        if p < 2 {
            return Err(Error::param(format!("blow-up needs p >= 2, got {p}")));
        }
        let chi = chromatic_number(&base)?;
        Ok(BlowupSpec {
            above_chromatic: p > chi,
            base,
            p,
        })
    }

    pub fn order(&self) -> usize {
        self.base.order() + (self.p - 1) * self.base.size()
    }

    pub fn build(&self) -> Result<Graph> {
        edge_blowup(&self.base, self.p)
    }
}

/// `G^{p+1}`: every edge `uv` of `g` gets `p - 1` fresh vertices that form a
/// `K_{p+1}` with `u` and `v`.
///
/// Original vertices keep their labels; the fresh vertices of the `i`-th edge
/// (in lexicographic order) follow those of earlier edges.
pub fn edge_blowup(g: &Graph, p: usize) -> Result<Graph> {
    if p < 2 {
        return Err(Error::param(format!("blow-up needs p >= 2, got {p}")));
    }
    let order = g.order() + (p - 1) * g.size();
    if order > MAX_ORDER {
        return Err(Error::OrderCap { order, cap: MAX_ORDER });
    }
    let mut h = Graph::empty(order)?;
    let mut next = g.order();
    for (u, v) in g.edges() {
        let mut clique = vec![u, v];
        clique.extend(next..next + p - 1);
        next += p - 1;
        for (i, &a) in clique.iter().enumerate() {
            for &b in &clique[i + 1..] {
                h.add_edge(a, b);
            }
        }
    }
    Ok(h)
}

/// Split every vertex of `split` simultaneously: `v` is replaced by `d(v)`
/// independent vertices, each adjacent to exactly one former neighbour.
///
/// Unsplit vertices come first (in increasing order), then the copies of each
/// split vertex in increasing order of vertex and neighbour. An edge between
/// two split vertices becomes an isolated edge; a split isolated vertex vanishes.
pub fn vertex_split(g: &Graph, split: u64) -> Result<Graph> {
    let n = g.order();
    let split = split & g.vertex_mask();
    let kept: Vec<usize> = bits(g.vertex_mask() & !split).collect();
    let order = kept.len() + bits(split).map(|v| g.degree(v)).sum::<usize>();
    if order > MAX_ORDER {
        return Err(Error::OrderCap { order, cap: MAX_ORDER });
    }
    let mut id = vec![usize::MAX; n];
    for (i, &v) in kept.iter().enumerate() {
        id[v] = i;
    }
    // copy[v][w]: the copy of split vertex v that keeps neighbour w
    let mut copy = vec![[usize::MAX; MAX_ORDER]; n];
    let mut next = kept.len();
    for v in bits(split) {
        for w in bits(g.neighbors(v)) {
            copy[v][w] = next;
            next += 1;
        }
    }
    let end = |v: usize, other: usize| if split >> v & 1 == 1 { copy[v][other] } else { id[v] };
    let mut h = Graph::empty(order)?;
    for (u, v) in g.edges() {
        h.add_edge(end(u, v), end(v, u));
    }
    Ok(h)
}

/// All graphs obtained from `g` by splitting some vertex subset, up to isomorphism.
pub fn split_family(g: &Graph) -> Result<GraphFamily> {
    if g.order() > SPLIT_FAMILY_CAP {
        return Err(Error::resource(
            "split family",
            format!("base order {} exceeds cap {SPLIT_FAMILY_CAP}", g.order()),
        ));
    }
    let mut family = GraphFamily::new();
    for mask in 0..1u64 << g.order() {
        family.insert(&vertex_split(g, mask)?);
    }
    Ok(family)
}

/// `K_{s,t}(a, b)`: split the first `a` vertices of the `s`-side and the first
/// `b` vertices of the `t`-side of `K_{s,t}`.
pub fn k_st_split(s: usize, t: usize, a: usize, b: usize) -> Result<Graph> {
    if a > s || b > t {
        return Err(Error::param(format!("K_{{{s},{t}}}({a},{b}): split counts exceed side sizes")));
    }
    let k = complete_bipartite(s, t)?;
    let mask = (0..a).chain(s..s + b).fold(0u64, |m, v| m | 1 << v);
    vertex_split(&k, mask)
}
