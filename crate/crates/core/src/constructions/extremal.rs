use super::turan::{turan_graph, turan_parts};
use crate::error::{Error, Result};
use crate::graph::{complete, compose, star, ComposeMode, Graph};

/// Whether the `s - 1` apex vertices of `H(n,p,s)` form a clique or an independent set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Apex {
    Clique,
    Independent,
}

/// `H(n,p,s) = K_{s-1} + T_p(n-s+1)` or `H'(n,p,s)` with an independent apex.
///
/// Apex vertices are `0..s-1`; the Turán part follows with its largest class first.
pub fn h_construction(n: usize, p: usize, s: usize, apex: Apex) -> Result<Graph> {
    if s == 0 || n + 1 < s {
        return Err(Error::param(format!("H(n,p,s) needs n >= s-1 >= 0, got n={n}, s={s}")));
    }
    let a = match apex {
        Apex::Clique => complete(s - 1)?,
        Apex::Independent => Graph::empty(s - 1)?,
    };
    compose(&a, &turan_graph(n - (s - 1), p)?, ComposeMode::Join)
}

/// Parameters of one member of the family `H(n,p,s,ν,Δ,B)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HFamilySpec {
    pub n: usize,
    pub p: usize,
    pub s: usize,
    pub nu: usize,
    pub delta: usize,
    /// `Q_{s-1}`, placed on the apex; must have exactly `s - 1` vertices.
    pub apex_graph: Graph,
    /// Graph placed in the largest Turán class. `None` uses [`e_nu_delta_witness`].
    pub class_graph: Option<Graph>,
}

/// Take `H'(n,p,s)`, put the class graph into the first (largest) class of the
/// Turán part and `Q_{s-1}` on the apex.
pub fn h_family_member(spec: &HFamilySpec) -> Result<Graph> {
    let HFamilySpec { n, p, s, nu, delta, .. } = *spec;
    if p < 1 {
        return Err(Error::param("H(n,p,s,ν,Δ,B) needs p >= 1"));
    }
    if spec.apex_graph.order() + 1 != s {
        return Err(Error::param(format!(
            "apex graph has {} vertices, expected s-1 = {}",
            spec.apex_graph.order(),
            s.saturating_sub(1)
        )));
    }
    let witness = match &spec.class_graph {
        Some(g) => g.clone(),
        None => e_nu_delta_witness(nu, delta)?,
    };
    let mut g = h_construction(n, p, s, Apex::Independent)?;
    let class = turan_parts(n - (s - 1), p)[0];
    if witness.order() > class {
        return Err(Error::param(format!(
            "class of size {class} too small for a witness on {} vertices",
            witness.order()
        )));
    }
    let base = s - 1;
    for (u, v) in witness.edges() {
        g.add_edge(base + u, base + v);
    }
    for (u, v) in spec.apex_graph.edges() {
        g.add_edge(u, v);
    }
    Ok(g)
}

/// The graph `H_{2t-1}` (`t` even, `t >= 4`): `2t - 1` vertices, maximum degree
/// and matching number `t - 1`, and `f(t-1, t-1)` edges.
pub fn h_odd_gadget(t: usize) -> Result<Graph> {
    if t < 4 || t % 2 == 1 {
        return Err(Error::param(format!("H_{{2t-1}} needs even t >= 4, got {t}")));
    }
    if t == 4 {
        // K_4 minus the edge 0-1, K_3 on 4..7, and the edges 0-4, 1-5.
        let mut g = Graph::empty(7)?;
        for (u, v) in [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6), (0, 4), (1, 5)] {
            g.add_edge(u, v);
        }
        return Ok(g);
    }
    let m = t / 2 - 1;
    // x_i -> i - 1, y_i -> t - 1 + i - 1, z -> 2t - 2 (i = 1..=t-1)
    let x = |i: usize| i - 1;
    let y = |i: usize| t - 2 + i;
    let z = 2 * t - 2;
    let mut g = Graph::empty(2 * t - 1)?;
    for i in 1..t {
        for j in i + 1..t {
            g.add_edge(x(i), x(j));
            g.add_edge(y(i), y(j));
        }
    }
    // X_1 = {x_1..x_m}, X_2 = {x_{m+1}..x_{t-2}}
    for i in 1..=m {
        g.add_edge(x(i), y(i));
        g.add_edge(z, x(i));
        g.add_edge(z, y(i));
    }
    // Alternating cycle x_{m+1} y_{m+1} x_{m+2} y_{m+2} ... of length t - 2.
    let second: Vec<usize> = (m + 1..=t - 2).collect();
    for (k, &i) in second.iter().enumerate() {
        let next = second[(k + 1) % second.len()];
        g.add_edge(x(i), y(i));
        g.add_edge(y(i), x(next));
    }
    g.add_edge(x(t - 1), y(t - 1));
    for i in 1..=m {
        g.remove_edge(x(i), x(m + i));
        g.remove_edge(y(i), y(m + i));
    }
    Ok(g)
}

/// A graph with matching number at most `ν`, maximum degree at most `Δ`
/// and exactly `f(ν, Δ)` edges, without isolated vertices.
///
/// Odd diagonal cases `ν = Δ >= 3` return `H_{ν+Δ+1}`. Otherwise the witness is
/// `⌊ν/⌈Δ/2⌉⌋` copies of a dense factor-critical block on `2⌈Δ/2⌉ + 1` vertices
/// plus one star `K_{1,Δ}` per unit of matching number left over. The block is
/// `K_{Δ+1}` for even `Δ`, and `K_{Δ+2}` minus a minimum edge cover for odd `Δ`.
pub fn e_nu_delta_witness(nu: usize, delta: usize) -> Result<Graph> {
    if nu == 0 || delta == 0 {
        return Graph::empty(0);
    }
    if nu == delta && nu % 2 == 1 && nu >= 3 {
        return h_odd_gadget(nu + 1);
    }
    let c = delta.div_ceil(2);
    let block = {
        let mut b = complete(2 * c + 1)?;
        if delta % 2 == 1 {
            // remove c - 1 disjoint edges and a path on the last three vertices
            for i in 0..c - 1 {
                b.remove_edge(2 * i, 2 * i + 1);
            }
            let k = 2 * c - 2;
            b.remove_edge(k, k + 1);
            b.remove_edge(k + 1, k + 2);
        }
        b.without_isolated()
    };
    let blocks = nu / c;
    let stars = nu - blocks * c;
    let order = blocks * block.order() + stars * (delta + 1);
    if order > crate::graph::MAX_ORDER {
        return Err(Error::OrderCap {
            order,
            cap: crate::graph::MAX_ORDER,
        });
    }
    let mut g = block.copies(blocks)?;
    let s = star(delta + 1)?;
    for _ in 0..stars {
        g = compose(&g, &s, ComposeMode::DisjointUnion)?;
    }
    Ok(g)
}
