use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::subgraph::Matcher;
use crate::graph::{complete, Graph};

pub const NIM_ORDER_CAP: usize = 7;
pub const NIM_PATTERN_CAP: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NimResult {
    pub n: usize,
    pub pattern: Graph,
    pub value: u64,
    /// Red edges of an optimal colouring; the remaining edges of `K_n` are blue.
    pub red: Graph,
    pub nim_edges: Vec<(usize, usize)>,
    /// Colourings examined.
    pub explored: u64,
}

/// Edges of `K_n` lying in no monochromatic copy of the matcher's pattern,
/// when the edges of `red` are red and all others blue.
pub fn nim_edges(red: &Graph, pattern: &Matcher) -> Vec<(usize, usize)> {
    let blue = red.complement();
    complete(red.order())
        .expect("order already validated")
        .edges()
        .filter(|&(u, v)| {
            let own = if red.has_edge(u, v) { red } else { &blue };
            pattern.find_through_edge(own, u, v).is_none()
        })
        .collect()
}

/// `g(n, H)` by enumerating every red/blue colouring of `K_n` with the first
/// edge red (swapping colours preserves the NIM edges).
pub fn exact_nim_g(n: usize, h: &Graph) -> Result<NimResult> {
    if n > NIM_ORDER_CAP || h.order() > NIM_PATTERN_CAP {
        return Err(Error::resource(
            "exact g(n,H)",
            format!(
                "needs n <= {NIM_ORDER_CAP} and |V(H)| <= {NIM_PATTERN_CAP}, got n = {n}, |V(H)| = {}",
                h.order()
            ),
        ));
    }
    let pairs: Vec<(usize, usize)> = complete(n)?.edges().collect();
    let m = pairs.len();
    let matcher = Matcher::new(h);
    let colouring = |code: u64| {
        let red_edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(i, _)| code >> i & 1 == 1).map(|(_, &e)| e).collect();
        Graph::from_edges(n, &red_edges).expect("pairs are valid")
    };
    let count = if m == 0 { 1u64 } else { 1u64 << (m - 1) };
    // edge 0 is always red: codes are odd, or zero when K_n has no edges
    let code_of = |i: u64| if m == 0 { 0 } else { i << 1 | 1 };
    let (best, value) = (0..count)
        .into_par_iter()
        .map(|i| {
            let code = code_of(i);
            let red = colouring(code);
            (code, nim_edges(&red, &matcher).len() as u64)
        })
        .reduce(|| (u64::MAX, 0), |a, b| if b.1 > a.1 || (b.1 == a.1 && b.0 < a.0) { b } else { a });
    let red = colouring(best);
    let nim = nim_edges(&red, &matcher);
    debug_assert_eq!(nim.len() as u64, value);
    Ok(NimResult {
        n,
        pattern: h.clone(),
        value,
        red,
        nim_edges: nim,
        explored: count,
    })
}
