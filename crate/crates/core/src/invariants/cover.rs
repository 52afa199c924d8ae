use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// Largest order accepted by [`covering_number`].
pub const COVER_CAP: usize = 32;

/// A vertex set meeting every edge, with its size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    pub size: usize,
    pub vertices: u64,
}

/// Two-colouring with `|side_a|` minimal: in each component the smaller colour
/// class (ties: the class containing the component's smallest vertex) goes to
/// `side_a`. Isolated vertices go to `side_b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub side_a: u64,
    pub side_b: u64,
}

/// `β(g)` with a minimum cover, as the complement of a maximum independent set.
pub fn covering_number(g: &Graph) -> Result<Cover> {
    if g.order() > COVER_CAP {
        return Err(Error::resource(
            "covering number",
            format!("order {} exceeds exact budget {COVER_CAP}", g.order()),
        ));
    }
    let independent = maximum_independent_set(g);
    let vertices = g.vertex_mask() & !independent;
    Ok(Cover {
        size: vertices.count_ones() as usize,
        vertices,
    })
}

/// A maximum independent set (lexicographically first among the branch order).
pub fn maximum_independent_set(g: &Graph) -> u64 {
    let mut best = 0u64;
    mis(g, g.vertex_mask(), 0, &mut best);
    best
}

fn mis(g: &Graph, cand: u64, current: u64, best: &mut u64) {
    if current.count_ones() + cand.count_ones() <= best.count_ones() {
        return;
    }
    if cand == 0 {
        *best = current;
        return;
    }
    // vertices with no neighbours among the candidates are always taken
    let free = bits(cand).filter(|&v| g.neighbors(v) & cand == 0).fold(0u64, |m, v| m | 1 << v);
    if free != 0 {
        mis(g, cand & !free, current | free, best);
        return;
    }
    let v = bits(cand).max_by_key(|&v| (g.neighbors(v) & cand).count_ones()).unwrap();
    mis(g, cand & !(1 << v) & !g.neighbors(v), current | 1 << v, best);
    mis(g, cand & !(1 << v), current, best);
}

/// Minimal-`|A|` bipartition, or `None` if `g` has an odd cycle.
pub fn bipartition(g: &Graph) -> Option<Bipartition> {
    let mut side_a = 0u64;
    let mut side_b = 0u64;
    for comp in g.components() {
        if comp.count_ones() == 1 {
            side_b |= comp;
            continue;
        }
        let root = comp.trailing_zeros() as usize;
        let (mut even, mut odd) = (1u64 << root, 0u64);
        let mut frontier = 1u64 << root;
        let mut parity = 0;
        while frontier != 0 {
            let next = bits(frontier).fold(0u64, |m, v| m | g.neighbors(v)) & !(even | odd);
            if parity == 0 {
                odd |= next;
            } else {
                even |= next;
            }
            frontier = next;
            parity ^= 1;
        }
        if bits(even).any(|v| g.neighbors(v) & even != 0) || bits(odd).any(|v| g.neighbors(v) & odd != 0) {
            return None;
        }
        if odd.count_ones() < even.count_ones() {
            side_a |= odd;
            side_b |= even;
        } else {
            side_a |= even;
            side_b |= odd;
        }
    }
    Some(Bipartition { side_a, side_b })
}

/// `q(g)`: minimum independent covering of a bipartite graph, with a witness.
///
/// Every independent covering of a connected bipartite graph contains a whole
/// colour class, so the minimum is the sum over components of the smaller class.
pub fn independent_covering_number(g: &Graph) -> Option<Cover> {
    let b = bipartition(g)?;
    Some(Cover {
        size: b.side_a.count_ones() as usize,
        vertices: b.side_a,
    })
}

pub fn is_independent(g: &Graph, set: u64) -> bool {
    bits(set).all(|v| g.neighbors(v) & set == 0)
}

pub fn is_cover(g: &Graph, set: u64) -> bool {
    g.edges().all(|(u, v)| set >> u & 1 == 1 || set >> v & 1 == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, matching, notation, path};
    use proptest::prelude::*;

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (0..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bs| {
                let mut g = Graph::empty(n).unwrap();
                let mut k = 0;
                for v in 1..n {
                    for u in 0..v {
                        if bs[k] {
                            g.add_edge(u, v);
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    #[test]
    fn covering_examples() {
        assert_eq!(covering_number(&cycle(5).unwrap()).unwrap().size, 3);
        assert_eq!(covering_number(&complete_bipartite(3, 4).unwrap()).unwrap().size, 3);
        assert_eq!(covering_number(&matching(6).unwrap()).unwrap().size, 3);
        assert!(covering_number(&Graph::empty(33).unwrap()).is_err());
    }

    #[test]
    fn independent_covering_examples() {
        assert_eq!(independent_covering_number(&path(6).unwrap()).unwrap().size, 3);
        let k25 = complete_bipartite(2, 5).unwrap();
        let c = independent_covering_number(&k25).unwrap();
        assert_eq!((c.size, c.vertices), (2, 0b11));
        assert!(independent_covering_number(&complete(3).unwrap()).is_none());
        // components choose sides independently
        let g = notation::parse("K1,3 | K3,1 | E2").unwrap();
        assert_eq!(independent_covering_number(&g).unwrap().size, 2);
    }

    proptest! {
        #[test]
        fn gallai_identity(g in arb_graph(8)) {
            let beta = covering_number(&g).unwrap();
            prop_assert!(is_cover(&g, beta.vertices));
            let alpha = maximum_independent_set(&g);
            prop_assert!(is_independent(&g, alpha));
            prop_assert_eq!(beta.size + alpha.count_ones() as usize, g.order());
            // brute-force α
            let brute = (0..1u64 << g.order()).filter(|&s| is_independent(&g, s)).map(|s| s.count_ones()).max().unwrap();
            prop_assert_eq!(alpha.count_ones(), brute);
        }

        #[test]
        fn konig_for_bipartite(g in arb_graph(8)) {
            if bipartition(&g).is_some() {
                prop_assert_eq!(covering_number(&g).unwrap().size, crate::invariants::matching_number(&g).size);
            }
        }

        #[test]
        fn independent_covering_is_minimum(g in arb_graph(8)) {
            let brute = (0..1u64 << g.order())
                .filter(|&s| is_independent(&g, s) && is_cover(&g, s))
                .map(|s| s.count_ones() as usize)
                .min();
            match independent_covering_number(&g) {
                Some(c) => {
                    prop_assert!(is_independent(&g, c.vertices) && is_cover(&g, c.vertices));
                    prop_assert_eq!(Some(c.size), brute);
                }
                None => prop_assert_eq!(brute, None),
            }
        }
    }
}
