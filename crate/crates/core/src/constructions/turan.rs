use crate::error::Result;
use crate::graph::{Graph, MAX_ORDER};
use crate::error::Error;

/// Part sizes of `T_p(n)`, larger parts first.
pub fn turan_parts(n: usize, p: usize) -> Vec<usize> {
    assert!(p >= 1, "Turán graph needs p >= 1");
    (0..p).map(|i| n / p + usize::from(i < n % p)).collect()
}

/// `T_p(n)`: balanced complete `p`-partite graph. Parts occupy consecutive
/// vertex ranges in the order given by [`turan_parts`].
pub fn turan_graph(n: usize, p: usize) -> Result<Graph> {
    if p == 0 {
        return Err(Error::param("Turán graph needs p >= 1"));
    }
    if n > MAX_ORDER {
        return Err(Error::OrderCap { order: n, cap: MAX_ORDER });
    }
    let mut g = Graph::empty(n)?;
    let mut part_of = Vec::with_capacity(n);
    for (i, size) in turan_parts(n, p).into_iter().enumerate() {
        part_of.extend(std::iter::repeat(i).take(size));
    }
    for v in 0..n {
        for u in 0..v {
            if part_of[u] != part_of[v] {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{canon::is_isomorphic, complete, complete_bipartite, contains_subgraph};

    #[test]
    fn small_cases() {
        let t = turan_graph(5, 2).unwrap();
        assert!(is_isomorphic(&t, &complete_bipartite(3, 2).unwrap()));
        assert_eq!(t.size(), 6);
        assert_eq!(turan_parts(7, 3), vec![3, 2, 2]);
        assert_eq!(turan_graph(7, 3).unwrap().size(), 16);
        assert_eq!(turan_graph(4, 7).unwrap(), complete(4).unwrap());
        assert_eq!(turan_graph(9, 1).unwrap().size(), 0);
    }

    #[test]
    fn clique_free() {
        for n in 1..=9 {
            for p in 1..=4 {
                let t = turan_graph(n, p).unwrap();
                assert!(contains_subgraph(&t, &complete(p + 1).unwrap()).is_none());
            }
        }
    }
}
