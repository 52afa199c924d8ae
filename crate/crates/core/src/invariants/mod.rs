//! Exact graph parameters: χ, ν, β, q, bipartitions and factor-criticality.

mod chromatic;
mod cover;
mod matching;

pub use chromatic::{chromatic_number, colouring, is_colourable, CHROMATIC_CAP};
pub use cover::{
    bipartition, covering_number, independent_covering_number, is_cover, is_independent, maximum_independent_set,
    Bipartition, Cover, COVER_CAP,
};
pub use matching::{matching_number, Matching};


use crate::graph::Graph;

/// `ν(g) = ν(g - v) = ⌊n/2⌋` for every vertex `v`.
///
/// Equivalent to: `n` odd and every `g - v` has a perfect matching.
pub fn is_factor_critical(g: &Graph) -> bool {
    let n = g.order();
    if n % 2 == 0 {
        return false;
    }
    (0..n).all(|v| matching_number(&g.delete_vertex(v)).size == n / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle};

    fn replay(g: &Graph) -> bool {
        let n = g.order();
        let half = n / 2;
        matching_number(g).size == half && (0..n).all(|v| matching_number(&g.delete_vertex(v)).size == half)
    }

    #[test]
    fn examples() {
        assert!(is_factor_critical(&cycle(5).unwrap()));
        assert!(is_factor_critical(&cycle(7).unwrap()));
        assert!(!is_factor_critical(&complete(4).unwrap()));
        assert!(is_factor_critical(&complete(1).unwrap()));
        assert!(!is_factor_critical(&Graph::empty(3).unwrap()));
    }

    #[test]
    fn agrees_with_definition_up_to_seven() {
        for n in 1..=7usize {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
            for code in 0..1u64 << pairs.len() {
                let edges: Vec<_> =
                    pairs.iter().enumerate().filter(|(i, _)| code >> i & 1 == 1).map(|(_, &e)| e).collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                assert_eq!(is_factor_critical(&g), replay(&g), "{g:?}");
            }
        }
    }
}
