use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// Largest order accepted by [`chromatic_number`].
pub const CHROMATIC_CAP: usize = 20;

/// Exact `χ(g)`: DSATUR colouring for an upper bound, a greedy clique for a
/// lower bound, then a backtracking `k`-colourability test for each `k` in between.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    if g.order() > CHROMATIC_CAP {
        return Err(Error::resource(
            "chromatic number",
            format!("order {} exceeds exact budget {CHROMATIC_CAP}", g.order()),
        ));
    }
    Ok(chromatic_number_unchecked(g))
}

fn chromatic_number_unchecked(g: &Graph) -> usize {
    if g.order() == 0 {
        return 0;
    }
    if g.is_edgeless() {
        return 1;
    }
    let upper = dsatur(g);
    let lower = greedy_clique(g);
    for k in lower..upper {
        if colourable(g, k) {
            return k;
        }
    }
    upper
}

/// Whether `g` has a proper colouring with at most `k` colours.
pub fn is_colourable(g: &Graph, k: usize) -> bool {
    if g.order() == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    colourable(g, k)
}

/// A proper colouring with colours `0..k`, if one exists.
pub fn colouring(g: &Graph, k: usize) -> Option<Vec<usize>> {
    if g.order() == 0 {
        return Some(vec![]);
    }
    if k == 0 {
        return None;
    }
    search(g, k)
}

fn dsatur(g: &Graph) -> usize {
    let n = g.order();
    let mut colour = vec![usize::MAX; n];
    let mut used = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colour[v] == usize::MAX)
            .max_by_key(|&v| (saturation(g, &colour, v), g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let taken = neighbour_colours(g, &colour, v);
        let c = (!taken).trailing_zeros() as usize;
        colour[v] = c;
        used = used.max(c + 1);
    }
    used
}

fn neighbour_colours(g: &Graph, colour: &[usize], v: usize) -> u64 {
    bits(g.neighbors(v))
        .filter(|&u| colour[u] != usize::MAX)
        .fold(0u64, |m, u| m | 1 << colour[u])
}

fn saturation(g: &Graph, colour: &[usize], v: usize) -> u32 {
    neighbour_colours(g, colour, v).count_ones()
}

fn greedy_clique(g: &Graph) -> usize {
    let mut best = 1;
    for start in 0..g.order() {
        let mut clique = 1u64 << start;
        let mut cand = g.neighbors(start);
        while cand != 0 {
            let v = bits(cand).max_by_key(|&v| (g.neighbors(v) & cand).count_ones()).unwrap();
            clique |= 1 << v;
            cand &= g.neighbors(v);
        }
        best = best.max(clique.count_ones() as usize);
    }
    best
}

fn colourable(g: &Graph, k: usize) -> bool {
    search(g, k).is_some()
}

fn search(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let n = g.order();
    let mut colour = vec![usize::MAX; n];
    fn go(g: &Graph, k: usize, colour: &mut Vec<usize>, done: usize, max_used: usize) -> bool {
        let n = g.order();
        if done == n {
            return true;
        }
        let v = (0..n)
            .filter(|&v| colour[v] == usize::MAX)
            .max_by_key(|&v| (saturation(g, colour, v), g.degree(v)))
            .unwrap();
        let taken = neighbour_colours(g, colour, v);
        // a fresh colour is interchangeable with any other fresh colour
        for c in 0..k.min(max_used + 1) {
            if taken >> c & 1 == 0 {
                colour[v] = c;
                if go(g, k, colour, done + 1, max_used.max(c + 1)) {
                    return true;
                }
            }
        }
        colour[v] = usize::MAX;
        false
    }
    go(g, k, &mut colour, 0, 0).then_some(colour)
}
