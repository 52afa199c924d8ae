//! Brute-force ground truth: exact `ex(n, F)`, exact `g(n, H)`, freeness certificates.

mod cache;
mod nim;
pub mod search;

pub use cache::{parse_line, Cache, CacheEntry, CachedOracle, CACHE_ENV};
pub use nim::{exact_nim_g, nim_edges, NimResult, NIM_ORDER_CAP, NIM_PATTERN_CAP};

use serde::{Deserialize, Serialize};

use crate::constructions::split_family;
use crate::error::{Error, Result};
use crate::formulas::{conjectured_kst_family_ex, h_prime_edges};
use crate::graph::subgraph::Matcher;
use crate::graph::{complete_bipartite, Embedding, Graph, GraphFamily};
use crate::invariants::matching_number;
use search::{generate, PACKED_CAP};

/// Default feasibility guard for [`exact_ex`].
pub const EX_ORDER_GUARD: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleResult {
    pub n: usize,
    pub family_key: String,
    pub value: u64,
    /// All extremal graphs up to isomorphism, in canonical labelling.
    pub witnesses: Vec<Graph>,
    /// Number of distinct graphs visited (all levels).
    pub explored: u64,
}

fn rough_graph_count(n: usize) -> f64 {
    let pairs = (n * n.saturating_sub(1) / 2) as f64;
    let log_fact: f64 = (1..=n).map(|k| (k as f64).log2()).sum();
    (pairs - log_fact).exp2()
}

fn order_guard(what: &str, n: usize, guard: usize) -> Result<()> {
    if n > guard.min(PACKED_CAP) {
        return Err(Error::resource(
            what,
            format!(
                "n = {n} exceeds guard {}; about {:.1e} graphs on n vertices up to isomorphism",
                guard.min(PACKED_CAP),
                rough_graph_count(n)
            ),
        ));
    }
    Ok(())
}

/// Matchers for the members that can occur on `n` vertices.
fn matchers(family: &GraphFamily, n: usize) -> Result<Vec<Matcher>> {
    if let Some(g) = family.iter().find(|g| g.size() == 0) {
        return Err(Error::Parameter(format!("family member {g} has no edges")));
    }
    Ok(family.iter().filter(|g| g.order() <= n).map(Matcher::new).collect())
}

/// `ex(n, family)` with all extremal graphs, for `n <= EX_ORDER_GUARD`.
pub fn exact_ex(n: usize, family: &GraphFamily) -> Result<OracleResult> {
    exact_ex_guarded(n, family, EX_ORDER_GUARD)
}

/// [`exact_ex`] with an explicit order guard (at most [`PACKED_CAP`]).
pub fn exact_ex_guarded(n: usize, family: &GraphFamily, guard: usize) -> Result<OracleResult> {
    order_guard("exact ex", n, guard)?;
    let ms = matchers(family, n)?;
    let levels = generate(n, |g, u, v| ms.iter().all(|m| m.find_through_edge(g, u, v).is_none()));
    Ok(OracleResult {
        n,
        family_key: family.key(),
        value: levels.max_edges() as u64,
        explored: levels.total(),
        witnesses: levels.top,
    })
}

/// Maximum edges over graphs on `n` vertices with `ν <= nu` and `Δ <= delta`.
pub fn exact_matching_degree_max(n: usize, nu: usize, delta: usize, guard: usize) -> Result<OracleResult> {
    order_guard("matching/degree search", n, guard)?;
    let levels = generate(n, |g, u, v| {
        g.degree(u) <= delta && g.degree(v) <= delta && matching_number(g).size <= nu
    });
    Ok(OracleResult {
        n,
        family_key: format!("nu<={nu},delta<={delta}"),
        value: levels.max_edges() as u64,
        explored: levels.total(),
        witnesses: levels.top,
    })
}

/// Counts of all graphs on `n` vertices up to isomorphism, by number of edges.
pub fn graph_counts(n: usize) -> Result<Vec<u64>> {
    order_guard("graph generation", n, EX_ORDER_GUARD)?;
    Ok(generate(n, |_, _, _| true).counts)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreenessCertificate {
    pub free: bool,
    /// On failure: the member found and where it sits in the host.
    pub counterexample: Option<(Graph, Embedding)>,
}

/// Whether no member of `family` is a subgraph of `g`.
pub fn verify_free(g: &Graph, family: &GraphFamily) -> FreenessCertificate {
    for m in family.iter() {
        if let Some(e) = crate::graph::contains_subgraph(g, m) {
            return FreenessCertificate {
                free: false,
                counterexample: Some((m.clone(), e)),
            };
        }
    }
    FreenessCertificate {
        free: true,
        counterexample: None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilizationRow {
    pub n: usize,
    pub ex: u64,
    pub h_prime: u64,
    /// `ex(n, M(K_{s,t}^{p+1})) - h'(n,1,s)`.
    pub difference: i64,
    /// The conjectured value of the same difference, where the conjecture applies.
    pub conjectured: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stabilization {
    pub s: usize,
    pub t: usize,
    pub p: usize,
    pub rows: Vec<StabilizationRow>,
    /// The last two differences agree.
    pub stabilized: bool,
}

/// `M(K_{s,t}^{p+1})` as the split family of `K_{s,t}` (requires `p >= 3`).
pub fn kst_decomposition_family(s: usize, t: usize, p: usize) -> Result<GraphFamily> {
    if p < 3 {
        return Err(Error::param("M(K_{s,t}^{p+1}) = H(K_{s,t}) needs p >= 3"));
    }
    Ok(split_family(&complete_bipartite(s, t)?)?.without_isolated())
}

/// The sequence `ex(n, M(K_{s,t}^{p+1})) - h'(n,1,s)` over `ns`.
pub fn stabilize_p_st(s: usize, t: usize, p: usize, ns: impl IntoIterator<Item = usize>) -> Result<Stabilization> {
    stabilize_with(s, t, p, ns, exact_ex)
}

/// [`stabilize_p_st`] with the `ex` oracle supplied, e.g. a cached one.
pub fn stabilize_with(
    s: usize,
    t: usize,
    p: usize,
    ns: impl IntoIterator<Item = usize>,
    mut ex: impl FnMut(usize, &GraphFamily) -> Result<OracleResult>,
) -> Result<Stabilization> {
    if s == 0 || s > t {
        return Err(Error::Parameter(format!("needs 1 <= s <= t, got s={s}, t={t}")));
    }
    let family = kst_decomposition_family(s, t, p)?;
    let mut rows = Vec::new();
    for n in ns {
        if n + 1 < s {
            return Err(Error::Parameter(format!("n = {n} too small for s = {s}")));
        }
        let value = ex(n, &family)?.value;
        let h = h_prime_edges(n, 1, s);
        let conjectured = conjectured_kst_family_ex(n, s, t).ok().map(|c| c as i64 - h as i64);
        rows.push(StabilizationRow {
            n,
            ex: value,
            h_prime: h,
            difference: value as i64 - h as i64,
            conjectured,
        });
    }
    let stabilized = rows.len() >= 2 && rows[rows.len() - 1].difference == rows[rows.len() - 2].difference;
    Ok(Stabilization { s, t, p, rows, stabilized })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{e_nu_delta_witness, h_construction, h_odd_gadget, k_st_split, Apex};
    use crate::formulas::{f_chvatal_hanson, h_edges, t_p_edges};
    use crate::graph::{complete, notation};

    fn fam(spec: &[&str]) -> GraphFamily {
        spec.iter().map(|s| notation::parse(s).unwrap()).collect()
    }

    fn self_certify(r: &OracleResult, family: &GraphFamily) {
        assert!(!r.witnesses.is_empty());
        for w in &r.witnesses {
            assert_eq!(w.order(), r.n);
            assert_eq!(w.size() as u64, r.value);
            assert!(verify_free(w, family).free);
            // adding any edge creates a member
            for (u, v) in w.non_edges() {
                let mut g = w.clone();
                g.add_edge(u, v);
                assert!(!verify_free(&g, family).free);
            }
        }
    }

    #[test]
    fn triangle_free() {
        let f = fam(&["K3"]);
        let r = exact_ex(5, &f).unwrap();
        assert_eq!(r.value, 6);
        assert_eq!(r.witnesses.len(), 1);
        assert!(crate::graph::canon::is_isomorphic(&r.witnesses[0], &crate::constructions::turan_graph(5, 2).unwrap()));
        self_certify(&r, &f);
        for n in 1..=8 {
            assert_eq!(exact_ex(n, &f).unwrap().value, t_p_edges(n, 2));
        }
    }

    #[test]
    fn forbidding_an_edge() {
        let r = exact_ex(3, &fam(&["K2"])).unwrap();
        assert_eq!(r.value, 0);
        assert_eq!(r.witnesses, vec![Graph::empty(3).unwrap()]);
    }

    #[test]
    fn guards() {
        assert!(matches!(exact_ex(11, &fam(&["K3"])), Err(Error::Resource { .. })));
        assert!(matches!(exact_ex(5, &fam(&["E2"])), Err(Error::Parameter(_))));
        // members larger than n are harmless
        assert_eq!(exact_ex(4, &fam(&["K5"])).unwrap().value, 6);
    }

    #[test]
    fn monotone_in_n_and_family() {
        let small = fam(&["C4"]);
        let big = fam(&["C4", "K3"]);
        let mut prev = 0;
        for n in 2..=8 {
            let a = exact_ex(n, &small).unwrap().value;
            let b = exact_ex(n, &big).unwrap().value;
            assert!(a >= prev && b <= a);
            prev = a;
        }
        // known values of ex(n, C4)
        assert_eq!(exact_ex(8, &small).unwrap().value, 11);
    }

    #[test]
    fn matching_family_small() {
        let f = fam(&["2*K3"]);
        let r = exact_ex(7, &f).unwrap();
        self_certify(&r, &f);
        assert!(r.value >= h_edges(7, 2, 2));
    }

    #[test]
    fn verify_free_examples() {
        let two_k3 = fam(&["2*K3"]);
        assert!(verify_free(&h_construction(20, 2, 2, Apex::Clique).unwrap(), &two_k3).free);
        let c = verify_free(&complete(6).unwrap(), &two_k3);
        assert!(!c.free);
        let (m, e) = c.counterexample.unwrap();
        assert!(e.verify(&complete(6).unwrap(), &m));
        // H_7 against K(4) = {K_{a,b}(0,c) : a+b = 5, a >= 3 or c = 0}
        let mut k4 = GraphFamily::new();
        for a in 1..5 {
            let b = 5 - a;
            for c in 0..=b {
                if a >= 3 || c == 0 {
                    k4.insert(&k_st_split(a, b, 0, c).unwrap());
                }
            }
        }
        assert!(verify_free(&h_odd_gadget(4).unwrap(), &k4).free);
    }

    #[test]
    fn chvatal_hanson_witnesses_are_optimal_on_their_support() {
        for nu in 1..=3 {
            for delta in 1..=3 {
                let w = e_nu_delta_witness(nu, delta).unwrap();
                let r = exact_matching_degree_max(w.order(), nu, delta, 12).unwrap();
                assert_eq!(r.value, f_chvatal_hanson(nu, delta), "({nu},{delta})");
                assert_eq!(w.size() as u64, r.value);
            }
        }
    }

    #[test]
    fn stabilization_small() {
        let st = stabilize_p_st(1, 2, 3, 4..=7).unwrap();
        assert!(st.stabilized);
        assert!(st.rows.iter().all(|r| r.difference == f_chvatal_hanson(1, 1) as i64));
        assert!(stabilize_p_st(1, 2, 2, 4..=5).is_err());
    }
}
