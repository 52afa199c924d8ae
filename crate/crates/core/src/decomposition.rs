//! Decomposition families `M(F)` and the parameters `q`, `S`, `B`, `k` derived from them.

use serde::{Deserialize, Serialize};

use crate::constructions::{edge_blowup, h_family_member, split_family, turan_graph, HFamilySpec};
use crate::error::{Error, Result};
use crate::formulas::{binom2, f_chvatal_hanson, h_edges, h_prime_edges};
use crate::graph::canon::is_isomorphic;
use crate::graph::{bits, compose, contains_subgraph, ComposeMode, Embedding, Graph, GraphFamily};
use crate::invariants::{
    bipartition, chromatic_number, colouring, independent_covering_number, is_colourable, is_cover, is_independent,
};
use crate::oracle;

/// Largest `|V(F)|` accepted by [`decomposition_family_direct`].
pub const DIRECT_CAP: usize = 12;

/// Largest member order for which [`derive_params`] enumerates coverings.
pub const COVERING_ENUMERATION_CAP: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    DefinitionSearch,
    SplitShortcut,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionFamily {
    pub members: GraphFamily,
    pub provenance: Provenance,
    pub p: usize,
    /// The blow-up base `G`, when the family is `M(G^{p+1})`.
    pub base: Option<Graph>,
}

/// `M(G^{p+1}) = H(G)` for `2 <= χ(G) <= p - 1`, with isolated vertices removed.
pub fn decomposition_family_blowup(g: &Graph, p: usize) -> Result<DecompositionFamily> {
    let base = g.without_isolated();
    let chi = chromatic_number(&base)?;
    if chi < 2 || chi + 1 > p {
        return Err(Error::Parameter(format!(
            "the split shortcut needs 2 <= χ(G) <= p-1, got χ = {chi}, p = {p}"
        )));
    }
    Ok(DecompositionFamily {
        members: split_family(&base)?.without_isolated(),
        provenance: Provenance::SplitShortcut,
        p,
        base: Some(base),
    })
}

/// `(M ∪ E_t) + T_{p-1}((p-1)t)`: `M` first, then `t` isolated vertices, then the Turán part.
pub fn decomposition_host(m: &Graph, p: usize, t: usize) -> Result<Graph> {
    let class = compose(m, &Graph::empty(t)?, ComposeMode::DisjointUnion)?;
    compose(&class, &turan_graph((p - 1) * t, p - 1)?, ComposeMode::Join)
}

/// Whether `f ⊆ (m ∪ E_t) + T_{p-1}((p-1)t)`, by a literal subgraph search.
pub fn fits_host(f: &Graph, m: &Graph, p: usize, t: usize) -> Result<bool> {
    Ok(contains_subgraph(&decomposition_host(m, p, t)?, f).is_some())
}

/// Place `f` in `(m ∪ E_t) + T_{p-1}((p-1)t)`: the non-isolated part of
/// `F[v0]` (isomorphic to `m` as `c`) onto `m`, the isolated part of `F[v0]`
/// onto `E_t`, and the colour classes of `F - v0` onto the Turán classes.
fn host_embedding(f: &Graph, v0: u64, c: &Graph, m: &Graph, p: usize, t: usize) -> Option<Embedding> {
    let iso = contains_subgraph(m, c)?;
    let inner = f.induced(v0);
    let rest = f.vertex_mask() & !v0;
    let colours = colouring(&f.induced(rest), p - 1)?;
    let mut map = vec![usize::MAX; f.order()];
    let (mut core, mut spare) = (0, 0);
    for (i, v) in bits(v0).enumerate() {
        if inner.degree(i) > 0 {
            map[v] = iso.map[core];
            core += 1;
        } else {
            map[v] = m.order() + spare;
            spare += 1;
        }
    }
    let mut filled = vec![0; p - 1];
    for (i, v) in bits(rest).enumerate() {
        let k = colours[i];
        map[v] = m.order() + t + k * t + filled[k];
        filled[k] += 1;
    }
    Some(Embedding { map })
}

/// `M({F})` from the definition, for `p(F) = χ(F) - 1 = p`.
///
/// With `t >= |V(F)|` the class sizes of the host never bind, so `F` fits over
/// `M` exactly when some `V0 ⊆ V(F)` has `χ(F - V0) <= p - 1` and `F[V0]`
/// (isolated vertices dropped) is a subgraph of `M`. The minimal such `M` are
/// therefore the minimal graphs among these `F[V0]`. Each member is finally
/// confirmed by replaying an explicit embedding of `F` into the assembled host.
pub fn decomposition_family_direct(f: &Graph, p: usize, t_max: Option<usize>) -> Result<DecompositionFamily> {
    let n = f.order();
    if n > DIRECT_CAP {
        return Err(Error::resource(
            "decomposition family",
            format!("|V(F)| = {n} exceeds cap {DIRECT_CAP}"),
        ));
    }
    let t = t_max.unwrap_or(n);
    if t < n {
        return Err(Error::Parameter(format!("t_max = {t} below |V(F)| = {n} is not supported")));
    }
    if p < 2 {
        return Err(Error::param("decomposition family needs p >= 2"));
    }
    let chi = chromatic_number(f)?;
    if chi != p + 1 {
        return Err(Error::Parameter(format!("p(F) = χ(F) - 1 = {} differs from p = {p}", chi - 1)));
    }
    let all = f.vertex_mask();
    let witnesses: Vec<(u64, Graph)> = (0..=all)
        .filter(|&v0| is_colourable(&f.induced(all & !v0), p - 1))
        .map(|v0| (v0, f.induced(v0).without_isolated()))
        .collect();
    let candidates: GraphFamily = witnesses.iter().map(|(_, g)| g).collect();
    let members = candidates.minimal();
    for m in members.iter() {
        let (v0, c) = witnesses
            .iter()
            .find(|(_, c)| c.size() == m.size() && is_isomorphic(c, m))
            .expect("members come from candidates");
        let host = decomposition_host(m, p, t)?;
        let e = host_embedding(f, *v0, c, m, p, t);
        if !e.is_some_and(|e| e.verify(&host, f)) {
            return Err(Error::Invariant(format!("candidate {m} does not fit its host")));
        }
    }
    Ok(DecompositionFamily {
        members,
        provenance: Provenance::DefinitionSearch,
        p,
        base: None,
    })
}

/// `B(M)`: either explicit members or the sentinel `{K_q}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoveringFamily {
    Members(GraphFamily),
    Sentinel { q: usize },
}

impl CoveringFamily {
    pub fn is_sentinel(&self) -> bool {
        matches!(self, CoveringFamily::Sentinel { .. })
    }

    /// The family as graphs; the sentinel becomes `{K_q}`.
    pub fn materialize(&self) -> Result<GraphFamily> {
        match self {
            CoveringFamily::Members(f) => Ok(f.clone()),
            CoveringFamily::Sentinel { q } => Ok([crate::graph::complete(*q)?].into_iter().collect()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SWitness {
    pub member: Graph,
    /// Vertex mask of an independent covering of `member` with `q` vertices.
    pub cover: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamRecord {
    pub p: usize,
    pub q: usize,
    pub s_witnesses: Vec<SWitness>,
    /// Minimal members of the covering family (members containing another
    /// member are dropped; they do not change `ex(q-1, B)`).
    pub b: CoveringFamily,
    pub k: usize,
}

fn subsets_of_size(universe: u64, size: usize, mut visit: impl FnMut(u64)) {
    let verts: Vec<usize> = bits(universe).collect();
    fn go(verts: &[usize], size: usize, acc: u64, visit: &mut dyn FnMut(u64)) {
        if size == 0 {
            visit(acc);
            return;
        }
        if verts.len() < size {
            return;
        }
        go(&verts[1..], size - 1, acc | 1 << verts[0], visit);
        go(&verts[1..], size, acc, visit);
    }
    go(&verts, size, 0, &mut visit);
}

/// `q`, the `S`-witnesses, `B` and `k` of a decomposition family.
pub fn derive_params(m: &DecompositionFamily) -> Result<ParamRecord> {
    if let Some(big) = m.members.iter().find(|g| g.order() > COVERING_ENUMERATION_CAP) {
        return Err(Error::resource(
            "covering enumeration",
            format!("member of order {} exceeds cap {COVERING_ENUMERATION_CAP}", big.order()),
        ));
    }
    let q = m
        .members
        .iter()
        .filter_map(|g| independent_covering_number(g).map(|c| c.size))
        .min()
        .ok_or_else(|| Error::Invariant("decomposition family has no bipartite member".into()))?;

    let mut s_witnesses = Vec::new();
    for g in m.members.iter().filter(|g| bipartition(g).is_some()) {
        subsets_of_size(g.vertex_mask(), q, |s| {
            if is_independent(g, s) && is_cover(g, s) {
                s_witnesses.push(SWitness {
                    member: g.clone(),
                    cover: s,
                });
            }
        });
    }
    let k = s_witnesses
        .iter()
        .flat_map(|w| bits(w.cover).map(|x| w.member.degree(x)))
        .min()
        .ok_or_else(|| Error::Invariant("no independent covering of order q".into()))?;

    let mut coverings = GraphFamily::new();
    for g in m.members.iter() {
        for size in 1..q {
            subsets_of_size(g.vertex_mask(), size, |c| {
                if is_cover(g, c) {
                    coverings.insert(&g.induced(c).without_isolated());
                }
            });
        }
    }
    if coverings.iter().any(|g| g.order() == 0) {
        return Err(Error::Invariant("an edgeless covering subgraph below order q".into()));
    }
    let b = if coverings.is_empty() {
        CoveringFamily::Sentinel { q }
    } else {
        CoveringFamily::Members(coverings.minimal())
    };
    Ok(ParamRecord {
        p: m.p,
        q,
        s_witnesses,
        b,
        k,
    })
}

/// `ex(q-1, B)`: `C(q-1, 2)` for the sentinel, otherwise from the exact oracle.
pub fn ex_below_q(params: &ParamRecord) -> Result<u64> {
    match &params.b {
        CoveringFamily::Sentinel { q } => Ok(binom2(*q as u64 - 1)),
        CoveringFamily::Members(b) => Ok(oracle::exact_ex(params.q - 1, b)?.value),
    }
}

/// `h'(n,1,q) + ex(q-1,B) <= ex(n, M) <= h(n,1,q) + f(k-1,k-1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExBounds {
    pub q: usize,
    pub k: usize,
    pub ex_below_q: u64,
    /// The lower bound is exact: the base is non-bipartite or has `q < |A|`.
    pub lower_is_exact: bool,
}

impl ExBounds {
    pub fn lower(&self, n: usize) -> u64 {
        h_prime_edges(n, 1, self.q) + self.ex_below_q
    }

    pub fn upper(&self, n: usize) -> u64 {
        h_edges(n, 1, self.q) + f_chvatal_hanson(self.k - 1, self.k - 1)
    }
}

pub fn decomposition_ex_bounds(m: &DecompositionFamily) -> Result<ExBounds> {
    let params = derive_params(m)?;
    let lower_is_exact = match &m.base {
        Some(g) => match bipartition(g) {
            None => true,
            Some(b) => params.q < b.side_a.count_ones() as usize,
        },
        None => false,
    };
    Ok(ExBounds {
        q: params.q,
        k: params.k,
        ex_below_q: ex_below_q(&params)?,
        lower_is_exact,
    })
}

/// The decomposition family of `G^{p+1}`: the split shortcut when
/// `χ(G) <= p - 1`, otherwise the definition search on the blow-up itself.
pub fn blowup_family(g: &Graph, p: usize) -> Result<DecompositionFamily> {
    let base = g.without_isolated();
    if chromatic_number(&base)? < p {
        return decomposition_family_blowup(&base, p);
    }
    let mut m = decomposition_family_direct(&edge_blowup(&base, p)?, p, None)?;
    m.base = Some(base);
    Ok(m)
}

/// The lower-bound graph for `G^{p+1}` on `n` vertices.
///
/// `H'(n,p,q)` with a graph on the `q - 1` apex vertices and one graph inside the
/// largest Turán class. When `G` is bipartite with `q = |A|` these are `K_{q-1}`
/// and an `E_{k-1,k-1}` witness; otherwise a member of `EX(q-1, B)` and nothing.
pub fn blowup_construction(g: &Graph, p: usize, n: usize) -> Result<Graph> {
    let m = blowup_family(g, p)?;
    let params = derive_params(&m)?;
    let q = params.q;
    let full_apex = match bipartition(&g.without_isolated()) {
        Some(b) => q == b.side_a.count_ones() as usize,
        None => false,
    };
    let (apex_graph, k) = if full_apex || params.b.is_sentinel() {
        (crate::graph::complete(q - 1)?, if full_apex { params.k } else { 1 })
    } else {
        let b = params.b.materialize()?;
        let r = oracle::exact_ex(q - 1, &b)?;
        (r.witnesses[0].clone(), 1)
    };
    h_family_member(&HFamilySpec {
        n,
        p,
        s: q,
        nu: k - 1,
        delta: k - 1,
        apex_graph,
        class_graph: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::edge_blowup;
    use crate::graph::{complete, cycle, matching, notation, path, star};

    fn fam(spec: &[&str]) -> GraphFamily {
        spec.iter().map(|s| notation::parse(s).unwrap()).collect()
    }

    #[test]
    fn shortcut_examples() {
        let m = decomposition_family_blowup(&matching(4).unwrap(), 3).unwrap();
        assert_eq!(m.members, fam(&["M4"]));
        let m = decomposition_family_blowup(&star(4).unwrap(), 3).unwrap();
        assert_eq!(m.members, fam(&["M6", "S4"]));
        let m = decomposition_family_blowup(&cycle(4).unwrap(), 3).unwrap();
        assert_eq!(m.members, fam(&["C4", "P5", "P4 | P2", "P3 | P3", "P3 | M4", "M8"]));
        assert!(decomposition_family_blowup(&complete(3).unwrap(), 3).is_err());
        assert!(decomposition_family_blowup(&Graph::empty(3).unwrap(), 3).is_err());
    }

    #[test]
    fn direct_examples() {
        let two_triangles = notation::parse("2*K3").unwrap();
        let m = decomposition_family_direct(&two_triangles, 2, None).unwrap();
        assert_eq!(m.members, fam(&["M4"]));
        let bowtie = notation::parse("bowtie").unwrap();
        let m = decomposition_family_direct(&bowtie, 2, None).unwrap();
        assert_eq!(m.members, fam(&["M4", "S3"]));
        let m = decomposition_family_direct(&complete(3).unwrap(), 2, None).unwrap();
        assert_eq!(m.members, fam(&["K2"]));
        assert!(decomposition_family_direct(&complete(3).unwrap(), 3, None).is_err());
        assert!(decomposition_family_direct(&complete(3).unwrap(), 2, Some(2)).is_err());
    }

    #[test]
    fn direct_members_are_minimal_by_edge_deletion() {
        for (base, p) in [(matching(4).unwrap(), 2), (path(3).unwrap(), 2), (star(3).unwrap(), 3)] {
            let f = edge_blowup(&base, p).unwrap();
            let m = decomposition_family_direct(&f, p, None).unwrap();
            let t = f.order();
            for member in m.members.iter() {
                assert!(fits_host(&f, member, p, t).unwrap());
                for (u, v) in member.edges() {
                    let mut smaller = member.clone();
                    smaller.remove_edge(u, v);
                    assert!(!fits_host(&f, &smaller, p, t).unwrap(), "{member} minus {u}-{v} still works");
                }
            }
        }
    }

    fn params_of(g: &Graph, p: usize) -> ParamRecord {
        derive_params(&decomposition_family_blowup(g, p).unwrap()).unwrap()
    }

    #[test]
    fn params_examples() {
        let k4 = params_of(&complete(4).unwrap(), 5);
        assert_eq!((k4.q, k4.k), (4, 1));
        assert_eq!(k4.b.materialize().unwrap(), fam(&["K2"]));
        let p7 = params_of(&path(7).unwrap(), 3);
        assert_eq!((p7.q, p7.k), (3, 2));
        let c6 = params_of(&cycle(6).unwrap(), 3);
        assert_eq!((c6.q, c6.k), (3, 2));
        assert_eq!(c6.b, CoveringFamily::Sentinel { q: 3 });
        let s4 = params_of(&star(4).unwrap(), 3);
        assert_eq!((s4.q, s4.k), (1, 3));
        for w in k4.s_witnesses.iter().chain(&p7.s_witnesses) {
            assert!(is_independent(&w.member, w.cover) && is_cover(&w.member, w.cover));
        }
    }

    #[test]
    fn params_ignore_labelling() {
        let g = path(6).unwrap();
        let a = params_of(&g, 3);
        let b = params_of(&g.permuted(&[5, 3, 1, 0, 2, 4]), 3);
        assert_eq!((a.q, a.k, &a.b), (b.q, b.k, &b.b));
        assert_eq!(a.s_witnesses.len(), b.s_witnesses.len());
    }

    #[test]
    fn bounds_examples() {
        let m4 = decomposition_ex_bounds(&decomposition_family_blowup(&matching(4).unwrap(), 3).unwrap()).unwrap();
        for n in 4..12 {
            assert_eq!(m4.lower(n), (n - 1) as u64);
            assert_eq!(m4.upper(n), (n - 1) as u64);
        }
        let s4 = decomposition_ex_bounds(&decomposition_family_blowup(&star(4).unwrap(), 3).unwrap()).unwrap();
        assert_eq!(s4.upper(20), 6);
        let k4 = decomposition_ex_bounds(&decomposition_family_blowup(&complete(4).unwrap(), 5).unwrap()).unwrap();
        assert!(k4.lower_is_exact);
        assert_eq!(k4.ex_below_q, 0);
        assert_eq!(k4.lower(20), 3 * 17);
    }
}
