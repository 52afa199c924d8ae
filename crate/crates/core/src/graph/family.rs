use std::collections::BTreeMap;

use super::canon::{canonize, CanonicalLabel};
use super::subgraph::contains_subgraph;
use super::Graph;

/// A finite set of graphs, deduplicated up to isomorphism.
///
/// Members are stored in canonical labelling and iterate in canonical-label
/// order, so two families with the same members compare and serialise equally.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GraphFamily {
    members: BTreeMap<CanonicalLabel, Graph>,
}

impl GraphFamily {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns `false` if an isomorphic member was already present.
    pub fn insert(&mut self, g: &Graph) -> bool {
        let c = canonize(g);
        let label = c.label();
        if self.members.contains_key(&label) {
            return false;
        }
        self.members.insert(label, c.graph);
        true
    }

    pub fn contains(&self, g: &Graph) -> bool {
        self.members.contains_key(&canonize(g).label())
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Graph> {
        self.members.values()
    }

    pub fn labels(&self) -> impl Iterator<Item = &CanonicalLabel> {
        self.members.keys()
    }

    /// Stable identifier of the family: hex canonical labels joined by `.`.
    pub fn key(&self) -> String {
        self.labels().map(|l| l.to_hex()).collect::<Vec<_>>().join(".")
    }

    /// The same family with isolated vertices removed from every member.
    pub fn without_isolated(&self) -> GraphFamily {
        self.iter().map(|g| g.without_isolated()).collect()
    }

    /// Members that contain no other member as a proper subgraph.
    pub fn minimal(&self) -> GraphFamily {
        let all: Vec<&Graph> = self.iter().collect();
        all.iter()
            .copied()
            .filter(|&m| {
                !all.iter().any(|&other| {
                    other != m
                        && other.size() <= m.size()
                        && other.order() <= m.order()
                        && contains_subgraph(m, other).is_some()
                })
            })
            .collect()
    }

    /// True if `g` contains some member.
    pub fn embeds_into(&self, g: &Graph) -> bool {
        self.iter().any(|m| contains_subgraph(g, m).is_some())
    }
}

impl<'a> FromIterator<&'a Graph> for GraphFamily {
    fn from_iter<I: IntoIterator<Item = &'a Graph>>(iter: I) -> Self {
        let mut f = GraphFamily::new();
        for g in iter {
            f.insert(g);
        }
        f
    }
}

impl FromIterator<Graph> for GraphFamily {
    fn from_iter<I: IntoIterator<Item = Graph>>(iter: I) -> Self {
        let mut f = GraphFamily::new();
        for g in iter {
            f.insert(&g);
        }
        f
    }
}

impl serde::Serialize for GraphFamily {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> serde::Deserialize<'de> for GraphFamily {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(Vec::<Graph>::deserialize(d)?.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path};

    #[test]
    fn dedup_up_to_isomorphism() {
        let a = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edges(3, &[(0, 2), (2, 1)]).unwrap();
        let f: GraphFamily = [a, b, complete(3).unwrap()].into_iter().collect();
        assert_eq!(f.len(), 2);
    }

    #[test]
    fn minimal_drops_supergraphs() {
        let f: GraphFamily = [path(3).unwrap(), path(4).unwrap(), complete(3).unwrap()]
            .into_iter()
            .collect();
        let m = f.minimal();
        assert_eq!(m.len(), 1);
        assert!(m.contains(&path(3).unwrap()));
    }
}
