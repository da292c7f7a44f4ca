use serde::Serialize;

use crate::graph::{VertexId, VertexSet};

/// Canonical order for vertex-set families: smallest member first, then
/// size, then lexicographic.
pub(crate) fn canonical_sort(sets: &mut Vec<VertexSet>) {
    sets.sort_by(|a, b| {
        a.first()
            .cmp(&b.first())
            .then(a.len().cmp(&b.len()))
            .then_with(|| a.as_slice().cmp(b.as_slice()))
    });
    sets.dedup();
}

/// Removes every set that is contained in another set of the family.
pub(crate) fn retain_maximal(sets: &mut Vec<VertexSet>) {
    sets.sort_by(|a, b| {
        b.len()
            .cmp(&a.len())
            .then_with(|| a.as_slice().cmp(b.as_slice()))
    });
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets.drain(..) {
        if !kept.iter().any(|k| s.is_subset(k)) {
            kept.push(s);
        }
    }
    *sets = kept;
}

/// Deterministically ordered list of vertex sets (blocks or components).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct BlockFamily {
    blocks: Vec<VertexSet>,
}

impl BlockFamily {
    pub fn new(blocks: impl IntoIterator<Item = VertexSet>) -> Self {
        let mut blocks: Vec<VertexSet> = blocks.into_iter().collect();
        canonical_sort(&mut blocks);
        Self { blocks }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, VertexSet> {
        self.blocks.iter()
    }

    pub fn contains(&self, set: &VertexSet) -> bool {
        self.blocks.contains(set)
    }

    /// Some member containing every vertex of `set`.
    pub fn superset_of(&self, set: &VertexSet) -> Option<&VertexSet> {
        self.blocks.iter().find(|b| set.is_subset(b))
    }

    /// Whether some member contains both vertices.
    pub fn together(&self, x: VertexId, y: VertexId) -> bool {
        self.blocks.iter().any(|b| b.contains(x) && b.contains(y))
    }

    /// Largest intersection between two distinct members (0 if fewer than two).
    pub fn max_pairwise_overlap(&self) -> usize {
        let mut best = 0;
        for (i, a) in self.blocks.iter().enumerate() {
            for b in &self.blocks[i + 1..] {
                best = best.max(a.intersection_len(b));
            }
        }
        best
    }

    pub fn map_vertices(&self, map: impl Fn(VertexId) -> VertexId) -> BlockFamily {
        BlockFamily::new(self.blocks.iter().map(|b| b.map(&map)))
    }

    pub fn to_vecs(&self) -> Vec<Vec<VertexId>> {
        self.blocks.iter().map(|b| b.as_slice().to_vec()).collect()
    }
}

impl FromIterator<VertexSet> for BlockFamily {
    fn from_iter<I: IntoIterator<Item = VertexSet>>(iter: I) -> Self {
        Self::new(iter)
    }
}

impl<'a> IntoIterator for &'a BlockFamily {
    type Item = &'a VertexSet;
    type IntoIter = std::slice::Iter<'a, VertexSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.blocks.iter()
    }
}
