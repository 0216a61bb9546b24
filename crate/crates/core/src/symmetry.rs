//! Rotation groups acting on edge indices, and their compiled lookup tables.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::perm::{EdgePermutation, Permutation, VertexPermutation};
use crate::solids::{Solid, MAX_EDGES};

/// Closure aborts past this many elements.
pub const CLOSURE_LIMIT: usize = 1000;

/// Edges per lookup-table run.
pub const RUN_WIDTH: usize = 8;
const MAX_RUNS: usize = MAX_EDGES.div_ceil(RUN_WIDTH);

/// Translates a vertex permutation into the permutation it induces on edge
/// indices: edge `(v1, v2)` goes to the index of the sorted pair `(g v1, g v2)`.
pub fn vertex_to_edge(solid: &Solid, g: &VertexPermutation) -> Result<EdgePermutation> {
    let image = solid
        .edges()
        .iter()
        .map(|&(lo, hi)| solid.edge_index(g.apply(lo), g.apply(hi)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Permutation::from_image(image).expect("edge image of a bijection is a bijection"))
}

/// Breadth-first closure of `generators` under composition. The identity
/// comes first; the rest follow in discovery order.
pub fn closure(generators: &[Permutation], degree: usize) -> Result<Vec<Permutation>> {
    let identity = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::from([identity.clone()]);
    let mut elements = vec![identity.clone()];
    let mut queue = VecDeque::from([identity]);
    while let Some(x) = queue.pop_front() {
        for s in generators {
            let y = s.compose(&x);
            if seen.insert(y.clone()) {
                if elements.len() >= CLOSURE_LIMIT {
                    return Err(Error::ClosureTooLarge(CLOSURE_LIMIT));
                }
                elements.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(elements)
}

/// A finite group of edge permutations with each element's lookup table.
#[derive(Clone, Debug)]
pub struct RotationGroup {
    elements: Vec<EdgePermutation>,
    tables: Vec<PermTable>,
    edge_count: usize,
}

impl RotationGroup {
    /// Closes the given edge permutations into a group.
    pub fn from_generators(generators: &[EdgePermutation], edge_count: usize) -> Result<Self> {
        assert!(
            edge_count <= MAX_EDGES,
            "edge count {edge_count} exceeds {MAX_EDGES}"
        );
        let elements = closure(generators, edge_count)?;
        let tables = elements
            .iter()
            .map(|g| PermTable::compile(g, edge_count))
            .collect();
        Ok(RotationGroup {
            elements,
            tables,
            edge_count,
        })
    }

    /// Wraps an explicit element list without checking closure. Element 0
    /// must be the identity.
    pub fn from_elements(elements: Vec<EdgePermutation>, edge_count: usize) -> Self {
        assert!(
            edge_count <= MAX_EDGES,
            "edge count {edge_count} exceeds {MAX_EDGES}"
        );
        assert!(
            elements.first().is_some_and(Permutation::is_identity),
            "first element must be the identity"
        );
        let tables = elements
            .iter()
            .map(|g| PermTable::compile(g, edge_count))
            .collect();
        RotationGroup {
            elements,
            tables,
            edge_count,
        }
    }

    /// The trivial group on `edge_count` edges.
    pub fn trivial(edge_count: usize) -> Self {
        RotationGroup::from_generators(&[], edge_count).expect("trivial group closes")
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Elements as edge permutations; element 0 is the identity.
    pub fn elements(&self) -> &[EdgePermutation] {
        &self.elements
    }

    /// Compiled tables, index-aligned with [`elements`](Self::elements).
    pub fn tables(&self) -> &[PermTable] {
        &self.tables
    }

    /// Tables of every element except the identity.
    pub fn non_identity_tables(&self) -> &[PermTable] {
        &self.tables[1..]
    }
}

/// Closes the solid's generators, acting on edges.
pub fn close_group(solid: &Solid) -> Result<RotationGroup> {
    let generators = solid
        .generators()
        .iter()
        .map(|g| vertex_to_edge(solid, g))
        .collect::<Result<Vec<_>>>()?;
    RotationGroup::from_generators(&generators, solid.edge_count())
}

/// An edge permutation compiled into per-run lookup tables.
///
/// Edges are split into runs of eight. For run `r` and an 8-bit value `i`
/// describing which edges of that run are present, `chunks[r][i]` holds the
/// 32-bit word of their destination bits. Since the permutation is a
/// bijection the words for different runs are disjoint and combine by OR.
#[derive(Clone)]
pub struct PermTable {
    runs: usize,
    edge_count: usize,
    chunks: [[u32; 256]; MAX_RUNS],
}

impl std::fmt::Debug for PermTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PermTable")
            .field("runs", &self.runs)
            .field("edge_count", &self.edge_count)
            .finish_non_exhaustive()
    }
}

impl PermTable {
    pub fn compile(perm: &EdgePermutation, edge_count: usize) -> Self {
        assert_eq!(perm.len(), edge_count, "permutation degree mismatch");
        assert!(
            edge_count <= MAX_EDGES,
            "edge count {edge_count} exceeds {MAX_EDGES}"
        );
        let runs = edge_count.div_ceil(RUN_WIDTH);
        let mut chunks = [[0u32; 256]; MAX_RUNS];
        for (r, chunk) in chunks.iter_mut().enumerate().take(runs) {
            let width = (edge_count - r * RUN_WIDTH).min(RUN_WIDTH);
            // Build each entry from the entry with its lowest bit removed.
            for i in 1..256usize {
                let low = i.trailing_zeros() as usize;
                let rest = chunk[i & (i - 1)];
                chunk[i] = if low < width {
                    rest | (1 << perm.apply(r * RUN_WIDTH + low))
                } else {
                    rest
                };
            }
        }
        PermTable {
            runs,
            edge_count,
            chunks,
        }
    }

    /// Number of runs, `ceil(edge_count / 8)`.
    pub fn runs(&self) -> usize {
        self.runs
    }

    /// Entries in run `r`: `2^width` where width is the run's edge count.
    pub fn run_len(&self, r: usize) -> usize {
        1 << (self.edge_count - r * RUN_WIDTH).min(RUN_WIDTH)
    }

    /// The meaningful part of run `r`'s table.
    pub fn chunk(&self, r: usize) -> &[u32] {
        &self.chunks[r][..self.run_len(r)]
    }

    /// Image of `mask` under the permutation.
    #[inline(always)]
    pub fn apply(&self, mask: u32) -> u32 {
        // Runs past `self.runs` are all zero and mask bits there are unset.
        self.chunks[0][(mask & 0xff) as usize]
            | self.chunks[1][((mask >> 8) & 0xff) as usize]
            | self.chunks[2][((mask >> 16) & 0xff) as usize]
            | self.chunks[3][(mask >> 24) as usize]
    }
}

/// Bit-by-bit image of `mask`, used as a reference for [`PermTable::apply`].
pub fn apply_naive(perm: &EdgePermutation, mask: u32) -> u32 {
    let mut out = 0;
    let mut rest = mask;
    while rest != 0 {
        let e = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        out |= 1 << perm.apply(e);
    }
    out
}

/// Closes the vertex generators; used to check vertex transitivity.
pub fn close_vertex_group(solid: &Solid) -> Result<Vec<VertexPermutation>> {
    closure(solid.generators(), solid.vertex_count())
}
