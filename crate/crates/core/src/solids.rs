//! Solids: labeled vertices with exact coordinates, a canonically ordered
//! edge list, and rotation generators given as vertex permutations.
//!
//! Edges are stored as `(lo, hi)` with `lo < hi`, sorted lexicographically;
//! an edge's index is its position in that list and addresses bit `index`
//! of an [`EdgeMask`](crate::enumerate::EdgeMask).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactgeom::{GoldenNumber, Point3, COORDINATE_LIMIT};
use crate::perm::{Permutation, VertexPermutation};

/// Most edges a solid may have; masks are 32-bit words.
pub const MAX_EDGES: usize = 30;
/// Most vertices a solid may have; vertex sets are 64-bit words.
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, PartialEq, Eq)]
pub struct Solid {
    name: String,
    vertices: Vec<Point3>,
    edges: Vec<(usize, usize)>,
    generators: Vec<VertexPermutation>,
    // Derived lookups.
    edge_lookup: Vec<u8>,
    endpoint_bits: Vec<u64>,
    edge_neighbors: Vec<u32>,
}

const NO_EDGE: u8 = u8::MAX;

impl fmt::Debug for Solid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Solid")
            .field("name", &self.name)
            .field("vertices", &self.vertices)
            .field("edges", &self.edges)
            .field("generators", &self.generators)
            .finish()
    }
}

impl Solid {
    /// Validates and canonicalizes a solid. Edge pairs may be given in any
    /// orientation and order.
    pub fn new(
        name: impl Into<String>,
        vertices: Vec<Point3>,
        edges: impl IntoIterator<Item = (usize, usize)>,
        generators: Vec<VertexPermutation>,
    ) -> Result<Self> {
        let n = vertices.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        if let Some(m) = vertices
            .iter()
            .map(Point3::magnitude)
            .find(|&m| m > COORDINATE_LIMIT)
        {
            return Err(Error::CoordinateScale(m));
        }

        let mut edges: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        if edges.len() > MAX_EDGES {
            return Err(Error::TooManyEdges(edges.len()));
        }
        if edges.is_empty() {
            return Err(Error::NoEdges);
        }
        for &(lo, hi) in &edges {
            if hi >= n {
                return Err(Error::VertexOutOfRange(lo, hi, n));
            }
            if lo == hi {
                return Err(Error::LoopEdge(lo, hi));
            }
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }

        let mut edge_lookup = vec![NO_EDGE; n * n];
        for (i, &(lo, hi)) in edges.iter().enumerate() {
            edge_lookup[lo * n + hi] = i as u8;
            edge_lookup[hi * n + lo] = i as u8;
        }
        let endpoint_bits: Vec<u64> = edges
            .iter()
            .map(|&(lo, hi)| (1u64 << lo) | (1u64 << hi))
            .collect();
        let edge_neighbors = endpoint_bits
            .iter()
            .enumerate()
            .map(|(i, &bits)| {
                endpoint_bits
                    .iter()
                    .enumerate()
                    .filter(|&(j, &other)| j != i && other & bits != 0)
                    .fold(0u32, |acc, (j, _)| acc | (1 << j))
            })
            .collect();

        let solid = Solid {
            name: name.into(),
            vertices,
            edges,
            generators,
            edge_lookup,
            endpoint_bits,
            edge_neighbors,
        };
        for (index, g) in solid.generators.iter().enumerate() {
            if g.len() != n {
                return Err(Error::NotBijective(index, n));
            }
            for &(lo, hi) in &solid.edges {
                if solid.edge_index(g.apply(lo), g.apply(hi)).is_err() {
                    return Err(Error::NotEdgePreserving { index, lo, hi });
                }
            }
        }
        Ok(solid)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vertices(&self) -> &[Point3] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn generators(&self) -> &[VertexPermutation] {
        &self.generators
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Mask with every edge bit set.
    pub fn full_mask(&self) -> u32 {
        (((1u64) << self.edges.len()) - 1) as u32
    }

    /// Position of the edge `{v1, v2}` in the canonical edge list.
    #[inline]
    pub fn edge_index(&self, v1: usize, v2: usize) -> Result<usize> {
        let n = self.vertices.len();
        if v1 >= n || v2 >= n {
            return Err(Error::NotAnEdge(v1, v2));
        }
        match self.edge_lookup[v1 * n + v2] {
            NO_EDGE => Err(Error::NotAnEdge(v1, v2)),
            i => Ok(i as usize),
        }
    }

    /// Both endpoints of edge `e` as bits of a vertex set.
    #[inline]
    pub fn endpoint_bits(&self, e: usize) -> u64 {
        self.endpoint_bits[e]
    }

    /// Edges sharing at least one endpoint with edge `e`.
    #[inline]
    pub fn edge_neighbors(&self, e: usize) -> u32 {
        self.edge_neighbors[e]
    }

    /// Parses and validates a JSON solid-spec document.
    pub fn from_json(document: &str) -> Result<Self> {
        let spec: SolidSpec =
            serde_json::from_str(document).map_err(|e| Error::Parse(e.to_string()))?;
        spec.into_solid()
    }

    pub fn to_spec(&self) -> SolidSpec {
        SolidSpec {
            name: self.name.clone(),
            vertices: self.vertices.clone(),
            edges: self.edges.iter().map(|&(lo, hi)| [lo, hi]).collect(),
            generators: self.generators.iter().map(|g| g.image().to_vec()).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_spec()).expect("solid spec serializes")
    }

    /// The same solid with vertex `v` relabeled to `relabel[v]`. Edges and
    /// generators are carried along consistently.
    pub fn relabeled(&self, relabel: &Permutation) -> Result<Solid> {
        let inv = relabel.inverse();
        let vertices = (0..self.vertex_count())
            .map(|new| self.vertices[inv.apply(new)])
            .collect();
        let edges = self
            .edges
            .iter()
            .map(|&(lo, hi)| (relabel.apply(lo), relabel.apply(hi)));
        let generators = self
            .generators
            .iter()
            .map(|g| relabel.compose(g).compose(&inv))
            .collect();
        Solid::new(self.name.clone(), vertices, edges, generators)
    }
}

/// Reads a solid-spec document.
pub fn load_solid(document: &str) -> Result<Solid> {
    Solid::from_json(document)
}

/// On-disk form of a solid. Coordinates are `[a, b]` pairs meaning `a + bφ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolidSpec {
    pub name: String,
    pub vertices: Vec<Point3>,
    pub edges: Vec<[usize; 2]>,
    pub generators: Vec<Vec<usize>>,
}

impl SolidSpec {
    pub fn into_solid(self) -> Result<Solid> {
        let n = self.vertices.len();
        let generators = self
            .generators
            .into_iter()
            .enumerate()
            .map(|(i, image)| {
                if image.len() != n {
                    return Err(Error::NotBijective(i, n));
                }
                Permutation::from_image(image).ok_or(Error::NotBijective(i, n))
            })
            .collect::<Result<Vec<_>>>()?;
        Solid::new(
            self.name,
            self.vertices,
            self.edges.into_iter().map(|[u, v]| (u, v)),
            generators,
        )
    }
}

/// The five platonic solids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Platonic {
    Tetrahedron,
    Cube,
    Octahedron,
    Dodecahedron,
    Icosahedron,
}

impl Platonic {
    pub const ALL: [Platonic; 5] = [
        Platonic::Tetrahedron,
        Platonic::Cube,
        Platonic::Octahedron,
        Platonic::Dodecahedron,
        Platonic::Icosahedron,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Platonic::Tetrahedron => "tetrahedron",
            Platonic::Cube => "cube",
            Platonic::Octahedron => "octahedron",
            Platonic::Dodecahedron => "dodecahedron",
            Platonic::Icosahedron => "icosahedron",
        }
    }

    /// Order of the rotation group.
    pub fn group_order(self) -> usize {
        match self {
            Platonic::Tetrahedron => 12,
            Platonic::Cube | Platonic::Octahedron => 24,
            Platonic::Dodecahedron | Platonic::Icosahedron => 60,
        }
    }

    pub fn solid(self) -> Solid {
        let vertices = sorted(match self {
            Platonic::Tetrahedron => vec![
                Point3::int(1, 1, 1),
                Point3::int(1, -1, -1),
                Point3::int(-1, 1, -1),
                Point3::int(-1, -1, 1),
            ],
            Platonic::Cube => cube_corners(),
            Platonic::Octahedron => (0..3)
                .flat_map(|axis| {
                    [1, -1].map(|s| {
                        let mut c = [0; 3];
                        c[axis] = s;
                        Point3::int(c[0], c[1], c[2])
                    })
                })
                .collect(),
            Platonic::Icosahedron => cyclic_family(GoldenNumber::ONE, GoldenNumber::PHI),
            Platonic::Dodecahedron => {
                let mut v = cube_corners();
                v.extend(cyclic_family(GoldenNumber::new(-1, 1), GoldenNumber::PHI));
                v
            }
        });
        let edges = shortest_pairs(&vertices);
        let rotations: [&Rotation; 2] = match self {
            Platonic::Tetrahedron => [&CYCLE_AXES, &HALF_TURN_Z],
            Platonic::Cube | Platonic::Octahedron => [&QUARTER_TURN_Z, &CYCLE_AXES],
            Platonic::Dodecahedron => [&FIFTH_TURN_DUAL, &CYCLE_AXES],
            Platonic::Icosahedron => [&FIFTH_TURN, &CYCLE_AXES],
        };
        let generators = rotations
            .iter()
            .map(|r| r.vertex_permutation(&vertices))
            .collect();
        Solid::new(self.name(), vertices, edges, generators).expect("built-in solid is valid")
    }
}

impl FromStr for Platonic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Platonic::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownSolid(s.to_string()))
    }
}

impl fmt::Display for Platonic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Looks up one of the five platonic solids by name.
pub fn builtin_solid(name: &str) -> Result<Solid> {
    Ok(name.parse::<Platonic>()?.solid())
}

fn sorted(mut v: Vec<Point3>) -> Vec<Point3> {
    v.sort();
    v
}

fn cube_corners() -> Vec<Point3> {
    let mut v = Vec::with_capacity(8);
    for x in [1, -1] {
        for y in [1, -1] {
            for z in [1, -1] {
                v.push(Point3::int(x, y, z));
            }
        }
    }
    v
}

/// Cyclic permutations of `(0, ±p, ±q)`.
fn cyclic_family(p: GoldenNumber, q: GoldenNumber) -> Vec<Point3> {
    let zero = GoldenNumber::ZERO;
    let mut v = Vec::with_capacity(12);
    for sp in [p, -p] {
        for sq in [q, -q] {
            v.push(Point3::new(zero, sp, sq));
            v.push(Point3::new(sq, zero, sp));
            v.push(Point3::new(sp, sq, zero));
        }
    }
    v
}

/// All vertex pairs at the minimal nonzero distance.
fn shortest_pairs(vertices: &[Point3]) -> Vec<(usize, usize)> {
    let pairs = || {
        (0..vertices.len()).flat_map(move |i| {
            (i + 1..vertices.len()).map(move |j| {
                let d = vertices[i]
                    .checked_distance_squared(&vertices[j])
                    .expect("built-in coordinates are small");
                (i, j, d)
            })
        })
    };
    let min = pairs()
        .map(|(_, _, d)| d)
        .filter(|d| !d.is_zero())
        .min()
        .expect("at least two distinct vertices");
    pairs()
        .filter(|&(_, _, d)| d == min)
        .map(|(i, j, _)| (i, j))
        .collect()
}

/// A rotation stored as twice its matrix, so icosahedral entries stay in Z[φ].
struct Rotation([[GoldenNumber; 3]; 3]);

const fn gn(a: i64, b: i64) -> GoldenNumber {
    GoldenNumber::new(a, b)
}

/// (x, y, z) -> (y, z, x): 3-fold about (1, 1, 1).
const CYCLE_AXES: Rotation = Rotation([
    [gn(0, 0), gn(2, 0), gn(0, 0)],
    [gn(0, 0), gn(0, 0), gn(2, 0)],
    [gn(2, 0), gn(0, 0), gn(0, 0)],
]);

/// (x, y, z) -> (-x, -y, z).
const HALF_TURN_Z: Rotation = Rotation([
    [gn(-2, 0), gn(0, 0), gn(0, 0)],
    [gn(0, 0), gn(-2, 0), gn(0, 0)],
    [gn(0, 0), gn(0, 0), gn(2, 0)],
]);

/// (x, y, z) -> (-y, x, z).
const QUARTER_TURN_Z: Rotation = Rotation([
    [gn(0, 0), gn(-2, 0), gn(0, 0)],
    [gn(2, 0), gn(0, 0), gn(0, 0)],
    [gn(0, 0), gn(0, 0), gn(2, 0)],
]);

/// 5-fold rotation; entries are halves of 0, ±1, ±φ, ±(φ - 1).
const FIFTH_TURN: Rotation = Rotation([
    [gn(-1, 1), gn(0, -1), gn(1, 0)],
    [gn(0, 1), gn(1, 0), gn(-1, 1)],
    [gn(-1, 0), gn(-1, 1), gn(0, 1)],
]);

/// [`FIFTH_TURN`] conjugated by the x/y swap, matching the dodecahedron's
/// orientation, whose cyclic family is `(0, ±(φ - 1), ±φ)` rather than
/// the icosahedron's `(0, ±1, ±φ)`.
const FIFTH_TURN_DUAL: Rotation = Rotation([
    [gn(1, 0), gn(0, 1), gn(-1, 1)],
    [gn(0, -1), gn(-1, 1), gn(1, 0)],
    [gn(-1, 1), gn(-1, 0), gn(0, 1)],
]);

impl Rotation {
    fn vertex_permutation(&self, vertices: &[Point3]) -> VertexPermutation {
        let two = GoldenNumber::from(2);
        let doubled: Vec<Point3> = vertices
            .iter()
            .map(|p| Point3::new(p.x * two, p.y * two, p.z * two))
            .collect();
        let image = vertices
            .iter()
            .map(|p| {
                let [x, y, z] = self.0.map(|row| row[0] * p.x + row[1] * p.y + row[2] * p.z);
                let q = Point3::new(x, y, z);
                doubled
                    .iter()
                    .position(|d| *d == q)
                    .expect("rotation maps the vertex set onto itself")
            })
            .collect();
        Permutation::from_image(image).expect("rotation is a bijection on vertices")
    }
}
