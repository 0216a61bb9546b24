//! Enumeration of incomplete open polyhedra: connected, non-planar, proper,
//! non-empty edge subsets of a solid, counted up to rotation.
//!
//! Edge subsets are 32-bit masks. Each rotation is compiled into per-byte
//! lookup tables so that its action on a mask is four loads and three ORs;
//! a mask is kept when no rotation maps it to a smaller word.
//!
//! ```
//! use incomplete_core::{builtin_solid, close_group, sweep, FilterConfig};
//!
//! let cube = builtin_solid("cube").unwrap();
//! let group = close_group(&cube).unwrap();
//! let result = sweep(&cube, &group, FilterConfig::ALL, 1).unwrap();
//! assert_eq!(result.total, 122);
//! ```

pub mod counting;
pub mod enumerate;
pub mod error;
pub mod exactgeom;
pub mod perm;
pub mod solids;
pub mod symmetry;

pub use counting::{brute_orbit_partition, burnside_orbit_count, cycle_structure, histogram_of};
pub use enumerate::{
    component_count, is_canonical, is_connected, is_planar_subset, sweep, sweep_with, EdgeMask,
    EnumerationResult, FilterConfig, SweepOptions,
};
pub use error::{Error, Result};
pub use exactgeom::{coplanar, triple_product, GoldenNumber, Point3};
pub use perm::{EdgePermutation, Permutation, VertexPermutation};
pub use solids::{builtin_solid, load_solid, Platonic, Solid, SolidSpec};
pub use symmetry::{close_group, vertex_to_edge, PermTable, RotationGroup};
