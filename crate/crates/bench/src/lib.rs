//! Shared fixtures for the criterion benchmarks.

use incomplete_core::{close_group, Platonic, RotationGroup, Solid};

/// A built-in solid together with its closed rotation group.
pub fn fixture(p: Platonic) -> (Solid, RotationGroup) {
    let solid = p.solid();
    let group = close_group(&solid).expect("built-in generators close");
    (solid, group)
}
