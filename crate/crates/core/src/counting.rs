//! Counting oracles: Burnside's lemma over edge-permutation cycle counts and
//! an exhaustive orbit partition for small solids.

use std::collections::BTreeMap;

use crate::enumerate::EdgeMask;
use crate::error::{Error, Result};
use crate::symmetry::RotationGroup;

/// Largest edge count [`brute_orbit_partition`] accepts.
pub const BRUTE_FORCE_MAX_EDGES: usize = 16;

/// Cycle count of each group element's edge permutation, in element order.
pub fn cycle_structure(group: &RotationGroup) -> Vec<usize> {
    group.elements().iter().map(|g| g.cycle_count()).collect()
}

/// Number of orbits of the group on all `2^edge_count` edge subsets.
///
/// An element with `c` cycles fixes exactly `2^c` subsets, so the orbit
/// count is the mean of `2^c(g)`. A nonzero remainder means `group` is not
/// actually a group.
pub fn burnside_orbit_count(group: &RotationGroup, edge_count: usize) -> Result<u64> {
    assert_eq!(
        group.edge_count(),
        edge_count,
        "group acts on a different edge count"
    );
    let sum: u128 = cycle_structure(group).iter().map(|&c| 1u128 << c).sum();
    let order = group.order() as u128;
    if !sum.is_multiple_of(order) {
        return Err(Error::CorruptGroup {
            sum,
            order: group.order(),
        });
    }
    Ok((sum / order) as u64)
}

/// Partitions every subset of `edge_count ≤ 16` edges into orbits by
/// applying each group element directly. Each orbit is sorted ascending and
/// orbits are ordered by their minimum.
pub fn brute_orbit_partition(group: &RotationGroup, edge_count: usize) -> Vec<Vec<EdgeMask>> {
    assert!(
        edge_count <= BRUTE_FORCE_MAX_EDGES,
        "brute-force partition supports at most {BRUTE_FORCE_MAX_EDGES} edges"
    );
    assert_eq!(
        group.edge_count(),
        edge_count,
        "group acts on a different edge count"
    );
    let size = 1usize << edge_count;
    let mut assigned = vec![false; size];
    let mut orbits = Vec::new();
    for m in 0..size {
        if assigned[m] {
            continue;
        }
        let mut orbit: Vec<EdgeMask> = group
            .elements()
            .iter()
            .map(|g| apply_bits(g.image(), m as EdgeMask))
            .collect();
        orbit.sort_unstable();
        orbit.dedup();
        for &x in &orbit {
            assigned[x as usize] = true;
        }
        orbits.push(orbit);
    }
    orbits
}

// Kept separate from the table path so the oracle shares no code with it.
fn apply_bits(image: &[usize], mask: EdgeMask) -> EdgeMask {
    (0..image.len())
        .filter(|&e| mask >> e & 1 == 1)
        .fold(0, |acc, e| acc | 1 << image[e])
}

/// Counts masks by number of set bits.
pub fn histogram_of(representatives: &[EdgeMask]) -> BTreeMap<u32, u64> {
    let mut h = BTreeMap::new();
    for m in representatives {
        *h.entry(m.count_ones()).or_insert(0) += 1;
    }
    h
}
