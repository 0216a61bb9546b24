//! The sweep over all edge subsets: orbit-minimality, connectivity and
//! planarity filters, and the parallel driver.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::thread;

use crate::counting::histogram_of;
use crate::error::{Error, Result};
use crate::exactgeom::PlaneFit;
use crate::solids::{Solid, MAX_EDGES};
use crate::symmetry::{PermTable, RotationGroup};

/// A subset of edges: bit `e` is set iff edge `e` is selected.
pub type EdgeMask = u32;

/// Which rules a subset must satisfy besides orbit-minimality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FilterConfig {
    pub require_connected: bool,
    pub require_nonplanar: bool,
    pub exclude_empty: bool,
    pub exclude_full: bool,
}

impl FilterConfig {
    /// Connected, non-planar, proper, non-empty.
    pub const ALL: FilterConfig = FilterConfig {
        require_connected: true,
        require_nonplanar: true,
        exclude_empty: true,
        exclude_full: true,
    };

    /// Every orbit, including the empty and full subsets.
    pub const NONE: FilterConfig = FilterConfig {
        require_connected: false,
        require_nonplanar: false,
        exclude_empty: false,
        exclude_full: false,
    };

    /// Filter names in pipeline-independent display order.
    pub const NAMES: [&'static str; 4] = ["connected", "nonplanar", "proper", "nonempty"];

    fn flags(&self) -> [bool; 4] {
        [
            self.require_connected,
            self.require_nonplanar,
            self.exclude_full,
            self.exclude_empty,
        ]
    }

    /// Whether `mask` passes every configured rule. Orbit-minimality is
    /// not part of this check.
    pub fn admits(&self, solid: &Solid, mask: EdgeMask) -> bool {
        !(self.exclude_empty && mask == 0
            || self.exclude_full && mask == solid.full_mask()
            || self.require_connected && !is_connected(solid, mask)
            || self.require_nonplanar && is_planar_subset(solid, mask))
    }
}

impl Default for FilterConfig {
    fn default() -> Self {
        FilterConfig::ALL
    }
}

/// Joins enabled filter names with `+`, or prints `none`.
impl fmt::Display for FilterConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = Self::NAMES
            .iter()
            .zip(self.flags())
            .filter(|(_, on)| *on)
            .map(|(n, _)| *n)
            .collect();
        if names.is_empty() {
            f.write_str("none")
        } else {
            f.write_str(&names.join("+"))
        }
    }
}

/// Parses a comma-separated list of filter names; `none` or an empty
/// string disables every filter.
impl FromStr for FilterConfig {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let mut config = FilterConfig::NONE;
        for name in s.split(',').map(str::trim).filter(|n| !n.is_empty()) {
            match name {
                "connected" => config.require_connected = true,
                "nonplanar" => config.require_nonplanar = true,
                "proper" => config.exclude_full = true,
                "nonempty" => config.exclude_empty = true,
                "none" => {}
                other => {
                    return Err(format!(
                        "unknown filter {other:?} (expected one of {})",
                        Self::NAMES.join(", ")
                    ))
                }
            }
        }
        Ok(config)
    }
}

/// True iff no group element maps `mask` to a smaller word, i.e. `mask` is
/// the minimum of its orbit. `tables` should omit the identity.
#[inline]
pub fn is_canonical(mask: EdgeMask, tables: &[PermTable]) -> bool {
    tables.iter().all(|t| t.apply(mask) >= mask)
}

/// Connected components of the subgraph formed by the selected edges and
/// their endpoints. Vertices touched by no selected edge are ignored.
pub fn component_count(solid: &Solid, mask: EdgeMask) -> usize {
    let mut rest = mask;
    let mut count = 0;
    while rest != 0 {
        rest &= !flood(solid, rest);
        count += 1;
    }
    count
}

/// Edges of `mask` reachable from its lowest edge through shared endpoints.
#[inline]
fn flood(solid: &Solid, mask: EdgeMask) -> EdgeMask {
    let mut reached = mask & mask.wrapping_neg();
    let mut frontier = reached;
    while frontier != 0 {
        let e = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = solid.edge_neighbors(e) & mask & !reached;
        reached |= new;
        frontier |= new;
    }
    reached
}

/// Whether the selected edges form one connected piece. The empty subset
/// has no components and is reported as not connected.
#[inline]
pub fn is_connected(solid: &Solid, mask: EdgeMask) -> bool {
    mask != 0 && flood(solid, mask) == mask
}

/// Vertex set touched by the selected edges.
#[inline]
pub fn touched_vertices(solid: &Solid, mask: EdgeMask) -> u64 {
    let mut rest = mask;
    let mut vertices = 0u64;
    while rest != 0 {
        vertices |= solid.endpoint_bits(rest.trailing_zeros() as usize);
        rest &= rest - 1;
    }
    vertices
}

/// Whether every endpoint of the selected edges lies in one plane.
/// Endpoints are taken in ascending vertex order. Vacuously true for the
/// empty subset.
pub fn is_planar_subset(solid: &Solid, mask: EdgeMask) -> bool {
    let mut rest = touched_vertices(solid, mask);
    let mut fit = PlaneFit::default();
    let vertices = solid.vertices();
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if !fit
            .push(&vertices[v])
            .expect("solid coordinates are within the exact-arithmetic range")
        {
            return false;
        }
    }
    true
}

/// Outcome of a sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationResult {
    pub solid: String,
    pub config: FilterConfig,
    /// Orbit minima in ascending order. Left empty by count-only sweeps.
    pub representatives: Vec<EdgeMask>,
    /// Edge count (popcount) to number of representatives.
    pub histogram: BTreeMap<u32, u64>,
    pub total: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepOptions {
    pub workers: usize,
    /// Keep the representative list; when false only counts are kept.
    pub collect: bool,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            workers: 1,
            collect: true,
        }
    }
}

/// Sweeps every subset of the solid's edges with `workers` threads and
/// keeps the orbit minima that pass `config`.
pub fn sweep(
    solid: &Solid,
    group: &RotationGroup,
    config: FilterConfig,
    workers: usize,
) -> Result<EnumerationResult> {
    sweep_with(
        solid,
        group,
        config,
        SweepOptions {
            workers,
            collect: true,
        },
    )
}

struct Tally {
    representatives: Vec<EdgeMask>,
    by_size: [u64; 33],
}

pub fn sweep_with(
    solid: &Solid,
    group: &RotationGroup,
    config: FilterConfig,
    options: SweepOptions,
) -> Result<EnumerationResult> {
    let edge_count = solid.edge_count();
    if edge_count > MAX_EDGES {
        return Err(Error::TooManyEdges(edge_count));
    }
    if options.workers == 0 {
        return Err(Error::NoWorkers);
    }
    assert_eq!(
        group.edge_count(),
        edge_count,
        "group acts on a different edge count"
    );

    let total = 1u64 << edge_count;
    let block = total.div_ceil(options.workers as u64);
    let ranges: Vec<(u64, u64)> = (0..options.workers as u64)
        .map(|w| ((w * block).min(total), ((w + 1) * block).min(total)))
        .collect();

    let tallies: Vec<Tally> = if options.workers == 1 {
        vec![scan(solid, group, config, options.collect, ranges[0])]
    } else {
        thread::scope(|scope| {
            let handles: Vec<_> = ranges
                .iter()
                .map(|&range| {
                    scope.spawn(move || scan(solid, group, config, options.collect, range))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("sweep worker panicked"))
                .collect()
        })
    };

    let mut by_size = [0u64; 33];
    let mut representatives = Vec::new();
    for tally in tallies {
        for (acc, n) in by_size.iter_mut().zip(tally.by_size) {
            *acc += n;
        }
        representatives.extend(tally.representatives);
    }
    let histogram: BTreeMap<u32, u64> = by_size
        .iter()
        .enumerate()
        .filter(|&(_, &n)| n > 0)
        .map(|(k, &n)| (k as u32, n))
        .collect();
    debug_assert!(!options.collect || histogram == histogram_of(&representatives));
    Ok(EnumerationResult {
        solid: solid.name().to_string(),
        config,
        representatives,
        total: histogram.values().sum(),
        histogram,
    })
}

fn scan(
    solid: &Solid,
    group: &RotationGroup,
    config: FilterConfig,
    collect: bool,
    (start, end): (u64, u64),
) -> Tally {
    let tables = group.non_identity_tables();
    let full = solid.full_mask();
    let mut tally = Tally {
        representatives: Vec::new(),
        by_size: [0; 33],
    };
    for m in start..end {
        let mask = m as EdgeMask;
        if config.exclude_empty && mask == 0 || config.exclude_full && mask == full {
            continue;
        }
        if !is_canonical(mask, tables) {
            continue;
        }
        if config.require_connected && !is_connected(solid, mask) {
            continue;
        }
        if config.require_nonplanar && is_planar_subset(solid, mask) {
            continue;
        }
        tally.by_size[mask.count_ones() as usize] += 1;
        if collect {
            tally.representatives.push(mask);
        }
    }
    tally
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solids::Platonic;
    use crate::symmetry::close_group;

    /// Union-find over vertices, independent of the edge-flood used above.
    fn components_by_union_find(solid: &Solid, mask: EdgeMask) -> usize {
        let mut parent: Vec<usize> = (0..solid.vertex_count()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        let mut touched = vec![false; solid.vertex_count()];
        for (e, &(a, b)) in solid.edges().iter().enumerate() {
            if mask & (1 << e) != 0 {
                touched[a] = true;
                touched[b] = true;
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra] = rb;
            }
        }
        (0..solid.vertex_count())
            .filter(|&v| touched[v] && find(&mut parent, v) == v)
            .count()
    }

    fn edges_between(solid: &Solid, pred: impl Fn(usize, usize) -> bool) -> EdgeMask {
        solid
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| pred(a, b))
            .fold(0, |m, (e, _)| m | (1 << e))
    }

    #[test]
    fn flood_agrees_with_union_find() {
        for p in [Platonic::Tetrahedron, Platonic::Cube, Platonic::Octahedron] {
            let s = p.solid();
            for mask in 1..=s.full_mask() {
                let uf = components_by_union_find(&s, mask);
                assert_eq!(component_count(&s, mask), uf, "{p} {mask:#x}");
                assert_eq!(is_connected(&s, mask), uf == 1);
            }
        }
    }

    #[test]
    fn connectivity_examples() {
        let t = Platonic::Tetrahedron.solid();
        for e in 0..6 {
            assert!(is_connected(&t, 1 << e));
        }
        let (a, b) = t.edges()[0];
        let opposite = edges_between(&t, |x, y| x != a && x != b && y != a && y != b);
        assert_eq!(opposite.count_ones(), 1);
        assert!(!is_connected(&t, 1 | opposite));
        assert_eq!(component_count(&t, 1 | opposite), 2);
        assert!(!is_connected(&t, 0));

        let cube = Platonic::Cube.solid();
        let top = cube_face(&cube);
        assert_eq!(top.count_ones(), 4);
        assert!(is_connected(&cube, top));
    }

    fn cube_face(cube: &Solid) -> EdgeMask {
        let v = cube.vertices();
        let one = crate::exactgeom::GoldenNumber::ONE;
        edges_between(cube, |a, b| v[a].z == one && v[b].z == one)
    }

    #[test]
    fn planarity_examples() {
        let cube = Platonic::Cube.solid();
        for e in 0..12 {
            assert!(is_planar_subset(&cube, 1 << e));
        }
        assert!(is_planar_subset(&cube, cube_face(&cube)));
        let corner = edges_between(&cube, |a, b| a == 0 || b == 0);
        assert_eq!(corner.count_ones(), 3);
        assert!(!is_planar_subset(&cube, corner));
        assert!(!is_planar_subset(&cube, cube.full_mask()));
    }

    #[test]
    fn canonical_examples() {
        let cube = Platonic::Cube.solid();
        let g = close_group(&cube).unwrap();
        assert!(is_canonical(0, g.non_identity_tables()));
        assert!(is_canonical(cube.full_mask(), g.non_identity_tables()));
        let count = (0..=cube.full_mask())
            .filter(|&m| is_canonical(m, g.non_identity_tables()))
            .count();
        assert_eq!(count, 218);
        // Identity never rejects, so including it changes nothing.
        let with_id = (0..=cube.full_mask())
            .filter(|&m| is_canonical(m, g.tables()))
            .count();
        assert_eq!(with_id, 218);
    }

    #[test]
    fn filter_names_round_trip() {
        assert_eq!(
            FilterConfig::ALL.to_string(),
            "connected+nonplanar+proper+nonempty"
        );
        assert_eq!(FilterConfig::NONE.to_string(), "none");
        assert_eq!(
            "connected,nonplanar,proper,nonempty".parse::<FilterConfig>(),
            Ok(FilterConfig::ALL)
        );
        assert_eq!("".parse::<FilterConfig>(), Ok(FilterConfig::NONE));
        assert_eq!("none".parse::<FilterConfig>(), Ok(FilterConfig::NONE));
        let c: FilterConfig = "connected".parse().unwrap();
        assert!(c.require_connected && !c.require_nonplanar);
        assert!("flat".parse::<FilterConfig>().is_err());
    }

    #[test]
    fn small_totals() {
        for (p, total) in [
            (Platonic::Tetrahedron, 6),
            (Platonic::Cube, 122),
            (Platonic::Octahedron, 185),
        ] {
            let s = p.solid();
            let g = close_group(&s).unwrap();
            let r = sweep(&s, &g, FilterConfig::ALL, 1).unwrap();
            assert_eq!(r.total, total, "{p}");
            assert_eq!(r.representatives.len() as u64, total);
            assert!(r.representatives.windows(2).all(|w| w[0] < w[1]));
            assert!(r.representatives.iter().all(|&m| m.count_ones() >= 3));
        }
    }

    #[test]
    fn count_only_matches_collecting_sweep() {
        let s = Platonic::Octahedron.solid();
        let g = close_group(&s).unwrap();
        let full = sweep(&s, &g, FilterConfig::ALL, 3).unwrap();
        let counted = sweep_with(
            &s,
            &g,
            FilterConfig::ALL,
            SweepOptions {
                workers: 2,
                collect: false,
            },
        )
        .unwrap();
        assert!(counted.representatives.is_empty());
        assert_eq!(counted.histogram, full.histogram);
        assert_eq!(counted.total, full.total);
    }

    #[test]
    fn zero_workers_rejected() {
        let s = Platonic::Tetrahedron.solid();
        let g = close_group(&s).unwrap();
        assert_eq!(sweep(&s, &g, FilterConfig::ALL, 0), Err(Error::NoWorkers));
    }

    #[test]
    fn more_workers_than_masks() {
        let s = Platonic::Tetrahedron.solid();
        let g = close_group(&s).unwrap();
        let a = sweep(&s, &g, FilterConfig::ALL, 1).unwrap();
        let b = sweep(&s, &g, FilterConfig::ALL, 100).unwrap();
        assert_eq!(a, b);
    }
}
