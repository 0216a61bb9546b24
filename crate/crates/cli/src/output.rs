//! Artifact writers: representative lists, histograms, OBJ wireframes.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::io::{self, BufRead, BufWriter, Write};
use std::path::Path;

use incomplete_core::{EdgeMask, EnumerationResult, Solid};

/// One mask per line in lowercase hex without prefix, ascending.
pub fn write_representatives(result: &EnumerationResult, path: &Path) -> io::Result<()> {
    let mut out = BufWriter::new(fs::File::create(path)?);
    write_representatives_to(&result.representatives, &mut out)?;
    out.flush()
}

pub fn write_representatives_to(masks: &[EdgeMask], out: &mut impl Write) -> io::Result<()> {
    debug_assert!(masks.windows(2).all(|w| w[0] < w[1]));
    for m in masks {
        writeln!(out, "{m:x}")?;
    }
    Ok(())
}

/// Parses a file written by [`write_representatives`].
pub fn read_representatives(path: &Path) -> io::Result<Vec<EdgeMask>> {
    io::BufReader::new(fs::File::open(path)?)
        .lines()
        .map(|line| {
            let line = line?;
            EdgeMask::from_str_radix(line.trim(), 16)
                .map_err(|e| io::Error::new(io::ErrorKind::InvalidData, format!("{line:?}: {e}")))
        })
        .collect()
}

/// `edges,count` CSV in ascending edge-count order.
pub fn histogram_csv(histogram: &BTreeMap<u32, u64>) -> String {
    let mut s = String::from("edges,count\n");
    for (edges, count) in histogram {
        writeln!(s, "{edges},{count}").unwrap();
    }
    s
}

pub fn write_histogram(histogram: &BTreeMap<u32, u64>, path: &Path) -> io::Result<()> {
    fs::write(path, histogram_csv(histogram))
}

/// Wavefront OBJ text: every vertex of the solid, plus one line element per
/// selected edge.
pub fn wireframe_obj(solid: &Solid, mask: EdgeMask) -> String {
    let mut s = format!("# {} edges {mask:x}\n", solid.name());
    for p in solid.vertices() {
        let [x, y, z] = p.to_f64();
        writeln!(s, "v {x:.9} {y:.9} {z:.9}").unwrap();
    }
    for (e, &(a, b)) in solid.edges().iter().enumerate() {
        if mask & (1 << e) != 0 {
            writeln!(s, "l {} {}", a + 1, b + 1).unwrap();
        }
    }
    s
}

pub fn write_wireframe(solid: &Solid, mask: EdgeMask, path: &Path) -> io::Result<()> {
    fs::write(path, wireframe_obj(solid, mask))
}

/// File name used for a representative's wireframe.
pub fn wireframe_name(solid: &Solid, mask: EdgeMask) -> String {
    let stem: String = solid
        .name()
        .chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || c == '-' {
                c
            } else {
                '_'
            }
        })
        .collect();
    format!("{stem}_{mask:08x}.obj")
}
