//! Dominating-set reductions as instance generators.
//!
//! Each transformation turns a graph (or geometric instance) into a colored
//! instance whose minimum selective subset size is a fixed offset away from
//! the source graph's domination number, so solver round trips can be
//! checked exactly.

use crate::geometry::{circle_graph_from_chords, udg_from_points, ChordSet, PointSet};
use crate::graph::ColoredGraph;
use crate::instance::{Geometry, Instance};
use crate::{Error, Result};

/// Apex construction on an arbitrary connected graph: all original
/// vertices get color 0, one apex vertex gets color 1, and each of the
/// `extra_apexes` further apexes gets its own fresh color. Every apex is
/// adjacent to all original vertices and to no other apex.
///
/// The minimum selective subset of the output has size `γ(G) + 1 +
/// extra_apexes`, where `γ` is the domination number of the input.
pub fn reduce_ds_general(graph: &ColoredGraph, extra_apexes: usize) -> Result<Instance> {
    require_connected(graph)?;
    let n = graph.n();
    let apexes = 1 + extra_apexes;
    let mut edges = graph.edges();
    for a in 0..apexes {
        for v in 0..n {
            edges.push((v, n + a));
        }
    }
    edges.sort_unstable();
    let mut colors = vec![0; n];
    colors.extend(1..=apexes);
    let out = ColoredGraph::new(n + apexes, &edges, colors)?;
    Instance::new(
        out,
        None,
        format!("ds2mss-n{n}-a{extra_apexes}"),
        format!("reduce_ds_general(n={n}, extra_apexes={extra_apexes})"),
    )
}

/// Unit-disk construction: each original vertex gains `m` new vertices
/// placed at its exact coordinates, each carrying a globally fresh color;
/// originals are recolored 0. Co-location makes every new vertex adjacent
/// to its original (and possibly to other nearby disks, which is fine).
///
/// The minimum selective subset of the output has size `n·m + γ(U)`.
pub fn reduce_ds_udg(instance: &Instance, m: usize) -> Result<Instance> {
    let Some(Geometry::Points(points)) = &instance.geometry else {
        return Err(Error::MissingGeometry("point geometry"));
    };
    if m == 0 {
        return Err(Error::InvalidParameter("m must be at least 1".into()));
    }
    require_connected(&instance.graph)?;
    let n = instance.graph.n();
    let mut coords = points.coords.clone();
    let mut colors = vec![0; n];
    for i in 0..n {
        for l in 0..m {
            coords.push(points.coords[i]);
            colors.push(1 + i * m + l);
        }
    }
    let points = PointSet::from_micro(coords);
    let edges = udg_from_points(&points);
    let out = ColoredGraph::new(n + n * m, &edges, colors)?;
    Instance::new(
        out,
        Some(Geometry::Points(points)),
        format!("udg2mss-n{n}-m{m}"),
        format!("reduce_ds_udg(source={}, m={m})", instance.name),
    )
}

/// Circle-graph construction: every chord position `p` is rescaled to
/// `3p`, and each chord gains a mate with endpoints `3p − 1` and `3p + 1`
/// around the rescaled smaller endpoint. The mate interleaves its own
/// chord and nothing else, so it has degree exactly 1. Originals get color
/// 0, mates color 1.
///
/// The minimum selective subset of the output has size `|V(G)| + γ(G)`.
pub fn reduce_circle(instance: &Instance) -> Result<Instance> {
    let Some(Geometry::Chords(chords)) = &instance.geometry else {
        return Err(Error::MissingGeometry("chord geometry"));
    };
    let n = instance.graph.n();
    let mut endpoints: Vec<(i64, i64)> = chords
        .endpoints
        .iter()
        .map(|&(a, b)| (3 * a, 3 * b))
        .collect();
    for &(a, b) in &chords.endpoints {
        let p = 3 * a.min(b);
        endpoints.push((p - 1, p + 1));
    }
    let chords = ChordSet::new(endpoints)?;
    let edges = circle_graph_from_chords(&chords);
    let mut colors = vec![0; n];
    colors.extend(std::iter::repeat(1).take(n));
    let out = ColoredGraph::new(2 * n, &edges, colors)?;
    Instance::new(
        out,
        Some(Geometry::Chords(chords)),
        format!("circle2mss-n{n}"),
        format!("reduce_circle(source={})", instance.name),
    )
}

fn require_connected(graph: &ColoredGraph) -> Result<()> {
    if graph.connected_components().len() != 1 {
        return Err(Error::Disconnected);
    }
    Ok(())
}
