//! Geometric instance backends: unit disk graphs from points, circle
//! graphs from chords, seeded generators, and the independent-set packing
//! checker.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::graph::{compact_colors, ColoredGraph};
use crate::instance::{Geometry, Instance};
use crate::{Error, Result};

/// Fixed-point scale: coordinates carry six fractional digits.
pub const COORD_SCALE: i64 = 1_000_000;

/// Squared adjacency threshold (center distance 2) in scaled units.
const EDGE_THRESHOLD_SQ: i128 = (2 * COORD_SCALE as i128) * (2 * COORD_SCALE as i128);

/// Guard on the brute-force independent-set search.
pub const MIS_BALL_LIMIT: usize = 24;

/// Point coordinates in fixed-point micro-units (value × 10⁻⁶).
///
/// Storing scaled integers keeps the distance-2 boundary test exact: two
/// points at distance exactly 2 are adjacent on every platform.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointSet {
    pub coords: Vec<(i64, i64)>,
}

impl PointSet {
    pub fn from_micro(coords: Vec<(i64, i64)>) -> Self {
        PointSet { coords }
    }

    /// Converts decimal coordinates, rounding to six fractional digits.
    pub fn from_f64(coords: &[(f64, f64)]) -> Result<Self> {
        let mut out = Vec::with_capacity(coords.len());
        for &(x, y) in coords {
            if !x.is_finite() || !y.is_finite() {
                return Err(Error::Consistency(format!(
                    "non-finite coordinate ({x}, {y})"
                )));
            }
            out.push((
                (x * COORD_SCALE as f64).round() as i64,
                (y * COORD_SCALE as f64).round() as i64,
            ));
        }
        Ok(PointSet { coords: out })
    }

    pub fn to_f64(&self) -> Vec<(f64, f64)> {
        self.coords
            .iter()
            .map(|&(x, y)| (x as f64 / COORD_SCALE as f64, y as f64 / COORD_SCALE as f64))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }
}

/// Chords of a circle given as pairs of distinct integer positions; the
/// cyclic order of positions is their numeric order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChordSet {
    pub endpoints: Vec<(i64, i64)>,
}

impl ChordSet {
    pub fn new(endpoints: Vec<(i64, i64)>) -> Result<Self> {
        let mut positions: Vec<i64> = endpoints.iter().flat_map(|&(a, b)| [a, b]).collect();
        positions.sort_unstable();
        if positions.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Consistency("duplicate chord position".into()));
        }
        Ok(ChordSet { endpoints })
    }

    pub fn len(&self) -> usize {
        self.endpoints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.endpoints.is_empty()
    }
}

/// Edges of the unit disk graph: `(u, v)` iff the squared center distance
/// is at most `(2 · scale)²`, evaluated in integer arithmetic.
pub fn udg_from_points(points: &PointSet) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for u in 0..points.len() {
        let (xu, yu) = points.coords[u];
        for v in (u + 1)..points.len() {
            let (xv, yv) = points.coords[v];
            let dx = (xu - xv) as i128;
            let dy = (yu - yv) as i128;
            if dx * dx + dy * dy <= EDGE_THRESHOLD_SQ {
                edges.push((u, v));
            }
        }
    }
    edges
}

/// True iff exactly one endpoint of `b` lies strictly between the
/// endpoints of `a` in cyclic (numeric) order.
pub fn chords_interleave(a: (i64, i64), b: (i64, i64)) -> bool {
    let (lo, hi) = (a.0.min(a.1), a.0.max(a.1));
    let inside = |p: i64| lo < p && p < hi;
    inside(b.0) != inside(b.1)
}

/// Edges of the circle graph: chords share an edge iff they interleave.
pub fn circle_graph_from_chords(chords: &ChordSet) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for u in 0..chords.len() {
        for v in (u + 1)..chords.len() {
            if chords_interleave(chords.endpoints[u], chords.endpoints[v]) {
                edges.push((u, v));
            }
        }
    }
    edges
}

/// Seeded random unit disk instance: `n` points uniform in a square of
/// side `box_side`, colors drawn from a palette of `colors` (compacted so
/// all used colors are dense).
pub fn random_udg(n: usize, box_side: f64, colors: usize, seed: u64) -> Result<Instance> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let side_micro = (box_side * COORD_SCALE as f64).round() as i64;
    let coords: Vec<(i64, i64)> = (0..n)
        .map(|_| {
            (
                rng.gen_range(0..=side_micro),
                rng.gen_range(0..=side_micro),
            )
        })
        .collect();
    let points = PointSet::from_micro(coords);
    let edges = udg_from_points(&points);
    let assigned: Vec<usize> = (0..n).map(|_| rng.gen_range(0..colors.max(1))).collect();
    let graph = ColoredGraph::new(n, &edges, compact_colors(assigned))?;
    Instance::new(
        graph,
        Some(Geometry::Points(points)),
        format!("udg-n{n}-c{colors}-s{seed}"),
        format!("random_udg(n={n}, side={box_side}, colors={colors}, seed={seed})"),
    )
}

/// Seeded random chord instance: a random perfect pairing of positions
/// `0..2n-1`, all chords colored 0.
pub fn random_chords(n: usize, seed: u64) -> Result<Instance> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut positions: Vec<i64> = (0..2 * n as i64).collect();
    positions.shuffle(&mut rng);
    let endpoints: Vec<(i64, i64)> = positions
        .chunks(2)
        .map(|pair| (pair[0], pair[1]))
        .collect();
    let chords = ChordSet::new(endpoints)?;
    let edges = circle_graph_from_chords(&chords);
    let graph = ColoredGraph::new(n, &edges, vec![0; n])?;
    Instance::new(
        graph,
        Some(Geometry::Chords(chords)),
        format!("chords-n{n}-s{seed}"),
        format!("random_chords(n={n}, seed={seed})"),
    )
}

/// Exact maximum independent set size within `N^r[v, b3_active]`, by
/// exhaustive search. Guarded by [`MIS_BALL_LIMIT`].
pub fn max_independent_in_ball(
    graph: &ColoredGraph,
    b3_active: &[usize],
    v: usize,
    r: usize,
) -> Result<usize> {
    let n = graph.n();
    let active = BitSet::from_iter(n, b3_active.iter().copied());
    if !active.contains(v) {
        return Err(Error::Consistency(format!(
            "ball center {v} is not in the active set"
        )));
    }
    let mut reach = BitSet::from_iter(n, [v]);
    for _ in 0..r {
        let mut next = reach.clone();
        for u in reach.iter() {
            for &w in graph.neighbors(u) {
                if active.contains(w) {
                    next.insert(w);
                }
            }
        }
        reach = next;
    }
    let ball = reach.to_vec();
    if ball.len() > MIS_BALL_LIMIT {
        return Err(Error::GuardExceeded {
            what: "independent-set ball",
            limit: MIS_BALL_LIMIT,
            got: ball.len(),
        });
    }
    // adjacency over ball indices as bitmasks
    let adj: Vec<u32> = ball
        .iter()
        .map(|&u| {
            let mut mask = 0u32;
            for (i, &w) in ball.iter().enumerate() {
                if graph.has_edge(u, w) {
                    mask |= 1 << i;
                }
            }
            mask
        })
        .collect();
    fn mis(adj: &[u32], candidates: u32) -> usize {
        if candidates == 0 {
            return 0;
        }
        let i = candidates.trailing_zeros() as usize;
        let without = mis(adj, candidates & !(1 << i));
        let with = 1 + mis(adj, candidates & !(1 << i) & !adj[i]);
        without.max(with)
    }
    Ok(mis(&adj, (1u32 << ball.len()) - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn boundary_distance_included() {
        // distance exactly 2: edge
        let p = PointSet::from_f64(&[(0.0, 0.0), (2.0, 0.0)]).unwrap();
        assert_eq!(udg_from_points(&p), vec![(0, 1)]);
        // slightly beyond: no edge
        let p = PointSet::from_f64(&[(0.0, 0.0), (2.000001, 0.0)]).unwrap();
        assert!(udg_from_points(&p).is_empty());
    }

    #[test]
    fn non_finite_coordinates_rejected() {
        assert!(PointSet::from_f64(&[(f64::NAN, 0.0)]).is_err());
        assert!(PointSet::from_f64(&[(f64::INFINITY, 1.0)]).is_err());
    }

    #[test]
    fn udg_edges_match_distance_oracle() {
        let inst = random_udg(10, 7.0, 2, 11).unwrap();
        let Some(Geometry::Points(points)) = &inst.geometry else {
            panic!("points expected");
        };
        let coords = points.to_f64();
        for u in 0..10 {
            for v in (u + 1)..10 {
                let dx = coords[u].0 - coords[v].0;
                let dy = coords[u].1 - coords[v].1;
                let within = (dx * dx + dy * dy).sqrt() <= 2.0 + 1e-9;
                assert_eq!(inst.graph.has_edge(u, v), within);
            }
        }
    }

    #[test]
    fn chord_examples() {
        let interleaved = ChordSet::new(vec![(0, 2), (1, 3)]).unwrap();
        assert_eq!(circle_graph_from_chords(&interleaved), vec![(0, 1)]);
        let nested = ChordSet::new(vec![(0, 3), (1, 2)]).unwrap();
        assert!(circle_graph_from_chords(&nested).is_empty());
        let disjoint = ChordSet::new(vec![(0, 1), (2, 3)]).unwrap();
        assert!(circle_graph_from_chords(&disjoint).is_empty());
        assert!(ChordSet::new(vec![(0, 1), (1, 2)]).is_err());
    }

    #[test]
    fn chord_edges_match_cyclic_order_oracle() {
        let inst = random_chords(8, 3).unwrap();
        let Some(Geometry::Chords(chords)) = &inst.geometry else {
            panic!("chords expected");
        };
        // O(n²) oracle: count endpoints of b strictly inside arc of a
        for u in 0..8 {
            for v in (u + 1)..8 {
                let (a, b) = (chords.endpoints[u], chords.endpoints[v]);
                let (lo, hi) = (a.0.min(a.1), a.0.max(a.1));
                let count = [b.0, b.1].iter().filter(|&&p| lo < p && p < hi).count();
                assert_eq!(inst.graph.has_edge(u, v), count == 1);
            }
        }
    }

    proptest! {
        #[test]
        fn interleaving_is_symmetric(a0 in 0i64..40, a1 in 0i64..40, b0 in 0i64..40, b1 in 0i64..40) {
            let positions = [a0, a1, b0, b1];
            let mut sorted = positions.to_vec();
            sorted.sort_unstable();
            sorted.dedup();
            prop_assume!(sorted.len() == 4);
            prop_assert_eq!(
                chords_interleave((a0, a1), (b0, b1)),
                chords_interleave((b0, b1), (a0, a1))
            );
        }
    }

    #[test]
    fn nested_chords_are_edgeless() {
        let chords = ChordSet::new((0..6).map(|i| (i, 11 - i)).collect()).unwrap();
        assert!(circle_graph_from_chords(&chords).is_empty());
    }

    #[test]
    fn generators_are_deterministic() {
        let a = random_udg(14, 8.0, 3, 7).unwrap();
        let b = random_udg(14, 8.0, 3, 7).unwrap();
        assert_eq!(a.graph, b.graph);
        assert_eq!(a.geometry, b.geometry);
        let c = random_chords(10, 3).unwrap();
        let d = random_chords(10, 3).unwrap();
        assert_eq!(c.graph, d.graph);
    }

    #[test]
    fn tiny_box_yields_complete_graph() {
        // box diagonal ≤ 2 forces completeness
        let side = 2.0 / std::f64::consts::SQRT_2 - 0.01;
        let inst = random_udg(8, side, 2, 5).unwrap();
        assert_eq!(inst.graph.edges().len(), 8 * 7 / 2);
    }

    #[test]
    fn single_chord_has_no_edges() {
        let inst = random_chords(1, 0).unwrap();
        assert!(inst.graph.edges().is_empty());
    }

    #[test]
    fn udg_instance_is_self_consistent() {
        let inst = random_udg(14, 8.0, 3, 2).unwrap();
        let Some(Geometry::Points(points)) = &inst.geometry else {
            panic!()
        };
        assert_eq!(inst.graph.edges(), udg_from_points(points));
    }

    #[test]
    fn mis_examples() {
        // clique ball
        let g = ColoredGraph::new(3, &[(0, 1), (0, 2), (1, 2)], vec![0; 3]).unwrap();
        assert_eq!(max_independent_in_ball(&g, &[0, 1, 2], 0, 1).unwrap(), 1);
        // edgeless ball
        let g = ColoredGraph::new(4, &[], vec![0; 4]).unwrap();
        assert_eq!(max_independent_in_ball(&g, &[0], 0, 2).unwrap(), 1);
        let g = ColoredGraph::new(3, &[(0, 1), (0, 2)], vec![0; 3]).unwrap();
        assert_eq!(max_independent_in_ball(&g, &[0, 1, 2], 0, 1).unwrap(), 2);
    }

    #[test]
    fn mis_guard_enforced() {
        let n = 30;
        let edges: Vec<(usize, usize)> = (1..n).map(|v| (0, v)).collect();
        let g = ColoredGraph::new(n, &edges, vec![0; n]).unwrap();
        let all: Vec<usize> = (0..n).collect();
        assert!(max_independent_in_ball(&g, &all, 0, 1).is_err());
    }

    #[test]
    fn udg_balls_respect_packing_bound() {
        for seed in 0..10 {
            let inst = random_udg(14, 9.0, 2, seed).unwrap();
            let g = &inst.graph;
            let all: Vec<usize> = (0..g.n()).collect();
            for r in 0..=3usize {
                for v in 0..g.n() {
                    match max_independent_in_ball(g, &all, v, r) {
                        Ok(size) => assert!(size <= (2 * r + 1).pow(2)),
                        Err(Error::GuardExceeded { .. }) => {}
                        Err(e) => panic!("{e}"),
                    }
                }
            }
        }
    }
}
