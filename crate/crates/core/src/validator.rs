//! Definition-faithful validity checking of candidate selective subsets,
//! plus the boundary-cover characterization used by all solvers.

use crate::blocks::Block;
use crate::graph::ColoredGraph;
use crate::{Error, Result};

/// Outcome of a validity check. `witness` is present iff the set is not
/// valid and names the smallest failing vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub valid: bool,
    pub witness: Option<Witness>,
}

/// The smallest vertex violating the selective-subset condition, with the
/// distance to its nearest eligible vertices and the colors found there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub vertex: usize,
    pub nearest_distance: Option<usize>,
    pub colors_at_distance: Vec<usize>,
}

impl Verdict {
    fn valid() -> Self {
        Verdict {
            valid: true,
            witness: None,
        }
    }

    fn invalid(witness: Witness) -> Self {
        Verdict {
            valid: false,
            witness: Some(witness),
        }
    }
}

/// Checks whether `candidate` is a selective subset of `graph`.
///
/// A vertex `v` of color `l` is satisfied when some vertex of color `l`
/// appears among its nearest neighbors within `candidate ∪ (V \ V_l)`,
/// i.e. `d(v, candidate ∩ V_l) <= d(v, V \ V_l)`. A vertex whose entire
/// component is monochromatic is satisfied iff the candidate intersects
/// that component. The verdict is deterministic: the witness is the
/// smallest failing vertex.
pub fn is_selective_subset(graph: &ColoredGraph, candidate: &[usize]) -> Result<Verdict> {
    let n = graph.n();
    for &v in candidate {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    let mut in_set = vec![false; n];
    for &v in candidate {
        in_set[v] = true;
    }
    for component in graph.connected_components() {
        let mono = component
            .iter()
            .all(|&v| graph.color(v) == graph.color(component[0]));
        if mono {
            if !component.iter().any(|&v| in_set[v]) {
                return Ok(Verdict::invalid(Witness {
                    vertex: component[0],
                    nearest_distance: None,
                    colors_at_distance: Vec::new(),
                }));
            }
            continue;
        }
        for &v in &component {
            if in_set[v] {
                continue;
            }
            let color = graph.color(v);
            let dist = graph.bfs_distances(v);
            // d(v, V \ V_l): finite, the component is not monochromatic.
            let d_other = component
                .iter()
                .filter(|&&u| graph.color(u) != color)
                .filter_map(|&u| dist[u])
                .min()
                .expect("non-monochromatic component has another color");
            let d_same = component
                .iter()
                .filter(|&&u| in_set[u] && graph.color(u) == color)
                .filter_map(|&u| dist[u])
                .min();
            if d_same.map_or(true, |d| d > d_other) {
                // The nearest eligible vertices all have the wrong color.
                let d_nearest = d_same.map_or(d_other, |d| d.min(d_other));
                let mut colors: Vec<usize> = component
                    .iter()
                    .filter(|&&u| dist[u] == Some(d_nearest))
                    .filter(|&&u| in_set[u] || graph.color(u) != color)
                    .map(|&u| graph.color(u))
                    .collect();
                colors.sort_unstable();
                colors.dedup();
                return Ok(Verdict::invalid(Witness {
                    vertex: v,
                    nearest_distance: Some(d_nearest),
                    colors_at_distance: colors,
                }));
            }
        }
    }
    Ok(Verdict::valid())
}

/// True iff for every block `i` and every `v` in `b1(i)`,
/// `N[v, b3(i)] ∩ candidate` is non-empty.
///
/// For candidates contained in the union of the `b3` sets (and graphs
/// without monochromatic components) this is equivalent to
/// [`is_selective_subset`]; it is necessary for any valid candidate.
pub fn covers_boundary(graph: &ColoredGraph, blocks: &[Block], candidate: &[usize]) -> bool {
    let mut in_set = vec![false; graph.n()];
    for &v in candidate {
        in_set[v] = true;
    }
    blocks.iter().all(|block| {
        block.b1.iter().all(|&v| {
            in_set[v]
                || graph
                    .neighbors(v)
                    .iter()
                    .any(|&u| in_set[u] && block.b3.binary_search(&u).is_ok())
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::decompose_blocks;
    use crate::graph::random_colored_graph;
    use crate::ColoredGraph;
    use proptest::prelude::*;

    fn path3_two_colors() -> ColoredGraph {
        ColoredGraph::new(3, &[(0, 1), (1, 2)], vec![0, 0, 1]).unwrap()
    }

    #[test]
    fn monochromatic_single_vertex_is_valid() {
        let g = ColoredGraph::new(3, &[(0, 1), (1, 2)], vec![0, 0, 0]).unwrap();
        for v in 0..3 {
            assert!(is_selective_subset(&g, &[v]).unwrap().valid);
        }
        assert!(!is_selective_subset(&g, &[]).unwrap().valid);
    }

    #[test]
    fn full_vertex_set_is_always_valid() {
        for seed in 0..10 {
            let g = random_colored_graph(9, 3, 0.3, seed);
            let all: Vec<usize> = (0..g.n()).collect();
            assert!(is_selective_subset(&g, &all).unwrap().valid);
        }
    }

    #[test]
    fn empty_set_fails_with_witness() {
        let g = path3_two_colors();
        let verdict = is_selective_subset(&g, &[]).unwrap();
        assert!(!verdict.valid);
        let w = verdict.witness.unwrap();
        // vertex 0's only eligible vertex is 2 (distance 2, wrong color)
        assert_eq!(w.vertex, 0);
        assert_eq!(w.nearest_distance, Some(2));
        assert_eq!(w.colors_at_distance, vec![1]);
    }

    #[test]
    fn out_of_range_candidate_rejected() {
        let g = path3_two_colors();
        assert!(is_selective_subset(&g, &[9]).is_err());
    }

    #[test]
    fn covers_boundary_examples() {
        let g = ColoredGraph::new(4, &[(0, 1), (1, 2), (2, 3)], vec![0, 0, 1, 1]).unwrap();
        let blocks = decompose_blocks(&g);
        // union of b1 sets always covers
        assert!(covers_boundary(&g, &blocks, &[1, 2]));
        assert!(!covers_boundary(&g, &blocks, &[0]));
    }

    #[test]
    fn disconnected_mono_component_needs_a_pick() {
        // component {0,1} bi-colored, component {2,3} monochromatic
        let g = ColoredGraph::new(4, &[(0, 1), (2, 3)], vec![0, 1, 0, 0]).unwrap();
        assert!(!is_selective_subset(&g, &[0, 1]).unwrap().valid);
        assert!(is_selective_subset(&g, &[0, 1, 2]).unwrap().valid);
    }

    fn subsets(universe: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0u32..(1 << universe.len())).map(move |mask| {
            universe
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect()
        })
    }

    #[test]
    fn characterization_on_random_instances() {
        // For S ⊆ ⋃ b3 in graphs without monochromatic components the two
        // predicates agree; necessity holds for arbitrary S.
        let mut checked = 0;
        for seed in 0..40 {
            let g = random_colored_graph(9, 3, 0.35, seed);
            let comps = g.connected_components();
            let has_mono = comps
                .iter()
                .any(|c| c.iter().all(|&v| g.color(v) == g.color(c[0])));
            if has_mono {
                continue;
            }
            let blocks = decompose_blocks(&g);
            let mut b3_union: Vec<usize> = blocks.iter().flat_map(|b| b.b3.clone()).collect();
            b3_union.sort_unstable();
            if b3_union.len() > 10 {
                continue;
            }
            checked += 1;
            for s in subsets(&b3_union) {
                let valid = is_selective_subset(&g, &s).unwrap().valid;
                assert_eq!(valid, covers_boundary(&g, &blocks, &s));
            }
        }
        assert!(checked >= 3, "too few instances exercised ({checked})");
    }

    #[test]
    fn necessity_for_arbitrary_sets() {
        for seed in 0..30 {
            let g = random_colored_graph(8, 3, 0.3, seed);
            let blocks = decompose_blocks(&g);
            let all: Vec<usize> = (0..g.n()).collect();
            for s in subsets(&all) {
                if is_selective_subset(&g, &s).unwrap().valid {
                    assert!(covers_boundary(&g, &blocks, &s));
                }
            }
        }
    }

    proptest! {
        #[test]
        fn monotone_under_supersets(seed in 0u64..500, extra in 0usize..8) {
            let g = random_colored_graph(8, 3, 0.3, seed);
            // start from the full set minus a few vertices; if valid, any
            // superset stays valid
            let mut s: Vec<usize> = (0..g.n()).filter(|v| v % 3 != seed as usize % 3).collect();
            if is_selective_subset(&g, &s).unwrap().valid {
                s.push(extra % g.n());
                s.sort_unstable();
                s.dedup();
                prop_assert!(is_selective_subset(&g, &s).unwrap().valid);
            }
        }
    }
}
