//! File-serializable problem instances: a colored graph plus optional
//! geometry and provenance.
//!
//! Wire format: a UTF-8 JSON object with fields `n`, `edges` (pairs with
//! `u < v`), `colors`, optional `geometry` (`{"kind": "points", "coords":
//! [[x, y], ...]}` or `{"kind": "chords", "endpoints": [[a, b], ...]}`),
//! optional `name` and `provenance`. Point coordinates are decimals; the
//! unit-disk edge threshold is Euclidean distance <= 2.

use serde::{Deserialize, Serialize};

use crate::geometry::{circle_graph_from_chords, udg_from_points, ChordSet, PointSet};
use crate::graph::ColoredGraph;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Geometry {
    Points(PointSet),
    Chords(ChordSet),
}

/// A named instance. When geometry is present, the graph is exactly the
/// graph induced by the geometry, edge for edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: ColoredGraph,
    pub geometry: Option<Geometry>,
    pub name: String,
    pub provenance: String,
}

impl Instance {
    pub fn new(
        graph: ColoredGraph,
        geometry: Option<Geometry>,
        name: String,
        provenance: String,
    ) -> Result<Self> {
        let instance = Instance {
            graph,
            geometry,
            name,
            provenance,
        };
        instance.check_geometry()?;
        Ok(instance)
    }

    fn check_geometry(&self) -> Result<()> {
        let Some(geometry) = &self.geometry else {
            return Ok(());
        };
        let induced = match geometry {
            Geometry::Points(points) => {
                if points.len() != self.graph.n() {
                    return Err(Error::Consistency(format!(
                        "{} points for {} vertices",
                        points.len(),
                        self.graph.n()
                    )));
                }
                udg_from_points(points)
            }
            Geometry::Chords(chords) => {
                if chords.len() != self.graph.n() {
                    return Err(Error::Consistency(format!(
                        "{} chords for {} vertices",
                        chords.len(),
                        self.graph.n()
                    )));
                }
                circle_graph_from_chords(chords)
            }
        };
        let declared = self.graph.edges();
        if induced != declared {
            let missing: Vec<_> = induced
                .iter()
                .filter(|e| !declared.contains(e))
                .take(3)
                .collect();
            let extra: Vec<_> = declared
                .iter()
                .filter(|e| !induced.contains(e))
                .take(3)
                .collect();
            return Err(Error::Consistency(format!(
                "edge list disagrees with geometry (missing {missing:?}, extra {extra:?})"
            )));
        }
        Ok(())
    }

    /// Parses and validates the wire format.
    pub fn from_json_str(text: &str) -> Result<Self> {
        let wire: WireInstance = serde_json::from_str(text)?;
        wire.into_instance()
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&WireInstance::from_instance(self))
            .expect("instance serialization cannot fail")
    }
}

#[derive(Serialize, Deserialize)]
struct WireInstance {
    n: usize,
    edges: Vec<(usize, usize)>,
    colors: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    geometry: Option<WireGeometry>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    name: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    provenance: String,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum WireGeometry {
    Points { coords: Vec<(f64, f64)> },
    Chords { endpoints: Vec<(i64, i64)> },
}

impl WireInstance {
    fn into_instance(self) -> Result<Instance> {
        for &(u, v) in &self.edges {
            if u >= v {
                return Err(Error::Parse(format!(
                    "edge ({u}, {v}) must be listed with u < v"
                )));
            }
        }
        let graph = ColoredGraph::new(self.n, &self.edges, self.colors)?;
        let geometry = match self.geometry {
            None => None,
            Some(WireGeometry::Points { coords }) => {
                Some(Geometry::Points(PointSet::from_f64(&coords)?))
            }
            Some(WireGeometry::Chords { endpoints }) => {
                Some(Geometry::Chords(ChordSet::new(endpoints)?))
            }
        };
        Instance::new(graph, geometry, self.name, self.provenance)
    }

    fn from_instance(instance: &Instance) -> Self {
        WireInstance {
            n: instance.graph.n(),
            edges: instance.graph.edges(),
            colors: instance.graph.colors().to_vec(),
            geometry: instance.geometry.as_ref().map(|g| match g {
                Geometry::Points(points) => WireGeometry::Points {
                    coords: points.to_f64(),
                },
                Geometry::Chords(chords) => WireGeometry::Chords {
                    endpoints: chords.endpoints.clone(),
                },
            }),
            name: instance.name.clone(),
            provenance: instance.provenance.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::random_udg;

    #[test]
    fn parse_simple_instance() {
        let text = r#"{"n": 3, "edges": [[0, 1], [1, 2]], "colors": [0, 0, 1]}"#;
        let inst = Instance::from_json_str(text).unwrap();
        assert_eq!(inst.graph.n(), 3);
        assert_eq!(inst.graph.num_colors(), 2);
    }

    #[test]
    fn self_loop_rejected() {
        let text = r#"{"n": 3, "edges": [[0, 0]], "colors": [0, 0, 1]}"#;
        assert!(Instance::from_json_str(text).is_err());
    }

    #[test]
    fn color_gap_rejected() {
        let text = r#"{"n": 2, "edges": [], "colors": [0, 2]}"#;
        assert!(Instance::from_json_str(text).is_err());
    }

    #[test]
    fn misordered_edge_rejected() {
        let text = r#"{"n": 2, "edges": [[1, 0]], "colors": [0, 1]}"#;
        assert!(Instance::from_json_str(text).is_err());
    }

    #[test]
    fn geometry_mismatch_rejected() {
        // points at distance 1.9 must be adjacent; edge list omits the pair
        let text = r#"{
            "n": 3,
            "edges": [[0, 1]],
            "colors": [0, 0, 1],
            "geometry": {"kind": "points", "coords": [[0, 0], [1.5, 0], [3.4, 0]]}
        }"#;
        let err = Instance::from_json_str(text).unwrap_err();
        assert!(matches!(err, Error::Consistency(_)), "{err}");
    }

    #[test]
    fn geometry_consistent_accepted() {
        let text = r#"{
            "n": 3,
            "edges": [[0, 1], [1, 2]],
            "colors": [0, 0, 1],
            "geometry": {"kind": "points", "coords": [[0, 0], [1.5, 0], [3.4, 0]]}
        }"#;
        let inst = Instance::from_json_str(text).unwrap();
        assert!(inst.geometry.is_some());
    }

    #[test]
    fn roundtrip_preserves_instance() {
        let inst = random_udg(12, 8.0, 3, 42).unwrap();
        let back = Instance::from_json_str(&inst.to_json_string()).unwrap();
        assert_eq!(inst, back);
    }
}
