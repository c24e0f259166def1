//! Built-in bundles, addressable as `fixtures:<name>`.

pub const NAMES: &[&str] = &["pentagon", "triangle", "square", "d47", "barnette", "rp2_6", "cross4", "simplex4"];

pub fn fixture(name: &str) -> Option<&'static str> {
    Some(match name {
        "pentagon" => PENTAGON,
        "triangle" => TRIANGLE,
        "square" => SQUARE,
        "d47" => D47,
        "barnette" => BARNETTE,
        "rp2_6" => RP2_6,
        "cross4" => CROSS4,
        "simplex4" => SIMPLEX4,
        _ => return None,
    })
}

// Facets F1..F5 in counterclockwise order, v_i = F_i ∩ F_{i+1}.
const PENTAGON: &str = r#"[
  {"kind": "simple_polytope", "payload": {"num_facets": 5, "dimension": 2,
    "vertices": [[1, 2], [2, 3], [3, 4], [4, 5], [5, 1]]}},
  {"kind": "orientation", "payload": {"tuples": [[1, 2], [2, 3], [3, 4], [4, 5], [5, 1]]}},
  {"kind": "charmap", "payload": {"rank": 2,
    "vectors": [[0, -1], [1, 1], [1, 2], [-2, -3], [-1, -2]]}}
]"#;

const TRIANGLE: &str = r#"[
  {"kind": "simple_polytope", "payload": {"num_facets": 3, "dimension": 2,
    "vertices": [[1, 2], [2, 3], [3, 1]]}},
  {"kind": "orientation", "payload": {"tuples": [[1, 2], [2, 3], [3, 1]]}},
  {"kind": "charmap", "payload": {"rank": 2, "vectors": [[1, 0], [0, 1], [-1, -1]]}},
  {"kind": "search_config", "payload": {"bound": 1, "base_vertex": [1, 2], "goal": "all-positive"}}
]"#;

const SQUARE: &str = r#"[
  {"kind": "simple_polytope", "payload": {"num_facets": 4, "dimension": 2,
    "vertices": [[1, 2], [2, 3], [3, 4], [4, 1]]}},
  {"kind": "orientation", "payload": {"tuples": [[1, 2], [2, 3], [3, 4], [4, 1]]}},
  {"kind": "charmap", "payload": {"rank": 2, "vectors": [[1, 0], [0, 1], [-1, 0], [0, -1]]}},
  {"kind": "search_config", "payload": {"bound": 1, "base_vertex": [1, 2], "goal": "unimodular"}}
]"#;

// Polar of the cyclic polytope on seven curve points; the orientation document
// is the published tuple list, kept as a reference for comparison.
const D47: &str = r#"[
  {"kind": "angles", "payload": {"angles_over_pi": ["0", "1/4", "1/2", "3/4", "1", "5/4", "3/2"]}},
  {"kind": "charmap", "payload": {"rank": 4, "vectors": [
    [0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [-1, 0, -1, -1],
    [1, -1, 0, -1], [1, -1, -1, 0], [0, 0, 0, 1]]}},
  {"kind": "orientation", "payload": {"tuples": [
    [1, 2, 3, 4], [2, 1, 3, 7], [2, 1, 4, 5], [1, 2, 5, 6],
    [1, 2, 6, 7], [3, 1, 4, 7], [4, 1, 5, 7], [1, 5, 6, 7],
    [2, 3, 4, 5], [2, 3, 5, 6], [2, 3, 6, 7], [3, 4, 5, 6],
    [3, 4, 6, 7], [4, 5, 6, 7]]}},
  {"kind": "search_config", "payload": {"bound": 1, "base_vertex": [2, 1, 3, 7], "goal": "all-positive"}}
]"#;

// Non-polytopal simplicial 3-sphere; the last simplex is the base.
const BARNETTE: &str = r#"[
  {"kind": "simplicial_complex", "payload": {"num_vertices": 8, "facets": [
    [1, 2, 3, 4], [3, 4, 5, 6], [1, 2, 5, 6], [1, 2, 4, 7], [1, 3, 4, 7],
    [3, 4, 6, 7], [3, 5, 6, 7], [1, 2, 5, 7], [2, 5, 6, 7], [2, 4, 6, 7],
    [1, 2, 3, 8], [2, 3, 4, 8], [3, 4, 5, 8], [4, 5, 6, 8], [1, 2, 6, 8],
    [1, 5, 6, 8], [1, 3, 5, 8], [2, 4, 6, 8], [1, 3, 5, 7]]}},
  {"kind": "charmap", "payload": {"rank": 4, "vectors": [
    [1, 0, 0, 0], [0, 1, -1, 2], [0, 1, 0, 0], [0, 0, 1, -1],
    [0, 0, 1, 0], [1, -1, 0, -1], [0, 0, 0, 1], [1, 0, 0, -1]]}}
]"#;

// Six-vertex real projective plane.
const RP2_6: &str = r#"[
  {"kind": "simplicial_complex", "payload": {"num_vertices": 6, "facets": [
    [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
    [2, 3, 5], [3, 4, 6], [2, 4, 5], [3, 5, 6], [2, 4, 6]]}}
]"#;

// Vertex 2i-1 is +e_i and 2i is -e_i; the map is the fan of (P^1)^4.
const CROSS4: &str = r#"[
  {"kind": "simplicial_complex", "payload": {"num_vertices": 8, "facets": [
    [1, 3, 5, 7], [2, 3, 5, 7], [1, 4, 5, 7], [2, 4, 5, 7],
    [1, 3, 6, 7], [2, 3, 6, 7], [1, 4, 6, 7], [2, 4, 6, 7],
    [1, 3, 5, 8], [2, 3, 5, 8], [1, 4, 5, 8], [2, 4, 5, 8],
    [1, 3, 6, 8], [2, 3, 6, 8], [1, 4, 6, 8], [2, 4, 6, 8]]}},
  {"kind": "charmap", "payload": {"rank": 4, "vectors": [
    [1, 0, 0, 0], [-1, 0, 0, 0], [0, 1, 0, 0], [0, -1, 0, 0],
    [0, 0, 1, 0], [0, 0, -1, 0], [0, 0, 0, 1], [0, 0, 0, -1]]}}
]"#;

// Boundary of the 4-simplex with the fan of P^4.
const SIMPLEX4: &str = r#"[
  {"kind": "simplicial_complex", "payload": {"num_vertices": 5, "facets": [
    [1, 2, 3, 4], [1, 2, 3, 5], [1, 2, 4, 5], [1, 3, 4, 5], [2, 3, 4, 5]]}},
  {"kind": "charmap", "payload": {"rank": 4, "vectors": [
    [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [-1, -1, -1, -1]]}}
]"#;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::document::parse_bundle;

    #[test]
    fn every_fixture_parses() {
        for name in NAMES {
            let docs = parse_bundle(fixture(name).unwrap()).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(!docs.is_empty());
        }
        assert!(fixture("dodecahedron").is_none());
    }
}
