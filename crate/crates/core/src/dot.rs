//! Deterministic DOT emission for the partition graph.

use crate::partition::Partition;

/// Renders an undirected graph whose nodes are partitions. Nodes are
/// listed in sorted order and edges in sorted index order, so the output
/// is byte-stable for a fixed input.
pub fn export_dot(vertices: &[Partition], edges: &[(usize, usize)]) -> String {
    let mut out = String::from("graph {\n");
    for v in vertices {
        out.push_str(&format!("  \"{}\";\n", v));
    }
    let mut sorted_edges = edges.to_vec();
    sorted_edges.sort();
    for (a, b) in sorted_edges {
        out.push_str(&format!("  \"{}\" -- \"{}\";\n", vertices[a], vertices[b]));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice2::Sublattice2;

    #[test]
    fn single_vertex() {
        let p = Partition::new(vec![Sublattice2::full(), Sublattice2::full()]).unwrap();
        let dot = export_dot(&[p], &[]);
        assert_eq!(dot, "graph {\n  \"[(1,0,1),(1,0,1)]\";\n}\n");
    }

    #[test]
    fn empty_graph() {
        assert_eq!(export_dot(&[], &[]), "graph {\n}\n");
    }

    #[test]
    fn stable_bytes() {
        let vs = crate::partition::enumerate_partitions(4, 2).unwrap();
        let es = crate::partition::edge_list(&vs).unwrap();
        let a = export_dot(&vs, &es);
        let b = export_dot(&vs, &es);
        assert_eq!(a, b);
        assert_eq!(vs.len(), 7);
    }
}
