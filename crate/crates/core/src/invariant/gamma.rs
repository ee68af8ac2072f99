use alloc::vec;
use alloc::vec::Vec;

use crate::diagram::{crossing_weights, ChordDiagram};

/// Simple graph on the circles of a diagram; two circles are adjacent when
/// they share an odd number of chords.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GammaGraph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl GammaGraph {
    pub fn new(vertices: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut edges: Vec<(usize, usize)> = edges
            .into_iter()
            .filter(|&(a, b)| a != b)
            .map(|(a, b)| (a.min(b), a.max(b)))
            .inspect(|&(_, b)| assert!(b < vertices, "edge endpoint out of range"))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        GammaGraph { vertices, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices <= 1 {
            return true;
        }
        let mut adj = vec![Vec::new(); self.vertices];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; self.vertices];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Self {
        Self::new(self.vertices, self.edges.iter().map(|&(a, b)| (perm[a], perm[b])))
    }
}

pub fn gamma_graph(d: &ChordDiagram) -> GammaGraph {
    let w = crossing_weights(d);
    let k = d.circle_count();
    let edges = (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .filter(|&(i, j)| w[i][j] % 2 == 1);
    GammaGraph::new(k, edges.collect::<Vec<_>>())
}

/// Edge count of Γ when it is connected, 0 otherwise.
pub fn j_number(d: &ChordDiagram) -> u32 {
    let g = gamma_graph(d);
    if g.is_connected() {
        g.edge_count() as u32
    } else {
        0
    }
}
