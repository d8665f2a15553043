//! Planarity of generating graphs: a certified decision procedure and the
//! classification of planar `Γ_{a,b}(G)`.

mod classify;
mod kuratowski;
mod lr;

pub use classify::{
    expected_planarity, k33_witness, witness_set_check, minimal_generating_tuple, pla_cell,
    planar_list_member, bipartite_excess_check, tuple_vertex, verify_pla, K33Tuples, WitnessSetReport,
    NoK33, PlaCell, PlaReport, ExcessCase, ExcessWitness, WitnessCase, PLANAR_LIST,
    PLANARITY_SCHEMA,
};
pub use kuratowski::{
    classify_subdivision, find_subdivision, kuratowski_oracle, kuratowski_witness,
    minimal_nonplanar_edges, validate_witness, Kuratowski, KuratowskiKind, ORACLE_MAX_VERTICES,
};
pub use lr::{lr_embedding, lr_is_planar, Rotation};

use crate::graph::{component_count, GenGraph};
use serde::Serialize;

/// Undirected graph without loops or parallel edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    pub n: usize,
    /// `(u, v)` with `u < v`, sorted, no duplicates.
    pub edges: Vec<(u32, u32)>,
    /// `adj[v]` lists `(neighbour, edge index)`.
    pub adj: Vec<Vec<(u32, u32)>>,
}

impl SimpleGraph {
    /// Drops loops and repeated edges.
    pub fn new(n: usize, edges: &[(u32, u32)]) -> Self {
        let mut e: Vec<(u32, u32)> = edges
            .iter()
            .filter(|(u, v)| u != v)
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        e.sort_unstable();
        e.dedup();
        assert!(e.iter().all(|&(_, v)| (v as usize) < n), "edge endpoint out of range");
        let mut adj = vec![Vec::new(); n];
        for (i, &(u, v)) in e.iter().enumerate() {
            adj[u as usize].push((v, i as u32));
            adj[v as usize].push((u, i as u32));
        }
        SimpleGraph { n, edges: e, adj }
    }

    /// The underlying simple graph of a generating graph (loops stripped).
    pub fn from_gamma(g: &GenGraph) -> Self {
        Self::new(g.nu, &g.edges)
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn non_isolated(&self) -> usize {
        (0..self.n).filter(|&v| self.degree(v) > 0).count()
    }

    /// 2-colouring, if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut colour = vec![u8::MAX; self.n];
        let mut queue = Vec::new();
        for s in 0..self.n {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            queue.push(s);
            while let Some(v) = queue.pop() {
                for &(w, _) in &self.adj[v] {
                    let w = w as usize;
                    if colour[w] == u8::MAX {
                        colour[w] = 1 - colour[v];
                        queue.push(w);
                    } else if colour[w] == colour[v] {
                        return None;
                    }
                }
            }
        }
        Some(colour)
    }

    /// Sizes of the connected components that contain at least one edge.
    pub fn nontrivial_component_sizes(&self) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut sizes = Vec::new();
        for s in 0..self.n {
            if seen[s] || self.degree(s) == 0 {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut size = 0;
            while let Some(v) = stack.pop() {
                size += 1;
                for &(w, _) in &self.adj[v] {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        stack.push(w as usize);
                    }
                }
            }
            sizes.push(size);
        }
        sizes
    }

    pub fn component_count(&self) -> usize {
        component_count(self.n, &self.edges)
    }
}

/// Checks that a rotation system is a planar embedding of `g`: rotations
/// are single cycles over each vertex's half-edges, and tracing faces gives
/// `n - m + f = 2` on every component.
pub fn check_planar_embedding(g: &SimpleGraph, rot: &Rotation) -> Result<(), String> {
    let m2 = 2 * g.m();
    if rot.cw.len() != m2 || rot.ccw.len() != m2 {
        return Err("rotation arrays have the wrong length".into());
    }
    let tail = |h: usize| {
        let (u, v) = g.edges[h / 2];
        if h % 2 == 0 {
            u
        } else {
            v
        }
    };
    for v in 0..g.n {
        let halves: Vec<usize> = g.adj[v]
            .iter()
            .map(|&(_, e)| 2 * e as usize + usize::from(g.edges[e as usize].0 as usize != v))
            .collect();
        let Some(&start) = halves.first() else { continue };
        let mut h = start;
        let mut count = 0;
        loop {
            let next = rot.cw[h] as usize;
            if next >= m2 || tail(next) as usize != v || rot.ccw[next] as usize != h {
                return Err(format!("rotation at vertex {v} is inconsistent"));
            }
            count += 1;
            h = next;
            if h == start || count > halves.len() {
                break;
            }
        }
        if count != halves.len() || h != start {
            return Err(format!("rotation at vertex {v} is not a single cycle over its edges"));
        }
    }
    let mut seen = vec![false; m2];
    let mut faces = 0usize;
    for s in 0..m2 {
        if seen[s] {
            continue;
        }
        faces += 1;
        let mut h = s;
        while !seen[h] {
            seen[h] = true;
            h = rot.ccw[h ^ 1] as usize;
        }
        if h != s {
            return Err("face tracing did not close up".into());
        }
    }
    let isolated = g.n - g.non_isolated();
    let lhs = g.n as i64 - g.m() as i64 + (faces + isolated) as i64;
    let rhs = 2 * g.component_count() as i64;
    if lhs != rhs {
        return Err(format!("Euler characteristic {lhs} != {rhs}: embedding is not planar"));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    EulerPruned,
    BipartiteBoundPruned,
    FullTest,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::EulerPruned => "euler-pruned",
            Method::BipartiteBoundPruned => "bipartite-bound-pruned",
            Method::FullTest => "full-test",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PlanarityVerdict {
    pub planar: bool,
    pub method: Method,
    /// Vertices with at least one edge; the edge-count bounds apply to these.
    pub effective_nu: usize,
    pub eta: usize,
    pub witness: Option<Kuratowski>,
}

/// Decides planarity: edge-count bounds first (on the non-isolated
/// vertices), then the left-right test. Planar results are certified by
/// checking the embedding; non-planar ones from the full test carry a
/// validated Kuratowski subdivision.
pub fn is_planar(g: &SimpleGraph) -> PlanarityVerdict {
    let nu = g.non_isolated();
    let eta = g.m();
    let verdict = |planar, method, witness| PlanarityVerdict {
        planar,
        method,
        effective_nu: nu,
        eta,
        witness,
    };
    if nu >= 3 && eta > 3 * nu - 6 {
        return verdict(false, Method::EulerPruned, None);
    }
    if nu >= 3 && eta > 2 * nu - 4 && g.bipartition().is_some() && g.nontrivial_component_sizes().iter().all(|&s| s >= 3) {
        return verdict(false, Method::BipartiteBoundPruned, None);
    }
    match lr_embedding(g) {
        Some(rot) => {
            check_planar_embedding(g, &rot).expect("left-right embedding must certify");
            verdict(true, Method::FullTest, None)
        }
        None => {
            let w = kuratowski_witness(g).expect("non-planar graph has a Kuratowski subdivision");
            verdict(false, Method::FullTest, Some(w))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn complete(n: u32) -> SimpleGraph {
        let e: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        SimpleGraph::new(n as usize, &e)
    }

    fn complete_bipartite(a: u32, b: u32) -> SimpleGraph {
        let e: Vec<_> = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))).collect();
        SimpleGraph::new((a + b) as usize, &e)
    }

    #[test]
    fn classic_examples() {
        let v = is_planar(&complete(4));
        assert!(v.planar);
        let v = is_planar(&complete(5));
        assert!(!v.planar);
        assert_eq!(v.method, Method::EulerPruned);
        // the full test on K_5 itself yields a K_5 witness
        assert!(!lr_is_planar(&complete(5)));
        assert_eq!(kuratowski_witness(&complete(5)).unwrap().kind, KuratowskiKind::K5);
        let v = is_planar(&complete_bipartite(3, 3));
        assert!(!v.planar);
        assert_eq!(v.method, Method::BipartiteBoundPruned);
        assert_eq!(kuratowski_witness(&complete_bipartite(3, 3)).unwrap().kind, KuratowskiKind::K33);
        assert!(is_planar(&complete_bipartite(2, 7)).planar);
    }

    #[test]
    fn petersen_is_nonplanar_with_witness() {
        let mut e = Vec::new();
        for i in 0..5u32 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        let g = SimpleGraph::new(10, &e);
        let v = is_planar(&g);
        assert!(!v.planar);
        assert_eq!(v.method, Method::FullTest);
        let w = v.witness.unwrap();
        assert_eq!(w.kind, KuratowskiKind::K33);
        validate_witness(&g, &w).unwrap();
    }

    #[test]
    fn embeddings_certify_on_planar_families() {
        // grid, wheel, prism, disjoint union with isolated vertices
        let mut grid = Vec::new();
        for r in 0..6u32 {
            for c in 0..6u32 {
                let v = r * 6 + c;
                if c < 5 {
                    grid.push((v, v + 1));
                }
                if r < 5 {
                    grid.push((v, v + 6));
                }
            }
        }
        let mut wheel: Vec<_> = (1..9u32).map(|i| (0, i)).collect();
        wheel.extend((1..9u32).map(|i| (i, i % 8 + 1)));
        for (n, e) in [(36, grid), (9, wheel.clone()), (20, wheel)] {
            let g = SimpleGraph::new(n, &e);
            let rot = lr_embedding(&g).expect("planar");
            check_planar_embedding(&g, &rot).unwrap();
        }
    }

    #[test]
    fn random_graphs_against_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut extracted = 0;
        for _ in 0..1500 {
            let n = rng.gen_range(1..=9u32);
            let p: f64 = rng.gen_range(0.15..0.75);
            let e: Vec<_> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            let g = SimpleGraph::new(n as usize, &e);
            let v = is_planar(&g);
            assert_eq!(v.planar, !kuratowski_oracle(&g).unwrap(), "{e:?}");
            assert_eq!(lr_is_planar(&g), v.planar);
            if let Some(w) = &v.witness {
                validate_witness(&g, w).unwrap();
                extracted += 1;
            }
        }
        assert!(extracted > 50, "only {extracted} witnesses extracted");
    }

    #[test]
    fn large_planar_graph_runs_on_deep_recursion() {
        // a long path plus chords of a triangulated strip
        let n = 30_000u32;
        let mut e: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        e.extend((0..n - 2).step_by(2).map(|i| (i, i + 2)));
        let g = SimpleGraph::new(n as usize, &e);
        let rot = lr_embedding(&g).unwrap();
        check_planar_embedding(&g, &rot).unwrap();
    }
}
