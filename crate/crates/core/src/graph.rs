//! The generating graph `Γ_{a,b}(G)`.
//!
//! Vertices are the tuples of `G^a ∪ G^b`, indexed by mixed-radix rank (the
//! `G^b` part follows the `G^a` part when `a ≠ b`). Two tuples are adjacent
//! iff their concatenation generates `G`; loops are kept apart from edges.

use crate::config::Budgets;
use crate::count::phi_enumerate;
use crate::error::{Error, Result};
use crate::group::{BudgetHit, ClosureCache, FiniteGroup, GroupTuple};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::path::Path;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaCounts {
    pub nu: u128,
    pub eta: u128,
    pub loops: u128,
}

fn check_arities(a: usize, b: usize) -> Result<()> {
    if a == 0 {
        return Err(Error::Precondition(
            "a = 0 is not supported: Γ_{0,b}(G) is a star on the generating b-tuples".into(),
        ));
    }
    if a > b {
        return Err(Error::Precondition(format!("need a <= b, got a={a}, b={b} (swap them)")));
    }
    Ok(())
}

fn power(n: usize, k: usize) -> Result<u128> {
    (n as u128).checked_pow(k as u32).ok_or(Error::SizeCap {
        what: "tuple count",
        size: u128::MAX,
        cap: u128::MAX,
    })
}

/// `(ν, η, l)` from `φ_G` values alone.
pub fn gamma_counts(g: &FiniteGroup, a: usize, b: usize, budgets: &Budgets) -> Result<GammaCounts> {
    check_arities(a, b)?;
    let n = g.order();
    if a == b {
        let loops = phi_enumerate(g, a, budgets.steps)?;
        let both = phi_enumerate(g, 2 * a, budgets.steps)?;
        Ok(GammaCounts {
            nu: power(n, a)?,
            eta: (both - loops) / 2,
            loops,
        })
    } else {
        Ok(GammaCounts {
            nu: power(n, a)? + power(n, b)?,
            eta: phi_enumerate(g, a + b, budgets.steps)?,
            loops: 0,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenGraph {
    pub group: String,
    pub group_order: usize,
    pub a: usize,
    pub b: usize,
    pub nu: usize,
    /// `(u, v)` with `u < v`, sorted.
    pub edges: Vec<(u32, u32)>,
    /// Vertices carrying a loop, sorted.
    pub loops: Vec<u32>,
}

impl GenGraph {
    pub fn eta(&self) -> usize {
        self.edges.len()
    }

    pub fn loop_count(&self) -> usize {
        self.loops.len()
    }

    pub fn is_balanced(&self) -> bool {
        self.a == self.b
    }

    /// Size of the `G^a` part; equals `nu` when `a = b`.
    pub fn part_a_len(&self) -> usize {
        self.group_order.pow(self.a as u32)
    }

    /// The tuple sitting at vertex `v`.
    pub fn vertex_tuple(&self, v: usize) -> GroupTuple {
        let (mut rank, arity) = if self.is_balanced() || v < self.part_a_len() {
            (v, self.a)
        } else {
            (v - self.part_a_len(), self.b)
        };
        let mut t = vec![0; arity];
        for slot in t.iter_mut().rev() {
            *slot = rank % self.group_order;
            rank /= self.group_order;
        }
        GroupTuple::new(t)
    }

    pub fn part_a(&self) -> Vec<GroupTuple> {
        (0..self.part_a_len()).map(|v| self.vertex_tuple(v)).collect()
    }

    /// Empty when `a = b` (there is a single vertex list).
    pub fn part_b(&self) -> Vec<GroupTuple> {
        if self.is_balanced() {
            return Vec::new();
        }
        (self.part_a_len()..self.nu).map(|v| self.vertex_tuple(v)).collect()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.nu];
        for &(u, v) in &self.edges {
            deg[u as usize] += 1;
            deg[v as usize] += 1;
        }
        deg
    }

    pub fn adjacency(&self) -> Vec<Vec<u32>> {
        let mut adj = vec![Vec::new(); self.nu];
        for &(u, v) in &self.edges {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        adj
    }

    /// Connected components, isolated vertices included.
    pub fn component_count(&self) -> usize {
        component_count(self.nu, &self.edges)
    }

    pub fn counts(&self) -> GammaCounts {
        GammaCounts {
            nu: self.nu as u128,
            eta: self.eta() as u128,
            loops: self.loop_count() as u128,
        }
    }
}

pub fn component_count(nu: usize, edges: &[(u32, u32)]) -> usize {
    let mut parent: Vec<usize> = (0..nu).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut count = nu;
    for &(u, v) in edges {
        let (ru, rv) = (find(&mut parent, u as usize), find(&mut parent, v as usize));
        if ru != rv {
            parent[ru] = rv;
            count -= 1;
        }
    }
    count
}

struct EdgeWalk<'c, 'g> {
    cache: &'c mut ClosureCache<'g>,
    n: usize,
    a: usize,
    total: usize,
    out: Vec<(u32, u32)>,
}

impl EdgeWalk<'_, '_> {
    /// Emits every generating completion of the current prefix as a
    /// `(rank of first a entries, rank of last b entries)` pair.
    fn walk(&mut self, id: u32, depth: usize, u: usize, v: usize) -> Result<(), BudgetHit> {
        let remaining = (self.total - depth) as u32;
        if self.cache.is_whole(id) {
            self.emit_all(depth, u, v);
            return Ok(());
        }
        if self.cache.completions(id, remaining)? == 0 {
            return Ok(());
        }
        for x in 0..self.n {
            let next = self.cache.extend(id, x)?;
            if depth < self.a {
                self.walk(next, depth + 1, u * self.n + x, v)?;
            } else {
                self.walk(next, depth + 1, u, v * self.n + x)?;
            }
        }
        Ok(())
    }

    fn emit_all(&mut self, depth: usize, u: usize, v: usize) {
        if depth == self.total {
            self.out.push((u as u32, v as u32));
            return;
        }
        for x in 0..self.n {
            if depth < self.a {
                self.emit_all(depth + 1, u * self.n + x, v);
            } else {
                self.emit_all(depth + 1, u, v * self.n + x);
            }
        }
    }
}

/// Materializes `Γ_{a,b}(G)` for `1 <= a <= b`.
///
/// Edges come from walking the generating `(a+b)`-tuples, split across
/// workers by first coordinate and concatenated in coordinate order.
pub fn build_gamma(g: &FiniteGroup, a: usize, b: usize, budgets: &Budgets) -> Result<GenGraph> {
    check_arities(a, b)?;
    let n = g.order();
    let counts = gamma_counts(g, a, b, budgets)?;
    if counts.nu > budgets.vertex_cap as u128 {
        return Err(Error::SizeCap {
            what: "vertex count",
            size: counts.nu,
            cap: budgets.vertex_cap as u128,
        });
    }
    let candidates = if a == b { 2 * counts.eta + counts.loops } else { counts.eta };
    if candidates > budgets.edge_work_cap {
        return Err(Error::SizeCap {
            what: "edge count",
            size: candidates,
            cap: budgets.edge_work_cap,
        });
    }
    let chunks: Vec<Result<Vec<(u32, u32)>>> = (0..n)
        .into_par_iter()
        .map(|x| {
            let mut cache = ClosureCache::new(g, budgets.steps);
            let id = cache
                .extend(ClosureCache::TRIVIAL, x)
                .and_then(|id| {
                    let mut w = EdgeWalk {
                        cache: &mut cache,
                        n,
                        a,
                        total: a + b,
                        out: Vec::new(),
                    };
                    w.walk(id, 1, x, 0).map(|_| w.out)
                });
            id.map_err(|_| Error::Budget {
                what: "build_gamma",
                limit: budgets.steps,
                depth: a + b,
            })
        })
        .collect();
    let offset = if a == b { 0 } else { n.pow(a as u32) as u32 };
    let mut edges = Vec::with_capacity(counts.eta as usize);
    let mut loops = Vec::new();
    for chunk in chunks {
        for (u, v) in chunk? {
            let v = v + offset;
            match u.cmp(&v) {
                std::cmp::Ordering::Less => edges.push((u, v)),
                std::cmp::Ordering::Equal => loops.push(u),
                std::cmp::Ordering::Greater => {}
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    loops.sort_unstable();
    Ok(GenGraph {
        group: g.name().to_string(),
        group_order: n,
        a,
        b,
        nu: counts.nu as usize,
        edges,
        loops,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    EdgeList,
    Json,
}

#[derive(Serialize, Deserialize)]
struct AdjacencyJson {
    schema: String,
    group: String,
    a: usize,
    b: usize,
    nu: usize,
    eta: usize,
    loops: Vec<u32>,
    adjacency: Vec<Vec<u32>>,
}

pub const ADJACENCY_SCHEMA: &str = "gengraph/adjacency/v1";

/// `p nu eta loops`, one `u v` line per edge, then one `loop u` line per loop.
pub fn edge_list_string(graph: &GenGraph) -> String {
    let mut s = String::new();
    writeln!(s, "p {} {} {}", graph.nu, graph.eta(), graph.loop_count()).unwrap();
    for (u, v) in &graph.edges {
        writeln!(s, "{u} {v}").unwrap();
    }
    for u in &graph.loops {
        writeln!(s, "loop {u}").unwrap();
    }
    s
}

pub fn adjacency_json_string(graph: &GenGraph) -> String {
    let doc = AdjacencyJson {
        schema: ADJACENCY_SCHEMA.into(),
        group: graph.group.clone(),
        a: graph.a,
        b: graph.b,
        nu: graph.nu,
        eta: graph.eta(),
        loops: graph.loops.clone(),
        adjacency: graph.adjacency(),
    };
    serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
}

pub fn export_graph(graph: &GenGraph, path: &Path, format: ExportFormat) -> Result<()> {
    let text = match format {
        ExportFormat::EdgeList => edge_list_string(graph),
        ExportFormat::Json => adjacency_json_string(graph),
    };
    std::fs::write(path, text)?;
    Ok(())
}

/// A graph read back from the edge-list format.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeList {
    pub nu: usize,
    pub edges: Vec<(u32, u32)>,
    pub loops: Vec<u32>,
}

pub fn parse_edge_list(text: &str) -> Result<EdgeList> {
    let err = |line: usize, message: String| Error::TableSyntax {
        line,
        column: 1,
        message,
    };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hl, header) = lines.next().ok_or_else(|| err(1, "missing header".into()))?;
    let h: Vec<&str> = header.split_whitespace().collect();
    let parse = |line: usize, s: &str| -> Result<usize> {
        s.parse::<usize>()
            .map_err(|_| err(line, format!("expected a non-negative integer, found {s:?}")))
    };
    if h.len() != 4 || h[0] != "p" {
        return Err(err(hl, "header must be `p <vertices> <edges> <loops>`".into()));
    }
    let (nu, eta, nl) = (parse(hl, h[1])?, parse(hl, h[2])?, parse(hl, h[3])?);
    let mut edges = Vec::new();
    let mut loops = Vec::new();
    for (ln, line) in lines {
        let parts: Vec<&str> = line.split_whitespace().collect();
        match parts.as_slice() {
            ["loop", u] => {
                let u = parse(ln, u)?;
                if u >= nu {
                    return Err(err(ln, format!("vertex {u} out of range")));
                }
                loops.push(u as u32);
            }
            [u, v] => {
                let (u, v) = (parse(ln, u)?, parse(ln, v)?);
                if u >= nu || v >= nu {
                    return Err(err(ln, format!("edge ({u}, {v}) out of range")));
                }
                if u == v {
                    loops.push(u as u32);
                } else {
                    edges.push((u.min(v) as u32, u.max(v) as u32));
                }
            }
            _ => return Err(err(ln, format!("unrecognized line {line:?}"))),
        }
    }
    edges.sort_unstable();
    edges.dedup();
    loops.sort_unstable();
    loops.dedup();
    if edges.len() != eta || loops.len() != nl {
        return Err(err(
            hl,
            format!(
                "header announces {eta} edges and {nl} loops, found {} and {}",
                edges.len(),
                loops.len()
            ),
        ));
    }
    Ok(EdgeList { nu, edges, loops })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{direct_product, generates, make_cyclic, make_symmetric};

    fn b() -> Budgets {
        Budgets::default()
    }

    #[test]
    fn small_examples() {
        let c2 = make_cyclic(2).unwrap();
        let g = build_gamma(&c2, 1, 1, &b()).unwrap();
        assert_eq!((g.nu, g.eta(), g.loop_count()), (2, 1, 1));
        assert_eq!(g.loops, vec![1]);

        let c5 = make_cyclic(5).unwrap();
        let g = build_gamma(&c5, 1, 1, &b()).unwrap();
        assert_eq!((g.nu, g.eta(), g.loop_count()), (5, 10, 4));

        let g = build_gamma(&c2, 2, 2, &b()).unwrap();
        assert_eq!((g.nu, g.eta()), (4, 6));

        let g = build_gamma(&c2, 1, 2, &b()).unwrap();
        assert_eq!((g.nu, g.eta(), g.loop_count()), (6, 7, 0));
    }

    #[test]
    fn counts_examples() {
        let c = |g: &FiniteGroup, a, bb| {
            let r = gamma_counts(g, a, bb, &b()).unwrap();
            (r.nu, r.eta, r.loops)
        };
        assert_eq!(c(&make_symmetric(3).unwrap(), 1, 1), (6, 9, 0));
        assert_eq!(c(&make_cyclic(2).unwrap(), 2, 3), (12, 31, 0));
        assert_eq!(c(&make_cyclic(3).unwrap(), 1, 1), (3, 3, 2));
    }

    #[test]
    fn arity_errors() {
        let c2 = make_cyclic(2).unwrap();
        let err = build_gamma(&c2, 0, 2, &b()).unwrap_err();
        assert!(err.to_string().contains("star"), "{err}");
        assert!(build_gamma(&c2, 2, 1, &b()).is_err());
        let tight = b().with_vertex_cap(3);
        assert!(build_gamma(&c2, 1, 2, &tight).unwrap_err().is_budget());
    }

    // edges must be exactly the generating concatenations
    #[test]
    fn edges_match_predicate() {
        let v4 = direct_product(&make_cyclic(2).unwrap(), &make_cyclic(2).unwrap()).unwrap();
        let s3 = make_symmetric(3).unwrap();
        for (g, a, bb) in [(&v4, 1, 2), (&v4, 1, 1), (&s3, 1, 1), (&s3, 1, 2), (&v4, 2, 2)] {
            let gr = build_gamma(g, a, bb, &b()).unwrap();
            let mut expected = Vec::new();
            let mut loops = Vec::new();
            for u in 0..gr.nu {
                for v in u..gr.nu {
                    let (tu, tv) = (gr.vertex_tuple(u), gr.vertex_tuple(v));
                    if a != bb && (tu.arity() == tv.arity()) {
                        continue;
                    }
                    if generates(g, &tu.concat(&tv)) {
                        if u == v {
                            loops.push(u as u32);
                        } else {
                            expected.push((u as u32, v as u32));
                        }
                    }
                }
            }
            assert_eq!(gr.edges, expected, "{} {a} {bb}", g.name());
            assert_eq!(gr.loops, loops);
            let deg = gr.degrees();
            assert_eq!(deg.iter().sum::<usize>(), 2 * gr.eta());
        }
    }

    #[test]
    fn below_generation_rank_is_empty() {
        let v8 = direct_product(
            &direct_product(&make_cyclic(2).unwrap(), &make_cyclic(2).unwrap()).unwrap(),
            &make_cyclic(2).unwrap(),
        )
        .unwrap();
        let g = build_gamma(&v8, 1, 1, &b()).unwrap();
        assert_eq!((g.eta(), g.loop_count()), (0, 0));
        assert!(edge_list_string(&g).starts_with("p 8 0 0\n"));
        assert_eq!(g.component_count(), 8);
    }

    #[test]
    fn edge_list_round_trip() {
        let c2 = make_cyclic(2).unwrap();
        let g = build_gamma(&c2, 1, 1, &b()).unwrap();
        let text = edge_list_string(&g);
        assert_eq!(text, "p 2 1 1\n0 1\nloop 1\n");
        let back = parse_edge_list(&text).unwrap();
        assert_eq!((back.nu, back.edges, back.loops), (g.nu, g.edges.clone(), g.loops.clone()));

        let k4 = build_gamma(&c2, 2, 2, &b()).unwrap();
        let text = edge_list_string(&k4);
        // six edges of K_4 plus the three generating pairs as loops
        assert!(text.starts_with("p 4 6 3\n"));
        assert_eq!(text.lines().count(), 1 + 6 + 3);
        assert!(parse_edge_list("p 2 5 0\n0 1\n").is_err());
        assert!(parse_edge_list("p 2 1 0\n0 9\n").is_err());
    }

    #[test]
    fn json_export() {
        let c2 = make_cyclic(2).unwrap();
        let g = build_gamma(&c2, 1, 1, &b()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&adjacency_json_string(&g)).unwrap();
        assert_eq!(v["schema"], ADJACENCY_SCHEMA);
        assert_eq!(v["adjacency"], serde_json::json!([[1], [0]]));
        assert_eq!(v["loops"], serde_json::json!([1]));
    }
}
