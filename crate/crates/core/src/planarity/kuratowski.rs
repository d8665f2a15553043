//! Kuratowski subdivisions: extraction from a non-planar graph, independent
//! validation, and an exhaustive search used as a test oracle.

use super::{lr::lr_is_planar, SimpleGraph};
use crate::error::{Error, Result};
use serde::Serialize;
use std::collections::{HashMap, HashSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A subdivision of `K_5` or `K_{3,3}` inside a graph.
///
/// For `K_{3,3}` the first three branch vertices form one side. Each path
/// lists its vertices from one branch vertex to another.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Kuratowski {
    pub kind: KuratowskiKind,
    pub branch: Vec<u32>,
    pub paths: Vec<Vec<u32>>,
}

impl Kuratowski {
    /// The branch pairs a valid witness must connect.
    pub fn required_pairs(&self) -> Vec<(u32, u32)> {
        let b = &self.branch;
        match self.kind {
            KuratowskiKind::K5 => (0..5)
                .flat_map(|i| (i + 1..5).map(move |j| (b[i], b[j])))
                .collect(),
            KuratowskiKind::K33 => (0..3)
                .flat_map(|i| (3..6).map(move |j| (b[i], b[j])))
                .collect(),
        }
    }
}

/// Checks that `w` really is a subdivision inside `g`: every path runs along
/// edges of `g` between the right branch vertices, and paths share no
/// vertices except their ends.
pub fn validate_witness(g: &SimpleGraph, w: &Kuratowski) -> std::result::Result<(), String> {
    let want = match w.kind {
        KuratowskiKind::K5 => 5,
        KuratowskiKind::K33 => 6,
    };
    if w.branch.len() != want {
        return Err(format!("{:?} needs {want} branch vertices, got {}", w.kind, w.branch.len()));
    }
    let branch: HashSet<u32> = w.branch.iter().copied().collect();
    if branch.len() != want || w.branch.iter().any(|&v| v as usize >= g.n) {
        return Err("branch vertices must be distinct vertices of the graph".into());
    }
    let edges: HashSet<(u32, u32)> = g.edges.iter().copied().collect();
    let has = |u: u32, v: u32| edges.contains(&(u.min(v), u.max(v)));
    let mut pairs: HashSet<(u32, u32)> = w
        .required_pairs()
        .into_iter()
        .map(|(u, v)| (u.min(v), u.max(v)))
        .collect();
    if w.paths.len() != pairs.len() {
        return Err(format!("expected {} paths, got {}", pairs.len(), w.paths.len()));
    }
    let mut interior_seen = HashSet::new();
    for p in &w.paths {
        if p.len() < 2 {
            return Err("path too short".into());
        }
        let (s, t) = (p[0], *p.last().unwrap());
        if !pairs.remove(&(s.min(t), s.max(t))) {
            return Err(format!("path {s}..{t} does not join a required, unused branch pair"));
        }
        for win in p.windows(2) {
            if !has(win[0], win[1]) {
                return Err(format!("{} - {} is not an edge", win[0], win[1]));
            }
        }
        for &x in &p[1..p.len() - 1] {
            if branch.contains(&x) {
                return Err(format!("path {s}..{t} passes through branch vertex {x}"));
            }
            if !interior_seen.insert(x) {
                return Err(format!("vertex {x} is used by two paths"));
            }
        }
    }
    Ok(())
}

/// The graph on `edges` alone, with its vertices renumbered compactly.
fn compact(edges: &[(u32, u32)]) -> SimpleGraph {
    let mut ids: HashMap<u32, u32> = HashMap::new();
    let next = |v: u32, ids: &mut HashMap<u32, u32>| {
        let len = ids.len() as u32;
        *ids.entry(v).or_insert(len)
    };
    let mapped: Vec<(u32, u32)> = edges
        .iter()
        .map(|&(u, v)| (next(u, &mut ids), next(v, &mut ids)))
        .collect();
    SimpleGraph::new(ids.len(), &mapped)
}

fn nonplanar(edges: &[(u32, u32)]) -> bool {
    !lr_is_planar(&compact(edges))
}

/// An edge-minimal non-planar subset of a non-planar graph's edges.
///
/// Grows a set of essential edges: each round binary-searches the shortest
/// prefix of the remaining candidates that, together with the essential set,
/// is non-planar; its last edge is essential. A final deletion pass confirms
/// minimality.
pub fn minimal_nonplanar_edges(g: &SimpleGraph) -> Option<Vec<(u32, u32)>> {
    if !nonplanar(&g.edges) {
        return None;
    }
    let mut essential: Vec<(u32, u32)> = Vec::new();
    let mut candidates = g.edges.clone();
    let with_prefix = |ess: &[(u32, u32)], cand: &[(u32, u32)], p: usize| {
        let mut e = ess.to_vec();
        e.extend_from_slice(&cand[..p]);
        nonplanar(&e)
    };
    while !nonplanar(&essential) {
        let (mut lo, mut hi) = (1, candidates.len());
        // invariant: prefix `hi` is non-planar together with `essential`
        while lo < hi {
            let mid = (lo + hi) / 2;
            if with_prefix(&essential, &candidates, mid) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        essential.push(candidates[hi - 1]);
        candidates.truncate(hi - 1);
    }
    let mut i = 0;
    while i < essential.len() {
        let mut trial = essential.clone();
        trial.remove(i);
        if nonplanar(&trial) {
            essential = trial;
        } else {
            i += 1;
        }
    }
    Some(essential)
}

/// Reads off the branch vertices and paths of an edge-minimal non-planar
/// edge set, which is a subdivision of `K_5` or `K_{3,3}`.
pub fn classify_subdivision(edges: &[(u32, u32)]) -> Option<Kuratowski> {
    let mut adj: HashMap<u32, Vec<u32>> = HashMap::new();
    for &(u, v) in edges {
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    let mut branch: Vec<u32> = adj.iter().filter(|(_, n)| n.len() >= 3).map(|(&v, _)| v).collect();
    branch.sort_unstable();
    if adj.values().any(|n| n.len() < 2) {
        return None;
    }
    let kind = match (branch.len(), branch.iter().map(|v| adj[v].len()).max()) {
        (5, Some(4)) if branch.iter().all(|v| adj[v].len() == 4) => KuratowskiKind::K5,
        (6, Some(3)) if branch.iter().all(|v| adj[v].len() == 3) => KuratowskiKind::K33,
        _ => return None,
    };
    let is_branch: HashSet<u32> = branch.iter().copied().collect();
    let mut paths = Vec::new();
    for &b in &branch {
        for &first in &adj[&b] {
            let mut path = vec![b, first];
            let (mut prev, mut cur) = (b, first);
            while !is_branch.contains(&cur) {
                let next = *adj[&cur].iter().find(|&&x| x != prev)?;
                path.push(next);
                prev = cur;
                cur = next;
            }
            if b < cur {
                paths.push(path);
            }
        }
    }
    paths.sort();
    if kind == KuratowskiKind::K33 {
        // two-colour the branch graph
        let ends: HashMap<u32, Vec<u32>> = paths.iter().fold(HashMap::new(), |mut m, p| {
            let (s, t) = (p[0], *p.last().unwrap());
            m.entry(s).or_default().push(t);
            m.entry(t).or_default().push(s);
            m
        });
        let a = branch[0];
        let other: Vec<u32> = ends[&a].clone();
        let mut side_a: Vec<u32> = branch.iter().copied().filter(|v| !other.contains(v)).collect();
        let mut side_b = other;
        side_a.sort_unstable();
        side_b.sort_unstable();
        if side_a.len() != 3 || side_b.len() != 3 {
            return None;
        }
        branch = side_a.into_iter().chain(side_b).collect();
    }
    Some(Kuratowski { kind, branch, paths })
}

/// A validated Kuratowski subdivision of a non-planar graph.
pub fn kuratowski_witness(g: &SimpleGraph) -> Option<Kuratowski> {
    let minimal = minimal_nonplanar_edges(g)?;
    let w = classify_subdivision(&minimal).expect("edge-minimal non-planar graphs are Kuratowski subdivisions");
    validate_witness(g, &w).expect("extracted witness must validate");
    Some(w)
}

pub const ORACLE_MAX_VERTICES: usize = 12;

/// Exhaustive search for a `K_5` or `K_{3,3}` subdivision; `true` iff one
/// exists, i.e. iff the graph is non-planar.
pub fn kuratowski_oracle(g: &SimpleGraph) -> Result<bool> {
    if g.n > ORACLE_MAX_VERTICES {
        return Err(Error::SizeCap {
            what: "kuratowski_oracle vertices",
            size: g.n as u128,
            cap: ORACLE_MAX_VERTICES as u128,
        });
    }
    Ok(find_subdivision(g).is_some())
}

/// The search behind [`kuratowski_oracle`], returning the subdivision found.
pub fn find_subdivision(g: &SimpleGraph) -> Option<Kuratowski> {
    let n = g.n;
    let mut adj = vec![0u32; n];
    for &(u, v) in &g.edges {
        adj[u as usize] |= 1 << v;
        adj[v as usize] |= 1 << u;
    }
    let deg = |v: usize| adj[v].count_ones() as usize;
    let subsets = |k: usize, min_deg: usize| -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize == k && (0..n).all(|v| mask & (1 << v) == 0 || deg(v) >= min_deg) {
                out.push((0..n as u32).filter(|&v| mask & (1 << v) != 0).collect());
            }
        }
        out
    };
    for b in subsets(5, 4) {
        let pairs: Vec<(u32, u32)> = (0..5)
            .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
            .map(|(i, j)| (b[i], b[j]))
            .collect();
        if let Some(paths) = route(&adj, &b, &pairs) {
            return Some(Kuratowski {
                kind: KuratowskiKind::K5,
                branch: b,
                paths,
            });
        }
    }
    for six in subsets(6, 3) {
        // sides {six[0], six[i], six[j]} vs the rest
        for i in 1..6 {
            for j in i + 1..6 {
                let side_a = [six[0], six[i], six[j]];
                let side_b: Vec<u32> = six.iter().copied().filter(|v| !side_a.contains(v)).collect();
                let pairs: Vec<(u32, u32)> = side_a
                    .iter()
                    .flat_map(|&x| side_b.iter().map(move |&y| (x, y)))
                    .collect();
                if let Some(paths) = route(&adj, &six, &pairs) {
                    return Some(Kuratowski {
                        kind: KuratowskiKind::K33,
                        branch: side_a.iter().copied().chain(side_b).collect(),
                        paths,
                    });
                }
            }
        }
    }
    None
}

/// Internally disjoint paths joining every pair, avoiding other branch
/// vertices, by backtracking.
fn route(adj: &[u32], branch: &[u32], pairs: &[(u32, u32)]) -> Option<Vec<Vec<u32>>> {
    let branch_mask = branch.iter().fold(0u32, |m, &v| m | (1 << v));
    let mut paths = Vec::new();
    if route_from(adj, branch_mask, pairs, 0, branch_mask, &mut paths) {
        Some(paths)
    } else {
        None
    }
}

fn route_from(adj: &[u32], branch_mask: u32, pairs: &[(u32, u32)], i: usize, used: u32, paths: &mut Vec<Vec<u32>>) -> bool {
    if i == pairs.len() {
        return true;
    }
    let (s, t) = pairs[i];
    let mut path = vec![s];
    extend_path(adj, branch_mask, pairs, i, used, t, &mut path, paths)
}

#[allow(clippy::too_many_arguments)]
fn extend_path(
    adj: &[u32],
    branch_mask: u32,
    pairs: &[(u32, u32)],
    i: usize,
    used: u32,
    t: u32,
    path: &mut Vec<u32>,
    paths: &mut Vec<Vec<u32>>,
) -> bool {
    let cur = *path.last().unwrap();
    if adj[cur as usize] & (1 << t) != 0 {
        path.push(t);
        paths.push(path.clone());
        if route_from(adj, branch_mask, pairs, i + 1, used, paths) {
            return true;
        }
        paths.pop();
        path.pop();
    }
    let mut free = adj[cur as usize] & !used;
    while free != 0 {
        let x = free.trailing_zeros();
        free &= free - 1;
        path.push(x);
        if extend_path(adj, branch_mask, pairs, i, used | (1 << x), t, path, paths) {
            return true;
        }
        path.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: u32) -> SimpleGraph {
        let e: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        SimpleGraph::new(n as usize, &e)
    }

    fn k33() -> SimpleGraph {
        let e: Vec<_> = (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect();
        SimpleGraph::new(6, &e)
    }

    #[test]
    fn witnesses_for_the_two_kuratowski_graphs() {
        let w = kuratowski_witness(&complete(5)).unwrap();
        assert_eq!(w.kind, KuratowskiKind::K5);
        assert_eq!(w.paths.len(), 10);
        let w = kuratowski_witness(&k33()).unwrap();
        assert_eq!(w.kind, KuratowskiKind::K33);
        assert!(kuratowski_witness(&complete(4)).is_none());
    }

    #[test]
    fn oracle_examples() {
        assert!(!kuratowski_oracle(&complete(4)).unwrap());
        assert!(kuratowski_oracle(&complete(5)).unwrap());
        // K_{3,3} with edge (0,3) subdivided by vertex 6
        let mut e: Vec<_> = (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).filter(|&p| p != (0, 3)).collect();
        e.extend([(0, 6), (3, 6)]);
        let g = SimpleGraph::new(7, &e);
        let w = find_subdivision(&g).unwrap();
        validate_witness(&g, &w).unwrap();
        assert!(kuratowski_oracle(&complete(13)).is_err());
    }

    #[test]
    fn validation_rejects_broken_witnesses() {
        let g = k33();
        let mut w = kuratowski_witness(&g).unwrap();
        let first = w.paths[0][0];
        w.paths[0].push(first);
        assert!(validate_witness(&g, &w).is_err());
        let mut w = kuratowski_witness(&g).unwrap();
        w.paths.pop();
        assert!(validate_witness(&g, &w).is_err());
        let w = Kuratowski {
            kind: KuratowskiKind::K5,
            branch: vec![0, 1, 2, 3, 4],
            paths: vec![],
        };
        assert!(validate_witness(&complete(4), &w).is_err());
    }
}
