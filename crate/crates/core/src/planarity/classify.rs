//! Which generating graphs are planar, with the explicit non-planarity
//! certificates: six tuples spanning a `K_{3,3}`, or a bipartite induced
//! subgraph with more than `2v - 4` edges.

use super::{is_planar, Method, SimpleGraph};
use crate::config::Budgets;
use crate::count::phi_enumerate;
use crate::error::{Error, Result};
use crate::graph::{build_gamma, gamma_counts};
use crate::group::{
    closure, direct_product, generates, make_cyclic, make_dihedral, make_quaternion8,
    min_gen_size, BudgetHit, ClosureCache, Fingerprint, FiniteGroup, GroupTuple, Subgroup,
};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::HashSet;

pub const PLANARITY_SCHEMA: &str = "gengraph/planarity-matrix/v1";

/// Groups `G` with planar `Γ_{1,1}(G)`.
pub const PLANAR_LIST: [&str; 9] = ["C3", "C4", "C6", "C2xC2", "D3", "D4", "Q8", "C4xC2", "D6"];

fn planar_list_fingerprints() -> Vec<Fingerprint> {
    let c = |n| make_cyclic(n).unwrap();
    let groups = [
        c(3),
        c(4),
        c(6),
        direct_product(&c(2), &c(2)).unwrap(),
        make_dihedral(3).unwrap(),
        make_dihedral(4).unwrap(),
        make_quaternion8().unwrap(),
        direct_product(&c(4), &c(2)).unwrap(),
        make_dihedral(6).unwrap(),
    ];
    groups.iter().map(|g| g.fingerprint()).collect()
}

/// Name from [`PLANAR_LIST`] of the group `g` is isomorphic to, decided by
/// fingerprint.
pub fn planar_list_member(g: &FiniteGroup) -> Option<&'static str> {
    let fp = g.fingerprint();
    planar_list_fingerprints()
        .iter()
        .position(|f| *f == fp)
        .map(|i| PLANAR_LIST[i])
}

fn is_c2(g: &FiniteGroup) -> bool {
    g.order() == 2
}

/// The predicted planarity of `Γ_{a,b}(G)` for nontrivial `G`,
/// `1 <= a <= b`, `a + b >= d(G)`.
pub fn expected_planarity(g: &FiniteGroup, a: usize, b: usize, budgets: &Budgets) -> Result<bool> {
    if g.is_trivial() || a == 0 || a > b {
        return Err(Error::Precondition("need a nontrivial group and 1 <= a <= b".into()));
    }
    if a + b < min_gen_size(g, budgets.steps)? {
        return Err(Error::Precondition(format!("a + b is below d({})", g.name())));
    }
    Ok(((a, b) == (1, 1) && planar_list_member(g).is_some())
        || (is_c2(g) && (a == 1 || (a, b) == (2, 2))))
}

/// Lexicographically first generating `d(G)`-tuple.
pub fn minimal_generating_tuple(g: &FiniteGroup, steps: u64) -> Result<GroupTuple> {
    let d = min_gen_size(g, steps)?;
    let mut cache = ClosureCache::new(g, steps);
    let mut t = Vec::with_capacity(d);
    let mut id = ClosureCache::TRIVIAL;
    let fail = |_: BudgetHit| Error::Budget {
        what: "minimal_generating_tuple",
        limit: steps,
        depth: d,
    };
    for pos in 0..d {
        let remaining = (d - pos - 1) as u32;
        let mut found = false;
        for x in g.elements() {
            let next = cache.extend(id, x).map_err(fail)?;
            if cache.completions(next, remaining).map_err(fail)? > 0 {
                t.push(x);
                id = next;
                found = true;
                break;
            }
        }
        assert!(found, "d(G) was computed, so a completion exists");
    }
    Ok(GroupTuple::new(t))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessCase {
    /// cyclic, `a >= 3`
    CyclicA3,
    /// cyclic, `a = 2`, `|G| != 2`
    CyclicA2,
    /// `C_2`, `a = 2`, `b >= 3`
    CyclicA2Order2,
    /// non-cyclic, `a >= 2`, `a + b = d(G)`
    NonCyclicExact,
    /// non-cyclic, `a >= 2`, `a + b > d(G)`
    NonCyclicPadded,
}

/// Why no `K_{3,3}` tuples are offered for a cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NoK33 {
    /// `a = b = 1`: the classical generating graph, decided directly.
    ClassicalCase,
    /// `a = 1` cells are certified by a dense bipartite subgraph instead.
    UsesBipartiteBound,
    /// The graph is planar.
    PlanarCase,
}

#[derive(Clone, Debug, Serialize)]
pub struct K33Tuples {
    pub case: WitnessCase,
    pub alphas: Vec<GroupTuple>,
    pub betas: Vec<GroupTuple>,
    /// All nine concatenations generate `G`.
    pub adjacent: bool,
    /// The six tuples are six different vertices.
    pub distinct: bool,
}

fn cyc_tuple(len: usize, prefix: &[usize]) -> GroupTuple {
    let mut v = vec![0; len];
    v[..prefix.len()].copy_from_slice(prefix);
    GroupTuple::new(v)
}

/// The six vertex tuples of a `K_{3,3}` in `Γ_{a,b}(G)`.
pub fn k33_witness(g: &FiniteGroup, a: usize, b: usize, budgets: &Budgets) -> Result<std::result::Result<K33Tuples, NoK33>> {
    if g.is_trivial() || a == 0 || a > b {
        return Err(Error::Precondition("need a nontrivial group and 1 <= a <= b".into()));
    }
    if (a, b) == (1, 1) {
        return Ok(Err(NoK33::ClassicalCase));
    }
    if a == 1 {
        return Ok(Err(if is_c2(g) { NoK33::PlanarCase } else { NoK33::UsesBipartiteBound }));
    }
    let d = min_gen_size(g, budgets.steps)?;
    if a + b < d {
        return Err(Error::Precondition(format!("a + b is below d({})", g.name())));
    }
    let (case, alphas, betas) = if g.is_cyclic() {
        let gen = (0..g.order()).find(|&x| g.element_order(x) == g.order()).unwrap();
        let g2 = g.mul(gen, gen);
        if a >= 3 {
            (
                WitnessCase::CyclicA3,
                vec![cyc_tuple(a, &[0, 0, gen]), cyc_tuple(a, &[0, gen, gen]), cyc_tuple(a, &[0, gen])],
                vec![cyc_tuple(b, &[gen, 0, gen]), cyc_tuple(b, &[gen, gen, gen]), cyc_tuple(b, &[gen, gen])],
            )
        } else if g.order() != 2 {
            (
                WitnessCase::CyclicA2,
                vec![cyc_tuple(2, &[0, gen]), cyc_tuple(2, &[gen, 0]), cyc_tuple(2, &[gen, gen])],
                vec![cyc_tuple(b, &[0, g2]), cyc_tuple(b, &[g2]), cyc_tuple(b, &[g2, g2])],
            )
        } else if b >= 3 {
            (
                WitnessCase::CyclicA2Order2,
                vec![cyc_tuple(2, &[0, gen]), cyc_tuple(2, &[gen, 0]), cyc_tuple(2, &[gen, gen])],
                vec![cyc_tuple(b, &[0, gen, gen]), cyc_tuple(b, &[gen, 0, gen]), cyc_tuple(b, &[gen, gen, gen])],
            )
        } else {
            return Ok(Err(NoK33::PlanarCase));
        }
    } else {
        let gens = minimal_generating_tuple(g, budgets.steps)?;
        // g_i = 1 beyond d
        let gi = |i: usize| gens.entries().get(i - 1).copied().unwrap_or(0);
        let (g1, g2) = (gi(1), gi(2));
        let g12 = g.mul(g1, g2);
        let tail_a: Vec<usize> = (3..=a).map(gi).collect();
        let alpha = |x: usize, y: usize| {
            let mut v = vec![x, y];
            v.extend_from_slice(&tail_a);
            GroupTuple::new(v)
        };
        let alphas = vec![alpha(g1, g2), alpha(g1, g12), alpha(g12, g2)];
        if a + b == d {
            let (h1, h2) = (gi(a + 1), gi(a + 2));
            let tail_b: Vec<usize> = (a + 3..=d).map(gi).collect();
            let beta = |x: usize, y: usize| {
                let mut v = vec![x, y];
                v.extend_from_slice(&tail_b);
                GroupTuple::new(v)
            };
            let h12 = g.mul(h1, h2);
            (WitnessCase::NonCyclicExact, alphas, vec![beta(h1, h2), beta(h12, h2), beta(h1, h12)])
        } else {
            let head: Vec<usize> = (a + 1..=d).map(gi).collect();
            let beta = |x: usize| {
                let mut v = head.clone();
                v.resize(b, x);
                GroupTuple::new(v)
            };
            (WitnessCase::NonCyclicPadded, alphas, vec![beta(0), beta(1), beta(2)])
        }
    };
    let adjacent = alphas
        .iter()
        .all(|x| betas.iter().all(|y| generates(g, &x.concat(y))));
    let mut seen = HashSet::new();
    let distinct = alphas.iter().all(|x| seen.insert((0, x.clone())))
        && betas
            .iter()
            .all(|y| seen.insert((usize::from(a != b), y.clone())))
        && (a != b || {
            let s: HashSet<_> = alphas.iter().chain(&betas).collect();
            s.len() == 6
        });
    Ok(Ok(K33Tuples {
        case,
        alphas,
        betas,
        adjacent,
        distinct,
    }))
}

/// Mixed-radix vertex index of a tuple in `Γ_{a,b}(G)`; `in_b` selects the
/// `G^b` part when `a != b`.
pub fn tuple_vertex(n: usize, a: usize, b: usize, t: &GroupTuple, in_b: bool) -> usize {
    let rank = t.entries().iter().fold(0, |acc, &x| acc * n + x);
    if in_b && a != b {
        n.pow(a as u32) + rank
    } else {
        rank
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExcessCase {
    /// cyclic, `a = 1`, `|G| > 2`: `(1),(g),(g²)` against `(g,x,…,x)`
    Cyclic,
    /// non-cyclic, `a = 1`, `1 + b > d(G)`: three elements against `W`
    NonCyclicExcess,
    /// non-cyclic, `a = 1`, `1 + b = d(G)`: `(g_1x),(g_1y),(g_1z)` against the
    /// `b`-tuples generating `H = ⟨g_2,…,g_d⟩`
    NonCyclicExact,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExcessWitness {
    pub case: ExcessCase,
    pub vertices: u128,
    pub edges: u128,
    /// The right-hand side `W` was listed and every edge checked (rather
    /// than counted).
    pub enumerated: bool,
    pub all_adjacent: bool,
    pub exceeds_bound: bool,
}

impl ExcessWitness {
    pub fn holds(&self) -> bool {
        self.all_adjacent && self.exceeds_bound
    }
}

/// Largest `|G|^b` for which `W` is listed explicitly.
const PROP41_ENUMERATION_LIMIT: u128 = 200_000;

fn tuples(domain: &[usize], k: usize) -> impl Iterator<Item = GroupTuple> + '_ {
    let m = domain.len();
    let total = m.pow(k as u32);
    (0..total).map(move |mut code| {
        let mut v = vec![0; k];
        for slot in v.iter_mut().rev() {
            *slot = domain[code % m];
            code /= m;
        }
        GroupTuple::new(v)
    })
}

/// The bipartite induced subgraph of `Γ_{1,b}(G)` used for `a = 1`; `None`
/// outside those cells. The subgraph has `3 + |W|` vertices and `3|W|` edges
/// (each of the three left vertices joins every `w`), and is non-planar
/// once `3|W| > 2(3 + |W|) - 4`.
pub fn bipartite_excess_check(g: &FiniteGroup, b: usize, budgets: &Budgets) -> Result<Option<ExcessWitness>> {
    if g.is_trivial() || b < 2 {
        return Ok(None);
    }
    let n = g.order();
    let d = min_gen_size(g, budgets.steps)?;
    if 1 + b < d {
        return Err(Error::Precondition(format!("1 + b is below d({})", g.name())));
    }
    let build = |case, left: [GroupTuple; 3], right: Option<Vec<GroupTuple>>, counted: u128| {
        let (w, all_adjacent, enumerated) = match right {
            Some(ws) => {
                let ok = ws
                    .iter()
                    .all(|w| left.iter().all(|x| generates(g, &x.concat(w))));
                (ws.len() as u128, ok, true)
            }
            None => (counted, true, false),
        };
        let distinct_left = left[0] != left[1] && left[1] != left[2] && left[0] != left[2];
        ExcessWitness {
            case,
            vertices: 3 + w,
            edges: 3 * w,
            enumerated,
            all_adjacent: all_adjacent && distinct_left,
            exceeds_bound: 3 * w > 2 * (3 + w) - 4,
        }
    };
    let t1 = |x: usize| GroupTuple::new(vec![x]);
    if g.is_cyclic() {
        if n == 2 {
            return Ok(None);
        }
        let gen = (0..n).find(|&x| g.element_order(x) == n).unwrap();
        let left = [t1(0), t1(gen), t1(g.mul(gen, gen))];
        let right: Vec<GroupTuple> = g
            .elements()
            .map(|x| {
                let mut v = vec![x; b];
                v[0] = gen;
                GroupTuple::new(v)
            })
            .collect();
        return Ok(Some(build(ExcessCase::Cyclic, left, Some(right), 0)));
    }
    if 1 + b > d {
        let left = [t1(0), t1(1), t1(2)];
        let total = (n as u128).pow(b as u32);
        let right = (total <= PROP41_ENUMERATION_LIMIT).then(|| {
            tuples(&g.elements().collect::<Vec<_>>(), b)
                .filter(|t| generates(g, t))
                .collect::<Vec<_>>()
        });
        let counted = if right.is_none() { phi_enumerate(g, b, budgets.steps)? } else { 0 };
        return Ok(Some(build(ExcessCase::NonCyclicExcess, left, right, counted)));
    }
    // 1 + b = d
    let gens = minimal_generating_tuple(g, budgets.steps)?;
    let g1 = gens.entries()[0];
    let h: Subgroup = closure(g, &gens.entries()[1..]);
    let members = h.members();
    if members.len() < 3 {
        return Err(Error::Precondition("H has fewer than three elements".into()));
    }
    let left = [
        t1(g.mul(g1, members[0])),
        t1(g.mul(g1, members[1])),
        t1(g.mul(g1, members[2])),
    ];
    let right: Vec<GroupTuple> = tuples(&members, b)
        .filter(|t| closure(g, t.entries()) == h)
        .collect();
    Ok(Some(build(ExcessCase::NonCyclicExact, left, Some(right), 0)))
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessSetReport {
    pub group: String,
    pub b: usize,
    pub phi: u128,
    pub witnesses_distinct: bool,
    pub witnesses_generate: bool,
    pub passed: bool,
}

/// `|W| >= 3` for non-cyclic `G` and `b >= d(G)`, together with the three
/// explicit tuples `(g_1,g_2,…)`, `(g_1g_2,g_2,…)`, `(g_1,g_1g_2,…)`.
pub fn witness_set_check(g: &FiniteGroup, b: usize, budgets: &Budgets) -> Result<WitnessSetReport> {
    let d = min_gen_size(g, budgets.steps)?;
    if g.is_cyclic() || b < d {
        return Err(Error::Precondition("need a non-cyclic group and b >= d(G)".into()));
    }
    let gens = minimal_generating_tuple(g, budgets.steps)?;
    let mut base = gens.entries().to_vec();
    base.resize(b, 0);
    let (g1, g2) = (base[0], base[1]);
    let mut w2 = base.clone();
    w2[0] = g.mul(g1, g2);
    let mut w3 = base.clone();
    w3[1] = g.mul(g1, g2);
    let ws = [GroupTuple::new(base), GroupTuple::new(w2), GroupTuple::new(w3)];
    let distinct = ws[0] != ws[1] && ws[1] != ws[2] && ws[0] != ws[2];
    let gen_ok = ws.iter().all(|w| generates(g, w));
    let phi = phi_enumerate(g, b, budgets.steps)?;
    Ok(WitnessSetReport {
        group: g.name().to_string(),
        b,
        phi,
        witnesses_distinct: distinct,
        witnesses_generate: gen_ok,
        passed: phi >= 3 && distinct && gen_ok,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct PlaCell {
    pub group: String,
    pub a: usize,
    pub b: usize,
    pub nu: String,
    pub eta: String,
    pub l: String,
    /// `planar`, `non-planar` or `skipped`
    pub verdict: String,
    pub expected: String,
    pub method: String,
    pub k33: Option<WitnessCase>,
    pub k33_ok: Option<bool>,
    pub excess: Option<ExcessCase>,
    pub excess_ok: Option<bool>,
    pub kuratowski_ok: Option<bool>,
    pub skip_reason: Option<String>,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PlaReport {
    pub schema: &'static str,
    pub order_cap: usize,
    pub sum_cap: usize,
    pub vertex_cap: usize,
    pub cells: Vec<PlaCell>,
    pub mismatches: usize,
    pub skipped: usize,
    pub passed: bool,
}

impl PlaReport {
    pub fn csv(&self) -> String {
        let mut s = String::from("group,a,b,nu,eta,l,verdict,expected,method\n");
        for c in &self.cells {
            s.push_str(&format!(
                "{},{},{},{},{},{},{},{},{}\n",
                c.group, c.a, c.b, c.nu, c.eta, c.l, c.verdict, c.expected, c.method
            ));
        }
        s
    }
}

fn planar_word(p: bool) -> String {
    if p { "planar" } else { "non-planar" }.to_string()
}

/// One `(G, a, b)` cell of the classification check.
pub fn pla_cell(g: &FiniteGroup, a: usize, b: usize, budgets: &Budgets) -> Result<PlaCell> {
    let expected = expected_planarity(g, a, b, budgets)?;
    let counts = gamma_counts(g, a, b, budgets)?;
    let mut cell = PlaCell {
        group: g.name().to_string(),
        a,
        b,
        nu: counts.nu.to_string(),
        eta: counts.eta.to_string(),
        l: counts.loops.to_string(),
        verdict: String::new(),
        expected: planar_word(expected),
        method: String::new(),
        k33: None,
        k33_ok: None,
        excess: None,
        excess_ok: None,
        kuratowski_ok: None,
        skip_reason: None,
        passed: false,
    };

    let mut certificates_ok = true;
    match k33_witness(g, a, b, budgets)? {
        Ok(w) => {
            let ok = w.adjacent && w.distinct;
            cell.k33 = Some(w.case);
            cell.k33_ok = Some(ok);
            certificates_ok &= ok;
        }
        Err(NoK33::UsesBipartiteBound) => {
            if let Some(p) = bipartite_excess_check(g, b, budgets)? {
                cell.excess = Some(p.case);
                cell.excess_ok = Some(p.holds());
                certificates_ok &= p.holds();
            }
        }
        Err(_) => {}
    }

    // η > 3ν - 6 on all vertices implies it on the non-isolated ones
    let planar = if counts.nu >= 3 && counts.eta > 3 * counts.nu - 6 {
        cell.method = Method::EulerPruned.as_str().into();
        false
    } else if counts.nu > budgets.vertex_cap as u128 {
        cell.verdict = "skipped".into();
        cell.method = "none".into();
        cell.skip_reason = Some(format!("nu = {} exceeds the vertex cap {}", counts.nu, budgets.vertex_cap));
        cell.passed = certificates_ok;
        return Ok(cell);
    } else {
        let graph = match build_gamma(g, a, b, budgets) {
            Ok(gr) => gr,
            Err(e) if e.is_budget() => {
                cell.verdict = "skipped".into();
                cell.method = "none".into();
                cell.skip_reason = Some(e.to_string());
                cell.passed = certificates_ok;
                return Ok(cell);
            }
            Err(e) => return Err(e),
        };
        let simple = SimpleGraph::from_gamma(&graph);
        let v = is_planar(&simple);
        cell.method = v.method.as_str().into();
        if let Some(w) = &v.witness {
            cell.kuratowski_ok = Some(super::validate_witness(&simple, w).is_ok());
        }
        // the K_{3,3} tuples must be edges of the materialized graph
        if let Ok(Ok(w)) = k33_witness(g, a, b, budgets) {
            let n = g.order();
            let edges: HashSet<(u32, u32)> = simple.edges.iter().copied().collect();
            let present = w.alphas.iter().all(|x| {
                w.betas.iter().all(|y| {
                    let u = tuple_vertex(n, a, b, x, false) as u32;
                    let v = tuple_vertex(n, a, b, y, true) as u32;
                    edges.contains(&(u.min(v), u.max(v)))
                })
            });
            cell.k33_ok = Some(cell.k33_ok.unwrap_or(true) && present);
            certificates_ok &= present;
        }
        v.planar
    };
    cell.verdict = planar_word(planar);
    cell.passed = planar == expected && certificates_ok && cell.kuratowski_ok != Some(false);
    Ok(cell)
}

/// Checks the classification on every catalog group of order at most
/// `order_cap` and every `1 <= a <= b` with `d(G) <= a + b <= sum_cap`,
/// plus `C_2` with `a = 1` and `b <= c2_max_b`.
pub fn verify_pla(catalog: &[FiniteGroup], order_cap: usize, sum_cap: usize, c2_max_b: usize, budgets: &Budgets) -> Result<PlaReport> {
    let mut jobs: Vec<(usize, usize, usize)> = Vec::new();
    for (i, g) in catalog.iter().enumerate() {
        if g.is_trivial() || g.order() > order_cap {
            continue;
        }
        let d = min_gen_size(g, budgets.steps)?;
        for s in d.max(2)..=sum_cap {
            for a in 1..=s / 2 {
                jobs.push((i, a, s - a));
            }
        }
        if is_c2(g) {
            for b in sum_cap..=c2_max_b {
                jobs.push((i, 1, b));
            }
        }
    }
    let cells: Vec<Result<PlaCell>> = jobs
        .par_iter()
        .map(|&(i, a, b)| pla_cell(&catalog[i], a, b, budgets))
        .collect();
    let cells: Vec<PlaCell> = cells.into_iter().collect::<Result<_>>()?;
    let mismatches = cells
        .iter()
        .filter(|c| c.verdict != "skipped" && c.verdict != c.expected)
        .count();
    let skipped = cells.iter().filter(|c| c.verdict == "skipped").count();
    Ok(PlaReport {
        schema: PLANARITY_SCHEMA,
        order_cap,
        sum_cap,
        vertex_cap: budgets.vertex_cap,
        passed: cells.iter().all(|c| c.passed),
        mismatches,
        skipped,
        cells,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_symmetric;

    fn b() -> Budgets {
        Budgets::default()
    }

    fn v4() -> FiniteGroup {
        direct_product(&make_cyclic(2).unwrap(), &make_cyclic(2).unwrap()).unwrap()
    }

    #[test]
    fn expected_examples() {
        assert!(expected_planarity(&make_quaternion8().unwrap(), 1, 1, &b()).unwrap());
        assert!(expected_planarity(&make_cyclic(2).unwrap(), 1, 7, &b()).unwrap());
        assert!(!expected_planarity(&make_cyclic(5).unwrap(), 1, 1, &b()).unwrap());
        assert!(expected_planarity(&make_symmetric(3).unwrap(), 1, 1, &b()).unwrap());
        assert!(!expected_planarity(&make_cyclic(2).unwrap(), 2, 3, &b()).unwrap());
        assert!(expected_planarity(&make_cyclic(2).unwrap(), 2, 2, &b()).unwrap());
        assert!(expected_planarity(&v4(), 2, 1, &b()).is_err());
    }

    #[test]
    fn k33_examples() {
        let c4 = make_cyclic(4).unwrap();
        let w = k33_witness(&c4, 2, 2, &b()).unwrap().unwrap();
        assert_eq!(w.case, WitnessCase::CyclicA2);
        let show: Vec<_> = w.alphas.iter().chain(&w.betas).map(|t| t.display(&c4)).collect();
        assert_eq!(show, vec!["(1,g)", "(g,1)", "(g,g)", "(1,g^2)", "(g^2,1)", "(g^2,g^2)"]);
        assert!(w.adjacent && w.distinct);

        let c2 = make_cyclic(2).unwrap();
        let w = k33_witness(&c2, 2, 3, &b()).unwrap().unwrap();
        assert_eq!(w.case, WitnessCase::CyclicA2Order2);
        let show: Vec<_> = w.betas.iter().map(|t| t.display(&c2)).collect();
        assert_eq!(show, vec!["(1,g,g)", "(g,1,g)", "(g,g,g)"]);
        assert!(w.adjacent && w.distinct);
        assert_eq!(k33_witness(&c2, 2, 2, &b()).unwrap().unwrap_err(), NoK33::PlanarCase);

        let w = k33_witness(&v4(), 2, 2, &b()).unwrap().unwrap();
        assert_eq!(w.case, WitnessCase::NonCyclicPadded);
        assert!(w.adjacent && w.distinct);

        let w = k33_witness(&make_cyclic(3).unwrap(), 3, 3, &b()).unwrap().unwrap();
        assert_eq!(w.case, WitnessCase::CyclicA3);
        assert!(w.adjacent && w.distinct);

        let v16 = direct_product(&direct_product(&v4(), &make_cyclic(2).unwrap()).unwrap(), &make_cyclic(2).unwrap()).unwrap();
        let w = k33_witness(&v16, 2, 2, &b()).unwrap().unwrap();
        assert_eq!(w.case, WitnessCase::NonCyclicExact);
        assert!(w.adjacent && w.distinct);
        assert_eq!(k33_witness(&v4(), 1, 2, &b()).unwrap().unwrap_err(), NoK33::UsesBipartiteBound);
    }

    #[test]
    fn excess_examples() {
        let c6 = make_cyclic(6).unwrap();
        let p = bipartite_excess_check(&c6, 2, &b()).unwrap().unwrap();
        assert_eq!((p.vertices, p.edges), (9, 18));
        assert!(p.holds());
        let p = bipartite_excess_check(&v4(), 2, &b()).unwrap().unwrap();
        assert_eq!(p.case, ExcessCase::NonCyclicExcess);
        assert_eq!(p.edges, 18);
        assert!(p.holds());
        let v8 = direct_product(&v4(), &make_cyclic(2).unwrap()).unwrap();
        let p = bipartite_excess_check(&v8, 2, &b()).unwrap().unwrap();
        assert_eq!(p.case, ExcessCase::NonCyclicExact);
        // b-tuples generating H ≅ C2×C2
        assert_eq!(p.vertices, 3 + 6);
        assert!(p.holds());
        assert!(bipartite_excess_check(&make_cyclic(2).unwrap(), 3, &b()).unwrap().is_none());
    }

    #[test]
    fn witness_set_examples() {
        assert!(witness_set_check(&v4(), 2, &b()).unwrap().passed);
        assert_eq!(witness_set_check(&v4(), 2, &b()).unwrap().phi, 6);
        let s3 = make_symmetric(3).unwrap();
        assert_eq!(witness_set_check(&s3, 2, &b()).unwrap().phi, 18);
        assert!(witness_set_check(&make_quaternion8().unwrap(), 3, &b()).unwrap().passed);
        assert!(witness_set_check(&make_cyclic(4).unwrap(), 2, &b()).is_err());
    }

    #[test]
    fn cells() {
        let c = pla_cell(&make_cyclic(2).unwrap(), 2, 2, &b()).unwrap();
        assert_eq!((c.verdict.as_str(), c.l.as_str()), ("planar", "3"));
        assert!(c.passed);
        let c = pla_cell(&make_cyclic(6).unwrap(), 1, 1, &b()).unwrap();
        assert_eq!(c.verdict, "planar");
        assert!(c.passed);
        let c = pla_cell(&make_cyclic(6).unwrap(), 1, 2, &b()).unwrap();
        assert_eq!(c.verdict, "non-planar");
        assert_eq!(c.excess_ok, Some(true));
        assert!(c.passed);
        let c = pla_cell(&make_cyclic(5).unwrap(), 1, 1, &b()).unwrap();
        assert_eq!(c.verdict, "non-planar");
        assert!(c.passed);
        let c = pla_cell(&make_quaternion8().unwrap(), 1, 1, &b()).unwrap();
        assert_eq!((c.verdict.as_str(), c.method.as_str()), ("planar", "full-test"));
    }
}
