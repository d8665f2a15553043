//! Generating-tuple statistics: `φ_G(d)`, `P_G(d)`, `α(G,d)`, `ρ(G)`,
//! Gaschütz relative counts, and the checks built on them.

use crate::config::Budgets;
use crate::error::{Error, Result};
use crate::group::{
    all_subgroups, chief_series, commutator_square_subgroup, complements, generates,
    is_normal, min_gen_size, minimal_normal_subgroups, quotient, BudgetHit, ChiefSeriesFactor,
    ClosureCache, FiniteGroup, GroupTuple, Subgroup, TieBreak,
};
use crate::rational::{e_lower, int, pow_int, ratio, RatValue};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

fn budget(what: &'static str, limit: u64, depth: usize) -> impl FnOnce(BudgetHit) -> Error {
    move |_| Error::Budget { what, limit, depth }
}

/// `φ_G(d)` by depth-first extension of tuples.
///
/// The running closure is carried down the tuple; once it is the whole group
/// the remaining positions are counted in bulk, and sub-counts are shared
/// between prefixes with the same closure.
pub fn phi_enumerate(g: &FiniteGroup, d: usize, steps: u64) -> Result<u128> {
    let mut cache = ClosureCache::new(g, steps);
    cache
        .completions(ClosureCache::TRIVIAL, d as u32)
        .map_err(budget("phi_enumerate", steps, d))
}

/// [`phi_enumerate`] split across the worker pool by first coordinate.
/// Each worker gets its own closure cache and the full step budget; partial
/// counts are summed in coordinate order.
pub fn phi_enumerate_parallel(g: &FiniteGroup, d: usize, steps: u64) -> Result<u128> {
    use rayon::prelude::*;
    if d == 0 {
        return phi_enumerate(g, 0, steps);
    }
    let parts: Vec<Result<u128>> = g
        .elements()
        .into_par_iter()
        .map(|x| {
            let mut cache = ClosureCache::new(g, steps);
            cache
                .extend(ClosureCache::TRIVIAL, x)
                .and_then(|id| cache.completions(id, (d - 1) as u32))
                .map_err(budget("phi_enumerate", steps, d))
        })
        .collect();
    parts.into_iter().sum()
}

/// Möbius function `μ(H, G)` for every subgroup `H`, in lattice order.
pub fn mobius_values(g: &FiniteGroup, cap: usize) -> Result<Vec<(Subgroup, i64)>> {
    let subs = all_subgroups(g, cap)?;
    let mut mu = vec![0i64; subs.len()];
    // subs is sorted by order, so the whole group is last
    for i in (0..subs.len()).rev() {
        if subs[i].is_whole() {
            mu[i] = 1;
            continue;
        }
        let s: i64 = (i + 1..subs.len())
            .filter(|&j| subs[j].order() > subs[i].order() && subs[i].is_subgroup_of(&subs[j]))
            .map(|j| mu[j])
            .sum();
        mu[i] = -s;
    }
    Ok(subs.into_iter().zip(mu).collect())
}

/// `φ_G(d) = Σ_{H ≤ G} μ(H, G) |H|^d`.
pub fn phi_mobius(g: &FiniteGroup, d: usize, cap: usize) -> Result<u128> {
    let total: BigInt = mobius_values(g, cap)?
        .iter()
        .map(|(h, mu)| BigInt::from(*mu) * pow_int(h.order() as u128, d as u32))
        .sum();
    total
        .to_u128()
        .ok_or_else(|| Error::Precondition(format!("Möbius sum {total} is not a valid count")))
}

#[derive(Clone, Debug, PartialEq)]
pub struct GenStats {
    pub group: String,
    pub order: usize,
    pub d: usize,
    pub phi: u128,
    /// `P_G(d) = φ_G(d) / |G|^d`
    pub prob: BigRational,
    /// `α(G,d) = φ_G(d) / |G|^(d-1)`
    pub alpha: BigRational,
}

impl GenStats {
    pub fn from_phi(g: &FiniteGroup, d: usize, phi: u128) -> Self {
        let n = g.order() as u128;
        let prob = ratio(BigInt::from(phi), pow_int(n, d as u32));
        let alpha = &prob * int(BigInt::from(n));
        GenStats {
            group: g.name().to_string(),
            order: g.order(),
            d,
            phi,
            prob,
            alpha,
        }
    }
}

pub fn gen_stats(g: &FiniteGroup, d: usize, budgets: &Budgets) -> Result<GenStats> {
    Ok(GenStats::from_phi(g, d, phi_enumerate(g, d, budgets.steps)?))
}

/// `α(G, d)` as an exact rational.
pub fn alpha(g: &FiniteGroup, d: usize, budgets: &Budgets) -> Result<BigRational> {
    Ok(gen_stats(g, d, budgets)?.alpha)
}

/// `ρ(G)`: elements occurring in the first position of some generating
/// `d(G)`-tuple.
pub fn rho(g: &FiniteGroup, budgets: &Budgets) -> Result<usize> {
    let d = min_gen_size(g, budgets.steps)?;
    rho_with_arity(g, d, budgets)
}

pub fn rho_with_arity(g: &FiniteGroup, d: usize, budgets: &Budgets) -> Result<usize> {
    if d == 0 {
        return Ok(usize::from(g.is_trivial()));
    }
    let mut cache = ClosureCache::new(g, budgets.steps);
    let mut count = 0;
    for x in g.elements() {
        let id = cache
            .extend(ClosureCache::TRIVIAL, x)
            .map_err(budget("rho", budgets.steps, 1))?;
        if cache
            .completions(id, (d - 1) as u32)
            .map_err(budget("rho", budgets.steps, d))?
            > 0
        {
            count += 1;
        }
    }
    Ok(count)
}

/// For each position `j`, the number of elements occurring at position `j`
/// of some generating `d`-tuple, by listing every tuple of `G^d`.
pub fn rho_by_position(g: &FiniteGroup, d: usize, max_tuples: u128) -> Result<Vec<usize>> {
    let n = g.order();
    let total = (n as u128).pow(d as u32);
    if total > max_tuples {
        return Err(Error::SizeCap {
            what: "rho_by_position",
            size: total,
            cap: max_tuples,
        });
    }
    let mut seen = vec![vec![false; n]; d];
    let mut t = vec![0usize; d];
    for code in 0..total {
        let mut c = code;
        for slot in t.iter_mut().rev() {
            *slot = (c % n as u128) as usize;
            c /= n as u128;
        }
        if generates(g, &GroupTuple::new(t.clone())) {
            for (j, &x) in t.iter().enumerate() {
                seen[j][x] = true;
            }
        }
    }
    Ok(seen.iter().map(|s| s.iter().filter(|&&b| b).count()).collect())
}

/// True iff `⟨t⟩N = G`.
pub fn generates_modulo(g: &FiniteGroup, n: &Subgroup, t: &GroupTuple) -> bool {
    let mut gens: Vec<usize> = n.iter().collect();
    gens.extend_from_slice(t.entries());
    crate::group::closure(g, &gens).is_whole()
}

/// The lexicographically first `k`-tuple generating `G` modulo `N`.
pub fn lifting_tuple(g: &FiniteGroup, n: &Subgroup, k: usize) -> Option<GroupTuple> {
    let total = (g.order() as u128).checked_pow(k as u32)?;
    let mut t = vec![0usize; k];
    for code in 0..total {
        let mut c = code;
        for slot in t.iter_mut().rev() {
            *slot = (c % g.order() as u128) as usize;
            c /= g.order() as u128;
        }
        let tuple = GroupTuple::new(t.clone());
        if generates_modulo(g, n, &tuple) {
            return Some(tuple);
        }
    }
    None
}

/// `|Φ_N(g_1,…,g_k)|`: tuples `(n_1,…,n_k) ∈ N^k` with `⟨g_1n_1,…,g_kn_k⟩ = G`.
pub fn gaschutz_count(g: &FiniteGroup, n: &Subgroup, t: &GroupTuple, budgets: &Budgets) -> Result<u128> {
    if !is_normal(g, n) {
        return Err(Error::NotNormal {
            group: g.name().to_string(),
        });
    }
    if !t.is_over(g) || !generates_modulo(g, n, t) {
        return Err(Error::Precondition(format!(
            "tuple {:?} does not generate {} modulo N",
            t.entries(),
            g.name()
        )));
    }
    let k = t.arity();
    let work = (n.order() as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if work > budgets.steps as u128 {
        return Err(Error::SizeCap {
            what: "gaschutz_count",
            size: work,
            cap: budgets.steps as u128,
        });
    }
    let members = n.members();
    let mut cache = ClosureCache::new(g, budgets.steps);
    let mut memo = std::collections::HashMap::new();
    count_corrections(&mut cache, &mut memo, t.entries(), &members, ClosureCache::TRIVIAL, 0)
        .map_err(budget("gaschutz_count", budgets.steps, k))
}

fn count_corrections(
    cache: &mut ClosureCache<'_>,
    memo: &mut std::collections::HashMap<(u32, usize), u128>,
    base: &[usize],
    members: &[usize],
    id: u32,
    pos: usize,
) -> Result<u128, BudgetHit> {
    let remaining = base.len() - pos;
    if cache.is_whole(id) {
        return Ok((members.len() as u128).pow(remaining as u32));
    }
    if remaining == 0 {
        return Ok(0);
    }
    if let Some(&c) = memo.get(&(id, pos)) {
        return Ok(c);
    }
    let g = cache.group();
    let mut total = 0;
    for &m in members {
        let next = cache.extend(id, g.mul(base[pos], m))?;
        total += count_corrections(cache, memo, base, members, next, pos + 1)?;
    }
    memo.insert((id, pos), total);
    Ok(total)
}

/// Relative statistics of a normal subgroup at arity `k`.
#[derive(Clone, Debug)]
pub struct RelativeStats {
    pub n: Subgroup,
    pub k: usize,
    pub gaschutz_count: u128,
    /// `P_{G,N}(k) = |Φ_N| / |N|^k`
    pub p_gn: BigRational,
    /// `α(G,N,k) = P_{G,N}(k) |N|`
    pub alpha_rel: BigRational,
    pub complement_count: Option<usize>,
}

pub fn relative_stats(g: &FiniteGroup, n: &Subgroup, k: usize, budgets: &Budgets) -> Result<RelativeStats> {
    let t = lifting_tuple(g, n, k).ok_or_else(|| {
        Error::Precondition(format!("no {k}-tuple generates {} modulo N", g.name()))
    })?;
    let count = gaschutz_count(g, n, &t, budgets)?;
    let p_gn = ratio(BigInt::from(count), pow_int(n.order() as u128, k as u32));
    let alpha_rel = &p_gn * int(n.order() as u64);
    let complement_count = if n.is_abelian(g) && minimal_normal_subgroups(g, budgets.subgroup_order_cap)?.contains(n) {
        Some(complements(g, n, budgets.subgroup_order_cap)?.len())
    } else {
        None
    };
    Ok(RelativeStats {
        n: n.clone(),
        k,
        gaschutz_count: count,
        p_gn,
        alpha_rel,
        complement_count,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct IndependenceReport {
    pub group: String,
    pub n_order: usize,
    pub k: usize,
    pub tuples_checked: usize,
    pub sampled: bool,
    pub counts: Vec<u128>,
    pub passed: bool,
}

/// Above this many lifting tuples, a seeded sample is checked instead.
pub const INDEPENDENCE_FULL_LIMIT: usize = 4096;
pub const INDEPENDENCE_SAMPLE: usize = 256;

/// Checks that `|Φ_N(g)|` is the same for every `k`-tuple `g` generating `G`
/// modulo `N` (or for a seeded random sample when there are too many).
pub fn gaschutz_independence_check(g: &FiniteGroup, n: &Subgroup, k: usize, budgets: &Budgets) -> Result<IndependenceReport> {
    let total = (g.order() as u128).pow(k as u32);
    let mut lifts = Vec::new();
    let mut t = vec![0usize; k];
    for code in 0..total {
        let mut c = code;
        for slot in t.iter_mut().rev() {
            *slot = (c % g.order() as u128) as usize;
            c /= g.order() as u128;
        }
        let tuple = GroupTuple::new(t.clone());
        if generates_modulo(g, n, &tuple) {
            lifts.push(tuple);
        }
    }
    let sampled = lifts.len() > INDEPENDENCE_FULL_LIMIT;
    if sampled {
        let mut rng = ChaCha8Rng::seed_from_u64(0x6761_7363);
        lifts.shuffle(&mut rng);
        lifts.truncate(INDEPENDENCE_SAMPLE);
    }
    let mut counts = Vec::new();
    for t in &lifts {
        let c = gaschutz_count(g, n, t, budgets)?;
        if !counts.contains(&c) {
            counts.push(c);
        }
    }
    Ok(IndependenceReport {
        group: g.name().to_string(),
        n_order: n.order(),
        k,
        tuples_checked: lifts.len(),
        sampled,
        passed: counts.len() == 1,
        counts,
    })
}

/// Which clause of the minimal-abelian-normal-subgroup trichotomy applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MinabCase {
    /// `|N| = 2`, complemented, `G/N` maps onto `C_2^{d-1}`: `α = 1`.
    One,
    /// `|N| = 2`, complemented, no such map: `α >= 3/2`.
    Two,
    /// everything else: `α >= 2`.
    Three,
}

#[derive(Clone, Debug, Serialize)]
pub struct MinabReport {
    pub group: String,
    pub n_order: usize,
    pub p: u64,
    pub a: u32,
    pub d: usize,
    pub complement_count: usize,
    pub alpha_brute: RatValue,
    pub alpha_formula: RatValue,
    pub alpha_ratio: RatValue,
    pub lower_bound: RatValue,
    pub case: MinabCase,
    /// `(t, 2 - 2^{t-d+1})` for complemented `N` of order 2.
    pub two_rank_formula: Option<(u32, RatValue)>,
    pub formula_matches: bool,
    pub ratio_matches: bool,
    pub bound_holds: bool,
    pub case_holds: bool,
    pub two_rank_matches: bool,
    pub passed: bool,
}

/// Checks the closed form `α(G,N,d) = (p^{da} - c)/p^{(d-1)a}`, the bound
/// `α >= p^{a-1}(p-1)`, the three-way case split, and for complemented
/// `N` of order 2 the identity `α = 2 - 2^{t-d+1}`.
pub fn verify_minab(g: &FiniteGroup, n: &Subgroup, d: usize, budgets: &Budgets) -> Result<MinabReport> {
    let cap = budgets.subgroup_order_cap;
    if !n.is_abelian(g) || !minimal_normal_subgroups(g, cap)?.contains(n) {
        return Err(Error::Precondition("N must be minimal normal and abelian".into()));
    }
    let (p, a) = crate::group::prime_power_of(n.order())
        .ok_or_else(|| Error::Precondition("abelian minimal normal subgroup of non-prime-power order".into()))?;
    let rel = relative_stats(g, n, d, budgets)?;
    let c = rel.complement_count.expect("minimal abelian");
    let brute = rel.alpha_rel.clone();

    let pa = pow_int(p as u128, a);
    let formula = ratio(
        num_traits::pow(pa.clone(), d) - BigInt::from(c),
        num_traits::pow(pa.clone(), d - 1),
    );
    let q = quotient(g, n)?;
    let ratio_val = alpha(g, d, budgets)? / alpha(&q.group, d, budgets)?;
    let lower = int(pow_int(p as u128, a - 1) * BigInt::from(p - 1));

    let (_, rank_q) = commutator_square_subgroup(&q.group, &Subgroup::whole(&q.group));
    let case = if n.order() == 2 && c > 0 && rank_q as usize + 1 >= d {
        MinabCase::One
    } else if n.order() == 2 && c > 0 {
        MinabCase::Two
    } else {
        MinabCase::Three
    };
    let case_holds = match case {
        MinabCase::One => brute == int(1),
        MinabCase::Two => brute >= ratio(3, 2) && brute != int(1),
        MinabCase::Three => brute >= int(2) && brute != int(1),
    };

    let mut two_rank_formula = None;
    let mut two_rank_matches = true;
    if n.order() == 2 && c > 0 {
        let h = complements(g, n, cap)?.remove(0);
        let (_, t) = commutator_square_subgroup(g, &h);
        // 2 - 2^{t-d+1}, with t < d
        let value = if (t as usize) < d {
            int(2) - ratio(BigInt::from(1) << (t as usize), BigInt::from(1) << (d - 1))
        } else {
            int(2)
        };
        two_rank_matches = (t as usize) < d && value == brute;
        two_rank_formula = Some((t, RatValue::from(&value)));
    }

    let formula_matches = formula == brute;
    let ratio_matches = ratio_val == brute;
    let bound_holds = brute >= lower;
    Ok(MinabReport {
        group: g.name().to_string(),
        n_order: n.order(),
        p,
        a,
        d,
        complement_count: c,
        alpha_brute: RatValue::from(&brute),
        alpha_formula: RatValue::from(&formula),
        alpha_ratio: RatValue::from(&ratio_val),
        lower_bound: RatValue::from(&lower),
        case,
        two_rank_formula,
        passed: formula_matches && ratio_matches && bound_holds && case_holds && two_rank_matches,
        formula_matches,
        ratio_matches,
        bound_holds,
        case_holds,
        two_rank_matches,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorRow {
    pub factor_order: usize,
    pub abelian: bool,
    pub complement_count: Option<usize>,
    pub alpha: RatValue,
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorizationReport {
    pub group: String,
    pub d: usize,
    pub alpha: RatValue,
    pub product: RatValue,
    pub factors: Vec<FactorRow>,
    pub passed: bool,
}

/// Chief series with every factor's `α(G/X_{i+1}, X_i/X_{i+1}, d)` filled in.
pub fn annotated_chief_series(g: &FiniteGroup, d: usize, tie: TieBreak, budgets: &Budgets) -> Result<Vec<ChiefSeriesFactor>> {
    let mut factors = chief_series(g, budgets.subgroup_order_cap, tie)?;
    for f in &mut factors {
        let q = quotient(g, &f.lower)?;
        let image = q.image(&f.upper);
        f.alpha_rel = Some(relative_stats(&q.group, &image, d, budgets)?.alpha_rel);
    }
    Ok(factors)
}

/// Checks `α(G,d) = ∏ α_i` along a chief series.
pub fn alpha_factorization_check(g: &FiniteGroup, d: usize, tie: TieBreak, budgets: &Budgets) -> Result<FactorizationReport> {
    let factors = annotated_chief_series(g, d, tie, budgets)?;
    let total = alpha(g, d, budgets)?;
    let product = factors
        .iter()
        .fold(int(1), |acc, f| acc * f.alpha_rel.as_ref().unwrap());
    Ok(FactorizationReport {
        group: g.name().to_string(),
        d,
        alpha: RatValue::from(&total),
        product: RatValue::from(&product),
        passed: total == product,
        factors: factors
            .iter()
            .map(|f| FactorRow {
                factor_order: f.factor_order,
                abelian: f.is_abelian,
                complement_count: f.complement_count,
                alpha: RatValue::from(f.alpha_rel.as_ref().unwrap()),
            })
            .collect(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct NonAbelianFactorRow {
    pub group: String,
    pub factor_order: usize,
    pub alpha: RatValue,
    /// An upper bound for `(9/10)(53|B|/(90e))`, computed with `e` rounded down.
    pub bound: RatValue,
    pub holds: bool,
}

/// For each non-abelian chief factor `B` that is the only non-abelian factor
/// of its order in the series, checks `α_i >= (9/10)(53|B|/(90e))`.
pub fn nonabelian_factor_check(g: &FiniteGroup, d: usize, budgets: &Budgets) -> Result<Vec<NonAbelianFactorRow>> {
    let factors = annotated_chief_series(g, d, TieBreak::Smallest, budgets)?;
    let mut rows = Vec::new();
    for f in factors.iter().filter(|f| !f.is_abelian) {
        let same = factors
            .iter()
            .filter(|x| !x.is_abelian && x.factor_order == f.factor_order)
            .count();
        if same != 1 {
            continue;
        }
        let b = f.factor_order as i64;
        let bound = ratio(9, 10) * ratio(53 * b, 90) / e_lower();
        let a = f.alpha_rel.clone().unwrap();
        rows.push(NonAbelianFactorRow {
            group: g.name().to_string(),
            factor_order: f.factor_order,
            holds: a >= bound,
            alpha: RatValue::from(&a),
            bound: RatValue::from(&bound),
        });
    }
    Ok(rows)
}

#[derive(Clone, Debug, Serialize)]
pub struct MainTheoremRow {
    pub group: String,
    pub order: usize,
    pub d: usize,
    pub phi: String,
    pub alpha: RatValue,
    /// `4 φ_G(d)^2`
    pub lhs: String,
    /// `|G|^{2d-1}`
    pub rhs: String,
    pub holds: bool,
}

/// `α(G,d) >= √|G|/2` in the squared form `4φ² >= |G|^{2d-1}`.
pub fn main_theorem_row(g: &FiniteGroup, d: usize, budgets: &Budgets) -> Result<MainTheoremRow> {
    if g.is_trivial() || d == 0 {
        return Err(Error::Precondition("main theorem check needs a nontrivial group and d >= 1".into()));
    }
    let stats = gen_stats(g, d, budgets)?;
    let phi = BigInt::from(stats.phi);
    let lhs = BigInt::from(4) * &phi * &phi;
    let rhs = pow_int(g.order() as u128, (2 * d - 1) as u32);
    Ok(MainTheoremRow {
        group: g.name().to_string(),
        order: g.order(),
        d,
        phi: phi.to_string(),
        alpha: RatValue::from(&stats.alpha),
        holds: lhs >= rhs,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    })
}

/// Rows for `d = d(G)` and `d = d(G) + 1` for every nontrivial group.
pub fn verify_main_theorem(catalog: &[FiniteGroup], budgets: &Budgets) -> Result<Vec<MainTheoremRow>> {
    let mut rows = Vec::new();
    for g in catalog.iter().filter(|g| !g.is_trivial()) {
        let d0 = min_gen_size(g, budgets.steps)?;
        for d in [d0, d0 + 1] {
            rows.push(main_theorem_row(g, d, budgets)?);
        }
    }
    Ok(rows)
}

#[derive(Clone, Debug, Serialize)]
pub struct CoroRow {
    pub group: String,
    pub order: usize,
    pub d: usize,
    pub rho: usize,
    pub phi: String,
    /// `ρ^d >= φ_G(d)`
    pub rho_power_bound: bool,
    /// `4 ρ^{2d} >= |G|^{2d-1}`
    pub squared_bound: bool,
    pub holds: bool,
}

pub fn coro_row(g: &FiniteGroup, budgets: &Budgets) -> Result<CoroRow> {
    let d = min_gen_size(g, budgets.steps)?;
    let r = rho_with_arity(g, d, budgets)?;
    let phi = BigInt::from(phi_enumerate(g, d, budgets.steps)?);
    let rho_d = pow_int(r as u128, d as u32);
    let first = rho_d >= phi;
    let second = BigInt::from(4) * &rho_d * &rho_d >= pow_int(g.order() as u128, (2 * d - 1) as u32);
    Ok(CoroRow {
        group: g.name().to_string(),
        order: g.order(),
        d,
        rho: r,
        phi: phi.to_string(),
        rho_power_bound: first,
        squared_bound: second,
        holds: first && second,
    })
}

pub fn verify_coro(catalog: &[FiniteGroup], budgets: &Budgets) -> Result<Vec<CoroRow>> {
    catalog
        .iter()
        .filter(|g| !g.is_trivial())
        .map(|g| coro_row(g, budgets))
        .collect()
}

/// Minimal normal subgroups that are abelian.
pub fn minimal_abelian_normal(g: &FiniteGroup, budgets: &Budgets) -> Result<Vec<Subgroup>> {
    Ok(minimal_normal_subgroups(g, budgets.subgroup_order_cap)?
        .into_iter()
        .filter(|n| n.is_abelian(g))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{closure, direct_product, make_alternating, make_cyclic, make_dihedral, make_quaternion8, make_symmetric};

    fn b() -> Budgets {
        Budgets::default()
    }

    // independent brute force: every tuple, closure from scratch
    fn brute_phi(g: &FiniteGroup, d: usize) -> u128 {
        let n = g.order();
        let mut count = 0;
        let mut t = vec![0; d];
        for code in 0..n.pow(d as u32) {
            let mut c = code;
            for slot in t.iter_mut() {
                *slot = c % n;
                c /= n;
            }
            if closure(g, &t).is_whole() {
                count += 1;
            }
        }
        count
    }

    fn v4() -> FiniteGroup {
        direct_product(&make_cyclic(2).unwrap(), &make_cyclic(2).unwrap()).unwrap()
    }

    #[test]
    fn phi_examples() {
        let c2 = make_cyclic(2).unwrap();
        assert_eq!(phi_enumerate(&c2, 1, 100).unwrap(), 1);
        assert_eq!(phi_enumerate(&c2, 2, 100).unwrap(), 3);
        let s3 = make_symmetric(3).unwrap();
        assert_eq!(brute_phi(&s3, 2), 18);
        assert_eq!(phi_enumerate(&s3, 2, 1000).unwrap(), 18);
        let d4 = make_dihedral(4).unwrap();
        assert_eq!(brute_phi(&d4, 2), 24);
        assert_eq!(phi_enumerate(&d4, 2, 1000).unwrap(), 24);
        assert_eq!(phi_enumerate(&c2, 20, 1000).unwrap(), (1 << 20) - 1);
        // the empty tuple generates only the trivial group
        assert_eq!(phi_enumerate(&make_cyclic(1).unwrap(), 0, 10).unwrap(), 1);
        assert_eq!(phi_enumerate(&c2, 0, 10).unwrap(), 0);
    }

    #[test]
    fn phi_budget() {
        let s4 = make_symmetric(4).unwrap();
        assert!(matches!(phi_enumerate(&s4, 3, 50), Err(Error::Budget { depth: 3, .. })));
    }

    #[test]
    fn mobius_examples() {
        assert_eq!(phi_mobius(&make_cyclic(5).unwrap(), 2, 48).unwrap(), 24);
        assert_eq!(phi_mobius(&v4(), 2, 48).unwrap(), 6);
        assert_eq!(phi_mobius(&make_symmetric(3).unwrap(), 2, 48).unwrap(), 18);
    }

    #[test]
    fn three_routes_agree_on_small_groups() {
        let groups = [
            make_cyclic(6).unwrap(),
            v4(),
            make_symmetric(3).unwrap(),
            make_dihedral(4).unwrap(),
            make_quaternion8().unwrap(),
            make_alternating(4).unwrap(),
        ];
        for g in &groups {
            for d in 0..=3 {
                let e = phi_enumerate(g, d, 1_000_000).unwrap();
                assert_eq!(e, phi_enumerate_parallel(g, d, 1_000_000).unwrap());
                assert_eq!(e, phi_mobius(g, d, 48).unwrap(), "{} d={d}", g.name());
                if g.order().pow(d as u32) <= 2000 {
                    assert_eq!(e, brute_phi(g, d), "{} d={d}", g.name());
                }
            }
        }
    }

    #[test]
    fn stats_invariants() {
        let s3 = make_symmetric(3).unwrap();
        let st = gen_stats(&s3, 2, &b()).unwrap();
        assert_eq!(st.prob, ratio(18, 36));
        assert_eq!(st.alpha, int(3));
        assert_eq!(&st.prob * int(36), int(18));
        assert_eq!(gen_stats(&s3, 1, &b()).unwrap().phi, 0);
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(&make_cyclic(6).unwrap(), &b()).unwrap(), 2);
        assert_eq!(rho(&make_symmetric(3).unwrap(), &b()).unwrap(), 5);
        assert_eq!(rho(&make_dihedral(4).unwrap(), &b()).unwrap(), 6);
        assert_eq!(rho(&make_cyclic(2).unwrap(), &b()).unwrap(), 1);
    }

    #[test]
    fn rho_is_position_independent() {
        for g in [make_symmetric(3).unwrap(), make_dihedral(4).unwrap(), make_quaternion8().unwrap(), v4()] {
            let d = min_gen_size(&g, 10_000).unwrap();
            let r = rho_with_arity(&g, d, &b()).unwrap();
            let by_pos = rho_by_position(&g, d, 100_000).unwrap();
            assert!(by_pos.iter().all(|&x| x == r), "{}: {by_pos:?} vs {r}", g.name());
        }
    }

    #[test]
    fn gaschutz_examples() {
        let c4 = make_cyclic(4).unwrap();
        let n = closure(&c4, &[2]);
        assert_eq!(gaschutz_count(&c4, &n, &GroupTuple::new(vec![1]), &b()).unwrap(), 2);

        let g = v4();
        // elements: 0=(1,1) 1=(1,y) 2=(x,1) 3=(x,y)
        let x = closure(&g, &[2]);
        assert_eq!(gaschutz_count(&g, &x, &GroupTuple::new(vec![1, 0]), &b()).unwrap(), 2);

        for g in [make_symmetric(3).unwrap(), make_dihedral(4).unwrap()] {
            let whole = Subgroup::whole(&g);
            assert_eq!(gaschutz_count(&g, &whole, &GroupTuple::new(vec![0, 0]), &b()).unwrap(), phi_enumerate(&g, 2, 10_000).unwrap());
        }
        // precondition
        assert!(gaschutz_count(&c4, &n, &GroupTuple::new(vec![2]), &b()).is_err());
    }

    #[test]
    fn independence_examples() {
        let g = v4();
        let x = closure(&g, &[2]);
        assert!(gaschutz_independence_check(&g, &x, 2, &b()).unwrap().passed);
        let s3 = make_symmetric(3).unwrap();
        let a3 = minimal_normal_subgroups(&s3, 48).unwrap().remove(0);
        assert!(gaschutz_independence_check(&s3, &a3, 2, &b()).unwrap().passed);
        let d4 = make_dihedral(4).unwrap();
        let r = gaschutz_independence_check(&d4, &d4.center(), 2, &b()).unwrap();
        assert!(r.passed);
        assert!(!r.sampled);
    }

    #[test]
    fn relative_stats_match_probability_ratio() {
        let d4 = make_dihedral(4).unwrap();
        let z = d4.center();
        let q = quotient(&d4, &z).unwrap();
        for k in 2..=3 {
            let rel = relative_stats(&d4, &z, k, &b()).unwrap();
            let pg = gen_stats(&d4, k, &b()).unwrap().prob;
            let pq = gen_stats(&q.group, k, &b()).unwrap().prob;
            assert_eq!(rel.p_gn, pg / pq);
            assert_eq!(&rel.p_gn * int(BigInt::from(2u32.pow(k as u32))), int(BigInt::from(rel.gaschutz_count)));
        }
    }

    #[test]
    fn minab_examples() {
        let g = v4();
        let x = closure(&g, &[2]);
        let r = verify_minab(&g, &x, 2, &b()).unwrap();
        assert_eq!(r.complement_count, 2);
        assert_eq!(r.alpha_brute.exact, "1/1");
        assert_eq!(r.case, MinabCase::One);
        assert!(r.passed, "{r:?}");

        let c4 = make_cyclic(4).unwrap();
        let r = verify_minab(&c4, &closure(&c4, &[2]), 1, &b()).unwrap();
        assert_eq!(r.complement_count, 0);
        assert_eq!(r.alpha_brute.exact, "2/1");
        assert_eq!(r.case, MinabCase::Three);
        assert!(r.passed);

        let s3 = make_symmetric(3).unwrap();
        let a3 = minimal_normal_subgroups(&s3, 48).unwrap().remove(0);
        let r = verify_minab(&s3, &a3, 2, &b()).unwrap();
        assert_eq!((r.p, r.a, r.complement_count), (3, 1, 3));
        assert_eq!(r.alpha_brute.exact, "2/1");
        assert_eq!(r.lower_bound.exact, "2/1");
        assert!(r.passed);
    }

    #[test]
    fn factorization_examples() {
        let c6 = make_cyclic(6).unwrap();
        let r = alpha_factorization_check(&c6, 1, TieBreak::Smallest, &b()).unwrap();
        assert_eq!(r.alpha.exact, "2/1");
        assert!(r.passed);

        let s3 = make_symmetric(3).unwrap();
        let r = alpha_factorization_check(&s3, 2, TieBreak::Smallest, &b()).unwrap();
        assert_eq!(r.alpha.exact, "3/1");
        let alphas: Vec<_> = r.factors.iter().map(|f| f.alpha.exact.as_str()).collect();
        assert_eq!(alphas, vec!["3/2", "2/1"]);
        assert!(r.passed);

        let s4 = make_symmetric(4).unwrap();
        for tie in [TieBreak::Smallest, TieBreak::Largest] {
            assert!(alpha_factorization_check(&s4, 2, tie, &b()).unwrap().passed);
        }
    }

    #[test]
    fn main_theorem_and_corollary_examples() {
        let c2 = make_cyclic(2).unwrap();
        let r = main_theorem_row(&c2, 1, &b()).unwrap();
        assert_eq!((r.lhs.as_str(), r.rhs.as_str(), r.holds), ("4", "2", true));
        let s3 = make_symmetric(3).unwrap();
        let r = main_theorem_row(&s3, 2, &b()).unwrap();
        assert_eq!((r.lhs.as_str(), r.rhs.as_str()), ("1296", "216"));
        let r = main_theorem_row(&v4(), 2, &b()).unwrap();
        assert_eq!((r.lhs.as_str(), r.rhs.as_str()), ("144", "64"));
        assert_eq!(r.alpha.exact, "3/2");

        let r = coro_row(&s3, &b()).unwrap();
        assert_eq!((r.rho, r.phi.as_str()), (5, "18"));
        assert!(r.holds);
        let r = coro_row(&make_cyclic(6).unwrap(), &b()).unwrap();
        assert_eq!((r.rho, r.phi.as_str(), r.d), (2, "2", 1));
        assert!(r.holds);
    }

    #[test]
    fn nonabelian_spot_check_a5() {
        let a5 = make_alternating(5).unwrap();
        let budgets = b().with_subgroup_cap(60);
        let rows = nonabelian_factor_check(&a5, 2, &budgets).unwrap();
        assert_eq!(rows.len(), 1);
        // φ_{A5}(2) = 2280, α = 38
        assert_eq!(rows[0].alpha.exact, "38/1");
        assert!(rows[0].holds);
    }
}
