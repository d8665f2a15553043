//! Genus, thickness and crossing-number lower bounds for generating graphs,
//! and the closed-form right-hand sides they are compared against.

mod numeric;
mod radical;

pub use numeric::{
    exp_enclosure, factorial_ratio_check, factorial_ratio_sweep, stirling_sandwich_check,
    StirlingReport,
};
pub use radical::{rational_ge_radical, Radical, RadicalValue};

use crate::config::Budgets;
use crate::count::phi_enumerate;
use crate::error::{Error, Result};
use crate::graph::{build_gamma, gamma_counts};
use crate::group::{min_gen_size, FiniteGroup};
use crate::rational::{ceil, clamp_zero, int, pow_int, ratio, RatValue};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use std::cmp::Ordering;

/// `1 - v/2 + e/6`
pub fn genus_lower(v: u128, e: u128) -> BigRational {
    int(1) - ratio(BigInt::from(v), 2) + ratio(BigInt::from(e), 6)
}

/// `e / (3v - 6)`, for `v >= 3`.
pub fn thickness_lower(v: u128, e: u128) -> Result<BigRational> {
    if v < 3 {
        return Err(Error::Precondition(format!("thickness bound needs v >= 3, got {v}")));
    }
    Ok(ratio(BigInt::from(e), BigInt::from(3 * v - 6)))
}

/// `e³/(29v²) - 35v/29`
pub fn crossing_lower(v: u128, e: u128) -> BigRational {
    let e = BigInt::from(e);
    let v = BigInt::from(v);
    ratio(&e * &e * &e, BigInt::from(29) * &v * &v) - ratio(BigInt::from(35) * v, 29)
}

#[derive(Clone, Debug, PartialEq)]
pub struct StimaRhs {
    pub genus: Radical,
    pub thickness: Radical,
    pub crossing: Radical,
}

/// The right-hand sides `|G|^b/6 (√|G|/16 - 3)`, `√|G|/48` and
/// `|G|^{d+1/2}/(29·2^11) - 70|G|^{d-1}/29`, with `n = |G|`.
pub fn stima_rhs(n: u128, b: usize, d: usize) -> Result<StimaRhs> {
    if n < 2 {
        return Err(Error::Precondition("the bounds need a nontrivial group".into()));
    }
    if b == 0 || d <= b {
        return Err(Error::Precondition(format!("need 1 <= b < d, got b={b}, d={d}")));
    }
    let nb = int(pow_int(n, b as u32));
    let genus = Radical::new(-&nb / int(2), &nb / int(96), n);
    let thickness = Radical::new(int(0), ratio(1, 48), n);
    let crossing = Radical::new(
        -ratio(BigInt::from(70) * pow_int(n, (d - 1) as u32), 29),
        ratio(pow_int(n, d as u32), 29 * 2048),
        n,
    );
    Ok(StimaRhs {
        genus,
        thickness,
        crossing,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub nu: String,
    pub eta: String,
    pub loop_count: String,
    pub genus_lb: RatValue,
    pub genus_ceiling: String,
    pub thickness_lb: Option<RatValue>,
    pub thickness_ceiling: Option<String>,
    pub crossing_lb: RatValue,
    pub crossing_clamped: RatValue,
    pub crossing_negative: bool,
    pub stima_genus_rhs: Option<RadicalValue>,
    pub stima_thickness_rhs: Option<RadicalValue>,
    pub stima_crossing_rhs: Option<RadicalValue>,
}

pub fn bound_report(nu: u128, eta: u128, loops: u128, rhs: Option<&StimaRhs>) -> BoundReport {
    let genus = genus_lower(nu, eta);
    let thick = thickness_lower(nu, eta).ok();
    let cross = crossing_lower(nu, eta);
    let gc = ceil(&genus).max(BigInt::from(0));
    BoundReport {
        nu: nu.to_string(),
        eta: eta.to_string(),
        loop_count: loops.to_string(),
        genus_lb: RatValue::from(&genus),
        genus_ceiling: gc.to_string(),
        thickness_ceiling: thick.as_ref().map(|t| ceil(t).to_string()),
        thickness_lb: thick.as_ref().map(RatValue::from),
        crossing_negative: cross < int(0),
        crossing_clamped: RatValue::from(&clamp_zero(&cross)),
        crossing_lb: RatValue::from(&cross),
        stima_genus_rhs: rhs.map(|r| r.genus.value()),
        stima_thickness_rhs: rhs.map(|r| r.thickness.value()),
        stima_crossing_rhs: rhs.map(|r| r.crossing.value()),
    }
}

/// Bounds for `Γ_{a,b}(G)` from its counts; the theorem's right-hand sides
/// are included when `a + b >= d(G)` and `G` is nontrivial.
pub fn bounds_for(g: &FiniteGroup, a: usize, b: usize, budgets: &Budgets) -> Result<BoundReport> {
    let c = gamma_counts(g, a, b, budgets)?;
    let rhs = if !g.is_trivial() && a + b >= min_gen_size(g, budgets.steps)? {
        Some(stima_rhs(g.order() as u128, b, a + b)?)
    } else {
        None
    };
    Ok(bound_report(c.nu, c.eta, c.loops, rhs.as_ref()))
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainLink {
    pub chain: &'static str,
    pub step: &'static str,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct StimaChainReport {
    pub group: String,
    pub a: usize,
    pub b: usize,
    pub nu: String,
    pub eta: String,
    pub phi: String,
    pub components: Option<usize>,
    pub links: Vec<ChainLink>,
    pub passed: bool,
}

fn q_link(chain: &'static str, step: &'static str, lhs: &BigRational, rhs: &BigRational) -> ChainLink {
    ChainLink {
        chain,
        step,
        lhs: crate::rational::rat_string(lhs),
        rhs: crate::rational::rat_string(rhs),
        holds: lhs >= rhs,
    }
}

fn r_link(chain: &'static str, step: &'static str, lhs: &BigRational, rhs: &Radical) -> ChainLink {
    ChainLink {
        chain,
        step,
        lhs: crate::rational::rat_string(lhs),
        rhs: format!(
            "{} + {}*sqrt({})",
            crate::rational::rat_string(&rhs.rational),
            crate::rational::rat_string(&rhs.coeff),
            rhs.radicand
        ),
        holds: rational_ge_radical(lhs, rhs),
    }
}

/// Checks every link of the three inequality chains with the actual
/// `ν, η, φ_G(d)` of `Γ_{a,b}(G)`, plus the supporting facts
/// `η >= φ_G(d)/4` and `φ_G(a) <= φ_G(2a)/|G|^a`.
///
/// The component count is recorded when the graph fits the vertex budget.
pub fn verify_stima_chain(g: &FiniteGroup, a: usize, b: usize, budgets: &Budgets) -> Result<StimaChainReport> {
    if g.is_trivial() {
        return Err(Error::Precondition("the chain needs a nontrivial group".into()));
    }
    let d = a + b;
    if d < min_gen_size(g, budgets.steps)? {
        return Err(Error::Precondition(format!("a + b = {d} is below d({})", g.name())));
    }
    let n = g.order() as u128;
    let c = gamma_counts(g, a, b, budgets)?;
    let phi = phi_enumerate(g, d, budgets.steps)?;
    let (nu, eta) = (c.nu, c.eta);
    let q = |x: u128| int(BigInt::from(x));
    let nd1 = int(pow_int(n, (d - 1) as u32));
    let nb = int(pow_int(n, b as u32));
    let phi_q = q(phi);
    let rhs = stima_rhs(n, b, d)?;
    let mut links = Vec::new();

    links.push(q_link("support", "eta >= phi(d)/4", &q(eta), &(&phi_q / int(4))));
    if a == b {
        let pa = phi_enumerate(g, a, budgets.steps)?;
        if pa != 0 {
            links.push(q_link(
                "support",
                "phi(2a)/|G|^a >= phi(a)",
                &(&phi_q / int(pow_int(n, a as u32))),
                &q(pa),
            ));
        }
    }
    links.push(q_link("support", "2|G|^(d-1) >= nu", &(int(2) * &nd1), &q(nu)));
    links.push(q_link("support", "nu >= |G|^b", &q(nu), &nb));

    // genus
    let g0 = genus_lower(nu, eta);
    let g1 = (q(eta) - int(3) * q(nu)) / int(6);
    let g2 = &nb / int(6) * (&phi_q / (int(8) * &nd1) - int(3));
    links.push(q_link("genus", "1-v/2+e/6 >= v/6(e/v-3)", &g0, &g1));
    links.push(q_link("genus", "v/6(e/v-3) >= |G|^b/6(phi/(8|G|^(d-1))-3)", &g1, &g2));
    links.push(r_link("genus", "|G|^b/6(phi/(8|G|^(d-1))-3) >= |G|^b/6(sqrt|G|/16-3)", &g2, &rhs.genus));

    // thickness
    let t1 = ratio(BigInt::from(eta), BigInt::from(3 * nu));
    let t2 = &phi_q / (int(24) * &nd1);
    if let Ok(t0) = thickness_lower(nu, eta) {
        links.push(q_link("thickness", "e/(3v-6) >= e/(3v)", &t0, &t1));
    }
    links.push(q_link("thickness", "e/(3v) >= phi/(24|G|^(d-1))", &t1, &t2));
    links.push(r_link("thickness", "phi/(24|G|^(d-1)) >= sqrt|G|/48", &t2, &rhs.thickness));

    // crossing
    let c0 = crossing_lower(nu, eta);
    let seventy = int(70) * &nd1 / int(29);
    let c1 = &phi_q * &phi_q * &phi_q / (int(29 * 64 * 4) * &nd1 * &nd1) - &seventy;
    let c2 = &phi_q * q(n) / int(29 * 1024) - &seventy;
    links.push(q_link("crossing", "e^3/(29v^2)-35v/29 >= phi^3/(29*4^4*|G|^(2d-2))-70|G|^(d-1)/29", &c0, &c1));
    links.push(q_link("crossing", "... >= phi|G|/(29*4^5)-70|G|^(d-1)/29", &c1, &c2));
    links.push(r_link("crossing", "... >= |G|^(d+1/2)/(29*2^11)-70|G|^(d-1)/29", &c2, &rhs.crossing));

    let components = if nu <= budgets.vertex_cap as u128 {
        build_gamma(g, a, b, budgets).ok().map(|gr| gr.component_count())
    } else {
        None
    };
    Ok(StimaChainReport {
        group: g.name().to_string(),
        a,
        b,
        nu: nu.to_string(),
        eta: eta.to_string(),
        phi: phi.to_string(),
        components,
        passed: links.iter().all(|l| l.holds),
        links,
    })
}

/// True iff `genus_lower`, `thickness_lower` and `crossing_lower` are
/// non-decreasing in `e` at `(v, e)`.
pub fn monotone_in_edges(v: u128, e: u128) -> bool {
    let step = |f: &dyn Fn(u128) -> BigRational| f(e + 1).cmp(&f(e)) != Ordering::Less;
    step(&|x| genus_lower(v, x))
        && step(&|x| crossing_lower(v, x))
        && (v < 3 || step(&|x| thickness_lower(v, x).unwrap()))
}
