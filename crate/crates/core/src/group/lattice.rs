use super::subgroup::close_in_place;
use super::{closure, ElemSet, FiniteGroup, Subgroup};
use crate::error::{Error, Result};
use std::collections::HashSet;

fn check_lattice_cap(what: &'static str, g: &FiniteGroup, cap: usize) -> Result<()> {
    if g.order() > cap {
        return Err(Error::OrderCap {
            what,
            order: g.order(),
            cap,
        });
    }
    Ok(())
}

/// Every subgroup of `g`, sorted by order and then lexicographically.
///
/// Starts from the cyclic subgroups and joins with cyclic subgroups until no
/// new subgroup appears; every subgroup is a join of cyclic ones.
pub fn all_subgroups(g: &FiniteGroup, cap: usize) -> Result<Vec<Subgroup>> {
    check_lattice_cap("all_subgroups", g, cap)?;
    let mut cyclic: Vec<(usize, ElemSet)> = Vec::new();
    let mut seen_cyclic = HashSet::new();
    for x in g.elements() {
        let c = closure(g, &[x]);
        if seen_cyclic.insert(c.set().clone()) {
            cyclic.push((x, c.set().clone()));
        }
    }
    let mut seen: HashSet<ElemSet> = cyclic.iter().map(|(_, s)| s.clone()).collect();
    let mut frontier: Vec<ElemSet> = seen.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for s in &frontier {
            for (x, c) in &cyclic {
                if c.is_subset(s) {
                    continue;
                }
                let mut joined = s.clone();
                let mut gens: Vec<usize> = s.iter().filter(|&y| y != 0).collect();
                gens.push(*x);
                close_in_place(g, &mut joined, &gens);
                if seen.insert(joined.clone()) {
                    next.push(joined);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Subgroup> = seen.into_iter().map(Subgroup::from_set).collect();
    out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.lex_cmp(b)));
    for h in &out {
        assert_eq!(g.order() % h.order(), 0, "Lagrange violated");
    }
    Ok(out)
}

pub fn is_normal(g: &FiniteGroup, h: &Subgroup) -> bool {
    h.iter()
        .all(|x| g.elements().all(|y| h.contains(g.conjugate(y, x))))
}

pub fn normal_subgroups(g: &FiniteGroup, cap: usize) -> Result<Vec<Subgroup>> {
    Ok(all_subgroups(g, cap)?
        .into_iter()
        .filter(|h| is_normal(g, h))
        .collect())
}

/// Nontrivial normal subgroups containing no smaller nontrivial normal subgroup.
pub fn minimal_normal_subgroups(g: &FiniteGroup, cap: usize) -> Result<Vec<Subgroup>> {
    let normals = normal_subgroups(g, cap)?;
    Ok(minimal_above(&normals, &Subgroup::trivial(g)))
}

/// Members of `normals` strictly containing `base` that are minimal with that
/// property.
pub(crate) fn minimal_above(normals: &[Subgroup], base: &Subgroup) -> Vec<Subgroup> {
    let above: Vec<&Subgroup> = normals
        .iter()
        .filter(|n| base.is_subgroup_of(n) && n.order() > base.order())
        .collect();
    above
        .iter()
        .filter(|m| {
            !above
                .iter()
                .any(|k| k.order() < m.order() && k.is_subgroup_of(m))
        })
        .map(|m| (*m).clone())
        .collect()
}

/// A quotient group together with the projection from its parent.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: FiniteGroup,
    /// `projection[x]` is the coset of `x`, as an element of `group`.
    pub projection: Vec<usize>,
    /// A representative of each coset (the smallest element index in it).
    pub representatives: Vec<usize>,
}

impl Quotient {
    /// Image of a subgroup of the parent.
    pub fn image(&self, h: &Subgroup) -> Subgroup {
        Subgroup::from_closed_members(&self.group, h.iter().map(|x| self.projection[x]))
    }

    /// Preimage of a subgroup of the quotient.
    pub fn preimage(&self, parent: &FiniteGroup, h: &Subgroup) -> Subgroup {
        Subgroup::from_closed_members(
            parent,
            parent.elements().filter(|&x| h.contains(self.projection[x])),
        )
    }
}

/// `g / n`, with coset 0 being `n` itself.
pub fn quotient(g: &FiniteGroup, n: &Subgroup) -> Result<Quotient> {
    if !is_normal(g, n) {
        return Err(Error::NotNormal {
            group: g.name().to_string(),
        });
    }
    let mut projection = vec![usize::MAX; g.order()];
    let mut representatives = Vec::new();
    for x in g.elements() {
        if projection[x] != usize::MAX {
            continue;
        }
        let id = representatives.len();
        representatives.push(x);
        for m in n.iter() {
            projection[g.mul(x, m)] = id;
        }
    }
    let q = representatives.len();
    let mut table = vec![0u32; q * q];
    for (i, &a) in representatives.iter().enumerate() {
        for (j, &b) in representatives.iter().enumerate() {
            table[i * q + j] = projection[g.mul(a, b)] as u32;
        }
    }
    let labels = representatives
        .iter()
        .map(|&r| format!("{}N", g.label(r)))
        .collect();
    let group = FiniteGroup::from_flat(format!("{}/N{}", g.name(), n.order()), q, table, labels);
    Ok(Quotient {
        group,
        projection,
        representatives,
    })
}

/// `K = H'H²` (the subgroup generated by all commutators and squares of `h`),
/// together with `t` where `|H/K| = 2^t`.
pub fn commutator_square_subgroup(g: &FiniteGroup, h: &Subgroup) -> (Subgroup, u32) {
    let members = h.members();
    let mut gens = Vec::new();
    for &x in &members {
        gens.push(g.mul(x, x));
        for &y in &members {
            gens.push(g.commutator(x, y));
        }
    }
    gens.sort_unstable();
    gens.dedup();
    let k = closure(g, &gens);
    let index = h.order() / k.order();
    assert!(index.is_power_of_two(), "H/H'H^2 must be an elementary abelian 2-group");
    (k, index.trailing_zeros())
}

/// Complements of `n` in `g`: subgroups `H` with `H ∩ N = 1` and `HN = G`.
pub fn complements(g: &FiniteGroup, n: &Subgroup, cap: usize) -> Result<Vec<Subgroup>> {
    let target = g.order() / n.order();
    Ok(all_subgroups(g, cap)?
        .into_iter()
        .filter(|h| h.order() == target && h.set().intersection_len(n.set()) == 1)
        .collect())
}

/// Number of complements of a minimal abelian normal subgroup.
pub fn complement_count(g: &FiniteGroup, n: &Subgroup, cap: usize) -> Result<usize> {
    if n.is_trivial() || !n.is_abelian(g) || !is_normal(g, n) {
        return Err(Error::Precondition(
            "complement_count needs a nontrivial abelian normal subgroup".into(),
        ));
    }
    let minimal = minimal_normal_subgroups(g, cap)?;
    if !minimal.contains(n) {
        return Err(Error::Precondition("subgroup is not minimal normal".into()));
    }
    Ok(complements(g, n, cap)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{direct_product, make_cyclic, make_dihedral, make_quaternion8, make_symmetric};

    fn v4() -> FiniteGroup {
        direct_product(&make_cyclic(2).unwrap(), &make_cyclic(2).unwrap()).unwrap()
    }

    #[test]
    fn klein_four_lattice() {
        let g = v4();
        assert_eq!(all_subgroups(&g, 48).unwrap().len(), 5);
        let mins = minimal_normal_subgroups(&g, 48).unwrap();
        assert_eq!(mins.len(), 3);
        assert!(mins.iter().all(|m| m.order() == 2));
    }

    #[test]
    fn s3_normal_subgroups() {
        let g = make_symmetric(3).unwrap();
        let normals = normal_subgroups(&g, 48).unwrap();
        let orders: Vec<_> = normals.iter().map(|n| n.order()).collect();
        assert_eq!(orders, vec![1, 3, 6]);
        let mins = minimal_normal_subgroups(&g, 48).unwrap();
        assert_eq!(mins.len(), 1);
        assert_eq!(mins[0].order(), 3);
    }

    #[test]
    fn q8_socle_is_center() {
        let g = make_quaternion8().unwrap();
        let mins = minimal_normal_subgroups(&g, 48).unwrap();
        assert_eq!(mins, vec![g.center()]);
    }

    #[test]
    fn s4_has_thirty_subgroups() {
        let g = make_symmetric(4).unwrap();
        assert_eq!(all_subgroups(&g, 48).unwrap().len(), 30);
        assert_eq!(normal_subgroups(&g, 48).unwrap().len(), 4);
    }

    #[test]
    fn cap_is_enforced() {
        let g = make_cyclic(49).unwrap();
        assert!(all_subgroups(&g, 48).unwrap_err().is_budget());
    }

    #[test]
    fn quotients() {
        let c4 = make_cyclic(4).unwrap();
        let n = closure(&c4, &[2]);
        let q = quotient(&c4, &n).unwrap();
        assert_eq!(q.group.order(), 2);

        let s3 = make_symmetric(3).unwrap();
        let a3 = minimal_normal_subgroups(&s3, 48).unwrap().remove(0);
        let q = quotient(&s3, &a3).unwrap();
        assert_eq!(q.group.fingerprint(), make_cyclic(2).unwrap().fingerprint());

        let d4 = make_dihedral(4).unwrap();
        let q = quotient(&d4, &d4.center()).unwrap();
        assert_eq!(q.group.order(), 4);
        assert_eq!(q.group.fingerprint(), v4().fingerprint());
        q.group.validate().unwrap();

        let not_normal = closure(&s3, &[s3.elements().find(|&x| s3.label(x) == "(1 2)").unwrap()]);
        assert!(matches!(quotient(&s3, &not_normal), Err(Error::NotNormal { .. })));
    }

    #[test]
    fn commutator_square_examples() {
        let g = v4();
        let (k, t) = commutator_square_subgroup(&g, &Subgroup::whole(&g));
        assert!(k.is_trivial());
        assert_eq!(t, 2);

        let c4 = make_cyclic(4).unwrap();
        let (k, t) = commutator_square_subgroup(&c4, &Subgroup::whole(&c4));
        assert_eq!(k.members(), vec![0, 2]);
        assert_eq!(t, 1);

        let s3 = make_symmetric(3).unwrap();
        let (k, t) = commutator_square_subgroup(&s3, &Subgroup::whole(&s3));
        assert_eq!(k.order(), 3);
        assert_eq!(t, 1);
    }

    #[test]
    fn complement_counts() {
        let c4 = make_cyclic(4).unwrap();
        assert_eq!(complement_count(&c4, &closure(&c4, &[2]), 48).unwrap(), 0);
        let g = v4();
        let x = closure(&g, &[2]);
        assert_eq!(complement_count(&g, &x, 48).unwrap(), 2);
        let s3 = make_symmetric(3).unwrap();
        let a3 = minimal_normal_subgroups(&s3, 48).unwrap().remove(0);
        assert_eq!(complement_count(&s3, &a3, 48).unwrap(), 3);
        // the whole of C_4 is not minimal normal
        assert!(complement_count(&c4, &Subgroup::whole(&c4), 48).is_err());
    }
}
