//! The bundled group catalog, generated from the constructors: cyclic,
//! dihedral, quaternion, `A_4`, `S_4` and their iterated direct products,
//! one representative per isomorphism class.

use crate::error::Result;
use crate::group::{
    direct_product, make_alternating, make_cyclic, make_dihedral, make_quaternion8,
    make_symmetric, FiniteGroup,
};
use crate::planarity::minimal_generating_tuple;
use std::collections::HashMap;

pub const CATALOG_MAX_ORDER: usize = 24;

/// Whether `a ≅ b`, by trying every image of a minimal generating tuple of
/// `a`.
pub fn isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> bool {
    if a.fingerprint() != b.fingerprint() {
        return false;
    }
    if a.is_trivial() {
        return true;
    }
    let gens = minimal_generating_tuple(a, u64::MAX).expect("unbounded budget");
    let gens = gens.entries();
    let n = a.order();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&x| {
            let o = a.element_order(x);
            b.elements().filter(|&y| b.element_order(y) == o).collect()
        })
        .collect();
    let mut pick = vec![0usize; gens.len()];
    loop {
        let images: Vec<usize> = pick.iter().zip(&candidates).map(|(&i, c)| c[i]).collect();
        if extends_to_isomorphism(a, b, gens, &images, n) {
            return true;
        }
        // odometer over the candidate lists
        let mut k = 0;
        loop {
            if k == pick.len() {
                return false;
            }
            pick[k] += 1;
            if pick[k] < candidates[k].len() {
                break;
            }
            pick[k] = 0;
            k += 1;
        }
    }
}

fn extends_to_isomorphism(a: &FiniteGroup, b: &FiniteGroup, gens: &[usize], images: &[usize], n: usize) -> bool {
    let mut map = vec![usize::MAX; n];
    map[0] = 0;
    let mut queue = vec![0];
    while let Some(x) = queue.pop() {
        for (&g, &h) in gens.iter().zip(images) {
            let y = a.mul(x, g);
            let fy = b.mul(map[x], h);
            if map[y] == usize::MAX {
                map[y] = fy;
                queue.push(y);
            } else if map[y] != fy {
                return false;
            }
        }
    }
    let mut hit = vec![false; n];
    map.iter().all(|&y| y != usize::MAX && !std::mem::replace(&mut hit[y], true))
}

fn atoms(max_order: usize) -> Result<Vec<FiniteGroup>> {
    let mut out = Vec::new();
    for n in 2..=max_order {
        out.push(make_cyclic(n)?);
    }
    for n in 3..=max_order / 2 {
        out.push(make_dihedral(n)?);
    }
    if max_order >= 8 {
        out.push(make_quaternion8()?);
    }
    if max_order >= 12 {
        out.push(make_alternating(4)?);
    }
    if max_order >= 24 {
        out.push(make_symmetric(4)?);
    }
    Ok(out)
}

/// Nontrivial groups of order `<= max_order` reachable from the atoms by
/// direct products, sorted by order; the first name found is kept, with
/// the later-built factor written first.
pub fn build_catalog(max_order: usize) -> Result<Vec<FiniteGroup>> {
    let mut groups: Vec<FiniteGroup> = Vec::new();
    let mut by_fp: HashMap<_, Vec<usize>> = HashMap::new();
    let mut admit = |g: FiniteGroup, groups: &mut Vec<FiniteGroup>| {
        let bucket = by_fp.entry(g.fingerprint()).or_default();
        if bucket.iter().any(|&i| isomorphic(&groups[i], &g)) {
            return false;
        }
        bucket.push(groups.len());
        groups.push(g);
        true
    };
    for g in atoms(max_order)? {
        admit(g, &mut groups);
    }
    let mut frontier = 0;
    loop {
        let before = groups.len();
        for i in 0..before {
            for j in frontier.min(i)..before {
                if i < frontier && j < frontier {
                    continue;
                }
                if groups[i].order() * groups[j].order() > max_order {
                    continue;
                }
                let p = direct_product(&groups[j], &groups[i])?;
                admit(p, &mut groups);
            }
        }
        frontier = before;
        if groups.len() == before {
            break;
        }
    }
    let mut indexed: Vec<(usize, FiniteGroup)> = groups.into_iter().enumerate().collect();
    indexed.sort_by_key(|(i, g)| (g.order(), *i));
    Ok(indexed.into_iter().map(|(_, g)| g).collect())
}

/// The catalog of groups of order at most 24.
pub fn catalog() -> Result<Vec<FiniteGroup>> {
    build_catalog(CATALOG_MAX_ORDER)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_contents() {
        let cat = catalog().unwrap();
        let names: Vec<&str> = cat.iter().map(|g| g.name()).collect();
        for want in ["C2", "C6", "C2xC2", "D3", "D4", "Q8", "C4xC2", "D6", "A4", "S4", "C2xC2xC2", "C2xC2xC2xC2"] {
            assert!(names.contains(&want), "{want} missing from {names:?}");
        }
        assert!(!names.contains(&"C2xC3"));
        assert!(cat.iter().all(|g| !g.is_trivial() && g.order() <= 24));
        assert!(cat.windows(2).all(|w| w[0].order() <= w[1].order()));
        // orders 8 and 16: every group realizable from the atoms
        assert_eq!(cat.iter().filter(|g| g.order() == 8).count(), 5);
        let o16: Vec<&str> = cat.iter().filter(|g| g.order() == 16).map(|g| g.name()).collect();
        assert_eq!(o16.len(), 8, "{o16:?}");
    }

    #[test]
    fn isomorphism_test_itself() {
        let c2 = make_cyclic(2).unwrap();
        let c3 = make_cyclic(3).unwrap();
        assert!(isomorphic(&direct_product(&c2, &c3).unwrap(), &make_cyclic(6).unwrap()));
        assert!(isomorphic(&make_dihedral(3).unwrap(), &make_symmetric(3).unwrap()));
        assert!(isomorphic(&make_dihedral(2).unwrap(), &direct_product(&c2, &c2).unwrap()));
        assert!(isomorphic(&make_dihedral(6).unwrap(), &direct_product(&make_dihedral(3).unwrap(), &c2).unwrap()));
        assert!(!isomorphic(&make_dihedral(4).unwrap(), &make_quaternion8().unwrap()));
    }

    #[test]
    fn fingerprints_separate_small_catalog_groups() {
        // up to order 16 the coarse invariant already tells the classes apart
        let cat = catalog().unwrap();
        let small: Vec<_> = cat.iter().filter(|g| g.order() <= 16).collect();
        for (i, g) in small.iter().enumerate() {
            for h in &small[i + 1..] {
                assert_ne!(g.fingerprint(), h.fingerprint(), "{} vs {}", g.name(), h.name());
                assert!(!isomorphic(g, h));
            }
        }
    }
}
