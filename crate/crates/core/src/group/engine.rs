use super::subgroup::close_in_place;
use super::{ElemSet, FiniteGroup, Subgroup};
use crate::error::{Error, Result};
use std::collections::HashMap;

const UNKNOWN: u32 = u32::MAX;

/// Step budget was exhausted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BudgetHit;

/// Interns the subgroups reached while extending tuples and memoizes
/// `⟨H, g⟩` for each visited pair, so every tuple extension costs one
/// table lookup after the first time.
pub struct ClosureCache<'g> {
    group: &'g FiniteGroup,
    sets: Vec<ElemSet>,
    gens: Vec<Vec<usize>>,
    index: HashMap<ElemSet, u32>,
    join: Vec<Vec<u32>>,
    completions: HashMap<(u32, u32), u128>,
    steps: u64,
    limit: u64,
}

impl<'g> ClosureCache<'g> {
    pub fn new(group: &'g FiniteGroup, limit: u64) -> Self {
        let mut trivial = ElemSet::empty(group.order());
        trivial.insert(0);
        let mut cache = ClosureCache {
            group,
            sets: Vec::new(),
            gens: Vec::new(),
            index: HashMap::new(),
            join: Vec::new(),
            completions: HashMap::new(),
            steps: 0,
            limit,
        };
        cache.intern(trivial, Vec::new());
        cache
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    fn intern(&mut self, set: ElemSet, gens: Vec<usize>) -> u32 {
        if let Some(&id) = self.index.get(&set) {
            return id;
        }
        let id = self.sets.len() as u32;
        self.index.insert(set.clone(), id);
        self.sets.push(set);
        self.gens.push(gens);
        self.join.push(vec![UNKNOWN; self.group.order()]);
        id
    }

    /// Id of the trivial subgroup.
    pub const TRIVIAL: u32 = 0;

    /// Interns an arbitrary subgroup.
    pub fn id_of(&mut self, h: &Subgroup) -> u32 {
        let gens: Vec<usize> = h.iter().filter(|&x| x != 0).collect();
        self.intern(h.set().clone(), gens)
    }

    pub fn steps(&self) -> u64 {
        self.steps
    }

    pub fn set(&self, id: u32) -> &ElemSet {
        &self.sets[id as usize]
    }

    pub fn order_of(&self, id: u32) -> usize {
        self.sets[id as usize].len()
    }

    #[inline]
    pub fn is_whole(&self, id: u32) -> bool {
        self.sets[id as usize].len() == self.group.order()
    }

    /// `⟨H_id, g⟩`, charging one step.
    #[inline]
    pub fn extend(&mut self, id: u32, g: usize) -> Result<u32, BudgetHit> {
        self.steps += 1;
        if self.steps > self.limit {
            return Err(BudgetHit);
        }
        let cached = self.join[id as usize][g];
        if cached != UNKNOWN {
            return Ok(cached);
        }
        let next = if self.sets[id as usize].contains(g) {
            id
        } else {
            let mut set = self.sets[id as usize].clone();
            let mut gens = self.gens[id as usize].clone();
            gens.push(g);
            close_in_place(self.group, &mut set, &gens);
            self.intern(set, gens)
        };
        self.join[id as usize][g] = next;
        Ok(next)
    }

    /// Number of `remaining`-tuples `t` with `⟨H_id, t⟩ = G`.
    pub fn completions(&mut self, id: u32, remaining: u32) -> Result<u128, BudgetHit> {
        if self.is_whole(id) {
            return Ok((self.group.order() as u128).pow(remaining));
        }
        if remaining == 0 {
            return Ok(0);
        }
        if let Some(&c) = self.completions.get(&(id, remaining)) {
            return Ok(c);
        }
        let mut total = 0u128;
        for g in 0..self.group.order() {
            let next = self.extend(id, g)?;
            total += self.completions(next, remaining - 1)?;
        }
        self.completions.insert((id, remaining), total);
        Ok(total)
    }
}

/// `d(G)`, the smallest size of a generating set; 0 for the trivial group.
pub fn min_gen_size(g: &FiniteGroup, step_limit: u64) -> Result<usize> {
    if g.is_trivial() {
        return Ok(0);
    }
    let mut cache = ClosureCache::new(g, step_limit);
    // d(G) <= log2 |G|
    let bound = usize::BITS - g.order().leading_zeros();
    for d in 1..=bound {
        match cache.completions(ClosureCache::TRIVIAL, d) {
            Ok(c) if c > 0 => return Ok(d as usize),
            Ok(_) => {}
            Err(BudgetHit) => {
                return Err(Error::Budget {
                    what: "min_gen_size",
                    limit: step_limit,
                    depth: d as usize,
                })
            }
        }
    }
    unreachable!("every finite group is generated by log2|G| elements")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{direct_product, make_cyclic, make_symmetric};

    #[test]
    fn min_gen_sizes() {
        let c2 = make_cyclic(2).unwrap();
        let v4 = direct_product(&c2, &c2).unwrap();
        let v8 = direct_product(&v4, &c2).unwrap();
        assert_eq!(min_gen_size(&make_cyclic(1).unwrap(), 1000).unwrap(), 0);
        assert_eq!(min_gen_size(&make_cyclic(6).unwrap(), 1000).unwrap(), 1);
        assert_eq!(min_gen_size(&v4, 1000).unwrap(), 2);
        assert_eq!(min_gen_size(&v8, 10_000).unwrap(), 3);
        assert_eq!(min_gen_size(&make_symmetric(4).unwrap(), 100_000).unwrap(), 2);
    }

    #[test]
    fn budget_is_reported() {
        let s4 = make_symmetric(4).unwrap();
        assert!(matches!(min_gen_size(&s4, 10), Err(Error::Budget { .. })));
    }

    #[test]
    fn extension_is_memoized() {
        let c6 = make_cyclic(6).unwrap();
        let mut cache = ClosureCache::new(&c6, 100);
        let a = cache.extend(ClosureCache::TRIVIAL, 2).unwrap();
        assert_eq!(cache.order_of(a), 3);
        let b = cache.extend(a, 3).unwrap();
        assert!(cache.is_whole(b));
        assert_eq!(cache.extend(ClosureCache::TRIVIAL, 4).unwrap(), a);
        assert_eq!(cache.steps(), 3);
    }
}
