use super::{ElemSet, FiniteGroup};
use crate::error::{Error, Result};
use serde::Serialize;

/// A subgroup, stored as the bit-set of its members.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: ElemSet,
    order: usize,
}

impl Subgroup {
    /// Wraps a member set that is already known to be closed.
    pub(crate) fn from_closed_members(g: &FiniteGroup, members: impl IntoIterator<Item = usize>) -> Self {
        Self::from_set(ElemSet::from_iter(g.order(), members))
    }

    pub(crate) fn from_set(members: ElemSet) -> Self {
        let order = members.len();
        debug_assert!(members.contains(0));
        Subgroup { members, order }
    }

    pub fn trivial(g: &FiniteGroup) -> Self {
        Self::from_closed_members(g, [0])
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        Self::from_set(ElemSet::full(g.order()))
    }

    /// Checks the subgroup axioms for an arbitrary member list.
    pub fn try_new(g: &FiniteGroup, members: &[usize]) -> Result<Self> {
        let set = ElemSet::from_iter(g.order(), members.iter().copied().filter(|&x| x < g.order()));
        if members.iter().any(|&x| x >= g.order()) {
            return Err(Error::Precondition("member index out of range".into()));
        }
        if !set.contains(0) {
            return Err(Error::Precondition("subgroup must contain the identity".into()));
        }
        for x in set.iter() {
            if !set.contains(g.inv(x)) {
                return Err(Error::Precondition(format!("not closed under inverse at {x}")));
            }
            for y in set.iter() {
                if !set.contains(g.mul(x, y)) {
                    return Err(Error::Precondition(format!("not closed: {x}*{y}")));
                }
            }
        }
        let s = Self::from_set(set);
        assert_eq!(g.order() % s.order, 0, "Lagrange violated");
        Ok(s)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn members(&self) -> Vec<usize> {
        self.members.to_vec()
    }

    pub fn set(&self) -> &ElemSet {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_whole(&self) -> bool {
        self.members.is_full()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn is_abelian(&self, g: &FiniteGroup) -> bool {
        let m = self.members();
        m.iter().all(|&x| m.iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
    }

    /// Lexicographic comparison of the sorted member lists.
    pub fn lex_cmp(&self, other: &Subgroup) -> std::cmp::Ordering {
        self.members.iter().cmp(other.members.iter())
    }
}

/// An ordered tuple of elements of some group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GroupTuple(pub Vec<usize>);

impl GroupTuple {
    pub fn new(entries: Vec<usize>) -> Self {
        GroupTuple(entries)
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn is_over(&self, g: &FiniteGroup) -> bool {
        self.0.iter().all(|&x| x < g.order())
    }

    pub fn concat(&self, other: &GroupTuple) -> GroupTuple {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        GroupTuple(v)
    }

    pub fn display(&self, g: &FiniteGroup) -> String {
        let parts: Vec<_> = self.0.iter().map(|&x| g.label(x)).collect();
        format!("({})", parts.join(","))
    }
}

/// Grows `set` (assumed to contain the identity) to the subgroup generated by
/// it together with `gens`, by breadth-first right multiplication.
/// Returns the number of multiplications performed.
pub(crate) fn close_in_place(g: &FiniteGroup, set: &mut ElemSet, gens: &[usize]) -> u64 {
    let mut queue: Vec<usize> = set.to_vec();
    let mut steps = 0u64;
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for &s in gens {
            steps += 1;
            let y = g.mul(x, s);
            if set.insert(y) {
                queue.push(y);
            }
        }
    }
    steps
}

/// The subgroup generated by `s`.
pub fn closure(g: &FiniteGroup, s: &[usize]) -> Subgroup {
    let mut set = ElemSet::empty(g.order());
    set.insert(0);
    let gens: Vec<usize> = s.iter().copied().filter(|&x| x != 0).collect();
    close_in_place(g, &mut set, &gens);
    Subgroup::from_set(set)
}

/// True iff the entries of `t` generate all of `g`.
///
/// The running closure is extended one entry at a time and the scan stops as
/// soon as it reaches the whole group.
pub fn generates(g: &FiniteGroup, t: &GroupTuple) -> bool {
    let mut set = ElemSet::empty(g.order());
    set.insert(0);
    let mut gens = Vec::with_capacity(t.arity());
    if set.len() == g.order() {
        return true;
    }
    for &x in t.entries() {
        if set.contains(x) {
            continue;
        }
        gens.push(x);
        close_in_place(g, &mut set, &gens);
        if set.len() == g.order() {
            return true;
        }
    }
    false
}
