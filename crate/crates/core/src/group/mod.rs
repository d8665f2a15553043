//! Finite groups given by multiplication tables, and the subgroup machinery
//! the counting and graph modules run on.

mod chief;
mod constructors;
mod engine;
mod lattice;
mod set;
mod subgroup;
mod table;

pub use chief::{chief_series, prime_power as prime_power_of, ChiefSeriesFactor, TieBreak};
pub use constructors::{
    direct_product, make_alternating, make_cyclic, make_dihedral, make_quaternion8,
    make_symmetric,
};
pub use engine::{min_gen_size, BudgetHit, ClosureCache};
pub use lattice::{
    all_subgroups, commutator_square_subgroup, complement_count, complements, is_normal,
    minimal_normal_subgroups, normal_subgroups, quotient, Quotient,
};
pub use set::ElemSet;
pub use subgroup::{closure, generates, GroupTuple, Subgroup};
pub use table::{load_table, parse_table, write_table};

use crate::error::{Error, Result};
use serde::Serialize;

/// Associativity is verified exhaustively up to this order (O(n³) work).
pub const ASSOCIATIVITY_CHECK_CAP: usize = 256;

/// A finite group stored as its full multiplication table.
///
/// Element 0 is always the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
    labels: Vec<String>,
}

/// Coarse isomorphism invariant: order, element-order histogram,
/// commutativity and center size.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    /// `(element order, how many elements have it)`, ascending.
    pub order_profile: Vec<(usize, usize)>,
    pub abelian: bool,
    pub center_order: usize,
}

impl FiniteGroup {
    /// Builds a group from a table whose identity may sit anywhere; rows and
    /// columns are relabelled so the identity becomes element 0.
    pub fn from_table(
        name: impl Into<String>,
        rows: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGroup(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::InvalidGroup(format!(
                    "row {i} contains index {bad} out of range 0..{n}"
                )));
            }
        }
        check_latin(&rows)?;
        let e = (0..n)
            .find(|&i| (0..n).all(|j| rows[i][j] == j && rows[j][i] == j))
            .ok_or_else(|| Error::InvalidGroup("no two-sided identity element".into()))?;
        if n <= ASSOCIATIVITY_CHECK_CAP {
            check_associative(&rows)?;
        }
        // swap e <-> 0
        let relabel = |x: usize| {
            if x == e {
                0
            } else if x == 0 {
                e
            } else {
                x
            }
        };
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                table[relabel(i) * n + relabel(j)] = relabel(rows[i][j]) as u32;
            }
        }
        let mut labels = match labels {
            Some(l) if l.len() == n => l,
            Some(l) => {
                return Err(Error::InvalidGroup(format!(
                    "{} labels for a group of order {n}",
                    l.len()
                )))
            }
            None => (0..n).map(|i| format!("x{i}")).collect(),
        };
        labels.swap(0, e);
        Ok(Self::from_flat(name.into(), n, table, labels))
    }

    /// Internal constructor for tables already known to be groups with
    /// identity at 0.
    pub(crate) fn from_flat(name: String, order: usize, table: Vec<u32>, labels: Vec<String>) -> Self {
        let mut inverses = vec![0u32; order];
        for i in 0..order {
            let row = &table[i * order..(i + 1) * order];
            inverses[i] = row.iter().position(|&x| x == 0).expect("latin row") as u32;
        }
        FiniteGroup {
            name,
            order,
            table,
            inverses,
            labels,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn row(&self, a: usize) -> &[u32] {
        &self.table[a * self.order..(a + 1) * self.order]
    }

    /// `g h g⁻¹`
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    /// `x⁻¹ y⁻¹ x y`
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn pow(&self, g: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, g))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|i| (i + 1..self.order).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    pub fn center(&self) -> Subgroup {
        let members = (0..self.order)
            .filter(|&z| (0..self.order).all(|g| self.mul(z, g) == self.mul(g, z)));
        Subgroup::from_closed_members(self, members)
    }

    pub fn is_cyclic(&self) -> bool {
        (0..self.order).any(|g| self.element_order(g) == self.order)
    }

    pub fn fingerprint(&self) -> Fingerprint {
        let mut profile = std::collections::BTreeMap::new();
        for g in 0..self.order {
            *profile.entry(self.element_order(g)).or_insert(0usize) += 1;
        }
        Fingerprint {
            order: self.order,
            order_profile: profile.into_iter().collect(),
            abelian: self.is_abelian(),
            center_order: self.center().order(),
        }
    }

    /// Re-runs the full table validation (Latin square, identity, inverses,
    /// associativity). Intended for tests and loaders.
    pub fn validate(&self) -> Result<()> {
        let n = self.order;
        let rows: Vec<Vec<usize>> = (0..n)
            .map(|i| self.row(i).iter().map(|&x| x as usize).collect())
            .collect();
        check_latin(&rows)?;
        for j in 0..n {
            if rows[0][j] != j || rows[j][0] != j {
                return Err(Error::InvalidGroup(format!("element 0 is not the identity (column {j})")));
            }
        }
        for i in 0..n {
            if rows[i][self.inv(i)] != 0 {
                return Err(Error::InvalidGroup(format!("inverse of {i} is wrong")));
            }
        }
        check_associative(&rows)
    }
}

fn check_latin(rows: &[Vec<usize>]) -> Result<()> {
    let n = rows.len();
    let mut seen = vec![usize::MAX; n];
    for (i, row) in rows.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            if seen[x] == i {
                return Err(Error::InvalidGroup(format!(
                    "not a Latin square: row {i} repeats {x} (column {j})"
                )));
            }
            seen[x] = i;
        }
    }
    seen.fill(usize::MAX);
    for j in 0..n {
        for (i, row) in rows.iter().enumerate() {
            let x = row[j];
            if seen[x] == j {
                return Err(Error::InvalidGroup(format!(
                    "not a Latin square: column {j} repeats {x} (row {i})"
                )));
            }
            seen[x] = j;
        }
    }
    Ok(())
}

fn check_associative(rows: &[Vec<usize>]) -> Result<()> {
    let n = rows.len();
    for i in 0..n {
        for j in 0..n {
            let ij = rows[i][j];
            for k in 0..n {
                if rows[ij][k] != rows[i][rows[j][k]] {
                    return Err(Error::InvalidGroup(format!(
                        "associativity fails for ({i}, {j}, {k})"
                    )));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_moved_to_zero() {
        // C_2 written with the identity as element 1
        let g = FiniteGroup::from_table("C2'", vec![vec![1, 0], vec![0, 1]], Some(vec!["a".into(), "e".into()]))
            .unwrap();
        assert_eq!(g.mul(0, 1), 1);
        assert_eq!(g.mul(1, 1), 0);
        assert_eq!(g.label(0), "e");
        g.validate().unwrap();
    }

    #[test]
    fn rejects_non_latin_and_non_associative() {
        let err = FiniteGroup::from_table("x", vec![vec![0, 1], vec![1, 1]], None).unwrap_err();
        assert!(err.to_string().contains("Latin"));
        // a Latin square with identity 0 that is not associative (order 5 loop)
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = FiniteGroup::from_table("loop", rows, None).unwrap_err();
        assert!(err.to_string().contains("associativity fails for"), "{err}");
    }
}
