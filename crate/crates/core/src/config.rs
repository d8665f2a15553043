//! Work budgets shared by every module.

use serde::{Deserialize, Serialize};

/// Caps on the amount of work any single operation may do.
///
/// Defaults follow the sizes the verification suites need; every field is
/// overridable from the command line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budgets {
    /// Incremental closure steps allowed per counting or enumeration call.
    pub steps: u64,
    /// Largest group order a constructor will build.
    pub order_cap: usize,
    /// Largest group order for which the subgroup lattice is enumerated.
    pub subgroup_order_cap: usize,
    /// Largest vertex count of a materialized generating graph.
    pub vertex_cap: usize,
    /// Largest number of candidate tuples scanned when materializing edges.
    pub edge_work_cap: u128,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            steps: 100_000_000,
            order_cap: 10_000,
            subgroup_order_cap: 48,
            vertex_cap: 100_000,
            edge_work_cap: 10_000_000,
        }
    }
}

impl Budgets {
    pub fn with_subgroup_cap(mut self, cap: usize) -> Self {
        self.subgroup_order_cap = cap;
        self
    }

    pub fn with_vertex_cap(mut self, cap: usize) -> Self {
        self.vertex_cap = cap;
        self
    }

    pub fn all_positive(&self) -> bool {
        self.steps > 0
            && self.order_cap > 0
            && self.subgroup_order_cap > 0
            && self.vertex_cap > 0
            && self.edge_work_cap > 0
    }
}
