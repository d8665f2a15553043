//! Generating graphs `Γ_{a,b}(G)` of finite groups.
//!
//! The crate builds finite groups from multiplication tables, counts
//! generating tuples, materializes the generating graphs, evaluates
//! genus/thickness/crossing-number lower bounds and decides planarity with
//! certificates.

pub mod bounds;
pub mod catalog;
pub mod config;
pub mod count;
pub mod error;
pub mod expr;
pub mod graph;
pub mod group;
pub mod planarity;
pub mod rational;
pub mod suites;

pub use config::Budgets;
pub use error::{Error, Result};
