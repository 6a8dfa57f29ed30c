//! Finite p-groups, semiabelian decompositions and rank-preserving
//! epimorphisms onto semiabelian p-groups.
//!
//! - [`group`]: groups, actions, products, quotients, homomorphisms
//! - [`subgroup`]: subgroup calculus (Frattini subgroup, rank, `Ā`, `A_m`)
//! - [`engine`]: semiabelian decision procedure and decompositions
//! - [`epi`]: semidirect and wreath epimorphisms and towers
//! - [`oracle`]: brute-force reference implementations
//! - [`catalog`]: named small groups

pub mod catalog;
pub mod engine;
pub mod epi;
pub mod error;
pub mod group;
pub mod oracle;
pub mod subgroup;

pub use error::{Error, Result};
pub use group::{ElementId, Group, Homomorphism, VerifyConfig, VerifyPolicy};
pub use subgroup::Subgroup;
