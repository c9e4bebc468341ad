//! Exact computations around the fundamental invariant `C_n` of the Hecke
//! algebra `H_n(q)`: its spectrum and the inverse problem of recovering a
//! Young diagram from an eigenvalue, projection operators and symmetric-group
//! characters, Murphy-operator traces, and the `SU_q(N)` quadratic Casimir
//! correspondence. A regular-representation oracle at a rational value of
//! `q` independently checks the symbolic results.

pub mod cache;
pub mod checks;
pub mod diagrams;
pub mod error;
pub mod hecke;
pub mod invariant;
pub mod laurent;
pub mod perm;
pub mod registry;
pub mod suq;
pub mod symgroup;
pub mod traces;

pub use diagrams::{partitions, paths, TableauPath, YoungDiagram};
pub use error::{Error, Result};
pub use laurent::{LaurentPoly, Rational};
