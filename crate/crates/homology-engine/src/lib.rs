//! Exact integer linear algebra for rack homology: Smith normal form,
//! homology groups as canonical abelian-group invariants, mod-p dimensions
//! via universal coefficients, and the theorem-verification suites.

mod group;
mod homology;
mod matrix;
pub mod oracle;
mod snf;
mod verify;

pub use group::AbelianGroupInvariants;
pub use homology::{betti, homology, mod_p_homology_dim, HomologyError};
pub use matrix::IntegerMatrix;
pub use snf::{rank_mod_p, rational_rank, smith_normal_form, SmithForm, Transforms};
pub use verify::{verify_main_theorem, verify_splitting, VerdictItem, VerificationReport};
