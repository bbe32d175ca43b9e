//! Cubical chain complexes of finite racks and the chain maps and homotopies
//! used to split quandle homology off rack homology.
//!
//! Degree-n chains are integer combinations of n-tuples of rack elements.
//! The boundary is the alternating sum of the two cubical face maps; the
//! degeneracy (D), quandle (Q) and late-degeneracy (L) variants restrict or
//! quotient the free rack complex (R).

mod chain;
mod complex;
mod maps;

pub use chain::{boundary, face, is_degenerate, is_late_degenerate, ChainError, FormalChain, Tuple};
pub use complex::{build_complex, BoundaryMatrix, GradedComplex, Variant};
pub use maps::{alpha, beta_map, deg_projection, homotopy_d, phi, psi, r_shift};
