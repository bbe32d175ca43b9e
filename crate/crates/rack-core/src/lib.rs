//! Finite racks and quandles: construction, validation, orbit analysis and
//! isomorphism search.
//!
//! A rack is a set with a binary operation `a^b` such that every right
//! translation `f_b : a -> a^b` is a bijection and the rack identity
//! `a^{bc} = a^{cb^c}` holds. A quandle additionally satisfies `a^a = a`.
//! Racks here always live on `{0..n-1}` with the operation given by an
//! explicit table.

mod alexander;
mod error;
mod morphism;
mod orbit;
mod rack;
mod spec;

pub use alexander::AlexanderPresentation;
pub use error::RackError;
pub use morphism::{find_isomorphism, prop41_map, prop42_map, RackMorphism};
pub use orbit::{orbit_partition, orbit_rack, OrbitPartition};
pub use rack::{make_builtin, make_conjugation, make_cyclic, make_dihedral, make_trivial, FiniteRack};
pub use spec::{parse_group_table, parse_polynomial, parse_rack_spec, parse_rack_table};
