use chain_complex::GradedComplex;
use thiserror::Error;

use crate::group::AbelianGroupInvariants;
use crate::matrix::IntegerMatrix;
use crate::snf::smith_normal_form;

#[derive(Debug, Error)]
pub enum HomologyError {
    #[error("homology in degree {degree} needs boundaries up to degree {needed}, complex only reaches {max_degree}")]
    DegreeOutOfRange {
        degree: usize,
        needed: usize,
        max_degree: usize,
    },
    #[error("{0} is not prime")]
    NotPrime(u64),
}

fn check_degree(complex: &GradedComplex, n: usize) -> Result<(), HomologyError> {
    if n < 1 || n + 1 > complex.max_degree() {
        return Err(HomologyError::DegreeOutOfRange {
            degree: n,
            needed: n + 1,
            max_degree: complex.max_degree(),
        });
    }
    Ok(())
}

/// The n-th homology group, for 1 <= n <= max_degree - 1.
///
/// Free rank is dim C_n - rank d_n - rank d_{n+1}. For the torsion, note
/// that C_n / im d_{n+1} contains ker d_n / im d_{n+1} with free quotient
/// im d_n, so both have the same torsion: the invariant factors > 1 of the
/// full matrix d_{n+1}.
pub fn homology(
    complex: &GradedComplex,
    n: usize,
) -> Result<AbelianGroupInvariants, HomologyError> {
    check_degree(complex, n)?;
    let outgoing = smith_normal_form(&IntegerMatrix::from(complex.boundary_matrix(n)), false);
    let incoming = smith_normal_form(&IntegerMatrix::from(complex.boundary_matrix(n + 1)), false);
    let free = complex.rank(n) - outgoing.rank() - incoming.rank();
    Ok(AbelianGroupInvariants::from_factors(
        free,
        incoming.torsion_factors(),
    ))
}

/// The n-th Betti number (rank of the free part).
pub fn betti(complex: &GradedComplex, n: usize) -> Result<usize, HomologyError> {
    Ok(homology(complex, n)?.free_rank())
}

/// dim H_n(-; Z_p) by universal coefficients:
/// free rank of H_n plus the p-torsion counts of H_n and H_{n-1}.
///
/// The torsion of H_{n-1} is read off the invariant factors of d_n, which
/// also covers n = 1 (d_1 is the zero map in every variant, so H_0 is free).
pub fn mod_p_homology_dim(
    complex: &GradedComplex,
    n: usize,
    p: u64,
) -> Result<usize, HomologyError> {
    check_degree(complex, n)?;
    if p < 2 || (2..).take_while(|d| d * d <= p).any(|d| p % d == 0) {
        return Err(HomologyError::NotPrime(p));
    }
    let outgoing = smith_normal_form(&IntegerMatrix::from(complex.boundary_matrix(n)), false);
    let incoming = smith_normal_form(&IntegerMatrix::from(complex.boundary_matrix(n + 1)), false);
    let free = complex.rank(n) - outgoing.rank() - incoming.rank();
    let p = p as u128;
    let p_torsion = |factors: Vec<u128>| factors.iter().filter(|&&d| d % p == 0).count();
    Ok(free + p_torsion(incoming.torsion_factors()) + p_torsion(outgoing.torsion_factors()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use chain_complex::{build_complex, Variant};
    use rack_core::{make_dihedral, make_trivial, parse_rack_spec};

    fn group(spec: &str, variant: Variant, n: usize) -> AbelianGroupInvariants {
        let rack = parse_rack_spec(spec).unwrap();
        let c = build_complex(&rack, variant, n + 1, None).unwrap();
        homology(&c, n).unwrap()
    }

    #[test]
    fn trivial_rack_homology_is_free_of_rank_size_pow_n() {
        let c = build_complex(&make_trivial(3), Variant::R, 4, None).unwrap();
        for n in 1..=3 {
            assert_eq!(homology(&c, n).unwrap(), AbelianGroupInvariants::free(3usize.pow(n as u32)));
        }
    }

    #[test]
    fn dihedral_quandle_homology_anchors() {
        assert_eq!(group("dihedral:3", Variant::Q, 2).to_string(), "0");
        assert_eq!(group("dihedral:3", Variant::Q, 3).to_string(), "Z_3");
        assert_eq!(group("dihedral:4", Variant::Q, 2).to_string(), "Z^2 + Z_2^2");
        assert_eq!(group("dihedral:5", Variant::Q, 3).to_string(), "Z_5");
        assert_eq!(group("dihedral:6", Variant::Q, 2).to_string(), "Z^2");
    }

    #[test]
    fn rack_homology_of_connected_dihedral() {
        // one orbit: free rank 1 in every degree, torsion dividing |X|^n
        let c = build_complex(&make_dihedral(3), Variant::R, 4, None).unwrap();
        for n in 1..=3 {
            let h = homology(&c, n).unwrap();
            assert_eq!(h.free_rank(), 1);
            assert!(h.torsion().iter().all(|d| 3u128.pow(n as u32) % d == 0));
        }
    }

    #[test]
    fn degree_bounds_are_enforced() {
        let c = build_complex(&make_dihedral(3), Variant::R, 3, None).unwrap();
        assert!(homology(&c, 3).is_err());
        assert!(homology(&c, 0).is_err());
        assert!(homology(&c, 2).is_ok());
    }

    #[test]
    fn mod_p_dimensions_match_universal_coefficients_by_hand() {
        // H_2 = Z^2 + Z_2^2 and H_1 = Z^2 for the four-element dihedral
        // quandle, so dim H_2(Z_2) = 2 + 2 + 0 and dim H_2(Z_3) = 2
        let rack = make_dihedral(4);
        let c = build_complex(&rack, Variant::Q, 3, None).unwrap();
        assert_eq!(mod_p_homology_dim(&c, 2, 2).unwrap(), 4);
        assert_eq!(mod_p_homology_dim(&c, 2, 3).unwrap(), 2);
        assert_eq!(mod_p_homology_dim(&c, 2, 5).unwrap(), 2);
    }

    #[test]
    fn mod_p_dimension_equals_mod_p_rank_computation() {
        use crate::snf::rank_mod_p;
        for spec in ["dihedral:3", "dihedral:4", "alexander:2:t^2+t+1"] {
            let rack = parse_rack_spec(spec).unwrap();
            for variant in [Variant::R, Variant::Q] {
                let c = build_complex(&rack, variant, 4, None).unwrap();
                for n in 1..=3 {
                    for p in [2, 3, 5, 7] {
                        let via_uct = mod_p_homology_dim(&c, n, p).unwrap();
                        let d_n = IntegerMatrix::from(c.boundary_matrix(n));
                        let d_n1 = IntegerMatrix::from(c.boundary_matrix(n + 1));
                        let direct =
                            c.rank(n) - rank_mod_p(&d_n, p) - rank_mod_p(&d_n1, p);
                        assert_eq!(via_uct, direct, "{spec} {variant:?} n={n} p={p}");
                    }
                }
            }
        }
    }
}
