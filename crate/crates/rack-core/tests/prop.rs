//! Randomized structural properties of the rack constructors and parsers.

use proptest::prelude::*;
use rack_core::{
    make_dihedral, orbit_partition, parse_polynomial, AlexanderPresentation, FiniteRack, RackError,
};

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A random monic polynomial over Z_m with unit constant term.
fn monic_poly(modulus: u64, mut coeffs: Vec<u64>) -> Vec<u64> {
    for c in coeffs.iter_mut() {
        *c %= modulus;
    }
    if gcd(coeffs[0], modulus) != 1 {
        coeffs[0] = 1;
    }
    coeffs.push(1);
    coeffs
}

proptest! {
    #[test]
    fn polynomial_rendering_round_trips(
        modulus in 2u64..=9,
        coeffs in proptest::collection::vec(0u64..9, 1..=3),
    ) {
        let poly = monic_poly(modulus, coeffs);
        let p = AlexanderPresentation::new(modulus, &poly).unwrap();
        let parsed = parse_polynomial(&p.poly_string(), modulus).unwrap();
        prop_assert_eq!(parsed, p.poly().to_vec());
    }

    #[test]
    fn alexander_racks_satisfy_the_axioms(
        modulus in 2u64..=8,
        coeffs in proptest::collection::vec(0u64..8, 2),
    ) {
        // quadratic modulus keeps the rack at modulus^2 <= 64 elements
        let poly = monic_poly(modulus, coeffs);
        let p = AlexanderPresentation::new(modulus, &poly).unwrap();
        let rack = p.make_rack();
        prop_assert!(FiniteRack::validate(rack.table().to_vec(), "recheck").is_ok());
        // orbits are the cosets of (1-t)M, so the two counts agree and
        // divide the module order
        let part = orbit_partition(&rack);
        prop_assert_eq!(part.orbit_count() as u64, p.orbit_count());
        prop_assert_eq!(rack.size() % part.orbit_count(), 0);
    }

    #[test]
    fn constant_columns_violate_axiom_one(
        n in 2usize..=6,
        col in 0usize..6,
        fill in 0usize..6,
    ) {
        let mut table = make_dihedral(n as u64).table().to_vec();
        let col = col % n;
        for row in table.iter_mut() {
            row[col] = fill % n;
        }
        let rejected = matches!(
            FiniteRack::validate(table, "bad"),
            Err(RackError::AxiomIViolation { .. })
        );
        prop_assert!(rejected);
    }
}
