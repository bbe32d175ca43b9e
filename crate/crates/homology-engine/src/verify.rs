//! Structured verification of the two structural results on rack homology:
//! the closed-form Betti numbers with |X|^n-bounded torsion for racks with
//! homogeneous orbits, and the splitting of rack homology into quandle and
//! degeneracy parts for quandles.

use chain_complex::{build_complex, ChainError, GradedComplex, Variant};
use rack_core::{orbit_partition, FiniteRack};

use crate::group::AbelianGroupInvariants;
use crate::homology::homology;

#[derive(Debug, Clone)]
pub struct VerdictItem {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub subject: String,
    /// False when the rack does not satisfy the hypotheses (e.g. orbits are
    /// not homogeneous); no items are produced in that case.
    pub applicable: bool,
    pub items: Vec<VerdictItem>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }
}

fn expected_betti(variant: Variant, orbits: usize, n: usize) -> usize {
    match variant {
        Variant::R => orbits.pow(n as u32),
        Variant::Q => orbits * (orbits - 1).pow(n as u32 - 1),
        Variant::D => {
            orbits.pow(n as u32) - orbits * (orbits - 1).pow(n as u32 - 1)
        }
        Variant::L => unreachable!("no closed form asserted for L"),
    }
}

/// Betti numbers match the orbit counts and all torsion divides |X|^n, for
/// every applicable variant up to `max_degree`. Requires homogeneous orbits;
/// otherwise the report comes back with `applicable: false`.
pub fn verify_main_theorem(
    rack: &FiniteRack,
    max_degree: usize,
    max_basis: Option<usize>,
) -> Result<VerificationReport, ChainError> {
    let part = orbit_partition(rack);
    let mut report = VerificationReport {
        subject: rack.label().to_string(),
        applicable: part.homogeneous,
        items: Vec::new(),
    };
    if !part.homogeneous {
        return Ok(report);
    }
    let orbits = part.orbit_count();
    let size = rack.size() as u128;
    let variants: &[Variant] = if rack.is_quandle() {
        &[Variant::R, Variant::Q, Variant::D]
    } else {
        &[Variant::R]
    };
    for &variant in variants {
        let complex = build_complex(rack, variant, max_degree + 1, max_basis)?;
        for n in 1..=max_degree {
            let h = homology(&complex, n).expect("degree within build range");
            let expect = expected_betti(variant, orbits, n);
            report.items.push(VerdictItem {
                label: format!("betti {} H^{}_{}", rack.label(), variant.letter(), n),
                passed: h.free_rank() == expect,
                detail: format!("got {}, expected {expect}", h.free_rank()),
            });
            let bound = size.pow(n as u32);
            let passed = h.torsion().iter().all(|d| bound % d == 0);
            report.items.push(VerdictItem {
                label: format!("torsion {} H^{}_{}", rack.label(), variant.letter(), n),
                passed,
                detail: format!("factors {:?} against bound {bound}", h.torsion()),
            });
        }
    }
    Ok(report)
}

fn groups_up_to(
    rack: &FiniteRack,
    variant: Variant,
    max_degree: usize,
    max_basis: Option<usize>,
) -> Result<Vec<AbelianGroupInvariants>, ChainError> {
    let complex: GradedComplex = build_complex(rack, variant, max_degree + 1, max_basis)?;
    Ok((1..=max_degree)
        .map(|n| homology(&complex, n).expect("degree within build range"))
        .collect())
}

/// The quandle/degeneracy splitting of rack homology:
/// H^R_n = H^Q_n + H^D_n, with H^D_2 free on the orbits, the late-degeneracy
/// part of degree 3 free on orbit pairs, and the resulting degree-2 and
/// degree-3 decompositions of H^R in terms of H^Q alone.
pub fn verify_splitting(
    rack: &FiniteRack,
    max_degree: usize,
    max_basis: Option<usize>,
) -> Result<VerificationReport, ChainError> {
    if !rack.is_quandle() {
        return Err(ChainError::NotAQuandle(rack.label().to_string()));
    }
    assert!(max_degree >= 2);
    let orbits = orbit_partition(rack).orbit_count();
    let label = rack.label().to_string();
    let mut report = VerificationReport {
        subject: label.clone(),
        applicable: true,
        items: Vec::new(),
    };
    // index [n - 1] holds degree n
    let r = groups_up_to(rack, Variant::R, max_degree, max_basis)?;
    let q = groups_up_to(rack, Variant::Q, max_degree, max_basis)?;
    let d = groups_up_to(rack, Variant::D, max_degree, max_basis)?;

    for n in 1..=max_degree {
        let sum = q[n - 1].direct_sum(&d[n - 1]);
        report.items.push(VerdictItem {
            label: format!("H^R_{n}({label}) = H^Q_{n} + H^D_{n}"),
            passed: r[n - 1] == sum,
            detail: format!("{} vs {}", r[n - 1], sum),
        });
    }

    let free_orbits = AbelianGroupInvariants::free(orbits);
    report.items.push(VerdictItem {
        label: format!("H^D_2({label}) = Z^{orbits}"),
        passed: d[1] == free_orbits,
        detail: d[1].to_string(),
    });
    report.items.push(VerdictItem {
        label: format!("H^R_2({label}) = H^Q_2 + Z^{orbits}"),
        passed: r[1] == q[1].direct_sum(&free_orbits),
        detail: format!("{} vs {} + Z^{orbits}", r[1], q[1]),
    });

    if max_degree >= 3 {
        let pairs = AbelianGroupInvariants::free(orbits * orbits);
        let l3 = {
            let complex = build_complex(rack, Variant::L, 4, max_basis)?;
            homology(&complex, 3).expect("degree within build range")
        };
        report.items.push(VerdictItem {
            label: format!("H^L_3({label}) = Z^{}", orbits * orbits),
            passed: l3 == pairs,
            detail: l3.to_string(),
        });
        let rhs = q[2].direct_sum(&q[1]).direct_sum(&pairs);
        report.items.push(VerdictItem {
            label: format!("H^R_3({label}) = H^Q_3 + H^Q_2 + Z^{}", orbits * orbits),
            passed: r[2] == rhs,
            detail: format!("{} vs {}", r[2], rhs),
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rack_core::parse_rack_spec;

    #[test]
    fn main_theorem_on_small_homogeneous_racks() {
        for spec in ["dihedral:3", "dihedral:4", "trivial:2", "fr4", "alexander:2:t^2+1"] {
            let rack = parse_rack_spec(spec).unwrap();
            let report = verify_main_theorem(&rack, 3, None).unwrap();
            assert!(report.applicable, "{spec}");
            assert!(report.all_passed(), "{spec}: {:?}", report.items);
        }
    }

    #[test]
    fn main_theorem_not_applicable_to_inhomogeneous_racks() {
        let rack = parse_rack_spec("cyclic:3").unwrap();
        let report = verify_main_theorem(&rack, 2, None).unwrap();
        assert!(!report.applicable);
        assert!(report.items.is_empty());
    }

    #[test]
    fn splitting_on_small_quandles() {
        for spec in ["dihedral:3", "dihedral:4", "trivial:3", "alexander:3:t+1"] {
            let rack = parse_rack_spec(spec).unwrap();
            let report = verify_splitting(&rack, 3, None).unwrap();
            assert!(report.all_passed(), "{spec}: {:?}", report.items);
        }
    }

    #[test]
    fn splitting_rejects_non_quandles() {
        let rack = parse_rack_spec("cyclic:3").unwrap();
        assert!(verify_splitting(&rack, 2, None).is_err());
    }
}
