//! Exhaustive per-tuple verification suites driven by the `verify`
//! subcommand: boundary squaring, the degeneracy projection identities and
//! the orbit-averaging chain homotopies.

use chain_complex::{
    alpha, boundary, build_complex, deg_projection, homotopy_d, is_degenerate, phi, ChainError,
    FormalChain, Variant,
};
use homology_engine::{VerdictItem, VerificationReport};
use rack_core::{orbit_partition, FiniteRack};

pub fn tuples(size: usize, degree: usize) -> impl Iterator<Item = Vec<usize>> {
    let count = size.checked_pow(degree as u32).expect("tuple count overflow");
    (0..count).map(move |mut idx| {
        let mut t = vec![0; degree];
        for slot in t.iter_mut().rev() {
            *slot = idx % size;
            idx /= size;
        }
        t
    })
}

/// `d D^j + D^j d = (-1)^{j+1} (|X| phi^{j-1} - phi^j)` on one tuple.
pub fn homotopy_identity_holds(rack: &FiniteRack, j: usize, tuple: &[usize]) -> bool {
    let size = rack.size() as i128;
    let c = FormalChain::from_tuple(tuple.to_vec());
    let d_then_boundary = boundary(rack, &homotopy_d(rack, j, &c)).unwrap();
    let boundary_then_d = homotopy_d(rack, j, &boundary(rack, &c).unwrap());
    let lhs = d_then_boundary.add(&boundary_then_d);
    let sign = if j % 2 == 0 { -1 } else { 1 };
    let rhs = phi(rack, j - 1, &c)
        .scale(size)
        .sub(&phi(rack, j, &c))
        .scale(sign);
    lhs == rhs
}

fn witness_item(label: String, witness: Option<String>, checked: usize) -> VerdictItem {
    match witness {
        None => VerdictItem {
            label,
            passed: true,
            detail: format!("all {checked} tuples"),
        },
        Some(w) => VerdictItem {
            label,
            passed: false,
            detail: format!("counterexample {w}"),
        },
    }
}

/// The chain homotopies between the orbit-averaging maps, degree by degree.
///
/// For racks without homogeneous orbits only the j = 1 homotopy is defined
/// without the orbit-summation lemmas, so only that one is asserted.
pub fn homotopy_suite(rack: &FiniteRack, max_degree: usize) -> VerificationReport {
    let homogeneous = orbit_partition(rack).homogeneous;
    let mut report = VerificationReport {
        subject: rack.label().to_string(),
        applicable: true,
        items: Vec::new(),
    };
    for n in 1..=max_degree.min(3) {
        let j_max = if homogeneous { n + 1 } else { 1 };
        for j in 1..=j_max {
            let mut witness = None;
            let mut checked = 0;
            for t in tuples(rack.size(), n) {
                checked += 1;
                if !homotopy_identity_holds(rack, j, &t) {
                    witness = Some(format!("{t:?}"));
                    break;
                }
            }
            report.items.push(witness_item(
                format!("homotopy identity n={n} j={j}"),
                witness,
                checked,
            ));
        }
    }
    if !homogeneous {
        report.items.push(VerdictItem {
            label: "homotopies with j >= 2".into(),
            passed: true,
            detail: "skipped: they require homogeneous orbits".into(),
        });
    }
    report
}

/// Boundary squaring for every applicable variant, and (for quandles) the
/// identities behind the degeneracy projection: the projection complement
/// is a chain map vanishing on degenerate tuples, and the projection is an
/// idempotent onto degenerate chains.
pub fn chain_maps_suite(
    rack: &FiniteRack,
    max_degree: usize,
    max_basis: Option<usize>,
) -> Result<VerificationReport, ChainError> {
    let mut report = VerificationReport {
        subject: rack.label().to_string(),
        applicable: true,
        items: Vec::new(),
    };
    let variants: &[Variant] = if rack.is_quandle() {
        &[Variant::R, Variant::D, Variant::Q, Variant::L]
    } else {
        &[Variant::R]
    };
    for &variant in variants {
        let complex = build_complex(rack, variant, max_degree, max_basis)?;
        report.items.push(VerdictItem {
            label: format!("d o d = 0 ({})", variant.letter()),
            passed: complex.check_boundary_squares_to_zero(),
            detail: format!("degrees up to {max_degree}"),
        });
    }
    if !rack.is_quandle() {
        return Ok(report);
    }
    for degree in 2..=max_degree {
        let mut commute = None;
        let mut vanish = None;
        let mut degen = None;
        let mut idem = None;
        let mut checked = 0;
        for t in tuples(rack.size(), degree) {
            checked += 1;
            let c = FormalChain::from_tuple(t.clone());
            let a = alpha(rack, &c).unwrap();
            let db = boundary(rack, &c).unwrap();
            if commute.is_none() && boundary(rack, &a).unwrap() != alpha(rack, &db).unwrap() {
                commute = Some(format!("{t:?}"));
            }
            if vanish.is_none() && is_degenerate(&t) && !a.is_zero() {
                vanish = Some(format!("{t:?}"));
            }
            let p = deg_projection(rack, &c).unwrap();
            if degen.is_none() && !p.is_degenerate_chain() {
                degen = Some(format!("{t:?}"));
            }
            if idem.is_none() && deg_projection(rack, &p).unwrap() != p {
                idem = Some(format!("{t:?}"));
            }
        }
        report.items.push(witness_item(
            format!("d alpha = alpha d, degree {degree}"),
            commute,
            checked,
        ));
        report.items.push(witness_item(
            format!("alpha vanishes on degenerate tuples, degree {degree}"),
            vanish,
            checked,
        ));
        report.items.push(witness_item(
            format!("c - alpha(c) is degenerate, degree {degree}"),
            degen,
            checked,
        ));
        report.items.push(witness_item(
            format!("projection is idempotent, degree {degree}"),
            idem,
            checked,
        ));
    }
    Ok(report)
}
