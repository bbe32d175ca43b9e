use crate::rack::{make_trivial, FiniteRack};
use crate::morphism::RackMorphism;

/// Orbit decomposition of a finite rack, together with the homogeneity data
/// `N(a,b)`.
///
/// Orbits are the connected components of the action generated by all column
/// maps `f_b` and their inverses. `N(a,b)` counts the elements `c` with
/// `a^c = b`; the rack has homogeneous orbits when `N(a,b)` is constant on
/// each orbit, in which case that constant is `N_omega = |X| / |omega|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPartition {
    pub orbit_of: Vec<usize>,
    pub orbit_members: Vec<Vec<usize>>,
    pub homogeneous: bool,
    /// `N_omega` per orbit, present only when homogeneous.
    pub n_values: Option<Vec<u64>>,
    /// Full table of `N(a,b)`.
    pub n_matrix: Vec<Vec<u64>>,
}

impl OrbitPartition {
    pub fn orbit_count(&self) -> usize {
        self.orbit_members.len()
    }
}

/// Compute the orbit partition and homogeneity report of a rack.
pub fn orbit_partition(rack: &FiniteRack) -> OrbitPartition {
    let n = rack.size();
    let inverses: Vec<Vec<usize>> = (0..n).map(|b| rack.inverse_column(b)).collect();

    let mut orbit_of = vec![usize::MAX; n];
    let mut orbit_members: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = orbit_members.len();
        let mut members = Vec::new();
        let mut stack = vec![start];
        orbit_of[start] = id;
        while let Some(a) = stack.pop() {
            members.push(a);
            for b in 0..n {
                for next in [rack.op(a, b), inverses[b][a]] {
                    if orbit_of[next] == usize::MAX {
                        orbit_of[next] = id;
                        stack.push(next);
                    }
                }
            }
        }
        members.sort_unstable();
        orbit_members.push(members);
    }

    let n_matrix: Vec<Vec<u64>> = (0..n)
        .map(|a| (0..n).map(|b| rack.count_n(a, b)).collect())
        .collect();

    // homogeneous iff N(a,b) = |X|/|orbit| for every same-orbit pair
    let mut homogeneous = true;
    let mut n_values = Vec::with_capacity(orbit_members.len());
    for members in &orbit_members {
        if n as u64 % members.len() as u64 != 0 {
            homogeneous = false;
            break;
        }
        let expected = n as u64 / members.len() as u64;
        for &a in members {
            for &b in members {
                if n_matrix[a][b] != expected {
                    homogeneous = false;
                }
            }
        }
        if !homogeneous {
            break;
        }
        n_values.push(expected);
    }

    OrbitPartition {
        orbit_of,
        orbit_members,
        homogeneous,
        n_values: if homogeneous { Some(n_values) } else { None },
        n_matrix,
    }
}

/// The orbit rack (a trivial rack on the orbit set) and the projection
/// morphism onto it.
pub fn orbit_rack(rack: &FiniteRack) -> (FiniteRack, RackMorphism) {
    let part = orbit_partition(rack);
    let m = part.orbit_count();
    let trivial = make_trivial(m as u64).with_label(format!("orbits({})", rack.label()));
    let morphism = RackMorphism::new(rack.clone(), trivial.clone(), part.orbit_of.clone());
    debug_assert!(morphism.is_homomorphism());
    (trivial, morphism)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rack::{make_cyclic, make_dihedral, make_fr4, make_trivial};

    #[test]
    fn trivial_rack_orbits() {
        let r = make_trivial(5);
        let p = orbit_partition(&r);
        assert_eq!(p.orbit_count(), 5);
        assert!(p.homogeneous);
        assert_eq!(p.n_values.as_deref(), Some(&[5, 5, 5, 5, 5][..]));
    }

    #[test]
    fn cyclic_not_homogeneous() {
        let p = orbit_partition(&make_cyclic(3));
        assert_eq!(p.orbit_count(), 1);
        assert!(!p.homogeneous);
        assert_eq!(p.n_matrix[0][1], 3);
        assert_eq!(p.n_matrix[0][2], 0);
    }

    #[test]
    fn dihedral_orbits() {
        let p = orbit_partition(&make_dihedral(4));
        assert_eq!(p.orbit_count(), 2);
        assert_eq!(p.orbit_members, vec![vec![0, 2], vec![1, 3]]);
        assert!(p.homogeneous);
        assert_eq!(p.n_values.as_deref(), Some(&[2, 2][..]));
        for n in [3u64, 5, 7] {
            assert_eq!(orbit_partition(&make_dihedral(n)).orbit_count(), 1);
        }
        for n in [4u64, 6, 8] {
            assert_eq!(orbit_partition(&make_dihedral(n)).orbit_count(), 2);
        }
    }

    #[test]
    fn fr4_homogeneity() {
        let p = orbit_partition(&make_fr4());
        assert_eq!(p.orbit_count(), 3);
        assert!(p.homogeneous);
        assert_eq!(p.n_matrix[0][0], 2);
        assert_eq!(p.n_matrix[0][1], 2);
    }

    #[test]
    fn orbit_rack_projection() {
        let (orb, pi) = orbit_rack(&make_dihedral(5));
        assert_eq!(orb.size(), 1);
        assert!(pi.is_homomorphism());

        let (orb, pi) = orbit_rack(&make_trivial(3));
        assert_eq!(orb.size(), 3);
        assert!(pi.is_homomorphism());
        assert_eq!(pi.map(), &[0, 1, 2]);
    }

    #[test]
    fn n_row_sums_equal_size() {
        for rack in [make_dihedral(6), make_cyclic(4), make_fr4()] {
            let p = orbit_partition(&rack);
            for a in 0..rack.size() {
                let sum: u64 = p.n_matrix[a].iter().sum();
                assert_eq!(sum, rack.size() as u64);
            }
        }
    }
}
