use std::collections::HashMap;

use rack_core::FiniteRack;

use crate::chain::{boundary_of_tuple, is_degenerate, is_late_degenerate, ChainError, Tuple};

/// The four complex variants: the free rack complex, its degeneracy
/// subcomplex, the quandle quotient, and the late-degeneracy subcomplex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    R,
    D,
    Q,
    L,
}

impl Variant {
    pub fn requires_quandle(self) -> bool {
        !matches!(self, Variant::R)
    }

    pub fn letter(self) -> char {
        match self {
            Variant::R => 'R',
            Variant::D => 'D',
            Variant::Q => 'Q',
            Variant::L => 'L',
        }
    }
}

impl std::str::FromStr for Variant {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "R" => Ok(Variant::R),
            "D" => Ok(Variant::D),
            "Q" => Ok(Variant::Q),
            "L" => Ok(Variant::L),
            other => Err(format!("unknown variant `{other}` (expected R, D, Q or L)")),
        }
    }
}

/// An integer matrix in sparse triplet form; the boundary in one degree with
/// respect to the stored bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub rows: usize,
    pub cols: usize,
    /// (row, col, value) with value != 0, sorted by column then row.
    pub entries: Vec<(usize, usize, i128)>,
}

impl BoundaryMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        BoundaryMatrix {
            rows,
            cols,
            entries: Vec::new(),
        }
    }

    /// Sparse product `self * other`, used to assert `d . d = 0`.
    pub fn multiply(&self, other: &BoundaryMatrix) -> BoundaryMatrix {
        assert_eq!(self.cols, other.rows);
        let mut by_col: Vec<Vec<(usize, i128)>> = vec![Vec::new(); self.cols];
        for &(r, c, v) in &self.entries {
            by_col[c].push((r, v));
        }
        let mut out = HashMap::new();
        for &(r, c, v) in &other.entries {
            for &(r2, v2) in &by_col[r] {
                *out.entry((r2, c)).or_insert(0i128) += v * v2;
            }
        }
        let mut entries: Vec<(usize, usize, i128)> = out
            .into_iter()
            .filter(|&(_, v)| v != 0)
            .map(|((r, c), v)| (r, c, v))
            .collect();
        entries.sort_unstable_by_key(|&(r, c, _)| (c, r));
        BoundaryMatrix {
            rows: self.rows,
            cols: other.cols,
            entries,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Per-degree bases and boundary matrices of one complex variant.
///
/// Bases are in lexicographic tuple order. Degree 0 is rank 1 (the empty
/// tuple) for variant R and zero for D, Q and L; reported homology is only
/// meaningful for degrees >= 1, where both degree-0 conventions agree.
#[derive(Debug, Clone)]
pub struct GradedComplex {
    variant: Variant,
    rack: FiniteRack,
    max_degree: usize,
    bases: Vec<Vec<Tuple>>,
    /// `boundaries[n - 1]` is the matrix of `d_n` for `1 <= n <= max_degree`.
    boundaries: Vec<BoundaryMatrix>,
}

fn tuples_of_degree(size: usize, degree: usize) -> impl Iterator<Item = Tuple> {
    let count = size.checked_pow(degree as u32).expect("basis size overflow");
    (0..count).map(move |mut idx| {
        let mut t = vec![0; degree];
        for slot in t.iter_mut().rev() {
            *slot = idx % size;
            idx /= size;
        }
        t
    })
}

fn in_variant(variant: Variant, tuple: &[usize]) -> bool {
    match variant {
        Variant::R => true,
        Variant::D => is_degenerate(tuple),
        Variant::Q => !is_degenerate(tuple),
        Variant::L => is_late_degenerate(tuple),
    }
}

/// Enumerate bases and assemble the boundary matrices of a complex variant.
///
/// `max_basis` guards against runaway basis sizes; `None` means unlimited.
pub fn build_complex(
    rack: &FiniteRack,
    variant: Variant,
    max_degree: usize,
    max_basis: Option<usize>,
) -> Result<GradedComplex, ChainError> {
    assert!(max_degree >= 1);
    if variant.requires_quandle() && !rack.is_quandle() {
        return Err(ChainError::NotAQuandle(rack.label().to_string()));
    }
    let size = rack.size();

    let mut bases: Vec<Vec<Tuple>> = Vec::with_capacity(max_degree + 1);
    bases.push(if variant == Variant::R {
        vec![Vec::new()]
    } else {
        Vec::new()
    });
    for degree in 1..=max_degree {
        if let Some(cap) = max_basis {
            // the R enumeration is the upper bound for every variant
            if size.checked_pow(degree as u32).map_or(true, |c| c > cap) {
                return Err(ChainError::DegreeTooLarge {
                    degree,
                    cap,
                });
            }
        }
        let basis: Vec<Tuple> = tuples_of_degree(size, degree)
            .filter(|t| in_variant(variant, t))
            .collect();
        bases.push(basis);
    }

    let mut boundaries = Vec::with_capacity(max_degree);
    for degree in 1..=max_degree {
        let target_index: HashMap<&[usize], usize> = bases[degree - 1]
            .iter()
            .map(|t| t.as_slice())
            .zip(0..)
            .collect();
        let mut entries = Vec::new();
        for (col, tuple) in bases[degree].iter().enumerate() {
            let image = boundary_of_tuple(rack, tuple);
            for (t, c) in image.iter() {
                match target_index.get(t.as_slice()) {
                    Some(&row) => entries.push((row, col, c)),
                    None => match variant {
                        // quotient: degenerate targets are dropped
                        Variant::Q => {}
                        // subcomplexes are closed under the boundary
                        Variant::D | Variant::L => {
                            panic!(
                                "boundary of {:?} leaves the {:?} basis",
                                tuple, variant
                            )
                        }
                        Variant::R => unreachable!("R basis is complete"),
                    },
                }
            }
        }
        entries.sort_unstable_by_key(|&(r, c, _)| (c, r));
        boundaries.push(BoundaryMatrix {
            rows: bases[degree - 1].len(),
            cols: bases[degree].len(),
            entries,
        });
    }

    Ok(GradedComplex {
        variant,
        rack: rack.clone(),
        max_degree,
        bases,
        boundaries,
    })
}

impl GradedComplex {
    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn rack(&self) -> &FiniteRack {
        &self.rack
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn basis(&self, degree: usize) -> &[Tuple] {
        &self.bases[degree]
    }

    pub fn rank(&self, degree: usize) -> usize {
        self.bases[degree].len()
    }

    /// The matrix of `d_n : C_n -> C_{n-1}`, for `1 <= n <= max_degree`.
    pub fn boundary_matrix(&self, n: usize) -> &BoundaryMatrix {
        &self.boundaries[n - 1]
    }

    /// Assert `d_n . d_{n+1} = 0` for all applicable degrees.
    pub fn check_boundary_squares_to_zero(&self) -> bool {
        (1..self.max_degree)
            .all(|n| self.boundary_matrix(n).multiply(self.boundary_matrix(n + 1)).is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rack_core::{make_cyclic, make_dihedral, make_trivial, parse_rack_spec};

    #[test]
    fn trivial_rack_has_zero_boundaries() {
        let c = build_complex(&make_trivial(2), Variant::R, 3, None).unwrap();
        for n in 1..=3 {
            assert!(c.boundary_matrix(n).is_zero());
            assert_eq!(c.rank(n), 2usize.pow(n as u32));
        }
    }

    #[test]
    fn q_degree_two_basis_size() {
        for spec in ["dihedral:3", "dihedral:4", "alexander:2:t^2+1"] {
            let rack = parse_rack_spec(spec).unwrap();
            let n = rack.size();
            let c = build_complex(&rack, Variant::Q, 2, None).unwrap();
            assert_eq!(c.rank(2), n * n - n);
            assert_eq!(c.rank(1), n);
        }
    }

    #[test]
    fn basis_partition_invariants() {
        let rack = make_dihedral(4);
        let r = build_complex(&rack, Variant::R, 3, None).unwrap();
        let d = build_complex(&rack, Variant::D, 3, None).unwrap();
        let q = build_complex(&rack, Variant::Q, 3, None).unwrap();
        let l = build_complex(&rack, Variant::L, 3, None).unwrap();
        for n in 1..=3 {
            assert_eq!(d.rank(n) + q.rank(n), r.rank(n));
            let d_set: std::collections::HashSet<_> = d.basis(n).iter().collect();
            assert!(q.basis(n).iter().all(|t| !d_set.contains(t)));
            assert!(l.basis(n).iter().all(|t| d_set.contains(t)));
        }
        assert_eq!(l.rank(1), 0);
        assert_eq!(l.rank(2), 0);
    }

    #[test]
    fn boundary_squares_to_zero() {
        for spec in ["dihedral:3", "dihedral:4", "cyclic:3", "fr4", "trivial:3"] {
            let rack = parse_rack_spec(spec).unwrap();
            let c = build_complex(&rack, Variant::R, 4, None).unwrap();
            assert!(c.check_boundary_squares_to_zero(), "{spec}");
        }
        let r4 = make_dihedral(4);
        for v in [Variant::D, Variant::Q, Variant::L] {
            let c = build_complex(&r4, v, 4, None).unwrap();
            assert!(c.check_boundary_squares_to_zero(), "{v:?}");
        }
    }

    #[test]
    fn quandle_required_for_subvariants() {
        let c3 = make_cyclic(3);
        assert!(matches!(
            build_complex(&c3, Variant::Q, 2, None),
            Err(ChainError::NotAQuandle(_))
        ));
    }

    #[test]
    fn r3_degree_two_matrix_shape() {
        let c = build_complex(&make_dihedral(3), Variant::R, 2, None).unwrap();
        assert_eq!(c.rank(2), 9);
        let m = c.boundary_matrix(2);
        assert_eq!((m.rows, m.cols), (3, 9));
    }

    #[test]
    fn basis_cap_enforced() {
        let rack = make_dihedral(4);
        assert!(matches!(
            build_complex(&rack, Variant::R, 4, Some(100)),
            Err(ChainError::DegreeTooLarge { degree: 4, .. })
        ));
        assert!(build_complex(&rack, Variant::R, 3, Some(100)).is_ok());
    }
}
