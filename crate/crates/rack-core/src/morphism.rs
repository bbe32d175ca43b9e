
use crate::alexander::AlexanderPresentation;
use crate::error::RackError;
use crate::orbit::orbit_partition;
use crate::rack::{make_dihedral, FiniteRack};

/// A map between two finite racks, stored as an element array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RackMorphism {
    source: FiniteRack,
    target: FiniteRack,
    map: Vec<usize>,
}

impl RackMorphism {
    pub fn new(source: FiniteRack, target: FiniteRack, map: Vec<usize>) -> Self {
        assert_eq!(map.len(), source.size());
        assert!(map.iter().all(|&v| v < target.size()));
        RackMorphism { source, target, map }
    }

    pub fn source(&self) -> &FiniteRack {
        &self.source
    }

    pub fn target(&self) -> &FiniteRack {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    /// Exhaustive check of `f(a^b) = f(a)^f(b)`.
    pub fn is_homomorphism(&self) -> bool {
        self.first_homomorphism_failure().is_none()
    }

    pub fn first_homomorphism_failure(&self) -> Option<(usize, usize)> {
        let n = self.source.size();
        for a in 0..n {
            for b in 0..n {
                if self.map[self.source.op(a, b)] != self.target.op(self.map[a], self.map[b]) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_bijection(&self) -> bool {
        if self.source.size() != self.target.size() {
            return false;
        }
        let mut seen = vec![false; self.target.size()];
        for &v in &self.map {
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_bijection() && self.is_homomorphism()
    }
}

/// Per-element invariant profile used to prune the isomorphism search.
///
/// Pruning is heuristic only; correctness rests on the exhaustive
/// homomorphism check of the completed map.
fn element_profiles(rack: &FiniteRack) -> Vec<Vec<u64>> {
    let n = rack.size();
    let part = orbit_partition(rack);
    let base: Vec<Vec<u64>> = (0..n)
        .map(|a| {
            let mut profile = Vec::new();
            profile.push(u64::from(rack.op(a, a) == a));
            profile.push(part.orbit_members[part.orbit_of[a]].len() as u64);
            profile.push(part.n_matrix[a][a]);
            let cycle_type = rack.column_cycle_type(a);
            profile.push(cycle_type.len() as u64);
            profile.extend(cycle_type.iter().map(|&c| c as u64));
            let mut row: Vec<u64> = part.n_matrix[a].clone();
            row.sort_unstable();
            profile.extend(row);
            let mut col: Vec<u64> = (0..n).map(|b| part.n_matrix[b][a]).collect();
            col.sort_unstable();
            profile.extend(col);
            profile
        })
        .collect();

    // refine by the multiset of (profile(b), profile(a^b)) pairs, a few rounds
    let mut colors: Vec<u64> = base.iter().map(|p| hash_vec(p)).collect();
    for _ in 0..3 {
        let next: Vec<u64> = (0..n)
            .map(|a| {
                let mut pairs: Vec<(u64, u64, u64)> = (0..n)
                    .map(|b| (colors[b], colors[rack.op(a, b)], colors[rack.op(b, a)]))
                    .collect();
                pairs.sort_unstable();
                let mut acc = colors[a];
                for (x, y, z) in pairs {
                    acc = acc
                        .wrapping_mul(0x100000001b3)
                        .wrapping_add(x)
                        .wrapping_mul(0x100000001b3)
                        .wrapping_add(y)
                        .wrapping_mul(0x100000001b3)
                        .wrapping_add(z);
                }
                acc
            })
            .collect();
        if next == colors {
            break;
        }
        colors = next;
    }
    colors.into_iter().map(|c| vec![c]).collect()
}

fn hash_vec(v: &[u64]) -> u64 {
    let mut acc = 0xcbf29ce484222325u64;
    for &x in v {
        acc = (acc ^ x).wrapping_mul(0x100000001b3);
    }
    acc
}

/// Search for a rack isomorphism `X -> Y` by backtracking over candidate
/// bijections, pruned by element invariants.
///
/// Returns the lexicographically least witness (images chosen in increasing
/// order for elements 0, 1, ...), or `None` after exhausting the search,
/// which is a proof of non-isomorphism.
pub fn find_isomorphism(x: &FiniteRack, y: &FiniteRack) -> Option<RackMorphism> {
    let n = x.size();
    if n != y.size() || x.is_quandle() != y.is_quandle() {
        return None;
    }
    let px = element_profiles(x);
    let py = element_profiles(y);
    {
        let mut hx: Vec<_> = px.clone();
        let mut hy: Vec<_> = py.clone();
        hx.sort_unstable();
        hy.sort_unstable();
        if hx != hy {
            return None;
        }
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if backtrack(x, y, &px, &py, &mut map, &mut used, 0) {
        let m = RackMorphism::new(x.clone(), y.clone(), map);
        debug_assert!(m.is_isomorphism());
        Some(m)
    } else {
        None
    }
}

fn backtrack(
    x: &FiniteRack,
    y: &FiniteRack,
    px: &[Vec<u64>],
    py: &[Vec<u64>],
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    a: usize,
) -> bool {
    let n = x.size();
    if a == n {
        return true;
    }
    'candidates: for v in 0..n {
        if used[v] || px[a] != py[v] {
            continue;
        }
        map[a] = v;
        used[v] = true;
        // check all pairs whose images are now determined
        for i in 0..=a {
            for (p, q) in [(i, a), (a, i)] {
                let img = map[x.op(p, q)];
                if img != usize::MAX && img != y.op(map[p], map[q]) {
                    map[a] = usize::MAX;
                    used[v] = false;
                    continue 'candidates;
                }
            }
        }
        if backtrack(x, y, px, py, map, used, a + 1) {
            return true;
        }
        map[a] = usize::MAX;
        used[v] = false;
    }
    false
}

/// The explicit isomorphism `Lambda_{n^2}/(t-(kn+1)) -> Lambda_n/((t-1)^2)`
/// for `k` coprime to `n`: `f(a) = k b(a) + (t-1) d(a)` where `b` reduces
/// mod n and `d(a) = (a - b(a))/n`, using the least-nonnegative section.
pub fn prop41_map(n: u64, k: u64) -> Result<RackMorphism, RackError> {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    if n < 2 {
        return Err(RackError::BadModulus(n));
    }
    if gcd(k % n, n) != 1 {
        return Err(RackError::NotCoprime { n, k });
    }
    let n2 = n * n;
    let source = AlexanderPresentation::new(n2, &[(n2 - (k * n + 1) % n2) % n2, 1])?.make_rack();
    // (t-1)^2 = t^2 - 2t + 1
    let target_pres = AlexanderPresentation::new(n, &[1, (2 * n - 2) % n, 1])?;
    let target = target_pres.make_rack();
    let map: Vec<usize> = (0..n2)
        .map(|a| {
            let beta = a % n;
            let delta = ((a - beta) / n) % n;
            let c0 = (k * beta + n - delta % n) % n;
            let c1 = delta % n;
            (c0 + c1 * n) as usize
        })
        .collect();
    let morphism = RackMorphism::new(source, target, map);
    match morphism.first_homomorphism_failure() {
        None if morphism.is_bijection() => Ok(morphism),
        Some((a, b)) => Err(RackError::NotAHomomorphism { a, b }),
        None => unreachable!("verified bijection"),
    }
}

/// The explicit involution `f(a) = a + eps(a)` giving
/// `R_{2n} -> Lambda_{2n}/(t-(n-1))` for `4 | n`, where `eps(a)` is 0 for
/// `a = 0, 1 mod 4` and `n` for `a = 2, 3 mod 4`.
pub fn prop42_map(n: u64) -> Result<RackMorphism, RackError> {
    if n % 4 != 0 {
        return Err(RackError::NotDivisibleBy4(n));
    }
    let two_n = 2 * n;
    let source = make_dihedral(two_n);
    let target = AlexanderPresentation::new(two_n, &[(two_n - (n - 1)) % two_n, 1])?.make_rack();
    let map: Vec<usize> = (0..two_n)
        .map(|a| {
            let eps = if a % 4 < 2 { 0 } else { n };
            ((a + eps) % two_n) as usize
        })
        .collect();
    let morphism = RackMorphism::new(source, target, map);
    match morphism.first_homomorphism_failure() {
        None if morphism.is_bijection() => Ok(morphism),
        Some((a, b)) => Err(RackError::NotAHomomorphism { a, b }),
        None => unreachable!("verified bijection"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rack::{make_cyclic, make_trivial};

    fn alex(n: u64, poly: &[u64]) -> FiniteRack {
        AlexanderPresentation::new(n, poly).unwrap().make_rack()
    }

    #[test]
    fn r4_iso_lambda2_t2_plus_1() {
        let r4 = make_dihedral(4);
        let l = alex(2, &[1, 0, 1]);
        let iso = find_isomorphism(&r4, &l).expect("R_4 is isomorphic to Lambda_2/(t^2+1)");
        assert!(iso.is_isomorphism());
    }

    #[test]
    fn r8_iso_lambda8_t_minus_3() {
        let r8 = make_dihedral(8);
        let l = alex(8, &[5, 1]); // t-3
        assert!(find_isomorphism(&r8, &l).is_some());
    }

    #[test]
    fn quandle_vs_non_quandle() {
        assert!(find_isomorphism(&make_dihedral(3), &make_cyclic(3)).is_none());
        assert!(find_isomorphism(&make_dihedral(3), &make_trivial(3)).is_none());
    }

    #[test]
    fn witness_is_lexicographically_least() {
        let r = make_trivial(3);
        let iso = find_isomorphism(&r, &r).unwrap();
        assert_eq!(iso.map(), &[0, 1, 2]);
    }

    #[test]
    fn prop41_instances() {
        for (n, k) in [(2, 1), (3, 1), (3, 2), (4, 1), (4, 3)] {
            let m = prop41_map(n, k).unwrap();
            assert!(m.is_isomorphism(), "n = {n}, k = {k}");
        }
        assert!(matches!(prop41_map(4, 2), Err(RackError::NotCoprime { .. })));
    }

    #[test]
    fn prop42_instances() {
        for n in [4, 8] {
            let m = prop42_map(n).unwrap();
            assert!(m.is_isomorphism(), "n = {n}");
            // f is an involution
            for a in 0..m.map().len() {
                assert_eq!(m.map()[m.map()[a]], a);
            }
        }
        assert!(matches!(prop42_map(6), Err(RackError::NotDivisibleBy4(6))));
    }

    #[test]
    fn prop41_n3_matches_brute_force() {
        // Lambda_9/(t-4) and Lambda_9/(t-7) are both isomorphic to
        // Lambda_3/(t^2+t+1)
        let l944 = alex(9, &[5, 1]); // t-4
        let l947 = alex(9, &[2, 1]); // t-7
        let l3 = alex(3, &[1, 1, 1]);
        assert!(find_isomorphism(&l944, &l3).is_some());
        assert!(find_isomorphism(&l947, &l3).is_some());
        assert!(find_isomorphism(&l944, &l947).is_some());
    }
}
