use std::collections::HashMap;

use rack_core::{FiniteRack, OrbitPartition};

use crate::chain::{ChainError, FormalChain, Tuple};

/// Memoized computation of the splitting chain map `alpha`.
///
/// `alpha_1` is the identity; for a tuple `x * y` of degree n+1,
/// `alpha(x * y) = alpha(x) * y - alpha(x) * x_n`.
pub struct AlphaMemo {
    cache: HashMap<Tuple, FormalChain>,
}

impl AlphaMemo {
    /// The rack argument is only inspected for the quandle condition; the
    /// recursion itself never applies the operation.
    pub fn new(rack: &FiniteRack) -> Result<Self, ChainError> {
        if !rack.is_quandle() {
            return Err(ChainError::NotAQuandle(rack.label().to_string()));
        }
        Ok(AlphaMemo {
            cache: HashMap::new(),
        })
    }

    pub fn of_tuple(&mut self, tuple: &[usize]) -> FormalChain {
        assert!(!tuple.is_empty(), "alpha is defined in degrees >= 1");
        if tuple.len() == 1 {
            return FormalChain::from_tuple(tuple.to_vec());
        }
        if let Some(hit) = self.cache.get(tuple) {
            return hit.clone();
        }
        let n = tuple.len() - 1;
        let prefix = &tuple[..n];
        let y = tuple[n];
        let last = tuple[n - 1];
        let inner = self.of_tuple(prefix);
        let result = inner.append(y).sub(&inner.append(last));
        self.cache.insert(tuple.to_vec(), result.clone());
        result
    }

    pub fn of_chain(&mut self, chain: &FormalChain) -> FormalChain {
        let degree = chain.degree();
        let mut out = FormalChain::zero(degree);
        for (t, c) in chain.iter() {
            for (u, d) in self.of_tuple(t).iter() {
                out.add_term(u.clone(), c * d);
            }
        }
        out
    }
}

/// The chain map `alpha` applied to a chain; quandles only.
pub fn alpha(rack: &FiniteRack, chain: &FormalChain) -> Result<FormalChain, ChainError> {
    let mut memo = AlphaMemo::new(rack)?;
    Ok(memo.of_chain(chain))
}

/// `beta_n(x) = alpha_n(x) * x_n`, extended tuple-wise; raises the degree by
/// one.
pub fn beta_map(rack: &FiniteRack, chain: &FormalChain) -> Result<FormalChain, ChainError> {
    let mut memo = AlphaMemo::new(rack)?;
    assert!(chain.degree() >= 1);
    let mut out = FormalChain::zero(chain.degree() + 1);
    for (t, c) in chain.iter() {
        let last = *t.last().expect("degree >= 1");
        for (u, d) in memo.of_tuple(t).append(last).iter() {
            out.add_term(u.clone(), c * d);
        }
    }
    Ok(out)
}

/// The projection `c -> c - alpha(c)` onto the degeneracy subcomplex.
pub fn deg_projection(rack: &FiniteRack, chain: &FormalChain) -> Result<FormalChain, ChainError> {
    Ok(chain.sub(&alpha(rack, chain)?))
}

/// Sum over all ways of replacing the selected entries by orbit-mates,
/// weighted by the counts `N(x, z)`.
///
/// For each chosen position `i`, entry `x_i` ranges over the values
/// `z` with `N(x_i, z) > 0`; a term's weight is the product of the counts.
/// This is exactly `sum_{y in X^j}` of the entrywise action, grouped by
/// resulting tuple.
fn weighted_action_sum(
    rack: &FiniteRack,
    tuple: &[usize],
    acted: usize,
    out_degree: usize,
    build: impl Fn(&[usize]) -> Vec<Tuple>,
) -> FormalChain {
    let n = rack.size();
    let targets: Vec<Vec<(usize, i128)>> = tuple[..acted]
        .iter()
        .map(|&x| {
            (0..n)
                .filter_map(|z| {
                    let count = rack.count_n(x, z);
                    (count > 0).then_some((z, count as i128))
                })
                .collect()
        })
        .collect();
    let mut out = FormalChain::zero(out_degree);
    let mut replacement = vec![0usize; acted];
    // depth-first product over the per-position target lists
    fn recurse(
        targets: &[Vec<(usize, i128)>],
        replacement: &mut Vec<usize>,
        position: usize,
        weight: i128,
        out: &mut FormalChain,
        build: &impl Fn(&[usize]) -> Vec<Tuple>,
    ) {
        if position == targets.len() {
            for t in build(replacement) {
                out.add_term(t, weight);
            }
            return;
        }
        for &(z, w) in &targets[position] {
            replacement[position] = z;
            recurse(targets, replacement, position + 1, weight * w, out, build);
        }
    }
    recurse(&targets, &mut replacement, 0, 1, &mut out, &build);
    out
}

/// `phi^j`: identity for j = 0; for `1 <= j <= n` the sum over `y in X^j` of
/// the tuple whose first j entries are acted on entrywise; for `j > n`,
/// `|X|^{j-n} phi^n`.
pub fn phi(rack: &FiniteRack, j: usize, chain: &FormalChain) -> FormalChain {
    if j == 0 {
        return chain.clone();
    }
    let n = chain.degree();
    if j > n {
        let scalar = (rack.size() as i128).pow((j - n) as u32);
        return phi(rack, n, chain).scale(scalar);
    }
    chain.map_tuples(n, |t| {
        let rest: Vec<usize> = t[j..].to_vec();
        weighted_action_sum(rack, t, j, n, |replacement| {
            let mut out = replacement.to_vec();
            out.extend_from_slice(&rest);
            vec![out]
        })
    })
}

/// The homotopy `D^j`: zero for `j > n`; otherwise the sum over `y in X^j`
/// inserting `y_j` after position j, with the first j-1 entries acted on.
pub fn homotopy_d(rack: &FiniteRack, j: usize, chain: &FormalChain) -> FormalChain {
    assert!(j >= 1);
    let n = chain.degree();
    if j > n {
        return FormalChain::zero(n + 1);
    }
    let size = rack.size();
    chain.map_tuples(n + 1, |t| {
        let xj = t[j - 1];
        let rest: Vec<usize> = t[j..].to_vec();
        weighted_action_sum(rack, t, j - 1, n + 1, |replacement| {
            (0..size)
                .map(|yj| {
                    let mut out = replacement.to_vec();
                    out.push(xj);
                    out.push(yj);
                    out.extend_from_slice(&rest);
                    out
                })
                .collect()
        })
    })
}

/// The cycle `psi(omega_1,...,omega_n)`: the product of the `N_omega` times
/// the sum over all tuples drawn from the orbits.
pub fn psi(
    rack: &FiniteRack,
    orbit_tuple: &[usize],
    partition: &OrbitPartition,
) -> Result<FormalChain, ChainError> {
    let n_values = partition
        .n_values
        .as_ref()
        .ok_or_else(|| ChainError::NotHomogeneous(rack.label().to_string()))?;
    let factor: i128 = orbit_tuple
        .iter()
        .map(|&w| n_values[w] as i128)
        .product();
    let mut out = FormalChain::zero(orbit_tuple.len());
    let members: Vec<&[usize]> = orbit_tuple
        .iter()
        .map(|&w| partition.orbit_members[w].as_slice())
        .collect();
    fn recurse(members: &[&[usize]], prefix: &mut Tuple, factor: i128, out: &mut FormalChain) {
        match members.split_first() {
            None => out.add_term(prefix.clone(), factor),
            Some((first, rest)) => {
                for &z in *first {
                    prefix.push(z);
                    recurse(rest, prefix, factor, out);
                    prefix.pop();
                }
            }
        }
    }
    recurse(&members, &mut Vec::new(), factor, &mut out);
    Ok(out)
}

/// `r(x_1,...,x_{n-1}) = (x_1,x_1,x_2,...,x_{n-1})`, the shift used in the
/// decomposition of the degeneracy complex.
pub fn r_shift(rack: &FiniteRack, chain: &FormalChain) -> Result<FormalChain, ChainError> {
    if !rack.is_quandle() {
        return Err(ChainError::NotAQuandle(rack.label().to_string()));
    }
    assert!(chain.degree() >= 1);
    let mut out = FormalChain::zero(chain.degree() + 1);
    for (t, c) in chain.iter() {
        let mut u = Vec::with_capacity(t.len() + 1);
        u.push(t[0]);
        u.extend_from_slice(t);
        out.add_term(u, c);
    }
    Ok(out)
}
