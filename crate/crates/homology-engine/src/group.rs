use std::collections::BTreeMap;
use std::fmt;

/// A finitely generated abelian group in canonical form: a free rank plus a
/// divisibility chain of invariant factors d_1 | d_2 | ..., all > 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroupInvariants {
    free_rank: usize,
    torsion: Vec<u128>,
}

fn factorize(mut n: u128) -> Vec<(u128, u32)> {
    let mut out = Vec::new();
    let mut p = 2u128;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

impl AbelianGroupInvariants {
    pub fn trivial() -> Self {
        AbelianGroupInvariants {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroupInvariants {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// Canonicalize an arbitrary list of cyclic factors. Factors of 1 are
    /// dropped and a factor 0 counts as a free summand.
    pub fn from_factors(free_rank: usize, factors: impl IntoIterator<Item = u128>) -> Self {
        let mut free_rank = free_rank;
        let mut exps: BTreeMap<u128, Vec<u32>> = BTreeMap::new();
        for f in factors {
            match f {
                0 => free_rank += 1,
                1 => {}
                f => {
                    for (p, e) in factorize(f) {
                        exps.entry(p).or_default().push(e);
                    }
                }
            }
        }
        for list in exps.values_mut() {
            list.sort_unstable_by(|a, b| b.cmp(a));
        }
        let chain_len = exps.values().map(Vec::len).max().unwrap_or(0);
        let mut torsion = vec![1u128; chain_len];
        for (p, list) in &exps {
            for (i, &e) in list.iter().enumerate() {
                torsion[i] *= p.pow(e);
            }
        }
        torsion.reverse();
        AbelianGroupInvariants { free_rank, torsion }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    /// Invariant factors > 1, ascending under divisibility.
    pub fn torsion(&self) -> &[u128] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        Self::from_factors(
            self.free_rank + other.free_rank,
            self.torsion.iter().chain(&other.torsion).copied(),
        )
    }

    /// Torsion regrouped as (prime power q, multiplicity), ascending in q.
    pub fn primary_factors(&self) -> Vec<(u128, usize)> {
        let mut counts: BTreeMap<u128, usize> = BTreeMap::new();
        for &d in &self.torsion {
            for (p, e) in factorize(d) {
                *counts.entry(p.pow(e)).or_default() += 1;
            }
        }
        counts.into_iter().collect()
    }

    /// How many invariant factors p divides; together with the free rank
    /// this drives the universal-coefficient dimension count.
    pub fn count_factors_divisible_by(&self, p: u64) -> usize {
        self.torsion.iter().filter(|&&d| d % p as u128 == 0).count()
    }

    /// Parse the display syntax, e.g. "0", "Z^2 + Z_2^2 + Z_8".
    pub fn parse(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::trivial());
        }
        let mut free = 0usize;
        let mut factors: Vec<u128> = Vec::new();
        for token in s.split('+') {
            let token = token.trim();
            let (base, mult) = match token.split_once('^') {
                Some((b, m)) => {
                    let mult: usize = m
                        .parse()
                        .map_err(|_| format!("bad exponent in `{token}`"))?;
                    (b, mult)
                }
                None => (token, 1),
            };
            if base == "Z" {
                free += mult;
            } else if let Some(q) = base.strip_prefix("Z_") {
                let q: u128 = q.parse().map_err(|_| format!("bad modulus in `{token}`"))?;
                if q < 2 {
                    return Err(format!("modulus must be at least 2 in `{token}`"));
                }
                factors.extend(std::iter::repeat(q).take(mult));
            } else {
                return Err(format!("unrecognized summand `{token}`"));
            }
        }
        Ok(Self::from_factors(free, factors))
    }
}

impl fmt::Display for AbelianGroupInvariants {
    /// Primary decomposition style: "Z^2 + Z_2^2 + Z_8", or "0" if trivial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for (q, mult) in self.primary_factors() {
            if mult == 1 {
                parts.push(format!("Z_{q}"));
            } else {
                parts.push(format!("Z_{q}^{mult}"));
            }
        }
        write!(f, "{}", parts.join(" + "))
    }
}
