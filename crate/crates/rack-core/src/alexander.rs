use crate::error::RackError;
use crate::rack::FiniteRack;

/// A finite Alexander rack presented as `Z_n[t, t^-1] / (h)` for a monic
/// polynomial `h` whose constant term is a unit mod n.
///
/// Elements are the residues, i.e. coefficient vectors `(c_0,...,c_{d-1})`
/// mod n where `d = deg h`; the rack has `n^d` elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlexanderPresentation {
    modulus: u64,
    /// Coefficients `c_0..c_d` of `h`, reduced mod n, with `c_d = 1`.
    poly: Vec<u64>,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl AlexanderPresentation {
    pub fn new(modulus: u64, poly: &[u64]) -> Result<Self, RackError> {
        if modulus < 2 {
            return Err(RackError::BadModulus(modulus));
        }
        let mut poly: Vec<u64> = poly.iter().map(|&c| c % modulus).collect();
        while poly.len() > 1 && *poly.last().unwrap() == 0 {
            poly.pop();
        }
        let lead = *poly.last().unwrap_or(&0);
        if poly.len() < 2 || lead != 1 {
            return Err(RackError::NonMonic {
                lead,
                modulus,
            });
        }
        if gcd(poly[0], modulus) != 1 {
            return Err(RackError::NonUnitConstantTerm {
                constant: poly[0],
                modulus,
            });
        }
        Ok(AlexanderPresentation { modulus, poly })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn degree(&self) -> usize {
        self.poly.len() - 1
    }

    pub fn poly(&self) -> &[u64] {
        &self.poly
    }

    /// Number of elements of the presented rack, `n^{deg h}`.
    pub fn size(&self) -> u64 {
        self.modulus.pow(self.degree() as u32)
    }

    /// Display label, e.g. `alexander:8:t-5`.
    pub fn label(&self) -> String {
        format!("alexander:{}:{}", self.modulus, self.poly_string())
    }

    /// Render the polynomial with coefficients in `0..n`, e.g. `t^2+t+1`.
    pub fn poly_string(&self) -> String {
        let mut parts = Vec::new();
        for (k, &c) in self.poly.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let var = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            let part = if k == 0 {
                format!("{c}")
            } else if c == 1 {
                var
            } else {
                format!("{c}{var}")
            };
            parts.push(part);
        }
        parts.join("+")
    }

    /// Decode an element index into its coefficient vector.
    fn decode(&self, mut x: u64) -> Vec<u64> {
        let n = self.modulus;
        (0..self.degree())
            .map(|_| {
                let c = x % n;
                x /= n;
                c
            })
            .collect()
    }

    fn encode(&self, coeffs: &[u64]) -> u64 {
        let n = self.modulus;
        coeffs.iter().rev().fold(0, |acc, &c| acc * n + (c % n))
    }

    /// Multiply a residue by `t`, reducing mod `(n, h)`.
    fn times_t(&self, coeffs: &[u64]) -> Vec<u64> {
        let n = self.modulus;
        let d = self.degree();
        let mut out = vec![0u64; d];
        let carry = coeffs[d - 1];
        for i in 1..d {
            out[i] = coeffs[i - 1];
        }
        // subtract carry * (h - t^d)
        for i in 0..d {
            out[i] = (out[i] + n * n - (carry * self.poly[i]) % n) % n;
        }
        out
    }

    /// The rack operation `a^b = t a + (1 - t) b` on element indices.
    pub fn op(&self, a: u64, b: u64) -> u64 {
        let n = self.modulus;
        let av = self.decode(a);
        let bv = self.decode(b);
        let ta = self.times_t(&av);
        let tb = self.times_t(&bv);
        let out: Vec<u64> = (0..self.degree())
            .map(|i| (ta[i] + bv[i] + n - tb[i] % n) % n)
            .collect();
        self.encode(&out)
    }

    /// Build the full operation table.
    ///
    /// Elements are enumerated by coefficient vectors in lexicographic order
    /// (value `sum c_i n^i`), so basis indexing is reproducible.
    pub fn make_rack(&self) -> FiniteRack {
        let size = self.size() as usize;
        let table = (0..size as u64)
            .map(|a| (0..size as u64).map(|b| self.op(a, b) as usize).collect())
            .collect();
        FiniteRack::validate(table, self.label()).expect("Alexander operation satisfies the rack axioms")
    }

    /// Order of the orbit set, computed as `|M| / |(1-t)M|`.
    pub fn orbit_count(&self) -> u64 {
        let size = self.size();
        let n = self.modulus;
        let mut image = std::collections::HashSet::new();
        for x in 0..size {
            let xv = self.decode(x);
            let tx = self.times_t(&xv);
            let y: Vec<u64> = (0..self.degree())
                .map(|i| (xv[i] + n - tx[i] % n) % n)
                .collect();
            image.insert(self.encode(&y));
        }
        size / image.len() as u64
    }
}
