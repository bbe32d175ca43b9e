use std::collections::BTreeMap;
use std::fmt;

use rack_core::FiniteRack;
use thiserror::Error;

/// A degree-n basis element: an ordered tuple of rack elements.
pub type Tuple = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("face index {index} out of range for degree {degree}")]
    IndexOutOfRange { index: usize, degree: usize },
    #[error("boundary of a degree-0 chain is undefined")]
    DegreeZero,
    #[error("operation requires a quandle, `{0}` is not one")]
    NotAQuandle(String),
    #[error("operation requires homogeneous orbits, `{0}` does not have them")]
    NotHomogeneous(String),
    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeTooLarge { degree: usize, cap: usize },
}

/// `true` if some adjacent pair of entries repeats (x_i = x_{i+1}).
pub fn is_degenerate(tuple: &[usize]) -> bool {
    tuple.windows(2).any(|w| w[0] == w[1])
}

/// `true` if an adjacent repeat occurs at position >= 2.
pub fn is_late_degenerate(tuple: &[usize]) -> bool {
    tuple.len() >= 3 && tuple[1..].windows(2).any(|w| w[0] == w[1])
}

/// A finite integer combination of tuples of one fixed degree.
///
/// Zero coefficients are never stored; terms are kept in lexicographic tuple
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalChain {
    degree: usize,
    terms: BTreeMap<Tuple, i128>,
}

impl FormalChain {
    pub fn zero(degree: usize) -> Self {
        FormalChain {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_tuple(tuple: Tuple) -> Self {
        let mut c = FormalChain::zero(tuple.len());
        c.add_term(tuple, 1);
        c
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, tuple: &[usize]) -> i128 {
        self.terms.get(tuple).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Tuple, i128)> {
        self.terms.iter().map(|(t, &c)| (t, c))
    }

    pub fn add_term(&mut self, tuple: Tuple, coefficient: i128) {
        debug_assert_eq!(tuple.len(), self.degree);
        if coefficient == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(tuple) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += coefficient;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(coefficient);
            }
        }
    }

    pub fn add(&self, other: &FormalChain) -> FormalChain {
        assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (t, c) in other.iter() {
            out.add_term(t.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &FormalChain) -> FormalChain {
        assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (t, c) in other.iter() {
            out.add_term(t.clone(), -c);
        }
        out
    }

    pub fn scale(&self, factor: i128) -> FormalChain {
        let mut out = FormalChain::zero(self.degree);
        if factor != 0 {
            for (t, c) in self.iter() {
                out.terms.insert(t.clone(), c * factor);
            }
        }
        out
    }

    /// Append `y` to every tuple (the paper's `c * y`).
    pub fn append(&self, y: usize) -> FormalChain {
        let mut out = FormalChain::zero(self.degree + 1);
        for (t, c) in self.iter() {
            let mut t = t.clone();
            t.push(y);
            out.terms.insert(t, c);
        }
        out
    }

    /// Act entrywise by `y` (the paper's `c^y`).
    pub fn act(&self, rack: &FiniteRack, y: usize) -> FormalChain {
        let mut out = FormalChain::zero(self.degree);
        for (t, c) in self.iter() {
            let t: Tuple = t.iter().map(|&x| rack.op(x, y)).collect();
            out.add_term(t, c);
        }
        out
    }

    /// All tuples have an adjacent repeat.
    pub fn is_degenerate_chain(&self) -> bool {
        self.terms.keys().all(|t| is_degenerate(t))
    }

    /// Apply a tuple-wise linear map.
    pub fn map_tuples(&self, degree: usize, mut f: impl FnMut(&[usize]) -> FormalChain) -> FormalChain {
        let mut out = FormalChain::zero(degree);
        for (t, c) in self.iter() {
            let image = f(t);
            debug_assert_eq!(image.degree(), degree);
            for (u, d) in image.iter() {
                out.add_term(u.clone(), c * d);
            }
        }
        out
    }
}

impl fmt::Display for FormalChain {
    /// Debug text form: `c * (x1,x2,...)` terms joined by ` + ` / ` - ` in
    /// lexicographic tuple order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (t, c)) in self.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mag != 1 {
                write!(f, "{mag} * ")?;
            }
            let entries: Vec<String> = t.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", entries.join(","))?;
        }
        Ok(())
    }
}

/// The cubical face map `d_i^eps` (1-indexed).
///
/// `d_i^0` deletes entry i; `d_i^1` lets entry i act on every earlier entry
/// and then deletes it.
pub fn face(rack: &FiniteRack, tuple: &[usize], i: usize, eps: u8) -> Result<Tuple, ChainError> {
    let n = tuple.len();
    if i == 0 || i > n {
        return Err(ChainError::IndexOutOfRange { index: i, degree: n });
    }
    let mut out = Vec::with_capacity(n - 1);
    match eps {
        0 => {
            out.extend_from_slice(&tuple[..i - 1]);
            out.extend_from_slice(&tuple[i..]);
        }
        _ => {
            let xi = tuple[i - 1];
            out.extend(tuple[..i - 1].iter().map(|&x| rack.op(x, xi)));
            out.extend_from_slice(&tuple[i..]);
        }
    }
    Ok(out)
}

/// The boundary of a single tuple: `sum_i (-1)^i (d_i^0 - d_i^1)`.
pub fn boundary_of_tuple(rack: &FiniteRack, tuple: &[usize]) -> FormalChain {
    let n = tuple.len();
    assert!(n >= 1);
    let mut out = FormalChain::zero(n - 1);
    for i in 1..=n {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        out.add_term(face(rack, tuple, i, 0).expect("index in range"), sign);
        out.add_term(face(rack, tuple, i, 1).expect("index in range"), -sign);
    }
    out
}

/// Boundary of a chain, extended linearly. Degree-1 chains map to 0.
pub fn boundary(rack: &FiniteRack, chain: &FormalChain) -> Result<FormalChain, ChainError> {
    if chain.degree() == 0 {
        return Err(ChainError::DegreeZero);
    }
    Ok(chain.map_tuples(chain.degree() - 1, |t| boundary_of_tuple(rack, t)))
}
