use chain_complex::BoundaryMatrix;
use num_bigint::BigInt;

/// Sparse integer matrix in triplet form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    pub rows: usize,
    pub cols: usize,
    /// (row, col, value) with value != 0; at most one entry per position.
    pub entries: Vec<(usize, usize, i128)>,
}

impl IntegerMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            entries: Vec::new(),
        }
    }

    pub fn from_dense(data: &[Vec<i128>]) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, |r| r.len());
        let mut entries = Vec::new();
        for (r, row) in data.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix");
            for (c, &v) in row.iter().enumerate() {
                if v != 0 {
                    entries.push((r, c, v));
                }
            }
        }
        IntegerMatrix { rows, cols, entries }
    }

    pub fn to_dense_bigint(&self) -> Vec<Vec<BigInt>> {
        let mut a = vec![vec![BigInt::from(0); self.cols]; self.rows];
        for &(r, c, v) in &self.entries {
            a[r][c] = BigInt::from(v);
        }
        a
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }
}

impl From<&BoundaryMatrix> for IntegerMatrix {
    fn from(b: &BoundaryMatrix) -> Self {
        IntegerMatrix {
            rows: b.rows,
            cols: b.cols,
            entries: b.entries.clone(),
        }
    }
}
