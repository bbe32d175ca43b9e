//! The golden table of quandle homology groups: expected values live in
//! `data/table1.txt` and every run recomputes and compares.

use chain_complex::{build_complex, ChainError, Variant};
use homology_engine::{homology, AbelianGroupInvariants};
use rack_core::parse_rack_spec;

pub const FIXTURE: &str = include_str!("../data/table1.txt");

#[derive(Debug, Clone)]
pub struct GoldenRow {
    pub spec: String,
    pub label: String,
    pub h2: AbelianGroupInvariants,
    pub h3: AbelianGroupInvariants,
}

pub fn golden_rows() -> Vec<GoldenRow> {
    let mut rows = Vec::new();
    for line in FIXTURE.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('|').map(str::trim).collect();
        assert_eq!(fields.len(), 4, "malformed fixture line: {line}");
        rows.push(GoldenRow {
            spec: fields[0].to_string(),
            label: fields[1].to_string(),
            h2: AbelianGroupInvariants::parse(fields[2])
                .unwrap_or_else(|e| panic!("fixture {line}: {e}")),
            h3: AbelianGroupInvariants::parse(fields[3])
                .unwrap_or_else(|e| panic!("fixture {line}: {e}")),
        });
    }
    rows
}

#[derive(Debug, Clone)]
pub struct RowResult {
    pub row: GoldenRow,
    pub got_h2: AbelianGroupInvariants,
    pub got_h3: AbelianGroupInvariants,
}

impl RowResult {
    pub fn h2_pass(&self) -> bool {
        self.got_h2 == self.row.h2
    }
    pub fn h3_pass(&self) -> bool {
        self.got_h3 == self.row.h3
    }
    pub fn pass(&self) -> bool {
        self.h2_pass() && self.h3_pass()
    }
}

pub fn compute_row(row: &GoldenRow, max_basis: Option<usize>) -> Result<RowResult, ChainError> {
    let rack = parse_rack_spec(&row.spec).expect("fixture specs are valid");
    let complex = build_complex(&rack, Variant::Q, 4, max_basis)?;
    Ok(RowResult {
        row: row.clone(),
        got_h2: homology(&complex, 2).unwrap(),
        got_h3: homology(&complex, 3).unwrap(),
    })
}
