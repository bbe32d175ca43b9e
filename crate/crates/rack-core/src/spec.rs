use std::path::Path;

use crate::alexander::AlexanderPresentation;
use crate::error::RackError;
use crate::rack::{make_builtin, make_conjugation, FiniteRack};

/// Parse a polynomial like `t^2+t+1`, `t-4` or `2t+3` into coefficients
/// `c_0..c_d`, reduced mod `n`.
pub fn parse_polynomial(input: &str, modulus: u64) -> Result<Vec<u64>, RackError> {
    let bad = || RackError::BadPolynomial(input.to_string());
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(bad());
    }
    // split into signed terms
    let mut terms: Vec<(i64, String)> = Vec::new();
    let mut sign = 1i64;
    let mut cur = String::new();
    for (i, ch) in s.chars().enumerate() {
        match ch {
            '+' | '-' if i > 0 && !cur.is_empty() => {
                terms.push((sign, std::mem::take(&mut cur)));
                sign = if ch == '-' { -1 } else { 1 };
            }
            '-' if cur.is_empty() => sign = -sign,
            '+' if cur.is_empty() => {}
            _ => cur.push(ch),
        }
    }
    if cur.is_empty() {
        return Err(bad());
    }
    terms.push((sign, cur));

    let mut coeffs: Vec<i64> = Vec::new();
    for (sign, term) in terms {
        let (coef_str, power) = if let Some(rest) = term.strip_prefix('t') {
            ("1".to_string(), parse_power(rest).ok_or_else(bad)?)
        } else if let Some(pos) = term.find('t') {
            let (c, rest) = term.split_at(pos);
            let c = if c == "*" { "1" } else { c.trim_end_matches('*') };
            (c.to_string(), parse_power(&rest[1..]).ok_or_else(bad)?)
        } else {
            (term.clone(), 0)
        };
        let coef: i64 = coef_str.parse().map_err(|_| bad())?;
        if coeffs.len() <= power {
            coeffs.resize(power + 1, 0);
        }
        coeffs[power] += sign * coef;
    }
    let n = modulus as i64;
    Ok(coeffs.iter().map(|&c| (c.rem_euclid(n)) as u64).collect())
}

fn parse_power(rest: &str) -> Option<usize> {
    if rest.is_empty() {
        Some(1)
    } else {
        rest.strip_prefix('^')?.parse().ok()
    }
}

/// Parse a rack table file: `rack v1` header, `size n`, then n rows of n
/// entries; `#` starts a comment.
pub fn parse_rack_table(content: &str, label: impl Into<String>) -> Result<FiniteRack, RackError> {
    let table = parse_table_body(content, "rack v1")
        .map_err(RackError::TableFileInvalid)?;
    FiniteRack::validate(table, label)
}

/// Parse a group Cayley table file with header `group v1`; row g lists g*h.
pub fn parse_group_table(content: &str) -> Result<Vec<Vec<usize>>, RackError> {
    parse_table_body(content, "group v1").map_err(RackError::GroupTableInvalid)
}

fn parse_table_body(content: &str, header: &str) -> Result<Vec<Vec<usize>>, String> {
    let mut lines = content
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let first = lines.next().ok_or("empty file")?;
    if first != header {
        return Err(format!("expected header `{header}`, found `{first}`"));
    }
    let size_line = lines.next().ok_or("missing size line")?;
    let n: usize = size_line
        .strip_prefix("size")
        .map(str::trim)
        .ok_or("missing `size n` line")?
        .parse()
        .map_err(|_| "bad size value".to_string())?;
    let mut table = Vec::with_capacity(n);
    for _ in 0..n {
        let line = lines.next().ok_or("too few rows")?;
        let row: Result<Vec<usize>, _> = line.split_whitespace().map(str::parse).collect();
        table.push(row.map_err(|_| "bad table entry".to_string())?);
    }
    if lines.next().is_some() {
        return Err("trailing content after table".to_string());
    }
    Ok(table)
}

/// Build a rack from a spec string.
///
/// Grammar: `dihedral:n`, `alexander:n:<poly>`, `cyclic:n`, `trivial:n`,
/// `fr4`, `conj:<path>` (group Cayley table file), `table:<path>` (rack
/// table file).
pub fn parse_rack_spec(spec: &str) -> Result<FiniteRack, RackError> {
    if let Some(rest) = spec.strip_prefix("alexander:") {
        let (n_str, poly_str) = rest
            .split_once(':')
            .ok_or_else(|| RackError::UnknownSpec(spec.to_string()))?;
        let n: u64 = n_str
            .parse()
            .map_err(|_| RackError::UnknownSpec(spec.to_string()))?;
        let coeffs = parse_polynomial(poly_str, n)?;
        return Ok(AlexanderPresentation::new(n, &coeffs)?.make_rack());
    }
    if let Some(path) = spec.strip_prefix("conj:") {
        let content = std::fs::read_to_string(Path::new(path))
            .map_err(|e| RackError::GroupTableInvalid(format!("{path}: {e}")))?;
        let cayley = parse_group_table(&content)?;
        return make_conjugation(&cayley, spec);
    }
    if let Some(path) = spec.strip_prefix("table:") {
        let content = std::fs::read_to_string(Path::new(path))
            .map_err(|e| RackError::TableFileInvalid(format!("{path}: {e}")))?;
        return parse_rack_table(&content, spec);
    }
    make_builtin(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_parsing() {
        assert_eq!(parse_polynomial("t^2+t+1", 3).unwrap(), vec![1, 1, 1]);
        assert_eq!(parse_polynomial("t-4", 9).unwrap(), vec![5, 1]);
        assert_eq!(parse_polynomial("t^2-t-1", 3).unwrap(), vec![2, 2, 1]);
        assert_eq!(parse_polynomial("t^3+t^2+t+1", 2).unwrap(), vec![1, 1, 1, 1]);
        assert_eq!(parse_polynomial("t^2-1", 3).unwrap(), vec![2, 0, 1]);
        assert!(parse_polynomial("", 3).is_err());
        assert!(parse_polynomial("t^", 3).is_err());
    }

    #[test]
    fn spec_strings() {
        assert_eq!(parse_rack_spec("dihedral:5").unwrap().size(), 5);
        assert_eq!(parse_rack_spec("alexander:2:t^2+1").unwrap().size(), 4);
        assert_eq!(parse_rack_spec("fr4").unwrap().size(), 4);
        assert!(parse_rack_spec("nonsense").is_err());
        assert!(parse_rack_spec("alexander:4:t+2").is_err());
    }

    #[test]
    fn rack_table_file() {
        let content = "# a comment\nrack v1\nsize 3\n0 2 1  # row 0\n2 1 0\n1 0 2\n";
        let r = parse_rack_table(content, "table:test").unwrap();
        assert_eq!(r.size(), 3);
        assert!(r.is_quandle());
        assert!(parse_rack_table("rack v1\nsize 2\n0 0\n0 1\n", "t").is_err());
    }

    #[test]
    fn group_table_file() {
        // Z_3
        let content = "group v1\nsize 3\n0 1 2\n1 2 0\n2 0 1\n";
        let g = parse_group_table(content).unwrap();
        assert_eq!(g[1][2], 0);
        assert!(parse_group_table("rack v1\nsize 1\n0\n").is_err());
    }
}
