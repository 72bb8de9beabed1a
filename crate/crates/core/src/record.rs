//! Line-oriented on-disk format for certified inequalities.
//!
//! One record per line, semicolon-separated fields:
//!
//! ```text
//! scenario;coefficients;L;Q;v_crit;tight;canonical_digest;provenance
//! 2x2x2;1 0 0 -1 0 -1 -1 0;2;4.00000000000e0;5.00000000000e-1;true;ab3f...;mermin
//! ```
//!
//! Coefficients appear in table layout order (Alice slowest). Integer fields
//! round-trip bit-exactly; real fields carry 12 significant digits.

use crate::error::{Error, Result};
use crate::scenario::Scenario;
use crate::tensor::BellTensor;
use std::io::{BufRead, Write};

/// A certified inequality as persisted by the search and verify commands.
#[derive(Clone, Debug, PartialEq)]
pub struct InequalityRecord {
    pub tensor: BellTensor,
    pub local_bound: i64,
    pub quantum_value: f64,
    pub v_crit: f64,
    pub tight: bool,
    pub canonical_digest: String,
    pub provenance: String,
}

impl InequalityRecord {
    /// Checks the record invariants: nonnegative bound and
    /// `v_crit = L / Q` whenever `Q > 0`.
    pub fn validate(&self) -> Result<()> {
        if self.local_bound < 0 {
            return Err(Error::Record {
                line: 0,
                reason: format!("negative local bound {}", self.local_bound),
            });
        }
        if self.quantum_value > 0.0 {
            let expect = self.local_bound as f64 / self.quantum_value;
            if (self.v_crit - expect).abs() > 1e-9 * expect.abs().max(1.0) {
                return Err(Error::Record {
                    line: 0,
                    reason: format!(
                        "v_crit {} inconsistent with L/Q = {expect}",
                        self.v_crit
                    ),
                });
            }
        }
        Ok(())
    }
}

fn fmt_real(x: f64) -> String {
    format!("{x:.11e}")
}

/// Serializes one record to a single line (no trailing newline).
pub fn format_record(r: &InequalityRecord) -> Result<String> {
    r.validate()?;
    let coeffs: Vec<String> = r.tensor.coeffs().iter().map(|c| c.to_string()).collect();
    // field separator and newlines are not representable in free text
    let provenance: String = r
        .provenance
        .chars()
        .map(|c| if c == ';' || c == '\n' || c == '\r' { ' ' } else { c })
        .collect();
    Ok(format!(
        "{};{};{};{};{};{};{};{}",
        r.tensor.scenario(),
        coeffs.join(" "),
        r.local_bound,
        fmt_real(r.quantum_value),
        fmt_real(r.v_crit),
        r.tight,
        r.canonical_digest,
        provenance
    ))
}

/// Parses one record line. `line_no` is used only for error reporting.
pub fn parse_record(line: &str, line_no: usize) -> Result<InequalityRecord> {
    let err = |reason: String| Error::Record {
        line: line_no,
        reason,
    };
    let fields: Vec<&str> = line.trim_end_matches(['\n', '\r']).split(';').collect();
    if fields.len() != 8 {
        return Err(err(format!("expected 8 fields, got {}", fields.len())));
    }
    let scenario: Scenario = fields[0]
        .parse()
        .map_err(|e| err(format!("scenario: {e}")))?;
    let coeffs: Vec<i64> = fields[1]
        .split_whitespace()
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| err(format!("coefficient `{t}` is not a 64-bit integer")))
        })
        .collect::<Result<_>>()?;
    if coeffs.len() != scenario.dim() {
        return Err(err(format!(
            "coefficient count {} does not match scenario {scenario}",
            coeffs.len()
        )));
    }
    let tensor = BellTensor::new(scenario, coeffs).map_err(|e| err(e.to_string()))?;
    let local_bound: i64 = fields[2]
        .parse()
        .map_err(|_| err(format!("local bound `{}`", fields[2])))?;
    let quantum_value: f64 = fields[3]
        .parse()
        .map_err(|_| err(format!("quantum value `{}`", fields[3])))?;
    let v_crit: f64 = fields[4]
        .parse()
        .map_err(|_| err(format!("visibility `{}`", fields[4])))?;
    let tight = match fields[5] {
        "true" => true,
        "false" => false,
        other => return Err(err(format!("tight flag `{other}`"))),
    };
    Ok(InequalityRecord {
        tensor,
        local_bound,
        quantum_value,
        v_crit,
        tight,
        canonical_digest: fields[6].to_string(),
        provenance: fields[7].to_string(),
    })
}

/// Writes records, one line each.
pub fn write_records<W: Write>(mut w: W, records: &[InequalityRecord]) -> Result<()> {
    for r in records {
        writeln!(w, "{}", format_record(r)?)?;
    }
    Ok(())
}

/// Reads records from a line-oriented stream; empty lines and `#` comments
/// are skipped.
pub fn read_records<R: BufRead>(r: R) -> Result<Vec<InequalityRecord>> {
    let mut out = Vec::new();
    for (idx, line) in r.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        out.push(parse_record(trimmed, idx + 1)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn mermin_record() -> InequalityRecord {
        InequalityRecord {
            tensor: catalog::mermin_tensor(),
            local_bound: 2,
            quantum_value: 4.0,
            v_crit: 0.5,
            tight: true,
            canonical_digest: "abc123".into(),
            provenance: "mermin".into(),
        }
    }

    #[test]
    fn round_trip_identity() {
        let r = mermin_record();
        let line = format_record(&r).unwrap();
        let back = parse_record(&line, 1).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn real_fields_keep_12_significant_digits() {
        let mut r = mermin_record();
        r.quantum_value = 24.169_923_456_789;
        r.v_crit = 2.0 / r.quantum_value;
        let line = format_record(&r).unwrap();
        let back = parse_record(&line, 1).unwrap();
        assert!((back.quantum_value - r.quantum_value).abs() < 1e-10);
        assert!((back.v_crit - r.v_crit).abs() < 1e-12);
    }

    #[test]
    fn wrong_coefficient_count_is_rejected() {
        let line = "2x2x2;1 0 0 -1 0 -1 -1;2;4.0e0;5.0e-1;true;d;x";
        assert!(matches!(
            parse_record(line, 3),
            Err(Error::Record { line: 3, .. })
        ));
    }

    #[test]
    fn malformed_lines_are_rejected() {
        assert!(parse_record("not a record", 1).is_err());
        assert!(parse_record("2x2x2;1 0 0 -1 0 -1 -1 0;2;4.0e0;5.0e-1;true;d", 1).is_err());
        // coefficient overflowing i64
        let line = "2x2x2;99999999999999999999 0 0 -1 0 -1 -1 0;2;4.0e0;5.0e-1;true;d;x";
        assert!(parse_record(line, 1).is_err());
    }

    #[test]
    fn inconsistent_visibility_fails_write() {
        let mut r = mermin_record();
        r.v_crit = 0.75;
        assert!(format_record(&r).is_err());
    }

    #[test]
    fn provenance_is_sanitized() {
        let mut r = mermin_record();
        r.provenance = "a;b\nc".into();
        let line = format_record(&r).unwrap();
        let back = parse_record(&line, 1).unwrap();
        assert_eq!(back.provenance, "a b c");
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let text = format!("# catalog\n\n{}\n", format_record(&mermin_record()).unwrap());
        let records = read_records(text.as_bytes()).unwrap();
        assert_eq!(records.len(), 1);
    }
}
