//! Sinogram files.
//!
//! Text form: a header line `DPRT v1 N=<N> B=<B>` followed by `N + 1` lines
//! of `N` comma-separated decimal coefficients, line `m` holding projection
//! `m`. Binary form: the header line with ` binary` appended, then all
//! coefficients row-major as little-endian integers of `ceil((B + n) / 8)`
//! bytes, `n = ceil(log2 N)`.

use std::fmt::Write as _;

use dprt_core::{DprtError, RadonArray};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SinogramError {
    #[error("missing or malformed header (expected `DPRT v1 N=<N> B=<B>`)")]
    BadHeader,
    #[error("line {line}: expected {expected} values, found {found}")]
    RowLength {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: invalid value {text:?}")]
    BadValue { line: usize, text: String },
    #[error("expected {expected} rows, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error("binary payload has {found} bytes, expected {expected}")]
    PayloadSize { expected: usize, found: usize },
    #[error(transparent)]
    Invalid(#[from] DprtError),
}

fn header(r: &RadonArray) -> String {
    format!("DPRT v1 N={} B={}", r.n(), r.bits())
}

/// Bytes per coefficient in the binary form.
pub fn value_bytes(r: &RadonArray) -> usize {
    (r.coefficient_bits() as usize).div_ceil(8)
}

pub fn write_text(r: &RadonArray) -> String {
    let mut out = header(r);
    out.push('\n');
    for m in 0..=r.n() {
        for (d, v) in r.projection(m).iter().enumerate() {
            if d > 0 {
                out.push(',');
            }
            write!(out, "{v}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn write_binary(r: &RadonArray) -> Vec<u8> {
    let mut out = format!("{} binary\n", header(r)).into_bytes();
    let w = value_bytes(r);
    for &v in r.values() {
        out.extend_from_slice(&v.to_le_bytes()[..w]);
    }
    out
}

fn parse_header(line: &str) -> Result<(usize, u32, bool), SinogramError> {
    let mut parts = line.split_ascii_whitespace();
    if parts.next() != Some("DPRT") || parts.next() != Some("v1") {
        return Err(SinogramError::BadHeader);
    }
    let mut field = |key: &str| {
        parts
            .next()
            .and_then(|p| p.strip_prefix(key))
            .and_then(|v| v.parse::<u64>().ok())
            .ok_or(SinogramError::BadHeader)
    };
    let n = field("N=")? as usize;
    let bits = u32::try_from(field("B=")?).map_err(|_| SinogramError::BadHeader)?;
    let binary = match parts.next() {
        None => false,
        Some("binary") => true,
        Some(_) => return Err(SinogramError::BadHeader),
    };
    if parts.next().is_some() {
        return Err(SinogramError::BadHeader);
    }
    Ok((n, bits, binary))
}

/// Reads either form, detected from the header line.
pub fn parse(bytes: &[u8]) -> Result<RadonArray, SinogramError> {
    let end = bytes.iter().position(|&b| b == b'\n').ok_or(SinogramError::BadHeader)?;
    let head = std::str::from_utf8(&bytes[..end]).map_err(|_| SinogramError::BadHeader)?;
    let (n, bits, binary) = parse_header(head.trim_end_matches('\r'))?;
    if !dprt_core::is_prime(n as u64) {
        return Err(DprtError::NotPrime(n).into());
    }
    let body = &bytes[end + 1..];
    let values = if binary {
        let w = (bits as usize + dprt_core::ceil_log2(n as u64) as usize).div_ceil(8);
        let expected = (n + 1) * n * w;
        if w > 8 || body.len() != expected {
            return Err(SinogramError::PayloadSize {
                expected,
                found: body.len(),
            });
        }
        body.chunks_exact(w)
            .map(|c| {
                let mut buf = [0u8; 8];
                buf[..w].copy_from_slice(c);
                u64::from_le_bytes(buf)
            })
            .collect()
    } else {
        let text = std::str::from_utf8(body).map_err(|_| SinogramError::BadValue {
            line: 2,
            text: "non-UTF-8 data".into(),
        })?;
        let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
        if lines.len() != n + 1 {
            return Err(SinogramError::RowCount {
                expected: n + 1,
                found: lines.len(),
            });
        }
        let mut values = Vec::with_capacity((n + 1) * n);
        for (m, l) in lines.iter().enumerate() {
            let line = m + 2;
            let row: Vec<&str> = l.split(',').map(str::trim).collect();
            if row.len() != n {
                return Err(SinogramError::RowLength {
                    line,
                    expected: n,
                    found: row.len(),
                });
            }
            for t in row {
                let v = t.parse::<u64>().map_err(|_| SinogramError::BadValue {
                    line,
                    text: t.to_string(),
                })?;
                values.push(v);
            }
        }
        values
    };
    Ok(RadonArray::new(n, bits, values)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use dprt_core::{forward_dprt, Image};

    fn example() -> RadonArray {
        forward_dprt(&Image::new(3, 4, (1..=9).collect()).unwrap())
    }

    #[test]
    fn text_layout() {
        let text = write_text(&example());
        assert_eq!(text, "DPRT v1 N=3 B=4\n12,15,18\n15,15,15\n15,15,15\n6,15,24\n");
        assert_eq!(parse(text.as_bytes()).unwrap(), example());
    }

    #[test]
    fn binary_layout() {
        let bytes = write_binary(&example());
        assert!(bytes.starts_with(b"DPRT v1 N=3 B=4 binary\n"));
        assert_eq!(bytes.len(), 23 + 12);
        assert_eq!(parse(&bytes).unwrap(), example());
    }

    #[test]
    fn malformed_files() {
        assert_eq!(parse(b"DPRT v2 N=3 B=4\n"), Err(SinogramError::BadHeader));
        assert_eq!(parse(b"no newline"), Err(SinogramError::BadHeader));
        assert!(matches!(
            parse(b"DPRT v1 N=3 B=4\n1,2,3\n"),
            Err(SinogramError::RowCount { .. })
        ));
        assert!(matches!(
            parse(b"DPRT v1 N=3 B=4\n1,2\n1,2,3\n1,2,3\n1,2,3\n"),
            Err(SinogramError::RowLength { line: 2, .. })
        ));
        assert!(matches!(
            parse(b"DPRT v1 N=3 B=4\n1,2,x\n1,2,3\n1,2,3\n1,2,3\n"),
            Err(SinogramError::BadValue { .. })
        ));
        assert!(matches!(
            parse(b"DPRT v1 N=4 B=4\n"),
            Err(SinogramError::Invalid(DprtError::NotPrime(4)))
        ));
        assert!(matches!(
            parse(b"DPRT v1 N=3 B=1\n4,0,0\n0,0,0\n0,0,0\n0,0,0\n"),
            Err(SinogramError::Invalid(DprtError::CoefficientOutOfRange { .. }))
        ));
    }
}
