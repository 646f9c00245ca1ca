//! Plain-text formats.
//!
//! `skb1` holds a digroup:
//!
//! ```text
//! skb1
//! <n>
//! <n rows of the * table>
//! <n rows of the o table>
//! ```
//!
//! Lines starting with `#` and blank lines are ignored. Both units must be
//! `0`. `ybe1` has the same layout with the first and second components of
//! a Yang–Baxter map in place of the two tables.

use std::fmt::Write as _;

use crate::brace::Digroup;
use crate::error::Error;
use crate::limits::Limits;
use crate::ybe::YbeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("{0}")]
    Validation(#[from] Error),
}

fn parse_err(line: usize, reason: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        reason: reason.into(),
    }
}

pub fn parse_brace_file(text: &str, limits: &Limits) -> Result<Digroup, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let last_line = text.lines().count().max(1);
    let mut next = |what: &str| {
        lines
            .next()
            .ok_or_else(|| parse_err(last_line, format!("missing {what}")))
    };

    let (line, header) = next("header")?;
    if header != "skb1" {
        return Err(parse_err(
            line,
            format!("expected header skb1, found {header:?}"),
        ));
    }
    let (line, order) = next("order")?;
    let n: usize = order
        .parse()
        .map_err(|_| parse_err(line, format!("bad order {order:?}")))?;
    if n == 0 {
        return Err(parse_err(line, "order must be positive"));
    }
    let mut table = |name: &str| -> Result<Vec<Vec<usize>>, FormatError> {
        (0..n)
            .map(|r| {
                let (line, text) = next(&format!("row {r} of the {name} table"))?;
                let row = text
                    .split_whitespace()
                    .map(|tok| match tok.parse::<usize>() {
                        Ok(v) if v < n => Ok(v),
                        Ok(v) => Err(parse_err(
                            line,
                            format!("entry {v} out of range for order {n}"),
                        )),
                        Err(_) => Err(parse_err(line, format!("bad entry {tok:?}"))),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                if row.len() != n {
                    return Err(parse_err(
                        line,
                        format!("expected {n} entries, found {}", row.len()),
                    ));
                }
                Ok(row)
            })
            .collect()
    };
    let star = table("*")?;
    let circ = table("o")?;
    if let Some((line, _)) = lines.next() {
        return Err(parse_err(line, "unexpected trailing content"));
    }
    Ok(Digroup::from_rows(&star, &circ, limits)?)
}

fn write_rows(out: &mut String, rows: impl IntoIterator<Item = Vec<usize>>) {
    for row in rows {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        writeln!(out, "{}", cells.join(" ")).expect("string write");
    }
}

pub fn serialize_brace(d: &Digroup) -> String {
    let mut out = format!("skb1\n{}\n", d.order());
    write_rows(&mut out, d.star().rows());
    write_rows(&mut out, d.circ().rows());
    out
}

pub fn serialize_ybe(r: &YbeMap) -> String {
    let mut out = format!("ybe1\n{}\n", r.order());
    write_rows(&mut out, r.first_components());
    write_rows(&mut out, r.second_components());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Op;
    use crate::group::FiniteGroup;

    #[test]
    fn smallest_brace_text() {
        let d = Digroup::trivial(&FiniteGroup::cyclic(2));
        let text = serialize_brace(&d);
        assert_eq!(text, "skb1\n2\n0 1\n1 0\n0 1\n1 0\n");
        assert_eq!(parse_brace_file(&text, &Limits::default()).unwrap(), d);
    }

    #[test]
    fn comments_are_skipped() {
        let text = "# order two\nskb1\n2\n# star\n0 1\n1 0\n\n0 1\n1 0\n";
        assert!(parse_brace_file(text, &Limits::default()).is_ok());
    }

    #[test]
    fn parse_errors() {
        let l = Limits::default();
        let err = parse_brace_file("skb1\n2\n0 1\n1 2\n0 1\n1 0\n", &l).unwrap_err();
        assert_eq!(
            err,
            FormatError::Parse {
                line: 4,
                reason: "entry 2 out of range for order 2".into()
            }
        );
        assert!(matches!(
            parse_brace_file("skb2\n1\n0\n0\n", &l),
            Err(FormatError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_brace_file("skb1\n2\n0 1\n1 0\n0 1\n", &l),
            Err(FormatError::Parse { .. })
        ));
        assert!(matches!(
            parse_brace_file("skb1\n1\n0\n0\n0\n", &l),
            Err(FormatError::Parse { line: 5, .. })
        ));
        assert!(matches!(
            parse_brace_file("skb1\n2\n0 1 1\n1 0\n0 1\n1 0\n", &l),
            Err(FormatError::Parse { line: 3, .. })
        ));
    }

    #[test]
    fn unit_elsewhere_is_a_validation_error() {
        let text = "skb1\n2\n0 1\n1 0\n1 0\n0 1\n";
        assert_eq!(
            parse_brace_file(text, &Limits::default()),
            Err(FormatError::Validation(Error::IdentityNotZero {
                op: Op::Circ,
                found: 1
            }))
        );
    }

    #[test]
    fn ybe_export() {
        let r = YbeMap::flip(2);
        assert_eq!(serialize_ybe(&r), "ybe1\n2\n0 1\n0 1\n0 0\n1 1\n");
    }
}
