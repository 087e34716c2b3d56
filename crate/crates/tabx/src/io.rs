//! Tableau text and record formats.
//!
//! Text format: header lines `lambda: ...`, `mu: ...`, `n: ...` followed
//! by one line per row of lambda, cells space-separated with `.` marking
//! mu cells. Canonical rendering uses single spaces, no trailing
//! whitespace, and newline-terminated lines, so render and parse are
//! exact inverses. Record format: a JSON object with fields `lambda`,
//! `mu`, `n`, and `rows` (mu cells as 0). `parse_tableau` auto-detects
//! the format by the leading character.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::partition::Partition;
use crate::tableau::SkewTableau;

/// The serialized record form of a tableau.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauRecord {
    pub lambda: Vec<usize>,
    pub mu: Vec<usize>,
    pub n: usize,
    pub rows: Vec<Vec<usize>>,
}

impl TableauRecord {
    pub fn from_tableau(t: &SkewTableau) -> Self {
        TableauRecord {
            lambda: t.lambda().parts().to_vec(),
            mu: t.mu().parts().to_vec(),
            n: t.two_n() / 2,
            rows: t.rows().map(|r| r.to_vec()).collect(),
        }
    }

    pub fn into_tableau(self) -> Result<SkewTableau, Error> {
        let lambda = Partition::new(self.lambda)?;
        let mu = Partition::new(self.mu)?;
        if self.n == 0 {
            return Err(Error::InvalidAlphabet { two_n: 0 });
        }
        SkewTableau::from_rows(lambda, mu, 2 * self.n, &self.rows)
    }
}

/// Output encodings for [`render_tableau`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RenderFormat {
    Text,
    Record,
}

/// Parses either format, auto-detected by the leading character. All
/// tableau invariants are enforced; malformed tokens are reported with
/// their line and column.
pub fn parse_tableau(input: &str) -> Result<SkewTableau, Error> {
    if input.trim_start().starts_with('{') {
        let record: TableauRecord = serde_json::from_str(input).map_err(|e| Error::Parse {
            line: e.line(),
            col: e.column(),
            msg: e.to_string(),
        })?;
        record.into_tableau()
    } else {
        parse_text(input)
    }
}

fn parse_text(input: &str) -> Result<SkewTableau, Error> {
    let lines: Vec<&str> = input.lines().collect();
    let lambda = parse_header(&lines, 0, "lambda")
        .and_then(|v| Partition::parse(v).map_err(|e| at_line(e, 1)))?;
    let mu = parse_header(&lines, 1, "mu")
        .and_then(|v| Partition::parse(v).map_err(|e| at_line(e, 2)))?;
    let n: usize = parse_header(&lines, 2, "n").and_then(|v| {
        v.trim().parse().map_err(|_| Error::Parse {
            line: 3,
            col: 1,
            msg: format!("malformed n {v:?}"),
        })
    })?;
    if n == 0 {
        return Err(Error::Parse {
            line: 3,
            col: 1,
            msg: "n must be a positive integer".to_owned(),
        });
    }

    let mut rows = Vec::with_capacity(lambda.len());
    for r in 1..=lambda.len() {
        let line_no = 3 + r;
        let Some(line) = lines.get(line_no - 1) else {
            return Err(Error::Parse {
                line: line_no,
                col: 1,
                msg: format!("missing row line {r}"),
            });
        };
        let mut row = Vec::new();
        for (col, token) in line.split_whitespace().enumerate() {
            if token == "." {
                row.push(0);
            } else {
                let e: usize = token.parse().map_err(|_| Error::Parse {
                    line: line_no,
                    col: col + 1,
                    msg: format!("malformed cell token {token:?}"),
                })?;
                row.push(e);
            }
        }
        rows.push(row);
    }
    for (extra, line) in lines.iter().enumerate().skip(3 + lambda.len()) {
        if !line.trim().is_empty() {
            return Err(Error::Parse {
                line: extra + 1,
                col: 1,
                msg: "unexpected trailing content".to_owned(),
            });
        }
    }
    SkewTableau::from_rows(lambda, mu, 2 * n, &rows)
}

fn parse_header<'a>(lines: &[&'a str], idx: usize, key: &str) -> Result<&'a str, Error> {
    let line = lines.get(idx).copied().unwrap_or("");
    match line.split_once(':') {
        Some((k, v)) if k.trim() == key => Ok(v.trim()),
        _ => Err(Error::Parse {
            line: idx + 1,
            col: 1,
            msg: format!("expected `{key}: ...`"),
        }),
    }
}

fn at_line(e: Error, line: usize) -> Error {
    match e {
        Error::Parse { col, msg, .. } => Error::Parse { line, col, msg },
        other => other,
    }
}

/// Renders a tableau; the text form round-trips through
/// [`parse_tableau`] byte for byte.
pub fn render_tableau(t: &SkewTableau, format: RenderFormat) -> String {
    match format {
        RenderFormat::Text => {
            let mut out = format!(
                "lambda: {}\nmu: {}\nn: {}\n",
                t.lambda(),
                t.mu(),
                t.two_n() / 2
            );
            for r in 1..=t.lambda().len() {
                let mu_r = t.mu().part(r);
                let cells: Vec<String> = t
                    .row_slice(r)
                    .iter()
                    .enumerate()
                    .map(|(j, &e)| {
                        if j < mu_r {
                            ".".to_owned()
                        } else {
                            e.to_string()
                        }
                    })
                    .collect();
                out.push_str(&cells.join(" "));
                out.push('\n');
            }
            out
        }
        RenderFormat::Record => {
            let mut s =
                serde_json::to_string(&TableauRecord::from_tableau(t)).expect("records serialize");
            s.push('\n');
            s
        }
    }
}
