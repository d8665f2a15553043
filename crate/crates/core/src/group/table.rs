//! Text format for multiplication tables:
//!
//! ```text
//! order 3
//! name C3
//! 0 1 2
//! 1 2 0
//! 2 0 1
//! labels
//! 1
//! g
//! g^2
//! ```
//!
//! The `name` line and the `labels` block are optional. Indices are 0-based.
//! Blank lines are ignored. The identity may be any element; it is moved to
//! index 0 on load.

use super::FiniteGroup;
use crate::error::{Error, Result};
use std::fmt::Write as _;
use std::path::Path;

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::TableSyntax {
        line,
        column,
        message: message.into(),
    }
}

pub fn load_table(path: impl AsRef<Path>) -> Result<FiniteGroup> {
    let text = std::fs::read_to_string(path)?;
    parse_table(&text)
}

pub fn parse_table(text: &str) -> Result<FiniteGroup> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty())
        .peekable();

    let (ln, header) = lines.next().ok_or_else(|| syntax(1, 1, "empty file"))?;
    let mut parts = header.split_whitespace();
    if parts.next() != Some("order") {
        return Err(syntax(ln, 1, "expected `order <n>`"));
    }
    let n: usize = parts
        .next()
        .and_then(|s| s.parse().ok())
        .filter(|&n| n > 0)
        .ok_or_else(|| syntax(ln, 7, "expected a positive order"))?;
    if parts.next().is_some() {
        return Err(syntax(ln, header.len(), "trailing tokens after order"));
    }

    let mut name = format!("G{n}");
    if let Some(&(_, l)) = lines.peek() {
        if let Some(rest) = l.trim_start().strip_prefix("name") {
            if rest.is_empty() || rest.starts_with(char::is_whitespace) {
                name = rest.trim().to_string();
                lines.next();
            }
        }
    }

    let mut rows = Vec::with_capacity(n);
    let mut row_lines = Vec::with_capacity(n);
    let mut columns: Vec<Vec<usize>> = Vec::with_capacity(n);
    for r in 0..n {
        let (ln, l) = lines
            .next()
            .ok_or_else(|| syntax(text.lines().count() + 1, 1, format!("missing table row {r}")))?;
        let mut row = Vec::with_capacity(n);
        let mut cols = Vec::with_capacity(n);
        let mut col = 0;
        for tok in l.split_whitespace() {
            // byte column of this token
            let start = l[col..].find(tok).map_or(col, |p| p + col);
            col = start + tok.len();
            let v: usize = tok
                .parse()
                .map_err(|_| syntax(ln, start + 1, format!("`{tok}` is not an index")))?;
            if v >= n {
                return Err(syntax(ln, start + 1, format!("index {v} out of range 0..{n}")));
            }
            row.push(v);
            cols.push(start + 1);
        }
        if row.len() != n {
            return Err(syntax(ln, l.len() + 1, format!("expected {n} entries, found {}", row.len())));
        }
        rows.push(row);
        row_lines.push(ln);
        columns.push(cols);
    }

    let mut labels = None;
    if let Some((ln, l)) = lines.next() {
        if l.trim() != "labels" {
            return Err(syntax(ln, 1, "expected `labels` or end of file"));
        }
        let collected: Vec<String> = lines.by_ref().map(|(_, l)| l.trim().to_string()).collect();
        if collected.len() != n {
            return Err(syntax(ln, 1, format!("expected {n} labels, found {}", collected.len())));
        }
        labels = Some(collected);
    }

    // locate Latin-square violations before handing over
    for (i, row) in rows.iter().enumerate() {
        let mut seen = vec![false; n];
        for (j, &x) in row.iter().enumerate() {
            if std::mem::replace(&mut seen[x], true) {
                return Err(syntax(row_lines[i], columns[i][j], format!("not a Latin square: {x} repeats in row {i}")));
            }
        }
    }
    for j in 0..n {
        let mut seen = vec![false; n];
        for i in 0..n {
            let x = rows[i][j];
            if std::mem::replace(&mut seen[x], true) {
                return Err(syntax(row_lines[i], columns[i][j], format!("not a Latin square: {x} repeats in column {j}")));
            }
        }
    }
    let first_line = row_lines[0];
    FiniteGroup::from_table(name, rows, labels).map_err(|e| match e {
        Error::InvalidGroup(msg) => syntax(first_line, 1, msg),
        other => other,
    })
}

pub fn write_table(g: &FiniteGroup) -> String {
    let n = g.order();
    let mut out = String::new();
    writeln!(out, "order {n}").unwrap();
    writeln!(out, "name {}", g.name()).unwrap();
    for i in 0..n {
        let row: Vec<String> = g.row(i).iter().map(|x| x.to_string()).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    writeln!(out, "labels").unwrap();
    for l in g.labels() {
        writeln!(out, "{l}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_dihedral, make_quaternion8};

    #[test]
    fn round_trip() {
        for g in [make_dihedral(4).unwrap(), make_quaternion8().unwrap()] {
            let back = parse_table(&write_table(&g)).unwrap();
            assert_eq!(back, g);
        }
    }

    #[test]
    fn identity_elsewhere_is_relabelled() {
        let text = "order 2\n1 0\n0 1\nlabels\na\ne\n";
        let g = parse_table(text).unwrap();
        assert_eq!(g.label(0), "e");
        assert_eq!(g.name(), "G2");
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_table("order 3\n0 1 2\n1 2 0\n2 0 0\n").unwrap_err();
        match err {
            Error::TableSyntax { line, column, .. } => assert_eq!((line, column), (4, 5)),
            e => panic!("unexpected {e}"),
        }
        let err = parse_table("order 2\n0 1\n1 x\n").unwrap_err();
        assert!(matches!(err, Error::TableSyntax { line: 3, column: 3, .. }), "{err}");
        let err = parse_table("order 2\n0 1\n").unwrap_err();
        assert!(matches!(err, Error::TableSyntax { .. }));
        let err = parse_table("ordr 2\n").unwrap_err();
        assert!(matches!(err, Error::TableSyntax { line: 1, column: 1, .. }));
        let loop5 = "order 5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n";
        let err = parse_table(loop5).unwrap_err();
        assert!(err.to_string().contains("associativity"), "{err}");
    }
}
