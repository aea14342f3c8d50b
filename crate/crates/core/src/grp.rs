//! The `.grp` text format: a degree line followed by one generator per line
//! in cycle notation.
//!
//! ```text
//! # Sylow 2-subgroup of A5
//! degree 5
//! name P
//! (1,2)(3,4)
//! (1,3)(2,4)
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. The first other line
//! must be `degree <n>`. An optional `name <string>` line may follow, before
//! the generators.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::group::{GroupTable, DEFAULT_MAX_ELEMENTS};
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupFile {
    pub degree: usize,
    pub name: Option<String>,
    pub generator_lines: Vec<String>,
    pub generators: Vec<Permutation>,
}

fn file_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::GroupFile {
        line,
        column,
        message: message.into(),
    }
}

fn leading_ws(s: &str) -> usize {
    s.chars().take_while(|c| c.is_whitespace()).count()
}

impl GroupFile {
    pub fn parse(text: &str) -> Result<GroupFile> {
        let mut degree = None;
        let mut name = None;
        let mut generator_lines = Vec::new();
        let mut generators = Vec::new();
        let mut last_line = 0;

        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            last_line = line_no;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let col = leading_ws(raw) + 1;

            let Some(n) = degree else {
                let value = trimmed
                    .strip_prefix("degree")
                    .filter(|rest| rest.starts_with(char::is_whitespace))
                    .ok_or_else(|| file_error(line_no, col, "expected `degree <n>`"))?
                    .trim();
                let n: usize = value.parse().ok().filter(|&n| n >= 1).ok_or_else(|| {
                    let at = raw
                        .find(value)
                        .map_or(col, |b| raw[..b].chars().count() + 1);
                    file_error(line_no, at, format!("invalid degree `{value}`"))
                })?;
                degree = Some(n);
                continue;
            };

            if let Some(rest) = trimmed.strip_prefix("name") {
                if rest.is_empty() || rest.starts_with(char::is_whitespace) {
                    if !generators.is_empty() {
                        return Err(file_error(
                            line_no,
                            col,
                            "`name` must precede the generators",
                        ));
                    }
                    if name.is_some() {
                        return Err(file_error(line_no, col, "duplicate `name` line"));
                    }
                    let value = rest.trim();
                    if value.is_empty() {
                        return Err(file_error(line_no, col, "empty name"));
                    }
                    name = Some(value.to_string());
                    continue;
                }
            }
            if trimmed.starts_with("degree") {
                return Err(file_error(line_no, col, "duplicate `degree` line"));
            }

            let perm = Permutation::parse_cycles(raw, n).map_err(|e| match e {
                Error::Parse {
                    column,
                    token,
                    reason,
                } => file_error(line_no, column, format!("{reason} (at `{token}`)")),
                other => file_error(line_no, col, other.to_string()),
            })?;
            generator_lines.push(trimmed.to_string());
            generators.push(perm);
        }

        let Some(degree) = degree else {
            return Err(file_error(last_line.max(1), 1, "missing `degree <n>` line"));
        };
        if generators.is_empty() {
            return Err(file_error(last_line.max(1), 1, "no generators"));
        }
        Ok(GroupFile {
            degree,
            name,
            generator_lines,
            generators,
        })
    }

    pub fn to_group(&self, cap: usize) -> Result<GroupTable> {
        GroupTable::close_with_cap(self.degree, self.generators.clone(), cap)
    }

    /// Canonical text form, re-parseable by [`GroupFile::parse`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "degree {}", self.degree).unwrap();
        if let Some(name) = &self.name {
            writeln!(out, "name {name}").unwrap();
        }
        for g in &self.generators {
            writeln!(out, "{g}").unwrap();
        }
        out
    }
}

/// Parses `.grp` text and closes the generators with the default cap.
pub fn parse_group_file(text: &str) -> Result<GroupTable> {
    GroupFile::parse(text)?.to_group(DEFAULT_MAX_ELEMENTS)
}
