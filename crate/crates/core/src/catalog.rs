//! Catalog specifications: which groups a verification run covers.
//!
//! One entry per line; `#` starts a comment.
//!
//! ```text
//! cyclic 1..32          # inclusive range
//! dihedral 3..16
//! symmetric 4           # single parameter
//! quaternion8
//! product cyclic:2 symmetric:3
//! group C2xA4           # any builtin name
//! file groups/A5.grp    # relative to the catalog file
//! ```

use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::families::Family;
use crate::group::GroupTable;
use crate::grp::GroupFile;

/// The catalog used by `verify-theorem --catalog default`.
pub const DEFAULT_CATALOG: &str = "\
cyclic 1..32
dihedral 3..16
symmetric 3..6
alternating 3..6
quaternion8
product cyclic:2 cyclic:2
product cyclic:2 cyclic:4
product cyclic:3 symmetric:3
product cyclic:2 alternating:4
product cyclic:6 cyclic:5
product dihedral:4 cyclic:3
";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogEntry {
    /// `family lo..hi`, both ends inclusive.
    Range {
        family: &'static str,
        lo: u32,
        hi: u32,
    },
    Group(Family),
    File(PathBuf),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CatalogSpec {
    pub entries: Vec<CatalogEntry>,
}

type FamilyCtor = fn(u32) -> Family;

fn family_ctor(name: &str) -> Option<(&'static str, FamilyCtor)> {
    match name {
        "cyclic" => Some(("cyclic", Family::Cyclic)),
        "dihedral" => Some(("dihedral", Family::Dihedral)),
        "symmetric" => Some(("symmetric", Family::Symmetric)),
        "alternating" => Some(("alternating", Family::Alternating)),
        _ => None,
    }
}

/// `cyclic:2`, `quaternion8`, or a builtin name such as `S3`.
fn parse_factor(token: &str) -> std::result::Result<Family, String> {
    if token == "quaternion8" {
        return Ok(Family::Quaternion8);
    }
    if let Some((name, param)) = token.split_once(':') {
        let (_, ctor) = family_ctor(name).ok_or_else(|| format!("unknown family `{name}`"))?;
        let n = param
            .parse()
            .map_err(|_| format!("invalid parameter `{param}`"))?;
        return Ok(ctor(n));
    }
    Family::from_name(token).map_err(|e| e.to_string())
}

impl CatalogSpec {
    pub fn parse(text: &str) -> Result<CatalogSpec> {
        let mut entries = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let err = |message: String| Error::Catalog { line, message };
            let content = raw.split('#').next().unwrap().trim();
            if content.is_empty() {
                continue;
            }
            let mut words = content.split_whitespace();
            let head = words.next().unwrap();
            let args: Vec<&str> = words.collect();
            let entry = match (head, args.as_slice()) {
                ("quaternion8", []) => CatalogEntry::Group(Family::Quaternion8),
                ("product", [a, b]) => CatalogEntry::Group(Family::Product(
                    Box::new(parse_factor(a).map_err(err)?),
                    Box::new(parse_factor(b).map_err(err)?),
                )),
                ("group", [name]) => {
                    CatalogEntry::Group(Family::from_name(name).map_err(|e| err(e.to_string()))?)
                }
                ("file", [path]) => CatalogEntry::File(PathBuf::from(path)),
                (name, [range]) if family_ctor(name).is_some() => {
                    let (family, _) = family_ctor(name).unwrap();
                    let (lo, hi) = match range.split_once("..") {
                        Some((lo, hi)) => (lo, hi),
                        None => (*range, *range),
                    };
                    let parse = |s: &str| {
                        s.parse::<u32>()
                            .map_err(|_| err(format!("invalid range `{range}`")))
                    };
                    let (lo, hi) = (parse(lo)?, parse(hi)?);
                    if lo > hi {
                        return Err(err(format!("empty range `{range}`")));
                    }
                    CatalogEntry::Range { family, lo, hi }
                }
                _ => return Err(err(format!("unrecognized entry `{content}`"))),
            };
            // bounds checked at parse time
            for family in entry_families(&entry) {
                family.check_bounds().map_err(|e| err(e.to_string()))?;
            }
            entries.push(entry);
        }
        Ok(CatalogSpec { entries })
    }

    pub fn default_catalog() -> CatalogSpec {
        CatalogSpec::parse(DEFAULT_CATALOG).expect("default catalog parses")
    }
}

fn entry_families(entry: &CatalogEntry) -> Vec<Family> {
    match entry {
        CatalogEntry::Range { family, lo, hi } => {
            let (_, ctor) = family_ctor(family).unwrap();
            (*lo..=*hi).map(ctor).collect()
        }
        CatalogEntry::Group(f) => vec![f.clone()],
        CatalogEntry::File(_) => Vec::new(),
    }
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

/// Loads a `.grp` file; the group is named by its `name` line or file stem.
pub fn load_group_file(path: &Path, cap: usize) -> Result<(String, GroupTable)> {
    let file = GroupFile::parse(&read_file(path)?).map_err(|e| match e {
        Error::GroupFile {
            line,
            column,
            message,
        } => Error::GroupFile {
            line,
            column,
            message: format!("{}: {message}", path.display()),
        },
        other => other,
    })?;
    let name = file.name.clone().unwrap_or_else(|| {
        path.file_stem().map_or_else(
            || path.display().to_string(),
            |s| s.to_string_lossy().into_owned(),
        )
    });
    Ok((name, file.to_group(cap)?))
}

/// Resolves a group argument: an existing file path, or else a builtin name
/// such as `A5`, `C12`, `D4xC3`.
pub fn resolve_group(arg: &str, cap: usize) -> Result<(String, GroupTable)> {
    let path = Path::new(arg);
    if path.is_file() || arg.ends_with(".grp") {
        return load_group_file(path, cap);
    }
    let family = Family::from_name(arg)?;
    Ok((family.name(), family.build_with_cap(cap)?))
}

/// Expands `spec` in order: entries as listed, ranges in increasing parameter.
/// Relative file paths are resolved against `base_dir`.
pub fn expand_catalog(
    spec: &CatalogSpec,
    cap: usize,
    base_dir: &Path,
) -> Result<Vec<(String, GroupTable)>> {
    let mut out = Vec::new();
    for entry in &spec.entries {
        match entry {
            CatalogEntry::File(path) => out.push(load_group_file(&base_dir.join(path), cap)?),
            _ => {
                for family in entry_families(entry) {
                    out.push((family.name(), family.build_with_cap(cap)?));
                }
            }
        }
    }
    Ok(out)
}
