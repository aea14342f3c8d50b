//! Standard permutation groups used by the verification catalog.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::{GroupTable, DEFAULT_MAX_ELEMENTS};
use crate::perm::Permutation;

pub const CYCLIC_MAX: u32 = 2048;
pub const DIHEDRAL_MAX: u32 = 1024;
pub const SYMMETRIC_MAX: u32 = 9;
pub const ALTERNATING_MAX: u32 = 9;

/// Multiplication table of Q8 with elements ordered
/// `1, -1, i, -i, j, -j, k, -k`; `Q8_TABLE[a][b]` is the index of `a·b`.
const Q8_TABLE: [[u8; 8]; 8] = [
    [0, 1, 2, 3, 4, 5, 6, 7],
    [1, 0, 3, 2, 5, 4, 7, 6],
    [2, 3, 1, 0, 6, 7, 5, 4],
    [3, 2, 0, 1, 7, 6, 4, 5],
    [4, 5, 7, 6, 1, 0, 2, 3],
    [5, 4, 6, 7, 0, 1, 3, 2],
    [6, 7, 4, 5, 3, 2, 1, 0],
    [7, 6, 5, 4, 2, 3, 0, 1],
];

/// A named group from one of the standard families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Cyclic(u32),
    /// Symmetries of the regular `n`-gon, order `2n`.
    Dihedral(u32),
    Symmetric(u32),
    Alternating(u32),
    Quaternion8,
    Product(Box<Family>, Box<Family>),
}

impl Family {
    pub fn build(&self) -> Result<GroupTable> {
        self.build_with_cap(DEFAULT_MAX_ELEMENTS)
    }

    pub fn build_with_cap(&self, cap: usize) -> Result<GroupTable> {
        self.check_bounds()?;
        let (degree, gens) = self.generators();
        GroupTable::close_with_cap(degree, gens, cap)
    }

    pub(crate) fn check_bounds(&self) -> Result<()> {
        let check = |family, value: u32, min: u32, max: u32| {
            if value < min || value > max {
                Err(Error::OutOfBounds {
                    family,
                    value: value as u64,
                    min: min as u64,
                    max: max as u64,
                })
            } else {
                Ok(())
            }
        };
        match self {
            Family::Cyclic(n) => check("cyclic", *n, 1, CYCLIC_MAX),
            Family::Dihedral(n) => check("dihedral", *n, 3, DIHEDRAL_MAX),
            Family::Symmetric(n) => check("symmetric", *n, 1, SYMMETRIC_MAX),
            Family::Alternating(n) => check("alternating", *n, 1, ALTERNATING_MAX),
            Family::Quaternion8 => Ok(()),
            Family::Product(a, b) => a.check_bounds().and(b.check_bounds()),
        }
    }

    fn generators(&self) -> (usize, Vec<Permutation>) {
        let cycle = |n: u32| Permutation::from_cycles(n as usize, &[(1..=n).collect::<Vec<_>>()]);
        let perm =
            |n: u32, cycles: &[&[u32]]| Permutation::from_cycles(n as usize, cycles).unwrap();
        match *self {
            Family::Cyclic(1) | Family::Symmetric(1) => (1, vec![Permutation::identity(1)]),
            Family::Cyclic(n) => (n as usize, vec![cycle(n).unwrap()]),
            Family::Dihedral(n) => {
                // rotation i -> i+1 and reflection i -> n+1-i
                let swaps: Vec<Vec<u32>> = (1..=n / 2).map(|i| vec![i, n + 1 - i]).collect();
                let reflection = Permutation::from_cycles(n as usize, &swaps).unwrap();
                (n as usize, vec![cycle(n).unwrap(), reflection])
            }
            Family::Symmetric(2) => (2, vec![perm(2, &[&[1, 2]])]),
            Family::Symmetric(n) => (n as usize, vec![perm(n, &[&[1, 2]]), cycle(n).unwrap()]),
            Family::Alternating(n) if n < 3 => {
                (n as usize, vec![Permutation::identity(n as usize)])
            }
            Family::Alternating(n) => {
                let gens = (3..=n).map(|i| perm(n, &[&[1, 2, i]])).collect();
                (n as usize, gens)
            }
            Family::Quaternion8 => (8, quaternion8_generators()),
            Family::Product(ref a, ref b) => {
                let (da, ga) = a.generators();
                let (db, gb) = b.generators();
                let degree = da + db;
                let left = ga.iter().map(|g| embed(g, 0, degree));
                let right = gb.iter().map(|g| embed(g, da, degree));
                (degree, left.chain(right).collect())
            }
        }
    }

    /// Short name such as `C12`, `D4`, `A5`, `Q8` or `C2xS3`.
    pub fn name(&self) -> String {
        self.to_string()
    }

    /// Inverse of [`Family::name`]; products associate to the left.
    pub fn from_name(name: &str) -> Result<Family> {
        let unknown = || Error::UnknownGroup(name.to_string());
        let mut parts = name.split(['x', 'X']);
        let mut family =
            Self::single_from_name(parts.next().ok_or_else(unknown)?).ok_or_else(unknown)?;
        for part in parts {
            let rhs = Self::single_from_name(part).ok_or_else(unknown)?;
            family = Family::Product(Box::new(family), Box::new(rhs));
        }
        Ok(family)
    }

    fn single_from_name(name: &str) -> Option<Family> {
        if name == "Q8" {
            return Some(Family::Quaternion8);
        }
        let mut chars = name.chars();
        let tag = chars.next()?;
        let rest = chars.as_str();
        if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let n: u32 = rest.parse().ok()?;
        match tag {
            'C' => Some(Family::Cyclic(n)),
            'D' => Some(Family::Dihedral(n)),
            'S' => Some(Family::Symmetric(n)),
            'A' => Some(Family::Alternating(n)),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cyclic(n) => write!(f, "C{n}"),
            Family::Dihedral(n) => write!(f, "D{n}"),
            Family::Symmetric(n) => write!(f, "S{n}"),
            Family::Alternating(n) => write!(f, "A{n}"),
            Family::Quaternion8 => f.write_str("Q8"),
            Family::Product(a, b) => write!(f, "{a}x{b}"),
        }
    }
}

fn embed(g: &Permutation, offset: usize, degree: usize) -> Permutation {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    for (i, &x) in g.images().iter().enumerate() {
        images[offset + i] = x + offset as u32;
    }
    Permutation::from_images(images).expect("embedding of a permutation is a permutation")
}

/// Right-regular representation of Q8: element `g` acts on the eight
/// elements by `x -> x·g`. The table is checked against the group axioms.
fn quaternion8_generators() -> Vec<Permutation> {
    let t = &Q8_TABLE;
    for a in 0..8 {
        assert_eq!(t[0][a] as usize, a, "Q8 table: left identity");
        assert_eq!(t[a][0] as usize, a, "Q8 table: right identity");
        assert!((0..8).any(|b| t[a][b] == 0), "Q8 table: inverse of {a}");
        for b in 0..8 {
            for c in 0..8 {
                assert_eq!(
                    t[t[a][b] as usize][c], t[a][t[b][c] as usize],
                    "Q8 table: associativity"
                );
            }
        }
    }
    let regular = |g: usize| {
        Permutation::from_images((0..8).map(|x| t[x][g] as u32).collect())
            .expect("Q8 table rows are Latin")
    };
    // i and j
    vec![regular(2), regular(4)]
}

pub fn cyclic(n: u32) -> Result<GroupTable> {
    Family::Cyclic(n).build()
}

pub fn dihedral(n: u32) -> Result<GroupTable> {
    Family::Dihedral(n).build()
}

pub fn symmetric(n: u32) -> Result<GroupTable> {
    Family::Symmetric(n).build()
}

pub fn alternating(n: u32) -> Result<GroupTable> {
    Family::Alternating(n).build()
}

pub fn quaternion8() -> Result<GroupTable> {
    Family::Quaternion8.build()
}

/// `G × H` acting on disjoint point sets: `G` on the first `deg G` points,
/// `H` on the rest.
pub fn direct_product(g: &GroupTable, h: &GroupTable) -> Result<GroupTable> {
    let degree = g.degree() + h.degree();
    let gens = g
        .generators()
        .iter()
        .map(|x| embed(x, 0, degree))
        .chain(h.generators().iter().map(|x| embed(x, g.degree(), degree)))
        .collect();
    GroupTable::close(degree, gens)
}
