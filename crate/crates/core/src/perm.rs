//! Permutations of `{1, …, n}`.
//!
//! Products are read left to right: `p.compose(&q)` applies `p` first and
//! then `q`, so `(1,2)·(2,3) = (1,3,2)`. Points are 1-based in every textual
//! form; internally images are stored 0-based.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u32]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images: point `i` maps to `images[i]`.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::ZeroDegree);
        }
        let mut seen = vec![false; images.len()];
        for &x in &images {
            let slot = seen
                .get_mut(x as usize)
                .ok_or_else(|| Error::NotBijective(format!("image {} out of range", x + 1)))?;
            if *slot {
                return Err(Error::NotBijective(format!("image {} repeated", x + 1)));
            }
            *slot = true;
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    /// Builds a permutation from 1-based disjoint cycles.
    pub fn from_cycles<C: AsRef<[u32]>>(degree: usize, cycles: &[C]) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut moved = vec![false; degree];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for (i, &pt) in cycle.iter().enumerate() {
                if pt == 0 || pt as usize > degree {
                    return Err(Error::NotBijective(format!(
                        "point {pt} outside 1..={degree}"
                    )));
                }
                if std::mem::replace(&mut moved[pt as usize - 1], true) {
                    return Err(Error::NotBijective(format!("point {pt} repeated")));
                }
                let next = cycle[(i + 1) % cycle.len()];
                images[pt as usize - 1] = next - 1;
            }
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based image table.
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Image of the 1-based point `point`.
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize - 1] + 1
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    /// Composition without the degree check; callers guarantee equal degrees.
    pub(crate) fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation {
            images: inv.into_boxed_slice(),
        }
    }

    pub fn pow(&self, mut exp: u64) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            exp >>= 1;
        }
        acc
    }

    /// Disjoint cycles of length at least two, each starting at its smallest
    /// point, sorted by that point. Points are 1-based.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut pt = start;
            while !seen[pt] {
                seen[pt] = true;
                cycle.push(pt as u32 + 1);
                pt = self.images[pt] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Least `k >= 1` with `self^k` the identity.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1, |acc, c| lcm(acc, c.len() as u64))
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    /// Canonical cycle notation; the identity prints as `()`.
    pub fn format_cycles(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut s = String::new();
        for cycle in cycles {
            s.push('(');
            for (i, pt) in cycle.iter().enumerate() {
                if i > 0 {
                    s.push(',');
                }
                s.push_str(&pt.to_string());
            }
            s.push(')');
        }
        s
    }

    /// Parses cycle notation such as `(1,2)(3,4)` or `()`.
    ///
    /// Whitespace may appear between tokens but not inside an integer. Every
    /// cycle needs at least two points and a point may occur only once in the
    /// whole expression.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        CycleParser::new(text, degree).parse()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_cycles())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.format_cycles(), self.degree())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.format_cycles())
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

struct CycleParser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    degree: usize,
    text: &'a str,
}

impl<'a> CycleParser<'a> {
    fn new(text: &'a str, degree: usize) -> Self {
        CycleParser {
            chars: text.chars().enumerate().collect(),
            pos: 0,
            degree,
            text,
        }
    }

    fn err(&self, column: usize, token: impl Into<String>, reason: &str) -> Error {
        Error::Parse {
            column: column + 1,
            token: token.into(),
            reason: reason.to_string(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn column(&self) -> usize {
        self.chars
            .get(self.pos)
            .map_or(self.chars.len(), |&(i, _)| i)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(self.err(self.column(), c, &format!("expected `{want}`"))),
            None => Err(self.err(self.column(), "", &format!("expected `{want}`, found end"))),
        }
    }

    fn integer(&mut self) -> Result<(usize, u32)> {
        self.skip_ws();
        let start = self.column();
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.pos += 1;
        }
        if digits.is_empty() {
            let token = self.peek().map(String::from).unwrap_or_default();
            return Err(self.err(start, token, "expected a point"));
        }
        match digits.parse::<u64>() {
            Ok(v) if v >= 1 && v <= self.degree as u64 => Ok((start, v as u32)),
            _ => Err(self.err(
                start,
                digits,
                &format!("point out of range 1..={}", self.degree),
            )),
        }
    }

    fn parse(mut self) -> Result<Permutation> {
        self.skip_ws();
        if self.peek().is_none() {
            return Err(self.err(0, self.text, "empty expression"));
        }
        let mut cycles: Vec<Vec<u32>> = Vec::new();
        let mut used = vec![false; self.degree];
        let mut saw_empty = false;
        loop {
            self.skip_ws();
            let Some(_) = self.peek() else { break };
            let open = self.column();
            if saw_empty {
                return Err(self.err(open, "(", "`()` must stand alone"));
            }
            self.expect('(')?;
            self.skip_ws();
            if self.peek() == Some(')') {
                self.pos += 1;
                if !cycles.is_empty() {
                    return Err(self.err(open, "()", "`()` must stand alone"));
                }
                saw_empty = true;
                continue;
            }
            let mut cycle = Vec::new();
            loop {
                let (col, pt) = self.integer()?;
                if std::mem::replace(&mut used[pt as usize - 1], true) {
                    return Err(self.err(col, pt.to_string(), "repeated point"));
                }
                cycle.push(pt);
                self.skip_ws();
                match self.peek() {
                    Some(',') => self.pos += 1,
                    Some(')') => {
                        self.pos += 1;
                        break;
                    }
                    Some(c) => return Err(self.err(self.column(), c, "expected `,` or `)`")),
                    None => return Err(self.err(self.column(), "", "unterminated cycle")),
                }
            }
            if cycle.len() < 2 {
                return Err(self.err(
                    open,
                    format!("({})", cycle[0]),
                    "cycle needs two or more points",
                ));
            }
            cycles.push(cycle);
        }
        Permutation::from_cycles(self.degree, &cycles)
    }
}
