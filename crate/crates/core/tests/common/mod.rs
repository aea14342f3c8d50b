//! Naive reference implementations used as test oracles. Nothing here goes
//! through `GroupTable`; permutations are plain 0-based image vectors.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use sylowfact_core::{GroupTable, Permutation};

pub type Perm = Vec<u32>;
pub type Set = BTreeSet<Perm>;

/// Left to right: apply `a`, then `b`.
pub fn mul(a: &Perm, b: &Perm) -> Perm {
    a.iter().map(|&x| b[x as usize]).collect()
}

pub fn inv(a: &Perm) -> Perm {
    let mut r = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        r[x as usize] = i as u32;
    }
    r
}

pub fn identity(n: usize) -> Perm {
    (0..n as u32).collect()
}

/// Order by repeated multiplication.
pub fn order(a: &Perm) -> u64 {
    let e = identity(a.len());
    let mut x = a.clone();
    let mut k = 1;
    while x != e {
        x = mul(&x, a);
        k += 1;
    }
    k
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn closure(n: usize, gens: &[Perm]) -> Set {
    let mut set: Set = BTreeSet::from([identity(n)]);
    let mut frontier = vec![identity(n)];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = mul(&x, g);
            if set.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    set
}

pub fn elements_of(g: &GroupTable) -> Vec<Perm> {
    g.elements().map(|p| p.images().to_vec()).collect()
}

pub fn to_perm(p: &Perm) -> Permutation {
    Permutation::from_images(p.clone()).unwrap()
}

pub fn conjugate_set(s: &Set, g: &Perm) -> Set {
    let gi = inv(g);
    s.iter().map(|x| mul(&mul(&gi, x), g)).collect()
}

pub fn normalizer_order(group: &[Perm], s: &Set) -> usize {
    group.iter().filter(|g| &conjugate_set(s, g) == s).count()
}

/// All subgroups of exactly `order` elements that are generated by at most
/// two elements of `group`.
pub fn two_generated_subgroups(group: &[Perm], order: usize) -> HashSet<Set> {
    let n = group[0].len();
    let mut out = HashSet::new();
    let candidates: Vec<&Perm> = group
        .iter()
        .filter(|x| (order as u64).is_multiple_of(self::order(x)))
        .collect();
    for a in &candidates {
        for b in &candidates {
            let h = closure(n, &[(*a).clone(), (*b).clone()]);
            if h.len() == order {
                out.insert(h);
            }
        }
    }
    out
}

/// Property A by a full scan over ordered pairs, identity included.
pub fn property_a_full(group: &[Perm]) -> bool {
    group.iter().all(|x| {
        group.iter().all(|y| {
            let (k, m) = (order(x), order(y));
            gcd(k, m) != 1 || order(&mul(x, y)) == k * m
        })
    })
}

/// `<commutators [x, y] : x in a, y in b>`.
pub fn commutator_closure(n: usize, a: &Set, b: &Set) -> Set {
    let comms: Vec<Perm> = a
        .iter()
        .flat_map(|x| {
            b.iter()
                .map(move |y| mul(&mul(&mul(&inv(x), &inv(y)), x), y))
        })
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    closure(n, &comms)
}

/// Orders of the lower central series terms, until it stops changing.
pub fn lcs_orders(group: &[Perm]) -> Vec<usize> {
    let n = group[0].len();
    let whole: Set = group.iter().cloned().collect();
    let mut term = whole.clone();
    let mut out = vec![term.len()];
    while term.len() > 1 {
        let next = commutator_closure(n, &term, &whole);
        if next.len() == term.len() {
            break;
        }
        out.push(next.len());
        term = next;
    }
    out
}

pub fn set_product(a: &Set, b: &Set) -> Set {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| mul(x, y)))
        .collect()
}
