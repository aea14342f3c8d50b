//! Sylow subgroups: construction by normalizer climbing and enumeration of
//! all conjugates.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{GroupTable, Subgroup};
use crate::perm::Permutation;

/// Prime factorization `n = p1^a1 ⋯ pr^ar` with `p1 < ⋯ < pr`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeDecomposition {
    factors: Vec<(u64, u32)>,
}

impl PrimeDecomposition {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Number of distinct primes.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn value(&self) -> u64 {
        self.factors.iter().map(|&(p, a)| p.pow(a)).product()
    }
}

pub fn prime_decomposition(mut n: u64) -> PrimeDecomposition {
    assert!(n >= 1, "prime_decomposition of 0");
    let mut factors = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut a = 0;
            while n.is_multiple_of(p) {
                n /= p;
                a += 1;
            }
            factors.push((p, a));
        }
        p += 1;
    }
    if n > 1 {
        factors.push((n, 1));
    }
    PrimeDecomposition { factors }
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && prime_decomposition(n).factors == [(n, 1)]
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut part = 1;
    while n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

fn check_prime_divides(g: &GroupTable, p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if !(g.order() as u64).is_multiple_of(p) {
        return Err(Error::PrimeNotDividing {
            p,
            order: g.order() as u64,
        });
    }
    Ok(())
}

fn element_of_prime_order_index(g: &GroupTable, p: u64) -> Result<usize> {
    check_prime_divides(g, p)?;
    (0..g.order())
        .find(|&h| g.element_order(h).is_multiple_of(p))
        .map(|h| g.pow(h, g.element_order(h) / p))
        .ok_or_else(|| Error::Invariant(format!("no element of order divisible by {p}")))
}

/// First element (in enumeration order) whose order is divisible by `p`,
/// powered down to order exactly `p`.
pub fn element_of_prime_order(g: &GroupTable, p: u64) -> Result<&Permutation> {
    element_of_prime_order_index(g, p).map(|i| g.element(i))
}

/// A Sylow `p`-subgroup of `g`.
///
/// Starts from the cyclic group of an element of order `p` and repeatedly
/// adjoins the first element `x` of the normalizer `N(P)` with `x ∉ P` and
/// `x^p ∈ P`, which multiplies `|P|` by `p`.
pub fn sylow_subgroup(g: &GroupTable, p: u64) -> Result<Subgroup<'_>> {
    let seed = element_of_prime_order_index(g, p)?;
    let target = p_part(g.order() as u64, p) as usize;
    let mut sub = g.generated_by([seed]);
    while sub.order() < target {
        let normalizer = sub.normalizer();
        let extension = normalizer
            .indices()
            .iter()
            .map(|&x| x as usize)
            .find(|&x| !sub.contains_index(x) && sub.contains_index(g.pow(x, p)));
        let Some(x) = extension else {
            return Err(Error::Invariant(format!(
                "p-subgroup of order {} (p = {p}) has no extension in its normalizer of order {}",
                sub.order(),
                normalizer.order()
            )));
        };
        let grown = g.generated_by(sub.indices().iter().map(|&i| i as usize).chain([x]));
        if grown.order() != sub.order() * p as usize {
            return Err(Error::Invariant(format!(
                "extension of a p-subgroup of order {} gave order {}",
                sub.order(),
                grown.order()
            )));
        }
        sub = grown;
    }
    Ok(sub)
}

/// All Sylow `p`-subgroups, in the order they appear when conjugating
/// [`sylow_subgroup`] by each element of `g` in enumeration order.
pub fn all_sylow_subgroups(g: &GroupTable, p: u64) -> Result<Vec<Subgroup<'_>>> {
    let base = sylow_subgroup(g, p)?;
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut out = Vec::new();
    for x in 0..g.order() {
        let conj = base.conjugate_by_index(x);
        if seen.insert(conj.indices().to_vec()) {
            out.push(conj);
        }
    }
    let n_p = out.len() as u64;
    let index = g.order() as u64 / base.order() as u64;
    if n_p % p != 1 || !index.is_multiple_of(n_p) {
        return Err(Error::Invariant(format!(
            "Sylow count n_{p} = {n_p} violates n_p ≡ 1 (mod p) or n_p | {index}"
        )));
    }
    Ok(out)
}

/// One Sylow subgroup per prime dividing `|G|`, in increasing prime order.
#[derive(Clone, Debug)]
pub struct SylowSystem<'g> {
    parent: &'g GroupTable,
    primes: PrimeDecomposition,
    subgroups: Vec<Subgroup<'g>>,
}

impl<'g> SylowSystem<'g> {
    /// Checks that `subgroups` are Sylow subgroups of `parent`, one per prime
    /// in increasing order.
    pub fn new(parent: &'g GroupTable, subgroups: Vec<Subgroup<'g>>) -> Result<Self> {
        let primes = prime_decomposition(parent.order() as u64);
        if subgroups.len() != primes.len() {
            return Err(Error::Invariant(format!(
                "{} subgroups for {} primes",
                subgroups.len(),
                primes.len()
            )));
        }
        for (s, &(p, a)) in subgroups.iter().zip(primes.factors()) {
            if !std::ptr::eq(s.parent(), parent) {
                return Err(Error::MixedParents);
            }
            if s.order() as u64 != p.pow(a) {
                return Err(Error::Invariant(format!(
                    "subgroup of order {} is not a Sylow {p}-subgroup",
                    s.order()
                )));
            }
        }
        Ok(SylowSystem {
            parent,
            primes,
            subgroups,
        })
    }

    pub fn parent(&self) -> &'g GroupTable {
        self.parent
    }

    pub fn primes(&self) -> &PrimeDecomposition {
        &self.primes
    }

    pub fn subgroups(&self) -> &[Subgroup<'g>] {
        &self.subgroups
    }

    pub fn orders(&self) -> Vec<usize> {
        self.subgroups.iter().map(Subgroup::order).collect()
    }
}

pub fn default_sylow_system(g: &GroupTable) -> Result<SylowSystem<'_>> {
    let primes = prime_decomposition(g.order() as u64);
    let subgroups = primes
        .primes()
        .map(|p| sylow_subgroup(g, p))
        .collect::<Result<Vec<_>>>()?;
    Ok(SylowSystem {
        parent: g,
        primes,
        subgroups,
    })
}
