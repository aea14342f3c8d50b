//! Property A (coprime-order elements multiply to an element whose order is
//! the product of their orders) and two independent nilpotency tests.
//!
//! Scans run over element indices in enumeration order. The outer loop is
//! parallel, but every reported counterexample is the first one in serial
//! `(i, j)` order and every count stops at that counterexample, so reports do
//! not depend on the thread schedule.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::perm::{gcd, Permutation};
use crate::sylow::default_sylow_system;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairCounterexample {
    pub x: Permutation,
    pub y: Permutation,
    pub order_x: u64,
    pub order_y: u64,
    pub order_xy: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyAReport {
    pub holds: bool,
    /// Ordered pairs of nontrivial coprime-order elements examined, up to and
    /// including the counterexample when there is one.
    pub pairs_checked: u64,
    pub counterexample: Option<PairCounterexample>,
}

/// Folds per-row `(checked, first failure)` results in row order.
fn first_hit<T: Send>(rows: Vec<(u64, Option<T>)>) -> (u64, Option<T>) {
    let mut checked = 0;
    for (n, hit) in rows {
        checked += n;
        if hit.is_some() {
            return (checked, hit);
        }
    }
    (checked, None)
}

pub fn check_property_a(g: &GroupTable) -> PropertyAReport {
    let n = g.order();
    let rows: Vec<(u64, Option<(usize, usize)>)> = (1..n)
        .into_par_iter()
        .map(|i| {
            let k = g.element_order(i);
            let mut checked = 0;
            for j in 1..n {
                let m = g.element_order(j);
                if gcd(k, m) != 1 {
                    continue;
                }
                checked += 1;
                if g.element_order(g.mul(i, j)) != k * m {
                    return (checked, Some((i, j)));
                }
            }
            (checked, None)
        })
        .collect();
    let (pairs_checked, hit) = first_hit(rows);
    let counterexample = hit.map(|(i, j)| PairCounterexample {
        x: g.element(i).clone(),
        y: g.element(j).clone(),
        order_x: g.element_order(i),
        order_y: g.element_order(j),
        order_xy: g.element_order(g.mul(i, j)),
    });
    PropertyAReport {
        holds: counterexample.is_none(),
        pairs_checked,
        counterexample,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TupleCounterexample {
    pub factors: Vec<Permutation>,
    pub orders: Vec<u64>,
    pub order_product: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TupleReport {
    pub k: usize,
    /// False when the pairwise property already fails; the tuple scan is
    /// then skipped and the pair counterexample is reported.
    pub evaluated: bool,
    pub holds: bool,
    pub tuples_checked: u64,
    pub counterexample: Option<TupleCounterexample>,
}

pub const MAX_TUPLE_SIZE: usize = 3;

/// Property A for `k`-tuples of nontrivial elements with pairwise coprime
/// orders. Only evaluated on groups where the pairwise property holds.
pub fn check_property_a_tuples(g: &GroupTable, k: usize) -> Result<TupleReport> {
    if !(2..=MAX_TUPLE_SIZE).contains(&k) {
        return Err(Error::TupleSize(k));
    }
    let pairs = check_property_a(g);
    let as_tuple = |c: PairCounterexample| TupleCounterexample {
        factors: vec![c.x, c.y],
        orders: vec![c.order_x, c.order_y],
        order_product: c.order_xy,
    };
    if !pairs.holds || k == 2 {
        return Ok(TupleReport {
            k,
            evaluated: pairs.holds || k == 2,
            holds: pairs.holds,
            tuples_checked: if k == 2 { pairs.pairs_checked } else { 0 },
            counterexample: pairs.counterexample.map(as_tuple),
        });
    }

    let n = g.order();
    let ord = |i: usize| g.element_order(i);
    let rows: Vec<(u64, Option<[usize; 3]>)> = (1..n)
        .into_par_iter()
        .map(|a| {
            let mut checked = 0;
            for b in 1..n {
                if gcd(ord(a), ord(b)) != 1 {
                    continue;
                }
                let ab = g.mul(a, b);
                for c in 1..n {
                    if gcd(ord(a), ord(c)) != 1 || gcd(ord(b), ord(c)) != 1 {
                        continue;
                    }
                    checked += 1;
                    if ord(g.mul(ab, c)) != ord(a) * ord(b) * ord(c) {
                        return (checked, Some([a, b, c]));
                    }
                }
            }
            (checked, None)
        })
        .collect();
    let (tuples_checked, hit) = first_hit(rows);
    let counterexample = hit.map(|t| TupleCounterexample {
        factors: t.iter().map(|&i| g.element(i).clone()).collect(),
        orders: t.iter().map(|&i| ord(i)).collect(),
        order_product: ord(g.mul(g.mul(t[0], t[1]), t[2])),
    });
    Ok(TupleReport {
        k,
        evaluated: true,
        holds: counterexample.is_none(),
        tuples_checked,
        counterexample,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NilpotencyMethod {
    SylowNormality,
    LowerCentralSeries,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum NilpotencyWitness {
    /// A Sylow subgroup moved by conjugation with `conjugator`.
    NonNormalSylow {
        prime: u64,
        order: usize,
        generators: Vec<Permutation>,
        conjugator: Permutation,
    },
    /// The nontrivial term at which the lower central series stabilizes.
    StableTerm {
        order: usize,
        generators: Vec<Permutation>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NilpotencyReport {
    pub nilpotent: bool,
    pub method: NilpotencyMethod,
    /// Orders of the default Sylow subgroups, or of the lower central
    /// series terms, depending on `method`.
    pub orders: Vec<usize>,
    pub witness: Option<NilpotencyWitness>,
}

/// Nilpotent iff every Sylow subgroup of the default system is normal.
/// A normal Sylow `p`-subgroup is the only one, so testing one per prime
/// suffices.
pub fn is_nilpotent_sylow(g: &GroupTable) -> Result<NilpotencyReport> {
    let system = default_sylow_system(g)?;
    let mut witness = None;
    for (s, p) in system.subgroups().iter().zip(system.primes().primes()) {
        if let Some(conjugator) = s.non_normalizing_generator() {
            witness = Some(NilpotencyWitness::NonNormalSylow {
                prime: p,
                order: s.order(),
                generators: s.generators(),
                conjugator: conjugator.clone(),
            });
            break;
        }
    }
    Ok(NilpotencyReport {
        nilpotent: witness.is_none(),
        method: NilpotencyMethod::SylowNormality,
        orders: system.orders(),
        witness,
    })
}

/// Nilpotent iff the lower central series reaches the trivial subgroup.
pub fn is_nilpotent_lcs(g: &GroupTable) -> NilpotencyReport {
    let series = g.lower_central_series();
    let last = series.last().expect("series starts with G");
    let witness = (!last.is_trivial()).then(|| NilpotencyWitness::StableTerm {
        order: last.order(),
        generators: last.generators(),
    });
    NilpotencyReport {
        nilpotent: witness.is_none(),
        method: NilpotencyMethod::LowerCentralSeries,
        orders: series.iter().map(|s| s.order()).collect(),
        witness,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremVerdict {
    pub property_a: PropertyAReport,
    pub nilpotent_sylow: NilpotencyReport,
    pub nilpotent_lcs: NilpotencyReport,
    /// Property A, Sylow normality and the lower central series all agree.
    /// `false` means a bug, not a counterexample to the theorem.
    pub consistent: bool,
}

pub fn verify_theorem(g: &GroupTable) -> Result<TheoremVerdict> {
    let property_a = check_property_a(g);
    let nilpotent_sylow = is_nilpotent_sylow(g)?;
    let nilpotent_lcs = is_nilpotent_lcs(g);
    let consistent = property_a.holds == nilpotent_sylow.nilpotent
        && nilpotent_sylow.nilpotent == nilpotent_lcs.nilpotent;
    Ok(TheoremVerdict {
        property_a,
        nilpotent_sylow,
        nilpotent_lcs,
        consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{alternating, cyclic, dihedral, direct_product, quaternion8, symmetric};

    #[test]
    fn s3_fails_with_transposition_times_three_cycle() {
        let report = check_property_a(&symmetric(3).unwrap());
        assert!(!report.holds);
        let c = report.counterexample.unwrap();
        let triple = (c.order_x, c.order_y, c.order_xy);
        assert!(triple == (2, 3, 2) || triple == (3, 2, 2), "{triple:?}");
        assert_eq!(c.x.compose(&c.y).unwrap().order(), c.order_xy);
    }

    #[test]
    fn abelian_and_p_groups_hold() {
        let c6 = check_property_a(&cyclic(6).unwrap());
        assert!(c6.holds);
        // elements of order 2 (1) and 3 (2), both orders of pairs
        assert_eq!(c6.pairs_checked, 4);
        let q8 = check_property_a(&quaternion8().unwrap());
        assert!(q8.holds);
        assert_eq!(q8.pairs_checked, 0);
    }

    #[test]
    fn tuples() {
        let c30 = check_property_a_tuples(&cyclic(30).unwrap(), 3).unwrap();
        assert!(c30.evaluated && c30.holds);
        // one element each of order 2, and 2 of order 3, 4 of order 5: 3! orderings
        assert_eq!(c30.tuples_checked, 6 * 2 * 4);
        let d8 = check_property_a_tuples(&dihedral(8).unwrap(), 3).unwrap();
        assert!(d8.holds);
        assert_eq!(d8.tuples_checked, 0);
        let s3 = check_property_a_tuples(&symmetric(3).unwrap(), 3).unwrap();
        assert!(!s3.evaluated && !s3.holds);
        assert_eq!(s3.counterexample.unwrap().factors.len(), 2);
        assert_eq!(
            check_property_a_tuples(&cyclic(6).unwrap(), 4).unwrap_err(),
            Error::TupleSize(4)
        );
        assert!(check_property_a_tuples(&cyclic(6).unwrap(), 1).is_err());
    }

    #[test]
    fn sylow_nilpotency() {
        let a5 = is_nilpotent_sylow(&alternating(5).unwrap()).unwrap();
        assert!(!a5.nilpotent);
        assert!(matches!(
            a5.witness,
            Some(NilpotencyWitness::NonNormalSylow { .. })
        ));
        assert!(is_nilpotent_sylow(&cyclic(12).unwrap()).unwrap().nilpotent);
        assert!(
            !is_nilpotent_sylow(&symmetric(3).unwrap())
                .unwrap()
                .nilpotent
        );
    }

    #[test]
    fn lcs_nilpotency() {
        let d4 = is_nilpotent_lcs(&dihedral(4).unwrap());
        assert!(d4.nilpotent);
        assert_eq!(d4.orders, vec![8, 2, 1]);
        let s4 = is_nilpotent_lcs(&symmetric(4).unwrap());
        assert!(!s4.nilpotent);
        match s4.witness {
            Some(NilpotencyWitness::StableTerm { order, .. }) => assert_eq!(order, 12),
            w => panic!("{w:?}"),
        }
        assert!(is_nilpotent_lcs(&cyclic(1).unwrap()).nilpotent);
    }

    #[test]
    fn theorem_verdicts() {
        for (g, expected) in [
            (alternating(5).unwrap(), false),
            (
                direct_product(&cyclic(2).unwrap(), &cyclic(9).unwrap()).unwrap(),
                true,
            ),
            (symmetric(3).unwrap(), false),
        ] {
            let v = verify_theorem(&g).unwrap();
            assert!(v.consistent);
            assert_eq!(v.property_a.holds, expected);
            assert_eq!(v.nilpotent_sylow.nilpotent, expected);
            assert_eq!(v.nilpotent_lcs.nilpotent, expected);
        }
    }
}
