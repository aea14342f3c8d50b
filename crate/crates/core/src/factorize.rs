//! Product sets `S1 S2 ⋯ Sr` of subgroups and the search for Sylow systems
//! whose product is the whole group.
//!
//! Products are formed left to right, `{ s1 · s2 ⋯ sr }`. Only sizes matter
//! for the checks here, and `|AB| = |BA|` (inversion maps one onto the other),
//! so the convention does not affect any verdict.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{GroupTable, Subgroup};
use crate::perm::Permutation;
use crate::sylow::{all_sylow_subgroups, prime_decomposition, SylowSystem};

/// Default cap on element multiplications spent by one factorization search.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// A set of elements of one parent group, as sorted indices.
#[derive(Clone, Debug)]
pub struct ProductSet<'g> {
    parent: &'g GroupTable,
    members: Vec<u32>,
}

impl<'g> ProductSet<'g> {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn indices(&self) -> &[u32] {
        &self.members
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.parent
            .index_of(p)
            .is_some_and(|i| self.members.binary_search(&(i as u32)).is_ok())
    }

    pub fn elements(&self) -> impl Iterator<Item = &'g Permutation> + '_ {
        let parent = self.parent;
        self.members
            .iter()
            .map(move |&i| parent.element(i as usize))
    }
}

/// `{ x · s : x in left, s in right }`; returns the product and the number
/// of multiplications spent.
fn set_times_subgroup(parent: &GroupTable, left: &[u32], right: &Subgroup<'_>) -> (Vec<u32>, u64) {
    let mut mask = vec![false; parent.order()];
    let mut out = Vec::new();
    for &x in left {
        for &s in right.indices() {
            let y = parent.mul(x as usize, s as usize);
            if !std::mem::replace(&mut mask[y], true) {
                out.push(y as u32);
            }
        }
    }
    out.sort_unstable();
    let spent = left.len() as u64 * right.order() as u64;
    (out, spent)
}

/// The set of all products `s1 · s2 ⋯ sr` with `si` in `subgroups[i]`.
pub fn product_set<'g>(subgroups: &[Subgroup<'g>]) -> Result<ProductSet<'g>> {
    let (first, rest) = subgroups
        .split_first()
        .ok_or_else(|| Error::Invariant("product of an empty subgroup list".into()))?;
    if rest.iter().any(|s| !s.same_parent(first)) {
        return Err(Error::MixedParents);
    }
    let parent = first.parent();
    let mut members = first.indices().to_vec();
    for s in rest {
        members = set_times_subgroup(parent, &members, s).0;
    }
    Ok(ProductSet { parent, members })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Collision {
    pub left: Vec<Permutation>,
    pub right: Vec<Permutation>,
    pub product: Permutation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InjectivityReport {
    pub injective: bool,
    pub product_size: usize,
    /// `∏ |Si|`, the number of tuples.
    pub tuple_count: u64,
    pub collision: Option<Collision>,
}

/// Whether `(s1, …, sr) -> s1 ⋯ sr` is injective on the system. On failure,
/// two distinct tuples with the same product are found by enumeration.
pub fn verify_product_injectivity(system: &SylowSystem<'_>) -> Result<InjectivityReport> {
    let subs = system.subgroups();
    let tuple_count: u64 = subs.iter().map(|s| s.order() as u64).product();
    if subs.is_empty() {
        return Ok(InjectivityReport {
            injective: true,
            product_size: 1,
            tuple_count,
            collision: None,
        });
    }
    let product_size = product_set(subs)?.len();
    if product_size as u64 == tuple_count {
        return Ok(InjectivityReport {
            injective: true,
            product_size,
            tuple_count,
            collision: None,
        });
    }

    let g = system.parent();
    let mut first_tuple: HashMap<usize, Vec<usize>> = HashMap::new();
    let mut tuple = vec![0usize; subs.len()];
    let collision = loop {
        let product = tuple
            .iter()
            .zip(subs)
            .fold(0, |acc, (&i, s)| g.mul(acc, s.indices()[i] as usize));
        if let Some(prev) = first_tuple.get(&product) {
            let elements = |t: &[usize]| -> Vec<Permutation> {
                t.iter()
                    .zip(subs)
                    .map(|(&i, s)| g.element(s.indices()[i] as usize).clone())
                    .collect()
            };
            break Collision {
                left: elements(prev),
                right: elements(&tuple),
                product: g.element(product).clone(),
            };
        }
        first_tuple.insert(product, tuple.clone());
        if !advance(
            &mut tuple,
            &subs.iter().map(Subgroup::order).collect::<Vec<_>>(),
        ) {
            return Err(Error::Invariant(
                "product set smaller than tuple count but no collision found".into(),
            ));
        }
    };
    Ok(InjectivityReport {
        injective: false,
        product_size,
        tuple_count,
        collision: Some(collision),
    })
}

/// Odometer step, last position fastest. Returns false after the final tuple.
fn advance(tuple: &mut [usize], radix: &[usize]) -> bool {
    for pos in (0..tuple.len()).rev() {
        tuple[pos] += 1;
        if tuple[pos] < radix[pos] {
            return true;
        }
        tuple[pos] = 0;
    }
    false
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchMode {
    FirstHit,
    Exhaustive,
}

#[derive(Clone, Debug)]
pub struct FailingSystem<'g> {
    pub system: SylowSystem<'g>,
    pub choice: Vec<usize>,
    pub product_size: usize,
}

#[derive(Clone, Debug)]
pub struct FactorizationResult<'g> {
    pub mode: SearchMode,
    pub found: bool,
    /// The first system (in search order) whose product is the whole group.
    pub system: Option<SylowSystem<'g>>,
    /// Position of each chosen subgroup within its conjugate list.
    pub choice: Option<Vec<usize>>,
    /// `|G|` when found; otherwise the largest product seen.
    pub product_size: usize,
    /// `(p, n_p)` for each prime dividing `|G|`.
    pub sylow_counts: Vec<(u64, usize)>,
    pub systems_total: u64,
    pub systems_tried: u64,
    pub successes: u64,
    pub failing_example: Option<FailingSystem<'g>>,
    /// `(product size, number of systems)`, exhaustive mode only.
    pub size_counts: Vec<(usize, u64)>,
    pub multiplications: u64,
}

/// Searches Sylow systems `(S1, …, Sr)` for one with `S1 ⋯ Sr = G`.
///
/// Systems are visited lexicographically: primes ascending, each prime's
/// subgroups in [`all_sylow_subgroups`] order, last prime varying fastest.
/// Prefix products are cached between consecutive systems. The budget bounds
/// element multiplications spent on products; a step that would exceed it
/// aborts with [`Error::BudgetExceeded`].
pub fn search_sylow_factorization<'g>(
    g: &'g GroupTable,
    mode: SearchMode,
    budget: u64,
) -> Result<FactorizationResult<'g>> {
    let primes = prime_decomposition(g.order() as u64);
    let lists = primes
        .primes()
        .map(|p| all_sylow_subgroups(g, p))
        .collect::<Result<Vec<_>>>()?;
    let sylow_counts: Vec<(u64, usize)> = primes.primes().zip(lists.iter().map(Vec::len)).collect();
    let radix: Vec<usize> = lists.iter().map(Vec::len).collect();
    let systems_total: u64 = radix.iter().map(|&n| n as u64).product();
    let r = lists.len();

    let build = |choice: &[usize]| {
        let subs = choice
            .iter()
            .zip(&lists)
            .map(|(&i, l)| l[i].clone())
            .collect();
        SylowSystem::new(g, subs)
    };

    let mut result = FactorizationResult {
        mode,
        found: false,
        system: None,
        choice: None,
        product_size: 0,
        sylow_counts,
        systems_total,
        systems_tried: 0,
        successes: 0,
        failing_example: None,
        size_counts: Vec::new(),
        multiplications: 0,
    };

    if r == 0 {
        result.found = true;
        result.system = Some(build(&[])?);
        result.choice = Some(Vec::new());
        result.product_size = 1;
        result.systems_tried = 1;
        result.successes = 1;
        if mode == SearchMode::Exhaustive {
            result.size_counts = vec![(1, 1)];
        }
        return Ok(result);
    }

    let mut sizes: BTreeMap<usize, u64> = BTreeMap::new();
    let mut choice = vec![0usize; r];
    // prefixes[l] = S1 ⋯ S(l+1) for the current choice; valid below `stale`.
    let mut prefixes: Vec<Vec<u32>> = vec![Vec::new(); r];
    let mut stale = 0;
    loop {
        for level in stale..r {
            let sub = &lists[level][choice[level]];
            if level == 0 {
                prefixes[0] = sub.indices().to_vec();
                continue;
            }
            let cost = prefixes[level - 1].len() as u64 * sub.order() as u64;
            if result.multiplications + cost > budget {
                return Err(Error::BudgetExceeded {
                    budget,
                    used: result.multiplications,
                    systems_tried: result.systems_tried,
                    systems_total,
                    successes: result.successes,
                });
            }
            let (set, spent) = set_times_subgroup(g, &prefixes[level - 1], sub);
            result.multiplications += spent;
            prefixes[level] = set;
        }
        result.systems_tried += 1;
        let size = prefixes[r - 1].len();
        *sizes.entry(size).or_default() += 1;
        if size == g.order() {
            result.successes += 1;
            if !result.found {
                result.found = true;
                result.system = Some(build(&choice)?);
                result.choice = Some(choice.clone());
                result.product_size = size;
            }
            if mode == SearchMode::FirstHit {
                break;
            }
        } else {
            if !result.found {
                result.product_size = result.product_size.max(size);
            }
            if mode == SearchMode::Exhaustive && result.failing_example.is_none() {
                result.failing_example = Some(FailingSystem {
                    system: build(&choice)?,
                    choice: choice.clone(),
                    product_size: size,
                });
            }
        }

        let before = choice.clone();
        if !advance(&mut choice, &radix) {
            break;
        }
        stale = before
            .iter()
            .zip(&choice)
            .position(|(a, b)| a != b)
            .unwrap_or(r);
    }
    if mode == SearchMode::Exhaustive {
        result.size_counts = sizes.into_iter().collect();
    }
    Ok(result)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubgroupSummary {
    pub prime: u64,
    pub order: usize,
    pub generators: Vec<Permutation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SystemSummary {
    pub choice: Vec<usize>,
    pub subgroups: Vec<SubgroupSummary>,
    pub product_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SylowCount {
    pub prime: u64,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SizeCount {
    pub product_size: usize,
    pub systems: u64,
}

/// Owned, serializable view of a [`FactorizationResult`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorizationSummary {
    pub mode: SearchMode,
    pub found: bool,
    pub product_size: usize,
    pub sylow_counts: Vec<SylowCount>,
    pub systems_total: u64,
    pub systems_tried: u64,
    pub successes: u64,
    pub system: Option<SystemSummary>,
    pub failing_example: Option<SystemSummary>,
    pub size_counts: Vec<SizeCount>,
    pub multiplications: u64,
}

fn summarize(system: &SylowSystem<'_>, choice: &[usize], product_size: usize) -> SystemSummary {
    SystemSummary {
        choice: choice.to_vec(),
        subgroups: system
            .subgroups()
            .iter()
            .zip(system.primes().primes())
            .map(|(s, prime)| SubgroupSummary {
                prime,
                order: s.order(),
                generators: s.generators(),
            })
            .collect(),
        product_size,
    }
}

impl FactorizationResult<'_> {
    pub fn summary(&self) -> FactorizationSummary {
        FactorizationSummary {
            mode: self.mode,
            found: self.found,
            product_size: self.product_size,
            sylow_counts: self
                .sylow_counts
                .iter()
                .map(|&(prime, count)| SylowCount { prime, count })
                .collect(),
            systems_total: self.systems_total,
            systems_tried: self.systems_tried,
            successes: self.successes,
            system: self
                .system
                .as_ref()
                .zip(self.choice.as_ref())
                .map(|(s, c)| summarize(s, c, self.product_size)),
            failing_example: self
                .failing_example
                .as_ref()
                .map(|f| summarize(&f.system, &f.choice, f.product_size)),
            size_counts: self
                .size_counts
                .iter()
                .map(|&(product_size, systems)| SizeCount {
                    product_size,
                    systems,
                })
                .collect(),
            multiplications: self.multiplications,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{alternating, cyclic, symmetric};
    use crate::sylow::default_sylow_system;

    fn p(text: &str) -> Permutation {
        Permutation::parse_cycles(text, 5).unwrap()
    }

    #[test]
    fn printed_a5_system() {
        let a5 = alternating(5).unwrap();
        let pp = a5
            .subgroup_from(&[p("(1,2)(3,4)"), p("(1,3)(2,4)")])
            .unwrap();
        let q = a5.subgroup_from(&[p("(1,2,3)")]).unwrap();
        let r = a5.subgroup_from(&[p("(1,2,3,4,5)")]).unwrap();
        let pq = product_set(&[pp.clone(), q.clone()]).unwrap();
        assert_eq!(pq.len(), 12);
        assert!(pq.elements().all(|x| x.apply(5) == 5 && x.is_even()));
        assert_eq!(
            product_set(&[pp.clone(), q.clone(), r.clone()])
                .unwrap()
                .len(),
            60
        );

        let system = SylowSystem::new(&a5, vec![pp, q, r]).unwrap();
        let inj = verify_product_injectivity(&system).unwrap();
        assert!(inj.injective);
        assert_eq!((inj.product_size, inj.tuple_count), (60, 60));
    }

    #[test]
    fn trivial_product() {
        let s3 = symmetric(3).unwrap();
        let set = product_set(&[s3.trivial()]).unwrap();
        assert_eq!(set.len(), 1);
        assert!(set.contains(&Permutation::identity(3)));
        assert!(product_set(&[]).is_err());
    }

    #[test]
    fn mixed_parents_rejected() {
        let a = symmetric(3).unwrap();
        let b = symmetric(3).unwrap();
        assert_eq!(
            product_set(&[a.whole(), b.whole()]).unwrap_err(),
            Error::MixedParents
        );
    }

    #[test]
    fn collision_witness() {
        let a5 = alternating(5).unwrap();
        let result =
            search_sylow_factorization(&a5, SearchMode::Exhaustive, DEFAULT_BUDGET).unwrap();
        let failing = result.failing_example.unwrap();
        let inj = verify_product_injectivity(&failing.system).unwrap();
        assert!(!inj.injective);
        assert_eq!(inj.product_size, failing.product_size);
        let c = inj.collision.unwrap();
        assert_ne!(c.left, c.right);
        let mul = |t: &[Permutation]| {
            t.iter()
                .fold(Permutation::identity(5), |acc, x| acc.compose(x).unwrap())
        };
        assert_eq!(mul(&c.left), c.product);
        assert_eq!(mul(&c.right), c.product);
    }

    #[test]
    fn a5_search() {
        let a5 = alternating(5).unwrap();
        let first = search_sylow_factorization(&a5, SearchMode::FirstHit, DEFAULT_BUDGET).unwrap();
        assert!(first.found);
        assert_eq!(first.system.as_ref().unwrap().orders(), vec![4, 3, 5]);
        assert_eq!(first.product_size, 60);
        assert!(first.failing_example.is_none());

        let all = search_sylow_factorization(&a5, SearchMode::Exhaustive, DEFAULT_BUDGET).unwrap();
        assert_eq!(all.systems_total, 300);
        assert_eq!(all.systems_tried, 300);
        assert_eq!(all.sylow_counts, vec![(2, 5), (3, 10), (5, 6)]);
        // frozen from an independent brute force over all 300 systems
        assert_eq!(all.successes, 120);
        assert_eq!(all.size_counts, vec![(40, 180), (60, 120)]);
        assert_eq!(all.choice, first.choice);
    }

    #[test]
    fn budget_is_enforced() {
        let a5 = alternating(5).unwrap();
        let err = search_sylow_factorization(&a5, SearchMode::Exhaustive, 1000).unwrap_err();
        match err {
            Error::BudgetExceeded {
                budget,
                used,
                systems_total,
                ..
            } => {
                assert_eq!(budget, 1000);
                assert!(used <= 1000);
                assert_eq!(systems_total, 300);
            }
            e => panic!("{e:?}"),
        }
    }

    #[test]
    fn trivial_and_p_groups() {
        let c1 = cyclic(1).unwrap();
        let r = search_sylow_factorization(&c1, SearchMode::FirstHit, DEFAULT_BUDGET).unwrap();
        assert!(r.found && r.product_size == 1);
        let c8 = cyclic(8).unwrap();
        let r = search_sylow_factorization(&c8, SearchMode::Exhaustive, DEFAULT_BUDGET).unwrap();
        assert!(r.found);
        assert_eq!(r.multiplications, 0);
        let inj = verify_product_injectivity(&default_sylow_system(&c1).unwrap()).unwrap();
        assert!(inj.injective);
    }
}
