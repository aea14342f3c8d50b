//! Finite permutation groups held as fully enumerated element tables.
//!
//! A [`GroupTable`] stores every element in breadth-first discovery order
//! (identity first, then right-multiplication by the generators in order).
//! That order is the "fixed enumeration order" every deterministic scan in
//! this crate relies on. A [`Subgroup`] is a sorted list of indices into its
//! parent's table.

use std::fmt;

use indexmap::IndexSet;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default enumeration cap on `|G|`.
pub const DEFAULT_MAX_ELEMENTS: usize = 1_000_000;

pub struct GroupTable {
    degree: usize,
    generators: Vec<Permutation>,
    elements: IndexSet<Permutation>,
    inverses: Vec<u32>,
    orders: Vec<u64>,
}

impl GroupTable {
    /// Closes `generators` under multiplication with the default cap.
    pub fn close(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::close_with_cap(degree, generators, DEFAULT_MAX_ELEMENTS)
    }

    pub fn close_with_cap(degree: usize, generators: Vec<Permutation>, cap: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        if generators.is_empty() {
            return Err(Error::NoGenerators);
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: g.degree(),
            });
        }

        let mut elements = IndexSet::new();
        elements.insert(Permutation::identity(degree));
        let mut next = 0;
        while next < elements.len() {
            let x = elements[next].clone();
            for g in &generators {
                let y = x.then(g);
                if !elements.contains(&y) {
                    if elements.len() == cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    elements.insert(y);
                }
            }
            next += 1;
        }

        let inverses = elements
            .iter()
            .map(|x| {
                elements
                    .get_index_of(&x.inverse())
                    .expect("closed under inverse") as u32
            })
            .collect();
        let orders = elements.iter().map(Permutation::order).collect();
        Ok(GroupTable {
            degree,
            generators,
            elements,
            inverses,
            orders,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Element with the given enumeration index; index 0 is the identity.
    pub fn element(&self, index: usize) -> &Permutation {
        &self.elements[index]
    }

    pub fn elements(&self) -> impl ExactSizeIterator<Item = &Permutation> + '_ {
        self.elements.iter()
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.elements.get_index_of(p)
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.contains(p)
    }

    /// Index of `element(a) · element(b)`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let product = self.elements[a].then(&self.elements[b]);
        self.elements
            .get_index_of(&product)
            .expect("group table is closed under multiplication")
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    pub fn element_order(&self, a: usize) -> u64 {
        self.orders[a]
    }

    pub fn pow(&self, a: usize, exp: u64) -> usize {
        self.index_of(&self.elements[a].pow(exp))
            .expect("group table is closed under powers")
    }

    /// `g^-1 h^-1 g h`.
    pub fn commutator(&self, g: usize, h: usize) -> usize {
        let gi = self.inv(g);
        let hi = self.inv(h);
        self.mul(self.mul(self.mul(gi, hi), g), h)
    }

    /// `g^-1 x g`.
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| a.then(b) == b.then(a)))
    }

    pub fn whole(&self) -> Subgroup<'_> {
        Subgroup {
            parent: self,
            members: (0..self.order() as u32).collect(),
        }
    }

    pub fn trivial(&self) -> Subgroup<'_> {
        Subgroup {
            parent: self,
            members: vec![0],
        }
    }

    /// Subgroup generated by `generators`, each of which must lie in `self`.
    pub fn subgroup_from(&self, generators: &[Permutation]) -> Result<Subgroup<'_>> {
        let indices = generators
            .iter()
            .map(|g| {
                self.index_of(g)
                    .ok_or_else(|| Error::NotInGroup(g.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.generated_by(indices))
    }

    /// Subgroup generated by elements given as indices.
    pub fn generated_by(&self, candidates: impl IntoIterator<Item = usize>) -> Subgroup<'_> {
        let mut span = Span::new(self);
        for c in candidates {
            span.add(c);
        }
        Subgroup::from_indices(self, span.members)
    }

    /// `γ1 = G`, `γ(k+1) = <[γk, G]>`, listed until the series stops changing.
    /// The last term is trivial exactly when the group is nilpotent.
    pub fn lower_central_series(&self) -> Vec<Subgroup<'_>> {
        let whole = self.whole();
        let mut series = vec![self.whole()];
        loop {
            let last = series.last().unwrap();
            if last.is_trivial() {
                break;
            }
            let next = commutator_subgroup(last, &whole);
            if next.order() == last.order() {
                break;
            }
            series.push(next);
        }
        series
    }

    /// `δ0 = G`, `δ(k+1) = [δk, δk]`, listed until the series stops changing.
    pub fn derived_series(&self) -> Vec<Subgroup<'_>> {
        let mut series = vec![self.whole()];
        loop {
            let last = series.last().unwrap();
            if last.is_trivial() {
                break;
            }
            let next = commutator_subgroup(last, last);
            if next.order() == last.order() {
                break;
            }
            series.push(next);
        }
        series
    }

    pub fn is_soluble(&self) -> bool {
        self.derived_series().last().unwrap().is_trivial()
    }
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

/// `<[a, b] : a in A, b in B>`.
pub fn commutator_subgroup<'g>(a: &Subgroup<'g>, b: &Subgroup<'g>) -> Subgroup<'g> {
    let g = a.parent;
    let mut seen = vec![false; g.order()];
    let mut comms = Vec::new();
    for &x in &a.members {
        for &y in &b.members {
            let c = g.commutator(x as usize, y as usize);
            if !std::mem::replace(&mut seen[c], true) {
                comms.push(c);
            }
        }
    }
    g.generated_by(comms)
}

/// Incrementally grown `<gens>`.
struct Span<'g> {
    group: &'g GroupTable,
    mask: Vec<bool>,
    members: Vec<usize>,
    gens: Vec<usize>,
}

impl<'g> Span<'g> {
    fn new(group: &'g GroupTable) -> Self {
        let mut mask = vec![false; group.order()];
        mask[0] = true;
        Span {
            group,
            mask,
            members: vec![0],
            gens: Vec::new(),
        }
    }

    /// Adds `c` as a generator unless it is already spanned. Each accepted
    /// generator at least doubles the span, so re-closing from scratch
    /// happens at most log2|G| times.
    fn add(&mut self, c: usize) {
        if self.mask[c] {
            return;
        }
        self.gens.push(c);
        self.mask.iter_mut().for_each(|m| *m = false);
        self.mask[0] = true;
        self.members.clear();
        self.members.push(0);
        let mut next = 0;
        while next < self.members.len() {
            let x = self.members[next];
            for &g in &self.gens {
                let y = self.group.mul(x, g);
                if !self.mask[y] {
                    self.mask[y] = true;
                    self.members.push(y);
                }
            }
            next += 1;
        }
    }
}

/// A subgroup of a [`GroupTable`], stored as sorted element indices.
#[derive(Clone)]
pub struct Subgroup<'g> {
    parent: &'g GroupTable,
    members: Vec<u32>,
}

impl<'g> Subgroup<'g> {
    pub(crate) fn from_indices(parent: &'g GroupTable, members: Vec<usize>) -> Self {
        let mut members: Vec<u32> = members.into_iter().map(|i| i as u32).collect();
        members.sort_unstable();
        members.dedup();
        assert_eq!(
            parent.order() % members.len(),
            0,
            "subgroup order {} does not divide group order {}",
            members.len(),
            parent.order()
        );
        Subgroup { parent, members }
    }

    pub fn parent(&self) -> &'g GroupTable {
        self.parent
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    /// Sorted indices into the parent's element table.
    pub fn indices(&self) -> &[u32] {
        &self.members
    }

    pub fn contains_index(&self, index: usize) -> bool {
        self.members.binary_search(&(index as u32)).is_ok()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.parent
            .index_of(p)
            .is_some_and(|i| self.contains_index(i))
    }

    pub fn elements(&self) -> impl ExactSizeIterator<Item = &'g Permutation> + '_ {
        let parent = self.parent;
        self.members
            .iter()
            .map(move |&i| parent.element(i as usize))
    }

    pub fn same_parent(&self, other: &Subgroup<'_>) -> bool {
        std::ptr::eq(self.parent, other.parent)
    }

    pub(crate) fn mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.parent.order()];
        for &i in &self.members {
            mask[i as usize] = true;
        }
        mask
    }

    /// A small generating set, picked greedily in index order.
    pub fn generators(&self) -> Vec<Permutation> {
        let mut span = Span::new(self.parent);
        for &c in &self.members {
            span.add(c as usize);
        }
        span.gens
            .into_iter()
            .map(|i| self.parent.element(i).clone())
            .collect()
    }

    pub(crate) fn conjugate_by_index(&self, g: usize) -> Subgroup<'g> {
        let parent = self.parent;
        let mut members: Vec<u32> = self
            .members
            .iter()
            .map(|&s| parent.conjugate(s as usize, g) as u32)
            .collect();
        members.sort_unstable();
        Subgroup { parent, members }
    }

    /// `{ g^-1 s g : s in self }`.
    pub fn conjugate(&self, g: &Permutation) -> Result<Subgroup<'g>> {
        let gi = self
            .parent
            .index_of(g)
            .ok_or_else(|| Error::NotInGroup(g.to_string()))?;
        Ok(self.conjugate_by_index(gi))
    }

    fn normalized_by(&self, mask: &[bool], g: usize) -> bool {
        self.members
            .iter()
            .all(|&s| mask[self.parent.conjugate(s as usize, g)])
    }

    /// First generator of the parent that does not normalize `self`.
    pub fn non_normalizing_generator(&self) -> Option<&'g Permutation> {
        let mask = self.mask();
        let parent = self.parent;
        parent.generators.iter().find(|g| {
            let gi = parent.index_of(g).expect("generators lie in the group");
            !self.normalized_by(&mask, gi)
        })
    }

    /// Normality tested on the parent's generators only.
    pub fn is_normal(&self) -> bool {
        self.non_normalizing_generator().is_none()
    }

    /// `{ g in G : g^-1 S g = S }` by a scan over every element of `G`.
    pub fn normalizer(&self) -> Subgroup<'g> {
        let mask = self.mask();
        let members = (0..self.parent.order())
            .filter(|&g| self.normalized_by(&mask, g))
            .collect();
        Subgroup::from_indices(self.parent, members)
    }
}

impl PartialEq for Subgroup<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.same_parent(other) && self.members == other.members
    }
}

impl Eq for Subgroup<'_> {}

impl fmt::Debug for Subgroup<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subgroup(order {} of {}, gens {:?})",
            self.order(),
            self.parent.order(),
            self.generators()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{alternating, cyclic, dihedral, symmetric};

    fn p(text: &str, degree: usize) -> Permutation {
        Permutation::parse_cycles(text, degree).unwrap()
    }

    #[test]
    fn klein_four_from_printed_generators() {
        let g = GroupTable::close(5, vec![p("(1,2)(3,4)", 5), p("(1,3)(2,4)", 5)]).unwrap();
        assert_eq!(g.order(), 4);
        assert!(g.element(0).is_identity());
    }

    #[test]
    fn trivial_closure() {
        let g = GroupTable::close(3, vec![Permutation::identity(3)]).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn a5_from_two_cycles() {
        let g = GroupTable::close(5, vec![p("(1,2,3,4,5)", 5), p("(1,2,3)", 5)]).unwrap();
        assert_eq!(g.order(), 60);
        assert!(g.elements().all(Permutation::is_even));
    }

    #[test]
    fn closure_errors() {
        assert_eq!(
            GroupTable::close(3, vec![]).unwrap_err(),
            Error::NoGenerators
        );
        assert!(matches!(
            GroupTable::close(3, vec![p("(1,2)", 4)]).unwrap_err(),
            Error::DegreeMismatch { .. }
        ));
        let err = GroupTable::close_with_cap(5, vec![p("(1,2,3,4,5)", 5), p("(1,2)", 5)], 100)
            .unwrap_err();
        assert_eq!(err, Error::CapExceeded { cap: 100 });
        assert!(err.is_resource());
        // exactly at the cap is fine
        assert_eq!(
            GroupTable::close_with_cap(5, vec![p("(1,2,3,4,5)", 5), p("(1,2)", 5)], 120)
                .unwrap()
                .order(),
            120
        );
    }

    #[test]
    fn subgroups_of_a5() {
        let a5 = alternating(5).unwrap();
        assert_eq!(a5.subgroup_from(&[p("(1,2,3)", 5)]).unwrap().order(), 3);
        assert_eq!(a5.subgroup_from(&[p("(1,2,3,4,5)", 5)]).unwrap().order(), 5);
        assert!(a5
            .subgroup_from(&[Permutation::identity(5)])
            .unwrap()
            .is_trivial());
        assert!(matches!(
            a5.subgroup_from(&[p("(1,2)", 5)]).unwrap_err(),
            Error::NotInGroup(_)
        ));
    }

    #[test]
    fn conjugation() {
        let a5 = alternating(5).unwrap();
        let q = a5.subgroup_from(&[p("(1,2,3)", 5)]).unwrap();
        assert_eq!(q.conjugate(&Permutation::identity(5)).unwrap(), q);
        assert_eq!(q.conjugate(&p("(1,3,2)", 5)).unwrap(), q);
        let expected = a5.subgroup_from(&[p("(1,2,4)", 5)]).unwrap();
        assert_eq!(q.conjugate(&p("(3,4,5)", 5)).unwrap(), expected);
        assert!(q.conjugate(&p("(1,2)", 5)).is_err());
    }

    #[test]
    fn normality() {
        let c6 = cyclic(6).unwrap();
        let sub = c6.generated_by([2]);
        assert!(sub.is_normal());
        let s3 = symmetric(3).unwrap();
        assert!(s3.subgroup_from(&[p("(1,2,3)", 3)]).unwrap().is_normal());
        assert!(!s3.subgroup_from(&[p("(1,2)", 3)]).unwrap().is_normal());
        let a5 = alternating(5).unwrap();
        let pp = a5
            .subgroup_from(&[p("(1,2)(3,4)", 5), p("(1,3)(2,4)", 5)])
            .unwrap();
        assert!(!pp.is_normal());
    }

    #[test]
    fn normalizers() {
        let s4 = symmetric(4).unwrap();
        let v4 = s4
            .subgroup_from(&[p("(1,2)(3,4)", 4), p("(1,3)(2,4)", 4)])
            .unwrap();
        assert_eq!(v4.normalizer().order(), 24);
        assert_eq!(s4.trivial().normalizer().order(), 24);
        let a5 = alternating(5).unwrap();
        let r = a5.subgroup_from(&[p("(1,2,3,4,5)", 5)]).unwrap();
        let n = r.normalizer();
        assert_eq!(n.order(), 10);
        assert!(r.indices().iter().all(|&i| n.contains_index(i as usize)));
    }

    #[test]
    fn lower_central_series_examples() {
        let c4 = cyclic(4).unwrap();
        let orders: Vec<_> = c4
            .lower_central_series()
            .iter()
            .map(Subgroup::order)
            .collect();
        assert_eq!(orders, vec![4, 1]);
        let s3 = symmetric(3).unwrap();
        let orders: Vec<_> = s3
            .lower_central_series()
            .iter()
            .map(Subgroup::order)
            .collect();
        assert_eq!(orders, vec![6, 3]);
        let d4 = dihedral(4).unwrap();
        let orders: Vec<_> = d4
            .lower_central_series()
            .iter()
            .map(Subgroup::order)
            .collect();
        assert_eq!(orders, vec![8, 2, 1]);
        let s4 = symmetric(4).unwrap();
        let last = s4.lower_central_series().pop().unwrap();
        assert_eq!(last.order(), 12);
        assert!(last.elements().all(Permutation::is_even));
        let trivial = cyclic(1).unwrap();
        assert_eq!(trivial.lower_central_series().len(), 1);
    }

    #[test]
    fn solubility() {
        assert!(symmetric(4).unwrap().is_soluble());
        assert!(!alternating(5).unwrap().is_soluble());
        let orders: Vec<_> = symmetric(4)
            .unwrap()
            .derived_series()
            .iter()
            .map(Subgroup::order)
            .collect();
        assert_eq!(orders, vec![24, 12, 4, 1]);
    }

    #[test]
    fn generators_regenerate() {
        let s4 = symmetric(4).unwrap();
        for sub in [s4.whole(), s4.generated_by([5, 7]), s4.trivial()] {
            let gens = sub.generators();
            let again = s4.subgroup_from(&gens).unwrap();
            assert_eq!(again, sub);
        }
    }
}
