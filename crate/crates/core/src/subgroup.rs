//! Subgroups as bitsets over the parent's element table, and the
//! element-level operations on them (joins, normalizers, closures, quotients).

use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use crate::arith::{gcd, p_part};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::{Group, DEFAULT_ORDER_CAP};
use crate::perm::Perm;

#[derive(Clone, Debug)]
pub struct Subgroup {
    parent: u64,
    members: BitSet,
    generators: Vec<usize>,
    order: usize,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.parent.hash(state);
        self.members.hash(state);
    }
}

impl Subgroup {
    pub fn parent_id(&self) -> u64 {
        self.parent
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn members(&self) -> &BitSet {
        &self.members
    }

    /// Generator indices into the parent's element table.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.order <= other.order && self.members.is_subset(&other.members)
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    /// Generators in cycle notation.
    pub fn describe(&self, g: &Group) -> String {
        if self.generators.is_empty() {
            return "<>".to_string();
        }
        let gens: Vec<String> = self.generators.iter().map(|&x| g.element(x).to_string()).collect();
        format!("<{}>", gens.join(", "))
    }
}

/// `HK` as a set, together with whether it is a subgroup.
#[derive(Clone, Debug)]
pub struct ProductSet {
    pub size: usize,
    pub is_group: bool,
    pub set: BitSet,
}

/// A quotient group together with the natural projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: Group,
    /// `projection[x]` is the quotient element index of parent element `x`.
    pub projection: Vec<usize>,
}

impl Quotient {
    /// Image of a subgroup of the parent.
    pub fn image(&self, parent: &Group, h: &Subgroup) -> Subgroup {
        let gens: Vec<usize> = h.generators.iter().map(|&x| self.projection[x]).collect();
        let _ = parent;
        self.group.subgroup_generated(&gens)
    }

    /// Full preimage of a subgroup of the quotient.
    pub fn preimage(&self, parent: &Group, q: &Subgroup) -> Subgroup {
        let members = BitSet::from_indices(
            parent.order(),
            (0..parent.order()).filter(|&x| q.contains(self.projection[x])),
        );
        parent.subgroup_from_members(members)
    }
}

impl Group {
    pub(crate) fn check_parent(&self, h: &Subgroup) -> Result<()> {
        if h.parent == self.id() {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup {
            parent: self.id(),
            members: BitSet::full(self.order()),
            generators: self.generator_indices().to_vec(),
            order: self.order(),
        }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup {
            parent: self.id(),
            members: BitSet::from_indices(self.order(), [0]),
            generators: Vec::new(),
            order: 1,
        }
    }

    /// Subgroup generated by the given element indices.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Subgroup {
        let mut h = self.trivial_subgroup();
        for &x in gens {
            if !h.contains(x) {
                h = self.join_element(&h, x);
            }
        }
        h
    }

    /// `<H, x>`, built as a union of right cosets of `H`.
    pub fn join_element(&self, h: &Subgroup, x: usize) -> Subgroup {
        if h.contains(x) {
            return h.clone();
        }
        let mut gens = h.generators.clone();
        gens.push(x);
        let base: Vec<usize> = h.members.iter().collect();
        let mut members = h.members.clone();
        let mut reps = vec![0usize];
        let mut i = 0;
        while i < reps.len() {
            let r = reps[i];
            for &g in &gens {
                let y = self.mul(r, g);
                if !members.contains(y) {
                    for &a in &base {
                        members.insert(self.mul(a, y));
                    }
                    reps.push(y);
                }
            }
            i += 1;
        }
        Subgroup {
            parent: self.id(),
            order: base.len() * reps.len(),
            members,
            generators: gens,
        }
    }

    /// Wraps a closed member set, choosing generators greedily in index order.
    pub fn subgroup_from_members(&self, members: BitSet) -> Subgroup {
        let mut h = self.trivial_subgroup();
        for x in members.iter() {
            if !h.contains(x) {
                h = self.join_element(&h, x);
            }
        }
        debug_assert_eq!(h.members, members, "member set is not closed");
        h
    }

    /// Like `subgroup_from_members` but verifies closure.
    pub fn try_subgroup_from_members(&self, members: BitSet) -> Option<Subgroup> {
        if !members.contains(0) {
            return None;
        }
        let mut h = self.trivial_subgroup();
        for x in members.iter() {
            if !h.contains(x) {
                h = self.join_element(&h, x);
                if !h.members.is_subset(&members) {
                    return None;
                }
            }
        }
        Some(h)
    }

    pub fn subgroup_from_perms(&self, gens: &[Perm]) -> Result<Subgroup> {
        let idx = gens
            .iter()
            .map(|p| {
                if p.degree() != self.degree() {
                    return Err(Error::DegreeMismatch(self.degree(), p.degree()));
                }
                self.index_of(p)
                    .ok_or_else(|| Error::InvalidPerm(format!("{p} is not in the group")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.subgroup_generated(&idx))
    }

    pub fn join(&self, h: &Subgroup, k: &Subgroup) -> Result<Subgroup> {
        self.check_parent(h)?;
        self.check_parent(k)?;
        Ok(self.join_unchecked(h, k))
    }

    pub(crate) fn join_unchecked(&self, h: &Subgroup, k: &Subgroup) -> Subgroup {
        let (big, small) = if h.order >= k.order { (h, k) } else { (k, h) };
        let mut acc = big.clone();
        for &x in &small.generators {
            if !acc.contains(x) {
                acc = self.join_element(&acc, x);
            }
        }
        acc
    }

    pub fn intersect(&self, h: &Subgroup, k: &Subgroup) -> Result<Subgroup> {
        self.check_parent(h)?;
        self.check_parent(k)?;
        Ok(self.subgroup_from_members(h.members.intersection(&k.members)))
    }

    /// `H^x = x^-1 H x`.
    pub fn conjugate(&self, h: &Subgroup, x: usize) -> Subgroup {
        let members = BitSet::from_indices(self.order(), h.members.iter().map(|a| self.conj(a, x)));
        Subgroup {
            parent: self.id(),
            members,
            generators: h.generators.iter().map(|&a| self.conj(a, x)).collect(),
            order: h.order,
        }
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.is_normalized_by(h, self.generator_indices())
    }

    /// Whether conjugation by every element of `by` maps `H` into itself.
    pub fn is_normalized_by(&self, h: &Subgroup, by: &[usize]) -> bool {
        by.iter()
            .all(|&x| h.generators.iter().all(|&a| h.contains(self.conj(a, x))))
    }

    /// Whether `H` is normal in the subgroup `K` (assumes `H <= K`).
    pub fn is_normal_in(&self, h: &Subgroup, k: &Subgroup) -> bool {
        self.is_normalized_by(h, &k.generators)
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let members = BitSet::from_indices(
            self.order(),
            (0..self.order()).filter(|&x| self.is_normalized_by(h, &[x])),
        );
        self.subgroup_from_members(members)
    }

    pub fn centralizer(&self, h: &Subgroup) -> Subgroup {
        let members = BitSet::from_indices(
            self.order(),
            (0..self.order()).filter(|&x| {
                h.generators
                    .iter()
                    .all(|&a| self.mul(a, x) == self.mul(x, a))
            }),
        );
        self.subgroup_from_members(members)
    }

    /// All distinct conjugates of `H` under the subgroup `K`.
    pub fn conjugates_under(&self, h: &Subgroup, k: &Subgroup) -> Vec<Subgroup> {
        let mut orbit = vec![h.clone()];
        let mut seen: std::collections::HashSet<BitSet> = std::collections::HashSet::new();
        seen.insert(h.members.clone());
        let mut i = 0;
        while i < orbit.len() {
            for &x in &k.generators {
                let c = self.conjugate(&orbit[i], x);
                if seen.insert(c.members.clone()) {
                    orbit.push(c);
                }
            }
            i += 1;
        }
        orbit
    }

    /// Largest normal subgroup of `G` contained in `H`.
    pub fn core(&self, h: &Subgroup) -> Subgroup {
        let mut acc = h.members.clone();
        for c in self.conjugates_under(h, &self.whole()) {
            acc = acc.intersection(&c.members);
        }
        self.subgroup_from_members(acc)
    }

    pub fn normal_closure(&self, h: &Subgroup) -> Subgroup {
        self.normal_closure_in(h, &self.whole())
    }

    /// Smallest subgroup containing `H` that is normalized by `K`.
    pub fn normal_closure_in(&self, h: &Subgroup, k: &Subgroup) -> Subgroup {
        let mut acc = h.clone();
        loop {
            let mut grew = false;
            let gens = acc.generators.clone();
            for &a in &gens {
                for &x in &k.generators {
                    let c = self.conj(a, x);
                    if !acc.contains(c) {
                        acc = self.join_element(&acc, c);
                        grew = true;
                    }
                }
            }
            if !grew {
                return acc;
            }
        }
    }

    /// Normal closure of `<N, x>` for a subgroup `N` already normal in `G`.
    pub(crate) fn normal_closure_over(&self, n: &Subgroup, x: usize) -> Subgroup {
        let start = self.join_element(n, x);
        self.normal_closure(&start)
    }

    /// Iterated normal closures `H^G, H^(H^G), ...` reach `H`.
    pub fn is_subnormal(&self, h: &Subgroup) -> bool {
        let mut k = self.whole();
        loop {
            let next = self.normal_closure_in(h, &k);
            if next.order == k.order {
                return next.order == h.order;
            }
            k = next;
        }
    }

    /// The set `HK` and whether `HK = KH`.
    pub fn product_set(&self, h: &Subgroup, k: &Subgroup) -> Result<ProductSet> {
        self.check_parent(h)?;
        self.check_parent(k)?;
        let mut set = BitSet::new(self.order());
        let kk: Vec<usize> = k.members.iter().collect();
        for a in h.members.iter() {
            for &b in &kk {
                set.insert(self.mul(a, b));
            }
        }
        let size = set.count();
        let is_group = self.set_is_closed(&set, h.generators.iter().chain(&k.generators));
        Ok(ProductSet {
            size,
            is_group,
            set,
        })
    }

    /// `|HK| = |H||K| / |H ∩ K|` without materializing the set.
    pub fn product_size(&self, h: &Subgroup, k: &Subgroup) -> usize {
        h.order * k.order / h.members.intersection_count(&k.members)
    }

    fn set_is_closed<'a>(&self, set: &BitSet, gens: impl Iterator<Item = &'a usize>) -> bool {
        let gens: Vec<usize> = gens.copied().collect();
        set.iter()
            .all(|x| gens.iter().all(|&g| set.contains(self.mul(x, g))))
    }

    pub fn permutes(&self, h: &Subgroup, k: &Subgroup) -> Result<bool> {
        self.check_parent(h)?;
        self.check_parent(k)?;
        Ok(self.permutes_unchecked(h, k))
    }

    /// `HK = KH`, decided by comparing `|HK|` with `|<H, K>|`.
    pub(crate) fn permutes_unchecked(&self, h: &Subgroup, k: &Subgroup) -> bool {
        if h.is_subgroup_of(k) || k.is_subgroup_of(h) {
            return true;
        }
        let target = self.product_size(h, k);
        if self.order() % target != 0 {
            return false;
        }
        let mut acc = if h.order >= k.order { h.clone() } else { k.clone() };
        let other = if h.order >= k.order { k } else { h };
        for &x in &other.generators {
            if !acc.contains(x) {
                acc = self.join_element(&acc, x);
                if acc.order > target {
                    return false;
                }
            }
        }
        acc.order == target
    }

    /// Subgroup materialized as a standalone group, plus the map from its
    /// element indices back to ours.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> (Group, Vec<usize>) {
        let members: Vec<usize> = h.members.iter().collect();
        (self.restrict(&members, &h.generators), members)
    }

    /// Right-coset action on `G/N`, with the natural projection.
    pub fn quotient(&self, n: &Subgroup) -> Result<Quotient> {
        self.check_parent(n)?;
        if !self.is_normal(n) {
            return Err(Error::NotNormal);
        }
        let mut coset = vec![usize::MAX; self.order()];
        let mut reps = Vec::new();
        for x in 0..self.order() {
            if coset[x] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(x);
            for a in n.members.iter() {
                coset[self.mul(a, x)] = id;
            }
        }
        let m = reps.len();
        let action = |x: usize| -> Perm {
            Perm::from_images_unchecked(
                reps.iter()
                    .map(|&r| coset[self.mul(r, x)] as u32)
                    .collect(),
            )
        };
        let gens: Vec<Perm> = self.generator_indices().iter().map(|&g| action(g)).collect();
        let group = Group::generate_with_cap(m, gens, DEFAULT_ORDER_CAP.max(m))?;
        let mut cache: HashMap<usize, usize> = HashMap::new();
        let projection = (0..self.order())
            .map(|x| {
                let c = coset[x];
                *cache
                    .entry(c)
                    .or_insert_with(|| group.index_of(&action(x)).expect("coset action in quotient"))
            })
            .collect();
        Ok(Quotient { group, projection })
    }

    /// `O^p(G)`: the subgroup generated by all elements of order prime to `p`.
    pub fn o_upper_p(&self, p: usize) -> Subgroup {
        let gens: Vec<usize> = (0..self.order())
            .filter(|&x| gcd(self.element_order(x), p) == 1)
            .collect();
        self.subgroup_generated(&gens)
    }

    /// Subgroup of elements whose order divides `p_part(|G|, p)`; a subgroup
    /// exactly when the Sylow `p`-subgroup is normal.
    pub(crate) fn p_elements(&self, p: usize) -> BitSet {
        let part = p_part(self.order(), p);
        BitSet::from_indices(
            self.order(),
            (0..self.order()).filter(|&x| part % self.element_order(x) == 0),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{cyclic, symmetric};

    fn cyc(degree: usize, cycles: &[&[usize]]) -> Perm {
        Perm::from_cycles(degree, cycles).unwrap()
    }

    fn sub(g: &Group, gens: &[Perm]) -> Subgroup {
        g.subgroup_from_perms(gens).unwrap()
    }

    #[test]
    fn product_sets_in_s3_and_s4() {
        let s3 = symmetric(3);
        let t = sub(&s3, &[cyc(3, &[&[1, 2]])]);
        let c3 = sub(&s3, &[cyc(3, &[&[1, 2, 3]])]);
        let ps = s3.product_set(&t, &c3).unwrap();
        assert_eq!((ps.size, ps.is_group), (6, true));
        let t13 = sub(&s3, &[cyc(3, &[&[1, 3]])]);
        let ps = s3.product_set(&t, &t13).unwrap();
        assert_eq!((ps.size, ps.is_group), (4, false));
        assert!(!s3.permutes(&t, &t13).unwrap());
        let same = s3.product_set(&t, &t).unwrap();
        assert_eq!((same.size, same.is_group), (2, true));

        let s4 = symmetric(4);
        let a = sub(&s4, &[cyc(4, &[&[1, 2]])]);
        let b = sub(&s4, &[cyc(4, &[&[1, 3, 4]])]);
        let ps = s4.product_set(&a, &b).unwrap();
        assert_eq!((ps.size, ps.is_group), (6, false));
    }

    #[test]
    fn parent_mismatch_is_reported() {
        let s3 = symmetric(3);
        let other = symmetric(3);
        assert_eq!(
            s3.join(&s3.whole(), &other.whole()).unwrap_err(),
            Error::ParentMismatch
        );
    }

    #[test]
    fn normalizer_core_closure() {
        let s4 = symmetric(4);
        let t = sub(&s4, &[cyc(4, &[&[1, 2]])]);
        assert_eq!(s4.normalizer(&t).order(), 4);
        assert_eq!(s4.normal_closure(&t).order(), 24);
        assert!(s4.core(&t).is_trivial());
        let d8 = sub(&s4, &[cyc(4, &[&[1, 2, 3, 4]]), cyc(4, &[&[1, 3]])]);
        assert_eq!(d8.order(), 8);
        assert_eq!(s4.normalizer(&d8), d8);
        let a4 = sub(&s4, &[cyc(4, &[&[1, 2, 3]]), cyc(4, &[&[2, 3, 4]])]);
        assert_eq!(s4.normalizer(&a4).order(), 24);
        assert_eq!(s4.core(&a4), a4);
        assert_eq!(s4.normal_closure(&a4), a4);
        assert_eq!(s4.intersect(&a4, &d8).unwrap().order(), 4);
        let t34 = sub(&s4, &[cyc(4, &[&[3, 4]])]);
        assert_eq!(s4.join(&t, &t34).unwrap().order(), 4);
        assert_eq!(s4.join(&t, &s4.trivial_subgroup()).unwrap(), t);
    }

    #[test]
    fn subnormality() {
        let s4 = symmetric(4);
        let h = sub(&s4, &[cyc(4, &[&[1, 2], &[3, 4]])]);
        assert!(s4.is_subnormal(&h));
        assert!(!s4.is_normal(&h));
        let t = sub(&s4, &[cyc(4, &[&[1, 2]])]);
        assert!(!s4.is_subnormal(&t));
    }

    #[test]
    fn quotient_s4_by_v4() {
        let s4 = symmetric(4);
        let v4 = sub(&s4, &[cyc(4, &[&[1, 2], &[3, 4]]), cyc(4, &[&[1, 3], &[2, 4]])]);
        let q = s4.quotient(&v4).unwrap();
        assert_eq!(q.group.order(), 6);
        assert!(!q.group.is_abelian());
        for x in 0..24 {
            for y in 0..24 {
                assert_eq!(
                    q.projection[s4.mul(x, y)],
                    q.group.mul(q.projection[x], q.projection[y])
                );
            }
        }
        assert_eq!(s4.quotient(&s4.whole()).unwrap().group.order(), 1);
        assert_eq!(s4.quotient(&s4.trivial_subgroup()).unwrap().group.order(), 24);
        let t = sub(&s4, &[cyc(4, &[&[1, 2]])]);
        assert_eq!(s4.quotient(&t).unwrap_err(), Error::NotNormal);
    }

    #[test]
    fn o_upper_p_examples() {
        let s4 = symmetric(4);
        let a4 = sub(&s4, &[cyc(4, &[&[1, 2, 3]]), cyc(4, &[&[2, 3, 4]])]);
        assert_eq!(s4.o_upper_p(2), a4);
        assert_eq!(s4.o_upper_p(3), s4.whole());
        assert!(cyclic(8).o_upper_p(2).is_trivial());
    }
}
