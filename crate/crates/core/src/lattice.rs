//! Exhaustive subgroup lattices.
//!
//! Enumeration seeds the lattice with every cyclic subgroup, then joins each
//! known subgroup with each cyclic subgroup of prime-power order until no new
//! subgroup appears. Every subgroup is generated by its elements of
//! prime-power order, so the fixed point is the full lattice.

use std::collections::HashMap;

use crate::arith::{is_p_power, p_part};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::subgroup::Subgroup;

/// Default cap on the order of groups whose lattice we enumerate.
pub const DEFAULT_LATTICE_CAP: usize = 400;

/// Index of a subgroup within its lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubgroupId(pub usize);

/// A Sylow representative plus every conjugate, as lattice ids.
#[derive(Clone, Debug)]
pub struct SylowSet {
    pub p: usize,
    pub representative: SubgroupId,
    pub conjugates: Vec<SubgroupId>,
}

#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    parent: u64,
    group_order: usize,
    subgroups: Vec<Subgroup>,
    index: HashMap<BitSet, usize>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
    normal: Vec<bool>,
    maximal: Vec<bool>,
    minimal_normal: Vec<bool>,
}

impl SubgroupLattice {
    pub fn enumerate(g: &Group) -> Result<SubgroupLattice> {
        SubgroupLattice::enumerate_with_cap(g, DEFAULT_LATTICE_CAP)
    }

    pub fn enumerate_with_cap(g: &Group, cap: usize) -> Result<SubgroupLattice> {
        if g.order() > cap {
            return Err(Error::LatticeCap {
                order: g.order(),
                cap,
            });
        }
        let mut found: Vec<Subgroup> = vec![g.trivial_subgroup()];
        let mut seen: HashMap<BitSet, usize> = HashMap::new();
        seen.insert(found[0].members().clone(), 0);
        let mut pp_gens = Vec::new();
        for x in 1..g.order() {
            let c = g.subgroup_generated(&[x]);
            if !seen.contains_key(c.members()) {
                seen.insert(c.members().clone(), found.len());
                if crate::arith::is_prime_power(c.order()) {
                    pp_gens.push(x);
                }
                found.push(c);
            }
        }
        let mut i = 0;
        while i < found.len() {
            for &x in &pp_gens {
                if found[i].contains(x) {
                    continue;
                }
                let t = g.join_element(&found[i], x);
                if !seen.contains_key(t.members()) {
                    seen.insert(t.members().clone(), found.len());
                    found.push(t);
                }
            }
            i += 1;
        }
        Ok(SubgroupLattice::from_subgroups(g, found))
    }

    /// Builds lattice metadata over a complete, duplicate-free subgroup list.
    pub(crate) fn from_subgroups(g: &Group, mut subgroups: Vec<Subgroup>) -> SubgroupLattice {
        subgroups.sort_by(|a, b| {
            a.order()
                .cmp(&b.order())
                .then_with(|| a.members().cmp(b.members()))
        });
        let index: HashMap<BitSet, usize> = subgroups
            .iter()
            .enumerate()
            .map(|(i, s)| (s.members().clone(), i))
            .collect();
        let n = subgroups.len();

        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for i in 0..n {
            if class_of[i] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut class = vec![i];
            class_of[i] = id;
            let mut k = 0;
            while k < class.len() {
                let s = &subgroups[class[k]];
                for &x in g.generator_indices() {
                    let c = g.conjugate(s, x);
                    let j = *index
                        .get(c.members())
                        .expect("lattice is closed under conjugation");
                    if class_of[j] == usize::MAX {
                        class_of[j] = id;
                        class.push(j);
                    }
                }
                k += 1;
            }
            class.sort_unstable();
            classes.push(class);
        }
        let normal: Vec<bool> = (0..n).map(|i| classes[class_of[i]].len() == 1).collect();

        let order = g.order();
        let maximal: Vec<bool> = (0..n)
            .map(|i| {
                let s = &subgroups[i];
                s.order() < order
                    && !subgroups[i + 1..].iter().any(|t| {
                        t.order() > s.order()
                            && t.order() < order
                            && t.order() % s.order() == 0
                            && s.members().is_subset(t.members())
                    })
            })
            .collect();
        let minimal_normal: Vec<bool> = (0..n)
            .map(|i| {
                normal[i]
                    && subgroups[i].order() > 1
                    && !(1..i).any(|j| {
                        normal[j]
                            && subgroups[j].order() < subgroups[i].order()
                            && subgroups[j].members().is_subset(subgroups[i].members())
                    })
            })
            .collect();

        SubgroupLattice {
            parent: g.id(),
            group_order: order,
            subgroups,
            index,
            class_of,
            classes,
            normal,
            maximal,
            minimal_normal,
        }
    }

    /// Lattice of the subgroup `K` as a standalone group, read off from this
    /// lattice instead of re-enumerating.
    pub fn restrict(&self, g: &Group, k: &Subgroup) -> (Group, SubgroupLattice, Vec<usize>) {
        let (kg, members) = g.subgroup_as_group(k);
        let mut local = vec![usize::MAX; g.order()];
        for (i, &m) in members.iter().enumerate() {
            local[m] = i;
        }
        let subs: Vec<Subgroup> = self
            .subgroups
            .iter()
            .filter(|s| s.is_subgroup_of(k))
            .map(|s| {
                let gens: Vec<usize> = s.generators().iter().map(|&x| local[x]).collect();
                kg.subgroup_generated(&gens)
            })
            .collect();
        let lattice = SubgroupLattice::from_subgroups(&kg, subs);
        (kg, lattice, members)
    }

    pub fn parent_id(&self) -> u64 {
        self.parent
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn ids(&self) -> impl DoubleEndedIterator<Item = SubgroupId> + ExactSizeIterator {
        (0..self.subgroups.len()).map(SubgroupId)
    }

    pub fn get(&self, id: SubgroupId) -> &Subgroup {
        &self.subgroups[id.0]
    }

    pub fn id_of(&self, h: &Subgroup) -> Option<SubgroupId> {
        if h.parent_id() != self.parent {
            return None;
        }
        self.index.get(h.members()).map(|&i| SubgroupId(i))
    }

    pub fn id_of_members(&self, members: &BitSet) -> Option<SubgroupId> {
        self.index.get(members).map(|&i| SubgroupId(i))
    }

    pub fn trivial(&self) -> SubgroupId {
        SubgroupId(0)
    }

    pub fn whole(&self) -> SubgroupId {
        SubgroupId(self.subgroups.len() - 1)
    }

    pub fn is_normal(&self, id: SubgroupId) -> bool {
        self.normal[id.0]
    }

    pub fn is_maximal(&self, id: SubgroupId) -> bool {
        self.maximal[id.0]
    }

    pub fn is_minimal_normal(&self, id: SubgroupId) -> bool {
        self.minimal_normal[id.0]
    }

    pub fn conjugacy_classes(&self) -> Vec<Vec<SubgroupId>> {
        self.classes
            .iter()
            .map(|c| c.iter().map(|&i| SubgroupId(i)).collect())
            .collect()
    }

    pub fn class_of(&self, id: SubgroupId) -> usize {
        self.class_of[id.0]
    }

    pub fn conjugates(&self, id: SubgroupId) -> Vec<SubgroupId> {
        self.classes[self.class_of[id.0]]
            .iter()
            .map(|&i| SubgroupId(i))
            .collect()
    }

    /// `a <= b` in the inclusion order.
    pub fn includes(&self, a: SubgroupId, b: SubgroupId) -> bool {
        self.get(a).is_subgroup_of(self.get(b))
    }

    /// Ids of the lattice entries contained in `k`.
    pub fn subgroups_of(&self, k: &Subgroup) -> Vec<SubgroupId> {
        self.ids().filter(|&i| self.get(i).is_subgroup_of(k)).collect()
    }

    pub fn normal_subgroups(&self) -> Vec<SubgroupId> {
        self.ids().filter(|&i| self.normal[i.0]).collect()
    }

    pub fn maximal_subgroups(&self) -> Vec<SubgroupId> {
        self.ids().filter(|&i| self.maximal[i.0]).collect()
    }

    pub fn minimal_normal_subgroups(&self) -> Vec<SubgroupId> {
        self.ids().filter(|&i| self.minimal_normal[i.0]).collect()
    }

    /// Intersection of all maximal subgroups (the whole group when there are none).
    pub fn frattini(&self, g: &Group) -> Subgroup {
        let mut acc = BitSet::full(self.group_order);
        for m in self.maximal_subgroups() {
            acc = acc.intersection(self.get(m).members());
        }
        debug_assert_eq!(self.parent, g.id());
        self.get(self.id_of_members(&acc).expect("Frattini subgroup is a lattice entry"))
            .clone()
    }

    /// Join of all minimal normal subgroups.
    pub fn socle(&self, g: &Group) -> Subgroup {
        let mut acc = g.trivial_subgroup();
        for m in self.minimal_normal_subgroups() {
            acc = g.join_unchecked(&acc, self.get(m));
        }
        acc
    }

    /// Sylow `p`-subgroups; the trivial subgroup when `p` does not divide `|G|`.
    pub fn sylow(&self, p: usize) -> SylowSet {
        let target = p_part(self.group_order, p);
        let rep = self
            .ids()
            .find(|&i| self.get(i).order() == target && is_p_power(target, p))
            .expect("Sylow subgroups exist");
        let conjugates = self.conjugates(rep);
        debug_assert_eq!(conjugates.len() % p.max(2), 1 % p.max(2));
        debug_assert_eq!(self.group_order % conjugates.len(), 0);
        SylowSet {
            p,
            representative: rep,
            conjugates,
        }
    }

    /// All `T` with `HT = G` and `H ∩ T = 1`, largest first.
    pub fn complements(&self, h: &Subgroup) -> Vec<SubgroupId> {
        if self.group_order % h.order() != 0 {
            return Vec::new();
        }
        let target = self.group_order / h.order();
        self.ids()
            .rev()
            .filter(|&t| {
                let s = self.get(t);
                s.order() == target && s.members().intersection_count(h.members()) == 1
            })
            .collect()
    }

    /// Pairs `(a, b)` where `a` is a maximal subgroup of `b`.
    pub fn covers(&self) -> Vec<(SubgroupId, SubgroupId)> {
        let n = self.len();
        let mut out = Vec::new();
        for b in 0..n {
            let sb = &self.subgroups[b];
            let below: Vec<usize> = (0..b)
                .filter(|&a| {
                    let sa = &self.subgroups[a];
                    sa.order() < sb.order() && sa.members().is_subset(sb.members())
                })
                .collect();
            for &a in &below {
                let sa = &self.subgroups[a];
                let has_between = below.iter().any(|&c| {
                    let sc = &self.subgroups[c];
                    sc.order() > sa.order() && sa.members().is_subset(sc.members())
                });
                if !has_between {
                    out.push((SubgroupId(a), SubgroupId(b)));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{cyclic, dicyclic, symmetric};
    use crate::perm::Perm;

    fn cyc(degree: usize, cycles: &[&[usize]]) -> Perm {
        Perm::from_cycles(degree, cycles).unwrap()
    }

    #[test]
    fn s4_has_30_subgroups_in_11_classes() {
        let s4 = symmetric(4);
        let l = SubgroupLattice::enumerate(&s4).unwrap();
        assert_eq!(l.len(), 30);
        assert_eq!(l.conjugacy_classes().len(), 11);
        assert_eq!(l.normal_subgroups().len(), 4);
        assert_eq!(l.get(l.trivial()).order(), 1);
        assert_eq!(l.get(l.whole()).order(), 24);
    }

    #[test]
    fn prime_cyclic_has_two_subgroups() {
        for p in [2, 3, 5, 7, 11] {
            assert_eq!(SubgroupLattice::enumerate(&cyclic(p)).unwrap().len(), 2);
        }
    }

    #[test]
    fn q8_subgroups_all_normal() {
        let q8 = dicyclic(8);
        let l = SubgroupLattice::enumerate(&q8).unwrap();
        assert_eq!(l.len(), 6);
        assert!(l.ids().all(|i| l.is_normal(i)));
        let phi = l.frattini(&q8);
        assert_eq!(phi.order(), 2);
        assert!(l.complements(&phi).is_empty());
    }

    #[test]
    fn frattini_examples() {
        let s4 = symmetric(4);
        let l = SubgroupLattice::enumerate(&s4).unwrap();
        assert!(l.frattini(&s4).is_trivial());
        let c4 = cyclic(4);
        let l = SubgroupLattice::enumerate(&c4).unwrap();
        assert_eq!(l.frattini(&c4).order(), 2);
    }

    #[test]
    fn sylow_counts_in_s4() {
        let s4 = symmetric(4);
        let l = SubgroupLattice::enumerate(&s4).unwrap();
        let s2 = l.sylow(2);
        assert_eq!(l.get(s2.representative).order(), 8);
        assert_eq!(s2.conjugates.len(), 3);
        let s3 = l.sylow(3);
        assert_eq!(l.get(s3.representative).order(), 3);
        assert_eq!(s3.conjugates.len(), 4);
        assert!(l.get(l.sylow(5).representative).is_trivial());
        let c8 = cyclic(8);
        let l8 = SubgroupLattice::enumerate(&c8).unwrap();
        assert_eq!(l8.sylow(2).representative, l8.whole());
    }

    #[test]
    fn complements_in_s4() {
        let s4 = symmetric(4);
        let l = SubgroupLattice::enumerate(&s4).unwrap();
        let a4 = s4
            .subgroup_from_perms(&[cyc(4, &[&[1, 2, 3]]), cyc(4, &[&[2, 3, 4]])])
            .unwrap();
        let comps = l.complements(&a4);
        assert_eq!(comps.len(), 6);
        for c in comps {
            let gen = l.get(c).generators()[0];
            assert_eq!(s4.element(gen).cycles().len(), 1);
            assert_eq!(s4.element(gen).order(), 2);
        }
        assert_eq!(l.complements(&s4.whole()), vec![l.trivial()]);
    }

    #[test]
    fn socle_and_minimal_normals_of_s4() {
        let s4 = symmetric(4);
        let l = SubgroupLattice::enumerate(&s4).unwrap();
        let mins = l.minimal_normal_subgroups();
        assert_eq!(mins.len(), 1);
        assert_eq!(l.get(mins[0]).order(), 4);
        assert_eq!(l.socle(&s4).order(), 4);
        assert_eq!(l.maximal_subgroups().len(), 8);
    }

    #[test]
    fn lattice_cap() {
        let s6 = symmetric(6);
        assert_eq!(
            SubgroupLattice::enumerate(&s6).unwrap_err(),
            Error::LatticeCap { order: 720, cap: 400 }
        );
    }

    #[test]
    fn restriction_matches_direct_enumeration() {
        let s4 = symmetric(4);
        let l = SubgroupLattice::enumerate(&s4).unwrap();
        let d8 = l.get(l.sylow(2).representative).clone();
        let (kg, kl, _) = l.restrict(&s4, &d8);
        assert_eq!(kg.order(), 8);
        let direct = SubgroupLattice::enumerate(&kg).unwrap();
        assert_eq!(kl.len(), 10);
        assert_eq!(direct.len(), 10);
        assert_eq!(kl.normal_subgroups().len(), direct.normal_subgroups().len());
    }
}
