//! Embedding properties of subgroups: s-permutability, `H_sG`, weak
//! s-supplementation and its relatives.
//!
//! A [`GroupAnalysis`] owns a group with its lattice and memoizes every
//! predicate per lattice entry. Existential searches scan the lattice in
//! canonical order, so witnesses are reproducible.

use std::sync::OnceLock;

use serde::Serialize;

use crate::arith::is_prime_power;
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::lattice::{SubgroupId, SubgroupLattice, DEFAULT_LATTICE_CAP};
use crate::structure;
use crate::subgroup::Subgroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    WeaklySSupplemented,
    WeaklySPermutable,
    CNormal,
    SupersolvableSupplement,
    Complemented,
}

/// A supplement `T` of `H` certifying one of the properties above.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupplementWitness {
    pub property: Property,
    pub supplement: SubgroupId,
    pub intersection: SubgroupId,
    /// `H_sG`, the core of `H`, or the trivial subgroup.
    pub bound: SubgroupId,
}

pub struct GroupAnalysis {
    group: Group,
    lattice: SubgroupLattice,
    sylows: Vec<SubgroupId>,
    s_permutable: Vec<OnceLock<bool>>,
    permutable: Vec<OnceLock<bool>>,
    h_sg: Vec<OnceLock<SubgroupId>>,
    supersolvable: Vec<OnceLock<bool>>,
    subnormal: Vec<OnceLock<bool>>,
    ss_supplement: Vec<OnceLock<Option<SubgroupId>>>,
    wss: Vec<OnceLock<Option<SupplementWitness>>>,
    wsp: Vec<OnceLock<Option<SupplementWitness>>>,
    c_normal: Vec<OnceLock<Option<SupplementWitness>>>,
}

fn memo<T>(n: usize) -> Vec<OnceLock<T>> {
    (0..n).map(|_| OnceLock::new()).collect()
}

impl GroupAnalysis {
    pub fn new(group: Group) -> Result<GroupAnalysis> {
        GroupAnalysis::with_lattice_cap(group, DEFAULT_LATTICE_CAP)
    }

    pub fn with_lattice_cap(group: Group, cap: usize) -> Result<GroupAnalysis> {
        let lattice = SubgroupLattice::enumerate_with_cap(&group, cap)?;
        Ok(GroupAnalysis::from_parts(group, lattice))
    }

    /// Panics if the lattice belongs to another group.
    pub fn from_parts(group: Group, lattice: SubgroupLattice) -> GroupAnalysis {
        assert_eq!(group.id(), lattice.parent_id(), "lattice of another group");
        let sylows = group
            .primes()
            .into_iter()
            .flat_map(|p| lattice.sylow(p).conjugates)
            .collect();
        let n = lattice.len();
        GroupAnalysis {
            group,
            lattice,
            sylows,
            s_permutable: memo(n),
            permutable: memo(n),
            h_sg: memo(n),
            supersolvable: memo(n),
            subnormal: memo(n),
            ss_supplement: memo(n),
            wss: memo(n),
            wsp: memo(n),
            c_normal: memo(n),
        }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn lattice(&self) -> &SubgroupLattice {
        &self.lattice
    }

    pub fn subgroup(&self, id: SubgroupId) -> &Subgroup {
        self.lattice.get(id)
    }

    pub fn id(&self, h: &Subgroup) -> Result<SubgroupId> {
        if h.parent_id() != self.group.id() {
            return Err(Error::ParentMismatch);
        }
        Ok(self.lattice.id_of(h).expect("lattice is complete"))
    }

    fn id_of_bits(&self, bits: &BitSet) -> SubgroupId {
        self.lattice
            .id_of_members(bits)
            .expect("intersections of subgroups are subgroups")
    }

    /// Every Sylow subgroup, for every prime.
    pub fn sylow_subgroups(&self) -> &[SubgroupId] {
        &self.sylows
    }

    /// Permutes with every Sylow subgroup.
    pub fn is_s_permutable(&self, h: SubgroupId) -> bool {
        *self.s_permutable[h.0].get_or_init(|| {
            if self.lattice.is_normal(h) {
                return true;
            }
            let hs = self.subgroup(h);
            self.sylows
                .iter()
                .all(|&p| self.group.permutes_unchecked(hs, self.subgroup(p)))
        })
    }

    /// Permutes with every subgroup.
    pub fn is_permutable(&self, h: SubgroupId) -> bool {
        *self.permutable[h.0].get_or_init(|| {
            if self.lattice.is_normal(h) {
                return true;
            }
            let hs = self.subgroup(h);
            self.lattice
                .subgroups()
                .iter()
                .all(|k| self.group.permutes_unchecked(hs, k))
        })
    }

    /// `H_sG`: the join of the s-permutable subgroups of `H`.
    pub fn h_sg(&self, h: SubgroupId) -> SubgroupId {
        *self.h_sg[h.0].get_or_init(|| {
            let hs = self.subgroup(h);
            if self.is_s_permutable(h) {
                return h;
            }
            let mut acc = self.group.trivial_subgroup();
            for k in self.lattice.ids() {
                let ks = self.subgroup(k);
                if ks.order() >= hs.order() {
                    break;
                }
                if ks.is_subgroup_of(hs) && !ks.is_subgroup_of(&acc) && self.is_s_permutable(k) {
                    acc = self.group.join_unchecked(&acc, ks);
                }
            }
            self.id_of_bits(acc.members())
        })
    }

    /// All `T` with `HT = G`, in lattice order.
    pub fn supplements(&self, h: SubgroupId) -> Vec<SubgroupId> {
        self.supplements_iter(h).collect()
    }

    fn supplements_iter(&self, h: SubgroupId) -> impl Iterator<Item = SubgroupId> + '_ {
        let hs = self.subgroup(h);
        let order = self.group.order();
        self.lattice
            .ids()
            .filter(move |&t| self.group.product_size(hs, self.subgroup(t)) == order)
    }

    pub fn is_supersolvable_subgroup(&self, t: SubgroupId) -> bool {
        *self.supersolvable[t.0].get_or_init(|| {
            let ts = self.subgroup(t);
            if is_prime_power(ts.order()) || ts.order() == 1 {
                return true;
            }
            if t == self.lattice.whole() {
                return structure::is_supersolvable(&self.group);
            }
            let (sub, _) = self.group.subgroup_as_group(ts);
            structure::is_supersolvable(&sub)
        })
    }

    pub fn is_subnormal(&self, h: SubgroupId) -> bool {
        *self.subnormal[h.0]
            .get_or_init(|| self.lattice.is_normal(h) || self.group.is_subnormal(self.subgroup(h)))
    }

    /// First supplement of `H` that is supersolvable.
    pub fn supersolvable_supplement(&self, h: SubgroupId) -> Option<SubgroupId> {
        *self.ss_supplement[h.0].get_or_init(|| {
            self.supplements_iter(h)
                .find(|&t| self.is_supersolvable_subgroup(t))
        })
    }

    pub fn has_supersolvable_supplement(&self, h: SubgroupId) -> (bool, Option<SupplementWitness>) {
        match self.supersolvable_supplement(h) {
            None => (false, None),
            Some(t) => (
                true,
                Some(SupplementWitness {
                    property: Property::SupersolvableSupplement,
                    supplement: t,
                    intersection: self.intersection(h, t),
                    bound: h,
                }),
            ),
        }
    }

    fn intersection(&self, h: SubgroupId, t: SubgroupId) -> SubgroupId {
        self.id_of_bits(&self.subgroup(h).members().intersection(self.subgroup(t).members()))
    }

    fn supplement_within(
        &self,
        h: SubgroupId,
        bound: SubgroupId,
        property: Property,
        admissible: impl Fn(SubgroupId) -> bool,
    ) -> Option<SupplementWitness> {
        let hs = self.subgroup(h);
        let bs = self.subgroup(bound);
        self.supplements_iter(h)
            .find(|&t| {
                let meet = hs.members().intersection(self.subgroup(t).members());
                meet.is_subset(bs.members()) && admissible(t)
            })
            .map(|t| SupplementWitness {
                property,
                supplement: t,
                intersection: self.intersection(h, t),
                bound,
            })
    }

    /// Some `T` with `HT = G` and `H ∩ T <= H_sG`.
    pub fn weakly_s_supplemented(&self, h: SubgroupId) -> Option<&SupplementWitness> {
        self.wss[h.0]
            .get_or_init(|| {
                self.supplement_within(h, self.h_sg(h), Property::WeaklySSupplemented, |_| true)
            })
            .as_ref()
    }

    pub fn is_weakly_s_supplemented(&self, h: SubgroupId) -> (bool, Option<SupplementWitness>) {
        let w = self.weakly_s_supplemented(h).cloned();
        (w.is_some(), w)
    }

    /// As weakly s-supplemented, with `T` subnormal.
    pub fn weakly_s_permutable(&self, h: SubgroupId) -> Option<&SupplementWitness> {
        self.wsp[h.0]
            .get_or_init(|| {
                self.supplement_within(h, self.h_sg(h), Property::WeaklySPermutable, |t| {
                    self.is_subnormal(t)
                })
            })
            .as_ref()
    }

    pub fn is_weakly_s_permutable(&self, h: SubgroupId) -> (bool, Option<SupplementWitness>) {
        let w = self.weakly_s_permutable(h).cloned();
        (w.is_some(), w)
    }

    /// Some normal `T` with `HT = G` and `H ∩ T <= core(H)`.
    pub fn c_normal(&self, h: SubgroupId) -> Option<&SupplementWitness> {
        self.c_normal[h.0]
            .get_or_init(|| {
                let core = self.group.core(self.subgroup(h));
                let core = self.id_of_bits(core.members());
                self.supplement_within(h, core, Property::CNormal, |t| self.lattice.is_normal(t))
            })
            .as_ref()
    }

    pub fn is_c_normal(&self, h: SubgroupId) -> bool {
        self.c_normal(h).is_some()
    }

    pub fn complement(&self, h: SubgroupId) -> Option<SupplementWitness> {
        self.supplement_within(h, self.lattice.trivial(), Property::Complemented, |_| true)
    }

    pub fn is_complemented(&self, h: SubgroupId) -> bool {
        self.complement(h).is_some()
    }

    /// Has a supersolvable supplement or is weakly s-supplemented.
    pub fn ss_supplemented_or_wss(&self, h: SubgroupId) -> bool {
        self.supersolvable_supplement(h).is_some() || self.weakly_s_supplemented(h).is_some()
    }

    /// Has a supersolvable supplement or is weakly s-permutable.
    pub fn ss_supplemented_or_wsp(&self, h: SubgroupId) -> bool {
        self.supersolvable_supplement(h).is_some() || self.weakly_s_permutable(h).is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::*;
    use crate::perm::Perm;

    fn sub(a: &GroupAnalysis, gens: &[Perm]) -> SubgroupId {
        a.id(&a.group().subgroup_from_perms(gens).unwrap()).unwrap()
    }

    fn perm(degree: usize, cycles: &[&[usize]]) -> Perm {
        Perm::from_cycles(degree, cycles).unwrap()
    }

    #[test]
    fn s3_transposition() {
        let a = GroupAnalysis::new(symmetric(3)).unwrap();
        let h = sub(&a, &[perm(3, &[&[1, 2]])]);
        assert!(!a.is_s_permutable(h));
        assert_eq!(a.h_sg(h), a.lattice().trivial());
        let sup: Vec<usize> = a.supplements(h).iter().map(|&t| a.subgroup(t).order()).collect();
        assert_eq!(sup, vec![3, 6]);
        let (ok, w) = a.is_weakly_s_supplemented(h);
        assert!(ok);
        let w = w.unwrap();
        assert_eq!(a.subgroup(w.supplement).order(), 3);
        assert_eq!(w.intersection, a.lattice().trivial());
        // A3 is normal, hence a subnormal supplement meeting H trivially.
        let (ok, w) = a.is_weakly_s_permutable(h);
        assert!(ok);
        assert_eq!(a.subgroup(w.unwrap().supplement).order(), 3);
        assert!(a.is_c_normal(h));
        assert!(a.is_complemented(h));
    }

    #[test]
    fn s4_examples() {
        let a = GroupAnalysis::new(symmetric(4)).unwrap();
        let v4 = sub(&a, &[perm(4, &[&[1, 2], &[3, 4]]), perm(4, &[&[1, 3], &[2, 4]])]);
        assert!(a.is_s_permutable(v4));
        let (ok, t) = a.has_supersolvable_supplement(v4);
        assert!(ok);
        assert_eq!(a.subgroup(t.unwrap().supplement).order(), 6);

        let d8 = sub(&a, &[perm(4, &[&[1, 2, 3, 4]]), perm(4, &[&[1, 3]])]);
        assert_eq!(a.h_sg(d8), v4);

        let k = sub(&a, &[perm(4, &[&[1, 2]]), perm(4, &[&[3, 4]])]);
        assert_eq!(a.h_sg(k), a.lattice().trivial());
        assert!(!a.is_weakly_s_supplemented(k).0);
    }

    #[test]
    fn a4_involution_has_no_supersolvable_supplement() {
        let a = GroupAnalysis::new(alternating(4)).unwrap();
        let h = sub(&a, &[perm(4, &[&[1, 2], &[3, 4]])]);
        assert_eq!(a.supplements(h), vec![a.lattice().whole()]);
        assert_eq!(a.has_supersolvable_supplement(h), (false, None));
    }

    #[test]
    fn degenerate_inputs() {
        let a = GroupAnalysis::new(dihedral(12)).unwrap();
        let one = a.lattice().trivial();
        let all = a.lattice().whole();
        for h in [one, all] {
            assert!(a.is_s_permutable(h));
            assert_eq!(a.h_sg(h), h);
            assert!(a.is_weakly_s_supplemented(h).0);
            assert!(a.is_weakly_s_permutable(h).0);
            assert!(a.is_c_normal(h));
            assert!(a.is_complemented(h));
        }
        assert_eq!(a.supplements(all).len(), a.lattice().len());
        assert_eq!(a.supplements(one), vec![all]);
    }

    #[test]
    fn q8_cyclic_is_normal() {
        let a = GroupAnalysis::new(dicyclic(8)).unwrap();
        for h in a.lattice().ids() {
            assert!(a.is_c_normal(h));
            assert!(a.is_s_permutable(h));
        }
    }

    #[test]
    fn foreign_subgroup_rejected() {
        let a = GroupAnalysis::new(symmetric(3)).unwrap();
        let other = symmetric(3);
        assert_eq!(a.id(&other.whole()), Err(Error::ParentMismatch));
    }
}
