mod common;

use common::*;
use subembed::arith::{is_prime, prime_divisors};
use subembed::structure::{
    has_sylow_tower, is_nilpotent, is_supersolvable, sylow_is_normal, u_hypercenter, ChiefChoice,
};
use subembed::SubgroupLattice;

#[test]
fn lattice_matches_join_closure_up_to_48() {
    let corpus = corpus_upto(48);
    assert!(corpus.len() > 40);
    for (name, g) in &corpus {
        let l = SubgroupLattice::enumerate(g).unwrap();
        assert_eq!(lattice_masks(&l), brute_force_subgroups(g), "{name}");
        assert_eq!(l.len(), lattice_masks(&l).len(), "{name}: duplicate subgroups");
    }
}

#[test]
fn seeded_chief_series_agree_up_to_200() {
    for (name, g) in corpus_upto(200) {
        let base = chief_factor_multiset(&g, ChiefChoice::Lowest);
        assert_eq!(base.iter().product::<usize>(), g.order(), "{name}");
        for choice in [ChiefChoice::Highest, ChiefChoice::Seeded(7), ChiefChoice::Seeded(0xdead_beef)] {
            assert_eq!(chief_factor_multiset(&g, choice), base, "{name} {choice:?}");
        }
    }
}

#[test]
fn u_hypercenter_matches_refinement_up_to_100() {
    for (name, g) in corpus_upto(100) {
        let l = SubgroupLattice::enumerate(&g).unwrap();
        assert_eq!(u_hypercenter(&g).members(), &u_hypercenter_oracle(&l), "{name}");
    }
}

#[test]
fn supersolvable_iff_maximal_subgroups_of_prime_index() {
    for (name, g) in corpus_upto(200) {
        let l = SubgroupLattice::enumerate(&g).unwrap();
        let oracle = l
            .maximal_subgroups()
            .iter()
            .all(|&m| is_prime(g.order() / l.get(m).order()));
        assert_eq!(is_supersolvable(&g), oracle, "{name}");
        if oracle {
            assert!(has_sylow_tower(&g), "{name}");
        }
    }
}

#[test]
fn sylow_counts_and_nilpotence() {
    for (name, g) in corpus_upto(200) {
        let l = SubgroupLattice::enumerate(&g).unwrap();
        let mut all_normal = true;
        for p in prime_divisors(g.order()) {
            let s = l.sylow(p);
            let order = l.get(s.representative).order();
            let same_order = l.ids().filter(|&h| l.get(h).order() == order).count();
            let n = s.conjugates.len();
            assert_eq!(n, same_order, "{name} p={p}");
            assert_eq!(n % p, 1 % p, "{name} p={p}");
            assert_eq!((g.order() / order) % n, 0, "{name} p={p}");
            assert_eq!(sylow_is_normal(&g, p), n == 1, "{name} p={p}");
            all_normal &= n == 1;
        }
        assert_eq!(is_nilpotent(&g), all_normal, "{name}");
    }
}
