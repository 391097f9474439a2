mod common;

use common::*;
use proptest::prelude::*;
use subembed::corpus::{load_group, GroupSpecFile};
use subembed::perm::parse_cycles;
use subembed::structure::ChiefChoice;
use subembed::{Group, GroupAnalysis, Perm, SubgroupLattice};

fn perm(degree: usize) -> impl Strategy<Value = Perm> {
    Just((0..degree as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).unwrap())
}

fn group(degree: usize) -> impl Strategy<Value = Group> {
    prop::collection::vec(perm(degree), 1..=3).prop_map(move |gens| Group::generate(degree, gens).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn composition_is_associative(a in perm(7), b in perm(7), c in perm(7)) {
        let l = a.compose(&b).unwrap().compose(&c).unwrap();
        let r = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(l, r);
        prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
    }

    #[test]
    fn cycle_notation_round_trips(a in perm(8)) {
        prop_assert_eq!(parse_cycles(&a.to_string(), 8).unwrap(), a.clone());
        let lcm = a.cycles().iter().fold(1, |m, c| subembed::arith::lcm(m, c.len()));
        prop_assert_eq!(a.order(), lcm);
    }

    #[test]
    fn lagrange_and_closure(g in group(5)) {
        let l = SubgroupLattice::enumerate(&g).unwrap();
        for h in l.subgroups() {
            prop_assert_eq!(g.order() % h.order(), 0);
        }
        if g.order() <= 48 {
            prop_assert_eq!(lattice_masks(&l), brute_force_subgroups(&g));
        }
    }

    #[test]
    fn chief_series_do_not_depend_on_choice(g in group(6), seed in any::<u64>()) {
        prop_assume!(g.order() <= 400);
        prop_assert_eq!(
            chief_factor_multiset(&g, ChiefChoice::Seeded(seed)),
            chief_factor_multiset(&g, ChiefChoice::Lowest)
        );
    }

    #[test]
    fn random_groups_respect_the_hierarchy(g in group(5)) {
        let a = GroupAnalysis::new(g).unwrap();
        let bad = hierarchy_violations("random", &a);
        prop_assert!(bad.is_empty(), "{:?}", bad);
        let z = subembed::structure::u_hypercenter(a.group());
        prop_assert_eq!(z.members(), &u_hypercenter_oracle(a.lattice()));
    }

    #[test]
    fn group_files_round_trip(g in group(6)) {
        let text = GroupSpecFile::from_group("random", &g).serialize();
        let back = load_group(&GroupSpecFile::parse(&text).unwrap()).unwrap();
        prop_assert!(back.same_elements(&g));
    }
}
