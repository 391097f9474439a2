mod common;

use common::*;
use subembed::GroupAnalysis;

#[test]
fn embedding_properties_nest_up_to_100() {
    let mut bad = Vec::new();
    let mut subgroups = 0;
    for (name, g) in corpus_upto(100) {
        let a = GroupAnalysis::new(g).unwrap();
        subgroups += a.lattice().len();
        bad.extend(hierarchy_violations(&name, &a));
    }
    assert!(subgroups > 1000);
    assert!(bad.is_empty(), "{bad:#?}");
}

#[test]
fn h_sg_is_the_join_of_s_permutable_subgroups() {
    for (name, g) in corpus_upto(48) {
        let a = GroupAnalysis::new(g).unwrap();
        let l = a.lattice();
        for h in l.ids() {
            let mut join = l.get(l.trivial()).clone();
            for k in l.ids() {
                if l.includes(k, h) && a.is_s_permutable(k) {
                    join = a.group().join(&join, l.get(k)).unwrap();
                }
            }
            assert_eq!(l.get(a.h_sg(h)).members(), join.members(), "{name}");
        }
    }
}
