#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use subembed::arith::is_prime;
use subembed::corpus::builtin_corpus;
use subembed::structure::{chief_series_with, ChiefChoice};
use subembed::{BitSet, Group, GroupAnalysis, SubgroupId, SubgroupLattice};

pub fn corpus_upto(max: usize) -> Vec<(String, Group)> {
    builtin_corpus().into_iter().filter(|(_, g)| g.order() <= max).collect()
}

fn mask_closure(g: &Group, seed: u64) -> u64 {
    let mut m = seed | 1 << g.identity();
    loop {
        let mut next = m;
        let elems: Vec<usize> = (0..g.order()).filter(|&i| m >> i & 1 == 1).collect();
        for &a in &elems {
            for &b in &elems {
                next |= 1 << g.mul(a, b);
            }
        }
        if next == m {
            return m;
        }
        m = next;
    }
}

/// Every subgroup as a member mask: start from the cyclic subgroups and close
/// under pairwise joins. Groups of order at most 64 only.
pub fn brute_force_subgroups(g: &Group) -> BTreeSet<u64> {
    assert!(g.order() <= 64);
    let mut found: BTreeSet<u64> = (0..g.order()).map(|x| mask_closure(g, 1 << x)).collect();
    let mut frontier: Vec<u64> = found.iter().copied().collect();
    while !frontier.is_empty() {
        let snapshot: Vec<u64> = found.iter().copied().collect();
        let mut fresh = Vec::new();
        for &a in &frontier {
            for &b in &snapshot {
                if a & b == b || a & b == a {
                    continue;
                }
                let j = mask_closure(g, a | b);
                if found.insert(j) {
                    fresh.push(j);
                }
            }
        }
        frontier = fresh;
    }
    found
}

pub fn lattice_masks(l: &SubgroupLattice) -> BTreeSet<u64> {
    l.subgroups()
        .iter()
        .map(|h| h.elements().fold(0u64, |m, x| m | 1 << x))
        .collect()
}

pub fn chief_factor_multiset(g: &Group, choice: ChiefChoice) -> Vec<usize> {
    let mut v: Vec<usize> = chief_series_with(g, choice).factors.iter().map(|f| f.order).collect();
    v.sort_unstable();
    v
}

/// Largest normal subgroup all of whose chief factors have prime order,
/// found by refining a chain of normal subgroups below each candidate.
pub fn u_hypercenter_oracle(l: &SubgroupLattice) -> BitSet {
    let normals = l.normal_subgroups();
    let order = |id: SubgroupId| l.get(id).order();
    let good = |n: SubgroupId| {
        let mut cur = l.trivial();
        while cur != n {
            let above: Vec<SubgroupId> = normals
                .iter()
                .copied()
                .filter(|&m| m != cur && l.includes(cur, m) && l.includes(m, n))
                .collect();
            let next = above
                .iter()
                .copied()
                .find(|&m| !above.iter().any(|&k| k != m && l.includes(k, m)))
                .expect("some minimal step");
            if !is_prime(order(next) / order(cur)) {
                return false;
            }
            cur = next;
        }
        true
    };
    let ok: Vec<SubgroupId> = normals.iter().copied().filter(|&n| good(n)).collect();
    let top = *ok.iter().max_by_key(|&&n| order(n)).unwrap();
    assert!(ok.iter().all(|&n| l.includes(n, top)), "no unique largest candidate");
    l.get(top).members().clone()
}

/// Implication failures among the embedding properties of one group.
pub fn hierarchy_violations(name: &str, a: &GroupAnalysis) -> Vec<String> {
    let l = a.lattice();
    let g = a.group();
    let mut out = Vec::new();
    for h in l.ids() {
        let hs = l.get(h);
        let normal = l.is_normal(h);
        let sperm = a.is_s_permutable(h);
        // HP is a subgroup exactly when |<H, P>| = |H||P|/|H ∩ P|.
        let direct_sperm = a.sylow_subgroups().iter().all(|&p| {
            let ps = l.get(p);
            let meet = hs.members().intersection_count(ps.members());
            g.join(hs, ps).unwrap().order() * meet == hs.order() * ps.order()
        });
        let (wsp, wsp_w) = a.is_weakly_s_permutable(h);
        let (wss, wss_w) = a.is_weakly_s_supplemented(h);
        let cn = a.is_c_normal(h);
        let comp = a.is_complemented(h);
        let mut fail = |what: &str| out.push(format!("{name}: {} {what}", hs.describe(g)));
        if sperm != direct_sperm {
            fail("s-permutability disagrees with the definition");
        }
        if normal && !sperm {
            fail("normal but not s-permutable");
        }
        if sperm && !wsp {
            fail("s-permutable but not weakly s-permutable");
        }
        if wsp && !wss {
            fail("weakly s-permutable but not weakly s-supplemented");
        }
        if cn && !wss {
            fail("c-normal but not weakly s-supplemented");
        }
        if comp && !wss {
            fail("complemented but not weakly s-supplemented");
        }
        let hsg = a.h_sg(h);
        for (w, subnormal) in [(wss_w, false), (wsp_w, true)] {
            let Some(w) = w else { continue };
            let t = l.get(w.supplement);
            let meet = hs.members().intersection(t.members());
            if g.product_size(hs, t) != g.order() {
                fail("witness is not a supplement");
            }
            if !meet.is_subset(l.get(hsg).members()) {
                fail("witness meets H outside H_sG");
            }
            if subnormal && !g.is_subnormal(t) {
                fail("witness supplement is not subnormal");
            }
        }
    }
    out
}

/// Index to count of subgroups whose index is a prime power greater than 1.
pub fn prime_power_indices(l: &SubgroupLattice) -> BTreeMap<usize, Vec<SubgroupId>> {
    let n = l.get(l.whole()).order();
    let mut out: BTreeMap<usize, Vec<SubgroupId>> = BTreeMap::new();
    for h in l.ids() {
        let idx = n / l.get(h).order();
        if idx > 1 && subembed::arith::is_prime_power(idx) {
            out.entry(idx).or_default().push(h);
        }
    }
    out
}
