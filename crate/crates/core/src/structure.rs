//! Structural predicates and characteristic series: solvability and its
//! refinements, chief series, `O_p`/`O_p'`, upper `p`-series, hypercenters,
//! `p`-group operators and invariant fingerprints.
//!
//! Everything here works from the element table alone; no lattice needed.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith::{factorize, gcd, is_p_power, is_prime, p_log, p_part, prime_divisors};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::subgroup::Subgroup;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChiefFactor {
    pub order: usize,
    pub is_prime_order: bool,
    pub is_abelian: bool,
    /// Set when the factor is a `p`-group.
    pub prime: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct ChiefSeries {
    /// `1 = N_0 < N_1 < ... < N_k = G`.
    pub chain: Vec<Subgroup>,
    pub factors: Vec<ChiefFactor>,
}

/// Which minimal normal subgroup to take at each step of a chief series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChiefChoice {
    /// Lowest in lattice order (order, then member list).
    Lowest,
    Highest,
    /// Uniformly random among the candidates, from a seeded generator.
    Seeded(u64),
}

#[derive(Clone, Debug)]
pub struct PLengthResult {
    pub p: usize,
    pub is_p_solvable: bool,
    /// `None` when the group is not `p`-solvable.
    pub p_length: Option<usize>,
    /// `1 = N_0 <= N_1 = O_p'(G) <= N_2 <= ...`, as far as it climbs.
    pub upper_p_series: Vec<Subgroup>,
}

pub fn derived_subgroup(g: &Group) -> Subgroup {
    derived_subgroup_of(g, &g.whole())
}

/// `[H, H]` for a subgroup `H`.
pub fn derived_subgroup_of(g: &Group, h: &Subgroup) -> Subgroup {
    let gens = h.generators();
    let comms: Vec<usize> = gens
        .iter()
        .flat_map(|&a| gens.iter().map(move |&b| (a, b)))
        .map(|(a, b)| g.commutator(a, b))
        .collect();
    let seed = g.subgroup_generated(&comms);
    g.normal_closure_in(&seed, h)
}

pub fn center(g: &Group) -> Subgroup {
    g.centralizer(&g.whole())
}

/// `G = G^(0) > G' > G'' > ...` until it stabilizes.
pub fn derived_series(g: &Group) -> Vec<Subgroup> {
    let mut series = vec![g.whole()];
    loop {
        let last = series.last().unwrap();
        let next = derived_subgroup_of(g, last);
        if next.order() == last.order() {
            return series;
        }
        series.push(next);
    }
}

pub fn is_abelian(g: &Group) -> bool {
    g.is_abelian()
}

pub fn is_solvable(g: &Group) -> bool {
    derived_series(g).last().unwrap().is_trivial()
}

/// Every Sylow subgroup is normal.
pub fn is_nilpotent(g: &Group) -> bool {
    g.primes()
        .into_iter()
        .all(|p| g.p_elements(p).count() == p_part(g.order(), p))
}

pub fn sylow_is_normal(g: &Group, p: usize) -> bool {
    g.p_elements(p).count() == p_part(g.order(), p)
}

/// Largest normal subgroup `M >= N` with `|M/N|` satisfying `accept`.
///
/// `N` must be normal. Any such `M` is the join of the normal closures
/// `<N, x>^G` it contains, so scanning class representatives suffices.
pub fn relative_radical(g: &Group, n: &Subgroup, accept: impl Fn(usize) -> bool) -> Subgroup {
    let mut acc = n.clone();
    for class in g.conjugacy_classes() {
        let x = class[0];
        if acc.contains(x) {
            continue;
        }
        let c = g.normal_closure_in(&g.join_element(n, x), &g.whole());
        if accept(c.order() / n.order()) {
            acc = g.normal_closure(&g.join_unchecked(&acc, &c));
        }
    }
    acc
}

fn is_pi_number(m: usize, pi: &[usize]) -> bool {
    factorize(m).iter().all(|(q, _)| pi.contains(q))
}

/// `O_p(G)`.
pub fn o_lower_p(g: &Group, p: usize) -> Subgroup {
    relative_radical(g, &g.trivial_subgroup(), |m| is_p_power(m, p))
}

/// `O_p'(G)`.
pub fn o_lower_p_prime(g: &Group, p: usize) -> Subgroup {
    relative_radical(g, &g.trivial_subgroup(), |m| gcd(m, p) == 1)
}

/// `O_π(G)` for a set of primes.
pub fn o_lower_pi(g: &Group, pi: &[usize]) -> Subgroup {
    relative_radical(g, &g.trivial_subgroup(), |m| is_pi_number(m, pi))
}

/// Smallest `k >= 1` with `x^k ∈ N`.
fn order_mod(g: &Group, x: usize, n: &Subgroup) -> usize {
    let mut y = x;
    let mut k = 1;
    while !n.contains(y) {
        y = g.mul(y, x);
        k += 1;
    }
    k
}

/// Minimal normal subgroups of `G` strictly above the normal subgroup `N`
/// (that is, the preimages of the minimal normal subgroups of `G/N`).
pub fn minimal_normal_over(g: &Group, n: &Subgroup) -> Vec<Subgroup> {
    minimal_normal_between(g, n, &g.whole())
}

/// As [`minimal_normal_over`], restricted to subgroups of the normal
/// subgroup `upper`.
pub fn minimal_normal_between(g: &Group, n: &Subgroup, upper: &Subgroup) -> Vec<Subgroup> {
    let mut cands: Vec<Subgroup> = Vec::new();
    for class in g.conjugacy_classes() {
        let x = class[0];
        if n.contains(x) || !upper.contains(x) || !is_prime(order_mod(g, x, n)) {
            continue;
        }
        let c = g.normal_closure_over(n, x);
        if !cands.iter().any(|d| d.members() == c.members()) {
            cands.push(c);
        }
    }
    let mut minimal: Vec<Subgroup> = cands
        .iter()
        .filter(|c| {
            !cands
                .iter()
                .any(|d| d.order() < c.order() && d.is_subgroup_of(c))
        })
        .cloned()
        .collect();
    minimal.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members().cmp(b.members())));
    minimal
}

/// Orders of the `G`-chief factors below the normal subgroup `N`, from a
/// chief series of `G` through `N`.
pub fn chief_factor_orders_below(g: &Group, n: &Subgroup) -> Vec<usize> {
    let mut cur = g.trivial_subgroup();
    let mut out = Vec::new();
    while cur.order() < n.order() {
        let next = minimal_normal_between(g, &cur, n).swap_remove(0);
        out.push(next.order() / cur.order());
        cur = next;
    }
    out
}

/// Minimal normal subgroups of `G`.
pub fn minimal_normal_subgroups(g: &Group) -> Vec<Subgroup> {
    minimal_normal_over(g, &g.trivial_subgroup())
}

fn chief_factor(g: &Group, lower: &Subgroup, upper: &Subgroup) -> ChiefFactor {
    let order = upper.order() / lower.order();
    let gens = upper.generators();
    let is_abelian = gens
        .iter()
        .all(|&a| gens.iter().all(|&b| lower.contains(g.commutator(a, b))));
    let f = factorize(order);
    ChiefFactor {
        order,
        is_prime_order: is_prime(order),
        is_abelian,
        prime: (f.len() == 1).then(|| f[0].0),
    }
}

pub fn chief_series(g: &Group) -> ChiefSeries {
    chief_series_with(g, ChiefChoice::Lowest)
}

pub fn chief_series_with(g: &Group, choice: ChiefChoice) -> ChiefSeries {
    chief_series_from(g, vec![g.trivial_subgroup()], choice)
}

pub(crate) fn chief_series_from(g: &Group, start: Vec<Subgroup>, choice: ChiefChoice) -> ChiefSeries {
    let mut chain = start;
    let mut rng = match choice {
        ChiefChoice::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    while chain.last().unwrap().order() < g.order() {
        let cur = chain.last().unwrap();
        let mins = minimal_normal_over(g, cur);
        let next = match choice {
            ChiefChoice::Lowest => mins.first(),
            ChiefChoice::Highest => mins.last(),
            ChiefChoice::Seeded(_) => {
                let i = rng.as_mut().unwrap().gen_range(0..mins.len().max(1));
                mins.get(i)
            }
        }
        .expect("a proper normal subgroup has a minimal normal subgroup above it")
        .clone();
        chain.push(next);
    }
    let factors = chain
        .windows(2)
        .map(|w| chief_factor(g, &w[0], &w[1]))
        .collect();
    ChiefSeries { chain, factors }
}

/// All Sylow subgroups cyclic, which for squarefree orders is automatic.
fn has_squarefree_order(g: &Group) -> bool {
    g.prime_factorization().iter().all(|&(_, e)| e == 1)
}

/// Some chief series has only factors of prime order.
pub fn is_supersolvable(g: &Group) -> bool {
    if g.order() == 1 || has_squarefree_order(g) || is_nilpotent(g) {
        return true;
    }
    let mut cur = g.trivial_subgroup();
    while cur.order() < g.order() {
        let mins = minimal_normal_over(g, &cur);
        let first = &mins[0];
        if !is_prime(first.order() / cur.order()) {
            return false;
        }
        cur = first.clone();
    }
    true
}

/// Normal `p`-complement exists.
pub fn is_p_nilpotent(g: &Group, p: usize) -> bool {
    if g.order() % p != 0 {
        return true;
    }
    o_lower_p_prime(g, p).order() == g.order() / p_part(g.order(), p)
}

/// Every chief factor is a `p`-group or a `p'`-group.
pub fn is_p_solvable(g: &Group, p: usize) -> bool {
    chief_series(g)
        .factors
        .iter()
        .all(|f| f.prime == Some(p) || gcd(f.order, p) == 1)
}

/// Upper `p`-series `1 <= O_p' <= O_p',p <= ...` and the number of `p`-layers.
pub fn p_length(g: &Group, p: usize) -> PLengthResult {
    let mut series = vec![g.trivial_subgroup()];
    let mut layers = 0;
    let mut want_p_prime = true;
    loop {
        let cur = series.last().unwrap().clone();
        if cur.order() == g.order() {
            return PLengthResult {
                p,
                is_p_solvable: true,
                p_length: Some(layers),
                upper_p_series: series,
            };
        }
        let next = if want_p_prime {
            relative_radical(g, &cur, |m| gcd(m, p) == 1)
        } else {
            relative_radical(g, &cur, |m| is_p_power(m, p))
        };
        if !want_p_prime && next.order() > cur.order() {
            layers += 1;
        }
        if !want_p_prime && next.order() == cur.order() {
            return PLengthResult {
                p,
                is_p_solvable: false,
                p_length: None,
                upper_p_series: series,
            };
        }
        if want_p_prime || next.order() > cur.order() {
            series.push(next);
        }
        want_p_prime = !want_p_prime;
    }
}

/// Fixed point of pulling back the product of prime-order minimal normal
/// subgroups of `G/Z`.
pub fn u_hypercenter(g: &Group) -> Subgroup {
    let mut z = g.trivial_subgroup();
    loop {
        let mut acc = z.clone();
        for x in 0..g.order() {
            if acc.contains(x) {
                continue;
            }
            let q = order_mod(g, x, &z);
            if !is_prime(q) {
                continue;
            }
            let m = g.join_element(&z, x);
            if m.order() == q * z.order() && g.is_normal(&m) {
                acc = g.join_unchecked(&acc, &m);
            }
        }
        if acc.order() == z.order() {
            return z;
        }
        z = acc;
    }
}

/// Upper central series limit `Z_∞(G)`.
pub fn hypercenter(g: &Group) -> Subgroup {
    let mut z = g.trivial_subgroup();
    loop {
        let members = BitSet::from_indices(
            g.order(),
            (0..g.order()).filter(|&x| {
                g.generator_indices()
                    .iter()
                    .all(|&a| z.contains(g.commutator(x, a)))
            }),
        );
        let next = g.subgroup_from_members(members);
        if next.order() == z.order() {
            return z;
        }
        z = next;
    }
}

fn prime_of_p_subgroup(h: &Subgroup) -> Result<Option<usize>> {
    let f = factorize(h.order());
    match f.len() {
        0 => Ok(None),
        1 => Ok(Some(f[0].0)),
        _ => Err(Error::NotPGroup),
    }
}

/// Largest element order of a `p`-subgroup.
pub fn exponent(g: &Group, p_sub: &Subgroup) -> Result<usize> {
    prime_of_p_subgroup(p_sub)?;
    Ok(p_sub.elements().map(|x| g.element_order(x)).max().unwrap_or(1))
}

/// `Ω_1(P) = <x : x^p = 1>`.
pub fn omega1(g: &Group, p_sub: &Subgroup) -> Result<Subgroup> {
    let Some(p) = prime_of_p_subgroup(p_sub)? else {
        return Ok(p_sub.clone());
    };
    let gens: Vec<usize> = p_sub.elements().filter(|&x| g.element_order(x) <= p).collect();
    Ok(g.subgroup_generated(&gens))
}

/// `℧_1(P) = <x^p : x ∈ P>`.
pub fn agemo1(g: &Group, p_sub: &Subgroup) -> Result<Subgroup> {
    let Some(p) = prime_of_p_subgroup(p_sub)? else {
        return Ok(p_sub.clone());
    };
    let gens: Vec<usize> = p_sub.elements().map(|x| g.pow(x, p)).collect();
    Ok(g.subgroup_generated(&gens))
}

/// `Φ(P) = P' ℧_1(P)` for a `p`-subgroup `P`.
pub fn phi_p_group(g: &Group, p_sub: &Subgroup) -> Result<Subgroup> {
    let mho = agemo1(g, p_sub)?;
    Ok(g.join_unchecked(&derived_subgroup_of(g, p_sub), &mho))
}

/// `ι(m)`: the exponent `a` with `m = p^a`.
pub fn iota(m: usize, p: usize) -> Result<u32> {
    p_log(m, p).ok_or(Error::NotPrimePower { value: m, p })
}

/// `ι(P)` for a `p`-subgroup; 0 for the trivial subgroup.
pub fn iota_group(p_sub: &Subgroup) -> Result<u32> {
    match prime_of_p_subgroup(p_sub)? {
        None => Ok(0),
        Some(p) => iota(p_sub.order(), p),
    }
}

/// Sylow tower of supersolvable type: with primes `p_1 > p_2 > ...`, each
/// `{p_1..p_k}` has a normal Hall subgroup. A normal Hall `π`-subgroup is
/// exactly the set of `π`-elements, so counting them decides it.
pub fn has_sylow_tower(g: &Group) -> bool {
    let mut primes = prime_divisors(g.order());
    primes.reverse();
    let orders: Vec<Vec<usize>> = (0..g.order())
        .map(|x| prime_divisors(g.element_order(x)))
        .collect();
    let mut pi: Vec<usize> = Vec::new();
    let mut hall = 1;
    for p in primes {
        pi.push(p);
        hall *= p_part(g.order(), p);
        let count = orders
            .iter()
            .filter(|ps| ps.iter().all(|q| pi.contains(q)))
            .count();
        if count != hall {
            return false;
        }
    }
    true
}

/// Invariant record standing in for isomorphism tests.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    pub abelian_invariants: Option<Vec<usize>>,
    pub order_statistics: BTreeMap<usize, usize>,
    pub derived_series_orders: Vec<usize>,
    pub center_order: usize,
    pub sylow_normal: Vec<(usize, bool)>,
    pub nilpotent: bool,
    pub solvable: bool,
    pub supersolvable: bool,
}

/// Invariant factors of an abelian group as prime powers, sorted.
pub fn abelian_invariants(g: &Group) -> Vec<usize> {
    let mut out = Vec::new();
    for &(p, e) in g.prime_factorization() {
        // s_k = log_p #{x : x^(p^k) = 1} = sum_i min(k, e_i)
        let mut s = vec![0u32];
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            let count = (0..g.order()).filter(|&x| pk % g.element_order(x) == 0).count();
            s.push(p_log(count, p).expect("abelian p-part"));
        }
        // number of cyclic factors of order >= p^k is s_k - s_{k-1}
        let ge: Vec<u32> = s.windows(2).map(|w| w[1] - w[0]).collect();
        for k in 0..ge.len() {
            let next = ge.get(k + 1).copied().unwrap_or(0);
            for _ in 0..(ge[k] - next) {
                out.push(p.pow(k as u32 + 1));
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn fingerprint(g: &Group) -> Fingerprint {
    let abelian = g.is_abelian();
    let solvable = is_solvable(g);
    Fingerprint {
        order: g.order(),
        abelian_invariants: abelian.then(|| abelian_invariants(g)),
        order_statistics: g.order_statistics(),
        derived_series_orders: derived_series(g).iter().map(|s| s.order()).collect(),
        center_order: center(g).order(),
        sylow_normal: g.primes().into_iter().map(|p| (p, sylow_is_normal(g, p))).collect(),
        nilpotent: is_nilpotent(g),
        solvable,
        supersolvable: solvable && is_supersolvable(g),
    }
}

fn stats(pairs: &[(usize, usize)]) -> BTreeMap<usize, usize> {
    pairs.iter().copied().collect()
}

/// Names a group of order at most 24 from its fingerprint.
///
/// Abelian groups are named by invariants. Nonabelian groups are matched by
/// element-order histogram, which separates them except for the pairs
/// `C2 x Q8 / C4 ⋊ C4` and `C4 ∘ D8 / C2^2 ⋊ C4` of order 16 and a few
/// order-24 groups; those, and everything above order 24, are `None`.
pub fn recognize(fp: &Fingerprint) -> Option<String> {
    if fp.order > 24 {
        return None;
    }
    if let Some(inv) = &fp.abelian_invariants {
        if inv.is_empty() {
            return Some("1".into());
        }
        let cyclic_order: usize = inv.iter().product();
        let distinct_primes = factorize(cyclic_order).len();
        if inv.len() == distinct_primes {
            return Some(format!("C{cyclic_order}"));
        }
        let parts: Vec<String> = inv.iter().map(|q| format!("C{q}")).collect();
        return Some(parts.join(" x "));
    }
    let s = &fp.order_statistics;
    let table: &[(&str, &[(usize, usize)])] = &[
        ("S3", &[(1, 1), (2, 3), (3, 2)]),
        ("D8", &[(1, 1), (2, 5), (4, 2)]),
        ("Q8", &[(1, 1), (2, 1), (4, 6)]),
        ("D10", &[(1, 1), (2, 5), (5, 4)]),
        ("A4", &[(1, 1), (2, 3), (3, 8)]),
        ("D12", &[(1, 1), (2, 7), (3, 2), (6, 2)]),
        ("C3 ⋊ C4", &[(1, 1), (2, 1), (3, 2), (4, 6), (6, 2)]),
        ("D14", &[(1, 1), (2, 7), (7, 6)]),
        ("D16", &[(1, 1), (2, 9), (4, 2), (8, 4)]),
        ("SD16", &[(1, 1), (2, 5), (4, 6), (8, 4)]),
        ("Q16", &[(1, 1), (2, 1), (4, 10), (8, 4)]),
        ("M16", &[(1, 1), (2, 3), (4, 4), (8, 8)]),
        ("C2 x D8", &[(1, 1), (2, 11), (4, 4)]),
        ("D18", &[(1, 1), (2, 9), (3, 2), (9, 6)]),
        ("C3 x S3", &[(1, 1), (2, 3), (3, 8), (6, 6)]),
        ("C3^2 ⋊ C2", &[(1, 1), (2, 9), (3, 8)]),
        ("D20", &[(1, 1), (2, 11), (5, 4), (10, 4)]),
        ("Dic20", &[(1, 1), (2, 1), (4, 10), (5, 4), (10, 4)]),
        ("F20", &[(1, 1), (2, 5), (4, 10), (5, 4)]),
        ("C7 ⋊ C3", &[(1, 1), (3, 14), (7, 6)]),
        ("D22", &[(1, 1), (2, 11), (11, 10)]),
        ("S4", &[(1, 1), (2, 9), (3, 8), (4, 6)]),
        ("SL(2,3)", &[(1, 1), (2, 1), (3, 8), (4, 6), (6, 8)]),
        ("C2 x A4", &[(1, 1), (2, 7), (3, 8), (6, 8)]),
        ("D24", &[(1, 1), (2, 13), (3, 2), (4, 2), (6, 2), (12, 4)]),
        ("Dic24", &[(1, 1), (2, 1), (3, 2), (4, 14), (6, 2), (12, 4)]),
        ("C3 ⋊ C8", &[(1, 1), (2, 1), (3, 2), (4, 2), (6, 2), (8, 12), (12, 4)]),
        ("D8 x C3", &[(1, 1), (2, 5), (3, 2), (4, 2), (6, 10), (12, 4)]),
        ("Q8 x C3", &[(1, 1), (2, 1), (3, 2), (4, 6), (6, 2), (12, 12)]),
        ("C2 x D12", &[(1, 1), (2, 15), (3, 2), (6, 6)]),
    ];
    table
        .iter()
        .find(|(_, st)| stats(st) == *s && st.iter().map(|x| x.1).sum::<usize>() == fp.order)
        .map(|(name, _)| name.to_string())
}
