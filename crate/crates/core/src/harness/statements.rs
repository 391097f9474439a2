//! Checkers for the lemmas and corollaries, one instance at a time.

use crate::arith::{gcd, is_prime, is_prime_power, p_log, p_part, prime_divisors};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::lattice::SubgroupId;
use crate::permutability::GroupAnalysis;
use crate::structure::{self, fingerprint, recognize};

use super::StatementId::{self, *};
use super::{Verdict, Verifier};

/// Free variables of a statement instance. Which fields a statement needs is
/// listed in [`Verifier::verify`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params {
    pub e: Option<SubgroupId>,
    pub n: Option<SubgroupId>,
    pub h: Option<SubgroupId>,
    pub k: Option<SubgroupId>,
    pub p: Option<usize>,
    pub d_order: Option<usize>,
}

fn need<T: Copy>(v: Option<T>, what: &str) -> Result<T> {
    v.ok_or_else(|| Error::MalformedParams(format!("missing {what}")))
}

/// Verdict for a single instance.
pub fn verify_statement(
    id: StatementId,
    name: &str,
    a: &GroupAnalysis,
    params: &Params,
) -> Result<Verdict> {
    Verifier::new(name, a).verify(id, params)
}

/// Verdicts for every instance of `id` on one group, `E` ranging over at
/// most `budget` normal subgroups.
pub fn verify_group(
    id: StatementId,
    name: &str,
    a: &GroupAnalysis,
    budget: usize,
) -> Result<Vec<Verdict>> {
    let v = Verifier::new(name, a);
    v.instances(id, budget)
        .iter()
        .map(|params| v.verify(id, params))
        .collect()
}

/// Arithmetic check of the remark that extreme `|D|` make (iii)'s gcd
/// clause automatic: for every Sylow order `p^n` in the corpus and every
/// `1 <= k < n`, the hypothesis is `k = 1` or `n - k = 1` and the conclusion
/// is `gcd(n, k) = 1` or `gcd(n, n - k) = 1`.
pub fn corollary_context_suite(corpus: &[(String, Group)]) -> Vec<Verdict> {
    let mut out = Vec::new();
    for (name, g) in corpus {
        for &(p, n) in g.prime_factorization() {
            for k in 1..n {
                let hyp = k == 1 || n - k == 1;
                let holds = gcd(n as usize, k as usize) == 1 || gcd(n as usize, (n - k) as usize) == 1;
                out.push(Verdict {
                    statement: Remark1,
                    group: name.clone(),
                    instance: format!("p={p} iota(P)={n} iota(D)={k}"),
                    hypothesis_satisfied: hyp,
                    conclusion_holds: Some(holds),
                    consistent: !hyp || holds,
                    witnesses: Vec::new(),
                    flagged: false,
                });
            }
        }
    }
    out
}

/// Prime-power indices of subgroups of the simple groups up to order 720,
/// and the isomorphism type of `H` where the case pins it down.
const SIMPLE_INDEX_TABLE: &[(usize, &[usize], Option<(usize, &str)>)] = &[
    // A5 = PSL(2,4) = PSL(2,5): A_{n-1} of index n = 5 = (4^2-1)/3
    (60, &[5], Some((5, "A4"))),
    // PSL(2,7) = PSL(3,2): (7^2-1)/6 = 8 and (2^3-1)/1 = 7
    (168, &[7, 8], None),
    // A6 = PSL(2,9): 6 and 10 are not prime powers
    (360, &[], None),
    // PSL(2,8): (8^2-1)/7 = 9
    (504, &[9], None),
    // PSL(2,11): A5 of index 11
    (660, &[11], None),
];

impl<'a> Verifier<'a> {
    fn group_order(&self) -> usize {
        self.g().order()
    }

    fn class_reps(&self) -> Vec<SubgroupId> {
        self.a
            .lattice()
            .conjugacy_classes()
            .into_iter()
            .map(|c| c[0])
            .collect()
    }

    fn normal_p_subgroups(&self) -> Vec<SubgroupId> {
        self.a
            .lattice()
            .normal_subgroups()
            .into_iter()
            .filter(|&n| {
                let o = self.sub(n).order();
                o > 1 && is_prime_power(o)
            })
            .collect()
    }

    fn proper_nontrivial_normal(&self) -> Vec<SubgroupId> {
        let l = self.a.lattice();
        l.normal_subgroups()
            .into_iter()
            .filter(|&n| n != l.trivial() && n != l.whole())
            .collect()
    }

    fn min_prime(&self) -> Option<usize> {
        self.g().primes().first().copied()
    }

    fn sylow_rep(&self, p: usize) -> SubgroupId {
        self.a.lattice().sylow(p).representative
    }

    fn prime_of(&self, h: SubgroupId) -> usize {
        prime_divisors(self.sub(h).order())[0]
    }

    /// Maximal subgroups of the `p`-subgroup `P`.
    fn maximal_of_p(&self, ps: SubgroupId) -> Vec<SubgroupId> {
        let o = self.sub(ps).order();
        if o == 1 {
            return Vec::new();
        }
        self.subgroups_inside(ps, o / self.prime_of(ps))
    }

    /// Maximal subgroups of one Sylow subgroup per prime.
    fn maximal_of_sylows(&self) -> Vec<SubgroupId> {
        self.g()
            .primes()
            .into_iter()
            .flat_map(|p| self.maximal_of_p(self.sylow_rep(p)))
            .collect()
    }

    /// Subgroups of `K` of prime order, and cyclic of order 4.
    fn minimal_and_cyclic4(&self, k: SubgroupId) -> Vec<SubgroupId> {
        let ks = self.sub(k);
        self.a
            .lattice()
            .ids()
            .filter(|&h| {
                let hs = self.sub(h);
                hs.is_subgroup_of(ks)
                    && (is_prime(hs.order()) || (hs.order() == 4 && self.is_cyclic(h)))
            })
            .collect()
    }

    fn prime_order_inside(&self, k: SubgroupId) -> Vec<SubgroupId> {
        let ks = self.sub(k);
        self.a
            .lattice()
            .ids()
            .filter(|&h| {
                let hs = self.sub(h);
                is_prime(hs.order()) && hs.is_subgroup_of(ks)
            })
            .collect()
    }

    fn is_nilpotent_sub(&self, n: SubgroupId) -> bool {
        let ns = self.sub(n);
        prime_divisors(ns.order()).into_iter().all(|p| {
            let count = ns
                .elements()
                .filter(|&x| crate::arith::is_p_power(self.g().element_order(x), p))
                .count();
            count == p_part(ns.order(), p)
        })
    }

    fn is_solvable_sub(&self, n: SubgroupId) -> bool {
        let mut cur = self.sub(n).clone();
        loop {
            let next = structure::derived_subgroup_of(self.g(), &cur);
            if next.order() == cur.order() {
                return next.is_trivial();
            }
            cur = next;
        }
    }

    fn sub_group(&self, h: SubgroupId) -> Group {
        self.g().subgroup_as_group(self.sub(h)).0
    }

    fn inside_u_hypercenter(&self, h: SubgroupId) -> bool {
        self.sub(h).is_subgroup_of(self.u_hypercenter())
    }

    /// Builds `N` from the minimal normal subgroups of `G` inside it,
    /// keeping each one that meets the product so far trivially.
    fn product_of_minimal_normals(&self, n: SubgroupId) -> bool {
        let ns = self.sub(n);
        let mut acc = self.g().trivial_subgroup();
        for m in self.a.lattice().minimal_normal_subgroups() {
            let ms = self.sub(m);
            if ms.is_subgroup_of(ns) && ms.members().intersection_count(acc.members()) == 1 {
                acc = self.g().join(&acc, ms).expect("same parent");
            }
        }
        acc.order() == ns.order()
    }

    fn meets_frattini_trivially(&self, n: SubgroupId) -> bool {
        self.sub(n).members().intersection_count(self.frattini().members()) == 1
    }

    /// Every `H` of the given orders inside `P` has a supersolvable
    /// supplement or is weakly s-supplemented; first failure otherwise.
    fn clause(&self, ps: SubgroupId, orders: &[usize]) -> Option<SubgroupId> {
        self.first_failure(ps, orders, |h| self.a.ss_supplemented_or_wss(h))
    }

    fn is_nonabelian_2group(&self, ps: SubgroupId) -> bool {
        self.prime_of(ps) == 2 && !self.is_abelian(ps)
    }

    /// Parameter lists for every instance of `id` on this group.
    pub fn instances(&self, id: StatementId, budget: usize) -> Vec<Params> {
        let one = || vec![Params::default()];
        let per_e = || {
            self.normal_pairs(budget)
                .0
                .into_iter()
                .map(|e| Params {
                    e: Some(e),
                    ..Params::default()
                })
                .collect()
        };
        let per_p = || {
            self.g()
                .primes()
                .into_iter()
                .map(|p| Params {
                    p: Some(p),
                    ..Params::default()
                })
                .collect()
        };
        let l = self.a.lattice();
        match id {
            ThmB | Thm12 | Q13 | C4_10 | C4_12 => per_e(),
            L2_6 | L2_7 | L2_9 | C4_3 | C4_4 | C4_5 | C4_6 | C4_7 | C4_8 | C4_9 | C4_11 => one(),
            L2_4 | L2_8 => per_p(),
            Remark1 => Vec::new(),
            L2_1i => {
                let mut out = Vec::new();
                for n in self.proper_nontrivial_normal() {
                    for k in l.ids() {
                        if self.sub(n).is_subgroup_of(self.sub(k)) {
                            out.push(Params {
                                n: Some(n),
                                k: Some(k),
                                ..Params::default()
                            });
                        }
                    }
                }
                out
            }
            L2_1ii => {
                let mut out = Vec::new();
                for h in self.class_reps() {
                    for k in l.ids() {
                        if k != l.whole() && self.sub(h).is_subgroup_of(self.sub(k)) {
                            out.push(Params {
                                h: Some(h),
                                k: Some(k),
                                ..Params::default()
                            });
                        }
                    }
                }
                out
            }
            L2_1iii => {
                let mut out = Vec::new();
                for n in self.proper_nontrivial_normal() {
                    for e in self.class_reps() {
                        if gcd(self.sub(n).order(), self.sub(e).order()) == 1 {
                            out.push(Params {
                                n: Some(n),
                                e: Some(e),
                                ..Params::default()
                            });
                        }
                    }
                }
                out
            }
            L2_2 => self
                .normal_p_subgroups()
                .into_iter()
                .map(|n| Params {
                    n: Some(n),
                    ..Params::default()
                })
                .collect(),
            L2_3 => self
                .class_reps()
                .into_iter()
                .filter(|&h| {
                    let o = self.sub(h).order();
                    o > 1 && is_prime_power(o)
                })
                .map(|h| Params {
                    h: Some(h),
                    ..Params::default()
                })
                .collect(),
            L2_5 => l
                .normal_subgroups()
                .into_iter()
                .filter(|&n| n != l.trivial())
                .map(|n| Params {
                    n: Some(n),
                    ..Params::default()
                })
                .collect(),
            L3_1 | C3_2 | L3_3 => {
                let mut out = Vec::new();
                for n in self.normal_p_subgroups() {
                    let o = self.sub(n).order();
                    let p = self.prime_of(n);
                    for k in 1..p_log(o, p).unwrap() {
                        out.push(Params {
                            n: Some(n),
                            p: Some(p),
                            d_order: Some(p.pow(k)),
                            ..Params::default()
                        });
                    }
                }
                out
            }
            L3_5 => {
                let Some(p) = self.min_prime() else {
                    return Vec::new();
                };
                let n = p_log(p_part(self.group_order(), p), p).unwrap();
                (1..n)
                    .map(|k| Params {
                        p: Some(p),
                        d_order: Some(p.pow(k)),
                        ..Params::default()
                    })
                    .collect()
            }
        }
    }

    /// One instance. Parameters by statement:
    /// `E` for thmB, thm12, Q1.3, C4.10, C4.12;
    /// `N, K` for L2.1i (`N` normal, `N <= K`); `H, K` for L2.1ii (`H <= K`);
    /// `N, E` for L2.1iii; `N` for L2.2 and L2.5; `H` for L2.3; `p` for L2.4
    /// and L2.8; `N, p, d_order` for L3.1, C3.2, L3.3; `p, d_order` for
    /// L3.5; nothing for the rest.
    pub fn verify(&self, id: StatementId, params: &Params) -> Result<Verdict> {
        match id {
            ThmB => self.check_thm_b(need(params.e, "E")?),
            Thm12 => self.check_thm12(need(params.e, "E")?),
            Q13 => self.check_q13(need(params.e, "E")?),
            L2_1i => self.l2_1i(need(params.n, "N")?, need(params.k, "K")?),
            L2_1ii => self.l2_1ii(need(params.h, "H")?, need(params.k, "K")?),
            L2_1iii => self.l2_1iii(need(params.n, "N")?, need(params.e, "E")?),
            L2_2 => self.l2_2(need(params.n, "N")?),
            L2_3 => Ok(self.l2_3(need(params.h, "H")?)),
            L2_4 => Ok(self.l2_4(need(params.p, "p")?)),
            L2_5 => Ok(self.l2_5(need(params.n, "N")?)),
            L2_6 => Ok(self.l2_6()),
            L2_7 => Ok(self.l2_7()),
            L2_8 => self.l2_8(need(params.p, "p")?),
            L2_9 => Ok(self.l2_9()),
            L3_1 | C3_2 | L3_3 => {
                let n = need(params.n, "N")?;
                let d = need(params.d_order, "d_order")?;
                let o = self.sub(n).order();
                if !self.a.lattice().is_normal(n) || !is_prime_power(o) {
                    return Err(Error::MalformedParams("N must be a normal p-subgroup".into()));
                }
                let p = self.prime_of(n);
                if p_log(d, p).is_none() || d <= 1 || d >= o {
                    return Err(Error::MalformedParams(format!("|D| = {d} not admissible")));
                }
                Ok(match id {
                    L3_1 => self.l3_1(n, d),
                    C3_2 => self.c3_2(n, d),
                    _ => self.l3_3(n, d),
                })
            }
            L3_5 => Ok(self.l3_5(need(params.d_order, "d_order")?)),
            C4_3 => Ok(self.c4_3()),
            C4_4 => Ok(self.c4_4()),
            C4_5 => Ok(self.c4_5()),
            C4_6 => Ok(self.c4_6()),
            C4_7 => Ok(self.c4_7()),
            C4_8 => Ok(self.c4_8()),
            C4_9 => self.c4_9(),
            C4_10 => self.c4_10(need(params.e, "E")?),
            C4_11 => Ok(self.c4_11()),
            C4_12 => self.c4_12(need(params.e, "E")?),
            Remark1 => Err(Error::MalformedParams(
                "R4.1 is arithmetic; use corollary_context_suite".into(),
            )),
        }
    }

    fn imp(
        &self,
        id: StatementId,
        instance: String,
        hyp: bool,
        conclusion: impl FnOnce() -> (bool, Vec<String>),
    ) -> Verdict {
        Verdict::implication(id, self.name, instance, hyp, conclusion)
    }

    fn iff(&self, id: StatementId, instance: String, lhs: bool, rhs: bool) -> Verdict {
        self.imp(id, instance, true, || {
            (lhs == rhs, vec![format!("lhs={lhs} rhs={rhs}")])
        })
    }

    fn l2_1i(&self, n: SubgroupId, k: SubgroupId) -> Result<Verdict> {
        if !self.a.lattice().is_normal(n) || !self.sub(n).is_subgroup_of(self.sub(k)) {
            return Err(Error::MalformedParams("need N normal and N <= K".into()));
        }
        let q = self.quotient(n)?;
        let (quot, qa) = (&q.0, &q.1);
        let kq = qa.id(&quot.image(self.g(), self.sub(k)))?;
        let lhs = qa.weakly_s_supplemented(kq).is_some();
        let rhs = self.a.weakly_s_supplemented(k).is_some();
        Ok(self.iff(
            L2_1i,
            format!("N={} K={}", self.label(n), self.label(k)),
            lhs,
            rhs,
        ))
    }

    fn l2_1ii(&self, h: SubgroupId, k: SubgroupId) -> Result<Verdict> {
        if !self.sub(h).is_subgroup_of(self.sub(k)) {
            return Err(Error::MalformedParams("need H <= K".into()));
        }
        let hyp = self.a.weakly_s_supplemented(h).is_some();
        Ok(self.imp(
            L2_1ii,
            format!("H={} K={}", self.label(h), self.label(k)),
            hyp,
            || {
                let sa = self.sub_analysis(k);
                let (ka, members) = (&sa.0, &sa.1);
                let bits = BitSet::from_indices(
                    members.len(),
                    self.sub(h)
                        .elements()
                        .map(|x| members.binary_search(&x).expect("H <= K")),
                );
                let hk = ka.lattice().id_of_members(&bits).expect("H is a subgroup of K");
                (ka.weakly_s_supplemented(hk).is_some(), Vec::new())
            },
        ))
    }

    fn l2_1iii(&self, n: SubgroupId, e: SubgroupId) -> Result<Verdict> {
        if !self.a.lattice().is_normal(n) {
            return Err(Error::NotNormal);
        }
        let coprime = gcd(self.sub(n).order(), self.sub(e).order()) == 1;
        let hyp = coprime && self.a.weakly_s_supplemented(e).is_some();
        let instance = format!("N={} E={}", self.label(n), self.label(e));
        if !hyp {
            return Ok(self.imp(L2_1iii, instance, false, || unreachable!()));
        }
        let q = self.quotient(n)?;
        let (quot, qa) = (&q.0, &q.1);
        let eq = qa.id(&quot.image(self.g(), self.sub(e)))?;
        let holds = qa.weakly_s_supplemented(eq).is_some();
        Ok(self.imp(L2_1iii, instance, true, || (holds, Vec::new())))
    }

    fn l2_2(&self, n: SubgroupId) -> Result<Verdict> {
        let ps = self.sub(n);
        let phi = structure::phi_p_group(self.g(), ps)?;
        let lhs = self.inside_u_hypercenter(n);
        let q = self.g().quotient(&phi)?;
        let zq = structure::u_hypercenter(&q.group);
        let rhs = q.image(self.g(), ps).is_subgroup_of(&zq);
        Ok(self.iff(L2_2, format!("P={}", self.label(n)), lhs, rhs))
    }

    fn l2_3(&self, h: SubgroupId) -> Verdict {
        let p = self.prime_of(h);
        let hyp = is_prime_power(self.sub(h).order()) && self.a.is_s_permutable(h);
        self.imp(L2_3, format!("H={}", self.label(h)), hyp, || {
            let op = self.g().o_upper_p(p);
            let norm = self.g().normalizer(self.sub(h));
            (op.is_subgroup_of(&norm), vec![format!("|O^p|={}", op.order())])
        })
    }

    fn l2_4(&self, p: usize) -> Verdict {
        let g = self.g();
        let hyp = structure::is_p_solvable(g, p) && structure::o_lower_p_prime(g, p).is_trivial();
        self.imp(L2_4, format!("p={p}"), hyp, || {
            let op = structure::o_lower_p(g, p);
            let bad: Vec<String> = self
                .class_reps()
                .into_iter()
                .filter(|&h| op.is_subgroup_of(self.sub(h)))
                .filter(|&h| !structure::o_lower_p_prime(&self.sub_group(h), p).is_trivial())
                .map(|h| self.label(h))
                .collect();
            (bad.is_empty(), bad)
        })
    }

    fn l2_5(&self, n: SubgroupId) -> Verdict {
        let hyp = self.is_nilpotent_sub(n) && self.meets_frattini_trivially(n);
        self.imp(L2_5, format!("N={}", self.label(n)), hyp, || {
            let soc = self.a.lattice().socle(self.g());
            let in_soc = self.sub(n).is_subgroup_of(&soc);
            let product = self.product_of_minimal_normals(n);
            (in_soc && product, vec![format!("in socle {in_soc}, product {product}")])
        })
    }

    fn l2_6(&self) -> Verdict {
        let l = self.a.lattice();
        let simple = !self.g().is_abelian() && l.normal_subgroups().len() == 2;
        let order = self.group_order();
        let row = SIMPLE_INDEX_TABLE.iter().find(|r| r.0 == order);
        let hyp = simple && row.is_some();
        let mut instance = "simple group".to_string();
        if simple && row.is_none() {
            instance = format!("simple group of order {order}: outside the checked range");
        }
        self.imp(L2_6, instance, hyp, || {
            let (_, allowed, named) = row.unwrap();
            let mut ok = true;
            let mut counts: std::collections::BTreeMap<usize, usize> = Default::default();
            for h in l.ids() {
                let index = order / self.sub(h).order();
                if index == 1 || !is_prime_power(index) {
                    continue;
                }
                *counts.entry(index).or_default() += 1;
                if !allowed.contains(&index) {
                    ok = false;
                }
                if let Some((i, name)) = named {
                    if *i == index {
                        let fp = fingerprint(&self.sub_group(h));
                        ok &= recognize(&fp).as_deref() == Some(*name);
                    }
                }
            }
            let w = counts
                .iter()
                .map(|(i, c)| format!("index {i}: {c} subgroups"))
                .collect();
            (ok, w)
        })
    }

    fn l2_7(&self) -> Verdict {
        let Some(p) = self.min_prime() else {
            return self.imp(L2_7, "trivial group".into(), false, || unreachable!());
        };
        let ps = self.sylow_rep(p);
        let fail = self
            .maximal_of_p(ps)
            .into_iter()
            .find(|&h| !self.a.ss_supplemented_or_wss(h));
        let mut v = self.imp(L2_7, format!("p={p}"), fail.is_none(), || {
            (structure::is_p_nilpotent(self.g(), p), Vec::new())
        });
        if let Some(h) = fail {
            v.witnesses.push(format!("fails at {}", self.label(h)));
        }
        v
    }

    fn l2_8(&self, p: usize) -> Result<Verdict> {
        let g = self.g();
        let l = self.a.lattice();
        let hyp = !structure::is_p_nilpotent(g, p)
            && l
                .maximal_subgroups()
                .into_iter()
                .all(|m| structure::is_p_nilpotent(&self.sub_group(m), p));
        let mut parts = Vec::new();
        let v = self.imp(L2_8, format!("p={p}"), hyp, || {
            let ps = self.sylow_rep(p);
            let primes = g.primes();
            let normal = l.is_normal(ps);
            let q_ok = primes.len() == 2 && {
                let q = primes.iter().copied().find(|&q| q != p).unwrap();
                let qs = self.sylow_rep(q);
                self.is_cyclic(qs) && !l.is_normal(qs)
            };
            let phi = structure::phi_p_group(g, self.sub(ps)).expect("p-group");
            let chief = structure::minimal_normal_between(g, &phi, self.sub(ps))
                .first()
                .is_some_and(|m| m.order() == self.sub(ps).order());
            let exp = structure::exponent(g, self.sub(ps)).expect("p-group");
            let abelian = self.is_abelian(ps);
            let exp_ok = if abelian || p > 2 { exp == p } else { exp == 4 };
            parts.push(format!(
                "normal Sylow {normal}, cyclic non-normal complement {q_ok}, chief factor {chief}, exp(P)={exp}"
            ));
            (normal && q_ok && chief && exp_ok, parts)
        });
        Ok(v)
    }

    fn l2_9(&self) -> Verdict {
        let Some(p) = self.min_prime() else {
            return self.imp(L2_9, "trivial group".into(), false, || unreachable!());
        };
        let ps = self.sylow_rep(p);
        let mut orders = vec![p];
        if self.is_nonabelian_2group(ps) {
            orders.push(4);
        }
        let fail = self.clause(ps, &orders);
        let mut v = self.imp(L2_9, format!("p={p}"), fail.is_none(), || {
            (structure::is_p_nilpotent(self.g(), p), Vec::new())
        });
        if let Some(h) = fail {
            v.witnesses.push(format!("fails at {}", self.label(h)));
        }
        v
    }

    fn l3_1_hypothesis(&self, n: SubgroupId, d: usize) -> bool {
        self.meets_frattini_trivially(n) && self.clause(n, &[d]).is_none()
    }

    fn l3_1(&self, n: SubgroupId, d: usize) -> Verdict {
        let hyp = self.l3_1_hypothesis(n, d);
        self.imp(L3_1, format!("P={} |D|={d}", self.label(n)), hyp, || {
            let p = self.prime_of(n);
            let orders = structure::chief_factor_orders_below(self.g(), self.sub(n));
            let s = orders[0];
            let equal = orders.iter().all(|&o| o == s);
            let (is, id) = (p_log(s, p).unwrap(), p_log(d, p).unwrap());
            let power = id >= is && id % is == 0;
            let product = self.product_of_minimal_normals(n);
            (
                equal && power && product,
                vec![format!("chief factor orders {orders:?}")],
            )
        })
    }

    fn c3_2(&self, n: SubgroupId, d: usize) -> Verdict {
        let p = self.prime_of(n);
        let o = self.sub(n).order();
        let (ip, id, iq) = (
            p_log(o, p).unwrap() as usize,
            p_log(d, p).unwrap() as usize,
            p_log(o / d, p).unwrap() as usize,
        );
        let hyp = (gcd(ip, id) == 1 || gcd(iq, id) == 1) && self.l3_1_hypothesis(n, d);
        self.imp(C3_2, format!("P={} |D|={d}", self.label(n)), hyp, || {
            (self.inside_u_hypercenter(n), Vec::new())
        })
    }

    fn l3_3(&self, n: SubgroupId, d: usize) -> Verdict {
        let ps = self.sub(n);
        let derived = structure::derived_subgroup_of(self.g(), ps);
        let p_phi = ps.members().intersection_count(self.frattini().members());
        let gate = derived.order() < p_phi || d <= derived.order();
        let mut orders = vec![d];
        if self.is_nonabelian_2group(n) {
            orders.push(2 * d);
        }
        let hyp = gate && self.clause(n, &orders).is_none();
        self.imp(L3_3, format!("P={} |D|={d}", self.label(n)), hyp, || {
            (self.inside_u_hypercenter(n), Vec::new())
        })
    }

    fn l3_5(&self, d: usize) -> Verdict {
        let p = self.min_prime().unwrap_or(1);
        let ps = self.sylow_rep(p);
        let mut orders = vec![d];
        if self.is_nonabelian_2group(ps) {
            orders.push(2 * d);
        }
        let hyp = d > 1 && d < self.sub(ps).order() && self.clause(ps, &orders).is_none();
        self.imp(L3_5, format!("p={p} |D|={d}"), hyp, || {
            let r = structure::p_length(self.g(), p);
            (
                r.is_p_solvable && r.p_length == Some(1),
                vec![format!("p-length {:?}", r.p_length)],
            )
        })
    }

    fn conclude_supersolvable(
        &self,
        id: StatementId,
        instance: String,
        failing: Option<SubgroupId>,
        extra: bool,
    ) -> Verdict {
        let mut v = self.imp(id, instance, extra && failing.is_none(), || {
            (self.supersolvable(), Vec::new())
        });
        if let Some(h) = failing {
            v.witnesses.push(format!("fails at {}", self.label(h)));
        }
        v
    }

    fn c4_3(&self) -> Verdict {
        let l = self.a.lattice();
        let fail = self
            .prime_order_inside(l.whole())
            .into_iter()
            .find(|&h| !l.is_normal(h));
        let odd = self.group_order() % 2 == 1;
        self.conclude_supersolvable(C4_3, "odd order, prime-order subgroups normal".into(), fail, odd)
    }

    fn c4_4(&self) -> Verdict {
        let l = self.a.lattice();
        let fail = self.maximal_of_sylows().into_iter().find(|&h| !l.is_normal(h));
        self.conclude_supersolvable(C4_4, "maximal subgroups of Sylows normal".into(), fail, true)
    }

    fn c4_5(&self) -> Verdict {
        let l = self.a.lattice();
        let fail = l
            .ids()
            .filter(|&h| {
                let o = self.sub(h).order();
                is_prime(o) || o == 4
            })
            .find(|&h| !self.a.is_c_normal(h));
        self.conclude_supersolvable(C4_5, "prime order and order 4 c-normal".into(), fail, true)
    }

    fn c4_6(&self) -> Verdict {
        let fail = self
            .maximal_of_sylows()
            .into_iter()
            .find(|&h| !self.a.is_c_normal(h));
        self.conclude_supersolvable(C4_6, "maximal subgroups of Sylows c-normal".into(), fail, true)
    }

    fn c4_7(&self) -> Verdict {
        let l = self.a.lattice();
        let fail = self.maximal_of_sylows().into_iter().find(|&h| {
            self.a.supersolvable_supplement(h).is_none() && !l.is_normal(h)
        });
        self.conclude_supersolvable(
            C4_7,
            "maximal subgroups of Sylows without supersolvable supplement normal".into(),
            fail,
            true,
        )
    }

    fn c4_8(&self) -> Verdict {
        let fail = self.maximal_of_sylows().into_iter().find(|&h| {
            self.a.supersolvable_supplement(h).is_none() && !self.a.is_c_normal(h)
        });
        self.conclude_supersolvable(
            C4_8,
            "maximal subgroups of Sylows without supersolvable supplement c-normal".into(),
            fail,
            true,
        )
    }

    /// The supersolvable residual: the smallest normal `N` with `G/N`
    /// supersolvable.
    pub fn supersolvable_residual(&self) -> Result<SubgroupId> {
        for n in self.a.lattice().normal_subgroups() {
            if self.quotient_in(n, &super::Formation::supersolvable())? {
                return Ok(n);
            }
        }
        unreachable!("G/G is supersolvable")
    }

    fn c4_9(&self) -> Result<Verdict> {
        let r = self.supersolvable_residual()?;
        let fail = self
            .minimal_and_cyclic4(r)
            .into_iter()
            .find(|&h| !self.a.is_c_normal(h));
        Ok(self.conclude_supersolvable(
            C4_9,
            format!("residual {}", self.label(r)),
            fail,
            true,
        ))
    }

    fn c4_10(&self, e: SubgroupId) -> Result<Verdict> {
        if !self.a.lattice().is_normal(e) {
            return Err(Error::NotNormal);
        }
        let quotient_ok = self.quotient_in(e, &super::Formation::supersolvable())?;
        let sylow2_abelian = self.group_order() % 2 == 1 || self.is_abelian(self.sylow_rep(2));
        let fail = self
            .prime_order_inside(e)
            .into_iter()
            .find(|&h| !self.a.is_permutable(h));
        Ok(self.conclude_supersolvable(
            C4_10,
            format!("E={}", self.label(e)),
            fail,
            quotient_ok && sylow2_abelian,
        ))
    }

    fn c4_11(&self) -> Verdict {
        let solvable = structure::is_solvable(self.g());
        let l = self.a.lattice();
        let fail = self
            .g()
            .primes()
            .into_iter()
            .flat_map(|p| {
                let op = structure::o_lower_p(self.g(), p);
                self.maximal_of_p(self.a.id(&op).expect("lattice is complete"))
            })
            .find(|&h| !l.is_normal(h));
        self.conclude_supersolvable(
            C4_11,
            "maximal subgroups of Sylows of F(G) normal".into(),
            fail,
            solvable,
        )
    }

    fn c4_12(&self, e: SubgroupId) -> Result<Verdict> {
        if !self.a.lattice().is_normal(e) {
            return Err(Error::NotNormal);
        }
        let gate = self.is_solvable_sub(e) && self.quotient_in(e, &super::Formation::supersolvable())?;
        let fail = self
            .minimal_and_cyclic4(e)
            .into_iter()
            .find(|&h| self.a.weakly_s_permutable(h).is_none());
        Ok(self.conclude_supersolvable(C4_12, format!("E={}", self.label(e)), fail, gate))
    }
}
