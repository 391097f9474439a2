//! Mechanical hypothesis/conclusion checks.
//!
//! Every statement is checked instance by instance: a [`Verdict`] records
//! whether the hypothesis held, whether the conclusion held, and whether the
//! implication survived. The supersolvability criterion lives here; the
//! lemma and corollary checkers are in [`statements`].

use std::cell::{OnceCell, RefCell};
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

use serde::{Serialize, Serializer};

use crate::arith::{gcd, p_log, p_part, prime_divisors};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::lattice::SubgroupId;
use crate::permutability::GroupAnalysis;
use crate::structure;
use crate::subgroup::{Quotient, Subgroup};

mod example42;
pub mod statements;

pub use example42::{build_example42, Example42Report};
pub use statements::{corollary_context_suite, verify_group, verify_statement};

/// Per-group cap on the normal subgroups `E` paired with a group.
pub const DEFAULT_NORMAL_BUDGET: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StatementId {
    ThmB,
    Thm12,
    Q13,
    L2_1i,
    L2_1ii,
    L2_1iii,
    L2_2,
    L2_3,
    L2_4,
    L2_5,
    L2_6,
    L2_7,
    L2_8,
    L2_9,
    L3_1,
    C3_2,
    L3_3,
    L3_5,
    C4_3,
    C4_4,
    C4_5,
    C4_6,
    C4_7,
    C4_8,
    C4_9,
    C4_10,
    C4_11,
    C4_12,
    Remark1,
}

use StatementId::*;

const ALL: [StatementId; 29] = [
    ThmB, Thm12, Q13, L2_1i, L2_1ii, L2_1iii, L2_2, L2_3, L2_4, L2_5, L2_6, L2_7, L2_8, L2_9,
    L3_1, C3_2, L3_3, L3_5, C4_3, C4_4, C4_5, C4_6, C4_7, C4_8, C4_9, C4_10, C4_11, C4_12,
    Remark1,
];

const PROVED: [StatementId; 27] = [
    ThmB, Thm12, L2_1i, L2_1ii, L2_1iii, L2_2, L2_3, L2_4, L2_5, L2_6, L2_7, L2_8, L2_9, L3_1,
    C3_2, L3_3, L3_5, C4_3, C4_4, C4_5, C4_6, C4_7, C4_8, C4_9, C4_10, C4_11, C4_12,
];

impl StatementId {
    pub fn as_str(self) -> &'static str {
        match self {
            ThmB => "thmB",
            Thm12 => "thm12",
            Q13 => "Q1.3",
            L2_1i => "L2.1i",
            L2_1ii => "L2.1ii",
            L2_1iii => "L2.1iii",
            L2_2 => "L2.2",
            L2_3 => "L2.3",
            L2_4 => "L2.4",
            L2_5 => "L2.5",
            L2_6 => "L2.6",
            L2_7 => "L2.7",
            L2_8 => "L2.8",
            L2_9 => "L2.9",
            L3_1 => "L3.1",
            C3_2 => "C3.2",
            L3_3 => "L3.3",
            L3_5 => "L3.5",
            C4_3 => "C4.3",
            C4_4 => "C4.4",
            C4_5 => "C4.5",
            C4_6 => "C4.6",
            C4_7 => "C4.7",
            C4_8 => "C4.8",
            C4_9 => "C4.9",
            C4_10 => "C4.10",
            C4_11 => "C4.11",
            C4_12 => "C4.12",
            Remark1 => "R4.1",
        }
    }

    /// Accepts the canonical names, case-insensitively, plus `L2.1` for all
    /// three parts of that lemma (see [`StatementId::expand`]).
    pub fn parse(s: &str) -> Option<StatementId> {
        let s = s.trim();
        ALL.iter()
            .copied()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .or_else(|| match s.to_ascii_lowercase().as_str() {
                "q13" | "question13" => Some(Q13),
                "l2.1(i)" => Some(L2_1i),
                "l2.1(ii)" => Some(L2_1ii),
                "l2.1(iii)" => Some(L2_1iii),
                _ => None,
            })
    }

    /// Statement list for a CLI selector: a single id, `L2.1`, `lemmas`,
    /// `corollaries`, or `all`.
    pub fn expand(selector: &str) -> Option<Vec<StatementId>> {
        match selector.trim().to_ascii_lowercase().as_str() {
            "all" => Some(StatementId::proved().to_vec()),
            "l2.1" => Some(vec![L2_1i, L2_1ii, L2_1iii]),
            "lemmas" => Some(vec![
                L2_1i, L2_1ii, L2_1iii, L2_2, L2_3, L2_4, L2_5, L2_6, L2_7, L2_8, L2_9, L3_1,
                C3_2, L3_3, L3_5,
            ]),
            "corollaries" => Some(vec![C4_3, C4_4, C4_5, C4_6, C4_7, C4_8, C4_9, C4_10, C4_11, C4_12]),
            _ => StatementId::parse(selector).map(|id| vec![id]),
        }
    }

    pub fn all() -> &'static [StatementId] {
        &ALL
    }

    /// Every statement whose verdicts must all be consistent: everything but
    /// the open question and the arithmetic remark.
    pub fn proved() -> &'static [StatementId] {
        &PROVED
    }

    /// `true` for statements the harness expects to be consistent everywhere.
    pub fn is_proved(self) -> bool {
        !matches!(self, Q13 | Remark1)
    }
}

impl fmt::Display for StatementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for StatementId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub statement: StatementId,
    pub group: String,
    pub instance: String,
    pub hypothesis_satisfied: bool,
    /// `None` when the hypothesis fails and the conclusion was not evaluated.
    pub conclusion_holds: Option<bool>,
    pub consistent: bool,
    pub witnesses: Vec<String>,
    /// Set by scans that look for candidate counterexamples.
    pub flagged: bool,
}

impl Verdict {
    fn implication(
        statement: StatementId,
        group: &str,
        instance: String,
        hypothesis: bool,
        conclusion: impl FnOnce() -> (bool, Vec<String>),
    ) -> Verdict {
        let (conclusion_holds, witnesses) = if hypothesis {
            let (c, w) = conclusion();
            (Some(c), w)
        } else {
            (None, Vec::new())
        };
        Verdict {
            statement,
            group: group.to_string(),
            instance,
            hypothesis_satisfied: hypothesis,
            conclusion_holds,
            consistent: !hypothesis || conclusion_holds == Some(true),
            witnesses,
            flagged: false,
        }
    }
}

/// Which embedding property the main clause asks of subgroups without a
/// supersolvable supplement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Weakly s-supplemented (`thmB`, `Q1.3`).
    Supplemented,
    /// Weakly s-permutable (`thm12`).
    Permutable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DOrderCheck {
    pub d_order: usize,
    /// Every `H` of order `|D|` (and `2|D|` under the two-D rule) has a
    /// supersolvable supplement or the mode's property.
    pub holds: bool,
    /// Every such `H` has the mode's property outright.
    pub holds_strict: bool,
    pub two_d_rule_applied: bool,
    pub failing_h: Option<String>,
    pub cond_i: bool,
    pub cond_ii: bool,
    pub cond_iii: bool,
}

impl DOrderCheck {
    pub fn some_condition(&self) -> bool {
        self.cond_i || self.cond_ii || self.cond_iii
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeReport {
    pub p: usize,
    pub sylow_order: usize,
    pub sylow_cyclic: bool,
    pub sylow: String,
    pub derived_order: usize,
    pub frattini_order: usize,
    pub admissible_d: Vec<DOrderCheck>,
}

impl PrimeReport {
    pub fn clause_holds(&self) -> bool {
        self.sylow_cyclic || self.admissible_d.iter().any(|d| d.holds)
    }

    pub fn strict_clause_holds(&self) -> bool {
        self.sylow_cyclic || self.admissible_d.iter().any(|d| d.holds_strict)
    }

    /// Some admissible `|D|` satisfies the clause and one of (i)-(iii).
    pub fn clause_with_conditions(&self) -> bool {
        self.sylow_cyclic
            || self
                .admissible_d
                .iter()
                .any(|d| d.holds && d.some_condition())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypothesisReport {
    pub group_id: u64,
    pub e_id: usize,
    pub e_order: usize,
    pub mode: Mode,
    pub quotient_in_formation: bool,
    pub per_prime: Vec<PrimeReport>,
}

impl HypothesisReport {
    /// `G/E ∈ F` and every non-cyclic Sylow subgroup of `E` has an admissible
    /// `|D|`, ignoring conditions (i)-(iii).
    pub fn clauses_hold(&self) -> bool {
        self.quotient_in_formation && self.per_prime.iter().all(PrimeReport::clause_holds)
    }

    pub fn strict_clauses_hold(&self) -> bool {
        self.quotient_in_formation && self.per_prime.iter().all(PrimeReport::strict_clause_holds)
    }

    pub fn holds_with_conditions(&self) -> bool {
        self.quotient_in_formation
            && self
                .per_prime
                .iter()
                .all(PrimeReport::clause_with_conditions)
    }

    fn summary(&self) -> Vec<String> {
        let mut out = vec![format!(
            "|E|={} G/E in F: {}",
            self.e_order, self.quotient_in_formation
        )];
        for pr in &self.per_prime {
            if pr.sylow_cyclic {
                out.push(format!("p={} |P|={} cyclic", pr.p, pr.sylow_order));
                continue;
            }
            let ds: Vec<String> = pr
                .admissible_d
                .iter()
                .map(|d| {
                    let mut conds = String::new();
                    for (flag, name) in [(d.cond_i, "i"), (d.cond_ii, "ii"), (d.cond_iii, "iii")] {
                        if flag {
                            if !conds.is_empty() {
                                conds.push(',');
                            }
                            conds.push_str(name);
                        }
                    }
                    match &d.failing_h {
                        None => format!("|D|={} holds [{}]", d.d_order, conds),
                        Some(h) => format!("|D|={} fails at {}", d.d_order, h),
                    }
                })
                .collect();
            out.push(format!("p={} |P|={}: {}", pr.p, pr.sylow_order, ds.join("; ")));
        }
        out
    }
}

/// Formation membership test used for `G/E ∈ F` and `G ∈ F`.
pub struct Formation<'f> {
    pub name: String,
    pub builtin: bool,
    pred: Box<dyn Fn(&Group) -> bool + 'f>,
}

impl<'f> Formation<'f> {
    /// The supersolvable groups.
    pub fn supersolvable() -> Formation<'static> {
        Formation {
            name: "U".into(),
            builtin: true,
            pred: Box::new(structure::is_supersolvable),
        }
    }

    /// A user-supplied membership test. Reports label such runs, since the
    /// harness cannot check that the class is a saturated formation
    /// containing the supersolvable groups.
    pub fn custom(name: &str, pred: impl Fn(&Group) -> bool + 'f) -> Formation<'f> {
        Formation {
            name: name.into(),
            builtin: false,
            pred: Box::new(pred),
        }
    }

    pub fn contains(&self, g: &Group) -> bool {
        (self.pred)(g)
    }
}

/// Per-group state shared by all checks: lazily built quotients, subgroup
/// analyses and series.
pub struct Verifier<'a> {
    name: &'a str,
    a: &'a GroupAnalysis,
    quotients: RefCell<HashMap<SubgroupId, Rc<(Quotient, GroupAnalysis)>>>,
    sub_analyses: RefCell<HashMap<SubgroupId, Rc<(GroupAnalysis, Vec<usize>)>>>,
    quotient_ss: RefCell<HashMap<SubgroupId, bool>>,
    u_hyper: OnceCell<Subgroup>,
    frattini: OnceCell<Subgroup>,
    hypotheses: RefCell<HashMap<(SubgroupId, Mode), Rc<HypothesisReport>>>,
}

impl<'a> Verifier<'a> {
    pub fn new(name: &'a str, a: &'a GroupAnalysis) -> Verifier<'a> {
        Verifier {
            name,
            a,
            quotients: RefCell::default(),
            sub_analyses: RefCell::default(),
            quotient_ss: RefCell::default(),
            u_hyper: OnceCell::new(),
            frattini: OnceCell::new(),
            hypotheses: RefCell::default(),
        }
    }

    pub fn analysis(&self) -> &GroupAnalysis {
        self.a
    }

    fn g(&self) -> &Group {
        self.a.group()
    }

    fn sub(&self, id: SubgroupId) -> &Subgroup {
        self.a.subgroup(id)
    }

    fn label(&self, id: SubgroupId) -> String {
        let s = self.sub(id);
        format!("{}:{}", s.order(), s.describe(self.g()))
    }

    fn supersolvable(&self) -> bool {
        self.a.is_supersolvable_subgroup(self.a.lattice().whole())
    }

    fn u_hypercenter(&self) -> &Subgroup {
        self.u_hyper.get_or_init(|| structure::u_hypercenter(self.g()))
    }

    fn frattini(&self) -> &Subgroup {
        self.frattini.get_or_init(|| self.a.lattice().frattini(self.g()))
    }

    /// `G/N` with its own analysis.
    fn quotient(&self, n: SubgroupId) -> Result<Rc<(Quotient, GroupAnalysis)>> {
        if let Some(q) = self.quotients.borrow().get(&n) {
            return Ok(q.clone());
        }
        let q = self.g().quotient(self.sub(n))?;
        let qa = GroupAnalysis::from_parts(q.group.clone(), {
            crate::lattice::SubgroupLattice::enumerate_with_cap(&q.group, usize::MAX)?
        });
        let rc = Rc::new((q, qa));
        self.quotients.borrow_mut().insert(n, rc.clone());
        Ok(rc)
    }

    fn quotient_in(&self, e: SubgroupId, f: &Formation) -> Result<bool> {
        if f.builtin {
            if let Some(&b) = self.quotient_ss.borrow().get(&e) {
                return Ok(b);
            }
        }
        let q = self.g().quotient(self.sub(e))?;
        let b = f.contains(&q.group);
        if f.builtin {
            self.quotient_ss.borrow_mut().insert(e, b);
        }
        Ok(b)
    }

    /// `K` as a group with its analysis, plus the map from `K`'s element
    /// indices to `G`'s.
    fn sub_analysis(&self, k: SubgroupId) -> Rc<(GroupAnalysis, Vec<usize>)> {
        if let Some(s) = self.sub_analyses.borrow().get(&k) {
            return s.clone();
        }
        let (kg, kl, members) = self.a.lattice().restrict(self.g(), self.sub(k));
        let rc = Rc::new((GroupAnalysis::from_parts(kg, kl), members));
        self.sub_analyses.borrow_mut().insert(k, rc.clone());
        rc
    }

    /// Lattice ids of subgroups of `P` of the given order.
    fn subgroups_inside(&self, p: SubgroupId, order: usize) -> Vec<SubgroupId> {
        let ps = self.sub(p);
        self.a
            .lattice()
            .ids()
            .filter(|&h| {
                let hs = self.sub(h);
                hs.order() == order && hs.is_subgroup_of(ps)
            })
            .collect()
    }

    /// The first Sylow `p`-subgroup of `E` in lattice order.
    fn sylow_of(&self, e: SubgroupId, p: usize) -> SubgroupId {
        let target = p_part(self.sub(e).order(), p);
        self.subgroups_inside(e, target)[0]
    }

    /// First `H` among the given orders inside `P` failing `ok`.
    fn first_failure(
        &self,
        p: SubgroupId,
        orders: &[usize],
        ok: impl Fn(SubgroupId) -> bool,
    ) -> Option<SubgroupId> {
        orders
            .iter()
            .flat_map(|&o| self.subgroups_inside(p, o))
            .find(|&h| !ok(h))
    }

    fn is_abelian(&self, h: SubgroupId) -> bool {
        let gens = self.sub(h).generators();
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.g().mul(a, b) == self.g().mul(b, a)))
    }

    fn is_cyclic(&self, h: SubgroupId) -> bool {
        let hs = self.sub(h);
        hs.elements().any(|x| self.g().element_order(x) == hs.order())
    }

    /// The two-D rule: `P` a non-abelian 2-group with `|P:D| > 2`.
    fn two_d_rule(&self, p_sub: SubgroupId, p: usize, d: usize) -> bool {
        p == 2 && !self.is_abelian(p_sub) && self.sub(p_sub).order() / d > 2
    }

    /// `thmB` / `thm12` hypothesis for the normal subgroup `E`.
    pub fn thm_b_hypothesis(&self, e: SubgroupId, mode: Mode) -> Result<Rc<HypothesisReport>> {
        self.thm_b_hypothesis_in(e, mode, &Formation::supersolvable())
    }

    fn thm_b_hypothesis_in(
        &self,
        e: SubgroupId,
        mode: Mode,
        f: &Formation,
    ) -> Result<Rc<HypothesisReport>> {
        if !self.a.lattice().is_normal(e) {
            return Err(Error::NotNormal);
        }
        if f.builtin {
            if let Some(r) = self.hypotheses.borrow().get(&(e, mode)) {
                return Ok(r.clone());
            }
        }
        let quotient_in_formation = self.quotient_in(e, f)?;
        let es = self.sub(e);
        let mut per_prime = Vec::new();
        for p in prime_divisors(es.order()) {
            let ps = self.sylow_of(e, p);
            let p_order = self.sub(ps).order();
            let cyclic = self.is_cyclic(ps);
            let derived = structure::derived_subgroup_of(self.g(), self.sub(ps));
            let phi = structure::phi_p_group(self.g(), self.sub(ps))?;
            let n = p_log(p_order, p).unwrap();
            let mut admissible_d = Vec::new();
            if !cyclic {
                for k in 1..n {
                    admissible_d.push(self.d_check(ps, p, p.pow(k), &derived, &phi, mode));
                }
            }
            per_prime.push(PrimeReport {
                p,
                sylow_order: p_order,
                sylow_cyclic: cyclic,
                sylow: self.label(ps),
                derived_order: derived.order(),
                frattini_order: phi.order(),
                admissible_d,
            });
        }
        let report = Rc::new(HypothesisReport {
            group_id: self.g().id(),
            e_id: e.0,
            e_order: es.order(),
            mode,
            quotient_in_formation,
            per_prime,
        });
        if f.builtin {
            self.hypotheses.borrow_mut().insert((e, mode), report.clone());
        }
        Ok(report)
    }

    fn d_check(
        &self,
        ps: SubgroupId,
        p: usize,
        d: usize,
        derived: &Subgroup,
        phi: &Subgroup,
        mode: Mode,
    ) -> DOrderCheck {
        let two_d = self.two_d_rule(ps, p, d);
        let orders: Vec<usize> = if two_d { vec![d, 2 * d] } else { vec![d] };
        let has = |h: SubgroupId| match mode {
            Mode::Supplemented => self.a.weakly_s_supplemented(h).is_some(),
            Mode::Permutable => self.a.weakly_s_permutable(h).is_some(),
        };
        let failing = self.first_failure(ps, &orders, |h| {
            self.a.supersolvable_supplement(h).is_some() || has(h)
        });
        let strict_failing = self.first_failure(ps, &orders, has);
        let p_order = self.sub(ps).order();
        let iota = |m: usize| p_log(m, p).unwrap() as usize;
        let dd = derived.order();
        let cond_iii = dd < d
            && (gcd(iota(p_order / dd), iota(d / dd)) == 1 || gcd(iota(p_order), iota(p_order / d)) == 1);
        DOrderCheck {
            d_order: d,
            holds: failing.is_none(),
            holds_strict: strict_failing.is_none(),
            two_d_rule_applied: two_d,
            failing_h: failing.map(|h| self.label(h)),
            cond_i: phi.order() != dd,
            cond_ii: d <= dd,
            cond_iii,
        }
    }

    /// Normal subgroups paired with `G` as `E`, and whether the budget cut
    /// the list short.
    pub fn normal_pairs(&self, budget: usize) -> (Vec<SubgroupId>, bool) {
        let all = self.a.lattice().normal_subgroups();
        let truncated = all.len() > budget;
        (all.into_iter().take(budget).collect(), truncated)
    }

    pub fn check_thm_b(&self, e: SubgroupId) -> Result<Verdict> {
        self.check_thm_b_with(e, &Formation::supersolvable())
    }

    /// `thmB` for `(G, E)` in the given formation.
    pub fn check_thm_b_with(&self, e: SubgroupId, f: &Formation) -> Result<Verdict> {
        let report = self.thm_b_hypothesis_in(e, Mode::Supplemented, f)?;
        let mut v = Verdict::implication(
            ThmB,
            self.name,
            format!("E={}", self.label(e)),
            report.holds_with_conditions(),
            || (f.contains(self.g()), Vec::new()),
        );
        v.witnesses = report.summary();
        if !f.builtin {
            v.witnesses
                .push(format!("user formation {}: soundness not guaranteed", f.name));
        }
        Ok(v)
    }

    /// `thm12`: the weakly s-permutable clause, no conditions.
    pub fn check_thm12(&self, e: SubgroupId) -> Result<Verdict> {
        let report = self.thm_b_hypothesis(e, Mode::Permutable)?;
        let mut v = Verdict::implication(
            Thm12,
            self.name,
            format!("E={}", self.label(e)),
            report.clauses_hold(),
            || (self.supersolvable(), Vec::new()),
        );
        v.witnesses = report.summary();
        Ok(v)
    }

    /// `Q1.3` for `(G, E)`: flagged when the clause holds without any
    /// of (i)-(iii) and `G` is not supersolvable. A flagged pair satisfying
    /// (i)-(iii) would contradict `thmB`, so that alone is inconsistent.
    pub fn check_q13(&self, e: SubgroupId) -> Result<Verdict> {
        let report = self.thm_b_hypothesis(e, Mode::Supplemented)?;
        let hyp = report.clauses_hold();
        let ss = self.supersolvable();
        let flagged = hyp && !ss;
        let mut witnesses = report.summary();
        if flagged {
            witnesses.push(format!(
                "candidate: strict clause (every H weakly s-supplemented) {}",
                if report.strict_clauses_hold() { "holds" } else { "fails" }
            ));
        }
        Ok(Verdict {
            statement: Q13,
            group: self.name.to_string(),
            instance: format!("E={}", self.label(e)),
            hypothesis_satisfied: hyp,
            conclusion_holds: hyp.then_some(ss),
            consistent: !(flagged && report.holds_with_conditions()),
            witnesses,
            flagged,
        })
    }
}

/// `Q1.3` over a corpus: one verdict per `(G, E)` within budget.
pub fn scan_question13(corpus: &[(String, GroupAnalysis)], max_order: usize) -> Vec<Verdict> {
    let mut out = Vec::new();
    for (name, a) in corpus {
        if a.group().order() > max_order {
            continue;
        }
        let v = Verifier::new(name, a);
        let (es, _) = v.normal_pairs(DEFAULT_NORMAL_BUDGET);
        for e in es {
            out.push(v.check_q13(e).expect("E is normal"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::*;

    #[test]
    fn statement_names_round_trip() {
        for &id in StatementId::all() {
            assert_eq!(StatementId::parse(id.as_str()), Some(id));
        }
        assert_eq!(StatementId::parse("thmb"), Some(ThmB));
        assert_eq!(StatementId::expand("L2.1").unwrap().len(), 3);
        assert_eq!(StatementId::expand("all").unwrap().len(), 27);
        assert!(StatementId::parse("L9.9").is_none());
    }

    #[test]
    fn e_must_be_normal() {
        let a = GroupAnalysis::new(symmetric(3)).unwrap();
        let v = Verifier::new("S3", &a);
        let h = a.lattice().ids().find(|&i| a.subgroup(i).order() == 2).unwrap();
        assert_eq!(v.thm_b_hypothesis(h, Mode::Supplemented).err(), Some(Error::NotNormal));
    }

    #[test]
    fn trivial_e_reduces_to_quotient() {
        let a = GroupAnalysis::new(symmetric(4)).unwrap();
        let v = Verifier::new("S4", &a);
        let r = v.thm_b_hypothesis(a.lattice().trivial(), Mode::Supplemented).unwrap();
        assert!(r.per_prime.is_empty());
        assert!(!r.quotient_in_formation);
        assert!(v.check_thm_b(a.lattice().trivial()).unwrap().consistent);
    }

    #[test]
    fn custom_formation_is_labelled() {
        let a = GroupAnalysis::new(cyclic(6)).unwrap();
        let v = Verifier::new("C6", &a);
        let f = Formation::custom("nilpotent", structure::is_nilpotent);
        let verdict = v.check_thm_b_with(a.lattice().whole(), &f).unwrap();
        assert!(verdict.consistent);
        assert!(verdict.witnesses.iter().any(|w| w.contains("soundness not guaranteed")));
    }
}
