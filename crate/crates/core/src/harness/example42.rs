//! The `S3 wr C3` counterexample showing p-length 1 can fail.

use serde::Serialize;

use crate::construct::{symmetric, wreath_regular};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::permutability::GroupAnalysis;
use crate::structure::{self, fingerprint, recognize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Example42Report {
    pub b_order: usize,
    pub g_order: usize,
    pub o3_order: usize,
    pub o3_elementary_abelian: bool,
    pub quotient_name: Option<String>,
    pub sylow3_order: usize,
    pub maximal_in_sylow3: usize,
    pub all_complemented: bool,
    pub all_weakly_s_supplemented: bool,
    pub p_length_3: Option<usize>,
}

fn check(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::CheckFailed(what()))
    }
}

/// Builds `B = S3 wr C3` and `G = O^2(B)` and checks every claimed property
/// of `G`. Any failed check is an error.
pub fn build_example42() -> Result<(Group, Group, Example42Report)> {
    let b = wreath_regular(&symmetric(3), 3)?;
    check(b.order() == 648, || format!("|B| = {}", b.order()))?;
    let (g, _) = b.subgroup_as_group(&b.o_upper_p(2));
    check(g.order() == 324, || format!("|G| = {}", g.order()))?;

    let o3 = structure::o_lower_p(&g, 3);
    let o3_elementary = o3.order() == 27
        && o3.elements().all(|x| g.pow(x, 3) == g.identity())
        && o3
            .elements()
            .all(|x| o3.elements().all(|y| g.mul(x, y) == g.mul(y, x)));
    check(o3_elementary, || format!("O_3(G) of order {} is not elementary abelian of order 27", o3.order()))?;

    let q = g.quotient(&o3)?;
    let quotient_name = recognize(&fingerprint(&q.group));
    check(quotient_name.as_deref() == Some("A4"), || {
        format!("G/O_3(G) recognized as {quotient_name:?}")
    })?;

    let a = GroupAnalysis::new(g.clone())?;
    let l = a.lattice();
    let p = l.sylow(3).representative;
    let p_order = l.get(p).order();
    check(p_order == 81, || format!("|P| = {p_order}"))?;
    let maximal: Vec<_> = l
        .ids()
        .filter(|&h| l.get(h).order() == 27 && l.includes(h, p))
        .collect();
    let all_complemented = maximal.iter().all(|&h| a.is_complemented(h));
    check(all_complemented, || "a maximal subgroup of P has no complement".into())?;
    let all_wss = maximal.iter().all(|&h| a.is_weakly_s_supplemented(h).0);
    check(all_wss, || "a maximal subgroup of P is not weakly s-supplemented".into())?;

    let pl = structure::p_length(&g, 3);
    check(pl.p_length == Some(2), || format!("3-length {:?}", pl.p_length))?;

    let report = Example42Report {
        b_order: b.order(),
        g_order: g.order(),
        o3_order: o3.order(),
        o3_elementary_abelian: o3_elementary,
        quotient_name,
        sylow3_order: p_order,
        maximal_in_sylow3: maximal.len(),
        all_complemented,
        all_weakly_s_supplemented: all_wss,
        p_length_3: pl.p_length,
    };
    Ok((b, g, report))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reconstruction_checks_pass() {
        let (b, g, r) = build_example42().unwrap();
        assert_eq!((b.order(), g.order()), (648, 324));
        assert_eq!(r.p_length_3, Some(2));
        assert!(r.maximal_in_sylow3 > 0);
    }
}
