//! Group constructions: standard families, direct and semidirect products,
//! regular wreath products.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::group::{CayleyTable, Group, DEFAULT_ORDER_CAP};
use crate::perm::Perm;

pub fn cyclic(n: usize) -> Group {
    let gens = if n > 1 {
        vec![Perm::from_images_unchecked((0..n as u32).map(|i| (i + 1) % n as u32).collect())]
    } else {
        Vec::new()
    };
    Group::generate(n.max(1), gens).expect("cyclic group within cap")
}

/// Dihedral group of the given (even) order, acting on `order / 2` points.
pub fn dihedral(order: usize) -> Group {
    assert!(order >= 4 && order % 2 == 0, "dihedral order must be even and >= 4");
    let m = order / 2;
    if m == 2 {
        return elementary_abelian(2, 2);
    }
    let rot = Perm::from_images_unchecked((0..m as u32).map(|i| (i + 1) % m as u32).collect());
    let refl = Perm::from_images_unchecked((0..m as u32).map(|i| (m as u32 - i) % m as u32).collect());
    Group::generate(m, vec![rot, refl]).expect("dihedral group within cap")
}

pub fn symmetric(n: usize) -> Group {
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Perm::from_cycles(n, &[&[1, 2]]).unwrap());
    }
    if n >= 3 {
        let cycle: Vec<usize> = (1..=n).collect();
        gens.push(Perm::from_cycles(n, &[&cycle]).unwrap());
    }
    Group::generate(n.max(1), gens).expect("symmetric group within cap")
}

/// Alternating group, generated by the 3-cycles `(1 2 k)`.
pub fn alternating(n: usize) -> Group {
    let gens = (3..=n)
        .map(|k| Perm::from_cycles(n, &[&[1, 2, k]]).unwrap())
        .collect();
    Group::generate(n.max(1), gens).expect("alternating group within cap")
}

pub fn elementary_abelian(p: usize, rank: usize) -> Group {
    let mut g = Group::trivial(1);
    for i in 0..rank {
        g = if i == 0 {
            cyclic(p)
        } else {
            direct_product(&g, &cyclic(p)).expect("elementary abelian within cap")
        };
    }
    g
}

/// Dicyclic group `<a, x | a^(2m), x^2 = a^m, a^x = a^-1>` of order `4m`
/// (Q8 for order 8, Q16 for order 16, C3 ⋊ C4 for order 12), as a regular
/// permutation group.
pub fn dicyclic(order: usize) -> Group {
    assert!(order >= 8 && order % 4 == 0, "dicyclic order must be a multiple of 4, >= 8");
    let two_m = order / 2;
    let m = two_m / 2;
    // element a^i x^j has index 2i + j
    let idx = |i: usize, j: usize| (2 * (i % two_m) + j) as u32;
    let mut table = vec![0u32; order * order];
    for i in 0..two_m {
        for j in 0..2 {
            for k in 0..two_m {
                for l in 0..2 {
                    let prod = if j == 0 {
                        idx(i + k, l)
                    } else if l == 0 {
                        idx(i + two_m - k, 1)
                    } else {
                        idx(i + two_m - k + m, 0)
                    };
                    table[(2 * i + j) * order + 2 * k + l] = prod;
                }
            }
        }
    }
    let t = CayleyTable::new(order, table, 0).expect("dicyclic table");
    t.to_group(&[2, 1], DEFAULT_ORDER_CAP).expect("dicyclic group")
}

/// PSL(2, 7) acting on the projective line over GF(7), points `0..6, ∞`.
pub fn psl2_7() -> Group {
    let inf = 7u32;
    let shift: Vec<u32> = (0..8).map(|x| if x == inf { inf } else { (x + 1) % 7 }).collect();
    let inv7 = |x: u32| (1..7).find(|y| (x * y) % 7 == 1).unwrap();
    let neg_recip: Vec<u32> = (0..8)
        .map(|x| match x {
            0 => inf,
            7 => 0,
            x => (7 - inv7(x)) % 7,
        })
        .collect();
    Group::generate(
        8,
        vec![
            Perm::from_images(shift).unwrap(),
            Perm::from_images(neg_recip).unwrap(),
        ],
    )
    .expect("PSL(2,7) within cap")
}

pub fn direct_product(g: &Group, h: &Group) -> Result<Group> {
    direct_product_with_cap(g, h, DEFAULT_ORDER_CAP)
}

/// `G × H` on `deg G + deg H` points.
pub fn direct_product_with_cap(g: &Group, h: &Group, cap: usize) -> Result<Group> {
    if g.order() * h.order() > cap {
        return Err(Error::OrderCap { cap });
    }
    let degree = g.degree() + h.degree();
    let gens = g
        .generators()
        .iter()
        .map(|p| p.shifted(0, degree))
        .chain(h.generators().iter().map(|p| p.shifted(g.degree(), degree)))
        .collect();
    Group::generate_with_cap(degree, gens, cap)
}

/// Extends generator images to a map on all of `N`, checking that the
/// result is a well-defined bijective homomorphism.
fn extend_to_automorphism(n: &Group, images: &[Perm]) -> Result<Vec<usize>> {
    let gens = n.generator_indices();
    if images.len() != gens.len() {
        return Err(Error::NotAutomorphism(format!(
            "expected {} generator images, got {}",
            gens.len(),
            images.len()
        )));
    }
    let img_idx = images
        .iter()
        .map(|p| {
            n.index_of(p)
                .ok_or_else(|| Error::NotAutomorphism(format!("{p} is not in N")))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut map = vec![usize::MAX; n.order()];
    map[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (&g, &gi) in gens.iter().zip(&img_idx) {
            let y = n.mul(x, g);
            let fy = n.mul(map[x], gi);
            if map[y] == usize::MAX {
                map[y] = fy;
                queue.push_back(y);
            } else if map[y] != fy {
                return Err(Error::NotAutomorphism("images violate a relation of N".into()));
            }
        }
    }
    let mut hit = vec![false; n.order()];
    for &v in &map {
        if std::mem::replace(&mut hit[v], true) {
            return Err(Error::NotAutomorphism("map is not injective".into()));
        }
    }
    Ok(map)
}

pub fn semidirect_product(n: &Group, h: &Group, action: &[Vec<Perm>]) -> Result<Group> {
    semidirect_product_with_cap(n, h, action, DEFAULT_ORDER_CAP)
}

/// `N ⋊ H` where `action[j]` lists the images of `N`'s generators under the
/// automorphism attached to `H`'s generator `j`.
///
/// Multiplication is `(n1, h1)(n2, h2) = (n1 φ_{h1}(n2), h1 h2)`; the result
/// is the regular representation of that Cayley table.
pub fn semidirect_product_with_cap(
    n: &Group,
    h: &Group,
    action: &[Vec<Perm>],
    cap: usize,
) -> Result<Group> {
    let (nn, nh) = (n.order(), h.order());
    if nn * nh > cap {
        return Err(Error::OrderCap { cap });
    }
    if action.len() != h.generator_indices().len() {
        return Err(Error::NotAutomorphism(format!(
            "expected an automorphism for each of {} generators of H",
            h.generator_indices().len()
        )));
    }
    let gen_maps = action
        .iter()
        .map(|imgs| extend_to_automorphism(n, imgs))
        .collect::<Result<Vec<_>>>()?;

    // phi[h] for every h in H, with phi_{hg} = phi_h ∘ phi_g.
    let mut phi: Vec<Option<Vec<usize>>> = vec![None; nh];
    phi[0] = Some((0..nn).collect());
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        let fx = phi[x].clone().expect("assigned");
        for (&g, fg) in h.generator_indices().iter().zip(&gen_maps) {
            let y = h.mul(x, g);
            let fy: Vec<usize> = (0..nn).map(|v| fx[fg[v]]).collect();
            match &phi[y] {
                None => {
                    phi[y] = Some(fy);
                    queue.push_back(y);
                }
                Some(existing) if *existing != fy => return Err(Error::RelationViolation),
                Some(_) => {}
            }
        }
    }
    let phi: Vec<Vec<usize>> = phi.into_iter().map(|p| p.expect("H is connected")).collect();

    let order = nn * nh;
    let pair = |a: usize, b: usize| a * nh + b;
    let mut table = vec![0u32; order * order];
    for n1 in 0..nn {
        for h1 in 0..nh {
            let row = pair(n1, h1) * order;
            for n2 in 0..nn {
                let left = n.mul(n1, phi[h1][n2]);
                for h2 in 0..nh {
                    table[row + pair(n2, h2)] = pair(left, h.mul(h1, h2)) as u32;
                }
            }
        }
    }
    let table = CayleyTable::new(order, table, 0)?;
    let gens: Vec<usize> = n
        .generator_indices()
        .iter()
        .map(|&g| pair(g, 0))
        .chain(h.generator_indices().iter().map(|&g| pair(0, g)))
        .collect();
    if gens.is_empty() {
        return Ok(Group::trivial(1));
    }
    table.to_group(&gens, cap)
}

pub fn wreath_regular(a: &Group, k: usize) -> Result<Group> {
    wreath_regular_with_cap(a, k, DEFAULT_ORDER_CAP)
}

/// `A ≀ C_k`: `A^k ⋊ C_k` with the top group cycling the coordinates.
pub fn wreath_regular_with_cap(a: &Group, k: usize, cap: usize) -> Result<Group> {
    if k == 0 {
        return Err(Error::MalformedParams("wreath product needs k >= 1".into()));
    }
    let base_order = a.order().checked_pow(k as u32).unwrap_or(usize::MAX);
    if base_order.saturating_mul(k) > cap {
        return Err(Error::OrderCap { cap });
    }
    let mut base = a.clone();
    for _ in 1..k {
        base = direct_product_with_cap(&base, a, cap)?;
    }
    let top = cyclic(k);
    let per_copy = a.generators().len();
    let deg = a.degree();
    let total = base.degree();
    let shift: Vec<Perm> = (0..k)
        .flat_map(|copy| {
            let target = (copy + 1) % k;
            a.generators()
                .iter()
                .map(move |g| g.shifted(target * deg, total))
        })
        .collect();
    debug_assert_eq!(shift.len(), per_copy * k);
    let action = if top.generators().is_empty() { vec![] } else { vec![shift] };
    semidirect_product_with_cap(&base, &top, &action, cap)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_orders() {
        assert_eq!(cyclic(1).order(), 1);
        assert_eq!(cyclic(12).order(), 12);
        assert_eq!(dihedral(8).order(), 8);
        assert_eq!(dihedral(4).order(), 4);
        assert_eq!(symmetric(4).order(), 24);
        assert_eq!(alternating(5).order(), 60);
        assert_eq!(alternating(6).order(), 360);
        assert_eq!(psl2_7().order(), 168);
        assert_eq!(elementary_abelian(3, 3).order(), 27);
        let q8 = dicyclic(8);
        assert_eq!(q8.order(), 8);
        assert_eq!(q8.order_statistics().get(&2), Some(&1));
        assert_eq!(dicyclic(16).order_statistics().get(&2), Some(&1));
    }

    #[test]
    fn direct_products() {
        let g = direct_product(&cyclic(2), &cyclic(3)).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.is_abelian());
        assert_eq!(g.order_statistics().get(&6), Some(&2));
        let s3 = symmetric(3);
        let same = direct_product(&s3, &Group::trivial(1)).unwrap();
        assert_eq!(same.order(), 6);
        assert_eq!(same.order_statistics(), s3.order_statistics());
        assert_eq!(
            direct_product_with_cap(&symmetric(4), &symmetric(4), 500).unwrap_err(),
            Error::OrderCap { cap: 500 }
        );
    }

    #[test]
    fn semidirect_c3_by_c2_inversion() {
        let c3 = cyclic(3);
        let c2 = cyclic(2);
        let r = c3.generators()[0].clone();
        let g = semidirect_product(&c3, &c2, &[vec![r.inverse()]]).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        assert_eq!(g.order_statistics(), symmetric(3).order_statistics());
    }

    #[test]
    fn semidirect_rejects_bad_actions() {
        let c3 = cyclic(3);
        let c2 = cyclic(2);
        // identity image for the generator is not injective-safe? it is, but
        // sending the generator to the identity is not bijective
        let e = Perm::identity(3);
        assert!(matches!(
            semidirect_product(&c3, &c2, &[vec![e]]),
            Err(Error::NotAutomorphism(_))
        ));
        // an order-3 automorphism cannot be attached to an involution of C2;
        // C7 has the order-3 automorphism x -> x^2
        let c7 = cyclic(7);
        let r = c7.generators()[0].clone();
        let sq = r.compose(&r).unwrap();
        assert_eq!(
            semidirect_product(&c7, &c2, &[vec![sq]]).unwrap_err(),
            Error::RelationViolation
        );
    }

    #[test]
    fn wreath_products() {
        let c2 = cyclic(2);
        let w = wreath_regular(&c2, 2).unwrap();
        assert_eq!(w.order(), 8);
        assert_eq!(w.order_statistics(), dihedral(8).order_statistics());
        let s3 = symmetric(3);
        assert_eq!(wreath_regular(&s3, 1).unwrap().order_statistics(), s3.order_statistics());
    }
}
