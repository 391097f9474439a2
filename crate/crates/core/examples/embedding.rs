//! Embedding properties of every subgroup class of S4.

use subembed::construct::symmetric;
use subembed::perm::parse_cycles;
use subembed::GroupAnalysis;

fn main() -> subembed::Result<()> {
    let a = GroupAnalysis::new(symmetric(4))?;
    let l = a.lattice();
    println!("order  s-perm  wsp    wss    c-norm compl  ss-suppl  H_sG");
    for class in l.conjugacy_classes() {
        let h = class[0];
        println!(
            "{:>5}  {:<6}  {:<5}  {:<5}  {:<5}  {:<5}  {:<8}  {}",
            l.get(h).order(),
            a.is_s_permutable(h),
            a.is_weakly_s_permutable(h).0,
            a.is_weakly_s_supplemented(h).0,
            a.is_c_normal(h),
            a.is_complemented(h),
            a.supersolvable_supplement(h).is_some(),
            l.get(a.h_sg(h)).order()
        );
    }

    let g = a.group();
    let gens = [parse_cycles("(1 2)", 4).unwrap(), parse_cycles("(3 4)", 4).unwrap()];
    let klein = a.id(&g.subgroup_from_perms(&gens)?)?;
    if let Some(w) = a.weakly_s_supplemented(klein) {
        println!(
            "{} is weakly s-supplemented by T = {} (H ∩ T of order {})",
            l.get(klein).describe(g),
            l.get(w.supplement).describe(g),
            l.get(w.intersection).order()
        );
    }
    Ok(())
}
