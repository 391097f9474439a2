//! S3 wr C3 and its subgroup O^2: complemented maximal subgroups of the
//! Sylow 3-subgroup, yet 3-length 2.

use subembed::harness::build_example42;

fn main() -> subembed::Result<()> {
    let (_, _, r) = build_example42()?;
    println!("|B| = {}, |G| = {}", r.b_order, r.g_order);
    println!("O_3(G): order {}, elementary abelian {}", r.o3_order, r.o3_elementary_abelian);
    println!("G/O_3(G) recognized as {}", r.quotient_name.as_deref().unwrap_or("?"));
    println!(
        "Sylow 3 of order {} has {} maximal subgroups, complemented {}, weakly s-supplemented {}",
        r.sylow3_order, r.maximal_in_sylow3, r.all_complemented, r.all_weakly_s_supplemented
    );
    println!("3-length {:?}", r.p_length_3);
    Ok(())
}
