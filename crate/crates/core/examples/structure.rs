//! Chief series, solvability classes, p-length and hypercenters.

use subembed::construct::{alternating, cyclic, dihedral, direct_product, symmetric};
use subembed::structure::{
    chief_series, has_sylow_tower, is_nilpotent, is_solvable, is_supersolvable, p_length, u_hypercenter,
};
use subembed::Group;

fn describe(name: &str, g: &Group) {
    let cs = chief_series(g);
    let factors: Vec<usize> = cs.factors.iter().map(|f| f.order).collect();
    println!("{name}: |G| = {}, chief factors {factors:?}", g.order());
    println!(
        "  solvable {} supersolvable {} nilpotent {} Sylow tower {}",
        is_solvable(g),
        is_supersolvable(g),
        is_nilpotent(g),
        has_sylow_tower(g)
    );
    println!("  U-hypercenter order {}", u_hypercenter(g).order());
    for p in g.primes() {
        match p_length(g, p).p_length {
            Some(l) => println!("  {p}-length {l}"),
            None => println!("  not {p}-solvable"),
        }
    }
}

fn main() -> subembed::Result<()> {
    describe("S4", &symmetric(4));
    describe("A4 x C2", &direct_product(&alternating(4), &cyclic(2))?);
    describe("D8 x C3", &direct_product(&dihedral(8), &cyclic(3))?);
    describe("A5", &alternating(5));
    Ok(())
}
