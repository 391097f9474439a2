//! Standard families and products, identified by fingerprint.

use subembed::construct::{
    alternating, cyclic, dicyclic, dihedral, direct_product, elementary_abelian, psl2_7, symmetric,
    wreath_regular,
};
use subembed::structure::{fingerprint, recognize};
use subembed::Group;

fn show(name: &str, g: &Group) {
    let fp = fingerprint(g);
    println!(
        "{name:<10} order {:>4}  recognized {:<8} nilpotent {:<5} supersolvable {}",
        g.order(),
        recognize(&fp).unwrap_or_else(|| "-".into()),
        fp.nilpotent,
        fp.supersolvable
    );
}

fn main() -> subembed::Result<()> {
    show("C12", &cyclic(12));
    show("D8", &dihedral(8));
    show("Q8", &dicyclic(8));
    show("C2^3", &elementary_abelian(2, 3));
    show("S4", &symmetric(4));
    show("A5", &alternating(5));
    show("PSL(2,7)", &psl2_7());
    show("D8 x C3", &direct_product(&dihedral(8), &cyclic(3))?);
    show("S3 wr C3", &wreath_regular(&symmetric(3), 3)?);
    Ok(())
}
