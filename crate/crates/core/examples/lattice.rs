//! Full subgroup lattice of a small group, with a Graphviz rendering.

use subembed::construct::symmetric;
use subembed::report::lattice_dot;
use subembed::SubgroupLattice;

fn main() -> subembed::Result<()> {
    let g = symmetric(4);
    let l = SubgroupLattice::enumerate(&g)?;
    println!("S4: {} subgroups in {} classes", l.len(), l.conjugacy_classes().len());
    for class in l.conjugacy_classes() {
        let h = l.get(class[0]);
        println!(
            "  order {:>2} x{}  normal {:<5} e.g. {}",
            h.order(),
            class.len(),
            l.is_normal(class[0]),
            h.describe(&g)
        );
    }
    for p in g.primes() {
        let s = l.sylow(p);
        println!("Sylow {p}: {} conjugates of order {}", s.conjugates.len(), l.get(s.representative).order());
    }
    println!("Frattini order {}, socle order {}", l.frattini(&g).order(), l.socle(&g).order());
    print!("{}", lattice_dot("S4", &l));
    Ok(())
}
