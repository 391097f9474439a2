//! Reading and writing the plain-text group format.

use subembed::construct::dihedral;
use subembed::corpus::{load_group, GroupSpecFile};

const TEXT: &str = "\
# the symmetric group on four points
name: S4
degree: 4
gens: (1 2), (1 2 3 4)
order: 24
";

fn main() -> subembed::Result<()> {
    let spec = GroupSpecFile::parse(TEXT)?;
    let g = load_group(&spec)?;
    println!("{} has order {}", spec.name, g.order());

    let out = GroupSpecFile::from_group("D10", &dihedral(10)).serialize();
    print!("{out}");
    let back = load_group(&GroupSpecFile::parse(&out)?)?;
    println!("round trip same elements: {}", back.same_elements(&dihedral(10)));

    match GroupSpecFile::parse("name: bad\ndegree: 3\ngens: (1 4)\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
