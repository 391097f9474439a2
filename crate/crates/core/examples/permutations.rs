//! Permutation arithmetic and closure under generators.

use subembed::perm::parse_cycles;
use subembed::{Group, Perm};

fn main() -> subembed::Result<()> {
    let a = parse_cycles("(1 2 3)", 4).expect("valid cycle");
    let b = parse_cycles("(3 4)", 4).expect("valid cycle");
    // left to right: a first, then b
    let ab = a.compose(&b)?;
    println!("a = {a}, b = {b}, ab = {ab}, order {}", ab.order());
    println!("(ab)^-1 = {}", ab.inverse());

    let t = Perm::from_cycles(5, &[&[1, 2], &[3, 4, 5]])?;
    println!("{t} has cycles {:?} and order {}", t.cycles(), t.order());

    let g = Group::generate(4, vec![a, b])?;
    println!("<a, b> has order {}", g.order());
    for (k, n) in g.order_statistics() {
        println!("  {n} elements of order {k}");
    }
    Ok(())
}
