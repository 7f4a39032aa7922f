//! Conjugacy classes, Sylow subgroups, quotients and normal cores of small groups.

use arithsim::arith::factorize;
use arithsim::permgroup::families::{alternating, dihedral, symmetric};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (name, g) in [
        ("S4", symmetric(4)),
        ("A5", alternating(5)),
        ("D6", dihedral(6)),
    ] {
        let mut sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        println!("{name}: order {}, class sizes {sizes:?}", g.order());
        for (p, _) in factorize(g.order() as u64) {
            println!(
                "  Sylow {p}-subgroup of order {}",
                g.sylow_subgroup(p)?.order()
            );
        }
        let stabilizer = g.point_stabilizer(0);
        println!(
            "  point stabilizer of order {} has core of order {}, {} cyclic subgroups in total",
            stabilizer.order(),
            g.normal_core(&stabilizer).order(),
            g.cyclic_subgroups().len()
        );
    }
    let s4 = symmetric(4);
    let v4 = s4.normal_core(&s4.sylow_subgroup(2)?);
    let q = s4.quotient(&v4)?;
    println!("S4 / V4 has order {}", q.group.order());
    Ok(())
}
