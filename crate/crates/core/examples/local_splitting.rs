//! Splitting types of ramified primes in the S3 model: with inertia A3 and
//! Frobenius a transposition, the fields fixed by a transposition and by the
//! trivial group have equal normal cores yet different lcm statistics.

use arithsim::equivalence::{
    cores_equal, local_splitting_type, local_splitting_via_formula, LocalDatum,
};
use arithsim::permgroup::families::symmetric;
use arithsim::permgroup::Permutation;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = symmetric(3);
    let rotation = Permutation::from_cycles(3, &[&[0, 1, 2]])?;
    let swap = Permutation::from_cycles(3, &[&[0, 1]])?;
    let datum = LocalDatum::from_permutations(&g, &[rotation], &swap)?;
    let cubic = g.subgroup(&[swap])?;
    let sextic = g.trivial();
    for (name, h) in [("H = <(0 1)>", &cubic), ("H = {e}", &sextic)] {
        let s = local_splitting_type(&g, &datum, h);
        let via = local_splitting_via_formula(&g, &datum, h)?;
        println!(
            "{name}: S = {s}, lcm = {}, from orbit counts {:?}",
            s.lcm_of()?,
            via.table.counts()
        );
    }
    println!("cores equal: {}", cores_equal(&g, &cubic, &sextic));
    Ok(())
}
