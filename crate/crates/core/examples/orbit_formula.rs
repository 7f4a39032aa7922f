//! Recovering the orbit sizes of a cyclic action from the number of orbits of
//! each subgroup, checked against a direct orbit walk.

use arithsim::cyclic_orbits::{
    brute_force_spectrum, lemma_tr_check, lemma_tr_pairs, n_value, orbit_spectrum,
    table_from_action, CyclicAction,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // a 12-cycle's generator acting on two orbits of sizes 4 and 6 plus a fixed point
    let mut images: Vec<usize> = (0..11).collect();
    for (start, len) in [(0, 4), (4, 6)] {
        for i in 0..len {
            images[start + i] = start + (i + 1) % len;
        }
    }
    let action = CyclicAction::new(12, images)?;
    let table = table_from_action(&action);
    println!("{:>4} {:>4} {:>4}", "m", "M_m", "N_m");
    for (&m, &count) in table.counts() {
        println!("{m:>4} {count:>4} {:>4}", n_value(&table, m)?);
    }
    let spectrum = orbit_spectrum(&table)?;
    println!("orbit sizes from the formula: {}", spectrum.to_multiset());
    println!(
        "orbit sizes by walking:       {}",
        brute_force_spectrum(&action).to_multiset()
    );
    let windows = lemma_tr_pairs(12);
    let holding = windows
        .iter()
        .filter(|&&(t, m)| lemma_tr_check(&table, &spectrum, t, m) == Ok(true))
        .count();
    println!(
        "trace identity holds on {holding} of {} windows",
        windows.len()
    );
    Ok(())
}
