//! The point and line stabilizers of GL(3,2) acting on the Fano plane: almost
//! conjugate, not conjugate, and indistinguishable by every local splitting type.

use arithsim::equivalence::{
    corollary_double_coset_test, is_almost_conjugate, local_splitting_type, sample_local_data,
    NotionKind,
};
use arithsim::permgroup::families::psl32_points_and_lines;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let g = psl32_points_and_lines();
    let points = g.point_stabilizer(0);
    let lines = g.point_stabilizer(7);
    println!("|G| = {}, |H1| = |H2| = {}", g.order(), points.order());
    println!(
        "almost conjugate: {}",
        is_almost_conjugate(&g, &points, &lines)
    );
    println!("conjugate: {}", g.are_conjugate(&points, &lines));
    println!(
        "double coset counts agree on cyclic subgroups: {}",
        corollary_double_coset_test(&g, &points, &lines)
    );
    for kind in NotionKind::ALL {
        println!(
            "{kind}: {}",
            arithsim::equivalence::check_notion(&g, &points, &lines, kind)
        );
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let data = sample_local_data(&g, 200, &mut rng);
    let agree = data
        .iter()
        .filter(|d| local_splitting_type(&g, d, &points) == local_splitting_type(&g, d, &lines))
        .count();
    println!(
        "local splitting types agree on {agree} of {} sampled local data",
        data.len()
    );
}
