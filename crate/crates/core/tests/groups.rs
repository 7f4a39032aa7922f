mod common;

use arithsim::equivalence::*;
use arithsim::multiset::Multiset;
use arithsim::permgroup::families::*;
use arithsim::permgroup::{PermGroup, Permutation};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn sample_groups() -> Vec<PermGroup> {
    let mut groups: Vec<PermGroup> = common::small_groups().into_iter().map(|(_, g)| g).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(60);
    groups.extend(common::random_small_groups(&mut rng, 6, 8, 60));
    groups
}

#[test]
fn class_equation_lagrange_and_sylow() {
    for g in sample_groups() {
        let n = g.order() as u64;
        let sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.len()).collect();
        assert_eq!(sizes.iter().sum::<usize>(), g.order());
        assert!(sizes.iter().all(|&s| n.is_multiple_of(s as u64)));
        for h in common::two_generated_subgroups(&g) {
            assert_eq!(n % h.order() as u64, 0);
        }
        for p in common::prime_divisors(n) {
            let sylow = g.sylow_subgroup(p).unwrap();
            assert_eq!(sylow.order() as u64, p.pow(common::valuation(n, p)));
            for &x in sylow.members() {
                let o = g.element_order(x);
                assert_eq!(o, p.pow(common::valuation(o, p)));
            }
        }
    }
}

#[test]
fn sylow_subgroups_project_onto_sylow_subgroups() {
    for g in sample_groups() {
        let normals: Vec<_> = common::two_generated_subgroups(&g)
            .into_iter()
            .filter(|h| g.is_normal(h) && h.order() > 1 && h.order() < g.order())
            .collect();
        for n in normals {
            let q = g.quotient(&n).unwrap();
            let index = (g.order() / n.order()) as u64;
            assert_eq!(q.group.order() as u64, index);
            for p in common::prime_divisors(g.order() as u64) {
                let image = q.image(&g.sylow_subgroup(p).unwrap());
                assert_eq!(image.order() as u64, p.pow(common::valuation(index, p)));
            }
        }
    }
}

#[test]
fn normal_cores_and_double_cosets() {
    for g in sample_groups() {
        let subgroups = common::two_generated_subgroups(&g);
        let normals: Vec<_> = subgroups.iter().filter(|h| g.is_normal(h)).collect();
        for h in subgroups.iter().take(30) {
            let core = g.normal_core(h);
            assert!(g.is_normal(&core));
            assert!(core.is_subgroup_of(h));
            for n in normals.iter().filter(|n| n.is_subgroup_of(h)) {
                assert!(n.is_subgroup_of(&core));
            }
            for k in subgroups.iter().take(10) {
                let cosets = g.double_cosets(h, k);
                assert_eq!(cosets.iter().map(Vec::len).sum::<usize>(), g.order());
                assert_eq!(g.double_coset_count(h, k), g.double_coset_count(k, h));
            }
        }
    }
}

#[test]
fn implication_chain_and_corollary() {
    for g in sample_groups().into_iter().filter(|g| g.order() <= 36) {
        let subgroups = common::two_generated_subgroups(&g);
        for h1 in &subgroups {
            for h2 in &subgroups {
                let almost = is_almost_conjugate(&g, h1, h2);
                let covers = conjugacy_covers_equal(&g, h1, h2);
                let sylow = sylow_covers_equal(&g, h1, h2);
                if almost {
                    assert!(covers);
                    assert!(cores_equal(&g, h1, h2));
                }
                if covers {
                    assert!(sylow);
                }
                assert_eq!(almost, corollary_double_coset_test(&g, h1, h2));
            }
        }
    }
}

fn lcm_of(s: &Multiset) -> u64 {
    s.lcm_of().unwrap()
}

#[test]
fn local_types_respect_each_notion() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for g in sample_groups().into_iter().filter(|g| g.order() <= 24) {
        let subgroups = common::two_generated_subgroups(&g);
        let data = sample_local_data(&g, 25, &mut rng);
        let types: Vec<Vec<Multiset>> = subgroups
            .iter()
            .map(|h| {
                data.iter()
                    .map(|d| local_splitting_type(&g, d, h))
                    .collect()
            })
            .collect();
        for (i, h1) in subgroups.iter().enumerate() {
            for (j, h2) in subgroups.iter().enumerate() {
                for (s1, s2) in types[i].iter().zip(&types[j]) {
                    if is_almost_conjugate(&g, h1, h2) {
                        assert_eq!(s1, s2);
                    }
                    if conjugacy_covers_equal(&g, h1, h2) {
                        assert_eq!(s1.contains(1), s2.contains(1));
                    }
                    if sylow_covers_equal(&g, h1, h2) {
                        assert_eq!(s1.gcd_of().unwrap(), s2.gcd_of().unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn unramified_data_give_coset_cycle_types() {
    for g in sample_groups().into_iter().filter(|g| g.order() <= 24) {
        for h in common::two_generated_subgroups(&g).iter().take(12) {
            for x in 0..g.order() {
                let datum = LocalDatum::unramified(&g, x);
                let direct = g.coset_action_cycle_type(h, g.element(x)).unwrap();
                assert_eq!(local_splitting_type(&g, &datum, h), direct);
            }
        }
    }
}

#[test]
fn formula_route_agrees_with_direct_orbits() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for g in sample_groups() {
        let subgroups = common::two_generated_subgroups(&g);
        for datum in sample_local_data(&g, 12, &mut rng) {
            for h in &subgroups {
                let via = local_splitting_via_formula(&g, &datum, h).unwrap();
                assert_eq!(via.splitting_type, local_splitting_type(&g, &datum, h));
            }
        }
    }
}

#[test]
fn equal_cores_do_not_force_equal_lcm() {
    let g = symmetric(3);
    let swap = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
    let rotation = Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap();
    let datum = LocalDatum::from_permutations(&g, &[rotation], &swap).unwrap();
    let h1 = g.subgroup(&[swap]).unwrap();
    let h2 = g.trivial();
    assert!(cores_equal(&g, &h1, &h2));
    assert_eq!(lcm_of(&local_splitting_type(&g, &datum, &h1)), 1);
    assert_eq!(lcm_of(&local_splitting_type(&g, &datum, &h2)), 2);
}

#[test]
fn psl32_stabilizers_share_every_local_type() {
    let g = psl32_points_and_lines();
    let (h1, h2) = (g.point_stabilizer(0), g.point_stabilizer(7));
    assert!(is_almost_conjugate(&g, &h1, &h2));
    assert!(!g.are_conjugate(&h1, &h2));
    assert!(corollary_double_coset_test(&g, &h1, &h2));
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for datum in sample_local_data(&g, 200, &mut rng) {
        assert_eq!(
            local_splitting_type(&g, &datum, &h1),
            local_splitting_type(&g, &datum, &h2)
        );
    }
}
