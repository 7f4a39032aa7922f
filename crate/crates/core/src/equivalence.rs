//! Group-theoretic shadows of arithmetic similarity.
//!
//! For number fields `K_1, K_2` inside a Galois extension with group `G`,
//! each notion of similarity corresponds to a relation between the
//! stabilizers `H_1, H_2 <= G`:
//!
//! | notion                    | relation                                   |
//! |---------------------------|--------------------------------------------|
//! | arithmetic equivalence    | almost conjugate                           |
//! | Kronecker equivalence     | conjugacy cover one another                |
//! | weak Kronecker            | Sylow subgroups conjugacy cover one another|
//! | ultra-coarse equivalence  | equal normal cores                         |
//!
//! The splitting type of a prime, ramified or not, is modelled by a
//! [`LocalDatum`] `(I, c)`: `C = <c>` acts on the double cosets `I \ G / H`
//! and the orbit sizes are the residue degrees of the field fixed by `H`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::arith::{divisors, factorize};
use crate::cyclic_orbits::{self, CyclicActionTable, OrbitError, OrbitSpectrum};
use crate::multiset::Multiset;
use crate::permgroup::{GroupError, PermGroup, Permutation, Subgroup};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EquivalenceError {
    #[error("invalid local datum: {0} does not normalize the inertia subgroup")]
    InvalidDatum(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Orbit(#[from] OrbitError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NotionKind {
    #[serde(rename = "arith")]
    ArithmeticEquivalence,
    Kronecker,
    WeakKronecker,
    UltraCoarse,
}

impl NotionKind {
    pub const ALL: [NotionKind; 4] = [
        NotionKind::ArithmeticEquivalence,
        NotionKind::Kronecker,
        NotionKind::WeakKronecker,
        NotionKind::UltraCoarse,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            NotionKind::ArithmeticEquivalence => "arith",
            NotionKind::Kronecker => "kronecker",
            NotionKind::WeakKronecker => "weak-kronecker",
            NotionKind::UltraCoarse => "ultra-coarse",
        }
    }
}

impl fmt::Display for NotionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for NotionKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NotionKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| format!("unknown notion {s:?}"))
    }
}

/// An inertia subgroup `I` together with a lift `c` of Frobenius normalizing it;
/// the decomposition group is `I<c>`.
#[derive(Clone)]
pub struct LocalDatum<'g> {
    inertia: Subgroup<'g>,
    frobenius: usize,
}

impl<'g> LocalDatum<'g> {
    pub fn new(inertia: Subgroup<'g>, frobenius: usize) -> Result<Self, EquivalenceError> {
        let group = inertia.ambient();
        let normalizes = inertia
            .generators()
            .iter()
            .all(|&x| inertia.contains(group.conjugate(frobenius, x)));
        if !normalizes {
            return Err(EquivalenceError::InvalidDatum(
                group.element(frobenius).to_string(),
            ));
        }
        Ok(Self { inertia, frobenius })
    }

    pub fn from_permutations(
        group: &'g PermGroup,
        inertia_generators: &[Permutation],
        frobenius: &Permutation,
    ) -> Result<Self, EquivalenceError> {
        let inertia = group.subgroup(inertia_generators)?;
        let c = group.require(frobenius)?;
        Self::new(inertia, c)
    }

    /// The datum of a prime unramified in the closure with Frobenius `g`.
    pub fn unramified(group: &'g PermGroup, frobenius: usize) -> Self {
        Self {
            inertia: group.trivial(),
            frobenius,
        }
    }

    pub fn inertia(&self) -> &Subgroup<'g> {
        &self.inertia
    }

    pub fn frobenius(&self) -> usize {
        self.frobenius
    }

    pub fn decomposition_group(&self) -> Subgroup<'g> {
        let mut gens = self.inertia.generators().to_vec();
        gens.push(self.frobenius);
        self.inertia.ambient().generate(&gens)
    }
}

impl fmt::Debug for LocalDatum<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LocalDatum")
            .field("inertia", &self.inertia)
            .field("frobenius", self.inertia.ambient().element(self.frobenius))
            .finish()
    }
}

fn same_group(g: &PermGroup, h: &Subgroup<'_>) -> bool {
    std::ptr::eq(g, h.ambient())
}

/// `|g^G ∩ H_1| = |g^G ∩ H_2|` for every class.
pub fn is_almost_conjugate(g: &PermGroup, h1: &Subgroup<'_>, h2: &Subgroup<'_>) -> bool {
    debug_assert!(same_group(g, h1) && same_group(g, h2));
    g.conjugacy_classes()
        .iter()
        .all(|cls| g.class_intersection_count(cls, h1) == g.class_intersection_count(cls, h2))
}

/// The classes of `G` meeting `H`; their union is `∪_g gHg^{-1}`.
fn classes_met(g: &PermGroup, h: &Subgroup<'_>) -> Vec<bool> {
    let mut met = vec![false; g.conjugacy_classes().len()];
    for &x in h.members() {
        met[g.class_index(x)] = true;
    }
    met
}

pub fn conjugacy_covers_equal(g: &PermGroup, h1: &Subgroup<'_>, h2: &Subgroup<'_>) -> bool {
    classes_met(g, h1) == classes_met(g, h2)
}

/// For each prime `q | |G|`, Sylow `q`-subgroups of `H_1` and `H_2` conjugacy cover one another.
pub fn sylow_covers_equal(g: &PermGroup, h1: &Subgroup<'_>, h2: &Subgroup<'_>) -> bool {
    factorize(g.order() as u64).into_iter().all(|(q, _)| {
        let p1 = h1.sylow(q).expect("q is prime");
        let p2 = h2.sylow(q).expect("q is prime");
        conjugacy_covers_equal(g, &p1, &p2)
    })
}

pub fn cores_equal(g: &PermGroup, h1: &Subgroup<'_>, h2: &Subgroup<'_>) -> bool {
    g.normal_core(h1) == g.normal_core(h2)
}

/// `|C \ G / H_1| = |C \ G / H_2|` for every cyclic subgroup `C`.
pub fn corollary_double_coset_test(g: &PermGroup, h1: &Subgroup<'_>, h2: &Subgroup<'_>) -> bool {
    g.cyclic_subgroups()
        .iter()
        .all(|c| g.double_coset_count(c, h1) == g.double_coset_count(c, h2))
}

pub fn check_notion(g: &PermGroup, h1: &Subgroup<'_>, h2: &Subgroup<'_>, kind: NotionKind) -> bool {
    match kind {
        NotionKind::ArithmeticEquivalence => is_almost_conjugate(g, h1, h2),
        NotionKind::Kronecker => conjugacy_covers_equal(g, h1, h2),
        NotionKind::WeakKronecker => sylow_covers_equal(g, h1, h2),
        NotionKind::UltraCoarse => cores_equal(g, h1, h2),
    }
}

/// The double coset space `I \ G / H` with the permutation of its blocks induced by `x`.
struct DoubleCosetSpace {
    block_of: Vec<usize>,
    representatives: Vec<usize>,
}

impl DoubleCosetSpace {
    fn new(g: &PermGroup, inertia: &Subgroup<'_>, h: &Subgroup<'_>) -> Self {
        let blocks = g.double_cosets(inertia, h);
        let mut block_of = vec![0; g.order()];
        for (i, block) in blocks.iter().enumerate() {
            for &x in block {
                block_of[x] = i;
            }
        }
        let representatives = blocks.iter().map(|b| b[0]).collect();
        Self {
            block_of,
            representatives,
        }
    }

    /// `I y H -> I (x y) H`; well defined when `x` normalizes `I`.
    fn translation(&self, g: &PermGroup, x: usize) -> Vec<usize> {
        self.representatives
            .iter()
            .map(|&r| self.block_of[g.mul(x, r)])
            .collect()
    }
}

fn orbit_sizes(images: &[usize]) -> Multiset {
    let p = Permutation::new(images.to_vec()).expect("translation permutes double cosets");
    p.cycle_type()
}

/// Orbit sizes of `<c>` on `I \ G / H`.
pub fn local_splitting_type(g: &PermGroup, datum: &LocalDatum<'_>, h: &Subgroup<'_>) -> Multiset {
    let space = DoubleCosetSpace::new(g, &datum.inertia, h);
    orbit_sizes(&space.translation(g, datum.frobenius))
}

/// The same multiset recovered from the orbit counts of the subgroups `<c^m>`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaSplitting {
    pub splitting_type: Multiset,
    pub table: CyclicActionTable,
    pub n_values: BTreeMap<u64, u64>,
    pub spectrum: OrbitSpectrum,
}

pub fn local_splitting_via_formula(
    g: &PermGroup,
    datum: &LocalDatum<'_>,
    h: &Subgroup<'_>,
) -> Result<FormulaSplitting, EquivalenceError> {
    let space = DoubleCosetSpace::new(g, &datum.inertia, h);
    let n = g.element_order(datum.frobenius);
    let counts = divisors(n)
        .into_iter()
        .map(|m| {
            let cm = g.pow(datum.frobenius, m);
            let images = space.translation(g, cm);
            (m, orbit_sizes(&images).cardinality() as u64)
        })
        .collect();
    let table = CyclicActionTable::new(n, counts)?;
    let n_values = divisors(n)
        .into_iter()
        .map(|m| Ok((m, cyclic_orbits::n_value(&table, m)?)))
        .collect::<Result<_, OrbitError>>()?;
    let spectrum = cyclic_orbits::orbit_spectrum(&table)?;
    Ok(FormulaSplitting {
        splitting_type: spectrum.to_multiset(),
        table,
        n_values,
        spectrum,
    })
}

/// Random local data: `I` generated by at most two random elements and `c` drawn
/// from its normalizer, plus one unramified datum and one with `I = G`.
pub fn sample_local_data<'g, R: Rng + ?Sized>(
    g: &'g PermGroup,
    count: usize,
    rng: &mut R,
) -> Vec<LocalDatum<'g>> {
    let order = g.order();
    let mut out = Vec::with_capacity(count.max(2));
    out.push(LocalDatum::unramified(g, rng.gen_range(0..order)));
    out.push(LocalDatum {
        inertia: g.whole(),
        frobenius: rng.gen_range(0..order),
    });
    while out.len() < count {
        let k = rng.gen_range(0..=2);
        let gens: Vec<usize> = (0..k).map(|_| rng.gen_range(0..order)).collect();
        let inertia = g.generate(&gens);
        let normalizer = g.normalizer(&inertia);
        let c = normalizer.members()[rng.gen_range(0..normalizer.order())];
        out.push(LocalDatum::new(inertia, c).expect("c lies in the normalizer"));
    }
    out
}

/// Every datum `(I, c)` with `I` generated by at most two elements and `c` in its normalizer.
pub fn all_local_data(g: &PermGroup) -> Vec<LocalDatum<'_>> {
    let mut seen = std::collections::HashSet::new();
    let mut inertias = Vec::new();
    for a in 0..g.order() {
        for b in a..g.order() {
            let s = g.generate(&[a, b]);
            if seen.insert(s.members().to_vec()) {
                inertias.push(s);
            }
        }
    }
    let mut out = Vec::new();
    for inertia in inertias {
        let normalizer = g.normalizer(&inertia);
        for &c in normalizer.members() {
            out.push(LocalDatum {
                inertia: inertia.clone(),
                frobenius: c,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::families::*;

    fn perm(degree: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(degree, cycles).unwrap()
    }

    struct S3Fixture {
        g: PermGroup,
    }

    impl S3Fixture {
        fn new() -> Self {
            Self { g: symmetric(3) }
        }
        fn a3(&self) -> Subgroup<'_> {
            self.g.subgroup(&[perm(3, &[&[0, 1, 2]])]).unwrap()
        }
        fn t(&self) -> Subgroup<'_> {
            self.g.subgroup(&[perm(3, &[&[0, 1]])]).unwrap()
        }
        fn datum(&self) -> LocalDatum<'_> {
            LocalDatum::from_permutations(&self.g, &[perm(3, &[&[0, 1, 2]])], &perm(3, &[&[0, 1]]))
                .unwrap()
        }
    }

    #[test]
    fn almost_conjugacy() {
        let s = S3Fixture::new();
        assert!(is_almost_conjugate(&s.g, &s.t(), &s.t()));
        let other = s.g.subgroup(&[perm(3, &[&[1, 2]])]).unwrap();
        assert!(is_almost_conjugate(&s.g, &s.t(), &other));
        assert!(!is_almost_conjugate(&s.g, &s.a3(), &s.t()));

        let psl = psl32_points_and_lines();
        let (p, l) = (psl.point_stabilizer(0), psl.point_stabilizer(7));
        assert!(is_almost_conjugate(&psl, &p, &l));
        assert!(!psl.are_conjugate(&p, &l));
    }

    #[test]
    fn covers_and_cores() {
        let s = S3Fixture::new();
        let other = s.g.subgroup(&[perm(3, &[&[0, 2]])]).unwrap();
        assert!(conjugacy_covers_equal(&s.g, &s.t(), &other));
        assert!(!conjugacy_covers_equal(&s.g, &s.a3(), &s.t()));

        assert!(sylow_covers_equal(&s.g, &s.t(), &s.t()));
        assert!(sylow_covers_equal(&s.g, &s.t(), &other));
        assert!(!sylow_covers_equal(&s.g, &s.a3(), &s.t()));

        assert!(cores_equal(&s.g, &s.t(), &s.g.trivial()));
        assert!(!cores_equal(&s.g, &s.a3(), &s.g.trivial()));
        assert!(cores_equal(&s.g, &s.t(), &other));
    }

    #[test]
    fn double_coset_corollary() {
        let s = S3Fixture::new();
        assert!(corollary_double_coset_test(&s.g, &s.t(), &s.t()));
        assert!(!corollary_double_coset_test(&s.g, &s.a3(), &s.t()));
        // C = A3: two double cosets against A3, one against <(0 1)>
        let a3 = s.a3();
        assert_eq!(
            (
                s.g.double_coset_count(&a3, &a3),
                s.g.double_coset_count(&a3, &s.t())
            ),
            (2, 1)
        );
        let psl = psl32_points_and_lines();
        assert!(corollary_double_coset_test(
            &psl,
            &psl.point_stabilizer(0),
            &psl.point_stabilizer(7)
        ));
    }

    #[test]
    fn local_splitting_examples() {
        let s = S3Fixture::new();
        let d = s.datum();
        assert_eq!(
            local_splitting_type(&s.g, &d, &s.t()).to_sorted_vec(),
            vec![1]
        );
        assert_eq!(
            local_splitting_type(&s.g, &d, &s.g.trivial()).to_sorted_vec(),
            vec![2]
        );
        for h in [s.t(), s.g.trivial(), s.a3(), s.g.whole()] {
            let via = local_splitting_via_formula(&s.g, &d, &h).unwrap();
            assert_eq!(via.splitting_type, local_splitting_type(&s.g, &d, &h));
        }
        // unramified: cycle type on G/H
        for x in 0..s.g.order() {
            let d = LocalDatum::unramified(&s.g, x);
            let expected = s.g.coset_action_cycle_type(&s.t(), s.g.element(x)).unwrap();
            assert_eq!(local_splitting_type(&s.g, &d, &s.t()), expected);
        }
        // I = G and H = G both collapse to a single fixed block
        let full = LocalDatum::new(s.g.whole(), 1).unwrap();
        assert_eq!(
            local_splitting_via_formula(&s.g, &full, &s.t())
                .unwrap()
                .splitting_type
                .to_sorted_vec(),
            vec![1]
        );
        assert_eq!(
            local_splitting_via_formula(&s.g, &d, &s.g.whole())
                .unwrap()
                .splitting_type
                .to_sorted_vec(),
            vec![1]
        );
    }

    #[test]
    fn invalid_datum() {
        let s = S3Fixture::new();
        let err =
            LocalDatum::from_permutations(&s.g, &[perm(3, &[&[0, 1]])], &perm(3, &[&[0, 1, 2]]));
        assert!(matches!(err, Err(EquivalenceError::InvalidDatum(_))));
    }

    #[test]
    fn notion_dispatch() {
        let s = S3Fixture::new();
        assert!(!check_notion(
            &s.g,
            &s.a3(),
            &s.t(),
            NotionKind::UltraCoarse
        ));
        for kind in NotionKind::ALL {
            assert!(check_notion(&s.g, &s.a3(), &s.a3(), kind));
            assert_eq!(kind.as_str().parse::<NotionKind>(), Ok(kind));
        }
        let psl = psl32_points_and_lines();
        let (p, l) = (psl.point_stabilizer(0), psl.point_stabilizer(7));
        assert!(check_notion(
            &psl,
            &p,
            &l,
            NotionKind::ArithmeticEquivalence
        ));
        assert_eq!(
            serde_json::to_string(&NotionKind::WeakKronecker).unwrap(),
            "\"weak-kronecker\""
        );
        assert_eq!(
            serde_json::to_string(&NotionKind::ArithmeticEquivalence).unwrap(),
            "\"arith\""
        );
    }

    #[test]
    fn sampled_data_are_valid() {
        use rand::SeedableRng;
        let g = symmetric(4);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let data = sample_local_data(&g, 50, &mut rng);
        assert_eq!(data.len(), 50);
        assert_eq!(data[0].inertia().order(), 1);
        assert_eq!(data[1].inertia().order(), 24);
        for d in &data {
            assert!(LocalDatum::new(d.inertia().clone(), d.frobenius()).is_ok());
            let dec = d.decomposition_group();
            assert!(d.inertia().is_subgroup_of(&dec));
            for &x in dec.generators() {
                for &y in d.inertia().generators() {
                    assert!(d.inertia().contains(g.conjugate(x, y)));
                }
            }
        }
    }
}
