//! Finite permutation groups with full element enumeration.
//!
//! Every group is closed out to an explicit, lexicographically sorted element
//! list (capped at [`DEFAULT_MAX_ORDER`] unless configured otherwise), and
//! elements are addressed by their index in that list. Subgroups are subsets
//! of the ambient index space, which turns membership, intersection and
//! coset bookkeeping into array lookups.
//!
//! Composition is right-to-left: `(g * h)(x) = g(h(x))`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, valuation};
use crate::multiset::Multiset;

pub const DEFAULT_MAX_ORDER: usize = 20_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("group order exceeds the cap of {cap}")]
    GroupTooLarge { cap: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("permutation of degree {found} used with a group of degree {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("{0} is not an element of the group")]
    NotMember(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("subgroup belongs to a different ambient group")]
    ForeignSubgroup,
}

/// A bijection of `0..degree`, stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, GroupError> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(GroupError::InvalidPermutation(format!("{images:?}")));
            }
        }
        Ok(Self { images })
    }

    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from disjoint cycles, e.g. `&[&[0, 1, 2]]` for `(0 1 2)`.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, GroupError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= degree || std::mem::replace(&mut touched[x], true) {
                    return Err(GroupError::InvalidPermutation(format!("{cycles:?}")));
                }
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Self { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self * other`, applying `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Self {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Self { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn cycle_type(&self) -> Multiset {
        let mut seen = vec![false; self.images.len()];
        let mut out = Multiset::new();
        for start in 0..self.images.len() {
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            if len > 0 {
                out.insert(len).expect("cycle lengths are positive");
            }
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycle_type().lcm_of().unwrap_or(1)
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation with fixed points omitted; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.images.len()];
        let mut wrote = false;
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            f.write_str("(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
                first = false;
                x = self.images[x];
            }
            f.write_str(")")?;
            wrote = true;
        }
        if !wrote {
            f.write_str("()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.images.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let images = Vec::<usize>::deserialize(deserializer)?;
        Permutation::new(images).map_err(serde::de::Error::custom)
    }
}

/// On-disk description of a group: `{"degree": d, "generators": [[...], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

impl GroupFile {
    pub fn build(&self, max_order: usize) -> Result<PermGroup, GroupError> {
        PermGroup::closure_with_cap(self.degree, &self.generators, max_order)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Smallest member index.
    pub representative: usize,
    /// Member indices, ascending.
    pub members: Vec<usize>,
}

impl ConjugacyClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

struct ClassData {
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
}

pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    generator_indices: Vec<usize>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    inverses: Vec<usize>,
    classes: OnceLock<ClassData>,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl PermGroup {
    pub fn closure(degree: usize, generators: &[Permutation]) -> Result<Self, GroupError> {
        Self::closure_with_cap(degree, generators, DEFAULT_MAX_ORDER)
    }

    /// Breadth-first closure of `generators`, failing once more than `cap` elements appear.
    pub fn closure_with_cap(
        degree: usize,
        generators: &[Permutation],
        cap: usize,
    ) -> Result<Self, GroupError> {
        for g in generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let identity = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::from([identity.clone()]);
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for g in generators {
                let y = x.compose(g);
                if !seen.contains(&y) {
                    if seen.len() >= cap {
                        return Err(GroupError::GroupTooLarge { cap });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort_unstable();
        let index: HashMap<Permutation, usize> = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let inverses = elements.iter().map(|p| index[&p.inverse()]).collect();
        let generator_indices = generators.iter().map(|g| index[g]).collect();
        Ok(Self {
            degree,
            generators: generators.to_vec(),
            generator_indices,
            elements,
            index,
            inverses,
            classes: OnceLock::new(),
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    /// The identity is the lexicographically smallest element.
    pub fn identity(&self) -> usize {
        0
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn require(&self, p: &Permutation) -> Result<usize, GroupError> {
        if p.degree() != self.degree {
            return Err(GroupError::DegreeMismatch {
                expected: self.degree,
                found: p.degree(),
            });
        }
        self.index_of(p)
            .ok_or_else(|| GroupError::NotMember(p.to_string()))
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].compose(&self.elements[b])]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        let mut acc = self.identity();
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// `g a g^-1`.
    pub fn conjugate(&self, g: usize, a: usize) -> usize {
        let p = &self.elements[g];
        self.index[&p
            .compose(&self.elements[a])
            .compose(&self.elements[self.inverses[g]])]
    }

    pub fn element_order(&self, a: usize) -> u64 {
        self.elements[a].order()
    }

    pub fn whole(&self) -> Subgroup<'_> {
        Subgroup::from_sorted(
            self,
            (0..self.order()).collect(),
            self.generator_indices.clone(),
        )
    }

    pub fn trivial(&self) -> Subgroup<'_> {
        Subgroup::from_sorted(self, vec![self.identity()], Vec::new())
    }

    /// The subgroup generated by the given elements of this group.
    pub fn subgroup(&self, generators: &[Permutation]) -> Result<Subgroup<'_>, GroupError> {
        let gens = generators
            .iter()
            .map(|g| self.require(g))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.generate(&gens))
    }

    /// The subgroup generated by element indices.
    pub fn generate(&self, gens: &[usize]) -> Subgroup<'_> {
        let mut mask = vec![false; self.order()];
        mask[self.identity()] = true;
        let mut members = vec![self.identity()];
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !mask[y] {
                    mask[y] = true;
                    members.push(y);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        Subgroup {
            group: self,
            members,
            mask,
            generators: gens.to_vec(),
        }
    }

    /// Subgroup from an element set already known to be closed.
    pub fn subgroup_from_members(&self, members: Vec<usize>) -> Subgroup<'_> {
        let mut members = members;
        members.sort_unstable();
        members.dedup();
        let gens = greedy_generators(self, &members);
        Subgroup::from_sorted(self, members, gens)
    }

    pub fn point_stabilizer(&self, point: usize) -> Subgroup<'_> {
        let members = (0..self.order())
            .filter(|&i| self.elements[i].apply(point) == point)
            .collect();
        self.subgroup_from_members(members)
    }

    fn class_data(&self) -> &ClassData {
        self.classes.get_or_init(|| {
            let mut class_of = vec![usize::MAX; self.order()];
            let mut classes = Vec::new();
            for start in 0..self.order() {
                if class_of[start] != usize::MAX {
                    continue;
                }
                let id = classes.len();
                class_of[start] = id;
                let mut members = vec![start];
                let mut i = 0;
                while i < members.len() {
                    let x = members[i];
                    for &g in &self.generator_indices {
                        let y = self.conjugate(g, x);
                        if class_of[y] == usize::MAX {
                            class_of[y] = id;
                            members.push(y);
                        }
                    }
                    i += 1;
                }
                members.sort_unstable();
                classes.push(ConjugacyClass {
                    representative: start,
                    members,
                });
            }
            ClassData { classes, class_of }
        })
    }

    /// Classes ordered by representative, the smallest member index of each.
    pub fn conjugacy_classes(&self) -> &[ConjugacyClass] {
        &self.class_data().classes
    }

    pub fn class_index(&self, a: usize) -> usize {
        self.class_data().class_of[a]
    }

    /// `|cls ∩ h|`.
    pub fn class_intersection_count(&self, cls: &ConjugacyClass, h: &Subgroup<'_>) -> usize {
        cls.members.iter().filter(|&&x| h.contains(x)).count()
    }

    fn check_owned(&self, h: &Subgroup<'_>) -> Result<(), GroupError> {
        if std::ptr::eq(self, h.group) {
            Ok(())
        } else {
            Err(GroupError::ForeignSubgroup)
        }
    }

    pub fn normalizer<'g>(&'g self, h: &Subgroup<'g>) -> Subgroup<'g> {
        normalizer_within(&self.whole(), h)
    }

    /// `g H g^-1`.
    pub fn conjugate_subgroup<'g>(&'g self, g: usize, h: &Subgroup<'g>) -> Subgroup<'g> {
        let members = h.members.iter().map(|&x| self.conjugate(g, x)).collect();
        let gens = h.generators.iter().map(|&x| self.conjugate(g, x)).collect();
        let mut members: Vec<usize> = members;
        members.sort_unstable();
        Subgroup::from_sorted(self, members, gens)
    }

    pub fn is_normal(&self, h: &Subgroup<'_>) -> bool {
        self.generator_indices.iter().all(|&g| {
            h.generators
                .iter()
                .all(|&x| h.contains(self.conjugate(g, x)))
        })
    }

    pub fn are_conjugate(&self, h1: &Subgroup<'_>, h2: &Subgroup<'_>) -> bool {
        if h1.order() != h2.order() {
            return false;
        }
        (0..self.order()).any(|g| {
            h1.generators
                .iter()
                .all(|&x| h2.contains(self.conjugate(g, x)))
        })
    }

    pub fn sylow_subgroup(&self, p: u64) -> Result<Subgroup<'_>, GroupError> {
        sylow_within(&self.whole(), p)
    }

    /// `G / N` acting on the left cosets of `N` by left translation.
    pub fn quotient(&self, n: &Subgroup<'_>) -> Result<Quotient, GroupError> {
        self.check_owned(n)?;
        if !self.is_normal(n) {
            return Err(GroupError::NotNormal);
        }
        let (coset_of, reps) = left_cosets(self, n);
        let action = |g: usize| {
            let images = reps.iter().map(|&r| coset_of[self.mul(g, r)]).collect();
            Permutation { images }
        };
        let gens: Vec<Permutation> = self.generator_indices.iter().map(|&g| action(g)).collect();
        let group = PermGroup::closure_with_cap(reps.len(), &gens, usize::MAX)?;
        let projection = (0..self.order())
            .map(|g| {
                group
                    .index_of(&action(g))
                    .expect("image lies in the quotient")
            })
            .collect();
        Ok(Quotient { group, projection })
    }

    /// `∩_g g H g^-1`, the largest normal subgroup of `G` inside `H`.
    pub fn normal_core<'g>(&'g self, h: &Subgroup<'g>) -> Subgroup<'g> {
        let mut core = h.mask.clone();
        loop {
            let mut changed = false;
            for &g in &self.generator_indices {
                for x in 0..self.order() {
                    if core[x] && !core[self.conjugate(g, x)] {
                        core[x] = false;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        self.subgroup_from_members((0..self.order()).filter(|&x| core[x]).collect())
    }

    /// The partition of `G` into double cosets `A g B`, ordered by smallest member.
    pub fn double_cosets(&self, a: &Subgroup<'_>, b: &Subgroup<'_>) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.order()];
        let mut out = Vec::new();
        for start in 0..self.order() {
            if assigned[start] {
                continue;
            }
            assigned[start] = true;
            let mut block = vec![start];
            let mut i = 0;
            while i < block.len() {
                let x = block[i];
                let left = a.generators.iter().map(|&s| self.mul(s, x));
                let right = b.generators.iter().map(|&s| self.mul(x, s));
                for y in left.chain(right).collect::<Vec<_>>() {
                    if !assigned[y] {
                        assigned[y] = true;
                        block.push(y);
                    }
                }
                i += 1;
            }
            block.sort_unstable();
            out.push(block);
        }
        out
    }

    pub fn double_coset_count(&self, a: &Subgroup<'_>, b: &Subgroup<'_>) -> usize {
        self.double_cosets(a, b).len()
    }

    /// All distinct cyclic subgroups, in order of their first generator.
    pub fn cyclic_subgroups(&self) -> Vec<Subgroup<'_>> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for g in 0..self.order() {
            let h = self.generate(&[g]);
            if seen.insert(h.members.clone()) {
                out.push(h);
            }
        }
        out
    }

    /// Cycle type of `g` acting on the left cosets `G/H`.
    pub fn coset_action_cycle_type(
        &self,
        h: &Subgroup<'_>,
        g: &Permutation,
    ) -> Result<Multiset, GroupError> {
        let g = self.require(g)?;
        let (coset_of, reps) = left_cosets(self, h);
        let images = reps.iter().map(|&r| coset_of[self.mul(g, r)]).collect();
        Ok(Permutation { images }.cycle_type())
    }
}

/// Labels each element by its left coset `xH`; returns labels and one representative per coset.
pub(crate) fn left_cosets(group: &PermGroup, h: &Subgroup<'_>) -> (Vec<usize>, Vec<usize>) {
    let mut coset_of = vec![usize::MAX; group.order()];
    let mut reps = Vec::new();
    for x in 0..group.order() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for &y in &h.members {
            coset_of[group.mul(x, y)] = id;
        }
    }
    (coset_of, reps)
}

fn greedy_generators(group: &PermGroup, members: &[usize]) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = vec![false; group.order()];
    span[group.identity()] = true;
    let mut span_size = 1;
    for &x in members {
        if span_size == members.len() {
            break;
        }
        if !span[x] {
            gens.push(x);
            let h = group.generate(&gens);
            span_size = h.order();
            span = h.mask;
        }
    }
    gens
}

fn normalizer_within<'g>(within: &Subgroup<'g>, h: &Subgroup<'g>) -> Subgroup<'g> {
    let group = within.group;
    let members = within
        .members
        .iter()
        .copied()
        .filter(|&g| {
            h.generators
                .iter()
                .all(|&x| h.contains(group.conjugate(g, x)))
        })
        .collect();
    group.subgroup_from_members(members)
}

fn is_p_power(mut n: u64, p: u64) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// Grows a p-subgroup inside `within` by adjoining p-power elements of its normalizer.
fn sylow_within<'g>(within: &Subgroup<'g>, p: u64) -> Result<Subgroup<'g>, GroupError> {
    if !is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    let group = within.group;
    let target = p.pow(valuation(within.order() as u64, p)) as usize;
    let mut current = group.trivial();
    while current.order() < target {
        let normalizer = normalizer_within(within, &current);
        let x = normalizer
            .members
            .iter()
            .copied()
            .find(|&x| !current.contains(x) && is_p_power(group.element_order(x), p))
            .expect("a proper p-subgroup below Sylow order has a p-element in its normalizer");
        let mut gens = current.generators.clone();
        gens.push(x);
        current = group.generate(&gens);
    }
    Ok(current)
}

/// A subgroup of a [`PermGroup`], as an explicit set of ambient element indices.
#[derive(Clone)]
pub struct Subgroup<'g> {
    group: &'g PermGroup,
    members: Vec<usize>,
    mask: Vec<bool>,
    generators: Vec<usize>,
}

impl<'g> Subgroup<'g> {
    fn from_sorted(group: &'g PermGroup, members: Vec<usize>, generators: Vec<usize>) -> Self {
        let mut mask = vec![false; group.order()];
        for &x in &members {
            mask[x] = true;
        }
        Self {
            group,
            members,
            mask,
            generators,
        }
    }

    pub fn ambient(&self) -> &'g PermGroup {
        self.group
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn generator_permutations(&self) -> Vec<Permutation> {
        self.generators
            .iter()
            .map(|&g| self.group.element(g).clone())
            .collect()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.mask[x]
    }

    pub fn is_subgroup_of(&self, other: &Subgroup<'_>) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn intersection(&self, other: &Subgroup<'g>) -> Subgroup<'g> {
        let members = self
            .members
            .iter()
            .copied()
            .filter(|&x| other.contains(x))
            .collect();
        self.group.subgroup_from_members(members)
    }

    /// A Sylow `p`-subgroup of this subgroup.
    pub fn sylow(&self, p: u64) -> Result<Subgroup<'g>, GroupError> {
        sylow_within(self, p)
    }
}

impl PartialEq for Subgroup<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.group, other.group) && self.members == other.members
    }
}

impl Eq for Subgroup<'_> {}

impl fmt::Debug for Subgroup<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup")
            .field("order", &self.order())
            .field("generators", &self.generator_permutations())
            .finish()
    }
}

/// A quotient `G / N` with the projection from element indices of `G`.
#[derive(Debug)]
pub struct Quotient {
    pub group: PermGroup,
    pub projection: Vec<usize>,
}

impl Quotient {
    /// Image of a subgroup of `G` under the projection, as a subgroup of the quotient.
    pub fn image(&self, h: &Subgroup<'_>) -> Subgroup<'_> {
        let members = h.members.iter().map(|&x| self.projection[x]).collect();
        self.group.subgroup_from_members(members)
    }
}

/// Named groups used by the examples and tests.
pub mod families {
    use super::*;

    fn build(degree: usize, gens: Vec<Permutation>) -> PermGroup {
        PermGroup::closure(degree, &gens).expect("family groups are small")
    }

    pub fn cyclic(n: usize) -> PermGroup {
        let gen = Permutation::new((0..n).map(|i| (i + 1) % n).collect()).unwrap();
        build(n, vec![gen])
    }

    pub fn symmetric(n: usize) -> PermGroup {
        if n < 2 {
            return build(n, vec![]);
        }
        let cycle = Permutation::new((0..n).map(|i| (i + 1) % n).collect()).unwrap();
        let swap = Permutation::from_cycles(n, &[&[0, 1]]).unwrap();
        build(n, vec![swap, cycle])
    }

    pub fn alternating(n: usize) -> PermGroup {
        let gens = (2..n)
            .map(|k| Permutation::from_cycles(n, &[&[0, 1, k]]).unwrap())
            .collect();
        build(n, gens)
    }

    /// Symmetries of the regular `n`-gon, order `2n`.
    pub fn dihedral(n: usize) -> PermGroup {
        let rot = Permutation::new((0..n).map(|i| (i + 1) % n).collect()).unwrap();
        let refl = Permutation::new((0..n).map(|i| (n - i) % n).collect()).unwrap();
        build(n, vec![rot, refl])
    }

    /// Direct product acting on the disjoint union of the two point sets.
    pub fn direct_product(a: &PermGroup, b: &PermGroup) -> PermGroup {
        let (da, db) = (a.degree(), b.degree());
        let mut gens = Vec::new();
        for g in a.generators() {
            let images = g.images().iter().copied().chain(da..da + db).collect();
            gens.push(Permutation::new(images).unwrap());
        }
        for g in b.generators() {
            let images = (0..da).chain(g.images().iter().map(|&x| x + da)).collect();
            gens.push(Permutation::new(images).unwrap());
        }
        build(da + db, gens)
    }

    /// `GL(3, 2) = PSL(3, 2)` acting on the 7 points (0..7) and the 7 lines (7..14)
    /// of the Fano plane. The stabilizers of a point and of a line are almost
    /// conjugate but not conjugate.
    pub fn psl32_points_and_lines() -> PermGroup {
        // nonzero vectors of F_2^3 encoded as 1..=7; index = code - 1
        let apply = |m: [[u8; 3]; 3], v: usize| -> usize {
            let bits = [(v >> 2) & 1, (v >> 1) & 1, v & 1];
            let mut out = 0;
            for row in m {
                let bit = (0..3).map(|j| row[j] as usize * bits[j]).sum::<usize>() % 2;
                out = (out << 1) | bit;
            }
            out
        };
        let transpose = |m: [[u8; 3]; 3]| {
            let mut t = [[0u8; 3]; 3];
            for i in 0..3 {
                for j in 0..3 {
                    t[i][j] = m[j][i];
                }
            }
            t
        };
        // inverse-transpose action on linear functionals keeps incidence
        let on_points_and_lines = |m: [[u8; 3]; 3], m_inv: [[u8; 3]; 3]| {
            let dual = transpose(m_inv);
            let mut images = vec![0; 14];
            for v in 1..=7 {
                images[v - 1] = apply(m, v) - 1;
                images[v + 6] = apply(dual, v) + 6;
            }
            Permutation::new(images).unwrap()
        };
        let mat_mul = |a: [[u8; 3]; 3], b: [[u8; 3]; 3]| {
            let mut c = [[0u8; 3]; 3];
            for i in 0..3 {
                for j in 0..3 {
                    c[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum::<u8>() % 2;
                }
            }
            c
        };
        let inverse = |m: [[u8; 3]; 3]| {
            let identity = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
            let mut power = m;
            while mat_mul(power, m) != identity {
                power = mat_mul(power, m);
            }
            power
        };
        let transvection = [[1, 1, 0], [0, 1, 0], [0, 0, 1]];
        // companion matrix of x^3 + x + 1, order 7
        let singer = [[0, 0, 1], [1, 0, 1], [0, 1, 0]];
        build(
            14,
            vec![
                on_points_and_lines(transvection, inverse(transvection)),
                on_points_and_lines(singer, inverse(singer)),
            ],
        )
    }
}
