//! Independent oracles and fixtures shared by the integration and acceptance suites.
#![allow(dead_code, clippy::manual_is_multiple_of)]

use std::collections::{BTreeMap, HashSet};

use arithsim::cyclic_orbits::CyclicAction;
use arithsim::permgroup::families::*;
use arithsim::permgroup::{PermGroup, Permutation, Subgroup};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

// ---------- cyclic actions ----------

/// A random action of a cyclic group of order `n` on at most `max_len` points,
/// assembled from random cycles whose lengths divide `n`, then relabelled.
pub fn random_cyclic_action<R: Rng>(rng: &mut R, n: u64, max_len: usize) -> CyclicAction {
    let divisors: Vec<usize> = (1..=n as usize).filter(|d| n as usize % d == 0).collect();
    let target = rng.gen_range(0..=max_len);
    let mut lengths = Vec::new();
    let mut total = 0;
    loop {
        let d = *divisors.choose(rng).unwrap();
        if total + d > target {
            break;
        }
        lengths.push(d);
        total += d;
    }
    let mut labels: Vec<usize> = (0..total).collect();
    labels.shuffle(rng);
    let mut images = vec![0; total];
    let mut start = 0;
    for len in lengths {
        for i in 0..len {
            images[labels[start + i]] = labels[start + (i + 1) % len];
        }
        start += len;
    }
    CyclicAction::new(n, images).unwrap()
}

// ---------- F_p polynomials, trial division ----------

/// Monic polynomial over `F_p`, constant term first.
pub type Coeffs = Vec<u64>;

fn trim(mut v: Coeffs) -> Coeffs {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Coeffs {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

/// Quotient if the monic `d` divides `a`.
fn divide_by_monic(a: &[u64], d: &[u64], p: u64) -> Option<Coeffs> {
    let dd = d.len() - 1;
    if a.len() < d.len() {
        return None;
    }
    let mut r = a.to_vec();
    let mut q = vec![0; a.len() - dd];
    for i in (dd..r.len()).rev() {
        let c = r[i];
        q[i - dd] = c;
        if c == 0 {
            continue;
        }
        for (j, &dj) in d.iter().enumerate() {
            r[i - dd + j] = (r[i - dd + j] + p * p - c * dj % p) % p;
        }
    }
    if r.iter().any(|&c| c != 0) {
        None
    } else {
        Some(trim(q))
    }
}

/// All monic polynomials of degree `d` over `F_p`, in counter order.
pub fn monic_polys(p: u64, d: usize) -> impl Iterator<Item = Coeffs> {
    let count = p.pow(d as u32);
    (0..count).map(move |mut k| {
        let mut c = Vec::with_capacity(d + 1);
        for _ in 0..d {
            c.push(k % p);
            k /= p;
        }
        c.push(1);
        c
    })
}

/// Factors a monic polynomial by trial division with every monic polynomial of
/// degree `<= max_trial`. Returns `(degree, multiplicity) -> count`, or `None`
/// if the leftover cofactor is too large to be certified irreducible.
pub fn trial_division_type(
    f: &[u64],
    p: u64,
    max_trial: usize,
) -> Option<BTreeMap<(u32, u32), u32>> {
    let mut rest = f.to_vec();
    let mut out = BTreeMap::new();
    for d in 1..=max_trial {
        if rest.len() - 1 < d {
            break;
        }
        for g in monic_polys(p, d) {
            let mut mult = 0;
            while let Some(q) = divide_by_monic(&rest, &g, p) {
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                *out.entry((d as u32, mult)).or_insert(0) += 1;
            }
        }
    }
    let left = rest.len() - 1;
    if left > 0 {
        if left > 2 * max_trial + 1 {
            return None;
        }
        *out.entry((left as u32, 1)).or_insert(0) += 1;
    }
    Some(out)
}

/// Largest `D` with `p^D <= budget`.
pub fn trial_depth(p: u64, budget: u64) -> usize {
    let mut d = 0;
    while p.pow(d as u32 + 1) <= budget {
        d += 1;
    }
    d
}

/// A random monic polynomial of degree `<= max_deg` over `F_p` built as a product of
/// random monic factors of degree `<= depth`, plus at most one of degree `<= 2 depth + 1`,
/// so that trial division to `depth` factors it completely. Factors are sometimes repeated.
pub fn random_certifiable_poly<R: Rng>(
    rng: &mut R,
    p: u64,
    max_deg: usize,
    depth: usize,
) -> Coeffs {
    let target = rng.gen_range(1..=max_deg);
    let mut f: Coeffs = vec![1];
    let mut big_used = false;
    while f.len() - 1 < target {
        let room = target - (f.len() - 1);
        let cap = if big_used { depth } else { 2 * depth + 1 };
        let d = rng.gen_range(1..=cap.min(room));
        if d > depth {
            big_used = true;
        }
        let mut g: Coeffs = (0..d).map(|_| rng.gen_range(0..p)).collect();
        g.push(1);
        let times = if d <= depth && 2 * d <= room && rng.gen_bool(0.3) {
            2
        } else {
            1
        };
        for _ in 0..times {
            f = poly_mul(&f, &g, p);
        }
    }
    f
}

// ---------- integer polynomials ----------

/// Determinant by fraction-free Gaussian elimination.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// `Res(a, b)` as the Sylvester determinant; coefficients constant term first.
pub fn sylvester_resultant(a: &[i64], b: &[i64]) -> BigInt {
    let (m, n) = (a.len() - 1, b.len() - 1);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![BigInt::zero(); size];
        for (j, &c) in a.iter().rev().enumerate() {
            row[i + j] = BigInt::from(c);
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![BigInt::zero(); size];
        for (j, &c) in b.iter().rev().enumerate() {
            row[i + j] = BigInt::from(c);
        }
        rows.push(row);
    }
    bareiss_det(rows)
}

pub fn sylvester_discriminant(f: &[i64]) -> BigInt {
    let n = f.len() - 1;
    let df: Vec<i64> = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| i as i64 * c)
        .collect();
    let r = sylvester_resultant(f, &df) / BigInt::from(*f.last().unwrap());
    if (n * (n - 1) / 2) % 2 == 1 {
        -r
    } else {
        r
    }
}

// ---------- Gaussian integers ----------

/// Number of ideals of norm `n` in `Z[i]`: lattice points on `a^2 + b^2 = n` up to the four units.
pub fn gaussian_ideal_count(n: u64) -> u64 {
    let mut points = 0;
    let r = (n as f64).sqrt() as i64 + 1;
    for a in -r..=r {
        for b in -r..=r {
            if (a * a + b * b) as u64 == n {
                points += 1;
            }
        }
    }
    points / 4
}

// ---------- groups ----------

/// Groups of order at most 60 exercised by the group-theoretic suites.
pub fn small_groups() -> Vec<(&'static str, PermGroup)> {
    vec![
        ("C1", cyclic(1)),
        ("C6", cyclic(6)),
        ("C12", cyclic(12)),
        ("S3", symmetric(3)),
        ("D4", dihedral(4)),
        ("D5", dihedral(5)),
        ("D6", dihedral(6)),
        ("A4", alternating(4)),
        ("C2xC2", direct_product(&cyclic(2), &cyclic(2))),
        ("C2xS3", direct_product(&cyclic(2), &symmetric(3))),
        ("C3xS3", direct_product(&cyclic(3), &symmetric(3))),
        ("S4", symmetric(4)),
        ("D4xC2", direct_product(&dihedral(4), &cyclic(2))),
        ("S3xS3", direct_product(&symmetric(3), &symmetric(3))),
        ("C3xA4", direct_product(&cyclic(3), &alternating(4))),
        ("D15", dihedral(15)),
        ("A5", alternating(5)),
    ]
}

/// Random groups of order `<= max_order` generated by two random elements of `S_degree`.
pub fn random_small_groups<R: Rng>(
    rng: &mut R,
    degree: usize,
    count: usize,
    max_order: usize,
) -> Vec<PermGroup> {
    let mut out = Vec::new();
    while out.len() < count {
        let gens: Vec<Permutation> = (0..2)
            .map(|_| {
                let mut images: Vec<usize> = (0..degree).collect();
                images.shuffle(rng);
                Permutation::new(images).unwrap()
            })
            .collect();
        if let Ok(g) = PermGroup::closure_with_cap(degree, &gens, max_order) {
            out.push(g);
        }
    }
    out
}

/// Every subgroup generated by at most two elements, deduplicated.
pub fn two_generated_subgroups(g: &PermGroup) -> Vec<Subgroup<'_>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for a in 0..g.order() {
        for b in a..g.order() {
            let s = g.generate(&[a, b]);
            if seen.insert(s.members().to_vec()) {
                out.push(s);
            }
        }
    }
    out
}

/// `v_p(n)`.
pub fn valuation(mut n: u64, p: u64) -> u32 {
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n % q == 0 {
            out.push(q);
            while n % q == 0 {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
