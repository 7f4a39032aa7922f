//! Orbit-size spectra of cyclic group actions recovered from quotient counts.
//!
//! Let `C = <c>` have order `n` and act on a finite set `S`. For each divisor
//! `m` of `n`, `M_m` is the number of orbits of the subgroup `C^m = <c^m>`.
//! From the table of `M_m` alone one can recover `a_d`, the number of
//! `C`-orbits of size `d`:
//!
//! * [`lemma_tr_check`] evaluates the signed divisor sum identity relating a
//!   window `T | d | m` of the table to a weighted sum of the `a_d`;
//! * [`n_value`] specializes it to the window where `m / T` is the radical of
//!   `m`, giving `N_m = sum_{m | d | n} a_d`;
//! * [`orbit_spectrum`] Moebius-inverts the `N_m`.
//!
//! All intermediate arithmetic is exact rational; an inconsistent table is
//! reported as an error rather than truncated. [`brute_force_spectrum`] walks
//! the orbits directly and serves as the oracle.

use std::collections::BTreeMap;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::arith::{divisors, factorize, is_squarefree};
use crate::multiset::Multiset;

type Q = Ratio<i128>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OrbitError {
    #[error("generator images do not form a bijection on 0..{0}")]
    NotBijective(usize),
    #[error("the {n}-th power of the generator is not the identity (generator order {order})")]
    OrderMismatch { n: u64, order: u64 },
    #[error("{m} does not divide {n}")]
    NonDivisor { m: u64, n: u64 },
    #[error("{m}/{t} is not square-free")]
    NotSquareFree { t: u64, m: u64 },
    #[error("non-integral value {value} at m = {m}; the table is inconsistent")]
    NonIntegerResult { m: u64, value: String },
    #[error("negative orbit count {value} for size {m}; the table is inconsistent")]
    NegativeCount { m: u64, value: i128 },
    #[error("invalid table: {0}")]
    InvalidTable(String),
    #[error("cyclic group order must be positive")]
    ZeroOrder,
    #[error("cannot parse action {0:?}")]
    Parse(String),
}

/// `prod_{p | gcd(k, t)} p^{v_p(t)}`.
pub fn f_k(k: u64, t: u64) -> u64 {
    factorize(t)
        .into_iter()
        .filter(|&(p, _)| k % p == 0)
        .map(|(p, e)| p.pow(e))
        .product()
}

/// Number of prime factors counted with multiplicity.
pub fn prime_omega(t: u64) -> u32 {
    factorize(t).iter().map(|&(_, e)| e).sum()
}

pub fn moebius(t: u64) -> i8 {
    let f = factorize(t);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The `T` with `m / T` equal to the radical of `m`.
pub fn max_squarefree_cofactor(m: u64) -> u64 {
    factorize(m)
        .into_iter()
        .map(|(p, e)| p.pow(e - 1))
        .product()
}

/// A cyclic group of order `n` acting on `0..len` through the images of its generator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicAction {
    n: u64,
    images: Vec<usize>,
}

impl CyclicAction {
    /// The generator's order must divide `n`; the action need not be faithful.
    pub fn new(n: u64, images: Vec<usize>) -> Result<Self, OrbitError> {
        if n == 0 {
            return Err(OrbitError::ZeroOrder);
        }
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(OrbitError::NotBijective(images.len()));
            }
        }
        let action = Self { n, images };
        let order = action
            .cycle_lengths()
            .into_iter()
            .fold(1u64, num_integer::lcm);
        if n % order != 0 {
            return Err(OrbitError::OrderMismatch { n, order });
        }
        Ok(action)
    }

    /// `C_n` acting on itself by translation.
    pub fn regular(n: u64) -> Result<Self, OrbitError> {
        let len = n as usize;
        Self::new(n, (0..len).map(|i| (i + 1) % len.max(1)).collect())
    }

    /// `C_n` fixing each of `len` points.
    pub fn trivial(n: u64, len: usize) -> Result<Self, OrbitError> {
        Self::new(n, (0..len).collect())
    }

    /// Parses `regular`, `trivial:<k>`, or a JSON image array such as `[1,2,0,3]`.
    pub fn parse(n: u64, spec: &str) -> Result<Self, OrbitError> {
        let spec = spec.trim();
        if spec == "regular" {
            return Self::regular(n);
        }
        if let Some(k) = spec.strip_prefix("trivial:") {
            let k = k.parse().map_err(|_| OrbitError::Parse(spec.to_string()))?;
            return Self::trivial(n, k);
        }
        let images: Vec<usize> =
            serde_json::from_str(spec).map_err(|_| OrbitError::Parse(spec.to_string()))?;
        Self::new(n, images)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    fn cycle_lengths(&self) -> Vec<u64> {
        cycle_lengths(&self.images)
    }

    /// Images of `c^k`, by repeated application.
    fn power(&self, k: u64) -> Vec<usize> {
        (0..self.images.len())
            .map(|mut x| {
                for _ in 0..k {
                    x = self.images[x];
                }
                x
            })
            .collect()
    }
}

fn cycle_lengths(images: &[usize]) -> Vec<u64> {
    let mut seen = vec![false; images.len()];
    let mut out = Vec::new();
    for start in 0..images.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = images[x];
            len += 1;
        }
        out.push(len);
    }
    out
}

/// The counts `M_m = |C^m \ S|` for every divisor `m` of `n = |C|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicActionTable {
    n: u64,
    counts: BTreeMap<u64, u64>,
}

impl CyclicActionTable {
    pub fn new(n: u64, counts: BTreeMap<u64, u64>) -> Result<Self, OrbitError> {
        if n == 0 {
            return Err(OrbitError::ZeroOrder);
        }
        let divs = divisors(n);
        if counts.keys().copied().ne(divs.iter().copied()) {
            return Err(OrbitError::InvalidTable(format!(
                "keys must be exactly the divisors of {n}"
            )));
        }
        for &m in &divs {
            for &m2 in &divs {
                if m2 % m == 0 && counts[&m] > counts[&m2] {
                    return Err(OrbitError::InvalidTable(format!(
                        "M_{m} = {} exceeds M_{m2} = {}",
                        counts[&m], counts[&m2]
                    )));
                }
            }
        }
        Ok(Self { n, counts })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn get(&self, m: u64) -> Option<u64> {
        self.counts.get(&m).copied()
    }

    pub fn counts(&self) -> &BTreeMap<u64, u64> {
        &self.counts
    }

    /// `M_n = |S|`.
    pub fn set_size(&self) -> u64 {
        self.counts[&self.n]
    }

    /// `M_1`, the number of `C`-orbits.
    pub fn orbit_count(&self) -> u64 {
        self.counts[&1]
    }

    fn require_divisor(&self, m: u64) -> Result<(), OrbitError> {
        if m == 0 || self.n % m != 0 {
            return Err(OrbitError::NonDivisor { m, n: self.n });
        }
        Ok(())
    }

    /// `sum_{T | d | m} (-1)^{Omega(m d)} M_d / prod_{q | m/T} (q - 1)`.
    fn signed_window(&self, t: u64, m: u64) -> Q {
        let sum: i128 = divisors(m / t)
            .into_iter()
            .map(|e| {
                let d = t * e;
                let sign = if (prime_omega(m) + prime_omega(d)) % 2 == 0 {
                    1
                } else {
                    -1
                };
                sign * self.counts[&d] as i128
            })
            .sum();
        let denom: i128 = factorize(m / t)
            .iter()
            .map(|&(q, _)| q as i128 - 1)
            .product();
        Q::new(sum, denom)
    }
}

/// `a_d`, the number of orbits of each size `d | n`; zero entries included.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitSpectrum {
    n: u64,
    counts: BTreeMap<u64, u64>,
}

impl OrbitSpectrum {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn get(&self, d: u64) -> u64 {
        self.counts.get(&d).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &BTreeMap<u64, u64> {
        &self.counts
    }

    /// `sum_d d * a_d`.
    pub fn set_size(&self) -> u64 {
        self.counts.iter().map(|(&d, &a)| d * a).sum()
    }

    /// The orbit sizes as a multiset.
    pub fn to_multiset(&self) -> Multiset {
        let mut out = Multiset::new();
        for (&d, &a) in &self.counts {
            out.insert_many(d, a as usize)
                .expect("divisors are positive");
        }
        out
    }
}

pub fn table_from_action(action: &CyclicAction) -> CyclicActionTable {
    let counts = divisors(action.n)
        .into_iter()
        .map(|m| (m, cycle_lengths(&action.power(m)).len() as u64))
        .collect();
    CyclicActionTable::new(action.n, counts).expect("orbit counts of an action form a valid table")
}

/// `N_m = sum_{m | d | n} a_d`, evaluated from the table alone.
pub fn n_value(table: &CyclicActionTable, m: u64) -> Result<u64, OrbitError> {
    table.require_divisor(m)?;
    let t = max_squarefree_cofactor(m);
    let value = table.signed_window(t, m) / Q::from_integer(t as i128);
    to_natural(m, value)
}

fn to_natural(m: u64, value: Q) -> Result<u64, OrbitError> {
    if !value.is_integer() {
        return Err(OrbitError::NonIntegerResult {
            m,
            value: value.to_string(),
        });
    }
    let v = value.to_integer();
    if v < 0 {
        return Err(OrbitError::NegativeCount { m, value: v });
    }
    Ok(v as u64)
}

/// `a_m = sum_{d | n/m} mu(d) N_{m d}`.
pub fn orbit_spectrum(table: &CyclicActionTable) -> Result<OrbitSpectrum, OrbitError> {
    let n = table.n;
    let n_values = divisors(n)
        .into_iter()
        .map(|m| Ok((m, n_value(table, m)?)))
        .collect::<Result<BTreeMap<u64, u64>, OrbitError>>()?;
    let mut counts = BTreeMap::new();
    for &m in n_values.keys() {
        let a: i128 = divisors(n / m)
            .into_iter()
            .map(|d| moebius(d) as i128 * n_values[&(m * d)] as i128)
            .sum();
        counts.insert(m, to_natural(m, Q::from_integer(a))?);
    }
    let spectrum = OrbitSpectrum { n, counts };
    if spectrum.set_size() != table.set_size() {
        return Err(OrbitError::InvalidTable(format!(
            "recovered orbits cover {} points but M_n = {}",
            spectrum.set_size(),
            table.set_size()
        )));
    }
    Ok(spectrum)
}

/// Orbit sizes by walking each orbit of the generator.
pub fn brute_force_spectrum(action: &CyclicAction) -> OrbitSpectrum {
    let mut counts: BTreeMap<u64, u64> = divisors(action.n).into_iter().map(|d| (d, 0)).collect();
    for len in action.cycle_lengths() {
        *counts.get_mut(&len).expect("orbit sizes divide n") += 1;
    }
    OrbitSpectrum {
        n: action.n,
        counts,
    }
}

/// All `(T, m)` with `T | m | n` and `m / T` square-free.
pub fn lemma_tr_pairs(n: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for m in divisors(n) {
        for t in divisors(m) {
            if is_squarefree(m / t) {
                out.push((t, m));
            }
        }
    }
    out
}

/// Checks the identity
/// `sum_{T|d|m} (-1)^{Omega(md)} M_d / prod_{q | m/T} (q-1) = sum_{(m/T) f_{m/T}(T) | d | n} gcd(T, d) a_d`
/// exactly, for one window `(T, m)`.
pub fn lemma_tr_check(
    table: &CyclicActionTable,
    spectrum: &OrbitSpectrum,
    t: u64,
    m: u64,
) -> Result<bool, OrbitError> {
    table.require_divisor(m)?;
    if t == 0 || m % t != 0 {
        return Err(OrbitError::NonDivisor { m: t, n: m });
    }
    if !is_squarefree(m / t) {
        return Err(OrbitError::NotSquareFree { t, m });
    }
    let lhs = table.signed_window(t, m);
    let step = (m / t) * f_k(m / t, t);
    let rhs: i128 = divisors(table.n)
        .into_iter()
        .filter(|d| d % step == 0)
        .map(|d| num_integer::gcd(t, d) as i128 * spectrum.get(d) as i128)
        .sum();
    Ok(lhs == Q::from_integer(rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(n: u64, entries: &[(u64, u64)]) -> CyclicActionTable {
        CyclicActionTable::new(n, entries.iter().copied().collect()).unwrap()
    }

    #[test]
    fn arithmetic_functions() {
        assert_eq!(f_k(2, 12), 4);
        assert_eq!(f_k(6, 12), 12);
        assert_eq!(f_k(5, 12), 1);
        assert_eq!(prime_omega(12), 3);
        assert_eq!(prime_omega(1), 0);
        assert_eq!(prime_omega(30), 3);
        assert_eq!(moebius(1), 1);
        assert_eq!(moebius(4), 0);
        assert_eq!(moebius(30), -1);
        assert_eq!(max_squarefree_cofactor(12), 2);
        assert_eq!(max_squarefree_cofactor(1), 1);
        assert_eq!(max_squarefree_cofactor(72), 12);
    }

    #[test]
    fn regular_and_trivial_tables() {
        let reg = table_from_action(&CyclicAction::regular(6).unwrap());
        assert_eq!(reg, table(6, &[(1, 1), (2, 2), (3, 3), (6, 6)]));
        let triv = table_from_action(&CyclicAction::trivial(4, 5).unwrap());
        assert_eq!(triv, table(4, &[(1, 5), (2, 5), (4, 5)]));
    }

    #[test]
    fn n_values() {
        let reg = table_from_action(&CyclicAction::regular(6).unwrap());
        // (1 - 2 - 3 + 6) / 2 with T = 1
        assert_eq!(n_value(&reg, 6), Ok(1));
        assert_eq!(n_value(&reg, 1), Ok(1));
        let triv = table_from_action(&CyclicAction::trivial(4, 5).unwrap());
        assert_eq!(n_value(&triv, 1), Ok(5));
        assert_eq!(
            n_value(&triv, 3),
            Err(OrbitError::NonDivisor { m: 3, n: 4 })
        );
    }

    #[test]
    fn spectra() {
        let reg = CyclicAction::regular(6).unwrap();
        let s = orbit_spectrum(&table_from_action(&reg)).unwrap();
        assert_eq!(
            s.counts(),
            &[(1, 0), (2, 0), (3, 0), (6, 1)].into_iter().collect()
        );
        assert_eq!(s, brute_force_spectrum(&reg));

        let triv = CyclicAction::trivial(4, 5).unwrap();
        let s = orbit_spectrum(&table_from_action(&triv)).unwrap();
        assert_eq!(
            s.to_multiset(),
            Multiset::from_elements([1, 1, 1, 1, 1]).unwrap()
        );
        assert_eq!(s, brute_force_spectrum(&triv));

        let three_plus_one = CyclicAction::new(3, vec![1, 2, 0, 3]).unwrap();
        let b = brute_force_spectrum(&three_plus_one);
        assert_eq!((b.get(3), b.get(1)), (1, 1));
    }

    #[test]
    fn inconsistent_tables_are_rejected() {
        // a 2-cycle plus a fixed point
        let ok = table(2, &[(1, 2), (2, 3)]);
        assert_eq!(
            orbit_spectrum(&ok).unwrap().to_multiset().to_sorted_vec(),
            vec![1, 2]
        );
        // monotone, but N_4 = (M_4 - M_2) / 2 = 1/2
        let bad = table(4, &[(1, 1), (2, 1), (4, 2)]);
        assert!(matches!(
            orbit_spectrum(&bad),
            Err(OrbitError::NonIntegerResult { .. } | OrbitError::NegativeCount { .. })
        ));
        assert!(CyclicActionTable::new(4, [(1, 3), (2, 2), (4, 4)].into_iter().collect()).is_err());
        assert!(CyclicActionTable::new(4, [(1, 3), (4, 4)].into_iter().collect()).is_err());
    }

    #[test]
    fn action_validation() {
        assert_eq!(
            CyclicAction::new(3, vec![0, 0]),
            Err(OrbitError::NotBijective(2))
        );
        assert_eq!(
            CyclicAction::new(4, vec![1, 2, 0]),
            Err(OrbitError::OrderMismatch { n: 4, order: 3 })
        );
        // non-faithful: a 2-cycle under C_6
        assert!(CyclicAction::new(6, vec![1, 0]).is_ok());
        assert_eq!(CyclicAction::parse(4, "trivial:3").unwrap().len(), 3);
        assert_eq!(
            CyclicAction::parse(3, "[1,2,0]").unwrap().images(),
            &[1, 2, 0]
        );
        assert!(CyclicAction::parse(3, "nonsense").is_err());
    }

    #[test]
    fn lemma_tr_windows() {
        let reg = table_from_action(&CyclicAction::regular(6).unwrap());
        let s = orbit_spectrum(&reg).unwrap();
        assert_eq!(lemma_tr_check(&reg, &s, 1, 6), Ok(true));
        for (t, m) in lemma_tr_pairs(6) {
            assert_eq!(lemma_tr_check(&reg, &s, t, m), Ok(true), "T={t} m={m}");
        }
        assert_eq!(
            lemma_tr_check(&reg, &s, 1, 4),
            Err(OrbitError::NonDivisor { m: 4, n: 6 })
        );
        let c8 = table_from_action(&CyclicAction::regular(8).unwrap());
        let s8 = orbit_spectrum(&c8).unwrap();
        assert_eq!(
            lemma_tr_check(&c8, &s8, 1, 4),
            Err(OrbitError::NotSquareFree { t: 1, m: 4 })
        );
        // T = m reduces to M_m = sum gcd(m, d) a_d
        for m in divisors(8) {
            assert_eq!(lemma_tr_check(&c8, &s8, m, m), Ok(true));
        }
    }
}
