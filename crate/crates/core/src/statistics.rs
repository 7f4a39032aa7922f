//! Splitting statistics, exceptional-set scans, and Dirichlet coefficients of
//! the Euler products they define.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::primes_up_to;
use crate::multiset::{Multiset, MultisetError};
use crate::numfield::{discriminant, splitting_type, FieldError, NumberFieldSpec};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StatError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Multiset(#[from] MultisetError),
}

/// A function of the splitting type alone, valued in multisets.
///
/// Scalars embed as singletons; zero (and a false indicator) is the empty multiset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SplittingStatistic {
    #[serde(rename = "full")]
    FullType,
    #[serde(rename = "min")]
    Min,
    #[serde(rename = "gcd")]
    Gcd,
    #[serde(rename = "lcm")]
    Lcm,
    #[serde(rename = "one")]
    OneIndicator,
    #[serde(rename = "card")]
    Cardinality,
    #[serde(rename = "totram")]
    TotallyRamified,
}

impl SplittingStatistic {
    pub const ALL: [SplittingStatistic; 7] = [
        SplittingStatistic::FullType,
        SplittingStatistic::Min,
        SplittingStatistic::Gcd,
        SplittingStatistic::Lcm,
        SplittingStatistic::OneIndicator,
        SplittingStatistic::Cardinality,
        SplittingStatistic::TotallyRamified,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SplittingStatistic::FullType => "full",
            SplittingStatistic::Min => "min",
            SplittingStatistic::Gcd => "gcd",
            SplittingStatistic::Lcm => "lcm",
            SplittingStatistic::OneIndicator => "one",
            SplittingStatistic::Cardinality => "card",
            SplittingStatistic::TotallyRamified => "totram",
        }
    }

    pub fn evaluate(self, s: &Multiset) -> Result<Multiset, MultisetError> {
        let scalar = |n: u64| {
            if n == 0 {
                Ok(Multiset::new())
            } else {
                Multiset::singleton(n)
            }
        };
        let indicator = |b: bool| scalar(b as u64);
        match self {
            SplittingStatistic::FullType => Ok(s.clone()),
            SplittingStatistic::Min => scalar(s.min_of()?),
            SplittingStatistic::Gcd => scalar(s.gcd_of()?),
            SplittingStatistic::Lcm => scalar(s.lcm_of()?),
            SplittingStatistic::OneIndicator => indicator(s.contains(1)),
            SplittingStatistic::Cardinality => scalar(s.cardinality() as u64),
            SplittingStatistic::TotallyRamified => indicator(*s == Multiset::from(1)),
        }
    }
}

impl fmt::Display for SplittingStatistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SplittingStatistic {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| format!("unknown statistic {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PrimeStatus {
    Equal,
    Exceptional,
    /// The first field could not be evaluated at this prime.
    Indeterminate1,
    /// The second field could not be evaluated at this prime.
    Indeterminate2,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeRecord {
    pub p: u64,
    pub value1: Option<Multiset>,
    pub value2: Option<Multiset>,
    pub status: PrimeStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub pmax: u64,
    pub statistic: SplittingStatistic,
    pub records: Vec<PrimeRecord>,
    pub exceptional_primes: Vec<u64>,
    /// Primes `<= pmax` dividing `disc(f1) disc(f2)`.
    pub ramified_superset: Vec<u64>,
    pub indeterminate_primes: Vec<u64>,
}

impl ScanReport {
    /// Exceptional primes outside the ramified superset; nonempty only on a bug
    /// or when the fields do not share a Galois closure.
    pub fn unramified_exceptional(&self) -> Vec<u64> {
        self.exceptional_primes
            .iter()
            .copied()
            .filter(|p| self.ramified_superset.binary_search(p).is_err())
            .collect()
    }
}

fn evaluate_at(
    field: &NumberFieldSpec,
    stat: SplittingStatistic,
    p: u64,
) -> Result<Multiset, StatError> {
    let (types, _) = splitting_type(field, p)?;
    Ok(stat.evaluate(&types)?)
}

/// Compares `stat` on two fields at every prime `<= pmax`.
///
/// Primes where a field's polynomial is not `p`-maximal (and no alternative
/// generator is registered) are marked indeterminate and never counted as exceptional.
pub fn scan(
    f1: &NumberFieldSpec,
    f2: &NumberFieldSpec,
    stat: SplittingStatistic,
    pmax: u64,
) -> ScanReport {
    let primes = primes_up_to(pmax);
    let records: Vec<PrimeRecord> = primes
        .par_iter()
        .map(|&p| {
            let v1 = evaluate_at(f1, stat, p).ok();
            let v2 = evaluate_at(f2, stat, p).ok();
            let status = match (&v1, &v2) {
                (None, _) => PrimeStatus::Indeterminate1,
                (_, None) => PrimeStatus::Indeterminate2,
                (Some(a), Some(b)) if a == b => PrimeStatus::Equal,
                _ => PrimeStatus::Exceptional,
            };
            PrimeRecord {
                p,
                value1: v1,
                value2: v2,
                status,
            }
        })
        .collect();
    let with_status = |s: PrimeStatus| {
        records
            .iter()
            .filter(|r| r.status == s)
            .map(|r| r.p)
            .collect::<Vec<_>>()
    };
    let exceptional_primes = with_status(PrimeStatus::Exceptional);
    let indeterminate_primes = records
        .iter()
        .filter(|r| {
            matches!(
                r.status,
                PrimeStatus::Indeterminate1 | PrimeStatus::Indeterminate2
            )
        })
        .map(|r| r.p)
        .collect();
    let disc = discriminant(f1.poly()) * discriminant(f2.poly());
    let ramified_superset = primes_dividing(&disc, &primes);
    ScanReport {
        pmax,
        statistic: stat,
        records,
        exceptional_primes,
        ramified_superset,
        indeterminate_primes,
    }
}

fn primes_dividing(n: &BigInt, primes: &[u64]) -> Vec<u64> {
    let n = n.abs();
    primes
        .iter()
        .copied()
        .filter(|&p| (&n % p).to_u64() == Some(0))
        .collect()
}

/// `a_1, ..., a_X` of `prod_p prod_m (1 - p^{-mz})^{-s(p,F)(m)}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirichletCoefficients {
    pub limit: u64,
    pub statistic: SplittingStatistic,
    /// `coeffs[n - 1] = a_n`.
    pub coeffs: Vec<u64>,
}

impl DirichletCoefficients {
    pub fn get(&self, n: u64) -> u64 {
        self.coeffs[(n - 1) as usize]
    }
}

/// The local factor `prod_{m in s} 1 / (1 - u^m)` as a power series in `u`, to degree `precision`.
fn local_series(s: &Multiset, precision: usize) -> Vec<u64> {
    let mut series = vec![0u64; precision + 1];
    series[0] = 1;
    for (m, multiplicity) in s.iter() {
        let m = m as usize;
        if m > precision {
            continue;
        }
        for _ in 0..multiplicity {
            for k in m..=precision {
                series[k] += series[k - m];
            }
        }
    }
    series
}

pub fn dirichlet_coefficients(
    field: &NumberFieldSpec,
    stat: SplittingStatistic,
    limit: u64,
) -> Result<DirichletCoefficients, StatError> {
    let x = limit.max(1) as usize;
    // smallest prime factor sieve
    let mut spf = vec![0usize; x + 1];
    for i in 2..=x {
        if spf[i] == 0 {
            let mut j = i;
            while j <= x {
                if spf[j] == 0 {
                    spf[j] = i;
                }
                j += i;
            }
        }
    }
    let mut local = vec![Vec::new(); x + 1];
    for p in primes_up_to(x as u64) {
        let s = evaluate_at(field, stat, p)?;
        let mut precision = 0;
        let mut pk = 1u64;
        while pk * p <= x as u64 {
            pk *= p;
            precision += 1;
        }
        local[p as usize] = local_series(&s, precision);
    }
    let mut coeffs = vec![0u64; x];
    coeffs[0] = 1;
    for n in 2..=x {
        let p = spf[n];
        let (mut rest, mut k) = (n, 0);
        while rest % p == 0 {
            rest /= p;
            k += 1;
        }
        coeffs[n - 1] = coeffs[rest - 1] * local[p][k];
    }
    Ok(DirichletCoefficients {
        limit: x as u64,
        statistic: stat,
        coeffs,
    })
}
