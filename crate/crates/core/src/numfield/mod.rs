//! Number fields given by monic integer polynomials, and the splitting of
//! rational primes in them.
//!
//! The factorization shape of `p` is read off `f mod p` (Dedekind-Kummer),
//! which is only valid when `p` does not divide the index of `Z[theta]` in the
//! maximal order. [`dedekind_is_p_maximal`] decides that; when it fails the
//! field must carry an alternative generator for that prime, otherwise
//! [`splitting_type`] reports [`FieldError::NotPMaximal`].
//!
//! Only factor degrees and multiplicities are needed, so the pipeline stops at
//! squarefree decomposition plus distinct-degree counts.

mod fp_poly;
mod int_poly;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

pub use fp_poly::{FpPoly, PRIME_BOUND};
pub use int_poly::{discriminant, resultant, IntPolynomial};

use crate::arith::is_prime;
use crate::multiset::Multiset;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("polynomial is not monic: {0}")]
    NotMonic(String),
    #[error("polynomial vanishes modulo {0}")]
    ZeroModP(u64),
    #[error("polynomial is not squarefree modulo {0}")]
    NotSquareFree(u64),
    #[error("polynomial is not squarefree over the rationals")]
    NotSquareFreeOverQ,
    #[error("defining polynomial must have degree at least 1")]
    ConstantPolynomial,
    #[error(
        "{p} divides the index of the polynomial order; supply an alternative generator for {p}"
    )]
    NotPMaximal { p: u64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} exceeds the supported bound 2^31")]
    PrimeTooLarge(u64),
    #[error("invalid field description: {0}")]
    Parse(String),
}

fn check_prime(p: u64) -> Result<(), FieldError> {
    if p >= PRIME_BOUND {
        return Err(FieldError::PrimeTooLarge(p));
    }
    if !is_prime(p) {
        return Err(FieldError::NotPrime(p));
    }
    Ok(())
}

/// Squarefree decomposition `f = lc * prod w_j^j` over `F_p`, ascending in `j`,
/// omitting trivial `w_j`.
pub fn squarefree_decomposition_mod_p(
    f: &IntPolynomial,
    p: u64,
) -> Result<Vec<(FpPoly, u32)>, FieldError> {
    check_prime(p)?;
    let fp = FpPoly::from_int(f, p);
    if fp.is_zero() {
        return Err(FieldError::ZeroModP(p));
    }
    let mut out = squarefree_parts(&fp.monic());
    out.sort_by_key(|(_, j)| *j);
    Ok(out)
}

fn squarefree_parts(f: &FpPoly) -> Vec<(FpPoly, u32)> {
    let p = f.characteristic();
    let mut out = Vec::new();
    let mut c = f.gcd(&f.derivative());
    let mut w = f.div_exact(&c);
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let factor = w.div_exact(&y);
        if !factor.is_one() {
            out.push((factor, i));
        }
        w = y;
        c = c.div_exact(&w);
        i += 1;
    }
    if !c.is_one() {
        // what remains is a p-th power
        for (g, j) in squarefree_parts(&c.pth_root()) {
            out.push((g, j * p as u32));
        }
    }
    out
}

/// Number of irreducible factors of each degree of a squarefree `w` over `F_p`.
pub fn distinct_degree_counts(w: &FpPoly) -> Result<BTreeMap<u32, u32>, FieldError> {
    let p = w.characteristic();
    if w.is_zero() {
        return Err(FieldError::ZeroModP(p));
    }
    let mut rest = w.monic();
    if !rest.gcd(&rest.derivative()).is_one() {
        return Err(FieldError::NotSquareFree(p));
    }
    let x = FpPoly::x(p);
    let mut counts = BTreeMap::new();
    let mut h = x.clone();
    let mut d = 1u32;
    while rest.degree().unwrap_or(0) >= 2 * d as usize {
        // h = x^(p^d) mod rest
        h = h.pow_mod(p, &rest);
        let g = rest.gcd(&h.sub(&x));
        if !g.is_one() {
            counts.insert(d, (g.degree().unwrap() / d as usize) as u32);
            rest = rest.div_exact(&g);
            h = h.rem(&rest);
        }
        d += 1;
    }
    if let Some(deg) = rest.degree().filter(|&deg| deg > 0) {
        *counts.entry(deg as u32).or_insert(0) += 1;
    }
    Ok(counts)
}

/// Dedekind's criterion: whether `p` is coprime to `[O_F : Z[theta]]` for a root `theta` of `f`.
pub fn dedekind_is_p_maximal(f: &IntPolynomial, p: u64) -> Result<bool, FieldError> {
    if !f.is_monic() {
        return Err(FieldError::NotMonic(f.to_string()));
    }
    let parts = squarefree_decomposition_mod_p(f, p)?;
    let one = FpPoly::one(p);
    let radical = parts.iter().fold(one.clone(), |acc, (w, _)| acc.mul(w));
    let cofactor = parts.iter().fold(one, |acc, (w, j)| acc.mul(&w.pow(j - 1)));
    let lifted = radical.to_int().mul(&cofactor.to_int());
    let defect = lifted.sub(f).div_exact(&BigInt::from(p));
    let defect = FpPoly::from_int(&defect, p);
    Ok(defect.gcd(&radical).gcd(&cofactor).is_one())
}

/// A number field `Q[x]/(f)` with `f` monic and squarefree. Irreducibility of `f`
/// is the caller's assertion and is not checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumberFieldSpec {
    label: String,
    poly: IntPolynomial,
    alt_generators: BTreeMap<u64, IntPolynomial>,
}

fn validate_defining(poly: &IntPolynomial) -> Result<(), FieldError> {
    match poly.degree() {
        None | Some(0) => return Err(FieldError::ConstantPolynomial),
        _ => {}
    }
    if !poly.is_monic() {
        return Err(FieldError::NotMonic(poly.to_string()));
    }
    if discriminant(poly).is_zero() {
        return Err(FieldError::NotSquareFreeOverQ);
    }
    Ok(())
}

impl NumberFieldSpec {
    pub fn new(label: impl Into<String>, poly: IntPolynomial) -> Result<Self, FieldError> {
        validate_defining(&poly)?;
        Ok(Self {
            label: label.into(),
            poly,
            alt_generators: BTreeMap::new(),
        })
    }

    /// Registers another defining polynomial of the same field, to be used at `p`.
    pub fn with_alt_generator(mut self, p: u64, poly: IntPolynomial) -> Result<Self, FieldError> {
        check_prime(p)?;
        validate_defining(&poly)?;
        if poly.degree() != self.poly.degree() {
            return Err(FieldError::Parse(format!(
                "alternative generator at {p} has degree {:?}, expected {:?}",
                poly.degree(),
                self.poly.degree()
            )));
        }
        self.alt_generators.insert(p, poly);
        Ok(self)
    }

    /// `Q` itself, as `Q[x]/(x)`.
    pub fn rationals() -> Self {
        Self::new("Q", IntPolynomial::from_i64(&[0, 1])).expect("x is a valid defining polynomial")
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn poly(&self) -> &IntPolynomial {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().expect("validated at construction")
    }

    pub fn alt_generators(&self) -> &BTreeMap<u64, IntPolynomial> {
        &self.alt_generators
    }

    /// The polynomial used at `p`.
    pub fn poly_for_prime(&self, p: u64) -> &IntPolynomial {
        self.alt_generators.get(&p).unwrap_or(&self.poly)
    }

    pub fn to_file(&self) -> FieldFile {
        FieldFile {
            label: self.label.clone(),
            coeffs: self.poly.clone(),
            alt: self
                .alt_generators
                .iter()
                .map(|(p, f)| (p.to_string(), f.clone()))
                .collect(),
        }
    }
}

/// On-disk field description; coefficients are decimal strings, constant term first.
///
/// ```json
/// {"label": "Q(cbrt 2)", "coeffs": ["-2", "0", "0", "1"], "alt": {"3": ["...", "..."]}}
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldFile {
    #[serde(default)]
    pub label: String,
    pub coeffs: IntPolynomial,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub alt: BTreeMap<String, IntPolynomial>,
}

impl TryFrom<FieldFile> for NumberFieldSpec {
    type Error = FieldError;

    fn try_from(file: FieldFile) -> Result<Self, Self::Error> {
        let mut spec = NumberFieldSpec::new(file.label, file.coeffs)?;
        for (p, poly) in file.alt {
            let p: u64 = p
                .parse()
                .map_err(|_| FieldError::Parse(format!("bad prime key {p:?}")))?;
            spec = spec.with_alt_generator(p, poly)?;
        }
        Ok(spec)
    }
}

/// The pairs `(f_i, e_i)` of residue degree and ramification index of the primes above `p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeFactorizationShape {
    pub p: u64,
    /// `(f, e)` with repetition, ascending.
    pub pairs: Vec<(u32, u32)>,
}

impl PrimeFactorizationShape {
    /// `sum e_i f_i`.
    pub fn degree(&self) -> u64 {
        self.pairs.iter().map(|&(f, e)| f as u64 * e as u64).sum()
    }

    pub fn is_unramified(&self) -> bool {
        self.pairs.iter().all(|&(_, e)| e == 1)
    }

    pub fn residue_degrees(&self) -> Multiset {
        Multiset::from_elements(self.pairs.iter().map(|&(f, _)| f as u64))
            .expect("residue degrees are positive")
    }
}

impl fmt::Display for PrimeFactorizationShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, (fi, ei)) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "({fi},{ei})")?;
        }
        f.write_str("]")
    }
}

/// The factorization shape of `p f_bar` read off a `p`-maximal defining polynomial.
pub fn factorization_shape(
    f: &IntPolynomial,
    p: u64,
) -> Result<PrimeFactorizationShape, FieldError> {
    if !dedekind_is_p_maximal(f, p)? {
        return Err(FieldError::NotPMaximal { p });
    }
    let mut pairs = Vec::new();
    for (w, e) in squarefree_decomposition_mod_p(f, p)? {
        for (d, count) in distinct_degree_counts(&w)? {
            pairs.extend(std::iter::repeat_n((d, e), count as usize));
        }
    }
    pairs.sort_unstable();
    Ok(PrimeFactorizationShape { p, pairs })
}

/// The splitting type `S_F(p)` together with the full `(f, e)` shape.
pub fn splitting_type(
    field: &NumberFieldSpec,
    p: u64,
) -> Result<(Multiset, PrimeFactorizationShape), FieldError> {
    check_prime(p)?;
    let shape = factorization_shape(field.poly_for_prime(p), p)?;
    debug_assert_eq!(shape.degree(), field.degree() as u64);
    Ok((shape.residue_degrees(), shape))
}

/// `S_F(p) = {1}` with `F != Q`.
pub fn is_totally_ramified(field: &NumberFieldSpec, p: u64) -> Result<bool, FieldError> {
    let (types, _) = splitting_type(field, p)?;
    Ok(field.degree() > 1 && types == Multiset::from(1))
}
