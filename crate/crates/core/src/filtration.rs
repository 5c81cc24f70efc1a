//! Composition-filtrations and their converging systems of sections.
//!
//! A filtration here is a descending chain of ideals `A_0 ⊇ A_1 ⊇ ...` with
//! trivial intersection such that substituting maps congruent mod `A_d` into
//! an `A_1`-admissible map gives results congruent mod `A_{d+1}`. Quotient
//! classes are represented by their canonical representatives, so the section
//! maps are the identity on canonical form and `project . section = id` holds
//! by construction.
//!
//! Two instances ship: the total-degree filtration `A_d = (X_1,...,X_n)^{d+1}`
//! over any domain, and the p-adic filtration `A_d = p^d A` over the integers
//! with balanced residues as the section.

use crate::endo::PolyMap;
use crate::poly::Polynomial;
use crate::ring::{balanced_residue, is_prime_u64, Coefficient, DomainDescriptor, RingError};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FiltrationError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("the p-adic filtration requires the ZZ domain, got {0}")]
    RequiresIntegers(DomainDescriptor),
    #[error("input is not the canonical representative at level {level}")]
    CanonicalityViolation { level: u32 },
    #[error("unknown filtration '{0}', expected 'degree' or 'padic:<p>'")]
    UnknownKind(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// One of the two shipped composition-filtrations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiltrationSpec {
    /// `A_d = (X_1,...,X_n)^{d+1}`: classes are polynomials of total degree
    /// at most `d`.
    Degree,
    /// `A_d = p^d A` over the integers: classes are polynomials whose
    /// coefficients lie in the balanced window mod `p^d`.
    PAdic(u64),
}

impl FiltrationSpec {
    pub fn padic(p: u64) -> Result<Self, FiltrationError> {
        if is_prime_u64(p) {
            Ok(FiltrationSpec::PAdic(p))
        } else {
            Err(FiltrationError::NotPrime(p))
        }
    }

    fn check_domain(&self, domain: DomainDescriptor) -> Result<(), FiltrationError> {
        match self {
            FiltrationSpec::PAdic(_) if domain != DomainDescriptor::Integers => {
                Err(FiltrationError::RequiresIntegers(domain))
            }
            _ => Ok(()),
        }
    }

    /// The canonical representative of `f` mod `A_d`.
    pub fn project(&self, f: &Polynomial, d: u32) -> Result<Polynomial, FiltrationError> {
        self.check_domain(f.domain())?;
        match self {
            FiltrationSpec::Degree => Ok(f.truncate_total_degree(d)),
            FiltrationSpec::PAdic(p) => {
                if d == 0 {
                    // A_0 = A, so the quotient is trivial
                    return Ok(Polynomial::zero(f.domain(), f.nvars()));
                }
                let terms: Vec<(crate::poly::Monomial, Coefficient)> = f
                    .terms()
                    .map(|(m, c)| Ok((m.clone(), balanced_residue(c, d, *p)?)))
                    .collect::<Result<_, FiltrationError>>()?;
                Ok(Polynomial::from_terms(f.domain(), f.nvars(), terms)
                    .expect("projection preserves arity and domain"))
            }
        }
    }

    /// Projects every component of a map.
    pub fn project_map(&self, map: &PolyMap, d: u32) -> Result<PolyMap, FiltrationError> {
        let components = map
            .components()
            .iter()
            .map(|c| self.project(c, d))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PolyMap::new(components, map.vars().to_vec()).expect("projection preserves shape"))
    }

    /// Whether `f` is its own canonical representative at level `d`.
    pub fn is_canonical(&self, f: &Polynomial, d: u32) -> bool {
        self.project(f, d).map(|p| p == *f).unwrap_or(false)
    }

    /// Embeds the class of a canonical representative back into the ring:
    /// the identity map, after checking canonicality.
    pub fn section(&self, representative: &Polynomial, d: u32) -> Result<Polynomial, FiltrationError> {
        self.check_domain(representative.domain())?;
        if !self.is_canonical(representative, d) {
            return Err(FiltrationError::CanonicalityViolation { level: d });
        }
        Ok(representative.clone())
    }

    /// Whether `H` lies in `(A_1)^n`: for the degree filtration every
    /// component has only terms of total degree at least 2; for the p-adic
    /// filtration every coefficient is divisible by `p` (and the domain is
    /// the integers).
    pub fn check_h_admissible(&self, h: &PolyMap) -> bool {
        match self {
            FiltrationSpec::Degree => h
                .components()
                .iter()
                .all(|c| c.affine_part().is_zero()),
            FiltrationSpec::PAdic(p) => {
                h.domain() == DomainDescriptor::Integers
                    && h.components()
                        .iter()
                        .all(|c| c.terms().all(|(_, coeff)| coeff.divisible_by(*p)))
            }
        }
    }
}

impl fmt::Display for FiltrationSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiltrationSpec::Degree => write!(f, "degree"),
            FiltrationSpec::PAdic(p) => write!(f, "padic:{p}"),
        }
    }
}

impl FromStr for FiltrationSpec {
    type Err = FiltrationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "degree" {
            return Ok(FiltrationSpec::Degree);
        }
        if let Some(p) = s.strip_prefix("padic:") {
            let p: u64 = p
                .parse()
                .map_err(|_| FiltrationError::UnknownKind(s.to_string()))?;
            return FiltrationSpec::padic(p);
        }
        Err(FiltrationError::UnknownKind(s.to_string()))
    }
}
