//! Sparse multivariate polynomial arithmetic over the exact coefficient
//! domains, with monomial orders, substitution and total-degree truncation.
//!
//! Terms are stored in a `BTreeMap` keyed by [`Monomial`], whose `Ord` is
//! graded reverse lexicographic. That fixed storage order makes equality
//! structural; order-sensitive routines (Groebner bases) compare monomials
//! through an explicit [`MonomialOrder`] instead of re-keying storage.

use crate::ring::{Coefficient, DomainDescriptor};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("domain mismatch: {left} vs {right}")]
    DomainMismatch {
        left: DomainDescriptor,
        right: DomainDescriptor,
    },
    #[error("arity mismatch: expected {expected} variables, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("variable renaming is not injective on the used variables")]
    NonInjectiveRenaming,
    #[error("a polynomial must have at least one ambient variable")]
    NoVariables,
    #[error("block order: variable blocks must be disjoint and non-empty")]
    InvalidBlocks,
}

/// A power product of the ambient variables; the exponent sum is cached.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
    total_degree: u32,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        let total_degree = exponents
            .iter()
            .try_fold(0u32, |acc, e| acc.checked_add(*e))
            .expect("monomial degree overflows u32");
        Monomial {
            exponents,
            total_degree,
        }
    }

    /// The constant monomial `1`.
    pub fn unit(nvars: usize) -> Self {
        Monomial::new(vec![0; nvars])
    }

    /// The monomial `x_i`.
    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial::new(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exponents[i]
    }

    pub fn total_degree(&self) -> u32 {
        self.total_degree
    }

    pub fn nvars(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_unit(&self) -> bool {
        self.total_degree == 0
    }

    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), rhs.nvars());
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&rhs.exponents)
                .map(|(a, b)| a.checked_add(*b).expect("monomial exponent overflows u32"))
                .collect(),
            total_degree: self
                .total_degree
                .checked_add(rhs.total_degree)
                .expect("monomial degree overflows u32"),
        }
    }

    pub fn divides(&self, rhs: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), rhs.nvars());
        self.exponents
            .iter()
            .zip(&rhs.exponents)
            .all(|(a, b)| a <= b)
    }

    /// `rhs / self` when `self` divides `rhs`.
    pub fn div(&self, rhs: &Monomial) -> Option<Monomial> {
        if !self.divides(rhs) {
            return None;
        }
        Some(Monomial::new(
            rhs.exponents
                .iter()
                .zip(&self.exponents)
                .map(|(b, a)| b - a)
                .collect(),
        ))
    }

    pub fn lcm(&self, rhs: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), rhs.nvars());
        Monomial::new(
            self.exponents
                .iter()
                .zip(&rhs.exponents)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime_with(&self, rhs: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&rhs.exponents)
            .all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// The storage order: graded reverse lexicographic.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        grevlex(self, other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    debug_assert_eq!(a.nvars(), b.nvars());
    match a.total_degree.cmp(&b.total_degree) {
        Ordering::Equal => {
            for i in (0..a.exponents.len()).rev() {
                match a.exponents[i].cmp(&b.exponents[i]) {
                    Ordering::Equal => continue,
                    // smaller exponent in the rightmost differing slot wins
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                }
            }
            Ordering::Equal
        }
        other => other,
    }
}

fn lex(a: &Monomial, b: &Monomial) -> Ordering {
    debug_assert_eq!(a.nvars(), b.nvars());
    for i in 0..a.exponents.len() {
        match a.exponents[i].cmp(&b.exponents[i]) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// A block (elimination) order: monomials are compared on the `high`
/// variables first, so anything containing a high variable dominates every
/// monomial supported on the low block only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockOrder {
    high: Vec<usize>,
    low: Vec<usize>,
    high_order: MonomialOrder,
    low_order: MonomialOrder,
}

impl BlockOrder {
    pub fn high(&self) -> &[usize] {
        &self.high
    }

    pub fn low(&self) -> &[usize] {
        &self.low
    }
}

/// A total, multiplicative well-order on monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    Block(Box<BlockOrder>),
}

impl MonomialOrder {
    pub fn block(
        high: Vec<usize>,
        low: Vec<usize>,
        high_order: MonomialOrder,
        low_order: MonomialOrder,
    ) -> Result<Self, PolyError> {
        if high.is_empty() || high.iter().any(|i| low.contains(i)) {
            return Err(PolyError::InvalidBlocks);
        }
        Ok(MonomialOrder::Block(Box::new(BlockOrder {
            high,
            low,
            high_order,
            low_order,
        })))
    }

    /// Elimination order for `0..n_high` over the remaining variables, with
    /// the given order inside each block.
    pub fn elimination(n_high: usize, n_total: usize, inner: MonomialOrder) -> Self {
        MonomialOrder::block(
            (0..n_high).collect(),
            (n_high..n_total).collect(),
            inner.clone(),
            inner,
        )
        .expect("elimination blocks are disjoint")
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => lex(a, b),
            MonomialOrder::GrevLex => grevlex(a, b),
            MonomialOrder::Block(blk) => {
                let restrict = |m: &Monomial, positions: &[usize]| {
                    Monomial::new(positions.iter().map(|&i| m.exponents[i]).collect())
                };
                let ha = restrict(a, &blk.high);
                let hb = restrict(b, &blk.high);
                match blk.high_order.compare(&ha, &hb) {
                    Ordering::Equal => {
                        let la = restrict(a, &blk.low);
                        let lb = restrict(b, &blk.low);
                        blk.low_order.compare(&la, &lb)
                    }
                    other => other,
                }
            }
        }
    }
}

/// Total degree with a sentinel for the zero polynomial that sorts below
/// every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    MinusInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::MinusInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl From<u32> for Degree {
    fn from(d: u32) -> Self {
        Degree::Finite(d)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::MinusInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// A sparse multivariate polynomial in canonical form: no zero coefficients,
/// no duplicate monomials, every monomial of the ambient arity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    domain: DomainDescriptor,
    nvars: usize,
    terms: BTreeMap<Monomial, Coefficient>,
}

impl Polynomial {
    pub fn zero(domain: DomainDescriptor, nvars: usize) -> Self {
        assert!(nvars > 0, "polynomials need at least one variable");
        Polynomial {
            domain,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Coefficient, nvars: usize) -> Self {
        let mut p = Polynomial::zero(c.domain(), nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::unit(nvars), c);
        }
        p
    }

    pub fn one(domain: DomainDescriptor, nvars: usize) -> Self {
        Polynomial::constant(domain.one(), nvars)
    }

    /// The variable `x_i` as a polynomial.
    pub fn variable(domain: DomainDescriptor, nvars: usize, i: usize) -> Result<Self, PolyError> {
        if i >= nvars {
            return Err(PolyError::VariableOutOfRange { index: i, nvars });
        }
        let mut p = Polynomial::zero(domain, nvars);
        p.terms.insert(Monomial::variable(nvars, i), domain.one());
        Ok(p)
    }

    /// Builds a polynomial from raw terms, merging duplicates and dropping
    /// zeros.
    pub fn from_terms(
        domain: DomainDescriptor,
        nvars: usize,
        terms: impl IntoIterator<Item = (Monomial, Coefficient)>,
    ) -> Result<Self, PolyError> {
        if nvars == 0 {
            return Err(PolyError::NoVariables);
        }
        let mut p = Polynomial::zero(domain, nvars);
        for (m, c) in terms {
            if m.nvars() != nvars {
                return Err(PolyError::ArityMismatch {
                    expected: nvars,
                    found: m.nvars(),
                });
            }
            if c.domain() != domain {
                return Err(PolyError::DomainMismatch {
                    left: domain,
                    right: c.domain(),
                });
            }
            p.insert_term(m, c);
        }
        Ok(p)
    }

    pub fn domain(&self) -> DomainDescriptor {
        self.domain
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending storage (grevlex) order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Coefficient)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Coefficient {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.domain.zero())
    }

    pub fn constant_term(&self) -> Coefficient {
        self.coefficient(&Monomial::unit(self.nvars))
    }

    pub fn degree(&self) -> Degree {
        self.terms
            .keys()
            .map(|m| m.total_degree())
            .max()
            .map_or(Degree::MinusInfinity, Degree::Finite)
    }

    /// The largest term under `order`.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Coefficient)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.compare(a, b))
    }

    fn insert_term(&mut self, m: Monomial, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_compatible(&self, rhs: &Polynomial) -> Result<(), PolyError> {
        if self.domain != rhs.domain {
            return Err(PolyError::DomainMismatch {
                left: self.domain,
                right: rhs.domain,
            });
        }
        if self.nvars != rhs.nvars {
            return Err(PolyError::ArityMismatch {
                expected: self.nvars,
                found: rhs.nvars,
            });
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_compatible(rhs)?;
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Polynomial) -> Result<Polynomial, PolyError> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            domain: self.domain,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_compatible(rhs)?;
        Ok(self.mul_capped(rhs, None))
    }

    /// Product with every term of total degree above `cap` discarded.
    /// Truncation commutes with ring operations, so chaining capped products
    /// is exact modulo the degree ideal.
    pub fn mul_truncated(&self, rhs: &Polynomial, cap: u32) -> Result<Polynomial, PolyError> {
        self.check_compatible(rhs)?;
        Ok(self.mul_capped(rhs, Some(cap)))
    }

    fn mul_capped(&self, rhs: &Polynomial, cap: Option<u32>) -> Polynomial {
        let mut out = Polynomial::zero(self.domain, self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                if let Some(cap) = cap {
                    if ma.total_degree() + mb.total_degree() > cap {
                        continue;
                    }
                }
                out.insert_term(ma.mul(mb), ca.mul(cb));
            }
        }
        out
    }

    /// Multiply by a single term.
    pub fn mul_term(&self, m: &Monomial, c: &Coefficient) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.domain, self.nvars);
        }
        Polynomial {
            domain: self.domain,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), cc.mul(c)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coefficient) -> Result<Polynomial, PolyError> {
        if c.domain() != self.domain {
            return Err(PolyError::DomainMismatch {
                left: self.domain,
                right: c.domain(),
            });
        }
        Ok(self.mul_term(&Monomial::unit(self.nvars), c))
    }

    /// Substitutes `args[i]` for variable `i`; the result lives in the
    /// ambient space of the arguments.
    pub fn compose(&self, args: &[Polynomial]) -> Result<Polynomial, PolyError> {
        self.compose_capped(args, None)
    }

    /// Substitution with all intermediates truncated to total degree `cap`.
    pub fn compose_mod_degree(&self, args: &[Polynomial], cap: u32) -> Result<Polynomial, PolyError> {
        self.compose_capped(args, Some(cap))
    }

    fn compose_capped(&self, args: &[Polynomial], cap: Option<u32>) -> Result<Polynomial, PolyError> {
        if args.len() != self.nvars {
            return Err(PolyError::ArityMismatch {
                expected: self.nvars,
                found: args.len(),
            });
        }
        let target_nvars = args.first().map_or(self.nvars, |a| a.nvars);
        for a in args {
            if a.domain != self.domain {
                return Err(PolyError::DomainMismatch {
                    left: self.domain,
                    right: a.domain,
                });
            }
            if a.nvars != target_nvars {
                return Err(PolyError::ArityMismatch {
                    expected: target_nvars,
                    found: a.nvars,
                });
            }
        }
        // powers[i][e] = args[i]^e, built on demand
        let mut powers: Vec<Vec<Polynomial>> = args
            .iter()
            .map(|a| vec![Polynomial::one(self.domain, target_nvars), a.clone()])
            .collect();
        let mut acc = Polynomial::zero(self.domain, target_nvars);
        for (mon, coeff) in &self.terms {
            let mut term = Polynomial::constant(coeff.clone(), target_nvars);
            for (i, &e) in mon.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul_capped(&args[i], cap);
                    powers[i].push(next);
                }
                term = term.mul_capped(&powers[i][e as usize], cap);
                if term.is_zero() {
                    break;
                }
            }
            acc = acc.add(&term)?;
        }
        if let Some(cap) = cap {
            acc = acc.truncate_total_degree(cap);
        }
        Ok(acc)
    }

    /// Exact evaluation at a point of the coefficient domain.
    pub fn evaluate(&self, point: &[Coefficient]) -> Result<Coefficient, PolyError> {
        if point.len() != self.nvars {
            return Err(PolyError::ArityMismatch {
                expected: self.nvars,
                found: point.len(),
            });
        }
        for c in point {
            if c.domain() != self.domain {
                return Err(PolyError::DomainMismatch {
                    left: self.domain,
                    right: c.domain(),
                });
            }
        }
        let mut acc = self.domain.zero();
        for (mon, coeff) in &self.terms {
            let mut t = coeff.clone();
            for (i, &e) in mon.exponents().iter().enumerate() {
                for _ in 0..e {
                    t = t.mul(&point[i]);
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Keeps the terms of total degree at most `d`.
    pub fn truncate_total_degree(&self, d: u32) -> Polynomial {
        Polynomial {
            domain: self.domain,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.total_degree() <= d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The degree-1 terms.
    pub fn linear_part(&self) -> Polynomial {
        Polynomial {
            domain: self.domain,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.total_degree() == 1)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The terms of degree at most one (constant plus linear).
    pub fn affine_part(&self) -> Polynomial {
        self.truncate_total_degree(1)
    }

    /// Moves the polynomial into a new ambient space. `assignment[i]` gives
    /// the new index of old variable `i`, or `None` if the variable must be
    /// unused. The assignment must be injective on used variables.
    pub fn map_variables(
        &self,
        new_nvars: usize,
        assignment: &[Option<usize>],
    ) -> Result<Polynomial, PolyError> {
        if assignment.len() != self.nvars {
            return Err(PolyError::ArityMismatch {
                expected: self.nvars,
                found: assignment.len(),
            });
        }
        let mut seen = vec![false; new_nvars];
        for target in assignment.iter().flatten() {
            if *target >= new_nvars {
                return Err(PolyError::VariableOutOfRange {
                    index: *target,
                    nvars: new_nvars,
                });
            }
            if seen[*target] {
                return Err(PolyError::NonInjectiveRenaming);
            }
            seen[*target] = true;
        }
        let mut out = Polynomial::zero(self.domain, new_nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0u32; new_nvars];
            for (i, &exp) in m.exponents().iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                match assignment[i] {
                    Some(j) => e[j] = exp,
                    None => {
                        return Err(PolyError::VariableOutOfRange {
                            index: i,
                            nvars: new_nvars,
                        })
                    }
                }
            }
            out.insert_term(Monomial::new(e), c.clone());
        }
        Ok(out)
    }

    pub fn uses_variable(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.exponent(i) > 0)
    }

    /// Monic rescale; `None` when the leading coefficient is not invertible.
    pub fn make_monic(&self, order: &MonomialOrder) -> Option<Polynomial> {
        let (_, lc) = self.leading_term(order)?;
        let inv = lc.inverse()?;
        Some(self.mul_term(&Monomial::unit(self.nvars), &inv))
    }
}
