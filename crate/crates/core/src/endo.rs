//! Polynomial endomorphisms of n-space, their normal form `F = I - H`, and
//! parametrized curves.

use crate::poly::{Degree, PolyError, Polynomial};
use crate::ring::{Coefficient, DomainDescriptor};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EndoError {
    #[error("map components must agree in domain and arity")]
    InconsistentComponents,
    #[error("a map needs at least one component")]
    Empty,
    #[error("expected {expected} components/coordinates, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("domain mismatch: {left} vs {right}")]
    DomainMismatch {
        left: DomainDescriptor,
        right: DomainDescriptor,
    },
    #[error("map is not centered: F(0) = ({})", render_point(.0))]
    NotCentered(Vec<Coefficient>),
    #[error("linear part is not the identity: {}", render_matrix(.0))]
    LinearPartNotIdentity(Vec<Vec<Coefficient>>),
    #[error("curve component {component} has nonzero constant term {value}")]
    CurveNotCentered {
        component: usize,
        value: Coefficient,
    },
    #[error("curve components must be univariate")]
    CurveNotUnivariate,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

fn render_point(p: &[Coefficient]) -> String {
    p.iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn render_matrix(m: &[Vec<Coefficient>]) -> String {
    let rows: Vec<String> = m.iter().map(|r| format!("[{}]", render_point(r))).collect();
    format!("[{}]", rows.join(", "))
}

/// An n-tuple of polynomials in n variables: a polynomial self-map of n-space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMap {
    components: Vec<Polynomial>,
    vars: Vec<String>,
}

impl PolyMap {
    pub fn new(components: Vec<Polynomial>, vars: Vec<String>) -> Result<Self, EndoError> {
        if components.is_empty() {
            return Err(EndoError::Empty);
        }
        let n = components.len();
        if vars.len() != n {
            return Err(EndoError::ArityMismatch {
                expected: n,
                found: vars.len(),
            });
        }
        let domain = components[0].domain();
        for c in &components {
            if c.domain() != domain || c.nvars() != n {
                return Err(EndoError::InconsistentComponents);
            }
        }
        Ok(PolyMap { components, vars })
    }

    pub fn identity(domain: DomainDescriptor, vars: Vec<String>) -> Self {
        let n = vars.len();
        assert!(n > 0);
        let components = (0..n)
            .map(|i| Polynomial::variable(domain, n, i).expect("index in range"))
            .collect();
        PolyMap { components, vars }
    }

    pub fn zero(domain: DomainDescriptor, vars: Vec<String>) -> Self {
        let n = vars.len();
        assert!(n > 0);
        PolyMap {
            components: vec![Polynomial::zero(domain, n); n],
            vars,
        }
    }

    pub fn nvars(&self) -> usize {
        self.components.len()
    }

    pub fn domain(&self) -> DomainDescriptor {
        self.components[0].domain()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.components[i]
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Largest total degree over the components.
    pub fn degree(&self) -> Degree {
        self.components
            .iter()
            .map(|c| c.degree())
            .max()
            .unwrap_or(Degree::MinusInfinity)
    }

    pub fn is_identity(&self) -> bool {
        let domain = self.domain();
        self.components.iter().enumerate().all(|(i, c)| {
            Polynomial::variable(domain, self.nvars(), i)
                .map(|v| v == *c)
                .unwrap_or(false)
        })
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }

    /// F(0).
    pub fn constant_part(&self) -> Vec<Coefficient> {
        self.components.iter().map(|c| c.constant_term()).collect()
    }

    pub fn is_centered(&self) -> bool {
        self.constant_part().iter().all(|c| c.is_zero())
    }

    /// The matrix of the linear part: entry `(i, j)` is the coefficient of
    /// variable `j` in component `i`.
    pub fn linear_matrix(&self) -> Vec<Vec<Coefficient>> {
        let n = self.nvars();
        self.components
            .iter()
            .map(|c| {
                (0..n)
                    .map(|j| c.coefficient(&crate::poly::Monomial::variable(n, j)))
                    .collect()
            })
            .collect()
    }

    pub fn has_identity_linear_part(&self) -> bool {
        let domain = self.domain();
        self.linear_matrix().iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, c)| {
                if i == j {
                    c.is_one()
                } else {
                    c.is_zero()
                }
            })
        }) && domain == self.domain()
    }

    fn check_compatible(&self, other: &PolyMap) -> Result<(), EndoError> {
        if self.domain() != other.domain() {
            return Err(EndoError::DomainMismatch {
                left: self.domain(),
                right: other.domain(),
            });
        }
        if self.nvars() != other.nvars() {
            return Err(EndoError::ArityMismatch {
                expected: self.nvars(),
                found: other.nvars(),
            });
        }
        Ok(())
    }

    /// Componentwise sum (plumbing for the iteration engines).
    pub fn add(&self, other: &PolyMap) -> Result<PolyMap, EndoError> {
        self.check_compatible(other)?;
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_, _>>()?;
        Ok(PolyMap {
            components,
            vars: self.vars.clone(),
        })
    }

    pub fn sub(&self, other: &PolyMap) -> Result<PolyMap, EndoError> {
        self.check_compatible(other)?;
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.sub(b))
            .collect::<Result<_, _>>()?;
        Ok(PolyMap {
            components,
            vars: self.vars.clone(),
        })
    }

    /// `H := I - F`, the defect of the map from the identity.
    pub fn h_part(&self) -> PolyMap {
        let identity = PolyMap::identity(self.domain(), self.vars.clone());
        identity.sub(self).expect("same shape by construction")
    }

    /// Exact componentwise evaluation.
    pub fn evaluate(&self, point: &[Coefficient]) -> Result<Vec<Coefficient>, EndoError> {
        if point.len() != self.nvars() {
            return Err(EndoError::ArityMismatch {
                expected: self.nvars(),
                found: point.len(),
            });
        }
        self.components
            .iter()
            .map(|c| c.evaluate(point).map_err(EndoError::from))
            .collect()
    }

    /// `F after G`: substitutes `other`'s components into each component of
    /// `self`.
    pub fn compose(&self, other: &PolyMap) -> Result<PolyMap, EndoError> {
        self.check_compatible(other)?;
        let components = self
            .components
            .iter()
            .map(|c| c.compose(&other.components))
            .collect::<Result<_, _>>()?;
        Ok(PolyMap {
            components,
            vars: other.vars.clone(),
        })
    }

    /// Composition with all intermediates truncated to total degree `cap`.
    pub fn compose_mod_degree(&self, other: &PolyMap, cap: u32) -> Result<PolyMap, EndoError> {
        self.check_compatible(other)?;
        let components = self
            .components
            .iter()
            .map(|c| c.compose_mod_degree(&other.components, cap))
            .collect::<Result<_, _>>()?;
        Ok(PolyMap {
            components,
            vars: other.vars.clone(),
        })
    }

    /// Substitutes a centered curve into a centered map; the image is again
    /// a centered curve.
    pub fn apply_to_curve(&self, g: &Curve) -> Result<Curve, EndoError> {
        self.apply_to_curve_capped(g, None)
    }

    /// Curve substitution truncated to t-degree `cap`.
    pub fn apply_to_curve_mod_t(&self, g: &Curve, cap: u32) -> Result<Curve, EndoError> {
        self.apply_to_curve_capped(g, Some(cap))
    }

    fn apply_to_curve_capped(&self, g: &Curve, cap: Option<u32>) -> Result<Curve, EndoError> {
        if g.len() != self.nvars() {
            return Err(EndoError::ArityMismatch {
                expected: self.nvars(),
                found: g.len(),
            });
        }
        if g.domain() != self.domain() {
            return Err(EndoError::DomainMismatch {
                left: self.domain(),
                right: g.domain(),
            });
        }
        if !self.is_centered() {
            return Err(EndoError::NotCentered(self.constant_part()));
        }
        let components = self
            .components
            .iter()
            .map(|c| match cap {
                Some(cap) => c.compose_mod_degree(g.components(), cap),
                None => c.compose(g.components()),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Curve::new(components, g.var().to_string())
    }
}

/// A centered map with identity linear part, stored as `F = I - H` where
/// `H` has zero affine part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedMap {
    base: PolyMap,
    h: PolyMap,
}

impl NormalizedMap {
    pub fn base(&self) -> &PolyMap {
        &self.base
    }

    pub fn h_part(&self) -> &PolyMap {
        &self.h
    }

    /// Rebuilds `I - H`; equal to `base` by construction.
    pub fn reconstruct(&self) -> PolyMap {
        let identity = PolyMap::identity(self.base.domain(), self.base.vars().to_vec());
        identity.sub(&self.h).expect("same shape")
    }
}

/// Splits `F = I - H`, requiring `F(0) = 0` and linear part exactly the
/// identity so that `H` has zero affine part.
pub fn normalize(map: &PolyMap) -> Result<NormalizedMap, EndoError> {
    if !map.is_centered() {
        return Err(EndoError::NotCentered(map.constant_part()));
    }
    if !map.has_identity_linear_part() {
        return Err(EndoError::LinearPartNotIdentity(map.linear_matrix()));
    }
    let h = map.h_part();
    debug_assert!(h.components().iter().all(|c| c.affine_part().is_zero()));
    Ok(NormalizedMap {
        base: map.clone(),
        h,
    })
}

/// An n-tuple of univariate polynomials in `t` with zero constant term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Curve {
    components: Vec<Polynomial>,
    var: String,
}

impl Curve {
    pub fn new(components: Vec<Polynomial>, var: String) -> Result<Self, EndoError> {
        if components.is_empty() {
            return Err(EndoError::Empty);
        }
        let domain = components[0].domain();
        for c in &components {
            if c.nvars() != 1 {
                return Err(EndoError::CurveNotUnivariate);
            }
            if c.domain() != domain {
                return Err(EndoError::InconsistentComponents);
            }
        }
        for (i, c) in components.iter().enumerate() {
            let c0 = c.constant_term();
            if !c0.is_zero() {
                return Err(EndoError::CurveNotCentered {
                    component: i,
                    value: c0,
                });
            }
        }
        Ok(Curve { components, var })
    }

    pub fn zero(domain: DomainDescriptor, n: usize, var: String) -> Self {
        Curve {
            components: vec![Polynomial::zero(domain, 1); n],
            var,
        }
    }

    /// The line `t -> (c_1 t, ..., c_n t)` through a point.
    pub fn line(point: &[Coefficient], var: String) -> Result<Self, EndoError> {
        if point.is_empty() {
            return Err(EndoError::Empty);
        }
        let components = point
            .iter()
            .map(|c| {
                Polynomial::from_terms(
                    c.domain(),
                    1,
                    vec![(crate::poly::Monomial::new(vec![1]), c.clone())],
                )
            })
            .collect::<Result<Vec<_>, _>>()?;
        Curve::new(components, var)
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn domain(&self) -> DomainDescriptor {
        self.components[0].domain()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.components[i]
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }

    /// Largest t-degree over the components.
    pub fn t_degree(&self) -> Degree {
        self.components
            .iter()
            .map(|c| c.degree())
            .max()
            .unwrap_or(Degree::MinusInfinity)
    }

    pub fn add(&self, other: &Curve) -> Result<Curve, EndoError> {
        if self.len() != other.len() {
            return Err(EndoError::ArityMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>, _>>()?;
        Curve::new(components, self.var.clone())
    }

    pub fn sub(&self, other: &Curve) -> Result<Curve, EndoError> {
        if self.len() != other.len() {
            return Err(EndoError::ArityMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.sub(b))
            .collect::<Result<Vec<_>, _>>()?;
        Curve::new(components, self.var.clone())
    }

    /// Keeps t-degrees at most `d` in every component.
    pub fn truncate(&self, d: u32) -> Curve {
        Curve {
            components: self
                .components
                .iter()
                .map(|c| c.truncate_total_degree(d))
                .collect(),
            var: self.var.clone(),
        }
    }

    pub fn evaluate(&self, t: &Coefficient) -> Result<Vec<Coefficient>, EndoError> {
        self.components
            .iter()
            .map(|c| c.evaluate(std::slice::from_ref(t)).map_err(EndoError::from))
            .collect()
    }
}
