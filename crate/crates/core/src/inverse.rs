//! Iterative inversion of polynomial maps over a composition-filtration.
//!
//! Writing `F = I - H` with `H` admissible for the chosen filtration, the
//! iteration `K_0 = 0`, `K_{d+1} = s_{d+1} pi_{d+1} (H(I + K_d))` converges
//! to the `K` with `F^{-1} = I + K` whenever `F` is invertible. Stabilization
//! (`K_{d+1} = K_d` at the start of a plateau) triggers the exact check
//! `H(I + K_d) = K_d`; a passing check is confirmed by composing both ways
//! before anything is returned. Spurious plateaus happen in practice — the
//! 2-adic examples stabilize twice before producing the inverse — so the
//! check fires on every plateau start and once more at the budget boundary.
//!
//! Over the degree filtration the bound `deg(F^{-1}) <= deg(F)^(n-1)` (valid
//! over reduced coefficient rings; all three domains here qualify) turns the
//! loop into a decision procedure: passing the bound without a verified
//! inverse proves there is none.

use crate::endo::PolyMap;
use crate::filtration::{FiltrationError, FiltrationSpec};
use crate::poly::Degree;
use crate::ring::DomainDescriptor;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InverseError {
    #[error("map is not centered: the iteration needs F(0) = 0")]
    NotCentered,
    #[error("H = I - F is not admissible for the {0} filtration")]
    Inadmissible(FiltrationSpec),
    #[error("the p-adic filtration requires the ZZ domain, got {0}")]
    RequiresIntegers(DomainDescriptor),
    #[error(transparent)]
    Filtration(#[from] FiltrationError),
    #[error(transparent)]
    Endo(#[from] crate::endo::EndoError),
}

/// Result of an inversion run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InverseOutcome {
    /// A two-sided verified inverse, with the number of iteration steps
    /// that produced it.
    Inverted { inverse: PolyMap, iterations: u32 },
    /// The degree bound was passed without a verified inverse: the map has
    /// no polynomial inverse.
    NotInvertibleByDegreeBound,
    /// The iteration budget ran out without a verdict (p-adic filtrations
    /// carry no stopping bound); the last approximation is returned.
    BudgetExhausted { last_approximation: PolyMap },
}

/// An inversion run together with its iterate trace; `trace[d]` is `K_d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseRun {
    pub outcome: InverseOutcome,
    pub trace: Vec<PolyMap>,
}

/// `deg(F)^(n-1)`, the bound on the degree of the inverse of an invertible
/// map over a reduced coefficient ring.
pub fn degree_bound(map: &PolyMap) -> u32 {
    let deg = match map.degree() {
        Degree::Finite(d) => d.max(1),
        Degree::MinusInfinity => 1,
    };
    let n = map.nvars() as u32;
    deg.saturating_pow(n.saturating_sub(1))
}

/// The iteration budget: one step past the degree bound for the degree
/// filtration (making the run a decision procedure), a flat default for
/// p-adic runs where no bound exists.
pub fn default_budget(map: &PolyMap, spec: &FiltrationSpec) -> u32 {
    match spec {
        FiltrationSpec::Degree => degree_bound(map).saturating_add(1),
        FiltrationSpec::PAdic(_) => 64,
    }
}

/// Runs the filtration iteration on `F`, requiring `F(0) = 0` and
/// `H = I - F` admissible for `spec`. `budget` caps the number of iteration
/// steps; `None` picks [`default_budget`].
pub fn iterative_inverse(
    map: &PolyMap,
    spec: &FiltrationSpec,
    budget: Option<u32>,
) -> Result<InverseOutcome, InverseError> {
    iterative_inverse_traced(map, spec, budget).map(|run| run.outcome)
}

/// As [`iterative_inverse`], also returning every iterate.
pub fn iterative_inverse_traced(
    map: &PolyMap,
    spec: &FiltrationSpec,
    budget: Option<u32>,
) -> Result<InverseRun, InverseError> {
    if let FiltrationSpec::PAdic(_) = spec {
        if map.domain() != DomainDescriptor::Integers {
            return Err(InverseError::RequiresIntegers(map.domain()));
        }
    }
    if !map.is_centered() {
        return Err(InverseError::NotCentered);
    }
    let h = map.h_part();
    if !spec.check_h_admissible(&h) {
        return Err(InverseError::Inadmissible(*spec));
    }
    let budget = budget.unwrap_or_else(|| default_budget(map, spec)).max(1);
    let identity = PolyMap::identity(map.domain(), map.vars().to_vec());
    let zero = PolyMap::zero(map.domain(), map.vars().to_vec());

    let mut trace = vec![zero.clone()];
    let mut previous: Option<PolyMap> = None; // K_{d-1}
    let mut current = zero; // K_d
    for d in 0..budget {
        let i_plus_k = identity.add(&current)?;
        let phi = match spec {
            FiltrationSpec::Degree => h.compose_mod_degree(&i_plus_k, d + 1)?,
            FiltrationSpec::PAdic(_) => h.compose(&i_plus_k)?,
        };
        let next = spec.project_map(&phi, d + 1)?;
        trace.push(next.clone());
        let plateau_start = next == current && previous.as_ref() != Some(&current);
        if plateau_start {
            if let Some(inverse) = confirm(map, &h, &identity, &current)? {
                return Ok(InverseRun {
                    outcome: InverseOutcome::Inverted {
                        inverse,
                        iterations: d + 1,
                    },
                    trace,
                });
            }
        }
        previous = Some(std::mem::replace(&mut current, next));
    }
    // the budget boundary gets a final check even without a fresh plateau
    if let Some(inverse) = confirm(map, &h, &identity, &current)? {
        return Ok(InverseRun {
            outcome: InverseOutcome::Inverted {
                inverse,
                iterations: budget,
            },
            trace,
        });
    }
    let outcome = match spec {
        FiltrationSpec::Degree if budget > degree_bound(map) => {
            InverseOutcome::NotInvertibleByDegreeBound
        }
        _ => InverseOutcome::BudgetExhausted {
            last_approximation: current,
        },
    };
    Ok(InverseRun { outcome, trace })
}

/// The exact stop test `H(I + K) = K`, followed by two-sided composition
/// checks on the candidate `I + K`.
fn confirm(
    map: &PolyMap,
    h: &PolyMap,
    identity: &PolyMap,
    k: &PolyMap,
) -> Result<Option<PolyMap>, InverseError> {
    let candidate = identity.add(k)?;
    if h.compose(&candidate)? != *k {
        return Ok(None);
    }
    if map.compose(&candidate)?.is_identity() && candidate.compose(map)?.is_identity() {
        Ok(Some(candidate))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text;

    #[test]
    fn identity_inverts_immediately() {
        let id = text::parse_map("[x, y] over QQ[x,y]").unwrap();
        match iterative_inverse(&id, &FiltrationSpec::Degree, None).unwrap() {
            InverseOutcome::Inverted { inverse, iterations } => {
                assert!(inverse.is_identity());
                assert!(iterations <= 2);
            }
            other => panic!("expected inversion, got {other:?}"),
        }
    }

    #[test]
    fn degree_bound_rejects_non_automorphism() {
        // Jacobian determinant of (x + y^2, y + x^2) is 1 - 4xy, so this has
        // no polynomial inverse; the bound is deg^1 = 2.
        let f = text::parse_map("[x + y^2, y + x^2] over QQ[x,y]").unwrap();
        let run = iterative_inverse_traced(&f, &FiltrationSpec::Degree, None).unwrap();
        assert_eq!(run.outcome, InverseOutcome::NotInvertibleByDegreeBound);
        assert_eq!(run.trace.len() as u32, default_budget(&f, &FiltrationSpec::Degree) + 1);
    }

    #[test]
    fn padic_budget_exhaustion_is_honest() {
        // x + 2x^2 has no polynomial inverse; the 2-adic run cannot know and
        // must say so.
        let f = text::parse_map("[x + 2*x^2] over ZZ[x]").unwrap();
        match iterative_inverse(&f, &FiltrationSpec::padic(2).unwrap(), Some(6)).unwrap() {
            InverseOutcome::BudgetExhausted { .. } => {}
            other => panic!("expected budget exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn preconditions() {
        let shifted = text::parse_map("[x + 1, y] over QQ[x,y]").unwrap();
        assert!(matches!(
            iterative_inverse(&shifted, &FiltrationSpec::Degree, None),
            Err(InverseError::NotCentered)
        ));

        // linear part not the identity: inadmissible for the degree path
        let f = text::parse_map("[x + 2*y + 4*x^2, y + 2*x^2] over QQ[x,y]").unwrap();
        assert!(matches!(
            iterative_inverse(&f, &FiltrationSpec::Degree, None),
            Err(InverseError::Inadmissible(_))
        ));

        // p-adic over the rationals is refused up front
        assert!(matches!(
            iterative_inverse(&f, &FiltrationSpec::PAdic(2), None),
            Err(InverseError::RequiresIntegers(_))
        ));

        // odd coefficient: not 2-adically admissible
        let g = text::parse_map("[x + 3*y^2, y] over ZZ[x,y]").unwrap();
        assert!(matches!(
            iterative_inverse(&g, &FiltrationSpec::PAdic(2), None),
            Err(InverseError::Inadmissible(_))
        ));
    }

    #[test]
    fn small_budget_on_degree_filtration_is_inconclusive() {
        // a user budget below the degree bound cannot prove anything
        let f = text::parse_map("[X + Y^2 + 2*X^2*Y + X^4, Y + X^2] over QQ[X,Y]").unwrap();
        match iterative_inverse(&f, &FiltrationSpec::Degree, Some(2)).unwrap() {
            InverseOutcome::BudgetExhausted { last_approximation } => {
                assert!(!last_approximation.is_zero());
            }
            other => panic!("expected budget exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn degree_bounds() {
        let f = text::parse_map("[X + Y^2 + 2*X^2*Y + X^4, Y + X^2] over QQ[X,Y]").unwrap();
        assert_eq!(degree_bound(&f), 4);
        assert_eq!(default_budget(&f, &FiltrationSpec::Degree), 5);
        let id3 = text::parse_map("[x, y, z] over QQ[x,y,z]").unwrap();
        assert_eq!(degree_bound(&id3), 1);
    }
}
