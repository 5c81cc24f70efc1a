//! Iterative preimages of parametrized curves, and point preimages through
//! the line `t -> c t`.
//!
//! For `F = I - H` with `H` of zero affine part and a centered curve `f`,
//! the iteration `K_1 = 0`, `K_{d+1} = H(f + K_d) mod t^{d+1}` satisfies
//! `K_d = g - f mod t^d` whenever some centered polynomial curve `g` with
//! `F(g) = f` exists, so it reaches `g - f` exactly and stops. The preimage
//! is unique when it exists (the power-series inverse of `F` pins it down),
//! which also means a verified answer is THE answer.
//!
//! Only parametrized preimages are found: a point may lie in the image of
//! `F` while no centered polynomial curve through it has one. Budget
//! exhaustion is therefore reported as "not found within degree", never as
//! nonexistence — the Groebner route is the one that can give evidence.

use crate::endo::{Curve, PolyMap};
use crate::poly::Degree;
use crate::ring::{Coefficient, DomainDescriptor};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PreimageError {
    #[error("map is not centered: the iteration needs F(0) = 0")]
    NotCentered,
    #[error("H = I - F must have zero affine part (identity linear part)")]
    Inadmissible,
    #[error("expected {expected} coordinates, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("domain mismatch: {left} vs {right}")]
    DomainMismatch {
        left: DomainDescriptor,
        right: DomainDescriptor,
    },
    #[error(transparent)]
    Endo(#[from] crate::endo::EndoError),
}

/// Result of a curve-preimage run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PreimageOutcome {
    /// The unique centered preimage curve, verified by substitution.
    Found { curve: Curve, iterations: u32 },
    /// No preimage of t-degree within the budget; either none exists or it
    /// is larger than the budget allowed.
    NotFoundWithinDegree { max_degree: u32, last_approximation: Curve },
    /// A candidate passed the stop test but failed exact re-verification.
    /// Unreachable for exact arithmetic; kept so the engine never has to
    /// report a wrong answer as success.
    Inconsistent,
}

/// A run with its iterate trace; `trace[i]` is `K_{i+1}` (so `trace[0]` is
/// `K_1 = 0`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreimageRun {
    pub outcome: PreimageOutcome,
    pub trace: Vec<Curve>,
}

/// Result of a point-preimage query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointPreimageOutcome {
    Found(Vec<Coefficient>),
    NotFound,
}

/// Default t-degree budget: if `F` is invertible its inverse has degree at
/// most `deg(F)^(n-1)`, so preimages of `f` live in t-degree at most
/// `deg(F)^(n-1) * deg_t(f)`; a small margin covers the plateau detection.
pub fn default_max_degree(map: &PolyMap, f: &Curve) -> u32 {
    let deg_f = match f.t_degree() {
        Degree::Finite(d) => d,
        Degree::MinusInfinity => 0,
    };
    crate::inverse::degree_bound(map)
        .saturating_mul(deg_f)
        .saturating_add(2)
}

/// Computes the centered curve `g` with `F(g) = f`, iterating up to
/// t-degree `max_degree` (`None` picks [`default_max_degree`]).
pub fn curve_preimage(
    map: &PolyMap,
    f: &Curve,
    max_degree: Option<u32>,
) -> Result<PreimageOutcome, PreimageError> {
    curve_preimage_traced(map, f, max_degree).map(|run| run.outcome)
}

/// As [`curve_preimage`], also returning every iterate.
pub fn curve_preimage_traced(
    map: &PolyMap,
    f: &Curve,
    max_degree: Option<u32>,
) -> Result<PreimageRun, PreimageError> {
    if f.len() != map.nvars() {
        return Err(PreimageError::ArityMismatch {
            expected: map.nvars(),
            found: f.len(),
        });
    }
    if f.domain() != map.domain() {
        return Err(PreimageError::DomainMismatch {
            left: map.domain(),
            right: f.domain(),
        });
    }
    if !map.is_centered() {
        return Err(PreimageError::NotCentered);
    }
    let h = map.h_part();
    if !h.components().iter().all(|c| c.affine_part().is_zero()) {
        return Err(PreimageError::Inadmissible);
    }
    let budget = max_degree
        .unwrap_or_else(|| default_max_degree(map, f))
        .max(1);

    let mut current = Curve::zero(map.domain(), map.nvars(), f.var().to_string()); // K_d
    let mut previous: Option<Curve> = None; // K_{d-1}
    let mut trace = vec![current.clone()];
    for d in 1..=budget {
        let f_plus_k = f.add(&current)?;
        let next = h.apply_to_curve_mod_t(&f_plus_k, d)?; // H(f + K_d) mod t^{d+1}
        trace.push(next.clone());
        let plateau_start = next == current && previous.as_ref() != Some(&current);
        if plateau_start {
            match confirm(map, &h, f, &current)? {
                Confirmation::Verified(curve) => {
                    return Ok(PreimageRun {
                        outcome: PreimageOutcome::Found {
                            curve,
                            iterations: d,
                        },
                        trace,
                    });
                }
                Confirmation::Inconsistent => {
                    return Ok(PreimageRun {
                        outcome: PreimageOutcome::Inconsistent,
                        trace,
                    });
                }
                Confirmation::NotYet => {}
            }
        }
        previous = Some(std::mem::replace(&mut current, next));
    }
    match confirm(map, &h, f, &current)? {
        Confirmation::Verified(curve) => Ok(PreimageRun {
            outcome: PreimageOutcome::Found {
                curve,
                iterations: budget,
            },
            trace,
        }),
        Confirmation::Inconsistent => Ok(PreimageRun {
            outcome: PreimageOutcome::Inconsistent,
            trace,
        }),
        Confirmation::NotYet => Ok(PreimageRun {
            outcome: PreimageOutcome::NotFoundWithinDegree {
                max_degree: budget,
                last_approximation: current,
            },
            trace,
        }),
    }
}

enum Confirmation {
    Verified(Curve),
    NotYet,
    Inconsistent,
}

/// Exact stop test `H(f + K) = K`; on success the candidate `f + K` is
/// re-verified by substitution into `F` before being declared the preimage.
fn confirm(map: &PolyMap, h: &PolyMap, f: &Curve, k: &Curve) -> Result<Confirmation, PreimageError> {
    let candidate = f.add(k)?;
    if h.apply_to_curve(&candidate)? != *k {
        return Ok(Confirmation::NotYet);
    }
    if map.apply_to_curve(&candidate)? == *f {
        Ok(Confirmation::Verified(candidate))
    } else {
        Ok(Confirmation::Inconsistent)
    }
}

/// Preimage of the point `c`: runs the curve engine on the line `c t` and
/// evaluates the result at `t = 1`.
pub fn point_preimage(
    map: &PolyMap,
    c: &[Coefficient],
    max_degree: Option<u32>,
) -> Result<PointPreimageOutcome, PreimageError> {
    if c.len() != map.nvars() {
        return Err(PreimageError::ArityMismatch {
            expected: map.nvars(),
            found: c.len(),
        });
    }
    for coord in c {
        if coord.domain() != map.domain() {
            return Err(PreimageError::DomainMismatch {
                left: map.domain(),
                right: coord.domain(),
            });
        }
    }
    let line = if c.iter().all(|x| x.is_zero()) {
        Curve::zero(map.domain(), map.nvars(), "t".to_string())
    } else {
        Curve::line(c, "t".to_string())?
    };
    match curve_preimage(map, &line, max_degree)? {
        PreimageOutcome::Found { curve, .. } => {
            let point = curve.evaluate(&map.domain().one())?;
            debug_assert_eq!(map.evaluate(&point)?, c.to_vec());
            Ok(PointPreimageOutcome::Found(point))
        }
        _ => Ok(PointPreimageOutcome::NotFound),
    }
}
