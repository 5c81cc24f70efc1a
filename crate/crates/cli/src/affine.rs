//! Affine normalization: factoring a map as `F = L o F'` with `L` affine
//! and `F'` centered with identity linear part, so the iterative engines can
//! run on `F'` and results conjugate back through `L`.
//!
//! Inverses come back as `F^-1 = F'^-1 o L^-1`; the preimage of a point `c`
//! is the preimage of `L^-1(c)` under `F'`.

use polyinv_core::endo::PolyMap;
use polyinv_core::poly::Polynomial;
use polyinv_core::ring::{Coefficient, DomainDescriptor};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AffineError {
    #[error("linear part is singular; the iterative engines do not apply (the Groebner engines still do)")]
    LinearPartSingular,
    #[error("linear part is invertible over QQ but not over ZZ")]
    NotInvertibleOverIntegers,
    #[error(transparent)]
    Endo(#[from] polyinv_core::endo::EndoError),
    #[error(transparent)]
    Poly(#[from] polyinv_core::poly::PolyError),
}

/// The factorization `F = L o F'`.
#[derive(Debug, Clone)]
pub struct AffineNormalization {
    /// The affine map `L(x) = A x + c` carrying the affine part of `F`.
    pub l: PolyMap,
    /// `L^-1(x) = A^-1 (x - c)`.
    pub l_inverse: PolyMap,
    /// `F' = L^-1 o F`: centered, identity linear part.
    pub normalized: PolyMap,
}

/// Gauss-Jordan inversion. Over the integers the elimination runs in the
/// rationals and the result must come out integral.
pub fn invert_matrix(
    matrix: &[Vec<Coefficient>],
    domain: DomainDescriptor,
) -> Result<Vec<Vec<Coefficient>>, AffineError> {
    let n = matrix.len();
    if domain == DomainDescriptor::Integers {
        let qq = DomainDescriptor::Rationals;
        let lifted: Vec<Vec<Coefficient>> = matrix
            .iter()
            .map(|row| row.iter().map(|c| c.lift_to_rationals()).collect())
            .collect();
        let inverse = invert_matrix(&lifted, qq)?;
        let mut out = Vec::with_capacity(n);
        for row in inverse {
            let mut out_row = Vec::with_capacity(n);
            for c in row {
                match c.integral_value() {
                    Some(n) => out_row.push(Coefficient::Integer(n)),
                    None => return Err(AffineError::NotInvertibleOverIntegers),
                }
            }
            out.push(out_row);
        }
        return Ok(out);
    }

    // field case: row reduce [M | I]
    let mut work: Vec<Vec<Coefficient>> = matrix.to_vec();
    let mut inverse: Vec<Vec<Coefficient>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { domain.one() } else { domain.zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let Some(pivot_row) = (col..n).find(|&r| !work[r][col].is_zero()) else {
            return Err(AffineError::LinearPartSingular);
        };
        work.swap(col, pivot_row);
        inverse.swap(col, pivot_row);
        let inv = work[col][col]
            .inverse()
            .expect("field element is nonzero");
        for j in 0..n {
            work[col][j] = work[col][j].mul(&inv);
            inverse[col][j] = inverse[col][j].mul(&inv);
        }
        for row in 0..n {
            if row == col || work[row][col].is_zero() {
                continue;
            }
            let factor = work[row][col].clone();
            for j in 0..n {
                work[row][j] = work[row][j].sub(&factor.mul(&work[col][j]));
                inverse[row][j] = inverse[row][j].sub(&factor.mul(&inverse[col][j]));
            }
        }
    }
    Ok(inverse)
}

fn affine_map(
    matrix: &[Vec<Coefficient>],
    shift: &[Coefficient],
    template: &PolyMap,
) -> Result<PolyMap, AffineError> {
    let n = template.nvars();
    let domain = template.domain();
    let mut components = Vec::with_capacity(n);
    for i in 0..n {
        let mut comp = Polynomial::constant(shift[i].clone(), n);
        for (j, entry) in matrix[i].iter().enumerate() {
            let term = Polynomial::variable(domain, n, j)?.scale(entry)?;
            comp = comp.add(&term)?;
        }
        components.push(comp);
    }
    Ok(PolyMap::new(components, template.vars().to_vec())?)
}

/// Factors `F = L o F'` with `L` a pure translation by `F(0)`, leaving the
/// linear part of `F'` untouched. This is what the p-adic path uses: its
/// admissibility condition tolerates a non-identity linear part but not a
/// constant term.
pub fn translation_normalize(map: &PolyMap) -> Result<AffineNormalization, AffineError> {
    let n = map.nvars();
    let domain = map.domain();
    let constants = map.constant_part();
    let identity: Vec<Vec<Coefficient>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { domain.one() } else { domain.zero() })
                .collect()
        })
        .collect();
    let l = affine_map(&identity, &constants, map)?;
    let negated: Vec<Coefficient> = constants.iter().map(|c| c.neg()).collect();
    let l_inverse = affine_map(&identity, &negated, map)?;
    let normalized = l_inverse.compose(map)?;
    debug_assert!(normalized.is_centered());
    Ok(AffineNormalization {
        l,
        l_inverse,
        normalized,
    })
}

/// Factors `F = L o F'`. Fails if the linear part is singular (or, over the
/// integers, not unimodular).
pub fn affine_normalize(map: &PolyMap) -> Result<AffineNormalization, AffineError> {
    let matrix = map.linear_matrix();
    let constants = map.constant_part();
    let inverse_matrix = invert_matrix(&matrix, map.domain())?;
    let l = affine_map(&matrix, &constants, map)?;
    // L^-1(x) = A^-1 x - A^-1 c
    let neg_shift: Vec<Coefficient> = (0..map.nvars())
        .map(|i| {
            let mut acc = map.domain().zero();
            for (j, c) in constants.iter().enumerate() {
                acc = acc.add(&inverse_matrix[i][j].mul(c));
            }
            acc.neg()
        })
        .collect();
    let l_inverse = affine_map(&inverse_matrix, &neg_shift, map)?;
    let normalized = l_inverse.compose(map)?;
    debug_assert!(normalized.is_centered());
    debug_assert!(normalized.has_identity_linear_part());
    debug_assert!(l.compose(&normalized).expect("same shape") == *map);
    Ok(AffineNormalization {
        l,
        l_inverse,
        normalized,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use polyinv_core::text;

    #[test]
    fn two_adic_example_over_the_rationals() {
        let f = text::parse_map("[x + 2*y + 4*x^2, y + 2*x^2] over QQ[x,y]").unwrap();
        let norm = affine_normalize(&f).unwrap();
        assert_eq!(norm.l, text::parse_map("[x + 2*y, y] over QQ[x,y]").unwrap());
        assert_eq!(norm.l.compose(&norm.normalized).unwrap(), f);
        assert!(norm.normalized.is_centered());
        assert!(norm.normalized.has_identity_linear_part());
        // L^-1 o F collapses the cross terms entirely here
        assert_eq!(
            norm.normalized,
            text::parse_map("[x, y + 2*x^2] over QQ[x,y]").unwrap()
        );
    }

    #[test]
    fn already_normalized_maps_get_identity_l() {
        let f = text::parse_map("[X + Y^2, Y] over QQ[X,Y]").unwrap();
        let norm = affine_normalize(&f).unwrap();
        assert!(norm.l.is_identity());
        assert_eq!(norm.normalized, f);
    }

    #[test]
    fn swap_with_cubic_tail() {
        let f = text::parse_map("[y, x + y^3] over QQ[x,y]").unwrap();
        let norm = affine_normalize(&f).unwrap();
        assert_eq!(norm.l, text::parse_map("[y, x] over QQ[x,y]").unwrap());
        assert_eq!(norm.l.compose(&norm.normalized).unwrap(), f);
        // L^-1 o F puts the tail on the first coordinate
        assert_eq!(
            norm.normalized,
            text::parse_map("[x + y^3, y] over QQ[x,y]").unwrap()
        );
    }

    #[test]
    fn singular_and_non_unimodular_parts_are_rejected() {
        let f = text::parse_map("[x + y, x + y + x^2] over QQ[x,y]").unwrap();
        assert!(matches!(
            affine_normalize(&f),
            Err(AffineError::LinearPartSingular)
        ));

        let g = text::parse_map("[2*x, y] over ZZ[x,y]").unwrap();
        assert!(matches!(
            affine_normalize(&g),
            Err(AffineError::NotInvertibleOverIntegers)
        ));

        // unimodular over ZZ without unit pivots in the naive order
        let h = text::parse_map("[3*x + 2*y, 4*x + 3*y] over ZZ[x,y]").unwrap();
        let norm = affine_normalize(&h).unwrap();
        assert_eq!(norm.l.compose(&norm.normalized).unwrap(), h);
        assert!(norm.normalized.is_identity());
    }

    #[test]
    fn translations_are_carried_by_l() {
        let f = text::parse_map("[x + 1, y - 2 + x^2] over QQ[x,y]").unwrap();
        let norm = affine_normalize(&f).unwrap();
        assert_eq!(norm.l.compose(&norm.normalized).unwrap(), f);
        assert!(norm.normalized.is_centered());
    }

    #[test]
    fn factorization_law_on_sampled_affine_maps() {
        use polyinv_core::ring::DomainDescriptor;
        use polyinv_core::tame::{sample_affine_tame, TameConfig};
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for n in [2usize, 3] {
            let cfg = TameConfig::new(n);
            for _ in 0..15 {
                let pair = sample_affine_tame(&mut rng, DomainDescriptor::Rationals, &cfg);
                let norm = affine_normalize(&pair.forward).unwrap();
                assert_eq!(norm.l.compose(&norm.normalized).unwrap(), pair.forward);
                assert!(norm.normalized.is_centered());
                assert!(norm.normalized.has_identity_linear_part());
                assert!(norm.l_inverse.compose(&norm.l).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn translation_normalization_keeps_the_linear_part() {
        let f = text::parse_map("[x + 2*y + 4*x^2 + 6, y + 2*x^2 - 2] over ZZ[x,y]").unwrap();
        let norm = translation_normalize(&f).unwrap();
        assert!(norm.normalized.is_centered());
        assert_eq!(norm.l.compose(&norm.normalized).unwrap(), f);
        // the shear survives: only constants were moved into L
        assert_eq!(
            norm.normalized,
            text::parse_map("[x + 2*y + 4*x^2, y + 2*x^2] over ZZ[x,y]").unwrap()
        );
    }
}
