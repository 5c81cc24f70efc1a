//! Exact-arithmetic toolkit for polynomial endomorphisms: iterative
//! inversion of polynomial automorphisms over composition-filtrations,
//! preimages of points and parametrized curves, and the Groebner-basis
//! criteria for both — built to cross-validate each other.

pub mod endo;
pub mod filtration;
pub mod groebner;
pub mod inverse;
pub mod poly;
pub mod preimage;
pub mod ring;
pub mod tame;
pub mod text;

pub use endo::{normalize, Curve, EndoError, NormalizedMap, PolyMap};
pub use filtration::{FiltrationError, FiltrationSpec};
pub use groebner::{
    buchberger_reduced, gb_curve_preimage, gb_inverse, gb_point_preimage, normal_form, BasisShape,
    CurvePreimageViaGroebner, GroebnerError, GroebnerResult, IdealBasis, InverseViaGroebner,
    PointPreimageViaGroebner,
};
pub use inverse::{
    degree_bound, default_budget, iterative_inverse, iterative_inverse_traced, InverseError,
    InverseOutcome, InverseRun,
};
pub use poly::{BlockOrder, Degree, Monomial, MonomialOrder, PolyError, Polynomial};
pub use preimage::{
    curve_preimage, curve_preimage_traced, default_max_degree, point_preimage,
    PointPreimageOutcome, PreimageError, PreimageOutcome, PreimageRun,
};
pub use ring::{balanced_residue, is_prime_u64, Coefficient, DomainDescriptor, RingError};
