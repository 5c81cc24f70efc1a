//! Seeded generation of tame automorphisms and certified non-injective maps.
//!
//! A tame automorphism is built as a composition of elementary moves
//! `X_i <- X_i + m(other variables)`; reversing the moves and flipping their
//! signs gives the exact inverse, so every generated map ships with a
//! known-good inverse to test against. The affine flavor mixes in shears and
//! translations for exercising affine normalization. Non-injective maps are
//! built around a collapse component `X_0 <- X_0 + X_0 X_1`, which sends the
//! whole line `X_1 = -1` to a point; conjugating by tame automorphisms
//! preserves an explicit witness pair of distinct points with equal images.
//!
//! All sampling is driven by a caller-provided RNG; seeding it fixes the
//! output exactly, which is what the reproducible benchmark and test suites
//! rely on.

use crate::endo::{Curve, PolyMap};
use crate::poly::{Degree, Monomial, Polynomial};
use crate::ring::{Coefficient, DomainDescriptor};
use rand::Rng;

/// Shape parameters for the generator.
#[derive(Debug, Clone)]
pub struct TameConfig {
    pub nvars: usize,
    /// Maximum number of elementary moves composed.
    pub max_moves: usize,
    /// Maximum total degree of a move's tail.
    pub max_tail_degree: u32,
    /// Rejection bound on the total degree of the composition.
    pub max_total_degree: u32,
    /// Tail coefficients are drawn from `[-coeff_bound, coeff_bound] \ {0}`.
    pub coeff_bound: i64,
    /// Every sampled tail coefficient is multiplied by this; setting it to a
    /// prime `p` makes `I - F` p-adically admissible over the integers.
    pub tail_scale: i64,
    pub vars: Vec<String>,
}

impl TameConfig {
    pub fn new(nvars: usize) -> Self {
        let names = ["x", "y", "z", "w", "v", "u"];
        TameConfig {
            nvars,
            max_moves: 4,
            max_tail_degree: 3,
            max_total_degree: 4,
            coeff_bound: 2,
            tail_scale: 1,
            vars: (0..nvars).map(|i| names[i % names.len()].to_string()).collect(),
        }
    }
}

/// A generated automorphism with its inverse, exact by construction.
#[derive(Debug, Clone)]
pub struct TamePair {
    pub forward: PolyMap,
    pub inverse: PolyMap,
}

/// A generated non-injective map with two distinct points that share an
/// image: the certificate that no inverse can exist.
#[derive(Debug, Clone)]
pub struct CollisionMap {
    pub map: PolyMap,
    pub witness: (Vec<Coefficient>, Vec<Coefficient>),
}

/// One elementary move `X_target <- X_target +/- tail`.
struct ElementaryMove {
    target: usize,
    tail: Polynomial,
}

impl ElementaryMove {
    fn as_map(&self, domain: DomainDescriptor, vars: &[String], negate: bool) -> PolyMap {
        let n = vars.len();
        let mut components: Vec<Polynomial> = (0..n)
            .map(|i| Polynomial::variable(domain, n, i).expect("in range"))
            .collect();
        let tail = if negate { self.tail.neg() } else { self.tail.clone() };
        components[self.target] = components[self.target]
            .add(&tail)
            .expect("same domain and arity");
        PolyMap::new(components, vars.to_vec()).expect("well-formed")
    }
}

/// A random monomial tail in the variables other than `target`, every term
/// of total degree in `[2, max_tail_degree]`.
fn sample_tail<R: Rng>(
    rng: &mut R,
    domain: DomainDescriptor,
    cfg: &TameConfig,
    target: usize,
) -> Polynomial {
    let n = cfg.nvars;
    let others: Vec<usize> = (0..n).filter(|&i| i != target).collect();
    let num_terms = rng.gen_range(1..=2);
    let mut tail = Polynomial::zero(domain, n);
    for _ in 0..num_terms {
        let degree = rng.gen_range(2..=cfg.max_tail_degree.max(2));
        let mut exponents = vec![0u32; n];
        for _ in 0..degree {
            let var = others[rng.gen_range(0..others.len())];
            exponents[var] += 1;
        }
        let mut coeff = 0i64;
        while coeff == 0 {
            coeff = rng.gen_range(-cfg.coeff_bound..=cfg.coeff_bound);
        }
        let term = Polynomial::from_terms(
            domain,
            n,
            vec![(
                Monomial::new(exponents),
                domain.integer(coeff * cfg.tail_scale),
            )],
        )
        .expect("well-formed term");
        tail = tail.add(&term).expect("same shape");
    }
    tail
}

fn compose_moves(
    moves: &[ElementaryMove],
    domain: DomainDescriptor,
    vars: &[String],
) -> TamePair {
    let identity = PolyMap::identity(domain, vars.to_vec());
    let mut forward = identity.clone();
    // F = E_k o ... o E_1, so fold left-composing each new move
    for mv in moves {
        forward = mv.as_map(domain, vars, false).compose(&forward).expect("same shape");
    }
    // (E_k o ... o E_1)^(-1) = E_1^(-1) o ... o E_k^(-1)
    let mut inverse = identity;
    for mv in moves {
        inverse = inverse.compose(&mv.as_map(domain, vars, true)).expect("same shape");
    }
    TamePair { forward, inverse }
}

fn degree_of(map: &PolyMap) -> u32 {
    match map.degree() {
        Degree::Finite(d) => d,
        Degree::MinusInfinity => 0,
    }
}

/// Samples a tame automorphism with identity linear part and `F(0) = 0`,
/// rejecting compositions whose degree leaves `[2, max_total_degree]`.
pub fn sample_tame<R: Rng>(rng: &mut R, domain: DomainDescriptor, cfg: &TameConfig) -> TamePair {
    assert!(cfg.nvars >= 2, "elementary moves need at least two variables");
    assert!(cfg.tail_scale != 0, "zero tail scale makes every move trivial");
    let mut last = None;
    for _ in 0..200 {
        let count = rng.gen_range(1..=cfg.max_moves.max(1));
        let moves: Vec<ElementaryMove> = (0..count)
            .map(|_| {
                let target = rng.gen_range(0..cfg.nvars);
                ElementaryMove {
                    target,
                    tail: sample_tail(rng, domain, cfg, target),
                }
            })
            .collect();
        let pair = compose_moves(&moves, domain, &cfg.vars);
        let deg = degree_of(&pair.forward);
        if deg >= 2 && deg <= cfg.max_total_degree {
            debug_assert!(pair
                .forward
                .compose(&pair.inverse)
                .expect("same shape")
                .is_identity());
            return pair;
        }
        last = Some(pair);
    }
    last.expect("at least one attempt")
}

/// Samples a map with `F(0) = 0` and identity linear part that provably
/// collapses two points, by conjugating the collapse `X_0 <- X_0 + X_0 X_1`
/// with tame automorphisms.
pub fn sample_non_injective<R: Rng>(
    rng: &mut R,
    domain: DomainDescriptor,
    cfg: &TameConfig,
) -> CollisionMap {
    assert!(cfg.nvars >= 2);
    let n = cfg.nvars;
    let vars = cfg.vars.clone();

    // S: X_0 <- X_0 + X_0 X_1; S(a, -1, ...) = (0, -1, ...) for every a
    let mut s_components: Vec<Polynomial> = (0..n)
        .map(|i| Polynomial::variable(domain, n, i).expect("in range"))
        .collect();
    let x0x1 = Polynomial::from_terms(
        domain,
        n,
        vec![(
            Monomial::new(
                (0..n)
                    .map(|i| if i == 0 || i == 1 { 1 } else { 0 })
                    .collect(),
            ),
            domain.one(),
        )],
    )
    .expect("well-formed");
    s_components[0] = s_components[0].add(&x0x1).expect("same shape");
    let collapse = PolyMap::new(s_components, vars.clone()).expect("well-formed");

    let small = TameConfig {
        max_moves: 1,
        max_tail_degree: 2,
        max_total_degree: 3,
        ..cfg.clone()
    };
    loop {
        let outer = sample_tame(rng, domain, &small);
        let inner = sample_tame(rng, domain, &small);
        let map = outer
            .forward
            .compose(&collapse)
            .expect("same shape")
            .compose(&inner.forward)
            .expect("same shape");
        if degree_of(&map) > cfg.max_total_degree.max(4) + 2 {
            continue;
        }
        // witnesses: the inner map is bijective, so pulling back two collapsing
        // points of S stays a collision for the composite
        let mut a = vec![domain.zero(); n];
        let mut b = vec![domain.zero(); n];
        a[0] = domain.integer(1);
        b[0] = domain.integer(2);
        a[1] = domain.integer(-1);
        b[1] = domain.integer(-1);
        let wa = inner.inverse.evaluate(&a).expect("in domain");
        let wb = inner.inverse.evaluate(&b).expect("in domain");
        debug_assert_eq!(
            map.evaluate(&wa).expect("in domain"),
            map.evaluate(&wb).expect("in domain")
        );
        return CollisionMap {
            map,
            witness: (wa, wb),
        };
    }
}

/// Samples a tame automorphism composed with shears `X_i <- X_i + c X_j` and
/// translations `X_i <- X_i + c`, so the result generally has a non-identity
/// affine part. The inverse is still exact by reversal.
pub fn sample_affine_tame<R: Rng>(
    rng: &mut R,
    domain: DomainDescriptor,
    cfg: &TameConfig,
) -> TamePair {
    let base = sample_tame(rng, domain, cfg);
    let n = cfg.nvars;
    let identity = PolyMap::identity(domain, cfg.vars.clone());
    let mut forward = base.forward;
    let mut inverse = base.inverse;
    let affine_moves = rng.gen_range(1..=3);
    for _ in 0..affine_moves {
        let target = rng.gen_range(0..n);
        let shift = if rng.gen_bool(0.5) {
            // shear by another coordinate
            let mut source = rng.gen_range(0..n);
            while source == target {
                source = rng.gen_range(0..n);
            }
            let mut c = 0i64;
            while c == 0 {
                c = rng.gen_range(-2..=2);
            }
            Polynomial::variable(domain, n, source)
                .expect("in range")
                .scale(&domain.integer(c))
                .expect("same domain")
        } else {
            Polynomial::constant(domain.integer(rng.gen_range(-3..=3)), n)
        };
        let mut plus = identity.clone();
        let mut minus = identity.clone();
        let mut plus_components = plus.components().to_vec();
        let mut minus_components = minus.components().to_vec();
        plus_components[target] = plus_components[target].add(&shift).expect("same shape");
        minus_components[target] = minus_components[target].sub(&shift).expect("same shape");
        plus = PolyMap::new(plus_components, cfg.vars.clone()).expect("well-formed");
        minus = PolyMap::new(minus_components, cfg.vars.clone()).expect("well-formed");
        forward = plus.compose(&forward).expect("same shape");
        inverse = inverse.compose(&minus).expect("same shape");
    }
    TamePair { forward, inverse }
}

/// A random centered curve with `t`-degree at most `max_degree`. Components
/// may be zero.
pub fn sample_centered_curve<R: Rng>(
    rng: &mut R,
    domain: DomainDescriptor,
    n: usize,
    max_degree: u32,
    var: &str,
) -> Curve {
    let components = (0..n)
        .map(|_| {
            let mut c = Polynomial::zero(domain, 1);
            for _ in 0..rng.gen_range(0..=2usize) {
                let deg = rng.gen_range(1..=max_degree.max(1));
                let mut coeff = 0i64;
                while coeff == 0 {
                    coeff = rng.gen_range(-2..=2);
                }
                let term = Polynomial::from_terms(
                    domain,
                    1,
                    vec![(Monomial::new(vec![deg]), domain.integer(coeff))],
                )
                .expect("well-formed");
                c = c.add(&term).expect("same shape");
            }
            c
        })
        .collect();
    Curve::new(components, var.to_string()).expect("centered by construction")
}

/// Reinterprets an integral map over another domain; panics if a coefficient
/// does not embed (used to run the same seeded families over QQ and ZZ).
pub fn transport_map(map: &PolyMap, domain: DomainDescriptor) -> PolyMap {
    let components = map
        .components()
        .iter()
        .map(|c| {
            let terms: Vec<(Monomial, Coefficient)> = c
                .terms()
                .map(|(m, coeff)| {
                    let value = coeff
                        .integral_value()
                        .unwrap_or_else(|| panic!("coefficient {coeff} is not integral"));
                    (m.clone(), domain.from_bigint(value))
                })
                .collect();
            Polynomial::from_terms(domain, c.nvars(), terms).expect("integral transport")
        })
        .collect();
    PolyMap::new(components, map.vars().to_vec()).expect("same shape")
}
