//! Buchberger's algorithm with reduced bases, and the Groebner-basis
//! criteria for map inversion and point/curve preimages.
//!
//! Inversion: the reduced basis of `(Y_1 - F_1, ..., Y_n - F_n)` under an
//! order with every X-monomial above every Y-monomial has the shape
//! `(X_1 - G_1(Y), ..., X_n - G_n(Y))` exactly when `F` is invertible, and
//! then `G` is the inverse. Point preimages use `(c_i - F_i)` in `k[X]`;
//! curve preimages use `(F_i - f_i(t))` in `k[t][X]`, handled as `k[t, X]`
//! with the X-block eliminated first.
//!
//! Coefficients must form a field (the rationals or a prime field): the
//! division steps invert leading coefficients freely.

use crate::endo::{Curve, PolyMap};
use crate::poly::{Monomial, MonomialOrder, PolyError, Polynomial};
use crate::ring::{Coefficient, DomainDescriptor};
use std::cmp::Ordering;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("Groebner routines need field coefficients, got {0}")]
    NonFieldDomain(DomainDescriptor),
    #[error("generators must agree in domain and arity")]
    InconsistentGenerators,
    #[error("within-block order must be lex or grevlex")]
    InvalidInnerOrder,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Endo(#[from] crate::endo::EndoError),
}

/// A generating set for an ideal together with the monomial order that all
/// basis computations use.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealBasis {
    pub generators: Vec<Polynomial>,
    pub order: MonomialOrder,
}

impl IdealBasis {
    pub fn new(generators: Vec<Polynomial>, order: MonomialOrder) -> Result<Self, GroebnerError> {
        let Some(first) = generators.first() else {
            return Ok(IdealBasis {
                generators,
                order,
            });
        };
        let domain = first.domain();
        let nvars = first.nvars();
        if !domain.is_field() {
            return Err(GroebnerError::NonFieldDomain(domain));
        }
        for g in &generators {
            if g.domain() != domain || g.nvars() != nvars {
                return Err(GroebnerError::InconsistentGenerators);
            }
        }
        Ok(IdealBasis { generators, order })
    }
}

/// Shape classification of a reduced basis relative to an X-block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BasisShape {
    /// One generator `X_i - g_i` per X-variable, with every `g_i` free of
    /// the X-block; `solved[i]` is `g_i` in the ambient variables.
    LinearInX { solved: Vec<Polynomial> },
    Other,
}

/// A reduced Groebner basis, sorted by descending leading monomial, plus its
/// shape relative to the order's high block (all variables for non-block
/// orders).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerResult {
    pub basis: Vec<Polynomial>,
    pub shape: BasisShape,
}

/// Remainder of `f` under multivariate division by `basis`: no remainder
/// term is divisible by any basis leading term, and `f - remainder` lies in
/// the ideal generated by `basis`.
pub fn normal_form(
    f: &Polynomial,
    basis: &[Polynomial],
    order: &MonomialOrder,
) -> Result<Polynomial, GroebnerError> {
    if !f.domain().is_field() {
        return Err(GroebnerError::NonFieldDomain(f.domain()));
    }
    let leads: Vec<(Monomial, Coefficient)> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let (m, c) = g.leading_term(order).expect("nonzero");
            (m.clone(), c.clone())
        })
        .collect();
    let divisors: Vec<&Polynomial> = basis.iter().filter(|g| !g.is_zero()).collect();
    let mut remainder = Polynomial::zero(f.domain(), f.nvars());
    let mut work = f.clone();
    while let Some((mon, coeff)) = work.leading_term(order).map(|(m, c)| (m.clone(), c.clone())) {
        let mut reduced = false;
        for (i, (lm, lc)) in leads.iter().enumerate() {
            if lm.divides(&mon) {
                let q = lm.div(&mon).expect("divides");
                let scale = coeff.mul(&lc.inverse().expect("field, nonzero lead"));
                work = work.sub(&divisors[i].mul_term(&q, &scale))?;
                reduced = true;
                break;
            }
        }
        if !reduced {
            // move the irreducible leading term to the remainder
            let term = Polynomial::from_terms(f.domain(), f.nvars(), vec![(mon, coeff)])?;
            remainder = remainder.add(&term)?;
            work = work.sub(&term)?;
        }
    }
    Ok(remainder)
}

fn s_polynomial(
    f: &Polynomial,
    g: &Polynomial,
    order: &MonomialOrder,
) -> Result<Polynomial, GroebnerError> {
    let (fm, fc) = f.leading_term(order).expect("nonzero");
    let (gm, gc) = g.leading_term(order).expect("nonzero");
    let lcm = fm.lcm(gm);
    let fq = fm.div(&lcm).expect("lcm divisible");
    let gq = gm.div(&lcm).expect("lcm divisible");
    let left = f.mul_term(&fq, &fc.inverse().expect("field, nonzero lead"));
    let right = g.mul_term(&gq, &gc.inverse().expect("field, nonzero lead"));
    Ok(left.sub(&right)?)
}

/// Computes the unique reduced Groebner basis: Buchberger's loop with the
/// coprimality and chain criteria for pair pruning and smallest-lcm-first
/// selection, followed by minimalization and tail reduction. Generators are
/// monic, sorted by descending leading monomial, and no term of any element
/// is divisible by the leading term of another.
pub fn buchberger_reduced(ideal: &IdealBasis) -> Result<GroebnerResult, GroebnerError> {
    let order = &ideal.order;
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in &ideal.generators {
        if !g.is_zero() {
            if !g.domain().is_field() {
                return Err(GroebnerError::NonFieldDomain(g.domain()));
            }
            basis.push(g.make_monic(order).expect("field, nonzero"));
        }
    }
    if basis.is_empty() {
        return Ok(GroebnerResult {
            basis,
            shape: BasisShape::Other,
        });
    }

    struct Pair {
        i: usize,
        j: usize,
        lcm: Monomial,
    }
    let lead = |basis: &[Polynomial], i: usize| -> Monomial {
        basis[i]
            .leading_term(order)
            .map(|(m, _)| m.clone())
            .expect("basis members are nonzero")
    };
    let mut pairs: Vec<Pair> = Vec::new();
    for j in 1..basis.len() {
        for i in 0..j {
            pairs.push(Pair {
                i,
                j,
                lcm: lead(&basis, i).lcm(&lead(&basis, j)),
            });
        }
    }
    while !pairs.is_empty() {
        // normal selection: smallest lcm first, ties broken by index
        let mut best = 0;
        for (idx, p) in pairs.iter().enumerate().skip(1) {
            let by_lcm = order.compare(&p.lcm, &pairs[best].lcm);
            if by_lcm == Ordering::Less
                || (by_lcm == Ordering::Equal && (p.i, p.j) < (pairs[best].i, pairs[best].j))
            {
                best = idx;
            }
        }
        let pair = pairs.swap_remove(best);
        let (lm_i, lm_j) = (lead(&basis, pair.i), lead(&basis, pair.j));
        // coprime leading terms reduce to zero: skip
        if lm_i.is_coprime_with(&lm_j) {
            continue;
        }
        // chain criterion: some k with LT(k) | lcm(i,j) and both mixed pairs
        // already handled
        let chain = (0..basis.len()).any(|k| {
            k != pair.i
                && k != pair.j
                && lead(&basis, k).divides(&pair.lcm)
                && !pairs.iter().any(|p| {
                    (p.i == pair.i.min(k) && p.j == pair.i.max(k))
                        || (p.i == pair.j.min(k) && p.j == pair.j.max(k))
                })
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[pair.i], &basis[pair.j], order)?;
        let h = normal_form(&s, &basis, order)?;
        if h.is_zero() {
            continue;
        }
        let h = h.make_monic(order).expect("field, nonzero");
        let new_index = basis.len();
        let new_lead = h.leading_term(order).map(|(m, _)| m.clone()).expect("nonzero");
        for i in 0..new_index {
            pairs.push(Pair {
                i,
                j: new_index,
                lcm: lead(&basis, i).lcm(&new_lead),
            });
        }
        basis.push(h);
    }

    // minimal basis: drop members whose leading term another one divides
    let leads: Vec<Monomial> = (0..basis.len()).map(|i| lead(&basis, i)).collect();
    let mut keep: Vec<Polynomial> = Vec::new();
    for i in 0..basis.len() {
        let redundant = (0..basis.len()).any(|j| {
            j != i
                && leads[j].divides(&leads[i])
                && (leads[j] != leads[i] || j < i)
        });
        if !redundant {
            keep.push(basis[i].clone());
        }
    }

    // tail reduction to the unique reduced basis
    let mut reduced: Vec<Polynomial> = keep.clone();
    loop {
        let mut changed = false;
        for i in 0..reduced.len() {
            let others: Vec<Polynomial> = reduced
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let nf = normal_form(&reduced[i], &others, order)?;
            let nf = nf.make_monic(order).expect("minimal basis members stay nonzero");
            if nf != reduced[i] {
                reduced[i] = nf;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    reduced.sort_by(|a, b| {
        let (ma, _) = a.leading_term(order).expect("nonzero");
        let (mb, _) = b.leading_term(order).expect("nonzero");
        order.compare(mb, ma)
    });

    let x_block: Vec<usize> = match order {
        MonomialOrder::Block(_) => high_block(order),
        _ => (0..ideal
            .generators
            .first()
            .map(|g| g.nvars())
            .unwrap_or(0))
            .collect(),
    };
    let shape = classify_shape(&reduced, &x_block, order);
    Ok(GroebnerResult {
        basis: reduced,
        shape,
    })
}

fn high_block(order: &MonomialOrder) -> Vec<usize> {
    match order {
        MonomialOrder::Block(b) => b.high().to_vec(),
        _ => Vec::new(),
    }
}

/// Checks for the solved shape `X_i - g_i` with `g_i` free of the X-block.
fn classify_shape(basis: &[Polynomial], x_block: &[usize], order: &MonomialOrder) -> BasisShape {
    if basis.len() != x_block.len() || x_block.is_empty() {
        return BasisShape::Other;
    }
    let mut solved: Vec<Option<Polynomial>> = vec![None; x_block.len()];
    for g in basis {
        let Some((lm, _)) = g.leading_term(order) else {
            return BasisShape::Other;
        };
        if lm.total_degree() != 1 {
            return BasisShape::Other;
        }
        let var = lm
            .exponents()
            .iter()
            .position(|&e| e == 1)
            .expect("degree-1 monomial");
        let Some(slot) = x_block.iter().position(|&x| x == var) else {
            return BasisShape::Other;
        };
        if solved[slot].is_some() {
            return BasisShape::Other;
        }
        // g = X_var + tail, so the solved form is -tail
        let x = Polynomial::variable(g.domain(), g.nvars(), var).expect("in range");
        let tail = g.sub(&x).expect("same shape");
        if x_block.iter().any(|&i| tail.uses_variable(i)) {
            return BasisShape::Other;
        }
        solved[slot] = Some(tail.neg());
    }
    let solved: Option<Vec<Polynomial>> = solved.into_iter().collect();
    match solved {
        Some(solved) => BasisShape::LinearInX { solved },
        None => BasisShape::Other,
    }
}

/// Outcome of the Groebner inversion criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InverseViaGroebner {
    Inverse(PolyMap),
    NotInvertible,
}

/// Decides invertibility of `F` over a field and produces the inverse when
/// it exists, with the given within-block order (lex or grevlex).
pub fn gb_inverse_with(map: &PolyMap, inner: MonomialOrder) -> Result<InverseViaGroebner, GroebnerError> {
    if !map.domain().is_field() {
        return Err(GroebnerError::NonFieldDomain(map.domain()));
    }
    if matches!(inner, MonomialOrder::Block(_)) {
        return Err(GroebnerError::InvalidInnerOrder);
    }
    let n = map.nvars();
    let ambient = 2 * n;
    // variables: X_0..X_{n-1}, Y_0..Y_{n-1}
    let embed_x: Vec<Option<usize>> = (0..n).map(Some).collect();
    let mut generators = Vec::with_capacity(n);
    for i in 0..n {
        let fi = map.component(i).map_variables(ambient, &embed_x)?;
        let yi = Polynomial::variable(map.domain(), ambient, n + i)?;
        generators.push(yi.sub(&fi)?);
    }
    let order = MonomialOrder::elimination(n, ambient, inner);
    let result = buchberger_reduced(&IdealBasis::new(generators, order)?)?;
    match result.shape {
        BasisShape::LinearInX { solved } => {
            // rename Y back to X
            let unembed: Vec<Option<usize>> = (0..ambient)
                .map(|i| if i < n { None } else { Some(i - n) })
                .collect();
            let components = solved
                .iter()
                .map(|g| g.map_variables(n, &unembed))
                .collect::<Result<Vec<_>, _>>()?;
            let inverse = PolyMap::new(components, map.vars().to_vec())?;
            Ok(InverseViaGroebner::Inverse(inverse))
        }
        BasisShape::Other => Ok(InverseViaGroebner::NotInvertible),
    }
}

/// [`gb_inverse_with`] under grevlex inside each block.
pub fn gb_inverse(map: &PolyMap) -> Result<InverseViaGroebner, GroebnerError> {
    gb_inverse_with(map, MonomialOrder::GrevLex)
}

/// Outcome of the Groebner point-preimage criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointPreimageViaGroebner {
    /// `F(X) = c` has exactly one solution over the algebraic closure, and
    /// it is the returned rational point.
    Unique(Vec<Coefficient>),
    /// The solution set is not a single rational point; the reduced basis is
    /// returned for inspection. If `F` were an automorphism this shape could
    /// not occur.
    NotUnique(Vec<Polynomial>),
    /// `1` lies in the ideal: no solution over the algebraic closure.
    Empty,
}

/// Reduced basis of `(c_1 - F_1, ..., c_n - F_n)` and its shape.
pub fn gb_point_preimage(
    map: &PolyMap,
    point: &[Coefficient],
) -> Result<PointPreimageViaGroebner, GroebnerError> {
    gb_point_preimage_with(map, point, MonomialOrder::GrevLex)
}

pub fn gb_point_preimage_with(
    map: &PolyMap,
    point: &[Coefficient],
    order: MonomialOrder,
) -> Result<PointPreimageViaGroebner, GroebnerError> {
    if !map.domain().is_field() {
        return Err(GroebnerError::NonFieldDomain(map.domain()));
    }
    if matches!(order, MonomialOrder::Block(_)) {
        return Err(GroebnerError::InvalidInnerOrder);
    }
    let n = map.nvars();
    if point.len() != n {
        return Err(GroebnerError::Poly(PolyError::ArityMismatch {
            expected: n,
            found: point.len(),
        }));
    }
    let mut generators = Vec::with_capacity(n);
    for (i, coord) in point.iter().enumerate() {
        let ci = Polynomial::constant(coord.clone(), n);
        generators.push(ci.sub(map.component(i))?);
    }
    let result = buchberger_reduced(&IdealBasis::new(generators, order)?)?;
    if result.basis.len() == 1 && result.basis[0].degree() == crate::poly::Degree::Finite(0) {
        return Ok(PointPreimageViaGroebner::Empty);
    }
    match result.shape {
        BasisShape::LinearInX { solved } => {
            let mut coords = Vec::with_capacity(n);
            for g in &solved {
                if g.degree() > crate::poly::Degree::Finite(0) {
                    return Ok(PointPreimageViaGroebner::NotUnique(result.basis));
                }
                coords.push(g.constant_term());
            }
            Ok(PointPreimageViaGroebner::Unique(coords))
        }
        BasisShape::Other => Ok(PointPreimageViaGroebner::NotUnique(result.basis)),
    }
}

/// Outcome of the Groebner curve-preimage computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurvePreimageViaGroebner {
    /// The basis (or its triangular back-substitution) produced a curve `g`
    /// verified to satisfy `F(g) = f`.
    Found(Curve),
    /// The basis had the solved shape but the candidate failed verification
    /// or centering; returned for inspection. Not reachable in exact
    /// arithmetic, kept for honesty.
    ShapeBasis(Vec<Polynomial>),
    /// No candidate emerged: the reduced basis is returned as evidence.
    /// For non-invertible maps this is evidence, not proof, that no centered
    /// polynomial preimage exists.
    Evidence(Vec<Polynomial>),
}

/// Reduced basis of `(F_1 - f_1, ..., F_n - f_n)` in `k[t, X]` with the
/// X-block eliminated first, then shape inspection and best-effort
/// triangular back-substitution.
pub fn gb_curve_preimage(map: &PolyMap, f: &Curve) -> Result<CurvePreimageViaGroebner, GroebnerError> {
    gb_curve_preimage_with(map, f, MonomialOrder::GrevLex)
}

pub fn gb_curve_preimage_with(
    map: &PolyMap,
    f: &Curve,
    inner: MonomialOrder,
) -> Result<CurvePreimageViaGroebner, GroebnerError> {
    if !map.domain().is_field() {
        return Err(GroebnerError::NonFieldDomain(map.domain()));
    }
    if matches!(inner, MonomialOrder::Block(_)) {
        return Err(GroebnerError::InvalidInnerOrder);
    }
    if f.len() != map.nvars() || f.domain() != map.domain() {
        return Err(GroebnerError::InconsistentGenerators);
    }
    let n = map.nvars();
    let ambient = n + 1; // X_0..X_{n-1}, t
    let embed_x: Vec<Option<usize>> = (0..n).map(Some).collect();
    let embed_t: Vec<Option<usize>> = vec![Some(n)];
    let mut generators = Vec::with_capacity(n);
    for i in 0..n {
        let fi = map.component(i).map_variables(ambient, &embed_x)?;
        let fti = f.component(i).map_variables(ambient, &embed_t)?;
        generators.push(fi.sub(&fti)?);
    }
    let order = MonomialOrder::elimination(n, ambient, inner);
    let result = buchberger_reduced(&IdealBasis::new(generators, order.clone())?)?;

    let extract = |solved: &[Polynomial]| -> Result<Option<Curve>, GroebnerError> {
        let unembed: Vec<Option<usize>> = (0..ambient)
            .map(|i| if i < n { None } else { Some(0) })
            .collect();
        let mut components = Vec::with_capacity(n);
        for g in solved {
            components.push(g.map_variables(1, &unembed)?);
        }
        match Curve::new(components, f.var().to_string()) {
            Ok(curve) => Ok(Some(curve)),
            Err(_) => Ok(None), // e.g. nonzero constant term: not a centered curve
        }
    };

    if let BasisShape::LinearInX { solved } = &result.shape {
        if let Some(curve) = extract(solved)? {
            if map.apply_to_curve(&curve)? == *f {
                return Ok(CurvePreimageViaGroebner::Found(curve));
            }
        }
        return Ok(CurvePreimageViaGroebner::ShapeBasis(result.basis));
    }

    // Best effort: repeatedly solve generators of the form X_j - h(t) and
    // substitute them into the rest.
    let mut work = result.basis.clone();
    let mut assignment: Vec<Option<Polynomial>> = vec![None; n];
    loop {
        let mut progressed = false;
        let mut next_work = Vec::new();
        for g in &work {
            if g.is_zero() {
                continue;
            }
            let (lm, _) = g.leading_term(&order).expect("nonzero");
            let is_solvable = lm.total_degree() == 1
                && (0..n).any(|j| lm.exponent(j) == 1)
                && {
                    let j = (0..n).find(|&j| lm.exponent(j) == 1).unwrap();
                    let x = Polynomial::variable(g.domain(), ambient, j).expect("in range");
                    let tail = g.sub(&x).expect("same shape");
                    (0..n).all(|i| !tail.uses_variable(i)) && assignment[j].is_none()
                };
            if is_solvable {
                let j = (0..n).find(|&j| lm.exponent(j) == 1).unwrap();
                let x = Polynomial::variable(g.domain(), ambient, j).expect("in range");
                assignment[j] = Some(x.sub(g).expect("same shape")); // -tail
                progressed = true;
            } else {
                next_work.push(g.clone());
            }
        }
        if !progressed {
            break;
        }
        // substitute what is known so far into the remaining generators
        let args: Vec<Polynomial> = (0..ambient)
            .map(|i| {
                if i < n {
                    assignment[i].clone().unwrap_or_else(|| {
                        Polynomial::variable(map.domain(), ambient, i).expect("in range")
                    })
                } else {
                    Polynomial::variable(map.domain(), ambient, i).expect("in range")
                }
            })
            .collect();
        work = next_work
            .iter()
            .map(|g| g.compose(&args))
            .collect::<Result<Vec<_>, _>>()?;
    }
    if assignment.iter().all(|a| a.is_some()) {
        let solved: Vec<Polynomial> = assignment.into_iter().map(|a| a.unwrap()).collect();
        if solved.iter().all(|g| (0..n).all(|i| !g.uses_variable(i))) {
            if let Some(curve) = extract(&solved)? {
                if map.apply_to_curve(&curve)? == *f {
                    return Ok(CurvePreimageViaGroebner::Found(curve));
                }
            }
        }
    }
    Ok(CurvePreimageViaGroebner::Evidence(result.basis))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text;

    fn qq() -> DomainDescriptor {
        DomainDescriptor::Rationals
    }

    fn poly(src: &str, vars: &[&str]) -> Polynomial {
        let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        text::parse_polynomial(src, &vars, qq()).unwrap()
    }

    #[test]
    fn normal_form_examples() {
        let order = MonomialOrder::Lex;
        // x^2 against {x} reduces to zero
        let f = poly("x^2", &["x", "y"]);
        let basis = vec![poly("x", &["x", "y"])];
        assert!(normal_form(&f, &basis, &order).unwrap().is_zero());

        // x^2 y + x against {x - y} under lex x > y: substitute x -> y
        let g = poly("x^2*y + x", &["x", "y"]);
        let basis = vec![poly("x - y", &["x", "y"])];
        let nf = normal_form(&g, &basis, &order).unwrap();
        assert_eq!(nf, poly("y^3 + y", &["x", "y"]));

        // already reduced: fixed point
        let h = poly("y^2 + 1", &["x", "y"]);
        assert_eq!(normal_form(&h, &basis, &order).unwrap(), h);
    }

    #[test]
    fn buchberger_point_ideal() {
        // preimage ideal of c = (1,1) under (x + y^2, y): basis {x, y - 1}
        let gens = vec![poly("1 - x - y^2", &["x", "y"]), poly("1 - y", &["x", "y"])];
        let result =
            buchberger_reduced(&IdealBasis::new(gens, MonomialOrder::GrevLex).unwrap()).unwrap();
        assert_eq!(
            result.basis,
            vec![poly("x", &["x", "y"]), poly("y - 1", &["x", "y"])]
        );
        assert!(matches!(result.shape, BasisShape::LinearInX { .. }));
    }

    #[test]
    fn buchberger_elimination_ideal() {
        // {Y1 - x, Y2 - x y} with block order {x, y} > {Y1, Y2}
        let vars = ["x", "y", "Y1", "Y2"];
        let gens = vec![poly("Y1 - x", &vars), poly("Y2 - x*y", &vars)];
        let order = MonomialOrder::elimination(2, 4, MonomialOrder::GrevLex);
        let result = buchberger_reduced(&IdealBasis::new(gens, order).unwrap()).unwrap();
        assert_eq!(
            result.basis,
            vec![poly("x - Y1", &vars), poly("y*Y1 - Y2", &vars)]
        );
        assert!(matches!(result.shape, BasisShape::Other));
    }

    #[test]
    fn buchberger_single_generator() {
        let gens = vec![poly("x", &["x"])];
        let result =
            buchberger_reduced(&IdealBasis::new(gens, MonomialOrder::GrevLex).unwrap()).unwrap();
        assert_eq!(result.basis, vec![poly("x", &["x"])]);
    }

    #[test]
    fn gb_inverse_golden() {
        let f = text::parse_map("[X + Y^2 + 2*X^2*Y + X^4, Y + X^2] over QQ[X,Y]").unwrap();
        match gb_inverse(&f).unwrap() {
            InverseViaGroebner::Inverse(g) => {
                let expected =
                    text::parse_map("[X - Y^2, Y - X^2 + 2*X*Y^2 - Y^4] over QQ[X,Y]").unwrap();
                assert_eq!(g, expected);
            }
            InverseViaGroebner::NotInvertible => panic!("expected inverse"),
        }

        let id = text::parse_map("[x, y] over QQ[x,y]").unwrap();
        match gb_inverse(&id).unwrap() {
            InverseViaGroebner::Inverse(g) => assert!(g.is_identity()),
            InverseViaGroebner::NotInvertible => panic!("identity is invertible"),
        }

        let collapse = text::parse_map("[x, x*y] over QQ[x,y]").unwrap();
        assert_eq!(
            gb_inverse(&collapse).unwrap(),
            InverseViaGroebner::NotInvertible
        );
    }

    #[test]
    fn gb_inverse_lex_inner_order_agrees() {
        let f = text::parse_map("[X + Y^2 + 2*X^2*Y + X^4, Y + X^2] over QQ[X,Y]").unwrap();
        let grev = gb_inverse(&f).unwrap();
        let lex = gb_inverse_with(&f, MonomialOrder::Lex).unwrap();
        assert_eq!(grev, lex);
    }

    #[test]
    fn gb_point_preimage_cases() {
        let f = text::parse_map("[X + Y^2 + 2*X^2*Y + X^4, Y + X^2] over QQ[X,Y]").unwrap();
        let c = [qq().integer(1), qq().integer(1)];
        match gb_point_preimage(&f, &c).unwrap() {
            PointPreimageViaGroebner::Unique(p) => {
                assert_eq!(p, vec![qq().integer(0), qq().integer(1)]);
            }
            other => panic!("expected unique point, got {other:?}"),
        }

        // two rational solutions (0,1) and (1,0): not a point shape
        let g = text::parse_map("[x + y^2, y + x^2] over QQ[x,y]").unwrap();
        match gb_point_preimage(&g, &c).unwrap() {
            PointPreimageViaGroebner::NotUnique(basis) => {
                // both solutions vanish on every basis element
                for b in &basis {
                    assert!(b
                        .evaluate(&[qq().integer(0), qq().integer(1)])
                        .unwrap()
                        .is_zero());
                    assert!(b
                        .evaluate(&[qq().integer(1), qq().integer(0)])
                        .unwrap()
                        .is_zero());
                }
            }
            other => panic!("expected NotUnique, got {other:?}"),
        }

        // x^2 = -1 over QQ: basis {x^2 + 1, y}, no rational point
        let sq = text::parse_map("[x^2, y] over QQ[x,y]").unwrap();
        let c2 = [qq().integer(-1), qq().integer(0)];
        match gb_point_preimage(&sq, &c2).unwrap() {
            PointPreimageViaGroebner::NotUnique(basis) => {
                assert_eq!(
                    basis,
                    vec![poly("x^2 + 1", &["x", "y"]), poly("y", &["x", "y"])]
                );
            }
            other => panic!("expected NotUnique, got {other:?}"),
        }
    }

    #[test]
    fn gb_point_preimage_empty_case() {
        // (x, x + 1) can never hit (0, 0): the ideal contains 1
        let f = text::parse_map("[x, x + 1] over QQ[x,y]").unwrap();
        let c = [qq().integer(0), qq().integer(0)];
        assert_eq!(
            gb_point_preimage(&f, &c).unwrap(),
            PointPreimageViaGroebner::Empty
        );
    }

    #[test]
    fn gb_curve_preimage_golden() {
        let f_map = text::parse_map("[X + Y^2 + 2*X^2*Y + X^4, Y + X^2] over QQ[X,Y]").unwrap();
        let f = text::parse_curve("[t + 4*t^4, 2*t^2] over QQ[t]").unwrap();
        match gb_curve_preimage(&f_map, &f).unwrap() {
            CurvePreimageViaGroebner::Found(g) => {
                assert_eq!(g, text::parse_curve("[t, t^2] over QQ[t]").unwrap());
            }
            other => panic!("expected curve, got {other:?}"),
        }

        // non-automorphism, diagonal line: evidence basis
        let g_map = text::parse_map("[x + y^2, y + x^2] over QQ[x,y]").unwrap();
        let diag = text::parse_curve("[t, t] over QQ[t]").unwrap();
        match gb_curve_preimage(&g_map, &diag).unwrap() {
            CurvePreimageViaGroebner::Evidence(basis) => assert!(!basis.is_empty()),
            other => panic!("expected evidence, got {other:?}"),
        }
    }

    #[test]
    fn buchberger_respects_generator_permutation() {
        let vars = ["x", "y", "z"];
        let gens = vec![
            poly("x^2 + y*z - 2", &vars),
            poly("y^2 - x*z + 1", &vars),
            poly("x*y + z^2 - 1", &vars),
        ];
        let order = MonomialOrder::GrevLex;
        let forward =
            buchberger_reduced(&IdealBasis::new(gens.clone(), order.clone()).unwrap()).unwrap();
        let mut reversed = gens;
        reversed.reverse();
        let backward = buchberger_reduced(&IdealBasis::new(reversed, order).unwrap()).unwrap();
        assert_eq!(forward.basis, backward.basis);
        // every original generator is in the ideal
        for g in &forward.basis {
            assert!(!g.is_zero());
        }
    }

    #[test]
    fn rejects_integer_domain() {
        let gens = vec![text::parse_polynomial(
            "2*x",
            &["x".to_string()],
            DomainDescriptor::Integers,
        )
        .unwrap()];
        assert!(matches!(
            IdealBasis::new(gens, MonomialOrder::GrevLex),
            Err(GroebnerError::NonFieldDomain(_))
        ));
    }
}
