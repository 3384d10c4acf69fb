use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{adjoint, AdjointMethod};
use crate::error::{check_dim, Error, Result};
use crate::exactgeom::{simplex_feasible, LinearSystem, Rational, Relation};
use crate::ideal::{Exponent, MonomialIdeal};
use crate::polyhedron::NewtonPolyhedron;

/// Factorization `x^a = x^f · x^g` of a generator of `adj(IJ)` with
/// `x^f ∈ adj(I)` and `x^g ∈ adj(J)`, together with the interior split
/// `a + 1 = b + c` it was rounded from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubadditivityWitness {
    pub generator: Exponent,
    pub factor_i: Exponent,
    pub factor_j: Exponent,
    pub interior_point_b: Vec<Rational>,
    pub interior_point_c: Vec<Rational>,
}

impl SubadditivityWitness {
    /// Checks every witness invariant against the adjoint ideals and Newton
    /// polyhedra of `I` and `J`.
    pub fn verify(
        &self,
        adj_i: &MonomialIdeal,
        adj_j: &MonomialIdeal,
        np_i: &NewtonPolyhedron,
        np_j: &NewtonPolyhedron,
    ) -> Result<bool> {
        let d = self.generator.dim();
        if self.factor_i.checked_add(&self.factor_j)? != self.generator {
            return Ok(false);
        }
        if !adj_i.contains(&self.factor_i)? || !adj_j.contains(&self.factor_j)? {
            return Ok(false);
        }
        if !np_i.contains(&self.interior_point_b, true)?
            || !np_j.contains(&self.interior_point_c, true)?
        {
            return Ok(false);
        }
        for k in 0..d {
            let total = &self.interior_point_b[k] + &self.interior_point_c[k];
            if total != Rational::from_integer((self.generator[k] + 1).into()) {
                return Ok(false);
            }
            let f = self.interior_point_b[k].ceil().to_integer() - 1;
            let g = self.interior_point_c[k].floor().to_integer();
            if f != self.factor_i[k].into() || g != self.factor_j[k].into() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn to_rationals(normal: &[num_bigint::BigInt]) -> Vec<Rational> {
    normal.iter().map(|h| Rational::from_integer(h.clone())).collect()
}

fn round_to_exponent(values: impl Iterator<Item = num_bigint::BigInt>) -> Result<Exponent> {
    values
        .map(|v| {
            if v.is_negative() {
                Err(Error::Internal("negative rounded factor".into()))
            } else {
                v.to_u64().ok_or(Error::Overflow("factor exponent"))
            }
        })
        .collect::<Result<Vec<_>>>()
        .map(Exponent::new)
}

fn split_with(
    a: &Exponent,
    np_i: &NewtonPolyhedron,
    np_j: &NewtonPolyhedron,
    np_ij: &NewtonPolyhedron,
) -> Result<SubadditivityWitness> {
    let d = a.dim();
    check_dim(np_ij.dim(), d)?;
    let target: Vec<Rational> = a
        .entries()
        .iter()
        .map(|&x| Rational::from_integer((x + 1).into()))
        .collect();
    if !np_ij.contains(&target, true)? {
        return Err(Error::Precondition(format!(
            "{a} + 1 is not in the interior of NP(IJ)"
        )));
    }

    // Unknown b; c = target - b.
    let mut system = LinearSystem::new(d);
    for f in np_i.facets() {
        system.push(
            to_rationals(f.normal()),
            Relation::Ge,
            Rational::from_integer(f.offset().clone()),
        )?;
    }
    for f in np_j.facets() {
        let at_target = f.evaluate_rational(&target);
        system.push(
            to_rationals(f.normal()),
            Relation::Le,
            at_target - Rational::from_integer(f.offset().clone()),
        )?;
    }
    for k in 0..d {
        let mut unit = vec![Rational::zero(); d];
        unit[k] = Rational::one();
        system.push(unit.clone(), Relation::Ge, Rational::zero())?;
        system.push(unit, Relation::Le, target[k].clone())?;
    }
    let solution = simplex_feasible(&system, true)?;
    let b = match solution.point {
        Some(b) if solution.feasible => b,
        _ => {
            return Err(Error::Internal(format!(
                "no interior split of {a} + 1 between NP°(I) and NP°(J)"
            )))
        }
    };
    let c: Vec<Rational> = target.iter().zip(&b).map(|(t, x)| t - x).collect();

    let factor_i = round_to_exponent(b.iter().map(|x| x.ceil().to_integer() - 1))?;
    let factor_j = round_to_exponent(c.iter().map(|x| x.floor().to_integer()))?;
    if factor_i.checked_add(&factor_j)? != *a {
        return Err(Error::Internal(format!("rounded factors of {a} do not multiply back")));
    }
    let ones = Exponent::ones(d);
    if !np_i.contains_exponent(&factor_i.checked_add(&ones)?, true)?
        || !np_j.contains_exponent(&factor_j.checked_add(&ones)?, true)?
    {
        return Err(Error::Internal(format!("rounded factors of {a} leave the adjoints")));
    }
    Ok(SubadditivityWitness {
        generator: a.clone(),
        factor_i,
        factor_j,
        interior_point_b: b,
        interior_point_c: c,
    })
}

/// Splits a monomial `x^a ∈ adj(IJ)` as `x^f · x^g` with `x^f ∈ adj(I)` and
/// `x^g ∈ adj(J)`.
///
/// A slack-maximizing LP finds `b ∈ NP°(I)`, `c ∈ NP°(J)` with
/// `b + c = a + 1`; then `f_i = ⌈b_i⌉ - 1` and `g_i = ⌊c_i⌋`.
pub fn split_adjoint_factor(
    a: &Exponent,
    i: &MonomialIdeal,
    j: &MonomialIdeal,
) -> Result<SubadditivityWitness> {
    check_dim(i.dim(), j.dim())?;
    check_dim(i.dim(), a.dim())?;
    split_with(
        a,
        &NewtonPolyhedron::of(i)?,
        &NewtonPolyhedron::of(j)?,
        &NewtonPolyhedron::of(&i.product(j)?)?,
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubadditivityReport {
    pub holds: bool,
    pub adjoint_of_product: MonomialIdeal,
    pub product_of_adjoints: MonomialIdeal,
    /// Generators of `adj(IJ)` outside `adj(I)·adj(J)`; empty when `holds`.
    pub uncovered: Vec<Exponent>,
    /// One witness per generator of `adj(IJ)` when `holds`.
    pub witnesses: Vec<SubadditivityWitness>,
}

/// Compares `adj(IJ)` with `adj(I)·adj(J)` and, when contained, factors every
/// generator of `adj(IJ)`.
pub fn subadditivity_report(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<SubadditivityReport> {
    check_dim(i.dim(), j.dim())?;
    let ij = i.product(j)?;
    let adj_ij = adjoint(&ij, 1, AdjointMethod::Facets)?;
    let adj_i = adjoint(i, 1, AdjointMethod::Facets)?;
    let adj_j = adjoint(j, 1, AdjointMethod::Facets)?;
    let product = adj_i.product(&adj_j)?;
    let uncovered: Vec<Exponent> = adj_ij
        .generators()
        .iter()
        .filter(|g| !product.generators().iter().any(|p| p.divides(g)))
        .cloned()
        .collect();
    let holds = uncovered.is_empty();
    let mut witnesses = Vec::new();
    if holds {
        let np_i = NewtonPolyhedron::of(i)?;
        let np_j = NewtonPolyhedron::of(j)?;
        let np_ij = NewtonPolyhedron::of(&ij)?;
        for a in adj_ij.generators() {
            let w = split_with(a, &np_i, &np_j, &np_ij)?;
            if !w.verify(&adj_i, &adj_j, &np_i, &np_j)? {
                return Err(Error::Internal(format!("witness for {a} fails verification")));
            }
            witnesses.push(w);
        }
    }
    Ok(SubadditivityReport {
        holds,
        adjoint_of_product: adj_ij,
        product_of_adjoints: product,
        uncovered,
        witnesses,
    })
}

/// [`subadditivity_report`] that treats a failed containment as an internal
/// fault.
pub fn check_subadditivity(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<SubadditivityReport> {
    let report = subadditivity_report(i, j)?;
    if !report.holds {
        return Err(Error::Internal(format!(
            "adj(IJ) not contained in adj(I)adj(J): uncovered {:?}",
            report.uncovered
        )));
    }
    Ok(report)
}
