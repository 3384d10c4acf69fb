//! Integral closures and adjoint ideals of powers of monomial ideals, and the
//! structural checks built on them.
//!
//! Both closures and adjoints are finite lattice-point problems: a minimal
//! generator `e` of `ic(I^n)` (or of `adj(I^n)`) satisfies
//! `e_j <= n · max_i a_{i,j}` for every coordinate, since lowering a coordinate
//! above that bound keeps `e` (resp. `e + 1`) inside `n · NP(I)`
//! (resp. its interior).

mod enumerate;
mod subadditivity;

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::error::{check_dim, Error, Result};
use crate::ideal::{Exponent, MonomialIdeal};
use crate::polyhedron::NewtonPolyhedron;
use crate::valuation::rees_from_polyhedron;
use enumerate::{box_minimal, normal_to_i128, offset_to_i128, staircase, Halfspace};

pub use subadditivity::{
    check_subadditivity, split_adjoint_factor, subadditivity_report, SubadditivityReport,
    SubadditivityWitness,
};

/// How [`adjoint`] derives its defining inequalities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AdjointMethod {
    /// Strict facet inequalities of `n · NP(I)` at `e + (1, …, 1)`.
    Facets,
    /// `v(x^e) >= v(I^n) - v(J_{R_v/R})` over the Rees valuations of `I`.
    Valuations,
    /// Full box scan against the facets of `NP(I^n)` computed from scratch.
    BruteForce,
}

impl AdjointMethod {
    pub const ALL: [AdjointMethod; 3] = [
        AdjointMethod::Facets,
        AdjointMethod::Valuations,
        AdjointMethod::BruteForce,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AdjointMethod::Facets => "facets",
            AdjointMethod::Valuations => "valuations",
            AdjointMethod::BruteForce => "bruteforce",
        }
    }
}

impl fmt::Display for AdjointMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AdjointMethod {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "facets" => Ok(AdjointMethod::Facets),
            "valuations" => Ok(AdjointMethod::Valuations),
            "bruteforce" => Ok(AdjointMethod::BruteForce),
            other => Err(format!("unknown adjoint method `{other}`")),
        }
    }
}

fn power_bounds(ideal: &MonomialIdeal, n: u32) -> Result<Vec<u64>> {
    ideal
        .max_exponents()
        .into_iter()
        .map(|m| m.checked_mul(u64::from(n)).ok_or(Error::Overflow("box bound")))
        .collect()
}

fn sum_i128(values: &[i128]) -> Result<i128> {
    values
        .iter()
        .try_fold(0i128, |acc, &v| acc.checked_add(v))
        .ok_or(Error::Overflow("normal sum"))
}

/// `ic(I^n)`: the monomials whose exponents lie in `n · NP(I)`.
pub fn integral_closure(ideal: &MonomialIdeal, n: u32) -> Result<MonomialIdeal> {
    if n == 0 {
        return Err(Error::ZeroPower);
    }
    let polyhedron = NewtonPolyhedron::of(ideal)?.scale(n)?;
    closure_of_polyhedron(&polyhedron, &power_bounds(ideal, n)?)
}

fn closure_of_polyhedron(polyhedron: &NewtonPolyhedron, bounds: &[u64]) -> Result<MonomialIdeal> {
    let halfspaces = polyhedron
        .facets()
        .iter()
        .map(|f| {
            Ok(Halfspace {
                normal: normal_to_i128(f)?,
                threshold: offset_to_i128(f)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let generators = staircase(polyhedron.dim(), &halfspaces, bounds)?;
    Ok(MonomialIdeal::from_sorted_antichain(polyhedron.dim(), generators))
}

/// `adj(I^n)`: the monomials `x^e` with `e + (1, …, 1)` in the interior of
/// `n · NP(I)`. Every method returns the same canonical ideal.
pub fn adjoint(ideal: &MonomialIdeal, n: u32, method: AdjointMethod) -> Result<MonomialIdeal> {
    if n == 0 {
        return Err(Error::ZeroPower);
    }
    let d = ideal.dim();
    let bounds = power_bounds(ideal, n)?;
    let generators = match method {
        AdjointMethod::Facets => {
            let scaled = NewtonPolyhedron::of(ideal)?.scale(n)?;
            let halfspaces = scaled
                .facets()
                .iter()
                .map(|f| {
                    let normal = normal_to_i128(f)?;
                    // h·(e+1) > h0  ⇔  h·e >= h0 - Σh + 1
                    let threshold = offset_to_i128(f)? - sum_i128(&normal)? + 1;
                    Ok(Halfspace { normal, threshold })
                })
                .collect::<Result<Vec<_>>>()?;
            let found = staircase(d, &halfspaces, &bounds)?;
            verify_interior_generators(&scaled, &found)?;
            found
        }
        AdjointMethod::Valuations => {
            let polyhedron = NewtonPolyhedron::of(ideal)?;
            let halfspaces = rees_from_polyhedron(ideal, &polyhedron)?
                .into_iter()
                .map(|r| {
                    let normal: Vec<i128> =
                        r.valuation.weights().iter().map(|&w| i128::from(w)).collect();
                    let power_value = i128::try_from(r.value)
                        .ok()
                        .and_then(|v| v.checked_mul(i128::from(n)))
                        .ok_or(Error::Overflow("valuation of power"))?;
                    let jacobian = i128::try_from(r.valuation.jacobian_value())
                        .map_err(|_| Error::Overflow("jacobian value"))?;
                    Ok(Halfspace {
                        normal,
                        threshold: power_value - jacobian,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            staircase(d, &halfspaces, &bounds)?
        }
        AdjointMethod::BruteForce => {
            let direct = NewtonPolyhedron::of(&ideal.power(n)?)?;
            let facets = direct
                .facets()
                .iter()
                .map(|f| Ok((normal_to_i128(f)?, offset_to_i128(f)?)))
                .collect::<Result<Vec<_>>>()?;
            box_minimal(&bounds, |e| {
                facets.iter().all(|(normal, offset)| {
                    let value: i128 = normal
                        .iter()
                        .zip(e)
                        .map(|(h, &x)| h * (i128::from(x) + 1))
                        .sum();
                    value > *offset
                })
            })?
        }
    };
    MonomialIdeal::minimalize(generators)
}

/// Each generator `e` must have `e + 1` in the interior and no `e - ε_j + 1`
/// may be.
fn verify_interior_generators(polyhedron: &NewtonPolyhedron, generators: &[Exponent]) -> Result<()> {
    let d = polyhedron.dim();
    let ones = Exponent::ones(d);
    for e in generators {
        let shifted = e.checked_add(&ones)?;
        if !polyhedron.contains_exponent(&shifted, true)? {
            return Err(Error::Internal(format!("{e} + 1 is not interior")));
        }
        for j in 0..d {
            if e[j] == 0 {
                continue;
            }
            let mut lower = shifted.clone().into_entries();
            lower[j] -= 1;
            if polyhedron.contains_exponent(&Exponent::new(lower), true)? {
                return Err(Error::Internal(format!("{e} is not a minimal adjoint generator")));
            }
        }
    }
    Ok(())
}

/// `adj(I^n) ⊆ ic(I^{n-l+1})` where `l` is the number of minimal generators.
pub fn briancon_skoda_check(ideal: &MonomialIdeal, n: u32) -> Result<bool> {
    let report = briancon_skoda_report(ideal, n)?;
    Ok(report.holds)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrianconSkodaReport {
    pub holds: bool,
    pub power: u32,
    pub closure_power: u32,
    pub adjoint: MonomialIdeal,
    pub closure: MonomialIdeal,
    /// Generators of the adjoint outside the closure.
    pub uncovered: Vec<Exponent>,
}

pub fn briancon_skoda_report(ideal: &MonomialIdeal, n: u32) -> Result<BrianconSkodaReport> {
    let l = u32::try_from(ideal.len()).map_err(|_| Error::Overflow("generator count"))?;
    if n < l {
        return Err(Error::Precondition(format!(
            "power {n} is smaller than the generator count {l}"
        )));
    }
    let closure_power = n - l + 1;
    let adj = adjoint(ideal, n, AdjointMethod::Facets)?;
    let closure = integral_closure(ideal, closure_power)?;
    let uncovered: Vec<Exponent> = adj
        .generators()
        .iter()
        .filter(|g| !closure.generators().iter().any(|c| c.divides(g)))
        .cloned()
        .collect();
    Ok(BrianconSkodaReport {
        holds: uncovered.is_empty(),
        power: n,
        closure_power,
        adjoint: adj,
        closure,
        uncovered,
    })
}

/// Outcome of [`projective_equivalence`]; `powers = Some((i, j))` means
/// `ic(I^i) = ic(J^j)` with `i`, `j` coprime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EquivalenceResult {
    pub equivalent: bool,
    pub powers: Option<(u64, u64)>,
}

/// Decides whether `NP(I)` is a rational multiple of `NP(J)`.
pub fn projective_equivalence(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<EquivalenceResult> {
    check_dim(i.dim(), j.dim())?;
    let not = EquivalenceResult {
        equivalent: false,
        powers: None,
    };
    let pi = NewtonPolyhedron::of(i)?;
    let pj = NewtonPolyhedron::of(j)?;
    if pi.facets().len() != pj.facets().len() {
        return Ok(not);
    }
    let mut ratio: Option<BigRational> = None;
    for (fi, fj) in pi.facets().iter().zip(pj.facets()) {
        if fi.normal() != fj.normal() {
            return Ok(not);
        }
        let r = BigRational::new(fi.offset().clone(), fj.offset().clone());
        match &ratio {
            None => ratio = Some(r),
            Some(existing) if *existing != r => return Ok(not),
            Some(_) => {}
        }
    }
    let (i_pow, j_pow) = match ratio {
        // Both unit ideals.
        None => (1, 1),
        Some(r) => (
            r.denom().to_u64().ok_or(Error::Overflow("equivalence power"))?,
            r.numer().to_u64().ok_or(Error::Overflow("equivalence power"))?,
        ),
    };
    Ok(EquivalenceResult {
        equivalent: true,
        powers: Some((i_pow, j_pow)),
    })
}
