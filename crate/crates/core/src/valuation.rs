//! Monomial valuations, Jacobian values and Rees valuations of monomial ideals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{check_dim, Error, Result};
use crate::exactgeom::{common_denominator, maximize, LinearSystem, LpOutcome, Rational, Relation};
use crate::ideal::{Exponent, MonomialIdeal};
use crate::polyhedron::NewtonPolyhedron;

/// A monomial valuation `v(x_i) = weights[i]`, extended to polynomials by the
/// minimum over terms.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialValuation {
    weights: Vec<u64>,
}

impl MonomialValuation {
    pub fn new(weights: Vec<u64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::ZeroDimension);
        }
        if weights.iter().all(|&w| w == 0) {
            return Err(Error::ZeroWeights);
        }
        Ok(MonomialValuation { weights })
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn gcd(&self) -> u64 {
        self.weights.iter().fold(0, |g, &w| g.gcd(&w))
    }

    /// Value group exactly `Z`.
    pub fn is_normalized(&self) -> bool {
        self.gcd() == 1
    }

    pub fn value_of_monomial(&self, e: &Exponent) -> Result<u128> {
        check_dim(self.dim(), e.dim())?;
        self.weights
            .iter()
            .zip(e.entries())
            .try_fold(0u128, |acc, (&w, &x)| {
                acc.checked_add(u128::from(w) * u128::from(x))
            })
            .ok_or(Error::Overflow("monomial value"))
    }

    /// `v(I)`: the minimum over the generators.
    pub fn value_of_ideal(&self, ideal: &MonomialIdeal) -> Result<u128> {
        check_dim(self.dim(), ideal.dim())?;
        let mut best = u128::MAX;
        for g in ideal.generators() {
            best = best.min(self.value_of_monomial(g)?);
        }
        Ok(best)
    }

    /// `v(J_{R_v/R}) = v(x_1 ⋯ x_d) - gcd(v(x_i))`.
    pub fn jacobian_value(&self) -> u128 {
        let sum: u128 = self.weights.iter().map(|&w| u128::from(w)).sum();
        sum - u128::from(self.gcd())
    }

    fn value_of_rational(&self, point: &[Rational]) -> Rational {
        self.weights
            .iter()
            .zip(point)
            .map(|(&w, x)| x * BigInt::from(w))
            .sum()
    }
}

/// A Rees valuation paired with its value on the ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReesValuation {
    pub valuation: MonomialValuation,
    pub value: u128,
}

/// Rees valuations read off the non-coordinate facets of `NP(I)`, in facet order.
pub fn rees_valuations(ideal: &MonomialIdeal) -> Result<Vec<ReesValuation>> {
    let polyhedron = NewtonPolyhedron::of(ideal)?;
    rees_from_polyhedron(ideal, &polyhedron)
}

pub(crate) fn rees_from_polyhedron(
    ideal: &MonomialIdeal,
    polyhedron: &NewtonPolyhedron,
) -> Result<Vec<ReesValuation>> {
    polyhedron
        .facets()
        .iter()
        .map(|facet| {
            let weights = facet
                .normal()
                .iter()
                .map(|h| h.to_u64().ok_or(Error::Overflow("facet normal")))
                .collect::<Result<Vec<_>>>()?;
            let valuation = MonomialValuation::new(weights)?;
            let value = facet
                .offset()
                .to_u128()
                .ok_or(Error::Overflow("facet offset"))?;
            if !valuation.is_normalized() {
                return Err(Error::Internal(format!("facet {facet} is not primitive")));
            }
            if valuation.value_of_ideal(ideal)? != value {
                return Err(Error::Internal(format!(
                    "facet {facet} is not attained at a generator"
                )));
            }
            Ok(ReesValuation { valuation, value })
        })
        .collect()
}

/// Shows that a Rees valuation cannot be dropped: `x^e` satisfies
/// `v(e) >= n·v(I)` for every other Rees valuation but `w(e) < n·w(I)` for
/// the dropped `w`, so `x^e` is outside `ic(I^n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NecessityWitness {
    pub dropped_valuation: MonomialValuation,
    pub n: u64,
    pub e: Exponent,
}

impl NecessityWitness {
    /// Re-checks the witness against `rees` by direct evaluation.
    pub fn verify(&self, rees: &[ReesValuation]) -> Result<bool> {
        let n = u128::from(self.n);
        let mut found = false;
        for r in rees {
            let value = r.valuation.value_of_monomial(&self.e)?;
            let target = n
                .checked_mul(r.value)
                .ok_or(Error::Overflow("witness target"))?;
            if r.valuation == self.dropped_valuation {
                found = true;
                if value >= target {
                    return Ok(false);
                }
            } else if value < target {
                return Ok(false);
            }
        }
        Ok(found)
    }
}

/// One witness per Rees valuation of `ideal`; empty for the unit ideal.
///
/// For each valuation `w` an exact LP minimizes `w` over the polyhedron cut
/// out by the remaining facets; the optimum lies strictly below `w(I)` and its
/// denominators are cleared into `(n, e)`.
pub fn check_rees_necessity(ideal: &MonomialIdeal) -> Result<Vec<NecessityWitness>> {
    let rees = rees_valuations(ideal)?;
    let d = ideal.dim();
    let mut witnesses = Vec::with_capacity(rees.len());
    for (k, dropped) in rees.iter().enumerate() {
        let mut system = LinearSystem::new(d);
        for (other_idx, other) in rees.iter().enumerate() {
            if other_idx == k {
                continue;
            }
            system.push(
                other
                    .valuation
                    .weights()
                    .iter()
                    .map(|&w| Rational::from_integer(w.into()))
                    .collect(),
                Relation::Ge,
                Rational::from_integer(other.value.into()),
            )?;
        }
        let objective: Vec<Rational> = dropped
            .valuation
            .weights()
            .iter()
            .map(|&w| -Rational::from_integer(w.into()))
            .collect();
        let point = match maximize(&system, &objective)? {
            LpOutcome::Optimal { point, .. } => point,
            other => {
                return Err(Error::Internal(format!(
                    "necessity LP for {:?} ended with {other:?}",
                    dropped.valuation.weights()
                )))
            }
        };
        if dropped.valuation.value_of_rational(&point)
            >= Rational::from_integer(dropped.value.into())
        {
            return Err(Error::Internal(format!(
                "Rees valuation {:?} is redundant",
                dropped.valuation.weights()
            )));
        }

        let denominator = common_denominator(&point);
        let n = denominator
            .to_u64()
            .ok_or(Error::Overflow("witness power"))?;
        let e = point
            .iter()
            .map(|x| {
                let scaled = x * &denominator;
                debug_assert!(scaled.is_integer());
                let value = scaled.to_integer();
                if value < BigInt::zero() {
                    return Err(Error::Internal("negative LP coordinate".into()));
                }
                value.to_u64().ok_or(Error::Overflow("witness exponent"))
            })
            .collect::<Result<Vec<_>>>()?;
        let witness = NecessityWitness {
            dropped_valuation: dropped.valuation.clone(),
            n,
            e: Exponent::new(e),
        };
        if !witness.verify(&rees)? {
            return Err(Error::Internal(format!("necessity witness {witness:?} fails")));
        }
        witnesses.push(witness);
    }
    Ok(witnesses)
}
