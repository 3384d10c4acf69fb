//! Exact rational kernel: a Bland-rule simplex and double-description facet
//! enumeration for polyhedra of the form `conv(points) + Q_{>=0}^d`.

mod hull;
mod lp;

pub use hull::{hull_facets, Facet};
pub use lp::{
    lp_member, maximize, simplex_feasible, Constraint, Feasibility, LinearSystem, LpOutcome,
    Relation,
};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(value: impl Into<BigInt>) -> Rational {
    Rational::from_integer(value.into())
}

/// Least common multiple of the denominators of `values` (1 for an empty slice).
pub fn common_denominator(values: &[Rational]) -> BigInt {
    values
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Divides every entry by the gcd of their absolute values. All-zero input is
/// returned unchanged.
pub(crate) fn primitive(vector: &mut [BigInt]) {
    let g = vector
        .iter()
        .fold(BigInt::zero(), |acc, v| acc.gcd(&v.abs()));
    if !g.is_zero() && !g.is_one() {
        for v in vector.iter_mut() {
            *v /= &g;
        }
    }
}

pub(crate) fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
