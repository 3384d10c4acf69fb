//! Newton polyhedra `NP(I) = conv(generators) + Q_{>=0}^d` in H-representation.

use num_traits::Signed;

use crate::error::{check_dim, Error, Result};
use crate::exactgeom::{hull_facets, Facet, Rational};
use crate::ideal::{Exponent, MonomialIdeal};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    dim: usize,
    facets: Vec<Facet>,
    source_generators: Vec<Exponent>,
}

impl NewtonPolyhedron {
    pub fn of(ideal: &MonomialIdeal) -> Result<Self> {
        let facets = hull_facets(ideal.generators(), ideal.dim())?;
        Ok(NewtonPolyhedron {
            dim: ideal.dim(),
            facets,
            source_generators: ideal.generators().to_vec(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Non-coordinate facets, sorted by normal.
    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn source_generators(&self) -> &[Exponent] {
        &self.source_generators
    }

    /// Membership of a rational point.
    ///
    /// Weak mode tests the closed polyhedron. Strict mode tests the interior
    /// `NP°`: every facet inequality strict and every coordinate positive.
    pub fn contains(&self, point: &[Rational], strict: bool) -> Result<bool> {
        check_dim(self.dim, point.len())?;
        if strict {
            if point.iter().any(|x| !x.is_positive()) {
                return Ok(false);
            }
        } else if point.iter().any(Signed::is_negative) {
            return Ok(false);
        }
        Ok(self.facets.iter().all(|f| {
            let value = f.evaluate_rational(point);
            let offset = Rational::from_integer(f.offset().clone());
            if strict {
                value > offset
            } else {
                value >= offset
            }
        }))
    }

    /// [`contains`](Self::contains) for a lattice point.
    pub fn contains_exponent(&self, e: &Exponent, strict: bool) -> Result<bool> {
        let point: Vec<Rational> = e
            .entries()
            .iter()
            .map(|&x| Rational::from_integer(x.into()))
            .collect();
        self.contains(&point, strict)
    }

    /// `n · NP`: same normals, offsets scaled by `n`.
    pub fn scale(&self, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroPower);
        }
        let n = u64::from(n);
        Ok(NewtonPolyhedron {
            dim: self.dim,
            facets: self.facets.iter().map(|f| f.scaled(n)).collect(),
            source_generators: self
                .source_generators
                .iter()
                .map(|a| a.checked_scale(n))
                .collect::<Result<_>>()?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::{integer, rational};
    use num_bigint::BigInt;

    fn ideal(list: &[&[u64]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(list.iter().map(|e| Exponent::new(e.to_vec()))).unwrap()
    }

    fn pairs(p: &NewtonPolyhedron) -> Vec<(Vec<BigInt>, BigInt)> {
        p.facets()
            .iter()
            .map(|f| (f.normal().to_vec(), f.offset().clone()))
            .collect()
    }

    #[test]
    fn closure_of_x5_y7() {
        let i = ideal(&[&[5, 0], &[4, 2], &[3, 3], &[2, 5], &[1, 6], &[0, 7]]);
        let p = NewtonPolyhedron::of(&i).unwrap();
        assert_eq!(pairs(&p), vec![(vec![7.into(), 5.into()], 35.into())]);
        assert_eq!(
            pairs(&p.scale(2).unwrap()),
            vec![(vec![7.into(), 5.into()], 70.into())]
        );
        assert_eq!(p.scale(1).unwrap(), p);
    }

    #[test]
    fn unit_ideal_is_the_orthant() {
        let p = NewtonPolyhedron::of(&MonomialIdeal::unit(2).unwrap()).unwrap();
        assert!(p.facets().is_empty());
        assert!(p.contains(&[integer(0), integer(0)], false).unwrap());
        assert!(!p.contains(&[integer(0), integer(1)], true).unwrap());
        assert!(p.contains(&[rational(1, 9), integer(1)], true).unwrap());
    }

    #[test]
    fn adjoint_of_example_has_two_facets() {
        let adj = ideal(&[&[4, 0], &[3, 1], &[2, 2], &[1, 4], &[0, 5]]);
        let p = NewtonPolyhedron::of(&adj).unwrap();
        assert_eq!(
            pairs(&p),
            vec![
                (vec![1.into(), 1.into()], 4.into()),
                (vec![3.into(), 2.into()], 10.into())
            ]
        );
    }

    #[test]
    fn weak_and_strict_membership() {
        let p = NewtonPolyhedron::of(&ideal(&[&[5, 0], &[0, 7]])).unwrap();
        assert!(p.contains(&[integer(3), integer(3)], false).unwrap());
        assert!(!p.contains(&[integer(5), integer(0)], true).unwrap());
        assert!(p.contains(&[integer(5), integer(0)], false).unwrap());
        assert!(p.contains(&[integer(5), integer(1)], true).unwrap());
        assert!(!p.contains(&[integer(-1), integer(10)], false).unwrap());
        assert!(p.contains(&[integer(1)], false).is_err());
    }

    #[test]
    fn scaling_matches_power_for_maximal_ideal() {
        let m = ideal(&[&[1, 0], &[0, 1]]);
        let scaled = NewtonPolyhedron::of(&m).unwrap().scale(3).unwrap();
        let direct = NewtonPolyhedron::of(&m.power(3).unwrap()).unwrap();
        assert_eq!(scaled.facets(), direct.facets());
    }
}
