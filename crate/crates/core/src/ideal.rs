//! Monomial ideals as antichains of exponent vectors.

use std::fmt;
use std::ops::Index;

use crate::error::{check_dim, Error, Result};

/// Exponent vector of a monomial `x^e`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exponent(Vec<u64>);

impl Exponent {
    pub fn new(entries: Vec<u64>) -> Self {
        Exponent(entries)
    }

    pub fn zero(d: usize) -> Self {
        Exponent(vec![0; d])
    }

    pub fn ones(d: usize) -> Self {
        Exponent(vec![1; d])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<u64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Componentwise `self <= other`, i.e. `x^self` divides `x^other`.
    pub fn divides(&self, other: &Exponent) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_add(&self, other: &Exponent) -> Result<Exponent> {
        check_dim(self.dim(), other.dim())?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow("exponent sum")))
            .collect::<Result<Vec<_>>>()
            .map(Exponent)
    }

    pub fn checked_scale(&self, n: u64) -> Result<Exponent> {
        self.0
            .iter()
            .map(|a| a.checked_mul(n).ok_or(Error::Overflow("exponent scaling")))
            .collect::<Result<Vec<_>>>()
            .map(Exponent)
    }
}

impl Index<usize> for Exponent {
    type Output = u64;

    fn index(&self, i: usize) -> &u64 {
        &self.0[i]
    }
}

impl From<Vec<u64>> for Exponent {
    fn from(v: Vec<u64>) -> Self {
        Exponent(v)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A non-zero monomial ideal, stored as its lexicographically sorted minimal
/// generators. The unit ideal is `{0}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    dim: usize,
    generators: Vec<Exponent>,
}

impl MonomialIdeal {
    /// Canonical antichain generating the same up-closed set as `exps`.
    pub fn minimalize<I>(exps: I) -> Result<Self>
    where
        I: IntoIterator<Item = Exponent>,
    {
        let mut all: Vec<Exponent> = exps.into_iter().collect();
        let dim = all.first().ok_or(Error::EmptyInput("generator set"))?.dim();
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        for e in &all {
            check_dim(dim, e.dim())?;
        }
        all.sort_unstable();
        all.dedup();
        // A divisor of e is lexicographically <= e, so one forward pass suffices.
        let mut generators: Vec<Exponent> = Vec::new();
        for e in all {
            if !generators.iter().any(|g| g.divides(&e)) {
                generators.push(e);
            }
        }
        Ok(MonomialIdeal { dim, generators })
    }

    /// Builds from generators already known to be a sorted antichain.
    pub(crate) fn from_sorted_antichain(dim: usize, generators: Vec<Exponent>) -> Self {
        debug_assert!(generators.windows(2).all(|w| w[0] < w[1]));
        MonomialIdeal { dim, generators }
    }

    pub fn unit(d: usize) -> Result<Self> {
        Self::minimalize([Exponent::zero(d)])
    }

    pub fn principal(e: Exponent) -> Result<Self> {
        Self::minimalize([e])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Exponent] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_zero()
    }

    pub fn is_principal(&self) -> bool {
        self.generators.len() == 1
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.dim, other.dim)?;
        let mut sums = Vec::with_capacity(self.len() * other.len());
        for a in &self.generators {
            for b in &other.generators {
                sums.push(a.checked_add(b)?);
            }
        }
        Self::minimalize(sums)
    }

    /// `I^n`; `n = 0` yields the unit ideal.
    pub fn power(&self, n: u32) -> Result<MonomialIdeal> {
        let mut result = MonomialIdeal::unit(self.dim)?;
        for _ in 0..n {
            result = result.product(self)?;
        }
        Ok(result)
    }

    /// The ideal `x^shift · I`.
    pub fn shift(&self, shift: &Exponent) -> Result<MonomialIdeal> {
        self.product(&MonomialIdeal::principal(shift.clone())?)
    }

    /// Monomial membership: some generator divides `x^e`.
    pub fn contains(&self, e: &Exponent) -> Result<bool> {
        check_dim(self.dim, e.dim())?;
        Ok(self.generators.iter().any(|g| g.divides(e)))
    }

    /// `self ⊆ other`.
    pub fn is_contained_in(&self, other: &MonomialIdeal) -> Result<bool> {
        check_dim(self.dim, other.dim)?;
        Ok(self
            .generators
            .iter()
            .all(|g| other.generators.iter().any(|h| h.divides(g))))
    }

    /// Componentwise maximum over the generators.
    pub fn max_exponents(&self) -> Vec<u64> {
        (0..self.dim)
            .map(|j| self.generators.iter().map(|g| g[j]).max().unwrap_or(0))
            .collect()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.generators.iter().map(ToString::to_string).collect();
        write!(f, "<{}>", parts.join(", "))
    }
}
