use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::lp::{maximize, LinearSystem, LpOutcome, Relation};
use super::{dot, primitive, Rational};
use crate::error::{check_dim, Error, Result};
use crate::ideal::Exponent;

/// A non-coordinate facet `normal · x >= offset` of `conv(points) + Q_{>=0}^d`.
///
/// The normal is primitive (gcd 1) and non-negative, the offset positive.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Facet {
    normal: Vec<BigInt>,
    offset: BigInt,
}

impl Facet {
    pub fn normal(&self) -> &[BigInt] {
        &self.normal
    }

    pub fn offset(&self) -> &BigInt {
        &self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    /// `normal · point` for an integer point.
    pub fn evaluate(&self, point: &Exponent) -> BigInt {
        self.normal
            .iter()
            .zip(point.entries())
            .map(|(h, &e)| h * BigInt::from(e))
            .sum()
    }

    pub fn evaluate_rational(&self, point: &[Rational]) -> Rational {
        self.normal
            .iter()
            .zip(point)
            .map(|(h, x)| x * h)
            .sum()
    }

    /// The same normal with the offset multiplied by `factor`.
    pub(crate) fn scaled(&self, factor: u64) -> Facet {
        Facet {
            normal: self.normal.clone(),
            offset: &self.offset * BigInt::from(factor),
        }
    }
}

impl fmt::Display for Facet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.normal.iter().map(ToString::to_string).collect();
        write!(f, "({}) >= {}", terms.join(", "), self.offset)
    }
}

/// Bitset over constraint indices; records where a dual ray is tight.
#[derive(Clone, PartialEq, Eq)]
struct ZeroSet(Vec<u64>);

impl ZeroSet {
    fn new(bits: usize) -> Self {
        ZeroSet(vec![0; bits.div_ceil(64)])
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn intersect(&self, other: &ZeroSet) -> ZeroSet {
        ZeroSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_subset_of(&self, other: &ZeroSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

struct Ray {
    vector: Vec<BigInt>,
    zeros: ZeroSet,
}

/// Extreme rays of the dual cone `{y : g·y >= 0 for every generator row g}`
/// by the incremental double-description method. The first `basis_len` rows
/// must be linearly independent and equal in number to the space dimension.
fn dual_extreme_rays(rows: &[Vec<BigInt>], initial: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let space = initial.len();
    let total = rows.len();
    let mut rays: Vec<Ray> = initial
        .into_iter()
        .map(|vector| {
            let mut zeros = ZeroSet::new(total);
            for (i, row) in rows.iter().enumerate().take(space) {
                if dot(row, &vector).is_zero() {
                    zeros.insert(i);
                }
            }
            Ray { vector, zeros }
        })
        .collect();

    for (k, row) in rows.iter().enumerate().skip(space) {
        let values: Vec<BigInt> = rays.iter().map(|r| dot(row, &r.vector)).collect();
        let positive: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let negative: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();
        if negative.is_empty() {
            for (ray, v) in rays.iter_mut().zip(&values) {
                if v.is_zero() {
                    ray.zeros.insert(k);
                }
            }
            continue;
        }

        let mut created = Vec::new();
        for &p in &positive {
            for &n in &negative {
                let common = rays[p].zeros.intersect(&rays[n].zeros);
                if common.len() + 2 < space {
                    continue;
                }
                let adjacent = (0..rays.len())
                    .all(|r| r == p || r == n || !common.is_subset_of(&rays[r].zeros));
                if !adjacent {
                    continue;
                }
                let mut vector: Vec<BigInt> = rays[n]
                    .vector
                    .iter()
                    .zip(&rays[p].vector)
                    .map(|(vn, vp)| &values[p] * vn - &values[n] * vp)
                    .collect();
                primitive(&mut vector);
                let mut zeros = common;
                zeros.insert(k);
                created.push(Ray { vector, zeros });
            }
        }

        let mut next = Vec::with_capacity(rays.len() + created.len());
        for (mut ray, v) in rays.into_iter().zip(&values) {
            if v.is_negative() {
                continue;
            }
            if v.is_zero() {
                ray.zeros.insert(k);
            }
            next.push(ray);
        }
        next.extend(created);
        rays = next;
    }

    rays.into_iter().map(|r| r.vector).collect()
}

/// Whether some point `x >= 0` satisfies every facet in `others` but
/// violates `facet`.
fn is_irredundant(facet: &Facet, others: &[&Facet]) -> Result<bool> {
    let d = facet.dim();
    let mut system = LinearSystem::new(d);
    for g in others {
        system.push(
            g.normal.iter().map(|h| Rational::from_integer(h.clone())).collect(),
            Relation::Ge,
            Rational::from_integer(g.offset.clone()),
        )?;
    }
    let objective: Vec<Rational> = facet
        .normal
        .iter()
        .map(|h| -Rational::from_integer(h.clone()))
        .collect();
    match maximize(&system, &objective)? {
        LpOutcome::Optimal { value, .. } => Ok(-value < Rational::from_integer(facet.offset.clone())),
        LpOutcome::Infeasible => Err(Error::Internal(
            "facet subsystem of a non-empty polyhedron is infeasible".into(),
        )),
        LpOutcome::Unbounded => Err(Error::Internal(
            "non-negative normal is unbounded below on the orthant".into(),
        )),
    }
}

/// Irredundant non-coordinate facets of `conv(points) + Q_{>=0}^d`, sorted
/// lexicographically by normal. Empty exactly when the origin is one of the
/// points.
pub fn hull_facets(points: &[Exponent], d: usize) -> Result<Vec<Facet>> {
    if d == 0 {
        return Err(Error::ZeroDimension);
    }
    if points.is_empty() {
        return Err(Error::EmptyInput("point set"));
    }
    for p in points {
        check_dim(d, p.dim())?;
    }

    // Homogenized generators in R^{d+1}: rays (0, e_j), then points (1, a).
    // A dual vector (y0, h) encodes the inequality h·x >= -y0.
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(d + points.len());
    for j in 0..d {
        let mut row = vec![BigInt::zero(); d + 1];
        row[j + 1] = BigInt::one();
        rows.push(row);
    }
    for p in points {
        let mut row = Vec::with_capacity(d + 1);
        row.push(BigInt::one());
        row.extend(p.entries().iter().map(|&e| BigInt::from(e)));
        rows.push(row);
    }

    // Inverse of the basis formed by the d rays and the first point.
    let first = &points[0];
    let mut initial = Vec::with_capacity(d + 1);
    let mut apex = vec![BigInt::zero(); d + 1];
    apex[0] = BigInt::one();
    initial.push(apex);
    for j in 0..d {
        let mut ray = vec![BigInt::zero(); d + 1];
        ray[0] = -BigInt::from(first[j]);
        ray[j + 1] = BigInt::one();
        initial.push(ray);
    }

    let mut facets: Vec<Facet> = dual_extreme_rays(&rows, initial)
        .into_iter()
        .filter(|y| y[0].is_negative())
        .map(|y| Facet {
            offset: -y[0].clone(),
            normal: y[1..].to_vec(),
        })
        .collect();
    if facets.iter().any(|f| f.normal.iter().any(Signed::is_negative)) {
        return Err(Error::Internal("facet normal with a negative entry".into()));
    }
    facets.sort();
    facets.dedup();

    let mut kept: Vec<Facet> = Vec::with_capacity(facets.len());
    for i in 0..facets.len() {
        let others: Vec<&Facet> = kept.iter().chain(&facets[i + 1..]).collect();
        if is_irredundant(&facets[i], &others)? {
            kept.push(facets[i].clone());
        }
    }
    Ok(kept)
}
