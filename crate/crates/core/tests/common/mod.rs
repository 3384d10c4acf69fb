#![allow(dead_code)]

use monadj::{Exponent, MonomialIdeal, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ideal(list: &[&[u64]]) -> MonomialIdeal {
    MonomialIdeal::minimalize(list.iter().map(|e| Exponent::new(e.to_vec()))).unwrap()
}

pub fn entries(i: &MonomialIdeal) -> Vec<Vec<u64>> {
    i.generators().iter().map(|e| e.entries().to_vec()).collect()
}

/// Up to `max_gens` generators with entries in `0..=max_exp`.
pub fn random_ideal<R: Rng>(rng: &mut R, d: usize, max_gens: usize, max_exp: u64) -> MonomialIdeal {
    let count = rng.gen_range(1..=max_gens);
    let gens: Vec<Exponent> = (0..count)
        .map(|_| Exponent::new((0..d).map(|_| rng.gen_range(0..=max_exp)).collect()))
        .collect();
    MonomialIdeal::minimalize(gens).unwrap()
}

/// The corpus used across the structural criteria: d ∈ {2,3,4}, ≤ 6
/// generators, exponents ≤ 8.
pub fn corpus(seed: u64, size: usize) -> Vec<MonomialIdeal> {
    let mut r = rng(seed);
    (0..size)
        .map(|_| {
            let d = r.gen_range(2..=4);
            random_ideal(&mut r, d, 6, 8)
        })
        .collect()
}

pub fn random_rational_point<R: Rng>(rng: &mut R, upper: &[u64]) -> Vec<Rational> {
    upper
        .iter()
        .map(|&u| {
            let denom = rng.gen_range(1..=6i64);
            let numer = rng.gen_range(0..=(u as i64 + 1) * denom);
            Rational::new(BigInt::from(numer), BigInt::from(denom))
        })
        .collect()
}

/// Independent facet oracle: every hyperplane spanned by `d` affinely
/// independent elements among the points and the unit rays that is valid for
/// all of them; coordinate hyperplanes (offset 0) are dropped.
pub fn oracle_facets(points: &[Exponent], d: usize) -> Vec<(Vec<BigInt>, BigInt)> {
    // Each element gives a row of the homogeneous system on (h, h0):
    // point a: h·a - h0 = 0; ray e_j: h_j = 0.
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for p in points {
        let mut row: Vec<Rational> = p.entries().iter().map(|&x| Rational::from_integer(x.into())).collect();
        row.push(-Rational::one());
        rows.push(row);
    }
    for j in 0..d {
        let mut row = vec![Rational::zero(); d + 1];
        row[j] = Rational::one();
        rows.push(row);
    }
    let mut found = Vec::new();
    for subset in subsets(rows.len(), d) {
        let chosen: Vec<Vec<Rational>> = subset.iter().map(|&i| rows[i].clone()).collect();
        let Some(mut v) = nullspace_vector(chosen) else { continue };
        let sign = validity_sign(&rows, &v);
        let Some(sign) = sign else { continue };
        if sign < 0 {
            v.iter_mut().for_each(|x| *x = -x.clone());
        }
        let ints = to_primitive_integers(&v);
        let (normal, offset) = (ints[..d].to_vec(), ints[d].clone());
        if offset.is_positive() {
            found.push((normal, offset));
        }
    }
    found.sort();
    found.dedup();
    found
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// A nullspace vector when the rows have full rank (nullity one).
fn nullspace_vector(mut m: Vec<Vec<Rational>>) -> Option<Vec<Rational>> {
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let pv = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x /= &pv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pr = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pr) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    if pivots.len() + 1 != cols {
        return None;
    }
    let free = (0..cols).find(|c| !pivots.contains(c)).unwrap();
    let mut v = vec![Rational::zero(); cols];
    v[free] = Rational::one();
    for (row, &pc) in pivots.iter().enumerate() {
        v[pc] = -m[row][free].clone();
    }
    Some(v)
}

fn validity_sign(rows: &[Vec<Rational>], v: &[Rational]) -> Option<i32> {
    let (mut pos, mut neg) = (false, false);
    for row in rows {
        let s: Rational = row.iter().zip(v).map(|(a, b)| a * b).sum();
        if s.is_positive() {
            pos = true;
        }
        if s.is_negative() {
            neg = true;
        }
    }
    match (pos, neg) {
        (true, true) => None,
        (false, true) => Some(-1),
        _ => Some(1),
    }
}

fn to_primitive_integers(v: &[Rational]) -> Vec<BigInt> {
    use num_integer::Integer;
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &l).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    ints.into_iter().map(|x| x / &g).collect()
}

pub fn facet_pairs(p: &monadj::NewtonPolyhedron) -> Vec<(Vec<BigInt>, BigInt)> {
    p.facets().iter().map(|f| (f.normal().to_vec(), f.offset().clone())).collect()
}
