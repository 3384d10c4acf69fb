//! Minimal lattice points of up-closed sets inside a bounding box.

use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactgeom::Facet;
use crate::ideal::Exponent;

/// Largest number of cells either enumerator will visit.
pub(crate) const MAX_BOX_CELLS: u128 = 1 << 25;

/// `normal · e >= threshold` with a non-negative integer normal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Halfspace {
    pub normal: Vec<i128>,
    pub threshold: i128,
}

pub(crate) fn normal_to_i128(facet: &Facet) -> Result<Vec<i128>> {
    facet
        .normal()
        .iter()
        .map(|h| h.to_i128().ok_or(Error::Overflow("facet normal")))
        .collect()
}

pub(crate) fn offset_to_i128(facet: &Facet) -> Result<i128> {
    facet.offset().to_i128().ok_or(Error::Overflow("facet offset"))
}

struct BoxShape {
    strides: Vec<usize>,
    cells: usize,
}

impl BoxShape {
    fn new(bounds: &[u64]) -> Result<Self> {
        let mut cells: u128 = 1;
        for &b in bounds {
            cells = cells.saturating_mul(u128::from(b) + 1);
        }
        if cells > MAX_BOX_CELLS {
            return Err(Error::BoxTooLarge(cells));
        }
        let sizes: Vec<usize> = bounds.iter().map(|&b| b as usize + 1).collect();
        let mut strides = vec![1; sizes.len()];
        for j in (0..sizes.len().saturating_sub(1)).rev() {
            strides[j] = strides[j + 1] * sizes[j + 1];
        }
        Ok(BoxShape {
            strides,
            cells: cells as usize,
        })
    }

    fn decode(&self, mut idx: usize, out: &mut [u64]) {
        for (slot, &stride) in out.iter_mut().zip(&self.strides) {
            *slot = (idx / stride) as u64;
            idx %= stride;
        }
    }
}

fn check_magnitudes(halfspaces: &[Halfspace], bounds: &[u64]) -> Result<()> {
    for h in halfspaces {
        let mut total: i128 = h.threshold.checked_abs().ok_or(Error::Overflow("threshold"))?;
        for (w, &b) in h.normal.iter().zip(bounds) {
            let term = w
                .checked_mul(i128::from(b) + 1)
                .ok_or(Error::Overflow("halfspace evaluation"))?;
            total = total
                .checked_add(term)
                .ok_or(Error::Overflow("halfspace evaluation"))?;
        }
    }
    Ok(())
}

/// Minimal lattice points of `{e ∈ N^d : normal·e >= threshold for all}`
/// whose coordinates lie within `bounds`.
///
/// Walks the box of the first `d - 1` coordinates; for each prefix the least
/// feasible last coordinate is solved for directly. A prefix yields a minimal
/// point exactly when lowering any of its positive entries forces a larger
/// last coordinate (or infeasibility).
pub(crate) fn staircase(
    dim: usize,
    halfspaces: &[Halfspace],
    bounds: &[u64],
) -> Result<Vec<Exponent>> {
    debug_assert_eq!(bounds.len(), dim);
    check_magnitudes(halfspaces, bounds)?;
    let active: Vec<&Halfspace> = halfspaces.iter().filter(|h| h.threshold > 0).collect();
    let last = dim - 1;
    let shape = BoxShape::new(&bounds[..last])?;

    let least_last = |idx: usize| -> Option<i128> {
        let mut prefix = vec![0u64; last];
        shape.decode(idx, &mut prefix);
        let mut m: i128 = 0;
        for h in &active {
            let partial: i128 = h.normal[..last]
                .iter()
                .zip(&prefix)
                .map(|(w, &e)| w * i128::from(e))
                .sum();
            let rest = h.threshold - partial;
            if rest <= 0 {
                continue;
            }
            let w = h.normal[last];
            if w == 0 {
                return None;
            }
            m = m.max((rest + w - 1) / w);
        }
        Some(m)
    };
    let column: Vec<Option<i128>> = (0..shape.cells).into_par_iter().map(least_last).collect();

    let mut found: Vec<Exponent> = (0..shape.cells)
        .into_par_iter()
        .filter_map(|idx| {
            let m = column[idx]?;
            let mut prefix = vec![0u64; last];
            shape.decode(idx, &mut prefix);
            for j in 0..last {
                if prefix[j] > 0 {
                    if let Some(lower) = column[idx - shape.strides[j]] {
                        if lower <= m {
                            return None;
                        }
                    }
                }
            }
            prefix.push(u64::try_from(m).ok()?);
            Some(Exponent::new(prefix))
        })
        .collect();
    found.sort_unstable();
    Ok(found)
}

/// Minimal points of an up-closed `member` predicate by testing every cell
/// of the box `[0, bounds]`.
pub(crate) fn box_minimal<F>(bounds: &[u64], member: F) -> Result<Vec<Exponent>>
where
    F: Fn(&[u64]) -> bool + Sync,
{
    let shape = BoxShape::new(bounds)?;
    let d = bounds.len();
    let cells: Vec<bool> = (0..shape.cells)
        .into_par_iter()
        .map(|idx| {
            let mut e = vec![0u64; d];
            shape.decode(idx, &mut e);
            member(&e)
        })
        .collect();
    let mut found: Vec<Exponent> = (0..shape.cells)
        .into_par_iter()
        .filter_map(|idx| {
            if !cells[idx] {
                return None;
            }
            let mut e = vec![0u64; d];
            shape.decode(idx, &mut e);
            let minimal = (0..d).all(|j| e[j] == 0 || !cells[idx - shape.strides[j]]);
            minimal.then(|| Exponent::new(e))
        })
        .collect();
    found.sort_unstable();
    Ok(found)
}
