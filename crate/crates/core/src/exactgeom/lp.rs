use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{check_dim, Error, Result};
use crate::ideal::Exponent;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

/// A system of linear constraints over variables that are implicitly
/// non-negative.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LinearSystem {
    num_vars: usize,
    constraints: Vec<Constraint>,
}

impl LinearSystem {
    pub fn new(num_vars: usize) -> Self {
        Self {
            num_vars,
            constraints: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn push(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) -> Result<()> {
        if coeffs.len() != self.num_vars {
            return Err(Error::MalformedSystem(format!(
                "constraint has {} coefficients, system has {} variables",
                coeffs.len(),
                self.num_vars
            )));
        }
        self.constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
        Ok(())
    }

    /// Checks a point against every constraint (and non-negativity) exactly.
    pub fn is_satisfied_by(&self, point: &[Rational]) -> bool {
        if point.len() != self.num_vars || point.iter().any(Signed::is_negative) {
            return false;
        }
        self.constraints.iter().all(|c| {
            let lhs: Rational = c.coeffs.iter().zip(point).map(|(a, x)| a * x).sum();
            match c.relation {
                Relation::Le => lhs <= c.rhs,
                Relation::Ge => lhs >= c.rhs,
                Relation::Eq => lhs == c.rhs,
            }
        })
    }

    fn validate(&self) -> Result<()> {
        for c in &self.constraints {
            if c.coeffs.len() != self.num_vars {
                return Err(Error::MalformedSystem(
                    "coefficient row length differs from variable count".into(),
                ));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { point: Vec<Rational>, value: Rational },
    Infeasible,
    Unbounded,
}

/// Result of [`simplex_feasible`].
///
/// With slack maximization, `feasible` reports *strict* feasibility of every
/// inequality row (the optimal uniform slack is positive); equality rows and
/// the implicit non-negativity bounds are never made strict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Feasibility {
    pub feasible: bool,
    pub point: Option<Vec<Rational>>,
    pub min_slack: Option<Rational>,
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    width: usize,
}

impl Tableau {
    fn rhs(&self, row: usize) -> &Rational {
        &self.rows[row][self.width]
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.rows[row][col].clone();
        for v in self.rows[row].iter_mut() {
            *v /= &p;
        }
        let pivot_row = self.rows[row].clone();
        for (r, other) in self.rows.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let factor = other[col].clone();
            for (v, pv) in other.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &factor * pv;
                }
            }
        }
        self.basis[row] = col;
    }

    /// Maximizes `cost` over the columns flagged in `allowed` using Bland's
    /// rule. Returns `false` when the objective is unbounded.
    fn optimize(&mut self, cost: &[Rational], allowed: &[bool]) -> bool {
        loop {
            let mut entering = None;
            for col in 0..self.width {
                if !allowed[col] || self.basis.contains(&col) {
                    continue;
                }
                let mut reduced = cost[col].clone();
                for (r, &b) in self.basis.iter().enumerate() {
                    if !cost[b].is_zero() && !self.rows[r][col].is_zero() {
                        reduced -= &cost[b] * &self.rows[r][col];
                    }
                }
                if reduced.is_positive() {
                    entering = Some(col);
                    break;
                }
            }
            let Some(col) = entering else {
                return true;
            };
            let mut leaving: Option<(usize, Rational)> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][col];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(r) / a;
                let better = match &leaving {
                    None => true,
                    Some((lr, best)) => {
                        ratio < *best || (ratio == *best && self.basis[r] < self.basis[*lr])
                    }
                };
                if better {
                    leaving = Some((r, ratio));
                }
            }
            match leaving {
                Some((row, _)) => self.pivot(row, col),
                None => return false,
            }
        }
    }

    fn objective_value(&self, cost: &[Rational]) -> Rational {
        self.basis
            .iter()
            .enumerate()
            .map(|(r, &b)| &cost[b] * self.rhs(r))
            .sum()
    }
}

/// Maximizes `objective · x` subject to `system` and `x >= 0`, exactly.
///
/// Two-phase tableau simplex with Bland's anti-cycling rule in both phases.
pub fn maximize(system: &LinearSystem, objective: &[Rational]) -> Result<LpOutcome> {
    system.validate()?;
    if objective.len() != system.num_vars {
        return Err(Error::MalformedSystem(
            "objective length differs from variable count".into(),
        ));
    }
    let n = system.num_vars;
    let m = system.constraints.len();

    // Column layout: originals, then one slack/surplus per inequality, then
    // one artificial per Ge/Eq row.
    let mut normalized = Vec::with_capacity(m);
    for c in &system.constraints {
        let mut coeffs = c.coeffs.clone();
        let mut rhs = c.rhs.clone();
        let mut relation = c.relation;
        if rhs.is_negative() {
            coeffs.iter_mut().for_each(|v| *v = -v.clone());
            rhs = -rhs;
            relation = match relation {
                Relation::Le => Relation::Ge,
                Relation::Ge => Relation::Le,
                Relation::Eq => Relation::Eq,
            };
        }
        normalized.push((coeffs, relation, rhs));
    }
    let slack_count = normalized
        .iter()
        .filter(|(_, r, _)| *r != Relation::Eq)
        .count();
    let art_count = normalized
        .iter()
        .filter(|(_, r, _)| *r != Relation::Le)
        .count();
    let width = n + slack_count + art_count;
    let art_start = n + slack_count;

    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let (mut next_slack, mut next_art) = (n, art_start);
    for (coeffs, relation, rhs) in normalized {
        let mut row = vec![Rational::zero(); width + 1];
        row[..n].clone_from_slice(&coeffs);
        row[width] = rhs;
        match relation {
            Relation::Le => {
                row[next_slack] = Rational::one();
                basis.push(next_slack);
                next_slack += 1;
            }
            Relation::Ge => {
                row[next_slack] = -Rational::one();
                next_slack += 1;
                row[next_art] = Rational::one();
                basis.push(next_art);
                next_art += 1;
            }
            Relation::Eq => {
                row[next_art] = Rational::one();
                basis.push(next_art);
                next_art += 1;
            }
        }
        rows.push(row);
    }
    let mut tableau = Tableau { rows, basis, width };

    if art_count > 0 {
        let mut phase_one = vec![Rational::zero(); width];
        for c in phase_one.iter_mut().skip(art_start) {
            *c = -Rational::one();
        }
        let all = vec![true; width];
        tableau.optimize(&phase_one, &all);
        if tableau.objective_value(&phase_one).is_negative() {
            return Ok(LpOutcome::Infeasible);
        }
        // Drive zero-valued artificials out of the basis; rows where that is
        // impossible are linearly dependent and are dropped.
        let mut r = 0;
        while r < tableau.rows.len() {
            if tableau.basis[r] >= art_start {
                match (0..art_start).find(|&c| !tableau.rows[r][c].is_zero()) {
                    Some(col) => {
                        tableau.pivot(r, col);
                        r += 1;
                    }
                    None => {
                        tableau.rows.remove(r);
                        tableau.basis.remove(r);
                    }
                }
            } else {
                r += 1;
            }
        }
    }

    let mut cost = vec![Rational::zero(); width];
    cost[..n].clone_from_slice(objective);
    let allowed: Vec<bool> = (0..width).map(|c| c < art_start).collect();
    if !tableau.optimize(&cost, &allowed) {
        return Ok(LpOutcome::Unbounded);
    }
    let mut point = vec![Rational::zero(); n];
    for (r, &b) in tableau.basis.iter().enumerate() {
        if b < n {
            point[b] = tableau.rhs(r).clone();
        }
    }
    let value = tableau.objective_value(&cost);
    Ok(LpOutcome::Optimal { point, value })
}

/// Decides feasibility of `system` (variables non-negative).
///
/// With `maximize_slack`, a uniform slack `δ ∈ [0, 1]` is added to every
/// inequality row and maximized; the system is reported feasible only when the
/// optimum is positive, i.e. when the strict version of every inequality row
/// has a solution.
pub fn simplex_feasible(system: &LinearSystem, maximize_slack: bool) -> Result<Feasibility> {
    system.validate()?;
    let n = system.num_vars;
    if !maximize_slack {
        return Ok(match maximize(system, &vec![Rational::zero(); n])? {
            LpOutcome::Optimal { point, .. } => Feasibility {
                feasible: true,
                point: Some(point),
                min_slack: None,
            },
            _ => Feasibility {
                feasible: false,
                point: None,
                min_slack: None,
            },
        });
    }

    let mut slacked = LinearSystem::new(n + 1);
    for c in &system.constraints {
        let mut coeffs = c.coeffs.clone();
        coeffs.push(match c.relation {
            Relation::Le => Rational::one(),
            Relation::Ge => -Rational::one(),
            Relation::Eq => Rational::zero(),
        });
        slacked.push(coeffs, c.relation, c.rhs.clone())?;
    }
    let mut cap = vec![Rational::zero(); n + 1];
    cap[n] = Rational::one();
    slacked.push(cap.clone(), Relation::Le, Rational::one())?;

    match maximize(&slacked, &cap)? {
        LpOutcome::Optimal { mut point, value } if value.is_positive() => {
            point.truncate(n);
            Ok(Feasibility {
                feasible: true,
                point: Some(point),
                min_slack: Some(value),
            })
        }
        LpOutcome::Unbounded => Err(Error::Internal(
            "slack objective is capped and cannot be unbounded".into(),
        )),
        _ => Ok(Feasibility {
            feasible: false,
            point: None,
            min_slack: None,
        }),
    }
}

/// Whether `point` lies in `conv(points) + Q_{>=0}^d`: is there a convex
/// combination `c` of `points` with `Σ c_i a_i <= point` componentwise?
pub fn lp_member(point: &[Rational], points: &[Exponent]) -> Result<bool> {
    let first = points.first().ok_or(Error::EmptyInput("point set"))?;
    let d = first.dim();
    check_dim(d, point.len())?;
    for p in points {
        check_dim(d, p.dim())?;
    }
    let s = points.len();
    let mut system = LinearSystem::new(s);
    system.push(vec![Rational::one(); s], Relation::Eq, Rational::one())?;
    for (j, bound) in point.iter().enumerate() {
        let coeffs = points
            .iter()
            .map(|a| Rational::from_integer(a[j].into()))
            .collect();
        system.push(coeffs, Relation::Le, bound.clone())?;
    }
    Ok(simplex_feasible(&system, false)?.feasible)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::{integer, rational};

    fn exps(list: &[&[u64]]) -> Vec<Exponent> {
        list.iter().map(|e| Exponent::new(e.to_vec())).collect()
    }

    #[test]
    fn contradictory_bounds_are_infeasible() {
        let mut sys = LinearSystem::new(1);
        sys.push(vec![integer(1)], Relation::Ge, integer(1)).unwrap();
        sys.push(vec![integer(1)], Relation::Le, integer(0)).unwrap();
        let f = simplex_feasible(&sys, false).unwrap();
        assert!(!f.feasible);
        assert!(f.point.is_none());
    }

    #[test]
    fn segment_is_feasible() {
        let mut sys = LinearSystem::new(2);
        sys.push(vec![integer(1), integer(1)], Relation::Eq, integer(1))
            .unwrap();
        let f = simplex_feasible(&sys, false).unwrap();
        assert!(f.feasible);
        assert!(sys.is_satisfied_by(f.point.as_ref().unwrap()));
    }

    #[test]
    fn strict_split_system_has_positive_slack() {
        // b ∈ NP°(x, y) and (2,1) - b ∈ NP°(x, y), b_i > 0, (2,1) - b > 0.
        let mut sys = LinearSystem::new(2);
        let one = integer(1);
        sys.push(vec![one.clone(), one.clone()], Relation::Ge, integer(1)).unwrap();
        sys.push(vec![one.clone(), one.clone()], Relation::Le, integer(2)).unwrap();
        sys.push(vec![one.clone(), integer(0)], Relation::Ge, integer(0)).unwrap();
        sys.push(vec![integer(0), one.clone()], Relation::Ge, integer(0)).unwrap();
        sys.push(vec![one.clone(), integer(0)], Relation::Le, integer(2)).unwrap();
        sys.push(vec![integer(0), one.clone()], Relation::Le, integer(1)).unwrap();
        let f = simplex_feasible(&sys, true).unwrap();
        assert!(f.feasible);
        let b = f.point.unwrap();
        let sum = &b[0] + &b[1];
        assert!(sum > integer(1) && sum < integer(2));
        assert!(b[0] > integer(0) && b[1] > integer(0));
        assert!(b[0] < integer(2) && b[1] < integer(1));
    }

    #[test]
    fn weakly_but_not_strictly_feasible() {
        let mut sys = LinearSystem::new(1);
        sys.push(vec![integer(1)], Relation::Ge, integer(1)).unwrap();
        sys.push(vec![integer(1)], Relation::Le, integer(1)).unwrap();
        assert!(simplex_feasible(&sys, false).unwrap().feasible);
        assert!(!simplex_feasible(&sys, true).unwrap().feasible);
    }

    #[test]
    fn malformed_row_is_rejected() {
        let mut sys = LinearSystem::new(2);
        assert!(matches!(
            sys.push(vec![integer(1)], Relation::Le, integer(0)),
            Err(Error::MalformedSystem(_))
        ));
    }

    #[test]
    fn maximize_detects_unbounded_and_optimum() {
        let mut sys = LinearSystem::new(2);
        sys.push(vec![integer(1), integer(-1)], Relation::Le, integer(1))
            .unwrap();
        assert_eq!(
            maximize(&sys, &[integer(1), integer(1)]).unwrap(),
            LpOutcome::Unbounded
        );
        sys.push(vec![integer(0), integer(2)], Relation::Le, integer(3))
            .unwrap();
        match maximize(&sys, &[integer(1), integer(1)]).unwrap() {
            LpOutcome::Optimal { value, point } => {
                assert_eq!(value, integer(4));
                assert_eq!(point, vec![rational(5, 2), rational(3, 2)]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn degenerate_cycling_example_terminates() {
        // Beale's classic cycling instance (maximization form).
        let mut sys = LinearSystem::new(4);
        sys.push(
            vec![rational(1, 4), integer(-60), rational(-1, 25), integer(9)],
            Relation::Le,
            integer(0),
        )
        .unwrap();
        sys.push(
            vec![rational(1, 2), integer(-90), rational(-1, 50), integer(3)],
            Relation::Le,
            integer(0),
        )
        .unwrap();
        sys.push(
            vec![integer(0), integer(0), integer(1), integer(0)],
            Relation::Le,
            integer(1),
        )
        .unwrap();
        let obj = [rational(3, 4), integer(-150), rational(1, 50), integer(-6)];
        match maximize(&sys, &obj).unwrap() {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, rational(1, 20)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn membership_examples() {
        let pts = exps(&[&[5, 0], &[0, 7]]);
        assert!(lp_member(&[integer(4), integer(2)], &pts).unwrap());
        assert!(!lp_member(&[integer(4), integer(1)], &pts).unwrap());
        assert!(lp_member(&[integer(5), integer(0)], &pts).unwrap());
        assert!(lp_member(&[rational(5, 2), rational(7, 2)], &pts).unwrap());
        assert!(!lp_member(&[rational(5, 2), rational(34, 10)], &pts).unwrap());
    }

    #[test]
    fn membership_dimension_mismatch() {
        let pts = exps(&[&[5, 0], &[0, 7]]);
        assert!(matches!(
            lp_member(&[integer(1)], &pts),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
