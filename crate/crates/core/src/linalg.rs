//! Exact linear algebra over the rationals.
//!
//! Equalities are solved by Gauss-Jordan elimination into a particular
//! solution plus a nullspace basis. Sign constraints are then decided by
//! Fourier-Motzkin elimination over the nullspace parameters, which stay
//! few at the dimensions this crate targets.

use std::collections::BTreeSet;

use crate::point::BaryPoint;
use crate::scalar::ExactScalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// `coeffs . x = rhs`
    Eq,
    /// `coeffs . x >= rhs`
    Ge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<ExactScalar>,
    pub rhs: ExactScalar,
    pub relation: Relation,
}

impl Constraint {
    pub fn lhs(&self, x: &[ExactScalar]) -> ExactScalar {
        self.coeffs.iter().zip(x).map(|(a, v)| a * v).sum()
    }

    pub fn is_satisfied_by(&self, x: &[ExactScalar]) -> bool {
        let lhs = self.lhs(x);
        match self.relation {
            Relation::Eq => lhs == self.rhs,
            Relation::Ge => lhs >= self.rhs,
        }
    }
}

/// Affine constraints over a fixed number of unknowns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    unknowns: usize,
    rows: Vec<Constraint>,
}

impl LinearSystem {
    pub fn new(unknowns: usize) -> Self {
        LinearSystem {
            unknowns,
            rows: Vec::new(),
        }
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn rows(&self) -> &[Constraint] {
        &self.rows
    }

    pub fn push_eq(&mut self, coeffs: Vec<ExactScalar>, rhs: ExactScalar) {
        assert_eq!(coeffs.len(), self.unknowns, "row width");
        self.rows.push(Constraint {
            coeffs,
            rhs,
            relation: Relation::Eq,
        });
    }

    pub fn push_ge(&mut self, coeffs: Vec<ExactScalar>, rhs: ExactScalar) {
        assert_eq!(coeffs.len(), self.unknowns, "row width");
        self.rows.push(Constraint {
            coeffs,
            rhs,
            relation: Relation::Ge,
        });
    }

    pub fn is_satisfied_by(&self, x: &[ExactScalar]) -> bool {
        x.len() == self.unknowns && self.rows.iter().all(|r| r.is_satisfied_by(x))
    }

    /// A point satisfying every row (equalities and `>=` rows) with all
    /// unknowns nonnegative, or strictly positive when `strict`.
    pub fn feasible_point(&self, strict: bool) -> Option<Vec<ExactScalar>> {
        match solve_affine(self) {
            SolutionSpace::Infeasible => None,
            SolutionSpace::Affine(space) => {
                let extra: Vec<&Constraint> = self
                    .rows
                    .iter()
                    .filter(|r| r.relation == Relation::Ge)
                    .collect();
                feasible_with(&space, &extra, strict, false)
            }
        }
    }
}

/// `particular + span(basis)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSpace {
    pub particular: Vec<ExactScalar>,
    pub basis: Vec<Vec<ExactScalar>>,
}

impl AffineSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn point_at(&self, params: &[ExactScalar]) -> Vec<ExactScalar> {
        let mut x = self.particular.clone();
        for (b, t) in self.basis.iter().zip(params) {
            for (xi, bi) in x.iter_mut().zip(b) {
                *xi += &(bi * t);
            }
        }
        x
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolutionSpace {
    Infeasible,
    Affine(AffineSpace),
}

impl SolutionSpace {
    pub fn affine(&self) -> Option<&AffineSpace> {
        match self {
            SolutionSpace::Infeasible => None,
            SolutionSpace::Affine(a) => Some(a),
        }
    }
}

/// Solves the equality rows of `system`; `>=` rows are ignored.
pub fn solve_affine(system: &LinearSystem) -> SolutionSpace {
    let cols = system.unknowns;
    let mut m: Vec<Vec<ExactScalar>> = system
        .rows
        .iter()
        .filter(|r| r.relation == Relation::Eq)
        .map(|r| {
            let mut row = r.coeffs.clone();
            row.push(r.rhs.clone());
            row
        })
        .collect();

    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][col].recip().expect("pivot is nonzero");
        for v in m[rank].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &(&factor * pv);
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == m.len() {
            break;
        }
    }

    if m[rank..].iter().any(|row| !row[cols].is_zero()) {
        return SolutionSpace::Infeasible;
    }

    let mut particular = vec![ExactScalar::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = m[r][cols].clone();
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let basis = free
        .iter()
        .map(|&f| {
            let mut v = vec![ExactScalar::zero(); cols];
            v[f] = ExactScalar::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -&m[r][f];
            }
            v
        })
        .collect();
    SolutionSpace::Affine(AffineSpace { particular, basis })
}

/// A barycentric point of `space`: coordinates summing to one, all `>= 0`,
/// or all `> 0` when `strict`.
///
/// The choice among feasible points is deterministic; see [`feasible_with`].
pub fn feasible_nonnegative(space: &AffineSpace, strict: bool) -> Option<BaryPoint> {
    let x = feasible_with(space, &[], strict, true)?;
    Some(BaryPoint::new(x).expect("feasible point is barycentric"))
}

/// `coeffs . t + constant (> or >=) 0` over the nullspace parameters.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct ParamIneq {
    coeffs: Vec<ExactScalar>,
    constant: ExactScalar,
    strict: bool,
}

impl ParamIneq {
    /// Scales by a positive factor so the leading nonzero entry has absolute
    /// value one; makes duplicates compare equal.
    fn normalized(mut self) -> Self {
        let lead = self
            .coeffs
            .iter()
            .chain(std::iter::once(&self.constant))
            .find(|c| !c.is_zero())
            .map(ExactScalar::abs);
        if let Some(lead) = lead {
            if !lead.is_one() {
                let inv = lead.recip().expect("nonzero");
                for c in self.coeffs.iter_mut() {
                    *c = &*c * &inv;
                }
                self.constant = &self.constant * &inv;
            }
        }
        self
    }

    fn holds_trivially(&self) -> bool {
        if self.strict {
            self.constant.is_positive()
        } else {
            !self.constant.is_negative()
        }
    }

    fn value_without(&self, var: usize, t: &[ExactScalar]) -> ExactScalar {
        let mut v = self.constant.clone();
        for (j, (a, tj)) in self.coeffs.iter().zip(t).enumerate() {
            if j != var && !a.is_zero() {
                v += &(a * tj);
            }
        }
        v
    }
}

/// Fourier-Motzkin feasibility over `space`'s parameters for
/// `x >= 0` (or `x > 0`), the extra `>=` rows, and optionally `sum(x) = 1`.
///
/// Back-substitution visits parameters in order and picks, for each, the
/// value below from its interval of admissible values:
/// - closed lower bound: the lower bound itself (lexicographically least);
/// - open lower bound and an upper bound: the midpoint;
/// - open lower bound only: lower + 1;
/// - upper bound only: min(0, upper), or min(0, upper - 1) if open;
/// - unbounded: 0.
pub fn feasible_with(
    space: &AffineSpace,
    extra: &[&Constraint],
    strict: bool,
    unit_sum: bool,
) -> Option<Vec<ExactScalar>> {
    let d = space.dim();
    let n = space.particular.len();
    let mut ineqs: Vec<ParamIneq> = Vec::new();

    for i in 0..n {
        ineqs.push(ParamIneq {
            coeffs: space.basis.iter().map(|b| b[i].clone()).collect(),
            constant: space.particular[i].clone(),
            strict,
        });
    }
    for row in extra {
        // a.(p + N t) - rhs >= 0
        ineqs.push(ParamIneq {
            coeffs: space.basis.iter().map(|b| row.lhs(b)).collect(),
            constant: row.lhs(&space.particular) - &row.rhs,
            strict: false,
        });
    }
    if unit_sum {
        let coeffs: Vec<ExactScalar> = space.basis.iter().map(|b| b.iter().sum()).collect();
        let constant: ExactScalar = space.particular.iter().sum::<ExactScalar>() - ExactScalar::one();
        ineqs.push(ParamIneq {
            coeffs: coeffs.iter().map(|c| -c).collect(),
            constant: -&constant,
            strict: false,
        });
        ineqs.push(ParamIneq {
            coeffs,
            constant,
            strict: false,
        });
    }

    // levels[j] holds the constraints involving only parameters 0..j.
    let mut levels: Vec<Vec<ParamIneq>> = vec![Vec::new(); d + 1];
    levels[d] = dedup(ineqs);
    for var in (0..d).rev() {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for c in &levels[var + 1] {
            let a = &c.coeffs[var];
            if a.is_positive() {
                pos.push(c);
            } else if a.is_negative() {
                neg.push(c);
            } else {
                rest.push(c.clone());
            }
        }
        for p in &pos {
            for q in &neg {
                let wp = -&q.coeffs[var];
                let wq = p.coeffs[var].clone();
                let coeffs = p
                    .coeffs
                    .iter()
                    .zip(&q.coeffs)
                    .map(|(a, b)| &wp * a + &wq * b)
                    .collect();
                rest.push(ParamIneq {
                    coeffs,
                    constant: &wp * &p.constant + &wq * &q.constant,
                    strict: p.strict || q.strict,
                });
            }
        }
        levels[var] = dedup(rest);
    }

    if !levels[0].iter().all(ParamIneq::holds_trivially) {
        return None;
    }

    let mut t = vec![ExactScalar::zero(); d];
    for var in 0..d {
        let mut lower: Option<(ExactScalar, bool)> = None;
        let mut upper: Option<(ExactScalar, bool)> = None;
        for c in &levels[var + 1] {
            let a = &c.coeffs[var];
            if a.is_zero() {
                continue;
            }
            let bound = -c.value_without(var, &t) / a;
            if a.is_positive() {
                lower = Some(tighter(lower, bound, c.strict, true));
            } else {
                upper = Some(tighter(upper, bound, c.strict, false));
            }
        }
        t[var] = pick(lower, upper);
    }
    Some(space.point_at(&t))
}

fn dedup(v: Vec<ParamIneq>) -> Vec<ParamIneq> {
    let set: BTreeSet<ParamIneq> = v.into_iter().map(ParamIneq::normalized).collect();
    set.into_iter().collect()
}

fn tighter(
    current: Option<(ExactScalar, bool)>,
    bound: ExactScalar,
    strict: bool,
    is_lower: bool,
) -> (ExactScalar, bool) {
    match current {
        None => (bound, strict),
        Some((b, s)) => {
            if b == bound {
                (b, s || strict)
            } else if (bound > b) == is_lower {
                (bound, strict)
            } else {
                (b, s)
            }
        }
    }
}

fn pick(lower: Option<(ExactScalar, bool)>, upper: Option<(ExactScalar, bool)>) -> ExactScalar {
    let zero = ExactScalar::zero();
    match (lower, upper) {
        (Some((lo, false)), _) => lo,
        (Some((lo, true)), Some((hi, _))) => (lo + hi) / ExactScalar::from_int(2),
        (Some((lo, true)), None) => lo + ExactScalar::one(),
        (None, Some((hi, open))) => {
            let hi = if open { hi - ExactScalar::one() } else { hi };
            if hi < zero {
                hi
            } else {
                zero
            }
        }
        (None, None) => zero,
    }
}
