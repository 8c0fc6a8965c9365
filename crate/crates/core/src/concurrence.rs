//! Decision procedures for concurrence of cevian families.
//!
//! Two independent routes decide whether a uniform k-cevian family of an
//! n-simplex has a common interior point:
//!
//! 1. globally, by solving the exact membership system of all cevians;
//! 2. face by face, by intersecting the 1-cevians each family induces on
//!    every l-face (`k + l = n + 1`).
//!
//! The two must agree on every instance. [`verify_equivalence`] runs both
//! and reports a disagreement as an error instead of reconciling it.

use std::collections::BTreeMap;

use itertools::Itertools;
use serde::Serialize;

use crate::cevian::{restrict_to_face, Cevian, CevianFamily, InducedCevian};
use crate::error::{Error, Result};
use crate::face::Face;
use crate::format::FamilyDoc;
use crate::linalg::{feasible_nonnegative, solve_affine, LinearSystem, SolutionSpace};
use crate::multipede::{cycle_ratio_product, precedes};
use crate::point::BaryPoint;
use crate::scalar::ExactScalar;

/// Outcome of intersecting a family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Intersection {
    /// A common point with every coordinate positive.
    Interior(BaryPoint),
    /// Common points exist, but all of them lie on the boundary of the simplex.
    BoundaryOnly(BaryPoint),
    Empty,
}

impl Intersection {
    pub fn interior(self) -> Option<BaryPoint> {
        match self {
            Intersection::Interior(x) => Some(x),
            _ => None,
        }
    }
}

/// `x_v - foot_v * sum_{w in U'} x_w = 0` for every cevian and every `v ∈ U'`,
/// plus `sum x = 1`.
pub fn membership_system(fam: &CevianFamily) -> LinearSystem {
    let width = fam.ambient_n() + 1;
    let mut sys = LinearSystem::new(width);
    for c in fam.members() {
        let base = c.base();
        for &v in base.indices() {
            let mut row = vec![ExactScalar::zero(); width];
            for &w in base.indices() {
                row[w] = -c.foot().coord(v);
            }
            row[v] += &ExactScalar::one();
            sys.push_eq(row, ExactScalar::zero());
        }
    }
    sys.push_eq(vec![ExactScalar::one(); width], ExactScalar::one());
    sys
}

pub fn intersect_family_detailed(fam: &CevianFamily) -> Intersection {
    let space = match solve_affine(&membership_system(fam)) {
        SolutionSpace::Infeasible => return Intersection::Empty,
        SolutionSpace::Affine(space) => space,
    };
    if let Some(x) = feasible_nonnegative(&space, true) {
        return Intersection::Interior(x);
    }
    match feasible_nonnegative(&space, false) {
        Some(x) => Intersection::BoundaryOnly(x),
        None => Intersection::Empty,
    }
}

/// A common point of all members interior to the simplex, if one exists.
pub fn intersect_family(fam: &CevianFamily) -> Option<BaryPoint> {
    intersect_family_detailed(fam).interior()
}

/// All l-faces for a uniform k-family in dimension n, lexicographically.
pub fn l_faces(n: usize, k: usize) -> Vec<Face> {
    Face::all_of_size(n, n + 2 - k)
}

fn uniform_k(fam: &CevianFamily) -> Result<usize> {
    fam.uniform_k().ok_or(Error::NotUniform)
}

fn local_family(l_face: &Face, pairs: &[(Cevian, InducedCevian)]) -> CevianFamily {
    let locals = pairs.iter().map(|(_, ind)| ind.to_local()).collect();
    CevianFamily::from_members(l_face.dim(), locals, Some(1)).expect("induced 1-cevians form a uniform family")
}

/// l-faces whose induced 1-cevians have no common interior point.
pub fn check_condition_2(fam: &CevianFamily) -> Result<Vec<Face>> {
    let k = uniform_k(fam)?;
    let mut failing = Vec::new();
    for l_face in l_faces(fam.ambient_n(), k) {
        let pairs = restrict_to_face(fam, &l_face)?;
        if intersect_family(&local_family(&l_face, &pairs)).is_none() {
            failing.push(l_face);
        }
    }
    Ok(failing)
}

/// The only candidate for a point `X` of `L` with `Q_[t] ⪯ X` for all `t`.
///
/// `Q_[t0] ⪯ X` fixes the ratios of `X` off `t0`; `Q_[t1] ⪯ X` then fixes
/// the `t0` coordinate against a third vertex `w`.
fn order_candidate(l_face: &Face, pairs: &[(Cevian, InducedCevian)]) -> BaryPoint {
    let ix = l_face.indices();
    let (t0, w) = (ix[0], ix[2]);
    let q0 = &pairs[0].1.foot;
    let q1 = &pairs[1].1.foot;
    let mut weights = vec![ExactScalar::zero(); l_face.ambient_n() + 1];
    for &v in &ix[1..] {
        weights[v] = q0.coord(v).clone();
    }
    weights[t0] = q1.coord(t0) * q0.coord(w) / q1.coord(w);
    BaryPoint::from_weights(weights).expect("positive weights")
}

/// Same answer as [`check_condition_2`], computed through the `⪯` relation.
pub fn check_condition_2_via_order(fam: &CevianFamily) -> Result<Vec<Face>> {
    let k = uniform_k(fam)?;
    let mut failing = Vec::new();
    for l_face in l_faces(fam.ambient_n(), k) {
        let pairs = restrict_to_face(fam, &l_face)?;
        let x = order_candidate(&l_face, &pairs);
        let ok = pairs.iter().all(|(_, ind)| precedes(&ind.foot, &x, &l_face));
        if !ok {
            failing.push(l_face);
        }
    }
    Ok(failing)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RatioFailure {
    pub face: Face,
    pub cycle: Vec<usize>,
    pub product: ExactScalar,
}

/// Classical Ceva products of the induced feet on every triangular l-face.
/// Only defined when `l = 2` (that is `k = n - 1`); empty otherwise.
pub fn ratio_failures(fam: &CevianFamily) -> Result<Vec<RatioFailure>> {
    let k = uniform_k(fam)?;
    let n = fam.ambient_n();
    if n + 1 - k != 2 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for l_face in l_faces(n, k) {
        let edges: BTreeMap<Face, BaryPoint> = restrict_to_face(fam, &l_face)?
            .into_iter()
            .map(|(_, ind)| (ind.foot.support(), ind.foot))
            .collect();
        let cycle = l_face.indices().to_vec();
        let product = cycle_ratio_product(&l_face, &cycle, &edges)?;
        if !product.is_one() {
            out.push(RatioFailure {
                face: l_face,
                cycle,
                product,
            });
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConcurrenceReport {
    pub intersects: bool,
    pub witness: Option<BaryPoint>,
    pub failing_faces: Vec<Face>,
    pub ratio_failures: Vec<RatioFailure>,
    pub boundary_only: bool,
}

impl ConcurrenceReport {
    /// Global intersection only; used for mixed families, where the per-face
    /// criterion is not defined.
    pub fn intersection_only(fam: &CevianFamily) -> Self {
        let inter = intersect_family_detailed(fam);
        ConcurrenceReport {
            intersects: matches!(inter, Intersection::Interior(_)),
            boundary_only: matches!(inter, Intersection::BoundaryOnly(_)),
            witness: inter.interior(),
            failing_faces: Vec::new(),
            ratio_failures: Vec::new(),
        }
    }
}

fn violation(fam: &CevianFamily, intersects: bool, failing: &[Face]) -> Error {
    Error::TheoremViolation {
        intersects,
        failing_faces: failing.iter().map(|f| f.indices().to_vec()).collect(),
        instance: serde_json::to_string(&FamilyDoc::from_family(fam)).unwrap_or_default(),
    }
}

/// Runs the global and the per-face decision independently and checks
/// that they agree.
pub fn verify_equivalence(fam: &CevianFamily) -> Result<ConcurrenceReport> {
    let inter = intersect_family_detailed(fam);
    let failing_faces = check_condition_2(fam)?;
    let ratio_failures = ratio_failures(fam)?;
    let boundary_only = matches!(inter, Intersection::BoundaryOnly(_));
    let witness = inter.interior();
    let intersects = witness.is_some();

    if intersects != failing_faces.is_empty() {
        return Err(violation(fam, intersects, &failing_faces));
    }
    if let Some(x) = &witness {
        if !x.is_interior() || !fam.members().iter().all(|c| c.contains(x)) {
            return Err(violation(fam, intersects, &failing_faces));
        }
    }
    Ok(ConcurrenceReport {
        intersects,
        witness,
        boundary_only,
        failing_faces,
        ratio_failures,
    })
}

/// The three extra edge points of the tetrahedral mixed family, keyed by edge.
pub type ExtraEdgePoints = BTreeMap<Face, BaryPoint>;

fn tetra_face(ix: &[usize]) -> Face {
    Face::new(ix.to_vec(), 3).expect("valid tetrahedron face")
}

/// Decides both sides of the mixed tetrahedral criterion for the family
/// `{Δ Q01 P2 P3, Δ Q02 P1 P3, Δ Q03 P1 P2, Δ Q123 P0}` with extra points
/// `Q12, Q13, Q23`, each of which must precede `Q123`.
///
/// Returns `(family intersects, every triangle ratio product is 1)`.
pub fn check_proposition_tetrahedron(fam: &CevianFamily, extra: &ExtraEdgePoints) -> Result<(bool, bool)> {
    if fam.ambient_n() != 3 || fam.len() != 4 {
        return Err(Error::BadMixedShape);
    }
    let top = fam.with_apex(&tetra_face(&[0])).ok_or(Error::BadMixedShape)?;
    let mut edge_points: BTreeMap<Face, BaryPoint> = BTreeMap::new();
    for j in 1..=3 {
        let apex = tetra_face(&(1..=3).filter(|&i| i != j).collect_vec());
        let c = fam.with_apex(&apex).ok_or(Error::BadMixedShape)?;
        edge_points.insert(c.base(), c.foot().clone());
    }
    let full = Face::full(3);
    for e in tetra_face(&[1, 2, 3]).subfaces_of_size(2) {
        let p = extra.get(&e).ok_or_else(|| Error::MissingEdgePoint(e.clone()))?;
        if !p.is_interior_to(&e) {
            return Err(Error::NotInterior(e));
        }
        if !precedes(p, top.foot(), &full) {
            return Err(Error::PrecedenceViolation { edge: e });
        }
        edge_points.insert(e, p.clone());
    }

    let condition1 = intersect_family(fam).is_some();
    let mut condition2 = true;
    for tri in full.subfaces_of_size(3) {
        let product = cycle_ratio_product(&tri, tri.indices(), &edge_points)?;
        condition2 &= product.is_one();
    }
    Ok((condition1, condition2))
}
