//! Multipedes: one interior point per face of a simplex, closed under
//! projection from the dropped vertex.
//!
//! Every interior point `q` of a face `T` induces exactly one multipede of
//! `T`: the point on a facet `T_i` is the intersection of the line `P_i q`
//! with `T_i`, and so on down to the edges. Vertices are not stored; the
//! order relation treats them separately.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::cevian::CevianFamily;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::point::BaryPoint;
use crate::scalar::ExactScalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multipede {
    base: Face,
    points: BTreeMap<Face, BaryPoint>,
}

impl Multipede {
    /// The multipede of `base` induced by `q`, which must be interior to `base`.
    pub fn induce(base: &Face, q: &BaryPoint) -> Result<Self> {
        if q.ambient_n() != base.ambient_n() || !q.is_interior_to(base) {
            return Err(Error::NotInterior(base.clone()));
        }
        let mut points = BTreeMap::new();
        if base.dim() == 0 {
            return Ok(Multipede {
                base: base.clone(),
                points,
            });
        }
        points.insert(base.clone(), q.clone());
        let mut queue = VecDeque::from([base.clone()]);
        while let Some(face) = queue.pop_front() {
            if face.dim() < 2 {
                continue;
            }
            let top = points[&face].clone();
            for &i in face.indices() {
                let facet = face.without(i).expect("dim >= 2");
                if points.contains_key(&facet) {
                    continue;
                }
                points.insert(facet.clone(), top.restrict(&facet)?);
                queue.push_back(facet);
            }
        }
        Ok(Multipede {
            base: base.clone(),
            points,
        })
    }

    /// Validates an externally supplied multipede: one point interior to
    /// every face of dimension >= 1, with the colinearity closure holding.
    pub fn from_points(base: Face, points: BTreeMap<Face, BaryPoint>) -> Result<Self> {
        let faces = base.subfaces_min_dim(1);
        if points.len() != faces.len() {
            let missing = faces
                .iter()
                .find(|f| !points.contains_key(*f))
                .cloned()
                .unwrap_or_else(|| base.clone());
            return Err(Error::BrokenMultipede(missing));
        }
        for f in &faces {
            let p = points.get(f).ok_or_else(|| Error::BrokenMultipede(f.clone()))?;
            if !p.is_interior_to(f) {
                return Err(Error::NotInterior(f.clone()));
            }
        }
        let m = Multipede { base, points };
        m.check_closure()?;
        Ok(m)
    }

    /// For every face `F` of dim >= 2 and `i ∈ F`: `P_i`, the point on `F_i`
    /// and the point on `F` are colinear.
    pub fn check_closure(&self) -> Result<()> {
        for (face, p) in &self.points {
            if face.dim() < 2 {
                continue;
            }
            for &i in face.indices() {
                let facet = face.without(i).expect("dim >= 2");
                let sub = self
                    .points
                    .get(&facet)
                    .ok_or_else(|| Error::BrokenMultipede(facet.clone()))?;
                if !colinear_with_vertex(i, sub, p) {
                    return Err(Error::BrokenMultipede(face.clone()));
                }
            }
        }
        Ok(())
    }

    pub fn base(&self) -> &Face {
        &self.base
    }

    pub fn points(&self) -> &BTreeMap<Face, BaryPoint> {
        &self.points
    }

    pub fn get(&self, face: &Face) -> Option<&BaryPoint> {
        self.points.get(face)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// `p = (1 - s) sub + s P_i` for some scalar `s`.
fn colinear_with_vertex(i: usize, sub: &BaryPoint, p: &BaryPoint) -> bool {
    if !sub.coord(i).is_zero() {
        return false;
    }
    let s = p.coord(i);
    let rest = ExactScalar::one() - s;
    (0..=p.ambient_n())
        .filter(|&v| v != i)
        .all(|v| *p.coord(v) == &rest * sub.coord(v))
}

pub fn induce_multipede(base: &Face, q: &BaryPoint) -> Result<Multipede> {
    Multipede::induce(base, q)
}

/// The relation `p ⪯ q` inside the face `t`.
///
/// A vertex `P_i` precedes any `q` whose supporting face contains it.
/// Otherwise `p` precedes `q` when it is the point, on `p`'s own supporting
/// face, of the multipede induced by `q`. Points outside `t` never relate.
pub fn precedes(p: &BaryPoint, q: &BaryPoint, t: &Face) -> bool {
    if p.ambient_n() != t.ambient_n() || q.ambient_n() != t.ambient_n() {
        return false;
    }
    let (ps, qs) = (p.support(), q.support());
    if !ps.is_subface_of(t) || !qs.is_subface_of(t) || !ps.is_subface_of(&qs) {
        return false;
    }
    if ps.len() == 1 {
        return true;
    }
    match Multipede::induce(&qs, q) {
        Ok(m) => m.get(&ps) == Some(p),
        Err(_) => false,
    }
}

/// `P_i Q / Q P_j` for `Q` on the edge `{i, j}`: with `Q = a P_i + b P_j`
/// this is `b / a`.
pub fn leg_ratio(i: usize, j: usize, q: &BaryPoint) -> Result<ExactScalar> {
    let edge = Face::new(vec![i, j], q.ambient_n())?;
    if !q.is_interior_to(&edge) {
        return Err(Error::NotInterior(edge));
    }
    q.coord(j).checked_div(q.coord(i))
}

/// Product of directed edge ratios around `cycle` (the closing leg back to
/// the first vertex is implied).
pub fn cycle_ratio_product(
    t: &Face,
    cycle: &[usize],
    edge_points: &BTreeMap<Face, BaryPoint>,
) -> Result<ExactScalar> {
    if cycle.len() < 2 || cycle.iter().any(|&i| !t.contains(i)) {
        return Err(Error::BadCycle(cycle.to_vec()));
    }
    let n = t.ambient_n();
    let mut product = ExactScalar::one();
    for (idx, &i) in cycle.iter().enumerate() {
        let j = cycle[(idx + 1) % cycle.len()];
        if i == j {
            return Err(Error::BadCycle(cycle.to_vec()));
        }
        let edge = Face::new(vec![i, j], n)?;
        let q = edge_points
            .get(&edge)
            .ok_or_else(|| Error::MissingEdgePoint(edge.clone()))?;
        product = product * leg_ratio(i, j, q)?;
    }
    Ok(product)
}

/// All points of the multipedes induced by the feet of `fam`.
pub fn closure_points(fam: &CevianFamily) -> BTreeSet<BaryPoint> {
    let mut w = BTreeSet::new();
    for c in fam.members() {
        let m = Multipede::induce(&c.base(), c.foot()).expect("feet are interior to their bases");
        w.extend(m.points.into_values());
    }
    w
}

/// Number of distinct closure points interior to `t`.
pub fn feet_closure_cardinality(fam: &CevianFamily, t: &Face) -> usize {
    closure_points(fam)
        .iter()
        .filter(|p| p.is_interior_to(t))
        .count()
}
