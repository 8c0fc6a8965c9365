//! k-cevians of an n-simplex and families of them.
//!
//! A k-cevian is the simplex spanned by k apex vertices `U` and one foot
//! point interior to the complementary face `U'`. Feet are stored in ambient
//! coordinates, zero on the apex.

use std::collections::BTreeMap;


use crate::error::{Error, Result};
use crate::face::Face;
use crate::multipede;
use crate::point::BaryPoint;
use crate::scalar::ExactScalar;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cevian {
    apex: Face,
    foot: BaryPoint,
}

impl Cevian {
    pub fn new(apex: Face, foot: BaryPoint) -> Result<Self> {
        if foot.ambient_n() != apex.ambient_n() {
            return Err(Error::BadSupport(apex));
        }
        match apex.complement() {
            Some(base) if foot.is_interior_to(&base) => Ok(Cevian { apex, foot }),
            _ => Err(Error::BadSupport(apex)),
        }
    }

    pub fn apex(&self) -> &Face {
        &self.apex
    }

    pub fn foot(&self) -> &BaryPoint {
        &self.foot
    }

    /// Number of apex vertices.
    pub fn dim(&self) -> usize {
        self.apex.len()
    }

    pub fn ambient_n(&self) -> usize {
        self.apex.ambient_n()
    }

    /// The face `U'` holding the foot.
    pub fn base(&self) -> Face {
        self.foot.support()
    }

    /// Membership in `conv({foot} ∪ {P_u : u ∈ apex})`.
    ///
    /// By uniqueness of barycentric coordinates, `x` belongs to the cevian
    /// iff its coordinates on `U'` are `m * foot` for `m` their total mass.
    pub fn contains(&self, x: &BaryPoint) -> bool {
        if x.ambient_n() != self.ambient_n() {
            return false;
        }
        let base = self.base();
        let mass: ExactScalar = base.indices().iter().map(|&v| x.coord(v)).sum();
        base.indices()
            .iter()
            .all(|&v| *x.coord(v) == &mass * self.foot.coord(v))
    }
}

pub fn cevian_contains(c: &Cevian, x: &BaryPoint) -> bool {
    c.contains(x)
}

/// A family of cevians in one ambient simplex.
///
/// Uniform families hold exactly one k-cevian per k-subset of vertices;
/// mixed families (heterogeneous k) only require distinct apexes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CevianFamily {
    ambient_n: usize,
    members: Vec<Cevian>,
    uniform_k: Option<usize>,
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

impl CevianFamily {
    /// Validates member shapes; when `uniform_k` is given, also that the
    /// family has one k-cevian for every k-subset.
    pub fn from_members(ambient_n: usize, members: Vec<Cevian>, uniform_k: Option<usize>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for c in &members {
            if c.ambient_n() != ambient_n {
                return Err(Error::BadSupport(c.apex.clone()));
            }
            if !seen.insert(c.apex.clone()) {
                return Err(Error::DuplicateApex(c.apex.clone()));
            }
        }
        if let Some(k) = uniform_k {
            if k == 0 || k >= ambient_n {
                return Err(Error::BadDimension { n: ambient_n, k });
            }
            if members.iter().any(|c| c.dim() != k) {
                return Err(Error::NotUniform);
            }
            if members.len() != binomial(ambient_n + 1, k) {
                let missing = Face::all_of_size(ambient_n, k)
                    .into_iter()
                    .find(|u| !seen.contains(u))
                    .expect("distinct apexes of size k, too few of them");
                return Err(Error::MissingFoot(missing));
            }
        }
        Ok(CevianFamily {
            ambient_n,
            members,
            uniform_k,
        })
    }

    pub fn mixed(ambient_n: usize, members: Vec<Cevian>) -> Result<Self> {
        CevianFamily::from_members(ambient_n, members, None)
    }

    pub fn ambient_n(&self) -> usize {
        self.ambient_n
    }

    pub fn members(&self) -> &[Cevian] {
        &self.members
    }

    pub fn uniform_k(&self) -> Option<usize> {
        self.uniform_k
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn with_apex(&self, apex: &Face) -> Option<&Cevian> {
        self.members.iter().find(|c| c.apex == *apex)
    }

    /// Same family with one foot replaced.
    pub fn replace_foot(&self, apex: &Face, foot: BaryPoint) -> Result<Self> {
        let mut members = self.members.clone();
        let slot = members
            .iter_mut()
            .find(|c| c.apex == *apex)
            .ok_or_else(|| Error::MissingFoot(apex.clone()))?;
        *slot = Cevian::new(apex.clone(), foot)?;
        CevianFamily::from_members(self.ambient_n, members, self.uniform_k)
    }

    /// Same family with members in the given order (a permutation of indices).
    pub fn reordered(&self, order: &[usize]) -> Self {
        assert_eq!(order.len(), self.members.len());
        CevianFamily {
            ambient_n: self.ambient_n,
            members: order.iter().map(|&i| self.members[i].clone()).collect(),
            uniform_k: self.uniform_k,
        }
    }

    fn require_uniform(&self) -> Result<usize> {
        self.uniform_k.ok_or(Error::NotUniform)
    }
}

/// The uniform family of all C(n+1, k) k-cevians with the given feet, keyed
/// by apex set and listed in lexicographic apex order.
pub fn build_family(n: usize, k: usize, feet: &BTreeMap<Face, BaryPoint>) -> Result<CevianFamily> {
    if k == 0 || k >= n {
        return Err(Error::BadDimension { n, k });
    }
    if let Some(stray) = feet.keys().find(|u| u.len() != k || u.ambient_n() != n) {
        return Err(Error::BadFace {
            indices: stray.indices().to_vec(),
            ambient_n: n,
        });
    }
    let members = Face::all_of_size(n, k)
        .into_iter()
        .map(|apex| {
            let foot = feet.get(&apex).ok_or_else(|| Error::MissingFoot(apex.clone()))?;
            Cevian::new(apex, foot.clone())
        })
        .collect::<Result<Vec<_>>>()?;
    CevianFamily::from_members(n, members, Some(k))
}

/// Feet of the k-cevians through an interior point `x`: the foot for apex
/// `U` is `x` projected onto `U'`.
pub fn feet_from_point(x: &BaryPoint, k: usize) -> Result<BTreeMap<Face, BaryPoint>> {
    let n = x.ambient_n();
    if !x.is_interior() {
        return Err(Error::NotInterior(Face::full(n)));
    }
    if k == 0 || k > n {
        return Err(Error::BadDimension { n, k });
    }
    Face::all_of_size(n, k)
        .into_iter()
        .map(|apex| {
            let base = apex.complement().expect("k <= n");
            let foot = x.restrict(&base)?;
            Ok((apex, foot))
        })
        .collect()
}

/// The segment `Δ Q_[t] P_t` cut from a k-cevian by an l-face `L` that
/// contains its foot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedCevian {
    pub face: Face,
    pub vertex: usize,
    pub foot: BaryPoint,
}

impl InducedCevian {
    /// The same segment as a 1-cevian of `L` in `L`'s own frame.
    pub fn to_local(&self) -> Cevian {
        let local_n = self.face.dim();
        let apex = Face::vertex(self.face.position(self.vertex).expect("vertex in face"), local_n)
            .expect("position in range");
        let foot = BaryPoint::new(self.foot.local_coords(&self.face)).expect("foot lies in L");
        Cevian::new(apex, foot).expect("foot interior to facet")
    }
}

/// The subfamily of cevians whose feet lie in the facets of the l-face `l_face`
/// (`k + l = n + 1`), one per vertex `t` of `l_face`, paired with the induced
/// 1-cevians. Pairs are listed in vertex order.
pub fn restrict_to_face(fam: &CevianFamily, l_face: &Face) -> Result<Vec<(Cevian, InducedCevian)>> {
    let k = fam.require_uniform()?;
    let n = fam.ambient_n;
    if l_face.ambient_n() != n || l_face.dim() + k != n + 1 {
        return Err(Error::DimensionMismatch {
            n,
            k,
            l: l_face.dim(),
        });
    }
    l_face
        .indices()
        .iter()
        .map(|&t| {
            let facet = l_face.without(t).expect("l >= 1");
            let mut hits = fam.members.iter().filter(|c| c.foot.is_interior_to(&facet));
            let c = hits
                .next()
                .ok_or_else(|| Error::MissingFoot(facet.complement().expect("proper face")))?;
            if hits.next().is_some() {
                return Err(Error::DuplicateApex(c.apex.clone()));
            }
            let induced = InducedCevian {
                face: l_face.clone(),
                vertex: t,
                foot: c.foot.clone(),
            };
            Ok((c.clone(), induced))
        })
        .collect()
}

/// Lifts a uniform (k-1)-family to a k-family whose feet are the unique
/// multipede-closure points in the faces of size n+1-k.
///
/// Fails with `ClosureAmbiguous` when some such face holds zero or several
/// closure points, which happens exactly when the input family violates
/// the per-face concurrence condition.
pub fn lift_feet(fam: &CevianFamily) -> Result<CevianFamily> {
    let k_prev = fam.require_uniform()?;
    let n = fam.ambient_n;
    let k = k_prev + 1;
    if k >= n {
        return Err(Error::BadDimension { n, k });
    }
    let closure = multipede::closure_points(fam);
    let mut by_face: BTreeMap<Face, Vec<&BaryPoint>> = BTreeMap::new();
    for p in &closure {
        by_face.entry(p.support()).or_default().push(p);
    }
    let feet = Face::all_of_size(n, n + 1 - k)
        .into_iter()
        .map(|base| {
            let pts = by_face.get(&base).map(Vec::as_slice).unwrap_or(&[]);
            match pts {
                [only] => Ok((base.complement().expect("proper face"), (*only).clone())),
                _ => Err(Error::ClosureAmbiguous {
                    face: base,
                    count: pts.len(),
                }),
            }
        })
        .collect::<Result<BTreeMap<_, _>>>()?;
    build_family(n, k, &feet)
}
