//! Barycentric points of the ambient simplex.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::face::Face;
use crate::scalar::ExactScalar;

/// A point of the closed ambient simplex in barycentric coordinates.
///
/// Coordinates are nonnegative and sum to exactly one. A point is interior
/// to the face spanned by its support.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct BaryPoint {
    coords: Vec<ExactScalar>,
}

impl BaryPoint {
    pub fn new(coords: Vec<ExactScalar>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::CoordinateCount { expected: 1, got: 0 });
        }
        if let Some(index) = coords.iter().position(ExactScalar::is_negative) {
            return Err(Error::NegativeCoordinate { index });
        }
        let sum: ExactScalar = coords.iter().sum();
        if !sum.is_one() {
            return Err(Error::BadSum(sum.to_string()));
        }
        Ok(BaryPoint { coords })
    }

    /// Parses coordinates from their textual forms.
    pub fn parse<S: AsRef<str>>(coords: &[S]) -> Result<Self> {
        let coords = coords
            .iter()
            .map(|s| s.as_ref().parse())
            .collect::<Result<Vec<ExactScalar>>>()?;
        BaryPoint::new(coords)
    }

    /// Normalizes nonnegative weights with positive total.
    pub fn from_weights(weights: Vec<ExactScalar>) -> Result<Self> {
        if let Some(index) = weights.iter().position(ExactScalar::is_negative) {
            return Err(Error::NegativeCoordinate { index });
        }
        let total: ExactScalar = weights.iter().sum();
        let inv = total.recip()?;
        Ok(BaryPoint {
            coords: weights.into_iter().map(|w| w * &inv).collect(),
        })
    }

    pub fn vertex(i: usize, ambient_n: usize) -> Self {
        let mut coords = vec![ExactScalar::zero(); ambient_n + 1];
        coords[i] = ExactScalar::one();
        BaryPoint { coords }
    }

    /// Barycenter of a face.
    pub fn centroid(face: &Face) -> Self {
        let mut weights = vec![ExactScalar::zero(); face.ambient_n() + 1];
        for &i in face.indices() {
            weights[i] = ExactScalar::one();
        }
        BaryPoint::from_weights(weights).expect("faces are nonempty")
    }

    pub fn coords(&self) -> &[ExactScalar] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &ExactScalar {
        &self.coords[i]
    }

    pub fn ambient_n(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn into_coords(self) -> Vec<ExactScalar> {
        self.coords
    }

    /// Indices with nonzero coordinate, as a face.
    pub fn support(&self) -> Face {
        let idx = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect();
        Face::new(idx, self.ambient_n()).expect("coordinates sum to one")
    }

    pub fn is_vertex(&self) -> bool {
        self.support().len() == 1
    }

    pub fn is_interior_to(&self, face: &Face) -> bool {
        self.support() == *face
    }

    /// Strictly positive in every ambient coordinate.
    pub fn is_interior(&self) -> bool {
        self.coords.iter().all(ExactScalar::is_positive)
    }

    /// Coordinates restricted to the vertices of `face`, in face order.
    pub fn local_coords(&self, face: &Face) -> Vec<ExactScalar> {
        face.indices().iter().map(|&i| self.coords[i].clone()).collect()
    }

    /// Embeds face-local coordinates back into the ambient frame.
    pub fn from_local(face: &Face, local: &[ExactScalar]) -> Result<Self> {
        if local.len() != face.len() {
            return Err(Error::CoordinateCount {
                expected: face.len(),
                got: local.len(),
            });
        }
        let mut coords = vec![ExactScalar::zero(); face.ambient_n() + 1];
        for (&i, c) in face.indices().iter().zip(local) {
            coords[i] = c.clone();
        }
        BaryPoint::new(coords)
    }

    /// Central projection from the vertices outside `face` onto the affine
    /// span of `face`: keep the coordinates on `face` and renormalize.
    ///
    /// The result is expressed in the ambient frame with zeros off `face`.
    pub fn restrict(&self, face: &Face) -> Result<BaryPoint> {
        let mass: ExactScalar = face.indices().iter().map(|&i| &self.coords[i]).sum();
        if mass.is_zero() {
            return Err(Error::ZeroMass(face.clone()));
        }
        let inv = mass.recip()?;
        let mut coords = vec![ExactScalar::zero(); self.coords.len()];
        for &i in face.indices() {
            coords[i] = &self.coords[i] * &inv;
        }
        Ok(BaryPoint { coords })
    }
}

/// Free-function form of [`BaryPoint::restrict`].
pub fn restrict_point(p: &BaryPoint, f: &Face) -> Result<BaryPoint> {
    p.restrict(f)
}

impl fmt::Debug for BaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.coords.iter().join(", "))
    }
}

impl fmt::Display for BaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl<'de> Deserialize<'de> for BaryPoint {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let coords = Vec::<ExactScalar>::deserialize(deserializer)?;
        BaryPoint::new(coords).map_err(serde::de::Error::custom)
    }
}
