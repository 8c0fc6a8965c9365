//! Faces of the ambient simplex, named by their vertex index sets.

use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};

/// A face of the ambient n-simplex: a nonempty, strictly increasing set of
/// vertex indices drawn from `0..=ambient_n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Face {
    indices: Vec<usize>,
    ambient_n: usize,
}

impl Face {
    /// Builds a face from indices in any order. Duplicates and out-of-range
    /// indices are rejected.
    pub fn new(mut indices: Vec<usize>, ambient_n: usize) -> Result<Self> {
        let bad = |indices: Vec<usize>| Error::BadFace { indices, ambient_n };
        if indices.is_empty() {
            return Err(bad(indices));
        }
        indices.sort_unstable();
        if indices.windows(2).any(|w| w[0] == w[1]) || indices[indices.len() - 1] > ambient_n {
            return Err(bad(indices));
        }
        Ok(Face { indices, ambient_n })
    }

    /// The whole simplex `{0, ..., n}`.
    pub fn full(ambient_n: usize) -> Self {
        Face {
            indices: (0..=ambient_n).collect(),
            ambient_n,
        }
    }

    pub fn vertex(i: usize, ambient_n: usize) -> Result<Self> {
        Face::new(vec![i], ambient_n)
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn ambient_n(&self) -> usize {
        self.ambient_n
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    /// Always false; faces are nonempty.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dim(&self) -> usize {
        self.indices.len() - 1
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    pub fn is_subface_of(&self, other: &Face) -> bool {
        self.indices.iter().all(|&i| other.contains(i))
    }

    pub fn position(&self, i: usize) -> Option<usize> {
        self.indices.binary_search(&i).ok()
    }

    /// Complementary index set in the ambient simplex, `None` for the full simplex.
    pub fn complement(&self) -> Option<Face> {
        let rest: Vec<usize> = (0..=self.ambient_n).filter(|i| !self.contains(*i)).collect();
        if rest.is_empty() {
            None
        } else {
            Some(Face {
                indices: rest,
                ambient_n: self.ambient_n,
            })
        }
    }

    /// The facet opposite vertex `i`, `None` if `i` is not in the face or the
    /// face is a single vertex.
    pub fn without(&self, i: usize) -> Option<Face> {
        if !self.contains(i) || self.indices.len() == 1 {
            return None;
        }
        Some(Face {
            indices: self.indices.iter().copied().filter(|&j| j != i).collect(),
            ambient_n: self.ambient_n,
        })
    }

    /// All subfaces with exactly `size` vertices, in lexicographic order.
    pub fn subfaces_of_size(&self, size: usize) -> Vec<Face> {
        if size == 0 || size > self.indices.len() {
            return Vec::new();
        }
        self.indices
            .iter()
            .copied()
            .combinations(size)
            .map(|indices| Face {
                indices,
                ambient_n: self.ambient_n,
            })
            .collect()
    }

    /// All subfaces of dimension at least `min_dim`, grouped by increasing size.
    pub fn subfaces_min_dim(&self, min_dim: usize) -> Vec<Face> {
        (min_dim + 1..=self.indices.len())
            .flat_map(|size| self.subfaces_of_size(size))
            .collect()
    }

    /// Faces of the ambient n-simplex with `size` vertices.
    pub fn all_of_size(ambient_n: usize, size: usize) -> Vec<Face> {
        Face::full(ambient_n).subfaces_of_size(size)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.indices.iter().join(","))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Face {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.indices.serialize(serializer)
    }
}
