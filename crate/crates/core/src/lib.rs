//! Exact-arithmetic cevian families in an n-simplex.
//!
//! A k-cevian of the simplex `Δ P_0 … P_n` is spanned by k vertices and a
//! foot point interior to the opposite face. This crate builds the family
//! of all C(n+1, k) such cevians, decides whether they share an interior
//! point, and checks that decision against the per-face criterion: on every
//! face of dimension `l = n + 1 - k` the induced ordinary cevians must be
//! concurrent. All arithmetic is exact over the rationals.
//!
//! ```
//! use ceva_core::{build_family, feet_from_point, verify_equivalence, BaryPoint};
//!
//! let x = BaryPoint::parse(&["1/2", "1/4", "1/8", "1/8"]).unwrap();
//! let fam = build_family(3, 2, &feet_from_point(&x, 2).unwrap()).unwrap();
//! let report = verify_equivalence(&fam).unwrap();
//! assert_eq!(report.witness, Some(x));
//! assert!(report.failing_faces.is_empty());
//! ```

pub mod cevian;
pub mod concurrence;
pub mod error;
pub mod face;
pub mod format;
pub mod generate;
pub mod linalg;
pub mod multipede;
pub mod point;
pub mod scalar;
pub mod svg;

pub use cevian::{
    binomial, build_family, cevian_contains, feet_from_point, lift_feet, restrict_to_face, Cevian, CevianFamily,
    InducedCevian,
};
pub use concurrence::{
    check_condition_2, check_condition_2_via_order, check_proposition_tetrahedron, intersect_family,
    intersect_family_detailed, l_faces, verify_equivalence, ConcurrenceReport, ExtraEdgePoints, Intersection,
    RatioFailure,
};
pub use error::{Error, Result};
pub use face::Face;
pub use linalg::{feasible_nonnegative, solve_affine, AffineSpace, LinearSystem, Relation, SolutionSpace};
pub use multipede::{
    closure_points, cycle_ratio_product, feet_closure_cardinality, induce_multipede, precedes, Multipede,
};
pub use point::{restrict_point, BaryPoint};
pub use scalar::ExactScalar;
