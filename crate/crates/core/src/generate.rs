//! Seeded random instances.
//!
//! Interior points are drawn with a common denominator `D` (the
//! denominator bound): the coordinates are a random composition of `D`
//! into positive parts, divided by `D`. Every trial gets its own ChaCha
//! stream derived from `(seed, stream id)`, so trials are reproducible in
//! isolation and in any execution order.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cevian::{build_family, feet_from_point, Cevian, CevianFamily};
use crate::concurrence::ExtraEdgePoints;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::point::BaryPoint;
use crate::scalar::ExactScalar;

pub const DEFAULT_DENOMINATOR_BOUND: u64 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mode {
    /// Feet projected from one hidden interior point.
    Concurrent,
    /// A concurrent family with one foot shifted inside its face.
    Perturbed,
    /// Every foot drawn independently.
    Random,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Concurrent => "concurrent",
            Mode::Perturbed => "perturbed",
            Mode::Random => "random",
        }
    }

    fn id(self) -> u64 {
        match self {
            Mode::Concurrent => 0,
            Mode::Perturbed => 1,
            Mode::Random => 2,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "concurrent" => Ok(Mode::Concurrent),
            "perturbed" => Ok(Mode::Perturbed),
            "random" => Ok(Mode::Random),
            other => Err(Error::Format(format!("unknown mode {other:?}"))),
        }
    }
}

/// Generator for one trial: `n`, `k`, mode and trial index select the stream.
pub fn trial_rng(seed: u64, n: usize, k: usize, mode: Mode, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let stream = ((((n as u64) << 8 | k as u64) << 4 | mode.id()) << 40) | (trial & ((1 << 40) - 1));
    rng.set_stream(stream);
    rng
}

/// Interior point of `face` (ambient frame) with coordinates in `(1/D) Z`.
pub fn random_interior_point_of<R: Rng>(rng: &mut R, face: &Face, denominator_bound: u64) -> Result<BaryPoint> {
    let parts = face.len() as u64;
    if denominator_bound < parts {
        return Err(Error::DenominatorBound {
            n: face.ambient_n(),
            bound: denominator_bound,
        });
    }
    let d = denominator_bound as usize;
    let mut cuts: Vec<usize> = sample(rng, d - 1, face.len() - 1)
        .into_iter()
        .map(|c| c + 1)
        .collect();
    cuts.sort_unstable();
    let mut coords = vec![ExactScalar::zero(); face.ambient_n() + 1];
    let mut prev = 0usize;
    for (slot, &i) in face.indices().iter().enumerate() {
        let next = cuts.get(slot).copied().unwrap_or(d);
        coords[i] = ExactScalar::ratio((next - prev) as i64, d as i64)?;
        prev = next;
    }
    BaryPoint::new(coords)
}

pub fn random_interior_point<R: Rng>(rng: &mut R, n: usize, denominator_bound: u64) -> Result<BaryPoint> {
    random_interior_point_of(rng, &Face::full(n), denominator_bound)
}

/// Moves mass `eps` from one support coordinate of `foot` to another, with
/// `0 < eps < foot[b]`, so the foot stays interior to its face and the
/// ratio between the two coordinates changes.
pub fn perturb_point<R: Rng>(rng: &mut R, foot: &BaryPoint, denominator_bound: u64) -> BaryPoint {
    let support = foot.support();
    assert!(support.len() >= 2, "perturbation needs a face of dim >= 1");
    let picks = sample(rng, support.len(), 2);
    let a = support.indices()[picks.index(0)];
    let b = support.indices()[picks.index(1)];
    let d = denominator_bound.max(2) as i64;
    let r = rng.gen_range(1..d);
    let eps = foot.coord(b) * ExactScalar::ratio(r, d).expect("d > 0");
    let mut coords = foot.coords().to_vec();
    coords[a] = &coords[a] + &eps;
    coords[b] = &coords[b] - &eps;
    BaryPoint::new(coords).expect("mass is conserved")
}

/// A concurrent family with exactly one foot moved by [`perturb_point`].
pub fn perturb_family<R: Rng>(rng: &mut R, fam: &CevianFamily, denominator_bound: u64) -> Result<CevianFamily> {
    let idx = rng.gen_range(0..fam.len());
    let c = &fam.members()[idx];
    let moved = perturb_point(rng, c.foot(), denominator_bound);
    fam.replace_foot(c.apex(), moved)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub family: CevianFamily,
    /// The point the family was projected from, for concurrent instances.
    pub witness: Option<BaryPoint>,
}

pub fn generate<R: Rng>(rng: &mut R, n: usize, k: usize, mode: Mode, denominator_bound: u64) -> Result<Instance> {
    if n < 2 || k == 0 || k >= n {
        return Err(Error::BadDimension { n, k });
    }
    match mode {
        Mode::Concurrent | Mode::Perturbed => {
            let x = random_interior_point(rng, n, denominator_bound)?;
            let fam = build_family(n, k, &feet_from_point(&x, k)?)?;
            if mode == Mode::Concurrent {
                Ok(Instance {
                    family: fam,
                    witness: Some(x),
                })
            } else {
                Ok(Instance {
                    family: perturb_family(rng, &fam, denominator_bound)?,
                    witness: None,
                })
            }
        }
        Mode::Random => {
            let feet = Face::all_of_size(n, k)
                .into_iter()
                .map(|apex| {
                    let base = apex.complement().expect("k < n + 1");
                    Ok((apex, random_interior_point_of(rng, &base, denominator_bound)?))
                })
                .collect::<Result<BTreeMap<_, _>>>()?;
            Ok(Instance {
                family: build_family(n, k, &feet)?,
                witness: None,
            })
        }
    }
}

/// A mixed tetrahedral family `{Δ Q01 P2 P3, Δ Q02 P1 P3, Δ Q03 P1 P2, Δ Q123 P0}`
/// and edge points `Q12, Q13, Q23` induced by `Q123`, all projected from one
/// interior point; when `perturbed`, `Q01` is then moved off that position.
pub fn tetrahedral_instance<R: Rng>(
    rng: &mut R,
    denominator_bound: u64,
    perturbed: bool,
) -> Result<(CevianFamily, ExtraEdgePoints, BaryPoint)> {
    let x = random_interior_point(rng, 3, denominator_bound)?;
    let face = |ix: &[usize]| Face::new(ix.to_vec(), 3).expect("tetrahedron face");
    let mut members = Vec::new();
    for apex in [face(&[2, 3]), face(&[1, 3]), face(&[1, 2])] {
        let mut foot = x.restrict(&apex.complement().expect("proper"))?;
        if perturbed && apex == face(&[2, 3]) {
            foot = perturb_point(rng, &foot, denominator_bound);
        }
        members.push(Cevian::new(apex, foot)?);
    }
    let top = x.restrict(&face(&[1, 2, 3]))?;
    members.push(Cevian::new(face(&[0]), top.clone())?);
    let extra = face(&[1, 2, 3])
        .subfaces_of_size(2)
        .into_iter()
        .map(|e| Ok((e.clone(), top.restrict(&e)?)))
        .collect::<Result<ExtraEdgePoints>>()?;
    Ok((CevianFamily::mixed(3, members)?, extra, x))
}
