//! JSON documents: cevians, families, instance files, multipedes.
//!
//! Rationals travel as strings in `p/q` form. Serialization is canonical:
//! cevians sorted by apex, index sets sorted, rationals in lowest terms, and
//! keys in declaration order.

use serde::{Deserialize, Serialize};

use crate::cevian::{Cevian, CevianFamily};
use crate::error::{Error, Result};
use crate::face::Face;
use crate::multipede::Multipede;
use crate::point::BaryPoint;
use crate::scalar::ExactScalar;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CevianDoc {
    pub apex: Vec<usize>,
    pub foot: Vec<ExactScalar>,
}

impl CevianDoc {
    pub fn from_cevian(c: &Cevian) -> Self {
        CevianDoc {
            apex: c.apex().indices().to_vec(),
            foot: c.foot().coords().to_vec(),
        }
    }

    pub fn to_cevian(&self, n: usize) -> Result<Cevian> {
        let apex = Face::new(self.apex.clone(), n)?;
        if self.foot.len() != n + 1 {
            return Err(Error::CoordinateCount {
                expected: n + 1,
                got: self.foot.len(),
            });
        }
        Cevian::new(apex, BaryPoint::new(self.foot.clone())?)
    }
}

/// Either one cevian dimension for the whole family or one per cevian.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum KSpec {
    Uniform(usize),
    PerCevian(Vec<usize>),
}

fn canonical_members(fam: &CevianFamily) -> (KSpec, Vec<CevianDoc>) {
    let mut members: Vec<&Cevian> = fam.members().iter().collect();
    members.sort_by(|a, b| a.apex().cmp(b.apex()));
    let k = match fam.uniform_k() {
        Some(k) => KSpec::Uniform(k),
        None => KSpec::PerCevian(members.iter().map(|c| c.dim()).collect()),
    };
    (k, members.into_iter().map(CevianDoc::from_cevian).collect())
}

fn family_from_parts(n: usize, k: &KSpec, cevians: &[CevianDoc]) -> Result<CevianFamily> {
    let members = cevians
        .iter()
        .map(|c| c.to_cevian(n))
        .collect::<Result<Vec<_>>>()?;
    match k {
        KSpec::Uniform(k) => CevianFamily::from_members(n, members, Some(*k)),
        KSpec::PerCevian(ks) => {
            if ks.len() != members.len() {
                return Err(Error::Format(format!(
                    "k list has {} entries for {} cevians",
                    ks.len(),
                    members.len()
                )));
            }
            for (c, &k) in members.iter().zip(ks) {
                if c.dim() != k {
                    return Err(Error::Format(format!("cevian with apex {} is not a {k}-cevian", c.apex())));
                }
            }
            CevianFamily::mixed(n, members)
        }
    }
}

/// `{"n": 3, "k": 2, "cevians": [...]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyDoc {
    pub n: usize,
    pub k: KSpec,
    pub cevians: Vec<CevianDoc>,
}

impl FamilyDoc {
    pub fn from_family(fam: &CevianFamily) -> Self {
        let (k, cevians) = canonical_members(fam);
        FamilyDoc {
            n: fam.ambient_n(),
            k,
            cevians,
        }
    }

    pub fn to_family(&self) -> Result<CevianFamily> {
        family_from_parts(self.n, &self.k, &self.cevians)
    }
}

/// How an instance was generated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Provenance {
    pub mode: String,
    pub seed: u64,
    pub denominator_bound: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<ExactScalar>>,
}

/// A family plus generator metadata; the unit exchanged by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub schema_version: u32,
    pub n: usize,
    pub k: KSpec,
    pub cevians: Vec<CevianDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
}

impl InstanceFile {
    pub fn new(fam: &CevianFamily, provenance: Option<Provenance>) -> Self {
        let (k, cevians) = canonical_members(fam);
        InstanceFile {
            schema_version: SCHEMA_VERSION,
            n: fam.ambient_n(),
            k,
            cevians,
            provenance,
        }
    }

    /// Parses and validates: the family must be well formed and a recorded
    /// witness must be a barycentric point.
    pub fn parse(text: &str) -> Result<Self> {
        let file: InstanceFile = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        if file.schema_version != SCHEMA_VERSION {
            return Err(Error::Format(format!("unsupported schema_version {}", file.schema_version)));
        }
        file.family()?;
        file.witness()?;
        Ok(file)
    }

    pub fn family(&self) -> Result<CevianFamily> {
        family_from_parts(self.n, &self.k, &self.cevians)
    }

    pub fn witness(&self) -> Result<Option<BaryPoint>> {
        match self.provenance.as_ref().and_then(|p| p.witness.clone()) {
            None => Ok(None),
            Some(w) => BaryPoint::new(w).map(Some),
        }
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FacePointDoc {
    pub face: Vec<usize>,
    pub coords: Vec<ExactScalar>,
}

/// `{"base": [0,1,2,3], "points": [{"face": [...], "coords": [...]}, ...]}`,
/// points ordered by face size, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MultipedeDoc {
    pub base: Vec<usize>,
    pub points: Vec<FacePointDoc>,
}

impl MultipedeDoc {
    pub fn from_multipede(m: &Multipede) -> Self {
        let mut points: Vec<FacePointDoc> = m
            .points()
            .iter()
            .map(|(f, p)| FacePointDoc {
                face: f.indices().to_vec(),
                coords: p.coords().to_vec(),
            })
            .collect();
        points.sort_by(|a, b| (a.face.len(), &a.face).cmp(&(b.face.len(), &b.face)));
        MultipedeDoc {
            base: m.base().indices().to_vec(),
            points,
        }
    }

    pub fn to_multipede(&self) -> Result<Multipede> {
        let n = self
            .points
            .first()
            .map(|p| p.coords.len().saturating_sub(1))
            .unwrap_or_else(|| self.base.iter().copied().max().unwrap_or(0));
        let base = Face::new(self.base.clone(), n)?;
        let points = self
            .points
            .iter()
            .map(|p| Ok((Face::new(p.face.clone(), n)?, BaryPoint::new(p.coords.clone())?)))
            .collect::<Result<_>>()?;
        Multipede::from_points(base, points)
    }
}
