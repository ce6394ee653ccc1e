//! JSON wire forms.
//!
//! Every output object has a serde type here; each one deserializes back from
//! what it emits, and the records that mirror a core type convert both ways.

use serde::{Deserialize, Serialize};

use bicover_core::covers::BiDegree;
use bicover_core::deformations::{
    HomeoStatus, ManettiCertificate, ManettiCondition, NaturalDeformationProfile, NondefStatus,
    PairVerdict,
};
use bicover_core::invariants::{DivisibilityVerdict, HalfInt, InvariantRecord, Pi1, Signature};
use bicover_core::search::{SearchReport, SignatureGroup, SkipSummary};
use bicover_core::singularities::{
    link_lens_space, smoothing_family, ClassTDatum, CyclicQuotient, SmoothingFamily,
};

use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Pi1Json {
    #[serde(rename = "simply_connected")]
    SimplyConnected,
    Z2,
}

impl From<Pi1> for Pi1Json {
    fn from(p: Pi1) -> Self {
        match p {
            Pi1::SimplyConnected => Pi1Json::SimplyConnected,
            Pi1::Z2 => Pi1Json::Z2,
        }
    }
}

impl From<Pi1Json> for Pi1 {
    fn from(p: Pi1Json) -> Self {
        match p {
            Pi1Json::SimplyConnected => Pi1::SimplyConnected,
            Pi1Json::Z2 => Pi1::Z2,
        }
    }
}

/// `{"exact": r}` or `{"candidates": [r, ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DivisibilityJson {
    Exact(i64),
    Candidates(Vec<i64>),
}

impl From<&DivisibilityVerdict> for DivisibilityJson {
    fn from(v: &DivisibilityVerdict) -> Self {
        match v {
            DivisibilityVerdict::Exact(r) => DivisibilityJson::Exact(*r),
            DivisibilityVerdict::CandidateSet(rs) => DivisibilityJson::Candidates(rs.clone()),
        }
    }
}

impl From<DivisibilityJson> for DivisibilityVerdict {
    fn from(v: DivisibilityJson) -> Self {
        match v {
            DivisibilityJson::Exact(r) => DivisibilityVerdict::Exact(r),
            DivisibilityJson::Candidates(rs) => DivisibilityVerdict::CandidateSet(rs),
        }
    }
}

/// Flat invariant record. Half-integers are `[numerator, denominator]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantRecordJson {
    pub n: i64,
    pub m: i64,
    pub chi: i64,
    pub k2: i64,
    pub q: Option<i64>,
    pub pg: Option<i64>,
    #[serde(rename = "K_bidegree")]
    pub k_bidegree: [[i64; 2]; 2],
    pub divisibility: Option<DivisibilityJson>,
    pub pi1: Pi1Json,
    pub general_type: bool,
}

fn fraction(h: HalfInt) -> [i64; 2] {
    let (n, d) = h.as_fraction();
    [n, d]
}

impl From<&InvariantRecord> for InvariantRecordJson {
    fn from(r: &InvariantRecord) -> Self {
        InvariantRecordJson {
            n: r.n,
            m: r.m,
            chi: r.chi,
            k2: r.k_squared,
            q: r.q,
            pg: r.p_g,
            k_bidegree: [
                fraction(r.canonical_bidegree.0),
                fraction(r.canonical_bidegree.1),
            ],
            divisibility: r.divisibility.as_ref().map(DivisibilityJson::from),
            pi1: r.pi1.into(),
            general_type: r.general_type,
        }
    }
}

impl TryFrom<InvariantRecordJson> for InvariantRecord {
    type Error = Error;

    fn try_from(j: InvariantRecordJson) -> Result<Self, Error> {
        let half = |[n, d]: [i64; 2]| {
            HalfInt::from_fraction(n, d).ok_or_else(|| {
                Error::Schema(format!("K_bidegree entry {n}/{d} is not a half-integer"))
            })
        };
        Ok(InvariantRecord {
            n: j.n,
            m: j.m,
            chi: j.chi,
            k_squared: j.k2,
            q: j.q,
            p_g: j.pg,
            canonical_bidegree: (half(j.k_bidegree[0])?, half(j.k_bidegree[1])?),
            divisibility: j.divisibility.map(Into::into),
            pi1: j.pi1.into(),
            general_type: j.general_type,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureJson {
    pub pi1: Pi1Json,
    pub pg: i64,
    pub k2: i64,
    pub divisibility: i64,
}

impl From<&Signature> for SignatureJson {
    fn from(s: &Signature) -> Self {
        SignatureJson {
            pi1: s.pi1.into(),
            pg: s.p_g,
            k2: s.k_squared,
            divisibility: s.divisibility,
        }
    }
}

impl From<SignatureJson> for Signature {
    fn from(s: SignatureJson) -> Self {
        Signature {
            pi1: s.pi1.into(),
            p_g: s.pg,
            k_squared: s.k2,
            divisibility: s.divisibility,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateParams {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub k: i64,
}

impl From<&ManettiCertificate> for CertificateParams {
    fn from(c: &ManettiCertificate) -> Self {
        CertificateParams {
            a: c.a,
            b: c.b,
            c: c.c,
            k: c.k,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HomeoJson {
    Yes,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NondefJson {
    Certified,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairVerdictJson {
    pub homeo: HomeoJson,
    pub nondef: NondefJson,
    pub certificate: Option<CertificateParams>,
    pub signature: Option<SignatureJson>,
}

impl From<&PairVerdict> for PairVerdictJson {
    fn from(v: &PairVerdict) -> Self {
        PairVerdictJson {
            homeo: match v.homeo {
                HomeoStatus::Yes => HomeoJson::Yes,
                HomeoStatus::Unknown => HomeoJson::Unknown,
            },
            nondef: match v.nondef {
                NondefStatus::Certified => NondefJson::Certified,
                NondefStatus::Unknown => NondefJson::Unknown,
            },
            certificate: v.certificate.as_ref().map(Into::into),
            signature: v.signature.as_ref().map(Into::into),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManettiJson {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub k: i64,
    pub satisfied: bool,
    pub violated: Vec<String>,
}

impl From<&ManettiCertificate> for ManettiJson {
    fn from(c: &ManettiCertificate) -> Self {
        ManettiJson {
            a: c.a,
            b: c.b,
            c: c.c,
            k: c.k,
            satisfied: c.satisfied,
            violated: c.violated.iter().map(|v| v.name().to_owned()).collect(),
        }
    }
}

impl TryFrom<ManettiJson> for ManettiCertificate {
    type Error = Error;

    fn try_from(j: ManettiJson) -> Result<Self, Error> {
        let violated = j
            .violated
            .iter()
            .map(|name| {
                ManettiCondition::from_name(name)
                    .ok_or_else(|| Error::Schema(format!("unknown condition {name:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ManettiCertificate {
            a: j.a,
            b: j.b,
            c: j.c,
            k: j.k,
            satisfied: j.satisfied,
            violated,
        })
    }
}

fn pair(b: BiDegree) -> [i64; 2] {
    [b.first, b.second]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeformProfileJson {
    pub f_degrees: [[i64; 2]; 3],
    pub phi_degrees: [[i64; 2]; 3],
    pub f_dims: [i64; 3],
    pub phi_dims: [i64; 3],
    pub total_params: i64,
}

impl From<&NaturalDeformationProfile> for DeformProfileJson {
    fn from(p: &NaturalDeformationProfile) -> Self {
        DeformProfileJson {
            f_degrees: p.f_degrees.map(pair),
            phi_degrees: p.phi_degrees.map(pair),
            f_dims: p.f_dims,
            phi_dims: p.phi_dims,
            total_params: p.total_params,
        }
    }
}

impl From<DeformProfileJson> for NaturalDeformationProfile {
    fn from(j: DeformProfileJson) -> Self {
        let deg = |[a, b]: [i64; 2]| BiDegree::new(a, b);
        NaturalDeformationProfile {
            f_degrees: j.f_degrees.map(deg),
            phi_degrees: j.phi_degrees.map(deg),
            f_dims: j.f_dims,
            phi_dims: j.phi_dims,
            total_params: j.total_params,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyJson {
    pub total_exponent: i64,
    pub modulus: i64,
    pub exponents: Vec<i64>,
    pub group_order: i64,
    pub action_weights: [i64; 3],
}

impl From<&SmoothingFamily> for FamilyJson {
    fn from(f: &SmoothingFamily) -> Self {
        FamilyJson {
            total_exponent: f.total_exponent,
            modulus: f.modulus,
            exponents: f.exponents.clone(),
            group_order: f.group_order,
            action_weights: f.action_weights,
        }
    }
}

impl From<FamilyJson> for SmoothingFamily {
    fn from(f: FamilyJson) -> Self {
        SmoothingFamily {
            total_exponent: f.total_exponent,
            modulus: f.modulus,
            exponents: f.exponents,
            group_order: f.group_order,
            action_weights: f.action_weights,
        }
    }
}

/// `{ class_T, d, n, a, link, equation, family }`; the class T fields are
/// `null` when the singularity is not of class T, and `link` is then the
/// lens space of the input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularityJson {
    #[serde(rename = "class_T")]
    pub class_t: bool,
    pub d: Option<i64>,
    pub n: Option<i64>,
    pub a: Option<i64>,
    pub link: [i64; 2],
    pub equation: Option<String>,
    pub family: Option<FamilyJson>,
}

impl SingularityJson {
    pub fn new(input: &CyclicQuotient, datum: Option<&ClassTDatum>) -> Self {
        match datum {
            Some(t) => {
                let family = smoothing_family(t);
                let (m, q) = link_lens_space(t);
                SingularityJson {
                    class_t: true,
                    d: Some(t.d()),
                    n: Some(t.n()),
                    a: Some(t.a()),
                    link: [m, q],
                    equation: Some(family.render_unicode()),
                    family: Some((&family).into()),
                }
            }
            None => SingularityJson {
                class_t: false,
                d: None,
                n: None,
                a: None,
                link: [input.m(), input.q()],
                equation: None,
                family: None,
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifiedPairJson {
    pub i: usize,
    pub j: usize,
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub k: i64,
}

/// One line of `search --format json`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureGroupJson {
    pub signature: SignatureJson,
    pub homeomorphism_claim: bool,
    pub members: Vec<String>,
    pub certified_pairs: Vec<CertifiedPairJson>,
}

impl From<&SignatureGroup> for SignatureGroupJson {
    fn from(g: &SignatureGroup) -> Self {
        SignatureGroupJson {
            signature: (&g.signature).into(),
            homeomorphism_claim: g.homeomorphism_claim(),
            members: g.members.iter().map(ToString::to_string).collect(),
            certified_pairs: g
                .certified_pairs
                .iter()
                .map(|(i, j, c)| CertifiedPairJson {
                    i: *i,
                    j: *j,
                    a: c.a,
                    b: c.b,
                    c: c.c,
                    k: c.k,
                })
                .collect(),
        }
    }
}

impl TryFrom<SignatureGroupJson> for SignatureGroup {
    type Error = Error;

    fn try_from(j: SignatureGroupJson) -> Result<Self, Error> {
        let members = j
            .members
            .iter()
            .map(|s| s.parse().map_err(Error::Cover))
            .collect::<Result<Vec<_>, _>>()?;
        let certified_pairs = j
            .certified_pairs
            .iter()
            .map(|p| (p.i, p.j, bicover_core::manetti_check(p.a, p.b, p.c, p.k)))
            .collect();
        Ok(SignatureGroup {
            signature: j.signature.into(),
            members,
            certified_pairs,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryCounts {
    pub enumerated: u64,
    pub grouped: u64,
    pub skipped: u64,
    pub not_general_type: u64,
    pub not_simply_connected: u64,
    pub ambiguous_divisibility: u64,
    pub genus_undetermined: u64,
    pub groups: u64,
    pub certified_pairs: u64,
}

/// Footer line of `search --format json`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryJson {
    pub summary: SummaryCounts,
}

impl SummaryJson {
    pub fn new(report: &SearchReport) -> Self {
        let s: &SkipSummary = &report.summary;
        SummaryJson {
            summary: SummaryCounts {
                enumerated: s.enumerated,
                grouped: s.grouped,
                skipped: s.skipped(),
                not_general_type: s.not_general_type,
                not_simply_connected: s.not_simply_connected,
                ambiguous_divisibility: s.ambiguous_divisibility,
                genus_undetermined: s.genus_undetermined,
                groups: report.groups.len() as u64,
                certified_pairs: report.certified_pair_count() as u64,
            },
        }
    }
}

/// Structured error printed on failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorJson {
    pub error: String,
    pub message: String,
}

#[cfg(test)]
mod tests {
    use super::*;
    use bicover_core::CoverType;

    #[test]
    fn invariant_record_round_trip() {
        let t: CoverType = "((5,2),(3,2),(1,2))".parse().unwrap();
        let rec = InvariantRecord::compute(&t).unwrap();
        let text = serde_json::to_string(&InvariantRecordJson::from(&rec)).unwrap();
        assert_eq!(
            text,
            r#"{"n":9,"m":6,"chi":7,"k2":20,"q":0,"pg":6,"K_bidegree":[[5,2],[1,1]],"divisibility":{"exact":1},"pi1":"simply_connected","general_type":true}"#
        );
        let back: InvariantRecordJson = serde_json::from_str(&text).unwrap();
        assert_eq!(InvariantRecord::try_from(back).unwrap(), rec);
    }

    #[test]
    fn bad_half_integer_rejected() {
        let j = r#"{"n":9,"m":6,"chi":7,"k2":20,"q":0,"pg":6,"K_bidegree":[[5,3],[1,1]],"divisibility":null,"pi1":"Z2","general_type":true}"#;
        let back: InvariantRecordJson = serde_json::from_str(j).unwrap();
        assert!(InvariantRecord::try_from(back).is_err());
    }

    #[test]
    fn verdict_shape() {
        let a: CoverType = "((28,8),(12,8))".parse().unwrap();
        let b: CoverType = "((30,8),(10,8))".parse().unwrap();
        let v = bicover_core::pair_verdict(&a, &b).unwrap();
        let text = serde_json::to_string(&PairVerdictJson::from(&v)).unwrap();
        assert_eq!(
            text,
            r#"{"homeo":"yes","nondef":"certified","certificate":{"a":14,"b":4,"c":6,"k":1},"signature":{"pi1":"simply_connected","pg":187,"k2":864,"divisibility":6}}"#
        );
    }
}
