//! Natural deformations and the non-deformation-equivalence certificate.
//!
//! Natural deformations of a cover of type `(D₁, D₂, D₃)` perturb the
//! equations by sections `f_j` of bidegree `D_j` and `φ_j` of bidegree
//! `D_j - L_j = (n_j - (n_i+n_k)/2, m_j - (m_i+m_k)/2)`.
//!
//! Simple covers of types `((2a,2b),(2c,2b))` and `((2a+2k,2b),(2c-2k,2b))`
//! are not deformation equivalent when `a, b, c` are even, at least 4, and
//! `a ≥ 2c+1`, `a ≥ b+2`, `c ≥ b+2`, `c ≥ k+4` (with `k ≥ 1`).

use alloc::vec::Vec;
use core::fmt;

use crate::covers::{BiDegree, CoverError, CoverType};
use crate::invariants::{homeo_signature, InvariantError, Signature};

/// Degrees and section counts of the natural deformation parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaturalDeformationProfile {
    /// Bidegrees of the `f_j` (equal to the branches).
    pub f_degrees: [BiDegree; 3],
    /// Bidegrees of the `φ_j`; entries may be negative.
    pub phi_degrees: [BiDegree; 3],
    /// `h⁰` of each `f_j` degree.
    pub f_dims: [i64; 3],
    /// `h⁰` of each `φ_j` degree.
    pub phi_dims: [i64; 3],
    /// Sum of all six section counts. No quotient by automorphisms.
    pub total_params: i64,
}

/// Computes the natural deformation profile of a type.
pub fn natural_deformation_profile(t: &CoverType) -> NaturalDeformationProfile {
    let f_degrees = t.branches();
    let bundles = t.line_bundle_degrees();
    let phi_degrees: [BiDegree; 3] = core::array::from_fn(|j| {
        BiDegree::new(
            f_degrees[j].first - bundles[j].first,
            f_degrees[j].second - bundles[j].second,
        )
    });
    let f_dims = f_degrees.map(BiDegree::section_count);
    let phi_dims = phi_degrees.map(BiDegree::section_count);
    let total_params = f_dims.iter().chain(&phi_dims).sum();
    NaturalDeformationProfile {
        f_degrees,
        phi_degrees,
        f_dims,
        phi_dims,
        total_params,
    }
}

/// One hypothesis of the certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ManettiCondition {
    /// `a` even.
    AEven,
    /// `b` even.
    BEven,
    /// `c` even.
    CEven,
    /// `a ≥ 4`.
    AAtLeast4,
    /// `b ≥ 4`.
    BAtLeast4,
    /// `c ≥ 4`.
    CAtLeast4,
    /// `a ≥ 2c + 1`.
    AAtLeastTwoCPlus1,
    /// `a ≥ b + 2`.
    AAtLeastBPlus2,
    /// `c ≥ b + 2`.
    CAtLeastBPlus2,
    /// `c ≥ k + 4`.
    CAtLeastKPlus4,
    /// `k ≥ 1`.
    KPositive,
}

impl ManettiCondition {
    /// All conditions in checking order.
    pub const ALL: [ManettiCondition; 11] = [
        ManettiCondition::AEven,
        ManettiCondition::BEven,
        ManettiCondition::CEven,
        ManettiCondition::AAtLeast4,
        ManettiCondition::BAtLeast4,
        ManettiCondition::CAtLeast4,
        ManettiCondition::AAtLeastTwoCPlus1,
        ManettiCondition::AAtLeastBPlus2,
        ManettiCondition::CAtLeastBPlus2,
        ManettiCondition::CAtLeastKPlus4,
        ManettiCondition::KPositive,
    ];

    /// Human-readable name, e.g. `"c >= k+4"`.
    pub fn name(self) -> &'static str {
        match self {
            ManettiCondition::AEven => "a even",
            ManettiCondition::BEven => "b even",
            ManettiCondition::CEven => "c even",
            ManettiCondition::AAtLeast4 => "a >= 4",
            ManettiCondition::BAtLeast4 => "b >= 4",
            ManettiCondition::CAtLeast4 => "c >= 4",
            ManettiCondition::AAtLeastTwoCPlus1 => "a >= 2c+1",
            ManettiCondition::AAtLeastBPlus2 => "a >= b+2",
            ManettiCondition::CAtLeastBPlus2 => "c >= b+2",
            ManettiCondition::CAtLeastKPlus4 => "c >= k+4",
            ManettiCondition::KPositive => "k >= 1",
        }
    }

    /// Looks a condition up by [`name`](Self::name).
    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == name)
    }

    fn holds(self, a: i64, b: i64, c: i64, k: i64) -> bool {
        match self {
            ManettiCondition::AEven => a % 2 == 0,
            ManettiCondition::BEven => b % 2 == 0,
            ManettiCondition::CEven => c % 2 == 0,
            ManettiCondition::AAtLeast4 => a >= 4,
            ManettiCondition::BAtLeast4 => b >= 4,
            ManettiCondition::CAtLeast4 => c >= 4,
            ManettiCondition::AAtLeastTwoCPlus1 => a > 2 * c,
            ManettiCondition::AAtLeastBPlus2 => a >= b + 2,
            ManettiCondition::CAtLeastBPlus2 => c >= b + 2,
            ManettiCondition::CAtLeastKPlus4 => c >= k + 4,
            ManettiCondition::KPositive => k >= 1,
        }
    }
}

impl fmt::Display for ManettiCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of checking the hypotheses for one `(a, b, c, k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ManettiCertificate {
    /// Half the first degree of the first branch of the unshifted cover.
    pub a: i64,
    /// Half the common second degree.
    pub b: i64,
    /// Half the first degree of the second branch of the unshifted cover.
    pub c: i64,
    /// Shift.
    pub k: i64,
    /// All hypotheses hold.
    pub satisfied: bool,
    /// Failed hypotheses, in [`ManettiCondition::ALL`] order.
    pub violated: Vec<ManettiCondition>,
}

impl ManettiCertificate {
    /// The two simple types `((2a,2b),(2c,2b))` and
    /// `((2a+2k,2b),(2c-2k,2b))` the certificate talks about.
    pub fn types(&self) -> Result<(CoverType, CoverType), CoverError> {
        let (a, b, c, k) = (self.a, self.b, self.c, self.k);
        Ok((
            CoverType::simple((2 * a, 2 * b), (2 * c, 2 * b))?,
            CoverType::simple((2 * a + 2 * k, 2 * b), (2 * c - 2 * k, 2 * b))?,
        ))
    }
}

/// Checks the hypotheses for `(a, b, c, k)`. Never fails; unmet hypotheses
/// are listed in the certificate.
pub fn manetti_check(a: i64, b: i64, c: i64, k: i64) -> ManettiCertificate {
    let violated: Vec<_> = ManettiCondition::ALL
        .into_iter()
        .filter(|cond| !cond.holds(a, b, c, k))
        .collect();
    ManettiCertificate {
        a,
        b,
        c,
        k,
        satisfied: violated.is_empty(),
        violated,
    }
}

/// Homeomorphism part of a [`PairVerdict`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HomeoStatus {
    /// Both signatures are determined and equal.
    Yes,
    /// Otherwise.
    Unknown,
}

/// Non-deformation-equivalence part of a [`PairVerdict`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NondefStatus {
    /// A satisfied certificate matches the pair.
    Certified,
    /// Otherwise.
    Unknown,
}

/// Comparison of two covers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairVerdict {
    /// Homeomorphic with matching canonical classes?
    pub homeo: HomeoStatus,
    /// Certified not deformation equivalent?
    pub nondef: NondefStatus,
    /// The lexicographically smallest satisfied certificate, if any.
    pub certificate: Option<ManettiCertificate>,
    /// Common signature when `homeo` is `Yes`.
    pub signature: Option<Signature>,
}

/// Compares two types.
///
/// Errors only on internal inconsistencies; undetermined signatures and
/// pattern mismatches give `Unknown`.
pub fn pair_verdict(t1: &CoverType, t2: &CoverType) -> Result<PairVerdict, InvariantError> {
    let s1 = determined(homeo_signature(t1))?;
    let s2 = determined(homeo_signature(t2))?;
    let signature = match (s1, s2) {
        (Some(a), Some(b)) if a == b => Some(a),
        _ => None,
    };
    let certificate = find_certificate(t1, t2);
    Ok(PairVerdict {
        homeo: if signature.is_some() {
            HomeoStatus::Yes
        } else {
            HomeoStatus::Unknown
        },
        nondef: if certificate.is_some() {
            NondefStatus::Certified
        } else {
            NondefStatus::Unknown
        },
        certificate,
        signature,
    })
}

fn determined(r: Result<Signature, InvariantError>) -> Result<Option<Signature>, InvariantError> {
    match r {
        Ok(s) => Ok(Some(s)),
        Err(e) if e.is_internal() => Err(e),
        Err(_) => Ok(None),
    }
}

/// Smallest satisfied certificate `(a,b,c,k)` such that one of the types is
/// `((2a,2b),(2c,2b))` and the other `((2a+2k,2b),(2c-2k,2b))`, each up to
/// symmetry.
pub fn find_certificate(t1: &CoverType, t2: &CoverType) -> Option<ManettiCertificate> {
    let mut best: Option<ManettiCertificate> = None;
    for (unshifted, shifted) in [(t1, t2), (t2, t1)] {
        for (xa, xc, y) in simple_roles(unshifted) {
            for (xa2, xc2, y2) in simple_roles(shifted) {
                if y != y2 || [xa, xc, y, xa2, xc2].iter().any(|v| v % 2 != 0) {
                    continue;
                }
                let k2 = xa2 - xa;
                if xc2 != xc - k2 {
                    continue;
                }
                let cert = manetti_check(xa / 2, y / 2, xc / 2, k2 / 2);
                if !cert.satisfied {
                    continue;
                }
                let key = |c: &ManettiCertificate| (c.a, c.b, c.c, c.k);
                if best.as_ref().is_none_or(|b| key(&cert) < key(b)) {
                    best = Some(cert);
                }
            }
        }
    }
    best
}

/// For a simple type, every way to read it as `((xa, y), (xc, y))` with a
/// common second coordinate, over both orientations and both branch orders.
fn simple_roles(t: &CoverType) -> Vec<(i64, i64, i64)> {
    let mut out = Vec::new();
    let Some((p, q)) = t.nontrivial_pair() else {
        return out;
    };
    for (p, q) in [(p, q), (p.swapped(), q.swapped())] {
        if p.second == q.second {
            out.push((p.first, q.first, p.second));
            out.push((q.first, p.first, p.second));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covers::Symmetry;
    use alloc::vec;
    use proptest::prelude::*;

    fn ty(p: [(i64, i64); 3]) -> CoverType {
        CoverType::from_pairs(p).unwrap()
    }

    #[test]
    fn profile_of_mixed_branch_triple() {
        let p = natural_deformation_profile(&ty([(5, 2), (3, 2), (1, 2)]));
        // (1,2) - ((5,2)+(3,2))/2 = (1-4, 0)
        assert_eq!(
            p.phi_degrees,
            [
                BiDegree::new(3, 0),
                BiDegree::new(0, 0),
                BiDegree::new(-3, 0)
            ]
        );
        assert_eq!(p.f_dims, [18, 12, 6]);
        assert_eq!(p.phi_dims, [4, 1, 0]);
        assert_eq!(p.total_params, 41);
    }

    #[test]
    fn profile_of_equal_branch_triple() {
        let p = natural_deformation_profile(&ty([(3, 2), (3, 2), (3, 2)]));
        assert_eq!(p.phi_degrees, [BiDegree::TRIVIAL; 3]);
        assert_eq!(p.total_params, 39);
    }

    #[test]
    fn manetti_known_cases() {
        let ok = manetti_check(14, 4, 6, 1);
        assert!(ok.satisfied);
        assert!(ok.violated.is_empty());
        assert_eq!(
            manetti_check(14, 4, 6, 3).violated,
            vec![ManettiCondition::CAtLeastKPlus4]
        );
        assert_eq!(
            manetti_check(13, 4, 6, 1).violated,
            vec![ManettiCondition::AEven]
        );
        assert_eq!(
            manetti_check(14, 4, 6, 0).violated,
            vec![ManettiCondition::KPositive]
        );
        let (s, s2) = ok.types().unwrap();
        assert_eq!(s, ty([(28, 8), (12, 8), (0, 0)]));
        assert_eq!(s2, ty([(30, 8), (10, 8), (0, 0)]));
    }

    #[test]
    fn condition_names_round_trip() {
        for c in ManettiCondition::ALL {
            assert_eq!(ManettiCondition::from_name(c.name()), Some(c));
        }
    }

    #[test]
    fn verdicts() {
        let v = pair_verdict(
            &ty([(28, 8), (12, 8), (0, 0)]),
            &ty([(30, 8), (10, 8), (0, 0)]),
        )
        .unwrap();
        assert_eq!(v.homeo, HomeoStatus::Yes);
        assert_eq!(v.nondef, NondefStatus::Certified);
        let c = v.certificate.unwrap();
        assert_eq!((c.a, c.b, c.c, c.k), (14, 4, 6, 1));

        let v = pair_verdict(&ty([(5, 2), (3, 2), (1, 2)]), &ty([(3, 2), (3, 2), (3, 2)])).unwrap();
        assert_eq!(v.homeo, HomeoStatus::Yes);
        assert_eq!(v.nondef, NondefStatus::Unknown);

        let t = ty([(28, 8), (12, 8), (0, 0)]);
        let v = pair_verdict(&t, &t).unwrap();
        assert_eq!(
            (v.homeo, v.nondef),
            (HomeoStatus::Yes, NondefStatus::Unknown)
        );

        let v = pair_verdict(&ty([(4, 4), (4, 4), (0, 0)]), &ty([(5, 2), (3, 2), (1, 2)])).unwrap();
        assert_eq!((v.homeo, v.signature), (HomeoStatus::Unknown, None));
    }

    #[test]
    fn certificate_found_through_symmetries() {
        let s = ty([(28, 8), (12, 8), (0, 0)]);
        let s2 = ty([(30, 8), (10, 8), (0, 0)]);
        for g in Symmetry::all() {
            for h in Symmetry::all() {
                let v = pair_verdict(&s.apply(g), &s2.apply(h)).unwrap();
                assert_eq!(v.nondef, NondefStatus::Certified, "{g:?} {h:?}");
            }
        }
    }

    fn simple_params() -> impl Strategy<Value = (i64, i64, i64, i64)> {
        (1i64..25, 1i64..25, 1i64..25, 1i64..25)
    }

    proptest! {
        #[test]
        fn simple_phi_degrees_specialize((a, b, c, d) in simple_params()) {
            let t = CoverType::simple((2 * a, 2 * b), (2 * c, 2 * d)).unwrap();
            let p = natural_deformation_profile(&t);
            prop_assert_eq!(p.phi_degrees[0], BiDegree::new(2 * a - c, 2 * b - d));
            prop_assert_eq!(p.phi_degrees[1], BiDegree::new(2 * c - a, 2 * d - b));
        }

        #[test]
        fn verdict_is_symmetric(a in 4i64..20, c in 4i64..12, b in 2i64..6, k in -3i64..4) {
            let (Ok(t1), Ok(t2)) = (
                CoverType::simple((2 * a, 2 * b), (2 * c, 2 * b)),
                CoverType::simple((2 * a + 2 * k, 2 * b), (2 * c - 2 * k, 2 * b)),
            ) else { return Ok(()); };
            prop_assert_eq!(pair_verdict(&t1, &t2).unwrap(), pair_verdict(&t2, &t1).unwrap());
        }

        #[test]
        fn certificate_implies_equal_signatures(a in 4i64..40, b in 4i64..10, c in 4i64..20, k in 1i64..10) {
            let cert = manetti_check(a, b, c, k);
            if cert.satisfied {
                let (s, s2) = cert.types().unwrap();
                prop_assert_eq!(homeo_signature(&s).unwrap(), homeo_signature(&s2).unwrap());
                let v = pair_verdict(&s, &s2).unwrap();
                prop_assert_eq!(v.homeo, HomeoStatus::Yes);
                prop_assert_eq!(v.nondef, NondefStatus::Certified);
            }
        }
    }
}
