//! Numerical invariants of a bidouble cover and the homeomorphism signature.
//!
//! With `n = Σ n_j`, `m = Σ m_j`:
//!
//! ```text
//! χ  = ((n-4)(m-4) + Σ n_j m_j) / 4
//! K² = 2 (n-4)(m-4)
//! K  = pullback of the Q-bidegree ((n-4)/2, (m-4)/2)
//! ```
//!
//! Two simply connected minimal surfaces with equal `p_g ≥ 1`, `K²` and
//! divisibility of `K` are homeomorphic through a map carrying canonical
//! class to canonical class, so [`Signature`] is exactly that tuple.

use alloc::vec::Vec;
use core::fmt;

use crate::arith::{gcd, isqrt};
use crate::covers::{BiDegree, CoverClass, CoverType};

/// A half-integer `twice / 2`, kept exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    /// `twice / 2`.
    pub const fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    /// Twice the value.
    pub const fn twice(self) -> i64 {
        self.twice
    }

    /// Reduced `(numerator, denominator)` with denominator 1 or 2.
    pub const fn as_fraction(self) -> (i64, i64) {
        if self.twice % 2 == 0 {
            (self.twice / 2, 1)
        } else {
            (self.twice, 2)
        }
    }

    /// Inverse of [`as_fraction`](Self::as_fraction); `None` unless the
    /// denominator is 1 or 2.
    pub const fn from_fraction(num: i64, den: i64) -> Option<Self> {
        match den {
            1 => Some(HalfInt { twice: 2 * num }),
            2 => Some(HalfInt { twice: num }),
            _ => None,
        }
    }

    /// `true` when the value is an integer.
    pub const fn is_integral(self) -> bool {
        self.twice % 2 == 0
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_fraction() {
            (n, 1) => write!(f, "{n}"),
            (n, d) => write!(f, "{n}/{d}"),
        }
    }
}

/// Fundamental group of the cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pi1 {
    /// Trivial.
    SimplyConnected,
    /// `Z/2`.
    Z2,
}

impl fmt::Display for Pi1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pi1::SimplyConnected => "simply connected",
            Pi1::Z2 => "Z/2",
        })
    }
}

/// Divisibility index of the canonical class.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DivisibilityVerdict {
    /// The index is known exactly.
    Exact(i64),
    /// The index lies in this ascending set (never `{1}` alone).
    CandidateSet(Vec<i64>),
}

impl DivisibilityVerdict {
    /// The exact index, if determined.
    pub fn exact(&self) -> Option<i64> {
        match self {
            DivisibilityVerdict::Exact(r) => Some(*r),
            DivisibilityVerdict::CandidateSet(_) => None,
        }
    }
}

impl fmt::Display for DivisibilityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DivisibilityVerdict::Exact(r) => write!(f, "{r}"),
            DivisibilityVerdict::CandidateSet(rs) => {
                f.write_str("one of {")?;
                for (i, r) in rs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{r}")?;
                }
                f.write_str("}")
            }
        }
    }
}

/// Why a homeomorphism signature could not be formed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Undetermined {
    /// `n ≤ 4` or `m ≤ 4`.
    NotGeneralType,
    /// Divisibility is only known up to a candidate set.
    DivisibilityAmbiguous,
    /// `q = 0` could not be established, so `p_g` is unknown.
    PgRefused,
    /// `p_g = 0`.
    PgZero,
    /// `π₁ = Z/2`; the criterion needs simple connectivity.
    NotSimplyConnected,
}

impl fmt::Display for Undetermined {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Undetermined::NotGeneralType => "not of general type",
            Undetermined::DivisibilityAmbiguous => "divisibility only known up to a candidate set",
            Undetermined::PgRefused => "geometric genus undetermined",
            Undetermined::PgZero => "geometric genus is zero",
            Undetermined::NotSimplyConnected => "fundamental group is Z/2",
        })
    }
}

/// Errors from invariant computations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvariantError {
    /// `(n-4)(m-4) + Σ n_j m_j` is not divisible by 4. Only reachable if an
    /// invalid type slipped past validation.
    NonIntegralChi {
        /// The offending numerator.
        numerator: i64,
    },
    /// Some `L_i` has a coordinate `≤ 0`, so `q = 0` is not established.
    IrregularityUndetermined {
        /// Zero-based index of the first such bundle.
        bundle: usize,
    },
    /// Divisibility requested for a type that is not of general type.
    NotGeneralType,
    /// No homeomorphism signature.
    SignatureUndetermined(Undetermined),
}

impl InvariantError {
    /// `true` for errors that indicate a broken internal invariant rather
    /// than an input outside the supported range.
    pub fn is_internal(&self) -> bool {
        matches!(self, InvariantError::NonIntegralChi { .. })
    }

    /// Stable machine-readable name.
    pub fn kind(&self) -> &'static str {
        match self {
            InvariantError::NonIntegralChi { .. } => "NonIntegralChi",
            InvariantError::IrregularityUndetermined { .. } => "IrregularityUndetermined",
            InvariantError::NotGeneralType => "NotGeneralType",
            InvariantError::SignatureUndetermined(_) => "SignatureUndetermined",
        }
    }
}

impl fmt::Display for InvariantError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantError::NonIntegralChi { numerator } => {
                write!(
                    f,
                    "4 does not divide {numerator}; chi would not be an integer"
                )
            }
            InvariantError::IrregularityUndetermined { bundle } => write!(
                f,
                "L{} has a coordinate <= 0; irregularity not determined",
                bundle + 1
            ),
            InvariantError::NotGeneralType => f.write_str("cover is not of general type"),
            InvariantError::SignatureUndetermined(why) => {
                write!(f, "homeomorphism signature undetermined: {why}")
            }
        }
    }
}

impl core::error::Error for InvariantError {}

/// Holomorphic Euler characteristic `χ`.
pub fn chi(t: &CoverType) -> Result<i64, InvariantError> {
    let numerator =
        (t.n() - 4) * (t.m() - 4) + t.branches().iter().map(|b| b.first * b.second).sum::<i64>();
    if numerator % 4 != 0 {
        return Err(InvariantError::NonIntegralChi { numerator });
    }
    Ok(numerator / 4)
}

/// Self-intersection of the canonical class, `2(n-4)(m-4)`.
pub fn k_squared(t: &CoverType) -> i64 {
    2 * (t.n() - 4) * (t.m() - 4)
}

/// `true` iff `n ≥ 5` and `m ≥ 5`, i.e. the canonical Q-bidegree is positive.
pub fn is_general_type(t: &CoverType) -> bool {
    t.n() >= 5 && t.m() >= 5
}

/// Canonical Q-bidegree `((n-4)/2, (m-4)/2)`.
pub fn canonical_bidegree(t: &CoverType) -> (HalfInt, HalfInt) {
    (
        HalfInt::from_twice(t.n() - 4),
        HalfInt::from_twice(t.m() - 4),
    )
}

/// Irregularity and geometric genus `(q, p_g)`.
///
/// `q` vanishes when every `L_i` has both coordinates `≥ 1` (the first
/// cohomology of `O(-L_i)` on the quadric is then zero by Künneth), and then
/// `p_g = χ - 1`. Otherwise the pair is refused.
pub fn irregularity_and_pg(t: &CoverType) -> Result<(i64, i64), InvariantError> {
    // never fires for validated types: D_j + D_k >= (2,2)
    if let Some(bundle) = first_non_positive_bundle(&t.line_bundle_degrees()) {
        return Err(InvariantError::IrregularityUndetermined { bundle });
    }
    Ok((0, chi(t)? - 1))
}

fn first_non_positive_bundle(bundles: &[BiDegree; 3]) -> Option<usize> {
    bundles.iter().position(|l| l.first < 1 || l.second < 1)
}

/// Divisibility index of `K`.
///
/// For all-even types `K` is the pullback of the integral class
/// `(n/2 - 2, m/2 - 2)` and the pullback of `H²(P¹×P¹)` is primitive, so the
/// index is the gcd of those two numbers. Otherwise only the constraints
/// `r² | K²` and `r even ⇒ 8 | K²` are used.
pub fn divisibility(t: &CoverType) -> Result<DivisibilityVerdict, InvariantError> {
    if !is_general_type(t) {
        return Err(InvariantError::NotGeneralType);
    }
    if t.is_all_even() {
        return Ok(DivisibilityVerdict::Exact(gcd(
            t.n() / 2 - 2,
            t.m() / 2 - 2,
        )));
    }
    let rs = divisibility_candidates(k_squared(t));
    Ok(if rs == [1] {
        DivisibilityVerdict::Exact(1)
    } else {
        DivisibilityVerdict::CandidateSet(rs)
    })
}

/// All `r ≥ 1` with `r² | k2` and `(r even ⇒ 8 | k2)`, ascending. `k2 > 0`.
pub fn divisibility_candidates(k2: i64) -> Vec<i64> {
    debug_assert!(k2 > 0);
    let top = isqrt(k2.unsigned_abs()) as i64;
    (1..=top)
        .filter(|r| k2 % (r * r) == 0)
        .filter(|r| r % 2 == 1 || k2 % 8 == 0)
        .collect()
}

/// `Z/2` exactly for even non-simple covers.
pub fn pi1_class(t: &CoverType) -> Pi1 {
    match t.class() {
        CoverClass::EvenNonSimple => Pi1::Z2,
        CoverClass::Simple | CoverClass::NonSimple => Pi1::SimplyConnected,
    }
}

/// Homeomorphism signature `(π₁, p_g, K², divisibility)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Signature {
    /// Fundamental group.
    pub pi1: Pi1,
    /// Geometric genus.
    pub p_g: i64,
    /// `K²`.
    pub k_squared: i64,
    /// Exact divisibility index of `K`.
    pub divisibility: i64,
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(pi1={}, pg={}, K2={}, div={})",
            match self.pi1 {
                Pi1::SimplyConnected => "1",
                Pi1::Z2 => "Z2",
            },
            self.p_g,
            self.k_squared,
            self.divisibility
        )
    }
}

/// Signature of a simply connected general type cover with `p_g ≥ 1` and
/// exactly known divisibility.
pub fn homeo_signature(t: &CoverType) -> Result<Signature, InvariantError> {
    let sig = numeric_signature(t)?;
    if sig.pi1 == Pi1::Z2 {
        return Err(InvariantError::SignatureUndetermined(
            Undetermined::NotSimplyConnected,
        ));
    }
    Ok(sig)
}

/// Same tuple as [`homeo_signature`] but without the simple connectivity
/// requirement; used to bucket `Z/2` covers, never to claim homeomorphism.
pub fn numeric_signature(t: &CoverType) -> Result<Signature, InvariantError> {
    use InvariantError::SignatureUndetermined as U;
    if !is_general_type(t) {
        return Err(U(Undetermined::NotGeneralType));
    }
    let p_g = match irregularity_and_pg(t) {
        Ok((_, p_g)) => p_g,
        Err(InvariantError::IrregularityUndetermined { .. }) => {
            return Err(U(Undetermined::PgRefused))
        }
        Err(e) => return Err(e),
    };
    if p_g < 1 {
        return Err(U(Undetermined::PgZero));
    }
    let divisibility = divisibility(t)?
        .exact()
        .ok_or(U(Undetermined::DivisibilityAmbiguous))?;
    Ok(Signature {
        pi1: pi1_class(t),
        p_g,
        k_squared: k_squared(t),
        divisibility,
    })
}

/// All invariants of one cover.
///
/// `q`, `p_g` and `divisibility` are `None` when refused.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantRecord {
    /// `Σ n_j`.
    pub n: i64,
    /// `Σ m_j`.
    pub m: i64,
    /// `χ(O_S)`.
    pub chi: i64,
    /// `K²`.
    pub k_squared: i64,
    /// Irregularity.
    pub q: Option<i64>,
    /// Geometric genus.
    pub p_g: Option<i64>,
    /// `((n-4)/2, (m-4)/2)`.
    pub canonical_bidegree: (HalfInt, HalfInt),
    /// Divisibility of `K` (general type only).
    pub divisibility: Option<DivisibilityVerdict>,
    /// Fundamental group.
    pub pi1: Pi1,
    /// `n ≥ 5` and `m ≥ 5`.
    pub general_type: bool,
}

impl InvariantRecord {
    /// Computes every invariant; fails only on internal inconsistency.
    pub fn compute(t: &CoverType) -> Result<Self, InvariantError> {
        let chi = chi(t)?;
        let (q, p_g) = match irregularity_and_pg(t) {
            Ok((q, p_g)) => (Some(q), Some(p_g)),
            Err(InvariantError::IrregularityUndetermined { .. }) => (None, None),
            Err(e) => return Err(e),
        };
        let general_type = is_general_type(t);
        Ok(InvariantRecord {
            n: t.n(),
            m: t.m(),
            chi,
            k_squared: k_squared(t),
            q,
            p_g,
            canonical_bidegree: canonical_bidegree(t),
            divisibility: if general_type {
                Some(divisibility(t)?)
            } else {
                None
            },
            pi1: pi1_class(t),
            general_type,
        })
    }

    /// Bogomolov–Miyaoka–Yau `K² ≤ 9χ`. A sanity check for general type
    /// outputs; a violation is a warning, not an error.
    pub fn satisfies_bmy(&self) -> bool {
        !self.general_type || self.k_squared <= 9 * self.chi
    }
}
