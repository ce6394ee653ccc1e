//! Branch data of bidouble covers of the quadric.
//!
//! A bidouble cover `S → P¹ × P¹` is determined (numerically) by the
//! bidegrees of its three branch divisors `D₁, D₂, D₃`. A branch equal to
//! `(0,0)` is trivial. Types are only meaningful up to permuting the branches
//! and exchanging the two rulings; [`CoverType::canonicalize`] picks one
//! representative per orbit.

use core::fmt;
use core::str::FromStr;

/// Bidegree `(first, second)` of a curve or line bundle on `P¹ × P¹`.
///
/// Branch divisors have nonnegative entries. Negative entries only occur as
/// formal degrees of deformation parameter spaces, whose section space is
/// then empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BiDegree {
    /// Degree in the first ruling.
    pub first: i64,
    /// Degree in the second ruling.
    pub second: i64,
}

impl BiDegree {
    /// The trivial bidegree `(0,0)`.
    pub const TRIVIAL: BiDegree = BiDegree::new(0, 0);

    /// Creates a bidegree.
    pub const fn new(first: i64, second: i64) -> Self {
        BiDegree { first, second }
    }

    /// Exchanges the two rulings.
    pub const fn swapped(self) -> Self {
        BiDegree::new(self.second, self.first)
    }

    /// `true` for the trivial divisor `(0,0)`.
    pub const fn is_trivial(self) -> bool {
        self.first == 0 && self.second == 0
    }

    /// Dimension of `H⁰(O(p,q))`: `(p+1)(q+1)` when both entries are
    /// nonnegative, otherwise `0`.
    pub const fn section_count(self) -> i64 {
        if self.first >= 0 && self.second >= 0 {
            (self.first + 1) * (self.second + 1)
        } else {
            0
        }
    }
}

impl From<(i64, i64)> for BiDegree {
    fn from((first, second): (i64, i64)) -> Self {
        BiDegree::new(first, second)
    }
}

impl fmt::Display for BiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.first, self.second)
    }
}

/// Which coordinate of the branch bidegrees an error refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Coordinate {
    /// The `n_j` (first ruling).
    First,
    /// The `m_j` (second ruling).
    Second,
}

impl fmt::Display for Coordinate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Coordinate::First => "first",
            Coordinate::Second => "second",
        })
    }
}

/// Rejection of raw branch data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverError {
    /// The given coordinates of the three branches do not share one parity.
    ParityViolation {
        /// Offending coordinate.
        coordinate: Coordinate,
        /// The three values.
        values: [i64; 3],
    },
    /// Two or three branches are `(0,0)`.
    TooManyTrivialBranches {
        /// Number of trivial branches found.
        trivial: usize,
    },
    /// A nontrivial branch has a coordinate `< 1`.
    BranchBelowMinimum {
        /// Zero-based branch index.
        index: usize,
        /// The branch.
        branch: BiDegree,
    },
    /// Textual form could not be parsed.
    Syntax {
        /// Byte offset into the input.
        position: usize,
        /// What was expected there.
        expected: &'static str,
    },
}

impl CoverError {
    /// Stable machine-readable name of the violated invariant.
    pub fn kind(&self) -> &'static str {
        match self {
            CoverError::ParityViolation { .. } => "ParityViolation",
            CoverError::TooManyTrivialBranches { .. } => "TooManyTrivialBranches",
            CoverError::BranchBelowMinimum { .. } => "BranchBelowMinimum",
            CoverError::Syntax { .. } => "Syntax",
        }
    }
}

impl fmt::Display for CoverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverError::ParityViolation { coordinate, values } => write!(
                f,
                "{coordinate} coordinates {}, {}, {} do not share one parity",
                values[0], values[1], values[2]
            ),
            CoverError::TooManyTrivialBranches { trivial } => {
                write!(f, "{trivial} trivial branches; at most one is allowed")
            }
            CoverError::BranchBelowMinimum { index, branch } => write!(
                f,
                "branch D{} = {branch} is nontrivial but has a coordinate below 1",
                index + 1
            ),
            CoverError::Syntax { position, expected } => {
                write!(f, "syntax error at byte {position}: expected {expected}")
            }
        }
    }
}

impl core::error::Error for CoverError {}

/// Structural class of a valid type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoverClass {
    /// Exactly one trivial branch.
    Simple,
    /// No trivial branch, some odd coordinate.
    NonSimple,
    /// No trivial branch and all six coordinates even.
    EvenNonSimple,
}

impl fmt::Display for CoverClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoverClass::Simple => "simple",
            CoverClass::NonSimple => "non-simple",
            CoverClass::EvenNonSimple => "even non-simple",
        })
    }
}

/// A validated triple of branch bidegrees.
///
/// Invariants: at most one branch is trivial, every nontrivial branch has
/// both coordinates `≥ 1`, and the first (resp. second) coordinates share one
/// parity.
///
/// The example pair `((5,2),(3,2),(1,2))`, `((3,2),(3,2),(3,2))` is sometimes
/// described as "simple"; structurally both have three nontrivial branches,
/// and this type classifies them as [`CoverClass::NonSimple`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoverType {
    branches: [BiDegree; 3],
}

impl CoverType {
    /// Validates arbitrary raw branch data.
    pub fn validate(raw: [BiDegree; 3]) -> Result<Self, CoverError> {
        let trivial = raw.iter().filter(|b| b.is_trivial()).count();
        if trivial > 1 {
            return Err(CoverError::TooManyTrivialBranches { trivial });
        }
        if let Some((index, branch)) = raw
            .iter()
            .enumerate()
            .find(|(_, b)| !b.is_trivial() && (b.first < 1 || b.second < 1))
        {
            return Err(CoverError::BranchBelowMinimum {
                index,
                branch: *branch,
            });
        }
        let firsts = raw.map(|b| b.first);
        if !same_parity(firsts) {
            return Err(CoverError::ParityViolation {
                coordinate: Coordinate::First,
                values: firsts,
            });
        }
        let seconds = raw.map(|b| b.second);
        if !same_parity(seconds) {
            return Err(CoverError::ParityViolation {
                coordinate: Coordinate::Second,
                values: seconds,
            });
        }
        Ok(CoverType { branches: raw })
    }

    /// Convenience constructor from integer pairs.
    pub fn from_pairs(pairs: [(i64, i64); 3]) -> Result<Self, CoverError> {
        Self::validate(pairs.map(BiDegree::from))
    }

    /// Simple type `((n1,m1),(n2,m2))`, completed with a trivial third branch.
    pub fn simple(d1: (i64, i64), d2: (i64, i64)) -> Result<Self, CoverError> {
        Self::from_pairs([d1, d2, (0, 0)])
    }

    /// The branches `D₁, D₂, D₃` in stored order.
    pub fn branches(&self) -> [BiDegree; 3] {
        self.branches
    }

    /// `n = Σ n_j`.
    pub fn n(&self) -> i64 {
        self.branches.iter().map(|b| b.first).sum()
    }

    /// `m = Σ m_j`.
    pub fn m(&self) -> i64 {
        self.branches.iter().map(|b| b.second).sum()
    }

    /// Number of trivial branches (0 or 1).
    pub fn trivial_count(&self) -> usize {
        self.branches.iter().filter(|b| b.is_trivial()).count()
    }

    /// Structural class.
    pub fn class(&self) -> CoverClass {
        if self.trivial_count() == 1 {
            CoverClass::Simple
        } else if self
            .branches
            .iter()
            .all(|b| b.first % 2 == 0 && b.second % 2 == 0)
        {
            CoverClass::EvenNonSimple
        } else {
            CoverClass::NonSimple
        }
    }

    /// `true` when all six coordinates are even.
    pub fn is_all_even(&self) -> bool {
        self.branches
            .iter()
            .all(|b| b.first % 2 == 0 && b.second % 2 == 0)
    }

    /// Bidegrees of `L₁, L₂, L₃` with `2·L_i = D_j + D_k`.
    pub fn line_bundle_degrees(&self) -> [BiDegree; 3] {
        let d = &self.branches;
        core::array::from_fn(|i| {
            let (j, k) = others(i);
            // parity invariant makes both sums even
            BiDegree::new(
                (d[j].first + d[k].first) / 2,
                (d[j].second + d[k].second) / 2,
            )
        })
    }

    /// Applies a symmetry to the branch data. Validity is preserved.
    pub fn apply(&self, sym: Symmetry) -> CoverType {
        CoverType {
            branches: sym.apply(self.branches),
        }
    }

    /// Canonical representative of the orbit under permutations of the
    /// branches and the exchange of rulings.
    ///
    /// For each of the two orientations the branches are sorted
    /// lexicographically; the smaller sorted triple wins.
    pub fn canonicalize(&self) -> CoverType {
        CoverType {
            branches: canonical_branches(self.branches),
        }
    }

    /// `true` if `self` is its own canonical form.
    pub fn is_canonical(&self) -> bool {
        canonical_branches(self.branches) == self.branches
    }

    /// For a simple type, the two nontrivial branches in stored order.
    pub fn nontrivial_pair(&self) -> Option<(BiDegree, BiDegree)> {
        let mut it = self.branches.iter().filter(|b| !b.is_trivial());
        match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), None) => Some((*a, *b)),
            _ => None,
        }
    }
}

/// Validates raw branch data. Alias of [`CoverType::validate`].
pub fn validate_type(raw: [BiDegree; 3]) -> Result<CoverType, CoverError> {
    CoverType::validate(raw)
}

pub(crate) fn others(i: usize) -> (usize, usize) {
    match i {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

fn same_parity(v: [i64; 3]) -> bool {
    let p = v[0].rem_euclid(2);
    v.iter().all(|x| x.rem_euclid(2) == p)
}

fn sorted(mut b: [BiDegree; 3]) -> [BiDegree; 3] {
    b.sort_unstable();
    b
}

pub(crate) fn canonical_branches(b: [BiDegree; 3]) -> [BiDegree; 3] {
    let straight = sorted(b);
    let swapped = sorted(b.map(BiDegree::swapped));
    straight.min(swapped)
}

impl fmt::Display for CoverType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.branches;
        write!(f, "({a},{b},{c})")
    }
}

/// One element of `S₃ × Z/2` acting on branch triples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Symmetry {
    /// Branch `i` of the image is branch `perm[i]` of the source.
    pub perm: [usize; 3],
    /// Exchange the two rulings.
    pub swap: bool,
}

impl Symmetry {
    /// All 12 group elements.
    pub fn all() -> [Symmetry; 12] {
        const PERMS: [[usize; 3]; 6] = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        core::array::from_fn(|i| Symmetry {
            perm: PERMS[i % 6],
            swap: i >= 6,
        })
    }

    /// Acts on a raw triple.
    pub fn apply(&self, b: [BiDegree; 3]) -> [BiDegree; 3] {
        self.perm
            .map(|p| if self.swap { b[p].swapped() } else { b[p] })
    }
}

impl FromStr for CoverType {
    type Err = CoverError;

    /// Parses `((n1,m1),(n2,m2),(n3,m3))` or the simple form
    /// `((n1,m1),(n2,m2))`, ignoring whitespace.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser {
            src: s.as_bytes(),
            pos: 0,
        };
        p.expect(b'(', "'('")?;
        let first = p.pair()?;
        p.expect(b',', "','")?;
        let second = p.pair()?;
        let third = if p.peek() == Some(b',') {
            p.bump();
            p.pair()?
        } else {
            BiDegree::TRIVIAL
        };
        p.expect(b')', "')'")?;
        p.end()?;
        CoverType::validate([first, second, third])
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self
            .src
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn err(&self, expected: &'static str) -> CoverError {
        CoverError::Syntax {
            position: self.pos,
            expected,
        }
    }

    fn expect(&mut self, c: u8, what: &'static str) -> Result<(), CoverError> {
        if self.peek() == Some(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.err(what))
        }
    }

    fn int(&mut self) -> Result<i64, CoverError> {
        self.skip_ws();
        let start = self.pos;
        let mut v: i64 = 0;
        while let Some(d) = self.src.get(self.pos).filter(|c| c.is_ascii_digit()) {
            v = v
                .checked_mul(10)
                .and_then(|v| v.checked_add(i64::from(d - b'0')))
                .filter(|v| *v <= i64::from(i32::MAX))
                .ok_or(CoverError::Syntax {
                    position: start,
                    expected: "an integer below 2^31",
                })?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("a nonnegative integer"));
        }
        Ok(v)
    }

    fn pair(&mut self) -> Result<BiDegree, CoverError> {
        self.expect(b'(', "'('")?;
        let a = self.int()?;
        self.expect(b',', "','")?;
        let b = self.int()?;
        self.expect(b')', "')'")?;
        Ok(BiDegree::new(a, b))
    }

    fn end(&mut self) -> Result<(), CoverError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.err("end of input")),
        }
    }
}
