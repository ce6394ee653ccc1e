//! Cyclic quotient singularities of class T.
//!
//! The singularity `1/(dn²)(1, dna-1)` is the quotient of the rational double
//! point `A_{dn-1} : uv - z^{dn} = 0` by `μ_n` acting as
//! `(u, v, z) ↦ (ξu, ξ⁻¹v, ξᵃz)`. Its `Q`-Gorenstein smoothings come from the
//! `μ_n`-invariant family
//!
//! ```text
//! uv - z^{dn} = t_0 + t_1 z^n + ... + t_{d-1} z^{(d-1)n}
//! ```
//!
//! over a `d`-dimensional base. The link of `1/m(1,q)` is the lens space
//! `L(m,q)`.
//!
//! `gcd(a, n) = 1` and `1 ≤ a ≤ n` are assumed throughout.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};
use core::str::FromStr;

use crate::arith::{gcd, mod_inverse, modulo};

/// Errors from the singularity module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SingularityError {
    /// Parameters outside their domain.
    InvalidInput(&'static str),
    /// `1/m(1,q)` is not of class T.
    NotClassT {
        /// Group order.
        m: i64,
        /// Second weight.
        q: i64,
    },
    /// Textual form could not be parsed.
    Syntax {
        /// Byte offset into the input.
        position: usize,
        /// What was expected there.
        expected: &'static str,
    },
}

impl SingularityError {
    /// Stable machine-readable name.
    pub fn kind(&self) -> &'static str {
        match self {
            SingularityError::InvalidInput(_) => "InvalidInput",
            SingularityError::NotClassT { .. } => "NotClassT",
            SingularityError::Syntax { .. } => "Syntax",
        }
    }
}

impl fmt::Display for SingularityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SingularityError::InvalidInput(why) => write!(f, "invalid input: {why}"),
            SingularityError::NotClassT { m, q } => write!(f, "1/{m}(1,{q}) is not of class T"),
            SingularityError::Syntax { position, expected } => {
                write!(f, "syntax error at byte {position}: expected {expected}")
            }
        }
    }
}

impl core::error::Error for SingularityError {}

/// `1/m(1,q)`: `C²` modulo `μ_m` acting with weights `(1, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicQuotient {
    m: i64,
    q: i64,
}

impl CyclicQuotient {
    /// Requires `m ≥ 2`, `1 ≤ q ≤ m-1` and `gcd(q, m) = 1`.
    pub fn new(m: i64, q: i64) -> Result<Self, SingularityError> {
        if m < 2 {
            return Err(SingularityError::InvalidInput(
                "group order must be at least 2",
            ));
        }
        if !(1..m).contains(&q) {
            return Err(SingularityError::InvalidInput(
                "weight must lie in [1, m-1]",
            ));
        }
        if gcd(q, m) != 1 {
            return Err(SingularityError::InvalidInput(
                "weight must be coprime to the order",
            ));
        }
        Ok(CyclicQuotient { m, q })
    }

    /// Group order.
    pub fn m(&self) -> i64 {
        self.m
    }

    /// Second weight.
    pub fn q(&self) -> i64 {
        self.q
    }

    /// The other presentation `1/m(1, q̄)` with `q q̄ ≡ 1 (mod m)`.
    pub fn dual(&self) -> CyclicQuotient {
        let q = mod_inverse(self.q, self.m).expect("weight coprime to order");
        CyclicQuotient { m: self.m, q }
    }
}

impl fmt::Display for CyclicQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1/{}(1,{})", self.m, self.q)
    }
}

impl FromStr for CyclicQuotient {
    type Err = SingularityError;

    /// Parses `1/m(1,q)`, ignoring whitespace.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bytes = s.as_bytes();
        let mut pos = 0;
        let mut next =
            |want: Option<u8>, expected: &'static str| -> Result<i64, SingularityError> {
                while bytes.get(pos).is_some_and(|c| c.is_ascii_whitespace()) {
                    pos += 1;
                }
                let err = SingularityError::Syntax {
                    position: pos,
                    expected,
                };
                match want {
                    Some(c) => {
                        if bytes.get(pos) != Some(&c) {
                            return Err(err);
                        }
                        pos += 1;
                        Ok(0)
                    }
                    None => {
                        let start = pos;
                        while bytes.get(pos).is_some_and(u8::is_ascii_digit) {
                            pos += 1;
                        }
                        s[start..pos]
                            .parse::<i64>()
                            .ok()
                            .filter(|v| *v <= i64::from(i32::MAX))
                            .ok_or(err)
                    }
                }
            };
        let one = next(None, "'1'")?;
        if one != 1 {
            return Err(SingularityError::Syntax {
                position: 0,
                expected: "'1'",
            });
        }
        next(Some(b'/'), "'/'")?;
        let m = next(None, "the group order")?;
        next(Some(b'('), "'('")?;
        if next(None, "'1'")? != 1 {
            return Err(SingularityError::InvalidInput("first weight must be 1"));
        }
        next(Some(b','), "','")?;
        let q = next(None, "the second weight")?;
        next(Some(b')'), "')'")?;
        while bytes.get(pos).is_some_and(|c| c.is_ascii_whitespace()) {
            pos += 1;
        }
        if pos != bytes.len() {
            return Err(SingularityError::Syntax {
                position: pos,
                expected: "end of input",
            });
        }
        CyclicQuotient::new(m, q)
    }
}

/// Parameters `(d, n, a)` of `1/(dn²)(1, dna-1) = A_{dn-1}/μ_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassTDatum {
    d: i64,
    n: i64,
    a: i64,
}

impl ClassTDatum {
    /// Requires `d, n ≥ 1`, `1 ≤ a ≤ n`, `gcd(a, n) = 1` and `dn² ≥ 2`
    /// (`d = n = 1` is a smooth point).
    pub fn new(d: i64, n: i64, a: i64) -> Result<Self, SingularityError> {
        if d < 1 || n < 1 {
            return Err(SingularityError::InvalidInput("d and n must be positive"));
        }
        if !(1..=n).contains(&a) || gcd(a, n) != 1 {
            return Err(SingularityError::InvalidInput(
                "a must lie in [1, n] and be coprime to n",
            ));
        }
        if d.checked_mul(n)
            .and_then(|dn| dn.checked_mul(n))
            .is_none_or(|m| m < 2)
        {
            return Err(SingularityError::InvalidInput("d n^2 must be at least 2"));
        }
        Ok(ClassTDatum { d, n, a })
    }

    /// Dimension of the smoothing base.
    pub fn d(&self) -> i64 {
        self.d
    }

    /// Order of the quotient group `μ_n`.
    pub fn n(&self) -> i64 {
        self.n
    }

    /// Weight of `μ_n` on `z`.
    pub fn a(&self) -> i64 {
        self.a
    }

    /// The singularity `1/(dn²)(1, dna-1)`.
    pub fn cyclic_quotient(&self) -> CyclicQuotient {
        let m = self.d * self.n * self.n;
        CyclicQuotient {
            m,
            q: modulo(self.d * self.n * self.a - 1, m),
        }
    }
}

impl fmt::Display for ClassTDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(d,n,a) = ({},{},{})", self.d, self.n, self.a)
    }
}

/// Finds `(d, n, a)` with `dn² = m` and `dna - 1 ≡ q` or `≡ q̄ (mod m)`.
///
/// The smallest `n` wins, then the smallest `a`. For each `n` with `n² | m`
/// the congruence `dn·a ≡ q+1 (mod dn²)` is solved directly: it needs
/// `dn | q+1` and then fixes `a` modulo `n`.
pub fn recognize_class_t(s: &CyclicQuotient) -> Result<ClassTDatum, SingularityError> {
    let m = s.m;
    let presentations = [s.q, s.dual().q];
    let mut n = 1i64;
    while n * n <= m {
        if m % (n * n) == 0 {
            let d = m / (n * n);
            let dn = d * n;
            let a = presentations
                .iter()
                .filter(|q| (*q + 1) % dn == 0)
                .map(|q| match modulo((q + 1) / dn, n) {
                    0 => n,
                    a => a,
                })
                .filter(|a| gcd(*a, n) == 1)
                .min();
            if let Some(a) = a {
                return Ok(ClassTDatum { d, n, a });
            }
        }
        n += 1;
    }
    Err(SingularityError::NotClassT { m, q: s.q })
}

/// Structured form of the smoothing family of a class T singularity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SmoothingFamily {
    /// Exponent `dn` of `z` on the left-hand side.
    pub total_exponent: i64,
    /// Only exponents divisible by this modulus (`n`) appear on the right.
    pub modulus: i64,
    /// Exponents `kn`, `k = 0..d-1`, paired with `t_k`.
    pub exponents: Vec<i64>,
    /// Order of the acting group `μ_n`.
    pub group_order: i64,
    /// Weights of `μ_n` on `(u, v, z)`: `(1, -1, a)`.
    pub action_weights: [i64; 3],
}

impl SmoothingFamily {
    /// Number of deformation parameters `t_k` (`= d`).
    pub fn parameter_count(&self) -> usize {
        self.exponents.len()
    }

    /// Weights reduced into `[0, n)`.
    pub fn reduced_weights(&self) -> [i64; 3] {
        self.action_weights.map(|w| modulo(w, self.group_order))
    }

    /// `uv − z⁶ = t₀ + t₁z³` style rendering.
    pub fn render_unicode(&self) -> String {
        self.render(true)
    }

    /// `uv - z^6 = t_0 + t_1 z^3` style rendering.
    pub fn render_ascii(&self) -> String {
        self.render(false)
    }

    fn render(&self, unicode: bool) -> String {
        let mut out = String::from("uv");
        out.push_str(if unicode { " \u{2212} " } else { " - " });
        push_power(&mut out, self.total_exponent, unicode);
        out.push_str(" =");
        for (k, e) in self.exponents.iter().enumerate() {
            out.push_str(if k == 0 { " " } else { " + " });
            if unicode {
                out.push('t');
                push_script(&mut out, k as i64, &SUBSCRIPTS);
            } else {
                let _ = write!(out, "t_{k}");
            }
            if *e > 0 {
                if !unicode {
                    out.push(' ');
                }
                push_power(&mut out, *e, unicode);
            }
        }
        out
    }
}

impl fmt::Display for SmoothingFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_unicode())
    }
}

const SUPERSCRIPTS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
const SUBSCRIPTS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];

fn push_script(out: &mut String, v: i64, digits: &[char; 10]) {
    let mut buf = itoa(v);
    for c in buf.drain(..) {
        out.push(digits[(c as u8 - b'0') as usize]);
    }
}

fn itoa(v: i64) -> String {
    let mut s = String::new();
    let _ = write!(s, "{v}");
    s
}

fn push_power(out: &mut String, e: i64, unicode: bool) {
    out.push('z');
    if e == 1 {
        return;
    }
    if unicode {
        push_script(out, e, &SUPERSCRIPTS);
    } else {
        let _ = write!(out, "^{e}");
    }
}

/// The `μ_n`-equivariant smoothing family `uv - z^{dn} = Σ t_k z^{kn}`.
pub fn smoothing_family(t: &ClassTDatum) -> SmoothingFamily {
    SmoothingFamily {
        total_exponent: t.d * t.n,
        modulus: t.n,
        exponents: (0..t.d).map(|k| k * t.n).collect(),
        group_order: t.n,
        action_weights: [1, -1, t.a],
    }
}

/// Link of the singularity: `L(dn², dna-1 mod dn²)`.
pub fn link_lens_space(t: &ClassTDatum) -> (i64, i64) {
    let s = t.cyclic_quotient();
    (s.m, s.q)
}

/// `L(m₁,q₁) ≅ L(m₂,q₂)` iff `m₁ = m₂` and `q₂ ≡ ±q₁^{±1} (mod m)`.
pub fn lens_equivalent(l1: (i64, i64), l2: (i64, i64)) -> Result<bool, SingularityError> {
    for (m, q) in [l1, l2] {
        if m < 1 || gcd(q, m) != 1 {
            return Err(SingularityError::InvalidInput(
                "lens space needs m >= 1 and gcd(q, m) = 1",
            ));
        }
    }
    let ((m, q1), (m2, q2)) = (l1, l2);
    if m != m2 {
        return Ok(false);
    }
    let q2 = modulo(q2, m);
    let inv = mod_inverse(q1, m).expect("checked coprime");
    Ok([q1, -q1, inv, -inv].iter().any(|c| modulo(*c, m) == q2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cq(m: i64, q: i64) -> CyclicQuotient {
        CyclicQuotient::new(m, q).unwrap()
    }

    fn datum(d: i64, n: i64, a: i64) -> ClassTDatum {
        ClassTDatum::new(d, n, a).unwrap()
    }

    #[test]
    fn recognizer_known_cases() {
        assert_eq!(recognize_class_t(&cq(4, 1)), Ok(datum(1, 2, 1)));
        assert_eq!(recognize_class_t(&cq(5, 4)), Ok(datum(5, 1, 1)));
        assert_eq!(
            recognize_class_t(&cq(5, 2)),
            Err(SingularityError::NotClassT { m: 5, q: 2 })
        );
        assert_eq!(recognize_class_t(&cq(8, 3)), Ok(datum(2, 2, 1)));
        // 1/9(1,2) = 1/(1*3^2)(1, 3*1-1) with a = 1
        assert_eq!(recognize_class_t(&cq(9, 2)), Ok(datum(1, 3, 1)));
        // 1/9(1,5): 5 * 2 = 10 = 1 mod 9, so also 1/9(1,2)
        assert_eq!(recognize_class_t(&cq(9, 5)), Ok(datum(1, 3, 1)));
    }

    #[test]
    fn invalid_quotients() {
        assert!(matches!(
            CyclicQuotient::new(6, 2),
            Err(SingularityError::InvalidInput(_))
        ));
        assert!(matches!(
            CyclicQuotient::new(6, 6),
            Err(SingularityError::InvalidInput(_))
        ));
        assert!(matches!(
            CyclicQuotient::new(1, 0),
            Err(SingularityError::InvalidInput(_))
        ));
        assert!(ClassTDatum::new(1, 1, 1).is_err());
        assert!(ClassTDatum::new(1, 4, 2).is_err());
        assert!(ClassTDatum::new(1, 4, 5).is_err());
        assert!(ClassTDatum::new(0, 2, 1).is_err());
    }

    #[test]
    fn parse_quotients() {
        assert_eq!(" 1 / 5 ( 1 , 2 ) ".parse::<CyclicQuotient>(), Ok(cq(5, 2)));
        assert_eq!("1/8(1,3)".parse::<CyclicQuotient>(), Ok(cq(8, 3)));
        assert!(matches!(
            "2/8(1,3)".parse::<CyclicQuotient>(),
            Err(SingularityError::Syntax { .. })
        ));
        assert!(matches!(
            "1/8(2,3)".parse::<CyclicQuotient>(),
            Err(SingularityError::InvalidInput(_))
        ));
        assert!(matches!(
            "1/8(1,3".parse::<CyclicQuotient>(),
            Err(SingularityError::Syntax { .. })
        ));
        assert!(matches!(
            "1/8(1,3))".parse::<CyclicQuotient>(),
            Err(SingularityError::Syntax { .. })
        ));
        assert!(matches!(
            "1/8(1,2)".parse::<CyclicQuotient>(),
            Err(SingularityError::InvalidInput(_))
        ));
    }

    #[test]
    fn families() {
        let f = smoothing_family(&datum(1, 2, 1));
        assert_eq!(f.render_unicode(), "uv \u{2212} z\u{b2} = t\u{2080}");
        assert_eq!(f.render_unicode(), "uv − z² = t₀");
        assert_eq!(f.render_ascii(), "uv - z^2 = t_0");
        assert_eq!(f.exponents, [0]);
        assert_eq!((f.modulus, f.total_exponent, f.group_order), (2, 2, 2));
        assert_eq!(f.action_weights, [1, -1, 1]);
        assert_eq!(f.reduced_weights(), [1, 1, 1]);

        let f = smoothing_family(&datum(5, 1, 1));
        assert_eq!(
            f.render_unicode(),
            "uv − z⁵ = t₀ + t₁z + t₂z² + t₃z³ + t₄z⁴"
        );
        assert_eq!(f.group_order, 1);

        let f = smoothing_family(&datum(2, 3, 1));
        assert_eq!(f.render_unicode(), "uv − z⁶ = t₀ + t₁z³");
        assert_eq!(f.render_ascii(), "uv - z^6 = t_0 + t_1 z^3");
        assert_eq!(f.action_weights, [1, -1, 1]);
        assert_eq!(f.parameter_count(), 2);

        let f = smoothing_family(&datum(12, 1, 1));
        assert!(f.render_unicode().ends_with("t₁₁z¹¹"));
    }

    #[test]
    fn links() {
        assert_eq!(link_lens_space(&datum(1, 2, 1)), (4, 1));
        assert_eq!(link_lens_space(&datum(5, 1, 1)), (5, 4));
        assert_eq!(link_lens_space(&datum(2, 2, 1)), (8, 3));
    }

    #[test]
    fn lens_known_cases() {
        assert_eq!(lens_equivalent((5, 2), (5, 3)), Ok(true));
        assert_eq!(lens_equivalent((7, 1), (7, 2)), Ok(false));
        assert_eq!(lens_equivalent((4, 1), (4, 1)), Ok(true));
        assert_eq!(lens_equivalent((4, 1), (5, 1)), Ok(false));
        assert!(lens_equivalent((4, 2), (4, 1)).is_err());
    }

    proptest! {
        #[test]
        fn lens_equivalence_relation(m in 2i64..60, a in 1i64..60, b in 1i64..60, c in 1i64..60) {
            let (a, b, c) = (a % m, b % m, c % m);
            prop_assume!([a, b, c].iter().all(|x| gcd(*x, m) == 1));
            let eq = |x: i64, y: i64| lens_equivalent((m, x), (m, y)).unwrap();
            prop_assert!(eq(a, a));
            prop_assert_eq!(eq(a, b), eq(b, a));
            if eq(a, b) && eq(b, c) {
                prop_assert!(eq(a, c));
            }
        }

        #[test]
        fn datum_round_trips(d in 1i64..20, n in 1i64..12, a in 1i64..12) {
            prop_assume!(a <= n && gcd(a, n) == 1 && d * n * n >= 2);
            let t = datum(d, n, a);
            let back = recognize_class_t(&t.cyclic_quotient()).unwrap();
            prop_assert_eq!(back.cyclic_quotient().m(), t.cyclic_quotient().m());
            prop_assert!(lens_equivalent(link_lens_space(&back), link_lens_space(&t)).unwrap());
        }
    }
}
