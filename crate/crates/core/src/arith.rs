//! Small exact integer helpers.

/// Greatest common divisor, always nonnegative. `gcd(0, 0) == 0`.
pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a as i64
}

/// Nonnegative residue of `a` modulo `m` (`m > 0`).
pub fn modulo(a: i64, m: i64) -> i64 {
    a.rem_euclid(m)
}

/// Multiplicative inverse of `a` modulo `m`, if it exists.
///
/// Returns the representative in `[0, m)`. For `m == 1` the inverse is `0`.
pub fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    if m <= 0 {
        return None;
    }
    // extended Euclid on (a mod m, m)
    let (mut old_r, mut r) = (modulo(a, m), m);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let quot = old_r / r;
        (old_r, r) = (r, old_r - quot * r);
        (old_s, s) = (s, old_s - quot * s);
    }
    if old_r != 1 {
        return if m == 1 { Some(0) } else { None };
    }
    Some(modulo(old_s, m))
}

/// Largest `r ≥ 0` with `r * r <= x`.
pub fn isqrt(x: u64) -> u64 {
    if x < 2 {
        return x;
    }
    let mut lo = 1u64;
    let mut hi = x.min(1 << 32);
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        if mid.checked_mul(mid).is_some_and(|sq| sq <= x) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo
}
