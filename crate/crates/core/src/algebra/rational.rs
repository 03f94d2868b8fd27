use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational, always reduced, denominator > 0.
pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Exact square root of a non-negative rational, if it exists.
pub fn rat_sqrt(q: &Rat) -> Option<Rat> {
    if q.is_negative() {
        return None;
    }
    if q.is_zero() {
        return Some(Rat::zero());
    }
    let ns = q.numer().sqrt();
    let ds = q.denom().sqrt();
    if &(&ns * &ns) == q.numer() && &(&ds * &ds) == q.denom() {
        Some(Rat::new(ns, ds))
    } else {
        None
    }
}

pub fn rat_to_f64(q: &Rat) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        // fall back to a quotient of leading digits for out-of-range big ints
        let n = q.numer().to_f64().unwrap_or(f64::MAX);
        let d = q.denom().to_f64().unwrap_or(f64::MAX);
        n / d
    })
}

/// Reconstruct a rational p/q from a float via continued fractions,
/// with denominator bounded by `max_den`. The caller must verify the
/// result exactly before trusting it.
pub fn rat_reconstruct(x: f64, max_den: u64) -> Option<Rat> {
    if !x.is_finite() {
        return None;
    }
    let (mut p0, mut q0, mut p1, mut q1) = (0i128, 1i128, 1i128, 0i128);
    let mut v = x;
    for _ in 0..64 {
        let a = v.floor();
        if a.abs() > 1e18 {
            return None;
        }
        let ai = a as i128;
        let (p2, q2) = (ai * p1 + p0, ai * q1 + q0);
        if q2.unsigned_abs() > max_den as u128 {
            break;
        }
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
        let frac = v - a;
        if frac.abs() < 1e-12 {
            break;
        }
        v = 1.0 / frac;
    }
    if q1 == 0 {
        return None;
    }
    let cand = Rat::new(BigInt::from(p1), BigInt::from(q1));
    if (rat_to_f64(&cand) - x).abs() < 1e-7 * (1.0 + x.abs()) {
        Some(cand)
    } else {
        None
    }
}

/// gcd of two rationals seen as elements of the fraction field of Z:
/// gcd(a/b, c/d) = gcd(a·d, c·b)/(b·d). Used for integer content.
pub fn rat_content(a: &Rat, b: &Rat) -> Rat {
    use num::Integer;
    if a.is_zero() {
        return b.abs();
    }
    if b.is_zero() {
        return a.abs();
    }
    let num = a.numer().gcd(&(b.numer() * a.denom() / b.denom().gcd(a.denom())));
    // simpler: gcd over common denominator
    let d = a.denom().lcm(b.denom());
    let an = (a.numer() * (&d / a.denom())).abs();
    let bn = (b.numer() * (&d / b.denom())).abs();
    let _ = num;
    Rat::new(an.gcd(&bn), d)
}

pub fn rat_one() -> Rat {
    Rat::one()
}
