use std::fmt;

use num::complex::Complex64;
use num::traits::{Signed, Zero};

use super::rational::{rat_int, rat_sqrt, rat_to_f64, Rat};

/// Element of Q(omega), omega a primitive cube root of unity: omega^2 = -1 - omega.
///
/// Stored as `re + im * omega` with rational `re`, `im`, so omega never
/// appears to a power above 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Cyclotomic {
    pub re: Rat,
    pub im: Rat,
}

impl Cyclotomic {
    pub fn new(re: Rat, im: Rat) -> Self {
        Cyclotomic { re, im }
    }

    pub fn from_rat(q: Rat) -> Self {
        Cyclotomic { re: q, im: Rat::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(rat_int(n))
    }

    /// The generator omega itself.
    pub fn omega() -> Self {
        Cyclotomic { re: Rat::zero(), im: rat_int(1) }
    }

    /// omega^2 = -1 - omega.
    pub fn omega2() -> Self {
        Cyclotomic { re: rat_int(-1), im: rat_int(-1) }
    }

    /// i*sqrt(3) = omega - omega^2 = 1 + 2 omega.
    pub fn i_sqrt3() -> Self {
        Cyclotomic { re: rat_int(1), im: rat_int(2) }
    }

    pub fn zero() -> Self {
        Self::from_rat(Rat::zero())
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.im.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        Cyclotomic { re: &self.re + &o.re, im: &self.im + &o.im }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Cyclotomic { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    pub fn neg(&self) -> Self {
        Cyclotomic { re: -self.re.clone(), im: -self.im.clone() }
    }

    /// (a + b w)(c + d w) = ac + (ad + bc) w + bd w^2,  w^2 = -1 - w.
    pub fn mul(&self, o: &Self) -> Self {
        let ac = &self.re * &o.re;
        let bd = &self.im * &o.im;
        let ad_bc = &self.re * &o.im + &self.im * &o.re;
        Cyclotomic { re: ac - &bd, im: ad_bc - bd }
    }

    /// Complex conjugation, omega -> omega^2.
    pub fn conj(&self) -> Self {
        // a + b w -> a + b w^2 = (a - b) - b w
        Cyclotomic { re: &self.re - &self.im, im: -self.im.clone() }
    }

    /// Field norm N(a + b w) = (a + b w)(a + b w^2) = a^2 - a b + b^2.
    pub fn norm(&self) -> Rat {
        &self.re * &self.re - &self.re * &self.im + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        let c = self.conj();
        Some(Cyclotomic { re: c.re / &n, im: c.im / &n })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact square root in Q(omega), if one exists.
    ///
    /// Solves (p + q w)^2 = re + im w for rational p, q.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        // (p + qw)^2 = p^2 - q^2 + (2pq - q^2) w
        if self.im.is_zero() {
            // rational target: either q = 0 and p^2 = re, or p = q/2 and
            // p^2 - q^2 = re with 2pq = q^2: q(2p - q) = 0.
            if let Some(p) = rat_sqrt(&self.re) {
                return Some(Cyclotomic { re: p, im: Rat::zero() });
            }
            // q != 0, p = q/2: q^2/4 - q^2 = -3 q^2/4 = re  ->  q^2 = -4 re/3
            let q2 = -&self.re * rat_int(4) / rat_int(3);
            if let Some(q) = rat_sqrt(&q2) {
                return Some(Cyclotomic { re: &q / rat_int(2), im: q });
            }
            return None;
        }
        // q != 0 here. From 2pq - q^2 = im: p = (im + q^2) / (2q).
        // Substituting into p^2 - q^2 = re with u = q^2:
        //   (im + u)^2 - 4 u^2 = 4 re u
        //   -3 u^2 + (2 im - 4 re) u + im^2 = 0
        let a = rat_int(-3);
        let b = &self.im * rat_int(2) - &self.re * rat_int(4);
        let c = &self.im * &self.im;
        let disc = &b * &b - rat_int(4) * &a * &c;
        let sd = rat_sqrt(&disc)?;
        for sign in [1i64, -1] {
            let u = (-&b + &sd * rat_int(sign)) / (rat_int(2) * &a);
            if u.is_negative() {
                continue;
            }
            if let Some(q) = rat_sqrt(&u) {
                if q.is_zero() {
                    continue;
                }
                let p = (&self.im + &u) / (rat_int(2) * &q);
                let cand = Cyclotomic { re: p, im: q };
                if cand.mul(&cand) == *self {
                    return Some(cand);
                }
            }
        }
        None
    }

    /// Numeric value with omega = (-1 + i sqrt(3))/2.
    pub fn to_complex(&self) -> Complex64 {
        let w = Complex64::new(-0.5, 3f64.sqrt() / 2.0);
        Complex64::new(rat_to_f64(&self.re), 0.0) + w * rat_to_f64(&self.im)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let om = if self.im == rat_int(1) {
            "omega".to_string()
        } else if self.im == rat_int(-1) {
            "-omega".to_string()
        } else {
            format!("{}*omega", self.im)
        };
        if self.re.is_zero() {
            write!(f, "{om}")
        } else if self.im.is_negative() {
            write!(f, "{} - {}", self.re, om.trim_start_matches('-'))
        } else {
            write!(f, "{} + {}", self.re, om)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_relations() {
        let w = Cyclotomic::omega();
        let one = Cyclotomic::one();
        // 1 + w + w^2 = 0
        let s = one.add(&w).add(&w.pow(2));
        assert!(s.is_zero());
        // w^3 = 1
        assert_eq!(w.pow(3), one);
        // conj(w) = w^2
        assert_eq!(w.conj(), Cyclotomic::omega2());
    }

    #[test]
    fn inverse_and_norm() {
        let z = Cyclotomic::new(rat_int(3), rat_int(-2));
        let zi = z.inv().unwrap();
        assert_eq!(z.mul(&zi), Cyclotomic::one());
        assert_eq!(z.norm(), rat_int(9 + 6 + 4));
    }

    #[test]
    fn sqrt_of_minus_three() {
        // i sqrt(3) squared is -3
        let is3 = Cyclotomic::i_sqrt3();
        assert_eq!(is3.mul(&is3), Cyclotomic::from_int(-3));
        let r = Cyclotomic::from_int(-3).sqrt().unwrap();
        assert_eq!(r.mul(&r), Cyclotomic::from_int(-3));
    }

    #[test]
    fn sqrt_of_omega_like_values() {
        // (1 + 2 omega)^2 = -3, (2 + omega)^2 = 3 + 3 omega
        let z = Cyclotomic::new(rat_int(3), rat_int(3));
        let r = z.sqrt().unwrap();
        assert_eq!(r.mul(&r), z);
        // -1 has no square root in Q(omega)
        assert!(Cyclotomic::from_int(-1).sqrt().is_none());
    }
}
