use std::fmt::{Debug, Display};

use num::complex::Complex64;
use num::traits::Zero;

use super::cyclotomic::Cyclotomic;
use super::rational::{rat_to_f64, Rat};

/// Exact coefficient field. Implemented by the three levels of the tower:
/// Q, Q(omega) and rational functions over Q.
pub trait Field: Clone + PartialEq + Debug + Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rat(q: Rat) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn is_zero(&self) -> bool;

    fn from_int(n: i64) -> Self {
        Self::from_rat(Rat::from_integer(n.into()))
    }

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// The cyclotomic generator, where the field contains one.
    fn omega() -> Option<Self> {
        None
    }

    /// Numeric embedding, where one exists (not for rational functions).
    fn to_complex(&self) -> Option<Complex64>;

    /// Wraps a displayed coefficient in parentheses when it would not
    /// parse as an atomic factor (sums, omega terms).
    fn needs_parens(&self) -> bool;

    /// Scalar that rescales a coefficient list to a small canonical
    /// representative (integer-primitive for Q-like towers); None means
    /// no cheap renormalization is available.
    fn normalization_scale(_coeffs: &[&Self]) -> Option<Self> {
        None
    }
}

fn rat_list_content<'a>(it: impl Iterator<Item = &'a Rat>) -> Rat {
    use num::traits::Zero;
    let mut content = <Rat as Zero>::zero();
    for c in it {
        content = super::rational::rat_content(&content, c);
    }
    content
}

impl Field for Rat {
    fn zero() -> Self {
        <Rat as Zero>::zero()
    }
    fn one() -> Self {
        num::traits::One::one()
    }
    fn from_rat(q: Rat) -> Self {
        q
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(<Rat as num::traits::One>::one() / self)
        }
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn to_complex(&self) -> Option<Complex64> {
        Some(Complex64::new(rat_to_f64(self), 0.0))
    }
    fn needs_parens(&self) -> bool {
        false
    }
    fn normalization_scale(coeffs: &[&Self]) -> Option<Self> {
        let content = rat_list_content(coeffs.iter().copied());
        Field::inv(&content)
    }
}

impl Field for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::zero()
    }
    fn one() -> Self {
        Cyclotomic::one()
    }
    fn from_rat(q: Rat) -> Self {
        Cyclotomic::from_rat(q)
    }
    fn add(&self, other: &Self) -> Self {
        Cyclotomic::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        Cyclotomic::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Cyclotomic::mul(self, other)
    }
    fn neg(&self) -> Self {
        Cyclotomic::neg(self)
    }
    fn inv(&self) -> Option<Self> {
        Cyclotomic::inv(self)
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
    fn omega() -> Option<Self> {
        Some(Cyclotomic::omega())
    }
    fn to_complex(&self) -> Option<Complex64> {
        Some(Cyclotomic::to_complex(self))
    }
    fn needs_parens(&self) -> bool {
        !Zero::is_zero(&self.im)
    }
    fn normalization_scale(coeffs: &[&Self]) -> Option<Self> {
        let content = rat_list_content(coeffs.iter().flat_map(|c| [&c.re, &c.im]));
        <Rat as Field>::inv(&content).map(Cyclotomic::from_rat)
    }
}
