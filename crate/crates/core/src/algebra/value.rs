use std::fmt;

use num::complex::Complex64;

use super::field::Field;

/// A coordinate that is either exact in the coefficient tower or a
/// tolerance-verified floating-point value.
#[derive(Clone, Debug, PartialEq)]
pub enum Value<F: Field> {
    Exact(F),
    Numeric(Complex64),
}

impl<F: Field> Value<F> {
    pub fn is_exact(&self) -> bool {
        matches!(self, Value::Exact(_))
    }

    pub fn exact(&self) -> Option<&F> {
        match self {
            Value::Exact(v) => Some(v),
            Value::Numeric(_) => None,
        }
    }

    pub fn to_complex(&self) -> Option<Complex64> {
        match self {
            Value::Exact(v) => v.to_complex(),
            Value::Numeric(z) => Some(*z),
        }
    }
}

impl<F: Field> fmt::Display for Value<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(v) => write!(f, "{v}"),
            Value::Numeric(z) => {
                if z.im.abs() < 1e-12 {
                    write!(f, "~{:.9}", z.re)
                } else if z.im >= 0.0 {
                    write!(f, "~({:.9}+{:.9}i)", z.re, z.im)
                } else {
                    write!(f, "~({:.9}{:.9}i)", z.re, z.im)
                }
            }
        }
    }
}
