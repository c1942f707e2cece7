use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{GpfError, Result};

/// Coefficient field of a polynomial ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    /// The rationals, with arbitrary-precision numerators and denominators.
    Rational,
    /// The prime field `F_q`, `q < 2^31`.
    Prime(u32),
}

/// An element of a [`Field`].
///
/// Rationals are kept in lowest terms with a positive denominator (that is
/// what `BigRational` maintains); residues always lie in `[0, q)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Q(BigRational),
    P(u32),
}

fn is_prime(q: u32) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= q as u64 {
        if (q as u64).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn prime(q: u32) -> Result<Field> {
        if q >= (1 << 31) || !is_prime(q) {
            return Err(GpfError::InvalidField(format!("{q} is not a prime below 2^31")));
        }
        Ok(Field::Prime(q))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(q) => *q,
        }
    }

    pub fn zero(&self) -> Coeff {
        match self {
            Field::Rational => Coeff::Q(BigRational::zero()),
            Field::Prime(_) => Coeff::P(0),
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            Field::Rational => Coeff::Q(BigRational::one()),
            Field::Prime(_) => Coeff::P(1),
        }
    }

    pub fn from_i64(&self, v: i64) -> Coeff {
        match self {
            Field::Rational => Coeff::Q(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(q) => Coeff::P(v.rem_euclid(*q as i64) as u32),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Coeff {
        match self {
            Field::Rational => Coeff::Q(BigRational::from_integer(v.clone())),
            Field::Prime(q) => {
                let r = v.mod_floor(&BigInt::from(*q));
                Coeff::P(r.to_u32().expect("residue fits in u32"))
            }
        }
    }

    /// Maps a rational into the field. Fails in `F_q` when `q` divides the
    /// denominator.
    pub fn from_rational(&self, v: &BigRational) -> Result<Coeff> {
        match self {
            Field::Rational => Ok(Coeff::Q(v.clone())),
            Field::Prime(_) => {
                let num = self.from_bigint(v.numer());
                let den = self.from_bigint(v.denom());
                if self.is_zero(&den) {
                    return Err(GpfError::InvalidField(format!(
                        "denominator of {v} vanishes in characteristic {}",
                        self.characteristic()
                    )));
                }
                Ok(self.mul(&num, &self.inv(&den)))
            }
        }
    }

    pub fn is_zero(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Q(r) => r.is_zero(),
            Coeff::P(v) => *v == 0,
        }
    }

    pub fn is_one(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Q(r) => r.is_one(),
            Coeff::P(v) => *v == 1,
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Rational, Coeff::Q(x), Coeff::Q(y)) => Coeff::Q(x + y),
            (Field::Prime(q), Coeff::P(x), Coeff::P(y)) => Coeff::P(((*x as u64 + *y as u64) % *q as u64) as u32),
            _ => panic!("coefficient does not belong to {self:?}"),
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (Field::Rational, Coeff::Q(x)) => Coeff::Q(-x),
            (Field::Prime(q), Coeff::P(x)) => Coeff::P(if *x == 0 { 0 } else { q - x }),
            _ => panic!("coefficient does not belong to {self:?}"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Rational, Coeff::Q(x), Coeff::Q(y)) => Coeff::Q(x * y),
            (Field::Prime(q), Coeff::P(x), Coeff::P(y)) => Coeff::P(((*x as u64 * *y as u64) % *q as u64) as u32),
            _ => panic!("coefficient does not belong to {self:?}"),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: &Coeff) -> Coeff {
        assert!(!self.is_zero(a), "inverse of zero");
        match (self, a) {
            (Field::Rational, Coeff::Q(x)) => Coeff::Q(x.recip()),
            (Field::Prime(q), Coeff::P(x)) => {
                // Fermat: x^(q-2)
                let m = *q as u64;
                let mut base = *x as u64 % m;
                let mut exp = m - 2;
                let mut acc = 1u64;
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = acc * base % m;
                    }
                    base = base * base % m;
                    exp >>= 1;
                }
                Coeff::P(acc as u32)
            }
            _ => panic!("coefficient does not belong to {self:?}"),
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.mul(a, &self.inv(b))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "QQ"),
            Field::Prime(q) => write!(f, "GF({q})"),
        }
    }
}

impl Coeff {
    /// True for rationals with negative sign. Residues are never negative.
    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Q(r) => r.is_negative(),
            Coeff::P(_) => false,
        }
    }

    pub fn abs(&self) -> Coeff {
        match self {
            Coeff::Q(r) => Coeff::Q(r.abs()),
            Coeff::P(v) => Coeff::P(*v),
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Q(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Coeff::P(v) => write!(f, "{v}"),
        }
    }
}
