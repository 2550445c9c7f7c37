//! Integer coefficients with an inline fast path.
//!
//! Gröbner computations over the rationals are carried out on primitive
//! integer polynomials. Almost every coefficient met in practice fits in a
//! machine word, so [`Int`] keeps an `i64` inline and only promotes to a heap
//! `BigInt` on overflow. Values that fit in `i64` are always stored as
//! `Small`, which makes the derived equality structural.

use core::cmp::Ordering;
use core::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Int {
    Small(i64),
    Big(BigInt),
}

impl fmt::Debug for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Int::Small(v) => write!(f, "{v}"),
            Int::Big(v) => write!(f, "{v}"),
        }
    }
}

impl From<i64> for Int {
    fn from(v: i64) -> Self {
        Int::Small(v)
    }
}

impl From<i32> for Int {
    fn from(v: i32) -> Self {
        Int::Small(v as i64)
    }
}

impl From<BigInt> for Int {
    fn from(v: BigInt) -> Self {
        match v.to_i64() {
            Some(s) => Int::Small(s),
            None => Int::Big(v),
        }
    }
}

impl From<i128> for Int {
    fn from(v: i128) -> Self {
        match i64::try_from(v) {
            Ok(s) => Int::Small(s),
            Err(_) => Int::Big(BigInt::from(v)),
        }
    }
}

impl Int {
    pub fn zero() -> Self {
        Int::Small(0)
    }

    pub fn one() -> Self {
        Int::Small(1)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Int::Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Int::Small(1))
    }

    pub fn signum(&self) -> i32 {
        match self {
            Int::Small(v) => v.signum() as i32,
            Int::Big(v) => match v.sign() {
                Sign::Minus => -1,
                Sign::NoSign => 0,
                Sign::Plus => 1,
            },
        }
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn to_bigint(&self) -> BigInt {
        match self {
            Int::Small(v) => BigInt::from(*v),
            Int::Big(v) => v.clone(),
        }
    }

    pub fn neg(&self) -> Int {
        match self {
            Int::Small(v) => match v.checked_neg() {
                Some(r) => Int::Small(r),
                None => Int::Big(-BigInt::from(*v)),
            },
            Int::Big(v) => Int::from(-v),
        }
    }

    pub fn abs(&self) -> Int {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn add(&self, other: &Int) -> Int {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => match a.checked_add(*b) {
                Some(r) => Int::Small(r),
                None => Int::from(*a as i128 + *b as i128),
            },
            _ => Int::from(self.to_bigint() + other.to_bigint()),
        }
    }

    pub fn sub(&self, other: &Int) -> Int {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => match a.checked_sub(*b) {
                Some(r) => Int::Small(r),
                None => Int::from(*a as i128 - *b as i128),
            },
            _ => Int::from(self.to_bigint() - other.to_bigint()),
        }
    }

    pub fn mul(&self, other: &Int) -> Int {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => match a.checked_mul(*b) {
                Some(r) => Int::Small(r),
                None => Int::from(*a as i128 * *b as i128),
            },
            (Int::Small(0), _) | (_, Int::Small(0)) => Int::zero(),
            _ => Int::from(self.to_bigint() * other.to_bigint()),
        }
    }

    /// `self * a - other * b` in one step.
    pub fn mul_sub(&self, a: &Int, other: &Int, b: &Int) -> Int {
        if let (Int::Small(x), Int::Small(y), Int::Small(u), Int::Small(v)) = (self, a, other, b) {
            let r = (*x as i128) * (*y as i128) - (*u as i128) * (*v as i128);
            return Int::from(r);
        }
        self.mul(a).sub(&other.mul(b))
    }

    /// Exact quotient; the caller guarantees `other` divides `self`.
    pub fn div_exact(&self, other: &Int) -> Int {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => match a.checked_div(*b) {
                Some(r) => Int::Small(r),
                None => Int::from(-(BigInt::from(*a))),
            },
            _ => Int::from(self.to_bigint() / other.to_bigint()),
        }
    }

    /// Non-negative gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Int) -> Int {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => {
                let g = gcd_u64(a.unsigned_abs(), b.unsigned_abs());
                match i64::try_from(g) {
                    Ok(v) => Int::Small(v),
                    Err(_) => Int::Big(BigInt::from(g)),
                }
            }
            _ => Int::from(self.to_bigint().gcd(&other.to_bigint())),
        }
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::from_integer(self.to_bigint())
    }

    pub fn bits(&self) -> u64 {
        match self {
            Int::Small(v) => 64 - v.unsigned_abs().leading_zeros() as u64,
            Int::Big(v) => v.bits(),
        }
    }
}

impl PartialOrd for Int {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Int {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => a.cmp(b),
            _ => self.to_bigint().cmp(&other.to_bigint()),
        }
    }
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            core::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

/// Scales a list of rationals to coprime integers with the sign of the first
/// entry made positive. Returns the integers and the scale `s` with
/// `ints[i] = s * rats[i]`.
pub fn clear_denominators(rats: &[BigRational]) -> (alloc::vec::Vec<Int>, BigRational) {
    let mut lcm = BigInt::one();
    for r in rats {
        lcm = lcm.lcm(r.denom());
    }
    let mut ints: alloc::vec::Vec<BigInt> =
        rats.iter().map(|r| r.numer() * (&lcm / r.denom())).collect();
    let mut g = BigInt::zero();
    for v in &ints {
        g = g.gcd(v);
    }
    if g.is_zero() {
        g = BigInt::one();
    }
    if ints.first().map(|v| v.is_negative()).unwrap_or(false) {
        g = -g;
    }
    for v in ints.iter_mut() {
        *v = &*v / &g;
    }
    let scale = BigRational::new(lcm, g);
    (ints.into_iter().map(Int::from).collect(), scale)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_promotes_and_demotes() {
        let a = Int::from(i64::MAX);
        let b = a.add(&Int::one());
        assert!(matches!(b, Int::Big(_)));
        let c = b.sub(&Int::one());
        assert_eq!(c, Int::Small(i64::MAX));
        let m = Int::from(i64::MIN);
        assert!(matches!(m.neg(), Int::Big(_)));
        assert_eq!(m.neg().neg(), m);
    }

    #[test]
    fn gcd_and_exact_division() {
        assert_eq!(Int::from(-12).gcd(&Int::from(18)), Int::from(6));
        assert_eq!(Int::zero().gcd(&Int::from(-7)), Int::from(7));
        let big = Int::from(i64::MAX).mul(&Int::from(6));
        assert_eq!(big.div_exact(&Int::from(3)), Int::from(i64::MAX).mul(&Int::from(2)));
        assert_eq!(big.gcd(&Int::from(4)), Int::from(2));
    }

    #[test]
    fn mul_sub_matches_separate_ops() {
        let x = Int::from(1i64 << 40);
        let r = x.mul_sub(&x, &Int::from(3), &Int::from(5));
        assert_eq!(r, x.mul(&x).sub(&Int::from(15)));
    }
}
