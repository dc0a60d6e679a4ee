//! Fields viewed as tracts: a formal sum is null iff it sums to zero.
//!
//! [`FieldTract`] is generic over any [`FieldScalar`]; the crate root exposes
//! the rationals and `GF(2)`, `GF(3)` as aliases.

use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, Zero};
use rand::Rng;

use crate::error::Result;
use crate::tract::{invalid, DdHint, FormalSum, SampleRng, Tract};

/// Scalars of a field usable as tract coefficients.
pub trait FieldScalar: Num + Clone + PartialEq + fmt::Debug + Send + Sync {
    /// Tract identifier, e.g. `"field:q"`.
    fn field_id() -> String;

    /// Nonzero elements, for finite fields.
    fn nonzero_elements() -> Option<Vec<Self>>;

    fn random_nonzero(rng: &mut SampleRng) -> Self;

    fn parse_literal(s: &str) -> Option<Self>;

    fn literal(&self) -> String;

    fn from_i64(v: i64) -> Self;
}

/// Integers modulo a prime `P`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp<const P: u32>(u32);

impl<const P: u32> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u32)
    }

    pub fn value(self) -> u32 {
        self.0
    }

    fn pow(self, mut e: u32) -> Self {
        let mut base = self;
        let mut acc = Fp(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn inverse(self) -> Self {
        assert!(self.0 != 0, "inverse of zero in GF({P})");
        self.pow(P - 2)
    }
}

impl<const P: u32> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Add for Fp<P> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Fp((self.0 + o.0) % P)
    }
}

impl<const P: u32> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Fp((self.0 + P - o.0) % P)
    }
}

impl<const P: u32> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Fp(((self.0 as u64 * o.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Self) -> Self {
        self * o.inverse()
    }
}

impl<const P: u32> Rem for Fp<P> {
    type Output = Self;
    fn rem(self, _: Self) -> Self {
        Fp(0)
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u32> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u32> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u32> Num for Fp<P> {
    type FromStrRadixErr = std::num::ParseIntError;
    fn from_str_radix(s: &str, radix: u32) -> std::result::Result<Self, Self::FromStrRadixErr> {
        i64::from_str_radix(s, radix).map(Fp::new)
    }
}

impl<const P: u32> FieldScalar for Fp<P> {
    fn field_id() -> String {
        format!("field:gf{P}")
    }

    fn nonzero_elements() -> Option<Vec<Self>> {
        Some((1..P).map(Fp).collect())
    }

    fn random_nonzero(rng: &mut SampleRng) -> Self {
        Fp(rng.gen_range(1..P))
    }

    fn parse_literal(s: &str) -> Option<Self> {
        s.parse::<i64>().ok().map(Fp::new)
    }

    fn literal(&self) -> String {
        self.0.to_string()
    }

    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }
}

impl FieldScalar for BigRational {
    fn field_id() -> String {
        "field:q".into()
    }

    fn nonzero_elements() -> Option<Vec<Self>> {
        None
    }

    fn random_nonzero(rng: &mut SampleRng) -> Self {
        let mut n: i64 = rng.gen_range(1..=12);
        if rng.gen_bool(0.5) {
            n = -n;
        }
        let d: i64 = rng.gen_range(1..=6);
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn parse_literal(s: &str) -> Option<Self> {
        BigRational::from_str(s).ok()
    }

    fn literal(&self) -> String {
        self.to_string()
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

/// The tract of a field: units are the nonzero scalars and `N_G` is the set
/// of formal sums whose ring sum is zero.
#[derive(Clone, Default)]
pub struct FieldTract<S> {
    _scalar: PhantomData<S>,
}

impl<S> FieldTract<S> {
    pub fn new() -> Self {
        FieldTract {
            _scalar: PhantomData,
        }
    }
}

impl<S: FieldScalar> fmt::Debug for FieldTract<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldTract({})", S::field_id())
    }
}

/// Ring sum of a formal sum.
pub fn ring_sum<S: FieldScalar>(s: &FormalSum<S>) -> S {
    s.units().fold(S::zero(), |acc, u| acc + u.clone())
}

impl<S: FieldScalar> Tract for FieldTract<S> {
    type Unit = S;

    fn id(&self) -> String {
        S::field_id()
    }

    fn one(&self) -> S {
        S::one()
    }

    fn epsilon(&self) -> S {
        S::zero() - S::one()
    }

    fn mul(&self, a: &S, b: &S) -> S {
        a.clone() * b.clone()
    }

    fn inv(&self, a: &S) -> S {
        S::one() / a.clone()
    }

    fn is_null(&self, s: &FormalSum<S>) -> bool {
        ring_sum(s).is_zero()
    }

    fn units(&self) -> Option<Vec<S>> {
        S::nonzero_elements()
    }

    fn random_unit(&self, rng: &mut SampleRng) -> S {
        S::random_nonzero(rng)
    }

    fn random_null_sum(&self, rng: &mut SampleRng, terms: usize) -> Option<FormalSum<S>> {
        let mut s = FormalSum::new();
        for _ in 1..terms.max(2) {
            s.push(S::random_nonzero(rng));
        }
        let total = ring_sum(&s);
        if !total.is_zero() {
            s.push(S::zero() - total);
        }
        Some(s)
    }

    fn hyper_add(&self, x: &Option<S>, y: &Option<S>) -> Option<Vec<Option<S>>> {
        let z = x.clone().unwrap_or_else(S::zero) + y.clone().unwrap_or_else(S::zero);
        Some(vec![if z.is_zero() { None } else { Some(z) }])
    }

    fn check_unit(&self, a: &S) -> Result<()> {
        if a.is_zero() {
            Err(invalid(self, "zero is not a unit"))
        } else {
            Ok(())
        }
    }

    fn parse_unit(&self, s: &str) -> Result<S> {
        let v = S::parse_literal(s).ok_or_else(|| invalid(self, format!("cannot parse `{s}`")))?;
        self.check_unit(&v)?;
        Ok(v)
    }

    fn format_unit(&self, a: &S) -> String {
        a.literal()
    }

    fn dd_hint(&self) -> DdHint<S> {
        DdHint::Holds
    }
}

/// Sign of a nonzero rational, as used by the homomorphism `Q -> S`.
pub fn rational_sign(q: &BigRational) -> Option<bool> {
    if q.is_zero() {
        None
    } else {
        Some(q.is_negative())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tract::hypersum_contains;

    type Gf3 = FieldTract<Fp<3>>;
    type Q = FieldTract<BigRational>;

    #[test]
    fn gf3_arithmetic() {
        let a = Fp::<3>::new(2);
        assert_eq!(a * a, Fp::new(1));
        assert_eq!(a.inverse(), a);
        assert_eq!(-a, Fp::new(1));
        assert_eq!(Gf3::new().epsilon(), Fp::new(2));
    }

    #[test]
    fn gf3_null_sums() {
        let t = Gf3::new();
        let one = Fp::<3>::new(1);
        assert!(t.is_null(&FormalSum::from_terms([(one, 3)])));
        assert!(!t.is_null(&FormalSum::from_terms([(one, 2)])));
    }

    #[test]
    fn rationals() {
        let t = Q::new();
        let h = t.parse_unit("1/2").unwrap();
        let m1 = t.parse_unit("-1").unwrap();
        let s = FormalSum::from_terms([(h.clone(), 2)]);
        assert!(hypersum_contains(&t, &s, &Some(t.one())));
        assert!(!hypersum_contains(&t, &s, &Some(m1)));
        assert!(t.parse_unit("0").is_err());
        assert!(t.parse_unit("1/0").is_err());
        assert_eq!(t.format_unit(&h), "1/2");
    }
}
