//! The dyadic partial field `D = (<-1, 2>, Z[1/2])`.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;

use super::signs::Sign;
use crate::error::Result;
use crate::tract::{invalid, FormalSum, SampleRng, Tract};

/// The unit `sign · 2^exp`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dyadic {
    pub sign: Sign,
    pub exp: i32,
}

impl Dyadic {
    pub fn new(sign: Sign, exp: i32) -> Self {
        Dyadic { sign, exp }
    }
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct DyadicPartialField;

/// Exact ring sum, scaled by `2^-min_exp` so that it is an integer.
fn scaled_sum(s: &FormalSum<Dyadic>) -> BigInt {
    let Some(min) = s.terms().iter().map(|(u, _)| u.exp).min() else {
        return BigInt::zero();
    };
    s.terms().iter().fold(BigInt::zero(), |acc, (u, k)| {
        let mag = BigInt::from(*k) << (u.exp - min) as usize;
        match u.sign {
            Sign::Pos => acc + mag,
            Sign::Neg => acc - mag,
        }
    })
}

impl Tract for DyadicPartialField {
    type Unit = Dyadic;

    fn id(&self) -> String {
        "pf:dyadic".into()
    }

    fn one(&self) -> Dyadic {
        Dyadic::new(Sign::Pos, 0)
    }

    fn epsilon(&self) -> Dyadic {
        Dyadic::new(Sign::Neg, 0)
    }

    fn mul(&self, a: &Dyadic, b: &Dyadic) -> Dyadic {
        Dyadic::new(a.sign.mul(b.sign), a.exp + b.exp)
    }

    fn inv(&self, a: &Dyadic) -> Dyadic {
        Dyadic::new(a.sign, -a.exp)
    }

    fn is_null(&self, s: &FormalSum<Dyadic>) -> bool {
        scaled_sum(s).is_zero()
    }

    fn random_unit(&self, rng: &mut SampleRng) -> Dyadic {
        let sign = if rng.gen_bool(0.5) {
            Sign::Pos
        } else {
            Sign::Neg
        };
        Dyadic::new(sign, rng.gen_range(-4..=4))
    }

    fn random_null_sum(&self, rng: &mut SampleRng, terms: usize) -> Option<FormalSum<Dyadic>> {
        // 2^k = 2^(k-1) + 2^(k-1), optionally split further
        let k = rng.gen_range(-3..=3);
        let mut s = FormalSum::from_units([Dyadic::new(Sign::Neg, k)]);
        let mut parts = vec![k];
        while parts.len() + 1 < terms.max(3) {
            let i = rng.gen_range(0..parts.len());
            let e = parts.swap_remove(i);
            parts.push(e - 1);
            parts.push(e - 1);
        }
        for e in parts {
            s.push(Dyadic::new(Sign::Pos, e));
        }
        let g = self.random_unit(rng);
        Some(self.scale_sum(&g, &s))
    }

    fn hyper_add(&self, x: &Option<Dyadic>, y: &Option<Dyadic>) -> Option<Vec<Option<Dyadic>>> {
        let mut s = FormalSum::new();
        s.push_elem(*x);
        s.push_elem(*y);
        // the ring sum lies in P only if it is zero or ±2^k
        let Some(min) = s.terms().iter().map(|(u, _)| u.exp).min() else {
            return Some(vec![None]);
        };
        let v = scaled_sum(&s);
        if v.is_zero() {
            return Some(vec![None]);
        }
        let sign = if v < BigInt::zero() {
            Sign::Neg
        } else {
            Sign::Pos
        };
        let mag = if sign == Sign::Neg { -v } else { v };
        let tz = mag.trailing_zeros().unwrap_or(0);
        if mag >> tz as usize == BigInt::from(1) {
            Some(vec![Some(Dyadic::new(sign, min + tz as i32))])
        } else {
            Some(vec![])
        }
    }

    fn parse_unit(&self, s: &str) -> Result<Dyadic> {
        let (sign, rest) = match s.strip_prefix('-') {
            Some(r) => (Sign::Neg, r),
            None => (Sign::Pos, s.strip_prefix('+').unwrap_or(s)),
        };
        if rest == "1" {
            return Ok(Dyadic::new(sign, 0));
        }
        let exp = rest
            .strip_prefix("2^")
            .and_then(|e| e.parse::<i32>().ok())
            .ok_or_else(|| invalid(self, format!("`{s}` is not of the form ±2^k")))?;
        Ok(Dyadic::new(sign, exp))
    }

    fn format_unit(&self, a: &Dyadic) -> String {
        let sign = if a.sign == Sign::Neg { "-" } else { "" };
        if a.exp == 0 {
            format!("{sign}1")
        } else {
            format!("{sign}2^{}", a.exp)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplication() {
        let d = DyadicPartialField;
        let a = d.parse_unit("-2^1").unwrap();
        let b = d.parse_unit("2^2").unwrap();
        assert_eq!(d.format_unit(&d.mul(&a, &b)), "-2^3");
    }

    #[test]
    fn null_sums() {
        let d = DyadicPartialField;
        let half = Dyadic::new(Sign::Pos, -1);
        let s = FormalSum::from_terms([(half, 2), (Dyadic::new(Sign::Neg, 0), 1)]);
        assert!(d.is_null(&s));
        let s = FormalSum::from_terms([(half, 1), (Dyadic::new(Sign::Neg, 0), 1)]);
        assert!(!d.is_null(&s));
    }

    #[test]
    fn hyper_add_stays_in_partial_field() {
        let d = DyadicPartialField;
        let one = Some(d.one());
        assert_eq!(
            d.hyper_add(&one, &one),
            Some(vec![Some(Dyadic::new(Sign::Pos, 1))])
        );
        let three = d.hyper_add(&Some(Dyadic::new(Sign::Pos, 1)), &one).unwrap();
        assert!(three.is_empty());
    }
}
