//! The tropical hyperfield in multiplicative form: units are the positive
//! scalars, `x ⊞ y = {max(x, y)}` for `x ≠ y` and `x ⊞ x = [0, x]`.

use std::fmt;
use std::marker::PhantomData;

use super::OrderedScalar;
use crate::error::Result;
use crate::tract::{invalid, DdHint, Element, FormalSum, SampleRng, Tract};

#[derive(Clone, Default)]
pub struct TropicalHyperfield<S> {
    _scalar: PhantomData<S>,
}

impl<S> TropicalHyperfield<S> {
    pub fn new() -> Self {
        TropicalHyperfield {
            _scalar: PhantomData,
        }
    }
}

impl<S> fmt::Debug for TropicalHyperfield<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("TropicalHyperfield")
    }
}

/// Largest unit of a nonempty sum and its multiplicity.
pub(crate) fn max_term<S: OrderedScalar>(s: &FormalSum<S>) -> Option<(S, u32)> {
    let mut best: Option<(S, u32)> = None;
    for (u, k) in s.terms() {
        best = match best {
            Some((b, n)) if *u < b => Some((b, n)),
            Some((b, n)) if *u == b => Some((b, n + k)),
            _ => Some((u.clone(), *k)),
        };
    }
    best
}

impl<S: OrderedScalar> Tract for TropicalHyperfield<S> {
    type Unit = S;

    fn id(&self) -> String {
        "tropical".into()
    }

    fn one(&self) -> S {
        S::one()
    }

    /// `1 ⊞ 1` contains `0`, so `-1 = 1`.
    fn epsilon(&self) -> S {
        S::one()
    }

    fn mul(&self, a: &S, b: &S) -> S {
        a.clone() * b.clone()
    }

    fn inv(&self, a: &S) -> S {
        S::one() / a.clone()
    }

    /// Null iff the maximum is attained at least twice.
    fn is_null(&self, s: &FormalSum<S>) -> bool {
        match max_term(s) {
            None => true,
            Some((_, n)) => n >= 2,
        }
    }

    fn random_unit(&self, rng: &mut SampleRng) -> S {
        S::random_positive(rng)
    }

    fn random_null_sum(&self, rng: &mut SampleRng, terms: usize) -> Option<FormalSum<S>> {
        let top = S::random_positive(rng);
        let mut s = FormalSum::from_terms([(top.clone(), 2)]);
        for _ in 2..terms {
            let u = S::random_positive(rng);
            s.push(if u > top { top.clone() } else { u });
        }
        Some(s)
    }

    fn hyper_add(&self, x: &Element<S>, y: &Element<S>) -> Option<Vec<Element<S>>> {
        match (x, y) {
            (None, None) => Some(vec![None]),
            (Some(a), None) | (None, Some(a)) => Some(vec![Some(a.clone())]),
            (Some(a), Some(b)) if a == b => None,
            (Some(a), Some(b)) => Some(vec![Some(if a > b { a.clone() } else { b.clone() })]),
        }
    }

    fn check_unit(&self, a: &S) -> Result<()> {
        if *a > S::zero() {
            Ok(())
        } else {
            Err(invalid(self, "units must be positive"))
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tract::hypersum_contains;
    use num_rational::BigRational;

    type T = TropicalHyperfield<BigRational>;

    fn q(s: &str) -> BigRational {
        T::new().parse_unit(s).unwrap()
    }

    #[test]
    fn multiplication_is_ordinary() {
        let t = T::new();
        assert_eq!(t.mul(&q("2"), &q("3")), q("6"));
        assert_eq!(t.inv(&q("4")), q("1/4"));
    }

    #[test]
    fn null_iff_max_repeated() {
        let t = T::new();
        assert!(t.is_null(&FormalSum::from_terms([(q("3"), 2), (q("1"), 1)])));
        assert!(!t.is_null(&FormalSum::from_terms([(q("3"), 1), (q("1"), 5)])));
        // a ⊞ a = [0, a]
        let s = FormalSum::from_terms([(q("2"), 2)]);
        assert!(hypersum_contains(&t, &s, &Some(q("1/2"))));
        assert!(hypersum_contains(&t, &s, &Some(q("2"))));
        assert!(!hypersum_contains(&t, &s, &Some(q("3"))));
    }

    #[test]
    fn rejects_nonpositive() {
        let t = T::new();
        assert!(t.parse_unit("-1").is_err());
        assert!(t.parse_unit("0").is_err());
        assert_eq!(t.parse_elem("0").unwrap(), None);
    }

    #[test]
    fn works_over_floats() {
        let t = TropicalHyperfield::<f64>::new();
        assert!(t.is_null(&FormalSum::from_terms([(2.5, 2)])));
        assert_eq!(t.hyper_add(&Some(1.0), &Some(2.0)), Some(vec![Some(2.0)]));
    }
}
