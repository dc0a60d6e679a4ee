//! The triangle hyperfield: units are positive scalars and `a ⊞ b` is the
//! set of lengths `c` for which a Euclidean triangle with sides `a, b, c`
//! exists.

use std::fmt;
use std::marker::PhantomData;

use rand::Rng;

use super::tropical::max_term;
use super::OrderedScalar;
use crate::error::Result;
use crate::tract::{invalid, DdHint, Element, FormalSum, SampleRng, Tract};

#[derive(Clone, Default)]
pub struct TriangleHyperfield<S> {
    _scalar: PhantomData<S>,
}

impl<S> TriangleHyperfield<S> {
    pub fn new() -> Self {
        TriangleHyperfield {
            _scalar: PhantomData,
        }
    }
}

impl<S> fmt::Debug for TriangleHyperfield<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("TriangleHyperfield")
    }
}

fn total<S: OrderedScalar>(s: &FormalSum<S>) -> S {
    s.units().fold(S::zero(), |acc, u| acc + u.clone())
}

impl<S: OrderedScalar> Tract for TriangleHyperfield<S> {
    type Unit = S;

    fn id(&self) -> String {
        "triangle".into()
    }

    fn one(&self) -> S {
        S::one()
    }

    fn epsilon(&self) -> S {
        S::one()
    }

    fn mul(&self, a: &S, b: &S) -> S {
        a.clone() * b.clone()
    }

    fn inv(&self, a: &S) -> S {
        S::one() / a.clone()
    }

    /// Iterated sums are intervals; `0` lies in one iff the largest term is
    /// at most the sum of the others, i.e. `2·max ≤ total`.
    fn is_null(&self, s: &FormalSum<S>) -> bool {
        match max_term(s) {
            None => true,
            Some((m, _)) => m.clone() + m <= total(s),
        }
    }

    fn random_unit(&self, rng: &mut SampleRng) -> S {
        S::random_positive(rng)
    }

    fn random_null_sum(&self, rng: &mut SampleRng, terms: usize) -> Option<FormalSum<S>> {
        let mut s = FormalSum::new();
        for _ in 1..terms.max(2) {
            s.push(S::random_positive(rng));
        }
        // a last term no larger than the rest keeps the polygon inequality
        let rest = total(&s);
        let last = if rng.gen_bool(0.5) {
            rest
        } else {
            max_term(&s).map(|(m, _)| m).unwrap_or_else(S::one)
        };
        s.push(last);
        Some(s)
    }

    fn hyper_add(&self, x: &Element<S>, y: &Element<S>) -> Option<Vec<Element<S>>> {
        match (x, y) {
            (None, None) => Some(vec![None]),
            (Some(a), None) | (None, Some(a)) => Some(vec![Some(a.clone())]),
            _ => None,
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
        let (one, two) = (Some(S::one()), Some(S::one() + S::one()));
        DdHint::Witness([two.clone(), one.clone(), two, one, None])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tract::hypersum_contains;
    use num_rational::BigRational;

    type V = TriangleHyperfield<BigRational>;

    fn q(s: &str) -> BigRational {
        V::new().parse_unit(s).unwrap()
    }

    #[test]
    fn degenerate_triangles_count() {
        let v = V::new();
        assert!(v.is_null(&FormalSum::from_terms([(q("1"), 2)])));
        assert!(v.is_null(&FormalSum::from_units([q("1"), q("2"), q("3")])));
        assert!(!v.is_null(&FormalSum::from_units([q("1"), q("2"), q("4")])));
    }

    #[test]
    fn four_against_three_ones() {
        let v = V::new();
        let s = FormalSum::from_terms([(q("4"), 1), (q("1"), 3)]);
        assert!(!hypersum_contains(&v, &s, &None));
    }

    #[test]
    fn hypersum_is_an_interval() {
        let v = V::new();
        let s = FormalSum::from_units([q("3"), q("1")]);
        for (w, inside) in [
            ("2", true),
            ("4", true),
            ("3", true),
            ("1", false),
            ("5", false),
        ] {
            assert_eq!(hypersum_contains(&v, &s, &Some(q(w))), inside, "{w}");
        }
    }
}
