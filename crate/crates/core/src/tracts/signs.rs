//! Tracts whose unit group is `{1}` or `{±1}`: the Krasner and sign
//! hyperfields, the weak sign hyperfield, the initial tract and the regular
//! partial field.

use std::fmt;

use rand::Rng;

use crate::error::Result;
use crate::tract::{invalid, DdHint, FormalSum, SampleRng, Tract};

/// A unit of a tract with group `{±1}`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn mul(self, o: Sign) -> Sign {
        if self == o {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn from_parity(odd: bool) -> Sign {
        if odd {
            Sign::Neg
        } else {
            Sign::Pos
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Pos => "1",
            Sign::Neg => "-1",
        })
    }
}

pub(crate) fn parse_sign<T: Tract>(t: &T, s: &str) -> Result<Sign> {
    match s {
        "1" | "+1" => Ok(Sign::Pos),
        "-1" => Ok(Sign::Neg),
        _ => Err(invalid(
            t,
            format!("`{s}` is not a sign (expected 1 or -1)"),
        )),
    }
}

/// Positive and negative term counts.
fn counts(s: &FormalSum<Sign>) -> (u32, u32) {
    s.terms().iter().fold((0, 0), |(p, n), (u, k)| match u {
        Sign::Pos => (p + k, n),
        Sign::Neg => (p, n + k),
    })
}

macro_rules! sign_group {
    () => {
        type Unit = Sign;

        fn one(&self) -> Sign {
            Sign::Pos
        }

        fn epsilon(&self) -> Sign {
            Sign::Neg
        }

        fn mul(&self, a: &Sign, b: &Sign) -> Sign {
            a.mul(*b)
        }

        fn inv(&self, a: &Sign) -> Sign {
            *a
        }

        fn units(&self) -> Option<Vec<Sign>> {
            Some(vec![Sign::Pos, Sign::Neg])
        }

        fn random_unit(&self, rng: &mut SampleRng) -> Sign {
            if rng.gen_bool(0.5) {
                Sign::Pos
            } else {
                Sign::Neg
            }
        }

        fn parse_unit(&self, s: &str) -> Result<Sign> {
            parse_sign(self, s)
        }

        fn format_unit(&self, a: &Sign) -> String {
            a.to_string()
        }
    };
}

/// The Krasner hyperfield `K = {0, 1}` with `1 ⊞ 1 = {0, 1}`.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct Krasner;

impl Tract for Krasner {
    type Unit = ();

    fn id(&self) -> String {
        "krasner".into()
    }

    fn one(&self) {}

    fn epsilon(&self) {}

    fn mul(&self, _: &(), _: &()) {}

    fn inv(&self, _: &()) {}

    /// Null unless the sum has exactly one term.
    fn is_null(&self, s: &FormalSum<()>) -> bool {
        s.len() != 1
    }

    fn units(&self) -> Option<Vec<()>> {
        Some(vec![()])
    }

    fn random_unit(&self, _: &mut SampleRng) {}

    fn parse_unit(&self, s: &str) -> Result<()> {
        match s {
            "1" => Ok(()),
            _ => Err(invalid(self, format!("`{s}` is not an element of K"))),
        }
    }

    fn format_unit(&self, _: &()) -> String {
        "1".into()
    }

    fn dd_hint(&self) -> DdHint<()> {
        DdHint::Holds
    }
}

/// The hyperfield of signs `S`.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct SignHyperfield;

impl Tract for SignHyperfield {
    sign_group!();

    fn id(&self) -> String {
        "sign".into()
    }

    fn is_null(&self, s: &FormalSum<Sign>) -> bool {
        let (p, n) = counts(s);
        (p == 0) == (n == 0)
    }

    fn dd_hint(&self) -> DdHint<Sign> {
        DdHint::Holds
    }
}

/// The weak hyperfield of signs `W = W({±1}, -1)`: any two nonzero
/// summands that are not negatives of each other add to `{±1}`.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct WeakSignHyperfield;

impl Tract for WeakSignHyperfield {
    sign_group!();

    fn id(&self) -> String {
        "weaksign".into()
    }

    fn is_null(&self, s: &FormalSum<Sign>) -> bool {
        let (p, n) = counts(s);
        match (p, n) {
            (0, 0) => true,
            (0, k) | (k, 0) => k >= 3,
            _ => true,
        }
    }
}

/// The initial tract `I`: `G = {±1}`, `N_G = {0, 1 + (-1)}`.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct InitialTract;

impl Tract for InitialTract {
    sign_group!();

    fn id(&self) -> String {
        "initial".into()
    }

    fn is_null(&self, s: &FormalSum<Sign>) -> bool {
        matches!(counts(s), (0, 0) | (1, 1))
    }
}

/// The regular partial field `U0 = ({±1}, Z)`.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct RegularPartialField;

impl Tract for RegularPartialField {
    sign_group!();

    fn id(&self) -> String {
        "pf:regular".into()
    }

    /// Null iff the integer sum vanishes.
    fn is_null(&self, s: &FormalSum<Sign>) -> bool {
        let (p, n) = counts(s);
        p == n
    }

    fn random_null_sum(&self, rng: &mut SampleRng, terms: usize) -> Option<FormalSum<Sign>> {
        let k = (terms / 2).max(1) as u32;
        let k = rng.gen_range(1..=k);
        Some(FormalSum::from_terms([(Sign::Pos, k), (Sign::Neg, k)]))
    }
}
