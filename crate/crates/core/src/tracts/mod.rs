//! Built-in tracts.

use std::fmt::Debug;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Num;
use rand::Rng;

use crate::tract::SampleRng;

pub mod dyadic;
pub mod field;
pub mod phase;
pub mod signs;
pub mod triangle;
pub mod tropical;

pub use dyadic::{Dyadic, DyadicPartialField};
pub use field::{FieldScalar, FieldTract, Fp};
pub use phase::{Boundary, PhaseHyperfield};
pub use signs::{
    InitialTract, Krasner, RegularPartialField, Sign, SignHyperfield, WeakSignHyperfield,
};
pub use triangle::TriangleHyperfield;
pub use tropical::TropicalHyperfield;

/// Ordered scalars whose positive elements serve as units of the tropical
/// and triangle hyperfields.
pub trait OrderedScalar: Num + Clone + PartialOrd + Debug + Send + Sync {
    fn parse_literal(s: &str) -> Option<Self>;

    fn literal(&self) -> String;

    /// A positive value from a small pool, so that ties occur in sampling.
    fn random_positive(rng: &mut SampleRng) -> Self;
}

const POOL: [(i64, i64); 9] = [
    (1, 4),
    (1, 3),
    (1, 2),
    (2, 3),
    (1, 1),
    (3, 2),
    (2, 1),
    (3, 1),
    (4, 1),
];

impl OrderedScalar for BigRational {
    fn parse_literal(s: &str) -> Option<Self> {
        BigRational::from_str(s.trim()).ok()
    }

    fn literal(&self) -> String {
        self.to_string()
    }

    fn random_positive(rng: &mut SampleRng) -> Self {
        let (n, d) = POOL[rng.gen_range(0..POOL.len())];
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }
}

impl OrderedScalar for f64 {
    fn parse_literal(s: &str) -> Option<Self> {
        s.trim().parse().ok().filter(|x: &f64| x.is_finite())
    }

    fn literal(&self) -> String {
        self.to_string()
    }

    fn random_positive(rng: &mut SampleRng) -> Self {
        let (n, d) = POOL[rng.gen_range(0..POOL.len())];
        n as f64 / d as f64
    }
}
