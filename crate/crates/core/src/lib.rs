//! Matroids over tracts: tracts and hyperfields, vectors, classical
//! matroids, Grassmann-Plücker functions and circuit axiom systems.

pub mod axioms;
pub mod catalog;
pub mod error;
pub mod gp;
pub mod homs;
pub mod io;
pub mod linalg;
pub mod matroid;
pub mod subset;
pub mod tract;
pub mod tracts;
pub mod vectors;

pub use error::{Error, Result};
pub use subset::Subset;
pub use tract::{CheckBudget, Element, FormalSum, Report, Status, Tract, TractHom};

use num_rational::BigRational;

pub type Rational = BigRational;
pub type Tropical = tracts::TropicalHyperfield<BigRational>;
pub type Triangle = tracts::TriangleHyperfield<BigRational>;
pub type Phase = tracts::PhaseHyperfield<f64>;
pub type RationalField = tracts::FieldTract<BigRational>;
pub type Gf2 = tracts::FieldTract<tracts::Fp<2>>;
pub type Gf3 = tracts::FieldTract<tracts::Fp<3>>;
