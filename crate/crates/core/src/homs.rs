//! Tract homomorphisms given by unit maps, and the built-in ones.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::tract::{Element, Tract, TractHom};
use crate::tracts::{
    FieldScalar, FieldTract, Krasner, RegularPartialField, Sign, SignHyperfield,
    TropicalHyperfield, WeakSignHyperfield,
};

type UnitFn<S, T> = dyn Fn(&<S as Tract>::Unit) -> Element<<T as Tract>::Unit> + Send + Sync;

/// A homomorphism described by a closure on units.
#[derive(Clone)]
pub struct MapHom<S: Tract, T: Tract> {
    name: String,
    source: S,
    target: T,
    f: Arc<UnitFn<S, T>>,
}

impl<S: Tract, T: Tract> MapHom<S, T> {
    pub fn new(
        name: impl Into<String>,
        source: S,
        target: T,
        f: impl Fn(&S::Unit) -> Element<T::Unit> + Send + Sync + 'static,
    ) -> Self {
        MapHom {
            name: name.into(),
            source,
            target,
            f: Arc::new(f),
        }
    }
}

impl<S: Tract, T: Tract> fmt::Debug for MapHom<S, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} -> {}",
            self.name,
            self.source.id(),
            self.target.id()
        )
    }
}

impl<S: Tract, T: Tract> TractHom for MapHom<S, T> {
    type Source = S;
    type Target = T;

    fn name(&self) -> String {
        self.name.clone()
    }

    fn source(&self) -> &S {
        &self.source
    }

    fn target(&self) -> &T {
        &self.target
    }

    fn map_unit(&self, u: &S::Unit) -> Element<T::Unit> {
        (self.f)(u)
    }
}

/// The terminal map `ψ: F -> K`.
pub fn psi<S: Tract + 'static>(source: S) -> MapHom<S, Krasner> {
    let name = format!("psi: {} -> krasner", source.id());
    MapHom::new(name, source, Krasner, |_| Some(()))
}

/// `σ: Q -> S`, the sign map.
pub fn sigma() -> MapHom<FieldTract<BigRational>, SignHyperfield> {
    MapHom::new(
        "sigma",
        FieldTract::new(),
        SignHyperfield,
        |q: &BigRational| {
            Some(if q.is_negative() {
                Sign::Neg
            } else {
                Sign::Pos
            })
        },
    )
}

/// The map out of the regular partial field sending `-1` to `ε` of the target.
pub fn from_regular<T: Tract + 'static>(target: T) -> MapHom<RegularPartialField, T> {
    let name = format!("u0 -> {}", target.id());
    let (one, eps) = (target.one(), target.epsilon());
    MapHom::new(name, RegularPartialField, target, move |s: &Sign| {
        Some(match s {
            Sign::Pos => one.clone(),
            Sign::Neg => eps.clone(),
        })
    })
}

/// The inclusion `S -> W`.
pub fn sign_to_weak() -> MapHom<SignHyperfield, WeakSignHyperfield> {
    MapHom::new(
        "sign -> weaksign",
        SignHyperfield,
        WeakSignHyperfield,
        |s: &Sign| Some(*s),
    )
}

pub fn identity<T: Tract + 'static>(t: T) -> MapHom<T, T> {
    let name = format!("identity on {}", t.id());
    MapHom::new(name, t.clone(), t, |u: &T::Unit| Some(u.clone()))
}

/// Exponent of `p` in a nonzero integer.
fn valuation(n: &BigInt, p: &BigInt) -> i64 {
    let mut n = n.abs();
    let mut v = 0;
    while !n.is_zero() && n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    v
}

/// The `p`-adic absolute value `|x|_p = p^(-v_p(x))` of a nonzero rational.
pub fn padic_abs(q: &BigRational, p: u32) -> BigRational {
    let pb = BigInt::from(p);
    let v = valuation(q.numer(), &pb) - valuation(q.denom(), &pb);
    let pow = num_traits::pow(pb, v.unsigned_abs() as usize);
    if v >= 0 {
        BigRational::new(BigInt::one(), pow)
    } else {
        BigRational::from_integer(pow)
    }
}

/// `v_p: Q -> T`, the `p`-adic absolute value into the tropical hyperfield.
pub fn vp(p: u32) -> MapHom<FieldTract<BigRational>, TropicalHyperfield<BigRational>> {
    MapHom::new(
        format!("vp:{p}"),
        FieldTract::new(),
        TropicalHyperfield::new(),
        move |q: &BigRational| Some(padic_abs(q, p)),
    )
}

/// Reduction of field scalars into another field given by a scalar map.
pub fn field_map<A: FieldScalar + 'static, B: FieldScalar + 'static>(
    name: &str,
    f: impl Fn(&A) -> B + Send + Sync + 'static,
) -> MapHom<FieldTract<A>, FieldTract<B>> {
    MapHom::new(name, FieldTract::new(), FieldTract::new(), move |a: &A| {
        let b = f(a);
        if b.is_zero() {
            None
        } else {
            Some(b)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tract::{verify_hom, CheckBudget, Status};
    use crate::tracts::Fp;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn padic_values() {
        assert_eq!(padic_abs(&rat(12, 1), 2), rat(1, 4));
        assert_eq!(padic_abs(&rat(3, 8), 2), rat(8, 1));
        assert_eq!(padic_abs(&rat(-5, 7), 3), rat(1, 1));
    }

    #[test]
    fn sigma_is_sign() {
        assert_eq!(sigma().apply(&Some(rat(-7, 2))), Some(Sign::Neg));
        assert_eq!(sigma().apply(&None), None);
    }

    #[test]
    fn builtins_verify() {
        let b = CheckBudget {
            samples: 2000,
            ..CheckBudget::default()
        };
        assert_eq!(verify_hom(&psi(SignHyperfield), &b).status, Status::Pass);
        assert_eq!(verify_hom(&sign_to_weak(), &b).status, Status::Pass);
        assert_eq!(
            verify_hom(&from_regular(SignHyperfield), &b).status,
            Status::Pass
        );
        assert_eq!(
            verify_hom(&from_regular(FieldTract::<Fp<2>>::new()), &b).status,
            Status::Pass
        );
        assert_eq!(
            verify_hom(&from_regular(FieldTract::<Fp<3>>::new()), &b).status,
            Status::Pass
        );
        assert_eq!(verify_hom(&sigma(), &b).status, Status::SampledPass);
        assert_eq!(verify_hom(&vp(2), &b).status, Status::SampledPass);
    }

    #[test]
    fn weak_to_sign_is_not_a_hom() {
        // 1 + 1 + 1 is null in W but not in S
        let h = MapHom::new(
            "weak -> sign",
            WeakSignHyperfield,
            SignHyperfield,
            |s: &Sign| Some(*s),
        );
        let r = verify_hom(&h, &CheckBudget::default());
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.failed_axiom.as_deref(), Some("null-preserving"));
    }

    #[test]
    fn unit_to_zero_rejected() {
        let h = MapHom::new("broken", SignHyperfield, Krasner, |s: &Sign| match s {
            Sign::Pos => Some(()),
            Sign::Neg => None,
        });
        let r = verify_hom(&h, &CheckBudget::default());
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.failed_axiom.as_deref(), Some("multiplicative"));
    }
}
