//! The phase hyperfield: units are points of the unit circle, stored as
//! angles in `[0, 2π)`. A sum is null iff some strictly positive real
//! combination of its terms vanishes.

use std::fmt;

use num_traits::{Float, FloatConst};
use rand::Rng;

use crate::error::Result;
use crate::tract::{invalid, DdHint, Element, FormalSum, SampleRng, Tract};

pub const DEFAULT_TOL: f64 = 1e-9;

/// How sums whose widest gap is within tolerance of `π` are judged.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Boundary {
    /// Null only when every point lies on the line through the gap.
    Strict,
    /// Always null: the closure of the null set, for numeric input whose
    /// antipodal pairs are only known approximately.
    Closed,
}

/// Phase hyperfield with separate tolerances for unit equality and for the
/// boundary case of the nullity test.
#[derive(Clone, Copy, PartialEq)]
pub struct PhaseHyperfield<F> {
    pub eq_tol: F,
    pub null_tol: F,
    pub boundary: Boundary,
}

impl<F: Float> Default for PhaseHyperfield<F> {
    fn default() -> Self {
        let tol = F::from(DEFAULT_TOL).expect("tolerance fits");
        PhaseHyperfield {
            eq_tol: tol,
            null_tol: tol,
            boundary: Boundary::Strict,
        }
    }
}

impl<F: Float> PhaseHyperfield<F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_null_tol(null_tol: F) -> Self {
        PhaseHyperfield {
            null_tol,
            ..Self::default()
        }
    }

    /// Boundary sums count as null. The hypersums are then closed arcs, so
    /// this is no longer the phase hyperfield proper.
    pub fn closed(null_tol: F) -> Self {
        PhaseHyperfield {
            null_tol,
            boundary: Boundary::Closed,
            ..Self::default()
        }
    }
}

impl<F: fmt::Debug> fmt::Debug for PhaseHyperfield<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PhaseHyperfield(tol = {:?}, {:?})",
            self.null_tol, self.boundary
        )
    }
}

fn two_pi<F: Float + FloatConst>() -> F {
    F::TAU()
}

/// Reduces an angle into `[0, 2π)`.
pub fn normalize<F: Float + FloatConst>(a: F) -> F {
    let t = two_pi::<F>();
    let r = a % t;
    let r = if r < F::zero() { r + t } else { r };
    if r >= t {
        F::zero()
    } else {
        r
    }
}

/// Distance on the circle between two angles.
pub fn circular_distance<F: Float + FloatConst>(a: F, b: F) -> F {
    let d = normalize(a - b);
    d.min(two_pi::<F>() - d)
}

impl<F: Float + FloatConst + fmt::Debug + fmt::Display + Send + Sync> PhaseHyperfield<F> {
    /// Nullity test on a list of angles.
    ///
    /// With the angles sorted, let `g` be the widest gap between consecutive
    /// points. A gap wider than `π` puts every point in an open half-plane; a
    /// narrower one surrounds the origin. At `g = π` the combination vanishes
    /// only if every point lies on the line through the gap's endpoints.
    pub fn null_angles(&self, angles: &[F]) -> bool {
        if angles.is_empty() {
            return true;
        }
        let mut a: Vec<F> = angles.iter().map(|&x| normalize(x)).collect();
        a.sort_by(|x, y| x.partial_cmp(y).expect("angles are finite"));
        let n = a.len();
        let (mut gap, mut at) = (two_pi::<F>() - a[n - 1] + a[0], n - 1);
        for i in 0..n - 1 {
            let g = a[i + 1] - a[i];
            if g > gap {
                gap = g;
                at = i;
            }
        }
        let pi = F::PI();
        if gap < pi - self.null_tol {
            return true;
        }
        if gap > pi + self.null_tol {
            return false;
        }
        if self.boundary == Boundary::Closed {
            return true;
        }
        let base = a[at];
        a.iter().all(|&x| {
            let d = circular_distance(x, base);
            d <= self.null_tol || (pi - d) <= self.null_tol
        })
    }
}

impl<F: Float + FloatConst + fmt::Debug + fmt::Display + Send + Sync> Tract for PhaseHyperfield<F> {
    type Unit = F;

    fn id(&self) -> String {
        match self.boundary {
            Boundary::Strict => "phase".into(),
            Boundary::Closed => "phase:closed".into(),
        }
    }

    fn one(&self) -> F {
        F::zero()
    }

    fn epsilon(&self) -> F {
        F::PI()
    }

    fn mul(&self, a: &F, b: &F) -> F {
        normalize(*a + *b)
    }

    fn inv(&self, a: &F) -> F {
        normalize(-*a)
    }

    /// Complex conjugation.
    fn involution(&self, a: &F) -> F {
        normalize(-*a)
    }

    fn is_null(&self, s: &FormalSum<F>) -> bool {
        let angles: Vec<F> = s.terms().iter().map(|(u, _)| *u).collect();
        self.null_angles(&angles)
    }

    fn unit_eq(&self, a: &F, b: &F) -> bool {
        circular_distance(*a, *b) <= self.eq_tol
    }

    fn random_unit(&self, rng: &mut SampleRng) -> F {
        // mix lattice angles (to hit boundary cases) with generic ones
        if rng.gen_bool(0.5) {
            let k: u32 = rng.gen_range(0..8);
            F::from(k).unwrap() * F::FRAC_PI_4()
        } else {
            F::from(rng.gen_range(0.0..std::f64::consts::TAU)).unwrap()
        }
    }

    fn random_null_sum(&self, rng: &mut SampleRng, terms: usize) -> Option<FormalSum<F>> {
        let mut s = FormalSum::new();
        let (mut x, mut y) = (F::zero(), F::zero());
        for _ in 1..terms.max(2) {
            let u = self.random_unit(rng);
            x = x + u.cos();
            y = y + u.sin();
            s.push(u);
        }
        if x.hypot(y) < F::from(1e-6).unwrap() {
            return Some(s);
        }
        // close the polygon with the antipode of the resultant
        s.push(normalize(y.atan2(x) + F::PI()));
        Some(s)
    }

    fn hyper_add(&self, x: &Element<F>, y: &Element<F>) -> Option<Vec<Element<F>>> {
        match (x, y) {
            (None, None) => Some(vec![None]),
            (Some(a), None) | (None, Some(a)) => Some(vec![Some(*a)]),
            (Some(a), Some(b)) if self.unit_eq(a, b) => Some(vec![Some(*a)]),
            (Some(a), Some(b))
                if self.unit_eq(a, &self.neg(b)) && self.boundary == Boundary::Strict =>
            {
                Some(vec![None, Some(*a), Some(*b)])
            }
            _ => None,
        }
    }

    fn check_unit(&self, a: &F) -> Result<()> {
        if a.is_finite() {
            Ok(())
        } else {
            Err(invalid(self, "angle must be finite"))
        }
    }

    /// Accepts `angle:<radians>` as well as `1`, `-1`, `i`, `-i`.
    fn parse_unit(&self, s: &str) -> Result<F> {
        let pi = F::PI();
        let half = F::FRAC_PI_2();
        let v = match s {
            "1" => F::zero(),
            "-1" => pi,
            "i" => half,
            "-i" => pi + half,
            _ => {
                let body = s.strip_prefix("angle:").ok_or_else(|| {
                    invalid(self, format!("`{s}` is not of the form angle:<float>"))
                })?;
                let f: f64 = body
                    .trim()
                    .parse()
                    .map_err(|_| invalid(self, format!("cannot parse angle `{body}`")))?;
                F::from(f).ok_or_else(|| invalid(self, "angle out of range"))?
            }
        };
        self.check_unit(&v)?;
        Ok(normalize(v))
    }

    fn format_unit(&self, a: &F) -> String {
        format!("angle:{a}")
    }

    fn dd_hint(&self) -> DdHint<F> {
        let (one, minus, i) = (Some(F::zero()), Some(F::PI()), Some(F::FRAC_PI_2()));
        DdHint::Witness([one, minus, one, i, i])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tract::hypersum_contains;
    use std::f64::consts::PI;

    type P = PhaseHyperfield<f64>;

    #[test]
    fn closed_boundary() {
        let off_line = [3.1, 3.1 + PI, 3.3];
        assert!(!P::new().null_angles(&off_line));
        assert!(P::closed(1e-6).null_angles(&off_line));
        assert!(!P::closed(1e-6).null_angles(&[3.1, 0.1, 0.0, 3.1]));
        assert!(P::closed(1e-6).hyper_add(&Some(0.0), &Some(PI)).is_none());
        assert_eq!(P::closed(1e-6).id(), "phase:closed");
    }

    #[test]
    fn three_points_in_half_plane_not_null() {
        let p = P::new();
        assert!(!p.null_angles(&[0.0, 0.5, PI]));
        assert!(p.null_angles(&[0.0, 2.0, 4.0]));
        assert!(p.null_angles(&[0.0, PI]));
        assert!(!p.null_angles(&[0.0]));
        assert!(p.null_angles(&[]));
    }

    #[test]
    fn opposite_pair_gives_whole_line() {
        let p = P::new();
        let s = FormalSum::from_units([0.0, PI]);
        for w in [None, Some(0.0), Some(PI)] {
            assert!(hypersum_contains(&p, &s, &w));
        }
        assert!(!hypersum_contains(&p, &s, &Some(PI / 2.0)));
    }

    #[test]
    fn sum_of_two_is_open_arc() {
        let p = P::new();
        let s = FormalSum::from_units([0.0, PI / 2.0]);
        assert!(hypersum_contains(&p, &s, &Some(PI / 4.0)));
        assert!(!hypersum_contains(&p, &s, &Some(PI / 2.0)));
        assert!(!hypersum_contains(&p, &s, &Some(PI)));
    }

    #[test]
    fn arithmetic_wraps() {
        let p = P::new();
        assert!(p.unit_eq(&p.mul(&(1.5 * PI), &PI), &(PI / 2.0)));
        assert!(p.unit_eq(&p.involution(&(PI / 3.0)), &(5.0 * PI / 3.0)));
        assert!(p.unit_eq(&p.parse_unit("angle:7.0").unwrap(), &(7.0 - 2.0 * PI)));
        assert!(p.parse_unit("angle:x").is_err());
    }
}
