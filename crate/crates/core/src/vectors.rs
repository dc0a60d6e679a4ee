//! Vectors in `F^E`: supports, projective equivalence, inner products and
//! support-minimal subsets.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::subset::Subset;
use crate::tract::{Element, FormalSum, Tract};

/// An element of `F^E` with its support cached.
#[derive(Clone, Debug, PartialEq)]
pub struct Vector<U> {
    entries: Vec<Element<U>>,
    support: Subset,
}

impl<U: Clone + PartialEq> Vector<U> {
    pub fn new(entries: Vec<Element<U>>) -> Self {
        let support = Subset::from_indices(entries.iter().positions(Option::is_some));
        Vector { entries, support }
    }

    pub fn zero(m: usize) -> Self {
        Vector::new(vec![None; m])
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, e: usize) -> &Element<U> {
        &self.entries[e]
    }

    pub fn entries(&self) -> &[Element<U>] {
        &self.entries
    }

    pub fn support(&self) -> Subset {
        self.support
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn scale<T: Tract<Unit = U>>(&self, t: &T, g: &U) -> Self {
        Vector {
            entries: self
                .entries
                .iter()
                .map(|x| x.as_ref().map(|x| t.mul(g, x)))
                .collect(),
            support: self.support,
        }
    }

    /// Drops the coordinates in `removed`, re-indexing the rest in order.
    pub fn drop_coords(&self, removed: Subset) -> Self {
        Vector::new(
            self.entries
                .iter()
                .enumerate()
                .filter(|(e, _)| !removed.contains(*e))
                .map(|(_, x)| x.clone())
                .collect(),
        )
    }

    /// Scaled so that the first nonzero coordinate is `1`.
    pub fn normalized<T: Tract<Unit = U>>(&self, t: &T) -> Self {
        match self.support.min() {
            None => self.clone(),
            Some(e) => {
                let lead = self.entries[e].as_ref().expect("support entry");
                self.scale(t, &t.inv(lead))
            }
        }
    }

    pub fn parse<T: Tract<Unit = U>>(t: &T, lits: &[String]) -> Result<Self> {
        Ok(Vector::new(
            lits.iter()
                .map(|s| t.parse_elem(s))
                .collect::<Result<_>>()?,
        ))
    }

    pub fn format<T: Tract<Unit = U>>(&self, t: &T) -> Vec<String> {
        self.entries.iter().map(|x| t.format_elem(x)).collect()
    }
}

fn check_dims<U>(x: &Vector<U>, y: &Vector<U>) -> Result<()> {
    if x.entries.len() != y.entries.len() {
        return Err(Error::GroundSetMismatch(x.entries.len(), y.entries.len()));
    }
    Ok(())
}

/// `Σ X(e)·τ(Y(e))` over the common support.
pub fn inner_product<T: Tract>(
    t: &T,
    x: &Vector<T::Unit>,
    y: &Vector<T::Unit>,
) -> Result<FormalSum<T::Unit>> {
    check_dims(x, y)?;
    let mut s = FormalSum::new();
    for e in x.support.intersection(y.support).iter() {
        s.push_elem(t.mul_elem(x.get(e), &t.involution_elem(y.get(e))));
    }
    Ok(s)
}

pub fn is_orthogonal<T: Tract>(t: &T, x: &Vector<T::Unit>, y: &Vector<T::Unit>) -> Result<bool> {
    Ok(t.is_null(&inner_product(t, x, y)?))
}

/// The unit `g` with `X = g·Y`, if there is one.
pub fn projective_scalar<T: Tract>(
    t: &T,
    x: &Vector<T::Unit>,
    y: &Vector<T::Unit>,
) -> Result<Option<T::Unit>> {
    check_dims(x, y)?;
    if x.is_zero() || y.is_zero() {
        return Err(Error::ZeroVector);
    }
    if x.support != y.support {
        return Ok(None);
    }
    let e = x.support.min().expect("nonzero");
    let g = t.div(x.get(e).as_ref().unwrap(), y.get(e).as_ref().unwrap());
    let ok = x.support.iter().all(|f| {
        t.unit_eq(
            x.get(f).as_ref().unwrap(),
            &t.mul(&g, y.get(f).as_ref().unwrap()),
        )
    });
    Ok(ok.then_some(g))
}

pub fn projectively_equal<T: Tract>(t: &T, x: &Vector<T::Unit>, y: &Vector<T::Unit>) -> bool {
    if x.is_zero() || y.is_zero() {
        return x.is_zero() && y.is_zero() && x.len() == y.len();
    }
    matches!(projective_scalar(t, x, y), Ok(Some(_)))
}

pub fn vectors_eq<T: Tract>(t: &T, x: &Vector<T::Unit>, y: &Vector<T::Unit>) -> bool {
    x.len() == y.len()
        && x.entries
            .iter()
            .zip(&y.entries)
            .all(|(a, b)| t.elem_eq(a, b))
}

/// Whether two families agree up to unit scaling of each member.
pub fn same_projective_set<T: Tract>(t: &T, a: &[Vector<T::Unit>], b: &[Vector<T::Unit>]) -> bool {
    a.iter()
        .all(|x| b.iter().any(|y| projectively_equal(t, x, y)))
        && b.iter()
            .all(|y| a.iter().any(|x| projectively_equal(t, x, y)))
}

/// Keeps one representative per projective class.
pub fn dedup_projective<T: Tract>(
    t: &T,
    vs: impl IntoIterator<Item = Vector<T::Unit>>,
) -> Vec<Vector<T::Unit>> {
    let mut out: Vec<Vector<T::Unit>> = Vec::new();
    for v in vs {
        if !out.iter().any(|w| projectively_equal(t, &v, w)) {
            out.push(v);
        }
    }
    out
}

/// The nonzero vectors whose supports are inclusion-minimal.
pub fn supp_min<U: Clone + PartialEq>(vs: &[Vector<U>]) -> Vec<Vector<U>> {
    vs.iter()
        .filter(|v| !v.is_zero())
        .filter(|v| {
            !vs.iter()
                .any(|w| !w.is_zero() && w.support != v.support && w.support.is_subset(v.support))
        })
        .cloned()
        .collect()
}

/// For each `f`, the sum `ε·X(f) + Σ_i c_i·G_i(f)`; all of them are null
/// exactly when `X` equals the combination in the sense of the tract.
pub fn combination_residual<T: Tract>(
    t: &T,
    x: &Vector<T::Unit>,
    terms: &[(Element<T::Unit>, Vector<T::Unit>)],
) -> Result<Vec<FormalSum<T::Unit>>> {
    for (_, g) in terms {
        check_dims(x, g)?;
    }
    Ok((0..x.len())
        .map(|f| {
            let mut s = FormalSum::new();
            s.push_elem(t.neg_elem(x.get(f)));
            for (c, g) in terms {
                s.push_elem(t.mul_elem(c, g.get(f)));
            }
            s
        })
        .collect())
}

/// Every vector of `F^m`, for finite tracts.
pub fn all_vectors<T: Tract>(t: &T, m: usize) -> Result<Vec<Vector<T::Unit>>> {
    let elems = t
        .elements()
        .ok_or_else(|| Error::UnsupportedScale(format!("tract {} is infinite", t.id())))?;
    if m == 0 {
        return Ok(vec![Vector::new(vec![])]);
    }
    Ok((0..m)
        .map(|_| elems.iter().cloned())
        .multi_cartesian_product()
        .map(Vector::new)
        .collect())
}

/// Largest tract (counting zero) and ground set for full enumeration.
pub const BRUTE_MAX_ELEMENTS: usize = 4;
pub const BRUTE_MAX_GROUND: usize = 6;

/// `SuppMin` of the nonzero vectors orthogonal to every member of `c`,
/// found by enumerating `F^E`.
pub fn brute_force_perp_suppmin<T: Tract>(
    t: &T,
    m: usize,
    c: &[Vector<T::Unit>],
) -> Result<Vec<Vector<T::Unit>>> {
    let n = t.elements().map_or(usize::MAX, |e| e.len());
    if n > BRUTE_MAX_ELEMENTS || m > BRUTE_MAX_GROUND {
        return Err(Error::UnsupportedScale(format!(
            "brute force needs |F| <= {BRUTE_MAX_ELEMENTS} and m <= {BRUTE_MAX_GROUND} (got |F| = {n}, m = {m})"
        )));
    }
    let mut perp = Vec::new();
    for z in all_vectors(t, m)? {
        if z.is_zero() {
            continue;
        }
        let mut ok = true;
        for x in c {
            if !is_orthogonal(t, x, &z)? {
                ok = false;
                break;
            }
        }
        if ok {
            perp.push(z);
        }
    }
    Ok(supp_min(&perp))
}
