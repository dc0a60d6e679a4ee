//! Grassmann-Plücker functions: storage on sorted subsets, the weak and
//! strong Plücker relations, circuits, duality, minors, reconstruction from
//! circuits and push-forward.

use std::collections::{HashMap, VecDeque};

use itertools::Itertools;
use num_traits::Num;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;
use crate::matroid::{ClassicalMatroid, MinorOp};
use crate::subset::{sort_parity, Subset, MAX_GROUND};
use crate::tract::{Element, FormalSum, Status, Tract, TractHom};
use crate::vectors::{vectors_eq, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GpMode {
    Weak,
    Strong,
}

/// An alternating function `E^r -> F`, stored on sorted `r`-subsets.
#[derive(Clone, Debug, PartialEq)]
pub struct GPFunction<U> {
    m: usize,
    rank: usize,
    subsets: Vec<Subset>,
    values: Vec<Element<U>>,
    index: HashMap<Subset, usize>,
}

impl<U: Clone + PartialEq> GPFunction<U> {
    /// Builds `φ` from its value on each sorted `r`-subset.
    pub fn from_fn(m: usize, rank: usize, mut f: impl FnMut(Subset) -> Element<U>) -> Result<Self> {
        if m > MAX_GROUND {
            return Err(Error::GroundSetSize(m));
        }
        if rank > m {
            return Err(Error::Arity {
                expected: m,
                got: rank,
            });
        }
        let subsets = Subset::k_subsets(m, rank);
        let values = subsets.iter().map(|s| f(*s)).collect();
        let index = subsets.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        Ok(GPFunction {
            m,
            rank,
            subsets,
            values,
            index,
        })
    }

    /// Values on listed subsets; the rest are zero.
    pub fn from_values(
        m: usize,
        rank: usize,
        values: impl IntoIterator<Item = (Subset, Element<U>)>,
    ) -> Result<Self> {
        let mut map = HashMap::new();
        for (s, v) in values {
            if s.len() != rank || !s.is_subset(Subset::full(m)) {
                return Err(Error::Arity {
                    expected: rank,
                    got: s.len(),
                });
            }
            map.insert(s, v);
        }
        Self::from_fn(m, rank, |s| map.get(&s).cloned().flatten())
    }

    /// The maximal minors of an `r × m` matrix, mapped into the tract.
    pub fn from_matrix<S: Num + Clone>(
        matrix: &[Vec<S>],
        f: impl Fn(&S) -> Element<U>,
    ) -> Result<Self> {
        let r = matrix.len();
        let m = matrix.first().map_or(0, Vec::len);
        Self::from_fn(m, r, |cols| {
            let d = linalg::minor(matrix, cols);
            if d.is_zero() {
                None
            } else {
                f(&d)
            }
        })
    }

    pub fn ground_size(&self) -> usize {
        self.m
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Sorted `r`-subsets with their values, in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (Subset, &Element<U>)> + '_ {
        self.subsets.iter().copied().zip(self.values.iter())
    }

    /// Values in the order of [`GPFunction::entries`].
    pub fn values(&self) -> &[Element<U>] {
        &self.values
    }

    pub fn value(&self, s: Subset) -> &Element<U> {
        match self.index.get(&s) {
            Some(&i) => &self.values[i],
            None => &None,
        }
    }

    /// Evaluates on an arbitrary tuple via the alternating extension.
    pub fn eval<T: Tract<Unit = U>>(&self, t: &T, tuple: &[usize]) -> Result<Element<U>> {
        if tuple.len() != self.rank {
            return Err(Error::Arity {
                expected: self.rank,
                got: tuple.len(),
            });
        }
        if let Some(&e) = tuple.iter().find(|&&e| e >= self.m) {
            return Err(Error::Parse(format!(
                "element {} outside the ground set",
                e + 1
            )));
        }
        let s = Subset::from_indices(tuple.iter().copied());
        if s.len() < tuple.len() {
            return Ok(None);
        }
        let v = self.value(s).clone();
        Ok(if sort_parity(tuple) {
            t.neg_elem(&v)
        } else {
            v
        })
    }

    pub fn support(&self) -> Vec<Subset> {
        self.entries()
            .filter(|(_, v)| v.is_some())
            .map(|(s, _)| s)
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Option::is_none)
    }

    /// The matroid whose bases are the support.
    pub fn support_matroid(&self) -> Result<ClassicalMatroid> {
        ClassicalMatroid::from_bases(self.m, self.support())
    }

    pub fn scale<T: Tract<Unit = U>>(&self, t: &T, g: &U) -> Self {
        let mut out = self.clone();
        for v in out.values.iter_mut() {
            *v = t.mul_elem(&Some(g.clone()), v);
        }
        out
    }

    pub fn map<V: Clone + PartialEq>(&self, f: impl Fn(&U) -> Element<V>) -> GPFunction<V> {
        GPFunction {
            m: self.m,
            rank: self.rank,
            subsets: self.subsets.clone(),
            values: self
                .values
                .iter()
                .map(|v| v.as_ref().and_then(&f))
                .collect(),
            index: self.index.clone(),
        }
    }

    /// Scaled so that the first nonzero value in lexicographic order is `1`.
    pub fn canonicalize<T: Tract<Unit = U>>(&self, t: &T) -> Self {
        match self.values.iter().flatten().next() {
            Some(lead) => self.scale(t, &t.inv(lead)),
            None => self.clone(),
        }
    }

    /// Equality up to a global unit.
    pub fn projectively_equal<T: Tract<Unit = U>>(&self, t: &T, other: &Self) -> bool {
        self.m == other.m
            && self.rank == other.rank
            && self
                .canonicalize(t)
                .values
                .iter()
                .zip(&other.canonicalize(t).values)
                .all(|(a, b)| t.elem_eq(a, b))
    }
}

/// One term `±φ(A)·φ(B)` of a Plücker relation, by subset index.
#[derive(Clone, Debug)]
struct Term {
    a: usize,
    b: usize,
    odd: bool,
}

/// A Plücker relation for sorted `I` (size `r+1`) and `J` (size `r-1`).
#[derive(Clone, Debug)]
pub struct Relation {
    pub i: Subset,
    pub j: Subset,
    terms: Vec<Term>,
}

/// The relations `Σ_k (-1)^k φ(I - x_k) φ(x_k, J)` to test in the given
/// mode; weak mode keeps only `|I - J| = 3`.
pub fn relations(m: usize, r: usize, mode: GpMode) -> Vec<Relation> {
    if r == 0 {
        return Vec::new();
    }
    let subsets = Subset::k_subsets(m, r);
    let index: HashMap<Subset, usize> = subsets.iter().enumerate().map(|(i, s)| (*s, i)).collect();
    let mut out = Vec::new();
    for i in Subset::k_subsets(m, r + 1) {
        for j in Subset::k_subsets(m, r - 1) {
            if mode == GpMode::Weak && i.difference(j).len() != 3 {
                continue;
            }
            let terms = i
                .iter()
                .enumerate()
                .filter(|(_, x)| !j.contains(*x))
                .map(|(k, x)| {
                    let below = j.iter().filter(|&y| y < x).count();
                    Term {
                        a: index[&i.remove(x)],
                        b: index[&j.insert(x)],
                        odd: (k + below) % 2 == 1,
                    }
                })
                .collect();
            out.push(Relation { i, j, terms });
        }
    }
    out
}

impl Relation {
    /// The formal sum of the relation for the given values.
    pub fn sum<T: Tract>(&self, t: &T, values: &[Element<T::Unit>]) -> FormalSum<T::Unit> {
        let mut s = FormalSum::new();
        for term in &self.terms {
            if let (Some(a), Some(b)) = (&values[term.a], &values[term.b]) {
                let p = t.mul(a, b);
                s.push(if term.odd { t.neg(&p) } else { p });
            }
        }
        s
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GpFailure {
    pub axiom: String,
    #[serde(rename = "I")]
    pub i: Vec<usize>,
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    pub sum: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct GpReport {
    pub mode: GpMode,
    pub status: Status,
    pub checks: usize,
    pub support_is_matroid: bool,
    pub failures: Vec<GpFailure>,
}

impl GpReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Whether some failure is the relation for `I`, `J` (1-based labels).
    pub fn has_witness(&self, i: &[usize], j: &[usize]) -> bool {
        self.failures.iter().any(|f| f.i == i && f.j == j)
    }
}

/// Checks (GP1), basis exchange on the support, and the Plücker relations
/// of the given mode. Every failing `(I, J)` is reported.
pub fn check_gp<T: Tract>(t: &T, phi: &GPFunction<T::Unit>, mode: GpMode) -> GpReport {
    let mut failures = Vec::new();
    if phi.is_zero() {
        failures.push(GpFailure {
            axiom: "GP1".into(),
            i: vec![],
            j: vec![],
            sum: "identically zero".into(),
        });
    }
    let support_ok = phi.support_matroid();
    if let Err(e) = &support_ok {
        failures.push(GpFailure {
            axiom: "GP-support".into(),
            i: vec![],
            j: vec![],
            sum: e.to_string(),
        });
    }
    let rels = relations(phi.m, phi.rank, mode);
    let bad: Vec<GpFailure> = rels
        .par_iter()
        .filter_map(|rel| {
            let s = rel.sum(t, &phi.values);
            (!t.is_null(&s)).then(|| GpFailure {
                axiom: match mode {
                    GpMode::Weak => "GP3'".into(),
                    GpMode::Strong => "GP3".into(),
                },
                i: rel.i.to_labels(),
                j: rel.j.to_labels(),
                sum: t.format_sum(&s),
            })
        })
        .collect();
    failures.extend(bad);
    GpReport {
        mode,
        status: if failures.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        },
        checks: rels.len() + 2,
        support_is_matroid: support_ok.is_ok(),
        failures,
    }
}

/// Quick yes/no version of [`check_gp`] over precomputed relations, for
/// enumeration loops.
pub fn satisfies_relations<T: Tract>(
    t: &T,
    values: &[Element<T::Unit>],
    rels: &[Relation],
) -> bool {
    rels.iter().all(|rel| t.is_null(&rel.sum(t, values)))
}

/// The circuit with support `c` given by choosing `x0` and a basis
/// containing `c - x0`.
fn circuit_via<T: Tract>(
    t: &T,
    phi: &GPFunction<T::Unit>,
    c: Subset,
    x0: usize,
    basis: Subset,
) -> Result<Vector<T::Unit>> {
    let xs = basis.to_vec();
    let denom = phi
        .value(basis)
        .clone()
        .ok_or_else(|| Error::NotABasis(basis.to_string()))?;
    let mut entries: Vec<Element<T::Unit>> = vec![None; phi.m];
    entries[x0] = Some(t.one());
    for (i, &xi) in xs.iter().enumerate() {
        if !c.contains(xi) {
            continue;
        }
        let mut tuple = vec![x0];
        tuple.extend(
            xs.iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .map(|(_, &x)| x),
        );
        let num = phi.eval(t, &tuple)?;
        // positions are 1-based in the formula, so x_i carries sign (-1)^(i+1)
        let v = num.map(|n| t.div(&n, &denom));
        entries[xi] = if i % 2 == 0 { t.neg_elem(&v) } else { v };
    }
    let x = Vector::new(entries);
    if x.support() != c {
        return Err(Error::Inconsistent(format!(
            "circuit {c} computed from x0 = {} and basis {basis} has support {}",
            x0 + 1,
            x.support()
        )));
    }
    Ok(x)
}

/// One normalized representative per circuit of the support matroid.
///
/// Every choice of `x0` and basis is tried and must give the same
/// projective circuit.
pub fn circuits_from_gp<T: Tract>(
    t: &T,
    phi: &GPFunction<T::Unit>,
) -> Result<Vec<Vector<T::Unit>>> {
    let mat = phi.support_matroid()?;
    let mut out = Vec::new();
    for &c in mat.circuits() {
        let mut reference: Option<(Vector<T::Unit>, usize, Subset)> = None;
        for x0 in c.iter() {
            let rest = c.remove(x0);
            for &b in mat.bases().iter().filter(|b| rest.is_subset(**b)) {
                let x = circuit_via(t, phi, c, x0, b)?.normalized(t);
                match &reference {
                    None => reference = Some((x, x0, b)),
                    Some((r, rx0, rb)) => {
                        if !vectors_eq(t, r, &x) {
                            return Err(Error::Inconsistent(format!(
                                "circuit {c}: (x0 = {}, basis {rb}) gives {:?} but (x0 = {}, basis {b}) gives {:?}",
                                rx0 + 1,
                                r.format(t),
                                x0 + 1,
                                x.format(t)
                            )));
                        }
                    }
                }
            }
        }
        out.push(reference.expect("circuit has a basis").0);
    }
    Ok(out)
}

/// `φ*(x_1..x_{m-r}) = sign(x, x')·τ(φ(x'))` with `x'` the complement.
pub fn dual_gp<T: Tract>(t: &T, phi: &GPFunction<T::Unit>) -> GPFunction<T::Unit> {
    let m = phi.m;
    GPFunction::from_fn(m, m - phi.rank, |s| {
        let comp = s.complement(m);
        let perm: Vec<usize> = s.iter().chain(comp.iter()).collect();
        let v = t.involution_elem(phi.value(comp));
        if sort_parity(&perm) {
            t.neg_elem(&v)
        } else {
            v
        }
    })
    .expect("same ground set")
}

/// Deletion or contraction of `A`, canonicalized.
pub fn gp_minor<T: Tract>(
    t: &T,
    phi: &GPFunction<T::Unit>,
    a: Subset,
    op: MinorOp,
) -> Result<GPFunction<T::Unit>> {
    let mat = phi.support_matroid()?;
    let rest = a.complement(phi.m);
    let extra: Vec<usize> = match op {
        MinorOp::Contract => mat.max_independent(a).to_vec(),
        MinorOp::Delete => {
            // a basis of M/(E - A) inside A
            let base = mat.max_independent(rest);
            let full = a.iter().fold(base, |acc, e| {
                let next = acc.insert(e);
                if mat.is_independent(next) {
                    next
                } else {
                    acc
                }
            });
            full.difference(base).to_vec()
        }
    };
    let r = phi.rank - extra.len();
    let kept = rest.to_vec();
    let out = GPFunction::from_fn(rest.len(), r, |s| {
        let mut tuple: Vec<usize> = s.iter().map(|i| kept[i]).collect();
        tuple.extend(&extra);
        phi.eval(t, &tuple).expect("arity matches")
    })?;
    Ok(out.canonicalize(t))
}

/// Reconstructs `φ` from a circuit set with `φ(B0) = 1` on the first basis,
/// propagating over the basis-exchange graph and checking every edge.
pub fn gp_from_circuits<T: Tract>(
    t: &T,
    m: usize,
    circuits: &[Vector<T::Unit>],
) -> Result<GPFunction<T::Unit>> {
    let mat = ClassicalMatroid::from_circuits(m, circuits.iter().map(Vector::support))?;
    let mut by_support: HashMap<Subset, &Vector<T::Unit>> = HashMap::new();
    for x in circuits {
        if by_support.insert(x.support(), x).is_some() {
            return Err(Error::NotRepresentable(format!(
                "two circuits with support {}",
                x.support()
            )));
        }
    }
    let bases = mat.bases();
    let mut phi: HashMap<Subset, T::Unit> = HashMap::new();
    phi.insert(bases[0], t.one());
    let mut queue = VecDeque::from([bases[0]]);
    while let Some(b) = queue.pop_front() {
        let pb = phi[&b].clone();
        for e in b.complement(m).iter() {
            let c = mat.fundamental_circuit(b, e)?;
            let x = by_support[&c];
            let xe = x.get(e).as_ref().expect("e in circuit");
            for f in c.remove(e).iter() {
                let xf = x.get(f).as_ref().expect("f in circuit");
                let common = b.remove(f);
                let below = |z: usize| common.iter().filter(|&y| y < z).count();
                let odd = (below(e) + below(f) + 1) % 2 == 1;
                let mut v = t.mul(&t.div(xf, xe), &pb);
                if odd {
                    v = t.neg(&v);
                }
                let b2 = common.insert(e);
                match phi.get(&b2) {
                    None => {
                        phi.insert(b2, v);
                        queue.push_back(b2);
                    }
                    Some(w) if t.unit_eq(w, &v) => {}
                    Some(w) => {
                        return Err(Error::NotRepresentable(format!(
                            "exchange {b} -> {b2} (in {}, out {}) forces {} but the spanning tree gives {}",
                            e + 1,
                            f + 1,
                            t.format_unit(&v),
                            t.format_unit(w)
                        )))
                    }
                }
            }
        }
    }
    GPFunction::from_fn(m, mat.rank(), |s| phi.get(&s).cloned())
}

/// `(h_* φ)(B) = h(φ(B))`.
pub fn pushforward_gp<H: TractHom>(
    h: &H,
    phi: &GPFunction<<H::Source as Tract>::Unit>,
) -> GPFunction<<H::Target as Tract>::Unit> {
    phi.map(|u| h.map_unit(u))
}

/// Size caps for [`enumerate_gp`].
#[derive(Clone, Copy, Debug, Serialize)]
pub struct EnumCaps {
    /// Bound on `|F|`, counting zero.
    pub max_elements: usize,
    pub max_ground: usize,
    pub max_rank: usize,
}

impl Default for EnumCaps {
    fn default() -> Self {
        EnumCaps {
            max_elements: 3,
            max_ground: 5,
            max_rank: 3,
        }
    }
}

/// A weak GP function found by enumeration.
#[derive(Clone, Debug)]
pub struct EnumeratedGp<U> {
    pub phi: GPFunction<U>,
    pub strong: bool,
}

/// Every basis family of a rank-`r` matroid on `m` elements, each once.
pub fn all_matroids(m: usize, r: usize) -> Vec<ClassicalMatroid> {
    let candidates = Subset::k_subsets(m, r);
    let n = candidates.len();
    assert!(n < 31, "too many candidate bases");
    (1u32..(1 << n))
        .filter_map(|mask| {
            let bases = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| candidates[i]);
            ClassicalMatroid::from_bases(m, bases).ok()
        })
        .collect()
}

/// All weak GP functions of rank `r` on `m` elements up to unit scaling,
/// grouped by support matroid, each flagged strong or not.
pub fn enumerate_gp<T: Tract>(
    t: &T,
    r: usize,
    m: usize,
    caps: &EnumCaps,
) -> Result<Vec<EnumeratedGp<T::Unit>>> {
    let units = t
        .units()
        .ok_or_else(|| Error::UnsupportedScale(format!("tract {} is infinite", t.id())))?;
    if units.len() + 1 > caps.max_elements || m > caps.max_ground || r > caps.max_rank || r > m {
        return Err(Error::UnsupportedScale(format!(
            "enumeration capped at |F| <= {}, m <= {}, r <= {} (got |F| = {}, m = {m}, r = {r})",
            caps.max_elements,
            caps.max_ground,
            caps.max_rank,
            units.len() + 1
        )));
    }
    let weak_rels = relations(m, r, GpMode::Weak);
    let strong_rels = relations(m, r, GpMode::Strong);
    let mut out = Vec::new();
    for mat in all_matroids(m, r) {
        let bases = mat.bases();
        let choices = (1..bases.len())
            .map(|_| units.iter().cloned())
            .multi_cartesian_product();
        let assignments: Box<dyn Iterator<Item = Vec<T::Unit>>> = if bases.len() == 1 {
            Box::new(std::iter::once(Vec::new()))
        } else {
            Box::new(choices)
        };
        for rest in assignments {
            let vals: HashMap<Subset, T::Unit> = bases
                .iter()
                .copied()
                .zip(std::iter::once(t.one()).chain(rest))
                .collect();
            let phi = GPFunction::from_fn(m, r, |s| vals.get(&s).cloned())?;
            if !satisfies_relations(t, &phi.values, &weak_rels) {
                continue;
            }
            let strong = satisfies_relations(t, &phi.values, &strong_rels);
            out.push(EnumeratedGp { phi, strong });
        }
    }
    Ok(out)
}
