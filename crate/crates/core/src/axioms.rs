//! Circuit sets of matroids over tracts: the weak, strong and linear-span
//! circuit axioms, dual pairs, cocircuits, minors, push-forwards and the
//! perfectness probe.

use std::collections::HashMap;

use itertools::Itertools;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::gp::{circuits_from_gp, dual_gp, gp_from_circuits, GPFunction};
use crate::matroid::{ClassicalMatroid, MinorOp};
use crate::subset::{Subset, MAX_GROUND};
use crate::tract::{Element, FormalSum, Status, Tract, TractHom};
use crate::vectors::{
    all_vectors, brute_force_perp_suppmin, combination_residual, dedup_projective, inner_product,
    same_projective_set, supp_min, vectors_eq, Vector, BRUTE_MAX_GROUND,
};

/// A circuit set, stored as one representative per projective class.
/// Nonzero representatives are normalized to lead with `1`.
#[derive(Clone, Debug, PartialEq)]
pub struct CircuitSet<U> {
    m: usize,
    reps: Vec<Vector<U>>,
}

impl<U: Clone + PartialEq> CircuitSet<U> {
    /// Normalizes and merges projectively equal vectors. Zero vectors are
    /// kept so that (C0) can report them.
    pub fn new<T: Tract<Unit = U>>(
        t: &T,
        m: usize,
        vectors: impl IntoIterator<Item = Vector<U>>,
    ) -> Result<Self> {
        if m > MAX_GROUND {
            return Err(Error::GroundSetSize(m));
        }
        let mut normalized = Vec::new();
        for v in vectors {
            if v.len() != m {
                return Err(Error::GroundSetMismatch(m, v.len()));
            }
            normalized.push(v.normalized(t));
        }
        Ok(CircuitSet {
            m,
            reps: dedup_projective(t, normalized),
        })
    }

    pub fn ground_size(&self) -> usize {
        self.m
    }

    pub fn reps(&self) -> &[Vector<U>] {
        &self.reps
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn supports(&self) -> Vec<Subset> {
        self.reps.iter().map(Vector::support).collect()
    }

    /// Every unit multiple of every representative, for finite tracts.
    pub fn orbit<T: Tract<Unit = U>>(&self, t: &T) -> Result<Vec<Vector<U>>> {
        let units = t
            .units()
            .ok_or_else(|| Error::UnsupportedScale(format!("tract {} is infinite", t.id())))?;
        let mut out = Vec::new();
        for x in &self.reps {
            for g in &units {
                let y = x.scale(t, g);
                if !out.iter().any(|z| vectors_eq(t, z, &y)) {
                    out.push(y);
                }
            }
        }
        Ok(out)
    }

    /// Equality up to unit scaling of each circuit.
    pub fn projectively_equal<T: Tract<Unit = U>>(&self, t: &T, other: &Self) -> bool {
        self.m == other.m && same_projective_set(t, &self.reps, &other.reps)
    }

    fn rep_for(&self, support: Subset) -> Option<&Vector<U>> {
        self.reps.iter().find(|x| x.support() == support)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AxiomMode {
    Weak,
    Strong,
    C3pp,
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomFailure {
    pub axiom: String,
    pub witness: Value,
    pub sum: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub mode: String,
    pub status: Status,
    pub checks: usize,
    pub failures: Vec<AxiomFailure>,
}

impl AxiomReport {
    fn new(mode: impl Into<String>) -> Self {
        AxiomReport {
            mode: mode.into(),
            status: Status::Pass,
            checks: 0,
            failures: Vec::new(),
        }
    }

    fn fail(&mut self, axiom: &str, witness: Value, sum: Option<String>) {
        self.status = Status::Fail;
        self.failures.push(AxiomFailure {
            axiom: axiom.into(),
            witness,
            sum,
        });
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn has_axiom(&self, axiom: &str) -> bool {
        self.failures.iter().any(|f| f.axiom == axiom)
    }
}

fn vec_json<T: Tract>(t: &T, x: &Vector<T::Unit>) -> Value {
    json!(x.format(t))
}

/// Index of the first `f` whose residual is not null, with that residual.
fn first_bad<T: Tract>(t: &T, residuals: &[FormalSum<T::Unit>]) -> Option<(usize, String)> {
    residuals
        .iter()
        .position(|s| !t.is_null(s))
        .map(|f| (f, t.format_sum(&residuals[f])))
}

/// (C0), (C2) and the support matroid. Returns the matroid when all hold.
fn check_basic<T: Tract>(
    t: &T,
    c: &CircuitSet<T::Unit>,
    report: &mut AxiomReport,
) -> Option<ClassicalMatroid> {
    for x in &c.reps {
        report.checks += 1;
        if x.is_zero() {
            report.fail("C0", json!({ "vector": vec_json(t, x) }), None);
        }
    }
    for (x, y) in c.reps.iter().tuple_combinations() {
        report.checks += 1;
        if !x.is_zero()
            && !y.is_zero()
            && (x.support().is_subset(y.support()) || y.support().is_subset(x.support()))
        {
            report.fail(
                "C2",
                json!({ "X": vec_json(t, x), "Y": vec_json(t, y) }),
                None,
            );
        }
    }
    if !report.passed() {
        return None;
    }
    match underlying_matroid_of(c) {
        Ok(m) => Some(m),
        Err(e) => {
            report.fail("C-support", json!({ "detail": e.to_string() }), None);
            None
        }
    }
}

/// Searches for the eliminating circuit `Z`: zero on `zeros`, supported in
/// `union`, scaled so that `Z(anchor)` matches `target`, with every
/// `Σ terms(f) - Z(f)` null. Returns all matches.
fn find_z<T: Tract>(
    t: &T,
    c: &CircuitSet<T::Unit>,
    terms: &[Vector<T::Unit>],
    zeros: Subset,
    union: Subset,
    anchor: usize,
    target: &T::Unit,
) -> Vec<Vector<T::Unit>> {
    let mut found = Vec::new();
    for z in &c.reps {
        let s = z.support();
        if !s.intersection(zeros).is_empty() || !s.is_subset(union) {
            continue;
        }
        let Some(za) = z.get(anchor) else { continue };
        let z = z.scale(t, &t.div(target, za));
        let ok = (0..c.m).all(|f| {
            let mut sum = FormalSum::new();
            for x in terms {
                sum.push_elem(x.get(f).clone());
            }
            sum.push_elem(t.neg_elem(z.get(f)));
            t.is_null(&sum)
        });
        if ok {
            found.push(z);
        }
    }
    found
}

/// Checks (C0)-(C2) and then modular elimination (weak), strong modular
/// elimination, or the linear-span condition (C3)''.
pub fn check_circuit_axioms<T: Tract>(
    t: &T,
    c: &CircuitSet<T::Unit>,
    mode: AxiomMode,
) -> AxiomReport {
    let mut report = AxiomReport::new(match mode {
        AxiomMode::Weak => "weak",
        AxiomMode::Strong => "strong",
        AxiomMode::C3pp => "c3pp",
    });
    let Some(mat) = check_basic(t, c, &mut report) else {
        return report;
    };
    match mode {
        AxiomMode::Weak => check_weak(t, c, &mat, &mut report),
        AxiomMode::Strong => check_strong(t, c, &mat, &mut report),
        AxiomMode::C3pp => check_c3pp(t, c, &mat, &mut report),
    }
    report
}

fn check_weak<T: Tract>(
    t: &T,
    c: &CircuitSet<T::Unit>,
    mat: &ClassicalMatroid,
    report: &mut AxiomReport,
) {
    for (x, y) in c.reps.iter().tuple_combinations() {
        let (sx, sy) = (x.support(), y.support());
        if mat.nullity(sx.union(sy)) != 2 {
            continue;
        }
        let anchor = sx
            .symmetric_difference(sy)
            .min()
            .expect("distinct circuits");
        for e in sx.intersection(sy).iter() {
            report.checks += 1;
            let (xe, ye) = (x.get(e).as_ref().unwrap(), y.get(e).as_ref().unwrap());
            // scale Y so that Y(e) = -X(e)
            let y2 = y.scale(t, &t.neg(&t.div(xe, ye)));
            let target = x
                .get(anchor)
                .clone()
                .or_else(|| y2.get(anchor).clone())
                .unwrap();
            let terms = [x.clone(), y2.clone()];
            let found = find_z(
                t,
                c,
                &terms,
                Subset::singleton(e),
                sx.union(sy),
                anchor,
                &target,
            );
            let witness = || json!({ "X": vec_json(t, x), "Y": vec_json(t, &y2), "e": e + 1 });
            match found.len() {
                1 => {}
                0 => report.fail("C3'", witness(), None),
                _ => report.fail("C3'-uniqueness", witness(), None),
            }
        }
    }
}

fn check_strong<T: Tract>(
    t: &T,
    c: &CircuitSet<T::Unit>,
    mat: &ClassicalMatroid,
    report: &mut AxiomReport,
) {
    let n = c.reps.len();
    let max_k = mat.nullity(Subset::full(c.m)).saturating_sub(1);
    for xi in 0..n {
        let x = &c.reps[xi];
        let sx = x.support();
        let others: Vec<usize> = (0..n).filter(|&i| i != xi).collect();
        for k in 1..=max_k {
            for fam in others.iter().copied().combinations(k) {
                let supports: Vec<Subset> = fam.iter().map(|&i| c.reps[i].support()).collect();
                let cover = supports.iter().fold(Subset::EMPTY, |a, s| a.union(*s));
                if sx.is_subset(cover) {
                    continue;
                }
                let union = cover.union(sx);
                if mat.nullity(union) != k + 1 {
                    continue;
                }
                // e_i ∈ (X ∩ X_i) minus the other X_j
                let choices: Vec<Vec<usize>> = (0..k)
                    .map(|i| {
                        let others_i = (0..k)
                            .filter(|&j| j != i)
                            .fold(Subset::EMPTY, |a, j| a.union(supports[j]));
                        sx.intersection(supports[i]).difference(others_i).to_vec()
                    })
                    .collect();
                if choices.iter().any(Vec::is_empty) {
                    continue;
                }
                let anchor = sx.difference(cover).min().expect("X not covered");
                let target = x.get(anchor).clone().unwrap();
                for es in choices
                    .iter()
                    .map(|v| v.iter().copied())
                    .multi_cartesian_product()
                {
                    report.checks += 1;
                    let mut terms = vec![x.clone()];
                    for (i, &e) in es.iter().enumerate() {
                        let xi_vec = &c.reps[fam[i]];
                        let g = t.neg(
                            &t.div(x.get(e).as_ref().unwrap(), xi_vec.get(e).as_ref().unwrap()),
                        );
                        terms.push(xi_vec.scale(t, &g));
                    }
                    let zeros = Subset::from_indices(es.iter().copied());
                    let found = find_z(t, c, &terms, zeros, union, anchor, &target);
                    let witness = || {
                        json!({
                            "X": vec_json(t, x),
                            "family": terms[1..].iter().map(|v| vec_json(t, v)).collect::<Vec<_>>(),
                            "e": es.iter().map(|e| e + 1).collect::<Vec<_>>(),
                        })
                    };
                    match found.len() {
                        1 => {}
                        0 => report.fail("C3", witness(), None),
                        _ => report.fail("C3-uniqueness", witness(), None),
                    }
                }
            }
        }
    }
}

/// For basis `B`, the circuit on the fundamental circuit of `e` scaled to
/// `X_{B,e}(e) = 1`.
fn fundamental_vectors<T: Tract>(
    t: &T,
    c: &CircuitSet<T::Unit>,
    mat: &ClassicalMatroid,
    b: Subset,
) -> Vec<(usize, Vector<T::Unit>)> {
    b.complement(c.m)
        .iter()
        .map(|e| {
            let fc = mat.fundamental_circuit(b, e).expect("basis");
            let x = c.rep_for(fc).expect("circuit present");
            let inv = t.inv(x.get(e).as_ref().unwrap());
            (e, x.scale(t, &inv))
        })
        .collect()
}

fn check_c3pp<T: Tract>(
    t: &T,
    c: &CircuitSet<T::Unit>,
    mat: &ClassicalMatroid,
    report: &mut AxiomReport,
) {
    for &b in mat.bases() {
        let fund = fundamental_vectors(t, c, mat, b);
        for x in &c.reps {
            report.checks += 1;
            let terms: Vec<(Element<T::Unit>, Vector<T::Unit>)> = fund
                .iter()
                .map(|(e, v)| (x.get(*e).clone(), v.clone()))
                .collect();
            let res = combination_residual(t, x, &terms).expect("same ground set");
            if let Some((f, sum)) = first_bad(t, &res) {
                report.fail(
                    "C3''",
                    json!({ "X": vec_json(t, x), "basis": b.to_labels(), "f": f + 1 }),
                    Some(sum),
                );
            }
        }
    }
}

/// The matroid whose circuits are the supports.
pub fn underlying_matroid_of<U: Clone + PartialEq>(c: &CircuitSet<U>) -> Result<ClassicalMatroid> {
    ClassicalMatroid::from_circuits(c.m, c.supports())
}

/// Whether the set is an `F`-signature of a matroid: nonzero, one
/// projective class per support, supports forming a matroid.
fn signature_of<U: Clone + PartialEq>(
    c: &CircuitSet<U>,
) -> std::result::Result<ClassicalMatroid, String> {
    if c.reps.iter().any(Vector::is_zero) {
        return Err("contains the zero vector".into());
    }
    let supports = c.supports();
    if supports.iter().duplicates().next().is_some() {
        return Err("two projective classes share a support".into());
    }
    underlying_matroid_of(c).map_err(|e| e.to_string())
}

/// Checks (DP1), (DP2) and orthogonality of all pairs (strong) or of the
/// pairs meeting in at most three elements (weak).
pub fn check_dual_pair<T: Tract>(
    t: &T,
    c: &CircuitSet<T::Unit>,
    d: &CircuitSet<T::Unit>,
    mode: AxiomMode,
) -> AxiomReport {
    let mut report = AxiomReport::new(match mode {
        AxiomMode::Weak => "weak",
        _ => "strong",
    });
    if c.m != d.m {
        report.fail(
            "DP",
            json!({ "detail": format!("ground sets {} and {}", c.m, d.m) }),
            None,
        );
        return report;
    }
    report.checks += 2;
    let mc = match signature_of(c) {
        Ok(m) => m,
        Err(e) => {
            report.fail("DP1", json!({ "detail": e }), None);
            return report;
        }
    };
    match signature_of(d) {
        Ok(md) if md.same_as(&mc.dual()) => {}
        Ok(_) => {
            report.fail(
                "DP2",
                json!({ "detail": "supports are not the cocircuits of the matroid" }),
                None,
            );
            return report;
        }
        Err(e) => {
            report.fail("DP2", json!({ "detail": e }), None);
            return report;
        }
    }
    let axiom = if mode == AxiomMode::Weak {
        "DP3'"
    } else {
        "DP3"
    };
    for x in &c.reps {
        for y in &d.reps {
            if mode == AxiomMode::Weak && x.support().intersection(y.support()).len() > 3 {
                continue;
            }
            report.checks += 1;
            let s = inner_product(t, x, y).expect("same ground set");
            if !t.is_null(&s) {
                report.fail(
                    axiom,
                    json!({ "X": vec_json(t, x), "Y": vec_json(t, y) }),
                    Some(t.format_sum(&s)),
                );
            }
        }
    }
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CocircuitStrategy {
    DualGp,
    Signature,
    Brute,
}

impl CocircuitStrategy {
    pub const ALL: [CocircuitStrategy; 3] = [Self::DualGp, Self::Signature, Self::Brute];

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "dual_gp" | "dual-gp" => Ok(Self::DualGp),
            "signature" => Ok(Self::Signature),
            "brute" => Ok(Self::Brute),
            _ => Err(Error::Parse(format!("unknown cocircuit strategy `{s}`"))),
        }
    }
}

/// Whether brute force enumeration is within its size bounds.
pub fn brute_applicable<T: Tract>(t: &T, m: usize) -> bool {
    t.elements()
        .is_some_and(|e| e.len() <= crate::vectors::BRUTE_MAX_ELEMENTS && m <= BRUTE_MAX_GROUND)
}

/// The cocircuit set by one strategy.
pub fn cocircuits_of<T: Tract>(
    t: &T,
    c: &CircuitSet<T::Unit>,
    strategy: CocircuitStrategy,
) -> Result<CircuitSet<T::Unit>> {
    let m = c.m;
    match strategy {
        CocircuitStrategy::DualGp => {
            let phi = gp_from_circuits(t, m, &c.reps)?;
            let dual = dual_gp(t, &phi);
            CircuitSet::new(t, m, circuits_from_gp(t, &dual)?)
        }
        CocircuitStrategy::Signature => signature_cocircuits(t, c),
        CocircuitStrategy::Brute => CircuitSet::new(t, m, brute_force_perp_suppmin(t, m, &c.reps)?),
    }
}

/// Builds each cocircuit `D` from circuits inside `A ∪ {e, f}` where `A`
/// is a basis of the hyperplane `E - D`.
fn signature_cocircuits<T: Tract>(t: &T, c: &CircuitSet<T::Unit>) -> Result<CircuitSet<T::Unit>> {
    let mat = signature_of(c).map_err(Error::StrategyUnavailable)?;
    let mut out = Vec::new();
    for d in mat.cocircuits() {
        let a = mat.max_independent(d.complement(c.m));
        let elems = d.to_vec();
        let e0 = elems[0];
        // W(e)/W(f) = -X(f)/X(e) for the circuit X in A ∪ {e, f}
        let ratio = |e: usize, f: usize| -> Result<T::Unit> {
            let fc = mat.fundamental_circuit(a.insert(e), f)?;
            let x = c.rep_for(fc).expect("circuit present");
            let (xe, xf) = (x.get(e).as_ref(), x.get(f).as_ref());
            match (xe, xf) {
                (Some(xe), Some(xf)) => Ok(t.neg(&t.div(xf, xe))),
                _ => Err(Error::Inconsistent(format!(
                    "circuit {fc} misses {} or {}",
                    e + 1,
                    f + 1
                ))),
            }
        };
        let mut w: Vec<Element<T::Unit>> = vec![None; c.m];
        w[e0] = Some(t.one());
        for &f in &elems[1..] {
            // W(f) = W(e0) / (W(e0)/W(f))
            w[f] = Some(t.inv(&ratio(e0, f)?));
        }
        for (&e, &f) in elems.iter().tuple_combinations() {
            let want = ratio(e, f)?;
            let got = t.div(w[e].as_ref().unwrap(), w[f].as_ref().unwrap());
            if !t.unit_eq(&want, &got) {
                return Err(Error::Inconsistent(format!(
                    "cocircuit {d}: ratio at ({}, {}) disagrees",
                    e + 1,
                    f + 1
                )));
            }
        }
        let w: Vec<Element<T::Unit>> = w.iter().map(|x| t.involution_elem(x)).collect();
        out.push(Vector::new(w));
    }
    CircuitSet::new(t, c.m, out)
}

/// Runs every applicable strategy and checks that they agree.
pub fn cocircuits_checked<T: Tract>(t: &T, c: &CircuitSet<T::Unit>) -> Result<CircuitSet<T::Unit>> {
    let mut results: Vec<(CocircuitStrategy, CircuitSet<T::Unit>)> = Vec::new();
    for s in CocircuitStrategy::ALL {
        if s == CocircuitStrategy::Brute && !brute_applicable(t, c.m) {
            continue;
        }
        results.push((s, cocircuits_of(t, c, s)?));
    }
    let (s0, first) = results.remove(0);
    for (s, other) in &results {
        if !first.projectively_equal(t, other) {
            return Err(Error::StrategyDisagreement(format!(
                "{s0:?} and {s:?} give different cocircuits"
            )));
        }
    }
    Ok(first)
}

/// Deletion keeps circuits avoiding `A`; contraction takes the
/// support-minimal restrictions to `E - A`.
pub fn circuit_minor<T: Tract>(
    t: &T,
    c: &CircuitSet<T::Unit>,
    a: Subset,
    op: MinorOp,
) -> CircuitSet<T::Unit> {
    let vs: Vec<Vector<T::Unit>> = match op {
        MinorOp::Delete => c
            .reps
            .iter()
            .filter(|x| x.support().intersection(a).is_empty())
            .map(|x| x.drop_coords(a))
            .collect(),
        MinorOp::Contract => {
            let restricted: Vec<Vector<T::Unit>> =
                c.reps.iter().map(|x| x.drop_coords(a)).collect();
            supp_min(&restricted)
        }
    };
    CircuitSet::new(t, c.m - a.len(), vs).expect("smaller ground set")
}

/// Entrywise image under a homomorphism.
pub fn pushforward_circuits<H: TractHom>(
    h: &H,
    c: &CircuitSet<<H::Source as Tract>::Unit>,
) -> Result<CircuitSet<<H::Target as Tract>::Unit>> {
    let vs = c
        .reps
        .iter()
        .map(|x| Vector::new(x.entries().iter().map(|u| h.apply(u)).collect()));
    CircuitSet::new(h.target(), c.m, vs)
}

#[derive(Clone, Debug, Serialize)]
pub struct PerfectnessReport {
    pub status: Status,
    pub vectors: usize,
    pub covectors: usize,
    pub violations: Vec<Value>,
}

/// Enumerates vectors (orthogonal to all cocircuits) and covectors
/// (orthogonal to all circuits) and reports non-orthogonal pairs.
pub fn perfectness_probe<T: Tract>(t: &T, c: &CircuitSet<T::Unit>) -> Result<PerfectnessReport> {
    if !brute_applicable(t, c.m) {
        return Err(Error::UnsupportedScale(
            "perfectness probe needs a small finite tract and m <= 6".into(),
        ));
    }
    let d = cocircuits_of(t, c, CocircuitStrategy::Brute)?;
    let all = all_vectors(t, c.m)?;
    let perp_to = |family: &[Vector<T::Unit>]| -> Vec<Vector<T::Unit>> {
        all.iter()
            .filter(|z| {
                family
                    .iter()
                    .all(|x| t.is_null(&inner_product(t, x, z).expect("dims")))
            })
            .cloned()
            .collect()
    };
    let vectors = perp_to(&d.reps);
    let covectors = perp_to(&c.reps);
    let mut violations = Vec::new();
    for v in &vectors {
        for w in &covectors {
            let s = inner_product(t, v, w)?;
            if !t.is_null(&s) {
                violations.push(json!({ "vector": vec_json(t, v), "covector": vec_json(t, w), "sum": t.format_sum(&s) }));
            }
        }
    }
    Ok(PerfectnessReport {
        status: if violations.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        },
        vectors: vectors.len(),
        covectors: covectors.len(),
        violations,
    })
}

/// Circuits of the matroid defined by `φ`, as a circuit set.
pub fn circuit_set_of_gp<T: Tract>(
    t: &T,
    phi: &GPFunction<T::Unit>,
) -> Result<CircuitSet<T::Unit>> {
    CircuitSet::new(t, phi.ground_size(), circuits_from_gp(t, phi)?)
}

/// Groups circuit representatives by support, for reporting.
pub fn by_support<U: Clone + PartialEq>(c: &CircuitSet<U>) -> HashMap<Subset, Vector<U>> {
    c.reps.iter().map(|x| (x.support(), x.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tracts::{Krasner, Sign, SignHyperfield};

    fn sv(v: &[i8]) -> Vector<Sign> {
        Vector::new(
            v.iter()
                .map(|&x| match x {
                    0 => None,
                    1 => Some(Sign::Pos),
                    _ => Some(Sign::Neg),
                })
                .collect(),
        )
    }

    /// Signed circuits of four points on a line, from the kernel of
    /// `[[1,1,1,1],[1,2,3,4]]`.
    fn oriented_u24() -> CircuitSet<Sign> {
        let vs = [[1, -2, 1, 0], [2, -3, 0, 1], [1, 0, -3, 2], [0, 1, -2, 1]]
            .iter()
            .map(|v| sv(&v.map(|x: i8| x.signum())))
            .collect::<Vec<_>>();
        CircuitSet::new(&SignHyperfield, 4, vs).unwrap()
    }

    #[test]
    fn oriented_u24_is_strong() {
        let t = SignHyperfield;
        let c = oriented_u24();
        for mode in [AxiomMode::Weak, AxiomMode::Strong, AxiomMode::C3pp] {
            let r = check_circuit_axioms(&t, &c, mode);
            assert!(r.passed(), "{mode:?}: {r:?}");
        }
        assert!(underlying_matroid_of(&c)
            .unwrap()
            .same_as(&ClassicalMatroid::uniform(2, 4).unwrap()));
    }

    #[test]
    fn flipped_entry_breaks_elimination() {
        let t = SignHyperfield;
        let mut vs = oriented_u24().reps().to_vec();
        let mut e = vs[0].entries().to_vec();
        e[2] = e[2].map(Sign::flip);
        vs[0] = Vector::new(e);
        let c = CircuitSet::new(&t, 4, vs).unwrap();
        let r = check_circuit_axioms(&t, &c, AxiomMode::Weak);
        assert!(r.has_axiom("C3'"), "{r:?}");
    }

    #[test]
    fn cocircuit_strategies_agree() {
        let t = SignHyperfield;
        let c = oriented_u24();
        let d = cocircuits_checked(&t, &c).unwrap();
        assert_eq!(d.orbit(&t).unwrap().len(), 8);
        assert!(check_dual_pair(&t, &c, &d, AxiomMode::Strong).passed());
        let small = CircuitSet::new(&t, 2, [sv(&[1, -1])]).unwrap();
        let co = cocircuits_checked(&t, &small).unwrap();
        assert!(co.projectively_equal(&t, &CircuitSet::new(&t, 2, [sv(&[1, 1])]).unwrap()));
    }

    #[test]
    fn krasner_u23_cocircuits() {
        let c = CircuitSet::new(&Krasner, 3, [Vector::new(vec![Some(()); 3])]).unwrap();
        let d = cocircuits_of(&Krasner, &c, CocircuitStrategy::Brute).unwrap();
        assert_eq!(d.len(), 3);
        assert!(d.supports().iter().all(|s| s.len() == 2));
    }

    #[test]
    fn minors_of_oriented_u24() {
        let t = SignHyperfield;
        let c = oriented_u24();
        let a = Subset::singleton(3);
        let del = circuit_minor(&t, &c, a, MinorOp::Delete);
        assert_eq!(del.len(), 1);
        let con = circuit_minor(&t, &c, a, MinorOp::Contract);
        assert!(underlying_matroid_of(&con)
            .unwrap()
            .same_as(&ClassicalMatroid::uniform(1, 3).unwrap()));
        assert!(circuit_minor(&t, &c, Subset::EMPTY, MinorOp::Delete).projectively_equal(&t, &c));
    }

    #[test]
    fn perfect_over_signs() {
        let r = perfectness_probe(&SignHyperfield, &oriented_u24()).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert!(r.vectors > 0 && r.covectors > 0);
    }
}
