//! The tract abstraction: a multiplicative group `G` together with a null set
//! `N_G` of formal sums over `G`, plus the verifiers for tract axioms,
//! double distributivity and homomorphisms.

use std::fmt;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};

/// An element of `F = G ∪ {0}`; `None` is zero.
pub type Element<U> = Option<U>;

/// Deterministic RNG used by every sampled check.
pub type SampleRng = ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 0xB0B1;

/// A finite multiset over `G`, i.e. an element of `N[G]`.
#[derive(Clone, PartialEq)]
pub struct FormalSum<U> {
    terms: Vec<(U, u32)>,
}

impl<U> Default for FormalSum<U> {
    fn default() -> Self {
        FormalSum { terms: Vec::new() }
    }
}

impl<U: Clone + PartialEq> FormalSum<U> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_units<I: IntoIterator<Item = U>>(it: I) -> Self {
        let mut s = Self::new();
        for u in it {
            s.push(u);
        }
        s
    }

    /// Builds a sum from `(unit, multiplicity)` pairs; zero multiplicities are dropped.
    pub fn from_terms<I: IntoIterator<Item = (U, u32)>>(it: I) -> Self {
        let mut s = Self::new();
        for (u, n) in it {
            s.push_n(u, n);
        }
        s
    }

    pub fn push(&mut self, u: U) {
        self.push_n(u, 1);
    }

    pub fn push_n(&mut self, u: U, n: u32) {
        if n == 0 {
            return;
        }
        match self.terms.iter_mut().find(|(v, _)| *v == u) {
            Some((_, k)) => *k += n,
            None => self.terms.push((u, n)),
        }
    }

    /// Adds a term unless the element is zero.
    pub fn push_elem(&mut self, e: Element<U>) {
        if let Some(u) = e {
            self.push(u);
        }
    }

    pub fn terms(&self) -> &[(U, u32)] {
        &self.terms
    }

    /// Units with multiplicity expanded.
    pub fn units(&self) -> impl Iterator<Item = &U> + '_ {
        self.terms
            .iter()
            .flat_map(|(u, n)| std::iter::repeat_n(u, *n as usize))
    }

    /// Number of terms counted with multiplicity.
    pub fn len(&self) -> usize {
        self.terms.iter().map(|(_, n)| *n as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn map<V: Clone + PartialEq>(&self, mut f: impl FnMut(&U) -> Element<V>) -> FormalSum<V> {
        let mut out = FormalSum::new();
        for (u, n) in &self.terms {
            if let Some(v) = f(u) {
                out.push_n(v, *n);
            }
        }
        out
    }

    pub fn extend(&mut self, other: &FormalSum<U>) {
        for (u, n) in &other.terms {
            self.push_n(u.clone(), *n);
        }
    }
}

impl<U: fmt::Debug> fmt::Debug for FormalSum<U> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.terms.iter().map(|(u, n)| (u, n)))
            .finish()
    }
}

/// A tract `(G, N_G)`.
///
/// Implementors provide the group law on units and the null-set membership
/// predicate. Everything else in the crate is written against this trait.
pub trait Tract: Clone + fmt::Debug + Send + Sync {
    type Unit: Clone + fmt::Debug + PartialEq + Send + Sync;

    /// Serialization key, e.g. `"sign"` or `"field:gf3"`.
    fn id(&self) -> String;

    fn one(&self) -> Self::Unit;

    /// The unique `ε` with `1 + ε ∈ N_G`.
    fn epsilon(&self) -> Self::Unit;

    fn mul(&self, a: &Self::Unit, b: &Self::Unit) -> Self::Unit;

    fn inv(&self, a: &Self::Unit) -> Self::Unit;

    /// Involution used by the inner product; the identity unless overridden.
    fn involution(&self, a: &Self::Unit) -> Self::Unit {
        a.clone()
    }

    fn is_null(&self, s: &FormalSum<Self::Unit>) -> bool;

    /// Equality of units; tracts with inexact payloads compare with a tolerance.
    fn unit_eq(&self, a: &Self::Unit, b: &Self::Unit) -> bool {
        a == b
    }

    /// Full list of units for finite tracts.
    fn units(&self) -> Option<Vec<Self::Unit>> {
        None
    }

    fn random_unit(&self, rng: &mut SampleRng) -> Self::Unit;

    /// A random member of `N_G` with about `terms` summands, if the tract knows
    /// how to build one.
    fn random_null_sum(
        &self,
        _rng: &mut SampleRng,
        _terms: usize,
    ) -> Option<FormalSum<Self::Unit>> {
        None
    }

    /// The hypersum `x ⊞ y` as an explicit set, when it is finite and known.
    fn hyper_add(
        &self,
        x: &Element<Self::Unit>,
        y: &Element<Self::Unit>,
    ) -> Option<Vec<Element<Self::Unit>>> {
        let units = self.units()?;
        let mut s = FormalSum::new();
        s.push_elem(x.clone());
        s.push_elem(y.clone());
        let mut out = Vec::new();
        for w in std::iter::once(None).chain(units.into_iter().map(Some)) {
            if hypersum_contains(self, &s, &w) {
                out.push(w);
            }
        }
        Some(out)
    }

    fn check_unit(&self, _a: &Self::Unit) -> Result<()> {
        Ok(())
    }

    fn parse_unit(&self, s: &str) -> Result<Self::Unit>;

    fn format_unit(&self, a: &Self::Unit) -> String;

    /// Known double-distributivity status for built-in tracts.
    fn dd_hint(&self) -> DdHint<Self::Unit> {
        DdHint::Unknown
    }

    // ---- provided helpers ----

    fn neg(&self, a: &Self::Unit) -> Self::Unit {
        self.mul(&self.epsilon(), a)
    }

    fn div(&self, a: &Self::Unit, b: &Self::Unit) -> Self::Unit {
        self.mul(a, &self.inv(b))
    }

    fn mul_elem(&self, a: &Element<Self::Unit>, b: &Element<Self::Unit>) -> Element<Self::Unit> {
        match (a, b) {
            (Some(a), Some(b)) => Some(self.mul(a, b)),
            _ => None,
        }
    }

    fn neg_elem(&self, a: &Element<Self::Unit>) -> Element<Self::Unit> {
        a.as_ref().map(|a| self.neg(a))
    }

    fn involution_elem(&self, a: &Element<Self::Unit>) -> Element<Self::Unit> {
        a.as_ref().map(|a| self.involution(a))
    }

    fn elem_eq(&self, a: &Element<Self::Unit>, b: &Element<Self::Unit>) -> bool {
        match (a, b) {
            (None, None) => true,
            (Some(a), Some(b)) => self.unit_eq(a, b),
            _ => false,
        }
    }

    /// All elements including zero, for finite tracts.
    fn elements(&self) -> Option<Vec<Element<Self::Unit>>> {
        Some(
            std::iter::once(None)
                .chain(self.units()?.into_iter().map(Some))
                .collect(),
        )
    }

    fn parse_elem(&self, s: &str) -> Result<Element<Self::Unit>> {
        if s.trim() == "0" {
            Ok(None)
        } else {
            let u = self.parse_unit(s.trim())?;
            self.check_unit(&u)?;
            Ok(Some(u))
        }
    }

    fn format_elem(&self, a: &Element<Self::Unit>) -> String {
        match a {
            None => "0".to_string(),
            Some(u) => self.format_unit(u),
        }
    }

    fn format_sum(&self, s: &FormalSum<Self::Unit>) -> String {
        let body = s
            .terms()
            .iter()
            .map(|(u, n)| format!("{}:{}", self.format_unit(u), n))
            .join(", ");
        format!("{{{body}}}")
    }

    fn scale_sum(&self, g: &Self::Unit, s: &FormalSum<Self::Unit>) -> FormalSum<Self::Unit> {
        s.map(|u| Some(self.mul(g, u)))
    }
}

/// Stored knowledge about double distributivity of a built-in tract.
#[derive(Clone, Debug)]
pub enum DdHint<U> {
    Unknown,
    Holds,
    /// `(x, y, z, t, w)` with `w` in exactly one of the two sides.
    Witness([Element<U>; 5]),
}

/// `w ∈ ⊞ s`. For `w = 0` this is nullity of `s`; otherwise nullity of `s - w`.
pub fn hypersum_contains<T: Tract>(
    tract: &T,
    s: &FormalSum<T::Unit>,
    w: &Element<T::Unit>,
) -> bool {
    match w {
        None => tract.is_null(s),
        Some(w) => {
            let mut t = s.clone();
            t.push(tract.neg(w));
            tract.is_null(&t)
        }
    }
}

/// Budget for exhaustive and sampled verification.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct CheckBudget {
    pub max_terms: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Default for CheckBudget {
    fn default() -> Self {
        CheckBudget {
            max_terms: 5,
            samples: 10_000,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    SampledPass,
    Fail,
    Inconclusive,
}

impl Status {
    pub fn is_failure(self) -> bool {
        self == Status::Fail
    }
}

/// Outcome of a tract or homomorphism verification.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub subject: String,
    pub status: Status,
    /// Number of individual checks evaluated.
    pub checks: usize,
    pub failed_axiom: Option<String>,
    pub witness: Option<String>,
}

impl Report {
    fn pass(subject: String, exhaustive: bool, checks: usize) -> Report {
        Report {
            subject,
            status: if exhaustive {
                Status::Pass
            } else {
                Status::SampledPass
            },
            checks,
            failed_axiom: None,
            witness: None,
        }
    }

    fn fail(subject: String, axiom: &str, witness: String, checks: usize) -> Report {
        Report {
            subject,
            status: Status::Fail,
            checks,
            failed_axiom: Some(axiom.to_string()),
            witness: Some(witness),
        }
    }
}

/// All multisets of at most `max_terms` units drawn from `units`.
pub fn small_sums<U: Clone + PartialEq>(units: &[U], max_terms: usize) -> Vec<FormalSum<U>> {
    let mut out = vec![FormalSum::new()];
    for k in 1..=max_terms {
        for combo in (0..units.len()).combinations_with_replacement(k) {
            out.push(FormalSum::from_units(
                combo.into_iter().map(|i| units[i].clone()),
            ));
        }
    }
    out
}

fn random_sum<T: Tract>(tract: &T, rng: &mut SampleRng, max_terms: usize) -> FormalSum<T::Unit> {
    if rng.gen_bool(0.5) {
        let k = rng.gen_range(2..=max_terms.max(2));
        if let Some(s) = tract.random_null_sum(rng, k) {
            return s;
        }
    }
    let k = rng.gen_range(0..=max_terms);
    FormalSum::from_units((0..k).map(|_| tract.random_unit(rng)))
}

/// Checks (T0)-(T3), `ε² = 1`, `G ∩ N_G = ∅`, inverses and the involution.
///
/// Finite tracts are checked exhaustively over sums of at most four terms;
/// infinite ones by `budget.samples` seeded trials.
pub fn verify_tract_axioms<T: Tract>(tract: &T, budget: &CheckBudget) -> Report {
    let subject = tract.id();
    let one = tract.one();
    let eps = tract.epsilon();
    let mut checks = 0usize;

    checks += 1;
    if !tract.is_null(&FormalSum::new()) {
        return Report::fail(subject, "T0", "{}".into(), checks);
    }
    checks += 1;
    if tract.is_null(&FormalSum::from_units([one.clone()])) {
        return Report::fail(subject, "T1", "{1:1}".into(), checks);
    }
    checks += 1;
    if !tract.is_null(&FormalSum::from_units([one.clone(), eps.clone()])) {
        return Report::fail(
            subject,
            "T2",
            format!("1 + ε with ε = {} is not null", tract.format_unit(&eps)),
            checks,
        );
    }
    checks += 1;
    if !tract.unit_eq(&tract.mul(&eps, &eps), &one) {
        return Report::fail(subject, "eps-squared", tract.format_unit(&eps), checks);
    }

    match tract.units() {
        Some(units) => {
            for g in &units {
                checks += 1;
                if !tract.unit_eq(g, &eps)
                    && tract.is_null(&FormalSum::from_units([one.clone(), g.clone()]))
                {
                    return Report::fail(
                        subject,
                        "T2",
                        format!("g = {}", tract.format_unit(g)),
                        checks,
                    );
                }
                if let Some(r) = unit_checks(tract, g, &subject, &mut checks) {
                    return r;
                }
            }
            for s in small_sums(&units, 4) {
                let null = tract.is_null(&s);
                for g in &units {
                    checks += 1;
                    if tract.is_null(&tract.scale_sum(g, &s)) != null {
                        return Report::fail(
                            subject,
                            "T3",
                            format!("s = {}, g = {}", tract.format_sum(&s), tract.format_unit(g)),
                            checks,
                        );
                    }
                }
            }
            Report::pass(subject, true, checks)
        }
        None => {
            let mut rng = SampleRng::seed_from_u64(budget.seed);
            for _ in 0..budget.samples {
                let g = tract.random_unit(&mut rng);
                checks += 1;
                if !tract.unit_eq(&g, &eps)
                    && tract.is_null(&FormalSum::from_units([one.clone(), g.clone()]))
                {
                    return Report::fail(
                        subject,
                        "T2",
                        format!("g = {}", tract.format_unit(&g)),
                        checks,
                    );
                }
                if let Some(r) = unit_checks(tract, &g, &subject, &mut checks) {
                    return r;
                }
                let s = random_sum(tract, &mut rng, 4);
                checks += 1;
                if tract.is_null(&tract.scale_sum(&g, &s)) != tract.is_null(&s) {
                    return Report::fail(
                        subject,
                        "T3",
                        format!(
                            "s = {}, g = {}",
                            tract.format_sum(&s),
                            tract.format_unit(&g)
                        ),
                        checks,
                    );
                }
            }
            Report::pass(subject, false, checks)
        }
    }
}

fn unit_checks<T: Tract>(
    tract: &T,
    g: &T::Unit,
    subject: &str,
    checks: &mut usize,
) -> Option<Report> {
    let one = tract.one();
    *checks += 1;
    if tract.is_null(&FormalSum::from_units([g.clone()])) {
        return Some(Report::fail(
            subject.into(),
            "G-disjoint-N",
            tract.format_unit(g),
            *checks,
        ));
    }
    if !tract.unit_eq(&tract.mul(g, &tract.inv(g)), &one) {
        return Some(Report::fail(
            subject.into(),
            "inverse",
            tract.format_unit(g),
            *checks,
        ));
    }
    let tau = tract.involution(g);
    if !tract.unit_eq(&tract.involution(&tau), g) {
        return Some(Report::fail(
            subject.into(),
            "involution",
            tract.format_unit(g),
            *checks,
        ));
    }
    // τ is a homomorphism, so it must fix 1 + ε
    let pair = FormalSum::from_units([tract.involution(&one), tract.involution(&tract.epsilon())]);
    if !tract.is_null(&pair) {
        return Some(Report::fail(
            subject.into(),
            "involution",
            "τ(1) + τ(ε)".into(),
            *checks,
        ));
    }
    None
}

/// Verdict of a double-distributivity check.
#[derive(Clone, Debug)]
pub struct DdVerdict<U> {
    pub status: Status,
    pub checks: usize,
    /// `(x, y, z, t, w)`, and whether `w` lies in `(x⊞y)(z⊞t)` and in `xz⊞xt⊞yz⊞yt`.
    pub witness: Option<([Element<U>; 5], bool, bool)>,
}

impl<U> DdVerdict<U> {
    pub fn holds(&self) -> Option<bool> {
        match self.status {
            Status::Pass | Status::SampledPass => Some(true),
            Status::Fail => Some(false),
            Status::Inconclusive => None,
        }
    }
}

impl<U: Clone + PartialEq> DdVerdict<U> {
    pub fn to_json<T: Tract<Unit = U>>(&self, tract: &T) -> serde_json::Value {
        let witness = self.witness.as_ref().map(|(w, lhs, rhs)| {
            serde_json::json!({
                "x": tract.format_elem(&w[0]),
                "y": tract.format_elem(&w[1]),
                "z": tract.format_elem(&w[2]),
                "t": tract.format_elem(&w[3]),
                "w": tract.format_elem(&w[4]),
                "in_product_of_sums": lhs,
                "in_sum_of_products": rhs,
            })
        });
        serde_json::json!({
            "tract": tract.id(),
            "status": self.status,
            "checks": self.checks,
            "witness": witness,
        })
    }
}

fn pair_sum<T: Tract>(x: &Element<T::Unit>, y: &Element<T::Unit>) -> FormalSum<T::Unit> {
    let mut s = FormalSum::new();
    s.push_elem(x.clone());
    s.push_elem(y.clone());
    s
}

/// `w ∈ xz ⊞ xt ⊞ yz ⊞ yt`.
fn in_expanded<T: Tract>(tract: &T, q: &[Element<T::Unit>; 5]) -> bool {
    let [x, y, z, t, w] = q;
    let mut s = FormalSum::new();
    for (a, b) in [(x, z), (x, t), (y, z), (y, t)] {
        s.push_elem(tract.mul_elem(a, b));
    }
    hypersum_contains(tract, &s, w)
}

/// `w ∈ (x ⊞ y)(z ⊞ t)`, or `None` when neither factor hypersum is finite.
fn in_factored<T: Tract>(tract: &T, q: &[Element<T::Unit>; 5]) -> Option<bool> {
    let [x, y, z, t, w] = q;
    let xy = pair_sum::<T>(x, y);
    let zt = pair_sum::<T>(z, t);
    let Some(w) = w else {
        return Some(tract.is_null(&xy) || tract.is_null(&zt));
    };
    let try_side =
        |a_side: &Element<T::Unit>, b_side: &Element<T::Unit>, other: &FormalSum<T::Unit>| {
            tract.hyper_add(a_side, b_side).map(|cands| {
                cands.iter().flatten().any(|a| {
                    let b = Some(tract.div(w, a));
                    hypersum_contains(tract, other, &b)
                })
            })
        };
    try_side(x, y, &zt).or_else(|| try_side(z, t, &xy))
}

/// Checks `(x⊞y)(z⊞t) = xz⊞xt⊞yz⊞yt`.
///
/// Finite tracts are checked exhaustively. Infinite tracts first try their
/// stored witness, then fall back to seeded sampling; without a stored
/// `Holds` hint an unrefuted sample run is inconclusive.
pub fn is_doubly_distributive<T: Tract>(tract: &T, budget: &CheckBudget) -> DdVerdict<T::Unit> {
    let mut checks = 0;
    if let Some(elems) = tract.elements() {
        for x in &elems {
            for y in &elems {
                for z in &elems {
                    for t in &elems {
                        for w in &elems {
                            let q = [x.clone(), y.clone(), z.clone(), t.clone(), w.clone()];
                            checks += 1;
                            let Some(lhs) = in_factored(tract, &q) else {
                                return DdVerdict {
                                    status: Status::Inconclusive,
                                    checks,
                                    witness: None,
                                };
                            };
                            let rhs = in_expanded(tract, &q);
                            if lhs != rhs {
                                return DdVerdict {
                                    status: Status::Fail,
                                    checks,
                                    witness: Some((q, lhs, rhs)),
                                };
                            }
                        }
                    }
                }
            }
        }
        return DdVerdict {
            status: Status::Pass,
            checks,
            witness: None,
        };
    }

    let hint = tract.dd_hint();
    if let DdHint::Witness(q) = &hint {
        checks += 1;
        if let Some(lhs) = in_factored(tract, q) {
            let rhs = in_expanded(tract, q);
            if lhs != rhs {
                return DdVerdict {
                    status: Status::Fail,
                    checks,
                    witness: Some((q.clone(), lhs, rhs)),
                };
            }
        }
    }

    let mut rng = SampleRng::seed_from_u64(budget.seed);
    for _ in 0..budget.samples {
        let pick = |rng: &mut SampleRng, prev: &[T::Unit]| -> T::Unit {
            // reuse earlier draws often so that coincidences get exercised
            if !prev.is_empty() && rng.gen_bool(0.4) {
                let p = prev[rng.gen_range(0..prev.len())].clone();
                if rng.gen_bool(0.5) {
                    tract.neg(&p)
                } else {
                    p
                }
            } else {
                tract.random_unit(rng)
            }
        };
        let mut drawn = Vec::new();
        for _ in 0..4 {
            let u = pick(&mut rng, &drawn);
            drawn.push(u);
        }
        let [x, y, z, t]: [T::Unit; 4] = drawn.clone().try_into().expect("four draws");
        let w = match rng.gen_range(0..4) {
            0 => None,
            1 => Some(tract.mul(&x, &z)),
            2 => Some(tract.mul(&y, &t)),
            _ => Some(tract.random_unit(&mut rng)),
        };
        let q = [Some(x), Some(y), Some(z), Some(t), w];
        let Some(lhs) = in_factored(tract, &q) else {
            continue;
        };
        checks += 1;
        let rhs = in_expanded(tract, &q);
        if lhs != rhs {
            return DdVerdict {
                status: Status::Fail,
                checks,
                witness: Some((q, lhs, rhs)),
            };
        }
    }
    DdVerdict {
        status: match hint {
            DdHint::Holds => Status::SampledPass,
            _ => Status::Inconclusive,
        },
        checks,
        witness: None,
    }
}

/// A homomorphism of tracts, given by its action on units.
///
/// A well-formed homomorphism never sends a unit to zero; `map_unit` still
/// returns an element so that broken maps can be represented and rejected
/// by [`verify_hom`].
pub trait TractHom: Send + Sync {
    type Source: Tract;
    type Target: Tract;

    fn name(&self) -> String;
    fn source(&self) -> &Self::Source;
    fn target(&self) -> &Self::Target;
    fn map_unit(&self, u: &<Self::Source as Tract>::Unit)
        -> Element<<Self::Target as Tract>::Unit>;

    fn apply(
        &self,
        x: &Element<<Self::Source as Tract>::Unit>,
    ) -> Element<<Self::Target as Tract>::Unit> {
        x.as_ref().and_then(|u| self.map_unit(u))
    }

    fn apply_sum(
        &self,
        s: &FormalSum<<Self::Source as Tract>::Unit>,
    ) -> FormalSum<<Self::Target as Tract>::Unit> {
        s.map(|u| self.map_unit(u))
    }
}

/// Checks `f(1) = 1`, that units go to units, multiplicativity and
/// null preservation (exhaustive over sums of at most `budget.max_terms`
/// terms for finite sources, sampled otherwise).
pub fn verify_hom<H: TractHom>(h: &H, budget: &CheckBudget) -> Report {
    let src = h.source();
    let dst = h.target();
    let subject = h.name();
    let mut checks = 1;
    match h.map_unit(&src.one()) {
        Some(v) if dst.unit_eq(&v, &dst.one()) => {}
        other => {
            return Report::fail(
                subject,
                "unital",
                format!("f(1) = {}", dst.format_elem(&other)),
                checks,
            )
        }
    }

    let check_pair = |a: &<H::Source as Tract>::Unit,
                      b: &<H::Source as Tract>::Unit,
                      checks: &mut usize|
     -> Option<Report> {
        *checks += 1;
        let (fa, fb, fab) = (h.map_unit(a), h.map_unit(b), h.map_unit(&src.mul(a, b)));
        for (u, fu) in [(a, &fa), (b, &fb)] {
            if fu.is_none() {
                return Some(Report::fail(
                    subject.clone(),
                    "multiplicative",
                    format!("unit {} maps to 0", src.format_unit(u)),
                    *checks,
                ));
            }
        }
        if !dst.elem_eq(&dst.mul_elem(&fa, &fb), &fab) {
            return Some(Report::fail(
                subject.clone(),
                "multiplicative",
                format!("a = {}, b = {}", src.format_unit(a), src.format_unit(b)),
                *checks,
            ));
        }
        None
    };
    let check_null =
        |s: &FormalSum<<H::Source as Tract>::Unit>, checks: &mut usize| -> Option<Report> {
            *checks += 1;
            if src.is_null(s) && !dst.is_null(&h.apply_sum(s)) {
                return Some(Report::fail(
                    subject.clone(),
                    "null-preserving",
                    src.format_sum(s),
                    *checks,
                ));
            }
            None
        };

    match src.units() {
        Some(units) => {
            for a in &units {
                for b in &units {
                    if let Some(r) = check_pair(a, b, &mut checks) {
                        return r;
                    }
                }
            }
            for s in small_sums(&units, budget.max_terms) {
                if let Some(r) = check_null(&s, &mut checks) {
                    return r;
                }
            }
            Report::pass(subject, true, checks)
        }
        None => {
            let mut rng = SampleRng::seed_from_u64(budget.seed);
            for _ in 0..budget.samples {
                let a = src.random_unit(&mut rng);
                let b = src.random_unit(&mut rng);
                if let Some(r) = check_pair(&a, &b, &mut checks) {
                    return r;
                }
                let s = random_sum(src, &mut rng, budget.max_terms);
                if let Some(r) = check_null(&s, &mut checks) {
                    return r;
                }
            }
            Report::pass(subject, false, checks)
        }
    }
}

pub(crate) fn invalid<T: Tract>(tract: &T, detail: impl Into<String>) -> Error {
    Error::InvalidElement {
        tract: tract.id(),
        detail: detail.into(),
    }
}
