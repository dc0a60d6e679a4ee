//! Classical matroids given by their circuits.

use std::collections::HashSet;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::subset::{Subset, MAX_GROUND};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MinorOp {
    Delete,
    Contract,
}

/// A matroid on `{0, .., m-1}`. Rank and bases are computed at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalMatroid {
    m: usize,
    circuits: Vec<Subset>,
    rank: usize,
    bases: Vec<Subset>,
}

fn check_ground(m: usize) -> Result<()> {
    if m > MAX_GROUND {
        Err(Error::GroundSetSize(m))
    } else {
        Ok(())
    }
}

/// Sorted, deduplicated copy of a family of subsets (lexicographic on
/// element lists).
fn canonical(family: impl IntoIterator<Item = Subset>) -> Vec<Subset> {
    let mut v: Vec<Subset> = family
        .into_iter()
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    v.sort_by_key(|s| (s.len(), s.to_vec()));
    v
}

impl ClassicalMatroid {
    /// Validates a circuit family: nonempty, pairwise incomparable, and
    /// closed under elimination.
    pub fn from_circuits(m: usize, supports: impl IntoIterator<Item = Subset>) -> Result<Self> {
        check_ground(m)?;
        let circuits = canonical(supports);
        let full = Subset::full(m);
        for c in &circuits {
            if c.is_empty() {
                return Err(Error::NotAMatroid("the empty set is a circuit".into()));
            }
            if !c.is_subset(full) {
                return Err(Error::NotAMatroid(format!(
                    "{c} is not a subset of the ground set"
                )));
            }
        }
        for (a, b) in circuits.iter().tuple_combinations() {
            if a.is_subset(*b) || b.is_subset(*a) {
                return Err(Error::NotAMatroid(format!(
                    "circuits {a} and {b} are comparable"
                )));
            }
        }
        for (a, b) in circuits.iter().tuple_combinations() {
            for e in a.intersection(*b).iter() {
                let target = a.union(*b).remove(e);
                if !circuits.iter().any(|c| c.is_subset(target)) {
                    return Err(Error::NotAMatroid(format!(
                        "no circuit inside ({a} ∪ {b}) - {} eliminates element {}",
                        e + 1,
                        e + 1
                    )));
                }
            }
        }
        Ok(Self::build(m, circuits))
    }

    fn build(m: usize, circuits: Vec<Subset>) -> Self {
        let mut mat = ClassicalMatroid {
            m,
            circuits,
            rank: 0,
            bases: Vec::new(),
        };
        mat.rank = mat.rank_of(Subset::full(m));
        mat.bases = Subset::k_subsets(m, mat.rank)
            .into_iter()
            .filter(|b| mat.is_independent(*b))
            .collect();
        mat
    }

    /// Validates a basis family by the exchange axiom and derives circuits.
    pub fn from_bases(m: usize, bases: impl IntoIterator<Item = Subset>) -> Result<Self> {
        check_ground(m)?;
        let bases = canonical(bases);
        let Some(first) = bases.first() else {
            return Err(Error::NotAMatroid("no bases".into()));
        };
        let r = first.len();
        if bases
            .iter()
            .any(|b| b.len() != r || !b.is_subset(Subset::full(m)))
        {
            return Err(Error::NotAMatroid("bases of different sizes".into()));
        }
        let set: HashSet<Subset> = bases.iter().copied().collect();
        for b1 in &bases {
            for b2 in &bases {
                for x in b1.difference(*b2).iter() {
                    let ok = b2
                        .difference(*b1)
                        .iter()
                        .any(|y| set.contains(&b1.remove(x).insert(y)));
                    if !ok {
                        return Err(Error::NotAMatroid(format!(
                            "basis exchange fails for {b1}, {b2} at {}",
                            x + 1
                        )));
                    }
                }
            }
        }
        let independent = |s: Subset| bases.iter().any(|b| s.is_subset(*b));
        let circuits = Subset::full(m)
            .subsets()
            .filter(|s| {
                !s.is_empty() && !independent(*s) && s.iter().all(|e| independent(s.remove(e)))
            })
            .collect::<Vec<_>>();
        Ok(ClassicalMatroid {
            m,
            circuits: canonical(circuits),
            rank: r,
            bases,
        })
    }

    pub fn uniform(r: usize, m: usize) -> Result<Self> {
        check_ground(m)?;
        if r > m {
            return Err(Error::NotAMatroid(format!("rank {r} exceeds {m} elements")));
        }
        Ok(Self::build(m, Subset::k_subsets(m, r + 1)))
    }

    /// The cycle matroid of `K4`, edges ordered `12, 13, 14, 23, 24, 34`.
    pub fn k4() -> Self {
        let edges = k4_edges();
        let mut circuits = Vec::new();
        for k in 3..=4 {
            for cyc in (0..6).combinations(k) {
                if is_cycle(&cyc.iter().map(|&i| edges[i]).collect::<Vec<_>>()) {
                    circuits.push(Subset::from_indices(cyc));
                }
            }
        }
        Self::build(6, canonical(circuits))
    }

    /// `U{r},{m}` or `MK4`.
    pub fn named(name: &str) -> Result<Self> {
        if name == "MK4" {
            return Ok(Self::k4());
        }
        let parse = || -> Option<(usize, usize)> {
            let (r, m) = name.strip_prefix('U')?.split_once(',')?;
            Some((r.trim().parse().ok()?, m.trim().parse().ok()?))
        };
        let (r, m) =
            parse().ok_or_else(|| Error::Parse(format!("unknown matroid name `{name}`")))?;
        Self::uniform(r, m)
    }

    pub fn ground_size(&self) -> usize {
        self.m
    }

    pub fn circuits(&self) -> &[Subset] {
        &self.circuits
    }

    /// Bases in lexicographic order.
    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_independent(&self, a: Subset) -> bool {
        !self.circuits.iter().any(|c| c.is_subset(a))
    }

    pub fn is_basis(&self, b: Subset) -> bool {
        b.len() == self.rank && self.is_independent(b)
    }

    pub fn is_circuit(&self, c: Subset) -> bool {
        self.circuits.contains(&c)
    }

    /// Greedy rank: size of a maximal independent subset of `a`.
    pub fn rank_of(&self, a: Subset) -> usize {
        self.max_independent(a).len()
    }

    /// The lexicographically first maximal independent subset of `a`.
    pub fn max_independent(&self, a: Subset) -> Subset {
        a.iter().fold(Subset::EMPTY, |acc, e| {
            let next = acc.insert(e);
            if self.is_independent(next) {
                next
            } else {
                acc
            }
        })
    }

    pub fn nullity(&self, a: Subset) -> usize {
        a.len() - self.rank_of(a)
    }

    /// Matroid whose bases are the complements of the bases of `self`.
    pub fn dual(&self) -> Self {
        let full = Subset::full(self.m);
        Self::from_bases(self.m, self.bases.iter().map(|b| full.difference(*b)))
            .expect("complements of bases form a matroid")
    }

    /// Circuits of the dual.
    pub fn cocircuits(&self) -> Vec<Subset> {
        self.dual().circuits
    }

    /// The unique circuit in `B ∪ {e}`.
    pub fn fundamental_circuit(&self, b: Subset, e: usize) -> Result<Subset> {
        if !self.is_basis(b) {
            return Err(Error::NotABasis(b.to_string()));
        }
        if b.contains(e) {
            return Err(Error::ElementInBasis(e + 1));
        }
        let be = b.insert(e);
        Ok(*self
            .circuits
            .iter()
            .find(|c| c.is_subset(be))
            .expect("B + e is dependent"))
    }

    /// Whether the circuits form a modular family: the nullity of their
    /// union equals their number.
    pub fn is_modular_family(&self, family: &[Subset]) -> Result<bool> {
        for c in family {
            if !self.is_circuit(*c) {
                return Err(Error::NotACircuit(c.to_string()));
            }
        }
        let union = family.iter().fold(Subset::EMPTY, |a, c| a.union(*c));
        Ok(self.nullity(union) == family.len())
    }

    pub fn minor(&self, a: Subset, op: MinorOp) -> Self {
        let m = self.m - a.len();
        let circuits: Vec<Subset> = match op {
            MinorOp::Delete => self
                .circuits
                .iter()
                .filter(|c| c.intersection(a).is_empty())
                .map(|c| c.compress(a))
                .collect(),
            MinorOp::Contract => {
                let shrunk: Vec<Subset> = self
                    .circuits
                    .iter()
                    .map(|c| c.difference(a))
                    .filter(|c| !c.is_empty())
                    .collect();
                shrunk
                    .iter()
                    .filter(|c| !shrunk.iter().any(|d| d != *c && d.is_subset(**c)))
                    .map(|c| c.compress(a))
                    .collect()
            }
        };
        Self::build(m, canonical(circuits))
    }

    /// Same matroid as `other` (equal circuit families on equal ground sets).
    pub fn same_as(&self, other: &Self) -> bool {
        self.m == other.m && self.circuits == other.circuits
    }
}

pub(crate) fn k4_edges() -> [(usize, usize); 6] {
    [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
}

/// Whether the edges form a single cycle.
fn is_cycle(edges: &[(usize, usize)]) -> bool {
    let mut deg = [0usize; 4];
    for &(u, v) in edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    if deg.iter().any(|&d| d != 0 && d != 2) {
        return false;
    }
    // connected: walk from the first edge
    let mut seen = vec![edges[0]];
    let mut changed = true;
    while changed {
        changed = false;
        for &e in edges {
            if !seen.contains(&e)
                && seen
                    .iter()
                    .any(|s| s.0 == e.0 || s.0 == e.1 || s.1 == e.0 || s.1 == e.1)
            {
                seen.push(e);
                changed = true;
            }
        }
    }
    seen.len() == edges.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[usize]) -> Subset {
        Subset::from_indices(v.iter().map(|e| e - 1))
    }

    #[test]
    fn validates_circuits() {
        let m = ClassicalMatroid::from_circuits(3, [s(&[1, 2]), s(&[1, 3]), s(&[2, 3])]).unwrap();
        assert_eq!(m.rank(), 1);
        assert!(m.same_as(&ClassicalMatroid::uniform(1, 3).unwrap()));
        let err = ClassicalMatroid::from_circuits(3, [s(&[1, 2]), s(&[2, 3])]).unwrap_err();
        assert!(err.to_string().contains("eliminates element 2"), "{err}");
        assert!(ClassicalMatroid::from_circuits(3, [s(&[1]), s(&[1, 2])]).is_err());
    }

    #[test]
    fn k4_structure() {
        let k4 = ClassicalMatroid::k4();
        assert_eq!(k4.circuits().len(), 7);
        assert_eq!(k4.rank(), 3);
        assert_eq!(k4.bases().len(), 16);
        assert_eq!(k4.rank_of(s(&[1, 2, 4])), 2);
    }

    #[test]
    fn ranks_and_duals() {
        let u24 = ClassicalMatroid::uniform(2, 4).unwrap();
        assert_eq!(u24.rank_of(s(&[1, 2, 3])), 2);
        assert_eq!(u24.rank_of(Subset::EMPTY), 0);
        assert!(u24.dual().same_as(&u24));
        let u13 = ClassicalMatroid::uniform(1, 3).unwrap();
        assert!(u13
            .dual()
            .same_as(&ClassicalMatroid::uniform(2, 3).unwrap()));
        let free = ClassicalMatroid::uniform(3, 3).unwrap();
        assert_eq!(free.dual().circuits().len(), 3);
        assert!(free.dual().circuits().iter().all(|c| c.len() == 1));
    }

    #[test]
    fn fundamental_circuits() {
        let u24 = ClassicalMatroid::uniform(2, 4).unwrap();
        assert_eq!(
            u24.fundamental_circuit(s(&[1, 2]), 2).unwrap(),
            s(&[1, 2, 3])
        );
        assert!(u24.fundamental_circuit(s(&[1, 2]), 0).is_err());
        assert!(u24.fundamental_circuit(s(&[1]), 2).is_err());
        let u13 = ClassicalMatroid::uniform(1, 3).unwrap();
        assert_eq!(u13.fundamental_circuit(s(&[1]), 1).unwrap(), s(&[1, 2]));
    }

    #[test]
    fn modular_families() {
        let u24 = ClassicalMatroid::uniform(2, 4).unwrap();
        assert!(u24
            .is_modular_family(&[s(&[1, 2, 3]), s(&[1, 2, 4])])
            .unwrap());
        assert!(u24.is_modular_family(&[s(&[1, 2, 3])]).unwrap());
        let u36 = ClassicalMatroid::uniform(3, 6).unwrap();
        assert!(!u36
            .is_modular_family(&[s(&[1, 2, 3, 4]), s(&[3, 4, 5, 6])])
            .unwrap());
        assert!(u24.is_modular_family(&[s(&[1, 2])]).is_err());
    }

    #[test]
    fn minors() {
        let u24 = ClassicalMatroid::uniform(2, 4).unwrap();
        let d = u24.minor(s(&[4]), MinorOp::Delete);
        assert!(d.same_as(&ClassicalMatroid::uniform(2, 3).unwrap()));
        let c = u24.minor(s(&[4]), MinorOp::Contract);
        assert!(c.same_as(&ClassicalMatroid::uniform(1, 3).unwrap()));
        assert!(u24.minor(Subset::EMPTY, MinorOp::Delete).same_as(&u24));
    }

    #[test]
    fn named_matroids() {
        assert_eq!(ClassicalMatroid::named("U2,5").unwrap().bases().len(), 10);
        assert_eq!(ClassicalMatroid::named("MK4").unwrap().rank(), 3);
        assert!(ClassicalMatroid::named("V2").is_err());
    }
}
