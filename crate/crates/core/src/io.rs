//! JSON file formats. Element indices in files are 1-based.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::axioms::CircuitSet;
use crate::error::{Error, Result};
use crate::gp::GPFunction;
use crate::matroid::ClassicalMatroid;
use crate::subset::{Subset, MAX_GROUND};
use crate::tract::Tract;
use crate::vectors::Vector;

/// Serialization keys of the built-in tracts.
pub const TRACT_IDS: [&str; 13] = [
    "krasner",
    "sign",
    "weaksign",
    "tropical",
    "phase",
    "phase:closed",
    "triangle",
    "field:gf2",
    "field:gf3",
    "field:q",
    "pf:regular",
    "pf:dyadic",
    "initial",
];

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GpFile {
    pub tract: String,
    pub rank: usize,
    pub ground_set: usize,
    /// Keys are comma-separated sorted 1-based subsets; omitted ones are 0.
    pub values: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CircuitFile {
    pub tract: String,
    pub ground_set: usize,
    pub circuits: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatroidFile {
    pub ground_set: usize,
    pub circuits: Vec<Vec<usize>>,
}

pub fn from_json<D: for<'de> Deserialize<'de>>(text: &str) -> Result<D> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn check_ground(m: usize) -> Result<()> {
    if m == 0 || m > MAX_GROUND {
        return Err(Error::GroundSetSize(m));
    }
    Ok(())
}

fn check_tract<T: Tract>(t: &T, id: &str) -> Result<()> {
    if t.id() != id {
        return Err(Error::TractMismatch(t.id(), id.to_string()));
    }
    Ok(())
}

/// Parses a 1-based label list into a subset of `{0, .., m-1}`.
pub fn subset_from_labels(labels: &[usize], m: usize) -> Result<Subset> {
    let mut s = Subset::EMPTY;
    for &l in labels {
        if l == 0 || l > m {
            return Err(Error::Parse(format!("element {l} outside 1..={m}")));
        }
        if s.contains(l - 1) {
            return Err(Error::Parse(format!("element {l} repeated")));
        }
        s = s.insert(l - 1);
    }
    Ok(s)
}

/// Parses a key such as `"1,2,3"`; an empty key is the empty set.
pub fn subset_from_key(key: &str, m: usize) -> Result<Subset> {
    let labels = key
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad subset key `{key}`")))
        })
        .collect::<Result<Vec<_>>>()?;
    subset_from_labels(&labels, m)
}

pub fn subset_key(s: Subset) -> String {
    s.to_labels()
        .iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn gp_from_file<T: Tract>(t: &T, f: &GpFile) -> Result<GPFunction<T::Unit>> {
    check_tract(t, &f.tract)?;
    check_ground(f.ground_set)?;
    if f.rank == 0 || f.rank > f.ground_set {
        return Err(Error::Arity {
            expected: f.ground_set,
            got: f.rank,
        });
    }
    let mut values = Vec::new();
    for (k, lit) in &f.values {
        let s = subset_from_key(k, f.ground_set)?;
        if s.len() != f.rank {
            return Err(Error::Arity {
                expected: f.rank,
                got: s.len(),
            });
        }
        values.push((s, t.parse_elem(lit)?));
    }
    GPFunction::from_values(f.ground_set, f.rank, values)
}

/// Nonzero values only.
pub fn gp_to_file<T: Tract>(t: &T, phi: &GPFunction<T::Unit>) -> GpFile {
    GpFile {
        tract: t.id(),
        rank: phi.rank(),
        ground_set: phi.ground_size(),
        values: phi
            .entries()
            .filter(|(_, v)| v.is_some())
            .map(|(s, v)| (subset_key(s), t.format_elem(v)))
            .collect(),
    }
}

pub fn circuits_from_file<T: Tract>(t: &T, f: &CircuitFile) -> Result<CircuitSet<T::Unit>> {
    check_tract(t, &f.tract)?;
    check_ground(f.ground_set)?;
    let vs = f
        .circuits
        .iter()
        .map(|c| {
            if c.len() != f.ground_set {
                return Err(Error::Arity {
                    expected: f.ground_set,
                    got: c.len(),
                });
            }
            Vector::parse(t, c)
        })
        .collect::<Result<Vec<_>>>()?;
    CircuitSet::new(t, f.ground_set, vs)
}

/// One representative per projective class.
pub fn circuits_to_file<T: Tract>(t: &T, c: &CircuitSet<T::Unit>) -> CircuitFile {
    CircuitFile {
        tract: t.id(),
        ground_set: c.ground_size(),
        circuits: c.reps().iter().map(|x| x.format(t)).collect(),
    }
}

pub fn matroid_from_file(f: &MatroidFile) -> Result<ClassicalMatroid> {
    check_ground(f.ground_set)?;
    let supports = f
        .circuits
        .iter()
        .map(|c| subset_from_labels(c, f.ground_set))
        .collect::<Result<Vec<_>>>()?;
    ClassicalMatroid::from_circuits(f.ground_set, supports)
}

pub fn matroid_to_file(m: &ClassicalMatroid) -> MatroidFile {
    MatroidFile {
        ground_set: m.ground_size(),
        circuits: m.circuits().iter().map(|c| c.to_labels()).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tracts::{SignHyperfield, TriangleHyperfield};
    use num_rational::BigRational;

    #[test]
    fn keys() {
        assert_eq!(
            subset_from_key("1,3", 4).unwrap(),
            Subset::from_indices([0, 2])
        );
        assert_eq!(subset_key(Subset::from_indices([0, 2])), "1,3");
        assert!(subset_from_key("0,1", 4).is_err());
        assert!(subset_from_key("5", 4).is_err());
        assert!(subset_from_key("1,1", 4).is_err());
        assert!(subset_from_key("a", 4).is_err());
    }

    #[test]
    fn gp_round_trip() {
        let t = TriangleHyperfield::<BigRational>::new();
        let phi = crate::catalog::triangle_u36();
        let f = gp_to_file(&t, &phi);
        assert_eq!(f.values["1,5,6"], "4");
        let text = serde_json::to_string(&f).unwrap();
        let back = gp_from_file(&t, &from_json(&text).unwrap()).unwrap();
        assert_eq!(back, phi);
    }

    #[test]
    fn rejects_bad_input() {
        let t = SignHyperfield;
        let f: GpFile =
            from_json(r#"{"tract":"sign","rank":2,"ground_set":3,"values":{"1":"1"}}"#).unwrap();
        assert!(matches!(gp_from_file(&t, &f), Err(Error::Arity { .. })));
        let f: GpFile =
            from_json(r#"{"tract":"krasner","rank":1,"ground_set":2,"values":{}}"#).unwrap();
        assert!(matches!(
            gp_from_file(&t, &f),
            Err(Error::TractMismatch(..))
        ));
        let f: GpFile =
            from_json(r#"{"tract":"sign","rank":1,"ground_set":2,"values":{"1":"2"}}"#).unwrap();
        assert!(gp_from_file(&t, &f).is_err());
        let c: CircuitFile =
            from_json(r#"{"tract":"sign","ground_set":2,"circuits":[["1"]]}"#).unwrap();
        assert!(circuits_from_file(&t, &c).is_err());
        assert!(from_json::<GpFile>("{").is_err());
    }

    #[test]
    fn matroid_files() {
        let f: MatroidFile = from_json(r#"{"ground_set":3,"circuits":[[1,2,3]]}"#).unwrap();
        let m = matroid_from_file(&f).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(matroid_to_file(&m).circuits, vec![vec![1, 2, 3]]);
    }
}
