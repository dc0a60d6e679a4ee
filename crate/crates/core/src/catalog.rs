//! Bundled examples with their expected verdicts.

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;
use serde_json::{json, Value};

use crate::axioms::{check_circuit_axioms, check_dual_pair, AxiomMode, CircuitSet};
use crate::error::{Error, Result};
use crate::gp::{
    check_gp, circuits_from_gp, dual_gp, gp_from_circuits, relations, satisfies_relations,
    GPFunction, GpMode,
};
use crate::linalg::Matrix;
use crate::matroid::ClassicalMatroid;
use crate::subset::Subset;
use crate::tract::Tract;
use crate::tracts::{
    InitialTract, PhaseHyperfield, RegularPartialField, Sign, SignHyperfield, TriangleHyperfield,
};

pub const EXAMPLE_NAMES: [&str; 5] = [
    "triangle-u36",
    "weissauer-phase",
    "oriented-u24",
    "regular-k4",
    "initial-k4",
];

/// Null tolerance used for the numeric phase example.
pub const PHASE_CHECK_TOL: f64 = 1e-6;

#[derive(Clone, Debug, Serialize)]
pub struct VerdictLine {
    pub check: String,
    pub expected: bool,
    pub observed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExampleOutcome {
    pub name: String,
    pub description: String,
    pub verdicts: Vec<VerdictLine>,
    pub details: Value,
}

impl ExampleOutcome {
    /// Whether every observed verdict equals the expected one.
    pub fn matches(&self) -> bool {
        self.verdicts.iter().all(|v| v.expected == v.observed)
    }
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Rank 3 on six elements over the triangle hyperfield: 4 on `{1,5,6}`, 2
/// on sets meeting `{1}`, `{2,3,4}` and `{5,6}` once each, 1 elsewhere.
pub fn triangle_u36() -> GPFunction<BigRational> {
    let blocks = [
        Subset::from_indices([0]),
        Subset::from_indices([1, 2, 3]),
        Subset::from_indices([4, 5]),
    ];
    GPFunction::from_fn(6, 3, |s| {
        Some(if s == Subset::from_indices([0, 4, 5]) {
            q(4)
        } else if blocks.iter().all(|b| s.intersection(*b).len() == 1) {
            q(2)
        } else {
            q(1)
        })
    })
    .expect("fixed size")
}

/// Rank 3 phase function on `x, y, z, t, l, m` (elements 1..6), angles in
/// radians on sorted triples.
pub fn weissauer_phase() -> GPFunction<f64> {
    use std::f64::consts::PI;
    let table: [(&str, f64); 20] = [
        ("xyz", 0.0),
        ("xyt", PI),
        ("xzt", 0.0),
        ("yzt", PI),
        ("xyl", 0.9 + PI),
        ("xzl", 2.5),
        ("yzl", 5.5),
        ("xtl", 2.7 + PI),
        ("ytl", 5.8 - PI),
        ("ztl", 0.3 + PI),
        ("xym", 0.5 + PI),
        ("xzm", 1.2),
        ("yzm", 3.8),
        ("xtm", 3.0 + PI),
        ("ytm", 5.1 - PI),
        ("ztm", 0.4 + PI),
        ("xlm", 3.1),
        ("ylm", 0.1),
        ("zlm", 0.0),
        ("tlm", 3.1),
    ];
    let names = "xyztlm";
    let values = table.iter().map(|(k, a)| {
        let s = Subset::from_indices(k.chars().map(|c| names.find(c).unwrap()));
        (s, Some(crate::tracts::phase::normalize(*a)))
    });
    GPFunction::from_values(6, 3, values).expect("fixed size")
}

fn sign_of(x: &BigRational) -> Option<Sign> {
    Some(if x.is_negative() {
        Sign::Neg
    } else {
        Sign::Pos
    })
}

/// Four distinct points on the affine line.
pub fn u24_matrix() -> Matrix<BigRational> {
    vec![(1..=4).map(|_| q(1)).collect(), (1..=4).map(q).collect()]
}

/// The chirotope of [`u24_matrix`].
pub fn oriented_u24() -> GPFunction<Sign> {
    GPFunction::from_matrix(&u24_matrix(), sign_of).expect("fixed size")
}

/// The reduced oriented incidence matrix of `K4` (vertex 4 dropped), edge
/// `ij` oriented from `i` to `j`. It is totally unimodular.
pub fn k4_matrix() -> Matrix<BigRational> {
    let edges = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
    (1..=3)
        .map(|v| {
            edges
                .iter()
                .map(|&(i, j)| {
                    if v == i {
                        q(1)
                    } else if v == j {
                        q(-1)
                    } else {
                        q(0)
                    }
                })
                .collect()
        })
        .collect()
}

/// `M(K4)` over the regular partial field.
pub fn regular_k4() -> GPFunction<Sign> {
    GPFunction::from_matrix(&k4_matrix(), |d: &BigRational| {
        assert!(d.abs().is_one(), "minor {d} of a totally unimodular matrix");
        sign_of(d)
    })
    .expect("fixed size")
}

/// Counts of GP functions over the initial tract with support `M(K4)`, up to
/// scaling: `(weak, strong)`.
pub fn initial_k4_census() -> (usize, usize) {
    let t = InitialTract;
    let mat = ClassicalMatroid::k4();
    let bases = mat.bases();
    let weak = relations(6, 3, GpMode::Weak);
    let strong = relations(6, 3, GpMode::Strong);
    let (mut nw, mut ns) = (0, 0);
    for rest in (1..bases.len())
        .map(|_| [Sign::Pos, Sign::Neg])
        .multi_cartesian_product()
    {
        let signs: Vec<Sign> = std::iter::once(Sign::Pos).chain(rest).collect();
        let phi = GPFunction::from_fn(6, 3, |s| {
            bases.iter().position(|b| *b == s).map(|i| signs[i])
        })
        .expect("fixed size");
        if satisfies_relations(&t, phi.values(), &weak) {
            nw += 1;
            if satisfies_relations(&t, phi.values(), &strong) {
                ns += 1;
            }
        }
    }
    (nw, ns)
}

/// Expected outcome of the standard battery for one instance.
struct Expect {
    weak: bool,
    strong: bool,
}

/// GP checks in both modes, the circuit axioms of the extracted circuits,
/// the dual pair with the circuits of the dual function, and the
/// reconstruction round-trip.
fn battery<T: Tract>(
    t: &T,
    phi: &GPFunction<T::Unit>,
    expect: Expect,
    lines: &mut Vec<VerdictLine>,
) -> Result<Value> {
    let mut push = |check: &str, expected: bool, observed: bool| {
        lines.push(VerdictLine {
            check: check.into(),
            expected,
            observed,
        })
    };
    let gw = check_gp(t, phi, GpMode::Weak);
    let gs = check_gp(t, phi, GpMode::Strong);
    push("gp weak", expect.weak, gw.passed());
    push("gp strong", expect.strong, gs.passed());

    let c = CircuitSet::new(t, phi.ground_size(), circuits_from_gp(t, phi)?)?;
    let d = CircuitSet::new(t, phi.ground_size(), circuits_from_gp(t, &dual_gp(t, phi))?)?;
    let cw = check_circuit_axioms(t, &c, AxiomMode::Weak);
    let cs = check_circuit_axioms(t, &c, AxiomMode::Strong);
    let cpp = check_circuit_axioms(t, &c, AxiomMode::C3pp);
    push("circuits weak", expect.weak, cw.passed());
    push("circuits strong", expect.strong, cs.passed());
    push("circuits c3pp", expect.strong, cpp.passed());
    let dw = check_dual_pair(t, &c, &d, AxiomMode::Weak);
    let ds = check_dual_pair(t, &c, &d, AxiomMode::Strong);
    push("dual pair weak", expect.weak, dw.passed());
    push("dual pair strong", expect.strong, ds.passed());
    let back = gp_from_circuits(t, phi.ground_size(), c.reps())?;
    push("round trip", true, back.projectively_equal(t, phi));
    Ok(json!({
        "gp_weak": gw,
        "gp_strong": gs,
        "circuits": c.reps().iter().map(|x| x.format(t)).collect::<Vec<_>>(),
        "circuits_strong": cs,
        "circuits_c3pp": cpp,
        "dual_pair_strong": ds,
    }))
}

/// Builds the named example, runs its checks and compares them with the
/// stored expectations.
pub fn run_example(name: &str) -> Result<ExampleOutcome> {
    let mut lines = Vec::new();
    let (description, details) = match name {
        "triangle-u36" => {
            let t = TriangleHyperfield::<BigRational>::new();
            let phi = triangle_u36();
            let details = battery(
                &t,
                &phi,
                Expect {
                    weak: true,
                    strong: false,
                },
                &mut lines,
            )?;
            let gs = check_gp(&t, &phi, GpMode::Strong);
            lines.push(VerdictLine {
                check: "gp strong witness I={1,2,3,4} J={5,6}".into(),
                expected: true,
                observed: gs.has_witness(&[1, 2, 3, 4], &[5, 6]),
            });
            (
                "rank 3 triangle-hyperfield function on U(3,6) with values 4/2/1",
                details,
            )
        }
        "weissauer-phase" => {
            let t = PhaseHyperfield::closed(PHASE_CHECK_TOL);
            let phi = weissauer_phase();
            let details = battery(
                &t,
                &phi,
                Expect {
                    weak: true,
                    strong: false,
                },
                &mut lines,
            )?;
            let gs = check_gp(&t, &phi, GpMode::Strong);
            lines.push(VerdictLine {
                check: "gp strong witness (x,y,z,t),(l,m)".into(),
                expected: true,
                observed: gs.has_witness(&[1, 2, 3, 4], &[5, 6]),
            });
            // four 3-term relations have the shape a, -a, b
            let strict = check_gp(
                &PhaseHyperfield::with_null_tol(PHASE_CHECK_TOL),
                &phi,
                GpMode::Weak,
            );
            lines.push(VerdictLine {
                check: "gp weak, strict boundary".into(),
                expected: false,
                observed: strict.passed(),
            });
            (
                "rank 3 phase function on {x,y,z,t,l,m}, boundary sums null within 1e-6",
                details,
            )
        }
        "oriented-u24" => {
            let details = battery(
                &SignHyperfield,
                &oriented_u24(),
                Expect {
                    weak: true,
                    strong: true,
                },
                &mut lines,
            )?;
            ("chirotope of four points on a line", details)
        }
        "regular-k4" => {
            let details = battery(
                &RegularPartialField,
                &regular_k4(),
                Expect {
                    weak: true,
                    strong: true,
                },
                &mut lines,
            )?;
            ("M(K4) from a totally unimodular matrix", details)
        }
        "initial-k4" => {
            let t = InitialTract;
            let details = battery(
                &t,
                &regular_k4(),
                Expect {
                    weak: true,
                    strong: false,
                },
                &mut lines,
            )?;
            let (weak, strong) = initial_k4_census();
            lines.push(VerdictLine {
                check: "some weak function on M(K4)".into(),
                expected: true,
                observed: weak > 0,
            });
            lines.push(VerdictLine {
                check: "some strong function on M(K4)".into(),
                expected: false,
                observed: strong > 0,
            });
            let details =
                json!({ "battery": details, "census": { "weak": weak, "strong": strong } });
            (
                "M(K4) over the initial tract, with an exhaustive sign census",
                details,
            )
        }
        _ => return Err(Error::Parse(format!("unknown example `{name}`"))),
    };
    Ok(ExampleOutcome {
        name: name.into(),
        description: description.into(),
        verdicts: lines,
        details,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_values() {
        let phi = triangle_u36();
        assert_eq!(phi.value(Subset::from_indices([0, 4, 5])), &Some(q(4)));
        assert_eq!(phi.value(Subset::from_indices([0, 2, 5])), &Some(q(2)));
        assert_eq!(phi.value(Subset::from_indices([1, 2, 3])), &Some(q(1)));
        assert_eq!(phi.support().len(), 20);
    }

    #[test]
    fn k4_minors_are_units() {
        let phi = regular_k4();
        assert!(phi
            .support_matroid()
            .unwrap()
            .same_as(&ClassicalMatroid::k4()));
        assert_eq!(phi.support().len(), 16);
    }

    #[test]
    fn unknown_example() {
        assert!(run_example("nope").is_err());
    }

    #[test]
    fn all_examples_match() {
        for name in EXAMPLE_NAMES {
            let out = run_example(name).unwrap();
            for v in &out.verdicts {
                assert_eq!(v.expected, v.observed, "{name}: {}", v.check);
            }
        }
    }
}
