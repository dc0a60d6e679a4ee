mod common;

use num_rational::BigRational;
use proptest::prelude::*;
use rand::Rng;

use common::*;
use tract_matroids::gp::{
    check_gp, circuits_from_gp, dual_gp, gp_minor, pushforward_gp, GPFunction, GpMode,
};
use tract_matroids::homs;
use tract_matroids::matroid::{ClassicalMatroid, MinorOp};
use tract_matroids::tract::Tract;
use tract_matroids::tracts::{FieldTract, Fp, Sign, SignHyperfield};
use tract_matroids::vectors::{is_orthogonal, same_projective_set, Vector};
use tract_matroids::Subset;

type Gf3 = FieldTract<Fp<3>>;
type Gf2 = FieldTract<Fp<2>>;

fn gf3_gp(seed: u64, r: usize, m: usize) -> GPFunction<Fp<3>> {
    let a = random_gf3_matrix(&mut rng(seed), r, m);
    GPFunction::from_matrix(&a, |d: &Fp<3>| Some(*d)).unwrap()
}

fn q_matrix(seed: u64, r: usize, m: usize) -> Vec<Vec<BigRational>> {
    random_q_matrix(&mut rng(seed), r, m)
}

fn sign_gp(seed: u64, r: usize, m: usize) -> GPFunction<Sign> {
    let phi =
        GPFunction::from_matrix(&q_matrix(seed, r, m), |d: &BigRational| Some(d.clone())).unwrap();
    pushforward_gp(&homs::sigma(), &phi)
}

/// A rank and ground set size with `1 <= r <= m <= 6`.
fn shape() -> impl Strategy<Value = (usize, usize)> {
    (1usize..=6).prop_flat_map(|m| (1..=m, Just(m)))
}

fn random_sign_vector(seed: u64, m: usize) -> Vector<Sign> {
    let mut r = rng(seed);
    sv(&(0..m).map(|_| r.gen_range(-1i8..=1)).collect::<Vec<_>>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn gp_checks_are_scaling_invariant(seed in any::<u64>(), (r, m) in shape(), g in 1u32..3) {
        let t = Gf3::new();
        let mut phi = gf3_gp(seed, r, m);
        // perturb one value so that both outcomes occur
        let mut noise = rng(seed ^ 1);
        let s = Subset::k_subsets(m, r)[noise.gen_range(0..Subset::k_subsets(m, r).len())];
        let mut vals: Vec<_> = phi.entries().map(|(k, v)| (k, *v)).collect();
        for (k, v) in vals.iter_mut() {
            if *k == s {
                *v = Some(Fp::new(noise.gen_range(1..3)));
            }
        }
        phi = GPFunction::from_values(m, r, vals).unwrap();
        let scaled = phi.scale(&t, &Fp::new(g as i64));
        for mode in [GpMode::Weak, GpMode::Strong] {
            prop_assert_eq!(check_gp(&t, &phi, mode).passed(), check_gp(&t, &scaled, mode).passed());
        }
    }

    #[test]
    fn dual_is_an_involution(seed in any::<u64>(), (r, m) in shape()) {
        let t = SignHyperfield;
        let phi = sign_gp(seed, r, m);
        prop_assume!(!phi.is_zero());
        let d = dual_gp(&t, &phi);
        prop_assert!(dual_gp(&t, &d).projectively_equal(&t, &phi));
        if r < m {
            let mut got = d.support();
            let mut want = phi.support_matroid().unwrap().dual().bases().to_vec();
            got.sort();
            want.sort();
            prop_assert_eq!(got, want);
        }
    }

    #[test]
    fn deletion_dualizes_to_contraction(seed in any::<u64>(), (r, m) in shape(), mask in any::<u16>()) {
        let t = Gf3::new();
        let phi = gf3_gp(seed, r, m);
        prop_assume!(!phi.is_zero());
        let a = Subset::from_indices((0..m).filter(|i| mask >> i & 1 == 1));
        prop_assume!(a.len() < m);
        let lhs = dual_gp(&t, &gp_minor(&t, &phi, a, MinorOp::Delete).unwrap());
        let rhs = gp_minor(&t, &dual_gp(&t, &phi), a, MinorOp::Contract).unwrap();
        prop_assert!(lhs.projectively_equal(&t, &rhs));
    }

    #[test]
    fn weak_implies_strong_over_small_fields(seed in any::<u64>(), (r, m) in shape(), pick in any::<usize>(), val in 0i64..3) {
        let t = Gf3::new();
        let phi = gf3_gp(seed, r, m);
        let bases = Subset::k_subsets(m, r);
        let s = bases[pick % bases.len()];
        let vals: Vec<_> = phi.entries().map(|(k, v)| (k, if k == s { (val != 0).then(|| Fp::new(val)) } else { *v })).collect();
        let psi = GPFunction::from_values(m, r, vals).unwrap();
        if check_gp(&t, &psi, GpMode::Weak).passed() {
            prop_assert!(check_gp(&t, &psi, GpMode::Strong).passed());
        }
        // the same perturbation read over GF(2)
        let t2 = Gf2::new();
        let psi2 = psi.map(|x| (x.value() % 2 == 1).then(|| Fp::<2>::new(1)));
        if check_gp(&t2, &psi2, GpMode::Weak).passed() {
            prop_assert!(check_gp(&t2, &psi2, GpMode::Strong).passed());
        }
    }

    #[test]
    fn sign_pushforward_commutes_with_circuits(seed in any::<u64>(), (r, m) in shape()) {
        let a = q_matrix(seed, r, m);
        let phi = GPFunction::from_matrix(&a, |d: &BigRational| Some(d.clone())).unwrap();
        prop_assume!(!phi.is_zero());
        let q_field = FieldTract::<BigRational>::new();
        let pushed: Vec<Vector<Sign>> = circuits_from_gp(&q_field, &phi)
            .unwrap()
            .iter()
            .map(|x| Vector::new(x.entries().iter().map(|v| v.as_ref().and_then(sign_of)).collect()))
            .collect();
        let direct = circuits_from_gp(&SignHyperfield, &pushforward_gp(&homs::sigma(), &phi)).unwrap();
        prop_assert!(same_projective_set(&SignHyperfield, &pushed, &direct));
        let oracle: Vec<Vector<Sign>> = kernel_circuits(&a).iter().map(|v| Vector::new(v.iter().map(sign_of).collect())).collect();
        prop_assert!(same_projective_set(&SignHyperfield, &oracle, &direct));
    }

    #[test]
    fn matroid_double_dual(seed in any::<u64>(), (r, m) in shape()) {
        let phi = sign_gp(seed, r, m);
        prop_assume!(!phi.is_zero());
        let mat = phi.support_matroid().unwrap();
        prop_assert!(mat.dual().dual().same_as(&mat));
        prop_assert_eq!(mat.dual().rank(), m - mat.rank());
    }

    #[test]
    fn rank_is_submodular(seed in any::<u64>(), (r, m) in shape(), a in any::<u16>(), b in any::<u16>()) {
        let phi = gf3_gp(seed, r, m);
        prop_assume!(!phi.is_zero());
        let mat: ClassicalMatroid = phi.support_matroid().unwrap();
        let full = Subset::full(m);
        let a = Subset::from_indices((0..16).filter(|i| a >> i & 1 == 1)).intersection(full);
        let b = Subset::from_indices((0..16).filter(|i| b >> i & 1 == 1)).intersection(full);
        prop_assert!(mat.rank_of(a) + mat.rank_of(b) >= mat.rank_of(a.union(b)) + mat.rank_of(a.intersection(b)));
        prop_assert!(mat.rank_of(a) <= a.len());
    }

    #[test]
    fn orthogonality_is_scaling_invariant(sx in any::<u64>(), sy in any::<u64>(), m in 1usize..=8) {
        let t = SignHyperfield;
        let x = random_sign_vector(sx, m);
        let y = random_sign_vector(sy, m);
        let before = is_orthogonal(&t, &x, &y).unwrap();
        prop_assert_eq!(before, is_orthogonal(&t, &x.scale(&t, &Sign::Neg), &y).unwrap());
        prop_assert_eq!(before, is_orthogonal(&t, &y, &x).unwrap());
        let one = t.one();
        prop_assert_eq!(before, is_orthogonal(&t, &x.scale(&t, &one), &y).unwrap());
    }
}
