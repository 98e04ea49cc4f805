mod common;

use std::collections::BTreeSet;

use pglrep::classify::{
    component_count, invariant_classes, lifts_to, pgl_component_report, project_twisted,
    tensor_by_line_bundle, LiftTarget, TwistedClass,
};
use pglrep::clifford::{
    commutator_product, lift_orthogonal, volume_element, Blade, CliffordElement,
};
use pglrep::construct::{build_representation, catalogue_matrix, CatalogueName};
use pglrep::linalg::{OrthComponent, RatMatrix};
use pglrep::surfrep::{Delta2, Mu1, Mu2Value, SurfaceRep};
use pglrep::Rational;
use proptest::prelude::*;
use rand::Rng;

use common::{conjugate, q, random_delta1_zero_rep, random_orthogonal, rng};

fn element(n: usize, coeffs: &[(u32, i64, i64)]) -> CliffordElement {
    CliffordElement::from_terms(
        n,
        coeffs
            .iter()
            .map(|&(mask, num, den)| (Blade::new(mask % (1 << n), n).unwrap(), q(num, den))),
    )
    .unwrap()
}

fn terms() -> impl Strategy<Value = Vec<(u32, i64, i64)>> {
    prop::collection::vec((0u32..1 << 5, -6i64..=6, 1i64..=4), 0..6)
}

fn int_matrix(n: usize) -> impl Strategy<Value = RatMatrix> {
    prop::collection::vec(-3i64..=3, n * n).prop_map(move |v| {
        RatMatrix::from_rows(
            v.chunks(n)
                .map(|row| {
                    row.iter()
                        .map(|&x| Rational::from_integer(x.into()))
                        .collect()
                })
                .collect(),
        )
        .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lift_round_trip_and_parity(seed in any::<u64>(), n in 1usize..=6) {
        let a = random_orthogonal(&mut rng(seed), n);
        let v = lift_orthogonal(&a).unwrap();
        prop_assert_eq!(v.twisted_conjugation_matrix().unwrap(), a.clone());
        match a.component().unwrap() {
            OrthComponent::SOn => prop_assert!(v.is_even()),
            OrthComponent::OMinus => prop_assert!(v.is_odd()),
        }
        let one = CliffordElement::one(n).unwrap();
        prop_assert_eq!(v.mul(&v.versor_inverse().unwrap()).unwrap(), one.clone());
        prop_assert_eq!(v.versor_inverse().unwrap().mul(&v).unwrap(), one);
    }

    #[test]
    fn commutator_product_ignores_rescaling(seed in any::<u64>(), k in 1i64..=20, d in 1i64..=20) {
        let mut r = rng(seed);
        let n = [4, 6][r.gen_range(0..2)];
        let classes = invariant_classes(2, n).unwrap();
        let rep = build_representation(2, n, &classes[r.gen_range(0..classes.len())]).unwrap();
        let lifts: Vec<_> = rep.generators().iter().map(|m| lift_orthogonal(m).unwrap()).collect();
        let scaled: Vec<_> = lifts
            .iter()
            .enumerate()
            .map(|(i, l)| l.scale(&q(if i % 2 == 0 { k } else { -k }, d + i as i64)))
            .collect();
        prop_assert_eq!(commutator_product(&lifts).unwrap(), commutator_product(&scaled).unwrap());
    }

    #[test]
    fn volume_element_is_central_in_spin(seed in any::<u64>(), half in 1usize..=3) {
        let n = 2 * half;
        let v = lift_orthogonal(&random_orthogonal(&mut rng(seed), n)).unwrap();
        let w = volume_element(n).unwrap();
        let (left, right) = (w.mul(&v).unwrap(), v.mul(&w).unwrap());
        if v.is_even() {
            prop_assert_eq!(left, right);
        } else {
            prop_assert_eq!(left, right.neg());
        }
    }

    #[test]
    fn clifford_ring_axioms(a in terms(), b in terms(), c in terms(), n in 1usize..=5) {
        let (a, b, c) = (element(n, &a), element(n, &b), element(n, &c));
        prop_assert_eq!(
            a.mul(&b).unwrap().mul(&c).unwrap(),
            a.mul(&b.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.add(&b).unwrap().mul(&c).unwrap(),
            a.mul(&c).unwrap().add(&b.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.mul(&b).unwrap().reversal(), b.reversal().mul(&a.reversal()).unwrap());
    }

    #[test]
    fn determinant_is_multiplicative(a in int_matrix(3), b in int_matrix(3)) {
        prop_assert_eq!(a.mul(&b).unwrap().det(), a.det() * b.det());
    }

    #[test]
    fn commutator_ignores_sign(seed in any::<u64>(), n in 2usize..=6) {
        let mut r = rng(seed);
        let a = random_orthogonal(&mut r, n);
        let b = random_orthogonal(&mut r, n);
        let c = a.commutator(&b).unwrap();
        prop_assert_eq!(a.neg().commutator(&b).unwrap(), c.clone());
        prop_assert_eq!(a.commutator(&b.neg()).unwrap(), c);
    }

    #[test]
    fn invariants_survive_negation_and_conjugation(seed in any::<u64>(), index in 0u64..33, flips in any::<u8>()) {
        let mut r = rng(seed);
        let n = [4, 6][r.gen_range(0..2)];
        let class = invariant_classes(2, n).unwrap()[index as usize].clone();
        let rep = build_representation(2, n, &class).unwrap();
        let p = random_orthogonal(&mut r, n);
        let moved: Vec<_> = rep
            .generators()
            .iter()
            .enumerate()
            .map(|(k, m)| {
                let m = conjugate(&p, m);
                if flips >> k & 1 == 1 { m.neg() } else { m }
            })
            .collect();
        let moved = SurfaceRep::new(2, n, moved).unwrap();
        prop_assert_eq!(moved.invariants().unwrap(), class);
    }

    #[test]
    fn delta2_matches_tilde_delta(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = r.gen_range(2..=3);
        let n = [4, 6, 8][r.gen_range(0..3)];
        let (rep, anticommuting) = random_delta1_zero_rep(&mut r, g, n);
        let minus = rep.delta2().unwrap() == Delta2::MinusI;
        prop_assert_eq!(minus, anticommuting % 2 == 1);
        prop_assert_eq!(minus, rep.tilde_delta().unwrap() == Mu2Value::Omega);
    }

    #[test]
    fn tensoring_twice_is_the_identity(w1 in 0u64..64, f1 in 0u64..64, w2 in any::<bool>(), half in 1usize..=4) {
        let (w1, f1) = (Mu1::from_index(w1, 6), Mu1::from_index(f1, 6));
        let n = 2 * half;
        let once = tensor_by_line_bundle(&w1, w2, &f1, n).unwrap();
        let twice = tensor_by_line_bundle(&once.0, once.1, &f1, n).unwrap();
        prop_assert_eq!(twice, (w1, w2));
    }
}

#[test]
fn spin_lifts_are_so_lifts() {
    for class in invariant_classes(3, 4).unwrap() {
        if class.mu1().is_zero() && lifts_to(&class, LiftTarget::Spinn).unwrap() {
            assert!(lifts_to(&class, LiftTarget::SOn).unwrap(), "{class}");
        }
        if lifts_to(&class, LiftTarget::Pinn).unwrap() {
            assert!(lifts_to(&class, LiftTarget::On).unwrap(), "{class}");
        }
    }
}

#[test]
fn twisted_projection_is_onto() {
    for g in [2, 3] {
        let len = 2 * g;
        let mut image = BTreeSet::new();
        for v in 0..1u64 << len {
            let mu1 = Mu1::from_index(v, len);
            for deg in [0, 1, 2, 3] {
                let w2s: &[Option<bool>] = if v == 0 && deg % 2 == 0 {
                    &[Some(false), Some(true)]
                } else {
                    &[None]
                };
                for &w2 in w2s {
                    let t = TwistedClass::from_parts(mu1.clone(), w2, deg).unwrap();
                    image.insert(project_twisted(&t).to_string());
                }
            }
        }
        let all: BTreeSet<_> = invariant_classes(g, 4)
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(image, all, "g={g}");
    }
}

#[test]
fn per_class_components_sum_to_the_closed_formula() {
    for n in [4, 6, 8] {
        for g in [2, 3, 4] {
            let report = pgl_component_report(n, g).unwrap();
            assert_eq!(
                report.total as u128,
                component_count(n, g).unwrap(),
                "n={n} g={g}"
            );
            assert_eq!(report.rows.iter().filter(|(_, m)| *m == 2).count(), 1);
        }
    }
}

#[test]
fn catalogue_facts_up_to_twelve() {
    use CatalogueName::*;
    for n in (4..=12).step_by(2) {
        let m = |name| catalogue_matrix(name, n).unwrap();
        let so = |name| m(name).component().unwrap() == OrthComponent::SOn;
        let zero_mod4 = n % 4 == 0;
        assert_eq!(so(X), zero_mod4);
        assert_eq!(so(XPrime), zero_mod4);
        assert!(!so(Y) && !so(YPrime));
        assert_eq!(so(Z), !zero_mod4);
        assert_eq!(so(W), !zero_mod4);
        assert_eq!(so(WPrime), !zero_mod4);
        assert!(m(X).commutator(&m(XPrime)).unwrap().is_neg_identity());
        assert!(m(Y).commutator(&m(YPrime)).unwrap().is_identity());
        assert!(m(Z).commutator(&m(X)).unwrap().is_neg_identity());
        assert!(m(W).commutator(&m(WPrime)).unwrap().is_neg_identity());
    }
}
