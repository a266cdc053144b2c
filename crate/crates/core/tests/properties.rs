mod common;

use num_traits::Zero;
use octaq::classify::{classify, normalize, Status};
use octaq::octgroup::group;
use octaq::oracle::{choose_box, count_components, ray_root_count, SignGrid};
use octaq::quadric::{assemble_lambda, existence_check, invariants, line_restriction, Existence, QuarticCoefficients};
use octaq::rational::q;
use octaq::{Stratum, Q};
use proptest::prelude::*;

use common::{any_coefficients, coefficients, positive, rational, structured_coefficients};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn verdict_is_scale_invariant(f in any_coefficients(), mu in positive(), neg in any::<bool>(), lambda in positive()) {
        let mu = if neg { -mu } else { mu };
        let g = f.rescaled(&mu, &lambda).unwrap();
        let (a, b) = (classify(&f), classify(&g));
        prop_assert_eq!(a.case_label, b.case_label);
        prop_assert_eq!(a.components, b.components);
        prop_assert_eq!(a.isolated_points, b.isolated_points);
        prop_assert_eq!(a.unbounded, b.unbounded);
        prop_assert_eq!(a.nesting_depth, b.nesting_depth);
        let sizes = |r: &octaq::TopologyReport| r.singular_orbits.iter().map(|o| o.size).collect::<Vec<_>>();
        prop_assert_eq!(sizes(&a), sizes(&b));
        prop_assert_eq!(normalize(&f), normalize(&g));
    }

    #[test]
    fn every_input_gets_a_consistent_case(f in any_coefficients()) {
        let r = classify(&f);
        prop_assert_ne!(r.provenance.status, Status::Conflict, "{:?}", r.provenance.diagnostics);
        prop_assert_eq!(r.components == 0, existence_check(&f) == Existence::Empty);
    }

    #[test]
    fn normal_form_classifies_identically(f in any_coefficients()) {
        let nf = normalize(&f).normal_form;
        prop_assert_eq!(classify(&f).case_label, classify(&nf).case_label);
    }

    #[test]
    fn quartic_is_invariant_under_the_group(f in coefficients(), p in [rational(9, 5), rational(9, 5), rational(9, 5)]) {
        let v = f.eval(&p);
        for g in group() {
            prop_assert_eq!(f.eval(&g.apply_q(&p)), v.clone());
        }
        prop_assert_eq!(f.eval_expanded(&p), v);
    }

    #[test]
    fn lambda_matches_hand_written_matrix(f in coefficients(), x in rational(9, 5), y in rational(9, 5), z in rational(9, 5)) {
        let m = assemble_lambda(&f);
        let r = common::reference_lambda(&f);
        for i in 0..4 {
            for j in 0..4 {
                prop_assert_eq!(&m.lambda[i][j], &r[i][j]);
            }
        }
        prop_assert_eq!(common::bilinear(&r, &x, &y, &z), common::quadric_direct(&f, &x, &y, &z));
        prop_assert_eq!(f.eval_quadric(&[x.clone(), y.clone(), z.clone()]), common::quadric_direct(&f, &x, &y, &z));
    }

    #[test]
    fn determinants_match_cofactor_expansion(f in coefficients()) {
        let inv = invariants(&assemble_lambda(&f));
        let r = common::reference_lambda(&f);
        prop_assert_eq!(&inv.det_lambda, &common::cofactor_det(&r));
        let r0: Vec<Vec<Q>> = r[1..].iter().map(|row| row[1..].to_vec()).collect();
        prop_assert_eq!(&inv.det_lambda0, &common::cofactor_det(&r0));
        // sum of principal 2x2 minors = coefficient of x in det(xI − Λ₀)
        prop_assert_eq!(&inv.j, &common::char_poly3(&r0)[1]);
    }

    #[test]
    fn empty_zero_sets_leave_no_trace_on_the_grid(f in any_coefficients()) {
        if existence_check(&f) == Existence::Empty {
            let g = SignGrid::sample(&f, &choose_box(&f), 16);
            prop_assert_eq!(count_components(&g).count(), 0);
        }
    }

    #[test]
    fn sampled_ray_crossings_match_symbolic_roots(f in any_coefficients()) {
        let l = choose_box(&f);
        for st in Stratum::ALL {
            let lr = line_restriction(&f, st);
            if lr.identically_zero || lr.double_positive_root.is_some() {
                continue;
            }
            prop_assert_eq!(ray_root_count(&f, st, &l), lr.positive_roots, "{:?}", st);
        }
    }

    #[test]
    fn singular_orbits_lie_on_the_surface(f in structured_coefficients()) {
        for o in classify(&f).singular_orbits {
            let rep = o.representative_f64();
            let scale = f.to_f64().iter().fold(1.0f64, |m, c| m.max(c.abs()));
            prop_assert!(f.eval_f64(rep).abs() <= 1e-9 * scale);
            let g = f.gradient_f64(rep);
            prop_assert!(g.iter().all(|x| x.abs() <= 1e-9 * scale));
        }
    }
}

#[test]
fn zero_polynomial_parts_are_rejected() {
    assert!(QuarticCoefficients::new(Q::zero(), Q::zero(), q(1), q(1)).is_err());
}
