//! Worked examples with hand-derived reference values.

use heavenly::ansatz::real_slice_point;
use heavenly::catalog::{instantiate, ClassId, ClassParams};
use heavenly::conditions::noninvariance_verdict;
use heavenly::jet::{Jet4, Point};
use heavenly::metrics::{metric_at, metric_det, MetricId};
use heavenly::pde::{builtin_system, SystemId};
use heavenly::sampling::{random_base, random_point, rng_from_seed, sample_float};
use heavenly::scalar::ScalarFn;
use heavenly::{c, C64};

/// exp(k(eta + B/A y)) (C cos th + H sin th), th = A xi + B (q - y), with
/// its Hessian written out by hand in (eta, xi, q, y).
fn exp_trig_term(a: f64, b: f64, cc: f64, hh: f64, sign: f64, x: &Point) -> Jet4 {
    let k = sign * (a * (a - b)).sqrt();
    let phi = [k, 0.0, 0.0, k * b / a];
    let th_grad = [0.0, a, b, -b];
    let th = a * x[1] + b * (x[2] - x[3]);
    let e = (k * (x[0] + b / a * x[3])).exp();
    let s0 = cc * th.cos() + hh * th.sin();
    let s1 = -cc * th.sin() + hh * th.cos();
    let grad = std::array::from_fn(|i| e * (phi[i] * s0 + th_grad[i] * s1));
    let hess = std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            e * (phi[i] * phi[j] * s0 + (phi[i] * th_grad[j] + phi[j] * th_grad[i]) * s1 - th_grad[i] * th_grad[j] * s0)
        })
    });
    Jet4::from_parts(e * s0, grad, hess)
}

#[test]
fn exponential_trig_term_solves_linear_system() {
    let sys = builtin_system(SystemId::MixedLin);
    let p = ClassParams::new([
        ("A1".to_string(), c(2., 0.)),
        ("B1".to_string(), c(1., 0.)),
        ("C1".to_string(), c(1., 0.)),
        ("H1".to_string(), c(0., 0.)),
        ("sign1".to_string(), c(1., 0.)),
    ])
    .with_n(1);
    let inst = instantiate(ClassId::RefSheftel, &p, &vec![]).unwrap();
    let mut rng = rng_from_seed(17);
    for _ in 0..50 {
        let x = random_point(&mut rng);
        let hand = exp_trig_term(2., 1., 1., 0., 1., &x);
        for r in sys.residuals(&hand) {
            assert!(r.norm() < 1e-9, "{r}");
        }
        let lib = inst.ansatz.eval_jet(&x).unwrap();
        assert!((lib.val() - hand.val()).norm() <= 1e-12 * (1.0 + hand.val().norm()));
        for i in 0..4 {
            for j in 0..4 {
                assert!((lib.h(i, j) - hand.h(i, j)).norm() <= 1e-12 * (1.0 + hand.h(i, j).norm()));
            }
        }
        for r in sys.residuals(&lib) {
            assert!(r.norm() < 1e-9);
        }
    }
}

fn cma_params(a2: C64, beta2: f64) -> ClassParams {
    ClassParams::new([
        ("a2".to_string(), a2),
        ("d3".to_string(), c(1., 1.)),
        ("beta1".to_string(), c(0., 0.)),
        ("beta2".to_string(), c(beta2, 0.)),
        ("beta3".to_string(), c(0.1, 0.)),
        ("beta4".to_string(), c(0.2, -0.1)),
    ])
}

#[test]
fn complex_monge_ampere_solution_is_real_with_sine() {
    let inst = instantiate(ClassId::CmaSq, &cma_params(c(1., 1.), 0.3), &vec![ScalarFn::sin(c(1., 0.))]).unwrap();
    let mut rng = rng_from_seed(3);
    for _ in 0..100 {
        assert!(inst.ansatz.reality_defect(random_base(&mut rng)).unwrap() < 1e-12);
    }
}

#[test]
fn third_hyperbolic_class_is_real() {
    let mut rng = rng_from_seed(21);
    for _ in 0..10 {
        let p = sample_float(ClassId::HcmaIII, 4, &mut rng).unwrap();
        let g = vec![ScalarFn::cosh(c(0.8, 0.)), ScalarFn::exp(c(-0.5, 0.))];
        let inst = instantiate(ClassId::HcmaIII, &ClassParams::new(p), &g).unwrap();
        for _ in 0..100 {
            assert!(inst.ansatz.reality_defect(random_base(&mut rng)).unwrap() < 1e-12);
        }
    }
}

#[test]
fn region_clause_catches_vanishing_square_argument() {
    // conj(a2) z1 + a2 conj(z1) + beta2 = 0 at real z1 = -beta2 / 2 when a2 = 1
    let beta2 = 0.3;
    let inst = instantiate(ClassId::CmaSq, &cma_params(c(1., 0.), beta2), &vec![ScalarFn::exp(c(1., 0.))]).unwrap();
    let x = real_slice_point((c(-beta2 / 2.0, 0.), c(0.2, 0.4)));
    let r = noninvariance_verdict(&inst, &x).unwrap();
    assert!(!r.satisfied);
    let gamma1 = r.region_factors.iter().find(|(n, _)| n == "Gamma1").expect("Gamma1 listed").1;
    assert!(gamma1.norm() < 1e-15);
    assert!(r.vanishing.iter().any(|n| n == "Gamma1"));
    // away from that line the clause holds
    let y = real_slice_point((c(0.4, 0.1), c(0.2, 0.4)));
    assert!(noninvariance_verdict(&inst, &y).unwrap().satisfied);
}

#[test]
fn kahler_metric_is_nondegenerate_on_solutions() {
    let inst = instantiate(ClassId::CmaSq, &cma_params(c(0.7, -0.2), 0.1), &vec![ScalarFn::exp(c(1., 0.))]).unwrap();
    let mut rng = rng_from_seed(8);
    for _ in 0..100 {
        let x = real_slice_point(random_base(&mut rng));
        let m = metric_at(MetricId::Kahler, &inst.ansatz.eval_jet(&x).unwrap()).unwrap();
        // block determinant 1 makes det g = (1/2)^4
        assert!((metric_det(&m) - c(1. / 16., 0.)).norm() < 1e-9);
    }
}
