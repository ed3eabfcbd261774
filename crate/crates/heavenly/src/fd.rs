//! Central finite differences, used as an independent check on jets.
//!
//! Each coordinate is stepped along its real and its imaginary direction. For
//! a holomorphic function both estimate the same complex derivative, and the
//! leading truncation errors have opposite signs, so the average is used.

use crate::jet::{Jet4, Point};
use crate::C64;

pub const DEFAULT_STEP: f64 = 1e-4;

fn shifted(x: &Point, moves: &[(usize, C64)]) -> Point {
    let mut y = *x;
    for &(i, d) in moves {
        y[i] += d;
    }
    y
}

/// Gradient and Hessian of `f` at `x` by central differences with step `h`.
pub fn fd_hessian<F: Fn(&Point) -> C64>(f: F, x: &Point, h: f64) -> Jet4 {
    assert!(h > 0.0, "step must be positive");
    let f0 = f(x);
    let steps = [C64::new(h, 0.0), C64::new(0.0, h)];
    let mut grad = [C64::new(0.0, 0.0); 4];
    let mut hess = [[C64::new(0.0, 0.0); 4]; 4];

    for i in 0..4 {
        for &s in &steps {
            let fp = f(&shifted(x, &[(i, s)]));
            let fm = f(&shifted(x, &[(i, -s)]));
            grad[i] += (fp - fm) / (s * 2.0) * 0.5;
            hess[i][i] += (fp - f0 * 2.0 + fm) / (s * s) * 0.5;
        }
        for j in i + 1..4 {
            for &s in &steps {
                let pp = f(&shifted(x, &[(i, s), (j, s)]));
                let pm = f(&shifted(x, &[(i, s), (j, -s)]));
                let mp = f(&shifted(x, &[(i, -s), (j, s)]));
                let mm = f(&shifted(x, &[(i, -s), (j, -s)]));
                hess[i][j] += (pp - pm - mp + mm) / (s * s * 4.0) * 0.5;
            }
        }
    }
    Jet4::from_parts(f0, grad, hess)
}

/// Agreement test used by the oracle checks: relative `tol` for entries of
/// magnitude at least one, absolute below that.
pub fn entry_close(analytic: C64, numeric: C64, tol: f64) -> bool {
    (analytic - numeric).norm() <= tol * analytic.norm().max(1.0)
}

/// Largest violation ratio over gradient and Hessian entries (<= 1 means pass).
pub fn jet_mismatch(analytic: &Jet4, numeric: &Jet4, tol: f64) -> f64 {
    let mut worst: f64 = 0.0;
    let mut check = |a: C64, b: C64| {
        worst = worst.max((a - b).norm() / (tol * a.norm().max(1.0)));
    };
    for i in 0..4 {
        check(analytic.d(i), numeric.d(i));
        for j in 0..4 {
            check(analytic.h(i, j), numeric.h(i, j));
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c;
    use crate::jet::LinearForm;
    use crate::scalar::ScalarFn;
    use rand::{Rng, SeedableRng};

    #[test]
    fn exp_of_sum_at_origin() {
        let j = fd_hessian(|x| (x[0] + x[1]).exp(), &[c(0., 0.); 4], DEFAULT_STEP);
        assert!((j.h(0, 1) - c(1., 0.)).norm() < 1e-6);
    }

    #[test]
    fn constant_and_quadratic() {
        let j = fd_hessian(|_| c(3., -1.), &[c(0.2, 0.1); 4], DEFAULT_STEP);
        assert!(j.grad().iter().all(|g| g.norm() < 1e-12));
        assert!(j.hess().iter().flatten().all(|h| h.norm() < 1e-8));
        let q = fd_hessian(|x| x[0] * x[0], &[c(0., 0.); 4], DEFAULT_STEP);
        assert!((q.h(0, 0) - c(2., 0.)).norm() < 1e-8);
    }

    #[test]
    fn sin_at_half_pi() {
        let p = [c(std::f64::consts::FRAC_PI_2, 0.), c(0., 0.), c(0., 0.), c(0., 0.)];
        let f = LinearForm::new([c(1., 0.), c(0., 0.), c(0., 0.), c(0., 0.)], c(0., 0.));
        let g = ScalarFn::sin(c(1., 0.));
        let a = f.jet(&p).compose(&g).unwrap();
        assert!((a.val() - c(1., 0.)).norm() < 1e-15);
        let n = fd_hessian(|x| g.derivs(f.eval(x)).unwrap()[0], &p, DEFAULT_STEP);
        assert!(jet_mismatch(&a, &n, 1e-6) <= 1.0);
    }

    #[test]
    fn every_library_function_matches_differences() {
        let lib = [
            ScalarFn::exp(c(0.8, 0.3)),
            ScalarFn::sin(c(1.1, -0.2)),
            ScalarFn::cos(c(0.6, 0.0)),
            ScalarFn::cosh(c(0.9, 0.4)),
            ScalarFn::poly(vec![c(1., 0.), c(-0.5, 0.2), c(0.3, 0.), c(0.1, 0.), c(-0.05, 0.), c(0.02, 0.), c(0.01, 0.)]).unwrap(),
            ScalarFn::Square,
        ];
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut u = || c(rng.gen_range(-0.5..0.5), rng.gen_range(-0.5..0.5));
        for g in &lib {
            for _ in 0..100 {
                let form = LinearForm::new([u(), u(), u(), u()], u());
                let p = [u(), u(), u(), u()];
                let a = form.jet(&p).compose(g).unwrap();
                let n = fd_hessian(|x| g.derivs(form.eval(x)).unwrap()[0], &p, DEFAULT_STEP);
                assert!(jet_mismatch(&a, &n, 1e-5) <= 1.0, "{g}");
            }
        }
    }
}
