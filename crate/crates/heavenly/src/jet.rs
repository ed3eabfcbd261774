//! Second-order jets of complex functions of four variables.
//!
//! A [`Jet4`] carries value, gradient and Hessian. Every constructor fills the
//! upper triangle and mirrors it, so the Hessian is symmetric bit for bit.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::scalar::ScalarFn;
use crate::{Result, C64};

pub type Point = [C64; 4];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet4 {
    val: C64,
    grad: [C64; 4],
    hess: [[C64; 4]; 4],
}

const Z: C64 = Complex64::new(0.0, 0.0);

fn sym(f: impl Fn(usize, usize) -> C64) -> [[C64; 4]; 4] {
    let mut h = [[Z; 4]; 4];
    for i in 0..4 {
        for j in i..4 {
            let v = f(i, j);
            h[i][j] = v;
            h[j][i] = v;
        }
    }
    h
}

impl Jet4 {
    pub fn zero() -> Self {
        Self::constant(Z)
    }

    pub fn constant(val: C64) -> Self {
        Jet4 { val, grad: [Z; 4], hess: [[Z; 4]; 4] }
    }

    /// The coordinate function x^mu.
    pub fn variable(mu: usize, point: &Point) -> Self {
        let mut grad = [Z; 4];
        grad[mu] = C64::new(1.0, 0.0);
        Jet4 { val: point[mu], grad, hess: [[Z; 4]; 4] }
    }

    /// Builds a jet from raw parts; only the upper triangle of `hess` is read.
    pub fn from_parts(val: C64, grad: [C64; 4], hess: [[C64; 4]; 4]) -> Self {
        Jet4 { val, grad, hess: sym(|i, j| hess[i][j]) }
    }

    pub fn val(&self) -> C64 {
        self.val
    }

    pub fn grad(&self) -> [C64; 4] {
        self.grad
    }

    pub fn d(&self, mu: usize) -> C64 {
        self.grad[mu]
    }

    pub fn hess(&self) -> [[C64; 4]; 4] {
        self.hess
    }

    /// Second partial with respect to x^mu, x^nu.
    pub fn h(&self, mu: usize, nu: usize) -> C64 {
        self.hess[mu][nu]
    }

    pub fn scale(&self, k: C64) -> Self {
        Jet4 {
            val: self.val * k,
            grad: self.grad.map(|g| g * k),
            hess: sym(|i, j| self.hess[i][j] * k),
        }
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        Jet4 {
            val: self.val.conj(),
            grad: self.grad.map(|g| g.conj()),
            hess: sym(|i, j| self.hess[i][j].conj()),
        }
    }

    /// Chain rule through a scalar function.
    pub fn compose(&self, g: &ScalarFn) -> Result<Self> {
        let [g0, g1, g2] = g.derivs(self.val)?;
        Ok(self.compose_with(g0, g1, g2))
    }

    /// Chain rule given the outer value and its first two derivatives.
    pub fn compose_with(&self, g0: C64, g1: C64, g2: C64) -> Self {
        Jet4 {
            val: g0,
            grad: self.grad.map(|d| g1 * d),
            hess: sym(|i, j| g2 * self.grad[i] * self.grad[j] + g1 * self.hess[i][j]),
        }
    }

    /// Jet in new coordinates y, where the old ones are x = L y.
    /// `l[mu][k]` is dx^mu/dy^k; the caller supplies the matching point.
    pub fn pull_back(&self, l: &[[C64; 4]; 4]) -> Self {
        let grad = std::array::from_fn(|k| (0..4).map(|m| self.grad[m] * l[m][k]).sum());
        let hess = sym(|k, q| {
            let mut s = Z;
            for m in 0..4 {
                for n in 0..4 {
                    s += l[m][k] * self.hess[m][n] * l[n][q];
                }
            }
            s
        });
        Jet4 { val: self.val, grad, hess }
    }

    pub fn is_finite(&self) -> bool {
        self.val.is_finite()
            && self.grad.iter().all(|g| g.is_finite())
            && self.hess.iter().flatten().all(|h| h.is_finite())
    }
}

impl Add for Jet4 {
    type Output = Jet4;
    fn add(self, o: Jet4) -> Jet4 {
        Jet4 {
            val: self.val + o.val,
            grad: std::array::from_fn(|i| self.grad[i] + o.grad[i]),
            hess: sym(|i, j| self.hess[i][j] + o.hess[i][j]),
        }
    }
}

impl Sub for Jet4 {
    type Output = Jet4;
    fn sub(self, o: Jet4) -> Jet4 {
        self + (-o)
    }
}

impl Neg for Jet4 {
    type Output = Jet4;
    fn neg(self) -> Jet4 {
        self.scale(C64::new(-1.0, 0.0))
    }
}

impl Mul for Jet4 {
    type Output = Jet4;
    /// Leibniz rule.
    fn mul(self, o: Jet4) -> Jet4 {
        Jet4 {
            val: self.val * o.val,
            grad: std::array::from_fn(|i| self.grad[i] * o.val + self.val * o.grad[i]),
            hess: sym(|i, j| {
                self.hess[i][j] * o.val
                    + self.val * o.hess[i][j]
                    + (self.grad[i] * o.grad[j] + self.grad[j] * o.grad[i])
            }),
        }
    }
}

impl Mul<C64> for Jet4 {
    type Output = Jet4;
    fn mul(self, k: C64) -> Jet4 {
        self.scale(k)
    }
}

impl std::iter::Sum for Jet4 {
    fn sum<I: Iterator<Item = Jet4>>(iter: I) -> Jet4 {
        iter.fold(Jet4::zero(), |a, b| a + b)
    }
}

/// Affine form sum_mu coeffs[mu] x^mu + offset.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearForm {
    pub coeffs: [C64; 4],
    pub offset: C64,
}

impl LinearForm {
    pub fn new(coeffs: [C64; 4], offset: C64) -> Self {
        LinearForm { coeffs, offset }
    }

    pub fn eval(&self, x: &Point) -> C64 {
        self.coeffs.iter().zip(x).map(|(c, x)| c * x).sum::<C64>() + self.offset
    }

    pub fn jet(&self, x: &Point) -> Jet4 {
        Jet4 { val: self.eval(x), grad: self.coeffs, hess: [[Z; 4]; 4] }
    }

    /// Coefficients are conjugated and the offset too.
    pub fn conj(&self) -> Self {
        LinearForm { coeffs: self.coeffs.map(|c| c.conj()), offset: self.offset.conj() }
    }

    /// Same form written in y, where x = L y.
    pub fn pull_back(&self, l: &[[C64; 4]; 4]) -> Self {
        let coeffs = std::array::from_fn(|k| (0..4).map(|m| self.coeffs[m] * l[m][k]).sum());
        LinearForm { coeffs, offset: self.offset }
    }
}

/// Jet of a linear form at a point.
pub fn jet_linform(form: &LinearForm, point: &Point) -> Jet4 {
    form.jet(point)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c;
    use proptest::prelude::*;

    fn close(a: C64, b: C64, tol: f64) -> bool {
        (a - b).norm() <= tol * (1.0 + b.norm())
    }

    #[test]
    fn linform_examples() {
        let f = LinearForm::new([c(1., 0.), Z, Z, Z], Z);
        let j = jet_linform(&f, &[c(5., 0.), Z, Z, Z]);
        assert_eq!(j.val(), c(5., 0.));
        assert_eq!(j.grad(), [c(1., 0.), Z, Z, Z]);
        assert_eq!(j.hess(), [[Z; 4]; 4]);

        let f = LinearForm::new([c(2., 0.), c(1., 0.), c(1., 0.), c(-4., 0.)], c(1., 0.));
        let j = f.jet(&[Z; 4]);
        assert_eq!(j.val(), c(1., 0.));
        assert_eq!(j.grad()[3], c(-4., 0.));

        let f = LinearForm::new([c(1., 1.), c(1., -1.), c(0., 2.), c(0., -2.)], Z);
        assert_eq!(f.eval(&[c(1., 0.), c(1., 0.), Z, Z]), c(2., 0.));
    }

    #[test]
    fn compose_exp_and_square() {
        let cc = [c(1., 0.), c(2., 0.), c(0., 1.), c(-1., 0.)];
        let inner = LinearForm::new(cc, Z).jet(&[Z; 4]);
        let e = inner.compose(&ScalarFn::exp(c(1., 0.))).unwrap();
        assert_eq!(e.val(), c(1., 0.));
        for i in 0..4 {
            assert_eq!(e.d(i), cc[i]);
            for j in 0..4 {
                assert_eq!(e.h(i, j), cc[i] * cc[j]);
            }
        }
        let s = c(0.5, -0.25);
        let inner = LinearForm::new(cc, s).jet(&[Z; 4]);
        let q = inner.compose(&ScalarFn::Square).unwrap();
        assert_eq!(q.val(), s * s);
        for i in 0..4 {
            assert_eq!(q.d(i), s * 2.0 * cc[i]);
            assert_eq!(q.h(i, i), cc[i] * cc[i] * 2.0);
        }
    }

    #[test]
    fn product_of_coordinates() {
        let p = [c(0.3, 0.1), c(-0.2, 0.), c(0.7, 0.4), c(0., 1.)];
        let m = Jet4::variable(0, &p) * Jet4::variable(2, &p);
        for i in 0..4 {
            for j in 0..4 {
                let want = if (i, j) == (0, 2) || (i, j) == (2, 0) { c(1., 0.) } else { Z };
                assert_eq!(m.h(i, j), want);
            }
        }
    }

    #[test]
    fn identities() {
        let p = [c(0.3, 0.1), c(-0.2, 0.), c(0.7, 0.4), c(0., 1.)];
        let j = (Jet4::variable(1, &p) * Jet4::variable(3, &p))
            .compose(&ScalarFn::sin(c(1.0, 0.0)))
            .unwrap();
        assert_eq!(j + Jet4::zero(), j);
        assert_eq!(j * Jet4::constant(c(1., 0.)), j);
    }

    #[test]
    fn pull_back_matches_direct_composition() {
        // f(x) = exp(x0 + 2 x1), x = L y
        let l = [
            [c(1., 0.), Z, c(1., 0.), Z],
            [c(1., 0.), Z, c(-1., 0.), Z],
            [Z, c(1., 0.), Z, Z],
            [Z, Z, Z, c(1., 0.)],
        ];
        let y = [c(0.1, 0.2), c(-0.3, 0.), c(0.2, -0.1), c(0.4, 0.4)];
        let x: Point = std::array::from_fn(|m| (0..4).map(|k| l[m][k] * y[k]).sum());
        let f = LinearForm::new([c(1., 0.), c(2., 0.), Z, Z], Z);
        let g = ScalarFn::exp(c(1., 0.));
        let via_x = f.jet(&x).compose(&g).unwrap().pull_back(&l);
        let via_y = f.pull_back(&l).jet(&y).compose(&g).unwrap();
        for i in 0..4 {
            assert!(close(via_x.d(i), via_y.d(i), 1e-14));
            for j in 0..4 {
                assert!(close(via_x.h(i, j), via_y.h(i, j), 1e-14));
            }
        }
    }

    fn arb_c() -> impl Strategy<Value = C64> {
        (-1.0f64..1.0, -1.0f64..1.0).prop_map(|(a, b)| c(a, b))
    }

    fn arb_jet() -> impl Strategy<Value = Jet4> {
        (arb_c(), proptest::array::uniform4(arb_c()), proptest::array::uniform4(proptest::array::uniform4(arb_c())))
            .prop_map(|(v, g, h)| Jet4::from_parts(v, g, h))
    }

    fn jets_close(a: &Jet4, b: &Jet4, tol: f64) -> bool {
        close(a.val(), b.val(), tol)
            && (0..4).all(|i| close(a.d(i), b.d(i), tol))
            && (0..4).all(|i| (0..4).all(|j| close(a.h(i, j), b.h(i, j), tol)))
    }

    fn symmetric(j: &Jet4) -> bool {
        (0..4).all(|i| (0..4).all(|k| j.h(i, k) == j.h(k, i)))
    }

    proptest! {
        #[test]
        fn algebra_laws(a in arb_jet(), b in arb_jet(), d in arb_jet()) {
            prop_assert!(jets_close(&(a + b), &(b + a), 1e-12));
            prop_assert!(jets_close(&((a + b) + d), &(a + (b + d)), 1e-12));
            prop_assert!(jets_close(&(a * b), &(b * a), 1e-12));
            prop_assert!(symmetric(&(a * b)));
            prop_assert!(symmetric(&(a + b).conj()));
            prop_assert!(symmetric(&a.compose(&ScalarFn::cosh(c(0.7, 0.2))).unwrap()));
        }
    }
}
