//! Sums of one-variable functions of linear forms.

use std::fmt;
use std::str::FromStr;

use crate::jet::{Jet4, LinearForm, Point};
use crate::scalar::ScalarFn;
use crate::{Error, Result, C64};

#[derive(Debug, Clone, PartialEq)]
pub enum TermKind {
    ArbitraryG(ScalarFn),
    /// s^2, with its second derivative the constant 2.
    Square,
    /// The partner of an earlier arbitrary term k: conj(g_k(conj s)).
    ConjugateOf(usize),
}

impl TermKind {
    pub fn is_square(&self) -> bool {
        matches!(self, TermKind::Square)
    }
}

/// Structural descriptor (`g`, `square`, `conj:K` with K one-based), used where
/// only the shape of the ansatz matters.
impl fmt::Display for TermKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermKind::ArbitraryG(_) => f.write_str("g"),
            TermKind::Square => f.write_str("square"),
            TermKind::ConjugateOf(k) => write!(f, "conj:{}", k + 1),
        }
    }
}

impl FromStr for TermKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "g" => Ok(TermKind::ArbitraryG(ScalarFn::identity())),
            "square" => Ok(TermKind::Square),
            t => {
                let k = t
                    .strip_prefix("conj:")
                    .and_then(|k| k.parse::<usize>().ok())
                    .filter(|k| *k >= 1)
                    .ok_or_else(|| Error::Parse(format!("bad term kind `{t}`")))?;
                Ok(TermKind::ConjugateOf(k - 1))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub form: LinearForm,
    pub kind: TermKind,
}

impl Term {
    pub fn new(form: LinearForm, kind: TermKind) -> Self {
        Term { form, kind }
    }
}

/// u = beta1 + sum_j term_j.
#[derive(Debug, Clone, PartialEq)]
pub struct Ansatz {
    beta1: C64,
    terms: Vec<Term>,
}

/// Checks that every conjugate partner points back at an arbitrary term.
pub fn check_kinds(kinds: &[&TermKind]) -> Result<()> {
    for (j, k) in kinds.iter().enumerate() {
        if let TermKind::ConjugateOf(i) = k {
            if *i >= j || !matches!(kinds[*i], TermKind::ArbitraryG(_)) {
                return Err(Error::Domain(format!(
                    "term {} conjugates term {}, which is not an earlier arbitrary term",
                    j + 1,
                    i + 1
                )));
            }
        }
    }
    Ok(())
}

impl Ansatz {
    pub fn new(beta1: C64, terms: Vec<Term>) -> Result<Self> {
        check_kinds(&terms.iter().map(|t| &t.kind).collect::<Vec<_>>())?;
        Ok(Ansatz { beta1, terms })
    }

    pub fn beta1(&self) -> C64 {
        self.beta1
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn n(&self) -> usize {
        self.terms.len()
    }

    /// The function actually applied by term j.
    pub fn term_fn(&self, j: usize) -> ScalarFn {
        match &self.terms[j].kind {
            TermKind::ArbitraryG(g) => g.clone(),
            TermKind::Square => ScalarFn::Square,
            TermKind::ConjugateOf(k) => match &self.terms[*k].kind {
                TermKind::ArbitraryG(g) => g.conjugate(),
                _ => unreachable!("validated at construction"),
            },
        }
    }

    /// (g, g', g'') of term j at its argument.
    pub fn term_derivs(&self, j: usize, x: &Point) -> Result<[C64; 3]> {
        self.term_fn(j).derivs(self.terms[j].form.eval(x))
    }

    pub fn eval_jet(&self, x: &Point) -> Result<Jet4> {
        let mut u = Jet4::constant(self.beta1);
        for (j, t) in self.terms.iter().enumerate() {
            let [g0, g1, g2] = self.term_derivs(j, x)?;
            u = u + t.form.jet(x).compose_with(g0, g1, g2);
        }
        Ok(u)
    }

    pub fn eval_value(&self, x: &Point) -> Result<C64> {
        let mut u = self.beta1;
        for j in 0..self.terms.len() {
            u += self.term_derivs(j, x)?[0];
        }
        Ok(u)
    }

    /// Coefficient rows of the first four forms.
    pub fn coeff_rows(&self) -> Result<[[C64; 4]; 4]> {
        if self.terms.len() < 4 {
            return Err(Error::Arity(format!("need at least 4 terms, have {}", self.terms.len())));
        }
        Ok(std::array::from_fn(|j| self.terms[j].form.coeffs))
    }

    /// Row j is g_j' at the point times the coefficients of form j.
    pub fn jacobian_matrix(&self, x: &Point) -> Result<[[C64; 4]; 4]> {
        let rows = self.coeff_rows()?;
        let mut m = rows;
        for (j, row) in m.iter_mut().enumerate() {
            let g1 = self.term_derivs(j, x)?[1];
            for v in row.iter_mut() {
                *v *= g1;
            }
        }
        Ok(m)
    }

    /// |Im u| at (z1, conj z1, z2, conj z2).
    pub fn reality_defect(&self, base: (C64, C64)) -> Result<f64> {
        let x = real_slice_point(base);
        Ok(self.eval_value(&x)?.im.abs())
    }

    /// The same function in coordinates y, where x = L y.
    pub fn pull_back(&self, l: &[[C64; 4]; 4]) -> Ansatz {
        Ansatz {
            beta1: self.beta1,
            terms: self
                .terms
                .iter()
                .map(|t| Term { form: t.form.pull_back(l), kind: t.kind.clone() })
                .collect(),
        }
    }

    /// Terms [lo, hi) as an ansatz with the given constant.
    pub fn slice(&self, beta1: C64, lo: usize, hi: usize) -> Result<Ansatz> {
        let terms: Vec<Term> = self.terms[lo..hi]
            .iter()
            .zip(lo..hi)
            .map(|(t, j)| {
                let mut t = t.clone();
                if let TermKind::ConjugateOf(_) = t.kind {
                    // Resolve the partner so the slice stands alone.
                    t.kind = TermKind::ArbitraryG(self.term_fn(j));
                }
                t
            })
            .collect();
        Ansatz::new(beta1, terms)
    }
}

pub fn real_slice_point(base: (C64, C64)) -> Point {
    [base.0, base.0.conj(), base.1, base.1.conj()]
}

pub fn eval_jet(a: &Ansatz, x: &Point) -> Result<Jet4> {
    a.eval_jet(x)
}

pub fn jacobian_matrix(a: &Ansatz, x: &Point) -> Result<[[C64; 4]; 4]> {
    a.jacobian_matrix(x)
}

pub fn reality_defect(a: &Ansatz, base: (C64, C64)) -> Result<f64> {
    a.reality_defect(base)
}

/// Determinant of a complex 4x4 matrix.
pub fn det4(m: &[[C64; 4]; 4]) -> C64 {
    nalgebra::Matrix4::from_fn(|i, j| m[i][j]).determinant()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c;
    use crate::fd::{fd_hessian, jet_mismatch, DEFAULT_STEP};
    use rand::{Rng, SeedableRng};

    fn z() -> C64 {
        c(0., 0.)
    }

    fn unit(mu: usize) -> LinearForm {
        let mut cc = [z(); 4];
        cc[mu] = c(1., 0.);
        LinearForm::new(cc, z())
    }

    #[test]
    fn constant_only() {
        let a = Ansatz::new(c(7., 0.), vec![]).unwrap();
        let j = a.eval_jet(&[c(0.3, 0.1); 4]).unwrap();
        assert_eq!(j, Jet4::constant(c(7., 0.)));
        assert_eq!(Ansatz::new(c(0., 1.), vec![]).unwrap().reality_defect((z(), z())).unwrap(), 1.0);
    }

    #[test]
    fn single_square() {
        let cc = [c(1., 0.), c(0., 2.), c(-1., 1.), c(0.5, 0.)];
        let a = Ansatz::new(z(), vec![Term::new(LinearForm::new(cc, z()), TermKind::Square)]).unwrap();
        let j = a.eval_jet(&[z(); 4]).unwrap();
        for i in 0..4 {
            for k in 0..4 {
                assert_eq!(j.h(i, k), cc[i] * cc[k] * 2.0);
            }
        }
    }

    #[test]
    fn identity_jacobian() {
        let terms = (0..4).map(|m| Term::new(unit(m), TermKind::ArbitraryG(ScalarFn::identity()))).collect();
        let a = Ansatz::new(z(), terms).unwrap();
        let m = a.jacobian_matrix(&[c(0.2, 0.3); 4]).unwrap();
        assert!((det4(&m) - c(1., 0.)).norm() < 1e-15);
        let short = a.slice(z(), 0, 3).unwrap();
        assert!(matches!(short.jacobian_matrix(&[z(); 4]), Err(Error::Arity(_))));
    }

    #[test]
    fn zero_derivative_row_kills_det() {
        // cos has zero slope at 0
        let mut terms: Vec<Term> =
            (0..4).map(|m| Term::new(unit(m), TermKind::ArbitraryG(ScalarFn::exp(c(1., 0.))))).collect();
        terms[2].kind = TermKind::ArbitraryG(ScalarFn::cos(c(1., 0.)));
        let a = Ansatz::new(z(), terms).unwrap();
        assert_eq!(det4(&a.jacobian_matrix(&[z(); 4]).unwrap()), z());
    }

    #[test]
    fn bad_conjugate_reference() {
        let t = |k| Term::new(unit(0), k);
        assert!(Ansatz::new(z(), vec![t(TermKind::ConjugateOf(0))]).is_err());
        assert!(Ansatz::new(z(), vec![t(TermKind::Square), t(TermKind::ConjugateOf(0))]).is_err());
        assert!(Ansatz::new(z(), vec![t(TermKind::ArbitraryG(ScalarFn::identity())), t(TermKind::ConjugateOf(0))]).is_ok());
    }

    #[test]
    fn conjugate_pair_is_real_on_the_slice() {
        let g = ScalarFn::sin(c(0.7, 0.4));
        let f = LinearForm::new([c(0.3, 0.2), c(-0.5, 0.1), c(0.2, -0.6), c(0.4, 0.)], c(0.1, 0.3));
        // partner form: conj coefficients with barred and unbarred slots swapped
        let fc = f.conj();
        let partner = LinearForm::new([fc.coeffs[1], fc.coeffs[0], fc.coeffs[3], fc.coeffs[2]], fc.offset);
        let a = Ansatz::new(
            c(0.5, 0.),
            vec![Term::new(f, TermKind::ArbitraryG(g)), Term::new(partner, TermKind::ConjugateOf(0))],
        )
        .unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            let b = (c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)), c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
            assert!(a.reality_defect(b).unwrap() < 1e-12);
        }
    }

    #[test]
    fn jets_match_differences_and_split_additively() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let mut u = || c(rng.gen_range(-0.5..0.5), rng.gen_range(-0.5..0.5));
        let fns = [ScalarFn::exp(c(0.9, 0.)), ScalarFn::cosh(c(0.5, 0.5)), ScalarFn::sin(c(1., 0.))];
        let mut terms = vec![];
        for k in 0..6 {
            let kind = match k {
                1 => TermKind::Square,
                4 => TermKind::ConjugateOf(0),
                _ => TermKind::ArbitraryG(fns[k % 3].clone()),
            };
            terms.push(Term::new(LinearForm::new([u(), u(), u(), u()], u()), kind));
        }
        let a = Ansatz::new(u(), terms).unwrap();
        let p = [u(), u(), u(), u()];
        let j = a.eval_jet(&p).unwrap();
        let n = fd_hessian(|x| a.eval_value(x).unwrap(), &p, DEFAULT_STEP);
        assert!(jet_mismatch(&j, &n, 1e-5) <= 1.0);

        let lo = a.slice(a.beta1(), 0, 3).unwrap().eval_jet(&p).unwrap();
        let hi = a.slice(z(), 3, 6).unwrap().eval_jet(&p).unwrap();
        let sum = lo + hi;
        assert!(jet_mismatch(&j, &sum, 1e-14) <= 1.0);
    }

    #[test]
    fn kind_descriptors() {
        assert_eq!("square".parse::<TermKind>().unwrap(), TermKind::Square);
        assert_eq!("conj:3".parse::<TermKind>().unwrap(), TermKind::ConjugateOf(2));
        assert!("conj:0".parse::<TermKind>().is_err());
        assert_eq!(TermKind::ConjugateOf(2).to_string(), "conj:3");
    }
}
