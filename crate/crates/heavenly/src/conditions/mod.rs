//! Legendre existence conditions, closed-form class conditions, closed-form
//! Jacobian determinants and the non-invariance verdict.

pub(crate) mod tables;

use serde::Serialize;

use crate::ansatz::det4;
use crate::catalog::{nonzero, row_lookup, ClassId, Instance};
use crate::exact::Scalar;
use crate::jet::{Jet4, Point};
use crate::pde::EquationId;
use crate::{Error, Result, C64};

/// One printed term: integer coefficient times a monomial in named symbols.
#[derive(Debug)]
pub(crate) struct Mono(pub i64, pub &'static [(&'static str, u32)]);

/// Sum of a coefficient table, with the largest term magnitude as a scale.
pub(crate) fn eval_table<S: Scalar>(t: &[Mono], lookup: &dyn Fn(&str) -> S) -> (S, f64) {
    let mut sum = S::from_i64(0);
    let mut scale = 0.0f64;
    for Mono(k, m) in t {
        let term = m.iter().fold(S::from_i64(*k), |acc, (s, p)| acc * lookup(s).pow(*p));
        scale = scale.max(term.to_c64().norm());
        sum = sum + term;
    }
    (sum, scale)
}

/// The printed 2x2 minor whose non-vanishing lets the Legendre map exist.
pub fn legendre_condition(id: &EquationId, jet: &Jet4) -> Result<C64> {
    let (a, b) = match id {
        EquationId::HcmaLegendre | EquationId::MixedLegendre { .. } => (0, 1),
        // t then r in (x, r, t, z)
        EquationId::Heavenly2Legendre => (2, 1),
        other => return Err(Error::UnknownEquation(format!("{} has no Legendre condition", other.name()))),
    };
    Ok(jet.h(a, a) * jet.h(b, b) - jet.h(a, b) * jet.h(a, b))
}

fn sq(x: C64) -> C64 {
    x * x
}

/// Sum over pairs i < j of w_ij g_i'' g_j'' where w_ij is the squared 2x2
/// minor of columns (p, q) of the coefficient rows.
fn minor_sum(rows: &[[C64; 4]], g2: &[C64], p: usize, q: usize) -> C64 {
    let mut s = C64::new(0.0, 0.0);
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            s += sq(rows[i][p] * rows[j][q] - rows[i][q] * rows[j][p]) * g2[i] * g2[j];
        }
    }
    s
}

fn sum_by(rows: &[[C64; 4]], g2: &[C64], f: impl Fn(&[C64; 4]) -> C64) -> C64 {
    rows.iter().zip(g2).map(|(r, g)| g * f(r)).sum()
}

fn pair_index(i: usize, j: usize) -> usize {
    // (1,2) (1,3) (1,4) (2,3) (2,4) (3,4)
    match (i, j) {
        (0, 1) => 0,
        (0, 2) => 1,
        (0, 3) => 2,
        (1, 2) => 3,
        (1, 3) => 4,
        _ => 5,
    }
}

fn paired(g2: &[C64], coeffs: [C64; 6]) -> C64 {
    let mut s = C64::new(0.0, 0.0);
    for i in 0..4 {
        for j in i + 1..4 {
            s += coeffs[pair_index(i, j)] * g2[i] * g2[j];
        }
    }
    s
}

/// The class-specific printed form of the Legendre condition, given g'' of
/// every term at the evaluation point. None for classes without one.
pub fn closed_form_condition(inst: &Instance, g2: &[C64]) -> Result<Option<C64>> {
    if g2.len() != inst.rows.len() {
        return Err(Error::Arity(format!("expected {} second derivatives, got {}", inst.rows.len(), g2.len())));
    }
    let p = |k: &str| inst.params[k];
    let rows = &inst.rows;
    let v = match inst.id {
        ClassId::HcmaI => {
            let (a, a2, d1, d2) = (p("A"), p("a2"), p("d1"), p("d2"));
            let (g1, g2c, g3, g2b) = (g2[0], g2[1], g2[2], g2[3]);
            sq(a2) * sq(d1 - d2) * g1 * (g2b + g2c) - sq(a) * sq(d1 + d2) * g3 * (g2b + g2c)
                + sq(sq(d1) - sq(d2)) * g2c * g2b
                - 4.0 * sq(a2) * sq(a) * g1 * g3
        }
        ClassId::HcmaII => p("d4").powi(4) * g2[2] * g2[3],
        ClassId::HcmaIII => {
            let (a2, b3, b4, c2, h2) = (p("A2"), p("B3"), p("B4"), p("C2"), p("H2"));
            let s = (b3 * b3 + b4 * b4).sqrt();
            let dinv = 1.0 / (b3 - b4 + s);
            let look = |k: &str| match k {
                "A2" => a2,
                "B3" => b3,
                "B4" => b4,
                "H2" => h2,
                "S" => s,
                "Dinv" => dinv,
                _ => unreachable!("symbol {k}"),
            };
            let (w12, _) = eval_table(tables::HCMA3_COND_12, &look);
            let (w24, _) = eval_table(tables::HCMA3_COND_24, &look);
            let (g1, gg2, g3, g4) = (g2[0], g2[1], g2[2], g2[3]);
            w12 * g1 * gg2 + w24 * gg2 * g4 - 4.0 * g1 * sq(c2) * g3 * sq(a2)
                + (-sq(b3) * sq(c2) - sq(b4) * sq(c2)) * gg2 * g3
                - 16.0 * g1 * sq(h2) * g4 * sq(a2)
                - 4.0 * g3 * sq(c2) * g4 * sq(h2)
        }
        // columns r and t of (x, r, t, z)
        ClassId::H2Equal | ClassId::H2HighII => minor_sum(rows, g2, 1, 2),
        ClassId::H2HighI => {
            let r = row_lookup(rows);
            let ts = [
                tables::HIGH_I_COND_12,
                tables::HIGH_I_COND_13,
                tables::HIGH_I_COND_14,
                tables::HIGH_I_COND_23,
                tables::HIGH_I_COND_24,
                tables::HIGH_I_COND_34,
            ];
            let den = sq(r("a1") * r("b1") * r("c1") * r("d1"));
            paired(g2, ts.map(|t| eval_table(t, &r).0 / den))
        }
        ClassId::MixedClass => {
            let r = row_lookup(rows);
            let ts = [
                tables::MIX_COND_N1,
                tables::MIX_COND_N2,
                tables::MIX_COND_N3,
                tables::MIX_COND_N4,
                tables::MIX_COND_N5,
                tables::MIX_COND_N6,
            ];
            let den = sq(r("a2") * r("b2") * r("c2") * r("d2"));
            paired(g2, ts.map(|t| eval_table(t, &r).0)) / den
        }
        ClassId::H2SeriesEqual | ClassId::H2SeriesHighII => {
            sum_by(rows, g2, |r| sq(r[2])) * sum_by(rows, g2, |r| sq(r[1])) - sq(sum_by(rows, g2, |r| r[1] * r[2]))
        }
        ClassId::H2SeriesHighI => {
            sum_by(rows, g2, |r| r[1].powi(4) / sq(r[0])) * sum_by(rows, g2, |r| sq(r[1]))
                - sq(sum_by(rows, g2, |r| r[1].powi(3) / r[0]))
        }
        ClassId::MixedSeries => {
            let s = |r: &[C64; 4]| r[0] + r[1];
            let q = |r: &[C64; 4]| sq(r[0]) + sq(r[1]);
            sum_by(rows, g2, |r| sq(s(r))) * sum_by(rows, g2, |r| sq(q(r)) / sq(r[1]))
                - sq(sum_by(rows, g2, |r| q(r) * s(r) / r[1]))
        }
        ClassId::CmaSq | ClassId::AsymmClass | ClassId::EvolutionClass | ClassId::RefSheftel | ClassId::RefMalykhExp => {
            return Ok(None)
        }
    };
    Ok(Some(v))
}

/// g, g', g'' of every term at x.
pub fn term_derivs(inst: &Instance, x: &Point) -> Result<Vec<[C64; 3]>> {
    (0..inst.ansatz.n()).map(|j| inst.ansatz.term_derivs(j, x)).collect()
}

/// A named multiplicative factor of a closed-form determinant.
#[derive(Debug, Clone, Serialize)]
pub struct NamedFactor {
    pub name: String,
    pub value: C64,
    /// Magnitude of the largest contribution, for the nonzero test.
    pub scale: f64,
}

impl NamedFactor {
    fn new(name: impl Into<String>, value: C64) -> Self {
        NamedFactor { name: name.into(), value, scale: value.norm() }
    }

    fn with_scale(name: impl Into<String>, value: C64, scale: f64) -> Self {
        NamedFactor { name: name.into(), value, scale }
    }

    pub fn is_nonzero(&self) -> bool {
        nonzero(self.value, self.scale)
    }
}

/// A closed-form determinant as a product of named factors.
#[derive(Debug, Clone, Serialize)]
pub struct ClosedDet {
    pub factors: Vec<NamedFactor>,
}

impl ClosedDet {
    pub fn value(&self) -> C64 {
        self.factors.iter().map(|f| f.value).product()
    }

    pub fn vanishing(&self) -> Vec<&NamedFactor> {
        self.factors.iter().filter(|f| !f.is_nonzero()).collect()
    }
}

fn poly_factor(name: &str, terms: &[C64]) -> NamedFactor {
    let scale = terms.iter().map(|t| t.norm()).fold(0.0, f64::max);
    NamedFactor::with_scale(name, terms.iter().sum(), scale)
}

fn gprime_factors(g1: &[C64], labels: &[&str]) -> Vec<NamedFactor> {
    labels.iter().zip(g1).map(|(l, v)| NamedFactor::new(format!("{l}'"), *v)).collect()
}

fn table_factor(name: &str, t: &[Mono], rows: &[[C64; 4]]) -> NamedFactor {
    let (v, scale) = eval_table(t, &row_lookup(rows));
    NamedFactor::with_scale(name, v, scale)
}

/// The printed closed-form Jacobian determinant at x. The first-derivative
/// values g1 belong to the first four terms. None where nothing is printed.
pub fn jacobian_det_closed(inst: &Instance, x: &Point, g1: &[C64]) -> Result<Option<ClosedDet>> {
    if g1.len() < 4 {
        return Err(Error::Arity("need g' for four terms".into()));
    }
    let p = |k: &str| inst.params[k];
    let rows = &inst.rows[..4.min(inst.rows.len())];
    let r = row_lookup(rows);
    let one = C64::new(1.0, 0.0);
    let four_g = || gprime_factors(g1, &["g1", "g2", "g3", "g4"]);
    let mut f = vec![];
    match inst.id {
        ClassId::CmaSq => {
            let (a2, d3) = (p("a2"), p("d3"));
            let ab = a2.conj();
            let (b2, b3) = (p("beta2"), p("beta3"));
            let [z1, z1b, z2, z2b] = *x;
            f.push(NamedFactor::new("-1/(2conj(a2)^2a2^2)", -one / (2.0 * ab * ab * a2 * a2)));
            f.push(poly_factor("Gamma1/2", &[ab * z1, a2 * z1b, b2]));
            f.push(poly_factor(
                "conj(a2)a2 Gamma2",
                &[2.0 * z1 * ab * a2, 2.0 * z1b * ab * a2, z2 * a2, z2b * ab, 2.0 * b3 * ab * a2],
            ));
            f.push(poly_factor(
                "4d3conj(d3)conj(a2)^2a2-d3conj(a2)-4conj(a2)a2^2d3conj(d3)+conj(d3)a2",
                &[4.0 * d3 * d3.conj() * ab * ab * a2, -d3 * ab, -4.0 * ab * a2 * a2 * d3 * d3.conj(), d3.conj() * a2],
            ));
            f.extend(gprime_factors(&g1[2..4], &["g3", "conj(g3)"]));
        }
        ClassId::HcmaI => {
            let (a, a2, d1, d2) = (p("A"), p("a2"), p("d1"), p("d2"));
            f.push(NamedFactor::new("2i*a2*A/(d1^2d2^2)", C64::new(0.0, 2.0) * a2 * a / sq(d1 * d2)));
            f.push(poly_factor(
                "d1^6-d2^6-3d1^4d2^2+3d1^2d2^4",
                &[d1.powi(6), -d2.powi(6), -3.0 * d1.powi(4) * d2 * d2, 3.0 * d1 * d1 * d2.powi(4)],
            ));
            f.extend(gprime_factors(g1, &["g1", "g2", "g3", "conj(g2)"]));
        }
        ClassId::HcmaII => {
            let (a4, b4, d4) = (p("a4"), p("b4"), p("d4"));
            f.push(NamedFactor::new("-1", -one));
            f.push(poly_factor("conj(a4)b4-a4conj(b4)", &[a4.conj() * b4, -a4 * b4.conj()]));
            f.push(NamedFactor::new("d4^2", d4 * d4));
            f.extend(gprime_factors(g1, &["g1", "g2", "g3", "conj(g3)"]));
        }
        ClassId::HcmaIII => {
            f.push(NamedFactor::new("16", C64::new(16.0, 0.0)));
            for k in ["A2", "B3", "C2", "H2"] {
                f.push(NamedFactor::new(k, p(k)));
            }
            f.extend(four_g());
        }
        ClassId::H2Equal | ClassId::H2HighII => {
            let den = sq(r("a3") * r("b3") * r("c3") * r("d3"));
            f.push(NamedFactor::new("1/(a3b3c3d3)^2", one / den));
            let t = if inst.id == ClassId::H2Equal { tables::DET_EQUAL } else { tables::DET_HIGH_II };
            f.push(table_factor("determinant polynomial", t, rows));
            f.extend(four_g());
        }
        ClassId::H2HighI => {
            let den = r("c1") * r("d2") * r("c2") * r("d1") * r("b2") * r("b1") * r("a2") * r("a1");
            f.push(NamedFactor::new("1/(c1d2c2d1b2b1a2a1)", one / den));
            f.push(table_factor("determinant polynomial", tables::DET_HIGH_I, rows));
            f.extend(four_g());
        }
        ClassId::MixedClass => {
            let den = sq(r("a2") * r("b2") * r("c2") * r("d2"));
            f.push(NamedFactor::new("-1/(a2b2c2d2)^2", -one / den));
            f.push(table_factor("determinant polynomial", tables::DET_MIXED, rows));
            f.extend(four_g());
        }
        ClassId::AsymmClass | ClassId::EvolutionClass => {
            let a = p("A");
            let b = if inst.id == ClassId::AsymmClass { p("B") } else { C64::new(0.0, 0.0) };
            f.push(NamedFactor::new("1/(c1*A*a3)", one / (r("c1") * a * r("a3"))));
            f.push(NamedFactor::new("a1", r("a1")));
            f.push(poly_factor("b2d3-b3d2", &[r("b2") * r("d3"), -r("b3") * r("d2")]));
            f.push(poly_factor(
                "-c4*A*a3*c1-B*a3*c1^2+a1*c1*c3*B+a1*c3*c4*A",
                &[
                    -r("c4") * a * r("a3") * r("c1"),
                    -b * r("a3") * sq(r("c1")),
                    r("a1") * r("c1") * r("c3") * b,
                    r("a1") * r("c3") * r("c4") * a,
                ],
            ));
            f.extend(four_g());
        }
        _ => return Ok(None),
    }
    Ok(Some(ClosedDet { factors: f }))
}

/// Hadamard bound: product of row norms, the natural scale of a determinant.
pub fn det_scale(m: &[[C64; 4]; 4]) -> f64 {
    m.iter().map(|r| r.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()).product()
}

#[derive(Debug, Clone, Serialize)]
pub struct ConditionReport {
    pub generic_value: C64,
    pub closed_form_value: Option<C64>,
    pub satisfied: bool,
    /// Factors that must not vanish, with their values at the point.
    pub region_factors: Vec<(String, C64)>,
    /// Names of the factors found to vanish.
    pub vanishing: Vec<String>,
}

/// Decides whether the four arguments are independent at x, so that the
/// solution admits no Killing vector there.
pub fn noninvariance_verdict(inst: &Instance, x: &Point) -> Result<ConditionReport> {
    let m = inst.ansatz.jacobian_matrix(x)?;
    let generic = det4(&m);
    let mut vanishing = vec![];
    if !nonzero(generic, det_scale(&m)) {
        vanishing.push("generic Jacobian determinant".to_string());
    }
    for v in &inst.violations {
        vanishing.push(v.name.clone());
    }
    let g1: Vec<C64> = term_derivs(inst, x)?.iter().map(|d| d[1]).collect();
    let closed = jacobian_det_closed(inst, x, &g1)?;
    let mut region = vec![];
    if let Some(cd) = &closed {
        for f in &cd.factors {
            region.push((f.name.clone(), f.value));
            if !f.is_nonzero() && !vanishing.contains(&f.name) {
                vanishing.push(f.name.clone());
            }
        }
    }
    if inst.id == ClassId::CmaSq {
        // Region clause: both square arguments and g3' must not vanish.
        let s1 = inst.ansatz.terms()[0].form.eval(x);
        let s2 = inst.ansatz.terms()[1].form.eval(x);
        for (name, v) in [("Gamma1", 2.0 * s1), ("Gamma2", 2.0 * s2), ("g3'", g1[2])] {
            region.push((name.to_string(), v));
            if !nonzero(v, v.norm()) && !vanishing.contains(&name.to_string()) {
                vanishing.push(name.to_string());
            }
        }
    }
    Ok(ConditionReport {
        generic_value: generic,
        closed_form_value: closed.map(|c| c.value()),
        satisfied: vanishing.is_empty(),
        region_factors: region,
        vanishing,
    })
}

/// Relative agreement used by the closed-form versus generic checks.
pub fn rel_close(a: C64, b: C64, tol: f64) -> bool {
    (a - b).norm() <= tol * a.norm().max(b.norm()).max(1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ansatz::{Ansatz, Term, TermKind};
    use crate::c;
    use crate::catalog::{instantiate, ClassParams};
    use crate::jet::LinearForm;
    use crate::scalar::ScalarFn;

    fn quad_ansatz(rows: &[[C64; 4]]) -> Ansatz {
        let terms = rows.iter().map(|r| Term::new(LinearForm::new(*r, c(0., 0.)), TermKind::Square)).collect();
        Ansatz::new(c(0., 0.), terms).unwrap()
    }

    #[test]
    fn printed_minor_examples() {
        let x = [c(0.3, 0.1), c(-0.2, 0.4), c(0.5, 0.), c(0.1, -0.1)];
        // theta = t^2 + r^2: 2*2 - 0
        let a = quad_ansatz(&[[c(0., 0.), c(0., 0.), c(1., 0.), c(0., 0.)], [c(0., 0.), c(1., 0.), c(0., 0.), c(0., 0.)]]);
        let j = a.eval_jet(&x).unwrap();
        assert_eq!(legendre_condition(&EquationId::Heavenly2Legendre, &j).unwrap(), c(4., 0.));
        // w = p^2: condition violated
        let a = quad_ansatz(&[[c(1., 0.), c(0., 0.), c(0., 0.), c(0., 0.)]]);
        let j = a.eval_jet(&x).unwrap();
        let mixed = EquationId::MixedLegendre { theta: crate::exact::RatComplex::one() };
        assert_eq!(legendre_condition(&mixed, &j).unwrap(), c(0., 0.));
        assert!(legendre_condition(&EquationId::Heavenly2, &j).is_err());
    }

    #[test]
    fn legendre_of_product() {
        // w = p * pb has w_pp = w_pbpb = 0 and w_ppb = 1.
        let x = [c(0.3, 0.1), c(-0.2, 0.4), c(0.5, 0.), c(0.1, -0.1)];
        let p = Jet4::variable(0, &x);
        let pb = Jet4::variable(1, &x);
        assert_eq!(legendre_condition(&EquationId::HcmaLegendre, &(p * pb)).unwrap(), c(-1., 0.));
    }

    fn hcma2(a4: C64, b4: C64, d4: f64) -> Instance {
        let p = ClassParams::default()
            .set("a4", a4)
            .set("b4", b4)
            .set("d3", c(0.5, 0.))
            .set("d4", c(d4, 0.))
            .set("beta1", c(0., 0.))
            .set("beta2", c(0., 0.))
            .set("beta3", c(0., 0.))
            .set("beta4", c(0., 0.));
        instantiate(ClassId::HcmaII, &p, &vec![ScalarFn::exp(c(1., 0.))]).unwrap()
    }

    #[test]
    fn printed_determinant_examples() {
        let inst = hcma2(c(1., 1.), c(0., 1.), 1.);
        let x = [c(0., 0.); 4];
        let d = jacobian_det_closed(&inst, &x, &[c(1., 0.); 4]).unwrap().unwrap();
        assert!((d.value() - c(0., -2.)).norm() < 1e-15);
        let d = jacobian_det_closed(&inst, &x, &[c(1., 0.), c(0., 0.), c(1., 0.), c(1., 0.)]).unwrap().unwrap();
        assert_eq!(d.value(), c(0., 0.));
        assert_eq!(d.vanishing()[0].name, "g2'");
    }

    #[test]
    fn warunek_two_example() {
        let inst = hcma2(c(1., 1.), c(0., 1.), 1.);
        let v = closed_form_condition(&inst, &[c(1., 0.); 4]).unwrap().unwrap();
        assert_eq!(v, c(1., 0.));
    }

    #[test]
    fn equal_terms_cancel_minor() {
        let r = [c(2., 0.), c(1., 0.), c(1., 0.), c(-4., 0.)];
        let rows = [r, r];
        assert_eq!(minor_sum(&rows, &[c(1., 0.), c(1., 0.)], 1, 2), c(0., 0.));
    }

    #[test]
    fn hcma_iii_printed_determinant() {
        let mut p = ClassParams::default();
        for k in ["A2", "B3", "C2", "H2"] {
            p = p.set(k, c(1., 0.));
        }
        p = p.set("B4", c(0., 0.));
        for k in 1..=5 {
            p = p.set(&format!("beta{k}"), c(0., 0.));
        }
        let inst = instantiate(ClassId::HcmaIII, &p, &vec![ScalarFn::exp(c(1., 0.))]).unwrap();
        let x = [c(0., 0.); 4];
        let d = jacobian_det_closed(&inst, &x, &[c(1., 0.); 4]).unwrap().unwrap();
        assert_eq!(d.value(), c(16., 0.));
        // the closed-form formula reproduces the generic condition
        let jet = inst.equation_ansatz().eval_jet(&x).unwrap();
        let generic = legendre_condition(&inst.equation, &jet).unwrap();
        let g2: Vec<C64> = term_derivs(&inst, &x).unwrap().iter().map(|d| d[2]).collect();
        let closed = closed_form_condition(&inst, &g2).unwrap().unwrap();
        assert!(rel_close(closed, generic, 1e-8), "{closed} vs {generic}");
        assert!(noninvariance_verdict(&inst, &x).unwrap().satisfied);
    }
}
