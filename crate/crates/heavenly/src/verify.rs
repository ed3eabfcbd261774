//! Pointwise verification of a class instance.

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{instantiate_unchecked, ClassId, ClassParams, GChoice, Instance, Role};
use crate::conditions::{legendre_condition, noninvariance_verdict, term_derivs};
use crate::jet::Point;
use crate::pde::{builtin_pde, builtin_system, EquationId};
use crate::{Result, C64};

/// Default scaled tolerance for residual checks.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Check {
    pub name: String,
    /// Largest |residual| over the points.
    pub max_abs_residual: f64,
    /// Largest |residual| / (1 + sum of term magnitudes).
    pub max_scaled_residual: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Verdicts {
    pub solution: bool,
    /// None when the bound equation has no Legendre condition.
    pub legendre_ok: Option<bool>,
    /// None when some g' vanishes identically and the test says nothing.
    pub non_invariant: Option<bool>,
    pub vanishing_factors: Vec<String>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct VerifyReport {
    pub class: String,
    pub equation: String,
    pub points: usize,
    pub checks: Vec<Check>,
    pub verdicts: Verdicts,
}

impl VerifyReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
            && self.verdicts.solution
            && self.verdicts.legendre_ok != Some(false)
            && self.verdicts.non_invariant != Some(false)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Default, Clone, Copy)]
struct Acc {
    abs: f64,
    scaled: f64,
}

impl Acc {
    fn push(&mut self, abs: f64, scale: f64) {
        self.abs = self.abs.max(abs);
        self.scaled = self.scaled.max(abs / (1.0 + scale));
    }
    fn merge(a: Acc, b: Acc) -> Acc {
        Acc { abs: a.abs.max(b.abs), scaled: a.scaled.max(b.scaled) }
    }
}

struct PointResult {
    pde: Acc,
    system: Acc,
    reality: Acc,
    legendre_zero: bool,
    vanishing: Vec<String>,
    gprime: Vec<bool>,
}

fn has_legendre_condition(eq: &EquationId) -> bool {
    matches!(eq, EquationId::HcmaLegendre | EquationId::Heavenly2Legendre | EquationId::MixedLegendre { .. })
}

fn evaluate_point(inst: &Instance, eq_ansatz: &crate::ansatz::Ansatz, x: &Point) -> Result<PointResult> {
    let pde = builtin_pde(&inst.equation);
    let jet = eq_ansatz.eval_jet(x)?;
    let mut r = PointResult {
        pde: Acc::default(),
        system: Acc::default(),
        reality: Acc::default(),
        legendre_zero: false,
        vanishing: vec![],
        gprime: vec![],
    };
    r.pde.push(pde.residual(&jet).norm(), pde.residual_scale(&jet));

    let native = inst.ansatz.eval_jet(x)?;
    if let Some(sid) = inst.system {
        for eq in builtin_system(sid).equations() {
            r.system.push(eq.residual(&native).norm(), eq.residual_scale(&native));
        }
    }
    if inst.id.has_real_slice() {
        let d = inst.ansatz.reality_defect((x[0], x[2]))?;
        r.reality.push(d, 0.0);
    }
    if has_legendre_condition(&inst.equation) {
        let v = legendre_condition(&inst.equation, &jet)?;
        let h = jet.hess();
        let scale: f64 = h.iter().flatten().map(|z| z.norm_sqr()).sum();
        r.legendre_zero = v.norm() <= 1e-12 * (1.0 + scale);
    }
    r.vanishing = noninvariance_verdict(inst, x)?.vanishing;
    r.gprime = term_derivs(inst, x)?.iter().map(|d| d[1] != C64::new(0.0, 0.0)).collect();
    Ok(r)
}

/// Evaluates the instance at every point. Points are processed in
/// parallel; the report is assembled in point order.
pub fn verify_instance(inst: &Instance, points: &[Point], tolerance: f64) -> Result<VerifyReport> {
    let eq_ansatz = inst.equation_ansatz();
    let results: Vec<PointResult> =
        points.par_iter().map(|x| evaluate_point(inst, &eq_ansatz, x)).collect::<Result<_>>()?;

    let fold = |f: fn(&PointResult) -> Acc| results.iter().map(f).fold(Acc::default(), Acc::merge);
    let mk = |name: &str, a: Acc, scaled: bool| Check {
        name: name.to_string(),
        max_abs_residual: a.abs,
        max_scaled_residual: a.scaled,
        pass: if scaled { a.scaled <= tolerance } else { a.abs <= tolerance },
    };
    let mut checks = vec![mk("pde-residual", fold(|r| r.pde), true)];
    if inst.system.is_some() {
        checks.push(mk("system-residual", fold(|r| r.system), true));
    }
    if inst.id.has_real_slice() {
        checks.push(mk("reality", fold(|r| r.reality), false));
    }

    let mut notes = vec![];
    let mut vanishing: Vec<String> = vec![];
    for r in &results {
        for v in &r.vanishing {
            if !vanishing.contains(v) {
                vanishing.push(v.clone());
            }
        }
    }
    // Arbitrary terms whose g' is zero at every point.
    let dead: Vec<usize> = (0..inst.roles.len())
        .filter(|&j| matches!(inst.roles[j], Role::G { .. }))
        .filter(|&j| !points.is_empty() && results.iter().all(|r| !r.gprime[j]))
        .collect();
    let non_invariant = if !dead.is_empty() {
        for j in &dead {
            notes.push(format!("g{}'=0: non-invariance untestable", j + 1));
        }
        None
    } else {
        Some(vanishing.is_empty())
    };
    let legendre_ok = has_legendre_condition(&inst.equation).then(|| results.iter().all(|r| !r.legendre_zero));
    if legendre_ok == Some(false) {
        notes.push("Legendre transformation condition vanishes at a sample point".into());
    }
    let solution = checks.iter().filter(|c| c.name != "reality").all(|c| c.pass);
    Ok(VerifyReport {
        class: inst.id.name().to_string(),
        equation: inst.equation.name().to_string(),
        points: points.len(),
        checks,
        verdicts: Verdicts { solution, legendre_ok, non_invariant, vanishing_factors: vanishing, notes },
    })
}

/// Builds the instance (recording side-condition violations) and verifies it.
pub fn verify_class(id: ClassId, p: &ClassParams, g: &GChoice, points: &[Point], tolerance: f64) -> Result<VerifyReport> {
    let inst = instantiate_unchecked(id, p, g)?;
    verify_instance(&inst, points, tolerance)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c;
    use crate::catalog::instantiate;
    use crate::sampling::{random_point, rng_from_seed, sample_float};
    use crate::scalar::ScalarFn;

    fn points(seed: u64, k: usize) -> Vec<Point> {
        let mut rng = rng_from_seed(seed);
        (0..k).map(|_| random_point(&mut rng)).collect()
    }

    #[test]
    fn heavenly_equal_class_verifies() {
        let p = sample_float(ClassId::H2Equal, 4, &mut rng_from_seed(4)).unwrap();
        let inst = instantiate(ClassId::H2Equal, &ClassParams::new(p), &vec![ScalarFn::exp(c(1., 0.))]).unwrap();
        let r = verify_instance(&inst, &points(1, 100), DEFAULT_TOLERANCE).unwrap();
        assert!(r.pass(), "{r:?}");
        assert!(r.check("pde-residual").unwrap().max_abs_residual < 1e-9);
        assert!(r.check("system-residual").unwrap().max_abs_residual < 1e-12);
        assert_eq!(r.verdicts.legendre_ok, Some(true));
    }

    #[test]
    fn cma_example_verifies() {
        let p = ClassParams::new([
            ("a2".to_string(), c(1., 0.)),
            ("d3".to_string(), c(1., 0.)),
            ("beta1".to_string(), c(0., 0.)),
            ("beta2".to_string(), c(0.1, 0.)),
            ("beta3".to_string(), c(0.2, 0.)),
            ("beta4".to_string(), c(0.1, 0.1)),
        ]);
        let r = verify_class(ClassId::CmaSq, &p, &vec![ScalarFn::exp(c(1., 0.))], &points(2, 100), DEFAULT_TOLERANCE)
            .unwrap();
        assert!(r.check("pde-residual").unwrap().max_abs_residual < 1e-9, "{r:?}");
        assert!(r.check("reality").unwrap().pass);
    }

    #[test]
    fn constant_g_is_flagged_untestable() {
        let p = sample_float(ClassId::H2Equal, 4, &mut rng_from_seed(8)).unwrap();
        let inst = instantiate(ClassId::H2Equal, &ClassParams::new(p), &vec![ScalarFn::poly(vec![c(2., 0.)]).unwrap()]).unwrap();
        let r = verify_instance(&inst, &points(3, 10), DEFAULT_TOLERANCE).unwrap();
        assert_eq!(r.check("system-residual").unwrap().max_abs_residual, 0.0);
        assert_eq!(r.verdicts.non_invariant, None);
        assert!(r.verdicts.notes.iter().any(|n| n.contains("untestable")));
    }

    #[test]
    fn degenerate_hcma_fails_with_named_factor() {
        let mut p = sample_float(ClassId::HcmaI, 4, &mut rng_from_seed(9)).unwrap();
        p.insert("d1".into(), c(1., 0.));
        p.insert("d2".into(), c(1., 0.));
        let r = verify_class(ClassId::HcmaI, &ClassParams::new(p), &vec![ScalarFn::exp(c(1., 0.))], &points(4, 10), DEFAULT_TOLERANCE)
            .unwrap();
        assert!(!r.pass());
        assert_eq!(r.verdicts.non_invariant, Some(false));
        assert!(!r.verdicts.vanishing_factors.is_empty());
    }

    #[test]
    fn report_is_deterministic() {
        let p = sample_float(ClassId::MixedClass, 4, &mut rng_from_seed(5)).unwrap();
        let inst = instantiate(ClassId::MixedClass, &ClassParams::new(p), &vec![ScalarFn::sin(c(1., 0.))]).unwrap();
        let a = verify_instance(&inst, &points(6, 50), DEFAULT_TOLERANCE).unwrap();
        let b = verify_instance(&inst, &points(6, 50), DEFAULT_TOLERANCE).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }
}
