//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! with status 1 if any criterion fails.

use std::time::{Duration, Instant};

use heavenly::ansatz::det4;
use heavenly::catalog::{instantiate, instantiate_unchecked, ClassId, ClassParams, Instance};
use heavenly::conditions::{
    closed_form_condition, jacobian_det_closed, legendre_condition, noninvariance_verdict, rel_close, term_derivs,
};
use heavenly::ansatz::TermKind;
use heavenly::determining::{certify, default_target, generate};
use heavenly::fd::{fd_hessian, jet_mismatch, DEFAULT_STEP};
use heavenly::jet::{Jet4, Point};
use heavenly::metrics::{kahler_block_det, line_element, metric_at, metric_det, quadratic_form, MetricId};
use heavenly::pde::{builtin_pde, builtin_system, SystemId};
use heavenly::sampling::{random_base, random_direction, random_point, sample_float, substream, SeededRng};
use heavenly::scalar::ScalarFn;
use heavenly::{c, C64};

const SEED: u64 = 20_240_917;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

/// Three families of arbitrary functions. Every member is real on the
/// real axis so that classes with real-valued terms accept it.
fn g_family(k: usize) -> Vec<ScalarFn> {
    match k {
        0 => vec![ScalarFn::exp(c(1., 0.)), ScalarFn::exp(c(-0.7, 0.)), ScalarFn::exp(c(0.4, 0.))],
        1 => vec![ScalarFn::sin(c(1., 0.)), ScalarFn::cos(c(0.8, 0.)), ScalarFn::cosh(c(0.6, 0.))],
        _ => {
            // exp truncated after the quartic term
            let t = [1.0, 1.0, 0.5, 1.0 / 6.0, 1.0 / 24.0].map(|v| c(v, 0.)).to_vec();
            vec![ScalarFn::poly(t).unwrap(), ScalarFn::Square]
        }
    }
}

fn n_for(id: ClassId) -> usize {
    if id.is_series() {
        6
    } else {
        id.default_n()
    }
}

fn draw(id: ClassId, rng: &mut SeededRng, family: usize) -> Instance {
    let n = n_for(id);
    let p = sample_float(id, n, rng).expect("admissible draw");
    instantiate(id, &ClassParams::new(p).with_n(n), &g_family(family)).expect("instance")
}

fn points(rng: &mut SeededRng, k: usize) -> Vec<Point> {
    (0..k).map(|_| random_point(rng)).collect()
}

fn residual_classes() -> Vec<ClassId> {
    use ClassId::*;
    vec![
        CmaSq, HcmaI, HcmaII, HcmaIII, H2Equal, H2HighI, H2HighII, H2SeriesEqual, H2SeriesHighI, H2SeriesHighII,
        MixedClass, MixedSeries, AsymmClass, EvolutionClass, RefSheftel,
    ]
}

fn criterion_residuals() -> Outcome {
    let start = Instant::now();
    let (mut worst_pde, mut worst_sys) = (0.0f64, 0.0f64);
    let mut worst_class = String::new();
    for (ci, id) in residual_classes().into_iter().enumerate() {
        for d in 0..20 {
            for fam in 0..3 {
                let mut rng = substream(SEED, (ci * 1000 + d * 10 + fam) as u64);
                let inst = draw(id, &mut rng, fam);
                let eq_ansatz = inst.equation_ansatz();
                let pde = builtin_pde(&inst.equation);
                let sys = inst.system.map(builtin_system);
                for x in points(&mut rng, 100) {
                    let r = pde.residual(&eq_ansatz.eval_jet(&x).unwrap()).norm();
                    if r > worst_pde {
                        worst_pde = r;
                        worst_class = id.to_string();
                    }
                    if let Some(s) = &sys {
                        let j = inst.ansatz.eval_jet(&x).unwrap();
                        for v in s.residuals(&j) {
                            worst_sys = worst_sys.max(v.norm());
                        }
                    }
                }
            }
        }
    }
    let t = start.elapsed();
    outcome(
        worst_pde < 1e-9 && worst_sys < 1e-12 && t < Duration::from_secs(60),
        format!("max pde residual {worst_pde:.2e} ({worst_class}), max system residual {worst_sys:.2e}, {:.1}s", t.as_secs_f64()),
    )
}

fn criterion_oracle() -> Outcome {
    let classes: Vec<ClassId> = ClassId::ALL.to_vec();
    let mut worst = 0.0f64;
    let mut worst_at = String::new();
    for s in 0..1000usize {
        let id = classes[s % classes.len()];
        let mut rng = substream(SEED + 1, s as u64);
        let inst = draw(id, &mut rng, s % 3);
        let x = random_point(&mut rng);
        let analytic = inst.ansatz.eval_jet(&x).unwrap();
        let numeric = fd_hessian(|y| inst.ansatz.eval_value(y).unwrap(), &x, DEFAULT_STEP);
        let m = jet_mismatch(&analytic, &numeric, 1e-5);
        if m > worst {
            worst = m;
            worst_at = id.to_string();
        }
    }
    outcome(worst <= 1.0, format!("worst mismatch ratio {worst:.3} at {worst_at} (<= 1 passes)"))
}

fn criterion_certification() -> Outcome {
    use ClassId::*;
    let pairs = [
        (H2Equal, Some(SystemId::EqSymm)),
        (H2HighI, Some(SystemId::HighSymm)),
        (H2HighII, Some(SystemId::HighSymm)),
        (MixedClass, Some(SystemId::MixedLin)),
        (AsymmClass, None),
    ];
    let mut ok = true;
    let mut parts = vec![];
    for (i, (id, sys)) in pairs.into_iter().enumerate() {
        let target = match sys {
            Some(s) => heavenly::determining::Target::System(s),
            None => default_target(id),
        };
        let kinds = vec![TermKind::ArbitraryG(ScalarFn::identity()); 4];
        let ds = generate(&target, 4, &kinds).unwrap();
        let clean = certify(&ds, id, 50, SEED + 10 + i as u64, false).unwrap();
        let mutant = certify(&ds, id, 50, SEED + 10 + i as u64, true).unwrap();
        let caught = mutant.failing_trials() as f64 / 50.0;
        let this = clean.exact && clean.all_zero() && caught >= 0.98;
        ok &= this;
        parts.push(format!("{id}: {}/50 zero, mutants caught {:.0}%", clean.zero_trials(), caught * 100.0));
    }
    outcome(ok, parts.join("; "))
}

fn criterion_determinants() -> Outcome {
    use ClassId::*;
    let classes = [CmaSq, HcmaI, HcmaII, HcmaIII, H2Equal, H2HighI, H2HighII, MixedClass, AsymmClass, EvolutionClass];
    let mut worst = 0.0f64;
    let mut worst_at = String::new();
    let mut ok = true;
    for (ci, id) in classes.into_iter().enumerate() {
        for d in 0..100 {
            let mut rng = substream(SEED + 2, (ci * 1000 + d) as u64);
            let inst = draw(id, &mut rng, d % 3);
            for x in points(&mut rng, 10) {
                let generic = det4(&inst.ansatz.jacobian_matrix(&x).unwrap());
                let g1: Vec<C64> = term_derivs(&inst, &x).unwrap().iter().map(|t| t[1]).collect();
                let Some(closed) = jacobian_det_closed(&inst, &x, &g1).unwrap() else {
                    ok = false;
                    worst_at = format!("{id}: no closed form");
                    continue;
                };
                let closed = closed.value();
                let rel = (closed - generic).norm() / closed.norm().max(generic.norm()).max(1e-300);
                if !rel_close(closed, generic, 1e-10) {
                    ok = false;
                }
                if rel > worst {
                    worst = rel;
                    worst_at = id.to_string();
                }
            }
        }
    }
    outcome(ok, format!("worst relative gap {worst:.2e} ({worst_at})"))
}

fn criterion_closed_form_fidelity() -> Outcome {
    let mut ok = true;
    let mut parts = vec![];
    for (ci, id) in [ClassId::HcmaIII, ClassId::MixedClass].into_iter().enumerate() {
        let mut worst = 0.0f64;
        for d in 0..50 {
            let mut rng = substream(SEED + 3, (ci * 1000 + d) as u64);
            let inst = draw(id, &mut rng, d % 3);
            let eq_ansatz = inst.equation_ansatz();
            for x in points(&mut rng, 10) {
                let generic = legendre_condition(&inst.equation, &eq_ansatz.eval_jet(&x).unwrap()).unwrap();
                let native = inst.native_point(&x);
                let g2: Vec<C64> = term_derivs(&inst, &native).unwrap().iter().map(|t| t[2]).collect();
                let closed = closed_form_condition(&inst, &g2).unwrap().expect("closed form");
                worst = worst.max((closed - generic).norm() / closed.norm().max(generic.norm()).max(1.0));
                ok &= rel_close(closed, generic, 1e-8);
            }
        }
        parts.push(format!("{id}: worst {worst:.2e}"));
    }
    outcome(ok, parts.join("; "))
}

fn criterion_reality() -> Outcome {
    use ClassId::*;
    let mut worst = 0.0f64;
    for (ci, id) in [CmaSq, HcmaI, HcmaII, HcmaIII].into_iter().enumerate() {
        for d in 0..20 {
            let mut rng = substream(SEED + 4, (ci * 1000 + d) as u64);
            let inst = draw(id, &mut rng, d % 3);
            for _ in 0..100 {
                worst = worst.max(inst.ansatz.reality_defect(random_base(&mut rng)).unwrap());
            }
        }
    }
    outcome(worst < 1e-12, format!("max |Im u| {worst:.2e}"))
}

fn flagged(id: ClassId, edits: &[(&str, C64)], seed: u64) -> (bool, Vec<String>) {
    let mut rng = substream(SEED + 5, seed);
    let mut p = sample_float(id, 4, &mut rng).unwrap();
    for (k, v) in edits {
        p.insert(k.to_string(), *v);
    }
    let inst = match instantiate_unchecked(id, &ClassParams::new(p), &g_family(0)) {
        Ok(i) => i,
        // refused outright: the vanishing factor sits in a denominator
        Err(e) => return (true, vec![e.to_string()]),
    };
    let mut all = vec![];
    let mut any = false;
    for x in points(&mut rng, 10) {
        let r = noninvariance_verdict(&inst, &x).unwrap();
        any |= !r.satisfied;
        all.extend(r.vanishing);
    }
    all.sort();
    all.dedup();
    (any, all)
}

fn criterion_degeneracy() -> Outcome {
    let mut ok = true;
    let mut parts = vec![];
    let cases: [(&str, ClassId, Vec<(&str, C64)>); 4] = [
        ("hcma-i d1=d2", ClassId::HcmaI, vec![("d1", c(0.6, 0.)), ("d2", c(0.6, 0.))]),
        ("hcma-iii B3=0, B4<0", ClassId::HcmaIII, vec![("B3", c(0., 0.)), ("B4", c(-0.5, 0.))]),
        ("hcma-iii B3=0, B4>0", ClassId::HcmaIII, vec![("B3", c(0., 0.)), ("B4", c(0.5, 0.))]),
        ("hcma-iii C2=0", ClassId::HcmaIII, vec![("C2", c(0., 0.))]),
    ];
    for (i, (label, id, edits)) in cases.iter().enumerate() {
        let (f, names) = flagged(*id, edits, i as u64);
        ok &= f && !names.is_empty();
        parts.push(format!("{label}: {} [{}]", if f { "flagged" } else { "missed" }, names.join(", ")));
    }
    let mut generic_ok = 0;
    for s in 0..40 {
        let id = if s % 2 == 0 { ClassId::HcmaI } else { ClassId::HcmaIII };
        if !flagged(id, &[], 100 + s).0 {
            generic_ok += 1;
        }
    }
    ok &= generic_ok == 40;
    parts.push(format!("generic draws passing {generic_ok}/40"));
    outcome(ok, parts.join("; "))
}

/// The transformed heavenly line element written out once more, term by
/// term, with the Hessian indexed by coordinate letter.
fn heavenly_leg_by_hand(j: &Jet4, d: &Point) -> C64 {
    let idx = |ch: char| match ch {
        'x' => 0,
        'r' => 1,
        't' => 2,
        _ => 3,
    };
    let th = |a: char, b: char| j.h(idx(a), idx(b));
    let dd = |a: char| d[idx(a)];
    let one_form = |a: char| th(a, 't') * dd('t') + th(a, 'r') * dd('r') + th(a, 'x') * dd('x') + th(a, 'z') * dd('z');
    let numer = th('t', 't') * one_form('t') + (th('t', 't') * th('r', 'x') - th('t', 'r') * th('t', 'x')) * dd('z');
    let denom = th('t', 't') * (th('t', 't') * th('r', 'r') - th('t', 'r').powi(2));
    numer * numer / denom - (th('t', 't') * th('x', 'x') - th('t', 'x').powi(2)) / th('t', 't') * dd('z').powi(2)
        - one_form('t') * dd('x')
        - one_form('r') * dd('z')
}

fn criterion_metrics() -> Outcome {
    let mut parts = vec![];
    let mut block = 0.0f64;
    let mut min_det = f64::INFINITY;
    for d in 0..20 {
        let mut rng = substream(SEED + 6, d);
        let inst = draw(ClassId::CmaSq, &mut rng, (d % 3) as usize);
        for _ in 0..100 {
            let b = random_base(&mut rng);
            let x = [b.0, b.0.conj(), b.1, b.1.conj()];
            let j = inst.ansatz.eval_jet(&x).unwrap();
            block = block.max((kahler_block_det(&j) - c(1., 0.)).norm());
            min_det = min_det.min(metric_det(&metric_at(MetricId::Kahler, &j).unwrap()).norm());
        }
    }
    let kahler_ok = block <= 1e-9 && min_det > 0.0;
    parts.push(format!("kahler |block det - 1| {block:.2e}, min |det| {min_det:.2e}"));

    let flat = metric_det(&metric_at(MetricId::Heavenly, &Jet4::zero()).unwrap());
    let flat_ok = (flat - c(1. / 16., 0.)).norm() <= 4.0 * f64::EPSILON;
    parts.push(format!("heavenly flat det {}", flat.re));

    let mut gap = 0.0f64;
    for d in 0..20 {
        let mut rng = substream(SEED + 7, d);
        let inst = draw(ClassId::H2Equal, &mut rng, (d % 3) as usize);
        for x in points(&mut rng, 50) {
            let j = inst.ansatz.eval_jet(&x).unwrap();
            let m = metric_at(MetricId::HeavenlyLeg, &j).unwrap();
            for _ in 0..5 {
                let dx = random_direction(&mut rng);
                let reference = heavenly_leg_by_hand(&j, &dx);
                for v in [quadratic_form(&m, &dx), line_element(MetricId::HeavenlyLeg, &j, &dx).unwrap()] {
                    gap = gap.max((v - reference).norm() / reference.norm().max(1.0));
                }
            }
        }
    }
    let leg_ok = gap <= 1e-10;
    parts.push(format!("heavenly-leg transcription gap {gap:.2e}"));
    outcome(kahler_ok && flat_ok && leg_ok, parts.join("; "))
}

fn main() {
    // `cargo test` passes harness flags; listing mode must not run the suite.
    if std::env::args().any(|a| a == "--list") {
        return;
    }
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("1 solution-class residuals", criterion_residuals),
        ("2 finite-difference oracle", criterion_oracle),
        ("3 determining-system certification", criterion_certification),
        ("4 closed-form determinants", criterion_determinants),
        ("5 closed-form condition fidelity", criterion_closed_form_fidelity),
        ("6 reality on the real slice", criterion_reality),
        ("7 degeneracy detection", criterion_degeneracy),
        ("8 metric checks", criterion_metrics),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let t = Instant::now();
        let o = f();
        if !o.pass {
            failed += 1;
        }
        println!(
            "{} criterion {name}: {} ({:.1}s)",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail,
            t.elapsed().as_secs_f64()
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
