//! Determining algebraic systems: substitute the n-term ansatz into an
//! equation, collect the coefficient of every product of second
//! derivatives, and certify coefficient relations against the result.

pub mod poly;

use std::collections::BTreeMap;

use rand::Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::ansatz::{check_kinds, TermKind};
use crate::catalog::{coeff_symbol, instantiate_exact, shape, ClassId, Role};
use crate::exact::RatComplex;
use crate::pde::{builtin_pde, builtin_system, EquationId, HessIdx, PdeSpec, SystemId};
use crate::sampling::{sample_exact, sample_float, substream, supports_exact};
use crate::scalar::ScalarFn;
use crate::{Error, Result, C64};

pub use poly::{Monomial, Poly};

/// What a determining system was generated from.
#[derive(Debug, Clone, PartialEq)]
pub enum Target {
    Equation(EquationId),
    System(SystemId),
    /// An ad hoc equation, for instance a sum of two registered ones.
    Spec(PdeSpec),
}

impl Target {
    pub fn name(&self) -> String {
        match self {
            Target::Equation(e) => e.name().to_string(),
            Target::System(s) => s.name().to_string(),
            Target::Spec(s) => s.name().to_string(),
        }
    }

    fn specs(&self) -> Vec<PdeSpec> {
        match self {
            Target::Equation(e) => vec![builtin_pde(e)],
            Target::System(s) => builtin_system(*s).equations().to_vec(),
            Target::Spec(s) => vec![s.clone()],
        }
    }
}

/// Conditions collected from one equation. Term indices are one-based.
#[derive(Debug, Clone, PartialEq)]
pub struct Block {
    pub equation: String,
    /// Coefficient of g_i'' g_j'' for arbitrary terms i <= j.
    pub quad: BTreeMap<(usize, usize), Poly>,
    /// Coefficient of g_i'' for arbitrary term i.
    pub lin: BTreeMap<usize, Poly>,
    /// Everything free of arbitrary functions.
    pub constant: Poly,
}

impl Block {
    fn nonzero_keys(&self) -> (Vec<(usize, usize)>, Vec<usize>) {
        (
            self.quad.iter().filter(|(_, p)| !p.is_zero()).map(|(k, _)| *k).collect(),
            self.lin.iter().filter(|(_, p)| !p.is_zero()).map(|(k, _)| *k).collect(),
        )
    }

    /// Equality treating absent conditions as zero.
    pub fn same_conditions(&self, o: &Block) -> bool {
        self.nonzero_keys() == o.nonzero_keys()
            && self.quad.iter().all(|(k, p)| p.is_zero() || o.quad.get(k) == Some(p))
            && self.lin.iter().all(|(k, p)| p.is_zero() || o.lin.get(k) == Some(p))
            && self.constant == o.constant
    }

    /// Every condition of the block, labelled.
    pub fn conditions(&self) -> Vec<(String, &Poly)> {
        let mut v: Vec<(String, &Poly)> = vec![];
        for ((i, j), p) in &self.quad {
            v.push((format!("{}: g{i}''g{j}''", self.equation), p));
        }
        for (i, p) in &self.lin {
            v.push((format!("{}: g{i}''", self.equation), p));
        }
        v.push((format!("{}: constant", self.equation), &self.constant));
        v
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DeterminingSystem {
    pub target: Target,
    pub n: usize,
    pub kinds: Vec<TermKind>,
    pub blocks: Vec<Block>,
}

/// Symbol of coefficient mu of term i (zero-based).
fn sym(n: usize, i: usize, mu: usize) -> String {
    coeff_symbol(n, i, mu)
}

/// c_{i a} c_{i b}: the Hessian entry (a, b) of term i per unit g''.
fn outer(n: usize, i: usize, h: HessIdx) -> Poly {
    &Poly::var(&sym(n, i, h.mu())) * &Poly::var(&sym(n, i, h.nu()))
}

fn generate_block(spec: &PdeSpec, n: usize, kinds: &[TermKind]) -> Block {
    let free: Vec<usize> = (0..n).filter(|&i| !kinds[i].is_square()).collect();
    let squares: Vec<usize> = (0..n).filter(|&i| kinds[i].is_square()).collect();
    let two = RatComplex::from_ints(2, 0);
    // Hessian of the square terms: 2 c (x) c each, a fixed polynomial.
    let sq_hess = |h: HessIdx| {
        squares.iter().fold(Poly::zero(), |acc, &s| &acc + &outer(n, s, h).scale(&two))
    };

    let mut quad = BTreeMap::new();
    let mut lin: BTreeMap<usize, Poly> = free.iter().map(|&i| (i + 1, Poly::zero())).collect();
    let mut constant = Poly::constant(spec.constant().clone());

    if !spec.is_linear() {
        for (ii, &i) in free.iter().enumerate() {
            for &j in &free[ii..] {
                let mut p = Poly::zero();
                for (a, b, k) in spec.quad() {
                    let t = if i == j {
                        &outer(n, i, *a) * &outer(n, i, *b)
                    } else {
                        &(&outer(n, i, *a) * &outer(n, j, *b)) + &(&outer(n, j, *a) * &outer(n, i, *b))
                    };
                    p = &p + &t.scale(k);
                }
                quad.insert((i + 1, j + 1), p);
            }
        }
    }
    for (a, b, k) in spec.quad() {
        let (sa, sb) = (sq_hess(*a), sq_hess(*b));
        for &i in &free {
            let t = &(&outer(n, i, *a) * &sb) + &(&sa * &outer(n, i, *b));
            let e = lin.get_mut(&(i + 1)).expect("free term");
            *e = &*e + &t.scale(k);
        }
        constant = &constant + &(&sa * &sb).scale(k);
    }
    for (a, k) in spec.lin() {
        for &i in &free {
            let e = lin.get_mut(&(i + 1)).expect("free term");
            *e = &*e + &outer(n, i, *a).scale(k);
        }
        constant = &constant + &sq_hess(*a).scale(k);
    }
    Block { equation: spec.name().to_string(), quad, lin, constant }
}

/// Builds the determining system of an n-term ansatz with the given kinds.
pub fn generate(target: &Target, n: usize, kinds: &[TermKind]) -> Result<DeterminingSystem> {
    if n == 0 || kinds.len() != n {
        return Err(Error::Arity(format!("{n} terms need {n} kinds, got {}", kinds.len())));
    }
    check_kinds(&kinds.iter().collect::<Vec<_>>())?;
    let blocks = target.specs().iter().map(|s| generate_block(s, n, kinds)).collect();
    Ok(DeterminingSystem { target: target.clone(), n, kinds: kinds.to_vec(), blocks })
}

impl DeterminingSystem {
    /// All conditions in block order.
    pub fn conditions(&self) -> Vec<(String, &Poly)> {
        self.blocks.iter().flat_map(|b| b.conditions()).collect()
    }

    /// Conditions that are not identically zero.
    pub fn nonzero_conditions(&self) -> Vec<(String, &Poly)> {
        self.conditions().into_iter().filter(|(_, p)| !p.is_zero()).collect()
    }

    /// Polynomial-wise sum of two systems over the same ansatz.
    pub fn add(&self, o: &DeterminingSystem) -> Result<DeterminingSystem> {
        if self.n != o.n || self.kinds != o.kinds || self.blocks.len() != o.blocks.len() {
            return Err(Error::Arity("systems over different ansatze".into()));
        }
        let blocks = self
            .blocks
            .iter()
            .zip(&o.blocks)
            .map(|(a, b)| {
                let mut quad = a.quad.clone();
                for (k, p) in &b.quad {
                    let e = quad.entry(*k).or_default();
                    *e = &*e + p;
                }
                let mut lin = a.lin.clone();
                for (k, p) in &b.lin {
                    let e = lin.entry(*k).or_default();
                    *e = &*e + p;
                }
                Block {
                    equation: format!("{}+{}", a.equation, b.equation),
                    quad,
                    lin,
                    constant: &a.constant + &b.constant,
                }
            })
            .collect();
        Ok(DeterminingSystem { target: self.target.clone(), n: self.n, kinds: self.kinds.clone(), blocks })
    }

    /// JSON export. Identically zero conditions are kept for products of
    /// arbitrary functions and dropped for the constant part.
    pub fn to_json(&self) -> Value {
        let mut conds = vec![];
        for b in &self.blocks {
            for ((i, j), p) in &b.quad {
                conds.push(json!({"equation": b.equation, "kind": "quad", "terms": [i, j], "poly": p.to_json()}));
            }
            for (i, p) in &b.lin {
                conds.push(json!({"equation": b.equation, "kind": "lin", "terms": [i], "poly": p.to_json()}));
            }
            if !b.constant.is_zero() {
                conds.push(json!({"equation": b.equation, "kind": "const", "terms": [], "poly": b.constant.to_json()}));
            }
        }
        json!({
            "target": self.target.name(),
            "n": self.n,
            "kinds": self.kinds.iter().map(|k| k.to_string()).collect::<Vec<_>>(),
            "conditions": conds,
        })
    }
}

/// Term structure of a class, independent of its parameter values.
pub fn class_kinds(id: ClassId, n: usize) -> Result<Vec<TermKind>> {
    let params = sample_float(id, n, &mut substream(0, 0))?;
    let sh = shape(id, n, &params)?;
    Ok(sh
        .terms
        .iter()
        .map(|t| match t.role {
            Role::Square => TermKind::Square,
            Role::Conj(k) => TermKind::ConjugateOf(k),
            Role::G { .. } | Role::Exp => TermKind::ArbitraryG(ScalarFn::identity()),
        })
        .collect())
}

/// The equation or system a class is certified against by default.
pub fn default_target(id: ClassId) -> Target {
    match id.system() {
        Some(s) => Target::System(s),
        None => Target::Equation(match id {
            ClassId::CmaSq => EquationId::Cma,
            ClassId::AsymmClass => "asymm".parse().expect("registered"),
            ClassId::EvolutionClass => "evolution2".parse().expect("registered"),
            _ => EquationId::HcmaLegendre,
        }),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TrialResult {
    pub trial: usize,
    /// Conditions that did not vanish.
    pub nonzero: Vec<String>,
    pub max_abs: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CertReport {
    pub class: String,
    pub target: String,
    pub exact: bool,
    pub mutated: bool,
    pub trials: Vec<TrialResult>,
}

impl CertReport {
    pub fn zero_trials(&self) -> usize {
        self.trials.iter().filter(|t| t.nonzero.is_empty()).count()
    }

    pub fn failing_trials(&self) -> usize {
        self.trials.len() - self.zero_trials()
    }

    pub fn all_zero(&self) -> bool {
        self.failing_trials() == 0
    }

    pub fn max_abs(&self) -> f64 {
        self.trials.iter().map(|t| t.max_abs).fold(0.0, f64::max)
    }
}

/// Float residual bound for certification without exact arithmetic.
pub const FLOAT_CERT_TOL: f64 = 1e-12;

/// Perturbation applied to coefficient 4 of term 1 by mutant runs.
pub fn mutant_factor() -> RatComplex {
    RatComplex::from_fracs(8, 7, 0, 1)
}

/// For equations whose parameters depend on the class draw, the system is
/// rebuilt with the drawn parameters.
fn system_for_trial(ds: &DeterminingSystem, eq: &EquationId) -> Result<Option<DeterminingSystem>> {
    match &ds.target {
        Target::Equation(e) if e.name() == eq.name() && e != eq => {
            Ok(Some(generate(&Target::Equation(eq.clone()), ds.n, &ds.kinds)?))
        }
        _ => Ok(None),
    }
}

/// Conditions decouple term by term: no products of arbitrary functions,
/// no squares, no constant part.
fn decoupled(ds: &DeterminingSystem) -> bool {
    ds.blocks.iter().all(|b| b.quad.is_empty() && b.constant.is_zero())
        && ds.kinds.iter().all(|k| matches!(k, TermKind::ArbitraryG(_)))
}

/// Length parameter used to draw the class for a system with `ds.n` terms.
fn class_n(ds: &DeterminingSystem, id: ClassId) -> usize {
    let n = if id == ClassId::RefSheftel { ds.n / 2 } else { ds.n };
    if id.n_range().contains(&n) || !decoupled(ds) {
        n
    } else {
        id.default_n()
    }
}

/// A decoupled system carries the same per-term conditions for any term
/// count, so it is rebuilt to match the class's own number of terms.
fn widen(ds: &DeterminingSystem, terms: usize) -> Result<Option<DeterminingSystem>> {
    if terms == ds.n || !decoupled(ds) {
        return Ok(None);
    }
    Ok(Some(generate(&ds.target, terms, &vec![ds.kinds[0].clone(); terms])?))
}

/// Substitutes the class relations at `trials` random draws. Exact rational
/// draws are used where the class allows them; otherwise doubles with the
/// residual bound [`FLOAT_CERT_TOL`]. With `mutate`, coefficient 4 of
/// term 1 is multiplied by 8/7 before substitution.
pub fn certify(ds: &DeterminingSystem, id: ClassId, trials: usize, seed: u64, mutate: bool) -> Result<CertReport> {
    let exact = supports_exact(id);
    let mut out = vec![];
    for t in 0..trials {
        let mut rng = substream(seed, t as u64);
        let res = if exact {
            certify_exact_trial(ds, id, &mut rng, mutate)?
        } else {
            certify_float_trial(ds, id, &mut rng, mutate)?
        };
        out.push(TrialResult { trial: t, nonzero: res.0, max_abs: res.1 });
    }
    Ok(CertReport { class: id.name().into(), target: ds.target.name(), exact, mutated: mutate, trials: out })
}

fn row_binding<T: Clone>(n: usize, rows: &[[T; 4]]) -> BTreeMap<String, T> {
    let mut m = BTreeMap::new();
    for (j, r) in rows.iter().enumerate() {
        for (mu, v) in r.iter().enumerate() {
            m.insert(sym(n, j, mu), v.clone());
        }
    }
    m
}

fn check_arity(ds: &DeterminingSystem, id: ClassId, rows: usize) -> Result<()> {
    if rows != ds.n {
        return Err(Error::Arity(format!("{id} has {rows} terms, the system was built for {}", ds.n)));
    }
    Ok(())
}

fn certify_exact_trial(ds: &DeterminingSystem, id: ClassId, rng: &mut impl Rng, mutate: bool) -> Result<(Vec<String>, f64)> {
    let n = class_n(ds, id);
    let params = sample_exact(id, n, rng)?;
    let inst = instantiate_exact(id, n, &params)?;
    let widened = widen(ds, inst.rows.len())?;
    let ds = widened.as_ref().unwrap_or(ds);
    check_arity(ds, id, inst.rows.len())?;
    let mut rows = inst.rows.clone();
    if mutate {
        rows[0][3] = &rows[0][3] * &mutant_factor();
    }
    let regenerated = system_for_trial(ds, &inst.equation)?;
    let ds = regenerated.as_ref().unwrap_or(ds);
    let bind = row_binding(ds.n, &rows);
    let mut nonzero = vec![];
    let mut max_abs = 0.0f64;
    for (name, p) in ds.conditions() {
        let v = p.eval_exact(&|s| bind.get(s).cloned())?;
        if !v.is_zero() {
            max_abs = max_abs.max(v.to_c64().norm());
            nonzero.push(name);
        }
    }
    Ok((nonzero, max_abs))
}

fn certify_float_trial(ds: &DeterminingSystem, id: ClassId, rng: &mut impl Rng, mutate: bool) -> Result<(Vec<String>, f64)> {
    let n = class_n(ds, id);
    let params = sample_float(id, n, rng)?;
    let sh = shape(id, n, &params)?;
    let mut rows: Vec<[C64; 4]> = sh.terms.iter().map(|t| t.coeffs).collect();
    let widened = widen(ds, rows.len())?;
    let ds = widened.as_ref().unwrap_or(ds);
    check_arity(ds, id, rows.len())?;
    if mutate {
        rows[0][3] *= mutant_factor().to_c64();
    }
    let bind = row_binding(ds.n, &rows);
    let mut nonzero = vec![];
    let mut max_abs = 0.0f64;
    for (name, p) in ds.conditions() {
        let (v, _) = p.eval_c64(&|s| bind.get(s).copied())?;
        max_abs = max_abs.max(v.norm());
        if v.norm() >= FLOAT_CERT_TOL {
            nonzero.push(name);
        }
    }
    Ok((nonzero, max_abs))
}
