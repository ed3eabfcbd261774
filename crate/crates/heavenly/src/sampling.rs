//! Seeded parameter and point draws.
//!
//! Exact draws are small rationals so that certification stays cheap. Float
//! draws are "admissible": every arbitrary-function argument stays within a
//! fixed bound on the unit polydisk, which keeps exp and cosh tame and the
//! absolute residuals comparable across classes.

use std::collections::BTreeMap;

use num_rational::BigRational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::catalog::{constraint_check_exact, required_factors, schema, shape, ClassId, Domain, Role};
use crate::exact::{RatComplex, Scalar};
use crate::jet::Point;
use crate::{Error, Result, C64};

pub type SeededRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent stream for trial k of a run seeded with `seed`.
pub fn substream(seed: u64, k: u64) -> SeededRng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(k + 1);
    r
}

pub const MAX_EXACT_ATTEMPTS: usize = 100;
pub const MAX_FLOAT_ATTEMPTS: usize = 20_000;
/// Bound on |coefficients|_1 + |offset| of every non-square argument.
pub const ARGUMENT_BOUND: f64 = 3.0;

fn small_rational(rng: &mut impl Rng, nonzero: bool) -> BigRational {
    let lo = if nonzero { 1 } else { 0 };
    let num: i64 = rng.gen_range(lo..=9) * if rng.gen_bool(0.5) { 1 } else { -1 };
    let den: i64 = rng.gen_range(1..=9);
    BigRational::new(num.into(), den.into())
}

const PYTHAGOREAN: [(i64, i64); 6] = [(3, 4), (5, 12), (8, 15), (7, 24), (20, 21), (9, 40)];

/// Whether the class can be drawn with exact rational parameters.
pub fn supports_exact(id: ClassId) -> bool {
    !matches!(id, ClassId::RefSheftel | ClassId::RefMalykhExp)
}

fn draw_exact_once(id: ClassId, n: usize, rng: &mut impl Rng) -> BTreeMap<String, RatComplex> {
    let mut m = BTreeMap::new();
    for s in schema(id, n) {
        let v = match s.domain {
            Domain::Real => RatComplex::new(small_rational(rng, true), BigRational::from_integer(0.into())),
            Domain::Complex => RatComplex::new(small_rational(rng, true), small_rational(rng, false)),
            Domain::Sign => RatComplex::from_ints(if rng.gen_bool(0.5) { 1 } else { -1 }, 0),
        };
        m.insert(s.name, v);
    }
    if id == ClassId::HcmaIII {
        // B3^2 + B4^2 must be a rational square.
        let (p, q) = PYTHAGOREAN[rng.gen_range(0..PYTHAGOREAN.len())];
        let (p, q) = if rng.gen_bool(0.5) { (p, q) } else { (q, p) };
        let sgn = |r: &mut dyn rand::RngCore| if r.gen_bool(0.5) { 1 } else { -1 };
        let t = small_rational(rng, true);
        let b3 = RatComplex::new(t.clone() * BigRational::from_integer((sgn(rng) * p).into()), BigRational::from_integer(0.into()));
        let b4 = RatComplex::new(t * BigRational::from_integer((sgn(rng) * q).into()), BigRational::from_integer(0.into()));
        m.insert("B3".into(), b3);
        m.insert("B4".into(), b4);
    }
    m
}

fn rows_distinct<S: Scalar + PartialEq>(rows: &[[S; 4]]) -> bool {
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            // proportional rows give coinciding arguments up to scale
            let cross_zero = (0..4).all(|a| (0..4).all(|b| (rows[i][a].clone() * rows[j][b].clone() - rows[i][b].clone() * rows[j][a].clone()).is_zero()));
            if cross_zero {
                return false;
            }
        }
    }
    true
}

/// Rational parameters with |num|, |den| <= 9 satisfying every side
/// condition; resamples up to [`MAX_EXACT_ATTEMPTS`] times.
pub fn sample_exact(id: ClassId, n: usize, rng: &mut impl Rng) -> Result<BTreeMap<String, RatComplex>> {
    if !supports_exact(id) {
        return Err(Error::NotExact(format!("{id} has no rational parameterization")));
    }
    for _ in 0..MAX_EXACT_ATTEMPTS {
        let m = draw_exact_once(id, n, rng);
        let Ok(sh) = shape(id, n, &m) else { continue };
        let rows: Vec<[RatComplex; 4]> = sh.terms.iter().map(|t| t.coeffs.clone()).collect();
        if !rows_distinct(&rows) {
            continue;
        }
        if matches!(constraint_check_exact(id, n, &m), Ok(v) if v.is_empty()) {
            return Ok(m);
        }
    }
    Err(Error::Domain(format!("no admissible rational draw for {id} in {MAX_EXACT_ATTEMPTS} attempts")))
}

fn signed_magnitude(rng: &mut impl Rng, lo: f64, hi: f64) -> f64 {
    let v = rng.gen_range(lo..hi);
    if rng.gen_bool(0.5) {
        v
    } else {
        -v
    }
}

fn draw_float_once(id: ClassId, n: usize, rng: &mut impl Rng) -> BTreeMap<String, C64> {
    let mut m = BTreeMap::new();
    for s in schema(id, n) {
        let offset = s.name.starts_with("beta");
        let v = match s.domain {
            Domain::Sign => C64::new(if rng.gen_bool(0.5) { 1.0 } else { -1.0 }, 0.0),
            _ if s.name.starts_with("phi") => C64::new(rng.gen_range(0.0..std::f64::consts::TAU), 0.0),
            Domain::Real if offset => C64::new(rng.gen_range(-0.5..0.5), 0.0),
            Domain::Complex if offset => C64::from_polar(rng.gen_range(0.0..0.5), rng.gen_range(0.0..std::f64::consts::TAU)),
            Domain::Real => C64::new(signed_magnitude(rng, 0.1, 1.0), 0.0),
            Domain::Complex => C64::from_polar(rng.gen_range(0.1..1.0), rng.gen_range(0.0..std::f64::consts::TAU)),
        };
        m.insert(s.name, v);
    }
    m
}

/// True when every non-square argument stays within [`ARGUMENT_BOUND`] on
/// the unit polydisk.
pub fn arguments_bounded(id: ClassId, n: usize, values: &BTreeMap<String, C64>) -> bool {
    let Ok(sh) = shape(id, n, values) else { return false };
    sh.terms.iter().all(|t| {
        t.role == Role::Square || t.coeffs.iter().map(|c| c.norm()).sum::<f64>() + t.offset.norm() <= ARGUMENT_BOUND
    })
}

/// Admissible double-precision parameters: side conditions hold and all
/// arguments are bounded.
pub fn sample_float(id: ClassId, n: usize, rng: &mut impl Rng) -> Result<BTreeMap<String, C64>> {
    for _ in 0..MAX_FLOAT_ATTEMPTS {
        let m = draw_float_once(id, n, rng);
        if !arguments_bounded(id, n, &m) {
            continue;
        }
        let Ok(f) = required_factors(id, n, &m) else { continue };
        // stay well away from the degenerate set
        if f.iter().all(|f| f.value.norm() > 1e-3 * (1.0 + f.scale)) {
            return Ok(m);
        }
    }
    Err(Error::Domain(format!("no admissible draw for {id} in {MAX_FLOAT_ATTEMPTS} attempts")))
}

/// Fills parameters missing from `given` with admissible random values.
/// Given values are kept as they are.
pub fn fill_missing(id: ClassId, n: usize, given: &BTreeMap<String, C64>, rng: &mut impl Rng) -> Result<BTreeMap<String, C64>> {
    let names: Vec<String> = schema(id, n).into_iter().map(|s| s.name).collect();
    if names.iter().all(|k| given.contains_key(k)) {
        return Ok(given.clone());
    }
    let mut last = None;
    for _ in 0..MAX_FLOAT_ATTEMPTS {
        let mut m = draw_float_once(id, n, rng);
        for (k, v) in given {
            m.insert(k.clone(), *v);
        }
        if arguments_bounded(id, n, &m) {
            return Ok(m);
        }
        last = Some(m);
    }
    // Keep the user's values even if they push arguments out of bounds.
    last.ok_or_else(|| Error::Domain("could not complete parameters".into()))
}

/// Uniform point of the unit polydisk |x_mu| <= 1.
pub fn random_point(rng: &mut impl Rng) -> Point {
    std::array::from_fn(|_| {
        let r = rng.gen::<f64>().sqrt();
        C64::from_polar(r, rng.gen_range(0.0..std::f64::consts::TAU))
    })
}

/// Base point (z1, z2) for the real slice, inside the unit polydisk.
pub fn random_base(rng: &mut impl Rng) -> (C64, C64) {
    let p = random_point(rng);
    (p[0], p[1])
}

/// A random direction with entries in the unit square, for quadratic-form
/// probes.
pub fn random_direction(rng: &mut impl Rng) -> Point {
    std::array::from_fn(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
}
