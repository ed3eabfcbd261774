//! Solution classes: free parameters in, full ansatz out.
//!
//! The coefficient relations are written once over [`Scalar`], so the same
//! code builds double-precision instances for residual checks and exact
//! rational coefficient rows for certification.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::ansatz::{Ansatz, Term, TermKind};
use crate::conditions::{eval_table, tables};
use crate::exact::{RatComplex, Scalar};
use crate::jet::{LinearForm, Point};
use crate::pde::{EquationId, SystemId};
use crate::scalar::ScalarFn;
use crate::{Error, Result, Violation, C64};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassId {
    CmaSq,
    HcmaI,
    HcmaII,
    HcmaIII,
    H2Equal,
    H2HighI,
    H2HighII,
    H2SeriesEqual,
    H2SeriesHighI,
    H2SeriesHighII,
    MixedClass,
    MixedSeries,
    AsymmClass,
    EvolutionClass,
    RefSheftel,
    RefMalykhExp,
}

use ClassId::*;

impl ClassId {
    pub const ALL: [ClassId; 16] = [
        CmaSq,
        HcmaI,
        HcmaII,
        HcmaIII,
        H2Equal,
        H2HighI,
        H2HighII,
        H2SeriesEqual,
        H2SeriesHighI,
        H2SeriesHighII,
        MixedClass,
        MixedSeries,
        AsymmClass,
        EvolutionClass,
        RefSheftel,
        RefMalykhExp,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CmaSq => "cma-sq",
            HcmaI => "hcma-i",
            HcmaII => "hcma-ii",
            HcmaIII => "hcma-iii",
            H2Equal => "h2-equal",
            H2HighI => "h2-high-i",
            H2HighII => "h2-high-ii",
            H2SeriesEqual => "h2-series-equal",
            H2SeriesHighI => "h2-series-high-i",
            H2SeriesHighII => "h2-series-high-ii",
            MixedClass => "mixed-class",
            MixedSeries => "mixed-series",
            AsymmClass => "asymm-class",
            EvolutionClass => "evolution-class",
            RefSheftel => "ref-sheftel",
            RefMalykhExp => "ref-malykh-exp",
        }
    }

    pub fn is_series(&self) -> bool {
        matches!(self, H2SeriesEqual | H2SeriesHighI | H2SeriesHighII | MixedSeries)
    }

    /// Classes whose size is configurable, with their default.
    pub fn default_n(&self) -> usize {
        match self {
            _ if self.is_series() => 6,
            RefSheftel => 2,
            _ => 4,
        }
    }

    pub fn n_range(&self) -> std::ops::RangeInclusive<usize> {
        match self {
            _ if self.is_series() => 4..=16,
            RefSheftel => 1..=8,
            RefMalykhExp => 1..=16,
            _ => 4..=4,
        }
    }

    /// Classes whose solutions are real on z-bar = conj(z).
    pub fn has_real_slice(&self) -> bool {
        matches!(self, CmaSq | HcmaI | HcmaII | HcmaIII | RefMalykhExp)
    }

    /// Reference classes use fixed exponentials rather than arbitrary g.
    pub fn is_reference(&self) -> bool {
        matches!(self, RefSheftel | RefMalykhExp)
    }

    pub fn system(&self) -> Option<SystemId> {
        match self {
            H2Equal | H2SeriesEqual => Some(SystemId::EqSymm),
            H2HighI | H2HighII | H2SeriesHighI | H2SeriesHighII => Some(SystemId::HighSymm),
            MixedClass | MixedSeries | RefSheftel => Some(SystemId::MixedLin),
            _ => None,
        }
    }

    /// Coordinate names the coefficient rows refer to.
    pub fn native_coords(&self) -> [&'static str; 4] {
        match self {
            CmaSq => ["z1", "z1b", "z2", "z2b"],
            HcmaI | HcmaII | HcmaIII | RefMalykhExp => ["p", "pb", "z2", "z2b"],
            MixedClass | MixedSeries | RefSheftel => ["eta", "xi", "q", "y"],
            AsymmClass | EvolutionClass => ["x", "y", "z", "t"],
            _ => ["x", "r", "t", "z"],
        }
    }

    /// dx/dy from the bound equation's coordinates y to the native ones x.
    pub fn equation_transform(&self) -> Option<[[C64; 4]; 4]> {
        match self {
            MixedClass | MixedSeries | RefSheftel => {
                let (o, z) = (C64::new(1.0, 0.0), C64::new(0.0, 0.0));
                // eta = p + t, xi = p - t, q = q, y = y with y-order (p, q, t, y)
                Some([[o, z, o, z], [o, z, -o, z], [z, o, z, z], [z, z, z, o]])
            }
            _ => None,
        }
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ClassId::ALL
            .iter()
            .find(|c| c.name() == s)
            .copied()
            .ok_or_else(|| Error::UnknownClass(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Domain {
    Real,
    Complex,
    /// Exactly +1 or -1.
    Sign,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParamSpec {
    pub name: String,
    pub domain: Domain,
    pub nonzero: bool,
}

fn ps(name: impl Into<String>, domain: Domain, nonzero: bool) -> ParamSpec {
    ParamSpec { name: name.into(), domain, nonzero }
}

/// Free parameters of a class of size n.
pub fn schema(id: ClassId, n: usize) -> Vec<ParamSpec> {
    use Domain::*;
    let betas = |v: &mut Vec<ParamSpec>, dom: [Domain; 5]| {
        for (k, d) in dom.iter().enumerate() {
            v.push(ps(format!("beta{}", k + 1), *d, false));
        }
    };
    let rows = |v: &mut Vec<ParamSpec>, idx: [usize; 2], nz: [bool; 2]| {
        for r in ["a", "b", "c", "d"] {
            for (i, z) in idx.iter().zip(nz) {
                v.push(ps(format!("{r}{i}"), Complex, z));
            }
        }
    };
    let series = |v: &mut Vec<ParamSpec>, names: [&str; 2], nz: [bool; 2]| {
        for j in 1..=n {
            for (s, z) in names.iter().zip(nz) {
                v.push(ps(format!("{s}{j}"), Complex, z));
            }
            v.push(ps(format!("beta{j}"), Complex, false));
        }
    };
    let mut v = vec![];
    match id {
        CmaSq => {
            v.push(ps("a2", Complex, true));
            v.push(ps("d3", Complex, false));
            betas(&mut v, [Real, Real, Real, Complex, Complex]);
            v.pop(); // beta5 is the conjugate of beta4
        }
        HcmaI => {
            for (s, z) in [("A", false), ("a2", false), ("d1", true), ("d2", true), ("d4", false)] {
                v.push(ps(s, Real, z));
            }
            betas(&mut v, [Real, Real, Complex, Real, Real]);
            v.pop();
        }
        HcmaII => {
            v.push(ps("a4", Complex, false));
            v.push(ps("b4", Complex, false));
            v.push(ps("d3", Real, false));
            v.push(ps("d4", Real, false));
            betas(&mut v, [Real, Real, Real, Complex, Complex]);
            v.pop();
        }
        HcmaIII => {
            for s in ["A2", "B3", "B4", "C2", "H2"] {
                v.push(ps(s, Real, false));
            }
            betas(&mut v, [Real; 5]);
        }
        H2Equal | H2HighII => {
            rows(&mut v, [2, 3], [false, true]);
            betas(&mut v, [Complex; 5]);
        }
        H2HighI => {
            rows(&mut v, [1, 2], [true, true]);
            betas(&mut v, [Complex; 5]);
        }
        MixedClass => {
            rows(&mut v, [1, 2], [false, true]);
            betas(&mut v, [Complex; 5]);
        }
        H2SeriesEqual | H2SeriesHighII => series(&mut v, ["gamma", "zeta"], [false, true]),
        H2SeriesHighI => series(&mut v, ["alpha", "gamma"], [true, true]),
        MixedSeries => series(&mut v, ["alpha", "gamma"], [false, true]),
        AsymmClass | EvolutionClass => {
            v.push(ps("A", Complex, true));
            if id == AsymmClass {
                v.push(ps("B", Complex, false));
            }
            for (s, z) in [
                ("a1", false),
                ("a3", true),
                ("b2", false),
                ("b3", false),
                ("c1", true),
                ("c2", false),
                ("c3", false),
                ("c4", true),
                ("d2", false),
                ("d3", false),
            ] {
                v.push(ps(s, Complex, z));
            }
            betas(&mut v, [Complex; 5]);
        }
        RefSheftel => {
            for j in 1..=n {
                v.push(ps(format!("A{j}"), Real, true));
                v.push(ps(format!("B{j}"), Real, false));
                v.push(ps(format!("C{j}"), Real, false));
                v.push(ps(format!("H{j}"), Real, false));
                v.push(ps(format!("sign{j}"), Sign, true));
            }
        }
        RefMalykhExp => {
            v.push(ps("a", Complex, true));
            v.push(ps("b", Complex, false));
            for j in 1..=n {
                v.push(ps(format!("alpha{j}"), Real, true));
                v.push(ps(format!("phi{j}"), Real, false));
            }
        }
    }
    v
}

/// Name of coefficient mu of term j (both zero-based) in an n-term ansatz.
pub fn coeff_symbol(n: usize, j: usize, mu: usize) -> String {
    if n <= 4 {
        format!("{}{}", ["a", "b", "c", "d"][j], mu + 1)
    } else {
        format!("{}{}", ["alpha", "gamma", "zeta", "lambda"][mu], j + 1)
    }
}

/// Structural role of a term in a class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    /// Arbitrary function; `real` when the class requires g to be real-valued.
    G { real: bool },
    Square,
    /// Partner of arbitrary term k.
    Conj(usize),
    /// Fixed exponential exp(s) of a reference class.
    Exp,
}

#[derive(Debug, Clone)]
pub struct TermShape<S> {
    pub coeffs: [S; 4],
    pub offset: S,
    pub role: Role,
}

/// Everything a class determines from its free parameters.
#[derive(Debug, Clone)]
pub struct Shape<S> {
    pub beta1: S,
    pub terms: Vec<TermShape<S>>,
    /// Parameters of the bound equation (A, B, C of the asymmetric family).
    pub eq_params: Vec<(&'static str, S)>,
}

struct P<'a, S> {
    map: &'a BTreeMap<String, S>,
}

impl<S: Scalar> P<'_, S> {
    fn get(&self, k: &str) -> Result<S> {
        self.map.get(k).cloned().ok_or_else(|| Error::Domain(format!("missing parameter `{k}`")))
    }
}

fn div<S: Scalar>(a: S, b: S, what: &str) -> Result<S> {
    if b.is_zero() {
        Err(Error::Domain(format!("zero denominator: {what} = 0")))
    } else {
        Ok(a / b)
    }
}

fn k<S: Scalar>(n: i64) -> S {
    S::from_i64(n)
}

fn term<S>(coeffs: [S; 4], offset: S, role: Role) -> TermShape<S> {
    TermShape { coeffs, offset, role }
}

/// Row relations shared by the four-term and series classes.
fn h2_equal_row<S: Scalar>(g: S, z: S, what: &str) -> Result<[S; 4]> {
    let s = g.clone() + z.clone();
    Ok([
        div(g.clone() * s.clone(), z.clone(), what)?,
        g.clone(),
        z.clone(),
        -div(g * s.pow(2), z.pow(2), what)?,
    ])
}

fn h2_high_i_row<S: Scalar>(a: S, g: S, wa: &str, wg: &str) -> Result<[S; 4]> {
    Ok([a.clone(), g.clone(), div(g.pow(2), a.clone(), wa)?, -div(a.pow(2), g, wg)?])
}

fn h2_high_ii_row<S: Scalar>(g: S, z: S, what: &str) -> Result<[S; 4]> {
    Ok([div(g.pow(2), z.clone(), what)?, g.clone(), z.clone(), -div(g.pow(3), z.pow(2), what)?])
}

fn mixed_row<S: Scalar>(a: S, g: S, what: &str) -> Result<[S; 4]> {
    let zeta = div(a.pow(2) + g.pow(2), g.clone(), what)?;
    let num = a.pow(2) * g.clone() + g.pow(3) - a.pow(3) - a.clone() * g.pow(2);
    let lambda = -div(num, g.pow(2), what)?;
    Ok([a, g, zeta, lambda])
}

/// Builds the coefficient rows and offsets of a class.
pub fn shape<S: Scalar>(id: ClassId, n: usize, params: &BTreeMap<String, S>) -> Result<Shape<S>> {
    if !id.n_range().contains(&n) {
        return Err(Error::Arity(format!("{id} takes n in {:?}, got {n}", id.n_range())));
    }
    let p = P { map: params };
    let i = S::imag_unit;
    let zero = || k::<S>(0);
    let g = |real| Role::G { real };
    let beta = |j: usize| p.get(&format!("beta{j}"));
    let mut eq_params = vec![];

    let (beta1, terms) = match id {
        CmaSq => {
            let a2 = p.get("a2")?;
            let d3 = p.get("d3")?;
            let inv = div(k(1), k::<S>(2) * a2.conj(), "a2")?;
            let invc = div(k(1), k::<S>(2) * a2.clone(), "a2")?;
            let b4 = beta(4)?;
            let t = vec![
                term([a2.conj(), a2.clone(), zero(), zero()], beta(2)?, Role::Square),
                term([k(1), k(1), inv.clone(), invc.clone()], beta(3)?, Role::Square),
                term([zero(), inv, zero(), d3.conj()], b4.clone(), g(false)),
                term([invc, zero(), d3, zero()], b4.conj(), Role::Conj(2)),
            ];
            (beta(1)?, t)
        }
        HcmaI => {
            let (a, a2, d1, d2, d4) = (p.get("A")?, p.get("a2")?, p.get("d1")?, p.get("d2")?, p.get("d4")?);
            let d1d2 = d1.clone() * d2.clone();
            let k4 = -div(d1.pow(2) - d2.pow(2) - d1.clone() * d4.clone(), d2.clone(), "d2")?;
            let a3 = -div(
                a2.clone() * (d1d2.clone() - d2.pow(2) - d1.clone() * d4.clone()),
                d1d2.clone(),
                "d1*d2",
            )?;
            let c3 = -div(
                i() * a.clone() * (d1d2.clone() + d2.pow(2) + d1.clone() * d4.clone()),
                d1d2,
                "d1*d2",
            )?;
            let b3 = beta(3)?;
            let t = vec![
                term([a2.clone(), a2, a3.clone(), a3], beta(2)?, g(true)),
                term([d2.clone(), d1.clone(), d4.clone(), k4.clone()], b3.clone(), g(false)),
                term([-(i() * a.clone()), i() * a, c3.clone(), -c3], beta(4)?, g(true)),
                term([d1, d2, k4, d4], b3.conj(), Role::Conj(1)),
            ];
            (beta(1)?, t)
        }
        HcmaII => {
            let (a4, b4, d3, d4) = (p.get("a4")?, p.get("b4")?, p.get("d3")?, p.get("d4")?);
            let b = beta(4)?;
            let t = vec![
                term([zero(), zero(), a4.conj(), a4], beta(2)?, g(true)),
                term([zero(), zero(), b4.conj(), b4], beta(3)?, g(true)),
                term([zero(), d4.clone(), d4.clone(), d3.clone()], b.clone(), g(false)),
                term([d4.clone(), zero(), d3, d4], b.conj(), Role::Conj(2)),
            ];
            (beta(1)?, t)
        }
        HcmaIII => {
            let (a2, b3, b4, c2, h2) = (p.get("A2")?, p.get("B3")?, p.get("B4")?, p.get("C2")?, p.get("H2")?);
            let s = (b3.pow(2) + b4.pow(2))
                .sqrt()
                .ok_or_else(|| Error::NotExact("sqrt(B3^2+B4^2)".into()))?;
            let den = b3.clone() - b4.clone() + s.clone();
            let frac = div(b3.clone() + b4.clone() - s.clone(), den, "B3-B4+sqrt(B3^2+B4^2)")?;
            let n1 = s / k(2) * (k::<S>(1) + i() * frac);
            let t = vec![
                term(
                    [a2.clone() * (k::<S>(1) + i()), a2.clone() * (k::<S>(1) - i()), k::<S>(2) * i() * a2.clone(), -(k::<S>(2) * i() * a2)],
                    beta(2)?,
                    g(true),
                ),
                term([n1.clone(), n1.conj(), b3.clone() + i() * b4.clone(), b3 - i() * b4], beta(3)?, g(true)),
                term([i() * c2.clone(), -(i() * c2), zero(), zero()], beta(4)?, g(true)),
                term(
                    [h2.clone() * (k::<S>(-1) + i()), h2.clone() * (k::<S>(-1) - i()), k::<S>(2) * i() * h2.clone(), -(k::<S>(2) * i() * h2)],
                    beta(5)?,
                    g(true),
                ),
            ];
            (beta(1)?, t)
        }
        H2Equal | H2HighI | H2HighII | MixedClass => {
            let mut t = vec![];
            for (j, r) in ["a", "b", "c", "d"].iter().enumerate() {
                let get = |m: usize| p.get(&format!("{r}{m}"));
                let row = match id {
                    H2Equal => h2_equal_row(get(2)?, get(3)?, &format!("{r}3"))?,
                    H2HighI => h2_high_i_row(get(1)?, get(2)?, &format!("{r}1"), &format!("{r}2"))?,
                    H2HighII => h2_high_ii_row(get(2)?, get(3)?, &format!("{r}3"))?,
                    _ => mixed_row(get(1)?, get(2)?, &format!("{r}2"))?,
                };
                t.push(term(row, beta(j + 2)?, g(false)));
            }
            (beta(1)?, t)
        }
        H2SeriesEqual | H2SeriesHighI | H2SeriesHighII | MixedSeries => {
            let mut t = vec![];
            for j in 1..=n {
                let get = |s: &str| p.get(&format!("{s}{j}"));
                let row = match id {
                    H2SeriesEqual => h2_equal_row(get("gamma")?, get("zeta")?, &format!("zeta{j}"))?,
                    H2SeriesHighI => h2_high_i_row(
                        get("alpha")?,
                        get("gamma")?,
                        &format!("alpha{j}"),
                        &format!("gamma{j}"),
                    )?,
                    H2SeriesHighII => h2_high_ii_row(get("gamma")?, get("zeta")?, &format!("zeta{j}"))?,
                    _ => mixed_row(get("alpha")?, get("gamma")?, &format!("gamma{j}"))?,
                };
                t.push(term(row, beta(j)?, g(false)));
            }
            (zero(), t)
        }
        AsymmClass | EvolutionClass => {
            let a = p.get("A")?;
            let b = if id == AsymmClass { p.get("B")? } else { zero() };
            let [a1, a3, b2, b3, c1, c2, c3, c4, d2, d3] =
                ["a1", "a3", "b2", "b3", "c1", "c2", "c3", "c4", "d2", "d3"].map(|s| p.get(s));
            let (a1, a3, b2, b3, c1, c2, c3, c4, d2, d3) = (a1?, a3?, b2?, b3?, c1?, c2?, c3?, c4?, d2?, d3?);
            let kk = -(b.clone() * a3.clone() * c1.pow(2))
                + a1.clone() * c1.clone() * c3.clone() * b.clone()
                + a1.clone() * c3.clone() * c4.clone() * a.clone();
            let cc = -div(c3.clone() * (b.clone() * c1.clone() + a.clone() * c4.clone()), c1.pow(2), "c1")?;
            let den = a.clone() * a3.clone() * c1.pow(2);
            let a2 = div(a1.clone() * c2.clone() * kk.clone(), den.clone() * c4.clone(), "A*a3*c1^2*c4")?;
            let a4 = div(a1.clone() * kk, den, "A*a3*c1^2")?;
            eq_params.push(("A", a));
            if id == AsymmClass {
                eq_params.push(("B", b));
            }
            eq_params.push(("C", cc));
            let t = vec![
                term([a1, a2, a3, a4], beta(2)?, g(false)),
                term([zero(), b2, b3, zero()], beta(3)?, g(false)),
                term([c1, c2, c3, c4], beta(4)?, g(false)),
                term([zero(), d2, d3, zero()], beta(5)?, g(false)),
            ];
            (beta(1)?, t)
        }
        RefSheftel => {
            let mut t = vec![];
            for j in 1..=n {
                let get = |s: &str| p.get(&format!("{s}{j}"));
                let (a, b, c, h, sg) = (get("A")?, get("B")?, get("C")?, get("H")?, get("sign")?);
                let kk = (a.clone() * (a.clone() - b.clone()))
                    .sqrt()
                    .ok_or_else(|| Error::NotExact(format!("sqrt(A{j}(A{j}-B{j}))")))?;
                let ky = div(sg.clone() * kk.clone() * b.clone(), a.clone(), &format!("A{j}"))?;
                for sigma in [1i64, -1] {
                    let is = k::<S>(sigma) * i();
                    // amplitude of exp(+-i theta) in C cos(theta) + H sin(theta)
                    let amp = (c.clone() - k::<S>(sigma) * i() * h.clone()) / k(2);
                    if amp.is_zero() {
                        continue;
                    }
                    let off = amp.ln().ok_or_else(|| Error::NotExact("log of an amplitude".into()))?;
                    let coeffs = [
                        sg.clone() * kk.clone(),
                        is.clone() * a.clone(),
                        is.clone() * b.clone(),
                        ky.clone() - is * b.clone(),
                    ];
                    t.push(term(coeffs, off, Role::Exp));
                }
            }
            (zero(), t)
        }
        RefMalykhExp => {
            let (a, b) = (p.get("a")?, p.get("b")?);
            let modulus = (a.clone() * a.conj())
                .sqrt()
                .ok_or_else(|| Error::NotExact("|a|".into()))?;
            let mut t = vec![];
            for j in 1..=n {
                let alpha = p.get(&format!("alpha{j}"))?;
                let phi = p.get(&format!("phi{j}"))?.to_c64().re;
                let e: S = unit_phase(phi)?;
                let gam = a.conj() + modulus.clone() * e;
                let del = div(
                    i() * (gam.pow(2) - (a.conj() + i() * b.conj()) * gam.clone()),
                    a.conj(),
                    "a",
                )?;
                let off = alpha.ln().ok_or_else(|| Error::NotExact("log of an amplitude".into()))?;
                t.push(term([gam.clone(), gam.conj(), del.clone(), del.conj()], off, Role::Exp));
            }
            (zero(), t)
        }
    };
    Ok(Shape { beta1, terms, eq_params })
}

/// e^{i phi} in the scalar type; exact only for quarter turns.
fn unit_phase<S: Scalar>(phi: f64) -> Result<S> {
    let z = C64::from_polar(1.0, phi);
    let q = phi / std::f64::consts::FRAC_PI_2;
    if q.fract() == 0.0 {
        let r: [(i64, i64); 4] = [(1, 0), (0, 1), (-1, 0), (0, -1)];
        let (re, im) = r[(q as i64).rem_euclid(4) as usize];
        return Ok(S::from_i64(re) + S::from_i64(im) * S::imag_unit());
    }
    S::from_double(z).ok_or_else(|| Error::NotExact("phase angle".into()))
}

/// A factor that must not vanish, with a magnitude scale for float tests.
#[derive(Debug, Clone)]
pub struct Factor<S> {
    pub name: String,
    pub value: S,
    pub scale: f64,
}

fn factor<S: Scalar>(name: &str, value: S) -> Factor<S> {
    let scale = value.to_c64().norm();
    Factor { name: name.to_string(), value, scale }
}

fn prod<S: Scalar>(vals: &[S]) -> S {
    vals.iter().cloned().fold(S::from_i64(1), |a, b| a * b)
}

/// Lookup of `a1`..`d4` in the first four coefficient rows.
pub fn row_lookup<S: Scalar>(rows: &[[S; 4]]) -> impl Fn(&str) -> S + '_ {
    move |s: &str| {
        let b = s.as_bytes();
        let j = (b[0] - b'a') as usize;
        let m = (b[1] - b'1') as usize;
        rows[j][m].clone()
    }
}

/// The nonvanishing requirements of a class: printed side conditions and the
/// parameter-only factors of its closed-form Jacobian determinant.
pub fn required_factors<S: Scalar>(id: ClassId, n: usize, params: &BTreeMap<String, S>) -> Result<Vec<Factor<S>>> {
    let p = P { map: params };
    let sh = shape(id, n, params)?;
    let rows: Vec<[S; 4]> = sh.terms.iter().map(|t| t.coeffs.clone()).collect();
    let mut out = vec![];
    let table = |name: &str, t: &'static [crate::conditions::Mono]| {
        let (v, scale) = eval_table(t, &row_lookup(&rows));
        Factor { name: name.to_string(), value: v, scale }
    };
    match id {
        CmaSq => {
            let a2 = p.get("a2")?;
            let d3 = p.get("d3")?;
            out.push(factor("a2", a2.clone()));
            let terms = [
                k::<S>(4) * d3.clone() * d3.conj() * a2.conj().pow(2) * a2.clone(),
                -(d3.clone() * a2.conj()),
                -(k::<S>(4) * a2.conj() * a2.pow(2) * d3.clone() * d3.conj()),
                d3.conj() * a2.clone(),
            ];
            let scale = terms.iter().map(|t| t.to_c64().norm()).fold(0.0, f64::max);
            let v = terms.into_iter().fold(k(0), |a, b| a + b);
            out.push(Factor { name: "4d3conj(d3)conj(a2)^2a2-d3conj(a2)-4conj(a2)a2^2d3conj(d3)+conj(d3)a2".into(), value: v, scale });
        }
        HcmaI => {
            let (a, a2, d1, d2) = (p.get("A")?, p.get("a2")?, p.get("d1")?, p.get("d2")?);
            out.push(factor("d1*d2", d1.clone() * d2.clone()));
            out.push(factor("a2*A", a2 * a));
            let terms = [
                d1.pow(6),
                -d2.pow(6),
                -(k::<S>(3) * d1.pow(4) * d2.pow(2)),
                k::<S>(3) * d1.pow(2) * d2.pow(4),
            ];
            let scale = terms.iter().map(|t| t.to_c64().norm()).fold(0.0, f64::max);
            let v = terms.into_iter().fold(k(0), |a, b| a + b);
            out.push(Factor { name: "d1^6-d2^6-3d1^4d2^2+3d1^2d2^4".into(), value: v, scale });
        }
        HcmaII => {
            let (a4, b4, d4) = (p.get("a4")?, p.get("b4")?, p.get("d4")?);
            let x = a4.conj() * b4.clone();
            let y = a4 * b4.conj();
            let scale = x.to_c64().norm().max(y.to_c64().norm());
            out.push(Factor { name: "conj(a4)b4-a4conj(b4)".into(), value: x - y, scale });
            out.push(factor("d4", d4));
        }
        HcmaIII => {
            let (a2, b3, b4, c2, h2) = (p.get("A2")?, p.get("B3")?, p.get("B4")?, p.get("C2")?, p.get("H2")?);
            let s = (b3.pow(2) + b4.pow(2)).sqrt().ok_or_else(|| Error::NotExact("sqrt".into()))?;
            out.push(factor("B3-B4+sqrt(B3^2+B4^2)", b3.clone() - b4 + s));
            out.push(factor("A2*B3*C2*H2", prod(&[a2, b3, c2, h2])));
        }
        H2Equal | H2HighII | H2SeriesEqual | H2SeriesHighII => {
            out.push(factor("a3*b3*c3*d3", prod(&[0, 1, 2, 3].map(|j| rows[j][2].clone()))));
            let t = if matches!(id, H2Equal | H2SeriesEqual) { tables::DET_EQUAL } else { tables::DET_HIGH_II };
            out.push(table("determinant polynomial", t));
        }
        H2HighI | H2SeriesHighI => {
            let v: Vec<S> = (0..4).flat_map(|j| [rows[j][0].clone(), rows[j][1].clone()]).collect();
            out.push(factor("a1*a2*b1*b2*c1*c2*d1*d2", prod(&v)));
            out.push(table("determinant polynomial", tables::DET_HIGH_I));
        }
        MixedClass | MixedSeries => {
            out.push(factor("a2*b2*c2*d2", prod(&[0, 1, 2, 3].map(|j| rows[j][1].clone()))));
            out.push(table("determinant polynomial", tables::DET_MIXED));
        }
        AsymmClass | EvolutionClass => {
            let a = p.get("A")?;
            let b = if id == AsymmClass { p.get("B")? } else { k(0) };
            let r = row_lookup(&rows);
            out.push(factor("A*c1*a3*c4", prod(&[a.clone(), r("c1"), r("a3"), r("c4")])));
            out.push(factor("a1", r("a1")));
            out.push(factor("b2*d3-b3*d2", r("b2") * r("d3") - r("b3") * r("d2")));
            let terms = [
                -(r("c4") * a.clone() * r("a3") * r("c1")),
                -(b.clone() * r("a3") * r("c1").pow(2)),
                r("a1") * r("c1") * r("c3") * b,
                r("a1") * r("c3") * r("c4") * a,
            ];
            let scale = terms.iter().map(|t| t.to_c64().norm()).fold(0.0, f64::max);
            let v = terms.into_iter().fold(k(0), |x, y| x + y);
            out.push(Factor { name: "-c4*A*a3*c1-B*a3*c1^2+a1*c1*c3*B+a1*c3*c4*A".into(), value: v, scale });
        }
        RefSheftel => {
            for j in 1..=n {
                out.push(factor(&format!("A{j}"), p.get(&format!("A{j}"))?));
            }
        }
        RefMalykhExp => out.push(factor("a", p.get("a")?)),
    }
    Ok(out)
}

/// Relative threshold used for every "does not vanish" decision.
pub const NONZERO_TOL: f64 = 1e-8;

pub fn nonzero(v: C64, scale: f64) -> bool {
    v.norm() > NONZERO_TOL * (1.0 + scale)
}

fn violations<S: Scalar>(f: &[Factor<S>], exact: bool) -> Vec<Violation> {
    f.iter()
        .filter(|f| if exact { f.value.is_zero() } else { !nonzero(f.value.to_c64(), f.scale) })
        .map(|f| Violation { name: f.name.clone(), detail: format!("vanishes (value {:.3e})", f.value.to_c64().norm()) })
        .collect()
}

/// Free parameters plus series size.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct ClassParams {
    pub n: Option<usize>,
    pub values: BTreeMap<String, C64>,
}

impl ClassParams {
    pub fn new(values: impl IntoIterator<Item = (String, C64)>) -> Self {
        ClassParams { n: None, values: values.into_iter().collect() }
    }

    pub fn with_n(mut self, n: usize) -> Self {
        self.n = Some(n);
        self
    }

    pub fn set(mut self, k: &str, v: C64) -> Self {
        self.values.insert(k.to_string(), v);
        self
    }
}

fn check_domains(id: ClassId, n: usize, values: &BTreeMap<String, C64>) -> Result<()> {
    for s in schema(id, n) {
        let v = *values.get(&s.name).ok_or_else(|| Error::Domain(format!("missing parameter `{}`", s.name)))?;
        if !v.is_finite() {
            return Err(Error::Domain(format!("{} is not finite", s.name)));
        }
        match s.domain {
            Domain::Real if v.im != 0.0 => return Err(Error::Domain(format!("{} must be real", s.name))),
            Domain::Sign if v != C64::new(1.0, 0.0) && v != C64::new(-1.0, 0.0) => {
                return Err(Error::Domain(format!("{} must be +1 or -1", s.name)))
            }
            _ => {}
        }
        if s.nonzero && v == C64::new(0.0, 0.0) {
            return Err(Error::Domain(format!("{} must be nonzero", s.name)));
        }
    }
    let known: Vec<String> = schema(id, n).into_iter().map(|s| s.name).collect();
    if let Some(extra) = values.keys().find(|k| !known.contains(k)) {
        return Err(Error::Domain(format!("{id} has no parameter `{extra}`")));
    }
    Ok(())
}

/// Violated side conditions; empty when the draw is admissible.
pub fn constraint_check(id: ClassId, p: &ClassParams) -> Result<Vec<Violation>> {
    let n = p.n.unwrap_or(id.default_n());
    check_domains(id, n, &p.values)?;
    Ok(violations(&required_factors(id, n, &p.values)?, false))
}

/// Exact counterpart of [`constraint_check`].
pub fn constraint_check_exact(id: ClassId, n: usize, values: &BTreeMap<String, RatComplex>) -> Result<Vec<Violation>> {
    Ok(violations(&required_factors(id, n, values)?, true))
}

/// A class member ready for evaluation.
#[derive(Debug, Clone)]
pub struct Instance {
    pub id: ClassId,
    pub n: usize,
    pub params: BTreeMap<String, C64>,
    /// Coefficient rows in native coordinates, one per term.
    pub rows: Vec<[C64; 4]>,
    pub roles: Vec<Role>,
    /// The ansatz in native coordinates.
    pub ansatz: Ansatz,
    pub equation: EquationId,
    pub system: Option<SystemId>,
    pub violations: Vec<Violation>,
}

impl Instance {
    /// The ansatz written in the bound equation's coordinates.
    pub fn equation_ansatz(&self) -> Ansatz {
        match self.id.equation_transform() {
            Some(l) => self.ansatz.pull_back(&l),
            None => self.ansatz.clone(),
        }
    }

    /// Native coordinates of a point given in the bound equation's
    /// coordinates.
    pub fn native_point(&self, y: &Point) -> Point {
        match self.id.equation_transform() {
            Some(l) => std::array::from_fn(|i| (0..4).map(|k| l[i][k] * y[k]).sum()),
            None => *y,
        }
    }

    /// Derived coefficient report: every coefficient and offset by name.
    pub fn coefficients(&self) -> BTreeMap<String, C64> {
        let mut m = BTreeMap::new();
        let n = self.rows.len();
        for (j, row) in self.rows.iter().enumerate() {
            for (mu, v) in row.iter().enumerate() {
                m.insert(coeff_symbol(n, j, mu), *v);
            }
        }
        for (name, v) in self.equation.params() {
            m.insert(name.to_string(), v.to_c64());
        }
        m
    }
}

/// Which g each arbitrary term receives: entries are used in turn.
pub type GChoice = Vec<ScalarFn>;

fn equation_for(id: ClassId, eq_params: &[(&'static str, RatComplex)]) -> Result<EquationId> {
    let mut eq = match id {
        CmaSq => EquationId::Cma,
        HcmaI | HcmaII | HcmaIII | RefMalykhExp => EquationId::HcmaLegendre,
        H2Equal | H2HighI | H2HighII | H2SeriesEqual | H2SeriesHighI | H2SeriesHighII => {
            EquationId::Heavenly2Legendre
        }
        MixedClass | MixedSeries | RefSheftel => EquationId::MixedLegendre { theta: RatComplex::one() },
        AsymmClass => "asymm".parse()?,
        EvolutionClass => "evolution2".parse()?,
    };
    for (k, v) in eq_params {
        eq.set_param(k, v.clone())?;
    }
    Ok(eq)
}

/// Builds the instance without enforcing side conditions; they are recorded.
pub fn instantiate_unchecked(id: ClassId, p: &ClassParams, gchoice: &GChoice) -> Result<Instance> {
    let n = p.n.unwrap_or(id.default_n());
    check_domains(id, n, &p.values)?;
    let sh = shape(id, n, &p.values)?;
    let viol = violations(&required_factors(id, n, &p.values)?, false);
    if gchoice.is_empty() && !id.is_reference() {
        return Err(Error::Domain("no function supplied for the arbitrary terms".into()));
    }
    let mut terms = vec![];
    let mut next_g = 0;
    for (j, t) in sh.terms.iter().enumerate() {
        let kind = match t.role {
            Role::G { real } => {
                let g = gchoice[next_g % gchoice.len()].clone();
                next_g += 1;
                if real && !g.is_real() {
                    return Err(Error::Domain(format!("term {} of {id} needs a real-valued g, got {g}", j + 1)));
                }
                TermKind::ArbitraryG(g)
            }
            Role::Square => TermKind::Square,
            Role::Conj(k) => TermKind::ConjugateOf(k),
            Role::Exp => TermKind::ArbitraryG(ScalarFn::exp(C64::new(1.0, 0.0))),
        };
        terms.push(Term::new(LinearForm::new(t.coeffs, t.offset), kind));
    }
    let eq_params: Vec<(&'static str, RatComplex)> = sh
        .eq_params
        .iter()
        .map(|(k, v)| {
            RatComplex::from_c64(*v).map(|r| (*k, r)).ok_or_else(|| Error::Domain(format!("{k} is not finite")))
        })
        .collect::<Result<_>>()?;
    Ok(Instance {
        id,
        n,
        params: p.values.clone(),
        rows: sh.terms.iter().map(|t| t.coeffs).collect(),
        roles: sh.terms.iter().map(|t| t.role).collect(),
        ansatz: Ansatz::new(sh.beta1, terms)?,
        equation: equation_for(id, &eq_params)?,
        system: id.system(),
        violations: viol,
    })
}

/// Builds the instance, failing when a side condition is violated.
pub fn instantiate(id: ClassId, p: &ClassParams, gchoice: &GChoice) -> Result<Instance> {
    let inst = instantiate_unchecked(id, p, gchoice)?;
    if inst.violations.is_empty() {
        Ok(inst)
    } else {
        Err(Error::Constraint(inst.violations))
    }
}

/// Exact coefficient rows and the exactly parameterized bound equation.
#[derive(Debug, Clone)]
pub struct ExactInstance {
    pub id: ClassId,
    pub rows: Vec<[RatComplex; 4]>,
    pub roles: Vec<Role>,
    pub equation: EquationId,
}

pub fn instantiate_exact(id: ClassId, n: usize, values: &BTreeMap<String, RatComplex>) -> Result<ExactInstance> {
    let sh = shape(id, n, values)?;
    Ok(ExactInstance {
        id,
        rows: sh.terms.iter().map(|t| t.coeffs.clone()).collect(),
        roles: sh.terms.iter().map(|t| t.role).collect(),
        equation: equation_for(id, &sh.eq_params)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c;

    fn vals(kv: &[(&str, C64)]) -> BTreeMap<String, C64> {
        kv.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    fn r(x: f64) -> C64 {
        c(x, 0.)
    }

    #[test]
    fn printed_examples() {
        let row = h2_equal_row(r(1.), r(1.), "a3").unwrap();
        assert_eq!(row, [r(2.), r(1.), r(1.), r(-4.)]);
        let row = h2_high_i_row(r(1.), r(2.), "a1", "a2").unwrap();
        assert_eq!(row, [r(1.), r(2.), r(4.), r(-0.5)]);
        let row = mixed_row(r(1.), r(1.), "a2").unwrap();
        assert_eq!(row, [r(1.), r(1.), r(2.), r(0.)]);

        let mut p = vals(&[
            ("A", r(1.)),
            ("B", r(0.)),
            ("a1", r(1.)),
            ("a3", r(1.)),
            ("c1", r(1.)),
            ("c2", r(3.)),
            ("c3", r(1.)),
            ("c4", r(1.)),
        ]);
        for s in ["b2", "b3", "d2", "d3", "beta1", "beta2", "beta3", "beta4", "beta5"] {
            p.insert(s.into(), r(0.5));
        }
        let sh = shape(AsymmClass, 4, &p).unwrap();
        assert_eq!(sh.terms[0].coeffs, [r(1.), r(3.), r(1.), r(1.)]);
        assert_eq!(sh.terms[1].coeffs[0], r(0.));
        assert_eq!(sh.terms[1].coeffs[3], r(0.));
        assert_eq!(sh.terms[3].coeffs[0], r(0.));
        assert_eq!(sh.terms[3].coeffs[3], r(0.));
        assert_eq!(sh.eq_params.iter().find(|(k, _)| *k == "C").unwrap().1, r(-1.));
    }

    #[test]
    fn evolution_is_asymm_without_b() {
        let mut p: BTreeMap<String, C64> = schema(AsymmClass, 4)
            .iter()
            .enumerate()
            .map(|(i, s)| (s.name.clone(), c(0.3 + 0.1 * i as f64, -0.2 + 0.05 * i as f64)))
            .collect();
        p.insert("B".into(), r(0.));
        let a = shape(AsymmClass, 4, &p).unwrap();
        p.remove("B");
        let e = shape(EvolutionClass, 4, &p).unwrap();
        for (x, y) in a.terms.iter().zip(&e.terms) {
            assert_eq!(x.coeffs, y.coeffs);
        }
    }

    #[test]
    fn hcma_i_degenerate_factor() {
        let base = |d1: f64, d2: f64| {
            ClassParams::new(vals(&[
                ("A", r(1.)),
                ("a2", r(1.)),
                ("d1", r(d1)),
                ("d2", r(d2)),
                ("d4", r(0.5)),
                ("beta1", r(0.)),
                ("beta2", r(0.)),
                ("beta3", c(0.1, 0.2)),
                ("beta4", r(0.)),
            ]))
        };
        let v = constraint_check(HcmaI, &base(1., 1.)).unwrap();
        assert!(v.iter().any(|v| v.name.starts_with("d1^6")), "{v:?}");
        let f = required_factors(HcmaI, 4, &base(2., 1.).values).unwrap();
        let poly = f.iter().find(|f| f.name.starts_with("d1^6")).unwrap();
        assert_eq!(poly.value, r(27.));
        assert!(constraint_check(HcmaI, &base(2., 1.)).unwrap().is_empty());
    }

    #[test]
    fn hcma_iii_denominator_condition() {
        let p = ClassParams::new(vals(&[
            ("A2", r(1.)),
            ("B3", r(1.)),
            ("B4", r(0.)),
            ("C2", r(1.)),
            ("H2", r(1.)),
            ("beta1", r(0.)),
            ("beta2", r(0.)),
            ("beta3", r(0.)),
            ("beta4", r(0.)),
            ("beta5", r(0.)),
        ]));
        let f = required_factors(HcmaIII, 4, &p.values).unwrap();
        assert_eq!(f[0].value, r(2.));
        assert!(constraint_check(HcmaIII, &p).unwrap().is_empty());
    }

    #[test]
    fn domains_are_enforced() {
        let mut p = BTreeMap::new();
        for s in schema(HcmaIII, 4) {
            p.insert(s.name, r(0.5));
        }
        p.insert("B3".into(), c(0.5, 0.1));
        let g = vec![ScalarFn::exp(r(1.))];
        assert!(matches!(instantiate(HcmaIII, &ClassParams::new(p.clone()), &g), Err(Error::Domain(_))));
        p.insert("B3".into(), r(0.5));
        assert!(instantiate(HcmaIII, &ClassParams::new(p.clone()), &g).is_ok());
        let complex_g = vec![ScalarFn::exp(c(1., 1.))];
        assert!(instantiate(HcmaIII, &ClassParams::new(p.clone()), &complex_g).is_err());
        p.insert("bogus".into(), r(1.));
        assert!(instantiate(HcmaIII, &ClassParams::new(p), &g).is_err());
    }

    #[test]
    fn zero_denominator_is_domain_error() {
        let mut p = BTreeMap::new();
        for j in 1..=6 {
            p.insert(format!("gamma{j}"), r(1.));
            p.insert(format!("zeta{j}"), r(1.));
            p.insert(format!("beta{j}"), r(0.));
        }
        p.insert("zeta3".into(), r(0.));
        assert!(matches!(shape(H2SeriesEqual, 6, &p), Err(Error::Domain(_))));
    }

    #[test]
    fn names_round_trip() {
        for id in ClassId::ALL {
            assert_eq!(id.name().parse::<ClassId>().unwrap(), id);
        }
        assert!("nonsense".parse::<ClassId>().is_err());
    }

    #[test]
    fn instantiation_is_deterministic() {
        let p = crate::sampling::sample_float(MixedClass, 4, &mut crate::sampling::rng_from_seed(3)).unwrap();
        let g = vec![ScalarFn::exp(r(1.))];
        let a = instantiate(MixedClass, &ClassParams::new(p.clone()), &g).unwrap();
        let b = instantiate(MixedClass, &ClassParams::new(p), &g).unwrap();
        assert_eq!(a.rows, b.rows);
        assert_eq!(a.ansatz, b.ansatz);
    }

    #[test]
    fn phases() {
        let e: C64 = unit_phase(0.3).unwrap();
        assert!((e - C64::from_polar(1.0, 0.3)).norm() < 1e-16);
        let q: RatComplex = unit_phase(std::f64::consts::PI).unwrap();
        assert_eq!(q, RatComplex::from_ints(-1, 0));
        assert!(unit_phase::<RatComplex>(0.3).is_err());
    }
}
