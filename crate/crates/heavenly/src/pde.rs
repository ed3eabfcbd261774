//! Second-order PDEs stored as data.
//!
//! An equation is a constant plus linear and bilinear terms in Hessian
//! entries. Coefficients are kept exactly, with a double copy for residuals.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::exact::RatComplex;
use crate::jet::Jet4;
use crate::{Error, Result, C64};

/// Index of a second partial; always stored with mu <= nu.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct HessIdx {
    mu: u8,
    nu: u8,
}

impl HessIdx {
    pub fn new(a: usize, b: usize) -> Self {
        assert!(a < 4 && b < 4, "coordinate index out of range");
        HessIdx { mu: a.min(b) as u8, nu: a.max(b) as u8 }
    }

    pub fn mu(&self) -> usize {
        self.mu as usize
    }

    pub fn nu(&self) -> usize {
        self.nu as usize
    }

    pub fn of(&self, jet: &Jet4) -> C64 {
        jet.h(self.mu(), self.nu())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PdeSpec {
    name: String,
    coords: [&'static str; 4],
    quad: Vec<(HessIdx, HessIdx, RatComplex)>,
    lin: Vec<(HessIdx, RatComplex)>,
    constant: RatComplex,
    quad_f: Vec<(HessIdx, HessIdx, C64)>,
    lin_f: Vec<(HessIdx, C64)>,
    constant_f: C64,
}

impl PdeSpec {
    pub fn builder(name: &str, coords: [&'static str; 4]) -> PdeBuilder {
        PdeBuilder {
            name: name.to_string(),
            coords,
            quad: BTreeMap::new(),
            lin: BTreeMap::new(),
            constant: RatComplex::zero(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn coord_names(&self) -> [&'static str; 4] {
        self.coords
    }

    pub fn quad(&self) -> &[(HessIdx, HessIdx, RatComplex)] {
        &self.quad
    }

    pub fn lin(&self) -> &[(HessIdx, RatComplex)] {
        &self.lin
    }

    pub fn constant(&self) -> &RatComplex {
        &self.constant
    }

    pub fn is_linear(&self) -> bool {
        self.quad.is_empty()
    }

    pub fn residual(&self, jet: &Jet4) -> C64 {
        let q: C64 = self.quad_f.iter().map(|(a, b, k)| k * a.of(jet) * b.of(jet)).sum();
        let l: C64 = self.lin_f.iter().map(|(a, k)| k * a.of(jet)).sum();
        q + l + self.constant_f
    }

    /// Sum of the magnitudes of the residual's individual terms; the natural
    /// yardstick for rounding error in `residual`.
    pub fn residual_scale(&self, jet: &Jet4) -> f64 {
        let q: f64 = self.quad_f.iter().map(|(a, b, k)| (k * a.of(jet) * b.of(jet)).norm()).sum();
        let l: f64 = self.lin_f.iter().map(|(a, k)| (k * a.of(jet)).norm()).sum();
        q + l + self.constant_f.norm()
    }

    /// Termwise sum of two equations in the same coordinates.
    pub fn sum(&self, other: &PdeSpec) -> Result<PdeSpec> {
        if self.coords != other.coords {
            return Err(Error::Domain(format!(
                "cannot add `{}` and `{}`: different coordinates",
                self.name, other.name
            )));
        }
        let mut b = PdeSpec::builder(&format!("{}+{}", self.name, other.name), self.coords);
        for s in [self, other] {
            for (x, y, k) in &s.quad {
                b = b.quad_idx(*x, *y, k.clone());
            }
            for (x, k) in &s.lin {
                b = b.lin_idx(*x, k.clone());
            }
            b.constant = &b.constant + &s.constant;
        }
        Ok(b.build())
    }
}

pub struct PdeBuilder {
    name: String,
    coords: [&'static str; 4],
    quad: BTreeMap<(HessIdx, HessIdx), RatComplex>,
    lin: BTreeMap<HessIdx, RatComplex>,
    constant: RatComplex,
}

impl PdeBuilder {
    fn idx(&self, a: &str, b: &str) -> HessIdx {
        let pos = |s: &str| {
            self.coords
                .iter()
                .position(|c| *c == s)
                .unwrap_or_else(|| panic!("`{s}` is not a coordinate of {}", self.name))
        };
        HessIdx::new(pos(a), pos(b))
    }

    /// Adds k * u_{ab} * u_{cd}; coordinates are given by name.
    pub fn quad(self, a: &str, b: &str, c: &str, d: &str, k: RatComplex) -> Self {
        let (x, y) = (self.idx(a, b), self.idx(c, d));
        self.quad_idx(x, y, k)
    }

    pub fn quad_idx(mut self, x: HessIdx, y: HessIdx, k: RatComplex) -> Self {
        let key = if x <= y { (x, y) } else { (y, x) };
        let e = self.quad.entry(key).or_insert_with(RatComplex::zero);
        *e = &*e + &k;
        self
    }

    /// Adds k * u_{ab}.
    pub fn lin(self, a: &str, b: &str, k: RatComplex) -> Self {
        let x = self.idx(a, b);
        self.lin_idx(x, k)
    }

    pub fn lin_idx(mut self, x: HessIdx, k: RatComplex) -> Self {
        let e = self.lin.entry(x).or_insert_with(RatComplex::zero);
        *e = &*e + &k;
        self
    }

    pub fn constant(mut self, k: RatComplex) -> Self {
        self.constant = k;
        self
    }

    pub fn build(self) -> PdeSpec {
        let quad: Vec<_> = self
            .quad
            .into_iter()
            .filter(|(_, k)| !k.is_zero())
            .map(|((x, y), k)| (x, y, k))
            .collect();
        let lin: Vec<_> = self.lin.into_iter().filter(|(_, k)| !k.is_zero()).collect();
        PdeSpec {
            quad_f: quad.iter().map(|(x, y, k)| (*x, *y, k.to_c64())).collect(),
            lin_f: lin.iter().map(|(x, k)| (*x, k.to_c64())).collect(),
            constant_f: self.constant.to_c64(),
            name: self.name,
            coords: self.coords,
            quad,
            lin,
            constant: self.constant,
        }
    }
}

/// A set of linear equations that must hold together.
#[derive(Debug, Clone, PartialEq)]
pub struct SystemSpec {
    name: String,
    equations: Vec<PdeSpec>,
}

impl SystemSpec {
    pub fn new(name: &str, equations: Vec<PdeSpec>) -> Result<Self> {
        if let Some(e) = equations.iter().find(|e| !e.is_linear()) {
            return Err(Error::Domain(format!("system member `{}` is not linear", e.name())));
        }
        Ok(SystemSpec { name: name.to_string(), equations })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn equations(&self) -> &[PdeSpec] {
        &self.equations
    }

    pub fn coord_names(&self) -> [&'static str; 4] {
        self.equations[0].coord_names()
    }

    pub fn residuals(&self, jet: &Jet4) -> Vec<C64> {
        self.equations.iter().map(|e| e.residual(jet)).collect()
    }
}

pub fn residual(spec: &PdeSpec, jet: &Jet4) -> C64 {
    spec.residual(jet)
}

pub fn residual_system(sys: &SystemSpec, jet: &Jet4) -> Vec<C64> {
    sys.residuals(jet)
}

#[derive(Debug, Clone, PartialEq)]
pub enum EquationId {
    /// Elliptic complex Monge-Ampere equation.
    Cma,
    /// Complex Monge-Ampere with right-hand side theta.
    CmaGeneral { theta: RatComplex },
    /// Hyperbolic complex Monge-Ampere after the Legendre transformation.
    HcmaLegendre,
    Heavenly2,
    Heavenly2Legendre,
    Mixed { theta: RatComplex },
    MixedLegendre { theta: RatComplex },
    Asymm { a: RatComplex, b: RatComplex, c: RatComplex },
    Evolution2 { a: RatComplex, c: RatComplex },
}

fn one() -> RatComplex {
    RatComplex::one()
}

fn int(n: i64) -> RatComplex {
    RatComplex::from_ints(n, 0)
}

impl EquationId {
    pub const NAMES: [&'static str; 9] = [
        "cma",
        "cma-general",
        "hcma-legendre",
        "heavenly2",
        "heavenly2-legendre",
        "mixed",
        "mixed-legendre",
        "asymm",
        "evolution2",
    ];

    pub fn name(&self) -> &'static str {
        match self {
            EquationId::Cma => "cma",
            EquationId::CmaGeneral { .. } => "cma-general",
            EquationId::HcmaLegendre => "hcma-legendre",
            EquationId::Heavenly2 => "heavenly2",
            EquationId::Heavenly2Legendre => "heavenly2-legendre",
            EquationId::Mixed { .. } => "mixed",
            EquationId::MixedLegendre { .. } => "mixed-legendre",
            EquationId::Asymm { .. } => "asymm",
            EquationId::Evolution2 { .. } => "evolution2",
        }
    }

    /// Named equation parameters (theta, A, B, C) with their current values.
    pub fn params(&self) -> Vec<(&'static str, RatComplex)> {
        match self {
            EquationId::CmaGeneral { theta }
            | EquationId::Mixed { theta }
            | EquationId::MixedLegendre { theta } => vec![("theta", theta.clone())],
            EquationId::Asymm { a, b, c } => vec![("A", a.clone()), ("B", b.clone()), ("C", c.clone())],
            EquationId::Evolution2 { a, c } => vec![("A", a.clone()), ("C", c.clone())],
            _ => vec![],
        }
    }

    /// Replaces one named parameter.
    pub fn set_param(&mut self, key: &str, v: RatComplex) -> Result<()> {
        let slot = match (self as &mut EquationId, key) {
            (EquationId::CmaGeneral { theta }, "theta")
            | (EquationId::Mixed { theta }, "theta")
            | (EquationId::MixedLegendre { theta }, "theta") => theta,
            (EquationId::Asymm { a, .. }, "A") | (EquationId::Evolution2 { a, .. }, "A") => a,
            (EquationId::Asymm { b, .. }, "B") => b,
            (EquationId::Asymm { c, .. }, "C") | (EquationId::Evolution2 { c, .. }, "C") => c,
            (id, k) => {
                return Err(Error::Parse(format!("equation `{}` has no parameter `{k}`", id.name())))
            }
        };
        *slot = v;
        Ok(())
    }

    pub fn coord_names(&self) -> [&'static str; 4] {
        match self {
            EquationId::Cma | EquationId::CmaGeneral { .. } => ["z1", "z1b", "z2", "z2b"],
            EquationId::HcmaLegendre => ["p", "pb", "z2", "z2b"],
            EquationId::Heavenly2 => ["x", "y", "w", "z"],
            EquationId::Heavenly2Legendre => ["x", "r", "t", "z"],
            EquationId::Mixed { .. } => ["t", "x", "y", "z"],
            EquationId::MixedLegendre { .. } => ["p", "q", "t", "y"],
            // Ordered like the ansatz coefficients a1..a4 of the asymmetric class.
            EquationId::Asymm { .. } | EquationId::Evolution2 { .. } => ["x", "y", "z", "t"],
        }
    }
}

impl fmt::Display for EquationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EquationId {
    type Err = Error;

    /// Parameters start at theta = 1 and A = B = C = 1.
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "cma" => EquationId::Cma,
            "cma-general" => EquationId::CmaGeneral { theta: one() },
            "hcma-legendre" => EquationId::HcmaLegendre,
            "heavenly2" => EquationId::Heavenly2,
            "heavenly2-legendre" => EquationId::Heavenly2Legendre,
            "mixed" => EquationId::Mixed { theta: one() },
            "mixed-legendre" => EquationId::MixedLegendre { theta: one() },
            "asymm" => EquationId::Asymm { a: one(), b: one(), c: one() },
            "evolution2" => EquationId::Evolution2 { a: one(), c: one() },
            _ => return Err(Error::UnknownEquation(s.to_string())),
        })
    }
}

pub fn builtin_pde(id: &EquationId) -> PdeSpec {
    let b = PdeSpec::builder(id.name(), id.coord_names());
    match id {
        EquationId::Cma => cma(b, one()),
        EquationId::CmaGeneral { theta } => cma(b, theta.clone()),
        EquationId::HcmaLegendre => b
            .quad("p", "pb", "z2", "z2b", one())
            .quad("p", "z2b", "pb", "z2", int(-1))
            .quad("p", "pb", "p", "pb", int(-1))
            .quad("p", "p", "pb", "pb", one())
            .build(),
        EquationId::Heavenly2 => b
            .quad("x", "x", "y", "y", one())
            .quad("x", "y", "x", "y", int(-1))
            .lin("x", "w", one())
            .lin("y", "z", one())
            .build(),
        EquationId::Heavenly2Legendre => b
            .quad("t", "t", "x", "x", one())
            .quad("t", "t", "r", "z", one())
            .quad("x", "t", "r", "r", one())
            .quad("x", "t", "x", "t", int(-1))
            .quad("r", "t", "r", "x", int(-1))
            .quad("r", "t", "t", "z", int(-1))
            .build(),
        EquationId::Mixed { theta } => b
            .quad("t", "y", "x", "z", one())
            .quad("t", "z", "x", "y", int(-1))
            .quad("t", "t", "x", "x", one())
            .quad("t", "x", "t", "x", int(-1))
            .constant(-theta.clone())
            .build(),
        EquationId::MixedLegendre { theta } => b
            .quad("t", "q", "p", "y", one())
            .quad("p", "q", "t", "y", int(-1))
            .quad("t", "t", "q", "q", one())
            .quad("t", "q", "t", "q", int(-1))
            .quad("p", "p", "q", "q", theta.clone())
            .quad("p", "q", "p", "q", -theta.clone())
            .build(),
        EquationId::Asymm { a, b: bb, c } => asymm(b, a, bb, c),
        EquationId::Evolution2 { a, c } => asymm(b, a, &RatComplex::zero(), c),
    }
}

fn cma(b: PdeBuilder, theta: RatComplex) -> PdeSpec {
    b.quad("z1", "z1b", "z2", "z2b", one())
        .quad("z1", "z2b", "z1b", "z2", int(-1))
        .constant(-theta)
        .build()
}

fn asymm(b: PdeBuilder, a: &RatComplex, bb: &RatComplex, c: &RatComplex) -> PdeSpec {
    b.quad("t", "x", "t", "y", one())
        .quad("t", "t", "x", "y", int(-1))
        .lin("t", "z", a.clone())
        .lin("x", "z", bb.clone())
        .lin("x", "x", c.clone())
        .build()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SystemId {
    EqSymm,
    HighSymm,
    MixedLin,
}

impl SystemId {
    pub const NAMES: [&'static str; 3] = ["eq-symm", "high-symm", "mixed-lin"];

    pub fn name(&self) -> &'static str {
        match self {
            SystemId::EqSymm => "eq-symm",
            SystemId::HighSymm => "high-symm",
            SystemId::MixedLin => "mixed-lin",
        }
    }

    pub fn coord_names(&self) -> [&'static str; 4] {
        match self {
            SystemId::EqSymm | SystemId::HighSymm => ["x", "r", "t", "z"],
            SystemId::MixedLin => ["eta", "xi", "q", "y"],
        }
    }
}

impl fmt::Display for SystemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SystemId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "eq-symm" => Ok(SystemId::EqSymm),
            "high-symm" => Ok(SystemId::HighSymm),
            "mixed-lin" => Ok(SystemId::MixedLin),
            _ => Err(Error::UnknownEquation(s.to_string())),
        }
    }
}

pub fn builtin_system(id: SystemId) -> SystemSpec {
    let cs = id.coord_names();
    let eq = |k: usize| PdeSpec::builder(&format!("{}.{k}", id.name()), cs);
    let equations = match id {
        SystemId::EqSymm => vec![
            eq(1).lin("r", "t", one()).lin("r", "r", one()).lin("x", "t", int(-1)).build(),
            eq(2).lin("x", "x", one()).lin("r", "z", one()).build(),
            eq(3).lin("r", "x", one()).lin("x", "t", one()).lin("t", "z", one()).build(),
        ],
        SystemId::HighSymm => vec![
            eq(1).lin("r", "r", one()).lin("x", "t", int(-1)).build(),
            eq(2).lin("r", "x", one()).lin("t", "z", one()).build(),
            eq(3).lin("x", "x", one()).lin("r", "z", one()).build(),
        ],
        SystemId::MixedLin => vec![
            eq(1).lin("eta", "eta", one()).lin("xi", "xi", one()).lin("xi", "q", int(-1)).build(),
            eq(2).lin("xi", "q", one()).lin("eta", "q", int(-1)).lin("xi", "y", one()).build(),
            eq(3)
                .lin("xi", "q", one())
                .lin("eta", "q", one())
                .lin("q", "q", int(-1))
                .lin("eta", "y", one())
                .build(),
        ],
    };
    SystemSpec::new(id.name(), equations).expect("builtin systems are linear")
}
