//! The library of one-variable functions plugged into ansatz terms.
//!
//! All members are entire, so no branch choice is ever needed.

use std::fmt;
use std::str::FromStr;

use crate::{parse_complex, Error, Result, C64};

const MAX_DEGREE: usize = 6;

#[derive(Debug, Clone, PartialEq)]
pub enum ScalarFn {
    /// exp(k s)
    Exp(C64),
    /// sin(k s)
    Sin(C64),
    /// cos(k s)
    Cos(C64),
    /// cosh(k s)
    Cosh(C64),
    /// sum_i coeffs[i] s^i, degree at most 6
    Poly(Vec<C64>),
    /// s^2
    Square,
}

impl ScalarFn {
    pub fn exp(k: C64) -> Self {
        ScalarFn::Exp(k)
    }
    pub fn sin(k: C64) -> Self {
        ScalarFn::Sin(k)
    }
    pub fn cos(k: C64) -> Self {
        ScalarFn::Cos(k)
    }
    pub fn cosh(k: C64) -> Self {
        ScalarFn::Cosh(k)
    }

    pub fn poly(coeffs: Vec<C64>) -> Result<Self> {
        if coeffs.is_empty() || coeffs.len() > MAX_DEGREE + 1 {
            return Err(Error::Domain(format!(
                "polynomial needs 1..={} coefficients, got {}",
                MAX_DEGREE + 1,
                coeffs.len()
            )));
        }
        Ok(ScalarFn::Poly(coeffs))
    }

    /// The identity s, handy for tests.
    pub fn identity() -> Self {
        ScalarFn::Poly(vec![C64::new(0.0, 0.0), C64::new(1.0, 0.0)])
    }

    /// (g, g', g'') at s.
    pub fn derivs(&self, s: C64) -> Result<[C64; 3]> {
        let out = match self {
            ScalarFn::Exp(k) => {
                let e = (k * s).exp();
                [e, k * e, k * k * e]
            }
            ScalarFn::Sin(k) => {
                let (sn, cs) = ((k * s).sin(), (k * s).cos());
                [sn, k * cs, -k * k * sn]
            }
            ScalarFn::Cos(k) => {
                let (sn, cs) = ((k * s).sin(), (k * s).cos());
                [cs, -k * sn, -k * k * cs]
            }
            ScalarFn::Cosh(k) => {
                let (ch, sh) = ((k * s).cosh(), (k * s).sinh());
                [ch, k * sh, k * k * ch]
            }
            ScalarFn::Poly(c) => {
                // Horner on value and both derivatives at once.
                let zero = C64::new(0.0, 0.0);
                let (mut p, mut dp, mut ddp) = (zero, zero, zero);
                for a in c.iter().rev() {
                    ddp = ddp * s + dp * 2.0;
                    dp = dp * s + p;
                    p = p * s + a;
                }
                [p, dp, ddp]
            }
            ScalarFn::Square => [s * s, s * 2.0, C64::new(2.0, 0.0)],
        };
        if out.iter().all(|v| v.is_finite()) {
            Ok(out)
        } else {
            Err(Error::Domain(format!("{self} is not finite at {s}")))
        }
    }

    /// The function s -> conj(g(conj s)): same family, conjugated parameters.
    pub fn conjugate(&self) -> Self {
        match self {
            ScalarFn::Exp(k) => ScalarFn::Exp(k.conj()),
            ScalarFn::Sin(k) => ScalarFn::Sin(k.conj()),
            ScalarFn::Cos(k) => ScalarFn::Cos(k.conj()),
            ScalarFn::Cosh(k) => ScalarFn::Cosh(k.conj()),
            ScalarFn::Poly(c) => ScalarFn::Poly(c.iter().map(|a| a.conj()).collect()),
            ScalarFn::Square => ScalarFn::Square,
        }
    }

    /// True when every parameter is real, so g maps reals to reals.
    pub fn is_real(&self) -> bool {
        match self {
            ScalarFn::Exp(k) | ScalarFn::Sin(k) | ScalarFn::Cos(k) | ScalarFn::Cosh(k) => k.im == 0.0,
            ScalarFn::Poly(c) => c.iter().all(|a| a.im == 0.0),
            ScalarFn::Square => true,
        }
    }
}

fn fmt_c(z: &C64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else {
        format!("{}{:+}i", z.re, z.im)
    }
}

impl fmt::Display for ScalarFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarFn::Exp(k) => write!(f, "exp:{}", fmt_c(k)),
            ScalarFn::Sin(k) => write!(f, "sin:{}", fmt_c(k)),
            ScalarFn::Cos(k) => write!(f, "cos:{}", fmt_c(k)),
            ScalarFn::Cosh(k) => write!(f, "cosh:{}", fmt_c(k)),
            ScalarFn::Poly(c) => {
                write!(f, "poly:{}", c.iter().map(fmt_c).collect::<Vec<_>>().join("/"))
            }
            ScalarFn::Square => write!(f, "square"),
        }
    }
}

/// Descriptors look like `exp`, `sin:0.5`, `cosh:1+2i`, `poly:1/0/0.5`, `square`.
impl FromStr for ScalarFn {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, arg) = match s.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (s, None),
        };
        let k = || -> Result<C64> { arg.map(parse_complex).unwrap_or(Ok(C64::new(1.0, 0.0))) };
        match head {
            "exp" => Ok(ScalarFn::Exp(k()?)),
            "sin" => Ok(ScalarFn::Sin(k()?)),
            "cos" => Ok(ScalarFn::Cos(k()?)),
            "cosh" => Ok(ScalarFn::Cosh(k()?)),
            "square" if arg.is_none() => Ok(ScalarFn::Square),
            "poly" => {
                let a = arg.ok_or_else(|| Error::Parse("poly needs coefficients".into()))?;
                let c = a.split('/').map(parse_complex).collect::<Result<Vec<_>>>()?;
                ScalarFn::poly(c)
            }
            _ => Err(Error::Parse(format!("unknown function descriptor `{s}`"))),
        }
    }
}

impl serde::Serialize for ScalarFn {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for ScalarFn {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c;

    #[test]
    fn parse_and_display_round_trip() {
        for d in ["exp:1", "sin:0.5", "cosh:1+2i", "poly:1/0/0.5", "square", "cos:-0.25-1i"] {
            let f: ScalarFn = d.parse().unwrap();
            assert_eq!(f.to_string().parse::<ScalarFn>().unwrap(), f);
        }
        assert_eq!("exp".parse::<ScalarFn>().unwrap(), ScalarFn::Exp(c(1., 0.)));
        assert!("log".parse::<ScalarFn>().is_err());
        assert!("poly:1/1/1/1/1/1/1/1".parse::<ScalarFn>().is_err());
    }

    #[test]
    fn polynomial_derivatives() {
        let p = ScalarFn::poly(vec![c(1., 0.), c(2., 0.), c(3., 0.)]).unwrap();
        let [v, d1, d2] = p.derivs(c(2., 0.)).unwrap();
        assert_eq!((v, d1, d2), (c(17., 0.), c(14., 0.), c(6., 0.)));
    }

    #[test]
    fn conjugate_function() {
        let g = ScalarFn::sin(c(0.3, 0.8));
        let s = c(0.4, -0.7);
        let lhs = g.conjugate().derivs(s).unwrap();
        let rhs = g.derivs(s.conj()).unwrap();
        for i in 0..3 {
            assert!((lhs[i] - rhs[i].conj()).norm() < 1e-15);
        }
    }

    #[test]
    fn overflow_is_a_domain_error() {
        assert!(ScalarFn::exp(c(1., 0.)).derivs(c(1e4, 0.)).is_err());
    }
}
