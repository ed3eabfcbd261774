//! Sparse multivariate polynomials over exact complex rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::exact::RatComplex;
use crate::{Error, Result, C64};

/// Sorted (symbol, power) list with positive powers.
pub type Monomial = Vec<(String, u32)>;

fn mono_mul(a: &Monomial, b: &Monomial) -> Monomial {
    let mut m: BTreeMap<String, u32> = a.iter().cloned().collect();
    for (s, p) in b {
        *m.entry(s.clone()).or_insert(0) += p;
    }
    m.into_iter().collect()
}

/// Canonical form: no zero coefficients, monomials in lexicographic order.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, RatComplex>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(k: RatComplex) -> Self {
        let mut p = Poly::zero();
        p.add_term(Vec::new(), k);
        p
    }

    pub fn var(s: &str) -> Self {
        let mut p = Poly::zero();
        p.add_term(vec![(s.to_string(), 1)], RatComplex::one());
        p
    }

    fn add_term(&mut self, m: Monomial, k: RatComplex) {
        if k.is_zero() {
            return;
        }
        let v = match self.terms.remove(&m) {
            Some(old) => &old + &k,
            None => k,
        };
        if !v.is_zero() {
            self.terms.insert(m, v);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &RatComplex)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, k: &RatComplex) -> Poly {
        let mut p = Poly::zero();
        for (m, v) in &self.terms {
            p.add_term(m.clone(), v * k);
        }
        p
    }

    /// Renames symbols; used to compare blocks across terms.
    pub fn rename(&self, f: impl Fn(&str) -> String) -> Poly {
        let mut p = Poly::zero();
        for (m, v) in &self.terms {
            let mut mm: BTreeMap<String, u32> = BTreeMap::new();
            for (s, e) in m {
                *mm.entry(f(s)).or_insert(0) += e;
            }
            p.add_term(mm.into_iter().collect(), v.clone());
        }
        p
    }

    /// Exact value; every symbol must be bound.
    pub fn eval_exact(&self, lookup: &dyn Fn(&str) -> Option<RatComplex>) -> Result<RatComplex> {
        let mut sum = RatComplex::zero();
        for (m, k) in &self.terms {
            let mut t = k.clone();
            for (s, e) in m {
                let v = lookup(s).ok_or_else(|| Error::Domain(format!("unbound symbol `{s}`")))?;
                t = &t * &v.pow(*e);
            }
            sum = &sum + &t;
        }
        Ok(sum)
    }

    /// Double-precision value and the largest term magnitude.
    pub fn eval_c64(&self, lookup: &dyn Fn(&str) -> Option<C64>) -> Result<(C64, f64)> {
        let mut sum = C64::new(0.0, 0.0);
        let mut scale = 0.0f64;
        for (m, k) in &self.terms {
            let mut t = k.to_c64();
            for (s, e) in m {
                let v = lookup(s).ok_or_else(|| Error::Domain(format!("unbound symbol `{s}`")))?;
                t *= v.powu(*e);
            }
            scale = scale.max(t.norm());
            sum += t;
        }
        Ok((sum, scale))
    }

    /// JSON with integer-pair coefficients: [[re_num, re_den], [im_num, im_den]].
    pub fn to_json(&self) -> Value {
        let int = |b: &num_bigint::BigInt| match b.to_i64() {
            Some(v) => json!(v),
            None => json!(b.to_string()),
        };
        let pair = |r: &num_rational::BigRational| json!([int(r.numer()), int(r.denom())]);
        Value::Array(
            self.terms
                .iter()
                .map(|(m, k)| {
                    json!({
                        "coeff": [pair(&k.re), pair(&k.im)],
                        "monomial": m.iter().map(|(s, e)| json!([s, e])).collect::<Vec<_>>(),
                    })
                })
                .collect(),
        )
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let mut p = self.clone();
        for (m, k) in &o.terms {
            p.add_term(m.clone(), k.clone());
        }
        p
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        self + &(-o)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&RatComplex::from_ints(-1, 0))
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        let mut p = Poly::zero();
        for (ma, ka) in &self.terms {
            for (mb, kb) in &o.terms {
                p.add_term(mono_mul(ma, mb), ka * kb);
            }
        }
        p
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, k)| {
                let mono: Vec<String> =
                    m.iter().map(|(s, e)| if *e == 1 { s.clone() } else { format!("{s}^{e}") }).collect();
                if mono.is_empty() {
                    format!("({k})")
                } else {
                    format!("({k})*{}", mono.join("*"))
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_laws_and_cancellation() {
        let (x, y) = (Poly::var("x"), Poly::var("y"));
        let s = &x + &y;
        let d = &x - &y;
        let lhs = &s * &d;
        let rhs = &(&x * &x) - &(&y * &y);
        assert_eq!(lhs, rhs);
        assert!((&lhs - &rhs).is_zero());
        assert_eq!(lhs.len(), 2);
    }

    #[test]
    fn evaluation() {
        let x = Poly::var("x");
        let p = &(&x * &x) + &Poly::constant(RatComplex::from_ints(0, 1));
        let v = p.eval_exact(&|_| Some(RatComplex::from_fracs(1, 2, 0, 1))).unwrap();
        assert_eq!(v, RatComplex::from_fracs(1, 4, 1, 1));
        assert!(p.eval_exact(&|_| None).is_err());
        let (v, _) = p.eval_c64(&|_| Some(C64::new(2.0, 0.0))).unwrap();
        assert_eq!(v, C64::new(4.0, 1.0));
    }

    #[test]
    fn json_shape() {
        let p = Poly::var("a1").scale(&RatComplex::from_fracs(-3, 2, 0, 1));
        let j = p.to_json();
        assert_eq!(j[0]["coeff"], json!([[-3, 2], [0, 1]]));
        assert_eq!(j[0]["monomial"], json!([["a1", 1]]));
    }
}
