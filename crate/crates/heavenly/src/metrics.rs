//! Four-dimensional metrics built from a solution jet.
//!
//! Convention: ds^2 = sum g[mu][nu] dx^mu dx^nu with g symmetric, so a
//! product of two one-forms a b contributes (a_mu b_nu + b_mu a_nu) / 2.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::ansatz::det4;
use crate::catalog::ClassId;
use crate::jet::{Jet4, Point};
use crate::{Error, Result, C64};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MetricId {
    Kahler,
    HcmaLeg,
    Heavenly,
    HeavenlyLeg,
}

impl MetricId {
    pub const ALL: [MetricId; 4] = [MetricId::Kahler, MetricId::HcmaLeg, MetricId::Heavenly, MetricId::HeavenlyLeg];

    pub fn name(self) -> &'static str {
        match self {
            MetricId::Kahler => "kahler",
            MetricId::HcmaLeg => "hcma-leg",
            MetricId::Heavenly => "heavenly",
            MetricId::HeavenlyLeg => "heavenly-leg",
        }
    }

    pub fn coord_names(self) -> [&'static str; 4] {
        match self {
            MetricId::Kahler => ["z1", "z1b", "z2", "z2b"],
            MetricId::HcmaLeg => ["p", "pb", "z2", "z2b"],
            MetricId::Heavenly => ["x", "y", "w", "z"],
            MetricId::HeavenlyLeg => ["x", "r", "t", "z"],
        }
    }

    /// Whether solutions of `class` live on the potential this metric uses.
    pub fn pairs_with(self, class: ClassId) -> bool {
        use ClassId::*;
        match self {
            MetricId::Kahler => class == CmaSq,
            MetricId::HcmaLeg => matches!(class, HcmaI | HcmaII | HcmaIII | RefMalykhExp),
            MetricId::HeavenlyLeg => matches!(
                class,
                H2Equal | H2HighI | H2HighII | H2SeriesEqual | H2SeriesHighI | H2SeriesHighII
            ),
            MetricId::Heavenly => false,
        }
    }

    /// The metric family a class's solutions feed, if any.
    pub fn for_class(class: ClassId) -> Option<MetricId> {
        MetricId::ALL.into_iter().find(|m| m.pairs_with(class))
    }
}

impl fmt::Display for MetricId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MetricId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        MetricId::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown metric family `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Metric4 {
    pub g: [[C64; 4]; 4],
    pub coord_names: [&'static str; 4],
}

type Form = [C64; 4];

fn zero() -> C64 {
    C64::new(0.0, 0.0)
}

fn basis(mu: usize) -> Form {
    let mut f = [zero(); 4];
    f[mu] = C64::new(1.0, 0.0);
    f
}

/// Adds k * a * b, split symmetrically.
fn add_product(g: &mut [[C64; 4]; 4], k: C64, a: &Form, b: &Form) {
    for mu in 0..4 {
        for nu in 0..4 {
            g[mu][nu] += k * 0.5 * (a[mu] * b[nu] + b[mu] * a[nu]);
        }
    }
}

fn nonzero(name: &str, v: C64, scale: f64) -> Result<C64> {
    if v.norm() <= 1e-14 * (1.0 + scale) || !v.is_finite() {
        return Err(Error::SingularDenominator(name.to_string()));
    }
    Ok(v)
}

/// sum_mu h[row][mu] dx^mu
fn hess_row(j: &Jet4, row: usize) -> Form {
    std::array::from_fn(|mu| j.h(row, mu))
}

struct LegFactors {
    w: C64,
    d: C64,
}

fn hcma_factors(j: &Jet4) -> Result<LegFactors> {
    let (pp, qq, pq) = (j.h(0, 0), j.h(1, 1), j.h(0, 1));
    let w = nonzero("w_p pb", pq, 0.0)?;
    let d = nonzero("w_pp w_pbpb - w_ppb^2", pp * qq - pq * pq, (pp * qq).norm() + (pq * pq).norm())?;
    Ok(LegFactors { w, d })
}

fn heavenly_leg_factors(j: &Jet4) -> Result<(C64, C64)> {
    let (tt, rr, tr) = (j.h(2, 2), j.h(1, 1), j.h(2, 1));
    let t = nonzero("theta_tt", tt, 0.0)?;
    let k = nonzero("theta_tt theta_rr - theta_tr^2", tt * rr - tr * tr, (tt * rr).norm() + (tr * tr).norm())?;
    Ok((t, k))
}

/// Component matrix of the metric family at the jet's point.
pub fn metric_at(family: MetricId, j: &Jet4) -> Result<Metric4> {
    let mut g = [[zero(); 4]; 4];
    let one = C64::new(1.0, 0.0);
    match family {
        MetricId::Kahler => {
            for i in [0, 2] {
                for k in [1, 3] {
                    add_product(&mut g, j.h(i, k), &basis(i), &basis(k));
                }
            }
        }
        MetricId::HcmaLeg => {
            let LegFactors { w, d } = hcma_factors(j)?;
            let (pp, qq) = (j.h(0, 0), j.h(1, 1));
            let mut o1 = [zero(); 4];
            o1[0] = w;
            o1[2] = j.h(1, 2);
            let mut o2 = [zero(); 4];
            o2[1] = w;
            o2[3] = j.h(0, 3);
            add_product(&mut g, pp / d, &o1, &o1);
            add_product(&mut g, qq / d, &o2, &o2);
            add_product(&mut g, (pp * qq + w * w) / (w * d), &o1, &o2);
            add_product(&mut g, -d / w, &basis(2), &basis(3));
        }
        MetricId::Heavenly => {
            let (x, y, w, z) = (basis(0), basis(1), basis(2), basis(3));
            add_product(&mut g, one, &w, &x);
            add_product(&mut g, one, &z, &y);
            add_product(&mut g, -j.h(0, 0), &z, &z);
            add_product(&mut g, -j.h(1, 1), &w, &w);
            add_product(&mut g, 2.0 * j.h(0, 1), &w, &z);
        }
        MetricId::HeavenlyLeg => {
            let (tt, k) = heavenly_leg_factors(j)?;
            let (x, z) = (basis(0), basis(3));
            let omega = hess_row(j, 2);
            let rho = hess_row(j, 1);
            let mut a: Form = omega.map(|v| tt * v);
            a[3] += tt * j.h(1, 0) - j.h(2, 1) * j.h(2, 0);
            add_product(&mut g, one / (tt * k), &a, &a);
            add_product(&mut g, -(tt * j.h(0, 0) - j.h(2, 0) * j.h(2, 0)) / tt, &z, &z);
            add_product(&mut g, -one, &omega, &x);
            add_product(&mut g, -one, &rho, &z);
        }
    }
    Ok(Metric4 { g, coord_names: family.coord_names() })
}

/// ds^2 evaluated on one displacement, read straight off the line element
/// without forming the matrix.
pub fn line_element(family: MetricId, j: &Jet4, dx: &Point) -> Result<C64> {
    let h = |a: usize, b: usize| j.h(a, b);
    Ok(match family {
        MetricId::Kahler => {
            let (dz1, dz1b, dz2, dz2b) = (dx[0], dx[1], dx[2], dx[3]);
            h(0, 1) * dz1 * dz1b + h(0, 3) * dz1 * dz2b + h(2, 1) * dz2 * dz1b + h(2, 3) * dz2 * dz2b
        }
        MetricId::HcmaLeg => {
            let LegFactors { w, d } = hcma_factors(j)?;
            let (dp, dpb, dz2, dz2b) = (dx[0], dx[1], dx[2], dx[3]);
            let first = w * dp + h(1, 2) * dz2;
            let second = w * dpb + h(0, 3) * dz2b;
            (h(0, 0) * first * first + h(1, 1) * second * second + (h(0, 0) * h(1, 1) + w * w) / w * first * second) / d
                - d / w * dz2 * dz2b
        }
        MetricId::Heavenly => {
            let (x, y, w, z) = (dx[0], dx[1], dx[2], dx[3]);
            w * x + z * y - h(0, 0) * z * z - h(1, 1) * w * w + 2.0 * h(0, 1) * w * z
        }
        MetricId::HeavenlyLeg => {
            let (tt, k) = heavenly_leg_factors(j)?;
            let (x, r, t, z) = (dx[0], dx[1], dx[2], dx[3]);
            let (i_x, i_r, i_t, i_z) = (0, 1, 2, 3);
            let dtheta_t = h(i_t, i_t) * t + h(i_t, i_r) * r + h(i_t, i_x) * x + h(i_t, i_z) * z;
            let dtheta_r = h(i_r, i_t) * t + h(i_r, i_r) * r + h(i_r, i_x) * x + h(i_r, i_z) * z;
            let top = tt * dtheta_t + (tt * h(i_r, i_x) - h(i_t, i_r) * h(i_t, i_x)) * z;
            top * top / (tt * k) - (tt * h(i_x, i_x) - h(i_t, i_x) * h(i_t, i_x)) / tt * z * z
                - dtheta_t * x
                - dtheta_r * z
        }
    })
}

pub fn metric_det(m: &Metric4) -> C64 {
    det4(&m.g)
}

/// v_{1 1b} v_{2 2b} - v_{1 2b} v_{2 1b}; equals 1 on solutions of the
/// complex Monge-Ampere equation.
pub fn kahler_block_det(j: &Jet4) -> C64 {
    j.h(0, 1) * j.h(2, 3) - j.h(0, 3) * j.h(2, 1)
}

/// dx^T g dx.
pub fn quadratic_form(m: &Metric4, dx: &Point) -> C64 {
    let mut s = zero();
    for mu in 0..4 {
        for nu in 0..4 {
            s += m.g[mu][nu] * dx[mu] * dx[nu];
        }
    }
    s
}

/// Exported sample row.
#[derive(Debug, Clone, Serialize)]
pub struct MetricRow {
    pub point: Point,
    pub components: [[C64; 4]; 4],
    pub det: C64,
}

pub fn metric_row(family: MetricId, j: &Jet4, point: Point) -> Result<MetricRow> {
    let m = metric_at(family, j)?;
    Ok(MetricRow { point, det: metric_det(&m), components: m.g })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c;
    use crate::sampling::{random_direction, random_point, rng_from_seed};
    use approx::assert_relative_eq;

    fn jet_with_hessian(h: [[C64; 4]; 4]) -> Jet4 {
        Jet4::from_parts(zero(), [zero(); 4], h)
    }

    fn random_sym(seed: u64) -> [[C64; 4]; 4] {
        let mut rng = rng_from_seed(seed);
        let p = random_point(&mut rng);
        let q = random_point(&mut rng);
        let mut h = [[zero(); 4]; 4];
        for a in 0..4 {
            for b in a..4 {
                h[a][b] = p[a] * q[b] + p[b] * q[a] + c(0.3 * (a + b) as f64, 0.0);
                h[b][a] = h[a][b];
            }
        }
        h
    }

    #[test]
    fn kahler_flat_potential() {
        let mut h = [[zero(); 4]; 4];
        for (a, b) in [(0, 1), (2, 3)] {
            h[a][b] = c(1., 0.);
            h[b][a] = c(1., 0.);
        }
        let m = metric_at(MetricId::Kahler, &jet_with_hessian(h)).unwrap();
        assert_eq!(m.g[0][1], c(0.5, 0.));
        assert_eq!(m.g[1][0], c(0.5, 0.));
        assert_eq!(m.g[2][3], c(0.5, 0.));
        assert_eq!(m.g[0][0], zero());
        assert_eq!(m.g[0][3], zero());
    }

    #[test]
    fn heavenly_flat_determinant() {
        let m = metric_at(MetricId::Heavenly, &Jet4::zero()).unwrap();
        assert_eq!(metric_det(&m), c(1. / 16., 0.));
        assert_eq!(m.g[0][2], c(0.5, 0.));
        assert_eq!(m.g[1][3], c(0.5, 0.));
    }

    #[test]
    fn matrices_are_symmetric_and_match_line_element() {
        for seed in 0..20 {
            let j = jet_with_hessian(random_sym(seed));
            let mut rng = rng_from_seed(100 + seed);
            for fam in MetricId::ALL {
                let m = metric_at(fam, &j).unwrap();
                for a in 0..4 {
                    for b in 0..4 {
                        assert_eq!(m.g[a][b], m.g[b][a]);
                    }
                }
                for _ in 0..5 {
                    let dx = random_direction(&mut rng);
                    let a = quadratic_form(&m, &dx);
                    let b = line_element(fam, &j, &dx).unwrap();
                    assert!((a - b).norm() <= 1e-10 * (1.0 + b.norm()), "{fam}: {a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn singular_denominators_are_named() {
        let mut h = random_sym(1);
        h[2][2] = zero();
        match metric_at(MetricId::HeavenlyLeg, &jet_with_hessian(h)) {
            Err(Error::SingularDenominator(n)) => assert!(n.contains("theta_tt")),
            r => panic!("{r:?}"),
        }
        let mut h = random_sym(2);
        h[0][1] = zero();
        h[1][0] = zero();
        assert!(matches!(metric_at(MetricId::HcmaLeg, &jet_with_hessian(h)), Err(Error::SingularDenominator(_))));
        // w_pp w_pbpb = w_ppb^2
        let mut h = random_sym(3);
        h[0][0] = c(1., 0.);
        h[1][1] = c(4., 0.);
        h[0][1] = c(2., 0.);
        h[1][0] = c(2., 0.);
        assert!(matches!(metric_at(MetricId::HcmaLeg, &jet_with_hessian(h)), Err(Error::SingularDenominator(_))));
    }

    #[test]
    fn block_determinant_of_flat_potential() {
        let mut h = [[zero(); 4]; 4];
        for (a, b) in [(0, 1), (2, 3)] {
            h[a][b] = c(1., 0.);
            h[b][a] = c(1., 0.);
        }
        assert_relative_eq!(kahler_block_det(&jet_with_hessian(h)).re, 1.0);
    }

    #[test]
    fn names_and_pairing() {
        for m in MetricId::ALL {
            assert_eq!(m.name().parse::<MetricId>().unwrap(), m);
        }
        assert_eq!(MetricId::for_class(ClassId::CmaSq), Some(MetricId::Kahler));
        assert_eq!(MetricId::for_class(ClassId::HcmaII), Some(MetricId::HcmaLeg));
        assert_eq!(MetricId::for_class(ClassId::H2HighI), Some(MetricId::HeavenlyLeg));
        assert_eq!(MetricId::for_class(ClassId::MixedClass), None);
    }
}
