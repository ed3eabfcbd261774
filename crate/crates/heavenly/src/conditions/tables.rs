//! Coefficient tables for the long closed-form polynomials.
//!
//! Each row is one printed term: an integer coefficient times a monomial.
//! Generated once from the printed expressions and kept term-for-term.

use super::Mono;

pub(crate) static DET_EQUAL: &[Mono] = &[
    Mono(-1, &[("a2", 2), ("a3", 1), ("b2", 1), ("b3", 2), ("c3", 3), ("d2", 3)]),
    Mono(1, &[("a2", 2), ("a3", 1), ("b2", 1), ("b3", 2), ("c2", 3), ("d3", 3)]),
    Mono(-1, &[("a2", 2), ("a3", 1), ("c2", 1), ("c3", 2), ("d3", 3), ("b2", 3)]),
    Mono(1, &[("a2", 2), ("a3", 1), ("c2", 1), ("c3", 2), ("b3", 3), ("d2", 3)]),
    Mono(-1, &[("a2", 2), ("a3", 1), ("d2", 1), ("d3", 2), ("b3", 3), ("c2", 3)]),
    Mono(1, &[("a2", 2), ("a3", 1), ("d2", 1), ("d3", 2), ("c3", 3), ("b2", 3)]),
    Mono(1, &[("b2", 2), ("b3", 1), ("a2", 1), ("a3", 2), ("c3", 3), ("d2", 3)]),
    Mono(-1, &[("b2", 2), ("b3", 1), ("a2", 1), ("a3", 2), ("c2", 3), ("d3", 3)]),
    Mono(1, &[("b2", 2), ("b3", 1), ("c2", 1), ("c3", 2), ("d3", 3), ("a2", 3)]),
    Mono(-1, &[("b2", 2), ("b3", 1), ("c2", 1), ("c3", 2), ("a3", 3), ("d2", 3)]),
    Mono(1, &[("b2", 2), ("b3", 1), ("d2", 1), ("d3", 2), ("a3", 3), ("c2", 3)]),
    Mono(-1, &[("b2", 2), ("b3", 1), ("d2", 1), ("d3", 2), ("c3", 3), ("a2", 3)]),
    Mono(1, &[("c2", 2), ("c3", 1), ("a2", 1), ("a3", 2), ("d3", 3), ("b2", 3)]),
    Mono(-1, &[("c2", 2), ("c3", 1), ("a2", 1), ("a3", 2), ("b3", 3), ("d2", 3)]),
    Mono(-1, &[("c2", 2), ("c3", 1), ("b2", 1), ("b3", 2), ("d3", 3), ("a2", 3)]),
    Mono(1, &[("c2", 2), ("c3", 1), ("b2", 1), ("b3", 2), ("a3", 3), ("d2", 3)]),
    Mono(-1, &[("c2", 2), ("c3", 1), ("d2", 1), ("d3", 2), ("a3", 3), ("b2", 3)]),
    Mono(1, &[("c2", 2), ("c3", 1), ("d2", 1), ("d3", 2), ("b3", 3), ("a2", 3)]),
    Mono(1, &[("d2", 2), ("d3", 1), ("a2", 1), ("a3", 2), ("b3", 3), ("c2", 3)]),
    Mono(-1, &[("d2", 2), ("d3", 1), ("a2", 1), ("a3", 2), ("c3", 3), ("b2", 3)]),
    Mono(-1, &[("d2", 2), ("d3", 1), ("b2", 1), ("b3", 2), ("a3", 3), ("c2", 3)]),
    Mono(1, &[("d2", 2), ("d3", 1), ("b2", 1), ("b3", 2), ("c3", 3), ("a2", 3)]),
    Mono(1, &[("d2", 2), ("d3", 1), ("c2", 1), ("c3", 2), ("a3", 3), ("b2", 3)]),
    Mono(-1, &[("d2", 2), ("d3", 1), ("c2", 1), ("c3", 2), ("b3", 3), ("a2", 3)]),
];

pub(crate) static DET_HIGH_I: &[Mono] = &[
    Mono(-1, &[("a1", 2), ("a2", 1), ("b2", 2), ("b1", 1), ("c2", 3), ("d1", 3)]),
    Mono(1, &[("a1", 2), ("a2", 1), ("b2", 2), ("b1", 1), ("c1", 3), ("d2", 3)]),
    Mono(-1, &[("a1", 2), ("a2", 1), ("c2", 2), ("c1", 1), ("d2", 3), ("b1", 3)]),
    Mono(1, &[("a1", 2), ("a2", 1), ("c2", 2), ("c1", 1), ("b2", 3), ("d1", 3)]),
    Mono(-1, &[("a1", 2), ("a2", 1), ("d2", 2), ("d1", 1), ("b2", 3), ("c1", 3)]),
    Mono(1, &[("a1", 2), ("a2", 1), ("d2", 2), ("d1", 1), ("c2", 3), ("b1", 3)]),
    Mono(1, &[("b1", 2), ("b2", 1), ("a2", 2), ("a1", 1), ("c2", 3), ("d1", 3)]),
    Mono(-1, &[("b1", 2), ("b2", 1), ("a2", 2), ("a1", 1), ("c1", 3), ("d2", 3)]),
    Mono(1, &[("b1", 2), ("b2", 1), ("c2", 2), ("c1", 1), ("d2", 3), ("a1", 3)]),
    Mono(-1, &[("b1", 2), ("b2", 1), ("c2", 2), ("c1", 1), ("a2", 3), ("d1", 3)]),
    Mono(1, &[("b1", 2), ("b2", 1), ("d2", 2), ("d1", 1), ("a2", 3), ("c1", 3)]),
    Mono(-1, &[("b1", 2), ("b2", 1), ("d2", 2), ("d1", 1), ("c2", 3), ("a1", 3)]),
    Mono(1, &[("c1", 2), ("c2", 1), ("a2", 2), ("a1", 1), ("d2", 3), ("b1", 3)]),
    Mono(-1, &[("c1", 2), ("c2", 1), ("a2", 2), ("a1", 1), ("b2", 3), ("d1", 3)]),
    Mono(-1, &[("c1", 2), ("c2", 1), ("b2", 2), ("b1", 1), ("d2", 3), ("a1", 3)]),
    Mono(1, &[("c1", 2), ("c2", 1), ("b2", 2), ("b1", 1), ("a2", 3), ("d1", 3)]),
    Mono(-1, &[("c1", 2), ("c2", 1), ("d2", 2), ("d1", 1), ("a2", 3), ("b1", 3)]),
    Mono(1, &[("c1", 2), ("c2", 1), ("d2", 2), ("d1", 1), ("b2", 3), ("a1", 3)]),
    Mono(1, &[("d1", 2), ("d2", 1), ("a2", 2), ("a1", 1), ("b2", 3), ("c1", 3)]),
    Mono(-1, &[("d1", 2), ("d2", 1), ("a2", 2), ("a1", 1), ("c2", 3), ("b1", 3)]),
    Mono(-1, &[("d1", 2), ("d2", 1), ("b2", 2), ("b1", 1), ("a2", 3), ("c1", 3)]),
    Mono(1, &[("d1", 2), ("d2", 1), ("b2", 2), ("b1", 1), ("c2", 3), ("a1", 3)]),
    Mono(1, &[("d1", 2), ("d2", 1), ("c2", 2), ("c1", 1), ("a2", 3), ("b1", 3)]),
    Mono(-1, &[("d1", 2), ("d2", 1), ("c2", 2), ("c1", 1), ("b2", 3), ("a1", 3)]),
];

pub(crate) static DET_HIGH_II: &[Mono] = &[
    Mono(-1, &[("a2", 2), ("a3", 1), ("b2", 1), ("b3", 2), ("c3", 3), ("d2", 3)]),
    Mono(1, &[("a2", 2), ("a3", 1), ("b2", 1), ("b3", 2), ("c2", 3), ("d3", 3)]),
    Mono(-1, &[("a2", 2), ("a3", 1), ("c2", 1), ("c3", 2), ("d3", 3), ("b2", 3)]),
    Mono(1, &[("a2", 2), ("a3", 1), ("c2", 1), ("c3", 2), ("b3", 3), ("d2", 3)]),
    Mono(-1, &[("a2", 2), ("a3", 1), ("d2", 1), ("d3", 2), ("b3", 3), ("c2", 3)]),
    Mono(1, &[("a2", 2), ("a3", 1), ("d2", 1), ("d3", 2), ("c3", 3), ("b2", 3)]),
    Mono(1, &[("b2", 2), ("b3", 1), ("a2", 1), ("a3", 2), ("c3", 3), ("d2", 3)]),
    Mono(-1, &[("b2", 2), ("b3", 1), ("a2", 1), ("a3", 2), ("c2", 3), ("d3", 3)]),
    Mono(1, &[("b2", 2), ("b3", 1), ("c2", 1), ("c3", 2), ("d3", 3), ("a2", 3)]),
    Mono(-1, &[("b2", 2), ("b3", 1), ("c2", 1), ("c3", 2), ("a3", 3), ("d2", 3)]),
    Mono(1, &[("b2", 2), ("b3", 1), ("d2", 1), ("d3", 2), ("a3", 3), ("c2", 3)]),
    Mono(-1, &[("b2", 2), ("b3", 1), ("d2", 1), ("d3", 2), ("c3", 3), ("a2", 3)]),
    Mono(1, &[("c2", 2), ("c3", 1), ("a2", 1), ("a3", 2), ("d3", 3), ("b2", 3)]),
    Mono(-1, &[("c2", 2), ("c3", 1), ("a2", 1), ("a3", 2), ("b3", 3), ("d2", 3)]),
    Mono(-1, &[("c2", 2), ("c3", 1), ("b2", 1), ("b3", 2), ("d3", 3), ("a2", 3)]),
    Mono(1, &[("c2", 2), ("c3", 1), ("b2", 1), ("b3", 2), ("a3", 3), ("d2", 3)]),
    Mono(-1, &[("c2", 2), ("c3", 1), ("d2", 1), ("d3", 2), ("a3", 3), ("b2", 3)]),
    Mono(1, &[("c2", 2), ("c3", 1), ("d2", 1), ("d3", 2), ("b3", 3), ("a2", 3)]),
    Mono(1, &[("d2", 2), ("d3", 1), ("a2", 1), ("a3", 2), ("b3", 3), ("c2", 3)]),
    Mono(-1, &[("d2", 2), ("d3", 1), ("a2", 1), ("a3", 2), ("c3", 3), ("b2", 3)]),
    Mono(-1, &[("d2", 2), ("d3", 1), ("b2", 1), ("b3", 2), ("a3", 3), ("c2", 3)]),
    Mono(1, &[("d2", 2), ("d3", 1), ("b2", 1), ("b3", 2), ("c3", 3), ("a2", 3)]),
    Mono(1, &[("d2", 2), ("d3", 1), ("c2", 1), ("c3", 2), ("a3", 3), ("b2", 3)]),
    Mono(-1, &[("d2", 2), ("d3", 1), ("c2", 1), ("c3", 2), ("b3", 3), ("a2", 3)]),
];

pub(crate) static DET_MIXED: &[Mono] = &[
    Mono(-1, &[("a1", 1), ("a2", 2), ("b2", 3), ("c2", 1), ("c1", 2), ("d1", 3)]),
    Mono(1, &[("a1", 1), ("a2", 2), ("b2", 3), ("d2", 1), ("c1", 3), ("d1", 2)]),
    Mono(-1, &[("a1", 1), ("a2", 2), ("c2", 3), ("d2", 1), ("d1", 2), ("b1", 3)]),
    Mono(1, &[("a1", 1), ("a2", 2), ("c2", 3), ("b2", 1), ("b1", 2), ("d1", 3)]),
    Mono(-1, &[("a1", 1), ("a2", 2), ("d2", 3), ("b2", 1), ("b1", 2), ("c1", 3)]),
    Mono(1, &[("a1", 1), ("a2", 2), ("d2", 3), ("c2", 1), ("c1", 2), ("b1", 3)]),
    Mono(1, &[("b1", 1), ("b2", 2), ("a2", 3), ("c2", 1), ("c1", 2), ("d1", 3)]),
    Mono(-1, &[("b1", 1), ("b2", 2), ("a2", 3), ("d2", 1), ("c1", 3), ("d1", 2)]),
    Mono(1, &[("b1", 1), ("b2", 2), ("c2", 3), ("d2", 1), ("d1", 2), ("a1", 3)]),
    Mono(-1, &[("b1", 1), ("b2", 2), ("c2", 3), ("a2", 1), ("a1", 2), ("d1", 3)]),
    Mono(1, &[("b1", 1), ("b2", 2), ("d2", 3), ("a2", 1), ("a1", 2), ("c1", 3)]),
    Mono(-1, &[("b1", 1), ("b2", 2), ("d2", 3), ("c2", 1), ("c1", 2), ("a1", 3)]),
    Mono(1, &[("c1", 1), ("c2", 2), ("a2", 3), ("d2", 1), ("d1", 2), ("b1", 3)]),
    Mono(-1, &[("c1", 1), ("c2", 2), ("a2", 3), ("b2", 1), ("b1", 2), ("d1", 3)]),
    Mono(-1, &[("c1", 1), ("c2", 2), ("b2", 3), ("d2", 1), ("d1", 2), ("a1", 3)]),
    Mono(1, &[("c1", 1), ("c2", 2), ("b2", 3), ("a2", 1), ("a1", 2), ("d1", 3)]),
    Mono(-1, &[("c1", 1), ("c2", 2), ("d2", 3), ("a2", 1), ("a1", 2), ("b1", 3)]),
    Mono(1, &[("c1", 1), ("c2", 2), ("d2", 3), ("b2", 1), ("b1", 2), ("a1", 3)]),
    Mono(1, &[("d1", 1), ("d2", 2), ("a2", 3), ("b2", 1), ("b1", 2), ("c1", 3)]),
    Mono(-1, &[("d1", 1), ("d2", 2), ("a2", 3), ("c2", 1), ("c1", 2), ("b1", 3)]),
    Mono(-1, &[("d1", 1), ("d2", 2), ("b2", 3), ("a2", 1), ("a1", 2), ("c1", 3)]),
    Mono(1, &[("d1", 1), ("d2", 2), ("b2", 3), ("c2", 1), ("c1", 2), ("a1", 3)]),
    Mono(1, &[("d1", 1), ("d2", 2), ("c2", 3), ("a2", 1), ("a1", 2), ("b1", 3)]),
    Mono(-1, &[("d1", 1), ("d2", 2), ("c2", 3), ("b2", 1), ("b1", 2), ("a1", 3)]),
];

pub(crate) static HIGH_I_COND_12: &[Mono] = &[
    Mono(1, &[("b2", 4), ("a1", 2), ("c1", 2), ("d1", 2), ("a2", 2)]),
    Mono(-2, &[("a2", 3), ("b1", 1), ("c1", 2), ("d1", 2), ("b2", 3), ("a1", 1)]),
    Mono(1, &[("a2", 4), ("b1", 2), ("c1", 2), ("d1", 2), ("b2", 2)]),
];

pub(crate) static HIGH_I_COND_13: &[Mono] = &[
    Mono(-2, &[("a2", 3), ("b1", 2), ("c1", 1), ("d1", 2), ("c2", 3), ("a1", 1)]),
    Mono(1, &[("c2", 4), ("a1", 2), ("b1", 2), ("d1", 2), ("a2", 2)]),
    Mono(1, &[("a2", 4), ("b1", 2), ("c1", 2), ("d1", 2), ("c2", 2)]),
];

pub(crate) static HIGH_I_COND_14: &[Mono] = &[
    Mono(-2, &[("a2", 3), ("b1", 2), ("c1", 2), ("d1", 1), ("d2", 3), ("a1", 1)]),
    Mono(1, &[("a2", 4), ("b1", 2), ("c1", 2), ("d1", 2), ("d2", 2)]),
    Mono(1, &[("d2", 4), ("a1", 2), ("b1", 2), ("c1", 2), ("a2", 2)]),
];

pub(crate) static HIGH_I_COND_23: &[Mono] = &[
    Mono(1, &[("c2", 4), ("a1", 2), ("b1", 2), ("d1", 2), ("b2", 2)]),
    Mono(1, &[("b2", 4), ("a1", 2), ("c1", 2), ("d1", 2), ("c2", 2)]),
    Mono(-2, &[("b2", 3), ("a1", 2), ("c1", 1), ("d1", 2), ("c2", 3), ("b1", 1)]),
];

pub(crate) static HIGH_I_COND_24: &[Mono] = &[
    Mono(-2, &[("b2", 3), ("a1", 2), ("c1", 2), ("d1", 1), ("d2", 3), ("b1", 1)]),
    Mono(1, &[("b2", 4), ("a1", 2), ("c1", 2), ("d1", 2), ("d2", 2)]),
    Mono(1, &[("d2", 4), ("a1", 2), ("b1", 2), ("c1", 2), ("b2", 2)]),
];

pub(crate) static HIGH_I_COND_34: &[Mono] = &[
    Mono(1, &[("d2", 4), ("a1", 2), ("b1", 2), ("c1", 2), ("c2", 2)]),
    Mono(1, &[("c2", 4), ("a1", 2), ("b1", 2), ("d1", 2), ("d2", 2)]),
    Mono(-2, &[("c2", 3), ("a1", 2), ("b1", 2), ("d1", 1), ("d2", 3), ("c1", 1)]),
];

pub(crate) static MIX_COND_N1: &[Mono] = &[
    Mono(1, &[("b2", 4), ("c2", 2), ("d2", 2), ("a1", 4)]),
    Mono(1, &[("a2", 4), ("c2", 2), ("d2", 2), ("b1", 4)]),
    Mono(1, &[("a1", 2), ("a2", 2), ("c2", 2), ("d2", 2), ("b1", 4)]),
    Mono(2, &[("a1", 1), ("a2", 3), ("c2", 2), ("d2", 2), ("b1", 4)]),
    Mono(1, &[("a2", 4), ("c2", 2), ("d2", 2), ("b1", 2), ("b2", 2)]),
    Mono(1, &[("a1", 2), ("a2", 2), ("c2", 2), ("d2", 2), ("b2", 4)]),
    Mono(-2, &[("b2", 1), ("c2", 2), ("d2", 2), ("a1", 1), ("a2", 3), ("b1", 3)]),
    Mono(-2, &[("b2", 3), ("c2", 2), ("d2", 2), ("a1", 1), ("a2", 3), ("b1", 1)]),
    Mono(2, &[("b1", 1), ("b2", 3), ("c2", 2), ("d2", 2), ("a1", 2), ("a2", 2)]),
    Mono(-2, &[("b2", 1), ("c2", 2), ("d2", 2), ("a1", 3), ("a2", 1), ("b1", 3)]),
    Mono(-2, &[("b2", 2), ("c2", 2), ("d2", 2), ("a1", 3), ("a2", 1), ("b1", 2)]),
    Mono(-2, &[("b2", 3), ("c2", 2), ("d2", 2), ("a1", 3), ("a2", 1), ("b1", 1)]),
    Mono(2, &[("a1", 2), ("a2", 2), ("c2", 2), ("d2", 2), ("b1", 2), ("b2", 2)]),
    Mono(2, &[("a1", 1), ("a2", 3), ("c2", 2), ("d2", 2), ("b1", 2), ("b2", 2)]),
    Mono(1, &[("b1", 2), ("b2", 2), ("c2", 2), ("d2", 2), ("a1", 4)]),
    Mono(2, &[("b1", 1), ("b2", 3), ("c2", 2), ("d2", 2), ("a1", 4)]),
    Mono(-2, &[("b2", 4), ("c2", 2), ("d2", 2), ("a1", 3), ("a2", 1)]),
    Mono(-2, &[("b2", 1), ("c2", 2), ("d2", 2), ("a2", 4), ("b1", 3)]),
    Mono(-2, &[("b2", 1), ("c2", 2), ("d2", 2), ("a1", 2), ("a2", 2), ("b1", 3)]),
];

pub(crate) static MIX_COND_N2: &[Mono] = &[
    Mono(1, &[("a1", 2), ("a2", 2), ("b2", 2), ("d2", 2), ("c2", 4)]),
    Mono(2, &[("a1", 1), ("a2", 3), ("b2", 2), ("d2", 2), ("c1", 4)]),
    Mono(1, &[("a2", 4), ("b2", 2), ("d2", 2), ("c1", 4)]),
    Mono(1, &[("c2", 4), ("b2", 2), ("d2", 2), ("a1", 4)]),
    Mono(2, &[("c1", 1), ("c2", 3), ("b2", 2), ("d2", 2), ("a1", 4)]),
    Mono(-2, &[("b2", 2), ("c2", 4), ("d2", 2), ("a1", 3), ("a2", 1)]),
    Mono(1, &[("a2", 4), ("b2", 2), ("d2", 2), ("c1", 2), ("c2", 2)]),
    Mono(1, &[("c1", 2), ("b2", 2), ("c2", 2), ("d2", 2), ("a1", 4)]),
    Mono(1, &[("a1", 2), ("a2", 2), ("b2", 2), ("d2", 2), ("c1", 4)]),
    Mono(-2, &[("b2", 2), ("c2", 1), ("d2", 2), ("a1", 2), ("a2", 2), ("c1", 3)]),
    Mono(-2, &[("b2", 2), ("c2", 1), ("d2", 2), ("a2", 4), ("c1", 3)]),
    Mono(2, &[("a1", 1), ("a2", 3), ("b2", 2), ("d2", 2), ("c1", 2), ("c2", 2)]),
    Mono(2, &[("c1", 1), ("c2", 3), ("b2", 2), ("d2", 2), ("a1", 2), ("a2", 2)]),
    Mono(-2, &[("b2", 2), ("c2", 1), ("d2", 2), ("a1", 3), ("a2", 1), ("c1", 3)]),
    Mono(-2, &[("b2", 2), ("c2", 1), ("d2", 2), ("a1", 1), ("a2", 3), ("c1", 3)]),
    Mono(-2, &[("b2", 2), ("c2", 3), ("d2", 2), ("a1", 1), ("a2", 3), ("c1", 1)]),
    Mono(2, &[("a1", 2), ("a2", 2), ("b2", 2), ("d2", 2), ("c1", 2), ("c2", 2)]),
    Mono(-2, &[("b2", 2), ("c2", 2), ("d2", 2), ("a1", 3), ("a2", 1), ("c1", 2)]),
    Mono(-2, &[("b2", 2), ("c2", 3), ("d2", 2), ("a1", 3), ("a2", 1), ("c1", 1)]),
];

pub(crate) static MIX_COND_N3: &[Mono] = &[
    Mono(1, &[("d1", 2), ("b2", 2), ("c2", 2), ("d2", 2), ("a1", 4)]),
    Mono(2, &[("d1", 1), ("d2", 3), ("b2", 2), ("c2", 2), ("a1", 4)]),
    Mono(2, &[("a1", 1), ("a2", 3), ("b2", 2), ("c2", 2), ("d1", 2), ("d2", 2)]),
    Mono(1, &[("d2", 4), ("b2", 2), ("c2", 2), ("a1", 4)]),
    Mono(1, &[("a1", 2), ("a2", 2), ("b2", 2), ("c2", 2), ("d2", 4)]),
    Mono(2, &[("d1", 1), ("d2", 3), ("b2", 2), ("c2", 2), ("a1", 2), ("a2", 2)]),
    Mono(-2, &[("b2", 2), ("c2", 2), ("d2", 4), ("a1", 3), ("a2", 1)]),
    Mono(-2, &[("b2", 2), ("c2", 2), ("d2", 1), ("a2", 4), ("d1", 3)]),
    Mono(1, &[("a2", 4), ("b2", 2), ("c2", 2), ("d1", 4)]),
    Mono(1, &[("a2", 4), ("b2", 2), ("c2", 2), ("d1", 2), ("d2", 2)]),
    Mono(2, &[("a1", 2), ("a2", 2), ("b2", 2), ("c2", 2), ("d1", 2), ("d2", 2)]),
    Mono(-2, &[("b2", 2), ("c2", 2), ("d2", 3), ("a1", 3), ("a2", 1), ("d1", 1)]),
    Mono(-2, &[("b2", 2), ("c2", 2), ("d2", 1), ("a1", 2), ("a2", 2), ("d1", 3)]),
    Mono(-2, &[("b2", 2), ("c2", 2), ("d2", 1), ("a1", 1), ("a2", 3), ("d1", 3)]),
    Mono(-2, &[("b2", 2), ("c2", 2), ("d2", 2), ("a1", 3), ("a2", 1), ("d1", 2)]),
    Mono(-2, &[("b2", 2), ("c2", 2), ("d2", 1), ("a1", 3), ("a2", 1), ("d1", 3)]),
    Mono(1, &[("a1", 2), ("a2", 2), ("b2", 2), ("c2", 2), ("d1", 4)]),
    Mono(-2, &[("b2", 2), ("c2", 2), ("d2", 3), ("a1", 1), ("a2", 3), ("d1", 1)]),
    Mono(2, &[("a1", 1), ("a2", 3), ("b2", 2), ("c2", 2), ("d1", 4)]),
];

pub(crate) static MIX_COND_N4: &[Mono] = &[
    Mono(2, &[("b1", 1), ("b2", 3), ("a2", 2), ("d2", 2), ("c1", 4)]),
    Mono(1, &[("b1", 2), ("a2", 2), ("b2", 2), ("d2", 2), ("c2", 4)]),
    Mono(1, &[("b1", 2), ("a2", 2), ("b2", 2), ("d2", 2), ("c1", 4)]),
    Mono(-2, &[("a2", 2), ("c2", 3), ("d2", 2), ("b1", 3), ("b2", 1), ("c1", 1)]),
    Mono(-2, &[("a2", 2), ("c2", 1), ("d2", 2), ("b1", 2), ("b2", 2), ("c1", 3)]),
    Mono(-2, &[("a2", 2), ("c2", 1), ("d2", 2), ("b2", 4), ("c1", 3)]),
    Mono(-2, &[("a2", 2), ("c2", 4), ("d2", 2), ("b1", 3), ("b2", 1)]),
    Mono(-2, &[("a2", 2), ("c2", 1), ("d2", 2), ("b1", 3), ("b2", 1), ("c1", 3)]),
    Mono(-2, &[("a2", 2), ("c2", 2), ("d2", 2), ("b1", 3), ("b2", 1), ("c1", 2)]),
    Mono(2, &[("c1", 1), ("c2", 3), ("a2", 2), ("d2", 2), ("b1", 2), ("b2", 2)]),
    Mono(1, &[("b2", 4), ("a2", 2), ("d2", 2), ("c1", 2), ("c2", 2)]),
    Mono(1, &[("b2", 4), ("a2", 2), ("d2", 2), ("c1", 4)]),
    Mono(1, &[("c2", 4), ("a2", 2), ("d2", 2), ("b1", 4)]),
    Mono(2, &[("c1", 1), ("c2", 3), ("a2", 2), ("d2", 2), ("b1", 4)]),
    Mono(2, &[("b1", 1), ("b2", 3), ("a2", 2), ("d2", 2), ("c1", 2), ("c2", 2)]),
    Mono(2, &[("b1", 2), ("a2", 2), ("b2", 2), ("d2", 2), ("c1", 2), ("c2", 2)]),
    Mono(1, &[("c1", 2), ("a2", 2), ("c2", 2), ("d2", 2), ("b1", 4)]),
    Mono(-2, &[("a2", 2), ("c2", 1), ("d2", 2), ("b1", 1), ("b2", 3), ("c1", 3)]),
    Mono(-2, &[("a2", 2), ("c2", 3), ("d2", 2), ("b1", 1), ("b2", 3), ("c1", 1)]),
];

pub(crate) static MIX_COND_N5: &[Mono] = &[
    Mono(1, &[("b1", 2), ("a2", 2), ("b2", 2), ("c2", 2), ("d2", 4)]),
    Mono(-2, &[("a2", 2), ("c2", 2), ("d2", 1), ("b2", 4), ("d1", 3)]),
    Mono(2, &[("b1", 1), ("b2", 3), ("a2", 2), ("c2", 2), ("d1", 2), ("d2", 2)]),
    Mono(1, &[("b1", 2), ("a2", 2), ("b2", 2), ("c2", 2), ("d1", 4)]),
    Mono(-2, &[("a2", 2), ("c2", 2), ("d2", 4), ("b1", 3), ("b2", 1)]),
    Mono(1, &[("b2", 4), ("a2", 2), ("c2", 2), ("d1", 2), ("d2", 2)]),
    Mono(2, &[("d1", 1), ("d2", 3), ("a2", 2), ("c2", 2), ("b1", 2), ("b2", 2)]),
    Mono(2, &[("d1", 1), ("d2", 3), ("a2", 2), ("c2", 2), ("b1", 4)]),
    Mono(2, &[("b1", 1), ("b2", 3), ("a2", 2), ("c2", 2), ("d1", 4)]),
    Mono(2, &[("b1", 2), ("a2", 2), ("b2", 2), ("c2", 2), ("d1", 2), ("d2", 2)]),
    Mono(1, &[("d1", 2), ("a2", 2), ("c2", 2), ("d2", 2), ("b1", 4)]),
    Mono(1, &[("d2", 4), ("a2", 2), ("c2", 2), ("b1", 4)]),
    Mono(-2, &[("a2", 2), ("c2", 2), ("d2", 3), ("b1", 1), ("b2", 3), ("d1", 1)]),
    Mono(-2, &[("a2", 2), ("c2", 2), ("d2", 1), ("b1", 3), ("b2", 1), ("d1", 3)]),
    Mono(1, &[("b2", 4), ("a2", 2), ("c2", 2), ("d1", 4)]),
    Mono(-2, &[("a2", 2), ("c2", 2), ("d2", 3), ("b1", 3), ("b2", 1), ("d1", 1)]),
    Mono(-2, &[("a2", 2), ("c2", 2), ("d2", 1), ("b1", 2), ("b2", 2), ("d1", 3)]),
    Mono(-2, &[("a2", 2), ("c2", 2), ("d2", 1), ("b1", 1), ("b2", 3), ("d1", 3)]),
    Mono(-2, &[("a2", 2), ("c2", 2), ("d2", 2), ("b1", 3), ("b2", 1), ("d1", 2)]),
];

pub(crate) static MIX_COND_N6: &[Mono] = &[
    Mono(2, &[("c1", 1), ("c2", 3), ("a2", 2), ("b2", 2), ("d1", 4)]),
    Mono(1, &[("c2", 4), ("a2", 2), ("b2", 2), ("d1", 2), ("d2", 2)]),
    Mono(2, &[("d1", 1), ("d2", 3), ("a2", 2), ("b2", 2), ("c1", 4)]),
    Mono(-2, &[("a2", 2), ("b2", 2), ("d2", 3), ("c1", 3), ("c2", 1), ("d1", 1)]),
    Mono(-2, &[("a2", 2), ("b2", 2), ("d2", 1), ("c1", 2), ("c2", 2), ("d1", 3)]),
    Mono(1, &[("c1", 2), ("a2", 2), ("b2", 2), ("c2", 2), ("d2", 4)]),
    Mono(1, &[("d1", 2), ("a2", 2), ("b2", 2), ("d2", 2), ("c1", 4)]),
    Mono(-2, &[("a2", 2), ("b2", 2), ("d2", 2), ("c1", 3), ("c2", 1), ("d1", 2)]),
    Mono(-2, &[("a2", 2), ("b2", 2), ("d2", 1), ("c2", 4), ("d1", 3)]),
    Mono(1, &[("c1", 2), ("a2", 2), ("b2", 2), ("c2", 2), ("d1", 4)]),
    Mono(-2, &[("a2", 2), ("b2", 2), ("d2", 1), ("c1", 3), ("c2", 1), ("d1", 3)]),
    Mono(-2, &[("a2", 2), ("b2", 2), ("d2", 4), ("c1", 3), ("c2", 1)]),
    Mono(-2, &[("a2", 2), ("b2", 2), ("d2", 1), ("c1", 1), ("c2", 3), ("d1", 3)]),
    Mono(-2, &[("a2", 2), ("b2", 2), ("d2", 3), ("c1", 1), ("c2", 3), ("d1", 1)]),
    Mono(1, &[("c2", 4), ("a2", 2), ("b2", 2), ("d1", 4)]),
    Mono(1, &[("d2", 4), ("a2", 2), ("b2", 2), ("c1", 4)]),
    Mono(2, &[("d1", 1), ("d2", 3), ("a2", 2), ("b2", 2), ("c1", 2), ("c2", 2)]),
    Mono(2, &[("c1", 2), ("a2", 2), ("b2", 2), ("c2", 2), ("d1", 2), ("d2", 2)]),
    Mono(2, &[("c1", 1), ("c2", 3), ("a2", 2), ("b2", 2), ("d1", 2), ("d2", 2)]),
];

pub(crate) static HCMA3_COND_12: &[Mono] = &[
    Mono(-4, &[("B4", 2), ("B3", 2), ("A2", 2), ("Dinv", 2)]),
    Mono(2, &[("A2", 2), ("B4", 3), ("S", 1), ("Dinv", 2)]),
    Mono(2, &[("A2", 2), ("B3", 3), ("S", 1), ("Dinv", 2)]),
    Mono(-2, &[("A2", 2), ("B4", 1), ("B3", 3), ("Dinv", 2)]),
    Mono(-2, &[("A2", 2), ("B4", 3), ("B3", 1), ("Dinv", 2)]),
    Mono(2, &[("B4", 1), ("B3", 2), ("A2", 2), ("Dinv", 1)]),
    Mono(2, &[("B3", 1), ("B4", 2), ("A2", 2), ("Dinv", 1)]),
    Mono(-2, &[("A2", 2), ("B4", 2), ("S", 1), ("Dinv", 1)]),
    Mono(-2, &[("B3", 2), ("A2", 2), ("S", 1), ("Dinv", 1)]),
    Mono(2, &[("B3", 2), ("B4", 1), ("A2", 2), ("S", 1), ("Dinv", 2)]),
    Mono(2, &[("B4", 2), ("B3", 1), ("A2", 2), ("S", 1), ("Dinv", 2)]),
    Mono(2, &[("A2", 2), ("B4", 3), ("Dinv", 1)]),
    Mono(-2, &[("A2", 2), ("B4", 4), ("Dinv", 2)]),
    Mono(-2, &[("A2", 2), ("B3", 4), ("Dinv", 2)]),
    Mono(2, &[("A2", 2), ("B3", 3), ("Dinv", 1)]),
    Mono(-1, &[("B4", 2), ("A2", 2)]),
    Mono(-1, &[("B3", 2), ("A2", 2)]),
];

pub(crate) static HCMA3_COND_24: &[Mono] = &[
    Mono(2, &[("H2", 2), ("B4", 3), ("S", 1), ("Dinv", 2)]),
    Mono(2, &[("H2", 2), ("B3", 3), ("S", 1), ("Dinv", 2)]),
    Mono(-4, &[("B4", 2), ("B3", 2), ("H2", 2), ("Dinv", 2)]),
    Mono(-2, &[("H2", 2), ("B4", 4), ("Dinv", 2)]),
    Mono(-2, &[("H2", 2), ("B3", 4), ("Dinv", 2)]),
    Mono(-2, &[("B4", 1), ("B3", 2), ("H2", 2), ("Dinv", 1)]),
    Mono(-2, &[("B3", 1), ("B4", 2), ("H2", 2), ("Dinv", 1)]),
    Mono(-1, &[("H2", 2), ("B3", 2)]),
    Mono(-1, &[("H2", 2), ("B4", 2)]),
    Mono(2, &[("H2", 2), ("B4", 2), ("S", 1), ("Dinv", 1)]),
    Mono(-2, &[("H2", 2), ("B4", 1), ("B3", 3), ("Dinv", 2)]),
    Mono(-2, &[("H2", 2), ("B4", 3), ("B3", 1), ("Dinv", 2)]),
    Mono(2, &[("B3", 2), ("H2", 2), ("S", 1), ("Dinv", 1)]),
    Mono(2, &[("H2", 2), ("B4", 2), ("B3", 1), ("S", 1), ("Dinv", 2)]),
    Mono(-2, &[("H2", 2), ("B3", 3), ("Dinv", 1)]),
    Mono(-2, &[("H2", 2), ("B4", 3), ("Dinv", 1)]),
    Mono(2, &[("B3", 2), ("H2", 2), ("B4", 1), ("S", 1), ("Dinv", 2)]),
];
