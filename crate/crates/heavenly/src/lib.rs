//! Verification engine for functionally invariant solutions of the heavenly
//! equations and their relatives.
//!
//! Solutions are sums of arbitrary one-variable functions of linear forms.
//! The crate evaluates them through exact second-order jets, checks them
//! against each equation, evaluates the side conditions that make a class
//! usable (Legendre existence, independence of the four arguments), and
//! rebuilds the polynomial conditions on the form coefficients from scratch.

pub mod ansatz;
pub mod catalog;
pub mod conditions;
pub mod determining;
mod error;
pub mod exact;
pub mod fd;
pub mod jet;
pub mod metrics;
pub mod pde;
pub mod sampling;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result, Violation};

pub type C64 = num_complex::Complex64;

/// Shorthand constructor for a complex double.
pub const fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Parses `1.5`, `-2i`, `i`, `0.5+2i`, `3-1e-3i`.
pub fn parse_complex(s: &str) -> Result<C64> {
    let t: String = s.chars().filter(|ch| !ch.is_whitespace()).collect();
    let bad = || Error::Parse(format!("not a complex number: `{s}`"));
    if t.is_empty() {
        return Err(bad());
    }
    let Some(body) = t.strip_suffix('i') else {
        return t.parse::<f64>().map(|r| c(r, 0.0)).map_err(|_| bad());
    };
    // Split at the last sign that is not part of an exponent.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        v => v.parse::<f64>().map_err(|_| bad())?,
    };
    let re = re.parse::<f64>().map_err(|_| bad())?;
    Ok(c(re, im))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_literals() {
        assert_eq!(parse_complex("1.5").unwrap(), c(1.5, 0.0));
        assert_eq!(parse_complex("i").unwrap(), c(0.0, 1.0));
        assert_eq!(parse_complex("-2i").unwrap(), c(0.0, -2.0));
        assert_eq!(parse_complex("0.5+2i").unwrap(), c(0.5, 2.0));
        assert_eq!(parse_complex("1e-3-1e-3i").unwrap(), c(1e-3, -1e-3));
        assert_eq!(parse_complex("1-i").unwrap(), c(1.0, -1.0));
        assert!(parse_complex("x").is_err());
        assert!(parse_complex("").is_err());
    }
}
