//! JSON formats and command implementations for the `hopfhom` tool.
//!
//! The mathematics lives in `hopfhom_core`; this crate adds file IO, the
//! choice of scalar field at run time, and machine-readable reports.

pub mod commands;
pub mod formats;

use std::fmt;
use std::str::FromStr;

/// Fields selectable at run time.
pub const PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldChoice {
    Rational,
    Prime(u64),
}

impl FromStr for FieldChoice {
    type Err = String;

    /// Accepts `Q`, `GF(p)`, `GFp` and `p`.
    fn from_str(s: &str) -> Result<Self, String> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(FieldChoice::Rational);
        }
        let digits = t
            .strip_prefix("GF")
            .or_else(|| t.strip_prefix("gf"))
            .map(|r| r.trim_start_matches('(').trim_end_matches(')'))
            .unwrap_or(t);
        match digits.parse::<u64>() {
            Ok(p) if PRIMES.contains(&p) => Ok(FieldChoice::Prime(p)),
            _ => Err(format!("unsupported field {s:?}; use Q or GF(p) with p in {PRIMES:?}")),
        }
    }
}

impl fmt::Display for FieldChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldChoice::Rational => write!(f, "Q"),
            FieldChoice::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

/// Runs `$body` with the type alias `$F` bound to the chosen field.
#[macro_export]
macro_rules! with_field {
    ($choice:expr, $F:ident => $body:expr) => {{
        use hopfhom_core::field::{Fp, Rational};
        match $choice {
            $crate::FieldChoice::Rational => {
                type $F = Rational;
                $body
            }
            $crate::FieldChoice::Prime(2) => {
                type $F = Fp<2>;
                $body
            }
            $crate::FieldChoice::Prime(3) => {
                type $F = Fp<3>;
                $body
            }
            $crate::FieldChoice::Prime(5) => {
                type $F = Fp<5>;
                $body
            }
            $crate::FieldChoice::Prime(7) => {
                type $F = Fp<7>;
                $body
            }
            $crate::FieldChoice::Prime(11) => {
                type $F = Fp<11>;
                $body
            }
            $crate::FieldChoice::Prime(13) => {
                type $F = Fp<13>;
                $body
            }
            $crate::FieldChoice::Prime(p) => unreachable!("GF({p}) is rejected when parsing"),
        }
    }};
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_names() {
        assert_eq!("Q".parse(), Ok(FieldChoice::Rational));
        assert_eq!("GF(7)".parse(), Ok(FieldChoice::Prime(7)));
        assert_eq!("gf13".parse(), Ok(FieldChoice::Prime(13)));
        assert!("GF(17)".parse::<FieldChoice>().is_err());
        assert!("GF(4)".parse::<FieldChoice>().is_err());
        assert_eq!(FieldChoice::Prime(5).to_string(), "GF(5)");
    }
}
