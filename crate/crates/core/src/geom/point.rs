//! Rational points of the projective plane.

use std::fmt;

use num_traits::Zero;

use crate::algebra::{format_rational, parse_rational, Rational};

/// A point of P² with rational coordinates, normalized so the first nonzero
/// coordinate equals 1. Equality is equality of normalized triples.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct ProjPoint {
    coords: [Rational; 3],
}

impl ProjPoint {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Result<Self, String> {
        let mut coords = [x, y, z];
        let lead = coords.iter().position(|c| !c.is_zero());
        match lead {
            None => Err("projective point must have a nonzero coordinate".to_string()),
            Some(i) => {
                let inv = coords[i].clone().recip();
                for c in coords.iter_mut() {
                    *c = c.clone() * &inv;
                }
                Ok(ProjPoint { coords })
            }
        }
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        Self::new(
            Rational::from_integer(x.into()),
            Rational::from_integer(y.into()),
            Rational::from_integer(z.into()),
        )
        .expect("nonzero triple")
    }

    pub fn coords(&self) -> &[Rational; 3] {
        &self.coords
    }

    /// Index of the leading (first nonzero, hence = 1) coordinate.
    pub fn lead_index(&self) -> usize {
        self.coords.iter().position(|c| !c.is_zero()).unwrap()
    }

    /// Parses the `"[a/b : c : d]"` format (brackets optional).
    pub fn parse(s: &str) -> Result<Self, String> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("expected three `:`-separated coordinates in `{s}`"));
        }
        let c: Result<Vec<Rational>, String> = parts.iter().map(|p| parse_rational(p)).collect();
        let c = c?;
        ProjPoint::new(c[0].clone(), c[1].clone(), c[2].clone())
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{} : {} : {}]",
            format_rational(&self.coords[0]),
            format_rational(&self.coords[1]),
            format_rational(&self.coords[2])
        )
    }
}
