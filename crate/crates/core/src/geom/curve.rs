//! Plane projective curves given by squarefree homogeneous equations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{gcd, parse_poly, MultiPoly};

use super::XYZ;

/// Errors from curve construction and intersection queries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeomError {
    NotHomogeneous,
    ZeroEquation,
    NotSquarefree,
    /// Two curves share a component where the operation needs them to not.
    CommonComponent,
    /// The composed map vanishes identically on the curve.
    MapUndefinedOnCurve,
    /// Runaway recursion guard in the intersection algorithm.
    InternalLimit,
    /// `conic_through` constraints force a non-squarefree conic.
    DegenerateConditions,
    PointNotOnCurve,
    Other(String),
}

impl fmt::Display for GeomError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeomError::NotHomogeneous => write!(f, "equation is not homogeneous"),
            GeomError::ZeroEquation => write!(f, "equation is identically zero"),
            GeomError::NotSquarefree => write!(f, "equation has a repeated factor"),
            GeomError::CommonComponent => write!(f, "curves share a common component"),
            GeomError::MapUndefinedOnCurve => write!(f, "map is undefined along the curve"),
            GeomError::InternalLimit => write!(f, "internal recursion limit exceeded"),
            GeomError::DegenerateConditions => write!(f, "conditions force a degenerate conic"),
            GeomError::PointNotOnCurve => write!(f, "point does not lie on the curve"),
            GeomError::Other(s) => write!(f, "{s}"),
        }
    }
}

impl std::error::Error for GeomError {}

/// A plane curve: a squarefree homogeneous polynomial in x, y, z together
/// with its degree. The equation is stored primitive and sign-normalized, so
/// equal curves have equal equations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlaneCurve {
    equation: MultiPoly,
    degree: u32,
    irreducible: Option<bool>,
}

/// Serialized form: `{"equation": "<poly>", "irreducible": true|false|null}`.
#[derive(Serialize, Deserialize)]
pub struct CurveFile {
    pub equation: String,
    pub irreducible: Option<bool>,
}

impl PlaneCurve {
    /// Builds a curve, checking homogeneity and squarefreeness.
    ///
    /// Irreducibility is the caller's assertion and is stored, never
    /// verified.
    pub fn new(equation: MultiPoly, irreducible: Option<bool>) -> Result<Self, GeomError> {
        if equation.is_zero() {
            return Err(GeomError::ZeroEquation);
        }
        let degree = equation.homogeneous_degree().ok_or(GeomError::NotHomogeneous)?;
        if degree == 0 {
            return Err(GeomError::ZeroEquation);
        }
        let equation = equation.primitive_part();
        // Squarefree over Q of characteristic 0: a repeated factor divides
        // the equation and all three partials.
        let mut g = equation.clone();
        for v in 0..3 {
            g = gcd(&g, &equation.derivative(v));
        }
        if !g.is_constant() {
            return Err(GeomError::NotSquarefree);
        }
        Ok(PlaneCurve {
            equation,
            degree,
            irreducible,
        })
    }

    pub fn parse(text: &str, irreducible: Option<bool>) -> Result<Self, GeomError> {
        let eq = parse_poly(text, &XYZ).map_err(|e| GeomError::Other(e.to_string()))?;
        Self::new(eq, irreducible)
    }

    /// A line `a x + b y + c z = 0`.
    pub fn line(a: i64, b: i64, c: i64) -> Self {
        let p = MultiPoly::from_terms(
            &XYZ,
            &[
                (&[1, 0, 0], crate::algebra::rat(a, 1)),
                (&[0, 1, 0], crate::algebra::rat(b, 1)),
                (&[0, 0, 1], crate::algebra::rat(c, 1)),
            ],
        );
        Self::new(p, Some(true)).expect("a line is squarefree")
    }

    pub fn equation(&self) -> &MultiPoly {
        &self.equation
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn irreducible(&self) -> Option<bool> {
        self.irreducible
    }

    pub fn contains(&self, p: &super::ProjPoint) -> bool {
        use num_traits::Zero;
        self.equation.eval(p.coords()).is_zero()
    }

    pub fn to_file(&self) -> CurveFile {
        CurveFile {
            equation: self.equation.to_string(),
            irreducible: self.irreducible,
        }
    }

    pub fn from_file(file: &CurveFile) -> Result<Self, GeomError> {
        Self::parse(&file.equation, file.irreducible)
    }
}

impl fmt::Display for PlaneCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = 0", self.equation)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_checks() {
        assert!(PlaneCurve::parse("x^2*z - y^3", Some(true)).is_ok());
        assert_eq!(
            PlaneCurve::parse("x^2", None).unwrap_err(),
            GeomError::NotSquarefree
        );
        // Reducible but squarefree is fine.
        assert!(PlaneCurve::parse("x*y", None).is_ok());
        assert_eq!(
            PlaneCurve::parse("x^2 - y", None).unwrap_err(),
            GeomError::NotHomogeneous
        );
    }

    #[test]
    fn equation_is_normalized() {
        let a = PlaneCurve::parse("-2*x + 4*z", None).unwrap();
        let b = PlaneCurve::parse("x - 2*z", None).unwrap();
        assert_eq!(a.equation(), b.equation());
        assert_eq!(a.equation().to_string(), "x - 2*z");
    }
}
