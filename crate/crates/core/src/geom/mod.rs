//! Projective points, plane curves, parametrized rational curves, and local
//! intersection multiplicities at rational points.

mod conic;
mod curve;
mod intersect;
mod param;
mod point;
mod tangent;

pub use conic::{conic_through, ChartStep, ConicCondition, ConicThroughResult};
pub use curve::{CurveFile, GeomError, PlaneCurve};
pub use intersect::{
    intersection_multiplicity, multiplicity_at, poly_multiplicity_at, rational_intersections,
    IntersectionReport,
};
pub(crate) use intersect::common_rational_zeros;
pub use param::{image_on_curve_check, ParamCurve};
pub use point::ProjPoint;
pub use tangent::very_tangent_lines;

/// Affine localization of a homogeneous polynomial at a rational point:
/// dehomogenize at the point's leading coordinate and translate the point to
/// the origin of the (u, v) chart.
pub fn localize_at(f: &crate::algebra::MultiPoly, p: &ProjPoint) -> crate::algebra::MultiPoly {
    intersect::localize(f, p)
}

pub(crate) const XYZ: [&str; 3] = ["x", "y", "z"];
pub(crate) const ST: [&str; 2] = ["s", "t"];

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{MultiPoly, Rational};

/// Exact 3×3 matrix over the rationals, acting on column vectors.
pub type Mat3 = [[Rational; 3]; 3];

/// Composes a polynomial in (x, y, z) with the linear map given by `m`:
/// each variable is replaced by the corresponding row combination.
pub fn apply_linear(f: &MultiPoly, m: &Mat3) -> MultiPoly {
    let mut bind = BTreeMap::new();
    for (i, var) in XYZ.iter().enumerate() {
        let mut img = MultiPoly::zero(&XYZ);
        for (j, vj) in XYZ.iter().enumerate() {
            if !m[i][j].is_zero() {
                img = img.add(&MultiPoly::var(&XYZ, vj).unwrap().scale(&m[i][j]));
            }
        }
        bind.insert(var.to_string(), img);
    }
    f.substitute(&bind).expect("linear substitution")
}

/// Exact inverse of a 3×3 matrix via the adjugate; `None` when singular.
pub fn invert_mat3(m: &Mat3) -> Option<Mat3> {
    let det = |a: &Rational, b: &Rational, c: &Rational, d: &Rational| a * d - b * c;
    let cof = |r0: usize, r1: usize, c0: usize, c1: usize| {
        det(&m[r0][c0], &m[r0][c1], &m[r1][c0], &m[r1][c1])
    };
    let c00 = cof(1, 2, 1, 2);
    let c01 = -cof(1, 2, 0, 2);
    let c02 = cof(1, 2, 0, 1);
    let d = m[0][0].clone() * &c00 + m[0][1].clone() * &c01 + m[0][2].clone() * &c02;
    if d.is_zero() {
        return None;
    }
    let inv_d = d.recip();
    let adj = [
        [c00, -cof(0, 2, 1, 2), cof(0, 1, 1, 2)],
        [c01, cof(0, 2, 0, 2), -cof(0, 1, 0, 2)],
        [c02, -cof(0, 2, 0, 1), cof(0, 1, 0, 1)],
    ];
    Some(adj.map(|row| row.map(|e| e * &inv_d)))
}

/// Completes a point to a rational basis of the plane: returns an invertible
/// matrix whose last column is the point's coordinate vector.
pub(crate) fn basis_through(p: &ProjPoint) -> Mat3 {
    let lead = p.lead_index();
    let others: Vec<usize> = (0..3).filter(|&i| i != lead).collect();
    let mut m = [
        [Rational::zero(), Rational::zero(), Rational::zero()],
        [Rational::zero(), Rational::zero(), Rational::zero()],
        [Rational::zero(), Rational::zero(), Rational::zero()],
    ];
    for (col, &i) in others.iter().enumerate() {
        m[i][col] = Rational::from_integer(1.into());
    }
    for i in 0..3 {
        m[i][2] = p.coords()[i].clone();
    }
    m
}
