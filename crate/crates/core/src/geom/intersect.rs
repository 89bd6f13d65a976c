//! Local intersection multiplicities and rational intersection points.
//!
//! The local multiplicity is computed by Fulton's recursive algorithm, which
//! uses only field operations: repeatedly reduce the degree of one curve
//! along `v = 0`, splitting off factors of `v` whose contribution is an
//! order of vanishing.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{gcd, rational_roots, resultant, MultiPoly, Rational};

use super::curve::{GeomError, PlaneCurve};
use super::point::ProjPoint;
use super::XYZ;

const UV: [&str; 2] = ["u", "v"];

/// Dehomogenizes `f` at the point's leading coordinate and translates the
/// point to the origin of a two-variable affine chart.
pub(crate) fn localize(f: &MultiPoly, p: &ProjPoint) -> MultiPoly {
    let lead = p.lead_index();
    let others: Vec<usize> = (0..3).filter(|&i| i != lead).collect();
    let u = MultiPoly::var(&UV, "u").unwrap();
    let v = MultiPoly::var(&UV, "v").unwrap();
    let coords = p.coords();
    let mut bind = BTreeMap::new();
    bind.insert(XYZ[lead].to_string(), MultiPoly::one(&UV));
    bind.insert(
        XYZ[others[0]].to_string(),
        u.add(&MultiPoly::constant(&UV, coords[others[0]].clone())),
    );
    bind.insert(
        XYZ[others[1]].to_string(),
        v.add(&MultiPoly::constant(&UV, coords[others[1]].clone())),
    );
    f.substitute(&bind).expect("localization substitution")
}

/// Multiplicity of a curve at a point: the order of the lowest-degree term
/// of the local expansion. Zero exactly when the point is off the curve,
/// one at smooth points.
pub fn multiplicity_at(curve: &PlaneCurve, p: &ProjPoint) -> u32 {
    poly_multiplicity_at(curve.equation(), p)
}

/// Same as `multiplicity_at` but for an arbitrary (possibly reducible or
/// non-squarefree) polynomial; used for linear systems of maps.
pub fn poly_multiplicity_at(f: &MultiPoly, p: &ProjPoint) -> u32 {
    let local = localize(f, p);
    debug_assert!(!local.is_zero(), "multiplicity of the zero polynomial");
    // A nonzero constant term means the point is off the curve (order 0).
    local.order_at_origin()
}

/// Fulton's local intersection number at the origin of the (u, v) chart.
fn fulton_origin(f0: &MultiPoly, g0: &MultiPoly, fuel: &mut i64) -> Result<u32, GeomError> {
    let origin = [Rational::zero(), Rational::zero()];
    if !f0.eval(&origin).is_zero() || !g0.eval(&origin).is_zero() {
        return Ok(0);
    }
    let mut f = f0.clone();
    let mut g = g0.clone();
    let v_poly = MultiPoly::var(&UV, "v").unwrap();
    loop {
        *fuel -= 1;
        if *fuel < 0 {
            return Err(GeomError::InternalLimit);
        }
        let a = f.eval_partial(1, &Rational::zero());
        let b = g.eval_partial(1, &Rational::zero());
        if a.is_zero() && b.is_zero() {
            // v divides both: a local common component.
            return Err(GeomError::CommonComponent);
        }
        if a.is_zero() {
            // f = v·h, and I(v, g) is the order of g(u, 0) at u = 0.
            let h = f.exact_divide(&v_poly).expect("v divides f");
            let ord = b.order_at_origin();
            return Ok(ord + fulton_origin(&h, &g, fuel)?);
        }
        if b.is_zero() {
            let h = g.exact_divide(&v_poly).expect("v divides g");
            let ord = a.order_at_origin();
            return Ok(ord + fulton_origin(&f, &h, fuel)?);
        }
        let (r, s) = (a.degree_in(0), b.degree_in(0));
        if r > s {
            std::mem::swap(&mut f, &mut g);
            continue;
        }
        // Kill the leading u-term of g(u, 0): g -= (lc_b/lc_a) u^(s-r) f.
        let lc_a = a.coeffs_wrt(0)[r as usize].constant_value().unwrap();
        let lc_b = b.coeffs_wrt(0)[s as usize].constant_value().unwrap();
        let u_pow = MultiPoly::var(&UV, "u").unwrap().pow(s - r);
        g = g.sub(&f.mul(&u_pow).scale(&(lc_b / lc_a)));
    }
}

/// Local intersection multiplicity of two curves at a rational point.
pub fn intersection_multiplicity(
    a: &PlaneCurve,
    b: &PlaneCurve,
    p: &ProjPoint,
) -> Result<u32, GeomError> {
    if !gcd(a.equation(), b.equation()).is_constant() {
        return Err(GeomError::CommonComponent);
    }
    let fa = localize(a.equation(), p);
    let fb = localize(b.equation(), p);
    let mut fuel = 64 + 16 * (a.degree() as i64) * (b.degree() as i64);
    fulton_origin(&fa, &fb, &mut fuel)
}

/// All Q-rational intersection points with local multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionReport {
    pub points: Vec<(ProjPoint, u32)>,
    /// True when the multiplicities sum to deg(a)·deg(b), i.e. every
    /// intersection point is rational.
    pub complete: bool,
}

/// Rational roots of a univariate restriction, as full points.
fn y_roots_at(
    a: &MultiPoly,
    b: &MultiPoly,
    x0: &Rational,
    z0: &Rational,
) -> Vec<ProjPoint> {
    let ay = a.eval_partial(0, x0).eval_partial(2, z0);
    let by = b.eval_partial(0, x0).eval_partial(2, z0);
    let uni = if ay.is_zero() {
        by.clone()
    } else if by.is_zero() {
        ay.clone()
    } else {
        gcd(&ay, &by)
    };
    if uni.is_zero() || uni.is_constant() {
        return Vec::new();
    }
    let coeffs = uni.to_univariate(1).expect("restriction is univariate in y");
    let (roots, _) = rational_roots(&coeffs);
    roots
        .into_iter()
        .filter(|(y0, _)| {
            a.eval(&[x0.clone(), y0.clone(), z0.clone()]).is_zero()
                && b.eval(&[x0.clone(), y0.clone(), z0.clone()]).is_zero()
        })
        .map(|(y0, _)| ProjPoint::new(x0.clone(), y0, z0.clone()).unwrap())
        .collect()
}

/// Rational ratios `[x0 : z0]` among the roots of a binary form in (x, z).
fn binary_form_ratios(r: &MultiPoly) -> Vec<(Rational, Rational)> {
    let mut out = Vec::new();
    if r.is_zero() || r.is_constant() {
        return out;
    }
    // Ratio [1 : 0] when z divides the form.
    if r.eval_partial(2, &Rational::zero()).is_zero() {
        out.push((Rational::from_integer(1.into()), Rational::zero()));
    }
    let affine = r.eval_partial(2, &Rational::from_integer(1.into()));
    if let Some(coeffs) = affine.to_univariate(0) {
        let (roots, _) = rational_roots(&coeffs);
        for (x0, _) in roots {
            out.push((x0, Rational::from_integer(1.into())));
        }
    }
    out
}

/// All rational common zeros of two homogeneous polynomials with no common
/// factor (no squarefreeness needed).
pub(crate) fn common_rational_zeros(
    fa: &MultiPoly,
    fb: &MultiPoly,
) -> Result<Vec<ProjPoint>, GeomError> {
    if !gcd(fa, fb).is_constant() {
        return Err(GeomError::CommonComponent);
    }
    let mut points: Vec<ProjPoint> = Vec::new();
    // The unique point with x = z = 0 is handled separately; every other
    // point has a well-defined ratio [x : z].
    let ey = ProjPoint::from_ints(0, 1, 0);
    if fa.eval(ey.coords()).is_zero() && fb.eval(ey.coords()).is_zero() {
        points.push(ey);
    }
    let day = fa.degree_in(1);
    let dby = fb.degree_in(1);
    let ratios = if day > 0 && dby > 0 {
        let r = resultant(fa, fb, 1).map_err(|e| GeomError::Other(e.to_string()))?;
        binary_form_ratios(&r)
    } else if day == 0 {
        binary_form_ratios(fa)
    } else {
        binary_form_ratios(fb)
    };
    for (x0, z0) in ratios {
        points.extend(y_roots_at(fa, fb, &x0, &z0));
    }
    points.sort();
    points.dedup();
    Ok(points)
}

pub fn rational_intersections(
    a: &PlaneCurve,
    b: &PlaneCurve,
) -> Result<IntersectionReport, GeomError> {
    let points = common_rational_zeros(a.equation(), b.equation())?;
    let mut with_mult = Vec::new();
    let mut total: u64 = 0;
    for p in points {
        let m = intersection_multiplicity(a, b, &p)?;
        total += m as u64;
        with_mult.push((p, m));
    }
    let complete = total == (a.degree() as u64) * (b.degree() as u64);
    Ok(IntersectionReport {
        points: with_mult,
        complete,
    })
}
