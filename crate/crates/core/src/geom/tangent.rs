//! Very tangent lines: lines meeting a curve in a single point with full
//! intersection multiplicity equal to the curve's degree.

use num_traits::Zero;

use crate::algebra::{gcd, rational_roots, MultiPoly, Rational};

use super::curve::{GeomError, PlaneCurve};
use super::point::ProjPoint;
use super::{apply_linear, basis_through, invert_mat3};

const ABST: [&str; 4] = ["a", "b", "s", "t"];

/// All rational lines through `through` whose single intersection point with
/// the curve has multiplicity deg(curve). Since `through` must lie on the
/// curve, the full-multiplicity point is `through` itself.
pub fn very_tangent_lines(
    curve: &PlaneCurve,
    through: &ProjPoint,
) -> Result<Vec<PlaneCurve>, GeomError> {
    if !curve.contains(through) {
        return Err(GeomError::PointNotOnCurve);
    }
    let d = curve.degree();
    if d == 1 {
        // Every other line through a point of a line is "very tangent";
        // there is no finite list to return.
        return Err(GeomError::Other(
            "every line through a point of a line is very tangent".to_string(),
        ));
    }

    // Move `through` to [0:0:1]; lines through it are a u + b v = 0, with
    // the pencil parametrized by [a : b].
    let to_point = basis_through(through);
    let from_point = invert_mat3(&to_point).expect("basis matrix is invertible");
    let moved = apply_linear(curve.equation(), &to_point);

    // Substitute the parametrized line point (b s, -a s, t) and collect the
    // coefficients of s^j t^(d-j): the line is very tangent at the point iff
    // all coefficients with j < d vanish.
    let mut bind = std::collections::BTreeMap::new();
    let a = MultiPoly::var(&ABST, "a").unwrap();
    let b = MultiPoly::var(&ABST, "b").unwrap();
    let s = MultiPoly::var(&ABST, "s").unwrap();
    let t = MultiPoly::var(&ABST, "t").unwrap();
    bind.insert("x".to_string(), b.mul(&s));
    bind.insert("y".to_string(), a.neg().mul(&s));
    bind.insert("z".to_string(), t.clone());
    let form = moved.substitute(&bind).expect("pencil substitution");

    // Coefficient of s^j t^(d-j) as a binary form in (a, b).
    let s_idx = 2;
    let t_idx = 3;
    let mut constraint = MultiPoly::zero(&ABST);
    for j in 0..d {
        let mut cj = MultiPoly::zero(&ABST);
        for (m, c) in form.terms() {
            if m.0[s_idx] == j && m.0[t_idx] == d - j {
                let mut e = m.0.clone();
                e[s_idx] = 0;
                e[t_idx] = 0;
                cj = cj.add(&MultiPoly::from_terms(&ABST, &[(&e, c.clone())]));
            }
        }
        if j == 0 {
            // This is the value at the point itself; zero since the point is
            // on the curve.
            debug_assert!(cj.is_zero());
            continue;
        }
        constraint = if constraint.is_zero() { cj } else { gcd(&constraint, &cj) };
        if constraint.is_constant() && !constraint.is_zero() {
            return Ok(Vec::new());
        }
    }

    if constraint.is_zero() {
        // Would mean the restriction to every line is a d-th power, i.e. the
        // curve is a d-fold line; squarefree inputs never get here.
        return Err(GeomError::Other("degenerate pencil constraint".to_string()));
    }
    // Rational roots [a0 : b0] of the gcd constraint.
    let mut dirs: Vec<(Rational, Rational)> = Vec::new();
    if constraint.eval_partial(1, &Rational::zero()).is_zero() {
        dirs.push((Rational::from_integer(1.into()), Rational::zero()));
    }
    let affine = constraint.eval_partial(1, &Rational::from_integer(1.into()));
    if let Some(coeffs) = affine.to_univariate(0) {
        let (roots, _) = rational_roots(&coeffs);
        for (a0, _) in roots {
            dirs.push((a0, Rational::from_integer(1.into())));
        }
    }

    let mut lines = Vec::new();
    for (a0, b0) in dirs {
        // Line a0 u + b0 v = 0 in moved coordinates, pulled back.
        let line_moved = MultiPoly::from_terms(
            &super::XYZ,
            &[(&[1, 0, 0], a0.clone()), (&[0, 1, 0], b0.clone())],
        );
        let line = apply_linear(&line_moved, &from_point);
        let line = PlaneCurve::new(line, Some(true)).expect("lines are squarefree");
        lines.push(line);
    }
    lines.sort_by(|a, b| a.equation().to_string().cmp(&b.equation().to_string()));
    Ok(lines)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::intersect::intersection_multiplicity;

    fn curve(s: &str) -> PlaneCurve {
        PlaneCurve::parse(s, None).unwrap()
    }

    #[test]
    fn cuspidal_cubic_has_the_vertical_tangent() {
        let c = curve("x^2*z - y^3");
        let p = ProjPoint::from_ints(0, 0, 1);
        let lines = very_tangent_lines(&c, &p).unwrap();
        assert_eq!(lines.len(), 1);
        assert_eq!(lines[0].equation().to_string(), "x");
        assert_eq!(
            intersection_multiplicity(&c, &lines[0], &p).unwrap(),
            3
        );
    }

    #[test]
    fn smooth_conic_tangent() {
        let c = curve("x*z + y^2");
        let p = ProjPoint::from_ints(0, 0, 1);
        let lines = very_tangent_lines(&c, &p).unwrap();
        assert_eq!(lines.len(), 1);
        assert_eq!(lines[0].equation().to_string(), "x");
        assert_eq!(intersection_multiplicity(&c, &lines[0], &p).unwrap(), 2);
    }

    #[test]
    fn special_quintic_has_none() {
        let q = curve("(xz+y^2)((xz+y^2)z + 2x^2y) - x^5");
        let p = ProjPoint::from_ints(0, 0, 1);
        assert_eq!(very_tangent_lines(&q, &p).unwrap(), Vec::new());
    }

    #[test]
    fn point_must_lie_on_curve() {
        let c = curve("x*z + y^2");
        assert_eq!(
            very_tangent_lines(&c, &ProjPoint::from_ints(0, 1, 0)).unwrap_err(),
            GeomError::PointNotOnCurve
        );
    }
}
