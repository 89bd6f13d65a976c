//! Parametrized rational curves: triples of binary forms in (s, t) with no
//! common factor. Built-in parametrizations exist for lines and smooth
//! conics through a rational point.

use std::collections::BTreeMap;


use crate::algebra::{gcd, MultiPoly, Rational};

use super::curve::{GeomError, PlaneCurve};
use super::point::ProjPoint;
use super::{basis_through, ST, XYZ};

/// A rational map P¹ → P² given by three binary forms of common degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamCurve {
    components: [MultiPoly; 3],
    degree: u32,
}

impl ParamCurve {
    pub fn new(components: [MultiPoly; 3]) -> Result<Self, GeomError> {
        let mut degree = None;
        for c in &components {
            if c.is_zero() {
                continue;
            }
            let d = c.homogeneous_degree().ok_or(GeomError::NotHomogeneous)?;
            match degree {
                None => degree = Some(d),
                Some(e) if e == d => {}
                _ => return Err(GeomError::Other("components of unequal degree".into())),
            }
        }
        let degree = degree.ok_or(GeomError::ZeroEquation)?;
        let g = gcd(&gcd(&components[0], &components[1]), &components[2]);
        if !g.is_constant() {
            // A common factor is a base point of the parametrization.
            return Err(GeomError::Other(
                "components share a common factor".into(),
            ));
        }
        Ok(ParamCurve { components, degree })
    }

    /// The line through two distinct points, as [s·p + t·q].
    pub fn line_through(p: &ProjPoint, q: &ProjPoint) -> Result<Self, GeomError> {
        if p == q {
            return Err(GeomError::Other("points must be distinct".into()));
        }
        let s = MultiPoly::var(&ST, "s").unwrap();
        let t = MultiPoly::var(&ST, "t").unwrap();
        let comp = |i: usize| {
            s.scale(&p.coords()[i]).add(&t.scale(&q.coords()[i]))
        };
        Self::new([comp(0), comp(1), comp(2)])
    }

    /// Parametrizes a smooth conic by the pencil of lines through one of its
    /// rational points.
    pub fn conic_through_point(conic: &PlaneCurve, base: &ProjPoint) -> Result<Self, GeomError> {
        if conic.degree() != 2 {
            return Err(GeomError::Other("not a conic".into()));
        }
        if !conic.contains(base) {
            return Err(GeomError::PointNotOnCurve);
        }
        // Complete the base point to a basis; q1, q2 span a line missing it.
        let m = basis_through(base);
        let col = |j: usize| {
            ProjPoint::new(m[0][j].clone(), m[1][j].clone(), m[2][j].clone()).unwrap()
        };
        let (q1, q2) = (col(0), col(1));

        // Points p + λ(s q1 + t q2) on the conic: the restriction is
        // c1(s,t)·λ + c2(s,t)·λ², so the second intersection has
        // λ = -c1/c2, giving components c2·p_i - c1·(s q1_i + t q2_i).
        let vars4: [&str; 3] = ["s", "t", "l"];
        let s = MultiPoly::var(&vars4, "s").unwrap();
        let t = MultiPoly::var(&vars4, "t").unwrap();
        let l = MultiPoly::var(&vars4, "l").unwrap();
        let dir = |i: usize| {
            s.scale(&q1.coords()[i]).add(&t.scale(&q2.coords()[i]))
        };
        let mut bind = BTreeMap::new();
        for (i, v) in XYZ.iter().enumerate() {
            let img = MultiPoly::constant(&vars4, base.coords()[i].clone())
                .add(&l.mul(&dir(i)));
            bind.insert(v.to_string(), img);
        }
        let restricted = conic.equation().substitute(&bind).expect("conic restriction");
        let coeffs = restricted.coeffs_wrt(2);
        debug_assert!(coeffs[0].is_zero(), "base point lies on the conic");
        let (c1, c2) = (coeffs[1].clone(), coeffs[2].clone());
        // Move c1, c2 into the (s, t) ring.
        let into_st = |p: &MultiPoly| -> MultiPoly {
            let mut bind = BTreeMap::new();
            bind.insert("s".to_string(), MultiPoly::var(&ST, "s").unwrap());
            bind.insert("t".to_string(), MultiPoly::var(&ST, "t").unwrap());
            p.substitute(&bind).expect("st move")
        };
        let (c1, c2) = (into_st(&c1), into_st(&c2));
        let s = MultiPoly::var(&ST, "s").unwrap();
        let t = MultiPoly::var(&ST, "t").unwrap();
        let comp = |i: usize| {
            let dir_i = s.scale(&q1.coords()[i]).add(&t.scale(&q2.coords()[i]));
            c2.scale(&base.coords()[i]).sub(&c1.mul(&dir_i))
        };
        let raw = [comp(0), comp(1), comp(2)];
        let mut g = gcd(&gcd(&raw[0], &raw[1]), &raw[2]);
        if g.is_zero() || g.is_constant() {
            g = MultiPoly::one(&ST);
        }
        let comps = [
            raw[0].exact_divide(&g).unwrap(),
            raw[1].exact_divide(&g).unwrap(),
            raw[2].exact_divide(&g).unwrap(),
        ];
        Self::new(comps)
    }

    pub fn components(&self) -> &[MultiPoly; 3] {
        &self.components
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn eval(&self, s0: &Rational, t0: &Rational) -> ProjPoint {
        let pt = [s0.clone(), t0.clone()];
        ProjPoint::new(
            self.components[0].eval(&pt),
            self.components[1].eval(&pt),
            self.components[2].eval(&pt),
        )
        .expect("parametrization has no base point")
    }

    /// True when the parametrized points all satisfy the curve equation.
    pub fn lies_on(&self, curve: &PlaneCurve) -> bool {
        compose_into_st(curve.equation(), &self.components).is_zero()
    }
}

/// Substitutes the three binary forms for (x, y, z).
pub(crate) fn compose_into_st(f: &MultiPoly, comps: &[MultiPoly; 3]) -> MultiPoly {
    let mut bind = BTreeMap::new();
    for (i, v) in XYZ.iter().enumerate() {
        bind.insert(v.to_string(), comps[i].clone());
    }
    f.substitute(&bind).expect("composition into (s,t)")
}

/// True iff `target(map(source(s,t)))` vanishes identically.
///
/// `map` is given by its three homogeneous components in (x, y, z).
pub fn image_on_curve_check(
    map: &[MultiPoly; 3],
    source: &ParamCurve,
    target: &PlaneCurve,
) -> Result<bool, GeomError> {
    let composed = [
        compose_into_st(&map[0], source.components()),
        compose_into_st(&map[1], source.components()),
        compose_into_st(&map[2], source.components()),
    ];
    if composed.iter().all(|c| c.is_zero()) {
        return Err(GeomError::MapUndefinedOnCurve);
    }
    Ok(compose_into_st(target.equation(), &composed).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, rat};

    #[test]
    fn line_parametrization() {
        let p = ProjPoint::from_ints(1, 0, 0);
        let q = ProjPoint::from_ints(0, 1, 2);
        let l = ParamCurve::line_through(&p, &q).unwrap();
        assert_eq!(l.degree(), 1);
        assert_eq!(l.eval(&rat(1, 1), &rat(0, 1)), p);
        assert_eq!(l.eval(&rat(0, 1), &rat(1, 1)), q);
        let line = PlaneCurve::parse("2*y - z", None).unwrap();
        assert!(l.lies_on(&line));
    }

    #[test]
    fn conic_parametrization_lies_on_conic() {
        let conic = PlaneCurve::parse("x*z + y^2", None).unwrap();
        let base = ProjPoint::from_ints(0, 0, 1);
        let par = ParamCurve::conic_through_point(&conic, &base).unwrap();
        assert!(par.lies_on(&conic));
        assert_eq!(par.degree(), 2);
    }

    #[test]
    fn identity_map_image_check() {
        let id = [
            parse_poly("x", &XYZ).unwrap(),
            parse_poly("y", &XYZ).unwrap(),
            parse_poly("z", &XYZ).unwrap(),
        ];
        let p = ProjPoint::from_ints(1, 0, 0);
        let q = ProjPoint::from_ints(0, 0, 1);
        let l = ParamCurve::line_through(&p, &q).unwrap();
        let same_line = PlaneCurve::parse("y", None).unwrap();
        let other_line = PlaneCurve::parse("x", None).unwrap();
        assert!(image_on_curve_check(&id, &l, &same_line).unwrap());
        assert!(!image_on_curve_check(&id, &l, &other_line).unwrap());
    }
}
