//! Conics through point conditions, including infinitely near ones.
//!
//! Passing through a proper or infinitely near point is a linear condition
//! on the six conic coefficients. Infinitely near conditions are evaluated
//! by virtual transforms: translate the center to the origin, substitute the
//! blow-up chart, drop the (already conditioned) constant term, divide once
//! by the exceptional coordinate, and evaluate at the next point.

use num_traits::Zero;

use crate::algebra::{kernel_basis, MultiPoly, Rational};

use super::curve::{GeomError, PlaneCurve};
use super::intersect::localize;
use super::point::ProjPoint;
use super::XYZ;

const UV: [&str; 2] = ["u", "v"];

/// A step deeper into the infinitely near cluster: the next center on the
/// current exceptional line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChartStep {
    /// Point (0, c) of the chart substituting v := u·v (covers every
    /// direction except the v-axis).
    DirectionA(Rational),
    /// The v-axis direction: origin of the chart substituting u := u·v.
    DirectionB,
}

/// One linear condition: a proper point, or an infinitely near point given
/// by its proper origin and the chain of blow-up chart positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConicCondition {
    Point(ProjPoint),
    InfinitelyNear {
        origin: ProjPoint,
        steps: Vec<ChartStep>,
    },
}

#[derive(Clone, Debug)]
pub enum ConicThroughResult {
    Unique(PlaneCurve),
    /// Projective dimension of the family of conics through the conditions.
    Family { dim: usize },
}

/// Virtual transform through one chart step; `f` has already been
/// conditioned to vanish at the origin.
fn virtual_step(f: &MultiPoly, step: &ChartStep) -> (MultiPoly, Rational) {
    // Drop the constant term (zero modulo the previous condition), then
    // substitute the chart. Every surviving monomial u^i v^j gains
    // exceptional exponent i + j >= 1, so one exact division is possible.
    let c0 = f.eval(&[Rational::zero(), Rational::zero()]);
    let centered = f.sub(&MultiPoly::constant(&UV, c0));
    let u = MultiPoly::var(&UV, "u").unwrap();
    let v = MultiPoly::var(&UV, "v").unwrap();
    let mut bind = std::collections::BTreeMap::new();
    match step {
        ChartStep::DirectionA(c) => {
            // (u, v) -> (u, u v): exceptional coordinate u.
            bind.insert("v".to_string(), u.mul(&v));
            let total = centered.substitute(&bind).unwrap();
            let divided = total.exact_divide(&u).expect("virtual transform divides");
            // Evaluate at (0, c), then translate v by c for deeper steps.
            let value = divided.eval(&[Rational::zero(), c.clone()]);
            (divided.translate(1, c), value)
        }
        ChartStep::DirectionB => {
            // (u, v) -> (u v, v): exceptional coordinate v.
            bind.insert("u".to_string(), u.mul(&v));
            let total = centered.substitute(&bind).unwrap();
            let divided = total.exact_divide(&v).expect("virtual transform divides");
            let value = divided.eval(&[Rational::zero(), Rational::zero()]);
            (divided, value)
        }
    }
}

/// The row of condition values for one basis conic.
fn condition_value(basis: &MultiPoly, cond: &ConicCondition) -> Rational {
    match cond {
        ConicCondition::Point(p) => basis.eval(p.coords()),
        ConicCondition::InfinitelyNear { origin, steps } => {
            let mut f = localize(basis, origin);
            let mut value = f.eval(&[Rational::zero(), Rational::zero()]);
            for step in steps {
                let (next, v) = virtual_step(&f, step);
                f = next;
                value = v;
            }
            value
        }
    }
}

const BASIS: [[u32; 3]; 6] = [
    [2, 0, 0],
    [1, 1, 0],
    [0, 2, 0],
    [1, 0, 1],
    [0, 1, 1],
    [0, 0, 2],
];

/// The conic (or family of conics) through at most five conditions.
pub fn conic_through(conditions: &[ConicCondition]) -> Result<ConicThroughResult, GeomError> {
    if conditions.len() > 5 {
        return Err(GeomError::Other("more than five conditions".into()));
    }
    let basis_polys: Vec<MultiPoly> = BASIS
        .iter()
        .map(|e| MultiPoly::from_terms(&XYZ, &[(e, Rational::from_integer(1.into()))]))
        .collect();
    let matrix: Vec<Vec<Rational>> = conditions
        .iter()
        .map(|cond| {
            basis_polys
                .iter()
                .map(|b| condition_value(b, cond))
                .collect()
        })
        .collect();
    let kernel = kernel_basis(&matrix);
    match kernel.len() {
        0 => Err(GeomError::DegenerateConditions),
        1 => {
            let mut eq = MultiPoly::zero(&XYZ);
            for (coef, b) in kernel[0].iter().zip(&basis_polys) {
                eq = eq.add(&b.scale(coef));
            }
            match PlaneCurve::new(eq, None) {
                Ok(c) => Ok(ConicThroughResult::Unique(c)),
                Err(_) => Err(GeomError::DegenerateConditions),
            }
        }
        k => Ok(ConicThroughResult::Family { dim: k - 1 }),
    }
}
