//! The quintic map gallery: two quadratic maps, their degree-5 conjugate
//! involution ψ, the tangent-line family L_α of the conic xz + y² = 0, the
//! quintic family Q_α, and the linear normalizations between its members.
//!
//! ψ is rebuilt by composition at construction time and compared against a
//! stored expansion of its displayed formula; any mismatch fails the build
//! of the gallery.

use num_traits::Zero;

use crate::algebra::{parse_poly, rat, MultiPoly, Rational};
use crate::geom::{apply_linear, Mat3, ParamCurve, PlaneCurve, ProjPoint};

use super::{CremonaError, RationalSelfMap};

const XYZ: [&str; 3] = ["x", "y", "z"];
const ST: [&str; 2] = ["s", "t"];

/// Golden components of ψ, exactly as displayed.
const PSI_GOLDEN: [&str; 3] = [
    "x*(x*z + y^2)^2",
    "(x*z + y^2)*(x^3 - y*(x*z + y^2))",
    "(x*z + y^2)*(z*(x*z + y^2) + 2*x^2*y) - x^5",
];

#[derive(Clone, Debug)]
pub struct QuinticGallery {
    /// [x² : xy : xz + y²], an automorphism of the complement of x = 0.
    pub theta1: RationalSelfMap,
    /// Its inverse [x² : xy : xz - y²], verified by composition.
    pub theta1_inv: RationalSelfMap,
    /// [xz : x² - yz : z²], an involution fixing the complement of z = 0.
    pub theta2: RationalSelfMap,
    /// ψ = θ₁⁻¹ ∘ θ₂ ∘ θ₁, the degree-5 involution.
    pub psi: RationalSelfMap,
    /// The conic xz + y² = 0 contracted by ψ.
    pub conic: PlaneCurve,
    /// The special quintic Q = Q₀.
    pub quintic: PlaneCurve,
}

impl QuinticGallery {
    /// Builds the gallery and verifies its defining identities exactly.
    pub fn build() -> Result<Self, CremonaError> {
        let theta1 = RationalSelfMap::parse(["x^2", "x*y", "x*z + y^2"])?;
        let theta1_inv = RationalSelfMap::parse(["x^2", "x*y", "x*z - y^2"])?;
        let theta2 = RationalSelfMap::parse(["x*z", "x^2 - y*z", "z^2"])?;

        // The derived inverse must compose to the identity exactly.
        let id = RationalSelfMap::identity();
        if theta1_inv.compose(&theta1)? != id || theta1.compose(&theta1_inv)? != id {
            return Err(CremonaError::Other(
                "theta1 inverse fails composition to identity".to_string(),
            ));
        }

        let psi = theta1_inv.compose(&theta2.compose(&theta1)?)?;
        let golden = RationalSelfMap::parse(PSI_GOLDEN)?;
        if psi != golden {
            return Err(CremonaError::Other(format!(
                "composed psi {psi} does not match its displayed formula {golden}"
            )));
        }

        let conic = PlaneCurve::parse("x*z + y^2", Some(true))
            .map_err(|e| CremonaError::Other(e.to_string()))?;
        let quintic = PlaneCurve::parse(
            "(x*z + y^2)*((x*z + y^2)*z + 2*x^2*y) - x^5",
            Some(true),
        )
        .map_err(|e| CremonaError::Other(e.to_string()))?;
        Ok(QuinticGallery {
            theta1,
            theta1_inv,
            theta2,
            psi,
            conic,
            quintic,
        })
    }

    /// L_α: α²x + 2αy - z = 0, the tangent line to the conic at
    /// [1 : -α : -α²]; these are exactly the tangents avoiding [0:0:1].
    pub fn tangent_line(&self, alpha: &Rational) -> PlaneCurve {
        let a2 = alpha * alpha;
        let eq = MultiPoly::from_terms(
            &XYZ,
            &[
                (&[1, 0, 0], a2),
                (&[0, 1, 0], rat(2, 1) * alpha),
                (&[0, 0, 1], rat(-1, 1)),
            ],
        );
        PlaneCurve::new(eq, Some(true)).expect("lines are squarefree")
    }

    /// Parametrization [s : t : α²s + 2αt] of L_α.
    pub fn tangent_line_param(&self, alpha: &Rational) -> ParamCurve {
        let s = MultiPoly::var(&ST, "s").unwrap();
        let t = MultiPoly::var(&ST, "t").unwrap();
        let third = s.scale(&(alpha * alpha)).add(&t.scale(&(rat(2, 1) * alpha)));
        ParamCurve::new([s, t, third]).expect("line parametrization")
    }

    /// Q_α, the image of L_α under ψ:
    /// (xz+y²)((xz+y²)(α²x - 2αy - z) + 2x²(αx - y)) + x⁵ = 0.
    pub fn quintic_member(&self, alpha: &Rational) -> PlaneCurve {
        let k = parse_poly("x*z + y^2", &XYZ).unwrap();
        let x = MultiPoly::var(&XYZ, "x").unwrap();
        let y = MultiPoly::var(&XYZ, "y").unwrap();
        let z = MultiPoly::var(&XYZ, "z").unwrap();
        let a2 = alpha * alpha;
        let lin = x
            .scale(&a2)
            .sub(&y.scale(&(rat(2, 1) * alpha)))
            .sub(&z);
        let quad = x.mul(&x).scale(&rat(2, 1)).mul(&x.scale(alpha).sub(&y));
        let eq = k.mul(&k.mul(&lin).add(&quad)).add(&x.pow(5));
        PlaneCurve::new(eq, Some(true)).expect("quintic member is squarefree")
    }

    /// The linear map sending Q_α to Q₀ = Q:
    /// [x : y : z] -> [x : -αx + y : -α²x + 2αy + z].
    ///
    /// (The inverse member of the same family, with α negated, sends Q₀ to
    /// Q_α.)
    pub fn normalization_map(&self, alpha: &Rational) -> Mat3 {
        let zero = Rational::zero();
        let one = rat(1, 1);
        [
            [one.clone(), zero.clone(), zero.clone()],
            [-alpha.clone(), one.clone(), zero.clone()],
            [-(alpha * alpha), rat(2, 1) * alpha, one],
        ]
    }

    /// Exact polynomial identity check that `normalization_map(alpha)` sends
    /// Q_α to Q₀: the pullback of Q's equation along the map is proportional
    /// to Q_α's equation.
    pub fn normalization_sends_member_to_base(&self, alpha: &Rational) -> bool {
        let n = self.normalization_map(alpha);
        let pulled = apply_linear(self.quintic.equation(), &n);
        let member = self.quintic_member(alpha);
        pulled.primitive_part() == member.equation().primitive_part()
    }

    /// The unique proper singular point of every Q_α.
    pub fn singular_point(&self) -> ProjPoint {
        ProjPoint::from_ints(0, 0, 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cluster::resolve_point;
    use crate::cremona::base_profile;
    use crate::geom::image_on_curve_check;

    #[test]
    fn gallery_builds_and_psi_matches_display() {
        let g = QuinticGallery::build().unwrap();
        assert_eq!(g.psi.degree(), 5);
        assert!(g.psi.is_involution());
    }

    #[test]
    fn theta1_exchanges_conic_and_lz() {
        // θ₁ maps the conic xz + y² = 0 onto the line z = 0, and its
        // inverse maps that line back onto the conic (the conic is the
        // pullback of z = 0, i.e. z ∘ θ₁ = xz + y²).
        let g = QuinticGallery::build().unwrap();
        let lz = ParamCurve::line_through(
            &ProjPoint::from_ints(1, 0, 0),
            &ProjPoint::from_ints(0, 1, 0),
        )
        .unwrap();
        let lz_curve = PlaneCurve::parse("z", None).unwrap();
        let conic_param =
            ParamCurve::conic_through_point(&g.conic, &ProjPoint::from_ints(0, 0, 1)).unwrap();
        assert!(image_on_curve_check(g.theta1.components(), &conic_param, &lz_curve).unwrap());
        assert!(image_on_curve_check(g.theta1_inv.components(), &lz, &g.conic).unwrap());
        // The pullback identity itself.
        let mut bind = std::collections::BTreeMap::new();
        for (v, c) in ["x", "y", "z"].iter().zip(g.theta1.components()) {
            bind.insert(v.to_string(), c.clone());
        }
        let z = crate::algebra::parse_poly("z", &super::XYZ).unwrap();
        assert_eq!(
            z.substitute(&bind).unwrap(),
            g.conic.equation().clone()
        );
    }

    #[test]
    fn psi_maps_tangent_family_onto_quintic_family() {
        let g = QuinticGallery::build().unwrap();
        for a in [rat(0, 1), rat(1, 1), rat(-1, 1), rat(2, 1)] {
            let line = g.tangent_line_param(&a);
            let member = g.quintic_member(&a);
            assert!(
                image_on_curve_check(g.psi.components(), &line, &member).unwrap(),
                "psi(L_a) is not Q_a for alpha = {a}"
            );
        }
        // Q_0 = Q.
        assert_eq!(g.quintic_member(&rat(0, 1)).equation(), g.quintic.equation());
    }

    #[test]
    fn tangent_line_is_tangent_to_the_conic() {
        let g = QuinticGallery::build().unwrap();
        for a in [rat(1, 1), rat(-2, 1), rat(1, 2)] {
            let line = g.tangent_line(&a);
            let report = crate::geom::rational_intersections(&line, &g.conic).unwrap();
            assert_eq!(report.points.len(), 1, "tangent line meets conic once");
            assert_eq!(report.points[0].1, 2, "tangency has multiplicity 2");
        }
    }

    #[test]
    fn normalization_maps_members_to_base() {
        let g = QuinticGallery::build().unwrap();
        for a in [rat(0, 1), rat(1, 1), rat(-1, 1), rat(2, 1), rat(1, 2)] {
            assert!(
                g.normalization_sends_member_to_base(&a),
                "normalization fails for alpha = {a}"
            );
        }
    }

    #[test]
    fn psi_base_profile_is_six_double_points() {
        let g = QuinticGallery::build().unwrap();
        let profile = base_profile(&g.psi).unwrap();
        assert!(profile.complete);
        assert_eq!(profile.mults, vec![2, 2, 2, 2, 2, 2]);
        assert!(profile.is_homaloidal());
        assert!(profile.tree.is_chain());
        // The proper base point is the quintic's singular point.
        assert_eq!(
            profile.tree.nodes[0].proper_point,
            Some(g.singular_point())
        );
    }

    #[test]
    fn quintic_sequence_matches_base_cluster() {
        let g = QuinticGallery::build().unwrap();
        let res = resolve_point(&g.quintic, &g.singular_point()).unwrap();
        assert_eq!(res.sequence.entries, vec![2; 6]);
        assert_eq!(res.branches, 1);
    }

    #[test]
    fn pullback_of_quintic_factors_through_the_conic() {
        // ψ-pullback of Q divides by (xz + y²) exactly 12 times:
        // 5·5 = 1 + 2·12.
        let g = QuinticGallery::build().unwrap();
        let f = super::super::pullback_factorization(
            &g.psi,
            &g.quintic,
            &[("conic", g.conic.equation())],
            Some(1),
        )
        .unwrap();
        assert_eq!(f.exponents, vec![("conic".to_string(), 12)]);
        assert_eq!(f.residual_degree, 1);
        // The residual is the line z = 0 up to scalar.
        assert_eq!(f.residual.primitive_part().to_string(), "z");
    }

    #[test]
    fn psi_image_degree_bookkeeping() {
        // ψ⁻¹ = ψ on a curve sharing the six double base points:
        // 5·5 - 6·(2·2) = 1.
        assert_eq!(
            super::super::image_degree(5, &[2; 6], 5, &[2; 6]).unwrap(),
            1
        );
        // ψ on a line avoiding all base points has image degree 5.
        assert_eq!(super::super::image_degree(5, &[2; 6], 1, &[0; 6]).unwrap(), 5);
    }
}
