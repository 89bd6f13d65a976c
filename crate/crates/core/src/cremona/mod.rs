//! Plane rational self-maps: composition, degree and base-multiplicity
//! bookkeeping, pullback factorization, and de Jonquières constructors.

mod gallery;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use serde::{Deserialize, Serialize};

use crate::algebra::{gcd, parse_poly, rational_roots, MultiPoly, Rational};
use crate::cluster::{ClusterNode, ProximityTree};
use crate::geom::{self, poly_multiplicity_at, PlaneCurve, ProjPoint};
use crate::sequences::homaloidal_check;

pub use gallery::QuinticGallery;

const XYZ: [&str; 3] = ["x", "y", "z"];
const UV: [&str; 2] = ["u", "v"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CremonaError {
    /// All three components vanish identically after composition.
    DegenerateComposition,
    /// The image-degree formula yielded a non-positive value.
    Contracted,
    /// The residual of a pullback factorization has unexpected degree.
    UnaccountedFactor { residual_degree: u32, expected: u32 },
    /// Base-point search hit a non-rational point; the profile is partial.
    NonRationalBasePoint,
    ZeroComponent,
    NotHomogeneous,
    Other(String),
}

impl fmt::Display for CremonaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CremonaError::DegenerateComposition => {
                write!(f, "composition vanishes identically")
            }
            CremonaError::Contracted => write!(f, "curve is contracted by the map"),
            CremonaError::UnaccountedFactor { residual_degree, expected } => write!(
                f,
                "pullback residual has degree {residual_degree}, expected {expected}"
            ),
            CremonaError::NonRationalBasePoint => write!(f, "non-rational base point"),
            CremonaError::ZeroComponent => write!(f, "all components are zero"),
            CremonaError::NotHomogeneous => write!(f, "components are not homogeneous of equal degree"),
            CremonaError::Other(s) => write!(f, "{s}"),
        }
    }
}

impl std::error::Error for CremonaError {}

/// A rational self-map of the plane: three homogeneous components of equal
/// degree with constant gcd, jointly primitive and sign-normalized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSelfMap {
    components: [MultiPoly; 3],
    degree: u32,
}

/// Serialized form: `{"components": ["<poly>", "<poly>", "<poly>"]}`.
#[derive(Serialize, Deserialize)]
pub struct MapFile {
    pub components: [String; 3],
}

impl RationalSelfMap {
    pub fn new(raw: [MultiPoly; 3]) -> Result<Self, CremonaError> {
        if raw.iter().all(|c| c.is_zero()) {
            return Err(CremonaError::ZeroComponent);
        }
        // Remove the common polynomial factor.
        let mut g = MultiPoly::zero(&XYZ);
        for c in &raw {
            g = gcd(&g, c);
        }
        let mut comps = raw.map(|c| {
            if c.is_zero() {
                c
            } else {
                c.exact_divide(&g).expect("gcd divides")
            }
        });
        // Joint content and sign normalization.
        let mut content = Rational::zero();
        for c in &comps {
            content = crate::algebra::rational_gcd(&content, &c.content());
        }
        if !content.is_zero() {
            let inv = content.recip();
            for c in comps.iter_mut() {
                *c = c.scale(&inv);
            }
        }
        let lead_negative = comps
            .iter()
            .find(|c| !c.is_zero())
            .and_then(|c| c.leading().map(|(_, coeff)| coeff < &Rational::zero()))
            .unwrap_or(false);
        if lead_negative {
            for c in comps.iter_mut() {
                *c = c.neg();
            }
        }
        // Common degree check.
        let mut degree = None;
        for c in &comps {
            if c.is_zero() {
                continue;
            }
            match (degree, c.homogeneous_degree()) {
                (_, None) => return Err(CremonaError::NotHomogeneous),
                (None, Some(d)) => degree = Some(d),
                (Some(e), Some(d)) if d == e => {}
                _ => return Err(CremonaError::NotHomogeneous),
            }
        }
        Ok(RationalSelfMap {
            components: comps,
            degree: degree.unwrap(),
        })
    }

    pub fn parse(components: [&str; 3]) -> Result<Self, CremonaError> {
        let mut comps = Vec::new();
        for c in components {
            comps.push(parse_poly(c, &XYZ).map_err(|e| CremonaError::Other(e.to_string()))?);
        }
        Self::new([comps[0].clone(), comps[1].clone(), comps[2].clone()])
    }

    pub fn identity() -> Self {
        Self::parse(["x", "y", "z"]).unwrap()
    }

    pub fn components(&self) -> &[MultiPoly; 3] {
        &self.components
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Evaluates the map; `None` at a base point.
    pub fn apply(&self, p: &ProjPoint) -> Option<ProjPoint> {
        let v: Vec<Rational> = self
            .components
            .iter()
            .map(|c| c.eval(p.coords()))
            .collect();
        ProjPoint::new(v[0].clone(), v[1].clone(), v[2].clone()).ok()
    }

    /// Raw substitution of `g` into `self`, without gcd removal.
    fn substitute_raw(&self, g: &RationalSelfMap) -> [MultiPoly; 3] {
        let mut bind = BTreeMap::new();
        for (v, c) in XYZ.iter().zip(g.components.iter()) {
            bind.insert(v.to_string(), c.clone());
        }
        [
            self.components[0].substitute(&bind).expect("composition"),
            self.components[1].substitute(&bind).expect("composition"),
            self.components[2].substitute(&bind).expect("composition"),
        ]
    }

    /// Composition self ∘ g (apply `g` first), normalized by gcd removal.
    /// The degree satisfies deg ≤ deg(self)·deg(g), with equality exactly
    /// when no common base point eats a factor.
    pub fn compose(&self, g: &RationalSelfMap) -> Result<RationalSelfMap, CremonaError> {
        let raw = self.substitute_raw(g);
        if raw.iter().all(|c| c.is_zero()) {
            return Err(CremonaError::DegenerateComposition);
        }
        RationalSelfMap::new(raw)
    }

    /// True when self ∘ self is the identity up to a common factor.
    pub fn is_involution(&self) -> bool {
        let raw = self.substitute_raw(self);
        if raw.iter().all(|c| c.is_zero()) {
            return false;
        }
        let x = MultiPoly::var(&XYZ, "x").unwrap();
        let y = MultiPoly::var(&XYZ, "y").unwrap();
        let z = MultiPoly::var(&XYZ, "z").unwrap();
        // Proportionality to (x, y, z) via vanishing cross products.
        raw[0].mul(&y).sub(&raw[1].mul(&x)).is_zero()
            && raw[1].mul(&z).sub(&raw[2].mul(&y)).is_zero()
            && raw[0].mul(&z).sub(&raw[2].mul(&x)).is_zero()
    }

    pub fn to_file(&self) -> MapFile {
        MapFile {
            components: [
                self.components[0].to_string(),
                self.components[1].to_string(),
                self.components[2].to_string(),
            ],
        }
    }

    pub fn from_file(file: &MapFile) -> Result<Self, CremonaError> {
        Self::parse([
            file.components[0].as_str(),
            file.components[1].as_str(),
            file.components[2].as_str(),
        ])
    }
}

impl fmt::Display for RationalSelfMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{} : {} : {}]",
            self.components[0], self.components[1], self.components[2]
        )
    }
}

/// Base points of a map's linear system with their multiplicities.
#[derive(Clone, Debug)]
pub struct BaseMultiplicityProfile {
    pub tree: ProximityTree,
    pub mults: Vec<u32>,
    pub map_degree: u32,
    /// False when a non-rational base point was detected; the profile is
    /// then partial.
    pub complete: bool,
    pub warnings: Vec<String>,
}

impl BaseMultiplicityProfile {
    /// Noether's conditions Σm = 3d - 3 and Σm² = d² - 1.
    pub fn is_homaloidal(&self) -> bool {
        let mults: Vec<i64> = self.mults.iter().map(|&m| m as i64).collect();
        homaloidal_check(self.map_degree as i64, &mults)
    }
}

/// The two deterministic auxiliary combinations (1,1,1) and (1,2,3).
fn system_combos(comps: &[MultiPoly; 3]) -> [MultiPoly; 2] {
    let two = Rational::from_integer(2.into());
    let three = Rational::from_integer(3.into());
    [
        comps[0].add(&comps[1]).add(&comps[2]),
        comps[0].add(&comps[1].scale(&two)).add(&comps[2].scale(&three)),
    ]
}

/// Multiplicity of the linear system at the chart origin: min over the
/// three components and the two auxiliary combinations. Also reports
/// whether the combinations dropped below the component minimum.
fn system_multiplicity_local(comps: &[MultiPoly; 3]) -> (u32, bool) {
    let min3 = comps.iter().map(|c| c.order_at_origin()).min().unwrap();
    let combos = system_combos(comps);
    let min5 = combos
        .iter()
        .map(|c| if c.is_zero() { u32::MAX } else { c.order_at_origin() })
        .min()
        .unwrap()
        .min(min3);
    (min5, min5 < min3)
}

struct SystemResolver {
    nodes: Vec<ClusterNode>,
    mults: Vec<u32>,
    complete: bool,
    warnings: Vec<String>,
    fuel: i64,
}

impl SystemResolver {
    fn explore(
        &mut self,
        comps: &[MultiPoly; 3],
        exceptionals: &[(usize, MultiPoly)],
        parent: Option<usize>,
        proper: Option<ProjPoint>,
    ) {
        self.fuel -= 1;
        if self.fuel < 0 {
            self.warnings.push("base-point recursion limit".to_string());
            self.complete = false;
            return;
        }
        let (m, ambiguous) = system_multiplicity_local(comps);
        if m == 0 {
            return;
        }
        if ambiguous {
            self.warnings.push(format!(
                "MultiplicityAmbiguity at node {}: generic member drops below the component minimum",
                self.nodes.len()
            ));
        }
        let id = self.nodes.len();
        let origin = [Rational::zero(), Rational::zero()];
        let mut prox: std::collections::BTreeSet<usize> = Default::default();
        if let Some(p) = parent {
            prox.insert(p);
        }
        for (j, e) in exceptionals {
            if e.eval(&origin).is_zero() {
                prox.insert(*j);
            }
        }
        self.nodes.push(ClusterNode {
            id,
            parent,
            proper_point: proper,
            chart_coord: None,
            multiplicity: m,
            proximate_to: prox,
        });
        self.mults.push(m);

        // Blow up the system: divide every component by e^m.
        let u = MultiPoly::var(&UV, "u").unwrap();
        let v = MultiPoly::var(&UV, "v").unwrap();
        let chart = |f: &MultiPoly, a: bool| -> MultiPoly {
            let mut bind = BTreeMap::new();
            if a {
                bind.insert("v".to_string(), u.mul(&v));
            } else {
                bind.insert("u".to_string(), u.mul(&v));
            }
            f.substitute(&bind).expect("chart substitution")
        };
        let div = |f: &MultiPoly, a: bool| -> MultiPoly {
            let e = if a { &u } else { &v };
            chart(f, a).exact_divide(&e.pow(m)).expect("system divides by e^m")
        };
        let fa: [MultiPoly; 3] = [div(&comps[0], true), div(&comps[1], true), div(&comps[2], true)];
        let fb: [MultiPoly; 3] = [div(&comps[0], false), div(&comps[1], false), div(&comps[2], false)];

        let exc_a: Vec<(usize, MultiPoly)> = {
            let mut out: Vec<(usize, MultiPoly)> = exceptionals
                .iter()
                .map(|(j, e)| (*j, chart(e, true).divide_out_all(&u).0))
                .collect();
            out.push((id, u.clone()));
            out
        };
        let exc_b: Vec<(usize, MultiPoly)> = {
            let mut out: Vec<(usize, MultiPoly)> = exceptionals
                .iter()
                .map(|(j, e)| (*j, chart(e, false).divide_out_all(&v).0))
                .collect();
            out.push((id, v.clone()));
            out
        };

        // Common zeros on the new exceptional line, chart A first.
        let r: Vec<MultiPoly> = fa
            .iter()
            .map(|f| f.eval_partial(0, &Rational::zero()))
            .collect();
        let mut g = r[0].clone();
        for f in &r[1..] {
            g = gcd(&g, f);
        }
        if !g.is_constant() {
            let coeffs = g.to_univariate(1).expect("restriction is univariate");
            let (roots, leftover) = rational_roots(&coeffs);
            if leftover > 0 {
                self.complete = false;
                self.warnings
                    .push("NonRationalBasePoint: irrational infinitely near base point".to_string());
            }
            for (c, _) in roots {
                let moved: [MultiPoly; 3] = [
                    fa[0].translate(1, &c),
                    fa[1].translate(1, &c),
                    fa[2].translate(1, &c),
                ];
                let moved_exc: Vec<(usize, MultiPoly)> = exc_a
                    .iter()
                    .map(|(j, e)| (*j, e.translate(1, &c)))
                    .collect();
                self.explore(&moved, &moved_exc, Some(id), None);
            }
        }
        // Chart B origin.
        if fb.iter().all(|f| f.eval(&origin).is_zero()) {
            self.explore(&fb, &exc_b, Some(id), None);
        }
    }
}

/// Finds the rational base points of the map's linear system, including
/// infinitely near ones, with their multiplicities.
pub fn base_profile(map: &RationalSelfMap) -> Result<BaseMultiplicityProfile, CremonaError> {
    let comps = map.components();
    // Two generic members from the deterministic combination list locate
    // the proper base points.
    let combo_list: [((i64, i64, i64), (i64, i64, i64)); 3] =
        [((1, 1, 1), (1, 2, 3)), ((1, 2, 4), (1, 3, 9)), ((2, 3, 5), (1, 4, 2))];
    let mk = |w: (i64, i64, i64)| -> MultiPoly {
        comps[0]
            .scale(&Rational::from_integer(w.0.into()))
            .add(&comps[1].scale(&Rational::from_integer(w.1.into())))
            .add(&comps[2].scale(&Rational::from_integer(w.2.into())))
    };
    let mut candidates = None;
    for (wa, wb) in combo_list {
        let (ua, ub) = (mk(wa), mk(wb));
        if ua.is_zero() || ub.is_zero() || !gcd(&ua, &ub).is_constant() {
            continue;
        }
        match geom::common_rational_zeros(&ua, &ub) {
            Ok(pts) => {
                candidates = Some(pts);
                break;
            }
            Err(_) => continue,
        }
    }
    let candidates = candidates.ok_or_else(|| {
        CremonaError::Other("no coprime member pair found for base-point search".to_string())
    })?;

    let mut base_points: Vec<ProjPoint> = candidates
        .into_iter()
        .filter(|p| comps.iter().all(|c| c.eval(p.coords()).is_zero()))
        .collect();
    base_points.sort();

    let mut resolver = SystemResolver {
        nodes: Vec::new(),
        mults: Vec::new(),
        complete: true,
        warnings: Vec::new(),
        fuel: 16 * (map.degree() as i64 + 2),
    };
    for p in base_points {
        let local: [MultiPoly; 3] = [
            geom::localize_at(&comps[0], &p),
            geom::localize_at(&comps[1], &p),
            geom::localize_at(&comps[2], &p),
        ];
        resolver.explore(&local, &[], None, Some(p));
    }
    Ok(BaseMultiplicityProfile {
        tree: ProximityTree {
            nodes: resolver.nodes,
        },
        mults: resolver.mults,
        map_degree: map.degree(),
        complete: resolver.complete,
        warnings: resolver.warnings,
    })
}

/// deg f(C) = deg(f)·deg(C) - Σ m_p(f)·m_p(C); errors when the curve is
/// contracted (result <= 0).
pub fn image_degree(
    map_degree: i64,
    map_mults: &[i64],
    curve_degree: i64,
    curve_mults: &[i64],
) -> Result<i64, CremonaError> {
    assert_eq!(map_mults.len(), curve_mults.len(), "pairing length mismatch");
    let s: i64 = map_mults.iter().zip(curve_mults).map(|(a, b)| a * b).sum();
    let d = map_degree * curve_degree - s;
    if d <= 0 {
        return Err(CremonaError::Contracted);
    }
    Ok(d)
}

/// Result of factoring a pullback through known contracted curves.
#[derive(Clone, Debug)]
pub struct PullbackFactorization {
    /// (name, exponent) per supplied contracted curve.
    pub exponents: Vec<(String, u32)>,
    pub residual: MultiPoly,
    pub residual_degree: u32,
}

/// Factors target ∘ f by repeated exact division by the supplied contracted
/// curve equations. Degree bookkeeping always balances by construction;
/// `expected_residual_degree` (when given) asserts the residual is the
/// anticipated strict transform.
pub fn pullback_factorization(
    map: &RationalSelfMap,
    target: &PlaneCurve,
    contracted: &[(&str, &MultiPoly)],
    expected_residual_degree: Option<u32>,
) -> Result<PullbackFactorization, CremonaError> {
    let mut bind = BTreeMap::new();
    for (v, c) in XYZ.iter().zip(map.components().iter()) {
        bind.insert(v.to_string(), c.clone());
    }
    let total = target
        .equation()
        .substitute(&bind)
        .map_err(|e| CremonaError::Other(e.to_string()))?;
    if total.is_zero() {
        return Err(CremonaError::DegenerateComposition);
    }
    let mut residual = total;
    let mut exponents = Vec::new();
    for (name, eq) in contracted {
        let (rest, e) = residual.divide_out_all(eq);
        residual = rest;
        exponents.push((name.to_string(), e));
    }
    let residual_degree = residual.homogeneous_degree().unwrap_or(0);
    if let Some(expected) = expected_residual_degree {
        if residual_degree != expected {
            return Err(CremonaError::UnaccountedFactor {
                residual_degree,
                expected,
            });
        }
    }
    Ok(PullbackFactorization {
        exponents,
        residual,
        residual_degree,
    })
}

/// Projectivization of the affine map (x, y) -> (a x + b, c y + f(x)) with
/// respect to the line z = 0; preserves the pencil of lines through
/// [0 : 1 : 0].
pub fn jonquieres_from_affine(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    f_coeffs: &[Rational],
) -> Result<RationalSelfMap, CremonaError> {
    if a.is_zero() || c.is_zero() {
        return Err(CremonaError::Other("a and c must be nonzero".to_string()));
    }
    let mut coeffs = f_coeffs.to_vec();
    while coeffs.last().is_some_and(|x| x.is_zero()) {
        coeffs.pop();
    }
    let deg_f = coeffs.len().saturating_sub(1) as u32;
    let d = deg_f.max(1);
    let x = MultiPoly::var(&XYZ, "x").unwrap();
    let y = MultiPoly::var(&XYZ, "y").unwrap();
    let z = MultiPoly::var(&XYZ, "z").unwrap();
    // F(x, z) = z^d f(x/z).
    let mut fx = MultiPoly::zero(&XYZ);
    for (i, coef) in coeffs.iter().enumerate() {
        let term = x.pow(i as u32).mul(&z.pow(d - i as u32)).scale(coef);
        fx = fx.add(&term);
    }
    let c0 = x.scale(a).add(&z.scale(b)).mul(&z.pow(d - 1));
    let c1 = y.scale(c).mul(&z.pow(d - 1)).add(&fx);
    let c2 = z.pow(d);
    RationalSelfMap::new([c0, c1, c2])
}

/// True iff the strict preimage of the line under the de Jonquières map is a
/// line; must agree with the membership test [0:1:0] ∈ L.
pub fn line_preimage_is_line(j: &RationalSelfMap, line: &PlaneCurve) -> Result<bool, CremonaError> {
    if line.degree() != 1 {
        return Err(CremonaError::Other("not a line".to_string()));
    }
    let mut bind = BTreeMap::new();
    for (v, c) in XYZ.iter().zip(j.components().iter()) {
        bind.insert(v.to_string(), c.clone());
    }
    let pullback = line
        .equation()
        .substitute(&bind)
        .map_err(|e| CremonaError::Other(e.to_string()))?;
    if pullback.is_zero() {
        return Err(CremonaError::DegenerateComposition);
    }
    // The only curve contracted by an affine de Jonquières map is z = 0.
    let z = MultiPoly::var(&XYZ, "z").unwrap();
    let (strict, _) = pullback.divide_out_all(&z);
    // A constant residual means the line was z = 0 itself, whose strict
    // preimage is again that line.
    Ok(strict.is_constant() || strict.homogeneous_degree() == Some(1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quadratic_standard() -> RationalSelfMap {
        RationalSelfMap::parse(["y*z", "x*z", "x*y"]).unwrap()
    }

    #[test]
    fn compose_and_identity() {
        let id = RationalSelfMap::identity();
        let q = quadratic_standard();
        assert_eq!(id.compose(&q).unwrap(), q);
        assert_eq!(q.compose(&id).unwrap(), q);
        // The standard quadratic is an involution: q ∘ q = identity.
        assert_eq!(q.compose(&q).unwrap(), id);
        assert!(q.is_involution());
        assert!(!RationalSelfMap::parse(["x^2", "x*y", "x*z + y^2"])
            .unwrap()
            .is_involution());
    }

    #[test]
    fn theta2_is_an_involution() {
        let t2 = RationalSelfMap::parse(["x*z", "x^2 - y*z", "z^2"]).unwrap();
        assert!(t2.is_involution());
        assert_eq!(t2.compose(&t2).unwrap(), RationalSelfMap::identity());
    }

    #[test]
    fn base_profile_of_standard_quadratic() {
        let q = quadratic_standard();
        let profile = base_profile(&q).unwrap();
        assert!(profile.complete);
        assert_eq!(profile.mults, vec![1, 1, 1]);
        assert!(profile.is_homaloidal());
        // Three proper points.
        assert!(profile.tree.nodes.iter().all(|n| n.parent.is_none()));
    }

    #[test]
    fn base_profile_of_theta2() {
        // One proper base point with a chain of three.
        let t2 = RationalSelfMap::parse(["x*z", "x^2 - y*z", "z^2"]).unwrap();
        let profile = base_profile(&t2).unwrap();
        assert!(profile.complete);
        assert_eq!(profile.mults, vec![1, 1, 1]);
        assert!(profile.is_homaloidal());
        assert!(profile.tree.is_chain());
    }

    #[test]
    fn jonquieres_base_point_counts() {
        // Degree 1: the identity-like affine map.
        let j1 = jonquieres_from_affine(
            &crate::algebra::rat(1, 1),
            &Rational::zero(),
            &crate::algebra::rat(1, 1),
            &[],
        )
        .unwrap();
        assert_eq!(j1, RationalSelfMap::identity());

        // f = x²: degree 2 with 2·2 - 1 = 3 base points.
        let j2 = jonquieres_from_affine(
            &crate::algebra::rat(1, 1),
            &Rational::zero(),
            &crate::algebra::rat(1, 1),
            &[Rational::zero(), Rational::zero(), crate::algebra::rat(1, 1)],
        )
        .unwrap();
        assert_eq!(j2.degree(), 2);
        let p2 = base_profile(&j2).unwrap();
        assert_eq!(p2.mults.len(), 3);
        assert!(p2.is_homaloidal());

        // f = x³: degree 3 with 5 base points.
        let j3 = jonquieres_from_affine(
            &crate::algebra::rat(1, 1),
            &Rational::zero(),
            &crate::algebra::rat(1, 1),
            &[
                Rational::zero(),
                Rational::zero(),
                Rational::zero(),
                crate::algebra::rat(1, 1),
            ],
        )
        .unwrap();
        assert_eq!(j3.degree(), 3);
        let p3 = base_profile(&j3).unwrap();
        assert_eq!(p3.mults.len(), 5);
        assert!(p3.is_homaloidal());
    }

    #[test]
    fn image_degree_formula() {
        // Identity on any curve.
        assert_eq!(image_degree(1, &[], 4, &[]).unwrap(), 4);
        // A curve through all the base points of the standard quadratic
        // drops degree: conic through the three points -> 2·2 - 3 = 1.
        assert_eq!(image_degree(2, &[1, 1, 1], 2, &[1, 1, 1]).unwrap(), 1);
        // Contracted: the line through two base points maps to degree 0.
        assert_eq!(
            image_degree(2, &[1, 1, 1], 1, &[1, 1, 0]),
            Err(CremonaError::Contracted)
        );
    }

    #[test]
    fn pullback_of_line_under_theta2() {
        // z ∘ θ₂ = z², so the factorization is {z: 2} with residual 1.
        let t2 = RationalSelfMap::parse(["x*z", "x^2 - y*z", "z^2"]).unwrap();
        let line = PlaneCurve::parse("z", None).unwrap();
        let zpoly = parse_poly("z", &XYZ).unwrap();
        let f = pullback_factorization(&t2, &line, &[("z", &zpoly)], Some(0)).unwrap();
        assert_eq!(f.exponents, vec![("z".to_string(), 2)]);
        assert!(f.residual.is_constant());
    }

    #[test]
    fn line_preimage_matches_membership() {
        let j = jonquieres_from_affine(
            &crate::algebra::rat(1, 1),
            &Rational::zero(),
            &crate::algebra::rat(1, 1),
            &[Rational::zero(), Rational::zero(), crate::algebra::rat(1, 1)],
        )
        .unwrap();
        // Vertical lines x = λz pass through [0:1:0].
        for lam in [-2i64, 0, 1, 5] {
            let line = PlaneCurve::line(1, 0, -lam);
            assert!(line_preimage_is_line(&j, &line).unwrap());
        }
        // A generic line does not.
        let line = PlaneCurve::line(0, 1, 0);
        assert!(!line_preimage_is_line(&j, &line).unwrap());
        // The contracted line z = 0 maps to itself.
        let line = PlaneCurve::line(0, 0, 1);
        assert!(line_preimage_is_line(&j, &line).unwrap());
    }

    #[test]
    fn degree_multiplicativity_for_jonquieres_products() {
        // j2 ∘ a ∘ j1 with a affine moving the pencil point: degrees
        // multiply.
        let one = crate::algebra::rat(1, 1);
        let j_deg2 = jonquieres_from_affine(&one, &Rational::zero(), &one, &[
            Rational::zero(),
            Rational::zero(),
            one.clone(),
        ])
        .unwrap();
        let j_deg3 = jonquieres_from_affine(&one, &Rational::zero(), &one, &[
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            one.clone(),
        ])
        .unwrap();
        // a: swap x and y (affine, does not fix [0:1:0]).
        let a = RationalSelfMap::parse(["y", "x", "z"]).unwrap();
        for (j1, j2) in [(&j_deg2, &j_deg2), (&j_deg2, &j_deg3), (&j_deg3, &j_deg3)] {
            let composed = j2.compose(&a).unwrap().compose(j1).unwrap();
            assert_eq!(composed.degree(), j1.degree() * j2.degree());
        }
        // Without the twist the degrees collapse: j ∘ j⁻¹-like effects.
        let collapse = j_deg2.compose(&j_deg2).unwrap();
        assert!(collapse.degree() < 4);
    }
}
